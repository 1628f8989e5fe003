//! Exact-arithmetic toolkit for centrally symmetric polytopes and the
//! antipodal-quotient triangulations of real projective spaces they carry.
//!
//! The crate is `no_std`-compatible (with `alloc`); file IO, the CLI and
//! wall-clock time limits live in the companion `rptri-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod complex;
pub mod constructions;
pub mod formats;
pub mod graphs;
pub mod homology;
pub mod hull;
pub mod perm;
pub mod ratmath;
pub mod search;

mod fmath;
