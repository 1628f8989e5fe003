pub mod analyze;
pub mod complexops;
pub mod pipeline;
pub mod verify_rp5;
pub mod verify_rp6;

use rptri_core::homology::HomologySummary;

/// Renders integer homology as `Z^b (+ Z/d ...)` per dimension.
pub fn render_homology(h: &HomologySummary) -> String {
    let dims: Vec<String> = h
        .betti
        .iter()
        .zip(&h.torsion)
        .map(|(b, t)| {
            let mut parts: Vec<String> = Vec::new();
            match b {
                0 => {}
                1 => parts.push("Z".to_string()),
                n => parts.push(format!("Z^{n}")),
            }
            for d in t {
                parts.push(format!("Z/{d}"));
            }
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join("+")
            }
        })
        .collect();
    format!("({})", dims.join(", "))
}
