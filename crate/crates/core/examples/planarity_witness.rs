// Planarity verdicts with Kuratowski subdivisions as certificates.

use cozero::analysis::{is_outerplanar, planarity};
use cozero::graph::cozero_graph;
use cozero::ring::{make_product_all, make_zn};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = make_zn(2)?;
    let z3 = make_zn(3)?;
    for factors in [vec![&z2, &z2, &z2], vec![&z2, &z2, &z2, &z2], vec![&z2, &z2, &z3]] {
        let r = make_product_all(&factors)?;
        let g = cozero_graph(&r)?;
        let p = planarity(&g)?;
        println!("{}: planar {}, outerplanar {}", r.expr(), p.planar, is_outerplanar(&g)?);
        if let Some(w) = p.witness {
            w.validate(&g)?;
            let (branch, paths) = w.labelled(&g);
            println!("  {:?} on {:?}", w.kind, branch);
            for path in paths {
                println!("    {}", path.join(" - "));
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
