// Exact invariants of Γ''_I(R).

use cozero::analysis::{invariants, max_clique, optimal_coloring};
use cozero::graph::cozero_graph_ideal;
use cozero::report::{cmd_analyze, GraphKind};
use cozero::ring::{ideal_generated, make_zn};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", cmd_analyze("prod(Z(2),Z(2),Z(2))", "zero", GraphKind::CozeroIdeal, false)?);
    println!();

    let r = make_zn(36)?;
    let i = ideal_generated(&r, &[18]);
    let g = cozero_graph_ideal(&r, &i)?;
    let inv = invariants(&g);
    println!(
        "Z36 mod (18): {} vertices, {} edges, diameter {:?}, girth {:?}",
        inv.vertices, inv.edges, inv.diameter, inv.girth
    );

    let clique: Vec<&str> = max_clique(&g)?.iter().map(|&v| g.label(v)).collect();
    let colours = optimal_coloring(&g)?;
    println!("max clique {clique:?}, {} colours", colours.iter().max().map_or(0, |c| c + 1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
