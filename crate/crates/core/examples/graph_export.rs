// DOT and JSON export of cozero-divisor graphs.
//
// `cargo run --example graph_export | dot -Tsvg > g.svg` draws the first graph.

use cozero::report::{cmd_graph, graph_from_json, GraphFormat, GraphKind};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", cmd_graph("Z(6)", "zero", GraphKind::Cozero, GraphFormat::Dot)?);

    let json = cmd_graph("Z(12)", "gen(4)", GraphKind::CozeroIdeal, GraphFormat::Json)?;
    eprint!("{json}");
    let g = graph_from_json(&json)?;
    assert_eq!(g.labels(), ["2", "6", "10"]);
    assert_eq!(g.edge_count(), 0);

    // The ideal-based zero-divisor graph of the same pair, for comparison.
    eprint!("{}", cmd_graph("Z(12)", "gen(4)", GraphKind::ZeroDivisorIdeal, GraphFormat::Dot)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
