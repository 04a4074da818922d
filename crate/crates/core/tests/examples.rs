macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(rings, "rings.rs");
example!(ideals, "ideals.rs");
example!(graph_export, "graph_export.rs");
example!(invariants, "invariants.rs");
example!(planarity_witness, "planarity_witness.rs");
example!(verify_family, "verify_family.rs");
example!(sweep, "sweep.rs");

#[test]
fn examples_run() {
    rings::run().expect("rings");
    ideals::run().expect("ideals");
    graph_export::run().expect("graph_export");
    invariants::run().expect("invariants");
    planarity_witness::run().expect("planarity_witness");
    verify_family::run().expect("verify_family");
    sweep::run().expect("sweep");
}
