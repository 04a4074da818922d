//! Acceptance run: one PASS/FAIL line per criterion, with details below it.
//!
//! Criteria listed in `KNOWN_RED` are expected to fail because the stated
//! implication has counterexamples; they print FAIL but do not fail the run.

mod support;

use std::collections::BTreeMap;
use std::time::Instant;

use cozero::analysis::{chromatic_number, clique_number, ends, girth, is_outerplanar, is_planar, planarity};
use cozero::expr::parse_ring_expr;
use cozero::graph::{cozero_graph, cozero_graph_ideal, cozero_graph_ideal_direct, Graph};
use cozero::report::exit_code;
use cozero::ring::{
    ideal_generated, make_product_all, make_zn, quotient_ring, FiniteRing, Ideal,
};
use cozero::theorems::{checkers, run_checkers, Checker, FamilySpec, Instance, Status, SuiteReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use support::kuratowski::{brute_force_planar, mask_edges, nonplanar_table_7, random_graph};
use support::oracle;

const KNOWN_RED: &[usize] = &[5];

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

fn outcome(pass: bool, summary: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        summary: summary.into(),
        details: Vec::new(),
    }
}

fn spec(text: &str) -> Vec<Instance> {
    FamilySpec::parse(text).unwrap().expand().unwrap()
}

fn checker(id: &str) -> &'static Checker {
    checkers().iter().find(|c| c.id == id).unwrap()
}

fn run(ids: &[&str], instances: &[Instance]) -> SuiteReport {
    let selected: Vec<&Checker> = ids.iter().map(|id| checker(id)).collect();
    run_checkers(instances, &selected)
}

fn failure_lines(report: &SuiteReport) -> Vec<String> {
    report
        .failures()
        .map(|f| format!("{}  {}  {}", f.theorem_id, f.instance, f.note.as_deref().unwrap_or("")))
        .collect()
}

fn is_field(r: &FiniteRing) -> bool {
    r.units().len() + 1 == r.order()
}

fn diameter_within_three() -> Outcome {
    let instances = spec(cozero::theorems::DEFAULT_SPEC);
    let bad: Vec<String> = instances
        .par_iter()
        .filter_map(|inst| {
            let g = cozero_graph_ideal_direct(inst.ring(), &inst.ideal).unwrap();
            match oracle::diameter(g.vertex_count(), g.edges()) {
                Some(d) if d <= 3 && g.vertex_count() > 0 => None,
                d => Some(format!("{}: diameter {d:?}", inst.name)),
            }
        })
        .collect();
    let report = run(&["product_diameter"], &instances);
    let fails = report.failures().count();
    let mut o = outcome(
        bad.is_empty() && fails == 0,
        format!("{} instances, {} oracle violations, {fails} checker failures", instances.len(), bad.len()),
    );
    o.details = bad;
    o
}

/// Listed planar products: a field of order 2 or 3 times a field, Z4 or Z2[X]/(X²).
fn listed(a: &FiniteRing, b: &FiniteRing) -> bool {
    let small_field = |r: &FiniteRing| matches!(r.order(), 2 | 3) && is_field(r);
    // Every local ring of order 4 is GF(4), Z4 or Z2[X]/(X²).
    let partner = |r: &FiniteRing| is_field(r) || r.order() == 4;
    (small_field(a) && partner(b)) || (small_field(b) && partner(a))
}

fn two_factor_classification() -> Outcome {
    let instances = spec(
        "family = prod(local(16), local(16))\n\
         family = prod(fields(3), fields(25))\n\
         family = prod(fields(25), fields(3))\n\
         max_order = 256\nideals = product",
    );
    let planar: Vec<bool> = instances.par_iter().map(|i| i.planar().unwrap()).collect();
    let mut rings: BTreeMap<String, (bool, bool)> = BTreeMap::new();
    let mut per_instance = 0;
    for (inst, &p) in instances.iter().zip(&planar) {
        let f = &inst.entry.factors;
        let l = listed(&f[0], &f[1]);
        per_instance += usize::from(p != l);
        let e = rings.entry(inst.ring_expr()).or_insert((l, true));
        e.1 &= p;
    }
    let mismatches: Vec<String> = rings
        .iter()
        .filter(|(_, (l, all_planar))| l != all_planar)
        .map(|(r, (l, p))| format!("{r}: listed {l}, planar for every ideal {p}"))
        .collect();
    let report = run(&["planar_product_classification"], &instances);
    let fails = report.failures().count();
    let mut o = outcome(
        mismatches.is_empty() && fails == 0,
        format!(
            "{} rings, {} instances, {} ring mismatches, {fails} checker failures; \
             {per_instance} single ideals disagree with list membership (not gated)",
            rings.len(),
            instances.len(),
            mismatches.len()
        ),
    );
    o.details = mismatches;
    o.details.extend(failure_lines(&report));
    o
}

fn three_factor_classification() -> Outcome {
    let instances = spec("family = prod(local(4), local(4), local(4))\nideals = zero");
    let bad: Vec<String> = instances
        .iter()
        .filter(|inst| {
            let cube = inst.entry.factors.iter().all(|f| f.order() == 2);
            inst.planar().unwrap() != cube
        })
        .map(|inst| inst.name.clone())
        .collect();
    let fails = run(&["three_factor_classification"], &instances).failures().count();
    let mut o = outcome(
        bad.is_empty() && fails == 0 && !instances.is_empty(),
        format!("{} triples, {} mismatches, {fails} checker failures", instances.len(), bad.len()),
    );
    o.details = bad;
    o
}

fn spot_nonplanar() -> Outcome {
    let z2 = make_zn(2).unwrap();
    let z3 = make_zn(3).unwrap();
    let mut ok = true;
    let mut details = Vec::new();
    for factors in [vec![&z2, &z2, &z2, &z2], vec![&z2, &z2, &z3]] {
        let r = make_product_all(&factors).unwrap();
        let g = cozero_graph(&r).unwrap();
        let p = planarity(&g).unwrap();
        let witness = match &p.witness {
            Some(w) => w.validate(&g).map(|_| format!("{:?} witness validates", w.kind)).map_err(|e| e.0),
            None => Err("no witness".into()),
        };
        ok &= !p.planar && witness.is_ok();
        details.push(format!("{}: planar {}, {}", r.expr(), p.planar, witness.unwrap_or_else(|e| e)));
    }
    Outcome {
        pass: ok,
        summary: details.join("; "),
        details: Vec::new(),
    }
}

/// Rings of order `<= max` from the catalog and its products, each with all proper ideals.
fn small_family(max: usize) -> Vec<Instance> {
    let half = max / 2;
    let third = max / 4;
    spec(&format!(
        "family = Z(2..{max})\n\
         family = local({max})\n\
         family = prod(local({half}), local({half}))\n\
         family = prod(Z(2..{half}), Z(2..{half}))\n\
         family = prod(local({third}), local({third}), local({third}))\n\
         max_order = {max}\nideals = all"
    ))
}

fn ideal_bound() -> Outcome {
    let instances = small_family(48);
    let report = run(&["planar_ideal_bound"], &instances);
    // Confirm each failure on the direct graph, with the quotient graph from the oracle.
    let mut details = Vec::new();
    let mut confirmed = 0;
    for f in report.failures() {
        let w = f.witness.as_ref().unwrap();
        let inst = Instance::parse(&w.ring, &w.ideal).unwrap();
        let g = cozero_graph_ideal_direct(inst.ring(), &inst.ideal).unwrap();
        let q = quotient_ring(inst.ring(), &inst.ideal).unwrap();
        let qv = oracle::cozero_ideal(&q.ring, &Ideal::zero(&q.ring)).0.len();
        let real = is_planar(&g).unwrap() && inst.ideal.len() > 2 && qv > 1;
        confirmed += usize::from(real && w.replay().unwrap());
        details.push(format!("{}  |I| = {}, |V(G'(R/I))| = {qv}, confirmed {real}", f.instance, inst.ideal.len()));
    }
    let fails = report.failures().count();
    Outcome {
        pass: fails == 0,
        summary: format!("{} instances, {fails} counterexamples, {confirmed} confirmed independently", instances.len()),
        details,
    }
}

fn ara_bound() -> Outcome {
    let instances = spec("family = cat(Z2xy)\nfamily = cat(Z4x)\nideals = all");
    let report = run(&["ara_bound"], &instances);
    let counts = report.totals();
    let t = &counts[0];
    let details = report
        .results
        .iter()
        .map(|r| format!("{}  {:?}  {}", r.instance, r.status, r.note.as_deref().unwrap_or("")))
        .collect();
    Outcome {
        pass: t.fail == 0 && t.pass > 0,
        summary: format!("{} instances: {} pass, {} fail, {} skipped", instances.len(), t.pass, t.fail, t.skipped),
        details,
    }
}

fn random_large_instances(count: usize) -> Vec<(FiniteRing, Ideal)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    while out.len() < count {
        let expr = match rng.gen_range(0..3) {
            0 => format!("Z({})", rng.gen_range(49..=400)),
            1 => format!("prod(Z({}),Z({}))", rng.gen_range(4..=20), rng.gen_range(13..=20)),
            _ => {
                let local = ["cat(Z2xy)", "cat(Z4x)", "GF(8)", "Z(9)", "GF(2,[0,0,1])"];
                let f = local[rng.gen_range(0..local.len())];
                format!("prod({f},Z({}))", rng.gen_range(7..=30))
            }
        };
        let r = parse_ring_expr(&expr).unwrap().build().unwrap();
        if r.order() <= 48 {
            continue;
        }
        let gens: Vec<usize> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..r.order())).collect();
        let ideal = ideal_generated(&r, &gens);
        if ideal.is_proper() {
            out.push((r, ideal));
        }
    }
    out
}

fn blow_up_equivalence() -> Outcome {
    let mut pairs: Vec<(FiniteRing, Ideal)> = Vec::new();
    for inst in small_family(48) {
        pairs.push((inst.ring().clone(), inst.ideal.clone()));
    }
    let small = pairs.len();
    pairs.extend(random_large_instances(100));
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|(r, i)| {
            let fast = cozero_graph_ideal(r, i).unwrap();
            let direct = cozero_graph_ideal_direct(r, i).unwrap();
            let same = fast == direct && oracle::same_graph(&fast, &oracle::cozero_ideal(r, i));
            (!same).then(|| format!("{} with |I| = {}", r.expr(), i.len()))
        })
        .collect();
    let mut o = outcome(
        bad.is_empty(),
        format!("{small} instances with |R| <= 48 and 100 random larger ones, {} differences", bad.len()),
    );
    o.details = bad;
    o
}

fn planarity_tester() -> Outcome {
    let table = nonplanar_table_7();
    let (exhaustive_bad, bad_witness): (usize, usize) = (0u32..1 << 21)
        .into_par_iter()
        .map(|mask| {
            let g = Graph::from_edges(7, mask_edges(mask));
            let p = planarity(&g).unwrap();
            let wrong = usize::from(p.planar == table[mask as usize]);
            let witness = match (&p.witness, p.planar) {
                (Some(w), false) => usize::from(w.validate(&g).is_err()),
                (None, false) => 1,
                _ => 0,
            };
            (wrong, witness)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let graphs: Vec<(usize, Vec<(usize, usize)>)> = (0..10_000)
        .map(|_| {
            let n = rng.gen_range(8..=12);
            let p = rng.gen_range(0.15..0.6);
            (n, random_graph(&mut rng, n, p))
        })
        .collect();
    let (random_bad, random_witness): (usize, usize) = graphs
        .par_iter()
        .map(|(n, edges)| {
            let g = Graph::from_edges(*n, edges.clone());
            let p = planarity(&g).unwrap();
            let wrong = usize::from(p.planar != brute_force_planar(*n, edges));
            let witness = match (&p.witness, p.planar) {
                (Some(w), false) => usize::from(w.validate(&g).is_err()),
                (None, false) => 1,
                _ => 0,
            };
            (wrong, witness)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    outcome(
        exhaustive_bad + bad_witness + random_bad + random_witness == 0,
        format!(
            "all 2^21 graphs on 7 vertices: {exhaustive_bad} disagreements, {bad_witness} bad witnesses; \
             10000 random graphs on 8..12 vertices: {random_bad} disagreements, {random_witness} bad witnesses"
        ),
    )
}

fn fixed_points() -> Outcome {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut check = |what: &str, ok: bool| checks.push((what.to_string(), ok));

    let z6 = make_zn(6).unwrap();
    let g = cozero_graph(&z6).unwrap();
    check("Z6 matches the definition", oracle::same_graph(&g, &oracle::cozero_ideal(&z6, &Ideal::zero(&z6))));
    let path = g.labels() == ["2", "3", "4"] && g.edges() == [(0, 1), (1, 2)];
    check("Z6 is the path 2-3-4", path);
    check("Z6 diameter 2", oracle::diameter(3, g.edges()) == Some(2));
    check("Z6 girth inf", girth(&g).is_none());
    let e: Vec<&str> = ends(&g).iter().map(|&v| g.label(v)).collect();
    check("Z6 ends {2,4}", e == ["2", "4"]);

    let z2 = make_zn(2).unwrap();
    let cube = make_product_all(&[&z2, &z2, &z2]).unwrap();
    let g = cozero_graph(&cube).unwrap();
    check(
        "Z2^3 matches the definition",
        oracle::same_graph(&g, &oracle::cozero_ideal(&cube, &Ideal::zero(&cube))),
    );
    check("Z2^3 has 6 vertices, 9 edges", g.vertex_count() == 6 && g.edge_count() == 9);
    check("Z2^3 girth 3", girth(&g) == Some(3) && oracle::girth(6, g.edges()) == Some(3));
    check("Z2^3 clique 3", clique_number(&g).unwrap() == 3 && oracle::clique_number(6, g.edges()) == 3);
    check(
        "Z2^3 chromatic 3",
        chromatic_number(&g).unwrap() == 3 && oracle::chromatic_number(6, g.edges()) == 3,
    );
    check("Z2^3 planar", is_planar(&g).unwrap() && brute_force_planar(6, g.edges()));
    check("Z2^3 not outerplanar", !is_outerplanar(&g).unwrap());

    let z12 = make_zn(12).unwrap();
    let i = ideal_generated(&z12, &[4]);
    let g = cozero_graph_ideal(&z12, &i).unwrap();
    check("Z12 mod (4) matches the definition", oracle::same_graph(&g, &oracle::cozero_ideal(&z12, &i)));
    check("Z12 mod (4) is {2,6,10} without edges", g.labels() == ["2", "6", "10"] && g.edge_count() == 0);

    let failed: Vec<String> = checks.iter().filter(|c| !c.1).map(|c| c.0.clone()).collect();
    let mut o = outcome(failed.is_empty(), format!("{} checks, {} failed", checks.len(), failed.len()));
    o.details = failed;
    o
}

fn identity_law() -> Outcome {
    let mut rings: Vec<FiniteRing> = Vec::new();
    for inst in spec(
        "family = Z(2..64)\nfamily = local(64)\nfamily = prod(local(32), local(32))\n\
         family = prod(Z(2..32), Z(2..32))\nfamily = prod(local(16), local(16), local(16))\n\
         family = cat(Z3xy)\nfamily = cat(F4uv)\nmax_order = 64\nideals = zero",
    ) {
        rings.push(inst.ring().clone());
    }
    let bad: Vec<String> = rings
        .par_iter()
        .filter(|r| cozero_graph(r).unwrap() != cozero_graph_ideal(r, &Ideal::zero(r)).unwrap())
        .map(|r| r.expr().to_string())
        .collect();
    let mut o = outcome(bad.is_empty(), format!("{} rings of order <= 64, {} differences", rings.len(), bad.len()));
    o.details = bad;
    o
}

fn audit_report() -> Outcome {
    let ids = ["girth_totally_disconnected", "unit_orbit_nonplanar"];
    let mut instances = spec(cozero::theorems::DEFAULT_SPEC);
    instances.extend(spec("family = local(64)\nfamily = cat(Z3xy)\nfamily = cat(F4uv)\nideals = all"));
    let report = run(&ids, &instances);
    let totals = report.totals();
    let audited = report.results.iter().all(|r| r.audit);
    let gated = exit_code(&report, false);
    let mut summary = format!("{} instances", instances.len());
    for t in &totals {
        summary += &format!("; {}: {} pass, {} fail, {} skipped", t.theorem_id, t.pass, t.fail, t.skipped);
    }
    summary += &format!("; exit code without --audit {gated}");
    let mut details = vec!["hypothesis true, conclusion false:".to_string()];
    details.extend(failure_lines(&report));
    let verdicts = report.results.iter().filter(|r| r.status != Status::Skipped).count();
    Outcome {
        pass: audited && gated == 0 && verdicts > 0 && totals.len() == ids.len(),
        summary,
        details,
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("component-proper products are connected with diameter <= 3", diameter_within_three),
        ("planar two-factor products are exactly the listed rings", two_factor_classification),
        ("planar three-factor products are exactly Z2^3", three_factor_classification),
        ("G'(Z2^4) and G'(Z2xZ2xZ3) are nonplanar with witnesses", spot_nonplanar),
        ("planar G''_I(R) forces |I| <= 2 or |V(G'(R/I))| <= 1", ideal_bound),
        ("planar G''_I(R) forces ara(m/I) <= 4 on Z2xy and Z4x", ara_bound),
        ("blow-up construction equals the definition", blow_up_equivalence),
        ("planarity tester agrees with brute force", planarity_tester),
        ("fixed points", fixed_points),
        ("G'(R) equals G''_0(R)", identity_law),
        ("audit checkers report without gating", audit_report),
    ];
    let mut unexpected = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let n = k + 1;
        let start = Instant::now();
        let o = f();
        let secs = start.elapsed().as_secs_f64();
        let tag = match (o.pass, KNOWN_RED.contains(&n)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (expected)",
            (false, false) => "FAIL",
        };
        println!("{tag} {n:>2}  {name}: {} [{secs:.1}s]", o.summary);
        for d in &o.details {
            println!("        {d}");
        }
        if !o.pass && !KNOWN_RED.contains(&n) {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
