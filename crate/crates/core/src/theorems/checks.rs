use crate::analysis::{chromatic, clique_number, diameter, girth, is_connected, is_outerplanar};
use crate::bitset::BitSet;
use crate::graph::{cozero_graph, Graph, GraphError};
use crate::ring::{
    ideal_generated, is_local, jacobson_radical, make_quotient_poly, make_zn, min_generators,
    quotient_ring, ring_iso, FiniteRing, Ideal, RingError, MAX_GENERATOR_CAP,
};

use super::family::Instance;
use super::Claim;

pub(crate) enum Outcome {
    Pass(Option<String>),
    Fail { claim: Claim, note: Option<String> },
    Skip(String),
    NotApplicable,
}

use Outcome::{NotApplicable, Pass, Skip};

fn vacuous() -> Outcome {
    Pass(Some("vacuous".into()))
}

fn fail(claim: Claim, note: impl Into<Option<String>>) -> Outcome {
    Outcome::Fail {
        claim,
        note: note.into(),
    }
}

type Run = fn(&Instance) -> Result<Outcome, GraphError>;

pub struct Checker {
    pub id: &'static str,
    pub audit: bool,
    /// Only runs when a spec asks for the corrupt fixture.
    pub fixture: bool,
    pub statement: &'static str,
    run: Run,
}

impl Checker {
    pub(crate) fn run(&self, inst: &Instance) -> Outcome {
        (self.run)(inst).unwrap_or_else(|e| Skip(format!("resource limit: {e}")))
    }
}

const fn gating(id: &'static str, statement: &'static str, run: Run) -> Checker {
    Checker {
        id,
        audit: false,
        fixture: false,
        statement,
        run,
    }
}

const fn audit(id: &'static str, statement: &'static str, run: Run) -> Checker {
    Checker {
        id,
        audit: true,
        fixture: false,
        statement,
        run,
    }
}

static CHECKERS: [Checker; 21] = [
    gating(
        "adjacency_lift",
        "an edge x_i ~ y_i of a component graph makes every pair of tuples with those components adjacent",
        adjacency_lift,
    ),
    gating(
        "fixed_component",
        "(x,y1) ~ (x,y2) iff y1 ~ y2 in the second component graph, and symmetrically",
        fixed_component,
    ),
    gating(
        "clique_chromatic_bound",
        "clique and chromatic numbers of the product graph are at least those of each component graph",
        clique_chromatic_bound,
    ),
    gating(
        "mixed_unit_adjacency",
        "(x,b) ~ (a,y) for x,y outside and a,b inside the ideals; (x,y) ~ (a,b+u) and (a+u,b) for units u",
        mixed_unit_adjacency,
    ),
    audit(
        "girth_totally_disconnected",
        "a totally disconnected component graph forces girth 3",
        girth_totally_disconnected,
    ),
    audit(
        "girth_at_most_four",
        "girth is at most 4 when each R_i minus I_i has two or more elements",
        girth_at_most_four,
    ),
    gating(
        "product_diameter",
        "the graph of a two-factor product is connected with diameter at most 3",
        product_diameter,
    ),
    gating(
        "planarity_transfer",
        "planar or outerplanar G'(R) passes to every G''_I(R); a nonplanar component graph makes the product nonplanar",
        planarity_transfer,
    ),
    gating(
        "planar_ideal_bound",
        "planar G''_I(R) forces |I| <= 2 or at most one vertex in G'(R/I)",
        planar_ideal_bound,
    ),
    audit(
        "no_ends_outside_radical",
        "for I inside J(R), the subgraph on vertices outside J(R) has no ends",
        no_ends_outside_radical,
    ),
    gating(
        "nonplanar_many_factors",
        "four or more local factors give a nonplanar graph",
        nonplanar_many_factors,
    ),
    gating(
        "nonplanar_three_factors",
        "three local factors, one with at least three elements, give a nonplanar graph",
        nonplanar_three_factors,
    ),
    audit(
        "nonplanar_large_factors",
        "two local factors each with at least four elements give a nonplanar graph",
        nonplanar_large_factors,
    ),
    gating(
        "nonplanar_multi_vertex_factor",
        "two local factors, one with a component graph of two or more vertices, give a nonplanar graph",
        nonplanar_multi_vertex_factor,
    ),
    gating(
        "nonplanar_adjacent_factor",
        "two local factors, one with an edge in its component graph, give a nonplanar graph",
        nonplanar_adjacent_factor,
    ),
    gating(
        "three_factor_classification",
        "three local factors: planar exactly for Z2 x Z2 x Z2",
        three_factor_classification,
    ),
    gating(
        "planar_product_classification",
        "two local factors: G''_I planar for every component-proper I exactly for the listed rings",
        planar_product_classification,
    ),
    gating(
        "principal_maximal_planar",
        "a local ring with principal maximal ideal has planar G''_I(R)",
        principal_maximal_planar,
    ),
    gating(
        "ara_bound",
        "local R with non-principal m: planar G''_I(R) forces ara(m/I) <= 4",
        ara_bound,
    ),
    audit(
        "unit_orbit_nonplanar",
        "local R where m/I has minimal generators x+I, y+I with |U(R)x|, |U(R)y| >= 3 gives a nonplanar graph",
        unit_orbit_nonplanar,
    ),
    Checker {
        id: "corrupt_fixture",
        audit: false,
        fixture: true,
        statement: "deliberately false: every graph is edgeless",
        run: corrupt_fixture,
    },
];

/// Every checker, in report order.
pub fn checkers() -> &'static [Checker] {
    &CHECKERS
}

fn label(inst: &Instance, x: usize) -> String {
    inst.ring().label(x).to_string()
}

/// Arity gate plus the proper-components precondition.
fn product_of(inst: &Instance, arity: impl Fn(usize) -> bool) -> Option<Outcome> {
    if !inst.is_product() || !arity(inst.parts.len()) {
        return Some(NotApplicable);
    }
    if !inst.component_proper() {
        return Some(Skip("component ideals must all be proper".into()));
    }
    None
}

/// The first factor that is not local, as a skip.
fn require_local_factors(inst: &Instance) -> Result<Option<Outcome>, GraphError> {
    for f in &inst.entry.factors {
        if is_local(f)?.is_none() {
            return Ok(Some(Skip(format!("factor {} is not local", f.expr()))));
        }
    }
    Ok(None)
}

/// `buckets[i][v]`: elements whose `i`-th component is `v`.
fn component_buckets(inst: &Instance) -> Vec<Vec<Vec<usize>>> {
    let r = inst.ring();
    let orders = r.factor_orders();
    let mut out: Vec<Vec<Vec<usize>>> = orders.iter().map(|&o| vec![Vec::new(); o]).collect();
    for x in r.elements() {
        for (i, c) in r.components(x).into_iter().enumerate() {
            out[i][c].push(x);
        }
    }
    out
}

fn adjacency_lift(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n >= 2) {
        return Ok(o);
    }
    let g = inst.graph()?;
    let buckets = component_buckets(inst);
    let mut edges = 0;
    for i in 0..inst.parts.len() {
        let gi = inst.component_graph(i)?;
        for &(a, b) in gi.edges() {
            edges += 1;
            let (xi, yi) = (gi.element(a), gi.element(b));
            for &u in &buckets[i][xi] {
                for &v in &buckets[i][yi] {
                    if !g.adjacent_elements(u, v) {
                        let note = format!("component {} edge {} ~ {}", i + 1, gi.label(a), gi.label(b));
                        return Ok(fail(
                            Claim::Adjacent {
                                x: label(inst, u),
                                y: label(inst, v),
                            },
                            note,
                        ));
                    }
                }
            }
        }
    }
    Ok(if edges == 0 {
        vacuous()
    } else {
        Pass(Some(format!("{edges} component edges lifted")))
    })
}

fn fixed_component(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n == 2) {
        return Ok(o);
    }
    let r = inst.ring();
    let g = inst.graph()?;
    let comps = [inst.component_graph(0)?, inst.component_graph(1)?];
    let orders = r.factor_orders();
    for (fixed, varying) in [(0usize, 1usize), (1, 0)] {
        let gv = &comps[varying];
        for x in 0..orders[fixed] {
            for y1 in 0..orders[varying] {
                for y2 in y1 + 1..orders[varying] {
                    let tuple = |y: usize| {
                        let mut t = [0; 2];
                        t[fixed] = x;
                        t[varying] = y;
                        r.compose(&t)
                    };
                    let (p, q) = (tuple(y1), tuple(y2));
                    let want = gv.adjacent_elements(y1, y2);
                    if g.adjacent_elements(p, q) != want {
                        let (x, y) = (label(inst, p), label(inst, q));
                        let claim = if want { Claim::Adjacent { x, y } } else { Claim::NotAdjacent { x, y } };
                        return Ok(fail(claim, None));
                    }
                }
            }
        }
    }
    Ok(Pass(None))
}

fn clique_chromatic_bound(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n >= 2) {
        return Ok(o);
    }
    let g = inst.graph()?;
    let (mut need_omega, mut need_chi) = (0, 0);
    for i in 0..inst.parts.len() {
        let gi = inst.component_graph(i)?;
        need_omega = need_omega.max(clique_number(&gi)?);
        need_chi = need_chi.max(chromatic(&gi).lower());
    }
    if need_omega == 0 {
        return Ok(vacuous());
    }
    let omega = clique_number(g)?;
    if omega < need_omega {
        return Ok(fail(Claim::CliqueAtLeast { size: need_omega }, format!("clique number {omega}")));
    }
    let chi = chromatic(g);
    if chi.upper() < need_chi {
        return Ok(fail(
            Claim::ChromaticAtLeast { colours: need_chi },
            format!("chromatic number at most {}", chi.upper()),
        ));
    }
    if chi.lower() < need_chi {
        return Ok(Skip(format!(
            "chromatic bounds {}..{} inconclusive against {need_chi}",
            chi.lower(),
            chi.upper()
        )));
    }
    Ok(Pass(Some(format!(
        "omega {omega} >= {need_omega}, chi {} >= {need_chi}",
        chi.exact().map_or(format!(">= {}", chi.lower()), |k| k.to_string())
    ))))
}

fn mixed_unit_adjacency(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n == 2) {
        return Ok(o);
    }
    let r = inst.ring();
    let g = inst.graph()?;
    let (f1, f2) = (&inst.entry.factors[0], &inst.entry.factors[1]);
    let (i1, i2) = (&inst.parts[0], &inst.parts[1]);
    let outside = |f: &FiniteRing, i: &Ideal| -> Vec<usize> { f.elements().filter(|&x| !i.contains(x)).collect() };
    // `x R_i + I_i != R_i`, i.e. x is not a unit modulo I_i.
    let nonunit_mod =
        |f: &FiniteRing, i: &Ideal, x: usize| !f.elements().any(|s| i.contains(f.sub(f.mul(x, s), f.one())));
    let mut checked = 0usize;
    let mut check = |p: usize, q: usize| -> Option<Outcome> {
        checked += 1;
        (!g.adjacent_elements(p, q)).then(|| {
            fail(
                Claim::Adjacent {
                    x: label(inst, p),
                    y: label(inst, q),
                },
                None,
            )
        })
    };
    // (x, b) ~ (a, y).
    for &x in &outside(f1, i1) {
        for &y in &outside(f2, i2) {
            for &a in i1.members() {
                for &b in i2.members() {
                    if let Some(o) = check(r.compose(&[x, b]), r.compose(&[a, y])) {
                        return Ok(o);
                    }
                }
            }
        }
    }
    // (x, y) ~ (a, b + u2) when x is outside I1 and y is not a unit mod I2;
    // (x, y) ~ (a + u1, b) symmetrically.
    let mut literal_misses = 0usize;
    for side in 0..2 {
        let (fa, ia, fb, ib) = if side == 0 { (f1, i1, f2, i2) } else { (f2, i2, f1, i1) };
        for x in fa.elements() {
            for y in fb.elements() {
                let tuple = |a: usize, b: usize| if side == 0 { r.compose(&[a, b]) } else { r.compose(&[b, a]) };
                let refined = !ia.contains(x) && nonunit_mod(fb, ib, y);
                let literal = !ia.contains(x) && !ib.contains(y);
                if !refined && !literal {
                    continue;
                }
                for &a in ia.members() {
                    for &b in ib.members() {
                        for u in fb.units() {
                            let p = tuple(x, y);
                            let q = tuple(a, fb.add(b, u));
                            if refined {
                                if let Some(o) = check(p, q) {
                                    return Ok(o);
                                }
                            } else if !g.adjacent_elements(p, q) {
                                literal_misses += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut note = format!("{checked} pairs");
    if literal_misses > 0 {
        note.push_str(&format!(
            "; {literal_misses} pairs with y a unit mod I are not adjacent (outside the refined hypothesis)"
        ));
    }
    Ok(Pass(Some(note)))
}

fn girth_totally_disconnected(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n == 2) {
        return Ok(o);
    }
    let empty: Vec<usize> = (0..2)
        .map(|i| inst.component_graph(i).map(|g| g.edge_count()))
        .collect::<Result<_, _>>()?;
    if empty.iter().all(|&e| e > 0) {
        return Ok(Skip("no component graph is totally disconnected".into()));
    }
    let gi = girth(inst.graph()?);
    let shown = gi.map_or("inf".to_string(), |v| v.to_string());
    Ok(if gi == Some(3) {
        Pass(Some("hypothesis true, girth 3".into()))
    } else {
        fail(
            Claim::GirthEquals { girth: 3 },
            format!("hypothesis true, conclusion false: girth {shown}"),
        )
    })
}

fn girth_at_most_four(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n == 2) {
        return Ok(o);
    }
    for (i, (f, part)) in inst.entry.factors.iter().zip(&inst.parts).enumerate() {
        if f.order() - part.len() < 2 {
            return Ok(Skip(format!("R{} minus I{} is a single element", i + 1, i + 1)));
        }
    }
    let gi = girth(inst.graph()?);
    Ok(match gi {
        Some(k) if k <= 4 => Pass(Some(format!("girth {k}"))),
        _ => fail(
            Claim::GirthAtMost { girth: 4 },
            format!(
                "hypothesis true, conclusion false: girth {}",
                gi.map_or("inf".into(), |v| v.to_string())
            ),
        ),
    })
}

fn product_diameter(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n == 2) {
        return Ok(o);
    }
    let g = inst.graph()?;
    if g.vertex_count() < 2 {
        return Ok(Skip("fewer than two vertices".into()));
    }
    let d = diameter(g);
    Ok(match d {
        Some(k) if k <= 3 && is_connected(g) => Pass(Some(format!("diameter {k}"))),
        _ => fail(
            Claim::ConnectedWithin { diameter: 3 },
            format!("diameter {}", d.map_or("inf".into(), |v| v.to_string())),
        ),
    })
}

fn planarity_transfer(inst: &Instance) -> Result<Outcome, GraphError> {
    let (gp, gop) = inst.entry.cozero_shape()?;
    let planar = inst.planar()?;
    let mut used = false;
    if gp {
        used = true;
        if !planar {
            return Ok(fail(Claim::Planar { expected: true }, "G'(R) is planar".to_string()));
        }
    }
    if gop {
        used = true;
        if !is_outerplanar(inst.graph()?)? {
            return Ok(fail(Claim::Outerplanar { expected: true }, "G'(R) is outerplanar".to_string()));
        }
    }
    if inst.is_product() && inst.component_proper() {
        for i in 0..inst.parts.len() {
            if !crate::analysis::is_planar(&inst.component_graph(i)?)? {
                used = true;
                if planar {
                    return Ok(fail(
                        Claim::Planar { expected: false },
                        format!("component graph {} is nonplanar", i + 1),
                    ));
                }
            }
        }
    }
    Ok(if used { Pass(None) } else { vacuous() })
}

fn planar_ideal_bound(inst: &Instance) -> Result<Outcome, GraphError> {
    if !inst.planar()? {
        return Ok(vacuous());
    }
    if inst.ideal.len() <= 2 {
        return Ok(Pass(Some(format!("|I| = {}", inst.ideal.len()))));
    }
    let q = quotient_ring(inst.ring(), &inst.ideal)?;
    let v = cozero_graph(&q.ring)?.vertex_count();
    Ok(if v <= 1 {
        Pass(Some(format!("|V(G'(R/I))| = {v}")))
    } else {
        fail(
            Claim::IdealBound,
            format!("planar with |I| = {} and |V(G'(R/I))| = {v}", inst.ideal.len()),
        )
    })
}

fn no_ends_outside_radical(inst: &Instance) -> Result<Outcome, GraphError> {
    let r = inst.ring();
    let j = jacobson_radical(r)?;
    if !inst.ideal.is_subset(&j) {
        return Ok(Skip("I is not contained in J(R)".into()));
    }
    let g = inst.graph()?;
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| !j.contains(g.element(v))).collect();
    if keep.len() < 2 {
        return Ok(Skip("fewer than two vertices outside J(R)".into()));
    }
    let h = g.induced(&keep)?;
    match (0..h.vertex_count()).find(|&v| h.degree(v) == 1) {
        None => Ok(Pass(None)),
        Some(v) => Ok(fail(
            Claim::NoEnd {
                vertex: h.label(v).to_string(),
            },
            "hypothesis true, conclusion false".to_string(),
        )),
    }
}

/// Shared shape of the "local factors imply nonplanar" claims.
fn nonplanar_when(
    inst: &Instance,
    arity: impl Fn(usize) -> bool,
    hypothesis: impl Fn(&Instance) -> Result<Result<String, String>, GraphError>,
) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, arity) {
        return Ok(o);
    }
    if let Some(o) = require_local_factors(inst)? {
        return Ok(o);
    }
    let why = match hypothesis(inst)? {
        Ok(why) => why,
        Err(unmet) => return Ok(Skip(unmet)),
    };
    Ok(if inst.planar()? {
        fail(Claim::Planar { expected: false }, format!("{why}, yet planar"))
    } else {
        Pass(Some(why))
    })
}

fn nonplanar_many_factors(inst: &Instance) -> Result<Outcome, GraphError> {
    nonplanar_when(inst, |n| n >= 4, |i| Ok(Ok(format!("{} local factors", i.parts.len()))))
}

fn nonplanar_three_factors(inst: &Instance) -> Result<Outcome, GraphError> {
    nonplanar_when(
        inst,
        |n| n == 3,
        |i| {
            Ok(match i.entry.factors.iter().position(|f| f.order() >= 3) {
                Some(k) => Ok(format!("|R{}| = {}", k + 1, i.entry.factors[k].order())),
                None => Err("every factor has two elements".into()),
            })
        },
    )
}

fn nonplanar_large_factors(inst: &Instance) -> Result<Outcome, GraphError> {
    nonplanar_when(
        inst,
        |n| n == 2,
        |i| {
            let (a, b) = (i.entry.factors[0].order(), i.entry.factors[1].order());
            Ok(if a >= 4 && b >= 4 {
                Ok(format!("|R1| = {a}, |R2| = {b}"))
            } else {
                Err("a factor has fewer than four elements".into())
            })
        },
    )
}

fn nonplanar_multi_vertex_factor(inst: &Instance) -> Result<Outcome, GraphError> {
    nonplanar_when(
        inst,
        |n| n == 2,
        |i| {
            for k in 0..2 {
                let v = i.component_graph(k)?.vertex_count();
                if v >= 2 {
                    return Ok(Ok(format!("component graph {} has {v} vertices", k + 1)));
                }
            }
            Ok(Err("both component graphs have at most one vertex".into()))
        },
    )
}

fn nonplanar_adjacent_factor(inst: &Instance) -> Result<Outcome, GraphError> {
    nonplanar_when(
        inst,
        |n| n == 2,
        |i| {
            for k in 0..2 {
                let g = i.component_graph(k)?;
                if let Some(&(a, b)) = g.edges().first() {
                    return Ok(Ok(format!("{} ~ {} in component graph {}", g.label(a), g.label(b), k + 1)));
                }
            }
            Ok(Err("both component graphs are edgeless".into()))
        },
    )
}

fn three_factor_classification(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n == 3) {
        return Ok(o);
    }
    if let Some(o) = require_local_factors(inst)? {
        return Ok(o);
    }
    let r = inst.ring();
    let listed = if r.order() == 8 {
        let z2 = make_zn(2)?;
        let cube = crate::ring::make_product_all(&[&z2, &z2, &z2])?;
        ring_iso(r, &cube)?.is_some()
    } else {
        false
    };
    let planar = inst.planar()?;
    Ok(if planar == listed {
        Pass(Some(format!("planar = {planar}")))
    } else {
        fail(
            Claim::Planar { expected: listed },
            format!("ring {} Z2 x Z2 x Z2", if listed { "is" } else { "is not" }),
        )
    })
}

/// Name of the listed planar ring `R1 x R2` is isomorphic to, if any:
/// Z2 or Z3 times a field, Z4 or Z2[X]/(X²).
pub fn is_listed_planar_product(r1: &FiniteRing, r2: &FiniteRing) -> Result<Option<String>, RingError> {
    let is_field = |f: &FiniteRing| f.order() >= 2 && f.units().len() == f.order() - 1;
    let z4 = make_zn(4)?;
    let dual = make_quotient_poly(2, &[0, 0, 1])?;
    for (small, other) in [(r1, r2), (r2, r1)] {
        if !matches!(small.order(), 2 | 3) || !is_field(small) {
            continue;
        }
        let s = format!("Z{}", small.order());
        if is_field(other) {
            return Ok(Some(format!("{s} x GF({})", other.order())));
        }
        if other.order() == 4 {
            if ring_iso(other, &z4)?.is_some() {
                return Ok(Some(format!("{s} x Z4")));
            }
            if ring_iso(other, &dual)?.is_some() {
                return Ok(Some(format!("{s} x Z2[X]/(X^2)")));
            }
        }
    }
    Ok(None)
}

fn planar_product_classification(inst: &Instance) -> Result<Outcome, GraphError> {
    if let Some(o) = product_of(inst, |n| n == 2) {
        return Ok(o);
    }
    if let Some(o) = require_local_factors(inst)? {
        return Ok(o);
    }
    let listed = is_listed_planar_product(&inst.entry.factors[0], &inst.entry.factors[1])?;
    let planar = inst.planar()?;
    let mismatch = if planar != listed.is_some() {
        "; this ideal alone disagrees with list membership"
    } else {
        ""
    };
    if let Some(name) = &listed {
        return Ok(if planar {
            Pass(Some(format!("listed as {name}")))
        } else {
            fail(Claim::Planar { expected: true }, format!("listed as {name}"))
        });
    }
    // Not listed: some component-proper ideal, namely zero, must give a nonplanar graph.
    let (cozero_planar, _) = inst.entry.cozero_shape()?;
    if cozero_planar {
        return Ok(Outcome::Fail {
            claim: Claim::Planar { expected: false },
            note: Some(format!("not listed, yet G'(R) is planar{mismatch}")),
        });
    }
    Ok(Pass(Some(format!("not listed, G'(R) nonplanar{mismatch}"))))
}

/// The maximal ideal of a local ring and whether it is principal.
fn local_maximal(r: &FiniteRing) -> Result<Option<(Ideal, bool)>, RingError> {
    Ok(is_local(r)?.map(|m| {
        let principal = m.members().iter().any(|&x| r.principal(x) == m.mask());
        (m, principal)
    }))
}

fn principal_maximal_planar(inst: &Instance) -> Result<Outcome, GraphError> {
    if inst.is_product() {
        return Ok(NotApplicable);
    }
    let Some((_, principal)) = local_maximal(inst.ring())? else {
        return Ok(Skip("ring is not local".into()));
    };
    if !principal {
        return Ok(Skip("maximal ideal is not principal".into()));
    }
    Ok(if inst.planar()? {
        Pass(None)
    } else {
        fail(Claim::Planar { expected: true }, None)
    })
}

/// Least number of generators of the image of the maximal ideal in R/I for
/// local R; `None` when more than the search cap of 5 are needed.
pub fn ara_of_image(r: &FiniteRing, ideal: &Ideal) -> Result<Option<usize>, RingError> {
    let m = is_local(r)?.ok_or_else(|| RingError::Mismatch(format!("{} is not local", r.expr())))?;
    let q = quotient_ring(r, ideal)?;
    let image = Ideal::new(&q.ring, m.members().iter().map(|&x| q.projection[x]))?;
    Ok(min_generators(&q.ring, &image, MAX_GENERATOR_CAP)?.count())
}

fn ara_bound(inst: &Instance) -> Result<Outcome, GraphError> {
    if inst.is_product() {
        return Ok(NotApplicable);
    }
    let Some((_, principal)) = local_maximal(inst.ring())? else {
        return Ok(Skip("ring is not local".into()));
    };
    if principal {
        return Ok(Skip("maximal ideal is principal".into()));
    }
    if !inst.planar()? {
        return Ok(vacuous());
    }
    let ara = ara_of_image(inst.ring(), &inst.ideal)?;
    Ok(match ara {
        Some(k) if k <= 4 => Pass(Some(format!("ara(m/I) = {k}"))),
        _ => fail(
            Claim::AraAtMost { bound: 4 },
            format!("ara(m/I) {}", ara.map_or("> 5".into(), |k| format!("= {k}"))),
        ),
    })
}

fn unit_orbit_nonplanar(inst: &Instance) -> Result<Outcome, GraphError> {
    if inst.is_product() {
        return Ok(NotApplicable);
    }
    let r = inst.ring();
    let Some((m, _)) = local_maximal(r)? else {
        return Ok(Skip("ring is not local".into()));
    };
    let q = quotient_ring(r, &inst.ideal)?;
    let qr = &q.ring;
    let n = Ideal::new(qr, m.members().iter().map(|&x| q.projection[x]))?;
    if n.members().iter().any(|&x| qr.principal(x) == n.mask()) {
        return Ok(Skip("m/I is principal".into()));
    }
    // Minimal generating sets of n are lifts of bases of n/n²; two elements
    // extend to one iff x ∉ n² and y ∉ xR + n².
    let products: Vec<usize> = n
        .members()
        .iter()
        .flat_map(|&a| n.members().iter().map(move |&b| qr.mul(a, b)))
        .collect();
    let n2 = ideal_generated(qr, &products);
    let span = |x: usize| {
        let mut gens = n2.members().to_vec();
        gens.push(x);
        ideal_generated(qr, &gens)
    };
    let units = r.units();
    let orbit = |x: usize| {
        let mut s = BitSet::new(r.order());
        for &u in &units {
            s.insert(r.mul(u, x));
        }
        s.count()
    };
    let big: Vec<usize> = m.members().iter().copied().filter(|&x| orbit(x) >= 3).collect();
    let mut found = None;
    'search: for &x in &big {
        let xq = q.projection[x];
        if n2.contains(xq) {
            continue;
        }
        let sx = span(xq);
        for &y in &big {
            let yq = q.projection[y];
            if yq != xq && !sx.contains(yq) {
                found = Some((x, y));
                break 'search;
            }
        }
    }
    let Some((x, y)) = found else {
        return Ok(Skip("no minimal generators x+I, y+I with unit orbits of size >= 3".into()));
    };
    let why = format!("x = {}, y = {}", r.label(x), r.label(y));
    Ok(if inst.planar()? {
        fail(Claim::Planar { expected: false }, format!("hypothesis true ({why}), yet planar"))
    } else {
        Pass(Some(why))
    })
}

fn corrupt_fixture(inst: &Instance) -> Result<Outcome, GraphError> {
    let g: &Graph = inst.graph()?;
    Ok(match g.edges().first() {
        None => Pass(None),
        Some(&(a, b)) => fail(
            Claim::NotAdjacent {
                x: g.label(a).to_string(),
                y: g.label(b).to_string(),
            },
            None,
        ),
    })
}
