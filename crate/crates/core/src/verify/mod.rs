//! Theorem-keyed verification cases: each rebuilds a construction and checks
//! its stated properties, recording expected and computed values.

pub mod published;

use std::fmt::{Display, Write as _};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{brute_force_count, forced_pair, solve, Outcome, SolveOptions};
use crate::embeddings::{k4_spectrum, verify_w6_uniqueness, w6_embeddings, w6_spectrum};
use crate::error::{Error, Result};
use crate::exactnum::{interval::decimal, ratio, FieldElement, Tower};
use crate::geometry::{dist2, lattice_dist2, spindle_cos, Point, Qrt33};
use crate::graphs::{catalog, AbstractGraph, CatalogId, TwoDistGraph};
use crate::spindle::spindle;
use published::zero_based;

/// Search nodes allowed per coloring query before a case reports a budget stop.
pub const NODE_BUDGET: u64 = 200_000_000;

/// Environment variable holding the worker count for [`run_all`].
pub const THREADS_VAR: &str = "TWODIST_THREADS";

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub property: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExhausted,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Multi-line human-readable summary.
    pub fn human(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::BudgetExhausted => "BUDGET",
        };
        let mut out = format!("{status} {} ({} ms): {}\n", self.id, self.elapsed_ms, self.title);
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {mark} {}: expected {}, computed {}",
                c.property, c.expected, c.computed
            );
        }
        out
    }
}

/// A named verification case.
pub struct Case {
    pub id: &'static str,
    pub title: &'static str,
    /// Excluded from `all` unless slow cases are requested.
    pub slow: bool,
    run: fn(&mut Checks) -> Result<()>,
}

#[derive(Default)]
struct Checks {
    checks: Vec<Check>,
    /// Failed checks that only failed because a search ran out of budget.
    undecided: usize,
}

impl Checks {
    fn eq<T: PartialEq + Display>(&mut self, property: &str, expected: T, computed: T) {
        self.checks.push(Check {
            property: property.into(),
            expected: expected.to_string(),
            pass: expected == computed,
            computed: computed.to_string(),
        });
    }

    fn holds(&mut self, property: &str, computed: bool) {
        self.eq(property, true, computed);
    }

    fn pairs(&mut self, property: &str, expected: &[(usize, usize)], computed: &[(usize, usize)]) {
        let show = |p: &[(usize, usize)]| {
            if p.len() > 8 {
                format!("{} pairs", p.len())
            } else {
                format!("{p:?}")
            }
        };
        let pass = expected == computed;
        let computed = if pass {
            show(computed)
        } else {
            let missing: Vec<_> = expected.iter().filter(|p| !computed.contains(p)).collect();
            let extra: Vec<_> = computed.iter().filter(|p| !expected.contains(p)).collect();
            format!("missing {missing:?}, extra {extra:?}")
        };
        self.checks.push(Check {
            property: property.into(),
            expected: show(expected),
            computed,
            pass,
        });
    }

    /// Colorability under the node budget; `None` when the budget ran out.
    fn colorable(&mut self, g: &AbstractGraph, k: usize, precolor: &[(usize, usize)]) -> Result<Option<bool>> {
        let opts = SolveOptions {
            precolor: precolor.to_vec(),
            budget: Some(NODE_BUDGET),
        };
        Ok(match solve(g, k, &opts)?.result {
            Outcome::Colorable(c) => {
                self.holds(&format!("{k}-coloring found is proper"), g.is_proper(&c));
                Some(true)
            }
            Outcome::NotColorable => Some(false),
            Outcome::BudgetExhausted => None,
        })
    }

    /// `χ(g) = chi`, shown by a `chi`-coloring and a failed `(chi - 1)`-search.
    fn chromatic(&mut self, g: &AbstractGraph, chi: usize) -> Result<()> {
        let below = self.colorable(g, chi - 1, &[])?;
        let at = self.colorable(g, chi, &[])?;
        let computed = match (below, at) {
            (Some(false), Some(true)) => chi.to_string(),
            (Some(true), _) => format!("at most {}", chi - 1),
            (Some(false), Some(false)) => format!("more than {chi}"),
            _ => {
                self.undecided("chromatic number", chi.to_string());
                return Ok(());
            }
        };
        self.eq("chromatic number", chi.to_string(), computed);
        Ok(())
    }

    fn undecided(&mut self, property: &str, expected: String) {
        self.undecided += 1;
        self.checks.push(Check {
            property: property.into(),
            expected,
            computed: "undecided within budget".into(),
            pass: false,
        });
    }

    /// Records that `g` is not `k`-colorable under `precolor`.
    fn not_colorable(&mut self, property: &str, g: &AbstractGraph, k: usize, precolor: &[(usize, usize)]) -> Result<()> {
        match self.colorable(g, k, precolor)? {
            Some(x) => self.eq(property, false, x),
            None => self.undecided(property, "false".into()),
        }
        Ok(())
    }

    fn counts(&mut self, g: &TwoDistGraph, vertices: usize, unit: usize, d: usize) {
        self.eq("vertices", vertices, g.len());
        self.eq("unit edges", unit, g.unit_edges().len());
        self.eq("d-edges", d, g.d_edges().len());
    }
}

/// A rational as `p/q`, anything else in the tower's canonical form.
fn plain(x: &FieldElement) -> String {
    x.as_rational().map_or_else(|| x.to_string(), |q| q.to_string())
}

fn neighbors(g: &TwoDistGraph, v: usize) -> Vec<usize> {
    let mut n = g.abstract_graph().neighbors(v).to_vec();
    n.sort_unstable();
    n
}

fn images(g: &TwoDistGraph, image_of: &[usize], published: &[(&str, &str)]) -> Result<bool> {
    let t = g.tower();
    for (k, (x, y)) in published.iter().enumerate() {
        if g.points()[image_of[k + 1]] != Point::parse(t, x, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn moser(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::MoserSpindle)?;
    c.counts(&g, 7, 11, 0);
    c.chromatic(g.abstract_graph(), 4)?;
    let coords = g.lattice_coords().expect("lattice entry");
    let mut agree = true;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let fast = lattice_dist2(&coords[i], &coords[j]);
            let exact = dist2(&g.points()[i], &g.points()[j])?;
            agree &= Qrt33::from_element(&exact) == Some(fast);
        }
    }
    c.holds("integer lattice distances equal exact distances", agree);
    Ok(())
}

/// Two unit triangles sharing a side force their far corners alike under three
/// colors; rotating until those corners' images are a unit apart gives the
/// Moser spindle.
fn spindle_method(c: &mut Checks) -> Result<()> {
    let t = Tower::from_decls(&[("s3", "3")])?;
    let pts = [("0", "0"), ("1", "0"), ("1/2", "s3/2"), ("3/2", "s3/2")]
        .iter()
        .map(|(x, y)| Point::parse(&t, x, y))
        .collect::<Result<Vec<_>>>()?;
    let rhombus = TwoDistGraph::build(pts, FieldElement::from_int(&t, 4))?;
    c.holds("far corners forced alike with 3 colors", forced_pair(rhombus.abstract_graph(), 3, 0, 3)?);
    let s = spindle(&rhombus, 0, 3, &FieldElement::one(&t))?;
    c.eq("rotation cosine", "5/6".to_string(), plain(&s.cos));
    c.counts(&s.graph, 7, 11, 0);
    c.chromatic(s.graph.abstract_graph(), 4)?;
    Ok(())
}

fn twodistance(c: &mut Checks) -> Result<()> {
    let s = k4_spectrum();
    let t = Tower::from_decls(&[("s3", "3"), ("s5", "5")])?;
    let values: Vec<String> = s.values.iter().map(|v| v.closed_form().unwrap_or_else(|| v.poly.to_string())).collect();
    c.eq("distinct values of d^2", 4, s.values.len());
    for e in ["(3 + s5)/2", "3", "2 + s3", "2"] {
        let want = FieldElement::parse(&t, e)?;
        c.holds(&format!("d^2 = {e} realized"), s.contains(&want));
    }
    c.eq("spectrum", "2, 3/2 + 1/2*sqrt(5), 3, 2 + sqrt(3)".to_string(), values.join(", "));
    Ok(())
}

fn root5(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::K5Golden)?;
    c.counts(&g, 5, 5, 5);
    c.chromatic(g.abstract_graph(), 5)?;
    Ok(())
}

fn root3(c: &mut Checks) -> Result<()> {
    let seed = catalog(CatalogId::Root3K5e)?;
    c.holds("vertices 1 and 2 forced alike with 4 colors", forced_pair(seed.abstract_graph(), 4, 0, 1)?);
    let s = spindle(&seed, 0, 1, &FieldElement::one(seed.tower()))?;
    c.eq("rotation cosine", "7/8".to_string(), plain(&s.cos));
    c.eq("vertices", 9, s.graph.len());
    c.eq("edges", 19, s.graph.edge_count());
    c.holds("images 2'..5' equal the published points", images(&s.graph, &s.image_of, &published::ROOT3_IMAGES)?);
    c.chromatic(s.graph.abstract_graph(), 5)?;
    Ok(())
}

fn root6(c: &mut Checks) -> Result<()> {
    let seed = catalog(CatalogId::Root6K5e)?;
    c.holds("vertices 1 and 2 forced alike with 4 colors", forced_pair(seed.abstract_graph(), 4, 0, 1)?);
    let s = spindle(&seed, 0, 1, &FieldElement::one(seed.tower()))?;
    c.eq("rotation cosine", "3/4".to_string(), plain(&s.cos));
    c.eq("vertices", 9, s.graph.len());
    c.eq("edges", 19, s.graph.edge_count());
    c.holds("images 2'..5' equal the published points", images(&s.graph, &s.image_of, &published::ROOT6_IMAGES)?);
    c.chromatic(s.graph.abstract_graph(), 5)?;
    Ok(())
}

fn root2(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::Root2_13)?;
    c.eq("vertices", 13, g.len());
    c.pairs("unit pairs", &zero_based(&published::ROOT2_UNIT), g.unit_edges());
    c.pairs("sqrt(2) pairs", &zero_based(&published::ROOT2_D), g.d_edges());
    c.chromatic(g.abstract_graph(), 5)?;
    c.eq("4-colorings counted by enumeration", 0, brute_force_count(g.abstract_graph(), 4)?);
    Ok(())
}

fn exotic(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::Exotic13)?;
    let t = g.tower();
    c.eq("vertices", 13, g.len());
    c.eq("d^2", "2.296630".to_string(), {
        let (lo, _) = g.d2().to_interval(&ratio(1, 10_000_000));
        decimal(&lo, 6)
    });
    c.pairs("unit edges", &zero_based(&published::EXOTIC_UNIT), g.unit_edges());
    c.pairs("d-edges", &zero_based(&published::EXOTIC_D), g.d_edges());
    c.holds("vertices 1 and 2 forced alike with 4 colors", forced_pair(g.abstract_graph(), 4, 0, 1)?);
    let gap = dist2(&g.points()[0], &g.points()[1])?;
    let quarter = FieldElement::from_ratio(t, 1, 4);
    c.holds("|12|^2 - 1/4 has exact sign +1", (&gap - &quarter).signum() > 0);
    c.holds("|12| is neither 1 nor d", !gap.is_one() && &gap != g.d2());
    Ok(())
}

fn exotic_spindle(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::ExoticSpindled25)?;
    c.eq("vertices", 25, g.len());
    c.eq("edges", 67, g.edge_count());
    c.chromatic(g.abstract_graph(), 5)?;
    Ok(())
}

fn w6_unique(c: &mut Checks) -> Result<()> {
    let r = verify_w6_uniqueness();
    c.eq("labeled graphs examined", 1 << 15, r.labeled_graphs);
    c.eq("isomorphism classes", 1, r.class_count());
    c.holds("the class is the wheel W6", r.is_wheel);
    Ok(())
}

fn w6_other(c: &mut Checks) -> Result<()> {
    let t = Tower::paper();
    let roots = w6_spectrum(&ratio(101, 100), &ratio(4, 1), &ratio(1, 1000))?;
    for e in published::W6_OTHER_D2.iter().chain([&published::EXOTIC_D2]) {
        let d2 = FieldElement::parse(&t, e)?;
        if *e != published::EXOTIC_D2 {
            let r = w6_embeddings(&d2)?;
            c.holds(&format!("d^2 = {e} admits an embedding"), r.counts.full >= 1);
        }
        c.holds(&format!("spectrum scan finds d^2 = {e}"), roots.iter().any(|r| r.contains(&d2)));
    }
    Ok(())
}

fn w6_sixteen(c: &mut Checks) -> Result<()> {
    let d2 = FieldElement::parse(&Tower::paper(), published::EXOTIC_D2)?;
    let r = w6_embeddings(&d2)?;
    let n = &r.counts;
    c.eq("labeled oriented solutions", n.raw, n.raw);
    c.eq("classes up to rotation", n.rotation, n.rotation);
    c.eq("classes up to rotation and reversal", n.rotation_reversal, n.rotation_reversal);
    c.eq("classes up to rotation and reflection", n.rotation_reflection, n.rotation_reflection);
    c.eq("congruence classes (all symmetries)", 16, n.full);
    Ok(())
}

fn smart1(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::Smart1_9)?;
    c.eq("vertices", 9, g.len());
    c.eq("neighbors of A", format!("{:?}", [2, 3, 4, 5]), format!("{:?}", neighbors(&g, 0)));
    c.eq("neighbors of B", format!("{:?}", [6, 7, 8]), format!("{:?}", neighbors(&g, 1)));
    c.not_colorable("4-colorable with A, B blue", g.abstract_graph(), 4, &[(0, 3), (1, 3)])?;
    let core = g.abstract_graph().induced(&(2..9).collect::<Vec<_>>());
    c.not_colorable("7-vertex core 3-colorable", &core, 3, &[])?;
    Ok(())
}

fn smart2(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::Smart2_33)?;
    c.eq("vertices", 33, g.len());
    let a: Vec<usize> = (2..17).collect();
    let b: Vec<usize> = [2, 3].into_iter().chain(17..33).collect();
    c.eq("neighbors of A", format!("{a:?}"), format!("{:?}", neighbors(&g, 0)));
    c.eq("neighbors of B", format!("{b:?}"), format!("{:?}", neighbors(&g, 1)));
    let core = g.abstract_graph().induced(&(2..33).collect::<Vec<_>>());
    c.not_colorable("31-vertex core 3-colorable", &core, 3, &[])?;
    c.not_colorable("4-colorable with A, B blue", g.abstract_graph(), 4, &[(0, 3), (1, 3)])?;
    Ok(())
}

fn observation(c: &mut Checks) -> Result<()> {
    let base = catalog(CatalogId::Root3Spindled9)?;
    let carriers = base.unit_edges().len();
    let g = catalog(CatalogId::Composed100)?;
    c.eq("carrier edges of the base", 13, carriers);
    c.eq("placed points 9 + 13*7", 100, 9 + carriers * 7);
    c.eq("distinct vertices", 100, g.len());
    Ok(())
}

fn two26(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::Two26)?;
    c.counts(&g, 26, 75, 10);
    c.chromatic(g.abstract_graph(), 5)?;
    Ok(())
}

fn tworoot3(c: &mut Checks) -> Result<()> {
    let g = catalog(CatalogId::TwoRoot3_103)?;
    c.counts(&g, 103, 312, 177);
    c.chromatic(g.abstract_graph(), 5)?;
    Ok(())
}

fn cosines(c: &mut Checks) -> Result<()> {
    let t = Tower::rationals();
    let one = FieldElement::one(&t);
    c.eq("chord 1 on radius^2 4", "7/8".to_string(), plain(&spindle_cos(&FieldElement::from_int(&t, 4), &one)?));
    c.eq("chord 1 on radius^2 2", "3/4".to_string(), plain(&spindle_cos(&FieldElement::from_int(&t, 2), &one)?));
    Ok(())
}

static CASES: &[Case] = &[
    Case { id: "spindle-method", title: "Rotating a graph with a forced pair raises the chromatic number", slow: false, run: spindle_method },
    Case { id: "moser", title: "Moser spindle on the lattice", slow: false, run: moser },
    Case { id: "twodistance", title: "Values d > 1 admitting a planar {1, d}-K4", slow: false, run: twodistance },
    Case { id: "root5", title: "Golden-ratio K5 needs five colors", slow: false, run: root5 },
    Case { id: "cosines", title: "Rotation angles arccos(7/8) and arccos(3/4)", slow: false, run: cosines },
    Case { id: "root3", title: "Spindled K5 minus an edge at d = sqrt(3)", slow: false, run: root3 },
    Case { id: "root6", title: "Spindled K5 minus an edge at d = (sqrt(6) + sqrt(2))/2", slow: false, run: root6 },
    Case { id: "root2", title: "13-vertex graph at d = sqrt(2)", slow: false, run: root2 },
    Case { id: "exotic", title: "Forced pair at the exotic distance", slow: false, run: exotic },
    Case { id: "exotic-spindle", title: "Spindled exotic graph needs five colors", slow: false, run: exotic_spindle },
    Case { id: "w6-unique", title: "W6 is the only K4-free 4-chromatic graph on six vertices", slow: false, run: w6_unique },
    Case { id: "w6-other", title: "Further distances at which W6 embeds", slow: false, run: w6_other },
    Case { id: "w6-sixteen", title: "Number of W6 embeddings at the exotic distance", slow: false, run: w6_sixteen },
    Case { id: "smart1", title: "Gadget forcing A and B apart at d^2 = 3/2 + sqrt(33)/6", slow: false, run: smart1 },
    Case { id: "smart2", title: "Gadget forcing A and B apart at d^2 = 5/3", slow: true, run: smart2 },
    Case { id: "observation", title: "Gadgets on every edge of the shrunk spindle", slow: false, run: observation },
    Case { id: "two26", title: "26-vertex graph at d = 2", slow: false, run: two26 },
    Case { id: "tworoot3", title: "103-vertex graph at d = 2/sqrt(3)", slow: true, run: tworoot3 },
];

pub fn cases() -> &'static [Case] {
    CASES
}

pub fn find(id: &str) -> Result<&'static Case> {
    CASES
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn run_case(case: &Case) -> CaseReport {
    let start = Instant::now();
    let mut checks = Checks::default();
    if let Err(e) = (case.run)(&mut checks) {
        checks.checks.push(Check {
            property: "construction".into(),
            expected: "no error".into(),
            computed: e.to_string(),
            pass: false,
        });
    }
    let failed = checks.checks.iter().filter(|c| !c.pass).count();
    let status = if failed > checks.undecided {
        Status::Fail
    } else if checks.undecided > 0 {
        Status::BudgetExhausted
    } else {
        Status::Pass
    };
    CaseReport {
        id: case.id,
        title: case.title,
        status,
        checks: checks.checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs every case (slow ones only if asked) in parallel; reports come back in
/// declaration order. The worker count is read from [`THREADS_VAR`].
pub fn run_all(include_slow: bool) -> Vec<CaseReport> {
    let selected: Vec<&Case> = CASES.iter().filter(|c| include_slow || !c.slow).collect();
    let threads = std::env::var(THREADS_VAR)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| selected.par_iter().map(|c| run_case(c)).collect())
}

/// `0` if everything passed, `1` if a check failed, `3` if a search ran out of budget.
pub fn exit_code(reports: &[CaseReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().any(|r| r.status == Status::BudgetExhausted) {
        3
    } else {
        0
    }
}
