//! One PASS/FAIL line per acceptance criterion.

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use twodist::coloring::{brute_force_count, is_k_colorable};
use twodist::exactnum::{FieldElement, Tower};
use twodist::geometry::{dist2, lattice_to_point, rotate_about, spindle_cos, LatticeCoord};
use twodist::graphs::{catalog, from_json, to_json, AbstractGraph, CatalogId, TwoDistGraph};
use twodist::verify::{self, CaseReport};

struct Line {
    n: usize,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn case(id: &str) -> CaseReport {
    verify::run_case(verify::find(id).expect("known case id"))
}

fn failures(r: &CaseReport) -> String {
    let bad: Vec<String> = r
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: expected {}, computed {}", c.property, c.expected, c.computed))
        .collect();
    if bad.is_empty() {
        format!("{:?}", r.status)
    } else {
        bad.join("; ")
    }
}

/// A criterion backed by verification cases, each with a time limit.
fn from_cases(n: usize, name: &'static str, ids: &[&str], limit: Duration) -> Line {
    let mut pass = true;
    let mut parts = Vec::new();
    for id in ids {
        let r = case(id);
        let elapsed = Duration::from_millis(r.elapsed_ms as u64);
        let ok = r.passed() && elapsed < limit;
        pass &= ok;
        if ok {
            parts.push(format!("{id} {} ms", r.elapsed_ms));
        } else if !r.passed() {
            parts.push(format!("{id}: {}", failures(&r)));
        } else {
            parts.push(format!("{id}: {} ms over {} s", r.elapsed_ms, limit.as_secs()));
        }
    }
    Line { n, name, pass, detail: parts.join(", ") }
}

fn w6_counts() -> Line {
    let start = Instant::now();
    let sixteen = case("w6-sixteen");
    let other = case("w6-other");
    let counts: Vec<String> = sixteen
        .checks
        .iter()
        .map(|c| format!("{} = {}", c.property, c.computed))
        .collect();
    let others_ok = other.passed();
    let in_time = start.elapsed() < Duration::from_secs(600);
    Line {
        n: 12,
        name: "W6 embeddings at the exotic distance and the three further values",
        pass: sixteen.passed() && others_ok && in_time,
        detail: format!(
            "{}; further values {}",
            counts.join(", "),
            if others_ok { "all embed".to_string() } else { failures(&other) }
        ),
    }
}

fn cosines() -> Line {
    let t = Tower::rationals();
    let one = FieldElement::one(&t);
    // law of cosines: a chord b on radius r has cos = 1 - b^2 / (2 r^2)
    let oracle = |r2: i64| FieldElement::from_ratio(&t, 2 * r2 - 1, 2 * r2);
    let mut pass = true;
    let mut parts = Vec::new();
    for (r2, want) in [(4, "7/8"), (2, "3/4")] {
        let got = spindle_cos(&FieldElement::from_int(&t, r2), &one).expect("positive radius");
        let shown = got.as_rational().map(|q| q.to_string()).unwrap_or_default();
        pass &= got == oracle(r2) && shown == want;
        parts.push(format!("radius^2 {r2}: {shown}"));
    }
    let r = case("cosines");
    pass &= r.passed();
    Line { n: 14, name: "spindle rotation cosines 7/8 and 3/4", pass, detail: parts.join(", ") }
}

fn composed() -> Line {
    let r = case("observation");
    let g = catalog(CatalogId::Composed100).expect("composed graph builds");
    Line {
        n: 15,
        name: "edge substitution yields the 100-vertex graph",
        pass: r.passed() && g.len() == 100,
        detail: format!(
            "{} vertices, {} unit edges, {} d-edges{}",
            g.len(),
            g.unit_edges().len(),
            g.d_edges().len(),
            if r.passed() { String::new() } else { format!("; {}", failures(&r)) }
        ),
    }
}

fn run_property(name: &str, cases: u32, f: impl FnOnce(&mut TestRunner) -> Result<(), String>) -> Result<String, String> {
    let mut runner = TestRunner::new(Config { cases, ..Config::default() });
    f(&mut runner).map(|_| format!("{name} ({cases} cases)")).map_err(|e| format!("{name}: {e}"))
}

fn element() -> impl Strategy<Value = FieldElement> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 4).prop_map(|cs| {
        let t = Tower::from_decls(&[("s2", "2"), ("s3", "3")]).unwrap();
        let (a, b) = (t.generator("s2").unwrap(), t.generator("s3").unwrap());
        let basis = [FieldElement::one(&t), a.clone(), b.clone(), a * &b];
        cs.into_iter()
            .zip(basis)
            .fold(FieldElement::zero(&t), |x, ((n, d), m)| x + FieldElement::from_ratio(&t, n, d) * &m)
    })
}

fn coord() -> impl Strategy<Value = LatticeCoord> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9).prop_map(|(a, b, c, d)| LatticeCoord::new(a, b, c, d))
}

fn small_graph() -> impl Strategy<Value = AbstractGraph> {
    (2usize..=8).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            AbstractGraph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p))
        })
    })
}

fn check(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn properties() -> Line {
    let results = [
        run_property("field axioms", 64, |r| {
            r.run(&(element(), element(), element()), |(a, b, c)| {
                check(&a * &b == &b * &a, "commutativity")?;
                check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")?;
                check(&(&a + &b) + &c == &a + &(&b + &c), "associativity")?;
                if !a.is_zero() {
                    check((&a * &a.inverse().unwrap()).is_one(), "inverse")?;
                }
                Ok(())
            })
            .map_err(|e| e.to_string())
        }),
        run_property("rotation isometry", 64, |r| {
            let triple = (1i64..7, 1i64..7).prop_filter("distinct", |(m, n)| m != n);
            r.run(&(triple, coord(), coord(), coord()), |((m, n), p, q, c)| {
                let t = Tower::lattice();
                let h = m * m + n * n;
                let cos = FieldElement::from_ratio(&t, m * m - n * n, h);
                let sin = FieldElement::from_ratio(&t, 2 * m * n, h);
                let (p, q, c) = (lattice_to_point(&p), lattice_to_point(&q), lattice_to_point(&c));
                let rp = rotate_about(&c, &cos, &sin, &p).unwrap();
                let rq = rotate_about(&c, &cos, &sin, &q).unwrap();
                check(dist2(&rp, &rq).unwrap() == dist2(&p, &q).unwrap(), "distance preserved")
            })
            .map_err(|e| e.to_string())
        }),
        run_property("JSON round trip", 32, |r| {
            for id in CatalogId::ALL {
                let g = catalog(id).map_err(|e| e.to_string())?;
                let back = from_json(&to_json(&g)).map_err(|e| e.to_string())?;
                if back.points() != g.points() || back.unit_edges() != g.unit_edges() || back.d_edges() != g.d_edges() {
                    return Err(format!("{id} changed"));
                }
            }
            let quads = prop::collection::btree_set((-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9), 1..10);
            r.run(&quads, |qs| {
                let t = Tower::lattice();
                let cs = qs.into_iter().map(|(a, b, c, d)| LatticeCoord::new(a, b, c, d)).collect();
                let g = TwoDistGraph::from_lattice(cs, FieldElement::from_int(&t, 3)).unwrap();
                let back = from_json(&to_json(&g)).unwrap();
                check(back.points() == g.points() && back.unit_edges() == g.unit_edges(), "round trip")
            })
            .map_err(|e| e.to_string())
        }),
        run_property("solver agrees with enumeration", 64, |r| {
            for id in CatalogId::ALL {
                let g = catalog(id).map_err(|e| e.to_string())?;
                if g.len() > 13 {
                    continue;
                }
                for k in 3..=5 {
                    let count = brute_force_count(g.abstract_graph(), k).map_err(|e| e.to_string())?;
                    let res = is_k_colorable(g.abstract_graph(), k, &[]).map_err(|e| e.to_string())?;
                    if res.is_colorable() != (count > 0) {
                        return Err(format!("{id} at k = {k}"));
                    }
                }
            }
            r.run(&(small_graph(), 1usize..=4), |(g, k)| {
                let count = brute_force_count(&g, k).unwrap();
                check(is_k_colorable(&g, k, &[]).unwrap().is_colorable() == (count > 0), "agreement")
            })
            .map_err(|e| e.to_string())
        }),
        run_property("colorings re-verified", 64, |r| {
            for id in CatalogId::ALL {
                let g = catalog(id).map_err(|e| e.to_string())?;
                if g.len() > 40 {
                    continue;
                }
                for k in 4..=5 {
                    let res = is_k_colorable(g.abstract_graph(), k, &[]).map_err(|e| e.to_string())?;
                    if let Some(c) = res.coloring() {
                        if !g.abstract_graph().is_proper(c) || c.iter().any(|&x| x >= k) {
                            return Err(format!("{id} at k = {k}"));
                        }
                    }
                }
            }
            r.run(&(small_graph(), 1usize..=5), |(g, k)| match is_k_colorable(&g, k, &[]).unwrap().coloring() {
                Some(c) => check(g.is_proper(c) && c.iter().all(|&x| x < k), "proper"),
                None => Ok(()),
            })
            .map_err(|e| e.to_string())
        }),
    ];
    let pass = results.iter().all(|r| r.is_ok());
    let detail = results
        .iter()
        .map(|r| match r {
            Ok(s) => s.clone(),
            Err(e) => format!("FAILED {e}"),
        })
        .collect::<Vec<_>>()
        .join(", ");
    Line { n: 16, name: "property suites", pass, detail }
}

fn main() {
    let s = Duration::from_secs;
    let lines = [
        from_cases(1, "Moser spindle: 7 vertices, 11 unit edges, chromatic number 4", &["moser", "spindle-method"], s(1)),
        from_cases(2, "spindled K5 minus an edge at d = sqrt(3)", &["root3"], s(1)),
        from_cases(3, "spindled K5 minus an edge at d = (sqrt(6) + sqrt(2))/2", &["root6"], s(1)),
        from_cases(4, "13-vertex graph at d = sqrt(2)", &["root2"], s(30)),
        from_cases(5, "forced pair at the exotic distance", &["exotic"], s(10)),
        from_cases(6, "spindled exotic graph: 25 vertices, 67 edges, chromatic number 5", &["exotic-spindle"], s(300)),
        from_cases(7, "9-vertex gadget keeps A and B apart", &["smart1"], s(1)),
        from_cases(8, "33-vertex gadget keeps A and B apart", &["smart2"], s(300)),
        from_cases(9, "26-vertex graph at d = 2", &["two26"], s(300)),
        from_cases(10, "103-vertex graph at d = 2/sqrt(3)", &["tworoot3"], s(900)),
        from_cases(11, "K4 spectrum is exactly four values", &["twodistance"], s(10)),
        w6_counts(),
        from_cases(13, "W6 is the unique K4-free 4-chromatic graph on six vertices", &["w6-unique"], s(120)),
        cosines(),
        composed(),
        properties(),
    ];
    for l in &lines {
        println!("{} {:>2} {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.n, l.name, l.detail);
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("{passed}/{} criteria passed", lines.len());
}
