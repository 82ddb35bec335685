//! Exact graph coloring: k-colorability with pre-colorings, chromatic numbers,
//! forced pairs, and a brute-force counter used as an independent check.
//!
//! The search is DSATUR branching with forward checking on color domains.
//! Without a pre-coloring, a greedy clique is fixed to colors `0, 1, ...`
//! first. Colors that no pre-colored vertex uses are interchangeable, so at
//! each branch only one not-yet-used interchangeable color is tried.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::AbstractGraph;

/// One color index per vertex.
pub type Coloring = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Colorable(Coloring),
    NotColorable,
    /// The node budget ran out before the search finished.
    BudgetExhausted,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub result: Outcome,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SolveReport {
    pub fn is_colorable(&self) -> bool {
        matches!(self.result, Outcome::Colorable(_))
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.result {
            Outcome::Colorable(c) => Some(c),
            _ => None,
        }
    }

    /// `{"result": ..., "coloring": [...], "nodes": n, "ms": t}`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Doc<'a> {
            result: &'a str,
            coloring: &'a [usize],
            nodes: u64,
            ms: u128,
        }
        let (result, coloring): (&str, &[usize]) = match &self.result {
            Outcome::Colorable(c) => ("colorable", c),
            Outcome::NotColorable => ("not_colorable", &[]),
            Outcome::BudgetExhausted => ("budget_exhausted", &[]),
        };
        serde_json::to_value(Doc {
            result,
            coloring,
            nodes: self.nodes,
            ms: self.elapsed.as_millis(),
        })
        .expect("report serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// `(vertex, color)` pairs fixed before the search.
    pub precolor: Vec<(usize, usize)>,
    /// Maximum number of search nodes.
    pub budget: Option<u64>,
}

/// Decides whether `g` has a proper `k`-coloring extending `precolor`.
pub fn is_k_colorable<G: AsRef<AbstractGraph> + ?Sized>(
    g: &G,
    k: usize,
    precolor: &[(usize, usize)],
) -> Result<SolveReport> {
    solve(
        g,
        k,
        &SolveOptions {
            precolor: precolor.to_vec(),
            budget: None,
        },
    )
}

pub fn solve<G: AsRef<AbstractGraph> + ?Sized>(
    g: &G,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    let g = g.as_ref();
    let start = Instant::now();
    if k > 64 {
        return Err(Error::InvalidPrecolor(format!("at most 64 colors supported, got {k}")));
    }
    for &(v, c) in &opts.precolor {
        if v >= g.len() {
            return Err(Error::VertexOutOfRange(v));
        }
        if c >= k {
            return Err(Error::InvalidPrecolor(format!(
                "vertex {v} gets color {c}, but only {k} colors are available"
            )));
        }
    }
    for (i, &(u, cu)) in opts.precolor.iter().enumerate() {
        for &(v, cv) in &opts.precolor[i + 1..] {
            if u == v && cu != cv {
                return Err(Error::InvalidPrecolor(format!("vertex {u} gets two colors")));
            }
            if cu == cv && g.has_edge(u, v) {
                return Err(Error::InvalidPrecolor(format!(
                    "adjacent vertices {u} and {v} share color {cu}"
                )));
            }
        }
    }

    let mut search = Search::new(g, k, opts.budget);
    let (fixed, pinned) = if opts.precolor.is_empty() {
        let clique = greedy_clique(g);
        if clique.len() > k {
            return Ok(search.finish(Outcome::NotColorable, start));
        }
        let fixed: Vec<(usize, usize)> = clique.into_iter().enumerate().map(|(c, v)| (v, c)).collect();
        (fixed, 0u64)
    } else {
        let pinned = opts.precolor.iter().fold(0u64, |m, &(_, c)| m | 1 << c);
        (opts.precolor.clone(), pinned)
    };
    search.pinned = pinned;
    let mut state = State {
        dom: vec![full(k); g.len()],
        col: vec![NONE; g.len()],
        used: 0,
    };
    for &(v, c) in &fixed {
        if !search.assign(&mut state, v, c) {
            return Ok(search.finish(Outcome::NotColorable, start));
        }
    }
    let outcome = match search.run(state) {
        Some(Some(col)) => {
            assert!(
                g.is_proper(&col) && col.iter().all(|&c| c < k),
                "solver produced an improper coloring"
            );
            Outcome::Colorable(col)
        }
        Some(None) => Outcome::NotColorable,
        None => Outcome::BudgetExhausted,
    };
    Ok(search.finish(outcome, start))
}

const NONE: usize = usize::MAX;

fn full(k: usize) -> u64 {
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

#[derive(Clone)]
struct State {
    dom: Vec<u64>,
    col: Vec<usize>,
    used: u64,
}

struct Search<'a> {
    g: &'a AbstractGraph,
    k: usize,
    budget: Option<u64>,
    nodes: u64,
    /// Colors that appear in the pre-coloring; never interchangeable.
    pinned: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a AbstractGraph, k: usize, budget: Option<u64>) -> Self {
        Search {
            g,
            k,
            budget,
            nodes: 0,
            pinned: 0,
        }
    }

    fn finish(&self, result: Outcome, start: Instant) -> SolveReport {
        SolveReport {
            result,
            nodes: self.nodes,
            elapsed: start.elapsed(),
        }
    }

    /// Colors `v` with `c` and propagates singleton domains. False on conflict.
    fn assign(&self, s: &mut State, v: usize, c: usize) -> bool {
        if s.col[v] != NONE {
            return s.col[v] == c;
        }
        if s.dom[v] >> c & 1 == 0 {
            return false;
        }
        s.col[v] = c;
        s.dom[v] = 1 << c;
        s.used |= 1 << c;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            let cx = s.col[x];
            for &w in self.g.neighbors(x) {
                if s.col[w] == cx {
                    return false;
                }
                if s.col[w] == NONE && s.dom[w] >> cx & 1 == 1 {
                    s.dom[w] &= !(1 << cx);
                    match s.dom[w].count_ones() {
                        0 => return false,
                        1 => {
                            let cw = s.dom[w].trailing_zeros() as usize;
                            s.col[w] = cw;
                            s.used |= 1 << cw;
                            stack.push(w);
                        }
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// `None` when the budget runs out; otherwise the search result.
    fn run(&mut self, s: State) -> Option<Option<Coloring>> {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return None;
            }
        }
        let mut best = NONE;
        let mut key = (u32::MAX, 0usize);
        for v in 0..self.g.len() {
            if s.col[v] != NONE {
                continue;
            }
            let size = s.dom[v].count_ones();
            let free = self.g.neighbors(v).iter().filter(|&&w| s.col[w] == NONE).count();
            if size < key.0 || (size == key.0 && free > key.1) {
                key = (size, free);
                best = v;
            }
        }
        if best == NONE {
            return Some(Some(s.col));
        }
        let v = best;
        let interchangeable = full(self.k) & !self.pinned;
        let mut tried_fresh = false;
        for c in 0..self.k {
            if s.dom[v] >> c & 1 == 0 {
                continue;
            }
            let fresh = interchangeable >> c & 1 == 1 && s.used >> c & 1 == 0;
            if fresh {
                if tried_fresh {
                    continue;
                }
                tried_fresh = true;
            }
            let mut next = s.clone();
            if self.assign(&mut next, v, c) {
                match self.run(next)? {
                    Some(col) => return Some(Some(col)),
                    None => {}
                }
            }
        }
        Some(None)
    }
}

/// A maximal clique grown greedily from each vertex; the largest is returned.
pub fn greedy_clique<G: AsRef<AbstractGraph> + ?Sized>(g: &G) -> Vec<usize> {
    let g = g.as_ref();
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = Vec::new();
    for &seed in &order {
        let mut clique = vec![seed];
        for &v in &order {
            if v != seed && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Number of colors used by a greedy DSATUR coloring.
pub fn greedy_color_count<G: AsRef<AbstractGraph> + ?Sized>(g: &G) -> usize {
    let g = g.as_ref();
    let n = g.len();
    let mut col = vec![NONE; n];
    let mut sat = vec![0u128; n];
    let mut max = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| col[v] == NONE)
            .max_by_key(|&v| (sat[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let mut c = 0;
        while c < 128 && sat[v] >> c & 1 == 1 {
            c += 1;
        }
        col[v] = c;
        max = max.max(c + 1);
        for &w in g.neighbors(v) {
            if c < 128 {
                sat[w] |= 1 << c;
            }
        }
    }
    max
}

/// The least `k` for which `g` is `k`-colorable.
pub fn chromatic_number<G: AsRef<AbstractGraph> + ?Sized>(g: &G) -> usize {
    let g = g.as_ref();
    if g.is_empty() {
        return 0;
    }
    let lower = greedy_clique(g).len();
    let upper = greedy_color_count(g);
    for k in lower..upper {
        let r = is_k_colorable(g, k, &[]).expect("no pre-coloring to reject");
        if r.is_colorable() {
            return k;
        }
    }
    upper
}

/// True iff `g` is `k`-colorable and every `k`-coloring gives `u` and `v`
/// the same color.
pub fn forced_pair<G: AsRef<AbstractGraph> + ?Sized>(
    g: &G,
    k: usize,
    u: usize,
    v: usize,
) -> Result<bool> {
    let g = g.as_ref();
    for x in [u, v] {
        if x >= g.len() {
            return Err(Error::VertexOutOfRange(x));
        }
    }
    if u == v || g.has_edge(u, v) {
        return Err(Error::AdjacentPair(u, v));
    }
    if !is_k_colorable(g, k, &[])?.is_colorable() {
        return Ok(false);
    }
    Ok(!is_k_colorable(&g.with_edge(u, v), k, &[])?.is_colorable())
}

/// Largest graph accepted by [`brute_force_count`].
pub const BRUTE_FORCE_LIMIT: usize = 16;

/// Counts proper `k`-colorings by plain enumeration in vertex order.
pub fn brute_force_count<G: AsRef<AbstractGraph> + ?Sized>(g: &G, k: usize) -> Result<u64> {
    let g = g.as_ref();
    let n = g.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge(n, BRUTE_FORCE_LIMIT));
    }
    fn count(g: &AbstractGraph, k: usize, col: &mut Vec<usize>) -> u64 {
        let v = col.len();
        if v == g.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if g.neighbors(v).iter().all(|&w| w >= v || col[w] != c) {
                col.push(c);
                total += count(g, k, col);
                col.pop();
            }
        }
        total
    }
    Ok(count(g, k, &mut Vec::with_capacity(n)))
}

/// Parses `0:blue,1:3` style pre-colorings. Named colors are red, purple,
/// green and blue (0 to 3); other colors are given by index.
pub fn parse_precolor(s: &str) -> Result<Vec<(usize, usize)>> {
    let bad = || Error::InvalidPrecolor(format!("cannot read `{s}`"));
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|part| {
            let (v, c) = part.split_once(':').ok_or_else(bad)?;
            let v: usize = v.trim().parse().map_err(|_| bad())?;
            let c = match c.trim() {
                "red" => 0,
                "purple" => 1,
                "green" => 2,
                "blue" => 3,
                other => other.parse().map_err(|_| bad())?,
            };
            Ok((v, c))
        })
        .collect()
}
