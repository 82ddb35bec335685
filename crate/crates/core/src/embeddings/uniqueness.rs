//! Exhaustive check that `W6` is the only `K4`-free 4-chromatic graph on six
//! vertices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::chromatic_number;
use crate::graphs::AbstractGraph;

const N: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    /// Labeled graphs examined (all `2^15`).
    pub labeled_graphs: usize,
    /// Labeled graphs that are `K4`-free with chromatic number 4.
    pub labeled_matches: usize,
    /// One witness edge list per isomorphism class of matches.
    pub classes: Vec<Vec<(usize, usize)>>,
    /// Whether the single class is the wheel with five spokes.
    pub is_wheel: bool,
}

impl UniquenessReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

fn pairs() -> Vec<(usize, usize)> {
    (0..N).flat_map(|u| (u + 1..N).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least edge mask over all relabelings.
fn canonical(mask: u32, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    let index = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        pairs.iter().position(|&p| p == (a, b)).expect("pair of distinct vertices")
    };
    perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(e, _)| mask >> e & 1 == 1)
                .fold(0u32, |m, (_, &(u, v))| m | 1 << index(p[u], p[v]))
        })
        .min()
        .expect("at least one permutation")
}

pub fn verify_w6_uniqueness() -> UniquenessReport {
    let pairs = pairs();
    let perms = permutations(N);
    let total = 1usize << pairs.len();
    let mut classes: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    let mut matches = 0;
    for mask in 0..total as u32 {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(e, _)| mask >> e & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = AbstractGraph::new(N, edges.iter().copied());
        if g.contains_k4() || chromatic_number(&g) != 4 {
            continue;
        }
        matches += 1;
        classes.entry(canonical(mask, &pairs, &perms)).or_insert(edges);
    }
    let classes: Vec<Vec<(usize, usize)>> = classes.into_values().collect();
    let is_wheel = classes.len() == 1 && {
        let g = AbstractGraph::new(N, classes[0].iter().copied());
        let mut degrees = g.degree_sequence();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees == [5, 3, 3, 3, 3, 3] && g.edge_count() == 10
    };
    UniquenessReport {
        labeled_graphs: total,
        labeled_matches: matches,
        classes,
        is_wheel,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::brute_force_count;

    #[test]
    fn exactly_one_class_and_it_is_the_wheel() {
        let r = verify_w6_uniqueness();
        assert_eq!(r.labeled_graphs, 1 << 15);
        assert_eq!(r.class_count(), 1);
        assert!(r.is_wheel);
    }

    #[test]
    fn sanity_cases_are_excluded() {
        assert!(AbstractGraph::complete(4).contains_k4());
        let w = AbstractGraph::wheel(6);
        let spoke = w.edges()[0];
        let broken = AbstractGraph::new(6, w.edges().into_iter().filter(|&e| e != spoke));
        assert!(brute_force_count(&broken, 3).unwrap() > 0);
        assert_eq!(chromatic_number(&broken), 3);
    }
}
