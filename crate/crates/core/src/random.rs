//! Random semigraph generators for property and batch testing.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Semigraph;

/// A random valid semigraph on `n` vertices with edge sizes drawn from
/// `sizes`. Candidate edges that would share two vertices with an accepted
/// edge are dropped, so the edge count is at most `attempts`.
pub fn random_semigraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    sizes: std::ops::RangeInclusive<usize>,
    attempts: usize,
) -> Semigraph {
    let mut used_pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let ids: Vec<usize> = (1..=n).collect();
    for _ in 0..attempts {
        let size = rng.gen_range(sizes.clone());
        if size > n {
            continue;
        }
        let edge: Vec<usize> = ids.choose_multiple(rng, size).copied().collect();
        let pairs: Vec<(usize, usize)> = (0..size)
            .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
            .map(|(i, j)| (edge[i].min(edge[j]), edge[i].max(edge[j])))
            .collect();
        if pairs.iter().any(|p| used_pairs.contains(p)) {
            continue;
        }
        used_pairs.extend(pairs);
        edges.push(edge);
    }
    Semigraph::new(n, &edges).expect("generator keeps edges pairwise compatible")
}

/// A random ordinary graph: each of the `n(n−1)/2` pairs is an edge with
/// probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Semigraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push([u, v]);
            }
        }
    }
    Semigraph::new(n, &edges).expect("simple graph edges are distinct pairs")
}

/// A uniformly random permutation of `1..=n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    perm
}
