//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::Obstruction;
use crate::graph::Graph;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)` edges in ascending order, sampled by geometric
/// skipping so the cost is proportional to the output.
pub fn gnp_edges<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Vec<(usize, usize)> {
    assert!((0.0..=1.0).contains(&p), "edge probability must lie in [0, 1]");
    let mut edges = Vec::new();
    if n < 2 || p == 0.0 {
        return edges;
    }
    if p == 1.0 {
        for v in 1..n {
            edges.extend((0..v).map(|u| (u, v)));
        }
        return edges;
    }
    let log_q = (1.0 - p).ln();
    let (mut v, mut w) = (1usize, -1i64);
    loop {
        let r: f64 = rng.random();
        let skip = ((1.0 - r).ln() / log_q).floor();
        w += 1 + if skip.is_finite() && skip < 1e15 {
            skip as i64
        } else {
            i64::MAX / 4
        };
        while v < n && w >= v as i64 {
            w -= v as i64;
            v += 1;
        }
        if v >= n {
            break;
        }
        edges.push((w as usize, v));
    }
    edges.sort_unstable();
    edges
}

pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    Graph::from_edges(n, gnp_edges(n, p, rng)).expect("generated edges are simple")
}

/// Diamond-free graph: `G(n, p)` candidate edges in random order, each kept
/// only if it creates no induced diamond.
pub fn diamond_free<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut candidates = gnp_edges(n, p, rng);
    candidates.shuffle(rng);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut kept = Vec::new();
    for (u, v) in candidates {
        adj[u].push(v);
        adj[v].push(u);
        if creates_diamond(&adj, u, v) {
            adj[u].pop();
            adj[v].pop();
        } else {
            kept.push((u, v));
        }
    }
    Graph::from_edges(n, kept).expect("generated edges are simple")
}

// Every vertex of a diamond through uv is adjacent to u or v.
fn creates_diamond(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    let has = |a: usize, b: usize| adj[a].contains(&b);
    let mut around: Vec<usize> = adj[u]
        .iter()
        .chain(&adj[v])
        .copied()
        .filter(|&x| x != u && x != v)
        .collect();
    around.sort_unstable();
    around.dedup();
    for (i, &x) in around.iter().enumerate() {
        for &y in &around[i + 1..] {
            let q = [u, v, x, y];
            let mut edges = 0;
            for a in 0..4 {
                for b in a + 1..4 {
                    edges += usize::from(has(q[a], q[b]));
                }
            }
            if edges == 5 {
                return true;
            }
        }
    }
    false
}

/// A member by construction: a diamond-free graph with the edges inside a
/// random vertex subset deleted. Returns the graph, the subset and the
/// deleted edges (which complete it back).
pub fn planted_yes_with_witness<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
) -> (Graph, Vec<usize>, Vec<(usize, usize)>) {
    let base = diamond_free(n, p, rng);
    let chosen: Vec<bool> = (0..n).map(|_| rng.random_bool(0.3)).collect();
    let (inside, kept): (Vec<_>, Vec<_>) = base.edges().partition(|&(u, v)| chosen[u] && chosen[v]);
    let g = Graph::from_edges(n, kept).expect("subset of a simple graph");
    let nonprobes = (0..n).filter(|&v| chosen[v]).collect();
    (g, nonprobes, inside)
}

pub fn planted_yes<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    planted_yes_with_witness(n, p, rng).0
}

/// A non-member by construction: a planted member on `n - k` vertices plus
/// an induced copy of `ob` on `k` more, randomly wired to the rest and
/// randomly relabeled.
pub fn planted_no<R: Rng + ?Sized>(n: usize, p: f64, ob: Obstruction, rng: &mut R) -> Graph {
    let k = ob.order();
    assert!(n >= k, "{ob} needs at least {k} vertices");
    let base = planted_yes(n - k, p, rng);
    let offset = n - k;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    edges.extend(ob.edges().into_iter().map(|(a, b)| (offset + a - 1, offset + b - 1)));
    for t in offset..n {
        for u in 0..offset {
            if rng.random_bool(p) {
                edges.push((u, t));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b]))).expect("planted graph is simple")
}
