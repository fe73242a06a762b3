//! Complete split graphs: recognition from degrees, and extraction of a
//! 5-vertex obstruction when a neighborhood component is not complete split.

use std::collections::VecDeque;

use crate::error::PreconditionError;
use crate::graph::Graph;

/// Clique/independent partition `(K, S)` of a complete split graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    /// Clique side, ascending.
    pub clique: Vec<usize>,
    /// Independent side (a maximum independent set), ascending.
    pub independent: Vec<usize>,
}

impl SplitPartition {
    /// A special component is complete: `|S| = 1`.
    pub fn is_special(&self) -> bool {
        self.independent.len() == 1
    }
}

/// Degree test for complete split graphs.
///
/// `vertices` and `degrees` describe one graph (degrees taken inside it).
/// The graph is complete split iff all degrees are `n-1`, or all are `0`, or
/// the degree set is exactly `{n-1, k}` where `k` is the number of vertices of
/// degree `n-1`. For a complete graph the independent side is the minimum id.
pub fn csda(vertices: &[usize], degrees: &[usize]) -> Option<SplitPartition> {
    assert_eq!(vertices.len(), degrees.len());
    let n = vertices.len();
    if n == 0 {
        return Some(SplitPartition {
            clique: Vec::new(),
            independent: Vec::new(),
        });
    }
    let full = n - 1;
    let universal = degrees.iter().filter(|&&d| d == full).count();
    if universal == n {
        let rep = *vertices.iter().min().expect("non-empty");
        let mut clique: Vec<usize> = vertices.iter().copied().filter(|&v| v != rep).collect();
        clique.sort_unstable();
        return Some(SplitPartition {
            clique,
            independent: vec![rep],
        });
    }
    if degrees.iter().all(|&d| d == 0) {
        let mut independent = vertices.to_vec();
        independent.sort_unstable();
        return Some(SplitPartition {
            clique: Vec::new(),
            independent,
        });
    }
    let k = universal;
    if k == 0 || k >= full || degrees.iter().any(|&d| d != full && d != k) {
        return None;
    }
    let mut clique = Vec::with_capacity(k);
    let mut independent = Vec::with_capacity(n - k);
    for (&v, &d) in vertices.iter().zip(degrees) {
        if d == full {
            clique.push(v);
        } else {
            independent.push(v);
        }
    }
    clique.sort_unstable();
    independent.sort_unstable();
    Some(SplitPartition { clique, independent })
}

/// [`csda`] applied to a whole graph.
pub fn csda_graph(g: &Graph) -> Option<SplitPartition> {
    let vertices: Vec<usize> = g.vertices().collect();
    let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    csda(&vertices, &degrees)
}

/// Result of a stopped breadth-first search: an induced `P4` (indicator 1)
/// ordered `[mid, mid, end, end]`, or an induced paw (indicator 3) ordered
/// `[center, twin, twin, pendant]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfsObstruction {
    pub indicator: u8,
    pub vertices: [usize; 4],
}

/// BFS from `z` that stops at the first of `x`, `y` to be discovered.
///
/// With `a` the vertex found, `b` the other one, `c` the BFS parent of `a`
/// and `d` the parent of `c`, returns `(1, [c, a, d, b])` when `cb` is not an
/// edge and `(3, [c, a, b, d])` otherwise.
pub fn stopped_bfs(g: &Graph, z: usize, x: usize, y: usize) -> Result<BfsObstruction, PreconditionError> {
    stopped_bfs_without(g, z, x, y, None, &mut 0)
}

pub(crate) fn stopped_bfs_without(
    g: &Graph,
    z: usize,
    x: usize,
    y: usize,
    skip: Option<usize>,
    dequeues: &mut u64,
) -> Result<BfsObstruction, PreconditionError> {
    let n = g.n();
    if z >= n || x >= n || y >= n {
        return Err(PreconditionError::new("vertex out of range"));
    }
    if !g.has_edge(x, y) {
        return Err(PreconditionError::new(format!("{x}{y} is not an edge")));
    }
    if z == x || z == y || g.has_edge(z, x) || g.has_edge(z, y) {
        return Err(PreconditionError::new(format!(
            "{z} must be non-adjacent to {x} and {y}"
        )));
    }
    if skip.is_some_and(|s| s == z || s == x || s == y) {
        return Err(PreconditionError::new("search endpoints must not be removed"));
    }
    let mut parent = vec![usize::MAX; n];
    parent[z] = z;
    if let Some(s) = skip {
        parent[s] = s;
    }
    let mut queue = VecDeque::from([z]);
    while let Some(c) = queue.pop_front() {
        *dequeues += 1;
        for &w in g.neighbors(c) {
            if parent[w] != usize::MAX {
                continue;
            }
            parent[w] = c;
            if w == x || w == y {
                let a = w;
                let b = if a == x { y } else { x };
                let d = parent[c];
                return Ok(if g.has_edge(c, b) {
                    BfsObstruction {
                        indicator: 3,
                        vertices: [c, a, b, d],
                    }
                } else {
                    BfsObstruction {
                        indicator: 1,
                        vertices: [c, a, d, b],
                    }
                });
            }
            queue.push_back(w);
        }
    }
    Err(PreconditionError::new(format!("{x} and {y} are unreachable from {z}")))
}

/// Ordered 5-vertex obstruction to complete-splitness of a neighborhood:
/// indicator 1 (gem), 2 (`W4`) or 3 (paw plus a universal vertex). The first
/// vertex is always the universal one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitObstruction {
    pub indicator: u8,
    pub vertices: [usize; 5],
}

/// `h` must be connected and not complete split, with `x` universal and
/// `h - x` connected.
pub fn non_complete_split(h: &Graph, x: usize) -> Result<SplitObstruction, PreconditionError> {
    non_complete_split_counted(h, x, &mut 0)
}

pub(crate) fn non_complete_split_counted(
    h: &Graph,
    x: usize,
    dequeues: &mut u64,
) -> Result<SplitObstruction, PreconditionError> {
    let n = h.n();
    if x >= n || h.degree(x) + 1 != n {
        return Err(PreconditionError::new(format!("vertex {x} is not universal")));
    }
    let low: Vec<bool> = h.vertices().map(|v| h.degree(v) + 1 < n).collect();
    let in_low = |v: usize| low[v];
    let (a, b) = h
        .vertices()
        .filter(|&v| in_low(v))
        .find_map(|a| h.neighbors(a).iter().find(|&&b| b > a && in_low(b)).map(|&b| (a, b)))
        .ok_or_else(|| PreconditionError::new("graph is complete split"))?;
    let first_non_neighbor = |of: usize| {
        h.vertices()
            .find(|&v| v != of && in_low(v) && !h.has_edge(of, v))
            .expect("a vertex of degree < n-1 has a non-neighbor of degree < n-1")
    };
    let a2 = first_non_neighbor(a);
    let body = if !h.has_edge(a2, b) {
        bfs_body(h, a2, a, b, x, dequeues)?
    } else {
        let b2 = first_non_neighbor(b);
        if !h.has_edge(b2, a) {
            bfs_body(h, b2, a, b, x, dequeues)?
        } else {
            let indicator = if h.has_edge(a2, b2) { 2 } else { 1 };
            (indicator, [a, b, b2, a2])
        }
    };
    let (indicator, q) = body;
    Ok(SplitObstruction {
        indicator,
        vertices: [x, q[0], q[1], q[2], q[3]],
    })
}

fn bfs_body(
    h: &Graph,
    z: usize,
    a: usize,
    b: usize,
    skip: usize,
    dequeues: &mut u64,
) -> Result<(u8, [usize; 4]), PreconditionError> {
    let found = stopped_bfs_without(h, z, a, b, Some(skip), dequeues)?;
    Ok((found.indicator, found.vertices))
}
