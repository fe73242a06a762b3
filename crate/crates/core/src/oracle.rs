//! Brute-force ground truth for small graphs (at most 64 vertices, and far
//! fewer in practice). Nothing here shares code with the fast pipeline beyond
//! the `Graph` type and the template table.

use crate::certificate::Obstruction;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Forbidden,
    Completion,
}

/// Nonprobes and completion set.
pub type Completion = (Vec<usize>, Vec<(usize, usize)>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub member: bool,
    /// Template found and its vertices, ascending.
    pub obstruction: Option<(Obstruction, Vec<usize>)>,
    /// Nonprobes and completion set, when membership was shown constructively.
    pub completion: Option<Completion>,
    pub basis: Basis,
}

fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "oracles are limited to 64 vertices");
    g.adjacency_masks()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// Graph on `n` vertices whose edges are the set bits of `mask`, pairs
/// `(u, v)` with `u < v` numbered lexicographically.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("mask encodes a simple graph")
}

/// Every labeled graph on `n <= 8` vertices.
pub fn small_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8);
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |m| graph_from_mask(n, m))
}

/// All `(K, S)` with `K` a clique, `S` a maximum independent set, `K`
/// complete to `S` and `K + S = V`; `None` if there is none.
pub fn brute_complete_split(g: &Graph) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
    let n = g.n();
    assert!(n <= 20);
    let adj = masks(g);
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let independent = |s: u64| bits(s).all(|v| adj[v] & s == 0);
    let alpha = (0..=full)
        .filter(|&s| independent(s))
        .map(|s| s.count_ones())
        .max()
        .unwrap_or(0);
    let mut out = Vec::new();
    for s in 0..=full {
        if s.count_ones() != alpha || !independent(s) {
            continue;
        }
        let k = full & !s;
        let ok = bits(k).all(|v| (k & !(1 << v)) & !adj[v] == 0 && s & !adj[v] == 0);
        if ok {
            out.push((bits(k).collect(), bits(s).collect()));
        }
    }
    (!out.is_empty()).then_some(out)
}

/// Every component of every open neighborhood is complete split.
pub fn brute_is_lucs(g: &Graph) -> bool {
    let adj = masks(g);
    for v in g.vertices() {
        let mut left = adj[v];
        while left != 0 {
            let mut comp = 1u64 << left.trailing_zeros();
            loop {
                let grown = bits(comp).fold(comp, |acc, x| acc | (adj[x] & adj[v]));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            let vs: Vec<usize> = bits(comp).collect();
            if brute_complete_split(&g.induced_subgraph(&vs)).is_none() {
                return false;
            }
        }
    }
    true
}

/// Induced diamonds as `[tip, non-tip, non-tip, tip]`, both pairs ascending,
/// found by scanning every 4-subset.
pub fn enumerate_diamonds(g: &Graph) -> Vec<[usize; 4]> {
    let adj = masks(g);
    let n = g.n();
    let e = |a: usize, b: usize| adj[a] >> b & 1 == 1;
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let mut missing = Vec::new();
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if !e(q[i], q[j]) {
                                missing.push((q[i], q[j]));
                            }
                        }
                    }
                    if let [(x, y)] = missing[..] {
                        let mut mid: Vec<usize> = q.iter().copied().filter(|&z| z != x && z != y).collect();
                        mid.sort_unstable();
                        out.push([x, mid[0], mid[1], y]);
                    }
                }
            }
        }
    }
    out
}

/// Vertices that are a tip of some induced diamond.
pub fn brute_tips(g: &Graph) -> Vec<usize> {
    let mut t: Vec<usize> = enumerate_diamonds(g).iter().flat_map(|d| [d[0], d[3]]).collect();
    t.sort_unstable();
    t.dedup();
    t
}

/// Tip pairs of induced diamonds, ascending.
pub fn brute_co_tip_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut p: Vec<(usize, usize)> = enumerate_diamonds(g).iter().map(|d| (d[0], d[3])).collect();
    p.sort_unstable();
    p.dedup();
    p
}

/// Ordered embedding of `ob`: `q[i]` plays template position `i + 1`, so the
/// result passes order-sensitive verification.
pub fn find_induced(g: &Graph, ob: Obstruction) -> Option<Vec<usize>> {
    let adj = masks(g);
    let t = ob.graph();
    let tadj = t.adjacency_masks();
    let k = t.n();
    let mut map = Vec::with_capacity(k);
    let mut used = 0u64;
    fn go(adj: &[u64], tadj: &[u64], k: usize, map: &mut Vec<usize>, used: &mut u64) -> bool {
        let i = map.len();
        if i == k {
            return true;
        }
        let need = tadj[i].count_ones();
        for v in 0..adj.len() {
            if *used >> v & 1 == 1 || adj[v].count_ones() < need {
                continue;
            }
            let fits = map
                .iter()
                .enumerate()
                .all(|(j, &u)| (adj[v] >> u & 1) == (tadj[i] >> j & 1));
            if !fits {
                continue;
            }
            map.push(v);
            *used |= 1 << v;
            if go(adj, tadj, k, map, used) {
                return true;
            }
            map.pop();
            *used &= !(1 << v);
        }
        false
    }
    go(&adj, &tadj, k, &mut map, &mut used).then_some(map)
}

/// Membership by absence of all 17 templates, smallest first.
pub fn oracle_forbidden(g: &Graph) -> OracleVerdict {
    let mut order: Vec<Obstruction> = Obstruction::all().to_vec();
    order.sort_by_key(|o| (o.order(), o.indicator()));
    for ob in order {
        if ob.order() > g.n() {
            continue;
        }
        if let Some(mut q) = find_induced(g, ob) {
            q.sort_unstable();
            return OracleVerdict {
                member: false,
                obstruction: Some((ob, q)),
                completion: None,
                basis: Basis::Forbidden,
            };
        }
    }
    OracleVerdict {
        member: true,
        obstruction: None,
        completion: None,
        basis: Basis::Forbidden,
    }
}

fn diamond_free_masks(adj: &[u64]) -> bool {
    for u in 0..adj.len() {
        for v in bits(adj[u]).filter(|&v| v > u) {
            let common = adj[u] & adj[v];
            if bits(common).any(|x| common & !adj[x] & !(1 << x) != 0) {
                return false;
            }
        }
    }
    true
}

/// Least set of added edges forced by repeatedly filling the missing edge of
/// every diamond until none is left. Any completion that removes all
/// diamonds must contain it.
pub fn forced_completion(g: &Graph) -> Vec<(usize, usize)> {
    let mut adj = masks(g);
    let n = g.n();
    let mut forced = Vec::new();
    loop {
        let mut added = false;
        for a in 0..n {
            for b in a + 1..n {
                if adj[a] >> b & 1 == 1 {
                    continue;
                }
                let common = adj[a] & adj[b];
                if bits(common).any(|x| adj[x] & common != 0) {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    forced.push((a, b));
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    debug_assert!(diamond_free_masks(&adj));
    forced.sort_unstable();
    forced
}

/// Membership straight from the definition: some independent `N` and set
/// `F` of pairs inside `N` make `G + F` diamond-free. Decided through the
/// forced completion, which is valid iff its endpoints are independent.
pub fn oracle_completion(g: &Graph) -> OracleVerdict {
    let forced = forced_completion(g);
    let mut nodes: Vec<usize> = forced.iter().flat_map(|&(a, b)| [a, b]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    let independent = nodes.iter().all(|&u| nodes.iter().all(|&v| !g.has_edge(u, v)));
    OracleVerdict {
        member: independent,
        obstruction: None,
        completion: independent.then_some((nodes, forced)),
        basis: Basis::Completion,
    }
}

/// Every valid `(N, F)` by plain enumeration; only for `n <= 6`.
pub fn exhaustive_completions(g: &Graph) -> Vec<Completion> {
    let n = g.n();
    assert!(n <= 6, "exhaustive completion search is limited to 6 vertices");
    let adj = masks(g);
    let mut out = Vec::new();
    for nm in 0..1u64 << n {
        if bits(nm).any(|v| adj[v] & nm != 0) {
            continue;
        }
        let nv: Vec<usize> = bits(nm).collect();
        let pairs: Vec<(usize, usize)> = nv
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| nv[i + 1..].iter().map(move |&b| (a, b)))
            .collect();
        for fm in 0..1u64 << pairs.len() {
            let mut h = adj.clone();
            let f: Vec<(usize, usize)> = bits(fm).map(|k| pairs[k]).collect();
            for &(a, b) in &f {
                h[a] |= 1 << b;
                h[b] |= 1 << a;
            }
            if diamond_free_masks(&h) {
                out.push((nv.clone(), f));
            }
        }
    }
    out
}

/// Isomorphism by backtracking over degree-compatible vertex maps.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == g.n() {
            return true;
        }
        for x in h.vertices() {
            if used[x] || h.degree(x) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], x)) {
                continue;
            }
            map[v] = x;
            used[x] = true;
            if go(g, h, v + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
        false
    }
    go(g, h, 0, &mut map, &mut used)
}

/// 6-cycles of a bipartite graph by direct search; `None` if there is none.
pub fn brute_six_cycle(b: &Graph) -> Option<[usize; 6]> {
    let mut path = Vec::with_capacity(6);
    fn go(b: &Graph, path: &mut Vec<usize>) -> bool {
        let last = *path.last().expect("non-empty");
        if path.len() == 6 {
            return b.has_edge(last, path[0]);
        }
        for &w in b.neighbors(last) {
            if w > path[0] && !path.contains(&w) {
                path.push(w);
                if go(b, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    for s in b.vertices() {
        path.clear();
        path.push(s);
        if go(b, &mut path) {
            return path.clone().try_into().ok();
        }
    }
    None
}
