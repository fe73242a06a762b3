//! Compact undirected simple graphs.
//!
//! Vertices are `0..n`. Adjacency is stored in CSR form with every neighbor
//! list strictly ascending, so "pick any vertex" choices made elsewhere in the
//! crate always resolve to the minimum id.

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for (u, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        Ok(Graph { offsets, targets })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    /// Chordless cycle `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Neighbors of `v` in ascending order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge test by binary search over the shorter list.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            let list = self.neighbors(u);
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&w| (u, w))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Panics on duplicates or out-of-range ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            assert_eq!(position[v], usize::MAX, "duplicate vertex {v}");
            position[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = position[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Same graph with extra edges added; fails if any of them already exists.
    pub fn with_added_edges(&self, extra: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n(), self.edges().chain(extra.iter().copied()))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    /// Edge set as `u64` bitmask rows; only for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask rows need n <= 64");
        self.vertices()
            .map(|v| self.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
            .collect()
    }
}

/// Text formats accepted by [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    /// Header `n m`, then `m` lines `u v` with 0-indexed vertices.
    #[default]
    Edgelist,
    /// `p edge n m` plus `e u v` lines with 1-indexed vertices.
    Dimacs,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(Format::Edgelist),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(format!("unknown format '{other}' (expected edgelist or dimacs)")),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_usize(tok: &str, line: usize, content: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::new(line, content, format!("expected a non-negative integer, found '{tok}'")))
}

struct EdgeCollector {
    n: usize,
    declared_m: usize,
    seen: std::collections::HashSet<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl EdgeCollector {
    fn new(n: usize, declared_m: usize) -> Self {
        EdgeCollector {
            n,
            declared_m,
            seen: std::collections::HashSet::with_capacity(declared_m),
            edges: Vec::with_capacity(declared_m),
        }
    }

    fn push(&mut self, u: usize, v: usize, line: usize, content: &str) -> Result<(), ParseError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(ParseError::new(
                    line,
                    content,
                    format!("vertex {w} out of range for n = {}", self.n),
                ));
            }
        }
        if u == v {
            return Err(ParseError::new(line, content, format!("self-loop on vertex {u}")));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::new(line, content, format!("duplicate edge {u} {v}")));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self, last_line: usize) -> Result<Graph, ParseError> {
        if self.edges.len() != self.declared_m {
            return Err(ParseError::new(
                last_line,
                "",
                format!(
                    "header declares {} edges but {} were given",
                    self.declared_m,
                    self.edges.len()
                ),
            ));
        }
        Ok(Graph::from_edges(self.n, self.edges).expect("edges validated while parsing"))
    }
}

fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut collector: Option<EdgeCollector> = None;
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            let what = if collector.is_none() {
                "header 'n m'"
            } else {
                "edge 'u v'"
            };
            return Err(ParseError::new(line, raw, format!("expected {what}")));
        }
        let a = parse_usize(toks[0], line, raw)?;
        let b = parse_usize(toks[1], line, raw)?;
        match collector.as_mut() {
            None => collector = Some(EdgeCollector::new(a, b)),
            Some(c) => c.push(a, b, line, raw)?,
        }
    }
    collector
        .ok_or_else(|| ParseError::new(last.max(1), "", "missing header 'n m'".to_string()))?
        .finish(last)
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut collector: Option<EdgeCollector> = None;
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if collector.is_some() {
                    return Err(ParseError::new(line, raw, "second problem line".to_string()));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(ParseError::new(line, raw, "expected 'p edge n m'".to_string()));
                }
                let n = parse_usize(toks[2], line, raw)?;
                let m = parse_usize(toks[3], line, raw)?;
                collector = Some(EdgeCollector::new(n, m));
            }
            "e" => {
                let Some(c) = collector.as_mut() else {
                    return Err(ParseError::new(line, raw, "edge line before 'p edge n m'".to_string()));
                };
                if toks.len() != 3 {
                    return Err(ParseError::new(line, raw, "expected 'e u v'".to_string()));
                }
                let u = parse_usize(toks[1], line, raw)?;
                let v = parse_usize(toks[2], line, raw)?;
                if u == 0 || v == 0 {
                    return Err(ParseError::new(line, raw, "DIMACS vertices are 1-indexed".to_string()));
                }
                c.push(u - 1, v - 1, line, raw)?;
            }
            other => {
                return Err(ParseError::new(line, raw, format!("unknown line type '{other}'")));
            }
        }
    }
    collector
        .ok_or_else(|| ParseError::new(last.max(1), "", "missing 'p edge n m' line".to_string()))?
        .finish(last)
}

/// Serializes in normalized form: header then edges `u < v` in ascending order.
pub fn write_graph(g: &Graph, format: Format) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    match format {
        Format::Edgelist => {
            let _ = writeln!(out, "{} {}", g.n(), g.m());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        Format::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}

/// Set over `0..n` with O(1) clear, implemented by generation stamps.
#[derive(Clone, Debug)]
pub(crate) struct StampSet {
    stamp: Vec<u32>,
    epoch: u32,
}

impl StampSet {
    pub(crate) fn new(n: usize) -> Self {
        StampSet {
            stamp: vec![0; n],
            epoch: 1,
        }
    }

    pub(crate) fn clear(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    #[inline]
    pub(crate) fn insert(&mut self, v: usize) {
        self.stamp[v] = self.epoch;
    }

    #[inline]
    pub(crate) fn contains(&self, v: usize) -> bool {
        self.stamp[v] == self.epoch
    }
}

/// One connected component of `G[N(anchor)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentView {
    pub anchor: usize,
    /// Ascending vertex ids.
    pub vertices: Vec<usize>,
    /// `degrees[i]` is the degree of `vertices[i]` inside the component.
    pub degrees: Vec<usize>,
}

impl ComponentView {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }
}

/// Decomposes open neighborhoods into connected components, reusing scratch
/// buffers across calls. Each scan of `v` costs `O(sum of d(u) for u in N(v))`.
#[derive(Clone, Debug)]
pub struct NeighborhoodScanner {
    in_nbhd: StampSet,
    comp_of: Vec<usize>,
    local_degree: Vec<usize>,
    queue: Vec<usize>,
    /// Adjacency entries inspected so far.
    pub scanned: u64,
}

impl NeighborhoodScanner {
    pub fn new(n: usize) -> Self {
        NeighborhoodScanner {
            in_nbhd: StampSet::new(n),
            comp_of: vec![usize::MAX; n],
            local_degree: vec![0; n],
            queue: Vec::new(),
            scanned: 0,
        }
    }

    /// Components of `G[N(v)]`, in ascending order of their minimum vertex.
    pub fn components(&mut self, g: &Graph, v: usize) -> Vec<ComponentView> {
        let nbhd = g.neighbors(v);
        self.in_nbhd.clear();
        for &u in nbhd {
            self.in_nbhd.insert(u);
            self.comp_of[u] = usize::MAX;
        }
        let mut count = 0;
        for &root in nbhd {
            if self.comp_of[root] != usize::MAX {
                continue;
            }
            self.comp_of[root] = count;
            self.queue.clear();
            self.queue.push(root);
            let mut head = 0;
            while head < self.queue.len() {
                let x = self.queue[head];
                head += 1;
                let mut deg = 0;
                let list = g.neighbors(x);
                self.scanned += list.len() as u64;
                for &y in list {
                    if self.in_nbhd.contains(y) {
                        deg += 1;
                        if self.comp_of[y] == usize::MAX {
                            self.comp_of[y] = count;
                            self.queue.push(y);
                        }
                    }
                }
                self.local_degree[x] = deg;
            }
            count += 1;
        }
        let mut comps: Vec<ComponentView> = (0..count)
            .map(|_| ComponentView {
                anchor: v,
                vertices: Vec::new(),
                degrees: Vec::new(),
            })
            .collect();
        for &u in nbhd {
            let c = &mut comps[self.comp_of[u]];
            c.vertices.push(u);
            c.degrees.push(self.local_degree[u]);
        }
        comps
    }
}

/// Connected components of `G[N(v)]`, each with ascending vertices, ordered by
/// minimum vertex.
pub fn neighborhood_components(g: &Graph, v: usize) -> Vec<ComponentView> {
    NeighborhoodScanner::new(g.n()).components(g, v)
}

/// Position pairs `(i, j)`, `1 <= i < j <= seq.len()`, with `seq[i-1]`
/// adjacent to `seq[j-1]`, in lexicographic order.
pub fn induced_ordered(g: &Graph, seq: &[usize]) -> Result<Vec<(usize, usize)>, GraphError> {
    for (i, &v) in seq.iter().enumerate() {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if seq[..i].contains(&v) {
            return Err(GraphError::DuplicateVertex { vertex: v });
        }
    }
    let mut pairs = Vec::new();
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if g.has_edge(seq[i], seq[j]) {
                pairs.push((i + 1, j + 1));
            }
        }
    }
    Ok(pairs)
}

/// Looks for an induced diamond using the fact that a graph is diamond-free
/// iff the common neighborhood of every edge is a clique.
///
/// Returns `[tip, non-tip, non-tip, tip]`, the missing edge being between the
/// first and last entries.
pub fn find_diamond(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    let mut around_u = StampSet::new(n);
    let mut common = StampSet::new(n);
    let mut members = Vec::new();
    for u in g.vertices() {
        around_u.clear();
        for &w in g.neighbors(u) {
            around_u.insert(w);
        }
        for &v in g.neighbors(u) {
            if v < u {
                continue;
            }
            members.clear();
            common.clear();
            for &w in g.neighbors(v) {
                if around_u.contains(w) {
                    members.push(w);
                    common.insert(w);
                }
            }
            for (i, &x) in members.iter().enumerate() {
                let inside = g.neighbors(x).iter().filter(|&&y| common.contains(y)).count();
                if inside + 1 < members.len() {
                    let y = members[i + 1..]
                        .iter()
                        .chain(&members[..i])
                        .copied()
                        .find(|&y| !g.has_edge(x, y))
                        .expect("a missing edge exists");
                    let (a, b) = (x.min(y), x.max(y));
                    return Some([a, u, v, b]);
                }
            }
        }
    }
    None
}

pub fn is_diamond_free(g: &Graph) -> bool {
    find_diamond(g).is_none()
}
