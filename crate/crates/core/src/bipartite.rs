//! Auxiliary bipartite graph: one representative per maximal clique of
//! diamond non-tips, joined to the tips it sees. Co-tips are exactly the
//! pairs at distance two.

use crate::error::PreconditionError;
use crate::graph::{Graph, NeighborhoodScanner};
use crate::split::csda;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxBipartite {
    n: usize,
    rep: Vec<(usize, usize)>,
    rep_adj: Vec<Vec<usize>>,
    vertex_adj: Vec<Vec<usize>>,
}

impl AuxBipartite {
    /// Expects a LUCS graph; components that are not complete split are
    /// skipped.
    pub fn build(g: &Graph) -> Self {
        let mut scanner = NeighborhoodScanner::new(g.n());
        Self::build_with(g, &mut scanner)
    }

    pub(crate) fn build_with(g: &Graph, scanner: &mut NeighborhoodScanner) -> Self {
        let n = g.n();
        let mut aux = AuxBipartite {
            n,
            rep: Vec::new(),
            rep_adj: Vec::new(),
            vertex_adj: vec![Vec::new(); n],
        };
        for i in g.vertices() {
            for comp in scanner.components(g, i) {
                let Some(p) = csda(&comp.vertices, &comp.degrees) else {
                    continue;
                };
                if p.independent.len() < 2 {
                    continue;
                }
                let j = p.clique[0];
                if j < i {
                    continue;
                }
                let a = aux.rep.len();
                for &s in &p.independent {
                    aux.vertex_adj[s].push(a);
                }
                aux.rep.push((i, j));
                aux.rep_adj.push(p.independent);
            }
        }
        aux
    }

    /// Number of G-vertices; representative `a` has bipartite id `n + a`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rep_count(&self) -> usize {
        self.rep.len()
    }

    /// The edge `(i, j)`, `i < j`, that representative `a` stands for.
    pub fn rep(&self, a: usize) -> (usize, usize) {
        self.rep[a]
    }

    /// Tips adjacent to representative `a`, ascending.
    pub fn rep_neighbors(&self, a: usize) -> &[usize] {
        &self.rep_adj[a]
    }

    /// Representatives adjacent to G-vertex `v`, ascending.
    pub fn vertex_reps(&self, v: usize) -> &[usize] {
        &self.vertex_adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.rep_adj.iter().map(Vec::len).sum()
    }

    /// The bipartite graph itself on `n + rep_count` vertices.
    pub fn to_graph(&self) -> Graph {
        let edges = self
            .rep_adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().map(move |&s| (s, self.n + a)));
        Graph::from_edges(self.n + self.rep.len(), edges).expect("bipartite graph is simple")
    }

    /// Looks for a 6-cycle `[s, a1, s', a2, s'', a3]` (tips at even
    /// positions, representatives at odd ones, reported as local indices).
    ///
    /// Runs a depth-3 BFS from each tip in ascending order. The graph must
    /// have no 4-cycle; meeting one is reported as an error.
    pub fn find_six_cycle(&self) -> Result<Option<[usize; 6]>, PreconditionError> {
        self.find_six_cycle_counted(&mut 0, &mut 0)
    }

    pub(crate) fn find_six_cycle_counted(
        &self,
        dequeues: &mut u64,
        touched_edges: &mut u64,
    ) -> Result<Option<[usize; 6]>, PreconditionError> {
        let reps = self.rep.len();
        if reps < 3 {
            return Ok(None);
        }
        // parents: level-1 rep -> source, level-2 tip -> level-1 rep,
        // level-3 rep -> level-2 tip
        let mut rep_seen = vec![u32::MAX; reps];
        let mut rep_parent = vec![usize::MAX; reps];
        let mut rep_level = vec![0u8; reps];
        let mut tip_seen = vec![u32::MAX; self.n];
        let mut tip_parent = vec![usize::MAX; self.n];
        let mut level2 = Vec::new();
        let c4 = |what: &str| {
            Err(PreconditionError::new(format!(
                "auxiliary graph has a 4-cycle ({what})"
            )))
        };
        for (round, s) in (0..self.n).filter(|&s| !self.vertex_adj[s].is_empty()).enumerate() {
            let round = round as u32;
            tip_seen[s] = round;
            *dequeues += 1;
            level2.clear();
            let first = &self.vertex_adj[s];
            *touched_edges += first.len() as u64;
            for &a in first {
                rep_seen[a] = round;
                rep_parent[a] = s;
                rep_level[a] = 1;
            }
            for &a in first {
                *dequeues += 1;
                let list = &self.rep_adj[a];
                *touched_edges += list.len() as u64;
                for &x in list {
                    if x == s {
                        continue;
                    }
                    if tip_seen[x] == round {
                        return c4("two paths of length two");
                    }
                    tip_seen[x] = round;
                    tip_parent[x] = a;
                    level2.push(x);
                }
            }
            for &x in &level2 {
                *dequeues += 1;
                let list = &self.vertex_adj[x];
                *touched_edges += list.len() as u64;
                for &b in list {
                    if b == tip_parent[x] {
                        continue;
                    }
                    if rep_seen[b] != round {
                        rep_seen[b] = round;
                        rep_parent[b] = x;
                        rep_level[b] = 3;
                        continue;
                    }
                    if rep_level[b] == 1 {
                        return c4("chord to the first level");
                    }
                    let x0 = rep_parent[b];
                    if tip_parent[x0] == tip_parent[x] {
                        return c4("shared grandparent");
                    }
                    return Ok(Some([s, tip_parent[x0], x0, b, x, tip_parent[x]]));
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{check_n_independent, detect_h4, Obstruction};
    use crate::oracle::{brute_co_tip_pairs, brute_is_lucs, is_isomorphic, small_graphs};
    use crate::roles::{assign_roles, RolesOutcome};
    use proptest::prelude::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn from_parts(n: usize, reps: Vec<Vec<usize>>) -> AuxBipartite {
        let mut vertex_adj = vec![Vec::new(); n];
        for (a, list) in reps.iter().enumerate() {
            for &s in list {
                vertex_adj[s].push(a);
            }
        }
        AuxBipartite {
            n,
            rep: vec![(0, 1); reps.len()],
            rep_adj: reps,
            vertex_adj,
        }
    }

    fn distances(g: &Graph, s: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; g.n()];
        d[s] = 0;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in g.neighbors(v) {
                if d[w] == usize::MAX {
                    d[w] = d[v] + 1;
                    q.push_back(w);
                }
            }
        }
        d
    }

    #[test]
    fn diamond_has_one_representative() {
        let aux = AuxBipartite::build(&diamond());
        assert_eq!(aux.rep_count(), 1);
        assert_eq!(aux.rep(0), (1, 2));
        assert_eq!(aux.rep_neighbors(0), &[0, 3]);
        assert_eq!(aux.find_six_cycle(), Ok(None));
    }

    #[test]
    fn diamond_free_graphs_have_no_representatives() {
        for g in [Graph::cycle(6), Graph::complete(5), Graph::path(7)] {
            assert_eq!(AuxBipartite::build(&g).rep_count(), 0);
        }
    }

    #[test]
    fn s3_gives_a_six_cycle() {
        let s3 = Obstruction::S3.graph();
        let aux = AuxBipartite::build(&s3);
        assert_eq!(aux.rep_count(), 3);
        let b = aux.to_graph();
        let with_edges: Vec<usize> = b.vertices().filter(|&v| b.degree(v) > 0).collect();
        assert_eq!(with_edges.len(), 6);
        assert!(with_edges.iter().all(|&v| b.degree(v) == 2));
        let cyc = aux.find_six_cycle().unwrap().unwrap();
        assert_eq!(cyc[0], 0);
    }

    #[test]
    fn plain_six_cycle_and_path() {
        // tips 0, 1, 2; reps join (0,1), (1,2), (2,0)
        let aux = from_parts(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let cyc = aux.find_six_cycle().unwrap().unwrap();
        assert_eq!(cyc[0], 0);
        let mut tips = [cyc[0], cyc[2], cyc[4]];
        tips.sort_unstable();
        assert_eq!(tips, [0, 1, 2]);
        for k in 0..3 {
            let a = cyc[2 * k + 1];
            assert!(aux.rep_neighbors(a).contains(&cyc[2 * k]));
            assert!(aux.rep_neighbors(a).contains(&cyc[(2 * k + 2) % 6]));
        }

        let path = from_parts(3, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(path.find_six_cycle(), Ok(None));
    }

    #[test]
    fn four_cycle_is_an_error() {
        let aux = from_parts(2, vec![vec![0, 1], vec![0, 1], vec![0]]);
        assert!(aux.find_six_cycle().is_err());
    }

    #[test]
    fn distance_two_iff_co_tips() {
        for n in 0..=6 {
            for g in small_graphs(n) {
                if !brute_is_lucs(&g) {
                    continue;
                }
                let aux = AuxBipartite::build(&g);
                assert!(aux.edge_count() <= 2 * g.m());
                // distinct neighborhoods only once no H4 remains
                if let RolesOutcome::Ok(st) = assign_roles(&g) {
                    if check_n_independent(&g, &st).is_none() && detect_h4(&g, &st, &aux).is_none() {
                        let mut hoods: Vec<&[usize]> = (0..aux.rep_count()).map(|a| aux.rep_neighbors(a)).collect();
                        hoods.sort();
                        hoods.dedup();
                        assert_eq!(hoods.len(), aux.rep_count(), "{g:?}");
                    }
                }
                let b = aux.to_graph();
                let co = brute_co_tip_pairs(&g);
                for u in 0..n {
                    let d = distances(&b, u);
                    for (v, &dv) in d.iter().enumerate().take(n).skip(u + 1) {
                        assert_eq!(dv == 2, co.contains(&(u, v)), "{g:?} {u} {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn relabelling_gives_an_isomorphic_graph() {
        let g = Obstruction::S3.graph();
        let base = AuxBipartite::build(&g).to_graph();
        let perms: [[usize; 9]; 3] = [
            [8, 7, 6, 5, 4, 3, 2, 1, 0],
            [3, 1, 4, 0, 5, 2, 6, 8, 7],
            [2, 0, 1, 5, 3, 4, 8, 6, 7],
        ];
        for p in perms {
            let h = g.relabel(&p);
            assert!(is_isomorphic(&AuxBipartite::build(&h).to_graph(), &base));
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn representatives_are_edges_with_distinct_neighborhoods(g in arb_graph(9)) {
            if let RolesOutcome::Ok(st) = assign_roles(&g) {
                let aux = AuxBipartite::build(&g);
                prop_assert!(aux.edge_count() <= 2 * g.m());
                let clean = check_n_independent(&g, &st).is_none() && detect_h4(&g, &st, &aux).is_none();
                let mut seen = std::collections::HashSet::new();
                for a in 0..aux.rep_count() {
                    let (i, j) = aux.rep(a);
                    prop_assert!(i < j && g.has_edge(i, j));
                    prop_assert!(seen.insert(aux.rep_neighbors(a).to_vec()) || !clean);
                    for &s in aux.rep_neighbors(a) {
                        prop_assert!(st.is_tip(s));
                    }
                }
            }
        }
    }
}
