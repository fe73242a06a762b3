//! The 17 forbidden induced subgraphs, order-sensitive certificate checking,
//! `H4` detection and the two-diamond certificate builder.

use std::fmt;

use crate::bipartite::AuxBipartite;
use crate::graph::{induced_ordered, Graph, StampSet};
use crate::roles::RoleState;

/// A forbidden induced subgraph, numbered by its indicator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obstruction {
    Gem,
    W4,
    PawPlusUniversal,
    S1,
    S4,
    S2,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    S3,
}

const ALL: [Obstruction; 17] = [
    Obstruction::Gem,
    Obstruction::W4,
    Obstruction::PawPlusUniversal,
    Obstruction::S1,
    Obstruction::S4,
    Obstruction::S2,
    Obstruction::T1,
    Obstruction::T2,
    Obstruction::T3,
    Obstruction::T4,
    Obstruction::T5,
    Obstruction::T6,
    Obstruction::T7,
    Obstruction::T8,
    Obstruction::T9,
    Obstruction::T10,
    Obstruction::S3,
];

// Position pairs, 1-based, in the canonical vertex order of each template.
#[rustfmt::skip]
const EDGES: [&[(u8, u8)]; 17] = [
    &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5)],
    &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)],
    &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4)],
    &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 7), (3, 7), (4, 5), (4, 6)],
    &[(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)],
    &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 6), (3, 6), (4, 5), (4, 7), (5, 7), (6, 7)],
    &[(1, 2), (1, 3), (1, 7), (2, 3), (2, 7), (3, 4), (4, 5), (4, 6), (5, 6), (5, 8), (6, 8)],
    &[(1, 2), (1, 3), (1, 4), (1, 7), (2, 5), (2, 6), (2, 8), (3, 4), (3, 7), (4, 5), (5, 6), (6, 8)],
    &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)],
    &[(1, 2), (1, 3), (1, 4), (1, 8), (2, 3), (2, 8), (3, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
    &[(1, 2), (1, 3), (1, 5), (1, 7), (2, 4), (2, 5), (2, 7), (3, 4), (3, 6), (3, 8), (4, 6), (4, 8), (5, 6)],
    &[(1, 2), (1, 3), (1, 4), (1, 8), (2, 4), (2, 5), (2, 8), (3, 5), (3, 6), (3, 7), (4, 6), (5, 7), (6, 7)],
    &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7), (2, 8), (3, 4), (3, 5), (4, 6), (5, 7), (6, 8), (7, 8)],
    &[(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 7), (2, 8), (3, 5), (4, 7), (5, 6), (6, 8), (7, 8)],
    &[(1, 2), (1, 3), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 7), (3, 8), (4, 7), (4, 8), (5, 7), (6, 8)],
    &[(1, 2), (1, 3), (1, 5), (1, 6), (2, 5), (2, 6), (2, 7), (3, 4), (3, 7), (3, 8), (4, 5), (4, 7), (4, 8), (6, 8)],
    &[(1, 4), (1, 5), (1, 6), (1, 7), (2, 4), (2, 5), (2, 8), (2, 9), (3, 6), (3, 7), (3, 8), (3, 9), (4, 5), (6, 7), (8, 9)],
];

impl Obstruction {
    pub fn all() -> &'static [Obstruction; 17] {
        &ALL
    }

    pub fn indicator(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_indicator(ind: u8) -> Option<Obstruction> {
        ALL.get(usize::from(ind).checked_sub(1)?).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Obstruction::Gem => "gem",
            Obstruction::W4 => "W4",
            Obstruction::PawPlusUniversal => "P3+2K1-complement",
            Obstruction::S1 => "S1",
            Obstruction::S4 => "S4",
            Obstruction::S2 => "S2",
            Obstruction::T1 => "T1",
            Obstruction::T2 => "T2",
            Obstruction::T3 => "T3",
            Obstruction::T4 => "T4",
            Obstruction::T5 => "T5",
            Obstruction::T6 => "T6",
            Obstruction::T7 => "T7",
            Obstruction::T8 => "T8",
            Obstruction::T9 => "T9",
            Obstruction::T10 => "T10",
            Obstruction::S3 => "S3",
        }
    }

    pub fn from_name(name: &str) -> Option<Obstruction> {
        ALL.iter().copied().find(|o| o.name() == name)
    }

    /// `T1..T10` as `1..=10`.
    pub fn t_index(self) -> Option<u8> {
        let ind = self.indicator();
        (7..=16).contains(&ind).then(|| ind - 6)
    }

    pub fn order(self) -> usize {
        match self {
            Obstruction::Gem | Obstruction::W4 | Obstruction::PawPlusUniversal | Obstruction::S4 => 5,
            Obstruction::S1 | Obstruction::S2 => 7,
            Obstruction::S3 => 9,
            _ => 8,
        }
    }

    /// Canonical edge set as 1-based position pairs `(i, j)`, `i < j`, sorted.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = EDGES[self as usize]
            .iter()
            .map(|&(a, b)| (usize::from(a), usize::from(b)))
            .collect();
        e.sort_unstable();
        e
    }

    /// The template itself as a graph on `0..order`.
    pub fn graph(self) -> Graph {
        Graph::from_edges(self.order(), self.edges().into_iter().map(|(a, b)| (a - 1, b - 1)))
            .expect("templates are simple graphs")
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Template lookup by indicator.
pub fn template(ind: u8) -> Option<Obstruction> {
    Obstruction::from_indicator(ind)
}

/// Ordered negative certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub obstruction: Obstruction,
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn new(obstruction: Obstruction, vertices: Vec<usize>) -> Self {
        Witness { obstruction, vertices }
    }

    pub fn indicator(&self) -> u8 {
        self.obstruction.indicator()
    }
}

/// True iff `q` induces exactly the template of `ob`, position by position.
pub fn verify_negative(g: &Graph, ob: Obstruction, q: &[usize]) -> bool {
    if q.len() != ob.order() {
        return false;
    }
    match induced_ordered(g, q) {
        Ok(pairs) => pairs == ob.edges(),
        Err(_) => false,
    }
}

/// Looks for an induced `H4`: a diamond with tips `x, y` in `N` plus a vertex
/// `r` outside `N` adjacent to exactly the tips. Returns `[x, u, z, y, r]`.
pub fn detect_h4(g: &Graph, roles: &RoleState, aux: &AuxBipartite) -> Option<[usize; 5]> {
    detect_h4_counted(g, roles, aux, &mut 0)
}

pub(crate) fn detect_h4_counted(
    g: &Graph,
    roles: &RoleState,
    aux: &AuxBipartite,
    touched_edges: &mut u64,
) -> Option<[usize; 5]> {
    let reps = aux.rep_count();
    if reps == 0 {
        return None;
    }
    let mut cnt = vec![0u8; reps];
    let mut first = vec![usize::MAX; reps];
    let mut second = vec![usize::MAX; reps];
    let mut touched = Vec::new();
    let mut around_r = StampSet::new(g.n());
    for r in g.vertices() {
        if roles.is_tip(r) {
            continue;
        }
        touched.clear();
        around_r.clear();
        for &x in g.neighbors(r) {
            around_r.insert(x);
        }
        for &x in g.neighbors(r) {
            if !roles.is_tip(x) {
                continue;
            }
            let adj = aux.vertex_reps(x);
            *touched_edges += adj.len() as u64;
            for &a in adj {
                match cnt[a] {
                    0 => {
                        cnt[a] = 1;
                        first[a] = x;
                        touched.push(a);
                    }
                    1 => {
                        cnt[a] = 2;
                        second[a] = x;
                    }
                    _ => {}
                }
            }
        }
        let mut found = None;
        for &a in &touched {
            if cnt[a] == 2 {
                let (u, z) = aux.rep(a);
                if !around_r.contains(u) && !around_r.contains(z) {
                    found = Some([first[a], u, z, second[a], r]);
                    break;
                }
            }
        }
        if found.is_some() {
            return found;
        }
        for &a in &touched {
            cnt[a] = 0;
            first[a] = usize::MAX;
            second[a] = usize::MAX;
        }
    }
    None
}

/// First edge (in ascending order) joining two tips, turned into a
/// certificate; `None` when the tips are independent.
pub fn check_n_independent(g: &Graph, roles: &RoleState) -> Option<Witness> {
    g.edges()
        .find(|&(u, v)| roles.is_tip(u) && roles.is_tip(v))
        .map(|(u, v)| build_certificate(g, roles, u, v))
}

/// Cross-adjacency scores between the witnessing diamonds of two adjacent
/// tips `v` and `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertScore {
    /// `v, wit1[v], wit2[v], wit3[v]`.
    pub d1: [usize; 4],
    /// `w, wit1[w], wit2[w], wit3[w]`.
    pub d2: [usize; 4],
    /// Scores aligned with `d1`.
    pub t1: [u32; 4],
    /// Scores aligned with `d2`.
    pub t2: [u32; 4],
}

impl CertScore {
    pub fn rho1(&self) -> u32 {
        self.t1.iter().sum()
    }

    pub fn t(&self, x: usize) -> u32 {
        self.d1
            .iter()
            .zip(&self.t1)
            .chain(self.d2.iter().zip(&self.t2))
            .find(|(&y, _)| y == x)
            .map_or(0, |(_, &t)| t)
    }

    /// First vertex of maximum score, scanning `d1` then `d2`.
    pub fn argmax(&self) -> (usize, u32) {
        let mut best = (self.d1[0], self.t1[0]);
        for (&x, &t) in self.d1.iter().zip(&self.t1).chain(self.d2.iter().zip(&self.t2)) {
            if t > best.1 {
                best = (x, t);
            }
        }
        best
    }

    /// Cross edges between the two diamonds.
    pub fn cross_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &x in &self.d1 {
            for &y in &self.d2 {
                if g.has_edge(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

fn diamond_of(roles: &RoleState, v: usize) -> [usize; 4] {
    let [a, b, c] = roles.wit[v];
    [v, a, b, c]
}

/// Scores each vertex of one diamond by its edges into the other:
/// tip-tip 10, tip-nontip 7, nontip-tip 6, nontip-nontip 2.
pub fn cert_score(g: &Graph, roles: &RoleState, v: usize, w: usize) -> CertScore {
    let d1 = diamond_of(roles, v);
    let d2 = diamond_of(roles, w);
    let score = |x: usize, other: &[usize; 4]| -> u32 {
        let x_tip = roles.is_tip(x);
        other
            .iter()
            .filter(|&&y| g.has_edge(x, y))
            .map(|&y| match (x_tip, roles.is_tip(y)) {
                (true, true) => 10,
                (true, false) => 7,
                (false, true) => 6,
                (false, false) => 2,
            })
            .sum()
    };
    CertScore {
        d1,
        d2,
        t1: d1.map(|x| score(x, &d2)),
        t2: d2.map(|x| score(x, &d1)),
    }
}

/// Certificate for an edge `vw` between two tips: `S2`, `S4` or one of
/// `T1..T10`, chosen from the scores of the two witnessing diamonds.
pub fn build_certificate(g: &Graph, roles: &RoleState, v: usize, w: usize) -> Witness {
    let [v1, v2, v3] = roles.wit[v];
    let [w1, w2, w3] = roles.wit[w];
    if v1 == w1 {
        return Witness::new(Obstruction::S2, vec![v1, v2, v3, w2, w3, v, w]);
    }
    let score = cert_score(g, roles, v, w);
    let (x_star, best) = score.argmax();
    if best == 14 {
        return Witness::new(Obstruction::S2, vec![x_star, v2, v3, w2, w3, v, w]);
    }
    if best == 20 {
        let z = if score.d1.contains(&x_star) { w } else { v };
        let [z1, z2, z3] = roles.wit[z];
        return Witness::new(Obstruction::S4, vec![z, z2, z3, z1, x_star]);
    }
    debug_assert!(is_matching(&score.cross_edges(g)), "cross edges must form a matching");

    let t = |x: usize| score.t(x);
    let (mut v2, mut v3, mut w2, mut w3) = (v2, v3, w2, w3);
    let (i, q): (usize, [usize; 8]) = match score.rho1() {
        10 => (1, [v2, v3, v, w, w2, w3, v1, w1]),
        12 => {
            if t(v2) == 0 {
                std::mem::swap(&mut v2, &mut v3);
            }
            if t(w2) == 0 {
                std::mem::swap(&mut w2, &mut w3);
            }
            (2, [v2, w2, v3, v, w, w3, v1, w1])
        }
        20 => (3, [v2, v3, v, v1, w, w1, w2, w3]),
        16 => {
            if t(v2) == 0 {
                std::mem::swap(&mut v2, &mut v3);
            }
            (4, [v2, v3, v, w1, w, w2, w3, v1])
        }
        17 => {
            if t(w2) == 0 {
                std::mem::swap(&mut w2, &mut w3);
            }
            (4, [w2, w3, w, v1, v, v2, v3, w1])
        }
        14 => {
            if !g.has_edge(v2, w2) {
                std::mem::swap(&mut w2, &mut w3);
            }
            (5, [v2, v3, w2, w3, v, w, v1, w1])
        }
        18 => {
            if t(v2) > t(v3) {
                std::mem::swap(&mut v2, &mut v3);
            }
            if t(w2) == 0 {
                std::mem::swap(&mut w2, &mut w3);
            }
            (6, [v2, v3, w2, v, w1, w, w3, v1])
        }
        19 => {
            if t(v2) == 0 {
                std::mem::swap(&mut v2, &mut v3);
            }
            if t(w2) > t(w3) {
                std::mem::swap(&mut w2, &mut w3);
            }
            (6, [w2, w3, v2, w, v1, v, v3, w1])
        }
        22 => {
            if t(v2) == 0 {
                std::mem::swap(&mut v2, &mut v3);
            }
            if t(w2) == 0 {
                std::mem::swap(&mut w2, &mut w3);
            }
            (7, [v2, w2, v3, v, v1, w, w1, w3])
        }
        23 => {
            if t(v2) == 0 {
                std::mem::swap(&mut v2, &mut v3);
            }
            if t(w2) == 0 {
                std::mem::swap(&mut w2, &mut w3);
            }
            (8, [v2, w2, v1, w1, v3, v, w3, w])
        }
        24 => {
            // both nontip pairings score alike; only adjacency tells them apart
            if !g.has_edge(v2, w2) {
                std::mem::swap(&mut w2, &mut w3);
            }
            (9, [v2, v3, w2, w3, v, v1, w, w1])
        }
        _ => {
            if t(v2) > t(v3) {
                std::mem::swap(&mut v2, &mut v3);
            }
            if t(w2) > t(w3) {
                std::mem::swap(&mut w2, &mut w3);
            }
            (10, [v2, v3, w2, w3, v1, v, w1, w])
        }
    };
    let ob = Obstruction::from_indicator(i as u8 + 6).expect("T indices are 1..=10");
    Witness::new(ob, q.to_vec())
}

fn is_matching(edges: &[(usize, usize)]) -> bool {
    let mut ends: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    ends.sort_unstable();
    ends.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{is_isomorphic, small_graphs};
    use crate::roles::{assign_roles, RolesOutcome};

    fn embed(ob: Obstruction) -> Graph {
        ob.graph()
    }

    #[test]
    fn template_examples() {
        assert_eq!(
            Obstruction::Gem.edges(),
            vec![(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5)]
        );
        assert_eq!(template(5), Some(Obstruction::S4));
        assert_eq!(
            template(5).unwrap().edges(),
            vec![(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)]
        );
        assert_eq!(
            template(7).unwrap().edges(),
            vec![
                (1, 2),
                (1, 3),
                (1, 7),
                (2, 3),
                (2, 7),
                (3, 4),
                (4, 5),
                (4, 6),
                (5, 6),
                (5, 8),
                (6, 8)
            ]
        );
        assert_eq!(template(0), None);
        assert_eq!(template(18), None);
        for ob in Obstruction::all() {
            assert_eq!(Obstruction::from_indicator(ob.indicator()), Some(*ob));
            assert_eq!(Obstruction::from_name(ob.name()), Some(*ob));
        }
    }

    #[test]
    fn templates_are_pairwise_non_isomorphic() {
        for (i, a) in ALL.iter().enumerate() {
            for b in &ALL[i + 1..] {
                assert!(!is_isomorphic(&a.graph(), &b.graph()), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn verify_negative_examples() {
        let gem = embed(Obstruction::Gem);
        let q = vec![0, 1, 2, 3, 4];
        assert!(verify_negative(&gem, Obstruction::Gem, &q));
        let rev: Vec<usize> = q.iter().rev().copied().collect();
        assert!(!verify_negative(&gem, Obstruction::Gem, &rev));
        assert!(!verify_negative(&gem, Obstruction::W4, &q));
        assert!(!verify_negative(&gem, Obstruction::Gem, &[0, 1, 2, 3]));
        assert!(!verify_negative(&gem, Obstruction::Gem, &[0, 1, 2, 3, 3]));
        assert!(!verify_negative(&gem, Obstruction::Gem, &[0, 1, 2, 3, 9]));
    }

    fn roles_of(g: &Graph) -> RoleState {
        match assign_roles(g) {
            RolesOutcome::Ok(r) => r,
            other => panic!("expected clean roles, got {other:?}"),
        }
    }

    #[test]
    fn detect_h4_examples() {
        let s4 = embed(Obstruction::S4);
        // S4 alone is LUCS with independent tips {0, 3}
        let roles = roles_of(&s4);
        let aux = AuxBipartite::build(&s4);
        let q = detect_h4(&s4, &roles, &aux).unwrap();
        assert_eq!(q, [0, 1, 2, 3, 4]);
        assert!(verify_negative(&s4, Obstruction::S4, &q));

        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let roles = roles_of(&diamond);
        assert_eq!(detect_h4(&diamond, &roles, &AuxBipartite::build(&diamond)), None);

        let c6 = Graph::cycle(6);
        let roles = roles_of(&c6);
        assert_eq!(detect_h4(&c6, &roles, &AuxBipartite::build(&c6)), None);
    }

    #[test]
    fn check_n_independent_examples() {
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(check_n_independent(&diamond, &roles_of(&diamond)), None);
        let c6 = Graph::cycle(6);
        assert_eq!(check_n_independent(&c6, &roles_of(&c6)), None);

        let t1 = embed(Obstruction::T1);
        let w = check_n_independent(&t1, &roles_of(&t1)).unwrap();
        assert_eq!(w.obstruction, Obstruction::T1);
        assert!(verify_negative(&t1, w.obstruction, &w.vertices));
    }

    #[test]
    fn two_diamonds_sharing_a_co_tip() {
        let s2 = embed(Obstruction::S2);
        let w = check_n_independent(&s2, &roles_of(&s2)).unwrap();
        assert_eq!(w.obstruction, Obstruction::S2);
        assert!(verify_negative(&s2, Obstruction::S2, &w.vertices));
    }

    #[test]
    fn every_t_template_builds_its_own_certificate() {
        for &ob in &ALL[6..16] {
            let g = embed(ob);
            let roles = roles_of(&g);
            let w = check_n_independent(&g, &roles).unwrap_or_else(|| panic!("{ob}: tips independent"));
            assert_eq!(w.obstruction, ob);
            assert!(verify_negative(&g, ob, &w.vertices), "{ob}: {:?}", w.vertices);
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        // Heap's algorithm
        let mut p: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut out = vec![p.clone()];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                p.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
                out.push(p.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    #[test]
    fn t_certificates_survive_every_relabeling() {
        let perms = permutations(8);
        assert_eq!(perms.len(), 40320);
        for &ob in &ALL[6..16] {
            let base = embed(ob);
            for perm in &perms {
                let g = base.relabel(perm);
                let w = check_n_independent(&g, &roles_of(&g)).unwrap();
                assert!(verify_negative(&g, w.obstruction, &w.vertices), "{ob} {perm:?}: {w:?}");
            }
        }
    }

    #[test]
    fn detect_h4_agrees_with_brute_force() {
        for n in 5..=6 {
            for g in small_graphs(n) {
                let roles = match assign_roles(&g) {
                    RolesOutcome::Ok(r) => r,
                    _ => continue,
                };
                if check_n_independent(&g, &roles).is_some() {
                    continue;
                }
                let aux = AuxBipartite::build(&g);
                let fast = detect_h4(&g, &roles, &aux);
                let brute = crate::oracle::find_induced(&g, Obstruction::S4);
                assert_eq!(fast.is_some(), brute.is_some(), "{g:?}");
                if let Some(q) = fast {
                    assert!(verify_negative(&g, Obstruction::S4, &q));
                }
            }
        }
    }
}
