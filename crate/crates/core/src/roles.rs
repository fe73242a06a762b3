//! One scan over all neighborhoods that checks the LUCS property and marks
//! every vertex as a diamond tip or non-tip, with a witnessing diamond.

use crate::certificate::{Obstruction, Witness};
use crate::graph::{Graph, NeighborhoodScanner};
use crate::split::{csda, non_complete_split_counted, SplitObstruction, SplitPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Unset,
    Tip,
    NoTip,
}

/// A vertex found to be a tip of one diamond and a non-tip of another.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub vertex: usize,
    /// Witnesses of the diamond that disagrees with the stored role.
    pub wit: [usize; 3],
}

/// Per-vertex roles and witnesses.
///
/// For a tip `v`, `wit[v] = [co-tip, non-tip, non-tip]`; for a non-tip,
/// `wit[v] = [other non-tip, tip, tip]`. Either way `{v} + wit[v]` induces a
/// diamond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoleState {
    pub role: Vec<Role>,
    pub wit: Vec<[usize; 3]>,
    /// Tips, ascending.
    pub nonprobes: Vec<usize>,
    /// Non-edges between co-tips, `(u, v)` with `u < v`, sorted.
    pub completion: Vec<(usize, usize)>,
    pub conflict: Option<Conflict>,
}

impl RoleState {
    fn new(n: usize) -> Self {
        RoleState {
            role: vec![Role::Unset; n],
            wit: vec![[usize::MAX; 3]; n],
            nonprobes: Vec::new(),
            completion: Vec::new(),
            conflict: None,
        }
    }

    #[inline]
    pub fn is_tip(&self, v: usize) -> bool {
        self.role[v] == Role::Tip
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RolesOutcome {
    Ok(RoleState),
    /// Some `N(v)` has a component that is not complete split.
    LucsViolation(SplitObstruction),
    Conflict(RoleState),
}

pub fn assign_roles(g: &Graph) -> RolesOutcome {
    let mut scanner = NeighborhoodScanner::new(g.n());
    assign_roles_with(g, &mut scanner, &mut 0)
}

pub(crate) fn assign_roles_with(g: &Graph, scanner: &mut NeighborhoodScanner, dequeues: &mut u64) -> RolesOutcome {
    let n = g.n();
    let mut st = RoleState::new(n);
    for v in g.vertices() {
        for comp in scanner.components(g, v) {
            let Some(SplitPartition {
                clique: k,
                independent: s,
            }) = csda(&comp.vertices, &comp.degrees)
            else {
                return RolesOutcome::LucsViolation(lucs_obstruction(g, v, &comp.vertices, dequeues));
            };
            if s.len() < 2 || st.conflict.is_some() {
                continue;
            }
            for &w in &s {
                if st.role[w] == Role::Unset {
                    st.role[w] = Role::Tip;
                    let co = if s[0] == w { s[1] } else { s[0] };
                    st.wit[w] = [co, k[0], k.get(1).copied().unwrap_or(v)];
                } else if st.role[w] == Role::NoTip {
                    let co = if s[0] == w { s[1] } else { s[0] };
                    st.conflict = Some(Conflict {
                        vertex: w,
                        wit: [co, k[0], k.get(1).copied().unwrap_or(v)],
                    });
                    break;
                }
            }
            if st.conflict.is_some() {
                continue;
            }
            for &w in &k {
                if st.role[w] == Role::Unset {
                    st.role[w] = Role::NoTip;
                    st.wit[w] = [v, s[0], s[1]];
                } else if st.role[w] == Role::Tip {
                    st.conflict = Some(Conflict {
                        vertex: w,
                        wit: [v, s[0], s[1]],
                    });
                    break;
                }
            }
            if st.conflict.is_none() {
                for (i, &a) in s.iter().enumerate() {
                    st.completion.extend(s[i + 1..].iter().map(|&b| (a, b)));
                }
            }
        }
    }
    if st.conflict.is_some() {
        return RolesOutcome::Conflict(st);
    }
    st.nonprobes = g.vertices().filter(|&v| st.is_tip(v)).collect();
    st.completion.sort_unstable();
    st.completion.dedup();
    RolesOutcome::Ok(st)
}

fn lucs_obstruction(g: &Graph, v: usize, comp: &[usize], dequeues: &mut u64) -> SplitObstruction {
    let mut local: Vec<usize> = comp.to_vec();
    local.push(v);
    local.sort_unstable();
    let h = g.induced_subgraph(&local);
    let x = local.binary_search(&v).expect("anchor is present");
    let found = non_complete_split_counted(&h, x, dequeues)
        .expect("a non-complete-split neighborhood component satisfies the preconditions");
    SplitObstruction {
        indicator: found.indicator,
        vertices: found.vertices.map(|p| local[p]),
    }
}

/// `S1` or `S4` certificate from a vertex that is a tip of one diamond and a
/// non-tip of another. `None` if no conflict was recorded.
pub fn conflict_certificate(g: &Graph, roles: &RoleState) -> Option<Witness> {
    let Conflict { vertex: v, wit } = roles.conflict?;
    let (tip_wit, nontip_wit) = if roles.role[v] == Role::Tip {
        (roles.wit[v], wit)
    } else {
        (wit, roles.wit[v])
    };
    let co_tip = tip_wit[0];
    Some(match nontip_wit.iter().copied().find(|&x| g.has_edge(co_tip, x)) {
        Some(x) => Witness::new(Obstruction::S4, vec![v, tip_wit[1], tip_wit[2], co_tip, x]),
        None => Witness::new(
            Obstruction::S1,
            vec![
                v,
                tip_wit[1],
                tip_wit[2],
                nontip_wit[0],
                nontip_wit[1],
                nontip_wit[2],
                co_tip,
            ],
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_negative;
    use crate::graph::induced_ordered;
    use crate::oracle::{
        brute_co_tip_pairs, brute_is_lucs, brute_tips, enumerate_diamonds, graph_from_mask, small_graphs,
    };

    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn check_diamond(g: &Graph, v: usize, wit: [usize; 3], tip: bool) {
        let q = if tip {
            [v, wit[1], wit[2], wit[0]]
        } else {
            [wit[1], v, wit[0], wit[2]]
        };
        assert_eq!(
            induced_ordered(g, &q).unwrap(),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
            "{q:?} in {g:?}"
        );
    }

    #[test]
    fn diamond_roles() {
        let RolesOutcome::Ok(st) = assign_roles(&diamond()) else {
            panic!()
        };
        assert_eq!(st.role, vec![Role::Tip, Role::NoTip, Role::NoTip, Role::Tip]);
        assert_eq!(st.nonprobes, vec![0, 3]);
        assert_eq!(st.completion, vec![(0, 3)]);
        // |K| = 1 at anchor 1, so the anchor completes the tip witness
        assert_eq!(st.wit[0], [3, 2, 1]);
    }

    #[test]
    fn gem_is_a_lucs_violation() {
        let gem = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        let RolesOutcome::LucsViolation(ob) = assign_roles(&gem) else {
            panic!()
        };
        assert_eq!(ob.indicator, 1);
        assert!(verify_negative(&gem, Obstruction::Gem, &ob.vertices));
    }

    #[test]
    fn bowtie_has_no_tips() {
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let RolesOutcome::Ok(st) = assign_roles(&bowtie) else {
            panic!()
        };
        assert!(st.nonprobes.is_empty());
        assert!(st.completion.is_empty());
    }

    #[test]
    fn conflict_certificate_on_s1() {
        // vertex k of the template is id k-1
        let s1 = Obstruction::S1.graph();
        let RolesOutcome::Conflict(st) = assign_roles(&s1) else {
            panic!()
        };
        let w = conflict_certificate(&s1, &st).unwrap();
        assert_eq!(w.obstruction, Obstruction::S1);
        // positions 2 and 3 are interchangeable
        assert_eq!(w.vertices[0], 0);
        assert_eq!(&w.vertices[3..], &[3, 4, 5, 6]);
        assert!(verify_negative(&s1, Obstruction::S1, &w.vertices));
    }

    #[test]
    fn s4_alone_has_no_conflict() {
        // its single diamond gives every vertex one role
        assert!(matches!(assign_roles(&Obstruction::S4.graph()), RolesOutcome::Ok(_)));
    }

    #[test]
    fn conflict_yielding_s4() {
        // smallest labeled instance in mask order whose conflict closes an S4
        let g = graph_from_mask(7, 40573);
        let RolesOutcome::Conflict(st) = assign_roles(&g) else {
            panic!()
        };
        let w = conflict_certificate(&g, &st).unwrap();
        assert_eq!(w.obstruction, Obstruction::S4);
        assert!(verify_negative(&g, Obstruction::S4, &w.vertices));
    }

    #[test]
    fn disjoint_diamonds_do_not_conflict() {
        let mut edges = vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)];
        edges.extend(edges.clone().iter().map(|&(a, b)| (a + 4, b + 4)));
        let g = Graph::from_edges(8, edges).unwrap();
        let RolesOutcome::Ok(st) = assign_roles(&g) else {
            panic!()
        };
        assert_eq!(st.nonprobes, vec![0, 3, 4, 7]);
        assert_eq!(conflict_certificate(&g, &st), None);
    }

    #[test]
    fn roles_match_brute_force_on_small_graphs() {
        for n in 0..=6 {
            for g in small_graphs(n) {
                let lucs = brute_is_lucs(&g);
                let diamonds = enumerate_diamonds(&g);
                let mut tip_of = vec![false; n];
                let mut nontip_of = vec![false; n];
                for d in &diamonds {
                    tip_of[d[0]] = true;
                    tip_of[d[3]] = true;
                    nontip_of[d[1]] = true;
                    nontip_of[d[2]] = true;
                }
                let mixed = (0..n).any(|v| tip_of[v] && nontip_of[v]);
                match assign_roles(&g) {
                    RolesOutcome::LucsViolation(ob) => {
                        assert!(!lucs, "{g:?}");
                        let o = Obstruction::from_indicator(ob.indicator).unwrap();
                        assert!(verify_negative(&g, o, &ob.vertices), "{g:?}");
                    }
                    RolesOutcome::Conflict(st) => {
                        assert!(lucs && mixed, "{g:?}");
                        let w = conflict_certificate(&g, &st).unwrap();
                        assert!(verify_negative(&g, w.obstruction, &w.vertices), "{g:?} {w:?}");
                    }
                    RolesOutcome::Ok(st) => {
                        assert!(lucs && !mixed, "{g:?}");
                        assert_eq!(st.nonprobes, brute_tips(&g), "{g:?}");
                        assert_eq!(st.completion, brute_co_tip_pairs(&g), "{g:?}");
                        for v in 0..n {
                            match st.role[v] {
                                Role::Tip => check_diamond(&g, v, st.wit[v], true),
                                Role::NoTip => check_diamond(&g, v, st.wit[v], false),
                                Role::Unset => {}
                            }
                        }
                        for &(a, b) in &st.completion {
                            assert!(!g.has_edge(a, b) && st.is_tip(a) && st.is_tip(b));
                        }
                    }
                }
            }
        }
    }
}
