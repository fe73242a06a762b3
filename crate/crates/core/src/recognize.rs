//! The recognition pipeline and its certificates.

use serde::{Deserialize, Serialize};

use crate::bipartite::AuxBipartite;
use crate::certificate::{check_n_independent, detect_h4_counted, verify_negative, Obstruction, Witness};
use crate::graph::{is_diamond_free, Graph, NeighborhoodScanner};
use crate::roles::{assign_roles_with, conflict_certificate, RolesOutcome};

/// Probe/nonprobe split with a completion set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub probes: Vec<usize>,
    pub nonprobes: Vec<usize>,
    pub completion: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Positive(Partition),
    Negative(Witness),
}

impl Certificate {
    pub fn is_member(&self) -> bool {
        matches!(self, Certificate::Positive(_))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CertificateJson::from(self)).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<Certificate, serde_json::Error> {
        let raw: CertificateJson = serde_json::from_str(text)?;
        Certificate::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// Work done by one recognition call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpCounts {
    pub neighborhood_scans: u64,
    pub aux_edges_touched: u64,
    pub bfs_dequeues: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.neighborhood_scans + self.aux_edges_touched + self.bfs_dequeues
    }
}

pub fn recognize(g: &Graph) -> Certificate {
    recognize_with_counts(g).0
}

pub fn recognize_with_counts(g: &Graph) -> (Certificate, OpCounts) {
    let mut ops = OpCounts::default();
    let cert = run(g, &mut ops);
    debug_assert!(verify(g, &cert), "{cert:?}");
    (cert, ops)
}

fn run(g: &Graph, ops: &mut OpCounts) -> Certificate {
    let n = g.n();
    if n <= 3 {
        return Certificate::Positive(Partition {
            probes: g.vertices().collect(),
            nonprobes: Vec::new(),
            completion: Vec::new(),
        });
    }
    let mut scanner = NeighborhoodScanner::new(n);
    let outcome = assign_roles_with(g, &mut scanner, &mut ops.bfs_dequeues);
    ops.neighborhood_scans = scanner.scanned;
    let roles = match outcome {
        RolesOutcome::LucsViolation(ob) => {
            let o = Obstruction::from_indicator(ob.indicator).expect("indicator 1..=3");
            return Certificate::Negative(Witness::new(o, ob.vertices.to_vec()));
        }
        RolesOutcome::Conflict(st) => {
            return Certificate::Negative(conflict_certificate(g, &st).expect("conflict recorded"));
        }
        RolesOutcome::Ok(st) => st,
    };
    if let Some(w) = check_n_independent(g, &roles) {
        return Certificate::Negative(w);
    }
    let aux = AuxBipartite::build_with(g, &mut scanner);
    ops.neighborhood_scans = scanner.scanned;
    if let Some(q) = detect_h4_counted(g, &roles, &aux, &mut ops.aux_edges_touched) {
        return Certificate::Negative(Witness::new(Obstruction::S4, q.to_vec()));
    }
    let cycle = aux
        .find_six_cycle_counted(&mut ops.bfs_dequeues, &mut ops.aux_edges_touched)
        .expect("no 4-cycle survives H4 elimination");
    if let Some([s, a1, s2, a2, s3, a3]) = cycle {
        let (x1, y1) = aux.rep(a1);
        let (x2, y2) = aux.rep(a3);
        let (x3, y3) = aux.rep(a2);
        return Certificate::Negative(Witness::new(Obstruction::S3, vec![s, s2, s3, x1, y1, x2, y2, x3, y3]));
    }
    let mut is_n = vec![false; n];
    for &v in &roles.nonprobes {
        is_n[v] = true;
    }
    Certificate::Positive(Partition {
        probes: g.vertices().filter(|&v| !is_n[v]).collect(),
        nonprobes: roles.nonprobes,
        completion: roles.completion,
    })
}

/// True iff the partition covers `V`, the nonprobes are independent, every
/// completion pair is a non-edge inside the nonprobes, and adding the
/// completion leaves no induced diamond.
pub fn verify_positive(g: &Graph, p: &Partition) -> bool {
    let n = g.n();
    let mut side = vec![0u8; n];
    for (list, mark) in [(&p.probes, 1u8), (&p.nonprobes, 2u8)] {
        for &v in list {
            if v >= n || side[v] != 0 {
                return false;
            }
            side[v] = mark;
        }
    }
    if side.contains(&0) {
        return false;
    }
    if g.edges().any(|(u, v)| side[u] == 2 && side[v] == 2) {
        return false;
    }
    let mut pairs = Vec::with_capacity(p.completion.len());
    for &(u, v) in &p.completion {
        if u >= n || v >= n || u == v || side[u] != 2 || side[v] != 2 {
            return false;
        }
        pairs.push((u.min(v), u.max(v)));
    }
    match g.with_added_edges(&pairs) {
        Ok(h) => is_diamond_free(&h),
        Err(_) => false,
    }
}

pub fn verify(g: &Graph, cert: &Certificate) -> bool {
    match cert {
        Certificate::Positive(p) => verify_positive(g, p),
        Certificate::Negative(w) => verify_negative(g, w.obstruction, &w.vertices),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "result", deny_unknown_fields)]
enum CertificateJson {
    #[serde(rename = "yes")]
    Yes {
        probes: Vec<usize>,
        nonprobes: Vec<usize>,
        completion: Vec<[usize; 2]>,
    },
    #[serde(rename = "no")]
    No {
        indicator: u8,
        name: String,
        vertices: Vec<usize>,
    },
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        match c {
            Certificate::Positive(p) => CertificateJson::Yes {
                probes: p.probes.clone(),
                nonprobes: p.nonprobes.clone(),
                completion: p.completion.iter().map(|&(u, v)| [u, v]).collect(),
            },
            Certificate::Negative(w) => CertificateJson::No {
                indicator: w.indicator(),
                name: w.obstruction.name().to_string(),
                vertices: w.vertices.clone(),
            },
        }
    }
}

impl TryFrom<CertificateJson> for Certificate {
    type Error = String;

    fn try_from(raw: CertificateJson) -> Result<Self, Self::Error> {
        Ok(match raw {
            CertificateJson::Yes {
                probes,
                nonprobes,
                completion,
            } => Certificate::Positive(Partition {
                probes,
                nonprobes,
                completion: completion.into_iter().map(|[u, v]| (u, v)).collect(),
            }),
            CertificateJson::No {
                indicator,
                name,
                vertices,
            } => {
                let ob =
                    Obstruction::from_indicator(indicator).ok_or_else(|| format!("unknown indicator {indicator}"))?;
                if ob.name() != name {
                    return Err(format!("indicator {indicator} is {}, not {name}", ob.name()));
                }
                Certificate::Negative(Witness::new(ob, vertices))
            }
        })
    }
}
