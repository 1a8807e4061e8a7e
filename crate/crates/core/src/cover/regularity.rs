use serde::Serialize;

use super::{Cover, CoverKind, Nerve, PieceName};
use crate::complex::{Collapse, SimplicialComplex};
use crate::homology::{
    connectivity_certificate, edge_path_presentation, homology, simplify, ConnectivityCertificate,
    ConnectivityVerdict, HomologyProfile, TietzeOutcome, DEFAULT_COLLAPSE_BUDGET, DEFAULT_TIETZE_BUDGET,
};
use crate::verdict::Verdict;

pub(crate) const CONTRACTIBLE_PROXY: &str =
    "absolute-extensor property proxied by contractibility: cone apex, greedy collapse, or vanishing reduced homology with a trivial edge-path group";
pub(crate) const CONNECTIVITY_PROXY: &str =
    "n-regularity checked by the excision criterion: each intersection of |A| pieces must be (n - |A|)-connected";
pub(crate) const OPEN_STAR_NOTE: &str =
    "open-star regions replaced by their closed carriers in the barycentric subdivision";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityMode {
    Regular,
    WeaklyRegular,
    NRegular(i32),
}

impl Serialize for RegularityMode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            RegularityMode::Regular => serializer.serialize_str("regular"),
            RegularityMode::WeaklyRegular => serializer.serialize_str("weakly-regular"),
            RegularityMode::NRegular(n) => serializer.serialize_str(&format!("{n}-regular")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RegularityCertificate {
    Cone { apex: String },
    Collapse { steps: usize },
    /// Reduced homology vanishes and the edge-path group simplified away.
    AcyclicSimplyConnected { tietze_steps: usize },
    HomologyObstruction { profile: HomologyProfile },
    /// Acyclic, but no proof of simple connectivity within budget.
    Undecided { tietze_steps: usize },
    Connectivity { certificate: ConnectivityCertificate },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollectionCheck {
    pub collection: Vec<PieceName>,
    pub verdict: Verdict,
    pub certificate: RegularityCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub mode: RegularityMode,
    pub overall: Verdict,
    pub entries: Vec<CollectionCheck>,
    pub proxy_notes: Vec<String>,
}

impl RegularityReport {
    /// First entry with the given verdict.
    pub fn first(&self, verdict: Verdict) -> Option<&CollectionCheck> {
        self.entries.iter().find(|e| e.verdict == verdict)
    }
}

/// Contractibility certificate: cone, then greedy collapse, then reduced
/// homology (nonzero refutes), then a Tietze reduction of the edge-path
/// group (trivial confirms, by Hurewicz and Whitehead).
pub fn contractibility(k: &SimplicialComplex) -> (Verdict, RegularityCertificate) {
    if let Some(apex) = k.is_cone() {
        return (Verdict::Holds, RegularityCertificate::Cone { apex: apex.to_string() });
    }
    if let Collapse::Collapsible { steps, .. } = k.collapse_to_point(DEFAULT_COLLAPSE_BUDGET) {
        return (Verdict::Holds, RegularityCertificate::Collapse { steps });
    }
    let profile = homology(k, true);
    if !profile.is_trivial() {
        return (Verdict::Fails, RegularityCertificate::HomologyObstruction { profile });
    }
    match simplify(&edge_path_presentation(k), DEFAULT_TIETZE_BUDGET) {
        TietzeOutcome::Trivial { steps } => (
            Verdict::Holds,
            RegularityCertificate::AcyclicSimplyConnected { tietze_steps: steps },
        ),
        TietzeOutcome::Unresolved { steps, .. } => {
            (Verdict::Unknown, RegularityCertificate::Undecided { tietze_steps: steps })
        }
    }
}

pub(super) fn check_regularity(cover: &Cover, mode: RegularityMode) -> RegularityReport {
    let nerve = cover.nerve(None);
    let sd = match cover.kind() {
        CoverKind::Closed => None,
        CoverKind::OpenStars => Some(cover.base().barycentric_subdivision()),
    };
    let realize = |p: super::Piece| match &sd {
        Some(sd) => p.realize(sd),
        None => p.realize(cover.base()),
    };

    let mut faces: Vec<_> = nerve.witnesses.keys().collect();
    faces.sort_by(|a, b| crate::complex::dim_lex(a, b));
    let mut entries = Vec::with_capacity(faces.len());
    for face in faces {
        let collection = Nerve::names(face);
        let (verdict, certificate) = match mode {
            RegularityMode::Regular => {
                let piece = cover.intersection(&collection).expect("nerve names are pieces");
                contractibility(&realize(piece))
            }
            RegularityMode::WeaklyRegular => {
                let piece = cover.union_of(&collection).expect("nerve names are pieces");
                contractibility(&realize(piece))
            }
            RegularityMode::NRegular(n) => {
                let piece = cover.intersection(&collection).expect("nerve names are pieces");
                let c = connectivity_certificate(&realize(piece), n - collection.len() as i32);
                let verdict = match c.verdict {
                    ConnectivityVerdict::Connected => Verdict::Holds,
                    ConnectivityVerdict::NotConnected => Verdict::Fails,
                    ConnectivityVerdict::Unknown => Verdict::Unknown,
                };
                (verdict, RegularityCertificate::Connectivity { certificate: c })
            }
        };
        entries.push(CollectionCheck {
            collection,
            verdict,
            certificate,
        });
    }
    let overall = Verdict::all(entries.iter().map(|e| e.verdict));
    let mut proxy_notes = vec![match mode {
        RegularityMode::NRegular(_) => CONNECTIVITY_PROXY.to_string(),
        _ => CONTRACTIBLE_PROXY.to_string(),
    }];
    if sd.is_some() {
        proxy_notes.push(OPEN_STAR_NOTE.to_string());
    }
    RegularityReport {
        mode,
        overall,
        entries,
        proxy_notes,
    }
}
