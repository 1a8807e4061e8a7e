use serde::Serialize;

use super::chain::homology;
use super::presentation::{edge_path_presentation, simplify, TietzeOutcome, DEFAULT_TIETZE_BUDGET};
use super::profile::HomologyProfile;
use crate::complex::SimplicialComplex;

/// Budget for the greedy collapse attempted as a simple-connectivity proof.
pub const DEFAULT_COLLAPSE_BUDGET: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectivityVerdict {
    Connected,
    NotConnected,
    Unknown,
}

/// What the verdict rests on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConnectivityEvidence {
    Nonempty,
    Empty,
    Components { count: usize },
    /// Reduced homology is nonzero at or below `k`.
    HomologyObstruction { profile: HomologyProfile },
    Cone { apex: String },
    Collapse { steps: usize },
    TrivialEdgePathGroup { steps: usize },
    /// Homology vanishes through `k` but simple connectivity is unproven.
    NoSimpleConnectivityProof { tietze_steps: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityCertificate {
    pub k: i32,
    pub verdict: ConnectivityVerdict,
    pub evidence: ConnectivityEvidence,
}

/// Proof that a connected complex has trivial fundamental group, if one of
/// the cheap certificates applies: cone, greedy collapse, or a Tietze
/// reduction of the edge-path presentation to the empty presentation.
pub(crate) fn simple_connectivity_proof(k: &SimplicialComplex) -> Result<ConnectivityEvidence, usize> {
    if let Some(apex) = k.is_cone() {
        return Ok(ConnectivityEvidence::Cone { apex: apex.to_string() });
    }
    if let crate::complex::Collapse::Collapsible { steps, .. } = k.collapse_to_point(DEFAULT_COLLAPSE_BUDGET) {
        return Ok(ConnectivityEvidence::Collapse { steps });
    }
    match simplify(&edge_path_presentation(k), DEFAULT_TIETZE_BUDGET) {
        TietzeOutcome::Trivial { steps } => Ok(ConnectivityEvidence::TrivialEdgePathGroup { steps }),
        TietzeOutcome::Unresolved { steps, .. } => Err(steps),
    }
}

/// Certifies `k`-connectivity.
///
/// `k = −1` (nonempty) and `k = 0` (connected) are decided exactly. For
/// `k ≥ 1`, nonzero reduced homology through degree `k` refutes; vanishing
/// homology together with a simple-connectivity proof confirms (Hurewicz);
/// anything else is `Unknown`.
pub fn connectivity_certificate(complex: &SimplicialComplex, k: i32) -> ConnectivityCertificate {
    let done = |verdict, evidence| ConnectivityCertificate { k, verdict, evidence };
    if k < -1 {
        return done(ConnectivityVerdict::Connected, ConnectivityEvidence::Nonempty);
    }
    if complex.is_empty() {
        return done(ConnectivityVerdict::NotConnected, ConnectivityEvidence::Empty);
    }
    if k == -1 {
        return done(ConnectivityVerdict::Connected, ConnectivityEvidence::Nonempty);
    }
    let count = complex.components().len();
    if count > 1 {
        return done(ConnectivityVerdict::NotConnected, ConnectivityEvidence::Components { count });
    }
    if k == 0 {
        return done(ConnectivityVerdict::Connected, ConnectivityEvidence::Components { count });
    }
    let profile = homology(complex, true);
    if !profile.vanishes_through(k) {
        return done(
            ConnectivityVerdict::NotConnected,
            ConnectivityEvidence::HomologyObstruction { profile },
        );
    }
    match simple_connectivity_proof(complex) {
        Ok(evidence) => done(ConnectivityVerdict::Connected, evidence),
        Err(tietze_steps) => done(
            ConnectivityVerdict::Unknown,
            ConnectivityEvidence::NoSimpleConnectivityProof { tietze_steps },
        ),
    }
}
