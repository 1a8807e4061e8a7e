//! Exact integral homology: sparse integer matrices, Smith normal form,
//! chain complexes, induced maps, mapping cones and connectivity checks.

mod chain;
mod connectivity;
mod matrix;
mod presentation;
mod profile;
mod quasi;
mod snf;

pub use chain::{
    chain_complex, homology, induced_chain_map, is_acyclic, mapping_cone, ChainComplex, ChainMap, Generator,
};
pub use connectivity::{
    connectivity_certificate, ConnectivityCertificate, ConnectivityEvidence, ConnectivityVerdict,
    DEFAULT_COLLAPSE_BUDGET,
};
pub use matrix::IntegerMatrix;
pub use presentation::{edge_path_presentation, simplify, Presentation, TietzeOutcome, DEFAULT_TIETZE_BUDGET};
pub use profile::{DegreeHomology, HomologyProfile};
pub use quasi::{is_quasi_iso, same_on_homology, QuasiIso};
pub use snf::{invariant_factors, smith_normal_form, SnfDecomposition};
