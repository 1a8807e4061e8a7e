use std::collections::BTreeMap;

use super::{MapCheck, SimplicialMap};
use crate::complex::{dim_lex, Simplex, Vertex};
use crate::cover::{Cover, CoverKind};
use crate::error::{Error, Result};

/// The barycentric canonical map `sd(base) → N(F)`: `b(σ)` goes to the
/// least piece containing `σ`. Along a flag every chosen piece contains the
/// minimal face, so the image is a nerve face.
pub fn canonical_nerve_map(cover: &Cover) -> Result<SimplicialMap> {
    if cover.kind() != CoverKind::Closed {
        return Err(Error::RequiresClosedCover);
    }
    let nerve = cover.nerve(None).complex;
    let sd = cover.base().barycentric_subdivision();
    let mut vertex_map = BTreeMap::new();
    for sigma in cover.base().faces() {
        let least = cover
            .pieces()
            .iter()
            .find(|(_, p)| p.contains_face(sigma))
            .map(|(n, _)| n.vertex())
            .expect("covers contain every face");
        vertex_map.insert(Vertex::barycenter(sigma.clone()), least);
    }
    SimplicialMap::new(sd, nerve, vertex_map)
}

/// Every flag `τ` with minimal face `σ₀` must map into the nerve face of
/// the pieces containing `σ₀`.
pub fn is_carried_by_k(h: &SimplicialMap, cover: &Cover) -> Result<MapCheck> {
    if cover.kind() != CoverKind::Closed {
        return Err(Error::RequiresClosedCover);
    }
    if h.source() != &cover.base().barycentric_subdivision() {
        return Err(Error::Incompatible("map is not defined on sd of the cover base".into()));
    }
    let mut flags: Vec<&Simplex> = h.source().faces().iter().collect();
    flags.sort_by(|a, b| dim_lex(a, b));
    for flag in flags {
        // flags sort by inclusion, so the first vertex is the minimal face
        let sigma0 = flag.vertices()[0].as_barycenter().expect("vertices of sd are barycenters");
        let allowed: Vec<Vertex> = cover.pieces_containing(sigma0).iter().map(|n| n.vertex()).collect();
        if !h.image(flag).vertices().iter().all(|v| allowed.contains(v)) {
            return Ok(MapCheck::fail(flag.clone(), None));
        }
    }
    Ok(MapCheck::ok())
}
