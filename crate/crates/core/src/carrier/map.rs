use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// A vertex map between complexes sending every face onto a face. Images
/// may collapse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertex_map: BTreeMap<Vertex, Vertex>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: BTreeMap<Vertex, Vertex>,
    ) -> Result<SimplicialMap> {
        let f = SimplicialMap {
            source,
            target,
            vertex_map,
        };
        f.check()?;
        Ok(f)
    }

    pub fn identity(k: &SimplicialComplex) -> SimplicialMap {
        SimplicialMap {
            source: k.clone(),
            target: k.clone(),
            vertex_map: k.vertices().iter().map(|v| (v.clone(), v.clone())).collect(),
        }
    }

    pub fn constant(source: &SimplicialComplex, target: &SimplicialComplex, v: &Vertex) -> Result<SimplicialMap> {
        if !target.contains_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(SimplicialMap {
            source: source.clone(),
            target: target.clone(),
            vertex_map: source.vertices().iter().map(|w| (w.clone(), v.clone())).collect(),
        })
    }

    /// Totality on the source, values in the target, and simpliciality.
    /// Checking facets suffices because the target is closed under faces.
    pub fn check(&self) -> Result<()> {
        for v in self.source.vertices() {
            match self.vertex_map.get(v) {
                None => return Err(Error::Malformed(format!("vertex `{v}` has no image"))),
                Some(w) if !self.target.contains_vertex(w) => return Err(Error::UnknownVertex(w.to_string())),
                Some(_) => {}
            }
        }
        if let Some(extra) = self.vertex_map.keys().find(|v| !self.source.contains_vertex(v)) {
            return Err(Error::UnknownVertex(extra.to_string()));
        }
        for facet in self.source.facets() {
            if !self.target.contains_face(&self.image(facet)) {
                return Err(Error::NotSimplicial { face: facet.clone() });
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    pub fn apply(&self, v: &Vertex) -> &Vertex {
        &self.vertex_map[v]
    }

    /// Image face of `s`, repeats merged.
    pub fn image(&self, s: &Simplex) -> Simplex {
        Simplex::spanned_by(s.vertices().iter().map(|v| self.apply(v).clone()))
    }

    /// The map `g ∘ self`.
    pub fn then(&self, g: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != g.source {
            return Err(Error::Incompatible("target of the first map is not the source of the second".into()));
        }
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: g.target.clone(),
            vertex_map: self
                .vertex_map
                .iter()
                .map(|(v, w)| (v.clone(), g.apply(w).clone()))
                .collect(),
        })
    }

    /// The subcomplex of the target spanned by the images of all faces.
    pub fn image_complex(&self) -> SimplicialComplex {
        let faces: BTreeSet<Simplex> = self.source.facets().iter().map(|f| self.image(f)).collect();
        SimplicialComplex::from_simplices(faces)
    }

    /// Same map with one vertex reassigned; simpliciality is not checked.
    #[cfg(test)]
    pub(crate) fn with_value(&self, v: &Vertex, w: Vertex) -> SimplicialMap {
        let mut out = self.clone();
        out.vertex_map.insert(v.clone(), w);
        out
    }

    pub(crate) fn from_parts_unchecked(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: BTreeMap<Vertex, Vertex>,
    ) -> SimplicialMap {
        SimplicialMap {
            source,
            target,
            vertex_map,
        }
    }
}
