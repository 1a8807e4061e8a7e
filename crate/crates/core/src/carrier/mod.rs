//! Carriers between covers, carried maps, and the constructions that
//! produce carried maps.

mod canonical;
mod carried;
mod construct;
mod map;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

pub use canonical::{canonical_nerve_map, is_carried_by_k};
pub use carried::{is_carried, is_weakly_carried, FaceWitness, MapCheck, FACEWISE_NOTE};
pub use construct::{carried_map_via_cones, extend_carried_map, ConeCertificates};
pub use map::SimplicialMap;

use crate::complex::dim_lex;
use crate::cover::{barycentric_star_cover, open_star_cover, Cover, Nerve, PieceName};
use crate::error::{Error, Result};

/// Outcome of [`Carrier::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Validity {
    Valid,
    /// The least collection (by size, then names) with nonempty
    /// intersection whose image collection has empty intersection.
    Invalid { witness: Vec<PieceName> },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// A piece-to-piece assignment between two covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    domain: Arc<Cover>,
    codomain: Arc<Cover>,
    assignment: BTreeMap<PieceName, PieceName>,
}

impl Carrier {
    /// Checks that the assignment is total with values among the codomain
    /// pieces. Validity is a separate question; see [`Carrier::validate`].
    pub fn new(
        domain: impl Into<Arc<Cover>>,
        codomain: impl Into<Arc<Cover>>,
        assignment: BTreeMap<PieceName, PieceName>,
    ) -> Result<Carrier> {
        let domain = domain.into();
        let codomain = codomain.into();
        for name in domain.names() {
            if !assignment.contains_key(name) {
                return Err(Error::Malformed(format!("piece `{name}` has no assigned image")));
            }
        }
        for (from, to) in &assignment {
            domain.piece(from)?;
            codomain.piece(to)?;
        }
        Ok(Carrier {
            domain,
            codomain,
            assignment,
        })
    }

    pub fn identity(cover: impl Into<Arc<Cover>>) -> Carrier {
        let cover = cover.into();
        let assignment = cover.names().map(|n| (n.clone(), n.clone())).collect();
        Carrier {
            domain: cover.clone(),
            codomain: cover,
            assignment,
        }
    }

    pub fn domain(&self) -> &Arc<Cover> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Cover> {
        &self.codomain
    }

    pub fn assignment(&self) -> &BTreeMap<PieceName, PieceName> {
        &self.assignment
    }

    pub fn apply(&self, name: &PieceName) -> &PieceName {
        &self.assignment[name]
    }

    /// Image of a collection, deduplicated and sorted.
    pub fn image_of(&self, collection: &[PieceName]) -> Vec<PieceName> {
        collection
            .iter()
            .map(|n| self.apply(n).clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Every collection of domain pieces with nonempty intersection must
    /// have an image collection with nonempty intersection.
    pub fn validate(&self) -> Validity {
        let nerve = self.domain.nerve(None);
        let mut faces: Vec<_> = nerve.witnesses.keys().collect();
        faces.sort_by(|a, b| dim_lex(a, b));
        let mut checked: BTreeMap<Vec<PieceName>, bool> = BTreeMap::new();
        for face in faces {
            let collection = Nerve::names(face);
            let image = self.image_of(&collection);
            let ok = *checked.entry(image.clone()).or_insert_with(|| {
                !self.codomain.intersection(&image).expect("assigned names are pieces").is_empty()
            });
            if !ok {
                return Validity::Invalid { witness: collection };
            }
        }
        Validity::Valid
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Carrier) -> Result<Carrier> {
        if !Arc::ptr_eq(&self.codomain, &other.domain) && self.codomain != other.domain {
            return Err(Error::CoverMismatch);
        }
        let assignment = self
            .assignment
            .iter()
            .map(|(a, b)| (a.clone(), other.apply(b).clone()))
            .collect();
        Ok(Carrier {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            assignment,
        })
    }

    /// The inverse carrier, when the assignment is a bijection whose
    /// inverse is again a valid carrier.
    pub fn invert(&self) -> Option<Carrier> {
        if self.assignment.len() != self.codomain.len() {
            return None;
        }
        let mut inverse = BTreeMap::new();
        for (a, b) in &self.assignment {
            if inverse.insert(b.clone(), a.clone()).is_some() {
                return None;
            }
        }
        let inv = Carrier {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            assignment: inverse,
        };
        inv.validate().is_valid().then_some(inv)
    }

    /// The carrier between the subdivided domain cover and the same
    /// codomain, piece `sd(F)` going where `F` went.
    pub fn subdivided(&self) -> Carrier {
        Carrier {
            domain: Arc::new(self.domain.subdivided()),
            codomain: self.codomain.clone(),
            assignment: self.assignment.clone(),
        }
    }
}

fn nerve_vertex_assignment(cover: &Cover) -> Result<BTreeMap<PieceName, PieceName>> {
    cover
        .pieces()
        .iter()
        .map(|(n, p)| {
            if p.is_empty() {
                Err(Error::EmptyPiece(n.clone()))
            } else {
                Ok((n.clone(), n.clone()))
            }
        })
        .collect()
}

/// `F ↦ st v(F)`, into the open-star cover of the nerve.
pub fn s_carrier(cover: impl Into<Arc<Cover>>) -> Result<Carrier> {
    let cover = cover.into();
    let assignment = nerve_vertex_assignment(&cover)?;
    let codomain = open_star_cover(&cover.nerve(None).complex);
    Carrier::new(cover, codomain, assignment)
}

/// `F ↦ bst v(F)`, into the barycentric-star cover of the nerve.
pub fn b_carrier(cover: impl Into<Arc<Cover>>) -> Result<Carrier> {
    let cover = cover.into();
    let assignment = nerve_vertex_assignment(&cover)?;
    let codomain = barycentric_star_cover(&cover.nerve(None).complex);
    Carrier::new(cover, codomain, assignment)
}

/// `bst v ↦ st v`: from the barycentric-star cover to the open-star cover
/// of the same complex. Both covers must have been built by the star-cover
/// constructors over that complex.
pub fn i_carrier(bst: impl Into<Arc<Cover>>, st: impl Into<Arc<Cover>>) -> Result<Carrier> {
    let bst = bst.into();
    let st = st.into();
    if bst.names().ne(st.names()) {
        return Err(Error::CoverMismatch);
    }
    let assignment = bst.names().map(|n| (n.clone(), n.clone())).collect();
    Carrier::new(bst, st, assignment)
}
