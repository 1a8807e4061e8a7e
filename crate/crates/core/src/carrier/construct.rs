use std::collections::BTreeMap;

use super::{is_carried, Carrier, SimplicialMap, Validity};
use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::cover::{Cover, CoverKind, Nerve, Piece, PieceName};
use crate::error::{Error, Result};

/// Apexes of codomain intersections, keyed by the (sorted) collection.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeCertificates {
    apexes: BTreeMap<Vec<PieceName>, Vertex>,
}

impl ConeCertificates {
    pub fn new() -> ConeCertificates {
        ConeCertificates::default()
    }

    /// Least apex of every nerve-face intersection that is a cone.
    pub fn compute(codomain: &Cover) -> Result<ConeCertificates> {
        if codomain.kind() != CoverKind::Closed {
            return Err(Error::RequiresClosedCover);
        }
        let mut apexes = BTreeMap::new();
        for face in codomain.nerve(None).witnesses.keys() {
            let collection = Nerve::names(face);
            if let Some(apex) = intersection_complex(codomain, &collection)?.is_cone() {
                apexes.insert(collection, apex);
            }
        }
        Ok(ConeCertificates { apexes })
    }

    pub fn insert(&mut self, mut collection: Vec<PieceName>, apex: Vertex) {
        collection.sort();
        collection.dedup();
        self.apexes.insert(collection, apex);
    }

    pub fn get(&self, collection: &[PieceName]) -> Option<&Vertex> {
        self.apexes.get(collection)
    }

    pub fn len(&self) -> usize {
        self.apexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.apexes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<PieceName>, &Vertex)> {
        self.apexes.iter()
    }

    /// Looks up the apex for `collection` and checks that it lies in every
    /// facet of the intersection.
    fn apex(&self, codomain: &Cover, collection: &[PieceName]) -> Result<Vertex> {
        let apex = self
            .get(collection)
            .ok_or_else(|| Error::MissingConeCertificate(collection.to_vec()))?;
        let k = intersection_complex(codomain, collection)?;
        if k.is_empty() || !k.facets().iter().all(|f| f.contains(apex)) {
            return Err(Error::BadConeCertificate {
                collection: collection.to_vec(),
                apex: apex.to_string(),
            });
        }
        Ok(apex.clone())
    }
}

fn intersection_complex(cover: &Cover, collection: &[PieceName]) -> Result<SimplicialComplex> {
    match cover.intersection(collection)? {
        Piece::Closed(k) => Ok(k),
        _ => Err(Error::RequiresClosedCover),
    }
}

fn preconditions(c: &Carrier) -> Result<()> {
    if c.domain().kind() != CoverKind::Closed || c.codomain().kind() != CoverKind::Closed {
        return Err(Error::RequiresClosedCover);
    }
    if let Validity::Invalid { witness } = c.validate() {
        return Err(Error::InvalidCarrier { collection: witness });
    }
    Ok(())
}

/// Apex assigned to the barycenter of `sigma`: the certified apex of the
/// intersection of `C(F)` over all domain pieces `F` containing `sigma`.
fn apex_of_face(c: &Carrier, cones: &ConeCertificates, sigma: &Simplex, cache: &mut BTreeMap<Vec<PieceName>, Vertex>) -> Result<Vertex> {
    let containing = c.domain().pieces_containing(sigma);
    let image = c.image_of(&containing);
    if let Some(v) = cache.get(&image) {
        return Ok(v.clone());
    }
    let v = cones.apex(c.codomain(), &image)?;
    cache.insert(image, v.clone());
    Ok(v)
}

fn assert_carried(f: &SimplicialMap, c: &Carrier) -> Result<()> {
    let check = is_carried(f, &c.subdivided())?;
    match check.witness {
        None => Ok(()),
        Some(w) => Err(Error::CarrierViolation {
            piece: w.piece.expect("carried checks name the piece"),
            face: w.face,
        }),
    }
}

/// The finite carrier theorem: a map `sd(X) → Y` carried by `C`, sending
/// `b(σ)` to the certified apex of `⋂ { C(F) : σ ∈ F }`.
///
/// Along a flag the collections shrink, so the intersections grow and each
/// apex cones over the images of the smaller faces; the map is therefore
/// simplicial, and this is checked rather than assumed, as is carriedness
/// against the subdivided carrier.
pub fn carried_map_via_cones(c: &Carrier, cones: &ConeCertificates) -> Result<SimplicialMap> {
    preconditions(c)?;
    let x = c.domain().base();
    let sd = x.barycentric_subdivision();
    let mut cache = BTreeMap::new();
    let mut vertex_map = BTreeMap::new();
    for sigma in x.faces() {
        let apex = apex_of_face(c, cones, sigma, &mut cache)?;
        vertex_map.insert(Vertex::barycenter(sigma.clone()), apex);
    }
    let f = SimplicialMap::new(sd, c.codomain().base().clone(), vertex_map)?;
    assert_carried(&f, c)?;
    Ok(f)
}

/// Extends `f0`, defined on a subcomplex of `sd(X)` and carried by `C`, to
/// all of `sd(X)`: vertices of the subcomplex keep their values, the rest
/// get apexes. Fails with `UnknownExtension` on the least flag whose image
/// is not a face.
pub fn extend_carried_map(f0: &SimplicialMap, c: &Carrier, cones: &ConeCertificates) -> Result<SimplicialMap> {
    preconditions(c)?;
    let sd = c.domain().base().barycentric_subdivision();
    let y = c.codomain().base();
    if !f0.source().is_subcomplex_of(&sd) {
        return Err(Error::Incompatible("the map is not defined on a subcomplex of sd(X)".into()));
    }
    if f0.target() != y {
        return Err(Error::Incompatible("the map does not land in the codomain base".into()));
    }
    let sub = c.subdivided();
    for (name, piece) in sub.domain().pieces() {
        let target = y_piece(c, name)?;
        for s in piece.faces().iter().filter(|s| f0.source().contains_face(s)) {
            if !target.contains_face(&f0.image(s)) {
                return Err(Error::CarrierViolation {
                    piece: name.clone(),
                    face: s.clone(),
                });
            }
        }
    }

    let mut cache = BTreeMap::new();
    let mut vertex_map = BTreeMap::new();
    for b in sd.vertices() {
        let value = if f0.source().contains_vertex(b) {
            f0.apply(b).clone()
        } else {
            let sigma = b.as_barycenter().expect("vertices of sd are barycenters");
            apex_of_face(c, cones, sigma, &mut cache)?
        };
        vertex_map.insert(b.clone(), value);
    }
    let f = SimplicialMap::from_parts_unchecked(sd, y.clone(), vertex_map);
    let mut flags: Vec<&Simplex> = f.source().faces().iter().collect();
    flags.sort_by(|a, b| crate::complex::dim_lex(a, b));
    if let Some(flag) = flags.into_iter().find(|s| !y.contains_face(&f.image(s))) {
        return Err(Error::UnknownExtension { flag: flag.clone() });
    }
    assert_carried(&f, c)?;
    Ok(f)
}

fn y_piece<'a>(c: &'a Carrier, name: &PieceName) -> Result<&'a Piece> {
    c.codomain().piece(c.apply(name))
}
