//! Covers of a complex by named pieces, their nerves, star covers and
//! regularity certificates.

mod nerve;
mod regularity;
mod stars;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

pub use nerve::Nerve;
pub use regularity::{contractibility, RegularityCertificate, RegularityMode, RegularityReport, CollectionCheck};
pub use stars::{barycentric_star_cover, open_star_cover};

use crate::carrier::Carrier;
use crate::complex::{complexes_isomorphic, OpenStarSet, Simplex, SimplicialComplex, Vertex, DEFAULT_ISO_CAP};
use crate::error::{Error, Result};

/// A piece label. Stored in canonical vertex-label form, so that the nerve
/// vertex of a piece prints as the piece name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PieceName(Arc<str>);

impl PieceName {
    pub fn new(name: &str) -> Result<PieceName> {
        let v = Vertex::parse(name).map_err(|_| Error::Malformed(format!("invalid piece name `{name}`")))?;
        Ok(PieceName::of_vertex(&v))
    }

    pub fn of_vertex(v: &Vertex) -> PieceName {
        PieceName(Arc::from(v.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The nerve vertex naming this piece.
    pub fn vertex(&self) -> Vertex {
        Vertex::parse(&self.0).expect("piece names are valid vertex labels")
    }
}

impl fmt::Display for PieceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for PieceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for PieceName {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverKind {
    Closed,
    OpenStars,
}

/// A piece of a cover, or an intersection or union of pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Piece {
    Closed(SimplicialComplex),
    OpenStar(OpenStarSet),
    /// A face set that need not be a subcomplex: intersections and unions
    /// of open stars.
    Faces(BTreeSet<Simplex>),
}

impl Piece {
    pub fn faces(&self) -> &BTreeSet<Simplex> {
        match self {
            Piece::Closed(k) => k.faces(),
            Piece::OpenStar(s) => &s.members,
            Piece::Faces(f) => f,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.faces().is_empty()
    }

    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.faces().contains(s)
    }

    /// Least face in (dimension, lexicographic) order.
    pub fn least_face(&self) -> Option<Simplex> {
        self.faces().iter().min_by(|a, b| crate::complex::dim_lex(a, b)).cloned()
    }

    /// A subcomplex with the homotopy type of the piece. Closed pieces are
    /// returned as they are. A face set is replaced by its closed carrier
    /// in the subdivision: the flags all of whose faces lie in the set.
    pub fn realize(&self, sd_base: &SimplicialComplex) -> SimplicialComplex {
        match self {
            Piece::Closed(k) => k.clone(),
            _ => closed_carrier(self.faces(), sd_base),
        }
    }
}

/// Flags of `sd_base` whose faces all belong to `faces`.
pub(crate) fn closed_carrier(faces: &BTreeSet<Simplex>, sd_base: &SimplicialComplex) -> SimplicialComplex {
    let kept = sd_base
        .faces()
        .iter()
        .filter(|flag| {
            flag.vertices()
                .iter()
                .all(|b| b.as_barycenter().is_some_and(|s| faces.contains(s)))
        })
        .cloned()
        .collect();
    SimplicialComplex::from_closed_faces(kept)
}

/// A finite family of named pieces covering every face of `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    base: SimplicialComplex,
    kind: CoverKind,
    pieces: BTreeMap<PieceName, Piece>,
}

impl Cover {
    /// Checks piece kinds, that closed pieces are subcomplexes of `base`,
    /// that open pieces are genuine open stars, and the covering property.
    pub fn new(base: SimplicialComplex, kind: CoverKind, pieces: BTreeMap<PieceName, Piece>) -> Result<Cover> {
        for (name, piece) in &pieces {
            match (kind, piece) {
                (CoverKind::Closed, Piece::Closed(k)) => {
                    if !k.is_subcomplex_of(&base) {
                        return Err(Error::Malformed(format!("piece `{name}` is not a subcomplex of the base")));
                    }
                }
                (CoverKind::OpenStars, Piece::OpenStar(s)) => {
                    if base.open_star(&s.center)? != *s {
                        return Err(Error::Malformed(format!("piece `{name}` is not an open star of the base")));
                    }
                }
                _ => return Err(Error::Malformed(format!("piece `{name}` does not match the cover kind"))),
            }
        }
        // closed pieces cover every face once they cover the facets; open
        // stars do once they cover the vertices
        let probes: Vec<Simplex> = match kind {
            CoverKind::Closed => base.facets().iter().cloned().collect(),
            CoverKind::OpenStars => base.vertices().iter().cloned().map(Simplex::point).collect(),
        };
        for s in probes {
            if !pieces.values().any(|p| p.contains_face(&s)) {
                return Err(Error::Malformed(format!("face {s} is not covered")));
            }
        }
        Ok(Cover { base, kind, pieces })
    }

    /// A closed cover from named subcomplexes.
    pub fn closed<I, S>(base: SimplicialComplex, pieces: I) -> Result<Cover>
    where
        I: IntoIterator<Item = (S, SimplicialComplex)>,
        S: AsRef<str>,
    {
        let mut map = BTreeMap::new();
        for (name, k) in pieces {
            let name = PieceName::new(name.as_ref())?;
            if map.insert(name.clone(), Piece::Closed(k)).is_some() {
                return Err(Error::Malformed(format!("piece `{name}` given twice")));
            }
        }
        Cover::new(base, CoverKind::Closed, map)
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn kind(&self) -> CoverKind {
        self.kind
    }

    pub fn pieces(&self) -> &BTreeMap<PieceName, Piece> {
        &self.pieces
    }

    pub fn names(&self) -> impl Iterator<Item = &PieceName> {
        self.pieces.keys()
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn piece(&self, name: &PieceName) -> Result<&Piece> {
        self.pieces.get(name).ok_or_else(|| Error::UnknownPiece(name.to_string()))
    }

    pub fn piece_by_str(&self, name: &str) -> Result<&Piece> {
        self.piece(&PieceName::new(name)?)
    }

    fn wrap(&self, faces: BTreeSet<Simplex>) -> Piece {
        match self.kind {
            CoverKind::Closed => Piece::Closed(SimplicialComplex::from_closed_faces(faces)),
            CoverKind::OpenStars => Piece::Faces(faces),
        }
    }

    /// Common part of the named pieces. For open stars this is nonempty
    /// exactly when the centers span a face of the base.
    pub fn intersection<'a, I>(&self, names: I) -> Result<Piece>
    where
        I: IntoIterator<Item = &'a PieceName>,
    {
        let mut acc: Option<BTreeSet<Simplex>> = None;
        for name in names {
            let faces = self.piece(name)?.faces();
            acc = Some(match acc {
                None => faces.clone(),
                Some(a) => a.intersection(faces).cloned().collect(),
            });
        }
        let faces = acc.ok_or_else(|| Error::Malformed("intersection of no pieces".into()))?;
        Ok(self.wrap(faces))
    }

    pub fn union_of<'a, I>(&self, names: I) -> Result<Piece>
    where
        I: IntoIterator<Item = &'a PieceName>,
    {
        let mut acc: BTreeSet<Simplex> = BTreeSet::new();
        let mut any = false;
        for name in names {
            acc.extend(self.piece(name)?.faces().iter().cloned());
            any = true;
        }
        if !any {
            return Err(Error::Malformed("union of no pieces".into()));
        }
        Ok(self.wrap(acc))
    }

    /// Union of all pieces meeting the given one, the piece included.
    pub fn cover_star(&self, name: &PieceName) -> Result<Piece> {
        let own = self.piece(name)?.faces();
        let meeting: Vec<&PieceName> = self
            .pieces
            .iter()
            .filter(|(n, p)| *n == name || p.faces().iter().any(|s| own.contains(s)))
            .map(|(n, _)| n)
            .collect();
        self.union_of(meeting)
    }

    /// Names of the pieces containing the face `s`.
    pub fn pieces_containing(&self, s: &Simplex) -> Vec<PieceName> {
        self.pieces
            .iter()
            .filter(|(_, p)| p.contains_face(s))
            .map(|(n, _)| n.clone())
            .collect()
    }

    pub fn nerve(&self, dimension_cap: Option<usize>) -> Nerve {
        nerve::nerve(self, dimension_cap)
    }

    pub fn check_regularity(&self, mode: RegularityMode) -> RegularityReport {
        regularity::check_regularity(self, mode)
    }

    /// The cover of `sd(base)` by the closed carriers of the pieces (for
    /// closed pieces, their subdivisions).
    pub fn subdivided(&self) -> Cover {
        let sd = self.base.barycentric_subdivision();
        let pieces = self
            .pieces
            .iter()
            .map(|(n, p)| (n.clone(), Piece::Closed(closed_carrier(p.faces(), &sd))))
            .collect();
        Cover {
            base: sd,
            kind: CoverKind::Closed,
            pieces,
        }
    }
}

/// Searches for an invertible carrier `f → g`: a bijection of piece names
/// inducing an isomorphism of nerves.
pub fn covers_isomorphic(f: &Arc<Cover>, g: &Arc<Cover>) -> Result<Option<Carrier>> {
    if f.len() != g.len() {
        return Ok(None);
    }
    let nf = f.nerve(None);
    let ng = g.nerve(None);
    let Some(bijection) = complexes_isomorphic(&nf.complex, &ng.complex, DEFAULT_ISO_CAP)? else {
        return Ok(None);
    };
    let mut assignment: BTreeMap<PieceName, PieceName> = bijection
        .iter()
        .map(|(a, b)| (PieceName::of_vertex(a), PieceName::of_vertex(b)))
        .collect();
    // pieces outside the nerve are empty on both sides; pair them in order
    let empty_f = f.names().filter(|n| !assignment.contains_key(*n));
    let used: BTreeSet<&PieceName> = assignment.values().collect();
    let empty_g: Vec<PieceName> = g.names().filter(|n| !used.contains(n)).cloned().collect();
    let extra: Vec<(PieceName, PieceName)> = empty_f.cloned().zip(empty_g).collect();
    assignment.extend(extra);
    Ok(Some(Carrier::new(f.clone(), g.clone(), assignment)?))
}
