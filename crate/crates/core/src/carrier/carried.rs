use serde::Serialize;

use super::{Carrier, SimplicialMap};
use crate::complex::{dim_lex, Simplex};
use crate::cover::PieceName;
use crate::error::{Error, Result};

pub const FACEWISE_NOTE: &str =
    "pointwise condition checked facewise on simplices, which is stronger and sound for realizations";

/// Result of a facewise check on a simplicial map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapCheck {
    pub holds: bool,
    /// The least offending face and, where one is singled out, the piece.
    pub witness: Option<FaceWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceWitness {
    pub face: Simplex,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub piece: Option<PieceName>,
}

impl MapCheck {
    pub(crate) fn ok() -> MapCheck {
        MapCheck {
            holds: true,
            witness: None,
        }
    }

    pub(crate) fn fail(face: Simplex, piece: Option<PieceName>) -> MapCheck {
        MapCheck {
            holds: false,
            witness: Some(FaceWitness { face, piece }),
        }
    }
}

fn compatible(f: &SimplicialMap, c: &Carrier) -> Result<()> {
    if f.source() != c.domain().base() {
        return Err(Error::Incompatible("map source is not the base of the carrier's domain".into()));
    }
    if f.target() != c.codomain().base() {
        return Err(Error::Incompatible("map target is not the base of the carrier's codomain".into()));
    }
    Ok(())
}

/// `f(F) ⊂ C(F)` for every domain piece `F`, face by face.
pub fn is_carried(f: &SimplicialMap, c: &Carrier) -> Result<MapCheck> {
    compatible(f, c)?;
    let mut worst: Option<(Simplex, PieceName)> = None;
    for (name, piece) in c.domain().pieces() {
        let target = c.codomain().piece(c.apply(name))?;
        let bad = piece
            .faces()
            .iter()
            .filter(|s| !target.contains_face(&f.image(s)))
            .min_by(|a, b| dim_lex(a, b));
        if let Some(s) = bad {
            if worst.as_ref().is_none_or(|(w, _)| dim_lex(s, w).is_lt()) {
                worst = Some((s.clone(), name.clone()));
            }
        }
    }
    Ok(match worst {
        None => MapCheck::ok(),
        Some((face, piece)) => MapCheck::fail(face, Some(piece)),
    })
}

/// Every face `σ` of the source lies in some piece `F` with `f(σ) ∈ C(F)`.
pub fn is_weakly_carried(f: &SimplicialMap, c: &Carrier) -> Result<MapCheck> {
    compatible(f, c)?;
    for s in f.source().faces_canonical() {
        let image = f.image(&s);
        let witnessed = c.domain().pieces().iter().any(|(name, piece)| {
            piece.contains_face(&s)
                && c.codomain()
                    .piece(c.apply(name))
                    .is_ok_and(|p| p.contains_face(&image))
        });
        if !witnessed {
            return Ok(MapCheck::fail(s, None));
        }
    }
    Ok(MapCheck::ok())
}
