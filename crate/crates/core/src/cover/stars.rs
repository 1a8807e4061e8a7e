use std::collections::BTreeMap;

use super::{Cover, CoverKind, Piece, PieceName};
use crate::complex::SimplicialComplex;

/// One open star per vertex, named by the vertex label.
pub fn open_star_cover(k: &SimplicialComplex) -> Cover {
    let pieces: BTreeMap<PieceName, Piece> = k
        .vertices()
        .iter()
        .map(|v| {
            let star = k.open_star(v).expect("vertex of the complex");
            (PieceName::of_vertex(v), Piece::OpenStar(star))
        })
        .collect();
    Cover::new(k.clone(), CoverKind::OpenStars, pieces).expect("open stars cover the complex")
}

/// One barycentric star per vertex, as a closed cover of `sd(k)`.
pub fn barycentric_star_cover(k: &SimplicialComplex) -> Cover {
    let pieces: BTreeMap<PieceName, Piece> = k
        .vertices()
        .iter()
        .map(|v| {
            let star = k.barycentric_star(v).expect("vertex of the complex");
            (PieceName::of_vertex(v), Piece::Closed(star))
        })
        .collect();
    Cover::new(k.barycentric_subdivision(), CoverKind::Closed, pieces).expect("barycentric stars cover sd")
}
