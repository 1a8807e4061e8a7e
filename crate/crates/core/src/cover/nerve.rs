use std::collections::{BTreeMap, BTreeSet};

use super::{Cover, PieceName};
use crate::complex::{dim_lex, Simplex, SimplicialComplex};

/// The nerve of a cover. Vertices are piece names; each face carries the
/// least face of the base lying in the corresponding intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nerve {
    pub complex: SimplicialComplex,
    pub witnesses: BTreeMap<Simplex, Simplex>,
    /// Faces of dimension above the cap were not enumerated.
    pub dimension_cap: Option<usize>,
}

impl Nerve {
    /// Piece names of a nerve face.
    pub fn names(face: &Simplex) -> Vec<PieceName> {
        face.vertices().iter().map(PieceName::of_vertex).collect()
    }
}

/// Grows cliques of the pairwise-intersection graph, carrying the running
/// intersection so that each candidate costs one set intersection.
pub(super) fn nerve(cover: &Cover, dimension_cap: Option<usize>) -> Nerve {
    let live: Vec<(&PieceName, &BTreeSet<Simplex>)> = cover
        .pieces()
        .iter()
        .filter(|(_, p)| !p.is_empty())
        .map(|(n, p)| (n, p.faces()))
        .collect();
    let n = live.len();
    let mut adjacent = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let meet = live[i].1.iter().any(|s| live[j].1.contains(s));
            adjacent[i][j] = meet;
            adjacent[j][i] = meet;
        }
    }
    let max_size = dimension_cap.map_or(n, |c| (c + 1).min(n));

    let mut witnesses = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, BTreeSet<Simplex>)> = (0..n).rev().map(|i| (vec![i], live[i].1.clone())).collect();
    while let Some((members, common)) = stack.pop() {
        let face = Simplex::spanned_by(members.iter().map(|&i| live[i].0.vertex()));
        let witness = common.iter().min_by(|a, b| dim_lex(a, b)).expect("nonempty intersection").clone();
        witnesses.insert(face, witness);
        if members.len() >= max_size {
            continue;
        }
        let last = *members.last().unwrap();
        for j in (last + 1..n).rev() {
            if !members.iter().all(|&i| adjacent[i][j]) {
                continue;
            }
            let next: BTreeSet<Simplex> = common.iter().filter(|s| live[j].1.contains(*s)).cloned().collect();
            if next.is_empty() {
                continue;
            }
            let mut grown = members.clone();
            grown.push(j);
            stack.push((grown, next));
        }
    }
    let complex = SimplicialComplex::from_simplices(witnesses.keys().cloned());
    Nerve {
        complex,
        witnesses,
        dimension_cap,
    }
}

#[cfg(test)]
mod tests {
    use super::super::Cover;
    use super::*;

    fn cx(facets: &[&[&str]]) -> SimplicialComplex {
        let f: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_labels(&f).unwrap()
    }

    #[test]
    fn single_piece_nerve_is_a_point() {
        let k = cx(&[&["a", "b", "c"]]);
        let c = Cover::closed(k.clone(), [("all", k)]).unwrap();
        let n = c.nerve(None);
        assert_eq!(n.complex, cx(&[&["all"]]));
        assert_eq!(n.witnesses.len(), 1);
    }

    #[test]
    fn witnesses_lie_in_intersections() {
        let base = cx(&[&["a", "b"], &["b", "c"], &["c", "a"]]);
        let c = Cover::closed(
            base,
            [("p", cx(&[&["a", "b"]])), ("q", cx(&[&["b", "c"]])), ("r", cx(&[&["c", "a"]]))],
        )
        .unwrap();
        let n = c.nerve(None);
        assert_eq!(n.complex, cx(&[&["p", "q"], &["q", "r"], &["p", "r"]]));
        for (face, w) in &n.witnesses {
            let names = Nerve::names(face);
            assert!(c.intersection(&names).unwrap().contains_face(w));
        }
    }

    #[test]
    fn capped_nerve_omits_high_faces() {
        let k = cx(&[&["a", "b", "c"]]);
        let c = Cover::closed(
            k.clone(),
            [("p", k.clone()), ("q", k.clone()), ("r", k)],
        )
        .unwrap();
        assert_eq!(c.nerve(None).complex.dim(), Some(2));
        let capped = c.nerve(Some(1));
        assert_eq!(capped.complex.dim(), Some(1));
        assert_eq!(capped.dimension_cap, Some(1));
    }
}
