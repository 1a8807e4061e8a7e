//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

use carrier_nerve::carrier::{Carrier, SimplicialMap, Validity};
use carrier_nerve::complex::{Simplex, SimplicialComplex, Vertex};
use carrier_nerve::cover::{Cover, PieceName};

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * det(&minor);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors as quotients of determinantal divisors: `d_k` is the
/// gcd of all `k × k` minors.
pub fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut divisors = vec![1i64];
    for k in 1..=rows.min(cols) {
        let mut g = 0i64;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| w[1] / w[0]).collect()
}

/// Validity by enumerating every nonempty subcollection of domain pieces.
/// The witness is the least failing collection by size, then names.
pub fn validity_by_enumeration(c: &Carrier) -> Validity {
    let names: Vec<PieceName> = c.domain().names().cloned().collect();
    let meet = |cover: &Cover, collection: &[PieceName]| -> bool {
        let mut acc: Option<BTreeSet<Simplex>> = None;
        for n in collection {
            let faces = cover.piece(n).unwrap().faces();
            acc = Some(match acc {
                None => faces.clone(),
                Some(a) => a.intersection(faces).cloned().collect(),
            });
        }
        acc.is_some_and(|a| !a.is_empty())
    };
    let mut failures: Vec<Vec<PieceName>> = Vec::new();
    for mask in 1u32..(1 << names.len()) {
        let collection: Vec<PieceName> = (0..names.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| names[i].clone())
            .collect();
        if !meet(c.domain(), &collection) {
            continue;
        }
        let image: Vec<PieceName> = collection.iter().map(|n| c.apply(n).clone()).collect();
        if !meet(c.codomain(), &image) {
            failures.push(collection);
        }
    }
    failures.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    match failures.into_iter().next() {
        None => Validity::Valid,
        Some(witness) => Validity::Invalid { witness },
    }
}

/// A random simplicial map into a flag complex: a vertex map sending edges
/// to edges or points. Falls back to a constant map.
pub fn random_map_into_flag<R: Rng>(rng: &mut R, x: &SimplicialComplex, y: &SimplicialComplex) -> SimplicialMap {
    let targets: Vec<Vertex> = y.vertices().iter().cloned().collect();
    let adjacent = |a: &Vertex, b: &Vertex| a == b || y.contains_face(&Simplex::spanned_by([a.clone(), b.clone()]));
    let neighbours: BTreeMap<Vertex, Vec<Vertex>> = x
        .vertices()
        .iter()
        .map(|v| {
            let ns = x
                .faces()
                .iter()
                .filter(|s| s.len() == 2 && s.contains(v))
                .flat_map(|s| s.vertices().iter().filter(|w| *w != v).cloned().collect::<Vec<_>>())
                .collect();
            (v.clone(), ns)
        })
        .collect();
    'attempt: for _ in 0..20 {
        let mut map: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for v in x.vertices() {
            let candidates: Vec<&Vertex> = targets
                .iter()
                .filter(|t| neighbours[v].iter().all(|n| map.get(n).is_none_or(|m| adjacent(m, t))))
                .collect();
            match candidates.choose(rng) {
                Some(t) => {
                    map.insert(v.clone(), (*t).clone());
                }
                None => continue 'attempt,
            }
        }
        return SimplicialMap::new(x.clone(), y.clone(), map).expect("edge-respecting maps into flag complexes are simplicial");
    }
    SimplicialMap::constant(x, y, &targets[0]).unwrap()
}

/// The pullback of `cover` along `f`: one piece per cover piece, holding
/// the faces whose image lies in it.
pub fn pullback(f: &SimplicialMap, cover: &Cover) -> Cover {
    let pieces: Vec<(String, SimplicialComplex)> = cover
        .pieces()
        .iter()
        .map(|(name, piece)| {
            let faces = f.source().faces().iter().filter(|s| piece.contains_face(&f.image(s))).cloned();
            (name.to_string(), SimplicialComplex::from_simplices(faces))
        })
        .collect();
    Cover::closed(f.source().clone(), pieces).unwrap()
}

/// Names of `codomain` pieces containing the image of `piece` under `f`.
pub fn pieces_holding_image(f: &SimplicialMap, faces: &BTreeSet<Simplex>, codomain: &Cover) -> Vec<PieceName> {
    codomain
        .pieces()
        .iter()
        .filter(|(_, p)| faces.iter().all(|s| p.contains_face(&f.image(s))))
        .map(|(n, _)| n.clone())
        .collect()
}

/// `k` random subcomplexes of `base` named `{prefix}0..`, each facet in one
/// random piece and in each other piece with probability 0.3.
pub fn random_cover_pieces<R: Rng>(rng: &mut R, base: &SimplicialComplex, k: usize, prefix: &str) -> Vec<(String, SimplicialComplex)> {
    let mut members: Vec<Vec<Simplex>> = vec![Vec::new(); k];
    for facet in base.facets() {
        let home = rng.gen_range(0..k);
        for (i, m) in members.iter_mut().enumerate() {
            if i == home || rng.gen_bool(0.3) {
                m.push(facet.clone());
            }
        }
    }
    members
        .into_iter()
        .enumerate()
        .map(|(i, m)| (format!("{prefix}{i}"), SimplicialComplex::from_simplices(m)))
        .collect()
}
