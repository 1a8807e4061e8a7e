use std::collections::{BTreeMap, BTreeSet};

use super::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Vertex cap for the backtracking isomorphism search.
pub const DEFAULT_ISO_CAP: usize = 32;

fn signature(k: &SimplicialComplex, v: &Vertex) -> Vec<usize> {
    let mut sig = vec![0; k.dim().map_or(0, |d| d + 1)];
    for s in k.faces().iter().filter(|s| s.contains(v)) {
        sig[s.dim()] += 1;
    }
    sig
}

/// Searches for a vertex bijection `a → b` that maps faces onto faces.
/// Returns the witness, or `None` if the complexes are not isomorphic.
pub fn complexes_isomorphic(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    cap: usize,
) -> Result<Option<BTreeMap<Vertex, Vertex>>> {
    let size = a.vertices().len().max(b.vertices().len());
    if size > cap {
        return Err(Error::ResourceLimit {
            what: "isomorphism search",
            size,
            cap,
        });
    }
    if a.f_vector() != b.f_vector() {
        return Ok(None);
    }
    let sig_a: BTreeMap<Vertex, Vec<usize>> =
        a.vertices().iter().map(|v| (v.clone(), signature(a, v))).collect();
    let sig_b: BTreeMap<Vertex, Vec<usize>> =
        b.vertices().iter().map(|v| (v.clone(), signature(b, v))).collect();
    let mut ms_a: Vec<&Vec<usize>> = sig_a.values().collect();
    let mut ms_b: Vec<&Vec<usize>> = sig_b.values().collect();
    ms_a.sort();
    ms_b.sort();
    if ms_a != ms_b {
        return Ok(None);
    }

    // Assign vertices in an order that keeps each new vertex adjacent to
    // already-placed ones where possible, so face checks prune early.
    let order = search_order(a);
    let position: BTreeMap<&Vertex, usize> = order.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut completed: Vec<Vec<&Simplex>> = vec![Vec::new(); order.len()];
    for s in a.faces() {
        let last = s.vertices().iter().map(|v| position[v]).max().unwrap();
        completed[last].push(s);
    }

    let mut search = Search {
        a_order: &order,
        completed: &completed,
        sig_a: &sig_a,
        sig_b: &sig_b,
        b,
        assigned: BTreeMap::new(),
        used: BTreeSet::new(),
    };
    if search.extend(0) {
        Ok(Some(search.assigned))
    } else {
        Ok(None)
    }
}

fn search_order(a: &SimplicialComplex) -> Vec<Vertex> {
    let mut neighbours: BTreeMap<&Vertex, BTreeSet<&Vertex>> = BTreeMap::new();
    for e in a.faces().iter().filter(|s| s.len() == 2) {
        let (x, y) = (&e.vertices()[0], &e.vertices()[1]);
        neighbours.entry(x).or_default().insert(y);
        neighbours.entry(y).or_default().insert(x);
    }
    let mut placed: BTreeSet<&Vertex> = BTreeSet::new();
    let mut order = Vec::new();
    while placed.len() < a.vertices().len() {
        let next = a
            .vertices()
            .iter()
            .filter(|v| !placed.contains(v))
            .max_by(|x, y| {
                let cx = neighbours.get(x).map_or(0, |n| n.intersection(&placed).count());
                let cy = neighbours.get(y).map_or(0, |n| n.intersection(&placed).count());
                // prefer more placed neighbours, then the lexicographically least
                cx.cmp(&cy).then_with(|| y.cmp(x))
            })
            .unwrap();
        placed.insert(next);
        order.push(next.clone());
    }
    order
}

struct Search<'a> {
    a_order: &'a [Vertex],
    completed: &'a [Vec<&'a Simplex>],
    sig_a: &'a BTreeMap<Vertex, Vec<usize>>,
    sig_b: &'a BTreeMap<Vertex, Vec<usize>>,
    b: &'a SimplicialComplex,
    assigned: BTreeMap<Vertex, Vertex>,
    used: BTreeSet<Vertex>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.a_order.len() {
            return true;
        }
        let v = &self.a_order[depth];
        let want = &self.sig_a[v];
        let candidates: Vec<Vertex> = self
            .sig_b
            .iter()
            .filter(|(w, sig)| *sig == want && !self.used.contains(*w))
            .map(|(w, _)| w.clone())
            .collect();
        for w in candidates {
            self.assigned.insert(v.clone(), w.clone());
            let consistent = self.completed[depth].iter().all(|s| {
                let image = Simplex::spanned_by(s.vertices().iter().map(|x| self.assigned[x].clone()));
                self.b.contains_face(&image)
            });
            if consistent {
                self.used.insert(w.clone());
                if self.extend(depth + 1) {
                    return true;
                }
                self.used.remove(&w);
            }
            self.assigned.remove(v);
        }
        false
    }
}
