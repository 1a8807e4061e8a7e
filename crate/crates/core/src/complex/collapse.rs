use std::collections::{BTreeSet, HashMap};

use super::{Simplex, SimplicialComplex, Vertex};

/// Outcome of greedy collapsing. `Unknown` is not a proof of anything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Collapse {
    Collapsible { steps: usize, point: Vertex },
    Unknown { steps: usize, remaining_faces: usize },
}

impl Collapse {
    pub fn is_collapsible(&self) -> bool {
        matches!(self, Collapse::Collapsible { .. })
    }
}

fn proper_faces(s: &Simplex) -> impl Iterator<Item = Simplex> + '_ {
    s.faces().into_iter().filter(move |f| f.len() < s.len())
}

/// Repeatedly removes the lexicographically least free face together with
/// its unique coface. A face is free when exactly one other face contains it.
pub(super) fn collapse_to_point(k: &SimplicialComplex, step_budget: usize) -> Collapse {
    let mut alive: BTreeSet<Simplex> = k.faces().clone();
    let vertices: Vec<Vertex> = k.vertices().iter().cloned().collect();
    let mut cofaces: HashMap<Simplex, usize> = alive.iter().map(|s| (s.clone(), 0)).collect();
    for s in &alive {
        for f in proper_faces(s) {
            *cofaces.get_mut(&f).expect("closed face set") += 1;
        }
    }
    let mut free: BTreeSet<Simplex> = cofaces
        .iter()
        .filter(|(_, &c)| c == 1)
        .map(|(s, _)| s.clone())
        .collect();

    let mut steps = 0;
    while alive.len() > 1 && steps < step_budget {
        let Some(tau) = free.iter().next().cloned() else {
            break;
        };
        let sigma = vertices
            .iter()
            .filter(|w| !tau.contains(w))
            .map(|w| tau.with_vertex(w))
            .find(|s| alive.contains(s))
            .expect("a free face has a coface");

        for removed in [&sigma, &tau] {
            alive.remove(removed);
            free.remove(removed);
            cofaces.remove(removed);
            for f in proper_faces(removed) {
                if let Some(c) = cofaces.get_mut(&f) {
                    *c -= 1;
                    if *c == 1 {
                        free.insert(f);
                    } else {
                        free.remove(&f);
                    }
                }
            }
        }
        steps += 1;
    }

    if alive.len() == 1 {
        let point = alive.into_iter().next().unwrap().vertices()[0].clone();
        Collapse::Collapsible { steps, point }
    } else {
        Collapse::Unknown {
            steps,
            remaining_faces: alive.len(),
        }
    }
}
