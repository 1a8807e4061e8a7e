//! Edge-path group presentations and a bounded Tietze simplifier.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::complex::{SimplicialComplex, Vertex};

/// Default number of rewrite steps before giving up.
pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;

/// Relators longer than this abort the simplification.
const MAX_RELATOR_LEN: usize = 50_000;

/// A finite group presentation. Letters are `±(g + 1)` for generator `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TietzeOutcome {
    /// Every generator was eliminated.
    Trivial { steps: usize },
    /// Stopped with generators left, either stuck or out of budget.
    Unresolved {
        steps: usize,
        generators: usize,
        relators: usize,
    },
}

/// Edge-path group of the component containing the least vertex.
///
/// A BFS spanning tree (neighbours in label order) fixes the trivial
/// edges; each remaining edge `u < v` becomes a generator and each
/// triangle `[a, b, c]` contributes `e(a,b) e(b,c) e(a,c)⁻¹`.
pub fn edge_path_presentation(k: &SimplicialComplex) -> Presentation {
    let mut adjacency: BTreeMap<&Vertex, BTreeSet<&Vertex>> = BTreeMap::new();
    for e in k.faces().iter().filter(|s| s.len() == 2) {
        let (a, b) = (&e.vertices()[0], &e.vertices()[1]);
        adjacency.entry(a).or_default().insert(b);
        adjacency.entry(b).or_default().insert(a);
    }
    let Some(root) = k.vertices().iter().next() else {
        return Presentation { generators: 0, relators: Vec::new() };
    };
    let mut seen: BTreeSet<&Vertex> = BTreeSet::from([root]);
    let mut tree: BTreeSet<(&Vertex, &Vertex)> = BTreeSet::new();
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in adjacency.get(u).into_iter().flatten() {
            if seen.insert(w) {
                tree.insert(if u < w { (u, w) } else { (w, u) });
                queue.push_back(w);
            }
        }
    }

    let mut edge_gen: BTreeMap<(&Vertex, &Vertex), i32> = BTreeMap::new();
    for e in k.faces().iter().filter(|s| s.len() == 2) {
        let key = (&e.vertices()[0], &e.vertices()[1]);
        if seen.contains(key.0) && !tree.contains(&key) {
            let id = edge_gen.len() as i32 + 1;
            edge_gen.insert(key, id);
        }
    }
    let letter = |a: &Vertex, b: &Vertex| edge_gen.get(&(a, b)).copied();
    let mut relators = Vec::new();
    for t in k.faces().iter().filter(|s| s.len() == 3) {
        let [a, b, c] = [&t.vertices()[0], &t.vertices()[1], &t.vertices()[2]];
        if !seen.contains(a) {
            continue;
        }
        let mut word = Vec::new();
        word.extend(letter(a, b));
        word.extend(letter(b, c));
        word.extend(letter(a, c).map(|g| -g));
        relators.push(word);
    }
    Presentation {
        generators: edge_gen.len(),
        relators,
    }
}

fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    while out.len() >= 2 && out[0] == -out[out.len() - 1] {
        out.pop();
        out.remove(0);
    }
    out
}

fn inverse(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|x| -x).collect()
}

/// Deterministic rule order: cancel, kill generators named by length-one
/// relators, then eliminate a generator occurring exactly once in the
/// shortest such relator. Each rewrite of a relator costs one step.
pub fn simplify(p: &Presentation, budget: usize) -> TietzeOutcome {
    let mut alive: BTreeSet<i32> = (1..=p.generators as i32).collect();
    let mut relators: Vec<Vec<i32>> = p.relators.clone();
    let mut steps = 0usize;

    loop {
        let mut next = Vec::with_capacity(relators.len());
        for r in &relators {
            let reduced = free_reduce(r);
            if reduced.len() != r.len() {
                steps += 1;
            }
            if !reduced.is_empty() {
                next.push(reduced);
            }
        }
        relators = next;
        relators.sort();
        relators.dedup();

        if alive.is_empty() {
            return TietzeOutcome::Trivial { steps };
        }
        if steps >= budget || relators.iter().any(|r| r.len() > MAX_RELATOR_LEN) {
            break;
        }

        if let Some(g) = relators.iter().find(|r| r.len() == 1).map(|r| r[0].abs()) {
            alive.remove(&g);
            for r in relators.iter_mut() {
                if r.iter().any(|x| x.abs() == g) {
                    r.retain(|x| x.abs() != g);
                    steps += 1;
                }
            }
            continue;
        }

        // shortest relator (then first in order) with a generator occurring once
        let mut choice: Option<(usize, i32)> = None;
        for (idx, r) in relators.iter().enumerate() {
            if choice.is_some_and(|(c, _)| relators[c].len() <= r.len()) {
                continue;
            }
            let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
            for x in r {
                *counts.entry(x.abs()).or_default() += 1;
            }
            if let Some((&g, _)) = counts.iter().find(|(_, &c)| c == 1) {
                choice = Some((idx, g));
            }
        }
        let Some((idx, g)) = choice else { break };
        let r = relators.remove(idx);
        let pos = r.iter().position(|x| x.abs() == g).unwrap();
        let sign = r[pos].signum();
        // r rotated to g^sign · w, so g^sign = w⁻¹
        let w: Vec<i32> = r[pos + 1..].iter().chain(r[..pos].iter()).copied().collect();
        let g_word = if sign > 0 { inverse(&w) } else { w };
        let g_inv = inverse(&g_word);
        alive.remove(&g);
        for rel in relators.iter_mut() {
            if !rel.iter().any(|x| x.abs() == g) {
                continue;
            }
            let mut out = Vec::with_capacity(rel.len());
            for &x in rel.iter() {
                if x == g {
                    out.extend_from_slice(&g_word);
                } else if x == -g {
                    out.extend_from_slice(&g_inv);
                } else {
                    out.push(x);
                }
            }
            *rel = out;
            steps += 1;
        }
        steps += 1;
    }
    TietzeOutcome::Unresolved {
        steps,
        generators: alive.len(),
        relators: relators.len(),
    }
}
