//! Closeness and contiguity of maps, and the nerve-theorem pipelines.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::carrier::{canonical_nerve_map, MapCheck, SimplicialMap};
use crate::complex::{dim_lex, Simplex, Vertex};
use crate::cover::{Cover, RegularityMode, RegularityReport};
use crate::error::{Error, Result};
use crate::homology::{
    connectivity_certificate, induced_chain_map, is_quasi_iso, ConnectivityCertificate, HomologyProfile, QuasiIso,
};
use crate::verdict::Verdict;

/// Default number of maps the contiguity search may visit.
pub const DEFAULT_CHAIN_STATES: usize = 10_000;

pub const HOMOLOGY_PROXY: &str =
    "homology proxy for homotopy: equivalence is certified as an integral quasi-isomorphism of the canonical map, not as a homotopy equivalence";
pub(crate) const CANONICAL_MAP_NOTE: &str =
    "canonical map realized by the barycentric least-piece rule in place of a partition of unity";
pub(crate) const BOUND_NOTE: &str =
    "degree-bounded check: homology isomorphisms are certified only in degrees below n";

fn same_ends(f: &SimplicialMap, g: &SimplicialMap) -> Result<()> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::Incompatible("maps have different sources or targets".into()));
    }
    Ok(())
}

fn faces_in_order(f: &SimplicialMap) -> Vec<Simplex> {
    let mut faces: Vec<Simplex> = f.source().faces().iter().cloned().collect();
    faces.sort_by(dim_lex);
    faces
}

/// For every source face, some piece of `cover` contains both images.
pub fn g_close(f: &SimplicialMap, g: &SimplicialMap, cover: &Cover) -> Result<MapCheck> {
    same_ends(f, g)?;
    if cover.base() != f.target() {
        return Err(Error::Incompatible("cover is not a cover of the maps' target".into()));
    }
    for s in faces_in_order(f) {
        let (a, b) = (f.image(&s), g.image(&s));
        if !cover.pieces().values().any(|p| p.contains_face(&a) && p.contains_face(&b)) {
            return Ok(MapCheck::fail(s, None));
        }
    }
    Ok(MapCheck::ok())
}

/// For every source face `σ`, `f(σ) ∪ g(σ)` spans a face of the target.
pub fn contiguous(f: &SimplicialMap, g: &SimplicialMap) -> Result<MapCheck> {
    same_ends(f, g)?;
    for s in faces_in_order(f) {
        if !f.target().contains_face(&f.image(&s).union(&g.image(&s))) {
            return Ok(MapCheck::fail(s, None));
        }
    }
    Ok(MapCheck::ok())
}

/// Breadth-first search for `f = h₀, …, h_k = g` with consecutive maps
/// contiguous and `k ≤ max_steps`, visiting at most
/// [`DEFAULT_CHAIN_STATES`] maps. Returns the steps `h₁, …, h_k`, so equal
/// maps give an empty chain. `None` means nothing was found within those
/// limits, which proves nothing.
pub fn contiguity_chain(f: &SimplicialMap, g: &SimplicialMap, max_steps: usize) -> Result<Option<Vec<SimplicialMap>>> {
    contiguity_chain_with_budget(f, g, max_steps, DEFAULT_CHAIN_STATES)
}

/// As [`contiguity_chain`] with an explicit state budget.
///
/// Moves are single-vertex reassignments contiguous to the current map,
/// plus a direct step to `g` whenever the current map is contiguous to it.
pub fn contiguity_chain_with_budget(
    f: &SimplicialMap,
    g: &SimplicialMap,
    max_steps: usize,
    state_budget: usize,
) -> Result<Option<Vec<SimplicialMap>>> {
    same_ends(f, g)?;
    let source: Vec<&Vertex> = f.source().vertices().iter().collect();
    let target: Vec<&Vertex> = f.target().vertices().iter().collect();
    let s_index: HashMap<&Vertex, usize> = source.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let t_index: HashMap<&Vertex, usize> = target.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let encode = |h: &SimplicialMap| -> Vec<usize> { source.iter().map(|v| t_index[h.apply(v)]).collect() };
    let facets: Vec<Vec<usize>> = f
        .source()
        .facets()
        .iter()
        .map(|s| s.vertices().iter().map(|v| s_index[v]).collect())
        .collect();
    let mut facets_at: Vec<Vec<usize>> = vec![Vec::new(); source.len()];
    for (i, s) in facets.iter().enumerate() {
        for &v in s {
            facets_at[v].push(i);
        }
    }
    let spans = |vs: &mut Vec<usize>| -> bool {
        vs.sort_unstable();
        vs.dedup();
        f.target()
            .contains_face(&Simplex::spanned_by(vs.iter().map(|&i| target[i].clone())))
    };
    let is_contiguous = |a: &[usize], b: &[usize]| -> bool {
        facets.iter().all(|s| {
            let mut vs: Vec<usize> = s.iter().flat_map(|&v| [a[v], b[v]]).collect();
            spans(&mut vs)
        })
    };

    let start = encode(f);
    let goal = encode(g);
    let mut parent: HashMap<Vec<usize>, Option<Vec<usize>>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut found = false;
    while let Some((h, depth)) = queue.pop_front() {
        if h == goal {
            found = true;
            break;
        }
        if depth >= max_steps {
            continue;
        }
        let mut next: Vec<Vec<usize>> = Vec::new();
        if is_contiguous(&h, &goal) {
            next.push(goal.clone());
        }
        for v in 0..source.len() {
            for w in 0..target.len() {
                if w == h[v] {
                    continue;
                }
                let ok = facets_at[v].iter().all(|&i| {
                    let mut vs: Vec<usize> = facets[i].iter().map(|&u| h[u]).collect();
                    vs.push(w);
                    spans(&mut vs)
                });
                if ok {
                    let mut n = h.clone();
                    n[v] = w;
                    next.push(n);
                }
            }
        }
        for n in next {
            if parent.contains_key(&n) {
                continue;
            }
            if parent.len() >= state_budget {
                return Ok(None);
            }
            parent.insert(n.clone(), Some(h.clone()));
            if n == goal {
                queue.push_front((n, depth + 1));
                break;
            }
            queue.push_back((n, depth + 1));
        }
    }
    if !found {
        return Ok(None);
    }
    let mut path = vec![goal];
    while let Some(Some(prev)) = parent.get(path.last().unwrap()) {
        path.push(prev.clone());
    }
    path.pop();
    path.reverse();
    let decode = |code: &[usize]| -> SimplicialMap {
        let vm: BTreeMap<Vertex, Vertex> = code
            .iter()
            .enumerate()
            .map(|(i, &t)| (source[i].clone(), target[t].clone()))
            .collect();
        SimplicialMap::from_parts_unchecked(f.source().clone(), f.target().clone(), vm)
    };
    Ok(Some(path.iter().map(|c| decode(c)).collect()))
}

/// Attempted 1-connectivity certificates for both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleConnectivity {
    pub base: ConnectivityCertificate,
    pub nerve: ConnectivityCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover_id: Option<String>,
    pub verdict: Verdict,
    pub regularity: RegularityReport,
    pub map: String,
    /// Homology of `sd(base)`, the source of the canonical map.
    pub base_homology: HomologyProfile,
    pub nerve_homology: HomologyProfile,
    pub quasi_iso: QuasiIso,
    pub degree_bound: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple_connectivity: Option<SimpleConnectivity>,
    pub proxy_notes: Vec<String>,
}

impl EquivalenceReport {
    pub fn with_cover_id(mut self, id: impl Into<String>) -> EquivalenceReport {
        self.cover_id = Some(id.into());
        self
    }
}

fn pipeline(cover: &Cover, mode: RegularityMode, bound: Option<i32>) -> Result<EquivalenceReport> {
    let regularity = cover.check_regularity(mode);
    let h = canonical_nerve_map(cover)?;
    let chain_map = induced_chain_map(&h)?;
    let quasi_iso = is_quasi_iso(&chain_map, bound)?;
    let base_homology = chain_map.source().homology(false);
    let nerve_homology = chain_map.target().homology(false);
    if quasi_iso == QuasiIso::Yes {
        assert!(
            base_homology.agrees_with(&nerve_homology, bound),
            "a quasi-isomorphism must relate equal homology"
        );
    }
    let verdict = Verdict::all([
        regularity.overall,
        Verdict::from_bool(quasi_iso == QuasiIso::Yes),
    ]);
    let mut proxy_notes = vec![HOMOLOGY_PROXY.to_string(), CANONICAL_MAP_NOTE.to_string()];
    proxy_notes.extend(regularity.proxy_notes.iter().cloned());
    if bound.is_some() {
        proxy_notes.push(BOUND_NOTE.to_string());
    }
    Ok(EquivalenceReport {
        cover_id: None,
        verdict,
        regularity,
        map: "canonical nerve map sd(base) -> N(F), least piece containing each face".into(),
        base_homology,
        nerve_homology,
        quasi_iso,
        degree_bound: bound,
        simple_connectivity: None,
        proxy_notes,
    })
}

/// Regularity, then the canonical map and an unbounded quasi-isomorphism
/// test. A failed regularity check makes the verdict `Fails`; the homology
/// comparison is still reported.
pub fn verify_nerve_theorem(cover: &Cover) -> Result<EquivalenceReport> {
    pipeline(cover, RegularityMode::Regular, None)
}

/// The `n`-version: `n`-regularity by the excision criterion and a
/// quasi-isomorphism test through degree `n − 1`. For `n ≥ 2` both sides
/// also get a 1-connectivity certificate attempt.
pub fn verify_n_nerve_theorem(cover: &Cover, n: i32) -> Result<EquivalenceReport> {
    if n < 1 {
        return Err(Error::Malformed(format!("n must be at least 1, got {n}")));
    }
    let mut report = pipeline(cover, RegularityMode::NRegular(n), Some(n - 1))?;
    if n >= 2 {
        let nerve = cover.nerve(None).complex;
        report.simple_connectivity = Some(SimpleConnectivity {
            base: connectivity_certificate(cover.base(), 1),
            nerve: connectivity_certificate(&nerve, 1),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn cx(facets: &[&[&str]]) -> SimplicialComplex {
        let f: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_labels(&f).unwrap()
    }

    fn v(s: &str) -> Vertex {
        Vertex::parse(s).unwrap()
    }

    fn cycle(n: usize) -> SimplicialComplex {
        let facets: Vec<Vec<String>> = (0..n).map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % n)]).collect();
        SimplicialComplex::from_labels(&facets).unwrap()
    }

    #[test]
    fn equal_maps_are_close_and_contiguous() {
        let k = cx(&[&["a", "b"], &["b", "c"]]);
        let id = SimplicialMap::identity(&k);
        let cover = Cover::closed(k.clone(), [("all", k.clone())]).unwrap();
        assert!(g_close(&id, &id, &cover).unwrap().holds);
        assert!(contiguous(&id, &id).unwrap().holds);
        assert!(contiguity_chain(&id, &id, 5).unwrap().unwrap().is_empty());
    }

    #[test]
    fn constant_maps() {
        let c = cycle(12);
        let p0 = SimplicialMap::constant(&c, &c, &v("v0")).unwrap();
        let p1 = SimplicialMap::constant(&c, &c, &v("v1")).unwrap();
        let p5 = SimplicialMap::constant(&c, &c, &v("v5")).unwrap();
        assert!(contiguous(&p0, &p1).unwrap().holds);
        assert!(!contiguous(&p0, &p5).unwrap().holds);
        assert_eq!(contiguity_chain(&p0, &p1, 3).unwrap().unwrap().len(), 1);
    }

    #[test]
    fn maps_into_disjoint_pieces_are_not_close() {
        let k = cx(&[&["a"], &["b"]]);
        let cover = Cover::closed(k.clone(), [("p", cx(&[&["a"]])), ("q", cx(&[&["b"]]))]).unwrap();
        let to_a = SimplicialMap::constant(&k, &k, &v("a")).unwrap();
        let to_b = SimplicialMap::constant(&k, &k, &v("b")).unwrap();
        assert!(!g_close(&to_a, &to_b, &cover).unwrap().holds);
    }

    #[test]
    fn rotation_of_a_cycle_is_isolated() {
        let c = cycle(12);
        let id = SimplicialMap::identity(&c);
        let rot: BTreeMap<Vertex, Vertex> =
            (0..12).map(|i| (v(&format!("v{i}")), v(&format!("v{}", (i + 1) % 12)))).collect();
        let rot = SimplicialMap::new(c.clone(), c, rot).unwrap();
        assert!(contiguity_chain(&id, &rot, 12).unwrap().is_none());
    }

    #[test]
    fn folded_maps_connect_by_chain() {
        // two double wrappings of C_8 onto C_4, one rotated a notch; they are
        // not contiguous, but moving the odd vertices first links them
        let c8 = cycle(8);
        let c4 = cycle(4);
        let wrap = |shift: usize| -> SimplicialMap {
            let vm = (0..8)
                .map(|i| (v(&format!("v{i}")), v(&format!("v{}", ((i + shift) / 2) % 4))))
                .collect();
            SimplicialMap::new(c8.clone(), c4.clone(), vm).unwrap()
        };
        assert!(!contiguous(&wrap(0), &wrap(2)).unwrap().holds);
        let chain = contiguity_chain(&wrap(0), &wrap(2), 8).unwrap().unwrap();
        assert_eq!(chain.last().unwrap(), &wrap(2));
        assert!(chain.len() >= 2);
        let mut full = vec![wrap(0)];
        full.extend(chain);
        for w in full.windows(2) {
            assert!(contiguous(&w[0], &w[1]).unwrap().holds);
        }
    }

    #[test]
    fn n_below_one_rejected() {
        let k = cx(&[&["a"]]);
        let cover = Cover::closed(k.clone(), [("all", k)]).unwrap();
        assert!(verify_n_nerve_theorem(&cover, 0).is_err());
    }

    #[test]
    fn single_piece_cover_verifies() {
        let k = cx(&[&["a", "b", "c"]]);
        let cover = Cover::closed(k.clone(), [("all", k)]).unwrap();
        let r = verify_nerve_theorem(&cover).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.proxy_notes.iter().any(|n| n.contains("homology proxy for homotopy")));
    }
}
