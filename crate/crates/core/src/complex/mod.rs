//! Finite abstract simplicial complexes and their standard constructions.

mod collapse;
mod iso;
mod simplex;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use collapse::Collapse;
pub use iso::{complexes_isomorphic, DEFAULT_ISO_CAP};
pub use simplex::{dim_lex, Simplex, Vertex};

use crate::error::{Error, Result};

/// A finite simplicial complex, generated by its inclusion-maximal facets.
///
/// The full face set is materialized at construction so that membership
/// tests are logarithmic.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<Vertex>,
    facets: BTreeSet<Simplex>,
    faces: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn empty() -> SimplicialComplex {
        SimplicialComplex {
            vertices: BTreeSet::new(),
            facets: BTreeSet::new(),
            faces: BTreeSet::new(),
        }
    }

    /// Builds a complex from vertex lists. Non-maximal entries are absorbed.
    pub fn from_facets<I>(facets: I) -> Result<SimplicialComplex>
    where
        I: IntoIterator<Item = Vec<Vertex>>,
    {
        let simplices = facets
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::from_simplices(simplices))
    }

    /// Convenience constructor over plain labels.
    pub fn from_labels<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<SimplicialComplex> {
        let parsed = facets
            .iter()
            .map(|f| f.iter().map(|s| Vertex::parse(s.as_ref())).collect())
            .collect::<Result<Vec<Vec<Vertex>>>>()?;
        SimplicialComplex::from_facets(parsed)
    }

    /// The closure of a family of simplices.
    pub fn from_simplices<I>(simplices: I) -> SimplicialComplex
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut faces = BTreeSet::new();
        for s in simplices {
            if faces.contains(&s) {
                continue;
            }
            faces.extend(s.faces());
        }
        SimplicialComplex::from_closed_faces(faces)
    }

    /// `faces` must already be closed under taking faces.
    pub(crate) fn from_closed_faces(faces: BTreeSet<Simplex>) -> SimplicialComplex {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut bounded = Vec::new();
        for s in &faces {
            for (_, b) in s.boundary() {
                bounded.push(b);
            }
        }
        for b in &bounded {
            if let Some(f) = faces.get(b) {
                covered.insert(f);
            }
        }
        let facets = faces
            .iter()
            .filter(|s| !covered.contains(s))
            .cloned()
            .collect();
        let vertices = faces
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| s.vertices()[0].clone())
            .collect();
        SimplicialComplex {
            vertices,
            facets,
            faces,
        }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn facets(&self) -> &BTreeSet<Simplex> {
        &self.facets
    }

    /// Every nonempty face, in lexicographic order.
    pub fn faces(&self) -> &BTreeSet<Simplex> {
        &self.faces
    }

    /// Faces grouped by dimension; each group is lexicographically sorted.
    pub fn faces_by_dim(&self) -> Vec<Vec<Simplex>> {
        let mut out: Vec<Vec<Simplex>> = Vec::new();
        for s in &self.faces {
            if out.len() <= s.dim() {
                out.resize_with(s.dim() + 1, Vec::new);
            }
            out[s.dim()].push(s.clone());
        }
        out
    }

    /// All faces in canonical (dimension, lexicographic) order.
    pub fn faces_canonical(&self) -> Vec<Simplex> {
        self.faces_by_dim().into_iter().flatten().collect()
    }

    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.faces.contains(s)
    }

    pub fn contains_vertex(&self, v: &Vertex) -> bool {
        self.vertices.contains(v)
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(Simplex::dim).max()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains_face(f))
    }

    pub fn skeleton(&self, n: usize) -> SimplicialComplex {
        let faces = self.faces.iter().filter(|s| s.dim() <= n).cloned().collect();
        SimplicialComplex::from_closed_faces(faces)
    }

    /// The first barycentric subdivision: vertices are the faces of `self`,
    /// simplices are strictly nested flags of faces.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let mut flags = Vec::new();
        for facet in &self.facets {
            for_each_full_flag(facet.vertices(), &mut Vec::new(), &mut |flag| {
                flags.push(flag);
            });
        }
        SimplicialComplex::from_simplices(flags)
    }

    pub fn open_star(&self, v: &Vertex) -> Result<OpenStarSet> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(OpenStarSet {
            center: v.clone(),
            members: self.faces.iter().filter(|s| s.contains(v)).cloned().collect(),
        })
    }

    /// The subcomplex of the barycentric subdivision spanned by flags whose
    /// smallest face contains `v`.
    pub fn barycentric_star(&self, v: &Vertex) -> Result<SimplicialComplex> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let mut flags = Vec::new();
        for facet in self.facets.iter().filter(|f| f.contains(v)) {
            let rest: Vec<Vertex> = facet.vertices().iter().filter(|w| *w != v).cloned().collect();
            let mut prefix = vec![v.clone()];
            for_each_full_flag(&rest, &mut prefix, &mut |flag| flags.push(flag));
        }
        Ok(SimplicialComplex::from_simplices(flags))
    }

    /// Least vertex lying in every facet, if any. Such a vertex `a` has
    /// `σ ∪ {a}` a face for every face `σ`.
    pub fn is_cone(&self) -> Option<Vertex> {
        let mut facets = self.facets.iter();
        let first = facets.next()?;
        let mut candidates: Vec<&Vertex> = first.vertices().iter().collect();
        for f in facets {
            candidates.retain(|v| f.contains(v));
            if candidates.is_empty() {
                return None;
            }
        }
        candidates.first().map(|v| (*v).clone())
    }

    /// Greedy elementary collapses; see [`Collapse`].
    pub fn collapse_to_point(&self, step_budget: usize) -> Collapse {
        collapse::collapse_to_point(self, step_budget)
    }

    /// Connected components, each as a vertex set, ordered by least vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let index: BTreeMap<&Vertex, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for s in self.faces.iter().filter(|s| s.len() == 2) {
            let a = find(&mut parent, index[&s.vertices()[0]]);
            let b = find(&mut parent, index[&s.vertices()[1]]);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, BTreeSet<Vertex>> = BTreeMap::new();
        for (v, &i) in &index {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().insert((*v).clone());
        }
        groups.into_values().collect()
    }

    /// The subcomplex of faces all of whose vertices lie in `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .filter(|s| s.vertices().iter().all(|v| keep.contains(v)))
            .cloned()
            .collect();
        SimplicialComplex::from_closed_faces(faces)
    }
}

/// Calls `emit` with every full flag of the simplex spanned by `prefix ∪ rest`
/// that starts with the faces spanned by successive prefixes of `prefix`.
fn for_each_full_flag(rest: &[Vertex], prefix: &mut Vec<Vertex>, emit: &mut dyn FnMut(Simplex)) {
    if rest.is_empty() {
        let mut flag = Vec::with_capacity(prefix.len());
        for k in 1..=prefix.len() {
            let face = Simplex::spanned_by(prefix[..k].iter().cloned());
            flag.push(Vertex::barycenter(face));
        }
        emit(Simplex::from_sorted(flag));
        return;
    }
    for i in 0..rest.len() {
        let mut remaining = rest.to_vec();
        let v = remaining.remove(i);
        prefix.push(v);
        for_each_full_flag(&remaining, prefix, emit);
        prefix.pop();
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.facets.iter()).finish()
    }
}

/// Canonical JSON form: `vertices` and `facets`, both in vertex order.
impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SimplicialComplex", 2)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("facets", &self.facets)?;
        st.end()
    }
}

/// All simplices containing a vertex. Closed upward, not a subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenStarSet {
    pub center: Vertex,
    pub members: BTreeSet<Simplex>,
}
