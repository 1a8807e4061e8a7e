use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A vertex label.
///
/// Plain labels order lexicographically. Barycenter labels `b(σ)` (the
/// vertices of a barycentric subdivision) order by the dimension of `σ`
/// first and lexicographically after that, so that a flag sorted as a
/// simplex is also sorted by inclusion.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Vertex {
    Named(Arc<str>),
    Barycenter(Arc<Simplex>),
}

impl Vertex {
    pub fn named(label: &str) -> Result<Vertex> {
        if label.is_empty()
            || label
                .chars()
                .any(|c| c.is_whitespace() || c == '(' || c == ')' || c == ',')
        {
            return Err(Error::Malformed(format!("invalid vertex label `{label}`")));
        }
        Ok(Vertex::Named(Arc::from(label)))
    }

    pub fn barycenter(face: Simplex) -> Vertex {
        Vertex::Barycenter(Arc::new(face))
    }

    /// Parses the textual form produced by `Display`. `b(x,y,…)` is read as
    /// a barycenter label; anything else must be a plain token.
    pub fn parse(label: &str) -> Result<Vertex> {
        if let Some(inner) = label.strip_prefix("b(").and_then(|s| s.strip_suffix(')')) {
            if let Some(parts) = split_top_level(inner) {
                let verts = parts
                    .into_iter()
                    .map(Vertex::parse)
                    .collect::<Result<Vec<_>>>()?;
                return Ok(Vertex::barycenter(Simplex::new(verts)?));
            }
        }
        Vertex::named(label)
    }

    pub fn as_barycenter(&self) -> Option<&Simplex> {
        match self {
            Vertex::Barycenter(s) => Some(s),
            Vertex::Named(_) => None,
        }
    }
}

fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    out.push(&s[start..]);
    if out.iter().any(|p| p.is_empty()) {
        return None;
    }
    Some(out)
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Vertex::Named(a), Vertex::Named(b)) => a.cmp(b),
            (Vertex::Barycenter(a), Vertex::Barycenter(b)) => {
                a.len().cmp(&b.len()).then_with(|| a.as_ref().cmp(b.as_ref()))
            }
            (Vertex::Named(_), Vertex::Barycenter(_)) => Ordering::Less,
            (Vertex::Barycenter(_), Vertex::Named(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Named(s) => f.write_str(s),
            Vertex::Barycenter(s) => {
                f.write_str("b(")?;
                for (i, v) in s.vertices().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A nonempty, strictly ascending set of vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Simplex> {
        if vertices.is_empty() {
            return Err(Error::Malformed("empty simplex".into()));
        }
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!(
                "vertex `{}` repeated inside one simplex",
                w[0]
            )));
        }
        Ok(Simplex(vertices))
    }

    /// Builds a simplex from any vertex collection, merging repeats. Used for
    /// images under collapsing maps. Panics on an empty input.
    pub fn spanned_by<I: IntoIterator<Item = Vertex>>(vertices: I) -> Simplex {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        assert!(!v.is_empty(), "a simplex needs at least one vertex");
        v.sort();
        v.dedup();
        Simplex(v)
    }

    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Simplex {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn point(v: Vertex) -> Simplex {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < 32, "simplex of dimension {} is too large", n - 1);
        (1u32..(1u32 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i].clone())
                        .collect(),
                )
            })
            .collect()
    }

    /// Codimension-one faces paired with the position of the dropped vertex.
    /// Empty for a point.
    pub fn boundary(&self) -> Vec<(usize, Simplex)> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                (i, Simplex(v))
            })
            .collect()
    }

    pub fn with_vertex(&self, v: &Vertex) -> Simplex {
        match self.0.binary_search(v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v.clone());
                Simplex(out)
            }
        }
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::spanned_by(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(|v| v.to_string()).collect()
    }
}

/// Orders simplices by dimension, then lexicographically. This is the
/// canonical basis order for chain complexes and face listings.
pub fn dim_lex(a: &Simplex, b: &Simplex) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}
