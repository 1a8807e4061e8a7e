//! JSON forms of complexes, covers, nerves, carriers and maps.
//!
//! Emission is canonical: objects have sorted keys and every set is listed
//! in vertex order, so equal values print to identical bytes. Wherever a
//! complex or cover object is expected, a string is read as a path to a
//! file holding one, relative to the directory of the enclosing file.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::carrier::{Carrier, SimplicialMap};
use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::cover::{Cover, CoverKind, Nerve, Piece, PieceName};
use crate::error::{Error, Result};
use crate::homology::ChainComplex;

/// Reads and parses a JSON file.
pub fn load(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

/// Directory against which paths inside `path` are resolved.
pub fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn render(value: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("values always serialize")
    } else {
        value.to_string()
    }
}

/// Follows a path reference, returning the value and the directory its own
/// references are relative to.
fn resolve(value: &Value, dir: &Path) -> Result<(Value, PathBuf)> {
    match value {
        Value::String(p) => {
            let path = dir.join(p);
            Ok((load(&path)?, base_dir(&path)))
        }
        other => Ok((other.clone(), dir.to_path_buf())),
    }
}

fn malformed(what: &str, e: serde_json::Error) -> Error {
    Error::Malformed(format!("{what}: {e}"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
}

pub fn complex_to_value(k: &SimplicialComplex) -> Value {
    serde_json::to_value(k).expect("complexes always serialize")
}

/// Every facet vertex must be listed; listed vertices in no facet become
/// isolated points.
pub fn parse_complex(value: &Value) -> Result<SimplicialComplex> {
    let raw = ComplexJson::deserialize(value).map_err(|e| malformed("complex", e))?;
    let mut listed = BTreeSet::new();
    for label in &raw.vertices {
        if !listed.insert(Vertex::parse(label)?) {
            return Err(Error::Malformed(format!("vertex `{label}` listed twice")));
        }
    }
    let mut simplices = Vec::new();
    let mut used = BTreeSet::new();
    for facet in &raw.facets {
        let mut vs = Vec::with_capacity(facet.len());
        for label in facet {
            let v = Vertex::parse(label)?;
            if !listed.contains(&v) {
                return Err(Error::UnknownVertex(label.clone()));
            }
            used.insert(v.clone());
            vs.push(v);
        }
        simplices.push(Simplex::new(vs)?);
    }
    simplices.extend(listed.difference(&used).cloned().map(Simplex::point));
    Ok(SimplicialComplex::from_simplices(simplices))
}

pub fn parse_complex_at(value: &Value, dir: &Path) -> Result<SimplicialComplex> {
    parse_complex(&resolve(value, dir)?.0)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverJson {
    complex: Value,
    kind: String,
    pieces: BTreeMap<String, PieceJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PieceJson {
    facets: Option<Vec<Vec<String>>>,
    center: Option<String>,
}

pub fn cover_to_value(c: &Cover) -> Value {
    let mut pieces = Map::new();
    for (name, piece) in c.pieces() {
        let body = match piece {
            Piece::Closed(k) => json!({ "facets": k.facets() }),
            Piece::OpenStar(s) => json!({ "center": s.center.to_string() }),
            Piece::Faces(_) => unreachable!("covers hold closed pieces or open stars"),
        };
        pieces.insert(name.to_string(), body);
    }
    json!({
        "complex": complex_to_value(c.base()),
        "kind": c.kind(),
        "pieces": pieces,
    })
}

pub fn parse_cover(value: &Value, dir: &Path) -> Result<Cover> {
    let (value, dir) = resolve(value, dir)?;
    let raw = CoverJson::deserialize(&value).map_err(|e| malformed("cover", e))?;
    let base = parse_complex_at(&raw.complex, &dir)?;
    let kind = match raw.kind.as_str() {
        "closed" => CoverKind::Closed,
        "open-stars" => CoverKind::OpenStars,
        other => return Err(Error::Malformed(format!("unknown cover kind `{other}`"))),
    };
    let mut pieces = BTreeMap::new();
    for (name, body) in raw.pieces {
        let piece = match (body.facets, body.center) {
            (Some(facets), None) => Piece::Closed(SimplicialComplex::from_labels(&facets)?),
            (None, Some(center)) => {
                let v = Vertex::parse(&center)?;
                Piece::OpenStar(base.open_star(&v)?)
            }
            _ => {
                return Err(Error::Malformed(format!(
                    "piece `{name}` needs exactly one of \"facets\" and \"center\""
                )))
            }
        };
        let name = PieceName::new(&name)?;
        if pieces.insert(name.clone(), piece).is_some() {
            return Err(Error::Malformed(format!("piece `{name}` given twice")));
        }
    }
    Cover::new(base, kind, pieces)
}

/// The nerve complex plus `witnesses`: for each nerve face, the least face
/// of the base in the intersection.
pub fn nerve_to_value(n: &Nerve) -> Value {
    let mut v = complex_to_value(&n.complex);
    let witnesses: Map<String, Value> = n
        .witnesses
        .iter()
        .map(|(face, w)| (face.to_string(), json!(w)))
        .collect();
    v["witnesses"] = Value::Object(witnesses);
    if let Some(cap) = n.dimension_cap {
        v["dimension_cap"] = json!(cap);
    }
    v
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CarrierJson {
    domain: Value,
    codomain: Value,
    assignment: BTreeMap<String, String>,
}

pub fn carrier_to_value(c: &Carrier) -> Value {
    let assignment: Map<String, Value> = c
        .assignment()
        .iter()
        .map(|(a, b)| (a.to_string(), json!(b)))
        .collect();
    json!({
        "domain": cover_to_value(c.domain()),
        "codomain": cover_to_value(c.codomain()),
        "assignment": assignment,
    })
}

pub fn parse_carrier(value: &Value, dir: &Path) -> Result<Carrier> {
    let (value, dir) = resolve(value, dir)?;
    let raw = CarrierJson::deserialize(&value).map_err(|e| malformed("carrier", e))?;
    let domain = parse_cover(&raw.domain, &dir)?;
    let codomain = parse_cover(&raw.codomain, &dir)?;
    let mut assignment = BTreeMap::new();
    for (a, b) in &raw.assignment {
        assignment.insert(PieceName::new(a)?, PieceName::new(b)?);
    }
    Carrier::new(domain, codomain, assignment)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapJson {
    source: Value,
    target: Value,
    vertex_map: BTreeMap<String, String>,
}

pub fn map_to_value(f: &SimplicialMap) -> Value {
    let vertex_map: Map<String, Value> = f
        .vertex_map()
        .iter()
        .map(|(v, w)| (v.to_string(), json!(w)))
        .collect();
    json!({
        "source": complex_to_value(f.source()),
        "target": complex_to_value(f.target()),
        "vertex_map": vertex_map,
    })
}

pub fn parse_map(value: &Value, dir: &Path) -> Result<SimplicialMap> {
    let (value, dir) = resolve(value, dir)?;
    let raw = MapJson::deserialize(&value).map_err(|e| malformed("map", e))?;
    let source = parse_complex_at(&raw.source, &dir)?;
    let target = parse_complex_at(&raw.target, &dir)?;
    let mut vertex_map = BTreeMap::new();
    for (v, w) in &raw.vertex_map {
        vertex_map.insert(Vertex::parse(v)?, Vertex::parse(w)?);
    }
    SimplicialMap::new(source, target, vertex_map)
}

/// Dense row-major boundary matrices, one per degree `k ≥ 1`, mapping
/// `C_k → C_{k-1}`.
pub fn boundary_matrices_to_value(c: &ChainComplex) -> Value {
    let mats: Vec<Value> = (1..c.len())
        .map(|k| {
            let m = c.boundary(k);
            let rows: Vec<Vec<i64>> = m
                .to_dense()
                .iter()
                .map(|r| r.iter().map(|x| x.to_i64().expect("boundary entries are small")).collect())
                .collect();
            json!({ "degree": k, "rows": m.rows(), "cols": m.cols(), "entries": rows })
        })
        .collect();
    Value::Array(mats)
}
