//! Named triangulations and covers, and seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::cover::{barycentric_star_cover, open_star_cover, Cover};
use crate::error::{Error, Result};

/// Identifies a gallery instance. Equal ids build identical instances.
#[derive(Clone, Debug, PartialEq)]
pub enum InstanceId {
    /// Boundary of the `n`-simplex on `v0..vn`.
    BdDelta(usize),
    /// The `m`-gon on `v0..v(m-1)`.
    Cycle(usize),
    Torus7,
    Rp2_6,
    TwoArcs,
    ThreeArcs,
    FaceCoverBdDelta3,
    /// Clique complex of a G(v, p) graph.
    RandomComplex { seed: u64, vertices: usize, p: f64 },
    /// `k` random subcomplexes of a random complex, jointly covering it.
    RandomSubcomplexCover { seed: u64, pieces: usize },
    /// Closed cover of `sd(K)` by barycentric stars.
    BstCover(Box<InstanceId>),
    /// Cover of `K` by open vertex stars.
    StCover(Box<InstanceId>),
}

impl fmt::Display for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceId::BdDelta(n) => write!(f, "bd_delta{n}"),
            InstanceId::Cycle(m) => write!(f, "cycle{m}"),
            InstanceId::Torus7 => f.write_str("torus7"),
            InstanceId::Rp2_6 => f.write_str("rp2_6"),
            InstanceId::TwoArcs => f.write_str("two_arcs"),
            InstanceId::ThreeArcs => f.write_str("three_arcs"),
            InstanceId::FaceCoverBdDelta3 => f.write_str("face_cover_bd_delta3"),
            InstanceId::RandomComplex { seed, vertices, p } => write!(f, "random_complex:{seed}:{vertices}:{p}"),
            InstanceId::RandomSubcomplexCover { seed, pieces } => write!(f, "random_subcomplex_cover:{seed}:{pieces}"),
            InstanceId::BstCover(inner) => write!(f, "bst_cover:{inner}"),
            InstanceId::StCover(inner) => write!(f, "st_cover:{inner}"),
        }
    }
}

fn unknown(s: &str) -> Error {
    Error::UnknownInstance(s.to_string())
}

impl FromStr for InstanceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<InstanceId> {
        if let Some(inner) = s.strip_prefix("bst_cover:") {
            return Ok(InstanceId::BstCover(Box::new(inner.parse()?)));
        }
        if let Some(inner) = s.strip_prefix("st_cover:") {
            return Ok(InstanceId::StCover(Box::new(inner.parse()?)));
        }
        match s {
            "torus7" => return Ok(InstanceId::Torus7),
            "rp2_6" => return Ok(InstanceId::Rp2_6),
            "two_arcs" => return Ok(InstanceId::TwoArcs),
            "three_arcs" => return Ok(InstanceId::ThreeArcs),
            "face_cover_bd_delta3" => return Ok(InstanceId::FaceCoverBdDelta3),
            _ => {}
        }
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["random_complex", seed, v, p] => {
                let p: f64 = p.parse().map_err(|_| unknown(s))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(unknown(s));
                }
                Ok(InstanceId::RandomComplex {
                    seed: seed.parse().map_err(|_| unknown(s))?,
                    vertices: v.parse().map_err(|_| unknown(s))?,
                    p,
                })
            }
            ["random_subcomplex_cover", seed, k] => {
                let pieces: usize = k.parse().map_err(|_| unknown(s))?;
                if pieces == 0 {
                    return Err(unknown(s));
                }
                Ok(InstanceId::RandomSubcomplexCover {
                    seed: seed.parse().map_err(|_| unknown(s))?,
                    pieces,
                })
            }
            [single] => {
                if let Some(n) = single.strip_prefix("bd_delta").and_then(|n| n.parse().ok()) {
                    if n >= 1 {
                        return Ok(InstanceId::BdDelta(n));
                    }
                }
                if let Some(m) = single.strip_prefix("cycle").and_then(|m| m.parse().ok()) {
                    if m >= 3 {
                        return Ok(InstanceId::Cycle(m));
                    }
                }
                Err(unknown(s))
            }
            _ => Err(unknown(s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Complex(SimplicialComplex),
    Cover(Cover),
}

impl Instance {
    /// The complex itself, or the base of a cover.
    pub fn complex(&self) -> &SimplicialComplex {
        match self {
            Instance::Complex(k) => k,
            Instance::Cover(c) => c.base(),
        }
    }

    pub fn into_cover(self) -> Option<Cover> {
        match self {
            Instance::Cover(c) => Some(c),
            Instance::Complex(_) => None,
        }
    }
}

fn label(i: usize) -> String {
    format!("v{i}")
}

fn complex(facets: Vec<Vec<usize>>) -> SimplicialComplex {
    let labelled: Vec<Vec<String>> = facets
        .into_iter()
        .map(|f| f.into_iter().map(label).collect())
        .collect();
    SimplicialComplex::from_labels(&labelled).expect("gallery facets are well formed")
}

pub fn bd_delta(n: usize) -> SimplicialComplex {
    complex((0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect())
}

pub fn cycle(m: usize) -> SimplicialComplex {
    complex((0..m).map(|i| vec![i, (i + 1) % m]).collect())
}

/// The vertex-transitive 7-vertex torus: `{i, i+1, i+3}` and
/// `{i, i+2, i+3}` mod 7.
pub fn torus7() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7 {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    complex(facets)
}

/// The 6-vertex projective plane (antipodal quotient of the icosahedron).
pub fn rp2_6() -> SimplicialComplex {
    let triangles = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ];
    complex(triangles.iter().map(|t| t.to_vec()).collect())
}

fn path(vertices: &[usize]) -> SimplicialComplex {
    complex(vertices.windows(2).map(|w| w.to_vec()).collect())
}

/// `cycle12` covered by the arcs `v0..v6` and `v6..v11,v0`.
pub fn two_arcs() -> Cover {
    let arc1: Vec<usize> = (0..=6).collect();
    let arc2: Vec<usize> = (6..12).chain([0]).collect();
    Cover::closed(cycle(12), [("arc1", path(&arc1)), ("arc2", path(&arc2))]).expect("arcs cover the cycle")
}

/// `cycle12` covered by `v0..v4`, `v4..v8` and `v8..v11,v0`.
pub fn three_arcs() -> Cover {
    let arcs = [
        ("arc0", (0..=4).collect::<Vec<_>>()),
        ("arc1", (4..=8).collect()),
        ("arc2", (8..12).chain([0]).collect()),
    ];
    Cover::closed(cycle(12), arcs.iter().map(|(n, a)| (*n, path(a)))).expect("arcs cover the cycle")
}

/// `bd_delta3` covered by its four closed triangles; `f{i}` omits `v{i}`.
pub fn face_cover_bd_delta3() -> Cover {
    let base = bd_delta(3);
    let pieces: Vec<(String, SimplicialComplex)> = (0..4)
        .map(|skip| {
            let tri: Vec<usize> = (0..4).filter(|&i| i != skip).collect();
            (format!("f{skip}"), complex(vec![tri]))
        })
        .collect();
    Cover::closed(base, pieces).expect("faces cover the sphere")
}

/// Clique complex of a seeded `G(v, p)` random graph.
pub fn random_complex(seed: u64, vertices: usize, p: f64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacent = vec![vec![false; vertices]; vertices];
    for i in 0..vertices {
        for j in i + 1..vertices {
            let e = rng.gen_bool(p);
            adjacent[i][j] = e;
            adjacent[j][i] = e;
        }
    }
    let mut cliques = Vec::new();
    bron_kerbosch(&adjacent, Vec::new(), (0..vertices).collect(), Vec::new(), &mut cliques);
    complex(cliques)
}

fn bron_kerbosch(adj: &[Vec<bool>], r: Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    while let Some(v) = p.pop() {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        x.push(v);
    }
}

/// `pieces` subcomplexes of `random_complex(seed, 4 + seed % 5, 0.5)`: each
/// facet goes to one random piece and to every other piece with
/// probability 0.3. Pieces may be empty.
pub fn random_subcomplex_cover(seed: u64, pieces: usize) -> Cover {
    let base = random_complex(seed, 4 + (seed % 5) as usize, 0.5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ 0x5eed);
    let mut members: Vec<Vec<crate::complex::Simplex>> = vec![Vec::new(); pieces];
    for facet in base.facets() {
        let home = rng.gen_range(0..pieces);
        for (i, m) in members.iter_mut().enumerate() {
            if i == home || rng.gen_bool(0.3) {
                m.push(facet.clone());
            }
        }
    }
    let named: Vec<(String, SimplicialComplex)> = members
        .into_iter()
        .enumerate()
        .map(|(i, m)| (format!("p{i}"), SimplicialComplex::from_simplices(m)))
        .collect();
    Cover::closed(base, named).expect("every facet has a home piece")
}

pub fn make(id: &InstanceId) -> Result<Instance> {
    Ok(match id {
        InstanceId::BdDelta(n) => Instance::Complex(bd_delta(*n)),
        InstanceId::Cycle(m) => Instance::Complex(cycle(*m)),
        InstanceId::Torus7 => Instance::Complex(torus7()),
        InstanceId::Rp2_6 => Instance::Complex(rp2_6()),
        InstanceId::TwoArcs => Instance::Cover(two_arcs()),
        InstanceId::ThreeArcs => Instance::Cover(three_arcs()),
        InstanceId::FaceCoverBdDelta3 => Instance::Cover(face_cover_bd_delta3()),
        InstanceId::RandomComplex { seed, vertices, p } => Instance::Complex(random_complex(*seed, *vertices, *p)),
        InstanceId::RandomSubcomplexCover { seed, pieces } => {
            Instance::Cover(random_subcomplex_cover(*seed, *pieces))
        }
        InstanceId::BstCover(inner) => Instance::Cover(barycentric_star_cover(make(inner)?.complex())),
        InstanceId::StCover(inner) => Instance::Cover(open_star_cover(make(inner)?.complex())),
    })
}

/// Six named instances followed by ten seeded random complexes.
pub fn suite() -> Vec<InstanceId> {
    let mut ids = vec![
        InstanceId::BdDelta(3),
        InstanceId::Cycle(12),
        InstanceId::Torus7,
        InstanceId::Rp2_6,
        InstanceId::TwoArcs,
        InstanceId::ThreeArcs,
    ];
    ids.extend((0..10u64).map(|seed| InstanceId::RandomComplex {
        seed,
        vertices: 4 + (seed % 5) as usize,
        p: 0.5,
    }));
    ids
}

/// The cover a suite instance is exercised with: its own cover, or the
/// barycentric-star cover of a complex.
pub fn suite_cover(id: &InstanceId) -> Result<Cover> {
    Ok(match make(id)? {
        Instance::Cover(c) => c,
        Instance::Complex(k) => barycentric_star_cover(&k),
    })
}
