use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntegerMatrix;
use super::profile::{DegreeHomology, HomologyProfile};
use super::snf::invariant_factors;
use crate::carrier::SimplicialMap;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A basis element of a chain group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    Simplex(Simplex),
    /// Source generator shifted up one degree inside a mapping cone.
    ConeSource(Box<Generator>),
    ConeTarget(Box<Generator>),
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Simplex(s) => write!(f, "{s}"),
            Generator::ConeSource(g) => write!(f, "s{g:?}"),
            Generator::ConeTarget(g) => write!(f, "t{g:?}"),
        }
    }
}

/// Free chain complex concentrated in degrees `0..=top`.
///
/// `boundary[k]` maps degree `k` to degree `k-1`; `boundary[0]` is the
/// `0 × n₀` zero map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    basis: Vec<Vec<Generator>>,
    boundary: Vec<IntegerMatrix>,
}

impl ChainComplex {
    pub fn new(basis: Vec<Vec<Generator>>, boundary: Vec<IntegerMatrix>) -> Result<ChainComplex> {
        if basis.len() != boundary.len() {
            return Err(Error::Malformed("one boundary matrix per degree is required".into()));
        }
        for (k, d) in boundary.iter().enumerate() {
            let rows = if k == 0 { 0 } else { basis[k - 1].len() };
            if d.rows() != rows || d.cols() != basis[k].len() {
                return Err(Error::Malformed(format!("boundary in degree {k} has the wrong shape")));
            }
        }
        Ok(ChainComplex { basis, boundary })
    }

    /// Number of stored degrees (`top + 1`); zero for the zero complex.
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn rank(&self, k: isize) -> usize {
        if k < 0 {
            return 0;
        }
        self.basis.get(k as usize).map_or(0, Vec::len)
    }

    pub fn basis(&self, k: usize) -> &[Generator] {
        self.basis.get(k).map_or(&[], Vec::as_slice)
    }

    /// The boundary out of degree `k`, materialized as a zero map outside
    /// the stored range.
    pub fn boundary(&self, k: usize) -> IntegerMatrix {
        match self.boundary.get(k) {
            Some(d) => d.clone(),
            None => IntegerMatrix::zeros(self.rank(k as isize - 1), self.rank(k as isize)),
        }
    }

    /// Checks `∂_{k-1} ∘ ∂_k = 0` in every degree.
    pub fn is_boundary_squared_zero(&self) -> bool {
        (2..self.len()).all(|k| self.boundary[k - 1].mul(&self.boundary[k]).is_zero())
    }

    /// Sum of `(-1)^k` times the chain ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.basis
            .iter()
            .enumerate()
            .map(|(k, b)| if k % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }

    /// Integral homology. With `reduced`, the complex is augmented by a
    /// copy of ℤ in degree −1 and `ε = (1 … 1)`, provided `ε ∘ ∂₁ = 0`.
    /// Otherwise (mapping cones, for instance) no augmentation exists and
    /// the unreduced groups are returned with `reduced` unset.
    pub fn homology(&self, reduced: bool) -> HomologyProfile {
        let reduced = reduced && self.augmentable();
        let factors = self.all_invariant_factors();
        let ranks: Vec<usize> = factors.iter().map(Vec::len).collect();
        let rank_of = |k: usize| ranks.get(k).copied().unwrap_or(0);
        let mut degrees = Vec::new();
        let augmentation_rank = usize::from(reduced && self.rank(0) > 0);
        if reduced {
            degrees.push(DegreeHomology {
                degree: -1,
                betti: 1 - augmentation_rank,
                torsion: Vec::new(),
            });
        }
        for k in 0..self.len() {
            let outgoing = if k == 0 { augmentation_rank } else { rank_of(k) };
            let betti = self.basis[k].len() - outgoing - rank_of(k + 1);
            let torsion = factors
                .get(k + 1)
                .map(|f| f.iter().filter(|x| !x.is_one()).cloned().collect())
                .unwrap_or_default();
            degrees.push(DegreeHomology {
                degree: k as i32,
                betti,
                torsion,
            });
        }
        HomologyProfile { reduced, degrees }
    }

    fn augmentable(&self) -> bool {
        if self.len() < 2 {
            return true;
        }
        let d1 = self.boundary(1);
        let mut sums = vec![BigInt::zero(); d1.cols()];
        for (_, j, x) in d1.nonzero() {
            sums[j] += x;
        }
        sums.iter().all(Zero::is_zero)
    }

    fn all_invariant_factors(&self) -> Vec<Vec<BigInt>> {
        // Boundary matrices are independent; reduce them concurrently.
        std::thread::scope(|scope| {
            let handles: Vec<_> = self
                .boundary
                .iter()
                .map(|d| scope.spawn(move || invariant_factors(d)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("reduction thread")).collect()
        })
    }
}

/// Simplicial chain complex over ℤ. Bases are faces in (dimension,
/// lexicographic) order; the face opposite the vertex at position `i` has
/// incidence `(-1)^i`.
pub fn chain_complex(k: &SimplicialComplex) -> ChainComplex {
    let faces = k.faces_by_dim();
    let index: Vec<HashMap<&Simplex, usize>> = faces
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    let mut boundary = Vec::with_capacity(faces.len());
    for (d, fs) in faces.iter().enumerate() {
        if d == 0 {
            boundary.push(IntegerMatrix::zeros(0, fs.len()));
            continue;
        }
        let mut m = IntegerMatrix::zeros(faces[d - 1].len(), fs.len());
        for (j, s) in fs.iter().enumerate() {
            for (pos, face) in s.boundary() {
                let sign = if pos % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                m.set(index[d - 1][&face], j, sign);
            }
        }
        boundary.push(m);
    }
    let basis = faces
        .into_iter()
        .map(|fs| fs.into_iter().map(Generator::Simplex).collect())
        .collect();
    ChainComplex { basis, boundary }
}

/// A degree-preserving map of chain complexes; `maps[k]` is
/// `target.rank(k) × source.rank(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    maps: Vec<IntegerMatrix>,
}

impl ChainMap {
    /// Checks shapes only; commutation is checked by [`ChainMap::commutes`].
    pub fn new(source: ChainComplex, target: ChainComplex, maps: Vec<IntegerMatrix>) -> Result<ChainMap> {
        let top = source.len().max(target.len());
        if maps.len() != top {
            return Err(Error::Malformed(format!("chain map needs {top} components")));
        }
        for (k, m) in maps.iter().enumerate() {
            if m.rows() != target.rank(k as isize) || m.cols() != source.rank(k as isize) {
                return Err(Error::Malformed(format!("chain map component {k} has the wrong shape")));
            }
        }
        Ok(ChainMap { source, target, maps })
    }

    pub fn identity(c: &ChainComplex) -> ChainMap {
        let maps = (0..c.len()).map(|k| IntegerMatrix::identity(c.rank(k as isize))).collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            maps,
        }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn component(&self, k: usize) -> IntegerMatrix {
        match self.maps.get(k) {
            Some(m) => m.clone(),
            None => IntegerMatrix::zeros(self.target.rank(k as isize), self.source.rank(k as isize)),
        }
    }

    /// `∂ᵀ_k f_k = f_{k-1} ∂ˢ_k` for every degree.
    pub fn commutes(&self) -> Result<()> {
        for k in 1..self.maps.len() {
            let lhs = self.target.boundary(k).mul(&self.maps[k]);
            let rhs = self.maps[k - 1].mul(&self.source.boundary(k));
            if lhs != rhs {
                return Err(Error::NonCommuting { degree: k });
            }
        }
        Ok(())
    }
}

/// Parity of the permutation sorting `xs` (all distinct).
fn sort_sign<T: Ord>(xs: &[T]) -> bool {
    let mut inversions = 0usize;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                inversions += 1;
            }
        }
    }
    inversions.is_multiple_of(2)
}

/// Chain map of a simplicial map. Simplices whose image collapses go to 0.
pub fn induced_chain_map(f: &SimplicialMap) -> Result<ChainMap> {
    f.check()?;
    let source = chain_complex(f.source());
    let target = chain_complex(f.target());
    let top = source.len().max(target.len());
    let target_index: Vec<HashMap<&Simplex, usize>> = (0..target.len())
        .map(|k| {
            target
                .basis(k)
                .iter()
                .enumerate()
                .map(|(i, g)| match g {
                    Generator::Simplex(s) => (s, i),
                    _ => unreachable!("simplicial chain complex"),
                })
                .collect()
        })
        .collect();
    let mut maps = Vec::with_capacity(top);
    for k in 0..top {
        let mut m = IntegerMatrix::zeros(target.rank(k as isize), source.rank(k as isize));
        for (j, g) in source.basis(k).iter().enumerate() {
            let Generator::Simplex(s) = g else { unreachable!() };
            let images: Vec<_> = s.vertices().iter().map(|v| f.apply(v).clone()).collect();
            let image = Simplex::spanned_by(images.iter().cloned());
            if image.len() != images.len() {
                continue;
            }
            let row = target_index[k][&image];
            let sign = if sort_sign(&images) { BigInt::one() } else { -BigInt::one() };
            m.set(row, j, sign);
        }
        maps.push(m);
    }
    let map = ChainMap::new(source, target, maps)?;
    map.commutes()?;
    Ok(map)
}

/// Mapping cone: degree `k` is `source_{k-1} ⊕ target_k` with differential
/// `(c, d) ↦ (−∂c, f(c) + ∂d)`.
pub fn mapping_cone(f: &ChainMap) -> Result<ChainComplex> {
    f.commutes()?;
    let src = &f.source;
    let tgt = &f.target;
    let top = (src.len() + 1).max(tgt.len());
    let mut basis = Vec::with_capacity(top);
    for k in 0..top {
        let mut b: Vec<Generator> = Vec::new();
        if k >= 1 {
            b.extend(src.basis(k - 1).iter().cloned().map(|g| Generator::ConeSource(Box::new(g))));
        }
        b.extend(tgt.basis(k).iter().cloned().map(|g| Generator::ConeTarget(Box::new(g))));
        basis.push(b);
    }
    let mut boundary = Vec::with_capacity(top);
    for k in 0..top {
        let cols = basis[k].len();
        if k == 0 {
            boundary.push(IntegerMatrix::zeros(0, cols));
            continue;
        }
        let rows = basis[k - 1].len();
        let mut m = IntegerMatrix::zeros(rows, cols);
        let shift_row = src.rank(k as isize - 2);
        let shift_col = src.rank(k as isize - 1);
        if k >= 2 {
            m.paste(0, 0, &src.boundary(k - 1).neg());
        }
        m.paste(shift_row, 0, &f.component(k - 1));
        m.paste(shift_row, shift_col, &tgt.boundary(k));
        boundary.push(m);
    }
    ChainComplex::new(basis, boundary)
}

/// Integral homology of a simplicial complex.
pub fn homology(k: &SimplicialComplex, reduced: bool) -> HomologyProfile {
    chain_complex(k).homology(reduced)
}

/// Convenience: `true` when every entry of the homology is zero.
pub fn is_acyclic(c: &ChainComplex) -> bool {
    c.homology(false).is_trivial()
}
