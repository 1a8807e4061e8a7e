use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::chain::{mapping_cone, ChainMap};
use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuasiIso {
    Yes,
    No,
}

/// Whether `f` induces isomorphisms on homology, in every degree or in
/// degrees `0..=bound`.
///
/// Unbounded, this is acyclicity of the mapping cone. With a bound `b`,
/// cone homology must vanish through degree `b`, which makes `f_*`
/// bijective below `b` and onto in degree `b`; the source and target
/// groups in degree `b` must then be isomorphic, and since a surjection
/// between isomorphic finitely generated abelian groups is injective, `f_*`
/// is bijective in degree `b` too.
pub fn is_quasi_iso(f: &ChainMap, bound: Option<i32>) -> Result<QuasiIso> {
    let cone = mapping_cone(f)?.homology(false);
    let yes = match bound {
        None => cone.is_trivial(),
        Some(b) if b < 0 => true,
        Some(b) => {
            let s = f.source().homology(false);
            let t = f.target().homology(false);
            cone.vanishes_through(b) && s.betti(b) == t.betti(b) && s.torsion(b) == t.torsion(b)
        }
    };
    Ok(if yes { QuasiIso::Yes } else { QuasiIso::No })
}

/// Integer kernel basis of `m`, as columns.
fn kernel_basis(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    (r..m.cols())
        .map(|j| (0..m.cols()).map(|i| snf.v.get(i, j)).collect())
        .collect()
}

/// Whether `y` lies in the integer column span of `m`.
fn in_image(m: &IntegerMatrix, y: &[BigInt]) -> bool {
    let snf = smith_normal_form(m);
    // m x = y  ⟺  d (v⁻¹ x) = u y
    let uy: Vec<BigInt> = (0..m.rows())
        .map(|i| (0..m.rows()).fold(BigInt::zero(), |acc, k| acc + snf.u.get(i, k) * &y[k]))
        .collect();
    uy.iter().enumerate().all(|(i, x)| {
        let d = if i < m.cols() { snf.d.get(i, i) } else { BigInt::zero() };
        if d.is_zero() {
            x.is_zero()
        } else {
            x.is_multiple_of(&d)
        }
    })
}

/// Whether two chain maps between the same complexes induce the same maps
/// on integral homology: `(f − g)(z)` must be a boundary for every cycle `z`.
pub fn same_on_homology(f: &ChainMap, g: &ChainMap) -> Result<bool> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::Incompatible("chain maps have different endpoints".into()));
    }
    f.commutes()?;
    g.commutes()?;
    let top = f.source().len();
    for k in 0..top {
        let diff = f.component(k).sub(&g.component(k));
        if diff.is_zero() {
            continue;
        }
        let cycles = kernel_basis(&f.source().boundary(k));
        let boundaries = f.target().boundary(k + 1);
        for z in cycles {
            let image: Vec<BigInt> = (0..diff.rows())
                .map(|i| (0..diff.cols()).fold(BigInt::zero(), |acc, j| acc + diff.get(i, j) * &z[j]))
                .collect();
            if !in_image(&boundaries, &image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
