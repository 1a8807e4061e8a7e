use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// One homology group `ℤ^betti ⊕ ⊕ ℤ/t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: i32,
    pub betti: usize,
    /// Torsion coefficients greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Betti numbers and torsion per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub reduced: bool,
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyProfile {
    pub fn group(&self, degree: i32) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|g| g.degree == degree)
    }

    pub fn betti(&self, degree: i32) -> usize {
        self.group(degree).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, degree: i32) -> &[BigInt] {
        self.group(degree).map_or(&[], |g| g.torsion.as_slice())
    }

    /// Betti numbers in degrees `0, 1, …` (degree −1 omitted).
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees.iter().filter(|g| g.degree >= 0).map(|g| g.betti).collect()
    }

    /// Highest degree carrying a nonzero group, if any.
    pub fn top_nonzero(&self) -> Option<i32> {
        self.degrees.iter().filter(|g| !g.is_zero()).map(|g| g.degree).max()
    }

    pub fn is_trivial(&self) -> bool {
        self.degrees.iter().all(DegreeHomology::is_zero)
    }

    /// `true` when every group in degrees `≤ bound` is zero.
    pub fn vanishes_through(&self, bound: i32) -> bool {
        self.degrees.iter().filter(|g| g.degree <= bound).all(DegreeHomology::is_zero)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .filter(|g| g.degree >= 0)
            .map(|g| if g.degree % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// Same groups in degrees `0..=bound` (all degrees when `None`), treating
    /// degrees beyond either profile's range as zero.
    pub fn agrees_with(&self, other: &HomologyProfile, bound: Option<i32>) -> bool {
        let top = self
            .degrees
            .iter()
            .chain(other.degrees.iter())
            .map(|g| g.degree)
            .max()
            .unwrap_or(0);
        let top = bound.map_or(top, |b| b.min(top));
        (0..=top).all(|k| self.betti(k) == other.betti(k) && self.torsion(k) == other.torsion(k))
    }
}

impl Serialize for DegreeHomology {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DegreeHomology", 3)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("betti", &self.betti)?;
        let torsion: Vec<serde_json::Value> = self.torsion.iter().map(bigint_json).collect();
        s.serialize_field("torsion", &torsion)?;
        s.end()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HomologyProfile", 2)?;
        s.serialize_field("reduced", &self.reduced)?;
        s.serialize_field("degrees", &self.degrees)?;
        s.end()
    }
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
pub(crate) fn bigint_json(x: &BigInt) -> serde_json::Value {
    match i64::try_from(x) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(x.to_string()),
    }
}
