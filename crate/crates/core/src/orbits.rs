//! The three nilpotent orbits of PGL3 and their linear-algebra invariants.
//!
//! The Lie algebra is realized as trace-zero 3×3 matrices with the basis
//! `E12, E13, E21, E23, E31, E32, H1 = E11 − E22, H2 = E22 − E33`. Every
//! basis vector is a weight vector for the diagonal torus, so each
//! cocharacter grades the basis directly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{bracket, mat3_add, mat3_mul, mat3_scale, mat3_zero, q, trace, unit, Mat3, Matrix, Q};
use crate::weights::Weight;

/// A nilpotent orbit, indexed by its Jordan type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Orbit {
    /// `[3]`, the regular orbit.
    Regular,
    /// `[2,1]`, the subregular (minimal) orbit.
    Subregular,
    /// `[1,1,1]`, the zero orbit.
    Zero,
}

impl Orbit {
    pub const ALL: [Orbit; 3] = [Orbit::Regular, Orbit::Subregular, Orbit::Zero];

    pub fn partition(&self) -> &'static [u8] {
        match self {
            Orbit::Regular => &[3],
            Orbit::Subregular => &[2, 1],
            Orbit::Zero => &[1, 1, 1],
        }
    }

    /// Expected orbit dimension, used only to cross-check the computation.
    pub fn expected_dim(&self) -> i64 {
        match self {
            Orbit::Regular => 6,
            Orbit::Subregular => 4,
            Orbit::Zero => 0,
        }
    }

    pub fn codim(&self) -> i64 {
        6 - self.expected_dim()
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partition().iter().map(u8::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Orbit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Orbit> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        match parts.as_slice() {
            ["3"] => Ok(Orbit::Regular),
            ["2", "1"] => Ok(Orbit::Subregular),
            ["1", "1", "1"] => Ok(Orbit::Zero),
            _ => Err(Error::Parse(format!("unknown partition '{s}'"))),
        }
    }
}

impl Serialize for Orbit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.partition())
    }
}

const BASIS_NAMES: [&str; 8] = ["E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"];
const OFF_DIAGONAL: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

fn basis() -> [Mat3; 8] {
    let mut out = [mat3_zero(); 8];
    for (k, &(i, j)) in OFF_DIAGONAL.iter().enumerate() {
        out[k] = unit(i, j);
    }
    out[6] = mat3_add(&unit(0, 0), &mat3_scale(&unit(1, 1), q(-1)));
    out[7] = mat3_add(&unit(1, 1), &mat3_scale(&unit(2, 2), q(-1)));
    out
}

/// Coordinates of a trace-zero matrix in the basis.
fn coordinates(m: &Mat3) -> Vec<Q> {
    debug_assert_eq!(trace(m), q(0));
    let mut v: Vec<Q> = OFF_DIAGONAL.iter().map(|&(i, j)| m[i][j]).collect();
    v.push(m[0][0]);
    v.push(m[0][0] + m[1][1]);
    v
}

/// Torus weight of each basis vector: `E_ij` has weight `e_i − e_j`.
fn basis_weights() -> [[i64; 3]; 8] {
    let mut out = [[0; 3]; 8];
    for (k, &(i, j)) in OFF_DIAGONAL.iter().enumerate() {
        out[k][i] += 1;
        out[k][j] -= 1;
    }
    out
}

/// Linear data attached to one orbit and its associated cocharacter.
#[derive(Clone, Debug)]
pub struct OrbitLinearData {
    pub orbit: Orbit,
    pub representative: Mat3,
    pub cocharacter: [i64; 3],
    pub dim_c: i64,
    pub codim_c: i64,
    pub g_weights: BTreeMap<i64, usize>,
    pub gx_weights: BTreeMap<i64, usize>,
    ad_x: Matrix,
    grading: [i64; 8],
}

pub fn orbit_data(orbit: Orbit) -> OrbitLinearData {
    let (representative, cocharacter) = match orbit {
        Orbit::Zero => (mat3_zero(), [0, 0, 0]),
        Orbit::Subregular => (unit(2, 0), [-1, 0, 1]),
        Orbit::Regular => (mat3_add(&unit(1, 0), &unit(2, 1)), [-2, 0, 2]),
    };
    let b = basis();
    let columns: Vec<Vec<Q>> = b.iter().map(|u| coordinates(&bracket(&representative, u))).collect();
    let ad_x = Matrix::from_columns(8, &columns);

    let weights = basis_weights();
    let mut grading = [0i64; 8];
    for (k, w) in weights.iter().enumerate() {
        grading[k] = (0..3).map(|i| w[i] * cocharacter[i]).sum();
    }
    let mut g_weights = BTreeMap::new();
    for k in grading {
        *g_weights.entry(k).or_insert(0) += 1;
    }
    let mut gx_weights = BTreeMap::new();
    for &k in g_weights.keys() {
        let idx: Vec<usize> = (0..8).filter(|&j| grading[j] == k).collect();
        let dim = ad_x.select_columns(&idx).kernel().len();
        if dim > 0 {
            gx_weights.insert(k, dim);
        }
    }
    let dim_c = 8 - ad_x.kernel().len() as i64;
    OrbitLinearData {
        orbit,
        representative,
        cocharacter,
        dim_c,
        codim_c: 6 - dim_c,
        g_weights,
        gx_weights,
        ad_x,
        grading,
    }
}

/// `(dim g(k), dim g^x(k))` profiles.
pub fn weight_spaces(orbit: Orbit) -> (BTreeMap<i64, usize>, BTreeMap<i64, usize>) {
    let d = orbit_data(orbit);
    (d.g_weights, d.gx_weights)
}

impl OrbitLinearData {
    pub fn basis_names() -> [&'static str; 8] {
        BASIS_NAMES
    }

    pub fn is_nilpotent(&self) -> bool {
        let x = &self.representative;
        mat3_mul(&mat3_mul(x, x), x) == mat3_zero()
    }

    /// The representative is a sum of basis vectors of cocharacter weight 2.
    pub fn representative_in_degree_two(&self) -> bool {
        coordinates(&self.representative)
            .iter()
            .zip(self.grading)
            .all(|(c, k)| *c == q(0) || k == 2)
    }

    /// `Σ_{k≥0} k·dim g^x(k) = dim C`.
    pub fn check_dim_identity(&self) -> bool {
        let sum: i64 = self.gx_weights.iter().filter(|(k, _)| **k >= 0).map(|(k, d)| k * *d as i64).sum();
        sum == self.dim_c
    }

    /// `dim g(k) = dim g(−k)` for all k.
    pub fn check_pairing_symmetry(&self) -> bool {
        self.g_weights.iter().all(|(k, d)| self.g_weights.get(&-k) == Some(d))
    }

    pub fn gx_nonnegative(&self) -> bool {
        self.gx_weights.keys().all(|k| *k >= 0)
    }

    /// `dim g(k) = Σ_{j≥0} dim g^x(k+2j)` for every k ≥ 0.
    pub fn check_recursion(&self) -> bool {
        let max = self.g_weights.keys().copied().max().unwrap_or(0);
        (0..=max).all(|k| {
            let lhs = self.g_weights.get(&k).copied().unwrap_or(0);
            let rhs: usize = (0..).map(|j| k + 2 * j).take_while(|m| *m <= max).map(|m| self.gx_weights.get(&m).copied().unwrap_or(0)).sum();
            lhs == rhs
        })
    }

    /// `4 dim C + Σ(k−2) dim g(k) − Σ(k−2) dim g^x(k)`.
    pub fn canonical_weight(&self) -> i64 {
        let weighted = |m: &BTreeMap<i64, usize>| m.iter().map(|(k, d)| (k - 2) * *d as i64).sum::<i64>();
        4 * self.dim_c + weighted(&self.g_weights) - weighted(&self.gx_weights)
    }

    /// Gram matrix of `(u, v) ↦ tr(x [u, v])` on the basis.
    pub fn symplectic_gram(&self) -> Matrix {
        let b = basis();
        Matrix::from_fn(8, 8, |i, j| trace(&mat3_mul(&self.representative, &bracket(&b[i], &b[j]))))
    }

    /// The form is alternating, has rank dim C, and its radical is exactly
    /// the centralizer `g^x`.
    pub fn symplectic_check(&self) -> bool {
        let gram = self.symplectic_gram();
        if !gram.is_antisymmetric() || gram.rank() as i64 != self.dim_c {
            return false;
        }
        let centralizer = self.ad_x.kernel();
        centralizer.len() == gram.kernel().len()
            && centralizer.iter().all(|v| gram.mul_vec(v).iter().all(|c| *c == q(0)))
    }

    pub fn checks(&self) -> OrbitChecks {
        OrbitChecks {
            nilpotent: self.is_nilpotent(),
            degree_two: self.representative_in_degree_two(),
            dim_identity: self.check_dim_identity(),
            pairing_symmetry: self.check_pairing_symmetry(),
            gx_nonnegative: self.gx_nonnegative(),
            recursion: self.check_recursion(),
            symplectic: self.symplectic_check(),
            canonical_weight: self.canonical_weight() == self.dim_c,
            dimension: self.dim_c == self.orbit.expected_dim(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitChecks {
    pub nilpotent: bool,
    pub degree_two: bool,
    pub dim_identity: bool,
    pub pairing_symmetry: bool,
    pub gx_nonnegative: bool,
    pub recursion: bool,
    pub symplectic: bool,
    pub canonical_weight: bool,
    pub dimension: bool,
}

impl OrbitChecks {
    pub fn all(&self) -> bool {
        let OrbitChecks {
            nilpotent,
            degree_two,
            dim_identity,
            pairing_symmetry,
            gx_nonnegative,
            recursion,
            symplectic,
            canonical_weight,
            dimension,
        } = *self;
        nilpotent && degree_two && dim_identity && pairing_symmetry && gx_nonnegative && recursion && symplectic && canonical_weight && dimension
    }

    pub fn named(&self) -> [(&'static str, bool); 9] {
        [
            ("nilpotent", self.nilpotent),
            ("degree_two", self.degree_two),
            ("dim_identity", self.dim_identity),
            ("pairing_symmetry", self.pairing_symmetry),
            ("gx_nonnegative", self.gx_nonnegative),
            ("recursion", self.recursion),
            ("symplectic", self.symplectic),
            ("canonical_weight", self.canonical_weight),
            ("dimension", self.dimension),
        ]
    }
}

pub fn check_dim_identity(orbit: Orbit) -> bool {
    orbit_data(orbit).check_dim_identity()
}

pub fn check_pairing_symmetry(orbit: Orbit) -> bool {
    orbit_data(orbit).check_pairing_symmetry()
}

pub fn canonical_weight(orbit: Orbit) -> i64 {
    orbit_data(orbit).canonical_weight()
}

pub fn symplectic_check(orbit: Orbit) -> bool {
    orbit_data(orbit).symplectic_check()
}

/// Rank of the trace form `tr(uv)` on the basis.
pub fn trace_form_rank() -> usize {
    let b = basis();
    Matrix::from_fn(8, 8, |i, j| trace(&mat3_mul(&b[i], &b[j]))).rank()
}

/// The line bundle on the subregular orbit attached to λ: the character
/// `b` of the reductive centralizer together with the grading `a − c`.
pub fn restrict_line_bundle(lambda: &Weight) -> (i64, i64) {
    (lambda.b(), lambda.a() - lambda.c())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(pairs: &[(i64, usize)]) -> BTreeMap<i64, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn parse_and_display() {
        for o in Orbit::ALL {
            assert_eq!(o.to_string().parse::<Orbit>().unwrap(), o);
        }
        assert_eq!("2,1".parse::<Orbit>().unwrap(), Orbit::Subregular);
        assert!("2,2".parse::<Orbit>().is_err());
    }

    #[test]
    fn profiles() {
        let (g, gx) = weight_spaces(Orbit::Subregular);
        assert_eq!(g, profile(&[(-2, 1), (-1, 2), (0, 2), (1, 2), (2, 1)]));
        assert_eq!(gx, profile(&[(0, 1), (1, 2), (2, 1)]));

        let (g, gx) = weight_spaces(Orbit::Regular);
        assert_eq!(g, profile(&[(-4, 1), (-2, 2), (0, 2), (2, 2), (4, 1)]));
        assert_eq!(gx, profile(&[(2, 1), (4, 1)]));

        let (g, gx) = weight_spaces(Orbit::Zero);
        assert_eq!(g, profile(&[(0, 8)]));
        assert_eq!(gx, g);
    }

    #[test]
    fn invariants_hold() {
        for o in Orbit::ALL {
            let d = orbit_data(o);
            assert!(d.checks().all(), "{o}: {:?}", d.checks());
            assert_eq!(d.g_weights.values().sum::<usize>(), 8);
            assert_eq!(d.gx_weights.values().sum::<usize>() as i64, 8 - d.dim_c);
            assert_eq!(canonical_weight(o), o.expected_dim());
        }
        assert_eq!(canonical_weight(Orbit::Subregular), 4);
        assert_eq!(orbit_data(Orbit::Subregular).symplectic_gram().rank(), 4);
        assert_eq!(orbit_data(Orbit::Regular).symplectic_gram().rank(), 6);
    }

    #[test]
    fn trace_form_is_nondegenerate() {
        assert_eq!(trace_form_rank(), 8);
    }

    #[test]
    fn line_bundle_restriction() {
        assert_eq!(restrict_line_bundle(&Weight::ZERO), (0, 0));
        assert_eq!(restrict_line_bundle(&Weight::RHO), (0, 2));
        for a in 0..8 {
            let lam = Weight::new(-a - 1, -a, 2 * a + 1).unwrap();
            assert_eq!(restrict_line_bundle(&lam), (-a, -3 * a - 2));
        }
    }
}
