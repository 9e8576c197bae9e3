//! The weight lattice of PGL3, its Weyl group, and the affine dot action.
//!
//! Weights are integer triples `(a, b, c)` with `a + b + c = 0`. The Borel
//! subgroup is lower triangular, so the dominant chamber is `a >= b >= c`.
//! The Weyl group acts by permuting coordinates with the convention
//! `(w·λ)_i = λ_{w⁻¹(i)}`, which makes the action a left action.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight {
    a: i64,
    b: i64,
    c: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight::raw(0, 0, 0);
    /// Half the sum of positive roots; for PGL3 it equals the highest root.
    pub const RHO: Weight = Weight::raw(1, 0, -1);
    pub const TWO_RHO: Weight = Weight::raw(2, 0, -2);
    /// Highest root α₀.
    pub const ALPHA_0: Weight = Weight::raw(1, 0, -1);
    pub const ALPHA_1: Weight = Weight::raw(1, -1, 0);
    pub const ALPHA_2: Weight = Weight::raw(0, 1, -1);

    const fn raw(a: i64, b: i64, c: i64) -> Weight {
        Weight { a, b, c }
    }

    pub fn new(a: i64, b: i64, c: i64) -> Result<Weight> {
        if a + b + c != 0 {
            return Err(Error::OffLattice(a, b, c));
        }
        Ok(Weight::raw(a, b, c))
    }

    /// Builds a weight from its first two coordinates.
    pub fn from_ab(a: i64, b: i64) -> Weight {
        Weight::raw(a, b, -a - b)
    }

    pub fn from_coords(v: [i64; 3]) -> Result<Weight> {
        Weight::new(v[0], v[1], v[2])
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn coords(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    /// Pairings with the simple coroots, `(a - b, b - c)`.
    pub fn simple_pairings(&self) -> (i64, i64) {
        (self.a - self.b, self.b - self.c)
    }

    pub fn is_dominant(&self) -> bool {
        self.a >= self.b && self.b >= self.c
    }

    pub fn is_antidominant(&self) -> bool {
        self.a <= self.b && self.b <= self.c
    }

    /// `-w₀λ = (-c, -b, -a)`: the weight of the dual of an irreducible of
    /// highest weight λ.
    pub fn sigma(&self) -> Weight {
        Weight::raw(-self.c, -self.b, -self.a)
    }

    /// `w₀λ = (c, b, a)`.
    pub fn reversed(&self) -> Weight {
        Weight::raw(self.c, self.b, self.a)
    }

    /// The dominant representative of the Weyl orbit.
    pub fn dominant_rep(&self) -> Weight {
        let mut v = self.coords();
        v.sort_unstable_by(|x, y| y.cmp(x));
        Weight::raw(v[0], v[1], v[2])
    }

    pub fn max_abs(&self) -> i64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs())
    }

    /// Standard inner product on Z³; roots have squared length 2.
    pub fn dot(&self, other: &Weight) -> i64 {
        self.a * other.a + self.b * other.b + self.c * other.c
    }

    /// `λ_a = (a, a, -2a)`.
    pub fn lambda_a(a: i64) -> Weight {
        Weight::raw(a, a, -2 * a)
    }

    /// `λ_a^σ = -w₀λ_a = (2a, -a, -a)`.
    pub fn lambda_a_sigma(a: i64) -> Weight {
        Weight::lambda_a(a).sigma()
    }

    /// All lattice weights with every coordinate bounded by `radius` in
    /// absolute value, in lexicographic order.
    pub fn lattice_box(radius: i64) -> Vec<Weight> {
        let mut out = Vec::new();
        for a in -radius..=radius {
            for b in -radius..=radius {
                let c = -a - b;
                if c.abs() <= radius {
                    out.push(Weight::raw(a, b, c));
                }
            }
        }
        out
    }

    pub fn dominant_box(radius: i64) -> Vec<Weight> {
        Weight::lattice_box(radius)
            .into_iter()
            .filter(Weight::is_dominant)
            .collect()
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::raw(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::raw(self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::raw(-self.a, -self.b, -self.c)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight::raw(self * w.a, self * w.b, self * w.c)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

fn parse_triple(s: &str) -> Result<[i64; 3]> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected three comma-separated integers, got {s:?}")));
    }
    let mut v = [0i64; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {p:?} in {s:?}")))?;
    }
    Ok(v)
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Weight> {
        Weight::from_coords(parse_triple(s)?)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Weight, D::Error> {
        let v = <[i64; 3]>::deserialize(d)?;
        Weight::from_coords(v).map_err(serde::de::Error::custom)
    }
}

/// An integer triple that need not lie on the lattice. Used where printed
/// formulas are evaluated literally and may leave it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coords(pub [i64; 3]);

impl Coords {
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn weight(&self) -> Option<Weight> {
        Weight::from_coords(self.0).ok()
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl From<Weight> for Coords {
    fn from(w: Weight) -> Coords {
        Coords(w.coords())
    }
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for Coords {
    type Err = Error;
    fn from_str(s: &str) -> Result<Coords> {
        parse_triple(s).map(Coords)
    }
}

/// An element of S₃, stored as the image of each position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WeylElt {
    perm: [u8; 3],
    length: u8,
}

impl WeylElt {
    const fn with_perm(perm: [u8; 3]) -> WeylElt {
        let mut length = 0;
        let mut i = 0;
        while i < 3 {
            let mut j = i + 1;
            while j < 3 {
                if perm[i] > perm[j] {
                    length += 1;
                }
                j += 1;
            }
            i += 1;
        }
        WeylElt { perm, length }
    }

    pub const IDENTITY: WeylElt = WeylElt::with_perm([0, 1, 2]);
    pub const S1: WeylElt = WeylElt::with_perm([1, 0, 2]);
    pub const S2: WeylElt = WeylElt::with_perm([0, 2, 1]);
    /// The longest element w₀, reversing all coordinates.
    pub const LONGEST: WeylElt = WeylElt::with_perm([2, 1, 0]);

    /// Builds the element sending position `i` to `images[i]` (0-based).
    pub fn from_images(images: [u8; 3]) -> Option<WeylElt> {
        let mut seen = [false; 3];
        for &x in &images {
            if x > 2 || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(WeylElt::with_perm(images))
    }

    pub fn all() -> [WeylElt; 6] {
        [[0, 1, 2], [1, 0, 2], [0, 2, 1], [1, 2, 0], [2, 0, 1], [2, 1, 0]].map(WeylElt::with_perm)
    }

    pub fn images(&self) -> [u8; 3] {
        self.perm
    }

    /// Coxeter length: the number of inversions of the permutation.
    pub fn length(&self) -> u8 {
        self.length
    }

    pub fn act(&self, w: &Weight) -> Weight {
        let src = w.coords();
        let mut out = [0i64; 3];
        for (i, &x) in src.iter().enumerate() {
            out[self.perm[i] as usize] = x;
        }
        Weight::raw(out[0], out[1], out[2])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElt) -> WeylElt {
        WeylElt::with_perm(other.perm.map(|i| self.perm[i as usize]))
    }

    pub fn inverse(&self) -> WeylElt {
        let mut inv = [0u8; 3];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        WeylElt::with_perm(inv)
    }
}

/// `δ_λ`: the smallest length of a Weyl element moving dominant λ into the
/// antidominant chamber.
pub fn delta(lambda: &Weight) -> Result<u8> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(*lambda));
    }
    Ok(WeylElt::all()
        .iter()
        .filter(|w| w.act(lambda).is_antidominant())
        .map(WeylElt::length)
        .min()
        .expect("w0 always reaches the antidominant chamber"))
}

/// Level ℓ of the quantum parameter: odd and greater than 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Level(i64);

impl Level {
    pub fn new(l: i64) -> Result<Level> {
        if l > 3 && l % 2 == 1 {
            Ok(Level(l))
        } else {
            Err(Error::InvalidLevel(l))
        }
    }

    pub fn get(&self) -> i64 {
        self.0
    }
}

/// `v ⋉ λ` in `W ⋉ X`, acting by `μ ↦ v(μ + ℓλ + ρ) − ρ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AffineElt {
    pub finite: WeylElt,
    pub translation: Weight,
    pub level: Level,
}

impl AffineElt {
    pub fn identity(level: Level) -> AffineElt {
        AffineElt { finite: WeylElt::IDENTITY, translation: Weight::ZERO, level }
    }

    pub fn translation(nu: Weight, level: Level) -> AffineElt {
        AffineElt { finite: WeylElt::IDENTITY, translation: nu, level }
    }

    pub fn dot(&self, mu: &Weight) -> Weight {
        let l = self.level.get();
        self.finite.act(&(*mu + l * self.translation + Weight::RHO)) - Weight::RHO
    }

    /// Product `self · other`, so that `(self · other) • μ = self • (other • μ)`.
    pub fn compose(&self, other: &AffineElt) -> Result<AffineElt> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level.get(), other.level.get()));
        }
        let pulled = other.finite.inverse().act(&self.translation);
        Ok(AffineElt {
            finite: self.finite.compose(&other.finite),
            translation: other.translation + pulled,
            level: self.level,
        })
    }
}

/// `w_λ • 0` for antidominant λ: the dominant member of `{v(ℓλ + ρ) − ρ}`.
pub fn tilting_highest_weight(lambda: &Weight, level: Level) -> Result<Weight> {
    if !lambda.is_antidominant() {
        return Err(Error::NotAntidominant(*lambda));
    }
    let shifted = level.get() * *lambda + Weight::RHO;
    let sorted = shifted.dominant_rep();
    let [x, y, z] = sorted.coords();
    if x == y || y == z {
        return Err(Error::NotRegular(*lambda));
    }
    Ok(sorted - Weight::RHO)
}
