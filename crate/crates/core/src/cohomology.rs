//! Line-bundle cohomology on G/B for PGL3.
//!
//! Characteristic-zero evaluation goes through Borel–Weil–Bott. The Euler
//! characteristic, the forced-vanishing rule and the top-degree criterion
//! are valid in every characteristic and are available in prime mode too.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weights::{Weight, WeylElt};

/// Characteristic of the base field. Primes 2 and 3 are excluded.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn new(p: u64) -> Result<Characteristic> {
        if p == 0 {
            return Ok(Characteristic::Zero);
        }
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime || p <= 3 {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(Characteristic::Prime(p))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Characteristic::Zero)
    }

    pub fn value(&self) -> u64 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => *p,
        }
    }

    pub fn require_zero(&self) -> Result<()> {
        if self.is_zero() {
            Ok(())
        } else {
            Err(Error::NeedsCharacteristicZero)
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Characteristic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.value())
    }
}

/// Borel–Weil–Bott outcome: `H^•(λ)` is zero, or lives in a single degree
/// as the irreducible of the given highest weight.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BottResult {
    Zero,
    At { degree: u8, highest_weight: Weight },
}

impl BottResult {
    pub fn degree(&self) -> Option<u8> {
        match self {
            BottResult::Zero => None,
            BottResult::At { degree, .. } => Some(*degree),
        }
    }
}

/// Characteristic-zero `H^•(λ)`: shift by ρ, sort, count inversions.
pub fn bott(lambda: &Weight) -> BottResult {
    let v = (*lambda + Weight::RHO).coords();
    let mut inversions = 0u8;
    for i in 0..3 {
        for j in i + 1..3 {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Equal => return BottResult::Zero,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let sorted = (*lambda + Weight::RHO).dominant_rep();
    BottResult::At { degree: inversions, highest_weight: sorted - Weight::RHO }
}

pub fn bott_in(ch: Characteristic, lambda: &Weight) -> Result<BottResult> {
    ch.require_zero()?;
    Ok(bott(lambda))
}

/// Weyl's dimension polynomial `(a−b+1)(b−c+1)(a−c+2)/2`, evaluated at any
/// weight. On all weights it equals the Euler characteristic dimension
/// `Σ (−1)^i dim H^i(λ)`.
pub fn weyl_dim_poly(lambda: &Weight) -> i64 {
    let (p, q) = lambda.simple_pairings();
    (p + 1) * (q + 1) * (p + q + 2) / 2
}

pub fn weyl_dim(mu: &Weight) -> Result<u64> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(*mu));
    }
    Ok(weyl_dim_poly(mu) as u64)
}

/// A (virtual) T-character: weight → signed multiplicity. Zero entries are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Character {
    mults: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero() -> Character {
        Character::default()
    }

    pub fn add_weight(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.mults.entry(w).or_insert(0);
        *e += m;
        if *e == 0 {
            self.mults.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &Character, k: i64) {
        for (w, m) in &other.mults {
            self.add_weight(*w, k * m);
        }
    }

    pub fn scaled(&self, k: i64) -> Character {
        let mut out = Character::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn mult(&self, w: &Weight) -> i64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.mults.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// Signed total dimension.
    pub fn dim(&self) -> i64 {
        self.mults.values().sum()
    }

    /// True when no multiplicity is negative.
    pub fn is_genuine(&self) -> bool {
        self.mults.values().all(|&m| m > 0)
    }

    /// The character of the dual: every weight negated.
    pub fn dual(&self) -> Character {
        Character { mults: self.mults.iter().map(|(w, m)| (-*w, *m)).collect() }
    }

    pub fn is_w_invariant(&self) -> bool {
        self.mults
            .iter()
            .all(|(w, m)| WeylElt::all().iter().all(|v| self.mult(&v.act(w)) == *m))
    }
}

#[derive(Serialize)]
struct WeightMult {
    weight: Weight,
    mult: i64,
}

impl Serialize for Character {
    /// `{"sign": ±1, "weights": [{"weight": [a,b,c], "mult": m}, ...]}`. When
    /// every multiplicity has the same sign it is factored out; otherwise
    /// the sign is +1 and multiplicities keep their own signs.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let sign = if !self.mults.is_empty() && self.mults.values().all(|&m| m < 0) { -1 } else { 1 };
        let weights: Vec<WeightMult> =
            self.mults.iter().map(|(w, m)| WeightMult { weight: *w, mult: sign * m }).collect();
        let mut st = s.serialize_struct("Character", 2)?;
        st.serialize_field("sign", &sign)?;
        st.serialize_field("weights", &weights)?;
        st.end()
    }
}

/// A formal integer combination of irreducible characters `χ(μ)`, keyed by
/// dominant highest weight.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeylSum {
    coeffs: BTreeMap<Weight, i64>,
}

impl WeylSum {
    pub fn zero() -> WeylSum {
        WeylSum::default()
    }

    pub fn single(mu: Weight, k: i64) -> WeylSum {
        let mut s = WeylSum::zero();
        s.add(mu, k);
        s
    }

    pub fn add(&mut self, mu: Weight, k: i64) {
        debug_assert!(mu.is_dominant());
        if k == 0 {
            return;
        }
        let e = self.coeffs.entry(mu).or_insert(0);
        *e += k;
        if *e == 0 {
            self.coeffs.remove(&mu);
        }
    }

    pub fn add_sum(&mut self, other: &WeylSum) {
        for (mu, k) in &other.coeffs {
            self.add(*mu, *k);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, mu: &Weight) -> i64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.coeffs.iter().map(|(mu, k)| k * weyl_dim_poly(mu)).sum()
    }

    /// Number of irreducible constituents counted with multiplicity; `None`
    /// if some coefficient is negative.
    pub fn constituent_count(&self) -> Option<u64> {
        self.coeffs.values().try_fold(0u64, |acc, &k| (k >= 0).then_some(acc + k as u64))
    }

    /// `χ(μ) ↦ χ(−w₀μ)`, the character of the dual.
    pub fn dual(&self) -> WeylSum {
        WeylSum { coeffs: self.coeffs.iter().map(|(mu, k)| (mu.sigma(), *k)).collect() }
    }

    pub fn expand(&self) -> Character {
        let mut out = Character::zero();
        for (mu, k) in &self.coeffs {
            out.add_scaled(&dominant_character(mu), *k);
        }
        out
    }
}

/// Dominant weights `μ ≤ λ` with their Freudenthal multiplicities.
fn freudenthal(lambda: &Weight) -> Vec<(Weight, i64)> {
    const POSITIVE_ROOTS: [Weight; 3] = [Weight::ALPHA_1, Weight::ALPHA_2, Weight::ALPHA_0];
    let (p, q) = lambda.simple_pairings();
    // μ = λ − n1 α1 − n2 α2 is stored at n1 * width + n2.
    let (rows, width) = (2 * p + q + 1, p + 2 * q + 1);
    let index = |mu: &Weight| {
        let d = *lambda - *mu;
        let (n1, n2) = (d.a(), -d.c());
        (0..rows).contains(&n1).then_some(())?;
        (0..width).contains(&n2).then_some((n1 * width + n2) as usize)
    };
    let mut layers: Vec<(i64, Weight)> = Vec::new();
    for n1 in 0..rows {
        for n2 in 0..width {
            let mu = *lambda - n1 * Weight::ALPHA_1 - n2 * Weight::ALPHA_2;
            if mu.is_dominant() {
                layers.push((n1 + n2, mu));
            }
        }
    }
    layers.sort();
    let norm_top = (*lambda + Weight::RHO).dot(&(*lambda + Weight::RHO));
    let mut mults = vec![0i64; (rows * width) as usize];
    let mut out = Vec::new();
    for (height, mu) in layers {
        let m = if height == 0 {
            1
        } else {
            let mut numer = 0i64;
            for alpha in POSITIVE_ROOTS {
                let mut k = 1;
                while let Some(i) = index(&(mu + k * alpha).dominant_rep()) {
                    numer += mults[i] * (mu + k * alpha).dot(&alpha);
                    k += 1;
                }
            }
            let denom = norm_top - (mu + Weight::RHO).dot(&(mu + Weight::RHO));
            debug_assert_eq!(2 * numer % denom, 0, "Freudenthal division not exact at {mu}");
            2 * numer / denom
        };
        if m != 0 {
            mults[index(&mu).expect("μ ≤ λ")] = m;
            out.push((mu, m));
        }
    }
    out
}

fn dominant_character(mu: &Weight) -> Character {
    let mut out = Character::zero();
    for (dom, m) in freudenthal(mu) {
        let mut orbit: Vec<Weight> = WeylElt::all().iter().map(|v| v.act(&dom)).collect();
        orbit.sort();
        orbit.dedup();
        for w in orbit {
            out.add_weight(w, m);
        }
    }
    out
}

/// Full T-character of the irreducible (characteristic zero) module of
/// highest weight μ.
pub fn character(mu: &Weight) -> Result<Character> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(*mu));
    }
    Ok(dominant_character(mu))
}

pub fn character_in(ch: Characteristic, mu: &Weight) -> Result<Character> {
    ch.require_zero()?;
    character(mu)
}

/// `Σ (−1)^i ch H^i(λ)` in the basis of irreducible characters, found by
/// walking λ + ρ into the dominant chamber one simple reflection at a time.
pub fn euler_weyl(lambda: &Weight) -> WeylSum {
    let mut v = (*lambda + Weight::RHO).coords();
    let mut sign = 1;
    loop {
        let p = v[0] - v[1];
        let q = v[1] - v[2];
        if p == 0 || q == 0 {
            return WeylSum::zero();
        }
        if p < 0 {
            v.swap(0, 1);
        } else if q < 0 {
            v.swap(1, 2);
        } else {
            break;
        }
        sign = -sign;
    }
    let top = Weight::from_coords(v).expect("reflections preserve the lattice") - Weight::RHO;
    WeylSum::single(top, sign)
}

/// Euler characteristic `Σ (−1)^i ch H^i(λ)` as a virtual character.
pub fn euler_char(lambda: &Weight) -> Character {
    euler_weyl(lambda).expand()
}

/// True when λ pairs to −1 with a simple coroot, which kills `RInd λ` in
/// every characteristic.
pub fn forced_vanishing(lambda: &Weight) -> bool {
    let (p, q) = lambda.simple_pairings();
    p == -1 || q == -1
}

/// Serre-duality criterion for `H³(λ) ≠ 0`: λ = w₀μ − 2ρ with μ dominant.
pub fn h3_possible(lambda: &Weight) -> bool {
    (*lambda + Weight::TWO_RHO).reversed().is_dominant()
}

/// Weights of u* for the lower-triangular Borel: the positive roots.
pub const NILRADICAL_WEIGHTS: [Weight; 3] = [Weight::ALPHA_1, Weight::ALPHA_2, Weight::ALPHA_0];

/// Weights of `Symⁿ(u*)` with multiplicity, one per monomial.
pub fn sym_weights(n: u32) -> Vec<Weight> {
    let n = n as i64;
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            out.push(i * NILRADICAL_WEIGHTS[0] + j * NILRADICAL_WEIGHTS[1] + k * NILRADICAL_WEIGHTS[2]);
        }
    }
    out
}

/// Degree-2n graded Euler character of the Andersen–Jantzen sheaf `A_λ`, in
/// the basis of irreducible characters.
pub fn aj_euler_weyl(lambda: &Weight, n: u32) -> WeylSum {
    let mut out = WeylSum::zero();
    for nu in sym_weights(n) {
        out.add_sum(&euler_weyl(&(*lambda + nu)));
    }
    out
}

pub fn aj_euler(lambda: &Weight, n: u32) -> Character {
    aj_euler_weyl(lambda, n).expand()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(a: i64, b: i64, c: i64) -> Weight {
        Weight::new(a, b, c).unwrap()
    }

    #[test]
    fn characteristic_validation() {
        assert_eq!(Characteristic::new(0).unwrap(), Characteristic::Zero);
        assert_eq!(Characteristic::new(5).unwrap(), Characteristic::Prime(5));
        for bad in [1, 2, 3, 4, 9, 15] {
            assert_eq!(Characteristic::new(bad), Err(Error::InvalidCharacteristic(bad)));
        }
    }

    #[test]
    fn bott_examples() {
        for n in 0..6 {
            assert_eq!(bott(&w(n, 0, -n)), BottResult::At { degree: 0, highest_weight: w(n, 0, -n) });
        }
        assert_eq!(bott(&w(-1, 0, 1)), BottResult::Zero);
        assert_eq!(bott(&w(-3, 0, 3)), BottResult::At { degree: 3, highest_weight: w(1, 0, -1) });
        assert_eq!(bott(&w(-5, 5, 0)), BottResult::At { degree: 2, highest_weight: w(4, -1, -3) });
    }

    #[test]
    fn prime_mode_refuses_bott_and_characters() {
        let p = Characteristic::Prime(7);
        assert_eq!(bott_in(p, &Weight::ZERO), Err(Error::NeedsCharacteristicZero));
        assert_eq!(character_in(p, &Weight::ZERO), Err(Error::NeedsCharacteristicZero));
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&Weight::ZERO).unwrap(), 1);
        assert_eq!(weyl_dim(&w(1, 0, -1)).unwrap(), 8);
        for n in 0..10 {
            assert_eq!(weyl_dim(&w(n, 0, -n)).unwrap(), ((n + 1) * (n + 1) * (n + 1)) as u64);
        }
        assert!(weyl_dim(&w(0, 1, -1)).is_err());
    }

    #[test]
    fn character_examples() {
        let triv = character(&Weight::ZERO).unwrap();
        assert_eq!(triv.iter().collect::<Vec<_>>(), vec![(&Weight::ZERO, &1)]);

        let adj = character(&w(1, 0, -1)).unwrap();
        assert_eq!(adj.mult(&Weight::ZERO), 2);
        assert_eq!(adj.iter().count(), 7);
        assert_eq!(adj.dim(), 8);

        let ten = character(&w(1, 1, -2)).unwrap();
        assert_eq!(ten.dim(), 10);
        assert!(ten.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char(&w(2, 1, -3)), character(&w(2, 1, -3)).unwrap());
        let e = euler_char(&w(2, -2, 0));
        assert_eq!(e, character(&w(2, -1, -1)).unwrap().scaled(-1));
        assert_eq!(e.dim(), -10);
        assert!(euler_char(&w(-1, 0, 1)).is_zero());
    }

    #[test]
    fn vanishing_rules() {
        assert!(forced_vanishing(&w(-1, 0, 1)));
        assert!(!forced_vanishing(&Weight::ZERO));
        assert!(!forced_vanishing(&w(0, -1, 1)));

        assert!(h3_possible(&w(-2, 0, 2)));
        assert!(h3_possible(&w(-3, 0, 3)));
        assert!(!h3_possible(&Weight::ZERO));
        assert!(!h3_possible(&w(5, 0, -5)));
    }

    #[test]
    fn aj_examples() {
        for lam in [w(0, 0, 0), w(2, -3, 1), w(-4, 1, 3)] {
            assert_eq!(aj_euler(&lam, 0), euler_char(&lam));
        }
        let one = aj_euler(&Weight::ZERO, 1);
        assert_eq!(one, character(&w(1, 0, -1)).unwrap());
        assert_eq!(one.dim(), 8);
        // −10 − 10 + 27 + 8 + 10 + 10
        assert_eq!(aj_euler(&Weight::ZERO, 2).dim(), 35);
        assert_eq!(sym_weights(2).len(), 6);
    }

    #[test]
    fn serialization_shape() {
        let c = euler_char(&w(2, -2, 0));
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["sign"], -1);
        assert_eq!(v["weights"].as_array().unwrap().len(), 10);
        assert_eq!(v["weights"][0]["mult"], 1);
    }

    fn any_weight(r: i64) -> impl Strategy<Value = Weight> {
        (-r..=r, -r..=r).prop_map(|(a, b)| Weight::from_ab(a, b))
    }

    proptest! {
        #[test]
        fn euler_agrees_with_bott(lam in any_weight(25)) {
            let expected = match bott(&lam) {
                BottResult::Zero => Character::zero(),
                BottResult::At { degree, highest_weight } => {
                    character(&highest_weight).unwrap().scaled(if degree % 2 == 0 { 1 } else { -1 })
                }
            };
            prop_assert_eq!(euler_char(&lam), expected);
            prop_assert_eq!(euler_weyl(&lam).dim(), weyl_dim_poly(&lam));
        }

        #[test]
        fn serre_duality_symmetry(lam in any_weight(25)) {
            let dual = -lam - Weight::TWO_RHO;
            match (bott(&lam), bott(&dual)) {
                (BottResult::Zero, BottResult::Zero) => {}
                (BottResult::At { degree: i, highest_weight: m }, BottResult::At { degree: j, highest_weight: n }) => {
                    prop_assert_eq!(i + j, 3);
                    prop_assert_eq!(weyl_dim(&m).unwrap(), weyl_dim(&n).unwrap());
                }
                other => prop_assert!(false, "mismatch {:?}", other),
            }
        }

        #[test]
        fn vanishing_rules_agree_with_bott(lam in any_weight(25)) {
            if forced_vanishing(&lam) {
                prop_assert_eq!(bott(&lam), BottResult::Zero);
            }
            prop_assert_eq!(h3_possible(&lam), bott(&lam).degree() == Some(3));
        }

        #[test]
        fn characters_are_w_invariant(lam in any_weight(8)) {
            let mu = lam.dominant_rep();
            let ch = character(&mu).unwrap();
            prop_assert!(ch.is_w_invariant());
            prop_assert!(ch.is_genuine());
            prop_assert_eq!(ch.dim() as u64, weyl_dim(&mu).unwrap());
        }

        #[test]
        fn aj_sigma_symmetry(lam in any_weight(6), n in 0u32..6) {
            prop_assert_eq!(aj_euler(&lam.sigma(), n), aj_euler(&lam, n).dual());
        }
    }
}
