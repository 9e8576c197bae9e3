//! Laurent polynomials and rational functions in one variable `t`, with
//! exact integer coefficients, for Hilbert and Euler series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A finite Laurent polynomial `Σ c_k t^k`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i128>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(c: i128, k: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(c, k);
        p
    }

    /// `Σ terms[i] t^i`.
    pub fn from_coeffs(terms: &[i128]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms.iter().enumerate() {
            p.add_term(*c, k as i64);
        }
        p
    }

    pub fn add_term(&mut self, c: i128, k: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> i128 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, *c))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, *c)).collect() }
    }

    /// Substitute `t ↦ t^k` for a nonzero integer k (k = −1 inverts the variable).
    pub fn substitute_power(&self, k: i64) -> LaurentPoly {
        assert_ne!(k, 0);
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e * k, *c)).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        (0..n).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Drop all terms of degree above `k`.
    pub fn truncate(&self, k: i64) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.range(..=k).map(|(e, c)| (*e, *c)).collect() }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(c, k);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(a * b, i + j);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if n > 0 { "+" } else { "" };
            let mag = c.abs();
            let sep = if n > 0 { " " } else { "" };
            let space = if n > 0 { " " } else { "" };
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "t".to_string(),
                (1, m) => format!("{m}t"),
                (k, 1) => format!("t^{k}"),
                (k, m) => format!("{m}t^{k}"),
            };
            write!(f, "{sep}{sign}{space}{body}")?;
        }
        Ok(())
    }
}

/// A rational function `num / den` with `den ≠ 0`. Equality is equality of
/// functions, tested by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFn {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
        assert!(!den.is_zero(), "zero denominator");
        RationalFn { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> RationalFn {
        RationalFn::new(p, LaurentPoly::one())
    }

    /// `Σ_{n≥0} f(n) t^{step·n}` for a polynomial f of degree ≤ d, given
    /// the samples `f(0), …, f(d)`. Uses `Σ f(n) xⁿ = N(x)/(1−x)^{d+1}` with
    /// N the truncation of `(1−x)^{d+1} Σ_{n≤d} f(n) xⁿ` to degree d.
    pub fn from_polynomial_samples(samples: &[i128], step: i64) -> RationalFn {
        let d = samples.len() as i64 - 1;
        let one_minus_x = LaurentPoly::from_coeffs(&[1, -1]);
        let den = one_minus_x.pow(samples.len() as u32);
        let num = (&den * &LaurentPoly::from_coeffs(samples)).truncate(d);
        RationalFn::new(num.substitute_power(step), den.substitute_power(step))
    }

    /// Substitute `t ↦ 1/t`.
    pub fn invert_variable(&self) -> RationalFn {
        RationalFn::new(self.num.substitute_power(-1), self.den.substitute_power(-1))
    }

    pub fn mul_monomial(&self, c: i128, k: i64) -> RationalFn {
        RationalFn::new(&self.num * &LaurentPoly::monomial(c, k), self.den.clone())
    }

    /// Rewrite so the denominator is a polynomial with constant term of
    /// positive sign. Returns `None` if the denominator has zero constant
    /// term after clearing negative powers (not a power series).
    pub fn normalized(&self) -> Option<RationalFn> {
        let lo = self.den.min_degree()?;
        let mut num = self.num.shift(-lo);
        let mut den = self.den.shift(-lo);
        if den.coeff(0) < 0 {
            num = -&num;
            den = -&den;
        }
        (den.coeff(0) != 0).then_some(RationalFn { num, den })
    }

    /// Laurent expansion at `t = 0` through degree `max_deg`. Requires the
    /// normalized denominator to have constant term ±1.
    pub fn expand(&self, max_deg: i64) -> Option<LaurentPoly> {
        let r = self.normalized()?;
        if r.den.coeff(0) != 1 {
            return None;
        }
        let lo = r.num.min_degree().unwrap_or(0);
        let mut out = LaurentPoly::zero();
        let mut rem = r.num.clone();
        for k in lo..=max_deg {
            let c = rem.coeff(k);
            if c != 0 {
                out.add_term(c, k);
                rem = &rem - &(&r.den * &LaurentPoly::monomial(c, k));
            }
        }
        Some(out)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &RationalFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;

    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Hilbert series of the coordinate ring of the nilpotent cone in `t`,
/// where the generators of `g*` sit in degree 2:
/// `(1 − t⁴)(1 − t⁶) / (1 − t²)⁸`.
pub fn nilcone_hilbert_series() -> RationalFn {
    let num = &LaurentPoly::from_coeffs(&[1, 0, 0, 0, -1]) * &LaurentPoly::from_coeffs(&[1, 0, 0, 0, 0, 0, -1]);
    let den = LaurentPoly::from_coeffs(&[1, 0, -1]).pow(8);
    RationalFn::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = LaurentPoly::from_coeffs(&[1, 1]);
        assert_eq!(p.pow(3), LaurentPoly::from_coeffs(&[1, 3, 3, 1]));
        assert_eq!(p.substitute_power(-1).min_degree(), Some(-1));
        assert_eq!((&p - &p), LaurentPoly::zero());
        assert_eq!(LaurentPoly::from_coeffs(&[1, -2, 0, 1]).to_string(), "1 - 2t + t^3");
    }

    #[test]
    fn geometric_series() {
        let r = RationalFn::new(LaurentPoly::one(), LaurentPoly::from_coeffs(&[1, -1]));
        let e = r.expand(5).unwrap();
        assert!((0..=5).all(|k| e.coeff(k) == 1));
    }

    #[test]
    fn samples_reproduce_cubes() {
        // Σ (n+1)³ xⁿ = (1 + 4x + x²)/(1 − x)⁴
        let r = RationalFn::from_polynomial_samples(&[1, 8, 27, 64], 1);
        let closed = RationalFn::new(LaurentPoly::from_coeffs(&[1, 4, 1]), LaurentPoly::from_coeffs(&[1, -1]).pow(4));
        assert_eq!(r, closed);
        let e = r.expand(20).unwrap();
        assert!((0..=20).all(|n| e.coeff(n) == (n as i128 + 1).pow(3)));
    }

    #[test]
    fn equality_ignores_common_factors() {
        let a = RationalFn::new(LaurentPoly::from_coeffs(&[1, 1]), LaurentPoly::from_coeffs(&[1, 0, -1]));
        let b = RationalFn::new(LaurentPoly::one(), LaurentPoly::from_coeffs(&[1, -1]));
        assert_eq!(a, b);
        assert_ne!(a, b.mul_monomial(1, 1));
    }

    #[test]
    fn hilbert_series_low_degrees() {
        let e = nilcone_hilbert_series().expand(8).unwrap();
        assert_eq!([0, 2, 4].map(|k| e.coeff(k)), [1, 8, 35]);
        assert_eq!(e.coeff(1), 0);
    }
}
