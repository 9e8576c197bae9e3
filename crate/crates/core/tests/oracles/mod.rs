//! Reference computations that share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Weight multiset of the irreducible module of highest weight `(a, b, c)`
/// (a ≥ b ≥ c, a + b + c = 0), by listing semistandard tableaux of shape
/// `(a − c, b − c)` with entries in {1, 2, 3}. A tableau with content
/// `(n1, n2, n3)` contributes the weight `(n1 + c, n2 + c, n3 + c)`.
pub fn tableau_character(a: i64, b: i64, c: i64) -> BTreeMap<[i64; 3], i64> {
    assert!(a >= b && b >= c && a + b + c == 0);
    let top = (a - c) as usize;
    let bottom = (b - c) as usize;
    let mut out = BTreeMap::new();
    // The top row is 1^x1 2^x2 3^x3; the bottom row has no 1s by column
    // strictness, so it is 2^y2 3^y3.
    for x1 in 0..=top {
        for x2 in 0..=(top - x1) {
            let x3 = top - x1 - x2;
            let row1: Vec<u8> = [vec![1u8; x1], vec![2; x2], vec![3; x3]].concat();
            for y2 in 0..=bottom {
                let y3 = bottom - y2;
                let row2: Vec<u8> = [vec![2u8; y2], vec![3; y3]].concat();
                if row2.iter().zip(&row1).all(|(lo, hi)| lo > hi) {
                    let content = [x1 as i64, (x2 + y2) as i64, (x3 + y3) as i64];
                    *out.entry([content[0] + c, content[1] + c, content[2] + c]).or_insert(0) += 1;
                }
            }
        }
    }
    out
}

fn binomial(n: i64, k: i64) -> i128 {
    if n < k || k < 0 {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Coefficient of `xⁿ` in `(1 − x²)(1 − x³)/(1 − x)⁸`, via
/// `[xⁿ](1 − x)^{−8} = C(n + 7, 7)`.
pub fn nilcone_hilbert_coeff(n: i64) -> i128 {
    let c = |m: i64| if m < 0 { 0 } else { binomial(m + 7, 7) };
    c(n) - c(n - 2) - c(n - 3) + c(n - 5)
}

/// Coefficients of `num(x) / (1 − x)^k` through `x^max`, by repeated
/// partial sums.
pub fn expand_over_one_minus_x(num: &[i128], k: u32, max: usize) -> Vec<i128> {
    let mut seq = vec![0i128; max + 1];
    for (i, c) in num.iter().enumerate() {
        if i <= max {
            seq[i] = *c;
        }
    }
    for _ in 0..k {
        for i in 1..=max {
            seq[i] += seq[i - 1];
        }
    }
    seq
}

/// `H^•(λ)` in characteristic zero by enumerating the six permutations:
/// the unique one making `λ + ρ` strictly decreasing gives the degree
/// (its number of inversions) and highest weight.
pub fn bott_by_enumeration(l: [i64; 3]) -> Option<(u8, [i64; 3])> {
    let shifted = [l[0] + 1, l[1], l[2] - 1];
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for p in perms {
        let v = [shifted[p[0]], shifted[p[1]], shifted[p[2]]];
        if v[0] > v[1] && v[1] > v[2] {
            let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            return Some((inversions as u8, [v[0] - 1, v[1], v[2] + 1]));
        }
    }
    None
}

/// Weyl's dimension formula, written out directly.
pub fn weyl_dimension(h: [i64; 3]) -> i64 {
    (h[0] - h[1] + 1) * (h[1] - h[2] + 1) * (h[0] - h[2] + 2) / 2
}
