//! The Lusztig–Vogan bijection for PGL3, as tabulated, together with an
//! auditor for the tabulated formulas.
//!
//! Backward direction (label → weight):
//!
//! | orbit     | rep            | weight                                    |
//! |-----------|----------------|-------------------------------------------|
//! | `[3]`     | trivial        | `(0,0,0)`                                 |
//! | `[2,1]`   | `k_a`, a=2x+1≥0 | `(x+1, x+1, −2x−2)`                      |
//! | `[2,1]`   | `k_a`, a=2x≥0  | `(x+1, x, −2x−1)`                         |
//! | `[2,1]`   | `k_a`, a=2x+1≤0 | `(−2x−2, x, x)` as printed               |
//! | `[2,1]`   | `k_a`, a=2x≤0  | `(−2x−1, x, x−1)` as printed              |
//! | `[1,1,1]` | `L(μ)`         | `μ − 2ρ`                                  |
//!
//! The two negative rows as printed leave the lattice (coordinate sum −2).
//! [`LvMode::DualityCorrected`] replaces them by `λ(−a) = −w₀λ(a)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::orbits::Orbit;
use crate::weights::{Coords, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LvMode {
    Verbatim,
    #[default]
    DualityCorrected,
}

impl FromStr for LvMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<LvMode> {
        match s {
            "verbatim" => Ok(LvMode::Verbatim),
            "corrected" | "duality-corrected" => Ok(LvMode::DualityCorrected),
            _ => Err(Error::Parse(format!("unknown lv mode '{s}' (expected verbatim or corrected)"))),
        }
    }
}

impl fmt::Display for LvMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LvMode::Verbatim => "verbatim",
            LvMode::DualityCorrected => "corrected",
        })
    }
}

/// An irreducible equivariant vector bundle on a nilpotent orbit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SimpleLabel {
    /// Trivial representation on `[3]`.
    Regular,
    /// Torus character `k_a` on `[2,1]`.
    Subregular(i64),
    /// Irreducible `L(μ)` on `[1,1,1]`; μ dominant.
    Zero(Weight),
}

/// The representation part of a label, as supplied on a command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rep {
    Unit,
    TorusChar(i64),
    HighestWeight(Weight),
}

impl SimpleLabel {
    pub fn new(orbit: Orbit, rep: Rep) -> Result<SimpleLabel> {
        match (orbit, rep) {
            (Orbit::Regular, Rep::Unit) => Ok(SimpleLabel::Regular),
            (Orbit::Subregular, Rep::TorusChar(a)) => Ok(SimpleLabel::Subregular(a)),
            (Orbit::Zero, Rep::HighestWeight(mu)) if mu.is_dominant() => Ok(SimpleLabel::Zero(mu)),
            (Orbit::Zero, Rep::HighestWeight(mu)) => Err(Error::NotDominant(mu)),
            (o, r) => Err(Error::LabelMismatch(format!("{r:?} is not a representation for orbit {o}"))),
        }
    }

    pub fn orbit(&self) -> Orbit {
        match self {
            SimpleLabel::Regular => Orbit::Regular,
            SimpleLabel::Subregular(_) => Orbit::Subregular,
            SimpleLabel::Zero(_) => Orbit::Zero,
        }
    }

    pub fn rep(&self) -> Rep {
        match self {
            SimpleLabel::Regular => Rep::Unit,
            SimpleLabel::Subregular(a) => Rep::TorusChar(*a),
            SimpleLabel::Zero(mu) => Rep::HighestWeight(*mu),
        }
    }

    /// The label of the σ-twisted simple: `k_a ↦ k_{−a}`, `L(μ) ↦ L(−w₀μ)`.
    pub fn sigma(&self) -> SimpleLabel {
        match self {
            SimpleLabel::Regular => SimpleLabel::Regular,
            SimpleLabel::Subregular(a) => SimpleLabel::Subregular(-a),
            SimpleLabel::Zero(mu) => SimpleLabel::Zero(mu.sigma()),
        }
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::Regular => write!(f, "([3], k)"),
            SimpleLabel::Subregular(a) => write!(f, "([2,1], k_{a})"),
            SimpleLabel::Zero(mu) => write!(f, "([1,1,1], L({mu}))"),
        }
    }
}

impl Serialize for SimpleLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "snake_case")]
        enum RepJson {
            Unit,
            TorusChar(i64),
            HighestWeight(Weight),
        }
        #[derive(Serialize)]
        struct LabelJson {
            orbit: Orbit,
            rep: RepJson,
        }
        let rep = match self.rep() {
            Rep::Unit => RepJson::Unit,
            Rep::TorusChar(a) => RepJson::TorusChar(a),
            Rep::HighestWeight(mu) => RepJson::HighestWeight(mu),
        };
        LabelJson { orbit: self.orbit(), rep }.serialize(s)
    }
}

fn subregular_nonnegative(a: i64) -> Weight {
    debug_assert!(a >= 0);
    let x = a.div_euclid(2);
    if a % 2 == 1 {
        Weight::from_ab(x + 1, x + 1)
    } else {
        Weight::from_ab(x + 1, x)
    }
}

fn subregular_verbatim_negative(a: i64) -> Coords {
    debug_assert!(a < 0);
    let x = a.div_euclid(2);
    if a.rem_euclid(2) == 1 {
        Coords([-2 * x - 2, x, x])
    } else {
        Coords([-2 * x - 1, x, x - 1])
    }
}

/// Label → coordinates. In verbatim mode the output may leave the lattice.
pub fn lv_backward(label: &SimpleLabel, mode: LvMode) -> Coords {
    match *label {
        SimpleLabel::Regular => Weight::ZERO.into(),
        SimpleLabel::Subregular(a) if a >= 0 => subregular_nonnegative(a).into(),
        SimpleLabel::Subregular(a) => match mode {
            LvMode::Verbatim => subregular_verbatim_negative(a),
            LvMode::DualityCorrected => subregular_nonnegative(-a).sigma().into(),
        },
        SimpleLabel::Zero(mu) => (mu - Weight::TWO_RHO).into(),
    }
}

/// Label → weight, in duality-corrected mode (always on the lattice).
pub fn lv_weight(label: &SimpleLabel) -> Weight {
    lv_backward(label, LvMode::DualityCorrected).weight().expect("corrected rows stay on the lattice")
}

/// Dominant weight → label, by row priority: `[3]`, then the `[2,1]` rows
/// (negative rows in duality-corrected form), then the `[1,1,1]` row.
pub fn lv_forward(lambda: &Weight) -> Result<SimpleLabel> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(*lambda));
    }
    let [p, q, r] = lambda.coords();
    let label = if *lambda == Weight::ZERO {
        SimpleLabel::Regular
    } else if p == q && p >= 1 {
        SimpleLabel::Subregular(2 * p - 1)
    } else if p == q + 1 && q >= 0 {
        SimpleLabel::Subregular(2 * q)
    } else if q == r && q <= -1 {
        SimpleLabel::Subregular(2 * q + 1)
    } else if q == r + 1 && q <= -1 {
        SimpleLabel::Subregular(2 * q)
    } else {
        SimpleLabel::Zero(*lambda + Weight::TWO_RHO)
    };
    Ok(label)
}

/// Half the codimension of the orbit: the canonical grading shift.
pub fn lv_canonical_shift(orbit: Orbit) -> i64 {
    orbit.codim() / 2
}

/// Every label whose output under `mode` equals λ.
pub fn lv_preimages(lambda: &Weight, mode: LvMode) -> Vec<SimpleLabel> {
    let target = Coords::from(*lambda);
    let m = lambda.max_abs();
    let mut out = Vec::new();
    if *lambda == Weight::ZERO {
        out.push(SimpleLabel::Regular);
    }
    for a in -(3 * m + 3)..=(3 * m + 3) {
        let label = SimpleLabel::Subregular(a);
        if lv_backward(&label, mode) == target {
            out.push(label);
        }
    }
    let mu = *lambda + Weight::TWO_RHO;
    if mu.is_dominant() {
        out.push(SimpleLabel::Zero(mu));
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LabelOutput {
    pub label: SimpleLabel,
    pub output: Coords,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RoundTripFailure {
    pub label: SimpleLabel,
    pub output: Coords,
    pub forward: SimpleLabel,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Collision {
    pub weight: Weight,
    pub labels: Vec<SimpleLabel>,
}

/// Discrepancies found in the tabulated formulas, restricted to labels
/// whose outputs land in the box `|a|, |b|, |c| ≤ radius`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AuditReport {
    pub mode: LvMode,
    pub radius: i64,
    pub labels_audited: usize,
    pub off_lattice: Vec<LabelOutput>,
    pub non_dominant: Vec<LabelOutput>,
    pub round_trip_failures: Vec<RoundTripFailure>,
    pub collisions: Vec<Collision>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.off_lattice.is_empty()
            && self.non_dominant.is_empty()
            && self.round_trip_failures.is_empty()
            && self.collisions.is_empty()
    }
}

/// All labels whose backward output lies in the radius box.
pub fn audited_labels(radius: i64, mode: LvMode) -> Vec<SimpleLabel> {
    let mut labels = vec![SimpleLabel::Regular];
    labels.extend((-(3 * radius + 3)..=(3 * radius + 3)).map(SimpleLabel::Subregular));
    labels.extend(Weight::dominant_box(radius + 2).into_iter().map(SimpleLabel::Zero));
    labels.retain(|l| lv_backward(l, mode).max_abs() <= radius);
    labels
}

pub fn lv_audit(radius: i64, mode: LvMode, exec: Exec) -> AuditReport {
    let labels = audited_labels(radius, mode);
    let outputs: Vec<LabelOutput> =
        exec.map(&labels, |l| LabelOutput { label: *l, output: lv_backward(l, mode) });

    let off_lattice: Vec<LabelOutput> = outputs.iter().filter(|o| o.output.weight().is_none()).cloned().collect();
    let non_dominant: Vec<LabelOutput> = outputs
        .iter()
        .filter(|o| o.output.weight().is_some_and(|w| !w.is_dominant()))
        .cloned()
        .collect();
    let round_trip_failures = exec.filter_map(&outputs, |o| {
        let w = o.output.weight().filter(Weight::is_dominant)?;
        let forward = lv_forward(&w).expect("dominant");
        (forward != o.label).then_some(RoundTripFailure { label: o.label, output: o.output, forward })
    });

    let mut by_weight: BTreeMap<Weight, Vec<SimpleLabel>> = BTreeMap::new();
    for o in &outputs {
        if let Some(w) = o.output.weight() {
            by_weight.entry(w).or_default().push(o.label);
        }
    }
    let collisions = by_weight
        .into_iter()
        .filter(|(_, ls)| ls.len() > 1)
        .map(|(weight, labels)| Collision { weight, labels })
        .collect();

    AuditReport {
        mode,
        radius,
        labels_audited: labels.len(),
        off_lattice,
        non_dominant,
        round_trip_failures,
        collisions,
    }
}

/// Dominant weights in the radius box where `lv_weight(lv_forward(λ)) ≠ λ`.
/// Empty exactly when the row-priority forward map has the backward map
/// as a left inverse on the box.
pub fn forward_check(radius: i64, exec: Exec) -> Vec<Weight> {
    let weights = Weight::dominant_box(radius);
    exec.filter_map(&weights, |w| {
        let label = lv_forward(w).expect("dominant");
        (lv_weight(&label) != *w).then_some(*w)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(a: i64, b: i64, c: i64) -> Weight {
        Weight::new(a, b, c).unwrap()
    }

    #[test]
    fn backward_examples() {
        let v = LvMode::Verbatim;
        let c = LvMode::DualityCorrected;
        assert_eq!(lv_backward(&SimpleLabel::Regular, v), Coords([0, 0, 0]));
        assert_eq!(lv_backward(&SimpleLabel::Subregular(0), v), Coords([1, 0, -1]));
        assert_eq!(lv_backward(&SimpleLabel::Subregular(1), v), Coords([1, 1, -2]));
        assert_eq!(lv_backward(&SimpleLabel::Subregular(-1), v), Coords([0, -1, -1]));
        assert_eq!(lv_backward(&SimpleLabel::Subregular(-1), v).sum(), -2);
        assert_eq!(lv_backward(&SimpleLabel::Subregular(-1), c), Coords([2, -1, -1]));
        assert_eq!(lv_backward(&SimpleLabel::Zero(w(3, 0, -3)), v), Coords([1, 0, -1]));
    }

    #[test]
    fn verbatim_negative_rows_always_leave_the_lattice() {
        for a in -40..0 {
            assert_eq!(lv_backward(&SimpleLabel::Subregular(a), LvMode::Verbatim).sum(), -2);
        }
    }

    #[test]
    fn forward_examples() {
        assert_eq!(lv_forward(&Weight::ZERO).unwrap(), SimpleLabel::Regular);
        assert_eq!(lv_forward(&w(2, 2, -4)).unwrap(), SimpleLabel::Subregular(3));
        assert_eq!(lv_forward(&w(3, 1, -4)).unwrap(), SimpleLabel::Zero(w(5, 1, -6)));
        assert_eq!(lv_forward(&w(2, -1, -1)).unwrap(), SimpleLabel::Subregular(-1));
        assert!(lv_forward(&w(0, 1, -1)).is_err());
    }

    #[test]
    fn canonical_shifts() {
        assert_eq!(lv_canonical_shift(Orbit::Regular), 0);
        assert_eq!(lv_canonical_shift(Orbit::Subregular), 1);
        assert_eq!(lv_canonical_shift(Orbit::Zero), 3);
    }

    #[test]
    fn label_construction() {
        assert_eq!(SimpleLabel::new(Orbit::Subregular, Rep::TorusChar(-3)).unwrap(), SimpleLabel::Subregular(-3));
        assert!(matches!(SimpleLabel::new(Orbit::Regular, Rep::TorusChar(1)), Err(Error::LabelMismatch(_))));
        assert!(matches!(SimpleLabel::new(Orbit::Zero, Rep::HighestWeight(w(0, 1, -1))), Err(Error::NotDominant(_))));
    }

    #[test]
    fn audit_radius_five() {
        let verbatim = lv_audit(5, LvMode::Verbatim, Exec::default());
        assert!(verbatim
            .off_lattice
            .iter()
            .any(|o| o.label == SimpleLabel::Subregular(-1) && o.output == Coords([0, -1, -1])));
        assert!(verbatim.off_lattice.iter().all(|o| o.output.sum() == -2));

        let corrected = lv_audit(5, LvMode::DualityCorrected, Exec::default());
        assert!(corrected.off_lattice.is_empty());
        assert!(corrected.collisions.iter().any(|c| c.weight == w(1, 0, -1)
            && c.labels.contains(&SimpleLabel::Subregular(0))
            && c.labels.contains(&SimpleLabel::Zero(w(3, 0, -3)))));
        assert!(forward_check(5, Exec::default()).is_empty());
    }

    #[test]
    fn preimages() {
        assert_eq!(lv_preimages(&w(1, 0, -1), LvMode::DualityCorrected).len(), 2);
        assert_eq!(lv_preimages(&w(3, 1, -4), LvMode::DualityCorrected), vec![SimpleLabel::Zero(w(5, 1, -6))]);
        assert_eq!(lv_preimages(&Weight::ZERO, LvMode::DualityCorrected), vec![SimpleLabel::Regular, SimpleLabel::Zero(Weight::TWO_RHO)]);
    }

    proptest! {
        #[test]
        fn forward_then_backward_is_identity(a in -30i64..=30, b in -30i64..=30) {
            let lam = Weight::from_ab(a, b).dominant_rep();
            prop_assert_eq!(lv_weight(&lv_forward(&lam).unwrap()), lam);
        }

        #[test]
        fn sigma_equivariance(a in -30i64..=30, b in -30i64..=30) {
            let lam = Weight::from_ab(a, b).dominant_rep();
            let label = lv_forward(&lam).unwrap();
            if label.orbit() != Orbit::Zero {
                prop_assert_eq!(lv_forward(&lam.sigma()).unwrap(), label.sigma());
            }
        }
    }
}
