//! Cohomology of tilting modules for the quantum group at an odd root of
//! unity, read off the cohomology-sheaf tables via
//! `Ext^k(C, T(w_λ•0)) = ⊕_i H^i(C_{w₀λ})_{k−i}`.

use serde::Serialize;

use crate::cohomology::Characteristic;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ic_tables::{ic_table, Evaluation, GradedTable, ModuleSymbol};
use crate::lv::{lv_forward, lv_preimages, lv_weight, LvMode, SimpleLabel};
use crate::orbits::Orbit;
use crate::weights::{tilting_highest_weight, Level, Weight};

/// The simple perverse-coherent sheaf `C_λ` for dominant λ: its label and
/// its cohomology table (canonical grading shift included).
pub fn simple_pc_object(lambda: &Weight, ch: Characteristic, max_grading: i64) -> Result<(SimpleLabel, GradedTable)> {
    let label = lv_forward(lambda)?;
    Ok((label, ic_table(&label, ch, max_grading)))
}

/// One table cell feeding an Ext group.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Contribution {
    pub i: u8,
    pub m: i64,
    pub symbols: Vec<ModuleSymbol>,
    pub evaluated: Evaluation,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExtEntry {
    pub k: i64,
    pub dim: Option<u64>,
    /// Highest weights of the irreducible constituents, when known.
    pub highest_weights: Option<Vec<Weight>>,
    pub contributions: Vec<Contribution>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExtTable {
    pub lambda: Weight,
    pub level: Level,
    pub highest_weight: Weight,
    pub dominant: Weight,
    pub label: SimpleLabel,
    /// Other labels the tabulated bijection also sends to `w₀λ`.
    pub ambiguous_with: Vec<SimpleLabel>,
    #[serde(rename = "char")]
    pub characteristic: Characteristic,
    pub kmax: i64,
    /// Nonzero groups only, in increasing k.
    pub ext: Vec<ExtEntry>,
    /// Table cells with `i + m < 0`. These are dropped; in characteristic
    /// zero none is ever nonzero.
    pub negative_degree_cells: usize,
}

impl ExtTable {
    pub fn is_ambiguous(&self) -> bool {
        !self.ambiguous_with.is_empty()
    }

    pub fn get(&self, k: i64) -> Option<&ExtEntry> {
        self.ext.iter().find(|e| e.k == k)
    }

    pub fn dim(&self, k: i64) -> Option<u64> {
        self.get(k).map_or(Some(0), |e| e.dim)
    }
}

fn sum_evaluations<'a>(items: impl Iterator<Item = &'a Evaluation>) -> (Option<u64>, Option<Vec<Weight>>) {
    let mut dim = Some(0u64);
    let mut hws = Some(Vec::new());
    for e in items {
        dim = dim.zip(e.dim).map(|(a, b)| a + b);
        hws = hws.zip(e.constituents.clone()).map(|(mut a, b)| {
            a.extend(b);
            a
        });
    }
    (dim, hws)
}

pub fn ext_table(lambda: &Weight, level: Level, kmax: i64, ch: Characteristic) -> Result<ExtTable> {
    let highest_weight = tilting_highest_weight(lambda, level)?;
    let dominant = lambda.reversed();
    let (label, table) = simple_pc_object(&dominant, ch, kmax + 3)?;
    let evaluated = table.evaluate();

    let negative_degree_cells = evaluated.entries.iter().filter(|e| e.i as i64 + e.m < 0).count();
    let mut ext = Vec::new();
    for k in 0..=kmax {
        let contributions: Vec<Contribution> = evaluated
            .entries
            .iter()
            .filter(|e| e.i as i64 + e.m == k)
            .map(|e| Contribution { i: e.i, m: e.m, symbols: e.symbols.clone(), evaluated: e.evaluated.clone() })
            .collect();
        if contributions.is_empty() {
            continue;
        }
        let (dim, highest_weights) = sum_evaluations(contributions.iter().map(|c| &c.evaluated));
        ext.push(ExtEntry { k, dim, highest_weights, contributions });
    }
    let ambiguous_with =
        lv_preimages(&dominant, LvMode::DualityCorrected).into_iter().filter(|l| *l != label).collect();
    Ok(ExtTable {
        lambda: *lambda,
        level,
        highest_weight,
        dominant,
        label,
        ambiguous_with,
        characteristic: ch,
        kmax,
        ext,
        negative_degree_cells,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IrreducibilityFailure {
    pub lambda: Weight,
    pub k: i64,
    pub contributions: usize,
    pub constituents: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IrreducibilityReport {
    pub checked: usize,
    pub failures: Vec<IrreducibilityFailure>,
}

impl IrreducibilityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Antidominant λ with `w₀λ` labelled `([2,1], k_a)`, `|a| ≤ range`.
pub fn subregular_lambdas(range: i64) -> Vec<Weight> {
    (-range..=range).map(|a| lv_weight(&SimpleLabel::Subregular(a)).reversed()).collect()
}

/// Antidominant λ in the radius box with `w₀λ` labelled by the zero orbit.
pub fn zero_orbit_lambdas(radius: i64) -> Vec<Weight> {
    Weight::dominant_box(radius)
        .into_iter()
        .filter(|mu| lv_forward(mu).map(|l| l.orbit() == Orbit::Zero).unwrap_or(false))
        .map(|mu| mu.reversed())
        .collect()
}

/// Every nonzero `Ext^k`, `k ≤ kmax`, comes from a single table cell and
/// is a single irreducible. `λ = 0` is skipped: its tilting module is
/// trivial.
pub fn irreducibility_audit(lambdas: &[Weight], level: Level, kmax: i64, exec: Exec) -> Result<IrreducibilityReport> {
    let targets: Vec<Weight> = lambdas.iter().copied().filter(|l| *l != Weight::ZERO).collect();
    let tables: Vec<Result<ExtTable>> = exec.map(&targets, |l| ext_table(l, level, kmax, Characteristic::Zero));
    let mut failures = Vec::new();
    for t in tables {
        let t = t?;
        for e in &t.ext {
            let constituents = e.highest_weights.as_ref().map_or(0, Vec::len);
            if e.contributions.len() != 1 || constituents != 1 {
                failures.push(IrreducibilityFailure {
                    lambda: t.lambda,
                    k: e.k,
                    contributions: e.contributions.len(),
                    constituents,
                });
            }
        }
    }
    Ok(IrreducibilityReport { checked: targets.len(), failures })
}

/// Degree bookkeeping for the failure of positive grading in
/// characteristic p.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PositivityData {
    pub a: i64,
    pub n: i64,
    /// `(n−1−2a, a, −n+1+a) = λ_a − (3a+1−n)α₀`.
    pub weight: Weight,
    /// Grading of `H¹(weight)` in the subregular table: `2n − 3a − 3`.
    pub grading: i64,
    /// `3a − 2n`, which must be positive.
    pub shift: i64,
}

pub fn positivity_counterexample_data(p: u64) -> Result<PositivityData> {
    Characteristic::new(p)?;
    if p == 0 {
        return Err(Error::InvalidCharacteristic(p));
    }
    let a = p as i64;
    let n = a + 1;
    let weight = Weight::new(n - 1 - 2 * a, a, -n + 1 + a)?;
    let data = PositivityData { a, n, weight, grading: 2 * n - 3 * a - 3, shift: 3 * a - 2 * n };
    assert!(2 * n < 3 * a && data.shift > 0);
    Ok(data)
}
