//! Invariant suites run by `nilcone selfcheck`.

use serde::Serialize;

use crate::cohomology::{
    aj_euler, bott, character, euler_char, forced_vanishing, h3_possible, weyl_dim, BottResult, Character,
    Characteristic,
};
use crate::exec::Exec;
use crate::ic_tables::{
    char_zero_row2_window, euler_series_duality_check, ic_table, pushforward_euler_series, pushforward_table,
    sigma_table, truncate_shift_check, Twist,
};
use crate::lv::{forward_check, lv_audit, LvMode, SimpleLabel};
use crate::orbits::{orbit_data, Orbit};
use crate::series::nilcone_hilbert_series;
use crate::tilting::{ext_table, irreducibility_audit, positivity_counterexample_data, subregular_lambdas, zero_orbit_lambdas};
use crate::weights::{Level, Weight};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn result(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name, passed, detail: detail.into() }
}

fn signed_bott(lambda: &Weight) -> Character {
    match bott(lambda) {
        BottResult::Zero => Character::zero(),
        BottResult::At { degree, highest_weight } => {
            character(&highest_weight).expect("dominant").scaled(if degree % 2 == 0 { 1 } else { -1 })
        }
    }
}

pub fn orbit_identities() -> CheckResult {
    let failed: Vec<String> = Orbit::ALL
        .iter()
        .map(|o| (o, orbit_data(*o).checks()))
        .filter(|(_, c)| !c.all())
        .map(|(o, c)| format!("{o}: {c:?}"))
        .collect();
    result("orbit_identities", failed.is_empty(), failed.join("; "))
}

pub fn euler_matches_bott(radius: i64, exec: Exec) -> CheckResult {
    let weights = Weight::lattice_box(radius);
    let bad = exec.filter_map(&weights, |l| (euler_char(l) != signed_bott(l)).then_some(*l));
    result("euler_matches_bott", bad.is_empty(), format!("{} weights, {} mismatches", weights.len(), bad.len()))
}

pub fn vanishing_rules(radius: i64, exec: Exec) -> CheckResult {
    let weights = Weight::lattice_box(radius);
    let ok = exec.all(&weights, |l| {
        (!forced_vanishing(l) || bott(l) == BottResult::Zero) && h3_possible(l) == (bott(l).degree() == Some(3))
    });
    result("vanishing_rules", ok, format!("{} weights", weights.len()))
}

pub fn characters_consistent(span: i64, exec: Exec) -> CheckResult {
    let mus: Vec<Weight> = Weight::dominant_box(span).into_iter().filter(|m| m.a() - m.c() <= span).collect();
    let ok = exec.all(&mus, |m| {
        let ch = character(m).expect("dominant");
        ch.is_genuine() && ch.is_w_invariant() && ch.dim() as u64 == weyl_dim(m).expect("dominant")
    });
    result("characters_consistent", ok, format!("{} dominant weights", mus.len()))
}

pub fn hilbert_series(max_degree: i64) -> CheckResult {
    let expected = nilcone_hilbert_series().expand(max_degree).expect("power series");
    let ok = (0..=max_degree / 2).all(|n| aj_euler(&Weight::ZERO, n as u32).dim() as i128 == expected.coeff(2 * n));
    result("hilbert_series", ok, format!("through t^{max_degree}"))
}

pub fn table_assembly(max_a: i64) -> CheckResult {
    let z = Characteristic::Zero;
    let ok = (0..=max_a).all(|a| {
        truncate_shift_check(a, z, 40)
            && sigma_table(&ic_table(&SimpleLabel::Subregular(a), z, 40)).cells
                == ic_table(&SimpleLabel::Subregular(-a), z, 40).cells
    });
    result("table_assembly", ok, format!("0 <= a <= {max_a}"))
}

pub fn char_zero_windows(max_a: i64) -> CheckResult {
    let ok = (0..=max_a).all(|a| {
        [a, -a].iter().all(|&rep| {
            let t = ic_table(&SimpleLabel::Subregular(rep), Characteristic::Zero, 3 * a + 10).evaluate();
            let row2: Vec<i64> = t.row(2).map(|e| e.m).collect();
            row2 == char_zero_row2_window(a) && t.entries.iter().all(|e| e.evaluated.dim.unwrap_or(0) > 0)
        })
    });
    result("char_zero_windows", ok, format!("0 <= a <= {max_a}"))
}

pub fn duality_series(max_a: i64, max_degree: i64) -> CheckResult {
    let ok = (0..=max_a).all(|a| {
        if !euler_series_duality_check(a) {
            return false;
        }
        [Twist::Plus, Twist::Minus].iter().all(|&tw| {
            let series = pushforward_euler_series(a, tw).expand(max_degree).expect("power series");
            let table = pushforward_table(a, tw, Characteristic::Zero, max_degree).expect("a >= 0").evaluate();
            (0..=max_degree / 2).all(|n| {
                let euler: i128 = table
                    .entries
                    .iter()
                    .filter(|e| e.m == 2 * n)
                    .map(|e| if e.i % 2 == 0 { 1 } else { -1 } * e.evaluated.dim.expect("char 0") as i128)
                    .sum();
                euler == series.coeff(2 * n)
            })
        })
    });
    result("duality_series", ok, format!("0 <= a <= {max_a}, through t^{max_degree}"))
}

pub fn tilting_tables(exec: Exec) -> CheckResult {
    let z = Characteristic::Zero;
    let five = Level::new(5).expect("valid");
    let trivial = ext_table(&Weight::ZERO, five, 4, z).expect("antidominant");
    let trivial_ok = (0..=4).map(|k| trivial.dim(k).unwrap_or(0)).collect::<Vec<_>>() == [1, 0, 8, 0, 35];
    let rho = ext_table(&-Weight::RHO, five, 20, z).expect("antidominant");
    let rho_ok = (0..=10).all(|r| rho.dim(2 * r) == Some(((r + 1) * (r + 1) * (r + 1)) as u64) && rho.dim(2 * r + 1) == Some(0));
    let mut lambdas = subregular_lambdas(20);
    lambdas.extend(zero_orbit_lambdas(20));
    let audit = irreducibility_audit(&lambdas, five, 66, exec).expect("antidominant inputs");
    result(
        "tilting_tables",
        trivial_ok && rho_ok && audit.passed(),
        format!("{} weights audited, {} failures", audit.checked, audit.failures.len()),
    )
}

pub fn lv_consistency(radius: i64, exec: Exec) -> CheckResult {
    let forward_bad = forward_check(radius, exec);
    let corrected = lv_audit(radius, LvMode::DualityCorrected, exec);
    let verbatim = lv_audit(radius, LvMode::Verbatim, exec);
    let ok = forward_bad.is_empty()
        && corrected.off_lattice.is_empty()
        && verbatim.off_lattice.iter().all(|o| o.output.sum() == -2);
    result(
        "lv_consistency",
        ok,
        format!(
            "forward failures {}, verbatim off-lattice {}, collisions {}",
            forward_bad.len(),
            verbatim.off_lattice.len(),
            verbatim.collisions.len()
        ),
    )
}

pub fn positivity() -> CheckResult {
    let ok = [5u64, 7, 11, 13].iter().all(|&p| {
        positivity_counterexample_data(p).is_ok_and(|d| {
            let t = ic_table(&SimpleLabel::Subregular(d.a), Characteristic::Prime(p), 0);
            d.shift > 0 && !t.symbols_at(2, d.grading).is_empty()
        })
    });
    result("positivity", ok, "p in {5, 7, 11, 13}")
}

pub fn run_all(exec: Exec) -> Vec<CheckResult> {
    vec![
        orbit_identities(),
        euler_matches_bott(30, exec),
        vanishing_rules(30, exec),
        characters_consistent(12, exec),
        hilbert_series(40),
        table_assembly(10),
        char_zero_windows(10),
        duality_series(5, 40),
        tilting_tables(exec),
        lv_consistency(30, exec),
        positivity(),
    ]
}
