mod render;

use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nilcone::checks::run_all;
use nilcone::cohomology::{aj_euler_weyl, bott, character_in, forced_vanishing, h3_possible, weyl_dim};
use nilcone::ic_tables::{ic_table, possible_degrees, pushforward_table};
use nilcone::lv::{lv_audit, lv_backward, lv_canonical_shift, lv_forward, lv_preimages, Rep};
use nilcone::orbits::orbit_data;
use nilcone::tilting::{
    ext_table, irreducibility_audit, positivity_counterexample_data, subregular_lambdas, zero_orbit_lambdas,
};
use nilcone::{BottResult, Characteristic, Error, Exec, Level, LvMode, Orbit, SimpleLabel, Twist, Weight};

use render::{grid, opt, table_report, to_json, Format, Report};

#[derive(Parser, Debug)]
#[command(name = "nilcone", version, about = "Cohomology tables of simple perverse-coherent sheaves on the PGL3 nilpotent cone")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Config {
    /// Characteristic of the base field: 0 or a prime greater than 3.
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    /// Materialize infinite table rows up to this grading.
    #[arg(long, global = true, default_value_t = 40, allow_hyphen_values = true)]
    max_grading: i64,
    /// Reading of the negative subregular rows of the bijection table.
    #[arg(long, global = true, default_value = "corrected", value_parser = parse_mode)]
    lv_mode: LvMode,
    #[arg(long, global = true, value_enum, default_value_t = Format::Paper)]
    format: Format,
}

fn parse_mode(s: &str) -> Result<LvMode, Error> {
    s.parse()
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weight profiles and identities for the nilpotent orbits.
    Orbit {
        /// Partition, e.g. 3 or 2,1 (all orbits when omitted).
        #[arg(long)]
        partition: Option<Orbit>,
    },
    /// The Lusztig–Vogan bijection.
    Lv {
        #[command(subcommand)]
        command: LvCommand,
    },
    /// Borel–Weil–Bott for a line bundle on G/B.
    Bott {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Weight multiplicities of the irreducible module of a dominant weight.
    Character {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Graded Euler character of an Andersen–Jantzen sheaf.
    Aj {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
        /// Polynomial degree n (grading 2n).
        #[arg(long)]
        n: u32,
    },
    /// Cohomology table of the pushforward of O(∓α₀ + λ_a) from the subregular resolution.
    Pushforward {
        #[arg(long)]
        a: i64,
        #[arg(long, value_enum)]
        twist: TwistArg,
    },
    /// Cohomology table of a simple perverse-coherent sheaf.
    Ic {
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Ext groups between tilting modules.
    Tilting {
        #[command(subcommand)]
        command: TiltingCommand,
    },
    /// Bijection audit and irreducibility audit together.
    Audit {
        #[arg(long, default_value_t = 30)]
        radius: i64,
        #[arg(long, default_value_t = 20)]
        range: i64,
    },
    /// Run every invariant suite.
    Selfcheck {
        /// Run the sweeps on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand, Debug)]
enum LvCommand {
    /// Dominant weight to label.
    Forward {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Label to weight.
    Backward {
        #[command(flatten)]
        label: LabelArgs,
        /// Overrides --lv-mode.
        #[arg(long, value_parser = parse_mode)]
        mode: Option<LvMode>,
    },
    /// Check the tabulated formulas on a box.
    Audit {
        #[arg(long, default_value_t = 20)]
        radius: i64,
    },
}

#[derive(Subcommand, Debug)]
enum TiltingCommand {
    /// Ext table for an antidominant weight.
    Ext {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight,
        #[arg(long, default_value_t = 5)]
        level: i64,
        #[arg(long, default_value_t = 20)]
        kmax: i64,
    },
    /// Check that every Ext group is zero or irreducible.
    Audit {
        /// Subregular labels with |a| up to this bound.
        #[arg(long, default_value_t = 20)]
        range: i64,
        /// Zero-orbit labels in this box (defaults to --range).
        #[arg(long)]
        radius: Option<i64>,
        #[arg(long, default_value_t = 5)]
        level: i64,
        /// Defaults to 3*range + 6.
        #[arg(long)]
        kmax: Option<i64>,
    },
    /// Arithmetic of the positive-characteristic counterexample.
    Positivity {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Args, Debug)]
struct LabelArgs {
    /// Orbit partition: 3, 2,1 or 1,1,1.
    #[arg(long)]
    orbit: Orbit,
    /// Omitted for [3]; an integer a for [2,1]; a dominant weight for [1,1,1].
    #[arg(long, allow_hyphen_values = true)]
    rep: Option<String>,
}

impl LabelArgs {
    fn label(&self) -> Result<SimpleLabel, Error> {
        let rep = match (self.orbit, self.rep.as_deref()) {
            (Orbit::Regular, None | Some("trivial")) => Rep::Unit,
            (Orbit::Subregular, Some(s)) => {
                Rep::TorusChar(s.trim().parse().map_err(|_| Error::Parse(format!("bad torus character {s:?}")))?)
            }
            (Orbit::Zero, Some(s)) => Rep::HighestWeight(s.parse()?),
            (o, r) => return Err(Error::LabelMismatch(format!("orbit {o} with rep {r:?}"))),
        };
        SimpleLabel::new(self.orbit, rep)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TwistArg {
    Plus,
    Minus,
}

impl From<TwistArg> for Twist {
    fn from(t: TwistArg) -> Twist {
        match t {
            TwistArg::Plus => Twist::Plus,
            TwistArg::Minus => Twist::Minus,
        }
    }
}

fn orbit_report(orbits: &[Orbit]) -> Report {
    let mut items = Vec::new();
    let mut text = String::new();
    let mut records = Vec::new();
    let mut failed = false;
    for &o in orbits {
        let d = orbit_data(o);
        let checks = d.checks();
        failed |= !checks.all();
        let profile = |m: &std::collections::BTreeMap<i64, usize>| {
            m.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>()
        };
        items.push(json!({
            "partition": o.partition(),
            "dimC": d.dim_c,
            "g": profile(&d.g_weights),
            "gx": profile(&d.gx_weights),
            "checks": checks.named().iter().map(|(n, ok)| (n.to_string(), json!(ok))).collect::<serde_json::Map<_, _>>(),
        }));

        text.push_str(&format!("orbit {o}  dim {}  codim {}\n", d.dim_c, d.codim_c));
        let ks: Vec<i64> = d.g_weights.keys().copied().collect();
        let mut header = vec!["k".to_string()];
        header.extend(ks.iter().map(i64::to_string));
        let row = |name: &str, m: &std::collections::BTreeMap<i64, usize>| {
            let mut r = vec![name.to_string()];
            r.extend(ks.iter().map(|k| m.get(k).copied().unwrap_or(0).to_string()));
            r
        };
        text.push_str(&grid(&header, &[row("dim g(k)", &d.g_weights), row("dim g^x(k)", &d.gx_weights)]));
        for (n, ok) in checks.named() {
            text.push_str(&format!("  {n:<17} {}\n", if ok { "pass" } else { "FAIL" }));
            records.push(vec![o.to_string(), n.to_string(), ok.to_string()]);
        }
        text.push('\n');
    }
    Report::new(json!({ "orbits": items }), text)
        .csv(&["orbit", "check", "passed"], records)
        .with_findings(failed)
}

fn run(cli: Cli) -> Result<Report, Error> {
    let cfg = &cli.config;
    let ch = Characteristic::new(cfg.characteristic)?;
    let report = match cli.command {
        Command::Orbit { partition } => match partition {
            Some(o) => orbit_report(&[o]),
            None => orbit_report(&Orbit::ALL),
        },
        Command::Lv { command } => match command {
            LvCommand::Forward { weight } => {
                let label = lv_forward(&weight)?;
                let shift = lv_canonical_shift(label.orbit());
                let others: Vec<SimpleLabel> =
                    lv_preimages(&weight, cfg.lv_mode).into_iter().filter(|l| *l != label).collect();
                let mut text = format!("{weight} -> {label}  canonical shift <{shift}>\n");
                if !others.is_empty() {
                    let names: Vec<String> = others.iter().map(ToString::to_string).collect();
                    text.push_str(&format!("also the image of {} ({} reading)\n", names.join(", "), cfg.lv_mode));
                }
                Report::new(
                    json!({ "lambda": weight, "label": label, "canonical_shift": shift, "ambiguous_with": others }),
                    text,
                )
                .csv(&["lambda", "label", "canonical_shift"], vec![vec![weight.to_string(), label.to_string(), shift.to_string()]])
            }
            LvCommand::Backward { label, mode } => {
                let label = label.label()?;
                let mode = mode.unwrap_or(cfg.lv_mode);
                let out = lv_backward(&label, mode);
                let w = out.weight();
                let dominant = w.is_some_and(|w| w.is_dominant());
                let mut text = format!("{label} -> ({out})  [{mode}]\n");
                if w.is_none() {
                    text.push_str(&format!("off the lattice: coordinate sum {}\n", out.sum()));
                } else if !dominant {
                    text.push_str("not dominant\n");
                }
                Report::new(
                    json!({ "label": label, "mode": mode, "weight": out, "on_lattice": w.is_some(), "dominant": dominant }),
                    text,
                )
                .csv(&["label", "mode", "weight", "on_lattice", "dominant"], vec![vec![
                    label.to_string(),
                    mode.to_string(),
                    out.to_string(),
                    w.is_some().to_string(),
                    dominant.to_string(),
                ]])
            }
            LvCommand::Audit { radius } => lv_audit_report(radius, cfg.lv_mode),
        },
        Command::Bott { weight } => {
            let degrees = possible_degrees(&weight);
            let result = ch.is_zero().then(|| bott(&weight));
            let mut text = format!("lambda = ({weight})\npossible degrees {degrees:?}\n");
            text.push_str(&format!("forced vanishing {}  H^3 possible {}\n", forced_vanishing(&weight), h3_possible(&weight)));
            let (deg, hw, dim) = match result {
                Some(BottResult::At { degree, highest_weight }) => {
                    let dim = weyl_dim(&highest_weight)?;
                    text.push_str(&format!("H^{degree} = L({highest_weight}), dim {dim}; all other degrees vanish\n"));
                    (Some(degree), Some(highest_weight), Some(dim))
                }
                Some(BottResult::Zero) => {
                    text.push_str("H^* = 0\n");
                    (None, None, Some(0))
                }
                None => {
                    text.push_str(&format!("char {ch}: cohomology not determined beyond the degree rules\n"));
                    (None, None, None)
                }
            };
            Report::new(
                json!({
                    "lambda": weight,
                    "char": ch,
                    "possible_degrees": degrees,
                    "forced_vanishing": forced_vanishing(&weight),
                    "h3_possible": h3_possible(&weight),
                    "bott": result,
                }),
                text,
            )
            .csv(&["lambda", "degree", "highest_weight", "dim"], vec![vec![
                weight.to_string(),
                opt(&deg),
                opt(&hw),
                opt(&dim),
            ]])
        }
        Command::Character { weight } => {
            let c = character_in(ch, &weight)?;
            let rows: Vec<Vec<String>> = c.iter().map(|(w, m)| vec![w.to_string(), m.to_string()]).collect();
            let text = format!(
                "character of L({weight}), dim {}\n{}",
                c.dim(),
                grid(&["weight".into(), "mult".into()], &rows)
            );
            Report::new(json!({ "highest_weight": weight, "dim": c.dim(), "character": c }), text)
                .csv(&["weight", "mult"], rows)
        }
        Command::Aj { weight, n } => {
            let s = aj_euler_weyl(&weight, n);
            let rows: Vec<Vec<String>> = s.iter().map(|(w, k)| vec![w.to_string(), k.to_string()]).collect();
            let terms: Vec<_> = s.iter().map(|(w, k)| json!({ "highest_weight": w, "coeff": k })).collect();
            let text = format!(
                "Euler character of A_({weight}) in grading {}, dim {}\n{}",
                2 * n,
                s.dim(),
                grid(&["highest weight".into(), "coeff".into()], &rows)
            );
            Report::new(json!({ "lambda": weight, "n": n, "dim": s.dim(), "terms": terms }), text)
                .csv(&["highest_weight", "coeff"], rows)
        }
        Command::Pushforward { a, twist } => {
            table_report(&pushforward_table(a, twist.into(), ch, cfg.max_grading)?.evaluate())
        }
        Command::Ic { label } => table_report(&ic_table(&label.label()?, ch, cfg.max_grading).evaluate()),
        Command::Tilting { command } => match command {
            TiltingCommand::Ext { lambda, level, kmax } => ext_report(&lambda, Level::new(level)?, kmax, ch)?,
            TiltingCommand::Audit { range, radius, level, kmax } => {
                tilting_audit_report(range, radius.unwrap_or(range), Level::new(level)?, kmax.unwrap_or(3 * range + 6))?
            }
            TiltingCommand::Positivity { p } => {
                let d = positivity_counterexample_data(p)?;
                let text = format!(
                    "p = {p}: a = {}, n = {}, weight ({}), grading {}, shift 3a-2n = {}\n",
                    d.a, d.n, d.weight, d.grading, d.shift
                );
                Report::new(json!({ "p": p, "data": d }), text).csv(
                    &["p", "a", "n", "weight", "grading", "shift"],
                    vec![vec![p.to_string(), d.a.to_string(), d.n.to_string(), d.weight.to_string(), d.grading.to_string(), d.shift.to_string()]],
                )
            }
        },
        Command::Audit { radius, range } => {
            let lv = lv_audit_report(radius, cfg.lv_mode);
            let tilt = tilting_audit_report(range, range, Level::new(5)?, 3 * range + 6)?;
            let findings = lv.findings || tilt.findings;
            let mut records = lv.records.clone();
            records.extend(tilt.records.iter().cloned());
            Report::new(json!({ "lv": lv.json, "tilting": tilt.json }), format!("{}\n{}", lv.text, tilt.text))
                .csv(&lv.header, records)
                .with_findings(findings)
        }
        Command::Selfcheck { sequential } => {
            let exec = if sequential { Exec::Sequential } else { Exec::default() };
            let results = run_all(exec);
            let failed = results.iter().any(|r| !r.passed);
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| vec![r.name.to_string(), if r.passed { "pass" } else { "FAIL" }.to_string(), r.detail.clone()])
                .collect();
            let text = grid(&["suite".into(), "result".into(), "detail".into()], &rows);
            Report::new(json!({ "suites": results }), text).csv(&["suite", "result", "detail"], rows).with_findings(failed)
        }
    };
    Ok(report)
}

fn lv_audit_report(radius: i64, mode: LvMode) -> Report {
    let r = lv_audit(radius, mode, Exec::default());
    let mut text = format!("bijection audit, {mode} reading, radius {radius}: {} labels\n", r.labels_audited);
    let mut records = Vec::new();
    text.push_str(&format!("off lattice: {}\n", r.off_lattice.len()));
    for o in &r.off_lattice {
        text.push_str(&format!("  {} -> ({})\n", o.label, o.output));
        records.push(vec!["off_lattice".into(), o.label.to_string(), o.output.to_string(), String::new()]);
    }
    text.push_str(&format!("not dominant: {}\n", r.non_dominant.len()));
    for o in &r.non_dominant {
        text.push_str(&format!("  {} -> ({})\n", o.label, o.output));
        records.push(vec!["non_dominant".into(), o.label.to_string(), o.output.to_string(), String::new()]);
    }
    text.push_str(&format!("round-trip failures: {}\n", r.round_trip_failures.len()));
    for f in &r.round_trip_failures {
        text.push_str(&format!("  {} -> ({}) -> {}\n", f.label, f.output, f.forward));
        records.push(vec!["round_trip".into(), f.label.to_string(), f.output.to_string(), f.forward.to_string()]);
    }
    text.push_str(&format!("collisions: {}\n", r.collisions.len()));
    for c in &r.collisions {
        let names: Vec<String> = c.labels.iter().map(ToString::to_string).collect();
        text.push_str(&format!("  ({}) <- {}\n", c.weight, names.join(", ")));
        records.push(vec!["collision".into(), names.join(" "), c.weight.to_string(), String::new()]);
    }
    Report::new(to_json(&r), text)
        .csv(&["finding", "label", "weight", "forward"], records)
        .with_findings(!r.is_clean())
}

fn tilting_audit_report(range: i64, radius: i64, level: Level, kmax: i64) -> Result<Report, Error> {
    let mut lambdas = subregular_lambdas(range);
    lambdas.extend(zero_orbit_lambdas(radius));
    let r = irreducibility_audit(&lambdas, level, kmax, Exec::default())?;
    let mut text = format!("irreducibility audit: {} weights, k <= {kmax}, {} failures\n", r.checked, r.failures.len());
    let mut records = Vec::new();
    for f in &r.failures {
        text.push_str(&format!("  ({}) Ext^{}: {} cells, {} constituents\n", f.lambda, f.k, f.contributions, f.constituents));
        records.push(vec!["irreducibility".into(), f.lambda.to_string(), f.k.to_string(), f.constituents.to_string()]);
    }
    Ok(Report::new(to_json(&r), text)
        .csv(&["finding", "lambda", "k", "constituents"], records)
        .with_findings(!r.passed()))
}

fn ext_report(lambda: &Weight, level: Level, kmax: i64, ch: Characteristic) -> Result<Report, Error> {
    let t = ext_table(lambda, level, kmax, ch)?;
    let mut text = format!(
        "Ext^k between the tilting module of highest weight ({}) and the trivial one\nlambda = ({lambda}), level {}, char {ch}, label {}\n",
        t.highest_weight,
        level.get(),
        t.label
    );
    if t.is_ambiguous() {
        let names: Vec<String> = t.ambiguous_with.iter().map(ToString::to_string).collect();
        text.push_str(&format!("ambiguous: the bijection table also sends {} here\n", names.join(", ")));
    }
    let rows: Vec<Vec<String>> = (0..=kmax)
        .map(|k| {
            let hw = t
                .get(k)
                .and_then(|e| e.highest_weights.as_ref())
                .map(|v| v.iter().map(|w| format!("L({w})")).collect::<Vec<_>>().join(" + "))
                .unwrap_or_default();
            vec![k.to_string(), opt(&t.dim(k)), hw]
        })
        .collect();
    text.push_str(&grid(&["k".into(), "dim".into(), "module".into()], &rows));
    Ok(Report::new(to_json(&t), text).csv(&["k", "dim", "module"], rows))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.config.format;
    match run(cli) {
        Ok(report) => {
            if let Err(e) = report.write(format, &mut io::stdout().lock()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if report.findings { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
