//! Command-line wiring: JSON in, CSV/JSON out.
//!
//! Measures and matrices arrive as JSON, inline or by file path (an
//! argument starting with `{` or `[` is treated as inline). Tabular output
//! is CSV with `.` decimal separators and up to 12 significant digits, so
//! runs are reproducible byte-for-byte given identical inputs, flags, and
//! seed. The `SIGNED_ENTROPY_SEED` environment variable overrides `--seed`.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{alpha_sweep, majorizes, negativity_witness};
use crate::axioms::{
    check_calibration, check_extensivity, check_mean_value, check_singleton_continuity,
    counterexample_report,
};
use crate::dynamics::{entropy_trajectory, evolve, TransitionRateMatrix};
use crate::entropy::{renormalized_entropy, signed_renyi, EntropyKind};
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::phasespace::{
    build_liouvillian, build_phase_point_basis, evolve_wigner, quadratic_moment,
    wigner_from_density, DensityMatrix,
};

#[derive(Debug, Parser)]
#[command(
    name = "signed-entropy",
    version,
    about = "Entropy of signed measures: witnesses, majorization, dynamics, discrete Wigner evolution"
)]
pub struct RunConfig {
    /// Seed for randomized subcommands (overridden by SIGNED_ENTROPY_SEED).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    SignedRenyi,
    SignedShannon,
    Renormalized,
    ClassicalRenyi,
    ClassicalShannon,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an entropy functional on a measure (bits, 12 significant digits)
    Entropy {
        /// Measure JSON ({"values": [..]}) inline or a file path
        measure: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Rényi order; required by the renyi kinds, ignored otherwise
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Search for an order alpha > 1 certifying a negative component
    Witness {
        measure: String,
    },
    /// Report whether the first measure majorizes the second
    Majorize {
        q: String,
        p: String,
    },
    /// Sweep signed Rényi entropy over a grid of inverse orders (CSV)
    Sweep {
        measure: String,
        /// First inverse order 1/alpha
        #[arg(long)]
        from: f64,
        /// Last inverse order (inclusive up to grid rounding)
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
    },
    /// Integrate the master equation and emit state + entropy columns (CSV)
    Evolve {
        /// Transition-rate matrix as JSON rows [[..], ..] inline or a path
        #[arg(long)]
        rates: String,
        /// Initial measure JSON
        #[arg(long)]
        initial: String,
        #[arg(long, default_value_t = 10.0)]
        t_end: f64,
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
        /// Rényi orders for the entropy columns, comma separated
        #[arg(long, value_delimiter = ',', default_value = "2")]
        alphas: Vec<f64>,
    },
    /// Evolve a discrete Wigner function under a Hamiltonian (CSV)
    Wigner {
        /// Odd prime Hilbert-space dimension (3, 5, 7, ..)
        #[arg(long)]
        dim: usize,
        /// Hamiltonian as JSON rows of [re, im] pairs, inline or a path
        #[arg(long)]
        hamiltonian: String,
        /// "mixed", "basis0", or a density matrix as JSON rows of [re, im]
        #[arg(long, default_value = "mixed")]
        state: String,
        #[arg(long, default_value_t = 1.0)]
        t_end: f64,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
    },
    /// Run the axiom property batches and kernel counterexample checks
    Axioms {
        /// Cases per randomized batch
        #[arg(long, default_value_t = 1000)]
        batch: usize,
        /// Rényi orders used by the batches, comma separated
        #[arg(long, value_delimiter = ',', default_value = "0.5,2,3")]
        alpha_set: Vec<f64>,
    },
}

/// Entry point for the binary: parse, dispatch, map errors to exit codes
/// (0 success, 1 validation, 2 numeric-domain failure).
pub fn run() -> i32 {
    let config = match RunConfig::try_parse() {
        Ok(config) => config,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let result = match &config.output {
        Some(path) => match fs::File::create(path) {
            Ok(file) => {
                let mut writer = io::BufWriter::new(file);
                dispatch(&config, &mut writer)
            }
            Err(err) => Err(Error::InvalidInput(format!(
                "cannot create {}: {err}",
                path.display()
            ))),
        },
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            dispatch(&config, &mut lock)
        }
    };
    match result {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NonpositiveLogArgument(_) | Error::WitnessFloor { .. } | Error::CheckFailed(_) => 2,
        _ => 1,
    }
}

/// Routes a parsed configuration to its subcommand handler.
pub fn dispatch<W: Write>(config: &RunConfig, out: &mut W) -> Result<()> {
    match &config.command {
        Command::Entropy {
            measure,
            kind,
            alpha,
        } => cmd_entropy(measure, *kind, *alpha, out),
        Command::Witness { measure } => cmd_witness(measure, out),
        Command::Majorize { q, p } => cmd_majorize(q, p, out),
        Command::Sweep {
            measure,
            from,
            to,
            step,
        } => cmd_sweep(measure, *from, *to, *step, out),
        Command::Evolve {
            rates,
            initial,
            t_end,
            dt,
            alphas,
        } => cmd_evolve(rates, initial, *t_end, *dt, alphas, out),
        Command::Wigner {
            dim,
            hamiltonian,
            state,
            t_end,
            dt,
        } => cmd_wigner(*dim, hamiltonian, state, *t_end, *dt, out),
        Command::Axioms { batch, alpha_set } => {
            cmd_axioms(*batch, effective_seed(config)?, alpha_set, out)
        }
    }
}

fn effective_seed(config: &RunConfig) -> Result<u64> {
    match std::env::var("SIGNED_ENTROPY_SEED") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Error::InvalidInput(format!("SIGNED_ENTROPY_SEED is not a u64: {text:?}"))
        }),
        Err(_) => Ok(config.seed),
    }
}

fn read_json_arg(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|err| Error::InvalidInput(format!("cannot read {arg}: {err}")))
}

fn parse_measure(arg: &str) -> Result<SignedMeasure> {
    let text = read_json_arg(arg)?;
    serde_json::from_str(&text)
        .map_err(|err| Error::InvalidInput(format!("measure JSON: {err}")))
}

fn parse_rate_matrix(arg: &str) -> Result<TransitionRateMatrix> {
    let text = read_json_arg(arg)?;
    let rows: Vec<Vec<f64>> = serde_json::from_str(&text)
        .map_err(|err| Error::InvalidInput(format!("rate-matrix JSON: {err}")))?;
    TransitionRateMatrix::from_rows(&rows)
}

fn parse_complex_matrix(arg: &str, dim: usize, what: &str) -> Result<DMatrix<Complex64>> {
    let text = read_json_arg(arg)?;
    let rows: Vec<Vec<[f64; 2]>> = serde_json::from_str(&text)
        .map_err(|err| Error::InvalidInput(format!("{what} JSON: {err}")))?;
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::InvalidInput(format!(
            "{what} must be a {dim}x{dim} matrix of [re, im] pairs"
        )));
    }
    let flat: Vec<Complex64> = rows
        .iter()
        .flatten()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    Ok(DMatrix::from_row_slice(dim, dim, &flat))
}

/// Renders up to `digits` significant digits in plain decimal notation,
/// trimming trailing zeros, so `parse(format(x))` recovers `x` to that many
/// digits and identical runs emit identical bytes.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let rendered = format!("{:.*}", decimals, x);
    if rendered.contains('.') {
        rendered
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        rendered
    }
}

/// Writes one header row and one row per record, RFC-4180 style with `\n`
/// line endings and 12-significant-digit values.
pub fn emit_csv<W: Write>(out: &mut W, header: &[String], rows: &[Vec<f64>]) -> Result<()> {
    let mut text = String::new();
    text.push_str(&header.join(","));
    text.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        let cells: Vec<String> = row.iter().map(|&x| format_significant(x, 12)).collect();
        text.push_str(&cells.join(","));
        text.push('\n');
    }
    out.write_all(text.as_bytes())
        .map_err(|err| Error::InvalidInput(format!("output write failed: {err}")))
}

fn write_line<W: Write>(out: &mut W, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(|err| Error::InvalidInput(format!("output write failed: {err}")))
}

fn cmd_entropy<W: Write>(
    measure: &str,
    kind: KindArg,
    alpha: Option<f64>,
    out: &mut W,
) -> Result<()> {
    let p = parse_measure(measure)?;
    let need_alpha = || {
        alpha.ok_or(Error::BadAlpha {
            alpha: f64::NAN,
            reason: "this kind requires --alpha",
        })
    };
    let kind = match kind {
        KindArg::SignedRenyi => EntropyKind::SignedRenyi { alpha: need_alpha()? },
        KindArg::ClassicalRenyi => EntropyKind::ClassicalRenyi { alpha: need_alpha()? },
        KindArg::SignedShannon => EntropyKind::SignedShannon,
        KindArg::Renormalized => EntropyKind::Renormalized,
        KindArg::ClassicalShannon => EntropyKind::ClassicalShannon,
    };
    let value = kind.evaluate(&p)?;
    write_line(out, &format_significant(value.bits, 12))
}

fn cmd_witness<W: Write>(measure: &str, out: &mut W) -> Result<()> {
    let p = parse_measure(measure)?;
    let witness = negativity_witness(&p)?;
    let json = serde_json::to_string(&witness)
        .map_err(|err| Error::InvalidInput(format!("serialization: {err}")))?;
    write_line(out, &json)
}

fn cmd_majorize<W: Write>(q: &str, p: &str, out: &mut W) -> Result<()> {
    let verdict = majorizes(&parse_measure(q)?, &parse_measure(p)?)?;
    write_line(out, if verdict { "true" } else { "false" })
}

fn inv_alpha_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step.is_finite()) || !from.is_finite() || !to.is_finite() || to < from {
        return Err(Error::InvalidInput(format!(
            "need finite from <= to and step > 0, got from = {from}, to = {to}, step = {step}"
        )));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| from + k as f64 * step).collect())
}

fn cmd_sweep<W: Write>(measure: &str, from: f64, to: f64, step: f64, out: &mut W) -> Result<()> {
    let p = parse_measure(measure)?;
    let curve = alpha_sweep(&p, &inv_alpha_grid(from, to, step)?)?;
    let header = vec!["inv_alpha".to_string(), "entropy_bits".to_string()];
    let rows: Vec<Vec<f64>> = curve
        .points
        .iter()
        .map(|pt| vec![pt.inv_alpha, pt.entropy_bits])
        .collect();
    emit_csv(out, &header, &rows)
}

fn cmd_evolve<W: Write>(
    rates: &str,
    initial: &str,
    t_end: f64,
    dt: f64,
    alphas: &[f64],
    out: &mut W,
) -> Result<()> {
    let rates = parse_rate_matrix(rates)?;
    let p0 = parse_measure(initial)?;
    // validate the orders before integrating
    for &alpha in alphas {
        signed_renyi(&p0, alpha)?;
    }
    let traj = evolve(&p0, &rates, t_end, dt)?;

    let n = p0.len();
    let mut header: Vec<String> = vec!["t".to_string()];
    header.extend((1..=n).map(|i| format!("p_{i}")));
    header.extend(
        alphas
            .iter()
            .map(|&a| format!("H_renyi_{}", format_significant(a, 12))),
    );
    header.push("H_shannon".to_string());
    header.push("H_renorm".to_string());

    let mut columns: Vec<Vec<(f64, f64)>> = Vec::new();
    for &alpha in alphas {
        columns.push(entropy_trajectory(&traj, EntropyKind::SignedRenyi { alpha })?);
    }
    let shannon = entropy_trajectory(&traj, EntropyKind::SignedShannon)?;
    let renorm = entropy_trajectory(&traj, EntropyKind::Renormalized)?;

    let mut rows = Vec::with_capacity(traj.len());
    for (k, (&t, state)) in traj.times().iter().zip(traj.states()).enumerate() {
        let mut row = Vec::with_capacity(header.len());
        row.push(t);
        row.extend_from_slice(state.values());
        for column in &columns {
            row.push(column[k].1);
        }
        row.push(shannon[k].1);
        row.push(renorm[k].1);
        rows.push(row);
    }
    emit_csv(out, &header, &rows)
}

fn cmd_wigner<W: Write>(
    dim: usize,
    hamiltonian: &str,
    state: &str,
    t_end: f64,
    dt: f64,
    out: &mut W,
) -> Result<()> {
    let basis = build_phase_point_basis(dim)?;
    let h = parse_complex_matrix(hamiltonian, dim, "hamiltonian")?;
    let rho = match state {
        "mixed" => DensityMatrix::maximally_mixed(dim),
        "basis0" => DensityMatrix::basis_state(dim, 0),
        other => DensityMatrix::new(parse_complex_matrix(other, dim, "state")?)?,
    };
    let liouvillian = build_liouvillian(&h, &basis)?;
    let w0 = wigner_from_density(&rho, &basis)?;
    let steps = evolve_wigner(&w0, &liouvillian, t_end, dt)?;

    let mut header: Vec<String> = vec![
        "t".to_string(),
        "V".to_string(),
        "H2_bits".to_string(),
        "Hren_bits".to_string(),
    ];
    header.extend((1..=dim * dim).map(|i| format!("W_{i}")));

    let mut rows = Vec::with_capacity(steps.len());
    for (t, w) in &steps {
        let measure = w.as_measure();
        let mut row = Vec::with_capacity(header.len());
        row.push(*t);
        row.push(quadratic_moment(w));
        row.push(signed_renyi(&measure, 2.0)?.bits);
        row.push(renormalized_entropy(&measure).bits);
        row.extend_from_slice(w.values());
        rows.push(row);
    }
    emit_csv(out, &header, &rows)
}

fn random_measure(rng: &mut ChaCha8Rng) -> SignedMeasure {
    loop {
        let n = rng.random_range(1..=6usize);
        let values: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        if values.iter().sum::<f64>().abs() > 0.05 {
            return SignedMeasure::new(values).expect("sampler keeps weights valid");
        }
    }
}

fn cmd_axioms<W: Write>(batch: usize, seed: u64, alpha_set: &[f64], out: &mut W) -> Result<()> {
    for &alpha in alpha_set {
        signed_renyi(&SignedMeasure::new(vec![0.5]).expect("static"), alpha)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures: Vec<String> = Vec::new();
    let mut record = |out: &mut W, name: &str, pass: bool, detail: String| -> Result<()> {
        if pass {
            write_line(out, &format!("{name}: PASS"))
        } else {
            failures.push(name.to_string());
            write_line(out, &format!("{name}: FAIL {detail}"))
        }
    };

    record(out, "calibration", check_calibration(), String::new())?;

    let grid: Vec<f64> = (-6..=6)
        .flat_map(|k| [-(10f64.powi(k)), 10f64.powi(k)])
        .collect();
    let mut sorted_grid = grid;
    sorted_grid.sort_by(f64::total_cmp);
    record(
        out,
        "singleton-law",
        check_singleton_continuity(&sorted_grid)?,
        String::new(),
    )?;

    // axiom 0: finite, real, non-constant over the batch
    let mut real_valued = true;
    let mut distinct = std::collections::BTreeSet::new();
    for _ in 0..batch {
        let p = random_measure(&mut rng);
        for &alpha in alpha_set {
            let bits = signed_renyi(&p, alpha)?.bits;
            real_valued &= bits.is_finite();
            distinct.insert(bits.to_bits());
        }
    }
    record(
        out,
        "real-valuedness",
        real_valued && distinct.len() >= 2,
        format!("(finite: {real_valued}, distinct values: {})", distinct.len()),
    )?;

    // axiom 4: extensivity batch
    let mut extensivity_ok = true;
    let mut extensivity_detail = String::new();
    for _ in 0..batch {
        let p = random_measure(&mut rng);
        let q = random_measure(&mut rng);
        let alpha = alpha_set[rng.random_range(0..alpha_set.len())];
        if !check_extensivity(&p, &q, alpha, 1e-10)? {
            extensivity_ok = false;
            extensivity_detail =
                format!("(counterexample: {:?} x {:?} at alpha {alpha})", p.values(), q.values());
            break;
        }
    }
    record(out, "extensivity", extensivity_ok, extensivity_detail)?;

    // axiom 5: mean value on same-sign-weight pairs
    let mut mean_ok = true;
    let mut mean_detail = String::new();
    for _ in 0..batch {
        let p = random_measure(&mut rng);
        let mut q = random_measure(&mut rng);
        if p.weight().signum() != q.weight().signum() {
            q = SignedMeasure::new(q.values().iter().map(|v| -v).collect())
                .expect("negation keeps weights valid");
        }
        let alpha = alpha_set[rng.random_range(0..alpha_set.len())];
        if !check_mean_value(&p, &q, alpha, 1e-10)? {
            mean_ok = false;
            mean_detail =
                format!("(counterexample: {:?} u {:?} at alpha {alpha})", p.values(), q.values());
            break;
        }
    }
    record(out, "mean-value", mean_ok, mean_detail)?;

    // the signed Shannon candidate must fail extensivity on (2,-1) x (2,-1)
    let two_minus_one = SignedMeasure::new(vec![2.0, -1.0]).expect("static");
    let product = two_minus_one.direct_product(&two_minus_one);
    let shannon_gap = (crate::entropy::signed_shannon(&product).bits
        - 2.0 * crate::entropy::signed_shannon(&two_minus_one).bits)
        .abs();
    record(
        out,
        "shannon-extensivity-failure",
        shannon_gap > 1.0,
        format!("(gap {shannon_gap} bits)"),
    )?;

    // kernel counterexamples per order: linear always violates, exponential
    // violates exactly when the offset is nonzero
    for &alpha in alpha_set {
        let zero = counterexample_report(0.0, alpha)?;
        let offset = counterexample_report(0.5, alpha)?;
        record(
            out,
            &format!("kernel-counterexamples-alpha-{}", format_significant(alpha, 12)),
            zero.linear_violates && !zero.exponential_violates && offset.exponential_violates,
            format!(
                "(linear gap {}, exponential gaps {} / {})",
                zero.linear_gap_bits, zero.exponential_gap_bits, offset.exponential_gap_bits
            ),
        )?;
    }

    if failures.is_empty() {
        write_line(out, "summary: PASS")
    } else {
        write_line(out, &format!("summary: FAIL ({})", failures.join(", ")))?;
        Err(Error::CheckFailed(failures.join(", ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_string(args: &[&str]) -> Result<String> {
        let config = RunConfig::try_parse_from(args).expect("args parse");
        let mut buffer = Vec::new();
        dispatch(&config, &mut buffer)?;
        Ok(String::from_utf8(buffer).expect("utf8 output"))
    }

    #[test]
    fn format_significant_cases() {
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(1.585, 12), "1.585");
        assert_eq!(format_significant(-2.0, 12), "-2");
        assert_eq!(format_significant(0.1, 12), "0.1");
        assert_eq!(format_significant(123456.789, 12), "123456.789");
        assert_eq!(format_significant(1e-13, 12), "0.0000000000001");
        assert_eq!(format_significant(2.0, 12), "2");
        assert_eq!(format_significant(1.5, 12), "1.5");
    }

    #[test]
    fn format_significant_round_trips_random_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..500 {
            let x: f64 = rng.random_range(-1e6..1e6) * 10f64.powi(rng.random_range(-9..9));
            let parsed: f64 = format_significant(x, 12).parse().unwrap();
            assert!(
                (parsed - x).abs() <= 1e-11 * x.abs().max(1e-300),
                "{x} -> {parsed}"
            );
        }
    }

    #[test]
    fn emit_csv_shapes() {
        let mut buffer = Vec::new();
        emit_csv(&mut buffer, &["t".into(), "H2".into()], &[]).unwrap();
        assert_eq!(String::from_utf8(buffer).unwrap(), "t,H2\n");

        let mut buffer = Vec::new();
        emit_csv(&mut buffer, &["t".into(), "H2".into()], &[vec![0.0, 1.585]]).unwrap();
        assert_eq!(String::from_utf8(buffer).unwrap(), "t,H2\n0,1.585\n");
    }

    #[test]
    fn entropy_subcommand_prints_shannon_value() {
        let output = run_to_string(&[
            "signed-entropy",
            "entropy",
            r#"{"values":[2,-1]}"#,
            "--kind",
            "signed-shannon",
        ])
        .unwrap();
        assert_eq!(output, "-2\n");
    }

    #[test]
    fn entropy_subcommand_rejects_alpha_one() {
        let config = RunConfig::try_parse_from([
            "signed-entropy",
            "entropy",
            r#"{"values":[2,-1]}"#,
            "--kind",
            "signed-renyi",
            "--alpha",
            "1",
        ])
        .unwrap();
        let mut buffer = Vec::new();
        let err = dispatch(&config, &mut buffer).unwrap_err();
        assert!(matches!(err, Error::BadAlpha { .. }));
        assert_eq!(exit_code(&err), 1);
    }

    #[test]
    fn witness_subcommand_emits_json() {
        let output =
            run_to_string(&["signed-entropy", "witness", r#"{"values":[2,-1]}"#]).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&output).unwrap();
        assert_eq!(parsed["found"], true);
        assert_eq!(parsed["alpha"], 2.0);

        let output =
            run_to_string(&["signed-entropy", "witness", r#"{"values":[0.5,0.5]}"#]).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&output).unwrap();
        assert_eq!(parsed["found"], false);
        assert!(parsed.get("alpha").is_none());
    }

    #[test]
    fn majorize_subcommand_answers_both_ways() {
        let q = r#"{"values":[-0.3,0.6,0.7]}"#;
        let p = r#"{"values":[0.08,0.45,0.47]}"#;
        assert_eq!(run_to_string(&["signed-entropy", "majorize", q, p]).unwrap(), "true\n");
        assert_eq!(run_to_string(&["signed-entropy", "majorize", p, q]).unwrap(), "false\n");
    }

    #[test]
    fn sweep_subcommand_emits_csv_grid() {
        let output = run_to_string(&[
            "signed-entropy",
            "sweep",
            r#"{"values":[0.5,0.5]}"#,
            "--from",
            "0.2",
            "--to",
            "0.4",
            "--step",
            "0.1",
        ])
        .unwrap();
        let lines: Vec<&str> = output.lines().collect();
        assert_eq!(lines[0], "inv_alpha,entropy_bits");
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("0.2,"));
    }

    #[test]
    fn evolve_subcommand_reaches_log2_three() {
        let output = run_to_string(&[
            "signed-entropy",
            "evolve",
            "--rates",
            "[[-1,0.5,0.5],[0.5,-1,0.5],[0.5,0.5,-1]]",
            "--initial",
            r#"{"values":[-0.14285714285714285,0.42857142857142855,0.7142857142857143]}"#,
            "--t-end",
            "10",
            "--dt",
            "0.01",
            "--alphas",
            "2,1.5",
        ])
        .unwrap();
        let lines: Vec<&str> = output.lines().collect();
        assert_eq!(
            lines[0],
            "t,p_1,p_2,p_3,H_renyi_2,H_renyi_1.5,H_shannon,H_renorm"
        );
        let last: Vec<f64> = lines
            .last()
            .unwrap()
            .split(',')
            .map(|cell| cell.parse().unwrap())
            .collect();
        assert!((last[4] - 3f64.log2()).abs() <= 1e-3);
        assert!((last[6] - 3f64.log2()).abs() <= 1e-3);
    }

    #[test]
    fn wigner_subcommand_keeps_v_constant() {
        let output = run_to_string(&[
            "signed-entropy",
            "wigner",
            "--dim",
            "3",
            "--hamiltonian",
            "[[[0,0],[0.3,0.1],[0,0]],[[0.3,-0.1],[0.5,0],[0.2,0]],[[0,0],[0.2,0],[-0.5,0]]]",
            "--state",
            "basis0",
            "--t-end",
            "0.5",
            "--dt",
            "0.001",
        ])
        .unwrap();
        let lines: Vec<&str> = output.lines().collect();
        assert!(lines[0].starts_with("t,V,H2_bits,Hren_bits,W_1"));
        let first: Vec<f64> = lines[1].split(',').map(|c| c.parse().unwrap()).collect();
        let last: Vec<f64> = lines
            .last()
            .unwrap()
            .split(',')
            .map(|c| c.parse().unwrap())
            .collect();
        assert!((first[1] - last[1]).abs() <= 1e-9, "V drifted");
    }

    #[test]
    fn axioms_subcommand_reports_all_pass() {
        let output =
            run_to_string(&["signed-entropy", "axioms", "--batch", "50", "--seed", "7"]).unwrap();
        assert!(output.contains("calibration: PASS"));
        assert!(output.contains("extensivity: PASS"));
        assert!(output.contains("mean-value: PASS"));
        assert!(output.contains("shannon-extensivity-failure: PASS"));
        assert!(output.contains("kernel-counterexamples-alpha-2: PASS"));
        assert!(output.trim_end().ends_with("summary: PASS"));
    }

    #[test]
    fn dispatch_is_deterministic_for_fixed_seed() {
        let args = ["signed-entropy", "axioms", "--batch", "25", "--seed", "99"];
        assert_eq!(run_to_string(&args).unwrap(), run_to_string(&args).unwrap());
    }
}
