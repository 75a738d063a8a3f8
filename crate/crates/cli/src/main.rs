use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use tlb_core::annular::enumerate;
use tlb_core::combinatorics::{
    binomial, check_bijection, count_atmost, count_tilde, count_tilde_formula,
    MAX_DISK_POINTS_HALF, MAX_STRATA_N,
};
use tlb_core::gram::{
    gram_matrix, sampled_specialization_nullity, specialization_nullity, telescoping,
    verify_product_formula, verify_sign_conjugation, Mode,
};
use tlb_core::guard::UNGUARDED_ENV;
use tlb_core::sampling::{self, NullityEstimate};
use tlb_core::skein::{jones_wenzl, nullity_f, sampled_nullity_f};
use tlb_core::Error;

#[derive(Parser)]
#[command(
    name = "tlb",
    version,
    about = "Exact checks for the type-B Temperley-Lieb Gram determinant"
)]
#[command(
    after_help = "Size guards can be lifted with TLB_UNGUARDED=1 (unsupported beyond the guards)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Modular,
}

#[derive(Subcommand)]
enum Command {
    /// List the annular basis diagrams on 2N points.
    Enumerate { n: usize },
    /// Print the Gram matrix of the basis.
    Gram { n: usize },
    /// Compare the Gram determinant with the Chebyshev product formula.
    DetVerify {
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
        mode: ModeArg,
        #[arg(long, default_value_t = 32)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that flipping the sign of alpha conjugates the Gram matrix by the cut-parity signs.
    #[command(visible_alias = "lemma2")]
    SignConjugation { n: usize },
    /// Nullity of the Gram matrix at alpha = (-1)^(K-1) T_K(delta).
    NullityGram {
        n: usize,
        k: usize,
        /// Rational delta value, e.g. 7/3. Random samples are drawn when absent.
        #[arg(long)]
        sample: Option<BigRational>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Nullity of the skein value matrix with the (K-1)-th idempotent.
    NullitySkein {
        n: usize,
        k: usize,
        /// Rational A value, e.g. 3/2. Random samples are drawn when absent.
        #[arg(long)]
        sample: Option<BigRational>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the K-th Jones-Wenzl idempotent.
    JonesWenzl { k: usize },
    /// Count disk matchings with no cap on the added strands, for all N + K up to MAX_SUM.
    Counts {
        #[arg(long, default_value_t = MAX_DISK_POINTS_HALF)]
        max_sum: usize,
    },
    /// Exhaust the subset/diagram correspondence for every j.
    Bijection { n: usize },
    /// Check the binomial telescoping identity for n = 1..=N.
    Telescoping { n: usize },
}

struct Report {
    command: &'static str,
    params: Value,
    pass: bool,
    result: Value,
    text: String,
    csv: Option<Vec<Vec<String>>>,
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(match e {
            Error::OutOfRange {
                name,
                value,
                min,
                max,
            } => {
                let arg = match name {
                    "trials" => "--trials".to_string(),
                    other => format!("<{}>", other.to_uppercase()),
                };
                if max < min {
                    format!("invalid value {value} for {arg}: must be at least {min}")
                } else {
                    format!(
                        "invalid value {value} for {arg}: valid range is {min}..={max} \
                         ({UNGUARDED_ENV}=1 lifts the upper limit, unsupported)"
                    )
                }
            }
            other => other.to_string(),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let body = match render(&report, cli.format) {
        Ok(b) => b,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn render(r: &Report, format: Format) -> Result<String, String> {
    match format {
        Format::Text => Ok(r.text.clone()),
        Format::Json => {
            let doc = json!({
                "command": r.command,
                "version": env!("CARGO_PKG_VERSION"),
                "params": r.params,
                "pass": r.pass,
                "result": r.result,
            });
            Ok(serde_json::to_string_pretty(&doc).expect("json") + "\n")
        }
        Format::Csv => {
            let rows = r.csv.as_ref().ok_or_else(|| {
                format!(
                    "--format csv is not available for {}; valid: json, text",
                    r.command
                )
            })?;
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.write_record(row).map_err(|e| e.to_string())?;
            }
            Ok(String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).expect("utf8"))
        }
    }
}

fn run(cmd: &Command) -> Result<Report, Failure> {
    match *cmd {
        Command::Enumerate { n } => cmd_enumerate(n),
        Command::Gram { n } => cmd_gram(n),
        Command::DetVerify {
            n,
            mode,
            trials,
            seed,
        } => cmd_det_verify(n, mode, trials, seed),
        Command::SignConjugation { n } => cmd_sign_conjugation(n),
        Command::NullityGram {
            n,
            k,
            ref sample,
            seed,
        } => cmd_nullity(n, k, sample.as_ref(), seed, false),
        Command::NullitySkein {
            n,
            k,
            ref sample,
            seed,
        } => cmd_nullity(n, k, sample.as_ref(), seed, true),
        Command::JonesWenzl { k } => cmd_jones_wenzl(k),
        Command::Counts { max_sum } => cmd_counts(max_sum),
        Command::Bijection { n } => cmd_bijection(n),
        Command::Telescoping { n } => cmd_telescoping(n),
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_enumerate(n: usize) -> Result<Report, Failure> {
    let basis = enumerate(n)?;
    let expected = binomial(2 * n as i64, n as i64);
    let pass = BigInt::from(basis.len()) == expected;
    let mut text = String::new();
    let mut csv = vec![vec![
        "index".into(),
        "diagram".into(),
        "cut_crossings".into(),
    ]];
    let mut list = Vec::new();
    for (i, d) in basis.iter().enumerate() {
        text += &format!("{} {d}\n", i + 1);
        csv.push(vec![
            (i + 1).to_string(),
            d.to_string(),
            d.cut_crossings().to_string(),
        ]);
        list.push(json!({ "index": i + 1, "text": d.to_string(), "chords": d.chords() }));
    }
    text += &format!(
        "{} diagrams, expected {expected}: {}\n",
        basis.len(),
        verdict(pass)
    );
    Ok(Report {
        command: "enumerate",
        params: json!({ "n": n }),
        pass,
        result: json!({ "count": basis.len(), "expected": expected.to_string(), "diagrams": list }),
        text,
        csv: Some(csv),
    })
}

fn cmd_gram(n: usize) -> Result<Report, Failure> {
    let g = gram_matrix(n)?;
    let pass = g.has_expected_shape() && g.alpha_parity_holds();
    let size = g.size();
    let labels: Vec<String> = g.basis().iter().map(ToString::to_string).collect();
    let mut header = vec![String::new()];
    header.extend(labels.iter().cloned());
    let mut csv = vec![header];
    let mut rows = Vec::new();
    let mut text = String::new();
    for i in 0..size {
        let row: Vec<String> = g.entries().row(i).iter().map(ToString::to_string).collect();
        let pairs: Vec<String> = g
            .pairings()
            .row(i)
            .iter()
            .map(|v| format!("{},{}", v.m, v.t))
            .collect();
        text += &format!("{}: {}\n", labels[i], pairs.join(" "));
        let mut line = vec![labels[i].clone()];
        line.extend(row.iter().cloned());
        csv.push(line);
        rows.push(row);
    }
    text += &format!(
        "rows list (m,t) for alpha^m delta^t; symmetric with diagonal delta^{n}: {}\n",
        verdict(pass)
    );
    Ok(Report {
        command: "gram",
        params: json!({ "n": n }),
        pass,
        result: json!({ "size": size, "basis": labels, "entries": rows }),
        text,
        csv: Some(csv),
    })
}

fn cmd_det_verify(n: usize, mode: ModeArg, trials: usize, seed: u64) -> Result<Report, Failure> {
    let mode = match mode {
        ModeArg::Symbolic => Mode::Symbolic,
        ModeArg::Modular => Mode::Modular,
    };
    let r = verify_product_formula(n, mode, trials, seed)?;
    let mut text = String::new();
    let mut result = json!({});
    let mut csv = None;
    match mode {
        Mode::Symbolic => {
            let det = r
                .determinant
                .as_ref()
                .expect("symbolic determinant")
                .to_string();
            let prod = r.product.as_ref().expect("symbolic product").to_string();
            text += &format!("determinant: {det}\nproduct:     {prod}\n");
            result = json!({ "determinant": det, "product": prod });
        }
        Mode::Modular => {
            let mut rows = vec![
                ["trial", "alpha", "delta", "determinant", "product", "pass"]
                    .map(String::from)
                    .to_vec(),
            ];
            for t in &r.trial_results {
                text += &format!(
                    "trial {}: alpha={} delta={} det={} product={} {}\n",
                    t.index,
                    t.alpha,
                    t.delta,
                    t.determinant,
                    t.product,
                    verdict(t.pass)
                );
                rows.push(vec![
                    t.index.to_string(),
                    t.alpha.to_string(),
                    t.delta.to_string(),
                    t.determinant.to_string(),
                    t.product.to_string(),
                    t.pass.to_string(),
                ]);
            }
            let bound = r.bound.as_ref().expect("modular bound");
            let below = r.bound_below_pow2(30);
            text += &format!(
                "prime {} degree bound {} failure bound {bound} (< 2^-30: {below})\n",
                r.prime.expect("prime"),
                r.degree_bound.expect("degree")
            );
            result = json!({
                "prime": r.prime,
                "degree_bound": r.degree_bound,
                "failure_bound": bound.to_string(),
                "failure_bound_below_2^-30": below,
                "trials": r.trial_results,
            });
            csv = Some(rows);
        }
    }
    text += &format!("n={n}: {}\n", verdict(r.pass));
    Ok(Report {
        command: "det-verify",
        params: json!({ "n": n, "mode": mode, "trials": r.trials, "seed": seed }),
        pass: r.pass,
        result,
        text,
        csv,
    })
}

fn cmd_sign_conjugation(n: usize) -> Result<Report, Failure> {
    let pass = verify_sign_conjugation(n)?;
    Ok(Report {
        command: "sign-conjugation",
        params: json!({ "n": n }),
        pass,
        result: json!({ "conjugation_holds": pass }),
        text: format!("sign conjugation n={n}: {}\n", verdict(pass)),
        csv: None,
    })
}

fn cmd_nullity(
    n: usize,
    k: usize,
    sample: Option<&BigRational>,
    seed: u64,
    skein: bool,
) -> Result<Report, Failure> {
    let (command, var) = if skein {
        ("nullity-skein", "A")
    } else {
        ("nullity-gram", "delta")
    };
    let bound = binomial(2 * n as i64, n as i64 - k as i64);
    let estimate = match sample {
        Some(x) => {
            let nullity = if skein {
                nullity_f(n, k, x)?
            } else {
                specialization_nullity(n, k, x)?
            };
            let size = binomial(2 * n as i64, n as i64);
            let rank = usize::try_from(size).expect("size fits") - nullity;
            NullityEstimate {
                samples: vec![sampling::NullitySample {
                    sample: x.to_string(),
                    rank,
                    nullity,
                }],
                nullity,
            }
        }
        None => {
            let mut rng = sampling::rng(seed);
            if skein {
                sampled_nullity_f(n, k, &mut rng)?
            } else {
                sampled_specialization_nullity(n, k, &mut rng)?
            }
        }
    };
    let pass = BigInt::from(estimate.nullity) >= bound;
    let mut text = String::new();
    for s in &estimate.samples {
        text += &format!("{var}={} rank={} nullity={}\n", s.sample, s.rank, s.nullity);
    }
    text += &format!(
        "n={n} k={k} nullity={} bound={bound}: {}\n",
        estimate.nullity,
        verdict(pass)
    );
    let mut csv = vec![vec!["sample".to_string(), "rank".into(), "nullity".into()]];
    csv.extend(
        estimate
            .samples
            .iter()
            .map(|s| vec![s.sample.clone(), s.rank.to_string(), s.nullity.to_string()]),
    );
    Ok(Report {
        command,
        params: json!({ "n": n, "k": k, "sample": sample.map(ToString::to_string), "seed": seed }),
        pass,
        result: json!({
            "n": n,
            "k": k,
            "samples": estimate.samples,
            "nullity": estimate.nullity,
            "bound": bound.to_string(),
            "pass": pass,
        }),
        text,
        csv: Some(csv),
    })
}

fn cmd_jones_wenzl(k: usize) -> Result<Report, Failure> {
    let f = jones_wenzl(k)?;
    let mut text = String::new();
    let mut csv = vec![vec!["diagram".to_string(), "coefficient".into()]];
    let mut terms = Vec::new();
    for (d, c) in f.terms() {
        text += &format!("{d} {c}\n");
        csv.push(vec![d.to_string(), c.to_string()]);
        terms.push(json!({ "diagram": d.to_string(), "coefficient": c.to_string() }));
    }
    Ok(Report {
        command: "jones-wenzl",
        params: json!({ "k": k }),
        pass: true,
        result: json!({ "terms": terms }),
        text,
        csv: Some(csv),
    })
}

fn cmd_counts(max_sum: usize) -> Result<Report, Failure> {
    tlb_core::guard::check("max_sum", max_sum, 1, MAX_DISK_POINTS_HALF)?;
    let mut rows = vec![["n", "k", "count_tilde", "formula", "match"]
        .map(String::from)
        .to_vec()];
    let mut list = Vec::new();
    let mut text = String::new();
    let mut pass = true;
    for n in 1..=max_sum {
        for k in 0..=max_sum - n {
            let count = count_tilde(n, k)?;
            let formula = count_tilde_formula(n, k);
            let mut ok = BigInt::from(count) == formula;
            let atmost = if n <= MAX_STRATA_N {
                Some(count_atmost(n, k)?)
            } else {
                None
            };
            ok &= atmost.is_none_or(|a| a == count);
            pass &= ok;
            text += &format!(
                "n={n} k={k} count={count} formula={formula} {}\n",
                verdict(ok)
            );
            rows.push(vec![
                n.to_string(),
                k.to_string(),
                count.to_string(),
                formula.to_string(),
                ok.to_string(),
            ]);
            list.push(json!({
                "n": n,
                "k": k,
                "count_tilde": count,
                "formula": formula.to_string(),
                "count_atmost": atmost,
                "match": ok,
            }));
        }
    }
    Ok(Report {
        command: "counts",
        params: json!({ "max_sum": max_sum }),
        pass,
        result: json!({ "rows": list }),
        text,
        csv: Some(rows),
    })
}

fn cmd_bijection(n: usize) -> Result<Report, Failure> {
    let checks = check_bijection(n)?;
    let pass = checks.iter().all(|c| c.pass());
    let mut text = String::new();
    let mut rows = vec![[
        "j",
        "subsets",
        "stratum",
        "expected",
        "subsets_round_trip",
        "diagrams_round_trip",
    ]
    .map(String::from)
    .to_vec()];
    for c in &checks {
        text += &format!(
            "j={} subsets={} stratum={} expected={} round trips {}/{}: {}\n",
            c.j,
            c.subsets,
            c.stratum,
            c.expected,
            c.subsets_round_trip,
            c.diagrams_round_trip,
            verdict(c.pass())
        );
        rows.push(vec![
            c.j.to_string(),
            c.subsets.to_string(),
            c.stratum.to_string(),
            c.expected.clone(),
            c.subsets_round_trip.to_string(),
            c.diagrams_round_trip.to_string(),
        ]);
    }
    Ok(Report {
        command: "bijection",
        params: json!({ "n": n }),
        pass,
        result: json!({ "strata": checks }),
        text,
        csv: Some(rows),
    })
}

fn cmd_telescoping(n: usize) -> Result<Report, Failure> {
    tlb_core::guard::check("n", n, 1, usize::MAX)?;
    let mut text = String::new();
    let mut rows = vec![vec![
        "n".to_string(),
        "lhs".into(),
        "rhs".into(),
        "pass".into(),
    ]];
    let mut list = Vec::new();
    let mut pass = true;
    for m in 1..=n {
        let (lhs, rhs) = telescoping(m);
        let ok = lhs == rhs;
        pass &= ok;
        text += &format!("n={m} {lhs} = {rhs}: {}\n", verdict(ok));
        rows.push(vec![
            m.to_string(),
            lhs.to_string(),
            rhs.to_string(),
            ok.to_string(),
        ]);
        list.push(json!({ "n": m, "lhs": lhs.to_string(), "rhs": rhs.to_string(), "pass": ok }));
    }
    Ok(Report {
        command: "telescoping",
        params: json!({ "n": n }),
        pass,
        result: json!({ "rows": list }),
        text,
        csv: Some(rows),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn message(e: Error) -> String {
        match Failure::from(e) {
            Failure::Usage(m) => m,
        }
    }

    #[test]
    fn range_errors_name_the_argument() {
        let m = message(Error::OutOfRange { name: "n", value: 9, min: 1, max: 5 });
        assert!(m.starts_with("invalid value 9 for <N>: valid range is 1..=5"), "{m}");
        assert!(m.contains(UNGUARDED_ENV));
        let m = message(Error::OutOfRange { name: "trials", value: 0, min: 1, max: -1 });
        assert_eq!(m, "invalid value 0 for --trials: must be at least 1");
    }

    #[test]
    fn csv_refused_without_table() {
        let r = cmd_sign_conjugation(1).ok().unwrap();
        assert!(render(&r, Format::Csv).is_err());
        assert!(render(&r, Format::Json).unwrap().contains("\"version\""));
    }
}
