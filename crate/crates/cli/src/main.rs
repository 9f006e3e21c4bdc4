//! `pathsig`: signatures, log-signatures and BCH from the command line.
//!
//! Results go to stdout, diagnostics and the resolved configuration to
//! stderr. Exit status 2 means malformed input, 1 a failed `verify`.

mod render;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pathsig::analysis::{lp_profile, path_length, path_length_l1, vanish_search, SearchParams};
use pathsig::cumulants::{
    brownian_expected_signature, concat_brownian_cumulant, gaussian_cumulant, isserlis_moments,
    GaussianSpec,
};
use pathsig::io::from_json;
use pathsig::lie::{bch, LiePolynomial};
use pathsig::path::{signature_numeric_oracle, PiecewiseLinearPath, SampledPath};
use pathsig::{Rational, Scalar, TensorSeries};

use render::Rendered;

#[derive(Parser, Debug)]
#[command(
    name = "pathsig",
    version,
    about = "Path signatures in the truncated tensor algebra"
)]
struct Cli {
    /// Truncation level N.
    #[arg(long, global = true, default_value_t = 4)]
    level: usize,

    /// Coefficient arithmetic.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Rational)]
    backend: Backend,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Ambient dimension for generated paths.
    #[arg(long, global = true, default_value_t = 2)]
    dim: usize,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, default_value_t = 1000)]
    trials: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Rational,
    Float,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    Lyndon,
    Tensor,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MomentKind {
    /// `b + a/2` in the symmetric algebra.
    Cumulant,
    /// Moment transform by pair partitions.
    Moments,
    /// `exp(b + a/2)` in the tensor algebra.
    ExpectedSignature,
    /// `log(exp(a1/2) exp(a2/2))`; needs `--with`.
    ConcatCumulant,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signature of a piecewise-linear path.
    Sig {
        #[arg(long)]
        path: PathBuf,
    },
    /// Log-signature of a piecewise-linear path.
    Logsig {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Basis::Lyndon)]
        basis: Basis,
    },
    /// `log(exp(a) exp(b))` of two Lie elements given as tensor series.
    Bch {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum, default_value_t = Basis::Tensor)]
        basis: Basis,
    },
    /// Tree-reduced form of a path.
    Reduce {
        #[arg(long)]
        path: PathBuf,
    },
    /// Euler-scheme signature of a sampled path, in floats.
    Oracle {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
    },
    /// Random search for long runs of vanishing log-signature levels.
    VanishSearch {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        pieces: usize,
        #[arg(long)]
        max_level: usize,
    },
    /// Growth profile of the signature of a path.
    LpProfile {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        p: f64,
    },
    /// Gaussian moment and cumulant transforms.
    Moments {
        #[arg(long)]
        gaussian: PathBuf,
        #[arg(long, value_enum, default_value_t = MomentKind::Cumulant)]
        kind: MomentKind,
        /// Second Gaussian, for the concatenation cumulant.
        #[arg(long)]
        with: Option<PathBuf>,
    },
    /// Reproduce every worked example and print PASS/FAIL per item.
    Verify,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    env_logger::Builder::new()
        .filter_level(log::LevelFilter::Warn)
        .format_timestamp(None)
        .init();
    eprintln!("config {}", config(&cli));
    if let Command::Verify = cli.command {
        return match verify::run(&mut std::io::stdout()) {
            None => ExitCode::SUCCESS,
            Some(first) => {
                eprintln!("error: verification failed, first failing check: {first}");
                ExitCode::from(1)
            }
        };
    }
    let out = match cli.backend {
        Backend::Rational => run::<Rational>(&cli),
        Backend::Float => run::<f64>(&cli),
    };
    match out {
        Ok(r) => {
            println!("{}", r.emit(cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Resolved configuration, echoed to stderr on every run.
fn config(cli: &Cli) -> Value {
    let name = match &cli.command {
        Command::Sig { .. } => "sig",
        Command::Logsig { .. } => "logsig",
        Command::Bch { .. } => "bch",
        Command::Reduce { .. } => "reduce",
        Command::Oracle { .. } => "oracle",
        Command::VanishSearch { .. } => "vanish-search",
        Command::LpProfile { .. } => "lp-profile",
        Command::Moments { .. } => "moments",
        Command::Verify => "verify",
    };
    let mut c = json!({
        "command": name,
        "level": cli.level,
        "backend": flag(&cli.backend),
        "format": flag(&cli.format),
        "dim": cli.dim,
        "seed": cli.seed,
        "trials": cli.trials,
    });
    let extra = match &cli.command {
        Command::Sig { path } | Command::Reduce { path } => json!({ "path": path }),
        Command::Logsig { path, basis } => json!({ "path": path, "basis": flag(basis) }),
        Command::Bch { left, right, basis } => {
            json!({ "left": left, "right": right, "basis": flag(basis) })
        }
        Command::Oracle { path, steps } => json!({ "path": path, "steps": steps }),
        Command::VanishSearch {
            n1,
            pieces,
            max_level,
        } => {
            json!({ "n1": n1, "pieces": pieces, "max_level": max_level })
        }
        Command::LpProfile { path, p } => json!({ "path": path, "p": p }),
        Command::Moments {
            gaussian,
            kind,
            with,
        } => json!({
            "gaussian": gaussian,
            "kind": flag(kind),
            "with": with,
        }),
        Command::Verify => json!({}),
    };
    if let (Value::Object(c), Value::Object(e)) = (&mut c, extra) {
        c.extend(e);
    }
    c
}

fn flag(v: &impl ValueEnum) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

fn load<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> anyhow::Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run<S: Scalar>(cli: &Cli) -> anyhow::Result<Rendered> {
    let n = cli.level;
    Ok(match &cli.command {
        Command::Sig { path } => {
            let p: PiecewiseLinearPath<S> = load(path)?;
            Rendered::tensor(&p.signature(n))
        }
        Command::Logsig { path, basis } => {
            let p: PiecewiseLinearPath<S> = load(path)?;
            match basis {
                Basis::Lyndon => Rendered::lie(&p.log_signature(n)?),
                Basis::Tensor => Rendered::tensor(&p.log_signature_tensor(n)),
            }
        }
        Command::Bch { left, right, basis } => {
            let a: TensorSeries<S> = load(left)?;
            let b: TensorSeries<S> = load(right)?;
            let c = bch(&a.truncate(n), &b.truncate(n))?;
            match basis {
                Basis::Lyndon => Rendered::lie(&LiePolynomial::from_tensor(&c)?),
                Basis::Tensor => Rendered::tensor(&c),
            }
        }
        Command::Reduce { path } => {
            let p: PiecewiseLinearPath<S> = load(path)?;
            Rendered::value(&p.reduce())
        }
        Command::Oracle { path, steps } => {
            let p: SampledPath = load(path)?;
            Rendered::tensor(&signature_numeric_oracle(&p, n, *steps)?)
        }
        Command::VanishSearch {
            n1,
            pieces,
            max_level,
        } => {
            if S::EXACT {
                let params = SearchParams {
                    n1: *n1,
                    pieces: *pieces,
                    dim: cli.dim,
                    max_level: *max_level,
                    trials: cli.trials,
                    seed: cli.seed,
                };
                Rendered::value(&vanish_search(&params)?)
            } else {
                bail!("vanish-search needs exact zero tests; use --backend rational")
            }
        }
        Command::LpProfile { path, p } => {
            let path: PiecewiseLinearPath<S> = load(path)?;
            let profile = lp_profile(&path.signature(n), *p)?;
            Rendered::json(json!({
                "p": profile.p,
                "values": profile.values,
                "path_length": path_length(&path),
                "path_length_l1": path_length_l1(&path).to_f64(),
            }))
        }
        Command::Moments {
            gaussian,
            kind,
            with,
        } => {
            let g: GaussianSpec<S> = load(gaussian)?;
            if with.is_some() && *kind != MomentKind::ConcatCumulant {
                bail!("--with only applies to --kind concat-cumulant");
            }
            match kind {
                MomentKind::Cumulant => Rendered::sym(&gaussian_cumulant(&g, n)),
                MomentKind::Moments => Rendered::sym(&isserlis_moments(&g, n)),
                MomentKind::ExpectedSignature => {
                    Rendered::tensor(&brownian_expected_signature(g.mean(), g.cov(), n)?)
                }
                MomentKind::ConcatCumulant => {
                    let Some(with) = with else {
                        bail!("--kind concat-cumulant needs --with");
                    };
                    let g2: GaussianSpec<S> = load(with)?;
                    Rendered::tensor(&concat_brownian_cumulant(g.cov(), g2.cov(), n)?)
                }
            }
        }
        Command::Verify => unreachable!("handled before dispatch"),
    })
}
