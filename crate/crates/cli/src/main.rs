//! Batch front end for weighted-lattice dynamical systems: equation
//! solving, spectral analysis, simulation, impulse/stability reports,
//! reachability, filters, distance transforms, decoding and fuzzy Markov
//! chains. Exit codes: 0 success, 1 domain/data error, 2 usage error.

mod config;
mod mats;
mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use maxstar::apps::distance::{distance_transform, GridField};
use maxstar::apps::filter::{filter_stability, FilterSpec};
use maxstar::apps::fmc::{fmc_analyze, FmcSpec};
use maxstar::apps::viterbi::{viterbi, HmmSpec};
use maxstar::control::{observe, reach};
use maxstar::solve::{solve_max, solve_min};
use maxstar::spectral::spectral_report;
use maxstar::system::{check_causal_stable, Mode};
use maxstar::{Clodum, Matrix, Scalar, Trajectory, Vector, DEFAULT_TOLERANCE};

use report::{matrix_json, scalar_json, solve_json, spectral_json, stability_json, vector_json};
use serde_json::json;

#[derive(Parser)]
#[command(name = "maxstar", version, about = "max-* / min-*' dynamical systems toolbox")]
struct Cli {
    /// Scalar comparison tolerance (absolute-plus-relative).
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MatrixArgs {
    /// Clodum name: max-plus, max-times, max-min, product-tnorm.
    #[arg(long, default_value = "max-plus")]
    clodum: String,
    /// Matrix file (rows of scalars).
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Greatest (sub)solution of A ⊠ x = b (or the dual with --dual).
    Solve {
        #[command(flatten)]
        mat: MatrixArgs,
        /// Right-hand side vector file.
        #[arg(long)]
        rhs: PathBuf,
        /// Solve the min-*' equation A ⊠′ y = b instead.
        #[arg(long)]
        dual: bool,
    },
    /// Principal eigenvalue, critical cycle and metric matrix.
    Spectral {
        #[command(flatten)]
        mat: MatrixArgs,
    },
    /// Simulate a system from a config file; emits trajectory CSV.
    Simulate {
        /// System config (TOML).
        #[arg(long)]
        system: PathBuf,
        /// Initial state vector file.
        #[arg(long)]
        x0: PathBuf,
        /// Input file: one row per t = 1..T, one column per input.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Simulation horizon T.
        #[arg(long)]
        horizon: usize,
        /// Output CSV path (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Impulse response of a constant system; emits CSV.
    Impulse {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        horizon: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Causality/stability report for a constant system.
    Stability {
        #[arg(long)]
        system: PathBuf,
    },
    /// k-step control synthesis towards a target state.
    Reach {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        steps: usize,
        /// Target state vector file.
        #[arg(long)]
        target: PathBuf,
        /// Optional initial state for the free-motion check.
        #[arg(long)]
        x0: Option<PathBuf>,
    },
    /// Greatest initial state consistent with stacked outputs y(1..k).
    Observe {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        steps: usize,
        /// Stacked output vector file (k·q entries).
        #[arg(long)]
        outputs: PathBuf,
    },
    /// Recursive max/min-sum filter: impulse response or filtering run.
    Filter {
        /// Feedback coefficients a_1..a_n, one per line.
        #[arg(long)]
        coeffs: PathBuf,
        /// Feedforward coefficient b0.
        #[arg(long, default_value_t = 0.0)]
        b0: f64,
        /// max (max-sum) or min (min-sum).
        #[arg(long, default_value = "max")]
        mode: String,
        /// Input signal file (one scalar per line, t = 0..).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Emit the impulse response over this horizon instead.
        #[arg(long)]
        impulse: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Chamfer distance transform of a grid field.
    Dt {
        /// Grid file: finite entries are source costs, "+inf" is free space.
        #[arg(long)]
        grid: PathBuf,
        /// Optional 0/1 obstacle mask file of the same shape.
        #[arg(long)]
        obstacles: Option<PathBuf>,
        /// Axial step cost.
        #[arg(long, default_value_t = 1.0)]
        step_a: f64,
        /// Diagonal step cost.
        #[arg(long, default_value_t = 1.4)]
        step_b: f64,
        #[arg(long, default_value_t = 64)]
        max_passes: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Best state sequence of an HMM against a likelihood table.
    Viterbi {
        /// HMM config (TOML: transition, initial).
        #[arg(long)]
        hmm: PathBuf,
        /// Likelihood table: row t holds p_i(t), rows 0..=T.
        #[arg(long)]
        obs: PathBuf,
        /// Decode horizon T (defaults to the last table row).
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Fuzzy Markov chain power analysis.
    Fmc {
        /// Transition matrix file over [0,1].
        #[arg(long)]
        matrix: PathBuf,
        /// T-norm: max-min or product-tnorm.
        #[arg(long, default_value = "max-min")]
        tnorm: String,
        #[arg(long, default_value_t = 512)]
        max_powers: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(path: Option<&PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content)
            .with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn trajectory_csv(c: Clodum, traj: &Trajectory) -> String {
    let n = traj.states.first().map_or(0, Vector::len);
    let q = traj.outputs.first().map_or(0, Vector::len);
    let mut out = String::from("t");
    for i in 1..=n {
        let _ = write!(out, ",x{i}");
    }
    for i in 1..=q {
        let _ = write!(out, ",y{i}");
    }
    out.push('\n');
    for t in 0..traj.states.len() {
        let _ = write!(out, "{t}");
        for s in traj.states[t].iter() {
            let _ = write!(out, ",{}", c.format_scalar(*s));
        }
        for s in traj.outputs[t].iter() {
            let _ = write!(out, ",{}", c.format_scalar(*s));
        }
        out.push('\n');
    }
    out
}

fn parse_mode(s: &str) -> Result<Mode> {
    match s {
        "max" => Ok(Mode::Max),
        "min" => Ok(Mode::Min),
        other => bail!("mode must be `max` or `min`, got `{other}`"),
    }
}

fn run(cli: Cli) -> Result<()> {
    let tol = cli.tolerance;
    match cli.command {
        Command::Solve { mat, rhs, dual } => {
            let clodum = Clodum::from_name(&mat.clodum)?;
            let a = mats::parse_matrix(&mat.matrix, clodum)?;
            let b = mats::parse_vector(&rhs, clodum)?;
            let rep = if dual {
                solve_min(&a, &b, tol)?
            } else {
                solve_max(&a, &b, tol)?
            };
            println!("{}", serde_json::to_string_pretty(&solve_json(&rep))?);
        }
        Command::Spectral { mat } => {
            let clodum = Clodum::from_name(&mat.clodum)?;
            let a = mats::parse_matrix(&mat.matrix, clodum)?;
            let rep = spectral_report(&a, tol)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&spectral_json(clodum, &rep))?
            );
        }
        Command::Simulate {
            system,
            x0,
            input,
            horizon,
            output,
        } => {
            let sys = config::load_system(&system)?.system;
            let c = sys.clodum();
            let x0 = mats::parse_vector(&x0, c)?;
            let inputs: Vec<Vector> = match input {
                None => sys.null_inputs(horizon),
                Some(path) => {
                    let m = mats::parse_matrix(&path, c)?;
                    if m.rows() != horizon || m.cols() != sys.input_dim() {
                        bail!(
                            "{}: input table is {}x{}, expected {horizon}x{}",
                            path.display(),
                            m.rows(),
                            m.cols(),
                            sys.input_dim()
                        );
                    }
                    (0..m.rows())
                        .map(|t| Vector::new(c, m.row(t).to_vec()))
                        .collect()
                }
            };
            let traj = sys.simulate(&x0, &inputs, horizon)?;
            emit(output.as_ref(), &trajectory_csv(c, &traj))?;
        }
        Command::Impulse {
            system,
            horizon,
            output,
        } => {
            let sys = config::load_system(&system)?.system;
            let c = sys.clodum();
            let h = sys.impulse_response(horizon)?;
            let (q, p) = (sys.output_dim(), sys.input_dim());
            let mut csv = String::from("t");
            for i in 1..=q {
                for j in 1..=p {
                    let _ = write!(csv, ",h{i}{j}");
                }
            }
            csv.push('\n');
            for t in 0..h.len() {
                let _ = write!(csv, "{t}");
                let m = h.get(t);
                for i in 0..q {
                    for j in 0..p {
                        let _ = write!(csv, ",{}", c.format_scalar(m.get(i, j)));
                    }
                }
                csv.push('\n');
            }
            emit(output.as_ref(), &csv)?;
        }
        Command::Stability { system } => {
            let sys = config::load_system(&system)?.system;
            let rep = check_causal_stable(&sys, tol)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&stability_json(sys.clodum(), &rep))?
            );
        }
        Command::Reach {
            system,
            steps,
            target,
            x0,
        } => {
            let sys = config::load_system(&system)?.system;
            let c = sys.clodum();
            let target = mats::parse_vector(&target, c)?;
            let x0 = x0.map(|p| mats::parse_vector(&p, c)).transpose()?;
            let rep = reach(&sys, steps, &target, x0.as_ref(), tol)?;
            let mut doc = solve_json(&rep.solve);
            doc["weakly_reachable"] = json!(rep.solve.exact);
            doc["with_free_motion_exact"] = json!(rep.with_free_motion_exact);
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Command::Observe {
            system,
            steps,
            outputs,
        } => {
            let sys = config::load_system(&system)?.system;
            let y = mats::parse_vector(&outputs, sys.clodum())?;
            let rep = observe(&sys, steps, &y, tol)?;
            println!("{}", serde_json::to_string_pretty(&solve_json(&rep))?);
        }
        Command::Filter {
            coeffs,
            b0,
            mode,
            input,
            impulse,
            output,
        } => {
            let mode = parse_mode(&mode)?;
            let c = Clodum::MaxPlus;
            let a = mats::parse_vector(&coeffs, c)?;
            let spec = FilterSpec::new(
                a.as_slice().to_vec(),
                vec![c.scalar(b0)?],
                mode,
            )?;
            let y: Vec<Scalar> = match (&input, impulse) {
                (Some(path), None) => {
                    let u = mats::parse_vector(path, c)?;
                    spec.direct_recursion(u.as_slice())
                }
                (None, Some(t_end)) => spec.impulse_response(t_end),
                (None, None) => bail!("provide --input or --impulse"),
                (Some(_), Some(_)) => bail!("--input and --impulse are mutually exclusive"),
            };
            let stability = filter_stability(&spec);
            let lambda = match spec.to_state_space() {
                Ok(sys) => {
                    let (l, _) =
                        maxstar::spectral::cycle_mean_eigenvalue(sys.a_const()?)?;
                    Some(l)
                }
                Err(_) => None,
            };
            let mut csv = String::from("t,y\n");
            for (t, s) in y.iter().enumerate() {
                let _ = writeln!(csv, "{t},{}", c.format_scalar(*s));
            }
            emit(output.as_ref(), &csv)?;
            let doc = json!({
                "stable": stability.stable,
                "absolutely_stable": stability.absolutely_stable,
                "lambda": lambda.map(|l| scalar_json(c, l)),
            });
            eprintln!("{}", serde_json::to_string(&doc)?);
        }
        Command::Dt {
            grid,
            obstacles,
            step_a,
            step_b,
            max_passes,
            output,
        } => {
            let c = Clodum::MaxPlus;
            let field = mats::parse_matrix(&grid, c)?;
            let (rows, cols) = (field.rows(), field.cols());
            let mask = match obstacles {
                None => vec![false; rows * cols],
                Some(path) => {
                    let m = mats::parse_matrix(&path, c)?;
                    if m.rows() != rows || m.cols() != cols {
                        bail!(
                            "{}: obstacle mask is {}x{}, grid is {rows}x{cols}",
                            path.display(),
                            m.rows(),
                            m.cols()
                        );
                    }
                    (0..rows)
                        .flat_map(|i| {
                            (0..cols)
                                .map(move |j| (i, j))
                        })
                        .map(|(i, j)| !m.get(i, j).approx_eq(Scalar::Finite(0.0), tol)
                            && !m.get(i, j).is_bottom())
                        .collect()
                }
            };
            let g = GridField::new(
                rows,
                cols,
                (0..rows)
                    .flat_map(|i| (0..cols).map(move |j| (i, j)))
                    .map(|(i, j)| field.get(i, j))
                    .collect(),
                mask,
                step_a,
                step_b,
            )?;
            let out = distance_transform(&g, max_passes)?;
            let result = Matrix::new(c, rows, cols, out.field)?;
            emit(output.as_ref(), &mats::format_matrix(&result))?;
            eprintln!("{{\"passes_used\": {}}}", out.passes_used);
        }
        Command::Viterbi { hmm, obs, horizon } => {
            let cfg = config::load_hmm(&hmm)?;
            let liks = mats::parse_matrix(&obs, cfg.clodum)?;
            let t_end = horizon.unwrap_or(liks.rows().saturating_sub(1));
            let spec = HmmSpec::new(cfg.transition, cfg.initial, liks)?;
            let res = viterbi(&spec, t_end)?;
            let doc = json!({
                "score": scalar_json(cfg.clodum, res.score),
                "path": res.path,
                "states": res.trajectory.states.iter().map(vector_json).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Command::Fmc {
            matrix,
            tnorm,
            max_powers,
        } => {
            let clodum = Clodum::from_name(&tnorm)?;
            let p = mats::parse_matrix(&matrix, clodum)?;
            let spec = FmcSpec::new(p, clodum)?;
            let rep = fmc_analyze(&spec, max_powers, tol)?;
            let doc = json!({
                "tau": rep.tau,
                "period": rep.period,
                "ergodic": rep.ergodic,
                "unit_diagonal": rep.unit_diagonal,
                "gamma": rep.gamma.as_ref().map(matrix_json),
                "stationary": rep.stationary.iter().map(vector_json).collect::<Vec<_>>(),
                "limit": if rep.period == 1 {
                    Some(matrix_json(&rep.powers[rep.tau - 1]))
                } else {
                    None
                },
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(())
}
