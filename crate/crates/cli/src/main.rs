use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyp2f1::HypParams;

use cli::commands::{self, AppError, PtgCmd, PtgState};
use cli::oracle::OracleKind;
use cli::parse::complex_literal;
use cli::report::Format;
use cli::sweep::{self, SweepConfig, SweepMode};

#[derive(Parser)]
#[command(
    name = "hyp2f1",
    version,
    about = "Gauss 2F1 for complex parameters: point evaluation, accuracy sweeps, oracle checks and PTG wave functions"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate 2F1(a, b; c; z) at one point and report the self-test residual.
    Eval {
        /// Complex literals like 0.5, -2i or 1.5-2.25i.
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Run a seeded random accuracy sweep and report residual statistics.
    Sweep {
        #[arg(long, default_value_t = 10_000)]
        samples: u32,
        /// Magnitude band for |Re| of a, b, c (signs are drawn separately).
        #[arg(long, num_args = 2, value_names = ["LOW", "HIGH"], default_values_t = [0.0, 1.0])]
        re_band: Vec<f64>,
        /// Magnitude band for |Im| of a, b, c.
        #[arg(long, num_args = 2, value_names = ["LOW", "HIGH"], default_values_t = [0.0, 1.0])]
        im_band: Vec<f64>,
        /// Half-width of the z box in the infinity norm (the fixed radius in
        /// taylor-zone mode, where it must be 0.99 or 1.01).
        #[arg(long, default_value_t = 3.0)]
        z_box: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SweepMode::General)]
        mode: SweepMode,
        /// Exit 3 if the accuracy gate for this configuration is breached.
        #[arg(long)]
        assert: bool,
    },
    /// Evaluate and compare against an independent oracle.
    Verify {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = OracleKind::Ode)]
        oracle: OracleKind,
    },
    /// Sample a Poschl-Teller-Ginocchio wave function on a radial grid.
    Ptg {
        /// Shape parameter Lambda of the potential.
        #[arg(long)]
        lambda: f64,
        /// Length scale s multiplying the radius.
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Depth parameter nu; the well depth is nu(nu+1) in scaled units.
        #[arg(long)]
        nu: f64,
        /// Effective-mass parameter in [0, 1).
        #[arg(long, default_value_t = 0.0)]
        a_mass: f64,
        /// Orbital angular momentum.
        #[arg(long, default_value_t = 0)]
        ell: u32,
        /// hbar^2/(2 m_0) in the working units.
        #[arg(long, default_value_t = 0.0478450)]
        kin_fact: f64,
        /// Uniform radial grid: r_min r_max n_points.
        #[arg(long, num_args = 3, value_names = ["R_MIN", "R_MAX", "N"], required = true, allow_negative_numbers = true)]
        grid: Vec<f64>,
        /// Pole state with radial quantum number n.
        #[arg(long, conflicts_with = "scat")]
        pole: Option<u32>,
        /// Real scattering momentum.
        #[arg(long)]
        scat: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let benign = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if benign { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn parse_point(a: &str, b: &str, c: &str, z: &str) -> Result<HypParams, AppError> {
    Ok(HypParams::new(
        complex_literal(a).map_err(AppError::usage)?,
        complex_literal(b).map_err(AppError::usage)?,
        complex_literal(c).map_err(AppError::usage)?,
        complex_literal(z).map_err(AppError::usage)?,
    ))
}

fn write_out(target: &Option<PathBuf>, text: &str) -> Result<(), AppError> {
    match target {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| AppError::eval(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Eval { a, b, c, z } => {
            let p = parse_point(&a, &b, &c, &z)?;
            let text = commands::cmd_eval(&p, format)?;
            write_out(&cli.out, &text)
        }
        Cmd::Verify { a, b, c, z, oracle } => {
            let p = parse_point(&a, &b, &c, &z)?;
            let text = commands::cmd_verify(&p, oracle, format)?;
            write_out(&cli.out, &text)
        }
        Cmd::Sweep { samples, re_band, im_band, z_box, seed, mode, assert } => {
            let cfg = SweepConfig {
                samples,
                re_band: (re_band[0], re_band[1]),
                im_band: (im_band[0], im_band[1]),
                z_box,
                seed,
                mode,
            };
            let (rep, text) = commands::cmd_sweep(&cfg, format)?;
            write_out(&cli.out, &text)?;
            if assert {
                sweep::check_asserts(&cfg, &rep).map_err(AppError::breach)?;
            }
            Ok(())
        }
        Cmd::Ptg { lambda, scale, nu, a_mass, ell, kin_fact, grid, pole, scat } => {
            let state = match (pole, scat) {
                (Some(n), None) => PtgState::Pole(n),
                (None, Some(k)) => PtgState::Scat(k),
                _ => return Err(AppError::usage("exactly one of --pole or --scat is required")),
            };
            let n_points = grid[2];
            if !(n_points.fract() == 0.0 && n_points >= 2.0 && n_points <= 1e7) {
                return Err(AppError::usage("grid point count must be an integer >= 2"));
            }
            let cmd = PtgCmd {
                lambda,
                scale,
                nu,
                a_mass,
                ell,
                kin_fact,
                r_min: grid[0],
                r_max: grid[1],
                n_points: n_points as usize,
                state,
            };
            let text = commands::cmd_ptg(&cmd, format)?;
            write_out(&cli.out, &text)
        }
    }
}
