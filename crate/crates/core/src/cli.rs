//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, syntax or input
//! errors, 3 evaluation errors, 4 output that cannot be written. Data goes
//! to stdout (or `--out`), diagnostics to stderr.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complex::ComplexScalar;
use crate::expr;
use crate::qm::{evolve, neutrino_oscillation, EvolutionConfig, Observable};
use crate::spinor::{a_hat_from_ket, KetSpinor};
use crate::tol;
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EVAL: i32 = 3;
pub const EXIT_WRITE: i32 = 4;

pub const EVOLVE_HEADER: &str = "t,re_a0,im_a0,re_a1,im_a1,ax,ay,az,p_e,p_mu";
pub const PROJECT_HEADER: &str = "re_a0,im_a0,re_a1,im_a1,x,y,ax,ay,az,flag";

#[derive(Debug, Parser)]
#[command(name = "g3", version, about = "Geometric algebra of 3-space and two-level spinor tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a multivector expression, e.g. `g3 eval "exp(pi/2 * e12)"`.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Scales every suite tolerance (harness self-test).
        #[arg(long, default_value_t = 1.0, hide = true)]
        tol_scale: f64,
    },
    /// Evolve |0> under a constant Hamiltonian `s0 + s` and emit the trajectory.
    Evolve {
        /// Hamiltonian as `s0,s1,s2,s3`.
        #[arg(long = "h", value_name = "S0,S1,S2,S3", default_value = "0,1,0,0", allow_hyphen_values = true)]
        h: String,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long = "t-max", default_value_t = std::f64::consts::PI)]
        t_max: f64,
        /// Number of grid points, both ends included.
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Project kets `(a0, a1)` to the plane and the sphere.
    Project {
        /// File with one ket per line: `re0,re1` or `re0,im0,re1,im1`.
        input: Option<PathBuf>,
        /// Inline ket, repeatable.
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Default, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self { code, stdout: String::new(), stderr }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::fail(code, text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Eval { expr } => cmd_eval(expr),
        Command::Verify { seed, trials, tol_scale } => cmd_verify(&VerifyConfig {
            seed: *seed,
            trials: *trials,
            tol_scale: *tol_scale,
        }),
        Command::Evolve { h, hbar, t_max, steps, format, out } => {
            cmd_evolve(h, *hbar, *t_max, *steps, *format, out.as_deref())
        }
        Command::Project { input, points, format, out } => {
            cmd_project(input.as_deref(), points, *format, out.as_deref())
        }
    }
}

/// Runs with the process arguments, forwarding output, and returns the exit code.
pub fn main() -> i32 {
    let outcome = run_args(std::env::args_os());
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    outcome.code
}

pub fn cmd_eval(src: &str) -> Outcome {
    match expr::eval_str(src) {
        Ok(g) => {
            let coeffs: Vec<String> = g.c.iter().map(|x| format!("{x}")).collect();
            Outcome::ok(format!("{g}\n[{}]\n", coeffs.join(", ")))
        }
        Err(e) => {
            let code = if e.is_syntax() { EXIT_USAGE } else { EXIT_EVAL };
            Outcome::fail(code, format!("error: {e}\n{}\n", e.caret(src)))
        }
    }
}

pub fn cmd_verify(cfg: &VerifyConfig) -> Outcome {
    match verify::run(cfg) {
        Ok(report) => {
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Outcome { code, stdout: report.render(), stderr: String::new() }
        }
        Err(e) => Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn parse_reals(text: &str) -> Option<Vec<f64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().ok().filter(|x| x.is_finite()))
        .collect()
}

/// Parses `s0,s1,s2,s3`.
pub fn parse_hamiltonian(text: &str) -> Result<Observable, String> {
    match parse_reals(text).as_deref() {
        Some(&[s0, s1, s2, s3]) => Ok(Observable::from_array([s0, s1, s2, s3])),
        _ => Err(format!("expected four reals `s0,s1,s2,s3`, got `{text}`")),
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn emit(out: Option<&Path>, text: String) -> Outcome {
    match out {
        None => Outcome::ok(text),
        Some(path) => match fs::write(path, text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(EXIT_WRITE, format!("error: cannot write {}: {e}\n", path.display())),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvolveRow {
    pub t: f64,
    pub re_a0: f64,
    pub im_a0: f64,
    pub re_a1: f64,
    pub im_a1: f64,
    pub ax: f64,
    pub ay: f64,
    pub az: f64,
    pub p_e: Option<f64>,
    pub p_mu: Option<f64>,
}

pub fn evolve_rows(h: &Observable, cfg: &EvolutionConfig) -> Vec<EvolveRow> {
    let flavors = neutrino_oscillation(h, cfg).ok();
    evolve(h, cfg)
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            let f = flavors.as_ref().map(|v| v[k]);
            EvolveRow {
                t: s.t,
                re_a0: s.ket.a0.re,
                im_a0: s.ket.a0.im,
                re_a1: s.ket.a1.re,
                im_a1: s.ket.a1.im,
                ax: s.a_hat.x,
                ay: s.a_hat.y,
                az: s.a_hat.z,
                p_e: f.map(|f| f.p_electron),
                p_mu: f.map(|f| f.p_muon),
            }
        })
        .collect()
}

pub fn cmd_evolve(h: &str, hbar: f64, t_max: f64, steps: usize, format: Format, out: Option<&Path>) -> Outcome {
    let h = match parse_hamiltonian(h) {
        Ok(h) => h,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: --h: {e}\n")),
    };
    let cfg = match EvolutionConfig::uniform(hbar, t_max, steps) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    let rows = evolve_rows(&h, &cfg);
    let text = match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut s = format!("{EVOLVE_HEADER}\n");
            for r in &rows {
                let cols = [r.t, r.re_a0, r.im_a0, r.re_a1, r.im_a1, r.ax, r.ay, r.az].map(num);
                let _ = writeln!(s, "{},{},{}", cols.join(","), opt_num(r.p_e), opt_num(r.p_mu));
            }
            s
        }
    };
    emit(out, text)
}

fn json<T: Serialize>(rows: &T) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjectFlag {
    Ok,
    SouthPole,
    Zero,
}

impl ProjectFlag {
    fn as_str(self) -> &'static str {
        match self {
            ProjectFlag::Ok => "ok",
            ProjectFlag::SouthPole => "south_pole",
            ProjectFlag::Zero => "zero",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectRow {
    pub re_a0: f64,
    pub im_a0: f64,
    pub re_a1: f64,
    pub im_a1: f64,
    pub x: Option<f64>,
    pub y: Option<f64>,
    pub ax: Option<f64>,
    pub ay: Option<f64>,
    pub az: Option<f64>,
    pub flag: ProjectFlag,
}

/// Plane point `z = a1/a0` and sphere point `a_hat` of a ket.
pub fn project_ket(k: &KetSpinor) -> ProjectRow {
    let [re_a0, im_a0, re_a1, im_a1] = k.components();
    let mut row = ProjectRow {
        re_a0,
        im_a0,
        re_a1,
        im_a1,
        x: None,
        y: None,
        ax: None,
        ay: None,
        az: None,
        flag: ProjectFlag::Zero,
    };
    let Ok(a) = a_hat_from_ket(k) else {
        return row;
    };
    (row.ax, row.ay, row.az) = (Some(a.x), Some(a.y), Some(a.z));
    if k.a0.abs() <= tol::ZERO * k.norm() {
        row.flag = ProjectFlag::SouthPole;
        return row;
    }
    let z: ComplexScalar = k.a1 / k.a0;
    (row.x, row.y, row.flag) = (Some(z.re), Some(z.im), ProjectFlag::Ok);
    row
}

/// Reads `re0,re1` or `re0,im0,re1,im1`.
pub fn parse_ket(text: &str) -> Option<KetSpinor> {
    match *parse_reals(text)?.as_slice() {
        [a0, a1] => Some(KetSpinor::from_parts(a0, 0.0, a1, 0.0)),
        [r0, i0, r1, i1] => Some(KetSpinor::from_parts(r0, i0, r1, i1)),
        _ => None,
    }
}

pub fn cmd_project(input: Option<&Path>, points: &[String], format: Format, out: Option<&Path>) -> Outcome {
    let mut lines: Vec<String> = Vec::new();
    if let Some(path) = input {
        match fs::read_to_string(path) {
            Ok(text) => lines.extend(text.lines().map(str::to_owned)),
            Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: cannot read {}: {e}\n", path.display())),
        }
    }
    lines.extend(points.iter().cloned());
    if lines.is_empty() {
        return Outcome::fail(EXIT_USAGE, "error: no input points (give a file or --point)\n".into());
    }
    let mut rows = Vec::new();
    for (n, line) in lines.iter().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        match parse_ket(body) {
            Some(k) => rows.push(project_ket(&k)),
            None => {
                return Outcome::fail(
                    EXIT_USAGE,
                    format!("error: row {}: expected 2 or 4 reals, got `{line}`\n", n + 1),
                )
            }
        }
    }
    let text = match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut s = format!("{PROJECT_HEADER}\n");
            for r in &rows {
                let head = [r.re_a0, r.im_a0, r.re_a1, r.im_a1].map(num).join(",");
                let tail = [r.x, r.y, r.ax, r.ay, r.az].map(opt_num).join(",");
                let _ = writeln!(s, "{head},{tail},{}", r.flag.as_str());
            }
            s
        }
    };
    emit(out, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_prints_pretty_then_coefficients() {
        let o = cmd_eval("e1*e2*e3");
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "e123\n[0, 0, 0, 0, 0, 0, 0, 1]\n");
        assert_eq!(cmd_eval("u+ * u-").stdout.lines().next(), Some("0"));
    }

    #[test]
    fn eval_exit_codes() {
        let o = cmd_eval("1/u+");
        assert_eq!(o.code, EXIT_EVAL);
        assert!(o.stderr.contains("not invertible"), "{}", o.stderr);
        let o = cmd_eval("e1 +* e2");
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("e1 +* e2\n    ^"), "{}", o.stderr);
    }

    #[test]
    fn hamiltonian_parsing() {
        assert_eq!(
            parse_hamiltonian("0.5,-1,0,2").unwrap(),
            Observable::from_array([0.5, -1.0, 0.0, 2.0])
        );
        assert!(parse_hamiltonian("1,2,3").is_err());
        assert!(parse_hamiltonian("1,2,3,x").is_err());
    }

    #[test]
    fn project_examples() {
        let r = project_ket(&parse_ket("1,0").unwrap());
        assert_eq!((r.x, r.y, r.az, r.flag), (Some(0.0), Some(0.0), Some(1.0), ProjectFlag::Ok));
        let r = project_ket(&parse_ket("1,1").unwrap());
        assert_eq!((r.x, r.y), (Some(1.0), Some(0.0)));
        assert!((r.ax.unwrap() - 1.0).abs() < 1e-15 && r.az.unwrap().abs() < 1e-15);
        let r = project_ket(&parse_ket("0,1").unwrap());
        assert_eq!((r.x, r.y, r.flag), (None, None, ProjectFlag::SouthPole));
        assert_eq!(project_ket(&parse_ket("0,0").unwrap()).flag, ProjectFlag::Zero);
        assert!(parse_ket("1,2,3").is_none());
    }

    #[test]
    fn csv_floats_have_seventeen_digits() {
        assert_eq!(num(0.1), "1.0000000000000001e-1");
        assert_eq!(num(0.1).parse::<f64>().unwrap(), 0.1);
    }
}
