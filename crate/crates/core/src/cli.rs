//! The `isoclinic` command-line tool.
//!
//! Exit codes: 0 ok, 1 input is not a rotation (or fails a verify check),
//! 2 parse or usage error, 3 decomposition failed on a validated input.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::associate::{associate_matrix, classify_decomposition, decompose, max_abs_minor, IsoclinicKind, MinorScan};
use crate::document::{format_matrix, InputFormat, MatrixDocument, OutputFormat, ParseError, Source};
use crate::error::Error;
use crate::quat::{normalize_with, Quaternion, UnitQuaternion};
use crate::rotation4::{random_rotation, validate_rotation, van_elfrinkhof, Mat4};
use crate::tolerance::Tolerances;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DECOMPOSITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "isoclinic",
    version,
    about = "Split 4D rotations into left- and right-isoclinic factors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor each input rotation as M_L · M_R and report (L, R).
    Decompose(MatrixArgs),
    /// Build the matrix of P -> L P R.
    Compose(ComposeArgs),
    /// Emit Haar-random rotations.
    Generate(GenerateArgs),
    /// Report orthogonality, determinant and associate-matrix diagnostics.
    Verify(MatrixArgs),
    /// Report the isoclinic class and angles of each input rotation.
    Classify(MatrixArgs),
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Input file; stdin when omitted or `-`.
    pub path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    #[arg(long, default_value_t = Tolerances::default().ortho_tol)]
    pub ortho_tol: f64,
    #[arg(long, default_value_t = Tolerances::default().det_tol)]
    pub det_tol: f64,
    #[arg(long, default_value_t = Tolerances::default().norm_tol)]
    pub norm_tol: f64,
    #[arg(long, default_value_t = Tolerances::default().minor_tol)]
    pub minor_tol: f64,
    #[arg(long, default_value_t = Tolerances::default().factor_tol)]
    pub factor_tol: f64,
    #[arg(long, default_value_t = Tolerances::default().recon_tol)]
    pub recon_tol: f64,
    #[arg(long, default_value_t = Tolerances::default().iso_tol)]
    pub iso_tol: f64,
}

impl ToleranceArgs {
    pub fn to_tolerances(&self) -> Tolerances {
        Tolerances {
            ortho_tol: self.ortho_tol,
            det_tol: self.det_tol,
            norm_tol: self.norm_tol,
            minor_tol: self.minor_tol,
            factor_tol: self.factor_tol,
            recon_tol: self.recon_tol,
            iso_tol: self.iso_tol,
            ..Tolerances::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct ComposeArgs {
    /// Left quaternion as W X Y Z; normalized if not unit.
    #[arg(long, num_args = 4, value_names = ["W", "X", "Y", "Z"], allow_negative_numbers = true, required = true)]
    pub left: Vec<f64>,
    /// Right quaternion as W X Y Z; normalized if not unit.
    #[arg(long, num_args = 4, value_names = ["W", "X", "Y", "Z"], allow_negative_numbers = true, required = true)]
    pub right: Vec<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of matrices; seeds `seed, seed+1, …` are used in turn.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Rejected,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Residuals {
    pub reconstruction: f64,
    pub norm_deviation: f64,
    pub max_minor: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorDetail {
    pub kind: &'static str,
    pub message: String,
}

/// Outcome for one input matrix. Every field is always serialized.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub status: Status,
    pub left: Option<[f64; 4]>,
    pub right: Option<[f64; 4]>,
    pub alternate: Option<&'static str>,
    pub left_angle: Option<f64>,
    pub right_angle: Option<f64>,
    pub classification: Option<IsoclinicKind>,
    pub residuals: Option<Residuals>,
    pub checks: Option<Vec<Check>>,
    pub tolerances: Tolerances,
    pub error: Option<ErrorDetail>,
    #[serde(skip)]
    exit_code: i32,
}

impl Report {
    fn new(tolerances: Tolerances) -> Self {
        Self {
            status: Status::Ok,
            left: None,
            right: None,
            alternate: None,
            left_angle: None,
            right_angle: None,
            classification: None,
            residuals: None,
            checks: None,
            tolerances,
            error: None,
            exit_code: EXIT_OK,
        }
    }

    fn reject(mut self, err: &Error) -> Self {
        self.status = Status::Rejected;
        self.exit_code = if err.is_validation() {
            EXIT_REJECTED
        } else {
            EXIT_DECOMPOSITION
        };
        self.error = Some(ErrorDetail {
            kind: err.kind(),
            message: err.to_string(),
        });
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.exit_code
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string(self).expect("report serializes"),
            OutputFormat::Plain => self.render_plain(),
        }
    }

    fn render_plain(&self) -> String {
        let quat = |q: &[f64; 4]| format!("{} {} {} {}", q[0], q[1], q[2], q[3]);
        let mut lines = vec![format!(
            "status: {}",
            if self.status == Status::Ok { "ok" } else { "rejected" }
        )];
        if let Some(e) = &self.error {
            lines.push(format!("error: {}: {}", e.kind, e.message));
        }
        if let Some(c) = &self.classification {
            lines.push(format!("class: {c}"));
        }
        if let Some(l) = &self.left {
            lines.push(format!("left: {}", quat(l)));
        }
        if let Some(r) = &self.right {
            lines.push(format!("right: {}", quat(r)));
        }
        if let Some(a) = self.alternate {
            lines.push(format!("alternate: {a}"));
        }
        if let (Some(la), Some(ra)) = (self.left_angle, self.right_angle) {
            lines.push(format!("left_angle: {la}"));
            lines.push(format!("right_angle: {ra}"));
        }
        if let Some(r) = &self.residuals {
            lines.push(format!("reconstruction_residual: {:e}", r.reconstruction));
            lines.push(format!("norm_deviation: {:e}", r.norm_deviation));
            lines.push(format!("max_minor: {:e}", r.max_minor));
        }
        for c in self.checks.iter().flatten() {
            lines.push(format!(
                "check {}: {} (value {:e}, tolerance {:e})",
                c.name,
                if c.pass { "pass" } else { "fail" },
                c.value,
                c.tolerance
            ));
        }
        lines.join("\n")
    }
}

/// Validates and decomposes one matrix; used by both `decompose` and `classify`.
pub fn decompose_report(m: &Mat4, tol: &Tolerances) -> Report {
    let report = Report::new(*tol);
    let rotation = match validate_rotation(*m, tol.ortho_tol, tol.det_tol) {
        Ok(r) => r,
        Err(e) => return report.reject(&e),
    };
    match decompose(&rotation, tol) {
        Ok(d) => {
            let class = classify_decomposition(&d, tol);
            Report {
                left: Some(d.left.to_array()),
                right: Some(d.right.to_array()),
                alternate: Some("(-L, -R)"),
                left_angle: Some(class.left_angle),
                right_angle: Some(class.right_angle),
                classification: Some(class.kind),
                residuals: Some(Residuals {
                    reconstruction: d.reconstruction_residual,
                    norm_deviation: d.norm_deviation,
                    max_minor: d.max_minor,
                }),
                ..report
            }
        }
        Err(e) => report.reject(&e),
    }
}

pub fn classify_report(m: &Mat4, tol: &Tolerances) -> Report {
    let full = decompose_report(m, tol);
    Report {
        alternate: None,
        residuals: None,
        ..full
    }
}

pub fn verify_report(m: &Mat4, tol: &Tolerances) -> Report {
    let assoc = associate_matrix(m);
    let check = |name, value: f64, tolerance| Check {
        name,
        value,
        tolerance,
        pass: value <= tolerance,
    };
    let checks = vec![
        check("orthogonality", m.orthogonality_deviation(), tol.ortho_tol),
        check("determinant", (m.determinant() - 1.0).abs(), tol.det_tol),
        check("associate_norm", (assoc.norm() - 1.0).abs(), tol.norm_tol),
        check(
            "minors_nine",
            max_abs_minor(assoc.matrix(), MinorScan::AgainstFirst),
            tol.minor_tol,
        ),
        check(
            "minors_full",
            max_abs_minor(assoc.matrix(), MinorScan::Full),
            tol.minor_tol,
        ),
    ];
    let pass = checks.iter().all(|c| c.pass);
    Report {
        status: if pass { Status::Ok } else { Status::Rejected },
        checks: Some(checks),
        exit_code: if pass { EXIT_OK } else { EXIT_REJECTED },
        ..Report::new(*tol)
    }
}

fn read_document(
    path: &Option<PathBuf>,
    format: InputFormat,
    stdin: &mut dyn Read,
) -> Result<MatrixDocument, ParseError> {
    let (source, text) = match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = fs::read_to_string(p).map_err(|e| ParseError::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            })?;
            (Source::Path(p.clone()), text)
        }
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| ParseError::Io {
                path: "<stdin>".into(),
                message: e.to_string(),
            })?;
            (Source::Stdin, text)
        }
    };
    MatrixDocument::parse(source, &text, format)
}

fn quaternion_arg(values: &[f64], name: &str, stderr: &mut dyn Write) -> Result<UnitQuaternion, Error> {
    let q = Quaternion::new(values[0], values[1], values[2], values[3]);
    let unit = normalize_with(q, Tolerances::default().degeneracy_tol)?;
    if (q.norm_squared() - 1.0).abs() > Tolerances::default().unit_tol {
        let _ = writeln!(stderr, "warning: {name} {q} normalized to {unit}");
    }
    Ok(unit)
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(cli, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_REJECTED
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> std::io::Result<i32> {
    match cli.command {
        Command::Compose(args) => {
            let l = quaternion_arg(&args.left, "left", stderr);
            let r = quaternion_arg(&args.right, "right", stderr);
            match (l, r) {
                (Ok(l), Ok(r)) => {
                    writeln!(stdout, "{}", format_matrix(van_elfrinkhof(l, r).matrix(), args.format))?;
                    Ok(EXIT_OK)
                }
                (Err(e), _) | (_, Err(e)) => {
                    writeln!(stderr, "error: {e}")?;
                    Ok(EXIT_REJECTED)
                }
            }
        }
        Command::Generate(args) => {
            for k in 0..args.count {
                let a = random_rotation(args.seed.wrapping_add(k));
                writeln!(stdout, "{}", format_matrix(a.matrix(), args.format))?;
            }
            Ok(EXIT_OK)
        }
        Command::Decompose(args) => per_matrix(&args, stdin, stdout, stderr, decompose_report),
        Command::Classify(args) => per_matrix(&args, stdin, stdout, stderr, classify_report),
        Command::Verify(args) => per_matrix(&args, stdin, stdout, stderr, verify_report),
    }
}

fn per_matrix(
    args: &MatrixArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    report: fn(&Mat4, &Tolerances) -> Report,
) -> std::io::Result<i32> {
    let doc = match read_document(&args.path, args.input_format, stdin) {
        Ok(doc) => doc,
        Err(e) => {
            writeln!(stderr, "parse error: {e}")?;
            return Ok(EXIT_PARSE);
        }
    };
    let tol = args.tolerances.to_tolerances();
    let mut code = EXIT_OK;
    for (k, m) in doc.matrices.iter().enumerate() {
        let r = report(m, &tol);
        if args.format == OutputFormat::Plain && k > 0 {
            writeln!(stdout)?;
        }
        writeln!(stdout, "{}", r.render(args.format))?;
        code = code.max(r.exit_code());
    }
    Ok(code)
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdin, stdout, stderr),
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            if e.use_stderr() {
                EXIT_PARSE
            } else {
                // --help and --version
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            }
        }
    }
}
