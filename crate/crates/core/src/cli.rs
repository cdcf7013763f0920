//! The `ybq` command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::biquandle::{alexander_biquandle, read_biquandle, write_biquandle, Biquandle, BlockConvention};
use crate::cohomology::{
    classify_cochain, coboundary_basis, cohomology_basis, is_ri_reduced, read_cocycle_with_default,
    reduced_cohomology_basis,
};
use crate::coloring::{enumerate_colorings, enumerate_colorings_oracle};
use crate::error::Error;
use crate::gauss::{parse_gauss_code, GaussCode};
use crate::invariant::{yb_invariant, yb_invariant_suite};
use crate::linalg::{kernel_basis, FieldSpec};
use crate::presentation::{knot_presentation, reduce_presentation};
use crate::search::enumerate_biquandles_with_limit;

#[derive(Parser, Debug)]
#[command(name = "ybq", version, about = "Finite biquandles and Yang-Baxter cocycle invariants of virtual links")]
struct Cli {
    /// Worker threads (default: all cores); output does not depend on it
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// How the 2n x 2n matrix blocks map to the four operations
    #[arg(long, global = true, default_value = "definition")]
    block_convention: BlockConvention,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the biquandle axioms for a matrix file
    Validate {
        biquandle: PathBuf,
    },
    /// Write the Alexander biquandle on Z_n with units s, t
    Alexander {
        n: usize,
        #[arg(allow_negative_numbers = true)]
        s: i64,
        #[arg(allow_negative_numbers = true)]
        t: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate every biquandle structure on {1..n}
    Enumerate {
        n: usize,
        /// Write one numbered file per structure here instead of printing them
        #[arg(short, long)]
        output_dir: Option<PathBuf>,
        #[arg(long, default_value_t = crate::search::DEFAULT_ORDER_LIMIT)]
        limit: usize,
    },
    /// Cocycle, coboundary and cohomology dimensions and bases
    Cohomology {
        #[arg(short, long)]
        biquandle: PathBuf,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
        /// Print representatives of the full H^2 instead of the reduced one
        #[arg(long)]
        full: bool,
        /// Classify this cocycle file instead of printing bases
        #[arg(long)]
        classify: Option<PathBuf>,
    },
    /// List colorings of a Gauss code by a biquandle
    Colorings {
        #[command(flatten)]
        target: Target,
        /// Print only the number of colorings
        #[arg(long)]
        count: bool,
        /// Use the propagate-and-branch enumerator on the unreduced presentation
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        porcelain: bool,
    },
    /// Cocycle invariant for one cocycle file
    Invariant {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        cocycle: PathBuf,
        /// Field for cocycle files without a header
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
        #[arg(long)]
        porcelain: bool,
    },
    /// Cocycle invariants for every reduced cohomology basis vector
    Suite {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
        #[arg(long)]
        porcelain: bool,
        /// Also print each basis cocycle
        #[arg(long)]
        show_basis: bool,
    },
}

#[derive(Args, Debug)]
struct Target {
    /// Signed Gauss code file
    #[arg(short, long)]
    code: PathBuf,
    /// Biquandle matrix file
    #[arg(short, long)]
    biquandle: PathBuf,
    /// Print the knot presentation and its reduction first
    #[arg(long)]
    show_presentation: bool,
}

/// Failure of a command: a message and its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn read_file(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn with_path(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    }
}

fn load_biquandle(path: &Path, conv: BlockConvention) -> std::result::Result<Biquandle, Failure> {
    let b = read_biquandle(&read_file(path)?, conv).map_err(with_path(path))?;
    if !b.is_valid() {
        let report = b.validate();
        let first = report.failures.first().map(|f| f.to_string()).unwrap_or_default();
        return Err(with_path(path)(Error::InvalidBiquandle(first)));
    }
    Ok(b)
}

fn load_code(path: &Path) -> std::result::Result<GaussCode, Failure> {
    parse_gauss_code(&read_file(path)?).map_err(with_path(path))
}

/// Runs the command line `args` (program name first), writing to `out` and
/// `err`. Returns the process exit code: 0 success, 1 domain error, 2 usage.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    // buffered so the command can run inside a worker pool
    let (mut obuf, mut ebuf) = (Vec::new(), Vec::new());
    let result = match cli.jobs {
        Some(0) => Err(Failure {
            code: 2,
            message: "--jobs must be positive".into(),
        }),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut obuf, &mut ebuf)),
            Err(e) => Err(Failure {
                code: 1,
                message: e.to_string(),
            }),
        },
        None => dispatch(&cli, &mut obuf, &mut ebuf),
    };
    let _ = out.write_all(&obuf);
    let _ = err.write_all(&ebuf);
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn show_presentation(code: &GaussCode, out: &mut Vec<u8>) -> CmdResult {
    let pres = knot_presentation(code);
    let red = reduce_presentation(&pres);
    writeln!(out, "presentation: {pres}")?;
    writeln!(out, "reduced: {}", red.presentation)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>, err: &mut Vec<u8>) -> CmdResult {
    let conv = cli.block_convention;
    match &cli.command {
        Command::Validate { biquandle } => {
            let b = read_biquandle(&read_file(biquandle)?, conv).map_err(with_path(biquandle))?;
            let report = b.validate();
            if report.ok {
                writeln!(out, "valid biquandle of order {}", b.order())?;
                return Ok(());
            }
            for f in &report.failures {
                writeln!(out, "{f}")?;
            }
            if report.total_failures > report.failures.len() {
                writeln!(out, "... {} failures in total", report.total_failures)?;
            }
            Err(Failure {
                code: 1,
                message: format!("{}: not a biquandle", biquandle.display()),
            })
        }
        Command::Alexander { n, s, t, output } => {
            let b = alexander_biquandle(*n, *s, *t)?;
            let text = write_biquandle(&b, conv);
            match output {
                Some(p) => fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(())
        }
        Command::Enumerate { n, output_dir, limit } => {
            let all = enumerate_biquandles_with_limit(*n, *limit)?;
            match output_dir {
                Some(dir) => {
                    fs::create_dir_all(dir)?;
                    let width = all.len().to_string().len().max(4);
                    for (i, b) in all.iter().enumerate() {
                        fs::write(dir.join(format!("{:0width$}.bq", i + 1)), write_biquandle(b, conv))?;
                    }
                    writeln!(out, "{}", all.len())?;
                }
                None => {
                    for (i, b) in all.iter().enumerate() {
                        writeln!(out, "# biquandle {}", i + 1)?;
                        out.write_all(write_biquandle(b, conv).as_bytes())?;
                    }
                }
            }
            Ok(())
        }
        Command::Cohomology {
            biquandle,
            field,
            full,
            classify,
        } => {
            let t = load_biquandle(biquandle, conv)?;
            if let Some(path) = classify {
                let phi = read_cocycle_with_default(&read_file(path)?, t.order(), *field).map_err(with_path(path))?;
                writeln!(out, "{}", classify_cochain(&t, &phi)?)?;
                return Ok(());
            }
            let f = *field;
            let z = kernel_basis(&f, &crate::cohomology::cocycle_matrix(&t, f)).len();
            let b = coboundary_basis(&t, f).len();
            let basis = if *full { cohomology_basis(&t, f) } else { reduced_cohomology_basis(&t, f) };
            writeln!(out, "field {f}")?;
            writeln!(out, "dim Z2 = {z}")?;
            writeln!(out, "dim B2 = {b}")?;
            writeln!(out, "dim H2 = {}", z - b)?;
            if !*full {
                writeln!(out, "dim reduced H2 = {}", basis.len())?;
            }
            for (i, phi) in basis.iter().enumerate() {
                writeln!(out, "phi[{}]: {phi}", i + 1)?;
            }
            Ok(())
        }
        Command::Colorings {
            target,
            count,
            oracle,
            porcelain,
        } => {
            let code = load_code(&target.code)?;
            let t = load_biquandle(&target.biquandle, conv)?;
            if target.show_presentation {
                show_presentation(&code, out)?;
            }
            let cs = if *oracle { enumerate_colorings_oracle(&code, &t) } else { enumerate_colorings(&code, &t)? };
            if *count {
                writeln!(out, "{}", cs.len())?;
            } else if *porcelain {
                writeln!(out, "{}", serde_json::to_string(&cs.iter().map(|c| &c.0).collect::<Vec<_>>()).expect("serializable"))?;
            } else {
                for c in &cs {
                    writeln!(out, "{c}")?;
                }
            }
            Ok(())
        }
        Command::Invariant {
            target,
            cocycle,
            field,
            porcelain,
        } => {
            let code = load_code(&target.code)?;
            let t = load_biquandle(&target.biquandle, conv)?;
            let phi = read_cocycle_with_default(&read_file(cocycle)?, t.order(), *field).map_err(with_path(cocycle))?;
            if target.show_presentation {
                show_presentation(&code, out)?;
            }
            let value = yb_invariant(&code, &t, &phi).map_err(with_path(cocycle))?;
            if !is_ri_reduced(&t, &phi)? {
                writeln!(err, "warning: cocycle is not RI-reduced; the value may change under Reidemeister I moves")?;
            }
            if *porcelain {
                writeln!(out, "{}", value.to_porcelain())?;
            } else {
                writeln!(out, "{value}")?;
            }
            Ok(())
        }
        Command::Suite {
            target,
            field,
            porcelain,
            show_basis,
        } => {
            let code = load_code(&target.code)?;
            let t = load_biquandle(&target.biquandle, conv)?;
            if target.show_presentation {
                show_presentation(&code, out)?;
            }
            let suite = yb_invariant_suite(&code, &t, *field)?;
            if *porcelain {
                let rows: Vec<serde_json::Value> = suite
                    .iter()
                    .map(|(_, v)| serde_json::from_str(&v.to_porcelain()).expect("valid json"))
                    .collect();
                writeln!(out, "{}", serde_json::Value::Array(rows))?;
                return Ok(());
            }
            for (i, (phi, v)) in suite.iter().enumerate() {
                if *show_basis {
                    writeln!(out, "# phi[{}] = {phi}", i + 1)?;
                }
                writeln!(out, "phi[{}]: {v}", i + 1)?;
            }
            Ok(())
        }
    }
}
