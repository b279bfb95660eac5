//! The `gcell` command line. [`run`] holds all of the logic so tests can
//! drive it in-process; the binary only forwards `argv` and the exit code.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::betti::{betti_numbers, strata_codim};
use crate::canonical::{canonicalize, infer_cell};
use crate::cell::{dimension_compact, dimension_formula, make_cell, parse_m_vector, MonomialCell};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilburch::{psi, sample, verify_groebner_property, ParamMatrix, ParamMatrixJson};
use crate::poly::BiPoly;
use crate::projective::psi_bar;

#[derive(Debug, Parser)]
#[command(name = "gcell", version, about = "Hilbert-Burch coordinates on Gröbner cells of points in the plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldKind {
    Qq,
    Fp,
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Ground field.
    #[arg(long, value_enum)]
    field: Option<FieldKind>,
    /// Characteristic for `--field fp`.
    #[arg(long)]
    prime: Option<u64>,
}

impl FieldArgs {
    /// `None` when neither flag is given.
    fn resolve(&self) -> Result<Option<Field>> {
        match (self.field, self.prime) {
            (None, None) => Ok(None),
            (Some(FieldKind::Qq), None) => Ok(Some(Field::Rationals)),
            (Some(FieldKind::Qq), Some(p)) => Err(Error::Parse {
                input: p.to_string(),
                reason: "--prime requires --field fp".into(),
            }),
            (Some(FieldKind::Fp), None) => Err(Error::Parse {
                input: "fp".into(),
                reason: "--field fp requires --prime".into(),
            }),
            (_, Some(p)) => Field::prime(p).map(Some),
        }
    }

    fn resolve_or_rationals(&self) -> Result<Field> {
        Ok(self.resolve()?.unwrap_or(Field::Rationals))
    }
}

#[derive(Debug, Args)]
struct MatrixArgs {
    /// m-vector, e.g. `0,2,3,5`; must agree with the matrix file when both are given.
    #[arg(long)]
    m: Option<String>,
    /// ParamMatrix JSON file.
    #[arg(long)]
    matrix: PathBuf,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integer data of the cell: h, U, b, N, special indices.
    Cell {
        #[arg(long)]
        m: String,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of the cell with both closed forms and the bounds.
    Dim {
        #[arg(long)]
        m: String,
        #[arg(long)]
        json: bool,
    },
    /// Random points of the cell.
    Sample {
        #[arg(long)]
        m: String,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long)]
        json: bool,
    },
    /// Signed maximal minors of X + A.
    Psi {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Homogenize into K[x,y,z].
        #[arg(long)]
        homogeneous: bool,
    },
    /// Canonical matrix of the ideal spanned by a generator file.
    Canonicalize {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        m: Option<String>,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        json: bool,
    },
    /// Graded Betti numbers of the homogeneous ideal of A.
    Betti {
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// Checks that the minors of X + A form a Gröbner basis with initial ideal I0.
    Verify {
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// Codimension of Betti strata, `--beta 8=1,11=0`.
    StrataCodim {
        #[arg(long)]
        m: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub m: Vec<u32>,
    pub t: usize,
    pub d: Vec<u32>,
    pub lex_segment: bool,
    pub n: u64,
    pub h: Vec<u64>,
    #[serde(rename = "U")]
    pub degree_matrix: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
    /// Present for lex-segment cells only.
    #[serde(rename = "N")]
    pub dimension: Option<u64>,
    pub parameter_count: u64,
    pub bounds: Option<(u64, u64)>,
    pub special_i: Vec<usize>,
    pub special_j: Vec<usize>,
    pub lex_betti: Option<BTreeMap<u32, usize>>,
    pub below_diagonal_linear: usize,
    pub below_diagonal_zero: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub m: Vec<u32>,
    pub n: u64,
    #[serde(rename = "N")]
    pub dimension: u64,
    pub closed_form: i64,
    pub compact_form: i64,
    pub bounds: Option<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiReport {
    pub m: Vec<u32>,
    pub homogeneous: bool,
    pub f: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalReport {
    pub matrix: ParamMatrixJson,
    pub f: Vec<String>,
    pub moves: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexBaseline {
    pub beta0: BTreeMap<u32, usize>,
    pub beta1: BTreeMap<u32, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub beta0: BTreeMap<u32, usize>,
    pub beta1: BTreeMap<u32, usize>,
    pub lex_baseline: LexBaseline,
    pub per_degree_codim: BTreeMap<u32, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataReport {
    pub m: Vec<u32>,
    pub codim: BTreeMap<u32, i64>,
    pub total: i64,
}

pub const VERIFY_OK: &str = "OK: in(I_t(X+A)) = I0; GB certified via t S-pairs";

/// Parses `argv` (including the program name), writes results to `out`
/// and diagnostics to `err`, and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "IO_ERROR: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command) -> Result<String> {
    match cmd {
        Command::Cell { m, json } => {
            let report = cell_report(&parse_m_vector(&m)?)?;
            if json {
                to_json(&report)
            } else {
                Ok(render_cell(&report))
            }
        }
        Command::Dim { m, json } => {
            let cell = parse_m_vector(&m)?;
            let h = cell.hilbert_function();
            let report = DimReport {
                m: cell.m().to_vec(),
                n: cell.colength(),
                dimension: cell.dimension()?,
                closed_form: dimension_formula(cell.colength(), &h),
                compact_form: dimension_compact(&h),
                bounds: cell.dimension_bounds().ok(),
            };
            if json {
                to_json(&report)
            } else {
                let mut s = format!("n = {}\nN = {}\n", report.n, report.dimension);
                s += &format!("closed form = {}\ncompact form = {}\n", report.closed_form, report.compact_form);
                if let Some((lo, hi)) = report.bounds {
                    s += &format!("bounds: {lo} <= N <= {hi}\n");
                }
                Ok(s)
            }
        }
        Command::Sample { m, field, seed, trials, json } => {
            let cell = parse_m_vector(&m)?;
            let field = field.resolve_or_rationals()?;
            let samples: Vec<ParamMatrix> = (0..trials).map(|k| sample(&cell, field, seed ^ k)).collect();
            if json {
                if trials == 1 {
                    to_json(&samples[0].to_json())
                } else {
                    to_json(&samples.iter().map(ParamMatrix::to_json).collect::<Vec<_>>())
                }
            } else {
                let mut s = String::new();
                for (k, a) in samples.iter().enumerate() {
                    if trials > 1 {
                        s += &format!("# trial {k} (seed {})\n", seed ^ k as u64);
                    }
                    s += &render_table(&a.to_strings());
                }
                Ok(s)
            }
        }
        Command::Psi { matrix, homogeneous } => {
            let a = load_matrix(&matrix)?;
            let f: Vec<String> = if homogeneous {
                psi_bar(&a)?.iter().map(ToString::to_string).collect()
            } else {
                psi(&a)?.f.iter().map(ToString::to_string).collect()
            };
            let report = PsiReport { m: a.cell().m().to_vec(), homogeneous, f };
            if matrix.json {
                to_json(&report)
            } else {
                Ok(render_list(if homogeneous { "F" } else { "f" }, &report.f))
            }
        }
        Command::Canonicalize { gens, m, field, json } => {
            let field = field.resolve_or_rationals()?;
            let gens = read_generators(&gens, field)?;
            let cell = match m {
                Some(m) => parse_m_vector(&m)?,
                None => infer_cell(&gens)?,
            };
            let c = canonicalize(&gens, &cell)?;
            let f = psi(&c.matrix)?.f.iter().map(ToString::to_string).collect();
            let report = CanonicalReport { matrix: c.matrix.to_json(), f, moves: c.moves };
            if json {
                to_json(&report)
            } else {
                let mut s = format!("m = {:?}\nA =\n", cell.m());
                s += &render_table(&report.matrix.entries);
                s += &render_list("f", &report.f);
                s += &format!("moves = {}\n", report.moves.len());
                Ok(s)
            }
        }
        Command::Betti { matrix } => {
            let a = load_matrix(&matrix)?;
            let table = betti_numbers(&a)?;
            let report = BettiReport {
                beta0: table.beta0,
                beta1: table.beta1,
                lex_baseline: LexBaseline { beta0: table.lex_beta0, beta1: table.lex_beta1 },
                per_degree_codim: table.per_degree_codim,
            };
            if matrix.json {
                to_json(&report)
            } else {
                Ok(render_betti(&report))
            }
        }
        Command::Verify { matrix } => {
            let a = load_matrix(&matrix)?;
            let basis = psi(&a)?;
            if !verify_groebner_property(&basis)? {
                return Err(Error::NotGroebner("an S-pair of consecutive minors does not reduce to 0".into()));
            }
            if matrix.json {
                to_json(&serde_json::json!({ "ok": true, "message": VERIFY_OK }))
            } else {
                Ok(format!("{VERIFY_OK}\n"))
            }
        }
        Command::StrataCodim { m, beta, json } => {
            let cell = parse_m_vector(&m)?;
            let mut codim = BTreeMap::new();
            for (j, u) in parse_beta(&beta)? {
                codim.insert(j, strata_codim(&cell, j, u)?);
            }
            let report = StrataReport { m: cell.m().to_vec(), total: codim.values().sum(), codim };
            if json {
                to_json(&report)
            } else {
                let rows: Vec<Vec<String>> = std::iter::once(vec!["j".to_string(), "codim".to_string()])
                    .chain(report.codim.iter().map(|(j, c)| vec![j.to_string(), c.to_string()]))
                    .collect();
                Ok(render_table(&rows) + &format!("total = {}\n", report.total))
            }
        }
    }
}

pub fn cell_report(cell: &MonomialCell) -> Result<CellReport> {
    let lex = cell.is_lex_segment();
    let (si, sj) = cell.special_indices();
    Ok(CellReport {
        m: cell.m().to_vec(),
        t: cell.t(),
        d: cell.d(),
        lex_segment: lex,
        n: cell.colength(),
        h: cell.hilbert_function(),
        degree_matrix: cell.degree_matrix(),
        b: cell.bound_matrix(),
        dimension: if lex { Some(cell.dimension()?) } else { None },
        parameter_count: cell.parameter_count(),
        bounds: cell.dimension_bounds().ok(),
        special_i: si.into_iter().collect(),
        special_j: sj.into_iter().collect(),
        lex_betti: cell.lex_betti().ok(),
        below_diagonal_linear: cell.below_diagonal_linear_slots(),
        below_diagonal_zero: cell.below_diagonal_zero_slots(),
    })
}

/// Parses `8=1,11=0`.
pub fn parse_beta(s: &str) -> Result<Vec<(u32, i64)>> {
    s.split(',')
        .map(|part| {
            let bad = || Error::Parse { input: part.to_string(), reason: "expected j=u".into() };
            let (j, u) = part.split_once('=').ok_or_else(bad)?;
            Ok((j.trim().parse().map_err(|_| bad())?, u.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

/// One polynomial per line; `#` starts a comment.
pub fn parse_generators(text: &str, field: Field) -> Result<Vec<BiPoly>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| BiPoly::parse(field, l))
        .collect()
}

fn read_generators(path: &Path, field: Field) -> Result<Vec<BiPoly>> {
    parse_generators(&read(path)?, field)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_matrix(args: &MatrixArgs) -> Result<ParamMatrix> {
    let doc: ParamMatrixJson = serde_json::from_str(&read(&args.matrix)?)
        .map_err(|e| Error::BadMatrix(format!("{}: {e}", args.matrix.display())))?;
    if let Some(m) = &args.m {
        let cell = parse_m_vector(m)?;
        if cell.m() != doc.m.as_slice() {
            return Err(Error::BadMVector(format!("--m {:?} differs from matrix file m {:?}", cell.m(), doc.m)));
        }
    } else {
        make_cell(&doc.m)?;
    }
    doc.into_matrix(args.field.resolve()?)
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::InternalReductionFailure(format!("serialization: {e}")))
}

/// Right-aligned columns separated by two spaces.
fn render_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().zip(&widths).map(|(v, &w)| format!("{v:>w$}")).collect();
        s += line.join("  ").trim_end();
        s.push('\n');
    }
    s
}

fn render_list(name: &str, items: &[String]) -> String {
    items.iter().enumerate().map(|(i, f)| format!("{name}{i} = {f}\n")).collect()
}

fn render_matrix(name: &str, m: &[Vec<i64>]) -> String {
    let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    format!("{name} =\n{}", render_table(&rows))
}

fn render_cell(r: &CellReport) -> String {
    let join = |v: &[u64]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let mut s = format!("m = {:?}\nt = {}\nd = {:?}\n", r.m, r.t, r.d);
    s += &format!("lex-segment = {}\nn = {}\nh = ({})\n", r.lex_segment, r.n, join(&r.h));
    s += &render_matrix("U", &r.degree_matrix);
    s += &render_matrix("b", &r.b);
    match r.dimension {
        Some(n) => s += &format!("N = {n}\n"),
        None => s += &format!("N = n/a (parameter count {})\n", r.parameter_count),
    }
    if let Some((lo, hi)) = r.bounds {
        s += &format!("bounds: {lo} <= N <= {hi}\n");
    }
    s += &format!("I = {:?}\nJ = {:?}\n", r.special_i, r.special_j);
    s += &format!(
        "below diagonal: {} slots admitting degree 1, {} forced zeros\n",
        r.below_diagonal_linear, r.below_diagonal_zero
    );
    s
}

fn render_betti(r: &BettiReport) -> String {
    let mut degrees: Vec<u32> = r.lex_baseline.beta0.keys().chain(r.lex_baseline.beta1.keys()).copied().collect();
    degrees.sort_unstable();
    degrees.dedup();
    let g = |m: &BTreeMap<u32, usize>, j: u32| m.get(&j).copied().unwrap_or(0).to_string();
    let mut rows = vec![["j", "beta0", "beta1", "lex beta0", "lex beta1", "codim"].map(String::from).to_vec()];
    for j in degrees {
        rows.push(vec![
            j.to_string(),
            g(&r.beta0, j),
            g(&r.beta1, j),
            g(&r.lex_baseline.beta0, j),
            g(&r.lex_baseline.beta1, j),
            r.per_degree_codim.get(&j).copied().unwrap_or(0).to_string(),
        ]);
    }
    render_table(&rows)
}
