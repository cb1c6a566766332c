//! The `klcat` command line: argument parsing, command execution and output.

pub mod output;

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use klcat::algebra::{check_conjectures, AlgebraError, BasedAlgebra, FDModule, Status, DEFAULT_RESOLUTION_CAP};
use klcat::coxeter::{CoxeterError, CoxeterSystem, ReducedWord, DEFAULT_ORDER_CAP};
use klcat::delorme::{characters_matrix, delorme_table, ext_ll_table, verma_in_simples, TransitionMatrix};
use klcat::group::ElementTable;
use klcat::hc::KlvDataset;
use klcat::kl::{kl_polynomial, mu, KlError, KlTable};
use klcat::verify::{run_suite, Suite};

use output::{int_value, laurent_value, poly_value, CellType, Payload};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "klcat", version, about = "Kazhdan-Lusztig and Delorme polynomial tables, Ext series and checks")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct GlobalOpts {
    /// Weyl group type, e.g. A3, B2, G2 or A1xA1.
    #[arg(long = "type", global = true)]
    pub ty: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Refuse to enumerate groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub max_order: u128,
    /// Worker threads for table construction.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Report wall-clock time (in the JSON envelope, or on stderr for CSV).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group elements in canonical order.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Kazhdan-Lusztig polynomials.
    Kl {
        #[command(subcommand)]
        cmd: KlCmd,
    },
    /// Delorme polynomials a_{x,y}.
    Delorme {
        #[command(subcommand)]
        cmd: DelormeCmd,
    },
    /// Simple modules in the Verma basis, or the inverse.
    Characters {
        #[arg(long)]
        inverse: bool,
    },
    /// Ext Poincare series between simple modules.
    ExtLl,
    /// Run verification suites over the full table.
    Verify {
        #[arg(long, value_delimiter = ',', default_values_t = Suite::ALL.to_vec())]
        suite: Vec<Suite>,
    },
    /// Finite-dimensional algebras given by quivers with relations.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Kazhdan-Lusztig-Vogan datasets.
    Hc {
        #[command(subcommand)]
        cmd: HcCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    Enumerate,
}

#[derive(Debug, Subcommand)]
pub enum KlCmd {
    /// One polynomial P_{x,y}; words are space or comma separated, `e` or empty for the identity.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    Table,
}

#[derive(Debug, Subcommand)]
pub enum DelormeCmd {
    Table,
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    Analyze {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = vec![1u8, 2, 3, 4, 5])]
        conjectures: Vec<u8>,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION_CAP)]
        max_resolution: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum HcCmd {
    Eval {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Cap(_) => EXIT_CAP,
        }
    }
}

impl From<CoxeterError> for CliError {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::OrderExceedsCap { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<KlError> for CliError {
    fn from(e: KlError) -> Self {
        match e {
            KlError::Coxeter(c) => c.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotFiniteDimensional { .. } | AlgebraError::ResolutionTruncated { .. } => {
                CliError::Cap(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Result of one invocation: bytes for stdout and stderr, and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

/// Everything a command produces before formatting.
struct Report {
    command: String,
    ty: Option<String>,
    order: Option<Vec<String>>,
    payload: Payload,
    verdicts: Vec<Value>,
    warnings: Vec<String>,
    info: Value,
    code: i32,
}

impl Report {
    fn new(command: &str, payload: Payload) -> Self {
        Self {
            command: command.to_string(),
            ty: None,
            order: None,
            payload,
            verdicts: Vec::new(),
            warnings: Vec::new(),
            info: Value::Null,
            code: EXIT_OK,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    code: if code == 0 { 0 } else { EXIT_INPUT },
                    stdout: Vec::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text.into_bytes(),
                    stderr: String::new(),
                }
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let result = match cli.global.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| execute(cli)),
            Err(e) => Err(CliError::Input(format!("cannot start thread pool: {e}"))),
        },
        None => execute(cli),
    };
    let elapsed = start.elapsed().as_secs_f64();
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: e.exit_code(),
                stdout: Vec::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let mut stderr = String::new();
    let body = match cli.global.format {
        Format::Json => {
            let mut env = json!({
                "command": report.command,
                "type": report.ty,
                "order": report.order,
                "payload": report.payload.to_json(),
                "verdicts": report.verdicts,
                "warnings": report.warnings,
                "info": report.info,
            });
            if cli.global.timing {
                env["timing"] = json!({ "seconds": elapsed });
            }
            let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            for w in &report.warnings {
                stderr.push_str(&format!("warning: {w}\n"));
            }
            if cli.global.timing {
                stderr.push_str(&format!("timing: {elapsed:.6} s\n"));
            }
            report.payload.to_csv()
        }
    };
    let stdout = match &cli.global.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body.as_bytes()) {
                return Outcome {
                    code: EXIT_INPUT,
                    stdout: Vec::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                };
            }
            Vec::new()
        }
        None => body.into_bytes(),
    };
    Outcome {
        code: report.code,
        stdout,
        stderr,
    }
}

fn system(opts: &GlobalOpts) -> Result<CoxeterSystem, CliError> {
    let ty = opts
        .ty
        .as_deref()
        .ok_or_else(|| CliError::Input("this command needs --type".into()))?;
    Ok(CoxeterSystem::from_type_str(ty)?)
}

fn label(word: &ReducedWord) -> String {
    if word.0.is_empty() {
        "e".to_string()
    } else {
        word.to_string()
    }
}

fn parse_word(s: &str) -> Result<ReducedWord, CliError> {
    if s.trim() == "e" {
        return Ok(ReducedWord(Vec::new()));
    }
    Ok(s.parse()?)
}

fn full_table(sys: &CoxeterSystem, opts: &GlobalOpts) -> Result<Arc<ElementTable>, CliError> {
    Ok(Arc::new(ElementTable::full(sys, opts.max_order)?))
}

fn weyl_report(command: &str, sys: &CoxeterSystem, table: &ElementTable, payload: Payload) -> Report {
    let mut r = Report::new(command, payload);
    r.ty = Some(sys.coxeter_type().to_string());
    r.order = Some(table.words().iter().map(label).collect());
    r
}

fn poly_matrix(table: &ElementTable, entries: Vec<Vec<Value>>, entry: CellType) -> Payload {
    Payload::Matrix {
        entry,
        labels: table.words().iter().map(label).collect(),
        entries,
    }
}

fn int_matrix(table: &ElementTable, m: &TransitionMatrix) -> Payload {
    poly_matrix(
        table,
        m.entries().iter().map(|r| r.iter().map(int_value).collect()).collect(),
        CellType::Int,
    )
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let opts = &cli.global;
    match &cli.command {
        Command::Group { cmd: GroupCmd::Enumerate } => {
            let sys = system(opts)?;
            let table = full_table(&sys, opts)?;
            let rows = (0..table.len())
                .map(|i| {
                    vec![
                        Value::from(i),
                        Value::String(label(table.word(i))),
                        Value::from(table.length(i)),
                    ]
                })
                .collect();
            let payload = Payload::Records {
                columns: vec![
                    ("index".into(), CellType::Int),
                    ("word".into(), CellType::Label),
                    ("length".into(), CellType::Int),
                ],
                rows,
            };
            let mut r = weyl_report("group enumerate", &sys, &table, payload);
            r.info = json!({ "order": table.len() });
            Ok(r)
        }
        Command::Kl { cmd: KlCmd::Pair { x, y } } => {
            let sys = system(opts)?;
            let (wx, wy) = (parse_word(x)?, parse_word(y)?);
            let (ex, ey) = (sys.from_word(&wx)?, sys.from_word(&wy)?);
            let p = kl_polynomial(&sys, &ex, &ey)?;
            let m = mu(&sys, &ex, &ey)?;
            let (lx, ly) = (label(&sys.reduced_word(&ex)), label(&sys.reduced_word(&ey)));
            let payload = Payload::Records {
                columns: vec![
                    ("x".into(), CellType::Label),
                    ("y".into(), CellType::Label),
                    ("p".into(), CellType::Poly),
                    ("mu".into(), CellType::Int),
                ],
                rows: vec![vec![Value::String(lx), Value::String(ly), poly_value(&p), int_value(&m)]],
            };
            let mut r = Report::new("kl pair", payload);
            r.ty = Some(sys.coxeter_type().to_string());
            r.info = json!({ "bruhatLeq": sys.bruhat_leq(&ex, &ey)? });
            Ok(r)
        }
        Command::Kl { cmd: KlCmd::Table } => {
            let sys = system(opts)?;
            let table = full_table(&sys, opts)?;
            let kl = KlTable::build(table.clone())?;
            let n = table.len();
            let entries = (0..n).map(|x| (0..n).map(|y| poly_value(kl.p(x, y))).collect()).collect();
            let mut r = weyl_report("kl table", &sys, &table, poly_matrix(&table, entries, CellType::Poly));
            r.info = json!({ "comparablePairs": kl.pair_count() });
            Ok(r)
        }
        Command::Delorme { cmd: DelormeCmd::Table } => {
            let sys = system(opts)?;
            let table = full_table(&sys, opts)?;
            let kl = KlTable::build(table.clone())?;
            let a = delorme_table(&kl).map_err(|e| CliError::Input(e.to_string()))?;
            let entries = a.iter().map(|r| r.iter().map(poly_value).collect()).collect();
            Ok(weyl_report("delorme table", &sys, &table, poly_matrix(&table, entries, CellType::Poly)))
        }
        Command::Characters { inverse } => {
            let sys = system(opts)?;
            let table = full_table(&sys, opts)?;
            let kl = KlTable::build(table.clone())?;
            let m = if *inverse { verma_in_simples(&kl) } else { characters_matrix(&kl) };
            let name = if *inverse { "characters --inverse" } else { "characters" };
            Ok(weyl_report(name, &sys, &table, int_matrix(&table, &m)))
        }
        Command::ExtLl => {
            let sys = system(opts)?;
            let table = full_table(&sys, opts)?;
            let kl = KlTable::build(table.clone())?;
            let e = ext_ll_table(&kl).map_err(|e| CliError::Input(e.to_string()))?;
            let entries = e.iter().map(|r| r.iter().map(poly_value).collect()).collect();
            Ok(weyl_report("ext-ll", &sys, &table, poly_matrix(&table, entries, CellType::Poly)))
        }
        Command::Verify { suite } => {
            let sys = system(opts)?;
            let table = full_table(&sys, opts)?;
            let kl = KlTable::build(table.clone())?;
            let mut rows = Vec::new();
            let mut verdicts = Vec::new();
            let mut all = true;
            for &s in suite {
                let rep = run_suite(s, &kl);
                all &= rep.passed();
                verdicts.push(json!({ "suite": s.to_string(), "passed": rep.passed() }));
                for p in rep.properties {
                    rows.push(vec![
                        Value::String(s.to_string()),
                        Value::String(p.property.clone()),
                        Value::Bool(p.passed),
                        Value::from(p.checked),
                        Value::from(p.failures),
                        serde_json::to_value(&p.witnesses).expect("witnesses serialize"),
                    ]);
                }
            }
            let payload = Payload::Records {
                columns: vec![
                    ("suite".into(), CellType::Text),
                    ("property".into(), CellType::Text),
                    ("passed".into(), CellType::Bool),
                    ("checked".into(), CellType::Int),
                    ("failures".into(), CellType::Int),
                    ("witnesses".into(), CellType::Json),
                ],
                rows,
            };
            let mut r = weyl_report("verify", &sys, &table, payload);
            r.verdicts = verdicts;
            r.code = if all { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(r)
        }
        Command::Algebra {
            cmd:
                AlgebraCmd::Analyze {
                    file,
                    conjectures,
                    max_resolution,
                },
        } => {
            let text = read(file)?;
            let alg = BasedAlgebra::from_json(&text)?;
            let report = check_conjectures(&alg, conjectures, *max_resolution);
            let rows = report
                .verdicts
                .iter()
                .map(|v| {
                    vec![
                        Value::from(v.conjecture),
                        serde_json::to_value(v.status).expect("status serializes"),
                        Value::from(v.checked),
                        serde_json::to_value(&v.witnesses).expect("witnesses serialize"),
                        v.detail.clone(),
                    ]
                })
                .collect();
            let payload = Payload::Records {
                columns: vec![
                    ("conjecture".into(), CellType::Int),
                    ("status".into(), CellType::Text),
                    ("checked".into(), CellType::Int),
                    ("witnesses".into(), CellType::Json),
                    ("detail".into(), CellType::Json),
                ],
                rows,
            };
            let projective: Vec<Vec<usize>> = (0..alg.vertex_count())
                .map(|i| FDModule::projective(&alg, i).map(|p| p.dims().to_vec()))
                .collect::<Result<_, _>>()?;
            let mut r = Report::new("algebra analyze", payload);
            r.verdicts = report
                .verdicts
                .iter()
                .map(|v| json!({ "conjecture": v.conjecture, "status": v.status }))
                .collect();
            r.info = json!({
                "vertices": report.vertices,
                "dimension": alg.dimension(),
                "degreeDims": alg.degree_dims(),
                "projectiveDims": projective,
                "applicable": report.applicable,
                "note": report.note,
                "projectiveDimensions": report.projective_dimensions,
                "order": report.order,
            });
            if let Some(note) = &report.note {
                r.warnings.push(note.clone());
            }
            r.code = if report.verdicts.iter().any(|v| v.status == Status::Fail) {
                EXIT_CHECK_FAILED
            } else if report.verdicts.iter().any(|v| v.status == Status::Inapplicable) {
                EXIT_CAP
            } else {
                EXIT_OK
            };
            Ok(r)
        }
        Command::Hc { cmd: HcCmd::Eval { file } } => {
            let text = read(file)?;
            let ds = KlvDataset::from_json(&text).map_err(|e| CliError::Input(e.to_string()))?;
            let table = ds.conjecture_5_prime();
            let payload = Payload::Matrix {
                entry: CellType::Laurent,
                labels: table.labels.clone(),
                entries: table
                    .entries
                    .iter()
                    .map(|r| r.iter().map(laurent_value).collect())
                    .collect(),
            };
            let mut r = Report::new("hc eval", payload);
            r.order = Some(table.labels.clone());
            r.info = json!({ "symmetric": table.symmetric, "diagonal": table.diagonal });
            r.code = if table.warnings.is_empty() { EXIT_OK } else { EXIT_CHECK_FAILED };
            r.warnings = table.warnings;
            Ok(r)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}
