use clap::{Args, Parser, Subcommand, ValueEnum};
use deltasq::conjectures::{self, Grid, VerificationReport, STATEMENTS};
use deltasq::macdonald::cache;
use deltasq::paths::{self, Family, SchroederFamily};
use deltasq::{Error, QTPoly};
use rayon::prelude::*;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Lattice paths, q,t-polynomial tables and exact checks of Delta and Delta
/// square identities.
#[derive(Parser, Debug)]
#[command(name = "deltasq", version)]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for cached H̃ tables; overrides the DELTASQ_CACHE_DIR variable.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every object of a path family, one record per line.
    Enumerate {
        family: EnumFamily,
        /// Parameters in the family's order: m n k for PLD/PLSQE, p n l d [k] for SQE/DDd.
        positional: Vec<u32>,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a registered statement over a parameter grid (flags are upper bounds).
    Verify {
        /// A statement id, or "all".
        statement: String,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Report ms = 0 so that the output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// CSV of q,t-polynomials for one n and every admissible (k, p, d, l).
    Table {
        kind: TableKind,
        #[command(flatten)]
        params: Params,
    },
    /// Manage the on-disk H̃ tables.
    Cache {
        action: CacheAction,
        /// Largest degree to build or check.
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
}

#[derive(Args, Debug, Default, Clone, Copy)]
struct Params {
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "verbatim")]
#[allow(clippy::upper_case_acronyms)]
enum EnumFamily {
    #[value(alias = "pld")]
    PLD,
    #[value(alias = "plsqe")]
    PLSQE,
    #[value(alias = "sqe")]
    SQE,
    #[value(alias = "ddd")]
    DDd,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "verbatim")]
#[allow(clippy::upper_case_acronyms)]
enum TableKind {
    #[value(alias = "f")]
    F,
    #[value(alias = "s")]
    S,
    #[value(alias = "sqe")]
    SQE,
    #[value(alias = "ddd")]
    DDd,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CacheAction {
    Build,
    Check,
    Clear,
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Bound(..) | Error::DegreeMismatch(..) => Failure::Usage(e.to_string()),
            e => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().expect("thread pool is configured once");
    }
    if let Some(dir) = &cli.cache_dir {
        cache::set_cache_dir(Some(dir.clone()));
    }
    let out = io::stdout();
    let mut w = BufWriter::new(out.lock());
    let result = match cli.command {
        Command::Enumerate { family, positional, params, format } => {
            enumerate(&mut w, family, &positional, params, format)
        }
        Command::Verify { statement, params, j, format, no_timing } => {
            verify(&mut w, &statement, params, j, format, no_timing)
        }
        Command::Table { kind, params } => table(&mut w, kind, params),
        Command::Cache { action, n } => cache_cmd(&mut w, action, n),
    };
    let flushed = w.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Ok(()), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(Failure::Mismatch(msg)), _) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Other(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Merges positional values into the named slots, in `order`.
fn resolve(positional: &[u32], flags: Params, order: &[&str]) -> Result<Params, Failure> {
    if positional.len() > order.len() {
        return Err(Failure::Usage(format!("expected at most {} positional values: {}", order.len(), order.join(" "))));
    }
    let mut p = flags;
    for (&v, &name) in positional.iter().zip(order) {
        let slot = match name {
            "m" => &mut p.m,
            "n" => &mut p.n,
            "k" => &mut p.k,
            "p" => &mut p.p,
            "d" => &mut p.d,
            _ => &mut p.l,
        };
        if slot.is_some_and(|x| x != v) {
            return Err(Failure::Usage(format!("{name} given twice with different values")));
        }
        *slot = Some(v);
    }
    Ok(p)
}

fn need_n(p: &Params) -> Result<u32, Failure> {
    match p.n {
        Some(n) if n >= 1 => Ok(n),
        Some(_) => Err(Failure::Usage("n must be at least 1".into())),
        None => Err(Failure::Usage("missing --n".into())),
    }
}

fn enumerate(w: &mut impl Write, family: EnumFamily, positional: &[u32], flags: Params, format: Format) -> Outcome {
    let labelled = matches!(family, EnumFamily::PLD | EnumFamily::PLSQE);
    let order: &[&str] = if labelled { &["m", "n", "k"] } else { &["p", "n", "l", "d", "k"] };
    let p = resolve(positional, flags, order)?;
    let n = need_n(&p)? as usize;
    let rows: Vec<(serde_json::Value, String, String)> = if labelled {
        let (m, k) = (p.m.unwrap_or(0) as usize, p.k.unwrap_or(0) as usize);
        if k >= n {
            return Err(Failure::Usage(format!("need k < n, got k={k}, n={n}")));
        }
        let fam = if family == EnumFamily::PLD { Family::Pld } else { Family::Plsqe };
        paths::enumerate(fam, m, n, k)?
            .iter()
            .map(|x| (x.to_json(), x.to_csv_row(), format!("{} area={} dinv={}", x.to_json(), x.area(), x.dinv())))
            .collect()
    } else {
        let (pp, l, d) = (p.p.unwrap_or(0) as usize, p.l.unwrap_or(0) as usize, p.d.unwrap_or(0) as usize);
        let fam = match (family, p.k) {
            (EnumFamily::DDd, Some(k)) => SchroederFamily::DyckRefined(k as usize),
            (EnumFamily::DDd, None) => return Err(Failure::Usage("DDd needs --k".into())),
            (_, Some(k)) => SchroederFamily::Refined(k as usize),
            (_, None) => SchroederFamily::All,
        };
        paths::enumerate_schroeder(fam, pp, n, l, d)?
            .iter()
            .map(|x| (x.to_json(), x.to_csv_row(), format!("{} area={} dinv={}", x.to_json(), x.area(), x.dinv())))
            .collect()
    };
    match format {
        Format::Json => {
            for (j, _, _) in &rows {
                writeln!(w, "{j}")?;
            }
            writeln!(w, "{}", serde_json::json!({ "count": rows.len() }))?;
        }
        Format::Csv => {
            let header = if labelled { paths::LabelledPath::CSV_HEADER } else { paths::SchroederPath::CSV_HEADER };
            writeln!(w, "{header}")?;
            for (_, c, _) in &rows {
                writeln!(w, "{c}")?;
            }
            writeln!(w, "# count {}", rows.len())?;
        }
        Format::Text => {
            for (_, _, t) in &rows {
                writeln!(w, "{t}")?;
            }
            writeln!(w, "count: {}", rows.len())?;
        }
    }
    Ok(())
}

fn verify(w: &mut impl Write, statement: &str, p: Params, j: Option<u32>, format: Format, no_timing: bool) -> Outcome {
    let statements: Vec<&str> = if statement == "all" {
        STATEMENTS.to_vec()
    } else if STATEMENTS.contains(&statement) {
        vec![statement]
    } else {
        return Err(Failure::Usage(format!("unknown statement '{statement}'; known: all, {}", STATEMENTS.join(", "))));
    };
    let grid = Grid { m: p.m.unwrap_or(0), n: need_n(&p)?, p: p.p.unwrap_or(0), k: p.k, d: p.d, l: p.l, j };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for s in statements {
        reports.extend(conjectures::run_statement(s, &grid)?);
    }
    if no_timing {
        for r in &mut reports {
            r.ms = 0;
        }
    }
    match format {
        Format::Csv => {
            writeln!(w, "{}", VerificationReport::CSV_HEADER)?;
            for r in &reports {
                writeln!(w, "{}", r.to_csv_row())?;
            }
        }
        Format::Json => {
            for r in &reports {
                writeln!(w, "{}", r.to_jsonl())?;
            }
        }
        Format::Text => {
            for r in &reports {
                let status = if r.is_equal() { "equal" } else { "MISMATCH" };
                writeln!(w, "{status:8} {} {}", r.statement, r.params_string())?;
                if let Some(wit) = &r.witness {
                    writeln!(w, "         {wit}")?;
                }
            }
        }
    }
    let bad = reports.iter().filter(|r| !r.is_equal()).count();
    if bad > 0 {
        return Err(Failure::Mismatch(format!("{bad} of {} checks found a mismatch", reports.len())));
    }
    eprintln!("{} checks, all equal", reports.len());
    Ok(())
}

fn pick(fixed: Option<u32>, range: std::ops::RangeInclusive<u32>) -> Vec<u32> {
    match fixed {
        Some(v) => range.filter(|&x| x == v).collect(),
        None => range.collect(),
    }
}

fn table(w: &mut impl Write, kind: TableKind, p: Params) -> Outcome {
    let n = need_n(&p)?;
    let max_p = p.p.unwrap_or(0);
    if n + max_p > deltasq::macdonald::MAX_DEGREE {
        return Err(Failure::Usage(format!("n + p = {} exceeds {}", n + max_p, deltasq::macdonald::MAX_DEGREE)));
    }
    // (k, p, d, l) in output order
    let mut keys = Vec::new();
    for pp in 0..=max_p {
        for k in pick(p.k, 1..=n) {
            match kind {
                TableKind::F | TableKind::S => {
                    let dmax = if kind == TableKind::F { n + pp } else { n };
                    for d in pick(p.d, 0..=dmax) {
                        for l in pick(p.l, 0..=n - k) {
                            keys.push((k, pp, d, l));
                        }
                    }
                }
                TableKind::SQE | TableKind::DDd => {
                    for d in pick(p.d, 0..=n) {
                        for l in pick(p.l, 0..=n - 1) {
                            keys.push((k, pp, d, l));
                        }
                    }
                }
            }
        }
    }
    let values: Vec<deltasq::Result<QTPoly>> = keys
        .par_iter()
        .map(|&(k, pp, d, l)| match kind {
            TableKind::F => conjectures::f_recursive(n, k, pp, d, l),
            TableKind::S => conjectures::s_recursive(n, k, pp, d, l),
            TableKind::SQE => paths::qt_polynomial(
                SchroederFamily::Refined(k as usize),
                pp as usize,
                n as usize,
                l as usize,
                d as usize,
            ),
            TableKind::DDd => paths::qt_polynomial(
                SchroederFamily::DyckRefined(k as usize),
                pp as usize,
                n as usize,
                l as usize,
                d as usize,
            ),
        })
        .collect();
    writeln!(w, "n,k,p,d,l,value")?;
    for ((k, pp, d, l), v) in keys.iter().zip(values) {
        let v = v?;
        if kind == TableKind::S && v.is_zero() {
            continue;
        }
        writeln!(w, "{n},{k},{pp},{d},{l},\"{v}\"")?;
    }
    Ok(())
}

fn cache_cmd(w: &mut impl Write, action: CacheAction, n: u32) -> Outcome {
    let dir = cache::cache_dir()
        .ok_or_else(|| Failure::Usage(format!("no cache directory: pass --cache-dir or set {}", cache::CACHE_ENV)))?;
    match action {
        CacheAction::Build => {
            let built = cache::build(&dir, n)?;
            writeln!(w, "built degrees {built:?} in {}", dir.display())?;
        }
        CacheAction::Check => match cache::check(&dir, n) {
            Ok(found) if found.is_empty() => writeln!(w, "nothing to check")?,
            Ok(found) => writeln!(w, "checked degrees {found:?}: ok")?,
            Err(e) => return Err(Failure::Mismatch(format!("cache check failed: {e}"))),
        },
        CacheAction::Clear => {
            let removed = cache::clear(&dir)?;
            writeln!(w, "removed {removed} files")?;
        }
    }
    Ok(())
}
