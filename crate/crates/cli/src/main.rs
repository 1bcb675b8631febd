use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hrl::classify::{classify_all, phi_delta_primary_via, Classification, Variant, Verdict, Witness};
use hrl::construct::{direct_product, quotient, unit_quotient, zmod};
use hrl::corpus::{corpus_from_env, CORPUS_DIR_VAR};
use hrl::ideals::{enumerate_hyperideals, parse_ideal, radical, Ideal};
use hrl::maps::{parse_expansion, Expansion, Reduction};
use hrl::ring::{verify_krasner, HyperRing};
use hrl::set::IndexSet;
use hrl::theorems::{reports_to_json, run_suite, Outcome, SuiteConfig, TheoremReport};

#[derive(Parser)]
#[command(name = "hrl", version, about = "Finite Krasner hyperrings and their φ-δ-primary hyperideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Corpus {
    Default,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Krasner hyperring axioms
    Verify {
        ring: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// List every hyperideal
    Ideals {
        ring: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Classify one or all proper hyperideals
    Classify {
        ring: PathBuf,
        /// Members of the hyperideal, e.g. 0,4,8; all proper hyperideals when absent
        #[arg(long)]
        ideal: Option<String>,
        /// empty | zero | identity | pow:k | omega
        #[arg(long)]
        phi: Option<String>,
        /// id | rad | res:<ideal> | ann2 | add:<ideal>
        #[arg(long)]
        delta: Option<String>,
        /// definition | colon_union | colon_dichotomy | ideal_pairs | colon_ideal
        #[arg(long)]
        variant: Option<String>,
        /// Exponents for the n-almost notions, e.g. 2..5
        #[arg(long)]
        n_range: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Sweep the structural theorems over rings
    Theorems {
        rings: Vec<PathBuf>,
        /// Comma-separated theorem ids
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum)]
        corpus: Option<Corpus>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Generate a ring file
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Quotient by a hyperideal
    Quotient {
        ring: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Direct product of two rings
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// The residue ring Z_n
    Zmod {
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Z_n modulo a subgroup of its units
    UnitQuotient {
        #[arg(long = "mod")]
        modulus: usize,
        #[arg(long)]
        subgroup: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Input problems; reported with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(err: E) -> Self {
        InputError(err.to_string())
    }
}

type Run = Result<ExitCode, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Run {
    match command {
        Command::Verify { ring, format } => verify(&ring, format),
        Command::Ideals { ring, format } => ideals(&ring, format),
        Command::Classify { ring, ideal, phi, delta, variant, n_range, format } => {
            let ring = load(&ring)?;
            classify(&ring, Selection { ideal, phi, delta, variant, n_range }, format)
        }
        Command::Theorems { rings, only, corpus, format } => theorems(&rings, only, corpus, format),
        Command::Gen { kind } => match kind {
            GenKind::Zmod { n, output } => {
                if !(2..=64).contains(&n) {
                    return Err(InputError(format!("modulus {n} outside 2..=64")));
                }
                emit(&zmod(n), output.as_deref())
            }
            GenKind::UnitQuotient { modulus, subgroup, output } => {
                if !(2..=64).contains(&modulus) {
                    return Err(InputError(format!("modulus {modulus} outside 2..=64")));
                }
                let base = zmod(modulus);
                let group = parse_members(&subgroup, modulus)?;
                emit(&unit_quotient(&base, group)?, output.as_deref())
            }
        },
        Command::Quotient { ring, ideal, output } => {
            let ring = load(&ring)?;
            let modulus = parse_ideal(&ring, &ideal).map_err(InputError)?;
            emit(quotient(&ring, modulus)?.ring(), output.as_deref())
        }
        Command::Product { first, second, output } => {
            let (first, second) = (load(&first)?, load(&second)?);
            emit(direct_product(&first, &second)?.ring(), output.as_deref())
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn say(text: &str) {
    let _ = std::io::Write::write_all(&mut std::io::stdout().lock(), text.as_bytes());
}

fn read(path: &Path) -> Result<HyperRing, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    HyperRing::from_json(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Reads a ring file and requires every axiom to hold.
fn load(path: &Path) -> Result<HyperRing, InputError> {
    let ring = read(path)?;
    let report = verify_krasner(&ring);
    if !report.all_pass() {
        return Err(InputError(format!("{}: not a Krasner hyperring: {report}", path.display())));
    }
    Ok(ring)
}

fn parse_members(text: &str, n: usize) -> Result<IndexSet, InputError> {
    let mut set = IndexSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let a: usize = part.parse().map_err(|_| InputError(format!("`{part}` is not an element index")))?;
        if a >= n {
            return Err(InputError(format!("element {a} out of range for {n} elements")));
        }
        set.insert(a);
    }
    Ok(set)
}

fn emit(ring: &HyperRing, output: Option<&Path>) -> Run {
    let text = ring.to_json();
    match output {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| InputError(format!("{}: {e}", path.display())))?,
        None => say(&(text + "\n")),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(path: &Path, format: Format) -> Run {
    let ring = read(path)?;
    let report = verify_krasner(&ring);
    match format {
        Format::Table => say(&format!("{report}\n")),
        Format::Json => say(&format!("{}\n", serde_json::to_string_pretty(&report)?)),
    }
    Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn ideals(path: &Path, format: Format) -> Run {
    let ring = load(path)?;
    let lattice = enumerate_hyperideals(&ring);
    match format {
        Format::Table => {
            let mut out = format!("{} hyperideals of {}\n", lattice.len(), ring.name());
            for &n in lattice {
                let tag = if n.is_proper(&ring) { "" } else { "  (whole ring)" };
                let _ = writeln!(out, "  {:<24} radical {}{tag}", n.to_string(), radical(&ring, n));
            }
            say(&out);
        }
        Format::Json => {
            let rows: Vec<_> = lattice
                .iter()
                .map(|&n| json!({ "members": n, "proper": n.is_proper(&ring), "radical": radical(&ring, n) }))
                .collect();
            say(&format!("{}\n", serde_json::to_string_pretty(&json!({ "ring": ring.name(), "hyperideals": rows }))?));
        }
    }
    Ok(ExitCode::SUCCESS)
}

struct Selection {
    ideal: Option<String>,
    phi: Option<String>,
    delta: Option<String>,
    variant: Option<String>,
    n_range: Option<String>,
}

fn parse_range(text: &str) -> Result<RangeInclusive<u32>, InputError> {
    let bad = || InputError(format!("n-range `{text}` is not of the form a..b with 2 ≤ a ≤ b"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo < 2 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn classify(ring: &HyperRing, sel: Selection, format: Format) -> Run {
    let targets: Vec<Ideal> = match &sel.ideal {
        Some(text) => vec![parse_ideal(ring, text).map_err(InputError)?],
        None => enumerate_hyperideals(ring).iter().copied().filter(|n| n.is_proper(ring)).collect(),
    };
    let select: Option<(Reduction, Expansion)> = match (&sel.phi, &sel.delta) {
        (None, None) => None,
        (phi, delta) => {
            Some((phi.as_deref().unwrap_or("empty").parse()?, parse_expansion(ring, delta.as_deref().unwrap_or("id"))?))
        }
    };
    let variant: Option<Variant> = sel.variant.as_deref().map(str::parse).transpose()?;
    if variant.is_some() && select.is_none() {
        return Err(InputError("--variant needs --phi or --delta".into()));
    }
    let range = sel.n_range.as_deref().map(parse_range).transpose()?;

    let mut rows = Vec::new();
    for &n in &targets {
        let c = classify_all(ring, n, range.clone(), select.as_ref().map(|(p, d)| (p, d)))?;
        let via = match (variant, &select) {
            (Some(v), Some((phi, delta))) => Some((v, phi_delta_primary_via(ring, n, phi, delta, v)?)),
            _ => None,
        };
        rows.push((c, via));
    }
    match format {
        Format::Table => {
            let mut out = String::new();
            for (c, via) in &rows {
                table_row(&mut out, ring, c, via.as_ref());
            }
            say(&out);
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(c, via)| {
                    let mut v = serde_json::to_value(c).expect("classification serialises");
                    if let Some((variant, verdict)) = via {
                        v["variant"] = json!({ "name": variant.name(), "verdict": verdict });
                    }
                    v
                })
                .collect();
            say(&format!(
                "{}\n",
                serde_json::to_string_pretty(&json!({ "ring": ring.name(), "classifications": items }))?
            ));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn show_verdict(v: &Verdict) -> String {
    match v.witness {
        None => v.holds.to_string(),
        Some(Witness::Pair { a, b }) => format!("{} (witness {a},{b})", v.holds),
        Some(w) => format!("{} (witness {w})", v.holds),
    }
}

fn table_row(out: &mut String, ring: &HyperRing, c: &Classification, via: Option<&(Variant, Verdict)>) {
    let _ = writeln!(out, "hyperideal {}  labels {}", c.ideal, ring.show(c.ideal.members()));
    let mut line = |name: &str, v: &Verdict| {
        let _ = writeln!(out, "  {name:<22} {}", show_verdict(v));
    };
    line("prime:", &c.prime);
    line("weakly-prime:", &c.weakly_prime);
    line("almost-prime:", &c.almost_prime);
    for (n, v) in &c.n_almost_prime {
        line(&format!("{n}-almost-prime:"), v);
    }
    line("w-prime:", &c.w_prime);
    line("primary:", &c.primary);
    line("weakly-primary:", &c.weakly_primary);
    line("almost-primary:", &c.almost_primary);
    for (n, v) in &c.n_almost_primary {
        line(&format!("{n}-almost-primary:"), v);
    }
    line("w-primary:", &c.w_primary);
    if let Some(s) = &c.selected {
        let _ = writeln!(out, "  with φ = {}, δ = {}", s.phi, s.delta);
        let mut line = |name: &str, v: &Verdict| {
            let _ = writeln!(out, "  {name:<22} {}", show_verdict(v));
        };
        line("φ-prime:", &s.phi_prime);
        line("φ-primary:", &s.phi_primary);
        line("δ-primary:", &s.delta_primary);
        line("φ-δ-primary:", &s.phi_delta_primary);
        if let Some((variant, verdict)) = via {
            line(&format!("{}:", variant.name()), verdict);
        }
    }
}

fn theorems(paths: &[PathBuf], only: Option<String>, corpus: Option<Corpus>, format: Format) -> Run {
    let mut rings = Vec::new();
    if corpus == Some(Corpus::Default) || paths.is_empty() {
        rings = corpus_from_env().map_err(|(p, e)| InputError(format!("{CORPUS_DIR_VAR} {}: {e}", p.display())))?;
    }
    for path in paths {
        rings.push(load(path)?);
    }
    let ids: Vec<String> = only
        .map(|s| s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect())
        .unwrap_or_default();
    let reports = run_suite(&rings, &ids, &SuiteConfig::default())?;
    match format {
        Format::Table => say(&reports_table(&reports)),
        Format::Json => say(&format!("{}\n", reports_to_json(&reports))),
    }
    let failed = reports.iter().any(TheoremReport::is_counterexample);
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn reports_table(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    let (mut verified, mut failed, mut skipped) = (0, 0, 0);
    for r in reports {
        let status = match &r.verdict {
            Outcome::Verified => {
                verified += 1;
                "verified".to_string()
            }
            Outcome::Counterexample => {
                failed += 1;
                "COUNTEREXAMPLE".to_string()
            }
            Outcome::Skipped(why) => {
                skipped += 1;
                format!("skipped ({why})")
            }
        };
        let _ = writeln!(
            out,
            "{:<26} {:<34} {:>7} instances {:>5} violations  {status}",
            r.theorem, r.ring, r.instances, r.violations
        );
        for w in &r.witnesses {
            let mut parts = Vec::new();
            if let Some(phi) = &w.phi {
                parts.push(format!("φ={phi}"));
            }
            if let Some(delta) = &w.delta {
                parts.push(format!("δ={delta}"));
            }
            if !w.ideals.is_empty() {
                let ideals: Vec<String> = w.ideals.iter().map(Ideal::to_string).collect();
                parts.push(format!("ideals {}", ideals.join(" ")));
            }
            if !w.elements.is_empty() {
                parts.push(format!("elements {:?}", w.elements));
            }
            let _ = writeln!(out, "    {}: {}", parts.join(", "), w.message);
        }
    }
    let _ = writeln!(
        out,
        "{} reports: {verified} verified, {failed} with counterexamples, {skipped} skipped",
        reports.len()
    );
    out
}
