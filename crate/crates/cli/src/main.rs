//! `nree8`: reproduce and inspect the table of integral rootless lattices
//! spanned by two `EE8` sublattices.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use nree8_core::catalog::{self, CatalogId};
use nree8_core::exact::RatMatrix;
use nree8_core::lattice::{Lattice, LatticeJson, FINGERPRINT_NORM_BOUND};
use nree8_core::leech::{self, MogArray};
use nree8_core::nree8::{self, fixtures, search, table, Source, TableEntry};
use nree8_core::shortvec;

#[derive(Parser)]
#[command(name = "nree8", version, about = "Integral rootless sums of two EE8 lattices")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FixtureArgs {
    /// Fixture directory (default: $NREE8_FIXTURES, then the bundled one).
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

impl FixtureArgs {
    fn dir(&self) -> PathBuf {
        self.fixtures.clone().unwrap_or_else(fixtures::fixtures_dir)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build or replay all eleven rows and verify them.
    VerifyTable {
        #[command(flatten)]
        fx: FixtureArgs,
        /// Also run the Leech norm-4 census (several minutes).
        #[arg(long)]
        slow: bool,
    },
    /// Build or replay one row and verify it.
    Row {
        /// Row name, e.g. DIH6(16) or DIH6_16.
        #[arg(long)]
        name: String,
        #[command(flatten)]
        fx: FixtureArgs,
        /// Print the M and N bases as MOG arrays (Leech rows only).
        #[arg(long)]
        mog: bool,
    },
    /// Inspect a lattice file (lattice JSON, or a basis in matrix text format).
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// Vector counts by norm up to a bound.
    Shortvec {
        file: PathBuf,
        #[arg(long)]
        bound: i64,
    },
    /// Named lattices.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Randomized search for a Leech witness of one row.
    Search {
        #[arg(long)]
        row: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Candidates per frame octad.
        #[arg(long, default_value_t = 20_000)]
        budget: usize,
        /// Write the witness to the fixture directory.
        #[arg(long)]
        write: bool,
        #[command(flatten)]
        fx: FixtureArgs,
    },
    /// Write a lattice as JSON: a catalog id, or `L`, `M` or `N` of a row.
    Export {
        /// Catalog id (EE8, A2xE6, BW16, ...) or row name.
        target: String,
        /// For rows: which lattice of the pair.
        #[arg(long, default_value = "l", value_parser = ["l", "m", "n"])]
        part: String,
        #[command(flatten)]
        fx: FixtureArgs,
        /// Output file (default: stdout).
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Rank, determinant, Smith sequence, integrality, rootlessness.
    Info { file: PathBuf },
    /// Gram matrix in matrix text format.
    Gram { file: PathBuf },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Lattice JSON and certificate for a catalog id.
    Show { id: String },
}

/// Failure modes mapped to exit codes.
enum Fail {
    /// Verification ran and something failed.
    Verify,
    /// Bad input or usage.
    Usage(String),
}

type Out = Result<(), Fail>;

fn usage(e: impl std::fmt::Display) -> Fail {
    Fail::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let r = match &cli.command {
        Command::VerifyTable { fx, slow } => verify_table(&fx.dir(), *slow, cli.json),
        Command::Row { name, fx, mog } => row_cmd(name, &fx.dir(), *mog, cli.json),
        Command::Lattice { cmd } => match cmd {
            LatticeCmd::Info { file } => lattice_info(file, cli.json),
            LatticeCmd::Gram { file } => lattice_gram(file),
        },
        Command::Shortvec { file, bound } => shortvec_cmd(file, *bound, cli.json),
        Command::Catalog {
            cmd: CatalogCmd::Show { id },
        } => catalog_show(id),
        Command::Search {
            row,
            seed,
            budget,
            write,
            fx,
        } => search_cmd(row, *seed, *budget, write.then(|| fx.dir()), cli.json),
        Command::Export { target, part, fx, out } => export(target, part, &fx.dir(), out.as_deref()),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verify) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

// ---------------------------------------------------------------- table

fn source_str(s: &Source) -> String {
    match s {
        Source::Builder => "builder".into(),
        Source::Fixture(p) => format!("fixture {p}"),
        Source::Missing => "no witness".into(),
    }
}

fn entry_json(e: &TableEntry) -> Value {
    let computed = e.record.as_ref().map(|r| {
        json!({
            "dihedral_order": r.invariants.dihedral_order,
            "rank": r.invariants.rank,
            "smith": r.invariants.smith.to_string(),
            "rootless": r.invariants.rootless,
            "in_leech": r.invariants.in_leech,
        })
    });
    json!({
        "row": e.row.name,
        "source": source_str(&e.source),
        "pass": e.report.passed(),
        "computed": computed,
        "checks": e.report.checks,
    })
}

fn table_line(e: &TableEntry) -> String {
    let r = &e.row;
    let (smith, leech) = match &e.record {
        Some(rec) => (rec.invariants.smith.to_string(), if rec.invariants.in_leech { "yes" } else { "no" }),
        None => ("-".to_string(), "-"),
    };
    format!(
        "{:<14} {:<6} {:<5} {:<18} {:<26} {:<6} {:<5} {}",
        r.name,
        format!("Dih{}", r.dihedral_order),
        r.rank,
        smith,
        r.descriptor(),
        leech,
        if e.report.passed() { "PASS" } else { "FAIL" },
        source_str(&e.source)
    )
}

fn verify_table(dir: &Path, slow: bool, as_json: bool) -> Out {
    let entries = nree8::full_table(dir);
    let census = if slow { Some(leech_census()?) } else { None };
    let all_pass = entries.iter().all(|e| e.report.passed()) && census.is_none_or(|c| c == 196_560);
    if as_json {
        print_json(&json!({
            "rows": entries.iter().map(entry_json).collect::<Vec<_>>(),
            "leech_norm4": census,
            "pass": all_pass,
        }));
    } else {
        println!(
            "{:<14} {:<6} {:<5} {:<18} {:<26} {:<6} {:<5} source",
            "row", "group", "rank", "Smith", "isometry type", "Leech", ""
        );
        for e in &entries {
            println!("{}", table_line(e));
        }
        for e in entries.iter().filter(|e| !e.report.passed()) {
            println!();
            print!("{}", e.report);
        }
        if let Some(c) = census {
            println!("\nLeech norm-4 vectors: {c} (expected 196560)");
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Fail::Verify)
    }
}

/// Enumerates norm-4 Leech vectors with a progress line on stderr.
fn leech_census() -> Result<u64, Fail> {
    let done = Arc::new(AtomicBool::new(false));
    let flag = done.clone();
    let start = Instant::now();
    let ticker = std::thread::spawn(move || {
        while !flag.load(Ordering::Relaxed) {
            std::thread::sleep(Duration::from_millis(250));
            eprint!("\rLeech norm-4 census: {:.0?} elapsed", start.elapsed());
        }
        eprintln!();
    });
    let r = shortvec::norm_profile(&leech::leech(), 4);
    done.store(true, Ordering::Relaxed);
    let _ = ticker.join();
    let p = r.map_err(usage)?;
    Ok(p.get(&4).copied().unwrap_or(0))
}

fn print_mog(title: &str, l: &Lattice) {
    println!("{title}:");
    for row in l.basis().to_i64_rows() {
        match MogArray::from_vector(&row) {
            Ok(a) => println!("{a}"),
            Err(e) => println!("{e}"),
        }
    }
}

fn row_cmd(name: &str, dir: &Path, mog: bool, as_json: bool) -> Out {
    let row = table::row(name).map_err(usage)?;
    let e = nree8::run_row(&row, dir);
    if as_json {
        print_json(&entry_json(&e));
    } else {
        println!("source: {}", source_str(&e.source));
        print!("{}", e.report);
        if mog {
            match &e.record {
                Some(rec) if rec.l.ambient_dim() == 24 => {
                    print_mog("M", &rec.m);
                    print_mog("N", &rec.n);
                }
                _ => println!("(no Leech coordinates for this row)"),
            }
        }
    }
    if e.report.passed() {
        Ok(())
    } else {
        Err(Fail::Verify)
    }
}

// -------------------------------------------------------------- lattices

/// Lattice JSON, or a basis in matrix text format taken at scale 1.
fn read_lattice(path: &Path) -> Result<Lattice, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let bad = |msg: String| usage(format!("{}: {msg}", path.display()));
    if text.trim_start().starts_with('{') {
        let j: LatticeJson = serde_json::from_str(&text)
            .map_err(|e| bad(format!("line {}: {e}", e.line())))?;
        Lattice::from_json(&j).map_err(|e| bad(e.to_string()))
    } else {
        let m = RatMatrix::parse(&text).map_err(|e| bad(e.to_string()))?;
        let basis = m
            .to_int()
            .ok_or_else(|| bad("basis entries must be integers".into()))?;
        let j = LatticeJson {
            ambient_dim: basis.cols(),
            scale_num: 1,
            scale_den: 1,
            basis: basis.to_i64_rows(),
        };
        Lattice::from_json(&j).map_err(|e| bad(e.to_string()))
    }
}

fn info_json(l: &Lattice) -> Result<Value, Fail> {
    let smith = l.discriminant_group().map_err(usage)?;
    let integral = l.is_integral();
    let rootless = if integral {
        Some(shortvec::is_rootless(l).map_err(usage)?)
    } else {
        None
    };
    let min = if integral && l.rank() > 0 {
        Some(shortvec::min_norm(l).map_err(usage)?.to_string())
    } else {
        None
    };
    Ok(json!({
        "ambient_dim": l.ambient_dim(),
        "scale": l.scale().to_string(),
        "rank": l.rank(),
        "det": l.det().to_string(),
        "smith": smith.to_string(),
        "integral": integral,
        "even": l.is_even(),
        "rootless": rootless,
        "min_norm": min,
    }))
}

fn print_info(v: &Value) {
    for key in ["ambient_dim", "scale", "rank", "det", "smith", "integral", "even", "rootless", "min_norm"] {
        let s = match &v[key] {
            Value::String(s) => s.clone(),
            Value::Null => "n/a".into(),
            other => other.to_string(),
        };
        println!("{key:<12} {s}");
    }
}

fn lattice_info(file: &Path, as_json: bool) -> Out {
    let l = read_lattice(file)?;
    let v = info_json(&l)?;
    if as_json {
        print_json(&v);
    } else {
        print_info(&v);
    }
    Ok(())
}

fn lattice_gram(file: &Path) -> Out {
    let l = read_lattice(file)?;
    print!("{}", l.gram().to_text());
    Ok(())
}

fn shortvec_cmd(file: &Path, bound: i64, as_json: bool) -> Out {
    let l = read_lattice(file)?;
    let p = shortvec::norm_profile(&l, bound).map_err(usage)?;
    if as_json {
        let m: serde_json::Map<String, Value> = p.iter().map(|(n, c)| (n.to_string(), json!(c))).collect();
        print_json(&Value::Object(m));
    } else {
        println!("{:>6} {:>10}", "norm", "count");
        for (n, c) in &p {
            println!("{n:>6} {c:>10}");
        }
    }
    Ok(())
}

fn catalog_show(id: &str) -> Out {
    let id: CatalogId = id.parse().map_err(usage)?;
    let l = catalog::lattice(&id).map_err(usage)?;
    let mut cert = info_json(&l)?;
    let fp = l.fingerprint(FINGERPRINT_NORM_BOUND).map_err(usage)?;
    cert["norm_counts"] = json!(fp.counts);
    print_json(&json!({
        "id": id.to_string(),
        "lattice": l.to_json().map_err(usage)?,
        "certificate": cert,
    }));
    Ok(())
}

// ---------------------------------------------------------------- search

fn search_cmd(name: &str, seed: u64, budget: usize, write: Option<PathBuf>, as_json: bool) -> Out {
    let row = table::row(name).map_err(usage)?;
    let cfg = search::SearchConfig::new(seed, budget);
    let outcome = search::search_in_leech(&row, &cfg).map_err(usage)?;
    let Some(out) = outcome else {
        if as_json {
            print_json(&json!({ "row": row.name, "found": false }));
        } else {
            println!("{}: no witness within budget {budget} (seed {seed})", row.name);
        }
        return Err(Fail::Verify);
    };
    let fx = fixtures::Fixture::from_record(&out.record, &row, seed, out.candidate)
        .expect("search records carry a witness");
    let written = match write {
        Some(dir) => Some(fixtures::save(&dir, &fx).map_err(usage)?),
        None => None,
    };
    if as_json {
        print_json(&json!({
            "row": row.name,
            "found": true,
            "candidate": out.candidate,
            "log": out.log,
            "fixture": fx,
            "written": written.map(|p| p.display().to_string()),
        }));
    } else {
        for l in &out.log {
            println!("{l}");
        }
        let mut word = String::new();
        for step in &fx.generator_word {
            let _ = write!(word, "{} ", serde_json::to_string(step).expect("steps serialize"));
        }
        println!("frame octad {:#08x}", fx.frame_octad);
        println!("word {}", word.trim_end());
        print!("{}", out.report);
        if let Some(p) = written {
            println!("wrote {}", p.display());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- export

fn export(target: &str, part: &str, dir: &Path, out: Option<&Path>) -> Out {
    let lat: Lattice = if let Ok(row) = table::row(target) {
        let e = nree8::run_row(&row, dir);
        let rec = e.record.ok_or_else(|| usage(format!("{}: {}", row.name, source_str(&e.source))))?;
        match part {
            "m" => rec.m,
            "n" => rec.n,
            _ => (*rec.l).clone(),
        }
    } else {
        let id: CatalogId = target
            .parse()
            .map_err(|_| usage(format!("'{target}' is neither a table row nor a catalog id")))?;
        (*catalog::lattice(&id).map_err(usage)?).clone()
    };
    let j = lat.to_json().map_err(usage)?;
    let text = serde_json::to_string_pretty(&j).expect("lattice JSON serializes") + "\n";
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}
