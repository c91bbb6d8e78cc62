//! Command-line front end: load structures from manifest files or the
//! built-in library, run the validators and computations, and emit reports.
//!
//! Exit codes: 0 everything passed, 1 axiom or theorem failures, 2 input
//! errors (unreadable or malformed manifests, wrong structure kind), 3
//! resource guard (requested bounds too large for exhaustive checking).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use picard2::gamma;
use picard2::library::{self, BuiltIn};
use picard2::manifest::{self, Manifest, Structure};
use picard2::monoidal;
use picard2::postnikov;
use picard2::report::ValidationReport;

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "picard2",
    about = "Finite models of permutative categories and Gray-monoids: validation, Postnikov data, and level comparisons",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Window radius for built-in examples with integer objects.
    #[arg(long, global = true, default_value_t = library::DEFAULT_WINDOW)]
    window: i64,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Suspend,
    Loop,
    Discretize,
    Truncate,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaCheck {
    Segal,
    Compare,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full axiom validator for a manifest and list every violation.
    Validate { path: String },
    /// Compute homotopy groups, k0, k1i1, flags, and the no-go verdict.
    Postnikov { path: String },
    /// Apply a structure functor and write the resulting manifest.
    Functor {
        which: Which,
        path: String,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Segal or suspension-comparison checks over the level data of a
    /// permutative category.
    Gamma {
        path: String,
        check: GammaCheck,
        /// Highest pointed-set level.
        #[arg(long, default_value_t = 3)]
        levels: usize,
        /// Highest simplicial level for the comparison.
        #[arg(long, default_value_t = 3)]
        simplicial: usize,
    },
    /// List the built-in examples, optionally writing them out as files.
    Examples {
        /// Write each built-in manifest into this directory.
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

struct InputError(String);

fn load(path: &str, window: i64) -> Result<Structure, InputError> {
    let name = path.strip_prefix("examples/").unwrap_or(path);
    if !Path::new(path).exists() {
        if let Some(b) = library::builtin(name, window) {
            return Ok(match b {
                BuiltIn::PermCat(c) => Structure::PermCat(c),
                BuiltIn::Pgm(d) => Structure::Pgm(d),
            });
        }
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read '{path}': {e}")))?;
    let m = manifest::parse(&text).map_err(|e| InputError(format!("cannot parse '{path}': {e}")))?;
    manifest::to_structure(&m).map_err(|e| InputError(format!("cannot load '{path}': {e}")))
}

/// Computations assume validated tables; gate them behind the validator.
fn require_valid(s: &Structure) -> Result<(), ValidationReport> {
    let rep = match s {
        Structure::Category(c) => picard2::fincat::validate_category(c),
        Structure::TwoCategory(d) => picard2::two_cat::validate_2category(d),
        Structure::PermCat(c) => monoidal::validate_permcat(c),
        Structure::Pgm(d) => monoidal::validate_pgm(d),
    };
    if rep.is_valid() {
        Ok(())
    } else {
        Err(rep)
    }
}

fn print_validation(rep: &ValidationReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(rep).expect("report serializes"));
    } else {
        print!("{rep}");
    }
}

fn cmd_validate(path: &str, window: i64, json: bool) -> u8 {
    let s = match load(path, window) {
        Ok(s) => s,
        Err(InputError(msg)) => {
            eprintln!("{msg}");
            return EXIT_INPUT;
        }
    };
    let rep = match &s {
        Structure::Category(c) => picard2::fincat::validate_category(c),
        Structure::TwoCategory(d) => picard2::two_cat::validate_2category(d),
        Structure::PermCat(c) => monoidal::validate_permcat(c),
        Structure::Pgm(d) => monoidal::validate_pgm(d),
    };
    if !json {
        println!("kind: {}", s.kind());
    }
    print_validation(&rep, json);
    if rep.is_valid() {
        0
    } else {
        EXIT_FAIL
    }
}

fn cmd_postnikov(path: &str, window: i64, json: bool) -> u8 {
    let s = match load(path, window) {
        Ok(s) => s,
        Err(InputError(msg)) => {
            eprintln!("{msg}");
            return EXIT_INPUT;
        }
    };
    if let Err(rep) = require_valid(&s) {
        eprintln!("input fails validation:");
        eprint!("{rep}");
        return EXIT_FAIL;
    }
    let (data, noskel) = match &s {
        Structure::PermCat(c) => (
            postnikov::analyze_permcat(c),
            postnikov::verify_noskel(&monoidal::discretize(c)),
        ),
        Structure::Pgm(d) => (postnikov::analyze_pgm(d), postnikov::verify_noskel(d)),
        _ => {
            eprintln!("postnikov needs a permutative category or a permutative Gray-monoid");
            return EXIT_INPUT;
        }
    };
    let (data, noskel) = match (data, noskel) {
        (Ok(d), Ok(n)) => (d, n),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("postnikov computation failed: {e}");
            return EXIT_FAIL;
        }
    };
    let report = data.report();
    if json {
        let combined = serde_json::json!({
            "report": report,
            "noskel": noskel,
        });
        println!("{}", serde_json::to_string_pretty(&combined).expect("report serializes"));
    } else {
        println!("pi0: {} ({} classes)", data.pi0.presentation, data.pi0.len());
        println!("pi1: {} ({} classes)", data.pi1.presentation, data.pi1.len());
        println!("pi2: {} ({} classes)", data.pi2.presentation, data.pi2.len());
        println!(
            "k0:   {:?}{}",
            report.k0.values,
            if report.k0.direct.iter().all(|d| *d) { "" } else { " (some values extended additively)" }
        );
        println!("k1i1: {:?}", report.k1i1.values);
        println!(
            "flags: picard={} skeletal={} k0_surjective={} quadratic_ok={}",
            report.is_picard, report.is_skeletal, report.k0_surjective, report.quadratic_ok
        );
        match (noskel.applicable, noskel.k1i1_trivial, noskel.shortcut_confirmed) {
            (true, Some(t), Some(s)) => println!(
                "no-go check: hypotheses hold; k1i1 trivial = {t}, skeletal shortcut confirmed = {s}"
            ),
            _ => println!(
                "no-go check: not applicable (skeletal={}, k0 surjective={})",
                noskel.skeletal, noskel.k0_surjective
            ),
        }
    }
    let ok = report.quadratic_ok
        && noskel
            .k1i1_trivial
            .map(|t| t && noskel.shortcut_confirmed == Some(true))
            .unwrap_or(true);
    if ok {
        0
    } else {
        EXIT_FAIL
    }
}

fn cmd_functor(which: Which, path: &str, output: Option<&Path>, window: i64) -> u8 {
    let s = match load(path, window) {
        Ok(s) => s,
        Err(InputError(msg)) => {
            eprintln!("{msg}");
            return EXIT_INPUT;
        }
    };
    if let Err(rep) = require_valid(&s) {
        eprintln!("input fails validation:");
        eprint!("{rep}");
        return EXIT_FAIL;
    }
    let result: Result<Structure, String> = match (which, &s) {
        (Which::Suspend, Structure::PermCat(c)) => Ok(Structure::Pgm(monoidal::suspend(c))),
        (Which::Discretize, Structure::PermCat(c)) => Ok(Structure::Pgm(monoidal::discretize(c))),
        (Which::Loop, Structure::Pgm(d)) => monoidal::loop_category(d)
            .map(Structure::PermCat)
            .map_err(|e| e.to_string()),
        (Which::Truncate, Structure::Pgm(d)) => monoidal::truncate(d)
            .map(Structure::PermCat)
            .map_err(|e| e.to_string()),
        _ => Err("functor does not apply to this structure kind".to_string()),
    };
    let out = match result {
        Ok(out) => out,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_INPUT;
        }
    };
    // The image of a valid structure must itself validate.
    let rep = match &out {
        Structure::PermCat(c) => monoidal::validate_permcat(c),
        Structure::Pgm(d) => monoidal::validate_pgm(d),
        _ => unreachable!(),
    };
    if !rep.is_valid() {
        eprintln!("functor output failed validation:\n{rep}");
        return EXIT_FAIL;
    }
    let text = manifest::to_canonical_json(&manifest::from_structure(&out));
    match output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("cannot write '{}': {e}", p.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{text}"),
    }
    0
}

fn cmd_gamma(path: &str, check: GammaCheck, levels: usize, simplicial: usize, window: i64, json: bool) -> u8 {
    let s = match load(path, window) {
        Ok(s) => s,
        Err(InputError(msg)) => {
            eprintln!("{msg}");
            return EXIT_INPUT;
        }
    };
    let Structure::PermCat(c) = s else {
        eprintln!("gamma checks need a permutative-category manifest");
        return EXIT_INPUT;
    };
    if let Err(rep) = require_valid(&Structure::PermCat(c.clone())) {
        eprintln!("input fails validation:");
        eprint!("{rep}");
        return EXIT_FAIL;
    }
    match check {
        GammaCheck::Segal => {
            let mors = c.base.num_morphisms() as u128;
            if mors.checked_pow(levels as u32).is_none_or(|n| n > 40_000_000) {
                eprintln!(
                    "resource guard: {mors} morphisms at level {levels} is too many tuples; lower --levels"
                );
                return EXIT_RESOURCE;
            }
            let g = gamma::build_cpowers(&c, levels);
            match gamma::segal_check(&g) {
                Ok(rep) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
                    } else {
                        for l in &rep.levels {
                            println!(
                                "level {}: {}{}",
                                l.level,
                                if l.is_isomorphism { "isomorphism" } else { "FAILED" },
                                if l.detail.is_empty() { String::new() } else { format!(" ({})", l.detail) }
                            );
                        }
                    }
                    if rep.all_isomorphisms() {
                        0
                    } else {
                        EXIT_FAIL
                    }
                }
                Err(e) => {
                    eprintln!("resource guard: {e}");
                    EXIT_RESOURCE
                }
            }
        }
        GammaCheck::Compare => {
            if gamma::compare_work_estimate(&c, levels, simplicial) > 200_000_000 {
                eprintln!(
                    "resource guard: comparison at levels {levels}/{simplicial} is too large; lower the bounds or shrink the window"
                );
                return EXIT_RESOURCE;
            }
            let rep = gamma::compare_suspension(&c, levels, simplicial);
            if json {
                println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
            } else {
                for l in &rep.levels {
                    println!(
                        "(m={}, p={}): {} checked, {} untested, {} mismatches{}",
                        l.m,
                        l.p,
                        l.checked,
                        l.skipped,
                        l.mismatches.len(),
                        if l.mismatches.is_empty() {
                            String::new()
                        } else {
                            format!("; first: {}", l.mismatches[0])
                        }
                    );
                }
            }
            if rep.zero_mismatches() {
                0
            } else {
                EXIT_FAIL
            }
        }
    }
}

fn cmd_examples(write: Option<&Path>, window: i64, json: bool) -> u8 {
    let entries: Vec<(&str, &str)> = vec![
        ("sphere1", "integer objects on a window, automorphisms Z/2, symmetry xy mod 2"),
        ("cex", "objects Z/2, automorphisms Z/2, nontrivial self-symmetry of the non-unit"),
        ("builder_split", "objects Z/2, automorphisms Z/2, zero form"),
        ("builder_z4", "objects Z/4, automorphisms Z/2, form xy mod 2"),
        ("builder_klein", "objects Z/2 x Z/2, automorphisms Z/2, symplectic form"),
        ("sigma_cex", "one-object Gray-monoid with hom-category cex"),
        ("d_sphere1", "sphere1 as a Gray-monoid with identity interchange"),
        ("d_sphere1_x_sigma_cex", "product of d_sphere1 with sigma_cex"),
    ];
    if json {
        let listing: Vec<serde_json::Value> = entries
            .iter()
            .map(|(n, d)| serde_json::json!({"name": n, "description": d}))
            .collect();
        println!("{}", serde_json::to_string_pretty(&listing).expect("listing serializes"));
    } else {
        for (n, d) in &entries {
            println!("{n:24} {d}");
        }
    }
    if let Some(dir) = write {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("cannot create '{}': {e}", dir.display());
            return EXIT_INPUT;
        }
        for (name, _) in &entries {
            let m: Manifest = match library::builtin(name, window).expect("listed builtin") {
                BuiltIn::PermCat(c) => manifest::from_structure(&Structure::PermCat(c)),
                BuiltIn::Pgm(d) => manifest::from_structure(&Structure::Pgm(d)),
            };
            let path = dir.join(format!("{name}.json"));
            if let Err(e) = std::fs::write(&path, manifest::to_canonical_json(&m)) {
                eprintln!("cannot write '{}': {e}", path.display());
                return EXIT_INPUT;
            }
        }
    }
    0
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.window < 0 {
        eprintln!("--window must be nonnegative");
        return ExitCode::from(EXIT_INPUT);
    }
    if cli.window > 64 {
        eprintln!("resource guard: --window above 64 makes the tables impractically large");
        return ExitCode::from(EXIT_RESOURCE);
    }
    let code = match &cli.command {
        Command::Validate { path } => cmd_validate(path, cli.window, cli.json),
        Command::Postnikov { path } => cmd_postnikov(path, cli.window, cli.json),
        Command::Functor { which, path, output } => {
            cmd_functor(*which, path, output.as_deref(), cli.window)
        }
        Command::Gamma { path, check, levels, simplicial } => {
            cmd_gamma(path, *check, *levels, *simplicial, cli.window, cli.json)
        }
        Command::Examples { write } => cmd_examples(write.as_deref(), cli.window, cli.json),
    };
    ExitCode::from(code)
}
