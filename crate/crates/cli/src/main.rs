use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nmds_core::constructions::{self, ConstructionId};
use nmds_core::field::{FieldContext, FieldElement};
use nmds_core::lrc;
use nmds_core::matrix::parse_hex;
use nmds_core::report::{self, Analysis, ConstructionReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod render;

/// Verify near-MDS code constructions over GF(2^m).
#[derive(Parser, Debug)]
#[command(name = "nmds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check parameters, distributions, pairing, locality and bounds.
    Verify {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print every check to stderr.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Print a generator matrix, enumerator, locality pair or bounds.
    Show {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, value_enum, default_value_t = What::Enumerator)]
        what: What,
    },
    /// Erase one coordinate of a random codeword and rebuild it.
    Repair {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, default_value_t = 0)]
        erase: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct Selection {
    /// Construction ids (comma separated).
    #[arg(long, value_delimiter = ',')]
    id: Vec<ConstructionId>,
    #[arg(long, conflicts_with = "id", required_unless_present = "id")]
    all: bool,
    /// Field degrees (comma separated).
    #[arg(long, value_delimiter = ',', default_value = "3",
          value_parser = clap::value_parser!(u32).range(2..=16))]
    m: Vec<u32>,
    /// Defining polynomial in hex, e.g. 0xB.
    #[arg(long, value_parser = parse_modulus)]
    modulus: Option<u32>,
}

fn parse_modulus(s: &str) -> Result<u32, String> {
    parse_hex(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Matrix,
    Enumerator,
    Locality,
    Bounds,
}

enum Failure {
    Usage(String),
    Mismatch,
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e)
    }
}

impl Selection {
    fn targets(&self) -> Result<Vec<(ConstructionId, Arc<FieldContext>)>, Failure> {
        let ids: Vec<ConstructionId> = if self.all {
            ConstructionId::ALL.to_vec()
        } else {
            self.id.clone()
        };
        let mut out = Vec::new();
        for &m in &self.m {
            let ctx = FieldContext::new(m, self.modulus)
                .map_err(|e| Failure::Usage(format!("m = {m}: {e}")))?;
            let ctx = Arc::new(ctx);
            out.extend(ids.iter().map(|&id| (id, ctx.clone())));
        }
        Ok(out)
    }
}

fn analyze(id: ConstructionId, ctx: &Arc<FieldContext>) -> Result<Analysis, Failure> {
    report::analyze(id, ctx)
        .map_err(|e| Failure::Internal(anyhow::anyhow!("{id}@{}: {e}", ctx.m())))
}

fn verify(
    sel: &Selection,
    format: Format,
    out: Option<&PathBuf>,
    verbose: bool,
) -> Result<(), Failure> {
    let mut reports: Vec<ConstructionReport> = Vec::new();
    let mut mismatch = false;
    for (id, ctx) in sel.targets()? {
        let a = analyze(id, &ctx)?;
        let key = format!("{id}@{}", ctx.m());
        for w in &a.warnings {
            eprintln!("warning {key}: {w}");
        }
        for c in &a.checks {
            if !c.pass && a.theorem_backed() {
                eprintln!(
                    "FAIL {key}: {} expected {} observed {}",
                    c.name, c.expected, c.observed
                );
            } else if verbose {
                let tag = if c.pass { "ok" } else { "unproved" };
                eprintln!("{tag} {key}: {} = {}", c.name, c.observed);
            }
        }
        mismatch |= !a.pass();
        reports.push(a.report());
    }
    let text = match format {
        Format::Json => render::json(&reports)?,
        Format::Csv => render::csv(&reports)?,
        Format::Markdown => render::markdown(&reports),
    };
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Internal(anyhow::anyhow!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if mismatch {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn show(sel: &Selection, what: What) -> Result<(), Failure> {
    let targets = sel.targets()?;
    let many = targets.len() > 1;
    for (id, ctx) in targets {
        if many {
            println!("{id}@{}:", ctx.m());
        }
        if what == What::Matrix {
            print!("{}", constructions::generator_matrix(id, &ctx).to_text());
            continue;
        }
        let a = analyze(id, &ctx)?;
        match what {
            What::Matrix => unreachable!(),
            What::Enumerator => println!("{}", a.verification.distribution.enumerator_string()),
            What::Locality => match &a.nmds {
                Some(nm) => println!("({}, {})", nm.locality_code.r, nm.locality_dual.r),
                None => println!("not NMDS ({})", a.class.tag.as_str()),
            },
            What::Bounds => match &a.nmds {
                Some(nm) => {
                    for (side, rep) in [("code", &nm.lrc.code), ("dual", &nm.lrc.dual)] {
                        println!(
                            "{side} [{}, {}, {}; r={}]: singleton-like rhs {}, cm rhs {} (t={}), flags {}",
                            rep.n,
                            rep.k,
                            rep.d,
                            rep.r,
                            rep.singleton_like_rhs,
                            rep.cm_rhs,
                            rep.cm_t,
                            rep.flags().join(",")
                        );
                    }
                }
                None => println!("not NMDS ({})", a.class.tag.as_str()),
            },
        }
    }
    Ok(())
}

fn hex_word(w: &[FieldElement]) -> String {
    w.iter()
        .map(|e| format!("{e:x}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn repair(sel: &Selection, erase: usize, seed: u64) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failed = false;
    for (id, ctx) in sel.targets()? {
        let key = format!("{id}@{}", ctx.m());
        let code = constructions::build(id, &ctx);
        if erase >= code.n() {
            return Err(Failure::Usage(format!(
                "--erase {erase} is out of range for {key} (n = {})",
                code.n()
            )));
        }
        let locality = lrc::locality_of_code(&code)
            .map_err(|e| Failure::Internal(anyhow::anyhow!("{key}: {e}")))?;
        let message: Vec<FieldElement> = (0..code.k())
            .map(|_| ctx.element(rng.random_range(0..ctx.q())).expect("in range"))
            .collect();
        let word = code.encode(&message);
        let out = lrc::repair_coordinate(&ctx, &locality, &word, erase)
            .map_err(|e| Failure::Internal(anyhow::anyhow!("{key}: {e}")))?;
        let terms: Vec<String> = out
            .repair_set
            .iter()
            .zip(&out.coefficients)
            .map(|(j, a)| format!("{a:#x}*c_{j}"))
            .collect();
        println!("{key}: locality {}", locality.r);
        println!("codeword {}", hex_word(&word));
        println!("erased c_{erase} = {:#x}", out.original);
        println!(
            "repair set {{{}}} ({} symbols)",
            out.repair_set
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(","),
            out.repair_set.len()
        );
        println!("c_{erase} = {}", terms.join(" + "));
        println!(
            "recovered {:#x}: {}",
            out.recovered,
            if out.ok() { "ok" } else { "MISMATCH" }
        );
        failed |= !out.ok();
    }
    if failed {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify {
            sel,
            format,
            out,
            verbose,
        } => verify(sel, *format, out.as_ref(), *verbose),
        Command::Show { sel, what } => show(sel, *what),
        Command::Repair { sel, erase, seed } => repair(sel, *erase, *seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
