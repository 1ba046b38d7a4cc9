//! Batch front-end: generate instances, run the verification suite, and run
//! the exploration probes. Exit codes: 0 all checks pass, 1 a check was
//! falsified, 2 usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tdpair::error::Error;
use tdpair::instances::{
    default_t_grid, find_antiautomorphism, scan_irreducibility, tdpair_from_module,
    tensor_module, ModuleSpec,
};
use tdpair::io::{self, rat_from_str, FactorSpec, Instance, Provenance};
use tdpair::octet::Variant;
use tdpair::report::{antiaut_record_json, run_suite, scan_record_json, SuiteReport};
use tdpair::{FieldConfig, Rat};

#[derive(Parser)]
#[command(
    name = "tdpair",
    version,
    about = "Exact verification laboratory for tridiagonal pairs of q-geometric type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file from an evaluation module or a tensor
    /// product of evaluation modules.
    Generate {
        /// Instance kind: "eval" or "tensor".
        #[arg(long)]
        kind: String,
        /// Diameter of the single evaluation module (eval kind).
        #[arg(long)]
        d: Option<usize>,
        /// Evaluation parameter of the single module (eval kind).
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        /// Tensor factors as comma-separated d:t pairs, e.g. "1:1,1:3".
        #[arg(long, allow_hyphen_values = true)]
        factors: Option<String>,
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        astar: String,
        /// Which module structure supplies the pair: "minus" or "plus".
        #[arg(long, default_value = "minus")]
        variant: String,
        /// Output path for the instance JSON.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run the full verification suite on an instance file.
    Verify {
        instance: PathBuf,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        bstar: String,
        /// Write the JSON suite report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the JSON report to stdout instead of the human summary.
        #[arg(long)]
        json: bool,
    },
    /// Empirical probes of the open problems.
    Explore {
        #[command(subcommand)]
        probe: Probe,
    },
}

#[derive(Subcommand)]
enum Probe {
    /// Scan a parameter grid for (A, A*)-irreducibility of tensor modules.
    Irreducibility {
        /// Factors as d:t pairs with exactly one t replaced by "?", the
        /// grid slot; e.g. "1:1,1:?".
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
        /// "default" for the built-in grid, or a comma-separated list of
        /// rationals; an empty list is allowed.
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        astar: String,
        #[arg(long, default_value = "minus")]
        variant: String,
        /// Write JSON lines here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Solve for an antiautomorphism fixing the instance's A and A*.
    Antiaut {
        instance: PathBuf,
        /// Write the JSON record here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Generate {
            kind,
            d,
            t,
            factors,
            q,
            a,
            astar,
            variant,
            output,
        } => generate(kind, d, t, factors, q, a, astar, variant, output),
        Command::Verify {
            instance,
            b,
            bstar,
            report,
            json,
        } => verify(&instance, &b, &bstar, report.as_deref(), json),
        Command::Explore { probe } => match probe {
            Probe::Irreducibility {
                factors,
                grid,
                q,
                a,
                astar,
                variant,
                report,
            } => explore_irreducibility(&factors, &grid, &q, &a, &astar, &variant, report.as_deref()),
            Probe::Antiaut { instance, report } => explore_antiaut(&instance, report.as_deref()),
        },
    }
}

fn parse_factor_list(s: &str) -> Result<Vec<(usize, Rat)>, Error> {
    s.split(',')
        .map(|item| {
            let (d, t) = item.split_once(':').ok_or_else(|| {
                Error::InvalidParameter(format!("factor {item:?} must have the form d:t"))
            })?;
            let d: usize = d.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("bad diameter in factor {item:?}"))
            })?;
            Ok((d, rat_from_str(t)?))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn generate(
    kind: String,
    d: Option<usize>,
    t: Option<String>,
    factors: Option<String>,
    q: String,
    a: String,
    astar: String,
    variant: String,
    output: PathBuf,
) -> Result<u8, Error> {
    let cfg = FieldConfig::new(rat_from_str(&q)?)?;
    let a = rat_from_str(&a)?;
    let astar = rat_from_str(&astar)?;
    let variant: Variant = variant.parse()?;
    let factor_list = match kind.as_str() {
        "eval" => {
            let d = d.ok_or_else(|| Error::InvalidParameter("--d is required for eval".into()))?;
            if d < 1 {
                return Err(Error::InvalidParameter("d must be >= 1".into()));
            }
            let t = t.ok_or_else(|| Error::InvalidParameter("--t is required for eval".into()))?;
            vec![(d, rat_from_str(&t)?)]
        }
        "tensor" => {
            let factors = factors.ok_or_else(|| {
                Error::InvalidParameter("--factors is required for tensor".into())
            })?;
            parse_factor_list(&factors)?
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "kind must be eval or tensor, got {other:?}"
            )))
        }
    };
    let spec = ModuleSpec::new(factor_list, cfg.clone())?;
    let oct = tensor_module(&spec)?;
    let extracted = tdpair_from_module(&oct, &a, &astar, variant, &cfg)?;
    if !extracted.check.report.pass() {
        eprintln!("warning: generated instance does not pass the full pair verification:");
        for f in &extracted.check.report.failures {
            eprintln!("  - {}: {}", f.check, f.detail);
        }
    }
    let d_out = extracted.check.report.d.unwrap_or_else(|| spec.total_diameter());
    let provenance = Provenance {
        kind,
        variant: variant.to_string(),
        factors: spec
            .factors
            .iter()
            .map(|(fd, ft)| FactorSpec { d: *fd, t: ft.clone() })
            .collect(),
    };
    let instance = Instance {
        cfg,
        d: d_out,
        a,
        astar,
        a_op: extracted.a_op.clone(),
        astar_op: extracted.astar_op.clone(),
        provenance: Some(provenance),
    };
    io::write_instance(&output, &instance)?;
    eprintln!("wrote {}", output.display());
    Ok(0)
}

fn verify(
    path: &Path,
    b: &str,
    bstar: &str,
    report_path: Option<&Path>,
    json: bool,
) -> Result<u8, Error> {
    let instance = io::read_instance(path)?;
    let b = rat_from_str(b)?;
    let bstar = rat_from_str(bstar)?;
    let label = path.display().to_string();
    let report = run_suite(&instance, &b, &bstar, &label)?;
    if let Some(out) = report_path {
        std::fs::write(out, serde_json::to_string_pretty(&report)? + "\n")?;
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print_human(&report);
    }
    Ok(if report.overall_pass { 0 } else { 1 })
}

fn print_human(report: &SuiteReport) {
    println!(
        "instance {} (n = {}, declared d = {})",
        report.instance, report.n, report.declared_d
    );
    if let Some(shape) = &report.shape {
        println!("shape {shape}");
    }
    if let Some((e0, e1)) = &report.module_type {
        println!("module type ({e0}, {e1})");
    }
    for g in &report.groups {
        if g.pass {
            println!("PASS {}", g.group);
        } else if g.skipped {
            println!("SKIP {} (prerequisite failed)", g.group);
        } else {
            println!("FAIL {}", g.group);
            for f in &g.findings {
                println!("  - {}: {}", f.check, f.detail);
            }
            if let Some(relations) = &g.relations {
                for r in relations.iter().filter(|r| !r.pass) {
                    println!("  residual {}:", r.relation);
                    for line in r.residual.to_string().lines() {
                        println!("    {line}");
                    }
                }
            }
        }
    }
    println!(
        "overall: {}",
        if report.overall_pass { "PASS" } else { "FAIL" }
    );
}

fn explore_irreducibility(
    factors: &str,
    grid: &str,
    q: &str,
    a: &str,
    astar: &str,
    variant: &str,
    report: Option<&Path>,
) -> Result<u8, Error> {
    let cfg = FieldConfig::new(rat_from_str(q)?)?;
    let a = rat_from_str(a)?;
    let astar = rat_from_str(astar)?;
    let variant: Variant = variant.parse()?;

    // Parse factor slots; exactly one t must be the grid placeholder "?".
    let mut slots: Vec<(usize, Option<Rat>)> = Vec::new();
    for item in factors.split(',') {
        let (d, t) = item.split_once(':').ok_or_else(|| {
            Error::InvalidParameter(format!("factor {item:?} must have the form d:t or d:?"))
        })?;
        let d: usize = d
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad diameter in factor {item:?}")))?;
        let t = t.trim();
        slots.push((d, if t == "?" { None } else { Some(rat_from_str(t)?) }));
    }
    let holes = slots.iter().filter(|(_, t)| t.is_none()).count();
    if holes != 1 {
        return Err(Error::InvalidParameter(format!(
            "factors must contain exactly one '?' slot, found {holes}"
        )));
    }

    let grid_values: Vec<Rat> = if grid == "default" {
        default_t_grid(&cfg)
    } else if grid.trim().is_empty() {
        Vec::new()
    } else {
        grid.split(',')
            .map(rat_from_str)
            .collect::<Result<_, _>>()?
    };

    let specs: Vec<ModuleSpec<Rat>> = grid_values
        .iter()
        .map(|t| {
            let factor_list = slots
                .iter()
                .map(|(d, slot)| (*d, slot.clone().unwrap_or_else(|| t.clone())))
                .collect();
            ModuleSpec::new(factor_list, cfg.clone())
        })
        .collect::<Result<_, _>>()?;
    let records = scan_irreducibility(&specs, &a, &astar, variant);

    let mut lines = String::new();
    for (record, t) in records.iter().zip(&grid_values) {
        let mut value = scan_record_json(record);
        value["t"] = serde_json::Value::String(io::rat_to_string(t));
        lines.push_str(&serde_json::to_string(&value)?);
        lines.push('\n');
    }
    match report {
        Some(path) => std::fs::write(path, lines)?,
        None => print!("{lines}"),
    }
    Ok(0)
}

fn explore_antiaut(path: &Path, report: Option<&Path>) -> Result<u8, Error> {
    let instance = io::read_instance(path)?;
    let result = find_antiautomorphism(&instance.a_op, &instance.astar_op);
    let record = antiaut_record_json(&result, &instance.a_op, &instance.astar_op);
    let line = serde_json::to_string(&record)? + "\n";
    match report {
        Some(out) => std::fs::write(out, line)?,
        None => print!("{line}"),
    }
    Ok(0)
}
