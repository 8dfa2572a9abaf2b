use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use icosa_core::exact::rational::parse_rational;
use icosa_core::poly::io::{curve_to_json, polynomial_to_json};
use icosa_core::poly::{scan_pencil, scan_singular_labeled, PencilParam, PrimeFieldConfig};
use icosa_core::rep::{molien, named_rep};
use icosa_core::{hashimoto, pencil, sextics, Polynomial, Report};

#[derive(Parser)]
#[command(name = "icosa", version, about = "Exact verification of icosahedral quartic surfaces and plane sextics")]
struct Cli {
    /// Worker threads for scans and group averaging (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Prime used by the finite-field scans
        #[arg(long, default_value_t = 61)]
        prime: u64,
        /// Also write the report as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print Molien series coefficients of a named representation
    Molien {
        /// One of v, vprime, s2v, u4, w4, w4s5
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
    /// Count singular points of a surface over F_p
    Scan {
        /// s3, s4, f1, f2, pencil, gamma1 or hashimoto:t=<rational>
        #[arg(long)]
        surface: String,
        #[arg(long, default_value_t = 61)]
        prime: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a polynomial or parametrized curve in the polynomial file format
    Emit {
        /// f1, f2, s3, s4, detA, steinerian or hashimoto:t=<rational>
        #[arg(long, conflicts_with = "curve", required_unless_present = "curve")]
        surface: Option<String>,
        #[arg(long, value_enum)]
        curve: Option<CurveName>,
        /// Output file (default: standard output)
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Hashimoto,
    Pencil2,
    Web,
    Steinerian,
    Catalecticant,
    Sextics,
    Maschke,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurveName {
    Gamma1,
    Gamma1dual,
    Gamma2dual,
    Phi12,
    Phi20,
    Lines6,
}

fn suite_report(suite: Suite, cfg: &PrimeFieldConfig) -> Report {
    let checks = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in [Suite::Hashimoto, Suite::Maschke, Suite::Pencil2, Suite::Web, Suite::Steinerian, Suite::Catalecticant, Suite::Sextics]
            {
                all.extend(suite_report(s, cfg).checks);
            }
            all
        }
        Suite::Hashimoto => hashimoto::suite(cfg),
        Suite::Maschke => hashimoto::maschke_checks(),
        Suite::Pencil2 => pencil::pencil2_checks(cfg),
        Suite::Web => pencil::web_checks(),
        Suite::Steinerian => pencil::steinerian_checks(),
        Suite::Catalecticant => pencil::catalecticant_checks(),
        Suite::Sextics => sextics::checks(cfg),
    };
    let name = suite.to_possible_value().expect("named variant").get_name().to_string();
    Report::new(&name, checks)
}

fn hashimoto_t(spec: &str) -> Option<Result<icosa_core::Rational>> {
    let t = spec.strip_prefix("hashimoto:t=")?;
    Some(parse_rational(t).with_context(|| format!("bad parameter in `{spec}`")))
}

fn surface(name: &str) -> Result<(Polynomial, Vec<&'static str>)> {
    const X: [&str; 4] = ["x0", "x1", "x2", "x3"];
    const Y: [&str; 4] = ["y1", "y2", "y3", "y4"];
    if let Some(t) = hashimoto_t(name) {
        return Ok((hashimoto::member(&t?)?.poly4, Y.to_vec()));
    }
    let f = match name {
        "f1" => pencil::pencil_generators()?.f1,
        "f2" => pencil::pencil_generators()?.f2,
        "s3" => pencil::s3()?,
        "s4" => pencil::s4()?,
        "steinerian" => pencil::steinerian_identity()?.det,
        "detA" => return Ok((pencil::discriminant_identity()?.det, Y.to_vec())),
        "gamma1" => return Ok((sextics::gamma1_sextic(), vec!["x", "y", "z"])),
        other => bail!("unknown surface `{other}`"),
    };
    Ok((f, X.to_vec()))
}

fn emit_curve(c: CurveName) -> Result<String> {
    let uv = ["u", "v"];
    let curve = |p: sextics::PlaneCurveParam| curve_to_json(&p.label, &p.components, &uv);
    Ok(match c {
        CurveName::Gamma1 => curve(sextics::gamma1_display()),
        CurveName::Gamma1dual => curve(sextics::dual_curve(&sextics::gamma1_display(), "Gamma1*")?),
        CurveName::Gamma2dual => curve(sextics::gamma2_dual()?),
        CurveName::Phi12 => polynomial_to_json(&sextics::invariant_binary_forms()?.0, &uv),
        CurveName::Phi20 => polynomial_to_json(&sextics::invariant_binary_forms()?.1, &uv),
        CurveName::Lines6 => polynomial_to_json(&sextics::six_line_product(), &["x", "y", "z"]),
    })
}

fn write_json(path: &Option<PathBuf>, text: &str) -> Result<()> {
    if let Some(p) = path {
        fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Verify { suite, prime, json } => {
            let cfg = PrimeFieldConfig::new(prime)?;
            let report = suite_report(suite, &cfg);
            print!("{}", report.to_text());
            write_json(&json, &(report.to_json() + "\n"))?;
            Ok(report.passed())
        }
        Command::Molien { rep, max_degree } => {
            let series = molien(&named_rep(&rep)?, max_degree)?;
            let coeffs: Vec<String> = series.coeffs.iter().map(ToString::to_string).collect();
            println!("{}", coeffs.join(" "));
            Ok(true)
        }
        Command::Scan { surface: name, prime, json } => {
            let cfg = PrimeFieldConfig::new(prime)?;
            if name == "pencil" {
                let g = pencil::pencil_generators()?;
                let scan = scan_pencil(&g.f1, &g.f2, &cfg)?;
                let mut lines = Vec::new();
                for (k, n) in scan.counts() {
                    let lam = match k {
                        PencilParam::Finite(l) => l.to_string(),
                        PencilParam::Infinity => "inf".into(),
                    };
                    lines.push(format!("lambda = {lam}: {n} singular points"));
                }
                println!("{}", lines.join("\n"));
                write_json(&json, &(serde_json::to_string_pretty(&scan)? + "\n"))?;
            } else {
                let (f, _) = surface(&name)?;
                let scan = scan_singular_labeled(&f, &cfg, &name)?;
                println!("{}: {} singular points mod {}", name, scan.count(), prime);
                for (pt, r) in scan.points.iter().zip(&scan.ranks) {
                    println!("  {pt:?} rank {r}");
                }
                write_json(&json, &(serde_json::to_string_pretty(&scan)? + "\n"))?;
            }
            Ok(true)
        }
        Command::Emit { surface: name, curve, output } => {
            let text = match (name, curve) {
                (Some(name), _) => {
                    let (f, vars) = surface(&name)?;
                    polynomial_to_json(&f, &vars)
                }
                (None, Some(c)) => emit_curve(c)?,
                (None, None) => unreachable!("clap requires one of --surface, --curve"),
            };
            match output {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
