//! Command-line front door for the identity machinery.
//!
//! Subcommands: `verify` (seeded random campaigns), `eval` (one instance,
//! single- or multi-pole), `stability` (floating-point cancellation
//! reports), `pfd` (partial fractions). Output is JSON lines by default,
//! CSV behind `--csv`, a human-readable table behind `--pretty`.
//!
//! Exit codes: 0 success (and, for `eval`, the identity holds), 1 identity
//! violation, 2 usage, parse, or pole errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use melzak_core::{
    partial_fractions, run_campaign, stability_report, verify_generalized, verify_melzak,
    CampaignConfig, CampaignMode, FloatReport, GeneralizedInstance, IdentityReport, KnotSet,
    MelzakInstance, Polynomial, Rational,
};

#[derive(Parser)]
#[command(
    name = "melzak",
    version,
    about = "Exact verification of Melzak-type identities"
)]
struct Cli {
    #[command(flatten)]
    output: OutputFormat,

    /// PRNG seed for randomized campaigns (ChaCha8, platform-independent)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct OutputFormat {
    /// JSON lines (the default)
    #[arg(long, global = true)]
    json: bool,
    /// Comma-separated rows with a header line
    #[arg(long, global = true)]
    csv: bool,
    /// Human-readable table
    #[arg(long, global = true)]
    pretty: bool,
}

enum Format {
    Json,
    Csv,
    Pretty,
}

impl OutputFormat {
    fn format(&self) -> Format {
        if self.csv {
            Format::Csv
        } else if self.pretty {
            Format::Pretty
        } else {
            Format::Json
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded campaign of random in-degree instances
    Verify {
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        /// Number of instances to verify
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Largest summation order n
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: u32,
        /// Largest extra knot count j (generalized mode)
        #[arg(long = "max-j", default_value_t = 3)]
        max_j: u32,
        /// Bound on |numerator| and denominator of sampled rationals
        #[arg(long = "coeff-bound", default_value_t = 9, value_parser = clap::value_parser!(i64).range(1..))]
        coefficient_bound: i64,
    },
    /// Verify one explicit instance and print its report
    Eval {
        /// Polynomial f, comma-separated coefficients from degree 0 upward
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Pole parameter x (single-pole identity)
        #[arg(
            long,
            required_unless_present = "knots",
            conflicts_with = "knots",
            allow_hyphen_values = true
        )]
        x: Option<String>,
        /// Knots x_0..x_j (multi-pole identity), comma-separated
        #[arg(long, allow_hyphen_values = true)]
        knots: Option<String>,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        y: String,
        /// Summation order
        #[arg(long)]
        n: u32,
    },
    /// Measure cancellation in binary64 against the exact reference
    Stability {
        /// Polynomial f, degree at most n
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        y: String,
        /// Single summation order
        #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
        n: Option<u32>,
        /// Comma-separated list of orders, one report each
        #[arg(long, value_delimiter = ',')]
        sweep: Option<Vec<u32>>,
    },
    /// Partial-fraction residues of 1/prod(k + x_i)
    Pfd {
        /// Distinct knots, comma-separated
        #[arg(long, allow_hyphen_values = true)]
        knots: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Melzak,
    Generalized,
    Both,
}

impl From<Mode> for CampaignMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Melzak => CampaignMode::Melzak,
            Mode::Generalized => CampaignMode::Generalized,
            Mode::Both => CampaignMode::Both,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.output.format();
    match run(cli.command, cli.seed, &format) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, seed: u64, format: &Format) -> Result<ExitCode, String> {
    match command {
        Command::Verify {
            mode,
            trials,
            max_n,
            max_j,
            coefficient_bound,
        } => {
            let summary = run_campaign(&CampaignConfig {
                trials,
                max_n,
                max_j,
                coefficient_bound,
                seed,
                mode: mode.into(),
            })
            .map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&summary).expect("summary serializes")
                ),
                Format::Csv => {
                    println!("total,passed,failed");
                    println!("{},{},{}", summary.total, summary.passed, summary.failed);
                }
                Format::Pretty => {
                    println!("total   {}", summary.total);
                    println!("passed  {}", summary.passed);
                    println!("failed  {}", summary.failed);
                    for report in &summary.failures {
                        println!("---");
                        print_report_pretty(report);
                    }
                }
            }
            Ok(if summary.failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Eval {
            poly,
            x,
            knots,
            y,
            n,
        } => {
            let f: Polynomial = poly.parse().map_err(display)?;
            let y: Rational = y.parse().map_err(display)?;
            let report = match knots {
                Some(text) => {
                    let knots = KnotSet::parse(&text).map_err(display)?;
                    let inst = GeneralizedInstance::new(f, knots, y, n).map_err(display)?;
                    verify_generalized(&inst).map_err(display)?
                }
                None => {
                    let x: Rational = x.expect("required by clap").parse().map_err(display)?;
                    let inst = MelzakInstance::new(f, x, y, n).map_err(display)?;
                    verify_melzak(&inst).map_err(display)?
                }
            };
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                ),
                Format::Csv => {
                    println!("kind,f,x,knots,y,n,lhs,rhs,residual,holds,degree_bound");
                    println!(
                        "{},\"{}\",{},\"{}\",{},{},{},{},{},{},{}",
                        report.kind,
                        report.instance.f,
                        report.instance.x.as_deref().unwrap_or(""),
                        report.instance.knots.as_deref().unwrap_or(""),
                        report.instance.y,
                        report.instance.n,
                        report.lhs,
                        report.rhs,
                        report.residual,
                        report.holds,
                        report.degree_bound
                    );
                }
                Format::Pretty => print_report_pretty(&report),
            }
            Ok(if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Stability {
            poly,
            x,
            y,
            n,
            sweep,
        } => {
            let f: Polynomial = poly.parse().map_err(display)?;
            let x: Rational = x.parse().map_err(display)?;
            let y: Rational = y.parse().map_err(display)?;
            let orders = sweep.unwrap_or_else(|| vec![n.expect("required by clap")]);
            if matches!(format, Format::Csv) {
                println!("{}", FloatReport::CSV_HEADER);
            }
            for n in orders {
                let inst =
                    MelzakInstance::new(f.clone(), x.clone(), y.clone(), n).map_err(display)?;
                let report = stability_report(&inst).map_err(display)?;
                match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string(&report).expect("report serializes")
                    ),
                    Format::Csv => println!("{}", report.csv_row()),
                    Format::Pretty => print_float_report_pretty(&report),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pfd { knots } => {
            let knots = KnotSet::parse(&knots).map_err(display)?;
            let decomposition = partial_fractions(&knots);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&decomposition).expect("decomposition serializes")
                ),
                Format::Csv => {
                    println!("knot,residue");
                    for (knot, residue) in decomposition.knots.iter().zip(&decomposition.residues) {
                        println!("{knot},{residue}");
                    }
                }
                Format::Pretty => {
                    for (knot, residue) in decomposition.knots.iter().zip(&decomposition.residues) {
                        println!("1/(k + {knot})  x  {residue}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn display(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn print_report_pretty(report: &IdentityReport) {
    println!("kind          {}", report.kind);
    println!("f             {}", report.instance.f);
    if let Some(x) = &report.instance.x {
        println!("x             {x}");
    }
    if let Some(knots) = &report.instance.knots {
        println!("knots         {knots}");
    }
    println!("y             {}", report.instance.y);
    println!("n             {}", report.instance.n);
    println!("lhs           {}", report.lhs);
    println!("rhs           {}", report.rhs);
    println!("residual      {}", report.residual);
    println!("holds         {}", report.holds);
    println!("degree bound  {}", report.degree_bound);
}

fn print_float_report_pretty(report: &FloatReport) {
    println!("f                 {}", report.instance.f);
    println!(
        "x                 {}",
        report.instance.x.as_deref().unwrap_or("")
    );
    println!("y                 {}", report.instance.y);
    println!("n                 {}", report.instance.n);
    println!("direct            {:e}", report.direct_value);
    println!("compensated       {:e}", report.compensated_value);
    println!("closed form       {:e}", report.closed_form_value);
    println!("exact             {}", report.exact_value);
    println!("rel err direct    {:e}", report.rel_err_direct);
    println!("rel err comp.     {:e}", report.rel_err_compensated);
    println!("rel err closed    {:e}", report.rel_err_closed);
    println!("condition number  {:e}", report.condition_number);
}
