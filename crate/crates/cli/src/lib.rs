//! Command line front end. `run` parses an argument vector and returns the
//! exit code together with everything that should be printed.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kschur_core::cores::{enumerate_tableaux, to_core, Core};
use kschur_core::kschur::{
    branch, horizontal_pieri, kschur, partial_restriction, schur_expand, straighten, vertical_pieri,
    KWeight,
};
use kschur_core::rootcat::{catalan, Evaluator, IndexedRootIdeal, RootIdeal};
use kschur_core::verify::{run_all, run_suite, suite_names, Ranges, Report};
use kschur_core::vertexops::VertexCache;
use kschur_core::{Error, Partition, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "kcat", version, about = "Catalan functions, strong marked tableaux and k-Schur functions")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// k-Schur expansions, branching, Pieri rules and straightening
    #[command(subcommand)]
    Kschur(KschurCmd),
    /// Evaluate a Catalan function
    #[command(subcommand)]
    Catalan(CatalanCmd),
    /// Convert between cores and bounded partitions
    #[command(subcommand)]
    Cores(CoresCmd),
    /// Enumerate strong marked tableaux
    #[command(subcommand)]
    Tableaux(TableauxCmd),
    /// Run identity-verification suites
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum KschurCmd {
    /// Schur expansion of s^(k)_mu
    Expand {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        mu: Weight,
        #[arg(long, value_enum, default_value_t = Via::Catalan)]
        via: Via,
    },
    /// s^(k)_mu in the (k+1)-Schur basis
    Branch {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        mu: Weight,
    },
    /// e_d^perp or h_d^perp of s^(k)_mu in the k-Schur basis
    Pieri {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Keep only vertical tableaux whose largest mark is this row
        #[arg(long)]
        max_mark: Option<usize>,
    },
    /// s^(k)_{lambda - e_z} as a single k-Schur term or zero
    Straighten {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        z: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    Tableaux,
    Catalan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Vertical,
    Horizontal,
}

#[derive(Subcommand, Debug)]
enum CatalanCmd {
    /// H(Psi; gamma) in the Schur basis
    Eval {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        rowcounts: String,
        #[arg(long)]
        gamma: Weight,
        /// Evaluate at t = 1
        #[arg(long)]
        t1: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CoresCmd {
    /// The (k+1)-core of a k-bounded partition
    ToCore(CoreArgs),
    /// The k-bounded partition of a (k+1)-core
    ToBounded(CoreArgs),
}

#[derive(Args, Debug)]
struct CoreArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    shape: Partition,
}

#[derive(Subcommand, Debug)]
enum TableauxCmd {
    /// All strong marked tableaux of outer shape core(outside) and weight
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        outside: Partition,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        vertical: bool,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all` or a suite name
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    size_max: Option<usize>,
    /// List suite names and exit
    #[arg(long)]
    list: bool,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => (EXIT_INVALID, format!("error: {e}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String), Error> {
    let fmt = cli.format;
    let mut cache = VertexCache::new();
    let out = match &cli.command {
        Command::Kschur(KschurCmd::Expand { k, mu, via }) => {
            let f = match via {
                Via::Tableaux => schur_expand(mu, *k)?,
                Via::Catalan => kschur(&mut cache, &KWeight::new(mu.clone(), *k)?),
            };
            render(fmt, &f)
        }
        Command::Kschur(KschurCmd::Branch { k, mu }) => render(fmt, &branch(mu, *k)?),
        Command::Kschur(KschurCmd::Pieri { k, mu, d, direction, max_mark }) => {
            let e = match (direction, max_mark) {
                (Direction::Vertical, None) => vertical_pieri(mu, *k, *d)?,
                (Direction::Vertical, Some(m)) => partial_restriction(mu, *k, *d, *m)?,
                (Direction::Horizontal, None) => horizontal_pieri(mu, *k, *d)?,
                (Direction::Horizontal, Some(_)) => {
                    return Err(Error::InvalidArgument("--max-mark needs --direction vertical".into()))
                }
            };
            render(fmt, &e)
        }
        Command::Kschur(KschurCmd::Straighten { k, lambda, z }) => render(fmt, &straighten(lambda, *z, *k)?),
        Command::Catalan(CatalanCmd::Eval { ell, rowcounts, gamma, t1 }) => {
            let counts = parse_usizes(rowcounts)?;
            if counts.len() != *ell {
                return Err(Error::LengthMismatch { expected: *ell, got: counts.len() });
            }
            let iri = IndexedRootIdeal::new(RootIdeal::new(counts)?, gamma.clone())?;
            let ev = if *t1 { Evaluator::T1 } else { Evaluator::Chl };
            render(fmt, &catalan(&mut cache, &iri, ev))
        }
        Command::Cores(CoresCmd::ToCore(a)) => {
            let c = to_core(&a.shape, a.k)?;
            match fmt {
                Format::Text => format!("{}\n", c.shape()),
                Format::Json => json(&c),
            }
        }
        Command::Cores(CoresCmd::ToBounded(a)) => {
            let p = Core::new(a.shape.clone(), a.k + 1)?.to_bounded();
            match fmt {
                Format::Text => format!("{p}\n"),
                Format::Json => json(&p),
            }
        }
        Command::Tableaux(TableauxCmd::Enumerate { k, outside, weight, vertical }) => {
            let eta = parse_usizes(weight)?;
            let ts = enumerate_tableaux(outside, *k, &eta, *vertical)?;
            match fmt {
                Format::Json => json(&ts),
                Format::Text => {
                    let mut s = format!("{} tableaux\n", ts.len());
                    for t in &ts {
                        s += &format!("\ninside {}  spin {}\n{t}\n", t.inside(), t.spin());
                    }
                    s
                }
            }
        }
        Command::Verify(v) => return verify(fmt, v),
    };
    Ok((EXIT_OK, out))
}

fn verify(fmt: Format, v: &VerifyArgs) -> Result<(i32, String), Error> {
    if v.list {
        return Ok((EXIT_OK, suite_names().join("\n") + "\n"));
    }
    let ranges = Ranges { k_max: v.k_max, size_max: v.size_max };
    let reports = if v.suite == "all" { run_all(&ranges) } else { vec![run_suite(&v.suite, &ranges)?] };
    let code = if reports.iter().all(Report::passed) { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let out = match fmt {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => {
            let rows: Vec<ReportJson> = reports
                .iter()
                .map(|r| ReportJson {
                    suite: &r.suite,
                    cases: r.cases,
                    failed: r.failed,
                    passed: r.passed(),
                    samples: &r.samples,
                })
                .collect();
            json(&rows)
        }
    };
    Ok((code, out))
}

#[derive(Serialize)]
struct ReportJson<'a> {
    suite: &'a str,
    cases: usize,
    failed: usize,
    passed: bool,
    samples: &'a [String],
}

fn render<T: std::fmt::Display + Serialize>(fmt: Format, x: &T) -> String {
    match fmt {
        Format::Text => format!("{x}\n"),
        Format::Json => json(x),
    }
}

fn json<T: Serialize + ?Sized>(x: &T) -> String {
    serde_json::to_string(x).expect("serialisable") + "\n"
}

fn parse_usizes(s: &str) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("expected a nonnegative integer, got '{x}'"))))
        .collect()
}
