mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use matconic::conics::{
    self, integer_points_square, oracle_c2, oracle_c3, oracle_radical_points, radical_points, solve_c2,
    solve_c3, Conic, ConicPoint,
};
use matconic::exactnum::is_perfect_square;
use matconic::lrs::{sequence_terms, SeqId, SeqKind};
use matconic::oeis::{check_table1, BundledFixtures, DirFixtures, FixtureSource, OnlineFixtures};
use matconic::polyid::{all_expected, verify, IdentitySuite};

use output::{CommandEcho, OutputRecord, PointLine};

#[derive(Parser, Debug)]
#[command(name = "matconic", version, about = "Exact computations on generalized Matiyasevich conics")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    A,
    B,
    C,
    U,
}

impl From<Which> for SeqKind {
    fn from(w: Which) -> Self {
        match w {
            Which::A => SeqKind::A,
            Which::B => SeqKind::B,
            Which::C => SeqKind::C,
            Which::U => SeqKind::U,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConicArg {
    #[value(name = "C")]
    C,
    #[value(name = "C2")]
    C2,
    #[value(name = "C3")]
    C3,
}

impl From<ConicArg> for Conic {
    fn from(c: ConicArg) -> Self {
        match c {
            ConicArg::C => Conic::C,
            ConicArg::C2 => Conic::C2,
            ConicArg::C3 => Conic::C3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    #[value(name = "uT")]
    UT,
    #[value(name = "S")]
    S,
    #[value(name = "MV")]
    MV,
    #[value(name = "all")]
    All,
}

impl From<SuiteArg> for IdentitySuite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::UT => IdentitySuite::UT,
            SuiteArg::S => IdentitySuite::S,
            SuiteArg::MV => IdentitySuite::MV,
            SuiteArg::All => IdentitySuite::All,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// First terms of a, b, c or u.
    Seq {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        w: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Radical points P(1)..P(count) of C(w); integer points when w is a square.
    Points {
        #[arg(long)]
        w: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Ladder solutions of C2(w) or C3(w).
    Solve {
        #[arg(long, value_enum)]
        conic: ConicArg,
        #[arg(long)]
        w: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Brute-force scan for points up to a bound.
    Oracle {
        #[arg(long, value_enum)]
        conic: ConicArg,
        #[arg(long)]
        w: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Symbolic identity checks.
    Verify {
        #[arg(long, value_enum)]
        identity: SuiteArg,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// Compare u, b, c against OEIS b-files.
    OeisCheck {
        #[arg(long)]
        w: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Download b-files from oeis.org instead of using bundled fixtures.
        #[arg(long, conflicts_with = "data_dir")]
        fetch: bool,
        /// Read bNNNNNN.txt fixtures from this directory.
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
}

enum Outcome {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut out).and_then(|o| {
        out.flush()?;
        Ok(o)
    });
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn run(cli: &Cli, out: &mut impl Write) -> CliResult<Outcome> {
    let csv = cli.format == Format::Csv;
    match &cli.command {
        Command::Seq { which, w, count } => {
            let kind = SeqKind::from(*which);
            let terms = sequence_terms(SeqId::new(kind, *w)?, *count as usize)?;
            if csv {
                writeln!(out, "n,{kind}")?;
                for (n, t) in terms.iter().enumerate() {
                    writeln!(out, "{n},{t}")?;
                }
            } else {
                let echo = CommandEcho::new("seq").with("which", kind).with("w", w).with("count", count);
                let record = OutputRecord::new(echo, output::SeqPayload { which: kind, w: *w, terms });
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
        }
        Command::Points { w, count } => {
            let square = is_perfect_square(&BigInt::from(*w)).is_some();
            let points = if square {
                integer_points_square(*w, *count as usize)?
            } else {
                radical_points(*w, *count as usize)?
            };
            let echo = CommandEcho::new("points").with("w", w).with("count", count);
            let lines: Vec<_> = points.iter().map(PointLine::from_point).collect();
            output::write_stream(out, csv, echo, &lines)?;
        }
        Command::Solve { conic, w, count } => {
            let conic = Conic::from(*conic);
            let (pairs, first) = match conic {
                Conic::C2 => (solve_c2(*w, *count as usize)?, 0),
                Conic::C3 => (solve_c3(*w, *count as usize)?, 1),
                Conic::C => return Err("solve takes --conic C2 or C3; use points for C".into()),
            };
            let echo = CommandEcho::new("solve").with("conic", conic).with("w", w).with("count", count);
            let lines: Vec<_> = pairs
                .into_iter()
                .enumerate()
                .map(|(i, (x, y))| PointLine::pair(conic, *w, Some(first + i), x, y))
                .collect();
            output::write_stream(out, csv, echo, &lines)?;
        }
        Command::Oracle { conic, w, bound } => {
            let conic = Conic::from(*conic);
            let lines: Vec<_> = match conic {
                Conic::C => oracle_radical_points(*w, *bound)?
                    .iter()
                    .map(|class| {
                        let (x, y) = class.coordinates(*w)?;
                        let p = ConicPoint::new(conic, *w, x.into(), y.into(), conics::Provenance::Oracle)?;
                        Ok(PointLine::from_point(&p))
                    })
                    .collect::<matconic::Result<_>>()?,
                Conic::C2 | Conic::C3 => {
                    let pairs = if conic == Conic::C2 { oracle_c2(*w, *bound)? } else { oracle_c3(*w, *bound)? };
                    pairs.into_iter().map(|(x, y)| PointLine::pair(conic, *w, None, x, y)).collect()
                }
            };
            let echo = CommandEcho::new("oracle").with("conic", conic).with("w", w).with("bound", bound);
            output::write_stream(out, csv, echo, &lines)?;
        }
        Command::Verify { identity, n_max } => {
            let suite = IdentitySuite::from(*identity);
            let reports = verify(suite, *n_max)?;
            let ok = all_expected(&reports);
            if csv {
                writeln!(out, "identity,n_max,status,failures,erratum")?;
                for r in &reports {
                    let status = serde_json::to_value(r.status)?;
                    let status = status.as_str().unwrap_or_default();
                    writeln!(out, "{},{},{},{},{}", r.identity, r.n_max, status, r.failures, r.erratum)?;
                }
            } else {
                let echo = CommandEcho::new("verify").with("identity", suite.to_string()).with("n_max", n_max);
                let record = OutputRecord::new(echo, output::VerifyPayload { all_expected: ok, reports });
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
            return Ok(if ok { Outcome::Ok } else { Outcome::Mismatch });
        }
        Command::OeisCheck { w, count, fetch, data_dir } => {
            let mut source: Box<dyn FixtureSource> = match (fetch, data_dir) {
                (true, _) => Box::new(OnlineFixtures::new(true)),
                (false, Some(dir)) => Box::new(DirFixtures::new(dir)),
                (false, None) => Box::new(BundledFixtures),
            };
            let report = check_table1(source.as_mut(), *w, *count as usize)?;
            let ok = report.all_match();
            if csv {
                writeln!(out, "sequence,a_number,shift,compared,first_mismatch")?;
                for s in &report.sequences {
                    let idx = s.first_mismatch.as_ref().map(|m| m.index.to_string()).unwrap_or_default();
                    writeln!(out, "{},{},{},{},{}", s.which, s.a_number, s.shift, s.compared, idx)?;
                }
            } else {
                let echo = CommandEcho::new("oeis-check").with("w", w).with("count", count).with("fetch", fetch);
                writeln!(out, "{}", serde_json::to_string(&OutputRecord::new(echo, report))?)?;
            }
            return Ok(if ok { Outcome::Ok } else { Outcome::Mismatch });
        }
    }
    Ok(Outcome::Ok)
}
