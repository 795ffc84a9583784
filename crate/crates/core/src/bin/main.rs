use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sharing_nim::analysis::{self, export_table, verify, Claim, TableFormat, Tables};
use sharing_nim::service::queries::{self, PeriodScanQuery, SequenceKind};
use sharing_nim::service::{AppState, ServiceConfig};
use sharing_nim::{GrundyTable, Position, RawTripleTable};

#[derive(Parser)]
#[command(
    name = "sharing-nim",
    version,
    about = "Three-pile Sharing Nim engine and analysis tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Outcome, decomposition and winning moves of a position.
    Status { a: u64, b: u64, c: u64 },
    /// All legal moves from a position, with their results.
    Moves { a: u64, b: u64, c: u64 },
    /// Nim-value of (0, a, b) from the brute-force oracle.
    Grundy { a: u64, b: u64 },
    /// Export the nim-value triangle.
    Table {
        #[arg(long, default_value_t = 16)]
        max_b: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// G(0, a, n) for n = a .. a + count - 1.
    Row { a: u64, count: u64 },
    /// f(n) for n = 0 ..= max_n.
    F { max_n: u64 },
    /// Search a computed prefix for an ultimate period.
    PeriodScan {
        #[arg(long, value_enum, default_value_t = Seq::F)]
        seq: Seq,
        /// Row index for `--seq row`.
        #[arg(long, default_value_t = 0)]
        a: u64,
        #[arg(long, default_value_t = 489)]
        max_n: u64,
        #[arg(long, default_value_t = 128)]
        max_pre: usize,
        #[arg(long, default_value_t = 128)]
        max_p: usize,
    },
    /// Rows holding g-positions (0, a, b) with a <= b/2.
    Distribution {
        g: u32,
        #[arg(long, default_value_t = 300)]
        max_b: u64,
    },
    /// Check a claim (or `all`) against the oracle up to a bound.
    Verify {
        claim: String,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, env = "SHARING_NIM_PORT", default_value_t = 8080)]
        port: u16,
        #[arg(long, env = "SHARING_NIM_HOST", default_value = "127.0.0.1")]
        host: IpAddr,
        #[arg(long, env = "SHARING_NIM_TABLE_MAX_B", default_value_t = GrundyTable::DEFAULT_MAX_B)]
        table_max_b: u64,
        /// Session snapshot, loaded at start and written on shutdown.
        #[arg(long, env = "SHARING_NIM_SNAPSHOT")]
        snapshot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Seq {
    F,
    Ones,
    Row,
}

fn print_json<T: Serialize>(value: &T) -> Result<(), String> {
    let out = io::stdout().lock();
    let mut out = BufWriter::new(out);
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| e.to_string())?;
    writeln!(out).map_err(|e| e.to_string())
}

fn build_table(max_b: u64) -> Result<GrundyTable, String> {
    GrundyTable::build(max_b).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct MoveLine {
    #[serde(rename = "move")]
    mv: sharing_nim::Move,
    result: Position,
    outcome: sharing_nim::Outcome,
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let config = ServiceConfig::default();
    match cli.command {
        Command::Status { a, b, c } => {
            print_json(&queries::position_status(queries::StatusQuery { a, b, c }))?;
        }
        Command::Moves { a, b, c } => {
            let p = Position::new(a, b, c);
            let lines: Vec<MoveLine> = p
                .moves()
                .map(|m| {
                    let q = p.apply(m).expect("generated moves are legal");
                    MoveLine {
                        mv: m,
                        result: q,
                        outcome: sharing_nim::game::status(q).outcome,
                    }
                })
                .collect();
            print_json(&lines)?;
        }
        Command::Grundy { a, b } => {
            let t = build_table(a.max(b))?;
            let r =
                queries::grundy(queries::GrundyQuery { a, b }, &t).map_err(|e| e.to_string())?;
            print_json(&r)?;
        }
        Command::Table { max_b, format, out } => {
            let t = build_table(max_b)?;
            let format = match format {
                Format::Csv => TableFormat::Csv,
                Format::Json => TableFormat::Json,
            };
            match out {
                Some(path) => {
                    let file =
                        File::create(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                    export_table(&t, format, BufWriter::new(file)).map_err(|e| e.to_string())?;
                }
                None => export_table(&t, format, io::stdout().lock()).map_err(|e| e.to_string())?,
            }
        }
        Command::Row { a, count } => {
            let t = build_table(a.saturating_add(count.saturating_sub(1)))?;
            let r = queries::row(queries::RowQuery { a, count }, &t).map_err(|e| e.to_string())?;
            print_json(&r)?;
        }
        Command::F { max_n } => {
            let r =
                queries::f_values(queries::FQuery { max_n }, &config).map_err(|e| e.to_string())?;
            print_json(&r)?;
        }
        Command::PeriodScan {
            seq,
            a,
            max_n,
            max_pre,
            max_p,
        } => {
            let (seq, t) = match seq {
                Seq::F => (SequenceKind::F, GrundyTable::build(0)),
                Seq::Ones => (SequenceKind::Ones, GrundyTable::build(0)),
                Seq::Row => (SequenceKind::Row, GrundyTable::build(max_n)),
            };
            let t = t.map_err(|e| e.to_string())?;
            let q = PeriodScanQuery {
                seq,
                a,
                max_n,
                max_pre,
                max_p,
            };
            let r = queries::period(q, &t, &config).map_err(|e| e.to_string())?;
            print_json(&r)?;
        }
        Command::Distribution { g, max_b } => {
            let t = build_table(max_b)?;
            print_json(&analysis::distribution_report(g, max_b, &t).map_err(|e| e.to_string())?)?;
        }
        Command::Verify { claim, bound } => {
            let claims: Vec<Claim> = if claim == "all" {
                Claim::ALL.to_vec()
            } else {
                vec![claim.parse().map_err(|e: analysis::AnalysisError| {
                    let ids: Vec<_> = Claim::ALL.iter().map(|c| c.id()).collect();
                    format!("{e}; expected one of {} or all", ids.join(", "))
                })?]
            };
            // The residue check only consults the table up to its size.
            let table_b = if claims == [Claim::FResidueClasses] {
                bound.min(GrundyTable::DEFAULT_MAX_B)
            } else {
                bound
            };
            let t = build_table(table_b)?;
            let raw = claims
                .contains(&Claim::TranslationInvariance)
                .then(|| RawTripleTable::build(bound));
            let tables = Tables {
                grundy: &t,
                raw: raw.as_ref(),
            };
            let mut reports = Vec::new();
            for c in claims {
                reports.push(verify(c, bound, tables).map_err(|e| e.to_string())?);
            }
            print_json(&reports)?;
            if reports.iter().any(|r| !r.passed) {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Serve {
            port,
            host,
            table_max_b,
            snapshot,
        } => {
            let config = ServiceConfig {
                table_max_b,
                snapshot,
                ..config
            };
            tracing::info!(table_max_b, "building nim-value table");
            let state = AppState::new(config).map_err(|e| e.to_string())?;
            let runtime = tokio::runtime::Runtime::new().map_err(|e| e.to_string())?;
            runtime
                .block_on(sharing_nim::service::http::serve(
                    state,
                    SocketAddr::new(host, port),
                ))
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    tracing_subscriber::fmt().with_writer(io::stderr).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
