use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lie_centralizer::catalog::{
    cmd_centralizer, cmd_centralizer_set, cmd_dot, cmd_maximal, cmd_parabolic, cmd_tables,
    maximal_markdown, parabolic_markdown, select_types, QueryReport, TableKind,
};
use lie_centralizer::weyl_cell::{cell_membership, parse_lambda};
use lie_centralizer::{Error, LieType, RootSystem};

#[derive(Parser)]
#[command(name = "lie-centralizer", version, about = "Centralizers in compact simple Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GroupArg {
    /// Type (`E7`, `B3`) or group (`Sp(3)`, `Spin(10)`).
    #[arg(value_name = "GROUP", required_unless_present = "group")]
    group_pos: Option<String>,
    #[arg(long, value_name = "GROUP", conflicts_with = "group_pos")]
    group: Option<String>,
}

impl GroupArg {
    fn root_system(&self) -> Result<RootSystem, Error> {
        let name = self.group.as_deref().or(self.group_pos.as_deref()).unwrap_or_default();
        Ok(RootSystem::new(name.parse::<LieType>()?))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Centralizer of exp(u) for u given in fundamental-weight coordinates.
    Centralizer {
        #[command(flatten)]
        group: GroupArg,
        /// Comma-separated rationals such as `0,1/2,0`.
        #[arg(value_name = "U", required_unless_present = "u", allow_hyphen_values = true)]
        u_pos: Option<String>,
        #[arg(long, value_name = "U", conflicts_with = "u_pos", allow_hyphen_values = true)]
        u: Option<String>,
        /// Emit the diagram seen from u as Graphviz DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Maximal subgroups of maximal rank.
    Maximal {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: Output,
    },
    /// Parabolic centralizer with I_u = {i}; every i when omitted.
    Parabolic {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, short)]
        index: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Centralizer of the subgroup generated by several elements.
    CentralizerSet {
        #[command(flatten)]
        group: GroupArg,
        /// One point per occurrence.
        #[arg(long, value_name = "U", required = true, allow_hyphen_values = true)]
        u: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Regenerated tables of deficiencies, minimal weights or centers.
    Tables {
        kind: Kind,
        /// A type, a group, a family letter or `exceptional`; all types up to rank 8 otherwise.
        select: Option<String>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// The Dynkin diagram as Graphviz DOT, seen from u when given.
    Dot {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_name = "U", allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Deficiency,
    MinimalWeights,
    Centers,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotInCell(_) => 2,
        Error::CrossCheck { .. }
        | Error::ClosureMismatch { .. }
        | Error::RankDeficient
        | Error::UnclassifiableDiagram(_) => 3,
        _ => 1,
    }
}

fn emit(text: String, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Centralizer {
            group,
            u_pos,
            u,
            dot,
            output,
        } => {
            let rs = group.root_system()?;
            let lambda = parse_lambda(u.as_deref().or(u_pos.as_deref()).unwrap_or_default())?;
            let text = if dot {
                cmd_dot(&rs, Some(&cell_membership(&rs, &lambda)?))
            } else {
                let report = cmd_centralizer(&rs, &lambda)?;
                if output.json {
                    json(&report)
                } else {
                    report.to_text()
                }
            };
            emit(text, output.out.as_ref())
        }
        Command::Maximal { group, output } => {
            let rs = group.root_system()?;
            let rows = cmd_maximal(&rs)?;
            let text = if output.json {
                json(&rows)
            } else {
                maximal_markdown(&rs, &rows)
            };
            emit(text, output.out.as_ref())
        }
        Command::Parabolic {
            group,
            index,
            output,
        } => {
            let rs = group.root_system()?;
            let text = match index {
                Some(i) => {
                    let report = cmd_parabolic(&rs, i)?;
                    if output.json {
                        json(&report)
                    } else {
                        report.to_text()
                    }
                }
                None => {
                    let reports: Vec<QueryReport> = (1..=rs.rank())
                        .map(|i| cmd_parabolic(&rs, i))
                        .collect::<Result<_, _>>()?;
                    if output.json {
                        json(&reports)
                    } else {
                        parabolic_markdown(&rs, &reports)
                    }
                }
            };
            emit(text, output.out.as_ref())
        }
        Command::CentralizerSet { group, u, output } => {
            let rs = group.root_system()?;
            let lambdas = u
                .iter()
                .map(|s| parse_lambda(s))
                .collect::<Result<Vec<_>, _>>()?;
            let report = cmd_centralizer_set(&rs, &lambdas)?;
            let text = if output.json {
                json(&report)
            } else {
                report.to_text()
            };
            emit(text, output.out.as_ref())
        }
        Command::Tables { kind, select, out } => {
            let types = select_types(select.as_deref())?;
            let kind = match kind {
                Kind::Deficiency => TableKind::Deficiency,
                Kind::MinimalWeights => TableKind::MinimalWeights,
                Kind::Centers => TableKind::Centers,
            };
            emit(cmd_tables(kind, &types), out.as_ref())
        }
        Command::Dot { group, u, out } => {
            let rs = group.root_system()?;
            let point = match u {
                Some(s) => Some(cell_membership(&rs, &parse_lambda(&s)?)?),
                None => None,
            };
            emit(cmd_dot(&rs, point.as_ref()), out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
