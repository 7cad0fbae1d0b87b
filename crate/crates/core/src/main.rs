use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lmis::commands::{run, CommandError, InputSource, Mode, OutputMode, RunConfig};
use lmis::format::InputFormat;
use lmis::harness::CheckName;

/// Local maximum independent sets: analysis, canonical augmentation,
/// decomposition and exhaustive verification on small graphs.
#[derive(Parser, Debug)]
#[command(name = "lmis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report alpha, mu, d(G), core/corona and the four set families of one graph.
    Analyze(GraphArgs),
    /// Apply the canonical augmentation to two members of Psi(G).
    Augment {
        #[command(flatten)]
        graph: GraphArgs,
        /// First set, comma-separated vertex names.
        #[arg(long)]
        s: String,
        /// Second set, comma-separated vertex names.
        #[arg(long)]
        t: String,
    },
    /// Decompose around a member S of Psi(G).
    Decompose {
        #[command(flatten)]
        graph: GraphArgs,
        /// The set S, comma-separated vertex names.
        #[arg(long)]
        s: String,
    },
    /// Run the check registry over a graph stream or an exhaustive enumeration.
    Verify {
        /// graph6 stream file, edge-list directory, or `-` for stdin.
        #[arg(long, conflicts_with = "max_n")]
        input: Option<String>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Enumerate all labeled graphs on 0..=N vertices.
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Replay the worked examples.
    Examples {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Input format; guessed from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Lift the vertex-count guardrail on exhaustive enumeration.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Graph6,
    Edges,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => InputFormat::Graph6,
            FormatArg::Edges => InputFormat::EdgeList,
        }
    }
}

fn source(input: &str) -> InputSource {
    if input == "-" {
        InputSource::Stdin
    } else {
        InputSource::Path(PathBuf::from(input))
    }
}

fn output(json: bool) -> OutputMode {
    if json {
        OutputMode::Json
    } else {
        OutputMode::Text
    }
}

fn graph_config(mode: Mode, g: GraphArgs) -> RunConfig {
    RunConfig {
        input: source(&g.input),
        format: g.format.map(Into::into),
        output: output(g.common.json),
        force: g.common.force,
        ..RunConfig::new(mode)
    }
}

fn config_of(cli: Cli) -> Result<RunConfig, CommandError> {
    Ok(match cli.command {
        Command::Analyze(g) => graph_config(Mode::Analyze, g),
        Command::Augment { graph, s, t } => RunConfig {
            s: Some(s),
            t: Some(t),
            ..graph_config(Mode::Augment, graph)
        },
        Command::Decompose { graph, s } => RunConfig {
            s: Some(s),
            ..graph_config(Mode::Decompose, graph)
        },
        Command::Verify {
            input,
            format,
            max_n,
            checks,
            jobs,
            common,
        } => {
            let input = match (input, max_n) {
                (Some(i), _) => source(&i),
                (None, Some(n)) => InputSource::Enumerate(n),
                (None, None) => {
                    return Err(CommandError::Usage(
                        "verify needs --input or --max-n".into(),
                    ));
                }
            };
            RunConfig {
                input,
                format: format.map(Into::into),
                checks: CheckName::parse_list(&checks).map_err(CommandError::Usage)?,
                output: output(common.json),
                jobs,
                force: common.force,
                ..RunConfig::new(Mode::Verify)
            }
        }
        Command::Examples { json } => RunConfig {
            output: output(json),
            ..RunConfig::new(Mode::Examples)
        },
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                CommandError::EXIT_CODE
            } else {
                0
            });
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let result = config_of(cli).and_then(|config| run(&config, &mut out, &mut err));
    let _ = out.flush();
    match result {
        Ok(status) => ExitCode::from(status.exit_code()),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(CommandError::EXIT_CODE)
        }
    }
}
