use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::Parser;

use koszul_cli::commands::{run, Options, Source, COMMANDS};
use koszul_core::exactlin::FieldConfig;

/// Exact computations on finitely presented graded algebras.
///
/// The machine report (JSON) goes to --output; the text rendering goes to stderr unless --quiet.
#[derive(Parser, Debug)]
#[command(name = "koszul", version)]
struct Cli {
    #[arg(value_parser = PossibleValuesParser::new(COMMANDS))]
    command: String,
    /// Input document: a file path or `builtin:<name>`. Not used by `corpus`.
    input: Option<String>,
    /// Internal degree cap.
    #[arg(long, default_value_t = 8)]
    max_degree: usize,
    /// `rational` or `prime:p`; overrides the document's field.
    #[arg(long)]
    field: Option<String>,
    /// Where to write the JSON report; `-` is standard output.
    #[arg(long, default_value = "-")]
    output: String,
    /// Include failure witnesses.
    #[arg(long)]
    witnesses: bool,
    /// Suppress the text rendering.
    #[arg(long)]
    quiet: bool,
    /// `N` for potential commands.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Representation document for `ce`.
    #[arg(long)]
    rep: Option<String>,
}

fn execute(cli: &Cli) -> koszul_core::Result<()> {
    let field = cli.field.as_deref().map(FieldConfig::parse).transpose()?;
    let representation = cli.rep.as_deref().map(Source::load).transpose()?;
    let input = cli.input.as_deref().map(Source::load).transpose()?;
    let opts = Options {
        cap: cli.max_degree,
        field,
        witnesses: cli.witnesses,
        big_n: cli.n,
        representation,
    };
    let report = run(&cli.command, input.as_ref(), &opts)?;
    let json = report.render_json();
    if cli.output == "-" {
        std::io::stdout().write_all(json.as_bytes())?;
    } else {
        fs::write(&cli.output, json)?;
    }
    if !cli.quiet {
        std::io::stderr().write_all(report.render_text().as_bytes())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
