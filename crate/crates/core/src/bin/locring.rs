use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use locring::problem::{execute, ResultRecord, RunOptions, Task, TaskError, TaskOutput};

/// Linear systems over localized polynomial rings.
#[derive(Parser, Debug)]
#[command(name = "locring", version)]
struct Cli {
    /// One of syz, lift, locsolve, member, dom, iszero, bench.
    #[arg(value_parser = |s: &str| s.parse::<Task>())]
    task: Task,
    /// Problem file (TOML).
    #[arg(long = "in")]
    input: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    count: Option<usize>,
    /// Overrides the ordering given in the file.
    #[arg(long, value_parser = ["lex", "degrevlex"])]
    ordering: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match std::fs::read_to_string(&cli.input) {
        Ok(text) => {
            let opts = RunOptions {
                seed: cli.seed,
                count: cli.count,
                ordering: cli.ordering.clone(),
            };
            execute(&text, cli.task, &opts)
        }
        Err(e) => TaskOutput::Record(Box::new(ResultRecord::from_error(
            cli.task.name(),
            &TaskError::Input {
                message: format!("cannot read {}: {}", cli.input.display(), e),
                location: None,
                offset: None,
            },
        ))),
    };
    if let TaskOutput::Bench(report) = &output {
        for w in &report.warnings {
            eprintln!("{}", w);
        }
    }
    let text = output.render();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {}", path.display(), e);
                return ExitCode::from(2);
            }
        }
        None => print!("{}", text),
    }
    ExitCode::from(output.exit_code() as u8)
}
