//! Problem files, task dispatch, result records and the benchmark harness
//! behind the `locring` binary.

mod bench;
mod file;
mod run;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

pub use bench::{bench_compare, BenchConfig, BenchReport, BenchRow, CSV_HEADER};
pub use file::{BenchSection, InputSection, ProblemFile, RingSection, SetSection};
pub use run::run_task;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Task {
    Syz,
    Lift,
    Locsolve,
    Member,
    Dom,
    Iszero,
    Bench,
}

impl Task {
    pub const ALL: [Task; 7] = [
        Task::Syz,
        Task::Lift,
        Task::Locsolve,
        Task::Member,
        Task::Dom,
        Task::Iszero,
        Task::Bench,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::Syz => "syz",
            Task::Lift => "lift",
            Task::Locsolve => "locsolve",
            Task::Member => "member",
            Task::Dom => "dom",
            Task::Iszero => "iszero",
            Task::Bench => "bench",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Task {
    type Err = String;
    fn from_str(s: &str) -> Result<Task, String> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown task '{}'", s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaskError {
    #[error("input error{}: {message}", location_suffix(.location, .offset))]
    Input {
        message: String,
        location: Option<String>,
        offset: Option<usize>,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn location_suffix(location: &Option<String>, offset: &Option<usize>) -> String {
    match (location, offset) {
        (Some(l), Some(o)) => format!(" at {} byte {}", l, o),
        (Some(l), None) => format!(" at {}", l),
        (None, Some(o)) => format!(" at byte {}", o),
        (None, None) => String::new(),
    }
}

impl TaskError {
    pub fn exit_code(&self) -> i32 {
        match self {
            TaskError::Input { .. } => 2,
            TaskError::Internal(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Solved,
    NoSolution,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Solution {
    pub numerator: Vec<Vec<String>>,
    pub denominator: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
    pub location: Option<String>,
    pub offset: Option<usize>,
}

/// Machine-readable outcome of a task. Everything except `timings_ms` is a
/// deterministic function of the input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRecord {
    pub task: String,
    pub verdict: Verdict,
    pub ring: Option<String>,
    pub set: Option<String>,
    pub solution: Option<Solution>,
    pub certificate: Option<serde_json::Value>,
    pub residual_ok: Option<bool>,
    pub error: Option<ErrorInfo>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl ResultRecord {
    pub fn from_error(task: &str, e: &TaskError) -> ResultRecord {
        let error = match e {
            TaskError::Input {
                message,
                location,
                offset,
            } => ErrorInfo {
                kind: "input",
                message: message.clone(),
                location: location.clone(),
                offset: *offset,
            },
            TaskError::Internal(m) => ErrorInfo {
                kind: "internal",
                message: m.clone(),
                location: None,
                offset: None,
            },
        };
        ResultRecord {
            task: task.to_string(),
            verdict: Verdict::Error,
            ring: None,
            set: None,
            solution: None,
            certificate: None,
            residual_ok: None,
            error: Some(error),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Solved => 0,
            Verdict::NoSolution => 1,
            Verdict::Error => match self.error.as_ref().map(|e| e.kind) {
                Some("internal") => 3,
                _ => 2,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub ordering: Option<String>,
}

#[derive(Debug, Clone)]
pub enum TaskOutput {
    Record(Box<ResultRecord>),
    Bench(BenchReport),
}

impl TaskOutput {
    pub fn exit_code(&self) -> i32 {
        match self {
            TaskOutput::Record(r) => r.exit_code(),
            TaskOutput::Bench(_) => 0,
        }
    }

    /// The text written to the output file or stdout.
    pub fn render(&self) -> String {
        match self {
            TaskOutput::Record(r) => r.to_json() + "\n",
            TaskOutput::Bench(b) => b.to_csv(),
        }
    }
}

/// Parses `text` and runs `task`, turning every failure into an error record.
pub fn execute(text: &str, task: Task, opts: &RunOptions) -> TaskOutput {
    let result = ProblemFile::parse(text).and_then(|file| run_task(&file, task, opts));
    match result {
        Ok(out) => out,
        Err(e) => TaskOutput::Record(Box::new(ResultRecord::from_error(task.name(), &e))),
    }
}

/// Accumulates wall time per named phase.
#[derive(Debug, Default)]
pub(crate) struct Phases(BTreeMap<String, f64>);

impl Phases {
    pub(crate) fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        *self.0.entry(name.to_string()).or_insert(0.0) += ms;
        out
    }

    pub(crate) fn into_map(self) -> BTreeMap<String, f64> {
        self.0
            .into_iter()
            .map(|(k, v)| (k, (v * 1000.0).round() / 1000.0))
            .collect()
    }
}
