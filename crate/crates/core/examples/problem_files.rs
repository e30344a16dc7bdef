//! Running a problem file in-process, as the `locring` binary does.
//!
//! cargo run --example problem_files

use locring::problem::{execute, RunOptions, Task};

const PROBLEM: &str = r#"
[ring]
field = "QQ"
vars = ["x"]

[set]
kind = "prime"
gens = ["x"]

[input]
A = [["x^2 + x"], ["x^3"]]
B = [["x"]]
"#;

fn main() {
    let out = execute(PROBLEM, Task::Locsolve, &RunOptions::default());
    print!("{}", out.render());
    println!("exit code {}", out.exit_code());

    let out = execute("[ring]\nfield = \"QQ\"\nvars = [\"x\"]\n[input]\nA = [[\"x +\"]]", Task::Syz, &RunOptions::default());
    print!("{}", out.render());
    println!("exit code {}", out.exit_code());
}
