//! Driving the command-line layer from code and reading the report.

use clap::Parser;
use tiltcat::cli::{run, Cli};

fn main() {
    let argv: Vec<String> = ["tiltcat", "quotient", "builtin:A1", "gorenstein", "--objects", "a,a/b/a"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let cli = Cli::parse_from(&argv);
    let (report, _) = run(&cli, argv).unwrap();
    print!("{}", report.summary());
    println!("exit code {}", report.exit_code());
    for (k, d) in &report.digests {
        println!("{k}: {d}");
    }
}
