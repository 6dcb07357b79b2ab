use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(tiltcat::cli::main_with_args(std::env::args().collect()))
}
