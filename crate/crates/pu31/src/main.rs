use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(pu31::cli::run(std::env::args()) as u8)
}
