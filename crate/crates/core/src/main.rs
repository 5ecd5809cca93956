use std::io::Write;

fn main() {
    let outcome = su2curv::cli::run_from_args(std::env::args_os());
    let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    std::process::exit(outcome.code);
}
