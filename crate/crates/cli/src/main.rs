use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = klcat_cli::run(std::env::args_os());
    std::io::stdout().write_all(&outcome.stdout).ok();
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
