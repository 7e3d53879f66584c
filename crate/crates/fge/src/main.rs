use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    fge::cli::run(std::env::args_os(), &mut stdout.lock())
}
