use std::process::ExitCode;

fn main() -> ExitCode {
    lucastile::cli::run()
}
