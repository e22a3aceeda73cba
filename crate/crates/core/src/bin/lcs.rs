use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    match lcs_core::cli::run(std::env::args_os(), &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(lcs_core::Error::Usage(msg)) => {
            eprint!("{msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("lcs: {e}");
            ExitCode::FAILURE
        }
    }
}
