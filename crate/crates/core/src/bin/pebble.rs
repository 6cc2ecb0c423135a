use std::process::ExitCode;

fn main() -> ExitCode {
    let result = cover_pebbling::cli::run(std::env::args_os());
    if let Some(payload) = &result.payload {
        println!("{payload}");
    }
    if let Some(message) = &result.diagnostic {
        eprintln!("{message}");
    }
    ExitCode::from(result.status)
}
