use std::io::Write;
use std::process::ExitCode;

use cubiccert_cli::{error_report, render, run, EXIT_PRECONDITION};

fn fail(message: &str) -> ExitCode {
    print!("{}", render(&error_report(None, "precondition", message)));
    ExitCode::from(EXIT_PRECONDITION as u8)
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("CUBICCERT_THREADS") {
        let n = match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => return fail(&format!("CUBICCERT_THREADS must be a positive integer, got '{v}'")),
        };
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return fail(&format!("cannot configure worker pool: {e}"));
        }
    }
    let outcome = run(std::env::args_os());
    let written = match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|e| format!("cannot write '{}': {e}", path.display())),
        None => std::io::stdout().write_all(outcome.output.as_bytes()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => ExitCode::from(outcome.code as u8),
        Err(e) => fail(&e),
    }
}
