use std::io::Write;
use std::process::ExitCode;

use stableass_cli::Outcome;

fn main() -> ExitCode {
    let outcome = stableass_cli::run_args(std::env::args_os(), &mut std::io::stdin().lock());
    let mut stdout = std::io::stdout().lock();
    let written = match &outcome {
        Outcome::Text(text) => write!(stdout, "{text}"),
        Outcome::Document { document, exit_code } => {
            if *exit_code != 0 {
                if let Some(message) = document["error"]["message"].as_str() {
                    eprintln!("stableass: {message}");
                }
            }
            let body = serde_json::to_string_pretty(document).expect("JSON values serialize");
            writeln!(stdout, "{body}")
        }
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code())
}
