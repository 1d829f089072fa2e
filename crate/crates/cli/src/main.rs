use clap::Parser;
use ywall_cli::{execute, Cli, EXIT_USAGE};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap prints help/version on stdout (success) and usage errors
            // on stderr; map the latter to the documented usage exit code.
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let (code, out) = execute(&cli);
    print!("{out}");
    std::process::exit(code);
}
