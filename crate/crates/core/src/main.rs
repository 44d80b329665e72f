use clap::Parser;

use qhj::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let code = run(&cli, &mut stdout.lock());
    std::process::exit(code);
}
