use clap::Parser;

fn main() {
    let cli = hybridk_cli::Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = hybridk_cli::run(&cli, &mut out) {
        eprintln!("hybridk: {e}");
        std::process::exit(e.exit_code());
    }
}
