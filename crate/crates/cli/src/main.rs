use clap::Parser;

fn main() {
    let cli = uncrossed_cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    if let Err(f) = uncrossed_cli::run(cli, &mut stdout) {
        eprintln!("error: {}", f.message);
        std::process::exit(f.code);
    }
}
