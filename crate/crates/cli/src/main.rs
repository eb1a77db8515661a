use clap::Parser;

fn main() {
    let cli = isoform_cli::Cli::parse();
    if let Err(err) = isoform_cli::run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(isoform_cli::exit_code(&err));
    }
}
