use clap::Parser;
use hyperbfs::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("io error: {e}");
            1
        }
    };
    use std::io::Write;
    let _ = out.flush();
    std::process::exit(code);
}
