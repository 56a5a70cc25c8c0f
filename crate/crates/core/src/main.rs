use clap::Parser;

use nullgauge::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (output, code) = run(&cli);
    print!("{}", output);
    if !output.ends_with('\n') {
        println!();
    }
    std::process::exit(code);
}
