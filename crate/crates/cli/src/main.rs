use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rdelta_cli::{alloc::CountingAlloc, run, Cli};

#[global_allocator]
static GLOBAL: CountingAlloc = CountingAlloc;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut out);
    out.flush().ok();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rdelta: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
