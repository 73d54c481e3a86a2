//! Runs one verification suite and prints its report.

use rooted_chromatic::harness::{verify, Options};

fn main() -> rooted_chromatic::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "power-sum".into());
    let report = verify(
        &name,
        &Options {
            max_n: Some(5),
            ..Options::default()
        },
    )?;
    print!("{}", report.to_text());
    std::process::exit(report.exit_code());
}
