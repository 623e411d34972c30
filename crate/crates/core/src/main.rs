use std::io::Write;

fn main() {
    let (status, output) = stablemap_git::cli::run_args(std::env::args_os());
    // a closed pipe downstream is not an error worth reporting
    let _ = if status == 2 {
        writeln!(std::io::stderr(), "{output}")
    } else {
        writeln!(std::io::stdout(), "{output}")
    };
    std::process::exit(status);
}
