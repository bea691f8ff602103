//! `locplane` binary; see [`locplane_cli::run`].

fn main() {
    let code = locplane_cli::run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
