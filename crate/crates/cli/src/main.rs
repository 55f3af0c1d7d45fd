use std::io::Write;

fn main() {
    flatcert_cli::configure_threads();
    let (out, code) = flatcert_cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    std::process::exit(code);
}
