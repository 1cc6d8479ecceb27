use std::io::Write;

fn main() {
    hecke_center::cli::init_thread_pool();
    let out = hecke_center::cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
