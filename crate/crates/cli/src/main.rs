fn main() {
    let (code, out) = kschur_cli::run(std::env::args_os());
    if code == kschur_cli::EXIT_INVALID {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
