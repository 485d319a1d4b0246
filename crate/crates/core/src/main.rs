fn main() {
    let code = polywidth::cli::main_with_args(std::env::args_os());
    std::process::exit(code);
}
