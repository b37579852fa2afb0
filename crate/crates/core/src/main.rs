fn main() {
    std::process::exit(clawham::cli::main_with_args(std::env::args_os()));
}
