fn main() {
    std::process::exit(fockspace::cli::main_from_args(std::env::args_os()));
}
