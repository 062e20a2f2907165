fn main() {
    std::process::exit(frieze_lab::cli::main_with_args(std::env::args_os()));
}
