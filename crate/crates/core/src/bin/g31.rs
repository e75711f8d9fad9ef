fn main() {
    std::process::exit(g31::cli::main_with_args(std::env::args_os()));
}
