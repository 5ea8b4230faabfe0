fn main() {
    std::process::exit(lspec::cli::main_with_args(std::env::args_os()));
}
