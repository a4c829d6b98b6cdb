fn main() {
    std::process::exit(gsilt::cli::main_with(std::env::args_os()));
}
