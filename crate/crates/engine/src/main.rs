fn main() {
    std::process::exit(ite_engine::cli::main_with_args(std::env::args_os()));
}
