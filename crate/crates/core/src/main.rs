fn main() {
    std::process::exit(zero_hecke::cli::main_with_args(std::env::args_os()));
}
