fn main() {
    std::process::exit(thinned_tw::cli::main_with_args(std::env::args_os()));
}
