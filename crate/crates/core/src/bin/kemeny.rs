fn main() {
    std::process::exit(kemeny::cli::run(std::env::args_os()));
}
