fn main() {
    std::process::exit(tropaut::cli::run(std::env::args_os()));
}
