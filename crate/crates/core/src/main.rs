fn main() {
    std::process::exit(sumrank::cli::run(std::env::args_os()));
}
