fn main() {
    std::process::exit(skewcyc::cli::run(std::env::args_os()));
}
