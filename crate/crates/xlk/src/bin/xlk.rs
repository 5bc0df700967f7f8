fn main() {
    std::process::exit(xlk::cli::run(std::env::args().collect()));
}
