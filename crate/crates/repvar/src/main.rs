fn main() {
    std::process::exit(repvar::cli::run(std::env::args()));
}
