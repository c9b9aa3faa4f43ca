fn main() {
    std::process::exit(polnum::cli::run(std::env::args()));
}
