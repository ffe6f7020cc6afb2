fn main() {
    std::process::exit(nqs::cli::run());
}
