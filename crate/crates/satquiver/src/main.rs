fn main() {
    std::process::exit(satquiver::cli::run());
}
