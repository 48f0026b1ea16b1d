fn main() {
    std::process::exit(signed_entropy::cli::run());
}
