fn main() {
    std::process::exit(halg::cli::main());
}
