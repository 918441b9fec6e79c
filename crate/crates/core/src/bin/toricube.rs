fn main() {
    std::process::exit(toricube::cli::main());
}
