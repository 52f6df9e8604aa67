fn main() {
    std::process::exit(homcode::cli::main());
}
