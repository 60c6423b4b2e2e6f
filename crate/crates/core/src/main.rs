fn main() {
    std::process::exit(reesmult::cli::main());
}
