fn main() {
    std::process::exit(g3::cli::main());
}
