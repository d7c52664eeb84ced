fn main() {
    std::process::exit(chaotext::cli::main());
}
