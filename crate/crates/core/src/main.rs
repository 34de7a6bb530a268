fn main() {
    std::process::exit(seqforge::cli::main_from_env());
}
