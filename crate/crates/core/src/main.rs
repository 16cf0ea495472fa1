fn main() {
    std::process::exit(expdio::cli::main_with_env());
}
