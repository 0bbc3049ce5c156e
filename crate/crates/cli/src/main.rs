fn main() {
    std::process::exit(ctilde_cli::main_with_io());
}
