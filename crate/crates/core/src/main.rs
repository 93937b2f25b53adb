fn main() {
    std::process::exit(dense_pauli::cli::run(std::env::args_os()));
}
