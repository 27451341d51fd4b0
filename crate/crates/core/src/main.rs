fn main() {
    std::process::exit(abelian_pauli::cli::run(std::env::args_os()));
}
