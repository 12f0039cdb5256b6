fn main() {
    std::process::exit(qzeta_cli::run_main());
}
