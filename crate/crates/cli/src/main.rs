fn main() {
    std::process::exit(geoprove_cli::run(std::env::args_os()));
}
