fn main() {
    std::process::exit(fftile::cli::run(std::env::args_os()));
}
