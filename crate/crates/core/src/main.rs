fn main() {
    std::process::exit(multitile::cli::run(std::env::args_os()));
}
