fn main() {
    std::process::exit(spinor_cover::cli::run(std::env::args_os()));
}
