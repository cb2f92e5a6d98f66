fn main() {
    std::process::exit(cyclozeta::cli::run(std::env::args_os()));
}
