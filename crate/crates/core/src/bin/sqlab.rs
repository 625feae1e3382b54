fn main() {
    std::process::exit(sqlab::cli::run(std::env::args_os()));
}
