fn main() {
    std::process::exit(compsuper::cli::run(std::env::args_os()));
}
