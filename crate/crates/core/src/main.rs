fn main() {
    std::process::exit(mldeg::cli::run(std::env::args_os()));
}
