fn main() {
    std::process::exit(hypertile_cli::run(std::env::args_os()));
}
