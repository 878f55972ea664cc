fn main() {
    std::process::exit(stdmono::cli::main_with(std::env::args_os()));
}
