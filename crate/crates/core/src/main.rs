fn main() {
    std::process::exit(einl::cli::main_entry(std::env::args_os()));
}
