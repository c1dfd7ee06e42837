fn main() {
    std::process::exit(freeboson::cli::main_entry(std::env::args_os()));
}
