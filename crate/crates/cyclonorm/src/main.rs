fn main() {
    std::process::exit(cyclonorm::cli::main_entry());
}
