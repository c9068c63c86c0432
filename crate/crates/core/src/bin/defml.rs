fn main() {
    std::process::exit(defml::cli::main_with_args(std::env::args_os()));
}
