fn main() {
    std::process::exit(sparse_cheeger::cli::run(std::env::args_os()));
}
