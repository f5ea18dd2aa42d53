fn main() { std::process::exit(binoid_hk::cli::run()) }
