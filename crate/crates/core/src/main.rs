fn main() {
    std::process::exit(sxq::cli::main());
}
