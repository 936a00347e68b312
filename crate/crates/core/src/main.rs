fn main() {
    std::process::exit(degenerate_bernoulli::cli::main());
}
