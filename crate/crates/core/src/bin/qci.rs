fn main() {
    qci::cli::main();
}
