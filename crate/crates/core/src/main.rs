fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(poisson_formality::cli::run(&args));
}
