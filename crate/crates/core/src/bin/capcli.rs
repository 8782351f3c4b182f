fn main() {
    std::process::exit(capitulation::capcli::run(std::env::args_os()));
}
