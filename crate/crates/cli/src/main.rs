fn main() {
    std::process::exit(ffourier::main_with_args(std::env::args_os()));
}
