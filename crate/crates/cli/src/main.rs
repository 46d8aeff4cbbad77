fn main() {
    std::process::exit(hilbstab_cli::run(std::env::args_os()));
}
