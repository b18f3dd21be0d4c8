fn main() {
    std::process::exit(kautzlab_cli::run());
}
