fn main() {
    std::process::exit(epg::cli::run(std::env::args_os().skip(1)));
}
