fn main() {
    std::process::exit(stokes_braid::cli::run());
}
