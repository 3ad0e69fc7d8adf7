fn main() {
    planar_canon::cli_io::init_logging();
    let code = planar_canon::cli_io::run(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
