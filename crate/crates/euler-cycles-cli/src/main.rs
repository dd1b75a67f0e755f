fn main() {
    let args: Vec<String> = std::env::args().collect();
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let code = euler_cycles_cli::run(&refs, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
