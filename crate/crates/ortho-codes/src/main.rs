//! `ortho`: build, verify and report on code families (see [`ortho_codes::cli`]).

fn main() {
    let code = ortho_codes::cli::main_with_args(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
