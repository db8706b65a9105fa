use std::process::ExitCode;

fn main() -> ExitCode {
    let code = hyperharmonic::cli::main_exit();
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
