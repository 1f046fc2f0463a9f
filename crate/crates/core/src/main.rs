use std::process::ExitCode;

fn main() -> ExitCode {
    symtensor::cli::main_with_args(std::env::args_os())
}
