use clap::Parser;

use bicomplex::cli::{self, CommandRequest};

fn main() {
    let request = CommandRequest::parse();
    std::process::exit(cli::run(&request));
}
