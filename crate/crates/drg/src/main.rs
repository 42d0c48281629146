use clap::Parser;

/// Restore default SIGPIPE behavior so piping into `head` terminates the
/// process instead of panicking on a failed write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = drg::cli::Cli::parse();
    std::process::exit(drg::cli::run(cli));
}
