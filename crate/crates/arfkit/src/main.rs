fn main() {
    // behave like a normal unix filter when the reader goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(arfkit::cli::run(std::env::args_os()));
}
