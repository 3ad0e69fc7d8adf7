//! File formats, brute-force oracles, random generators and the command line.

pub mod cli;
pub mod format;
pub mod generate;
pub mod oracle;
pub mod selftest;

pub use cli::run;
pub use format::{parse_canon, parse_edge_list, write_edge_list, ParseError};
pub use generate::{random_colored_planar, random_planar, shuffled, Profile};
pub use oracle::{
    automorphisms, brute_force_aut_count, brute_force_iso, brute_force_iso_bounded,
    connected_planar_classes, enumerate_connected_planar, is_three_connected, OracleError,
    OracleResult,
};
pub use selftest::{selftest, SelftestReport};

/// Installs a logger printing warnings and errors to standard error.
pub fn init_logging() {
    struct Stderr;
    impl log::Log for Stderr {
        fn enabled(&self, m: &log::Metadata<'_>) -> bool {
            m.level() <= log::max_level()
        }
        fn log(&self, r: &log::Record<'_>) {
            if self.enabled(r.metadata()) {
                eprintln!("{}: {}", r.level().as_str().to_lowercase(), r.args());
            }
        }
        fn flush(&self) {}
    }
    if log::set_logger(&Stderr).is_ok() {
        log::set_max_level(log::LevelFilter::Warn);
    }
}
