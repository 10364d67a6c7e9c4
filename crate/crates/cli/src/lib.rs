//! Harness around the `synchro` library: formula corpora, per-instance claim
//! verification, and the greedy-versus-exact benchmark.

pub mod bench;
pub mod corpus;
pub mod lemmas;
pub mod verify;

/// Process exit codes shared by every subcommand.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const BUDGET: i32 = 3;
}
