//! File formats, sweeps, random graphs and multi-threaded search on top of
//! [`idindex_core`], plus the `idindex` command-line tool.

#![warn(missing_docs)]

pub mod format;
pub mod input;
pub mod parallel;
pub mod random;
pub mod sweep;

pub use idindex_core as core;
pub use parallel::{id_index_parallel, AtomicBudget};
pub use random::{random_connected, random_corpus};
pub use sweep::{
    run_sweep, RandomSpec, SweepConfig, SweepFamily, SweepReport, SweepRow, SweepSource,
};
