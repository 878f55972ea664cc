//! Batch driver for `stdmono-core`: key-value run configs, concurrent
//! checks, versioned JSON reports and golden-file comparison.
//!
//! ```text
//! stdmono verify bs --n 3 --mult 1,1,1
//! stdmono verify schubert --n 3 --mult 1,1 --seeds 1,2,3
//! stdmono fiber dim --n 3 --mult 1,1,1 --powers 0,1,2 --golden golden/fiber_n3.json
//! ```

pub mod cli;
pub mod config;
pub mod error;
pub mod golden;
pub mod parallel;
pub mod report;
pub mod run;

pub use config::{RunConfig, SamplePolicy};
pub use error::{CliError, Result};
pub use report::{CheckRecord, Report};
pub use run::{run, Command};
