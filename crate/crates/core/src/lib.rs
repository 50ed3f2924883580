//! Local-lemma certificates and resampling search for properly coloured and
//! rainbow copies of bounded-degree graphs in edge-coloured complete graphs.
//!
//! - [`graph`]: target graphs, cherry statistics, edge-list files.
//! - [`colouring`]: edge colourings of `K_n`, boundedness, generators.
//! - [`events`]: canonical bad events, dependency graphs, clique covers.
//! - [`lll`]: local-lemma conditions, μ search, thresholds, inequality chains.
//! - [`sampler`]: swap-resampling search for a valid embedding.
//! - [`oracle`]: exhaustive ground truth on small instances.
//! - [`experiment`]: reproducible batches of sampler runs.
//! - [`cli`]: the `rainbow-lll` command line.
//!
//! The `examples/` directory has one runnable program per capability.

pub mod cli;
pub mod colouring;
pub mod error;
pub mod events;
pub mod experiment;
pub mod graph;
pub mod lll;
pub mod oracle;
pub mod rational;
pub mod sampler;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use colouring::{Colour, EdgeColouring};
pub use error::{Error, Result};
pub use graph::{CherryDensity, CherryStats, Graph};
pub use rational::Rational;

/// Which copies of `G` count as valid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Adjacent edges of `G` get different colours.
    Proper,
    /// All edges of `G` get different colours.
    Rainbow,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Proper => "proper",
            Mode::Rainbow => "rainbow",
        })
    }
}
