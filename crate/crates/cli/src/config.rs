use std::path::Path;

use serde::Deserialize;
use vqnet::analysis::DEFAULT_CYCLE_BOUND;
use vqnet::topology::{DEFAULT_SIZE_CAP, MAX_SIZE_CAP};

use crate::CliError;

/// Resource caps and sampling parameters.
///
/// Values come from built-in defaults, then the config file, then
/// command-line flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliConfig {
    pub size_cap: u32,
    pub exhaustive_cap: u32,
    pub cycle_length_cap: u32,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            size_cap: DEFAULT_SIZE_CAP,
            exhaustive_cap: 8,
            cycle_length_cap: DEFAULT_CYCLE_BOUND,
            sample_count: 100,
            seed: 0,
        }
    }
}

/// The config file: every key optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    size_cap: Option<u32>,
    exhaustive_cap: Option<u32>,
    cycle_length_cap: Option<u32>,
    sample_count: Option<usize>,
    seed: Option<u64>,
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Overrides {
    pub size_cap: Option<u32>,
    pub seed: Option<u64>,
}

impl CliConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let file: ConfigFile =
            toml::from_str(text).map_err(|e| CliError::Usage(format!("invalid config: {e}")))?;
        let d = Self::default();
        Ok(Self {
            size_cap: file.size_cap.unwrap_or(d.size_cap),
            exhaustive_cap: file.exhaustive_cap.unwrap_or(d.exhaustive_cap),
            cycle_length_cap: file.cycle_length_cap.unwrap_or(d.cycle_length_cap),
            sample_count: file.sample_count.unwrap_or(d.sample_count),
            seed: file.seed.unwrap_or(d.seed),
        })
    }

    pub fn load(path: Option<&Path>, overrides: Overrides) -> Result<Self, CliError> {
        let mut config = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| {
                    CliError::Usage(format!("cannot read config {}: {e}", p.display()))
                })?;
                Self::from_toml(&text)?
            }
            None => Self::default(),
        };
        if let Some(cap) = overrides.size_cap {
            config.size_cap = cap;
        }
        if let Some(seed) = overrides.seed {
            config.seed = seed;
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.size_cap == 0
            || self.exhaustive_cap == 0
            || self.cycle_length_cap == 0
            || self.sample_count == 0
        {
            return Err(CliError::Usage("all caps must be positive".into()));
        }
        if self.size_cap > MAX_SIZE_CAP {
            return Err(CliError::Usage(format!(
                "size_cap {} exceeds the supported maximum {MAX_SIZE_CAP}",
                self.size_cap
            )));
        }
        if self.exhaustive_cap > self.size_cap {
            return Err(CliError::Usage(format!(
                "exhaustive_cap {} exceeds size_cap {}",
                self.exhaustive_cap, self.size_cap
            )));
        }
        if self.cycle_length_cap < 3 {
            return Err(CliError::Usage(
                "cycle_length_cap must be at least 3".into(),
            ));
        }
        Ok(())
    }
}
