//! Scenario-file front end for `mqslink-core`: parse TOML scenarios with
//! unit-tagged values, run the requested analyses and write CSV/JSON results.

pub mod config;
pub mod output;
pub mod run;
pub mod units;

pub use config::{parse_config, parse_config_str, ConfigError, ParseOptions, ScenarioConfig, DEFAULT_CONFIG};
pub use run::{config_digest, run_scenario, RunOptions, RunReport, Status};
