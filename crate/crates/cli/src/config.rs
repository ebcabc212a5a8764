use std::path::{Path, PathBuf};

use divtop::harness::{CheckOptions, SweepBounds};
use serde::{Deserialize, Serialize};

pub const MAX_ORDER_ENV: &str = "DIVTOP_MAX_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Dot,
    Json,
}

/// Sweep configuration, read from JSON. Every key is optional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub max_order: u64,
    pub max_n: u64,
    pub trivial_bound: u64,
    pub pair_bound: u64,
    pub count_order: u64,
    pub class_bound: usize,
    pub submodule_bound: u64,
    pub integer_window: u64,
    pub rational_bound: u64,
    pub prufer_prime: u64,
    pub prufer_depth: u32,
    pub output_dir: Option<PathBuf>,
    pub formats: Vec<Format>,
    /// Empty means every registered theorem.
    pub theorems: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let b = SweepBounds::default();
        let o = CheckOptions::default();
        Self {
            max_order: b.max_order,
            max_n: b.max_n,
            trivial_bound: b.trivial_bound,
            pair_bound: b.pair_bound,
            count_order: b.count_order,
            class_bound: o.class_bound,
            submodule_bound: o.submodule_bound,
            integer_window: b.integer_window,
            rational_bound: b.rational_bound,
            prufer_prime: b.prufer_prime,
            prufer_depth: b.prufer_depth,
            output_dir: None,
            formats: vec![Format::Json],
            theorems: Vec::new(),
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }

    pub fn apply_env(&mut self) -> Result<(), String> {
        if let Ok(v) = std::env::var(MAX_ORDER_ENV) {
            self.max_order = v
                .trim()
                .parse()
                .map_err(|_| format!("{MAX_ORDER_ENV}: `{v}` is not a positive integer"))?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), String> {
        let bounds = [
            ("max_order", self.max_order),
            ("max_n", self.max_n),
            ("trivial_bound", self.trivial_bound),
            ("pair_bound", self.pair_bound),
            ("count_order", self.count_order),
            ("class_bound", self.class_bound as u64),
            ("submodule_bound", self.submodule_bound),
            ("integer_window", self.integer_window),
            ("rational_bound", self.rational_bound),
            ("prufer_depth", self.prufer_depth as u64),
        ];
        match bounds.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(format!("{name} must be positive")),
            None => Ok(()),
        }
    }

    pub fn bounds(&self) -> SweepBounds {
        SweepBounds {
            max_order: self.max_order,
            max_n: self.max_n,
            trivial_bound: self.trivial_bound,
            pair_bound: self.pair_bound,
            count_order: self.count_order,
            integer_window: self.integer_window,
            rational_bound: self.rational_bound,
            prufer_prime: self.prufer_prime,
            prufer_depth: self.prufer_depth,
        }
    }

    pub fn options(&self) -> CheckOptions {
        CheckOptions {
            class_bound: self.class_bound,
            submodule_bound: self.submodule_bound,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_config_uses_defaults() {
        let c: RunConfig = serde_json::from_str(r#"{"max_order": 50, "theorems": ["fgPS"]}"#).unwrap();
        assert_eq!(c.max_order, 50);
        assert_eq!(c.max_n, 1000);
        assert_eq!(c.class_bound, 16);
        assert_eq!(c.theorems, ["fgPS"]);
        assert!(serde_json::from_str::<RunConfig>(r#"{"max_ordr": 1}"#).is_err());
    }

    #[test]
    fn zero_bound_rejected() {
        let c = RunConfig {
            max_n: 0,
            ..RunConfig::default()
        };
        assert_eq!(c.validate().unwrap_err(), "max_n must be positive");
    }
}
