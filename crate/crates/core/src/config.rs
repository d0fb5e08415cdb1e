//! Experiment configuration, loaded from JSON.
//!
//! Every key has a default, so `{}` is a valid config describing the
//! synthetic benchmark. Unknown keys are rejected.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{ensure, HalError, Result};
use crate::synthgen::GeneratorSpec;

/// Which loss terms are active. One-to-one with the ablation grid columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Switches {
    /// Reconstruction term of the ELBO (plus the auxiliary action-decoder term).
    pub use_lr: bool,
    /// Term (i) of the smoothness constraint.
    pub use_ls: bool,
    /// Both KL terms of the ELBO.
    pub use_lkl: bool,
    /// Term (ii) of the smoothness constraint.
    pub use_delta: bool,
}

impl Switches {
    pub const ALL_ON: Switches = Switches {
        use_lr: true,
        use_ls: true,
        use_lkl: true,
        use_delta: true,
    };
    pub const ALL_OFF: Switches = Switches {
        use_lr: false,
        use_ls: false,
        use_lkl: false,
        use_delta: false,
    };

    /// Rows 1..=12 of the ablation grid (columns L_r, L_s, L_KL, δ).
    pub fn table_row(exp: usize) -> Option<Switches> {
        let (r, s, k, d) = match exp {
            1 => (false, false, false, false),
            2 => (true, false, false, false),
            3 => (false, true, false, false),
            4 => (false, false, true, false),
            5 => (false, false, false, true),
            6 => (false, true, true, false),
            7 => (true, false, true, false),
            8 => (true, true, false, false),
            9 => (false, true, true, true),
            10 => (true, true, false, true),
            11 => (true, true, true, false),
            12 => (true, true, true, true),
            _ => return None,
        };
        Some(Switches {
            use_lr: r,
            use_ls: s,
            use_lkl: k,
            use_delta: d,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SynthConfig {
    pub train_count: usize,
    pub test_count: usize,
    #[serde(rename = "T")]
    pub frames: usize,
    #[serde(rename = "K")]
    pub segments: usize,
    pub min_segment_len: usize,
    pub noise_scale_v: f64,
    pub noise_scale_c: f64,
    pub mixing_depth: usize,
    pub action_cycle: usize,
    /// Class ids assigned round-robin to regime blocks.
    pub class_inventory: Vec<usize>,
    /// Class names written to `mapping.txt`; index = id.
    pub class_names: Vec<String>,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self {
            train_count: 200,
            test_count: 50,
            frames: 100,
            segments: 4,
            min_segment_len: 10,
            noise_scale_v: 0.5,
            noise_scale_c: 0.1,
            mixing_depth: 2,
            action_cycle: 4,
            class_inventory: vec![1, 2, 3, 4],
            class_names: ["background", "action_a", "action_b", "action_c", "action_d"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            seed: 20_240_601,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PathsConfig {
    pub data_dir: PathBuf,
    pub out_dir: PathBuf,
}

impl Default for PathsConfig {
    fn default() -> Self {
        Self {
            data_dir: PathBuf::from("data/synthetic"),
            out_dir: PathBuf::from("runs/default"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AblationConfig {
    /// Grid rows to run, 1..=12.
    pub rows: Vec<usize>,
    pub seeds: Vec<u64>,
}

impl Default for AblationConfig {
    fn default() -> Self {
        Self {
            rows: (1..=12).collect(),
            seeds: vec![1, 2, 3],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
    pub n_v: usize,
    pub n_c: usize,
    pub d: usize,
    pub hidden_width: usize,
    pub heads: usize,
    pub backbone_layers: usize,
    pub causal_attention: bool,
    pub pyramidal: bool,
    /// Add sinusoidal position codes to the backbone input.
    pub positional_encoding: bool,
    /// Attention span on either side of each frame; 0 attends everywhere.
    pub attention_window: usize,
    pub learning_rate: f64,
    pub weight_decay: f64,
    pub grad_clip: f64,
    pub epochs: usize,
    #[serde(rename = "use_Lr")]
    pub use_lr: bool,
    #[serde(rename = "use_Ls")]
    pub use_ls: bool,
    #[serde(rename = "use_LKL")]
    pub use_lkl: bool,
    pub use_delta: bool,
    pub seed: u64,
    /// Minimum segment length used when decoding pseudo labels.
    pub min_segment_len: usize,
    /// Minimum segment length used at inference.
    pub inference_min_segment_len: usize,
    pub refresh_every: usize,
    /// Epochs over which the KL weight ramps linearly from 0 to α.
    pub kl_warmup_epochs: usize,
    pub boundary_margin: usize,
    pub bg_id: usize,
    pub allow_repeats: bool,
    pub strict_lengths: bool,
    pub identcheck_max_samples: usize,
    pub sensitivity_betas: Vec<f64>,
    pub synth: SynthConfig,
    pub paths: PathsConfig,
    pub ablation: AblationConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            alpha: 0.1,
            beta: 1.0,
            delta: 0.1,
            n_v: 4,
            n_c: 2,
            d: 8,
            hidden_width: 32,
            heads: 4,
            backbone_layers: 2,
            causal_attention: false,
            pyramidal: false,
            positional_encoding: true,
            attention_window: 0,
            learning_rate: 5e-4,
            weight_decay: 1e-4,
            grad_clip: 5.0,
            epochs: 60,
            use_lr: true,
            use_ls: true,
            use_lkl: true,
            use_delta: true,
            seed: 1,
            min_segment_len: 2,
            inference_min_segment_len: 1,
            refresh_every: 5,
            kl_warmup_epochs: 0,
            boundary_margin: 2,
            bg_id: 0,
            allow_repeats: false,
            strict_lengths: false,
            identcheck_max_samples: 2000,
            sensitivity_betas: vec![0.0, 0.1, 0.5, 1.0, 2.0],
            synth: SynthConfig::default(),
            paths: PathsConfig::default(),
            ablation: AblationConfig::default(),
        }
    }
}

impl ExperimentConfig {
    /// Epoch budgets for the released-feature datasets.
    pub fn dataset_epochs(name: &str) -> Option<usize> {
        match name.to_ascii_lowercase().as_str() {
            "breakfast" => Some(400),
            "hollywood" => Some(300),
            "crosstask" => Some(200),
            "gtea" => Some(300),
            _ => None,
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = serde_json::from_str(text)
            .map_err(|e| HalError::validation(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HalError::io(format!("reading config {}", path.display()), e))?;
        let mut cfg = Self::from_json_str(&text)?;
        cfg.resolve_paths(path.parent().unwrap_or(Path::new(".")));
        Ok(cfg)
    }

    /// Relative paths in a config file are relative to that file.
    pub fn resolve_paths(&mut self, base: &Path) {
        for p in [&mut self.paths.data_dir, &mut self.paths.out_dir] {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn switches(&self) -> Switches {
        Switches {
            use_lr: self.use_lr,
            use_ls: self.use_ls,
            use_lkl: self.use_lkl,
            use_delta: self.use_delta,
        }
    }

    pub fn set_switches(&mut self, s: Switches) {
        self.use_lr = s.use_lr;
        self.use_ls = s.use_ls;
        self.use_lkl = s.use_lkl;
        self.use_delta = s.use_delta;
    }

    pub fn generator_spec(&self) -> GeneratorSpec {
        GeneratorSpec {
            frames: self.synth.frames,
            n_c: self.n_c,
            n_v: self.n_v,
            d: self.d,
            segments: self.synth.segments,
            min_segment_len: self.synth.min_segment_len,
            noise_scale_v: self.synth.noise_scale_v,
            noise_scale_c: self.synth.noise_scale_c,
            mixing_depth: self.synth.mixing_depth,
            action_cycle: self.synth.action_cycle,
            seed: self.synth.seed,
        }
    }

    /// Checks every field; messages carry the offending key path.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta), ("delta", self.delta)] {
            ensure!(v >= 0.0 && v.is_finite(), "{name}: must be a nonnegative real, got {v}");
        }
        for (name, v) in [
            ("n_v", self.n_v),
            ("n_c", self.n_c),
            ("d", self.d),
            ("hidden_width", self.hidden_width),
            ("heads", self.heads),
            ("min_segment_len", self.min_segment_len),
            ("inference_min_segment_len", self.inference_min_segment_len),
            ("refresh_every", self.refresh_every),
        ] {
            ensure!(v > 0, "{name}: must be a positive integer");
        }
        ensure!(
            self.hidden_width.is_multiple_of(self.heads),
            "hidden_width: {} is not divisible by heads = {}",
            self.hidden_width,
            self.heads
        );
        for (name, v) in [
            ("learning_rate", self.learning_rate),
            ("weight_decay", self.weight_decay),
        ] {
            ensure!(v > 0.0 && v.is_finite(), "{name}: must be a positive real, got {v}");
        }
        ensure!(self.grad_clip >= 0.0, "grad_clip: must be nonnegative");
        ensure!(
            self.identcheck_max_samples >= 50,
            "identcheck_max_samples: must be at least 50"
        );
        for &row in &self.ablation.rows {
            ensure!(
                Switches::table_row(row).is_some(),
                "ablation.rows: {row} is not in 1..=12"
            );
        }
        ensure!(!self.ablation.seeds.is_empty(), "ablation.seeds: must not be empty");
        ensure!(
            self.synth.class_inventory.iter().all(|&c| c < self.synth.class_names.len()),
            "synth.class_inventory: ids must index synth.class_names"
        );
        ensure!(
            self.synth.class_names.iter().all(|n| !n.is_empty() && !n.contains(char::is_whitespace)),
            "synth.class_names: names must be nonempty and contain no whitespace"
        );
        self.generator_spec()
            .validate()
            .map_err(|e| HalError::validation(format!("synth: {e}")))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_is_benchmark_default() {
        let cfg = ExperimentConfig::from_json_str("{}").unwrap();
        assert_eq!(cfg, ExperimentConfig::default());
        assert_eq!(cfg.learning_rate, 5e-4);
        assert_eq!(cfg.weight_decay, 1e-4);
        assert_eq!(cfg.synth.train_count, 200);
        assert_eq!(cfg.synth.test_count, 50);
        assert_eq!((cfg.synth.frames, cfg.synth.segments), (100, 4));
        assert_eq!((cfg.n_c, cfg.n_v, cfg.d), (2, 4, 8));
        assert_eq!(cfg.epochs, 60);
    }

    #[test]
    fn switch_keys_use_grid_names() {
        let cfg = ExperimentConfig::from_json_str(r#"{"use_Lr": false, "use_LKL": false}"#).unwrap();
        assert!(!cfg.use_lr && !cfg.use_lkl && cfg.use_ls && cfg.use_delta);
        let json = cfg.to_json();
        assert!(json.contains("\"use_Ls\""));
    }

    #[test]
    fn unknown_and_invalid_keys_report_field() {
        let err = ExperimentConfig::from_json_str(r#"{"alpah": 1.0}"#).unwrap_err();
        assert!(err.to_string().contains("alpah"));
        let err = ExperimentConfig::from_json_str(r#"{"learning_rate": 0.0}"#).unwrap_err();
        assert!(err.to_string().contains("learning_rate"));
        let err = ExperimentConfig::from_json_str(r#"{"synth": {"K": 20, "min_segment_len": 10}}"#)
            .unwrap_err();
        assert!(err.to_string().starts_with("synth:"));
    }

    #[test]
    fn grid_rows() {
        assert_eq!(Switches::table_row(1), Some(Switches::ALL_OFF));
        assert_eq!(Switches::table_row(12), Some(Switches::ALL_ON));
        assert_eq!(Switches::table_row(13), None);
        let on: usize = (1..=12)
            .map(|r| {
                let s = Switches::table_row(r).unwrap();
                [s.use_lr, s.use_ls, s.use_lkl, s.use_delta].iter().filter(|b| **b).count()
            })
            .sum();
        assert_eq!(on, 1 + 1 + 1 + 1 + 2 + 2 + 2 + 3 + 3 + 3 + 4);
    }

    #[test]
    fn released_dataset_epochs() {
        assert_eq!(ExperimentConfig::dataset_epochs("Breakfast"), Some(400));
        assert_eq!(ExperimentConfig::dataset_epochs("hollywood"), Some(300));
        assert_eq!(ExperimentConfig::dataset_epochs("CrossTask"), Some(200));
        assert_eq!(ExperimentConfig::dataset_epochs("gtea"), Some(300));
    }
}
