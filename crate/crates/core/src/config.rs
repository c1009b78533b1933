//! Run configuration: a plain-text key=value file with `#` comments,
//! `SEC_`-prefixed environment overrides, and command-line overrides.
//! Unknown keys are rejected and every value is range-checked at load.

use std::path::{Path, PathBuf};

use crate::backbone::ModelConfig;
use crate::controller::{Thresholds, NEVER_FIRE};
use crate::dyninfer::GenerationConfig;
use crate::error::{Error, Result};

pub const ENV_PREFIX: &str = "SEC_";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalSplit {
    Test,
    Train,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub data_dir: PathBuf,
    pub extensions: Vec<String>,
    pub split_ratio: f64,
    pub seed: u64,

    pub n_layers: usize,
    pub d_model: usize,
    pub n_heads: usize,
    pub d_ff: usize,
    pub max_positions: usize,

    pub backbone_epochs: usize,
    pub backbone_lr: f64,
    pub batch_size: usize,
    pub heads_epochs: usize,
    pub heads_lr: f64,
    pub ctrl_epochs: usize,
    pub ctrl_lr: f64,
    pub ctrl_batch: usize,
    pub ctrl_rebalance: bool,

    pub alpha: f64,
    pub beta: f64,
    pub attach_stride: usize,
    pub max_new_tokens: usize,
    pub max_context: usize,
    pub kappa: f64,
    pub enable_exit: bool,
    pub enable_stop: bool,
    pub record_only: bool,

    pub grid: Vec<f64>,
    pub tolerances: Vec<f64>,
    pub sweep_full_cross: bool,
    pub eval_split: EvalSplit,
    pub max_eval_cases: usize,

    pub out_dir: PathBuf,
    pub port: u16,
    pub deterministic: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            data_dir: PathBuf::from("crates/core/assets/toy_corpus"),
            extensions: vec!["rs".into(), "py".into(), "txt".into()],
            split_ratio: 0.9,
            seed: 42,
            n_layers: 4,
            d_model: 64,
            n_heads: 4,
            d_ff: 256,
            max_positions: 512,
            backbone_epochs: 20,
            backbone_lr: 1e-3,
            batch_size: 8,
            heads_epochs: 5,
            heads_lr: 1e-3,
            ctrl_epochs: 5,
            ctrl_lr: 1e-2,
            ctrl_batch: 256,
            ctrl_rebalance: false,
            alpha: NEVER_FIRE,
            beta: NEVER_FIRE,
            attach_stride: 1,
            max_new_tokens: 10,
            max_context: 128,
            kappa: 1.0 / 3.0,
            enable_exit: true,
            enable_stop: true,
            record_only: false,
            grid: vec![0.0, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999],
            tolerances: vec![0.01, 0.05, 0.10, 0.20],
            sweep_full_cross: false,
            eval_split: EvalSplit::Test,
            max_eval_cases: 200,
            out_dir: PathBuf::from("out"),
            port: 7878,
            deterministic: false,
        }
    }
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("invalid value for {key}: '{value}'")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(Error::Config(format!(
            "invalid boolean for {key}: '{value}'"
        ))),
    }
}

fn parse_float_list(key: &str, value: &str) -> Result<Vec<f64>> {
    value
        .split(',')
        .map(|s| parse::<f64>(key, s.trim()))
        .collect()
}

impl RunConfig {
    /// Apply one `key=value` pair. Unknown keys and out-of-range values fail.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let check_positive = |key: &str, v: usize| {
            if v == 0 {
                Err(Error::Config(format!("{key} must be >= 1")))
            } else {
                Ok(v)
            }
        };
        let check_prob = |key: &str, v: f64, hi: f64| {
            if !(0.0..=hi).contains(&v) {
                Err(Error::Config(format!("{key} must be in [0, {hi}], got {v}")))
            } else {
                Ok(v)
            }
        };
        match key {
            "data_dir" => self.data_dir = PathBuf::from(value),
            "extensions" => {
                self.extensions = value
                    .split(',')
                    .map(|s| s.trim().trim_start_matches('.').to_string())
                    .filter(|s| !s.is_empty())
                    .collect();
                if self.extensions.is_empty() {
                    return Err(Error::Config("extensions must not be empty".into()));
                }
            }
            "split_ratio" => {
                let v: f64 = parse(key, value)?;
                if !(v > 0.0 && v < 1.0) {
                    return Err(Error::Config(format!(
                        "split_ratio must be in (0, 1), got {v}"
                    )));
                }
                self.split_ratio = v;
            }
            "seed" => self.seed = parse(key, value)?,
            "n_layers" => self.n_layers = check_positive(key, parse(key, value)?)?,
            "d_model" => self.d_model = check_positive(key, parse(key, value)?)?,
            "n_heads" => self.n_heads = check_positive(key, parse(key, value)?)?,
            "d_ff" => self.d_ff = check_positive(key, parse(key, value)?)?,
            "max_positions" => self.max_positions = check_positive(key, parse(key, value)?)?,
            "backbone_epochs" => self.backbone_epochs = parse(key, value)?,
            "backbone_lr" => self.backbone_lr = Self::check_lr(key, parse(key, value)?)?,
            "batch_size" => self.batch_size = check_positive(key, parse(key, value)?)?,
            "heads_epochs" => self.heads_epochs = parse(key, value)?,
            "heads_lr" => self.heads_lr = Self::check_lr(key, parse(key, value)?)?,
            "ctrl_epochs" => self.ctrl_epochs = parse(key, value)?,
            "ctrl_lr" => self.ctrl_lr = Self::check_lr(key, parse(key, value)?)?,
            "ctrl_batch" => self.ctrl_batch = check_positive(key, parse(key, value)?)?,
            "ctrl_rebalance" => self.ctrl_rebalance = parse_bool(key, value)?,
            "alpha" => self.alpha = check_prob(key, parse(key, value)?, NEVER_FIRE)?,
            "beta" => self.beta = check_prob(key, parse(key, value)?, NEVER_FIRE)?,
            "attach_stride" => self.attach_stride = check_positive(key, parse(key, value)?)?,
            "max_new_tokens" => self.max_new_tokens = check_positive(key, parse(key, value)?)?,
            "max_context" => self.max_context = check_positive(key, parse(key, value)?)?,
            "kappa" => self.kappa = check_prob(key, parse(key, value)?, 1.0)?,
            "enable_exit" => self.enable_exit = parse_bool(key, value)?,
            "enable_stop" => self.enable_stop = parse_bool(key, value)?,
            "record_only" => self.record_only = parse_bool(key, value)?,
            "grid" => {
                let grid = parse_float_list(key, value)?;
                for &v in &grid {
                    check_prob(key, v, NEVER_FIRE)?;
                }
                if grid.is_empty() {
                    return Err(Error::Config("grid must not be empty".into()));
                }
                self.grid = grid;
            }
            "tolerances" => {
                let t = parse_float_list(key, value)?;
                for &v in &t {
                    check_prob(key, v, 1.0)?;
                }
                if t.is_empty() {
                    return Err(Error::Config("tolerances must not be empty".into()));
                }
                self.tolerances = t;
            }
            "sweep_full_cross" => self.sweep_full_cross = parse_bool(key, value)?,
            "eval_split" => {
                self.eval_split = match value {
                    "test" => EvalSplit::Test,
                    "train" => EvalSplit::Train,
                    _ => {
                        return Err(Error::Config(format!(
                            "eval_split must be 'test' or 'train', got '{value}'"
                        )))
                    }
                }
            }
            "max_eval_cases" => self.max_eval_cases = parse(key, value)?,
            "out_dir" => self.out_dir = PathBuf::from(value),
            "port" => self.port = parse(key, value)?,
            "deterministic" => self.deterministic = parse_bool(key, value)?,
            _ => return Err(Error::Config(format!("unknown config key '{key}'"))),
        }
        Ok(())
    }

    fn check_lr(key: &str, v: f64) -> Result<f64> {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Config(format!("{key} must be positive, got {v}")));
        }
        Ok(v)
    }

    /// Parse a key=value file with `#` comments and blank lines.
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Config(format!(
                    "{}:{}: expected key=value, got '{line}'",
                    path.display(),
                    lineno + 1
                )));
            };
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    /// Apply `SEC_`-prefixed environment variables; `SEC_ALPHA=0.9` maps to
    /// `alpha=0.9`. Unknown suffixes are rejected like unknown file keys.
    pub fn apply_env(&mut self, vars: impl Iterator<Item = (String, String)>) -> Result<()> {
        for (name, value) in vars {
            if let Some(suffix) = name.strip_prefix(ENV_PREFIX) {
                self.set(&suffix.to_ascii_lowercase(), &value)?;
            }
        }
        Ok(())
    }

    /// Apply repeated `key=value` override strings (from `--set`).
    pub fn apply_overrides(&mut self, overrides: &[String]) -> Result<()> {
        for item in overrides {
            let Some((key, value)) = item.split_once('=') else {
                return Err(Error::Config(format!(
                    "override must be key=value, got '{item}'"
                )));
            };
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    /// Load from optional file, then process environment, then overrides.
    pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<Self> {
        let mut config = RunConfig::default();
        if let Some(p) = path {
            config.apply_file(p)?;
        }
        config.apply_env(std::env::vars())?;
        config.apply_overrides(overrides)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        self.model_config().validate()?;
        self.thresholds().validate()?;
        if self.max_context > self.max_positions {
            return Err(Error::Config(format!(
                "max_context {} exceeds max_positions {}",
                self.max_context, self.max_positions
            )));
        }
        Ok(())
    }

    pub fn model_config(&self) -> ModelConfig {
        ModelConfig {
            n_layers: self.n_layers,
            d_model: self.d_model,
            n_heads: self.n_heads,
            d_ff: self.d_ff,
            vocab_size: crate::corpus::Vocabulary::TOTAL_SIZE,
            max_positions: self.max_positions,
        }
    }

    pub fn thresholds(&self) -> Thresholds {
        Thresholds::new(self.alpha, self.beta)
    }

    pub fn generation_config(&self) -> GenerationConfig {
        GenerationConfig {
            max_new_tokens: self.max_new_tokens,
            max_context: self.max_context,
            thresholds: self.thresholds(),
            attach_stride: self.attach_stride,
            enable_exit: self.enable_exit,
            enable_stop: self.enable_stop,
            record_only: self.record_only,
            kappa: self.kappa,
        }
    }

    // artifact locations under out_dir
    pub fn corpus_path(&self) -> PathBuf {
        self.out_dir.join("corpus.ckpt")
    }
    pub fn backbone_path(&self) -> PathBuf {
        self.out_dir.join("backbone.ckpt")
    }
    pub fn heads_path(&self) -> PathBuf {
        self.out_dir.join("heads.ckpt")
    }
    pub fn classifier_path(&self) -> PathBuf {
        self.out_dir.join("controller.ckpt")
    }

    /// The effective configuration as sorted key=value lines, suitable for
    /// report headers; reproduces the run when fed back in.
    pub fn echo(&self) -> Vec<String> {
        let mut pairs = vec![
            format!("alpha={}", self.alpha),
            format!("attach_stride={}", self.attach_stride),
            format!("backbone_epochs={}", self.backbone_epochs),
            format!("backbone_lr={}", self.backbone_lr),
            format!("batch_size={}", self.batch_size),
            format!("beta={}", self.beta),
            format!("ctrl_batch={}", self.ctrl_batch),
            format!("ctrl_epochs={}", self.ctrl_epochs),
            format!("ctrl_lr={}", self.ctrl_lr),
            format!("ctrl_rebalance={}", self.ctrl_rebalance),
            format!("d_ff={}", self.d_ff),
            format!("d_model={}", self.d_model),
            format!("data_dir={}", self.data_dir.display()),
            format!("deterministic={}", self.deterministic),
            format!("enable_exit={}", self.enable_exit),
            format!("enable_stop={}", self.enable_stop),
            format!(
                "eval_split={}",
                match self.eval_split {
                    EvalSplit::Test => "test",
                    EvalSplit::Train => "train",
                }
            ),
            format!("extensions={}", self.extensions.join(",")),
            format!(
                "grid={}",
                self.grid
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            format!("heads_epochs={}", self.heads_epochs),
            format!("heads_lr={}", self.heads_lr),
            format!("kappa={}", self.kappa),
            format!("max_context={}", self.max_context),
            format!("max_eval_cases={}", self.max_eval_cases),
            format!("max_new_tokens={}", self.max_new_tokens),
            format!("max_positions={}", self.max_positions),
            format!("n_heads={}", self.n_heads),
            format!("n_layers={}", self.n_layers),
            format!("out_dir={}", self.out_dir.display()),
            format!("port={}", self.port),
            format!("record_only={}", self.record_only),
            format!("seed={}", self.seed),
            format!("split_ratio={}", self.split_ratio),
            format!("sweep_full_cross={}", self.sweep_full_cross),
            format!(
                "tolerances={}",
                self.tolerances
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        ];
        pairs.sort();
        pairs
    }

    // derived per-stage seeds, so stages stay independent but reproducible
    pub fn ingest_seed(&self) -> u64 {
        self.seed
    }
    pub fn backbone_seed(&self) -> u64 {
        self.seed.wrapping_add(1)
    }
    pub fn heads_seed(&self) -> u64 {
        self.seed.wrapping_add(2)
    }
    pub fn ctrl_seed(&self) -> u64 {
        self.seed.wrapping_add(3)
    }
    pub fn eval_seed(&self) -> u64 {
        self.seed.wrapping_add(4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_key_is_rejected() {
        let mut c = RunConfig::default();
        let err = c.set("no_such_key", "1").unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        assert!(err.to_string().contains("unknown config key"));
    }

    #[test]
    fn ranges_are_checked() {
        let mut c = RunConfig::default();
        assert!(c.set("split_ratio", "1.0").is_err());
        assert!(c.set("split_ratio", "0.5").is_ok());
        assert!(c.set("alpha", "1.5").is_err());
        assert!(c.set("alpha", "1.01").is_ok());
        assert!(c.set("n_layers", "0").is_err());
        assert!(c.set("kappa", "2.0").is_err());
        assert!(c.set("backbone_lr", "-1").is_err());
        assert!(c.set("eval_split", "dev").is_err());
        assert!(c.set("eval_split", "train").is_ok());
    }

    #[test]
    fn file_parsing_with_comments() {
        let tmp = tempfile::tempdir().unwrap();
        let path = tmp.path().join("run.conf");
        std::fs::write(
            &path,
            "# a comment\nseed = 7\n\nalpha=0.9\nextensions = rs, py\n",
        )
        .unwrap();
        let mut c = RunConfig::default();
        c.apply_file(&path).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.alpha, 0.9);
        assert_eq!(c.extensions, vec!["rs", "py"]);
    }

    #[test]
    fn malformed_file_line_errors() {
        let tmp = tempfile::tempdir().unwrap();
        let path = tmp.path().join("run.conf");
        std::fs::write(&path, "seed 7\n").unwrap();
        let mut c = RunConfig::default();
        assert!(c.apply_file(&path).is_err());
    }

    #[test]
    fn env_overrides_apply() {
        let mut c = RunConfig::default();
        let vars = vec![
            ("SEC_ALPHA".to_string(), "0.8".to_string()),
            ("UNRELATED".to_string(), "x".to_string()),
        ];
        c.apply_env(vars.into_iter()).unwrap();
        assert_eq!(c.alpha, 0.8);
    }

    #[test]
    fn unknown_env_suffix_is_rejected() {
        let mut c = RunConfig::default();
        let vars = vec![("SEC_BOGUS".to_string(), "1".to_string())];
        assert!(c.apply_env(vars.into_iter()).is_err());
    }

    #[test]
    fn overrides_win_and_echo_round_trips() {
        let mut c = RunConfig::default();
        c.apply_overrides(&["alpha=0.7".into(), "seed=9".into()])
            .unwrap();
        assert_eq!(c.alpha, 0.7);
        assert_eq!(c.seed, 9);

        // feeding the echo back reproduces the configuration
        let mut c2 = RunConfig::default();
        for line in c.echo() {
            let (k, v) = line.split_once('=').unwrap();
            c2.set(k, v).unwrap();
        }
        assert_eq!(c, c2);
    }

    #[test]
    fn max_context_cannot_exceed_positions() {
        let mut c = RunConfig::default();
        c.set("max_context", "600").unwrap();
        assert!(c.validate().is_err());
    }
}
