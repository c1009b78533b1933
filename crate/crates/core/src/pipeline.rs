//! Pipeline stages shared by the CLI and tests. Each stage loads its inputs
//! from the configured out directory, fails with a missing-dependency error
//! when an upstream artifact is absent, and writes only its own artifacts.

use std::path::Path;

use crate::backbone::{train_backbone, BackboneModel, TrainHyper};
use crate::bench::{
    accuracy_pretty, accuracy_tsv, action_accuracy_table, profile_pretty, profile_tsv, run_sweep,
    selection_tsv, sweep_pretty, sweep_tsv, tolerance_select, LayerProfile, SweepOutput, SweepRow,
};
use crate::checkpoint::{load_snippet_sets, save_snippet_sets, Container};
use crate::config::{EvalSplit, RunConfig};
use crate::controller::{build_labels, train_classifier, ActionClassifier, ClassifierOptions};
use crate::corpus::{ingest_and_split, make_eval_cases, EvalCase, Snippet};
use crate::error::{Error, Result};
use crate::exit_heads::{train_heads, IntermediateHeads};

fn ensure_out_dir(config: &RunConfig) -> Result<()> {
    std::fs::create_dir_all(&config.out_dir)?;
    Ok(())
}

fn missing(what: &'static str, path: &Path, produced_by: &'static str) -> Error {
    Error::MissingArtifact {
        what,
        path: path.to_path_buf(),
        produced_by,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IngestSummary {
    pub train_snippets: usize,
    pub test_snippets: usize,
}

/// Tokenize the corpus directory and persist the train/test token arrays.
pub fn ingest_stage(config: &RunConfig) -> Result<IngestSummary> {
    ensure_out_dir(config)?;
    let (train, test) = ingest_and_split(
        &config.data_dir,
        &config.extensions,
        config.split_ratio,
        config.ingest_seed(),
    )?;
    save_snippet_sets(&train, &test, &config.corpus_path())?;
    Ok(IngestSummary {
        train_snippets: train.len(),
        test_snippets: test.len(),
    })
}

pub fn load_corpus(config: &RunConfig) -> Result<(Vec<Snippet>, Vec<Snippet>)> {
    let path = config.corpus_path();
    if !path.exists() {
        return Err(missing("corpus checkpoint", &path, "ingest"));
    }
    load_snippet_sets(&path)
}

/// Train the backbone on the ingested train split; returns per-epoch losses.
pub fn train_backbone_stage(config: &RunConfig) -> Result<Vec<f64>> {
    ensure_out_dir(config)?;
    let (train, _) = load_corpus(config)?;
    let mut model = BackboneModel::init(config.model_config(), config.backbone_seed())?;
    let hyper = TrainHyper {
        lr: config.backbone_lr,
        epochs: config.backbone_epochs,
        batch_size: config.batch_size,
        seed: config.backbone_seed(),
    };
    let losses = train_backbone(&mut model, &train, &hyper)?;
    model.to_container().save(&config.backbone_path())?;
    Ok(losses)
}

pub fn load_backbone(config: &RunConfig) -> Result<BackboneModel> {
    let path = config.backbone_path();
    if !path.exists() {
        return Err(missing("backbone checkpoint", &path, "train-backbone"));
    }
    BackboneModel::from_container(&Container::load(&path)?)
}

/// Train the intermediate heads on the frozen backbone.
pub fn train_heads_stage(config: &RunConfig) -> Result<Vec<f64>> {
    ensure_out_dir(config)?;
    let (train, _) = load_corpus(config)?;
    let backbone = load_backbone(config)?;
    let hyper = TrainHyper {
        lr: config.heads_lr,
        epochs: config.heads_epochs,
        batch_size: config.batch_size,
        seed: config.heads_seed(),
    };
    let (heads, losses) = train_heads(&backbone, &train, &hyper)?;
    heads.to_container().save(&config.heads_path())?;
    Ok(losses)
}

pub fn load_heads(config: &RunConfig, backbone: &BackboneModel) -> Result<IntermediateHeads> {
    let path = config.heads_path();
    if !path.exists() {
        return Err(missing("exit-heads checkpoint", &path, "train-heads"));
    }
    IntermediateHeads::from_container(&Container::load(&path)?, &backbone.config)
}

/// Build gold labels over the train split and train the action classifier.
pub fn train_controller_stage(config: &RunConfig) -> Result<Vec<f64>> {
    ensure_out_dir(config)?;
    let (train, _) = load_corpus(config)?;
    let backbone = load_backbone(config)?;
    let heads = load_heads(config, &backbone)?;
    let samples = build_labels(&backbone, &heads, &train)?;
    let hyper = TrainHyper {
        lr: config.ctrl_lr,
        epochs: config.ctrl_epochs,
        batch_size: config.ctrl_batch,
        seed: config.ctrl_seed(),
    };
    let options = ClassifierOptions {
        class_rebalance: config.ctrl_rebalance,
    };
    let (classifier, losses) = train_classifier(&samples, &hyper, &options)?;
    classifier.to_container().save(&config.classifier_path())?;
    Ok(losses)
}

pub fn load_classifier(config: &RunConfig) -> Result<ActionClassifier> {
    let path = config.classifier_path();
    if !path.exists() {
        return Err(missing(
            "action-classifier checkpoint",
            &path,
            "train-controller",
        ));
    }
    ActionClassifier::from_container(&Container::load(&path)?)
}

/// Everything needed to serve or evaluate completions.
pub struct Engine {
    pub backbone: BackboneModel,
    pub heads: IntermediateHeads,
    pub classifier: ActionClassifier,
}

pub fn load_engine(config: &RunConfig) -> Result<Engine> {
    let backbone = load_backbone(config)?;
    let heads = load_heads(config, &backbone)?;
    let classifier = load_classifier(config)?;
    Ok(Engine {
        backbone,
        heads,
        classifier,
    })
}

fn eval_split_snippets<'a>(
    config: &RunConfig,
    train: &'a [Snippet],
    test: &'a [Snippet],
) -> &'a [Snippet] {
    match config.eval_split {
        EvalSplit::Test => test,
        EvalSplit::Train => train,
    }
}

/// Evaluation cases over the configured split, capped at `max_eval_cases`.
pub fn eval_cases_for(config: &RunConfig, train: &[Snippet], test: &[Snippet]) -> Vec<EvalCase> {
    let snippets = eval_split_snippets(config, train, test);
    let mut cases = make_eval_cases(snippets, config.eval_seed());
    if config.max_eval_cases > 0 && cases.len() > config.max_eval_cases {
        cases.truncate(config.max_eval_cases);
    }
    cases
}

/// Run minimum-layer profiling over the configured split and write both
/// report renderings.
pub fn profile_stage(config: &RunConfig) -> Result<LayerProfile> {
    ensure_out_dir(config)?;
    let (train, test) = load_corpus(config)?;
    let backbone = load_backbone(config)?;
    let heads = load_heads(config, &backbone)?;
    let snippets = eval_split_snippets(config, &train, &test);
    let profile = crate::bench::profile_min_layers(&backbone, &heads, snippets)?;
    let header = config.echo();
    std::fs::write(
        config.out_dir.join("profile.tsv"),
        profile_tsv(&profile, &header),
    )?;
    std::fs::write(
        config.out_dir.join("profile.txt"),
        profile_pretty(&profile, &header),
    )?;
    Ok(profile)
}

#[derive(Debug)]
pub struct SweepArtifacts {
    pub output: SweepOutput,
    pub selections: Vec<(f64, Option<SweepRow>)>,
    pub cases: usize,
}

/// Run the full threshold sweep plus tolerance selection and the per-threshold
/// classifier accuracy table; writes all report files.
pub fn sweep_stage(config: &RunConfig) -> Result<SweepArtifacts> {
    ensure_out_dir(config)?;
    let (train, test) = load_corpus(config)?;
    let engine = load_engine(config)?;
    let cases = eval_cases_for(config, &train, &test);
    if cases.is_empty() {
        return Err(Error::EmptyEvalSet);
    }
    let base = config.generation_config();
    let output = run_sweep(
        &engine.backbone,
        &engine.heads,
        &engine.classifier,
        &cases,
        &config.grid,
        &base,
        config.sweep_full_cross,
        &config.tolerances,
    )?;
    let selections = tolerance_select(&output.rows, output.baseline_rouge, &config.tolerances)?;

    let header = config.echo();
    let include_wall = !config.deterministic;
    std::fs::write(
        config.out_dir.join("sweep.tsv"),
        sweep_tsv(&output, &header, include_wall),
    )?;
    std::fs::write(
        config.out_dir.join("selection.tsv"),
        selection_tsv(&selections, &header, include_wall),
    )?;
    std::fs::write(
        config.out_dir.join("sweep.txt"),
        sweep_pretty(&output, &selections, &header, include_wall),
    )?;

    // classifier accuracy in record mode over the eval split's gold labels
    let snippets = eval_split_snippets(config, &train, &test);
    let samples = build_labels(&engine.backbone, &engine.heads, snippets)?;
    if !samples.is_empty() {
        let table = action_accuracy_table(&engine.classifier, &samples, &config.grid)?;
        std::fs::write(
            config.out_dir.join("actions.tsv"),
            accuracy_tsv(&table, &header),
        )?;
        std::fs::write(
            config.out_dir.join("actions.txt"),
            accuracy_pretty(&table, &header),
        )?;
    }

    Ok(SweepArtifacts {
        output,
        selections,
        cases: cases.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_tiny_corpus(dir: &Path) {
        let mut text = String::new();
        for i in 0..30 {
            text.push_str(&format!("fn item_{i}() -> u32 {{ {i} }}\n\n"));
        }
        std::fs::write(dir.join("lib.rs"), text).unwrap();
    }

    fn tiny_run_config(data: &Path, out: &Path) -> RunConfig {
        RunConfig {
            data_dir: data.to_path_buf(),
            out_dir: out.to_path_buf(),
            n_layers: 2,
            d_model: 16,
            n_heads: 2,
            d_ff: 32,
            max_positions: 128,
            backbone_epochs: 1,
            heads_epochs: 1,
            ctrl_epochs: 1,
            max_eval_cases: 10,
            grid: vec![0.5, 0.9],
            tolerances: vec![0.05],
            deterministic: true,
            ..RunConfig::default()
        }
    }

    #[test]
    fn stages_enforce_dependencies() {
        let tmp = tempfile::tempdir().unwrap();
        let data = tmp.path().join("data");
        let out = tmp.path().join("out");
        std::fs::create_dir_all(&data).unwrap();
        write_tiny_corpus(&data);
        let config = tiny_run_config(&data, &out);

        // heads before backbone: missing dependency
        let err = train_heads_stage(&config).unwrap_err();
        assert!(matches!(err, Error::MissingArtifact { .. }));
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("corpus"));

        ingest_stage(&config).unwrap();
        let err = train_heads_stage(&config).unwrap_err();
        assert!(err.to_string().contains("backbone"));

        train_backbone_stage(&config).unwrap();
        train_heads_stage(&config).unwrap();
        let err = sweep_stage(&config).unwrap_err();
        assert!(err.to_string().contains("classifier"));
        train_controller_stage(&config).unwrap();

        let profile = profile_stage(&config).unwrap();
        assert_eq!(profile.bucket_sum(), profile.total_tokens);
        let artifacts = sweep_stage(&config).unwrap();
        assert!(artifacts.cases > 0);
        assert!(out.join("sweep.tsv").exists());
        assert!(out.join("selection.tsv").exists());
        assert!(out.join("profile.tsv").exists());
        assert!(out.join("actions.tsv").exists());
    }

    #[test]
    fn pipeline_reports_are_deterministic() {
        let tmp = tempfile::tempdir().unwrap();
        let data = tmp.path().join("data");
        std::fs::create_dir_all(&data).unwrap();
        write_tiny_corpus(&data);

        // two runs into the same out dir; the second overwrites the first
        let out = tmp.path().join("out");
        let config = tiny_run_config(&data, &out);
        let mut outputs = Vec::new();
        for _ in 0..2 {
            ingest_stage(&config).unwrap();
            train_backbone_stage(&config).unwrap();
            train_heads_stage(&config).unwrap();
            train_controller_stage(&config).unwrap();
            profile_stage(&config).unwrap();
            sweep_stage(&config).unwrap();
            let mut bundle = Vec::new();
            for file in ["profile.tsv", "sweep.tsv", "selection.tsv", "actions.tsv"] {
                bundle.push(std::fs::read(out.join(file)).unwrap());
            }
            outputs.push(bundle);
        }
        assert_eq!(outputs[0], outputs[1]);
    }
}
