//! Measurement harness: minimum-layer profiling, threshold sweeps with
//! exit-only / stop-only / both-actions modes, tolerance-based selection, and
//! TSV plus aligned-column report rendering.

use crate::backbone::BackboneModel;
use crate::controller::{decide, Action, ActionClassifier, DecisionSample, Thresholds, NEVER_FIRE};
use crate::corpus::{EvalCase, Snippet};
use crate::dyninfer::{generate, generate_baseline, GenerationConfig};
use crate::error::{Error, Result};
use crate::exit_heads::{HeadView, IntermediateHeads};
use crate::metrics::{action_pr, rouge_l, PRScore};

/// Histogram of the minimum layer needed per token, with the band boundaries
/// generalized from 12-layer groupings: `failed`, exactly 1, `2..=c-1`,
/// `max(2,c)..=n-1`, exactly `n`, where `c = ceil(n/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerProfile {
    pub n_layers: usize,
    pub failed: usize,
    pub exactly_one: usize,
    pub low_band: usize,
    pub high_band: usize,
    pub exactly_n: usize,
    pub total_tokens: usize,
    /// Mean minimum layer over non-failed tokens; `None` when all failed.
    pub avg_required_layers: Option<f64>,
}

impl LayerProfile {
    fn mid(n: usize) -> usize {
        n.div_ceil(2)
    }

    /// Bucket labels with their counts, in rendering order.
    pub fn buckets(&self) -> Vec<(String, usize)> {
        let n = self.n_layers;
        let c = Self::mid(n);
        let mut out = vec![
            ("failed".to_string(), self.failed),
            ("1".to_string(), self.exactly_one),
        ];
        if c > 2 {
            out.push((format!("2-{}", c - 1), self.low_band));
        }
        if n > 2 {
            out.push((format!("{}-{}", c.max(2), n - 1), self.high_band));
        }
        if n > 1 {
            out.push((n.to_string(), self.exactly_n));
        }
        out
    }

    pub fn bucket_sum(&self) -> usize {
        self.failed + self.exactly_one + self.low_band + self.high_band + self.exactly_n
    }
}

/// First layer (1-based) whose head was correct, if any.
pub fn min_required_layer(correct: &[bool]) -> Option<usize> {
    correct.iter().position(|&c| c).map(|i| i + 1)
}

fn bucket_add(profile: &mut LayerProfile, min_layer: Option<usize>) {
    let n = profile.n_layers;
    let c = LayerProfile::mid(n);
    profile.total_tokens += 1;
    match min_layer {
        None => profile.failed += 1,
        Some(1) => profile.exactly_one += 1,
        Some(l) if l == n => profile.exactly_n += 1,
        Some(l) if l >= 2 && c > 2 && l < c => profile.low_band += 1,
        Some(_) => profile.high_band += 1,
    }
}

/// Teacher-forced minimum-layer profiling: for every position of every
/// snippet, the shallowest layer whose head predicts the true next token.
pub fn profile_min_layers(
    backbone: &BackboneModel,
    heads: &IntermediateHeads,
    snippets: &[Snippet],
) -> Result<LayerProfile> {
    if snippets.is_empty() {
        return Err(Error::EmptyEvalSet);
    }
    let view = HeadView::new(backbone, heads);
    let n = backbone.num_layers();
    let mut profile = LayerProfile {
        n_layers: n,
        failed: 0,
        exactly_one: 0,
        low_band: 0,
        high_band: 0,
        exactly_n: 0,
        total_tokens: 0,
        avg_required_layers: None,
    };
    let mut layer_sum = 0usize;
    let mut scored = 0usize;
    for snippet in snippets {
        if snippet.tokens.len() < 2 {
            continue;
        }
        let table = backbone.teacher_forced_hiddens(&snippet.tokens)?;
        for j in 0..snippet.tokens.len() - 1 {
            let truth = snippet.tokens[j + 1];
            let mut correct = Vec::with_capacity(n);
            for layer in 1..=n {
                let (pred, _) = view.predict(layer, &table.layers[layer - 1].row(j))?;
                correct.push(pred == truth);
            }
            let min = min_required_layer(&correct);
            if let Some(l) = min {
                layer_sum += l;
                scored += 1;
            }
            bucket_add(&mut profile, min);
        }
    }
    if profile.total_tokens == 0 {
        return Err(Error::EmptyEvalSet);
    }
    if scored > 0 {
        profile.avg_required_layers = Some(layer_sum as f64 / scored as f64);
    }
    Ok(profile)
}

/// Which actions a sweep row had enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    ExitOnly,
    StopOnly,
    Both,
}

impl SweepMode {
    pub fn label(self) -> &'static str {
        match self {
            SweepMode::ExitOnly => "exit-only",
            SweepMode::StopOnly => "stop-only",
            SweepMode::Both => "both",
        }
    }
}

/// One sweep measurement. Speed ratios are baseline cost over this row's cost,
/// so 1.0 means no saving.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub mode: SweepMode,
    pub alpha: f64,
    pub beta: f64,
    pub avg_layers: f64,
    pub avg_length: f64,
    pub speed_wall: f64,
    pub speed_layer_equiv: f64,
    pub stop_fraction: f64,
    pub rouge_l: f64,
}

struct RunStats {
    layer_equiv: f64,
    wall_us: f64,
    full_layers: u64,
    rounds: usize,
    tokens: usize,
    stops: usize,
    rouge_sum: f64,
    cases: usize,
}

fn run_cases(
    backbone: &BackboneModel,
    heads: &IntermediateHeads,
    classifier: Option<&ActionClassifier>,
    cases: &[EvalCase],
    config: &GenerationConfig,
) -> Result<RunStats> {
    let mut stats = RunStats {
        layer_equiv: 0.0,
        wall_us: 0.0,
        full_layers: 0,
        rounds: 0,
        tokens: 0,
        stops: 0,
        rouge_sum: 0.0,
        cases: cases.len(),
    };
    for case in cases {
        let result = match classifier {
            Some(clf) => generate(backbone, heads, clf, &case.context, config)?,
            None => generate_baseline(backbone, &case.context, config)?,
        };
        stats.layer_equiv += result.cost.layer_equivalents();
        stats.wall_us += result.cost.wall_clock.as_secs_f64() * 1e6;
        stats.full_layers += result.cost.full_layer_count;
        stats.rounds += result.rounds;
        stats.tokens += result.tokens.len();
        stats.stops += result.stopped as usize;
        stats.rouge_sum += rouge_l(&result.tokens, &case.reference)?.f1;
    }
    Ok(stats)
}

fn row_from_stats(
    stats: &RunStats,
    baseline: &RunStats,
    mode: SweepMode,
    alpha: f64,
    beta: f64,
) -> SweepRow {
    SweepRow {
        mode,
        alpha,
        beta,
        avg_layers: stats.full_layers as f64 / stats.rounds.max(1) as f64,
        avg_length: stats.tokens as f64 / stats.cases.max(1) as f64,
        speed_wall: baseline.wall_us / stats.wall_us.max(1e-9),
        speed_layer_equiv: baseline.layer_equiv / stats.layer_equiv.max(1e-9),
        stop_fraction: stats.stops as f64 / stats.cases.max(1) as f64,
        rouge_l: stats.rouge_sum / stats.cases.max(1) as f64,
    }
}

fn mode_config(
    base: &GenerationConfig,
    mode: SweepMode,
    alpha: f64,
    beta: f64,
) -> GenerationConfig {
    GenerationConfig {
        thresholds: Thresholds::new(alpha, beta),
        enable_exit: mode != SweepMode::StopOnly,
        enable_stop: mode != SweepMode::ExitOnly,
        record_only: false,
        ..base.clone()
    }
}

/// Sweep results plus the baseline figures used as denominators.
#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub baseline_rouge: f64,
    pub baseline_avg_length: f64,
    pub rows: Vec<SweepRow>,
}

/// Run the threshold sweep. Always includes the never-fire origin row first;
/// then one exit-only row per grid value of beta (alpha never fires), one
/// stop-only row per grid value of alpha, and both-actions rows either over
/// the full grid cross product or paired per tolerance from the ablations.
#[allow(clippy::too_many_arguments)]
pub fn run_sweep(
    backbone: &BackboneModel,
    heads: &IntermediateHeads,
    classifier: &ActionClassifier,
    cases: &[EvalCase],
    grid: &[f64],
    base: &GenerationConfig,
    full_cross: bool,
    tolerances: &[f64],
) -> Result<SweepOutput> {
    if cases.is_empty() {
        return Err(Error::EmptyEvalSet);
    }
    let baseline = run_cases(backbone, heads, None, cases, base)?;
    let baseline_rouge = baseline.rouge_sum / baseline.cases.max(1) as f64;

    let mut rows = Vec::new();
    // origin: the dynamic engine with never-fire thresholds
    let origin_cfg = mode_config(base, SweepMode::Both, NEVER_FIRE, NEVER_FIRE);
    let origin = run_cases(backbone, heads, Some(classifier), cases, &origin_cfg)?;
    rows.push(row_from_stats(
        &origin,
        &baseline,
        SweepMode::Both,
        NEVER_FIRE,
        NEVER_FIRE,
    ));

    for &beta in grid {
        let cfg = mode_config(base, SweepMode::ExitOnly, NEVER_FIRE, beta);
        let stats = run_cases(backbone, heads, Some(classifier), cases, &cfg)?;
        rows.push(row_from_stats(
            &stats,
            &baseline,
            SweepMode::ExitOnly,
            NEVER_FIRE,
            beta,
        ));
    }
    for &alpha in grid {
        let cfg = mode_config(base, SweepMode::StopOnly, alpha, NEVER_FIRE);
        let stats = run_cases(backbone, heads, Some(classifier), cases, &cfg)?;
        rows.push(row_from_stats(
            &stats,
            &baseline,
            SweepMode::StopOnly,
            alpha,
            NEVER_FIRE,
        ));
    }

    let mut pairs: Vec<(f64, f64)> = Vec::new();
    if full_cross {
        for &alpha in grid {
            for &beta in grid {
                pairs.push((alpha, beta));
            }
        }
    } else {
        // pair the per-tolerance ablation selections
        let exit_rows: Vec<SweepRow> = rows
            .iter()
            .filter(|r| r.mode == SweepMode::ExitOnly)
            .cloned()
            .collect();
        let stop_rows: Vec<SweepRow> = rows
            .iter()
            .filter(|r| r.mode == SweepMode::StopOnly)
            .cloned()
            .collect();
        for &t in tolerances {
            let beta = tolerance_select(&exit_rows, baseline_rouge, &[t])?
                .pop()
                .and_then(|(_, r)| r)
                .map(|r| r.beta);
            let alpha = tolerance_select(&stop_rows, baseline_rouge, &[t])?
                .pop()
                .and_then(|(_, r)| r)
                .map(|r| r.alpha);
            if let (Some(a), Some(b)) = (alpha, beta) {
                if !pairs.contains(&(a, b)) {
                    pairs.push((a, b));
                }
            }
        }
    }
    for (alpha, beta) in pairs {
        let cfg = mode_config(base, SweepMode::Both, alpha, beta);
        let stats = run_cases(backbone, heads, Some(classifier), cases, &cfg)?;
        rows.push(row_from_stats(
            &stats,
            &baseline,
            SweepMode::Both,
            alpha,
            beta,
        ));
    }

    Ok(SweepOutput {
        baseline_rouge,
        baseline_avg_length: baseline.tokens as f64 / baseline.cases.max(1) as f64,
        rows,
    })
}

/// For each tolerance, the fastest row (by layer-equivalents speed) whose
/// relative ROUGE-L reduction stays within it; ties prefer the lexically
/// lower `(alpha, beta)`. `None` when no row qualifies.
pub fn tolerance_select(
    rows: &[SweepRow],
    baseline_rouge: f64,
    tolerances: &[f64],
) -> Result<Vec<(f64, Option<SweepRow>)>> {
    if rows.is_empty() {
        return Err(Error::Config("tolerance_select requires sweep rows".into()));
    }
    if baseline_rouge == 0.0 {
        return Err(Error::DegenerateBaseline);
    }
    let mut out = Vec::with_capacity(tolerances.len());
    for &t in tolerances {
        let mut best: Option<&SweepRow> = None;
        for row in rows {
            let reduction = (baseline_rouge - row.rouge_l) / baseline_rouge;
            if reduction > t {
                continue;
            }
            best = match best {
                None => Some(row),
                Some(b) => {
                    if row.speed_layer_equiv > b.speed_layer_equiv
                        || (row.speed_layer_equiv == b.speed_layer_equiv
                            && (row.alpha, row.beta) < (b.alpha, b.beta))
                    {
                        Some(row)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        out.push((t, best.cloned()));
    }
    Ok(out)
}

/// Record-mode decision log: the classifier's prediction for each sample's
/// hidden state, paired with its gold label. Nothing is executed.
pub fn record_decisions(
    classifier: &ActionClassifier,
    samples: &[DecisionSample],
    thresholds: &Thresholds,
) -> Vec<(Action, Action)> {
    samples
        .iter()
        .map(|s| (decide(classifier, &s.hidden.view(), thresholds).0, s.gold))
        .collect()
}

/// Per-threshold precision/recall of STOP and EXIT over a sample set, with
/// the other action's threshold at never-fire.
pub fn action_accuracy_table(
    classifier: &ActionClassifier,
    samples: &[DecisionSample],
    grid: &[f64],
) -> Result<Vec<(Action, f64, PRScore)>> {
    let mut out = Vec::new();
    for &t in grid {
        let log = record_decisions(classifier, samples, &Thresholds::new(t, NEVER_FIRE));
        out.push((Action::Stop, t, action_pr(&log, Action::Stop)?));
    }
    for &t in grid {
        let log = record_decisions(classifier, samples, &Thresholds::new(NEVER_FIRE, t));
        out.push((Action::Exit, t, action_pr(&log, Action::Exit)?));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// report rendering

fn header_block(header_lines: &[String]) -> String {
    let mut s = String::new();
    for line in header_lines {
        s.push_str("# ");
        s.push_str(line);
        s.push('\n');
    }
    s
}

fn fmt_threshold(v: f64) -> String {
    format!("{v:.4}")
}

fn sweep_field_names(include_wall: bool) -> Vec<&'static str> {
    let mut names = vec!["mode", "alpha", "beta", "avg_layers", "avg_length"];
    if include_wall {
        names.push("speed_wall");
    }
    names.push("speed_layer_equiv");
    names.push("stop_fraction");
    names.push("rouge_l");
    names
}

fn sweep_field_values(row: &SweepRow, include_wall: bool) -> Vec<String> {
    let mut values = vec![
        row.mode.label().to_string(),
        fmt_threshold(row.alpha),
        fmt_threshold(row.beta),
        format!("{:.4}", row.avg_layers),
        format!("{:.4}", row.avg_length),
    ];
    if include_wall {
        values.push(format!("{:.4}", row.speed_wall));
    }
    values.push(format!("{:.4}", row.speed_layer_equiv));
    values.push(format!("{:.4}", row.stop_fraction));
    values.push(format!("{:.6}", row.rouge_l));
    values
}

pub fn sweep_tsv(output: &SweepOutput, header_lines: &[String], include_wall: bool) -> String {
    let mut s = header_block(header_lines);
    s.push_str(&format!("# baseline_rouge_l={:.6}\n", output.baseline_rouge));
    s.push_str(&format!(
        "# baseline_avg_length={:.4}\n",
        output.baseline_avg_length
    ));
    s.push_str(&sweep_field_names(include_wall).join("\t"));
    s.push('\n');
    for row in &output.rows {
        s.push_str(&sweep_field_values(row, include_wall).join("\t"));
        s.push('\n');
    }
    s
}

pub fn selection_tsv(
    selections: &[(f64, Option<SweepRow>)],
    header_lines: &[String],
    include_wall: bool,
) -> String {
    let mut s = header_block(header_lines);
    let mut names = vec!["tolerance"];
    names.extend(sweep_field_names(include_wall));
    s.push_str(&names.join("\t"));
    s.push('\n');
    for (t, row) in selections {
        match row {
            Some(r) => {
                let mut values = vec![format!("{t:.4}")];
                values.extend(sweep_field_values(r, include_wall));
                s.push_str(&values.join("\t"));
            }
            None => {
                s.push_str(&format!("{t:.4}\tn/a"));
            }
        }
        s.push('\n');
    }
    s
}

fn aligned_table(names: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = names.iter().map(|n| n.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i < widths.len() {
                widths[i] = widths[i].max(cell.len());
            }
        }
    }
    let mut s = String::new();
    for (i, n) in names.iter().enumerate() {
        if i > 0 {
            s.push_str("  ");
        }
        s.push_str(&format!("{:>width$}", n, width = widths[i]));
    }
    s.push('\n');
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(&format!("{:>width$}", cell, width = widths[i]));
        }
        s.push('\n');
    }
    s
}

pub fn sweep_pretty(
    output: &SweepOutput,
    selections: &[(f64, Option<SweepRow>)],
    header_lines: &[String],
    include_wall: bool,
) -> String {
    let mut s = header_block(header_lines);
    s.push_str(&format!(
        "baseline: rouge_l {:.6}, avg length {:.4}\n\n",
        output.baseline_rouge, output.baseline_avg_length
    ));
    let names = sweep_field_names(include_wall);
    let rows: Vec<Vec<String>> = output
        .rows
        .iter()
        .map(|r| sweep_field_values(r, include_wall))
        .collect();
    s.push_str(&aligned_table(&names, &rows));
    if !selections.is_empty() {
        s.push_str("\ntolerance selection (fastest within ROUGE-L budget):\n");
        let mut sel_names = vec!["tolerance"];
        sel_names.extend(names);
        let sel_rows: Vec<Vec<String>> = selections
            .iter()
            .map(|(t, row)| match row {
                Some(r) => {
                    let mut v = vec![format!("{t:.4}")];
                    v.extend(sweep_field_values(r, include_wall));
                    v
                }
                None => vec![format!("{t:.4}"), "n/a".to_string()],
            })
            .collect();
        s.push_str(&aligned_table(&sel_names, &sel_rows));
    }
    s
}

pub fn profile_tsv(profile: &LayerProfile, header_lines: &[String]) -> String {
    let mut s = header_block(header_lines);
    s.push_str("bucket\tcount\tfraction\n");
    for (label, count) in profile.buckets() {
        s.push_str(&format!(
            "{label}\t{count}\t{:.6}\n",
            count as f64 / profile.total_tokens.max(1) as f64
        ));
    }
    s.push_str(&format!("total\t{}\t1.000000\n", profile.total_tokens));
    match profile.avg_required_layers {
        Some(avg) => s.push_str(&format!("# avg_required_layers={avg:.4}\n")),
        None => s.push_str("# avg_required_layers=n/a\n"),
    }
    s
}

pub fn profile_pretty(profile: &LayerProfile, header_lines: &[String]) -> String {
    let mut s = header_block(header_lines);
    s.push_str(&format!(
        "minimum layers required per token (n = {}):\n",
        profile.n_layers
    ));
    let rows: Vec<Vec<String>> = profile
        .buckets()
        .into_iter()
        .map(|(label, count)| {
            vec![
                label,
                count.to_string(),
                format!(
                    "{:.1}%",
                    100.0 * count as f64 / profile.total_tokens.max(1) as f64
                ),
            ]
        })
        .collect();
    s.push_str(&aligned_table(&["bucket", "count", "share"], &rows));
    match profile.avg_required_layers {
        Some(avg) => s.push_str(&format!("average required layers: {avg:.4}\n")),
        None => s.push_str("average required layers: n/a\n"),
    }
    s
}

/// Re-render any of this crate's TSV reports as an aligned-column table,
/// passing `#` comment lines through untouched.
pub fn render_tsv_pretty(text: &str) -> String {
    let mut out = String::new();
    let mut rows: Vec<Vec<String>> = Vec::new();
    for line in text.lines() {
        if line.starts_with('#') {
            out.push_str(line);
            out.push('\n');
        } else if !line.is_empty() {
            rows.push(line.split('\t').map(str::to_string).collect());
        }
    }
    if let Some((head, body)) = rows.split_first() {
        let names: Vec<&str> = head.iter().map(String::as_str).collect();
        out.push_str(&aligned_table(&names, body));
    }
    out
}

/// Action-accuracy table rendering: precision/recall per threshold.
pub fn accuracy_tsv(table: &[(Action, f64, PRScore)], header_lines: &[String]) -> String {
    let mut s = header_block(header_lines);
    s.push_str("action\tthreshold\tprecision\trecall\ttp\tfp\tfn\n");
    for (action, t, pr) in table {
        s.push_str(&format!(
            "{}\t{:.4}\t{:.6}\t{:.6}\t{}\t{}\t{}\n",
            action.label(),
            t,
            pr.precision,
            pr.recall,
            pr.true_positive,
            pr.false_positive,
            pr.false_negative
        ));
    }
    s
}

pub fn accuracy_pretty(table: &[(Action, f64, PRScore)], header_lines: &[String]) -> String {
    let mut s = header_block(header_lines);
    s.push_str("action classifier accuracy per threshold:\n");
    let rows: Vec<Vec<String>> = table
        .iter()
        .map(|(action, t, pr)| {
            vec![
                action.label().to_string(),
                format!("{t:.4}"),
                format!("{:.4}", pr.precision),
                format!("{:.4}", pr.recall),
                pr.true_positive.to_string(),
                pr.false_positive.to_string(),
                pr.false_negative.to_string(),
            ]
        })
        .collect();
    s.push_str(&aligned_table(
        &["action", "threshold", "precision", "recall", "tp", "fp", "fn"],
        &rows,
    ));
    s
}
