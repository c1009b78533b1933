//! Acceptance suite: one test per criterion, each printing a PASS line when
//! it holds (run with `--nocapture` to see them). The desk-scale pipeline is
//! trained once and shared by the criteria that need it.

use std::path::PathBuf;
use std::sync::LazyLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secc::backbone::{train_backbone, BackboneModel, ModelConfig, TrainHyper};
use secc::bench::{profile_min_layers, run_sweep, tolerance_select};
use secc::config::RunConfig;
use secc::controller::{
    build_labels, classifier_loss_and_grads, labels_from_correctness, layer_weight,
    train_classifier, Action, ActionClassifier, ClassifierOptions, DecisionSample, Thresholds,
    NEVER_FIRE,
};
use secc::corpus::{ingest_and_split, make_eval_cases, EvalCase, Snippet, TokenId};
use secc::dyninfer::{
    generate, generate_baseline_traced, generate_traced, teacher_forced_oracle, GenerationConfig,
};
use secc::exit_heads::{head_loss_and_grads, train_heads, IntermediateHeads};
use secc::metrics::{lcs_len, rouge_l};
use secc::nn::normal_matrix;

fn toy_corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("assets/toy_corpus")
}

fn extensions() -> Vec<String> {
    vec!["rs".to_string()]
}

struct Desk {
    backbone: BackboneModel,
    heads: IntermediateHeads,
    classifier: ActionClassifier,
    train: Vec<Snippet>,
    backbone_losses: Vec<f64>,
    build_time: Duration,
}

/// The desk-scale pipeline of criterion 9: bundled corpus, 4 layers,
/// d_model 64, trained into the overfit regime. Built once.
static DESK: LazyLock<Desk> = LazyLock::new(|| {
    let started = Instant::now();
    let cfg = RunConfig::default();
    let (train, _test) =
        ingest_and_split(&toy_corpus_dir(), &extensions(), 0.9, cfg.ingest_seed())
            .expect("bundled corpus ingests");

    let mut backbone =
        BackboneModel::init(ModelConfig::default(), cfg.backbone_seed()).expect("valid config");
    let backbone_losses = train_backbone(
        &mut backbone,
        &train,
        &TrainHyper {
            lr: 1e-3,
            epochs: 14,
            batch_size: 8,
            seed: cfg.backbone_seed(),
        },
    )
    .expect("backbone trains");

    let (heads, _) = train_heads(
        &backbone,
        &train,
        &TrainHyper {
            lr: 3e-3,
            epochs: 5,
            batch_size: 8,
            seed: cfg.heads_seed(),
        },
    )
    .expect("heads train");

    let samples = build_labels(&backbone, &heads, &train).expect("labels build");
    let (classifier, _) = train_classifier(
        &samples,
        &TrainHyper {
            lr: 1e-2,
            epochs: 5,
            batch_size: 256,
            seed: cfg.ctrl_seed(),
        },
        &ClassifierOptions::default(),
    )
    .expect("classifier trains");

    Desk {
        backbone,
        heads,
        classifier,
        train,
        backbone_losses,
        build_time: started.elapsed(),
    }
});

fn desk_eval_cases(count: usize) -> Vec<EvalCase> {
    let cfg = RunConfig::default();
    let mut cases = make_eval_cases(&DESK.train, cfg.eval_seed());
    assert!(cases.len() >= count, "toy corpus yields enough eval cases");
    cases.truncate(count);
    cases
}

fn small_random_setup() -> (BackboneModel, IntermediateHeads, ActionClassifier) {
    let cfg = ModelConfig {
        n_layers: 4,
        d_model: 32,
        n_heads: 4,
        d_ff: 64,
        vocab_size: 260,
        max_positions: 256,
    };
    let backbone = BackboneModel::init(cfg.clone(), 900).unwrap();
    let heads = IntermediateHeads::init(&cfg, 901);
    let classifier = ActionClassifier::init(cfg.d_model, 902);
    (backbone, heads, classifier)
}

#[test]
fn c01_baseline_equivalence() {
    let (backbone, heads, classifier) = small_random_setup();
    let cfg = RunConfig::default();
    let (train, _) =
        ingest_and_split(&toy_corpus_dir(), &extensions(), 0.9, cfg.ingest_seed()).unwrap();
    let mut cases = make_eval_cases(&train, 7);
    cases.truncate(120);
    assert!(cases.len() >= 100, "need at least 100 eval cases");

    let gen_cfg = GenerationConfig {
        thresholds: Thresholds::new(NEVER_FIRE, NEVER_FIRE),
        ..GenerationConfig::default()
    };
    let n = backbone.num_layers() as u64;
    for case in &cases {
        let (dynamic, dtrace) =
            generate_traced(&backbone, &heads, &classifier, &case.context, &gen_cfg).unwrap();
        let (baseline, btrace) =
            generate_baseline_traced(&backbone, &case.context, &gen_cfg).unwrap();
        assert_eq!(dynamic.tokens, baseline.tokens, "token-for-token");
        assert_eq!(dynamic.rounds, baseline.rounds);
        assert_eq!(dynamic.cost.full_layer_count, n * dynamic.rounds as u64);
        assert_eq!(dynamic.cost.attn_only_count, 0);
        assert_eq!(dtrace.per_round_logits, btrace.per_round_logits);
        assert_eq!(dtrace.cache, btrace.cache);
    }
    println!(
        "ACCEPTANCE 1 (baseline equivalence, {} cases): PASS",
        cases.len()
    );
}

/// Independent re-statement of the labeling rules, evaluated literally.
#[allow(clippy::needless_range_loop)]
fn naive_label(correct: &[bool], i: usize) -> Action {
    let n = correct.len();
    let mut all_wrong_from_i = true;
    for k in i..n {
        if correct[k] {
            all_wrong_from_i = false;
        }
    }
    if all_wrong_from_i {
        Action::Stop
    } else if correct[i] {
        Action::Exit
    } else {
        Action::Continue
    }
}

#[test]
#[allow(clippy::needless_range_loop)]
fn c02_label_rule_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    for trial in 0..1000 {
        let n = rng.random_range(3..=8usize);
        let pattern: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
        let labels = labels_from_correctness(&pattern);
        for i in 0..n {
            assert_eq!(
                labels[i],
                naive_label(&pattern, i),
                "trial {trial}, pattern {pattern:?}, layer {i}"
            );
        }
        // STOP suffix-monotonicity
        for i in 0..n {
            if labels[i] == Action::Stop {
                assert!(
                    labels[i..].iter().all(|&a| a == Action::Stop),
                    "STOP not suffix-monotone in {labels:?}"
                );
            }
        }
    }
    println!("ACCEPTANCE 2 (label-rule oracle, 1000 patterns): PASS");
}

#[test]
fn c03_oracle_exit_soundness() {
    let desk = &*DESK;
    let cases = desk_eval_cases(100);
    let gen_cfg = GenerationConfig::default();
    let mut exits = 0usize;
    for case in &cases {
        let run = teacher_forced_oracle(&desk.backbone, &desk.heads, case, &gen_cfg).unwrap();
        for round in &run.rounds {
            if round.exit_layer < desk.backbone.num_layers() {
                exits += 1;
                assert_eq!(
                    round.predicted, round.truth,
                    "EXIT-emitted token must equal ground truth"
                );
            }
        }
    }
    assert!(exits > 0, "oracle produced no exits at all");
    println!(
        "ACCEPTANCE 3 (oracle-exit soundness, {} EXIT emissions over 100 cases): PASS",
        exits
    );
}

fn rel_err(a: f64, b: f64, floor: f64) -> f64 {
    (a - b).abs() / (a.abs() + b.abs()).max(floor)
}

#[test]
#[allow(clippy::needless_range_loop)]
fn c04_gradient_checks() {
    // intermediate head: d_model 8, vocab 11, full parameter scan
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let w = normal_matrix(&mut rng, 8, 11, 0.5);
    let b = ndarray::Array1::from_vec((0..11).map(|i| (i as f64 - 5.0) * 0.02).collect());
    let hiddens = normal_matrix(&mut rng, 10, 8, 1.0);
    let targets: Vec<TokenId> = (0..10).map(|_| rng.random_range(0..11u32)).collect();
    let (_, dw, db) = head_loss_and_grads(&w, &b, &hiddens.view(), &targets);
    let h = 1e-5;
    let mut max_rel: f64 = 0.0;
    for r in 0..8 {
        for c in 0..11 {
            let mut wp = w.clone();
            wp[[r, c]] += h;
            let mut wm = w.clone();
            wm[[r, c]] -= h;
            let (lp, _, _) = head_loss_and_grads(&wp, &b, &hiddens.view(), &targets);
            let (lm, _, _) = head_loss_and_grads(&wm, &b, &hiddens.view(), &targets);
            max_rel = max_rel.max(rel_err(dw[[r, c]], (lp - lm) / (2.0 * h), 1e-3));
        }
    }
    for c in 0..11 {
        let mut bp = b.clone();
        bp[c] += h;
        let mut bm = b.clone();
        bm[c] -= h;
        let (lp, _, _) = head_loss_and_grads(&w, &bp, &hiddens.view(), &targets);
        let (lm, _, _) = head_loss_and_grads(&w, &bm, &hiddens.view(), &targets);
        max_rel = max_rel.max(rel_err(db[c], (lp - lm) / (2.0 * h), 1e-3));
    }
    assert!(max_rel < 1e-5, "head gradient rel error {max_rel}");

    // action classifier: d_model 8, full parameter scan
    let samples: Vec<DecisionSample> = (0..12)
        .map(|i| {
            let gold = Action::ALL[i % 3];
            DecisionSample {
                hidden: normal_matrix(&mut rng, 1, 8, 1.0).row(0).to_owned(),
                layer: 1 + i % 4,
                gold,
                weight: layer_weight(1 + i % 4, 4).unwrap(),
            }
        })
        .collect();
    let refs: Vec<&DecisionSample> = samples.iter().collect();
    let cw = normal_matrix(&mut rng, 8, 3, 0.6);
    let cb = ndarray::Array1::from_vec(vec![0.05, -0.1, 0.02]);
    let (_, dcw, dcb) = classifier_loss_and_grads(&cw, &cb, &refs);
    let mut max_rel_c: f64 = 0.0;
    for r in 0..8 {
        for c in 0..3 {
            let mut wp = cw.clone();
            wp[[r, c]] += h;
            let mut wm = cw.clone();
            wm[[r, c]] -= h;
            let (lp, _, _) = classifier_loss_and_grads(&wp, &cb, &refs);
            let (lm, _, _) = classifier_loss_and_grads(&wm, &cb, &refs);
            max_rel_c = max_rel_c.max(rel_err(dcw[[r, c]], (lp - lm) / (2.0 * h), 1e-3));
        }
    }
    for c in 0..3 {
        let mut bp = cb.clone();
        bp[c] += h;
        let mut bm = cb.clone();
        bm[c] -= h;
        let (lp, _, _) = classifier_loss_and_grads(&cw, &bp, &refs);
        let (lm, _, _) = classifier_loss_and_grads(&cw, &bm, &refs);
        max_rel_c = max_rel_c.max(rel_err(dcb[c], (lp - lm) / (2.0 * h), 1e-3));
    }
    assert!(max_rel_c < 1e-5, "classifier gradient rel error {max_rel_c}");

    // full backbone loss: 2 layers, d_model 8, every parameter
    let cfg = ModelConfig {
        n_layers: 2,
        d_model: 8,
        n_heads: 2,
        d_ff: 16,
        vocab_size: 13,
        max_positions: 16,
    };
    let model = BackboneModel::init(cfg, 1004).unwrap();
    let data = vec![Snippet {
        tokens: vec![0, 3, 7, 1, 9, 4, 2, 11],
        origin: secc::corpus::Origin {
            path: "grad".into(),
            start: 0,
            end: 0,
        },
    }];
    let (grads, _) = model.batch_gradients(&data).unwrap();
    let g_flat = grads.flat();
    let mut probe = model.clone();
    let hb = 1e-4;
    let mut max_rel_b: f64 = 0.0;
    for ti in 0..g_flat.len() {
        for idx in 0..g_flat[ti].len() {
            let analytic = g_flat[ti][idx];
            let orig = probe.flat()[ti][idx];
            probe.flat_mut()[ti][idx] = orig + hb;
            let lp = probe.batch_loss(&data).unwrap();
            probe.flat_mut()[ti][idx] = orig - hb;
            let lm = probe.batch_loss(&data).unwrap();
            probe.flat_mut()[ti][idx] = orig;
            let fd = (lp - lm) / (2.0 * hb);
            if analytic.abs() < 1e-10 && fd.abs() < 1e-10 {
                continue; // parameter unused by this batch
            }
            max_rel_b = max_rel_b.max(rel_err(analytic, fd, 1e-3));
        }
    }
    assert!(max_rel_b < 1e-3, "backbone gradient rel error {max_rel_b}");
    println!(
        "ACCEPTANCE 4 (gradient checks: head {max_rel:.2e}, classifier {max_rel_c:.2e}, backbone {max_rel_b:.2e}): PASS"
    );
}

/// Brute-force LCS by subsequence enumeration, independent of the DP.
fn lcs_brute(a: &[TokenId], b: &[TokenId]) -> usize {
    fn is_subsequence(needle: &[TokenId], hay: &[TokenId]) -> bool {
        let mut it = hay.iter();
        needle.iter().all(|n| it.any(|h| h == n))
    }
    let mut best = 0usize;
    for mask in 0u32..(1 << a.len()) {
        let sub: Vec<TokenId> = a
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &t)| t)
            .collect();
        if sub.len() > best && is_subsequence(&sub, b) {
            best = sub.len();
        }
    }
    best
}

#[test]
fn c05_rouge_oracle() {
    // exhaustive over all pairs with both lengths <= 4 (4-symbol alphabet)
    fn all_seqs(len: usize) -> Vec<Vec<TokenId>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|s| {
                    (0..4u32).map(move |c| {
                        let mut s2 = s.clone();
                        s2.push(c);
                        s2
                    })
                })
                .collect();
        }
        out
    }
    let mut checked = 0usize;
    for la in 0..=4usize {
        for lb in 0..=4usize {
            for a in all_seqs(la) {
                for b in all_seqs(lb) {
                    assert_eq!(lcs_len(&a, &b), lcs_brute(&a, &b));
                    checked += 1;
                }
            }
        }
    }
    // sampled coverage of every length pair up to 8
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    for la in 0..=8usize {
        for lb in 0..=8usize {
            for _ in 0..30 {
                let a: Vec<TokenId> = (0..la).map(|_| rng.random_range(0..4u32)).collect();
                let b: Vec<TokenId> = (0..lb).map(|_| rng.random_range(0..4u32)).collect();
                assert_eq!(lcs_len(&a, &b), lcs_brute(&a, &b), "a={a:?} b={b:?}");
                checked += 1;
            }
        }
    }
    for _ in 0..100 {
        let len = rng.random_range(1..=24usize);
        let x: Vec<TokenId> = (0..len).map(|_| rng.random_range(0..260u32)).collect();
        let r = rouge_l(&x, &x).unwrap();
        assert_eq!((r.precision, r.recall, r.f1), (1.0, 1.0, 1.0));
    }
    println!("ACCEPTANCE 5 (ROUGE-L oracle, {checked} LCS pairs + 100 identities): PASS");
}

#[test]
fn c06_threshold_monotonicity() {
    let desk = &*DESK;
    let cases = desk_eval_cases(60);
    let grid = RunConfig::default().grid;

    let count_fired = |thresholds: Thresholds, target: Action| -> usize {
        let gen_cfg = GenerationConfig {
            thresholds,
            record_only: true,
            ..GenerationConfig::default()
        };
        let mut fired = 0usize;
        for case in &cases {
            let result = generate(
                &desk.backbone,
                &desk.heads,
                &desk.classifier,
                &case.context,
                &gen_cfg,
            )
            .unwrap();
            fired += result
                .decisions
                .iter()
                .filter(|d| d.action == target)
                .count();
        }
        fired
    };

    let mut prev = usize::MAX;
    let mut exit_counts = Vec::new();
    for &beta in &grid {
        let fired = count_fired(Thresholds::new(NEVER_FIRE, beta), Action::Exit);
        assert!(
            fired <= prev,
            "EXIT count increased from {prev} to {fired} at beta={beta}"
        );
        prev = fired;
        exit_counts.push(fired);
    }
    let mut prev = usize::MAX;
    let mut stop_counts = Vec::new();
    for &alpha in &grid {
        let fired = count_fired(Thresholds::new(alpha, NEVER_FIRE), Action::Stop);
        assert!(
            fired <= prev,
            "STOP count increased from {prev} to {fired} at alpha={alpha}"
        );
        prev = fired;
        stop_counts.push(fired);
    }
    println!(
        "ACCEPTANCE 6 (threshold monotonicity: EXIT {exit_counts:?}, STOP {stop_counts:?}): PASS"
    );
}

#[test]
fn c07_cache_completeness_fuzz() {
    let (backbone, heads, classifier) = small_random_setup();
    let cfg = RunConfig::default();
    let (train, _) =
        ingest_and_split(&toy_corpus_dir(), &extensions(), 0.9, cfg.ingest_seed()).unwrap();
    let cases = make_eval_cases(&train, 7);
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    for trial in 0..1000 {
        let case = &cases[trial % cases.len()];
        let gen_cfg = GenerationConfig {
            thresholds: Thresholds::new(rng.random_range(0.0..1.0), rng.random_range(0.0..1.0)),
            max_new_tokens: rng.random_range(1..=10usize),
            ..GenerationConfig::default()
        };
        let (result, trace) =
            generate_traced(&backbone, &heads, &classifier, &case.context, &gen_cfg)
                .unwrap_or_else(|e| panic!("trial {trial}: generation failed: {e}"));
        assert!(trace.cache.is_complete(), "trial {trial}: cache incomplete");
        let context_len = case.context.len().min(gen_cfg.max_context);
        let expected = context_len - 1 + result.rounds;
        assert_eq!(trace.cache.positions(), expected, "trial {trial}");
        for layer in 1..=backbone.num_layers() {
            assert_eq!(trace.cache.layer_len(layer), expected, "trial {trial}");
        }
    }
    println!("ACCEPTANCE 7 (cache completeness, 1000 fuzzed generations): PASS");
}

#[test]
fn c08_weight_normalization() {
    for n in 1..=32usize {
        let sum: f64 = (1..=n).map(|i| layer_weight(i, n).unwrap()).sum();
        assert!(
            (sum - 1.0).abs() <= 1e-12,
            "sum of layer weights for n={n} is {sum}"
        );
    }
    println!("ACCEPTANCE 8 (weight normalization, n in 1..=32): PASS");
}

#[test]
fn c09_desk_scale_pipeline() {
    let desk = &*DESK;
    let final_loss = *desk.backbone_losses.last().unwrap();
    assert!(
        final_loss < 0.3,
        "overfit regime not reached: final backbone loss {final_loss}"
    );

    let started = Instant::now();
    let cases = desk_eval_cases(200);
    let cfg = RunConfig::default();
    let base = GenerationConfig::default();
    let output = run_sweep(
        &desk.backbone,
        &desk.heads,
        &desk.classifier,
        &cases,
        &cfg.grid,
        &base,
        false,
        &cfg.tolerances,
    )
    .unwrap();

    let qualifying = output.rows.iter().find(|row| {
        let reduction = (output.baseline_rouge - row.rouge_l) / output.baseline_rouge;
        row.speed_layer_equiv >= 1.10 && reduction <= 0.05
    });
    assert!(
        qualifying.is_some(),
        "no sweep row with speed >= 1.10 at <= 5% ROUGE-L reduction; baseline {:.4}, rows: {:?}",
        output.baseline_rouge,
        output
            .rows
            .iter()
            .map(|r| (r.mode.label(), r.speed_layer_equiv, r.rouge_l))
            .collect::<Vec<_>>()
    );
    let q = qualifying.unwrap();

    let selections =
        tolerance_select(&output.rows, output.baseline_rouge, &[0.01, 0.10]).unwrap();
    let speed_1 = selections[0].1.as_ref().map(|r| r.speed_layer_equiv);
    let speed_10 = selections[1].1.as_ref().map(|r| r.speed_layer_equiv);
    assert!(
        speed_10 >= speed_1,
        "tolerance 10% selection ({speed_10:?}) slower than 1% ({speed_1:?})"
    );

    let total = desk.build_time + started.elapsed();
    assert!(
        total < Duration::from_secs(15 * 60),
        "pipeline exceeded 15 minutes: {total:?}"
    );
    println!(
        "ACCEPTANCE 9 (desk-scale pipeline: loss {final_loss:.4}, qualifying row speed {:.3} at {:.2}% reduction, select(1%) {:?} <= select(10%) {:?}, total {total:?}): PASS",
        q.speed_layer_equiv,
        100.0 * (output.baseline_rouge - q.rouge_l) / output.baseline_rouge,
        speed_1,
        speed_10
    );
}

#[test]
fn c10_profiler_sanity() {
    let desk = &*DESK;
    let profile = profile_min_layers(&desk.backbone, &desk.heads, &desk.train).unwrap();
    assert_eq!(
        profile.bucket_sum(),
        profile.total_tokens,
        "buckets must partition all tokens"
    );
    assert!(
        profile.exactly_one > 0,
        "one-layer bucket empty on the overfit corpus"
    );
    let avg = profile
        .avg_required_layers
        .expect("overfit corpus has correct predictions");
    assert!(
        avg < desk.backbone.num_layers() as f64,
        "average required layers {avg} not below n"
    );
    println!(
        "ACCEPTANCE 10 (profiler: one-layer {}/{} tokens, avg {:.3} < {}): PASS",
        profile.exactly_one,
        profile.total_tokens,
        avg,
        desk.backbone.num_layers()
    );
}

#[test]
fn c11_pipeline_determinism() {
    let bin = env!("CARGO_BIN_EXE_secc");
    let corpus = toy_corpus_dir();
    let tmp = tempfile::tempdir().unwrap();

    let run_pipeline = |work: &std::path::Path| -> Vec<(String, Vec<u8>)> {
        std::fs::create_dir_all(work).unwrap();
        let sets = [
            format!("data_dir={}", corpus.display()),
            "extensions=rs".to_string(),
            "n_layers=2".to_string(),
            "d_model=16".to_string(),
            "n_heads=2".to_string(),
            "d_ff=32".to_string(),
            "max_positions=128".to_string(),
            "backbone_epochs=1".to_string(),
            "heads_epochs=1".to_string(),
            "ctrl_epochs=1".to_string(),
            "max_eval_cases=20".to_string(),
            "grid=0.5,0.9".to_string(),
            "tolerances=0.05".to_string(),
        ];
        for cmd in [
            "ingest",
            "train-backbone",
            "train-heads",
            "train-controller",
            "profile",
            "sweep",
        ] {
            let mut command = std::process::Command::new(bin);
            command.current_dir(work).arg(cmd).arg("--deterministic");
            for s in &sets {
                command.arg("--set").arg(s);
            }
            // scrub any ambient SEC_ overrides
            for (k, _) in std::env::vars() {
                if k.starts_with("SEC_") {
                    command.env_remove(k);
                }
            }
            let out = command.output().unwrap();
            assert!(
                out.status.success(),
                "{cmd} failed: {}",
                String::from_utf8_lossy(&out.stderr)
            );
        }
        ["profile.tsv", "sweep.tsv", "selection.tsv", "actions.tsv"]
            .iter()
            .map(|f| {
                (
                    f.to_string(),
                    std::fs::read(work.join("out").join(f)).unwrap(),
                )
            })
            .collect()
    };

    let first = run_pipeline(&tmp.path().join("run1"));
    let second = run_pipeline(&tmp.path().join("run2"));
    for ((name_a, bytes_a), (name_b, bytes_b)) in first.iter().zip(second.iter()) {
        assert_eq!(name_a, name_b);
        assert_eq!(
            bytes_a, bytes_b,
            "report {name_a} differs between identical runs"
        );
    }
    println!("ACCEPTANCE 11 (pipeline determinism, byte-identical reports): PASS");
}
