//! The action controller: gold-label construction from per-layer head
//! correctness, the shared three-way linear classifier, its depth-weighted
//! training loss, and the threshold-gated decision rule.

use ndarray::{Array1, Array2, ArrayView1};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::backbone::{BackboneModel, TrainHyper};
use crate::corpus::Snippet;
use crate::error::{Error, Result};
use crate::exit_heads::{HeadView, IntermediateHeads};
use crate::nn::{cross_entropy, normal_matrix, softmax_inplace, Adam};

/// The three actions, in canonical index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Stop = 0,
    Exit = 1,
    Continue = 2,
}

impl Action {
    pub const ALL: [Action; 3] = [Action::Stop, Action::Exit, Action::Continue];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Action::Stop => "stop",
            Action::Exit => "exit",
            Action::Continue => "continue",
        }
    }
}

/// Minimum classifier confidences for STOP (`alpha`) and EXIT (`beta`).
/// Values above 1.0 are legal and mean "never fire".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub alpha: f64,
    pub beta: f64,
}

pub const NEVER_FIRE: f64 = 1.01;

impl Thresholds {
    pub fn new(alpha: f64, beta: f64) -> Self {
        Thresholds { alpha, beta }
    }

    pub fn never_fire() -> Self {
        Thresholds {
            alpha: NEVER_FIRE,
            beta: NEVER_FIRE,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta)] {
            if !(0.0..=NEVER_FIRE).contains(&v) {
                return Err(Error::Config(format!(
                    "{name} must be in [0, {NEVER_FIRE}], got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// The single shared linear classifier mapping a hidden state to action
/// probabilities. One classifier serves all layers.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionClassifier {
    pub weight: Array2<f64>,
    pub bias: Array1<f64>,
}

impl ActionClassifier {
    pub fn init(d_model: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ActionClassifier {
            weight: normal_matrix(&mut rng, d_model, 3, 0.02),
            bias: Array1::zeros(3),
        }
    }

    pub fn probs(&self, hidden: &ArrayView1<f64>) -> [f64; 3] {
        let mut logits = hidden.dot(&self.weight) + &self.bias;
        softmax_inplace(logits.as_slice_mut().expect("contiguous"));
        [logits[0], logits[1], logits[2]]
    }
}

/// One classifier training sample: the hidden state of layer `layer`, its
/// gold action, and the depth weight `i / sum(1..=n)`.
#[derive(Debug, Clone)]
pub struct DecisionSample {
    pub hidden: Array1<f64>,
    pub layer: usize,
    pub gold: Action,
    pub weight: f64,
}

/// Depth weight `i / (n(n+1)/2)`; the weights over `1..=n` sum to one.
pub fn layer_weight(i: usize, n: usize) -> Result<f64> {
    if i == 0 || i > n {
        return Err(Error::LayerOutOfRange {
            layer: i,
            n_layers: n,
        });
    }
    let denom = (n * (n + 1) / 2) as f64;
    Ok(i as f64 / denom)
}

/// Apply the labeling rules to a per-layer correctness pattern:
/// EXIT where the layer's head is correct, STOP where it and every deeper
/// layer are wrong, CONTINUE otherwise.
pub fn labels_from_correctness(correct: &[bool]) -> Vec<Action> {
    let n = correct.len();
    let mut any_correct_from = vec![false; n + 1];
    for i in (0..n).rev() {
        any_correct_from[i] = correct[i] || any_correct_from[i + 1];
    }
    (0..n)
        .map(|i| {
            if correct[i] {
                Action::Exit
            } else if !any_correct_from[i] {
                Action::Stop
            } else {
                Action::Continue
            }
        })
        .collect()
}

/// Build classifier training samples from teacher-forced hidden states: for
/// every position and every layer `1..=n`, the gold action comes from the
/// per-layer head correctness pattern against the true next token.
pub fn build_labels(
    backbone: &BackboneModel,
    heads: &IntermediateHeads,
    snippets: &[Snippet],
) -> Result<Vec<DecisionSample>> {
    let view = HeadView::new(backbone, heads);
    let n = backbone.num_layers();
    let mut samples = Vec::new();
    for snippet in snippets {
        let t_len = snippet.tokens.len();
        if t_len < 2 {
            continue;
        }
        let table = backbone.teacher_forced_hiddens(&snippet.tokens)?;
        for j in 0..t_len - 1 {
            let truth = snippet.tokens[j + 1];
            let mut correct = Vec::with_capacity(n);
            for layer in 1..=n {
                let hidden = table.layers[layer - 1].row(j);
                let (pred, _) = view.predict(layer, &hidden)?;
                correct.push(pred == truth);
            }
            let labels = labels_from_correctness(&correct);
            for layer in 1..=n {
                samples.push(DecisionSample {
                    hidden: table.layers[layer - 1].row(j).to_owned(),
                    layer,
                    gold: labels[layer - 1],
                    weight: layer_weight(layer, n)?,
                });
            }
        }
    }
    Ok(samples)
}

/// Weighted cross-entropy loss and closed-form gradients of the classifier
/// over a sample batch: `L = (1/N) sum_b m_b * CE(C(h_b), gold_b)`.
pub fn classifier_loss_and_grads(
    weight: &Array2<f64>,
    bias: &Array1<f64>,
    samples: &[&DecisionSample],
) -> (f64, Array2<f64>, Array1<f64>) {
    let n = samples.len();
    let d = weight.nrows();
    let mut dw = Array2::zeros((d, 3));
    let mut db = Array1::zeros(3);
    let mut loss = 0.0;
    for s in samples {
        let logits = s.hidden.dot(weight) + bias;
        loss += s.weight * cross_entropy(&logits.view(), s.gold.index());
        let mut p = logits;
        softmax_inplace(p.as_slice_mut().unwrap());
        p[s.gold.index()] -= 1.0;
        let scale = s.weight / n as f64;
        for c in 0..3 {
            let pc = p[c] * scale;
            db[c] += pc;
            for r in 0..d {
                dw[[r, c]] += s.hidden[r] * pc;
            }
        }
    }
    (loss / n as f64, dw, db)
}

/// Options for classifier training beyond the shared hyperparameters.
#[derive(Debug, Clone, Default)]
pub struct ClassifierOptions {
    /// Multiply each sample's weight by `N / (3 * count(class))`. Off by
    /// default; the depth weights are the only weighting otherwise.
    pub class_rebalance: bool,
}

/// Train the shared classifier by Adam on the weighted cross-entropy loss.
pub fn train_classifier(
    samples: &[DecisionSample],
    hyper: &TrainHyper,
    options: &ClassifierOptions,
) -> Result<(ActionClassifier, Vec<f64>)> {
    if samples.is_empty() {
        return Err(Error::Config(
            "classifier training requires a non-empty sample set".into(),
        ));
    }
    let d = samples[0].hidden.len();
    let mut clf = ActionClassifier::init(d, hyper.seed);

    let rebalanced: Vec<DecisionSample>;
    let samples: &[DecisionSample] = if options.class_rebalance {
        let mut counts = [0usize; 3];
        for s in samples {
            counts[s.gold.index()] += 1;
        }
        let n = samples.len() as f64;
        rebalanced = samples
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.weight *= n / (3.0 * counts[s.gold.index()].max(1) as f64);
                s
            })
            .collect();
        &rebalanced
    } else {
        samples
    };

    let mut rng = ChaCha8Rng::seed_from_u64(hyper.seed);
    let mut adam = Adam::new(hyper.lr);
    let batch = hyper.batch_size.max(1);
    let mut losses = Vec::with_capacity(hyper.epochs);
    for epoch in 0..hyper.epochs {
        let mut order: Vec<usize> = (0..samples.len()).collect();
        order.shuffle(&mut rng);
        let mut loss_sum = 0.0;
        for chunk in order.chunks(batch) {
            let refs: Vec<&DecisionSample> = chunk.iter().map(|&i| &samples[i]).collect();
            let (loss, dw, db) = classifier_loss_and_grads(&clf.weight, &clf.bias, &refs);
            loss_sum += loss * refs.len() as f64;
            let gslices = [dw.as_slice().unwrap(), db.as_slice().unwrap()];
            let mut pslices = [
                clf.weight.as_slice_mut().unwrap(),
                clf.bias.as_slice_mut().unwrap(),
            ];
            adam.step(&mut pslices, &gslices);
        }
        let mean = loss_sum / samples.len() as f64;
        if !mean.is_finite() {
            return Err(Error::TrainingDiverged {
                stage: "classifier",
                epoch,
            });
        }
        losses.push(mean);
    }
    Ok((clf, losses))
}

/// The threshold-gated decision rule. STOP fires only when it is the argmax
/// and its probability strictly exceeds `alpha`; EXIT likewise with `beta`;
/// everything else is CONTINUE. Exact argmax ties prefer CONTINUE, then EXIT.
pub fn decide(
    classifier: &ActionClassifier,
    hidden: &ArrayView1<f64>,
    thresholds: &Thresholds,
) -> (Action, [f64; 3]) {
    let p = classifier.probs(hidden);
    let max = p[0].max(p[1]).max(p[2]);
    let best = if p[Action::Continue.index()] == max {
        Action::Continue
    } else if p[Action::Exit.index()] == max {
        Action::Exit
    } else {
        Action::Stop
    };
    let action = match best {
        Action::Stop if p[Action::Stop.index()] > thresholds.alpha => Action::Stop,
        Action::Exit if p[Action::Exit.index()] > thresholds.beta => Action::Exit,
        _ => Action::Continue,
    };
    (action, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::Rng;

    #[test]
    fn layer_weight_examples() {
        assert_abs_diff_eq!(layer_weight(2, 4).unwrap(), 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(layer_weight(1, 1).unwrap(), 1.0, epsilon = 1e-15);
        assert!(layer_weight(0, 4).is_err());
        assert!(layer_weight(5, 4).is_err());
    }

    #[test]
    fn layer_weights_sum_to_one() {
        for n in 1..=32 {
            let sum: f64 = (1..=n).map(|i| layer_weight(i, n).unwrap()).sum();
            assert!((sum - 1.0).abs() <= 1e-12, "n={n}: sum={sum}");
        }
    }

    #[test]
    fn label_rule_examples() {
        assert_eq!(
            labels_from_correctness(&[false, true, false]),
            vec![Action::Continue, Action::Exit, Action::Stop]
        );
        assert_eq!(
            labels_from_correctness(&[false, false, false]),
            vec![Action::Stop, Action::Stop, Action::Stop]
        );
    }

    /// Independent naive re-implementation of the two labeling conditions.
    fn naive_labels(correct: &[bool]) -> Vec<Action> {
        let n = correct.len();
        (0..n)
            .map(|i| {
                let all_deeper_wrong = (i..n).all(|k| !correct[k]);
                if all_deeper_wrong {
                    Action::Stop
                } else if correct[i] {
                    Action::Exit
                } else {
                    Action::Continue
                }
            })
            .collect()
    }

    #[test]
    fn labels_match_naive_oracle_on_random_patterns() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let n = rng.random_range(1..=6usize);
            let pattern: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
            let got = labels_from_correctness(&pattern);
            assert_eq!(got, naive_labels(&pattern), "pattern {pattern:?}");
            // STOP is suffix-monotone
            for i in 0..n {
                if got[i] == Action::Stop {
                    assert!(got[i..].iter().all(|&a| a == Action::Stop));
                }
            }
        }
    }

    #[test]
    fn decide_examples() {
        let mut clf = ActionClassifier::init(3, 0);
        // identity-ish weights so we can steer probabilities by the hidden state
        clf.weight.fill(0.0);
        for i in 0..3 {
            clf.weight[[i, i]] = 1.0;
        }
        clf.bias.fill(0.0);
        // p ~ softmax(hidden); pick hidden to land on (0.1, 0.7, 0.2)
        let hidden = Array1::from_vec(vec![0.1f64.ln(), 0.7f64.ln(), 0.2f64.ln()]);
        let (a, p) = decide(&clf, &hidden.view(), &Thresholds::new(NEVER_FIRE, 0.5));
        assert_eq!(a, Action::Exit);
        assert_abs_diff_eq!(p[1], 0.7, epsilon = 1e-12);

        // strict inequality: a threshold equal to the probability never fires
        let (a, _) = decide(&clf, &hidden.view(), &Thresholds::new(NEVER_FIRE, p[1]));
        assert_eq!(a, Action::Continue, "strict inequality at the boundary");

        let stop_hidden = Array1::from_vec(vec![0.8f64.ln(), 0.1f64.ln(), 0.1f64.ln()]);
        let (a, _) = decide(&clf, &stop_hidden.view(), &Thresholds::new(NEVER_FIRE, NEVER_FIRE));
        assert_eq!(a, Action::Continue, "never-fire threshold");
        let (a, _) = decide(&clf, &stop_hidden.view(), &Thresholds::new(0.5, NEVER_FIRE));
        assert_eq!(a, Action::Stop);
    }

    #[test]
    fn decide_tie_breaks_toward_continue_then_exit() {
        let mut clf = ActionClassifier::init(3, 0);
        clf.weight.fill(0.0);
        clf.bias.fill(0.0);
        // all-zero logits: p = (1/3, 1/3, 1/3) exactly
        let hidden = Array1::zeros(3);
        let (a, p) = decide(&clf, &hidden.view(), &Thresholds::new(0.0, 0.0));
        assert_eq!(p[0], p[1]);
        assert_eq!(a, Action::Continue);

        // tie between STOP and EXIT only
        clf.bias = Array1::from_vec(vec![1.0, 1.0, -5.0]);
        let (a, _) = decide(&clf, &hidden.view(), &Thresholds::new(0.0, 0.0));
        assert_eq!(a, Action::Exit);
    }

    #[test]
    fn firing_monotonicity_in_thresholds() {
        let clf = ActionClassifier::init(6, 9);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let hiddens: Vec<Array1<f64>> = (0..200)
            .map(|_| normal_matrix(&mut rng, 1, 6, 1.5).row(0).to_owned())
            .collect();
        let grid = [0.0, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999];
        let mut prev_exit = usize::MAX;
        let mut prev_stop = usize::MAX;
        for &t in &grid {
            let exit_count = hiddens
                .iter()
                .filter(|h| {
                    decide(&clf, &h.view(), &Thresholds::new(NEVER_FIRE, t)).0 == Action::Exit
                })
                .count();
            let stop_count = hiddens
                .iter()
                .filter(|h| {
                    decide(&clf, &h.view(), &Thresholds::new(t, NEVER_FIRE)).0 == Action::Stop
                })
                .count();
            assert!(exit_count <= prev_exit);
            assert!(stop_count <= prev_stop);
            prev_exit = exit_count;
            prev_stop = stop_count;
        }
    }

    fn synthetic_samples(count: usize, seed: u64) -> Vec<DecisionSample> {
        // three linearly separable clusters along distinct axes
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|i| {
                let gold = Action::ALL[i % 3];
                let mut hidden = normal_matrix(&mut rng, 1, 8, 0.2).row(0).to_owned();
                hidden[gold.index()] += 4.0;
                DecisionSample {
                    hidden,
                    layer: 1 + i % 4,
                    gold,
                    weight: layer_weight(1 + i % 4, 4).unwrap(),
                }
            })
            .collect()
    }

    #[test]
    fn classifier_gradients_match_finite_differences() {
        let samples = synthetic_samples(12, 3);
        let refs: Vec<&DecisionSample> = samples.iter().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let w = normal_matrix(&mut rng, 8, 3, 0.7);
        let b = Array1::from_vec(vec![0.1, -0.2, 0.05]);
        let (_, dw, db) = classifier_loss_and_grads(&w, &b, &refs);

        let h = 1e-5;
        let mut max_rel = 0.0f64;
        for r in 0..8 {
            for c in 0..3 {
                let mut wp = w.clone();
                wp[[r, c]] += h;
                let (lp, _, _) = classifier_loss_and_grads(&wp, &b, &refs);
                let mut wm = w.clone();
                wm[[r, c]] -= h;
                let (lm, _, _) = classifier_loss_and_grads(&wm, &b, &refs);
                let fd = (lp - lm) / (2.0 * h);
                let rel = (dw[[r, c]] - fd).abs() / (dw[[r, c]].abs() + fd.abs()).max(1e-3);
                max_rel = max_rel.max(rel);
            }
        }
        for c in 0..3 {
            let mut bp = b.clone();
            bp[c] += h;
            let (lp, _, _) = classifier_loss_and_grads(&w, &bp, &refs);
            let mut bm = b.clone();
            bm[c] -= h;
            let (lm, _, _) = classifier_loss_and_grads(&w, &bm, &refs);
            let fd = (lp - lm) / (2.0 * h);
            let rel = (db[c] - fd).abs() / (db[c].abs() + fd.abs()).max(1e-3);
            max_rel = max_rel.max(rel);
        }
        assert!(max_rel < 1e-5, "max relative error {max_rel}");
    }

    #[test]
    fn doubling_sample_weights_doubles_the_loss() {
        let samples = synthetic_samples(9, 5);
        let doubled: Vec<DecisionSample> = samples
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.weight *= 2.0;
                s
            })
            .collect();
        let refs1: Vec<&DecisionSample> = samples.iter().collect();
        let refs2: Vec<&DecisionSample> = doubled.iter().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let w = normal_matrix(&mut rng, 8, 3, 0.5);
        let b = Array1::zeros(3);
        let (l1, dw1, _) = classifier_loss_and_grads(&w, &b, &refs1);
        let (l2, dw2, _) = classifier_loss_and_grads(&w, &b, &refs2);
        assert_abs_diff_eq!(l2, 2.0 * l1, epsilon = 1e-12);
        // gradients stay collinear (scaled by exactly 2)
        for (a, c) in dw1.iter().zip(dw2.iter()) {
            assert_abs_diff_eq!(2.0 * a, *c, epsilon = 1e-12);
        }
    }

    #[test]
    fn separable_clusters_train_to_high_accuracy() {
        let samples = synthetic_samples(300, 7);
        let hyper = TrainHyper {
            lr: 5e-2,
            epochs: 30,
            batch_size: 64,
            seed: 7,
        };
        let (clf, _) = train_classifier(&samples, &hyper, &ClassifierOptions::default()).unwrap();
        let correct = samples
            .iter()
            .filter(|s| {
                let p = clf.probs(&s.hidden.view());
                crate::nn::argmax(&p) == s.gold.index()
            })
            .count();
        let acc = correct as f64 / samples.len() as f64;
        assert!(acc > 0.95, "training accuracy {acc}");
    }

    #[test]
    fn empty_sample_set_is_rejected() {
        let hyper = TrainHyper::default();
        assert!(train_classifier(&[], &hyper, &ClassifierOptions::default()).is_err());
    }
}
