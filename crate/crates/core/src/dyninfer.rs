//! The dynamic generation loop: per-round, per-layer stepping with
//! EXIT/STOP/CONTINUE execution, state copying over skipped layers, and cost
//! accounting in full-layer / attention-only units.

use std::time::{Duration, Instant};

use ndarray::Array1;

use crate::backbone::{BackboneModel, SessionCache};
use crate::controller::{decide, Action, ActionClassifier, Thresholds};
use crate::corpus::{EvalCase, TokenId, Vocabulary};
use crate::error::{Error, Result};
use crate::exit_heads::{HeadView, IntermediateHeads};
use crate::nn::argmax;

/// Per-generation configuration. `record_only` logs every decision but never
/// executes one, so the full-depth path runs regardless of thresholds.
#[derive(Debug, Clone)]
pub struct GenerationConfig {
    pub max_new_tokens: usize,
    pub max_context: usize,
    pub thresholds: Thresholds,
    pub attach_stride: usize,
    pub enable_exit: bool,
    pub enable_stop: bool,
    pub record_only: bool,
    pub kappa: f64,
}

impl Default for GenerationConfig {
    fn default() -> Self {
        GenerationConfig {
            max_new_tokens: 10,
            max_context: 128,
            thresholds: Thresholds::never_fire(),
            attach_stride: 1,
            enable_exit: true,
            enable_stop: true,
            record_only: false,
            kappa: 1.0 / 3.0,
        }
    }
}

/// Deterministic cost model: a full layer costs 1, an attention-state-only
/// computation costs `kappa`. Wall clock covers the round loop only, so it is
/// comparable between dynamic and baseline runs over the same context.
#[derive(Debug, Clone, PartialEq)]
pub struct CostRecord {
    pub full_layer_count: u64,
    pub attn_only_count: u64,
    pub kappa: f64,
    pub wall_clock: Duration,
}

impl CostRecord {
    fn new(kappa: f64) -> Self {
        CostRecord {
            full_layer_count: 0,
            attn_only_count: 0,
            kappa,
            wall_clock: Duration::ZERO,
        }
    }

    pub fn layer_equivalents(&self) -> f64 {
        self.full_layer_count as f64 + self.kappa * self.attn_only_count as f64
    }
}

/// One consulted decision point.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionRecord {
    pub round: usize,
    pub layer: usize,
    pub action: Action,
    pub probs: [f64; 3],
    pub executed: bool,
}

/// The outcome of one generation session.
#[derive(Debug, Clone)]
pub struct GenerationResult {
    /// Emitted tokens; special tokens are never included.
    pub tokens: Vec<TokenId>,
    pub stopped: bool,
    pub stop_round: Option<usize>,
    /// Layer each emitted token exited at (`n` for full depth); same length
    /// as `tokens`.
    pub per_token_exit_layer: Vec<usize>,
    /// Rounds attempted, including a final round that produced EOS or STOP.
    pub rounds: usize,
    pub cost: CostRecord,
    /// Every decision consulted during the run (empty for baseline runs).
    pub decisions: Vec<DecisionRecord>,
}

impl GenerationResult {
    /// Decode emitted tokens to text, specials skipped.
    pub fn text(&self) -> String {
        String::from_utf8_lossy(&Vocabulary::decode(&self.tokens, true).expect("valid ids"))
            .into_owned()
    }
}

/// Extra introspection for equivalence tests: the logits that produced each
/// round's token and the final session cache.
#[derive(Debug, Clone)]
pub struct GenerationTrace {
    pub per_round_logits: Vec<Array1<f64>>,
    pub cache: SessionCache,
}

enum Decider<'a> {
    /// Full-depth baseline: no decision points at all.
    None,
    Classifier(&'a ActionClassifier),
    /// Teacher-forced gold EXIT decisions: exit as soon as the current
    /// layer's head predicts the true next token.
    ExitOracle { truth: &'a [TokenId] },
    Scripted(&'a mut dyn FnMut(usize, usize) -> Action),
}

enum RoundOutcome {
    Emitted {
        token: TokenId,
        exit_layer: usize,
        logits: Array1<f64>,
    },
    Stopped,
}

struct Session<'a> {
    backbone: &'a BackboneModel,
    heads: Option<HeadView<'a>>,
    config: &'a GenerationConfig,
    cache: SessionCache,
    cost: CostRecord,
    decisions: Vec<DecisionRecord>,
}

impl<'a> Session<'a> {
    fn new(
        backbone: &'a BackboneModel,
        heads: Option<HeadView<'a>>,
        config: &'a GenerationConfig,
    ) -> Self {
        Session {
            backbone,
            heads,
            config,
            cache: SessionCache::new(&backbone.config),
            cost: CostRecord::new(config.kappa),
            decisions: Vec::new(),
        }
    }

    /// Copy the hidden state of the exited/stopped layer into every deeper
    /// layer's attention-state computation so the cache stays complete.
    fn copy_states(&mut self, from_layer: usize, hidden: &Array1<f64>) -> Result<()> {
        for layer in from_layer + 1..=self.backbone.num_layers() {
            self.backbone
                .attention_state_only(layer, &hidden.view(), &mut self.cache)?;
            self.cost.attn_only_count += 1;
        }
        Ok(())
    }

    fn run_round(
        &mut self,
        token: TokenId,
        position: usize,
        round: usize,
        decider: &mut Decider<'_>,
    ) -> Result<RoundOutcome> {
        let n = self.backbone.num_layers();
        let stride = self.config.attach_stride.max(1);
        let mut h = self.backbone.embed(token, position)?;
        for layer in 1..=n {
            h = self.backbone.layer_forward(layer, &h.view(), &mut self.cache)?;
            self.cost.full_layer_count += 1;
            if layer == n || layer % stride != 0 {
                continue;
            }
            let decision = match decider {
                Decider::None => None,
                Decider::Classifier(clf) => {
                    Some(decide(clf, &h.view(), &self.config.thresholds))
                }
                Decider::ExitOracle { truth } => {
                    let view = self.heads.expect("oracle requires heads");
                    let (pred, _) = view.predict(layer, &h.view())?;
                    if pred == truth[round] {
                        Some((Action::Exit, [0.0, 1.0, 0.0]))
                    } else {
                        Some((Action::Continue, [0.0, 0.0, 1.0]))
                    }
                }
                Decider::Scripted(f) => {
                    let a = f(round, layer);
                    let mut probs = [0.0; 3];
                    probs[a.index()] = 1.0;
                    Some((a, probs))
                }
            };
            let Some((action, probs)) = decision else {
                continue;
            };
            let enabled = match action {
                Action::Exit => self.config.enable_exit,
                Action::Stop => self.config.enable_stop,
                Action::Continue => true,
            };
            let executed =
                !self.config.record_only && enabled && action != Action::Continue;
            self.decisions.push(DecisionRecord {
                round,
                layer,
                action,
                probs,
                executed,
            });
            if !executed {
                continue;
            }
            match action {
                Action::Exit => {
                    let view = self.heads.expect("exit requires heads");
                    let (token, probs) = view.predict(layer, &h.view())?;
                    self.copy_states(layer, &h)?;
                    self.cache.advance();
                    return Ok(RoundOutcome::Emitted {
                        token,
                        exit_layer: layer,
                        logits: probs,
                    });
                }
                Action::Stop => {
                    self.copy_states(layer, &h)?;
                    self.cache.advance();
                    return Ok(RoundOutcome::Stopped);
                }
                Action::Continue => unreachable!(),
            }
        }
        let normed = self.backbone.apply_final_norm(&h.view());
        let logits = self.backbone.inherent_head_logits(&normed.view());
        let token = argmax(logits.as_slice().expect("contiguous")) as TokenId;
        self.cache.advance();
        Ok(RoundOutcome::Emitted {
            token,
            exit_layer: n,
            logits,
        })
    }
}

fn generate_inner(
    backbone: &BackboneModel,
    heads: Option<HeadView<'_>>,
    mut decider: Decider<'_>,
    context: &[TokenId],
    config: &GenerationConfig,
) -> Result<(GenerationResult, GenerationTrace)> {
    if context.is_empty() {
        return Err(Error::EmptyContext);
    }
    let ctx = if context.len() > config.max_context {
        &context[context.len() - config.max_context..]
    } else {
        context
    };

    let mut session = Session::new(backbone, heads, config);
    session.backbone.prefill(&ctx[..ctx.len() - 1], &mut session.cache)?;

    let mut tokens = Vec::new();
    let mut per_token_exit_layer = Vec::new();
    let mut per_round_logits = Vec::new();
    let mut stopped = false;
    let mut stop_round = None;
    let mut rounds = 0usize;

    let mut cur = *ctx.last().expect("non-empty context");
    let mut pos = ctx.len() - 1;
    let started = Instant::now();
    loop {
        let round = rounds;
        match session.run_round(cur, pos, round, &mut decider)? {
            RoundOutcome::Stopped => {
                rounds += 1;
                stopped = true;
                stop_round = Some(round);
                break;
            }
            RoundOutcome::Emitted {
                token,
                exit_layer,
                logits,
            } => {
                rounds += 1;
                per_round_logits.push(logits);
                if Vocabulary::is_special(token) {
                    break;
                }
                tokens.push(token);
                per_token_exit_layer.push(exit_layer);
                if tokens.len() >= config.max_new_tokens {
                    break;
                }
                cur = token;
                pos += 1;
            }
        }
    }
    session.cost.wall_clock = started.elapsed();

    let result = GenerationResult {
        tokens,
        stopped,
        stop_round,
        per_token_exit_layer,
        rounds,
        cost: session.cost,
        decisions: session.decisions,
    };
    let trace = GenerationTrace {
        per_round_logits,
        cache: session.cache,
    };
    Ok((result, trace))
}

/// Dynamic generation under the trained classifier and thresholds.
pub fn generate(
    backbone: &BackboneModel,
    heads: &IntermediateHeads,
    classifier: &ActionClassifier,
    context: &[TokenId],
    config: &GenerationConfig,
) -> Result<GenerationResult> {
    generate_traced(backbone, heads, classifier, context, config).map(|(r, _)| r)
}

/// Like [`generate`], additionally returning per-round logits and the cache.
pub fn generate_traced(
    backbone: &BackboneModel,
    heads: &IntermediateHeads,
    classifier: &ActionClassifier,
    context: &[TokenId],
    config: &GenerationConfig,
) -> Result<(GenerationResult, GenerationTrace)> {
    let view = HeadView::new(backbone, heads);
    generate_inner(
        backbone,
        Some(view),
        Decider::Classifier(classifier),
        context,
        config,
    )
}

/// Full-depth greedy generation with no controller; cost is `n` full layers
/// per round.
pub fn generate_baseline(
    backbone: &BackboneModel,
    context: &[TokenId],
    config: &GenerationConfig,
) -> Result<GenerationResult> {
    generate_baseline_traced(backbone, context, config).map(|(r, _)| r)
}

pub fn generate_baseline_traced(
    backbone: &BackboneModel,
    context: &[TokenId],
    config: &GenerationConfig,
) -> Result<(GenerationResult, GenerationTrace)> {
    generate_inner(backbone, None, Decider::None, context, config)
}

/// Diagnostic hook: run a generation whose decisions come from a script
/// `(round, layer) -> Action` instead of the classifier.
pub fn generate_scripted(
    backbone: &BackboneModel,
    heads: &IntermediateHeads,
    script: &mut dyn FnMut(usize, usize) -> Action,
    context: &[TokenId],
    config: &GenerationConfig,
) -> Result<GenerationResult> {
    let view = HeadView::new(backbone, heads);
    generate_inner(backbone, Some(view), Decider::Scripted(script), context, config)
        .map(|(r, _)| r)
}

/// One teacher-forced oracle round: what was predicted, at which layer, and
/// what the ground truth was.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleRound {
    pub exit_layer: usize,
    pub predicted: TokenId,
    pub truth: TokenId,
}

/// Outcome of a teacher-forced oracle run over one evaluation case.
#[derive(Debug, Clone)]
pub struct TeacherForcedRun {
    pub rounds: Vec<OracleRound>,
    pub cost: CostRecord,
}

/// Diagnostic hook substituting gold EXIT decisions for the classifier under
/// teacher forcing: each round's input is the ground-truth token regardless of
/// what was predicted, and EXIT fires exactly when the current layer's head
/// predicts the true next token.
pub fn teacher_forced_oracle(
    backbone: &BackboneModel,
    heads: &IntermediateHeads,
    case: &EvalCase,
    config: &GenerationConfig,
) -> Result<TeacherForcedRun> {
    if case.context.is_empty() {
        return Err(Error::EmptyContext);
    }
    if case.reference.is_empty() {
        return Err(Error::InvalidReference);
    }
    let ctx = if case.context.len() > config.max_context {
        &case.context[case.context.len() - config.max_context..]
    } else {
        &case.context[..]
    };
    let view = HeadView::new(backbone, heads);
    let mut session = Session::new(backbone, Some(view), config);
    session.backbone.prefill(&ctx[..ctx.len() - 1], &mut session.cache)?;

    let truth = &case.reference;
    let mut decider = Decider::ExitOracle { truth };
    let mut rounds = Vec::new();
    let mut cur = *ctx.last().expect("non-empty");
    let started = Instant::now();
    for (round, &true_tok) in truth.iter().take(config.max_new_tokens).enumerate() {
        let pos = ctx.len() - 1 + round;
        match session.run_round(cur, pos, round, &mut decider)? {
            RoundOutcome::Emitted {
                token, exit_layer, ..
            } => {
                rounds.push(OracleRound {
                    exit_layer,
                    predicted: token,
                    truth: true_tok,
                });
            }
            RoundOutcome::Stopped => unreachable!("oracle never stops"),
        }
        cur = true_tok;
    }
    session.cost.wall_clock = started.elapsed();
    Ok(TeacherForcedRun {
        rounds,
        cost: session.cost,
    })
}
