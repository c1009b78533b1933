//! Decoder-only transformer backbone: per-layer stepping with attention-state
//! caching, dense teacher-forced evaluation, training with analytic gradients,
//! and seeded initialization.
//!
//! Layer indices in public APIs are 1-based (layers `L_1..L_n`), matching the
//! numbering used for exit heads and decision points.

use ndarray::{s, Array1, Array2, ArrayView1, Zip};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{Snippet, TokenId};
use crate::error::{Error, Result};
use crate::nn::{
    argmax, col_sums, cross_entropy, gelu, gelu_grad, normal_matrix, softmax_inplace,
    softmax_rows_inplace, Adam, LayerNorm,
};

pub const INIT_STD: f64 = 0.02;

/// Shape of the transformer. `d_model` must be divisible by `n_heads`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelConfig {
    pub n_layers: usize,
    pub d_model: usize,
    pub n_heads: usize,
    pub d_ff: usize,
    pub vocab_size: usize,
    pub max_positions: usize,
}

impl Default for ModelConfig {
    fn default() -> Self {
        ModelConfig {
            n_layers: 4,
            d_model: 64,
            n_heads: 4,
            d_ff: 256,
            vocab_size: crate::corpus::Vocabulary::TOTAL_SIZE,
            max_positions: 512,
        }
    }
}

impl ModelConfig {
    pub fn validate(&self) -> Result<()> {
        let counts = [
            ("n_layers", self.n_layers),
            ("d_model", self.d_model),
            ("n_heads", self.n_heads),
            ("d_ff", self.d_ff),
            ("vocab_size", self.vocab_size),
            ("max_positions", self.max_positions),
        ];
        for (name, v) in counts {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be >= 1")));
            }
        }
        if !self.d_model.is_multiple_of(self.n_heads) {
            return Err(Error::Config(format!(
                "d_model {} not divisible by n_heads {}",
                self.d_model, self.n_heads
            )));
        }
        Ok(())
    }

    pub fn head_dim(&self) -> usize {
        self.d_model / self.n_heads
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttentionParams {
    pub wq: Array2<f64>,
    pub bq: Array1<f64>,
    pub wk: Array2<f64>,
    pub bk: Array1<f64>,
    pub wv: Array2<f64>,
    pub bv: Array1<f64>,
    pub wo: Array2<f64>,
    pub bo: Array1<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeedForwardParams {
    pub w1: Array2<f64>,
    pub b1: Array1<f64>,
    pub w2: Array2<f64>,
    pub b2: Array1<f64>,
}

/// Parameters of one pre-norm residual block.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerParams {
    pub ln1: LayerNorm,
    pub attn: AttentionParams,
    pub ln2: LayerNorm,
    pub ffn: FeedForwardParams,
}

/// The full backbone: embeddings, stacked layers, final norm, inherent LM head.
#[derive(Debug, Clone, PartialEq)]
pub struct BackboneModel {
    pub config: ModelConfig,
    pub tok_emb: Array2<f64>,
    pub pos_emb: Array2<f64>,
    pub layers: Vec<LayerParams>,
    pub final_norm: LayerNorm,
    pub lm_head_w: Array2<f64>,
    pub lm_head_b: Array1<f64>,
}

/// Per-layer, per-position attention states (keys/values) for one session.
/// Row-major storage: entry `t` of a layer occupies `t*d_model..(t+1)*d_model`.
#[derive(Debug, Clone, PartialEq)]
pub struct SessionCache {
    d_model: usize,
    positions: usize,
    keys: Vec<Vec<f64>>,
    values: Vec<Vec<f64>>,
}

impl SessionCache {
    pub fn new(config: &ModelConfig) -> Self {
        SessionCache {
            d_model: config.d_model,
            positions: 0,
            keys: vec![Vec::new(); config.n_layers],
            values: vec![Vec::new(); config.n_layers],
        }
    }

    /// Number of fully processed positions.
    pub fn positions(&self) -> usize {
        self.positions
    }

    /// Number of cached entries at a layer (1-based index).
    pub fn layer_len(&self, layer: usize) -> usize {
        self.keys[layer - 1].len() / self.d_model
    }

    /// True when every layer holds exactly one entry per processed position.
    pub fn is_complete(&self) -> bool {
        self.keys
            .iter()
            .zip(&self.values)
            .all(|(k, v)| k.len() == self.positions * self.d_model && v.len() == k.len())
    }

    /// Mark the current position as fully processed across all layers.
    pub fn advance(&mut self) {
        self.positions += 1;
        debug_assert!(self.is_complete(), "cache advanced while incomplete");
    }

    fn push(&mut self, layer: usize, k: &Array1<f64>, v: &Array1<f64>) {
        self.keys[layer - 1].extend_from_slice(k.as_slice().expect("contiguous"));
        self.values[layer - 1].extend_from_slice(v.as_slice().expect("contiguous"));
    }

    fn load_prefill(&mut self, kv: &[(Array2<f64>, Array2<f64>)]) {
        let mut rows = 0;
        for (layer0, (k, v)) in kv.iter().enumerate() {
            rows = k.nrows();
            self.keys[layer0].extend_from_slice(k.as_slice().expect("contiguous"));
            self.values[layer0].extend_from_slice(v.as_slice().expect("contiguous"));
        }
        self.positions += rows;
        debug_assert!(self.is_complete());
    }

    fn keys_view(&self, layer: usize) -> ndarray::ArrayView2<'_, f64> {
        let k = &self.keys[layer - 1];
        ndarray::ArrayView2::from_shape((k.len() / self.d_model, self.d_model), k.as_slice())
            .expect("cache layout")
    }

    fn values_view(&self, layer: usize) -> ndarray::ArrayView2<'_, f64> {
        let v = &self.values[layer - 1];
        ndarray::ArrayView2::from_shape((v.len() / self.d_model, self.d_model), v.as_slice())
            .expect("cache layout")
    }
}

/// Per-position, per-layer hidden states from one dense causal pass.
/// `layers[i-1]` holds layer `i`'s raw hidden-state rows; `final_normed` is
/// the last-layer state after the final norm, ready for the inherent head.
#[derive(Debug, Clone)]
pub struct HiddenTable {
    pub layers: Vec<Array2<f64>>,
    pub final_normed: Array2<f64>,
}

pub(crate) enum Keep {
    Hiddens,
    WithKv,
    Full,
}

pub(crate) struct LayerActs {
    x1: Array2<f64>,
    q: Array2<f64>,
    att: Vec<Array2<f64>>,
    attn_concat: Array2<f64>,
    h_mid: Array2<f64>,
    x2: Array2<f64>,
    pre_gelu: Array2<f64>,
    gelu_out: Array2<f64>,
}

pub(crate) struct DenseActs {
    h0: Array2<f64>,
    h_layers: Vec<Array2<f64>>,
    final_normed: Array2<f64>,
    kv: Option<Vec<(Array2<f64>, Array2<f64>)>>,
    per_layer: Option<Vec<LayerActs>>,
}

/// Hyperparameters for backbone (and head/classifier) training.
#[derive(Debug, Clone)]
pub struct TrainHyper {
    pub lr: f64,
    pub epochs: usize,
    pub batch_size: usize,
    pub seed: u64,
}

impl Default for TrainHyper {
    fn default() -> Self {
        TrainHyper {
            lr: 1e-3,
            epochs: 5,
            batch_size: 8,
            seed: 42,
        }
    }
}

impl BackboneModel {
    /// Seeded initialization: projections and embeddings N(0, 0.02), biases and
    /// norm offsets zero, norm gains one. The sampling order is fixed, so a
    /// given seed always produces the same parameters.
    pub fn init(config: ModelConfig, seed: u64) -> Result<Self> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = config.d_model;
        let tok_emb = normal_matrix(&mut rng, config.vocab_size, d, INIT_STD);
        let pos_emb = normal_matrix(&mut rng, config.max_positions, d, INIT_STD);
        let mut layers = Vec::with_capacity(config.n_layers);
        for _ in 0..config.n_layers {
            layers.push(LayerParams {
                ln1: LayerNorm::new(d),
                attn: AttentionParams {
                    wq: normal_matrix(&mut rng, d, d, INIT_STD),
                    bq: Array1::zeros(d),
                    wk: normal_matrix(&mut rng, d, d, INIT_STD),
                    bk: Array1::zeros(d),
                    wv: normal_matrix(&mut rng, d, d, INIT_STD),
                    bv: Array1::zeros(d),
                    wo: normal_matrix(&mut rng, d, d, INIT_STD),
                    bo: Array1::zeros(d),
                },
                ln2: LayerNorm::new(d),
                ffn: FeedForwardParams {
                    w1: normal_matrix(&mut rng, d, config.d_ff, INIT_STD),
                    b1: Array1::zeros(config.d_ff),
                    w2: normal_matrix(&mut rng, config.d_ff, d, INIT_STD),
                    b2: Array1::zeros(d),
                },
            });
        }
        let lm_head_w = normal_matrix(&mut rng, d, config.vocab_size, INIT_STD);
        Ok(BackboneModel {
            final_norm: LayerNorm::new(d),
            lm_head_b: Array1::zeros(config.vocab_size),
            config,
            tok_emb,
            pos_emb,
            layers,
            lm_head_w,
        })
    }

    /// All-zero model with the same shapes; used as a gradient accumulator.
    pub fn zeros_like(config: &ModelConfig) -> Self {
        let d = config.d_model;
        BackboneModel {
            config: config.clone(),
            tok_emb: Array2::zeros((config.vocab_size, d)),
            pos_emb: Array2::zeros((config.max_positions, d)),
            layers: (0..config.n_layers)
                .map(|_| LayerParams {
                    ln1: LayerNorm::zeros(d),
                    attn: AttentionParams {
                        wq: Array2::zeros((d, d)),
                        bq: Array1::zeros(d),
                        wk: Array2::zeros((d, d)),
                        bk: Array1::zeros(d),
                        wv: Array2::zeros((d, d)),
                        bv: Array1::zeros(d),
                        wo: Array2::zeros((d, d)),
                        bo: Array1::zeros(d),
                    },
                    ln2: LayerNorm::zeros(d),
                    ffn: FeedForwardParams {
                        w1: Array2::zeros((d, config.d_ff)),
                        b1: Array1::zeros(config.d_ff),
                        w2: Array2::zeros((config.d_ff, d)),
                        b2: Array1::zeros(d),
                    },
                })
                .collect(),
            final_norm: LayerNorm::zeros(d),
            lm_head_w: Array2::zeros((d, config.vocab_size)),
            lm_head_b: Array1::zeros(config.vocab_size),
        }
    }

    pub fn num_layers(&self) -> usize {
        self.config.n_layers
    }

    /// Verify every tensor's shape against the config. Used after loading.
    pub fn shape_check(&self) -> Result<()> {
        let d = self.config.d_model;
        let bad = |what: &str| Err(Error::CheckpointFormat(format!("{what} shape mismatch")));
        if self.tok_emb.dim() != (self.config.vocab_size, d) {
            return bad("tok_emb");
        }
        if self.pos_emb.dim() != (self.config.max_positions, d) {
            return bad("pos_emb");
        }
        if self.layers.len() != self.config.n_layers {
            return bad("layers");
        }
        for l in &self.layers {
            if l.attn.wq.dim() != (d, d)
                || l.attn.wk.dim() != (d, d)
                || l.attn.wv.dim() != (d, d)
                || l.attn.wo.dim() != (d, d)
            {
                return bad("attention projection");
            }
            if l.ffn.w1.dim() != (d, self.config.d_ff) || l.ffn.w2.dim() != (self.config.d_ff, d) {
                return bad("ffn projection");
            }
            if l.ln1.gain.len() != d || l.ln2.gain.len() != d {
                return bad("layer norm");
            }
        }
        if self.lm_head_w.dim() != (d, self.config.vocab_size) {
            return bad("lm_head.weight");
        }
        Ok(())
    }

    /// Flat views over every parameter tensor, in a fixed canonical order.
    pub fn flat(&self) -> Vec<&[f64]> {
        let mut out: Vec<&[f64]> = Vec::new();
        out.push(self.tok_emb.as_slice().unwrap());
        out.push(self.pos_emb.as_slice().unwrap());
        for l in &self.layers {
            out.push(l.ln1.gain.as_slice().unwrap());
            out.push(l.ln1.bias.as_slice().unwrap());
            out.push(l.attn.wq.as_slice().unwrap());
            out.push(l.attn.bq.as_slice().unwrap());
            out.push(l.attn.wk.as_slice().unwrap());
            out.push(l.attn.bk.as_slice().unwrap());
            out.push(l.attn.wv.as_slice().unwrap());
            out.push(l.attn.bv.as_slice().unwrap());
            out.push(l.attn.wo.as_slice().unwrap());
            out.push(l.attn.bo.as_slice().unwrap());
            out.push(l.ln2.gain.as_slice().unwrap());
            out.push(l.ln2.bias.as_slice().unwrap());
            out.push(l.ffn.w1.as_slice().unwrap());
            out.push(l.ffn.b1.as_slice().unwrap());
            out.push(l.ffn.w2.as_slice().unwrap());
            out.push(l.ffn.b2.as_slice().unwrap());
        }
        out.push(self.final_norm.gain.as_slice().unwrap());
        out.push(self.final_norm.bias.as_slice().unwrap());
        out.push(self.lm_head_w.as_slice().unwrap());
        out.push(self.lm_head_b.as_slice().unwrap());
        out
    }

    pub fn flat_mut(&mut self) -> Vec<&mut [f64]> {
        let mut out: Vec<&mut [f64]> = Vec::new();
        out.push(self.tok_emb.as_slice_mut().unwrap());
        out.push(self.pos_emb.as_slice_mut().unwrap());
        for l in &mut self.layers {
            out.push(l.ln1.gain.as_slice_mut().unwrap());
            out.push(l.ln1.bias.as_slice_mut().unwrap());
            out.push(l.attn.wq.as_slice_mut().unwrap());
            out.push(l.attn.bq.as_slice_mut().unwrap());
            out.push(l.attn.wk.as_slice_mut().unwrap());
            out.push(l.attn.bk.as_slice_mut().unwrap());
            out.push(l.attn.wv.as_slice_mut().unwrap());
            out.push(l.attn.bv.as_slice_mut().unwrap());
            out.push(l.attn.wo.as_slice_mut().unwrap());
            out.push(l.attn.bo.as_slice_mut().unwrap());
            out.push(l.ln2.gain.as_slice_mut().unwrap());
            out.push(l.ln2.bias.as_slice_mut().unwrap());
            out.push(l.ffn.w1.as_slice_mut().unwrap());
            out.push(l.ffn.b1.as_slice_mut().unwrap());
            out.push(l.ffn.w2.as_slice_mut().unwrap());
            out.push(l.ffn.b2.as_slice_mut().unwrap());
        }
        out.push(self.final_norm.gain.as_slice_mut().unwrap());
        out.push(self.final_norm.bias.as_slice_mut().unwrap());
        out.push(self.lm_head_w.as_slice_mut().unwrap());
        out.push(self.lm_head_b.as_slice_mut().unwrap());
        out
    }

    pub fn zero(&mut self) {
        for s in self.flat_mut() {
            s.fill(0.0);
        }
    }

    /// Layer-zero state for one token: token embedding plus position embedding.
    pub fn embed(&self, token: TokenId, position: usize) -> Result<Array1<f64>> {
        if token as usize >= self.config.vocab_size {
            return Err(Error::InvalidToken(token));
        }
        if position >= self.config.max_positions {
            return Err(Error::ContextLength {
                position,
                max_positions: self.config.max_positions,
            });
        }
        Ok(&self.tok_emb.row(token as usize) + &self.pos_emb.row(position))
    }

    fn check_layer(&self, layer: usize) -> Result<()> {
        if layer == 0 || layer > self.config.n_layers {
            return Err(Error::LayerOutOfRange {
                layer,
                n_layers: self.config.n_layers,
            });
        }
        Ok(())
    }

    fn check_cache(&self, layer: usize, cache: &SessionCache) -> Result<()> {
        let held = cache.layer_len(layer);
        if held != cache.positions() {
            return Err(Error::CacheIncomplete {
                layer,
                held,
                expected: cache.positions(),
            });
        }
        Ok(())
    }

    /// Project the normalized input to this position's key and value.
    fn kv_for(&self, layer: usize, x1: &Array1<f64>) -> (Array1<f64>, Array1<f64>) {
        let attn = &self.layers[layer - 1].attn;
        let k = x1.dot(&attn.wk) + &attn.bk;
        let v = x1.dot(&attn.wv) + &attn.bv;
        (k, v)
    }

    /// One pre-norm residual block for a single position. Appends this
    /// position's key/value to layer `layer`'s cache, attends causally over
    /// all cached entries, applies the FFN, and returns the new hidden state.
    pub fn layer_forward(
        &self,
        layer: usize,
        input: &ArrayView1<f64>,
        cache: &mut SessionCache,
    ) -> Result<Array1<f64>> {
        self.check_layer(layer)?;
        self.check_cache(layer, cache)?;
        let lp = &self.layers[layer - 1];
        let d = self.config.d_model;
        let n_heads = self.config.n_heads;
        let hd = self.config.head_dim();
        let scale = 1.0 / (hd as f64).sqrt();

        let x1 = lp.ln1.forward_vec(input);
        let q = x1.dot(&lp.attn.wq) + &lp.attn.bq;
        let (k, v) = self.kv_for(layer, &x1);
        cache.push(layer, &k, &v);

        let keys = cache.keys_view(layer);
        let values = cache.values_view(layer);
        let t = keys.nrows();
        let mut attn_concat = Array1::zeros(d);
        for h in 0..n_heads {
            let cols = s![.., h * hd..(h + 1) * hd];
            let qh = q.slice(s![h * hd..(h + 1) * hd]);
            let kh = keys.slice(cols);
            let vh = values.slice(cols);
            let mut scores = kh.dot(&qh);
            scores.mapv_inplace(|x| x * scale);
            softmax_inplace(scores.as_slice_mut().expect("contiguous"));
            let oh = scores.dot(&vh);
            attn_concat
                .slice_mut(s![h * hd..(h + 1) * hd])
                .assign(&oh);
            debug_assert_eq!(t, scores.len());
        }
        let y = attn_concat.dot(&lp.attn.wo) + &lp.attn.bo;
        let h_mid = input + &y;

        let x2 = lp.ln2.forward_vec(&h_mid.view());
        let pre = x2.dot(&lp.ffn.w1) + &lp.ffn.b1;
        let g = pre.mapv(gelu);
        let f = g.dot(&lp.ffn.w2) + &lp.ffn.b2;
        Ok(h_mid + f)
    }

    /// Compute and cache this position's key/value for `layer` without running
    /// attention or the FFN. Used for state copying over skipped layers.
    pub fn attention_state_only(
        &self,
        layer: usize,
        input: &ArrayView1<f64>,
        cache: &mut SessionCache,
    ) -> Result<()> {
        self.check_layer(layer)?;
        self.check_cache(layer, cache)?;
        let lp = &self.layers[layer - 1];
        let x1 = lp.ln1.forward_vec(input);
        let (k, v) = self.kv_for(layer, &x1);
        cache.push(layer, &k, &v);
        Ok(())
    }

    pub fn apply_final_norm(&self, hidden: &ArrayView1<f64>) -> Array1<f64> {
        self.final_norm.forward_vec(hidden)
    }

    /// Logits of the inherent head. The input must already be final-normed.
    pub fn inherent_head_logits(&self, hidden: &ArrayView1<f64>) -> Array1<f64> {
        hidden.dot(&self.lm_head_w) + &self.lm_head_b
    }

    /// Greedy next token from the inherent head, ties toward the lowest id.
    pub fn inherent_head_argmax(&self, hidden: &ArrayView1<f64>) -> TokenId {
        let logits = self.inherent_head_logits(hidden);
        argmax(logits.as_slice().expect("contiguous")) as TokenId
    }

    /// Dense causal forward over a full token sequence.
    pub(crate) fn dense_forward(&self, tokens: &[TokenId], keep: Keep) -> Result<DenseActs> {
        let t_len = tokens.len();
        if t_len > self.config.max_positions {
            return Err(Error::ContextLength {
                position: t_len - 1,
                max_positions: self.config.max_positions,
            });
        }
        let d = self.config.d_model;
        let n_heads = self.config.n_heads;
        let hd = self.config.head_dim();
        let scale = 1.0 / (hd as f64).sqrt();
        let keep_kv = !matches!(keep, Keep::Hiddens);
        let keep_full = matches!(keep, Keep::Full);

        let mut h0 = Array2::zeros((t_len, d));
        for (j, &tok) in tokens.iter().enumerate() {
            if tok as usize >= self.config.vocab_size {
                return Err(Error::InvalidToken(tok));
            }
            let row = &self.tok_emb.row(tok as usize) + &self.pos_emb.row(j);
            h0.row_mut(j).assign(&row);
        }

        let mut h = h0.clone();
        let mut h_layers = Vec::with_capacity(self.config.n_layers);
        let mut kv_store = keep_kv.then(Vec::new);
        let mut acts_store = keep_full.then(Vec::new);

        for lp in &self.layers {
            let x1 = lp.ln1.forward_rows(&h.view());
            let q = x1.dot(&lp.attn.wq) + &lp.attn.bq;
            let k = x1.dot(&lp.attn.wk) + &lp.attn.bk;
            let v = x1.dot(&lp.attn.wv) + &lp.attn.bv;

            let mut attn_concat = Array2::zeros((t_len, d));
            let mut att_heads = keep_full.then(|| Vec::with_capacity(n_heads));
            for hh in 0..n_heads {
                let cols = s![.., hh * hd..(hh + 1) * hd];
                let qh = q.slice(cols);
                let kh = k.slice(cols);
                let vh = v.slice(cols);
                let mut scores = qh.dot(&kh.t());
                scores.mapv_inplace(|x| x * scale);
                for j in 0..t_len {
                    for kk in j + 1..t_len {
                        scores[[j, kk]] = f64::NEG_INFINITY;
                    }
                }
                softmax_rows_inplace(&mut scores);
                let oh = scores.dot(&vh);
                attn_concat.slice_mut(cols).assign(&oh);
                if let Some(store) = att_heads.as_mut() {
                    store.push(scores);
                }
            }
            let y = attn_concat.dot(&lp.attn.wo) + &lp.attn.bo;
            let h_mid = &h + &y;

            let x2 = lp.ln2.forward_rows(&h_mid.view());
            let pre = x2.dot(&lp.ffn.w1) + &lp.ffn.b1;
            let g = pre.mapv(gelu);
            let f = g.dot(&lp.ffn.w2) + &lp.ffn.b2;
            let h_out = &h_mid + &f;

            if let Some(store) = kv_store.as_mut() {
                store.push((k, v));
            }
            if let Some(store) = acts_store.as_mut() {
                store.push(LayerActs {
                    x1,
                    q,
                    att: att_heads.take().unwrap(),
                    attn_concat,
                    h_mid,
                    x2,
                    pre_gelu: pre,
                    gelu_out: g,
                });
            }
            h_layers.push(h_out.clone());
            h = h_out;
        }

        let final_normed = self.final_norm.forward_rows(&h.view());
        Ok(DenseActs {
            h0,
            h_layers,
            final_normed,
            kv: kv_store,
            per_layer: acts_store,
        })
    }

    /// One full causal pass; `layers[i-1]` row `j` is position `j`'s hidden
    /// state after layer `i`, plus the final-normed last-layer states.
    /// Matches sequential cached generation to within 1e-8.
    pub fn teacher_forced_hiddens(&self, tokens: &[TokenId]) -> Result<HiddenTable> {
        let acts = self.dense_forward(tokens, Keep::Hiddens)?;
        Ok(HiddenTable {
            layers: acts.h_layers,
            final_normed: acts.final_normed,
        })
    }

    /// Process `tokens` full-depth, filling the cache for all of them. Returns
    /// nothing; callers continue per-position from `tokens.len()` onward.
    pub fn prefill(&self, tokens: &[TokenId], cache: &mut SessionCache) -> Result<()> {
        if tokens.is_empty() {
            return Ok(());
        }
        let acts = self.dense_forward(tokens, Keep::WithKv)?;
        cache.load_prefill(acts.kv.as_ref().expect("kv kept"));
        Ok(())
    }

    /// Mean next-token cross-entropy over all target positions of `snippets`.
    pub fn batch_loss(&self, snippets: &[Snippet]) -> Result<f64> {
        let mut sum = 0.0;
        let mut count = 0usize;
        for s in snippets {
            let acts = self.dense_forward(&s.tokens, Keep::Hiddens)?;
            let logits = acts.final_normed.dot(&self.lm_head_w) + &self.lm_head_b;
            for j in 0..s.tokens.len() - 1 {
                sum += cross_entropy(&logits.row(j), s.tokens[j + 1] as usize);
                count += 1;
            }
        }
        Ok(sum / count.max(1) as f64)
    }

    /// Full forward + backward for one snippet. Gradient contributions are
    /// scaled by `inv_total` (one over the batch's total target count) and
    /// accumulated into `grads`. Returns the unscaled sum of per-target CE.
    pub(crate) fn accumulate_gradients(
        &self,
        tokens: &[TokenId],
        grads: &mut BackboneModel,
        inv_total: f64,
    ) -> Result<f64> {
        let t_len = tokens.len();
        let d = self.config.d_model;
        let v_size = self.config.vocab_size;
        let n_heads = self.config.n_heads;
        let hd = self.config.head_dim();
        let scale = 1.0 / (hd as f64).sqrt();

        let acts = self.dense_forward(tokens, Keep::Full)?;
        let per_layer = acts.per_layer.as_ref().expect("full acts");
        let kv = acts.kv.as_ref().expect("kv kept");

        let logits = acts.final_normed.dot(&self.lm_head_w) + &self.lm_head_b;
        let mut dlogits = Array2::zeros((t_len, v_size));
        let mut loss_sum = 0.0;
        for j in 0..t_len.saturating_sub(1) {
            let target = tokens[j + 1] as usize;
            let row = logits.row(j);
            loss_sum += cross_entropy(&row, target);
            let mut p = row.to_owned();
            softmax_inplace(p.as_slice_mut().unwrap());
            p[target] -= 1.0;
            p.mapv_inplace(|x| x * inv_total);
            dlogits.row_mut(j).assign(&p);
        }

        grads.lm_head_w += &acts.final_normed.t().dot(&dlogits);
        grads.lm_head_b += &col_sums(&dlogits.view());
        let dfinal = dlogits.dot(&self.lm_head_w.t());

        let h_n = acts.h_layers.last().expect("at least one layer");
        let mut dh = self.final_norm.backward_rows(
            &h_n.view(),
            &dfinal.view(),
            &mut grads.final_norm.gain,
            &mut grads.final_norm.bias,
        );

        for l in (0..self.config.n_layers).rev() {
            let lp = &self.layers[l];
            let la = &per_layer[l];
            let gl = &mut grads.layers[l];
            let h_in = if l == 0 { &acts.h0 } else { &acts.h_layers[l - 1] };

            // FFN branch: h_out = h_mid + gelu(x2 w1 + b1) w2 + b2
            gl.ffn.w2 += &la.gelu_out.t().dot(&dh);
            gl.ffn.b2 += &col_sums(&dh.view());
            let dg = dh.dot(&lp.ffn.w2.t());
            let dp = Zip::from(&dg)
                .and(&la.pre_gelu)
                .map_collect(|&g, &p| g * gelu_grad(p));
            gl.ffn.w1 += &la.x2.t().dot(&dp);
            gl.ffn.b1 += &col_sums(&dp.view());
            let dx2 = dp.dot(&lp.ffn.w1.t());
            let dh_mid_from_norm =
                lp.ln2
                    .backward_rows(&la.h_mid.view(), &dx2.view(), &mut gl.ln2.gain, &mut gl.ln2.bias);
            let dh_mid = &dh + &dh_mid_from_norm;

            // attention branch: h_mid = h_in + attn_concat wo + bo
            gl.attn.wo += &la.attn_concat.t().dot(&dh_mid);
            gl.attn.bo += &col_sums(&dh_mid.view());
            let do_full = dh_mid.dot(&lp.attn.wo.t());

            let (k_mat, v_mat) = &kv[l];
            let mut dq = Array2::zeros((t_len, d));
            let mut dk = Array2::zeros((t_len, d));
            let mut dv = Array2::zeros((t_len, d));
            for hh in 0..n_heads {
                let cols = s![.., hh * hd..(hh + 1) * hd];
                let a = &la.att[hh];
                let do_h = do_full.slice(cols);
                let vh = v_mat.slice(cols);
                let qh = la.q.slice(cols);
                let kh = k_mat.slice(cols);

                let da = do_h.dot(&vh.t());
                {
                    let mut dv_h = dv.slice_mut(cols);
                    dv_h += &a.t().dot(&do_h);
                }
                // softmax backward per causal row
                let mut ds = Array2::zeros((t_len, t_len));
                for j in 0..t_len {
                    let mut dot = 0.0;
                    for kk in 0..=j {
                        dot += da[[j, kk]] * a[[j, kk]];
                    }
                    for kk in 0..=j {
                        ds[[j, kk]] = a[[j, kk]] * (da[[j, kk]] - dot);
                    }
                }
                {
                    let mut dq_h = dq.slice_mut(cols);
                    let mut contrib = ds.dot(&kh);
                    contrib.mapv_inplace(|x| x * scale);
                    dq_h += &contrib;
                }
                {
                    let mut dk_h = dk.slice_mut(cols);
                    let mut contrib = ds.t().dot(&qh);
                    contrib.mapv_inplace(|x| x * scale);
                    dk_h += &contrib;
                }
            }

            gl.attn.wq += &la.x1.t().dot(&dq);
            gl.attn.bq += &col_sums(&dq.view());
            gl.attn.wk += &la.x1.t().dot(&dk);
            gl.attn.bk += &col_sums(&dk.view());
            gl.attn.wv += &la.x1.t().dot(&dv);
            gl.attn.bv += &col_sums(&dv.view());
            let dx1 = dq.dot(&lp.attn.wq.t()) + dk.dot(&lp.attn.wk.t()) + dv.dot(&lp.attn.wv.t());
            let dh_in_from_norm =
                lp.ln1
                    .backward_rows(&h_in.view(), &dx1.view(), &mut gl.ln1.gain, &mut gl.ln1.bias);
            dh = &dh_mid + &dh_in_from_norm;
        }

        for (j, &tok) in tokens.iter().enumerate() {
            let mut te = grads.tok_emb.row_mut(tok as usize);
            te += &dh.row(j);
            let mut pe = grads.pos_emb.row_mut(j);
            pe += &dh.row(j);
        }
        Ok(loss_sum)
    }

    /// Gradients of the mean next-token loss over `snippets` (full batch),
    /// together with the loss value. Used by gradient-check tests.
    pub fn batch_gradients(&self, snippets: &[Snippet]) -> Result<(BackboneModel, f64)> {
        let total: usize = snippets.iter().map(|s| s.tokens.len() - 1).sum();
        let mut grads = BackboneModel::zeros_like(&self.config);
        let mut loss_sum = 0.0;
        for s in snippets {
            loss_sum += self.accumulate_gradients(&s.tokens, &mut grads, 1.0 / total as f64)?;
        }
        Ok((grads, loss_sum / total as f64))
    }
}

/// Train the backbone in place with Adam on next-token cross-entropy.
/// Deterministic for a fixed seed; returns the per-epoch mean loss.
pub fn train_backbone(
    model: &mut BackboneModel,
    train: &[Snippet],
    hyper: &TrainHyper,
) -> Result<Vec<f64>> {
    if train.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(hyper.seed);
    let mut adam = Adam::new(hyper.lr);
    let mut grads = BackboneModel::zeros_like(&model.config);
    let mut losses = Vec::with_capacity(hyper.epochs);
    let batch = hyper.batch_size.max(1);

    for epoch in 0..hyper.epochs {
        let mut order: Vec<usize> = (0..train.len()).collect();
        order.shuffle(&mut rng);
        let mut loss_sum = 0.0;
        let mut targets = 0usize;
        for chunk in order.chunks(batch) {
            let total: usize = chunk.iter().map(|&i| train[i].tokens.len() - 1).sum();
            if total == 0 {
                continue;
            }
            grads.zero();
            for &i in chunk {
                loss_sum +=
                    model.accumulate_gradients(&train[i].tokens, &mut grads, 1.0 / total as f64)?;
            }
            targets += total;
            let gslices = grads.flat();
            let mut pslices = model.flat_mut();
            adam.step(&mut pslices, &gslices);
        }
        let mean = loss_sum / targets.max(1) as f64;
        if !mean.is_finite() {
            return Err(Error::TrainingDiverged {
                stage: "backbone",
                epoch,
            });
        }
        losses.push(mean);
    }
    Ok(losses)
}

/// Softmax over the inherent head's logits; convenience for tests and serving.
pub fn head_probs(logits: &Array1<f64>) -> Array1<f64> {
    let mut p = logits.clone();
    softmax_inplace(p.as_slice_mut().expect("contiguous"));
    p
}
