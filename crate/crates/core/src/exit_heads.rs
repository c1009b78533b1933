//! Intermediate LM heads: one linear classifier per non-final layer, trained
//! jointly on frozen backbone hidden states with a summed loss. The final
//! layer's head is the backbone's inherent one and is never touched.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::backbone::{BackboneModel, ModelConfig, TrainHyper};
use crate::corpus::{Snippet, TokenId};
use crate::error::{Error, Result};
use crate::nn::{argmax, col_sums, cross_entropy, normal_matrix, softmax_inplace, Adam};

/// Per-layer linear heads; `weights[i-1]` / `biases[i-1]` belong to layer `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntermediateHeads {
    pub d_model: usize,
    pub vocab_size: usize,
    pub weights: Vec<Array2<f64>>,
    pub biases: Vec<Array1<f64>>,
}

impl IntermediateHeads {
    /// Seeded init: weights N(0, 0.02), biases zero; `n_layers - 1` heads.
    pub fn init(config: &ModelConfig, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let count = config.n_layers.saturating_sub(1);
        let weights = (0..count)
            .map(|_| normal_matrix(&mut rng, config.d_model, config.vocab_size, 0.02))
            .collect();
        let biases = (0..count)
            .map(|_| Array1::zeros(config.vocab_size))
            .collect();
        IntermediateHeads {
            d_model: config.d_model,
            vocab_size: config.vocab_size,
            weights,
            biases,
        }
    }

    pub fn count(&self) -> usize {
        self.weights.len()
    }

    fn flat_mut(&mut self) -> Vec<&mut [f64]> {
        let mut out = Vec::with_capacity(self.weights.len() * 2);
        for (w, b) in self.weights.iter_mut().zip(self.biases.iter_mut()) {
            out.push(w.as_slice_mut().unwrap());
            out.push(b.as_slice_mut().unwrap());
        }
        out
    }
}

/// A backbone plus its intermediate heads; resolves `head_predict` routing:
/// layers `1..n` use the trained heads on raw hidden states, layer `n` applies
/// the final norm and the inherent head.
#[derive(Clone, Copy)]
pub struct HeadView<'a> {
    pub backbone: &'a BackboneModel,
    pub heads: &'a IntermediateHeads,
}

impl<'a> HeadView<'a> {
    pub fn new(backbone: &'a BackboneModel, heads: &'a IntermediateHeads) -> Self {
        HeadView { backbone, heads }
    }

    pub fn n_layers(&self) -> usize {
        self.backbone.num_layers()
    }

    /// Logits of layer `i`'s head for its raw hidden state (1-based index).
    pub fn logits(&self, layer: usize, hidden: &ArrayView1<f64>) -> Result<Array1<f64>> {
        let n = self.backbone.num_layers();
        if layer == 0 || layer > n {
            return Err(Error::LayerOutOfRange { layer, n_layers: n });
        }
        if layer == n {
            let normed = self.backbone.apply_final_norm(hidden);
            Ok(self.backbone.inherent_head_logits(&normed.view()))
        } else {
            Ok(hidden.dot(&self.heads.weights[layer - 1]) + &self.heads.biases[layer - 1])
        }
    }

    /// Greedy prediction with a softmax-normalized distribution; argmax ties
    /// break toward the lowest token id.
    pub fn predict(&self, layer: usize, hidden: &ArrayView1<f64>) -> Result<(TokenId, Array1<f64>)> {
        let mut logits = self.logits(layer, hidden)?;
        softmax_inplace(logits.as_slice_mut().expect("contiguous"));
        let token = argmax(logits.as_slice().expect("contiguous")) as TokenId;
        Ok((token, logits))
    }
}

/// Loss and closed-form gradients of one linear head over a batch of hidden
/// states: `dW = H^T (P - Y) / N`, `db = colsum(P - Y) / N`.
pub fn head_loss_and_grads(
    w: &Array2<f64>,
    b: &Array1<f64>,
    hiddens: &ArrayView2<f64>,
    targets: &[TokenId],
) -> (f64, Array2<f64>, Array1<f64>) {
    let n = targets.len();
    assert_eq!(hiddens.nrows(), n);
    let logits = hiddens.dot(w) + b;
    let mut dlogits = Array2::zeros(logits.raw_dim());
    let mut loss = 0.0;
    for (j, &t) in targets.iter().enumerate() {
        let row = logits.row(j);
        loss += cross_entropy(&row, t as usize);
        let mut p = row.to_owned();
        softmax_inplace(p.as_slice_mut().unwrap());
        p[t as usize] -= 1.0;
        p.mapv_inplace(|x| x / n as f64);
        dlogits.row_mut(j).assign(&p);
    }
    let dw = hiddens.t().dot(&dlogits);
    let db = col_sums(&dlogits.view());
    (loss / n as f64, dw, db)
}

/// Train all intermediate heads jointly on frozen backbone states. The loss is
/// the per-position sum over heads of next-token cross-entropy; the returned
/// vector holds its per-epoch mean. The backbone is never mutated.
pub fn train_heads(
    backbone: &BackboneModel,
    train: &[Snippet],
    hyper: &TrainHyper,
) -> Result<(IntermediateHeads, Vec<f64>)> {
    if train.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut heads = IntermediateHeads::init(&backbone.config, hyper.seed);
    let head_count = heads.count();
    let mut losses = Vec::with_capacity(hyper.epochs);
    if head_count == 0 {
        return Ok((heads, losses));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(hyper.seed);
    let mut adam = Adam::new(hyper.lr);
    let batch = hyper.batch_size.max(1);

    for epoch in 0..hyper.epochs {
        let mut order: Vec<usize> = (0..train.len()).collect();
        order.shuffle(&mut rng);
        let mut loss_sum = 0.0;
        let mut positions = 0usize;
        for chunk in order.chunks(batch) {
            let total: usize = chunk.iter().map(|&i| train[i].tokens.len() - 1).sum();
            if total == 0 {
                continue;
            }
            let mut dws: Vec<Array2<f64>> = heads
                .weights
                .iter()
                .map(|w| Array2::zeros(w.raw_dim()))
                .collect();
            let mut dbs: Vec<Array1<f64>> = heads
                .biases
                .iter()
                .map(|b| Array1::zeros(b.raw_dim()))
                .collect();
            for &i in chunk {
                let snippet = &train[i];
                let t_len = snippet.tokens.len();
                let table = backbone.teacher_forced_hiddens(&snippet.tokens)?;
                let targets: Vec<TokenId> = snippet.tokens[1..].to_vec();
                for h in 0..head_count {
                    let hiddens = table.layers[h].slice(ndarray::s![..t_len - 1, ..]);
                    let (loss, dw, db) = head_loss_and_grads(
                        &heads.weights[h],
                        &heads.biases[h],
                        &hiddens,
                        &targets,
                    );
                    // head_loss_and_grads normalizes by the snippet's target
                    // count; rescale to the batch total
                    let rescale = (t_len - 1) as f64 / total as f64;
                    dws[h] += &(dw * rescale);
                    dbs[h] += &(db * rescale);
                    loss_sum += loss * (t_len - 1) as f64;
                }
            }
            positions += total;

            let mut gslices: Vec<&[f64]> = Vec::with_capacity(head_count * 2);
            for (dw, db) in dws.iter().zip(dbs.iter()) {
                gslices.push(dw.as_slice().unwrap());
                gslices.push(db.as_slice().unwrap());
            }
            let mut pslices = heads.flat_mut();
            adam.step(&mut pslices, &gslices);
        }
        let mean = loss_sum / positions.max(1) as f64;
        if !mean.is_finite() {
            return Err(Error::TrainingDiverged {
                stage: "exit-heads",
                epoch,
            });
        }
        losses.push(mean);
    }
    Ok((heads, losses))
}
