//! Shared numeric primitives: layer norm, GELU, softmax, cross-entropy, Adam,
//! and seeded parameter initialization. Everything runs in f64.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2, Axis};
use rand::Rng;
use rand_distr::{Distribution, Normal};

pub const LN_EPS: f64 = 1e-5;

/// Layer normalization with learnable gain and bias.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerNorm {
    pub gain: Array1<f64>,
    pub bias: Array1<f64>,
}

impl LayerNorm {
    pub fn new(dim: usize) -> Self {
        LayerNorm {
            gain: Array1::ones(dim),
            bias: Array1::zeros(dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        LayerNorm {
            gain: Array1::zeros(dim),
            bias: Array1::zeros(dim),
        }
    }

    pub fn forward_vec(&self, x: &ArrayView1<f64>) -> Array1<f64> {
        let d = x.len() as f64;
        let mean = x.sum() / d;
        let var = x.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / d;
        let inv = 1.0 / (var + LN_EPS).sqrt();
        let mut out = Array1::zeros(x.len());
        for i in 0..x.len() {
            out[i] = (x[i] - mean) * inv * self.gain[i] + self.bias[i];
        }
        out
    }

    /// Row-wise layer norm over a `[rows, dim]` matrix.
    pub fn forward_rows(&self, x: &ArrayView2<f64>) -> Array2<f64> {
        let mut out = Array2::zeros(x.raw_dim());
        for (xr, mut or) in x.rows().into_iter().zip(out.rows_mut()) {
            let d = xr.len() as f64;
            let mean = xr.sum() / d;
            let var = xr.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / d;
            let inv = 1.0 / (var + LN_EPS).sqrt();
            for i in 0..xr.len() {
                or[i] = (xr[i] - mean) * inv * self.gain[i] + self.bias[i];
            }
        }
        out
    }

    /// Row-wise backward pass. `x` is the original input, `dy` the gradient of
    /// the output. Accumulates parameter gradients and returns `dx`.
    pub fn backward_rows(
        &self,
        x: &ArrayView2<f64>,
        dy: &ArrayView2<f64>,
        dgain: &mut Array1<f64>,
        dbias: &mut Array1<f64>,
    ) -> Array2<f64> {
        let dim = x.ncols();
        let df = dim as f64;
        let mut dx = Array2::zeros(x.raw_dim());
        for ((xr, dyr), mut dxr) in x
            .rows()
            .into_iter()
            .zip(dy.rows())
            .zip(dx.rows_mut())
        {
            let mean = xr.sum() / df;
            let var = xr.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / df;
            let inv = 1.0 / (var + LN_EPS).sqrt();
            let mut g_mean = 0.0;
            let mut gx_mean = 0.0;
            for i in 0..dim {
                let xh = (xr[i] - mean) * inv;
                let g = self.gain[i] * dyr[i];
                dgain[i] += dyr[i] * xh;
                dbias[i] += dyr[i];
                g_mean += g;
                gx_mean += g * xh;
            }
            g_mean /= df;
            gx_mean /= df;
            for i in 0..dim {
                let xh = (xr[i] - mean) * inv;
                let g = self.gain[i] * dyr[i];
                dxr[i] = (g - g_mean - xh * gx_mean) * inv;
            }
        }
        dx
    }
}

const GELU_C: f64 = 0.797_884_560_802_865_4; // sqrt(2/pi)
const GELU_A: f64 = 0.044_715;

pub fn gelu(x: f64) -> f64 {
    0.5 * x * (1.0 + (GELU_C * (x + GELU_A * x * x * x)).tanh())
}

pub fn gelu_grad(x: f64) -> f64 {
    let u = GELU_C * (x + GELU_A * x * x * x);
    let t = u.tanh();
    0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * GELU_C * (1.0 + 3.0 * GELU_A * x * x)
}

/// Numerically stable in-place softmax.
pub fn softmax_inplace(v: &mut [f64]) {
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for x in v.iter_mut() {
        *x = (*x - max).exp();
        sum += *x;
    }
    for x in v.iter_mut() {
        *x /= sum;
    }
}

pub fn softmax(v: &ArrayView1<f64>) -> Array1<f64> {
    let mut out = v.to_owned();
    softmax_inplace(out.as_slice_mut().expect("contiguous"));
    out
}

/// Index of the largest entry, ties broken toward the lowest index.
pub fn argmax(v: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in v.iter().enumerate().skip(1) {
        if x > v[best] {
            best = i;
        }
    }
    best
}

/// Cross-entropy `-ln softmax(logits)[target]`, computed stably.
pub fn cross_entropy(logits: &ArrayView1<f64>, target: usize) -> f64 {
    let max = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lse = logits.iter().map(|&x| (x - max).exp()).sum::<f64>().ln() + max;
    lse - logits[target]
}

/// Row-wise softmax over a `[rows, cols]` matrix, in place.
pub fn softmax_rows_inplace(m: &mut Array2<f64>) {
    for mut row in m.rows_mut() {
        let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut sum = 0.0;
        for x in row.iter_mut() {
            *x = (*x - max).exp();
            sum += *x;
        }
        for x in row.iter_mut() {
            *x /= sum;
        }
    }
}

/// Adam optimizer over a fixed list of flat parameter tensors.
#[derive(Debug, Clone)]
pub struct Adam {
    pub lr: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
    step: u64,
    m: Vec<Vec<f64>>,
    v: Vec<Vec<f64>>,
}

impl Adam {
    pub fn new(lr: f64) -> Self {
        Adam {
            lr,
            beta1: 0.9,
            beta2: 0.999,
            eps: 1e-8,
            step: 0,
            m: Vec::new(),
            v: Vec::new(),
        }
    }

    pub fn step(&mut self, params: &mut [&mut [f64]], grads: &[&[f64]]) {
        assert_eq!(params.len(), grads.len());
        if self.m.is_empty() {
            self.m = grads.iter().map(|g| vec![0.0; g.len()]).collect();
            self.v = grads.iter().map(|g| vec![0.0; g.len()]).collect();
        }
        self.step += 1;
        let bc1 = 1.0 - self.beta1.powi(self.step as i32);
        let bc2 = 1.0 - self.beta2.powi(self.step as i32);
        for ((p, g), (m, v)) in params
            .iter_mut()
            .zip(grads.iter())
            .zip(self.m.iter_mut().zip(self.v.iter_mut()))
        {
            assert_eq!(p.len(), g.len());
            for i in 0..p.len() {
                m[i] = self.beta1 * m[i] + (1.0 - self.beta1) * g[i];
                v[i] = self.beta2 * v[i] + (1.0 - self.beta2) * g[i] * g[i];
                let mh = m[i] / bc1;
                let vh = v[i] / bc2;
                p[i] -= self.lr * mh / (vh.sqrt() + self.eps);
            }
        }
    }
}

/// `[rows, cols]` matrix with entries drawn from N(0, std), in row-major order.
pub fn normal_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, std: f64) -> Array2<f64> {
    let dist = Normal::new(0.0, std).expect("valid std");
    Array2::from_shape_fn((rows, cols), |_| dist.sample(rng))
}

/// Column sums of a `[rows, cols]` matrix.
pub fn col_sums(m: &ArrayView2<f64>) -> Array1<f64> {
    m.sum_axis(Axis(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    #[test]
    fn layernorm_zero_mean_unit_var() {
        let ln = LayerNorm::new(4);
        let x = array![1.0, 2.0, 3.0, 4.0];
        let y = ln.forward_vec(&x.view());
        let mean = y.sum() / 4.0;
        let var = y.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / 4.0;
        assert_abs_diff_eq!(mean, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(var, 1.0, epsilon = 1e-4);
    }

    #[test]
    fn layernorm_backward_matches_fd() {
        let mut ln = LayerNorm::new(3);
        ln.gain = array![1.1, 0.9, 1.3];
        ln.bias = array![0.1, -0.2, 0.0];
        let x = array![[0.3, -1.2, 0.7], [2.0, 0.1, -0.4]];
        let dy = array![[1.0, -0.5, 0.2], [0.3, 0.8, -1.1]];
        let mut dg = Array1::zeros(3);
        let mut db = Array1::zeros(3);
        let dx = ln.backward_rows(&x.view(), &dy.view(), &mut dg, &mut db);

        let loss = |xx: &Array2<f64>| -> f64 {
            let y = ln.forward_rows(&xx.view());
            (y * &dy).sum()
        };
        let h = 1e-6;
        for r in 0..2 {
            for c in 0..3 {
                let mut xp = x.clone();
                xp[[r, c]] += h;
                let mut xm = x.clone();
                xm[[r, c]] -= h;
                let fd = (loss(&xp) - loss(&xm)) / (2.0 * h);
                assert_abs_diff_eq!(dx[[r, c]], fd, epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn softmax_sums_to_one() {
        let v = array![1.0, 3.0, 2.0, 0.0];
        let p = softmax(&v.view());
        assert_abs_diff_eq!(p.sum(), 1.0, epsilon = 1e-12);
        assert_eq!(argmax(p.as_slice().unwrap()), 1);
    }

    #[test]
    fn argmax_ties_break_low() {
        assert_eq!(argmax(&[0.5, 0.5, 0.1]), 0);
        assert_eq!(argmax(&[0.0, 0.0, 0.0]), 0);
    }

    #[test]
    fn gelu_grad_matches_fd() {
        for &x in &[-2.5, -0.3, 0.0, 0.7, 3.1] {
            let h = 1e-6;
            let fd = (gelu(x + h) - gelu(x - h)) / (2.0 * h);
            assert_abs_diff_eq!(gelu_grad(x), fd, epsilon = 1e-8);
        }
    }

    #[test]
    fn adam_moves_toward_minimum() {
        // minimize (p - 3)^2
        let mut p = vec![0.0f64];
        let mut adam = Adam::new(0.1);
        for _ in 0..500 {
            let g = vec![2.0 * (p[0] - 3.0)];
            adam.step(&mut [p.as_mut_slice()], &[g.as_slice()]);
        }
        assert_abs_diff_eq!(p[0], 3.0, epsilon = 1e-3);
    }
}
