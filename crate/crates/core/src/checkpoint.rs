//! Binary checkpoint container.
//!
//! Little-endian layout: magic `SECC`, format version (u32), tensor count
//! (u32); then per tensor: name length (u16), name bytes, rank (u8), dims
//! (u64 each), dtype tag (u8), raw row-major payload. Dtype tags: 0 = f32,
//! 1 = u32, 2 = f64. The same container stores the backbone, intermediate
//! heads, the action classifier, and serialized token arrays.

use std::io::{Read, Write};
use std::path::Path;

use ndarray::{Array1, Array2};

use crate::backbone::{BackboneModel, ModelConfig};
use crate::controller::ActionClassifier;
use crate::corpus::{Origin, Snippet, TokenId};
use crate::error::{Error, Result};
use crate::exit_heads::IntermediateHeads;

pub const MAGIC: [u8; 4] = *b"SECC";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum TensorData {
    F32(Vec<f32>),
    U32(Vec<u32>),
    F64(Vec<f64>),
}

impl TensorData {
    fn dtype_tag(&self) -> u8 {
        match self {
            TensorData::F32(_) => 0,
            TensorData::U32(_) => 1,
            TensorData::F64(_) => 2,
        }
    }

    fn len(&self) -> usize {
        match self {
            TensorData::F32(v) => v.len(),
            TensorData::U32(v) => v.len(),
            TensorData::F64(v) => v.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TensorEntry {
    pub name: String,
    pub dims: Vec<u64>,
    pub data: TensorData,
}

/// An ordered collection of named tensors with by-name lookup.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Container {
    entries: Vec<TensorEntry>,
}

fn fmt_err(msg: impl Into<String>) -> Error {
    Error::CheckpointFormat(msg.into())
}

impl Container {
    pub fn new() -> Self {
        Container::default()
    }

    pub fn push(&mut self, name: impl Into<String>, dims: Vec<u64>, data: TensorData) {
        let entry = TensorEntry {
            name: name.into(),
            dims,
            data,
        };
        debug_assert_eq!(
            entry.dims.iter().product::<u64>() as usize,
            entry.data.len(),
            "dims must match payload for {}",
            entry.name
        );
        self.entries.push(entry);
    }

    pub fn push_f64_matrix(&mut self, name: impl Into<String>, m: &Array2<f64>) {
        self.push(
            name,
            vec![m.nrows() as u64, m.ncols() as u64],
            TensorData::F64(m.as_slice().expect("contiguous").to_vec()),
        );
    }

    pub fn push_f64_vector(&mut self, name: impl Into<String>, v: &Array1<f64>) {
        self.push(
            name,
            vec![v.len() as u64],
            TensorData::F64(v.as_slice().expect("contiguous").to_vec()),
        );
    }

    pub fn get(&self, name: &str) -> Option<&TensorEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn entries(&self) -> &[TensorEntry] {
        &self.entries
    }

    fn require(&self, name: &str) -> Result<&TensorEntry> {
        self.get(name)
            .ok_or_else(|| fmt_err(format!("missing tensor '{name}'")))
    }

    pub fn f64_matrix(&self, name: &str) -> Result<Array2<f64>> {
        let e = self.require(name)?;
        let TensorData::F64(data) = &e.data else {
            return Err(fmt_err(format!("tensor '{name}' is not f64")));
        };
        if e.dims.len() != 2 {
            return Err(fmt_err(format!("tensor '{name}' is not rank 2")));
        }
        Array2::from_shape_vec((e.dims[0] as usize, e.dims[1] as usize), data.clone())
            .map_err(|_| fmt_err(format!("tensor '{name}' shape mismatch")))
    }

    pub fn f64_vector(&self, name: &str) -> Result<Array1<f64>> {
        let e = self.require(name)?;
        let TensorData::F64(data) = &e.data else {
            return Err(fmt_err(format!("tensor '{name}' is not f64")));
        };
        if e.dims.len() != 1 {
            return Err(fmt_err(format!("tensor '{name}' is not rank 1")));
        }
        Ok(Array1::from_vec(data.clone()))
    }

    pub fn u32_vector(&self, name: &str) -> Result<Vec<u32>> {
        let e = self.require(name)?;
        let TensorData::U32(data) = &e.data else {
            return Err(fmt_err(format!("tensor '{name}' is not u32")));
        };
        Ok(data.clone())
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(&MAGIC)?;
        w.write_all(&VERSION.to_le_bytes())?;
        w.write_all(&(self.entries.len() as u32).to_le_bytes())?;
        for e in &self.entries {
            let name_bytes = e.name.as_bytes();
            w.write_all(&(name_bytes.len() as u16).to_le_bytes())?;
            w.write_all(name_bytes)?;
            w.write_all(&[e.dims.len() as u8])?;
            for &d in &e.dims {
                w.write_all(&d.to_le_bytes())?;
            }
            w.write_all(&[e.data.dtype_tag()])?;
            match &e.data {
                TensorData::F32(v) => {
                    for x in v {
                        w.write_all(&x.to_le_bytes())?;
                    }
                }
                TensorData::U32(v) => {
                    for x in v {
                        w.write_all(&x.to_le_bytes())?;
                    }
                }
                TensorData::F64(v) => {
                    for x in v {
                        w.write_all(&x.to_le_bytes())?;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)
            .map_err(|_| fmt_err("truncated before magic"))?;
        if magic != MAGIC {
            return Err(fmt_err(format!(
                "bad magic {:02x?}, expected {:02x?}",
                magic, MAGIC
            )));
        }
        let mut buf4 = [0u8; 4];
        r.read_exact(&mut buf4)
            .map_err(|_| fmt_err("truncated reading version"))?;
        let version = u32::from_le_bytes(buf4);
        if version != VERSION {
            return Err(fmt_err(format!(
                "unsupported version {version}, expected {VERSION}"
            )));
        }
        r.read_exact(&mut buf4)
            .map_err(|_| fmt_err("truncated reading tensor count"))?;
        let count = u32::from_le_bytes(buf4) as usize;

        let mut entries = Vec::with_capacity(count);
        for idx in 0..count {
            let mut buf2 = [0u8; 2];
            r.read_exact(&mut buf2)
                .map_err(|_| fmt_err(format!("truncated reading name of tensor #{idx}")))?;
            let name_len = u16::from_le_bytes(buf2) as usize;
            let mut name_bytes = vec![0u8; name_len];
            r.read_exact(&mut name_bytes)
                .map_err(|_| fmt_err(format!("truncated reading name of tensor #{idx}")))?;
            let name = String::from_utf8(name_bytes)
                .map_err(|_| fmt_err(format!("tensor #{idx} name is not UTF-8")))?;

            let mut buf1 = [0u8; 1];
            r.read_exact(&mut buf1)
                .map_err(|_| fmt_err(format!("truncated reading rank of tensor '{name}'")))?;
            let rank = buf1[0] as usize;
            let mut dims = Vec::with_capacity(rank);
            let mut buf8 = [0u8; 8];
            for _ in 0..rank {
                r.read_exact(&mut buf8)
                    .map_err(|_| fmt_err(format!("truncated reading dims of tensor '{name}'")))?;
                dims.push(u64::from_le_bytes(buf8));
            }
            r.read_exact(&mut buf1)
                .map_err(|_| fmt_err(format!("truncated reading dtype of tensor '{name}'")))?;
            let dtype = buf1[0];
            let numel = dims.iter().product::<u64>() as usize;
            let trunc = |_| fmt_err(format!("truncated reading tensor '{name}'"));
            let data = match dtype {
                0 => {
                    let mut v = Vec::with_capacity(numel);
                    for _ in 0..numel {
                        r.read_exact(&mut buf4).map_err(trunc)?;
                        v.push(f32::from_le_bytes(buf4));
                    }
                    TensorData::F32(v)
                }
                1 => {
                    let mut v = Vec::with_capacity(numel);
                    for _ in 0..numel {
                        r.read_exact(&mut buf4).map_err(trunc)?;
                        v.push(u32::from_le_bytes(buf4));
                    }
                    TensorData::U32(v)
                }
                2 => {
                    let mut v = Vec::with_capacity(numel);
                    for _ in 0..numel {
                        r.read_exact(&mut buf8).map_err(trunc)?;
                        v.push(f64::from_le_bytes(buf8));
                    }
                    TensorData::F64(v)
                }
                other => {
                    return Err(fmt_err(format!(
                        "unknown dtype tag {other} for tensor '{name}'"
                    )))
                }
            };
            entries.push(TensorEntry { name, dims, data });
        }
        Ok(Container { entries })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_to(&mut file)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut file = std::io::BufReader::new(std::fs::File::open(path)?);
        Self::read_from(&mut file)
    }
}

const CONFIG_FIELDS: usize = 6;

fn config_tensor(config: &ModelConfig) -> Vec<u32> {
    vec![
        config.n_layers as u32,
        config.d_model as u32,
        config.n_heads as u32,
        config.d_ff as u32,
        config.vocab_size as u32,
        config.max_positions as u32,
    ]
}

fn config_from_tensor(v: &[u32]) -> Result<ModelConfig> {
    if v.len() != CONFIG_FIELDS {
        return Err(fmt_err(format!(
            "config tensor has {} fields, expected {CONFIG_FIELDS}",
            v.len()
        )));
    }
    let config = ModelConfig {
        n_layers: v[0] as usize,
        d_model: v[1] as usize,
        n_heads: v[2] as usize,
        d_ff: v[3] as usize,
        vocab_size: v[4] as usize,
        max_positions: v[5] as usize,
    };
    config.validate()?;
    Ok(config)
}

impl BackboneModel {
    pub fn to_container(&self) -> Container {
        let mut c = Container::new();
        c.push(
            "config",
            vec![CONFIG_FIELDS as u64],
            TensorData::U32(config_tensor(&self.config)),
        );
        c.push_f64_matrix("tok_emb", &self.tok_emb);
        c.push_f64_matrix("pos_emb", &self.pos_emb);
        for (i, l) in self.layers.iter().enumerate() {
            let n = i + 1;
            c.push_f64_vector(format!("layer.{n}.ln1.gain"), &l.ln1.gain);
            c.push_f64_vector(format!("layer.{n}.ln1.bias"), &l.ln1.bias);
            c.push_f64_matrix(format!("layer.{n}.attn.wq"), &l.attn.wq);
            c.push_f64_vector(format!("layer.{n}.attn.bq"), &l.attn.bq);
            c.push_f64_matrix(format!("layer.{n}.attn.wk"), &l.attn.wk);
            c.push_f64_vector(format!("layer.{n}.attn.bk"), &l.attn.bk);
            c.push_f64_matrix(format!("layer.{n}.attn.wv"), &l.attn.wv);
            c.push_f64_vector(format!("layer.{n}.attn.bv"), &l.attn.bv);
            c.push_f64_matrix(format!("layer.{n}.attn.wo"), &l.attn.wo);
            c.push_f64_vector(format!("layer.{n}.attn.bo"), &l.attn.bo);
            c.push_f64_vector(format!("layer.{n}.ln2.gain"), &l.ln2.gain);
            c.push_f64_vector(format!("layer.{n}.ln2.bias"), &l.ln2.bias);
            c.push_f64_matrix(format!("layer.{n}.ffn.w1"), &l.ffn.w1);
            c.push_f64_vector(format!("layer.{n}.ffn.b1"), &l.ffn.b1);
            c.push_f64_matrix(format!("layer.{n}.ffn.w2"), &l.ffn.w2);
            c.push_f64_vector(format!("layer.{n}.ffn.b2"), &l.ffn.b2);
        }
        c.push_f64_vector("final_norm.gain", &self.final_norm.gain);
        c.push_f64_vector("final_norm.bias", &self.final_norm.bias);
        c.push_f64_matrix("lm_head.weight", &self.lm_head_w);
        c.push_f64_vector("lm_head.bias", &self.lm_head_b);
        c
    }

    pub fn from_container(c: &Container) -> Result<Self> {
        let config = config_from_tensor(&c.u32_vector("config")?)?;
        let mut model = BackboneModel::zeros_like(&config);
        model.tok_emb = c.f64_matrix("tok_emb")?;
        model.pos_emb = c.f64_matrix("pos_emb")?;
        for i in 0..config.n_layers {
            let n = i + 1;
            let l = &mut model.layers[i];
            l.ln1.gain = c.f64_vector(&format!("layer.{n}.ln1.gain"))?;
            l.ln1.bias = c.f64_vector(&format!("layer.{n}.ln1.bias"))?;
            l.attn.wq = c.f64_matrix(&format!("layer.{n}.attn.wq"))?;
            l.attn.bq = c.f64_vector(&format!("layer.{n}.attn.bq"))?;
            l.attn.wk = c.f64_matrix(&format!("layer.{n}.attn.wk"))?;
            l.attn.bk = c.f64_vector(&format!("layer.{n}.attn.bk"))?;
            l.attn.wv = c.f64_matrix(&format!("layer.{n}.attn.wv"))?;
            l.attn.bv = c.f64_vector(&format!("layer.{n}.attn.bv"))?;
            l.attn.wo = c.f64_matrix(&format!("layer.{n}.attn.wo"))?;
            l.attn.bo = c.f64_vector(&format!("layer.{n}.attn.bo"))?;
            l.ln2.gain = c.f64_vector(&format!("layer.{n}.ln2.gain"))?;
            l.ln2.bias = c.f64_vector(&format!("layer.{n}.ln2.bias"))?;
            l.ffn.w1 = c.f64_matrix(&format!("layer.{n}.ffn.w1"))?;
            l.ffn.b1 = c.f64_vector(&format!("layer.{n}.ffn.b1"))?;
            l.ffn.w2 = c.f64_matrix(&format!("layer.{n}.ffn.w2"))?;
            l.ffn.b2 = c.f64_vector(&format!("layer.{n}.ffn.b2"))?;
        }
        model.final_norm.gain = c.f64_vector("final_norm.gain")?;
        model.final_norm.bias = c.f64_vector("final_norm.bias")?;
        model.lm_head_w = c.f64_matrix("lm_head.weight")?;
        model.lm_head_b = c.f64_vector("lm_head.bias")?;
        model.shape_check()?;
        Ok(model)
    }
}

impl IntermediateHeads {
    pub fn to_container(&self) -> Container {
        let mut c = Container::new();
        for (i, (w, b)) in self.weights.iter().zip(&self.biases).enumerate() {
            let n = i + 1;
            c.push_f64_matrix(format!("head.{n}.weight"), w);
            c.push_f64_vector(format!("head.{n}.bias"), b);
        }
        c
    }

    pub fn from_container(c: &Container, config: &ModelConfig) -> Result<Self> {
        let count = config.n_layers.saturating_sub(1);
        let mut weights = Vec::with_capacity(count);
        let mut biases = Vec::with_capacity(count);
        for i in 0..count {
            let n = i + 1;
            let w = c.f64_matrix(&format!("head.{n}.weight"))?;
            let b = c.f64_vector(&format!("head.{n}.bias"))?;
            if w.nrows() != config.d_model || w.ncols() != config.vocab_size {
                return Err(fmt_err(format!(
                    "head.{n}.weight has shape {}x{}, expected {}x{}",
                    w.nrows(),
                    w.ncols(),
                    config.d_model,
                    config.vocab_size
                )));
            }
            weights.push(w);
            biases.push(b);
        }
        Ok(IntermediateHeads {
            d_model: config.d_model,
            vocab_size: config.vocab_size,
            weights,
            biases,
        })
    }
}

impl ActionClassifier {
    pub fn to_container(&self) -> Container {
        let mut c = Container::new();
        c.push_f64_matrix("ctrl.weight", &self.weight);
        c.push_f64_vector("ctrl.bias", &self.bias);
        c
    }

    pub fn from_container(c: &Container) -> Result<Self> {
        let weight = c.f64_matrix("ctrl.weight")?;
        let bias = c.f64_vector("ctrl.bias")?;
        if weight.ncols() != 3 || bias.len() != 3 {
            return Err(fmt_err("ctrl tensors must have 3 output classes"));
        }
        Ok(ActionClassifier { weight, bias })
    }
}

fn snippets_to_stream(snippets: &[Snippet]) -> Vec<u32> {
    let mut stream = Vec::new();
    for s in snippets {
        stream.push(s.tokens.len() as u32);
        stream.extend_from_slice(&s.tokens);
    }
    stream
}

fn snippets_from_stream(stream: &[u32], source: &Path) -> Result<Vec<Snippet>> {
    let mut snippets = Vec::new();
    let mut i = 0usize;
    while i < stream.len() {
        let len = stream[i] as usize;
        i += 1;
        if i + len > stream.len() {
            return Err(fmt_err("token stream truncated inside a snippet"));
        }
        let tokens: Vec<TokenId> = stream[i..i + len].to_vec();
        i += len;
        snippets.push(Snippet {
            tokens,
            origin: Origin {
                path: source.to_path_buf(),
                start: 0,
                end: 0,
            },
        });
    }
    Ok(snippets)
}

/// Persist train/test snippet sets as length-prefixed token arrays.
pub fn save_snippet_sets(train: &[Snippet], test: &[Snippet], path: &Path) -> Result<()> {
    let mut c = Container::new();
    let tr = snippets_to_stream(train);
    let te = snippets_to_stream(test);
    c.push("train", vec![tr.len() as u64], TensorData::U32(tr));
    c.push("test", vec![te.len() as u64], TensorData::U32(te));
    c.save(path)
}

pub fn load_snippet_sets(path: &Path) -> Result<(Vec<Snippet>, Vec<Snippet>)> {
    let c = Container::load(path)?;
    let train = snippets_from_stream(&c.u32_vector("train")?, path)?;
    let test = snippets_from_stream(&c.u32_vector("test")?, path)?;
    Ok((train, test))
}
