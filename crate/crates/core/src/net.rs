//! The HAL model: backbone φ, visual encoder ψ, action encoder η, visual
//! decoder κ, action decoder ξ, classifier Γ and the two learned transition
//! priors, plus the ELBO terms.
//!
//! Parameters live in a [`ParamStore`] keyed by `module.layer.tensor`
//! paths. Every forward pass records onto a fresh [`Graph`], so gradients
//! are available for any scalar built from the outputs.

use std::collections::HashMap;
use std::path::Path;

use ndarray::{Array1, Array2};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;
use crate::error::{ensure, HalError, Result};
use crate::seed::stream_rng;
use crate::tape::{Graph, Grads, Mat, NodeId};
use crate::types::{FeatureSequence, PosteriorMatrix};

pub const LOG_SIGMA_MIN: f64 = -8.0;
pub const LOG_SIGMA_MAX: f64 = 8.0;
const LN_EPS: f64 = 1e-5;

/// Architecture hyperparameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub d: usize,
    pub hidden: usize,
    pub n_v: usize,
    pub n_c: usize,
    pub num_classes: usize,
    pub heads: usize,
    pub backbone_layers: usize,
    pub causal_attention: bool,
    pub pyramidal: bool,
    pub positional_encoding: bool,
    /// Frames each position may attend to on either side; 0 means unrestricted.
    pub attention_window: usize,
}

impl ModelConfig {
    pub fn from_experiment(cfg: &ExperimentConfig, num_classes: usize) -> Self {
        Self {
            d: cfg.d,
            hidden: cfg.hidden_width,
            n_v: cfg.n_v,
            n_c: cfg.n_c,
            num_classes,
            heads: cfg.heads,
            backbone_layers: cfg.backbone_layers,
            causal_attention: cfg.causal_attention,
            pyramidal: cfg.pyramidal,
            positional_encoding: cfg.positional_encoding,
            attention_window: cfg.attention_window,
        }
    }

    pub fn validate(&self) -> Result<()> {
        ensure!(
            self.d > 0 && self.hidden > 0 && self.n_v > 0 && self.n_c > 0,
            "model dimensions must be positive"
        );
        ensure!(self.num_classes >= 1, "model needs at least one class");
        ensure!(
            self.heads > 0 && self.hidden.is_multiple_of(self.heads),
            "hidden width {} not divisible by {} heads",
            self.hidden,
            self.heads
        );
        Ok(())
    }
}

/// Named parameter tensors in a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamStore {
    names: Vec<String>,
    values: Vec<Mat>,
    index: HashMap<String, usize>,
}

impl ParamStore {
    fn new() -> Self {
        Self {
            names: Vec::new(),
            values: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn insert(&mut self, name: String, value: Mat) {
        assert!(!self.index.contains_key(&name), "duplicate parameter {name}");
        self.index.insert(name.clone(), self.names.len());
        self.names.push(name);
        self.values.push(value);
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<&Mat> {
        self.index.get(name).map(|&i| &self.values[i])
    }

    pub fn values(&self) -> &[Mat] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Mat] {
        &mut self.values
    }

    pub fn num_scalars(&self) -> usize {
        self.values.iter().map(|v| v.len()).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Mat)> {
        self.names.iter().map(String::as_str).zip(self.values.iter())
    }
}

/// Parameters bound into one graph.
pub struct Bound {
    ids: Vec<NodeId>,
    index: HashMap<String, usize>,
}

impl Bound {
    fn get(&self, name: &str) -> NodeId {
        self.ids[*self
            .index
            .get(name)
            .unwrap_or_else(|| panic!("unknown parameter {name}"))]
    }

    /// Gradients in [`ParamStore`] order; zero for unused parameters.
    pub fn gradients(&self, grads: &Grads, store: &ParamStore) -> Vec<Mat> {
        self.ids
            .iter()
            .zip(store.values.iter())
            .map(|(id, v)| grads.get_or_zeros(*id, v.dim()))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Reparameterized sampling with a fixed noise seed.
    Train { sample_seed: u64 },
    /// Posterior means, no sampling.
    Eval,
}

/// Graph handles produced by a forward pass.
#[derive(Debug, Clone, Copy)]
pub struct ForwardNodes {
    pub b: NodeId,
    pub mu_v: NodeId,
    pub log_sigma_v: NodeId,
    pub v_hat: NodeId,
    pub mu_c: NodeId,
    pub log_sigma_c: NodeId,
    pub c_hat: NodeId,
    pub b_hat: NodeId,
    pub v_prime: NodeId,
    pub logits: NodeId,
}

/// Plain-array view of a forward pass.
#[derive(Debug, Clone, PartialEq)]
pub struct ForwardOutput {
    pub b: Array2<f64>,
    pub mu_v: Array2<f64>,
    pub log_sigma_v: Array2<f64>,
    pub v_hat: Array2<f64>,
    pub mu_c: Array2<f64>,
    pub log_sigma_c: Array2<f64>,
    pub c_hat: Array2<f64>,
    pub b_hat: Array2<f64>,
    pub v_prime: Array2<f64>,
    pub logits: Array2<f64>,
}

/// Reconstruction and KL parts of the ELBO, averaged over frames.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElboTerms {
    pub recon: f64,
    pub kl_v: f64,
    pub kl_c: f64,
}

impl ElboTerms {
    pub fn elbo(&self) -> f64 {
        -(self.recon + self.kl_v + self.kl_c)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ElboNodes {
    pub recon: NodeId,
    pub kl_v: NodeId,
    pub kl_c: NodeId,
}

/// Posterior parameters of both latent blocks.
#[derive(Debug, Clone)]
pub struct Posterior {
    pub mu_v: Array2<f64>,
    pub log_sigma_v: Array2<f64>,
    pub mu_c: Array2<f64>,
    pub log_sigma_c: Array2<f64>,
}

#[derive(Debug, Clone)]
pub struct Samples {
    pub v_hat: Array2<f64>,
    pub c_hat: Array2<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HalModel {
    config: ModelConfig,
    params: ParamStore,
}

fn sinusoidal_positions(t: usize, width: usize) -> Array2<f64> {
    Array2::from_shape_fn((t, width), |(pos, i)| {
        let pair = (i / 2) as f64;
        let freq = 1.0 / 10_000f64.powf(2.0 * pair / width as f64);
        let angle = pos as f64 * freq;
        if i % 2 == 0 {
            angle.sin()
        } else {
            angle.cos()
        }
    })
}

struct Builder<'a> {
    store: &'a mut ParamStore,
    rng: &'a mut ChaCha8Rng,
}

impl Builder<'_> {
    fn dense(&mut self, name: &str, fan_in: usize, fan_out: usize) {
        let bound = 1.0 / (fan_in as f64).sqrt();
        let w = Array2::from_shape_fn((fan_in, fan_out), |_| self.rng.gen_range(-bound..bound));
        self.store.insert(format!("{name}.weight"), w);
        self.store.insert(format!("{name}.bias"), Array2::zeros((1, fan_out)));
    }

    fn layer_norm(&mut self, name: &str, width: usize) {
        self.store.insert(format!("{name}.gamma"), Array2::ones((1, width)));
        self.store.insert(format!("{name}.beta"), Array2::zeros((1, width)));
    }

    fn transformer_layer(&mut self, name: &str, width: usize) {
        self.layer_norm(&format!("{name}.ln1"), width);
        for proj in ["q", "k", "v", "o"] {
            self.dense(&format!("{name}.attn.{proj}"), width, width);
        }
        self.layer_norm(&format!("{name}.ln2"), width);
        self.dense(&format!("{name}.ffn.in"), width, 2 * width);
        self.dense(&format!("{name}.ffn.out"), 2 * width, width);
    }
}

impl HalModel {
    pub fn new(config: ModelConfig, init_seed: u64) -> Result<Self> {
        config.validate()?;
        let mut store = ParamStore::new();
        let mut rng = stream_rng(init_seed, "init", 0);
        let mut b = Builder {
            store: &mut store,
            rng: &mut rng,
        };
        let (h, nv, nc) = (config.hidden, config.n_v, config.n_c);
        b.dense("backbone.input", config.d, h);
        for l in 0..config.backbone_layers {
            b.transformer_layer(&format!("backbone.layer{l}"), h);
        }
        b.layer_norm("backbone.final_ln", h);
        b.dense("visual_encoder.hidden", h, h);
        b.dense("visual_encoder.out", h, 2 * nv);
        b.dense("action_encoder.input", nv, h);
        b.transformer_layer("action_encoder.layer0", h);
        b.dense("action_encoder.out", h, 2 * nc);
        b.dense("visual_decoder.hidden", nv, 2 * h);
        b.dense("visual_decoder.out", 2 * h, h);
        b.dense("action_decoder.hidden", nc, 2 * h);
        b.dense("action_decoder.out", 2 * h, nv);
        b.dense("classifier.out", nc, config.num_classes);
        b.dense("prior_v.hidden", nv, h);
        b.dense("prior_v.out", h, 2 * nv);
        b.dense("prior_c.hidden", nc, h);
        b.dense("prior_c.out", h, 2 * nc);
        Ok(Self { config, params: store })
    }

    pub fn config(&self) -> &ModelConfig {
        &self.config
    }

    pub fn params(&self) -> &ParamStore {
        &self.params
    }

    pub fn params_mut(&mut self) -> &mut ParamStore {
        &mut self.params
    }

    /// Inserts every parameter as a gradient-tracked leaf.
    pub fn bind(&self, g: &mut Graph) -> Bound {
        let ids = self.params.values.iter().map(|v| g.param(v.clone())).collect();
        Bound {
            ids,
            index: self.params.index.clone(),
        }
    }

    fn dense(&self, g: &mut Graph, p: &Bound, name: &str, x: NodeId) -> NodeId {
        let w = p.get(&format!("{name}.weight"));
        let b = p.get(&format!("{name}.bias"));
        let y = g.matmul(x, w);
        g.add_row(y, b)
    }

    fn layer_norm(&self, g: &mut Graph, p: &Bound, name: &str, x: NodeId) -> NodeId {
        let n = g.layer_norm_rows(x, LN_EPS);
        let n = g.mul_row(n, p.get(&format!("{name}.gamma")));
        g.add_row(n, p.get(&format!("{name}.beta")))
    }

    fn attention(&self, g: &mut Graph, p: &Bound, name: &str, x: NodeId) -> NodeId {
        let (t, width) = g.shape(x);
        let heads = self.config.heads;
        let dk = width / heads;
        let q = self.dense(g, p, &format!("{name}.q"), x);
        let k = self.dense(g, p, &format!("{name}.k"), x);
        let v = self.dense(g, p, &format!("{name}.v"), x);
        let (causal, window) = (self.config.causal_attention, self.config.attention_window);
        let mask = if causal || window > 0 {
            Some(g.constant(Array2::from_shape_fn((t, t), |(i, j)| {
                let blocked = (causal && j > i) || (window > 0 && i.abs_diff(j) > window);
                if blocked {
                    -1e9
                } else {
                    0.0
                }
            })))
        } else {
            None
        };
        let scale = 1.0 / (dk as f64).sqrt();
        let mut outs = Vec::with_capacity(heads);
        for h in 0..heads {
            let (lo, hi) = (h * dk, (h + 1) * dk);
            let qh = g.slice_cols(q, lo, hi);
            let kh = g.slice_cols(k, lo, hi);
            let vh = g.slice_cols(v, lo, hi);
            let scores = g.matmul_t(qh, kh);
            let mut scores = g.scale(scores, scale);
            if let Some(m) = mask {
                scores = g.add(scores, m);
            }
            let attn = g.softmax_rows(scores);
            outs.push(g.matmul(attn, vh));
        }
        let cat = g.concat_cols(&outs);
        self.dense(g, p, &format!("{name}.o"), cat)
    }

    /// Pre-norm encoder layer.
    fn transformer_layer(&self, g: &mut Graph, p: &Bound, name: &str, x: NodeId) -> NodeId {
        let n1 = self.layer_norm(g, p, &format!("{name}.ln1"), x);
        let a = self.attention(g, p, &format!("{name}.attn"), n1);
        let x = g.add(x, a);
        let n2 = self.layer_norm(g, p, &format!("{name}.ln2"), x);
        let f = self.dense(g, p, &format!("{name}.ffn.in"), n2);
        let f = g.relu(f);
        let f = self.dense(g, p, &format!("{name}.ffn.out"), f);
        g.add(x, f)
    }

    fn gaussian_head(&self, g: &mut Graph, out: NodeId, n: usize) -> (NodeId, NodeId) {
        let mu = g.slice_cols(out, 0, n);
        let ls = g.slice_cols(out, n, 2 * n);
        let ls = g.clamp(ls, LOG_SIGMA_MIN, LOG_SIGMA_MAX);
        (mu, ls)
    }

    fn mlp2(&self, g: &mut Graph, p: &Bound, name: &str, x: NodeId) -> NodeId {
        let h = self.dense(g, p, &format!("{name}.hidden"), x);
        let h = g.relu(h);
        self.dense(g, p, &format!("{name}.out"), h)
    }

    fn reparameterize(g: &mut Graph, mu: NodeId, ls: NodeId, rng: &mut ChaCha8Rng) -> NodeId {
        let shape = g.shape(mu);
        let eps = Array2::from_shape_fn(shape, |_| rng.sample::<f64, _>(StandardNormal));
        let eps = g.constant(eps);
        let sigma = g.exp(ls);
        let noise = g.mul(sigma, eps);
        g.add(mu, noise)
    }

    fn check_finite(g: &Graph, id: NodeId, map: &str) -> Result<()> {
        if g.value(id).iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(HalError::numerical(format!("nonfinite activations in {map}")))
        }
    }

    pub fn backbone(&self, g: &mut Graph, p: &Bound, x: NodeId) -> NodeId {
        let t = g.shape(x).0;
        let h = self.dense(g, p, "backbone.input", x);
        let mut h = h;
        if self.config.positional_encoding {
            let pos = g.constant(sinusoidal_positions(t, self.config.hidden));
            h = g.add(h, pos);
        }
        for l in 0..self.config.backbone_layers {
            h = self.transformer_layer(g, p, &format!("backbone.layer{l}"), h);
        }
        self.layer_norm(g, p, "backbone.final_ln", h)
    }

    fn action_encoder(&self, g: &mut Graph, p: &Bound, v: NodeId) -> NodeId {
        let t = g.shape(v).0;
        let h = self.dense(g, p, "action_encoder.input", v);
        let h = g.relu(h);
        let h = if self.config.pyramidal {
            let pooled = g.pool_rows2(h);
            let enc = self.transformer_layer(g, p, "action_encoder.layer0", pooled);
            g.unpool_rows2(enc, t)
        } else {
            self.transformer_layer(g, p, "action_encoder.layer0", h)
        };
        self.dense(g, p, "action_encoder.out", h)
    }

    /// Records `φ, ψ, η, κ, ξ, Γ` on `g`.
    pub fn forward_on_graph(&self, g: &mut Graph, p: &Bound, x: &FeatureSequence, mode: Mode) -> Result<ForwardNodes> {
        ensure!(
            x.dim() == self.config.d,
            "feature width {} does not match model input width {}",
            x.dim(),
            self.config.d
        );
        let mut rng = match mode {
            Mode::Train { sample_seed } => Some(stream_rng(sample_seed, "posterior", 0)),
            Mode::Eval => None,
        };
        let xin = g.constant(x.frames().clone());
        let b = self.backbone(g, p, xin);
        Self::check_finite(g, b, "backbone")?;

        let out_v = self.mlp2(g, p, "visual_encoder", b);
        let (mu_v, log_sigma_v) = self.gaussian_head(g, out_v, self.config.n_v);
        Self::check_finite(g, out_v, "visual_encoder")?;
        let v_hat = match rng.as_mut() {
            Some(r) => Self::reparameterize(g, mu_v, log_sigma_v, r),
            None => mu_v,
        };

        let out_c = self.action_encoder(g, p, v_hat);
        let (mu_c, log_sigma_c) = self.gaussian_head(g, out_c, self.config.n_c);
        Self::check_finite(g, out_c, "action_encoder")?;
        let c_hat = match rng.as_mut() {
            Some(r) => Self::reparameterize(g, mu_c, log_sigma_c, r),
            None => mu_c,
        };

        let b_hat = self.mlp2(g, p, "visual_decoder", v_hat);
        Self::check_finite(g, b_hat, "visual_decoder")?;
        let v_prime = self.mlp2(g, p, "action_decoder", c_hat);
        Self::check_finite(g, v_prime, "action_decoder")?;
        let logits = self.dense(g, p, "classifier.out", c_hat);
        Self::check_finite(g, logits, "classifier")?;

        Ok(ForwardNodes {
            b,
            mu_v,
            log_sigma_v,
            v_hat,
            mu_c,
            log_sigma_c,
            c_hat,
            b_hat,
            v_prime,
            logits,
        })
    }

    pub fn forward(&self, x: &FeatureSequence, mode: Mode) -> Result<ForwardOutput> {
        let mut g = Graph::new();
        let p = self.bind(&mut g);
        let n = self.forward_on_graph(&mut g, &p, x, mode)?;
        let v = |id| g.value(id).clone();
        Ok(ForwardOutput {
            b: v(n.b),
            mu_v: v(n.mu_v),
            log_sigma_v: v(n.log_sigma_v),
            v_hat: v(n.v_hat),
            mu_c: v(n.mu_c),
            log_sigma_c: v(n.log_sigma_c),
            c_hat: v(n.c_hat),
            b_hat: v(n.b_hat),
            v_prime: v(n.v_prime),
            logits: v(n.logits),
        })
    }

    /// `Σ_dims KL(q ‖ p)` averaged over frames, with a standard-normal prior
    /// at the first frame and the learned transition prior afterwards.
    fn kl_on_graph(&self, g: &mut Graph, p: &Bound, prior: &str, mu: NodeId, ls: NodeId, sample: NodeId) -> NodeId {
        let (t, n) = g.shape(mu);
        let mu0 = g.slice_rows(mu, 0, 1);
        let ls0 = g.slice_rows(ls, 0, 1);
        let zeros = g.constant(Array2::zeros((1, n)));
        let first = gaussian_kl(g, mu0, ls0, zeros, zeros);
        let mut total = first;
        if t > 1 {
            let prev = g.slice_rows(sample, 0, t - 1);
            let out = self.mlp2(g, p, prior, prev);
            let (pmu, pls) = self.gaussian_head(g, out, n);
            let qmu = g.slice_rows(mu, 1, t);
            let qls = g.slice_rows(ls, 1, t);
            let rest = gaussian_kl(g, qmu, qls, pmu, pls);
            total = g.add(total, rest);
        }
        g.scale(total, 1.0 / t as f64)
    }

    /// Classifier `Γ` applied to an action-latent node.
    pub fn logits_on_graph(&self, g: &mut Graph, p: &Bound, c: NodeId) -> NodeId {
        self.dense(g, p, "classifier.out", c)
    }

    /// ELBO terms for a recorded forward pass.
    pub fn elbo_on_graph(&self, g: &mut Graph, p: &Bound, f: &ForwardNodes) -> ElboNodes {
        let target = g.detach(f.b);
        let diff = g.sub(target, f.b_hat);
        let sq = g.square(diff);
        let mse = g.mean_all(sq);
        let width = g.shape(f.b).1 as f64;
        let recon = g.scale(mse, 0.5 * width);
        let kl_v = self.kl_on_graph(g, p, "prior_v", f.mu_v, f.log_sigma_v, f.v_hat);
        let kl_c = self.kl_on_graph(g, p, "prior_c", f.mu_c, f.log_sigma_c, f.c_hat);
        ElboNodes { recon, kl_v, kl_c }
    }

    /// ELBO terms from explicit posterior parameters and samples; `b̂` and
    /// the priors are computed by the model.
    pub fn elbo(&self, b: &Array2<f64>, post: &Posterior, samples: &Samples) -> Result<ElboTerms> {
        let t = b.nrows();
        ensure!(b.ncols() == self.config.hidden, "b width mismatch");
        for (name, m, w) in [
            ("mu_v", &post.mu_v, self.config.n_v),
            ("log_sigma_v", &post.log_sigma_v, self.config.n_v),
            ("v_hat", &samples.v_hat, self.config.n_v),
            ("mu_c", &post.mu_c, self.config.n_c),
            ("log_sigma_c", &post.log_sigma_c, self.config.n_c),
            ("c_hat", &samples.c_hat, self.config.n_c),
        ] {
            ensure!(m.dim() == (t, w), "{name} has shape {:?}, expected ({t}, {w})", m.dim());
        }
        let mut g = Graph::new();
        let p = self.bind(&mut g);
        let bn = g.constant(b.clone());
        let v_hat = g.constant(samples.v_hat.clone());
        let c_hat = g.constant(samples.c_hat.clone());
        let b_hat = self.mlp2(&mut g, &p, "visual_decoder", v_hat);
        let f = ForwardNodes {
            b: bn,
            mu_v: g.constant(post.mu_v.clone()),
            log_sigma_v: g.constant(post.log_sigma_v.clone()),
            v_hat,
            mu_c: g.constant(post.mu_c.clone()),
            log_sigma_c: g.constant(post.log_sigma_c.clone()),
            c_hat,
            b_hat,
            v_prime: c_hat,
            logits: c_hat,
        };
        let n = self.elbo_on_graph(&mut g, &p, &f);
        let terms = ElboTerms {
            recon: g.scalar_value(n.recon),
            kl_v: g.scalar_value(n.kl_v),
            kl_c: g.scalar_value(n.kl_c),
        };
        if ![terms.recon, terms.kl_v, terms.kl_c].iter().all(|v| v.is_finite()) {
            return Err(HalError::numerical("nonfinite ELBO term"));
        }
        Ok(terms)
    }

    /// Learned transition prior applied to explicit previous states.
    pub fn prior_params(&self, prior: PriorKind, prev: &Array2<f64>) -> (Array2<f64>, Array2<f64>) {
        let mut g = Graph::new();
        let p = self.bind(&mut g);
        let x = g.constant(prev.clone());
        let (name, n) = match prior {
            PriorKind::Visual => ("prior_v", self.config.n_v),
            PriorKind::Action => ("prior_c", self.config.n_c),
        };
        let out = self.mlp2(&mut g, &p, name, x);
        let (mu, ls) = self.gaussian_head(&mut g, out, n);
        (g.value(mu).clone(), g.value(ls).clone())
    }

    pub fn classify(&self, c_hat: &Array2<f64>) -> Result<PosteriorMatrix> {
        ensure!(c_hat.ncols() == self.config.n_c, "ĉ width mismatch");
        let w = self.params.get("classifier.out.weight").expect("classifier weight");
        let b = self.params.get("classifier.out.bias").expect("classifier bias");
        let logits = c_hat.dot(w) + b;
        posteriors_from_logits(&logits)
    }

    /// Writes a safetensors container with `F64` tensors and the run config
    /// under the `config` metadata key.
    pub fn save(&self, path: &Path, experiment: &ExperimentConfig) -> Result<()> {
        let bytes: Vec<(String, Vec<u8>, Vec<usize>)> = self
            .params
            .iter()
            .map(|(name, v)| {
                let data: Vec<u8> = v.iter().flat_map(|x| x.to_le_bytes()).collect();
                (name.to_string(), data, vec![v.nrows(), v.ncols()])
            })
            .collect();
        let views: Vec<(String, safetensors::tensor::TensorView<'_>)> = bytes
            .iter()
            .map(|(n, d, s)| {
                let view = safetensors::tensor::TensorView::new(safetensors::Dtype::F64, s.clone(), d)
                    .expect("tensor view");
                (n.clone(), view)
            })
            .collect();
        let mut meta = HashMap::new();
        meta.insert("format".to_string(), CHECKPOINT_FORMAT.to_string());
        meta.insert("config".to_string(), experiment.to_json());
        meta.insert("model".to_string(), serde_json::to_string(&self.config)?);
        let data = safetensors::serialize(views, &Some(meta))
            .map_err(|e| HalError::validation(format!("serializing checkpoint: {e}")))?;
        crate::ingest::write_atomic(path, &data)
    }

    pub fn load(path: &Path) -> Result<(Self, ExperimentConfig)> {
        let data = std::fs::read(path).map_err(|e| HalError::io(format!("reading {}", path.display()), e))?;
        let bad = |e: String| HalError::validation(format!("checkpoint {}: {e}", path.display()));
        let (_, header) = safetensors::SafeTensors::read_metadata(&data).map_err(|e| bad(e.to_string()))?;
        let meta = header.metadata().clone().ok_or_else(|| bad("missing metadata".into()))?;
        if meta.get("format").map(String::as_str) != Some(CHECKPOINT_FORMAT) {
            return Err(bad("unrecognized format".into()));
        }
        let model_cfg: ModelConfig =
            serde_json::from_str(meta.get("model").ok_or_else(|| bad("missing model".into()))?)?;
        let exp = ExperimentConfig::from_json_str(meta.get("config").ok_or_else(|| bad("missing config".into()))?)?;
        let tensors = safetensors::SafeTensors::deserialize(&data).map_err(|e| bad(e.to_string()))?;
        let mut model = HalModel::new(model_cfg, 0)?;
        for (name, value) in model.params.names.iter().zip(model.params.values.iter_mut()) {
            let view = tensors.tensor(name).map_err(|e| bad(format!("{name}: {e}")))?;
            if view.dtype() != safetensors::Dtype::F64 || view.shape() != [value.nrows(), value.ncols()] {
                return Err(bad(format!("{name}: unexpected dtype or shape")));
            }
            let raw = view.data();
            for (dst, chunk) in value.iter_mut().zip(raw.chunks_exact(8)) {
                *dst = f64::from_le_bytes(chunk.try_into().expect("8 bytes"));
            }
        }
        Ok((model, exp))
    }
}

pub const CHECKPOINT_FORMAT: &str = "hal-checkpoint-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriorKind {
    Visual,
    Action,
}

/// `Σ KL(N(μq, σq²) ‖ N(μp, σp²))` over all entries.
pub fn gaussian_kl(g: &mut Graph, mu_q: NodeId, ls_q: NodeId, mu_p: NodeId, ls_p: NodeId) -> NodeId {
    let dls = g.sub(ls_p, ls_q);
    let two_lq = g.scale(ls_q, 2.0);
    let var_q = g.exp(two_lq);
    let dmu = g.sub(mu_q, mu_p);
    let dmu2 = g.square(dmu);
    let num = g.add(var_q, dmu2);
    let neg_two_lp = g.scale(ls_p, -2.0);
    let inv_var_p = g.exp(neg_two_lp);
    let ratio = g.mul(num, inv_var_p);
    let half = g.scale(ratio, 0.5);
    let per = g.add(dls, half);
    let per = g.add_scalar(per, -0.5);
    g.sum_all(per)
}

/// Closed-form Gaussian KL for plain arrays.
pub fn gaussian_kl_values(mu_q: &Array1<f64>, ls_q: &Array1<f64>, mu_p: &Array1<f64>, ls_p: &Array1<f64>) -> f64 {
    (0..mu_q.len())
        .map(|i| {
            let vq = (2.0 * ls_q[i]).exp();
            let vp = (2.0 * ls_p[i]).exp();
            ls_p[i] - ls_q[i] + (vq + (mu_q[i] - mu_p[i]).powi(2)) / (2.0 * vp) - 0.5
        })
        .sum()
}

pub fn posteriors_from_logits(logits: &Array2<f64>) -> Result<PosteriorMatrix> {
    PosteriorMatrix::new(crate::tape::softmax_rows(logits))
}

/// Mean squared error between `v̂′` and a gradient-blocked copy of `v̂`.
pub fn aux_action_recon_on_graph(g: &mut Graph, v_hat: NodeId, v_prime: NodeId) -> NodeId {
    let target = g.detach(v_hat);
    let diff = g.sub(v_prime, target);
    let sq = g.square(diff);
    g.mean_all(sq)
}

pub fn aux_action_recon(v_hat: &Array2<f64>, v_prime: &Array2<f64>) -> Result<f64> {
    ensure!(v_hat.dim() == v_prime.dim(), "aux_action_recon: shape mismatch");
    Ok((v_prime - v_hat).mapv(|x| x * x).mean().unwrap_or(0.0))
}
