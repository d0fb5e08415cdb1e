//! Measurements of how well learned latents recover the ground truth.
//!
//! - `block_ident_r2`: out-of-sample kernel ridge R² from an estimate to a
//!   true latent block.
//! - `smoothness_ratio`: total variation of normalized ĉ over that of v̂.
//! - `linear_probe_f1`: macro-F1 of a softmax-regression probe.
//! - `cluster_cohesion`: exact mean silhouette.
//! - `export_embedding`: 2-D PCA projection.

use std::io::Write;

use nalgebra::{DMatrix, DVector};
use ndarray::{Array1, Array2, Axis};
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{ensure, HalError, Result};
use crate::objective::{l2_normalize_rows, temporal_change_magnitudes};
use crate::seed::stream_rng;

pub const KRR_RIDGE: f64 = 1e-3;
pub const PROBE_L2: f64 = 1e-3;
pub const PROBE_GRAD_TOL: f64 = 1e-5;
pub const SILHOUETTE_MAX_SAMPLES: usize = 5000;
const TRAIN_FRACTION: f64 = 0.8;
const MIN_VARIANCE: f64 = 1e-12;

fn train_test_split(n: usize, seed: u64, tag: &str) -> (Vec<usize>, Vec<usize>) {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut stream_rng(seed, tag, 0));
    let n_train = ((n as f64) * TRAIN_FRACTION).round() as usize;
    let test = idx.split_off(n_train);
    (idx, test)
}

fn rows(m: &Array2<f64>, idx: &[usize]) -> Array2<f64> {
    m.select(Axis(0), idx)
}

/// Affine whitening fitted on `fit`: `(x − μ) Σ^{-1/2}` with tiny
/// eigenvalues dropped.
struct Whitener {
    mean: Array1<f64>,
    proj: Array2<f64>,
}

impl Whitener {
    fn fit(fit: &Array2<f64>) -> Self {
        let n = fit.nrows() as f64;
        let mean = fit.mean_axis(Axis(0)).expect("nonempty");
        let centered = fit - &mean;
        let cov = centered.t().dot(&centered) / n;
        let eig = crate::linalg::to_na(&cov).symmetric_eigen();
        let top = eig.eigenvalues.iter().cloned().fold(0.0_f64, f64::max);
        let keep: Vec<usize> = (0..eig.eigenvalues.len())
            .filter(|&i| eig.eigenvalues[i] > MIN_VARIANCE.max(top * 1e-10))
            .collect();
        let p = cov.nrows();
        let proj = Array2::from_shape_fn((p, keep.len()), |(r, c)| {
            let i = keep[c];
            eig.eigenvectors[(r, i)] / eig.eigenvalues[i].sqrt()
        });
        Self { mean, proj }
    }

    fn apply(&self, x: &Array2<f64>) -> Array2<f64> {
        (x - &self.mean).dot(&self.proj)
    }
}

fn sq_dists(a: &Array2<f64>, b: &Array2<f64>) -> DMatrix<f64> {
    DMatrix::from_fn(a.nrows(), b.nrows(), |i, j| {
        a.row(i)
            .iter()
            .zip(b.row(j).iter())
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
    })
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let n = v.len();
    if n == 0 {
        0.0
    } else if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// RBF kernel ridge regressor with median-heuristic bandwidth on whitened
/// inputs.
struct KernelRidge {
    whitener: Whitener,
    train: Array2<f64>,
    gamma: f64,
    alpha: DMatrix<f64>,
    y_mean: Array1<f64>,
}

impl KernelRidge {
    fn fit(x: &Array2<f64>, y: &Array2<f64>) -> Result<Self> {
        let whitener = Whitener::fit(x);
        let train = whitener.apply(x);
        let d2 = sq_dists(&train, &train);
        let n = train.nrows();
        let mut off = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                off.push(d2[(i, j)].sqrt());
            }
        }
        let bw = median(off);
        let bw = if bw > 0.0 { bw } else { 1.0 };
        let gamma = 1.0 / (2.0 * bw * bw);
        let mut k = d2.map(|v| (-gamma * v).exp());
        for i in 0..n {
            k[(i, i)] += KRR_RIDGE;
        }
        let y_mean = y.mean_axis(Axis(0)).expect("nonempty");
        let yc = y - &y_mean;
        let chol = k
            .cholesky()
            .ok_or_else(|| HalError::numerical("kernel matrix not positive definite"))?;
        let alpha = chol.solve(&crate::linalg::to_na(&yc));
        Ok(Self {
            whitener,
            train,
            gamma,
            alpha,
            y_mean,
        })
    }

    fn predict(&self, x: &Array2<f64>) -> Array2<f64> {
        let z = self.whitener.apply(x);
        let k = sq_dists(&z, &self.train).map(|v| (-self.gamma * v).exp());
        crate::linalg::from_na(&(k * &self.alpha)) + &self.y_mean
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct R2Report {
    /// Mean over scored target dimensions, clipped below at −1.
    pub mean: f64,
    pub per_dim: Vec<f64>,
    /// Target dimensions skipped for having zero variance.
    pub skipped: Vec<usize>,
}

pub fn block_ident_r2(source: &Array2<f64>, target: &Array2<f64>, seed: u64) -> Result<f64> {
    Ok(block_ident_r2_detailed(source, target, seed)?.mean)
}

pub fn block_ident_r2_detailed(source: &Array2<f64>, target: &Array2<f64>, seed: u64) -> Result<R2Report> {
    let n = source.nrows();
    ensure!(n == target.nrows(), "source and target row counts differ");
    ensure!(n >= 50, "block_ident_r2 needs at least 50 samples, got {n}");
    let (tr, te) = train_test_split(n, seed, "ident/r2");
    let (xs, xt) = (rows(source, &tr), rows(source, &te));
    let (ys, yt) = (rows(target, &tr), rows(target, &te));
    let mut keep = Vec::new();
    let mut skipped = Vec::new();
    for j in 0..target.ncols() {
        let var = target.column(j).var(0.0);
        if var > MIN_VARIANCE {
            keep.push(j);
        } else {
            skipped.push(j);
        }
    }
    ensure!(!keep.is_empty(), "every target dimension has zero variance");
    let ys = ys.select(Axis(1), &keep);
    let yt = yt.select(Axis(1), &keep);
    let model = KernelRidge::fit(&xs, &ys)?;
    let pred = model.predict(&xt);
    let per_dim: Vec<f64> = (0..keep.len())
        .map(|j| {
            let truth = yt.column(j);
            let mu = truth.mean().unwrap_or(0.0);
            let sst: f64 = truth.iter().map(|y| (y - mu).powi(2)).sum();
            let sse: f64 = truth.iter().zip(pred.column(j)).map(|(y, p)| (y - p).powi(2)).sum();
            if sst <= 0.0 {
                if sse <= 0.0 {
                    1.0
                } else {
                    -1.0
                }
            } else {
                (1.0 - sse / sst).max(-1.0)
            }
        })
        .collect();
    let mean = per_dim.iter().sum::<f64>() / per_dim.len() as f64;
    Ok(R2Report { mean, per_dim, skipped })
}

/// Residuals of `v` after removing what a cross-fitted kernel ridge
/// regression on `c` explains.
pub fn residualize(v: &Array2<f64>, c: &Array2<f64>, seed: u64) -> Result<Array2<f64>> {
    let n = v.nrows();
    ensure!(n == c.nrows(), "residualize: row counts differ");
    ensure!(n >= 4, "residualize needs at least 4 samples");
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut stream_rng(seed, "ident/residual", 0));
    let (a, b) = idx.split_at(n / 2);
    let mut out = Array2::zeros(v.dim());
    for (fit, apply) in [(a, b), (b, a)] {
        let model = KernelRidge::fit(&rows(c, fit), &rows(v, fit))?;
        let pred = model.predict(&rows(c, apply));
        for (r, &i) in apply.iter().enumerate() {
            let res = &v.row(i) - &pred.row(r);
            out.row_mut(i).assign(&res);
        }
    }
    Ok(out)
}

pub fn total_variation(m: &Array2<f64>) -> Result<f64> {
    Ok(temporal_change_magnitudes(&l2_normalize_rows(m))?.sum())
}

/// `TV(ĉ) / TV(v̂)` after row normalization; `+∞` when `v̂` does not move.
pub fn smoothness_ratio(chat: &Array2<f64>, vhat: &Array2<f64>) -> Result<f64> {
    ensure!(chat.nrows() == vhat.nrows(), "ĉ and v̂ lengths differ");
    let num = total_variation(chat)?;
    let den = total_variation(vhat)?;
    Ok(ratio_or_inf(num, den))
}

fn ratio_or_inf(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        log::warn!("smoothness ratio: v̂ has zero total variation");
        f64::INFINITY
    } else {
        num / den
    }
}

/// Pooled ratio over several sequences: summed TVs, then divided.
pub fn pooled_smoothness_ratio(chats: &[Array2<f64>], vhats: &[Array2<f64>]) -> Result<f64> {
    ensure!(chats.len() == vhats.len(), "sequence counts differ");
    let mut num = 0.0;
    let mut den = 0.0;
    for (c, v) in chats.iter().zip(vhats) {
        ensure!(c.nrows() == v.nrows(), "ĉ and v̂ lengths differ");
        num += total_variation(c)?;
        den += total_variation(v)?;
    }
    Ok(ratio_or_inf(num, den))
}

fn remap_labels(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut classes: Vec<usize> = labels.to_vec();
    classes.sort_unstable();
    classes.dedup();
    let mapped = labels
        .iter()
        .map(|u| classes.binary_search(u).expect("present"))
        .collect();
    (mapped, classes.len())
}

/// Softmax regression fitted by damped Newton iterations.
struct SoftmaxProbe {
    weights: DMatrix<f64>,
    mean: Array1<f64>,
    scale: Array1<f64>,
    classes: usize,
}

impl SoftmaxProbe {
    fn design(&self, x: &Array2<f64>) -> DMatrix<f64> {
        let p = x.ncols();
        DMatrix::from_fn(x.nrows(), p + 1, |i, j| {
            if j == p {
                1.0
            } else {
                (x[[i, j]] - self.mean[j]) / self.scale[j]
            }
        })
    }

    fn probs(z: &DMatrix<f64>, w: &DMatrix<f64>) -> DMatrix<f64> {
        let mut logits = z * w;
        for mut row in logits.row_iter_mut() {
            let mx = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let mut s = 0.0;
            for v in row.iter_mut() {
                *v = (*v - mx).exp();
                s += *v;
            }
            for v in row.iter_mut() {
                *v /= s;
            }
        }
        logits
    }

    fn objective(z: &DMatrix<f64>, y: &[usize], w: &DMatrix<f64>) -> f64 {
        let p = Self::probs(z, w);
        let n = y.len() as f64;
        let nll: f64 = y.iter().enumerate().map(|(i, &u)| -p[(i, u)].max(1e-300).ln()).sum::<f64>() / n;
        nll + 0.5 * PROBE_L2 * w.iter().map(|v| v * v).sum::<f64>()
    }

    fn fit(x: &Array2<f64>, y: &[usize], classes: usize) -> Result<Self> {
        let n = x.nrows();
        let mean = x.mean_axis(Axis(0)).expect("nonempty");
        let scale = x.std_axis(Axis(0), 0.0).mapv(|s| if s > 1e-12 { s } else { 1.0 });
        let mut probe = Self {
            weights: DMatrix::zeros(x.ncols() + 1, classes),
            mean,
            scale,
            classes,
        };
        let z = probe.design(x);
        let q = z.ncols();
        let k = classes;
        let nf = n as f64;
        let mut w = DMatrix::<f64>::zeros(q, k);
        let mut obj = Self::objective(&z, y, &w);
        for _ in 0..200 {
            let p = Self::probs(&z, &w);
            let mut resid = p.clone();
            for (i, &u) in y.iter().enumerate() {
                resid[(i, u)] -= 1.0;
            }
            let grad = (z.transpose() * &resid) / nf + &w * PROBE_L2;
            if grad.norm() < PROBE_GRAD_TOL {
                break;
            }
            // Hessian over vec(W) with index j*q + a for class j, feature a.
            let dim = q * k;
            let mut h = DMatrix::<f64>::zeros(dim, dim);
            for i in 0..n {
                let zi = z.row(i);
                for j in 0..k {
                    for l in j..k {
                        let c = if j == l { p[(i, j)] * (1.0 - p[(i, j)]) } else { -p[(i, j)] * p[(i, l)] };
                        if c == 0.0 {
                            continue;
                        }
                        for a in 0..q {
                            let za = zi[a] * c;
                            for b in 0..q {
                                h[(j * q + a, l * q + b)] += za * zi[b];
                            }
                        }
                    }
                }
            }
            for j in 0..k {
                for l in j + 1..k {
                    for a in 0..q {
                        for b in 0..q {
                            h[(l * q + b, j * q + a)] = h[(j * q + a, l * q + b)];
                        }
                    }
                }
            }
            h /= nf;
            for d in 0..dim {
                h[(d, d)] += PROBE_L2;
            }
            let g = DVector::from_fn(dim, |idx, _| grad[(idx % q, idx / q)]);
            let step = h
                .cholesky()
                .ok_or_else(|| HalError::numerical("probe Hessian not positive definite"))?
                .solve(&g);
            let step = DMatrix::from_fn(q, k, |a, j| step[j * q + a]);
            let mut t = 1.0;
            let slope = -grad.dot(&step);
            loop {
                let cand = &w - &step * t;
                let cand_obj = Self::objective(&z, y, &cand);
                if cand_obj <= obj + 1e-4 * t * slope || t < 1e-10 {
                    w = cand;
                    obj = cand_obj;
                    break;
                }
                t *= 0.5;
            }
        }
        probe.weights = w;
        Ok(probe)
    }

    fn predict(&self, x: &Array2<f64>) -> Vec<usize> {
        let p = Self::probs(&self.design(x), &self.weights);
        (0..x.nrows())
            .map(|i| {
                let mut best = 0;
                for j in 1..self.classes {
                    if p[(i, j)] > p[(i, best)] {
                        best = j;
                    }
                }
                best
            })
            .collect()
    }
}

/// Macro-F1 over the classes present in either `truth` or `pred`.
pub fn macro_f1(truth: &[usize], pred: &[usize]) -> f64 {
    let mut classes: Vec<usize> = truth.iter().chain(pred).copied().collect();
    classes.sort_unstable();
    classes.dedup();
    let f1s: Vec<f64> = classes
        .iter()
        .map(|&c| {
            let tp = truth.iter().zip(pred).filter(|(t, p)| **t == c && **p == c).count() as f64;
            let fp = truth.iter().zip(pred).filter(|(t, p)| **t != c && **p == c).count() as f64;
            let fn_ = truth.iter().zip(pred).filter(|(t, p)| **t == c && **p != c).count() as f64;
            if tp == 0.0 {
                0.0
            } else {
                2.0 * tp / (2.0 * tp + fp + fn_)
            }
        })
        .collect();
    if f1s.is_empty() {
        0.0
    } else {
        f1s.iter().sum::<f64>() / f1s.len() as f64
    }
}

/// Rows sorted by `(label, feature bit patterns)` so the result does not
/// depend on input order.
fn canonical_order(latents: &Array2<f64>, labels: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..labels.len()).collect();
    idx.sort_by(|&a, &b| {
        labels[a].cmp(&labels[b]).then_with(|| {
            let ra = latents.row(a);
            let rb = latents.row(b);
            ra.iter()
                .zip(rb.iter())
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    idx
}

pub fn linear_probe_f1(latents: &Array2<f64>, labels: &[usize], seed: u64) -> Result<f64> {
    ensure!(latents.nrows() == labels.len(), "latents and labels differ in length");
    let (mapped, k) = remap_labels(labels);
    ensure!(k >= 2, "linear probe needs at least two classes");
    let order = canonical_order(latents, &mapped);
    let x = rows(latents, &order);
    let y: Vec<usize> = order.iter().map(|&i| mapped[i]).collect();
    let (tr, te) = train_test_split(y.len(), seed, "ident/probe");
    ensure!(!tr.is_empty() && !te.is_empty(), "linear probe needs at least two samples");
    let ytr: Vec<usize> = tr.iter().map(|&i| y[i]).collect();
    let yte: Vec<usize> = te.iter().map(|&i| y[i]).collect();
    let probe = SoftmaxProbe::fit(&rows(&x, &tr), &ytr, k)?;
    Ok(macro_f1(&yte, &probe.predict(&rows(&x, &te))))
}

/// Fits a probe on all samples and returns predictions for `apply`.
pub fn probe_predict(train: &Array2<f64>, labels: &[usize], apply: &Array2<f64>) -> Result<Vec<usize>> {
    ensure!(train.nrows() == labels.len(), "latents and labels differ in length");
    let mut classes: Vec<usize> = labels.to_vec();
    classes.sort_unstable();
    classes.dedup();
    ensure!(classes.len() >= 2, "linear probe needs at least two classes");
    let (mapped, k) = remap_labels(labels);
    let probe = SoftmaxProbe::fit(train, &mapped, k)?;
    Ok(probe.predict(apply).into_iter().map(|j| classes[j]).collect())
}

/// Mean silhouette coefficient with Euclidean distance.
pub fn cluster_cohesion(latents: &Array2<f64>, labels: &[usize], seed: u64) -> Result<f64> {
    ensure!(latents.nrows() == labels.len(), "latents and labels differ in length");
    let (x, y) = if labels.len() > SILHOUETTE_MAX_SAMPLES {
        let mut idx: Vec<usize> = (0..labels.len()).collect();
        idx.shuffle(&mut stream_rng(seed, "ident/silhouette", 0));
        idx.truncate(SILHOUETTE_MAX_SAMPLES);
        idx.sort_unstable();
        (rows(latents, &idx), idx.iter().map(|&i| labels[i]).collect::<Vec<_>>())
    } else {
        (latents.clone(), labels.to_vec())
    };
    let (y, k) = remap_labels(&y);
    ensure!(k >= 2, "silhouette needs at least two classes");
    let mut sizes = vec![0usize; k];
    for &u in &y {
        sizes[u] += 1;
    }
    ensure!(sizes.iter().all(|&s| s >= 2), "silhouette needs at least two samples per class");
    let n = y.len();
    let mut total = 0.0;
    let mut sums = vec![0.0; k];
    for i in 0..n {
        sums.iter_mut().for_each(|s| *s = 0.0);
        let xi = x.row(i);
        for j in 0..n {
            if i != j {
                let d = xi
                    .iter()
                    .zip(x.row(j).iter())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                sums[y[j]] += d;
            }
        }
        let a = sums[y[i]] / (sizes[y[i]] - 1) as f64;
        let b = (0..k)
            .filter(|&c| c != y[i])
            .map(|c| sums[c] / sizes[c] as f64)
            .fold(f64::INFINITY, f64::min);
        let m = a.max(b);
        total += if m > 0.0 { (b - a) / m } else { 0.0 };
    }
    Ok(total / n as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EmbeddingMethod {
    Pca,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub coords: Array2<f64>,
    pub labels: Vec<usize>,
}

impl Embedding {
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "x,y,label")?;
        for (row, label) in self.coords.rows().into_iter().zip(&self.labels) {
            writeln!(w, "{},{},{}", row[0], row[1], label)?;
        }
        Ok(())
    }
}

/// Projection on the top two principal components. Each component's
/// largest-magnitude loading is made positive; components with negligible
/// variance are returned as zeros.
pub fn export_embedding(latents: &Array2<f64>, labels: &[usize], method: EmbeddingMethod) -> Result<Embedding> {
    let EmbeddingMethod::Pca = method;
    ensure!(latents.ncols() >= 2, "embedding needs at least two latent dimensions");
    ensure!(latents.nrows() == labels.len(), "latents and labels differ in length");
    ensure!(latents.nrows() >= 1, "embedding needs at least one sample");
    let mean = latents.mean_axis(Axis(0)).expect("nonempty");
    let centered = latents - &mean;
    let cov = centered.t().dot(&centered) / latents.nrows() as f64;
    let eig = crate::linalg::to_na(&cov).symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]).then(a.cmp(&b)));
    let top = eig.eigenvalues[order[0]].max(0.0);
    let p = latents.ncols();
    let mut comps = Array2::zeros((p, 2));
    for (c, &i) in order.iter().take(2).enumerate() {
        if eig.eigenvalues[i] <= 1e-12 * top.max(1e-300) {
            continue;
        }
        let col: Vec<f64> = (0..p).map(|r| eig.eigenvectors[(r, i)]).collect();
        let pivot = col
            .iter()
            .cloned()
            .fold(0.0_f64, |acc, v| if v.abs() > acc.abs() { v } else { acc });
        let sign = if pivot < 0.0 { -1.0 } else { 1.0 };
        for r in 0..p {
            comps[[r, c]] = sign * col[r];
        }
    }
    Ok(Embedding {
        coords: centered.dot(&comps),
        labels: labels.to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentReport {
    pub r2_c_from_chat: f64,
    pub r2_c_from_vhat: f64,
    pub r2_v_from_vhat: f64,
    pub r2_c_from_residual: f64,
    pub tv_ratio: f64,
    pub probe_f1_chat: f64,
    pub probe_f1_vhat: f64,
    pub probe_f1_raw: f64,
    pub silhouette_chat: f64,
    pub silhouette_vhat: f64,
    pub samples: usize,
}

impl IdentReport {
    pub const FIELDS: [&'static str; 11] = [
        "r2_c_from_chat",
        "r2_c_from_vhat",
        "r2_v_from_vhat",
        "r2_c_from_residual",
        "tv_ratio",
        "probe_f1_chat",
        "probe_f1_vhat",
        "probe_f1_raw",
        "silhouette_chat",
        "silhouette_vhat",
        "samples",
    ];

    pub fn values(&self) -> [f64; 11] {
        [
            self.r2_c_from_chat,
            self.r2_c_from_vhat,
            self.r2_v_from_vhat,
            self.r2_c_from_residual,
            self.tv_ratio,
            self.probe_f1_chat,
            self.probe_f1_vhat,
            self.probe_f1_raw,
            self.silhouette_chat,
            self.silhouette_vhat,
            self.samples as f64,
        ]
    }

    /// Header row and one value row.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{}", Self::FIELDS.join(","))?;
        let vals: Vec<String> = self.values().iter().map(|v| format!("{v:.6}")).collect();
        writeln!(w, "{}", vals.join(","))
    }
}

/// Per-sequence arrays fed to [`ident_report`].
#[derive(Debug, Clone)]
pub struct IdentSequence {
    pub chat: Array2<f64>,
    pub vhat: Array2<f64>,
    pub c_true: Array2<f64>,
    pub v_true: Array2<f64>,
    pub raw: Array2<f64>,
    pub labels: Vec<usize>,
}

fn stack(parts: Vec<ndarray::ArrayView2<'_, f64>>) -> Array2<f64> {
    ndarray::concatenate(Axis(0), &parts).expect("equal widths")
}

/// Pools frames across sequences, subsamples to at most `max_samples`
/// frames and runs every measurement.
pub fn ident_report(seqs: &[IdentSequence], max_samples: usize, seed: u64) -> Result<IdentReport> {
    ensure!(!seqs.is_empty(), "identifiability needs at least one sequence");
    let total: usize = seqs.iter().map(|s| s.chat.nrows()).sum();
    let mut idx: Vec<usize> = (0..total).collect();
    if total > max_samples {
        idx.shuffle(&mut stream_rng(seed, "ident/subsample", 0));
        idx.truncate(max_samples);
        idx.sort_unstable();
    }
    let pick = |f: &dyn Fn(&IdentSequence) -> &Array2<f64>| {
        let all = stack(seqs.iter().map(|s| f(s).view()).collect());
        rows(&all, &idx)
    };
    let chat = pick(&|s| &s.chat);
    let vhat = pick(&|s| &s.vhat);
    let c_true = pick(&|s| &s.c_true);
    let v_true = pick(&|s| &s.v_true);
    let raw = pick(&|s| &s.raw);
    let all_labels: Vec<usize> = seqs.iter().flat_map(|s| s.labels.iter().copied()).collect();
    let labels: Vec<usize> = idx.iter().map(|&i| all_labels[i]).collect();

    let residual = residualize(&vhat, &chat, seed)?;
    let chats: Vec<Array2<f64>> = seqs.iter().map(|s| s.chat.clone()).collect();
    let vhats: Vec<Array2<f64>> = seqs.iter().map(|s| s.vhat.clone()).collect();
    Ok(IdentReport {
        r2_c_from_chat: block_ident_r2(&chat, &c_true, seed)?,
        r2_c_from_vhat: block_ident_r2(&vhat, &c_true, seed)?,
        r2_v_from_vhat: block_ident_r2(&vhat, &v_true, seed)?,
        r2_c_from_residual: block_ident_r2(&residual, &c_true, seed)?,
        tv_ratio: pooled_smoothness_ratio(&chats, &vhats)?,
        probe_f1_chat: linear_probe_f1(&chat, &labels, seed)?,
        probe_f1_vhat: linear_probe_f1(&vhat, &labels, seed)?,
        probe_f1_raw: linear_probe_f1(&raw, &labels, seed)?,
        silhouette_chat: cluster_cohesion(&chat, &labels, seed)?,
        silhouette_vhat: cluster_cohesion(&vhat, &labels, seed)?,
        samples: idx.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::gaussian;
    use ndarray::array;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn r2_identity_noise_tanh() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let target = gaussian(&mut rng, 600, 2);
        assert!(block_ident_r2(&target, &target, 3).unwrap() >= 0.999);
        let noise = gaussian(&mut rng, 600, 2);
        assert!(block_ident_r2(&noise, &target, 3).unwrap() <= 0.1);
        let squashed = target.mapv(f64::tanh);
        assert!(block_ident_r2(&squashed, &target, 3).unwrap() >= 0.95);
    }

    #[test]
    fn r2_skips_constant_dims() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut target = gaussian(&mut rng, 100, 2);
        target.column_mut(1).fill(3.0);
        let r = block_ident_r2_detailed(&target, &target, 0).unwrap();
        assert_eq!(r.skipped, vec![1]);
        assert_eq!(r.per_dim.len(), 1);
        assert!(block_ident_r2(&target.slice(ndarray::s![..40, ..]).to_owned(), &target.slice(ndarray::s![..40, ..]).to_owned(), 0).is_err());
    }

    #[test]
    fn r2_affine_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let target = gaussian(&mut rng, 400, 2);
        let source = target.mapv(|v| v.tanh() + 0.1 * v);
        let base = block_ident_r2(&source, &target, 9).unwrap();
        let a = array![[2.0, 0.5], [-0.3, 1.0]];
        let moved = source.dot(&a) + 3.0;
        let after = block_ident_r2(&moved, &target, 9).unwrap();
        assert!((base - after).abs() <= 0.02, "{base} vs {after}");
    }

    #[test]
    fn ratio_examples() {
        let v = array![[1.0, 0.0], [0.0, 1.0], [1.0, 0.0], [0.0, 1.0]];
        let c = array![[1.0], [1.0], [1.0], [1.0]];
        assert_eq!(smoothness_ratio(&c, &v).unwrap(), 0.0);
        assert_eq!(smoothness_ratio(&v, &v).unwrap(), 1.0);
        assert_eq!(smoothness_ratio(&v, &c).unwrap(), f64::INFINITY);
        assert!(smoothness_ratio(&c, &v.slice(ndarray::s![..3, ..]).to_owned()).is_err());
    }

    #[test]
    fn probe_examples() {
        let labels: Vec<usize> = (0..300).map(|i| i % 3).collect();
        let onehot = Array2::from_shape_fn((300, 3), |(i, j)| if labels[i] == j { 1.0 } else { 0.0 });
        assert_eq!(linear_probe_f1(&onehot, &labels, 5).unwrap(), 1.0);
        assert!(linear_probe_f1(&onehot, &vec![1; 300], 5).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let noise = gaussian(&mut rng, 2000, 3);
        let balanced: Vec<usize> = (0..2000).map(|i| i % 2).collect();
        assert!(linear_probe_f1(&noise, &balanced, 5).unwrap() <= 0.6);
    }

    #[test]
    fn probe_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 200;
        let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let x = Array2::from_shape_fn((n, 2), |(i, j)| labels[i] as f64 * (j as f64 + 0.5) + rng.gen_range(-1.0..1.0));
        let a = linear_probe_f1(&x, &labels, 3).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let xp = rows(&x, &perm);
        let lp: Vec<usize> = perm.iter().map(|&i| labels[i]).collect();
        assert_eq!(a, linear_probe_f1(&xp, &lp, 3).unwrap());
    }

    #[test]
    fn f1_hand_values() {
        assert_eq!(macro_f1(&[0, 0, 1, 1], &[0, 0, 1, 1]), 1.0);
        // class 0: tp 1, fp 0, fn 1 -> 2/3; class 1: tp 2, fp 1 -> 0.8
        assert!((macro_f1(&[0, 0, 1, 1], &[0, 1, 1, 1]) - (2.0 / 3.0 + 0.8) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn silhouette_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let n = 400;
        let labels: Vec<usize> = (0..n).map(|i| i % 2).collect();
        let x = Array2::from_shape_fn((n, 2), |(i, j)| {
            let shift = if labels[i] == 1 && j == 0 { 10.0 } else { 0.0 };
            shift + rng.sample::<f64, _>(rand_distr::StandardNormal)
        });
        assert!(cluster_cohesion(&x, &labels, 0).unwrap() > 0.8);

        let noise = gaussian(&mut rng, 1000, 2);
        let shuffled: Vec<usize> = (0..1000).map(|_| rng.gen_range(0..2)).collect();
        assert!(cluster_cohesion(&noise, &shuffled, 0).unwrap().abs() <= 0.1);

        let pts = array![[0.0, 0.0], [0.0, 0.0], [5.0, 5.0], [5.0, 5.0]];
        assert_eq!(cluster_cohesion(&pts, &[0, 0, 1, 1], 0).unwrap(), 1.0);
        assert!(cluster_cohesion(&pts, &[0, 0, 0, 1], 0).is_err());
        assert!(cluster_cohesion(&pts, &[0, 0, 0, 0], 0).is_err());
    }

    #[test]
    fn silhouette_hand_value() {
        // Points 0, 1 in class 0 and 3 in class 1 along a line.
        let pts = array![[0.0], [1.0], [3.0], [4.0]];
        let s = cluster_cohesion(&pts, &[0, 0, 1, 1], 0).unwrap();
        let oracle = [
            (3.5 - 1.0) / 3.5,
            (2.5 - 1.0) / 2.5,
            (2.5 - 1.0) / 2.5,
            (3.5 - 1.0) / 3.5,
        ];
        assert!((s - oracle.iter().sum::<f64>() / 4.0).abs() < 1e-12);
    }

    #[test]
    fn embedding_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = gaussian(&mut rng, 50, 2);
        let e = export_embedding(&x, &vec![0; 50], EmbeddingMethod::Pca).unwrap();
        for i in 0..50 {
            for j in 0..50 {
                let d0 = (&x.row(i) - &x.row(j)).mapv(|v| v * v).sum().sqrt();
                let d1 = (&e.coords.row(i) - &e.coords.row(j)).mapv(|v| v * v).sum().sqrt();
                assert!((d0 - d1).abs() < 1e-9);
            }
        }
        let var = e.coords.var_axis(Axis(0), 0.0);
        assert!(var[0] >= var[1]);

        let t = Array1::from_shape_fn(30, |i| i as f64);
        let rank1 = Array2::from_shape_fn((30, 3), |(i, j)| t[i] * (j as f64 + 1.0));
        let e = export_embedding(&rank1, &vec![1; 30], EmbeddingMethod::Pca).unwrap();
        assert!(e.coords.column(1).iter().all(|&v| v == 0.0));
        assert!(export_embedding(&Array2::zeros((3, 1)), &[0, 0, 0], EmbeddingMethod::Pca).is_err());

        let mut buf = Vec::new();
        e.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 31);
    }

    #[test]
    fn ground_truth_ratio_below_one() {
        let spec = crate::config::ExperimentConfig::default().generator_spec();
        let data = crate::synthgen::generate_dataset(&spec, 3, &[1, 2, 3, 4], "test").unwrap();
        for s in &data {
            let r = smoothness_ratio(&s.latents.action, &s.latents.visual).unwrap();
            assert!(r < 1.0, "{r}");
        }
    }
}
