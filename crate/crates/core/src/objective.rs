//! Smoothness transition constraint, weak-supervision classifier loss and
//! the combined training objective.
//!
//! Per-step change is reduced to one scalar per time step (mean absolute
//! per-dimension difference of the row-normalized latents); the softmax
//! weights run over the `T − 1` time positions.

use std::io::Write;

use ndarray::{Array1, Array2};

use crate::config::{ExperimentConfig, Switches};
use crate::error::{ensure, Result};
use crate::net::ElboTerms;
use crate::tape::{Graph, NodeId};
use crate::types::PosteriorMatrix;

/// Added to a row norm when it falls below this value.
pub const NORM_EPS: f64 = 1e-8;

pub fn l2_normalize_rows(m: &Array2<f64>) -> Array2<f64> {
    let mut out = m.clone();
    for mut row in out.rows_mut() {
        let r = row.iter().map(|x| x * x).sum::<f64>().sqrt();
        let n = if r < NORM_EPS { r + NORM_EPS } else { r };
        row.mapv_inplace(|x| x / n);
    }
    out
}

/// Entry `t` is the mean over dimensions of `|m_{t+1} − m_t|`.
pub fn temporal_change_magnitudes(m: &Array2<f64>) -> Result<Array1<f64>> {
    ensure!(m.nrows() >= 2, "need at least two frames");
    let n = m.ncols() as f64;
    Ok(Array1::from_shape_fn(m.nrows() - 1, |t| {
        m.row(t + 1)
            .iter()
            .zip(m.row(t).iter())
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            / n
    }))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmoothnessReport {
    pub delta_v_bar: Array1<f64>,
    pub delta_c_bar: Array1<f64>,
    pub w_v: Array1<f64>,
    pub w_c: Array1<f64>,
    pub term_i: f64,
    pub term_ii: f64,
    pub total: f64,
}

impl SmoothnessReport {
    /// Weighted action change `Σ w_c ΔC̄`.
    pub fn weighted_action_change(&self) -> f64 {
        self.w_c.dot(&self.delta_c_bar)
    }

    pub fn weighted_visual_change(&self) -> f64 {
        self.w_v.dot(&self.delta_v_bar)
    }

    /// Columns `t,delta_v,delta_c,w_v,w_c`, one row per step.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "t,delta_v,delta_c,w_v,w_c")?;
        for t in 0..self.delta_v_bar.len() {
            writeln!(
                w,
                "{},{},{},{},{}",
                t, self.delta_v_bar[t], self.delta_c_bar[t], self.w_v[t], self.w_c[t]
            )?;
        }
        Ok(())
    }
}

/// Graph nodes of the smoothness constraint.
#[derive(Debug, Clone, Copy)]
pub struct SmoothnessNodes {
    pub delta_c: NodeId,
    pub delta_v: NodeId,
    pub w_c: NodeId,
    pub w_v: NodeId,
    pub term_i: NodeId,
    pub term_ii: NodeId,
    pub total: NodeId,
}

/// `(T−1) × 1` change magnitudes of the row-normalized latent `m`.
fn change_node(g: &mut Graph, m: NodeId) -> NodeId {
    let t = g.shape(m).0;
    let normed = g.l2_normalize_rows(m, NORM_EPS);
    let next = g.slice_rows(normed, 1, t);
    let prev = g.slice_rows(normed, 0, t - 1);
    let diff = g.sub(next, prev);
    let abs = g.abs(diff);
    g.mean_cols(abs)
}

/// Records the smoothness constraint on `g`; `c` is `T × n_c`, `v` is `T × n_v`.
pub fn smoothness_on_graph(g: &mut Graph, c: NodeId, v: NodeId, delta: f64) -> Result<SmoothnessNodes> {
    ensure!(g.shape(c).0 >= 2, "need at least two frames");
    ensure!(g.shape(c).0 == g.shape(v).0, "c and v have different lengths");
    let dc = change_node(g, c);
    let dv = change_node(g, v);
    let dc_row = g.transpose(dc);
    let dv_row = g.transpose(dv);
    let w_c = g.softmax_rows(dc_row);
    let w_v = g.softmax_rows(dv_row);
    let wc_dc = g.mul(w_c, dc_row);
    let sum_c = g.sum_all(wc_dc);
    let wv_dv = g.mul(w_v, dv_row);
    let sum_v = g.sum_all(wv_dv);
    let gap = g.sub(sum_c, sum_v);
    let term_i = g.relu(gap);
    let term_ii = g.scale(sum_c, delta);
    let total = g.add(term_i, term_ii);
    Ok(SmoothnessNodes {
        delta_c: dc_row,
        delta_v: dv_row,
        w_c,
        w_v,
        term_i,
        term_ii,
        total,
    })
}

fn report_from(g: &Graph, n: &SmoothnessNodes) -> SmoothnessReport {
    let row = |id: NodeId| g.value(id).row(0).to_owned();
    SmoothnessReport {
        delta_v_bar: row(n.delta_v),
        delta_c_bar: row(n.delta_c),
        w_v: row(n.w_v),
        w_c: row(n.w_c),
        term_i: g.scalar_value(n.term_i),
        term_ii: g.scalar_value(n.term_ii),
        total: g.scalar_value(n.total),
    }
}

pub fn smoothness_loss(c: &Array2<f64>, v: &Array2<f64>, delta: f64) -> Result<SmoothnessReport> {
    let mut g = Graph::new();
    let cn = g.constant(c.clone());
    let vn = g.constant(v.clone());
    let nodes = smoothness_on_graph(&mut g, cn, vn, delta)?;
    Ok(report_from(&g, &nodes))
}

/// The report plus `∂total/∂c` and `∂total/∂v`.
pub fn smoothness_loss_with_grad(
    c: &Array2<f64>,
    v: &Array2<f64>,
    delta: f64,
) -> Result<(SmoothnessReport, Array2<f64>, Array2<f64>)> {
    let mut g = Graph::new();
    let cn = g.param(c.clone());
    let vn = g.param(v.clone());
    let nodes = smoothness_on_graph(&mut g, cn, vn, delta)?;
    let grads = g.backward(nodes.total);
    Ok((
        report_from(&g, &nodes),
        grads.get_or_zeros(cn, c.dim()),
        grads.get_or_zeros(vn, v.dim()),
    ))
}

/// Mean negative log posterior of the pseudo label over masked frames;
/// zero when the mask is empty.
pub fn classifier_loss(posteriors: &PosteriorMatrix, pseudo_labels: &[usize], mask: &[bool]) -> Result<f64> {
    let p = posteriors.probs();
    ensure!(
        pseudo_labels.len() == p.nrows() && mask.len() == p.nrows(),
        "classifier_loss: {} frames, {} labels, {} mask entries",
        p.nrows(),
        pseudo_labels.len(),
        mask.len()
    );
    let mut sum = 0.0;
    let mut n = 0usize;
    for (t, (&y, &m)) in pseudo_labels.iter().zip(mask).enumerate() {
        if m {
            ensure!(y < p.ncols(), "pseudo label {y} out of range");
            sum -= p[[t, y]].max(1e-300).ln();
            n += 1;
        }
    }
    Ok(if n == 0 { 0.0 } else { sum / n as f64 })
}

/// Graph version of [`classifier_loss`] taking raw logits.
pub fn classifier_loss_on_graph(g: &mut Graph, logits: NodeId, pseudo_labels: &[usize], mask: &[bool]) -> Result<NodeId> {
    let (t, k) = g.shape(logits);
    ensure!(pseudo_labels.len() == t && mask.len() == t, "classifier_loss: shape mismatch");
    let count = mask.iter().filter(|m| **m).count();
    if count == 0 {
        return Ok(g.scalar(0.0));
    }
    let mut pick = Array2::zeros((t, k));
    for (row, (&y, &m)) in pseudo_labels.iter().zip(mask).enumerate() {
        if m {
            ensure!(y < k, "pseudo label {y} out of range");
            pick[[row, y]] = 1.0;
        }
    }
    let logp = g.log_softmax_rows(logits);
    let pick = g.constant(pick);
    let picked = g.mul(logp, pick);
    let s = g.sum_all(picked);
    Ok(g.scale(s, -1.0 / count as f64))
}

/// Weights and switches of the combined objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossWeights {
    pub alpha: f64,
    pub beta: f64,
    pub switches: Switches,
}

impl LossWeights {
    pub fn from_config(cfg: &ExperimentConfig) -> Self {
        Self {
            alpha: cfg.alpha,
            beta: cfg.beta,
            switches: cfg.switches(),
        }
    }
}

fn gate(on: bool) -> f64 {
    if on {
        1.0
    } else {
        0.0
    }
}

/// `L_y − α·ELBO + β·L_s` with the ablation switches applied:
/// `use_lr` gates the reconstruction, `use_lkl` both KLs, `use_ls` term (i)
/// and `use_delta` term (ii) of the smoothness constraint.
pub fn total_loss(terms: &ElboTerms, ls: &SmoothnessReport, ly: f64, w: &LossWeights) -> f64 {
    let s = w.switches;
    let neg_elbo = gate(s.use_lr) * terms.recon + gate(s.use_lkl) * (terms.kl_v + terms.kl_c);
    let smooth = gate(s.use_ls) * ls.term_i + gate(s.use_delta) * ls.term_ii;
    let mut total = ly;
    if w.alpha != 0.0 && (s.use_lr || s.use_lkl) {
        total += w.alpha * neg_elbo;
    }
    if w.beta != 0.0 && (s.use_ls || s.use_delta) {
        total += w.beta * smooth;
    }
    total
}

/// Graph version of [`total_loss`]. Inactive terms are left out of the
/// graph entirely, so with every switch off the result is `ly` itself.
pub struct TotalLossInputs {
    pub ly: NodeId,
    pub recon: NodeId,
    pub kl_v: NodeId,
    pub kl_c: NodeId,
    pub term_i: NodeId,
    pub term_ii: NodeId,
}

pub fn total_loss_on_graph(g: &mut Graph, x: &TotalLossInputs, w: &LossWeights) -> NodeId {
    let s = w.switches;
    let mut total = x.ly;
    if w.alpha != 0.0 {
        if s.use_lr {
            let t = g.scale(x.recon, w.alpha);
            total = g.add(total, t);
        }
        if s.use_lkl {
            let kl = g.add(x.kl_v, x.kl_c);
            let t = g.scale(kl, w.alpha);
            total = g.add(total, t);
        }
    }
    if w.beta != 0.0 {
        if s.use_ls {
            let t = g.scale(x.term_i, w.beta);
            total = g.add(total, t);
        }
        if s.use_delta {
            let t = g.scale(x.term_ii, w.beta);
            total = g.add(total, t);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn normalize_examples() {
        let m = array![[3.0, 4.0], [0.6, 0.8], [0.0, 0.0]];
        let n = l2_normalize_rows(&m);
        assert!((n[[0, 0]] - 0.6).abs() < 1e-15 && (n[[0, 1]] - 0.8).abs() < 1e-15);
        assert_eq!(n.row(1), m.row(1));
        assert_eq!(n.row(2), m.row(2));
    }

    #[test]
    fn change_magnitude_examples() {
        assert!(temporal_change_magnitudes(&array![[1.0, 2.0]]).is_err());
        let constant = Array2::from_elem((5, 3), 0.7);
        assert!(temporal_change_magnitudes(&constant).unwrap().iter().all(|&x| x == 0.0));
        let alt = array![[1.0], [-1.0], [1.0], [-1.0]];
        assert_eq!(temporal_change_magnitudes(&alt).unwrap().to_vec(), vec![2.0; 3]);

        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let m = Array2::from_shape_fn((9, 5), |_| rng.gen_range(-2.0..2.0));
        let got = temporal_change_magnitudes(&m).unwrap();
        for t in 0..8 {
            let mut acc = 0.0;
            for i in 0..5 {
                acc += (m[[t + 1, i]] - m[[t, i]]).abs();
            }
            assert!((got[t] - acc / 5.0).abs() <= 1e-12);
        }
    }

    /// Scalar evaluation of the constraint written out loop by loop.
    fn oracle(c: &[Vec<f64>], v: &[Vec<f64>], delta: f64) -> (f64, f64) {
        fn norm(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
            rows.iter()
                .map(|r| {
                    let n = r.iter().map(|x| x * x).sum::<f64>().sqrt();
                    r.iter().map(|x| x / n).collect()
                })
                .collect()
        }
        fn change(rows: &[Vec<f64>]) -> Vec<f64> {
            (1..rows.len())
                .map(|t| {
                    rows[t].iter().zip(&rows[t - 1]).map(|(a, b)| (a - b).abs()).sum::<f64>() / rows[t].len() as f64
                })
                .collect()
        }
        fn weighted(d: &[f64]) -> f64 {
            let z: f64 = d.iter().map(|x| x.exp()).sum();
            d.iter().map(|x| x.exp() / z * x).sum()
        }
        let sc = weighted(&change(&norm(c)));
        let sv = weighted(&change(&norm(v)));
        ((sc - sv).max(0.0), delta * sc)
    }

    #[test]
    fn hand_instance() {
        let c = array![[2.0], [2.0], [-5.0]];
        let v = array![[1.0], [-1.0], [1.0]];
        let r = smoothness_loss(&c, &v, 0.1).unwrap();
        assert_eq!(r.delta_c_bar.to_vec(), vec![0.0, 2.0]);
        assert_eq!(r.delta_v_bar.to_vec(), vec![2.0, 2.0]);
        let e2 = 2.0_f64.exp();
        let expect_sc = 2.0 * e2 / (1.0 + e2);
        assert!((r.weighted_action_change() - expect_sc).abs() < 1e-12);
        assert!((expect_sc - 1.7616).abs() < 1e-4);
        assert_eq!(r.term_i, 0.0);
        let (oi, oii) = oracle(&[vec![2.0], vec![2.0], vec![-5.0]], &[vec![1.0], vec![-1.0], vec![1.0]], 0.1);
        assert_eq!(oi, 0.0);
        assert!((r.total - (oi + oii)).abs() < 1e-6);
        assert!((r.total - 0.17616).abs() < 1e-5);
    }

    #[test]
    fn constant_c_gives_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = Array2::from_shape_fn((7, 3), |(_, j)| j as f64 + 1.0);
        let v = Array2::from_shape_fn((7, 4), |_| rng.gen_range(-1.0..1.0));
        let r = smoothness_loss(&c, &v, 0.3).unwrap();
        assert_eq!(r.total, 0.0);
        assert_eq!(r.term_i, 0.0);
        assert_eq!(r.term_ii, 0.0);
    }

    #[test]
    fn equal_changes_leave_only_term_ii() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let m = Array2::from_shape_fn((6, 3), |_| rng.gen_range(-1.0..1.0));
        let r = smoothness_loss(&m, &m, 0.25).unwrap();
        assert_eq!(r.term_i, 0.0);
        assert!((r.total - 0.25 * r.weighted_action_change()).abs() < 1e-15);
    }

    #[test]
    fn weights_sum_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = Array2::from_shape_fn((10, 2), |_| rng.gen_range(-1.0..1.0));
        let v = Array2::from_shape_fn((10, 4), |_| rng.gen_range(-1.0..1.0));
        let r = smoothness_loss(&c, &v, 0.1).unwrap();
        assert!((r.w_c.sum() - 1.0).abs() < 1e-12);
        assert!((r.w_v.sum() - 1.0).abs() < 1e-12);
        assert!(r.term_i >= 0.0 && r.term_ii >= 0.0);
        assert!((r.total - r.term_i - r.term_ii).abs() < 1e-15);
        let (oi, oii) = oracle(
            &c.rows().into_iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
            &v.rows().into_iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
            0.1,
        );
        assert!((r.term_i - oi).abs() < 1e-12 && (r.term_ii - oii).abs() < 1e-12);
    }

    #[test]
    fn single_frame_rejected() {
        assert!(smoothness_loss(&array![[1.0]], &array![[1.0]], 0.1).is_err());
    }

    #[test]
    fn row_rescaling_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let c = Array2::from_shape_fn((8, 4), |_| rng.gen_range(-1.0..1.0));
            let v = Array2::from_shape_fn((8, 6), |_| rng.gen_range(-1.0..1.0));
            let base = smoothness_loss(&c, &v, 0.1).unwrap().total;
            let row = rng.gen_range(0..8);
            let lambda = rng.gen_range(0.01..100.0);
            let mut c2 = c.clone();
            c2.row_mut(row).mapv_inplace(|x| x * lambda);
            let mut v2 = v.clone();
            v2.row_mut((row + 3) % 8).mapv_inplace(|x| x * lambda);
            let scaled = smoothness_loss(&c2, &v2, 0.1).unwrap().total;
            assert!((scaled - base).abs() <= 1e-9, "{scaled} vs {base}");
        }
    }

    #[test]
    fn relu_contract_on_adversarial_inputs() {
        // Action moves less than vision by construction: v is c plus jitter.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let c = Array2::from_shape_fn((8, 2), |(t, j)| if t < 4 { 1.0 + j as f64 } else { 2.0 - j as f64 });
            let v = Array2::from_shape_fn((8, 2), |_| rng.gen_range(-1.0..1.0));
            let r = smoothness_loss(&c, &v, 0.1).unwrap();
            if r.weighted_action_change() <= r.weighted_visual_change() {
                assert_eq!(r.term_i, 0.0);
            } else {
                assert!(r.term_i > 0.0);
            }
        }
    }

    #[test]
    fn classifier_loss_examples() {
        let onehot = PosteriorMatrix::new(array![[1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(classifier_loss(&onehot, &[0, 1], &[true, true]).unwrap(), 0.0);
        let uni = PosteriorMatrix::uniform(5, 4).unwrap();
        let l = classifier_loss(&uni, &[0, 1, 2, 3, 0], &[true; 5]).unwrap();
        assert!((l - 4.0_f64.ln()).abs() < 1e-12);
        assert!((l - 1.3863).abs() < 1e-4);
        assert_eq!(classifier_loss(&uni, &[0; 5], &[false; 5]).unwrap(), 0.0);

        let p = PosteriorMatrix::new(array![[0.7, 0.3], [0.2, 0.8], [0.5, 0.5], [0.9, 0.1]]).unwrap();
        let labels = [0, 0, 1, 1];
        let mask = [true, false, true, false];
        let mut sum = 0.0;
        let mut n = 0.0;
        for t in 0..4 {
            if mask[t] {
                sum += -p.probs()[[t, labels[t]]].ln();
                n += 1.0;
            }
        }
        assert!((classifier_loss(&p, &labels, &mask).unwrap() - sum / n).abs() < 1e-15);
    }

    #[test]
    fn classifier_graph_matches_plain() {
        let logits = array![[0.3, -1.0, 2.0], [1.5, 0.2, -0.4], [0.0, 0.0, 0.0]];
        let probs = crate::tape::softmax_rows(&logits);
        let labels = [2, 0, 1];
        let mask = [true, true, false];
        let plain = classifier_loss(&PosteriorMatrix::new(probs).unwrap(), &labels, &mask).unwrap();
        let mut g = Graph::new();
        let l = g.constant(logits);
        let node = classifier_loss_on_graph(&mut g, l, &labels, &mask).unwrap();
        assert!((g.scalar_value(node) - plain).abs() < 1e-12);
    }

    fn terms() -> (ElboTerms, SmoothnessReport) {
        let t = ElboTerms {
            recon: 0.8,
            kl_v: 0.3,
            kl_c: 0.2,
        };
        let mut r = smoothness_loss(&array![[1.0], [2.0], [-1.0]], &array![[1.0], [-1.0], [1.0]], 0.1).unwrap();
        r.term_i = 0.05;
        r.term_ii = 0.02;
        r.total = 0.07;
        (t, r)
    }

    #[test]
    fn total_loss_examples() {
        let (t, r) = terms();
        let off = LossWeights {
            alpha: 0.5,
            beta: 2.0,
            switches: Switches::ALL_OFF,
        };
        assert_eq!(total_loss(&t, &r, 1.25, &off), 1.25);
        let zero = LossWeights {
            alpha: 0.0,
            beta: 0.0,
            switches: Switches::ALL_ON,
        };
        assert_eq!(total_loss(&t, &r, 1.25, &zero), 1.25);
        let on = LossWeights {
            alpha: 1.0,
            beta: 1.0,
            switches: Switches::ALL_ON,
        };
        let hand = 1.25 + (0.8 + 0.3 + 0.2) + (0.05 + 0.02);
        assert!((total_loss(&t, &r, 1.25, &on) - hand).abs() < 1e-12);
    }

    #[test]
    fn full_grid_row_includes_every_term() {
        let (t, r) = terms();
        let w = |s| LossWeights {
            alpha: 1.0,
            beta: 1.0,
            switches: s,
        };
        let full = total_loss(&t, &r, 1.0, &w(Switches::ALL_ON));
        for row in 1..12 {
            let partial = total_loss(&t, &r, 1.0, &w(Switches::table_row(row).unwrap()));
            assert!(full > partial, "row {row}");
        }
        assert_eq!(total_loss(&t, &r, 1.0, &w(Switches::table_row(1).unwrap())), 1.0);
    }

    #[test]
    fn csv_dump() {
        let r = smoothness_loss(&array![[1.0], [2.0], [-1.0]], &array![[1.0], [-1.0], [1.0]], 0.1).unwrap();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with("t,delta_v,delta_c,w_v,w_c\n"));
    }
}
