//! Synthetic sequences from the hierarchical generative process.
//!
//! Action latents `c` are piecewise constant: they only change at block
//! boundaries, where `c_new = f_c(c_old) + ε_c`. Visual latents follow
//! `v_t = f_v(v_{t-1}, c_t) + ε_v` and observations are `x_t = g(v_t)`
//! through an injective mixing function. The mechanisms `f_c`, `f_v` and
//! `g` are drawn once from the generator seed and shared by every sequence.
//!
//! `f_c` rotates `c` by `2π / action_cycle` inside a random basis (plus a
//! small smooth perturbation), so the phase of `c` records how many jumps
//! have happened modulo the cycle. Classes are assigned round-robin with the
//! same period, which ties each class to a region of action-latent space.

use ndarray::{s, Array1, Array2};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{ensure, HalError, Result};
use crate::linalg::{gaussian, orthonormal_columns, with_spectral_norm};
use crate::seed::{derive_seed, stream_rng};
use crate::types::{labels_to_segments, FeatureSequence, LatentPair, Transcript};

/// Spectral norm of each linear sublayer of `f_v`; keeps the visual
/// dynamics a contraction.
const VISUAL_SPECTRAL_NORM: f64 = 0.85;
/// Weight of the smooth perturbation inside `f_c`.
const ACTION_PERTURBATION: f64 = 0.05;
/// Scale of the action input to `f_v`.
const ACTION_INFLUENCE: f64 = 1.5;

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub frames: usize,
    pub n_c: usize,
    pub n_v: usize,
    pub d: usize,
    /// Number of regime blocks `K`.
    pub segments: usize,
    pub min_segment_len: usize,
    pub noise_scale_v: f64,
    pub noise_scale_c: f64,
    pub mixing_depth: usize,
    pub action_cycle: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        ensure!(self.frames >= 1, "T must be positive");
        ensure!(self.n_c >= 1 && self.n_v >= 1 && self.d >= 1, "dimensions must be positive");
        ensure!(self.segments >= 1, "K must be at least 1");
        ensure!(self.min_segment_len >= 1, "min_segment_len must be positive");
        ensure!(
            self.segments * self.min_segment_len <= self.frames,
            "K·min_segment_len = {} exceeds T = {}",
            self.segments * self.min_segment_len,
            self.frames
        );
        ensure!(self.n_v <= self.d, "n_v = {} exceeds d = {}; mixing must be injective", self.n_v, self.d);
        ensure!(
            self.n_v >= 2 * self.n_c,
            "n_v = {} must be at least 2·n_c = {}",
            self.n_v,
            2 * self.n_c
        );
        ensure!(
            self.noise_scale_v >= 0.0 && self.noise_scale_c >= 0.0,
            "noise scales must be nonnegative"
        );
        ensure!(self.mixing_depth >= 1, "mixing_depth must be at least 1");
        ensure!(self.action_cycle >= 1, "action_cycle must be at least 1");
        Ok(())
    }
}

/// Invertible piecewise-linear activation: identity for `x ≥ 0`, slope
/// `a_i ∈ [0.1, 1]` for `x < 0`.
#[derive(Debug, Clone, PartialEq)]
struct LeakyLayer {
    linear: Array2<f64>,
    negative_slopes: Array1<f64>,
}

/// Injective map `R^{n_v} → R^d` with a closed-form left inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingFunction {
    input_width: usize,
    output_width: usize,
    layers: Vec<LeakyLayer>,
}

impl MixingFunction {
    pub fn random(rng: &mut ChaCha8Rng, n_v: usize, d: usize, depth: usize) -> Result<Self> {
        ensure!(n_v <= d, "mixing needs n_v ≤ d");
        let mut layers = Vec::with_capacity(depth);
        let mut width = n_v;
        for _ in 0..depth {
            let linear = orthonormal_columns(rng, d, width);
            let negative_slopes = Array1::from_shape_fn(d, |_| rng.gen_range(0.1..=1.0));
            layers.push(LeakyLayer {
                linear,
                negative_slopes,
            });
            width = d;
        }
        Ok(Self {
            input_width: n_v,
            output_width: d,
            layers,
        })
    }

    /// Depth-0 mixing: pads with zeros. Only meant for tests.
    pub fn identity(n_v: usize, d: usize) -> Self {
        assert!(n_v <= d);
        Self {
            input_width: n_v,
            output_width: d,
            layers: Vec::new(),
        }
    }

    pub fn input_width(&self) -> usize {
        self.input_width
    }

    pub fn output_width(&self) -> usize {
        self.output_width
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    fn apply(&self, visual: &Array2<f64>) -> Array2<f64> {
        if self.layers.is_empty() {
            let mut out = Array2::zeros((visual.nrows(), self.output_width));
            out.slice_mut(s![.., ..self.input_width]).assign(visual);
            return out;
        }
        let mut h = visual.clone();
        for layer in &self.layers {
            h = h.dot(&layer.linear.t());
            for mut row in h.rows_mut() {
                for (x, a) in row.iter_mut().zip(layer.negative_slopes.iter()) {
                    if *x < 0.0 {
                        *x *= a;
                    }
                }
            }
        }
        h
    }

    /// Left inverse: `unmix(mix(v)) = v`.
    pub fn unmix(&self, x: &Array2<f64>) -> Result<Array2<f64>> {
        ensure!(
            x.ncols() == self.output_width,
            "unmix expects width {}, got {}",
            self.output_width,
            x.ncols()
        );
        if self.layers.is_empty() {
            return Ok(x.slice(s![.., ..self.input_width]).to_owned());
        }
        let mut h = x.clone();
        for layer in self.layers.iter().rev() {
            for mut row in h.rows_mut() {
                for (x, a) in row.iter_mut().zip(layer.negative_slopes.iter()) {
                    if *x < 0.0 {
                        *x /= a;
                    }
                }
            }
            h = h.dot(&layer.linear);
        }
        Ok(h)
    }
}

/// `f_c(c, ε) = Q c + γ tanh(W c) + ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionTransition {
    rotation: Array2<f64>,
    perturbation: Array2<f64>,
    prototype: Array1<f64>,
}

impl ActionTransition {
    fn random(rng: &mut ChaCha8Rng, n_c: usize, cycle: usize) -> Self {
        let basis = orthonormal_columns(rng, n_c, n_c);
        let theta = std::f64::consts::TAU / cycle as f64;
        let mut block = Array2::<f64>::eye(n_c);
        let mut i = 0;
        while i + 1 < n_c {
            let (sn, cs) = theta.sin_cos();
            block[[i, i]] = cs;
            block[[i, i + 1]] = -sn;
            block[[i + 1, i]] = sn;
            block[[i + 1, i + 1]] = cs;
            i += 2;
        }
        let rotation = basis.dot(&block).dot(&basis.t());
        let perturbation = with_spectral_norm(gaussian(rng, n_c, n_c), 1.0);
        let raw: Array1<f64> = (0..n_c).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let norm = raw.dot(&raw).sqrt().max(1e-12);
        Self {
            rotation,
            perturbation,
            prototype: raw / norm,
        }
    }

    /// Noise-free part of the transition.
    pub fn step(&self, c: &Array1<f64>) -> Array1<f64> {
        let nonlinear = self.perturbation.dot(c).mapv(f64::tanh) * ACTION_PERTURBATION;
        self.rotation.dot(c) + nonlinear
    }

    pub fn prototype(&self) -> &Array1<f64> {
        &self.prototype
    }
}

/// `f_v(v, c, ε) = W₂ tanh(A v + C c + b) + ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct VisualTransition {
    recurrent: Array2<f64>,
    action_in: Array2<f64>,
    bias: Array1<f64>,
    output: Array2<f64>,
}

impl VisualTransition {
    fn random(rng: &mut ChaCha8Rng, n_v: usize, n_c: usize) -> Self {
        let hidden = 2 * n_v;
        Self {
            recurrent: with_spectral_norm(gaussian(rng, hidden, n_v), VISUAL_SPECTRAL_NORM),
            action_in: gaussian(rng, hidden, n_c) * ACTION_INFLUENCE,
            bias: Array1::from_shape_fn(hidden, |_| 0.1 * rng.sample::<f64, _>(StandardNormal)),
            output: with_spectral_norm(gaussian(rng, n_v, hidden), VISUAL_SPECTRAL_NORM),
        }
    }

    pub fn step(&self, v: &Array1<f64>, c: &Array1<f64>) -> Array1<f64> {
        let pre = self.recurrent.dot(v) + self.action_in.dot(c) + &self.bias;
        self.output.dot(&pre.mapv(f64::tanh))
    }

    /// Upper bound on the Lipschitz constant in `v`.
    pub fn contraction_bound(&self) -> f64 {
        crate::linalg::spectral_norm(&self.recurrent) * crate::linalg::spectral_norm(&self.output)
    }
}

/// The shared mechanisms `(f_c, f_v, g)` of one generator spec.
#[derive(Debug, Clone, PartialEq)]
pub struct Mechanisms {
    pub action: ActionTransition,
    pub visual: VisualTransition,
    pub mixing: MixingFunction,
}

impl Mechanisms {
    pub fn from_spec(spec: &GeneratorSpec) -> Result<Self> {
        spec.validate()?;
        Ok(Self {
            action: ActionTransition::random(&mut stream_rng(spec.seed, "mechanism/action", 0), spec.n_c, spec.action_cycle),
            visual: VisualTransition::random(&mut stream_rng(spec.seed, "mechanism/visual", 0), spec.n_v, spec.n_c),
            mixing: MixingFunction::random(
                &mut stream_rng(spec.seed, "mechanism/mixing", 0),
                spec.n_v,
                spec.d,
                spec.mixing_depth,
            )?,
        })
    }
}

/// Output of [`generate_action_latents`].
#[derive(Debug, Clone, PartialEq)]
pub struct ActionDraw {
    pub action: Array2<f64>,
    pub regimes: Vec<usize>,
    /// Phase of the first block within the action cycle.
    pub start_phase: usize,
}

/// Uniformly samples block lengths `≥ min_len` summing to `frames`.
pub fn sample_block_lengths<R: Rng>(rng: &mut R, frames: usize, blocks: usize, min_len: usize) -> Result<Vec<usize>> {
    ensure!(blocks >= 1, "need at least one block");
    ensure!(
        blocks * min_len <= frames,
        "K·min_segment_len = {} exceeds T = {}",
        blocks * min_len,
        frames
    );
    // Stars and bars: the slack is split by K-1 bars among slack+K-1 slots.
    let slack = frames - blocks * min_len;
    let slots = slack + blocks - 1;
    let mut bars: Vec<usize> = sample(rng, slots, blocks - 1).into_vec();
    bars.sort_unstable();
    let mut lengths = Vec::with_capacity(blocks);
    let mut prev = 0usize;
    for (i, &b) in bars.iter().enumerate() {
        // Stars before bar i (exclusive of earlier bars).
        let stars = b - i;
        lengths.push(min_len + stars - prev);
        prev = stars;
    }
    lengths.push(min_len + slack - prev);
    Ok(lengths)
}

fn normal_vec<R: Rng>(rng: &mut R, n: usize, scale: f64) -> Array1<f64> {
    Array1::from_shape_fn(n, |_| scale * rng.sample::<f64, _>(StandardNormal))
}

pub fn generate_action_latents(
    spec: &GeneratorSpec,
    mech: &ActionTransition,
    rng: &mut ChaCha8Rng,
) -> Result<ActionDraw> {
    spec.validate()?;
    let lengths = sample_block_lengths(rng, spec.frames, spec.segments, spec.min_segment_len)?;
    let start_phase = rng.gen_range(0..spec.action_cycle);
    let mut c = mech.prototype().clone();
    for _ in 0..start_phase {
        c = mech.step(&c);
    }
    c = c + normal_vec(rng, spec.n_c, spec.noise_scale_c);

    let mut action = Array2::zeros((spec.frames, spec.n_c));
    let mut regimes = Vec::with_capacity(spec.frames);
    let mut t = 0;
    for (k, len) in lengths.iter().enumerate() {
        if k > 0 {
            c = mech.step(&c) + normal_vec(rng, spec.n_c, spec.noise_scale_c);
        }
        for _ in 0..*len {
            action.row_mut(t).assign(&c);
            regimes.push(k);
            t += 1;
        }
    }
    Ok(ActionDraw {
        action,
        regimes,
        start_phase,
    })
}

pub fn generate_visual_latents(
    action: &Array2<f64>,
    spec: &GeneratorSpec,
    mech: &VisualTransition,
    rng: &mut ChaCha8Rng,
) -> Result<Array2<f64>> {
    ensure!(
        action.nrows() == spec.frames && action.ncols() == spec.n_c,
        "action latents are {}×{}, expected {}×{}",
        action.nrows(),
        action.ncols(),
        spec.frames,
        spec.n_c
    );
    let mut visual = Array2::zeros((spec.frames, spec.n_v));
    let mut v = Array1::zeros(spec.n_v);
    for t in 0..spec.frames {
        let c = action.row(t).to_owned();
        v = mech.step(&v, &c) + normal_vec(rng, spec.n_v, spec.noise_scale_v);
        visual.row_mut(t).assign(&v);
    }
    Ok(visual)
}

pub fn mix_observations(visual: &Array2<f64>, g: &MixingFunction) -> Result<FeatureSequence> {
    ensure!(
        visual.ncols() == g.input_width(),
        "visual width {} does not match mixing input width {}",
        visual.ncols(),
        g.input_width()
    );
    FeatureSequence::new(g.apply(visual))
}

/// Round-robin class assignment over an inventory, starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAssignment {
    pub inventory: Vec<usize>,
    pub start: usize,
}

/// Labels every regime block with a class; adjacent blocks always differ.
pub fn derive_supervision(regimes: &[usize], classes: &ClassAssignment) -> Result<(Vec<usize>, Transcript)> {
    let blocks = labels_to_segments(regimes)?;
    let k = blocks.segments().len();
    let inv = &classes.inventory;
    ensure!(!inv.is_empty(), "class inventory is empty");
    let distinct = {
        let mut v = inv.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    if k >= 2 && distinct < 2 {
        return Err(HalError::validation(
            "need at least 2 distinct classes for more than one block",
        ));
    }
    let mut cursor = classes.start;
    let mut transcript = Vec::with_capacity(k);
    let mut labels = Vec::with_capacity(regimes.len());
    for seg in blocks.segments() {
        let mut class = inv[cursor % inv.len()];
        while transcript.last() == Some(&class) {
            cursor += 1;
            class = inv[cursor % inv.len()];
        }
        cursor += 1;
        transcript.push(class);
        labels.extend(std::iter::repeat_n(class, seg.len()));
    }
    Ok((labels, Transcript::new(transcript, false)?))
}

/// One generated video with its ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSequence {
    pub features: FeatureSequence,
    pub transcript: Transcript,
    pub frame_labels: Vec<usize>,
    pub latents: LatentPair,
}

/// Samples `count` sequences sharing one set of mechanisms.
///
/// `stream` separates splits: sequence `i` of stream `s` is seeded with
/// `derive_seed(spec.seed, "sequence/" + s, i)`.
pub fn generate_dataset(
    spec: &GeneratorSpec,
    count: usize,
    class_inventory: &[usize],
    stream: &str,
) -> Result<Vec<SyntheticSequence>> {
    let mech = Mechanisms::from_spec(spec)?;
    let tag = format!("sequence/{stream}");
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = rand_chacha::rand_core::SeedableRng::seed_from_u64(derive_seed(spec.seed, &tag, i as u64));
            generate_one(spec, &mech, class_inventory, &mut rng)
        })
        .collect()
}

fn generate_one(
    spec: &GeneratorSpec,
    mech: &Mechanisms,
    class_inventory: &[usize],
    rng: &mut ChaCha8Rng,
) -> Result<SyntheticSequence> {
    let draw = generate_action_latents(spec, &mech.action, rng)?;
    let visual = generate_visual_latents(&draw.action, spec, &mech.visual, rng)?;
    let features = mix_observations(&visual, &mech.mixing)?;
    let (frame_labels, transcript) = derive_supervision(
        &draw.regimes,
        &ClassAssignment {
            inventory: class_inventory.to_vec(),
            start: draw.start_phase,
        },
    )?;
    Ok(SyntheticSequence {
        features,
        transcript,
        frame_labels,
        latents: LatentPair::new(visual, draw.action, Some(draw.regimes))?,
    })
}

/// Σ_t mean_i |m̄_{t+1,i} − m̄_{t,i}| of the row-normalized trajectory.
pub fn normalized_total_variation(m: &Array2<f64>) -> f64 {
    let normed = crate::objective::l2_normalize_rows(m);
    let mut tv = 0.0;
    for t in 1..normed.nrows() {
        let diff: f64 = normed
            .row(t)
            .iter()
            .zip(normed.row(t - 1).iter())
            .map(|(a, b)| (a - b).abs())
            .sum();
        tv += diff / normed.ncols() as f64;
    }
    tv
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn spec() -> GeneratorSpec {
        GeneratorSpec {
            frames: 100,
            n_c: 2,
            n_v: 4,
            d: 8,
            segments: 4,
            min_segment_len: 10,
            noise_scale_v: 0.5,
            noise_scale_c: 0.1,
            mixing_depth: 2,
            action_cycle: 4,
            seed: 11,
        }
    }

    #[test]
    fn spec_validation() {
        let mut s = spec();
        s.segments = 11;
        assert!(s.validate().is_err());
        let mut s = spec();
        s.n_v = 3;
        assert!(s.validate().is_err());
        let mut s = spec();
        s.d = 3;
        s.n_v = 4;
        assert!(s.validate().is_err());
        let mut s = spec();
        s.segments = 11;
        let mech = Mechanisms::from_spec(&spec()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(generate_action_latents(&s, &mech.action, &mut rng).is_err());
    }

    #[test]
    fn single_block_is_constant() {
        let mut s = spec();
        s.segments = 1;
        let mech = Mechanisms::from_spec(&s).unwrap();
        let draw = generate_action_latents(&s, &mech.action, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert!(draw.regimes.iter().all(|&r| r == 0));
        assert_eq!(normalized_total_variation(&draw.action), 0.0);
        for t in 1..s.frames {
            assert_eq!(draw.action.row(t), draw.action.row(0));
        }
    }

    #[test]
    fn two_blocks_jump_range_matches_enumeration() {
        // Oracle: every placement of one cut in a length-10 sequence with
        // both blocks ≥ 3 frames.
        let valid: Vec<usize> = (1..10).filter(|&cut| cut >= 3 && 10 - cut >= 3).collect();
        assert_eq!(valid, vec![3, 4, 5, 6, 7]);
        let mut counts = [0usize; 10];
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let trials = 20_000;
        for _ in 0..trials {
            let lengths = sample_block_lengths(&mut rng, 10, 2, 3).unwrap();
            assert_eq!(lengths.iter().sum::<usize>(), 10);
            counts[lengths[0]] += 1;
        }
        for (cut, &n) in counts.iter().enumerate() {
            if valid.contains(&cut) {
                let freq = n as f64 / trials as f64;
                assert!((freq - 0.2).abs() < 0.02, "cut {cut} freq {freq}");
            } else {
                assert_eq!(n, 0);
            }
        }
        let mut s = spec();
        s.frames = 10;
        s.segments = 2;
        s.min_segment_len = 3;
        s.n_v = 4;
        let mech = Mechanisms::from_spec(&s).unwrap();
        for seed in 0..50 {
            let draw = generate_action_latents(&s, &mech.action, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let jumps: Vec<usize> = (1..10).filter(|&t| draw.regimes[t] != draw.regimes[t - 1]).collect();
            assert_eq!(jumps.len(), 1);
            assert!((3..=7).contains(&jumps[0]));
        }
    }

    #[test]
    fn block_lengths_respect_minimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let l = sample_block_lengths(&mut rng, 37, 5, 4).unwrap();
            assert_eq!(l.len(), 5);
            assert_eq!(l.iter().sum::<usize>(), 37);
            assert!(l.iter().all(|&x| x >= 4));
        }
        assert_eq!(sample_block_lengths(&mut rng, 12, 3, 4).unwrap(), vec![4, 4, 4]);
    }

    #[test]
    fn noiseless_visual_dynamics_contract() {
        let mut s = spec();
        s.noise_scale_v = 0.0;
        let mech = Mechanisms::from_spec(&s).unwrap();
        assert!(mech.visual.contraction_bound() < 0.9);
        let action = Array2::from_shape_fn((s.frames, s.n_c), |(_, j)| if j == 0 { 0.7 } else { -0.3 });
        let v = generate_visual_latents(&action, &s, &mech.visual, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        let deltas: Vec<f64> = (1..s.frames)
            .map(|t| {
                let d = &v.row(t) - &v.row(t - 1);
                d.dot(&d).sqrt()
            })
            .collect();
        for w in deltas.windows(2).skip(2) {
            assert!(w[1] <= w[0] + 1e-15, "{} > {}", w[1], w[0]);
        }
        assert!(deltas.last().unwrap() < &1e-3);
    }

    #[test]
    fn visual_changes_faster_than_action_within_blocks() {
        let s = spec();
        let data = generate_dataset(&s, 3, &[1, 2, 3, 4], "test").unwrap();
        for seq in &data {
            let regimes = seq.latents.regimes.as_ref().unwrap();
            for t in 1..s.frames {
                if regimes[t] == regimes[t - 1] {
                    let dc = &seq.latents.action.row(t) - &seq.latents.action.row(t - 1);
                    let dv = &seq.latents.visual.row(t) - &seq.latents.visual.row(t - 1);
                    assert_eq!(dc.dot(&dc), 0.0);
                    assert!(dv.dot(&dv) > 0.0);
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let s = spec();
        let mech = Mechanisms::from_spec(&s).unwrap();
        let bad = Array2::zeros((s.frames, s.n_c + 1));
        assert!(generate_visual_latents(&bad, &s, &mech.visual, &mut ChaCha8Rng::seed_from_u64(0)).is_err());
        assert!(mix_observations(&Array2::zeros((3, 5)), &mech.mixing).is_err());
    }

    #[test]
    fn identity_mixing_pads() {
        let g = MixingFunction::identity(2, 4);
        let v = ndarray::array![[1.0, 2.0], [3.0, -4.0]];
        let x = mix_observations(&v, &g).unwrap();
        assert_eq!(x.frames(), &ndarray::array![[1.0, 2.0, 0.0, 0.0], [3.0, -4.0, 0.0, 0.0]]);
        assert_eq!(g.unmix(x.frames()).unwrap(), v);
    }

    #[test]
    fn mixing_left_inverse_and_injective() {
        let s = spec();
        let mech = Mechanisms::from_spec(&s).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let v = gaussian(&mut rng, 2000, s.n_v) * 2.0;
        let x = mix_observations(&v, &mech.mixing).unwrap();
        let back = mech.mixing.unmix(x.frames()).unwrap();
        let err = (&back - &v).iter().fold(0.0_f64, |a, &b| a.max(b.abs()));
        assert!(err <= 1e-5, "max error {err}");
        for i in 0..1000 {
            let (a, b) = (2 * i, 2 * i + 1);
            let dx = &x.frames().row(a) - &x.frames().row(b);
            assert!(dx.dot(&dx) > 0.0);
        }
    }

    #[test]
    fn supervision_examples() {
        let (labels, tr) = derive_supervision(&[0, 0, 0], &ClassAssignment { inventory: vec![1, 2], start: 0 }).unwrap();
        assert_eq!(labels, vec![1, 1, 1]);
        assert_eq!(tr.entries(), &[1]);
        let regimes = [0, 0, 1, 1, 1, 2];
        let (labels, tr) = derive_supervision(&regimes, &ClassAssignment { inventory: vec![1, 2], start: 0 }).unwrap();
        assert_eq!(tr.entries(), &[1, 2, 1]);
        assert_eq!(labels, vec![1, 1, 2, 2, 2, 1]);
        let gt = labels_to_segments(&labels).unwrap().boundaries();
        let rb = labels_to_segments(&regimes).unwrap().boundaries();
        assert_eq!(gt, rb);
        assert!(derive_supervision(&regimes, &ClassAssignment { inventory: vec![3], start: 0 }).is_err());
        let (_, tr) = derive_supervision(&regimes, &ClassAssignment { inventory: vec![1, 1, 2], start: 0 }).unwrap();
        assert!(tr.entries().windows(2).all(|w| w[0] != w[1]));
    }

    #[test]
    fn dataset_determinism_and_shared_mechanisms() {
        let s = spec();
        assert!(generate_dataset(&s, 0, &[1, 2, 3, 4], "train").unwrap().is_empty());
        let a = generate_dataset(&s, 2, &[1, 2, 3, 4], "train").unwrap();
        let b = generate_dataset(&s, 2, &[1, 2, 3, 4], "train").unwrap();
        assert_eq!(a, b);
        assert_ne!(a[0].features, a[1].features);
        let other = generate_dataset(&s, 2, &[1, 2, 3, 4], "test").unwrap();
        assert_ne!(a[0].features, other[0].features);
        // Shared g: every sequence's features unmix through the same map.
        let mech = Mechanisms::from_spec(&s).unwrap();
        for seq in a.iter().chain(other.iter()) {
            let back = mech.mixing.unmix(seq.features.frames()).unwrap();
            let err = (&back - &seq.latents.visual).iter().fold(0.0_f64, |m, &e| m.max(e.abs()));
            assert!(err < 1e-9);
        }
    }

    #[test]
    fn slowness_gap_holds_per_sequence() {
        let s = spec();
        for seq in generate_dataset(&s, 20, &[1, 2, 3, 4], "gap").unwrap() {
            let tv_c = normalized_total_variation(&seq.latents.action);
            let tv_v = normalized_total_variation(&seq.latents.visual);
            assert!(tv_c < tv_v, "tv_c {tv_c} !< tv_v {tv_v}");
        }
    }

    #[test]
    fn class_follows_action_phase() {
        // The phase of c within the cycle determines the class.
        let s = spec();
        let data = generate_dataset(&s, 40, &[1, 2, 3, 4], "phase").unwrap();
        let mut centroids = vec![(Array1::<f64>::zeros(2), 0usize); 5];
        for seq in &data {
            for t in 0..s.frames {
                let k = seq.frame_labels[t];
                centroids[k].0 += &seq.latents.action.row(t);
                centroids[k].1 += 1;
            }
        }
        let means: Vec<Array1<f64>> = centroids[1..].iter().map(|(s, n)| s / *n as f64).collect();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let d = &means[i] - &means[j];
                assert!(d.dot(&d).sqrt() > 0.5);
            }
        }
    }
}
