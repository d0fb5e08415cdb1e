//! Transcript-constrained decoding.
//!
//! `viterbi_align` finds the monotone labeling that realizes a transcript,
//! respects a minimum segment length and maximizes the summed log posterior.
//! The DP runs over suffixes so that the forward read-out can pick the
//! earliest optimal boundary at every step.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::types::{PosteriorMatrix, Transcript};

pub const POSTERIOR_FLOOR: f64 = 1e-12;

/// Relative gap below which two DP candidates count as tied.
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlignmentResult {
    pub labels: Vec<usize>,
    /// First frame of every segment after the first.
    pub boundaries: Vec<usize>,
    pub score: f64,
}

pub fn log_posteriors(posteriors: &PosteriorMatrix) -> Array2<f64> {
    posteriors.probs().mapv(|p| p.max(POSTERIOR_FLOOR).ln())
}

/// Sum of floored log posteriors along `labels`, in frame order.
pub fn labeling_score(logp: &Array2<f64>, labels: &[usize]) -> f64 {
    labels.iter().enumerate().map(|(t, &u)| logp[[t, u]]).sum()
}

fn check_fit(t: usize, m: usize, min_len: usize) -> Result<()> {
    ensure!(min_len >= 1, "min_segment_len must be at least 1");
    ensure!(
        m * min_len <= t,
        "transcript does not fit: {m} segments of length >= {min_len} in {t} frames"
    );
    Ok(())
}

fn boundaries_to_labels(t: usize, transcript: &[usize], boundaries: &[usize]) -> Vec<usize> {
    let mut labels = Vec::with_capacity(t);
    let mut start = 0;
    for (j, &u) in transcript.iter().enumerate() {
        let end = boundaries.get(j).copied().unwrap_or(t);
        labels.extend(std::iter::repeat_n(u, end - start));
        start = end;
    }
    labels
}

pub fn viterbi_align(posteriors: &PosteriorMatrix, transcript: &Transcript, min_segment_len: usize) -> Result<AlignmentResult> {
    let logp = log_posteriors(posteriors);
    viterbi_align_log(&logp, transcript, min_segment_len)
}

/// Same as [`viterbi_align`] on precomputed log scores.
pub fn viterbi_align_log(logp: &Array2<f64>, transcript: &Transcript, min_segment_len: usize) -> Result<AlignmentResult> {
    let (t, k) = logp.dim();
    let a = transcript.entries();
    let m = a.len();
    let l = min_segment_len;
    check_fit(t, m, l)?;
    if let Some(&bad) = a.iter().find(|&&u| u >= k) {
        return Err(crate::error::HalError::validation(format!(
            "transcript class {bad} out of range for {k} classes"
        )));
    }

    // prefix[j][s] = Σ_{r<s} logp[r, a_j]
    let prefix: Vec<Vec<f64>> = a
        .iter()
        .map(|&u| {
            let mut p = Vec::with_capacity(t + 1);
            p.push(0.0);
            for r in 0..t {
                p.push(p[r] + logp[[r, u]]);
            }
            p
        })
        .collect();

    // s_tab[j][s]: best score of frames s..T with segment j starting at s.
    // exact[j][s]: whether the optimum has segment j ending at s + l.
    let neg = f64::NEG_INFINITY;
    let mut s_tab = vec![vec![neg; t + 1]; m];
    let mut exact = vec![vec![false; t + 1]; m];
    for s in (0..=t - l).rev() {
        s_tab[m - 1][s] = prefix[m - 1][t] - prefix[m - 1][s];
    }
    for j in (0..m - 1).rev() {
        let tail = (m - 1 - j) * l;
        if t < tail + l {
            continue;
        }
        for s in (0..=t - tail - l).rev() {
            let window = prefix[j][s + l] - prefix[j][s];
            let ex = s_tab[j + 1][s + l] + window;
            let ext = if s < t { s_tab[j][s + 1] + logp[[s, a[j]]] } else { neg };
            let tied = ext.is_finite() && ex.is_finite() && (ex - ext).abs() <= TIE_TOL * (1.0 + ex.abs());
            if ex >= ext || tied {
                s_tab[j][s] = ex;
                exact[j][s] = true;
            } else {
                s_tab[j][s] = ext;
            }
        }
    }

    let mut boundaries = Vec::with_capacity(m - 1);
    let mut start = 0;
    for row in exact.iter().take(m - 1) {
        let mut s = start;
        while !row[s] {
            s += 1;
        }
        start = s + l;
        boundaries.push(start);
    }
    let labels = boundaries_to_labels(t, a, &boundaries);
    let score = labeling_score(logp, &labels);
    Ok(AlignmentResult {
        labels,
        boundaries,
        score,
    })
}

pub const ENUMERATE_MAX_T: usize = 16;
pub const ENUMERATE_MAX_M: usize = 4;

/// Every monotone labeling of `t` frames realizing `transcript` with all
/// segments at least `min_segment_len` long, in lexicographic boundary order.
pub fn enumerate_alignments(t: usize, transcript: &Transcript, min_segment_len: usize) -> Result<Vec<Vec<usize>>> {
    let m = transcript.len();
    ensure!(
        t <= ENUMERATE_MAX_T && m <= ENUMERATE_MAX_M,
        "enumeration guard: need T <= {ENUMERATE_MAX_T} and M <= {ENUMERATE_MAX_M}, got T = {t}, M = {m}"
    );
    check_fit(t, m, min_segment_len)?;
    let mut out = Vec::new();
    let mut cuts = Vec::with_capacity(m - 1);
    fn rec(t: usize, m: usize, l: usize, start: usize, cuts: &mut Vec<usize>, a: &[usize], out: &mut Vec<Vec<usize>>) {
        if cuts.len() == m - 1 {
            out.push(boundaries_to_labels(t, a, cuts));
            return;
        }
        let remaining = m - 1 - cuts.len();
        for b in start + l..=t - remaining * l {
            cuts.push(b);
            rec(t, m, l, b, cuts, a, out);
            cuts.pop();
        }
    }
    rec(t, m, min_segment_len, 0, &mut cuts, transcript.entries(), &mut out);
    Ok(out)
}

/// Viterbi labels plus a confidence mask that is false within
/// `boundary_margin` frames on each side of every internal boundary.
pub fn pseudo_labels(
    posteriors: &PosteriorMatrix,
    transcript: &Transcript,
    min_segment_len: usize,
    boundary_margin: usize,
) -> Result<(Vec<usize>, Vec<bool>)> {
    let res = viterbi_align(posteriors, transcript, min_segment_len)?;
    let mask = boundary_mask(res.labels.len(), &res.boundaries, boundary_margin);
    Ok((res.labels, mask))
}

pub fn boundary_mask(t: usize, boundaries: &[usize], margin: usize) -> Vec<bool> {
    let mut mask = vec![true; t];
    for &b in boundaries {
        let lo = b.saturating_sub(margin);
        let hi = (b + margin).min(t);
        for m in &mut mask[lo..hi] {
            *m = false;
        }
    }
    mask
}

/// Transcript-free decoding: frame-wise argmax.
pub fn argmax_decode(posteriors: &PosteriorMatrix) -> Vec<usize> {
    posteriors.argmax_labels()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tr(v: &[usize]) -> Transcript {
        Transcript::new(v.to_vec(), false).unwrap()
    }

    fn post(p: Array2<f64>) -> PosteriorMatrix {
        PosteriorMatrix::new(p).unwrap()
    }

    fn random_post(rng: &mut ChaCha8Rng, t: usize, k: usize) -> PosteriorMatrix {
        let raw = Array2::from_shape_fn((t, k), |_| rng.gen_range(0.01..1.0));
        let sums = raw.sum_axis(ndarray::Axis(1));
        post(Array2::from_shape_fn((t, k), |(i, j)| raw[[i, j]] / sums[i]))
    }

    fn random_transcript(rng: &mut ChaCha8Rng, m: usize, k: usize) -> Transcript {
        let mut v: Vec<usize> = Vec::with_capacity(m);
        while v.len() < m {
            let u = rng.gen_range(0..k);
            if v.last() != Some(&u) {
                v.push(u);
            }
        }
        tr(&v)
    }

    fn assert_valid(res: &AlignmentResult, transcript: &Transcript, l: usize) {
        let segs = crate::types::labels_to_segments(&res.labels).unwrap();
        let classes: Vec<usize> = segs.segments().iter().map(|s| s.class_id).collect();
        assert_eq!(classes, transcript.entries());
        assert!(segs.segments().iter().all(|s| s.len() >= l));
        assert_eq!(segs.boundaries(), res.boundaries);
    }

    #[test]
    fn single_entry() {
        let p = post(array![[0.5, 0.5], [0.2, 0.8], [0.9, 0.1]]);
        let res = viterbi_align(&p, &tr(&[1]), 1).unwrap();
        assert_eq!(res.labels, vec![1, 1, 1]);
        assert!(res.boundaries.is_empty());
        let want = 0.5f64.ln() + 0.8f64.ln() + 0.1f64.ln();
        assert!((res.score - want).abs() < 1e-15);
    }

    #[test]
    fn one_hot_recovered() {
        let labels = [2, 2, 0, 0, 0, 1];
        let p = post(Array2::from_shape_fn((6, 3), |(t, u)| if labels[t] == u { 1.0 } else { 0.0 }));
        let res = viterbi_align(&p, &tr(&[2, 0, 1]), 1).unwrap();
        assert_eq!(res.labels, labels);
        assert_eq!(res.score, 0.0);
    }

    #[test]
    fn four_frames_two_classes() {
        let p = post(array![[0.9, 0.1], [0.8, 0.2], [0.3, 0.7], [0.1, 0.9]]);
        let t = tr(&[0, 1]);
        let res = viterbi_align(&p, &t, 1).unwrap();
        assert_eq!(res.boundaries, vec![2]);
        let logp = log_posteriors(&p);
        let all = enumerate_alignments(4, &t, 1).unwrap();
        assert_eq!(all.len(), 3);
        let best = all.iter().map(|l| labeling_score(&logp, l)).fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(res.score, best);
    }

    #[test]
    fn infeasible() {
        let p = PosteriorMatrix::uniform(2, 3).unwrap();
        let err = viterbi_align(&p, &tr(&[0, 1, 2]), 1).unwrap_err();
        assert!(err.to_string().contains("transcript does not fit"));
        assert!(enumerate_alignments(2, &tr(&[0, 1, 2]), 1).is_err());
        assert!(viterbi_align(&PosteriorMatrix::uniform(5, 2).unwrap(), &tr(&[0, 2]), 1).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_alignments(3, &tr(&[0, 1]), 1).unwrap().len(), 2);
        assert_eq!(enumerate_alignments(4, &tr(&[0, 1]), 2).unwrap(), vec![vec![0, 0, 1, 1]]);
        assert!(enumerate_alignments(17, &tr(&[0]), 1).is_err());
        assert!(enumerate_alignments(8, &tr(&[0, 1, 0, 1, 0]), 1).is_err());
        // C(T-1, M-1) compositions for min length 1.
        assert_eq!(enumerate_alignments(10, &tr(&[0, 1, 2, 3]), 1).unwrap().len(), 84);
    }

    #[test]
    fn zero_posterior_floored() {
        let p = post(array![[1.0, 0.0], [1.0, 0.0]]);
        let res = viterbi_align(&p, &tr(&[0, 1]), 1).unwrap();
        assert_eq!(res.labels, vec![0, 1]);
        assert!((res.score - POSTERIOR_FLOOR.ln()).abs() < 1e-12);
    }

    #[test]
    fn ties_take_earliest_boundaries() {
        let p = PosteriorMatrix::uniform(6, 3).unwrap();
        let res = viterbi_align(&p, &tr(&[0, 1, 2]), 1).unwrap();
        assert_eq!(res.boundaries, vec![1, 2]);
        let res = viterbi_align(&p, &tr(&[0, 1, 2]), 2).unwrap();
        assert_eq!(res.boundaries, vec![2, 4]);
        // Two frames in the middle are indifferent between classes 0 and 1.
        let p = post(array![[0.9, 0.1], [0.5, 0.5], [0.5, 0.5], [0.1, 0.9]]);
        let res = viterbi_align(&p, &tr(&[0, 1]), 1).unwrap();
        assert_eq!(res.boundaries, vec![1]);
    }

    #[test]
    fn oracle_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let t = rng.gen_range(1..=8);
            let k = rng.gen_range(2..=4);
            let m = rng.gen_range(1..=3.min(t));
            let l = rng.gen_range(1..=(t / m).max(1));
            let transcript = random_transcript(&mut rng, m, k);
            let p = random_post(&mut rng, t, k);
            let res = viterbi_align(&p, &transcript, l).unwrap();
            assert_valid(&res, &transcript, l);
            let logp = log_posteriors(&p);
            let best = enumerate_alignments(t, &transcript, l)
                .unwrap()
                .iter()
                .map(|lab| labeling_score(&logp, lab))
                .fold(f64::NEG_INFINITY, f64::max);
            assert_eq!(res.score, best);
        }
    }

    #[test]
    fn shift_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let p = random_post(&mut rng, 12, 3);
        let transcript = tr(&[0, 2, 1]);
        let logp = log_posteriors(&p);
        let base = viterbi_align_log(&logp, &transcript, 2).unwrap();
        let shifted = viterbi_align_log(&(&logp - 0.75), &transcript, 2).unwrap();
        assert_eq!(base.labels, shifted.labels);
        assert!((shifted.score - (base.score - 12.0 * 0.75)).abs() < 1e-9);
    }

    #[test]
    fn pseudo_label_masks() {
        let p = post(Array2::from_shape_fn((10, 2), |(t, u)| {
            if (t < 5) == (u == 0) {
                0.9
            } else {
                0.1
            }
        }));
        let transcript = tr(&[0, 1]);
        let (labels, mask) = pseudo_labels(&p, &transcript, 2, 2).unwrap();
        assert_eq!(labels, vec![0, 0, 0, 0, 0, 1, 1, 1, 1, 1]);
        let off: Vec<usize> = (0..10).filter(|&i| !mask[i]).collect();
        assert_eq!(off, vec![3, 4, 5, 6]);
        let (_, mask) = pseudo_labels(&p, &transcript, 2, 0).unwrap();
        assert!(mask.iter().all(|&m| m));
        let (_, mask) = pseudo_labels(&p, &transcript, 2, 10).unwrap();
        assert!(mask.iter().all(|&m| !m));
    }

    proptest! {
        #[test]
        fn output_invariants(seed in any::<u64>(), t in 4usize..40, m in 1usize..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = 4;
            let l = rng.gen_range(1..=(t / m).max(1));
            prop_assume!(m * l <= t);
            let transcript = random_transcript(&mut rng, m, k);
            let p = random_post(&mut rng, t, k);
            let res = viterbi_align(&p, &transcript, l).unwrap();
            assert_valid(&res, &transcript, l);
        }
    }
}
