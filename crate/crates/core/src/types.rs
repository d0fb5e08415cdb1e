//! Shared domain types.
//!
//! All of these are plain immutable values once constructed; constructors
//! validate the invariants so downstream code can rely on them.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{ensure, HalError, Result};

/// Background is an ordinary class id; `0` by convention.
pub const BACKGROUND_ID: usize = 0;

/// Per-frame feature matrix, `T × d`.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureSequence {
    frames: Array2<f64>,
    frame_rate_hint: Option<f64>,
}

impl FeatureSequence {
    pub fn new(frames: Array2<f64>) -> Result<Self> {
        ensure!(frames.nrows() >= 1, "feature sequence needs at least one frame");
        ensure!(frames.ncols() >= 1, "feature sequence needs at least one dimension");
        if let Some(pos) = frames.iter().position(|v| !v.is_finite()) {
            return Err(HalError::validation(format!(
                "nonfinite feature value at flat index {pos}"
            )));
        }
        Ok(Self {
            frames,
            frame_rate_hint: None,
        })
    }

    pub fn with_frame_rate(mut self, fps: f64) -> Result<Self> {
        ensure!(fps > 0.0 && fps.is_finite(), "frame rate must be positive");
        self.frame_rate_hint = Some(fps);
        Ok(self)
    }

    pub fn frames(&self) -> &Array2<f64> {
        &self.frames
    }

    pub fn into_frames(self) -> Array2<f64> {
        self.frames
    }

    pub fn len(&self) -> usize {
        self.frames.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.nrows() == 0
    }

    pub fn dim(&self) -> usize {
        self.frames.ncols()
    }

    pub fn frame_rate_hint(&self) -> Option<f64> {
        self.frame_rate_hint
    }

    /// Keeps the first `t` frames.
    pub fn truncated(&self, t: usize) -> Result<Self> {
        ensure!(t >= 1 && t <= self.len(), "cannot truncate {} frames to {t}", self.len());
        Ok(Self {
            frames: self.frames.slice(ndarray::s![..t, ..]).to_owned(),
            frame_rate_hint: self.frame_rate_hint,
        })
    }
}

/// Aligned visual / action latent trajectories with optional regime labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LatentPair {
    pub visual: Array2<f64>,
    pub action: Array2<f64>,
    pub regimes: Option<Vec<usize>>,
}

impl LatentPair {
    pub fn new(visual: Array2<f64>, action: Array2<f64>, regimes: Option<Vec<usize>>) -> Result<Self> {
        ensure!(
            visual.nrows() == action.nrows(),
            "visual has {} rows but action has {}",
            visual.nrows(),
            action.nrows()
        );
        ensure!(
            visual.iter().chain(action.iter()).all(|v| v.is_finite()),
            "latent trajectories must be finite"
        );
        if let Some(r) = &regimes {
            ensure!(r.len() == visual.nrows(), "regimes length mismatch");
            ensure!(
                r.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1),
                "regimes must be piecewise constant and increase by one at each block"
            );
        }
        Ok(Self {
            visual,
            action,
            regimes,
        })
    }

    pub fn len(&self) -> usize {
        self.visual.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.visual.nrows() == 0
    }
}

/// Ordered list of action classes in a video.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    entries: Vec<usize>,
}

impl Transcript {
    pub fn new(entries: Vec<usize>, allow_repeats: bool) -> Result<Self> {
        ensure!(!entries.is_empty(), "transcript must have at least one entry");
        if !allow_repeats {
            if let Some(i) = entries.windows(2).position(|w| w[0] == w[1]) {
                return Err(HalError::validation(format!(
                    "transcript repeats class {} at positions {} and {}",
                    entries[i],
                    i,
                    i + 1
                )));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub class_id: usize,
    pub start: usize,
    pub end: usize,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

/// Run-length view of a labeling; segments tile `[0, T)` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentList {
    segments: Vec<Segment>,
}

impl SegmentList {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        ensure!(!segments.is_empty(), "segment list is empty");
        ensure!(segments[0].start == 0, "first segment must start at frame 0");
        let mut prev: Option<&Segment> = None;
        for s in &segments {
            ensure!(s.end > s.start, "segment ({}, {}, {}) is empty", s.class_id, s.start, s.end);
            if let Some(p) = prev {
                ensure!(
                    s.start == p.end,
                    "gap or overlap between frames {} and {}",
                    p.end,
                    s.start
                );
                ensure!(
                    s.class_id != p.class_id,
                    "adjacent segments share class {}",
                    s.class_id
                );
            }
            prev = Some(s);
        }
        Ok(Self { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Total number of frames covered.
    pub fn num_frames(&self) -> usize {
        self.segments.last().map_or(0, |s| s.end)
    }

    /// First frame of every segment after the first.
    pub fn boundaries(&self) -> Vec<usize> {
        self.segments.iter().skip(1).map(|s| s.start).collect()
    }
}

pub fn labels_to_segments(labels: &[usize]) -> Result<SegmentList> {
    if labels.is_empty() {
        return Err(HalError::validation("empty label sequence"));
    }
    let mut segments = Vec::new();
    let mut start = 0;
    for t in 1..=labels.len() {
        if t == labels.len() || labels[t] != labels[start] {
            segments.push(Segment {
                class_id: labels[start],
                start,
                end: t,
            });
            start = t;
        }
    }
    SegmentList::new(segments)
}

/// Expands segments back into per-frame labels. Works from raw segments so
/// malformed tilings are reported rather than silently accepted.
pub fn segments_to_labels(segments: &[Segment]) -> Result<Vec<usize>> {
    let list = SegmentList::new(segments.to_vec())?;
    let mut labels = Vec::with_capacity(list.num_frames());
    for s in list.segments() {
        labels.extend(std::iter::repeat_n(s.class_id, s.len()));
    }
    Ok(labels)
}

/// Per-frame class posteriors, rows summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct PosteriorMatrix {
    probs: Array2<f64>,
}

impl PosteriorMatrix {
    pub const ROW_SUM_TOL: f64 = 1e-6;

    pub fn new(probs: Array2<f64>) -> Result<Self> {
        ensure!(probs.nrows() >= 1 && probs.ncols() >= 1, "posterior matrix is empty");
        for (t, row) in probs.rows().into_iter().enumerate() {
            ensure!(
                row.iter().all(|p| (0.0..=1.0).contains(p)),
                "posterior row {t} has entries outside [0, 1]"
            );
            let sum: f64 = row.sum();
            ensure!(
                (sum - 1.0).abs() <= Self::ROW_SUM_TOL,
                "posterior row {t} sums to {sum}"
            );
        }
        Ok(Self { probs })
    }

    /// Uniform posteriors over `classes`.
    pub fn uniform(frames: usize, classes: usize) -> Result<Self> {
        Self::new(Array2::from_elem((frames, classes), 1.0 / classes as f64))
    }

    pub fn probs(&self) -> &Array2<f64> {
        &self.probs
    }

    pub fn num_frames(&self) -> usize {
        self.probs.nrows()
    }

    pub fn num_classes(&self) -> usize {
        self.probs.ncols()
    }

    pub fn argmax_labels(&self) -> Vec<usize> {
        self.probs
            .rows()
            .into_iter()
            .map(|row| {
                let mut best = 0;
                for (k, &p) in row.iter().enumerate() {
                    if p > row[best] {
                        best = k;
                    }
                }
                best
            })
            .collect()
    }
}
