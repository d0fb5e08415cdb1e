//! Frame accuracy (MoF, MoF-bg) and segment overlap (IoU, IoD).
//!
//! IoU/IoD match every non-background ground-truth segment to the predicted
//! segment of the same class with the largest intersection (earliest on
//! ties) and average the per-segment ratios without weighting.

use std::fmt::Write as _;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::types::{labels_to_segments, SegmentList};

fn check_lengths(pred: &[usize], gt: &[usize]) -> Result<()> {
    ensure!(
        pred.len() == gt.len(),
        "length mismatch: prediction has {} frames, ground truth {}",
        pred.len(),
        gt.len()
    );
    Ok(())
}

pub fn mof(pred: &[usize], gt: &[usize]) -> Result<f64> {
    check_lengths(pred, gt)?;
    ensure!(!gt.is_empty(), "empty label sequence");
    let hits = pred.iter().zip(gt).filter(|(p, g)| p == g).count();
    Ok(hits as f64 / gt.len() as f64)
}

/// `(correct, evaluated)` over frames whose ground truth is not background.
pub fn mof_bg_counts(pred: &[usize], gt: &[usize], bg_id: usize) -> Result<(usize, usize)> {
    check_lengths(pred, gt)?;
    let mut hits = 0;
    let mut total = 0;
    for (p, g) in pred.iter().zip(gt) {
        if *g != bg_id {
            total += 1;
            hits += usize::from(p == g);
        }
    }
    Ok((hits, total))
}

/// MoF over non-background frames; 1.0 when there are none.
pub fn mof_bg(pred: &[usize], gt: &[usize], bg_id: usize) -> Result<f64> {
    let (hits, total) = mof_bg_counts(pred, gt, bg_id)?;
    Ok(if total == 0 { 1.0 } else { hits as f64 / total as f64 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct IouOptions {
    /// Score background ground-truth segments too.
    pub include_background: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentScore {
    pub class_id: usize,
    pub iou: f64,
    pub iod: f64,
}

pub fn segment_scores(pred: &SegmentList, gt: &SegmentList, bg_id: usize, opts: IouOptions) -> Result<Vec<SegmentScore>> {
    ensure!(
        pred.num_frames() == gt.num_frames(),
        "segmentations tile different ranges: {} vs {} frames",
        pred.num_frames(),
        gt.num_frames()
    );
    let mut out = Vec::new();
    for s in gt.segments() {
        if s.class_id == bg_id && !opts.include_background {
            continue;
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for p in pred.segments().iter().filter(|p| p.class_id == s.class_id) {
            let inter = s.end.min(p.end).saturating_sub(s.start.max(p.start));
            if inter > 0 && best.is_none_or(|(b, _, _)| inter > b) {
                best = Some((inter, p.start, p.end));
            }
        }
        let (iou, iod) = match best {
            Some((inter, ps, pe)) => {
                let union = s.end.max(pe) - s.start.min(ps);
                (inter as f64 / union as f64, inter as f64 / (pe - ps) as f64)
            }
            None => (0.0, 0.0),
        };
        out.push(SegmentScore {
            class_id: s.class_id,
            iou,
            iod,
        });
    }
    Ok(out)
}

/// Mean IoU and IoD over scored ground-truth segments; `(1, 1)` when there
/// are none.
pub fn iou_iod(pred: &SegmentList, gt: &SegmentList, bg_id: usize) -> Result<(f64, f64)> {
    let scores = segment_scores(pred, gt, bg_id, IouOptions::default())?;
    Ok(mean_scores(&scores))
}

fn mean_scores(scores: &[SegmentScore]) -> (f64, f64) {
    if scores.is_empty() {
        return (1.0, 1.0);
    }
    let n = scores.len() as f64;
    (
        scores.iter().map(|s| s.iou).sum::<f64>() / n,
        scores.iter().map(|s| s.iod).sum::<f64>() / n,
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VideoMetrics {
    pub video: String,
    pub mof: f64,
    pub mof_bg: f64,
    pub iou: f64,
    pub iod: f64,
    pub frames: usize,
    pub fg_frames: usize,
    pub segments: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EvalCounts {
    pub frames: usize,
    pub fg_frames: usize,
    pub segments: usize,
    /// Videos without any non-background frame.
    pub vacuous_bg_videos: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub mof: f64,
    pub mof_bg: f64,
    pub iou: f64,
    pub iod: f64,
    pub per_video: Vec<VideoMetrics>,
    pub counts: EvalCounts,
}

/// Corpus metrics over `(prediction, ground truth)` pairs, pooled by frames
/// for MoF and by segments for IoU/IoD.
pub fn evaluate_corpus(pairs: &[(Vec<usize>, Vec<usize>)], bg_id: usize) -> Result<EvalReport> {
    let ids: Vec<String> = (0..pairs.len()).map(|i| i.to_string()).collect();
    evaluate_named(&ids, pairs, bg_id, IouOptions::default())
}

pub fn evaluate_named(
    ids: &[String],
    pairs: &[(Vec<usize>, Vec<usize>)],
    bg_id: usize,
    opts: IouOptions,
) -> Result<EvalReport> {
    ensure!(ids.len() == pairs.len(), "one id per video required");
    let mut per_video = Vec::with_capacity(pairs.len());
    let mut counts = EvalCounts::default();
    let (mut hits, mut fg_hits) = (0usize, 0usize);
    let mut all_scores = Vec::new();
    for (id, (pred, gt)) in ids.iter().zip(pairs) {
        let m = mof(pred, gt)?;
        let (fh, ft) = mof_bg_counts(pred, gt, bg_id)?;
        let scores = segment_scores(&labels_to_segments(pred)?, &labels_to_segments(gt)?, bg_id, opts)?;
        let (iou, iod) = mean_scores(&scores);
        hits += pred.iter().zip(gt.iter()).filter(|(p, g)| p == g).count();
        fg_hits += fh;
        counts.frames += gt.len();
        counts.fg_frames += ft;
        counts.segments += scores.len();
        if ft == 0 {
            counts.vacuous_bg_videos += 1;
        }
        all_scores.extend(scores.iter().copied());
        per_video.push(VideoMetrics {
            video: id.clone(),
            mof: m,
            mof_bg: if ft == 0 { 1.0 } else { fh as f64 / ft as f64 },
            iou,
            iod,
            frames: gt.len(),
            fg_frames: ft,
            segments: scores.len(),
        });
    }
    let ratio = |a: usize, b: usize| if b == 0 { 1.0 } else { a as f64 / b as f64 };
    let (iou, iod) = mean_scores(&all_scores);
    Ok(EvalReport {
        mof: ratio(hits, counts.frames),
        mof_bg: ratio(fg_hits, counts.fg_frames),
        iou,
        iod,
        per_video,
        counts,
    })
}

impl EvalReport {
    /// One row per video plus a final `corpus` row.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "video,mof,mof_bg,iou,iod,frames,fg_frames,segments")?;
        for v in &self.per_video {
            writeln!(
                w,
                "{},{:.6},{:.6},{:.6},{:.6},{},{},{}",
                v.video, v.mof, v.mof_bg, v.iou, v.iod, v.frames, v.fg_frames, v.segments
            )?;
        }
        writeln!(
            w,
            "corpus,{:.6},{:.6},{:.6},{:.6},{},{},{}",
            self.mof, self.mof_bg, self.iou, self.iod, self.counts.frames, self.counts.fg_frames, self.counts.segments
        )
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<8} {:>8} {:>8} {:>8} {:>8}", "", "MoF", "MoF-bg", "IoU", "IoD");
        let _ = writeln!(
            s,
            "{:<8} {:>8.2} {:>8.2} {:>8.2} {:>8.2}",
            "corpus",
            100.0 * self.mof,
            100.0 * self.mof_bg,
            100.0 * self.iou,
            100.0 * self.iod
        );
        let _ = writeln!(
            s,
            "videos {}, frames {}, foreground frames {}, scored segments {}",
            self.per_video.len(),
            self.counts.frames,
            self.counts.fg_frames,
            self.counts.segments
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Segment;
    use proptest::prelude::*;

    const A: usize = 1;
    const B: usize = 2;
    const BG: usize = 0;

    fn segs(v: &[(usize, usize, usize)]) -> SegmentList {
        SegmentList::new(
            v.iter()
                .map(|&(class_id, start, end)| Segment { class_id, start, end })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn mof_examples() {
        assert_eq!(mof(&[A, B, A], &[A, B, A]).unwrap(), 1.0);
        assert_eq!(mof(&[A, A], &[B, B]).unwrap(), 0.0);
        assert_eq!(mof(&[A, A, B, B], &[A, B, B, B]).unwrap(), 0.75);
        assert!(mof(&[A], &[A, A]).is_err());
    }

    #[test]
    fn mof_bg_examples() {
        assert_eq!(mof_bg(&[A, A], &[BG, BG], BG).unwrap(), 1.0);
        assert_eq!(mof_bg_counts(&[A, A], &[BG, BG], BG).unwrap(), (0, 0));
        assert_eq!(mof_bg(&[A, B, BG], &[A, B, BG], BG).unwrap(), 1.0);
        assert_eq!(mof_bg(&[BG, A, A, B], &[BG, A, B, B], BG).unwrap(), 2.0 / 3.0);
        assert!(mof_bg(&[A], &[], BG).is_err());
    }

    #[test]
    fn iou_examples() {
        let gt = segs(&[(A, 0, 4)]);
        assert_eq!(iou_iod(&gt, &gt, BG).unwrap(), (1.0, 1.0));
        assert_eq!(iou_iod(&segs(&[(A, 0, 2), (B, 2, 4)]), &gt, BG).unwrap(), (0.5, 1.0));
        assert_eq!(iou_iod(&segs(&[(B, 0, 4)]), &gt, BG).unwrap(), (0.0, 0.0));
        assert!(iou_iod(&segs(&[(A, 0, 3)]), &gt, BG).is_err());
    }

    #[test]
    fn best_match_and_tie() {
        // gt A spans 0..6; predicted A pieces 0..2 and 3..6; the larger wins.
        let gt = segs(&[(A, 0, 6), (BG, 6, 8)]);
        let pred = segs(&[(A, 0, 2), (B, 2, 3), (A, 3, 6), (BG, 6, 8)]);
        let (iou, iod) = iou_iod(&pred, &gt, BG).unwrap();
        assert_eq!((iou, iod), (3.0 / 6.0, 1.0));
        // Equal intersections: earliest candidate is used.
        let gt = segs(&[(A, 0, 4)]);
        let pred = segs(&[(A, 0, 2), (B, 2, 3), (A, 3, 4)]);
        let s = segment_scores(&pred, &gt, BG, IouOptions::default()).unwrap();
        assert_eq!(s[0].iou, 0.5);
        let pred = segs(&[(A, 0, 1), (B, 1, 2), (A, 2, 3), (B, 3, 4)]);
        let s = segment_scores(&pred, &gt, BG, IouOptions::default()).unwrap();
        assert_eq!((s[0].iou, s[0].iod), (0.25, 1.0));
    }

    #[test]
    fn background_excluded_unless_asked() {
        let gt = segs(&[(BG, 0, 2), (A, 2, 4)]);
        let pred = segs(&[(A, 0, 4)]);
        assert_eq!(segment_scores(&pred, &gt, BG, IouOptions::default()).unwrap().len(), 1);
        let with_bg = segment_scores(&pred, &gt, BG, IouOptions { include_background: true }).unwrap();
        assert_eq!(with_bg.len(), 2);
        assert_eq!(with_bg[0].iou, 0.0);
    }

    #[test]
    fn corpus_pooling() {
        let pairs = vec![(vec![A, A, B, B], vec![A, B, B, B])];
        let r = evaluate_corpus(&pairs, BG).unwrap();
        let v = &r.per_video[0];
        assert_eq!((r.mof, r.mof_bg, r.iou, r.iod), (v.mof, v.mof_bg, v.iou, v.iod));

        let twice = vec![pairs[0].clone(), pairs[0].clone()];
        let r2 = evaluate_corpus(&twice, BG).unwrap();
        assert_eq!((r2.mof, r2.iou, r2.iod), (v.mof, v.iou, v.iod));

        let uneven = vec![
            (vec![A, A, B, B, B, A], vec![A, A, A, B, B, B]),
            (vec![B, BG], vec![B, B]),
        ];
        let r3 = evaluate_corpus(&uneven, BG).unwrap();
        let mut hits = 0;
        let mut total = 0;
        for (p, g) in &uneven {
            for i in 0..g.len() {
                hits += usize::from(p[i] == g[i]);
                total += 1;
            }
        }
        assert_eq!(r3.mof, hits as f64 / total as f64);
        assert_eq!(r3.counts.frames, 8);
    }

    #[test]
    fn csv_rows() {
        let pairs = vec![(vec![A, A], vec![A, A]), (vec![B], vec![A])];
        let r = evaluate_corpus(&pairs, BG).unwrap();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + pairs.len() + 1);
        assert!(text.lines().last().unwrap().starts_with("corpus,"));
        assert!(r.to_table().contains("MoF"));
    }

    fn random_labels() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
        (1usize..40).prop_flat_map(|t| {
            (
                proptest::collection::vec(0usize..4, t),
                proptest::collection::vec(0usize..4, t),
            )
        })
    }

    proptest! {
        #[test]
        fn iod_at_least_iou((pred, gt) in random_labels()) {
            let s = segment_scores(&labels_to_segments(&pred).unwrap(), &labels_to_segments(&gt).unwrap(), BG, IouOptions::default()).unwrap();
            for sc in s {
                prop_assert!(sc.iod >= sc.iou);
                prop_assert!((0.0..=1.0).contains(&sc.iou));
            }
        }

        #[test]
        fn permutation_invariance((pred, gt) in random_labels(), perm_seed in 0usize..24) {
            // Permute ids while keeping background fixed at 0.
            let perms = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
            let p = perms[perm_seed % 6];
            let map = |u: usize| if u == 0 { 0 } else { p[u - 1] };
            let pp: Vec<usize> = pred.iter().map(|&u| map(u)).collect();
            let gp: Vec<usize> = gt.iter().map(|&u| map(u)).collect();
            let a = evaluate_corpus(&[(pred, gt)], BG).unwrap();
            let b = evaluate_corpus(&[(pp, gp)], BG).unwrap();
            prop_assert_eq!((a.mof, a.mof_bg, a.iou, a.iod), (b.mof, b.mof_bg, b.iou, b.iod));
        }

        #[test]
        fn mof_bg_equals_mof_without_background(t in 1usize..30, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let pred: Vec<usize> = (0..t).map(|_| rng.gen_range(0..4)).collect();
            let gt: Vec<usize> = (0..t).map(|_| rng.gen_range(1..4)).collect();
            prop_assert_eq!(mof_bg(&pred, &gt, BG).unwrap(), mof(&pred, &gt).unwrap());
        }
    }
}
