//! Training loop, evaluation, identifiability runs, ablation grids and
//! plot-data emission. The CLI is a thin wrapper around these functions.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use ndarray::Array2;
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::align::{boundary_mask, pseudo_labels, viterbi_align};
use crate::config::{ExperimentConfig, Switches};
use crate::error::{ensure, HalError, Result};
use crate::identcheck::{export_embedding, ident_report, probe_predict, EmbeddingMethod, IdentReport, IdentSequence};
use crate::ingest::{self, ClassMap, Video};
use crate::metrics::{evaluate_named, EvalReport, IouOptions};
use crate::net::{aux_action_recon_on_graph, HalModel, ModelConfig, Mode};
use crate::objective::{
    classifier_loss_on_graph, smoothness_loss, smoothness_on_graph, total_loss_on_graph, LossWeights, TotalLossInputs,
};
use crate::optim::{AdamW, AdamWConfig};
use crate::seed::{derive_seed, stream_rng};
use crate::synthgen::generate_dataset;
use crate::tape::Graph;
use crate::types::{labels_to_segments, PosteriorMatrix, Transcript};

/// Mean of each loss term over the sequences of one epoch.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EpochLosses {
    pub epoch: usize,
    pub ly: f64,
    pub recon: f64,
    pub aux: f64,
    pub kl_v: f64,
    pub kl_c: f64,
    pub term_i: f64,
    pub term_ii: f64,
    pub total: f64,
}

impl EpochLosses {
    fn add(&mut self, o: &EpochLosses) {
        self.ly += o.ly;
        self.recon += o.recon;
        self.aux += o.aux;
        self.kl_v += o.kl_v;
        self.kl_c += o.kl_c;
        self.term_i += o.term_i;
        self.term_ii += o.term_ii;
        self.total += o.total;
    }

    fn scale(&mut self, k: f64) {
        self.ly *= k;
        self.recon *= k;
        self.aux *= k;
        self.kl_v *= k;
        self.kl_c *= k;
        self.term_i *= k;
        self.term_ii *= k;
        self.total *= k;
    }
}

pub fn write_losses_csv<W: Write>(losses: &[EpochLosses], mut w: W) -> std::io::Result<()> {
    writeln!(w, "epoch,ly,recon,aux,kl_v,kl_c,term_i,term_ii,total")?;
    for l in losses {
        writeln!(
            w,
            "{},{:.9},{:.9},{:.9},{:.9},{:.9},{:.9},{:.9},{:.9}",
            l.epoch, l.ly, l.recon, l.aux, l.kl_v, l.kl_c, l.term_i, l.term_ii, l.total
        )?;
    }
    Ok(())
}

/// Labels from cutting `t` frames into `transcript.len()` near-equal parts.
pub fn uniform_split_labels(t: usize, transcript: &Transcript) -> Vec<usize> {
    let m = transcript.len();
    (0..t)
        .map(|f| transcript.entries()[(f * m / t).min(m - 1)])
        .collect()
}

fn boundaries_of(labels: &[usize]) -> Vec<usize> {
    (1..labels.len()).filter(|&i| labels[i] != labels[i - 1]).collect()
}

/// Parameter state, optimizer and pseudo labels of one training run.
pub struct Trainer {
    pub cfg: ExperimentConfig,
    pub model: HalModel,
    opt: AdamW,
    weights: LossWeights,
    pseudo: Vec<(Vec<usize>, Vec<bool>)>,
    epoch: usize,
}

impl Trainer {
    pub fn new(cfg: &ExperimentConfig, videos: &[Video], num_classes: usize) -> Result<Self> {
        cfg.validate()?;
        for v in videos {
            ensure!(
                v.features.dim() == cfg.d,
                "video {} has feature width {}, config says d = {}",
                v.id,
                v.features.dim(),
                cfg.d
            );
            ensure!(
                v.transcript.entries().iter().all(|&u| u < num_classes),
                "video {} transcript uses a class outside 0..{num_classes}",
                v.id
            );
        }
        let model = HalModel::new(
            ModelConfig::from_experiment(cfg, num_classes),
            derive_seed(cfg.seed, "init", 0),
        )?;
        let opt = AdamW::new(
            AdamWConfig {
                lr: cfg.learning_rate,
                weight_decay: cfg.weight_decay,
                clip_norm: Some(cfg.grad_clip),
                ..AdamWConfig::default()
            },
            model.params().values(),
        );
        let pseudo = videos
            .iter()
            .map(|v| {
                let labels = uniform_split_labels(v.features.len(), &v.transcript);
                let mask = boundary_mask(labels.len(), &boundaries_of(&labels), cfg.boundary_margin);
                (labels, mask)
            })
            .collect();
        Ok(Self {
            cfg: cfg.clone(),
            model,
            opt,
            weights: LossWeights::from_config(cfg),
            pseudo,
            epoch: 0,
        })
    }

    pub fn epoch(&self) -> usize {
        self.epoch
    }

    pub fn pseudo_labels(&self) -> &[(Vec<usize>, Vec<bool>)] {
        &self.pseudo
    }

    /// Re-decodes pseudo labels from the current classifier.
    pub fn refresh_pseudo_labels(&mut self, videos: &[Video]) -> Result<()> {
        for (v, slot) in videos.iter().zip(self.pseudo.iter_mut()) {
            let out = self.model.forward(&v.features, Mode::Eval)?;
            let post = self.model.classify(&out.mu_c)?;
            *slot = pseudo_labels(&post, &v.transcript, self.cfg.min_segment_len, self.cfg.boundary_margin)?;
        }
        Ok(())
    }

    /// KL weight multiplier for the current epoch.
    pub fn kl_warmup(&self) -> f64 {
        let w = self.cfg.kl_warmup_epochs;
        if w == 0 {
            1.0
        } else {
            (self.epoch as f64 / w as f64).min(1.0)
        }
    }

    /// One gradient step on one sequence; returns the loss terms.
    pub fn step(&mut self, video: &Video, index: usize, sample_seed: u64) -> Result<EpochLosses> {
        let mut g = Graph::new();
        let bound = self.model.bind(&mut g);
        let f = self
            .model
            .forward_on_graph(&mut g, &bound, &video.features, Mode::Train { sample_seed })?;
        let elbo = self.model.elbo_on_graph(&mut g, &bound, &f);
        let aux = aux_action_recon_on_graph(&mut g, f.v_hat, f.v_prime);
        let recon = g.add(elbo.recon, aux);
        let smooth = smoothness_on_graph(&mut g, f.mu_c, f.mu_v, self.cfg.delta)?;
        let (labels, mask) = &self.pseudo[index];
        // L_y is taken on the posterior mean, the same input used at inference.
        let logits = self.model.logits_on_graph(&mut g, &bound, f.mu_c);
        let ly = classifier_loss_on_graph(&mut g, logits, labels, mask)?;
        let warm = self.kl_warmup();
        let (kl_v, kl_c) = if warm < 1.0 {
            (g.scale(elbo.kl_v, warm), g.scale(elbo.kl_c, warm))
        } else {
            (elbo.kl_v, elbo.kl_c)
        };
        let total = total_loss_on_graph(
            &mut g,
            &TotalLossInputs {
                ly,
                recon,
                kl_v,
                kl_c,
                term_i: smooth.term_i,
                term_ii: smooth.term_ii,
            },
            &self.weights,
        );
        let losses = EpochLosses {
            epoch: self.epoch,
            ly: g.scalar_value(ly),
            recon: g.scalar_value(elbo.recon),
            aux: g.scalar_value(aux),
            kl_v: g.scalar_value(elbo.kl_v),
            kl_c: g.scalar_value(elbo.kl_c),
            term_i: g.scalar_value(smooth.term_i),
            term_ii: g.scalar_value(smooth.term_ii),
            total: g.scalar_value(total),
        };
        if !losses.total.is_finite() {
            return Err(HalError::numerical(format!(
                "nonfinite loss at epoch {} on sequence {}",
                self.epoch, video.id
            )));
        }
        let grads = g.backward(total);
        let grads = bound.gradients(&grads, self.model.params());
        if grads.iter().any(|m| m.iter().any(|v| !v.is_finite())) {
            return Err(HalError::numerical(format!(
                "nonfinite gradient at epoch {} on sequence {}",
                self.epoch, video.id
            )));
        }
        self.opt.step(self.model.params_mut().values_mut(), &grads);
        Ok(losses)
    }

    /// Runs one epoch over `videos` in seeded random order.
    pub fn run_epoch(&mut self, videos: &[Video]) -> Result<EpochLosses> {
        ensure!(videos.len() == self.pseudo.len(), "video count changed between epochs");
        if self.epoch > 0 && self.cfg.refresh_every > 0 && self.epoch.is_multiple_of(self.cfg.refresh_every) {
            self.refresh_pseudo_labels(videos)?;
        }
        let mut order: Vec<usize> = (0..videos.len()).collect();
        order.shuffle(&mut stream_rng(self.cfg.seed, "order", self.epoch as u64));
        let mut sum = EpochLosses::default();
        for (k, &i) in order.iter().enumerate() {
            let sample_seed = derive_seed(self.cfg.seed, "sample", (self.epoch * videos.len() + k) as u64);
            let l = self.step(&videos[i], i, sample_seed)?;
            sum.add(&l);
        }
        if !videos.is_empty() {
            sum.scale(1.0 / videos.len() as f64);
        }
        sum.epoch = self.epoch;
        self.epoch += 1;
        Ok(sum)
    }
}

pub struct TrainOutcome {
    pub model: HalModel,
    pub losses: Vec<EpochLosses>,
}

/// Trains for `cfg.epochs` epochs. On failure the error is returned together
/// with the last parameter state that produced finite losses.
pub fn train(cfg: &ExperimentConfig, videos: &[Video], num_classes: usize) -> std::result::Result<TrainOutcome, (HalError, Option<HalModel>)> {
    let mut trainer = Trainer::new(cfg, videos, num_classes).map_err(|e| (e, None))?;
    let mut losses = Vec::with_capacity(cfg.epochs);
    for _ in 0..cfg.epochs {
        let last_good = trainer.model.clone();
        match trainer.run_epoch(videos) {
            Ok(l) => {
                log::info!(
                    "epoch {:>3}  total {:.4}  ly {:.4}  recon {:.4}  kl_v {:.4}  kl_c {:.4}  ls {:.4}/{:.4}",
                    l.epoch,
                    l.total,
                    l.ly,
                    l.recon,
                    l.kl_v,
                    l.kl_c,
                    l.term_i,
                    l.term_ii
                );
                losses.push(l);
            }
            Err(e) => return Err((e, Some(last_good))),
        }
    }
    Ok(TrainOutcome {
        model: trainer.model,
        losses,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub labels: Vec<usize>,
    pub posteriors: PosteriorMatrix,
    pub chat: Array2<f64>,
    pub vhat: Array2<f64>,
}

/// Eval-mode forward, classification and decoding. Decoding follows the
/// transcript unless `free_decode` is set, in which case it is a frame-wise
/// argmax.
pub fn predict(model: &HalModel, video: &Video, min_segment_len: usize, free_decode: bool) -> Result<Prediction> {
    let out = model.forward(&video.features, Mode::Eval)?;
    let posteriors = model.classify(&out.mu_c)?;
    let labels = if free_decode {
        posteriors.argmax_labels()
    } else {
        viterbi_align(&posteriors, &video.transcript, min_segment_len)?.labels
    };
    Ok(Prediction {
        labels,
        posteriors,
        chat: out.mu_c,
        vhat: out.mu_v,
    })
}

pub fn check_class_count(model: &HalModel, map: &ClassMap) -> Result<()> {
    ensure!(
        model.config().num_classes == map.len(),
        "checkpoint has {} classes but the split mapping has {}",
        model.config().num_classes,
        map.len()
    );
    Ok(())
}

pub fn evaluate(model: &HalModel, videos: &[Video], cfg: &ExperimentConfig, free_decode: bool) -> Result<EvalReport> {
    let mut ids = Vec::with_capacity(videos.len());
    let mut pairs = Vec::with_capacity(videos.len());
    for v in videos {
        let p = predict(model, v, cfg.inference_min_segment_len, free_decode)?;
        ids.push(v.id.clone());
        pairs.push((p.labels, v.labels.clone()));
    }
    evaluate_named(&ids, &pairs, cfg.bg_id, IouOptions::default())
}

pub fn identify(model: &HalModel, videos: &[Video], cfg: &ExperimentConfig) -> Result<IdentReport> {
    let mut seqs = Vec::with_capacity(videos.len());
    for v in videos {
        let lat = v
            .latents
            .as_ref()
            .ok_or_else(|| HalError::validation("identifiability requires synthetic data"))?;
        let out = model.forward(&v.features, Mode::Eval)?;
        seqs.push(IdentSequence {
            chat: out.mu_c,
            vhat: out.mu_v,
            c_true: lat.action.clone(),
            v_true: lat.visual.clone(),
            raw: v.features.frames().clone(),
            labels: v.labels.clone(),
        });
    }
    ident_report(&seqs, cfg.identcheck_max_samples, cfg.seed)
}

/// Generates the synthetic train and test splits under `dir`.
pub fn synthesize(cfg: &ExperimentConfig, dir: &Path) -> Result<(PathBuf, PathBuf)> {
    cfg.validate()?;
    let spec = cfg.generator_spec();
    let map = ClassMap::new(cfg.synth.class_names.clone())?;
    let train = generate_dataset(&spec, cfg.synth.train_count, &cfg.synth.class_inventory, "train")?;
    let test = generate_dataset(&spec, cfg.synth.test_count, &cfg.synth.class_inventory, "test")?;
    let a = ingest::write_synthetic_split(dir, "train", &train, &map)?;
    let b = ingest::write_synthetic_split(dir, "test", &test, &map)?;
    Ok((a, b))
}

pub fn load_split_videos(dir: &Path, split: &str, cfg: &ExperimentConfig) -> Result<(Vec<Video>, ClassMap)> {
    let index = ingest::load_split(&ingest::index_path(dir, split))?;
    let videos = ingest::load_videos(&index, cfg.allow_repeats, cfg.strict_lengths)?;
    Ok((videos, index.class_map))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricSummary {
    pub mof: f64,
    pub mof_bg: f64,
    pub iou: f64,
    pub iod: f64,
}

impl From<&EvalReport> for MetricSummary {
    fn from(r: &EvalReport) -> Self {
        Self {
            mof: r.mof,
            mof_bg: r.mof_bg,
            iou: r.iou,
            iod: r.iod,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub config: ExperimentConfig,
    pub source_revision: String,
    pub seeds: BTreeMap<String, u64>,
    pub threads: usize,
    pub parameters: usize,
    pub losses: Vec<EpochLosses>,
    pub checkpoint: Option<PathBuf>,
    pub eval_report: Option<PathBuf>,
    pub ident_report: Option<PathBuf>,
    pub metrics: Option<MetricSummary>,
    pub ident: Option<IdentReport>,
}

pub fn source_revision() -> String {
    format!("hal-core {}", env!("CARGO_PKG_VERSION"))
}

impl RunManifest {
    pub fn new(cfg: &ExperimentConfig, threads: usize, parameters: usize) -> Self {
        let mut seeds = BTreeMap::new();
        seeds.insert("master".to_string(), cfg.seed);
        seeds.insert("init".to_string(), derive_seed(cfg.seed, "init", 0));
        seeds.insert("synth".to_string(), cfg.synth.seed);
        Self {
            config: cfg.clone(),
            source_revision: source_revision(),
            seeds,
            threads,
            parameters,
            losses: Vec::new(),
            checkpoint: None,
            eval_report: None,
            ident_report: None,
            metrics: None,
            ident: None,
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        ingest::write_atomic(path, serde_json::to_string_pretty(self)?.as_bytes())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| HalError::io(format!("reading {}", path.display()), e))?;
        Ok(serde_json::from_str(&text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AblationRun {
    pub exp: usize,
    pub seed: u64,
    pub switches: Switches,
    pub metrics: MetricSummary,
}

/// Trains and evaluates every requested switch row for every seed.
pub fn ablate(
    cfg: &ExperimentConfig,
    train_videos: &[Video],
    test_videos: &[Video],
    num_classes: usize,
    rows: &[usize],
    seeds: &[u64],
) -> Result<Vec<AblationRun>> {
    let mut out = Vec::new();
    for &exp in rows {
        let switches =
            Switches::table_row(exp).ok_or_else(|| HalError::validation(format!("ablation row {exp} is not in 1..=12")))?;
        for &seed in seeds {
            let mut c = cfg.clone();
            c.set_switches(switches);
            c.seed = seed;
            let outcome = train(&c, train_videos, num_classes).map_err(|(e, _)| e)?;
            let report = evaluate(&outcome.model, test_videos, &c, false)?;
            log::info!("EXP {exp} seed {seed}: MoF {:.4}", report.mof);
            out.push(AblationRun {
                exp,
                seed,
                switches,
                metrics: MetricSummary::from(&report),
            });
        }
    }
    Ok(out)
}

pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    let n = v.len();
    if n == 0 {
        f64::NAN
    } else if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// One row per EXP with the median over seeds.
pub fn write_ablation_csv<W: Write>(runs: &[AblationRun], mut w: W) -> std::io::Result<()> {
    writeln!(w, "EXP,L_r,L_s,L_KL,delta,MoF,IoU,IoD,seeds")?;
    let mut exps: Vec<usize> = runs.iter().map(|r| r.exp).collect();
    exps.dedup();
    let mark = |b: bool| if b { "x" } else { "" };
    for exp in exps {
        let rows: Vec<&AblationRun> = runs.iter().filter(|r| r.exp == exp).collect();
        let s = rows[0].switches;
        let med = |f: fn(&MetricSummary) -> f64| median(&rows.iter().map(|r| f(&r.metrics)).collect::<Vec<_>>());
        writeln!(
            w,
            "{exp},{},{},{},{},{:.4},{:.4},{:.4},{}",
            mark(s.use_lr),
            mark(s.use_ls),
            mark(s.use_lkl),
            mark(s.use_delta),
            med(|m| m.mof),
            med(|m| m.iou),
            med(|m| m.iod),
            rows.len()
        )?;
    }
    Ok(())
}

/// Trains one model per β in `cfg.sensitivity_betas` and reports test MoF.
pub fn beta_sensitivity(
    cfg: &ExperimentConfig,
    train_videos: &[Video],
    test_videos: &[Video],
    num_classes: usize,
) -> Result<Vec<(f64, MetricSummary)>> {
    let mut out = Vec::new();
    for &beta in &cfg.sensitivity_betas {
        let mut c = cfg.clone();
        c.beta = beta;
        let outcome = train(&c, train_videos, num_classes).map_err(|(e, _)| e)?;
        let report = evaluate(&outcome.model, test_videos, &c, false)?;
        out.push((beta, MetricSummary::from(&report)));
    }
    Ok(out)
}

/// Files produced by [`write_plot_data`] and artifacts that were missing.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PlotOutput {
    pub written: Vec<PathBuf>,
    pub missing: Vec<String>,
}

/// Timeline, smoothness and embedding CSVs for every video of a split.
///
/// `pred_visual_only` comes from a linear probe fitted on v̂ against the
/// split's ground truth, so it shows what the visual latent alone encodes.
pub fn write_plot_data(model: &HalModel, videos: &[Video], cfg: &ExperimentConfig, out: &Path) -> Result<PlotOutput> {
    let mut result = PlotOutput::default();
    let preds: Vec<Prediction> = videos
        .iter()
        .map(|v| predict(model, v, cfg.inference_min_segment_len, false))
        .collect::<Result<_>>()?;
    if videos.is_empty() {
        result.missing.push("videos".into());
        return Ok(result);
    }
    let vstack = ndarray::concatenate(ndarray::Axis(0), &preds.iter().map(|p| p.vhat.view()).collect::<Vec<_>>())
        .map_err(|e| HalError::validation(e.to_string()))?;
    let cstack = ndarray::concatenate(ndarray::Axis(0), &preds.iter().map(|p| p.chat.view()).collect::<Vec<_>>())
        .map_err(|e| HalError::validation(e.to_string()))?;
    let gt: Vec<usize> = videos.iter().flat_map(|v| v.labels.iter().copied()).collect();
    let visual_only = match probe_predict(&vstack, &gt, &vstack) {
        Ok(p) => Some(p),
        Err(e) => {
            result.missing.push(format!("pred_visual_only ({e})"));
            None
        }
    };
    let mut offset = 0;
    for (v, p) in videos.iter().zip(&preds) {
        let t = v.labels.len();
        let mut csv = String::from("frame,gt,pred,pred_visual_only\n");
        for f in 0..t {
            let vis = visual_only.as_ref().map_or(String::new(), |x| x[offset + f].to_string());
            csv.push_str(&format!("{f},{},{},{vis}\n", v.labels[f], p.labels[f]));
        }
        offset += t;
        let path = out.join(format!("timeline_{}.csv", v.id));
        ingest::write_atomic(&path, csv.as_bytes())?;
        result.written.push(path);

        if t >= 2 {
            let report = smoothness_loss(&p.chat, &p.vhat, cfg.delta)?;
            let mut buf = Vec::new();
            report
                .write_csv(&mut buf)
                .map_err(|e| HalError::io("formatting smoothness csv", e))?;
            let path = out.join(format!("smoothness_{}.csv", v.id));
            ingest::write_atomic(&path, &buf)?;
            result.written.push(path);
        }
    }
    for (name, m) in [("embedding_chat.csv", &cstack), ("embedding_vhat.csv", &vstack)] {
        if m.ncols() < 2 {
            result.missing.push(format!("{name} (latent width < 2)"));
            continue;
        }
        let emb = export_embedding(m, &gt, EmbeddingMethod::Pca)?;
        let mut buf = Vec::new();
        emb.write_csv(&mut buf).map_err(|e| HalError::io("formatting embedding csv", e))?;
        let path = out.join(name);
        ingest::write_atomic(&path, &buf)?;
        result.written.push(path);
    }
    Ok(result)
}


/// Checks that a timeline's gt column matches the loaded ground truth.
pub fn timeline_gt_segments(path: &Path) -> Result<crate::types::SegmentList> {
    let text = std::fs::read_to_string(path).map_err(|e| HalError::io(format!("reading {}", path.display()), e))?;
    let gt: Vec<usize> = text
        .lines()
        .skip(1)
        .map(|l| {
            l.split(',')
                .nth(1)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| HalError::validation(format!("bad timeline row {l:?}")))
        })
        .collect::<Result<_>>()?;
    labels_to_segments(&gt)
}

/// Sets up the global worker pool. Deterministic mode pins it to one thread.
/// Returns the thread count in effect.
pub fn configure_threads(deterministic: bool) -> usize {
    if deterministic {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    rayon::current_num_threads()
}
