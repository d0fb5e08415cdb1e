use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hal_core::config::ExperimentConfig;
use hal_core::experiment::{self, RunManifest};
use hal_core::net::HalModel;
use hal_core::{ingest, HalError, Result};

#[derive(Parser, Debug)]
#[command(name = "hal", version, about = "Hierarchical action learning experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Experiment config (JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Force single-threaded execution.
    #[arg(long, global = true)]
    deterministic: bool,

    /// Output directory; defaults to the config's paths.out_dir.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Checkpoint to load; defaults to <out>/model.safetensors.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,

    /// Dataset split to use.
    #[arg(long, global = true)]
    split: Option<String>,

    /// Decode by frame-wise argmax instead of aligning to the transcript.
    #[arg(long, global = true)]
    free_decode: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate the synthetic train and test splits.
    Synth,
    /// Train a model on the train split.
    Train,
    /// Evaluate a checkpoint on a split.
    Eval,
    /// Measure latent identifiability on a synthetic split.
    Ident,
    /// Run the loss-switch grid.
    Ablate {
        /// Also sweep beta over the config's sensitivity_betas.
        #[arg(long)]
        sensitivity: bool,
    },
    /// Write timeline, smoothness and embedding CSVs.
    Plot,
    /// Convert a raw little-endian float32 dump to HSEQ.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        output: PathBuf,
    },
}

const CHECKPOINT: &str = "model.safetensors";
const LAST_GOOD: &str = "last_good.safetensors";
const MANIFEST: &str = "manifest.json";

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                HalError::Validation(_) | HalError::Json(_) => 2,
                HalError::Numerical(_) => 3,
                HalError::Io { .. } => 1,
            })
        }
    }
}

fn load_config(cli: &Cli) -> Result<ExperimentConfig> {
    match &cli.config {
        Some(p) => ExperimentConfig::load(p),
        None => Err(HalError::validation("--config is required for this command")),
    }
}

fn out_dir(cli: &Cli, cfg: &ExperimentConfig) -> PathBuf {
    cli.out.clone().unwrap_or_else(|| cfg.paths.out_dir.clone())
}

/// Checkpoint plus the config to run it with. An explicit --config wins over
/// the snapshot stored in the checkpoint.
fn load_model(cli: &Cli) -> Result<(HalModel, ExperimentConfig, PathBuf)> {
    let explicit = cli.config.as_ref().map(|p| ExperimentConfig::load(p)).transpose()?;
    let out_guess = cli
        .out
        .clone()
        .or_else(|| explicit.as_ref().map(|c| c.paths.out_dir.clone()))
        .ok_or_else(|| HalError::validation("need --out, --config or --checkpoint"))?;
    let ckpt = cli.checkpoint.clone().unwrap_or_else(|| out_guess.join(CHECKPOINT));
    let (model, stored) = HalModel::load(&ckpt)?;
    let cfg = explicit.unwrap_or(stored);
    let out = cli.out.clone().unwrap_or_else(|| cfg.paths.out_dir.clone());
    Ok((model, cfg, out))
}

fn write_with<F>(path: &Path, f: F) -> Result<()>
where
    F: FnOnce(&mut Vec<u8>) -> std::io::Result<()>,
{
    let mut buf = Vec::new();
    f(&mut buf).map_err(|e| HalError::io(format!("formatting {}", path.display()), e))?;
    ingest::write_atomic(path, &buf)
}

fn update_manifest(out: &Path, f: impl FnOnce(&mut RunManifest)) -> Result<()> {
    let path = out.join(MANIFEST);
    if path.exists() {
        let mut m = RunManifest::load(&path)?;
        f(&mut m);
        m.save(&path)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    let threads = experiment::configure_threads(cli.deterministic);
    match &cli.command {
        Command::Synth => {
            let cfg = load_config(cli)?;
            let dir = cli.out.clone().unwrap_or_else(|| cfg.paths.data_dir.clone());
            let (train, test) = experiment::synthesize(&cfg, &dir)?;
            println!("wrote {} and {}", train.display(), test.display());
        }
        Command::Train => {
            let cfg = load_config(cli)?;
            let out = out_dir(cli, &cfg);
            let split = cli.split.as_deref().unwrap_or("train");
            let (videos, map) = experiment::load_split_videos(&cfg.paths.data_dir, split, &cfg)?;
            log::info!("training on {} videos, {} classes, {threads} thread(s)", videos.len(), map.len());
            match experiment::train(&cfg, &videos, map.len()) {
                Ok(outcome) => {
                    let ckpt = out.join(CHECKPOINT);
                    outcome.model.save(&ckpt, &cfg)?;
                    write_with(&out.join("losses.csv"), |b| experiment::write_losses_csv(&outcome.losses, b))?;
                    let mut manifest = RunManifest::new(&cfg, threads, outcome.model.params().num_scalars());
                    manifest.losses = outcome.losses;
                    manifest.checkpoint = Some(ckpt.clone());
                    manifest.save(&out.join(MANIFEST))?;
                    println!("wrote {}", ckpt.display());
                }
                Err((e, last_good)) => {
                    if let Some(model) = last_good {
                        let path = out.join(LAST_GOOD);
                        model.save(&path, &cfg)?;
                        eprintln!("saved last good parameters to {}", path.display());
                    }
                    return Err(e);
                }
            }
        }
        Command::Eval => {
            let (model, cfg, out) = load_model(cli)?;
            let split = cli.split.as_deref().unwrap_or("test");
            let (videos, map) = experiment::load_split_videos(&cfg.paths.data_dir, split, &cfg)?;
            experiment::check_class_count(&model, &map)?;
            let report = experiment::evaluate(&model, &videos, &cfg, cli.free_decode)?;
            let name = if cli.free_decode { "eval_free.csv" } else { "eval.csv" };
            let path = out.join(name);
            write_with(&path, |b| report.write_csv(b))?;
            if !cli.free_decode {
                update_manifest(&out, |m| {
                    m.eval_report = Some(path.clone());
                    m.metrics = Some((&report).into());
                })?;
            }
            print!("{}", report.to_table());
        }
        Command::Ident => {
            let (model, cfg, out) = load_model(cli)?;
            let split = cli.split.as_deref().unwrap_or("test");
            let (videos, _) = experiment::load_split_videos(&cfg.paths.data_dir, split, &cfg)?;
            let report = experiment::identify(&model, &videos, &cfg)?;
            let path = out.join("ident.csv");
            write_with(&path, |b| report.write_csv(b))?;
            update_manifest(&out, |m| {
                m.ident_report = Some(path.clone());
                m.ident = Some(report.clone());
            })?;
            for (k, v) in hal_core::identcheck::IdentReport::FIELDS.iter().zip(report.values()) {
                println!("{k:<22} {v:.4}");
            }
        }
        Command::Ablate { sensitivity } => {
            let cfg = load_config(cli)?;
            let out = out_dir(cli, &cfg);
            let (train, map) = experiment::load_split_videos(&cfg.paths.data_dir, "train", &cfg)?;
            let (test, _) = experiment::load_split_videos(&cfg.paths.data_dir, "test", &cfg)?;
            let runs = experiment::ablate(&cfg, &train, &test, map.len(), &cfg.ablation.rows, &cfg.ablation.seeds)?;
            let path = out.join("ablation.csv");
            write_with(&path, |b| experiment::write_ablation_csv(&runs, b))?;
            ingest::write_atomic(&out.join("ablation_runs.json"), serde_json::to_string_pretty(&runs)?.as_bytes())?;
            println!("wrote {}", path.display());
            if *sensitivity {
                let rows = experiment::beta_sensitivity(&cfg, &train, &test, map.len())?;
                let path = out.join("sensitivity.csv");
                write_with(&path, |b| {
                    use std::io::Write;
                    writeln!(b, "beta,MoF,IoU,IoD")?;
                    for (beta, m) in &rows {
                        writeln!(b, "{beta},{:.4},{:.4},{:.4}", m.mof, m.iou, m.iod)?;
                    }
                    Ok(())
                })?;
                println!("wrote {}", path.display());
            }
        }
        Command::Plot => {
            let (model, cfg, out) = load_model(cli)?;
            let split = cli.split.as_deref().unwrap_or("test");
            let (videos, map) = experiment::load_split_videos(&cfg.paths.data_dir, split, &cfg)?;
            experiment::check_class_count(&model, &map)?;
            let result = experiment::write_plot_data(&model, &videos, &cfg, &out)?;
            for m in &result.missing {
                eprintln!("missing: {m}");
            }
            println!("wrote {} files under {}", result.written.len(), out.display());
        }
        Command::Convert { input, dim, output } => {
            let x = ingest::convert_raw(input, *dim, output)?;
            println!("wrote {} ({} frames x {})", output.display(), x.len(), x.dim());
        }
    }
    Ok(())
}
