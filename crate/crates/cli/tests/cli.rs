use std::path::Path;
use std::process::{Command, Output};

use hal_core::config::ExperimentConfig;
use hal_core::experiment::RunManifest;

fn hal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hal"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = hal(args);
    assert!(out.status.success(), "hal {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn write_small_config(dir: &Path, tweak: impl FnOnce(&mut ExperimentConfig)) -> String {
    let mut cfg = ExperimentConfig::default();
    cfg.synth.train_count = 4;
    cfg.synth.test_count = 3;
    cfg.synth.frames = 24;
    cfg.synth.segments = 3;
    cfg.synth.min_segment_len = 4;
    cfg.hidden_width = 16;
    cfg.epochs = 1;
    cfg.paths.data_dir = dir.join("data");
    cfg.paths.out_dir = dir.join("out");
    tweak(&mut cfg);
    let path = dir.join("config.json");
    std::fs::write(&path, cfg.to_json()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn full_command_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_small_config(dir.path(), |_| {});
    ok(&["synth", "--config", &cfg]);
    ok(&["train", "--config", &cfg, "--deterministic"]);
    let out = dir.path().join("out");
    assert!(out.join("model.safetensors").exists());
    let losses = std::fs::read_to_string(out.join("losses.csv")).unwrap();
    assert_eq!(losses.lines().count(), 2);

    ok(&["eval", "--config", &cfg]);
    let eval = std::fs::read_to_string(out.join("eval.csv")).unwrap();
    // One row per video plus the corpus row, under a header.
    assert_eq!(eval.lines().count(), 1 + 3 + 1);
    ok(&["eval", "--config", &cfg, "--free-decode"]);
    assert!(out.join("eval_free.csv").exists());

    let table = ok(&["ident", "--config", &cfg]);
    assert!(table.contains("r2_c_from_chat"));
    let manifest = RunManifest::load(&out.join("manifest.json")).unwrap();
    assert!(manifest.metrics.is_some() && manifest.ident.is_some());
    assert_eq!(manifest.threads, 1);

    ok(&["plot", "--config", &cfg]);
    let timelines: Vec<_> = std::fs::read_dir(&out)
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().starts_with("timeline_"))
        .collect();
    assert_eq!(timelines.len(), 3);
    let text = std::fs::read_to_string(timelines[0].path()).unwrap();
    assert!(text.starts_with("frame,gt,pred,pred_visual_only"));
    assert_eq!(text.lines().count(), 1 + 24);
}

#[test]
fn untrained_checkpoint_and_switched_off_terms() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_small_config(dir.path(), |c| c.epochs = 0);
    ok(&["synth", "--config", &cfg]);
    ok(&["train", "--config", &cfg]);
    let out = dir.path().join("out");
    assert!(out.join("model.safetensors").exists());
    ok(&["eval", "--config", &cfg]);

    let cfg = write_small_config(dir.path(), |c| {
        c.set_switches(hal_core::config::Switches::table_row(1).unwrap());
    });
    ok(&["train", "--config", &cfg]);
    let m = RunManifest::load(&out.join("manifest.json")).unwrap();
    assert!(m.losses.iter().all(|l| l.total == l.ly));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(hal(&["train"]).status.code(), Some(2));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"alpha": 1.0, "not_a_field": 3}"#).unwrap();
    assert_eq!(hal(&["train", "--config", bad.to_str().unwrap()]).status.code(), Some(2));

    let negative = dir.path().join("neg.json");
    std::fs::write(&negative, r#"{"beta": -1.0}"#).unwrap();
    assert_eq!(hal(&["train", "--config", negative.to_str().unwrap()]).status.code(), Some(2));

    let cfg = write_small_config(dir.path(), |_| {});
    assert_eq!(hal(&["train", "--config", &cfg]).status.code(), Some(1));
}

#[test]
fn convert_raw_dump() {
    let dir = tempfile::tempdir().unwrap();
    let raw = dir.path().join("x.raw");
    let values: Vec<f32> = (0..6).map(|i| i as f32 * 0.5).collect();
    std::fs::write(&raw, values.iter().flat_map(|v| v.to_le_bytes()).collect::<Vec<u8>>()).unwrap();
    let out = dir.path().join("x.hseq");
    ok(&["convert", "--input", raw.to_str().unwrap(), "--dim", "3", "--output", out.to_str().unwrap()]);
    let m = hal_core::ingest::read_matrix(&out).unwrap();
    assert_eq!(m.dim(), (2, 3));
    assert_eq!(m[[1, 2]], 2.5);
    assert_eq!(
        hal(&["convert", "--input", raw.to_str().unwrap(), "--dim", "4", "--output", out.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
