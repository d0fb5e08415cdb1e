//! File formats and dataset loading.
//!
//! Features are stored as HSEQ: the ASCII magic `HSEQ`, `T` and `d` as
//! little-endian `u32`, then `T·d` little-endian `f32` values in frame-major
//! order. Labels and transcripts are text files with one class name per
//! line. A split is a tab-separated index next to a `mapping.txt` holding
//! `id name` lines.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use ndarray::Array2;

use crate::error::{ensure, HalError, Result};
use crate::synthgen::SyntheticSequence;
use crate::types::{FeatureSequence, LatentPair, Transcript};

pub const HSEQ_MAGIC: &[u8; 4] = b"HSEQ";
pub const HSEQ_HEADER_LEN: usize = 12;
pub const MAPPING_FILE: &str = "mapping.txt";

fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| HalError::io(format!("reading {}", path.display()), e))
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| HalError::io(format!("reading {}", path.display()), e))
}

/// Writes through a temporary sibling file and a rename.
pub fn write_atomic(path: &Path, data: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| HalError::io(format!("creating {}", parent.display()), e))?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, data).map_err(|e| HalError::io(format!("writing {}", tmp.display()), e))?;
    fs::rename(&tmp, path).map_err(|e| HalError::io(format!("renaming to {}", path.display()), e))
}

pub fn encode_hseq(m: &Array2<f64>) -> Vec<u8> {
    let (t, d) = m.dim();
    let mut out = Vec::with_capacity(HSEQ_HEADER_LEN + 4 * t * d);
    out.extend_from_slice(HSEQ_MAGIC);
    out.extend_from_slice(&(t as u32).to_le_bytes());
    out.extend_from_slice(&(d as u32).to_le_bytes());
    for v in m.iter() {
        out.extend_from_slice(&(*v as f32).to_le_bytes());
    }
    out
}

pub fn decode_hseq(bytes: &[u8]) -> Result<Array2<f64>> {
    if bytes.len() < 4 || &bytes[..4] != HSEQ_MAGIC {
        return Err(HalError::validation("not a HSEQ file"));
    }
    ensure!(bytes.len() >= HSEQ_HEADER_LEN, "truncated feature file");
    let t = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes")) as usize;
    let d = u32::from_le_bytes(bytes[8..12].try_into().expect("4 bytes")) as usize;
    let want = t
        .checked_mul(d)
        .and_then(|n| n.checked_mul(4))
        .and_then(|n| n.checked_add(HSEQ_HEADER_LEN));
    ensure!(
        want == Some(bytes.len()),
        "truncated feature file: header says {t}x{d}, file has {} bytes",
        bytes.len()
    );
    let mut values = Vec::with_capacity(t * d);
    for (i, chunk) in bytes[HSEQ_HEADER_LEN..].chunks_exact(4).enumerate() {
        let v = f32::from_le_bytes(chunk.try_into().expect("4 bytes"));
        if !v.is_finite() {
            return Err(HalError::validation(format!(
                "nonfinite value at index {i} (frame {}, dim {})",
                i / d.max(1),
                i % d.max(1)
            )));
        }
        values.push(f64::from(v));
    }
    Array2::from_shape_vec((t, d), values).map_err(|e| HalError::validation(e.to_string()))
}

pub fn read_matrix(path: &Path) -> Result<Array2<f64>> {
    decode_hseq(&read_bytes(path)?).map_err(|e| match e {
        HalError::Validation(msg) => HalError::Validation(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_matrix(path: &Path, m: &Array2<f64>) -> Result<()> {
    write_atomic(path, &encode_hseq(m))
}

pub fn read_features(path: &Path) -> Result<FeatureSequence> {
    FeatureSequence::new(read_matrix(path)?)
}

/// Values are stored as `f32`, so anything finer is rounded.
pub fn write_features(path: &Path, x: &FeatureSequence) -> Result<()> {
    write_matrix(path, x.frames())
}

/// Converts a headerless little-endian `f32` dump with known width to HSEQ.
pub fn convert_raw(raw_path: &Path, d: usize, out_path: &Path) -> Result<FeatureSequence> {
    ensure!(d >= 1, "convert: d must be positive");
    let bytes = read_bytes(raw_path)?;
    ensure!(
        !bytes.is_empty() && bytes.len() % (4 * d) == 0,
        "convert: {} has {} bytes, not a multiple of 4*{d}",
        raw_path.display(),
        bytes.len()
    );
    let t = bytes.len() / (4 * d);
    let mut with_header = Vec::with_capacity(HSEQ_HEADER_LEN + bytes.len());
    with_header.extend_from_slice(HSEQ_MAGIC);
    with_header.extend_from_slice(&(t as u32).to_le_bytes());
    with_header.extend_from_slice(&(d as u32).to_le_bytes());
    with_header.extend_from_slice(&bytes);
    let x = FeatureSequence::new(decode_hseq(&with_header)?)?;
    write_atomic(out_path, &with_header)?;
    Ok(x)
}

/// Bijection between class ids `0..n` and names; id 0 is background.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMap {
    names: Vec<String>,
    ids: HashMap<String, usize>,
}

impl ClassMap {
    pub fn new(names: Vec<String>) -> Result<Self> {
        ensure!(!names.is_empty(), "class map is empty");
        let mut ids = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            ensure!(!n.is_empty() && !n.contains(char::is_whitespace), "invalid class name {n:?}");
            ensure!(ids.insert(n.clone(), i).is_none(), "duplicate class name {n}");
        }
        Ok(Self { names, ids })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, id: usize) -> Option<&str> {
        self.names.get(id).map(String::as_str)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn background_name(&self) -> &str {
        &self.names[0]
    }
}

/// Parses `id name` lines; ids must be exactly `0..n` in any order.
pub fn parse_mapping(text: &str) -> Result<ClassMap> {
    let mut pairs = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (id, name) = match (parts.next(), parts.next(), parts.next()) {
            (Some(id), Some(name), None) => (id, name),
            _ => return Err(HalError::validation(format!("mapping line {}: expected `id name`", ln + 1))),
        };
        let id: usize = id
            .parse()
            .map_err(|_| HalError::validation(format!("mapping line {}: bad id {id:?}", ln + 1)))?;
        pairs.push((id, name.to_string()));
    }
    pairs.sort_by_key(|p| p.0);
    for (i, (id, _)) in pairs.iter().enumerate() {
        ensure!(*id == i, "mapping ids must be contiguous from 0; missing or repeated id near {i}");
    }
    ClassMap::new(pairs.into_iter().map(|p| p.1).collect())
}

pub fn read_mapping(path: &Path) -> Result<ClassMap> {
    parse_mapping(&read_text(path)?)
}

pub fn format_mapping(map: &ClassMap) -> String {
    map.names().iter().enumerate().map(|(i, n)| format!("{i} {n}\n")).collect()
}

/// Splits into lines, tolerating one trailing newline but no blank lines.
fn name_lines<'a>(text: &'a str, what: &str) -> Result<Vec<&'a str>> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let body = body.strip_suffix('\r').unwrap_or(body);
    ensure!(!body.is_empty(), "{what} file is empty");
    let mut out = Vec::new();
    for (ln, line) in body.split('\n').enumerate() {
        let line = line.strip_suffix('\r').unwrap_or(line).trim();
        ensure!(!line.is_empty(), "{what} file has a blank line at line {}", ln + 1);
        out.push(line);
    }
    Ok(out)
}

fn map_names(lines: &[&str], map: &ClassMap, what: &str) -> Result<Vec<usize>> {
    lines
        .iter()
        .enumerate()
        .map(|(ln, name)| {
            map.id(name).ok_or_else(|| {
                HalError::validation(format!("{what} line {}: unknown class name {name:?}", ln + 1))
            })
        })
        .collect()
}

pub fn parse_frame_labels(text: &str, map: &ClassMap) -> Result<Vec<usize>> {
    map_names(&name_lines(text, "label")?, map, "label")
}

pub fn read_frame_labels(path: &Path, map: &ClassMap) -> Result<Vec<usize>> {
    parse_frame_labels(&read_text(path)?, map)
        .map_err(|e| HalError::validation(format!("{}: {e}", path.display())))
}

pub fn parse_transcript(text: &str, map: &ClassMap, allow_repeats: bool) -> Result<Transcript> {
    Transcript::new(map_names(&name_lines(text, "transcript")?, map, "transcript")?, allow_repeats)
}

pub fn read_transcript(path: &Path, map: &ClassMap, allow_repeats: bool) -> Result<Transcript> {
    parse_transcript(&read_text(path)?, map, allow_repeats)
        .map_err(|e| HalError::validation(format!("{}: {e}", path.display())))
}

/// One class name per line with a trailing newline.
pub fn format_names(ids: &[usize], map: &ClassMap) -> Result<String> {
    let mut s = String::new();
    for &id in ids {
        let name = map
            .name(id)
            .ok_or_else(|| HalError::validation(format!("class id {id} not in mapping")))?;
        s.push_str(name);
        s.push('\n');
    }
    Ok(s)
}

pub fn write_frame_labels(path: &Path, ids: &[usize], map: &ClassMap) -> Result<()> {
    write_atomic(path, format_names(ids, map)?.as_bytes())
}

pub fn write_transcript(path: &Path, t: &Transcript, map: &ClassMap) -> Result<()> {
    write_atomic(path, format_names(t.entries(), map)?.as_bytes())
}

pub fn read_regimes(path: &Path) -> Result<Vec<usize>> {
    let text = read_text(path)?;
    name_lines(&text, "regimes")?
        .iter()
        .enumerate()
        .map(|(ln, s)| {
            s.parse()
                .map_err(|_| HalError::validation(format!("{} line {}: bad integer {s:?}", path.display(), ln + 1)))
        })
        .collect()
}

pub fn write_regimes(path: &Path, regimes: &[usize]) -> Result<()> {
    let text: String = regimes.iter().map(|r| format!("{r}\n")).collect();
    write_atomic(path, text.as_bytes())
}

/// Sidecar path next to a feature file, e.g. `vid.hseq` → `vid.lat.v`.
pub fn sidecar_path(features: &Path, suffix: &str) -> PathBuf {
    features.with_extension(suffix)
}

pub fn write_latents(features: &Path, latents: &LatentPair) -> Result<()> {
    write_matrix(&sidecar_path(features, "lat.v"), &latents.visual)?;
    write_matrix(&sidecar_path(features, "lat.c"), &latents.action)?;
    if let Some(r) = &latents.regimes {
        write_regimes(&sidecar_path(features, "regimes"), r)?;
    }
    Ok(())
}

/// Ground-truth latents if the sidecars exist.
pub fn read_latents(features: &Path) -> Result<Option<LatentPair>> {
    let vp = sidecar_path(features, "lat.v");
    let cp = sidecar_path(features, "lat.c");
    if !vp.exists() || !cp.exists() {
        return Ok(None);
    }
    let rp = sidecar_path(features, "regimes");
    let regimes = if rp.exists() { Some(read_regimes(&rp)?) } else { None };
    Ok(Some(LatentPair::new(read_matrix(&vp)?, read_matrix(&cp)?, regimes)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexEntry {
    pub video_id: String,
    pub features: PathBuf,
    pub labels: PathBuf,
    pub transcript: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetIndex {
    pub root: PathBuf,
    pub split: String,
    pub entries: Vec<IndexEntry>,
    pub class_map: ClassMap,
}

/// Loads `<split>.tsv` and the `mapping.txt` in the same directory.
pub fn load_split(index_path: &Path) -> Result<DatasetIndex> {
    let root = index_path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let split = index_path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("split")
        .to_string();
    let class_map = read_mapping(&root.join(MAPPING_FILE))?;
    let text = read_text(index_path)?;
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        ensure!(
            cols.len() == 4,
            "{} line {}: expected 4 tab-separated fields, got {}",
            index_path.display(),
            ln + 1,
            cols.len()
        );
        let video_id = cols[0].to_string();
        ensure!(
            seen.insert(video_id.clone()),
            "{} line {}: duplicate video id {video_id}",
            index_path.display(),
            ln + 1
        );
        let entry = IndexEntry {
            video_id,
            features: root.join(cols[1]),
            labels: root.join(cols[2]),
            transcript: root.join(cols[3]),
        };
        for p in [&entry.features, &entry.labels, &entry.transcript] {
            ensure!(p.is_file(), "{} line {}: missing file {}", index_path.display(), ln + 1, p.display());
        }
        entries.push(entry);
    }
    Ok(DatasetIndex {
        root,
        split,
        entries,
        class_map,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Video {
    pub id: String,
    pub features: FeatureSequence,
    pub labels: Vec<usize>,
    pub transcript: Transcript,
    pub latents: Option<LatentPair>,
}

/// Loads one entry. Feature and label lengths that disagree are truncated
/// to the shorter one with a warning, or rejected when `strict`.
pub fn load_video(entry: &IndexEntry, map: &ClassMap, allow_repeats: bool, strict: bool) -> Result<Video> {
    let mut features = read_features(&entry.features)?;
    let mut labels = read_frame_labels(&entry.labels, map)?;
    let transcript = read_transcript(&entry.transcript, map, allow_repeats)?;
    let mut latents = read_latents(&entry.features)?;
    if features.len() != labels.len() {
        ensure!(
            !strict,
            "{}: {} feature frames but {} labels",
            entry.video_id,
            features.len(),
            labels.len()
        );
        let t = features.len().min(labels.len());
        log::warn!(
            "{}: truncating to {t} frames ({} features, {} labels)",
            entry.video_id,
            features.len(),
            labels.len()
        );
        features = features.truncated(t)?;
        labels.truncate(t);
    }
    if let Some(l) = &latents {
        if l.len() != features.len() {
            let t = features.len().min(l.len());
            ensure!(!strict && t == features.len(), "{}: latent sidecars have {} frames", entry.video_id, l.len());
            let regimes = l.regimes.as_ref().map(|r| r[..t].to_vec());
            latents = Some(LatentPair::new(
                l.visual.slice(ndarray::s![..t, ..]).to_owned(),
                l.action.slice(ndarray::s![..t, ..]).to_owned(),
                regimes,
            )?);
        }
    }
    Ok(Video {
        id: entry.video_id.clone(),
        features,
        labels,
        transcript,
        latents,
    })
}

pub fn load_videos(index: &DatasetIndex, allow_repeats: bool, strict: bool) -> Result<Vec<Video>> {
    index
        .entries
        .iter()
        .map(|e| load_video(e, &index.class_map, allow_repeats, strict))
        .collect()
}

pub fn index_path(dir: &Path, split: &str) -> PathBuf {
    dir.join(format!("{split}.tsv"))
}

/// Writes a synthetic split under `dir` with sidecars, `mapping.txt` and
/// `<split>.tsv`. Video ids are `<split>_<index>`.
pub fn write_synthetic_split(dir: &Path, split: &str, seqs: &[SyntheticSequence], map: &ClassMap) -> Result<PathBuf> {
    write_atomic(&dir.join(MAPPING_FILE), format_mapping(map).as_bytes())?;
    let mut index = String::new();
    for (i, s) in seqs.iter().enumerate() {
        let id = format!("{split}_{i:04}");
        let feat_rel = format!("features/{id}.hseq");
        let lab_rel = format!("labels/{id}.txt");
        let tr_rel = format!("transcripts/{id}.txt");
        let feat = dir.join(&feat_rel);
        write_features(&feat, &s.features)?;
        write_latents(&feat, &s.latents)?;
        write_frame_labels(&dir.join(&lab_rel), &s.frame_labels, map)?;
        write_transcript(&dir.join(&tr_rel), &s.transcript, map)?;
        index.push_str(&format!("{id}\t{feat_rel}\t{lab_rel}\t{tr_rel}\n"));
    }
    let path = index_path(dir, split);
    write_atomic(&path, index.as_bytes())?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn map() -> ClassMap {
        parse_mapping("0 bg\n1 cut\n2 stir\n3 pour\n").unwrap()
    }

    #[test]
    fn minimal_hseq() {
        let bytes = encode_hseq(&array![[0.5]]);
        assert_eq!(bytes.len(), 16);
        assert_eq!(&bytes[..4], b"HSEQ");
        assert_eq!(&bytes[4..12], &[1, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(&bytes[12..], &0.5f32.to_le_bytes());
        assert_eq!(decode_hseq(&bytes).unwrap(), array![[0.5]]);
    }

    #[test]
    fn hseq_errors() {
        let mut bytes = encode_hseq(&array![[0.5, 1.0]]);
        let mut bad = bytes.clone();
        bad[..4].copy_from_slice(b"XXXX");
        assert_eq!(decode_hseq(&bad).unwrap_err().to_string(), "not a HSEQ file");
        assert!(decode_hseq(&bytes[..bytes.len() - 1]).unwrap_err().to_string().contains("truncated feature file"));
        let mut long = bytes.clone();
        long.push(0);
        assert!(decode_hseq(&long).is_err());
        bytes[16..20].copy_from_slice(&f32::NAN.to_le_bytes());
        assert!(decode_hseq(&bytes).unwrap_err().to_string().contains("index 1"));
    }

    #[test]
    fn feature_round_trip_bitwise() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("a.hseq");
        let x = FeatureSequence::new(Array2::from_shape_fn((5, 3), |(i, j)| (i as f64 - 2.1) * (j as f64 + 0.3))).unwrap();
        write_features(&p, &x).unwrap();
        let first = fs::read(&p).unwrap();
        let back = read_features(&p).unwrap();
        let q = dir.path().join("b.hseq");
        write_features(&q, &back).unwrap();
        assert_eq!(first, fs::read(&q).unwrap());
        assert_eq!(back, read_features(&q).unwrap());
    }

    #[test]
    fn labels_and_transcripts() {
        let m = parse_mapping("0 bg\n3 pour\n1 a\n2 b\n").unwrap();
        assert_eq!(parse_frame_labels("bg\npour\npour\n", &m).unwrap(), vec![0, 3, 3]);
        assert_eq!(parse_frame_labels("bg\npour", &m).unwrap(), vec![0, 3]);
        assert!(parse_frame_labels("", &m).is_err());
        assert!(parse_frame_labels("bg\n\npour\n", &m).is_err());
        let err = parse_frame_labels("bg\nfry\n", &m).unwrap_err().to_string();
        assert!(err.contains("fry") && err.contains("line 2"), "{err}");

        assert_eq!(parse_transcript("bg\npour\nbg\n", &m, false).unwrap().entries(), &[0, 3, 0]);
        assert!(parse_transcript("pour\npour\n", &m, false).is_err());
        assert_eq!(parse_transcript("pour\npour\n", &m, true).unwrap().len(), 2);
        assert_eq!(parse_transcript("pour\n", &m, false).unwrap().len(), 1);
    }

    #[test]
    fn mapping_validation() {
        assert!(parse_mapping("0 a\n2 b\n").is_err());
        assert!(parse_mapping("0 a\n1 a\n").is_err());
        assert!(parse_mapping("0 a b\n").is_err());
        let m = map();
        assert_eq!(parse_mapping(&format_mapping(&m)).unwrap(), m);
        assert_eq!(m.background_name(), "bg");
    }

    #[test]
    fn text_round_trip() {
        let m = map();
        let ids = vec![0, 0, 2, 3, 3];
        assert_eq!(parse_frame_labels(&format_names(&ids, &m).unwrap(), &m).unwrap(), ids);
    }

    fn write_video(dir: &Path, id: &str, frames: usize, labels: &str) {
        let x = FeatureSequence::new(Array2::ones((frames, 2))).unwrap();
        write_features(&dir.join(format!("{id}.hseq")), &x).unwrap();
        fs::write(dir.join(format!("{id}.lab")), labels).unwrap();
        fs::write(dir.join(format!("{id}.tr")), "bg\ncut\n").unwrap();
    }

    #[test]
    fn split_loading() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path();
        fs::write(d.join(MAPPING_FILE), format_mapping(&map())).unwrap();
        write_video(d, "v1", 3, "bg\ncut\ncut\n");
        write_video(d, "v2", 4, "bg\ncut\ncut\n");
        let idx = d.join("train.tsv");
        fs::write(&idx, "v2\tv2.hseq\tv2.lab\tv2.tr\nv1\tv1.hseq\tv1.lab\tv1.tr\n").unwrap();
        let index = load_split(&idx).unwrap();
        assert_eq!(index.split, "train");
        let ids: Vec<&str> = index.entries.iter().map(|e| e.video_id.as_str()).collect();
        assert_eq!(ids, vec!["v2", "v1"]);
        assert_eq!(index.entries[0].features, d.join("v2.hseq"));

        let videos = load_videos(&index, false, false).unwrap();
        assert_eq!(videos[0].features.len(), 3);
        assert_eq!(videos[0].labels, vec![0, 1, 1]);
        assert!(videos[0].latents.is_none());
        assert!(load_videos(&index, false, true).is_err());

        fs::write(&idx, "v1\tv1.hseq\tv1.lab\tv1.tr\nv1\tv1.hseq\tv1.lab\tv1.tr\n").unwrap();
        assert!(load_split(&idx).unwrap_err().to_string().contains("duplicate"));
        fs::write(&idx, "v3\tv3.hseq\tv1.lab\tv1.tr\n").unwrap();
        assert!(load_split(&idx).unwrap_err().to_string().contains("missing file"));
        fs::write(&idx, "").unwrap();
        assert!(load_split(&idx).unwrap().entries.is_empty());
    }

    #[test]
    fn raw_conversion() {
        let dir = tempfile::tempdir().unwrap();
        let raw = dir.path().join("x.bin");
        let vals: Vec<u8> = [1.0f32, 2.0, 3.0, 4.0, 5.0, 6.0].iter().flat_map(|v| v.to_le_bytes()).collect();
        fs::write(&raw, &vals).unwrap();
        let out = dir.path().join("x.hseq");
        let x = convert_raw(&raw, 3, &out).unwrap();
        assert_eq!(x.frames(), &array![[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]);
        assert_eq!(read_features(&out).unwrap(), x);
        assert!(convert_raw(&raw, 4, &out).is_err());
    }
}
