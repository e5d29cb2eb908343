//! Checkpoint files for long scans: a one-line JSON header followed by a
//! binary body holding completed per-n records and the in-progress scan
//! position. The header carries the body's SHA-256; any mismatch, byte-level
//! or configuration-level, is reported as a corrupt checkpoint.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::search::report::{NRecord, PrunedCounts, Verdict};

const MAGIC: &str = "sumsets-checkpoint";
const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckpointHeader {
    pub magic: String,
    pub version: u32,
    pub p: u64,
    pub m: u32,
    pub n_lo: u64,
    pub n_hi: u64,
    pub shards: u64,
    pub shard_id: Option<u64>,
    pub canonical: bool,
    pub max_witnesses: usize,
    pub body_len: u64,
    pub body_sha256: String,
}

/// Scan position inside one n: how many deterministic DFS prefix tasks have
/// been folded, plus the partial minima gathered so far.
#[derive(Clone, Debug, PartialEq)]
pub struct InProgress {
    pub n: u64,
    pub tasks_done: u64,
    pub total_tasks: u64,
    pub min_card: Option<u64>,
    pub witnesses: Vec<String>,
    pub orbits_scanned: u64,
    pub leaves_scanned: u64,
    pub pruned: PrunedCounts,
    /// Tag of the last canonical representative folded in (informational).
    pub last_tag: Option<Vec<u32>>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Checkpoint {
    pub header: CheckpointHeader,
    pub completed: Vec<NRecord>,
    pub in_progress: Option<InProgress>,
}

/// How a verify run persists progress.
#[derive(Clone, Debug)]
pub struct CheckpointConfig {
    pub path: PathBuf,
    /// Write a checkpoint whenever this many new orbits have been folded.
    pub every_orbits: u64,
}

struct BodyWriter {
    buf: Vec<u8>,
}

impl BodyWriter {
    fn new() -> Self {
        BodyWriter { buf: Vec::new() }
    }

    fn u8(&mut self, v: u8) {
        self.buf.push(v);
    }

    fn u32(&mut self, v: u32) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    fn u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    fn opt_u64(&mut self, v: Option<u64>) {
        match v {
            Some(x) => {
                self.u8(1);
                self.u64(x);
            }
            None => self.u8(0),
        }
    }

    fn str(&mut self, s: &str) {
        self.u32(s.len() as u32);
        self.buf.extend_from_slice(s.as_bytes());
    }

    fn pruned(&mut self, p: &PrunedCounts) {
        self.u64(p.validity);
        self.u64(p.prefix_canonical);
        self.u64(p.canonical_rejected);
        self.u64(p.shard_skipped);
    }

    fn record(&mut self, r: &NRecord) {
        self.u64(r.n);
        self.u64(r.floor);
        self.opt_u64(r.min_card);
        self.u32(r.witnesses.len() as u32);
        for w in &r.witnesses {
            self.str(w);
        }
        self.u64(r.orbits_scanned);
        self.u64(r.leaves_scanned);
        self.pruned(&r.pruned);
        self.u64(r.elapsed_ms);
        self.u8(match r.verdict {
            Verdict::Confirmed => 0,
            Verdict::Counterexample => 1,
        });
    }
}

struct BodyReader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> BodyReader<'a> {
    fn new(data: &'a [u8]) -> Self {
        BodyReader { data, pos: 0 }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.pos + n > self.data.len() {
            return Err(Error::CorruptCheckpoint("truncated body".into()));
        }
        let s = &self.data[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn opt_u64(&mut self) -> Result<Option<u64>> {
        Ok(match self.u8()? {
            0 => None,
            _ => Some(self.u64()?),
        })
    }

    fn str(&mut self) -> Result<String> {
        let len = self.u32()? as usize;
        let bytes = self.take(len)?;
        String::from_utf8(bytes.to_vec())
            .map_err(|_| Error::CorruptCheckpoint("invalid utf-8 in body".into()))
    }

    fn pruned(&mut self) -> Result<PrunedCounts> {
        Ok(PrunedCounts {
            validity: self.u64()?,
            prefix_canonical: self.u64()?,
            canonical_rejected: self.u64()?,
            shard_skipped: self.u64()?,
        })
    }

    fn record(&mut self) -> Result<NRecord> {
        Ok(NRecord {
            n: self.u64()?,
            floor: self.u64()?,
            min_card: self.opt_u64()?,
            witnesses: {
                let k = self.u32()? as usize;
                let mut v = Vec::with_capacity(k);
                for _ in 0..k {
                    v.push(self.str()?);
                }
                v
            },
            orbits_scanned: self.u64()?,
            leaves_scanned: self.u64()?,
            pruned: self.pruned()?,
            elapsed_ms: self.u64()?,
            verdict: match self.u8()? {
                0 => Verdict::Confirmed,
                1 => Verdict::Counterexample,
                other => {
                    return Err(Error::CorruptCheckpoint(format!(
                        "unknown verdict byte {other}"
                    )))
                }
            },
        })
    }
}

fn encode_body(cp: &Checkpoint) -> Vec<u8> {
    let mut w = BodyWriter::new();
    w.u32(cp.completed.len() as u32);
    for r in &cp.completed {
        w.record(r);
    }
    match &cp.in_progress {
        None => w.u8(0),
        Some(ip) => {
            w.u8(1);
            w.u64(ip.n);
            w.u64(ip.tasks_done);
            w.u64(ip.total_tasks);
            w.opt_u64(ip.min_card);
            w.u32(ip.witnesses.len() as u32);
            for wt in &ip.witnesses {
                w.str(wt);
            }
            w.u64(ip.orbits_scanned);
            w.u64(ip.leaves_scanned);
            w.pruned(&ip.pruned);
            match &ip.last_tag {
                None => w.u8(0),
                Some(tag) => {
                    w.u8(1);
                    w.u32(tag.len() as u32);
                    for &t in tag {
                        w.u32(t);
                    }
                }
            }
            w.u64(ip.elapsed_ms);
        }
    }
    w.buf
}

fn decode_body(data: &[u8]) -> Result<(Vec<NRecord>, Option<InProgress>)> {
    let mut r = BodyReader::new(data);
    let n_completed = r.u32()? as usize;
    let mut completed = Vec::with_capacity(n_completed);
    for _ in 0..n_completed {
        completed.push(r.record()?);
    }
    let in_progress = match r.u8()? {
        0 => None,
        _ => Some(InProgress {
            n: r.u64()?,
            tasks_done: r.u64()?,
            total_tasks: r.u64()?,
            min_card: r.opt_u64()?,
            witnesses: {
                let k = r.u32()? as usize;
                let mut v = Vec::with_capacity(k);
                for _ in 0..k {
                    v.push(r.str()?);
                }
                v
            },
            orbits_scanned: r.u64()?,
            leaves_scanned: r.u64()?,
            pruned: r.pruned()?,
            last_tag: match r.u8()? {
                0 => None,
                _ => {
                    let k = r.u32()? as usize;
                    let mut v = Vec::with_capacity(k);
                    for _ in 0..k {
                        v.push(r.u32()?);
                    }
                    Some(v)
                }
            },
            elapsed_ms: r.u64()?,
        }),
    };
    if r.pos != data.len() {
        return Err(Error::CorruptCheckpoint("trailing bytes in body".into()));
    }
    Ok((completed, in_progress))
}

fn sha256_hex(data: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(data);
    format!("{:x}", hasher.finalize())
}

/// Writes the checkpoint atomically (temp file + rename).
pub fn checkpoint_save(cp: &Checkpoint, path: &Path) -> Result<()> {
    let body = encode_body(cp);
    let mut header = cp.header.clone();
    header.magic = MAGIC.to_string();
    header.version = VERSION;
    header.body_len = body.len() as u64;
    header.body_sha256 = sha256_hex(&body);
    let header_line = serde_json::to_string(&header)?;

    let tmp = path.with_extension("tmp");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(header_line.as_bytes())?;
        f.write_all(b"\n")?;
        f.write_all(&body)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// Loads and verifies a checkpoint file.
pub fn checkpoint_resume(path: &Path) -> Result<Checkpoint> {
    let mut raw = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut raw)?;
    let nl = raw
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| Error::CorruptCheckpoint("missing header line".into()))?;
    let header: CheckpointHeader = serde_json::from_slice(&raw[..nl])
        .map_err(|e| Error::CorruptCheckpoint(format!("bad header: {e}")))?;
    if header.magic != MAGIC {
        return Err(Error::CorruptCheckpoint("bad magic".into()));
    }
    if header.version != VERSION {
        return Err(Error::CorruptCheckpoint(format!(
            "unsupported version {}",
            header.version
        )));
    }
    let body = &raw[nl + 1..];
    if body.len() as u64 != header.body_len {
        return Err(Error::CorruptCheckpoint(format!(
            "body length {} != header {}",
            body.len(),
            header.body_len
        )));
    }
    if sha256_hex(body) != header.body_sha256 {
        return Err(Error::CorruptCheckpoint("body hash mismatch".into()));
    }
    let (completed, in_progress) = decode_body(body)?;
    Ok(Checkpoint {
        header,
        completed,
        in_progress,
    })
}
