//! Search report schema, content hashing, CSV projection, and shard merging.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "CONFIRMED")]
    Confirmed,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Confirmed => write!(f, "CONFIRMED"),
            Verdict::Counterexample => write!(f, "COUNTEREXAMPLE"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrunedCounts {
    /// Branches cut because a subgroup counter reached its validity limit.
    pub validity: u64,
    /// Branches cut by the canonical-minimality prefix test.
    pub prefix_canonical: u64,
    /// Complete multisets rejected by the full canonical-form test.
    pub canonical_rejected: u64,
    /// Canonical representatives belonging to other shards.
    pub shard_skipped: u64,
}

impl PrunedCounts {
    pub fn add(&mut self, other: &PrunedCounts) {
        self.validity += other.validity;
        self.prefix_canonical += other.prefix_canonical;
        self.canonical_rejected += other.canonical_rejected;
        self.shard_skipped += other.shard_skipped;
    }
}

/// Per-cardinality scan outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NRecord {
    pub n: u64,
    pub floor: u64,
    pub min_card: Option<u64>,
    /// Canonical witnesses attaining `min_card`, as multiset literals.
    pub witnesses: Vec<String>,
    pub orbits_scanned: u64,
    pub leaves_scanned: u64,
    pub pruned: PrunedCounts,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

/// Echo of the configuration the scan ran under.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfigEcho {
    pub p: u64,
    pub m: u32,
    pub n_lo: u64,
    pub n_hi: u64,
    pub shards: u64,
    pub shard_id: Option<u64>,
    pub workers: usize,
    pub max_witnesses: usize,
    pub canonical: bool,
    pub budget: u64,
    pub budget_override: bool,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub artifact_version: String,
    pub kind: String,
    pub p: u64,
    pub m: u32,
    pub config: VerifyConfigEcho,
    pub records: Vec<NRecord>,
    pub overall_verdict: Verdict,
    pub total_elapsed_ms: u64,
    pub content_hash: String,
}

impl SearchReport {
    /// Hash over the stable body: timing fields are zeroed and the hash
    /// field emptied before hashing, so reruns of the same configuration
    /// produce identical hashes.
    pub fn compute_content_hash(&self) -> String {
        let mut stable = self.clone();
        stable.content_hash.clear();
        stable.total_elapsed_ms = 0;
        for r in &mut stable.records {
            r.elapsed_ms = 0;
        }
        let body = serde_json::to_string(&stable).expect("report serializes");
        let mut hasher = Sha256::new();
        hasher.update(body.as_bytes());
        format!("{:x}", hasher.finalize())
    }

    pub fn finalize(mut self) -> Self {
        self.overall_verdict = if self
            .records
            .iter()
            .any(|r| r.verdict == Verdict::Counterexample)
        {
            Verdict::Counterexample
        } else {
            Verdict::Confirmed
        };
        self.content_hash = self.compute_content_hash();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Spreadsheet projection: one `(n, floor, min_card, verdict)` row per n.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,floor,min_card,verdict\n");
        for r in &self.records {
            let min = r
                .min_card
                .map(|c| c.to_string())
                .unwrap_or_default();
            out.push_str(&format!("{},{},{},{}\n", r.n, r.floor, min, r.verdict));
        }
        out
    }
}

/// Merges per-shard reports of the same scan. The fold is associative and
/// order-independent for the minima; witness lists keep input order up to
/// the witness cap.
pub fn merge_reports(reports: &[SearchReport]) -> Result<SearchReport> {
    let Some(first) = reports.first() else {
        return Err(Error::EmptyPartition);
    };
    for r in &reports[1..] {
        let a = &first.config;
        let b = &r.config;
        if (a.p, a.m, a.n_lo, a.n_hi, a.shards, a.canonical, a.max_witnesses)
            != (b.p, b.m, b.n_lo, b.n_hi, b.shards, b.canonical, b.max_witnesses)
        {
            return Err(Error::CorruptCheckpoint(
                "shard reports disagree on scan configuration".into(),
            ));
        }
    }
    let mut merged = first.clone();
    merged.config.shard_id = None;
    for r in &reports[1..] {
        merged.total_elapsed_ms += r.total_elapsed_ms;
        for (acc, nr) in merged.records.iter_mut().zip(&r.records) {
            if acc.n != nr.n {
                return Err(Error::CorruptCheckpoint(
                    "shard reports disagree on the n range".into(),
                ));
            }
            acc.orbits_scanned += nr.orbits_scanned;
            acc.leaves_scanned += nr.leaves_scanned;
            acc.pruned.add(&nr.pruned);
            acc.elapsed_ms += nr.elapsed_ms;
            match (acc.min_card, nr.min_card) {
                (None, Some(_)) => {
                    acc.min_card = nr.min_card;
                    acc.witnesses = nr.witnesses.clone();
                }
                (Some(a), Some(b)) if b < a => {
                    acc.min_card = Some(b);
                    acc.witnesses = nr.witnesses.clone();
                }
                (Some(a), Some(b)) if b == a => {
                    for w in &nr.witnesses {
                        if acc.witnesses.len() < merged.config.max_witnesses {
                            acc.witnesses.push(w.clone());
                        }
                    }
                }
                _ => {}
            }
            acc.verdict = match acc.min_card {
                Some(min) if min < acc.floor => Verdict::Counterexample,
                _ => Verdict::Confirmed,
            };
        }
    }
    Ok(merged.finalize())
}

/// Report for the structured p = 11 six-element search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RemarkReport {
    pub artifact_version: String,
    pub kind: String,
    pub total_configs: u64,
    /// Number of six-element configurations with sumset cardinality
    /// exactly 32.
    pub sixteen_cases: u64,
    pub sixteen_case_multisets: Vec<String>,
    /// True when the minimal cases are exactly the sign choices
    /// {(1,0),(0,1),±(1,1),±(1,2),±(1,3),±(1,4)}.
    pub sign_pattern_confirmed: bool,
    pub min_card_among_cases: u64,
    pub max_card_among_cases: u64,
    pub min_card_others: u64,
    pub all_others_exceed_33: bool,
    pub extensions_checked: u64,
    pub min_card_extensions: u64,
    pub all_extensions_exceed_33: bool,
    pub elapsed_ms: u64,
    pub content_hash: String,
}

impl RemarkReport {
    pub fn compute_content_hash(&self) -> String {
        let mut stable = self.clone();
        stable.content_hash.clear();
        stable.elapsed_ms = 0;
        let body = serde_json::to_string(&stable).expect("report serializes");
        let mut hasher = Sha256::new();
        hasher.update(body.as_bytes());
        format!("{:x}", hasher.finalize())
    }

    pub fn finalize(mut self) -> Self {
        self.content_hash = self.compute_content_hash();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
