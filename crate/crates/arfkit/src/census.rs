//! Genus-bounded enumeration of all numerical semigroups and the census
//! pipeline.
//!
//! Enumeration walks the semigroup tree: the root is the naturals, and the
//! children of `S` are `S \ {g}` for each minimal generator `g` larger than
//! the Frobenius number. Every numerical semigroup of genus `<= max` is
//! produced exactly once.

use crate::error::{Error, Result};
use crate::lipman::lipman_chain;
use crate::semigroup::{ArfMethod, NumericalSemigroup};
use crate::verify::{self, CheckStatus, IdealFilter};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

/// Hard cap on `max_genus`, overridable through `ARFKIT_GENUS_CAP`.
pub const DEFAULT_GENUS_CAP: i64 = 30;

/// The effective cap: `ARFKIT_GENUS_CAP` when set and parseable, else the
/// default.
pub fn genus_cap() -> i64 {
    std::env::var("ARFKIT_GENUS_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_GENUS_CAP)
}

/// Depth-first stream over the semigroup tree up to a genus bound.
pub struct SemigroupTree {
    stack: Vec<NumericalSemigroup>,
    max_genus: i64,
}

impl Iterator for SemigroupTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let s = self.stack.pop()?;
        if s.genus() < self.max_genus {
            self.stack.extend(children(&s));
        }
        Some(s)
    }
}

/// Children in the semigroup tree: remove a minimal generator beyond the
/// Frobenius number. The removed element becomes the new Frobenius number,
/// and the result is still additively closed because a minimal generator is
/// never a sum of two nonzero members.
fn children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    s.minimal_generators()
        .iter()
        .filter(|&&g| g > s.frobenius())
        .map(|&g| {
            let table: Vec<bool> = (0..=g + 1).map(|i| i != g && s.contains(i)).collect();
            NumericalSemigroup::from_membership_table(&table)
        })
        .collect()
}

/// Streams every numerical semigroup of genus `<= max_genus` exactly once.
pub fn enumerate_semigroups(max_genus: i64) -> Result<SemigroupTree> {
    let cap = genus_cap();
    if max_genus > cap {
        return Err(Error::BoundTooLarge {
            requested: max_genus,
            cap,
        });
    }
    let stack = if max_genus >= 0 {
        vec![NumericalSemigroup::natural()]
    } else {
        Vec::new()
    };
    Ok(SemigroupTree { stack, max_genus })
}

/// Semigroup counts per genus, `counts[g]` for `g <= max_genus`.
pub fn counts_by_genus(max_genus: i64) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; (max_genus.max(-1) + 1) as usize];
    for s in enumerate_semigroups(max_genus)? {
        counts[s.genus() as usize] += 1;
    }
    Ok(counts)
}

/// Outcome of the classification check in a census row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremAStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl fmt::Display for TheoremAStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremAStatus::Pass => "pass",
            TheoremAStatus::Fail => "fail",
            TheoremAStatus::NotApplicable => "n/a",
        })
    }
}

/// One census row: invariants, the three Arf flags, the blow-up chain shape
/// and the reflexive/self-dual statistics of the normalized ideals.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRecord {
    pub generators: Vec<i64>,
    pub genus: i64,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub arf_definition: bool,
    pub arf_lipman: bool,
    pub arf_pattern: bool,
    pub chain_length: usize,
    pub multiplicity_sequence: Vec<i64>,
    pub ideal_count: usize,
    pub reflexive_count: usize,
    pub all_reflexive_self_dual: bool,
    pub theorem_a_status: TheoremAStatus,
}

/// Runs the full pipeline on one semigroup.
pub fn census_record(s: &NumericalSemigroup) -> Result<CensusRecord> {
    let chain = lipman_chain(s);
    let ideals = verify::enumerate_normalized_ideals_bounded(s, IdealFilter::All, s.genus())?;
    let reflexive: Vec<_> = ideals.iter().filter(|e| e.is_reflexive()).collect();
    let all_reflexive_self_dual = reflexive.iter().all(|e| e.is_self_dual());
    let theorem_a = verify::theorem_a_from_parts(s, &chain, &ideals);
    let theorem_a_status = match theorem_a.status {
        CheckStatus::Pass => TheoremAStatus::Pass,
        CheckStatus::NotApplicable => TheoremAStatus::NotApplicable,
        _ => TheoremAStatus::Fail,
    };

    let record = CensusRecord {
        generators: s.minimal_generators().to_vec(),
        genus: s.genus(),
        multiplicity: s.multiplicity(),
        embedding_dimension: s.embedding_dimension(),
        frobenius: s.frobenius(),
        arf_definition: s.is_arf(ArfMethod::Definition),
        arf_lipman: s.is_arf(ArfMethod::Lipman),
        arf_pattern: s.is_arf(ArfMethod::Pattern),
        chain_length: chain.len(),
        multiplicity_sequence: chain.multiplicity_sequence().to_vec(),
        ideal_count: ideals.len(),
        reflexive_count: reflexive.len(),
        all_reflexive_self_dual,
        theorem_a_status,
    };
    debug_assert_eq!(record.arf_definition, record.arf_pattern);
    debug_assert_eq!(record.arf_lipman, record.arf_pattern);
    debug_assert!(
        !record.arf_pattern
            || (record.reflexive_count == record.chain_length
                && record.theorem_a_status == TheoremAStatus::Pass)
    );
    Ok(record)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusFormat {
    Csv,
    Json,
}

/// Totals printed after a census run.
#[derive(Clone, Debug, Serialize)]
pub struct CensusSummary {
    pub semigroups: usize,
    pub arf_count: usize,
    pub counts_by_genus: Vec<u64>,
}

impl fmt::Display for CensusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semigroups: {}", self.semigroups)?;
        writeln!(f, "arf: {}", self.arf_count)?;
        let per_genus: Vec<String> = self.counts_by_genus.iter().map(u64::to_string).collect();
        write!(f, "by genus: {}", per_genus.join(","))
    }
}

/// Runs the census for every semigroup of genus `<= max_genus` and writes
/// one record per row to `out`.
///
/// Rows are sorted by genus and then by the generator list, and the workers
/// merge through that sort, so the output is byte-identical no matter how
/// many jobs run.
pub fn census(
    max_genus: i64,
    out: &Path,
    format: CensusFormat,
    jobs: usize,
) -> Result<CensusSummary> {
    let semigroups: Vec<NumericalSemigroup> = enumerate_semigroups(max_genus)?.collect();
    let mut records: Vec<CensusRecord> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            semigroups
                .par_iter()
                .map(census_record)
                .collect::<Result<Vec<_>>>()
        })?
    } else {
        semigroups
            .iter()
            .map(census_record)
            .collect::<Result<Vec<_>>>()?
    };
    records.sort_by(|a, b| {
        (a.genus, &a.generators).cmp(&(b.genus, &b.generators))
    });

    let file = File::create(out)?;
    let mut writer = BufWriter::new(file);
    match format {
        CensusFormat::Csv => write_csv(&mut writer, &records)?,
        CensusFormat::Json => {
            serde_json::to_writer_pretty(&mut writer, &records)?;
            writeln!(writer)?;
        }
    }
    writer.flush()?;

    let mut counts_by_genus = vec![0u64; (max_genus.max(0) + 1) as usize];
    for r in &records {
        counts_by_genus[r.genus as usize] += 1;
    }
    Ok(CensusSummary {
        semigroups: records.len(),
        arf_count: records.iter().filter(|r| r.arf_pattern).count(),
        counts_by_genus,
    })
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn bit(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

/// CSV columns follow the record fields exactly; booleans as 0/1 and list
/// fields as comma-joined values (quoted by the writer).
fn write_csv<W: Write>(writer: W, records: &[CensusRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record([
        "generators",
        "genus",
        "multiplicity",
        "embedding_dimension",
        "frobenius",
        "arf_definition",
        "arf_lipman",
        "arf_pattern",
        "chain_length",
        "multiplicity_sequence",
        "ideal_count",
        "reflexive_count",
        "all_reflexive_self_dual",
        "theorem_a_status",
    ])?;
    for r in records {
        w.write_record([
            join(&r.generators),
            r.genus.to_string(),
            r.multiplicity.to_string(),
            r.embedding_dimension.to_string(),
            r.frobenius.to_string(),
            bit(r.arf_definition).to_string(),
            bit(r.arf_lipman).to_string(),
            bit(r.arf_pattern).to_string(),
            r.chain_length.to_string(),
            join(&r.multiplicity_sequence),
            r.ideal_count.to_string(),
            r.reflexive_count.to_string(),
            bit(r.all_reflexive_self_dual).to_string(),
            r.theorem_a_status.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
