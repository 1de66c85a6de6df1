//! Exhaustive census over the Stanley intervals of one size.
//!
//! Every interval `(P, Q)` is pushed through `Φ`; the resulting realizer is
//! validated, inverted, classified and fingerprinted, and the tallies are
//! compared with the closed-form counts. Sharding splits the interval
//! stream by ranges of lower paths; shard results merge by summation and
//! set union, so the report does not depend on the shard count.

use std::collections::{BTreeMap, BTreeSet};
use std::thread;

use catwood_core::canon::{realizer_code, triangulation_code};
use catwood_core::counting::{formula_kreweras, formula_stanley, formula_tamari};
use catwood_core::lattice::{leq_kreweras, leq_tamari, IntervalStream, LatticeKind};
use catwood_core::phi::{minimality_from_paths, phi_checked};
use catwood_core::stack::{is_stack, ternary_to_stack, TernaryTree};
use catwood_core::{psi, DyckPath, Error};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;
/// Largest size for the full census unless overridden.
pub const DEFAULT_FULL_CAP: usize = 7;
/// Largest size for the count-only census unless overridden.
pub const DEFAULT_COUNT_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub shards: usize,
    pub count_only: bool,
    pub cap: Option<usize>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            shards: 1,
            count_only: false,
            cap: None,
        }
    }
}

impl CensusOptions {
    pub fn default_cap(&self) -> usize {
        if self.count_only {
            DEFAULT_COUNT_CAP
        } else {
            DEFAULT_FULL_CAP
        }
    }

    pub fn effective_cap(&self) -> usize {
        self.cap.unwrap_or_else(|| self.default_cap())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeCount {
    pub enumerated: u64,
    /// Closed-form value, in decimal.
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalCounts {
    pub stanley: LatticeCount,
    pub tamari: LatticeCount,
    pub kreweras: LatticeCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizerCounts {
    pub all: u64,
    pub minimal: u64,
    pub maximal: u64,
    pub min_and_max: u64,
    /// Distinct coloured realizer codes.
    pub distinct: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationCounts {
    /// Distinct triangulations underlying all realizers.
    pub distinct: u64,
    /// Distinct triangulations underlying realizers of Tamari intervals.
    pub distinct_from_tamari: u64,
    pub distinct_stack: u64,
    pub ternary_trees: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: u32,
    pub n: usize,
    pub count_only: bool,
    pub intervals: IntervalCounts,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub realizers: Option<RealizerCounts>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub triangulations: Option<TriangulationCounts>,
    pub identities: Vec<Identity>,
    pub pass: bool,
}

impl CensusReport {
    pub fn identity(&self, name: &str) -> Option<&Identity> {
        self.identities.iter().find(|i| i.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Identity> {
        self.identities.iter().filter(|i| !i.pass)
    }
}

const PER_INTERVAL: [&str; 8] = [
    "phi_output_valid",
    "psi_inverts_phi",
    "tamari_iff_minimal",
    "minimal_scan_iff_ancestor_test",
    "minimality_from_paths",
    "kreweras_iff_min_and_max",
    "min_and_max_local_test",
    "min_and_max_iff_stack",
];

#[derive(Default)]
struct Partial {
    stanley: u64,
    tamari: u64,
    kreweras: u64,
    minimal: u64,
    maximal: u64,
    min_and_max: u64,
    stack_images: u64,
    codes: BTreeSet<Vec<u8>>,
    tamari_codes: BTreeSet<Vec<u8>>,
    stack_codes: BTreeSet<Vec<u8>>,
    colored: BTreeSet<Vec<u8>>,
    /// First failing interval per identity.
    witnesses: BTreeMap<&'static str, String>,
}

impl Partial {
    fn fail(&mut self, name: &'static str, p: &DyckPath, q: &DyckPath, detail: &str) {
        self.witnesses
            .entry(name)
            .or_insert_with(|| format!("{p} {q}{detail}"));
    }

    fn merge(&mut self, other: Partial) {
        self.stanley += other.stanley;
        self.tamari += other.tamari;
        self.kreweras += other.kreweras;
        self.minimal += other.minimal;
        self.maximal += other.maximal;
        self.min_and_max += other.min_and_max;
        self.stack_images += other.stack_images;
        self.codes.extend(other.codes);
        self.tamari_codes.extend(other.tamari_codes);
        self.stack_codes.extend(other.stack_codes);
        self.colored.extend(other.colored);
        for (k, v) in other.witnesses {
            self.witnesses.entry(k).or_insert(v);
        }
    }
}

fn run_shard(
    n: usize,
    cap: usize,
    index: usize,
    count: usize,
    count_only: bool,
) -> Result<Partial, Error> {
    let mut acc = Partial::default();
    for interval in IntervalStream::with_limit(LatticeKind::Stanley, n, cap)?.shard(index, count) {
        let (p, q) = (&interval.lower, &interval.upper);
        acc.stanley += 1;
        let tamari = leq_tamari(p, q)?;
        let kreweras = leq_kreweras(p, q)?;
        acc.tamari += tamari as u64;
        acc.kreweras += kreweras as u64;
        if count_only {
            continue;
        }
        let r = phi_checked(p, q, false)?;
        let report = r.validate();
        if let Some(v) = report.violations.first() {
            acc.fail("phi_output_valid", p, q, &format!(": {v}"));
            continue;
        }
        match psi(&r) {
            Ok((pp, qq)) if (&pp, &qq) == (p, q) => {}
            Ok((pp, qq)) => acc.fail("psi_inverts_phi", p, q, &format!(" -> {pp} {qq}")),
            Err(e) => acc.fail("psi_inverts_phi", p, q, &format!(": {e}")),
        }
        let minimal = r.is_minimal();
        let maximal = r.is_maximal();
        let mm = r.is_min_and_max();
        let tri = r.triangulation();
        let stack = is_stack(tri);
        if minimal != tamari {
            acc.fail("tamari_iff_minimal", p, q, "");
        }
        if minimal != r.is_minimal_by_ancestors() {
            acc.fail("minimal_scan_iff_ancestor_test", p, q, "");
        }
        if minimal != minimality_from_paths(p, q)? {
            acc.fail("minimality_from_paths", p, q, "");
        }
        if mm != kreweras {
            acc.fail("kreweras_iff_min_and_max", p, q, "");
        }
        if mm != (minimal && maximal) {
            acc.fail("min_and_max_local_test", p, q, "");
        }
        if mm != stack {
            acc.fail("min_and_max_iff_stack", p, q, "");
        }
        acc.minimal += minimal as u64;
        acc.maximal += maximal as u64;
        acc.min_and_max += mm as u64;
        let code = triangulation_code(tri);
        if tamari {
            acc.tamari_codes.insert(code.clone());
        }
        if stack {
            acc.stack_images += 1;
            acc.stack_codes.insert(code.clone());
        }
        acc.codes.insert(code);
        acc.colored.insert(realizer_code(&r));
    }
    Ok(acc)
}

fn identity(name: &str, pass: bool, witness: Option<String>) -> Identity {
    Identity {
        name: name.to_string(),
        pass,
        witness: if pass { None } else { witness },
    }
}

fn count_identity(name: &str, enumerated: u64, formula: &BigUint) -> Identity {
    let pass = BigUint::from(enumerated) == *formula;
    identity(
        name,
        pass,
        Some(format!("enumerated {enumerated}, formula {formula}")),
    )
}

/// Runs the census of size `n`.
pub fn run_census(n: usize, options: &CensusOptions) -> Result<CensusReport, CliError> {
    if n == 0 {
        return Err(Error::EmptyPath.into());
    }
    let cap = options.effective_cap();
    if n > cap {
        return Err(Error::LimitExceeded { n, limit: cap }.into());
    }
    let shards = options.shards.max(1);
    let count_only = options.count_only;
    let partials: Vec<Result<Partial, Error>> = if shards == 1 {
        vec![run_shard(n, cap, 0, 1, count_only)]
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..shards)
                .map(|k| s.spawn(move || run_shard(n, cap, k, shards, count_only)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("census shard panicked"))
                .collect()
        })
    };
    let mut acc = Partial::default();
    for p in partials {
        acc.merge(p?);
    }

    let (fs, ft, fk) = (formula_stanley(n), formula_tamari(n), formula_kreweras(n));
    let mut identities = vec![
        count_identity("stanley_count", acc.stanley, &fs),
        count_identity("tamari_count", acc.tamari, &ft),
        count_identity("kreweras_count", acc.kreweras, &fk),
    ];
    let intervals = IntervalCounts {
        stanley: LatticeCount {
            enumerated: acc.stanley,
            formula: fs.to_string(),
        },
        tamari: LatticeCount {
            enumerated: acc.tamari,
            formula: ft.to_string(),
        },
        kreweras: LatticeCount {
            enumerated: acc.kreweras,
            formula: fk.to_string(),
        },
    };
    let (realizers, triangulations) = if count_only {
        (None, None)
    } else {
        for name in PER_INTERVAL {
            let w = acc.witnesses.get(name).cloned();
            identities.push(identity(name, w.is_none(), w));
        }
        identities.push(count_identity(
            "phi_injective",
            acc.colored.len() as u64,
            &fs,
        ));
        identities.push(count_identity("minimal_count", acc.minimal, &ft));
        identities.push(count_identity("min_and_max_count", acc.min_and_max, &fk));
        identities.push(count_identity(
            "tamari_triangulations_distinct",
            acc.tamari_codes.len() as u64,
            &ft,
        ));
        identities.push(identity(
            "every_triangulation_has_minimal_realizer",
            acc.codes == acc.tamari_codes,
            Some(format!(
                "{} triangulations, {} from Tamari intervals",
                acc.codes.len(),
                acc.tamari_codes.len()
            )),
        ));
        let trees = TernaryTree::all(n);
        let tree_codes: BTreeSet<Vec<u8>> = trees
            .iter()
            .map(|t| triangulation_code(&ternary_to_stack(t)))
            .collect();
        identities.push(count_identity(
            "stack_triangulations",
            acc.stack_codes.len() as u64,
            &fk,
        ));
        identities.push(identity(
            "stack_triangulations_are_ternary_images",
            tree_codes == acc.stack_codes,
            Some(format!(
                "{} ternary images, {} stack images",
                tree_codes.len(),
                acc.stack_codes.len()
            )),
        ));
        identities.push(identity(
            "stack_triangulation_has_one_realizer",
            acc.stack_images == acc.stack_codes.len() as u64,
            Some(format!(
                "{} stack realizers over {} stack triangulations",
                acc.stack_images,
                acc.stack_codes.len()
            )),
        ));
        (
            Some(RealizerCounts {
                all: acc.stanley,
                minimal: acc.minimal,
                maximal: acc.maximal,
                min_and_max: acc.min_and_max,
                distinct: acc.colored.len() as u64,
            }),
            Some(TriangulationCounts {
                distinct: acc.codes.len() as u64,
                distinct_from_tamari: acc.tamari_codes.len() as u64,
                distinct_stack: acc.stack_codes.len() as u64,
                ternary_trees: trees.len() as u64,
            }),
        )
    };
    let pass = identities.iter().all(|i| i.pass);
    Ok(CensusReport {
        schema: SCHEMA_VERSION,
        n,
        count_only,
        intervals,
        realizers,
        triangulations,
        identities,
        pass,
    })
}
