//! Batch evaluation over graph6 streams and scripted checks of the known
//! results.

mod verify;

use std::collections::HashMap;
use std::io::{self, BufRead};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{fools_number, solvability_profile};
use crate::graph::invariants::independence_size;
use crate::graph::{parse_graph6, write_graph6};
use crate::{Limits, Result};

pub use verify::{counterexample_suite, verify_theorems, Entry, SuiteReport, SUITES};

/// First line of every census output file.
pub const SCHEMA_HEADER: &str = "#schema=1";

/// Which quantities to compute for each graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Questions {
    pub alpha: bool,
    pub fools: bool,
    pub solvability: bool,
}

impl Default for Questions {
    fn default() -> Self {
        Questions {
            alpha: true,
            fools: true,
            solvability: true,
        }
    }
}

/// One census result. Game quantities are absent for disconnected graphs
/// and for questions that were not asked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub connected: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solvable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub freely_solvable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub freely_nbhd_solvable: Option<bool>,
    pub elapsed_us: u64,
}

impl CensusRecord {
    /// Computes a record for one graph6 line.
    pub fn compute(line: &str, questions: Questions, limits: &Limits) -> Result<CensusRecord> {
        let clock = Instant::now();
        let g = parse_graph6(line)?;
        let connected = g.is_connected();
        let mut rec = CensusRecord {
            graph6: write_graph6(&g),
            n: g.n(),
            connected,
            alpha: None,
            f_value: None,
            solvable: None,
            freely_solvable: None,
            freely_nbhd_solvable: None,
            elapsed_us: 0,
        };
        if questions.alpha {
            rec.alpha = Some(independence_size(&g, limits)?);
        }
        if connected && questions.fools {
            rec.f_value = Some(fools_number(&g, limits)?.f_value);
        }
        if connected && questions.solvability {
            let p = solvability_profile(&g, limits)?;
            rec.solvable = Some(p.solvable);
            rec.freely_solvable = Some(p.freely_solvable);
            rec.freely_nbhd_solvable = Some(p.freely_nbhd_solvable);
        }
        rec.elapsed_us = clock.elapsed().as_micros() as u64;
        Ok(rec)
    }

    /// Broken record-level invariants, if any.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let (Some(f), Some(a)) = (self.f_value, self.alpha) {
            if f > a {
                out.push(format!("{}: F = {f} exceeds α = {a}", self.graph6));
            }
        }
        let implies = |a: Option<bool>, b: Option<bool>| !(a == Some(true) && b == Some(false));
        if !implies(self.freely_nbhd_solvable, self.freely_solvable) || !implies(self.freely_solvable, self.solvable) {
            out.push(format!("{}: solvability predicates are not nested", self.graph6));
        }
        out
    }

    /// True if this record answers every question in `q`.
    fn answers(&self, q: Questions) -> bool {
        let game = !self.connected;
        (!q.alpha || self.alpha.is_some())
            && (!q.fools || game || self.f_value.is_some())
            && (!q.solvability || game || self.freely_nbhd_solvable.is_some())
    }

    /// Drops the answers to questions outside `q`.
    fn restrict(mut self, q: Questions) -> Self {
        if !q.alpha {
            self.alpha = None;
        }
        if !q.fools {
            self.f_value = None;
        }
        if !q.solvability {
            self.solvable = None;
            self.freely_solvable = None;
            self.freely_nbhd_solvable = None;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Previously computed records keyed by graph6.
#[derive(Default)]
pub struct Cache {
    records: HashMap<String, CensusRecord>,
}

impl Cache {
    /// Loads a census output file; comment lines and unreadable lines are
    /// ignored.
    pub fn load(reader: impl BufRead) -> io::Result<Cache> {
        let mut records = HashMap::new();
        for line in reader.lines() {
            let line = line?;
            if line.starts_with('#') {
                continue;
            }
            if let Ok(rec) = serde_json::from_str::<CensusRecord>(&line) {
                records.insert(rec.graph6.clone(), rec);
            }
        }
        Ok(Cache { records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    fn get(&self, graph6: &str, q: Questions) -> Option<CensusRecord> {
        self.records
            .get(graph6)
            .filter(|r| r.answers(q))
            .map(|r| r.clone().restrict(q))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CensusSummary {
    pub records: usize,
    pub connected: usize,
    pub solvable: usize,
    pub freely_solvable: usize,
    pub freely_nbhd_solvable: usize,
    pub cache_hits: usize,
    /// `(line number, message)` for every line that could not be processed.
    pub skipped: Vec<(usize, String)>,
    pub violations: Vec<String>,
}

impl CensusSummary {
    fn add(&mut self, rec: &CensusRecord) {
        self.records += 1;
        self.connected += usize::from(rec.connected);
        self.solvable += usize::from(rec.solvable == Some(true));
        self.freely_solvable += usize::from(rec.freely_solvable == Some(true));
        self.freely_nbhd_solvable += usize::from(rec.freely_nbhd_solvable == Some(true));
        self.violations.extend(rec.violations());
    }

    /// Freely neighborhood-solvable among freely solvable graphs.
    pub fn nbhd_ratio_of_freely(&self) -> Option<f64> {
        ratio(self.freely_nbhd_solvable, self.freely_solvable)
    }

    /// Freely neighborhood-solvable among connected graphs.
    pub fn nbhd_ratio_of_connected(&self) -> Option<f64> {
        ratio(self.freely_nbhd_solvable, self.connected)
    }
}

fn ratio(a: usize, b: usize) -> Option<f64> {
    (b > 0).then(|| a as f64 / b as f64)
}

/// Options for [`run_census`].
#[derive(Default)]
pub struct CensusOptions<'a> {
    pub questions: Questions,
    pub limits: Limits,
    /// Worker threads; `None` uses the machine's parallelism.
    pub jobs: Option<usize>,
    pub cache: Option<&'a Cache>,
}

const BATCH: usize = 4096;

/// Computes a record per graph6 line and hands them to `emit` in input
/// order.
///
/// Blank lines and a leading `>>graph6<<` marker are ignored. Lines that do
/// not parse, or exceed the limits, are recorded in the summary and
/// skipped. Only I/O errors abort the run.
pub fn run_census(
    input: impl BufRead,
    options: &CensusOptions<'_>,
    mut emit: impl FnMut(&CensusRecord) -> io::Result<()>,
) -> io::Result<CensusSummary> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = options.jobs {
        builder = builder.num_threads(jobs.max(1));
    }
    let pool = builder.build().map_err(io::Error::other)?;
    let mut summary = CensusSummary::default();
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(BATCH);
    let mut lines = input.lines().enumerate();

    loop {
        batch.clear();
        for (i, line) in lines.by_ref() {
            let line = line?;
            let text = line.trim().trim_start_matches(">>graph6<<");
            if !text.is_empty() {
                batch.push((i + 1, text.to_string()));
            }
            if batch.len() == BATCH {
                break;
            }
        }
        if batch.is_empty() {
            return Ok(summary);
        }
        let results: Vec<_> = pool.install(|| {
            batch
                .par_iter()
                .map(|(no, text)| {
                    let cached = options.cache.and_then(|c| c.get(text, options.questions));
                    let hit = cached.is_some();
                    let rec = match cached {
                        Some(rec) => Ok(rec),
                        None => CensusRecord::compute(text, options.questions, &options.limits),
                    };
                    (*no, hit, rec)
                })
                .collect()
        });
        for (no, hit, rec) in results {
            match rec {
                Ok(rec) => {
                    summary.cache_hits += usize::from(hit);
                    summary.add(&rec);
                    emit(&rec)?;
                }
                Err(e) => summary.skipped.push((no, e.to_string())),
            }
        }
    }
}

/// Runs the census over the built-in enumeration of connected graphs on `n`
/// vertices.
pub fn census_connected(n: usize, options: &CensusOptions<'_>) -> Result<(Vec<CensusRecord>, CensusSummary)> {
    let text: String = crate::graph::enumerate_connected(n)?
        .map(|g| write_graph6(&g) + "\n")
        .collect();
    let mut out = Vec::new();
    let summary = run_census(text.as_bytes(), options, |r| {
        out.push(r.clone());
        Ok(())
    })
    .expect("in-memory input");
    Ok((out, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> CensusOptions<'static> {
        CensusOptions::default()
    }

    #[test]
    fn k2_record() {
        let rec = CensusRecord::compute("A_", Questions::default(), &Limits::default()).unwrap();
        assert_eq!(rec.f_value, Some(1));
        assert_eq!(rec.alpha, Some(1));
        // one hole leaves a single peg, which already counts as solved
        assert_eq!(rec.solvable, Some(true));
    }

    #[test]
    fn bad_lines_are_skipped_with_line_numbers() {
        let input = ">>graph6<<A_\n\nnot-a-graph\nBw\n";
        let mut got = Vec::new();
        let summary = run_census(input.as_bytes(), &opts(), |r| {
            got.push(r.graph6.clone());
            Ok(())
        })
        .unwrap();
        assert_eq!(got, vec!["A_", "Bw"]);
        assert_eq!(summary.skipped.len(), 1);
        assert_eq!(summary.skipped[0].0, 3);
    }

    #[test]
    fn disconnected_graphs_get_no_game_fields() {
        let rec = CensusRecord::compute("A?", Questions::default(), &Limits::default()).unwrap();
        assert!(!rec.connected);
        assert_eq!(rec.alpha, Some(2));
        assert!(rec.f_value.is_none() && rec.solvable.is_none());
        assert!(!rec.to_json().contains("f_value"));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let strip = |recs: Vec<CensusRecord>| -> Vec<CensusRecord> {
            recs.into_iter().map(|r| CensusRecord { elapsed_us: 0, ..r }).collect()
        };
        let one = CensusOptions {
            jobs: Some(1),
            ..opts()
        };
        let four = CensusOptions {
            jobs: Some(4),
            ..opts()
        };
        let (a, sa) = census_connected(5, &one).unwrap();
        let (b, sb) = census_connected(5, &four).unwrap();
        assert_eq!(strip(a), strip(b));
        assert_eq!(sa, sb);
    }

    #[test]
    fn cache_reuses_matching_records() {
        let (recs, _) = census_connected(4, &opts()).unwrap();
        let file: String = std::iter::once(SCHEMA_HEADER.to_string())
            .chain(recs.iter().map(CensusRecord::to_json))
            .collect::<Vec<_>>()
            .join("\n");
        let cache = Cache::load(file.as_bytes()).unwrap();
        assert_eq!(cache.len(), 6);
        let with_cache = CensusOptions {
            cache: Some(&cache),
            ..opts()
        };
        let (again, summary) = census_connected(4, &with_cache).unwrap();
        assert_eq!(summary.cache_hits, 6);
        assert_eq!(again, recs);
        // a narrower question set is served from the cache too
        let alpha_only = CensusOptions {
            cache: Some(&cache),
            questions: Questions {
                alpha: true,
                fools: false,
                solvability: false,
            },
            ..opts()
        };
        let (narrow, summary) = census_connected(4, &alpha_only).unwrap();
        assert_eq!(summary.cache_hits, 6);
        assert!(narrow.iter().all(|r| r.f_value.is_none() && r.alpha.is_some()));
    }
}
