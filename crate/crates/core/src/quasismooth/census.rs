use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{has_ip_property, is_transverse};
use crate::error::{Error, Result};
use crate::euler::vafa_subset_sum;
use crate::exact::Rational;
use crate::wps::WeightVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusFilter {
    Transverse,
    Ip,
    All,
}

impl fmt::Display for CensusFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusFilter::Transverse => "transverse",
            CensusFilter::Ip => "ip",
            CensusFilter::All => "all",
        })
    }
}

impl FromStr for CensusFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "transverse" => Ok(CensusFilter::Transverse),
            "ip" => Ok(CensusFilter::Ip),
            "all" => Ok(CensusFilter::All),
            other => Err(Error::Parse(format!("unknown census filter {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub degree: u64,
    pub weights: WeightVector,
    pub transverse: bool,
    pub ip: bool,
    pub gorenstein: bool,
    pub chi_orb_formula: Rational,
}

impl CensusRecord {
    fn new(w: WeightVector, transverse: bool, ip: bool) -> CensusRecord {
        let chi = vafa_subset_sum(&w).value;
        CensusRecord {
            degree: w.degree(),
            gorenstein: w.is_gorenstein(),
            weights: w,
            transverse,
            ip,
            chi_orb_formula: chi,
        }
    }

    /// One TSV line without the trailing newline.
    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.degree,
            self.weights,
            u8::from(self.transverse),
            u8::from(self.ip),
            u8::from(self.gorenstein),
            self.chi_orb_formula
        )
    }
}

/// Every well-formed weight vector `w_0 <= ... <= w_d` of degree at most
/// `max_degree` passing `filter`, ordered by degree and then weights.
///
/// `jobs` fixes the worker count; `None` uses the global pool. The result
/// does not depend on it.
pub fn census(
    d: usize,
    max_degree: u64,
    filter: CensusFilter,
    jobs: Option<usize>,
) -> Result<Vec<CensusRecord>> {
    if !(2..=4).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    let run = || -> Vec<CensusRecord> {
        let first = d as u64 + 1;
        let mut per_degree: Vec<Vec<CensusRecord>> = (first..=max_degree.max(first - 1))
            .into_par_iter()
            .map(|degree| census_degree(d + 1, degree, filter))
            .collect();
        let mut out: Vec<CensusRecord> = per_degree.iter_mut().flat_map(std::mem::take).collect();
        out.sort_by(|a, b| (a.degree, a.weights.weights()).cmp(&(b.degree, b.weights.weights())));
        out
    };
    match jobs {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::Domain(e.to_string()))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}

/// TSV rendering with a `#` header line.
pub fn census_tsv(
    d: usize,
    max_degree: u64,
    filter: CensusFilter,
    records: &[CensusRecord],
) -> String {
    let mut out = format!(
        "# dim={d}\tmax_degree={max_degree}\tfilter={filter}\tversion=wpsmirror {}\n",
        env!("CARGO_PKG_VERSION")
    );
    for r in records {
        out.push_str(&r.tsv_line());
        out.push('\n');
    }
    out
}

fn census_degree(m: usize, degree: u64, filter: CensusFilter) -> Vec<CensusRecord> {
    let mut found: Vec<Vec<u64>> = Vec::new();
    let mut chosen = Vec::with_capacity(m);
    let cap = match filter {
        // both properties force 2 w_i <= w
        CensusFilter::Transverse | CensusFilter::Ip => degree / 2,
        CensusFilter::All => degree - (m as u64 - 1),
    };
    let prune = filter == CensusFilter::Transverse;
    search(m, degree, degree, cap, prune, &mut chosen, &mut found);

    let mut out = Vec::new();
    for mut ws in found {
        ws.sort_unstable();
        let Ok(w) = WeightVector::new(ws) else {
            continue;
        };
        if !w.is_well_formed() {
            continue;
        }
        let record = match filter {
            CensusFilter::Transverse => {
                if !is_transverse(&w) {
                    continue;
                }
                let ip = has_ip_property(&w);
                CensusRecord::new(w, true, ip)
            }
            CensusFilter::Ip => {
                if !has_ip_property(&w) {
                    continue;
                }
                let t = is_transverse(&w);
                CensusRecord::new(w, t, true)
            }
            CensusFilter::All => {
                let t = is_transverse(&w);
                let ip = has_ip_property(&w);
                CensusRecord::new(w, t, ip)
            }
        };
        out.push(record);
    }
    out
}

/// Values a future (smaller or equal) weight is forced to take so that every
/// chosen weight meets the singleton condition; `None` if impossible.
fn forced_values(chosen: &[u64], degree: u64, cap: u64) -> Option<Vec<u64>> {
    let mut forced: Vec<u64> = Vec::new();
    for (i, &x) in chosen.iter().enumerate() {
        if degree.is_multiple_of(x) {
            continue;
        }
        let partner = chosen
            .iter()
            .enumerate()
            .any(|(j, &y)| j != i && (degree - y).is_multiple_of(x));
        if partner {
            continue;
        }
        let f = degree % x;
        if f > cap {
            return None;
        }
        if !forced.contains(&f) {
            forced.push(f);
        }
    }
    Some(forced)
}

/// Descending weights: `slots` left to choose, summing to `rest`, each at
/// most `last`.
fn search(
    slots: usize,
    degree: u64,
    rest: u64,
    last: u64,
    prune: bool,
    chosen: &mut Vec<u64>,
    found: &mut Vec<Vec<u64>>,
) {
    let s = slots as u64;
    if rest < s || rest > s * last {
        return;
    }
    if slots == 1 {
        chosen.push(rest);
        let ok = !prune || forced_values(chosen, degree, 0).is_some_and(|f| f.is_empty());
        if ok {
            found.push(chosen.clone());
        }
        chosen.pop();
        return;
    }
    let cap = last.min(rest - (s - 1));
    if prune {
        let Some(mut forced) = forced_values(chosen, degree, cap) else {
            return;
        };
        if forced.len() > slots {
            return;
        }
        let fixed: u64 = forced.iter().sum();
        if forced.len() == slots || forced.len() + 1 == slots {
            if forced.len() + 1 == slots {
                if fixed >= rest {
                    return;
                }
                forced.push(rest - fixed);
            } else if fixed != rest {
                return;
            }
            forced.sort_unstable_by(|a, b| b.cmp(a));
            if forced[0] > last {
                return;
            }
            let before = chosen.len();
            chosen.extend_from_slice(&forced);
            if forced_values(chosen, degree, 0).is_some_and(|f| f.is_empty()) {
                found.push(chosen.clone());
            }
            chosen.truncate(before);
            return;
        }
    }
    let lo = rest.div_ceil(s);
    for x in (lo..=cap).rev() {
        chosen.push(x);
        search(slots - 1, degree, rest - x, x, prune, chosen, found);
        chosen.pop();
    }
}
