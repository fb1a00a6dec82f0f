//! Exhaustive enumeration of tournaments: the ground-truth oracle for every
//! counting identity in the crate.
//!
//! Tournaments on `n` vertices are walked in ascending bitmask order, all
//! `2^{n(n-1)/2}` of them. Classification runs as an embarrassingly parallel
//! map-reduce with commutative counters, so worker count never affects the
//! result.

use std::collections::BTreeMap;

use num::BigInt;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::forest::{is_ascending, type_of, BiorderedCode, ParentFunction};
use crate::perm::Permutation;
use crate::tournament::{is_alt_acyclic, is_semiacyclic, Tournament, MAX_VERTICES};

/// Default enumeration cap: n = 8 is 2^28 tournaments.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("vertex count {n} exceeds enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    BadVertexCount(usize),
}

fn check_cap(n: usize, cap: usize) -> Result<(), EnumerationError> {
    if !(1..=MAX_VERTICES).contains(&n) {
        Err(EnumerationError::BadVertexCount(n))
    } else if n > cap {
        Err(EnumerationError::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// All tournaments on `{1..n}` in ascending bitmask order.
pub fn enumerate_tournaments(
    n: usize,
) -> Result<impl Iterator<Item = Tournament>, EnumerationError> {
    enumerate_tournaments_capped(n, DEFAULT_MAX_N)
}

pub fn enumerate_tournaments_capped(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = Tournament>, EnumerationError> {
    check_cap(n, cap)?;
    let pairs = n * (n - 1) / 2;
    Ok((0..1u64 << pairs).map(move |mask| Tournament::from_mask_unchecked(n, mask)))
}

/// Exhaustive classification counts for all tournaments on `{1..n}`.
///
/// `ascending` counts tournaments that are both alt-acyclic and ascending;
/// `by_type` maps `(i, j)` to the number of alt-acyclic tournaments of that
/// type, so its values sum to `alt_acyclic`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub total: BigInt,
    pub alt_acyclic: BigInt,
    pub ascending: BigInt,
    pub semiacyclic: BigInt,
    pub by_type: BTreeMap<(usize, usize), BigInt>,
}

impl CountReport {
    /// One `i,j,count` row per type cell.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,count\n");
        for (&(i, j), count) in &self.by_type {
            out.push_str(&format!("{i},{j},{count}\n"));
        }
        out
    }
}

impl Serialize for CountReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Cell {
            i: usize,
            j: usize,
            count: String,
        }
        let mut s = serializer.serialize_struct("CountReport", 6)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("total", &self.total.to_string())?;
        s.serialize_field("alt_acyclic", &self.alt_acyclic.to_string())?;
        s.serialize_field("ascending", &self.ascending.to_string())?;
        s.serialize_field("semiacyclic", &self.semiacyclic.to_string())?;
        let cells: Vec<Cell> = self
            .by_type
            .iter()
            .map(|(&(i, j), count)| Cell {
                i,
                j,
                count: count.to_string(),
            })
            .collect();
        s.serialize_field("by_type", &cells)?;
        s.end()
    }
}

#[derive(Clone)]
struct Tally {
    n: usize,
    alt: u64,
    asc: u64,
    semi: u64,
    /// flattened (i-1)*n + j
    by_type: Vec<u64>,
}

impl Tally {
    fn new(n: usize) -> Self {
        Tally {
            n,
            alt: 0,
            asc: 0,
            semi: 0,
            by_type: vec![0; n * n],
        }
    }

    fn record(mut self, t: &Tournament) -> Self {
        if is_alt_acyclic(t) {
            self.alt += 1;
            let ty = type_of(t).expect("alt-acyclic tournaments have a type");
            self.by_type[(ty.i - 1) * self.n + ty.j] += 1;
            if is_ascending(t) {
                self.asc += 1;
            }
        }
        if is_semiacyclic(t) {
            self.semi += 1;
        }
        self
    }

    fn combine(mut self, other: Self) -> Self {
        self.alt += other.alt;
        self.asc += other.asc;
        self.semi += other.semi;
        for (a, b) in self.by_type.iter_mut().zip(other.by_type) {
            *a += b;
        }
        self
    }
}

pub fn count_report(n: usize) -> Result<CountReport, EnumerationError> {
    count_report_capped(n, DEFAULT_MAX_N)
}

pub fn count_report_capped(n: usize, cap: usize) -> Result<CountReport, EnumerationError> {
    check_cap(n, cap)?;
    let pairs = n * (n - 1) / 2;
    let total = 1u64 << pairs;
    let tally = (0..total)
        .into_par_iter()
        .fold(
            || Tally::new(n),
            |acc, mask| acc.record(&Tournament::from_mask_unchecked(n, mask)),
        )
        .reduce(|| Tally::new(n), Tally::combine);
    let mut by_type = BTreeMap::new();
    for i in 1..=n {
        for j in 0..n {
            let c = tally.by_type[(i - 1) * n + j];
            if c > 0 {
                by_type.insert((i, j), BigInt::from(c));
            }
        }
    }
    Ok(CountReport {
        n,
        total: BigInt::from(total),
        alt_acyclic: BigInt::from(tally.alt),
        ascending: BigInt::from(tally.asc),
        semiacyclic: BigInt::from(tally.semi),
        by_type,
    })
}

/// All codes `(lambda, p)` passing the largest-maximal test, in
/// lexicographic order of the word and then of the compact parent array.
/// These are exactly the largest-maximal representations of the alt-acyclic
/// tournaments on `{1..n}`.
pub fn enumerate_lmax_codes(
    n: usize,
) -> Result<impl Iterator<Item = BiorderedCode>, EnumerationError> {
    enumerate_lmax_codes_capped(n, DEFAULT_MAX_N)
}

pub fn enumerate_lmax_codes_capped(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = BiorderedCode>, EnumerationError> {
    check_cap(n, cap)?;
    Ok(Permutation::all(n).flat_map(move |pi| {
        parent_functions(n)
            .filter_map(move |p| {
                let code = BiorderedCode::new(pi.clone(), p).expect("sizes match");
                crate::forest::is_lmax_representation(&code).then_some(code)
            })
            .collect::<Vec<_>>()
    }))
}

/// All parent functions on `{1..n}` in lexicographic order of the compact
/// array (0 = infinity first).
pub fn parent_functions(n: usize) -> impl Iterator<Item = ParentFunction> {
    // digit d_i in 0..=n-i encodes p(i) = i + d_i, with d_i = 0 for infinity
    let mut digits = vec![0usize; n];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let compact: Vec<usize> = digits
            .iter()
            .enumerate()
            .map(|(idx, &d)| if d == 0 { 0 } else { idx + 1 + d })
            .collect();
        // odometer increment, most significant digit first for lex order
        let mut pos = n;
        loop {
            if pos == 0 {
                done = true;
                break;
            }
            pos -= 1;
            if digits[pos] < n - (pos + 1) {
                digits[pos] += 1;
                for d in digits[pos + 1..].iter_mut() {
                    *d = 0;
                }
                break;
            }
        }
        Some(ParentFunction::from_compact(&compact).expect("generated parents are valid"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tournament_stream_sizes() {
        assert_eq!(enumerate_tournaments(1).unwrap().count(), 1);
        assert_eq!(enumerate_tournaments(3).unwrap().count(), 8);
        assert_eq!(enumerate_tournaments(5).unwrap().count(), 1024);
        assert!(matches!(
            enumerate_tournaments(9),
            Err(EnumerationError::CapExceeded { n: 9, cap: 8 })
        ));
        assert!(enumerate_tournaments_capped(9, 9).is_ok());
        assert!(enumerate_tournaments_capped(0, 8).is_err());
    }

    #[test]
    fn parent_function_stream() {
        // sizes multiply to n!
        assert_eq!(parent_functions(3).count(), 6);
        assert_eq!(parent_functions(4).count(), 24);
        let first: Vec<_> = parent_functions(2).map(|p| p.to_compact()).collect();
        assert_eq!(first, vec![vec![0, 0], vec![2, 0]]);
    }

    #[test]
    fn report_small_counts() {
        let r = count_report(4).unwrap();
        assert_eq!(r.total, BigInt::from(64));
        assert_eq!(r.alt_acyclic, BigInt::from(56));
        assert_eq!(r.ascending, BigInt::from(17));
        assert_eq!(r.semiacyclic, BigInt::from(36));
        // A(4,2,2) = 2! * 11 = 22
        assert_eq!(r.by_type[&(2, 2)], BigInt::from(22));
        let sum: BigInt = r.by_type.values().sum();
        assert_eq!(sum, r.alt_acyclic);
        assert!(r.ascending <= r.alt_acyclic);
        assert!(r.semiacyclic <= r.alt_acyclic);
        assert!(r.alt_acyclic <= r.total);
    }

    #[test]
    fn report_n5_counts() {
        let r = count_report(5).unwrap();
        assert_eq!(r.alt_acyclic, BigInt::from(608));
        assert_eq!(r.ascending, BigInt::from(155));
        assert_eq!(r.semiacyclic, BigInt::from(246));
    }

    #[test]
    fn report_is_deterministic_across_worker_counts() {
        let baseline = count_report(4).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let single = pool.install(|| count_report(4).unwrap());
        assert_eq!(baseline, single);
    }

    #[test]
    fn lmax_code_stream_counts() {
        let two: Vec<_> = enumerate_lmax_codes(2).unwrap().collect();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].pi().word(), &[1, 2]);
        assert_eq!(two[0].p().to_compact(), vec![0, 0]);
        assert_eq!(two[1].p().to_compact(), vec![2, 0]);
        assert_eq!(enumerate_lmax_codes(3).unwrap().count(), 8);
        assert_eq!(enumerate_lmax_codes(5).unwrap().count(), 608);
    }

    #[test]
    fn report_serialization() {
        let r = count_report(3).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["alt_acyclic"], "8");
        assert_eq!(json["by_type"][0]["i"], 1);
        let csv = r.to_csv();
        assert!(csv.starts_with("i,j,count\n"));
        assert!(csv.contains("3,0,1\n"));
    }
}
