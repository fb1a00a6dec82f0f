//! The cross-check suite behind `altacyclic verify`.
//!
//! Each check computes the same quantity along independent routes and
//! renders both sides as strings; a check passes exactly when the strings
//! agree. Output is one TAP-style line per check, plus a JSON summary in
//! JSON mode.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use num::rational::BigRational;
use num::{BigInt, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use altacyclic::arrangement::{
    characteristic_polynomial, chi_table, direct_point_count, region_count, tournament_of_point,
    witness_point,
};
use altacyclic::bijections::{
    ds_decode, ds_encode, median_excedant_count, nm_model, nm_model_count, pair_vector_count,
    pair_vector_model, pair_vectors_to_set_sequence, phi,
};
use altacyclic::enumeration::{count_report, enumerate_lmax_codes, enumerate_tournaments};
use altacyclic::forest::{
    decode, induce_tournament, largest_maximal_representation, BiorderedCode,
};
use altacyclic::numbers::{
    factorial, genocchi_first, legendre_stirling, median_genocchi, normalized_median_genocchi,
    semiacyclic_count, type_table,
};
use altacyclic::perm::Permutation;
use altacyclic::series::{alpha_coefficient, genocchi_first_series, median_genocchi_series};
use altacyclic::tournament::{
    has_alternating_4cycle, has_alternating_closed_walk, is_alt_acyclic, is_semiacyclic,
    rawalk_order, Tournament,
};

pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    pub samples: u64,
}

#[derive(Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: &'static str,
    pub expected: String,
    pub actual: String,
    pub elapsed_ms: u128,
}

fn run_check(name: &'static str, body: impl FnOnce() -> (String, String)) -> CheckResult {
    let start = Instant::now();
    let (expected, actual) = body();
    CheckResult {
        name,
        status: if expected == actual { "pass" } else { "fail" },
        expected,
        actual,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn join<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn alt_acyclic_counts(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(8);
    run_check("alt-acyclic-counts-four-ways", || {
        let reference = join((1..=top).map(median_genocchi));
        let brute = join((1..=top).map(|n| count_report(n).unwrap().alt_acyclic));
        let table = join((1..=top).map(|n| type_table(n).total()));
        let regions = join((1..=top).map(region_count));
        (
            format!("brute={reference} table={reference} regions={reference}"),
            format!("brute={brute} table={table} regions={regions}"),
        )
    })
}

fn ascending_counts(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(8);
    run_check("ascending-counts", || {
        let reference = join((1..=top).map(genocchi_first));
        let brute = join((1..=top).map(|n| count_report(n).unwrap().ascending));
        let series = join(genocchi_first_series(top).unwrap());
        (
            format!("brute={reference} series={reference}"),
            format!("brute={brute} series={series}"),
        )
    })
}

fn type_census(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(5);
    run_check("type-census-matches-triangle", || {
        let mut expected = String::new();
        let mut actual = String::new();
        for n in 1..=top {
            let table = type_table(n);
            let report = count_report(n).unwrap();
            for i in 1..=n {
                for j in 0..n {
                    let a = table.a(i, j);
                    if a.is_zero() {
                        continue;
                    }
                    let counted = report
                        .by_type
                        .get(&(i, j))
                        .cloned()
                        .unwrap_or_else(BigInt::zero);
                    expected.push_str(&format!("{n}.{i}.{j}={a};"));
                    actual.push_str(&format!("{n}.{i}.{j}={counted};"));
                }
            }
        }
        (expected, actual)
    })
}

fn ds_round_trip(cfg: &VerifyConfig) -> CheckResult {
    let top = (cfg.max_n + 1).min(7);
    run_check("descent-code-round-trip", || {
        let mut total = 0u64;
        let mut good = 0u64;
        for n in 1..=top {
            for pi in Permutation::all(n) {
                total += 1;
                let f = ds_encode(&pi);
                let mut tops: Vec<usize> = pi
                    .descent_positions()
                    .iter()
                    .map(|&i| pi.value_at(i + 1))
                    .collect();
                tops.sort_unstable();
                if ds_decode(&f) == pi && f.missing_from_range() == tops {
                    good += 1;
                }
            }
        }
        (format!("{total}/{total}"), format!("{good}/{total}"))
    })
}

fn decode_induce_round_trip(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(5);
    run_check("decode-induce-round-trip", || {
        let mut total = 0u64;
        let mut good = 0u64;
        for n in 1..=top {
            for t in enumerate_tournaments(n).unwrap() {
                if !is_alt_acyclic(&t) {
                    continue;
                }
                let order = rawalk_order(&t).unwrap();
                for pi in order.linear_extensions() {
                    total += 1;
                    let p = decode(&t, &pi).unwrap();
                    let code = BiorderedCode::new(pi, p).unwrap();
                    if induce_tournament(&code) == t {
                        good += 1;
                    }
                }
            }
        }
        (format!("{total}/{total}"), format!("{good}/{total}"))
    })
}

fn lmax_bijection(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(5);
    run_check("lmax-representation-bijection", || {
        let expected = join((1..=top).map(median_genocchi));
        let mut counts = Vec::new();
        for n in 1..=top {
            let mut codes = HashSet::new();
            for t in enumerate_tournaments(n).unwrap() {
                if !is_alt_acyclic(&t) {
                    continue;
                }
                let code = largest_maximal_representation(&t).unwrap();
                if induce_tournament(&code) != t {
                    counts.push(BigInt::from(-1));
                    continue;
                }
                codes.insert(format!("{code:?}"));
            }
            let enumerated: HashSet<String> = enumerate_lmax_codes(n)
                .unwrap()
                .map(|c| format!("{c:?}"))
                .collect();
            counts.push(if codes == enumerated {
                BigInt::from(codes.len() as u64)
            } else {
                BigInt::from(-1)
            });
        }
        (expected, join(counts))
    })
}

fn closed_walk_equivalence(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(6);
    run_check("closed-walk-equals-4cycle", || {
        let mut total = 0u64;
        let mut good = 0u64;
        for n in 1..=top {
            for t in enumerate_tournaments(n).unwrap() {
                total += 1;
                if has_alternating_closed_walk(&t) == has_alternating_4cycle(&t) {
                    good += 1;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let pairs = 8 * 7 / 2;
        for _ in 0..cfg.samples {
            total += 1;
            let t = Tournament::new(8, rng.random_range(0..1u64 << pairs)).unwrap();
            if has_alternating_closed_walk(&t) == has_alternating_4cycle(&t) {
                good += 1;
            }
        }
        (format!("{total}/{total}"), format!("{good}/{total}"))
    })
}

fn finite_field_oracle(_cfg: &VerifyConfig) -> CheckResult {
    run_check("finite-field-point-count", || {
        let mut expected = String::new();
        let mut actual = String::new();
        for n in 1..=3usize {
            let poly = characteristic_polynomial(n);
            for q in [5u64, 7, 11, 13] {
                expected.push_str(&format!("{n}.{q}={};", poly.eval(&BigInt::from(q))));
                actual.push_str(&format!("{n}.{q}={};", direct_point_count(n, q).unwrap()));
            }
        }
        (expected, actual)
    })
}

fn legendre_stirling_bridge(_cfg: &VerifyConfig) -> CheckResult {
    run_check("legendre-stirling-bridge", || {
        let mut expected = String::new();
        let mut actual = String::new();
        for n in 1..=10usize {
            let table = chi_table(n);
            for k in 1..=n {
                let f = factorial(k);
                let mut rhs = &f * &f * legendre_stirling(n, k).unwrap();
                if (n - k) % 2 == 1 {
                    rhs = -rhs;
                }
                expected.push_str(&format!("{n}.{k}={rhs};"));
                actual.push_str(&format!("{n}.{k}={};", table.r_value(k)));
            }
        }
        (expected, actual)
    })
}

fn generating_functions(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(6);
    run_check("generating-functions", || {
        let mut expected = String::new();
        let mut actual = String::new();
        for n in 1..=top {
            let table = type_table(n);
            for i in 1..=n {
                for j in 0..n {
                    expected.push_str(&format!(
                        "{n}.{i}.{j}={};",
                        BigRational::from_integer(table.normalized(i, j))
                    ));
                    actual.push_str(&format!("{n}.{i}.{j}={};", alpha_coefficient(n, i, j)));
                }
            }
        }
        expected.push_str(&format!(
            "median={} first={}",
            join((1..=8).map(median_genocchi)),
            join((1..=8).map(genocchi_first)),
        ));
        actual.push_str(&format!(
            "median={} first={}",
            join(median_genocchi_series(8).unwrap()),
            join(genocchi_first_series(8).unwrap()),
        ));
        (expected, actual)
    })
}

fn combinatorial_models(cfg: &VerifyConfig) -> CheckResult {
    run_check("excedant-and-set-models", || {
        let mut expected = String::new();
        let mut actual = String::new();
        for n in 1..=cfg.max_n.min(4) {
            let table = type_table(n);
            expected.push_str(&format!("median.{n}={};", median_genocchi(n)));
            actual.push_str(&format!("median.{n}={};", median_excedant_count(n, None)));
            for i in 1..=n {
                expected.push_str(&format!("median.{n}.{i}={};", table.root_count_sum(i)));
                actual.push_str(&format!(
                    "median.{n}.{i}={};",
                    median_excedant_count(n, Some(i))
                ));
            }
        }
        for n in 1..=cfg.max_n.min(5) {
            expected.push_str(&format!("pairvec.{n}={};", median_genocchi(n)));
            actual.push_str(&format!("pairvec.{n}={};", pair_vector_count(n, None)));
        }
        for n in 1..=cfg.max_n.min(5) {
            expected.push_str(&format!(
                "nm.{n}={};",
                normalized_median_genocchi(n).unwrap()
            ));
            actual.push_str(&format!("nm.{n}={};", nm_model_count(n)));
            // free involution action on pair vectors of length n, orbit
            // representatives = set sequences
            let model = pair_vector_model(n + 1, None);
            let mut orbits: BTreeMap<Vec<(usize, usize)>, u64> = BTreeMap::new();
            let mut free = true;
            for pv in &model {
                for k in 1..=n {
                    if phi(k, pv).unwrap() == *pv {
                        free = false;
                    }
                }
                *orbits
                    .entry(pair_vectors_to_set_sequence(pv).sets().to_vec())
                    .or_default() += 1;
            }
            let reps: HashSet<_> = nm_model(n).into_iter().map(|s| s.sets().to_vec()).collect();
            let orbit_keys: HashSet<_> = orbits.keys().cloned().collect();
            expected.push_str(&format!("orbits.{n}=free,uniform,{};", reps.len()));
            actual.push_str(&format!(
                "orbits.{n}={},{},{};",
                if free { "free" } else { "fixed-point" },
                if orbits.values().all(|&c| c == 1 << n) {
                    "uniform"
                } else {
                    "ragged"
                },
                if orbit_keys == reps {
                    orbits.len().to_string()
                } else {
                    "mismatched-representatives".to_string()
                }
            ));
        }
        (expected, actual)
    })
}

fn region_labeling(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(5);
    run_check("region-labeling-round-trip", || {
        let expected = join((1..=top).map(median_genocchi));
        let mut counts = Vec::new();
        for n in 1..=top {
            let mut good = 0i64;
            for t in enumerate_tournaments(n).unwrap() {
                if !is_alt_acyclic(&t) {
                    continue;
                }
                let pt = witness_point(&t).unwrap();
                if tournament_of_point(&pt).unwrap() == t {
                    good += 1;
                } else {
                    good = -1;
                    break;
                }
            }
            counts.push(good);
        }
        (expected, join(counts))
    })
}

fn semiacyclic_cross_check(cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.max_n.min(6);
    run_check("semiacyclic-formula-and-inclusion", || {
        let expected = join((1..=top).map(|n| semiacyclic_count(n).unwrap()));
        let mut counts = Vec::new();
        for n in 1..=top {
            let mut count = 0i64;
            for t in enumerate_tournaments(n).unwrap() {
                if is_semiacyclic(&t) {
                    if !is_alt_acyclic(&t) {
                        count = -1;
                        break;
                    }
                    count += 1;
                }
            }
            counts.push(count);
        }
        (expected, join(counts))
    })
}

pub fn run_suite(cfg: &VerifyConfig) -> Vec<CheckResult> {
    vec![
        alt_acyclic_counts(cfg),
        ascending_counts(cfg),
        type_census(cfg),
        ds_round_trip(cfg),
        decode_induce_round_trip(cfg),
        lmax_bijection(cfg),
        closed_walk_equivalence(cfg),
        finite_field_oracle(cfg),
        legendre_stirling_bridge(cfg),
        generating_functions(cfg),
        combinatorial_models(cfg),
        region_labeling(cfg),
        semiacyclic_cross_check(cfg),
    ]
}

/// Print TAP-style lines (and a JSON summary in JSON mode); returns the
/// number of failed checks.
pub fn report(results: &[CheckResult], json: bool) -> usize {
    let failed = results.iter().filter(|r| r.status == "fail").count();
    if json {
        let summary = serde_json::json!({
            "passed": results.len() - failed,
            "failed": failed,
            "checks": results,
        });
        println!("{summary}");
        return failed;
    }
    println!("1..{}", results.len());
    for (idx, r) in results.iter().enumerate() {
        if r.status == "pass" {
            println!("ok {} - {} # {}ms", idx + 1, r.name, r.elapsed_ms);
        } else {
            println!(
                "not ok {} - {} # expected {} actual {}",
                idx + 1,
                r.name,
                r.expected,
                r.actual
            );
        }
    }
    println!("# {} passed, {} failed", results.len() - failed, failed);
    failed
}
