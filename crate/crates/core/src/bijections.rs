//! Bijections and combinatorial models around excedant functions.
//!
//! An *excedant* function satisfies `f(i) >= i` everywhere. The
//! descent-sensitive code turns permutations into excedant functions so that
//! the values missing from the range are exactly the letters following a
//! descent. Composing it with the parent function of a largest-maximal code
//! produces the classical excedant-function and pair-vector models for the
//! Genocchi numbers of both kinds, plus a set-sequence model for the
//! normalized median Genocchi numbers obtained as orbit representatives of a
//! free involution action.

use num::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::forest::{is_lmax_representation, BiorderedCode};
use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("excedant function must satisfy i <= f(i) <= {m}, got f({i}) = {v}")]
    NotExcedant { i: usize, v: usize, m: usize },
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("index {k} out of range 1..={len}")]
    OutOfRange { k: usize, len: usize },
    #[error("code is not a largest-maximal representation")]
    NotLmax,
    #[error("tournament of the code is not ascending")]
    NotAscending,
}

/// A function on `{1..m}` with `i <= f(i) <= m` for every `i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "Vec<usize>")]
pub struct ExcedantFunction {
    values: Vec<usize>,
}

impl ExcedantFunction {
    pub fn new(values: Vec<usize>) -> Result<Self, BijectionError> {
        let m = values.len();
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if v < i || v > m {
                return Err(BijectionError::NotExcedant { i, v, m });
            }
        }
        Ok(ExcedantFunction { values })
    }

    pub fn identity(m: usize) -> Self {
        ExcedantFunction {
            values: (1..=m).collect(),
        }
    }

    /// Domain size.
    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Bitmask of the range, bit `v-1` for value `v`.
    pub fn range_mask(&self) -> u64 {
        self.values.iter().fold(0u64, |m, &v| m | 1 << (v - 1))
    }

    /// Values of `{1..m}` missing from the range, ascending.
    pub fn missing_from_range(&self) -> Vec<usize> {
        let mask = self.range_mask();
        (1..=self.m())
            .filter(|&v| mask >> (v - 1) & 1 == 0)
            .collect()
    }

    pub fn preimage_count(&self, v: usize) -> usize {
        self.values.iter().filter(|&&w| w == v).count()
    }
}

impl std::fmt::Debug for ExcedantFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ExcedantFunction{:?}", self.values)
    }
}

impl From<ExcedantFunction> for Vec<usize> {
    fn from(f: ExcedantFunction) -> Vec<usize> {
        f.values
    }
}

/// Descent-sensitive code of a permutation. The letters `n, n-1, ..., 1` are
/// inserted into a word bracketed by sentinels `0` and `n+1`; inserting `i`
/// between neighbors `u` and `v` records
///
/// - `f(i) = v` when `u > v`,
/// - `f(i) =` the leftmost starting letter of the maximal decreasing run
///   ending at `u` when `0 < u < v`,
/// - `f(i) = i` when `u = 0`.
///
/// The result is excedant, and `{1..n}` minus its range is exactly the set
/// of letters that follow a descent of the word.
pub fn ds_encode(pi: &Permutation) -> ExcedantFunction {
    let n = pi.n();
    let mut word: Vec<usize> = Vec::with_capacity(n + 2);
    word.push(0);
    word.push(n + 1);
    let mut values = vec![0usize; n];
    for i in (1..=n).rev() {
        let pos_i = pi.position_of(i);
        let idx = 1 + (i + 1..=n).filter(|&w| pi.position_of(w) < pos_i).count();
        let u = word[idx - 1];
        let v = word[idx];
        values[i - 1] = if u == 0 {
            i
        } else if u > v {
            v
        } else {
            let mut k = idx - 1;
            while word[k - 1] > word[k] {
                k -= 1;
            }
            word[k]
        };
        word.insert(idx, i);
    }
    ExcedantFunction::new(values).expect("descent-sensitive code is excedant")
}

/// Inverse of [`ds_encode`]: rebuilds the insertion process. `f(i) = i`
/// forces insertion right after the sentinel `0`; otherwise `i` goes right
/// before `w = f(i)` when `w`'s predecessor is larger, and right after the
/// maximal decreasing run starting at `w` when it is smaller.
pub fn ds_decode(f: &ExcedantFunction) -> Permutation {
    let n = f.m();
    let mut word: Vec<usize> = Vec::with_capacity(n + 2);
    word.push(0);
    word.push(n + 1);
    for i in (1..=n).rev() {
        let fi = f.value(i);
        if fi == i {
            word.insert(1, i);
            continue;
        }
        let pos_w = word
            .iter()
            .position(|&x| x == fi)
            .expect("range values above i are present");
        if word[pos_w - 1] > fi {
            word.insert(pos_w, i);
        } else {
            let mut k = pos_w;
            while word[k + 1] < word[k] {
                k += 1;
            }
            word.insert(k + 1, i);
        }
    }
    Permutation::new(word[1..=n].to_vec()).expect("decoded word is a permutation")
}

/// Interleave a total parent restriction `p(1..n-1)` (each `p(j) >= j+1`)
/// and an excedant `f(2..n)` into one excedant function on `{1..2n-2}` with
/// even values: odd slots carry `2 p(j) - 2`, even slots `2 f(j) - 2`.
pub fn fhat_encode(
    p_tilde: &[usize],
    f_tilde: &[usize],
) -> Result<ExcedantFunction, BijectionError> {
    let n = p_tilde.len() + 1;
    if f_tilde.len() + 1 != n {
        return Err(BijectionError::DomainViolation(format!(
            "parent restriction has {} entries but excedant restriction has {}",
            p_tilde.len(),
            f_tilde.len()
        )));
    }
    for (idx, &p) in p_tilde.iter().enumerate() {
        let j = idx + 1;
        if p < j + 1 || p > n {
            return Err(BijectionError::DomainViolation(format!(
                "parent value p({j}) = {p} outside {}..={n}",
                j + 1
            )));
        }
    }
    for (idx, &v) in f_tilde.iter().enumerate() {
        let j = idx + 2;
        if v < j || v > n {
            return Err(BijectionError::DomainViolation(format!(
                "excedant value f({j}) = {v} outside {j}..={n}"
            )));
        }
    }
    let mut values = vec![0usize; 2 * n - 2];
    for j in 1..n {
        values[2 * j - 2] = 2 * p_tilde[j - 1] - 2; // slot 2j-1
        values[2 * j - 1] = 2 * f_tilde[j - 1] - 2; // slot 2j carries f(j+1)
    }
    ExcedantFunction::new(values)
}

/// Inverse of [`fhat_encode`]: `p(j) = fhat(2j-1)/2 + 1` and
/// `f(j) = fhat(2j-2)/2 + 1`.
pub fn fhat_decode(fhat: &ExcedantFunction) -> Result<(Vec<usize>, Vec<usize>), BijectionError> {
    let m = fhat.m();
    if !m.is_multiple_of(2) {
        return Err(BijectionError::DomainViolation(format!(
            "domain size {m} is odd"
        )));
    }
    if let Some(&v) = fhat.values().iter().find(|&&v| v % 2 != 0) {
        return Err(BijectionError::DomainViolation(format!("value {v} is odd")));
    }
    let n = m / 2 + 1;
    let mut p_tilde = Vec::with_capacity(n - 1);
    let mut f_tilde = Vec::with_capacity(n - 1);
    for j in 1..n {
        p_tilde.push(fhat.value(2 * j - 1) / 2 + 1);
        f_tilde.push(fhat.value(2 * j) / 2 + 1);
    }
    Ok((p_tilde, f_tilde))
}

/// Dumont excedant function of an ascending tournament's largest-maximal
/// code: the word becomes its descent-sensitive code (dropping the forced
/// `f(1) = 1`), the parent function drops its forced root at `n`, and the
/// two restrictions interleave into a function onto `{2, 4, ..., 2n-2}`.
pub fn ascending_code_to_dumont(code: &BiorderedCode) -> Result<ExcedantFunction, BijectionError> {
    let n = code.n();
    if !is_lmax_representation(code) {
        return Err(BijectionError::NotLmax);
    }
    let mut p_tilde = Vec::with_capacity(n - 1);
    for i in 1..n {
        match code.p().parent(i) {
            Some(p) => p_tilde.push(p),
            None => return Err(BijectionError::NotAscending),
        }
    }
    let f = ds_encode(code.pi());
    if f.value(1) != 1 {
        return Err(BijectionError::NotLmax);
    }
    let f_tilde: Vec<usize> = (2..=n).map(|j| f.value(j)).collect();
    fhat_encode(&p_tilde, &f_tilde)
}

/// Median variant for an arbitrary largest-maximal code: roots map to the
/// top value `2n-1` on their odd slot (the slot of the forced root `n`
/// included), everything else as in [`fhat_encode`]. The image is the
/// excedant model whose size is the median Genocchi number, and the number
/// of preimages of `2n-1` is the root count `i` of the code's type.
pub fn code_to_median_excedant(code: &BiorderedCode) -> Result<ExcedantFunction, BijectionError> {
    let n = code.n();
    if !is_lmax_representation(code) {
        return Err(BijectionError::NotLmax);
    }
    let f = ds_encode(code.pi());
    if f.value(1) != 1 {
        return Err(BijectionError::NotLmax);
    }
    let mut values = vec![0usize; 2 * n - 1];
    for j in 1..=n {
        values[2 * j - 2] = match code.p().parent(j) {
            Some(p) => 2 * p - 2,
            None => 2 * n - 1,
        };
    }
    for j in 2..=n {
        values[2 * j - 3] = 2 * f.value(j) - 2;
    }
    ExcedantFunction::new(values)
}

fn backtrack_constrained(
    domain: usize,
    candidates: &[Vec<usize>],
    required: u64,
    visit: &mut dyn FnMut(&[usize]),
) {
    fn go(
        pos: usize,
        domain: usize,
        candidates: &[Vec<usize>],
        required: u64,
        seen: u64,
        values: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if pos > domain {
            if required & !seen == 0 {
                visit(values);
            }
            return;
        }
        // a required value below pos can no longer be produced
        let low = (1u64 << (pos - 1)) - 1;
        if required & !seen & low != 0 {
            return;
        }
        for &v in &candidates[pos - 1] {
            values.push(v);
            go(
                pos + 1,
                domain,
                candidates,
                required,
                seen | 1 << (v - 1),
                values,
                visit,
            );
            values.pop();
        }
    }
    let mut values = Vec::with_capacity(domain);
    go(1, domain, candidates, required, 0, &mut values, visit);
}

fn evens_between(lo: usize, hi: usize) -> Vec<usize> {
    let start = lo + (lo % 2);
    (start..=hi).step_by(2).collect()
}

/// All excedant functions `{1..2m} -> {2, 4, ..., 2m}` whose range is the
/// full set of even values, in lexicographic order. There are `|G_{2m+2}|`
/// of them.
pub fn dumont_functions(m: usize) -> Vec<ExcedantFunction> {
    let mut out = Vec::new();
    dumont_functions_visit(m, &mut |values| {
        out.push(ExcedantFunction::new(values.to_vec()).expect("candidates are excedant"));
    });
    out
}

pub fn dumont_function_count(m: usize) -> BigInt {
    let mut count: u64 = 0;
    dumont_functions_visit(m, &mut |_| count += 1);
    BigInt::from(count)
}

fn dumont_functions_visit(m: usize, visit: &mut dyn FnMut(&[usize])) {
    let domain = 2 * m;
    let candidates: Vec<Vec<usize>> = (1..=domain).map(|pos| evens_between(pos, 2 * m)).collect();
    let required = evens_between(1, 2 * m)
        .into_iter()
        .fold(0u64, |mask, v| mask | 1 << (v - 1));
    backtrack_constrained(domain, &candidates, required, visit);
}

/// The excedant model for the median Genocchi numbers: functions on
/// `{1..2n-1}` with even slots capped at `2n-2` and range exactly
/// `{2, 4, ..., 2n-2} U {2n-1}`. With `fix_i` set, keeps only functions
/// sending exactly `fix_i` arguments to `2n-1`; that slice has size
/// `sum_j A(n, fix_i, j)`.
pub fn median_excedant_model(n: usize, fix_i: Option<usize>) -> Vec<ExcedantFunction> {
    let mut out = Vec::new();
    median_excedant_visit(n, fix_i, &mut |values| {
        out.push(ExcedantFunction::new(values.to_vec()).expect("candidates are excedant"));
    });
    out
}

pub fn median_excedant_count(n: usize, fix_i: Option<usize>) -> BigInt {
    let mut count: u64 = 0;
    median_excedant_visit(n, fix_i, &mut |_| count += 1);
    BigInt::from(count)
}

fn median_excedant_visit(n: usize, fix_i: Option<usize>, visit: &mut dyn FnMut(&[usize])) {
    assert!(n >= 1);
    let domain = 2 * n - 1;
    let top = 2 * n - 1;
    let candidates: Vec<Vec<usize>> = (1..=domain)
        .map(|pos| {
            let mut c = evens_between(pos, 2 * n - 2);
            if pos % 2 == 1 {
                c.push(top);
            }
            c
        })
        .collect();
    let required = evens_between(1, 2 * n - 2)
        .into_iter()
        .fold(1u64 << (top - 1), |mask, v| mask | 1 << (v - 1));
    backtrack_constrained(domain, &candidates, required, &mut |values| {
        if let Some(i) = fix_i {
            if values.iter().filter(|&&v| v == top).count() != i {
                return;
            }
        }
        visit(values);
    });
}

/// A pair of integer vectors of common length `m` with `0 <= a_k <= k` and
/// `1 <= b_k <= k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairVectors {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl PairVectors {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self, BijectionError> {
        if a.len() != b.len() {
            return Err(BijectionError::DomainViolation(format!(
                "vector lengths differ: {} vs {}",
                a.len(),
                b.len()
            )));
        }
        for (idx, (&ak, &bk)) in a.iter().zip(&b).enumerate() {
            let k = idx + 1;
            if ak > k || bk < 1 || bk > k {
                return Err(BijectionError::DomainViolation(format!(
                    "entry (a_{k}, b_{k}) = ({ak}, {bk}) outside 0..={k} x 1..={k}"
                )));
            }
        }
        Ok(PairVectors { a, b })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Whether the entries cover all of `{1..m}`.
    pub fn is_covering(&self) -> bool {
        let m = self.len();
        let mut mask = 0u64;
        for &v in self.a.iter().chain(&self.b) {
            if v > 0 {
                mask |= 1 << (v - 1);
            }
        }
        let full = if m == 0 { 0 } else { (1u64 << m) - 1 };
        mask & full == full
    }

    /// Number of zero entries of the `a`-vector. For the image of a
    /// largest-maximal code on `{1..n}` this is `i - 1`: the roots other
    /// than the forced one at `n`.
    pub fn zero_count(&self) -> usize {
        self.a.iter().filter(|&&v| v == 0).count()
    }
}

fn vectors_lex(lo: impl Fn(usize) -> usize + Copy, m: usize) -> Vec<Vec<usize>> {
    // all vectors v with lo(k) <= v_k <= k, lexicographic
    let mut out = Vec::new();
    let mut v: Vec<usize> = (1..=m).map(lo).collect();
    loop {
        out.push(v.clone());
        let mut pos = m;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if v[pos] < pos + 1 {
                v[pos] += 1;
                for k in pos + 1..m {
                    v[k] = lo(k + 1);
                }
                break;
            }
        }
    }
}

/// The pair-vector model for the median Genocchi numbers: pairs of length
/// `n-1` with `0 <= a_k <= k`, `1 <= b_k <= k` whose entries cover
/// `{1..n-1}`, in lexicographic order of the concatenated `(a, b)`. With
/// `fix_i` set, keeps only pairs with exactly `fix_i` zeros in `a` (the
/// slice matching type-root-count `fix_i + 1`).
pub fn pair_vector_model(n: usize, fix_i: Option<usize>) -> Vec<PairVectors> {
    let mut out = Vec::new();
    pair_vector_visit(n, fix_i, &mut |pv| out.push(pv.clone()));
    out
}

pub fn pair_vector_count(n: usize, fix_i: Option<usize>) -> BigInt {
    let mut count: u64 = 0;
    pair_vector_visit(n, fix_i, &mut |_| count += 1);
    BigInt::from(count)
}

fn pair_vector_visit(n: usize, fix_i: Option<usize>, visit: &mut dyn FnMut(&PairVectors)) {
    assert!(n >= 1);
    let m = n - 1;
    for a in vectors_lex(|_| 0, m) {
        if let Some(i) = fix_i {
            if a.iter().filter(|&&v| v == 0).count() != i {
                continue;
            }
        }
        for b in vectors_lex(|_| 1, m) {
            let pv = PairVectors { a: a.clone(), b };
            if pv.is_covering() {
                visit(&pv);
            }
        }
    }
}

/// Pairs of length `n` with `1 <= a_k, b_k <= k` whose entry set is exactly
/// `{1..n}`; there are `|G_{2n+2}|` of them.
pub fn dumont_pairs(n: usize) -> Vec<PairVectors> {
    let mut out = Vec::new();
    dumont_pairs_visit(n, &mut |pv| out.push(pv.clone()));
    out
}

pub fn dumont_pair_count(n: usize) -> BigInt {
    let mut count: u64 = 0;
    dumont_pairs_visit(n, &mut |_| count += 1);
    BigInt::from(count)
}

fn dumont_pairs_visit(n: usize, visit: &mut dyn FnMut(&PairVectors)) {
    for a in vectors_lex(|_| 1, n) {
        for b in vectors_lex(|_| 1, n) {
            let pv = PairVectors { a: a.clone(), b };
            if pv.is_covering() {
                visit(&pv);
            }
        }
    }
}

/// The pair of vectors carried by a Dumont function on `{1..2n}`:
/// `(a_i, b_i) = (n+1 - f(2n+1-2i)/2, n+1 - f(2n+2-2i)/2)`.
pub fn dumont_function_to_pair(f: &ExcedantFunction) -> Result<PairVectors, BijectionError> {
    let m = f.m();
    if !m.is_multiple_of(2) {
        return Err(BijectionError::DomainViolation(format!(
            "domain size {m} is odd"
        )));
    }
    let n = m / 2;
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for i in 1..=n {
        for (out, slot) in [(&mut a, 2 * n + 1 - 2 * i), (&mut b, 2 * n + 2 - 2 * i)] {
            let v = f.value(slot);
            if !v.is_multiple_of(2) {
                return Err(BijectionError::DomainViolation(format!(
                    "value f({slot}) = {v} is odd"
                )));
            }
            out.push(n + 1 - v / 2);
        }
    }
    PairVectors::new(a, b)
}

/// The pair of vectors carried by a largest-maximal code on `{1..n}`:
/// `a_k = n+1-p(n-k)` (zero for roots) and `b_k = n+1-f(n+1-k)` with `f` the
/// descent-sensitive code of the word.
pub fn code_to_pair_vectors(code: &BiorderedCode) -> Result<PairVectors, BijectionError> {
    let n = code.n();
    if !is_lmax_representation(code) {
        return Err(BijectionError::NotLmax);
    }
    let f = ds_encode(code.pi());
    if f.value(1) != 1 {
        return Err(BijectionError::NotLmax);
    }
    let mut a = Vec::with_capacity(n - 1);
    let mut b = Vec::with_capacity(n - 1);
    for k in 1..n {
        a.push(match code.p().parent(n - k) {
            Some(p) => n + 1 - p,
            None => 0,
        });
        b.push(n + 1 - f.value(n + 1 - k));
    }
    PairVectors::new(a, b)
}

/// The involution on pair vectors acting on coordinate `k`: swaps `a_k` and
/// `b_k` when they are distinct and nonzero, and exchanges `(b_k, b_k)` with
/// `(0, b_k)`. The `m` involutions commute and act freely; they preserve
/// membership in the covering model.
pub fn phi(k: usize, pv: &PairVectors) -> Result<PairVectors, BijectionError> {
    if k < 1 || k > pv.len() {
        return Err(BijectionError::OutOfRange { k, len: pv.len() });
    }
    let (ak, bk) = (pv.a[k - 1], pv.b[k - 1]);
    let (ak2, bk2) = if ak == 0 {
        (bk, bk)
    } else if ak == bk {
        (0, bk)
    } else {
        (bk, ak)
    };
    let mut a = pv.a.clone();
    let mut b = pv.b.clone();
    a[k - 1] = ak2;
    b[k - 1] = bk2;
    Ok(PairVectors { a, b })
}

/// A sequence of sets `S_1, ..., S_m` with `S_k` a one- or two-element
/// subset of `{1..k}`, stored as ordered pairs `u_k <= v_k` (equal entries
/// mean a singleton).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SetSequence {
    sets: Vec<(usize, usize)>,
}

impl SetSequence {
    pub fn new(sets: Vec<(usize, usize)>) -> Result<Self, BijectionError> {
        for (idx, &(u, v)) in sets.iter().enumerate() {
            let k = idx + 1;
            if u < 1 || u > v || v > k {
                return Err(BijectionError::DomainViolation(format!(
                    "set {{{u},{v}}} at index {k} is not a subset of 1..={k}"
                )));
            }
        }
        Ok(SetSequence { sets })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[(usize, usize)] {
        &self.sets
    }

    pub fn union_is_complete(&self) -> bool {
        let m = self.sets.len();
        let mut mask = 0u64;
        for &(u, v) in &self.sets {
            mask |= 1 << (u - 1);
            mask |= 1 << (v - 1);
        }
        let full = if m == 0 { 0 } else { (1u64 << m) - 1 };
        mask & full == full
    }
}

/// The set-sequence model for the normalized median Genocchi numbers:
/// sequences of one- or two-element sets `S_k` of `{1..k}` whose union is
/// all of `{1..n}`; there are `h_n` of them. Lexicographic in the flattened
/// `(u_1, v_1, u_2, v_2, ...)`.
pub fn nm_model(n: usize) -> Vec<SetSequence> {
    let mut out = Vec::new();
    nm_model_visit(n, &mut |s| out.push(s.clone()));
    out
}

pub fn nm_model_count(n: usize) -> BigInt {
    let mut count: u64 = 0;
    nm_model_visit(n, &mut |_| count += 1);
    BigInt::from(count)
}

fn nm_model_visit(n: usize, visit: &mut dyn FnMut(&SetSequence)) {
    fn go(
        k: usize,
        n: usize,
        mask: u64,
        sets: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(&SetSequence),
    ) {
        if k > n {
            let full = (1u64 << n) - 1;
            if mask == full {
                visit(&SetSequence { sets: sets.clone() });
            }
            return;
        }
        // |uncovered| can shrink by at most 2 per remaining position
        let uncovered = (((1u64 << n) - 1) & !mask).count_ones() as usize;
        if uncovered > 2 * (n - k + 1) {
            return;
        }
        for u in 1..=k {
            for v in u..=k {
                sets.push((u, v));
                go(k + 1, n, mask | 1 << (u - 1) | 1 << (v - 1), sets, visit);
                sets.pop();
            }
        }
    }
    let mut sets = Vec::with_capacity(n);
    go(1, n, 0, &mut sets, visit);
}

/// Orbit representative of a pair vector under the involutions: the sequence
/// `S_k = {a_k, b_k} intersect {1..k}`, which drops zeros.
pub fn pair_vectors_to_set_sequence(pv: &PairVectors) -> SetSequence {
    let sets =
        pv.a.iter()
            .zip(&pv.b)
            .map(
                |(&a, &b)| {
                    if a == 0 {
                        (b, b)
                    } else {
                        (a.min(b), a.max(b))
                    }
                },
            )
            .collect();
    SetSequence { sets }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn ds_encode_worked_example() {
        let f = ds_encode(&perm(&[6, 1, 5, 3, 4, 2]));
        assert_eq!(f.values(), &[5, 4, 4, 6, 6, 6]);
    }

    #[test]
    fn ds_encode_identity_and_decreasing() {
        assert_eq!(
            ds_encode(&Permutation::identity(5)).values(),
            &[1, 2, 3, 4, 5]
        );
        let f = ds_encode(&perm(&[5, 4, 3, 2, 1]));
        assert_eq!(f.values(), &[5, 5, 5, 5, 5]);
        assert_eq!(f.missing_from_range(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn ds_decode_worked_example() {
        let f = ExcedantFunction::new(vec![5, 4, 4, 6, 6, 6]).unwrap();
        assert_eq!(ds_decode(&f).word(), &[6, 1, 5, 3, 4, 2]);
        let id = ExcedantFunction::identity(4);
        assert!(ds_decode(&id).is_identity());
    }

    #[test]
    fn ds_round_trip_and_descent_law_exhaustive() {
        for n in 1..=6 {
            let mut seen = std::collections::HashSet::new();
            for pi in Permutation::all(n) {
                let f = ds_encode(&pi);
                assert_eq!(ds_decode(&f), pi);
                seen.insert(f.values().to_vec());
                // missing range values are exactly the letters after descents
                let mut tops: Vec<usize> = pi
                    .descent_positions()
                    .iter()
                    .map(|&i| pi.value_at(i + 1))
                    .collect();
                tops.sort_unstable();
                assert_eq!(f.missing_from_range(), tops);
            }
            // surjectivity onto all excedant functions: counts match n!
            let total: usize = seen.len();
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn excedant_validation() {
        assert!(ExcedantFunction::new(vec![1, 2]).is_ok());
        assert!(ExcedantFunction::new(vec![]).is_ok());
        assert!(matches!(
            ExcedantFunction::new(vec![0, 2]),
            Err(BijectionError::NotExcedant { i: 1, .. })
        ));
        assert!(ExcedantFunction::new(vec![3, 2]).is_err());
    }

    #[test]
    fn fhat_smallest_case_and_round_trip() {
        let fhat = fhat_encode(&[2], &[2]).unwrap();
        assert_eq!(fhat.values(), &[2, 2]);
        let (p, f) = fhat_decode(&fhat).unwrap();
        assert_eq!((p, f), (vec![2], vec![2]));
        // all valid pairs round-trip for n <= 5
        for n in 2..=5usize {
            let mut pairs = 0;
            for p in vectors_in(1..=n - 1, n, |j| j + 1) {
                for f in vectors_in(2..=n, n, |j| j) {
                    let enc = fhat_encode(&p, &f).unwrap();
                    assert_eq!(fhat_decode(&enc).unwrap(), (p.clone(), f.clone()));
                    pairs += 1;
                }
            }
            let factorial_sq: usize = (1..n).product::<usize>().pow(2);
            assert_eq!(pairs, factorial_sq);
        }
    }

    // vectors indexed over js with lo(j) <= v_j <= hi
    fn vectors_in(
        js: std::ops::RangeInclusive<usize>,
        hi: usize,
        lo: impl Fn(usize) -> usize + Copy,
    ) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for j in js {
            let mut next = Vec::new();
            for v in &out {
                for x in lo(j)..=hi {
                    let mut w = v.clone();
                    w.push(x);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn fhat_rejects_bad_domains() {
        assert!(fhat_encode(&[1], &[2]).is_err());
        assert!(fhat_encode(&[2], &[1]).is_err());
        assert!(fhat_encode(&[2, 2], &[2]).is_err());
        let odd = ExcedantFunction::new(vec![1, 2]).unwrap();
        assert!(fhat_decode(&odd).is_err());
    }

    #[test]
    fn dumont_function_counts() {
        let expected = [1i64, 3, 17, 155];
        for (idx, &v) in expected.iter().enumerate() {
            assert_eq!(dumont_function_count(idx + 1), BigInt::from(v));
        }
        // m = 0: the empty function
        assert_eq!(dumont_function_count(0), BigInt::from(1));
    }

    #[test]
    fn ascending_codes_biject_with_dumont_functions() {
        use crate::enumeration::enumerate_lmax_codes;
        for n in 2..=5usize {
            let mut images = std::collections::HashSet::new();
            for code in enumerate_lmax_codes(n).unwrap() {
                match ascending_code_to_dumont(&code) {
                    Ok(fhat) => {
                        // onto the full even range
                        let evens: Vec<usize> = evens_between(1, 2 * n - 2);
                        let mut range: Vec<usize> = fhat.values().to_vec();
                        range.sort_unstable();
                        range.dedup();
                        assert_eq!(range, evens);
                        assert!(images.insert(fhat.values().to_vec()));
                    }
                    Err(BijectionError::NotAscending) => {}
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
            assert_eq!(images.len(), dumont_functions(n - 1).len());
        }
    }

    #[test]
    fn dumont_pair_counts_and_bijection() {
        assert_eq!(dumont_pair_count(1), BigInt::from(1));
        assert_eq!(dumont_pair_count(2), BigInt::from(3));
        assert_eq!(dumont_pair_count(3), BigInt::from(17));
        assert_eq!(dumont_pair_count(4), BigInt::from(155));
        let two = dumont_pairs(2);
        let entries: Vec<(Vec<usize>, Vec<usize>)> = two
            .iter()
            .map(|pv| (pv.a().to_vec(), pv.b().to_vec()))
            .collect();
        assert_eq!(
            entries,
            vec![
                (vec![1, 1], vec![1, 2]),
                (vec![1, 2], vec![1, 1]),
                (vec![1, 2], vec![1, 2]),
            ]
        );
        // functions -> pairs is a bijection for small n
        for n in 1..=3usize {
            let mut images = std::collections::HashSet::new();
            for f in dumont_functions(n) {
                let pv = dumont_function_to_pair(&f).unwrap();
                assert!(pv.is_covering());
                assert!(images.insert((pv.a().to_vec(), pv.b().to_vec())));
            }
            assert_eq!(images.len(), dumont_pairs(n).len());
        }
    }

    #[test]
    fn median_model_counts_and_slices() {
        assert_eq!(median_excedant_count(1, None), BigInt::from(1));
        assert_eq!(median_excedant_count(2, None), BigInt::from(2));
        assert_eq!(median_excedant_count(3, None), BigInt::from(8));
        assert_eq!(median_excedant_count(4, None), BigInt::from(56));
        // n = 4 slice at one root
        assert_eq!(median_excedant_count(4, Some(1)), BigInt::from(17));
        // slices partition the model
        for n in 1..=4usize {
            let total: BigInt = (1..=n).map(|i| median_excedant_count(n, Some(i))).sum();
            assert_eq!(total, median_excedant_count(n, None));
        }
    }

    #[test]
    fn median_model_matches_codes() {
        use crate::enumeration::enumerate_lmax_codes;
        for n in 1..=4usize {
            let model: std::collections::HashSet<Vec<usize>> = median_excedant_model(n, None)
                .into_iter()
                .map(|f| f.values().to_vec())
                .collect();
            let mut images = std::collections::HashSet::new();
            for code in enumerate_lmax_codes(n).unwrap() {
                let f = code_to_median_excedant(&code).unwrap();
                assert!(model.contains(f.values()), "{f:?} not in model");
                assert_eq!(
                    f.preimage_count(2 * n - 1),
                    code.p().root_count(),
                    "root count is the top-value multiplicity"
                );
                assert!(images.insert(f.values().to_vec()));
            }
            assert_eq!(images.len(), model.len());
        }
    }

    #[test]
    fn pair_vector_model_counts() {
        assert_eq!(pair_vector_count(1, None), BigInt::from(1));
        assert_eq!(pair_vector_count(2, None), BigInt::from(2));
        assert_eq!(pair_vector_count(3, None), BigInt::from(8));
        assert_eq!(pair_vector_count(4, None), BigInt::from(56));
        assert_eq!(pair_vector_count(5, None), BigInt::from(608));
        let two = pair_vector_model(2, None);
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].a(), &[0]);
        assert_eq!(two[1].a(), &[1]);
    }

    #[test]
    fn code_map_lands_in_pair_model() {
        use crate::enumeration::enumerate_lmax_codes;
        for n in 2..=5usize {
            let mut images = std::collections::HashSet::new();
            for code in enumerate_lmax_codes(n).unwrap() {
                let pv = code_to_pair_vectors(&code).unwrap();
                assert!(pv.is_covering());
                assert_eq!(pv.zero_count() + 1, code.p().root_count());
                assert!(images.insert((pv.a().to_vec(), pv.b().to_vec())));
            }
            assert_eq!(
                BigInt::from(images.len() as u64),
                pair_vector_count(n, None)
            );
        }
    }

    #[test]
    fn phi_is_a_free_involution() {
        for pv in pair_vector_model(4, None) {
            for k in 1..=pv.len() {
                let once = phi(k, &pv).unwrap();
                assert_ne!(once, pv, "free action has no fixed points");
                assert_eq!(phi(k, &once).unwrap(), pv);
                assert!(once.is_covering());
                // singleton-slot rule: (b,b) <-> (0,b)
                if pv.a()[k - 1] == pv.b()[k - 1] {
                    assert_eq!(once.a()[k - 1], 0);
                    assert_eq!(once.b()[k - 1], pv.b()[k - 1]);
                }
            }
            // involutions on different coordinates commute
            if pv.len() >= 2 {
                let ab = phi(2, &phi(1, &pv).unwrap()).unwrap();
                let ba = phi(1, &phi(2, &pv).unwrap()).unwrap();
                assert_eq!(ab, ba);
            }
        }
        let pv = PairVectors::new(vec![0], vec![1]).unwrap();
        assert!(matches!(
            phi(2, &pv),
            Err(BijectionError::OutOfRange { k: 2, len: 1 })
        ));
    }

    #[test]
    fn model_counts_match_recurrences_at_n6() {
        use crate::numbers::{median_genocchi, normalized_median_genocchi};
        assert_eq!(median_excedant_count(6, None), median_genocchi(6));
        assert_eq!(pair_vector_count(6, None), median_genocchi(6));
        assert_eq!(nm_model_count(6), normalized_median_genocchi(6).unwrap());
    }

    #[test]
    fn nm_model_counts() {
        let expected = [1i64, 2, 7, 38, 295];
        for (idx, &v) in expected.iter().enumerate() {
            assert_eq!(nm_model_count(idx + 1), BigInt::from(v), "n = {}", idx + 1);
        }
        let two = nm_model(2);
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].sets(), &[(1, 1), (1, 2)]);
        assert_eq!(two[1].sets(), &[(1, 1), (2, 2)]);
    }

    #[test]
    fn orbits_map_onto_set_sequences() {
        // the orbit map identifies each orbit of the involution action on
        // pair vectors of length m with one set sequence of length m
        for n in 2..=4usize {
            let m = n - 1;
            let model = pair_vector_model(n, None);
            let mut by_rep: std::collections::HashMap<Vec<(usize, usize)>, usize> =
                std::collections::HashMap::new();
            for pv in &model {
                let rep = pair_vectors_to_set_sequence(pv);
                assert!(rep.union_is_complete());
                *by_rep.entry(rep.sets().to_vec()).or_default() += 1;
            }
            let expected_orbit = 1usize << m;
            assert!(by_rep.values().all(|&c| c == expected_orbit));
            assert_eq!(BigInt::from(by_rep.len() as u64), nm_model_count(m));
        }
    }
}
