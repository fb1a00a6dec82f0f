//! Biordered-forest codes `(pi, p)` and the canonical representation of
//! alt-acyclic tournaments.
//!
//! A parent function `p` on `{1..n}` sends each element to a strictly larger
//! parent or to infinity (a root); together with a permutation `pi` it is the
//! code of a biordered forest. Every code induces an alt-acyclic tournament
//! (`u -> v` for `u < v` exactly when `u` has a parent and `v` is not left of
//! it in `pi`), and conversely each alt-acyclic tournament has one code per
//! linear extension of its right-alternating walk order. Fixing the
//! largest-maximal extension makes the code canonical; those codes are the
//! ones whose every descent of the word is followed by a letter in the range
//! of `p`, and they carry the type statistic `(n, i, j)` counted by the
//! `A(n,i,j)` triangle.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::perm::{Permutation, PermutationError};
use crate::tournament::{rawalk_order, Tournament, TournamentError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("tournament contains an alternating cycle")]
    NotAltAcyclic,
    #[error("permutation is not a linear extension of the right-alternating walk order")]
    NotLinearExtension,
    #[error("cannot reduce a code on a single element")]
    SizeOne,
    #[error("code is not a largest-maximal representation")]
    NotLmax,
    #[error("tournament is not ascending")]
    NotAscending,
    #[error("parent value {value} invalid for element {element} of 1..={n}")]
    InvalidParent {
        element: usize,
        value: usize,
        n: usize,
    },
    #[error("permutation and parent function sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error(transparent)]
    BadPermutation(#[from] PermutationError),
}

impl From<TournamentError> for CodeError {
    fn from(e: TournamentError) -> Self {
        match e {
            TournamentError::NotAltAcyclic => CodeError::NotAltAcyclic,
            other => panic!("unexpected tournament error: {other}"),
        }
    }
}

/// A parent function on `{1..n}`: `p(i)` is either a parent strictly larger
/// than `i` or infinity (`None`), marking `i` as a root. `p(n)` is always
/// infinity. Compact form: `0` stands for infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParentFunction {
    parent: Vec<Option<usize>>,
}

impl ParentFunction {
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self, CodeError> {
        let n = parent.len();
        for (idx, &p) in parent.iter().enumerate() {
            let element = idx + 1;
            if let Some(v) = p {
                if v <= element || v > n {
                    return Err(CodeError::InvalidParent {
                        element,
                        value: v,
                        n,
                    });
                }
            }
        }
        Ok(ParentFunction { parent })
    }

    /// Build from the compact form where `0` denotes infinity.
    pub fn from_compact(values: &[usize]) -> Result<Self, CodeError> {
        ParentFunction::new(
            values
                .iter()
                .map(|&v| if v == 0 { None } else { Some(v) })
                .collect(),
        )
    }

    pub fn all_roots(n: usize) -> Self {
        ParentFunction {
            parent: vec![None; n],
        }
    }

    /// The chain `p(i) = i+1`, whose induced tournament is transitive.
    pub fn chain(n: usize) -> Self {
        ParentFunction {
            parent: (1..=n)
                .map(|i| if i < n { Some(i + 1) } else { None })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i - 1]
    }

    pub fn to_compact(&self) -> Vec<usize> {
        self.parent.iter().map(|p| p.unwrap_or(0)).collect()
    }

    /// Number of roots, `|p^{-1}(inf)|`.
    pub fn root_count(&self) -> usize {
        self.parent.iter().filter(|p| p.is_none()).count()
    }

    /// The set of finite parent values, as a bitmask with bit `v-1` for `v`.
    pub fn finite_range_mask(&self) -> u64 {
        self.parent
            .iter()
            .flatten()
            .fold(0u64, |m, &v| m | 1 << (v - 1))
    }

    /// Number of distinct finite parent values.
    pub fn finite_range_count(&self) -> usize {
        self.finite_range_mask().count_ones() as usize
    }

    pub fn in_range(&self, v: usize) -> bool {
        self.finite_range_mask() >> (v - 1) & 1 == 1
    }
}

impl fmt::Debug for ParentFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParentFunction(")?;
        for (idx, p) in self.parent.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            match p {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "inf")?,
            }
        }
        write!(f, ")")
    }
}

impl Serialize for ParentFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_compact().serialize(serializer)
    }
}

/// Accepted entry forms for a parent array: a number (`0` = infinity) or the
/// string `"inf"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum ParentEntry {
    Number(usize),
    Symbol(String),
}

impl<'de> Deserialize<'de> for ParentFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<ParentEntry>::deserialize(deserializer)?;
        let mut compact = Vec::with_capacity(entries.len());
        for e in entries {
            match e {
                ParentEntry::Number(v) => compact.push(v),
                ParentEntry::Symbol(s) if s == "inf" => compact.push(0),
                ParentEntry::Symbol(s) => {
                    return Err(D::Error::custom(format!("bad parent entry {s:?}")))
                }
            }
        }
        ParentFunction::from_compact(&compact).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct CodeRepr {
    n: usize,
    pi: Vec<usize>,
    p: ParentFunction,
}

/// The code `(pi, p)` of a biordered forest on `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CodeRepr", into = "CodeRepr")]
pub struct BiorderedCode {
    pi: Permutation,
    p: ParentFunction,
}

impl BiorderedCode {
    pub fn new(pi: Permutation, p: ParentFunction) -> Result<Self, CodeError> {
        if pi.n() != p.n() {
            return Err(CodeError::SizeMismatch(pi.n(), p.n()));
        }
        Ok(BiorderedCode { pi, p })
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn p(&self) -> &ParentFunction {
        &self.p
    }
}

impl From<BiorderedCode> for CodeRepr {
    fn from(c: BiorderedCode) -> Self {
        CodeRepr {
            n: c.n(),
            pi: c.pi.word().to_vec(),
            p: c.p,
        }
    }
}

impl TryFrom<CodeRepr> for BiorderedCode {
    type Error = CodeError;

    fn try_from(repr: CodeRepr) -> Result<Self, Self::Error> {
        let pi = Permutation::new(repr.pi)?;
        if pi.n() != repr.n || repr.p.n() != repr.n {
            return Err(CodeError::SizeMismatch(pi.n(), repr.p.n()));
        }
        BiorderedCode::new(pi, repr.p)
    }
}

/// The type `(n, i, j)` of an alt-acyclic tournament: `i` roots and `j`
/// distinct finite parent values in its largest-maximal representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TypeTriple {
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

impl TypeTriple {
    fn of_code(code: &BiorderedCode) -> Self {
        let t = TypeTriple {
            n: code.n(),
            i: code.p().root_count(),
            j: code.p().finite_range_count(),
        };
        debug_assert!(t.i >= 1 && t.i + t.j <= t.n);
        t
    }
}

/// The tournament induced by a code: for `u < v` there is an ascent `u -> v`
/// exactly when `u` has a finite parent and `v` is not strictly left of
/// `p(u)` in `pi`; otherwise `v -> u`.
pub fn induce_tournament(code: &BiorderedCode) -> Tournament {
    let n = code.n();
    let pi = code.pi();
    let mut ascents = Vec::new();
    for u in 1..n {
        if let Some(pu) = code.p().parent(u) {
            let cutoff = pi.position_of(pu);
            for v in u + 1..=n {
                if pi.position_of(v) >= cutoff {
                    ascents.push((u, v));
                }
            }
        }
    }
    Tournament::from_ascents(n, &ascents).expect("induced orientation is a tournament")
}

/// The unique parent function making `(pi, p)` induce `t`: `p(u)` is the
/// leftmost `v` in `pi` with `u < v` and `u -> v`, or infinity when no ascent
/// starts at `u`. Requires `t` alt-acyclic and `pi` a linear extension of its
/// right-alternating walk order.
pub fn decode(t: &Tournament, pi: &Permutation) -> Result<ParentFunction, CodeError> {
    let order = rawalk_order(t)?;
    if !order.is_linear_extension(pi) {
        return Err(CodeError::NotLinearExtension);
    }
    let n = t.n();
    let mut parent = Vec::with_capacity(n);
    for u in 1..=n {
        let leftmost = (u + 1..=n)
            .filter(|&v| t.beats(u, v))
            .min_by_key(|&v| pi.position_of(v));
        parent.push(leftmost);
    }
    Ok(ParentFunction { parent })
}

/// The largest-maximal order of an alt-acyclic tournament, built right to
/// left: the last letter is the largest maximal element of the walk order,
/// and each earlier letter is the largest maximal element once the later
/// ones are removed. Maximality is taken in the full order restricted to the
/// remaining set.
pub fn largest_maximal_order(t: &Tournament) -> Result<Permutation, CodeError> {
    let order = rawalk_order(t)?;
    let n = t.n();
    let mut word = vec![0usize; n];
    let mut remaining: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in (1..=n).rev() {
        let maximal = order.maximal_in_subset(remaining);
        debug_assert_ne!(maximal, 0);
        let v = 64 - maximal.leading_zeros() as usize;
        word[k - 1] = v;
        remaining &= !(1u64 << (v - 1));
    }
    Ok(Permutation::new(word)?)
}

/// The canonical code `(lambda, p)` of an alt-acyclic tournament.
pub fn largest_maximal_representation(t: &Tournament) -> Result<BiorderedCode, CodeError> {
    let lambda = largest_maximal_order(t)?;
    let p = decode(t, &lambda)?;
    BiorderedCode::new(lambda, p)
}

/// Whether a code is the largest-maximal representation of the tournament it
/// induces: after every descent of the word, the next letter lies in the
/// finite range of `p`.
pub fn is_lmax_representation(code: &BiorderedCode) -> bool {
    code.pi()
        .descent_positions()
        .iter()
        .all(|&i| code.p().in_range(code.pi().value_at(i + 1)))
}

/// Reduction to `{1..n-1}`: delete the letter `n` from the word and send the
/// elements whose parent was `n` to infinity.
pub fn reduce(code: &BiorderedCode) -> Result<BiorderedCode, CodeError> {
    let n = code.n();
    if n < 2 {
        return Err(CodeError::SizeOne);
    }
    if !is_lmax_representation(code) {
        return Err(CodeError::NotLmax);
    }
    let word = code.pi().delete_letter(n)?;
    let parent = (1..n)
        .map(|i| code.p().parent(i).filter(|&v| v != n))
        .collect::<Vec<_>>();
    BiorderedCode::new(word, ParentFunction { parent })
}

/// The type `(n, i, j)` of an alt-acyclic tournament, read off its
/// largest-maximal representation.
pub fn type_of(t: &Tournament) -> Result<TypeTriple, CodeError> {
    Ok(TypeTriple::of_code(&largest_maximal_representation(t)?))
}

/// Whether every vertex below `n` starts at least one ascent. For
/// alt-acyclic tournaments this is equivalent to having type `(n, 1, j)`.
pub fn is_ascending(t: &Tournament) -> bool {
    let n = t.n();
    (1..n).all(|u| (u + 1..=n).any(|v| t.beats(u, v)))
}
