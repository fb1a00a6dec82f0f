//! Tournaments on `{1..n}` as orientation bitmasks, and their alternating
//! walk structure.
//!
//! An arrow `i -> j` is an *ascent* when `i < j` and a *descent* otherwise.
//! A directed cycle is *alternating* when descents and ascents alternate
//! along it; a tournament is *alternation acyclic* (alt-acyclic) when it has
//! no alternating cycle, which happens exactly when it has no alternating
//! 4-cycle. The workhorse here is the step digraph: one step is a descent
//! followed by an ascent, so closed alternating walks are directed cycles of
//! the step digraph and the right-alternating walk order is its
//! reflexive-transitive closure.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

/// Hard representation limit: pair masks are kept in a single `u64`.
pub const MAX_VERTICES: usize = 11;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TournamentError {
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    BadVertexCount(usize),
    #[error("orientation mask {mask:#x} has bits beyond the {pairs} pairs of an n={n} tournament")]
    BadMask { n: usize, mask: u64, pairs: usize },
    #[error("pair ({i},{j}) is not a pair of distinct vertices 1..={n} with i < j")]
    BadPair { n: usize, i: usize, j: usize },
    #[error("pair ({0},{1}) listed more than once")]
    DuplicatePair(usize, usize),
    #[error("hex string {0:?} does not encode an n={1} orientation mask")]
    BadHex(String, usize),
    #[error("tournament contains an alternating cycle")]
    NotAltAcyclic,
}

#[derive(Serialize, Deserialize)]
struct TournamentRepr {
    n: usize,
    ascents: Vec<(usize, usize)>,
}

/// A tournament on `{1..n}`: one orientation bit per pair `{i,j}`, `i < j`,
/// in lexicographic pair order. A set bit means `i -> j` (an ascent edge).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TournamentRepr", into = "TournamentRepr")]
pub struct Tournament {
    n: u8,
    mask: u64,
}

/// Index of pair `(i,j)`, `1 <= i < j <= n`, in lexicographic order
/// `(1,2),(1,3),...,(1,n),(2,3),...,(n-1,n)`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * n - i * (i - 1) / 2 + (j - i - 1)
}

impl Tournament {
    pub fn new(n: usize, mask: u64) -> Result<Self, TournamentError> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(TournamentError::BadVertexCount(n));
        }
        let pairs = n * (n - 1) / 2;
        if pairs < 64 && mask >> pairs != 0 {
            return Err(TournamentError::BadMask { n, mask, pairs });
        }
        Ok(Tournament { n: n as u8, mask })
    }

    pub(crate) fn from_mask_unchecked(n: usize, mask: u64) -> Self {
        debug_assert!(Tournament::new(n, mask).is_ok());
        Tournament { n: n as u8, mask }
    }

    /// The transitive tournament: `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Result<Self, TournamentError> {
        let t = Tournament::new(n, 0)?;
        Ok(Tournament {
            n: t.n,
            mask: t.full_mask(),
        })
    }

    /// The all-descents tournament: `j -> i` for all `i < j`.
    pub fn all_descents(n: usize) -> Result<Self, TournamentError> {
        Tournament::new(n, 0)
    }

    pub fn from_ascents(n: usize, ascents: &[(usize, usize)]) -> Result<Self, TournamentError> {
        let mut t = Tournament::new(n, 0)?;
        for &(i, j) in ascents {
            if i < 1 || j <= i || j > n {
                return Err(TournamentError::BadPair { n, i, j });
            }
            let bit = 1u64 << pair_index(n, i, j);
            if t.mask & bit != 0 {
                return Err(TournamentError::DuplicatePair(i, j));
            }
            t.mask |= bit;
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn pair_count(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    fn full_mask(&self) -> u64 {
        let pairs = self.pair_count();
        if pairs == 64 {
            u64::MAX
        } else {
            (1u64 << pairs) - 1
        }
    }

    fn ascent_bit(&self, i: usize, j: usize) -> bool {
        self.mask >> pair_index(self.n(), i, j) & 1 == 1
    }

    /// Whether the arrow `u -> v` is present (`u != v`).
    pub fn beats(&self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && 1 <= u && u <= self.n() && 1 <= v && v <= self.n());
        if u < v {
            self.ascent_bit(u, v)
        } else {
            !self.ascent_bit(v, u)
        }
    }

    /// The ascent pairs `(i,j)`, `i < j` with `i -> j`, in lexicographic order.
    pub fn ascents(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                if self.ascent_bit(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Flip the orientation of every pair.
    pub fn reverse_all_edges(&self) -> Self {
        Tournament {
            n: self.n,
            mask: !self.mask & self.full_mask(),
        }
    }

    /// Relabel each vertex `i` as `n+1-i`, keeping arrows: `i -> j` becomes
    /// `n+1-i -> n+1-j`.
    pub fn complement_relabel(&self) -> Self {
        let n = self.n();
        let mut mask = 0u64;
        for i in 1..n {
            for j in i + 1..=n {
                // image pair (n+1-j, n+1-i); arrow direction flips relative
                // to the pair's natural order
                if !self.ascent_bit(i, j) {
                    mask |= 1 << pair_index(n, n + 1 - j, n + 1 - i);
                }
            }
        }
        Tournament { n: self.n, mask }
    }

    /// Hex form of the orientation mask, most significant bit = pair `(1,2)`.
    pub fn to_hex(&self) -> String {
        let pairs = self.pair_count();
        let digits = pairs.div_ceil(4).max(1);
        let mut v = 0u64;
        for k in 0..pairs {
            if self.mask >> k & 1 == 1 {
                v |= 1 << (pairs - 1 - k);
            }
        }
        format!("{:0width$x}", v, width = digits)
    }

    pub fn from_hex(n: usize, s: &str) -> Result<Self, TournamentError> {
        let t0 = Tournament::new(n, 0)?;
        let pairs = t0.pair_count();
        let digits = pairs.div_ceil(4).max(1);
        if s.len() != digits || !s.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(TournamentError::BadHex(s.to_string(), n));
        }
        let v =
            u64::from_str_radix(s, 16).map_err(|_| TournamentError::BadHex(s.to_string(), n))?;
        if pairs < 64 && v >> pairs != 0 {
            return Err(TournamentError::BadHex(s.to_string(), n));
        }
        let mut mask = 0u64;
        for k in 0..pairs {
            if v >> (pairs - 1 - k) & 1 == 1 {
                mask |= 1 << k;
            }
        }
        Ok(Tournament { n: n as u8, mask })
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament(n={}, hex={})", self.n, self.to_hex())
    }
}

impl From<Tournament> for TournamentRepr {
    fn from(t: Tournament) -> Self {
        TournamentRepr {
            n: t.n(),
            ascents: t.ascents(),
        }
    }
}

impl TryFrom<TournamentRepr> for Tournament {
    type Error = TournamentError;

    fn try_from(repr: TournamentRepr) -> Result<Self, Self::Error> {
        Tournament::from_ascents(repr.n, &repr.ascents)
    }
}

/// Per-vertex masks of descent targets and ascent targets/sources. Vertex `v`
/// occupies bit `v-1`.
struct EdgeMasks {
    /// `desc_to[u-1]`: vertices `w < u` with `u -> w`.
    desc_to: [u64; MAX_VERTICES],
    /// `asc_to[w-1]`: vertices `v > w` with `w -> v`.
    asc_to: [u64; MAX_VERTICES],
    /// `asc_from[v-1]`: vertices `w < v` with `w -> v`.
    asc_from: [u64; MAX_VERTICES],
}

impl EdgeMasks {
    fn of(t: &Tournament) -> Self {
        let n = t.n();
        let mut m = EdgeMasks {
            desc_to: [0; MAX_VERTICES],
            asc_to: [0; MAX_VERTICES],
            asc_from: [0; MAX_VERTICES],
        };
        for i in 1..n {
            for j in i + 1..=n {
                if t.ascent_bit(i, j) {
                    m.asc_to[i - 1] |= 1 << (j - 1);
                    m.asc_from[j - 1] |= 1 << (i - 1);
                } else {
                    m.desc_to[j - 1] |= 1 << (i - 1);
                }
            }
        }
        m
    }
}

/// The digraph with an edge `u -> v` exactly when some `w` gives a descent
/// `u -> w` followed by an ascent `w -> v` in the source tournament. It has
/// no self-loops: `u desc w` and `w asc u` would orient `{u,w}` both ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepDigraph {
    n: usize,
    rows: Vec<u64>,
}

impl StepDigraph {
    pub fn of(t: &Tournament) -> Self {
        let n = t.n();
        let m = EdgeMasks::of(t);
        let mut rows = vec![0u64; n];
        for u in 1..=n {
            let mut targets = 0u64;
            let mut ws = m.desc_to[u - 1];
            while ws != 0 {
                let w = ws.trailing_zeros() as usize + 1;
                ws &= ws - 1;
                targets |= m.asc_to[w - 1];
            }
            debug_assert_eq!(targets >> (u - 1) & 1, 0);
            rows[u - 1] = targets;
        }
        StepDigraph { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u - 1] >> (v - 1) & 1 == 1
    }

    /// Whether the digraph contains a directed cycle (iterative DFS).
    pub fn has_cycle(&self) -> bool {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = [WHITE; MAX_VERTICES];
        let mut stack: Vec<(usize, u64)> = Vec::with_capacity(self.n);
        for start in 0..self.n {
            if color[start] != WHITE {
                continue;
            }
            color[start] = GRAY;
            stack.push((start, self.rows[start]));
            while let Some((u, pending)) = stack.last_mut() {
                if *pending == 0 {
                    color[*u] = BLACK;
                    stack.pop();
                    continue;
                }
                let v = pending.trailing_zeros() as usize;
                *pending &= *pending - 1;
                match color[v] {
                    GRAY => return true,
                    WHITE => {
                        color[v] = GRAY;
                        stack.push((v, self.rows[v]));
                    }
                    _ => {}
                }
            }
        }
        false
    }

    /// Reflexive-transitive closure as row masks (bit `v-1` of row `u-1` set
    /// iff `v` is reachable from `u`).
    fn reflexive_transitive_closure(&self) -> Vec<u64> {
        let n = self.n;
        let mut rows = self.rows.clone();
        for (u, row) in rows.iter_mut().enumerate() {
            *row |= 1 << u;
        }
        for k in 0..n {
            let row_k = rows[k];
            for row in rows.iter_mut() {
                if *row >> k & 1 == 1 {
                    *row |= row_k;
                }
            }
        }
        rows
    }
}

/// A reflexive, transitive, antisymmetric relation on `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrderRelation {
    n: usize,
    /// `up[u-1]` bit `v-1`: `u <= v` in the order.
    up: Vec<u64>,
}

impl PartialOrderRelation {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `u <= v` in the order.
    pub fn le(&self, u: usize, v: usize) -> bool {
        self.up[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn lt(&self, u: usize, v: usize) -> bool {
        u != v && self.le(u, v)
    }

    pub fn incomparable(&self, u: usize, v: usize) -> bool {
        u != v && !self.le(u, v) && !self.le(v, u)
    }

    pub fn is_identity(&self) -> bool {
        self.up.iter().enumerate().all(|(u, &row)| row == 1 << u)
    }

    /// All strictly related pairs `(u, v)` with `u < v` in the order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in 1..=self.n {
                if self.lt(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Whether the word visits every element after everything below it.
    pub fn is_linear_extension(&self, pi: &Permutation) -> bool {
        if pi.n() != self.n {
            return false;
        }
        for u in 1..=self.n {
            for v in 1..=self.n {
                if self.lt(u, v) && pi.position_of(u) >= pi.position_of(v) {
                    return false;
                }
            }
        }
        true
    }

    /// Elements of `subset` (bit `v-1` = vertex `v`) maximal within it, i.e.
    /// with nothing of `subset` strictly above them. The full order is
    /// restricted to the subset; it is not recomputed on a subtournament.
    pub fn maximal_in_subset(&self, subset: u64) -> u64 {
        let mut out = 0u64;
        let mut s = subset;
        while s != 0 {
            let u = s.trailing_zeros() as usize;
            s &= s - 1;
            if self.up[u] & subset & !(1 << u) == 0 {
                out |= 1 << u;
            }
        }
        out
    }

    /// All linear extensions, in lexicographic order of their words.
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        let n = self.n;
        // down[v-1]: elements u with u <= v
        let mut down = vec![0u64; n];
        for u in 0..n {
            let mut row = self.up[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                down[v] |= 1 << u;
            }
        }
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(n);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        fn go(remaining: u64, down: &[u64], word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if remaining == 0 {
                out.push(Permutation::new(word.clone()).expect("extension word is a permutation"));
                return;
            }
            let mut s = remaining;
            while s != 0 {
                let v = s.trailing_zeros() as usize;
                s &= s - 1;
                // v is minimal among the remaining elements
                if down[v] & remaining & !(1u64 << v) == 0 {
                    word.push(v + 1);
                    go(remaining & !(1u64 << v), down, word, out);
                    word.pop();
                }
            }
        }
        go(full, &down, &mut word, &mut out);
        out
    }
}

/// Whether `t` contains distinct `u1,u2,u3,u4` with
/// `u1 asc u2 desc u3 asc u4 desc u1`. Equivalently, the step digraph has a
/// 2-cycle: `u2 desc u3 asc u4` is one step `u2 -> u4` and `u4 desc u1 asc u2`
/// is the step back.
pub fn has_alternating_4cycle(t: &Tournament) -> bool {
    let n = t.n();
    let m = EdgeMasks::of(t);
    for u in 1..n {
        for v in u + 1..=n {
            if m.desc_to[u - 1] & m.asc_from[v - 1] != 0
                && m.desc_to[v - 1] & m.asc_from[u - 1] != 0
            {
                return true;
            }
        }
    }
    false
}

/// Whether `t` contains a closed alternating walk of any length, detected as
/// a directed cycle of the step digraph (every closed alternating walk of
/// length `2m` splits into `m` descent-ascent steps, and conversely).
pub fn has_alternating_closed_walk(t: &Tournament) -> bool {
    StepDigraph::of(t).has_cycle()
}

pub fn is_alt_acyclic(t: &Tournament) -> bool {
    !has_alternating_4cycle(t)
}

/// Whether `t` contains no ascending cycle, i.e. no directed cycle with at
/// least as many ascents as descents. It suffices to exclude short ones: no
/// directed 3-cycle with exactly one descent and no directed 4-cycle with at
/// most two descents.
pub fn is_semiacyclic(t: &Tournament) -> bool {
    let n = t.n();
    // v1 is the smallest vertex of the cycle, so each cycle is seen once up
    // to rotation.
    for v1 in 1..=n {
        for v2 in v1 + 1..=n {
            if !t.beats(v1, v2) {
                continue;
            }
            for v3 in v1 + 1..=n {
                if v3 == v2 || !t.beats(v2, v3) {
                    continue;
                }
                if t.beats(v3, v1) {
                    let descents = [(v1, v2), (v2, v3), (v3, v1)]
                        .iter()
                        .filter(|&&(a, b)| a > b)
                        .count();
                    if descents <= 1 {
                        return false;
                    }
                }
                for v4 in v1 + 1..=n {
                    if v4 == v2 || v4 == v3 || !t.beats(v3, v4) || !t.beats(v4, v1) {
                        continue;
                    }
                    let descents = [(v1, v2), (v2, v3), (v3, v4), (v4, v1)]
                        .iter()
                        .filter(|&&(a, b)| a > b)
                        .count();
                    if descents <= 2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The right-alternating walk order of `t`: `u <= v` iff `u = v` or a walk
/// `u desc w1 asc w2 desc ... asc v` exists. This is the reflexive-transitive
/// closure of the step digraph; it is antisymmetric exactly when `t` is
/// alt-acyclic.
pub fn rawalk_order(t: &Tournament) -> Result<PartialOrderRelation, TournamentError> {
    let closure = StepDigraph::of(t).reflexive_transitive_closure();
    order_from_closure(t.n(), closure)
}

/// The left-alternating walk order of `t`: `u <= v` iff `u = v` or a walk
/// `u asc w1 desc w2 asc ... desc v` exists.
pub fn lawalk_order(t: &Tournament) -> Result<PartialOrderRelation, TournamentError> {
    let n = t.n();
    let m = EdgeMasks::of(t);
    // one left step: ascent then descent
    let mut rows = vec![0u64; n];
    for u in 1..=n {
        let mut targets = 0u64;
        let mut ws = m.asc_to[u - 1];
        while ws != 0 {
            let w = ws.trailing_zeros() as usize + 1;
            ws &= ws - 1;
            // descent targets of w: vertices below w that w beats
            targets |= m.desc_to[w - 1];
        }
        rows[u - 1] = targets;
    }
    let closure = StepDigraph { n, rows }.reflexive_transitive_closure();
    order_from_closure(n, closure)
}

fn order_from_closure(n: usize, up: Vec<u64>) -> Result<PartialOrderRelation, TournamentError> {
    for u in 1..=n {
        for v in u + 1..=n {
            if up[u - 1] >> (v - 1) & 1 == 1 && up[v - 1] >> (u - 1) & 1 == 1 {
                return Err(TournamentError::NotAltAcyclic);
            }
        }
    }
    Ok(PartialOrderRelation { n, up })
}
