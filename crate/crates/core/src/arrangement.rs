//! The homogenized Linial arrangement and its region <-> tournament
//! correspondence.
//!
//! For each pair `i < j` of `{1..n}` there is one hyperplane `x_i - y_i =
//! x_j` in the space with coordinates `x_1..x_n, y_1..y_n` (the last
//! coordinate `y_n` appears in no equation and is kept as an inessential
//! dimension, which leaves the region count unchanged). A point off every
//! hyperplane labels a tournament: `i -> j` when `x_i - y_i > x_j`, else
//! `j -> i`; the regions are in bijection with the alt-acyclic tournaments.
//! Setting every `y_i = 1` recovers the classical Linial arrangement.
//!
//! The characteristic polynomial is assembled from the refined counts
//! `chi(n,k,q)` of off-hyperplane points over `F_q` whose value set
//! `{x_1-y_1, ..., x_n-y_n}` has exactly `k` elements; these satisfy
//! `chi(n,k,q) = (q-k)k chi(n-1,k,q) + (q-k+1)^2 chi(n-1,k-1,q)` with
//! `chi(1,k,q) = [k=1] q^2`. Zaslavsky's formula evaluates regions as
//! `(-1)^{2n} chi(-1)`, and `r(n,k) = chi(n,k,-1)` matches
//! `(-1)^{n-k} (k!)^2 PS_n^(k)` on the Legendre-Stirling side.

use num::rational::BigRational;
use num::{BigInt, Zero};
use thiserror::Error;

use crate::forest::largest_maximal_representation;
use crate::polynomial::IntPolynomial;
use crate::tournament::{Tournament, TournamentError, MAX_VERTICES};

/// Default ceiling on `q^{2n}` for the brute-force point count.
pub const DEFAULT_POINT_CAP: u128 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("point count {points} exceeds cap {cap}")]
    CapExceeded { points: u128, cap: u128 },
    #[error("tournament contains an alternating cycle")]
    NotAltAcyclic,
    #[error("point lies on the hyperplane of pair ({i},{j})")]
    OnHyperplane { i: usize, j: usize },
    #[error("point has {xs} x- and {ys} y-coordinates; expected n of each with 1 <= n <= {MAX_VERTICES}")]
    BadDimensions { xs: usize, ys: usize },
}

impl From<TournamentError> for ArrangementError {
    fn from(e: TournamentError) -> Self {
        match e {
            TournamentError::NotAltAcyclic => ArrangementError::NotAltAcyclic,
            other => panic!("unexpected tournament error: {other}"),
        }
    }
}

/// The row `chi(n, 1..=n, q)` of refined characteristic polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTable {
    n: usize,
    polys: Vec<IntPolynomial>,
}

impl ChiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `chi(n, k, q)` as a polynomial, `1 <= k <= n`.
    pub fn chi(&self, k: usize) -> &IntPolynomial {
        &self.polys[k - 1]
    }

    /// `r(n, k) = chi(n, k, -1)`.
    pub fn r_value(&self, k: usize) -> BigInt {
        self.chi(k).eval(&BigInt::from(-1))
    }

    /// Sum over `k`: the characteristic polynomial of the arrangement.
    pub fn sum(&self) -> IntPolynomial {
        self.polys
            .iter()
            .fold(IntPolynomial::zero(), |acc, p| &acc + p)
    }
}

pub fn chi_table(n: usize) -> ChiTable {
    assert!(n >= 1);
    let mut polys = vec![IntPolynomial::monomial(1, 2)];
    for m in 2..=n {
        let mut next = Vec::with_capacity(m);
        for k in 1..=m {
            let mut p = IntPolynomial::zero();
            if k < m {
                // (q - k) * k * chi(m-1, k, q)
                let factor = IntPolynomial::q_plus(-(k as i64)).scale(&BigInt::from(k));
                p = &p + &(&factor * &polys[k - 1]);
            }
            if k >= 2 {
                // (q - k + 1)^2 * chi(m-1, k-1, q)
                let lin = IntPolynomial::q_plus(-(k as i64) + 1);
                p = &p + &(&(&lin * &lin) * &polys[k - 2]);
            }
            next.push(p);
        }
        polys = next;
    }
    ChiTable { n, polys }
}

/// Characteristic polynomial of the homogenized arrangement in `2n`
/// coordinates; degree `2n`.
pub fn characteristic_polynomial(n: usize) -> IntPolynomial {
    chi_table(n).sum()
}

/// Region count by Zaslavsky's formula, `(-1)^{2n} chi(-1)`: equal to the
/// number of alt-acyclic tournaments on `{1..n}`.
pub fn region_count(n: usize) -> BigInt {
    characteristic_polynomial(n).eval(&BigInt::from(-1))
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Brute-force count of points of `F_q^{2n}` avoiding every hyperplane
/// `x_i - y_i = x_j` (`i < j`). Agrees with the characteristic polynomial at
/// `q` for any tested prime.
pub fn direct_point_count(n: usize, q: u64) -> Result<BigInt, ArrangementError> {
    direct_point_count_capped(n, q, DEFAULT_POINT_CAP)
}

pub fn direct_point_count_capped(n: usize, q: u64, cap: u128) -> Result<BigInt, ArrangementError> {
    assert!(n >= 1);
    if !is_prime(q) {
        return Err(ArrangementError::NotPrime(q));
    }
    let points = (q as u128).pow(2 * n as u32);
    if points > cap {
        return Err(ArrangementError::CapExceeded { points, cap });
    }
    // odometer over (x_1..x_n, y_1..y_n)
    let dims = 2 * n;
    let mut coord = vec![0u64; dims];
    let mut count: u64 = 0;
    'outer: loop {
        let (xs, ys) = coord.split_at(n);
        let ok = (0..n - 1).all(|i| {
            let lhs = (xs[i] + q - ys[i]) % q;
            (i + 1..n).all(|j| lhs != xs[j])
        });
        if ok {
            count += 1;
        }
        for d in (0..dims).rev() {
            coord[d] += 1;
            if coord[d] < q {
                continue 'outer;
            }
            coord[d] = 0;
        }
        break;
    }
    Ok(BigInt::from(count))
}

/// A point of the ambient `2n`-dimensional space with exact rational
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    pub x: Vec<BigRational>,
    pub y: Vec<BigRational>,
}

impl RationalPoint {
    pub fn n(&self) -> usize {
        self.x.len()
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A point inside the region labeled by an alt-acyclic tournament, built
/// from its largest-maximal code `(lambda, p)`:
/// `x_i = (n+1)/2 - pos(i)` and `y_i = pos(p(i)) - pos(i) - 1/2` for finite
/// parents. A root has no parent position; `y_i = n + 1 - pos(i)` puts
/// `x_i - y_i = -(n+1)/2` a full unit below every coordinate, so every
/// larger vertex beats `i` as required.
pub fn witness_point(t: &Tournament) -> Result<RationalPoint, ArrangementError> {
    let code = largest_maximal_representation(t).map_err(|_| ArrangementError::NotAltAcyclic)?;
    let n = t.n();
    let lambda = code.pi();
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    for i in 1..=n {
        let pos = lambda.position_of(i) as i64;
        x.push(ratio(n as i64 + 1 - 2 * pos, 2));
        y.push(match code.p().parent(i) {
            Some(p) => ratio(2 * (lambda.position_of(p) as i64 - pos) - 1, 2),
            None => ratio(n as i64 + 1 - pos, 1),
        });
    }
    Ok(RationalPoint { x, y })
}

/// The tournament labeling the region containing `pt`: `i -> j` for `i < j`
/// when `x_i - y_i > x_j`, `j -> i` when `x_i - y_i < x_j`. Equality means
/// the point lies on a hyperplane.
pub fn tournament_of_point(pt: &RationalPoint) -> Result<Tournament, ArrangementError> {
    let n = pt.x.len();
    if pt.y.len() != n || !(1..=MAX_VERTICES).contains(&n) {
        return Err(ArrangementError::BadDimensions {
            xs: pt.x.len(),
            ys: pt.y.len(),
        });
    }
    let mut ascents = Vec::new();
    for i in 1..n {
        let lhs = &pt.x[i - 1] - &pt.y[i - 1];
        for j in i + 1..=n {
            match lhs.cmp(&pt.x[j - 1]) {
                std::cmp::Ordering::Greater => ascents.push((i, j)),
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => return Err(ArrangementError::OnHyperplane { i, j }),
            }
        }
    }
    Ok(Tournament::from_ascents(n, &ascents)?)
}

/// Sum of the x-coordinates; zero for every witness point.
pub fn x_coordinate_sum(pt: &RationalPoint) -> BigRational {
    pt.x.iter().fold(BigRational::zero(), |acc, v| acc + v)
}
