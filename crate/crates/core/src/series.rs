//! Truncated formal power series in `t` over exact rationals, with
//! polynomial-in-`x` coefficients.
//!
//! Everything needed for the ordinary generating functions of the type
//! triangle lives here: the elementary factor `c*t / (1 - c*t)`, the
//! `gamma_k` series computed both by its recurrence and by its closed-form
//! sum, and the specializations whose `t`-coefficients are the median and
//! first-kind Genocchi numbers. The outer sums of those specializations run
//! over all `j >= 0`; since the coefficient of `t^n` receives nothing from
//! `j >= n`, each coefficient is assembled from `j <= n-1` and the vanishing
//! of the next few `j`-terms is verified rather than assumed.

use num::rational::BigRational;
use num::{BigInt, One, Zero};
use thiserror::Error;

use crate::numbers::{binomial, factorial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("tail term j = {j} contributes a nonzero coefficient to t^{n}")]
    ZeroTailViolation { n: usize, j: usize },
}

fn rat_int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Dense polynomial in `x` over exact rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyX {
    coeffs: Vec<BigRational>,
}

impl PolyX {
    pub fn zero() -> Self {
        PolyX { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        PolyX::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = PolyX { coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    /// The linear polynomial `x + c`.
    pub fn x_plus(c: i64) -> Self {
        PolyX::from_coeffs(vec![rat_int(c), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, rhs: &PolyX) -> PolyX {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyX::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn mul(&self, rhs: &PolyX) -> PolyX {
        if self.is_zero() || rhs.is_zero() {
            return PolyX::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                coeffs[a + b] += ca * cb;
            }
        }
        PolyX::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> PolyX {
        PolyX::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `x -> x + delta` (polynomial Horner evaluation at `x+delta`).
    pub fn shift_x(&self, delta: i64) -> PolyX {
        let shift = PolyX::x_plus(delta);
        let mut acc = PolyX::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&PolyX::constant(c.clone()));
        }
        acc
    }
}

impl std::fmt::Debug for PolyX {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PolyX{:?}",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

/// Series in `t` truncated at a fixed order, coefficients in `Q[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesT {
    coeffs: Vec<PolyX>,
}

impl SeriesT {
    pub fn zero(order: usize) -> Self {
        SeriesT {
            coeffs: vec![PolyX::zero(); order + 1],
        }
    }

    pub fn constant(p: PolyX, order: usize) -> Self {
        let mut s = SeriesT::zero(order);
        s.coeffs[0] = p;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`.
    pub fn coefficient(&self, n: usize) -> &PolyX {
        &self.coeffs[n]
    }

    pub fn add(&self, rhs: &SeriesT) -> Result<SeriesT, SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(SeriesT {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &SeriesT) -> Result<SeriesT, SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch(self.order(), rhs.order()));
        }
        let order = self.order();
        let mut out = SeriesT::zero(order);
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                if a + b > order {
                    break;
                }
                out.coeffs[a + b] = out.coeffs[a + b].add(&ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, p: &PolyX) -> SeriesT {
        SeriesT {
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    /// `1 / (1 - ratio * t)`: the geometric series `sum_m ratio^m t^m`.
    pub fn geometric(ratio: &PolyX, order: usize) -> SeriesT {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut pow = PolyX::constant(BigRational::one());
        for _ in 0..=order {
            coeffs.push(pow.clone());
            pow = pow.mul(ratio);
        }
        SeriesT { coeffs }
    }

    /// `num * t / (1 - ratio * t)`.
    pub fn geom_factor(num: &PolyX, ratio: &PolyX, order: usize) -> SeriesT {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(PolyX::zero());
        let mut cur = num.clone();
        for _ in 1..=order {
            coeffs.push(cur.clone());
            cur = cur.mul(ratio);
        }
        SeriesT { coeffs }
    }

    /// Substitute `x -> x + delta` in every coefficient.
    pub fn substitute_x(&self, delta: i64) -> SeriesT {
        SeriesT {
            coeffs: self.coeffs.iter().map(|c| c.shift_x(delta)).collect(),
        }
    }
}

/// `gamma_k(x, t)` by its defining recurrence:
/// `gamma_0 = xt/(1-xt)` and
/// `gamma_k = (x-k)t/(1-(x-k)(k+1)t) * ((-1)^k/k! + gamma_{k-1})`.
pub fn gamma_series_recurrence(k: usize, order: usize) -> SeriesT {
    let x = PolyX::x_plus(0);
    let mut g = SeriesT::geom_factor(&x, &x, order);
    for j in 1..=k {
        let num = PolyX::x_plus(-(j as i64));
        let ratio = num.scale(&rat_int(j as i64 + 1));
        let mut sign = BigRational::new(BigInt::one(), factorial(j));
        if j % 2 == 1 {
            sign = -sign;
        }
        let shifted = g
            .add(&SeriesT::constant(PolyX::constant(sign), order))
            .expect("orders agree");
        g = SeriesT::geom_factor(&num, &ratio, order)
            .mul(&shifted)
            .expect("orders agree");
    }
    g
}

/// `gamma_k(x, t)` by the closed form
/// `sum_{i=0}^k (-1)^{k-i}/(k-i)! prod_{l=0}^i (x-k+l)t / (1-(x-k+l)(k+1-l)t)`.
pub fn gamma_series_closed(k: usize, order: usize) -> SeriesT {
    let mut total = SeriesT::zero(order);
    for i in 0..=k {
        let mut prod = SeriesT::constant(PolyX::constant(BigRational::one()), order);
        for l in 0..=i {
            let num = PolyX::x_plus(l as i64 - k as i64);
            let ratio = num.scale(&rat_int(k as i64 + 1 - l as i64));
            prod = prod
                .mul(&SeriesT::geom_factor(&num, &ratio, order))
                .expect("orders agree");
        }
        let mut c = BigRational::new(BigInt::one(), factorial(k - i));
        if (k - i) % 2 == 1 {
            c = -c;
        }
        total = total
            .add(&prod.scale(&PolyX::constant(c)))
            .expect("orders agree");
    }
    total
}

/// `gamma_k(x, t)`, computed by both routes; they must agree coefficientwise.
pub fn gamma_series(k: usize, order: usize) -> SeriesT {
    let rec = gamma_series_recurrence(k, order);
    let closed = gamma_series_closed(k, order);
    assert_eq!(rec, closed, "gamma_{k} recurrence and closed form disagree");
    rec
}

/// `beta~_k(x, t) = sum_i (-1)^{k-i}/(k-i)! prod_l (x+l)t/(1-(x+l)(k+1-l)t)`,
/// which also equals `gamma_k(x+k, t)`.
pub fn beta_tilde_series(k: usize, order: usize) -> SeriesT {
    let mut total = SeriesT::zero(order);
    for i in 0..=k {
        let mut prod = SeriesT::constant(PolyX::constant(BigRational::one()), order);
        for l in 0..=i {
            let num = PolyX::x_plus(l as i64);
            let ratio = num.scale(&rat_int(k as i64 + 1 - l as i64));
            prod = prod
                .mul(&SeriesT::geom_factor(&num, &ratio, order))
                .expect("orders agree");
        }
        let mut c = BigRational::new(BigInt::one(), factorial(k - i));
        if (k - i) % 2 == 1 {
            c = -c;
        }
        total = total
            .add(&prod.scale(&PolyX::constant(c)))
            .expect("orders agree");
    }
    total
}

/// `j!` times the coefficient of `y^j` in the generating function
/// `alpha(x,y,t)`:
/// `sum_{k=0}^j C(j,k)/(k+1) sum_{i=0}^k (-1)^{k-i}
///  prod_{l=0}^i (x+l)(k+1-l)t / (1-(x+l)(k+1-l)t)`.
pub fn alpha_y_series(j: usize, order: usize) -> SeriesT {
    let mut total = SeriesT::zero(order);
    for k in 0..=j {
        let mut inner = SeriesT::zero(order);
        for i in 0..=k {
            let mut prod = SeriesT::constant(PolyX::constant(BigRational::one()), order);
            for l in 0..=i {
                let ratio = PolyX::x_plus(l as i64).scale(&rat_int(k as i64 + 1 - l as i64));
                prod = prod
                    .mul(&SeriesT::geom_factor(&ratio, &ratio, order))
                    .expect("orders agree");
            }
            let mut sign = BigRational::one();
            if (k - i) % 2 == 1 {
                sign = -sign;
            }
            inner = inner
                .add(&prod.scale(&PolyX::constant(sign)))
                .expect("orders agree");
        }
        let weight = BigRational::new(binomial(j, k), BigInt::from(k as i64 + 1));
        total = total
            .add(&inner.scale(&PolyX::constant(weight)))
            .expect("orders agree");
    }
    total
}

/// Coefficient of `x^i y^j t^n` in `alpha(x,y,t)`, an exact rational equal
/// to `A(n,i,j) / j!`.
pub fn alpha_coefficient(n: usize, i: usize, j: usize) -> BigRational {
    assert!(n >= 1 && i >= 1);
    let series = alpha_y_series(j, n);
    series.coefficient(n).coeff(i) / rat_int(factorial(j))
}

/// Scalar series over `Q`, same truncation discipline.
#[derive(Clone, PartialEq)]
struct RatSeries(Vec<BigRational>);

impl RatSeries {
    fn zero(order: usize) -> Self {
        RatSeries(vec![BigRational::zero(); order + 1])
    }

    fn one(order: usize) -> Self {
        let mut s = RatSeries::zero(order);
        s.0[0] = BigRational::one();
        s
    }

    fn add(&self, rhs: &RatSeries) -> RatSeries {
        RatSeries(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    fn scale(&self, c: &BigRational) -> RatSeries {
        RatSeries(self.0.iter().map(|a| a * c).collect())
    }

    fn mul(&self, rhs: &RatSeries) -> RatSeries {
        let order = self.0.len() - 1;
        let mut out = RatSeries::zero(order);
        for (a, ca) in self.0.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.0.iter().enumerate() {
                if a + b > order {
                    break;
                }
                out.0[a + b] += ca * cb;
            }
        }
        out
    }

    /// `c*t / (1 - c*t)`.
    fn geom_factor(c: &BigRational, order: usize) -> RatSeries {
        let mut out = RatSeries::zero(order);
        let mut cur = c.clone();
        for m in 1..=order {
            out.0[m] = cur.clone();
            cur *= c;
        }
        out
    }
}

/// The `y^j -> j!`, `x = 1` specialization term
/// `sum_k C(j,k)/(k+1) sum_i (-1)^{k-i} prod_{l=0}^i (1+l)(k+1-l)t/(1-(1+l)(k+1-l)t)`.
fn median_term(j: usize, order: usize) -> RatSeries {
    let mut total = RatSeries::zero(order);
    for k in 0..=j {
        let mut inner = RatSeries::zero(order);
        for i in 0..=k {
            let mut prod = RatSeries::one(order);
            for l in 0..=i {
                let c = rat_int(((1 + l) * (k + 1 - l)) as i64);
                prod = prod.mul(&RatSeries::geom_factor(&c, order));
            }
            if (k - i) % 2 == 1 {
                prod = prod.scale(&-BigRational::one());
            }
            inner = inner.add(&prod);
        }
        let weight = BigRational::new(binomial(j, k), BigInt::from(k as i64 + 1));
        total = total.add(&inner.scale(&weight));
    }
    total
}

/// The coefficient-of-`x` specialization term
/// `sum_k C(j,k) sum_i (-1)^{k-i} prod_{l=1}^i l(k+1-l)t/(1-l(k+1-l)t)`.
fn first_kind_term(j: usize, order: usize) -> RatSeries {
    let mut total = RatSeries::zero(order);
    for k in 0..=j {
        let mut inner = RatSeries::zero(order);
        for i in 0..=k {
            let mut prod = RatSeries::one(order);
            for l in 1..=i {
                let c = rat_int((l * (k + 1 - l)) as i64);
                prod = prod.mul(&RatSeries::geom_factor(&c, order));
            }
            if (k - i) % 2 == 1 {
                prod = prod.scale(&-BigRational::one());
            }
            inner = inner.add(&prod);
        }
        total = total.add(&inner.scale(&rat_int(binomial(j, k))));
    }
    total
}

fn expect_integer(v: &BigRational) -> BigInt {
    assert!(v.is_integer(), "series coefficient {v} is not an integer");
    v.to_integer()
}

/// The median Genocchi numbers `H_1, H_3, ..., H_{2N-1}` as `t^1..t^N`
/// coefficients of the generating function. Each coefficient sums the terms
/// `j <= n-1`; the terms `j = n, n+1, n+2` are verified to contribute zero.
pub fn median_genocchi_series(terms: usize) -> Result<Vec<BigInt>, SeriesError> {
    assert!(terms >= 1);
    let cached: Vec<RatSeries> = (0..=terms + 2).map(|j| median_term(j, terms)).collect();
    let mut out = Vec::with_capacity(terms);
    for n in 1..=terms {
        for j in n..=n + 2 {
            if !cached[j].0[n].is_zero() {
                return Err(SeriesError::ZeroTailViolation { n, j });
            }
        }
        let sum = (0..n).fold(BigRational::zero(), |acc, j| acc + &cached[j].0[n]);
        out.push(expect_integer(&sum));
    }
    Ok(out)
}

/// The first-kind Genocchi numbers `|G_2|, |G_4|, ..., |G_{2N}|`. The whole
/// series carries a global factor `t`, so `t^n` reads coefficient `n-1` of
/// the `j`-terms; tails are verified as above.
pub fn genocchi_first_series(terms: usize) -> Result<Vec<BigInt>, SeriesError> {
    assert!(terms >= 1);
    let order = terms.max(1) - 1;
    let cached: Vec<RatSeries> = (0..=terms + 2).map(|j| first_kind_term(j, order)).collect();
    let mut out = Vec::with_capacity(terms);
    for n in 1..=terms {
        for j in n..=n + 2 {
            if !cached[j].0[n - 1].is_zero() {
                return Err(SeriesError::ZeroTailViolation { n, j });
            }
        }
        let sum = (0..n).fold(BigRational::zero(), |acc, j| acc + &cached[j].0[n - 1]);
        out.push(expect_integer(&sum));
    }
    Ok(out)
}
