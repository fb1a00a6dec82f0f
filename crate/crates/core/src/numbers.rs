//! Exact integer recurrences: the type triangle `A(n,i,j)`, Legendre-Stirling
//! and Genocchi numbers, Eulerian numbers, and the semiacyclic closed form.

use num::{BigInt, One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumbersError {
    #[error("index ({0}, {1}) out of range")]
    OutOfRange(usize, usize),
    #[error("semiacyclic sum for n = {0} is not divisible by 2^{0}")]
    NonIntegral(usize),
    #[error("median Genocchi number H_{0} is not divisible by 2^{1}")]
    NonDivisible(usize, usize),
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    for i in 0..k {
        num *= n - i;
    }
    num / factorial(k)
}

/// The triangle `A(n,i,j)` counting alt-acyclic tournaments of type
/// `(n,i,j)`, filled by the recurrence
/// `A(n,i,j) = sum_{k=i}^{n-1} C(k,i-1) j A(n-1,k,j-1) + (j+1) A(n-1,i-1,j)`
/// from `A(1,i,j) = [i=1][j=0]`. Every cell is divisible by `j!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTable {
    n: usize,
    /// cells[i-1][j] = A(n, i, j) for 1 <= i <= n, 0 <= j <= n-1
    cells: Vec<Vec<BigInt>>,
}

impl TypeTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `A(n, i, j)`; zero outside the triangle.
    pub fn a(&self, i: usize, j: usize) -> BigInt {
        if i >= 1 && i <= self.n && j < self.n {
            self.cells[i - 1][j].clone()
        } else {
            BigInt::zero()
        }
    }

    /// `A(n, i, j) / j!`, an exact integer.
    pub fn normalized(&self, i: usize, j: usize) -> BigInt {
        let a = self.a(i, j);
        let f = factorial(j);
        let (q, r) = num::Integer::div_rem(&a, &f);
        assert!(r.is_zero(), "A({}, {i}, {j}) not divisible by {j}!", self.n);
        q
    }

    /// `sum_j A(n, i, j)`: alt-acyclic tournaments with `i` roots.
    pub fn root_count_sum(&self, i: usize) -> BigInt {
        (0..self.n).map(|j| self.a(i, j)).sum()
    }

    pub fn total(&self) -> BigInt {
        (1..=self.n).map(|i| self.root_count_sum(i)).sum()
    }
}

/// Type tables for every size `1..=n`, built bottom-up.
pub fn type_tables(n: usize) -> Vec<TypeTable> {
    assert!(n >= 1);
    let mut tables: Vec<TypeTable> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut cells = vec![vec![BigInt::zero(); m]; m];
        if m == 1 {
            cells[0][0] = BigInt::one();
        } else {
            let prev = &tables[m - 2];
            for i in 1..=m {
                for j in 0..m {
                    let mut v = BigInt::zero();
                    if j >= 1 {
                        for k in i..m {
                            v += binomial(k, i - 1) * j * prev.a(k, j - 1);
                        }
                    }
                    if i >= 2 {
                        v += (j + 1) * prev.a(i - 1, j);
                    }
                    cells[i - 1][j] = v;
                }
            }
        }
        tables.push(TypeTable { n: m, cells });
    }
    tables
}

pub fn type_table(n: usize) -> TypeTable {
    type_tables(n).pop().expect("n >= 1")
}

/// Legendre-Stirling number `PS_n^(k)` via
/// `PS_n^(k) = k(k+1) PS_{n-1}^(k) + PS_{n-1}^(k-1)`, `PS_1^(1) = 1`.
pub fn legendre_stirling(n: usize, k: usize) -> Result<BigInt, NumbersError> {
    if n < 1 || k < 1 || k > n {
        return Err(NumbersError::OutOfRange(n, k));
    }
    Ok(legendre_stirling_row(n)[k - 1].clone())
}

/// The row `PS_n^(1..=n)`.
pub fn legendre_stirling_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 2..=n {
        let m = row.len() + 1;
        let mut next = vec![BigInt::zero(); m];
        for (k0, v) in row.iter().enumerate() {
            let k = k0 + 1;
            next[k0] += v * (k * (k + 1));
            next[k0 + 1] += v;
        }
        row = next;
    }
    row
}

/// The median Genocchi number `H_{2n-1}` as the alternating sum
/// `sum_k (-1)^{n-k} (k!)^2 PS_n^(k)`.
pub fn median_genocchi(n: usize) -> BigInt {
    assert!(n >= 1);
    let row = legendre_stirling_row(n);
    let mut acc = BigInt::zero();
    for (k0, ps) in row.iter().enumerate() {
        let k = k0 + 1;
        let f = factorial(k);
        let term = &f * &f * ps;
        if (n - k).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The unsigned Genocchi number of the first kind `|G_{2n}|`, as the column
/// sum `sum_j A(n,1,j)`: it counts ascending alt-acyclic tournaments.
pub fn genocchi_first(n: usize) -> BigInt {
    assert!(n >= 1);
    type_table(n).root_count_sum(1)
}

/// Eulerian number: permutations of `{1..n}` with exactly `j` descents. On
/// the triangle diagonal, `A(n, n-j, j) / j!` equals this.
pub fn eulerian(n: usize, j: usize) -> Result<BigInt, NumbersError> {
    if n < 1 || j >= n {
        return Err(NumbersError::OutOfRange(n, j));
    }
    let mut row = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for (d, v) in row.iter().enumerate() {
            next[d] += v * (d + 1);
            next[d + 1] += v * (m - d - 1);
        }
        row = next;
    }
    Ok(row[j].clone())
}

/// Number of semiacyclic tournaments on `{1..n}`:
/// `2^{-n} sum_{k=0}^n C(n,k) (k+1)^{n-1}`, asserted integral.
pub fn semiacyclic_count(n: usize) -> Result<BigInt, NumbersError> {
    assert!(n >= 1);
    let mut sum = BigInt::zero();
    for k in 0..=n {
        sum += binomial(n, k) * BigInt::from(k + 1).pow(n as u32 - 1);
    }
    let denom = BigInt::one() << n;
    let (q, r) = num::Integer::div_rem(&sum, &denom);
    if !r.is_zero() {
        return Err(NumbersError::NonIntegral(n));
    }
    Ok(q)
}

/// Normalized median Genocchi number `h_n = H_{2n+1} / 2^n` (`n >= 0`).
pub fn normalized_median_genocchi(n: usize) -> Result<BigInt, NumbersError> {
    let h = median_genocchi(n + 1);
    let denom = BigInt::one() << n;
    let (q, r) = num::Integer::div_rem(&h, &denom);
    if !r.is_zero() {
        return Err(NumbersError::NonDivisible(2 * n + 1, n));
    }
    Ok(q)
}

/// True division check helper: 2^{n-1} divides H_{2n-1}.
pub fn median_genocchi_divisible(n: usize) -> bool {
    let h = median_genocchi(n);
    let denom = BigInt::one() << (n - 1);
    num::Integer::div_rem(&h, &denom).1.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), b(10));
        assert_eq!(binomial(4, 0), b(1));
        assert_eq!(binomial(3, 5), b(0));
        assert_eq!(factorial(6), b(720));
    }

    #[test]
    fn base_table() {
        let t = type_table(1);
        assert_eq!(t.a(1, 0), b(1));
        assert_eq!(t.total(), b(1));
        assert_eq!(t.a(1, 1), b(0));
        assert_eq!(t.a(2, 0), b(0));
    }

    #[test]
    fn normalized_cells_match_printed_triangle() {
        // n = 4 block: rows j = 2, 1 hold 5, 11 and 1, 5, 11
        let t4 = type_table(4);
        assert_eq!(t4.normalized(2, 2), b(11));
        assert_eq!(t4.normalized(3, 1), b(11));
        assert_eq!(t4.normalized(1, 2), b(5));
        // n = 5 block spot value
        let t5 = type_table(5);
        assert_eq!(t5.normalized(3, 2), b(66));
        assert_eq!(t5.normalized(1, 3), b(16));
    }

    #[test]
    fn table_vanishing_and_kronecker_column() {
        for n in 1..=10 {
            let t = type_table(n);
            for i in 1..=n {
                for j in 0..n {
                    if i + j > n {
                        assert_eq!(t.a(i, j), b(0), "A({n},{i},{j})");
                    }
                }
                let expected = if i == n { b(1) } else { b(0) };
                assert_eq!(t.a(i, 0), expected);
            }
            for i in 1..=n {
                for j in 0..n {
                    // exact division by j! must hold on every cell
                    let _ = t.normalized(i, j);
                }
            }
        }
    }

    #[test]
    fn eulerian_diagonal() {
        assert_eq!(eulerian(5, 2).unwrap(), b(66));
        assert_eq!(eulerian(4, 1).unwrap(), b(11));
        assert_eq!(eulerian(6, 0).unwrap(), b(1));
        for n in 1..=10usize {
            let t = type_table(n);
            for j in 0..n {
                assert_eq!(t.normalized(n - j, j), eulerian(n, j).unwrap());
            }
        }
        assert!(eulerian(3, 3).is_err());
    }

    #[test]
    fn legendre_stirling_values() {
        assert_eq!(legendre_stirling(1, 1).unwrap(), b(1));
        assert_eq!(legendre_stirling(3, 2).unwrap(), b(8));
        for n in 1..=8 {
            assert_eq!(legendre_stirling(n, n).unwrap(), b(1));
        }
        assert!(legendre_stirling(3, 0).is_err());
        assert!(legendre_stirling(3, 4).is_err());
    }

    #[test]
    fn median_genocchi_values() {
        let expected = [1i64, 2, 8, 56, 608, 9440, 198272, 5410688];
        for (idx, &v) in expected.iter().enumerate() {
            assert_eq!(median_genocchi(idx + 1), b(v));
        }
        // n = 4 is the alternating sum -8 + 208 - 720 + 576
        assert_eq!(median_genocchi(4), b(-8 + 208 - 720 + 576));
    }

    #[test]
    fn median_equals_table_total() {
        for n in 1..=10 {
            assert_eq!(median_genocchi(n), type_table(n).total());
        }
    }

    #[test]
    fn genocchi_first_values() {
        let expected = [1i64, 1, 3, 17, 155, 2073, 38227, 929569];
        for (idx, &v) in expected.iter().enumerate() {
            assert_eq!(genocchi_first(idx + 1), b(v));
        }
        // n = 4: 1!*1 + 2!*5 + 3!*1 from the normalized column
        assert_eq!(genocchi_first(4), b(1 + 10 + 6));
    }

    #[test]
    fn semiacyclic_closed_form() {
        let expected = [1i64, 2, 7, 36, 246, 2104];
        for (idx, &v) in expected.iter().enumerate() {
            assert_eq!(semiacyclic_count(idx + 1).unwrap(), b(v));
        }
    }

    #[test]
    fn normalized_median_values() {
        let expected = [1i64, 1, 2, 7, 38, 295, 3098, 42271];
        for (idx, &v) in expected.iter().enumerate() {
            assert_eq!(normalized_median_genocchi(idx).unwrap(), b(v));
        }
        for n in 1..=12 {
            assert!(median_genocchi_divisible(n));
        }
    }
}
