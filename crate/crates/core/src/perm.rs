//! Permutations of `{1..n}` stored together with their inverse.
//!
//! Values and positions are both 1-based throughout, matching the usual
//! one-line notation `pi(1) pi(2) ... pi(n)`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("word is empty")]
    Empty,
    #[error("word of length {0} is not a permutation of 1..={0}")]
    NotABijection(usize),
}

/// A permutation of `{1..n}` in one-line notation, with O(1) position lookup.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
    positions: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, PermutationError> {
        if word.is_empty() {
            return Err(PermutationError::Empty);
        }
        let n = word.len();
        let mut positions = vec![0usize; n];
        for (idx, &v) in word.iter().enumerate() {
            if v < 1 || v > n || positions[v - 1] != 0 {
                return Err(PermutationError::NotABijection(n));
            }
            positions[v - 1] = idx + 1;
        }
        Ok(Permutation { word, positions })
    }

    pub fn identity(n: usize) -> Self {
        Permutation::new((1..=n).collect()).expect("identity word is a permutation")
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `pi(pos)` for a 1-based position.
    pub fn value_at(&self, pos: usize) -> usize {
        self.word[pos - 1]
    }

    /// `pi^{-1}(value)`: the 1-based position of `value` in the word.
    pub fn position_of(&self, value: usize) -> usize {
        self.positions[value - 1]
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// 1-based positions `i` with `pi(i) > pi(i+1)`.
    pub fn descent_positions(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(idx, &v)| v == idx + 1)
    }

    /// The word with the letter `value` deleted (remaining letters keep their
    /// values). The result is a permutation only when `value == n`.
    pub fn delete_letter(&self, value: usize) -> Result<Self, PermutationError> {
        let word = self
            .word
            .iter()
            .copied()
            .filter(|&v| v != value)
            .collect::<Vec<_>>();
        Permutation::new(word)
    }

    /// All permutations of `{1..n}` in lexicographic order of their words.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|word| Permutation::new(word).expect("generated word is a permutation"))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", v)?;
            first = false;
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermutationError;

    fn try_from(word: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.word
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_invert_the_word() {
        let p = Permutation::new(vec![5, 3, 1, 2, 4, 6]).unwrap();
        for k in 1..=6 {
            assert_eq!(p.position_of(p.value_at(k)), k);
        }
        assert_eq!(p.position_of(3), 2);
        assert_eq!(p.value_at(4), 2);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn descents_of_worked_word() {
        let p = Permutation::new(vec![1, 2, 5, 3, 4, 6]).unwrap();
        assert_eq!(p.descent_positions(), vec![3]);
        assert!(Permutation::identity(5).descent_positions().is_empty());
    }

    #[test]
    fn all_permutations_count() {
        assert_eq!(Permutation::all(4).count(), 24);
        let first = Permutation::all(3).next().unwrap();
        assert!(first.is_identity());
    }
}
