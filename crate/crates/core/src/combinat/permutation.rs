use std::fmt;

use super::composition::{next_permutation, Composition};
use super::setcomp::SetComposition;
use crate::error::CombinatError;

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, CombinatError> {
        let mut sorted = one_line.clone();
        sorted.sort_unstable();
        if !sorted.iter().copied().eq(1..=one_line.len()) {
            return Err(CombinatError::NotPermutation(one_line));
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// The composition of `n` with descent set `{i : τ(i) > τ(i+1)}`.
    pub fn descent_composition(&self) -> Composition {
        let descents = self.0.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect();
        Composition::from_descent_set(&descents, self.0.len()).expect("descents in range")
    }

    /// `τ^{-1}` acting on the block positions of `1 | 2 | ... | n`: the block
    /// at position `i` moves to position `τ^{-1}(i)`, giving
    /// `τ(1) | τ(2) | ... | τ(n)`.
    pub fn inverse_singleton_image(&self) -> SetComposition {
        SetComposition::from_blocks_unchecked(self.0.iter().map(|&x| vec![x]).collect())
    }

    /// All permutations of `n` in lexicographic order.
    pub fn all_of(n: usize) -> Vec<Permutation> {
        let mut v: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(v.clone())];
        while next_permutation(&mut v) {
            out.push(Permutation(v.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", items.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{comp, setcomp};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn descent_compositions() {
        assert_eq!(Permutation::identity(3).descent_composition(), comp(&[3]));
        assert_eq!(perm(&[2, 1]).descent_composition(), comp(&[1, 1]));
        assert_eq!(perm(&[3, 1, 2]).descent_composition(), comp(&[1, 2]));
    }

    #[test]
    fn singleton_images() {
        assert_eq!(Permutation::identity(3).inverse_singleton_image(), SetComposition::singletons(3));
        assert_eq!(perm(&[2, 1]).inverse_singleton_image(), setcomp(&[&[2], &[1]]));
        assert_eq!(perm(&[2, 3, 1]).inverse_singleton_image(), setcomp(&[&[2], &[3], &[1]]));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert_eq!(Permutation::all_of(4).len(), 24);
    }
}
