//! Integer compositions and partitions, the refinement poset on compositions,
//! and the run decompositions used by the fundamental expansion.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::CombinatError;

/// A finite sequence of positive integers.
///
/// Compositions order by weight, then length, then lexicographically by
/// parts. Formal sums iterate in this order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatError> {
        if parts.contains(&0) {
            return Err(CombinatError::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    /// The empty composition of 0.
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums `a_1, a_1 + a_2, ...` excluding the total.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// The composition of `n` whose descent set is `descents`.
    ///
    /// Elements of `descents` outside `1..n` are an error.
    pub fn from_descent_set(descents: &BTreeSet<usize>, n: usize) -> Result<Self, CombinatError> {
        if n == 0 {
            return if descents.is_empty() {
                Ok(Composition::empty())
            } else {
                Err(CombinatError::DescentOutOfRange { n })
            };
        }
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            if d == 0 || d >= n {
                return Err(CombinatError::DescentOutOfRange { n });
            }
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    pub fn sort(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `z` of the underlying partition: `prod_i i^{m_i} m_i!`.
    pub fn z_factor(&self) -> num::BigUint {
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.0 {
            *mult.entry(p).or_default() += 1;
        }
        let mut z = num::BigUint::from(1u32);
        for (part, m) in mult {
            for k in 1..=m {
                z *= part;
                z *= k;
            }
        }
        z
    }

    /// True iff `coarser` arises from `self` by merging runs of adjacent parts.
    pub fn refines(&self, coarser: &Composition) -> bool {
        self.weight() == coarser.weight() && coarser.descent_set().is_subset(&self.descent_set())
    }

    /// All `γ` with `self ≤ γ ≤ coarser` in the refinement order.
    pub fn interval(&self, coarser: &Composition) -> Result<Vec<Composition>, CombinatError> {
        if !self.refines(coarser) {
            return Err(CombinatError::NotRefinement { finer: self.clone(), coarser: coarser.clone() });
        }
        let n = self.weight();
        let base = coarser.descent_set();
        let free: Vec<usize> = self.descent_set().difference(&base).copied().collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u64..(1u64 << free.len()) {
            let mut set = base.clone();
            set.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d));
            out.push(Composition::from_descent_set(&set, n)?);
        }
        out.sort();
        Ok(out)
    }

    /// Möbius function of the refinement poset, `(-1)^{ℓ(self) - ℓ(coarser)}`.
    pub fn mobius(&self, coarser: &Composition) -> Result<i64, CombinatError> {
        if !self.refines(coarser) {
            return Err(CombinatError::NotRefinement { finer: self.clone(), coarser: coarser.clone() });
        }
        Ok(if (self.len() - coarser.len()).is_multiple_of(2) { 1 } else { -1 })
    }

    /// Every composition that `self` refines, i.e. every coarsening.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.weight();
        let d: Vec<usize> = self.descent_set().into_iter().collect();
        subsets(&d).map(|s| Composition::from_descent_set(&s, n).expect("subset of valid descents")).collect()
    }

    /// Every composition refining `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.weight();
        let base = self.descent_set();
        let free: Vec<usize> = (1..n).filter(|d| !base.contains(d)).collect();
        subsets(&free)
            .map(|mut s| {
                s.extend(base.iter().copied());
                Composition::from_descent_set(&s, n).expect("valid descents")
            })
            .collect()
    }

    /// Descent-set complement within `{1, ..., n-1}`.
    pub fn conjugate(&self) -> Composition {
        let n = self.weight();
        let d = self.descent_set();
        let comp: BTreeSet<usize> = (1..n).filter(|i| !d.contains(i)).collect();
        Composition::from_descent_set(&comp, n).expect("complement stays in range")
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Splits into maximal runs, starting a new run between `a_i` and
    /// `a_{i+1}` whenever `breaks(a_i, a_{i+1})`.
    pub fn runs_by(&self, mut breaks: impl FnMut(usize, usize) -> bool) -> Vec<Composition> {
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            if i == 0 || breaks(self.0[i - 1], p) {
                runs.push(vec![p]);
            } else {
                runs.last_mut().expect("nonempty").push(p);
            }
        }
        runs.into_iter().map(Composition).collect()
    }

    /// Run weights after breaking at strict ascents.
    pub fn runs_c(&self) -> Composition {
        Composition(self.runs_by(|a, b| a < b).iter().map(Composition::weight).collect())
    }

    /// Concatenated conjugates of the strictly decreasing runs.
    pub fn runs_i(&self) -> Composition {
        self.runs_by(|a, b| a <= b).iter().fold(Composition::empty(), |acc, run| acc.concat(&run.conjugate()))
    }

    /// Distinct rearrangements of the parts, in canonical order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        let mut out = vec![Composition(parts.clone())];
        while next_permutation(&mut parts) {
            out.push(Composition(parts.clone()));
        }
        out.sort();
        out
    }

    /// All compositions of `n` in canonical order.
    pub fn all_of(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out: Vec<Composition> = subsets(&(1..n).collect::<Vec<_>>())
            .map(|s| Composition::from_descent_set(&s, n).expect("valid"))
            .collect();
        out.sort();
        out
    }

    /// All compositions of weight at most `n`.
    pub fn all_up_to(n: usize) -> Vec<Composition> {
        (0..=n).flat_map(Composition::all_of).collect()
    }
}

fn subsets(items: &[usize]) -> impl Iterator<Item = BTreeSet<usize>> + '_ {
    (0u64..(1u64 << items.len()))
        .map(move |mask| items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect())
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then(self.len().cmp(&other.len())).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = CombinatError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Composition::new(parts)
    }
}

/// A weakly decreasing composition.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatError> {
        if parts.contains(&0) {
            return Err(CombinatError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn z_factor(&self) -> num::BigUint {
        self.as_composition().z_factor()
    }

    /// All partitions of `n`, in canonical composition order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                go(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out.sort_by_key(|a| a.as_composition());
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_composition().cmp(&other.as_composition())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_composition())
    }
}

/// Shorthand for building a composition from literal parts.
///
/// Panics on a zero part; intended for tests and literals.
pub fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("literal composition has a zero part")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sort_examples() {
        assert_eq!(comp(&[1, 2, 1, 1]).sort().parts(), &[2, 1, 1, 1]);
        assert_eq!(Composition::empty().sort().parts(), &[] as &[usize]);
        assert_eq!(comp(&[2, 1, 2]).sort().parts(), &[2, 2, 1]);
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(comp(&[2, 2, 1]).z_factor(), 8u32.into());
        assert_eq!(comp(&[1, 1]).z_factor(), 2u32.into());
        assert_eq!(comp(&[5]).z_factor(), 5u32.into());
        assert_eq!(Composition::empty().z_factor(), 1u32.into());
    }

    #[test]
    fn refines_examples() {
        assert!(comp(&[1, 1, 2, 1]).refines(&comp(&[1, 4])));
        assert!(!comp(&[2, 3]).refines(&comp(&[1, 4])));
        let a = comp(&[3, 1, 2]);
        assert!(a.refines(&a));
        assert!(!comp(&[1, 1]).refines(&comp(&[3])));
    }

    #[test]
    fn interval_examples() {
        let got = comp(&[1, 1, 2, 1]).interval(&comp(&[1, 4])).unwrap();
        let mut want = vec![comp(&[1, 1, 2, 1]), comp(&[1, 3, 1]), comp(&[1, 1, 3]), comp(&[1, 4])];
        want.sort();
        assert_eq!(got, want);

        let a = comp(&[2, 2]);
        assert_eq!(a.interval(&a).unwrap(), vec![a.clone()]);

        let got = comp(&[1, 2, 2]).interval(&comp(&[5])).unwrap();
        let mut want = vec![comp(&[1, 2, 2]), comp(&[3, 2]), comp(&[1, 4]), comp(&[5])];
        want.sort();
        assert_eq!(got, want);

        assert!(comp(&[2, 3]).interval(&comp(&[1, 4])).is_err());
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(comp(&[1, 1, 2, 1]).mobius(&comp(&[1, 4])).unwrap(), 1);
        assert_eq!(comp(&[1, 4]).mobius(&comp(&[5])).unwrap(), -1);
        let a = comp(&[4, 1]);
        assert_eq!(a.mobius(&a).unwrap(), 1);
        assert!(comp(&[2, 3]).mobius(&comp(&[1, 4])).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(comp(&[1, 1]).conjugate(), comp(&[2]));
        assert_eq!(comp(&[2, 2, 1]).conjugate(), comp(&[1, 2, 2]));
        assert_eq!(comp(&[2, 1, 1]).conjugate(), comp(&[1, 3]));
        assert_eq!(Composition::empty().conjugate(), Composition::empty());
    }

    #[test]
    fn runs_examples() {
        assert_eq!(comp(&[1, 2, 1, 1]).runs_c(), comp(&[1, 4]));
        assert_eq!(comp(&[1, 2, 1, 1]).runs_i(), comp(&[1, 1, 2, 1]));
        assert_eq!(comp(&[3]).runs_c(), comp(&[3]));
        assert_eq!(comp(&[3]).runs_i(), comp(&[1, 1, 1]));
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![comp(&[2, 1]), comp(&[3]), comp(&[1, 2]), comp(&[1, 1, 1]), comp(&[1])];
        v.sort();
        assert_eq!(v, vec![comp(&[1]), comp(&[3]), comp(&[1, 2]), comp(&[2, 1]), comp(&[1, 1, 1])]);
    }

    #[test]
    fn enumeration_counts() {
        for n in 1..=8 {
            assert_eq!(Composition::all_of(n).len(), 1 << (n - 1));
        }
        assert_eq!(Partition::all_of(6).len(), 11);
        assert_eq!(comp(&[2, 2, 1]).rearrangements().len(), 3);
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn mobius_sums_vanish_on_intervals() {
        for n in 1..=6 {
            for a in Composition::all_of(n) {
                for b in a.coarsenings() {
                    if a == b {
                        continue;
                    }
                    let s: i64 = a.interval(&b).unwrap().iter().map(|g| g.mobius(&b).unwrap()).sum();
                    assert_eq!(s, 0, "{a} {b}");
                }
            }
        }
    }
}
