//! Set compositions (ordered set partitions) and set partitions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::composition::{next_permutation, Composition};
use super::order::BlockOrder;
use crate::error::CombinatError;

/// An ordered sequence of nonempty, pairwise-disjoint sets of positive
/// integers. Each block is stored sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SetComposition(Vec<Vec<usize>>);

impl SetComposition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, CombinatError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(CombinatError::EmptyBlock);
            }
            b.sort_unstable();
            for &x in &b {
                if x == 0 {
                    return Err(CombinatError::ZeroElement);
                }
                if !seen.insert(x) {
                    return Err(CombinatError::OverlappingBlocks(x));
                }
            }
            out.push(b);
        }
        Ok(SetComposition(out))
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Vec<usize>>) -> Self {
        SetComposition(blocks)
    }

    pub fn empty() -> Self {
        SetComposition(Vec::new())
    }

    /// `1|2|...|n`.
    pub fn singletons(n: usize) -> Self {
        SetComposition((1..=n).map(|i| vec![i]).collect())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ground_set(&self) -> BTreeSet<usize> {
        self.0.iter().flatten().copied().collect()
    }

    /// Ground set is exactly `{1, ..., n}`.
    pub fn is_standard(&self) -> bool {
        let g = self.ground_set();
        g.iter().copied().eq(1..=g.len())
    }

    /// Block sizes.
    pub fn rho(&self) -> Composition {
        Composition::new(self.0.iter().map(Vec::len).collect()).expect("blocks are nonempty")
    }

    /// Relabels the ground set to `{1, ..., m}` preserving relative order.
    pub fn standardize(&self) -> SetComposition {
        let ground: Vec<usize> = self.ground_set().into_iter().collect();
        let rank = |x: usize| ground.binary_search(&x).expect("in ground set") + 1;
        SetComposition(self.0.iter().map(|b| b.iter().map(|&x| rank(x)).collect()).collect())
    }

    pub fn shift_up(&self, n: usize) -> SetComposition {
        SetComposition(self.0.iter().map(|b| b.iter().map(|&x| x + n).collect()).collect())
    }

    pub fn concat(&self, other: &SetComposition) -> Result<SetComposition, CombinatError> {
        let mut blocks = self.0.clone();
        blocks.extend(other.0.iter().cloned());
        SetComposition::new(blocks)
    }

    /// `(B_1|...|B_i, B_{i+1}|...|B_k)` for `i = 0..=k`.
    pub fn deconcatenations(&self) -> Vec<(SetComposition, SetComposition)> {
        (0..=self.0.len())
            .map(|i| (SetComposition(self.0[..i].to_vec()), SetComposition(self.0[i..].to_vec())))
            .collect()
    }

    /// Forget block order.
    pub fn sort(&self) -> SetPartition {
        SetPartition::from_sorted_blocks(self.0.clone())
    }

    /// Block sizes split into maximal runs, breaking between `B_i` and
    /// `B_{i+1}` whenever `B_i` is not greater than `B_{i+1}` under `order`.
    pub fn block_runs(&self, order: &BlockOrder) -> Vec<Composition> {
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for (i, b) in self.0.iter().enumerate() {
            if i == 0 || !order.greater(&self.0[i - 1], b) {
                runs.push(vec![b.len()]);
            } else {
                runs.last_mut().expect("nonempty").push(b.len());
            }
        }
        runs.into_iter().map(|r| Composition::new(r).expect("sizes positive")).collect()
    }

    /// Run weights of [`SetComposition::block_runs`].
    pub fn rho_c(&self, order: &BlockOrder) -> Composition {
        Composition::new(self.block_runs(order).iter().map(Composition::weight).collect()).expect("runs nonempty")
    }

    /// Concatenated conjugates of [`SetComposition::block_runs`].
    pub fn rho_i(&self, order: &BlockOrder) -> Composition {
        self.block_runs(order).iter().fold(Composition::empty(), |acc, run| acc.concat(&run.conjugate()))
    }

    /// Every set composition obtained by permuting blocks of equal size
    /// among their own positions.
    pub fn block_symmetry_orbit(&self) -> Vec<SetComposition> {
        let sizes: BTreeSet<usize> = self.0.iter().map(Vec::len).collect();
        let mut out = vec![self.clone()];
        for size in sizes {
            let positions: Vec<usize> = (0..self.0.len()).filter(|&i| self.0[i].len() == size).collect();
            let mut next = Vec::new();
            for base in &out {
                let mut group: Vec<Vec<usize>> = positions.iter().map(|&i| base.0[i].clone()).collect();
                group.sort();
                loop {
                    let mut blocks = base.0.clone();
                    for (&p, b) in positions.iter().zip(&group) {
                        blocks[p] = b.clone();
                    }
                    next.push(SetComposition(blocks));
                    if !next_permutation(&mut group) {
                        break;
                    }
                }
            }
            out = next;
        }
        out.sort();
        out.dedup();
        out
    }

    /// The set composition with `ρ = alpha` whose blocks of each size hold
    /// consecutive integers, assigned left to right: `(1,2,1,1) ↦ 1|23|4|5`.
    pub fn canonical_for(alpha: &Composition) -> SetComposition {
        let mut next = 1;
        SetComposition(
            alpha
                .parts()
                .iter()
                .map(|&p| {
                    let b: Vec<usize> = (next..next + p).collect();
                    next += p;
                    b
                })
                .collect(),
        )
    }

    /// All set compositions of `{1, ..., n}` in canonical order.
    pub fn all_of(n: usize) -> Vec<SetComposition> {
        fn go(rest: &[usize], prefix: &mut Vec<Vec<usize>>, out: &mut Vec<SetComposition>) {
            if rest.is_empty() {
                out.push(SetComposition(prefix.clone()));
                return;
            }
            let k = rest.len();
            for mask in 1u32..(1u32 << k) {
                let (block, others): (Vec<(usize, &usize)>, Vec<(usize, &usize)>) =
                    rest.iter().enumerate().partition(|(i, _)| mask >> i & 1 == 1);
                prefix.push(block.into_iter().map(|(_, &x)| x).collect());
                let others: Vec<usize> = others.into_iter().map(|(_, &x)| x).collect();
                go(&others, prefix, out);
                prefix.pop();
            }
        }
        let ground: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        go(&ground, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Compact rendering `34|15|2` when every element is a single digit,
    /// otherwise `3,4|1,5|2`.
    pub fn compact(&self) -> String {
        if self.0.is_empty() {
            return "∅".into();
        }
        let short = self.0.iter().flatten().all(|&x| x < 10);
        let sep = if short { "" } else { "," };
        self.0
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// The set composition whose block `k` holds the positions of the `k`-th
/// smallest distinct value of `word`.
pub fn varrho(word: &[usize]) -> SetComposition {
    let values: BTreeSet<usize> = word.iter().copied().collect();
    let values: Vec<usize> = values.into_iter().collect();
    let mut blocks = vec![Vec::new(); values.len()];
    for (i, w) in word.iter().enumerate() {
        let rank = values.binary_search(w).expect("present");
        blocks[rank].push(i + 1);
    }
    SetComposition(blocks)
}

impl Ord for SetComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then(self.len().cmp(&other.len())).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SetComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Debug for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An unordered collection of disjoint nonempty sets, stored by increasing
/// block minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition(Vec<Vec<usize>>);

impl SetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, CombinatError> {
        let sc = SetComposition::new(blocks)?;
        Ok(SetPartition::from_sorted_blocks(sc.0))
    }

    fn from_sorted_blocks(mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.sort_by_key(|b| b[0]);
        SetPartition(blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }

    /// Every ordering of the blocks.
    pub fn orderings(&self) -> Vec<SetComposition> {
        let mut idx: Vec<usize> = (0..self.0.len()).collect();
        let mut out = Vec::new();
        loop {
            out.push(SetComposition(idx.iter().map(|&i| self.0[i].clone()).collect()));
            if !next_permutation(&mut idx) {
                break;
            }
        }
        out.sort();
        out
    }

    /// All set partitions of `{1, ..., n}`.
    pub fn all_of(n: usize) -> Vec<SetPartition> {
        let mut out: Vec<SetPartition> = SetComposition::all_of(n).iter().map(SetComposition::sort).collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Literal set composition from blocks; panics on invalid input.
pub fn setcomp(blocks: &[&[usize]]) -> SetComposition {
    SetComposition::new(blocks.iter().map(|b| b.to_vec()).collect()).expect("valid literal set composition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::comp;

    #[test]
    fn rho_examples() {
        assert_eq!(setcomp(&[&[5], &[1, 3], &[2], &[4]]).rho(), comp(&[1, 2, 1, 1]));
        assert_eq!(setcomp(&[&[1, 2, 3, 4, 5]]).rho(), comp(&[5]));
        assert_eq!(setcomp(&[&[1, 5], &[3, 4], &[2]]).rho(), comp(&[2, 2, 1]));
    }

    #[test]
    fn varrho_examples() {
        assert_eq!(varrho(&[1, 6, 4, 3, 6]), setcomp(&[&[1], &[4], &[3], &[2, 5]]));
        assert_eq!(varrho(&[7]), setcomp(&[&[1]]));
        assert_eq!(varrho(&[2, 2]), setcomp(&[&[1, 2]]));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(setcomp(&[&[4], &[2, 5], &[7]]).standardize(), setcomp(&[&[2], &[1, 3], &[4]]));
        let phi = setcomp(&[&[2], &[1, 3]]);
        assert_eq!(phi.standardize(), phi);
        assert_eq!(setcomp(&[&[3, 6], &[9]]).standardize(), setcomp(&[&[1, 2], &[3]]));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(setcomp(&[&[1], &[2]]).shift_up(3), setcomp(&[&[4], &[5]]));
        let phi = setcomp(&[&[1, 3], &[2]]);
        assert_eq!(phi.shift_up(0), phi);
        assert_eq!(phi.shift_up(2), setcomp(&[&[3, 5], &[4]]));
    }

    #[test]
    fn rho_c_and_rho_i() {
        let d = BlockOrder::dtilde();
        let phi = setcomp(&[&[2], &[5], &[1, 4], &[3, 6], &[7]]);
        assert_eq!(phi.rho_c(&d), comp(&[2, 5]));
        assert_eq!(phi.rho_i(&d), comp(&[2, 1, 2, 2]));
        let psi = setcomp(&[&[1, 5], &[3, 4], &[2]]);
        assert_eq!(psi.rho_c(&d), comp(&[5]));
        assert_eq!(psi.rho_i(&d), comp(&[1, 2, 2]));
    }

    #[test]
    fn orbit_examples() {
        let phi = setcomp(&[&[4], &[2, 5], &[7], &[1, 3], &[6]]);
        let orbit = phi.block_symmetry_orbit();
        assert_eq!(orbit.len(), 12);
        assert!(orbit.contains(&setcomp(&[&[4], &[1, 3], &[6], &[2, 5], &[7]])));

        let psi = setcomp(&[&[3, 4], &[1, 5], &[2]]);
        let mut want = vec![psi.clone(), setcomp(&[&[1, 5], &[3, 4], &[2]])];
        want.sort();
        assert_eq!(psi.block_symmetry_orbit(), want);

        let one = setcomp(&[&[1, 2, 3, 4, 5]]);
        assert_eq!(one.block_symmetry_orbit(), vec![one.clone()]);
    }

    #[test]
    fn canonical_representative() {
        assert_eq!(SetComposition::canonical_for(&comp(&[1, 2, 1, 1])), setcomp(&[&[1], &[2, 3], &[4], &[5]]));
    }

    #[test]
    fn enumeration_counts() {
        // Fubini numbers
        let counts: Vec<usize> = (0..=5).map(|n| SetComposition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 13, 75, 541]);
        let bell: Vec<usize> = (0..=5).map(|n| SetPartition::all_of(n).len()).collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(SetComposition::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(SetComposition::new(vec![vec![]]).is_err());
        assert!(SetComposition::new(vec![vec![0]]).is_err());
    }

    #[test]
    fn standardize_ignores_shift() {
        for m in 0..=5 {
            for phi in SetComposition::all_of(m) {
                for n in 0..=3 {
                    assert_eq!(phi.shift_up(n).standardize(), phi.standardize());
                }
            }
        }
    }

    #[test]
    fn sorted_rho_of_varrho_matches() {
        for n in 1..=6 {
            for a in Composition::all_of(n) {
                let phi = varrho(a.parts());
                assert!(phi.is_standard());
                assert_eq!(phi.weight(), a.len());
            }
        }
        // rho(varrho(a)) groups equal parts: for a word with distinct values
        // it is all ones.
        assert_eq!(varrho(&[3, 1, 2]).rho(), comp(&[1, 1, 1]));
    }

    // Orbits of equal-size block permutations partition each shape class.
    #[test]
    fn orbits_partition_shape_classes() {
        for n in 1..=5 {
            let all = SetComposition::all_of(n);
            let mut seen = BTreeSet::new();
            for phi in &all {
                if seen.contains(phi) {
                    continue;
                }
                let orbit = phi.block_symmetry_orbit();
                let expected: usize = {
                    let mut mult = std::collections::BTreeMap::new();
                    for b in phi.blocks() {
                        *mult.entry(b.len()).or_insert(0usize) += 1;
                    }
                    mult.values().map(|&m| (1..=m).product::<usize>()).product()
                };
                assert_eq!(orbit.len(), expected);
                for psi in orbit {
                    assert_eq!(psi.rho().sort(), phi.rho().sort());
                    assert!(seen.insert(psi), "orbits overlap");
                }
            }
            assert_eq!(seen.len(), all.len());
        }
    }
}
