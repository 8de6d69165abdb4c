//! Shuffles, quasishuffles and shifted shuffles. Results are multisets:
//! equal interleavings are counted, never deduplicated.

use std::collections::BTreeMap;

use super::composition::Composition;
use super::setcomp::SetComposition;

pub type Multiset<T> = BTreeMap<T, usize>;

/// Every interleaving of `a` and `b` preserving both relative orders, with
/// repetition. There are `binom(|a|+|b|, |a|)` of them.
pub fn interleavings<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut rest in interleavings(&a[1..], b) {
        rest.insert(0, a[0].clone());
        out.push(rest);
    }
    for mut rest in interleavings(a, &b[1..]) {
        rest.insert(0, b[0].clone());
        out.push(rest);
    }
    out
}

/// Interleavings where the two current heads may also be merged with `merge`.
pub fn overlapping_interleavings<T: Clone>(a: &[T], b: &[T], merge: &impl Fn(&T, &T) -> T) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut rest in overlapping_interleavings(&a[1..], b, merge) {
        rest.insert(0, a[0].clone());
        out.push(rest);
    }
    for mut rest in overlapping_interleavings(a, &b[1..], merge) {
        rest.insert(0, b[0].clone());
        out.push(rest);
    }
    for mut rest in overlapping_interleavings(&a[1..], &b[1..], merge) {
        rest.insert(0, merge(&a[0], &b[0]));
        out.push(rest);
    }
    out
}

fn count<T: Ord>(items: impl IntoIterator<Item = T>) -> Multiset<T> {
    let mut m = Multiset::new();
    for x in items {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

pub fn shuffle(a: &Composition, b: &Composition) -> Multiset<Composition> {
    count(interleavings(a.parts(), b.parts()).into_iter().map(|p| Composition::new(p).expect("positive parts")))
}

/// The shuffle plus merged-head terms; the index set of `M_a * M_b`.
pub fn quasishuffle(a: &Composition, b: &Composition) -> Multiset<Composition> {
    count(
        overlapping_interleavings(a.parts(), b.parts(), &|x, y| x + y)
            .into_iter()
            .map(|p| Composition::new(p).expect("positive parts")),
    )
}

/// Block interleavings of `phi` with `psi` shifted up by the weight of `phi`.
pub fn shifted_shuffle(phi: &SetComposition, psi: &SetComposition) -> Multiset<SetComposition> {
    let shifted = psi.shift_up(phi.weight());
    count(interleavings(phi.blocks(), shifted.blocks()).into_iter().map(SetComposition::from_blocks_unchecked))
}
