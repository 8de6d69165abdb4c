//! Compositions, set compositions, orders, permutations and shuffles.

mod composition;
mod order;
mod permutation;
mod setcomp;
mod shuffle;

pub use composition::{comp, Composition, Partition};
pub use order::{dtilde_compare, BlockOrder, MinRule, PartOrder};
pub use permutation::Permutation;
pub use setcomp::{setcomp, varrho, SetComposition, SetPartition};
pub use shuffle::{interleavings, overlapping_interleavings, quasishuffle, shifted_shuffle, shuffle, Multiset};

pub(crate) use composition::next_permutation;
