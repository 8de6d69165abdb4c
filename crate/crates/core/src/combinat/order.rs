//! Total orders on parts and on disjoint blocks.
//!
//! A [`PartOrder`] decides when two consecutive parts may share a column of a
//! strict diagonal filling; a [`BlockOrder`] does the same for blocks of a
//! labelled filling.

use std::cmp::Ordering;
use std::fmt;

use crate::error::CombinatError;

/// A strict total order `⪰` on positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartOrder {
    /// The usual `≥`.
    #[default]
    Descending,
    /// The usual `≤`.
    Ascending,
    /// Listed values rank from greatest to least; every unlisted value
    /// ranks below all listed ones, ordered among themselves by `≥`.
    Ranked(Vec<usize>),
}

impl PartOrder {
    pub fn ranked(values: Vec<usize>) -> Result<Self, CombinatError> {
        let mut seen = std::collections::BTreeSet::new();
        for &v in &values {
            if v == 0 || !seen.insert(v) {
                return Err(CombinatError::BadOrder(format!("ranking {values:?}")));
            }
        }
        Ok(PartOrder::Ranked(values))
    }

    /// `Greater` when `a` is strictly above `b`.
    pub fn compare(&self, a: usize, b: usize) -> Ordering {
        match self {
            PartOrder::Descending => a.cmp(&b),
            PartOrder::Ascending => b.cmp(&a),
            PartOrder::Ranked(list) => {
                let pos = |x: usize| list.iter().position(|&v| v == x);
                match (pos(a), pos(b)) {
                    (Some(i), Some(j)) => j.cmp(&i),
                    (Some(_), None) => Ordering::Greater,
                    (None, Some(_)) => Ordering::Less,
                    (None, None) => a.cmp(&b),
                }
            }
        }
    }

    /// `a ⪰ b`.
    pub fn dominates(&self, a: usize, b: usize) -> bool {
        self.compare(a, b) != Ordering::Less
    }

    pub fn name(&self) -> String {
        match self {
            PartOrder::Descending => "descending".into(),
            PartOrder::Ascending => "ascending".into(),
            PartOrder::Ranked(v) => {
                let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("ranked:{}", items.join(","))
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self, CombinatError> {
        match s {
            "descending" | "ge" => Ok(PartOrder::Descending),
            "ascending" | "le" => Ok(PartOrder::Ascending),
            _ => match s.strip_prefix("ranked:") {
                Some(rest) => PartOrder::ranked(parse_list(rest)?),
                None => Err(CombinatError::BadOrder(s.to_string())),
            },
        }
    }
}

impl fmt::Display for PartOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>, CombinatError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| CombinatError::BadOrder(s.to_string())))
        .collect()
}

/// How two equal-size blocks are ranked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MinRule {
    /// The block with the smaller minimum is greater.
    SmallerMinFirst,
    /// The block with the larger minimum is greater.
    LargerMinFirst,
}

/// A strict total order `⊳` on pairwise-disjoint nonempty sets: blocks
/// compare by size under `sizes`, then by minimum under `ties`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockOrder {
    pub sizes: PartOrder,
    pub ties: MinRule,
}

impl BlockOrder {
    /// Larger blocks first; on equal size the smaller minimum wins.
    pub fn dtilde() -> Self {
        BlockOrder { sizes: PartOrder::Descending, ties: MinRule::SmallerMinFirst }
    }

    /// The reverse of [`BlockOrder::dtilde`].
    pub fn reverse_dtilde() -> Self {
        BlockOrder { sizes: PartOrder::Ascending, ties: MinRule::LargerMinFirst }
    }

    /// Blocks must be sorted ascending; they are assumed disjoint.
    pub fn compare(&self, a: &[usize], b: &[usize]) -> Ordering {
        match self.sizes.compare(a.len(), b.len()) {
            Ordering::Equal => {
                let (ma, mb) = (a.first(), b.first());
                match self.ties {
                    MinRule::SmallerMinFirst => mb.cmp(&ma),
                    MinRule::LargerMinFirst => ma.cmp(&mb),
                }
            }
            o => o,
        }
    }

    /// `a ⊳ b`.
    pub fn greater(&self, a: &[usize], b: &[usize]) -> bool {
        self.compare(a, b) == Ordering::Greater
    }

    /// Checked comparison: rejects empty or overlapping blocks.
    pub fn try_compare(&self, a: &[usize], b: &[usize]) -> Result<Ordering, CombinatError> {
        if a.is_empty() || b.is_empty() || a.iter().any(|x| b.contains(x)) {
            return Err(CombinatError::IncomparableBlocks);
        }
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        Ok(self.compare(&a, &b))
    }

    pub fn name(&self) -> String {
        if *self == BlockOrder::dtilde() {
            "dtilde".into()
        } else if *self == BlockOrder::reverse_dtilde() {
            "reverse-dtilde".into()
        } else {
            let ties = match self.ties {
                MinRule::SmallerMinFirst => "min-first",
                MinRule::LargerMinFirst => "max-first",
            };
            format!("sizes:{};{ties}", self.sizes.name())
        }
    }

    pub fn parse(s: &str) -> Result<Self, CombinatError> {
        match s {
            "dtilde" => Ok(BlockOrder::dtilde()),
            "reverse-dtilde" => Ok(BlockOrder::reverse_dtilde()),
            _ => {
                let rest = s.strip_prefix("sizes:").ok_or_else(|| CombinatError::BadOrder(s.to_string()))?;
                let (sizes, ties) = rest.split_once(';').unwrap_or((rest, "min-first"));
                let ties = match ties {
                    "min-first" => MinRule::SmallerMinFirst,
                    "max-first" => MinRule::LargerMinFirst,
                    _ => return Err(CombinatError::BadOrder(s.to_string())),
                };
                Ok(BlockOrder { sizes: PartOrder::parse(sizes)?, ties })
            }
        }
    }
}

impl Default for BlockOrder {
    fn default() -> Self {
        BlockOrder::dtilde()
    }
}

impl fmt::Display for BlockOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The `D̃` comparison on disjoint nonempty sets.
pub fn dtilde_compare(a: &[usize], b: &[usize]) -> Result<Ordering, CombinatError> {
    BlockOrder::dtilde().try_compare(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::SetComposition;

    #[test]
    fn dtilde_examples() {
        assert_eq!(dtilde_compare(&[3, 4], &[1, 5]).unwrap(), Ordering::Less);
        assert_eq!(dtilde_compare(&[2, 3], &[7]).unwrap(), Ordering::Greater);
        assert_eq!(dtilde_compare(&[1], &[2]).unwrap(), Ordering::Greater);
        assert!(dtilde_compare(&[1, 2], &[2, 3]).is_err());
        assert!(dtilde_compare(&[], &[2]).is_err());
    }

    #[test]
    fn part_orders() {
        assert!(PartOrder::Descending.dominates(3, 2));
        assert!(PartOrder::Descending.dominates(2, 2));
        assert!(!PartOrder::Ascending.dominates(3, 2));
        let r = PartOrder::ranked(vec![2, 5]).unwrap();
        assert!(r.dominates(2, 5));
        assert!(r.dominates(5, 7));
        assert!(r.dominates(7, 1));
        assert!(!r.dominates(1, 7));
        assert_eq!(PartOrder::parse(&r.name()).unwrap(), r);
        assert!(PartOrder::ranked(vec![1, 1]).is_err());
    }

    #[test]
    fn block_order_names_round_trip() {
        for o in [
            BlockOrder::dtilde(),
            BlockOrder::reverse_dtilde(),
            BlockOrder { sizes: PartOrder::Ascending, ties: MinRule::SmallerMinFirst },
        ] {
            assert_eq!(BlockOrder::parse(&o.name()).unwrap(), o);
        }
    }

    // Trichotomy and transitivity over the blocks of every set composition
    // of n <= 5, for each built-in block order.
    #[test]
    fn block_orders_are_strict_total_orders() {
        for order in [BlockOrder::dtilde(), BlockOrder::reverse_dtilde()] {
            for n in 1..=5 {
                for phi in SetComposition::all_of(n) {
                    let bs = phi.blocks();
                    for a in bs {
                        assert_eq!(order.compare(a, a), Ordering::Equal);
                        for b in bs {
                            if a == b {
                                continue;
                            }
                            assert_eq!(order.compare(a, b), order.compare(b, a).reverse());
                            assert_ne!(order.compare(a, b), Ordering::Equal);
                            for c in bs {
                                if order.greater(a, b) && order.greater(b, c) {
                                    assert!(order.greater(a, c));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
