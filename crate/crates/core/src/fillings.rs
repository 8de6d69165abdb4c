//! Matrix fillings with one occupied cell per row.
//!
//! Fillings are stored sparsely as one `(value, column)` pair per row.
//! Columns are 1-based. Two fillings are equal iff their row sequences are.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinat::{BlockOrder, Composition, Multiset, PartOrder, Partition, SetComposition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FillCell {
    pub value: usize,
    pub col: usize,
}

/// A filling whose entries are positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntFilling {
    pub rows: Vec<FillCell>,
}

impl IntFilling {
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        IntFilling { rows: pairs.iter().map(|&(value, col)| FillCell { value, col }).collect() }
    }

    fn from_columns(values: &[usize], cols: &[usize]) -> Self {
        IntFilling { rows: values.iter().zip(cols).map(|(&value, &col)| FillCell { value, col }).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row_reading(&self) -> Composition {
        Composition::new(self.rows.iter().map(|c| c.value).collect()).expect("positive entries")
    }

    /// Per-column sums, left to right, skipping empty columns.
    pub fn column_reading(&self) -> Composition {
        let mut sums: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &self.rows {
            *sums.entry(c.col).or_default() += c.value;
        }
        Composition::new(sums.into_values().collect()).expect("positive entries")
    }

    /// Column entries top to bottom, one vector per occupied column.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in &self.rows {
            cols.entry(c.col).or_default().push(c.value);
        }
        cols.into_values().collect()
    }

    /// Stacks the given columns: each column's entries become consecutive
    /// rows, and column `i` of the list becomes column `i + 1`.
    pub fn from_column_list(columns: &[Vec<usize>]) -> Self {
        IntFilling {
            rows: columns
                .iter()
                .enumerate()
                .flat_map(|(i, col)| col.iter().map(move |&value| FillCell { value, col: i + 1 }))
                .collect(),
        }
    }

    fn occupied_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.rows.iter().map(|c| c.col).collect();
        cols.sort_unstable();
        cols.dedup();
        cols
    }

    /// Every cut between occupied columns, including the two outer cuts.
    /// Empty rows are dropped and each side's columns are renumbered from 1.
    pub fn deconcatenations(&self) -> Vec<(IntFilling, IntFilling)> {
        let cols = self.occupied_columns();
        let rank = |c: usize| cols.binary_search(&c).expect("occupied") + 1;
        (0..=cols.len())
            .map(|cut| {
                let mut left = IntFilling::default();
                let mut right = IntFilling::default();
                for cell in &self.rows {
                    let r = rank(cell.col);
                    if r <= cut {
                        left.rows.push(FillCell { value: cell.value, col: r });
                    } else {
                        right.rows.push(FillCell { value: cell.value, col: r - cut });
                    }
                }
                (left, right)
            })
            .collect()
    }

    /// Places `other` below and to the right of `self`.
    pub fn stack(&self, other: &IntFilling) -> IntFilling {
        let shift = self.occupied_columns().len();
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|c| FillCell { value: c.value, col: c.col + shift }));
        IntFilling { rows }
    }

    /// ASCII grid with row labels, dots for empty cells and a column-sum footer.
    pub fn render(&self) -> String {
        let cells: Vec<(usize, String)> = self.rows.iter().map(|c| (c.col, c.value.to_string())).collect();
        let labels: Vec<String> = self.rows.iter().map(|c| c.value.to_string()).collect();
        let footer: Vec<String> = self.column_reading().parts().iter().map(|x| x.to_string()).collect();
        render_grid(&labels, &cells, &footer)
    }
}

/// A filling whose entries are disjoint integer sets (sorted ascending).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetFilling {
    pub rows: Vec<SetCell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetCell {
    pub block: Vec<usize>,
    pub col: usize,
}

impl SetFilling {
    pub fn row_reading(&self) -> SetComposition {
        SetComposition::new(self.rows.iter().map(|c| c.block.clone()).collect()).expect("disjoint blocks")
    }

    /// Per-column unions, left to right.
    pub fn column_reading(&self) -> SetComposition {
        let mut cols: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in &self.rows {
            cols.entry(c.col).or_default().extend_from_slice(&c.block);
        }
        SetComposition::new(cols.into_values().collect()).expect("disjoint blocks")
    }

    pub fn render(&self) -> String {
        let show = |b: &[usize]| SetComposition::new(vec![b.to_vec()]).expect("valid").compact();
        let cells: Vec<(usize, String)> = self.rows.iter().map(|c| (c.col, show(&c.block))).collect();
        let labels: Vec<String> = self.rows.iter().map(|c| show(&c.block)).collect();
        let footer: Vec<String> = self.column_reading().blocks().iter().map(|b| show(b)).collect();
        render_grid(&labels, &cells, &footer)
    }
}

fn render_grid(labels: &[String], cells: &[(usize, String)], footer: &[String]) -> String {
    let ncols = cells.iter().map(|c| c.0).max().unwrap_or(0);
    let width =
        cells.iter().map(|c| c.1.chars().count()).chain(footer.iter().map(|f| f.chars().count())).max().unwrap_or(1);
    let lw = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (label, (col, text)) in labels.iter().zip(cells) {
        let row: Vec<String> = (1..=ncols)
            .map(|c| if c == *col { format!("{text:>width$}") } else { format!("{:>width$}", ".") })
            .collect();
        out.push_str(&format!("{label:>lw$} | {}\n", row.join(" ")));
    }
    let body = ncols * (width + 1);
    out.push_str(&format!("{}-+{}\n", "-".repeat(lw), "-".repeat(body)));
    let foot: Vec<String> = footer.iter().map(|f| format!("{f:>width$}")).collect();
    out.push_str(&format!("{} | {}\n", " ".repeat(lw), foot.join(" ")));
    out
}

/// Fillings with row reading `lambda` whose column reading is a partition.
///
/// Occupied columns always form an initial segment `1..=c`, so fillings that
/// differ only by empty columns are not counted twice.
pub fn enumerate_a(lambda: &Partition) -> Vec<IntFilling> {
    fn go(values: &[usize], ncols: usize, cols: &mut Vec<usize>, sums: &mut [usize], out: &mut Vec<IntFilling>) {
        let i = cols.len();
        let unused = sums.iter().filter(|&&s| s == 0).count();
        if unused > values.len() - i {
            return;
        }
        if i == values.len() {
            if sums.windows(2).all(|w| w[0] >= w[1]) {
                out.push(IntFilling::from_columns(values, cols));
            }
            return;
        }
        for c in 0..ncols {
            sums[c] += values[i];
            cols.push(c + 1);
            go(values, ncols, cols, sums, out);
            cols.pop();
            sums[c] -= values[i];
        }
    }
    let values = lambda.parts();
    let mut out = Vec::new();
    if values.is_empty() {
        out.push(IntFilling::default());
        return out;
    }
    for ncols in 1..=values.len() {
        go(values, ncols, &mut Vec::new(), &mut vec![0; ncols], &mut out);
    }
    out.sort();
    out
}

/// Column choices for a diagonal filling: row `i+1` may share row `i`'s
/// column when `same(i)`, otherwise it moves one column right.
fn diagonal_columns(len: usize, same: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut partial = vec![vec![1usize]];
    for i in 0..len - 1 {
        let allow = same(i);
        let mut next = Vec::with_capacity(partial.len() * 2);
        for cols in partial {
            let last = *cols.last().expect("nonempty");
            if allow {
                let mut stay = cols.clone();
                stay.push(last);
                next.push(stay);
            }
            let mut step = cols;
            step.push(last + 1);
            next.push(step);
        }
        partial = next;
    }
    partial
}

/// Strict diagonal fillings of `alpha` under `order`.
pub fn enumerate_sd(alpha: &Composition, order: &PartOrder) -> Vec<IntFilling> {
    let a = alpha.parts();
    let mut out: Vec<IntFilling> = diagonal_columns(a.len(), |i| order.dominates(a[i], a[i + 1]))
        .into_iter()
        .map(|cols| IntFilling::from_columns(a, &cols))
        .collect();
    out.sort();
    out
}

/// Labelled diagonal descending fillings of `phi` under `order`.
pub fn enumerate_ldd(phi: &SetComposition, order: &BlockOrder) -> Vec<SetFilling> {
    let b = phi.blocks();
    let mut out: Vec<SetFilling> = diagonal_columns(b.len(), |i| order.greater(&b[i], &b[i + 1]))
        .into_iter()
        .map(|cols| SetFilling {
            rows: b.iter().zip(cols).map(|(block, col)| SetCell { block: block.clone(), col }).collect(),
        })
        .collect();
    out.sort();
    out
}

/// For each entry value, a permutation of the (1-based) rows carrying it.
///
/// `targets[v][k]` is the row receiving the `k`-th row (top to bottom) that
/// holds `v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RowPermutation {
    pub targets: BTreeMap<usize, Vec<usize>>,
}

impl RowPermutation {
    pub fn is_identity(&self, filling: &IntFilling) -> bool {
        self.targets.iter().all(|(v, t)| rows_with_value(filling, *v) == *t)
    }

    pub fn apply(&self, filling: &IntFilling) -> IntFilling {
        let mut rows = filling.rows.clone();
        for (&v, targets) in &self.targets {
            for (src, &dst) in rows_with_value(filling, v).iter().zip(targets) {
                rows[dst - 1] = filling.rows[src - 1].clone();
            }
        }
        IntFilling { rows }
    }
}

fn rows_with_value(filling: &IntFilling, v: usize) -> Vec<usize> {
    filling.rows.iter().enumerate().filter(|(_, c)| c.value == v).map(|(i, _)| i + 1).collect()
}

/// Admissible row permutations of `filling`.
///
/// For each value, rows carrying it are permuted among themselves; entries
/// of that value sharing a column must keep their top-to-bottom order. The
/// admissible tuples are in bijection with the distinct fillings `σ(F)`.
pub fn enumerate_row_perms(filling: &IntFilling) -> Vec<RowPermutation> {
    let mut values: Vec<usize> = filling.rows.iter().map(|c| c.value).collect();
    values.sort_unstable();
    values.dedup();

    let mut per_value: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    for v in values {
        let rows = rows_with_value(filling, v);
        let cols: Vec<usize> = rows.iter().map(|&r| filling.rows[r - 1].col).collect();
        let mut admissible = Vec::new();
        let mut idx: Vec<usize> = (0..rows.len()).collect();
        loop {
            // idx[k]: index (into rows) of the target of the k-th row
            let keeps_order =
                (0..rows.len()).all(|j| (j + 1..rows.len()).all(|k| cols[j] != cols[k] || idx[j] < idx[k]));
            if keeps_order {
                admissible.push(idx.iter().map(|&t| rows[t]).collect());
            }
            if !crate::combinat::next_permutation(&mut idx) {
                break;
            }
        }
        per_value.push((v, admissible));
    }

    let mut out = vec![RowPermutation { targets: BTreeMap::new() }];
    for (v, options) in per_value {
        out = out
            .into_iter()
            .flat_map(|p| {
                options.iter().map(move |t| {
                    let mut q = p.clone();
                    q.targets.insert(v, t.clone());
                    q
                })
            })
            .collect();
    }
    out
}

/// Number of admissible row permutations:
/// `prod_v (#rows with v)! / prod_{v, col} (#rows with v in col)!`.
pub fn count_row_perms(filling: &IntFilling) -> num::BigUint {
    let mut by_value: BTreeMap<usize, usize> = BTreeMap::new();
    let mut by_cell: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in &filling.rows {
        *by_value.entry(c.value).or_default() += 1;
        *by_cell.entry((c.value, c.col)).or_default() += 1;
    }
    let fact = |n: usize| (1..=n).fold(num::BigUint::from(1u32), |acc, k| acc * k);
    let num = by_value.values().fold(num::BigUint::from(1u32), |acc, &m| acc * fact(m));
    let den = by_cell.values().fold(num::BigUint::from(1u32), |acc, &m| acc * fact(m));
    num / den
}

fn merge_descending(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut merged: Vec<usize> = a.iter().chain(b).copied().collect();
    // stable: ties keep entries of `a` above entries of `b`
    merged.sort_by(|x, y| y.cmp(x));
    merged
}

/// Quasishuffle of fillings by columns; a merged column lists the entries of
/// both heads in descending order.
pub fn quasishuffle_fillings(f: &IntFilling, g: &IntFilling) -> Multiset<IntFilling> {
    let fc = f.columns();
    let gc = g.columns();
    let mut out = Multiset::new();
    for cols in
        crate::combinat::overlapping_interleavings(&fc, &gc, &|x: &Vec<usize>, y: &Vec<usize>| merge_descending(x, y))
    {
        *out.entry(IntFilling::from_column_list(&cols)).or_insert(0) += 1;
    }
    out
}
