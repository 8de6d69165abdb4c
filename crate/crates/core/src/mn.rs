//! Ribbons, standard descent ribbon fillings and the P → F expansion.

use std::collections::BTreeSet;

use num::{BigUint, One};
use serde::Serialize;

use crate::combinat::{Composition, PartOrder};
use crate::error::MnError;
use crate::linear::{Basis, Coeff, QSymElement};
use crate::qsym;

/// Cells `(row, col)` in reading order: top row first, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Ribbon {
    cells: Vec<(usize, usize)>,
}

impl Ribbon {
    pub fn from_cells(cells: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> = cells.into_iter().collect();
        Ribbon { cells: set.into_iter().collect() }
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// No `2×2` square of cells.
    pub fn is_valid(&self) -> bool {
        let set: BTreeSet<_> = self.cells.iter().copied().collect();
        !self
            .cells
            .iter()
            .any(|&(r, c)| set.contains(&(r, c + 1)) && set.contains(&(r + 1, c)) && set.contains(&(r + 1, c + 1)))
    }

    /// Translated so the minimum row and column are both 1.
    pub fn normalized(&self) -> Ribbon {
        let r0 = self.cells.iter().map(|c| c.0).min().unwrap_or(1);
        let c0 = self.cells.iter().map(|c| c.1).min().unwrap_or(1);
        Ribbon { cells: self.cells.iter().map(|&(r, c)| (r + 1 - r0, c + 1 - c0)).collect() }
    }

    /// The bottom-most, then right-most cell.
    pub fn last(&self) -> Option<(usize, usize)> {
        self.cells.last().copied()
    }

    pub fn rows(&self) -> BTreeSet<usize> {
        self.cells.iter().map(|c| c.0).collect()
    }

    /// Young-diagram style picture, `[]` per cell.
    pub fn render(&self) -> String {
        self.render_with(|_| "[]".to_string())
    }

    /// Picture with one label per cell in reading order.
    pub fn render_filled(&self, labels: &[usize]) -> String {
        let w = labels.iter().map(|l| l.to_string().len()).max().unwrap_or(1);
        self.render_with(|i| format!("{:>w$}", labels[i]))
    }

    fn render_with(&self, label: impl Fn(usize) -> String) -> String {
        if self.cells.is_empty() {
            return "∅\n".to_string();
        }
        let width = label(0).len();
        let blank = " ".repeat(width);
        let mut out = String::new();
        let mut i = 0;
        for row in self.rows() {
            let mut line = Vec::new();
            let mut col = 1;
            while i < self.cells.len() && self.cells[i].0 == row {
                while col < self.cells[i].1 {
                    line.push(blank.clone());
                    col += 1;
                }
                line.push(label(i));
                col += 1;
                i += 1;
            }
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Rows of lengths `b_1, …, b_l` top to bottom, each row starting in the
/// column where the previous one ends.
pub fn ribbon_of(beta: &Composition) -> Ribbon {
    let mut cells = Vec::with_capacity(beta.weight());
    let mut col = 1;
    for (r, &b) in beta.parts().iter().enumerate() {
        cells.extend((0..b).map(|j| (r + 1, col + j)));
        col += b - 1;
    }
    Ribbon { cells }
}

/// The number of bijective fillings by `1..=|R|` increasing along rows and
/// decreasing down columns.
pub fn count_sdr(ribbon: &Ribbon) -> BigUint {
    let cells = ribbon.cells();
    let n = cells.len();
    // below[i]: cells that must receive smaller labels than cell i.
    let mut below = vec![0u32; n];
    for (i, &(r1, c1)) in cells.iter().enumerate() {
        for (j, &(r2, c2)) in cells.iter().enumerate() {
            if (r1 == r2 && c2 < c1) || (c1 == c2 && r2 > r1) {
                below[i] |= 1 << j;
            }
        }
    }
    let mut ways = vec![BigUint::from(0u32); 1 << n];
    ways[0] = BigUint::one();
    for mask in 0..(1usize << n) {
        if ways[mask] == BigUint::from(0u32) {
            continue;
        }
        for i in 0..n {
            if mask >> i & 1 == 0 && below[i] as usize & !mask == 0 {
                let add = ways[mask].clone();
                ways[mask | 1 << i] += add;
            }
        }
    }
    ways[(1 << n) - 1].clone()
}

/// Ribbons `(R_1, …, R_n)`, indexed by part value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RibbonTuple {
    ribbons: Vec<Ribbon>,
}

impl RibbonTuple {
    pub fn new(n: usize) -> Self {
        RibbonTuple { ribbons: vec![Ribbon::default(); n] }
    }

    /// `R_k`, empty for `k` beyond the tuple.
    pub fn get(&self, k: usize) -> &Ribbon {
        static EMPTY: Ribbon = Ribbon { cells: Vec::new() };
        self.ribbons.get(k.wrapping_sub(1)).unwrap_or(&EMPTY)
    }

    pub fn ribbons(&self) -> &[Ribbon] {
        &self.ribbons
    }

    pub fn count_sdr(&self) -> BigUint {
        self.ribbons.iter().map(count_sdr).product()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, r) in self.ribbons.iter().enumerate().filter(|(_, r)| !r.is_empty()) {
            out.push_str(&format!("R_{}:\n{}", k + 1, r.render()));
        }
        out
    }
}

/// The insertion/removal algorithm producing `D(β, α)` and `ht(β, α)`.
pub fn build_d(beta: &Composition, alpha: &Composition) -> Result<(RibbonTuple, usize), MnError> {
    if beta.weight() != alpha.weight() {
        return Err(MnError::WeightMismatch { beta: beta.clone(), alpha: alpha.clone() });
    }
    let suffixes: Vec<Ribbon> = (0..beta.len())
        .map(|j| ribbon_of(&Composition::new(beta.parts()[j..].to_vec()).expect("positive parts")))
        .collect();
    let mut running = ribbon_of(beta);
    let mut tuple = RibbonTuple::new(alpha.weight());
    let mut height = 0;
    let a = alpha.parts();
    for (i, &part) in a.iter().enumerate() {
        let target = &mut tuple.ribbons[part - 1];
        let cell = match target.last() {
            None => (1, 1),
            Some((r, c)) if i == 0 || a[i - 1] != part => (r + 1, c + 1),
            Some((r, c)) => {
                let shape = running.normalized();
                if suffixes.contains(&shape) {
                    (r + 1, c)
                } else {
                    (r, c + 1)
                }
            }
        };
        target.cells.push(cell);
        if running.len() < part {
            return Err(MnError::Exhausted { beta: beta.clone(), alpha: alpha.clone() });
        }
        let removed: Vec<(usize, usize)> = running.cells.drain(..part).collect();
        let rows: BTreeSet<usize> = removed.iter().map(|c| c.0).collect();
        height += rows.len() - 1;
    }
    Ok((tuple, height))
}

/// One interval term of the ribbon formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonTerm {
    pub beta: Composition,
    pub height: usize,
    pub sdr: BigUint,
    pub tuple: RibbonTuple,
}

impl RibbonTerm {
    pub fn coeff(&self) -> Coeff {
        let n = qsym::big(self.sdr.clone());
        if self.height.is_multiple_of(2) {
            n
        } else {
            -n
        }
    }
}

/// `(I(α), C(α))`.
pub fn interval_bounds(alpha: &Composition) -> (Composition, Composition) {
    (alpha.runs_i(), alpha.runs_c())
}

/// `Σ_{I(α) ≤ β ≤ C(α)} (-1)^{ht(β,α)} |SDR(β,α)| F_β` with per-β details.
pub fn ribbon_expansion(alpha: &Composition) -> Result<(QSymElement, Vec<RibbonTerm>), MnError> {
    let (bottom, top) = interval_bounds(alpha);
    let interval = bottom.interval(&top).map_err(crate::error::AlgebraError::from)?;
    let mut out = QSymElement::zero(Basis::F);
    let mut terms = Vec::with_capacity(interval.len());
    for beta in interval {
        let (tuple, height) = build_d(&beta, alpha)?;
        let term = RibbonTerm { beta: beta.clone(), height, sdr: tuple.count_sdr(), tuple };
        out.add_term(beta, term.coeff());
        terms.push(term);
    }
    Ok((out, terms))
}

/// `P_α` in F through M.
pub fn composite_p_to_f(alpha: &Composition) -> QSymElement {
    qsym::p_to_m(alpha, &PartOrder::Descending).map_linear(Basis::F, qsym::m_to_f)
}

/// `P_α` in F. The composite path is returned; the ribbon formula must
/// agree with it or the disagreement is reported.
pub fn p_to_f(alpha: &Composition) -> Result<QSymElement, MnError> {
    let composite = composite_p_to_f(alpha);
    let (ribbon, _) = ribbon_expansion(alpha)?;
    if ribbon != composite {
        return Err(MnError::Discrepancy {
            alpha: alpha.clone(),
            detail: format!("ribbon {ribbon} vs composite {composite}"),
        });
    }
    Ok(composite)
}
