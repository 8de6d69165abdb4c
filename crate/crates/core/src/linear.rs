//! Sparse formal linear combinations with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::combinat::{BlockOrder, Composition, PartOrder, Partition, SetComposition};

pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` or `p` for integers.
pub fn coeff_to_string(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_coeff(s: &str) -> Option<Coeff> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Bases of QSym.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    F,
    P(PartOrder),
    Ptilde(PartOrder),
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::P(_) => "P",
            Basis::Ptilde(_) => "Ptilde",
        }
    }

    pub fn order(&self) -> Option<&PartOrder> {
        match self {
            Basis::P(o) | Basis::Ptilde(o) => Some(o),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order() {
            Some(o) if *o != PartOrder::Descending => write!(f, "{}[{o}]", self.tag()),
            _ => f.write_str(self.tag()),
        }
    }
}

/// Bases of Sym, indexed by partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    /// Powersums `p_λ`.
    P,
    /// Monomials `m_λ`.
    M,
}

impl fmt::Display for SymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymBasis::P => "p",
            SymBasis::M => "m",
        })
    }
}

/// Bases of NCQSym.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NcBasis {
    M,
    P(BlockOrder),
}

impl NcBasis {
    pub fn tag(&self) -> &'static str {
        match self {
            NcBasis::M => "M_nc",
            NcBasis::P(_) => "P_nc",
        }
    }

    pub fn order(&self) -> Option<&BlockOrder> {
        match self {
            NcBasis::P(o) => Some(o),
            NcBasis::M => None,
        }
    }
}

impl fmt::Display for NcBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NcBasis::P(o) if *o != BlockOrder::dtilde() => write!(f, "P_nc[{o}]"),
            _ => f.write_str(self.tag()),
        }
    }
}

/// Indices print inside basis symbols, e.g. `M(2,1)` or `P(34|15|2)`.
pub trait Index: Clone + Ord + fmt::Debug {
    fn label(&self) -> String;
    fn weight(&self) -> usize;
}

impl Index for Composition {
    fn label(&self) -> String {
        self.to_string()
    }

    fn weight(&self) -> usize {
        Composition::weight(self)
    }
}

impl Index for Partition {
    fn label(&self) -> String {
        self.to_string()
    }

    fn weight(&self) -> usize {
        Partition::weight(self)
    }
}

impl Index for SetComposition {
    fn label(&self) -> String {
        format!("({})", self.compact())
    }

    fn weight(&self) -> usize {
        SetComposition::weight(self)
    }
}

/// A sparse linear combination of basis elements. Zero coefficients are
/// never stored; iteration follows the index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum<I, B> {
    basis: B,
    terms: BTreeMap<I, Coeff>,
}

pub type QSymElement = FormalSum<Composition, Basis>;
pub type SymElement = FormalSum<Partition, SymBasis>;
pub type NcElement = FormalSum<SetComposition, NcBasis>;

impl<I: Index, B: Clone + PartialEq> FormalSum<I, B> {
    pub fn zero(basis: B) -> Self {
        FormalSum { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: B, index: I) -> Self {
        Self::from_terms(basis, [(index, Coeff::one())])
    }

    pub fn from_terms(basis: B, terms: impl IntoIterator<Item = (I, Coeff)>) -> Self {
        let mut out = Self::zero(basis);
        for (i, c) in terms {
            out.add_term(i, c);
        }
        out
    }

    pub fn basis(&self) -> &B {
        &self.basis
    }

    pub fn add_term(&mut self, index: I, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(index.clone()).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    /// Adds `scale * other`, ignoring `other`'s basis tag.
    pub fn add_scaled(&mut self, other: &Self, scale: &Coeff) {
        for (i, c) in &other.terms {
            self.add_term(i.clone(), c * scale);
        }
    }

    pub fn coeff(&self, index: &I) -> Coeff {
        self.terms.get(index).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> &BTreeMap<I, Coeff> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&I, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Coeff) -> Self {
        Self::from_terms(self.basis.clone(), self.terms.iter().map(|(i, c)| (i.clone(), c * s)))
    }

    pub fn with_basis<B2: Clone + PartialEq>(self, basis: B2) -> FormalSum<I, B2> {
        FormalSum { basis, terms: self.terms }
    }

    /// The common weight of every term, or `None` if weights differ.
    /// The zero element reports `Some(0)`.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut ws = self.terms.keys().map(Index::weight);
        match ws.next() {
            None => Some(0),
            Some(w) => ws.all(|x| x == w).then_some(w),
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<J: Index, B2: Clone + PartialEq>(
        &self,
        basis: B2,
        mut image: impl FnMut(&I) -> FormalSum<J, B2>,
    ) -> FormalSum<J, B2> {
        let mut out = FormalSum::zero(basis);
        for (i, c) in &self.terms {
            out.add_scaled(&image(i), c);
        }
        out
    }

    pub fn try_map_linear<J: Index, B2: Clone + PartialEq, E>(
        &self,
        basis: B2,
        mut image: impl FnMut(&I) -> Result<FormalSum<J, B2>, E>,
    ) -> Result<FormalSum<J, B2>, E> {
        let mut out = FormalSum::zero(basis);
        for (i, c) in &self.terms {
            out.add_scaled(&image(i)?, c);
        }
        Ok(out)
    }
}

impl<I: Index, B: Clone + PartialEq> std::ops::Add for &FormalSum<I, B> {
    type Output = FormalSum<I, B>;

    fn add(self, rhs: Self) -> FormalSum<I, B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coeff::one());
        out
    }
}

impl<I: Index, B: Clone + PartialEq> std::ops::Sub for &FormalSum<I, B> {
    type Output = FormalSum<I, B>;

    fn sub(self, rhs: Self) -> FormalSum<I, B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Coeff::one());
        out
    }
}

fn write_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, &'a Coeff)>) -> fmt::Result {
    let mut first = true;
    for (sym, c) in terms {
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        if mag.is_one() {
            f.write_str(&sym)?;
        } else {
            write!(f, "{}*{sym}", coeff_to_string(&mag))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<I: Index, B: fmt::Display> fmt::Display for FormalSum<I, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.basis.to_string();
        write_terms(f, self.terms.iter().map(|(i, c)| (format!("{basis}{}", i.label()), c)))
    }
}

/// A sparse element of a tensor square `A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSum<I, B> {
    basis: B,
    terms: BTreeMap<(I, I), Coeff>,
}

pub type QSymTensor = TensorSum<Composition, Basis>;
pub type NcTensor = TensorSum<SetComposition, NcBasis>;

impl<I: Index, B: Clone + PartialEq> TensorSum<I, B> {
    pub fn zero(basis: B) -> Self {
        TensorSum { basis, terms: BTreeMap::new() }
    }

    pub fn basis(&self) -> &B {
        &self.basis
    }

    pub fn add_term(&mut self, left: I, right: I, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key.clone()).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, left: &I, right: &I) -> Coeff {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> &BTreeMap<(I, I), Coeff> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ c (a ⊗ b)` for the given pair of elements.
    pub fn add_product(&mut self, a: &FormalSum<I, B>, b: &FormalSum<I, B>, scale: &Coeff) {
        for (i, ci) in a.iter() {
            for (j, cj) in b.iter() {
                self.add_term(i.clone(), j.clone(), ci * cj * scale);
            }
        }
    }

    /// Applies `left ⊗ right` linear maps termwise.
    pub fn map_linear<J: Index, B2: Clone + PartialEq>(
        &self,
        basis: B2,
        mut left: impl FnMut(&I) -> FormalSum<J, B2>,
        mut right: impl FnMut(&I) -> FormalSum<J, B2>,
    ) -> TensorSum<J, B2> {
        let mut out = TensorSum::zero(basis);
        for ((i, j), c) in &self.terms {
            out.add_product(&left(i), &right(j), c);
        }
        out
    }
}

impl<I: Index, B: fmt::Display> fmt::Display for TensorSum<I, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.basis.to_string();
        write_terms(f, self.terms.iter().map(|((i, j), c)| (format!("{basis}{} ⊗ {basis}{}", i.label(), j.label()), c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::comp;

    #[test]
    fn zero_terms_are_dropped() {
        let mut x = QSymElement::zero(Basis::M);
        x.add_term(comp(&[1]), int(2));
        x.add_term(comp(&[1]), int(-2));
        assert!(x.is_zero());
        x.add_term(comp(&[2]), int(0));
        assert!(x.is_zero());
    }

    #[test]
    fn display_format() {
        let x = QSymElement::from_terms(
            Basis::F,
            [(comp(&[1, 4]), int(3)), (comp(&[1, 1, 3]), int(-3)), (comp(&[2]), ratio(1, 2))],
        );
        assert_eq!(x.to_string(), "1/2*F(2) + 3*F(1,4) - 3*F(1,1,3)");
        assert_eq!(QSymElement::zero(Basis::M).to_string(), "0");
    }

    #[test]
    fn coeff_strings() {
        assert_eq!(coeff_to_string(&ratio(-6, 4)), "-3/2");
        assert_eq!(parse_coeff("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_coeff("7").unwrap(), int(7));
        assert!(parse_coeff("1/0").is_none());
    }
}
