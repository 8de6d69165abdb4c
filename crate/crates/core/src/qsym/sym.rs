//! Symmetric functions inside QSym.

use num::One;

use crate::combinat::{PartOrder, Partition};
use crate::fillings::enumerate_a;
use crate::linear::{Basis, Coeff, QSymElement, SymBasis, SymElement};

/// `p_λ = Σ_{F ∈ A(λ)} m_col(F)`.
pub fn p_to_m(lambda: &Partition) -> SymElement {
    let mut out = SymElement::zero(SymBasis::M);
    for f in enumerate_a(lambda) {
        let col = f.column_reading().sort();
        out.add_term(col, Coeff::one());
    }
    out
}

/// `m_λ` as the sum of `M_α` over distinct rearrangements of `λ`.
pub fn m_to_qsym(lambda: &Partition) -> QSymElement {
    let rearr = lambda.as_composition().rearrangements();
    QSymElement::from_terms(Basis::M, rearr.into_iter().map(|a| (a, Coeff::one())))
}

/// `p_λ` as the sum of `P_α` over distinct rearrangements of `λ`.
pub fn p_to_qsym_p(lambda: &Partition, order: &PartOrder) -> QSymElement {
    let rearr = lambda.as_composition().rearrangements();
    QSymElement::from_terms(Basis::P(order.clone()), rearr.into_iter().map(|a| (a, Coeff::one())))
}

/// Any element of Sym, expanded in the QSym M basis.
pub fn to_qsym_m(x: &SymElement) -> QSymElement {
    match x.basis() {
        SymBasis::M => x.map_linear(Basis::M, m_to_qsym),
        SymBasis::P => x.map_linear(Basis::M, |l| p_to_m(l).map_linear(Basis::M, m_to_qsym)),
    }
}
