//! QSym in the bases M, F, P and scaled P̃, routed through M.

mod matrix;
pub mod sym;

use num::{BigInt, BigUint, One};

use crate::combinat::{quasishuffle, shuffle, Composition, PartOrder};
use crate::error::AlgebraError;
use crate::fillings::{count_row_perms, enumerate_sd};
use crate::linear::{Basis, Coeff, QSymElement, QSymTensor};

pub use matrix::{cached_weights, m_to_p};

pub(crate) fn big(n: BigUint) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

pub fn m(alpha: &Composition) -> QSymElement {
    QSymElement::basis_element(Basis::M, alpha.clone())
}

/// `P_α = Σ_{F ∈ SD(α)} |S_F| M_col(F)`.
pub fn p_to_m(alpha: &Composition, order: &PartOrder) -> QSymElement {
    let mut out = QSymElement::zero(Basis::M);
    for f in enumerate_sd(alpha, order) {
        out.add_term(f.column_reading(), big(count_row_perms(&f)));
    }
    out
}

/// `P̃_α = P_α / z_α`.
pub fn ptilde_to_m(alpha: &Composition, order: &PartOrder) -> QSymElement {
    let z = big(alpha.z_factor());
    p_to_m(alpha, order).scale(&z.recip())
}

/// `F_α = Σ_{β ≤ α} M_β`.
pub fn f_to_m(alpha: &Composition) -> QSymElement {
    QSymElement::from_terms(Basis::M, alpha.refinements().into_iter().map(|b| (b, Coeff::one())))
}

/// `M_α = Σ_{β ≤ α} (-1)^{ℓ(β)-ℓ(α)} F_β`.
pub fn m_to_f(alpha: &Composition) -> QSymElement {
    let base = alpha.len();
    QSymElement::from_terms(
        Basis::F,
        alpha.refinements().into_iter().map(|b| {
            let sign = if (b.len() - base).is_multiple_of(2) { 1 } else { -1 };
            (b, Coeff::from_integer(sign.into()))
        }),
    )
}

/// `M_α` in the P̃ basis: `P_β = z_β P̃_β`.
pub fn m_to_ptilde(alpha: &Composition, order: &PartOrder) -> Result<QSymElement, AlgebraError> {
    let p = m_to_p(alpha, order)?;
    Ok(p.map_linear(Basis::Ptilde(order.clone()), |b| {
        QSymElement::from_terms(Basis::Ptilde(order.clone()), [(b.clone(), big(b.z_factor()))])
    }))
}

/// The image of a single basis element in M.
pub fn basis_to_m(basis: &Basis, index: &Composition) -> QSymElement {
    match basis {
        Basis::M => m(index),
        Basis::F => f_to_m(index),
        Basis::P(o) => p_to_m(index, o),
        Basis::Ptilde(o) => ptilde_to_m(index, o),
    }
}

/// The M-expansion of a single M basis element in `target`.
pub fn m_to_basis(target: &Basis, index: &Composition) -> Result<QSymElement, AlgebraError> {
    match target {
        Basis::M => Ok(m(index)),
        Basis::F => Ok(m_to_f(index)),
        Basis::P(o) => m_to_p(index, o),
        Basis::Ptilde(o) => m_to_ptilde(index, o),
    }
}

pub fn to_m(x: &QSymElement) -> QSymElement {
    if *x.basis() == Basis::M {
        return x.clone();
    }
    x.map_linear(Basis::M, |i| basis_to_m(x.basis(), i))
}

pub fn from_m(x: &QSymElement, target: &Basis) -> Result<QSymElement, AlgebraError> {
    if *x.basis() != Basis::M {
        return Err(mismatch(x.basis(), &Basis::M));
    }
    if *target == Basis::M {
        return Ok(x.clone());
    }
    x.try_map_linear(target.clone(), |i| m_to_basis(target, i))
}

pub fn convert(x: &QSymElement, target: &Basis) -> Result<QSymElement, AlgebraError> {
    if x.basis() == target {
        return Ok(x.clone());
    }
    from_m(&to_m(x), target)
}

fn mismatch(left: &Basis, right: &Basis) -> AlgebraError {
    AlgebraError::BasisMismatch { left: left.to_string(), right: right.to_string() }
}

fn product_by(
    x: &QSymElement,
    y: &QSymElement,
    rule: impl Fn(&Composition, &Composition) -> crate::combinat::Multiset<Composition>,
) -> QSymElement {
    let mut out = QSymElement::zero(x.basis().clone());
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let c = ca * cb;
            for (g, mult) in rule(a, b) {
                out.add_term(g, &c * Coeff::from_integer(mult.into()));
            }
        }
    }
    out
}

/// Products: quasishuffle in M, shuffle in P̃, and through M otherwise.
pub fn product(x: &QSymElement, y: &QSymElement) -> Result<QSymElement, AlgebraError> {
    if x.basis() != y.basis() {
        return Err(mismatch(x.basis(), y.basis()));
    }
    match x.basis() {
        Basis::M => Ok(product_by(x, y, quasishuffle)),
        Basis::Ptilde(_) => Ok(product_by(x, y, shuffle)),
        other => {
            let prod = product_by(&to_m(x), &to_m(y), quasishuffle);
            from_m(&prod, other)
        }
    }
}

fn deconcatenate(x: &QSymElement) -> QSymTensor {
    let mut out = QSymTensor::zero(x.basis().clone());
    for (g, c) in x.iter() {
        let parts = g.parts();
        for k in 0..=parts.len() {
            let left = Composition::new(parts[..k].to_vec()).expect("positive parts");
            let right = Composition::new(parts[k..].to_vec()).expect("positive parts");
            out.add_term(left, right, c.clone());
        }
    }
    out
}

/// Coproducts: deconcatenation in M and P̃, and through M otherwise.
pub fn coproduct(x: &QSymElement) -> Result<QSymTensor, AlgebraError> {
    match x.basis() {
        Basis::M | Basis::Ptilde(_) => Ok(deconcatenate(x)),
        target => {
            let tm = deconcatenate(&to_m(x));
            let mut out = QSymTensor::zero(target.clone());
            for ((a, b), c) in tm.terms() {
                out.add_product(&m_to_basis(target, a)?, &m_to_basis(target, b)?, c);
            }
            Ok(out)
        }
    }
}

/// Every basis has the empty composition as its unit, so the counit reads
/// off that coefficient.
pub fn counit(x: &QSymElement) -> Coeff {
    x.coeff(&Composition::empty())
}

/// Expands every tensor factor into M.
pub fn tensor_to_m(t: &QSymTensor) -> QSymTensor {
    let basis = t.basis().clone();
    t.map_linear(Basis::M, |i| basis_to_m(&basis, i), |j| basis_to_m(&basis, j))
}
