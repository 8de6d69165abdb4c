//! NCQSym in the M_Φ and P_Φ bases, and the projection to QSym.

use num::One;

use crate::combinat::{shifted_shuffle, BlockOrder, Composition, PartOrder, Permutation, SetComposition, SetPartition};
use crate::error::AlgebraError;
use crate::fillings::enumerate_ldd;
use crate::linear::{Basis, Coeff, NcBasis, NcElement, NcTensor, QSymElement};
use crate::qsym;

/// `P_Φ = Σ_{F ∈ LDD(Φ)} M_col(F)`.
pub fn p_to_m_nc(phi: &SetComposition, order: &BlockOrder) -> NcElement {
    let mut out = NcElement::zero(NcBasis::M);
    for f in enumerate_ldd(phi, order) {
        out.add_term(f.column_reading(), Coeff::one());
    }
    out
}

/// `M_Φ` in the P basis. `P_Ψ` is `M_Ψ` plus terms with fewer blocks, so
/// peeling off the longest remaining index terminates.
pub fn m_to_p_nc(phi: &SetComposition, order: &BlockOrder) -> NcElement {
    let mut out = NcElement::zero(NcBasis::P(order.clone()));
    let mut rest = NcElement::basis_element(NcBasis::M, phi.clone());
    while let Some((psi, c)) =
        rest.iter().max_by_key(|(k, _)| (k.len(), (*k).clone())).map(|(k, c)| (k.clone(), c.clone()))
    {
        out.add_term(psi.clone(), c.clone());
        rest.add_scaled(&p_to_m_nc(&psi, order), &-c);
    }
    out
}

/// `p_φ = Σ_{sort(Φ) = φ} P_Φ`.
pub fn p_to_p_nc(phi: &SetPartition, order: &BlockOrder) -> NcElement {
    NcElement::from_terms(NcBasis::P(order.clone()), phi.orderings().into_iter().map(|p| (p, Coeff::one())))
}

pub fn to_m_nc(x: &NcElement) -> NcElement {
    match x.basis() {
        NcBasis::M => x.clone(),
        NcBasis::P(o) => x.map_linear(NcBasis::M, |phi| p_to_m_nc(phi, o)),
    }
}

pub fn convert_nc(x: &NcElement, target: &NcBasis) -> NcElement {
    if x.basis() == target {
        return x.clone();
    }
    let m = to_m_nc(x);
    match target {
        NcBasis::M => m,
        NcBasis::P(o) => m.map_linear(target.clone(), |phi| m_to_p_nc(phi, o)),
    }
}

fn require_p(x: &NcElement) -> Result<&BlockOrder, AlgebraError> {
    match x.basis() {
        NcBasis::P(o) => Ok(o),
        other => Err(AlgebraError::Unsupported(other.to_string())),
    }
}

/// `P_Φ P_Ψ = Σ_{Γ ∈ Φ ⧢ (Ψ↑n)} P_Γ` for `Φ` of weight `n`.
pub fn product_nc(x: &NcElement, y: &NcElement) -> Result<NcElement, AlgebraError> {
    require_p(x)?;
    require_p(y)?;
    if x.basis() != y.basis() {
        return Err(AlgebraError::BasisMismatch { left: x.basis().to_string(), right: y.basis().to_string() });
    }
    x.homogeneous_weight().ok_or(AlgebraError::NotHomogeneous)?;
    let mut out = NcElement::zero(x.basis().clone());
    for (phi, cx) in x.iter() {
        for (psi, cy) in y.iter() {
            let c = cx * cy;
            for (g, mult) in shifted_shuffle(phi, psi) {
                out.add_term(g, &c * Coeff::from_integer(mult.into()));
            }
        }
    }
    Ok(out)
}

/// `Δ(P_Φ) = Σ_i P_{st(B_1|…|B_i)} ⊗ P_{st(B_{i+1}|…|B_k)}`.
pub fn coproduct_nc(x: &NcElement) -> Result<NcTensor, AlgebraError> {
    require_p(x)?;
    let mut out = NcTensor::zero(x.basis().clone());
    for (phi, c) in x.iter() {
        for (l, r) in phi.deconcatenations() {
            out.add_term(l.standardize(), r.standardize(), c.clone());
        }
    }
    Ok(out)
}

pub fn counit_nc(x: &NcElement) -> Coeff {
    x.coeff(&SetComposition::empty())
}

/// `ρ(M_Φ) = M_ρ(Φ)`, expanding P first.
pub fn project_rho(x: &NcElement) -> QSymElement {
    to_m_nc(x).map_linear(Basis::M, |phi| QSymElement::basis_element(Basis::M, phi.rho()))
}

/// `Σ_σ ρ(P_σ(Φ))` over the orbit of `Φ` under permuting equal-size blocks.
pub fn p_from_orbit(phi: &SetComposition, order: &BlockOrder) -> QSymElement {
    let mut out = QSymElement::zero(Basis::M);
    for psi in phi.block_symmetry_orbit() {
        out.add_scaled(&project_rho(&NcElement::basis_element(NcBasis::P(order.clone()), psi)), &Coeff::one());
    }
    out
}

/// `P_α` through the canonical set composition with block sizes `α`.
pub fn p_via_orbit(alpha: &Composition, order: &BlockOrder) -> QSymElement {
    p_from_orbit(&SetComposition::canonical_for(alpha), order)
}

/// `𝓕_τ = P_{τ^{-1}(1|2|…|n)}`.
pub fn fqsym_image(tau: &Permutation) -> NcElement {
    NcElement::basis_element(NcBasis::P(BlockOrder::dtilde()), tau.inverse_singleton_image())
}

/// `ρ(P_Φ) = Σ_{ρ_I(Φ) ≤ α ≤ ρ_C(Φ)} μ(α, ρ_C(Φ)) F_α`.
pub fn rho_p_to_f(phi: &SetComposition, order: &BlockOrder) -> QSymElement {
    let top = phi.rho_c(order);
    let bottom = phi.rho_i(order);
    let interval = bottom.interval(&top).expect("ρ_I(Φ) refines ρ_C(Φ)");
    QSymElement::from_terms(
        Basis::F,
        interval.into_iter().map(|a| {
            let mu = a.mobius(&top).expect("interval members refine the top");
            (a, Coeff::from_integer(mu.into()))
        }),
    )
}

/// The same expansion computed by inverting `ρ(P_Φ)` from M to F.
pub fn rho_p_to_f_composite(phi: &SetComposition, order: &BlockOrder) -> QSymElement {
    let m = project_rho(&NcElement::basis_element(NcBasis::P(order.clone()), phi.clone()));
    m.map_linear(Basis::F, qsym::m_to_f)
}

/// Whether `B ⊳ A` implies `|B| ≻ |A|` for all disjoint nonempty blocks of
/// different sizes inside `{1..n}`.
pub fn compatibility_check(block: &BlockOrder, part: &PartOrder, n: usize) -> bool {
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut c = code;
        for x in 1..=n {
            match c % 3 {
                1 => a.push(x),
                2 => b.push(x),
                _ => {}
            }
            c /= 3;
        }
        if a.is_empty() || b.is_empty() || a.len() == b.len() {
            continue;
        }
        if block.greater(&b, &a) && !part.dominates(b.len(), a.len()) {
            return false;
        }
    }
    true
}
