use num::{One, Zero};
use proptest::prelude::*;

use qpsum_core::combinat::{shuffle, BlockOrder, Composition, PartOrder, Permutation, SetComposition};
use qpsum_core::linear::{Basis, Coeff, NcBasis, NcElement, QSymElement};
use qpsum_core::mn::{count_sdr, ribbon_of};
use qpsum_core::{ncqsym, qsym};

fn composition(max_weight: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=max_weight.max(1), 0..=max_weight)
        .prop_filter("weight bound", move |v| v.iter().sum::<usize>() <= max_weight)
        .prop_map(|v| Composition::new(v).unwrap())
}

fn set_composition(max_weight: usize) -> impl Strategy<Value = SetComposition> {
    (0..=max_weight).prop_flat_map(|n| {
        let all = SetComposition::all_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn order() -> impl Strategy<Value = PartOrder> {
    prop_oneof![Just(PartOrder::Descending), Just(PartOrder::Ascending)]
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(a in composition(8)) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.conjugate().weight(), a.weight());
        if a.weight() > 0 {
            prop_assert_eq!(a.conjugate().len() + a.len(), a.weight() + 1);
        }
    }

    #[test]
    fn descent_sets_round_trip(a in composition(8)) {
        prop_assert_eq!(Composition::from_descent_set(&a.descent_set(), a.weight()).unwrap(), a);
    }

    #[test]
    fn mobius_is_a_sign_on_coarsenings(a in composition(6)) {
        for b in a.coarsenings() {
            prop_assert!(a.refines(&b));
            let m = a.mobius(&b).unwrap();
            prop_assert_eq!(m, if (a.len() - b.len()) % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn standardize_undoes_shift(phi in set_composition(5), k in 0usize..4) {
        prop_assert_eq!(phi.shift_up(k).standardize(), phi.clone());
        prop_assert_eq!(phi.standardize(), phi);
    }

    #[test]
    fn shuffle_counts_are_binomial(a in composition(4), b in composition(4)) {
        let total: usize = shuffle(&a, &b).values().sum();
        prop_assert_eq!(total, binomial(a.len() + b.len(), a.len()));
    }

    #[test]
    fn m_f_and_m_p_round_trip(a in composition(5), o in order()) {
        let m = QSymElement::basis_element(Basis::M, a.clone());
        for target in [Basis::F, Basis::P(o.clone()), Basis::Ptilde(o)] {
            let there = qsym::convert(&m, &target).unwrap();
            prop_assert_eq!(qsym::convert(&there, &Basis::M).unwrap(), m.clone());
        }
    }

    #[test]
    fn products_commute_and_agree_across_bases(a in composition(3), b in composition(3), o in order()) {
        let basis = Basis::Ptilde(o);
        let x = QSymElement::basis_element(basis.clone(), a);
        let y = QSymElement::basis_element(basis, b);
        let xy = qsym::product(&x, &y).unwrap();
        prop_assert_eq!(&xy, &qsym::product(&y, &x).unwrap());
        let in_m = qsym::product(&qsym::to_m(&x), &qsym::to_m(&y)).unwrap();
        prop_assert_eq!(qsym::to_m(&xy), in_m);
    }

    #[test]
    fn coproduct_has_counit(a in composition(5), o in order()) {
        for basis in [Basis::M, Basis::F, Basis::P(o.clone()), Basis::Ptilde(o.clone())] {
            let x = QSymElement::basis_element(basis.clone(), a.clone());
            let t = qsym::coproduct(&x).unwrap();
            let mut left = QSymElement::zero(basis.clone());
            let mut right = QSymElement::zero(basis);
            for ((l, r), c) in t.terms() {
                if l.is_empty() {
                    left.add_term(r.clone(), c.clone());
                }
                if r.is_empty() {
                    right.add_term(l.clone(), c.clone());
                }
            }
            prop_assert_eq!(&left, &x);
            prop_assert_eq!(&right, &x);
        }
    }

    #[test]
    fn projection_is_multiplicative(phi in set_composition(3), psi in set_composition(2)) {
        let basis = NcBasis::P(BlockOrder::dtilde());
        let x = NcElement::basis_element(basis.clone(), phi);
        let y = NcElement::basis_element(basis, psi);
        let lhs = ncqsym::project_rho(&ncqsym::product_nc(&x, &y).unwrap());
        let rhs = qsym::product(&ncqsym::project_rho(&x), &ncqsym::project_rho(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nc_monomial_conversion_round_trips(phi in set_composition(4)) {
        let m = NcElement::basis_element(NcBasis::M, phi);
        for o in [BlockOrder::dtilde(), BlockOrder::reverse_dtilde()] {
            let p = ncqsym::convert_nc(&m, &NcBasis::P(o));
            prop_assert_eq!(ncqsym::to_m_nc(&p), m.clone());
        }
    }

    #[test]
    fn ribbons_of_compositions_are_valid(a in composition(7)) {
        let r = ribbon_of(&a);
        prop_assert!(r.is_valid());
        prop_assert_eq!(r.len(), a.weight());
        prop_assert!(count_sdr(&r) >= One::one());
    }

    #[test]
    fn fqsym_images_project_to_fundamentals(n in 0usize..=5, seed in any::<usize>()) {
        let all = Permutation::all_of(n);
        let tau = &all[seed % all.len()];
        let lhs = ncqsym::project_rho(&ncqsym::fqsym_image(tau));
        prop_assert_eq!(lhs, qsym::f_to_m(&tau.descent_composition()));
    }

    #[test]
    fn power_sum_diagonal_is_positive(a in composition(6), o in order()) {
        let p = qsym::p_to_m(&a, &o);
        prop_assert!(p.coeff(&a) >= Coeff::one());
        prop_assert!(p.terms().keys().all(|b| b.len() <= a.len()));
        prop_assert!(!p.coeff(&a).is_zero());
    }
}
