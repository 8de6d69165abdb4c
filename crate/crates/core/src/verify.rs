//! Named verification suites. Each compares two independent computations
//! over every case up to a weight budget and records counterexamples.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::{BlockOrder, Composition, PartOrder, Partition, Permutation, SetComposition, SetPartition};
use crate::linear::{Basis, Coeff, FormalSum, Index, NcBasis, NcElement, NcTensor, QSymElement, QSymTensor};
use crate::{mn, ncqsym, oracle, qsym};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Refine,
    Shuffle,
    Coproduct,
    Toqsym,
    Toncsym,
    Pwrsmim,
    Mnrule,
    Fima,
    OracleRoundtrip,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Refine,
        Suite::Shuffle,
        Suite::Coproduct,
        Suite::Toqsym,
        Suite::Toncsym,
        Suite::Pwrsmim,
        Suite::Mnrule,
        Suite::Fima,
        Suite::OracleRoundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Refine => "refine",
            Suite::Shuffle => "shuffle",
            Suite::Coproduct => "coproduct",
            Suite::Toqsym => "toqsym",
            Suite::Toncsym => "toncsym",
            Suite::Pwrsmim => "pwrsmim",
            Suite::Mnrule => "mnrule",
            Suite::Fima => "fima",
            Suite::OracleRoundtrip => "oracle-roundtrip",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    pub fn run(self, max_weight: usize) -> SuiteReport {
        let mut r = SuiteReport::new(self, max_weight);
        match self {
            Suite::Refine => refine(&mut r, max_weight),
            Suite::Shuffle => shuffle(&mut r, max_weight),
            Suite::Coproduct => coproduct(&mut r, max_weight),
            Suite::Toqsym => toqsym(&mut r, max_weight),
            Suite::Toncsym => toncsym(&mut r, max_weight),
            Suite::Pwrsmim => pwrsmim(&mut r, max_weight),
            Suite::Mnrule => mnrule(&mut r, max_weight),
            Suite::Fima => fima(&mut r, max_weight),
            Suite::OracleRoundtrip => roundtrip(&mut r, max_weight),
        }
        r
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_weight: usize,
    pub cases: usize,
    pub failed: usize,
    /// The first few counterexamples, in case order.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, max_weight: usize) -> Self {
        SuiteReport { suite, max_weight, cases: 0, failed: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, case: impl fmt::Display, lhs: &T, rhs: &T) {
        self.cases += 1;
        if lhs != rhs {
            self.fail(format!("{case}: {lhs} != {rhs}"));
        }
    }

    fn check_true(&mut self, case: impl fmt::Display, ok: bool) {
        self.cases += 1;
        if !ok {
            self.fail(case.to_string());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(msg);
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{}: {status} ({} cases, {} failed, max weight {})",
            self.suite, self.cases, self.failed, self.max_weight
        )
    }
}

fn orders() -> [PartOrder; 2] {
    [PartOrder::Descending, PartOrder::Ascending]
}

fn block_orders() -> [(BlockOrder, PartOrder); 2] {
    [(BlockOrder::dtilde(), PartOrder::Descending), (BlockOrder::reverse_dtilde(), PartOrder::Ascending)]
}

fn oracle_m(x: &QSymElement, vars: usize) -> Result<QSymElement, String> {
    let f = oracle::expand_element(&qsym::to_m(x), vars).map_err(|e| e.to_string())?;
    oracle::identify_qsym(&f).map_err(|e| e.to_string())
}

fn refine(r: &mut SuiteReport, w: usize) {
    for n in 1..=w {
        for lambda in Partition::all_of(n) {
            let via_oracle = oracle::identify_qsym(&oracle::expand_p(&lambda, n));
            let via_m = qsym::sym::to_qsym_m(&FormalSum::basis_element(crate::linear::SymBasis::P, lambda.clone()));
            match via_oracle {
                Ok(o) => r.check(format_args!("p{lambda} fillings vs oracle"), &via_m, &o),
                Err(e) => r.fail(format!("p{lambda}: oracle {e}")),
            }
            for order in orders() {
                let sum = qsym::to_m(&qsym::sym::p_to_qsym_p(&lambda, &order));
                r.check(format_args!("p{lambda} as sum of P[{order}]"), &sum, &via_m);
            }
        }
    }
}

fn shuffle(r: &mut SuiteReport, w: usize) {
    let comps = Composition::all_up_to(w);
    for order in orders() {
        let pt = Basis::Ptilde(order.clone());
        for a in &comps {
            for b in &comps {
                let n = a.weight() + b.weight();
                if n > w {
                    continue;
                }
                let x = QSymElement::basis_element(pt.clone(), a.clone());
                let y = QSymElement::basis_element(pt.clone(), b.clone());
                let lhs = qsym::to_m(&qsym::product(&x, &y).expect("same basis"));
                let fx = oracle::expand_element(&qsym::to_m(&x), n).expect("M basis");
                let fy = oracle::expand_element(&qsym::to_m(&y), n).expect("M basis");
                match oracle::identify_qsym(&oracle::multiply(&fx, &fy).expect("same N")) {
                    Ok(rhs) => r.check(format_args!("Ptilde[{order}]{a} * Ptilde{b}"), &lhs, &rhs),
                    Err(e) => r.fail(format!("Ptilde{a} * Ptilde{b}: oracle {e}")),
                }
            }
        }
    }
    let nc_budget = w.min(4);
    let phis: Vec<SetComposition> = (0..=nc_budget).flat_map(SetComposition::all_of).collect();
    for (block, _) in block_orders() {
        let basis = NcBasis::P(block.clone());
        for phi in &phis {
            for psi in &phis {
                let n = phi.weight() + psi.weight();
                if n > nc_budget {
                    continue;
                }
                let x = NcElement::basis_element(basis.clone(), phi.clone());
                let y = NcElement::basis_element(basis.clone(), psi.clone());
                let prod = ncqsym::product_nc(&x, &y).expect("P_nc basis");
                let fx = oracle::expand_element_nc(&ncqsym::to_m_nc(&x), n).expect("M_nc basis");
                let fy = oracle::expand_element_nc(&ncqsym::to_m_nc(&y), n).expect("M_nc basis");
                match oracle::identify_ncqsym(&oracle::multiply_nc(&fx, &fy).expect("same N")) {
                    Ok(rhs) => r.check(format_args!("P_nc[{block}]({phi}) * ({psi})"), &ncqsym::to_m_nc(&prod), &rhs),
                    Err(e) => r.fail(format!("P_nc({phi}) * ({psi}): oracle {e}")),
                }
                let projected = qsym::product(&ncqsym::project_rho(&x), &ncqsym::project_rho(&y)).expect("M basis");
                r.check(
                    format_args!("rho is multiplicative on ({phi}), ({psi})"),
                    &ncqsym::project_rho(&prod),
                    &projected,
                );
            }
        }
    }
}

type Triple<I> = BTreeMap<(I, I, I), Coeff>;

fn add3<I: Ord>(t: &mut Triple<I>, k: (I, I, I), c: Coeff) {
    let slot = t.entry(k).or_default();
    *slot += c;
}

fn clean<I: Ord>(mut t: Triple<I>) -> Triple<I> {
    t.retain(|_, c| *c != Coeff::from_integer(0.into()));
    t
}

/// `(Δ⊗id)Δ` and `(id⊗Δ)Δ` for a coproduct given on basis elements.
fn coassociativity<I: Index, B: Clone + PartialEq>(
    x: &FormalSum<I, B>,
    delta: impl Fn(&FormalSum<I, B>) -> TensorLike<I>,
) -> (Triple<I>, Triple<I>) {
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((a, b), c) in delta(x) {
        let basis = x.basis().clone();
        for ((a1, a2), ca) in delta(&FormalSum::basis_element(basis.clone(), a.clone())) {
            add3(&mut left, (a1, a2, b.clone()), &c * ca);
        }
        for ((b1, b2), cb) in delta(&FormalSum::basis_element(basis, b.clone())) {
            add3(&mut right, (a.clone(), b1, b2), &c * cb);
        }
    }
    (clean(left), clean(right))
}

type TensorLike<I> = Vec<((I, I), Coeff)>;

fn tensor_product_q(x: &QSymTensor, y: &QSymTensor) -> QSymTensor {
    let mut out = QSymTensor::zero(x.basis().clone());
    for ((a, b), c) in x.terms() {
        for ((d, e), f) in y.terms() {
            let left = qsym::product(&el(x.basis(), a), &el(x.basis(), d)).expect("same basis");
            let right = qsym::product(&el(x.basis(), b), &el(x.basis(), e)).expect("same basis");
            out.add_product(&left, &right, &(c * f));
        }
    }
    out
}

fn tensor_product_nc(x: &NcTensor, y: &NcTensor) -> NcTensor {
    let mut out = NcTensor::zero(x.basis().clone());
    let basis = x.basis().clone();
    let e = |p: &SetComposition| NcElement::basis_element(basis.clone(), p.clone());
    for ((a, b), c) in x.terms() {
        for ((d, g), f) in y.terms() {
            let left = ncqsym::product_nc(&e(a), &e(d)).expect("P_nc basis");
            let right = ncqsym::product_nc(&e(b), &e(g)).expect("P_nc basis");
            out.add_product(&left, &right, &(c * f));
        }
    }
    out
}

fn el(basis: &Basis, a: &Composition) -> QSymElement {
    QSymElement::basis_element(basis.clone(), a.clone())
}

fn coproduct(r: &mut SuiteReport, w: usize) {
    let budget = w.min(4);
    for a in Composition::all_up_to(budget) {
        let m = el(&Basis::M, &a);
        match oracle::coproduct_oracle(&a, a.weight()) {
            Ok(o) => r.check(format_args!("Delta M{a} vs two-alphabet oracle"), &qsym::coproduct(&m).expect("M"), &o),
            Err(e) => r.fail(format!("Delta M{a}: oracle {e}")),
        }
        for order in orders() {
            let x = el(&Basis::Ptilde(order.clone()), &a);
            let lhs = qsym::tensor_to_m(&qsym::coproduct(&x).expect("Ptilde"));
            let mut rhs = QSymTensor::zero(Basis::M);
            for (b, c) in qsym::to_m(&x).iter() {
                match oracle::coproduct_oracle(b, b.weight()) {
                    Ok(t) => {
                        for ((l, rr), tc) in t.terms() {
                            rhs.add_term(l.clone(), rr.clone(), c * tc);
                        }
                    }
                    Err(e) => r.fail(format!("Delta M{b}: oracle {e}")),
                }
            }
            r.check(format_args!("Delta Ptilde[{order}]{a} deconcatenation vs oracle"), &lhs, &rhs);
            let delta = |y: &QSymElement| qsym::coproduct(y).expect("Ptilde").terms().clone().into_iter().collect();
            let (left, right) = coassociativity(&x, delta);
            r.check_true(format_args!("coassociativity on Ptilde[{order}]{a}"), left == right);
        }
    }
    for order in orders() {
        let pt = Basis::Ptilde(order.clone());
        for a in Composition::all_up_to(budget) {
            for b in Composition::all_up_to(budget - a.weight()) {
                let (x, y) = (el(&pt, &a), el(&pt, &b));
                let lhs = qsym::coproduct(&qsym::product(&x, &y).expect("same basis")).expect("Ptilde");
                let rhs =
                    tensor_product_q(&qsym::coproduct(&x).expect("Ptilde"), &qsym::coproduct(&y).expect("Ptilde"));
                r.check(format_args!("Delta(Ptilde[{order}]{a} * Ptilde{b})"), &lhs, &rhs);
            }
        }
    }
    let nc_budget = w.min(3);
    for (block, _) in block_orders() {
        let basis = NcBasis::P(block.clone());
        let phis: Vec<SetComposition> = (0..=nc_budget).flat_map(SetComposition::all_of).collect();
        for phi in &phis {
            let x = NcElement::basis_element(basis.clone(), phi.clone());
            let delta = |y: &NcElement| ncqsym::coproduct_nc(y).expect("P_nc").terms().clone().into_iter().collect();
            let (left, right) = coassociativity(&x, delta);
            r.check_true(format_args!("coassociativity on P_nc[{block}]({phi})"), left == right);
            let counit_left: NcElement = {
                let d = ncqsym::coproduct_nc(&x).expect("P_nc");
                let mut out = NcElement::zero(basis.clone());
                for ((a, b), c) in d.terms() {
                    if a.is_empty() {
                        out.add_term(b.clone(), c.clone());
                    }
                }
                out
            };
            r.check(format_args!("counit on P_nc({phi})"), &counit_left, &x);
            for psi in &phis {
                if phi.weight() + psi.weight() > nc_budget {
                    continue;
                }
                let y = NcElement::basis_element(basis.clone(), psi.clone());
                let lhs = ncqsym::coproduct_nc(&ncqsym::product_nc(&x, &y).expect("P_nc")).expect("P_nc");
                let rhs = tensor_product_nc(
                    &ncqsym::coproduct_nc(&x).expect("P_nc"),
                    &ncqsym::coproduct_nc(&y).expect("P_nc"),
                );
                r.check(format_args!("Delta(P_nc({phi}) * P_nc({psi}))"), &lhs, &rhs);
            }
        }
    }
}

fn toqsym(r: &mut SuiteReport, w: usize) {
    for (block, part) in block_orders() {
        for n in 0..=w {
            for phi in SetComposition::all_of(n) {
                let lhs = ncqsym::p_from_orbit(&phi, &block);
                let rhs = qsym::p_to_m(&phi.rho(), &part);
                r.check(format_args!("orbit sum of P_nc[{block}]({phi})"), &lhs, &rhs);
            }
        }
    }
}

fn toncsym(r: &mut SuiteReport, w: usize) {
    for n in 1..=w {
        for phi in SetPartition::all_of(n) {
            let rhs = match oracle::identify_ncqsym(&oracle::expand_p_nc(&phi, n)) {
                Ok(x) => x,
                Err(e) => {
                    r.fail(format!("p_{phi}: oracle {e}"));
                    continue;
                }
            };
            for (block, _) in block_orders() {
                let lhs = ncqsym::to_m_nc(&ncqsym::p_to_p_nc(&phi, &block));
                r.check(format_args!("p_{phi} as sum of P_nc[{block}]"), &lhs, &rhs);
            }
        }
    }
}

fn pwrsmim(r: &mut SuiteReport, w: usize) {
    let block = BlockOrder::dtilde();
    for n in 0..=w {
        for phi in SetComposition::all_of(n) {
            let lhs = ncqsym::rho_p_to_f(&phi, &block);
            let rhs = ncqsym::rho_p_to_f_composite(&phi, &block);
            r.check(format_args!("rho(P_{phi}) in F"), &lhs, &rhs);
        }
    }
}

fn mnrule(r: &mut SuiteReport, w: usize) {
    for a in Composition::all_up_to(w) {
        let composite = mn::composite_p_to_f(&a);
        match mn::ribbon_expansion(&a) {
            Ok((ribbon, _)) => r.check(format_args!("P{a} ribbon formula vs composite"), &ribbon, &composite),
            Err(e) => r.fail(format!("P{a}: {e}")),
        }
        let (bottom, top) = mn::interval_bounds(&a);
        let inside = composite.terms().keys().all(|b| bottom.refines(b) && b.refines(&top));
        r.check_true(format_args!("P{a} F-support inside [{bottom}, {top}]"), inside);
    }
}

fn fima(r: &mut SuiteReport, w: usize) {
    for n in 0..=w {
        for tau in Permutation::all_of(n) {
            let lhs = ncqsym::project_rho(&ncqsym::fqsym_image(&tau));
            let rhs = qsym::f_to_m(&tau.descent_composition());
            r.check(format_args!("rho(P of {tau}) = F_des"), &lhs, &rhs);
        }
    }
}

fn roundtrip(r: &mut SuiteReport, w: usize) {
    for a in Composition::all_up_to(w) {
        let m = el(&Basis::M, &a);
        let f = el(&Basis::F, &a);
        r.check(format_args!("M{a} -> F -> M"), &qsym::to_m(&qsym::m_to_f(&a)), &m);
        r.check(format_args!("F{a} -> M -> F"), &qsym::convert(&f, &Basis::F).expect("F"), &f);
        let f_back = qsym::from_m(&qsym::f_to_m(&a), &Basis::F).expect("M");
        r.check(format_args!("F{a} -> M -> F"), &f_back, &f);
        for order in orders() {
            let p_basis = Basis::P(order.clone());
            let via_p = qsym::m_to_p(&a, &order).map(|x| qsym::to_m(&x));
            match via_p {
                Ok(x) => r.check(format_args!("M{a} -> P[{order}] -> M"), &x, &m),
                Err(e) => r.fail(format!("M{a} -> P[{order}]: {e}")),
            }
            match qsym::from_m(&qsym::p_to_m(&a, &order), &p_basis) {
                Ok(x) => r.check(format_args!("P[{order}]{a} -> M -> P"), &x, &el(&p_basis, &a)),
                Err(e) => r.fail(format!("P[{order}]{a} -> M: {e}")),
            }
        }
        let n = a.weight();
        match oracle::identify_qsym(&oracle::expand_m(&a, n)) {
            Ok(x) => r.check(format_args!("identify(expand M{a})"), &x, &m),
            Err(e) => r.fail(format!("identify(expand M{a}): {e}")),
        }
        for x in [f.clone(), el(&Basis::P(PartOrder::Descending), &a), el(&Basis::P(PartOrder::Ascending), &a)] {
            match oracle::expand_element(&qsym::to_m(&x), n + 1) {
                Ok(poly) => r.check_true(
                    format_args!("{x} is quasisymmetric at N = {}", n + 1),
                    oracle::is_quasisymmetric(&poly),
                ),
                Err(e) => r.fail(format!("{x}: {e}")),
            }
            match oracle_m(&x, n) {
                Ok(y) => r.check(format_args!("identify(expand {x})"), &y, &qsym::to_m(&x)),
                Err(e) => r.fail(format!("{x}: {e}")),
            }
        }
    }
    for n in 0..=w.min(5) {
        for phi in SetComposition::all_of(n) {
            let m = NcElement::basis_element(NcBasis::M, phi.clone());
            match oracle::identify_ncqsym(&oracle::expand_m_nc(&phi, n)) {
                Ok(x) => r.check(format_args!("identify(expand M_nc({phi}))"), &x, &m),
                Err(e) => r.fail(format!("M_nc({phi}): {e}")),
            }
            let commuted = oracle::expand_m_nc(&phi, n).commute();
            r.check_true(
                format_args!("commuting M_nc({phi}) gives M{}", phi.rho()),
                commuted == oracle::expand_m(&phi.rho(), n),
            );
        }
    }
}
