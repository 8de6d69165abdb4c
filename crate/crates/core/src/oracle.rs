//! Truncated polynomials in commuting and non-commuting variables.
//!
//! Everything here works directly with monomials and words. Nothing calls
//! into the basis-change code, so results can arbitrate it.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::combinat::{varrho, Composition, Partition, SetComposition, SetPartition};
use crate::error::OracleError;
use crate::linear::{coeff_to_string, Basis, Coeff, NcBasis, NcElement, QSymElement, QSymTensor};

/// A polynomial in `x_1, …, x_n`, keyed by exponent vectors of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

/// A polynomial in non-commuting `x_1, …, x_n`, keyed by words of 1-based
/// letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

fn add_into(terms: &mut BTreeMap<Vec<u32>, Coeff>, key: Vec<u32>, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Strictly increasing `k`-tuples from `1..=n`.
fn increasing_tuples(k: usize, n: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, k: usize, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k as u32 {
                break;
            }
            cur.push(i);
            go(i + 1, k - 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, n as u32, &mut Vec::new(), &mut out);
    out
}

impl CPoly {
    pub fn zero(vars: usize) -> Self {
        CPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = CPoly::zero(vars);
        p.terms.insert(vec![0; vars], Coeff::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Coeff) {
        assert_eq!(exponents.len(), self.vars, "exponent vector length");
        add_into(&mut self.terms, exponents, c);
    }

    pub fn coeff(&self, exponents: &[u32]) -> Coeff {
        self.terms.get(exponents).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_scaled(&mut self, other: &CPoly, s: &Coeff) -> Result<(), OracleError> {
        if other.vars != self.vars {
            return Err(OracleError::VariableMismatch(self.vars, other.vars));
        }
        for (e, c) in &other.terms {
            add_into(&mut self.terms, e.clone(), c * s);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().sum::<u32>() as usize).max().unwrap_or(0)
    }
}

impl NCPoly {
    pub fn zero(vars: usize) -> Self {
        NCPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = NCPoly::zero(vars);
        p.terms.insert(Vec::new(), Coeff::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: Vec<u32>, c: Coeff) {
        assert!(word.iter().all(|&l| l >= 1 && l as usize <= self.vars), "letter out of range");
        add_into(&mut self.terms, word, c);
    }

    pub fn coeff(&self, word: &[u32]) -> Coeff {
        self.terms.get(word).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_scaled(&mut self, other: &NCPoly, s: &Coeff) -> Result<(), OracleError> {
        if other.vars != self.vars {
            return Err(OracleError::VariableMismatch(self.vars, other.vars));
        }
        for (w, c) in &other.terms {
            add_into(&mut self.terms, w.clone(), c * s);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Lets the variables commute.
    pub fn commute(&self) -> CPoly {
        let mut out = CPoly::zero(self.vars);
        for (w, c) in &self.terms {
            let mut e = vec![0; self.vars];
            for &l in w {
                e[l as usize - 1] += 1;
            }
            out.add_term(e, c.clone());
        }
        out
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|(e, c)| format!("{}*{}", coeff_to_string(c), monomial(e))).collect();
        f.write_str(&if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|(w, c)| format!("{}*{}", coeff_to_string(c), word(w))).collect();
        f.write_str(&if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

fn monomial(e: &[u32]) -> String {
    let s: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s.join("")
    }
}

fn word(w: &[u32]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|l| format!("x{l}")).collect::<Vec<_>>().join("")
}

/// `M_α = Σ_{i_1 < … < i_k} x_{i_1}^{a_1} ⋯ x_{i_k}^{a_k}`.
pub fn expand_m(alpha: &Composition, vars: usize) -> CPoly {
    let mut out = CPoly::zero(vars);
    for idx in increasing_tuples(alpha.len(), vars) {
        let mut e = vec![0; vars];
        for (&i, &a) in idx.iter().zip(alpha.parts()) {
            e[i as usize - 1] = a as u32;
        }
        out.add_term(e, Coeff::one());
    }
    out
}

/// Words `w` of length `|Φ|` with `ϱ(w) = Φ`. Zero unless `Φ` is standard.
pub fn expand_m_nc(phi: &SetComposition, vars: usize) -> NCPoly {
    let mut out = NCPoly::zero(vars);
    if !phi.is_standard() {
        return out;
    }
    for letters in increasing_tuples(phi.len(), vars) {
        let mut w = vec![0; phi.weight()];
        for (block, &l) in phi.blocks().iter().zip(&letters) {
            for &p in block {
                w[p - 1] = l;
            }
        }
        out.add_term(w, Coeff::one());
    }
    out
}

/// `p_k = Σ_i x_i^k`, multiplied over the parts of `λ`.
pub fn expand_p(lambda: &Partition, vars: usize) -> CPoly {
    let mut out = CPoly::one(vars);
    for &k in lambda.parts() {
        let mut pk = CPoly::zero(vars);
        for i in 0..vars {
            let mut e = vec![0; vars];
            e[i] = k as u32;
            pk.add_term(e, Coeff::one());
        }
        out = multiply(&out, &pk).expect("same variable count");
    }
    out
}

/// All words constant on each block of `φ`.
pub fn expand_p_nc(phi: &SetPartition, vars: usize) -> NCPoly {
    let mut out = NCPoly::zero(vars);
    let blocks = phi.blocks();
    let n = phi.weight();
    let mut choice = vec![1u32; blocks.len()];
    if vars == 0 && !blocks.is_empty() {
        return out;
    }
    loop {
        let mut w = vec![0; n];
        for (b, &l) in blocks.iter().zip(&choice) {
            for &p in b {
                w[p - 1] = l;
            }
        }
        out.add_term(w, Coeff::one());
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            if (choice[i] as usize) < vars {
                choice[i] += 1;
                break;
            }
            choice[i] = 1;
            i += 1;
        }
    }
}

pub fn multiply(a: &CPoly, b: &CPoly) -> Result<CPoly, OracleError> {
    if a.vars != b.vars {
        return Err(OracleError::VariableMismatch(a.vars, b.vars));
    }
    let mut out = CPoly::zero(a.vars);
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out.terms, e, ca * cb);
        }
    }
    Ok(out)
}

pub fn multiply_nc(a: &NCPoly, b: &NCPoly) -> Result<NCPoly, OracleError> {
    if a.vars != b.vars {
        return Err(OracleError::VariableMismatch(a.vars, b.vars));
    }
    let mut out = NCPoly::zero(a.vars);
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            add_into(&mut out.terms, w, ca * cb);
        }
    }
    Ok(out)
}

fn require_m(x: &QSymElement) -> Result<(), OracleError> {
    if *x.basis() != Basis::M {
        return Err(OracleError::NotMonomialBasis(x.basis().to_string()));
    }
    Ok(())
}

/// The polynomial of an M-basis element.
pub fn expand_element(x: &QSymElement, vars: usize) -> Result<CPoly, OracleError> {
    require_m(x)?;
    let mut out = CPoly::zero(vars);
    for (a, c) in x.iter() {
        out.add_scaled(&expand_m(a, vars), c)?;
    }
    Ok(out)
}

pub fn expand_element_nc(x: &NcElement, vars: usize) -> Result<NCPoly, OracleError> {
    if *x.basis() != NcBasis::M {
        return Err(OracleError::NotMonomialBasis(x.basis().to_string()));
    }
    let mut out = NCPoly::zero(vars);
    for (phi, c) in x.iter() {
        out.add_scaled(&expand_m_nc(phi, vars), c)?;
    }
    Ok(out)
}

/// The nonzero exponents in order, if they occupy an initial segment.
fn packed(e: &[u32]) -> Option<Composition> {
    let k = e.iter().take_while(|&&x| x > 0).count();
    if e[k..].iter().any(|&x| x > 0) {
        return None;
    }
    Some(Composition::new(e[..k].iter().map(|&x| x as usize).collect()).expect("positive exponents"))
}

fn residual_error<K>(rest: &BTreeMap<K, Coeff>, show: impl Fn(&K) -> String) -> Result<(), OracleError> {
    match rest.iter().next() {
        None => Ok(()),
        Some((k, c)) => Err(OracleError::Residual(format!("{}*{}", coeff_to_string(c), show(k)))),
    }
}

/// Reads `[M_α] f` off the monomial `x_1^{a_1}⋯x_k^{a_k}`, then checks that
/// nothing is left over.
pub fn identify_qsym(f: &CPoly) -> Result<QSymElement, OracleError> {
    let degree = f.degree();
    if degree > f.vars {
        return Err(OracleError::TooFewVariables { degree, vars: f.vars });
    }
    let mut out = QSymElement::zero(Basis::M);
    let mut rest = f.clone();
    for (e, c) in &f.terms {
        if let Some(alpha) = packed(e) {
            rest.add_scaled(&expand_m(&alpha, f.vars), &-c.clone())?;
            out.add_term(alpha, c.clone());
        }
    }
    residual_error(&rest.terms, |e| monomial(e))?;
    Ok(out)
}

/// Reads `[M_Φ] f` off the minimal word with `ϱ = Φ`, then checks that
/// nothing is left over.
pub fn identify_ncqsym(f: &NCPoly) -> Result<NcElement, OracleError> {
    let degree = f.degree();
    if degree > f.vars {
        return Err(OracleError::TooFewVariables { degree, vars: f.vars });
    }
    let mut out = NcElement::zero(NcBasis::M);
    let mut rest = f.clone();
    for (w, c) in &f.terms {
        let letters: Vec<usize> = w.iter().map(|&l| l as usize).collect();
        let phi = varrho(&letters);
        let minimal = letters.iter().all(|&l| l <= phi.len());
        if minimal {
            rest.add_scaled(&expand_m_nc(&phi, f.vars), &-c.clone())?;
            out.add_term(phi, c.clone());
        }
    }
    residual_error(&rest.terms, |w| word(w))?;
    Ok(out)
}

/// Whether every monomial has the coefficient of its packed form, and every
/// packed monomial appears at every increasing spread of its indices.
pub fn is_quasisymmetric(f: &CPoly) -> bool {
    for (e, c) in &f.terms {
        let nonzero: Vec<usize> = e.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
        let alpha = Composition::new(nonzero).expect("positive exponents");
        let mut p = vec![0; f.vars];
        for (i, &a) in alpha.parts().iter().enumerate() {
            p[i] = a as u32;
        }
        if f.coeff(&p) != *c {
            return false;
        }
        if p == *e {
            for idx in increasing_tuples(alpha.len(), f.vars) {
                let mut s = vec![0; f.vars];
                for (&i, &a) in idx.iter().zip(alpha.parts()) {
                    s[i as usize - 1] = a as u32;
                }
                if f.coeff(&s) != *c {
                    return false;
                }
            }
        }
    }
    true
}

/// `Δ(M_α)` by evaluating at `x_1 < … < x_N < y_1 < … < y_N` and reading
/// off bi-packed monomials.
pub fn coproduct_oracle(alpha: &Composition, vars: usize) -> Result<QSymTensor, OracleError> {
    if alpha.weight() > vars {
        return Err(OracleError::TooFewVariables { degree: alpha.weight(), vars });
    }
    let f = expand_m(alpha, 2 * vars);
    let mut out = QSymTensor::zero(Basis::M);
    let mut rest = f.clone();
    for (e, c) in &f.terms {
        let (x, y) = e.split_at(vars);
        if let (Some(l), Some(r)) = (packed(x), packed(y)) {
            let lx = expand_m(&l, vars);
            let ry = expand_m(&r, vars);
            for (ex, cx) in lx.terms() {
                for (ey, cy) in ry.terms() {
                    let mut joined = ex.clone();
                    joined.extend_from_slice(ey);
                    add_into(&mut rest.terms, joined, -(c * cx * cy));
                }
            }
            out.add_term(l, r, c.clone());
        }
    }
    residual_error(&rest.terms, |e| monomial(e))?;
    Ok(out)
}
