//! Exact inversion of the per-weight P→M matrix, memoized by weight and order.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num::{One, Zero};

use super::p_to_m;
use crate::combinat::{Composition, PartOrder};
use crate::error::AlgebraError;
use crate::linear::{Basis, Coeff, QSymElement};

type Inverse = Arc<BTreeMap<Composition, QSymElement>>;

static CACHE: LazyLock<RwLock<HashMap<(usize, PartOrder), Inverse>>> = LazyLock::new(Default::default);

/// `M_α` in the P basis for `order`.
pub fn m_to_p(alpha: &Composition, order: &PartOrder) -> Result<QSymElement, AlgebraError> {
    let table = inverse_for(alpha.weight(), order)?;
    Ok(table.get(alpha).cloned().expect("every composition of the weight is tabulated"))
}

/// Weights whose inverse matrices are currently cached for `order`.
pub fn cached_weights(order: &PartOrder) -> Vec<usize> {
    let cache = CACHE.read().expect("cache lock");
    let mut ws: Vec<usize> = cache.keys().filter(|(_, o)| o == order).map(|(w, _)| *w).collect();
    ws.sort_unstable();
    ws
}

fn inverse_for(weight: usize, order: &PartOrder) -> Result<Inverse, AlgebraError> {
    let key = (weight, order.clone());
    if let Some(t) = CACHE.read().expect("cache lock").get(&key) {
        return Ok(t.clone());
    }
    let built = Arc::new(build(weight, order)?);
    let mut cache = CACHE.write().expect("cache lock");
    Ok(cache.entry(key).or_insert(built).clone())
}

fn build(weight: usize, order: &PartOrder) -> Result<BTreeMap<Composition, QSymElement>, AlgebraError> {
    let comps = Composition::all_of(weight);
    let n = comps.len();
    let pos: BTreeMap<&Composition, usize> = comps.iter().enumerate().map(|(i, c)| (c, i)).collect();
    // a[row β][col α] = [M_β] P_α, augmented with the identity.
    let mut a = vec![vec![Coeff::zero(); 2 * n]; n];
    for (col, alpha) in comps.iter().enumerate() {
        for (beta, c) in p_to_m(alpha, order).iter() {
            a[pos[beta]][col] = c.clone();
        }
        a[col][n + col] = Coeff::one();
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(AlgebraError::Singular { weight })?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let (src, dst) = if r < col {
                    let (lo, hi) = a.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
    }
    // Column γ of the inverse expresses M_γ in the P basis.
    let basis = Basis::P(order.clone());
    Ok(comps
        .iter()
        .enumerate()
        .map(|(g, gamma)| {
            let terms = comps.iter().enumerate().map(|(r, alpha)| (alpha.clone(), a[r][n + g].clone()));
            (gamma.clone(), QSymElement::from_terms(basis.clone(), terms))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concurrent_builders_publish_one_table() {
        let order = PartOrder::Ranked(vec![3, 1]);
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let o = order.clone();
                std::thread::spawn(move || inverse_for(5, &o).unwrap())
            })
            .collect();
        let tables: Vec<Inverse> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        let published = inverse_for(5, &order).unwrap();
        for t in &tables {
            assert_eq!(**t, *published);
        }
        assert!(cached_weights(&order).contains(&5));
    }
}
