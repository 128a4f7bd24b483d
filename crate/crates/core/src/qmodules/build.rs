use itertools::Itertools;

use super::{BasisLabel, QModule};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVector};
use crate::scalar::QScalar;
use crate::weights::SlkWeight;

/// Hopf structure used on tensor products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coproduct {
    /// `Δ(E) = E⊗K + 1⊗E`, `Δ(F) = F⊗1 + K^{-1}⊗F`.
    Standard,
    /// `Δ(E) = E⊗1 + K⊗E`, `Δ(F) = F⊗K^{-1} + 1⊗F`.
    Opposite,
}

/// The coproduct every module in this crate is built with. The wedge
/// closure test pins it down.
pub const COPRODUCT: Coproduct = Coproduct::Standard;

pub fn vector_rep<S: QScalar>(k: usize) -> QModule<S> {
    let labels = (1..=k).map(BasisLabel::Vector).collect();
    let weights = (1..=k).map(|j| SlkWeight::delta(k, j)).collect();
    // E_i v_{i+1} = v_i, F_i v_i = v_{i+1}; indices are 0-based
    let e = (1..k)
        .map(|i| SparseMatrix::from_triplets(k, k, [(i - 1, i, S::one())]))
        .collect();
    let f = (1..k)
        .map(|i| SparseMatrix::from_triplets(k, k, [(i, i - 1, S::one())]))
        .collect();
    QModule { k, labels, weights, e, f }
}

/// The one-dimensional trivial module, the empty tensor product.
pub fn trivial_module<S: QScalar>(k: usize) -> QModule<S> {
    QModule {
        k,
        labels: vec![BasisLabel::Tensor(Vec::new())],
        weights: vec![SlkWeight::zero(k)],
        e: (1..k).map(|_| SparseMatrix::zeros(1, 1)).collect(),
        f: (1..k).map(|_| SparseMatrix::zeros(1, 1)).collect(),
    }
}

/// `M ⊗ N` with basis `(a, b)` in row-major order, left factor slowest.
pub fn tensor<S: QScalar>(m: &QModule<S>, n: &QModule<S>, cop: Coproduct) -> Result<QModule<S>> {
    if m.k != n.k {
        return Err(Error::RankMismatch(m.k, n.k));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let idx = |a: usize, b: usize| a * dn + b;
    let mut labels = Vec::with_capacity(dm * dn);
    let mut weights = Vec::with_capacity(dm * dn);
    for a in 0..dm {
        for b in 0..dn {
            labels.push(BasisLabel::tensor(&m.labels[a], &n.labels[b]));
            weights.push(m.weights[a].plus(&n.weights[b]));
        }
    }
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..m.k {
        let (km, kn) = (m.k_exponents(i), n.k_exponents(i));
        let mut et = Vec::new();
        let mut ft = Vec::new();
        for (r, a, s) in m.e(i).triplets() {
            for b in 0..dn {
                let c = match cop {
                    Coproduct::Standard => s.clone() * S::q_pow(kn[b]),
                    Coproduct::Opposite => s.clone(),
                };
                et.push((idx(r, b), idx(a, b), c));
            }
        }
        for (r, b, s) in n.e(i).triplets() {
            for a in 0..dm {
                let c = match cop {
                    Coproduct::Standard => s.clone(),
                    Coproduct::Opposite => S::q_pow(km[a]) * s.clone(),
                };
                et.push((idx(a, r), idx(a, b), c));
            }
        }
        for (r, a, s) in m.f(i).triplets() {
            for b in 0..dn {
                let c = match cop {
                    Coproduct::Standard => s.clone(),
                    Coproduct::Opposite => s.clone() * S::q_pow(-kn[b]),
                };
                ft.push((idx(r, b), idx(a, b), c));
            }
        }
        for (r, b, s) in n.f(i).triplets() {
            for a in 0..dm {
                let c = match cop {
                    Coproduct::Standard => S::q_pow(-km[a]) * s.clone(),
                    Coproduct::Opposite => s.clone(),
                };
                ft.push((idx(a, r), idx(a, b), c));
            }
        }
        e.push(SparseMatrix::from_triplets(dm * dn, dm * dn, et));
        f.push(SparseMatrix::from_triplets(dm * dn, dm * dn, ft));
    }
    Ok(QModule { k: m.k, labels, weights, e, f })
}

/// `V^{⊗r}`, associated to the left.
pub fn tensor_power<S: QScalar>(k: usize, r: usize, cop: Coproduct) -> QModule<S> {
    if r == 0 {
        return trivial_module(k);
    }
    let v = vector_rep::<S>(k);
    let mut out = relabel_tensor(&v);
    for _ in 1..r {
        out = tensor(&out, &v, cop).expect("same rank");
    }
    out
}

fn relabel_tensor<S: QScalar>(m: &QModule<S>) -> QModule<S> {
    let mut out = m.clone();
    out.labels = m
        .labels
        .iter()
        .map(|l| BasisLabel::Tensor(vec![l.clone()]))
        .collect();
    out
}

/// Strictly decreasing `r`-tuples from `1..k`, lexicographic.
pub fn wedge_labels(k: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1..=k)
        .combinations(r)
        .map(|c| c.into_iter().rev().collect())
        .collect();
    out.sort();
    out
}

fn is_strict(js: &[usize]) -> bool {
    js.windows(2).all(|w| w[0] > w[1])
}

/// `Σ_σ (-q)^{ℓ(σ)} v_{j_σ(1)} ⊗ … ⊗ v_{j_σ(r)}` in `V^{⊗r}`, whose basis
/// index is the base-`k` number formed by the entries.
pub fn wedge_expand<S: QScalar>(js: &[usize], k: usize) -> Result<SparseVector<S>> {
    if !is_strict(js) {
        return Err(Error::NonStrictWedge(js.to_vec()));
    }
    if let Some(&j) = js.iter().find(|&&j| j == 0 || j > k) {
        return Err(Error::EntryOutOfRange { entry: j as i64, k });
    }
    let r = js.len();
    let mut out = SparseVector::new();
    for sigma in (0..r).permutations(r) {
        let len = (0..r)
            .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
            .filter(|&(a, b)| sigma[a] > sigma[b])
            .count() as i64;
        let sign = if len % 2 == 0 { S::one() } else { -S::one() };
        let index = sigma.iter().fold(0, |acc, &s| acc * k + js[s] - 1);
        out.add_at(index, sign * S::q_pow(len));
    }
    Ok(out)
}

/// `⋀^r_q V` with the explicit action: `E_i` turns an entry `i+1` into
/// `i`, `F_i` turns an entry `i` into `i+1`, zero when the result is not
/// strict.
pub fn wedge_rep<S: QScalar>(k: usize, r: usize) -> Result<QModule<S>> {
    if r == 0 || r >= k {
        return Err(Error::IndexOutOfRange { index: r, lo: 1, hi: k.saturating_sub(1) });
    }
    let tuples = wedge_labels(k, r);
    let pos = |js: &Vec<usize>| tuples.binary_search(js).expect("strict label");
    let weights = tuples
        .iter()
        .map(|js| js.iter().fold(SlkWeight::zero(k), |w, &j| w.plus(&SlkWeight::delta(k, j))))
        .collect();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..k {
        let step = |from: usize, to: usize| {
            let mut t = Vec::new();
            for (c, js) in tuples.iter().enumerate() {
                if let Some(h) = js.iter().position(|&j| j == from) {
                    let mut out = js.clone();
                    out[h] = to;
                    if is_strict(&out) {
                        t.push((pos(&out), c, S::one()));
                    }
                }
            }
            SparseMatrix::from_triplets(tuples.len(), tuples.len(), t)
        };
        e.push(step(i + 1, i));
        f.push(step(i, i + 1));
    }
    let labels = tuples.into_iter().map(BasisLabel::Wedge).collect();
    Ok(QModule { k, labels, weights, e, f })
}

/// Compares the action of `V^{⊗r}` (through `cop`) on expanded wedges with
/// the expansion of the explicit wedge action. Returns the mismatching
/// `(label, generator)` pairs.
pub fn wedge_closure_mismatches<S: QScalar>(k: usize, r: usize, cop: Coproduct) -> Result<Vec<(Vec<usize>, String)>> {
    let big = tensor_power::<S>(k, r, cop);
    let small = wedge_rep::<S>(k, r)?;
    let expand = |v: &SparseVector<S>| -> Result<SparseVector<S>> {
        let mut out = SparseVector::new();
        for (b, c) in v.iter() {
            let BasisLabel::Wedge(js) = &small.labels[b] else { unreachable!() };
            out.add_scaled(c, &wedge_expand::<S>(js, k)?);
        }
        Ok(out)
    };
    let mut bad = Vec::new();
    for (b, label) in small.labels.iter().enumerate() {
        let BasisLabel::Wedge(js) = label else { unreachable!() };
        let w = wedge_expand::<S>(js, k)?;
        for i in 1..k {
            let unit = SparseVector::unit(b);
            if big.apply_e(i, &w) != expand(&small.apply_e(i, &unit))? {
                bad.push((js.clone(), format!("E{i}")));
            }
            if big.apply_f(i, &w) != expand(&small.apply_f(i, &unit))? {
                bad.push((js.clone(), format!("F{i}")));
            }
        }
    }
    Ok(bad)
}

/// `Ṽ(λ) = ⊗_r (⋀^r)^{⊗ c_r}`, factors in increasing `r`.
pub fn build_tilde_v<S: QScalar>(c: &[usize], k: usize) -> Result<QModule<S>> {
    if c.len() + 1 != k {
        return Err(Error::DimensionMismatch { expected: k.saturating_sub(1), got: c.len() });
    }
    let mut out: Option<QModule<S>> = None;
    for (idx, &mult) in c.iter().enumerate() {
        let r = idx + 1;
        for _ in 0..mult {
            let factor = wedge_rep::<S>(k, r)?;
            out = Some(match out {
                None => relabel_tensor(&factor),
                Some(acc) => tensor(&acc, &factor, COPRODUCT)?,
            });
        }
    }
    Ok(out.unwrap_or_else(|| trivial_module(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentInt;
    use num_bigint::BigInt;
    use num_traits::One;

    type L = LaurentInt;

    #[test]
    fn vector_rep_action() {
        let v = vector_rep::<L>(3);
        assert_eq!(v.apply_f(1, &SparseVector::unit(0)), SparseVector::unit(1));
        assert!(v.apply_e(1, &SparseVector::unit(0)).is_zero());
        assert_eq!(v.k_exponents(1)[0], 1);
    }

    #[test]
    fn tensor_weights_and_k() {
        let v = vector_rep::<L>(3);
        let t = tensor(&v, &v, COPRODUCT).unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(t.k_exponents(1)[0], 2);
        assert_eq!(t.weights[1], SlkWeight(vec![1, 1, 0]));
        assert!(tensor(&v, &vector_rep::<L>(2), COPRODUCT).is_err());
    }

    #[test]
    fn classical_coproduct_limit() {
        let v = vector_rep::<BigInt>(2);
        let t = tensor(&v, &v, COPRODUCT).unwrap();
        let out = t.apply_f(1, &SparseVector::unit(0));
        let want = SparseVector::from_entries([(1, BigInt::from(1)), (2, BigInt::from(1))]);
        assert_eq!(out, want);
    }

    #[test]
    fn wedge_expand_examples() {
        let w = wedge_expand::<L>(&[2], 2).unwrap();
        assert_eq!(w, SparseVector::unit(1));
        // v2⊗v1 has index 2, v1⊗v2 index 1
        let w = wedge_expand::<L>(&[2, 1], 2).unwrap();
        let want = SparseVector::from_entries([(2, L::one()), (1, -L::q())]);
        assert_eq!(w, want);
        assert!(wedge_expand::<L>(&[1, 2], 2).is_err());
    }

    #[test]
    fn wedge_rep_examples() {
        let w = wedge_rep::<L>(3, 2).unwrap();
        let i31 = w.index_of(&BasisLabel::Wedge(vec![3, 1])).unwrap();
        let i21 = w.index_of(&BasisLabel::Wedge(vec![2, 1])).unwrap();
        assert_eq!(w.apply_e(2, &SparseVector::unit(i31)), SparseVector::unit(i21));
        let w4 = wedge_rep::<L>(4, 2).unwrap();
        let j31 = w4.index_of(&BasisLabel::Wedge(vec![3, 1])).unwrap();
        assert!(w4.apply_f(2, &SparseVector::unit(j31)).is_zero());
        assert_eq!(wedge_rep::<L>(5, 2).unwrap().dim(), 10);
        assert!(wedge_rep::<L>(3, 3).is_err());
    }

    #[test]
    fn coproduct_choice_is_forced() {
        assert!(wedge_closure_mismatches::<L>(3, 2, Coproduct::Standard).unwrap().is_empty());
        assert!(!wedge_closure_mismatches::<L>(3, 2, Coproduct::Opposite).unwrap().is_empty());
    }

    #[test]
    fn tilde_v_small_cases() {
        assert_eq!(build_tilde_v::<L>(&[1, 0], 3).unwrap().dim(), 3);
        assert_eq!(build_tilde_v::<L>(&[0, 1], 3).unwrap().dim(), 3);
        assert_eq!(build_tilde_v::<L>(&[2], 2).unwrap().dim(), 4);
        assert_eq!(build_tilde_v::<L>(&[0, 0], 3).unwrap().dim(), 1);
    }
}
