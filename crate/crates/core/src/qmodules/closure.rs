use std::collections::{BTreeMap, HashMap};

use super::{BasisLabel, QModule};
use crate::linalg::{kernel_basis, DenseMatrix, Echelon, SparseMatrix, SparseVector};
use crate::scalar::{Field, QScalar};
use crate::weights::SlkWeight;

/// Basis (over the fraction field) of the weight-`μ` vectors killed by
/// every `E_i`.
pub fn singular_vectors<S: QScalar>(m: &QModule<S>, mu: &SlkWeight) -> Vec<SparseVector<S::Frac>> {
    let cols = m.weight_space(mu);
    if cols.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<Vec<S::Frac>> = Vec::new();
    for i in 1..m.k {
        let target = m.weight_space(&mu.plus(&SlkWeight::simple_root(m.k, i)));
        let block = m.e(i).restrict(&target, &cols);
        for r in 0..target.len() {
            rows.push((0..cols.len()).map(|c| block.get(r, c).to_frac()).collect());
        }
    }
    if rows.is_empty() {
        return cols.iter().map(|&c| SparseVector::unit(c)).collect();
    }
    let local = kernel_basis(&DenseMatrix::from_rows(rows));
    local
        .into_iter()
        .map(|v| SparseVector::from_entries(v.into_iter().enumerate().map(|(c, s)| (cols[c], s))))
        .collect()
}

/// A submodule given by a spanning basis inside an ambient module.
#[derive(Clone, Debug)]
pub struct Closure<F> {
    /// The submodule with its induced action, basis labels `Span(j)`.
    pub module: QModule<F>,
    /// The basis vectors in ambient coordinates.
    pub vectors: Vec<SparseVector<F>>,
}

struct Builder<F> {
    spaces: HashMap<SlkWeight, (Echelon<F>, Vec<usize>)>,
    vectors: Vec<SparseVector<F>>,
    weights: Vec<SlkWeight>,
}

impl<F: Field> Builder<F> {
    fn add(&mut self, v: SparseVector<F>, w: SlkWeight) {
        if v.is_zero() {
            return;
        }
        let (ech, globals) = self.spaces.entry(w.clone()).or_insert_with(|| (Echelon::new(), Vec::new()));
        if ech.insert(&v).is_some() {
            globals.push(self.vectors.len());
            self.vectors.push(v);
            self.weights.push(w);
        }
    }

    fn coordinates(&self, v: &SparseVector<F>, w: &SlkWeight) -> Vec<(usize, F)> {
        let (ech, globals) = &self.spaces[w];
        let local = ech.coordinates(v).expect("closure is invariant");
        local.iter().map(|(l, c)| (globals[l], c.clone())).collect()
    }
}

/// The smallest subspace containing `seeds` and stable under every `E_i`
/// and `F_i`. Seeds are split into weight components first; new vectors
/// are found breadth-first applying `F_1, …, F_{k-1}, E_1, …, E_{k-1}`.
pub fn submodule_closure<S: QScalar>(m: &QModule<S>, seeds: &[SparseVector<S::Frac>]) -> Closure<S::Frac> {
    let k = m.k;
    let amb = m.to_frac();
    let mut b = Builder { spaces: HashMap::new(), vectors: Vec::new(), weights: Vec::new() };
    for seed in seeds {
        let mut parts: BTreeMap<SlkWeight, SparseVector<S::Frac>> = BTreeMap::new();
        for (idx, c) in seed.iter() {
            parts.entry(m.weights[idx].clone()).or_default().add_at(idx, c.clone());
        }
        for (w, v) in parts {
            b.add(v, w);
        }
    }
    let mut j = 0;
    while j < b.vectors.len() {
        let (v, w) = (b.vectors[j].clone(), b.weights[j].clone());
        for i in 1..k {
            b.add(amb.apply_f(i, &v), w.minus(&SlkWeight::simple_root(k, i)));
        }
        for i in 1..k {
            b.add(amb.apply_e(i, &v), w.plus(&SlkWeight::simple_root(k, i)));
        }
        j += 1;
    }
    let dim = b.vectors.len();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..k {
        let root = SlkWeight::simple_root(k, i);
        let mut et = Vec::new();
        let mut ft = Vec::new();
        for (col, v) in b.vectors.iter().enumerate() {
            let up = amb.apply_e(i, v);
            if !up.is_zero() {
                let w = b.weights[col].plus(&root);
                et.extend(b.coordinates(&up, &w).into_iter().map(|(r, c)| (r, col, c)));
            }
            let down = amb.apply_f(i, v);
            if !down.is_zero() {
                let w = b.weights[col].minus(&root);
                ft.extend(b.coordinates(&down, &w).into_iter().map(|(r, c)| (r, col, c)));
            }
        }
        e.push(SparseMatrix::from_triplets(dim, dim, et));
        f.push(SparseMatrix::from_triplets(dim, dim, ft));
    }
    let module = QModule {
        k,
        labels: (0..dim).map(BasisLabel::Span).collect(),
        weights: b.weights,
        e,
        f,
    };
    Closure { module, vectors: b.vectors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentInt;
    use crate::qmodules::{build_tilde_v, tensor, vector_rep, COPRODUCT};
    use crate::ratfunc::RatFunc;
    use num_traits::{One, Zero};

    type L = LaurentInt;

    #[test]
    fn highest_line_of_vector_rep() {
        let v = vector_rep::<L>(3);
        let s = singular_vectors(&v, &SlkWeight::delta(3, 1));
        assert_eq!(s, vec![SparseVector::unit(0)]);
        assert!(singular_vectors(&v, &SlkWeight::delta(3, 2)).is_empty());
    }

    #[test]
    fn q_antisymmetric_vector() {
        let v = vector_rep::<L>(2);
        let t = tensor(&v, &v, COPRODUCT).unwrap();
        let s = singular_vectors(&t, &SlkWeight(vec![1, 1]));
        assert_eq!(s.len(), 1);
        // E(a v1⊗v2 + b v2⊗v1) = (a q^{-1} + b) v1⊗v1 with Δ(E) = E⊗K + 1⊗E
        let v = &s[0];
        let ratio = v.get(1) / v.get(2);
        assert_eq!(ratio, -RatFunc::from(L::q()));
    }

    #[test]
    fn closure_of_top_vector() {
        let v = vector_rep::<L>(4);
        let c = submodule_closure(&v, &[SparseVector::unit(0)]);
        assert_eq!(c.module.dim(), 4);
        let z = submodule_closure(&v, &[SparseVector::new()]);
        assert_eq!(z.module.dim(), 0);
    }

    #[test]
    fn symmetric_square_inside_tensor_square() {
        let m = build_tilde_v::<L>(&[2], 2).unwrap();
        let top = singular_vectors(&m, &SlkWeight(vec![2, 0]));
        assert_eq!(top.len(), 1);
        let c = submodule_closure(&m, &top);
        assert_eq!(c.module.dim(), 3);
        assert!(c.module.e(1).get(0, 1) != RatFunc::zero() || c.module.e(1).get(1, 2) != RatFunc::zero());
        let _ = RatFunc::one();
    }
}
