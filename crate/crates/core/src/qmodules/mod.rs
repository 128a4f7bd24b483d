//! Finite-dimensional weight modules for `U_q(sl_k)` with exact scalars.
//!
//! A [`QModule`] is a labeled basis, an `sl_k` weight per basis vector and
//! sparse matrices for `E_i`, `F_i`. `K_i` is never stored: it acts on a
//! vector of weight `μ` by `q^{(μ, α_i)}`.

mod build;
mod closure;
mod relations;

pub use build::{
    build_tilde_v, tensor, tensor_power, trivial_module, vector_rep, wedge_closure_mismatches,
    wedge_expand, wedge_labels, wedge_rep, Coproduct, COPRODUCT,
};
pub use closure::{singular_vectors, submodule_closure, Closure};
pub use relations::{cartan, verify_relations};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::laurent::LaurentInt;
use crate::linalg::{SparseMatrix, SparseVector};
use crate::scalar::QScalar;
use crate::weights::SlkWeight;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// `v_j`.
    Vector(usize),
    /// `v_{j_1} ∧ … ∧ v_{j_r}`, strictly decreasing.
    Wedge(Vec<usize>),
    /// Pure tensor of factor labels.
    Tensor(Vec<BasisLabel>),
    /// `j`-th vector of a computed spanning basis.
    Span(usize),
}

impl BasisLabel {
    /// Tensor of two labels, flattening nested tensors.
    pub fn tensor(a: &BasisLabel, b: &BasisLabel) -> BasisLabel {
        let mut parts = Vec::new();
        for x in [a, b] {
            match x {
                BasisLabel::Tensor(v) => parts.extend(v.iter().cloned()),
                other => parts.push(other.clone()),
            }
        }
        BasisLabel::Tensor(parts)
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Vector(j) => write!(f, "v{j}"),
            BasisLabel::Wedge(js) => {
                let s: Vec<String> = js.iter().map(|j| format!("v{j}")).collect();
                write!(f, "{}", s.join("^"))
            }
            BasisLabel::Tensor(parts) if parts.is_empty() => write!(f, "1"),
            BasisLabel::Tensor(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join("*"))
            }
            BasisLabel::Span(j) => write!(f, "b{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QModule<S> {
    pub k: usize,
    pub labels: Vec<BasisLabel>,
    pub weights: Vec<SlkWeight>,
    /// `e[i-1]` is `E_i`.
    pub e: Vec<SparseMatrix<S>>,
    pub f: Vec<SparseMatrix<S>>,
}

impl<S: QScalar> QModule<S> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn e(&self, i: usize) -> &SparseMatrix<S> {
        &self.e[i - 1]
    }

    pub fn f(&self, i: usize) -> &SparseMatrix<S> {
        &self.f[i - 1]
    }

    /// Exponents `(μ_b, α_i)` over the basis.
    pub fn k_exponents(&self, i: usize) -> Vec<i64> {
        self.weights.iter().map(|w| w.pair_root(i)).collect()
    }

    /// `K_i^{±1}` as a diagonal matrix.
    pub fn k_matrix(&self, i: usize, sign: i64) -> SparseMatrix<S> {
        SparseMatrix::diagonal(self.k_exponents(i).into_iter().map(|e| S::q_pow(sign * e)).collect())
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn weight_space(&self, mu: &SlkWeight) -> Vec<usize> {
        (0..self.dim()).filter(|&b| &self.weights[b] == mu).collect()
    }

    /// Weight multiplicities.
    pub fn character(&self) -> BTreeMap<SlkWeight, usize> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn map_scalars<T: QScalar>(&self, f: impl Fn(&S) -> T + Copy) -> QModule<T> {
        QModule {
            k: self.k,
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            e: self.e.iter().map(|m| m.map(f)).collect(),
            f: self.f.iter().map(|m| m.map(f)).collect(),
        }
    }

    pub fn to_frac(&self) -> QModule<S::Frac> {
        self.map_scalars(|s| s.to_frac())
    }

    pub fn apply_e(&self, i: usize, v: &SparseVector<S>) -> SparseVector<S> {
        self.e(i).apply(v)
    }

    pub fn apply_f(&self, i: usize, v: &SparseVector<S>) -> SparseVector<S> {
        self.f(i).apply(v)
    }

    /// `{"k", "basis", "weights", "E", "F"}` with `[row, col, value]` triples.
    pub fn to_json(&self) -> serde_json::Value {
        let triples = |ms: &[SparseMatrix<S>]| -> serde_json::Value {
            ms.iter()
                .map(|m| {
                    m.triplets()
                        .map(|(r, c, s)| serde_json::json!([r, c, s.to_json_value()]))
                        .collect::<Vec<_>>()
                })
                .collect()
        };
        serde_json::json!({
            "k": self.k,
            "basis": self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "weights": self.weights,
            "E": triples(&self.e),
            "F": triples(&self.f),
        })
    }
}

impl QModule<LaurentInt> {
    /// Evaluation at `q = 1`.
    pub fn specialize_q1(&self) -> QModule<BigInt> {
        self.map_scalars(|s| s.eval_q1())
    }
}

/// Character as JSON: list of `[counts, multiplicity]`.
pub fn character_json(ch: &BTreeMap<SlkWeight, usize>) -> serde_json::Value {
    ch.iter().map(|(w, m)| serde_json::json!([w, m])).collect()
}
