use super::QModule;
use crate::linalg::SparseMatrix;
use crate::report::Report;
use crate::scalar::QScalar;
use crate::weights::SlkWeight;

/// Cartan matrix entry of `sl_k`.
pub fn cartan(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// The defining relations of `U_q(sl_k)` as exact matrix identities, plus
/// the weight grading of `E_i`, `F_i`. With `q = 1` scalars these are the
/// classical `sl_k` relations with `h_i` read off the weights.
pub fn verify_relations<S: QScalar>(m: &QModule<S>) -> Report {
    let mut rep = Report::new();
    let k = m.k;
    let n = m.dim();
    for i in 1..k {
        let root = SlkWeight::simple_root(k, i);
        let graded = m.e(i).triplets().all(|(r, c, _)| m.weights[r] == m.weights[c].plus(&root))
            && m.f(i).triplets().all(|(r, c, _)| m.weights[r] == m.weights[c].minus(&root));
        rep.push(format!("grading {i}"), graded);
    }
    let ks: Vec<_> = (1..k).map(|i| (m.k_matrix(i, 1), m.k_matrix(i, -1))).collect();
    for i in 1..k {
        let (kp, km) = &ks[i - 1];
        for j in 1..k {
            let a = cartan(i, j);
            let ke = kp.mul(m.e(j)).mul(km);
            let kf = kp.mul(m.f(j)).mul(km);
            rep.push(format!("K{i} E{j} K{i}^-1 = q^{a} E{j}"), ke == m.e(j).scale(&S::q_pow(a)));
            rep.push(format!("K{i} F{j} K{i}^-1 = q^{} F{j}", -a), kf == m.f(j).scale(&S::q_pow(-a)));
            let comm = m.e(i).mul(m.f(j)).sub(&m.f(j).mul(m.e(i)));
            let rhs = if i == j {
                SparseMatrix::diagonal(m.k_exponents(i).into_iter().map(S::quantum_int).collect())
            } else {
                SparseMatrix::zeros(n, n)
            };
            rep.push(format!("[E{i}, F{j}]"), comm == rhs);
            if i < j {
                for (name, x, y) in [("E", m.e(i), m.e(j)), ("F", m.f(i), m.f(j))] {
                    if j - i == 1 {
                        rep.push(format!("Serre {name}{i}{name}{j}"), serre(x, y));
                        rep.push(format!("Serre {name}{j}{name}{i}"), serre(y, x));
                    } else {
                        rep.push(format!("{name}{i}{name}{j} = {name}{j}{name}{i}"), x.mul(y) == y.mul(x));
                    }
                }
            }
        }
    }
    rep
}

/// `x²y - [2] xyx + yx² = 0`.
fn serre<S: QScalar>(x: &SparseMatrix<S>, y: &SparseMatrix<S>) -> bool {
    let xx = x.mul(x);
    let lhs = xx.mul(y).add(&y.mul(&xx));
    lhs == x.mul(y).mul(x).scale(&S::quantum_int(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentInt;
    use crate::qmodules::{tensor, tensor_power, vector_rep, wedge_rep, Coproduct, COPRODUCT};
    use num_bigint::BigInt;

    #[test]
    fn relations_on_small_modules() {
        let v = vector_rep::<LaurentInt>(3);
        assert!(verify_relations(&v).passed());
        let w = wedge_rep::<LaurentInt>(4, 2).unwrap();
        assert!(verify_relations(&w).passed());
        let t = tensor(&v, &wedge_rep::<LaurentInt>(3, 2).unwrap(), COPRODUCT).unwrap();
        assert!(verify_relations(&t).passed());
        let t3 = tensor_power::<LaurentInt>(3, 3, Coproduct::Opposite);
        assert!(verify_relations(&t3).passed());
    }

    #[test]
    fn classical_relations() {
        let t = tensor_power::<BigInt>(3, 2, COPRODUCT);
        assert!(verify_relations(&t).passed());
        let q1 = tensor_power::<LaurentInt>(3, 2, COPRODUCT).specialize_q1();
        assert_eq!(q1, t);
    }

    #[test]
    fn broken_module_is_caught() {
        let mut v = vector_rep::<LaurentInt>(3);
        v.f[0] = v.f[0].scale(&LaurentInt::from(2));
        let rep = verify_relations(&v);
        assert!(!rep.passed());
    }
}
