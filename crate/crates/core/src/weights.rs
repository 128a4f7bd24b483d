//! Integer weights for `gl_n` and `sl_k`, the map `φ` between them, the
//! orders used to stratify blocks, and the count arithmetic of graded
//! shifts.
//!
//! `gl_n` weights are integer vectors. An `sl_k` weight is stored by its
//! multiplicities `m_i` of `δ_i`; two count vectors with the same
//! differences `m_i - m_{i+1}` are the same `sl_k` weight, so comparisons
//! that need it also compare totals.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlWeight(pub Vec<i64>);

impl GlWeight {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for GlWeight {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SlkWeight(pub Vec<i64>);

impl SlkWeight {
    pub fn zero(k: usize) -> Self {
        Self(vec![0; k])
    }

    /// `δ_j` for 1-based `j`.
    pub fn delta(k: usize, j: usize) -> Self {
        let mut c = vec![0; k];
        c[j - 1] = 1;
        Self(c)
    }

    /// `ϖ_i = δ_1 + … + δ_i`.
    pub fn fundamental(k: usize, i: usize) -> Self {
        Self((0..k).map(|j| i64::from(j < i)).collect())
    }

    /// `α_i = δ_i - δ_{i+1}`.
    pub fn simple_root(k: usize, i: usize) -> Self {
        let mut c = vec![0; k];
        c[i - 1] = 1;
        c[i] = -1;
        Self(c)
    }

    /// Highest weight `Σ c_r ϖ_r` of the partition with `c_r` columns of
    /// height `r`: `m_j` is the number of columns of height at least `j`.
    pub fn of_partition(shape: &Partition, k: usize) -> Self {
        let t = shape.transpose();
        Self((0..k).map(|j| t.parts().get(j).copied().unwrap_or(0) as i64).collect())
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn counts(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `(μ, α_i) = m_i - m_{i+1}`.
    pub fn pair_root(&self, i: usize) -> i64 {
        self.0[i - 1] - self.0[i]
    }

    /// The signed coordinates `(μ, α_i)` for `i = 1..k-1`.
    pub fn root_pairings(&self) -> Vec<i64> {
        (1..self.k()).map(|i| self.pair_root(i)).collect()
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// `ρ = (0, -1, …, -(n-1))`.
pub fn rho(n: usize) -> GlWeight {
    GlWeight((0..n as i64).map(|i| -i).collect())
}

/// Strictly decreasing entries.
pub fn is_dominant(a: &GlWeight) -> bool {
    a.0.windows(2).all(|w| w[0] > w[1])
}

/// Weakly decreasing sort: the block label of the orbit.
pub fn dominant_rep(a: &GlWeight) -> GlWeight {
    let mut v = a.0.clone();
    v.sort_unstable_by(|x, y| y.cmp(x));
    GlWeight(v)
}

pub fn same_block(a: &GlWeight, b: &GlWeight) -> bool {
    dominant_rep(a) == dominant_rep(b)
}

/// `φ(a) = δ_{a_1} + … + δ_{a_n}`.
pub fn phi(a: &GlWeight, k: usize) -> Result<SlkWeight> {
    let mut c = vec![0; k];
    for &x in &a.0 {
        if x < 1 || x > k as i64 {
            return Err(Error::EntryOutOfRange { entry: x, k });
        }
        c[x as usize - 1] += 1;
    }
    Ok(SlkWeight(c))
}

/// `c_{d,i}`.
pub fn count_c(d: &GlWeight, i: i64) -> i64 {
    d.0.iter().filter(|&&x| x == i).count() as i64
}

fn replace_one(d: &GlWeight, from: i64, to: i64) -> Option<GlWeight> {
    let pos = d.0.iter().position(|&x| x == from)?;
    let mut v = d.0.clone();
    v[pos] = to;
    Some(dominant_rep(&GlWeight(v)))
}

/// `(+i)d`: one entry `i` becomes `i+1`; `None` when `d` has no `i`.
pub fn plus_i(d: &GlWeight, i: i64) -> Option<GlWeight> {
    replace_one(d, i, i + 1)
}

/// `(-i)d`: one entry `i+1` becomes `i`.
pub fn minus_i(d: &GlWeight, i: i64) -> Option<GlWeight> {
    replace_one(d, i + 1, i)
}

/// `(a, ε_l) = a_l`, 1-based `l`.
pub fn casimir_eigenvalue(a: &GlWeight, l: usize) -> Result<i64> {
    if l == 0 || l > a.len() {
        return Err(Error::IndexOutOfRange { index: l, lo: 1, hi: a.len() });
    }
    Ok(a.0[l - 1])
}

fn prefix_sums(v: &[i64]) -> Vec<i64> {
    v.iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect()
}

/// Dominance on `Z^n`: equal sums and prefix sums of `a` bounded by those
/// of `b`.
pub fn dominance_leq(a: &GlWeight, b: &GlWeight) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    let (pa, pb) = (prefix_sums(&a.0), prefix_sums(&b.0));
    Ok(pa.last() == pb.last() && pa.iter().zip(&pb).all(|(x, y)| x <= y))
}

/// `μ ≤ ν` for `sl_k` weights of the same total: `ν - μ` is a nonnegative
/// combination of simple roots. The coefficient of `α_i` is the `i`-th
/// prefix sum of `ν - μ`.
pub fn slk_dominance_leq(mu: &SlkWeight, nu: &SlkWeight) -> Result<bool> {
    if mu.k() != nu.k() {
        return Err(Error::RankMismatch(mu.k(), nu.k()));
    }
    let (pm, pn) = (prefix_sums(&mu.0), prefix_sums(&nu.0));
    Ok(pm.last() == pn.last() && pm.iter().zip(&pn).all(|(x, y)| x <= y))
}

fn running_totals(nu: &[SlkWeight]) -> Vec<SlkWeight> {
    let k = nu.first().map_or(0, SlkWeight::k);
    nu.iter()
        .scan(SlkWeight::zero(k), |acc, x| {
            *acc = acc.plus(x);
            Some(acc.clone())
        })
        .collect()
}

/// Inverse dominance on tuples: equal totals and every partial sum of `ν`
/// dominates the corresponding partial sum of `ν'`.
pub fn inverse_dominance_leq(nu: &[SlkWeight], nu_prime: &[SlkWeight]) -> Result<bool> {
    if nu.len() != nu_prime.len() {
        return Err(Error::DimensionMismatch { expected: nu.len(), got: nu_prime.len() });
    }
    let (s, t) = (running_totals(nu), running_totals(nu_prime));
    if s.last() != t.last() {
        return Ok(false);
    }
    for (a, b) in s.iter().zip(&t) {
        if !slk_dominance_leq(b, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_levi(levi: &[usize], n: usize) -> Result<()> {
    let sum: usize = levi.iter().sum();
    if sum != n || levi.contains(&0) {
        return Err(Error::CompositionMismatch { levi: levi.to_vec(), n });
    }
    Ok(())
}

/// Splits `a` into its Levi blocks.
pub fn levi_blocks<'a>(a: &'a [i64], levi: &[usize]) -> Vec<&'a [i64]> {
    let mut rest = a;
    levi.iter()
        .map(|&len| {
            let (head, tail) = rest.split_at(len);
            rest = tail;
            head
        })
        .collect()
}

/// `(φ_1(a), …, φ_m(a))`, one `φ` per Levi block.
pub fn phi_tuple(a: &GlWeight, levi: &[usize], k: usize) -> Result<Vec<SlkWeight>> {
    check_levi(levi, a.len())?;
    levi_blocks(&a.0, levi)
        .into_iter()
        .map(|b| phi(&GlWeight(b.to_vec()), k))
        .collect()
}

/// The `l`-dominant representative: each Levi block sorted decreasingly.
pub fn levi_rep(a: &GlWeight, levi: &[usize]) -> Result<GlWeight> {
    check_levi(levi, a.len())?;
    Ok(GlWeight(
        levi_blocks(&a.0, levi)
            .into_iter()
            .flat_map(|b| dominant_rep(&GlWeight(b.to_vec())).0)
            .collect(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiClass {
    pub representative: GlWeight,
    pub levi: Vec<usize>,
}

/// The classes of `W·d` modulo `W_l`, ordered by dominance of their
/// representatives. Classes are listed from the most dominant down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiPoset {
    pub levi: Vec<usize>,
    pub classes: Vec<XiClass>,
    /// `(i, j)` with `classes[i] ≼ classes[j]`, reflexive pairs included.
    pub leq_pairs: Vec<(usize, usize)>,
    index: BTreeMap<GlWeight, usize>,
}

impl XiPoset {
    /// `p(a)`, for `a` in the orbit.
    pub fn project(&self, a: &GlWeight) -> Option<usize> {
        self.index.get(&levi_rep(a, &self.levi).ok()?).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq_pairs.binary_search(&(i, j)).is_ok()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "classes": self.classes.iter().map(|c| &c.representative).collect::<Vec<_>>(),
            "leq_pairs": self.leq_pairs.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        })
    }
}

/// All distinct rearrangements of `d`, in decreasing lexicographic order.
pub fn orbit(d: &GlWeight) -> Vec<GlWeight> {
    let set: BTreeSet<Vec<i64>> = d.0.iter().copied().permutations(d.len()).collect();
    set.into_iter().rev().map(GlWeight).collect()
}

pub fn xi_classes(d: &GlWeight, levi: &[usize]) -> Result<XiPoset> {
    check_levi(levi, d.len())?;
    let mut reps = BTreeSet::new();
    for a in orbit(d) {
        reps.insert(levi_rep(&a, levi)?);
    }
    let reps: Vec<GlWeight> = reps.into_iter().rev().collect();
    let mut leq_pairs = Vec::new();
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            if dominance_leq(a, b)? {
                leq_pairs.push((i, j));
            }
        }
    }
    let index = reps.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let classes = reps
        .into_iter()
        .map(|representative| XiClass { representative, levi: levi.to_vec() })
        .collect();
    Ok(XiPoset { levi: levi.to_vec(), classes, leq_pairs, index })
}

/// All compositions of `n` with positive parts, lexicographic.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All of `I^n` for `I = {1..k}`, lexicographic.
pub fn all_labels(n: usize, k: usize) -> Vec<GlWeight> {
    (0..n)
        .map(|_| 1..=k as i64)
        .multi_cartesian_product()
        .map(GlWeight)
        .collect()
}

/// Shift of the graded adjunction between `F_i` and `E_i` on the block of
/// `d`: `c_{d,i} - c_{d,i+1} + 1`.
pub fn adjunction_shift(d: &GlWeight, i: i64) -> i64 {
    count_c(d, i) - count_c(d, i + 1) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[i64]) -> GlWeight {
        GlWeight(v.to_vec())
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(1), g(&[0]));
        assert_eq!(rho(3), g(&[0, -1, -2]));
        assert_eq!(rho(4), g(&[0, -1, -2, -3]));
    }

    #[test]
    fn dominance_predicates() {
        assert!(is_dominant(&g(&[3, 2, 1])));
        assert!(!is_dominant(&g(&[1, 2])));
        assert_eq!(dominant_rep(&g(&[1, 2])), g(&[2, 1]));
        assert!(!is_dominant(&g(&[2, 2])));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&g(&[1, 1, 2]), 3).unwrap(), SlkWeight(vec![2, 1, 0]));
        assert_eq!(phi(&g(&[]), 3).unwrap(), SlkWeight::zero(3));
        assert!(phi(&g(&[4]), 3).is_err());
    }

    #[test]
    fn plus_minus_examples() {
        assert_eq!(plus_i(&g(&[2, 1]), 2), Some(g(&[3, 1])));
        assert_eq!(plus_i(&g(&[2, 2]), 1), None);
        assert_eq!(minus_i(&g(&[3, 1]), 2), Some(g(&[2, 1])));
    }

    #[test]
    fn count_and_casimir() {
        assert_eq!(count_c(&g(&[1, 1, 2]), 1), 2);
        assert_eq!(count_c(&g(&[1, 1, 2]), 3), 0);
        assert_eq!(casimir_eigenvalue(&g(&[3, 1, 1]), 1).unwrap(), 3);
        assert_eq!(casimir_eigenvalue(&g(&[0, 0]), 2).unwrap(), 0);
        assert!(casimir_eigenvalue(&g(&[0]), 2).is_err());
    }

    #[test]
    fn gl_dominance_examples() {
        assert!(dominance_leq(&g(&[1, 2]), &g(&[1, 2])).unwrap());
        assert!(dominance_leq(&g(&[1, 2]), &g(&[2, 1])).unwrap());
        assert!(!dominance_leq(&g(&[2, 1]), &g(&[1, 2])).unwrap());
        assert!(!dominance_leq(&g(&[1, 1]), &g(&[2, 1])).unwrap());
        assert!(dominance_leq(&g(&[1]), &g(&[1, 2])).is_err());
    }

    #[test]
    fn inverse_dominance_examples() {
        let nu = [SlkWeight(vec![0, 1]), SlkWeight(vec![1, 0])];
        let nu2 = [SlkWeight(vec![1, 0]), SlkWeight(vec![0, 1])];
        assert!(inverse_dominance_leq(&nu, &nu).unwrap());
        assert!(!inverse_dominance_leq(&nu, &nu2).unwrap());
        assert!(inverse_dominance_leq(&nu2, &nu).unwrap());
        let other = [SlkWeight(vec![1, 0]), SlkWeight(vec![1, 0])];
        assert!(!inverse_dominance_leq(&nu, &other).unwrap());
    }

    #[test]
    fn xi_examples() {
        let full = xi_classes(&g(&[2, 1, 1]), &[3]).unwrap();
        assert_eq!(full.classes.len(), 1);
        let p = xi_classes(&g(&[2, 1]), &[1, 1]).unwrap();
        let reps: Vec<_> = p.classes.iter().map(|c| c.representative.clone()).collect();
        assert_eq!(reps, vec![g(&[2, 1]), g(&[1, 2])]);
        assert!(p.leq(1, 0) && !p.leq(0, 1));
        assert_eq!(p.project(&g(&[1, 2])), Some(1));
        assert_eq!(
            p.to_json().to_string(),
            r#"{"classes":[[2,1],[1,2]],"leq_pairs":[[0,0],[1,0],[1,1]]}"#
        );
        assert!(xi_classes(&g(&[2, 1]), &[1]).is_err());
    }

    #[test]
    fn trivial_levi_gives_orbit() {
        let d = g(&[3, 2, 2, 1]);
        let p = xi_classes(&d, &[1, 1, 1, 1]).unwrap();
        assert_eq!(p.classes.len(), orbit(&d).len());
    }

    #[test]
    fn partition_weight() {
        let lam = Partition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(SlkWeight::of_partition(&lam, 3), SlkWeight(vec![3, 1, 0]));
        assert_eq!(SlkWeight::of_partition(&lam, 3).root_pairings(), vec![2, 1]);
    }

    #[test]
    fn label_and_composition_counts() {
        assert_eq!(all_labels(3, 2).len(), 8);
        assert_eq!(all_labels(0, 2), vec![g(&[])]);
        assert_eq!(compositions(4).len(), 8);
    }
}
