//! Partitions and tableaux in the transposed drawing convention.
//!
//! A part `λ_c` is the height of column `c`. Columns are drawn top-aligned
//! and stored bottom-to-top, so `T^λ(a)` fills column 1 from the bottom with
//! `a_1, a_2, ...`, then column 2, and so on. Column-strict means every
//! stored column strictly decreases; the displayed rows are read at equal
//! depth from the top.

mod enumerate;
mod rs;

pub use enumerate::{
    count_semistandard, enumerate_semistandard, enumerate_semistandard_multi,
    enumerate_semistandard_of_type,
};
pub use rs::{lemma3_holds, longest_coset_rep, rs_insert};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let parts = (1..=self.max_part())
            .map(|h| self.parts.iter().filter(|&&p| p >= h).count())
            .collect();
        Self { parts }
    }

    /// The partition attached to the `sl_k` weight `Σ c_i ϖ_i`: its transpose
    /// is `(c_1+…+c_{k-1}, c_2+…+c_{k-1}, …)`. Equivalently `c_r` columns
    /// of height `r`.
    pub fn from_slk_weight(c: &[usize]) -> Self {
        let mut parts = Vec::new();
        for r in (1..=c.len()).rev() {
            parts.extend(std::iter::repeat(r).take(c[r - 1]));
        }
        Self { parts }
    }

    /// Inverse of [`Partition::from_slk_weight`] for `k - 1` coefficients.
    pub fn slk_weight(&self, k: usize) -> Result<Vec<usize>> {
        if self.max_part() >= k.max(1) {
            return Err(Error::InvalidPartition(self.parts.clone()));
        }
        let mut c = vec![0; k.saturating_sub(1)];
        for &p in &self.parts {
            c[p - 1] += 1;
        }
        Ok(c)
    }

    /// All partitions of `n`, parts in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Self> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Self { components }
    }

    /// Checks the declared total.
    pub fn of_size(components: Vec<Partition>, n: usize) -> Result<Self> {
        let got: usize = components.iter().map(Partition::size).sum();
        if got != n {
            return Err(Error::DimensionMismatch { expected: n, got });
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    shape: Partition,
    columns: Vec<Vec<i64>>,
}

impl Tableau {
    pub fn new(shape: Partition, columns: Vec<Vec<i64>>) -> Result<Self> {
        let ok = columns.len() == shape.len()
            && columns.iter().zip(shape.parts()).all(|(c, &h)| c.len() == h);
        if !ok {
            return Err(Error::InvalidTableau(format!(
                "columns {columns:?} do not match shape {shape}"
            )));
        }
        Ok(Self { shape, columns })
    }

    /// `T^λ(a)`.
    pub fn fill(shape: &Partition, a: &[i64]) -> Result<Self> {
        if a.len() != shape.size() {
            return Err(Error::DimensionMismatch {
                expected: shape.size(),
                got: a.len(),
            });
        }
        let mut columns = Vec::with_capacity(shape.len());
        let mut rest = a;
        for &h in shape.parts() {
            let (col, tail) = rest.split_at(h);
            columns.push(col.to_vec());
            rest = tail;
        }
        Ok(Self {
            shape: shape.clone(),
            columns,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Columns, each bottom-to-top.
    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn reading_word(&self) -> Vec<i64> {
        self.columns.concat()
    }

    /// Displayed row `t` (0 = top), left to right.
    pub fn row(&self, t: usize) -> Vec<i64> {
        self.columns
            .iter()
            .filter(|c| c.len() > t)
            .map(|c| c[c.len() - 1 - t])
            .collect()
    }

    pub fn is_column_strict(&self) -> bool {
        self.columns.iter().all(|c| c.windows(2).all(|w| w[0] > w[1]))
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_column_strict() && self.rows_ok(|l, r| l <= r)
    }

    pub fn is_standard(&self) -> bool {
        self.is_column_strict() && self.rows_ok(|l, r| l < r)
    }

    fn rows_ok(&self, ok: impl Fn(i64, i64) -> bool) -> bool {
        (0..self.shape.max_part()).all(|t| self.row(t).windows(2).all(|w| ok(w[0], w[1])))
    }

    /// Rows from top to bottom, for display.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.shape.max_part()).map(|t| self.row(t)).collect()
    }

    pub fn summary(&self) -> TableauSummary {
        TableauSummary {
            shape: self.shape.clone(),
            columns: self.columns.clone(),
            rows: self.rows(),
            reading_word: self.reading_word(),
            column_strict: self.is_column_strict(),
            semistandard: self.is_semistandard(),
            standard: self.is_standard(),
        }
    }
}

/// A tableau together with its rows, reading word and predicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauSummary {
    pub shape: Partition,
    pub columns: Vec<Vec<i64>>,
    pub rows: Vec<Vec<i64>>,
    pub reading_word: Vec<i64>,
    pub column_strict: bool,
    pub semistandard: bool,
    pub standard: bool,
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in self.rows() {
            let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multitableau {
    tableaux: Vec<Tableau>,
}

impl Multitableau {
    pub fn new(tableaux: Vec<Tableau>) -> Self {
        Self { tableaux }
    }

    /// Fills the components in order from one sequence.
    pub fn fill(shape: &Multipartition, a: &[i64]) -> Result<Self> {
        if a.len() != shape.size() {
            return Err(Error::DimensionMismatch {
                expected: shape.size(),
                got: a.len(),
            });
        }
        let mut rest = a;
        let mut tableaux = Vec::new();
        for p in shape.components() {
            let (head, tail) = rest.split_at(p.size());
            tableaux.push(Tableau::fill(p, head)?);
            rest = tail;
        }
        Ok(Self { tableaux })
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn reading_word(&self) -> Vec<i64> {
        self.tableaux.iter().flat_map(Tableau::reading_word).collect()
    }

    pub fn is_column_strict(&self) -> bool {
        self.tableaux.iter().all(Tableau::is_column_strict)
    }

    pub fn is_semistandard(&self) -> bool {
        self.tableaux.iter().all(Tableau::is_semistandard)
    }

    pub fn is_standard(&self) -> bool {
        self.tableaux.iter().all(Tableau::is_standard)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[4, 4, 2, 1, 1]).transpose(), p(&[5, 3, 2, 2]));
        assert_eq!(p(&[]).transpose(), p(&[]));
        assert_eq!(p(&[1, 1, 1]).transpose(), p(&[3]));
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn from_slk_weight_examples() {
        assert_eq!(Partition::from_slk_weight(&[0, 0, 0]), p(&[]));
        assert_eq!(Partition::from_slk_weight(&[0, 1, 0]), p(&[2]));
        let lam = Partition::from_slk_weight(&[2, 1]);
        assert_eq!(lam.transpose(), p(&[3, 1]));
        assert_eq!(lam, p(&[2, 1, 1]));
        assert_eq!(lam.slk_weight(3).unwrap(), vec![2, 1]);
    }

    #[test]
    fn fill_and_read() {
        let t = Tableau::fill(&p(&[3, 3, 1]), &[1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(t.columns(), &[vec![1, 2, 3], vec![4, 5, 6], vec![7]]);
        assert_eq!(t.reading_word(), vec![1, 2, 3, 4, 5, 6, 7]);
        assert!(!t.is_column_strict());
        assert!(Tableau::fill(&p(&[2]), &[1]).is_err());
    }

    #[test]
    fn example_tableau_is_column_strict_only() {
        let t = Tableau::fill(&p(&[3, 3, 2, 1]), &[3, 2, 1, 4, 3, 2, 2, 1, 3]).unwrap();
        assert_eq!(t.columns(), &[vec![3, 2, 1], vec![4, 3, 2], vec![2, 1], vec![3]]);
        assert!(t.is_column_strict());
        assert_eq!(t.row(0), vec![1, 2, 1, 3]);
        assert!(!t.is_semistandard());
    }

    #[test]
    fn highest_tableau_is_semistandard() {
        let t = Tableau::new(p(&[2, 2]), vec![vec![2, 1], vec![2, 1]]).unwrap();
        assert!(t.is_semistandard());
        assert!(!t.is_standard());
        let bad = Tableau::new(p(&[2]), vec![vec![1, 1]]).unwrap();
        assert!(!bad.is_column_strict());
    }

    #[test]
    fn json_shape() {
        let t = Tableau::fill(&p(&[2, 1]), &[2, 1, 1]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":[2,1],"columns":[[2,1],[1]]}"#);
    }

    #[test]
    fn partitions_of_four() {
        let all: Vec<Vec<usize>> = Partition::all_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(all, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(Partition::all_of(0).len(), 1);
    }
}
