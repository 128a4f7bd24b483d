use std::collections::BTreeMap;

use super::{Multipartition, Multitableau, Partition, Tableau};

/// Where each reading-word position sits: (column, index from bottom).
fn cells(shape: &Partition) -> Vec<(usize, usize)> {
    shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(c, &h)| (0..h).map(move |j| (c, j)))
        .collect()
}

struct Search<'a> {
    shape: &'a Partition,
    cells: Vec<(usize, usize)>,
    values: Vec<i64>,
    /// Remaining multiplicities when a type is prescribed.
    supply: Option<Vec<usize>>,
    word: Vec<i64>,
    out: Vec<Tableau>,
}

impl Search<'_> {
    fn admissible(&self, pos: usize, v: i64) -> bool {
        let (c, j) = self.cells[pos];
        let parts = self.shape.parts();
        if j > 0 && self.word[pos - 1] <= v {
            return false;
        }
        if c > 0 {
            let t = parts[c] - 1 - j;
            let start: usize = parts[..c - 1].iter().sum();
            let left = self.word[start + parts[c - 1] - 1 - t];
            if left > v {
                return false;
            }
        }
        true
    }

    fn run(&mut self, pos: usize) {
        if pos == self.cells.len() {
            let t = Tableau::fill(self.shape, &self.word).expect("shape-sized word");
            self.out.push(t);
            return;
        }
        for idx in 0..self.values.len() {
            let v = self.values[idx];
            if let Some(s) = &self.supply {
                if s[idx] == 0 {
                    continue;
                }
            }
            if !self.admissible(pos, v) {
                continue;
            }
            if let Some(s) = self.supply.as_mut() {
                s[idx] -= 1;
            }
            self.word.push(v);
            self.run(pos + 1);
            self.word.pop();
            if let Some(s) = self.supply.as_mut() {
                s[idx] += 1;
            }
        }
    }
}

fn search(shape: &Partition, values: Vec<i64>, supply: Option<Vec<usize>>) -> Vec<Tableau> {
    let mut s = Search {
        shape,
        cells: cells(shape),
        values,
        supply,
        word: Vec::with_capacity(shape.size()),
        out: Vec::new(),
    };
    s.run(0);
    s.out
}

/// `St^λ(I)` for `I = {1..k}`, lexicographic by reading word.
pub fn enumerate_semistandard(shape: &Partition, k: usize) -> Vec<Tableau> {
    search(shape, (1..=k as i64).collect(), None)
}

/// Semistandard multitableaux with entries in `1..k`, lexicographic by the
/// concatenated reading word.
pub fn enumerate_semistandard_multi(shape: &Multipartition, k: usize) -> Vec<Multitableau> {
    let mut acc: Vec<Vec<Tableau>> = vec![Vec::new()];
    for p in shape.components() {
        let options = enumerate_semistandard(p, k);
        acc = acc
            .iter()
            .flat_map(|prefix| {
                options.iter().map(move |t| {
                    let mut v = prefix.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(Multitableau::new).collect()
}

/// `St^λ(d)`: the semistandard `T^λ(a)` with `a` a rearrangement of `d`.
/// Returns nothing when the sizes differ.
pub fn enumerate_semistandard_of_type(shape: &Partition, d: &[i64]) -> Vec<Tableau> {
    if d.len() != shape.size() {
        return Vec::new();
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in d {
        *counts.entry(x).or_default() += 1;
    }
    let values = counts.keys().copied().collect();
    let supply = counts.values().copied().collect();
    search(shape, values, Some(supply))
}

pub fn count_semistandard(shape: &Partition, k: usize) -> usize {
    enumerate_semistandard(shape, k).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn binom(n: usize, r: usize) -> usize {
        (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn single_column_counts_subsets() {
        for k in 1..=6 {
            for r in 1..=k {
                assert_eq!(count_semistandard(&p(&[r]), k), binom(k, r));
            }
        }
    }

    #[test]
    fn empty_shape_has_one_filling() {
        assert_eq!(enumerate_semistandard(&p(&[]), 3).len(), 1);
    }

    #[test]
    fn two_boxes_in_a_row() {
        let all = enumerate_semistandard(&p(&[1, 1]), 2);
        let words: Vec<Vec<i64>> = all.iter().map(Tableau::reading_word).collect();
        assert_eq!(words, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn matches_brute_force_filter() {
        for n in 0..=5 {
            for lam in Partition::all_of(n) {
                for k in 1..=3usize {
                    let got = enumerate_semistandard(&lam, k);
                    let mut want = Vec::new();
                    let total = k.pow(n as u32);
                    for mut idx in 0..total {
                        let mut a = vec![0i64; n];
                        for x in a.iter_mut().rev() {
                            *x = (idx % k) as i64 + 1;
                            idx /= k;
                        }
                        let t = Tableau::fill(&lam, &a).unwrap();
                        if t.is_semistandard() {
                            want.push(t);
                        }
                    }
                    assert_eq!(got, want, "λ={lam} k={k}");
                }
            }
        }
    }

    #[test]
    fn of_type_examples() {
        let one = enumerate_semistandard_of_type(&p(&[2]), &[2, 1]);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].columns(), &[vec![2, 1]]);
        assert_eq!(enumerate_semistandard_of_type(&p(&[1, 1]), &[1, 1]).len(), 1);
        assert!(enumerate_semistandard_of_type(&p(&[2]), &[1, 1]).is_empty());
    }

    #[test]
    fn multi_is_product() {
        let m = Multipartition::new(vec![p(&[1]), p(&[2])]);
        let all = enumerate_semistandard_multi(&m, 3);
        assert_eq!(all.len(), 3 * 3);
        let words: Vec<Vec<i64>> = all.iter().map(Multitableau::reading_word).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }
}
