use std::collections::BTreeSet;

use itertools::Itertools;

use super::{Partition, Tableau};
use crate::error::{Error, Result};

/// Classical row-inserted tableau (rows top to bottom, left-justified) to the
/// column convention: classical column `c` read upwards becomes stored
/// column `c`.
fn from_rows(rows: &[Vec<i64>]) -> Tableau {
    let width = rows.first().map_or(0, Vec::len);
    let columns: Vec<Vec<i64>> = (0..width)
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).rev().collect())
        .collect();
    let shape = Partition::new(columns.iter().map(Vec::len).collect()).expect("RS shape");
    Tableau::new(shape, columns).expect("RS columns")
}

/// Robinson–Schensted row insertion. Returns the insertion and recording
/// tableaux; the recording tableau holds positions `1..=n`.
pub fn rs_insert(w: &[i64]) -> Result<(Tableau, Tableau)> {
    let mut seen = BTreeSet::new();
    for &x in w {
        if !seen.insert(x) {
            return Err(Error::RepeatedEntry(x));
        }
    }
    let mut p: Vec<Vec<i64>> = Vec::new();
    let mut q: Vec<Vec<i64>> = Vec::new();
    for (pos, &x) in w.iter().enumerate() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![pos as i64 + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(j) => {
                    x = std::mem::replace(&mut p[r][j], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(pos as i64 + 1);
                    break;
                }
            }
        }
    }
    Ok((from_rows(&p), from_rows(&q)))
}

fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &x) in w.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// `(w·d)_i = d_{w^{-1}(i)}`.
fn act(w: &[usize], d: &[i64]) -> Vec<i64> {
    inverse(w).iter().map(|&j| d[j]).collect()
}

/// The longest among the minimal-length representatives of the cosets
/// `S_λ w`, with `S_λ` permuting positions within each column of `λ`.
/// Permutations are 0-based images.
pub fn longest_coset_rep(shape: &Partition) -> Vec<usize> {
    let n = shape.size();
    let mut block = Vec::with_capacity(n);
    for (c, &h) in shape.parts().iter().enumerate() {
        block.extend(std::iter::repeat(c).take(h));
    }
    // s_i w is longer than w iff i comes before i+1 in w^{-1}
    (0..n)
        .permutations(n)
        .filter(|w| {
            let inv = inverse(w);
            (0..n.saturating_sub(1))
                .filter(|&i| block[i] == block[i + 1])
                .all(|i| inv[i] < inv[i + 1])
        })
        .max_by_key(|w| inversions(w))
        .unwrap_or_default()
}

/// For a strictly decreasing `d` of length `|λ|`, checks over all of `S_n`
/// that `T^λ(w·d)` is standard exactly when `w·d` has the same recording
/// tableau as `w_λ·d`.
pub fn lemma3_holds(shape: &Partition, d: &[i64]) -> Result<bool> {
    let n = shape.size();
    if d.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: d.len() });
    }
    let target = rs_insert(&act(&longest_coset_rep(shape), d))?.1;
    for w in (0..n).permutations(n) {
        let a = act(&w, d);
        let standard = Tableau::fill(shape, &a)?.is_standard();
        let same = rs_insert(&a)?.1 == target;
        if standard != same {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn increasing_word_is_one_row() {
        let (t, r) = rs_insert(&[1, 2, 3]).unwrap();
        assert_eq!(t.shape(), &p(&[1, 1, 1]));
        assert_eq!(t.rows(), vec![vec![1, 2, 3]]);
        assert_eq!(r.rows(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn decreasing_word_is_one_column() {
        let (t, r) = rs_insert(&[3, 2, 1]).unwrap();
        assert_eq!(t.shape(), &p(&[3]));
        assert_eq!(t.columns(), &[vec![3, 2, 1]]);
        assert!(t.is_standard() && r.is_standard());
    }

    #[test]
    fn hand_example() {
        // 2 5 1 3 4: P rows [1 3 4],[2 5]; Q rows [1 2 5],[3 4]
        let (t, r) = rs_insert(&[2, 5, 1, 3, 4]).unwrap();
        assert_eq!(t.rows(), vec![vec![1, 3, 4], vec![2, 5]]);
        assert_eq!(r.rows(), vec![vec![1, 2, 5], vec![3, 4]]);
    }

    #[test]
    fn repeated_entries_rejected() {
        assert_eq!(rs_insert(&[1, 1]), Err(Error::RepeatedEntry(1)));
    }

    #[test]
    fn coset_rep_extremes() {
        assert_eq!(longest_coset_rep(&p(&[3])), vec![0, 1, 2]);
        assert_eq!(longest_coset_rep(&p(&[1, 1, 1])), vec![2, 1, 0]);
    }

    #[test]
    fn superstandard_word() {
        let d = [5, 4, 3, 2, 1];
        let lam = p(&[3, 2]);
        let a = act(&longest_coset_rep(&lam), &d);
        assert_eq!(a, vec![3, 2, 1, 5, 4]);
    }

    #[test]
    fn lemma3_small() {
        for n in 1..=4usize {
            let d: Vec<i64> = (1..=n as i64).rev().collect();
            for lam in Partition::all_of(n) {
                assert!(lemma3_holds(&lam, &d).unwrap(), "λ={lam}");
            }
        }
    }
}
