//! Permutations, the Robinson-Schensted correspondence and Knuth equivalence.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, structural, Error, Result};
use crate::partitions::Cell;
use crate::tableaux::{insert_into_rows, reverse_bump_rows, Tableau};

/// Longest word `knuth_reachable_oracle` will explore.
pub const ORACLE_MAX_LEN: usize = 8;

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    word: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            let k = x as usize;
            if k == 0 || k > n || seen[k] {
                return Err(structural!("{word:?} is not a permutation of 1..={n}"));
            }
            seen[k] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Parses `7,8,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(Permutation::identity(0));
        }
        let word = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| structural!("bad letter {t:?}: {e}"))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}

/// All of `S_n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut word: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation { word: word.clone() }];
    loop {
        // next lexicographic permutation
        let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
            return out;
        };
        let j = (i..word.len())
            .rev()
            .find(|&j| word[j] > word[i - 1])
            .unwrap();
        word.swap(i - 1, j);
        word[i..].reverse();
        out.push(Permutation { word: word.clone() });
    }
}

fn to_tableau(rows: Vec<Vec<u32>>) -> Tableau {
    Tableau::from_rows(rows).expect("RSK produces tableaux of normal shape")
}

/// Insertion tableau only.
pub fn insertion_tableau(word: &[u32]) -> Tableau {
    let mut p = Vec::new();
    for &x in word {
        insert_into_rows(&mut p, x);
    }
    to_tableau(p)
}

/// Insertion and recording tableaux of `pi`.
pub fn rsk(pi: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (k, &x) in pi.word.iter().enumerate() {
        let added = insert_into_rows(&mut p, x);
        if added.row > q.len() {
            q.push(Vec::new());
        }
        q[added.row - 1].push(k as u32 + 1);
    }
    (to_tableau(p), to_tableau(q))
}

/// Recovers the permutation from an insertion/recording pair.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if !p.is_standard() || !q.is_standard() {
        return Err(domain!("both tableaux must be standard"));
    }
    if p.shape() != q.shape() || !p.shape().is_normal() {
        return Err(domain!(
            "shapes {} and {} differ or are skew",
            p.shape(),
            q.shape()
        ));
    }
    let mut p_rows = p.normal_rows().unwrap();
    let mut q_rows = q.normal_rows().unwrap();
    let n = p.len();
    let mut word = vec![0; n];
    for k in (1..=n).rev() {
        // k is the largest label left in Q, so it sits at the end of its row.
        let row = q_rows
            .iter()
            .position(|r| r.last() == Some(&(k as u32)))
            .expect("largest label of a standard tableau is at a corner");
        let cell = Cell::new(row + 1, q_rows[row].len());
        q_rows[row].pop();
        if q_rows[row].is_empty() {
            q_rows.pop();
        }
        word[k - 1] = reverse_bump_rows(&mut p_rows, cell);
    }
    Permutation::new(word)
}

/// Every permutation one Knuth transformation away from `pi`.
pub fn knuth_neighbors(pi: &Permutation) -> BTreeSet<Permutation> {
    let w = &pi.word;
    let mut out = BTreeSet::new();
    for k in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[k], w[k + 1], w[k + 2]);
        let swap = if (b < a && a < c) || (c < a && a < b) {
            // y x z <-> y z x
            Some(k + 1)
        } else if (a < c && c < b) || (b < c && c < a) {
            // x z y <-> z x y
            Some(k)
        } else {
            None
        };
        if let Some(s) = swap {
            let mut word = w.clone();
            word.swap(s, s + 1);
            out.insert(Permutation { word });
        }
    }
    out
}

/// Knuth equivalence decided through insertion tableaux.
pub fn knuth_equivalent(pi: &Permutation, tau: &Permutation) -> Result<bool> {
    if pi.len() != tau.len() {
        return Err(domain!(
            "permutations have lengths {} and {}",
            pi.len(),
            tau.len()
        ));
    }
    Ok(insertion_tableau(&pi.word) == insertion_tableau(&tau.word))
}

/// Breadth-first closure of Knuth transformations from `pi`.
pub fn knuth_reachable_oracle(pi: &Permutation, tau: &Permutation) -> Result<bool> {
    if pi.len() > ORACLE_MAX_LEN || tau.len() > ORACLE_MAX_LEN {
        return Err(Error::Resource(format!(
            "BFS oracle limited to length {ORACLE_MAX_LEN}"
        )));
    }
    if pi.len() != tau.len() {
        return Ok(false);
    }
    let mut seen = HashSet::from([pi.clone()]);
    let mut queue = VecDeque::from([pi.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == tau {
            return Ok(true);
        }
        for next in knuth_neighbors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(w: &[u32]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!("7,8,2".parse::<Permutation>().is_err());
    }

    #[test]
    fn knuth_pair_insertion_tableaux() {
        let expected = t(&[&[1, 3, 4, 6], &[2, 8], &[5], &[7]]);
        let (p, q) = rsk(&perm(&[7, 8, 2, 3, 5, 4, 1, 6]));
        assert_eq!(p, expected);
        assert_eq!(p.shape(), q.shape());
        let (p, _) = rsk(&perm(&[7, 8, 2, 5, 3, 4, 1, 6]));
        assert_eq!(p, expected);
    }

    #[test]
    fn identity_is_one_row() {
        let (p, q) = rsk(&Permutation::identity(5));
        assert_eq!(p, t(&[&[1, 2, 3, 4, 5]]));
        assert_eq!(q, p);
    }

    #[test]
    fn inverse_examples() {
        let row = t(&[&[1, 2, 3]]);
        assert_eq!(rsk_inverse(&row, &row).unwrap(), perm(&[1, 2, 3]));
        let col = t(&[&[1], &[2]]);
        assert_eq!(rsk_inverse(&col, &col).unwrap(), perm(&[2, 1]));
        let pi = perm(&[7, 8, 2, 3, 5, 4, 1, 6]);
        let (p, q) = rsk(&pi);
        assert_eq!(rsk_inverse(&p, &q).unwrap(), pi);
        assert!(rsk_inverse(&row, &col).is_err());
        assert!(rsk_inverse(&t(&[&[1, 3]]), &t(&[&[1, 2]])).is_err());
    }

    #[test]
    fn bijection_exhaustive() {
        for n in 0..=6 {
            for pi in permutations(n) {
                let (p, q) = rsk(&pi);
                assert!(p.is_standard() && q.is_standard());
                assert_eq!(rsk_inverse(&p, &q).unwrap(), pi);
            }
        }
        assert_eq!(permutations(6).len(), 720);
    }

    #[test]
    fn neighbor_examples() {
        assert!(knuth_neighbors(&perm(&[2, 1, 3])).contains(&perm(&[2, 3, 1])));
        assert!(knuth_neighbors(&perm(&[1, 3, 2])).contains(&perm(&[3, 1, 2])));
        assert!(knuth_neighbors(&perm(&[1, 2, 3])).is_empty());
        assert!(knuth_neighbors(&perm(&[7, 8, 2, 3, 5, 4, 1, 6]))
            .contains(&perm(&[7, 8, 2, 5, 3, 4, 1, 6])));
    }

    #[test]
    fn neighbor_relation_is_symmetric() {
        for pi in permutations(5) {
            for nb in knuth_neighbors(&pi) {
                assert!(knuth_neighbors(&nb).contains(&pi));
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        assert!(knuth_equivalent(&perm(&[2, 1, 3]), &perm(&[2, 3, 1])).unwrap());
        let pi = perm(&[4, 1, 3, 2]);
        assert!(knuth_equivalent(&pi, &pi).unwrap());
        assert!(!knuth_equivalent(&perm(&[1, 2, 3]), &perm(&[3, 2, 1])).unwrap());
        assert!(knuth_equivalent(&perm(&[1, 2]), &perm(&[1, 2, 3])).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert!(knuth_reachable_oracle(&perm(&[2, 1, 3]), &perm(&[2, 3, 1])).unwrap());
        assert!(knuth_reachable_oracle(&perm(&[1, 2, 3]), &perm(&[1, 2, 3])).unwrap());
        assert!(!knuth_reachable_oracle(&perm(&[1, 2, 3]), &perm(&[2, 1, 3])).unwrap());
        let long = Permutation::identity(9);
        assert!(matches!(
            knuth_reachable_oracle(&long, &long),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn reading_word_of_standard_tableau_inserts_to_itself() {
        use crate::partitions::partitions_of;
        use crate::tableaux::enumerate_syt;
        for n in 0..=8 {
            for lam in partitions_of(n) {
                for tab in enumerate_syt(&lam).unwrap() {
                    assert_eq!(insertion_tableau(&tab.reading_word()), tab);
                }
            }
        }
    }
}
