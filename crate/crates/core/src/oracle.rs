//! Brute-force ground truth by exhaustive rewriting of words.
//!
//! Coxeter kinds close a word under braid moves and deletions `aa → 1`
//! (Tits' rules); graph groups under swaps of independent letters and
//! free cancellations. The shortest words reached are exactly the
//! geodesics. Nothing here touches traces or the geometric
//! representation.

use std::collections::{BTreeSet, VecDeque};

use rustc_hash::FxHashSet;

use crate::alphabet::{CoxeterMatrix, GroupKind, GroupSpec, Independence, Word};
use crate::error::{Error, Result};

pub const DEFAULT_LENGTH_BOUND: usize = 10;
pub const DEFAULT_ALPHABET_BOUND: usize = 3;
const STATE_BOUND: usize = 5_000_000;

/// Words as letter indices; doubled-alphabet symbols for graph groups.
pub type RawWord = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub length_bound: usize,
    pub alphabet_bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            length_bound: DEFAULT_LENGTH_BOUND,
            alphabet_bound: DEFAULT_ALPHABET_BOUND,
        }
    }
}

enum Moves<'a> {
    Tits(&'a CoxeterMatrix),
    SwapCancel(&'a Independence),
}

impl Oracle {
    pub fn new(length_bound: usize, alphabet_bound: usize) -> Self {
        Oracle {
            length_bound,
            alphabet_bound,
        }
    }

    fn check(&self, rank: usize, len: usize) -> Result<()> {
        if rank > self.alphabet_bound {
            return Err(Error::BoundExceeded(format!(
                "{rank} letters, oracle limit is {}",
                self.alphabet_bound
            )));
        }
        if len > self.length_bound {
            return Err(Error::BoundExceeded(format!(
                "word of length {len}, oracle limit is {}",
                self.length_bound
            )));
        }
        Ok(())
    }

    /// All geodesics of `w` in the Coxeter group of `matrix`.
    pub fn tits_closure(&self, matrix: &CoxeterMatrix, w: &[usize]) -> Result<BTreeSet<RawWord>> {
        self.check(matrix.size(), w.len())?;
        closure(w, &Moves::Tits(matrix))
    }

    /// All geodesics of `w` in the graph group; `w` over the doubled
    /// alphabet (`2g` is generator `g`, `2g + 1` its inverse).
    pub fn swap_cancel_closure(&self, independence: &Independence, w: &[usize]) -> Result<BTreeSet<RawWord>> {
        self.check(independence.size(), w.len())?;
        closure(w, &Moves::SwapCancel(independence))
    }

    /// Every word reachable from `w` by swaps and cancellations, `w`
    /// included. All of them represent the same element as `w`.
    pub fn swap_cancel_class(&self, independence: &Independence, w: &[usize]) -> Result<Vec<RawWord>> {
        self.check(independence.size(), w.len())?;
        let seen = explore(w, &Moves::SwapCancel(independence))?;
        Ok(seen
            .into_iter()
            .map(|u| u.into_iter().map(usize::from).collect())
            .collect())
    }

    /// Geodesics of `w` for any kind; FIM words are read in the graph
    /// group.
    pub fn geodesics(&self, spec: &GroupSpec, w: &Word) -> Result<BTreeSet<RawWord>> {
        match spec.kind() {
            GroupKind::Coxeter | GroupKind::EvenCoxeter | GroupKind::Racg => {
                let matrix = spec.coxeter_matrix().expect("matrix kinds");
                self.tits_closure(&matrix, &w.generators())
            }
            GroupKind::Graph | GroupKind::Fim => {
                let independence = spec.independence().expect("graph kinds");
                self.swap_cancel_closure(independence, &w.doubled_indices())
            }
        }
    }

    pub fn length(&self, spec: &GroupSpec, w: &Word) -> Result<usize> {
        Ok(first(self.geodesics(spec, w)?).len())
    }

    /// Least geodesic in the letter order (`a < a' < b < ⋯` for graph
    /// groups).
    pub fn shortlex(&self, spec: &GroupSpec, w: &Word) -> Result<RawWord> {
        Ok(first(self.geodesics(spec, w)?))
    }

    pub fn equal(&self, spec: &GroupSpec, u: &Word, v: &Word) -> Result<bool> {
        Ok(self.geodesics(spec, u)? == self.geodesics(spec, v)?)
    }
}

fn first(set: BTreeSet<RawWord>) -> RawWord {
    set.into_iter().next().expect("closure is never empty")
}

fn closure(w: &[usize], moves: &Moves) -> Result<BTreeSet<RawWord>> {
    let seen = explore(w, moves)?;
    let shortest = seen.iter().map(Vec::len).min().unwrap_or(0);
    // `BTreeSet` on equal-length words orders lexicographically.
    Ok(seen
        .into_iter()
        .filter(|u| u.len() == shortest)
        .map(|u| u.into_iter().map(usize::from).collect())
        .collect())
}

fn explore(w: &[usize], moves: &Moves) -> Result<FxHashSet<Vec<u8>>> {
    let start: Vec<u8> = w
        .iter()
        .map(|&a| u8::try_from(a).map_err(|_| Error::BoundExceeded("letter index".into())))
        .collect::<Result<_>>()?;
    let mut seen: FxHashSet<Vec<u8>> = FxHashSet::default();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    let mut next = Vec::new();
    while let Some(word) = queue.pop_front() {
        neighbours(&word, moves, &mut next);
        for u in next.drain(..) {
            if !seen.contains(&u) {
                seen.insert(u.clone());
                if seen.len() > STATE_BOUND {
                    return Err(Error::BoundExceeded("oracle closure too large".into()));
                }
                queue.push_back(u);
            }
        }
    }
    Ok(seen)
}

fn neighbours(w: &[u8], moves: &Moves, out: &mut Vec<Vec<u8>>) {
    match moves {
        Moves::Tits(matrix) => {
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                if a == b {
                    let mut u = w[..i].to_vec();
                    u.extend_from_slice(&w[i + 2..]);
                    out.push(u);
                    continue;
                }
                let m = matrix.get(a as usize, b as usize) as usize;
                if m < 2 || i + m > w.len() {
                    continue;
                }
                let alternating = (0..m).all(|k| w[i + k] == if k % 2 == 0 { a } else { b });
                if alternating {
                    let mut u = w.to_vec();
                    for k in 0..m {
                        u[i + k] = if k % 2 == 0 { b } else { a };
                    }
                    out.push(u);
                }
            }
        }
        Moves::SwapCancel(independence) => {
            for i in 0..w.len().saturating_sub(1) {
                let (s, t) = (w[i], w[i + 1]);
                if s / 2 == t / 2 {
                    if s != t {
                        let mut u = w[..i].to_vec();
                        u.extend_from_slice(&w[i + 2..]);
                        out.push(u);
                    }
                } else if independence.contains(s as usize / 2, t as usize / 2) {
                    let mut u = w.to_vec();
                    u.swap(i, i + 1);
                    out.push(u);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::parse_group_spec;

    fn words(list: &[&[usize]]) -> BTreeSet<RawWord> {
        list.iter().map(|w| w.to_vec()).collect()
    }

    #[test]
    fn tits_examples() {
        let o = Oracle::default();
        let mut m = CoxeterMatrix::free(2);
        m.set(0, 1, 3);
        assert_eq!(
            o.tits_closure(&m, &[0, 1, 0]).unwrap(),
            words(&[&[0, 1, 0], &[1, 0, 1]])
        );
        assert_eq!(o.tits_closure(&m, &[0, 0]).unwrap(), words(&[&[]]));
        assert_eq!(o.tits_closure(&m, &[0, 1, 0, 1, 0, 1]).unwrap(), words(&[&[]]));
        let racg = CoxeterMatrix::right_angled(&Independence::from_pairs(2, &[(0, 1)]));
        assert_eq!(o.tits_closure(&racg, &[1, 0]).unwrap(), words(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn swap_cancel_examples() {
        let o = Oracle::default();
        let i = Independence::from_pairs(2, &[(0, 1)]);
        assert_eq!(o.swap_cancel_closure(&i, &[0, 1]).unwrap(), words(&[&[]]));
        assert_eq!(o.swap_cancel_closure(&i, &[0, 2, 1]).unwrap(), words(&[&[2]]));
        let free = Independence::new(2);
        assert_eq!(o.swap_cancel_closure(&free, &[0, 2]).unwrap(), words(&[&[0, 2]]));
        // a·a is not a cancellation
        assert_eq!(o.swap_cancel_closure(&free, &[0, 0]).unwrap(), words(&[&[0, 0]]));
        let mut class = o.swap_cancel_class(&i, &[0, 2, 1]).unwrap();
        class.sort();
        assert_eq!(class, vec![vec![0, 1, 2], vec![0, 2, 1], vec![2], vec![2, 0, 1]]);
    }

    #[test]
    fn spec_level_queries() {
        let o = Oracle::default();
        let spec = parse_group_spec("kind = coxeter\nletters = a b\nm a b 3\n").unwrap();
        let w = |s: &str| spec.parse_word(s).unwrap();
        assert_eq!(o.shortlex(&spec, &w("bab")).unwrap(), vec![0, 1, 0]);
        assert!(o.shortlex(&spec, &w("aa")).unwrap().is_empty());
        assert!(o.equal(&spec, &w("aba"), &w("bab")).unwrap());
        assert!(!o.equal(&spec, &w("a"), &w("b")).unwrap());
        assert!(o.equal(&spec, &w("aa"), &w("1")).unwrap());
        assert_eq!(o.length(&spec, &w("abab")).unwrap(), 2);

        let spec = parse_group_spec("kind = graph\nletters = a b\nedge a b\n").unwrap();
        let w = |s: &str| spec.parse_word(s).unwrap();
        assert_eq!(o.shortlex(&spec, &w("b.a")).unwrap(), vec![0, 2]);
    }

    #[test]
    fn bounds_are_enforced() {
        let o = Oracle::default();
        let m = CoxeterMatrix::free(2);
        assert!(matches!(o.tits_closure(&m, &[0; 11]), Err(Error::BoundExceeded(_))));
        assert!(matches!(
            o.tits_closure(&CoxeterMatrix::free(4), &[0]),
            Err(Error::BoundExceeded(_))
        ));
        assert!(Oracle::new(12, 4).tits_closure(&m, &[0; 11]).is_ok());
    }

    #[test]
    fn geodesics_share_length_and_alphabet() {
        let o = Oracle::default();
        let mut m = CoxeterMatrix::free(3);
        m.set(0, 1, 4);
        m.set(1, 2, 3);
        let w = [0, 1, 2, 1, 0, 1, 2, 0];
        let set = o.tits_closure(&m, &w).unwrap();
        let alpha: Vec<BTreeSet<usize>> = set.iter().map(|u| u.iter().copied().collect()).collect();
        assert!(alpha.windows(2).all(|p| p[0] == p[1]));
        assert!(set.iter().all(|u| u.len() == set.iter().next().unwrap().len()));
    }
}
