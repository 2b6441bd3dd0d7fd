//! Mazurkiewicz traces over an independence alphabet.
//!
//! Symbols are plain indices `0..n` into an [`Independence`] relation; the
//! numeric order of the indices is the letter order. A [`Trace`] stores the
//! lexicographic normal form of its class, so two traces of the same
//! monoid are equal exactly when their stored words are equal.

use std::cmp::Ordering;
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::alphabet::Independence;

pub type Symbol = usize;

/// Fixed-size bit set used for reachability in dependence graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    blocks: Vec<u64>,
}

impl BitSet {
    pub(crate) fn new(len: usize) -> Self {
        BitSet {
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }
}

/// Dependence graph of a word: vertex `i` carries the `i`-th letter and
/// there is an arc `i → j` iff `i < j` and the two labels are dependent.
/// Vertices are numbered from `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceGraph {
    pub labels: Vec<Symbol>,
    pub arcs: Vec<(usize, usize)>,
}

impl DependenceGraph {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `reach[i]` holds every `j` with a non-empty path `i → … → j`.
    pub(crate) fn reachability(&self) -> Vec<BitSet> {
        let n = self.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(i, j) in &self.arcs {
            succ[i].push(j);
        }
        let mut reach = vec![BitSet::new(n); n];
        for i in (0..n).rev() {
            for &j in &succ[i] {
                let (head, tail) = reach.split_at_mut(j);
                head[i].insert(j);
                head[i].union_with(&tail[0]);
            }
        }
        reach
    }

    /// Vertices without outgoing arcs.
    pub fn maximal_vertices(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.len()];
        for &(i, _) in &self.arcs {
            has_out[i] = true;
        }
        (0..self.len()).filter(|&i| !has_out[i]).collect()
    }
}

/// Element of the trace monoid, stored as its lexicographic normal form.
///
/// Ordered by length first, then lexicographically, which is the order
/// used whenever sets of traces are listed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Trace {
    word: Vec<Symbol>,
}

impl Trace {
    pub fn empty() -> Self {
        Trace { word: Vec::new() }
    }

    /// The canonical representative.
    pub fn symbols(&self) -> &[Symbol] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn alphabet(&self) -> BTreeSet<Symbol> {
        self.word.iter().copied().collect()
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.word
    }
}

impl Ord for Trace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Trace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The free partially commutative monoid `M(Σ, I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceMonoid {
    independence: Independence,
    /// `dependents[a]` as a bit mask, when the alphabet has at most 64
    /// letters.
    dependents: Option<Vec<u64>>,
}

impl TraceMonoid {
    pub fn new(independence: Independence) -> Self {
        let n = independence.size();
        let dependents = (n <= 64).then(|| {
            (0..n)
                .map(|a| {
                    (0..n)
                        .filter(|&b| independence.dependent(a, b))
                        .fold(0, |m, b| m | 1 << b)
                })
                .collect()
        });
        TraceMonoid {
            independence,
            dependents,
        }
    }

    pub fn independence(&self) -> &Independence {
        &self.independence
    }

    pub fn rank(&self) -> usize {
        self.independence.size()
    }

    pub fn dependent(&self, a: Symbol, b: Symbol) -> bool {
        self.independence.dependent(a, b)
    }

    pub fn dependence_graph(&self, word: &[Symbol]) -> DependenceGraph {
        let mut arcs = Vec::new();
        for j in 0..word.len() {
            for i in 0..j {
                if self.dependent(word[i], word[j]) {
                    arcs.push((i, j));
                }
            }
        }
        DependenceGraph {
            labels: word.to_vec(),
            arcs,
        }
    }

    /// The trace of `word`.
    pub fn trace(&self, word: &[Symbol]) -> Trace {
        Trace {
            word: self.lex_normal_form_of_word(word, None),
        }
    }

    pub fn concat(&self, left: &Trace, right: &Trace) -> Trace {
        let mut word = left.word.clone();
        word.extend_from_slice(&right.word);
        self.trace(&word)
    }

    /// Least linearisation of the dependence graph, emitting at every step
    /// the smallest label among the currently minimal vertices. `rank`
    /// overrides the letter order (`rank[a] < rank[b]` means `a < b`).
    fn lex_normal_form_of_word(&self, word: &[Symbol], rank: Option<&[usize]>) -> Vec<Symbol> {
        if let Some(dependents) = &self.dependents {
            return lex_normal_form_small(dependents, word, rank);
        }
        let n = word.len();
        let key = |s: Symbol| rank.map_or(s, |r| r[s]);
        // Arcs to the next dependent occurrence suffice: the transitive
        // closure is unchanged and every vertex has at most |Σ| successors.
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        let mut last_seen: Vec<Option<usize>> = vec![None; self.rank()];
        for (j, &b) in word.iter().enumerate() {
            for (a, slot) in last_seen.iter().enumerate() {
                if let Some(i) = *slot {
                    if self.dependent(a, b) {
                        succ[i].push(j);
                        indegree[j] += 1;
                    }
                }
            }
            last_seen[b] = Some(j);
        }
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..n)
            .filter(|&i| indegree[i] == 0)
            .map(|i| Reverse((key(word[i]), i)))
            .collect();
        let mut out = Vec::with_capacity(n);
        while let Some(Reverse((_, i))) = heap.pop() {
            out.push(word[i]);
            for &j in &succ[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    heap.push(Reverse((key(word[j]), j)));
                }
            }
        }
        out
    }

    /// Lexicographic normal form of `t` under an arbitrary letter order,
    /// given as `rank[a]` for each symbol `a`.
    pub fn lex_normal_form(&self, t: &Trace, rank: &[usize]) -> Vec<Symbol> {
        self.lex_normal_form_of_word(&t.word, Some(rank))
    }

    /// `DG(t)` reduced to its covering arcs.
    pub fn hasse_diagram(&self, t: &Trace) -> DependenceGraph {
        let dg = self.dependence_graph(&t.word);
        let reach = dg.reachability();
        let arcs = dg
            .arcs
            .iter()
            .copied()
            .filter(|&(i, j)| !(i + 1..j).any(|k| reach[i].contains(k) && reach[k].contains(j)))
            .collect();
        DependenceGraph {
            labels: dg.labels,
            arcs,
        }
    }

    /// Exactly one maximal vertex. The empty trace has none.
    pub fn is_prime(&self, t: &Trace) -> bool {
        self.dependence_graph(&t.word).maximal_vertices().len() == 1
    }

    /// All prime prefixes, one per vertex of `DG(t)`: the down-set of the
    /// vertex, read in position order. Sorted by length, then lex.
    pub fn prime_prefixes(&self, t: &Trace) -> Vec<Trace> {
        self.prime_prefixes_of_word(&t.word)
    }

    pub(crate) fn prime_prefixes_of_word(&self, word: &[Symbol]) -> Vec<Trace> {
        let dg = self.dependence_graph(word);
        let reach = dg.reachability();
        let n = word.len();
        let mut out: BTreeSet<Trace> = BTreeSet::new();
        for v in 0..n {
            let down: Vec<Symbol> = (0..=v)
                .filter(|&u| u == v || reach[u].contains(v))
                .map(|u| word[u])
                .collect();
            out.insert(self.trace(&down));
        }
        out.into_iter().collect()
    }

    /// Whether `prefix · x = t` for some trace `x`.
    pub fn is_prefix(&self, prefix: &Trace, t: &Trace) -> bool {
        // Greedily match each letter of the prefix with the first unused
        // occurrence in t; the matched set must be downward closed.
        let dg = self.dependence_graph(&t.word);
        let reach = dg.reachability();
        let mut used = vec![false; t.len()];
        for &a in &prefix.word {
            match (0..t.len()).find(|&i| !used[i] && t.word[i] == a) {
                Some(i) => used[i] = true,
                None => return false,
            }
        }
        (0..t.len()).all(|j| !used[j] || (0..j).all(|i| used[i] || !reach[i].contains(j)))
            && self.trace(&(0..t.len()).filter(|&i| used[i]).map(|i| t.word[i]).collect::<Vec<_>>()) == *prefix
    }
}

/// Same linearisation with letter sets as `u64` masks: a remaining
/// position is minimal iff no earlier remaining letter depends on it.
fn lex_normal_form_small(dependents: &[u64], word: &[Symbol], rank: Option<&[usize]>) -> Vec<Symbol> {
    let key = |s: Symbol| rank.map_or(s, |r| r[s]);
    let mut remaining: Vec<Symbol> = word.to_vec();
    let mut out = Vec::with_capacity(word.len());
    while !remaining.is_empty() {
        let mut blocked = 0u64;
        let mut best: Option<usize> = None;
        for (i, &a) in remaining.iter().enumerate() {
            if dependents[a] & blocked == 0 && best.map_or(true, |b| key(a) < key(remaining[b])) {
                best = Some(i);
            }
            blocked |= 1 << a;
        }
        let i = best.expect("some position is minimal");
        out.push(remaining.remove(i));
    }
    out
}
