//! Length-reducing trace rewriting.
//!
//! [`TraceRewritingSystem::coxeter`] builds `{a·a → 1}` over `M(Σ, I)`,
//! whose irreducible traces are the Coxeter-traces of the right-angled
//! Coxeter group. [`TraceRewritingSystem::graph_group`] builds
//! `{a·a' → 1, a'·a → 1}` over the doubled alphabet, whose irreducible
//! traces are the reduced elements of the graph group. Both are confluent.
//!
//! Arbitrary systems are accepted as well, but [`TraceRewritingSystem::reduce`]
//! only returns *the* normal form when the caller's system is confluent and
//! terminating; otherwise it returns *some* irreducible descendant.

use crate::alphabet::{ExtendedIndependence, Independence};
use crate::error::{Error, Result};
use crate::traces::{Symbol, Trace, TraceMonoid};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub left: Trace,
    pub right: Trace,
}

#[derive(Debug, Clone)]
pub struct TraceRewritingSystem {
    monoid: TraceMonoid,
    rules: Vec<Rule>,
    /// Set when every rule is `a · partner(a) → 1` for a symmetric
    /// pairing compatible with the independence relation. Reduction then
    /// works by cancelling pairs.
    partner: Option<Vec<Symbol>>,
}

impl TraceRewritingSystem {
    pub fn new(monoid: TraceMonoid, rules: Vec<Rule>) -> Result<Self> {
        if rules.iter().any(|r| r.left.len() <= r.right.len()) {
            return Err(Error::NotLengthReducing);
        }
        let partner = cancellation_pairing(&monoid, &rules);
        Ok(TraceRewritingSystem { monoid, rules, partner })
    }

    /// `S_C = {a² → 1 | a ∈ Σ}`.
    pub fn coxeter(independence: Independence) -> Self {
        let monoid = TraceMonoid::new(independence);
        let rules = (0..monoid.rank())
            .map(|a| Rule {
                left: monoid.trace(&[a, a]),
                right: Trace::empty(),
            })
            .collect();
        TraceRewritingSystem::new(monoid, rules).expect("a² → 1 is length-reducing")
    }

    /// `S_G = {a·a' → 1 | a ∈ Γ}` over `M(Γ, I_Γ)`.
    pub fn graph_group(extended: &ExtendedIndependence) -> Self {
        let monoid = TraceMonoid::new(extended.relation().clone());
        let rules = (0..monoid.rank())
            .map(|a| Rule {
                left: monoid.trace(&[a, ExtendedIndependence::partner(a)]),
                right: Trace::empty(),
            })
            .collect();
        TraceRewritingSystem::new(monoid, rules).expect("a·a' → 1 is length-reducing")
    }

    pub fn monoid(&self) -> &TraceMonoid {
        &self.monoid
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// The irreducible descendant of `t`.
    pub fn reduce(&self, t: &Trace) -> Trace {
        self.reduce_word(t.symbols())
    }

    /// Reduces the trace of `word`.
    pub fn reduce_word(&self, word: &[Symbol]) -> Trace {
        match &self.partner {
            Some(partner) => {
                let mut reducer = Reducer::new(&self.monoid, partner);
                for &a in word {
                    reducer.push(a);
                }
                self.monoid.trace(&reducer.word)
            }
            None => self.reduce_generic(self.monoid.trace(word)),
        }
    }

    /// Normal forms of every prefix `a_1 ⋯ a_i`, `i = 1..=n`.
    pub fn reduce_prefixes(&self, word: &[Symbol]) -> Vec<Trace> {
        match &self.partner {
            Some(partner) => {
                let mut reducer = Reducer::new(&self.monoid, partner);
                word.iter()
                    .map(|&a| {
                        reducer.push(a);
                        self.monoid.trace(&reducer.word)
                    })
                    .collect()
            }
            None => (1..=word.len()).map(|i| self.reduce_word(&word[..i])).collect(),
        }
    }

    pub fn is_irreducible(&self, t: &Trace) -> bool {
        match &self.partner {
            Some(partner) => find_cancellation(&self.monoid, partner, t.symbols()).is_none(),
            None => self
                .rules
                .iter()
                .all(|r| find_factor(&self.monoid, t, &r.left).is_none()),
        }
    }

    fn reduce_generic(&self, mut t: Trace) -> Trace {
        'outer: loop {
            for rule in &self.rules {
                if let Some((before, after)) = find_factor(&self.monoid, &t, &rule.left) {
                    let mut word = before;
                    word.extend_from_slice(rule.right.symbols());
                    word.extend(after);
                    t = self.monoid.trace(&word);
                    continue 'outer;
                }
            }
            return t;
        }
    }
}

fn cancellation_pairing(monoid: &TraceMonoid, rules: &[Rule]) -> Option<Vec<Symbol>> {
    let n = monoid.rank();
    let mut partner: Vec<Option<Symbol>> = vec![None; n];
    for rule in rules {
        if !rule.right.is_empty() || rule.left.len() != 2 {
            return None;
        }
        let (a, b) = (rule.left.symbols()[0], rule.left.symbols()[1]);
        for (x, y) in [(a, b), (b, a)] {
            match partner[x] {
                Some(p) if p != y => return None,
                _ => partner[x] = Some(y),
            }
        }
    }
    // Require both orientations as rules, a dependent pair, and
    // I(a) = I(partner(a)).
    let partner: Vec<Symbol> = partner.into_iter().collect::<Option<Vec<_>>>()?;
    for a in 0..n {
        let p = partner[a];
        if !monoid.dependent(a, p) || (0..n).any(|c| monoid.dependent(a, c) != monoid.dependent(p, c)) {
            return None;
        }
        let lhs = monoid.trace(&[a, p]);
        if !rules.iter().any(|r| r.left == lhs) {
            return None;
        }
    }
    Some(partner)
}

/// Incremental pair cancellation. `word` stays irreducible after each
/// push: appending `b` to an irreducible word can create at most one
/// redex, namely with the last `partner(b)` that is followed only by
/// letters independent of `b`.
struct Reducer<'a> {
    monoid: &'a TraceMonoid,
    partner: &'a [Symbol],
    word: Vec<Symbol>,
}

impl<'a> Reducer<'a> {
    fn new(monoid: &'a TraceMonoid, partner: &'a [Symbol]) -> Self {
        Reducer {
            monoid,
            partner,
            word: Vec::new(),
        }
    }

    fn push(&mut self, b: Symbol) {
        let target = self.partner[b];
        for i in (0..self.word.len()).rev() {
            let c = self.word[i];
            if c == target {
                self.word.remove(i);
                return;
            }
            if self.monoid.dependent(b, c) {
                break;
            }
        }
        self.word.push(b);
    }
}

/// Leftmost factor `a · v · partner(a)` with `α(v) ⊆ I(a)` in `word`.
fn find_cancellation(monoid: &TraceMonoid, partner: &[Symbol], word: &[Symbol]) -> Option<(usize, usize)> {
    for i in 0..word.len() {
        let a = word[i];
        for j in i + 1..word.len() {
            if word[j] == partner[a] {
                return Some((i, j));
            }
            if monoid.dependent(a, word[j]) {
                break;
            }
        }
    }
    None
}

/// Looks for `t = u · factor · v`; returns representatives of `u` and `v`.
///
/// A factor occurrence is a convex vertex set of `DG(t)` whose induced
/// trace equals `factor`. Exhaustive over vertex subsets with the right
/// letter counts, so meant for short rule sides.
fn find_factor(monoid: &TraceMonoid, t: &Trace, factor: &Trace) -> Option<(Vec<Symbol>, Vec<Symbol>)> {
    let word = t.symbols();
    let k = factor.len();
    if k == 0 {
        return Some((Vec::new(), word.to_vec()));
    }
    let dg = monoid.dependence_graph(word);
    let reach = dg.reachability();
    let mut need = vec![0usize; monoid.rank()];
    for &a in factor.symbols() {
        need[a] += 1;
    }

    fn choose(
        word: &[Symbol],
        start: usize,
        need: &mut [usize],
        left: usize,
        chosen: &mut Vec<usize>,
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if left == 0 {
            return accept(chosen);
        }
        for i in start..word.len() {
            if need[word[i]] == 0 {
                continue;
            }
            need[word[i]] -= 1;
            chosen.push(i);
            let found = choose(word, i + 1, need, left - 1, chosen, accept);
            chosen.pop();
            need[word[i]] += 1;
            if found {
                return true;
            }
        }
        false
    }

    let mut result = None;
    let mut accept = |chosen: &[usize]| -> bool {
        let inside = |v: usize| chosen.contains(&v);
        let convex = (0..word.len()).all(|x| {
            inside(x) || !(chosen.iter().any(|&p| reach[p].contains(x)) && chosen.iter().any(|&q| reach[x].contains(q)))
        });
        if !convex {
            return false;
        }
        let induced: Vec<Symbol> = chosen.iter().map(|&i| word[i]).collect();
        if monoid.trace(&induced) != *factor {
            return false;
        }
        let below = |x: usize| !inside(x) && chosen.iter().any(|&q| reach[x].contains(q));
        let before = (0..word.len()).filter(|&x| below(x)).map(|x| word[x]).collect();
        let after = (0..word.len())
            .filter(|&x| !inside(x) && !below(x))
            .map(|x| word[x])
            .collect();
        result = Some((before, after));
        true
    };
    choose(word, 0, &mut need, k, &mut Vec::new(), &mut accept);
    result
}
