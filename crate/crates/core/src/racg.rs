//! Right-angled Coxeter groups and graph groups.
//!
//! In a right-angled group the geometric representation is integral:
//! `σ_a(a) = −a`, `σ_a(b) = b + 2a` for dependent `b ≠ a` and `σ_a(b) = b`
//! for independent `b`. A hidden letter `x` depending on everything
//! reveals the alphabet of the Coxeter-trace of `w` as the support of
//! `σ_w(x)`. Shortlex normal forms come from one elimination pass per
//! letter; graph groups embed via `a ↦ a·a'`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::alphabet::{ExtendedIndependence, GroupKind, GroupSpec, Independence, Letter, Word};
use crate::error::{Error, Result};
use crate::traces::{Symbol, Trace, TraceMonoid};

/// Coefficients of `σ_w(d)`; index `rank` is the hidden letter.
pub type IntVector = Vec<BigInt>;

#[derive(Debug, Clone)]
pub struct RightAngledCoxeter {
    monoid: TraceMonoid,
    /// `links[a * (n + 1) + b]`: `b ≠ a` and `σ_a` moves `b`, over
    /// `Σ ∪ {x}`.
    links: Vec<bool>,
}

impl RightAngledCoxeter {
    pub fn new(independence: Independence) -> Self {
        let n = independence.size();
        let links = (0..=n)
            .flat_map(|a| (0..=n).map(move |b| (a, b)))
            .map(|(a, b)| a != b && (a == n || b == n || independence.dependent(a, b)))
            .collect();
        RightAngledCoxeter {
            monoid: TraceMonoid::new(independence),
            links,
        }
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        match (spec.kind(), spec.independence()) {
            (GroupKind::Racg, Some(i)) => Ok(RightAngledCoxeter::new(i.clone())),
            (kind, _) => Err(Error::KindMismatch {
                op: "right-angled normal form",
                kind,
            }),
        }
    }

    pub fn rank(&self) -> usize {
        self.monoid.rank()
    }

    pub fn monoid(&self) -> &TraceMonoid {
        &self.monoid
    }

    pub fn independence(&self) -> &Independence {
        self.monoid.independence()
    }

    /// Index of the hidden letter.
    pub fn hidden(&self) -> Symbol {
        self.rank()
    }

    fn linked(&self, a: Symbol, b: Symbol) -> bool {
        self.links[a * (self.rank() + 1) + b]
    }

    /// `σ_a` applied in place; only coordinate `a` changes.
    pub fn reflect(&self, a: Symbol, v: &mut [BigInt]) {
        let mut sum = BigInt::zero();
        for (b, vb) in v.iter().enumerate() {
            if self.linked(a, b) {
                sum += vb;
            }
        }
        v[a] = sum * 2 - &v[a];
    }

    /// Coefficients of `σ_w(d)`, `d` may be the hidden letter.
    pub fn sigma_apply(&self, word: &[Symbol], d: Symbol) -> IntVector {
        assert!(d <= self.hidden());
        let mut v = vec![BigInt::zero(); self.rank() + 1];
        v[d] = BigInt::from(1);
        for &a in word.iter().rev() {
            self.reflect(a, &mut v);
        }
        v
    }

    /// Alphabet of the Coxeter-trace of `w`.
    pub fn normal_form_alphabet(&self, word: &[Symbol]) -> BTreeSet<Symbol> {
        let v = self.sigma_apply(word, self.hidden());
        (0..self.rank()).filter(|&b| !v[b].is_zero()).collect()
    }

    /// One elimination pass: on reading `a` at position `i`, find the
    /// largest `j > i` with `w_j = a` and the window `w_{i+1} ⋯ w_{j−1}`
    /// reducing to letters independent of `a`; emit the window without
    /// its `a`s and continue after `j`.
    pub fn a_short_pass(&self, word: &[Symbol], a: Symbol) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(word.len());
        let mut buffer = Vec::new();
        let mut i = 0;
        while i < word.len() {
            if word[i] != a {
                out.push(word[i]);
                i += 1;
                continue;
            }
            let j = (i + 1..word.len())
                .rev()
                .find(|&j| word[j] == a && self.reduces_into_independent(&word[i + 1..j], a, &mut buffer));
            match j {
                Some(j) => {
                    out.extend(word[i + 1..j].iter().copied().filter(|&b| b != a));
                    i = j + 1;
                }
                None => {
                    out.push(a);
                    i += 1;
                }
            }
        }
        out
    }

    /// No factor `a·v·a` whose `v` reduces to letters independent of `a`.
    pub fn is_a_short(&self, word: &[Symbol], a: Symbol) -> bool {
        let mut buffer = Vec::new();
        let positions: Vec<usize> = (0..word.len()).filter(|&i| word[i] == a).collect();
        positions.iter().enumerate().all(|(k, &i)| {
            positions[k + 1..]
                .iter()
                .all(|&j| !self.reduces_into_independent(&word[i + 1..j], a, &mut buffer))
        })
    }

    /// Whether the support of `σ_v(x)` avoids every letter dependent on
    /// `a`. Machine integers first, big integers on overflow.
    fn reduces_into_independent(&self, window: &[Symbol], a: Symbol, buffer: &mut Vec<i64>) -> bool {
        if self.hidden_image(window, buffer) {
            return self.support_independent(buffer, a);
        }
        let mut big: Vec<BigInt> = Vec::new();
        assert!(self.hidden_image(window, &mut big));
        self.support_independent(&big, a)
    }

    /// `σ_v(x)` into `v`; `false` on overflow.
    fn hidden_image<E: Entry>(&self, window: &[Symbol], v: &mut Vec<E>) -> bool {
        v.clear();
        v.resize(self.rank() + 1, E::from_i8(0));
        v[self.hidden()] = E::from_i8(1);
        for &c in window.iter().rev() {
            let mut sum = E::from_i8(0);
            for (b, vb) in v.iter().enumerate() {
                if self.linked(c, b) && !vb.vanishes() && !sum.add_twice(vb) {
                    return false;
                }
            }
            if !(v[c].negate() && v[c].add(&sum)) {
                return false;
            }
        }
        true
    }

    fn support_independent<E: Entry>(&self, v: &[E], a: Symbol) -> bool {
        (0..self.rank()).all(|b| v[b].vanishes() || self.independence().contains(a, b))
    }

    /// All passes in letter order: a word whose trace is the Coxeter-trace
    /// of `w`.
    pub fn coxeter_word(&self, word: &[Symbol]) -> Vec<Symbol> {
        (0..self.rank()).fold(word.to_vec(), |w, a| self.a_short_pass(&w, a))
    }

    pub fn coxeter_trace(&self, word: &[Symbol]) -> Trace {
        self.monoid.trace(&self.coxeter_word(word))
    }

    /// Shortlex normal form for the letter order `0 < 1 < ⋯`.
    pub fn shortlex(&self, word: &[Symbol]) -> Vec<Symbol> {
        let rank: Vec<usize> = (0..self.rank()).collect();
        self.monoid.lex_normal_form(&self.coxeter_trace(word), &rank)
    }

    pub fn shortlex_word(&self, word: &Word) -> Word {
        Word::from_generators(&self.shortlex(&word.generators()))
    }
}

/// Coefficients of `σ_v(x)`: machine integers with overflow detection,
/// or big integers.
trait Entry: Clone {
    fn from_i8(v: i8) -> Self;
    fn vanishes(&self) -> bool;
    /// `false` on overflow, here and below.
    fn add(&mut self, other: &Self) -> bool;
    fn add_twice(&mut self, other: &Self) -> bool;
    fn negate(&mut self) -> bool;
}

impl Entry for i64 {
    fn from_i8(v: i8) -> Self {
        v as i64
    }

    fn vanishes(&self) -> bool {
        *self == 0
    }

    fn add(&mut self, other: &Self) -> bool {
        self.checked_add(*other).map(|v| *self = v).is_some()
    }

    fn add_twice(&mut self, other: &Self) -> bool {
        other
            .checked_mul(2)
            .and_then(|d| self.checked_add(d))
            .map(|v| *self = v)
            .is_some()
    }

    fn negate(&mut self) -> bool {
        self.checked_neg().map(|v| *self = v).is_some()
    }
}

impl Entry for BigInt {
    fn from_i8(v: i8) -> Self {
        BigInt::from(v)
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }

    fn add(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }

    fn add_twice(&mut self, other: &Self) -> bool {
        *self += other * 2;
        true
    }

    fn negate(&mut self) -> bool {
        *self = -std::mem::take(self);
        true
    }
}

/// Whether every coefficient is `≥ 0` or every coefficient is `≤ 0`.
pub fn has_uniform_sign(v: &[BigInt]) -> bool {
    !(v.iter().any(|c| c.is_positive()) && v.iter().any(|c| c.is_negative()))
}

/// Graph group `G(Σ, I)`, handled through the right-angled group over the
/// doubled alphabet.
#[derive(Debug, Clone)]
pub struct GraphGroup {
    base: TraceMonoid,
    extended: ExtendedIndependence,
    racg: RightAngledCoxeter,
}

impl GraphGroup {
    pub fn new(independence: &Independence) -> Self {
        let extended = ExtendedIndependence::new(independence);
        let racg = RightAngledCoxeter::new(extended.relation().clone());
        let base = TraceMonoid::new(extended.relation().clone());
        GraphGroup { base, extended, racg }
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        match (spec.kind(), spec.independence()) {
            (GroupKind::Graph | GroupKind::Fim, Some(i)) => Ok(GraphGroup::new(i)),
            (kind, _) => Err(Error::KindMismatch {
                op: "graph group normal form",
                kind,
            }),
        }
    }

    pub fn extended(&self) -> &ExtendedIndependence {
        &self.extended
    }

    pub fn racg(&self) -> &RightAngledCoxeter {
        &self.racg
    }

    /// `a ↦ a·a'`, `a' ↦ a'·a`, as doubled-alphabet symbols.
    pub fn embed_phi(&self, word: &Word) -> Vec<Symbol> {
        word.letters()
            .iter()
            .flat_map(|l| [l.doubled_index(), l.inverse().doubled_index()])
            .collect()
    }

    /// Shortlex normal form over the order `a < a' < b < b' < ⋯`.
    pub fn shortlex(&self, word: &Word) -> Word {
        let image = self.racg.shortlex(&self.embed_phi(word));
        let contracted = contract(&image, self.extended.base_rank());
        let rank: Vec<usize> = (0..2 * self.extended.base_rank()).collect();
        let t = self.base.trace(&contracted);
        Word::new(
            self.base
                .lex_normal_form(&t, &rank)
                .into_iter()
                .map(Letter::from_doubled_index)
                .collect(),
        )
    }
}

/// Pairs the occurrences of `{a, a'}` in order and keeps the first of
/// each pair: `a·a' ↦ a`, `a'·a ↦ a'`. All such occurrences are mutually
/// dependent, so the pairing does not depend on the representative.
fn contract(word: &[Symbol], base_rank: usize) -> Vec<Symbol> {
    let mut seen = vec![0usize; base_rank];
    let mut out = Vec::with_capacity(word.len() / 2);
    for &s in word {
        let g = s / 2;
        if seen[g] % 2 == 0 {
            out.push(s);
        }
        seen[g] += 1;
    }
    debug_assert!(seen.iter().all(|c| c % 2 == 0));
    out
}
