//! Alphabets, group specifications and words.
//!
//! A [`GroupSpec`] names a finite ordered alphabet and fixes the defining
//! data of the group: a Coxeter matrix for the kinds `coxeter` and
//! `even-coxeter`, or an independence relation for `racg`, `graph` and
//! `fim`. The declared letter order is the shortlex order used by every
//! normal-form computation.
//!
//! Group specs are read from a small line-oriented format:
//!
//! ```text
//! # the symmetric group S_3
//! kind = coxeter
//! letters = a b
//! m a b 3
//! ```
//!
//! Unlisted Coxeter pairs default to `0`, which encodes an infinite entry.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The five families of groups and monoids handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Coxeter,
    EvenCoxeter,
    Racg,
    Graph,
    Fim,
}

impl GroupKind {
    pub const ALL: [GroupKind; 5] = [
        GroupKind::Coxeter,
        GroupKind::EvenCoxeter,
        GroupKind::Racg,
        GroupKind::Graph,
        GroupKind::Fim,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Coxeter => "coxeter",
            GroupKind::EvenCoxeter => "even-coxeter",
            GroupKind::Racg => "racg",
            GroupKind::Graph => "graph",
            GroupKind::Fim => "fim",
        }
    }

    /// Kinds described by a Coxeter matrix.
    pub fn has_matrix(self) -> bool {
        matches!(self, GroupKind::Coxeter | GroupKind::EvenCoxeter)
    }

    /// Kinds whose words may contain formal inverses.
    pub fn allows_inverses(self) -> bool {
        matches!(self, GroupKind::Graph | GroupKind::Fim)
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        GroupKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

/// A generator, possibly carrying the formal inverse marker.
///
/// `generator` indexes the declared letter list of the enclosing spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverted: bool,
}

impl Letter {
    pub const fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverted: false,
        }
    }

    pub const fn inverse_of(generator: usize) -> Self {
        Letter {
            generator,
            inverted: true,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverted: !self.inverted,
        }
    }

    /// Position in the doubled alphabet `a < a' < b < b' < ...`.
    pub fn doubled_index(self) -> usize {
        2 * self.generator + usize::from(self.inverted)
    }

    pub fn from_doubled_index(index: usize) -> Self {
        Letter {
            generator: index / 2,
            inverted: index % 2 == 1,
        }
    }
}

/// A finite word over the letters of a spec.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Word made of non-inverted generators.
    pub fn from_generators(generators: &[usize]) -> Self {
        Word(generators.iter().copied().map(Letter::new).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn generators(&self) -> Vec<usize> {
        self.0.iter().map(|l| l.generator).collect()
    }

    pub fn doubled_indices(&self) -> Vec<usize> {
        self.0.iter().map(|l| l.doubled_index()).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The mirror image. In a Coxeter group this represents the inverse.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Reverse and flip every inverse marker: the group inverse in a
    /// graph group, the monoid inverse in an inverse monoid.
    pub fn formal_inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }
}

/// Symmetric irreflexive relation on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Independence {
    size: usize,
    bits: Vec<bool>,
}

impl Independence {
    pub fn new(size: usize) -> Self {
        Independence {
            size,
            bits: vec![false; size * size],
        }
    }

    /// Builds a relation from unordered pairs. Panics on a loop `(a, a)`
    /// or an index out of range.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Self {
        let mut rel = Independence::new(size);
        for &(a, b) in pairs {
            rel.insert(a, b);
        }
        rel
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a != b, "independence relation must be irreflexive");
        self.bits[a * self.size + b] = true;
        self.bits[b * self.size + a] = true;
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.size + b]
    }

    /// `D = (Σ × Σ) \ I`, reflexive by construction.
    pub fn dependent(&self, a: usize, b: usize) -> bool {
        !self.contains(a, b)
    }

    /// Unordered pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size)
            .flat_map(move |a| (a + 1..self.size).map(move |b| (a, b)))
            .filter(move |&(a, b)| self.contains(a, b))
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }
}

/// Symmetric Coxeter matrix; `0` encodes an infinite entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    size: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    /// All off-diagonal entries infinite.
    pub fn free(size: usize) -> Self {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 1;
        }
        CoxeterMatrix { size, entries }
    }

    /// Builds a matrix from rows, checking the Coxeter axioms.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::Syntax {
                    line: 0,
                    message: "coxeter matrix is not square".into(),
                });
            }
            entries.extend_from_slice(row);
        }
        let matrix = CoxeterMatrix { size, entries };
        let names: Vec<String> = (0..size).map(|i| format!("s{i}")).collect();
        matrix.validate(&names, false)?;
        Ok(matrix)
    }

    /// Right-angled matrix: `2` on independent pairs, `0` elsewhere.
    pub fn right_angled(independence: &Independence) -> Self {
        let size = independence.size();
        let mut matrix = CoxeterMatrix::free(size);
        for (a, b) in independence.pairs() {
            matrix.set(a, b, 2);
        }
        matrix
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.entries[i * self.size + j] = value;
        self.entries[j * self.size + i] = value;
    }

    pub fn is_even(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i == j || self.get(i, j) % 2 == 0))
    }

    fn validate(&self, names: &[String], even: bool) -> Result<()> {
        for i in 0..self.size {
            let d = self.get(i, i);
            if d != 1 {
                return Err(Error::DiagonalEntry {
                    letter: names[i].clone(),
                    value: d,
                });
            }
            for j in 0..self.size {
                if i == j {
                    continue;
                }
                let (ij, ji) = (self.get(i, j), self.get(j, i));
                if ij != ji {
                    return Err(Error::AsymmetricMatrix {
                        a: names[i].clone(),
                        b: names[j].clone(),
                        ab: ij,
                        ba: ji,
                    });
                }
                if ij == 1 {
                    return Err(Error::OffDiagonalOne {
                        a: names[i].clone(),
                        b: names[j].clone(),
                    });
                }
                if even && ij % 2 == 1 {
                    return Err(Error::OddEntry {
                        a: names[i].clone(),
                        b: names[j].clone(),
                        value: ij,
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Relations {
    Matrix(CoxeterMatrix),
    Independence(Independence),
}

/// A validated group description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    kind: GroupKind,
    names: Vec<String>,
    relations: Relations,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .bytes()
            .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
}

fn check_names(names: &[String]) -> Result<()> {
    for (i, name) in names.iter().enumerate() {
        if !valid_name(name) {
            return Err(Error::InvalidLetterName(name.clone()));
        }
        if names[..i].contains(name) {
            return Err(Error::DuplicateLetter(name.clone()));
        }
    }
    Ok(())
}

impl GroupSpec {
    /// Spec of kind `coxeter` or `even-coxeter`.
    pub fn with_matrix(kind: GroupKind, names: Vec<String>, matrix: CoxeterMatrix) -> Result<Self> {
        if !kind.has_matrix() {
            return Err(Error::KindMismatch {
                op: "coxeter matrix",
                kind,
            });
        }
        check_names(&names)?;
        if matrix.size() != names.len() {
            return Err(Error::Syntax {
                line: 0,
                message: "matrix size does not match the alphabet".into(),
            });
        }
        matrix.validate(&names, kind == GroupKind::EvenCoxeter)?;
        Ok(GroupSpec {
            kind,
            names,
            relations: Relations::Matrix(matrix),
        })
    }

    /// Spec of kind `racg`, `graph` or `fim`.
    pub fn with_independence(kind: GroupKind, names: Vec<String>, independence: Independence) -> Result<Self> {
        if kind.has_matrix() {
            return Err(Error::KindMismatch {
                op: "independence relation",
                kind,
            });
        }
        check_names(&names)?;
        if independence.size() != names.len() {
            return Err(Error::Syntax {
                line: 0,
                message: "relation size does not match the alphabet".into(),
            });
        }
        Ok(GroupSpec {
            kind,
            names,
            relations: Relations::Independence(independence),
        })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The Coxeter matrix; for `racg` the right-angled matrix of the
    /// independence relation. `None` for graph groups and inverse monoids.
    pub fn coxeter_matrix(&self) -> Option<CoxeterMatrix> {
        match (&self.relations, self.kind) {
            (Relations::Matrix(m), _) => Some(m.clone()),
            (Relations::Independence(i), GroupKind::Racg) => Some(CoxeterMatrix::right_angled(i)),
            _ => None,
        }
    }

    pub fn independence(&self) -> Option<&Independence> {
        match &self.relations {
            Relations::Independence(i) => Some(i),
            Relations::Matrix(_) => None,
        }
    }

    /// Parses the line-oriented group-spec format.
    pub fn parse(text: &str) -> Result<Self> {
        parse_group_spec(text)
    }

    /// Parses a dotted (or, for one-character alphabets, undotted) word.
    /// `1` and the empty string denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, self)
    }

    pub fn letter_name(&self, letter: Letter) -> String {
        let mut s = self.names[letter.generator].clone();
        if letter.inverted {
            s.push('\'');
        }
        s
    }

    /// Dotted rendering, `1` for the empty word.
    pub fn render_word(&self, letters: &[Letter]) -> String {
        if letters.is_empty() {
            return "1".to_string();
        }
        letters
            .iter()
            .map(|&l| self.letter_name(l))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Renders a word over the doubled alphabet `a < a' < b < ...`.
    pub fn render_doubled(&self, symbols: &[usize]) -> String {
        let letters: Vec<Letter> = symbols.iter().map(|&s| Letter::from_doubled_index(s)).collect();
        self.render_word(&letters)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind = {}", self.kind)?;
        writeln!(f, "letters = {}", self.names.join(" "))?;
        match &self.relations {
            Relations::Matrix(m) => {
                for i in 0..m.size() {
                    for j in i + 1..m.size() {
                        if m.get(i, j) != 0 {
                            writeln!(f, "m {} {} {}", self.names[i], self.names[j], m.get(i, j))?;
                        }
                    }
                }
            }
            Relations::Independence(rel) => {
                for (a, b) in rel.pairs() {
                    writeln!(f, "edge {} {}", self.names[a], self.names[b])?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses a group-spec file.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut kind: Option<GroupKind> = None;
    let mut names: Option<Vec<String>> = None;
    // (line, a, b, value) with value None for `edge`
    let mut relation_lines: Vec<(usize, String, String, Option<u32>)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some((key, value)) = content.split_once('=') {
            let (key, value) = (key.trim(), value.trim());
            match key {
                "kind" => {
                    if kind.is_some() {
                        return Err(syntax(line, "`kind` declared twice"));
                    }
                    kind = Some(value.parse().map_err(|e: String| syntax(line, e))?);
                }
                "letters" => {
                    if names.is_some() {
                        return Err(syntax(line, "`letters` declared twice"));
                    }
                    let list: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                    if list.is_empty() {
                        return Err(syntax(line, "empty letter list"));
                    }
                    for name in &list {
                        if !valid_name(name) {
                            return Err(syntax(line, format!("invalid letter name `{name}`")));
                        }
                    }
                    names = Some(list);
                }
                other => return Err(syntax(line, format!("unknown key `{other}`"))),
            }
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["m", a, b, v] => {
                let value: u32 = v
                    .parse()
                    .map_err(|_| syntax(line, format!("`{v}` is not a natural number")))?;
                relation_lines.push((line, a.to_string(), b.to_string(), Some(value)));
            }
            ["edge", a, b] => relation_lines.push((line, a.to_string(), b.to_string(), None)),
            _ => return Err(syntax(line, format!("cannot parse `{content}`"))),
        }
    }

    let kind = kind.ok_or_else(|| syntax(last_line, "missing `kind = ...` line"))?;
    let names = names.ok_or_else(|| syntax(last_line, "missing `letters = ...` line"))?;
    check_names(&names)?;
    let lookup = |line: usize, name: &str| -> Result<usize> {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| syntax(line, Error::UnknownLetter(name.to_string()).to_string()))
    };
    let n = names.len();

    if kind.has_matrix() {
        // Explicit entries, keyed by ordered pair, so asymmetric input is
        // reported rather than silently overwritten.
        let mut explicit: Vec<Option<u32>> = vec![None; n * n];
        for (line, a, b, value) in &relation_lines {
            let value = value.ok_or_else(|| syntax(*line, "`edge` lines need kind racg, graph or fim"))?;
            let (i, j) = (lookup(*line, a)?, lookup(*line, b)?);
            if let Some(prev) = explicit[i * n + j] {
                if prev != value {
                    return Err(syntax(*line, format!("conflicting entries for m {a} {b}")));
                }
            }
            explicit[i * n + j] = Some(value);
        }
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = match (explicit[i * n + j], explicit[j * n + i]) {
                    (Some(v), _) => v,
                    (None, Some(v)) => v,
                    (None, None) if i == j => 1,
                    (None, None) => 0,
                };
            }
        }
        // A pair given in both directions with different values.
        for i in 0..n {
            for j in 0..n {
                if let (Some(x), Some(y)) = (explicit[i * n + j], explicit[j * n + i]) {
                    if x != y {
                        return Err(Error::AsymmetricMatrix {
                            a: names[i].clone(),
                            b: names[j].clone(),
                            ab: x,
                            ba: y,
                        });
                    }
                }
            }
        }
        GroupSpec::with_matrix(kind, names, CoxeterMatrix { size: n, entries })
    } else {
        let mut rel = Independence::new(n);
        for (line, a, b, value) in &relation_lines {
            if value.is_some() {
                return Err(syntax(*line, "`m` lines need kind coxeter or even-coxeter"));
            }
            let (i, j) = (lookup(*line, a)?, lookup(*line, b)?);
            if i == j {
                return Err(Error::ReflexiveEdge(a.clone()));
            }
            rel.insert(i, j);
        }
        GroupSpec::with_independence(kind, names, rel)
    }
}

/// Parses a word against `spec`.
pub fn parse_word(text: &str, spec: &GroupSpec) -> Result<Word> {
    let text = text.trim();
    if text.is_empty() || (text == "1" && spec.generator("1").is_none()) {
        return Ok(Word::empty());
    }
    let tokens: Vec<String> = if text.contains('.') {
        text.split('.').map(|t| t.trim().to_string()).collect()
    } else if spec.generator(text.trim_end_matches('\'')).is_some() {
        vec![text.to_string()]
    } else if spec.names.iter().all(|n| n.len() == 1) {
        let mut tokens: Vec<String> = Vec::new();
        for c in text.chars() {
            match (c, tokens.last_mut()) {
                ('\'', Some(last)) if !last.ends_with('\'') => last.push('\''),
                _ => tokens.push(c.to_string()),
            }
        }
        tokens
    } else {
        vec![text.to_string()]
    };

    let mut letters = Vec::with_capacity(tokens.len());
    for token in tokens {
        let (name, inverted) = match token.strip_suffix('\'') {
            Some(stripped) => (stripped, true),
            None => (token.as_str(), false),
        };
        let generator = spec
            .generator(name)
            .ok_or_else(|| Error::UnknownLetter(token.clone()))?;
        if inverted && !spec.kind.allows_inverses() {
            return Err(Error::InverseNotAllowed(name.to_string()));
        }
        letters.push(Letter { generator, inverted });
    }
    Ok(Word(letters))
}

/// The doubled independence alphabet `(Γ, I_Γ)` of a graph group: every
/// generator `a` gets a partner `a'`, and `(a, b) ∈ I` puts all four pairs
/// between `{a, a'}` and `{b, b'}` into `I_Γ`. Symbols are numbered
/// `a = 0, a' = 1, b = 2, b' = 3, ...`, which is also the shortlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedIndependence {
    base_rank: usize,
    relation: Independence,
}

impl ExtendedIndependence {
    pub fn new(base: &Independence) -> Self {
        let n = base.size();
        let mut relation = Independence::new(2 * n);
        for (a, b) in base.pairs() {
            for da in 0..2 {
                for db in 0..2 {
                    relation.insert(2 * a + da, 2 * b + db);
                }
            }
        }
        ExtendedIndependence { base_rank: n, relation }
    }

    pub fn base_rank(&self) -> usize {
        self.base_rank
    }

    pub fn relation(&self) -> &Independence {
        &self.relation
    }

    /// `a ↦ a'` and `a' ↦ a` on doubled indices.
    pub fn partner(symbol: usize) -> usize {
        symbol ^ 1
    }
}

/// `(Γ, I_Γ)` for a spec of kind `graph` or `fim`.
pub fn extend_independence(spec: &GroupSpec) -> Result<ExtendedIndependence> {
    match (spec.kind, spec.independence()) {
        (GroupKind::Graph | GroupKind::Fim, Some(rel)) => Ok(ExtendedIndependence::new(rel)),
        (kind, _) => Err(Error::KindMismatch {
            op: "extend_independence",
            kind,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_racg_edge() {
        let spec = parse_group_spec("kind = racg\nletters = a b\nedge a b\n").unwrap();
        assert_eq!(spec.kind(), GroupKind::Racg);
        assert_eq!(spec.names(), ["a", "b"]);
        let rel = spec.independence().unwrap();
        assert!(rel.contains(0, 1) && rel.contains(1, 0));
    }

    #[test]
    fn parses_coxeter_entry_and_defaults() {
        let spec = parse_group_spec("kind = coxeter\nletters = a b c\nm a b 3\n").unwrap();
        let m = spec.coxeter_matrix().unwrap();
        assert_eq!(m.get(0, 1), 3);
        assert_eq!(m.get(1, 0), 3);
        assert_eq!(m.get(0, 2), 0);
        assert_eq!(m.get(2, 2), 1);
    }

    #[test]
    fn rejects_odd_entry_for_even_kind() {
        let err = parse_group_spec("kind = even-coxeter\nletters = a b\nm a b 3\n").unwrap_err();
        assert!(matches!(err, Error::OddEntry { value: 3, .. }));
    }

    #[test]
    fn validation_errors() {
        let cases = [
            ("kind = coxeter\nletters = a b\nm a b 3\nm b a 4\n", "asym"),
            ("kind = coxeter\nletters = a b\nm a a 2\n", "diag"),
            ("kind = coxeter\nletters = a b\nm a b 1\n", "one"),
            ("kind = racg\nletters = a a\n", "dup"),
            ("kind = racg\nletters = a b\nedge a c\n", "unknown"),
            ("kind = racg\nletters = a b\nedge a a\n", "loop"),
        ];
        for (text, tag) in cases {
            let err = parse_group_spec(text).unwrap_err();
            let ok = match tag {
                "asym" => matches!(err, Error::AsymmetricMatrix { .. }),
                "diag" => matches!(err, Error::DiagonalEntry { value: 2, .. }),
                "one" => matches!(err, Error::OffDiagonalOne { .. }),
                "dup" => matches!(err, Error::DuplicateLetter(_)),
                "unknown" => matches!(err, Error::Syntax { line: 3, .. }),
                "loop" => matches!(err, Error::ReflexiveEdge(_)),
                _ => unreachable!(),
            };
            assert!(ok, "{tag}: {err:?}");
        }
    }

    #[test]
    fn syntax_error_reports_line() {
        let err = parse_group_spec("# header\nkind = racg\nletters = a b\nfoo bar\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 4,
                message: "cannot parse `foo bar`".into()
            }
        );
        let err = parse_group_spec("kind = group\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, .. }));
        let err = parse_group_spec("kind = racg\nletters = a b\nm a b 2\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }));
    }

    #[test]
    fn comments_and_blank_lines() {
        let spec = parse_group_spec("kind = graph # free abelian\n\nletters = x y\nedge x y # commute\n").unwrap();
        assert_eq!(spec.kind(), GroupKind::Graph);
    }

    fn graph_ab() -> GroupSpec {
        parse_group_spec("kind = graph\nletters = a b\nedge a b\n").unwrap()
    }

    #[test]
    fn word_syntax() {
        let cox = parse_group_spec("kind = coxeter\nletters = a b\nm a b 3\n").unwrap();
        assert_eq!(cox.parse_word("a.b.a").unwrap(), Word::from_generators(&[0, 1, 0]));
        assert_eq!(cox.parse_word("aba").unwrap(), Word::from_generators(&[0, 1, 0]));
        assert_eq!(cox.parse_word("1").unwrap(), Word::empty());
        assert_eq!(cox.parse_word("").unwrap(), Word::empty());
        assert!(matches!(cox.parse_word("a'.b"), Err(Error::InverseNotAllowed(_))));
        assert!(matches!(cox.parse_word("a.c"), Err(Error::UnknownLetter(_))));

        let g = graph_ab();
        assert_eq!(
            g.parse_word("a'.b").unwrap(),
            Word(vec![Letter::inverse_of(0), Letter::new(1)])
        );
        assert_eq!(g.parse_word("a'b").unwrap(), g.parse_word("a'.b").unwrap());
    }

    #[test]
    fn multi_character_names_need_dots() {
        let spec = parse_group_spec("kind = racg\nletters = s1 s2\n").unwrap();
        assert_eq!(spec.parse_word("s1.s2").unwrap(), Word::from_generators(&[0, 1]));
        assert_eq!(spec.parse_word("s2").unwrap(), Word::from_generators(&[1]));
        assert!(spec.parse_word("s1s2").is_err());
    }

    #[test]
    fn render_word_round_trip() {
        let g = graph_ab();
        let w = g.parse_word("a.a'.b'").unwrap();
        assert_eq!(g.render_word(w.letters()), "a.a'.b'");
        assert_eq!(g.render_word(&[]), "1");
    }

    #[test]
    fn extended_independence_closure() {
        let g = graph_ab();
        let ext = extend_independence(&g).unwrap();
        let rel = ext.relation();
        // a=0, a'=1, b=2, b'=3
        for (x, y) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            assert!(rel.contains(x, y));
        }
        assert!(!rel.contains(0, 1));
        assert!(!rel.contains(2, 3));

        let free = parse_group_spec("kind = graph\nletters = a b\n").unwrap();
        assert!(extend_independence(&free).unwrap().relation().is_empty());

        let cox = parse_group_spec("kind = coxeter\nletters = a b\n").unwrap();
        assert!(extend_independence(&cox).is_err());
    }

    fn arb_spec() -> impl Strategy<Value = GroupSpec> {
        (1usize..5, 0usize..5, any::<u64>()).prop_map(|(n, kind_idx, seed)| {
            let kind = GroupKind::ALL[kind_idx];
            let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
            let mut bits = seed;
            let mut next = |k: u64| {
                let v = bits % k;
                bits = (bits / k) ^ bits.rotate_left(17);
                v
            };
            if kind.has_matrix() {
                let mut m = CoxeterMatrix::free(n);
                for i in 0..n {
                    for j in i + 1..n {
                        let choices: &[u32] = if kind == GroupKind::EvenCoxeter {
                            &[0, 2, 4, 6]
                        } else {
                            &[0, 2, 3, 4, 5, 6]
                        };
                        m.set(i, j, choices[next(choices.len() as u64) as usize]);
                    }
                }
                GroupSpec::with_matrix(kind, names, m).unwrap()
            } else {
                let mut rel = Independence::new(n);
                for i in 0..n {
                    for j in i + 1..n {
                        if next(2) == 1 {
                            rel.insert(i, j);
                        }
                    }
                }
                GroupSpec::with_independence(kind, names, rel).unwrap()
            }
        })
    }

    proptest! {
        #[test]
        fn spec_render_parse_round_trip(spec in arb_spec()) {
            let rendered = spec.to_string();
            let reparsed = parse_group_spec(&rendered).unwrap();
            prop_assert_eq!(reparsed, spec);
        }

        #[test]
        fn extended_relation_is_minimal(spec in arb_spec()) {
            prop_assume!(spec.kind().allows_inverses());
            let base = spec.independence().unwrap();
            let ext = extend_independence(&spec).unwrap();
            let rel = ext.relation();
            let n = base.size();
            for x in 0..2 * n {
                prop_assert!(!rel.contains(x, x ^ 1));
                for y in 0..2 * n {
                    prop_assert_eq!(rel.contains(x, y), rel.contains(y, x));
                    // minimality: every pair is forced by a base pair
                    prop_assert_eq!(rel.contains(x, y), x / 2 != y / 2 && base.contains(x / 2, y / 2));
                }
            }
        }
    }
}
