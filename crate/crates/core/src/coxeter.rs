//! General Coxeter groups through the standard geometric representation.
//!
//! Generator `a_i` acts on `R^Σ` by `σ_{a_i}(a_j) = a_j + c_{ij}·a_i`, with
//! `c_{ii} = −2`, `c_{ij} = 2` for `m_{ij} = ∞` and `c_{ij} = 2cos(π/m_{ij})`
//! otherwise. All entries live in `Z[ζ]`, `ζ = e^{iπ/m}` with `m` the lcm of
//! the finite off-diagonal entries, represented in `Z[X]/(X^{2m} − 1)`.
//!
//! The geodesic length follows from the sign dichotomy: for every prefix
//! `w` and letter `a`, the vector `σ_w(a)` is either entirely `≥ 0`
//! (then `‖wa‖ = ‖w‖ + 1`) or entirely `≤ 0` (then `‖wa‖ = ‖w‖ − 1`).
//! The dichotomy is checked at every step, not assumed.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::alphabet::{CoxeterMatrix, GroupKind, GroupSpec};
use crate::cyclotomic::{CyclotomicElement, CyclotomicRing, Sign};
use crate::error::{Error, Result};

/// Square matrix over `Z[X]/(X^{2m} − 1)`, row-major, rows and columns
/// indexed by letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeoMatrix {
    size: usize,
    entries: Vec<CyclotomicElement>,
}

impl GeoMatrix {
    pub fn identity(size: usize, m: usize) -> Self {
        let mut entries = vec![CyclotomicElement::zero(m); size * size];
        for i in 0..size {
            entries[i * size + i] = CyclotomicElement::one(m);
        }
        GeoMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &CyclotomicElement {
        &self.entries[row * self.size + col]
    }

    pub fn column(&self, col: usize) -> Vec<CyclotomicElement> {
        (0..self.size).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn mul(&self, other: &GeoMatrix) -> GeoMatrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let m = self.entries[0].m();
        let mut entries = vec![CyclotomicElement::zero(m); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero_polynomial() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j].add_product(a, other.get(k, j));
                }
            }
        }
        GeoMatrix { size: n, entries }
    }

    /// Entrywise equality of the values at `ζ`.
    pub fn equals_at_zeta(&self, other: &GeoMatrix, ring: &CyclotomicRing) -> bool {
        self.size == other.size
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(x, y)| ring.is_zero(&x.try_sub(y).expect("same ring")))
    }
}

/// Which way the geodesic length moved when a letter was appended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
}

/// Prepared geometric representation of a Coxeter group, extended by a
/// hidden letter `x` with `m(x, a) = ∞` for every generator `a`.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    even: bool,
    ring: CyclotomicRing,
    /// `reflect[a][j]`: `σ_a(e_j) = e_j + reflect[a][j]·e_a`, over
    /// `Σ ∪ {x}` with `x` at index `rank`.
    reflect: Vec<Vec<CyclotomicElement>>,
}

/// `lcm` of the finite off-diagonal entries, `1` if there are none.
pub fn half_order(matrix: &CoxeterMatrix) -> usize {
    let n = matrix.size();
    let mut m = 1usize;
    for i in 0..n {
        for j in i + 1..n {
            let e = matrix.get(i, j) as usize;
            if e != 0 {
                m = m.lcm(&e);
            }
        }
    }
    m
}

impl CoxeterSystem {
    /// Parikh images are allowed iff the matrix is even.
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let even = matrix.is_even();
        CoxeterSystem::build(matrix, even)
    }

    /// Accepts kinds `coxeter`, `even-coxeter` and `racg`. Only
    /// `even-coxeter` and `racg` systems compute Parikh images.
    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        let kind = spec.kind();
        match (kind, spec.coxeter_matrix()) {
            (GroupKind::Coxeter | GroupKind::EvenCoxeter | GroupKind::Racg, Some(matrix)) => {
                let even = kind != GroupKind::Coxeter;
                Ok(CoxeterSystem::build(matrix, even))
            }
            _ => Err(Error::KindMismatch {
                op: "geometric representation",
                kind,
            }),
        }
    }

    fn build(matrix: CoxeterMatrix, even: bool) -> Self {
        let n = matrix.size();
        let m = half_order(&matrix);
        let entry = |i: usize, j: usize| -> u32 {
            if i == j {
                1
            } else if i == n || j == n {
                0
            } else {
                matrix.get(i, j)
            }
        };
        let reflect = (0..=n)
            .map(|a| {
                (0..=n)
                    .map(|j| match entry(a, j) {
                        1 => CyclotomicElement::constant(m, -2),
                        0 => CyclotomicElement::constant(m, 2),
                        q => CyclotomicElement::two_cos_pi_over(m, q as usize),
                    })
                    .collect()
            })
            .collect();
        CoxeterSystem {
            matrix,
            even,
            ring: CyclotomicRing::new(m),
            reflect,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.size()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn ring(&self) -> &CyclotomicRing {
        &self.ring
    }

    pub fn half_order(&self) -> usize {
        self.ring.m()
    }

    fn hidden(&self) -> usize {
        self.rank()
    }

    fn check_word(&self, word: &[usize]) {
        assert!(
            word.iter().all(|&a| a < self.rank()),
            "letter out of range for a rank-{} Coxeter system",
            self.rank()
        );
    }

    /// Matrix of `σ_a` in the letter basis (hidden letter excluded).
    pub fn sigma_generator(&self, a: usize) -> GeoMatrix {
        let n = self.rank();
        let m = self.half_order();
        let mut g = GeoMatrix::identity(n, m);
        for j in 0..n {
            // column j is σ_a(e_j) = e_j + c·e_a
            g.entries[a * n + j].add_assign(&self.reflect[a][j]);
        }
        g
    }

    /// Applies `σ_a` to a vector over `Σ ∪ {x}` in place.
    fn reflect_vector(&self, a: usize, v: &mut [CyclotomicElement]) {
        let m = self.half_order();
        let mut delta = CyclotomicElement::zero(m);
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero_polynomial() {
                delta.add_product(&self.reflect[a][j], vj);
            }
        }
        v[a].add_assign(&delta);
    }

    fn apply_extended(&self, word: &[usize], target: usize) -> Vec<CyclotomicElement> {
        let m = self.half_order();
        let mut v = vec![CyclotomicElement::zero(m); self.rank() + 1];
        v[target] = CyclotomicElement::one(m);
        // σ_w = σ_{a_1} ∘ ⋯ ∘ σ_{a_k}: the last letter acts first.
        for &a in word.iter().rev() {
            self.reflect_vector(a, &mut v);
        }
        v
    }

    /// Coefficients of `σ_w(b)` in the letter basis.
    pub fn sigma_apply(&self, word: &[usize], b: usize) -> Vec<CyclotomicElement> {
        self.check_word(word);
        assert!(b < self.rank());
        let mut v = self.apply_extended(word, b);
        v.truncate(self.rank());
        v
    }

    /// Sign of the `b`-coefficient of `σ_w(a)`.
    pub fn sign_of_coefficient(&self, word: &[usize], a: usize, b: usize) -> Result<Sign> {
        let v = self.sigma_apply(word, a);
        self.ring.sign_real(&v[b])
    }

    pub fn walker(&self) -> GeodesicWalker<'_> {
        GeodesicWalker::new(self)
    }

    /// `‖w‖`, by the sign-dichotomy loop.
    pub fn geodesic_length(&self, word: &[usize]) -> Result<usize> {
        let mut walker = self.walker();
        for &a in word {
            walker.push(a)?;
        }
        Ok(walker.length())
    }

    /// Letters of the shortlex normal form: the support of `σ_w(x)`.
    pub fn geodesic_alphabet(&self, word: &[usize]) -> BTreeSet<usize> {
        self.check_word(word);
        let v = self.apply_extended(word, self.hidden());
        (0..self.rank()).filter(|&b| !self.ring.is_zero(&v[b])).collect()
    }

    /// Parikh image of the shortlex normal form; even groups only.
    pub fn parikh_even(&self, word: &[usize]) -> Result<Vec<usize>> {
        if !self.even {
            return Err(Error::KindMismatch {
                op: "parikh",
                kind: GroupKind::Coxeter,
            });
        }
        let mut walker = self.walker();
        for &a in word {
            walker.push(a)?;
        }
        Ok(walker.parikh().expect("even system"))
    }

    pub fn is_even(&self) -> bool {
        self.even
    }
}

/// Incremental evaluation of the length loop over a growing word.
///
/// Keeps the full product `σ_{a_1 ⋯ a_k}` over `Σ ∪ {x}`, so every
/// appended letter costs one column update, and prefixes can be shared by
/// cloning the walker.
#[derive(Debug, Clone)]
pub struct GeodesicWalker<'a> {
    system: &'a CoxeterSystem,
    /// `columns[j]` = `σ_w(e_j)`.
    columns: Vec<Vec<CyclotomicElement>>,
    length: usize,
    /// Meaningful only for even systems, where it never goes negative.
    parikh: Vec<i64>,
}

impl<'a> GeodesicWalker<'a> {
    fn new(system: &'a CoxeterSystem) -> Self {
        let size = system.rank() + 1;
        let m = system.half_order();
        let columns = (0..size)
            .map(|j| {
                let mut c = vec![CyclotomicElement::zero(m); size];
                c[j] = CyclotomicElement::one(m);
                c
            })
            .collect();
        GeodesicWalker {
            system,
            columns,
            length: 0,
            parikh: vec![0; system.rank()],
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Parikh image of the shortlex normal form; `None` unless the
    /// system is even.
    pub fn parikh(&self) -> Option<Vec<usize>> {
        self.system
            .even
            .then(|| self.parikh.iter().map(|&c| c as usize).collect())
    }

    /// `σ_w(b)` for the word read so far.
    pub fn image(&self, b: usize) -> &[CyclotomicElement] {
        &self.columns[b][..self.system.rank()]
    }

    /// Support of `σ_w(x)`: the alphabet of the shortlex normal form.
    pub fn alphabet(&self) -> BTreeSet<usize> {
        let v = &self.columns[self.system.hidden()];
        (0..self.system.rank())
            .filter(|&b| !self.system.ring.is_zero(&v[b]))
            .collect()
    }

    /// Sign pattern of `σ_w(a)`: `Up` if all coefficients are `≥ 0`,
    /// `Down` if all are `≤ 0`.
    pub fn classify(&self, a: usize) -> Result<Step> {
        let ring = &self.system.ring;
        let (mut pos, mut neg) = (false, false);
        for coeff in self.image(a) {
            match ring.sign_real(coeff)? {
                Sign::Positive => pos = true,
                Sign::Negative => neg = true,
                Sign::Zero => {}
            }
        }
        match (pos, neg) {
            (true, false) => Ok(Step::Up),
            (false, true) => Ok(Step::Down),
            (true, true) => Err(Error::InternalFault(format!("σ_w({a}) has coefficients of both signs"))),
            (false, false) => Err(Error::InternalFault(format!("σ_w({a}) vanished"))),
        }
    }

    /// Appends `a`, updating length, Parikh counters and the product.
    pub fn push(&mut self, a: usize) -> Result<Step> {
        assert!(a < self.system.rank());
        let step = self.classify(a)?;
        match step {
            Step::Up => {
                self.length += 1;
                self.parikh[a] += 1;
            }
            Step::Down => {
                if self.length == 0 {
                    return Err(Error::InternalFault("length dropped below zero".into()));
                }
                self.length -= 1;
                self.parikh[a] -= 1;
                if self.system.even && self.parikh[a] < 0 {
                    return Err(Error::InternalFault("Parikh count dropped below zero".into()));
                }
            }
        }
        self.multiply_generator(a);
        Ok(step)
    }

    /// `P ← P · σ_a`: column `j` gains `reflect[a][j]` times column `a`.
    fn multiply_generator(&mut self, a: usize) {
        let col_a = std::mem::take(&mut self.columns[a]);
        for (j, col) in self.columns.iter_mut().enumerate() {
            if j == a {
                continue;
            }
            let c = &self.system.reflect[a][j];
            for (entry, pa) in col.iter_mut().zip(&col_a) {
                if !pa.is_zero_polynomial() {
                    entry.add_product(c, pa);
                }
            }
        }
        let mut col_a = col_a;
        for entry in &mut col_a {
            entry.negate_in_place();
        }
        self.columns[a] = col_a;
    }
}
