//! Exact arithmetic in `Z[X]/(X^{2m} − 1)` and evaluation at
//! `ζ = e^{iπ/m}`.
//!
//! Zero tests are exact: `p(ζ) = 0` iff `Φ_{2m}` divides `p` in `Z[X]`.
//! Signs of real values are decided by interval evaluation of
//! `Σ a_j cos(jπ/m)`, doubling the precision until the enclosure excludes
//! zero. For a non-zero value the root-of-unity gap `|p(ζ)| > |p|^{-2m}`
//! (with `|p|` the coefficient 1-norm) bounds the precision ever needed.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::{cos_pi_fraction, DyadicInterval};

/// Sign of a real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// `Σ a_j X^j` with exactly `2m` coefficients; exponents wrap mod `2m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    m: usize,
    coeffs: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn new(m: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        assert!(m > 0, "half-order m must be positive");
        if coeffs.len() != 2 * m {
            return Err(Error::CoefficientCount {
                m,
                expected: 2 * m,
                found: coeffs.len(),
            });
        }
        Ok(CyclotomicElement { m, coeffs })
    }

    pub fn from_i64(m: usize, coeffs: &[i64]) -> Result<Self> {
        CyclotomicElement::new(m, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(m: usize) -> Self {
        assert!(m > 0, "half-order m must be positive");
        CyclotomicElement {
            m,
            coeffs: vec![BigInt::zero(); 2 * m],
        }
    }

    pub fn constant(m: usize, c: impl Into<BigInt>) -> Self {
        CyclotomicElement::monomial(m, 0, c)
    }

    pub fn one(m: usize) -> Self {
        CyclotomicElement::constant(m, 1)
    }

    /// `c · X^k`, with `k` reduced mod `2m`.
    pub fn monomial(m: usize, k: usize, c: impl Into<BigInt>) -> Self {
        let mut x = CyclotomicElement::zero(m);
        x.coeffs[k % (2 * m)] = c.into();
        x
    }

    /// `2cos(π/q) = ζ^k + ζ^{2m−k}` for `m = q·k`.
    pub fn two_cos_pi_over(m: usize, q: usize) -> Self {
        assert!(q > 0 && m % q == 0, "{q} must divide {m}");
        let k = m / q;
        let mut x = CyclotomicElement::monomial(m, k, 1);
        x.coeffs[(2 * m - k) % (2 * m)] += 1;
        x
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// All coefficients zero (a sufficient, not necessary, condition for
    /// a zero value at `ζ`).
    pub fn is_zero_polynomial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicElement { m: self.m, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CyclotomicElement { m: self.m, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = CyclotomicElement::zero(self.m);
        out.add_product(self, other);
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn negate_in_place(&mut self) {
        for a in &mut self.coeffs {
            *a = -std::mem::take(a);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.m, other.m, "cyclotomic ring mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    /// `self += x · y`, skipping zero coefficients of either factor.
    pub fn add_product(&mut self, x: &Self, y: &Self) {
        assert!(self.m == x.m && x.m == y.m, "cyclotomic ring mismatch");
        let n = 2 * self.m;
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                self.coeffs[(i + j) % n] += a * b;
            }
        }
    }

    /// Sum of absolute values of the coefficients.
    pub fn norm1(&self) -> BigInt {
        self.coeffs.iter().map(|a| a.abs()).sum()
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}X")?,
                _ => write!(f, "{a}X^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Dense integer polynomial, lowest degree first, no trailing zeros.
type Poly = Vec<BigInt>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact quotient of `num` by the monic `den`. Panics if the division is
/// not exact.
fn div_exact_monic(num: &Poly, den: &Poly) -> Poly {
    let mut rem = num.clone();
    let q = rem_monic_in_place(&mut rem, den);
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    q
}

/// Reduces `rem` modulo the monic `den` and returns the quotient.
fn rem_monic_in_place(rem: &mut Poly, den: &Poly) -> Poly {
    let d = den.len() - 1;
    debug_assert!(den[d].is_one());
    trim(rem);
    if rem.len() <= d {
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for k in (0..quot.len()).rev() {
        let c = std::mem::take(&mut rem[k + d]);
        if c.is_zero() {
            continue;
        }
        for (i, b) in den[..d].iter().enumerate() {
            if !b.is_zero() {
                rem[k + i] -= &c * b;
            }
        }
        quot[k] = c;
    }
    rem.truncate(d);
    trim(rem);
    quot
}

/// `Φ_n(X) = (X^n − 1) / Π_{d | n, d < n} Φ_d(X)`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    assert!(n > 0);
    let mut cache: Vec<Option<Poly>> = vec![None; n + 1];
    fn phi(n: usize, cache: &mut Vec<Option<Poly>>) -> Poly {
        if let Some(p) = &cache[n] {
            return p.clone();
        }
        let mut num: Poly = vec![BigInt::zero(); n + 1];
        num[0] = BigInt::from(-1);
        num[n] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                let f = phi(d, cache);
                num = div_exact_monic(&num, &f);
            }
        }
        cache[n] = Some(num.clone());
        num
    }
    phi(n, &mut cache)
}

const START_PRECISION: u32 = 64;

/// Per-`m` data: `Φ_{2m}` and the starting-precision cosine table.
#[derive(Debug, Clone)]
pub struct CyclotomicRing {
    m: usize,
    phi: Poly,
    cosines: Vec<DyadicInterval>,
}

impl CyclotomicRing {
    pub fn new(m: usize) -> Self {
        assert!(m > 0, "half-order m must be positive");
        CyclotomicRing {
            m,
            phi: cyclotomic_polynomial(2 * m),
            cosines: cos_table(m, START_PRECISION),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `Φ_{2m}`, lowest degree first.
    pub fn cyclotomic_polynomial(&self) -> &[BigInt] {
        &self.phi
    }

    /// Exact test of `Σ a_j ζ^j = 0`.
    pub fn is_zero(&self, x: &CyclotomicElement) -> bool {
        assert_eq!(x.m, self.m, "cyclotomic ring mismatch");
        if x.is_zero_polynomial() {
            return true;
        }
        let mut rem = x.coeffs.clone();
        rem_monic_in_place(&mut rem, &self.phi);
        rem.is_empty()
    }

    /// Sign of `Σ a_j cos(jπ/m)`, the value of `x` at `ζ` when that value
    /// is real. For a non-real value this is the sign of its real part.
    pub fn sign_real(&self, x: &CyclotomicElement) -> Result<Sign> {
        assert_eq!(x.m, self.m, "cyclotomic ring mismatch");
        if x.is_zero_polynomial() {
            return Ok(Sign::Zero);
        }
        if let Some(sign) = decide(&x.coeffs, &self.cosines) {
            return Ok(sign);
        }
        // x + x̄ has value 2·Re(x) and is zero exactly when Re(x) is
        let two_m = 2 * self.m;
        let symmetric = CyclotomicElement {
            m: self.m,
            coeffs: (0..two_m)
                .map(|j| &x.coeffs[j] + &x.coeffs[(two_m - j) % two_m])
                .collect(),
        };
        if self.is_zero(&symmetric) {
            return Ok(Sign::Zero);
        }
        let cap = precision_cap(x).max(precision_cap(&symmetric));
        let mut prec = START_PRECISION;
        while prec < cap {
            prec = (prec * 2).min(cap);
            if let Some(sign) = decide(&x.coeffs, &cos_table(self.m, prec)) {
                return Ok(sign);
            }
        }
        Err(Error::InternalFault(format!(
            "could not separate {x} from zero at {cap} bits"
        )))
    }
}

fn cos_table(m: usize, prec: u32) -> Vec<DyadicInterval> {
    (0..2 * m as i64).map(|j| cos_pi_fraction(j, m as u64, prec)).collect()
}

/// Enclosure of `Σ a_j cos_j`; `Some(sign)` when it excludes zero.
fn decide(coeffs: &[BigInt], cosines: &[DyadicInterval]) -> Option<Sign> {
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for (a, c) in coeffs.iter().zip(cosines) {
        if a.is_zero() {
            continue;
        }
        if a.is_positive() {
            lo += a * &c.lo;
            hi += a * &c.hi;
        } else {
            lo += a * &c.hi;
            hi += a * &c.lo;
        }
    }
    if lo.is_positive() {
        Some(Sign::Positive)
    } else if hi.is_negative() {
        Some(Sign::Negative)
    } else {
        None
    }
}

/// Bits beyond which a non-zero value must have been separated from 0.
///
/// The enclosure width is at most `4·|x|·2^-p` and a non-zero value
/// exceeds `|x|^{-2m}`, so `p > (2m + 1)·log2|x| + 3` suffices. Taken for
/// both `x` and `x + x̄` when the value is not real.
fn precision_cap(x: &CyclotomicElement) -> u32 {
    let bits = x.norm1().bits() as u32;
    (2 * x.m as u32 + 1) * bits + 16
}

/// Zero test at `ζ = e^{iπ/m}`.
pub fn cyc_is_zero_at_zeta(x: &CyclotomicElement) -> bool {
    CyclotomicRing::new(x.m).is_zero(x)
}

/// Sign of the real value of `x` at `ζ`.
pub fn cyc_sign_real(x: &CyclotomicElement) -> Result<Sign> {
    CyclotomicRing::new(x.m).sign_real(x)
}

/// Moduli with residues, the Chinese remainder representation of a
/// natural number below the product of the moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residues {
    moduli: Vec<u64>,
    residues: Vec<u64>,
}

impl Residues {
    pub fn new(moduli: Vec<u64>, residues: Vec<u64>) -> Result<Self> {
        if moduli.len() != residues.len() {
            return Err(Error::ResidueCount {
                moduli: moduli.len(),
                residues: residues.len(),
            });
        }
        for (i, (&p, &r)) in moduli.iter().zip(&residues).enumerate() {
            if r >= p {
                return Err(Error::ResidueOutOfRange { residue: r, modulus: p });
            }
            for &q in &moduli[..i] {
                if p.gcd(&q) != 1 {
                    return Err(Error::NonCoprimeModuli(q, p));
                }
            }
        }
        Ok(Residues { moduli, residues })
    }

    /// `(M mod p_i)_i`.
    pub fn of(value: &BigUint, moduli: &[u64]) -> Result<Self> {
        let residues = moduli
            .iter()
            .map(|&p| (value % p).try_into().expect("residue below a u64 modulus"))
            .collect();
        Residues::new(moduli.to_vec(), residues)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn modulus_product(&self) -> BigUint {
        self.moduli.iter().map(|&p| BigUint::from(p)).product()
    }
}

/// The unique `M ∈ [0, Π p_i)` with `M ≡ r_i (mod p_i)`, by Garner's
/// mixed-radix recurrence.
pub fn crr_reconstruct(r: &Residues) -> BigUint {
    let mut value = BigUint::zero();
    let mut radix = BigUint::one();
    for (&p, &res) in r.moduli.iter().zip(&r.residues) {
        // value + radix·t ≡ res (mod p)
        let current: u64 = (&value % p).try_into().expect("fits");
        let radix_mod: u64 = (&radix % p).try_into().expect("fits");
        let diff = (res as u128 + p as u128 - current as u128) % p as u128;
        let inv = mod_inverse(radix_mod, p);
        let t = (diff * inv as u128 % p as u128) as u64;
        value += &radix * t;
        radix *= p;
    }
    value
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    if p == 1 {
        return 0;
    }
    let e = (a as i128).extended_gcd(&(p as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i128) as u64
}
