//! Exact arithmetic in GF(p^n) for odd prime p and n <= 4.
//!
//! Elements are coefficient vectors over Z_p in a canonical representation,
//! enumerated in a fixed order (coefficient vector read as a base-p integer,
//! constant term least significant). Every construction here is chosen so
//! that two runs, or two implementations following the same conventions,
//! number the elements identically:
//!
//! * the modulus is the lexicographically smallest monic irreducible
//!   polynomial of its degree (coefficients compared from x^(n-1) down to
//!   the constant term);
//! * element k has coefficient vector equal to the base-p digits of k.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Extension degrees above 4 are rejected: the exhaustive checks downstream
/// only stay cheap at desk scale.
pub const MAX_EXTENSION_DEGREE: u32 = 4;

/// Field-size cap; 2500 keeps every brute-force sweep (square roots, circle
/// enumerations, spectra) well under a second.
pub const MAX_FIELD_SIZE: u64 = 2500;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree {0} outside supported range 1..=4")]
    DegreeOutOfRange(u32),
    #[error("field size {0} exceeds the supported cap {MAX_FIELD_SIZE}")]
    TooLarge(u64),
    #[error("{0} is not an odd prime power in the supported range")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element index {index} out of range for field of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },
    #[error("coefficient {0} is not a residue mod {1}")]
    BadCoefficient(u64, u64),
}

/// The pair (p, n) with q = p^n, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePower {
    p: u64,
    n: u32,
    q: u64,
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Result<Self, FieldError> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        if n == 0 || n > MAX_EXTENSION_DEGREE {
            return Err(FieldError::DegreeOutOfRange(n));
        }
        let mut q: u64 = 1;
        for _ in 0..n {
            q = q.checked_mul(p).ok_or(FieldError::TooLarge(u64::MAX))?;
            if q > MAX_FIELD_SIZE {
                return Err(FieldError::TooLarge(q));
            }
        }
        Ok(PrimePower { p, n, q })
    }

    /// Factors q as p^n; rejects anything that is not an odd prime power in
    /// the supported range.
    pub fn from_order(q: u64) -> Result<Self, FieldError> {
        if q < 3 {
            return Err(FieldError::NotPrimePower(q));
        }
        let mut p = 3;
        while p * p <= q {
            if q.is_multiple_of(p) {
                let mut rest = q;
                let mut n = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    n += 1;
                }
                if rest != 1 {
                    return Err(FieldError::NotPrimePower(q));
                }
                return PrimePower::new(p, n);
            }
            p += 2;
        }
        // q itself is prime (and odd since q >= 3 and not divisible by any
        // candidate; explicitly exclude even q).
        if q.is_multiple_of(2) {
            return Err(FieldError::NotPrimePower(q));
        }
        PrimePower::new(q, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// All odd prime powers in `lo..=hi`, ascending.
    pub fn range(lo: u64, hi: u64) -> Vec<PrimePower> {
        (lo.max(3)..=hi)
            .filter_map(|q| PrimePower::from_order(q).ok())
            .collect()
    }
}

/// One member of GF(p^n): coefficients of 1, x, x^2, x^3, each in [0, p-1].
/// Slots at and above the extension degree stay zero, so derived equality
/// and hashing see the canonical representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    coeffs: [u16; MAX_EXTENSION_DEGREE as usize],
}

impl FieldElement {
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs[i] as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SquareClass {
    Zero,
    Square,
    NonSquare,
}

/// GF(p^n) with its canonical modulus and precomputed reduction rows.
#[derive(Debug, Clone)]
pub struct Field {
    params: PrimePower,
    /// Monic modulus in descending degree: [1, c_{n-1}, ..., c_0].
    modulus: Vec<u16>,
    /// reduction[t] = x^(n+t) reduced mod the modulus, t in 0..n-1.
    reduction: Vec<FieldElement>,
}

impl Field {
    /// Builds GF(p^n) with the canonical modulus. For n = 1 the modulus is
    /// the placeholder x, and arithmetic is plain Z_p.
    pub fn new(params: PrimePower) -> Self {
        let n = params.n as usize;
        let p = params.p;
        let modulus = if n == 1 {
            vec![1, 0]
        } else {
            canonical_irreducible(p, n)
        };
        let mut field = Field {
            params,
            modulus,
            reduction: Vec::new(),
        };
        // reduction[0] = x^n = -(c_{n-1} x^{n-1} + ... + c_0)
        let mut rows = Vec::with_capacity(n);
        let mut row = FieldElement::default();
        for i in 0..n {
            let c = field.modulus[field.modulus.len() - 1 - i] as u64;
            row.coeffs[i] = ((p - c % p) % p) as u16;
        }
        rows.push(row);
        for t in 1..n {
            rows.push(field.shift_reduce(rows[t - 1], &rows[0]));
        }
        field.reduction = rows;
        field
    }

    /// Multiplies by x and reduces, given the degree-n reduction row.
    fn shift_reduce(&self, a: FieldElement, x_pow_n: &FieldElement) -> FieldElement {
        let n = self.params.n as usize;
        let p = self.params.p;
        let overflow = a.coeffs[n - 1] as u64;
        let mut out = FieldElement::default();
        for i in (1..n).rev() {
            out.coeffs[i] = a.coeffs[i - 1];
        }
        out.coeffs[0] = 0;
        for i in 0..n {
            out.coeffs[i] =
                ((out.coeffs[i] as u64 + overflow * x_pow_n.coeffs[i] as u64) % p) as u16;
        }
        out
    }

    pub fn params(&self) -> PrimePower {
        self.params
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    pub fn n(&self) -> u32 {
        self.params.n
    }

    pub fn q(&self) -> u64 {
        self.params.q
    }

    /// Modulus coefficients in descending degree, [1, c_{n-1}, ..., c_0].
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::default()
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Embeds an integer residue into the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let p = self.params.p as i64;
        let r = ((v % p) + p) % p;
        let mut e = FieldElement::default();
        e.coeffs[0] = r as u16;
        e
    }

    /// Element at position `index` in the canonical enumeration: the
    /// coefficient vector is the base-p digit expansion of the index.
    pub fn element(&self, index: u64) -> FieldElement {
        debug_assert!(index < self.params.q);
        let p = self.params.p;
        let mut e = FieldElement::default();
        let mut v = index;
        for i in 0..self.params.n as usize {
            e.coeffs[i] = (v % p) as u16;
            v /= p;
        }
        e
    }

    pub fn checked_element(&self, index: u64) -> Result<FieldElement, FieldError> {
        if index >= self.params.q {
            return Err(FieldError::IndexOutOfRange {
                index,
                order: self.params.q,
            });
        }
        Ok(self.element(index))
    }

    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        let n = self.params.n as usize;
        let mut e = FieldElement::default();
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.params.p || (i >= n && c != 0) {
                return Err(FieldError::BadCoefficient(c, self.params.p));
            }
            if i < n {
                e.coeffs[i] = c as u16;
            }
        }
        Ok(e)
    }

    pub fn index_of(&self, a: FieldElement) -> u64 {
        let p = self.params.p;
        let mut v = 0;
        for i in (0..self.params.n as usize).rev() {
            v = v * p + a.coeffs[i] as u64;
        }
        v
    }

    /// All q elements in canonical order; index 0 is zero.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.params.q).map(|i| self.element(i))
    }

    #[inline]
    pub fn is_zero(&self, a: FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.params.p as u16;
        let mut out = FieldElement::default();
        for i in 0..self.params.n as usize {
            let s = a.coeffs[i] + b.coeffs[i];
            out.coeffs[i] = if s >= p { s - p } else { s };
        }
        out
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.params.p as u16;
        let mut out = FieldElement::default();
        for i in 0..self.params.n as usize {
            out.coeffs[i] = if a.coeffs[i] == 0 { 0 } else { p - a.coeffs[i] };
        }
        out
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let n = self.params.n as usize;
        let p = self.params.p;
        if n == 1 {
            let mut out = FieldElement::default();
            out.coeffs[0] = ((a.coeffs[0] as u64 * b.coeffs[0] as u64) % p) as u16;
            return out;
        }
        // Convolution, then fold the degree >= n terms through the
        // precomputed reduction rows.
        let mut conv = [0u64; 2 * MAX_EXTENSION_DEGREE as usize - 1];
        for i in 0..n {
            if a.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                conv[i + j] += a.coeffs[i] as u64 * b.coeffs[j] as u64;
            }
        }
        let mut out = FieldElement::default();
        for d in 0..n {
            out.coeffs[d] = (conv[d] % p) as u16;
        }
        for d in n..(2 * n - 1) {
            let c = conv[d] % p;
            if c == 0 {
                continue;
            }
            let row = &self.reduction[d - n];
            for i in 0..n {
                out.coeffs[i] = ((out.coeffs[i] as u64 + c * row.coeffs[i] as u64) % p) as u16;
            }
        }
        out
    }

    pub fn pow(&self, mut base: FieldElement, mut exp: u64) -> FieldElement {
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; zero is an error, never a silent value.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        let inv = self.pow(a, self.params.q - 2);
        debug_assert_eq!(self.mul(a, inv), self.one());
        Ok(inv)
    }

    /// Zero, nonzero square, or non-square, by the Euler criterion.
    pub fn square_class(&self, a: FieldElement) -> SquareClass {
        if self.is_zero(a) {
            return SquareClass::Zero;
        }
        let e = self.pow(a, (self.params.q - 1) / 2);
        if e == self.one() {
            SquareClass::Square
        } else {
            debug_assert_eq!(e, self.neg(self.one()));
            SquareClass::NonSquare
        }
    }

    /// All square roots of `a`, in canonical element order, found by
    /// exhaustive search (the field cap keeps this trivial).
    pub fn sqrt(&self, a: FieldElement) -> Vec<FieldElement> {
        self.elements().filter(|&b| self.mul(b, b) == a).collect()
    }

    /// Absolute trace down to Z_p, returned as an integer residue.
    pub fn trace(&self, a: FieldElement) -> u64 {
        let mut acc = a;
        let mut power = a;
        for _ in 1..self.params.n {
            power = self.pow(power, self.params.p);
            acc = self.add(acc, power);
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&c| c == 0));
        acc.coeffs[0] as u64
    }
}

/// The lexicographically smallest monic irreducible polynomial of degree n
/// over Z_p, comparing coefficients from x^(n-1) down to x^0. Returned in
/// descending-degree layout [1, c_{n-1}, ..., c_0].
fn canonical_irreducible(p: u64, n: usize) -> Vec<u16> {
    let total = p.pow(n as u32);
    for key in 0..total {
        // Decode most-significant digit as the x^(n-1) coefficient so that
        // ascending key order is exactly the required lexicographic order.
        let mut coeffs = vec![0u16; n + 1];
        coeffs[0] = 1;
        let mut v = key;
        for i in (1..=n).rev() {
            coeffs[i] = (v % p) as u16;
            v /= p;
        }
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of degree {n} exist over Z_{p}")
}

/// Exhaustive irreducibility check for monic polynomials of degree <= 4:
/// degrees 2 and 3 need only rootlessness, degree 4 additionally excludes
/// irreducible quadratic factors by trial division.
fn is_irreducible(poly: &[u16], p: u64) -> bool {
    let n = poly.len() - 1;
    if (1..=3).contains(&n) {
        if n == 1 {
            return true;
        }
        return !has_root(poly, p);
    }
    debug_assert_eq!(n, 4);
    if has_root(poly, p) {
        return false;
    }
    for c1 in 0..p {
        for c0 in 0..p {
            let quad = [1u16, c1 as u16, c0 as u16];
            if has_root(&quad, p) {
                continue;
            }
            if divides(&quad, poly, p) {
                return false;
            }
        }
    }
    true
}

fn eval_poly(poly: &[u16], x: u64, p: u64) -> u64 {
    poly.iter().fold(0u64, |acc, &c| (acc * x + c as u64) % p)
}

fn has_root(poly: &[u16], p: u64) -> bool {
    (0..p).any(|x| eval_poly(poly, x, p) == 0)
}

/// Does the monic `divisor` divide the monic `poly` over Z_p?
fn divides(divisor: &[u16], poly: &[u16], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.iter().map(|&c| c as u64).collect();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = rem[0];
        if lead != 0 {
            for (i, &c) in divisor.iter().enumerate() {
                let sub = lead * c as u64 % p;
                rem[i] = (rem[i] + p - sub) % p;
            }
        }
        debug_assert_eq!(rem[0], 0);
        rem.remove(0);
    }
    rem.iter().all(|&c| c == 0)
}
