//! Arithmetic in GF(p) for word-sized primes, univariate and bivariate
//! polynomials over it, and the fixed-width byte encoding used whenever field
//! elements are hashed, encrypted or XOR-combined.
//!
//! Moduli are capped below 2^61 so that products fit in a `u128` without any
//! big-integer machinery.

use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;
use thiserror::Error;

/// Errors from field and byte-string primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("modulus {0} outside the supported range [2, 2^61)")]
    ModulusOutOfRange(u64),
    #[error("element has no multiplicative inverse")]
    NonInvertible,
    #[error("byte string length mismatch ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("{got} coefficients exceed the degree bound {bound}")]
    TooManyCoeffs { got: usize, bound: usize },
    #[error("coefficient matrix must be non-empty and rectangular")]
    MalformedMatrix,
}

/// A residue in `[0, p)`. The modulus is carried by the [`PrimeField`]
/// context, not by the element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    pub fn value(self) -> u64 {
        self.0
    }
}

impl core::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Modular arithmetic context for a fixed modulus `p`.
///
/// Construction only range-checks `p`; primality is the caller's contract and
/// is validated once where scheme parameters are built, not per operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    width: usize,
}

impl PrimeField {
    /// Exclusive upper bound on supported moduli.
    pub const MAX_MODULUS: u64 = 1 << 61;

    pub fn new(p: u64) -> Result<Self, GfError> {
        if p < 2 || p >= Self::MAX_MODULUS {
            return Err(GfError::ModulusOutOfRange(p));
        }
        let bits = 64 - (p - 1).leading_zeros() as usize;
        Ok(Self {
            p,
            width: bits.div_ceil(8),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Width in bytes of [`PrimeField::encode`] output: `ceil(bitlen(p-1)/8)`.
    pub fn encoded_width(&self) -> usize {
        self.width
    }

    /// Embeds an integer, reducing mod p.
    pub fn element(&self, v: u64) -> FieldElement {
        FieldElement(v % self.p)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1 % self.p)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0; // no overflow: both < 2^61
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement((u128::from(a.0) * u128::from(b.0) % u128::from(self.p)) as u64)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    ///
    /// Zero (and, under a composite modulus, any element sharing a factor
    /// with it) has no inverse and yields [`GfError::NonInvertible`].
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.0 == 0 {
            return Err(GfError::NonInvertible);
        }
        let (mut r0, mut r1) = (i128::from(a.0), i128::from(self.p));
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        if r0 != 1 {
            return Err(GfError::NonInvertible);
        }
        let p = i128::from(self.p);
        Ok(FieldElement(s0.rem_euclid(p) as u64))
    }

    /// Fixed-width big-endian encoding; injective on `[0, p)` and
    /// length-constant for a fixed modulus.
    pub fn encode(&self, a: FieldElement) -> Vec<u8> {
        let be = a.0.to_be_bytes();
        be[8 - self.width..].to_vec()
    }

    /// Inverse of [`PrimeField::encode`]; `None` on wrong width or a value
    /// outside `[0, p)`.
    pub fn decode(&self, bytes: &[u8]) -> Option<FieldElement> {
        if bytes.len() != self.width {
            return None;
        }
        let mut be = [0u8; 8];
        be[8 - self.width..].copy_from_slice(bytes);
        let v = u64::from_be_bytes(be);
        (v < self.p).then_some(FieldElement(v))
    }

    /// Uniform element of `[0, p)` by masked rejection sampling.
    pub fn sample(&self, rng: &mut impl RngCore) -> FieldElement {
        let bits = 64 - (self.p - 1).leading_zeros();
        let mask = if bits == 64 { u64::MAX } else { (1 << bits) - 1 };
        loop {
            let v = rng.next_u64() & mask;
            if v < self.p {
                return FieldElement(v);
            }
        }
    }

    /// Uniform element of `[1, p)`.
    pub fn sample_nonzero(&self, rng: &mut impl RngCore) -> FieldElement {
        loop {
            let v = self.sample(rng);
            if v.0 != 0 {
                return v;
            }
        }
    }
}

/// Deterministic trial-division primality test. Intended for desk-scale
/// moduli; cost grows with sqrt(p).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for q in [2u64, 3] {
        if p % q == 0 {
            return p == q;
        }
    }
    let mut d = 5u64;
    while d * d <= p {
        if p % d == 0 || p % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Bytewise XOR of two equal-length strings.
pub fn xor_bytes(a: &[u8], b: &[u8]) -> Result<Vec<u8>, GfError> {
    if a.len() != b.len() {
        return Err(GfError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).map(|(x, y)| x ^ y).collect())
}

/// Univariate polynomial with a fixed coefficient count (constant term
/// first). Shorter inputs are zero-padded up to the bound; longer inputs are
/// rejected rather than truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>, degree_bound: usize) -> Result<Self, GfError> {
        if coeffs.len() > degree_bound {
            return Err(GfError::TooManyCoeffs {
                got: coeffs.len(),
                bound: degree_bound,
            });
        }
        coeffs.resize(degree_bound, FieldElement(0));
        Ok(Self { coeffs })
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: FieldElement, field: &PrimeField) -> FieldElement {
        let mut acc = field.zero();
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }
}

/// Which variable of a bivariate polynomial to pin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    FixX,
    FixY,
}

/// Bivariate polynomial; entry `(u, v)` of the matrix is the coefficient of
/// `x^u y^v`. The matrix is exactly `deg_x_bound x deg_y_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Vec<FieldElement>>,
}

impl BiPoly {
    pub fn new(coeffs: Vec<Vec<FieldElement>>) -> Result<Self, GfError> {
        let cols = coeffs.first().map(Vec::len).unwrap_or(0);
        if cols == 0 || coeffs.iter().any(|row| row.len() != cols) {
            return Err(GfError::MalformedMatrix);
        }
        Ok(Self { coeffs })
    }

    pub fn deg_x_bound(&self) -> usize {
        self.coeffs.len()
    }

    pub fn deg_y_bound(&self) -> usize {
        self.coeffs[0].len()
    }

    pub fn coeff(&self, u: usize, v: usize) -> FieldElement {
        self.coeffs[u][v]
    }

    /// Pins one variable at `point`, returning the univariate polynomial in
    /// the other. `FixX` yields a polynomial in `y` (length `deg_y_bound`),
    /// `FixY` one in `x` (length `deg_x_bound`).
    pub fn eval_partial(&self, axis: Axis, point: FieldElement, field: &PrimeField) -> Poly {
        let coeffs = match axis {
            Axis::FixX => (0..self.deg_y_bound())
                .map(|v| {
                    let mut acc = field.zero();
                    for u in (0..self.deg_x_bound()).rev() {
                        acc = field.add(field.mul(acc, point), self.coeffs[u][v]);
                    }
                    acc
                })
                .collect::<Vec<_>>(),
            Axis::FixY => self
                .coeffs
                .iter()
                .map(|row| {
                    let mut acc = field.zero();
                    for &c in row.iter().rev() {
                        acc = field.add(field.mul(acc, point), c);
                    }
                    acc
                })
                .collect(),
        };
        let bound = coeffs.len();
        Poly::new(coeffs, bound).expect("length matches bound")
    }
}
