//! Dealer-side setup and pairwise key derivation.
//!
//! A trusted registration centre samples a bivariate master polynomial
//! `F(x, y)` of degree `(t-1, h-1)` and hands participant `U_i` the share
//! pair `s_i(y) = F(x_i, y)` and `s_i(x) = F(x, x_i)` at the public point
//! `x_i = i`. Any two participants then derive the same pairwise key
//! `k_{i,j} = F(x_min, x_max)` locally from their own shares, with no
//! further interaction.

use alloc::vec::Vec;

use rand_core::RngCore;
use thiserror::Error;

use crate::gfpoly::{Axis, BiPoly, FieldElement, GfError, Poly, PrimeField};
use crate::rng::derive_rng;

/// Violated public-parameter constraint, named explicitly so configuration
/// errors surface as diagnostics rather than downstream misbehaviour.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("p is not prime (p = {0})")]
    NotPrime(u64),
    #[error("p > n violated (p = {p}, n = {n})")]
    ModulusNotAboveCount { p: u64, n: u64 },
    #[error("n >= 2 violated (n = {0})")]
    TooFewParticipants(u64),
    #[error("t >= 1 violated")]
    ZeroT,
    #[error("h >= 1 violated")]
    ZeroH,
    #[error("h > 2t-2 violated (t = {t}, h = {h})")]
    ShareDegree { t: u64, h: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("cannot derive a pairwise key with self")]
pub struct SelfKeyError;

/// Validated public parameters: prime modulus `p`, participant count `n` and
/// the two share degree parameters `t`, `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeParams {
    p: u64,
    n: u64,
    t: u64,
    h: u64,
    field: PrimeField,
}

impl SchemeParams {
    /// Checks every constraint once: `p` prime (trial division), `p > n`,
    /// `n >= 2`, `t >= 1`, `h >= 1`, `h > 2t-2`.
    pub fn new(p: u64, n: u64, t: u64, h: u64) -> Result<Self, ParamError> {
        let field = PrimeField::new(p)?;
        if !crate::gfpoly::is_prime(p) {
            return Err(ParamError::NotPrime(p));
        }
        if p <= n {
            return Err(ParamError::ModulusNotAboveCount { p, n });
        }
        if n < 2 {
            return Err(ParamError::TooFewParticipants(n));
        }
        if t < 1 {
            return Err(ParamError::ZeroT);
        }
        if h < 1 {
            return Err(ParamError::ZeroH);
        }
        if h <= 2 * t - 2 {
            return Err(ParamError::ShareDegree { t, h });
        }
        Ok(Self { p, n, t, h, field })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }
}

/// One-based participant index. Its public evaluation point is `x_i = i`,
/// which `p > n` keeps nonzero and pairwise distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParticipantId(u64);

impl ParticipantId {
    pub fn new(index: u64) -> Option<Self> {
        (index >= 1).then_some(Self(index))
    }

    pub fn index(self) -> u64 {
        self.0
    }

    pub fn point(self, field: &PrimeField) -> FieldElement {
        field.element(self.0)
    }
}

impl core::fmt::Display for ParticipantId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "U{}", self.0)
    }
}

/// The dealer's bivariate master polynomial. Kept accessible so tests can
/// check issued shares and derived keys against direct evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterSecret {
    polynomial: BiPoly,
}

impl MasterSecret {
    pub fn polynomial(&self) -> &BiPoly {
        &self.polynomial
    }
}

/// Participant `U_i`'s share pair: `s_y` is `F(x_i, y)` (degree bound `h`)
/// and `s_x` is `F(x, x_i)` (degree bound `t`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    owner: ParticipantId,
    s_y: Poly,
    s_x: Poly,
}

impl Token {
    pub fn new(owner: ParticipantId, s_y: Poly, s_x: Poly) -> Self {
        Self { owner, s_y, s_x }
    }

    pub fn owner(&self) -> ParticipantId {
        self.owner
    }

    pub fn share_in_y(&self) -> &Poly {
        &self.s_y
    }

    pub fn share_in_x(&self) -> &Poly {
        &self.s_x
    }
}

/// Symmetric pairwise key; both endpoints derive the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairwiseKey {
    key: FieldElement,
    endpoints: (ParticipantId, ParticipantId),
}

impl PairwiseKey {
    pub fn key(&self) -> FieldElement {
        self.key
    }

    /// Endpoint pair in canonical (low, high) order.
    pub fn endpoints(&self) -> (ParticipantId, ParticipantId) {
        self.endpoints
    }
}

/// Samples the master polynomial from the seeded generator and issues one
/// token per participant. Equal `(params, seed)` yields identical output.
pub fn mrc_setup(params: &SchemeParams, seed: u64) -> (MasterSecret, Vec<Token>) {
    let field = params.field();
    let mut rng = derive_rng(seed, b"mrc", 0);
    let coeffs: Vec<Vec<FieldElement>> = (0..params.t())
        .map(|_| (0..params.h()).map(|_| field.sample(&mut rng)).collect())
        .collect();
    let polynomial = BiPoly::new(coeffs).expect("t >= 1 and h >= 1 by construction");

    let tokens = (1..=params.n())
        .map(|i| {
            let id = ParticipantId::new(i).expect("i >= 1");
            let point = id.point(field);
            Token {
                owner: id,
                s_y: polynomial.eval_partial(Axis::FixX, point, field),
                s_x: polynomial.eval_partial(Axis::FixY, point, field),
            }
        })
        .collect();

    (MasterSecret { polynomial }, tokens)
}

/// Derives `k_{i,j} = F(x_min, x_max)` from the caller's token: the
/// lower-indexed endpoint evaluates its `s_y` share at the peer's point, the
/// higher-indexed one its `s_x` share. Repeating the derivation always
/// returns the same key.
pub fn derive_pairwise_key(
    token: &Token,
    peer: ParticipantId,
    field: &PrimeField,
) -> Result<PairwiseKey, SelfKeyError> {
    if peer == token.owner {
        return Err(SelfKeyError);
    }
    let key = if token.owner < peer {
        token.s_y.eval(peer.point(field), field)
    } else {
        token.s_x.eval(peer.point(field), field)
    };
    Ok(PairwiseKey {
        key,
        endpoints: (token.owner.min(peer), token.owner.max(peer)),
    })
}

/// Uniform token sampling for callers that need standalone fixtures.
pub fn random_token(
    params: &SchemeParams,
    owner: ParticipantId,
    rng: &mut impl RngCore,
) -> Token {
    let field = params.field();
    let s_y: Vec<FieldElement> = (0..params.h()).map(|_| field.sample(rng)).collect();
    let s_x: Vec<FieldElement> = (0..params.t()).map(|_| field.sample(rng)).collect();
    Token {
        owner,
        s_y: Poly::new(s_y, params.h() as usize).expect("exact length"),
        s_x: Poly::new(s_x, params.t() as usize).expect("exact length"),
    }
}
