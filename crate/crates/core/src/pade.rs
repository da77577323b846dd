//! Exact Padé approximants to (1-x)^(-1/2) and (1-x)^(1/2), and the two
//! families of rational sign-function iterations assembled from them.
//!
//! The sign of a nonimaginary z can be written z/(1-x)^(1/2) or
//! (1-x)^(1/2)/z with x = 1 - z^2. Substituting a Padé approximant for the
//! square root turns each identity into a fixed-point iteration whose
//! numerator and denominator degrees sum to 2s - 1, where s is the local
//! convergence order at the fixed points +1 and -1.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::RatMat;
use crate::poly::{canonical_pair, poly_gcd, Poly};
use crate::rational::{int, rat, Rat};

/// Which square-root power series a [`PowerSeries`] truncates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// (1-x)^(-1/2): all Taylor coefficients positive.
    InvSqrt,
    /// (1-x)^(1/2): coefficients negative from index 1 on.
    Sqrt,
}

impl SeriesKind {
    fn exponent(self) -> Rat {
        match self {
            SeriesKind::InvSqrt => rat(-1, 2),
            SeriesKind::Sqrt => rat(1, 2),
        }
    }
}

/// Exact truncated Taylor expansion of (1-x)^(±1/2) at x = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    kind: SeriesKind,
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the truncation.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// First `count` exact Taylor coefficients of (1-x)^(±1/2).
///
/// Uses the binomial recurrence c_{k+1} = c_k * (k - a) / (k + 1) with
/// a = ±1/2, applied to the expansion in -x.
pub fn series_coefficients(kind: SeriesKind, count: usize) -> PowerSeries {
    let alpha = kind.exponent();
    let mut coeffs = Vec::with_capacity(count);
    if count > 0 {
        coeffs.push(Rat::one());
    }
    for k in 0..count.saturating_sub(1) {
        let k_rat = int(k as i64);
        let next = coeffs[k].clone() * (&k_rat - &alpha) / (k_rat + Rat::one());
        coeffs.push(next);
    }
    PowerSeries { kind, coeffs }
}

/// An exact (mu, ell) Padé approximant P/Q with Q(0) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadePair {
    pub numer: Poly,
    pub denom: Poly,
    pub mu: usize,
    pub ell: usize,
}

/// Errors from Padé-approximant construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadeError {
    #[error("series provides {have} coefficients but the ({mu},{ell}) approximant needs {needed}")]
    NotEnoughCoefficients { mu: usize, ell: usize, needed: usize, have: usize },
    #[error("Padé linear system for ({mu},{ell}) is singular")]
    SingularSystem { mu: usize, ell: usize },
    #[error("cannot take the reciprocal: approximant numerator vanishes at 0")]
    ZeroConstantTerm,
}

/// Computes the exact (mu, ell) Padé approximant to the given series.
///
/// Solves the coefficient-matching linear system for Q (normalized to
/// Q(0) = 1) over exact rationals, then reads P off the product series.
pub fn pade_approximant(
    series: &PowerSeries,
    mu: usize,
    ell: usize,
) -> Result<PadePair, PadeError> {
    let needed = mu + ell + 1;
    if series.len() < needed {
        return Err(PadeError::NotEnoughCoefficients {
            mu,
            ell,
            needed,
            have: series.len(),
        });
    }
    // Rows j = mu+1 ..= mu+ell of "series * Q - P = O(x^{mu+ell+1})" involve
    // only Q: sum_{i=1..ell} c_{j-i} q_i = -c_j, with c_k = 0 for k < 0.
    let mut q_coeffs = vec![Rat::one()];
    if ell > 0 {
        let mut system = RatMat::zeros(ell, ell);
        let mut rhs = Vec::with_capacity(ell);
        for row in 0..ell {
            let j = mu + 1 + row;
            for i in 1..=ell {
                if j >= i {
                    system[(row, i - 1)] = series.coeff(j - i);
                }
            }
            rhs.push(-series.coeff(j));
        }
        let solution = system
            .solve(&rhs)
            .map_err(|_| PadeError::SingularSystem { mu, ell })?;
        q_coeffs.extend(solution);
    }
    let denom = Poly::new(q_coeffs);
    // P is the product series through degree mu.
    let mut p_coeffs = Vec::with_capacity(mu + 1);
    for j in 0..=mu {
        let mut acc = Rat::zero();
        for i in 0..=j.min(ell) {
            acc += denom.coeff(i) * series.coeff(j - i);
        }
        p_coeffs.push(acc);
    }
    Ok(PadePair {
        numer: Poly::new(p_coeffs),
        denom,
        mu,
        ell,
    })
}

/// First index `<= mu + ell` at which `series * Q - P` has a nonzero
/// coefficient, or `None` when the defining order condition holds.
pub fn pade_order_defect(series: &PowerSeries, pair: &PadePair) -> Option<usize> {
    for j in 0..=pair.mu + pair.ell {
        let mut acc = -pair.numer.coeff(j);
        for i in 0..=j.min(pair.denom.degree().max(0) as usize) {
            acc += pair.denom.coeff(i) * series.coeff(j - i);
        }
        if !acc.is_zero() {
            return Some(j);
        }
    }
    None
}

/// Swaps an approximant of h into the (ell, mu) approximant of 1/h.
///
/// The result is renormalized so its denominator (the old numerator) has
/// constant term one; fails when that constant term is zero.
pub fn reciprocal_pair(pair: &PadePair) -> Result<PadePair, PadeError> {
    let p0 = pair.numer.coeff(0);
    if p0.is_zero() {
        return Err(PadeError::ZeroConstantTerm);
    }
    let scale = p0.recip();
    Ok(PadePair {
        numer: pair.denom.scale(&scale),
        denom: pair.numer.scale(&scale),
        mu: pair.ell,
        ell: pair.mu,
    })
}

/// Exact composition p(1 - z^2); the degree doubles.
pub fn substitute_one_minus_z_squared(p: &Poly) -> Poly {
    p.compose(&Poly::from_ints(&[1, 0, -1]))
}

/// Which of the two iteration families a spec belongs to.
///
/// The parity of the numerator degree distinguishes them: odd numerator
/// degree means the Padé family, even means the reciprocal family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "pade")]
    Pade,
    #[serde(rename = "reciprocal-pade")]
    ReciprocalPade,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Pade => write!(f, "pade"),
            Family::ReciprocalPade => write!(f, "reciprocal-pade"),
        }
    }
}

impl FromStr for Family {
    type Err = SpecFormatError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pade" => Ok(Family::Pade),
            "reciprocal-pade" => Ok(Family::ReciprocalPade),
            other => Err(SpecFormatError::UnknownFamily {
                family: other.to_owned(),
            }),
        }
    }
}

/// A validated member of the Padé or reciprocal Padé family.
///
/// `num/den` is the iteration function in canonical form: integer
/// coefficients with collective gcd one and a positive lowest-order
/// numerator coefficient. Degrees are exactly (m, n) with m + n = 2s - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationSpec {
    m: i64,
    n: i64,
    s: i64,
    family: Family,
    num: Poly,
    den: Poly,
}

/// Errors from [`build_phi`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("degrees must be nonnegative, got ({m}, {n})")]
    NegativeDegree { m: i64, n: i64 },
    #[error("m+n must be odd, got ({m}, {n})")]
    EvenDegreeSum { m: i64, n: i64 },
    #[error("degree pair (1, 0) yields the trivial iteration z -> z")]
    TrivialIteration,
    #[error("degree pair ({m}, {n}) has order s = 1; the family starts at s = 2")]
    OrderTooLow { m: i64, n: i64 },
    #[error(transparent)]
    Pade(#[from] PadeError),
}

/// Structural invariant violations found by [`IterationSpec::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecFormatError {
    #[error("unknown family tag {family:?}")]
    UnknownFamily { family: String },
    #[error("coefficient entry is not a valid rational: {0}")]
    BadCoefficient(#[from] crate::rational::ParseRatError),
    #[error("record is inconsistent: {reason}")]
    Inconsistent { reason: String },
}

/// Builds the member of the (reciprocal) Padé family with numerator degree
/// `m` and denominator degree `n`.
///
/// Odd `m` selects the Padé family z*P(1-z^2)/Q(1-z^2); even `m` selects the
/// reciprocal family Q(1-z^2)/(z*P(1-z^2)). Requires m + n odd and >= 3.
pub fn build_phi(m: i64, n: i64) -> Result<IterationSpec, BuildError> {
    if m < 0 || n < 0 {
        return Err(BuildError::NegativeDegree { m, n });
    }
    if (m + n) % 2 == 0 {
        return Err(BuildError::EvenDegreeSum { m, n });
    }
    if m + n == 1 {
        return if (m, n) == (1, 0) {
            Err(BuildError::TrivialIteration)
        } else {
            Err(BuildError::OrderTooLow { m, n })
        };
    }
    let s = (m + n + 1) / 2;
    let z = Poly::var();
    let (num, den, family) = if m % 2 == 1 {
        let mu = ((m - 1) / 2) as usize;
        let ell = (n / 2) as usize;
        let series = series_coefficients(SeriesKind::InvSqrt, mu + ell + 1);
        let pair = pade_approximant(&series, mu, ell)?;
        let num = &z * &substitute_one_minus_z_squared(&pair.numer);
        let den = substitute_one_minus_z_squared(&pair.denom);
        (num, den, Family::Pade)
    } else {
        let mu = ((n - 1) / 2) as usize;
        let ell = (m / 2) as usize;
        let series = series_coefficients(SeriesKind::InvSqrt, mu + ell + 1);
        let pair = pade_approximant(&series, mu, ell)?;
        let num = substitute_one_minus_z_squared(&pair.denom);
        let den = &z * &substitute_one_minus_z_squared(&pair.numer);
        (num, den, Family::ReciprocalPade)
    };
    let (num, den) = canonical_pair(&num, &den);
    debug_assert_eq!(num.degree(), m);
    debug_assert_eq!(den.degree(), n);
    Ok(IterationSpec {
        m,
        n,
        s,
        family,
        num,
        den,
    })
}

/// All 2s family members with m + n = 2s - 1, in ascending m.
pub fn family_at_order(s: i64) -> Result<Vec<IterationSpec>, BuildError> {
    if s < 2 {
        return Err(BuildError::OrderTooLow { m: s.max(0), n: s.max(1) - 1 });
    }
    (0..=2 * s - 1).map(|m| build_phi(m, 2 * s - 1 - m)).collect()
}

impl IterationSpec {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Local convergence order at the fixed points ±1.
    pub fn order(&self) -> i64 {
        self.s
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Checks every structural invariant; used on deserialized records.
    pub fn validate(&self) -> Result<(), SpecFormatError> {
        let fail = |reason: String| Err(SpecFormatError::Inconsistent { reason });
        if self.m + self.n != 2 * self.s - 1 || self.s < 2 {
            return fail(format!(
                "degrees ({}, {}) do not match order {}",
                self.m, self.n, self.s
            ));
        }
        if self.num.degree() != self.m || self.den.degree() != self.n {
            return fail("stored polynomial degrees disagree with (m, n)".into());
        }
        let expected_family = if self.m % 2 == 1 {
            Family::Pade
        } else {
            Family::ReciprocalPade
        };
        if self.family != expected_family {
            return fail(format!(
                "family tag {} disagrees with numerator degree parity",
                self.family
            ));
        }
        let odd_even = self.num.is_odd_fn() && self.den.is_even_fn();
        let even_odd = self.num.is_even_fn() && self.den.is_odd_fn();
        if !(odd_even || even_odd) {
            return fail("iteration is not odd under z -> -z".into());
        }
        let (ca, cb) = canonical_pair(&self.num, &self.den);
        if ca != self.num || cb != self.den {
            return fail("coefficients are not in canonical form".into());
        }
        match poly_gcd(&self.num, &self.den) {
            Ok(g) if g.degree() == 0 => Ok(()),
            _ => fail("numerator and denominator share a factor".into()),
        }
    }

    pub fn to_record(&self) -> SpecRecord {
        SpecRecord {
            m: self.m,
            n: self.n,
            s: self.s,
            family: self.family.to_string(),
            numerator: self.num.coeff_strings(),
            denominator: self.den.coeff_strings(),
        }
    }

    /// Rebuilds a spec from its interchange record, re-canonicalizing the
    /// coefficients and re-checking every invariant.
    pub fn from_record(record: &SpecRecord) -> Result<IterationSpec, SpecFormatError> {
        let family = record.family.parse::<Family>()?;
        let num = Poly::from_coeff_strings(&record.numerator)?;
        let den = Poly::from_coeff_strings(&record.denominator)?;
        let (num, den) = canonical_pair(&num, &den);
        let spec = IterationSpec {
            m: record.m,
            n: record.n,
            s: record.s,
            family,
            num,
            den,
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for IterationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "phi_{{{},{}}}: ({}) / ({})",
            self.m, self.n, self.num, self.den
        )
    }
}

/// Interchange record for an [`IterationSpec`]: the structured-output and
/// golden-file contract. Coefficients are ascending `"num/den"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecRecord {
    pub m: i64,
    pub n: i64,
    pub s: i64,
    pub family: String,
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
}

/// Exact central-binomial form of the (1-x)^(-1/2) coefficients,
/// binom(2k, k) / 4^k; used as an independent cross-check on the recurrence.
pub fn central_binomial_coefficient(k: usize) -> Rat {
    let mut binom = BigInt::one();
    for i in 0..k {
        binom = binom * BigInt::from(2 * k - i) / BigInt::from(i + 1);
    }
    Rat::new(binom, BigInt::from(4).pow(k as u32))
}
