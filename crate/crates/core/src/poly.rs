//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending powers with no trailing zeros, so the
//! zero polynomial stores nothing and reports degree -1. That degree
//! convention is load-bearing: the minimal-degree machinery counts on
//! `deg(p') = deg(p) - 1` holding for every nonzero `p`, constants included.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};
use thiserror::Error;

use crate::rational::{parse_rat, ParseRatError, Rat};

/// Polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

/// Error from [`poly_gcd`]: the gcd of two zero polynomials is undefined.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("gcd of two zero polynomials is undefined")]
pub struct GcdUndefined;

impl Poly {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monomial `z`.
    pub fn var() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `c * z^power`.
    pub fn monomial(c: Rat, power: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); power + 1];
        coeffs[power] = c;
        Poly::new(coeffs)
    }

    /// Convenience constructor from small integer coefficients (ascending).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero past the stored degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest-order coefficient, `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Lowest-order nonzero coefficient, `None` for the zero polynomial.
    pub fn trailing(&self) -> Option<&Rat> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Formal derivative; constants drop to the zero polynomial.
    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// The primitive with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rat::from_integer(BigInt::from(k + 1)));
        }
        Poly::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact value of the `order`-th derivative at `x`; `order = 0` is plain evaluation.
    pub fn eval_derivative(&self, order: usize, x: &Rat) -> Rat {
        let mut p = self.clone();
        for _ in 0..order {
            if p.is_zero() {
                return Rat::zero();
            }
            p = p.derivative();
        }
        p.eval(x)
    }

    /// Polynomial composition `self(inner)` by Horner's scheme.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, exp: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Euclidean division, `None` when the divisor is zero.
    pub fn div_rem(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let dlead = divisor.leading()?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.clone();
        if rem.coeffs.len() < divisor.coeffs.len() {
            return Some((Poly::zero(), rem));
        }
        let mut quo = vec![Rat::zero(); rem.coeffs.len() - ddeg];
        while !rem.is_zero() && rem.coeffs.len() >= divisor.coeffs.len() {
            let shift = rem.coeffs.len() - divisor.coeffs.len();
            let factor = rem.leading().unwrap() / dlead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let adj = &factor * dc;
                rem.coeffs[shift + i] -= adj;
            }
            while rem.coeffs.last().is_some_and(Zero::is_zero) {
                rem.coeffs.pop();
            }
            quo[shift] += factor;
        }
        Some((Poly::new(quo), rem))
    }

    /// True when all odd-power coefficients vanish (even as a function).
    pub fn is_even_fn(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// True when all even-power coefficients vanish (odd as a function).
    pub fn is_odd_fn(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    /// Ascending coefficients in the `"num/den"` text form.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Inverse of [`Poly::coeff_strings`].
    pub fn from_coeff_strings<S: AsRef<str>>(items: &[S]) -> Result<Poly, ParseRatError> {
        let coeffs = items
            .iter()
            .map(|s| parse_rat(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            if k == 0 || !unit_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => {
                    if !unit_mag {
                        write!(f, "*")?;
                    }
                    write!(f, "z")?;
                }
                _ => {
                    if !unit_mag {
                        write!(f, "*")?;
                    }
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
///
/// `poly_gcd(p, 0)` is `p` made monic; both inputs zero is an error.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly, GcdUndefined> {
    if p.is_zero() && q.is_zero() {
        return Err(GcdUndefined);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// True when `q` is a nonzero rational multiple of `p` (or both are zero).
pub fn proportional(p: &Poly, q: &Poly) -> bool {
    match (p.leading(), q.leading()) {
        (None, None) => true,
        (Some(_), Some(ql)) => {
            p.degree() == q.degree() && p.scale(&(ql / p.leading().unwrap())) == *q
        }
        _ => false,
    }
}

/// Canonical representative of a polynomial pair under joint rational scaling.
///
/// Clears all coefficients to integers, divides out their collective gcd, and
/// fixes the free sign so the lowest-order nonzero coefficient of `a` (of `b`
/// when `a` is zero) is positive. Two pairs are equal up to a multiplicative
/// factor exactly when their canonical forms are structurally equal.
pub fn canonical_pair(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if a.is_zero() && b.is_zero() {
        return (Poly::zero(), Poly::zero());
    }
    let mut denom_lcm = BigInt::one();
    for c in a.coeffs.iter().chain(b.coeffs.iter()) {
        if !c.is_zero() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
    }
    let scale = Rat::from_integer(denom_lcm);
    let ia = a.scale(&scale);
    let ib = b.scale(&scale);

    let mut content = BigInt::zero();
    for c in ia.coeffs.iter().chain(ib.coeffs.iter()) {
        content = content.gcd(c.numer());
    }
    let mut rescale = Rat::from_integer(content).recip();
    let reference = ia.trailing().or_else(|| ib.trailing()).expect("nonzero pair");
    if reference.is_negative() {
        rescale = -rescale;
    }
    (ia.scale(&rescale), ib.scale(&rescale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn z() -> Poly {
        Poly::var()
    }

    #[test]
    fn product_of_conjugate_factors() {
        let p = &z() + &Poly::one();
        let q = &z() - &Poly::one();
        assert_eq!(&p * &q, Poly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn self_subtraction_is_zero_with_degree_minus_one() {
        let p = Poly::from_ints(&[4, 0, 7]);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.degree(), -1);
    }

    #[test]
    fn scaling_by_rational() {
        let p = Poly::new(vec![int(1), rat(1, 2)]);
        assert_eq!(p.scale(&int(2)), Poly::from_ints(&[2, 1]));
    }

    #[test]
    fn derivative_examples() {
        let p = Poly::new(vec![int(0), int(-1), int(0), rat(1, 3)]);
        assert_eq!(p.derivative(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(Poly::constant(int(5)).derivative(), Poly::zero());
        assert_eq!(Poly::constant(int(5)).derivative().degree(), -1);
        assert_eq!(Poly::from_ints(&[1, 0, 1]).derivative(), Poly::from_ints(&[0, 2]));
    }

    #[test]
    fn derivative_degree_drop() {
        for p in [
            Poly::from_ints(&[3]),
            Poly::from_ints(&[0, 2]),
            Poly::from_ints(&[1, 2, 3, 4, 5]),
        ] {
            assert_eq!(p.derivative().degree(), p.degree() - 1);
        }
    }

    #[test]
    fn antiderivative_examples() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        assert_eq!(
            p.antiderivative(),
            Poly::new(vec![int(0), int(-1), int(0), rat(1, 3)])
        );
        assert_eq!(Poly::zero().antiderivative(), Poly::zero());
        assert_eq!(Poly::from_ints(&[0, 2]).antiderivative(), Poly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn derivative_inverts_antiderivative() {
        let p = Poly::new(vec![rat(3, 7), int(-2), rat(5, 4), int(9)]);
        assert_eq!(p.antiderivative().derivative(), p);
    }

    #[test]
    fn derivative_evaluation() {
        let p = Poly::from_ints(&[1, 0, 1]);
        assert_eq!(p.eval_derivative(0, &int(1)), int(2));
        assert_eq!(p.eval_derivative(2, &int(1)), int(2));
        let cubic = Poly::new(vec![int(0), int(-1), int(0), rat(1, 3)]);
        assert_eq!(cubic.eval_derivative(0, &int(-1)), rat(2, 3));
        assert_eq!(p.eval_derivative(5, &int(1)), int(0));
    }

    #[test]
    fn gcd_examples() {
        let g = poly_gcd(&Poly::from_ints(&[-1, 0, 1]), &Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(g, Poly::from_ints(&[-1, 1]));

        let g = poly_gcd(&Poly::from_ints(&[1, 0, 1]), &Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(g, Poly::one());

        let p = Poly::from_ints(&[2, 0, 4]);
        let g = poly_gcd(&p, &Poly::zero()).unwrap();
        assert_eq!(g, Poly::new(vec![rat(1, 2), int(0), int(1)]));

        assert_eq!(poly_gcd(&Poly::zero(), &Poly::zero()), Err(GcdUndefined));
    }

    #[test]
    fn division_with_remainder() {
        let p = Poly::from_ints(&[1, 0, 0, 1]);
        let d = Poly::from_ints(&[1, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, p);
        assert!(r.degree() < d.degree());
        assert!(p.div_rem(&Poly::zero()).is_none());
    }

    #[test]
    fn parity_predicates() {
        assert!(Poly::from_ints(&[1, 0, 3]).is_even_fn());
        assert!(Poly::from_ints(&[0, 2, 0, -1]).is_odd_fn());
        assert!(!Poly::from_ints(&[1, 1]).is_even_fn());
        assert!(Poly::zero().is_even_fn() && Poly::zero().is_odd_fn());
    }

    #[test]
    fn composition_doubles_degree() {
        // 1 - z^2, then p(1 - z^2)
        let inner = Poly::from_ints(&[1, 0, -1]);
        let p = Poly::new(vec![int(1), rat(1, 2)]);
        assert_eq!(p.compose(&inner), Poly::new(vec![rat(3, 2), int(0), rat(-1, 2)]));
    }

    #[test]
    fn canonical_pair_clears_and_fixes_sign() {
        // 3*(z^2+1), 3*(2z) reduces to (z^2+1, 2z)
        let (a, b) = canonical_pair(&Poly::from_ints(&[3, 0, 3]), &Poly::from_ints(&[0, 6]));
        assert_eq!(a, Poly::from_ints(&[1, 0, 1]));
        assert_eq!(b, Poly::from_ints(&[0, 2]));

        // (z^3/3 - z, -2/3) normalizes to (3z - z^3, 2)
        let raw_a = Poly::new(vec![int(0), int(-1), int(0), rat(1, 3)]);
        let raw_b = Poly::constant(rat(-2, 3));
        let (a, b) = canonical_pair(&raw_a, &raw_b);
        assert_eq!(a, Poly::from_ints(&[0, 3, 0, -1]));
        assert_eq!(b, Poly::from_ints(&[2]));
    }

    #[test]
    fn canonical_pair_with_zero_component() {
        let (a, b) = canonical_pair(&Poly::from_ints(&[-1, 0, 1]), &Poly::zero());
        assert_eq!(a, Poly::from_ints(&[1, 0, -1]));
        assert!(b.is_zero());
    }

    #[test]
    fn proportionality() {
        let p = Poly::from_ints(&[1, 0, 1]);
        assert!(proportional(&p, &p.scale(&rat(-3, 7))));
        assert!(!proportional(&p, &Poly::from_ints(&[1, 1, 1])));
        assert!(!proportional(&p, &Poly::zero()));
        assert!(proportional(&Poly::zero(), &Poly::zero()));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Poly::from_ints(&[1, 0, 1]).to_string(), "1 + z^2");
        assert_eq!(Poly::from_ints(&[0, 3, 0, -1]).to_string(), "3*z - z^3");
        assert_eq!(Poly::from_ints(&[0, 2]).to_string(), "2*z");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::new(vec![rat(-1, 2)]).to_string(), "-1/2");
    }

    #[test]
    fn coeff_string_round_trip() {
        let p = Poly::new(vec![rat(3, 2), int(0), rat(-1, 2)]);
        assert_eq!(p.coeff_strings(), vec!["3/2", "0", "-1/2"]);
        assert_eq!(Poly::from_coeff_strings(&p.coeff_strings()).unwrap(), p);
    }
}
