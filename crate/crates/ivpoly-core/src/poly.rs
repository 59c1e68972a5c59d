//! Exact univariate polynomial arithmetic over ℤ and over residue rings ℤ/dℤ.
//!
//! Coefficients are stored ascending by degree; the zero polynomial is the
//! empty sequence and its degree is `None`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial c·x^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` plays the role of degree −∞ for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn eval(&self, a: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    /// Divides every coefficient by `d`, which must divide exactly.
    pub fn div_exact(&self, d: &BigInt) -> Result<IntPoly> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InternalAssertionFailure(
                    alloc::string::String::from("inexact coefficient division"),
                ));
            }
            out.push(q);
        }
        Ok(IntPoly::from_coeffs(out))
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Division with remainder by a monic divisor: g = q·h + r, deg r < deg h.
    ///
    /// Monicity of `h` keeps q and r over ℤ.
    pub fn monic_divmod(&self, h: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !h.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let dh = h.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dh {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dh];
        for i in (dh..rem.len()).rev() {
            let c = core::mem::replace(&mut rem[i], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for (j, hj) in h.coeffs.iter().take(dh).enumerate() {
                let t = &c * hj;
                rem[i - dh + j] -= t;
            }
            quot[i - dh] = c;
        }
        rem.truncate(dh);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Coefficient-wise reduction into [0, d).
    pub fn reduce_mod(&self, d: &BigInt) -> Result<ResiduePoly> {
        ResiduePoly::new(self.coeffs.iter().map(|c| c.mod_floor(d)).collect(), d)
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", k)?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Canonical pair (g, d) representing f = g/d ∈ ℚ[x].
///
/// Invariants: d ≥ 1, gcd(content(g), d) = 1, and the zero polynomial has d = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPolyRep {
    num: IntPoly,
    den: BigInt,
}

impl RationalPolyRep {
    /// Canonicalizes g/d: positive denominator, common content divided out.
    pub fn new(g: IntPoly, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if g.is_zero() {
            return Ok(RationalPolyRep {
                num: g,
                den: BigInt::one(),
            });
        }
        let (g, d) = if d.is_negative() { (-&g, -d) } else { (g, d) };
        let t = g.content().gcd(&d);
        Ok(RationalPolyRep {
            num: g.div_exact(&t)?,
            den: &d / &t,
        })
    }

    pub fn from_int_poly(g: IntPoly) -> Self {
        RationalPolyRep {
            num: g,
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int_poly(IntPoly::zero())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, rhs: &RationalPolyRep) -> RationalPolyRep {
        let g = &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den);
        RationalPolyRep::new(g, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &RationalPolyRep) -> RationalPolyRep {
        let g = &self.num.scale(&rhs.den) - &rhs.num.scale(&self.den);
        RationalPolyRep::new(g, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn mul(&self, rhs: &RationalPolyRep) -> RationalPolyRep {
        RationalPolyRep::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl fmt::Display for RationalPolyRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den)
        }
    }
}

/// Polynomial over ℤ/dℤ with least-nonnegative coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResiduePoly {
    modulus: BigInt,
    coeffs: Vec<BigInt>,
}

impl ResiduePoly {
    pub fn new(coeffs: Vec<BigInt>, d: &BigInt) -> Result<Self> {
        if *d < BigInt::from(2) {
            return Err(Error::BadModulus);
        }
        let mut coeffs: Vec<BigInt> = coeffs.iter().map(|c| c.mod_floor(d)).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(ResiduePoly {
            modulus: d.clone(),
            coeffs,
        })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lift with coefficients in [0, d).
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn add(&self, rhs: &ResiduePoly) -> Result<ResiduePoly> {
        if self.modulus != rhs.modulus {
            return Err(Error::DimensionMismatch);
        }
        ResiduePoly::new(
            (&self.to_int_poly() + &rhs.to_int_poly()).coeffs().to_vec(),
            &self.modulus,
        )
    }

    pub fn mul(&self, rhs: &ResiduePoly) -> Result<ResiduePoly> {
        if self.modulus != rhs.modulus {
            return Err(Error::DimensionMismatch);
        }
        ResiduePoly::new(
            (&self.to_int_poly() * &rhs.to_int_poly()).coeffs().to_vec(),
            &self.modulus,
        )
    }
}

/// Builds the canonical representative of g/d; alias for `RationalPolyRep::new`.
pub fn canonicalize(g: IntPoly, d: BigInt) -> Result<RationalPolyRep> {
    RationalPolyRep::new(g, d)
}

/// reduce_mod(g, d): coefficient-wise reduction into [0, d).
pub fn reduce_mod(g: &IntPoly, d: &BigInt) -> Result<ResiduePoly> {
    g.reduce_mod(d)
}

/// Coefficient-wise Chinese remaindering of monic residue polynomials.
///
/// Each input is read as a monic polynomial of degree `n` over its modulus
/// (the leading 1 may have been trimmed away by reduction). Returns the
/// unique monic lift of degree `n` with coefficients in [0, ∏ moduli).
pub fn crt_coeffwise(residues: &[ResiduePoly], n: usize) -> Result<IntPoly> {
    if residues.is_empty() || n == 0 {
        return Err(Error::DegreeZero);
    }
    for r in residues {
        if r.degree().is_some_and(|d| d > n) {
            return Err(Error::NonMonic);
        }
        if r.degree() == Some(n) && !r.coeff(n).is_one() {
            return Err(Error::NonMonic);
        }
    }
    for (i, a) in residues.iter().enumerate() {
        for b in &residues[i + 1..] {
            if !a.modulus().gcd(b.modulus()).is_one() {
                return Err(Error::NonCoprimeModuli);
            }
        }
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..n {
        let pairs: Vec<(BigInt, BigInt)> = residues
            .iter()
            .map(|r| (r.coeff(i), r.modulus().clone()))
            .collect();
        coeffs.push(crt_pairs(&pairs));
    }
    coeffs.push(BigInt::one());
    Ok(IntPoly::from_coeffs(coeffs))
}

/// CRT for a list of (residue, modulus) pairs with pairwise coprime moduli.
fn crt_pairs(pairs: &[(BigInt, BigInt)]) -> BigInt {
    let mut acc = pairs[0].0.clone();
    let mut modulus = pairs[0].1.clone();
    for (r, m) in &pairs[1..] {
        let e = modulus.extended_gcd(m);
        // acc + modulus * x * (r - acc) where modulus * x ≡ 1 mod m
        let diff = r - &acc;
        acc += &modulus * e.x * diff;
        modulus *= m;
        acc = acc.mod_floor(&modulus);
    }
    acc
}
