//! Images of integer and p-adic matrices under members of Int(M_n(ℤ)).
//!
//! For an integer matrix C, dividing g by χ_C gives g = q·χ_C + d·r with
//! r ∈ ℤ[x] of degree < n and f(C) = r(C). At a prime p the cancellation of
//! d is uniformly p-adically continuous with exact modulus m + v_p(d), which
//! makes finite-precision p-adic images well defined.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{char_poly, eval_poly_at_matrix, IntMatrix};
use crate::poly::{IntPoly, RationalPolyRep};

/// n×n matrix over ℤ_p at precision k: entries reduced into [0, p^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicMatrix {
    n: usize,
    p: BigInt,
    precision: u32,
    entries: Vec<BigInt>,
}

impl PadicMatrix {
    pub fn new(n: usize, p: &BigInt, precision: u32, entries: Vec<BigInt>) -> Result<Self> {
        if !crate::membership::is_prime(p) {
            return Err(Error::CompositeModulus);
        }
        if precision == 0 {
            return Err(Error::InsufficientPrecision {
                required: 1,
                available: 0,
            });
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch);
        }
        let pk = p.pow(precision);
        Ok(PadicMatrix {
            n,
            p: p.clone(),
            precision,
            entries: entries.iter().map(|e| e.mod_floor(&pk)).collect(),
        })
    }

    pub fn from_int_matrix(c: &IntMatrix, p: &BigInt, precision: u32) -> Result<Self> {
        Self::new(c.dim(), p, precision, c.entries().to_vec())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> &BigInt {
        &self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Least nonnegative integer lift.
    pub fn lift(&self) -> IntMatrix {
        IntMatrix::new(self.n, self.entries.clone()).expect("square by construction")
    }
}

/// Truncated p-adic approximation of the degree-< n polynomial s with
/// f(C) = s(C): coefficients in [0, p^m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicPolyApprox {
    p: BigInt,
    precision: u32,
    coeffs: Vec<BigInt>,
}

impl PadicPolyApprox {
    fn new(p: &BigInt, precision: u32, poly: &IntPoly) -> Self {
        let pm = p.pow(precision);
        let mut coeffs: Vec<BigInt> =
            poly.coeffs().iter().map(|c| c.mod_floor(&pm)).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PadicPolyApprox {
            p: p.clone(),
            precision,
            coeffs,
        }
    }

    pub fn prime(&self) -> &BigInt {
        &self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Further truncation to a coarser precision.
    pub fn truncate(&self, precision: u32) -> PadicPolyApprox {
        PadicPolyApprox::new(
            &self.p,
            precision.min(self.precision),
            &IntPoly::from_coeffs(self.coeffs.clone()),
        )
    }
}

/// p-adic valuation of a nonzero integer.
pub fn padic_valuation(d: &BigInt, p: &BigInt) -> Result<u32> {
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let mut v = 0u32;
    let mut d = d.abs();
    while (&d % p).is_zero() {
        d /= p;
        v += 1;
    }
    Ok(v)
}

/// The exact cancellation modulus k = m + v_p(d): d·c ≡ 0 mod p^k forces
/// c ≡ 0 mod p^m.
pub fn cancellation_modulus(d: &BigInt, p: &BigInt, m: u32) -> Result<u32> {
    Ok(m + padic_valuation(d, p)?)
}

/// The degree-< n polynomial r ∈ ℤ[x] with d·r = g mod χ_C and f(C) = r(C).
///
/// Fails with `NotIntegerValuedAtMatrix` when the remainder of g by χ_C is
/// not divisible by d, which certifies f ∉ Int(M_n(ℤ)).
pub fn reduced_representative(f: &RationalPolyRep, c: &IntMatrix) -> Result<IntPoly> {
    let chi = char_poly(c);
    let (_, rem) = f.numerator().monic_divmod(&chi)?;
    let d = f.denominator();
    if rem.coeffs().iter().any(|a| !(a % d).is_zero()) {
        return Err(Error::NotIntegerValuedAtMatrix);
    }
    rem.div_exact(d)
}

/// f(C) computed exactly through the reduced representative; d·image = g(C).
pub fn image_at(f: &RationalPolyRep, c: &IntMatrix) -> Result<IntMatrix> {
    let r = reduced_representative(f, c)?;
    Ok(eval_poly_at_matrix(&r, c))
}

/// Finite-precision p-adic image: lifts C to an integer matrix, computes the
/// reduced representative there, and truncates to precision m. The result is
/// independent of the chosen lift whenever C carries precision ≥ m + v_p(d).
pub fn padic_image(
    f: &RationalPolyRep,
    c: &PadicMatrix,
    m: u32,
) -> Result<PadicPolyApprox> {
    if m == 0 {
        return Err(Error::InsufficientPrecision {
            required: 1,
            available: 0,
        });
    }
    let required = cancellation_modulus(f.denominator(), c.prime(), m)?;
    if c.precision() < required {
        return Err(Error::InsufficientPrecision {
            required,
            available: c.precision(),
        });
    }
    let r = reduced_representative(f, &c.lift())?;
    Ok(PadicPolyApprox::new(c.prime(), m, &r))
}
