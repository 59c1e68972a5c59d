//! Exact n×n matrix arithmetic over ℤ and ℤ/dℤ, companion matrices,
//! characteristic polynomials, and polynomial evaluation at a matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Square matrix with arbitrary-precision integer entries, row-major.
///
/// The 0×0 matrix is allowed as the neutral element of `block_diag`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch);
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        Ok(IntMatrix {
            n,
            entries: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        Ok(IntMatrix {
            n,
            entries: rows
                .iter()
                .flat_map(|r| r.iter().map(|&e| BigInt::from(e)))
                .collect(),
        })
    }

    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Matrix unit e_ij (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange);
        }
        let mut m = Self::zero(n);
        m.entries[i * n + j] = BigInt::one();
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Entry-wise reduction into [0, d).
    pub fn reduce_mod(&self, d: &BigInt) -> Result<ResidueMatrix> {
        ResidueMatrix::new(self.n, self.entries.clone(), d)
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * rhs.entry(k, j);
                }
            }
        }
        IntMatrix { n, entries: out }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.n.max(1)).enumerate() {
            if i > 0 {
                write!(f, " ; ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", e)?;
            }
        }
        Ok(())
    }
}

/// Companion matrix of a monic polynomial: subdiagonal 1s, last column
/// (−a_0, …, −a_{n−1}) for h = x^n + a_{n−1}x^{n−1} + … + a_0.
pub fn companion(h: &IntPoly) -> Result<IntMatrix> {
    if !h.is_monic() {
        return Err(Error::NonMonic);
    }
    let n = h.degree().unwrap();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let mut m = IntMatrix::zero(n);
    for i in 1..n {
        m.entries[i * n + (i - 1)] = BigInt::one();
    }
    for i in 0..n {
        m.entries[i * n + (n - 1)] = -h.coeff(i);
    }
    Ok(m)
}

/// Characteristic polynomial det(xI − A) by the Faddeev–LeVerrier recurrence.
///
/// The division by the step index k is exact over ℤ.
pub fn char_poly(a: &IntMatrix) -> IntPoly {
    let n = a.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = a.clone();
    for k in 1..=n {
        if k > 1 {
            let mut shifted = m;
            let c = &coeffs[n - k + 1];
            for i in 0..n {
                shifted.entries[i * n + i] += c;
            }
            m = a * &shifted;
        }
        let t = m.trace();
        let (q, r) = t.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace division must be exact");
        let _ = r;
        coeffs[n - k] = -q;
    }
    IntPoly::from_coeffs(coeffs)
}

/// Horner evaluation g(A) = Σ gᵢ Aⁱ, with g₀ contributing g₀·I.
pub fn eval_poly_at_matrix(g: &IntPoly, a: &IntMatrix) -> IntMatrix {
    let n = a.dim();
    let mut acc = IntMatrix::zero(n);
    for c in g.coeffs().iter().rev() {
        acc = &acc * a;
        for i in 0..n {
            acc.entries[i * n + i] += c;
        }
    }
    acc
}

/// Block-diagonal composition; the 0×0 matrix is the neutral element.
pub fn block_diag(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.dim() + b.dim();
    let mut m = IntMatrix::zero(n);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            m.entries[i * n + j] = a.entry(i, j).clone();
        }
    }
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            m.entries[(a.dim() + i) * n + (a.dim() + j)] = b.entry(i, j).clone();
        }
    }
    m
}

/// Square matrix over ℤ/dℤ with entries in [0, d).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueMatrix {
    n: usize,
    modulus: BigInt,
    entries: Vec<BigInt>,
}

impl ResidueMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>, d: &BigInt) -> Result<Self> {
        if *d < BigInt::from(2) {
            return Err(Error::BadModulus);
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch);
        }
        Ok(ResidueMatrix {
            n,
            modulus: d.clone(),
            entries: entries.iter().map(|e| e.mod_floor(d)).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, rhs: &ResidueMatrix) -> Result<ResidueMatrix> {
        if self.n != rhs.n || self.modulus != rhs.modulus {
            return Err(Error::DimensionMismatch);
        }
        let n = self.n;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * rhs.entry(k, j);
                }
            }
        }
        ResidueMatrix::new(n, out, &self.modulus)
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.clone(),
        }
    }
}

/// Horner evaluation of g at a residue matrix, reducing mod d at each step.
///
/// Agrees entry-wise with reducing the exact evaluation over ℤ.
pub fn eval_poly_at_residue_matrix(g: &IntPoly, a: &ResidueMatrix) -> Result<ResidueMatrix> {
    let n = a.dim();
    let d = a.modulus().clone();
    let mut acc = ResidueMatrix::new(n, vec![BigInt::zero(); n * n], &d)?;
    for c in g.coeffs().iter().rev() {
        acc = acc.mul(a)?;
        let mut entries = acc.entries;
        for i in 0..n {
            entries[i * n + i] += c;
        }
        acc = ResidueMatrix::new(n, entries, &d)?;
    }
    Ok(acc)
}
