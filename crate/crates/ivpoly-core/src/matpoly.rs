//! Polynomials with n×n rational-matrix coefficients, the isomorphism φ to
//! matrices of polynomials, entry scalarization through matrix units, and
//! entrywise membership for Int[M_n(ℤ)].
//!
//! Substitution convention: f(C) = Σ A_k C^k with coefficients on the left of
//! the matrix powers. Substitution is not a ring homomorphism here, and
//! nothing in this module assumes it is.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::membership::{member_via_divisibility, EnumerationBudget, MembershipVerdict};
use crate::poly::{IntPoly, RationalPolyRep};

/// Square matrix with rational entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(n: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch);
        }
        Ok(RatMatrix { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        RatMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_int_matrix(a: &IntMatrix) -> Self {
        RatMatrix {
            n: a.dim(),
            entries: a
                .entries()
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect(),
        }
    }

    /// Numerator matrix and positive denominator with gcd(content, den) = 1.
    pub fn to_num_den(&self) -> (IntMatrix, BigInt) {
        let mut den = BigInt::one();
        for e in &self.entries {
            den = den.lcm(e.denom());
        }
        let entries: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&den / e.denom()))
            .collect();
        (
            IntMatrix::new(self.n, entries).expect("square by construction"),
            den,
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.denom().is_one())
    }

    pub fn add(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch);
        }
        Ok(RatMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch);
        }
        let n = self.n;
        let mut out = vec![BigRational::zero(); n * n];
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
        Ok(RatMatrix { n, entries: out })
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        RatMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }
}

/// Element of (M_n(ℚ))[x]: coefficient k is the matrix of the x^k term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatCoeffPoly {
    n: usize,
    coeffs: Vec<RatMatrix>,
}

impl MatCoeffPoly {
    pub fn new(n: usize, mut coeffs: Vec<RatMatrix>) -> Result<Self> {
        if coeffs.iter().any(|c| c.dim() != n) {
            return Err(Error::DimensionMismatch);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(MatCoeffPoly { n, coeffs })
    }

    pub fn zero(n: usize) -> Self {
        MatCoeffPoly {
            n,
            coeffs: Vec::new(),
        }
    }

    /// f(x)·e_ij for a scalar rational polynomial f (0-based unit indices).
    pub fn scalar_times_unit(f: &RationalPolyRep, n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange);
        }
        let den = BigRational::from_integer(f.denominator().clone());
        let coeffs = f
            .numerator()
            .coeffs()
            .iter()
            .map(|c| {
                let mut m = RatMatrix::zero(n);
                m.entries[i * n + j] = BigRational::from_integer(c.clone()) / &den;
                m
            })
            .collect();
        MatCoeffPoly::new(n, coeffs)
    }

    /// f(x)·I_n, the scalar embedding of ℚ[x].
    pub fn from_scalar(f: &RationalPolyRep, n: usize) -> Self {
        let den = BigRational::from_integer(f.denominator().clone());
        let coeffs = f
            .numerator()
            .coeffs()
            .iter()
            .map(|c| RatMatrix::identity(n).scale(&(BigRational::from_integer(c.clone()) / &den)))
            .collect();
        MatCoeffPoly::new(n, coeffs).expect("dimensions agree")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[RatMatrix] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatMatrix {
        self.coeffs.get(k).cloned().unwrap_or_else(|| RatMatrix::zero(self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &MatCoeffPoly) -> Result<MatCoeffPoly> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch);
        }
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k).add(&rhs.coeff(k))?);
        }
        MatCoeffPoly::new(self.n, out)
    }

    /// Left and right multiplication by constant matrices (the matrix-unit
    /// sandwich used in scalarization).
    pub fn mul_const_left(&self, a: &RatMatrix) -> Result<MatCoeffPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| a.mul(c))
            .collect::<Result<Vec<_>>>()?;
        MatCoeffPoly::new(self.n, coeffs)
    }

    pub fn mul_const_right(&self, a: &RatMatrix) -> Result<MatCoeffPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(a))
            .collect::<Result<Vec<_>>>()?;
        MatCoeffPoly::new(self.n, coeffs)
    }
}

/// Element of M_n(ℚ[x]): n×n array of rational polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatOfPoly {
    n: usize,
    entries: Vec<RationalPolyRep>,
}

impl MatOfPoly {
    pub fn new(n: usize, entries: Vec<RationalPolyRep>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch);
        }
        Ok(MatOfPoly { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &RationalPolyRep {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[RationalPolyRep] {
        &self.entries
    }

    pub fn add(&self, rhs: &MatOfPoly) -> Result<MatOfPoly> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch);
        }
        MatOfPoly::new(
            self.n,
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &MatOfPoly) -> Result<MatOfPoly> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch);
        }
        let n = self.n;
        let mut out = vec![RationalPolyRep::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    let t = self.entry(i, k).mul(rhs.entry(k, j));
                    out[i * n + j] = out[i * n + j].add(&t);
                }
            }
        }
        MatOfPoly::new(n, out)
    }
}

fn rationals_to_poly_rep(coeffs: &[BigRational]) -> RationalPolyRep {
    let mut den = BigInt::one();
    for c in coeffs {
        den = den.lcm(c.denom());
    }
    let g = IntPoly::from_coeffs(
        coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect(),
    );
    RationalPolyRep::new(g, den).expect("positive denominator")
}

/// φ: Σ_k A_k x^k ↦ (Σ_k (A_k)_{ij} x^k)_{ij}, the ring isomorphism
/// (M_n(ℚ))[x] → M_n(ℚ[x]).
pub fn phi(f: &MatCoeffPoly) -> MatOfPoly {
    let n = f.dim();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let coeffs: Vec<BigRational> =
                f.coeffs().iter().map(|a| a.entry(i, j).clone()).collect();
            entries.push(rationals_to_poly_rep(&coeffs));
        }
    }
    MatOfPoly::new(n, entries).expect("square by construction")
}

/// Inverse of φ.
pub fn phi_inv(m: &MatOfPoly) -> MatCoeffPoly {
    let n = m.dim();
    let deg = m
        .entries()
        .iter()
        .filter_map(|e| e.numerator().degree())
        .max();
    let deg = match deg {
        Some(d) => d,
        None => return MatCoeffPoly::zero(n),
    };
    let mut coeffs = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let mut mat = RatMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let e = m.entry(i, j);
                mat.entries[i * n + j] = BigRational::new(
                    e.numerator().coeff(k),
                    e.denominator().clone(),
                );
            }
        }
        coeffs.push(mat);
    }
    MatCoeffPoly::new(n, coeffs).expect("dimensions agree")
}

/// Coefficient convolution with noncommutative matrix products:
/// (F·G)_m = Σ_k A_k B_{m−k}. x is central, the coefficients are not.
pub fn mat_poly_mul(f: &MatCoeffPoly, g: &MatCoeffPoly) -> Result<MatCoeffPoly> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch);
    }
    let n = f.dim();
    if f.is_zero() || g.is_zero() {
        return Ok(MatCoeffPoly::zero(n));
    }
    let mut out = vec![RatMatrix::zero(n); f.coeffs().len() + g.coeffs().len() - 1];
    for (i, a) in f.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs().iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b)?)?;
        }
    }
    MatCoeffPoly::new(n, out)
}

/// Left substitution f(C) = Σ A_k C^k.
pub fn eval_matcoeff_at_matrix(f: &MatCoeffPoly, c: &IntMatrix) -> Result<RatMatrix> {
    if f.dim() != c.dim() {
        return Err(Error::DimensionMismatch);
    }
    let cr = RatMatrix::from_int_matrix(c);
    let mut acc = RatMatrix::zero(f.dim());
    for a in f.coeffs().iter().rev() {
        acc = acc.mul(&cr)?.add(a)?;
    }
    Ok(acc)
}

/// The scalar entry c_jk(x) of the φ-image of F (1-based indices), computed
/// by direct entry read and cross-checked against the matrix-unit sandwich
/// Σᵢ e_ij·F·e_ki = c_jk(x)·I_n.
pub fn entry_scalarize(f: &MatCoeffPoly, j: usize, k: usize) -> Result<RationalPolyRep> {
    let n = f.dim();
    if j == 0 || j > n || k == 0 || k > n {
        return Err(Error::IndexOutOfRange);
    }
    let direct = phi(f).entry(j - 1, k - 1).clone();
    let mut sandwich = MatCoeffPoly::zero(n);
    for i in 0..n {
        let left = RatMatrix::from_int_matrix(&IntMatrix::unit(n, i, j - 1)?);
        let right = RatMatrix::from_int_matrix(&IntMatrix::unit(n, k - 1, i)?);
        sandwich = sandwich.add(&f.mul_const_left(&left)?.mul_const_right(&right)?)?;
    }
    let expected = MatCoeffPoly::from_scalar(&direct, n);
    if sandwich != expected {
        return Err(Error::InternalAssertionFailure(String::from(
            "matrix-unit sandwich disagrees with direct entry read",
        )));
    }
    Ok(direct)
}

/// Entrywise membership verdict for Int[M_n(ℤ)] with the failing entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixMembershipReport {
    pub member: bool,
    /// 1-based (j, k) of the first failing entry, row-major order.
    pub failing_entry: Option<(usize, usize)>,
    pub scalar_verdict: Option<MembershipVerdict>,
    pub cases: u64,
}

/// F ∈ Int[M_n(ℤ)] iff every entry of φ(F) lies in Int(M_n(ℤ)).
pub fn member_matrix_poly(
    f: &MatCoeffPoly,
    budget: &EnumerationBudget,
) -> Result<MatrixMembershipReport> {
    let n = f.dim();
    let image = phi(f);
    let mut cases = 0u64;
    for j in 0..n {
        for k in 0..n {
            let verdict = member_via_divisibility(image.entry(j, k), n, budget)?;
            cases += verdict.cases;
            if !verdict.member {
                return Ok(MatrixMembershipReport {
                    member: false,
                    failing_entry: Some((j + 1, k + 1)),
                    scalar_verdict: Some(verdict),
                    cases,
                });
            }
        }
    }
    Ok(MatrixMembershipReport {
        member: true,
        failing_entry: None,
        scalar_verdict: None,
        cases,
    })
}

/// Result of evaluating F at a batch of integer matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub trials: u64,
    /// First matrix at which the evaluation was non-integral, if any.
    pub failure: Option<IntMatrix>,
}

/// Necessary-condition sampler: evaluates F at the supplied matrices and
/// reports the first non-integral value. Members never fail this.
pub fn sample_check_integrality<I>(f: &MatCoeffPoly, samples: I) -> Result<SampleReport>
where
    I: IntoIterator<Item = IntMatrix>,
{
    let mut trials = 0u64;
    for c in samples {
        trials += 1;
        if !eval_matcoeff_at_matrix(f, &c)?.is_integral() {
            return Ok(SampleReport {
                trials,
                failure: Some(c),
            });
        }
    }
    Ok(SampleReport {
        trials,
        failure: None,
    })
}

/// Generators {gᵣ(x)·e_ij} of M_n(I) for the ideal I generated by the given
/// scalar members.
pub fn mn_ideal_generators(
    gens: &[RationalPolyRep],
    n: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<MatCoeffPoly>> {
    for g in gens {
        if !member_via_divisibility(g, n, budget)?.member {
            return Err(Error::NonMemberGenerator);
        }
    }
    let mut out = Vec::with_capacity(gens.len() * n * n);
    for g in gens {
        for i in 0..n {
            for j in 0..n {
                out.push(MatCoeffPoly::scalar_times_unit(g, n, i, j)?);
            }
        }
    }
    Ok(out)
}

/// Scalarized entries of the given members: generators of the scalar ideal I
/// with every input in M_n(I). Zero entries and duplicates are dropped.
pub fn entry_ideal_generators(
    elems: &[MatCoeffPoly],
    budget: &EnumerationBudget,
) -> Result<Vec<RationalPolyRep>> {
    let mut out: Vec<RationalPolyRep> = Vec::new();
    for f in elems {
        if !member_matrix_poly(f, budget)?.member {
            return Err(Error::NonMemberElement);
        }
        for entry in phi(f).entries() {
            if !entry.is_zero() && !out.contains(entry) {
                out.push(entry.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::canonicalize;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    fn rat(coeffs: &[i64], d: i64) -> RationalPolyRep {
        canonicalize(poly(coeffs), BigInt::from(d)).unwrap()
    }

    fn unit_x(n: usize, i: usize, j: usize) -> MatCoeffPoly {
        // e_ij · x
        MatCoeffPoly::scalar_times_unit(&rat(&[0, 1], 1), n, i, j).unwrap()
    }

    #[test]
    fn phi_identity_x_plus_unit() {
        // F = I₂·x + e₁₂ → [[x, 1], [0, x]]
        let f = MatCoeffPoly::from_scalar(&rat(&[0, 1], 1), 2)
            .add(&MatCoeffPoly::scalar_times_unit(&rat(&[1], 1), 2, 0, 1).unwrap())
            .unwrap();
        let m = phi(&f);
        assert_eq!(m.entry(0, 0), &rat(&[0, 1], 1));
        assert_eq!(m.entry(0, 1), &rat(&[1], 1));
        assert_eq!(m.entry(1, 0), &RationalPolyRep::zero());
        assert_eq!(m.entry(1, 1), &rat(&[0, 1], 1));
        assert_eq!(phi_inv(&m), f);
    }

    #[test]
    fn phi_zero() {
        let f = MatCoeffPoly::zero(2);
        let m = phi(&f);
        assert!(m.entries().iter().all(|e| e.is_zero()));
        assert_eq!(phi_inv(&m), f);
    }

    #[test]
    fn noncommutative_unit_products() {
        // (e₁₂x)·(e₂₁x) = e₁₁x², (e₂₁x)·(e₁₂x) = e₂₂x²
        let a = mat_poly_mul(&unit_x(2, 0, 1), &unit_x(2, 1, 0)).unwrap();
        let b = mat_poly_mul(&unit_x(2, 1, 0), &unit_x(2, 0, 1)).unwrap();
        let m = phi(&a);
        assert_eq!(m.entry(0, 0), &rat(&[0, 0, 1], 1));
        assert!(m.entry(1, 1).is_zero());
        assert_ne!(a, b);
        let m = phi(&b);
        assert_eq!(m.entry(1, 1), &rat(&[0, 0, 1], 1));
    }

    #[test]
    fn phi_is_multiplicative_on_units() {
        let f = unit_x(2, 0, 1);
        let g = unit_x(2, 1, 0);
        assert_eq!(
            phi(&mat_poly_mul(&f, &g).unwrap()),
            phi(&f).mul(&phi(&g)).unwrap()
        );
    }

    #[test]
    fn eval_unit_times_x() {
        // F = e₁₂·x at C = [[1,2],[3,4]] → e₁₂C = [[3,4],[0,0]]
        let c = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let got = eval_matcoeff_at_matrix(&unit_x(2, 0, 1), &c).unwrap();
        let (num, den) = got.to_num_den();
        assert!(den.is_one());
        assert_eq!(num, IntMatrix::from_i64_rows(&[&[3, 4], &[0, 0]]).unwrap());
    }

    #[test]
    fn eval_constant_and_square() {
        let c = IntMatrix::from_i64_rows(&[&[2, 1], &[-1, 3]]).unwrap();
        let a0 = MatCoeffPoly::scalar_times_unit(&rat(&[5], 1), 2, 1, 0).unwrap();
        let (num, den) = eval_matcoeff_at_matrix(&a0, &c).unwrap().to_num_den();
        assert!(den.is_one());
        assert_eq!(num, IntMatrix::from_i64_rows(&[&[0, 0], &[5, 0]]).unwrap());
        // I₂x² evaluates to C²
        let f = MatCoeffPoly::from_scalar(&rat(&[0, 0, 1], 1), 2);
        let (num, _) = eval_matcoeff_at_matrix(&f, &c).unwrap().to_num_den();
        assert_eq!(num, &c * &c);
    }

    #[test]
    fn substitution_is_not_multiplicative() {
        // counterexample with noncommuting coefficient/matrix pairs
        let f = unit_x(2, 0, 1);
        let g = unit_x(2, 1, 0);
        let c = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let lhs = eval_matcoeff_at_matrix(&mat_poly_mul(&f, &g).unwrap(), &c).unwrap();
        let rhs = eval_matcoeff_at_matrix(&f, &c)
            .unwrap()
            .mul(&eval_matcoeff_at_matrix(&g, &c).unwrap())
            .unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn scalarize_reads_entries() {
        let f = MatCoeffPoly::from_scalar(&rat(&[0, 1], 1), 2)
            .add(&MatCoeffPoly::scalar_times_unit(&rat(&[0, -1, 1], 2), 2, 0, 1).unwrap())
            .unwrap();
        assert_eq!(entry_scalarize(&f, 1, 2).unwrap(), rat(&[0, -1, 1], 2));
        assert_eq!(entry_scalarize(&f, 1, 1).unwrap(), rat(&[0, 1], 1));
        assert_eq!(entry_scalarize(&f, 3, 1), Err(Error::IndexOutOfRange));
    }

    #[test]
    fn member_matrix_poly_failing_entry() {
        // entries {x, (x²−x)/2, 1, x³}: fails at (1,2)
        let budget = EnumerationBudget::default();
        let mut f = MatCoeffPoly::scalar_times_unit(&rat(&[0, 1], 1), 2, 0, 0).unwrap();
        for (g, i, j) in [
            (rat(&[0, -1, 1], 2), 0usize, 1usize),
            (rat(&[1], 1), 1, 0),
            (rat(&[0, 0, 0, 1], 1), 1, 1),
        ] {
            f = f
                .add(&MatCoeffPoly::scalar_times_unit(&g, 2, i, j).unwrap())
                .unwrap();
        }
        let report = member_matrix_poly(&f, &budget).unwrap();
        assert!(!report.member);
        assert_eq!(report.failing_entry, Some((1, 2)));
        assert!(report.scalar_verdict.unwrap().witness.is_some());
    }

    #[test]
    fn member_matrix_poly_integer_entries() {
        let budget = EnumerationBudget::default();
        let f = MatCoeffPoly::from_scalar(&rat(&[7, -2, 1], 1), 2);
        assert!(member_matrix_poly(&f, &budget).unwrap().member);
    }

    #[test]
    fn member_matrix_poly_family_everywhere() {
        let budget = EnumerationBudget::default();
        let fam = rat(&[0, 0, 1, -1, 0, -1, 1], 2);
        let mut f = MatCoeffPoly::zero(2);
        for i in 0..2 {
            for j in 0..2 {
                f = f
                    .add(&MatCoeffPoly::scalar_times_unit(&fam, 2, i, j).unwrap())
                    .unwrap();
            }
        }
        assert!(member_matrix_poly(&f, &budget).unwrap().member);
    }

    #[test]
    fn sampler_flags_non_member() {
        let f = MatCoeffPoly::from_scalar(&rat(&[0, -1, 1], 2), 2);
        let c = crate::matrix::companion(&poly(&[1, 1, 1])).unwrap();
        let report = sample_check_integrality(&f, [c.clone()]).unwrap();
        assert_eq!(report.failure, Some(c));
    }

    #[test]
    fn ideal_generator_round_trip() {
        let budget = EnumerationBudget::default();
        let fam = rat(&[0, 0, 1, -1, 0, -1, 1], 2);
        let gens = mn_ideal_generators(core::slice::from_ref(&fam), 2, &budget).unwrap();
        assert_eq!(gens.len(), 4);
        for g in &gens {
            assert!(member_matrix_poly(g, &budget).unwrap().member);
        }
        let scalars = entry_ideal_generators(&gens, &budget).unwrap();
        assert_eq!(scalars, vec![fam]);
    }

    #[test]
    fn ideal_generators_reject_non_members() {
        let budget = EnumerationBudget::default();
        assert_eq!(
            mn_ideal_generators(&[rat(&[0, -1, 1], 2)], 2, &budget),
            Err(Error::NonMemberGenerator)
        );
        let bad = MatCoeffPoly::from_scalar(&rat(&[0, -1, 1], 2), 2);
        assert_eq!(
            entry_ideal_generators(&[bad], &budget),
            Err(Error::NonMemberElement)
        );
        assert_eq!(mn_ideal_generators(&[], 2, &budget).unwrap(), Vec::new());
        assert_eq!(entry_ideal_generators(&[], &budget).unwrap(), Vec::new());
    }
}
