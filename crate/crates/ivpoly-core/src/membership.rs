//! Membership in Int(M_n(ℤ)) by three independent oracles, residue
//! enumeration, irreducibility certification, and irreducible lifts.
//!
//! A rational polynomial f = g/d lies in Int(M_n(ℤ)) exactly when g is
//! divisible modulo dℤ[x] by every monic polynomial of degree n, and it
//! suffices to test companion matrices, or irreducible monic polynomials.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf;
use crate::matrix::{companion, eval_poly_at_residue_matrix};
use crate::poly::{IntPoly, RationalPolyRep};

/// Cap on the number of residue polynomials an oracle may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_cases: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_cases: 1_000_000,
        }
    }
}

impl EnumerationBudget {
    pub fn new(max_cases: u64) -> Self {
        EnumerationBudget { max_cases }
    }
}

/// Which density statement an oracle exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oracle {
    Divisibility,
    Companion,
    IrreducibleCompanion,
}

impl Oracle {
    pub fn as_str(&self) -> &'static str {
        match self {
            Oracle::Divisibility => "divisibility",
            Oracle::Companion => "companion",
            Oracle::IrreducibleCompanion => "irreducible-companion",
        }
    }
}

/// Outcome of a membership query.
///
/// `witness` is present iff `member` is false; it is the first monic residue
/// polynomial (coefficients in [0, d)) failing the oracle's test, in
/// enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    pub witness: Option<IntPoly>,
    pub oracle: Oracle,
    pub cases: u64,
}

/// The index-th monic polynomial of degree n with coefficients in [0, d):
/// a_i is the i-th base-d digit of the index, a_0 varying fastest.
pub fn monic_from_index(index: u64, n: usize, d: u64) -> IntPoly {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut rest = index;
    for _ in 0..n {
        coeffs.push(BigInt::from(rest % d));
        rest /= d;
    }
    coeffs.push(BigInt::one());
    IntPoly::from_coeffs(coeffs)
}

/// Deterministic stream of all d^n monic residue polynomials of degree n.
pub struct MonicEnumeration {
    n: usize,
    d: u64,
    next: u64,
    count: u64,
}

impl Iterator for MonicEnumeration {
    type Item = IntPoly;
    fn next(&mut self) -> Option<IntPoly> {
        if self.next >= self.count {
            return None;
        }
        let h = monic_from_index(self.next, self.n, self.d);
        self.next += 1;
        Some(h)
    }
}

fn case_count(n: usize, d: &BigInt, budget: &EnumerationBudget) -> Result<u64> {
    let dn = d.pow(n as u32);
    if dn > BigInt::from(budget.max_cases) {
        let cases = u128::try_from(dn.clone()).unwrap_or(u128::MAX);
        return Err(Error::BudgetExceeded {
            cases,
            max_cases: budget.max_cases,
        });
    }
    Ok(u64::try_from(dn).expect("bounded by budget"))
}

/// Streams the d^n monic polynomials of degree n with coefficients in [0, d),
/// in the fixed enumeration order.
pub fn enumerate_monic(
    n: usize,
    d: &BigInt,
    budget: &EnumerationBudget,
) -> Result<MonicEnumeration> {
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    if *d < BigInt::from(2) {
        return Err(Error::BadModulus);
    }
    let count = case_count(n, d, budget)?;
    Ok(MonicEnumeration {
        n,
        d: u64::try_from(d).expect("bounded by budget"),
        next: 0,
        count,
    })
}

/// Deterministic Miller–Rabin; exact for anything this crate enumerates.
pub fn is_prime(v: &BigInt) -> bool {
    if *v < BigInt::from(2) {
        return false;
    }
    let small = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &s in &small {
        let s = BigInt::from(s);
        if *v == s {
            return true;
        }
        if (v % &s).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    let n_minus_1 = v - &one;
    let mut d = n_minus_1.clone();
    let mut r = 0u32;
    while d.is_even() {
        d /= &two;
        r += 1;
    }
    'witness: for &a in &small {
        let a = BigInt::from(a);
        let mut x = a.modpow(&d, v);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..r {
            x = x.modpow(&two, v);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn distinct_prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducibility of h over F_p by the gcd-with-Frobenius-powers test:
/// h of degree n is irreducible iff x^(p^n) ≡ x mod h and
/// gcd(x^(p^(n/q)) − x, h) = 1 for every prime q | n.
pub fn is_irreducible_mod_p(h: &IntPoly, p: &BigInt) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::CompositeModulus);
    }
    let n = match h.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::DegreeZero),
    };
    let hp = gf::reduce(h.coeffs(), p);
    if hp.len() != n + 1 {
        return Err(Error::DegreeDrop);
    }
    if n == 1 {
        return Ok(true);
    }
    let x = gf::x_poly();
    for q in distinct_prime_factors(n) {
        let e = p.pow((n / q) as u32);
        let t = gf::pow_x_mod(&e, &hp, p);
        let g = gf::gcd(&gf::sub(&t, &x, p), &hp, p);
        if g.len() > 1 {
            return Ok(false);
        }
    }
    let t = gf::pow_x_mod(&p.pow(n as u32), &hp, p);
    Ok(gf::sub(&t, &x, p).is_empty())
}

/// Monic k ∈ ℤ[x] of the same degree as h with k ≡ h mod dℤ[x], irreducible
/// over ℤ, certified by irreducibility mod the returned prime p ∤ d.
///
/// Primes are tried in increasing order; within a prime, candidate
/// coefficient vectors in [0, dp) congruent to h mod d are tried in
/// increasing order, constant coefficient varying fastest.
pub fn irreducible_lift(h: &IntPoly, d: &BigInt) -> Result<(IntPoly, BigInt)> {
    if !h.is_monic() {
        return Err(Error::NonMonic);
    }
    let n = h.degree().unwrap();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    if *d < BigInt::from(2) {
        return Err(Error::BadModulus);
    }
    let base: Vec<BigInt> = (0..n).map(|i| h.coeff(i).mod_floor(d)).collect();
    let mut p = BigInt::one();
    loop {
        p = next_prime(&p);
        if (d % &p).is_zero() {
            continue;
        }
        let pu = match u64::try_from(&p) {
            Ok(v) => v,
            Err(_) => {
                return Err(Error::InternalAssertionFailure(String::from(
                    "irreducible lift prime search ran away",
                )))
            }
        };
        let total = pu.checked_pow(n as u32).unwrap_or(u64::MAX);
        for idx in 0..total {
            let mut coeffs = Vec::with_capacity(n + 1);
            let mut rest = idx;
            for b in base.iter() {
                coeffs.push(b + d * BigInt::from(rest % pu));
                rest /= pu;
            }
            coeffs.push(BigInt::one());
            let k = IntPoly::from_coeffs(coeffs);
            if is_irreducible_mod_p(&k, &p)? {
                return Ok((k, p));
            }
        }
    }
}

fn next_prime(after: &BigInt) -> BigInt {
    let mut v = after + 1u32;
    while !is_prime(&v) {
        v += 1u32;
    }
    v
}

/// True when the oracle's test fails for the residue polynomial h: the
/// remainder of g by h has a coefficient not divisible by d.
pub fn divisibility_case_fails(g: &IntPoly, h: &IntPoly, d: &BigInt) -> Result<bool> {
    let (_, r) = g.monic_divmod(h)?;
    Ok(r.coeffs().iter().any(|c| !(c % d).is_zero()))
}

/// True when g evaluated at the companion matrix of h is nonzero mod d.
pub fn companion_case_fails(g: &IntPoly, h: &IntPoly, d: &BigInt) -> Result<bool> {
    let c = companion(h)?;
    let cbar = c.reduce_mod(d)?;
    Ok(!eval_poly_at_residue_matrix(g, &cbar)?.is_zero())
}

/// True when g evaluated at the companion matrix of the irreducible lift of h
/// is nonzero mod d. Since evaluation mod d only depends on the residue class
/// of the matrix, this agrees with `companion_case_fails` while exercising
/// genuinely irreducible test matrices.
pub fn irreducible_companion_case_fails(
    g: &IntPoly,
    h: &IntPoly,
    d: &BigInt,
) -> Result<bool> {
    let (k, _p) = irreducible_lift(h, d)?;
    let c = companion(&k)?;
    let cbar = c.reduce_mod(d)?;
    Ok(!eval_poly_at_residue_matrix(g, &cbar)?.is_zero())
}

fn case_fails(oracle: Oracle, g: &IntPoly, h: &IntPoly, d: &BigInt) -> Result<bool> {
    match oracle {
        Oracle::Divisibility => divisibility_case_fails(g, h, d),
        Oracle::Companion => companion_case_fails(g, h, d),
        Oracle::IrreducibleCompanion => irreducible_companion_case_fails(g, h, d),
    }
}

fn run_oracle(
    f: &RationalPolyRep,
    n: usize,
    oracle: Oracle,
    budget: &EnumerationBudget,
    collect_all: bool,
) -> Result<(MembershipVerdict, Vec<IntPoly>)> {
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let d = f.denominator();
    if d.is_one() {
        return Ok((
            MembershipVerdict {
                member: true,
                witness: None,
                oracle,
                cases: 0,
            },
            Vec::new(),
        ));
    }
    let g = f.numerator();
    let mut witnesses = Vec::new();
    let mut cases = 0u64;
    for h in enumerate_monic(n, d, budget)? {
        cases += 1;
        if case_fails(oracle, g, &h, d)? {
            if !collect_all {
                return Ok((
                    MembershipVerdict {
                        member: false,
                        witness: Some(h),
                        oracle,
                        cases,
                    },
                    Vec::new(),
                ));
            }
            witnesses.push(h);
        }
    }
    let member = witnesses.is_empty();
    Ok((
        MembershipVerdict {
            member,
            witness: witnesses.first().cloned(),
            oracle,
            cases,
        },
        witnesses,
    ))
}

/// Oracle A: divisibility of g modulo dℤ[x] by all monic residue polynomials.
pub fn member_via_divisibility(
    f: &RationalPolyRep,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<MembershipVerdict> {
    run_oracle(f, n, Oracle::Divisibility, budget, false).map(|(v, _)| v)
}

/// Oracle B: evaluation at all companion matrices mod d.
pub fn member_via_companion(
    f: &RationalPolyRep,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<MembershipVerdict> {
    run_oracle(f, n, Oracle::Companion, budget, false).map(|(v, _)| v)
}

/// Oracle C: evaluation at companion matrices of irreducible lifts.
pub fn member_via_irreducible_companion(
    f: &RationalPolyRep,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<MembershipVerdict> {
    run_oracle(f, n, Oracle::IrreducibleCompanion, budget, false).map(|(v, _)| v)
}

/// Full scan collecting every failing residue polynomial.
pub fn all_witnesses(
    f: &RationalPolyRep,
    n: usize,
    oracle: Oracle,
    budget: &EnumerationBudget,
) -> Result<(MembershipVerdict, Vec<IntPoly>)> {
    run_oracle(f, n, oracle, budget, true)
}

/// Prime-power factorization by trial division.
pub fn factor(d: &BigInt) -> Vec<(BigInt, u32)> {
    let mut d = d.abs();
    let mut out = Vec::new();
    let mut q = BigInt::from(2);
    while &q * &q <= d {
        if (&d % &q).is_zero() {
            let mut e = 0u32;
            while (&d % &q).is_zero() {
                d /= &q;
                e += 1;
            }
            out.push((q.clone(), e));
        }
        q += 1u32;
    }
    if d > BigInt::one() {
        out.push((d, 1));
    }
    out
}

/// Verdicts per prime-power part of d; shrinks the enumeration from d^n to
/// Σ (p^e)^n cases. Overall membership is the conjunction of the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerSplit {
    pub member: bool,
    pub parts: Vec<(BigInt, u32, MembershipVerdict)>,
}

pub fn prime_power_split(
    f: &RationalPolyRep,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<PrimePowerSplit> {
    let d = f.denominator();
    if *d < BigInt::from(2) {
        return Ok(PrimePowerSplit {
            member: true,
            parts: Vec::new(),
        });
    }
    let mut parts = Vec::new();
    let mut member = true;
    for (p, e) in factor(d) {
        let q = p.pow(e);
        // f canonical means gcd(content(g), d) = 1, so g/q is already canonical
        let part = RationalPolyRep::new(f.numerator().clone(), q)?;
        let verdict = member_via_divisibility(&part, n, budget)?;
        member &= verdict.member;
        parts.push((p, e, verdict));
    }
    Ok(PrimePowerSplit { member, parts })
}

/// The classical member (x^{p²} − x)(x^p − x)/p of Int(M_2(ℤ)), self-checked
/// against the divisibility oracle before being returned.
pub fn generate_family(p: &BigInt, budget: &EnumerationBudget) -> Result<RationalPolyRep> {
    if !is_prime(p) {
        return Err(Error::CompositeModulus);
    }
    let p2 = p * p;
    if p2 > BigInt::from(budget.max_cases) {
        return Err(Error::BudgetExceeded {
            cases: u128::try_from(p2).unwrap_or(u128::MAX),
            max_cases: budget.max_cases,
        });
    }
    let pu = usize::try_from(p).expect("bounded by budget");
    let a = &IntPoly::monomial(BigInt::one(), pu * pu) - &IntPoly::x();
    let b = &IntPoly::monomial(BigInt::one(), pu) - &IntPoly::x();
    let f = RationalPolyRep::new(&a * &b, p.clone())?;
    let verdict = member_via_divisibility(&f, 2, budget)?;
    if !verdict.member {
        return Err(Error::InternalAssertionFailure(String::from(
            "family element failed its membership self-check",
        )));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    fn rat(coeffs: &[i64], d: i64) -> RationalPolyRep {
        RationalPolyRep::new(poly(coeffs), BigInt::from(d)).unwrap()
    }

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    #[test]
    fn enumerate_monic_linear_mod_3() {
        let got: Vec<IntPoly> =
            enumerate_monic(1, &BigInt::from(3), &budget()).unwrap().collect();
        assert_eq!(got, vec![poly(&[0, 1]), poly(&[1, 1]), poly(&[2, 1])]);
    }

    #[test]
    fn enumerate_monic_quadratic_mod_2() {
        let got: Vec<IntPoly> =
            enumerate_monic(2, &BigInt::from(2), &budget()).unwrap().collect();
        assert_eq!(
            got,
            vec![
                poly(&[0, 0, 1]),
                poly(&[1, 0, 1]),
                poly(&[0, 1, 1]),
                poly(&[1, 1, 1]),
            ]
        );
    }

    #[test]
    fn enumerate_monic_counts() {
        assert_eq!(
            enumerate_monic(3, &BigInt::from(2), &budget()).unwrap().count(),
            8
        );
    }

    #[test]
    fn enumerate_monic_budget_guard() {
        let b = EnumerationBudget::new(7);
        assert!(matches!(
            enumerate_monic(3, &BigInt::from(2), &b),
            Err(Error::BudgetExceeded { cases: 8, .. })
        ));
    }

    #[test]
    fn irreducibility_mod_2() {
        assert!(is_irreducible_mod_p(&poly(&[1, 1, 1]), &BigInt::from(2)).unwrap());
        // x² + 1 = (x + 1)² mod 2
        assert!(!is_irreducible_mod_p(&poly(&[1, 0, 1]), &BigInt::from(2)).unwrap());
        assert!(is_irreducible_mod_p(&poly(&[-3, 1]), &BigInt::from(5)).unwrap());
    }

    #[test]
    fn irreducibility_rejects_composite_modulus() {
        assert_eq!(
            is_irreducible_mod_p(&poly(&[1, 1, 1]), &BigInt::from(6)),
            Err(Error::CompositeModulus)
        );
    }

    #[test]
    fn irreducibility_degree_drop() {
        assert_eq!(
            is_irreducible_mod_p(&poly(&[1, 1, 3]), &BigInt::from(3)),
            Err(Error::DegreeDrop)
        );
    }

    #[test]
    fn lift_x2_plus_x_mod_2() {
        let (k, p) = irreducible_lift(&poly(&[0, 1, 1]), &BigInt::from(2)).unwrap();
        assert_eq!(k, poly(&[2, 1, 1]));
        assert_eq!(p, BigInt::from(3));
    }

    #[test]
    fn lift_linear_is_identity() {
        let (k, p) = irreducible_lift(&poly(&[0, 1]), &BigInt::from(2)).unwrap();
        assert_eq!(k, poly(&[0, 1]));
        assert_eq!(p, BigInt::from(3));
    }

    #[test]
    fn lift_postconditions() {
        let d = BigInt::from(3);
        let h = poly(&[1, 0, 1]);
        let (k, p) = irreducible_lift(&h, &d).unwrap();
        assert!(k.is_monic());
        assert_eq!(k.degree(), h.degree());
        assert_eq!(k.reduce_mod(&d).unwrap(), h.reduce_mod(&d).unwrap());
        assert!(is_irreducible_mod_p(&k, &p).unwrap());
        assert!(!(&d % &p).is_zero());
    }

    #[test]
    fn divisibility_n1_member() {
        let v = member_via_divisibility(&rat(&[0, -1, 1], 2), 1, &budget()).unwrap();
        assert!(v.member);
        assert_eq!(v.cases, 2);
    }

    #[test]
    fn divisibility_n2_non_member_first_witness() {
        let v = member_via_divisibility(&rat(&[0, -1, 1], 2), 2, &budget()).unwrap();
        assert!(!v.member);
        // x² already fails; it is the first residue in enumeration order
        assert_eq!(v.witness, Some(poly(&[0, 0, 1])));
    }

    #[test]
    fn divisibility_x2_x_plus_x_plus_1_also_fails() {
        // the irreducible quadratic mod 2 is itself a witness
        let f = rat(&[0, -1, 1], 2);
        assert!(divisibility_case_fails(
            f.numerator(),
            &poly(&[1, 1, 1]),
            f.denominator()
        )
        .unwrap());
    }

    #[test]
    fn divisibility_family_member() {
        // (x⁴ − x)(x² − x)/2 = (x⁶ − x⁵ − x³ + x²)/2
        let v = member_via_divisibility(&rat(&[0, 0, 1, -1, 0, -1, 1], 2), 2, &budget())
            .unwrap();
        assert!(v.member);
        assert_eq!(v.cases, 4);
    }

    #[test]
    fn companion_oracle_agrees() {
        let f = rat(&[0, -1, 1], 2);
        let v = member_via_companion(&f, 2, &budget()).unwrap();
        assert!(!v.member);
        let g = rat(&[0, 0, 1, -1, 0, -1, 1], 2);
        assert!(member_via_companion(&g, 2, &budget()).unwrap().member);
        // d = 1 is an immediate member
        let h = RationalPolyRep::from_int_poly(poly(&[3, 1, 4]));
        assert!(member_via_companion(&h, 3, &budget()).unwrap().member);
    }

    #[test]
    fn irreducible_companion_oracle_agrees() {
        assert!(!member_via_irreducible_companion(&rat(&[0, -1, 1], 2), 2, &budget())
            .unwrap()
            .member);
        assert!(
            member_via_irreducible_companion(&rat(&[0, 0, 1, -1, 0, -1, 1], 2), 2, &budget())
                .unwrap()
                .member
        );
        assert!(member_via_irreducible_companion(&rat(&[0, -1, 1], 2), 1, &budget())
            .unwrap()
            .member);
    }

    #[test]
    fn n1_membership_is_value_divisibility() {
        // at n = 1 the oracle reduces to d | g(a) for all a in [0, d)
        for (coeffs, d) in [
            (&[0i64, -1, 1][..], 2i64),
            (&[0, 2, 1], 3),
            (&[1, 1, 1], 3),
            (&[0, 0, 0, 1], 4),
        ] {
            let f = rat(coeffs, d);
            let v = member_via_divisibility(&f, 1, &budget()).unwrap();
            let by_values = (0..d).all(|a| {
                (f.numerator().eval(&BigInt::from(a)) % f.denominator()).is_zero()
            });
            assert_eq!(v.member, by_values, "g = {:?}, d = {}", coeffs, d);
        }
    }

    #[test]
    fn split_matches_direct_verdict() {
        // d = 6, n = 1, g = x² − x: member mod 2, non-member mod 3
        let f = rat(&[0, -1, 1], 6);
        let split = prime_power_split(&f, 1, &budget()).unwrap();
        assert!(!split.member);
        assert_eq!(split.parts.len(), 2);
        assert!(split.parts[0].2.member);
        assert!(!split.parts[1].2.member);
        assert_eq!(
            split.member,
            member_via_divisibility(&f, 1, &budget()).unwrap().member
        );
    }

    #[test]
    fn split_single_prime_power() {
        let f = rat(&[1, 0, 1], 4);
        let split = prime_power_split(&f, 1, &budget()).unwrap();
        assert_eq!(split.parts.len(), 1);
        assert_eq!(split.parts[0], (BigInt::from(2), 2, split.parts[0].2.clone()));
    }

    #[test]
    fn family_members() {
        for p in [2i64, 3, 5] {
            let f = generate_family(&BigInt::from(p), &budget()).unwrap();
            assert_eq!(f.denominator(), &BigInt::from(p));
            let pu = p as usize;
            assert_eq!(f.numerator().degree(), Some(pu * pu + pu));
        }
    }

    #[test]
    fn family_rejects_composite() {
        assert_eq!(
            generate_family(&BigInt::from(4), &budget()),
            Err(Error::CompositeModulus)
        );
    }

    #[test]
    fn all_witnesses_collects_every_failure() {
        let f = rat(&[0, -1, 1], 2);
        let (v, ws) = all_witnesses(&f, 2, Oracle::Divisibility, &budget()).unwrap();
        assert!(!v.member);
        // x², x² + 1 and x² + x + 1 fail; x² + x ≡ g itself divides
        assert_eq!(ws, vec![poly(&[0, 0, 1]), poly(&[1, 0, 1]), poly(&[1, 1, 1])]);
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(&BigInt::from(2)));
        assert!(is_prime(&BigInt::from(97)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(91)));
        assert!(is_prime(&BigInt::from(1_000_003)));
    }
}
