//! Polynomial arithmetic over the prime field F_p, just enough for the
//! Frobenius-power irreducibility test.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Coefficients ascending, each in [0, p), trailing coefficient nonzero.
pub(crate) type GfPoly = Vec<BigInt>;

pub(crate) fn trim(mut v: GfPoly) -> GfPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn reduce(coeffs: &[BigInt], p: &BigInt) -> GfPoly {
    trim(coeffs.iter().map(|c| c.mod_floor(p)).collect())
}

fn inv_mod(a: &BigInt, p: &BigInt) -> BigInt {
    // p prime, a nonzero mod p
    a.modpow(&(p - 2), p)
}

pub(crate) fn x_poly() -> GfPoly {
    vec![BigInt::zero(), BigInt::one()]
}

pub(crate) fn sub(a: &GfPoly, b: &GfPoly, p: &BigInt) -> GfPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let ai = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let bi = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push((ai - bi).mod_floor(p));
    }
    trim(out)
}

pub(crate) fn mul(a: &GfPoly, b: &GfPoly, p: &BigInt) -> GfPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out.into_iter().map(|c| c.mod_floor(p)).collect())
}

/// Remainder of a by b over F_p (b nonzero).
pub(crate) fn rem(a: &GfPoly, b: &GfPoly, p: &BigInt) -> GfPoly {
    let db = b.len() - 1;
    let lead_inv = inv_mod(b.last().unwrap(), p);
    let mut r = a.clone();
    while r.len() > db {
        let c = (r.last().unwrap() * &lead_inv).mod_floor(p);
        let k = r.len() - 1 - db;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate().take(db) {
                let t = (&c * bj).mod_floor(p);
                let idx = k + j;
                r[idx] = (&r[idx] - t).mod_floor(p);
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic gcd over F_p.
pub(crate) fn gcd(a: &GfPoly, b: &GfPoly, p: &BigInt) -> GfPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        if !lead.is_one() {
            let inv = inv_mod(&lead, p);
            a = trim(a.into_iter().map(|c| (c * &inv).mod_floor(p)).collect());
        }
    }
    a
}

/// x^e mod h over F_p by binary exponentiation.
pub(crate) fn pow_x_mod(e: &BigInt, h: &GfPoly, p: &BigInt) -> GfPoly {
    let mut base = rem(&x_poly(), h, p);
    let mut acc = rem(&vec![BigInt::one()], h, p);
    let mut e = e.clone();
    let two = BigInt::from(2);
    while !e.is_zero() {
        if e.is_odd() {
            acc = rem(&mul(&acc, &base, p), h, p);
        }
        base = rem(&mul(&base, &base, p), h, p);
        e /= &two;
    }
    acc
}
