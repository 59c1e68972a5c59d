//! Property tests for the algebraic laws the crate is built on.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

use ivpoly_core::matpoly::{MatCoeffPoly, RatMatrix};
use ivpoly_core::*;

fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    vec(-bound..=bound, 0..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic_poly(deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    vec(-bound..=bound, deg).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

fn int_matrix(n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    vec(-bound..=bound, n * n).prop_map(move |e| {
        IntMatrix::new(n, e.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn rat_matrix(n: usize, bound: i64, max_den: i64) -> impl Strategy<Value = RatMatrix> {
    vec((-bound..=bound, 1..=max_den), n * n).prop_map(move |e| {
        RatMatrix::new(
            n,
            e.into_iter()
                .map(|(a, b)| {
                    num_rational::BigRational::new(BigInt::from(a), BigInt::from(b))
                })
                .collect(),
        )
        .unwrap()
    })
}

fn mat_coeff_poly(n: usize, max_deg: usize) -> impl Strategy<Value = MatCoeffPoly> {
    vec(rat_matrix(n, 6, 4), 0..=max_deg + 1)
        .prop_map(move |coeffs| MatCoeffPoly::new(n, coeffs).unwrap())
}

proptest! {
    #[test]
    fn divmod_recomposition(g in int_poly(8, 50), h in monic_poly(3, 9)) {
        let (q, r) = g.monic_divmod(&h).unwrap();
        prop_assert_eq!(&(&q * &h) + &r, g);
        prop_assert!(r.degree().is_none_or(|dr| dr < h.degree().unwrap()));
    }

    #[test]
    fn crt_reduces_back(h1 in monic_poly(3, 20), h2 in monic_poly(3, 20)) {
        let (d1, d2) = (BigInt::from(4), BigInt::from(9));
        let r1 = h1.reduce_mod(&d1).unwrap();
        let r2 = h2.reduce_mod(&d2).unwrap();
        let k = crt_coeffwise(&[r1.clone(), r2.clone()], 3).unwrap();
        prop_assert!(k.is_monic());
        prop_assert_eq!(k.reduce_mod(&d1).unwrap(), r1);
        prop_assert_eq!(k.reduce_mod(&d2).unwrap(), r2);
        for c in k.coeffs() {
            prop_assert!(!c.is_negative() && *c < BigInt::from(36));
        }
    }

    #[test]
    fn canonicalize_idempotent_and_faithful(
        g in int_poly(6, 30),
        d in (-30i64..=30).prop_filter("nonzero", |d| *d != 0),
    ) {
        let f = canonicalize(g.clone(), BigInt::from(d)).unwrap();
        // cross-multiplication: g·d' = g'·d
        prop_assert_eq!(g.scale(f.denominator()), f.numerator().scale(&BigInt::from(d)));
        let again = canonicalize(f.numerator().clone(), f.denominator().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(f.denominator().is_positive());
        if !f.is_zero() {
            prop_assert!(f.numerator().content().gcd(f.denominator()).is_one());
        }
    }

    #[test]
    fn reduction_is_ring_homomorphism(
        a in int_poly(5, 40),
        b in int_poly(5, 40),
        d in 2i64..=12,
    ) {
        let d = BigInt::from(d);
        let ra = a.reduce_mod(&d).unwrap();
        let rb = b.reduce_mod(&d).unwrap();
        prop_assert_eq!((&a + &b).reduce_mod(&d).unwrap(), ra.add(&rb).unwrap());
        prop_assert_eq!((&a * &b).reduce_mod(&d).unwrap(), ra.mul(&rb).unwrap());
    }

    #[test]
    fn companion_char_poly_round_trip(h in monic_poly(5, 9)) {
        prop_assert_eq!(char_poly(&companion(&h).unwrap()), h);
    }

    #[test]
    fn cayley_hamilton(a in (1usize..=4).prop_flat_map(|n| int_matrix(n, 9))) {
        prop_assert!(eval_poly_at_matrix(&char_poly(&a), &a).is_zero());
    }

    #[test]
    fn char_poly_matches_cofactor_expansion(
        a in (1usize..=3).prop_flat_map(|n| int_matrix(n, 9)),
    ) {
        prop_assert_eq!(char_poly(&a), char_poly_by_cofactors(&a));
    }

    #[test]
    fn evaluation_commutes_with_reduction(
        g in int_poly(6, 20),
        a in int_matrix(3, 9),
        d in 2i64..=12,
    ) {
        let d = BigInt::from(d);
        let exact = eval_poly_at_matrix(&g, &a).reduce_mod(&d).unwrap();
        let modular = eval_poly_at_residue_matrix(&g, &a.reduce_mod(&d).unwrap()).unwrap();
        prop_assert_eq!(exact, modular);
    }

    #[test]
    fn eval_distributes_over_block_diag(
        g in int_poly(5, 9),
        a in int_matrix(2, 9),
        b in int_matrix(2, 9),
    ) {
        prop_assert_eq!(
            eval_poly_at_matrix(&g, &block_diag(&a, &b)),
            block_diag(&eval_poly_at_matrix(&g, &a), &eval_poly_at_matrix(&g, &b))
        );
    }
}

// Independent characteristic-polynomial oracle: Laplace expansion of
// det(xI − A) over ℤ[x].
fn char_poly_by_cofactors(a: &IntMatrix) -> IntPoly {
    let n = a.dim();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut p = IntPoly::constant(-a.entry(i, j));
            if i == j {
                p = &p + &IntPoly::x();
            }
            row.push(p);
        }
        rows.push(row);
    }
    poly_det(&rows)
}

fn poly_det(m: &[Vec<IntPoly>]) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut det = IntPoly::zero();
    for j in 0..n {
        let minor: Vec<Vec<IntPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &poly_det(&minor);
        det = if j % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

#[test]
fn companion_minimal_polynomial_by_annihilator_search() {
    // for deg h ≤ 3 no nonzero polynomial of lower degree with small
    // coefficients annihilates companion(h)
    let polys = [
        vec![1i64, 1, 1],
        vec![-3, 1],
        vec![2, 0, -1, 1],
        vec![0, 0, 0, 1],
        vec![-1, 2, 3, 1],
    ];
    for coeffs in &polys {
        let h = IntPoly::from_i64s(coeffs);
        let c = companion(&h).unwrap();
        let n = h.degree().unwrap();
        let range = 3i64;
        let width = (2 * range + 1) as usize;
        for idx in 0..width.pow(n as u32) {
            let mut cand = Vec::with_capacity(n);
            let mut rest = idx;
            for _ in 0..n {
                cand.push((rest % width) as i64 - range);
                rest /= width;
            }
            let cand = IntPoly::from_i64s(&cand);
            if cand.is_zero() {
                continue;
            }
            assert!(
                !eval_poly_at_matrix(&cand, &c).is_zero(),
                "degree-{} annihilator {:?} for companion of {:?}",
                n - 1,
                cand,
                h
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_oracles_agree(
        g in int_poly(6, 50),
        d in 2i64..=8,
        n in 1usize..=2,
    ) {
        let budget = EnumerationBudget::default();
        let f = canonicalize(g, BigInt::from(d)).unwrap();
        let a = member_via_divisibility(&f, n, &budget).unwrap();
        let b = member_via_companion(&f, n, &budget).unwrap();
        let c = member_via_irreducible_companion(&f, n, &budget).unwrap();
        prop_assert_eq!(a.member, b.member);
        prop_assert_eq!(b.member, c.member);
        prop_assert_eq!(&a.witness, &b.witness);
        prop_assert_eq!(&b.witness, &c.witness);
    }

    #[test]
    fn split_verdict_equals_direct(g in int_poly(5, 30), d in 2i64..=12) {
        let budget = EnumerationBudget::default();
        let f = canonicalize(g, BigInt::from(d)).unwrap();
        for n in 1..=2 {
            let direct = member_via_divisibility(&f, n, &budget).unwrap();
            let split = prime_power_split(&f, n, &budget).unwrap();
            prop_assert_eq!(direct.member, split.member);
        }
    }

    #[test]
    fn integer_polynomials_are_members(g in int_poly(8, 50), n in 1usize..=3) {
        let budget = EnumerationBudget::default();
        let f = RationalPolyRep::from_int_poly(g);
        prop_assert!(member_via_divisibility(&f, n, &budget).unwrap().member);
    }

    #[test]
    fn members_are_closed_under_ring_operations(p in prop_oneof![Just(2i64), Just(3)]) {
        let budget = EnumerationBudget::default();
        let f = generate_family(&BigInt::from(p), &budget).unwrap();
        let sum = f.add(&f);
        let product = f.mul(&f);
        prop_assert!(member_via_divisibility(&sum, 2, &budget).unwrap().member);
        prop_assert!(member_via_divisibility(&product, 2, &budget).unwrap().member);
    }

    #[test]
    fn membership_is_monotone_in_n(g in int_poly(6, 30), d in 2i64..=6) {
        let budget = EnumerationBudget::default();
        let f = canonicalize(g, BigInt::from(d)).unwrap();
        let at2 = member_via_divisibility(&f, 2, &budget).unwrap();
        let at1 = member_via_divisibility(&f, 1, &budget).unwrap();
        if at2.member {
            prop_assert!(at1.member);
        }
        // semantic cross-check through the block-diagonal embedding
        if let Some(w) = at1.witness {
            let a = companion(&w).unwrap();
            let padded = block_diag(&a, &IntMatrix::zero(1));
            let exact = eval_poly_at_matrix(f.numerator(), &padded);
            let non_integral = exact
                .entries()
                .iter()
                .any(|e| !(e % f.denominator()).is_zero());
            prop_assert!(non_integral);
        }
    }

    #[test]
    fn irreducible_lift_contract(h in monic_poly(3, 30), d in 2i64..=20) {
        let d = BigInt::from(d);
        let (k, p) = irreducible_lift(&h, &d).unwrap();
        prop_assert!(k.is_monic());
        prop_assert_eq!(k.degree(), h.degree());
        prop_assert_eq!(k.reduce_mod(&d).unwrap(), h.reduce_mod(&d).unwrap());
        prop_assert!(is_irreducible_mod_p(&k, &p).unwrap());
        prop_assert!(!(&d % &p).is_zero());
    }

    #[test]
    fn image_properties(g in int_poly(6, 30), a in (1usize..=3).prop_flat_map(|n| int_matrix(n, 9))) {
        // g/1 is always a member; image must match direct evaluation
        let f = RationalPolyRep::from_int_poly(g.clone());
        let n = a.dim();
        let r = reduced_representative(&f, &a).unwrap();
        prop_assert!(r.degree().is_none_or(|dr| dr < n));
        prop_assert_eq!(image_at(&f, &a).unwrap(), eval_poly_at_matrix(&g, &a));
    }

    #[test]
    fn failure_certifies_non_membership(g in int_poly(6, 30), a in int_matrix(2, 6)) {
        let budget = EnumerationBudget::default();
        let f = canonicalize(g, BigInt::from(4)).unwrap();
        if reduced_representative(&f, &a) == Err(Error::NotIntegerValuedAtMatrix) {
            prop_assert!(!member_via_divisibility(&f, 2, &budget).unwrap().member);
        }
    }

    #[test]
    fn phi_is_a_ring_isomorphism(
        f in (2usize..=3).prop_flat_map(|n| (mat_coeff_poly(n, 4), mat_coeff_poly(n, 4))),
    ) {
        let (f, g) = f;
        let pf = phi(&f);
        let pg = phi(&g);
        prop_assert_eq!(phi_inv(&pf), f.clone());
        prop_assert_eq!(phi(&f.add(&g).unwrap()), pf.add(&pg).unwrap());
        prop_assert_eq!(phi(&mat_poly_mul(&f, &g).unwrap()), pf.mul(&pg).unwrap());
    }

    #[test]
    fn sandwich_scalarization_matches_phi(f in mat_coeff_poly(2, 4)) {
        let image = phi(&f);
        for j in 1..=2usize {
            for k in 1..=2usize {
                prop_assert_eq!(
                    &entry_scalarize(&f, j, k).unwrap(),
                    image.entry(j - 1, k - 1)
                );
            }
        }
    }
}

