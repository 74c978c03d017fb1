use proptest::prelude::*;
use skewcode::{ChainRing, DualNumberRing, GaloisField, Poly, RingElement, SkewRing};

fn rings() -> Vec<SkewRing<DualNumberRing>> {
    let mut out = Vec::new();
    for (p, m) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1)] {
        let ring = DualNumberRing::new(GaloisField::default_for(p, m).unwrap());
        for theta in ring.enumerate_automorphisms() {
            out.push(SkewRing::new(ring.clone(), theta));
        }
    }
    out
}

fn poly(sk: &SkewRing<DualNumberRing>, raw: &[(u16, u16)]) -> Poly {
    let q = sk.field().order() as u16;
    let e = |i: u16| skewcode::FieldElement::from_index((i % q) as usize);
    sk.poly(
        raw.iter()
            .map(|&(a, b)| RingElement::new(e(a), e(b)))
            .collect(),
    )
}

fn raw_poly(max_len: usize) -> impl Strategy<Value = Vec<(u16, u16)>> {
    prop::collection::vec((0u16..256, 0u16..256), 0..max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn multiplication_is_associative_and_distributive(
        which in 0usize..64, a in raw_poly(5), b in raw_poly(5), c in raw_poly(5)
    ) {
        let rs = rings();
        let sk = &rs[which % rs.len()];
        let (a, b, c) = (poly(sk, &a), poly(sk, &b), poly(sk, &c));
        prop_assert_eq!(sk.mul(&sk.mul(&a, &b), &c), sk.mul(&a, &sk.mul(&b, &c)));
        prop_assert_eq!(sk.mul(&a, &sk.add(&b, &c)), sk.add(&sk.mul(&a, &b), &sk.mul(&a, &c)));
        prop_assert_eq!(sk.mul(&sk.add(&a, &b), &c), sk.add(&sk.mul(&a, &c), &sk.mul(&b, &c)));
    }

    #[test]
    fn division_round_trips(which in 0usize..64, f in raw_poly(9), g in raw_poly(4), lead in 1u16..256) {
        let rs = rings();
        let sk = &rs[which % rs.len()];
        let f = poly(sk, &f);
        let mut g = poly(sk, &g).coeffs().to_vec();
        let q = sk.field().order() as u16;
        g.push(RingElement::constant(skewcode::FieldElement::from_index((1 + lead % (q - 1)) as usize)));
        let g = sk.poly(g);
        let (quo, rem) = sk.right_divmod(&f, &g).unwrap();
        prop_assert_eq!(sk.add(&sk.mul(&quo, &g), &rem), f.clone());
        prop_assert!(rem.deg_i64() < g.deg_i64());
        let (quo, rem) = sk.left_divmod(&f, &g).unwrap();
        prop_assert_eq!(sk.add(&sk.mul(&g, &quo), &rem), f);
        prop_assert!(rem.deg_i64() < g.deg_i64());
    }

    #[test]
    fn u_moves_through_polynomials(which in 0usize..64, f in raw_poly(6)) {
        let rs = rings();
        let sk = &rs[which % rs.len()];
        let f = poly(sk, &f);
        let u = sk.u_poly();
        prop_assert_eq!(sk.mul(&f, &u), sk.mul(&u, &sk.shift_through_u(&f)));
        prop_assert_eq!(sk.mul(&u, &f), sk.mul(&sk.shift_u_through(&f), &u));
    }

    #[test]
    fn double_reversal_is_a_twist(which in 0usize..64, w in raw_poly(6), extra in 0usize..3) {
        let rs = rings();
        let sk = &rs[which % rs.len()];
        let w = poly(sk, &w);
        let d = w.degree().unwrap_or(0) + extra;
        let twice = sk.reversal(&sk.reversal(&w, d).unwrap(), d).unwrap();
        prop_assert_eq!(twice, sk.apply_theta_power(&w, d as i64));
    }

    #[test]
    fn automorphisms_respect_ring_operations(which in 0usize..64, x in (0u16..256, 0u16..256), y in (0u16..256, 0u16..256)) {
        let rs = rings();
        let sk = &rs[which % rs.len()];
        let r = sk.ring();
        let t = sk.theta();
        let (x, y) = (poly(sk, &[x]).coeff(0).unwrap_or(r.zero()), poly(sk, &[y]).coeff(0).unwrap_or(r.zero()));
        prop_assert_eq!(r.apply_auto(t, r.add(x, y)), r.add(r.apply_auto(t, x), r.apply_auto(t, y)));
        prop_assert_eq!(r.apply_auto(t, r.mul(x, y)), r.mul(r.apply_auto(t, x), r.apply_auto(t, y)));
        prop_assert_eq!(sk.theta_pow(sk.theta_pow(x, 1), -1), x);
    }
}
