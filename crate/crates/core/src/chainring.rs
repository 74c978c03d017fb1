//! Finite chain rings. [`ChainRing`] is the operation set the skew
//! polynomial machinery relies on; [`DualNumberRing`] is the concrete ring
//! `F_q + uF_q = F_q[u]/(u^2)` with its automorphisms `Theta_{theta,beta}`.

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, GaloisField};

/// Minimal contract of a finite commutative chain ring together with its
/// automorphisms.
pub trait ChainRing {
    type Elem: Copy + Eq + Ord + Hash + Debug;
    type Residue: Copy + Eq + Debug;
    type Auto: Clone + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn neg(&self, x: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn is_unit(&self, x: Self::Elem) -> bool;
    /// Inverse of a unit; [`Error::NonUnit`] otherwise.
    fn inv(&self, x: Self::Elem) -> Result<Self::Elem>;
    /// Reduction onto the residue field.
    fn bar(&self, x: Self::Elem) -> Self::Residue;
    /// Every element, in ascending order.
    fn elements(&self) -> Vec<Self::Elem>;

    fn identity_auto(&self) -> Self::Auto;
    /// `outer ∘ inner`.
    fn compose(&self, outer: &Self::Auto, inner: &Self::Auto) -> Self::Auto;
    fn apply_auto(&self, t: &Self::Auto, x: Self::Elem) -> Self::Elem;

    fn format_elem(&self, x: Self::Elem) -> String;

    fn sub(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem {
        self.add(x, self.neg(y))
    }

    fn is_zero(&self, x: Self::Elem) -> bool {
        x == self.zero()
    }

    fn size(&self) -> usize {
        self.elements().len()
    }

    /// Least `k >= 1` with `t^k = id`, found by iterating on every element.
    fn auto_order(&self, t: &Self::Auto) -> usize {
        let elems = self.elements();
        let mut images = elems.clone();
        for k in 1.. {
            for y in images.iter_mut() {
                *y = self.apply_auto(t, *y);
            }
            if images == elems {
                return k;
            }
        }
        unreachable!()
    }
}

/// `a + b*u` with `u^2 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RingElement {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement {
        a: FieldElement::ZERO,
        b: FieldElement::ZERO,
    };

    pub fn new(a: FieldElement, b: FieldElement) -> Self {
        Self { a, b }
    }

    /// Embeds a residue-field element (zero u-part).
    pub fn constant(a: FieldElement) -> Self {
        Self {
            a,
            b: FieldElement::ZERO,
        }
    }

    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True iff the u-part vanishes, i.e. the element lies in F_q.
    pub fn in_residue_field(self) -> bool {
        self.b.is_zero()
    }
}

/// `Theta_{theta,beta}(a + bu) = theta(a) + beta*theta(b)*u` with
/// `theta = frobenius(., s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutomorphismSpec {
    pub s: u32,
    pub beta: FieldElement,
}

/// The chain ring `F_q + uF_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualNumberRing {
    field: Arc<GaloisField>,
}

impl DualNumberRing {
    pub fn new(field: GaloisField) -> Self {
        Self {
            field: Arc::new(field),
        }
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn u(&self) -> RingElement {
        RingElement::new(FieldElement::ZERO, self.field.one())
    }

    pub fn from_int(&self, k: i64) -> RingElement {
        RingElement::constant(self.field.from_int(k))
    }

    /// The element `a + b*u` for integers `a`, `b`.
    pub fn from_ints(&self, a: i64, b: i64) -> RingElement {
        RingElement::new(self.field.from_int(a), self.field.from_int(b))
    }

    pub fn unit_count(&self) -> usize {
        let q = self.field.order();
        (q - 1) * q
    }

    /// Validates `(s, beta)` against the field.
    pub fn automorphism(&self, s: u32, beta: FieldElement) -> Result<AutomorphismSpec> {
        self.field.check(beta)?;
        if beta.is_zero() {
            return Err(Error::ZeroBeta);
        }
        Ok(AutomorphismSpec {
            s: s % self.field.m(),
            beta,
        })
    }

    /// All `m * (q - 1)` automorphisms in `(s, beta)` order.
    pub fn enumerate_automorphisms(&self) -> Vec<AutomorphismSpec> {
        (0..self.field.m())
            .flat_map(|s| {
                self.field
                    .units()
                    .map(move |beta| AutomorphismSpec { s, beta })
            })
            .collect()
    }

    pub fn is_fixed(&self, t: &AutomorphismSpec, x: RingElement) -> bool {
        self.apply_auto(t, x) == x
    }

    /// `nu_j` with `Theta^j(u) = nu_j * u`, for any integer `j`.
    pub fn u_twist(&self, t: &AutomorphismSpec, j: i64) -> FieldElement {
        let f = &self.field;
        if j >= 0 {
            // beta * theta(beta) * ... * theta^{j-1}(beta)
            (0..j).fold(f.one(), |acc, i| {
                f.mul(acc, f.frobenius(t.beta, i * t.s as i64))
            })
        } else {
            // Theta^{-k}(Theta^k(u)) = u gives nu_{-k} = theta^{-k}(nu_k)^{-1}
            let pos = self.u_twist(t, -j);
            f.inv(f.frobenius(pos, j * t.s as i64))
                .expect("twist factors are products of units")
        }
    }
}

impl ChainRing for DualNumberRing {
    type Elem = RingElement;
    type Residue = FieldElement;
    type Auto = AutomorphismSpec;

    fn zero(&self) -> RingElement {
        RingElement::ZERO
    }

    fn one(&self) -> RingElement {
        RingElement::constant(self.field.one())
    }

    fn add(&self, x: RingElement, y: RingElement) -> RingElement {
        RingElement::new(self.field.add(x.a, y.a), self.field.add(x.b, y.b))
    }

    fn neg(&self, x: RingElement) -> RingElement {
        RingElement::new(self.field.neg(x.a), self.field.neg(x.b))
    }

    fn mul(&self, x: RingElement, y: RingElement) -> RingElement {
        let f = &self.field;
        RingElement::new(f.mul(x.a, y.a), f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)))
    }

    fn is_unit(&self, x: RingElement) -> bool {
        !x.a.is_zero()
    }

    fn inv(&self, x: RingElement) -> Result<RingElement> {
        let f = &self.field;
        let a_inv = f
            .inv(x.a)
            .map_err(|_| Error::NonUnit(self.format_elem(x)))?;
        // (a + bu)^{-1} = a^{-1} - a^{-2} b u
        let b = f.neg(f.mul(f.mul(a_inv, a_inv), x.b));
        Ok(RingElement::new(a_inv, b))
    }

    fn bar(&self, x: RingElement) -> FieldElement {
        x.a
    }

    fn elements(&self) -> Vec<RingElement> {
        let f = &self.field;
        f.elements()
            .flat_map(|a| f.elements().map(move |b| RingElement::new(a, b)))
            .collect()
    }

    fn size(&self) -> usize {
        self.field.order() * self.field.order()
    }

    fn identity_auto(&self) -> AutomorphismSpec {
        AutomorphismSpec {
            s: 0,
            beta: self.field.one(),
        }
    }

    fn compose(&self, outer: &AutomorphismSpec, inner: &AutomorphismSpec) -> AutomorphismSpec {
        let f = &self.field;
        AutomorphismSpec {
            s: (outer.s + inner.s) % f.m(),
            beta: f.mul(outer.beta, f.frobenius(inner.beta, outer.s as i64)),
        }
    }

    fn apply_auto(&self, t: &AutomorphismSpec, x: RingElement) -> RingElement {
        let f = &self.field;
        let s = t.s as i64;
        RingElement::new(f.frobenius(x.a, s), f.mul(t.beta, f.frobenius(x.b, s)))
    }

    fn format_elem(&self, x: RingElement) -> String {
        let f = &self.field;
        let upart = |b: FieldElement| {
            if b == f.one() {
                "u".to_string()
            } else {
                format!("{}*u", f.format(b))
            }
        };
        match (x.a.is_zero(), x.b.is_zero()) {
            (_, true) => f.format(x.a),
            (true, false) => upart(x.b),
            (false, false) => format!("{}+{}", f.format(x.a), upart(x.b)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> DualNumberRing {
        DualNumberRing::new(GaloisField::default_for(3, 1).unwrap())
    }

    #[test]
    fn multiplication_examples() {
        let r = r3();
        assert_eq!(r.mul(r.from_ints(1, 1), r.from_ints(1, 2)), r.one());
        assert_eq!(r.mul(r.u(), r.u()), r.zero());
        for x in r.elements() {
            assert_eq!(r.mul(r.one(), x), x);
        }
    }

    #[test]
    fn multiplication_matches_polynomial_product_mod_u_squared() {
        let r = r3();
        // oracle: (a + bu)(c + du) as integer polynomials in u, drop u^2, reduce mod 3
        for x in r.elements() {
            for y in r.elements() {
                let [a, b, c, d] = [x.a, x.b, y.a, y.b].map(|e| e.index() as i64);
                let expect = r.from_ints(a * c, a * d + b * c);
                assert_eq!(r.mul(x, y), expect);
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let r = r3();
        assert_eq!(r.inv(r.from_int(2)).unwrap(), r.from_int(2));
        assert_eq!(r.inv(r.from_ints(1, 1)).unwrap(), r.from_ints(1, 2));
        let found: Vec<_> = r
            .elements()
            .into_iter()
            .filter(|&y| r.mul(r.from_ints(1, 1), y) == r.one())
            .collect();
        assert_eq!(found, vec![r.from_ints(1, 2)]);
        assert!(matches!(r.inv(r.u()), Err(Error::NonUnit(_))));
    }

    #[test]
    fn bar_examples() {
        let r = r3();
        assert_eq!(r.bar(r.from_ints(2, 1)), r.field().from_int(2));
        assert_eq!(r.bar(r.u()), FieldElement::ZERO);
        let f = r.field();
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(r.bar(r.mul(x, y)), f.mul(r.bar(x), r.bar(y)));
            }
        }
    }

    #[test]
    fn automorphism_examples() {
        let r = r3();
        let t = r.automorphism(0, r.field().from_int(2)).unwrap();
        assert_eq!(r.apply_auto(&t, r.from_ints(1, 1)), r.from_ints(1, 2));
        assert_eq!(r.apply_auto(&t, r.from_int(2)), r.from_int(2));
        let id = r.automorphism(0, r.field().one()).unwrap();
        for x in r.elements() {
            assert_eq!(r.apply_auto(&id, x), x);
        }
        assert!(r.is_fixed(&t, r.from_int(2)));
        assert!(!r.is_fixed(&t, r.u()));
        assert!(!r.is_fixed(&t, r.from_ints(1, 1)));
        assert_eq!(r.auto_order(&t), 2);
        assert_eq!(r.auto_order(&id), 1);
        assert_eq!(r.automorphism(0, FieldElement::ZERO), Err(Error::ZeroBeta));
    }

    #[test]
    fn automorphism_counts() {
        let count = |p, m| {
            DualNumberRing::new(GaloisField::default_for(p, m).unwrap())
                .enumerate_automorphisms()
                .len()
        };
        assert_eq!(count(3, 1), 2);
        assert_eq!(count(2, 1), 1);
        assert_eq!(count(3, 2), 16);
        let autos = r3().enumerate_automorphisms();
        assert_eq!(autos[0].beta.index(), 1);
        assert_eq!(autos[1].beta.index(), 2);
    }

    #[test]
    fn frobenius_of_f4_has_order_two() {
        let r = DualNumberRing::new(GaloisField::default_for(2, 2).unwrap());
        let t = r.automorphism(1, r.field().one()).unwrap();
        assert_eq!(r.auto_order(&t), 2);
    }

    fn small_rings() -> Vec<DualNumberRing> {
        [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2)]
            .iter()
            .map(|&(p, m)| DualNumberRing::new(GaloisField::default_for(p, m).unwrap()))
            .collect()
    }

    #[test]
    fn every_automorphism_is_a_ring_automorphism() {
        for r in small_rings().into_iter().filter(|r| r.field().order() <= 9) {
            let elems = r.elements();
            for t in r.enumerate_automorphisms() {
                let mut images: Vec<_> = elems.iter().map(|&x| r.apply_auto(&t, x)).collect();
                for &x in &elems {
                    for &y in &elems {
                        let tx = r.apply_auto(&t, x);
                        let ty = r.apply_auto(&t, y);
                        assert_eq!(r.apply_auto(&t, r.add(x, y)), r.add(tx, ty));
                        assert_eq!(r.apply_auto(&t, r.mul(x, y)), r.mul(tx, ty));
                    }
                }
                images.sort();
                assert_eq!(images, elems, "not bijective");
            }
        }
    }

    #[test]
    fn units_are_elements_with_nonzero_residue() {
        for r in small_rings() {
            let units: Vec<_> = r.elements().into_iter().filter(|&x| r.is_unit(x)).collect();
            assert_eq!(units.len(), r.unit_count());
            for x in r.elements() {
                let has_inverse = r.elements().into_iter().any(|y| r.mul(x, y) == r.one());
                assert_eq!(has_inverse, !r.bar(x).is_zero());
            }
        }
    }

    #[test]
    fn residue_map_intertwines_frobenius() {
        for r in small_rings() {
            let f = r.field();
            for t in r.enumerate_automorphisms() {
                for x in r.elements() {
                    assert_eq!(
                        r.bar(r.apply_auto(&t, x)),
                        f.frobenius(r.bar(x), t.s as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn composition_and_u_twist() {
        for r in small_rings() {
            for t in r.enumerate_automorphisms() {
                let mut power = r.identity_auto();
                for j in 0..6i64 {
                    let nu = r.u_twist(&t, j);
                    let mut image = r.u();
                    for _ in 0..j {
                        image = r.apply_auto(&t, image);
                    }
                    assert_eq!(image, RingElement::new(FieldElement::ZERO, nu));
                    assert_eq!(power.beta, nu);
                    // nu_{-j} undoes nu_j
                    let back = r.u_twist(&t, -j);
                    let f = r.field();
                    assert_eq!(
                        f.mul(f.frobenius(back, j * t.s as i64), nu),
                        f.one(),
                        "j={j}"
                    );
                    power = r.compose(&t, &power);
                }
            }
        }
    }

    #[test]
    fn formatting() {
        let r = r3();
        assert_eq!(r.format_elem(r.from_ints(1, 2)), "1+2*u");
        assert_eq!(r.format_elem(r.u()), "u");
        assert_eq!(r.format_elem(r.from_ints(2, 0)), "2");
        assert_eq!(r.format_elem(r.from_ints(0, 2)), "2*u");
        assert_eq!(r.format_elem(r.from_ints(1, 1)), "1+u");
    }
}
