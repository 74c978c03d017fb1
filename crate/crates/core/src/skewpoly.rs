//! The skew polynomial ring `R[x; Theta]`, where `x a = Theta(a) x`.

use std::cmp::Ordering;

use crate::chainring::{ChainRing, DualNumberRing, RingElement};
use crate::error::{Error, Result};
use crate::gf::FieldElement;

/// A polynomial `c_0 + c_1 x + ... ` with trailing zeros trimmed; the zero
/// polynomial has no coefficients.
///
/// Values are built through a [`SkewRing`], which owns the zero element
/// needed for trimming.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy + Ord> SkewPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// Degree, with `None` standing for the degree of the zero polynomial
    /// (it compares below every `Some`).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer, `-1` for zero.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    /// Coefficient of `x^i`, `None` past the degree.
    pub fn coeff(&self, i: usize) -> Option<E> {
        self.coeffs.get(i).copied()
    }
}

impl<E: Copy + Ord> PartialOrd for SkewPoly<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sorts by degree first, then lexicographically from the constant term.
impl<E: Copy + Ord> Ord for SkewPoly<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// A chain ring together with a fixed automorphism `Theta` and its powers.
#[derive(Clone, Debug)]
pub struct SkewRing<R: ChainRing> {
    ring: R,
    theta: R::Auto,
    // powers[j] = Theta^j for 0 <= j < order
    powers: Vec<R::Auto>,
}

pub type Poly = SkewPoly<RingElement>;

/// Quotient and remainder.
pub type DivMod<E> = (SkewPoly<E>, SkewPoly<E>);

impl<R: ChainRing> SkewRing<R> {
    pub fn new(ring: R, theta: R::Auto) -> Self {
        let order = ring.auto_order(&theta);
        let mut powers = Vec::with_capacity(order);
        let mut current = ring.identity_auto();
        for _ in 0..order {
            powers.push(current.clone());
            current = ring.compose(&theta, &current);
        }
        Self {
            ring,
            theta,
            powers,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn theta(&self) -> &R::Auto {
        &self.theta
    }

    pub fn theta_order(&self) -> usize {
        self.powers.len()
    }

    /// `Theta^j(a)` for any integer `j`.
    #[inline]
    pub fn theta_pow(&self, a: R::Elem, j: i64) -> R::Elem {
        let k = j.rem_euclid(self.powers.len() as i64) as usize;
        self.ring.apply_auto(&self.powers[k], a)
    }

    pub fn poly(&self, mut coeffs: Vec<R::Elem>) -> SkewPoly<R::Elem> {
        let zero = self.ring.zero();
        while coeffs.last() == Some(&zero) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero(&self) -> SkewPoly<R::Elem> {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn constant(&self, c: R::Elem) -> SkewPoly<R::Elem> {
        self.poly(vec![c])
    }

    pub fn one(&self) -> SkewPoly<R::Elem> {
        self.constant(self.ring.one())
    }

    /// `c * x^i`.
    pub fn monomial(&self, c: R::Elem, i: usize) -> SkewPoly<R::Elem> {
        let mut coeffs = vec![self.ring.zero(); i + 1];
        coeffs[i] = c;
        self.poly(coeffs)
    }

    pub fn x(&self) -> SkewPoly<R::Elem> {
        self.monomial(self.ring.one(), 1)
    }

    /// `x^n - lambda`.
    pub fn x_pow_minus(&self, n: usize, lambda: R::Elem) -> SkewPoly<R::Elem> {
        let mut coeffs = vec![self.ring.zero(); n + 1];
        coeffs[0] = self.ring.neg(lambda);
        coeffs[n] = self.ring.add(coeffs[n], self.ring.one());
        self.poly(coeffs)
    }

    pub fn is_monic(&self, f: &SkewPoly<R::Elem>) -> bool {
        f.leading() == Some(self.ring.one())
    }

    pub fn add(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let len = f.coeffs.len().max(g.coeffs.len());
        let zero = self.ring.zero();
        let coeffs = (0..len)
            .map(|i| {
                let a = f.coeff(i).unwrap_or(zero);
                let b = g.coeff(i).unwrap_or(zero);
                self.ring.add(a, b)
            })
            .collect();
        self.poly(coeffs)
    }

    pub fn neg(&self, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        SkewPoly {
            coeffs: f.coeffs.iter().map(|&c| self.ring.neg(c)).collect(),
        }
    }

    pub fn sub(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        self.add(f, &self.neg(g))
    }

    /// `c * f` for a constant `c` on the left (no twisting needed).
    pub fn scale_left(&self, c: R::Elem, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        self.poly(f.coeffs.iter().map(|&a| self.ring.mul(c, a)).collect())
    }

    /// `(a x^i)(b x^j) = a Theta^i(b) x^{i+j}`, extended bilinearly.
    pub fn mul(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.ring.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a == self.ring.zero() {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                let term = self.ring.mul(a, self.theta_pow(b, i as i64));
                out[i + j] = self.ring.add(out[i + j], term);
            }
        }
        self.poly(out)
    }

    pub fn pow(&self, f: &SkewPoly<R::Elem>, e: u32) -> SkewPoly<R::Elem> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, f))
    }

    fn unit_leading_inverse(&self, g: &SkewPoly<R::Elem>) -> Result<R::Elem> {
        match g.leading() {
            Some(lead) if self.ring.is_unit(lead) => self.ring.inv(lead),
            _ => Err(Error::NonUnitLeading),
        }
    }

    /// Right division: `f = q*g + r` with `r = 0` or `deg r < deg g`.
    pub fn right_divmod(
        &self,
        f: &SkewPoly<R::Elem>,
        g: &SkewPoly<R::Elem>,
    ) -> Result<DivMod<R::Elem>> {
        let lead_inv = self.unit_leading_inverse(g)?;
        let s = g.coeffs.len() - 1;
        let mut r = f.clone();
        let mut q = vec![self.ring.zero(); f.coeffs.len().saturating_sub(s)];
        while r.coeffs.len() > s {
            let rd = r.coeffs.len() - 1;
            let shift = rd - s;
            // c x^{rd-s} g has leading term c Theta^{rd-s}(b_s) x^rd = a_rd x^rd
            let c = self.ring.mul(
                *r.coeffs.last().unwrap(),
                self.theta_pow(lead_inv, shift as i64),
            );
            q[shift] = self.ring.add(q[shift], c);
            let sub = self.mul(&self.monomial(c, shift), g);
            r = self.sub(&r, &sub);
            debug_assert!(r.coeffs.len() <= rd);
        }
        Ok((self.poly(q), r))
    }

    /// Left division: `f = g*q + r` with `r = 0` or `deg r < deg g`.
    pub fn left_divmod(
        &self,
        f: &SkewPoly<R::Elem>,
        g: &SkewPoly<R::Elem>,
    ) -> Result<DivMod<R::Elem>> {
        let lead_inv = self.unit_leading_inverse(g)?;
        let s = g.coeffs.len() - 1;
        let mut r = f.clone();
        let mut q = vec![self.ring.zero(); f.coeffs.len().saturating_sub(s)];
        while r.coeffs.len() > s {
            let rd = r.coeffs.len() - 1;
            let shift = rd - s;
            // g d x^{rd-s} has leading term b_s Theta^s(d) x^rd
            let d = self.theta_pow(
                self.ring.mul(lead_inv, *r.coeffs.last().unwrap()),
                -(s as i64),
            );
            q[shift] = self.ring.add(q[shift], d);
            let sub = self.mul(g, &self.monomial(d, shift));
            r = self.sub(&r, &sub);
            debug_assert!(r.coeffs.len() <= rd);
        }
        Ok((self.poly(q), r))
    }

    pub fn is_right_divisor(&self, g: &SkewPoly<R::Elem>, f: &SkewPoly<R::Elem>) -> Result<bool> {
        Ok(self.right_divmod(f, g)?.1.is_zero())
    }

    /// The unique `q` with `f = q*g`.
    pub fn right_quotient(
        &self,
        f: &SkewPoly<R::Elem>,
        g: &SkewPoly<R::Elem>,
    ) -> Result<SkewPoly<R::Elem>> {
        let (q, r) = self.right_divmod(f, g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotRightDivisor)
        }
    }

    /// Whether `f` commutes with `x` and with every constant, which together
    /// generate the ring.
    pub fn is_central(&self, f: &SkewPoly<R::Elem>) -> bool {
        let x = self.x();
        if self.mul(&x, f) != self.mul(f, &x) {
            return false;
        }
        self.ring.elements().into_iter().all(|a| {
            let c = self.constant(a);
            self.mul(&c, f) == self.mul(f, &c)
        })
    }

    /// `sum_{j=0}^{d} Theta^j(w_{d-j}) x^j`, the polynomial `x^d * phi(w)` for
    /// the coefficient-reversing anti-monomorphism `phi(x^i a) = x^{-i} a`.
    pub fn reversal(&self, w: &SkewPoly<R::Elem>, d: usize) -> Result<SkewPoly<R::Elem>> {
        if w.coeffs.len() > d + 1 {
            return Err(Error::DegreeTooLarge {
                deg: w.deg_i64(),
                bound: d as i64,
            });
        }
        let zero = self.ring.zero();
        let coeffs = (0..=d)
            .map(|j| self.theta_pow(w.coeff(d - j).unwrap_or(zero), j as i64))
            .collect();
        Ok(self.poly(coeffs))
    }

    /// Applies `Theta^j` to every coefficient, so `x^j f = (Theta^j f) x^j`.
    pub fn apply_theta_power(&self, f: &SkewPoly<R::Elem>, j: i64) -> SkewPoly<R::Elem> {
        SkewPoly {
            coeffs: f.coeffs.iter().map(|&c| self.theta_pow(c, j)).collect(),
        }
    }

    /// Applies `Theta` to every coefficient.
    pub fn coeffwise_theta(&self, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        self.apply_theta_power(f, 1)
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn make_monic(&self, f: &SkewPoly<R::Elem>) -> Result<SkewPoly<R::Elem>> {
        let inv = self.unit_leading_inverse(f)?;
        Ok(self.scale_left(inv, f))
    }

    pub fn format(&self, f: &SkewPoly<R::Elem>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let one = self.ring.one();
        let mut terms = Vec::new();
        for (i, &c) in f.coeffs.iter().enumerate().rev() {
            if c == self.ring.zero() {
                continue;
            }
            let xpart = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let coef = self.ring.format_elem(c);
            let term = if i == 0 {
                coef.replace('+', " + ")
            } else if c == one {
                xpart
            } else if coef.contains('+') {
                format!("({coef})*{xpart}")
            } else {
                format!("{coef}*{xpart}")
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

/// Operations that depend on the `F_q + uF_q` structure.
impl SkewRing<DualNumberRing> {
    pub fn field(&self) -> &crate::gf::GaloisField {
        self.ring.field()
    }

    pub fn u_poly(&self) -> Poly {
        self.constant(self.ring.u())
    }

    /// Embeds a polynomial with residue-field coefficients.
    pub fn from_residue(&self, coeffs: &[FieldElement]) -> Poly {
        self.poly(coeffs.iter().map(|&a| RingElement::constant(a)).collect())
    }

    /// Reduction mod u, kept inside `R[x;Theta]` with zero u-parts.
    pub fn bar_poly(&self, f: &Poly) -> Poly {
        self.poly(
            f.coeffs
                .iter()
                .map(|c| RingElement::constant(c.a))
                .collect(),
        )
    }

    /// The u-part `f1` of `f = f0 + u*f1`, as a residue polynomial.
    pub fn u_part(&self, f: &Poly) -> Poly {
        self.poly(
            f.coeffs
                .iter()
                .map(|c| RingElement::constant(c.b))
                .collect(),
        )
    }

    /// `u * f` (coefficientwise, `u` on the left).
    pub fn u_times(&self, f: &Poly) -> Poly {
        self.scale_left(self.ring.u(), f)
    }

    pub fn is_residue(&self, f: &Poly) -> bool {
        f.coeffs.iter().all(|c| c.in_residue_field())
    }

    /// The residue polynomial `g` with `f * u = u * g`:
    /// `g_i = bar(f_i) * nu_i`, where `Theta^i(u) = nu_i u`.
    pub fn shift_through_u(&self, f: &Poly) -> Poly {
        let fld = self.field();
        let t = *self.theta();
        self.poly(
            f.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| RingElement::constant(fld.mul(c.a, self.ring.u_twist(&t, i as i64))))
                .collect(),
        )
    }

    /// The residue polynomial `g` with `u * f = g * u`:
    /// `g_i = bar(f_i) * nu_i^{-1}`.
    pub fn shift_u_through(&self, f: &Poly) -> Poly {
        let fld = self.field();
        let t = *self.theta();
        self.poly(
            f.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let nu_inv = fld
                        .inv(self.ring.u_twist(&t, i as i64))
                        .expect("twist factors are units");
                    RingElement::constant(fld.mul(c.a, nu_inv))
                })
                .collect(),
        )
    }
}
