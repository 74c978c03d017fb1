//! Euclidean and Hermitian inner products, dual codes from the reversal
//! formulas, self-duality tests, and an exhaustive dual oracle.

use std::fmt;
use std::str::FromStr;

use crate::chainring::{ChainRing, RingElement};
use crate::classify::{canonical_form, CanonicalIdeal};
use crate::error::{Error, Result};
use crate::quotcode::{CodeContext, CodeSpan, Codeword};
use crate::skewpoly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InnerProductKind {
    Euclidean,
    Hermitian,
}

impl fmt::Display for InnerProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InnerProductKind::Euclidean => "euclidean",
            InnerProductKind::Hermitian => "hermitian",
        })
    }
}

impl FromStr for InnerProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" => Ok(InnerProductKind::Euclidean),
            "hermitian" => Ok(InnerProductKind::Hermitian),
            _ => Err(Error::Precondition(format!("unknown inner product {s:?}"))),
        }
    }
}

fn check_kind(ctx: &CodeContext, kind: InnerProductKind) -> Result<()> {
    if kind == InnerProductKind::Hermitian && ctx.theta_order() != 2 {
        return Err(Error::HermitianOrder(ctx.theta_order()));
    }
    Ok(())
}

fn check_lambda_square(ctx: &CodeContext) -> Result<()> {
    if ctx.lambda_is_involutive() {
        Ok(())
    } else {
        Err(Error::LambdaSquare)
    }
}

fn check_lambda_sign(ctx: &CodeContext) -> Result<()> {
    if ctx.lambda_is_sign() {
        Ok(())
    } else {
        Err(Error::LambdaNotSign)
    }
}

/// `sum u_i v_i`, or `sum u_i Theta(v_i)` for the Hermitian form.
pub fn inner(
    ctx: &CodeContext,
    u: &Codeword,
    v: &Codeword,
    kind: InnerProductKind,
) -> Result<RingElement> {
    check_kind(ctx, kind)?;
    if u.entries().len() != v.entries().len() {
        return Err(Error::Precondition(format!(
            "lengths {} and {} differ",
            u.entries().len(),
            v.entries().len()
        )));
    }
    Ok(inner_unchecked(ctx, u.entries(), v.entries(), kind))
}

fn inner_unchecked(
    ctx: &CodeContext,
    u: &[RingElement],
    v: &[RingElement],
    kind: InnerProductKind,
) -> RingElement {
    let r = ctx.ring();
    let t = ctx.theta();
    u.iter().zip(v).fold(r.zero(), |acc, (&a, &b)| {
        let b = match kind {
            InnerProductKind::Euclidean => b,
            InnerProductKind::Hermitian => r.apply_auto(t, b),
        };
        r.add(acc, r.mul(a, b))
    })
}

/// Every `v` in `R^n` orthogonal to all of `span`, found by checking each
/// vector against a module generating set of the span.
pub fn brute_dual(ctx: &CodeContext, span: &CodeSpan, kind: InnerProductKind) -> Result<CodeSpan> {
    check_kind(ctx, kind)?;
    let (_, basis) = ctx.span_with_basis(span.words())?;
    let words = ctx
        .all_words()?
        .into_iter()
        .filter(|v| {
            basis
                .iter()
                .all(|c| inner_unchecked(ctx, v.entries(), c.entries(), kind).is_zero())
        })
        .collect();
    Ok(CodeSpan::from_words(words))
}

fn reversed_cofactor(ctx: &CodeContext, g: &Poly) -> Result<Poly> {
    let h = ctx.check_divisor(g)?;
    ctx.skew().reversal(&h, h.deg_i64() as usize)
}

/// Monic generator of the Euclidean dual of `<g>`: the reversal of
/// `h = (x^n - lambda)/g`, normalized.
pub fn euclidean_dual_li1(ctx: &CodeContext, g: &Poly) -> Result<Poly> {
    check_lambda_square(ctx)?;
    let rev = reversed_cofactor(ctx, g)?;
    ctx.skew().make_monic(&rev)
}

/// Monic generator of the Hermitian dual of `<g>`: as the Euclidean one,
/// with `Theta` applied to every coefficient before normalizing.
pub fn hermitian_dual_li1(ctx: &CodeContext, g: &Poly) -> Result<Poly> {
    check_kind(ctx, InnerProductKind::Hermitian)?;
    check_lambda_square(ctx)?;
    let rev = reversed_cofactor(ctx, g)?;
    let sk = ctx.skew();
    sk.make_monic(&sk.coeffwise_theta(&rev))
}

/// The residue polynomial `m` with `m g1 = s f1`, where `s` is defined by
/// `((x^n - lambda)/f0) u = u s`.
pub fn compute_m(ctx: &CodeContext, f0: &Poly, f1: &Poly, g1: &Poly) -> Result<Poly> {
    if !ctx.lambda().b.is_zero() {
        return Err(Error::Precondition(
            "lambda must lie in the residue field".to_string(),
        ));
    }
    let sk = ctx.skew();
    let cofactor = sk.right_quotient(ctx.modulus(), f0)?;
    let target = sk.mul(&sk.shift_through_u(&cofactor), f1);
    let (m, rem) = sk.right_divmod(&target, g1)?;
    if rem.is_zero() {
        Ok(m)
    } else {
        Err(Error::InconsistentLi3)
    }
}

/// Generators of the dual of `ideal` before canonicalization.
pub fn dual_generators(
    ctx: &CodeContext,
    ideal: &CanonicalIdeal,
    kind: InnerProductKind,
) -> Result<Vec<Poly>> {
    check_kind(ctx, kind)?;
    check_lambda_sign(ctx)?;
    let sk = ctx.skew();
    let n = ctx.n();
    let modulus = ctx.modulus();
    let gens = match ideal {
        CanonicalIdeal::Principal { g } => {
            return Ok(vec![match kind {
                InnerProductKind::Euclidean => euclidean_dual_li1(ctx, g)?,
                InnerProductKind::Hermitian => hermitian_dual_li1(ctx, g)?,
            }]);
        }
        CanonicalIdeal::UMultiple { g1 } => {
            let w = sk.right_quotient(modulus, g1)?;
            vec![sk.u_poly(), sk.reversal(&w, n - g1.deg_i64() as usize)?]
        }
        CanonicalIdeal::TwoGenerator { g1, f0, f1 } => {
            let m = compute_m(ctx, f0, f1, g1)?;
            let a = sk.mul(&sk.right_quotient(modulus, f0)?, &sk.u_poly());
            let b = sk.sub(&sk.right_quotient(modulus, g1)?, &sk.u_times(&m));
            vec![
                sk.reversal(&a, n - f0.deg_i64() as usize)?,
                sk.reversal(&b, n - g1.deg_i64() as usize)?,
            ]
        }
    };
    Ok(match kind {
        InnerProductKind::Euclidean => gens,
        InnerProductKind::Hermitian => gens.iter().map(|g| sk.coeffwise_theta(g)).collect(),
    })
}

/// The dual ideal in canonical form. Principal ideals map to principal
/// ideals directly; the other two shapes are re-canonicalized from the span
/// of their dual generators.
pub fn dual_ideal(
    ctx: &CodeContext,
    ideal: &CanonicalIdeal,
    kind: InnerProductKind,
) -> Result<CanonicalIdeal> {
    let gens = dual_generators(ctx, ideal, kind)?;
    match ideal {
        CanonicalIdeal::Principal { .. } => Ok(CanonicalIdeal::Principal {
            g: gens.into_iter().next().expect("one generator"),
        }),
        _ => canonical_form(ctx, &ctx.span(&gens)?),
    }
}

pub fn euclidean_dual_ideal(ctx: &CodeContext, ideal: &CanonicalIdeal) -> Result<CanonicalIdeal> {
    dual_ideal(ctx, ideal, InnerProductKind::Euclidean)
}

pub fn hermitian_dual_ideal(ctx: &CodeContext, ideal: &CanonicalIdeal) -> Result<CanonicalIdeal> {
    dual_ideal(ctx, ideal, InnerProductKind::Hermitian)
}

/// Self-duality of `<g>` for `deg g = n/2`, decided by whether `g` times the
/// polynomial built from `g_0^{-1}` and the coefficients of `g` equals
/// `x^n - lambda`.
pub fn is_self_dual_li1(ctx: &CodeContext, g: &Poly, kind: InnerProductKind) -> Result<bool> {
    check_kind(ctx, kind)?;
    check_lambda_square(ctx)?;
    ctx.check_divisor(g)?;
    let n = ctx.n();
    if !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!("n = {n} is odd")));
    }
    let k = (n / 2) as i64;
    if g.deg_i64() != k {
        return Err(Error::Precondition(format!(
            "generator has degree {}, expected n/2 = {k}",
            g.deg_i64()
        )));
    }
    let r = ctx.ring();
    let sk = ctx.skew();
    let zero = r.zero();
    let g0_inv = match r.inv(g.coeff(0).unwrap_or(zero)) {
        Ok(v) => v,
        Err(_) => return Ok(false),
    };
    let offset = match kind {
        InnerProductKind::Euclidean => 0,
        InnerProductKind::Hermitian => 1,
    };
    let mut coeffs = Vec::with_capacity(k as usize + 1);
    coeffs.push(sk.theta_pow(g0_inv, -k - offset));
    for i in 1..k {
        let c = r.mul(g0_inv, g.coeff((k - i) as usize).unwrap_or(zero));
        coeffs.push(sk.theta_pow(c, i - k - offset));
    }
    coeffs.push(r.one());
    let candidate = sk.poly(coeffs);
    Ok(&sk.mul(g, &candidate) == ctx.modulus())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::enumerate_ideals;

    use InnerProductKind::{Euclidean, Hermitian};

    fn ctx(beta: i64) -> CodeContext {
        CodeContext::standard(3, 1, 0, beta, 2, 1).unwrap()
    }

    fn p(c: &CodeContext, coeffs: &[(i64, i64)]) -> Poly {
        c.skew().poly(
            coeffs
                .iter()
                .map(|&(a, b)| c.ring().from_ints(a, b))
                .collect(),
        )
    }

    fn w(c: &CodeContext, coeffs: &[(i64, i64)]) -> Codeword {
        Codeword(
            coeffs
                .iter()
                .map(|&(a, b)| c.ring().from_ints(a, b))
                .collect(),
        )
    }

    #[test]
    fn inner_product_examples() {
        let c = ctx(2);
        let zero = c.ring().zero();
        let e = inner(
            &c,
            &w(&c, &[(1, 0), (1, 0)]),
            &w(&c, &[(1, 0), (2, 0)]),
            Euclidean,
        );
        assert_eq!(e.unwrap(), zero);
        let e = inner(
            &c,
            &w(&c, &[(0, 1), (0, 0)]),
            &w(&c, &[(0, 1), (1, 0)]),
            Euclidean,
        );
        assert_eq!(e.unwrap(), zero);
        let h = inner(
            &c,
            &w(&c, &[(0, 1), (0, 0)]),
            &w(&c, &[(0, 1), (0, 0)]),
            Hermitian,
        );
        assert_eq!(h.unwrap(), zero);
        assert_eq!(
            inner(&ctx(1), &w(&c, &[(1, 0)]), &w(&c, &[(1, 0)]), Hermitian),
            Err(Error::HermitianOrder(1))
        );
    }

    #[test]
    fn brute_dual_examples() {
        let c = ctx(2);
        let zero = c.span(&[]).unwrap();
        let full = c.span(&[c.skew().one()]).unwrap();
        assert_eq!(brute_dual(&c, &zero, Euclidean).unwrap(), full);
        assert_eq!(brute_dual(&c, &full, Euclidean).unwrap(), zero);
        let a = c.span(&[p(&c, &[(1, 0), (1, 0)])]).unwrap();
        let b = c.span(&[p(&c, &[(2, 0), (1, 0)])]).unwrap();
        assert_eq!(brute_dual(&c, &a, Euclidean).unwrap(), b);
    }

    #[test]
    fn li1_dual_examples() {
        let c = ctx(2);
        let f = |g: &Poly| c.skew().format(g);
        assert_eq!(
            f(&euclidean_dual_li1(&c, &p(&c, &[(1, 0), (1, 0)])).unwrap()),
            "x + 2"
        );
        assert_eq!(
            f(&euclidean_dual_li1(&c, &p(&c, &[(1, 2), (1, 0)])).unwrap()),
            "x + 2 + 2*u"
        );
        assert_eq!(f(&euclidean_dual_li1(&c, c.modulus()).unwrap()), "1");
        assert_eq!(
            f(&hermitian_dual_li1(&c, &p(&c, &[(1, 2), (1, 0)])).unwrap()),
            "x + 2 + u"
        );
        assert_eq!(
            f(&hermitian_dual_li1(&c, &p(&c, &[(1, 0), (1, 0)])).unwrap()),
            "x + 2"
        );
        assert_eq!(
            f(&hermitian_dual_li1(&c, &p(&c, &[(2, 1), (1, 0)])).unwrap()),
            "x + 1 + 2*u"
        );
        assert_eq!(
            hermitian_dual_li1(&ctx(1), &p(&c, &[(1, 0), (1, 0)])),
            Err(Error::HermitianOrder(1))
        );
    }

    #[test]
    fn compute_m_examples() {
        let c = ctx(2);
        let sk = c.skew();
        let f0 = p(&c, &[(1, 0), (1, 0)]);
        assert_eq!(
            compute_m(&c, &f0, &sk.zero(), &sk.one()).unwrap(),
            sk.zero()
        );
        let f1 = p(&c, &[(2, 0)]);
        let expected = sk.mul(
            &sk.shift_through_u(&sk.right_quotient(c.modulus(), &f0).unwrap()),
            &f1,
        );
        assert_eq!(compute_m(&c, &f0, &f1, &sk.one()).unwrap(), expected);
    }

    #[test]
    fn compute_m_detects_inconsistent_data() {
        // search for a triple where g1 does not divide the target
        let c = CodeContext::standard(3, 1, 0, 2, 4, 1).unwrap();
        let sk = c.skew();
        let divs =
            crate::classify::monic_right_divisors(&c, &c.residue_modulus(), 4, true).unwrap();
        let mut found = false;
        'outer: for f0 in &divs {
            for g1 in divs
                .iter()
                .filter(|g| g.deg_i64() >= 1 && g.deg_i64() < f0.deg_i64())
            {
                for a in 1..3 {
                    let f1 = sk.constant(c.ring().from_int(a));
                    if compute_m(&c, f0, &f1, g1) == Err(Error::InconsistentLi3) {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn ideal_dual_examples() {
        let c = ctx(2);
        let ideals = enumerate_ideals(&c).unwrap();
        let by_label = |s: &str| {
            ideals
                .iter()
                .find(|i| i.label(&c) == s)
                .unwrap_or_else(|| panic!("{s}"))
                .clone()
        };
        let e = |s: &str| euclidean_dual_ideal(&c, &by_label(s)).unwrap().label(&c);
        let h = |s: &str| hermitian_dual_ideal(&c, &by_label(s)).unwrap().label(&c);
        assert_eq!(e("<u*(x + 1)>"), "<u, x + 2>");
        assert_eq!(e("<u>"), "<u>");
        assert_eq!(e("<u, x + 1>"), "<u*(x + 2)>");
        assert_eq!(h("<x + 1 + u>"), "<x + 2 + 2*u>");
        assert_eq!(h("<u*(x + 2)>"), "<u, x + 1>");
        assert_eq!(h("<1>"), "<0>");
    }

    #[test]
    fn lambda_restrictions() {
        let r = crate::DualNumberRing::new(crate::GaloisField::default_for(5, 1).unwrap());
        let id = r.identity_auto();
        let c = CodeContext::new(r.clone(), id, 2, r.from_int(2)).unwrap();
        let g = c.skew().one();
        assert_eq!(euclidean_dual_li1(&c, &g), Err(Error::LambdaSquare));
        let ideal = CanonicalIdeal::Principal { g };
        assert_eq!(euclidean_dual_ideal(&c, &ideal), Err(Error::LambdaNotSign));
    }

    #[test]
    fn self_dual_examples() {
        for beta in [1, 2] {
            let c = ctx(beta);
            for g in crate::classify::monic_right_divisors(&c, c.modulus(), 1, false)
                .unwrap()
                .into_iter()
                .filter(|g| g.deg_i64() == 1)
            {
                assert!(!is_self_dual_li1(&c, &g, Euclidean).unwrap());
            }
        }
        let c = CodeContext::standard(2, 1, 0, 1, 2, -1).unwrap();
        let g = p(&c, &[(1, 0), (1, 0)]);
        let span = c.span(std::slice::from_ref(&g)).unwrap();
        let oracle = brute_dual(&c, &span, Euclidean).unwrap() == span;
        assert_eq!(is_self_dual_li1(&c, &g, Euclidean).unwrap(), oracle);
        assert!(oracle);
        assert!(matches!(
            is_self_dual_li1(&c, &c.skew().one(), Euclidean),
            Err(Error::Precondition(_))
        ));
    }
}
