#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use skewcode::{ChainRing, CodeContext, DualNumberRing, GaloisField, Poly, RingElement};

/// Residue fields of the oracle grid, as `(p, m)`.
pub const GRID_FIELDS: [(u32, u32); 3] = [(2, 1), (3, 1), (2, 2)];
pub const GRID_LENGTHS: [usize; 2] = [2, 4];

/// Every context of the grid: each field, length, `lambda = +-1` (once when
/// they coincide) and every automorphism whose order divides the length.
pub fn grid() -> Vec<CodeContext> {
    let mut out = Vec::new();
    for (p, m) in GRID_FIELDS {
        let ring = DualNumberRing::new(GaloisField::default_for(p, m).unwrap());
        let mut lambdas = vec![ring.from_int(1), ring.from_int(-1)];
        lambdas.dedup();
        for n in GRID_LENGTHS {
            for &lambda in &lambdas {
                for theta in ring.enumerate_automorphisms() {
                    if n % ring.auto_order(&theta) == 0 {
                        out.push(CodeContext::new(ring.clone(), theta, n, lambda).unwrap());
                    }
                }
            }
        }
    }
    out
}

pub fn random_elem(ctx: &CodeContext, rng: &mut StdRng) -> RingElement {
    let elems = ctx.ring().elements();
    elems[rng.gen_range(0..elems.len())]
}

/// Uniform over polynomials of degree `< len`.
pub fn random_poly(ctx: &CodeContext, rng: &mut StdRng, len: usize) -> Poly {
    ctx.skew()
        .poly((0..len).map(|_| random_elem(ctx, rng)).collect())
}

/// A polynomial of degree exactly `deg` with a unit leading coefficient.
pub fn random_unit_leading(ctx: &CodeContext, rng: &mut StdRng, deg: usize) -> Poly {
    let mut c: Vec<RingElement> = (0..deg).map(|_| random_elem(ctx, rng)).collect();
    let lead = loop {
        let e = random_elem(ctx, rng);
        if ctx.ring().is_unit(e) {
            break e;
        }
    };
    c.push(lead);
    ctx.skew().poly(c)
}
