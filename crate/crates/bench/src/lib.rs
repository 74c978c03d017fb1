//! Shared fixtures for the criterion benches.

use skewcode::{ChainRing, CodeContext, Poly};

/// `(F_3 + uF_3)[x;Theta]/<x^n - 1>` with `Theta(u) = 2u`.
pub fn f3_skew(n: usize) -> CodeContext {
    CodeContext::standard(3, 1, 0, 2, n, 1).expect("valid context")
}

/// `(F_4 + uF_4)[x;Theta]/<x^4 - 1>` with Frobenius twist, the largest grid
/// context.
pub fn f4_frobenius() -> CodeContext {
    CodeContext::standard(2, 2, 1, 1, 4, 1).expect("valid context")
}

/// A dense polynomial of the given length with a deterministic pattern of
/// coefficients and a unit leading coefficient.
pub fn dense(ctx: &CodeContext, len: usize) -> Poly {
    let elems = ctx.ring().elements();
    let mut coeffs: Vec<_> = (0..len).map(|i| elems[(i * 7 + 3) % elems.len()]).collect();
    if let Some(last) = coeffs.last_mut() {
        *last = ctx.ring().one();
    }
    ctx.skew().poly(coeffs)
}
