//! Skew constacyclic codes as left ideals of `R[x;Theta]/<x^n - lambda>`.

use std::fmt;

use serde_json::Value;

use crate::chainring::{AutomorphismSpec, ChainRing, DualNumberRing, RingElement};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, GaloisField};
use crate::skewpoly::{Poly, SkewRing};

/// Default cap on `|R|^n` for anything that materializes vectors of `R^n`.
pub const DEFAULT_BRUTEFORCE_CAP: u128 = 1_000_000;

/// Validated description of the quotient ring `R[x;Theta]/<x^n - lambda>`.
#[derive(Clone, Debug)]
pub struct CodeContext {
    skew: SkewRing<DualNumberRing>,
    n: usize,
    lambda: RingElement,
    modulus: Poly,
    cap: u128,
}

impl CodeContext {
    /// Fails unless `lambda` is a unit fixed by `theta` and `n` is a multiple
    /// of the order of `theta`, i.e. unless `x^n - lambda` is central.
    pub fn new(
        ring: DualNumberRing,
        theta: AutomorphismSpec,
        n: usize,
        lambda: RingElement,
    ) -> Result<Self> {
        ring.field().check(theta.beta)?;
        ring.field().check(lambda.a)?;
        ring.field().check(lambda.b)?;
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        if !ring.is_unit(lambda) {
            return Err(Error::LambdaNotUnit(ring.format_elem(lambda)));
        }
        if !ring.is_fixed(&theta, lambda) {
            return Err(Error::LambdaNotFixed(ring.format_elem(lambda)));
        }
        let skew = SkewRing::new(ring, theta);
        let order = skew.theta_order();
        if !n.is_multiple_of(order) {
            return Err(Error::LengthNotMultiple { n, order });
        }
        let modulus = skew.x_pow_minus(n, lambda);
        debug_assert!(skew.is_central(&modulus));
        Ok(Self {
            skew,
            n,
            lambda,
            modulus,
            cap: DEFAULT_BRUTEFORCE_CAP,
        })
    }

    /// Shortcut: field from the default table, `Theta_{s,beta}` with `beta`
    /// and `lambda` given as integers.
    pub fn standard(p: u32, m: u32, s: u32, beta: i64, n: usize, lambda: i64) -> Result<Self> {
        let ring = DualNumberRing::new(GaloisField::default_for(p, m)?);
        let theta = ring.automorphism(s, ring.field().from_int(beta))?;
        let lambda = ring.from_int(lambda);
        Self::new(ring, theta, n, lambda)
    }

    pub fn with_bruteforce_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    pub fn bruteforce_cap(&self) -> u128 {
        self.cap
    }

    pub fn skew(&self) -> &SkewRing<DualNumberRing> {
        &self.skew
    }

    pub fn ring(&self) -> &DualNumberRing {
        self.skew.ring()
    }

    pub fn field(&self) -> &GaloisField {
        self.skew.ring().field()
    }

    pub fn theta(&self) -> &AutomorphismSpec {
        self.skew.theta()
    }

    pub fn theta_order(&self) -> usize {
        self.skew.theta_order()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> RingElement {
        self.lambda
    }

    /// `x^n - lambda`.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// `x^n - bar(lambda)`, the residue image of the modulus.
    pub fn residue_modulus(&self) -> Poly {
        self.skew.bar_poly(&self.modulus)
    }

    /// `lambda^2 = 1`.
    pub fn lambda_is_involutive(&self) -> bool {
        let r = self.ring();
        r.mul(self.lambda, self.lambda) == r.one()
    }

    /// `lambda` is `1` or `-1`.
    pub fn lambda_is_sign(&self) -> bool {
        let r = self.ring();
        self.lambda == r.one() || self.lambda == r.neg(r.one())
    }

    /// `|R|^n`, saturating.
    pub fn space_size(&self) -> u128 {
        (self.ring().size() as u128).saturating_pow(self.n as u32)
    }

    pub fn ensure_within_cap(&self, size: u128) -> Result<()> {
        if size > self.cap {
            Err(Error::BruteForceBound {
                size,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Canonical representative of degree `< n`.
    pub fn reduce(&self, f: &Poly) -> Poly {
        self.skew
            .right_divmod(f, &self.modulus)
            .expect("x^n - lambda is monic")
            .1
    }

    pub fn codeword(&self, f: &Poly) -> Codeword {
        let r = self.reduce(f);
        let mut entries = r.coeffs().to_vec();
        entries.resize(self.n, RingElement::ZERO);
        Codeword(entries)
    }

    pub fn poly_of(&self, c: &Codeword) -> Poly {
        self.skew.poly(c.0.clone())
    }

    /// `(a_0..a_{n-1}) -> (Theta(lambda a_{n-1}), Theta(a_0), ..., Theta(a_{n-2}))`.
    pub fn constashift(&self, c: &Codeword) -> Codeword {
        let r = self.ring();
        let t = self.theta();
        let n = self.n;
        let mut out = Vec::with_capacity(n);
        out.push(r.apply_auto(t, r.mul(self.lambda, c.0[n - 1])));
        out.extend(c.0[..n - 1].iter().map(|&a| r.apply_auto(t, a)));
        Codeword(out)
    }

    /// Checks that `g` is monic and right-divides `x^n - lambda`, returning
    /// the cofactor `h = (x^n - lambda)/g`.
    pub fn check_divisor(&self, g: &Poly) -> Result<Poly> {
        if !self.skew.is_monic(g) {
            return Err(Error::NotMonic);
        }
        self.skew.right_quotient(&self.modulus, g)
    }

    /// Rows are the coefficient vectors of `x^i g`, `0 <= i < n - deg g`.
    pub fn generator_matrix(&self, g: &Poly) -> Result<Matrix> {
        self.check_divisor(g)?;
        let k = self.n - g.deg_i64() as usize;
        let rows = (0..k)
            .map(|i| {
                let xi = self.skew.monomial(self.ring().one(), i);
                self.codeword(&self.skew.mul(&xi, g)).0
            })
            .collect();
        Ok(Matrix { rows, cols: self.n })
    }

    /// `(n-k) x n` matrix with entry `(r, r+t) = Theta^{r+t}(h_{k-t})`, where
    /// `h = (x^n - lambda)/g` has degree `k`.
    pub fn parity_check_matrix(&self, g: &Poly) -> Result<Matrix> {
        let h = self.check_divisor(g)?;
        let k = h.deg_i64() as usize;
        let rows = (0..self.n - k)
            .map(|r| {
                let mut row = vec![RingElement::ZERO; self.n];
                for t in 0..=k {
                    let coef = h.coeff(k - t).unwrap_or(RingElement::ZERO);
                    row[r + t] = self.skew.theta_pow(coef, (r + t) as i64);
                }
                row
            })
            .collect();
        Ok(Matrix { rows, cols: self.n })
    }

    /// `c` lies in `<g>` iff `c h = 0` in the quotient.
    pub fn member_via_check(&self, c: &Poly, g: &Poly) -> Result<bool> {
        let h = self.check_divisor(g)?;
        Ok(self.reduce(&self.skew.mul(c, &h)).is_zero())
    }

    /// Whether `<g>` is also an ordinary lambda-constacyclic code, i.e. every
    /// coefficient of `g` is fixed by `Theta`.
    pub fn is_classically_constacyclic(&self, g: &Poly) -> Result<bool> {
        self.check_divisor(g)?;
        let r = self.ring();
        Ok(g.coeffs().iter().all(|&c| r.is_fixed(self.theta(), c)))
    }

    /// The smallest left ideal containing `gens`, by closure: starting from
    /// `{0}`, every unprocessed vector `v` extends the set `S` to `S + Rv`
    /// and queues its shift, until nothing new appears.
    pub fn span(&self, gens: &[Poly]) -> Result<CodeSpan> {
        let words: Vec<Codeword> = gens.iter().map(|g| self.codeword(g)).collect();
        self.span_of_words(&words)
    }

    pub fn span_of_words(&self, words: &[Codeword]) -> Result<CodeSpan> {
        Ok(self.span_with_basis(words)?.0)
    }

    /// Like [`CodeContext::span_of_words`], also returning the vectors the
    /// closure actually processed; they generate the span as an `R`-module.
    pub fn span_with_basis(&self, words: &[Codeword]) -> Result<(CodeSpan, Vec<Codeword>)> {
        let total = self.space_size();
        self.ensure_within_cap(total)?;
        let packer = Packer::new(self);
        let n = self.n;
        let ring = self.ring();
        let p = self.field().p();
        let additive = self.additive_generators();

        let mut seen = vec![false; total as usize];
        seen[0] = true;
        let mut flat: Vec<RingElement> = vec![RingElement::ZERO; n];
        let mut queue: Vec<Codeword> = words.to_vec();
        queue.reverse();
        let mut buf = vec![RingElement::ZERO; n];
        let mut basis = Vec::new();
        while let Some(v) = queue.pop() {
            if v.0.len() != n {
                return Err(Error::Precondition(format!(
                    "word of length {} in a length-{n} context",
                    v.0.len()
                )));
            }
            if seen[packer.key(&v.0)] {
                continue;
            }
            // S + Rv is reached one F_p-line at a time: S + F_p(b v) for b
            // running over an additive basis of R.
            for &b in &additive {
                let bv: Vec<RingElement> = v.0.iter().map(|&x| ring.mul(b, x)).collect();
                let current = flat.len() / n;
                for s in 0..current {
                    buf.copy_from_slice(&flat[s * n..(s + 1) * n]);
                    for _ in 1..p {
                        for i in 0..n {
                            buf[i] = ring.add(buf[i], bv[i]);
                        }
                        let key = packer.key(&buf);
                        if !seen[key] {
                            seen[key] = true;
                            flat.extend_from_slice(&buf);
                        }
                    }
                }
            }
            queue.push(self.constashift(&v));
            basis.push(v);
        }
        let mut keys: Vec<usize> = flat.chunks(n).map(|w| packer.key(w)).collect();
        keys.sort_unstable();
        let span = CodeSpan {
            words: keys.into_iter().map(|k| packer.word(k)).collect(),
        };
        Ok((span, basis))
    }

    /// `{e_i, u e_i}` for the power basis `e_i` of the residue field: an
    /// `F_p`-basis of `R`.
    pub fn additive_generators(&self) -> Vec<RingElement> {
        let f = self.field();
        let m = f.m() as usize;
        let mut out = Vec::with_capacity(2 * m);
        for i in 0..m {
            let mut unit = vec![0; i + 1];
            unit[i] = 1;
            let e = f.from_coeffs(&unit).expect("basis vector fits");
            out.push(RingElement::constant(e));
            out.push(RingElement::new(FieldElement::ZERO, e));
        }
        out
    }

    /// Exhaustive check that `span` is an `R`-submodule closed under the shift.
    pub fn is_left_ideal(&self, span: &CodeSpan) -> Result<bool> {
        if span.words.first().is_none_or(|w| !w.is_zero()) {
            return Ok(false);
        }
        let closed = span
            .words
            .iter()
            .all(|w| span.contains(&self.constashift(w)));
        if !closed {
            return Ok(false);
        }
        Ok(&self.span_of_words(&span.words)? == span)
    }

    /// All of `R^n`, in canonical order.
    pub fn all_words(&self) -> Result<Vec<Codeword>> {
        let total = self.space_size();
        self.ensure_within_cap(total)?;
        let packer = Packer::new(self);
        Ok((0..total as usize).map(|k| packer.word(k)).collect())
    }

    pub fn to_json(&self) -> Value {
        let f = self.field();
        serde_json::json!({
            "p": f.p(),
            "m": f.m(),
            "modulus": f.params().modulus(),
            "theta_exp": self.theta().s,
            "beta": f.format(self.theta().beta),
            "theta_order": self.theta_order(),
            "n": self.n,
            "lambda": self.ring().format_elem(self.lambda),
        })
    }

    pub fn describe(&self) -> String {
        let r = self.ring();
        let f = self.field();
        format!(
            "F_{}{} + u F_{}{}, Theta(s={}, beta={}) of order {}, n = {}, lambda = {}",
            f.p(),
            if f.m() > 1 {
                format!("^{}", f.m())
            } else {
                String::new()
            },
            f.p(),
            if f.m() > 1 {
                format!("^{}", f.m())
            } else {
                String::new()
            },
            self.theta().s,
            f.format(self.theta().beta),
            self.theta_order(),
            self.n,
            r.format_elem(self.lambda)
        )
    }
}

/// Ranks words of `R^n` in canonical (lexicographic) order.
struct Packer {
    q: usize,
    base: usize,
    n: usize,
}

impl Packer {
    fn new(ctx: &CodeContext) -> Self {
        let q = ctx.field().order();
        Self {
            q,
            base: q * q,
            n: ctx.n,
        }
    }

    #[inline]
    fn key(&self, w: &[RingElement]) -> usize {
        w.iter().fold(0, |acc, e| {
            acc * self.base + e.a.index() * self.q + e.b.index()
        })
    }

    fn word(&self, mut key: usize) -> Codeword {
        let mut out = vec![RingElement::ZERO; self.n];
        for slot in out.iter_mut().rev() {
            let r = key % self.base;
            key /= self.base;
            *slot = RingElement::new(
                FieldElement::from_index(r / self.q),
                FieldElement::from_index(r % self.q),
            );
        }
        Codeword(out)
    }
}

/// A vector of `R^n`; its polynomial form is `sum c_i x^i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword(pub Vec<RingElement>);

impl Codeword {
    pub fn entries(&self) -> &[RingElement] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }
}

/// A set of codewords kept sorted and deduplicated, so equality of sets is
/// equality of the vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CodeSpan {
    words: Vec<Codeword>,
}

impl CodeSpan {
    pub fn from_words(mut words: Vec<Codeword>) -> Self {
        words.sort();
        words.dedup();
        Self { words }
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn is_subset_of(&self, other: &CodeSpan) -> bool {
        self.words.len() <= other.words.len() && self.words.iter().all(|w| other.contains(w))
    }
}

/// A matrix over `R`, row-major. `cols` is kept explicitly so empty matrices
/// still know their width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: Vec<Vec<RingElement>>,
    pub cols: usize,
}

impl Matrix {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// `v * M^T`, plain dot products (R is commutative).
    pub fn syndrome(&self, ring: &DualNumberRing, v: &[RingElement]) -> Vec<RingElement> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(ring.zero(), |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)))
            })
            .collect()
    }

    pub fn to_json(&self, ring: &DualNumberRing) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    Value::Array(
                        row.iter()
                            .map(|&e| Value::String(ring.format_elem(e)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn format(&self, ring: &DualNumberRing) -> String {
        self.rows
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|&e| ring.format_elem(e)).collect();
                format!("[{}]", cells.join(" "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for CodeContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
