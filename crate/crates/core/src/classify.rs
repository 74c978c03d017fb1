//! Canonical three-type form of left ideals, exhaustive enumeration of all
//! left ideals of a desk-scale quotient ring, and their inclusion lattice.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde_json::{json, Value};

use crate::chainring::{ChainRing, RingElement};
use crate::error::{Error, Result};
use crate::quotcode::{CodeContext, CodeSpan, Codeword};
use crate::skewpoly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealType {
    Li1,
    Li2,
    Li3,
}

impl IdealType {
    pub fn subscript(self) -> u8 {
        match self {
            IdealType::Li1 => 1,
            IdealType::Li2 => 2,
            IdealType::Li3 => 3,
        }
    }
}

impl fmt::Display for IdealType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LI-{}", self.subscript())
    }
}

/// A left ideal in canonical form. `g1`, `f0` and `f1` have residue-field
/// coefficients. The zero ideal is `Principal` with `g = x^n - lambda`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalIdeal {
    /// `<g>`, `g` a monic right divisor of `x^n - lambda`.
    Principal { g: Poly },
    /// `<u g1>`.
    UMultiple { g1: Poly },
    /// `<u g1, f0 + u f1>`.
    TwoGenerator { g1: Poly, f0: Poly, f1: Poly },
}

impl CanonicalIdeal {
    pub fn kind(&self) -> IdealType {
        match self {
            CanonicalIdeal::Principal { .. } => IdealType::Li1,
            CanonicalIdeal::UMultiple { .. } => IdealType::Li2,
            CanonicalIdeal::TwoGenerator { .. } => IdealType::Li3,
        }
    }

    pub fn generators(&self, ctx: &CodeContext) -> Vec<Poly> {
        let sk = ctx.skew();
        match self {
            CanonicalIdeal::Principal { g } => vec![g.clone()],
            CanonicalIdeal::UMultiple { g1 } => vec![sk.u_times(g1)],
            CanonicalIdeal::TwoGenerator { g1, f0, f1 } => {
                vec![sk.u_times(g1), sk.add(f0, &sk.u_times(f1))]
            }
        }
    }

    /// Generator strings as they appear in the lattice figures, e.g.
    /// `["u*(x + 1)"]`, `["u", "x + 2"]`, `["0"]`. Each parses back.
    pub fn labels(&self, ctx: &CodeContext) -> Vec<String> {
        let sk = ctx.skew();
        let u_label = |g1: &Poly| {
            if g1 == &sk.one() {
                "u".to_string()
            } else if g1.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
                format!("u*{}", sk.format(g1))
            } else {
                format!("u*({})", sk.format(g1))
            }
        };
        match self {
            CanonicalIdeal::Principal { g } if g == ctx.modulus() => vec!["0".to_string()],
            CanonicalIdeal::Principal { g } => vec![sk.format(g)],
            CanonicalIdeal::UMultiple { g1 } => vec![u_label(g1)],
            CanonicalIdeal::TwoGenerator { g1, f0, f1 } => {
                vec![u_label(g1), sk.format(&sk.add(f0, &sk.u_times(f1)))]
            }
        }
    }

    /// `<g1, g2>`-style display label.
    pub fn label(&self, ctx: &CodeContext) -> String {
        format!("<{}>", self.labels(ctx).join(", "))
    }

    pub fn is_zero(&self, ctx: &CodeContext) -> bool {
        matches!(self, CanonicalIdeal::Principal { g } if g == ctx.modulus())
    }

    /// Number of codewords, from the degrees of the canonical data.
    pub fn cardinality(&self, ctx: &CodeContext) -> u128 {
        let n = ctx.n() as i64;
        let q = ctx.field().order() as u128;
        let exp = match self {
            CanonicalIdeal::Principal { g } => 2 * (n - g.deg_i64()),
            CanonicalIdeal::UMultiple { g1 } => n - g1.deg_i64(),
            CanonicalIdeal::TwoGenerator { g1, f0, .. } => 2 * n - f0.deg_i64() - g1.deg_i64(),
        };
        q.pow(exp as u32)
    }

    pub fn span(&self, ctx: &CodeContext) -> Result<CodeSpan> {
        ctx.span(&self.generators(ctx))
    }

    pub fn to_json(&self, ctx: &CodeContext) -> Value {
        json!({
            "type": self.kind().to_string(),
            "generators": self.labels(ctx),
            "cardinality": self.cardinality(ctx) as u64,
        })
    }
}

fn word_degree(w: &Codeword) -> Option<usize> {
    w.entries().iter().rposition(|e| !e.is_zero())
}

fn residue_degree(w: &Codeword, part: impl Fn(&RingElement) -> bool) -> Option<usize> {
    w.entries().iter().rposition(part)
}

/// Validates that `span` is a left ideal and extracts its canonical form.
pub fn canonicalize(ctx: &CodeContext, span: &CodeSpan) -> Result<CanonicalIdeal> {
    if !ctx.is_left_ideal(span)? {
        return Err(Error::NotLeftIdeal(
            "not closed under addition, scalar multiples and the shift",
        ));
    }
    canonical_form(ctx, span)
}

/// Canonical form of a span already known to be a left ideal.
pub fn canonical_form(ctx: &CodeContext, span: &CodeSpan) -> Result<CanonicalIdeal> {
    let ring = ctx.ring();
    let sk = ctx.skew();
    let one = ring.one();
    let u = ring.u();

    let mut min_deg: Option<usize> = None;
    let mut min_monic: Option<(usize, &Codeword)> = None;
    let mut min_u: Option<(usize, &Codeword)> = None;
    for w in span.words() {
        let Some(d) = word_degree(w) else { continue };
        if min_deg.is_none_or(|m| d < m) {
            min_deg = Some(d);
        }
        let lead = w.entries()[d];
        if lead == one && min_monic.is_none_or(|(m, _)| d < m) {
            min_monic = Some((d, w));
        }
        if lead == u
            && w.entries().iter().all(|e| e.a.is_zero())
            && min_u.is_none_or(|(m, _)| d < m)
        {
            min_u = Some((d, w));
        }
    }
    let Some(min_deg) = min_deg else {
        return Ok(CanonicalIdeal::Principal {
            g: ctx.modulus().clone(),
        });
    };
    if let Some((d, w)) = min_monic {
        if d == min_deg {
            return Ok(CanonicalIdeal::Principal { g: ctx.poly_of(w) });
        }
    }
    let (g1_deg, uw) = min_u.ok_or(Error::NotLeftIdeal("no u-multiple of minimal degree"))?;
    let g1 = sk.u_part(&ctx.poly_of(uw));
    let Some((f_deg, _)) = min_monic else {
        return Ok(CanonicalIdeal::UMultiple { g1 });
    };
    let f = span
        .words()
        .iter()
        .find(|w| {
            word_degree(w) == Some(f_deg)
                && w.entries()[f_deg] == one
                && residue_degree(w, |e| !e.b.is_zero()).is_none_or(|d| d < g1_deg)
        })
        .ok_or(Error::NotLeftIdeal(
            "no reduced monic member of minimal degree",
        ))?;
    let f = ctx.poly_of(f);
    Ok(CanonicalIdeal::TwoGenerator {
        g1,
        f0: sk.bar_poly(&f),
        f1: sk.u_part(&f),
    })
}

/// All monic polynomials of degree `<= max_deg` that right-divide `target`,
/// by exhaustive trial division, sorted by degree and then coefficients.
pub fn monic_right_divisors(
    ctx: &CodeContext,
    target: &Poly,
    max_deg: usize,
    residue_only: bool,
) -> Result<Vec<Poly>> {
    let ring = ctx.ring();
    let sk = ctx.skew();
    match target.leading() {
        Some(l) if ring.is_unit(l) => {}
        _ => return Err(Error::NonUnitLeading),
    }
    let alphabet: Vec<RingElement> = if residue_only {
        ctx.field().elements().map(RingElement::constant).collect()
    } else {
        ring.elements()
    };
    let max_deg = max_deg.min(target.deg_i64() as usize);
    let size: u128 = (0..=max_deg)
        .map(|d| (alphabet.len() as u128).saturating_pow(d as u32))
        .sum();
    ctx.ensure_within_cap(size)?;

    let mut out = Vec::new();
    for d in 0..=max_deg {
        for lower in tuples(&alphabet, d) {
            let mut coeffs = lower;
            coeffs.push(ring.one());
            let g = sk.poly(coeffs);
            if sk.is_right_divisor(&g, target)? {
                out.push(g);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Every vector of length `len` over `alphabet`.
fn tuples<T: Copy>(alphabet: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

fn span_fingerprint(span: &CodeSpan) -> (usize, u64) {
    let mut h = DefaultHasher::new();
    span.hash(&mut h);
    (span.len(), h.finish())
}

/// Every left ideal of the quotient ring exactly once, in canonical order.
///
/// Candidates come from the three generator shapes (with the divisibility
/// conditions the canonical data must satisfy); each candidate's span is
/// computed by closure, canonicalized, and deduplicated.
pub fn enumerate_ideals(ctx: &CodeContext) -> Result<Vec<CanonicalIdeal>> {
    ctx.ensure_within_cap(ctx.space_size())?;
    let sk = ctx.skew();
    let n = ctx.n();
    let modulus = ctx.modulus();
    let residue_modulus = ctx.residue_modulus();
    let divisors = monic_right_divisors(ctx, &residue_modulus, n, true)?;
    let residues: Vec<RingElement> = ctx.field().elements().map(RingElement::constant).collect();
    let residue_polys = |below: usize| {
        tuples(&residues, below)
            .into_iter()
            .map(|c| sk.poly(c))
            .collect::<Vec<_>>()
    };

    let mut candidates: Vec<Vec<Poly>> = Vec::new();
    for g0 in &divisors {
        let d = g0.deg_i64() as usize;
        for g1 in residue_polys(d) {
            let g = sk.add(g0, &sk.u_times(&g1));
            if sk.is_right_divisor(&g, modulus)? {
                candidates.push(vec![g]);
            }
        }
    }
    for g1 in divisors.iter().filter(|g| (g.deg_i64() as usize) < n) {
        candidates.push(vec![sk.u_times(g1)]);
    }
    let lambda_in_field = ctx.lambda().b.is_zero();
    for f0 in divisors.iter().filter(|f| (f.deg_i64() as usize) < n) {
        let cofactor = if lambda_in_field {
            Some(sk.shift_through_u(&sk.right_quotient(modulus, f0)?))
        } else {
            None
        };
        for g1 in divisors.iter().filter(|g| g.deg_i64() < f0.deg_i64()) {
            if !sk.is_right_divisor(g1, f0)? {
                continue;
            }
            for f1 in residue_polys(g1.deg_i64() as usize) {
                if let Some(c) = &cofactor {
                    if !sk.is_right_divisor(g1, &sk.mul(c, &f1))? {
                        continue;
                    }
                }
                candidates.push(vec![sk.u_times(g1), sk.add(f0, &sk.u_times(&f1))]);
            }
        }
    }

    // Dedup key is the span; the canonical form is only accepted when it
    // maps back to the same span fingerprint.
    let mut by_span: HashMap<(usize, u64), CanonicalIdeal> = HashMap::new();
    let mut by_ideal: BTreeMap<CanonicalIdeal, (usize, u64)> = BTreeMap::new();
    for gens in candidates {
        let span = ctx.span(&gens)?;
        let key = span_fingerprint(&span);
        if by_span.contains_key(&key) {
            continue;
        }
        let ideal = canonical_form(ctx, &span)?;
        if let Some(prev) = by_ideal.get(&ideal) {
            if *prev != key {
                return Err(Error::Precondition(format!(
                    "canonical form {} shared by two different spans",
                    ideal.label(ctx)
                )));
            }
        }
        by_ideal.insert(ideal.clone(), key);
        by_span.insert(key, ideal);
    }
    Ok(by_ideal.into_keys().collect())
}

/// Hasse diagram of a family of ideals under inclusion. Edges `(i, j)` point
/// from the larger ideal `i` to the smaller `j`.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub ideals: Vec<CanonicalIdeal>,
    pub sizes: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

pub fn ideal_lattice(ctx: &CodeContext, ideals: &[CanonicalIdeal]) -> Result<IdealLattice> {
    let k = ideals.len();
    let gen_words: Vec<Vec<Codeword>> = ideals
        .iter()
        .map(|i| i.generators(ctx).iter().map(|g| ctx.codeword(g)).collect())
        .collect();
    let mut sizes = Vec::with_capacity(k);
    let mut contains = vec![vec![false; k]; k];
    for (i, ideal) in ideals.iter().enumerate() {
        let span = ideal.span(ctx)?;
        sizes.push(span.len());
        for (j, words) in gen_words.iter().enumerate() {
            contains[i][j] = words.iter().all(|w| span.contains(w));
        }
    }
    let strict = |i: usize, j: usize| contains[i][j] && sizes[i] != sizes[j];
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if strict(i, j) && !(0..k).any(|m| strict(i, m) && strict(m, j)) {
                edges.push((i, j));
            }
        }
    }
    Ok(IdealLattice {
        ideals: ideals.to_vec(),
        sizes,
        edges,
    })
}

impl IdealLattice {
    pub fn index_of(&self, ideal: &CanonicalIdeal) -> Option<usize> {
        self.ideals.iter().position(|i| i == ideal)
    }

    /// Ideals directly below `i`.
    pub fn covers(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.0 == i)
            .map(|e| e.1)
            .collect()
    }

    /// Ideals directly above `j`.
    pub fn covered_by(&self, j: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.1 == j)
            .map(|e| e.0)
            .collect()
    }

    pub fn to_dot(&self, ctx: &CodeContext) -> String {
        let mut out = String::from("digraph ideals {\n");
        for (i, ideal) in self.ideals.iter().enumerate() {
            out.push_str(&format!(
                "  n{i} [label=\"{}_{}\"];\n",
                ideal.label(ctx),
                ideal.kind().subscript()
            ));
        }
        for (i, j) in &self.edges {
            out.push_str(&format!("  n{i} -> n{j};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, ctx: &CodeContext) -> Value {
        json!({
            "schema": 1,
            "context": ctx.to_json(),
            "ideals": self.ideals.iter().map(|i| i.to_json(ctx)).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn labels(c: &CodeContext, ideals: &[CanonicalIdeal]) -> Vec<String> {
        let mut v: Vec<String> = ideals
            .iter()
            .map(|i| format!("{}_{}", i.label(c), i.kind().subscript()))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn divisors_of_x2_minus_1() {
        let c = ctx(1);
        let res = monic_right_divisors(&c, &c.residue_modulus(), 2, true).unwrap();
        let printed: Vec<String> = res.iter().map(|g| c.skew().format(g)).collect();
        assert_eq!(printed, ["1", "x + 1", "x + 2", "x^2 + 2"]);
        let one = monic_right_divisors(&c, c.modulus(), 0, false).unwrap();
        assert_eq!(one, vec![c.skew().one()]);
    }

    #[test]
    fn skew_degree_one_divisors() {
        let c = ctx(2);
        let res = monic_right_divisors(&c, c.modulus(), 1, false).unwrap();
        let printed: Vec<String> = res[1..].iter().map(|g| c.skew().format(g)).collect();
        assert_eq!(
            printed,
            [
                "x + 1",
                "x + 1 + u",
                "x + 1 + 2*u",
                "x + 2",
                "x + 2 + u",
                "x + 2 + 2*u"
            ]
        );
        let id = ctx(1);
        assert_eq!(
            monic_right_divisors(&id, id.modulus(), 1, false)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn canonicalize_examples() {
        let c = ctx(2);
        let span = c.span(&[p(&c, &[(1, 1), (1, 0)])]).unwrap();
        assert_eq!(
            canonicalize(&c, &span).unwrap(),
            CanonicalIdeal::Principal {
                g: p(&c, &[(1, 1), (1, 0)])
            }
        );
        let span = c.span(&[c.skew().u_poly()]).unwrap();
        assert_eq!(
            canonicalize(&c, &span).unwrap(),
            CanonicalIdeal::UMultiple { g1: c.skew().one() }
        );
        let span = c
            .span(&[c.skew().u_poly(), p(&c, &[(1, 0), (1, 0)])])
            .unwrap();
        assert_eq!(
            canonicalize(&c, &span).unwrap(),
            CanonicalIdeal::TwoGenerator {
                g1: c.skew().one(),
                f0: p(&c, &[(1, 0), (1, 0)]),
                f1: c.skew().zero(),
            }
        );
        let zero = c.span(&[]).unwrap();
        assert!(canonicalize(&c, &zero).unwrap().is_zero(&c));
    }

    #[test]
    fn canonicalize_rejects_non_ideals() {
        let c = ctx(2);
        let one = c.ring().one();
        let bad = CodeSpan::from_words(vec![
            Codeword(vec![RingElement::ZERO; 2]),
            Codeword(vec![one, RingElement::ZERO]),
        ]);
        assert!(matches!(
            canonicalize(&c, &bad),
            Err(Error::NotLeftIdeal(_))
        ));
    }

    #[test]
    fn commutative_ideals() {
        let c = ctx(1);
        let ideals = enumerate_ideals(&c).unwrap();
        assert_eq!(
            labels(&c, &ideals),
            [
                "<0>_1",
                "<1>_1",
                "<u*(x + 1)>_2",
                "<u*(x + 2)>_2",
                "<u, x + 1>_3",
                "<u, x + 2>_3",
                "<u>_2",
                "<x + 1>_1",
                "<x + 2>_1",
            ]
        );
    }

    #[test]
    fn skew_ideals_and_lattice() {
        let c = ctx(2);
        let ideals = enumerate_ideals(&c).unwrap();
        assert_eq!(ideals.len(), 13);
        let lat = ideal_lattice(&c, &ideals).unwrap();
        let find = |s: &str| {
            lat.ideals
                .iter()
                .position(|i| i.label(&c) == s)
                .unwrap_or_else(|| panic!("{s} missing"))
        };
        let names = |idx: Vec<usize>| {
            let mut v: Vec<String> = idx.into_iter().map(|i| lat.ideals[i].label(&c)).collect();
            v.sort();
            v
        };
        assert_eq!(names(lat.covers(find("<1>"))), ["<u, x + 1>", "<u, x + 2>"]);
        assert_eq!(
            names(lat.covers(find("<u, x + 1>"))),
            ["<u>", "<x + 1 + 2*u>", "<x + 1 + u>", "<x + 1>"]
        );
        assert_eq!(
            names(lat.covered_by(find("<0>"))),
            ["<u*(x + 1)>", "<u*(x + 2)>"]
        );
        for ideal in &ideals {
            let span = ideal.span(&c).unwrap();
            assert_eq!(span.len() as u128, ideal.cardinality(&c));
            assert_eq!(&canonicalize(&c, &span).unwrap(), ideal);
        }
        let dot = lat.to_dot(&c);
        assert!(dot.contains("[label=\"<u, x + 1>_3\"]"));
        assert_eq!(dot.matches("->").count(), lat.edges.len());
        assert_eq!(lat.to_json(&c)["schema"], 1);
    }
}
