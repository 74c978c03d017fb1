//! Prime fields and their extensions `F_{p^m}`, table driven.
//!
//! Elements are stored as a packed index into the field's tables. The
//! packing puts the constant coefficient in the most significant digit, so
//! the derived ordering on [`FieldElement`] is lexicographic on the
//! coefficient vector `(c0, c1, ..., c_{m-1})`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 256;

/// Built-in default moduli, coefficients listed from the constant term up.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 1, &[0, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 1, &[0, 1]),
    (3, 2, &[1, 0, 1]),
    (5, 1, &[0, 1]),
    (7, 1, &[0, 1]),
];

/// Lookup table from `(p, m)` to a monic irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusTable {
    entries: Vec<(u32, u32, Vec<u32>)>,
}

impl Default for ModulusTable {
    fn default() -> Self {
        Self {
            entries: DEFAULT_MODULI
                .iter()
                .map(|&(p, m, c)| (p, m, c.to_vec()))
                .collect(),
        }
    }
}

impl ModulusTable {
    pub fn get(&self, p: u32, m: u32) -> Option<&[u32]> {
        self.entries
            .iter()
            .find(|(ep, em, _)| *ep == p && *em == m)
            .map(|(_, _, c)| c.as_slice())
    }

    /// Replaces (or adds) the modulus for `(p, m)`. No validation happens
    /// here; it is deferred to [`FieldParams::new`].
    pub fn set(&mut self, p: u32, m: u32, modulus: Vec<u32>) {
        match self
            .entries
            .iter_mut()
            .find(|(ep, em, _)| *ep == p && *em == m)
        {
            Some(entry) => entry.2 = modulus,
            None => self.entries.push((p, m, modulus)),
        }
    }

    pub fn params(&self, p: u32, m: u32) -> Result<FieldParams> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus = self.get(p, m).ok_or(Error::NoDefaultModulus { p, m })?;
        FieldParams::new(p, m, modulus.to_vec())
    }
}

/// Validated `(p, m, modulus)` triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldParams {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
}

impl FieldParams {
    /// Checks that `p` is prime and that `modulus` is monic of degree `m` and
    /// irreducible over `F_p`.
    pub fn new(p: u32, m: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus(
                "extension degree must be at least 1".into(),
            ));
        }
        let order = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if order > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(order));
        }
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients for degree {m}, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!(
                "coefficients must lie in [0, {p})"
            )));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus(modulus, p));
        }
        Ok(Self { p, m, modulus })
    }

    /// Parameters from the built-in table.
    pub fn default_for(p: u32, m: u32) -> Result<Self> {
        ModulusTable::default().params(p, m)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.m)
    }
}

/// An element of `F_{p^m}`; only meaningful together with its [`GaloisField`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Inverse of [`FieldElement::index`]; the result must be checked
    /// against a field before use.
    pub fn from_index(index: usize) -> Self {
        FieldElement(index as u16)
    }
}

/// The field `F_{p^m}` with precomputed operation tables.
#[derive(Clone)]
pub struct GaloisField {
    params: FieldParams,
    q: usize,
    one: FieldElement,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    // frob[s][a] = a^(p^s)
    frob: Vec<Vec<u16>>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.params.p)
            .field("m", &self.params.m)
            .field("modulus", &self.params.modulus)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    pub fn new(params: FieldParams) -> Self {
        let q = params.order();
        let p = params.p;
        let m = params.m as usize;
        let digits: Vec<Vec<u32>> = (0..q).map(|i| unpack(i, p, m)).collect();

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u32> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = pack(&sum, p) as u16;
                let prod = poly_mul_mod(&digits[a], &digits[b], &params.modulus, p);
                mul[a * q + b] = pack(&prod, p) as u16;
            }
        }
        let neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits[a].iter().map(|&x| (p - x) % p).collect();
                pack(&d, p) as u16
            })
            .collect();

        let mut one_digits = vec![0; m];
        one_digits[0] = 1;
        let one = pack(&one_digits, p) as u16;

        let mut inv = vec![0u16; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == one)
                .expect("every nonzero element of a field is invertible")
                as u16;
        }

        let pow = |a: u16, e: u64| -> u16 {
            let mut acc = one;
            let mut base = a;
            let mut e = e;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul[acc as usize * q + base as usize];
                }
                base = mul[base as usize * q + base as usize];
                e >>= 1;
            }
            acc
        };
        let frob = (0..m)
            .map(|s| {
                let e = (p as u64).pow(s as u32);
                (0..q).map(|a| pow(a as u16, e)).collect()
            })
            .collect();

        Self {
            params,
            q,
            one: FieldElement(one),
            add,
            mul,
            neg,
            inv,
            frob,
        }
    }

    /// Shortcut for the field built from the default modulus table.
    pub fn default_for(p: u32, m: u32) -> Result<Self> {
        Ok(Self::new(FieldParams::default_for(p, m)?))
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn p(&self) -> u32 {
        self.params.p
    }

    pub fn m(&self) -> u32 {
        self.params.m
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        self.one
    }

    pub fn is_prime_field(&self) -> bool {
        self.params.m == 1
    }

    /// Fails with [`Error::ForeignElement`] when `a` cannot belong to this field.
    pub fn check(&self, a: FieldElement) -> Result<FieldElement> {
        if a.index() < self.q {
            Ok(a)
        } else {
            Err(Error::ForeignElement)
        }
    }

    /// Element with the given coefficients (constant term first), each
    /// reduced mod p. Missing trailing coefficients are zero.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        let m = self.params.m as usize;
        if coeffs.len() > m {
            return Err(Error::InvalidModulus(format!(
                "element has {} coefficients but the field has degree {m}",
                coeffs.len()
            )));
        }
        let p = self.params.p as i64;
        let mut digits = vec![0u32; m];
        for (d, &c) in digits.iter_mut().zip(coeffs) {
            *d = c.rem_euclid(p) as u32;
        }
        Ok(FieldElement(pack(&digits, self.params.p) as u16))
    }

    /// The image of the integer `k` under `Z -> F_p -> F_{p^m}`.
    pub fn from_int(&self, k: i64) -> FieldElement {
        self.from_coeffs(&[k])
            .expect("a single coefficient always fits")
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        unpack(a.index(), self.params.p, self.params.m as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| FieldElement(i as u16))
    }

    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.elements().filter(|a| !a.is_zero())
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.index() * self.q + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.index() * self.q + b.index()])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(FieldElement(self.inv[a.index()]))
        }
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        let mut acc = self.one;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^s)`, with `s` taken mod m (negative exponents allowed).
    #[inline]
    pub fn frobenius(&self, a: FieldElement, s: i64) -> FieldElement {
        let s = s.rem_euclid(self.params.m as i64) as usize;
        FieldElement(self.frob[s][a.index()])
    }

    /// Prime fields print as integers, extensions as `[c0,c1,...]`.
    pub fn format(&self, a: FieldElement) -> String {
        let c = self.coeffs(a);
        if self.is_prime_field() {
            c[0].to_string()
        } else {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            format!("[{}]", parts.join(","))
        }
    }
}

fn pack(digits: &[u32], p: u32) -> usize {
    digits
        .iter()
        .fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

fn unpack(mut index: usize, p: u32, m: usize) -> Vec<u32> {
    let mut digits = vec![0u32; m];
    for d in digits.iter_mut().rev() {
        *d = (index % p as usize) as u32;
        index /= p as usize;
    }
    digits
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    // modulus is monic: t^m = -(c_0 + ... + c_{m-1} t^{m-1})
    for k in (m..prod.len()).rev() {
        let lead = prod[k];
        if lead == 0 {
            continue;
        }
        prod[k] = 0;
        for (j, &c) in modulus[..m].iter().enumerate() {
            let idx = k - m + j;
            prod[idx] = (prod[idx] + (p as u64 - lead) * c as u64) % p as u64;
        }
    }
    prod.truncate(m);
    prod.resize(m, 0);
    prod.into_iter().map(|c| c as u32).collect()
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Remainder of `f` modulo monic `g` over F_p; both low-to-high.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (j, &c) in g.iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - lead) * c as u64) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Exhaustive trial division by every monic polynomial of degree 1..=m/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        let count = (p as usize).pow(d as u32);
        for idx in 0..count {
            let mut g = unpack(idx, p, d);
            g.reverse();
            g.push(1);
            if poly_rem(modulus, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
