//! Arithmetic in GF(2^m) backed by exp/log tables, and predicates on
//! functions GF(q) -> GF(q) used to recognise oval polynomials.
//!
//! Elements are integers in `[0, q)` read as coefficient vectors over GF(2),
//! bit `i` holding the coefficient of `x^i`. The canonical element order is
//! `α_0 = 0, α_1 = 1, α_2, ..., α_{q-1}` by increasing integer value, which
//! for this encoding is simply `0..q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::FieldError;

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// Default modulus for each supported extension degree, indexed by `m`.
const DEFAULT_MODULI: [u32; 17] = [
    0, 0, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B,
];

/// The documented default modulus for `m`, if `m` is in range.
pub fn default_modulus(m: u32) -> Option<u32> {
    (MIN_DEGREE..=MAX_DEGREE)
        .contains(&m)
        .then(|| DEFAULT_MODULI[m as usize])
}

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Raw bits; callers guarantee `v < q`.
    #[inline]
    pub(crate) fn from_bits(v: u16) -> FieldElement {
        FieldElement(v)
    }

    #[inline]
    pub fn value(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Characteristic-2 addition. Needs no context.
    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ other.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Degree of a GF(2) polynomial encoded as bits; `None` for the zero polynomial.
fn poly_degree(p: u32) -> Option<u32> {
    (p != 0).then(|| 31 - p.leading_zeros())
}

/// Remainder of carry-less division `a mod b`.
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b).expect("division by zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Carry-less product of two elements reduced by `modulus` of degree `m`.
fn poly_mulmod(mut a: u32, mut b: u32, modulus: u32, m: u32) -> u32 {
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 == 1 {
            a ^= modulus;
        }
    }
    acc
}

/// Renders a GF(2) polynomial as `x^3+x+1`.
pub fn poly_to_string(p: u32) -> String {
    if p == 0 {
        return "0".into();
    }
    let mut terms = Vec::new();
    for i in (0..32).rev() {
        if p >> i & 1 == 1 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            });
        }
    }
    terms.join("+")
}

/// Finds a proper factor of `modulus` by trial of every polynomial of
/// degree `1..=deg/2`, roots (x and x+1) first.
fn find_factor(modulus: u32) -> Option<u32> {
    let deg = poly_degree(modulus)?;
    if modulus & 1 == 0 {
        return Some(0b10);
    }
    if modulus.count_ones().is_multiple_of(2) {
        return Some(0b11);
    }
    for d in 2..=deg / 2 {
        for candidate in (1u32 << d)..(1u32 << (d + 1)) {
            if poly_rem(modulus, candidate) == 0 {
                return Some(candidate);
            }
        }
    }
    None
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// GF(2^m) with a verified irreducible modulus and a primitive element.
///
/// Immutable after construction; share it freely (the code types hold it
/// behind an `Arc`).
#[derive(Clone)]
pub struct FieldContext {
    m: u32,
    modulus: u32,
    q: u32,
    generator: FieldElement,
    // exp is doubled so that exp[log a + log b] needs no reduction.
    exp: Vec<u16>,
    log: Vec<u16>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("m", &self.m)
            .field("modulus", &poly_to_string(self.modulus))
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldContext {}

impl FieldContext {
    /// Builds GF(2^m). Without `modulus` the documented default for `m` is used.
    pub fn new(m: u32, modulus: Option<u32>) -> Result<Self, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(FieldError::DegreeOutOfRange(m));
        }
        let modulus = modulus.unwrap_or(DEFAULT_MODULI[m as usize]);
        match poly_degree(modulus) {
            Some(d) if d == m => {}
            found => {
                return Err(FieldError::ModulusDegree {
                    expected: m,
                    found: found.map_or(-1, |d| d as i64),
                })
            }
        }
        if let Some(factor) = find_factor(modulus) {
            return Err(FieldError::Reducible { modulus, factor });
        }

        let q = 1u32 << m;
        let order = q - 1;
        let pow_slow = |base: u32, mut e: u32| {
            let (mut acc, mut b) = (1u32, base);
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mulmod(acc, b, modulus, m);
                }
                b = poly_mulmod(b, b, modulus, m);
                e >>= 1;
            }
            acc
        };
        let factors = prime_factors(order);
        let generator = (2..q)
            .find(|&g| factors.iter().all(|&p| pow_slow(g, order / p) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u16; 2 * order as usize];
        let mut log = vec![0u16; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x as u16;
            log[x as usize] = i as u16;
            x = poly_mulmod(x, generator, modulus, m);
        }
        debug_assert_eq!(x, 1);
        for i in order..2 * order {
            exp[i as usize] = exp[(i - order) as usize];
        }

        Ok(FieldContext {
            m,
            modulus,
            q,
            generator: FieldElement(generator as u16),
            exp,
            log,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if value < self.q {
            Ok(FieldElement(value as u16))
        } else {
            Err(FieldError::ElementOutOfRange { value, q: self.q })
        }
    }

    /// All elements in canonical order `α_0 = 0, α_1 = 1, α_2, ...`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(|v| FieldElement(v as u16))
    }

    /// The nonzero elements `α_1, ..., α_{q-1}`.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(|v| FieldElement(v as u16))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a.add(b)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let la = self.log[a.0 as usize] as usize;
        let lb = self.log[b.0 as usize] as usize;
        FieldElement(self.exp[la + lb])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let order = (self.q - 1) as usize;
        let la = self.log[a.0 as usize] as usize;
        Ok(FieldElement(self.exp[(order - la) % order]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let order = (self.q - 1) as u64;
        let la = self.log[a.0 as usize] as u64;
        FieldElement(self.exp[((la * (e % order)) % order) as usize])
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// Discrete log base the table generator; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize] as u32)
    }

    pub fn exp(&self, e: u32) -> FieldElement {
        FieldElement(self.exp[(e % (self.q - 1)) as usize])
    }

    /// Product computed the long way (carry-less multiply, reduce). Used to
    /// check the tables.
    pub fn mul_by_reduction(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(poly_mulmod(a.0 as u32, b.0 as u32, self.modulus, self.m) as u16)
    }
}

/// A total map GF(q) -> GF(q) stored as its value table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldFunction {
    table: Vec<FieldElement>,
}

impl FieldFunction {
    pub fn from_fn(ctx: &FieldContext, f: impl Fn(FieldElement) -> FieldElement) -> Self {
        FieldFunction {
            table: ctx.elements().map(f).collect(),
        }
    }

    pub fn from_table(ctx: &FieldContext, table: Vec<FieldElement>) -> Result<Self, FieldError> {
        if table.len() != ctx.q() as usize {
            return Err(FieldError::TableLength {
                len: table.len(),
                q: ctx.q(),
            });
        }
        if let Some(bad) = table.iter().find(|v| v.value() as u32 >= ctx.q()) {
            return Err(FieldError::ElementOutOfRange {
                value: bad.value() as u32,
                q: ctx.q(),
            });
        }
        Ok(FieldFunction { table })
    }

    /// The monomial `x^e`.
    pub fn monomial(ctx: &FieldContext, e: u64) -> Self {
        Self::from_fn(ctx, |x| ctx.pow(x, e))
    }

    #[inline]
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        self.table[x.value() as usize]
    }

    pub fn table(&self) -> &[FieldElement] {
        &self.table
    }

    fn preimage_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.table.len()];
        for v in &self.table {
            counts[v.value() as usize] += 1;
        }
        counts
    }

    pub fn is_permutation(&self) -> bool {
        self.preimage_counts().iter().all(|&c| c == 1)
    }

    /// Every attained value has exactly two preimages.
    pub fn is_two_to_one(&self) -> bool {
        self.preimage_counts().iter().all(|&c| c == 0 || c == 2)
    }

    /// `f(0) = 0`, `f` permutes GF(q), and `f(x) + ux` is 2-to-1 for every
    /// nonzero `u`. The degree bound `deg f < q` is not checked since a
    /// value table has no canonical degree.
    pub fn is_oval_polynomial(&self, ctx: &FieldContext) -> bool {
        if !self.eval(FieldElement::ZERO).is_zero() || !self.is_permutation() {
            return false;
        }
        ctx.nonzero_elements().all(|u| {
            FieldFunction::from_fn(ctx, |x| self.eval(x).add(ctx.mul(u, x))).is_two_to_one()
        })
    }

    /// `f` is a permutation and the slopes `(f(x)+f(y))/(x+y)` through any
    /// fixed `x` are pairwise distinct.
    pub fn satisfies_slope_criterion(&self, ctx: &FieldContext) -> bool {
        if !self.is_permutation() {
            return false;
        }
        let mut seen = vec![u32::MAX; ctx.q() as usize];
        for x in ctx.elements() {
            let fx = self.eval(x);
            for y in ctx.elements().filter(|&y| y != x) {
                let slope = ctx.div(fx.add(self.eval(y)), x.add(y)).expect("x != y");
                let slot = &mut seen[slope.value() as usize];
                if *slot == x.value() as u32 {
                    return false;
                }
                *slot = x.value() as u32;
            }
        }
        true
    }

    /// Whether `f(x) + x + 1 = 0` has a solution in GF(q).
    pub fn has_root_f_plus_x_plus_1(&self) -> bool {
        self.table
            .iter()
            .enumerate()
            .any(|(x, fx)| fx.value() ^ x as u16 ^ 1 == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(m: u32) -> FieldContext {
        FieldContext::new(m, None).unwrap()
    }

    #[test]
    fn defaults_for_small_degrees() {
        let f3 = gf(3);
        assert_eq!(f3.q(), 8);
        assert_eq!(f3.modulus(), 0xB);
        assert_eq!(poly_to_string(f3.modulus()), "x^3+x+1");
        let f2 = gf(2);
        assert_eq!(f2.q(), 4);
        assert_eq!(poly_to_string(f2.modulus()), "x^2+x+1");
    }

    #[test]
    fn every_default_modulus_is_accepted() {
        for m in MIN_DEGREE..=MAX_DEGREE {
            let ctx = gf(m);
            let order = ctx.q() - 1;
            assert_eq!(ctx.pow(ctx.generator(), order as u64), FieldElement::ONE);
            for x in ctx.nonzero_elements() {
                assert_eq!(ctx.exp(ctx.log(x).unwrap()), x);
            }
        }
    }

    #[test]
    fn reducible_modulus_reports_root_one() {
        let err = FieldContext::new(3, Some(0b1111)).unwrap_err();
        assert_eq!(err.to_string(), "reducible: root x=1");
        let err = FieldContext::new(4, Some(0b10101)).unwrap_err();
        // x^4+x^2+1 = (x^2+x+1)^2
        assert_eq!(err.to_string(), "reducible: factor x^2+x+1");
    }

    #[test]
    fn degree_checks() {
        assert!(matches!(
            FieldContext::new(1, None),
            Err(FieldError::DegreeOutOfRange(1))
        ));
        assert!(matches!(
            FieldContext::new(17, None),
            Err(FieldError::DegreeOutOfRange(17))
        ));
        assert!(matches!(
            FieldContext::new(3, Some(0x13)),
            Err(FieldError::ModulusDegree { .. })
        ));
    }

    #[test]
    fn non_primitive_modulus_still_gets_a_generator() {
        // x^4+x^3+x^2+x+1 is irreducible but x has order 5.
        let ctx = FieldContext::new(4, Some(0x1F)).unwrap();
        assert_ne!(ctx.generator().value(), 2);
        for a in ctx.elements() {
            for b in ctx.elements() {
                assert_eq!(ctx.mul(a, b), ctx.mul_by_reduction(a, b));
            }
        }
    }

    #[test]
    fn gf8_arithmetic() {
        let ctx = gf(3);
        let x = ctx.element(2).unwrap();
        let x2 = ctx.element(4).unwrap();
        assert_eq!(ctx.mul(x, x2).value(), 3);
        assert_eq!(ctx.inv(FieldElement::ONE).unwrap(), FieldElement::ONE);
        assert!(matches!(
            ctx.inv(FieldElement::ZERO),
            Err(FieldError::ZeroInverse)
        ));
        for a in ctx.elements() {
            assert!(ctx.add(a, a).is_zero());
        }
        assert!(ctx.element(8).is_err());
    }

    #[test]
    fn permutation_examples() {
        let g8 = gf(3);
        let g4 = gf(2);
        assert!(FieldFunction::monomial(&g8, 2).is_permutation());
        // gcd(3, 7) = 1, so cubing permutes GF(8); on GF(4) gcd(3, 3) = 3.
        assert!(FieldFunction::monomial(&g8, 3).is_permutation());
        assert!(!FieldFunction::monomial(&g4, 3).is_permutation());
        assert!(FieldFunction::monomial(&g4, 1).is_permutation());
    }

    #[test]
    fn two_to_one_examples() {
        let g8 = gf(3);
        let g4 = gf(2);
        let f = FieldFunction::from_fn(&g8, |x| g8.square(x).add(x));
        assert!(f.is_two_to_one());
        assert!(!FieldFunction::monomial(&g8, 1).is_two_to_one());
        assert!(!FieldFunction::from_fn(&g4, |_| FieldElement::ZERO).is_two_to_one());
    }

    #[test]
    fn oval_examples() {
        let g8 = gf(3);
        let g4 = gf(2);
        assert!(FieldFunction::monomial(&g8, 2).is_oval_polynomial(&g8));
        assert!(!FieldFunction::monomial(&g8, 1).is_oval_polynomial(&g8));
        assert!(FieldFunction::monomial(&g4, 2).is_oval_polynomial(&g4));
    }

    #[test]
    fn root_examples() {
        let g8 = gf(3);
        let g4 = gf(2);
        assert!(!FieldFunction::monomial(&g8, 2).has_root_f_plus_x_plus_1());
        assert!(FieldFunction::monomial(&g4, 2).has_root_f_plus_x_plus_1());
        // f(x) = x + 1 makes f(x) + x + 1 vanish everywhere; f(x) = x leaves the constant 1
        let f = FieldFunction::from_fn(&g8, |x| x.add(FieldElement::ONE));
        assert!(f.has_root_f_plus_x_plus_1());
        assert!(!FieldFunction::monomial(&g8, 1).has_root_f_plus_x_plus_1());
    }

    #[test]
    fn function_table_length_is_checked() {
        let g4 = gf(2);
        assert!(FieldFunction::from_table(&g4, vec![FieldElement::ZERO; 3]).is_err());
    }
}
