//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! `SparsePoly` stores a finite map from exponent vectors to nonzero `BigInt`
//! coefficients. The representation is canonical: no zero coefficient is ever
//! stored, so two polynomials are equal iff their term maps are equal.
//! Multiplication supports an optional per-variable degree cap, which is what
//! keeps the direct coefficient-extraction count feasible: every monomial that
//! exceeds the cap in any coordinate can never contribute to the target
//! coefficient and is discarded on the fly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

/// Exponent vector of a monomial in `d` variables; also doubles as a tensor
/// shape elsewhere in the crate. Entries are nonnegative; ordering is
/// lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    /// Wrap an exponent vector. The ambient dimension must be at least 1.
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "MultiIndex needs dimension >= 1");
        MultiIndex(exponents)
    }

    /// The all-zero index in `d` variables.
    pub fn zero(d: usize) -> Self {
        Self::new(vec![0; d])
    }

    /// The index with a single 1 in coordinate `i`.
    pub fn unit(d: usize, i: usize) -> Self {
        let mut e = vec![0; d];
        e[i] = 1;
        Self::new(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // dimension >= 1 by construction
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    /// Sum of all entries (total degree of the monomial).
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, or `None` if any coordinate would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(MultiIndex)
    }

    /// True if some coordinate exceeds the cap.
    pub fn exceeds(&self, cap: &MultiIndex) -> bool {
        debug_assert_eq!(self.len(), cap.len());
        self.0.iter().zip(&cap.0).any(|(a, b)| a > b)
    }

    /// Copy with entries sorted ascending. Used by the symmetric count table.
    pub fn sorted(&self) -> MultiIndex {
        let mut e = self.0.clone();
        e.sort_unstable();
        MultiIndex(e)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        Self::new(v)
    }
}

impl From<&[u32]> for MultiIndex {
    fn from(v: &[u32]) -> Self {
        Self::new(v.to_vec())
    }
}

/// Sparse polynomial in `dim` variables with `BigInt` coefficients.
///
/// Terms are kept in a `BTreeMap` so iteration, text output, and equality all
/// see the same lexicographic monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    dim: usize,
    terms: BTreeMap<MultiIndex, BigInt>,
}

impl SparsePoly {
    /// The zero polynomial in `dim` variables.
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "SparsePoly needs dimension >= 1");
        SparsePoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(dim: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(MultiIndex::zero(dim), c.into());
        p
    }

    /// The single variable x_i.
    pub fn variable(dim: usize, i: usize) -> Self {
        Self::monomial(dim, MultiIndex::unit(dim, i), 1)
    }

    /// The monomial c · x^idx.
    pub fn monomial(dim: usize, idx: MultiIndex, c: impl Into<BigInt>) -> Self {
        assert_eq!(idx.len(), dim, "monomial index has wrong dimension");
        let mut p = Self::zero(dim);
        p.add_term(idx, c.into());
        p
    }

    /// Build from (exponents, coefficient) pairs; like terms are combined and
    /// zeros dropped.
    pub fn from_terms<I, C>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            assert_eq!(e.len(), dim, "term index has wrong dimension");
            p.add_term(MultiIndex::new(e), c.into());
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in lexicographic monomial order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&MultiIndex, &BigInt)> {
        self.terms.iter()
    }

    /// The stored coefficient at `idx`, or 0 when the monomial is absent.
    pub fn coefficient(&self, idx: &MultiIndex) -> BigInt {
        assert_eq!(idx.len(), self.dim, "coefficient query has wrong dimension");
        self.terms.get(idx).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, idx: MultiIndex, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Termwise sum.
    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.dim, other.dim, "dimension mismatch in add");
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn negate(&self) -> SparsePoly {
        SparsePoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.negate())
    }

    /// Product, discarding every monomial whose exponent exceeds `cap` in any
    /// coordinate. With `cap = None` this is the exact product.
    ///
    /// Dropping over-cap monomials mid-product is sound for coefficient
    /// extraction at or below the cap: exponents only grow under further
    /// multiplication.
    pub fn mul_truncated(&self, other: &SparsePoly, cap: Option<&MultiIndex>) -> SparsePoly {
        assert_eq!(self.dim, other.dim, "dimension mismatch in mul");
        if let Some(cap) = cap {
            assert_eq!(cap.len(), self.dim, "cap has wrong dimension");
        }
        let mut out = SparsePoly::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.plus(mb);
                if cap.is_some_and(|cap| m.exceeds(cap)) {
                    continue;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// Keep only the monomials that do not exceed `cap`.
    pub fn truncate(&self, cap: &MultiIndex) -> SparsePoly {
        SparsePoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.exceeds(cap))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

/// The elementary symmetric polynomial e_i(x_1, …, x_d): the sum of all
/// C(d, i) squarefree monomials of degree `i`, with e_0 = 1.
///
/// Panics for `i > d`; nothing in this crate ever evaluates out of range, so
/// an out-of-range request is an index bug worth failing loudly on.
pub fn elementary_symmetric(d: usize, i: usize) -> SparsePoly {
    assert!(i <= d, "elementary_symmetric degree {i} exceeds dimension {d}");
    if i == 0 {
        return SparsePoly::constant(d, 1);
    }
    SparsePoly::from_terms(
        d,
        (0..d).combinations(i).map(|vars| {
            let mut e = vec![0u32; d];
            for v in vars {
                e[v] = 1;
            }
            (e, 1)
        }),
    )
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: Self) -> SparsePoly {
        SparsePoly::add(self, rhs)
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: Self) -> SparsePoly {
        SparsePoly::sub(self, rhs)
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: Self) -> SparsePoly {
        self.mul_truncated(rhs, None)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.negate()
    }
}

/// Text form: one term per line, "coefficient e_1 e_2 … e_d", in
/// lexicographic monomial order. The zero polynomial prints nothing.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in &self.terms {
            write!(f, "{c}")?;
            for e in m.iter() {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly(dim={})\n{}", self.dim, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(dim: usize, terms: &[(&[u32], i64)]) -> SparsePoly {
        SparsePoly::from_terms(dim, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    #[test]
    fn add_cancels() {
        // (x1 + x2) + (x1 - x2) = 2 x1
        let a = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(&a + &b, p(2, &[(&[1, 0], 2)]));
    }

    #[test]
    fn add_identity() {
        let a = p(3, &[(&[1, 2, 0], 5), (&[0, 0, 1], -3)]);
        assert_eq!(&a + &SparsePoly::zero(3), a);
    }

    #[test]
    fn add_constants() {
        // (1 - x1) + (1 - x2) = 2 - x1 - x2
        let a = p(2, &[(&[0, 0], 1), (&[1, 0], -1)]);
        let b = p(2, &[(&[0, 0], 1), (&[0, 1], -1)]);
        assert_eq!(&a + &b, p(2, &[(&[0, 0], 2), (&[1, 0], -1), (&[0, 1], -1)]));
    }

    #[test]
    fn mul_truncation_drops_high_powers() {
        // (1 + x)^2 capped at degree 1 = 1 + 2x
        let a = p(1, &[(&[0], 1), (&[1], 1)]);
        let cap = MultiIndex::new(vec![1]);
        assert_eq!(
            a.mul_truncated(&a, Some(&cap)),
            p(1, &[(&[0], 1), (&[1], 2)])
        );
    }

    #[test]
    fn mul_exact() {
        // (x1 + x2)(x1 - x2) = x1^2 - x2^2
        let a = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(&a * &b, p(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    // For a 2x2x2 tensor the telescoped factor per axis is t_i + that_i where
    // that_i is the sum of the other variables; the coefficient of t1 t2 t3 in
    // the three-factor product is the count 6.
    #[test]
    fn telescoped_cube_product_coefficient() {
        let d = 3;
        let cap = MultiIndex::new(vec![1, 1, 1]);
        let mut prod = SparsePoly::constant(d, 1);
        for i in 0..d {
            let mut factor = SparsePoly::variable(d, i);
            for j in 0..d {
                if j != i {
                    factor = &factor + &SparsePoly::variable(d, j);
                }
            }
            prod = prod.mul_truncated(&factor, Some(&cap));
        }
        assert_eq!(prod.coefficient(&cap), BigInt::from(6));
    }

    #[test]
    fn elementary_symmetric_small() {
        assert_eq!(
            elementary_symmetric(3, 1),
            p(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)])
        );
        assert_eq!(elementary_symmetric(3, 3), p(3, &[(&[1, 1, 1], 1)]));
        let e2 = elementary_symmetric(3, 2);
        assert_eq!(e2.num_terms(), 3);
        assert_eq!(
            e2,
            p(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)])
        );
        assert_eq!(elementary_symmetric(4, 0), SparsePoly::constant(4, 1));
    }

    #[test]
    #[should_panic(expected = "exceeds dimension")]
    fn elementary_symmetric_out_of_range() {
        elementary_symmetric(2, 3);
    }

    #[test]
    fn coefficient_lookup() {
        let q = p(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        assert_eq!(q.coefficient(&MultiIndex::new(vec![2, 0])), BigInt::from(1));
        assert_eq!(q.coefficient(&MultiIndex::new(vec![1, 1])), BigInt::zero());
        let e2 = elementary_symmetric(3, 2);
        assert_eq!(
            e2.coefficient(&MultiIndex::new(vec![1, 1, 0])),
            BigInt::from(1)
        );
    }

    // Newton identity spot check: e1^2 - 2 e2 = sum of x_i^2.
    #[test]
    fn newton_identity() {
        for d in 1..=4 {
            let e1 = elementary_symmetric(d, 1);
            let e2 = if d >= 2 {
                elementary_symmetric(d, 2)
            } else {
                SparsePoly::zero(d)
            };
            let two_e2 = &e2 + &e2;
            let lhs = &(&e1 * &e1) - &two_e2;
            let rhs = SparsePoly::from_terms(
                d,
                (0..d).map(|i| {
                    let mut e = vec![0u32; d];
                    e[i] = 2;
                    (e, 1)
                }),
            );
            assert_eq!(lhs, rhs, "d = {d}");
        }
    }

    #[test]
    fn display_is_lexicographic() {
        let q = p(2, &[(&[0, 1], -7), (&[1, 0], 3), (&[0, 0], 1)]);
        assert_eq!(q.to_string(), "1 0 0\n-7 0 1\n3 1 0\n");
    }
}
