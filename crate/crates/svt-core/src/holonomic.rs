//! Homogeneous linear recurrences with polynomial coefficients (P-recursions):
//! representation in a canonical integer form, exact forward evaluation,
//! verification against exact terms, and guessing a recurrence from a prefix
//! of a sequence by exact linear algebra.
//!
//! Guessing is deliberately exact end to end: an overdetermined homogeneous
//! system is solved over the rationals (after a cheap modular rank screen),
//! and any candidate must annihilate every window of the full input before it
//! is returned. No floating point is involved anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Extra equations requested beyond the number of unknowns when setting up a
/// guessing system.
const TARGET_MARGIN: usize = 10;

/// Hard floor on overdetermination. Candidate (order, degree) pairs that the
/// sequence cannot overdetermine by at least this much are skipped outright:
/// an underdetermined homogeneous system always has spurious solutions.
const MIN_MARGIN: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HolonomicError {
    /// The exact division by the leading coefficient left a remainder. For
    /// integer-valued holonomic sequences this always signals a transcription
    /// or data bug, never a rounding issue.
    #[error("recurrence does not preserve integrality at n = {n}")]
    NonIntegralStep { n: i64 },
    #[error("leading-coefficient singularity at n = {n}")]
    LeadingSingularity { n: i64 },
    /// The sequence is too short for any (order, degree) candidate within the
    /// requested bounds, margin included. Distinct from a clean "no recurrence
    /// found".
    #[error("insufficient data to attempt any candidate within the given bounds")]
    InsufficientData,
}

/// A 1-indexed-by-default run of consecutive arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigSequence {
    offset: i64,
    terms: Vec<BigInt>,
}

impl BigSequence {
    pub fn new(offset: i64, terms: Vec<BigInt>) -> Self {
        assert!(!terms.is_empty(), "BigSequence must be nonempty");
        BigSequence { offset, terms }
    }

    pub fn from_i64s(offset: i64, terms: &[i64]) -> Self {
        Self::new(offset, terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    /// Index of the last stored term.
    pub fn last_index(&self) -> i64 {
        self.offset + self.terms.len() as i64 - 1
    }

    /// Term at absolute index `n`, if stored.
    pub fn get(&self, n: i64) -> Option<&BigInt> {
        if n < self.offset {
            return None;
        }
        self.terms.get((n - self.offset) as usize)
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn iter_indexed(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms
            .iter()
            .enumerate()
            .map(move |(i, t)| (self.offset + i as i64, t))
    }

    /// The subsequence covering absolute indices `from..=to`.
    pub fn window(&self, from: i64, to: i64) -> BigSequence {
        assert!(from >= self.offset && to <= self.last_index() && from <= to);
        let a = (from - self.offset) as usize;
        let b = (to - self.offset) as usize;
        BigSequence::new(from, self.terms[a..=b].to_vec())
    }
}

/// Homogeneous linear recurrence sum_{j=0..order} p_j(n) a(n+j) = 0 with
/// integer polynomial coefficients p_j(n) = sum_e coeffs[j][e] n^e.
///
/// Canonical form: the gcd of all entries is 1, the leading nonzero
/// coefficient of p_order is positive, and p_order is not identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRecurrence {
    order: usize,
    degree: usize,
    coeffs: Vec<Vec<BigInt>>,
}

impl PolyRecurrence {
    /// Build from a coefficient matrix (one row per shift, ascending powers of
    /// n inside each row). Rows may have ragged lengths; they are padded, the
    /// matrix is divided by its content, and the sign is fixed so the leading
    /// coefficient of the last row is positive.
    ///
    /// Panics if the last row is identically zero (the order would be fake) or
    /// if fewer than two rows are given.
    pub fn new(rows: Vec<Vec<BigInt>>) -> Self {
        assert!(rows.len() >= 2, "a recurrence needs order >= 1");
        let degree = rows
            .iter()
            .map(|row| row.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p))
            .max()
            .unwrap_or(0);
        let mut coeffs: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|mut row| {
                row.resize(degree + 1, BigInt::zero());
                row
            })
            .collect();

        let last = coeffs.last().unwrap();
        let lead = last.iter().rposition(|c| !c.is_zero());
        assert!(lead.is_some(), "leading coefficient polynomial is zero");

        let mut content = BigInt::zero();
        for row in &coeffs {
            for c in row {
                content = content.gcd(c);
            }
        }
        let flip = coeffs.last().unwrap()[lead.unwrap()].is_negative();
        if flip {
            content = -content;
        }
        if !content.is_one() {
            for row in &mut coeffs {
                for c in row.iter_mut() {
                    *c = &*c / &content;
                }
            }
        }

        PolyRecurrence {
            order: coeffs.len() - 1,
            degree,
            coeffs,
        }
    }

    /// Build from i64 rows; test and transcription convenience.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|row| row.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient rows, ascending powers of n.
    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    /// Evaluate p_j at an integer argument.
    pub fn eval_coeff(&self, j: usize, n: i64) -> BigInt {
        let n = BigInt::from(n);
        let mut acc = BigInt::zero();
        for c in self.coeffs[j].iter().rev() {
            acc = acc * &n + c;
        }
        acc
    }

    /// sum_j p_j(n) window[j] over a window of order+1 consecutive terms
    /// starting at index n.
    pub fn apply_window(&self, n: i64, window: &[BigInt]) -> BigInt {
        assert_eq!(window.len(), self.order + 1);
        let mut acc = BigInt::zero();
        for (j, a) in window.iter().enumerate() {
            acc += self.eval_coeff(j, n) * a;
        }
        acc
    }

    /// The recurrence rewritten in the shifted variable, i.e. with every
    /// coefficient polynomial composed with n -> n + delta, recanonicalized.
    pub fn shifted(&self, delta: i64) -> PolyRecurrence {
        let d = BigInt::from(delta);
        let rows = self
            .coeffs
            .iter()
            .map(|row| {
                let mut out = vec![BigInt::zero(); row.len()];
                for (e, c) in row.iter().enumerate() {
                    // c * (n + delta)^e expanded by the binomial theorem
                    let mut binom = BigInt::one();
                    let mut dpow = BigInt::one();
                    for t in 0..=e {
                        // binom = C(e, t), dpow = delta^t; contributes to n^(e-t)
                        out[e - t] += c * &binom * &dpow;
                        if t < e {
                            binom = binom * BigInt::from((e - t) as i64)
                                / BigInt::from((t + 1) as i64);
                            dpow *= &d;
                        }
                    }
                }
                out
            })
            .collect();
        PolyRecurrence::new(rows)
    }

    /// JSON form with coefficients as decimal strings.
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "degree": self.degree,
            "coeffs": self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Extend `seed` forward to absolute index `upto` using the recurrence, with
/// exact integer division by the leading coefficient at every step.
pub fn extend(
    rec: &PolyRecurrence,
    seed: &BigSequence,
    upto: i64,
) -> Result<BigSequence, HolonomicError> {
    let r = rec.order();
    assert!(seed.len() >= r, "seed shorter than the recurrence order");
    let offset = seed.offset();
    let mut terms = seed.terms().to_vec();
    while offset + (terms.len() as i64) - 1 < upto {
        let n = offset + terms.len() as i64 - r as i64;
        let lead = rec.eval_coeff(r, n);
        if lead.is_zero() {
            return Err(HolonomicError::LeadingSingularity { n });
        }
        let mut s = BigInt::zero();
        let base = terms.len() - r;
        for j in 0..r {
            s += rec.eval_coeff(j, n) * &terms[base + j];
        }
        let (q, rem) = (-s).div_rem(&lead);
        if !rem.is_zero() {
            return Err(HolonomicError::NonIntegralStep { n });
        }
        terms.push(q);
    }
    Ok(BigSequence::new(offset, terms))
}

/// Rational-orbit variant of [`extend`]: forward evaluation over exact
/// rationals, for seeds that do not stay integral (perturbed orbits).
pub fn extend_rational(
    rec: &PolyRecurrence,
    offset: i64,
    seed: &[BigRational],
    upto: i64,
) -> Result<Vec<BigRational>, HolonomicError> {
    let r = rec.order();
    assert!(seed.len() >= r, "seed shorter than the recurrence order");
    let mut terms = seed.to_vec();
    while offset + (terms.len() as i64) - 1 < upto {
        let n = offset + terms.len() as i64 - r as i64;
        let lead = rec.eval_coeff(r, n);
        if lead.is_zero() {
            return Err(HolonomicError::LeadingSingularity { n });
        }
        let mut s = BigRational::zero();
        let base = terms.len() - r;
        for j in 0..r {
            s += BigRational::from(rec.eval_coeff(j, n)) * &terms[base + j];
        }
        terms.push(-s / BigRational::from(lead));
    }
    Ok(terms)
}

/// True iff the recurrence annihilates every full window of the sequence.
pub fn verify(rec: &PolyRecurrence, seq: &BigSequence) -> bool {
    let r = rec.order();
    assert!(seq.len() >= r + 1, "sequence shorter than one window");
    let terms = seq.terms();
    for w in 0..=(terms.len() - r - 1) {
        let n = seq.offset() + w as i64;
        if !rec.apply_window(n, &terms[w..=w + r]).is_zero() {
            return false;
        }
    }
    true
}

/// Search for a recurrence of order <= `max_order` and coefficient degree
/// <= `max_degree` annihilating `seq`.
///
/// Candidates are tried in increasing order, then increasing degree, so the
/// lowest-order hit wins. For each candidate an exact homogeneous system over
/// the first `unknowns + 10` windows is solved for its rational nullspace
/// (after a modular full-rank screen); a nontrivial solution is accepted only
/// if it annihilates every window of the whole input. Returns `Ok(None)` when
/// every feasible candidate comes up empty, and `InsufficientData` when the
/// sequence is too short to overdetermine any candidate at all.
pub fn guess_recurrence(
    seq: &BigSequence,
    max_order: usize,
    max_degree: usize,
) -> Result<Option<PolyRecurrence>, HolonomicError> {
    assert!(max_order >= 1);
    let len = seq.len();
    let mut any_feasible = false;

    for r in 1..=max_order {
        let windows = len.saturating_sub(r);
        for deg in 0..=max_degree {
            let unknowns = (r + 1) * (deg + 1);
            if windows < unknowns + MIN_MARGIN {
                continue;
            }
            any_feasible = true;
            let rows = windows.min(unknowns + TARGET_MARGIN);

            if modular_full_rank(seq, r, deg, rows) {
                continue;
            }

            let matrix = exact_system(seq, r, deg, rows);
            let basis = rational_nullspace(&matrix);
            if basis.is_empty() {
                continue;
            }
            let vector = pick_smallest(basis);
            if let Some(rec) = recurrence_from_vector(r, deg, &vector) {
                if verify(&rec, seq) {
                    return Ok(Some(rec));
                }
            }
        }
    }

    if any_feasible {
        Ok(None)
    } else {
        Err(HolonomicError::InsufficientData)
    }
}

/// Unknowns are ordered (j, e) -> j * (deg + 1) + e.
fn exact_system(seq: &BigSequence, r: usize, deg: usize, rows: usize) -> Vec<Vec<BigInt>> {
    let terms = seq.terms();
    (0..rows)
        .map(|w| {
            let n = seq.offset() + w as i64;
            let mut row = Vec::with_capacity((r + 1) * (deg + 1));
            for j in 0..=r {
                let a = &terms[w + j];
                let mut npow = BigInt::one();
                for e in 0..=deg {
                    row.push(a * &npow);
                    if e < deg {
                        npow *= n;
                    }
                }
            }
            row
        })
        .collect()
}

/// Prime used for the modular rank screen. Full rank mod p implies full rank
/// over Q (a nonzero minor mod p is a nonzero integer minor), so screening out
/// full-rank systems before exact elimination never loses a solution.
const SCREEN_PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn modular_full_rank(seq: &BigSequence, r: usize, deg: usize, rows: usize) -> bool {
    let p = SCREEN_PRIME;
    let pm = BigInt::from(p);
    let terms = seq.terms();
    let cols = (r + 1) * (deg + 1);
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|w| {
            let n = seq.offset() + w as i64;
            let nm = (((n % p as i64) + p as i64) % p as i64) as u64;
            let mut row = Vec::with_capacity(cols);
            for j in 0..=r {
                let am = {
                    let red = (&terms[w + j]).mod_floor(&pm);
                    let (_, digits) = red.to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                };
                let mut npow: u64 = 1;
                for e in 0..=deg {
                    row.push(mul_mod(am, npow, p));
                    if e < deg {
                        npow = mul_mod(npow, nm, p);
                    }
                }
            }
            row
        })
        .collect();

    // row-echelon rank over Z/p
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inv_mod(m[rank][col], p);
        for x in m[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows {
            if i != rank && m[i][col] != 0 {
                let f = m[i][col];
                for c in col..cols {
                    let sub = mul_mod(f, m[rank][c], p);
                    m[i][c] = (m[i][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == cols {
            return true;
        }
    }
    rank == cols
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Kernel basis of an integer matrix, computed by rational RREF.
fn rational_nullspace(matrix: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let rows = matrix.len();
    let cols = matrix[0].len();
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| row.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();

    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].recip();
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != rank && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for c in col..cols {
                    let sub = &f * &a[rank][c];
                    a[i][c] -= sub;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };

    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Clear denominators, strip content, and keep the vector whose largest
/// coefficient has the fewest bits. Deterministic tie-break: first wins.
fn pick_smallest(basis: Vec<Vec<BigRational>>) -> Vec<BigInt> {
    let mut best: Option<(u64, Vec<BigInt>)> = None;
    for v in basis {
        let ints = integerize(&v);
        let size = ints.iter().map(|c| c.magnitude().bits()).max().unwrap_or(0);
        if best.as_ref().is_none_or(|(b, _)| size < *b) {
            best = Some((size, ints));
        }
    }
    best.unwrap().1
}

fn integerize(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
    }
    ints
}

fn recurrence_from_vector(r: usize, deg: usize, v: &[BigInt]) -> Option<PolyRecurrence> {
    let mut rows: Vec<Vec<BigInt>> = (0..=r)
        .map(|j| v[j * (deg + 1)..(j + 1) * (deg + 1)].to_vec())
        .collect();
    // a trailing zero coefficient polynomial means the true order is lower
    while rows.len() > 1 && rows.last().unwrap().iter().all(|c| c.is_zero()) {
        rows.pop();
    }
    if rows.len() < 2 {
        return None;
    }
    Some(PolyRecurrence::new(rows))
}
