//! The number c(m_1, …, m_d) of simple singular vector tuples of a generic
//! m_1 × ⋯ × m_d tensor, computed three independent ways.
//!
//! c(m_1, …, m_d) is the coefficient of prod t_i^(m_i - 1) in
//! prod_i (that_i^(m_i) - t_i^(m_i)) / (that_i - t_i), where that_i is the sum
//! of the other variables (Friedland–Ottaviani). Equivalently its generating
//! function is prod x_i / [ prod (1 - x_i) · (1 - sum_{i>=2} (i-1) e_i) ].
//!
//! The three routes have disjoint failure modes and cross-check each other:
//!
//! * [`count_direct`] — expand the telescoped product with per-variable
//!   truncation and read off one coefficient;
//! * [`count_box_sum`] — sum the constant-term table f(k) over the box, with
//!   f obtained by power-series reciprocation of the MacMahon denominator
//!   (and, as an independent oracle, by contingency-matrix enumeration in
//!   [`f_contingency`]);
//! * [`count_lattice_dp`] — the partial linear recurrence with constant
//!   coefficients read off the rational generating function, run as a lattice
//!   dynamic program. This is the production path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::holonomic::BigSequence;
use crate::multipoly::{elementary_symmetric, MultiIndex, SparsePoly};

/// Tensor format m_1 × ⋯ × m_d. Zero extents are legal and force a zero
/// count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape(Vec<u32>);

impl Shape {
    pub fn new(extents: Vec<u32>) -> Self {
        assert!(!extents.is_empty(), "Shape needs dimension >= 1");
        Shape(extents)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn extents(&self) -> &[u32] {
        &self.0
    }

    pub fn has_zero_extent(&self) -> bool {
        self.0.iter().any(|&m| m == 0)
    }
}

impl From<Vec<u32>> for Shape {
    fn from(v: Vec<u32>) -> Self {
        Shape::new(v)
    }
}

/// The MacMahon factor 1 - sum_{i=2}^{d} (i-1) e_i(x_1, …, x_d).
///
/// Multilinear, constant term 1, exactly 1 + sum_{i=2}^d C(d,i) terms.
pub fn mmt_denominator(d: usize) -> SparsePoly {
    assert!(d >= 1);
    let mut den = SparsePoly::constant(d, 1);
    for i in 2..=d {
        let weight = SparsePoly::constant(d, -((i as i64) - 1));
        den = den.add(&elementary_symmetric(d, i).mul_truncated(&weight, None));
    }
    den
}

/// The full generating-function denominator
/// prod_{i=1}^{d} (1 - x_i) · (1 - sum_{i=2}^{d} (i-1) e_i), expanded.
///
/// Support has at most 3^d monomials with per-variable degree <= 2 and
/// constant term 1.
pub fn gf_denominator(d: usize) -> SparsePoly {
    assert!(d >= 1);
    let mut den = mmt_denominator(d);
    for i in 0..d {
        let one_minus_xi = SparsePoly::constant(d, 1).sub(&SparsePoly::variable(d, i));
        den = den.mul_truncated(&one_minus_xi, None);
    }
    den
}

/// Direct coefficient extraction: build each telescoped factor
/// sum_{k=0}^{m_i - 1} that_i^k t_i^(m_i - 1 - k), multiply all d of them with
/// per-variable cap (m_1 - 1, …, m_d - 1), and read the coefficient at the
/// cap. Any zero extent kills the product.
pub fn count_direct(shape: &Shape) -> BigInt {
    let d = shape.dim();
    if shape.has_zero_extent() {
        return BigInt::zero();
    }
    let cap = MultiIndex::new(shape.extents().iter().map(|&m| m - 1).collect());
    let mut prod = SparsePoly::constant(d, 1);
    for i in 0..d {
        let factor = telescoped_factor(d, i, shape.extents()[i], &cap);
        prod = prod.mul_truncated(&factor, Some(&cap));
    }
    prod.coefficient(&cap)
}

fn telescoped_factor(d: usize, i: usize, m: u32, cap: &MultiIndex) -> SparsePoly {
    let that = SparsePoly::from_terms(
        d,
        (0..d).filter(|&j| j != i).map(|j| {
            let mut e = vec![0u32; d];
            e[j] = 1;
            (e, 1)
        }),
    );
    let mut sum = SparsePoly::zero(d);
    let mut power = SparsePoly::constant(d, 1); // that^k, truncated
    for k in 0..m {
        let mut e = vec![0u32; d];
        e[i] = m - 1 - k;
        let t_part = SparsePoly::monomial(d, MultiIndex::new(e), 1);
        sum = sum.add(&power.mul_truncated(&t_part, Some(cap)));
        if k + 1 < m {
            power = power.mul_truncated(&that, Some(cap));
        }
    }
    sum
}

/// The constant term f(k_1, …, k_d) of prod_i that_i^(k_i) t_i^(-k_i),
/// evaluated by brute-force enumeration: sum over all d × d nonnegative
/// integer matrices with zero diagonal whose row sums AND column sums both
/// equal k, of the product of row multinomials. This is the independent
/// oracle for [`f_series`].
pub fn f_contingency(k: &MultiIndex) -> BigInt {
    let d = k.len();
    assert!(d >= 2, "f is defined for dimension >= 2");
    let total = k.total() as usize;
    let binom = pascal(total);

    // residual column sums, still to be met by rows i..d
    let mut cols: Vec<u64> = k.iter().map(|&x| x as u64).collect();
    // row_tail[i] = k_i + k_{i+1} + ... + k_{d-1}
    let row_tail: Vec<u64> = {
        let mut t = vec![0u64; d + 1];
        for i in (0..d).rev() {
            t[i] = t[i + 1] + k.get(i) as u64;
        }
        t
    };

    let mut total_count = BigInt::zero();

    // Fill rows in order; inside a row, fill off-diagonal cells left to right.
    // The weight accumulates binomial(remaining, placed) per cell, whose
    // product over a row is the row multinomial.
    fn fill_row(
        d: usize,
        k: &MultiIndex,
        binom: &[Vec<BigInt>],
        cols: &mut [u64],
        row_tail: &[u64],
        i: usize,
        acc: &mut BigInt,
        weight: &BigInt,
    ) {
        if i == d {
            if cols.iter().all(|&c| c == 0) {
                *acc += weight;
            }
            return;
        }
        // prune: residual column j must be coverable by rows i..d, excluding
        // the diagonal cell (j, j)
        for j in 0..d {
            let mut avail = row_tail[i];
            if j >= i {
                avail -= k.get(j) as u64;
            }
            if cols[j] > avail {
                return;
            }
        }
        fill_cell(d, k, binom, cols, row_tail, i, 0, k.get(i) as u64, acc, weight);
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_cell(
        d: usize,
        k: &MultiIndex,
        binom: &[Vec<BigInt>],
        cols: &mut [u64],
        row_tail: &[u64],
        i: usize,
        j: usize,
        remaining: u64,
        acc: &mut BigInt,
        weight: &BigInt,
    ) {
        if j == d {
            if remaining == 0 {
                fill_row(d, k, binom, cols, row_tail, i + 1, acc, weight);
            }
            return;
        }
        if j == i {
            fill_cell(d, k, binom, cols, row_tail, i, j + 1, remaining, acc, weight);
            return;
        }
        let is_last_cell = (j + 1..d).all(|jj| jj == i);
        if is_last_cell {
            // forced value
            if remaining <= cols[j] {
                let w = weight * &binom[remaining as usize][remaining as usize];
                cols[j] -= remaining;
                fill_cell(d, k, binom, cols, row_tail, i, j + 1, 0, acc, &w);
                cols[j] += remaining;
            }
            return;
        }
        let top = remaining.min(cols[j]);
        for a in 0..=top {
            let w = weight * &binom[remaining as usize][a as usize];
            cols[j] -= a;
            fill_cell(d, k, binom, cols, row_tail, i, j + 1, remaining - a, acc, &w);
            cols[j] += a;
        }
    }

    let unit = BigInt::one();
    fill_row(d, k, &binom, &mut cols, &row_tail, 0, &mut total_count, &unit);
    total_count
}

fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// The full table of f(k) for all k <= cap, by power-series reciprocation of
/// [`mmt_denominator`]: f(0) = 1 and f(v) = -sum_{0 != u <= v} q_u f(v - u)
/// where the q_u are the nonconstant denominator terms.
pub fn f_series(d: usize, cap: &MultiIndex) -> BTreeMap<MultiIndex, BigInt> {
    assert_eq!(cap.len(), d, "cap has wrong dimension");
    let den = mmt_denominator(d);
    let q: Vec<(MultiIndex, BigInt)> = den
        .iter_terms()
        .filter(|(m, _)| !m.is_zero())
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();

    let mut table = BTreeMap::new();
    for v in box_points(cap) {
        let mut val = if v.is_zero() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        for (u, c) in &q {
            if let Some(w) = v.checked_sub(u) {
                val -= c * &table[&w];
            }
        }
        table.insert(v, val);
    }
    table
}

/// All lattice points 0 <= v <= cap in lexicographic order.
fn box_points(cap: &MultiIndex) -> Vec<MultiIndex> {
    let d = cap.len();
    let mut out = Vec::new();
    let mut v = vec![0u32; d];
    loop {
        out.push(MultiIndex::new(v.clone()));
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < cap.get(i) {
                v[i] += 1;
                for x in v[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Box summation: c(m) = sum of f(k) over 0 <= k <= m - 1. Zero whenever some
/// extent is zero (empty box).
pub fn count_box_sum(shape: &Shape) -> BigInt {
    if shape.has_zero_extent() {
        return BigInt::zero();
    }
    let cap = MultiIndex::new(shape.extents().iter().map(|&m| m - 1).collect());
    f_series(shape.dim(), &cap).values().sum()
}

/// Memo table of c over a box, filled by [`count_lattice_dp`].
///
/// c is symmetric under coordinate permutation, so only ascending-sorted
/// indices are stored; lookups sort the query first. For cubical boxes this
/// shrinks the table by up to d!.
#[derive(Clone, Debug)]
pub struct CountTable {
    d: usize,
    cap: Vec<u32>,
    values: BTreeMap<MultiIndex, BigInt>,
}

impl CountTable {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn cap(&self) -> &[u32] {
        &self.cap
    }

    /// Value at `idx`. The query may be any permutation of a stored index;
    /// panics if it lies outside the box even up to permutation.
    pub fn get(&self, idx: &[u32]) -> &BigInt {
        assert_eq!(idx.len(), self.d, "index has wrong dimension");
        let key = MultiIndex::new(idx.to_vec()).sorted();
        self.values
            .get(&key)
            .unwrap_or_else(|| panic!("index {idx:?} outside the table box {:?}", self.cap))
    }

    /// Value at the box corner (the shape the table was built for).
    pub fn corner(&self) -> &BigInt {
        let key = MultiIndex::new(self.cap.clone()).sorted();
        &self.values[&key]
    }

    /// Number of stored (sorted) indices.
    pub fn num_entries(&self) -> usize {
        self.values.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &BigInt)> {
        self.values.iter()
    }

    /// JSON export: sorted indices only, counts as decimal strings.
    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "cap": self.cap,
            "values": self
                .values
                .iter()
                .map(|(idx, c)| json!({"idx": idx.as_slice(), "c": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Fill the box 0 <= v <= shape with c(v) by the constant-coefficient lattice
/// recurrence sum_u D_u c(v - u) = [v = (1,…,1)], where D is the expanded
/// generating-function denominator (D_0 = 1) and c vanishes outside the
/// nonnegative orthant.
///
/// Evaluation walks ascending-sorted representatives in lexicographic order;
/// every dependency v - u sorts to a lexicographically smaller representative,
/// so it is already available.
pub fn count_lattice_dp(shape: &Shape) -> CountTable {
    let d = shape.dim();
    let den = gf_denominator(d);
    let support: Vec<(MultiIndex, BigInt)> = den
        .iter_terms()
        .filter(|(m, _)| !m.is_zero())
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();

    let mut cap_sorted = shape.extents().to_vec();
    cap_sorted.sort_unstable();
    let ones = MultiIndex::new(vec![1; d]);

    let mut values: BTreeMap<MultiIndex, BigInt> = BTreeMap::new();
    let mut w = vec![0u32; d];
    loop {
        let widx = MultiIndex::new(w.clone());
        let mut c = if widx == ones {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        for (u, cu) in &support {
            if let Some(prev) = widx.checked_sub(u) {
                c -= cu * &values[&prev.sorted()];
            }
        }
        values.insert(widx, c);

        // next ascending-sorted vector <= cap_sorted, in lex order
        let mut advanced = false;
        for i in (0..d).rev() {
            if w[i] < cap_sorted[i] {
                let x = w[i] + 1;
                for slot in w[i..].iter_mut() {
                    *slot = x;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }

    CountTable {
        d,
        cap: shape.extents().to_vec(),
        values,
    }
}

/// The hyper-cubical diagonal C_d(n) = c(n, …, n) for n = 1..=nmax, read out
/// of one lattice DP over the cubical box.
pub fn diagonal(d: usize, nmax: u32) -> BigSequence {
    assert!(d >= 2, "diagonal needs dimension >= 2");
    assert!(nmax >= 1);
    let table = count_lattice_dp(&Shape::new(vec![nmax; d]));
    BigSequence::new(
        1,
        (1..=nmax).map(|n| table.get(&vec![n; d]).clone()).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::SparsePoly;
    use itertools::Itertools;

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    fn expand(factors: &[SparsePoly]) -> SparsePoly {
        let mut acc = SparsePoly::constant(factors[0].dim(), 1);
        for f in factors {
            acc = acc.mul_truncated(f, None);
        }
        acc
    }

    #[test]
    fn mmt_denominator_small() {
        assert_eq!(mmt_denominator(1), SparsePoly::constant(1, 1));
        assert_eq!(
            mmt_denominator(2),
            SparsePoly::from_terms(2, [(vec![0, 0], 1), (vec![1, 1], -1)])
        );
        assert_eq!(
            mmt_denominator(3),
            SparsePoly::from_terms(
                3,
                [
                    (vec![0, 0, 0], 1,),
                    (vec![1, 1, 0], -1),
                    (vec![1, 0, 1], -1),
                    (vec![0, 1, 1], -1),
                    (vec![1, 1, 1], -2),
                ]
            )
        );
        let d4 = mmt_denominator(4);
        assert_eq!(d4.num_terms(), 12); // 1 + C(4,2) + C(4,3) + C(4,4)
        assert_eq!(d4.coefficient(&mi(&[0, 0, 0, 0])), BigInt::one());
        assert_eq!(d4.coefficient(&mi(&[1, 1, 1, 0])), BigInt::from(-2));
        assert_eq!(d4.coefficient(&mi(&[1, 1, 1, 1])), BigInt::from(-3));
        assert!(d4.iter_terms().all(|(m, _)| m.iter().all(|&e| e <= 1)));
    }

    #[test]
    fn gf_denominator_small() {
        // d = 1: the MacMahon factor is empty, leaving 1 - x1
        assert_eq!(
            gf_denominator(1),
            SparsePoly::from_terms(1, [(vec![0], 1), (vec![1], -1)])
        );
        // d = 2: (1 - x1)(1 - x2)(1 - x1 x2)
        let expected = expand(&[
            SparsePoly::from_terms(2, [(vec![0, 0], 1), (vec![1, 0], -1)]),
            SparsePoly::from_terms(2, [(vec![0, 0], 1), (vec![0, 1], -1)]),
            SparsePoly::from_terms(2, [(vec![0, 0], 1), (vec![1, 1], -1)]),
        ]);
        assert_eq!(gf_denominator(2), expected);
        // d = 3: (1-x1)(1-x2)(1-x3)(1 - x1x2 - x1x3 - x2x3 - 2 x1x2x3)
        let expected = expand(&[
            SparsePoly::from_terms(3, [(vec![0, 0, 0], 1), (vec![1, 0, 0], -1)]),
            SparsePoly::from_terms(3, [(vec![0, 0, 0], 1), (vec![0, 1, 0], -1)]),
            SparsePoly::from_terms(3, [(vec![0, 0, 0], 1), (vec![0, 0, 1], -1)]),
            SparsePoly::from_terms(
                3,
                [
                    (vec![0, 0, 0], 1),
                    (vec![1, 1, 0], -1),
                    (vec![1, 0, 1], -1),
                    (vec![0, 1, 1], -1),
                    (vec![1, 1, 1], -2),
                ],
            ),
        ]);
        assert_eq!(gf_denominator(3), expected);
        for d in 1..=5 {
            let den = gf_denominator(d);
            assert_eq!(den.coefficient(&MultiIndex::zero(d)), BigInt::one());
            assert!(den.num_terms() <= 3usize.pow(d as u32));
            assert!(den.iter_terms().all(|(m, _)| m.iter().all(|&e| e <= 2)));
        }
    }

    #[test]
    fn direct_counts_cubes() {
        assert_eq!(count_direct(&Shape::new(vec![2, 2, 2])), BigInt::from(6));
        assert_eq!(count_direct(&Shape::new(vec![3, 3, 3])), BigInt::from(37));
    }

    #[test]
    fn direct_count_vanishes_on_zero_extent() {
        assert_eq!(count_direct(&Shape::new(vec![4, 0, 4])), BigInt::zero());
    }

    #[test]
    fn matrix_case_is_min() {
        // c(m1, m2) = min(m1, m2): the two-factor product reduces to a
        // diagonal f table, derived by hand.
        for m1 in 1..=12u32 {
            for m2 in 1..=12u32 {
                assert_eq!(
                    count_direct(&Shape::new(vec![m1, m2])),
                    BigInt::from(m1.min(m2)),
                    "shape ({m1},{m2})"
                );
            }
        }
    }

    #[test]
    fn contingency_base_cases() {
        assert_eq!(f_contingency(&mi(&[0, 0, 0])), BigInt::one());
        assert_eq!(f_contingency(&mi(&[3, 0, 0])), BigInt::zero());
        assert_eq!(f_contingency(&mi(&[0, 2, 0, 0])), BigInt::zero());
        // the two 3x3 derangement permutation matrices
        assert_eq!(f_contingency(&mi(&[1, 1, 1])), BigInt::from(2));
        // unique matrix with A12 = A21 = 1
        assert_eq!(f_contingency(&mi(&[1, 1, 0])), BigInt::one());
    }

    #[test]
    fn series_matches_hand_table() {
        let table = f_series(3, &mi(&[1, 1, 1]));
        let expect = [
            (vec![0u32, 0, 0], 1),
            (vec![1, 0, 0], 0),
            (vec![0, 1, 0], 0),
            (vec![0, 0, 1], 0),
            (vec![1, 1, 0], 1),
            (vec![1, 0, 1], 1),
            (vec![0, 1, 1], 1),
            (vec![1, 1, 1], 2),
        ];
        assert_eq!(table.len(), 8);
        for (idx, val) in expect {
            assert_eq!(table[&MultiIndex::new(idx.clone())], BigInt::from(val), "{idx:?}");
        }
    }

    #[test]
    fn series_is_diagonal_for_matrices() {
        let table = f_series(2, &mi(&[4, 4]));
        for (k, v) in &table {
            let expect = if k.get(0) == k.get(1) { 1 } else { 0 };
            assert_eq!(*v, BigInt::from(expect), "{k:?}");
        }
    }

    #[test]
    fn series_degenerate_box() {
        let table = f_series(3, &mi(&[0, 0, 0]));
        assert_eq!(table.len(), 1);
        assert_eq!(table[&mi(&[0, 0, 0])], BigInt::one());
    }

    #[test]
    fn series_agrees_with_contingency_oracle() {
        // every point with small weight, d = 3 and d = 4
        for d in [3usize, 4] {
            let cap = MultiIndex::new(vec![3; d]);
            let table = f_series(d, &cap);
            for (k, v) in &table {
                if k.total() <= 6 {
                    assert_eq!(*v, f_contingency(k), "{k:?}");
                }
            }
        }
    }

    #[test]
    fn box_sum_counts() {
        assert_eq!(count_box_sum(&Shape::new(vec![2, 2, 2])), BigInt::from(6));
        assert_eq!(count_box_sum(&Shape::new(vec![1, 1, 1])), BigInt::one());
        assert_eq!(
            count_box_sum(&Shape::new(vec![5, 5, 5])),
            BigInt::from(1621)
        );
        assert_eq!(count_box_sum(&Shape::new(vec![3, 0])), BigInt::zero());
    }

    #[test]
    fn lattice_dp_counts() {
        let t = count_lattice_dp(&Shape::new(vec![6, 6, 6]));
        assert_eq!(t.corner(), &BigInt::from(11256));
        assert_eq!(
            count_lattice_dp(&Shape::new(vec![2, 2, 2, 2])).corner(),
            &BigInt::from(24)
        );
        assert_eq!(
            count_lattice_dp(&Shape::new(vec![2; 6])).corner(),
            &BigInt::from(720)
        );
    }

    #[test]
    fn lattice_dp_vanishes_on_boundary() {
        let t = count_lattice_dp(&Shape::new(vec![4, 4, 4]));
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                assert_eq!(t.get(&[0, a, b]), &BigInt::zero());
                assert_eq!(t.get(&[a, 0, b]), &BigInt::zero());
            }
        }
    }

    #[test]
    fn lattice_dp_symmetric_lookup() {
        let t = count_lattice_dp(&Shape::new(vec![2, 3, 4]));
        let base = t.get(&[2, 3, 4]).clone();
        for perm in [[4u32, 3, 2], [3, 2, 4], [2, 4, 3]] {
            assert_eq!(t.get(&perm), &base);
        }
        assert_eq!(base, count_direct(&Shape::new(vec![2, 3, 4])));
    }

    #[test]
    fn three_methods_agree_on_small_boxes() {
        for shape in (0..3).map(|_| 1u32..=4).multi_cartesian_product() {
            let s = Shape::new(shape);
            let direct = count_direct(&s);
            assert_eq!(direct, count_box_sum(&s), "{s:?}");
            assert_eq!(&direct, count_lattice_dp(&s).get(s.extents()), "{s:?}");
        }
    }

    #[test]
    fn diagonal_matches_direct_for_matrices() {
        let seq = diagonal(2, 5);
        assert_eq!(
            seq.terms(),
            (1..=5).map(BigInt::from).collect::<Vec<_>>().as_slice()
        );
    }

    #[test]
    fn count_symmetry_under_permutation() {
        let base = count_direct(&Shape::new(vec![2, 3, 2]));
        for perm in [2u32, 3, 2].iter().copied().permutations(3).unique() {
            assert_eq!(count_direct(&Shape::new(perm.clone())), base, "{perm:?}");
        }
    }

    #[test]
    fn f_vanishes_when_exactly_one_entry_is_nonzero() {
        let table = f_series(4, &mi(&[2, 2, 2, 2]));
        for (k, v) in &table {
            let nonzero = k.iter().filter(|&&e| e > 0).count();
            if nonzero == 1 {
                assert_eq!(*v, BigInt::zero(), "{k:?}");
            }
        }
    }

    #[test]
    fn table_json_schema() {
        let t = count_lattice_dp(&Shape::new(vec![1, 1]));
        let j = t.to_json();
        assert_eq!(j["d"], 2);
        assert_eq!(j["cap"], serde_json::json!([1, 1]));
        let values = j["values"].as_array().unwrap();
        assert_eq!(values.len(), 3); // (0,0), (0,1), (1,1)
        assert_eq!(values[2]["idx"], serde_json::json!([1, 1]));
        assert_eq!(values[2]["c"], "1");
    }
}
