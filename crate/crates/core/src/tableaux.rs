//! Standard Young tableaux: dimension counts, enumeration and major-index
//! statistics.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{factorial, Partition, SkewShape};

/// Tableaux up to this count are enumerated directly when building a major
/// index profile; larger shapes use the q-hook-length generating function.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Hook length of the cell in row `i`, column `j` (both 0-based).
pub fn hook_length(shape: &Partition, conj: &Partition, i: usize, j: usize) -> usize {
    shape.part(i) - j + conj.part(j) - i - 1
}

/// Every hook length of the diagram, row by row.
pub fn hook_lengths(shape: &Partition) -> Vec<usize> {
    let conj = shape.conjugate();
    let mut hooks = Vec::with_capacity(shape.size());
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            hooks.push(hook_length(shape, &conj, i, j));
        }
    }
    hooks
}

/// `f^λ`, the number of standard Young tableaux, by the hook length formula.
pub fn f_hook(shape: &Partition) -> BigUint {
    let prod = hook_lengths(shape)
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    factorial(shape.size()) / prod
}

/// `f^{λ/μ}` via the Aitken determinant `N! det[1/(λ_i − μ_j − i + j)!]`.
pub fn f_skew(shape: &SkewShape) -> BigUint {
    let outer = shape.outer();
    let inner = shape.inner();
    let l = outer.len();
    if l == 0 {
        return BigUint::one();
    }
    let mut matrix: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let arg = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
                    if arg < 0 {
                        BigRational::zero()
                    } else {
                        let fact = BigInt::from(factorial(arg as usize));
                        BigRational::new(BigInt::one(), fact)
                    }
                })
                .collect()
        })
        .collect();
    let det = determinant(&mut matrix);
    let value = det * BigRational::from_integer(BigInt::from(factorial(shape.size())));
    assert!(value.is_integer(), "Aitken determinant is not integral");
    value
        .to_integer()
        .to_biguint()
        .expect("skew tableau count is non-negative")
}

/// Determinant by fraction-exact Gaussian elimination; consumes `m`.
pub(crate) fn determinant(m: &mut [Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// A standard Young tableau stored as the row receiving each entry:
/// `row_of[k]` is the 0-based row of entry `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    row_of: Vec<usize>,
}

impl Tableau {
    /// Validates that the row sequence fills `shape` as a standard tableau.
    pub fn new(shape: Partition, row_of: Vec<usize>) -> Result<Self> {
        if row_of.len() != shape.size() {
            return Err(Error::Precondition(format!(
                "row sequence has {} entries, shape {shape} has {}",
                row_of.len(),
                shape.size()
            )));
        }
        let mut lens = vec![0usize; shape.len()];
        for (k, &r) in row_of.iter().enumerate() {
            let ok = r < shape.len()
                && lens[r] < shape.part(r)
                && (r == 0 || lens[r] < lens[r - 1]);
            if !ok {
                return Err(Error::Precondition(format!(
                    "entry {} cannot go in row {r} of {shape}",
                    k + 1
                )));
            }
            lens[r] += 1;
        }
        Ok(Tableau { shape, row_of })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn row_of(&self) -> &[usize] {
        &self.row_of
    }

    /// The entries of each row.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.shape.len()];
        for (k, &r) in self.row_of.iter().enumerate() {
            rows[r].push(k + 1);
        }
        rows
    }

    /// Descent set and major index. `i` is a descent when `i + 1` sits in a
    /// lower row than `i`.
    pub fn descent_maj(&self) -> (Vec<usize>, usize) {
        let descents: Vec<usize> = (1..self.row_of.len())
            .filter(|&i| self.row_of[i] > self.row_of[i - 1])
            .collect();
        let maj = descents.iter().sum();
        (descents, maj)
    }
}

/// All standard Young tableaux of `shape`, lexicographic in `row_of`.
pub fn syt_iter(shape: &Partition) -> SytIter {
    SytIter {
        shape: shape.clone(),
        row_of: Vec::with_capacity(shape.size()),
        lens: vec![0; shape.len()],
        started: false,
        done: false,
    }
}

pub struct SytIter {
    shape: Partition,
    row_of: Vec<usize>,
    lens: Vec<usize>,
    started: bool,
    done: bool,
}

impl SytIter {
    fn allowed(&self, r: usize) -> bool {
        self.lens[r] < self.shape.part(r) && (r == 0 || self.lens[r] < self.lens[r - 1])
    }

    fn place_from(&mut self, start: usize) -> bool {
        for r in start..self.shape.len() {
            if self.allowed(r) {
                self.lens[r] += 1;
                self.row_of.push(r);
                return true;
            }
        }
        false
    }

    fn fill_greedy(&mut self) {
        while self.row_of.len() < self.shape.size() {
            let placed = self.place_from(0);
            debug_assert!(placed, "a partial standard filling always extends");
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(r) = self.row_of.pop() {
            self.lens[r] -= 1;
            if self.place_from(r + 1) {
                self.fill_greedy();
                return true;
            }
        }
        false
    }
}

impl Iterator for SytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_greedy();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Tableau {
            shape: self.shape.clone(),
            row_of: self.row_of.clone(),
        })
    }
}

/// Counts of tableaux of one shape by major index modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajProfile {
    pub shape: Partition,
    pub modulus: usize,
    pub counts: Vec<BigUint>,
}

impl MajProfile {
    pub fn count(&self, residue: i64) -> &BigUint {
        &self.counts[residue.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

impl Serialize for MajProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let counts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        let mut s = serializer.serialize_struct("MajProfile", 3)?;
        s.serialize_field("shape", &self.shape)?;
        s.serialize_field("modulus", &self.modulus)?;
        s.serialize_field("counts", &counts)?;
        s.end()
    }
}

/// `counts[r] = #{T ∈ SYT(λ) : maj(T) ≡ r (mod modulus)}`.
pub fn maj_mod_profile(shape: &Partition, modulus: usize) -> MajProfile {
    assert!(modulus >= 1, "modulus must be positive");
    let f = f_hook(shape);
    if f <= BigUint::from(ENUMERATION_LIMIT) {
        maj_profile_by_enumeration(shape, modulus)
    } else {
        maj_profile_by_q_hook(shape, modulus)
    }
}

/// Walks every tableau depth first, tracking the major index residue.
pub fn maj_profile_by_enumeration(shape: &Partition, modulus: usize) -> MajProfile {
    fn walk(
        shape: &[usize],
        lens: &mut [usize],
        placed: usize,
        last_row: usize,
        maj: usize,
        modulus: usize,
        counts: &mut [u64],
    ) {
        let n: usize = shape.iter().sum();
        if placed == n {
            counts[maj % modulus] += 1;
            return;
        }
        for r in 0..shape.len() {
            if lens[r] < shape[r] && (r == 0 || lens[r] < lens[r - 1]) {
                // Entry `placed + 1` goes in row r; `placed` is a descent
                // when the row index increases.
                let step = if placed > 0 && r > last_row { placed } else { 0 };
                lens[r] += 1;
                walk(shape, lens, placed + 1, r, (maj + step) % modulus, modulus, counts);
                lens[r] -= 1;
            }
        }
    }

    let mut counts = vec![0u64; modulus];
    let mut lens = vec![0usize; shape.len()];
    walk(shape.parts(), &mut lens, 0, 0, 0, modulus, &mut counts);
    MajProfile {
        shape: shape.clone(),
        modulus,
        counts: counts.into_iter().map(BigUint::from).collect(),
    }
}

/// Coefficients of `Σ_T q^{maj T}` as a polynomial in `q`, from
/// `q^{b(λ)} [n]_q! / ∏_cells [h]_q`.
pub fn maj_generating_polynomial(shape: &Partition) -> Vec<BigUint> {
    let n = shape.size();
    // ∏_{k=1}^{n} (1 - q^k) / ∏_h (1 - q^h); the [k]_q denominators cancel
    // between numerator and denominator since both have n factors.
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let mut next = vec![BigInt::zero(); poly.len() + k];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + k] -= c;
        }
        poly = next;
    }
    for h in hook_lengths(shape) {
        // Exact division by (1 - q^h): Q[i] = P[i] + Q[i - h].
        let mut quotient = vec![BigInt::zero(); poly.len() - h];
        for i in 0..quotient.len() {
            let mut v = poly[i].clone();
            if i >= h {
                v += &quotient[i - h];
            }
            quotient[i] = v;
        }
        poly = quotient;
    }
    let shift = shape.weighted_size();
    let mut out = vec![BigUint::zero(); shift];
    out.extend(poly.into_iter().map(|c| {
        c.to_biguint()
            .expect("q-hook quotient has non-negative coefficients")
    }));
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

pub fn maj_profile_by_q_hook(shape: &Partition, modulus: usize) -> MajProfile {
    let mut counts = vec![BigUint::zero(); modulus];
    for (degree, c) in maj_generating_polynomial(shape).into_iter().enumerate() {
        counts[degree % modulus] += c;
    }
    MajProfile {
        shape: shape.clone(),
        modulus,
        counts,
    }
}

/// Outcome of comparing a residue class frequency with its uniform value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwansonCheck {
    /// `|a_r / f^λ − 1/n|`.
    pub gap: BigRational,
    /// The square of the bound `2 n^{3/2} / √f^λ`, which is rational.
    pub bound_squared: BigRational,
    pub holds: bool,
}

impl SwansonCheck {
    pub fn bound_f64(&self) -> f64 {
        self.bound_squared.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }
}

/// Checks `|a_{n,r}/f^λ − 1/n| ≤ 2n^{3/2}/√f^λ` exactly by comparing
/// `gap² · f^λ` with `4n³`.
pub fn swanson_check(shape: &Partition, residue: i64) -> Result<SwansonCheck> {
    let n = shape.size();
    if n == 0 {
        return Err(Error::Precondition("swanson_check needs n ≥ 1".into()));
    }
    let profile = maj_mod_profile(shape, n);
    let f = BigInt::from(f_hook(shape));
    let count = BigInt::from(profile.count(residue).clone());
    let n_big = BigInt::from(n);
    let gap = (BigRational::new(count, f.clone()) - BigRational::new(BigInt::one(), n_big.clone()))
        .abs();
    let four_n_cubed = BigInt::from(4) * &n_big * &n_big * &n_big;
    let bound_squared = BigRational::new(four_n_cubed.clone(), f.clone());
    let lhs = &gap * &gap * BigRational::from_integer(f);
    let holds = lhs <= BigRational::from_integer(four_n_cubed);
    Ok(SwansonCheck {
        gap,
        bound_squared,
        holds,
    })
}

/// `(f^{ν/β} / f^ν, f^β / m!)` with `m = |β|`; the left side is 0 when
/// `β` does not fit in `ν`.
pub fn skew_ratio_report(nu: &Partition, beta: &Partition) -> (BigRational, BigRational) {
    let f_nu = BigInt::from(f_hook(nu));
    let lhs = match SkewShape::new(nu.clone(), beta.clone()) {
        Ok(skew) => BigRational::new(BigInt::from(f_skew(&skew)), f_nu),
        Err(_) => BigRational::zero(),
    };
    let rhs = BigRational::new(
        BigInt::from(f_hook(beta)),
        BigInt::from(factorial(beta.size())),
    );
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Skew tableau count by removing outer corners one at a time.
    fn skew_count_brute(outer: &[usize], inner: &Partition) -> u64 {
        let total: usize = outer.iter().sum();
        if total == inner.size() {
            return 1;
        }
        let mut count = 0;
        for i in 0..outer.len() {
            let removable = outer[i] > inner.part(i)
                && (i + 1 == outer.len() || outer[i + 1] < outer[i]);
            if removable {
                let mut smaller = outer.to_vec();
                smaller[i] -= 1;
                count += skew_count_brute(&smaller, inner);
            }
        }
        count
    }

    #[test]
    fn hook_formula_examples() {
        assert_eq!(f_hook(&p(&[2, 1])), big(2));
        assert_eq!(f_hook(&p(&[7])), big(1));
        assert_eq!(f_hook(&p(&[3, 2])), big(5));
        assert_eq!(f_hook(&Partition::empty()), big(1));
    }

    #[test]
    fn skew_examples() {
        let s = |o: &[usize], i: &[usize]| SkewShape::new(p(o), p(i)).unwrap();
        assert_eq!(f_skew(&s(&[2, 1], &[])), big(2));
        assert_eq!(f_skew(&s(&[2, 1], &[1])), big(2));
        assert_eq!(f_skew(&s(&[2, 2], &[1])), big(2));
    }

    #[test]
    fn aitken_matches_corner_removal() {
        for n in 0..=12 {
            for outer in partitions_of(n) {
                for k in 0..=n.min(4) {
                    for inner in partitions_of(k).filter(|i| outer.contains(i)) {
                        let skew = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                        assert_eq!(
                            f_skew(&skew),
                            big(skew_count_brute(outer.parts(), &inner)),
                            "{outer}/{inner}"
                        );
                    }
                }
                let full = SkewShape::new(outer.clone(), Partition::empty()).unwrap();
                assert_eq!(f_skew(&full), f_hook(&outer));
            }
        }
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_iter(&p(&[2, 1])).count(), 2);
        assert_eq!(syt_iter(&p(&[1, 1, 1])).count(), 1);
        assert_eq!(syt_iter(&p(&[2, 2])).count(), 2);
        assert_eq!(syt_iter(&Partition::empty()).count(), 1);
        let first: Vec<_> = syt_iter(&p(&[2, 1])).map(|t| t.row_of().to_vec()).collect();
        assert_eq!(first, vec![vec![0, 0, 1], vec![0, 1, 0]]);
    }

    #[test]
    fn syt_counts_match_hook_formula() {
        for n in 0..=10 {
            for shape in partitions_of(n) {
                let tableaux: Vec<_> = syt_iter(&shape).collect();
                assert_eq!(big(tableaux.len() as u64), f_hook(&shape), "{shape}");
                assert!(tableaux.windows(2).all(|w| w[0].row_of() < w[1].row_of()));
                for t in &tableaux {
                    Tableau::new(shape.clone(), t.row_of().to_vec()).unwrap();
                }
            }
        }
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(p(&[2, 1]), vec![1, 0, 0]).is_err());
        assert!(Tableau::new(p(&[2, 1]), vec![0, 0, 0]).is_err());
        assert!(Tableau::new(p(&[2, 1]), vec![0, 1]).is_err());
        let t = Tableau::new(p(&[2, 1]), vec![0, 1, 0]).unwrap();
        assert_eq!(t.rows(), vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn descent_examples() {
        let col = Tableau::new(p(&[1, 1, 1]), vec![0, 1, 2]).unwrap();
        assert_eq!(col.descent_maj(), (vec![1, 2], 3));
        let row = Tableau::new(p(&[3]), vec![0, 0, 0]).unwrap();
        assert_eq!(row.descent_maj(), (vec![], 0));
        let t = Tableau::new(p(&[2, 1]), vec![0, 1, 0]).unwrap();
        assert_eq!(t.descent_maj(), (vec![1], 1));
    }

    #[test]
    fn maj_profile_examples() {
        let counts = |shape: &[usize], m| maj_mod_profile(&p(shape), m).counts;
        assert_eq!(counts(&[2, 1], 3), vec![big(0), big(1), big(1)]);
        assert_eq!(counts(&[3], 3), vec![big(1), big(0), big(0)]);
        assert_eq!(counts(&[1, 1, 1], 3), vec![big(1), big(0), big(0)]);
    }

    fn profile_from_iter(shape: &Partition, modulus: usize) -> Vec<BigUint> {
        let mut counts = vec![BigUint::zero(); modulus];
        for t in syt_iter(shape) {
            counts[t.descent_maj().1 % modulus] += 1u32;
        }
        counts
    }

    #[test]
    fn profile_routes_agree_and_sum_to_f() {
        for n in 1..=10 {
            for shape in partitions_of(n) {
                let f = f_hook(&shape);
                for m in 1..=n {
                    let walked = maj_profile_by_enumeration(&shape, m);
                    assert_eq!(walked.total(), f);
                    assert_eq!(walked.counts, profile_from_iter(&shape, m), "{shape} mod {m}");
                    assert_eq!(walked, maj_profile_by_q_hook(&shape, m), "{shape} mod {m}");
                }
            }
        }
    }

    #[test]
    fn q_hook_route_handles_shapes_past_the_enumeration_limit() {
        let shape = p(&[6, 5, 4, 3, 2, 1]);
        let poly = maj_generating_polynomial(&shape);
        let total: BigUint = poly.iter().sum();
        assert_eq!(total, f_hook(&shape));
        let profile = maj_mod_profile(&shape, 21);
        assert_eq!(profile.total(), f_hook(&shape));
    }

    #[test]
    fn conjugate_profiles_are_complementary() {
        // maj(T') = C(n,2) − maj(T) under transposition.
        for n in 1..=8 {
            let binom = n * (n - 1) / 2;
            for shape in partitions_of(n) {
                let a = maj_mod_profile(&shape, n);
                let b = maj_mod_profile(&shape.conjugate(), n);
                for r in 0..n {
                    let mirrored = (binom as i64 - r as i64).rem_euclid(n as i64);
                    assert_eq!(a.counts[r], *b.count(mirrored), "{shape} r={r}");
                }
                let mut sa = a.counts.clone();
                let mut sb = b.counts.clone();
                sa.sort();
                sb.sort();
                assert_eq!(sa, sb);
            }
        }
    }

    #[test]
    fn swanson_examples() {
        let c = swanson_check(&p(&[2, 1]), 1).unwrap();
        assert_eq!(c.gap, rat(1, 6));
        assert!(c.holds);
        for n in 1..=8 {
            let c = swanson_check(&Partition::row(n), 0).unwrap();
            assert_eq!(c.gap, rat(n as i64 - 1, n as i64));
            assert_eq!(c.bound_squared, rat(4 * (n as i64).pow(3), 1));
            assert!(c.holds);
        }
        assert!(swanson_check(&Partition::empty(), 0).is_err());
    }

    #[test]
    fn swanson_holds_through_ten() {
        for n in 1..=10 {
            for shape in partitions_of(n) {
                for r in 0..n as i64 {
                    assert!(swanson_check(&shape, r).unwrap().holds, "{shape} r={r}");
                }
            }
        }
    }

    #[test]
    fn skew_ratio_examples() {
        assert_eq!(skew_ratio_report(&p(&[2, 1]), &p(&[1])), (rat(1, 1), rat(1, 1)));
        assert_eq!(skew_ratio_report(&p(&[6]), &p(&[1])), (rat(1, 1), rat(1, 1)));
        assert_eq!(skew_ratio_report(&p(&[2, 1]), &p(&[3])).0, rat(0, 1));
        let (lhs, rhs) = skew_ratio_report(&p(&[4, 4, 4, 4]), &p(&[2]));
        assert_eq!(f_hook(&p(&[4, 4, 4, 4])), big(24024));
        let skew = SkewShape::new(p(&[4, 4, 4, 4]), p(&[2])).unwrap();
        assert_eq!(f_skew(&skew), big(skew_count_brute(&[4, 4, 4, 4], &p(&[2]))));
        assert_eq!(lhs, BigRational::new(BigInt::from(f_skew(&skew)), BigInt::from(24024)));
        assert_eq!(rhs, rat(1, 2));
    }

    #[test]
    fn maj_profile_serializes_counts_as_strings() {
        let json = serde_json::to_string(&maj_mod_profile(&p(&[2, 1]), 3)).unwrap();
        assert_eq!(json, r#"{"shape":[2,1],"modulus":3,"counts":["0","1","1"]}"#);
    }
}
