//! Homogeneous symmetric functions with exact rational coefficients in the
//! Schur or power-sum basis.
//!
//! The power-sum basis carries the arithmetic: products are multiset unions
//! of indices and plethysm by `p_m` scales every part. The Schur basis is the
//! presentation basis, reached through the character tables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::characters;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tableaux::f_hook;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Power,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::Power => "power",
        }
    }

    fn symbol(self) -> char {
        match self {
            Basis::Schur => 's',
            Basis::Power => 'p',
        }
    }
}

/// A homogeneous symmetric function. Every key has size `degree` and no
/// stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn big_rat(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> SymFunc {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1, in degree 0.
    pub fn one(basis: Basis) -> SymFunc {
        SymFunc::single(Partition::empty(), basis)
    }

    pub fn single(index: Partition, basis: Basis) -> SymFunc {
        SymFunc {
            degree: index.size(),
            basis,
            coeffs: BTreeMap::from([(index, BigRational::one())]),
        }
    }

    pub fn schur(index: Partition) -> SymFunc {
        SymFunc::single(index, Basis::Schur)
    }

    pub fn power(index: Partition) -> SymFunc {
        SymFunc::single(index, Basis::Power)
    }

    /// Builds from `(index, coefficient)` pairs, summing repeats and dropping
    /// zeros.
    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<SymFunc>
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut f = SymFunc::zero(degree, basis);
        for (index, c) in terms {
            if index.size() != degree {
                return Err(Error::DegreeMismatch(index.size(), degree));
            }
            f.add_term(index, c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the basis element `index` (zero when absent).
    pub fn coeff(&self, index: &Partition) -> BigRational {
        self.coeffs.get(index).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, index: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(index) {
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

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.degree, self.basis);
        }
        SymFunc {
            degree: self.degree,
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Sum; the result is in this function's basis.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let other = other.in_basis(self.basis);
        let mut out = self.clone();
        for (k, v) in other.coeffs {
            out.add_term(k, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&rat(-1)))
    }

    /// The same function expressed in `basis`.
    pub fn in_basis(&self, basis: Basis) -> SymFunc {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (Basis::Schur, Basis::Power) => schur_to_power(self).expect("basis checked"),
            _ => power_to_schur(self).expect("basis checked"),
        }
    }

    /// Equality as symmetric functions, whatever the bases.
    pub fn same_function(&self, other: &SymFunc) -> bool {
        self.degree == other.degree
            && (self.is_zero() && other.is_zero() || *self == other.in_basis(self.basis))
    }

    /// The Schur coefficients, checked to be non-negative integers.
    pub fn schur_naturals(&self) -> Result<BTreeMap<Partition, BigUint>> {
        let schur = self.in_basis(Basis::Schur);
        schur
            .coeffs
            .iter()
            .map(|(k, v)| {
                if !v.is_integer() || v.is_negative() {
                    return Err(Error::Integrality(format!("coefficient {v} at s{k}")));
                }
                Ok((k.clone(), v.to_integer().magnitude().clone()))
            })
            .collect()
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}{}", self.basis.symbol(), k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    degree: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .map(|(k, v)| TermJson {
                    partition: k.clone(),
                    num: v.numer().to_string(),
                    den: v.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SymFuncJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let num: BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((t.partition, BigRational::new(num, den)));
        }
        SymFunc::from_terms(raw.degree, raw.basis, terms).map_err(D::Error::custom)
    }
}

fn expect_basis(f: &SymFunc, basis: Basis) -> Result<()> {
    if f.basis != basis {
        return Err(Error::WrongBasis {
            expected: basis.name(),
            found: f.basis.name(),
        });
    }
    Ok(())
}

/// `s_ν = Σ_μ χ^ν(μ) p_μ / z_μ`.
pub fn schur_to_power(f: &SymFunc) -> Result<SymFunc> {
    expect_basis(f, Basis::Schur)?;
    if f.degree == 0 || f.is_zero() {
        return Ok(SymFunc {
            basis: Basis::Power,
            ..f.clone()
        });
    }
    let table = characters::table(f.degree);
    let mut out = SymFunc::zero(f.degree, Basis::Power);
    for (j, mu) in table.order().iter().enumerate() {
        let mut total = BigRational::zero();
        for (nu, c) in &f.coeffs {
            let chi = &table.values()[table.index_of(nu).expect("degree checked")][j];
            if !chi.is_zero() {
                total += c * BigRational::from_integer(chi.clone());
            }
        }
        out.add_term(mu.clone(), total / big_rat(mu.z()));
    }
    Ok(out)
}

/// `p_μ = Σ_ν χ^ν(μ) s_ν`.
pub fn power_to_schur(f: &SymFunc) -> Result<SymFunc> {
    expect_basis(f, Basis::Power)?;
    if f.degree == 0 || f.is_zero() {
        return Ok(SymFunc {
            basis: Basis::Schur,
            ..f.clone()
        });
    }
    let table = characters::table(f.degree);
    let columns: Vec<(usize, &BigRational)> = f
        .coeffs
        .iter()
        .map(|(mu, c)| (table.index_of(mu).expect("degree checked"), c))
        .collect();
    let mut out = SymFunc::zero(f.degree, Basis::Schur);
    for (i, nu) in table.order().iter().enumerate() {
        let row = &table.values()[i];
        let mut total = BigRational::zero();
        for &(j, c) in &columns {
            if !row[j].is_zero() {
                total += c * BigRational::from_integer(row[j].clone());
            }
        }
        out.add_term(nu.clone(), total);
    }
    Ok(out)
}

/// Product computed in the power-sum basis; the result is in that basis.
pub fn mul_power(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let f = f.in_basis(Basis::Power);
    let g = g.in_basis(Basis::Power);
    let mut out = SymFunc::zero(f.degree + g.degree, Basis::Power);
    for (a, x) in &f.coeffs {
        for (b, y) in &g.coeffs {
            out.add_term(a.disjoint_union(b), x * y);
        }
    }
    out
}

/// Product computed in the Schur basis with Littlewood–Richardson
/// coefficients; the result is in the Schur basis.
pub fn mul_schur(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let f = f.in_basis(Basis::Schur);
    let g = g.in_basis(Basis::Schur);
    let degree = f.degree + g.degree;
    let mut out = SymFunc::zero(degree, Basis::Schur);
    for (lambda, x) in &f.coeffs {
        for (mu, y) in &g.coeffs {
            let xy = x * y;
            for nu in partitions_of(degree).filter(|nu| nu.contains(lambda) && nu.contains(mu)) {
                let c = lr_count(lambda, mu, &nu);
                if c > 0 {
                    out.add_term(nu, &xy * rat(c as i64));
                }
            }
        }
    }
    out
}

/// Product of two functions. Two Schur-basis operands multiply through
/// Littlewood–Richardson coefficients; anything else multiplies in the
/// power-sum basis and stays there.
pub fn mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    if f.basis == Basis::Schur && g.basis == Basis::Schur {
        mul_schur(f, g)
    } else {
        mul_power(f, g)
    }
}

/// `c^ν_{λμ}`: the number of Littlewood–Richardson tableaux of shape `ν/λ`
/// and content `μ`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(Error::Precondition(format!(
            "|{lambda}| + |{mu}| ≠ |{nu}|"
        )));
    }
    Ok(lr_count(lambda, mu, nu))
}

fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    // Cells of ν/λ in reading order: rows top to bottom, right to left.
    let mut cells = Vec::with_capacity(mu.size());
    for i in 0..nu.len() {
        for j in (lambda.part(i)..nu.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..nu.len()).map(|i| vec![0; nu.part(i)]).collect();
    let mut used = vec![0usize; mu.len() + 1];
    lr_fill(&cells, 0, lambda, nu, mu, &mut grid, &mut used)
}

fn lr_fill(
    cells: &[(usize, usize)],
    pos: usize,
    lambda: &Partition,
    nu: &Partition,
    mu: &Partition,
    grid: &mut [Vec<usize>],
    used: &mut [usize],
) -> u64 {
    let Some(&(i, j)) = cells.get(pos) else {
        return 1;
    };
    // Weakly increasing rows: bounded above by the entry to the right.
    let upper = if j + 1 < nu.part(i) {
        grid[i][j + 1]
    } else {
        mu.len()
    };
    // Strictly increasing columns: bounded below by the skew entry above.
    let lower = if i > 0 && j >= lambda.part(i - 1) {
        grid[i - 1][j] + 1
    } else {
        1
    };
    let mut total = 0;
    for v in lower..=upper {
        if used[v] == mu.part(v - 1) {
            continue;
        }
        if v > 1 && used[v] + 1 > used[v - 1] {
            continue;
        }
        used[v] += 1;
        grid[i][j] = v;
        total += lr_fill(cells, pos + 1, lambda, nu, mu, grid, used);
        used[v] -= 1;
    }
    grid[i][j] = 0;
    total
}

/// `p_m[f]`: replace each `p_i` by `p_{im}` in the power-sum expansion.
/// The result is in the power-sum basis.
pub fn plethysm_p(m: usize, f: &SymFunc) -> SymFunc {
    assert!(m >= 1, "plethysm needs m ≥ 1");
    let f = f.in_basis(Basis::Power);
    SymFunc {
        degree: f.degree * m,
        basis: Basis::Power,
        coeffs: f.coeffs.iter().map(|(k, v)| (k.scaled(m), v.clone())).collect(),
    }
}

/// `Σ_{μ ⊢ k} w(μ)/z_μ · ∏_j p_{μ_j}[f]` in the power-sum basis.
fn plethysm_by_cycle_index(k: usize, f: &SymFunc, signed: bool) -> SymFunc {
    let f = f.in_basis(Basis::Power);
    let mut out = SymFunc::zero(k * f.degree, Basis::Power);
    if k == 0 {
        return SymFunc::one(Basis::Power);
    }
    let mut powers: Vec<Option<SymFunc>> = vec![None; k + 1];
    for mu in partitions_of(k) {
        let mut term = SymFunc::one(Basis::Power);
        for &part in mu.parts() {
            let pf = powers[part].get_or_insert_with(|| plethysm_p(part, &f));
            term = mul_power(&term, pf);
        }
        let mut weight = BigRational::new(BigInt::one(), BigInt::from(mu.z()));
        if signed && mu.sign() < 0 {
            weight = -weight;
        }
        for (idx, c) in term.coeffs {
            out.add_term(idx, c * &weight);
        }
    }
    out
}

/// `h_k[f]`, in the power-sum basis.
pub fn plethysm_h_power(k: usize, f: &SymFunc) -> SymFunc {
    plethysm_by_cycle_index(k, f, false)
}

/// `h_k[f]`, returned in the basis of `f`.
pub fn plethysm_h(k: usize, f: &SymFunc) -> SymFunc {
    plethysm_h_power(k, f).in_basis(f.basis)
}

/// `e_k[f]`, returned in the basis of `f`.
pub fn plethysm_e(k: usize, f: &SymFunc) -> SymFunc {
    plethysm_by_cycle_index(k, f, true).in_basis(f.basis)
}

/// The involution `ω`: `p_μ ↦ (−1)^{|μ|−ℓ(μ)} p_μ`, `s_ν ↦ s_{ν′}`.
pub fn omega(f: &SymFunc) -> SymFunc {
    let coeffs = match f.basis {
        Basis::Schur => f
            .coeffs
            .iter()
            .map(|(k, v)| (k.conjugate(), v.clone()))
            .collect(),
        Basis::Power => f
            .coeffs
            .iter()
            .map(|(k, v)| (k.clone(), if k.sign() < 0 { -v } else { v.clone() }))
            .collect(),
    };
    SymFunc {
        degree: f.degree,
        basis: f.basis,
        coeffs,
    }
}

/// `h_1^n = Σ_{λ ⊢ n} f^λ s_λ`.
pub fn h1_power(n: usize) -> SymFunc {
    let mut out = SymFunc::zero(n, Basis::Schur);
    for lambda in partitions_of(n) {
        let f = f_hook(&lambda);
        out.add_term(lambda, big_rat(f));
    }
    out
}

/// The Hall inner product, `⟨s_λ, s_μ⟩ = δ`, `⟨p_λ, p_μ⟩ = z_λ δ`.
pub fn inner(f: &SymFunc, g: &SymFunc) -> Result<BigRational> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch(f.degree, g.degree));
    }
    let (f, g, basis) = if f.basis == g.basis {
        (f.clone(), g.clone(), f.basis)
    } else {
        (f.in_basis(Basis::Power), g.in_basis(Basis::Power), Basis::Power)
    };
    let mut total = BigRational::zero();
    for (k, a) in &f.coeffs {
        if let Some(b) = g.coeffs.get(k) {
            let mut term = a * b;
            if basis == Basis::Power {
                term *= big_rat(k.z());
            }
            total += term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    fn pw(parts: &[usize]) -> SymFunc {
        SymFunc::power(p(parts))
    }

    fn schur_sum(terms: &[(&[usize], i64)]) -> SymFunc {
        let degree = terms[0].0.iter().sum();
        SymFunc::from_terms(
            degree,
            Basis::Schur,
            terms.iter().map(|(k, c)| (p(k), rat(*c))),
        )
        .unwrap()
    }

    fn e2() -> SymFunc {
        s(&[1, 1])
    }

    #[test]
    fn schur_to_power_examples() {
        let expected = SymFunc::from_terms(
            2,
            Basis::Power,
            [(p(&[1, 1]), q(1, 2)), (p(&[2]), q(-1, 2))],
        )
        .unwrap();
        assert_eq!(schur_to_power(&s(&[1, 1])).unwrap(), expected);

        let h4 = schur_to_power(&s(&[4])).unwrap();
        for mu in partitions_of(4) {
            assert_eq!(h4.coeff(&mu), BigRational::new(BigInt::one(), BigInt::from(mu.z())));
        }

        let sum = s(&[2]).add(&s(&[1, 1])).unwrap();
        assert_eq!(schur_to_power(&sum).unwrap(), pw(&[1, 1]));
        assert!(schur_to_power(&pw(&[2])).is_err());
    }

    #[test]
    fn power_to_schur_examples() {
        assert_eq!(
            power_to_schur(&pw(&[2])).unwrap(),
            schur_sum(&[(&[2], 1), (&[1, 1], -1)])
        );
        assert_eq!(power_to_schur(&pw(&[1])).unwrap(), s(&[1]));
        assert_eq!(
            power_to_schur(&pw(&[1, 1, 1])).unwrap(),
            schur_sum(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
        );
        assert!(matches!(
            power_to_schur(&s(&[1])),
            Err(Error::WrongBasis { .. })
        ));
    }

    #[test]
    fn basis_round_trip() {
        for n in 0..=10 {
            for lambda in partitions_of(n) {
                let sf = s(lambda.parts());
                assert_eq!(power_to_schur(&schur_to_power(&sf).unwrap()).unwrap(), sf);
                let pf = SymFunc::power(lambda.clone());
                assert_eq!(schur_to_power(&power_to_schur(&pf).unwrap()).unwrap(), pf);
            }
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(mul(&s(&[1]), &s(&[1])), schur_sum(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(
            mul(&s(&[1, 1]), &s(&[1])),
            schur_sum(&[(&[2, 1], 1), (&[1, 1, 1], 1)])
        );
        assert_eq!(mul(&pw(&[2]), &pw(&[2])), pw(&[2, 2]));
        assert_eq!(mul(&SymFunc::one(Basis::Schur), &s(&[2, 1])), s(&[2, 1]));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])).unwrap(), 1);
        assert!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[2, 2])).is_err());
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])).unwrap(), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert_eq!(lr_coeff(&p(&[2]), &p(&[2]), &p(&[1, 1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn lr_matches_power_route_through_eight() {
        for total in 0..=8 {
            for a in 0..=total {
                for lambda in partitions_of(a) {
                    for mu in partitions_of(total - a) {
                        let product = power_to_schur(&mul_power(
                            &SymFunc::schur(lambda.clone()),
                            &SymFunc::schur(mu.clone()),
                        ))
                        .unwrap();
                        for nu in partitions_of(total) {
                            let c = lr_coeff(&lambda, &mu, &nu).unwrap();
                            assert_eq!(rat(c as i64), product.coeff(&nu), "c^{nu}_{lambda},{mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn plethysm_p_examples() {
        assert_eq!(plethysm_p(2, &pw(&[1])), pw(&[2]));
        let expected = SymFunc::from_terms(
            4,
            Basis::Power,
            [(p(&[2, 2]), q(1, 2)), (p(&[4]), q(-1, 2))],
        )
        .unwrap();
        assert_eq!(plethysm_p(2, &e2()), expected);
        let f = s(&[2, 1]);
        assert!(plethysm_p(1, &f).same_function(&f));
    }

    #[test]
    fn plethysm_h_examples() {
        assert_eq!(plethysm_h(2, &e2()), schur_sum(&[(&[2, 2], 1), (&[1, 1, 1, 1], 1)]));
        assert_eq!(plethysm_h(0, &s(&[2, 1])), SymFunc::one(Basis::Schur));
        for k in 0..=6 {
            assert_eq!(plethysm_h(k, &s(&[1])), s(&[k]).in_basis(Basis::Schur));
        }
    }

    #[test]
    fn plethysm_e_examples() {
        assert_eq!(plethysm_e(2, &s(&[1])), s(&[1, 1]));
        let f = s(&[2, 1]);
        assert_eq!(plethysm_e(1, &f), f);
        assert_eq!(plethysm_e(2, &e2()), s(&[2, 1, 1]));
    }

    /// Brute-force monomial expansions in six variables: `e_2[e_2]` as the
    /// sum over unordered pairs of distinct 2-subsets, `s_{211}` as the sum
    /// over semistandard tableaux.
    #[test]
    fn e2_of_e2_against_monomial_expansion() {
        use std::collections::HashMap;
        let vars = 6;
        let pairs: Vec<(usize, usize)> = (0..vars)
            .flat_map(|a| (a + 1..vars).map(move |b| (a, b)))
            .collect();
        let mut plethysm: HashMap<Vec<usize>, i64> = HashMap::new();
        for x in 0..pairs.len() {
            for y in x + 1..pairs.len() {
                let mut e = vec![0; vars];
                for v in [pairs[x].0, pairs[x].1, pairs[y].0, pairs[y].1] {
                    e[v] += 1;
                }
                *plethysm.entry(e).or_default() += 1;
            }
        }
        // Shape (2,1,1): first row a ≤ b, first column a < c < d.
        let mut schur: HashMap<Vec<usize>, i64> = HashMap::new();
        for a in 0..vars {
            for b in a..vars {
                for c in a + 1..vars {
                    for d in c + 1..vars {
                        let mut e = vec![0; vars];
                        for v in [a, b, c, d] {
                            e[v] += 1;
                        }
                        *schur.entry(e).or_default() += 1;
                    }
                }
            }
        }
        assert_eq!(plethysm, schur);
        assert_eq!(plethysm_e(2, &e2()), s(&[2, 1, 1]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&s(&[3, 1])), s(&[2, 1, 1]));
        assert_eq!(omega(&pw(&[2])), pw(&[2]).scale(&rat(-1)));
        let f = schur_sum(&[(&[3, 1], 2), (&[2, 2], -1)]);
        assert_eq!(omega(&omega(&f)), f);
        assert!(omega(&schur_to_power(&f).unwrap()).same_function(&omega(&f)));
    }

    #[test]
    fn h1_power_examples() {
        assert_eq!(h1_power(3), schur_sum(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)]));
        assert_eq!(h1_power(1), s(&[1]));
        assert_eq!(h1_power(0), SymFunc::one(Basis::Schur));
        for n in 1..=7 {
            assert_eq!(h1_power(n).in_basis(Basis::Power), SymFunc::power(Partition::column(n)));
        }
    }

    #[test]
    fn inner_examples() {
        assert_eq!(inner(&s(&[2, 1]), &s(&[2, 1])).unwrap(), rat(1));
        assert_eq!(inner(&pw(&[2]), &pw(&[2])).unwrap(), rat(2));
        assert_eq!(inner(&h1_power(3), &s(&[2, 1])).unwrap(), rat(2));
        assert!(matches!(
            inner(&s(&[2]), &s(&[1])),
            Err(Error::DegreeMismatch(2, 1))
        ));
    }

    #[test]
    fn schur_and_power_products_agree_through_eight() {
        for total in 0..=8 {
            for a in 0..=total {
                for lambda in partitions_of(a) {
                    for mu in partitions_of(total - a) {
                        let (x, y) = (SymFunc::schur(lambda.clone()), SymFunc::schur(mu.clone()));
                        assert!(mul_schur(&x, &y).same_function(&mul_power(&x, &y)));
                    }
                }
            }
        }
    }

    #[test]
    fn h_of_h1_power_identity() {
        // h_k[h_1^m] = h_1^{km}/k! + Σ_{μ ≠ 1^k} p_{mμ}/z_μ.
        for k in 1..=3 {
            for m in 1..=3 {
                let h1m = h1_power(m);
                let lhs = plethysm_h_power(k, &h1m);
                let mut terms = Vec::new();
                for mu in partitions_of(k) {
                    let w = BigRational::new(BigInt::one(), BigInt::from(mu.z()));
                    let idx = if mu == Partition::column(k) {
                        Partition::column(k * m)
                    } else {
                        let mut parts = Vec::new();
                        for &part in mu.parts() {
                            parts.extend(std::iter::repeat_n(part, m));
                        }
                        Partition::new(parts)
                    };
                    terms.push((idx, w));
                }
                let rhs = SymFunc::from_terms(k * m, Basis::Power, terms).unwrap();
                assert_eq!(lhs, rhs, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn h_of_e2_is_even_columns() {
        for k in 0..=6 {
            let f = plethysm_h(k, &e2());
            for nu in partitions_of(2 * k) {
                let even = nu.conjugate().parts().iter().all(|c| c % 2 == 0);
                assert_eq!(f.coeff(&nu), rat(even as i64), "k={k} {nu}");
            }
        }
    }

    #[test]
    fn json_shape() {
        let f = SymFunc::from_terms(2, Basis::Power, [(p(&[2]), q(-1, 2))]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"degree":2,"basis":"power","terms":[{"partition":[2],"num":"-1","den":"2"}]}"#
        );
        let back: SymFunc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn from_terms_rejects_wrong_degree() {
        assert!(SymFunc::from_terms(3, Basis::Schur, [(p(&[2]), rat(1))]).is_err());
        let cancelled =
            SymFunc::from_terms(2, Basis::Schur, [(p(&[2]), rat(1)), (p(&[2]), rat(-1))]).unwrap();
        assert!(cancelled.is_zero());
    }

    #[test]
    fn integrality_guard() {
        assert!(h1_power(4).schur_naturals().is_ok());
        let bad = s(&[2]).scale(&q(1, 2));
        assert!(matches!(bad.schur_naturals(), Err(Error::Integrality(_))));
        let neg = s(&[2]).scale(&rat(-1));
        assert!(neg.schur_naturals().is_err());
    }

    use proptest::prelude::*;

    fn small_schur(degree: usize) -> impl Strategy<Value = SymFunc> {
        let shapes: Vec<Partition> = partitions_of(degree).collect();
        let k = shapes.len();
        proptest::collection::vec((0..k, -5i64..=5, 1i64..=4), 1..4).prop_map(move |terms| {
            SymFunc::from_terms(
                degree,
                Basis::Schur,
                terms.into_iter().map(|(i, a, b)| (shapes[i].clone(), q(a, b))),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn inner_product_is_basis_independent(
            (f, g) in (1usize..=10).prop_flat_map(|d| (small_schur(d), small_schur(d)))
        ) {
            let schur_side = inner(&f, &g).unwrap();
            let power_side = inner(&f.in_basis(Basis::Power), &g.in_basis(Basis::Power)).unwrap();
            prop_assert_eq!(&schur_side, &power_side);
            let mixed = inner(&f, &g.in_basis(Basis::Power)).unwrap();
            prop_assert_eq!(schur_side, mixed);
        }
    }
}
