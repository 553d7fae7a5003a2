//! Higher Lie characters and their twisted variants, as symmetric functions.
//!
//! `lie_r(i, r)` has Schur coefficient at `ν` equal to the number of standard
//! tableaux of shape `ν` with major index `≡ r (mod i)`; `r = 1` is the Lie
//! character and `r = 0` the character of `S_i` acting on an `i`-cycle's
//! centralizer cosets. A general `L_λ` is the product over part sizes `i` of
//! `h_{m_i}[lie_r(i, r)]`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{
    h1_power, inner, mul_power, omega, plethysm_h_power, Basis, SymFunc,
};
use crate::tableaux::{f_hook, maj_mod_profile};

/// Which character to build: the cycle type `λ` and the twist `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieSpec {
    pub lambda: Partition,
    pub twist: i64,
}

impl LieSpec {
    pub fn new(lambda: Partition, twist: i64) -> Self {
        LieSpec { lambda, twist }
    }

    /// The higher Lie character `ψ^λ`.
    pub fn lie(lambda: Partition) -> Self {
        LieSpec::new(lambda, 1)
    }

    /// The conjugacy character `φ^λ`.
    pub fn conjugacy(lambda: Partition) -> Self {
        LieSpec::new(lambda, 0)
    }
}

fn reduce(r: i64, i: usize) -> usize {
    r.rem_euclid(i as i64) as usize
}

type Memo<K> = OnceLock<Mutex<HashMap<K, SymFunc>>>;

fn memoized<K, F>(memo: &'static Memo<K>, key: K, build: F) -> SymFunc
where
    K: std::hash::Hash + Eq,
    F: FnOnce() -> SymFunc,
{
    let map = memo.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = map.lock().unwrap().get(&key) {
        return f.clone();
    }
    let f = build();
    map.lock().unwrap().entry(key).or_insert(f).clone()
}

/// `Σ_ν #{T ∈ SYT(ν) : maj T ≡ r (mod n)} s_ν`; `lie_r(n, 1)` is `Lie_n`.
pub fn lie_r(n: usize, r: i64) -> SymFunc {
    assert!(n >= 1, "lie_r needs n ≥ 1");
    static MEMO: Memo<(usize, usize)> = OnceLock::new();
    let residue = reduce(r, n);
    memoized(&MEMO, (n, residue), || {
        let terms = partitions_of(n).map(|nu| {
            let count = maj_mod_profile(&nu, n).counts[residue].clone();
            (nu, BigRational::from_integer(BigInt::from(count)))
        });
        SymFunc::from_terms(n, Basis::Schur, terms).expect("partitions of n")
    })
}

fn lie_r_power(i: usize, r: i64) -> SymFunc {
    static MEMO: Memo<(usize, usize)> = OnceLock::new();
    let residue = reduce(r, i);
    memoized(&MEMO, (i, residue), || {
        lie_r(i, residue as i64).in_basis(Basis::Power)
    })
}

/// Möbius function by trial division.
pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut result = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

/// `Lie_n = (1/n) Σ_{d | n} μ(d) p_d^{n/d}`, in the power-sum basis.
///
/// Built without tableaux, for cross-checking [`lie_r`].
pub fn lie_witt_oracle(n: usize) -> SymFunc {
    assert!(n >= 1, "lie_witt_oracle needs n ≥ 1");
    let terms = (1..=n).filter(|d| n.is_multiple_of(*d)).filter_map(|d| {
        let mu = mobius(d);
        (mu != 0).then(|| {
            (
                Partition::from_sorted(vec![d; n / d]),
                BigRational::new(BigInt::from(mu), BigInt::from(n)),
            )
        })
    });
    SymFunc::from_terms(n, Basis::Power, terms).expect("divisor partitions have size n")
}

/// `L_λ` twisted by `r`, in the power-sum basis, through plethysm for every
/// part size.
pub fn higher_lie_power_via_plethysm(spec: &LieSpec) -> SymFunc {
    let mut acc = SymFunc::one(Basis::Power);
    for (i, m) in spec.lambda.multiplicities() {
        let factor = plethysm_h_power(m, &lie_r_power(i, spec.twist));
        acc = mul_power(&acc, &factor);
    }
    acc
}

/// `L_λ` twisted by `r`, in the power-sum basis. Partitions with distinct
/// parts skip plethysm: `h_1[f] = f`.
pub fn higher_lie_power(spec: &LieSpec) -> SymFunc {
    let distinct = spec.lambda.multiplicities().iter().all(|&(_, m)| m == 1);
    if !distinct {
        return higher_lie_power_via_plethysm(spec);
    }
    spec.lambda
        .parts()
        .iter()
        .rev()
        .fold(SymFunc::one(Basis::Power), |acc, &i| {
            mul_power(&acc, &lie_r_power(i, spec.twist))
        })
}

/// `L_λ` twisted by `r` in the Schur basis. Fails with an integrality error
/// if any coefficient is not a non-negative integer.
pub fn higher_lie(spec: &LieSpec) -> Result<SymFunc> {
    static MEMO: OnceLock<Mutex<HashMap<LieSpec, SymFunc>>> = OnceLock::new();
    let map = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    // Twists only matter modulo the lcm of the part sizes.
    let period = spec
        .lambda
        .parts()
        .iter()
        .fold(1usize, |acc, &p| acc.lcm(&p));
    let key = LieSpec::new(spec.lambda.clone(), spec.twist.rem_euclid(period as i64));
    if let Some(f) = map.lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let schur = higher_lie_power(&key).in_basis(Basis::Schur);
    schur.schur_naturals().map_err(|e| match e {
        Error::Integrality(msg) => {
            Error::Integrality(format!("L_{} twist {}: {msg}", spec.lambda, spec.twist))
        }
        other => other,
    })?;
    map.lock().unwrap().insert(key, schur.clone());
    Ok(schur)
}

/// `Σ_{λ ⊢ n} L_λ`, which equals `h_1^n`.
pub fn regular_sum(n: usize) -> Result<SymFunc> {
    sum_over(n, 1, |_| true)
}

/// `Σ L_λ` over `λ ⊢ n` without parts equal to 1.
pub fn derangement_char(n: usize) -> Result<SymFunc> {
    sum_over(n, 1, |l| l.multiplicity(1) == 0)
}

/// `Σ_{λ ⊢ n} φ^λ`, the character of `S_n` acting on itself by conjugation.
pub fn conjugacy_char_total(n: usize) -> Result<SymFunc> {
    sum_over(n, 0, |_| true)
}

fn sum_over<F: Fn(&Partition) -> bool>(n: usize, twist: i64, keep: F) -> Result<SymFunc> {
    let mut total = SymFunc::zero(n, Basis::Schur);
    for lambda in partitions_of(n).filter(|l| keep(l)) {
        total = total.add(&higher_lie(&LieSpec::new(lambda, twist))?)?;
    }
    Ok(total)
}

/// `ω Lie_n`: the top cohomology of the partition lattice.
pub fn top_cohomology_char(n: usize) -> SymFunc {
    omega(&lie_r(n, 1))
}

/// A multiplicity compared with its regular value: `mult = (f^ν/z_λ)(1+R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub lambda: Partition,
    pub nu: Partition,
    pub multiplicity: BigUint,
    pub residual: BigRational,
}

impl Residual {
    /// `f^ν / z_λ`.
    pub fn regular_value(&self) -> BigRational {
        BigRational::new(BigInt::from(f_hook(&self.nu)), BigInt::from(self.lambda.z()))
    }
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Residual", 4)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("nu", &self.nu)?;
        st.serialize_field("multiplicity", &self.multiplicity.to_string())?;
        st.serialize_field("R", &self.residual.to_string())?;
        st.end()
    }
}

/// `R = z_λ · mult / f^ν − 1` for the multiplicity of `s_ν` in `L_λ`.
pub fn residual_from(lambda: &Partition, nu: &Partition, multiplicity: BigUint) -> Residual {
    let ratio = BigRational::new(
        BigInt::from(lambda.z()) * BigInt::from(multiplicity.clone()),
        BigInt::from(f_hook(nu)),
    );
    Residual {
        lambda: lambda.clone(),
        nu: nu.clone(),
        multiplicity,
        residual: ratio - BigRational::one(),
    }
}

pub fn regularity_residual(spec: &LieSpec, nu: &Partition) -> Result<Residual> {
    if spec.lambda.size() != nu.size() {
        return Err(Error::Precondition(format!(
            "|{}| ≠ |{nu}|",
            spec.lambda
        )));
    }
    let l = higher_lie(spec)?;
    let mult = l.coeff(nu).to_integer().magnitude().clone();
    Ok(residual_from(&spec.lambda, nu, mult))
}

/// Whether `L_{μ∪τ} = L_μ L_τ` for partitions without a common part size.
pub fn gluing_check(mu: &Partition, tau: &Partition) -> Result<bool> {
    if mu.shares_part_with(tau) {
        return Err(Error::Precondition(format!(
            "{mu} and {tau} share a part size"
        )));
    }
    let glued = higher_lie(&LieSpec::lie(mu.disjoint_union(tau)))?;
    let product = mul_power(
        &higher_lie(&LieSpec::lie(mu.clone()))?,
        &higher_lie(&LieSpec::lie(tau.clone()))?,
    );
    Ok(glued.same_function(&product))
}

/// Whether every `s_ν` in `L_{(n−k,1^k)}` has `ν₁ ≥ k`.
pub fn hook_support_check(n: usize, k: usize) -> Result<bool> {
    if n == 0 || k >= n {
        return Err(Error::Precondition(format!("need 0 ≤ k < n, got n={n} k={k}")));
    }
    let hook = hook_partition(n, k);
    let l = higher_lie(&LieSpec::lie(hook))?;
    let ok = l.terms().all(|(nu, _)| nu.first_row() >= k);
    Ok(ok)
}

/// `(n−k, 1^k)`.
pub fn hook_partition(n: usize, k: usize) -> Partition {
    let mut parts = vec![n - k];
    parts.extend(std::iter::repeat_n(1, k));
    Partition::new(parts)
}

/// `⟨f, h_1^n⟩`, the dimension of the character with Frobenius image `f`.
pub fn dimension(f: &SymFunc) -> Result<BigRational> {
    if f.is_zero() {
        return Ok(BigRational::zero());
    }
    inner(f, &h1_power(f.degree()))
}
