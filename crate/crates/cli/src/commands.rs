//! One function per subcommand, each producing an [`ExperimentReport`].

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use hilie_core::characters::{frobenius_char_oracle, mn_char, ORACLE_MAX_N};
use hilie_core::higher_lie::{
    conjugacy_char_total, derangement_char, dimension, gluing_check, higher_lie, hook_partition,
    lie_r, lie_witt_oracle, regular_sum, residual_from, Residual,
};
use hilie_core::partition::factorial;
use hilie_core::sampling::{
    cycle_type, derangement_count, plancherel_exact, plancherel_modal, rsk_shape, uniform_perm,
    virtual_chain, virtual_step, Perm, Rng,
};
use hilie_core::symfunc::{h1_power, lr_coeff, mul_power, Basis, SymFunc};
use hilie_core::tableaux::{f_hook, swanson_check};
use hilie_core::{partitions_of, LieSpec, Partition, Result};

use crate::report::{decimal, float, rational, ExperimentReport};

const RESIDUAL_COLUMNS: [&str; 5] = ["multiplicity", "regular_value", "R", "R_float", "abs_R"];

fn big_rat(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn residual_cells(r: &Residual) -> Vec<String> {
    vec![
        r.multiplicity.to_string(),
        rational(&r.regular_value()),
        rational(&r.residual),
        float(&r.residual),
        rational(&r.residual.abs()),
    ]
}

fn multiplicity(l: &SymFunc, nu: &Partition) -> BigUint {
    l.coeff(nu).to_integer().magnitude().clone()
}

fn finish(mut report: ExperimentReport, start: Instant) -> ExperimentReport {
    report.wall_time = start.elapsed();
    report
}

/// Exact median: the mean of the two middle values for even counts.
pub fn median(values: &[BigRational]) -> BigRational {
    let mut v = values.to_vec();
    v.sort();
    let n = v.len();
    assert!(n > 0, "median of nothing");
    if n % 2 == 1 {
        v[n / 2].clone()
    } else {
        (&v[n / 2 - 1] + &v[n / 2]) / BigRational::from_integer(BigInt::from(2))
    }
}

/// Nearest-rank quantile, `q` in percent.
fn quantile(sorted: &[BigRational], q: usize) -> BigRational {
    let n = sorted.len();
    let rank = (q * n).div_ceil(100).max(1);
    sorted[rank - 1].clone()
}

/// Full Schur expansion of `L_λ` twisted by `r`.
pub fn decompose(lambda: &Partition, r: i64) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut report = ExperimentReport::new(
        "decompose",
        &["lambda", "r", "nu", "multiplicity", "regular_value", "R", "R_float", "abs_R"],
    );
    report.param("lambda", lambda).param("r", r);
    let l = higher_lie(&LieSpec::new(lambda.clone(), r))?;
    for (nu, _) in l.terms() {
        let res = residual_from(lambda, nu, multiplicity(&l, nu));
        let mut row = vec![lambda.to_string(), r.to_string(), nu.to_string()];
        row.extend(residual_cells(&res));
        report.push(row);
    }
    report
        .summary
        .insert("dimension".into(), rational(&dimension(&l)?));
    Ok(finish(report, start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    RegularSum,
    KwWitt,
    Swanson,
    Gluing,
    LrOracle,
    MnOracle,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::RegularSum => "regular-sum",
            Suite::KwWitt => "kw-witt",
            Suite::Swanson => "swanson",
            Suite::Gluing => "gluing",
            Suite::LrOracle => "lr-oracle",
            Suite::MnOracle => "mn-oracle",
            Suite::All => "all",
        }
    }
}

struct Check {
    instance: String,
    ok: bool,
    detail: String,
}

fn check(instance: impl ToString, ok: bool, detail: impl ToString) -> Check {
    Check {
        instance: instance.to_string(),
        ok,
        detail: detail.to_string(),
    }
}

fn run_suite(suite: Suite, nmax: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    match suite {
        Suite::RegularSum => {
            for n in 1..=nmax {
                let ok = regular_sum(n)? == h1_power(n);
                out.push(check(format!("n={n}"), ok, "sum of L_lambda = h_1^n"));
            }
        }
        Suite::KwWitt => {
            for n in 1..=nmax {
                let ok = lie_witt_oracle(n).in_basis(Basis::Schur) == lie_r(n, 1);
                out.push(check(format!("n={n}"), ok, "maj count = Witt formula"));
            }
        }
        Suite::Swanson => {
            for n in 1..=nmax {
                for shape in partitions_of(n) {
                    let mut ok = true;
                    let mut worst = BigRational::zero();
                    for r in 0..n as i64 {
                        let c = swanson_check(&shape, r)?;
                        ok &= c.holds;
                        worst = worst.max(c.gap);
                    }
                    out.push(check(&shape, ok, format!("max gap {}", float(&worst))));
                }
            }
        }
        Suite::Gluing => {
            for n in 2..=nmax {
                for lambda in partitions_of(n) {
                    let sizes = lambda.multiplicities();
                    if sizes.len() < 2 {
                        continue;
                    }
                    let (top, m) = *sizes.last().expect("non-empty");
                    let mu = Partition::new(vec![top; m]);
                    let tau = Partition::new(
                        lambda.parts().iter().copied().filter(|&p| p != top).collect(),
                    );
                    let ok = gluing_check(&mu, &tau)?;
                    out.push(check(format!("{mu}+{tau}"), ok, "L_(mu u tau) = L_mu L_tau"));
                }
            }
        }
        Suite::LrOracle => {
            for total in 0..=nmax {
                for a in 0..=total {
                    for lambda in partitions_of(a) {
                        for mu in partitions_of(total - a) {
                            let product = mul_power(
                                &SymFunc::schur(lambda.clone()),
                                &SymFunc::schur(mu.clone()),
                            )
                            .in_basis(Basis::Schur);
                            let mut ok = true;
                            for nu in partitions_of(total) {
                                let c = lr_coeff(&lambda, &mu, &nu)?;
                                ok &= BigRational::from_integer(BigInt::from(c))
                                    == product.coeff(&nu);
                            }
                            out.push(check(format!("{lambda}*{mu}"), ok, "LR tableaux = power route"));
                        }
                    }
                }
            }
        }
        Suite::MnOracle => {
            let cap = nmax.min(ORACLE_MAX_N);
            for n in 1..=cap {
                let mut ok = true;
                let mut pairs = 0;
                for nu in partitions_of(n) {
                    for mu in partitions_of(n) {
                        ok &= mn_char(&nu, &mu)? == frobenius_char_oracle(&nu, &mu)?;
                        pairs += 1;
                    }
                }
                out.push(check(format!("n={n}"), ok, format!("{pairs} pairs")));
            }
        }
        Suite::All => {
            for s in [
                Suite::RegularSum,
                Suite::KwWitt,
                Suite::Swanson,
                Suite::Gluing,
                Suite::LrOracle,
                Suite::MnOracle,
            ] {
                for c in run_suite(s, nmax)? {
                    out.push(check(format!("{}:{}", s.name(), c.instance), c.ok, c.detail));
                }
            }
        }
    }
    Ok(out)
}

/// Runs a verification suite up to size `nmax`; `passed` is false if any
/// instance fails.
pub fn verify(suite: Suite, nmax: usize) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut report = ExperimentReport::new("verify", &["suite", "instance", "status", "detail"]);
    report.param("suite", suite.name()).param("nmax", nmax);
    let checks = run_suite(suite, nmax)?;
    let failures = checks.iter().filter(|c| !c.ok).count();
    for c in checks {
        report.push(vec![
            suite.name().to_string(),
            c.instance,
            if c.ok { "pass" } else { "fail" }.to_string(),
            c.detail,
        ]);
    }
    report.passed = failures == 0;
    report.summary.insert("failures".into(), failures.to_string());
    Ok(finish(report, start))
}

fn residual_for(lambda: &Partition, nu: &Partition, r: i64) -> Result<Residual> {
    let l = higher_lie(&LieSpec::new(lambda.clone(), r))?;
    Ok(residual_from(lambda, nu, multiplicity(&l, nu)))
}

fn summarize_abs(report: &mut ExperimentReport, abs: &[BigRational]) {
    if abs.is_empty() {
        return;
    }
    let mut sorted = abs.to_vec();
    sorted.sort();
    let med = median(abs);
    report.summary.insert("median_abs_R".into(), rational(&med));
    report.summary.insert("median_abs_R_float".into(), float(&med));
    for q in [25, 75, 90] {
        report
            .summary
            .insert(format!("q{q}_abs_R"), float(&quantile(&sorted, q)));
    }
    report.summary.insert("min_abs_R".into(), float(&sorted[0]));
    report
        .summary
        .insert("max_abs_R".into(), float(sorted.last().expect("non-empty")));
}

/// How `regularity` chooses its `(λ, ν)` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trials {
    /// Every pair of partitions of `n`.
    AllPairs,
    /// `λ` = cycle type of a uniform permutation, `ν` = RSK shape of another.
    Random(usize),
}

/// Residuals for random `(λ, ν)`: trial `t` draws from the child stream
/// `(seed, t)`, first the permutation giving `λ`, then the one giving `ν`.
pub fn regularity(n: usize, trials: Trials, seed: u64, r: i64) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut cols = vec!["trial", "lambda", "nu"];
    cols.extend(RESIDUAL_COLUMNS);
    let mut report = ExperimentReport::new("regularity", &cols);
    report.param("n", n).param("r", r);
    let pairs: Vec<(Partition, Partition)> = match trials {
        Trials::AllPairs => {
            report.param("trials", "all-pairs");
            let all: Vec<Partition> = partitions_of(n).collect();
            all.iter()
                .flat_map(|l| all.iter().map(move |nu| (l.clone(), nu.clone())))
                .collect()
        }
        Trials::Random(count) => {
            report.param("trials", count);
            report.seed = Some(seed);
            (0..count as u64)
                .map(|t| {
                    let mut rng = Rng::child(seed, t);
                    let lambda = cycle_type(&uniform_perm(n, &mut rng));
                    let nu = rsk_shape(&uniform_perm(n, &mut rng));
                    (lambda, nu)
                })
                .collect()
        }
    };
    let residuals: Vec<Residual> = pairs
        .par_iter()
        .map(|(l, nu)| residual_for(l, nu, r))
        .collect::<Result<_>>()?;
    let mut abs = Vec::with_capacity(residuals.len());
    for (t, res) in residuals.iter().enumerate() {
        let mut row = vec![t.to_string(), res.lambda.to_string(), res.nu.to_string()];
        row.extend(residual_cells(res));
        report.push(row);
        abs.push(res.residual.abs());
    }
    summarize_abs(&mut report, &abs);
    Ok(finish(report, start))
}

/// Rectangles `(m^k)`: worst residual over balanced `ν` and the residual at
/// the Plancherel-modal `ν`.
pub fn sweep_rect(ms: &[usize], k: usize, balance_c: &BigRational) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut report = ExperimentReport::new(
        "sweep-rect",
        &[
            "m",
            "k",
            "n",
            "lambda",
            "balanced_count",
            "max_abs_R_balanced",
            "max_abs_R_balanced_float",
            "argmax_nu",
            "modal_nu",
            "modal_multiplicity",
            "modal_R",
            "modal_R_float",
            "regime",
        ],
    );
    report
        .param("m", join(ms))
        .param("k", k)
        .param("balance_c", balance_c);
    let rows: Vec<Vec<String>> = ms
        .par_iter()
        .map(|&m| -> Result<Vec<String>> {
            let lambda = Partition::new(vec![m; k]);
            let n = m * k;
            let l = higher_lie(&LieSpec::lie(lambda.clone()))?;
            let mut best: Option<(BigRational, Partition)> = None;
            let mut balanced = 0;
            for nu in partitions_of(n).filter(|nu| nu.is_balanced(balance_c)) {
                balanced += 1;
                let a = residual_from(&lambda, &nu, multiplicity(&l, &nu)).residual.abs();
                if best.as_ref().is_none_or(|(b, _)| a > *b) {
                    best = Some((a, nu));
                }
            }
            let modal = plancherel_modal(n);
            let at_modal = residual_from(&lambda, &modal, multiplicity(&l, &modal));
            let (max_abs, argmax) = match best {
                Some((a, nu)) => (rational(&a), nu.to_string()),
                None => (String::new(), String::new()),
            };
            let max_float = best_float(&max_abs);
            let regime = if m == 2 && k >= 2 {
                "counterexample: width 2, multiplicities in {0,1}"
            } else {
                "rectangular"
            };
            Ok(vec![
                m.to_string(),
                k.to_string(),
                n.to_string(),
                lambda.to_string(),
                balanced.to_string(),
                max_abs,
                max_float,
                argmax,
                modal.to_string(),
                at_modal.multiplicity.to_string(),
                rational(&at_modal.residual),
                float(&at_modal.residual),
                regime.to_string(),
            ])
        })
        .collect::<Result<_>>()?;
    for row in rows {
        report.push(row);
    }
    Ok(finish(report, start))
}

fn best_float(exact: &str) -> String {
    if exact.is_empty() {
        return String::new();
    }
    let r: BigRational = exact.parse().expect("formatted rational parses");
    float(&r)
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Hooks `(n−k, 1^k)`: every residual plus the vanishing check
/// `ν₁ < k ⟹ multiplicity 0`.
pub fn sweep_hooks(n: usize, ks: &[usize]) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut cols = vec!["k", "lambda", "nu"];
    cols.extend(RESIDUAL_COLUMNS);
    cols.push("vanishing_ok");
    let mut report = ExperimentReport::new("sweep-hooks", &cols);
    report.param("n", n).param("k", join(ks));
    let mut all_ok = true;
    for &k in ks {
        if k >= n {
            return Err(hilie_core::Error::Precondition(format!(
                "hook needs k < n, got k={k}, n={n}"
            )));
        }
        let lambda = hook_partition(n, k);
        let l = higher_lie(&LieSpec::lie(lambda.clone()))?;
        for nu in partitions_of(n) {
            let res = residual_from(&lambda, &nu, multiplicity(&l, &nu));
            let ok = nu.first_row() >= k || res.multiplicity.is_zero();
            all_ok &= ok;
            let mut row = vec![k.to_string(), lambda.to_string(), nu.to_string()];
            row.extend(residual_cells(&res));
            row.push(ok.to_string());
            report.push(row);
        }
    }
    report.passed = all_ok;
    report.summary.insert("vanishing_ok".into(), all_ok.to_string());
    Ok(finish(report, start))
}

/// `1/e` as the alternating series truncated after 40 terms (error below
/// `1/41!`).
pub fn inverse_e() -> BigRational {
    (0..=40)
        .map(|k| {
            let t = BigRational::new(BigInt::one(), BigInt::from(factorial(k)));
            if k % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// One row of the derangement or conjugacy table.
struct TotalRow {
    dim: BigRational,
    expected_dim: BigUint,
    modal: Partition,
    mult: BigUint,
    f: BigUint,
    ratio: BigRational,
    min_mult: BigUint,
    zero_count: usize,
}

fn total_row(total: &SymFunc, n: usize, expected_dim: BigUint) -> Result<TotalRow> {
    let modal = plancherel_modal(n);
    let mult = multiplicity(total, &modal);
    let f = f_hook(&modal);
    let ratio = BigRational::new(BigInt::from(mult.clone()), BigInt::from(f.clone()));
    let mults: Vec<BigUint> = partitions_of(n).map(|nu| multiplicity(total, &nu)).collect();
    Ok(TotalRow {
        dim: dimension(total)?,
        expected_dim,
        modal,
        mult,
        f,
        ratio,
        min_mult: mults.iter().min().cloned().unwrap_or_default(),
        zero_count: mults.iter().filter(|m| m.is_zero()).count(),
    })
}

const TOTAL_COLUMNS: [&str; 12] = [
    "n",
    "dim",
    "expected_dim",
    "dim_ok",
    "modal_nu",
    "multiplicity",
    "f",
    "ratio",
    "ratio_float",
    "deviation",
    "min_multiplicity",
    "zero_multiplicities",
];

fn total_cells(n: usize, row: &TotalRow, target: &BigRational) -> (Vec<String>, bool) {
    let ok = row.dim == big_rat(row.expected_dim.clone());
    let deviation = (&row.ratio - target).abs();
    (
        vec![
            n.to_string(),
            rational(&row.dim),
            row.expected_dim.to_string(),
            ok.to_string(),
            row.modal.to_string(),
            row.mult.to_string(),
            row.f.to_string(),
            rational(&row.ratio),
            float(&row.ratio),
            decimal(&deviation, 20),
            row.min_mult.to_string(),
            row.zero_count.to_string(),
        ],
        ok,
    )
}

/// Per `n ≤ nmax`: dimension of `D_n` against `d_n`, and
/// `|⟨D_n, χ^{ν*}⟩/f^{ν*} − 1/e|` at the Plancherel-modal `ν*`.
pub fn derangement(nmax: usize) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut report = ExperimentReport::new("derangement", &TOTAL_COLUMNS);
    report.param("nmax", nmax);
    let inv_e = inverse_e();
    report.summary.insert("inverse_e".into(), decimal(&inv_e, 20));
    let mut all_ok = true;
    for n in 1..=nmax {
        let row = total_row(&derangement_char(n)?, n, derangement_count(n))?;
        let (cells, ok) = total_cells(n, &row, &inv_e);
        all_ok &= ok;
        report.push(cells);
    }
    report.passed = all_ok;
    Ok(finish(report, start))
}

/// As [`derangement`] for the conjugation character `Σ_λ φ^λ`, whose
/// regular value has ratio 1.
pub fn conjugacy(nmax: usize) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut report = ExperimentReport::new("conjugacy", &TOTAL_COLUMNS);
    report.param("nmax", nmax);
    let one = BigRational::one();
    let mut all_ok = true;
    for n in 1..=nmax {
        let row = total_row(&conjugacy_char_total(n)?, n, factorial(n))?;
        let (cells, ok) = total_cells(n, &row, &one);
        all_ok &= ok;
        report.push(cells);
    }
    report.passed = all_ok;
    Ok(finish(report, start))
}

/// Grows `chains` virtual permutations and reports, at each checkpoint
/// size, the residual of `L_{λ(σ_n)}` at the Plancherel-modal diagram.
pub fn virtual_perms(checkpoints: &[usize], chains: usize, seed: u64) -> Result<ExperimentReport> {
    let start = Instant::now();
    if checkpoints.is_empty() || checkpoints.windows(2).any(|w| w[0] >= w[1]) || checkpoints[0] == 0 {
        return Err(hilie_core::Error::Precondition(
            "checkpoints must be positive and strictly increasing".into(),
        ));
    }
    let mut cols = vec!["chain", "n", "lambda", "nu"];
    cols.extend(RESIDUAL_COLUMNS);
    let mut report = ExperimentReport::new("virtual", &cols);
    report
        .param("checkpoints", join(checkpoints))
        .param("chains", chains);
    report.seed = Some(seed);
    let per_chain: Vec<Vec<(usize, Residual)>> = (0..chains as u64)
        .into_par_iter()
        .map(|c| -> Result<Vec<(usize, Residual)>> {
            let mut rng = Rng::child(seed, c);
            let mut sigma = Perm::identity(0);
            let mut out = Vec::new();
            for &n in checkpoints {
                while sigma.len() < n {
                    sigma = virtual_step(&sigma, &mut rng);
                }
                let lambda = cycle_type(&sigma);
                out.push((n, residual_for(&lambda, &plancherel_modal(n), 1)?));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut by_checkpoint: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
    for (c, rows) in per_chain.iter().enumerate() {
        for (n, res) in rows {
            let mut row = vec![c.to_string(), n.to_string(), res.lambda.to_string(), res.nu.to_string()];
            row.extend(residual_cells(res));
            report.push(row);
            by_checkpoint.entry(*n).or_default().push(res.residual.abs());
        }
    }
    for (n, abs) in by_checkpoint {
        report
            .summary
            .insert(format!("median_abs_R_n{n:03}"), float(&median(&abs)));
    }
    Ok(finish(report, start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SampleKind {
    /// Cycle type of a uniform permutation.
    CycleType,
    /// RSK shape of a uniform permutation.
    Plancherel,
    /// Cycle type of the virtual-permutation chain at size n.
    Virtual,
}

/// Empirical law of a sampler against its exact law: per-partition counts,
/// plus total-variation distance and Pearson χ² in the summary.
pub fn sample(kind: SampleKind, n: usize, count: usize, seed: u64) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut report = ExperimentReport::new(
        "sample",
        &["partition", "count", "empirical", "exact", "exact_float"],
    );
    let kind_name = match kind {
        SampleKind::CycleType => "cycle-type",
        SampleKind::Plancherel => "plancherel",
        SampleKind::Virtual => "virtual",
    };
    report.param("kind", kind_name).param("n", n).param("count", count);
    report.seed = Some(seed);
    let exact: BTreeMap<Partition, BigRational> = match kind {
        SampleKind::Plancherel => plancherel_exact(n),
        _ => {
            let nf = BigInt::from(factorial(n));
            partitions_of(n)
                .map(|l| {
                    let p = BigRational::new(BigInt::from(l.class_size()), nf.clone());
                    (l, p)
                })
                .collect()
        }
    };
    let mut rng = Rng::new(seed);
    let mut counts: BTreeMap<Partition, usize> = BTreeMap::new();
    for _ in 0..count {
        let shape = match kind {
            SampleKind::CycleType => cycle_type(&uniform_perm(n, &mut rng)),
            SampleKind::Plancherel => rsk_shape(&uniform_perm(n, &mut rng)),
            SampleKind::Virtual => cycle_type(&virtual_chain(n, &mut rng)),
        };
        *counts.entry(shape).or_default() += 1;
    }
    let total = BigRational::from_integer(BigInt::from(count.max(1)));
    let mut tv = BigRational::zero();
    let mut chi2 = BigRational::zero();
    for (shape, p) in &exact {
        let c = counts.get(shape).copied().unwrap_or(0);
        let c_rat = BigRational::from_integer(BigInt::from(c));
        let empirical = &c_rat / &total;
        tv += (&empirical - p).abs();
        let expected = p * &total;
        chi2 += (&c_rat - &expected) * (&c_rat - &expected) / expected;
        report.push(vec![
            shape.to_string(),
            c.to_string(),
            float(&empirical),
            rational(p),
            float(p),
        ]);
    }
    tv /= BigRational::from_integer(BigInt::from(2));
    report.summary.insert("total_variation".into(), float(&tv));
    report.summary.insert("chi_square".into(), float(&chi2));
    report
        .summary
        .insert("degrees_of_freedom".into(), (exact.len().saturating_sub(1)).to_string());
    Ok(finish(report, start))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn median_handles_both_parities() {
        assert_eq!(median(&[q(3, 1), q(1, 1), q(2, 1)]), q(2, 1));
        assert_eq!(median(&[q(4, 1), q(1, 1), q(2, 1), q(3, 1)]), q(5, 2));
    }

    #[test]
    fn quantiles_are_nearest_rank() {
        let v: Vec<BigRational> = (1..=10).map(|i| q(i, 1)).collect();
        assert_eq!(quantile(&v, 25), q(3, 1));
        assert_eq!(quantile(&v, 90), q(9, 1));
        assert_eq!(quantile(&v, 100), q(10, 1));
    }

    #[test]
    fn decompose_examples() {
        let r = decompose(&Partition::new(vec![3]), 1).unwrap();
        assert_eq!(r.column_values("nu"), vec!["(2,1)"]);
        assert_eq!(r.column_values("multiplicity"), vec!["1"]);

        let r = decompose(&Partition::column(4), 1).unwrap();
        assert_eq!(r.column_values("nu"), vec!["(4)"]);
        assert_eq!(r.column_values("multiplicity"), vec!["1"]);

        let r = decompose(&Partition::new(vec![2, 2]), 1).unwrap();
        assert_eq!(r.column_values("nu"), vec!["(2,2)", "(1,1,1,1)"]);
        assert_eq!(r.column_values("multiplicity"), vec!["1", "1"]);
    }

    #[test]
    fn verify_suites_pass_at_small_sizes() {
        for suite in [
            Suite::RegularSum,
            Suite::KwWitt,
            Suite::Swanson,
            Suite::Gluing,
            Suite::LrOracle,
            Suite::MnOracle,
        ] {
            let r = verify(suite, 5).unwrap();
            assert!(r.passed, "{suite:?}");
            assert!(!r.rows.is_empty());
        }
        let all = verify(Suite::All, 4).unwrap();
        assert!(all.passed);
    }

    #[test]
    fn hooks_report_vanishing_column() {
        let r = sweep_hooks(9, &[1, 8]).unwrap();
        assert!(r.passed);
        let eight: Vec<(&str, &str)> = r
            .column_values("k")
            .into_iter()
            .zip(r.column_values("multiplicity"))
            .zip(r.column_values("nu"))
            .filter(|((k, m), _)| *k == "8" && *m != "0")
            .map(|((_, m), nu)| (nu, m))
            .collect();
        assert_eq!(eight, vec![("(9)", "1")]);
        assert!(sweep_hooks(5, &[5]).is_err());
    }

    #[test]
    fn rect_sweep_flags_width_two() {
        let c = BigRational::from_integer(BigInt::from(3));
        let r = sweep_rect(&[2, 3], 2, &c).unwrap();
        let regimes = r.column_values("regime");
        assert!(regimes[0].starts_with("counterexample"));
        assert_eq!(regimes[1], "rectangular");

        // k = 1 is the Lie character itself.
        let one = sweep_rect(&[5], 1, &c).unwrap();
        let lie5 = lie_r(5, 1);
        let modal = plancherel_modal(5);
        assert_eq!(
            one.column_values("modal_multiplicity"),
            vec![lie5.coeff(&modal).to_string()]
        );
    }

    #[test]
    fn derangement_rows() {
        let r = derangement(3).unwrap();
        assert!(r.passed);
        // At n = 2 the modal diagram is (2), which Lie_2 = s_(1,1) misses.
        assert_eq!(r.column_values("ratio"), vec!["0", "0", "1/2"]);
        assert_eq!(r.column_values("dim"), vec!["0", "1", "2"]);
    }

    #[test]
    fn virtual_single_chain() {
        let r = virtual_perms(&[1], 1, 0).unwrap();
        assert_eq!(r.column_values("lambda"), vec!["(1)"]);
        assert_eq!(r.column_values("R"), vec!["0"]);
        let two = virtual_perms(&[6, 12], 50, 3).unwrap();
        assert_eq!(two.rows.len(), 100);
        assert!(virtual_perms(&[4, 4], 1, 0).is_err());
    }

    #[test]
    fn inverse_e_is_accurate() {
        assert_eq!(decimal(&inverse_e(), 20), "0.36787944117144232160");
    }
}
