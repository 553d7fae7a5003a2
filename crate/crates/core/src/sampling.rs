//! Random permutations, cycle types, Plancherel-distributed diagrams via RSK,
//! and the insertion chain of virtual permutations.
//!
//! All randomness goes through [`Rng`], a ChaCha8 stream seeded from a
//! 64-bit value. Child streams for parallel tasks are derived from a master
//! seed and a task index, so results do not depend on scheduling.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition};
use crate::tableaux::f_hook;

/// Seeded random stream: ChaCha8 keyed by `seed_from_u64(seed)`.
#[derive(Clone, Debug)]
pub struct Rng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for task `task` of a run seeded with `master`.
    pub fn child(master: u64, task: u64) -> Self {
        Rng::new(child_seed(master, task))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        self.inner.gen_range(0..bound)
    }
}

/// SplitMix64 finalizer applied to `master` offset by `task`.
pub fn child_seed(master: u64, task: u64) -> u64 {
    let mut z = master.wrapping_add(task.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A permutation of `{1..n}`, stored 0-based: `images[i]` is the image of
/// `i + 1`, minus one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From one-line notation with values `1..=n`.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Precondition(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v - 1] = true;
            images.push(v - 1);
        }
        Ok(Perm { images })
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &v)| *i == v).count()
    }
}

/// Uniform permutation by a Fisher–Yates shuffle; consumes `n − 1` draws.
pub fn uniform_perm(n: usize, rng: &mut Rng) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i + 1);
        images.swap(i, j);
    }
    Perm { images }
}

/// Cycle lengths as a partition.
pub fn cycle_type(sigma: &Perm) -> Partition {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = sigma.images[x];
            len += 1;
        }
        lengths.push(len);
    }
    Partition::new(lengths)
}

/// Shape of the RSK insertion tableau of the one-line word of `sigma`.
pub fn rsk_shape(sigma: &Perm) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &v in &sigma.images {
        let mut x = v;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y < x);
            if pos == row.len() {
                row.push(x);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    Partition::from_sorted(rows.iter().map(Vec::len).collect())
}

/// `P(λ) = (f^λ)² / n!` for every `λ ⊢ n`.
pub fn plancherel_exact(n: usize) -> BTreeMap<Partition, BigRational> {
    let nf = BigInt::from(factorial(n));
    partitions_of(n)
        .map(|l| {
            let f = BigInt::from(f_hook(&l));
            let p = BigRational::new(&f * &f, nf.clone());
            (l, p)
        })
        .collect()
}

/// The most likely Plancherel diagram (largest `f^λ`); ties go to the
/// earliest partition in canonical order.
pub fn plancherel_modal(n: usize) -> Partition {
    let mut best: Option<(BigUint, Partition)> = None;
    for l in partitions_of(n) {
        let f = f_hook(&l);
        if best.as_ref().is_none_or(|(b, _)| f > *b) {
            best = Some((f, l));
        }
    }
    best.expect("every n has a partition").1
}

/// One step of the virtual-permutation chain: `n + 1` becomes a fixed point
/// with probability `1/(n+1)`, otherwise it is inserted right after a
/// uniformly chosen `j ≤ n` in `j`'s cycle. Consumes one draw.
pub fn virtual_step(sigma: &Perm, rng: &mut Rng) -> Perm {
    let n = sigma.len();
    let choice = rng.below(n + 1);
    let mut images = sigma.images.clone();
    if choice == n {
        images.push(n);
    } else {
        let after = images[choice];
        images[choice] = n;
        images.push(after);
    }
    Perm { images }
}

/// Runs the chain from the empty permutation up to size `n`.
pub fn virtual_chain(n: usize, rng: &mut Rng) -> Perm {
    (0..n).fold(Perm::identity(0), |sigma, _| virtual_step(&sigma, rng))
}

/// `d_n = (n−1)(d_{n−1} + d_{n−2})`, `d_0 = 1`, `d_1 = 0`.
pub fn derangement_count(n: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        let next = BigUint::from(k - 1) * (&prev + &cur);
        prev = cur;
        cur = next;
    }
    cur
}

/// `D_{k,i} = C(k,i) d_{k−i}`: permutations of `k` points with exactly `i`
/// fixed points.
pub fn rencontres(k: usize, i: usize) -> Result<BigUint> {
    if i > k {
        return Err(Error::Precondition(format!("rencontres needs i ≤ k, got {i} > {k}")));
    }
    Ok(binomial(BigUint::from(k), BigUint::from(i)) * derangement_count(k - i))
}
