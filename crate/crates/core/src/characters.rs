//! Irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule on beta-sets. Complete tables
//! are kept in a process-wide store and can be persisted as JSON files, one
//! per `n`, under a cache directory.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Environment variable naming the character-table cache directory.
pub const CACHE_DIR_ENV: &str = "HILIE_CACHE_DIR";
const CACHE_VERSION: u32 = 1;

thread_local! {
    static MN_MEMO: RefCell<HashMap<(Partition, Vec<usize>), BigInt>> = RefCell::new(HashMap::new());
}

/// `χ^ν(μ)` by the Murnaghan–Nakayama rule, removing the largest part of
/// `μ` first. Memoized per thread on `(ν, remaining parts of μ)`.
pub fn mn_char(nu: &Partition, mu: &Partition) -> Result<BigInt> {
    if nu.size() != mu.size() {
        return Err(Error::Precondition(format!(
            "character χ^{nu} evaluated at class {mu} of a different size"
        )));
    }
    Ok(mn_rec(nu, mu.parts()))
}

fn mn_rec(nu: &Partition, rest: &[usize]) -> BigInt {
    let Some((&k, tail)) = rest.split_first() else {
        return BigInt::one();
    };
    if rest.iter().all(|&p| p == 1) {
        // Only single boxes left: χ^ν(1^m) = f^ν.
        return BigInt::from(crate::tableaux::f_hook(nu));
    }
    let key = (nu.clone(), rest.to_vec());
    if let Some(v) = MN_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let mut total = BigInt::zero();
    for (smaller, sign) in remove_rim_hooks(nu, k) {
        let v = mn_rec(&smaller, tail);
        if sign > 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    MN_MEMO.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

/// Every way to remove a rim hook of `len` boxes from `shape`, with the
/// sign `(-1)^{height}`.
pub fn remove_rim_hooks(shape: &Partition, len: usize) -> Vec<(Partition, i32)> {
    let l = shape.len();
    let beta: Vec<usize> = (0..l).map(|i| shape.part(i) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < len {
            continue;
        }
        let target = b - len;
        if beta.contains(&target) {
            continue;
        }
        // Beads strictly between target and b are the rows the hook crosses.
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_sorted(parts), sign));
    }
    out
}

/// The full character table of `S_n`; rows are characters `ν`, columns are
/// classes `μ`, both in canonical (reverse lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: usize,
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl CharTable {
    /// Computes every value, rows in parallel.
    pub fn compute(n: usize) -> CharTable {
        let order: Vec<Partition> = partitions_of(n).collect();
        let values = order
            .par_iter()
            .map(|nu| order.iter().map(|mu| mn_rec(nu, mu.parts())).collect())
            .collect();
        CharTable::from_parts(n, order, values)
    }

    fn from_parts(n: usize, order: Vec<Partition>, values: Vec<Vec<BigInt>>) -> CharTable {
        let index = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharTable {
            n,
            order,
            index,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^ν(μ)`; panics when either partition is not of size `n`.
    pub fn value(&self, nu: &Partition, mu: &Partition) -> &BigInt {
        let i = self.index[nu];
        let j = self.index[mu];
        &self.values[i][j]
    }

    pub fn row(&self, nu: &Partition) -> &[BigInt] {
        &self.values[self.index[nu]]
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    fn to_file(&self) -> CacheFile {
        let values: Vec<Vec<String>> = self
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect();
        let checksum = checksum(self.n, &self.order, &values);
        CacheFile {
            version: CACHE_VERSION,
            n: self.n,
            order: self.order.clone(),
            values,
            checksum,
        }
    }

    fn from_file(file: CacheFile) -> Option<CharTable> {
        if file.version != CACHE_VERSION
            || file.checksum != checksum(file.n, &file.order, &file.values)
        {
            return None;
        }
        let expected: Vec<Partition> = partitions_of(file.n).collect();
        if file.order != expected
            || file.values.len() != expected.len()
            || file.values.iter().any(|r| r.len() != expected.len())
        {
            return None;
        }
        let values = file
            .values
            .iter()
            .map(|row| row.iter().map(|s| s.parse::<BigInt>().ok()).collect())
            .collect::<Option<Vec<Vec<BigInt>>>>()?;
        Some(CharTable::from_parts(file.n, file.order, values))
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    n: usize,
    order: Vec<Partition>,
    values: Vec<Vec<String>>,
    checksum: String,
}

fn checksum(n: usize, order: &[Partition], values: &[Vec<String>]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(n.to_string().as_bytes());
    hasher.update(serde_json::to_vec(order).expect("partitions serialize"));
    hasher.update(serde_json::to_vec(values).expect("strings serialize"));
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Where a table returned by [`char_table`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    /// Computed; no cache directory was in use.
    Computed,
    /// Read from a valid cache file.
    Loaded,
    /// Computed and written to a new cache file.
    Written,
    /// The cache file was unreadable or corrupt; recomputed and overwritten.
    Repaired,
}

pub fn cache_file_name(n: usize) -> String {
    format!("chartab-v{CACHE_VERSION}-n{n}.json")
}

/// The cache directory to use: an explicit flag wins over the environment.
pub fn resolve_cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
}

/// The character table of `S_n`, read from or persisted to `cache_dir` when
/// one is given. A corrupt cache file is recomputed and replaced.
pub fn char_table(n: usize, cache_dir: Option<&Path>) -> Result<(CharTable, CacheStatus)> {
    if n == 0 {
        return Err(Error::Precondition("character tables need n ≥ 1".into()));
    }
    let Some(dir) = cache_dir else {
        return Ok((CharTable::compute(n), CacheStatus::Computed));
    };
    let path = dir.join(cache_file_name(n));
    let mut status = CacheStatus::Written;
    if path.exists() {
        let loaded = fs::read(&path)
            .ok()
            .and_then(|bytes| serde_json::from_slice::<CacheFile>(&bytes).ok())
            .filter(|file| file.n == n)
            .and_then(CharTable::from_file);
        match loaded {
            Some(table) => return Ok((table, CacheStatus::Loaded)),
            None => {
                log::warn!(
                    "character table cache {} is corrupt; recomputing",
                    path.display()
                );
                status = CacheStatus::Repaired;
            }
        }
    }
    let table = CharTable::compute(n);
    write_atomic(dir, &path, &serde_json::to_vec(&table.to_file())?)?;
    Ok((table, status))
}

fn write_atomic(dir: &Path, path: &Path, bytes: &[u8]) -> Result<()> {
    let io = |source| Error::CacheIo {
        path: path.to_path_buf(),
        source,
    };
    fs::create_dir_all(dir).map_err(io)?;
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    fs::write(&tmp, bytes).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

struct Store {
    cache_dir: Option<PathBuf>,
    tables: HashMap<usize, Arc<CharTable>>,
}

fn store() -> &'static Mutex<Store> {
    static STORE: OnceLock<Mutex<Store>> = OnceLock::new();
    STORE.get_or_init(|| {
        Mutex::new(Store {
            cache_dir: None,
            tables: HashMap::new(),
        })
    })
}

/// Sets the directory used by [`table`] for persistent tables.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    store().lock().unwrap().cache_dir = dir;
}

/// The shared, in-memory table for `S_n`, built on first use.
///
/// Uses the directory set by [`set_cache_dir`]; cache I/O failures fall back
/// to an uncached computation with a warning.
pub fn table(n: usize) -> Arc<CharTable> {
    let dir = {
        let guard = store().lock().unwrap();
        if let Some(t) = guard.tables.get(&n) {
            return Arc::clone(t);
        }
        guard.cache_dir.clone()
    };
    let built = match char_table(n, dir.as_deref()) {
        Ok((t, status)) => {
            log::info!("character table n={n}: {status:?}");
            t
        }
        Err(e) => {
            log::warn!("character table cache unavailable: {e}");
            CharTable::compute(n)
        }
    };
    let mut guard = store().lock().unwrap();
    Arc::clone(guard.tables.entry(n).or_insert_with(|| Arc::new(built)))
}

/// Largest `n` accepted by [`frobenius_char_oracle`].
pub const ORACLE_MAX_N: usize = 8;

/// `χ^ν(μ)` as the coefficient of `x^{ν+δ}` in `p_μ · ∏_{i<j}(x_i − x_j)`
/// over `n` variables, by direct polynomial multiplication.
///
/// Exponential in `n`; it shares nothing with [`mn_char`] and exists to check
/// it. Monomials that cannot divide the target are dropped as they appear.
pub fn frobenius_char_oracle(nu: &Partition, mu: &Partition) -> Result<BigInt> {
    let n = nu.size();
    if mu.size() != n {
        return Err(Error::Precondition(format!("{nu} and {mu} differ in size")));
    }
    if n > ORACLE_MAX_N {
        return Err(Error::Precondition(format!(
            "oracle refuses n = {n} > {ORACLE_MAX_N}"
        )));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let target: Vec<u8> = (0..n).map(|i| (nu.part(i) + n - 1 - i) as u8).collect();
    let fits = |e: &[u8]| e.iter().zip(&target).all(|(a, b)| a <= b);

    type Poly = HashMap<Vec<u8>, BigInt>;
    let mut poly: Poly = HashMap::from([(vec![0u8; n], BigInt::one())]);

    for &k in mu.parts() {
        let mut next: Poly = HashMap::new();
        for (e, c) in &poly {
            for v in 0..n {
                let mut e2 = e.clone();
                e2[v] += k as u8;
                if fits(&e2) {
                    *next.entry(e2).or_insert_with(BigInt::zero) += c;
                }
            }
        }
        poly = next;
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut next: Poly = HashMap::new();
            for (e, c) in &poly {
                let mut ei = e.clone();
                ei[i] += 1;
                if fits(&ei) {
                    *next.entry(ei).or_insert_with(BigInt::zero) += c;
                }
                let mut ej = e.clone();
                ej[j] += 1;
                if fits(&ej) {
                    *next.entry(ej).or_insert_with(BigInt::zero) -= c;
                }
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
    }
    Ok(poly.remove(&target).unwrap_or_else(BigInt::zero))
}
