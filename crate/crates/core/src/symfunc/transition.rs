use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use super::cache::DiskCache;
use super::concrete::monomial_coefficient_row;
use super::func::{parse_rational, Basis, SymFunc};
use super::identities::jacobi_trudi_e;
use crate::combinat::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::linalg::{invert, mat_mul, RationalMatrix};

/// Exact change of basis in one degree: `from_λ = Σ_μ M[λ,μ] to_μ`.
///
/// Rows and columns are indexed by `partitions_of(degree)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    from: Basis,
    to: Basis,
    degree: usize,
    partitions: Vec<Partition>,
    entries: RationalMatrix,
}

impl TransitionMatrix {
    fn new(from: Basis, to: Basis, degree: usize, entries: RationalMatrix) -> Self {
        Self { from, to, degree, partitions: partitions_of(degree), entries }
    }

    pub fn from_basis(&self) -> Basis {
        self.from
    }

    pub fn to_basis(&self) -> Basis {
        self.to
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn entries(&self) -> &RationalMatrix {
        &self.entries
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    /// `M[λ,μ]`; zero when either partition has the wrong weight.
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> BigRational {
        match (self.index_of(lambda), self.index_of(mu)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigRational::zero(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(BigRational::is_integer)
    }

    /// `self · other`, the transition `self.from → other.to`.
    pub fn compose(&self, other: &TransitionMatrix) -> Result<TransitionMatrix> {
        if self.to != other.from || self.degree != other.degree {
            return Err(Error::BadParameter(format!(
                "cannot compose {}→{} (degree {}) with {}→{} (degree {})",
                self.from, self.to, self.degree, other.from, other.to, other.degree
            )));
        }
        Ok(Self::new(self.from, other.to, self.degree, mat_mul(&self.entries, &other.entries)))
    }

    fn body(&self) -> serde_json::Value {
        let mut rows = serde_json::Map::new();
        for (lambda, row) in self.partitions.iter().zip(&self.entries) {
            let mut cols = serde_json::Map::new();
            for (mu, x) in self.partitions.iter().zip(row) {
                if !x.is_zero() {
                    cols.insert(mu.to_string(), serde_json::Value::String(x.to_string()));
                }
            }
            rows.insert(lambda.to_string(), serde_json::Value::Object(cols));
        }
        serde_json::json!({
            "from": self.from.symbol(),
            "to": self.to.symbol(),
            "degree": self.degree,
            "entries": rows,
        })
    }

    fn checksum_of(body: &serde_json::Value) -> String {
        hex::encode(Sha256::digest(body.to_string().as_bytes()))
    }

    /// JSON keyed by partition strings, zero entries omitted, with a SHA-256
    /// checksum over the canonical body.
    pub fn to_json(&self) -> serde_json::Value {
        let mut body = self.body();
        let sum = Self::checksum_of(&body);
        body["checksum"] = serde_json::Value::String(sum);
        body
    }

    pub fn from_json(value: &serde_json::Value) -> Result<TransitionMatrix> {
        let corrupt = |why: &str| Error::CacheCorrupt(why.to_owned());
        let basis = |key: &str| -> Result<Basis> {
            value.get(key).and_then(|b| b.as_str()).ok_or_else(|| corrupt(key))?.parse()
        };
        let (from, to) = (basis("from")?, basis("to")?);
        let degree = value.get("degree").and_then(|d| d.as_u64()).ok_or_else(|| corrupt("degree"))? as usize;
        let rows = value.get("entries").and_then(|e| e.as_object()).ok_or_else(|| corrupt("entries"))?;
        let partitions = partitions_of(degree);
        let index = |key: &str| -> Result<usize> {
            let p: Partition = key.parse().map_err(|_| corrupt(key))?;
            partitions.iter().position(|q| *q == p).ok_or_else(|| corrupt(key))
        };
        let mut entries = vec![vec![BigRational::zero(); partitions.len()]; partitions.len()];
        for (lk, row) in rows {
            let i = index(lk)?;
            for (mk, x) in row.as_object().ok_or_else(|| corrupt(lk))? {
                let j = index(mk)?;
                entries[i][j] = parse_rational(x.as_str().ok_or_else(|| corrupt(mk))?)?;
            }
        }
        let m = Self::new(from, to, degree, entries);
        let stored = value.get("checksum").and_then(|c| c.as_str()).unwrap_or_default();
        if stored != Self::checksum_of(&m.body()) {
            return Err(corrupt(&format!("{from}->{to} degree {degree}: checksum mismatch")));
        }
        Ok(m)
    }
}

type Key = (Basis, Basis, usize);

#[derive(Default)]
struct Engine {
    /// basis → monomial expansion rows, per degree
    to_monomial: RwLock<HashMap<(Basis, usize), Arc<RationalMatrix>>>,
    matrices: RwLock<HashMap<Key, Arc<TransitionMatrix>>>,
    disk: RwLock<Option<DiskCache>>,
}

fn engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::default)
}

/// Makes [`transition_matrix`] read from and write through to `cache`, or
/// stop using disk when `None`. Matrices already in memory are kept.
pub fn configure_disk_cache(cache: Option<DiskCache>) {
    *engine().disk.write().expect("cache lock poisoned") = cache;
}

fn publish<K: std::hash::Hash + Eq, V>(map: &RwLock<HashMap<K, Arc<V>>>, key: K, value: V) -> Arc<V> {
    // the first writer wins; later writers computed the same value
    map.write().expect("cache lock poisoned").entry(key).or_insert_with(|| Arc::new(value)).clone()
}

fn monomial_rows(basis: Basis, d: usize) -> Arc<RationalMatrix> {
    let e = engine();
    if let Some(m) = e.to_monomial.read().expect("cache lock poisoned").get(&(basis, d)) {
        return m.clone();
    }
    let partitions = partitions_of(d);
    let rows: RationalMatrix = match basis {
        Basis::S => {
            let e_rows = monomial_rows(Basis::E, d);
            partitions
                .iter()
                .map(|lambda| {
                    let mut row = vec![BigRational::zero(); partitions.len()];
                    for (nu, c) in jacobi_trudi_e(lambda).terms() {
                        let i = partitions.iter().position(|p| p == nu).expect("same degree");
                        for (slot, x) in row.iter_mut().zip(&e_rows[i]) {
                            *slot += c * x;
                        }
                    }
                    row
                })
                .collect()
        }
        _ => partitions.iter().map(|lambda| monomial_coefficient_row(basis, lambda)).collect(),
    };
    publish(&e.to_monomial, (basis, d), rows)
}

/// Computes a transition matrix without consulting any cache layer.
pub(crate) fn compute_transition(from: Basis, to: Basis, d: usize) -> Result<TransitionMatrix> {
    let k = partitions_of(d).len();
    let entries = if from == to {
        (0..k)
            .map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect()
    } else {
        let source = monomial_rows(from, d);
        if to == Basis::M {
            source.as_ref().clone()
        } else {
            let inv = invert(&monomial_rows(to, d), &format!("{to}-basis expansion in degree {d}"))?;
            mat_mul(&source, &inv)
        }
    };
    Ok(TransitionMatrix::new(from, to, d, entries))
}

/// The exact transition matrix `from → to` in degree `d`, memoized in process
/// and, when configured, on disk.
pub fn transition_matrix(from: Basis, to: Basis, d: usize) -> Result<Arc<TransitionMatrix>> {
    let e = engine();
    let key = (from, to, d);
    if let Some(m) = e.matrices.read().expect("cache lock poisoned").get(&key) {
        return Ok(m.clone());
    }
    let disk = e.disk.read().expect("cache lock poisoned").clone();
    if let Some(disk) = &disk {
        // a corrupt entry is recomputed and overwritten below
        if let Ok(Some(m)) = disk.load(from, to, d) {
            return Ok(publish(&e.matrices, key, m));
        }
    }
    let m = compute_transition(from, to, d)?;
    let published = publish(&e.matrices, key, m);
    if let Some(disk) = &disk {
        disk.store(&published)?;
    }
    Ok(published)
}

/// Re-expresses `f` in the basis `to`, one homogeneous degree at a time.
pub fn convert(f: &SymFunc, to: Basis) -> Result<SymFunc> {
    if f.basis() == to {
        return Ok(f.clone());
    }
    let mut out = SymFunc::zero(to);
    for d in f.degrees() {
        let m = transition_matrix(f.basis(), to, d)?;
        for (lambda, c) in f.homogeneous_component(d).terms() {
            let i = m.index_of(lambda).expect("partition of the component degree");
            for (mu, x) in m.partitions().iter().zip(&m.entries()[i]) {
                if !x.is_zero() {
                    out.add_term(mu.clone(), c * x);
                }
            }
        }
    }
    Ok(out)
}
