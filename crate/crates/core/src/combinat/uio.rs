use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::graph::{inc_graph, Graph};
use super::poset::Poset;
use crate::error::{Error, Result};

/// A unit interval order on elements `0..n`, labeled by increasing position on
/// the real line.
///
/// Element `i` corresponds to `v_{i+1}`. The order is stored as its
/// next-vector: `next(i)` is the smallest element strictly above `i`, or `n`
/// when nothing is. Element `j` lies above `i` iff `j >= next(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitIntervalOrder {
    next: Vec<usize>,
}

impl UnitIntervalOrder {
    /// Builds from the 1-based next-vector used in text encodings
    /// (`next[i] ∈ {i+2, ..., n+1}` for 0-based `i`).
    pub fn from_next(next: &[usize]) -> Result<Self> {
        let n = next.len();
        let bad = |reason: String| Error::MalformedNext { next: next.to_vec(), reason };
        if n == 0 {
            return Err(bad("empty next-vector".into()));
        }
        if n > 64 {
            return Err(bad("more than 64 elements".into()));
        }
        for (i, &v) in next.iter().enumerate() {
            if v <= i + 1 {
                return Err(bad(format!("next[{}] = {v} is not above its element", i + 1)));
            }
            if v > n + 1 {
                return Err(bad(format!("next[{}] = {v} exceeds n+1 = {}", i + 1, n + 1)));
            }
        }
        if let Some(i) = next.windows(2).position(|w| w[0] > w[1]) {
            return Err(bad(format!("not nondecreasing at position {}", i + 1)));
        }
        Ok(Self { next: next.iter().map(|&v| v - 1).collect() })
    }

    pub fn antichain(n: usize) -> Self {
        Self { next: vec![n; n] }
    }

    pub fn chain(n: usize) -> Self {
        Self { next: (1..=n).collect() }
    }

    /// `P_{n,k} = { i/(k+1) : i = 1..n }`; `k = 1` gives the points `i/2`.
    pub fn p_nk(n: usize, k: usize) -> Self {
        let points: Vec<BigRational> =
            (1..=n).map(|i| BigRational::new(BigInt::from(i), BigInt::from(k + 1))).collect();
        uio_from_points(&points).expect("points are sorted")
    }

    pub fn len(&self) -> usize {
        self.next.len()
    }

    pub fn is_empty(&self) -> bool {
        self.next.is_empty()
    }

    /// 0-based `next(i)`; equals `len()` when nothing lies above `i`.
    pub fn next_of(&self, i: usize) -> usize {
        self.next[i]
    }

    /// The 1-based next-vector of the text encoding.
    pub fn next_vector(&self) -> Vec<usize> {
        self.next.iter().map(|&v| v + 1).collect()
    }

    /// `a ≻ b`
    pub fn gt(&self, a: usize, b: usize) -> bool {
        a >= self.next[b]
    }

    /// `a ≺ b`
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.gt(b, a)
    }

    /// `a ~ b`: neither lies above the other (includes `a == b`).
    pub fn similar(&self, a: usize, b: usize) -> bool {
        !self.gt(a, b) && !self.gt(b, a)
    }

    pub fn to_poset(&self) -> Poset {
        Poset::from_fn(self.len(), |i, j| self.lt(i, j)).expect("next-vectors induce strict orders")
    }

    pub fn inc_graph(&self) -> Graph {
        inc_graph(&self.to_poset())
    }

    /// True iff `set` (bitmask of elements) is a chain.
    pub fn is_chain(&self, set: u64) -> bool {
        let elems: Vec<usize> = (0..self.len()).filter(|&i| set >> i & 1 == 1).collect();
        elems.windows(2).all(|w| self.lt(w[0], w[1]))
    }
}

impl fmt::Display for UnitIntervalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.next_vector().iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for UnitIntervalOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let next = s
            .trim()
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { what: "unit interval order", input: s.to_owned() })?;
        Self::from_next(&next)
    }
}

impl Serialize for UnitIntervalOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn uio_from_next(next: &[usize]) -> Result<UnitIntervalOrder> {
    UnitIntervalOrder::from_next(next)
}

/// `next(i) = min { j : points[j] >= points[i] + 1 }`. Points must be sorted.
pub fn uio_from_points(points: &[BigRational]) -> Result<UnitIntervalOrder> {
    if points.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadParameter("points must be sorted nondecreasing".into()));
    }
    if points.is_empty() {
        return Err(Error::BadParameter("at least one point is required".into()));
    }
    let one = BigRational::one();
    let n = points.len();
    let next = (0..n)
        .map(|i| {
            let bound = &points[i] + &one;
            (i + 1..n).find(|&j| points[j] >= bound).unwrap_or(n)
        })
        .collect();
    Ok(UnitIntervalOrder { next })
}

/// Strictly increasing rational points realizing `u`.
///
/// Point `j` is placed strictly between the last forced lower bound and the
/// first incomparable predecessor's upper bound; the result is re-read with
/// [`uio_from_points`] and checked.
pub fn realize(u: &UnitIntervalOrder) -> Vec<BigRational> {
    let n = u.len();
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut points: Vec<BigRational> = Vec::with_capacity(n);
    points.push(BigRational::zero());
    for j in 1..n {
        // elements 0..below lie under j; below..j are incomparable with j
        let below = (0..j).take_while(|&i| u.next_of(i) <= j).count();
        let mut lower = points[j - 1].clone();
        if below > 0 {
            let forced = &points[below - 1] + &one;
            if forced > lower {
                lower = forced;
            }
        }
        let upper = if below < j { &points[below] + &one } else { &lower + &one };
        points.push((lower + upper) / &two);
    }
    debug_assert_eq!(uio_from_points(&points).ok().as_ref(), Some(u));
    points
}

/// All unit interval orders on `n` elements in lexicographic next-vector order.
pub fn enumerate_uios(n: usize) -> Vec<UnitIntervalOrder> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<UnitIntervalOrder>) {
        let i = cur.len();
        if i == n {
            out.push(UnitIntervalOrder { next: cur.clone() });
            return;
        }
        let lo = cur.last().copied().unwrap_or(0).max(i + 1);
        for v in lo..=n {
            cur.push(v);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Returns a unit interval order isomorphic to `p` when `p` is (2+2)- and
/// (3+1)-free, and `None` otherwise.
pub fn uio_recognize(p: &Poset) -> Option<UnitIntervalOrder> {
    uio_recognize_with_labeling(p).map(|(u, _)| u)
}

/// Like [`uio_recognize`], also returning the labeling: element `i` of the
/// order is element `labeling[i]` of `p`.
///
/// Candidates are sorted by down-set size ascending, then up-set size
/// descending; the induced relation must then have the staircase form.
pub fn uio_recognize_with_labeling(p: &Poset) -> Option<(UnitIntervalOrder, Vec<usize>)> {
    let n = p.len();
    if n == 0 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (p.down_set(i).count_ones(), std::cmp::Reverse(p.up_set(i).count_ones())));
    let relabeled = p.relabel(&order);
    let next: Vec<usize> = (0..n).map(|i| (i + 1..n).find(|&j| relabeled.lt(i, j)).unwrap_or(n)).collect();
    if next.windows(2).any(|w| w[0] > w[1]) {
        return None;
    }
    let u = UnitIntervalOrder { next };
    (u.to_poset() == relabeled).then_some((u, order))
}
