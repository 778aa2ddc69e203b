use crate::error::{Error, Result};

/// Largest element count for which general posets are enumerated exhaustively.
pub const MAX_POSET_ENUMERATION: usize = 6;

/// A finite strict partial order on `0..n`, stored as successor bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// bit `j` of `above[i]` is set iff `i ≺ j`
    above: Vec<u64>,
}

impl Poset {
    /// Builds a poset from a `less_than(i, j)` predicate, rejecting anything
    /// that is not irreflexive and transitive.
    pub fn from_fn(n: usize, less_than: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooLarge(format!("poset with {n} > 64 elements")));
        }
        let mut above = vec![0u64; n];
        for (i, row) in above.iter_mut().enumerate() {
            for j in 0..n {
                if less_than(i, j) {
                    *row |= 1 << j;
                }
            }
        }
        let p = Self { n, above };
        p.validate()?;
        Ok(p)
    }

    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::InvalidPoset(format!("pair ({a},{b}) out of range")));
        }
        Self::from_fn(n, |i, j| pairs.contains(&(i, j)))
    }

    /// Like [`Poset::from_relations`] but closes the relation transitively first.
    pub fn from_cover_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut reach = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!("pair ({a},{b}) out of range")));
            }
            reach[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        Self::from_fn(n, |i, j| reach[i][j])
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            if self.lt(i, i) {
                return Err(Error::InvalidPoset(format!("{i} ≺ {i}")));
            }
            for j in 0..self.n {
                if self.lt(i, j) && (self.above[j] & !self.above[i]) != 0 {
                    return Err(Error::InvalidPoset(format!("not transitive through {i} ≺ {j}")));
                }
            }
        }
        Ok(())
    }

    pub fn chain(n: usize) -> Self {
        Self::from_fn(n, |i, j| i < j).expect("chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_fn(n, |_, _| false).expect("antichain is a poset")
    }

    /// Disjoint union: `other`'s elements are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Poset) -> Self {
        let n = self.n;
        Self::from_fn(n + other.n, |i, j| {
            if i < n && j < n {
                self.lt(i, j)
            } else if i >= n && j >= n {
                other.lt(i - n, j - n)
            } else {
                false
            }
        })
        .expect("disjoint union of posets is a poset")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i ≺ j`
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above[i] >> j & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) || self.lt(j, i)
    }

    /// All pairs `(i, j)` with `i ≺ j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (0..self.n).filter(move |&j| self.lt(i, j)).map(move |j| (i, j))).collect()
    }

    pub fn up_set(&self, i: usize) -> u64 {
        self.above[i]
    }

    pub fn down_set(&self, i: usize) -> u64 {
        (0..self.n).filter(|&j| self.lt(j, i)).fold(0, |m, j| m | 1 << j)
    }

    /// Relabels: element `i` of the result is element `order[i]` of `self`.
    pub fn relabel(&self, order: &[usize]) -> Self {
        Self::from_fn(self.n, |i, j| self.lt(order[i], order[j])).expect("relabeling preserves order axioms")
    }

    /// All chains (as ascending element lists) with exactly `len` elements.
    pub fn chains_of_length(&self, len: usize) -> Vec<Vec<usize>> {
        fn extend(p: &Poset, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            for j in 0..p.n {
                if cur.last().is_none_or(|&last| p.lt(last, j)) {
                    cur.push(j);
                    extend(p, len, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        if len > 0 {
            extend(self, len, &mut Vec::new(), &mut out);
        }
        out
    }

    /// True iff the poset contains no `a`-chain and `b`-chain whose elements
    /// are pairwise incomparable across the two chains.
    pub fn is_ab_free(&self, a: usize, b: usize) -> bool {
        let chains_a = self.chains_of_length(a);
        let chains_b = self.chains_of_length(b);
        !chains_a.iter().any(|ca| {
            chains_b.iter().any(|cb| ca.iter().all(|&x| cb.iter().all(|&y| x != y && !self.comparable(x, y))))
        })
    }
}

pub fn is_ab_free(p: &Poset, a: usize, b: usize) -> bool {
    p.is_ab_free(a, b)
}

/// Every poset on `0..n` whose order extends the natural order of labels
/// (`i ≺ j ⇒ i < j`). Every unlabeled poset appears at least once.
///
/// Element `j` is added with an arbitrary order ideal of `0..j` as its strict
/// down-set.
pub fn naturally_labeled_posets(n: usize) -> Result<Vec<Poset>> {
    if n > MAX_POSET_ENUMERATION {
        return Err(Error::TooLarge(format!(
            "poset enumeration capped at {MAX_POSET_ENUMERATION} elements, asked for {n}"
        )));
    }
    // below[j] = strict down-set of j
    fn rec(n: usize, below: &mut Vec<u64>, out: &mut Vec<Poset>) {
        let j = below.len();
        if j == n {
            let above =
                (0..n).map(|i| (0..n).filter(|&k| below[k] >> i & 1 == 1).fold(0u64, |m, k| m | 1 << k)).collect();
            out.push(Poset { n, above });
            return;
        }
        for ideal in 0u64..(1 << j) {
            let closed = (0..j).filter(|&i| ideal >> i & 1 == 1).all(|i| below[i] & !ideal == 0);
            if closed {
                below.push(ideal);
                rec(n, below, out);
                below.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    Ok(out)
}
