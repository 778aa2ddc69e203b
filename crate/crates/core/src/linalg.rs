//! Determinants over commutative rings and exact rational inversion.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Just enough commutative-ring structure for cofactor expansion.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times_elem(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    /// `k`-fold sum of `self`.
    fn times(&self, k: usize) -> Self {
        (0..k).fold(self.zero_like(), |acc, _| acc.plus(self))
    }
}

macro_rules! num_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn zero_like(&self) -> Self {
                <$t>::zero()
            }
            fn one_like(&self) -> Self {
                <$t>::one()
            }
            fn is_nil(&self) -> bool {
                Zero::is_zero(self)
            }
            fn plus(&self, other: &Self) -> Self {
                self + other
            }
            fn times_elem(&self, other: &Self) -> Self {
                self * other
            }
            fn negated(&self) -> Self {
                -self
            }
        }
    };
}

num_ring!(BigInt);
num_ring!(BigRational);

/// Determinant by cofactor expansion with memoization over column subsets.
///
/// Uses only ring operations, so it is valid over polynomial rings. `unit` is
/// returned for the empty matrix and seeds the zero/one of the ring.
pub fn det<R: Ring>(m: &[Vec<R>], unit: &R) -> R {
    let k = m.len();
    assert!(m.iter().all(|row| row.len() == k), "square matrix required");
    assert!(k < 64);
    let mut memo: HashMap<u64, R> = HashMap::new();
    fn rec<R: Ring>(m: &[Vec<R>], used: u64, memo: &mut HashMap<u64, R>, unit: &R) -> R {
        let row = used.count_ones() as usize;
        if row == m.len() {
            return unit.one_like();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = unit.zero_like();
        let mut free_before = 0;
        for j in 0..m.len() {
            if used >> j & 1 == 1 {
                continue;
            }
            let entry = &m[row][j];
            if !entry.is_nil() {
                let minor = rec(m, used | 1 << j, memo, unit);
                let term = entry.times_elem(&minor);
                acc = if free_before % 2 == 0 { acc.plus(&term) } else { acc.plus(&term.negated()) };
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    rec(m, 0, &mut memo, unit)
}

/// Leibniz-formula determinant; used as an independent check in tests.
pub fn det_leibniz<R: Ring>(m: &[Vec<R>], unit: &R) -> R {
    let k = m.len();
    let mut acc = unit.zero_like();
    for perm in permutations(k) {
        let mut term = unit.one_like();
        for (i, &j) in perm.iter().enumerate() {
            term = term.times_elem(&m[i][j]);
        }
        acc = if permutation_sign(&perm) > 0 { acc.plus(&term) } else { acc.plus(&term.negated()) };
    }
    acc
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in 0..k {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                rec(k, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// `+1` for even permutations, `-1` for odd ones.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

pub type RationalMatrix = Vec<Vec<BigRational>>;

/// Exact inverse by Gauss–Jordan elimination.
pub fn invert(m: &RationalMatrix, what: &str) -> Result<RationalMatrix> {
    let k = m.len();
    let mut a: RationalMatrix = m.to_vec();
    let mut inv: RationalMatrix = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r][col].is_zero()).ok_or_else(|| Error::SingularSystem(what.to_owned()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..k {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..k {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..k {
                let da = &f * &a[col][j];
                let di = &f * &inv[col][j];
                a[r][j] -= da;
                inv[r][j] -= di;
            }
        }
    }
    Ok(inv)
}

pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).fold(BigRational::zero(), |acc, t| acc + &a[i][t] * &b[t][j])).collect())
        .collect()
}

pub fn is_identity(m: &RationalMatrix) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        let one = BigInt::one();
        assert_eq!(det::<BigInt>(&[], &one), one);
        assert_eq!(det(&int_matrix(&[&[1, 2], &[3, 4]]), &one), BigInt::from(-2));
        assert_eq!(det(&int_matrix(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]), &one), BigInt::from(0));
        assert_eq!(det(&int_matrix(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]), &one), BigInt::from(6));
    }

    #[test]
    fn signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
        assert_eq!(permutations(4).len(), 24);
    }

    proptest! {
        #[test]
        fn cofactor_matches_leibniz(entries in prop::collection::vec(-4i64..5, 25)) {
            let m: Vec<Vec<BigInt>> = entries.chunks(5).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let one = BigInt::one();
            prop_assert_eq!(det(&m, &one), det_leibniz(&m, &one));
        }

        #[test]
        fn inverse_composes_to_identity(entries in prop::collection::vec(-4i64..5, 9)) {
            let m: RationalMatrix = entries.chunks(3)
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect();
            let d = det(&m, &BigRational::one());
            match invert(&m, "test") {
                Ok(inv) => prop_assert!(is_identity(&mat_mul(&m, &inv))),
                Err(_) => prop_assert!(d.is_zero()),
            }
        }
    }
}
