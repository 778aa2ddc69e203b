//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! The same type carries vertex polynomials in `v_1..v_n`, concrete
//! symmetric polynomials in `x_1..x_N`, and formal polynomials in the
//! elementary generators `e_1, e_2, ...`. Variables are 0-based.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Ring;

/// A monomial as sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Self(vec![(i, 1)])
    }

    /// From `(variable, exponent)` pairs in any order; zero exponents are dropped
    /// and repeated variables merged.
    pub fn from_pairs(pairs: &[(usize, u32)]) -> Self {
        let mut map = BTreeMap::new();
        for &(v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// From a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Self(exps.iter().enumerate().filter(|&(_, &e)| e > 0).map(|(i, &e)| (i, e)).collect())
    }

    /// Product of the listed variables (with repetition).
    pub fn product_of(vars: impl IntoIterator<Item = usize>) -> Self {
        let pairs: Vec<(usize, u32)> = vars.into_iter().map(|v| (v, 1)).collect();
        Self::from_pairs(&pairs)
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.iter().find(|&&(v, _)| v == var).map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff no variable appears with exponent above one.
    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    /// Largest variable index present, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(v, _)| v)
    }

    pub fn dense(&self, len: usize) -> Vec<u32> {
        let mut out = vec![0; len];
        for &(v, e) in &self.0 {
            out[v] = e;
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

/// Graded lexicographic: total degree first, then the exponent of the lowest
/// variable, and so on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for k in 0..a.len().min(b.len()) {
                if a[k].0 != b[k].0 {
                    // the one holding the smaller variable has the larger exponent there
                    return if a[k].0 < b[k].0 { Ordering::Greater } else { Ordering::Less };
                }
                if a[k].1 != b[k].1 {
                    return a[k].1.cmp(&b[k].1);
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "v{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over `Z` in `var_count` variables. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    var_count: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Polynomials in the vertex variables of a graph.
pub type VertexPolynomial = Poly;

impl Poly {
    pub fn zero(var_count: usize) -> Self {
        Self { var_count, terms: BTreeMap::new() }
    }

    pub fn one(var_count: usize) -> Self {
        Self::constant(var_count, BigInt::one())
    }

    pub fn constant(var_count: usize, c: BigInt) -> Self {
        Self::monomial(var_count, Monomial::one(), c)
    }

    pub fn var(var_count: usize, i: usize) -> Self {
        Self::monomial(var_count, Monomial::var(i), BigInt::one())
    }

    pub fn monomial(var_count: usize, m: Monomial, c: BigInt) -> Self {
        assert!(m.max_var().is_none_or(|v| v < var_count), "variable out of range");
        let mut p = Self::zero(var_count);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sum of all variables.
    pub fn var_sum(var_count: usize) -> Self {
        let mut p = Self::zero(var_count);
        for i in 0..var_count {
            p.add_term(Monomial::var(i), BigInt::one());
        }
        p
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.max_var().is_none_or(|v| v < self.var_count));
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_monomial_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        Ok(self.mul_filtered(other, |_| true))
    }

    /// Product keeping only monomials accepted by `keep`. When `keep` rejects
    /// an upward-closed set of monomials this is multiplication in the
    /// quotient by that monomial ideal.
    pub fn mul_filtered(&self, other: &Poly, keep: impl Fn(&Monomial) -> bool) -> Poly {
        let mut out = Poly::zero(self.var_count.max(other.var_count));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if keep(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var_count);
        }
        Poly { var_count: self.var_count, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.var_count);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn retain(&mut self, keep: impl Fn(&Monomial) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }

    /// Same polynomial viewed in a larger variable set.
    pub fn widen(&self, var_count: usize) -> Poly {
        assert!(var_count >= self.var_count);
        Poly { var_count, terms: self.terms.clone() }
    }

    /// Serialization as `[{"exps": [[var, exp], ...], "coeff": c}, ...]` in
    /// ascending graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let exps: Vec<serde_json::Value> =
                        m.pairs().iter().map(|&(v, e)| serde_json::json!([v, e])).collect();
                    serde_json::json!({ "exps": exps, "coeff": bigint_to_json(c) })
                })
                .collect(),
        )
    }

    pub fn from_json(var_count: usize, value: &serde_json::Value) -> Result<Poly> {
        #[derive(Deserialize, Serialize)]
        struct Term {
            exps: Vec<(usize, u32)>,
            coeff: serde_json::Value,
        }
        let terms: Vec<Term> = serde_json::from_value(value.clone())?;
        let mut p = Poly::zero(var_count);
        for t in terms {
            let m = Monomial::from_pairs(&t.exps);
            if m.max_var().is_some_and(|v| v >= var_count) {
                return Err(Error::VariableMismatch(m.max_var().unwrap_or(0) + 1, var_count));
            }
            p.add_term(m, bigint_from_json(&t.coeff)?);
        }
        Ok(p)
    }

    fn check_vars(&self, other: &Poly) -> Result<()> {
        if self.var_count != other.var_count {
            return Err(Error::VariableMismatch(self.var_count, other.var_count));
        }
        Ok(())
    }
}

pub fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

pub fn bigint_from_json(v: &serde_json::Value) -> Result<BigInt> {
    let bad = || Error::Parse { what: "integer coefficient", input: v.to_string() };
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad),
        serde_json::Value::String(s) => s.parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("variable counts agree")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("variable counts agree")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { var_count: self.var_count, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.var_count)
    }
    fn one_like(&self) -> Self {
        Poly::one(self.var_count)
    }
    fn is_nil(&self) -> bool {
        self.terms.is_empty()
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

pub fn poly_add(p: &Poly, q: &Poly) -> Result<Poly> {
    p.try_add(q)
}

pub fn poly_mul(p: &Poly, q: &Poly) -> Result<Poly> {
    p.try_mul(q)
}

pub fn coeff_of(p: &Poly, m: &Monomial) -> BigInt {
    p.coeff(m)
}

pub fn is_monomial_positive(p: &Poly) -> bool {
    p.is_monomial_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn addition_examples() {
        let p = &v(3, 0) + &v(3, 1);
        assert_eq!(&p + &Poly::zero(3), p);
        assert!((&v(3, 0) + &(-&v(3, 0))).is_zero());
        let three = &p + &(&v(3, 0) * &v(3, 1));
        assert_eq!(three.len(), 3);
        assert!(matches!(poly_add(&v(2, 0), &v(3, 0)), Err(Error::VariableMismatch(2, 3))));
        assert!(poly_mul(&v(2, 0), &v(3, 0)).is_err());
    }

    #[test]
    fn multiplication_examples() {
        let p = &v(3, 0) + &v(3, 1);
        assert_eq!(&p * &Poly::one(3), p);
        let sq = &p * &p;
        assert_eq!(sq.coeff(&Monomial::from_pairs(&[(0, 2)])), BigInt::from(1));
        assert_eq!(sq.coeff(&Monomial::from_pairs(&[(0, 1), (1, 1)])), BigInt::from(2));
        assert_eq!(sq.len(), 3);
        let s = &(&v(3, 0) + &v(3, 1)) + &v(3, 2);
        let prod = &s * &(&v(3, 0) * &v(3, 2));
        let expected: Poly = [&[(0, 2), (2, 1)][..], &[(0, 1), (1, 1), (2, 1)], &[(0, 1), (2, 2)]]
            .iter()
            .fold(Poly::zero(3), |acc, m| &acc + &Poly::monomial(3, Monomial::from_pairs(m), BigInt::one()));
        assert_eq!(prod, expected);
    }

    #[test]
    fn coefficients_and_positivity() {
        assert_eq!(coeff_of(&Poly::zero(2), &Monomial::var(0)), BigInt::zero());
        assert!(Poly::zero(3).is_monomial_positive());
        let q = &(&v(3, 0) * &v(3, 1)) - &v(3, 2);
        assert!(!q.is_monomial_positive());
    }

    #[test]
    fn grlex_order() {
        let x2 = Monomial::from_pairs(&[(0, 2)]);
        let xy = Monomial::from_pairs(&[(0, 1), (1, 1)]);
        let y2 = Monomial::from_pairs(&[(1, 2)]);
        let x = Monomial::var(0);
        assert!(x2 > xy && xy > y2 && y2 > x && x > Monomial::one());
        assert!(Monomial::var(0) > Monomial::var(1));
    }

    #[test]
    fn json_round_trip() {
        let p = &(&v(2, 0) + &v(2, 1)).pow(3) - &Poly::constant(2, BigInt::from(7));
        let back = Poly::from_json(2, &p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(Poly::zero(2).to_string(), "0");
        assert_eq!(v(2, 1).to_string(), "v2");
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..6), 0..6).prop_map(|terms| {
            let mut p = Poly::zero(3);
            for (exps, c) in terms {
                p.add_term(Monomial::from_exponents(&exps), BigInt::from(c));
            }
            p
        })
    }

    fn no_zero_terms(p: &Poly) -> bool {
        p.terms().all(|(_, c)| !c.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(no_zero_terms(&(&a * &b)) && no_zero_terms(&(&a - &b)));
        }

        #[test]
        fn degree_is_additive(a in arb_poly(), b in arb_poly()) {
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a * &b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
            }
        }
    }
}
