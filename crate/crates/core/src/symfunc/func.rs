use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    E,
    M,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::E, Basis::M, Basis::P, Basis::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::M => "m",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "e" => Ok(Basis::E),
            "m" => Ok(Basis::M),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse { what: "basis", input: s.to_owned() }),
        }
    }
}

/// A symmetric function as a finite rational combination of basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymFunc {
    basis: Basis,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        Self { basis, coeffs: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, BigRational::from_integer(1.into()))
    }

    pub fn term(basis: Basis, lambda: Partition, c: BigRational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, c);
        f
    }

    pub fn from_integer_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, BigRational::from_integer(c));
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
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

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in ascending partition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degrees that carry at least one nonzero term.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.coeffs.keys().map(Partition::weight).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn homogeneous_component(&self, d: usize) -> SymFunc {
        Self {
            basis: self.basis,
            coeffs: self.coeffs.iter().filter(|(l, _)| l.weight() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// True iff every stored coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(Signed::is_positive)
    }

    /// Coefficients as integers, failing on the first non-integral one.
    pub fn integer_coeffs(&self) -> Result<BTreeMap<Partition, BigInt>> {
        self.coeffs
            .iter()
            .map(|(l, c)| {
                if c.is_integer() {
                    Ok((l.clone(), c.to_integer()))
                } else {
                    Err(Error::NonIntegral(format!("{}_{{{l}}} coefficient {c}", self.basis)))
                }
            })
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        let mut out = Self::zero(self.basis);
        for (l, x) in &self.coeffs {
            out.add_term(l.clone(), x * c);
        }
        out
    }

    /// Sum of two functions in the same basis.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&BigRational::from_integer((-1).into())))
    }

    /// Product in a multiplicative basis (`e` or `p`), where basis elements
    /// multiply by concatenating partitions.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        self.same_basis(other)?;
        if !matches!(self.basis, Basis::E | Basis::P) {
            return Err(Error::BadParameter(format!(
                "direct product is only defined in the e and p bases, not {}",
                self.basis
            )));
        }
        let mut out = Self::zero(self.basis);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let parts = a.parts().iter().chain(b.parts()).copied().collect();
                out.add_term(Partition::from_parts(parts), x * y);
            }
        }
        Ok(out)
    }

    fn same_basis(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BadParameter(format!("basis mismatch: {} vs {}", self.basis, other.basis)));
        }
        Ok(())
    }

    /// `{"basis": "e", "coeffs": {"2,1": "3", "3": "1/2"}}`
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: serde_json::Map<String, serde_json::Value> =
            self.coeffs.iter().rev().map(|(l, c)| (l.to_string(), serde_json::Value::String(c.to_string()))).collect();
        serde_json::json!({ "basis": self.basis.symbol(), "coeffs": coeffs })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<SymFunc> {
        let bad = || Error::Parse { what: "symmetric function", input: value.to_string() };
        let basis: Basis = value.get("basis").and_then(|b| b.as_str()).ok_or_else(bad)?.parse()?;
        let coeffs = value.get("coeffs").and_then(|c| c.as_object()).ok_or_else(bad)?;
        let mut out = Self::zero(basis);
        for (key, c) in coeffs {
            let lambda: Partition = key.parse()?;
            let c = match c {
                serde_json::Value::String(s) => parse_rational(s)?,
                serde_json::Value::Number(n) => {
                    BigRational::from_integer(n.as_i64().map(BigInt::from).ok_or_else(bad)?)
                }
                _ => return Err(bad()),
            };
            out.add_term(lambda, c);
        }
        Ok(out)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse { what: "rational", input: s.to_owned() };
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let a = c.abs();
            if a != BigRational::from_integer(1.into()) {
                write!(f, "{a}*")?;
            }
            write!(f, "{}[{l}]", self.basis)?;
        }
        Ok(())
    }
}
