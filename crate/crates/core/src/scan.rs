//! Search for unit interval orders whose chromatic symmetric function has a
//! negative e-coefficient.

use std::time::{Duration, Instant};

use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chromatic::{chromatic_symmetric_with, ChromaticOptions};
use crate::combinat::{enumerate_uios, UnitIntervalOrder};
use crate::error::{Error, Result};
use crate::symfunc::{convert, Basis, SymFunc};
use crate::verify::csv_quote;

/// Largest UIO size scanned unless the caller raises the cap.
pub const DEFAULT_SCAN_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// every UIO on `1..=max_n` elements
    All,
    /// the orders `P_{n,k}` for `n ≤ max_n`, `k ≤ max_k`
    Pnk,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub family: Family,
    pub max_n: usize,
    /// Every UIO examined, in scan order.
    pub scanned: Vec<UnitIntervalOrder>,
    /// UIOs with at least one negative e-coefficient, in scan order.
    pub negatives: Vec<(UnitIntervalOrder, SymFunc)>,
    pub wall_time: Duration,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.negatives.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let first = self.negatives.first().map(|(u, e)| json!({"uio": u.to_string(), "e": e.to_json()}));
        json!({
            "family": match self.family { Family::All => "all", Family::Pnk => "pnk" },
            "maxN": self.max_n,
            "scanned": self.scanned.len(),
            "negatives": self.negatives.len(),
            "counterexample": first,
            "ok": self.passed(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("uio,check,passed\n");
        for u in &self.scanned {
            let ok = !self.negatives.iter().any(|(v, _)| v == u);
            out.push_str(&format!("{},ePositive,{ok}\n", csv_quote(&u.to_string())));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out =
            format!("scanned {} UIOs, {} with a negative e-coefficient\n", self.scanned.len(), self.negatives.len());
        if let Some((u, e)) = self.negatives.first() {
            out.push_str(&format!("first counterexample {u}: {e}\n"));
        }
        out
    }
}

fn scan_list(family: Family, max_n: usize, max_k: usize) -> Vec<UnitIntervalOrder> {
    match family {
        Family::All => (1..=max_n).flat_map(enumerate_uios).collect(),
        Family::Pnk => {
            (1..=max_n).flat_map(|n| (1..=max_k.min(n)).map(move |k| UnitIntervalOrder::p_nk(n, k))).collect()
        }
    }
}

/// e-expansion of `X_{inc(u)}` via stable partitions.
pub fn e_expansion(u: &UnitIntervalOrder) -> Result<SymFunc> {
    let opts = ChromaticOptions { accelerator: true, ..ChromaticOptions::default() };
    convert(&chromatic_symmetric_with(&u.inc_graph(), &opts)?, Basis::E)
}

pub fn scan_e_positivity(family: Family, max_n: usize, max_k: usize, cap: usize) -> Result<ScanReport> {
    if max_n > cap {
        return Err(Error::TooLarge(format!("scan size {max_n} exceeds the cap {cap}")));
    }
    let start = Instant::now();
    let list = scan_list(family, max_n, max_k);
    let results: Vec<Option<(UnitIntervalOrder, SymFunc)>> = list
        .par_iter()
        .map(|u| {
            let e = e_expansion(u)?;
            let negative = e.terms().any(|(_, c)| c.is_negative());
            Ok(negative.then(|| (u.clone(), e)))
        })
        .collect::<Result<_>>()?;
    Ok(ScanReport {
        family,
        max_n,
        negatives: results.into_iter().flatten().collect(),
        scanned: list,
        wall_time: start.elapsed(),
    })
}
