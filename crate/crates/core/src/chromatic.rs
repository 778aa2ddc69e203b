//! Chromatic symmetric functions, their e- and s-expansions, and the
//! acyclic-orientation sink statistic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinat::{Graph, Partition};
use crate::error::{Error, Result};
use crate::symfunc::{convert, Basis, SymFunc};

/// Largest vertex count the coloring enumeration accepts by default.
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChromaticOptions {
    pub brute_force_limit: usize,
    /// Use the stable-partition expansion instead of enumerating colorings.
    pub accelerator: bool,
}

impl Default for ChromaticOptions {
    fn default() -> Self {
        Self { brute_force_limit: DEFAULT_BRUTE_FORCE_LIMIT, accelerator: false }
    }
}

/// `X_G` in the monomial basis by enumerating proper colorings.
pub fn chromatic_symmetric(g: &Graph) -> Result<SymFunc> {
    chromatic_symmetric_with(g, &ChromaticOptions::default())
}

pub fn chromatic_symmetric_with(g: &Graph, opts: &ChromaticOptions) -> Result<SymFunc> {
    if opts.accelerator {
        return Ok(chromatic_by_stable_partitions(g));
    }
    if g.len() > opts.brute_force_limit {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds the coloring bound {}",
            g.len(),
            opts.brute_force_limit
        )));
    }
    Ok(chromatic_by_colorings(g))
}

/// The coefficient of `m_λ` is the number of proper colorings with colors
/// `1..n` in which color `i` is used exactly `λ_i` times; these are read off
/// every proper coloring whose color counts are weakly decreasing.
pub fn chromatic_by_colorings(g: &Graph) -> SymFunc {
    let n = g.len();
    if n == 0 {
        return SymFunc::basis_element(Basis::M, Partition::empty());
    }
    fn rec(g: &Graph, v: usize, colors: &mut Vec<usize>, counts: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, u64>) {
        let n = g.len();
        if v == n {
            if counts.windows(2).all(|w| w[0] >= w[1]) {
                *out.entry(counts.clone()).or_insert(0) += 1;
            }
            return;
        }
        'color: for c in 0..n {
            let mut nb = g.neighbors(v) & ((1u64 << v) - 1);
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if colors[u] == c {
                    continue 'color;
                }
            }
            colors[v] = c;
            counts[c] += 1;
            rec(g, v + 1, colors, counts, out);
            counts[c] -= 1;
        }
        colors[v] = usize::MAX;
    }
    // shard on the color of vertex 0; each shard is an independent subtree
    let shards: Vec<BTreeMap<Vec<usize>, u64>> = (0..n)
        .into_par_iter()
        .map(|c0| {
            let mut colors = vec![usize::MAX; n];
            let mut counts = vec![0; n];
            colors[0] = c0;
            counts[c0] = 1;
            let mut out = BTreeMap::new();
            rec(g, 1, &mut colors, &mut counts, &mut out);
            out
        })
        .collect();
    let mut total: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for shard in shards {
        for (k, c) in shard {
            *total.entry(k).or_insert(0) += c;
        }
    }
    SymFunc::from_integer_terms(Basis::M, total.into_iter().map(|(k, c)| (Partition::from_parts(k), BigInt::from(c))))
}

/// `X_G = Σ_π r(π)! m_{type(π)}` over partitions `π` of the vertex set into
/// stable sets, where `r(π)!` is the product of factorials of the block-size
/// multiplicities.
pub fn chromatic_by_stable_partitions(g: &Graph) -> SymFunc {
    let n = g.len();
    let mut types: BTreeMap<Partition, u64> = BTreeMap::new();
    fn rec(g: &Graph, v: usize, blocks: &mut Vec<u64>, out: &mut BTreeMap<Partition, u64>) {
        if v == g.len() {
            let sizes = blocks.iter().map(|b| b.count_ones() as usize).collect();
            *out.entry(Partition::from_parts(sizes)).or_insert(0) += 1;
            return;
        }
        for i in 0..blocks.len() {
            if g.neighbors(v) & blocks[i] == 0 {
                blocks[i] |= 1 << v;
                rec(g, v + 1, blocks, out);
                blocks[i] &= !(1 << v);
            }
        }
        blocks.push(1 << v);
        rec(g, v + 1, blocks, out);
        blocks.pop();
    }
    rec(g, 0, &mut Vec::new(), &mut types);
    if n == 0 {
        return SymFunc::basis_element(Basis::M, Partition::empty());
    }
    SymFunc::from_integer_terms(
        Basis::M,
        types.into_iter().map(|(lambda, count)| {
            let aug: BigInt = lambda.multiplicities().values().map(|&r| factorial(r)).product();
            (lambda, aug * count)
        }),
    )
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// The `c_λ` of `X_G = Σ c_λ e_λ`, nonzero entries only.
pub fn e_coefficients(g: &Graph) -> Result<BTreeMap<Partition, BigInt>> {
    convert(&chromatic_symmetric(g)?, Basis::E)?.integer_coeffs()
}

/// Number of acyclic orientations with exactly `j` sinks, for each `j` that
/// occurs.
pub fn acyclic_orientation_sinks(g: &Graph) -> BTreeMap<usize, u64> {
    let n = g.len();
    let edges = g.edges();
    let mut out = BTreeMap::new();
    // reach[v]: vertices reachable from v by a nonempty directed path
    fn rec(edges: &[(usize, usize)], e: usize, reach: &[u64], out_deg: &mut [u32], out: &mut BTreeMap<usize, u64>) {
        if e == edges.len() {
            let sinks = out_deg.iter().filter(|&&d| d == 0).count();
            *out.entry(sinks).or_insert(0) += 1;
            return;
        }
        let (a, b) = edges[e];
        for (from, to) in [(a, b), (b, a)] {
            if reach[to] >> from & 1 == 1 {
                continue;
            }
            let mut next = reach.to_vec();
            let gained = reach[to] | 1 << to;
            for w in 0..reach.len() {
                if w == from || reach[w] >> from & 1 == 1 {
                    next[w] |= gained;
                }
            }
            out_deg[from] += 1;
            rec(edges, e + 1, &next, out_deg, out);
            out_deg[from] -= 1;
        }
    }
    rec(&edges, 0, &vec![0; n], &mut vec![0; n], &mut out);
    out
}

/// Checks that `sink(G, j) = Σ_{ℓ(λ)=j} c_λ` for every `j`.
pub fn check_sink_theorem(g: &Graph) -> Result<bool> {
    Ok(sink_sums_agree(&acyclic_orientation_sinks(g), &e_coefficients(g)?))
}

pub(crate) fn sink_sums_agree(sinks: &BTreeMap<usize, u64>, coeffs: &BTreeMap<Partition, BigInt>) -> bool {
    let mut by_length: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (lambda, c) in coeffs {
        *by_length.entry(lambda.len()).or_default() += c;
    }
    by_length.retain(|_, c| *c != BigInt::from(0));
    let sinks: BTreeMap<usize, BigInt> = sinks.iter().map(|(&j, &c)| (j, BigInt::from(c))).collect();
    sinks == by_length
}

/// Expansions of `X_G` in the m-, e- and s-bases with positivity flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticExpansion {
    pub graph: String,
    pub m: SymFunc,
    pub e: SymFunc,
    pub s: SymFunc,
    pub e_positive: bool,
    pub s_positive: bool,
    pub sink_check: bool,
}

impl ChromaticExpansion {
    pub fn in_basis(&self, basis: Basis) -> Result<SymFunc> {
        match basis {
            Basis::M => Ok(self.m.clone()),
            Basis::E => Ok(self.e.clone()),
            Basis::S => Ok(self.s.clone()),
            Basis::P => convert(&self.m, Basis::P),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "graph": self.graph,
            "m": integral_map(&self.m),
            "e": integral_map(&self.e),
            "s": integral_map(&self.s),
            "ePositive": self.e_positive,
            "sPositive": self.s_positive,
            "sinkCheck": self.sink_check,
        })
    }
}

/// Partition-keyed coefficient map; integers stay JSON numbers while they fit.
pub fn integral_map(f: &SymFunc) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = f
        .terms()
        .rev()
        .map(|(l, c)| {
            let v = if c.is_integer() {
                crate::polyring::bigint_to_json(&c.to_integer())
            } else {
                serde_json::Value::String(c.to_string())
            };
            (l.to_string(), v)
        })
        .collect();
    serde_json::Value::Object(map)
}

pub fn positivity_report(g: &Graph) -> Result<ChromaticExpansion> {
    positivity_report_with(g, &ChromaticOptions::default())
}

pub fn positivity_report_with(g: &Graph, opts: &ChromaticOptions) -> Result<ChromaticExpansion> {
    let m = chromatic_symmetric_with(g, opts)?;
    let e = convert(&m, Basis::E)?;
    let s = convert(&m, Basis::S)?;
    let coeffs = e.integer_coeffs()?;
    s.integer_coeffs()?;
    let sink_check = sink_sums_agree(&acyclic_orientation_sinks(g), &coeffs);
    Ok(ChromaticExpansion {
        graph: g.to_string(),
        e_positive: e.is_positive(),
        s_positive: s.is_positive(),
        m,
        e,
        s,
        sink_check,
    })
}
