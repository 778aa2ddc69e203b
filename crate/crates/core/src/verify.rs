//! Exhaustive verification suites over bounded instance families.
//!
//! Each suite expands its bounds into a list of [`Instance`]s, runs them in
//! parallel and reports every failed check together with the instance that
//! reproduces it.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chromatic::{acyclic_orientation_sinks, chromatic_symmetric, e_coefficients, sink_sums_agree};
use crate::combinat::{
    clan_graph, enumerate_uios, is_ab_free, naturally_labeled_posets, partitions_of, uio_recognize_with_labeling,
    Graph, Partition, Poset, UnitIntervalOrder,
};
use crate::corrects::{
    chi_psi_check, covering_corrects_count, m_l1_via_corrects, power_via_corrects, verify_cancellations,
};
use crate::error::{Error, Result};
use crate::ghom::{clan_coefficient, coefficient_at, monomial_g, power_g, schur_g, GAnalogueContext};
use crate::lgvgrid::{build_grid, lgv_check, schur_via_lgv};
use crate::linalg::is_identity;
use crate::polyring::Poly;
use crate::symfunc::{cauchy_check, convert, jacobi_trudi_e, newton_p, transition_matrix, Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `X_{K_n} = n!·e_n`
    Complete,
    /// power sums as sums over corrects
    Ppos,
    /// `c_n` counts covering corrects
    Eposn,
    /// determinant of path sums against non-intersecting multipaths
    Lgv,
    /// Schur analogues: monomial positivity and the grid formula
    Gasharov,
    /// acyclic-orientation sinks against e-coefficient sums
    Sink,
    /// truncated Cauchy identity
    Cauchy,
    /// clan graphs from the generating function `T`
    Gnechrom,
    /// cancellations on the `1^k` grid and the χ/ψ bijection
    Involutions,
    /// `m_{l,1}` via corrects
    Thn1,
    /// unit interval orders are the (2+2)- and (3+1)-free posets
    ScottSuppes,
    /// transition matrices and determinant formulas
    Basis,
    /// e-coefficients of clan graphs from `m^G_λ`
    ClanE,
    /// s- and e-coefficients of clan graphs and the positivity implications
    ClanPositivity,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Complete,
        Suite::Ppos,
        Suite::Eposn,
        Suite::Lgv,
        Suite::Gasharov,
        Suite::Sink,
        Suite::Cauchy,
        Suite::Gnechrom,
        Suite::Involutions,
        Suite::Thn1,
        Suite::ScottSuppes,
        Suite::Basis,
        Suite::ClanE,
        Suite::ClanPositivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Complete => "complete",
            Suite::Ppos => "ppos",
            Suite::Eposn => "eposn",
            Suite::Lgv => "lgv",
            Suite::Gasharov => "gasharov",
            Suite::Sink => "sink",
            Suite::Cauchy => "cauchy",
            Suite::Gnechrom => "gnechrom",
            Suite::Involutions => "involutions",
            Suite::Thn1 => "thn1",
            Suite::ScottSuppes => "scott-suppes",
            Suite::Basis => "basis",
            Suite::ClanE => "clan-e",
            Suite::ClanPositivity => "clan-positivity",
        }
    }

    /// Bounds used when none are given.
    pub fn default_bounds(self) -> Bounds {
        let b = Bounds::default();
        match self {
            Suite::Complete => Bounds { max_n: 6, ..b },
            Suite::Ppos => Bounds { max_n: 6, max_k: 6, ..b },
            Suite::Eposn => Bounds { max_n: 6, ..b },
            Suite::Lgv => Bounds { max_n: 4, max_k: 4, ..b },
            Suite::Gasharov => Bounds { max_n: 5, max_k: 5, ..b },
            Suite::Sink => Bounds { max_n: 6, max_graph_n: 5, ..b },
            Suite::Cauchy => Bounds { max_degree: 5, ..b },
            Suite::Gnechrom | Suite::ClanE | Suite::ClanPositivity => Bounds { max_n: 4, ..b },
            Suite::Involutions => Bounds { max_n: 4, max_k: 4, ..b },
            Suite::Thn1 => Bounds { max_n: 6, max_k: 5, ..b },
            Suite::ScottSuppes => Bounds { max_n: 6, ..b },
            Suite::Basis => Bounds { max_degree: 6, ..b },
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse { what: "suite", input: s.to_owned() })
    }
}

/// Size limits for instance generation. Which fields matter depends on the
/// suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// largest UIO or poset size
    pub max_n: usize,
    /// largest sequence length, `|λ|`, or `l`
    pub max_k: usize,
    /// largest vertex count for arbitrary labeled graphs
    pub max_graph_n: usize,
    pub max_degree: usize,
    pub max_alpha_entry: usize,
    pub max_alpha_sum: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_n: 4, max_k: 4, max_graph_n: 5, max_degree: 5, max_alpha_entry: 2, max_alpha_sum: 6 }
    }
}

/// One replayable test case. Unused fields are omitted from JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uio: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<(usize, usize)>>,
}

impl Instance {
    fn of_uio(u: &UnitIntervalOrder) -> Self {
        Self { uio: Some(u.to_string()), ..Self::default() }
    }

    fn uio(&self) -> Result<UnitIntervalOrder> {
        self.uio.as_deref().ok_or_else(|| missing("uio"))?.parse()
    }

    fn k(&self) -> Result<usize> {
        self.k.ok_or_else(|| missing("k"))
    }

    fn n(&self) -> Result<usize> {
        self.n.ok_or_else(|| missing("n"))
    }

    fn degree(&self) -> Result<usize> {
        self.degree.ok_or_else(|| missing("degree"))
    }

    fn partition(&self) -> Result<Partition> {
        self.partition.as_deref().ok_or_else(|| missing("partition"))?.parse()
    }

    fn graph(&self) -> Result<Graph> {
        self.graph.as_deref().ok_or_else(|| missing("graph"))?.parse()
    }

    fn alpha(&self) -> Result<&[usize]> {
        self.alpha.as_deref().ok_or_else(|| missing("alpha"))
    }

    fn poset(&self) -> Result<Poset> {
        Poset::from_relations(self.n()?, self.relations.as_deref().ok_or_else(|| missing("relations"))?)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("instances serialize")
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json().to_string())
    }
}

fn missing(field: &'static str) -> Error {
    Error::BadParameter(format!("instance is missing field {field:?}"))
}

/// Outcome of a single named check on one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Evidence for a failure; `Null` when passed.
    pub detail: Value,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl FnOnce() -> Value) -> Self {
        Self { name: name.to_owned(), passed, detail: if passed { Value::Null } else { detail() } }
    }

    fn equal<T: PartialEq + fmt::Display>(name: &str, left: &T, right: &T) -> Self {
        Self::new(name, left == right, || json!({"left": left.to_string(), "right": right.to_string()}))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub instance: Instance,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: Suite,
    pub outcomes: Vec<Outcome>,
    /// Reported separately from the JSON so output stays reproducible.
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn instance_count(&self) -> usize {
        self.outcomes.len()
    }

    pub fn check_count(&self) -> usize {
        self.outcomes.iter().map(|o| o.checks.len()).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = (&Instance, &Check)> {
        self.outcomes.iter().flat_map(|o| o.checks.iter().filter(|c| !c.passed).map(move |c| (&o.instance, c)))
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures()
            .map(|(i, c)| json!({"instance": i.to_json(), "check": c.name, "detail": c.detail}))
            .collect();
        json!({
            "suite": self.suite.name(),
            "instances": self.instance_count(),
            "checks": self.check_count(),
            "failures": failures,
            "ok": self.passed(),
        })
    }

    /// One row per (instance, check).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,instance,check,passed\n");
        for o in &self.outcomes {
            let instance = csv_quote(&o.instance.to_string());
            for c in &o.checks {
                out.push_str(&format!("{},{},{},{}\n", self.suite, instance, c.name, c.passed));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let failures: Vec<_> = self.failures().collect();
        let mut out = format!(
            "suite {}: {} instances, {} checks, {} failures\n",
            self.suite,
            self.instance_count(),
            self.check_count(),
            failures.len()
        );
        for (i, c) in failures {
            out.push_str(&format!("FAIL {} {} {}\n", c.name, i, c.detail));
        }
        out
    }
}

pub(crate) fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn uios_up_to(max_n: usize) -> impl Iterator<Item = UnitIntervalOrder> {
    (1..=max_n).flat_map(enumerate_uios)
}

/// Vectors in `0..=max_entry` of length `n` with total in `1..=max_sum`,
/// lexicographic.
pub fn alphas(n: usize, max_entry: usize, max_sum: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let base = max_entry + 1;
    for idx in 0..base.pow(n as u32) {
        let a: Vec<usize> = (0..n).rev().map(|i| idx / base.pow(i as u32) % base).collect();
        let s: usize = a.iter().sum();
        if s >= 1 && s <= max_sum {
            out.push(a);
        }
    }
    out
}

/// Expands bounds into the instance list of `suite`, in a fixed order.
pub fn instances(suite: Suite, b: &Bounds) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    match suite {
        Suite::Complete => out.extend((1..=b.max_n).map(|n| Instance { n: Some(n), ..Instance::default() })),
        Suite::Ppos | Suite::Involutions => {
            for u in uios_up_to(b.max_n) {
                out.extend((1..=b.max_k).map(|k| Instance { k: Some(k), ..Instance::of_uio(&u) }));
            }
        }
        Suite::Thn1 => {
            for u in uios_up_to(b.max_n) {
                out.extend((2..=b.max_k).map(|k| Instance { k: Some(k), ..Instance::of_uio(&u) }));
            }
        }
        Suite::Eposn => out.extend(uios_up_to(b.max_n).map(|u| Instance::of_uio(&u))),
        Suite::Lgv | Suite::Gasharov => {
            for u in uios_up_to(b.max_n) {
                for d in 1..=b.max_k {
                    out.extend(
                        partitions_of(d)
                            .into_iter()
                            .map(|l| Instance { partition: Some(l.to_string()), ..Instance::of_uio(&u) }),
                    );
                }
            }
        }
        Suite::Sink => {
            for n in 1..=b.max_graph_n {
                let pairs = n * (n - 1) / 2;
                if pairs >= 63 {
                    return Err(Error::TooLarge(format!("all labeled graphs on {n} vertices")));
                }
                out.extend((0..1u64 << pairs).map(|mask| Instance {
                    graph: Some(Graph::from_edge_mask(n, mask).to_string()),
                    ..Instance::default()
                }));
            }
            out.extend(
                uios_up_to(b.max_n)
                    .map(|u| Instance { graph: Some(u.inc_graph().to_string()), ..Instance::of_uio(&u) }),
            );
        }
        Suite::Cauchy | Suite::Basis => {
            out.extend((1..=b.max_degree).map(|d| Instance { degree: Some(d), ..Instance::default() }))
        }
        Suite::Gnechrom | Suite::ClanE | Suite::ClanPositivity => {
            for u in uios_up_to(b.max_n) {
                out.extend(
                    alphas(u.len(), b.max_alpha_entry, b.max_alpha_sum)
                        .into_iter()
                        .map(|a| Instance { alpha: Some(a), ..Instance::of_uio(&u) }),
                );
            }
        }
        Suite::ScottSuppes => {
            for n in 1..=b.max_n {
                out.extend(naturally_labeled_posets(n)?.into_iter().map(|p| Instance {
                    n: Some(n),
                    relations: Some(p.relations()),
                    ..Instance::default()
                }));
            }
        }
    }
    Ok(out)
}

pub fn run_suite(suite: Suite, bounds: &Bounds) -> Result<VerificationReport> {
    let list = instances(suite, bounds)?;
    Ok(run_instances(suite, list))
}

/// Runs the given instances in parallel; outcomes keep the input order.
pub fn run_instances(suite: Suite, list: Vec<Instance>) -> VerificationReport {
    let start = Instant::now();
    let outcomes = list
        .into_par_iter()
        .map(|instance| {
            let checks = check_instance(suite, &instance)
                .unwrap_or_else(|e| vec![Check::new("error", false, || json!(e.to_string()))]);
            Outcome { instance, checks }
        })
        .collect();
    VerificationReport { suite, outcomes, wall_time: start.elapsed() }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn is_monomial_positive(p: &Poly) -> bool {
    p.terms().all(|(_, c)| !c.is_negative())
}

/// Runs every check of `suite` on one instance.
pub fn check_instance(suite: Suite, inst: &Instance) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    match suite {
        Suite::Complete => {
            let n = inst.n()?;
            let e = convert(&chromatic_symmetric(&Graph::complete(n))?, Basis::E)?;
            let expected = SymFunc::from_integer_terms(Basis::E, [(Partition::row(n), factorial(n))]);
            checks.push(Check::equal("completeGraph", &e, &expected));
        }
        Suite::Ppos => {
            let (u, k) = (inst.uio()?, inst.k()?);
            let ctx = GAnalogueContext::for_uio(&u);
            checks.push(Check::equal("powerSum", &power_via_corrects(&u, k)?, &power_g(&ctx, k)));
        }
        Suite::Eposn => {
            let u = inst.uio()?;
            let n = u.len();
            let cn = e_coefficients(&u.inc_graph())?.get(&Partition::row(n)).cloned().unwrap_or_default();
            let count = BigInt::from(covering_corrects_count(&u));
            checks.push(Check::equal("coveringCount", &count, &cn));
            checks.push(Check::new("nonnegative", !cn.is_negative(), || json!(cn.to_string())));
        }
        Suite::Lgv => {
            let (u, lambda) = (inst.uio()?, inst.partition()?);
            let g = build_grid(&u, lambda.len(), &lambda)?;
            checks
                .push(Check::new("lgv", lgv_check(&g)?, || json!("determinant differs from the non-intersecting sum")));
        }
        Suite::Gasharov => {
            let (u, lambda) = (inst.uio()?, inst.partition()?);
            let ctx = GAnalogueContext::for_uio(&u);
            let s = schur_g(&ctx, &lambda);
            checks.push(Check::new("monomialPositive", is_monomial_positive(&s), || json!(s.to_string())));
            checks.push(Check::equal("gridFormula", &schur_via_lgv(&u, &lambda.conjugate())?, &s));
        }
        Suite::Sink => {
            let g = inst.graph()?;
            let sinks = acyclic_orientation_sinks(&g);
            let coeffs = e_coefficients(&g)?;
            checks.push(Check::new(
                "sinks",
                sink_sums_agree(&sinks, &coeffs),
                || json!({"sinks": format!("{sinks:?}"), "e": format!("{coeffs:?}")}),
            ));
        }
        Suite::Cauchy => {
            let d = inst.degree()?;
            checks.push(Check::new("cauchy", cauchy_check(d, d), || json!(d)));
        }
        Suite::Gnechrom => {
            let (u, alpha) = (inst.uio()?, inst.alpha()?);
            let ctx = GAnalogueContext::for_uio(&u);
            let lhs = clan_coefficient(&ctx, alpha);
            let rhs = chromatic_symmetric(&clan_graph(ctx.graph(), alpha))?;
            checks.push(Check::equal("clanGraph", &lhs, &rhs));
        }
        Suite::Involutions => {
            let (u, k) = (inst.uio()?, inst.k()?);
            let c = verify_cancellations(&u, k)?;
            checks.push(Check::new("cancellation", c.ok(), || c.to_json()));
            let x = chi_psi_check(&u, k)?;
            checks.push(Check::new("chiPsi", x.ok(), || x.to_json()));
        }
        Suite::Thn1 => {
            let (u, l) = (inst.uio()?, inst.k()?);
            let ctx = GAnalogueContext::for_uio(&u);
            let via = m_l1_via_corrects(&u, l)?;
            let newton = &(&power_g(&ctx, l) * &power_g(&ctx, 1)) - &power_g(&ctx, l + 1);
            let m = monomial_g(&ctx, &Partition::from_parts(vec![l, 1]))?;
            checks.push(Check::equal("powerSums", &via, &newton));
            checks.push(Check::equal("monomialG", &via, &m));
            if l + 1 == u.len() {
                checks.push(Check::new("positive", is_monomial_positive(&m), || json!(m.to_string())));
            }
        }
        Suite::ScottSuppes => {
            let p = inst.poset()?;
            let free = is_ab_free(&p, 2, 2) && is_ab_free(&p, 3, 1);
            let recognized = uio_recognize_with_labeling(&p);
            checks.push(Check::new("recognition", recognized.is_some() == free, || json!({"free": free})));
            if let Some((u, labeling)) = recognized {
                checks.push(Check::new("isomorphism", u.to_poset() == p.relabel(&labeling), || json!(u.to_string())));
            }
        }
        Suite::Basis => checks.extend(basis_checks(inst.degree()?)?),
        Suite::ClanE => {
            let (u, alpha) = (inst.uio()?, inst.alpha()?);
            let ctx = GAnalogueContext::for_uio(&u);
            let d: usize = alpha.iter().sum();
            let x = convert(&chromatic_symmetric(&clan_graph(ctx.graph(), alpha))?, Basis::E)?;
            let scale: BigInt = alpha.iter().map(|&a| factorial(a)).product();
            let mut ok = true;
            for lambda in partitions_of(d) {
                let c = x.coeff(&lambda);
                let m = coefficient_at(&monomial_g(&ctx, &lambda)?, alpha) * &scale;
                ok &= c == BigRational::from_integer(m);
            }
            checks.push(Check::new("eCoefficients", ok, || json!(x.to_json())));
        }
        Suite::ClanPositivity => checks.extend(clan_positivity_checks(&inst.uio()?, inst.alpha()?)?),
    }
    Ok(checks)
}

fn basis_checks(d: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut round_trips = true;
    let mut chains = true;
    for a in Basis::ALL {
        for b in Basis::ALL {
            let ab = transition_matrix(a, b, d)?;
            let ba = transition_matrix(b, a, d)?;
            round_trips &= is_identity(ab.compose(&ba)?.entries());
            for c in Basis::ALL {
                let direct = transition_matrix(a, c, d)?;
                chains &= ab.compose(&*transition_matrix(b, c, d)?)?.entries() == direct.entries();
            }
        }
    }
    checks.push(Check::new("roundTrip", round_trips, || json!(d)));
    checks.push(Check::new("composition", chains, || json!(d)));
    let mut jt = true;
    for lambda in partitions_of(d) {
        jt &= jacobi_trudi_e(&lambda) == convert(&SymFunc::basis_element(Basis::S, lambda), Basis::E)?;
    }
    checks.push(Check::new("jacobiTrudi", jt, || json!(d)));
    let p = convert(&SymFunc::basis_element(Basis::P, Partition::row(d)), Basis::E)?;
    checks.push(Check::equal("newton", &newton_p(d), &p));
    Ok(checks)
}

/// `X_{G^α}` has s-coefficients `∏α!·[v^α]s^G_{λ'}` and e-coefficients
/// `∏α!·[v^α]m^G_λ`, so positivity of the analogues in degree `|α|`
/// forces the corresponding positivity of `X_{G^α}`.
fn clan_positivity_checks(u: &UnitIntervalOrder, alpha: &[usize]) -> Result<Vec<Check>> {
    let ctx = GAnalogueContext::for_uio(u);
    let d: usize = alpha.iter().sum();
    let x = chromatic_symmetric(&clan_graph(ctx.graph(), alpha))?;
    let (xs, xe) = (convert(&x, Basis::S)?, convert(&x, Basis::E)?);
    let scale = BigRational::from_integer(alpha.iter().map(|&a| factorial(a)).product());
    let (mut s_match, mut e_match) = (true, true);
    let (mut all_s_pos, mut all_m_pos) = (true, true);
    for lambda in partitions_of(d) {
        let s = schur_g(&ctx, &lambda.conjugate());
        let m = monomial_g(&ctx, &lambda)?;
        all_s_pos &= is_monomial_positive(&s);
        all_m_pos &= is_monomial_positive(&m);
        s_match &= xs.coeff(&lambda) == BigRational::from_integer(coefficient_at(&s, alpha)) * &scale;
        e_match &= xe.coeff(&lambda) == BigRational::from_integer(coefficient_at(&m, alpha)) * &scale;
    }
    Ok(vec![
        Check::new("sCoefficients", s_match, || xs.to_json()),
        Check::new("eCoefficients", e_match, || xe.to_json()),
        Check::new("sForward", !all_s_pos || xs.is_positive(), || xs.to_json()),
        Check::new("eForward", !all_m_pos || xe.is_positive(), || xe.to_json()),
    ])
}
