//! Correct sequences and the power-sum, covering and `m_{l,1}` expansions
//! built from them, together with the sign-reversing involutions on
//! multipaths of the `λ = 1^k` grid.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{Partition, UnitIntervalOrder};
use crate::error::{Error, Result};
use crate::ghom::{power_g, GAnalogueContext};
use crate::lgvgrid::{build_grid, enumerate_multipaths, GridPath, GridSpec, GridVertex, Multipath};
use crate::polyring::{Monomial, Poly};

/// Cap on `n^k` for exhaustive correct-sequence enumeration.
pub const CORRECTS_BUDGET: u128 = 100_000_000;

/// `w_i ⊁ w_{i+1}` for consecutive entries.
fn no_descents(u: &UnitIntervalOrder, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| !u.gt(w[0], w[1]))
}

/// Literal definition: `w_i ⊁ w_{i+1}` for all `i`, and every `w_j` with
/// `j ≥ 2` has some earlier `w_i ⊀ w_j`.
pub fn is_correct(u: &UnitIntervalOrder, seq: &[usize]) -> bool {
    let literal =
        !seq.is_empty() && no_descents(u, seq) && (1..seq.len()).all(|j| seq[..j].iter().any(|&wi| !u.lt(wi, seq[j])));
    debug_assert_eq!(literal, !seq.is_empty() && no_descents(u, seq) && is_prefix_connected(u, seq));
    literal
}

/// Each prefix, as a set, is connected in the incomparability relation.
pub fn is_prefix_connected(u: &UnitIntervalOrder, seq: &[usize]) -> bool {
    (1..=seq.len()).all(|j| {
        let set: BTreeSet<usize> = seq[..j].iter().copied().collect();
        let elems: Vec<usize> = set.into_iter().collect();
        let mut reached = vec![false; elems.len()];
        reached[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for t in 0..elems.len() {
                if !reached[t] && u.similar(elems[i], elems[t]) {
                    reached[t] = true;
                    stack.push(t);
                }
            }
        }
        reached.into_iter().all(|r| r)
    })
}

fn check_budget(u: &UnitIntervalOrder, k: usize) -> Result<()> {
    let size = (u.len() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > CORRECTS_BUDGET {
        return Err(Error::TooLarge(format!("{}^{k} candidate sequences exceed {CORRECTS_BUDGET}", u.len())));
    }
    Ok(())
}

/// Depth-first generation that checks both conditions as each entry is
/// appended; visits corrects in lexicographic order.
fn for_each_correct(u: &UnitIntervalOrder, k: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(u: &UnitIntervalOrder, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for w in 0..u.len() {
            if let Some(&last) = cur.last() {
                if u.gt(last, w) || !cur.iter().any(|&wi| !u.lt(wi, w)) {
                    continue;
                }
            }
            cur.push(w);
            rec(u, k, cur, visit);
            cur.pop();
        }
    }
    if k > 0 {
        rec(u, k, &mut Vec::new(), &mut visit);
    }
}

/// All corrects of length `k`, lexicographically.
pub fn enumerate_corrects(u: &UnitIntervalOrder, k: usize) -> Result<Vec<Vec<usize>>> {
    check_budget(u, k)?;
    let mut out = Vec::new();
    for_each_correct(u, k, |s| out.push(s.to_vec()));
    Ok(out)
}

/// `Σ w_1···w_k` over corrects of length `k`.
pub fn power_via_corrects(u: &UnitIntervalOrder, k: usize) -> Result<Poly> {
    check_budget(u, k)?;
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let n = u.len();
    for_each_correct(u, k, |s| {
        let mut exps = vec![0usize; n];
        for &w in s {
            exps[w] += 1;
        }
        *counts.entry(exps).or_insert(0) += 1;
    });
    Ok(poly_from_counts(n, counts))
}

fn poly_from_counts(n: usize, counts: BTreeMap<Vec<usize>, u64>) -> Poly {
    let mut out = Poly::zero(n);
    for (exps, c) in counts {
        let e: Vec<u32> = exps.iter().map(|&x| x as u32).collect();
        out.add_term(Monomial::from_exponents(&e), BigInt::from(c));
    }
    out
}

/// Number of corrects of length `n` that use every element exactly once.
pub fn covering_corrects_count(u: &UnitIntervalOrder) -> u64 {
    fn rec(u: &UnitIntervalOrder, used: u64, cur: &mut Vec<usize>) -> u64 {
        let n = u.len();
        if cur.len() == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used >> w & 1 == 1 {
                continue;
            }
            if let Some(&last) = cur.last() {
                if u.gt(last, w) || !cur.iter().any(|&wi| !u.lt(wi, w)) {
                    continue;
                }
            }
            cur.push(w);
            total += rec(u, used | 1 << w, cur);
            cur.pop();
        }
        total
    }
    rec(u, 0, &mut Vec::new())
}

/// `Σ w_1···w_l·z` over corrects `w` of length `l` and elements `z` with
/// `z` above every entry of `w` or `z ≺ w_l`.
pub fn m_l1_via_corrects(u: &UnitIntervalOrder, l: usize) -> Result<Poly> {
    if l < 2 {
        return Err(Error::BadParameter(format!("the m_(l,1) expansion needs l >= 2, got {l}")));
    }
    check_budget(u, l + 1)?;
    let n = u.len();
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for_each_correct(u, l, |w| {
        let last = *w.last().expect("l >= 2");
        for z in 0..n {
            if w.iter().all(|&wi| u.gt(z, wi)) || u.lt(z, last) {
                let mut exps = vec![0usize; n];
                for &x in w.iter().chain([&z]) {
                    exps[x] += 1;
                }
                *counts.entry(exps).or_insert(0) += 1;
            }
        }
    });
    Ok(poly_from_counts(n, counts))
}

/// Among vertices shared by two or more paths: least column, then greatest
/// row. Exactly two paths must pass through it.
pub fn leftmost_lowest_intersection(mp: &Multipath) -> Result<GridVertex> {
    let shared = mp.shared_vertices();
    let (&z, owners) = shared
        .iter()
        .min_by(|(a, _), (b, _)| a.col.cmp(&b.col).then(b.row.cmp(&a.row)))
        .ok_or(Error::NotIntersecting)?;
    if owners.len() > 2 {
        return Err(Error::TriplePoint { col: z.col, row: z.row });
    }
    Ok(z)
}

/// Swaps the tails after `z` of the two paths through the leftmost lowest
/// intersection `z`.
pub fn delta_switch(mp: &Multipath) -> Result<Multipath> {
    let z = leftmost_lowest_intersection(mp)?;
    let owners = &mp.shared_vertices()[&z];
    let (i, j) = (owners[0], owners[1]);
    let (head_i, tail_i) = mp.paths()[i].split_at(z).expect("z lies on path i");
    let (head_j, tail_j) = mp.paths()[j].split_at(z).expect("z lies on path j");
    let mut paths = mp.paths().to_vec();
    paths[i] = GridPath::joined(head_i, tail_j);
    paths[j] = GridPath::joined(head_j, tail_i);
    let mut sigma = mp.sigma().to_vec();
    sigma.swap(i, j);
    Ok(Multipath::from_parts(paths, sigma))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// non-intersecting with a correct weight vector
    P,
    /// intersecting; neither path through `z` ends at `b_1`
    I,
    /// intersecting with the chain-then-tail weight shape
    J,
    /// non-intersecting with a weight vector that is not correct
    L,
    Other,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassTag::P => "P",
            ClassTag::I => "I",
            ClassTag::J => "J",
            ClassTag::L => "L",
            ClassTag::Other => "other",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultipathClass {
    pub tag: ClassTag,
    /// Leftmost lowest intersection, for intersecting multipaths.
    pub z: Option<GridVertex>,
}

/// Splits a weight vector of the `1^k` geometry as `(1^{l-1}, chain, tail)`
/// with `l ≥ 2`, returning `l` when the shape and its non-crossing
/// conditions hold.
fn j_shape(u: &UnitIntervalOrder, mp: &Multipath) -> Option<usize> {
    let w = mp.weight_vector();
    let k = w.len();
    let l = w.iter().position(|p| !p.is_empty())? + 1;
    let chain = &w[l - 1];
    if l < 2 || chain.len() != l {
        return None;
    }
    let tail = &w[l..];
    if tail.iter().any(|t| t.len() != 1) {
        return None;
    }
    let tail: Vec<usize> = tail.iter().map(|t| t[0]).collect();
    let sigma_ok = (0..k).all(|i| {
        let expected = if i < l - 1 {
            i + 1
        } else if i == l - 1 {
            0
        } else {
            i
        };
        mp.sigma()[i] == expected
    });
    let first_ok = tail.first().is_none_or(|&t| !u.gt(chain[0], t));
    (sigma_ok && first_ok && no_descents(u, &tail)).then_some(l)
}

pub fn classify_multipath(g: &GridSpec, mp: &Multipath) -> Result<MultipathClass> {
    if !g.is_column_shape() {
        return Err(Error::WrongShape);
    }
    let u = g.uio();
    if !mp.is_intersecting() {
        let w = mp.weight_vector();
        let singles = w.iter().all(|p| p.len() == 1) && mp.sigma().iter().enumerate().all(|(i, &j)| i == j);
        let seq: Vec<usize> = w.iter().filter_map(|p| p.first().copied()).collect();
        let tag = if singles && is_correct(u, &seq) { ClassTag::P } else { ClassTag::L };
        return Ok(MultipathClass { tag, z: None });
    }
    let z = leftmost_lowest_intersection(mp)?;
    let owners = &mp.shared_vertices()[&z];
    let tag = if owners.iter().all(|&i| mp.sigma()[i] != 0) {
        ClassTag::I
    } else if j_shape(u, mp).is_some() {
        ClassTag::J
    } else {
        ClassTag::Other
    };
    Ok(MultipathClass { tag, z: Some(z) })
}

/// Outcome of the cancellation argument on all multipaths of the `1^k` grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellationReport {
    pub uio: UnitIntervalOrder,
    pub k: usize,
    pub class_counts: BTreeMap<ClassTag, usize>,
    /// `Σ_I sign·multiplier·w`
    pub sum_i: Poly,
    /// `Σ sign·multiplier·w` over intersecting-or-not multipaths outside `I ∪ P`
    pub sum_rest: Poly,
    /// `Σ_{J ⊔ L} sign·w`
    pub sum_jl: Poly,
    /// `Σ_Ω sign·multiplier·w`
    pub total: Poly,
    /// `Σ_P w`
    pub sum_p: Poly,
    pub pk: Poly,
    /// `δ_z` maps `I` to itself as a sign-reversing, multiplier- and
    /// weight-preserving involution.
    pub delta_ok: bool,
    /// Distinct multipaths have distinct weight vectors.
    pub weights_injective: bool,
}

impl CancellationReport {
    pub fn ok(&self) -> bool {
        self.sum_i.is_zero()
            && self.sum_rest.is_zero()
            && self.sum_jl == self.sum_rest
            && self.total == self.pk
            && self.sum_p == self.pk
            && self.delta_ok
            && self.weights_injective
    }

    pub fn to_json(&self) -> serde_json::Value {
        let counts: serde_json::Map<String, serde_json::Value> =
            self.class_counts.iter().map(|(t, c)| (t.to_string(), (*c).into())).collect();
        serde_json::json!({
            "uio": self.uio.to_string(),
            "k": self.k,
            "sumI": self.sum_i.to_string(),
            "sumJL": self.sum_jl.to_string(),
            "sumRest": self.sum_rest.to_string(),
            "total": self.total.to_json(),
            "pk": self.pk.to_json(),
            "classCounts": counts,
            "deltaInvolution": self.delta_ok,
            "weightsInjective": self.weights_injective,
            "ok": self.ok(),
        })
    }
}

pub fn verify_cancellations(u: &UnitIntervalOrder, k: usize) -> Result<CancellationReport> {
    let n = u.len();
    let g = build_grid(u, k, &Partition::column(k))?;
    let all = enumerate_multipaths(&g)?;
    let mut class_counts = BTreeMap::new();
    let (mut sum_i, mut sum_rest, mut sum_jl, mut total, mut sum_p) =
        (Poly::zero(n), Poly::zero(n), Poly::zero(n), Poly::zero(n), Poly::zero(n));
    let mut delta_ok = true;
    let mut seen_weights = BTreeSet::new();
    let mut weights_injective = true;
    for mp in &all {
        let class = classify_multipath(&g, mp)?;
        *class_counts.entry(class.tag).or_insert(0) += 1;
        weights_injective &= seen_weights.insert(mp.weight_vector());
        let signed_mult = BigInt::from(mp.sign()) * BigInt::from(mp.multiplier());
        total.add_term(mp.weight(), signed_mult.clone());
        match class.tag {
            ClassTag::I => {
                sum_i.add_term(mp.weight(), signed_mult);
                let image = delta_switch(mp)?;
                delta_ok &= classify_multipath(&g, &image)?.tag == ClassTag::I
                    && image.sign() == -mp.sign()
                    && image.multiplier() == mp.multiplier()
                    && image.weight() == mp.weight()
                    && delta_switch(&image)? == *mp;
            }
            ClassTag::P => sum_p.add_term(mp.weight(), BigInt::one()),
            tag => {
                sum_rest.add_term(mp.weight(), signed_mult);
                if matches!(tag, ClassTag::J | ClassTag::L) {
                    sum_jl.add_term(mp.weight(), BigInt::from(mp.sign()));
                }
            }
        }
    }
    let pk = power_g(&GAnalogueContext::for_uio(u), k);
    Ok(CancellationReport {
        uio: u.clone(),
        k,
        class_counts,
        sum_i,
        sum_rest,
        sum_jl,
        total,
        sum_p,
        pk,
        delta_ok,
        weights_injective,
    })
}

/// An element of `J ⊔ L ⊔ P` at the level of weight sequences: a `≺`-chain
/// `seq[..l]` followed by single-element tail entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainTail {
    pub l: usize,
    pub seq: Vec<usize>,
}

impl ChainTail {
    pub fn sign(&self) -> i32 {
        if self.l % 2 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn chain(&self) -> &[usize] {
        &self.seq[..self.l]
    }

    pub fn tail(&self) -> &[usize] {
        &self.seq[self.l..]
    }

    pub fn weight(&self) -> Monomial {
        Monomial::product_of(self.seq.iter().copied())
    }

    /// Tail positions (indices into `seq`) whose entry lies above every
    /// earlier entry.
    pub fn records(&self, u: &UnitIntervalOrder) -> Vec<usize> {
        (self.l..self.seq.len()).filter(|&m| self.seq[..m].iter().all(|&q| u.gt(self.seq[m], q))).collect()
    }

    pub fn is_valid(&self, u: &UnitIntervalOrder) -> bool {
        let chain_ok = self.l >= 1 && self.l <= self.seq.len() && self.chain().windows(2).all(|w| u.lt(w[0], w[1]));
        chain_ok && self.tail().first().is_none_or(|&t| !u.gt(self.seq[0], t)) && no_descents(u, self.tail())
    }

    /// Weight vector of the corresponding multipath of the `1^k` grid.
    pub fn weight_vector(&self) -> Vec<Vec<usize>> {
        let mut w = vec![Vec::new(); self.l - 1];
        w.push(self.chain().to_vec());
        w.extend(self.tail().iter().map(|&t| vec![t]));
        w
    }

    pub fn side(&self, u: &UnitIntervalOrder) -> Side {
        match (self.l, self.records(u).is_empty()) {
            (1, true) => Side::P,
            (_, true) => Side::A,
            (_, false) => Side::B,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    P,
    A,
    B,
}

/// All valid chain-tail elements of total length `k`.
pub fn enumerate_chain_tails(u: &UnitIntervalOrder, k: usize) -> Result<Vec<ChainTail>> {
    check_budget(u, k)?;
    let mut out = Vec::new();
    for l in 1..=k {
        for chain in u.to_poset().chains_of_length(l) {
            fn rec(u: &UnitIntervalOrder, k: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<ChainTail>) {
                if cur.len() == k {
                    out.push(ChainTail { l, seq: cur.clone() });
                    return;
                }
                for t in 0..u.len() {
                    let prev = if cur.len() == l { cur[0] } else { *cur.last().expect("nonempty") };
                    if !u.gt(prev, t) {
                        cur.push(t);
                        rec(u, k, l, cur, out);
                        cur.pop();
                    }
                }
            }
            let mut cur = chain;
            rec(u, k, l, &mut cur, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

/// Where `χ` reinserts the removed chain top into the tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionRule {
    /// Before the first tail entry the top does not lie above.
    FirstNotDominated,
    /// After the last tail entry the top lies above. Experimental: not
    /// inverse to `ψ` in general.
    LastDominated,
}

/// `χ: A → B`: move the chain top into the tail.
pub fn chi(u: &UnitIntervalOrder, a: &ChainTail, rule: InsertionRule) -> ChainTail {
    assert!(a.l >= 2, "χ needs a chain of length at least 2");
    let top = a.seq[a.l - 1];
    let tail = a.tail();
    let pos = match rule {
        InsertionRule::FirstNotDominated => tail.iter().position(|&t| !u.gt(top, t)).unwrap_or(tail.len()),
        InsertionRule::LastDominated => tail.iter().rposition(|&t| u.gt(top, t)).map_or(0, |j| j + 1),
    };
    let mut seq = a.seq[..a.l - 1].to_vec();
    seq.extend_from_slice(&tail[..pos]);
    seq.push(top);
    seq.extend_from_slice(&tail[pos..]);
    ChainTail { l: a.l - 1, seq }
}

/// `ψ: B → A`: move the last tail record onto the top of the chain.
pub fn psi(u: &UnitIntervalOrder, b: &ChainTail) -> Option<ChainTail> {
    let m = *b.records(u).last()?;
    let mut seq = b.seq.clone();
    let top = seq.remove(m);
    seq.insert(b.l, top);
    Some(ChainTail { l: b.l + 1, seq })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiPsiReport {
    pub uio: UnitIntervalOrder,
    pub k: usize,
    pub size_a: usize,
    pub size_b: usize,
    pub size_p: usize,
    /// `ψ∘χ = id_A`, `χ∘ψ = id_B`, both preserve weight and flip sign.
    pub bijection_ok: bool,
    /// `Σ_{A ⊔ B} sign·w`
    pub signed_sum: Poly,
    /// The multipaths tagged `J` or `L` are exactly the images of `A ⊔ B`;
    /// `None` when the multipath enumeration exceeds its budget.
    pub geometry_matches: Option<bool>,
    /// Elements of `A` on which the last-dominated insertion rule fails to
    /// be inverted by `ψ`.
    pub literal_rule_failures: usize,
}

impl ChiPsiReport {
    pub fn ok(&self) -> bool {
        self.bijection_ok && self.signed_sum.is_zero() && self.geometry_matches != Some(false)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "uio": self.uio.to_string(),
            "k": self.k,
            "A": self.size_a,
            "B": self.size_b,
            "P": self.size_p,
            "bijection": self.bijection_ok,
            "signedSum": self.signed_sum.to_string(),
            "geometryMatches": self.geometry_matches,
            "literalRuleFailures": self.literal_rule_failures,
            "ok": self.ok(),
        })
    }
}

pub fn chi_psi_check(u: &UnitIntervalOrder, k: usize) -> Result<ChiPsiReport> {
    let n = u.len();
    let elems = enumerate_chain_tails(u, k)?;
    let (mut size_a, mut size_b, mut size_p) = (0, 0, 0);
    let mut bijection_ok = true;
    let mut literal_rule_failures = 0;
    let mut signed_sum = Poly::zero(n);
    for x in &elems {
        match x.side(u) {
            Side::P => size_p += 1,
            Side::A => {
                size_a += 1;
                let b = chi(u, x, InsertionRule::FirstNotDominated);
                bijection_ok &= b.is_valid(u)
                    && b.side(u) == Side::B
                    && psi(u, &b).as_ref() == Some(x)
                    && b.weight() == x.weight()
                    && b.sign() == -x.sign();
                let lit = chi(u, x, InsertionRule::LastDominated);
                if !(lit.is_valid(u) && lit.side(u) == Side::B && psi(u, &lit).as_ref() == Some(x)) {
                    literal_rule_failures += 1;
                }
            }
            Side::B => {
                size_b += 1;
                match psi(u, x) {
                    Some(a) => {
                        bijection_ok &= a.is_valid(u)
                            && a.side(u) == Side::A
                            && chi(u, &a, InsertionRule::FirstNotDominated) == *x
                            && a.weight() == x.weight();
                    }
                    None => bijection_ok = false,
                }
            }
        }
        if x.side(u) != Side::P {
            signed_sum.add_term(x.weight(), BigInt::from(x.sign()));
        }
    }
    let geometry_matches = match geometric_jl(u, k) {
        Ok(vectors) => {
            let images: BTreeSet<Vec<Vec<usize>>> =
                elems.iter().filter(|x| x.side(u) != Side::P).map(ChainTail::weight_vector).collect();
            Some(images == vectors)
        }
        Err(Error::TooLarge(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ChiPsiReport {
        uio: u.clone(),
        k,
        size_a,
        size_b,
        size_p,
        bijection_ok,
        signed_sum,
        geometry_matches,
        literal_rule_failures,
    })
}

fn geometric_jl(u: &UnitIntervalOrder, k: usize) -> Result<BTreeSet<Vec<Vec<usize>>>> {
    let g = build_grid(u, k, &Partition::column(k))?;
    let mut out = BTreeSet::new();
    for mp in enumerate_multipaths(&g)? {
        if matches!(classify_multipath(&g, &mp)?.tag, ClassTag::J | ClassTag::L) {
            out.insert(mp.weight_vector());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_uios;
    use crate::ghom::monomial_g;

    fn uio(s: &str) -> UnitIntervalOrder {
        s.parse().unwrap()
    }

    /// 1-based element lists to 0-based picks.
    fn picks(w: &[&[usize]]) -> Vec<Vec<usize>> {
        w.iter().map(|p| p.iter().map(|x| x - 1).collect()).collect()
    }

    fn five_element_grid() -> GridSpec {
        build_grid(&uio("3,4,5,6,6"), 7, &Partition::column(7)).unwrap()
    }

    fn crossing_multipath() -> Multipath {
        let w = picks(&[&[], &[], &[1, 3, 5], &[], &[2, 4], &[4], &[5]]);
        Multipath::from_weight_vector(&five_element_grid(), &w).unwrap()
    }

    #[test]
    fn correctness_examples() {
        let u = uio("3,4,4");
        assert!(is_correct(&u, &[1]));
        assert!(is_correct(&u, &[0, 1, 2]));
        assert!(!is_correct(&u, &[0, 2, 1]));
        assert!(is_correct(&u, &[2, 1, 0]));
        // pairs are correct exactly when incomparable
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(is_correct(&u, &[a, b]), u.similar(a, b));
            }
        }
    }

    #[test]
    fn prefix_connectivity_matches_definition() {
        for n in 1..=4 {
            for u in enumerate_uios(n) {
                for k in 1..=5 {
                    for idx in 0..n.pow(k as u32) {
                        let seq: Vec<usize> = (0..k).map(|i| idx / n.pow(i as u32) % n).collect();
                        let literal = is_correct(&u, &seq);
                        assert_eq!(literal, no_descents(&u, &seq) && is_prefix_connected(&u, &seq), "{u} {seq:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_corrects(&UnitIntervalOrder::antichain(2), 2).unwrap().len(), 4);
        assert_eq!(enumerate_corrects(&UnitIntervalOrder::chain(2), 2).unwrap(), vec![vec![0, 0], vec![1, 1]]);
        for n in 1..=4 {
            for u in enumerate_uios(n) {
                for k in 1..=4 {
                    let brute = (0..n.pow(k as u32))
                        .map(|idx| (0..k).map(|i| idx / n.pow(i as u32) % n).collect::<Vec<_>>())
                        .filter(|s| is_correct(&u, s))
                        .count();
                    assert_eq!(enumerate_corrects(&u, k).unwrap().len(), brute);
                }
            }
        }
        assert!(matches!(enumerate_corrects(&UnitIntervalOrder::antichain(10), 9), Err(Error::TooLarge(_))));
    }

    #[test]
    fn power_sum_examples() {
        let chain = UnitIntervalOrder::chain(2);
        let ctx = GAnalogueContext::for_uio(&chain);
        assert_eq!(power_via_corrects(&chain, 2).unwrap(), power_g(&ctx, 2));
        let anti = UnitIntervalOrder::antichain(2);
        assert_eq!(power_via_corrects(&anti, 2).unwrap(), Poly::var_sum(2).pow(2));
        for u in enumerate_uios(4) {
            let ctx = GAnalogueContext::for_uio(&u);
            for k in 1..=4 {
                assert_eq!(power_via_corrects(&u, k).unwrap(), power_g(&ctx, k));
            }
        }
    }

    #[test]
    fn covering_examples() {
        assert_eq!(covering_corrects_count(&UnitIntervalOrder::antichain(4)), 24);
        assert_eq!(covering_corrects_count(&UnitIntervalOrder::chain(2)), 0);
        assert_eq!(covering_corrects_count(&uio("3,4,4")), 3);
    }

    #[test]
    fn m_l1_examples() {
        assert!(matches!(m_l1_via_corrects(&UnitIntervalOrder::chain(2), 1), Err(Error::BadParameter(_))));
        assert!(m_l1_via_corrects(&UnitIntervalOrder::antichain(2), 2).unwrap().is_zero());
        let chain = UnitIntervalOrder::chain(2);
        let expected = &Poly::monomial(2, Monomial::from_pairs(&[(0, 2), (1, 1)]), BigInt::one())
            + &Poly::monomial(2, Monomial::from_pairs(&[(0, 1), (1, 2)]), BigInt::one());
        assert_eq!(m_l1_via_corrects(&chain, 2).unwrap(), expected);
        for u in enumerate_uios(4) {
            let ctx = GAnalogueContext::for_uio(&u);
            for l in 2..=3 {
                let lhs = m_l1_via_corrects(&u, l).unwrap();
                let rhs = &(&power_g(&ctx, l) * &power_g(&ctx, 1)) - &power_g(&ctx, l + 1);
                assert_eq!(lhs, rhs, "{u} l={l}");
                assert_eq!(lhs, monomial_g(&ctx, &Partition::from_parts(vec![l, 1])).unwrap());
            }
        }
    }

    #[test]
    fn switch_at_leftmost_lowest_crossing() {
        let g = five_element_grid();
        let mp = crossing_multipath();
        assert_eq!(mp.sigma(), &[1, 2, 0, 4, 3, 5, 6]);
        assert!(mp.is_intersecting());
        let z = leftmost_lowest_intersection(&mp).unwrap();
        assert_eq!(z, GridVertex::new(4, 4));
        let shared = mp.shared_vertices();
        assert!(shared.contains_key(&GridVertex::new(6, 3)));
        assert!(shared.contains_key(&GridVertex::new(7, 5)));
        assert_eq!(classify_multipath(&g, &mp).unwrap().tag, ClassTag::I);
        let fig5 = delta_switch(&mp).unwrap();
        assert_eq!(fig5.sigma(), &[1, 2, 0, 3, 4, 5, 6]);
        assert_eq!(fig5.sign(), -mp.sign());
        assert_eq!(fig5.multiplier(), mp.multiplier());
        assert_eq!(fig5.weight(), mp.weight());
        assert_eq!(delta_switch(&fig5).unwrap(), mp);
    }

    #[test]
    fn chi_moves_chain_top_into_tail() {
        let g = five_element_grid();
        let u = g.uio().clone();
        let fig6 = Multipath::from_weight_vector(&g, &picks(&[&[], &[], &[1, 3, 5], &[2], &[2], &[4], &[5]])).unwrap();
        let class = classify_multipath(&g, &fig6).unwrap();
        assert_eq!(class.tag, ClassTag::J);
        assert_eq!(class.z, Some(GridVertex::new(6, 3)));
        let fig7 = Multipath::from_weight_vector(&g, &picks(&[&[], &[1, 3], &[2], &[2], &[5], &[4], &[5]])).unwrap();
        assert_eq!(classify_multipath(&g, &fig7).unwrap().tag, ClassTag::J);
        let a = ChainTail { l: 3, seq: vec![0, 2, 4, 1, 1, 3, 4] };
        assert!(a.is_valid(&u));
        assert_eq!(a.side(&u), Side::A);
        assert_eq!(a.weight_vector(), fig6.weight_vector());
        let b = chi(&u, &a, InsertionRule::FirstNotDominated);
        assert_eq!(b.weight_vector(), fig7.weight_vector());
        assert_eq!(b.side(&u), Side::B);
        assert_eq!(psi(&u, &b), Some(a));
    }

    #[test]
    fn literal_insertion_rule_can_fail() {
        let u = uio("3,4,4");
        let a = ChainTail { l: 2, seq: vec![0, 2, 1, 0] };
        assert!(a.is_valid(&u));
        assert_eq!(a.side(&u), Side::A);
        let lit = chi(&u, &a, InsertionRule::LastDominated);
        assert_eq!(lit.seq, vec![0, 1, 0, 2]);
        assert_ne!(psi(&u, &lit), Some(a.clone()));
        let good = chi(&u, &a, InsertionRule::FirstNotDominated);
        assert_eq!(psi(&u, &good), Some(a));
        assert!(chi_psi_check(&u, 4).unwrap().literal_rule_failures > 0);
    }

    #[test]
    fn cancellations_small() {
        let r = verify_cancellations(&uio("3,4,4"), 1).unwrap();
        assert!(r.ok());
        assert_eq!(r.total, Poly::var_sum(3));
        for u in enumerate_uios(3) {
            for k in 1..=3 {
                let r = verify_cancellations(&u, k).unwrap();
                assert!(r.ok(), "{}", r.to_json());
                let c = chi_psi_check(&u, k).unwrap();
                assert!(c.ok(), "{}", c.to_json());
            }
        }
        assert!(matches!(
            classify_multipath(&build_grid(&uio("3,3"), 2, &Partition::row(2)).unwrap(), &crossing_multipath()),
            Err(Error::WrongShape)
        ));
    }

    #[test]
    fn non_intersecting_has_no_z() {
        let g = build_grid(&uio("3,3"), 1, &Partition::column(1)).unwrap();
        let mp = Multipath::from_weight_vector(&g, &[vec![0]]).unwrap();
        assert!(matches!(leftmost_lowest_intersection(&mp), Err(Error::NotIntersecting)));
        assert!(matches!(delta_switch(&mp), Err(Error::NotIntersecting)));
    }
}
