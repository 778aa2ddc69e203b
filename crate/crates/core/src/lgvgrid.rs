//! The planar grid whose path sums are the `e_j^G` of an incomparability
//! graph, multipaths on it, and the Lindström–Gessel–Viennot identity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{Partition, UnitIntervalOrder};
use crate::error::{Error, Result};
use crate::linalg::{det, permutation_sign, permutations};
use crate::polyring::{Monomial, Poly};

/// Default cap on multipaths or search nodes visited by one enumeration.
pub const MULTIPATH_BUDGET: u64 = 10_000_000;

/// A grid vertex; both coordinates are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridVertex {
    pub col: usize,
    pub row: usize,
}

impl GridVertex {
    pub fn new(col: usize, row: usize) -> Self {
        Self { col, row }
    }
}

impl fmt::Display for GridVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// The grid for a UIO on `n` elements with `k` sources and destinations
/// placed by a partition.
///
/// Rows run `1..=n+1`. From `(c, r)` with `r ≤ n` there is a vertical edge to
/// `(c, r+1)` of weight 1 and a diagonal edge to `(c+1, next(r))` of weight
/// `v_r`; taking the diagonal picks element `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    uio: UnitIntervalOrder,
    lambda: Vec<usize>,
    columns: usize,
    bases: Vec<GridVertex>,
    destinations: Vec<GridVertex>,
}

/// Builds the grid with `a_i = (k+1-i, 1)` and `b_i = (k+1-i+λ_i, n+1)`.
pub fn build_grid(u: &UnitIntervalOrder, k: usize, lambda: &Partition) -> Result<GridSpec> {
    if lambda.len() > k {
        return Err(Error::BadShape { partition: lambda.to_string(), k });
    }
    let padded = lambda.padded(k);
    let n = u.len();
    let bases = (1..=k).map(|i| GridVertex::new(k + 1 - i, 1)).collect();
    let destinations = (1..=k).map(|i| GridVertex::new(k + 1 - i + padded[i - 1], n + 1)).collect();
    Ok(GridSpec { uio: u.clone(), lambda: padded, columns: k + lambda.part(0), bases, destinations })
}

impl GridSpec {
    pub fn uio(&self) -> &UnitIntervalOrder {
        &self.uio
    }

    pub fn n(&self) -> usize {
        self.uio.len()
    }

    pub fn k(&self) -> usize {
        self.bases.len()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// The partition padded with zeros to length `k`.
    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn bases(&self) -> &[GridVertex] {
        &self.bases
    }

    pub fn destinations(&self) -> &[GridVertex] {
        &self.destinations
    }

    /// True for the `λ = 1^k` geometry.
    pub fn is_column_shape(&self) -> bool {
        self.lambda.iter().all(|&p| p == 1)
    }

    /// Row reached by the diagonal edge out of row `r`.
    pub fn diagonal_target(&self, r: usize) -> usize {
        self.uio.next_of(r - 1) + 1
    }

    /// Outgoing edges as `(target, picked element)`; vertical edges pick nothing.
    pub fn successors(&self, v: GridVertex) -> Vec<(GridVertex, Option<usize>)> {
        let mut out = Vec::with_capacity(2);
        if v.row <= self.n() {
            out.push((GridVertex::new(v.col, v.row + 1), None));
            if v.col < self.columns {
                out.push((GridVertex::new(v.col + 1, self.diagonal_target(v.row)), Some(v.row - 1)));
            }
        }
        out
    }

    /// Every edge strictly increases the row (acyclicity), and no two
    /// diagonals between the same pair of columns cross (planarity).
    pub fn check_structure(&self) -> bool {
        let n = self.n();
        let mut diagonals = Vec::new();
        for col in 1..=self.columns {
            for row in 1..=n + 1 {
                for (t, pick) in self.successors(GridVertex::new(col, row)) {
                    if t.row <= row || t.row > n + 1 || t.col > self.columns {
                        return false;
                    }
                    if pick.is_some() {
                        diagonals.push((row, t.row));
                    }
                }
            }
        }
        diagonals.iter().all(|&(r1, t1)| diagonals.iter().all(|&(r2, t2)| !(r1 < r2 && t1 > t2)))
    }
}

/// A path stored as its vertex sequence and the elements it picks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPath {
    vertices: Vec<GridVertex>,
    picks: Vec<usize>,
}

impl GridPath {
    /// Rebuilds the picks from a vertex sequence, validating every step.
    pub fn from_vertices(g: &GridSpec, vertices: Vec<GridVertex>) -> Result<Self> {
        let mut picks = Vec::new();
        for w in vertices.windows(2) {
            let step = g.successors(w[0]).into_iter().find(|&(t, _)| t == w[1]);
            match step {
                Some((_, Some(p))) => picks.push(p),
                Some((_, None)) => {}
                None => return Err(Error::BadParameter(format!("no grid edge {} -> {}", w[0], w[1]))),
            }
        }
        Ok(Self { vertices, picks })
    }

    /// The unique path from `start` that picks exactly `picks` (0-based
    /// elements, in order) and then runs vertically to the last row.
    pub fn from_picks(g: &GridSpec, start: GridVertex, picks: &[usize]) -> Result<Self> {
        let mut vertices = vec![start];
        let mut v = start;
        let bad = || Error::BadParameter(format!("picks {picks:?} do not form a path from {start}"));
        for &e in picks {
            let row = e + 1;
            if row < v.row || row > g.n() || v.col >= g.columns() {
                return Err(bad());
            }
            while v.row < row {
                v = GridVertex::new(v.col, v.row + 1);
                vertices.push(v);
            }
            v = GridVertex::new(v.col + 1, g.diagonal_target(row));
            vertices.push(v);
        }
        while v.row <= g.n() {
            v = GridVertex::new(v.col, v.row + 1);
            vertices.push(v);
        }
        Ok(Self { vertices, picks: picks.to_vec() })
    }

    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    /// Picked elements (0-based), a strictly increasing chain of the UIO.
    pub fn picks(&self) -> &[usize] {
        &self.picks
    }

    pub fn start(&self) -> GridVertex {
        self.vertices[0]
    }

    pub fn end(&self) -> GridVertex {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn weight(&self) -> Monomial {
        Monomial::product_of(self.picks.iter().copied())
    }

    pub fn contains(&self, v: GridVertex) -> bool {
        self.vertices.contains(&v)
    }

    pub(crate) fn split_at(&self, v: GridVertex) -> Option<(&[GridVertex], &[GridVertex])> {
        let i = self.vertices.iter().position(|&x| x == v)?;
        Some((&self.vertices[..=i], &self.vertices[i + 1..]))
    }

    /// Joins a head ending at a shared vertex with another path's tail,
    /// recomputing picks from the diagonal steps.
    pub(crate) fn joined(head: &[GridVertex], tail: &[GridVertex]) -> Self {
        let vertices: Vec<GridVertex> = head.iter().chain(tail).copied().collect();
        let picks = vertices.windows(2).filter(|w| w[1].col == w[0].col + 1).map(|w| w[0].row - 1).collect();
        Self { vertices, picks }
    }
}

/// All paths from `a` to `b`, vertical steps explored before diagonals.
pub fn paths_between(g: &GridSpec, a: GridVertex, b: GridVertex) -> Vec<GridPath> {
    fn rec(g: &GridSpec, b: GridVertex, cur: &mut Vec<GridVertex>, picks: &mut Vec<usize>, out: &mut Vec<GridPath>) {
        let v = *cur.last().expect("nonempty");
        if v == b {
            out.push(GridPath { vertices: cur.clone(), picks: picks.clone() });
            return;
        }
        if v.row >= b.row {
            return;
        }
        for (t, pick) in g.successors(v) {
            if t.col > b.col || t.row > b.row {
                continue;
            }
            cur.push(t);
            if let Some(p) = pick {
                picks.push(p);
            }
            rec(g, b, cur, picks, out);
            if pick.is_some() {
                picks.pop();
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if a.col <= b.col && a.row <= b.row {
        rec(g, b, &mut vec![a], &mut Vec::new(), &mut out);
    }
    out
}

fn path_count(g: &GridSpec, a: GridVertex, b: GridVertex) -> u128 {
    let mut counts: BTreeMap<(usize, usize), u128> = BTreeMap::new();
    counts.insert((a.row, a.col), 1);
    let mut total = 0;
    while let Some(((row, col), c)) = counts.pop_first() {
        let v = GridVertex::new(col, row);
        if v == b {
            total += c;
            continue;
        }
        for (t, _) in g.successors(v) {
            if t.col <= b.col && t.row <= b.row {
                *counts.entry((t.row, t.col)).or_insert(0) += c;
            }
        }
    }
    total
}

/// `e(a, b)`: the sum of path weights from `a` to `b`, by dynamic programming
/// in row order.
pub fn path_sum(g: &GridSpec, a: GridVertex, b: GridVertex) -> Poly {
    let n = g.n();
    let mut layer: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
    layer.insert((a.row, a.col), Poly::one(n));
    let mut total = Poly::zero(n);
    while let Some(((row, col), w)) = layer.pop_first() {
        let v = GridVertex::new(col, row);
        if v == b {
            total = &total + &w;
            continue;
        }
        for (t, pick) in g.successors(v) {
            if t.col > b.col || t.row > b.row {
                continue;
            }
            let step = match pick {
                Some(p) => &w * &Poly::var(n, p),
                None => w.clone(),
            };
            let slot = layer.entry((t.row, t.col)).or_insert_with(|| Poly::zero(n));
            *slot = &*slot + &step;
        }
    }
    total
}

/// A tuple of paths with path `i` running from `a_i` to `b_{σ(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipath {
    paths: Vec<GridPath>,
    sigma: Vec<usize>,
}

impl Multipath {
    /// Pairs paths with destinations by their endpoints.
    pub fn new(g: &GridSpec, paths: Vec<GridPath>) -> Result<Self> {
        let mut sigma = Vec::with_capacity(paths.len());
        for (i, p) in paths.iter().enumerate() {
            if g.bases().get(i) != Some(&p.start()) {
                return Err(Error::BadParameter(format!("path {} does not start at a_{}", i + 1, i + 1)));
            }
            let j = g
                .destinations()
                .iter()
                .position(|&b| b == p.end())
                .ok_or_else(|| Error::BadParameter(format!("path {} does not end at a destination", i + 1)))?;
            sigma.push(j);
        }
        let distinct: BTreeSet<_> = sigma.iter().collect();
        if distinct.len() != sigma.len() || paths.len() != g.k() {
            return Err(Error::BadParameter("paths do not induce a permutation".into()));
        }
        Ok(Self { paths, sigma })
    }

    /// Path `i` starts at `a_i` and picks `weights[i]`.
    pub fn from_weight_vector(g: &GridSpec, weights: &[Vec<usize>]) -> Result<Self> {
        let paths =
            weights.iter().zip(g.bases()).map(|(w, &a)| GridPath::from_picks(g, a, w)).collect::<Result<Vec<_>>>()?;
        Self::new(g, paths)
    }

    pub fn paths(&self) -> &[GridPath] {
        &self.paths
    }

    /// 0-based `σ`: path `i` ends at destination `sigma[i]`.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn sign(&self) -> i32 {
        permutation_sign(&self.sigma)
    }

    /// `σ^{-1}(1)`, the 1-based index of the path that ends at `b_1`.
    pub fn multiplier(&self) -> usize {
        self.sigma.iter().position(|&j| j == 0).map_or(0, |i| i + 1)
    }

    pub fn weight_vector(&self) -> Vec<Vec<usize>> {
        self.paths.iter().map(|p| p.picks().to_vec()).collect()
    }

    pub fn weight(&self) -> Monomial {
        Monomial::product_of(self.paths.iter().flat_map(|p| p.picks().iter().copied()))
    }

    /// Vertices lying on at least two paths, with the indices of those paths.
    pub fn shared_vertices(&self) -> BTreeMap<GridVertex, Vec<usize>> {
        let mut on: BTreeMap<GridVertex, Vec<usize>> = BTreeMap::new();
        for (i, p) in self.paths.iter().enumerate() {
            for &v in p.vertices() {
                let owners = on.entry(v).or_default();
                if owners.last() != Some(&i) {
                    owners.push(i);
                }
            }
        }
        on.retain(|_, owners| owners.len() >= 2);
        on
    }

    pub fn is_intersecting(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.paths.iter().flat_map(|p| p.vertices()).any(|v| !seen.insert(*v))
    }

    pub(crate) fn from_parts(paths: Vec<GridPath>, sigma: Vec<usize>) -> Self {
        Self { paths, sigma }
    }

    /// `{"paths": [[[col,row],...],...], "sigma": "2 1 3"}` with `σ` 1-based.
    pub fn to_json(&self) -> serde_json::Value {
        let paths: Vec<Vec<[usize; 2]>> =
            self.paths.iter().map(|p| p.vertices().iter().map(|v| [v.col, v.row]).collect()).collect();
        let sigma: Vec<String> = self.sigma.iter().map(|j| (j + 1).to_string()).collect();
        serde_json::json!({ "paths": paths, "sigma": sigma.join(" ") })
    }
}

/// Every multipath over every permutation, in lexicographic order of `σ` and
/// then of the per-source path lists.
pub fn enumerate_multipaths(g: &GridSpec) -> Result<Vec<Multipath>> {
    enumerate_multipaths_with_budget(g, MULTIPATH_BUDGET)
}

pub fn enumerate_multipaths_with_budget(g: &GridSpec, budget: u64) -> Result<Vec<Multipath>> {
    let k = g.k();
    let perms = permutations(k);
    let mut total: u128 = 0;
    for sigma in &perms {
        let prod: u128 = (0..k).map(|i| path_count(g, g.bases[i], g.destinations[sigma[i]])).product();
        total = total.saturating_add(prod);
    }
    if total > budget as u128 {
        return Err(Error::TooLarge(format!("{total} multipaths exceed the budget of {budget}")));
    }
    let lists: Vec<Vec<Vec<GridPath>>> =
        (0..k).map(|i| (0..k).map(|j| paths_between(g, g.bases[i], g.destinations[j])).collect()).collect();
    let mut out = Vec::with_capacity(total as usize);
    for sigma in perms {
        fn rec(
            i: usize,
            sigma: &[usize],
            lists: &[Vec<Vec<GridPath>>],
            cur: &mut Vec<GridPath>,
            out: &mut Vec<Multipath>,
        ) {
            if i == sigma.len() {
                out.push(Multipath { paths: cur.clone(), sigma: sigma.to_vec() });
                return;
            }
            for p in &lists[i][sigma[i]] {
                cur.push(p.clone());
                rec(i + 1, sigma, lists, cur, out);
                cur.pop();
            }
        }
        rec(0, &sigma, &lists, &mut Vec::new(), &mut out);
    }
    Ok(out)
}

/// Pairwise vertex-disjoint multipaths over every permutation, by
/// depth-first search with a node budget.
pub fn non_intersecting_multipaths(g: &GridSpec) -> Result<Vec<Multipath>> {
    non_intersecting_multipaths_with_budget(g, MULTIPATH_BUDGET)
}

pub fn non_intersecting_multipaths_with_budget(g: &GridSpec, budget: u64) -> Result<Vec<Multipath>> {
    let k = g.k();
    let lists: Vec<Vec<Vec<GridPath>>> =
        (0..k).map(|i| (0..k).map(|j| paths_between(g, g.bases[i], g.destinations[j])).collect()).collect();
    struct Search<'a> {
        lists: &'a [Vec<Vec<GridPath>>],
        budget: u64,
        nodes: u64,
        used: Vec<bool>,
        occupied: BTreeSet<GridVertex>,
        paths: Vec<GridPath>,
        sigma: Vec<usize>,
        out: Vec<Multipath>,
    }
    impl Search<'_> {
        fn rec(&mut self, i: usize) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::TooLarge(format!("non-intersecting search exceeded {} nodes", self.budget)));
            }
            let k = self.lists.len();
            if i == k {
                self.out.push(Multipath { paths: self.paths.clone(), sigma: self.sigma.clone() });
                return Ok(());
            }
            for j in 0..k {
                if self.used[j] {
                    continue;
                }
                for p in &self.lists[i][j] {
                    if p.vertices().iter().any(|v| self.occupied.contains(v)) {
                        continue;
                    }
                    self.used[j] = true;
                    self.occupied.extend(p.vertices().iter().copied());
                    self.paths.push(p.clone());
                    self.sigma.push(j);
                    self.rec(i + 1)?;
                    self.sigma.pop();
                    self.paths.pop();
                    for v in p.vertices() {
                        self.occupied.remove(v);
                    }
                    self.used[j] = false;
                }
            }
            Ok(())
        }
    }
    let mut s = Search {
        lists: &lists,
        budget,
        nodes: 0,
        used: vec![false; k],
        occupied: BTreeSet::new(),
        paths: Vec::new(),
        sigma: Vec::new(),
        out: Vec::new(),
    };
    s.rec(0)?;
    Ok(s.out)
}

/// The matrix `(e(a_i, b_j))`.
pub fn path_sum_matrix(g: &GridSpec) -> Vec<Vec<Poly>> {
    g.bases.iter().map(|&a| g.destinations.iter().map(|&b| path_sum(g, a, b)).collect()).collect()
}

/// Checks `det(e(a_i, b_j)) = Σ sign(σ) ∏ w(ρ_i)` over non-intersecting multipaths.
pub fn lgv_check(g: &GridSpec) -> Result<bool> {
    let n = g.n();
    let lhs = det(&path_sum_matrix(g), &Poly::one(n));
    let mut rhs = Poly::zero(n);
    for mp in non_intersecting_multipaths(g)? {
        rhs.add_term(mp.weight(), BigInt::from(mp.sign()));
    }
    Ok(lhs == rhs)
}

/// `Σ ∏ w(ρ_i)` over non-intersecting multipaths for destinations placed by
/// `λ`; every such multipath must have `σ = id`. Equals `s^G_{λ*}`.
pub fn schur_via_lgv(u: &UnitIntervalOrder, lambda: &Partition) -> Result<Poly> {
    let n = u.len();
    if lambda.is_empty() {
        return Ok(Poly::one(n));
    }
    let g = build_grid(u, lambda.len(), lambda)?;
    let mut acc = Poly::zero(n);
    for mp in non_intersecting_multipaths(&g)? {
        if mp.sigma.iter().enumerate().any(|(i, &j)| i != j) {
            return Err(Error::NonIdentityPermutation(mp.sigma.iter().map(|j| j + 1).collect()));
        }
        acc.add_term(mp.weight(), BigInt::one());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_uios;
    use crate::ghom::{schur_g, GAnalogueContext};

    fn uio(s: &str) -> UnitIntervalOrder {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn five_element_grid_geometry() {
        let u8 = uio("3,4,5,6,7,8,9,9");
        let g = build_grid(&u8, 4, &p("4,4,3,2")).unwrap();
        assert_eq!(g.bases()[0], GridVertex::new(4, 1));
        assert_eq!(g.destinations()[0], GridVertex::new(8, 9));
        let u5 = uio("3,4,5,6,6");
        let g = build_grid(&u5, 7, &Partition::column(7)).unwrap();
        assert_eq!(g.destinations()[0], GridVertex::new(8, 6));
        assert!(matches!(build_grid(&u5, 1, &p("1,1")), Err(Error::BadShape { .. })));
    }

    #[test]
    fn single_source_without_steps() {
        let u = uio("3,4,4");
        let g = build_grid(&u, 1, &Partition::empty()).unwrap();
        let paths = paths_between(&g, g.bases()[0], g.destinations()[0]);
        assert_eq!(paths.len(), 1);
        assert!(paths[0].picks().is_empty());
        assert_eq!(path_sum(&g, g.bases()[0], g.destinations()[0]), Poly::one(3));
    }

    #[test]
    fn u3_two_step_sum() {
        let u = uio("3,4,4");
        let g = build_grid(&u, 1, &p("2")).unwrap();
        let s = path_sum(&g, GridVertex::new(1, 1), GridVertex::new(3, 4));
        assert_eq!(s, Poly::monomial(3, Monomial::product_of([0, 2]), BigInt::one()));
    }

    #[test]
    fn path_sums_are_elementary() {
        for n in 1..=5 {
            for u in enumerate_uios(n) {
                let ctx = GAnalogueContext::for_uio(&u);
                let g = build_grid(&u, 2, &Partition::row(n)).unwrap();
                assert!(g.check_structure());
                for i in 1..=2 {
                    for j in 0..=n {
                        let a = GridVertex::new(i, 1);
                        let b = GridVertex::new(i + j, n + 1);
                        if b.col > g.columns() {
                            continue;
                        }
                        let sum = path_sum(&g, a, b);
                        assert_eq!(sum, ctx.e(j as isize), "{u} i={i} j={j}");
                        let enumerated = paths_between(&g, a, b)
                            .iter()
                            .fold(Poly::zero(n), |acc, p| &acc + &Poly::monomial(n, p.weight(), BigInt::one()));
                        assert_eq!(enumerated, sum);
                    }
                }
            }
        }
    }

    #[test]
    fn antichain_pair_multipaths() {
        let g = build_grid(&uio("3,3"), 2, &p("1,1")).unwrap();
        let all = enumerate_multipaths(&g).unwrap();
        let mut by_sigma: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for mp in &all {
            *by_sigma.entry(mp.sigma().to_vec()).or_default() += 1;
            assert_eq!(mp.sign(), if mp.sigma() == [0, 1] { 1 } else { -1 });
        }
        // a_1 → b_1 and a_2 → b_2 take one diagonal each, a_1 → b_2 none,
        // a_2 → b_1 two (impossible in an antichain)
        assert_eq!(by_sigma.get(&vec![0, 1]), Some(&4));
        assert_eq!(by_sigma.get(&vec![1, 0]), None);
        assert!(lgv_check(&g).unwrap());
        let mp = &all[0];
        assert_eq!(mp.to_json()["sigma"], "1 2");
    }

    #[test]
    fn budget_is_enforced() {
        let g = build_grid(&uio("3,4,5,6,6"), 3, &p("2,2,1")).unwrap();
        assert!(matches!(enumerate_multipaths_with_budget(&g, 10), Err(Error::TooLarge(_))));
        assert!(matches!(non_intersecting_multipaths_with_budget(&g, 3), Err(Error::TooLarge(_))));
    }

    #[test]
    fn schur_examples() {
        let chain = uio("2,3");
        let ctx = GAnalogueContext::for_uio(&chain);
        assert_eq!(schur_via_lgv(&chain, &p("1")).unwrap(), ctx.e(1));
        let s = schur_via_lgv(&chain, &p("1,1")).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s, schur_g(&ctx, &p("2")));
    }

    #[test]
    fn lgv_and_schur_small() {
        for n in 1..=3 {
            for u in enumerate_uios(n) {
                let ctx = GAnalogueContext::for_uio(&u);
                for d in 1..=3 {
                    for lambda in crate::combinat::partitions_of(d) {
                        let g = build_grid(&u, lambda.len(), &lambda).unwrap();
                        assert!(lgv_check(&g).unwrap());
                        assert_eq!(schur_via_lgv(&u, &lambda).unwrap(), schur_g(&ctx, &lambda.conjugate()));
                    }
                }
            }
        }
    }
}
