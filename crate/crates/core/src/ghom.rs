//! G-analogues of symmetric functions: `e_i^G` over stable sets, the ring map
//! `e_i ↦ e_i^G`, and the clan-graph identity for the kernel `T(x, v)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chromatic::chromatic_symmetric;
use crate::combinat::{clan_graph, partitions_of, Graph, Partition, UnitIntervalOrder};
use crate::error::Result;
use crate::linalg::det;
use crate::polyring::{Monomial, Poly};
use crate::symfunc::{
    convert, expand_concrete, jacobi_trudi_matrix, newton_p_matrix, shift_variables, transition_matrix, Basis, SymFunc,
};

/// A graph together with its eagerly computed `e_0^G, ..., e_n^G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAnalogueContext {
    graph: Graph,
    elementary: Vec<Poly>,
}

impl GAnalogueContext {
    pub fn new(graph: Graph) -> Self {
        let n = graph.len();
        let mut elementary = vec![Poly::zero(n); n + 1];
        fn rec(g: &Graph, start: usize, set: u64, out: &mut [Poly]) {
            let size = set.count_ones() as usize;
            out[size].add_term(Monomial::product_of((0..g.len()).filter(|&v| set >> v & 1 == 1)), BigInt::one());
            for v in start..g.len() {
                if g.neighbors(v) & set == 0 {
                    rec(g, v + 1, set | 1 << v, out);
                }
            }
        }
        rec(&graph, 0, 0, &mut elementary);
        Self { graph, elementary }
    }

    /// Context for `inc(U)`, whose stable sets are the chains of `U`.
    pub fn for_uio(u: &UnitIntervalOrder) -> Self {
        Self::new(u.inc_graph())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn var_count(&self) -> usize {
        self.graph.len()
    }

    /// `e_i^G`, with `e_0^G = 1` and zero outside `0..=n`.
    pub fn e(&self, i: isize) -> Poly {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.elementary.get(i).cloned())
            .unwrap_or_else(|| Poly::zero(self.var_count()))
    }

    /// `e^G_λ = ∏ e^G_{λ_i}`.
    pub fn e_partition(&self, lambda: &Partition) -> Poly {
        lambda.parts().iter().fold(Poly::one(self.var_count()), |acc, &k| &acc * &self.e(k as isize))
    }

    fn unit(&self) -> Poly {
        Poly::one(self.var_count())
    }
}

pub fn elementary_g(ctx: &GAnalogueContext, i: isize) -> Poly {
    ctx.e(i)
}

/// `φ_G(f)`: convert to the e-basis and substitute `e_i ↦ e_i^G`.
pub fn apply_ghom(f: &SymFunc, ctx: &GAnalogueContext) -> Result<Poly> {
    let e = convert(f, Basis::E)?;
    let mut acc = Poly::zero(ctx.var_count());
    for (lambda, c) in e.integer_coeffs()? {
        acc = &acc + &ctx.e_partition(&lambda).scale(&c);
    }
    Ok(acc)
}

/// `s^G_λ = det(e^G_{λ*_i + j - i})`.
pub fn schur_g(ctx: &GAnalogueContext, lambda: &Partition) -> Poly {
    let unit = ctx.unit();
    det(&jacobi_trudi_matrix(lambda, |k| ctx.e(k as isize), &unit), &unit)
}

/// `p^G_k` via the Newton determinant.
pub fn power_g(ctx: &GAnalogueContext, k: usize) -> Poly {
    let unit = ctx.unit();
    det(&newton_p_matrix(k, |i| ctx.e(i as isize), &unit), &unit)
}

/// `m^G_λ = Σ_μ C[μ,λ] e^G_μ` with `C` the m→e transition matrix, the pairing
/// read off the two expansions of `T(x, v)`.
pub fn monomial_g(ctx: &GAnalogueContext, lambda: &Partition) -> Result<Poly> {
    let c = transition_matrix(Basis::M, Basis::E, lambda.weight())?;
    let mut acc = Poly::zero(ctx.var_count());
    for mu in c.partitions() {
        let x = c.get(mu, lambda);
        if !x.is_zero() {
            acc = &acc + &ctx.e_partition(mu).scale(&integral(&x));
        }
    }
    Ok(acc)
}

fn integral(x: &BigRational) -> BigInt {
    assert!(x.is_integer(), "m→e transition entries are integers");
    x.to_integer()
}

/// The degree-`d` slice of `T(x, v) = Σ_λ m_λ(x) e^G_λ(v)` as the pairing
/// `λ ↦ e^G_λ`.
#[allow(non_snake_case)]
pub fn truncated_T(ctx: &GAnalogueContext, d: usize) -> BTreeMap<Partition, Poly> {
    partitions_of(d)
        .into_iter()
        .map(|lambda| {
            let e = ctx.e_partition(&lambda);
            (lambda, e)
        })
        .collect()
}

/// Checks `Σ_λ m_λ(x) e^G_λ(v) = Σ_λ e_λ(x) m^G_λ(v)` in degree `d` as
/// concrete polynomials in `d` x-variables and the vertex variables.
pub fn t_slice_consistency(ctx: &GAnalogueContext, d: usize) -> Result<bool> {
    let n = ctx.var_count();
    let total = d + n;
    let mut left = Poly::zero(total);
    let mut right = Poly::zero(total);
    for lambda in partitions_of(d) {
        let v_e = shift_variables(&ctx.e_partition(&lambda), d, total);
        let v_m = shift_variables(&monomial_g(ctx, &lambda)?, d, total);
        left = &left + &(&expand_concrete(Basis::M, &lambda, d).widen(total) * &v_e);
        right = &right + &(&expand_concrete(Basis::E, &lambda, d).widen(total) * &v_m);
    }
    Ok(left == right)
}

/// `∏α(v)! · [v^α]T(x, v)` as an m-basis symmetric function of degree `Σα`.
pub fn clan_coefficient(ctx: &GAnalogueContext, alpha: &[usize]) -> SymFunc {
    let d: usize = alpha.iter().sum();
    let exps: Vec<u32> = alpha.iter().map(|&a| a as u32).collect();
    let target = Monomial::from_exponents(&exps);
    let scale: BigInt = alpha.iter().map(|&a| (1..=a).map(BigInt::from).product::<BigInt>()).product();
    SymFunc::from_integer_terms(
        Basis::M,
        partitions_of(d).into_iter().map(|lambda| {
            let c = ctx.e_partition(&lambda).coeff(&target);
            (lambda, c * &scale)
        }),
    )
}

/// Checks `[v^α]T(x, v) · ∏α(v)! = X_{G^α}`.
pub fn gnechrom_check(ctx: &GAnalogueContext, alpha: &[usize]) -> Result<bool> {
    let clan = clan_graph(ctx.graph(), alpha);
    Ok(clan_coefficient(ctx, alpha) == chromatic_symmetric(&clan)?)
}

/// `[v^α] f` for a dense exponent vector `α`.
pub fn coefficient_at(f: &Poly, alpha: &[usize]) -> BigInt {
    let exps: Vec<u32> = alpha.iter().map(|&a| a as u32).collect();
    f.coeff(&Monomial::from_exponents(&exps))
}

/// Sum of the variables, `e_1^G`.
pub fn vertex_sum(ctx: &GAnalogueContext) -> Poly {
    Poly::var_sum(ctx.var_count())
}
