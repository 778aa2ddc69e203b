use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::func::{Basis, SymFunc};
use super::identities::jacobi_trudi_e;
use crate::combinat::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::linalg::det;
use crate::polyring::{Monomial, Poly};

/// The polynomial in `x_1..x_N` obtained by truncating the defining sum of the
/// basis element `b_λ` to `N` variables.
pub fn expand_concrete(basis: Basis, lambda: &Partition, n: usize) -> Poly {
    match basis {
        Basis::E => product(lambda, n, |k| elementary(k, n), &|_| true),
        Basis::P => product(lambda, n, |k| power_sum(k, n), &|_| true),
        Basis::M => monomial_symmetric(lambda, n),
        Basis::S => schur_by_jacobi_trudi(lambda, n),
    }
}

fn product(lambda: &Partition, n: usize, factor: impl Fn(usize) -> Poly, keep: &dyn Fn(&Monomial) -> bool) -> Poly {
    lambda.parts().iter().fold(Poly::one(n), |acc, &k| acc.mul_filtered(&factor(k), keep))
}

fn elementary(k: usize, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Poly) {
        if cur.len() == k {
            out.add_term(Monomial::product_of(cur.iter().copied()), BigInt::one());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn power_sum(k: usize, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    for v in 0..n {
        out.add_term(Monomial::from_pairs(&[(v, k as u32)]), BigInt::one());
    }
    out
}

/// Sum over the distinct rearrangements of `λ` padded with zeros to length `n`.
fn monomial_symmetric(lambda: &Partition, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    if lambda.len() > n {
        return out;
    }
    // multiset permutations via counts of each distinct exponent
    let mut counts: Vec<(usize, usize)> = lambda.multiplicities().into_iter().collect();
    counts.push((0, n - lambda.len()));
    fn rec(slots: usize, counts: &mut [(usize, usize)], cur: &mut Vec<u32>, out: &mut Poly) {
        if cur.len() == slots {
            out.add_term(Monomial::from_exponents(cur), BigInt::one());
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            cur.push(counts[i].0 as u32);
            rec(slots, counts, cur, out);
            cur.pop();
            counts[i].1 += 1;
        }
    }
    rec(n, &mut counts, &mut Vec::new(), &mut out);
    out
}

/// `det(e_{λ*_i + j - i})` evaluated on concrete elementary polynomials.
fn schur_by_jacobi_trudi(lambda: &Partition, n: usize) -> Poly {
    let conj = lambda.conjugate();
    let k = conj.len();
    let entry = |i: usize, j: usize| -> Poly {
        let idx = conj.part(i) as isize + j as isize - i as isize;
        match idx {
            i if i < 0 => Poly::zero(n),
            0 => Poly::one(n),
            i => elementary(i as usize, n),
        }
    };
    let m: Vec<Vec<Poly>> = (0..k).map(|i| (0..k).map(|j| entry(i, j)).collect()).collect();
    det(&m, &Poly::one(n))
}

/// Keeps a monomial iff it divides `x^μ` for some partition `μ` of `d`
/// placed on the leading variables.
fn divides_partition_monomial(d: usize, n: usize) -> impl Fn(&Monomial) -> bool {
    move |m: &Monomial| {
        let dense = m.dense(n);
        let mut hull = 0usize;
        let mut running = 0u32;
        for &a in dense.iter().rev() {
            running = running.max(a);
            hull += running as usize;
        }
        hull <= d
    }
}

/// Row of coefficients `[x^μ] b_λ` in `d = |λ|` variables, indexed by
/// `partitions_of(d)`. These rows are the expansion of `b_λ` in the monomial
/// basis.
pub fn monomial_coefficient_row(basis: Basis, lambda: &Partition) -> Vec<BigRational> {
    let d = lambda.weight();
    let targets = partitions_of(d);
    let read = |poly: &Poly| -> Vec<BigRational> {
        targets
            .iter()
            .map(|mu| {
                let exps: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
                BigRational::from_integer(poly.coeff(&Monomial::from_exponents(&exps)))
            })
            .collect()
    };
    let n = d.max(1);
    let keep = divides_partition_monomial(d, n);
    match basis {
        Basis::M => {
            targets.iter().map(|mu| if mu == lambda { BigRational::one() } else { num_traits::Zero::zero() }).collect()
        }
        Basis::E => read(&product(lambda, n, |k| elementary(k, n), &keep)),
        Basis::P => read(&product(lambda, n, |k| power_sum(k, n), &keep)),
        Basis::S => {
            let mut row = vec![<BigRational as num_traits::Zero>::zero(); targets.len()];
            for (nu, c) in jacobi_trudi_e(lambda).terms() {
                for (slot, x) in row.iter_mut().zip(monomial_coefficient_row(Basis::E, nu)) {
                    *slot += c * x;
                }
            }
            row
        }
    }
}

/// Concrete expansion of an integral combination of basis elements.
pub fn expand_symfunc(f: &SymFunc, n: usize) -> Result<Poly> {
    let mut acc = Poly::zero(n);
    for (lambda, c) in f.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegral(c.to_string()));
        }
        acc = &acc + &expand_concrete(f.basis(), lambda, n).scale(&c.to_integer());
    }
    Ok(acc)
}

/// Re-indexes `p` so variable `v` becomes `v + offset`, in `total` variables.
pub fn shift_variables(p: &Poly, offset: usize, total: usize) -> Poly {
    let mut out = Poly::zero(total);
    for (m, c) in p.terms() {
        let pairs: Vec<(usize, u32)> = m.pairs().iter().map(|&(v, e)| (v + offset, e)).collect();
        out.add_term(Monomial::from_pairs(&pairs), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs)
    }

    #[test]
    fn small_expansions() {
        let e1 = expand_concrete(Basis::E, &p("1"), 2);
        assert_eq!(e1, Poly::var_sum(2));
        let p2 = expand_concrete(Basis::P, &p("2"), 2);
        assert_eq!(p2.len(), 2);
        assert_eq!(p2.coeff(&x(&[(0, 2)])), BigInt::one());
        assert_eq!(p2.coeff(&x(&[(1, 2)])), BigInt::one());
        let m21 = expand_concrete(Basis::M, &p("2,1"), 3);
        assert_eq!(m21.len(), 6);
        assert!(expand_concrete(Basis::M, &p("1,1,1"), 2).is_zero());
    }

    #[test]
    fn schur_21_in_three_variables() {
        let s = expand_concrete(Basis::S, &p("2,1"), 3);
        assert_eq!(s.len(), 7);
        assert_eq!(s.terms().map(|(_, c)| c.clone()).sum::<BigInt>(), BigInt::from(8));
        assert_eq!(s.coeff(&x(&[(0, 1), (1, 1), (2, 1)])), BigInt::from(2));
        assert_eq!(s.coeff(&x(&[(0, 2), (1, 1)])), BigInt::one());
    }

    #[test]
    fn schur_of_column_is_elementary() {
        for k in 1..=4 {
            assert_eq!(
                expand_concrete(Basis::S, &Partition::column(k), 4),
                expand_concrete(Basis::E, &Partition::row(k), 4)
            );
        }
    }

    #[test]
    fn truncated_rows_match_full_expansion() {
        for d in 1..=5 {
            for lambda in partitions_of(d) {
                for basis in [Basis::E, Basis::P, Basis::S] {
                    let full = expand_concrete(basis, &lambda, d);
                    let expected: Vec<BigRational> = partitions_of(d)
                        .iter()
                        .map(|mu| {
                            let exps: Vec<u32> = mu.parts().iter().map(|&q| q as u32).collect();
                            BigRational::from_integer(full.coeff(&Monomial::from_exponents(&exps)))
                        })
                        .collect();
                    assert_eq!(monomial_coefficient_row(basis, &lambda), expected, "{basis} {lambda}");
                }
            }
        }
    }
}
