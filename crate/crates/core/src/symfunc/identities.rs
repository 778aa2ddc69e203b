use num_rational::BigRational;

#[cfg(test)]
use super::concrete::expand_symfunc;
use super::concrete::{expand_concrete, shift_variables};
use super::func::{Basis, SymFunc};
use crate::combinat::{partitions_of, Partition};
use crate::linalg::{det, Ring};
use crate::polyring::Poly;

/// The Jacobi–Trudi matrix `(e_{λ*_i + j - i})` for any ring, given `e_k`
/// for `k ≥ 1`; `e_0 = 1` and negative indices give zero.
pub fn jacobi_trudi_matrix<R: Ring>(lambda: &Partition, e: impl Fn(usize) -> R, unit: &R) -> Vec<Vec<R>> {
    let conj = lambda.conjugate();
    let k = conj.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let idx = conj.part(i) as isize + j as isize - i as isize;
                    match idx {
                        i if i < 0 => unit.zero_like(),
                        0 => unit.one_like(),
                        i => e(i as usize),
                    }
                })
                .collect()
        })
        .collect()
}

/// The Newton determinant matrix for `p_k`: first column `i·e_i`, then
/// `e_{i-j+1}` (1-based), with `e_0 = 1` and negative indices zero.
pub fn newton_p_matrix<R: Ring>(k: usize, e: impl Fn(usize) -> R, unit: &R) -> Vec<Vec<R>> {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if j == 0 {
                        e(i + 1).times(i + 1)
                    } else {
                        match i as isize - j as isize + 1 {
                            t if t < 0 => unit.zero_like(),
                            0 => unit.one_like(),
                            t => e(t as usize),
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// Formal `e_k` as the `(k-1)`-th variable of a polynomial ring with `vars` generators.
fn formal_e(vars: usize) -> impl Fn(usize) -> Poly {
    move |k| Poly::var(vars, k - 1)
}

/// Reads a polynomial in the formal generators `e_1, e_2, ...` as an e-basis
/// symmetric function.
pub fn e_poly_to_symfunc(p: &Poly) -> SymFunc {
    let mut out = SymFunc::zero(Basis::E);
    for (m, c) in p.terms() {
        let parts: Vec<usize> = m.pairs().iter().flat_map(|&(v, e)| std::iter::repeat_n(v + 1, e as usize)).collect();
        out.add_term(Partition::from_parts(parts), BigRational::from_integer(c.clone()));
    }
    out
}

/// `s_λ` in the e-basis via the Jacobi–Trudi determinant.
pub fn jacobi_trudi_e(lambda: &Partition) -> SymFunc {
    let vars = lambda.weight().max(1);
    let unit = Poly::one(vars);
    e_poly_to_symfunc(&det(&jacobi_trudi_matrix(lambda, formal_e(vars), &unit), &unit))
}

/// `p_k` in the e-basis via the Newton determinant.
pub fn newton_p(k: usize) -> SymFunc {
    let vars = k.max(1);
    let unit = Poly::one(vars);
    e_poly_to_symfunc(&det(&newton_p_matrix(k, formal_e(vars), &unit), &unit))
}

/// Checks `Σ m_λ(x)e_λ(y) = Σ s_λ(x)s_{λ*}(y) = Σ e_λ(x)m_λ(y)` over `λ ⊢ d`
/// as concrete polynomials in `x_1..x_N, y_1..y_N`.
pub fn cauchy_check(d: usize, n: usize) -> bool {
    let total = 2 * n;
    let side = |left: &dyn Fn(&Partition) -> (Basis, Partition), right: &dyn Fn(&Partition) -> (Basis, Partition)| {
        let mut acc = Poly::zero(total);
        for lambda in partitions_of(d) {
            let (bx, lx) = left(&lambda);
            let (by, ly) = right(&lambda);
            let x = expand_concrete(bx, &lx, n).widen(total);
            let y = shift_variables(&expand_concrete(by, &ly, n), n, total);
            acc = &acc + &(&x * &y);
        }
        acc
    };
    let a = side(&|l| (Basis::M, l.clone()), &|l| (Basis::E, l.clone()));
    let b = side(&|l| (Basis::S, l.clone()), &|l| (Basis::S, l.conjugate()));
    let c = side(&|l| (Basis::E, l.clone()), &|l| (Basis::M, l.clone()));
    a == b && b == c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(k: i64) -> BigRational {
        BigRational::from_integer(k.into())
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(jacobi_trudi_e(&p("1")), SymFunc::basis_element(Basis::E, p("1")));
        let s21 = jacobi_trudi_e(&p("2,1"));
        assert_eq!(s21.len(), 2);
        assert_eq!(s21.coeff(&p("2,1")), q(1));
        assert_eq!(s21.coeff(&p("3")), q(-1));
        // s_{1^n} = e_n
        assert_eq!(jacobi_trudi_e(&Partition::column(4)), SymFunc::basis_element(Basis::E, p("4")));
        assert_eq!(jacobi_trudi_e(&Partition::empty()), SymFunc::basis_element(Basis::E, Partition::empty()));
    }

    #[test]
    fn newton_examples() {
        assert_eq!(newton_p(1), SymFunc::basis_element(Basis::E, p("1")));
        let p2 = newton_p(2);
        assert_eq!((p2.coeff(&p("1,1")), p2.coeff(&p("2")), p2.len()), (q(1), q(-2), 2));
        let p3 = newton_p(3);
        assert_eq!(p3.coeff(&p("1,1,1")), q(1));
        assert_eq!(p3.coeff(&p("2,1")), q(-3));
        assert_eq!(p3.coeff(&p("3")), q(3));
        assert_eq!(p3.len(), 3);
    }

    #[test]
    fn determinants_agree_with_concrete_expansion() {
        for d in 1..=5 {
            assert_eq!(expand_symfunc(&newton_p(d), d).unwrap(), expand_concrete(Basis::P, &Partition::row(d), d));
            for lambda in partitions_of(d) {
                assert_eq!(expand_symfunc(&jacobi_trudi_e(&lambda), d).unwrap(), expand_concrete(Basis::S, &lambda, d));
            }
        }
    }

    #[test]
    fn cauchy_small() {
        assert!(cauchy_check(1, 1));
        assert!(cauchy_check(2, 2));
        assert!(cauchy_check(3, 3));
        assert!(cauchy_check(3, 2));
    }
}
