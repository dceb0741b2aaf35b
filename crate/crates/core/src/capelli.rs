//! Eigenvalues of the quadratic Capelli operators.
//!
//! The operator labelled `λ` acts on the spherical module labelled `μ` by
//! `c_{λ,s}(μ) = d_λ(μ + ϱ, s)` where
//! `d_λ(x, s) = γ_λ P_λ(x; d/2, s − ϱ₁)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{x_vars, MultiPoly, Rational};
use crate::okounkov::{interpolation_combinatorial, ALPHA};
use crate::partitions::{arm_leg, contains, Partition};
use crate::symfunc::FieldCase;

/// Name of the formal spectral parameter.
pub const S: &str = "s";

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn half_d(case: &FieldCase) -> Rational {
    Rational::new(case.d().into(), 2.into())
}

/// The shift vector `ϱ` of a case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoVector {
    pub case: FieldCase,
    pub entries: Vec<Rational>,
}

/// `ϱ_i = dn/4 − 1/2 − d(i−1)/2`.
pub fn rho_vector(case: &FieldCase) -> RhoVector {
    let d = q(case.d() as i64);
    let n = q(case.n as i64);
    let entries = (1..=case.r)
        .map(|i| &d * &n / q(4) - Rational::new(1.into(), 2.into()) - &d * q(i as i64 - 1) / q(2))
        .collect();
    RhoVector { case: *case, entries }
}

/// Positive restricted roots `(coordinates, multiplicity)`: `e_i`, `e_i ± e_j`
/// and `2e_i` with multiplicities `d(n−2r)`, `d` and `d−1`.
pub fn positive_roots(case: &FieldCase) -> Vec<(Vec<i64>, i64)> {
    let r = case.r;
    let d = case.d() as i64;
    let unit = |i: usize| {
        let mut v = vec![0; r];
        v[i] = 1;
        v
    };
    let mut roots = Vec::new();
    for i in 0..r {
        roots.push((unit(i), d * (case.n as i64 - 2 * r as i64)));
        roots.push((unit(i).iter().map(|x| 2 * x).collect(), d - 1));
        for j in i + 1..r {
            let mut minus = unit(i);
            minus[j] = -1;
            let mut plus = unit(i);
            plus[j] = 1;
            roots.push((minus, d));
            roots.push((plus, d));
        }
    }
    roots
}

/// `ϱ` from half the multiplicity-weighted sum of positive roots, pulled
/// back along `e^i ↦ 2e_i`.
pub fn rho_from_root_data(case: &FieldCase) -> RhoVector {
    let mut rho = vec![Rational::zero(); case.r];
    for (v, m) in positive_roots(case) {
        for (k, c) in v.iter().enumerate() {
            rho[k] += q(m * c);
        }
    }
    let entries = rho.into_iter().map(|x| x / q(4)).collect();
    RhoVector { case: *case, entries }
}

/// `γ_λ = (−2d)^{|λ|} / Π_b (d/2 (a(b)+1) + l(b))`.
pub fn gamma(lambda: &Partition, d: u32) -> Rational {
    let h = Rational::new(d.into(), 2.into());
    let mut g = num_traits::pow(q(-2 * d as i64), lambda.weight());
    for b in lambda.boxes() {
        let s = arm_leg(lambda, b).unwrap();
        g /= &h * q(s.arm as i64 + 1) + q(s.leg as i64);
    }
    g
}

/// `d_λ(x, s)` as a polynomial in `x1..xr` and `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvaluePoly {
    pub lambda: Partition,
    pub case: FieldCase,
    pub poly: MultiPoly,
}

pub fn eigenvalue_poly(lambda: &Partition, case: &FieldCase) -> Result<EigenvaluePoly> {
    if lambda.len() > case.r {
        return Err(Error::Domain(format!("{} has more than {} parts", lambda, case.r)));
    }
    let p = interpolation_combinatorial(lambda, case.r, &half_d(case))?;
    let rho1 = rho_vector(case).entries[0].clone();
    let shift = &MultiPoly::var(S) - &MultiPoly::constant(rho1);
    let poly = p.poly.substitute(&BTreeMap::from([(ALPHA.to_string(), shift)])).scale(&gamma(lambda, case.d()));
    let mut vars = x_vars(case.r);
    vars.push(S.to_string());
    Ok(EigenvaluePoly { lambda: lambda.clone(), case: *case, poly: poly.with_vars(&vars)? })
}

impl EigenvaluePoly {
    /// Substitutes `x_i ↦ points[i]`.
    pub fn at(&self, points: Vec<MultiPoly>) -> MultiPoly {
        let map = x_vars(self.case.r).into_iter().zip(points).collect();
        self.poly.substitute(&map)
    }
}

/// `c_{λ,s}(μ)`, with `s` formal unless a value is given.
pub fn eigenvalue(lambda: &Partition, mu: &Partition, case: &FieldCase, s: Option<&Rational>) -> Result<MultiPoly> {
    if mu.len() > case.r {
        return Err(Error::Domain(format!("{} has more than {} parts", mu, case.r)));
    }
    let ev = eigenvalue_poly(lambda, case)?;
    let rho = rho_vector(case);
    let pts = mu.padded(case.r).iter().zip(&rho.entries).map(|(&m, p)| MultiPoly::constant(q(m as i64) + p)).collect();
    let v = ev.at(pts);
    Ok(match s {
        Some(val) => v.evaluate(&BTreeMap::from([(S.to_string(), val.clone())])),
        None => v,
    })
}

/// Checks `ϱ_{r−i+1} + (d/2)(r−i) + (s − ϱ₁) = s` for every `i`.
pub fn rho_relation_check(case: &FieldCase) -> bool {
    let rho = rho_vector(case).entries;
    let r = case.r;
    let s = MultiPoly::var(S);
    (1..=r).all(|i| {
        let lhs = &MultiPoly::constant(&rho[r - i] + half_d(case) * q((r - i) as i64) - &rho[0]) + &s;
        lhs == s
    })
}

impl EigenvaluePoly {
    /// `d_λ(ν + ϱ_{d/2, s−ϱ₁}, s)` as a polynomial in `s`.
    pub fn at_shifted(&self, nu: &Partition) -> Result<MultiPoly> {
        let case = &self.case;
        if nu.len() > case.r {
            return Err(Error::Domain(format!("{} has more than {} parts", nu, case.r)));
        }
        let rho1 = rho_vector(case).entries[0].clone();
        let r = case.r;
        let pts = nu
            .padded(r)
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let c = q(v as i64) + half_d(case) * q((r - 1 - i) as i64) - &rho1;
                &MultiPoly::constant(c) + &MultiPoly::var(S)
            })
            .collect();
        Ok(self.at(pts))
    }
}

/// `d_λ(ν + ϱ_{d/2, s−ϱ₁}, s)` as a polynomial in `s`.
pub fn eigenvalue_at_shifted(lambda: &Partition, nu: &Partition, case: &FieldCase) -> Result<MultiPoly> {
    if nu.len() > case.r {
        return Err(Error::Domain(format!("{} has more than {} parts", nu, case.r)));
    }
    eigenvalue_poly(lambda, case)?.at_shifted(nu)
}

/// `Some(true)` if `d_λ(ν + ϱ′, s)` vanishes identically, `None` when
/// `λ ⊆ ν` and the statement does not apply.
pub fn vanishing_theorem_check(lambda: &Partition, nu: &Partition, case: &FieldCase) -> Result<Option<bool>> {
    if contains(lambda, nu) {
        return Ok(None);
    }
    Ok(Some(eigenvalue_at_shifted(lambda, nu, case)?.is_zero()))
}

/// Name of the `i`-th recentred coordinate `μ_i = x_i − ϱ_i`.
pub fn mu_var(i: usize) -> String {
    format!("mu{}", i)
}

/// The first-order eigenvalue `d_(1)(μ + ϱ, 0)` as a polynomial in `μ`.
pub fn first_order_eigenvalue(case: &FieldCase) -> Result<MultiPoly> {
    let ev = eigenvalue_poly(&Partition::new(vec![1]).unwrap(), case)?;
    let rho = rho_vector(case).entries;
    let pts = (0..case.r).map(|i| &MultiPoly::var(&mu_var(i + 1)) + &MultiPoly::constant(rho[i].clone())).collect();
    Ok(ev.at(pts).evaluate(&BTreeMap::from([(S.to_string(), Rational::zero())])))
}

/// The top homogeneous part of `d_(1)(μ + ϱ, 0)` in `μ` equals `−4 Σ μ_i²`.
pub fn first_order_top_check(case: &FieldCase) -> Result<bool> {
    let c1 = first_order_eigenvalue(case)?;
    let names: Vec<String> = (1..=case.r).map(mu_var).collect();
    let grading: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let top = c1.top_homogeneous(&grading);
    let expect = names.iter().fold(MultiPoly::zero(&[]), |acc, v| &acc + &MultiPoly::var(v).pow(2)).scale(&q(-4));
    Ok(top == expect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn case(d: u32, n: usize, r: usize) -> FieldCase {
        FieldCase::new(d, n, r).unwrap()
    }

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(&format!("x{}", i))
    }

    fn c(v: Rational) -> MultiPoly {
        MultiPoly::constant(v)
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_vector(&case(1, 4, 2)).entries, vec![rat(1, 2), q(0)]);
        assert_eq!(rho_vector(&case(2, 4, 2)).entries, vec![rat(3, 2), rat(1, 2)]);
        assert_eq!(rho_vector(&case(1, 2, 1)).entries, vec![q(0)]);
        assert_eq!(rho_from_root_data(&case(1, 4, 2)).entries, vec![rat(1, 2), q(0)]);
        assert_eq!(rho_from_root_data(&case(2, 4, 2)).entries, vec![rat(3, 2), rat(1, 2)]);
        assert_eq!(rho_from_root_data(&case(4, 2, 1)).entries, vec![rat(3, 2)]);
        assert_eq!(rho_vector(&case(4, 2, 1)).entries, vec![rat(3, 2)]);
    }

    #[test]
    fn gamma_examples() {
        for d in [1, 2, 4] {
            assert_eq!(gamma(&p("1"), d), q(-4));
            assert_eq!(gamma(&Partition::empty(), d), q(1));
        }
        assert_eq!(gamma(&p("2,1"), 2), rat(-64, 3));
    }

    #[test]
    fn eigenvalue_poly_examples() {
        let s = MultiPoly::var(S);
        let e = eigenvalue_poly(&p("1"), &case(1, 2, 1)).unwrap();
        assert_eq!(e.poly, (&x(1).pow(2) - &s.pow(2)).scale(&q(-4)));
        assert_eq!(eigenvalue_poly(&Partition::empty(), &case(2, 4, 2)).unwrap().poly, MultiPoly::one());
        let e = eigenvalue_poly(&p("1"), &case(1, 4, 2)).unwrap();
        let inner = &(&(&x(1).pow(2) + &x(2).pow(2)) - &s.pow(2)) - &(&s - &c(rat(1, 2))).pow(2);
        assert_eq!(e.poly, inner.scale(&q(-4)));
    }

    #[test]
    fn eigenvalue_examples() {
        let s = MultiPoly::var(S);
        let cs = case(1, 2, 1);
        assert_eq!(eigenvalue(&p("1"), &p("1"), &cs, None).unwrap(), (&c(q(1)) - &s.pow(2)).scale(&q(-4)));
        assert_eq!(eigenvalue(&p("1"), &Partition::empty(), &cs, None).unwrap(), s.pow(2).scale(&q(4)));
        assert_eq!(
            eigenvalue(&Partition::empty(), &p("2,1"), &case(4, 5, 2), Some(&rat(7, 3))).unwrap(),
            MultiPoly::one()
        );
        assert_eq!(eigenvalue(&p("1"), &p("1"), &cs, Some(&q(2))).unwrap(), c(q(12)));
    }

    #[test]
    fn rho_relation_examples() {
        assert!(rho_relation_check(&case(1, 4, 2)));
        assert!(rho_relation_check(&case(2, 6, 3)));
        assert!(rho_relation_check(&case(4, 2, 1)));
    }

    #[test]
    fn vanishing_examples() {
        assert_eq!(vanishing_theorem_check(&p("1"), &Partition::empty(), &case(1, 2, 1)).unwrap(), Some(true));
        assert_eq!(vanishing_theorem_check(&p("2"), &p("1"), &case(1, 2, 1)).unwrap(), Some(true));
        assert_eq!(vanishing_theorem_check(&p("1,1"), &p("2"), &case(2, 4, 2)).unwrap(), Some(true));
        assert_eq!(vanishing_theorem_check(&p("1"), &p("2"), &case(2, 4, 2)).unwrap(), None);
        assert!(!eigenvalue_at_shifted(&p("1"), &p("1"), &case(1, 2, 1)).unwrap().is_zero());
    }

    #[test]
    fn first_order_examples() {
        assert!(first_order_top_check(&case(1, 2, 1)).unwrap());
        assert!(first_order_top_check(&case(1, 4, 2)).unwrap());
        assert!(first_order_top_check(&case(4, 4, 2)).unwrap());
    }
}
