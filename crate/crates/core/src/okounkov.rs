//! BC-type interpolation polynomials `P_λ(x; τ, α)` in the classical limit.
//!
//! Two constructions are provided: the tableau sum
//! [`interpolation_combinatorial`], which keeps `α` formal, and
//! [`interpolation_vanishing`], which solves the defining interpolation
//! conditions for a fixed rational `α`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{even_symmetrize_basis, solve_exact, x_vars, LinearSystem, MultiPoly, Rational};
use crate::partitions::{arm_leg, enumerate_partitions, rc_set, reverse_tableaux, Box, Partition, ReverseTableau};

/// Name of the formal shift variable.
pub const ALPHA: &str = "alpha";

fn ratu(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// The shift vector `ϱ_{τ,α}` with entries `τ(r−i) + α`.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoTauAlpha {
    pub r: usize,
    pub tau: Rational,
    pub entries: Vec<MultiPoly>,
}

impl RhoTauAlpha {
    pub fn new(r: usize, tau: &Rational) -> Self {
        let a = MultiPoly::var(ALPHA);
        let entries = (1..=r).map(|i| &MultiPoly::constant(tau * ratu(r - i)) + &a).collect();
        RhoTauAlpha { r, tau: tau.clone(), entries }
    }

    /// `μ + ϱ_{τ,α}` as polynomials in `α`.
    pub fn shifted(&self, mu: &Partition) -> Vec<MultiPoly> {
        mu.padded(self.r).iter().zip(&self.entries).map(|(&m, e)| &MultiPoly::constant(ratu(m)) + e).collect()
    }
}

/// An interpolation polynomial together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationPoly {
    pub lambda: Partition,
    pub r: usize,
    pub tau: Rational,
    /// Polynomial in `x1..xr` and `alpha`.
    pub poly: MultiPoly,
}

impl InterpolationPoly {
    /// Specializes the formal `α`.
    pub fn at_alpha(&self, alpha: &Rational) -> MultiPoly {
        self.poly.evaluate(&BTreeMap::from([(ALPHA.to_string(), alpha.clone())]))
    }

    /// `P(μ + ϱ_{τ,α})` as a polynomial in `α`.
    pub fn at_shifted(&self, mu: &Partition) -> Result<MultiPoly> {
        if mu.len() > self.r {
            return Err(Error::Domain(format!("{} has more than {} parts", mu, self.r)));
        }
        let pts = RhoTauAlpha::new(self.r, &self.tau).shifted(mu);
        let map = x_vars(self.r).into_iter().zip(pts).collect();
        Ok(self.poly.substitute(&map))
    }
}

/// `(a + τ(l+1)) / (a + τl + 1)` for the arm `a` and leg `l` of `b` in `mu`.
pub fn b_factor(mu: &Partition, b: Box, tau: &Rational) -> Result<Rational> {
    let s = arm_leg(mu, b)?;
    let num = ratu(s.arm) + tau * ratu(s.leg + 1);
    let den = ratu(s.arm) + tau * ratu(s.leg) + Rational::one();
    if den.is_zero() {
        return Err(Error::NonGenericParameter(format!("b-factor of {} in {} at tau = {}", b, mu, tau)));
    }
    Ok(num / den)
}

/// The tableau weight `ψ_T(τ)`.
pub fn psi_weight(t: &ReverseTableau, tau: &Rational) -> Result<Rational> {
    let mut psi = Rational::one();
    for i in 1..=t.rank() {
        let outer = t.sub_partition(i - 1);
        let inner = t.sub_partition(i);
        for b in rc_set(outer, inner)? {
            psi *= b_factor(inner, b, tau)? / b_factor(outer, b, tau)?;
        }
    }
    Ok(psi)
}

fn check_tau(tau: &Rational) -> Result<()> {
    if *tau <= Rational::zero() {
        return Err(Error::Domain(format!("tau must be positive, got {}", tau)));
    }
    Ok(())
}

/// `Σ_T ψ_T(τ) Π_b (x_{T(b)}² − (a′(b) + τ(r − T(b) − l′(b)) + α)²)`.
pub fn interpolation_combinatorial(lambda: &Partition, r: usize, tau: &Rational) -> Result<InterpolationPoly> {
    check_tau(tau)?;
    if r == 0 {
        return Err(Error::Domain("r must be at least 1".into()));
    }
    let tableaux = reverse_tableaux(lambda, r);
    if tableaux.is_empty() {
        return Err(Error::EmptyTableauSet(format!("{} has more than {} parts", lambda, r)));
    }
    let mut vars = x_vars(r);
    vars.push(ALPHA.to_string());
    let xs: Vec<MultiPoly> = x_vars(r).iter().map(|v| MultiPoly::var(v)).collect();
    let alpha = MultiPoly::var(ALPHA);
    let mut total = MultiPoly::zero_in(vars.clone());
    for t in &tableaux {
        let mut term = MultiPoly::constant(psi_weight(t, tau)?);
        for b in lambda.boxes() {
            let e = t.entry(b);
            let s = arm_leg(lambda, b)?;
            // r − T(b) − l′(b) may be negative
            let shift_tau = r as i64 - e as i64 - s.coleg as i64;
            let shift = ratu(s.coarm) + tau * Rational::from_integer(shift_tau.into());
            let inner = &MultiPoly::constant(shift) + &alpha;
            term = &term * &(&xs[e - 1].pow(2) - &inner.pow(2));
        }
        total = &total + &term;
    }
    Ok(InterpolationPoly { lambda: lambda.clone(), r, tau: tau.clone(), poly: total.with_vars(&vars)? })
}

/// Solves for the `2λ`-monic even-symmetric polynomial of degree `2|λ|`
/// vanishing at `μ + ϱ_{τ,α}` for every other `|μ| ≤ |λ|`, at a fixed `α`.
pub fn interpolation_vanishing(lambda: &Partition, r: usize, tau: &Rational, alpha: &Rational) -> Result<MultiPoly> {
    check_tau(tau)?;
    if lambda.len() > r {
        return Err(Error::Domain(format!("{} has more than {} parts", lambda, r)));
    }
    let n = lambda.weight();
    let index = enumerate_partitions(n, r);
    let basis = even_symmetrize_basis(r, n);
    let vars = x_vars(r);
    let rows: Vec<Vec<Rational>> = index
        .iter()
        .map(|mu| {
            if mu == lambda {
                return index.iter().map(|nu| if nu == lambda { Rational::one() } else { Rational::zero() }).collect();
            }
            let point: BTreeMap<String, Rational> = mu
                .padded(r)
                .iter()
                .enumerate()
                .map(|(i, &m)| (vars[i].clone(), ratu(m) + tau * ratu(r - 1 - i) + alpha))
                .collect();
            basis.iter().map(|b| b.eval_rational(&point).expect("all variables assigned")).collect()
        })
        .collect();
    let rhs = index.iter().map(|mu| if mu == lambda { Rational::one() } else { Rational::zero() }).collect();
    let sys = LinearSystem::new(rows, rhs)?;
    let coeffs = solve_exact(&sys).map_err(|e| match e {
        Error::SingularSystem => {
            Error::NonGenericParameter(format!("interpolation system singular at tau = {}, alpha = {}", tau, alpha))
        }
        other => other,
    })?;
    let mut out = MultiPoly::zero_in(vars);
    for (c, b) in coeffs.iter().zip(&basis) {
        out = &out + &b.scale(c);
    }
    Ok(out)
}

/// True if `P(μ + ϱ_{τ,α})` vanishes identically in `α`.
pub fn check_vanishing(p: &InterpolationPoly, mu: &Partition) -> bool {
    match p.at_shifted(mu) {
        Ok(v) => v.is_zero(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(&format!("x{}", i))
    }

    fn c(q: Rational) -> MultiPoly {
        MultiPoly::constant(q)
    }

    #[test]
    fn b_factor_examples() {
        let tau = rat(3, 7);
        assert_eq!(b_factor(&p("1"), Box::new(1, 1), &tau).unwrap(), tau);
        assert_eq!(b_factor(&p("2"), Box::new(1, 1), &rat(1, 2)).unwrap(), rat(3, 4));
        assert_eq!(b_factor(&p("1,1"), Box::new(1, 1), &int(1)).unwrap(), int(1));
        assert!(matches!(b_factor(&p("1,1"), Box::new(1, 1), &int(-1)), Err(Error::NonGenericParameter(_))));
    }

    #[test]
    fn psi_examples() {
        let tau = rat(2, 5);
        for t in reverse_tableaux(&p("1"), 2) {
            assert_eq!(psi_weight(&t, &tau).unwrap(), int(1));
        }
        let e = reverse_tableaux(&Partition::empty(), 3);
        assert_eq!(e.len(), 1);
        assert_eq!(psi_weight(&e[0], &tau).unwrap(), int(1));
        let t = reverse_tableaux(&p("2"), 2).into_iter().find(|t| t.rows() == [vec![2, 1]]).unwrap();
        assert_eq!(psi_weight(&t, &tau).unwrap(), int(2) * &tau / (int(1) + &tau));
    }

    #[test]
    fn combinatorial_examples() {
        let tau = rat(1, 3);
        let a = MultiPoly::var(ALPHA);
        let p1 = interpolation_combinatorial(&p("1"), 1, &tau).unwrap();
        assert_eq!(p1.poly, &x(1).pow(2) - &a.pow(2));
        let p2 = interpolation_combinatorial(&p("1"), 2, &tau).unwrap();
        let expect = &(&(&x(1).pow(2) + &x(2).pow(2)) - &(&c(tau.clone()) + &a).pow(2)) - &a.pow(2);
        assert_eq!(p2.poly, expect);
        assert_eq!(interpolation_combinatorial(&Partition::empty(), 3, &tau).unwrap().poly, MultiPoly::one());
        assert!(matches!(interpolation_combinatorial(&p("1,1,1"), 2, &tau), Err(Error::EmptyTableauSet(_))));
        assert!(interpolation_combinatorial(&p("1"), 1, &int(0)).is_err());
    }

    #[test]
    fn vanishing_examples() {
        assert_eq!(interpolation_vanishing(&p("1"), 1, &rat(1, 2), &int(1)).unwrap(), &x(1).pow(2) - &c(int(1)));
        assert_eq!(interpolation_vanishing(&Partition::empty(), 2, &int(1), &int(1)).unwrap(), MultiPoly::one());
        assert_eq!(
            interpolation_vanishing(&p("1"), 2, &int(1), &int(2)).unwrap(),
            &(&x(1).pow(2) + &x(2).pow(2)) - &c(int(13))
        );
    }

    #[test]
    fn check_vanishing_examples() {
        let tau = rat(5, 2);
        let p12 = interpolation_combinatorial(&p("1"), 2, &tau).unwrap();
        assert!(check_vanishing(&p12, &Partition::empty()));
        let p11 = interpolation_combinatorial(&p("1"), 1, &tau).unwrap();
        assert!(!check_vanishing(&p11, &p("1")));
        let v = p11.at_shifted(&p("1")).unwrap();
        assert_eq!(v, &c(int(2)) * &MultiPoly::var(ALPHA) + c(int(1)));
        let pe = interpolation_combinatorial(&Partition::empty(), 2, &tau).unwrap();
        assert!(!check_vanishing(&pe, &p("2")));
    }

    #[test]
    fn rho_entries_step_by_tau() {
        let rho = RhoTauAlpha::new(4, &rat(2, 3));
        for w in rho.entries.windows(2) {
            assert_eq!(&w[0] - &w[1], c(rat(2, 3)));
        }
        assert_eq!(rho.entries[3], MultiPoly::var(ALPHA));
    }
}
