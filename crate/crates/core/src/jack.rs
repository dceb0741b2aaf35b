//! Monic Jack polynomials over the monomial basis and the power-sum
//! expansion of `(y₁ + ⋯ + y_r)^m`.
//!
//! `jack(λ, r, τ)` is the Jack polynomial with Jack parameter `1/τ`,
//! normalized so that the coefficient of `m_λ` is 1. It is computed as an
//! eigenfunction of the Laplace-Beltrami operator
//!
//! ```text
//! D(a) = (a/2) Σ_i x_i² ∂_i² + Σ_{i<j} (x_i² ∂_i − x_j² ∂_j) / (x_i − x_j)
//! ```
//!
//! which is triangular on the monomial basis in dominance order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{monomial_symmetric, x_vars, MultiPoly, Rational};
use crate::partitions::{arm_leg, partitions_of, Partition};

/// A symmetric polynomial expanded over `m_μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JackPoly {
    pub lambda: Partition,
    pub r: usize,
    pub tau: Rational,
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl JackPoly {
    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    /// The polynomial in `x1..xr` with every variable raised to `power`.
    pub fn to_poly(&self, power: u32) -> MultiPoly {
        let vars = x_vars(self.r);
        let mut out = MultiPoly::zero_in(vars.clone());
        for (mu, c) in &self.coeffs {
            out = &out + &monomial_symmetric(mu, &vars, power).scale(c);
        }
        out
    }
}

/// `(h − s_ij h) / (x_i − x_j)`, computed term by term.
fn divided_difference(h: &MultiPoly, i: usize, j: usize) -> MultiPoly {
    let mut terms = Vec::new();
    for (m, c) in h.terms() {
        let (a, b) = (m.0[i], m.0[j]);
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, c.clone()) } else { (b, a, -c.clone()) };
        // x_i^lo x_j^lo (x_i^(hi−lo) − x_j^(hi−lo)) / (x_i − x_j)
        for k in 0..hi - lo {
            let mut e = m.0.clone();
            e[i] = lo + (hi - lo - 1 - k);
            e[j] = lo + k;
            terms.push((e, sign.clone()));
        }
    }
    MultiPoly::from_terms(h.vars().to_vec(), terms).expect("same variables")
}

/// Applies the Laplace-Beltrami operator with Jack parameter `a`.
pub fn laplace_beltrami(f: &MultiPoly, r: usize, a: &Rational) -> MultiPoly {
    let vars = x_vars(r);
    let f = f.with_vars(&vars).expect("polynomial in x1..xr");
    let half_a = a / Rational::from_integer(2.into());
    let mut out = MultiPoly::zero_in(vars.clone());
    let sq = |i: usize| MultiPoly::var(&vars[i]).pow(2);
    let mut xi2_di: Vec<MultiPoly> = Vec::with_capacity(r);
    for (i, v) in vars.iter().enumerate() {
        let d1 = f.derivative(v);
        let d2 = d1.derivative(v);
        out = &out + &(&sq(i) * &d2).scale(&half_a);
        xi2_di.push((&sq(i) * &d1).with_vars(&vars).unwrap());
    }
    for (i, h) in xi2_di.iter().enumerate() {
        for j in i + 1..r {
            out = &out + &divided_difference(h, i, j);
        }
    }
    out
}

/// Coefficients of a symmetric polynomial in `x1..xr` over `m_μ`, read off
/// the dominant monomials.
pub fn monomial_coefficients(f: &MultiPoly, r: usize) -> BTreeMap<Partition, Rational> {
    let f = f.with_vars(&x_vars(r)).expect("polynomial in x1..xr");
    let mut out = BTreeMap::new();
    for (m, c) in f.terms() {
        if m.0.windows(2).all(|w| w[0] >= w[1]) {
            let mu = Partition::new(m.0.iter().map(|&e| e as usize).collect()).unwrap();
            out.insert(mu, c.clone());
        }
    }
    out
}

/// Monic Jack polynomial with Jack parameter `a`.
pub fn jack_with_parameter(lambda: &Partition, r: usize, a: &Rational) -> Result<BTreeMap<Partition, Rational>> {
    if lambda.len() > r {
        return Err(Error::Domain(format!("{} has more than {} parts", lambda, r)));
    }
    let vars = x_vars(r);
    let below: Vec<Partition> =
        partitions_of(lambda.weight(), r).into_iter().filter(|mu| lambda.dominates(mu)).collect();
    // operator matrix: column ν holds the m-expansion of D m_ν
    let images: BTreeMap<Partition, BTreeMap<Partition, Rational>> = below
        .iter()
        .map(|nu| {
            let img = laplace_beltrami(&monomial_symmetric(nu, &vars, 1), r, a);
            (nu.clone(), monomial_coefficients(&img, r))
        })
        .collect();
    let eig = |mu: &Partition| images[mu].get(mu).cloned().unwrap_or_else(Rational::zero);
    let e_lambda = eig(lambda);
    let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
    coeffs.insert(lambda.clone(), Rational::one());
    // `below` is lexicographically decreasing, a linear extension of dominance
    for mu in below.iter().skip(1) {
        let mut s = Rational::zero();
        for (nu, u) in &coeffs {
            if nu != mu {
                if let Some(c) = images[nu].get(mu) {
                    s += u * c;
                }
            }
        }
        let gap = &e_lambda - eig(mu);
        if gap.is_zero() {
            return Err(Error::NonGenericParameter(format!(
                "eigenvalues of {} and {} coincide at Jack parameter {}",
                lambda, mu, a
            )));
        }
        let u = s / gap;
        if !u.is_zero() {
            coeffs.insert(mu.clone(), u);
        }
    }
    Ok(coeffs)
}

/// The `λ`-monic Jack polynomial `𝖯_λ(x, τ)` (Jack parameter `1/τ`).
pub fn jack(lambda: &Partition, r: usize, tau: &Rational) -> Result<JackPoly> {
    if *tau <= Rational::zero() {
        return Err(Error::Domain(format!("tau must be positive, got {}", tau)));
    }
    let coeffs = jack_with_parameter(lambda, r, &(Rational::one() / tau))?;
    Ok(JackPoly { lambda: lambda.clone(), r, tau: tau.clone(), coeffs })
}

fn half(d: u32) -> Rational {
    Rational::new(d.into(), 2.into())
}

/// `(d/2)^m m! / Π_b (d/2 (a(b)+1) + l(b))` with `m = |λ|`.
pub fn stanley_coefficient(lambda: &Partition, d: u32) -> Rational {
    let h = half(d);
    let m = lambda.weight();
    let mut c = num_traits::pow(h.clone(), m);
    for k in 2..=m {
        c *= Rational::from_integer(k.into());
    }
    for b in lambda.boxes() {
        let s = arm_leg(lambda, b).unwrap();
        c /= &h * Rational::from_integer((s.arm + 1).into()) + Rational::from_integer(s.leg.into());
    }
    c
}

/// Both sides of the power-sum expansion, over `m_μ`.
#[derive(Debug, Clone, PartialEq)]
pub struct StanleyReport {
    pub lhs: BTreeMap<Partition, Rational>,
    pub rhs: BTreeMap<Partition, Rational>,
}

impl StanleyReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Expands `(y₁+⋯+y_r)^m` and `Σ_{|λ|=m} c_λ 𝖯_λ(y, d/2)` over `m_μ(y)`.
pub fn stanley_sides(m: usize, r: usize, d: u32) -> Result<StanleyReport> {
    let vars = x_vars(r);
    let sum = vars.iter().fold(MultiPoly::zero_in(vars.clone()), |acc, v| &acc + &MultiPoly::var(v));
    let lhs = monomial_coefficients(&sum.pow(m as u32), r);
    let tau = half(d);
    let mut rhs: BTreeMap<Partition, Rational> = BTreeMap::new();
    for lambda in partitions_of(m, r) {
        let c = stanley_coefficient(&lambda, d);
        for (mu, u) in jack(&lambda, r, &tau)?.coeffs {
            *rhs.entry(mu).or_insert_with(Rational::zero) += &c * u;
        }
    }
    rhs.retain(|_, v| !v.is_zero());
    Ok(StanleyReport { lhs, rhs })
}

pub fn stanley_check(m: usize, r: usize, d: u32) -> bool {
    stanley_sides(m, r, d).map(|s| s.holds()).unwrap_or(false)
}

/// True if `f` is invariant under permutations of `x1..xr`.
pub fn is_symmetric(f: &MultiPoly, r: usize) -> bool {
    let f = f.with_vars(&x_vars(r)).expect("polynomial in x1..xr");
    let coeffs = monomial_coefficients(&f, r);
    let vars = x_vars(r);
    let mut rebuilt = MultiPoly::zero_in(vars.clone());
    for (mu, c) in &coeffs {
        rebuilt = &rebuilt + &monomial_symmetric(mu, &vars, 1).scale(c);
    }
    rebuilt == f
}
