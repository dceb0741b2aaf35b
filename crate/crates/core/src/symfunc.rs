//! Schur-basis symmetric functions and Littlewood-Richardson branching.
//!
//! Representations never appear explicitly. Every module is a partition
//! label and every multiplicity is a Littlewood-Richardson count.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::partitions::{contains, double, partitions_of, DoubleMode, Partition, SkewShape};

/// A finite rational combination of Schur functions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    /// The single Schur function `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(lambda, Rational::from_integer(1.into()));
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        let e = self.coeffs.entry(lambda.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(
                |(l, c)| {
                    if *c == Rational::from_integer(1.into()) {
                        format!("s{}", l)
                    } else {
                        format!("{}*s{}", c, l)
                    }
                },
            )
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Number of semistandard fillings of `ν \ μ` with content `λ` whose
/// reading word (rows right to left, top to bottom) is a lattice word.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if !contains(mu, nu) || lambda.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    let rows = nu.len();
    let mut fill: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; nu.get(i)]).collect();
    let mut counts = vec![0usize; lambda.len() + 1];
    let cells: Vec<(usize, usize)> =
        (0..rows).flat_map(|i| (mu.get(i)..nu.get(i)).rev().map(move |j| (i, j))).collect();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        lambda: &Partition,
        fill: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        // right neighbour bounds the entry from above
        let hi = if j + 1 < fill[i].len() && j + 1 >= mu.get(i) { fill[i][j + 1] } else { lambda.len() };
        // entry above bounds it from below
        let lo = if i > 0 && j >= mu.get(i - 1) { fill[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for e in lo..=hi {
            if counts[e] >= lambda.get(e - 1) {
                continue;
            }
            if e > 1 && counts[e] + 1 > counts[e - 1] {
                continue;
            }
            counts[e] += 1;
            fill[i][j] = e;
            total += rec(k + 1, cells, mu, lambda, fill, counts);
            counts[e] -= 1;
        }
        fill[i][j] = 0;
        total
    }
    rec(0, &cells, mu, lambda, &mut fill, &mut counts)
}

fn q(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn schur_product(a: &SymFunc, b: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (la, ca) in a.terms() {
        for (lb, cb) in b.terms() {
            let n = la.weight() + lb.weight();
            for nu in partitions_of(n, la.len() + lb.len()) {
                let c = lr_coefficient(&nu, la, lb);
                if c > 0 {
                    out.add_term(nu, ca * cb * q(c));
                }
            }
        }
    }
    out
}

/// `s_{outer\inner} = Σ_ν c^{outer}_{inner,ν} s_ν`.
pub fn skew_schur(shape: &SkewShape) -> SymFunc {
    let mut out = SymFunc::zero();
    for nu in partitions_of(shape.size(), shape.outer().len()) {
        let c = lr_coefficient(shape.outer(), &nu, shape.inner());
        if c > 0 {
            out.add_term(nu, q(c));
        }
    }
    out
}

/// Rotates a skew shape by 180 degrees inside its `ℓ(outer) × outer₁`
/// bounding box.
pub fn rotate180(shape: &SkewShape) -> SkewShape {
    let rows = shape.outer().len();
    let cols = shape.outer().get(0);
    let outer = (0..rows).map(|i| cols - shape.inner().get(rows - 1 - i)).collect();
    let inner = (0..rows).map(|i| cols - shape.outer().get(rows - 1 - i)).collect();
    SkewShape::new(Partition::new(outer).unwrap(), Partition::new(inner).unwrap()).expect("complement is a skew shape")
}

/// The base field, encoded by its real dimension `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Real,
    Complex,
    Quaternion,
}

impl Field {
    pub fn from_d(d: u32) -> Result<Field> {
        match d {
            1 => Ok(Field::Real),
            2 => Ok(Field::Complex),
            4 => Ok(Field::Quaternion),
            _ => Err(Error::Domain(format!("d must be 1, 2 or 4, got {}", d))),
        }
    }

    pub fn d(self) -> u32 {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
            Field::Quaternion => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Field::Real => "R",
            Field::Complex => "C",
            Field::Quaternion => "H",
        }
    }
}

/// A field together with `n` and `r`, where `1 ≤ r ≤ n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldCase {
    pub field: Field,
    pub n: usize,
    pub r: usize,
}

impl FieldCase {
    pub fn new(d: u32, n: usize, r: usize) -> Result<Self> {
        let field = Field::from_d(d)?;
        if r < 1 || 2 * r > n {
            return Err(Error::Domain(format!("need 1 <= r <= n/2, got n = {}, r = {}", n, r)));
        }
        Ok(FieldCase { field, n, r })
    }

    pub fn d(&self) -> u32 {
        self.field.d()
    }
}

impl fmt::Display for FieldCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, n={}, r={})", self.d(), self.n, self.r)
    }
}

fn check_len(p: &Partition, r: usize) -> Result<()> {
    if p.len() > r {
        return Err(Error::Domain(format!("{} has more than {} parts", p, r)));
    }
    Ok(())
}

/// `[V_μ : E_λ]`, the multiplicity of the spherical module labelled `μ`
/// in the restriction of the module labelled `λ`.
pub fn restriction_multiplicity(case: &FieldCase, mu: &Partition, lambda: &Partition) -> Result<u64> {
    check_len(mu, case.r)?;
    check_len(lambda, case.r)?;
    match case.field {
        Field::Real | Field::Quaternion => {
            let mode = if case.field == Field::Real { DoubleMode::Stretch } else { DoubleMode::Duplicate };
            if mu.weight() > lambda.weight() {
                return Ok(0);
            }
            let big = double(lambda, mode);
            let small = double(mu, mode);
            Ok(partitions_of(lambda.weight() - mu.weight(), case.r)
                .iter()
                .map(|xi| lr_coefficient(&big, &small, &double(xi, mode)))
                .sum())
        }
        Field::Complex => Ok(complex_multiplicity(case, mu, lambda)),
    }
}

/// Multiplicity of `(μ₁,…,μ_r,0,…,0,−μ_r,…,−μ₁)` in `M_λ̃ ⊗ M*_λ̃`
/// restricted to the diagonal, after twisting by `det^M`.
fn complex_multiplicity(case: &FieldCase, mu: &Partition, lambda: &Partition) -> u64 {
    let (n, r) = (case.n, case.r);
    let m = lambda.get(0).max(mu.get(0));
    let mut target = vec![m; n];
    let mut beta = vec![m; n];
    for i in 0..r {
        target[i] = m + mu.get(i);
        target[n - 1 - i] = m - mu.get(i);
        beta[n - 1 - i] = m - lambda.get(i);
    }
    let target = Partition::new(target).unwrap();
    let beta = Partition::new(beta).unwrap();
    lr_coefficient(&target, lambda, &beta)
}

/// `(m − p_r, …, m − p_1)` for `p` of length at most `r`.
pub fn complement_in_rectangle(p: &Partition, r: usize, m: usize) -> Result<Partition> {
    check_len(p, r)?;
    if p.get(0) > m {
        return Err(Error::Domain(format!("{} does not fit in {} columns", p, m)));
    }
    Partition::new((0..r).map(|i| m - p.get(r - 1 - i)).collect())
}

/// Labels `μ`, with multiplicity, of the decomposition of the `r × m`
/// rectangle module. Fails unless the result is multiplicity free and
/// equal to `{μ ⊆ (m^r)}`.
pub fn rectangular_decomposition(case: &FieldCase, m: usize) -> Result<Vec<Partition>> {
    let r = case.r;
    let rect = Partition::rectangle(r, m);
    let mut labels: Vec<Partition> = Vec::new();
    match case.field {
        Field::Real | Field::Quaternion => {
            let candidates: Vec<Partition> = (0..=r * m).flat_map(|w| partitions_of(w, r)).collect();
            let xis: Vec<Partition> = candidates.iter().filter(|x| contains(x, &rect)).cloned().collect();
            for mu in &candidates {
                let lr = restriction_multiplicity(case, mu, &rect)?;
                let delta =
                    xis.iter().filter(|xi| complement_in_rectangle(xi, r, m).ok().as_ref() == Some(mu)).count() as u64;
                if lr != delta {
                    return Err(Error::PropertyViolation(format!(
                        "{}: LR multiplicity {} of {} differs from rotation count {}",
                        case, lr, mu, delta
                    )));
                }
                for _ in 0..lr {
                    labels.push(mu.clone());
                }
            }
        }
        Field::Complex => {
            let n = case.n;
            let alpha = Partition::new([vec![m; r], vec![0; n - r]].concat()).unwrap();
            let beta = Partition::new([vec![m; n - r], vec![0; r]].concat()).unwrap();
            for eta in partitions_of(n * m, n) {
                let c = lr_coefficient(&eta, &alpha, &beta);
                if c == 0 {
                    continue;
                }
                let xi = weight_pattern_label(&eta, n, r, m).ok_or_else(|| {
                    Error::PropertyViolation(format!("{}: constituent {} is not of the expected form", case, eta))
                })?;
                let direct = restriction_multiplicity(case, &xi, &rect)?;
                if direct != c {
                    return Err(Error::PropertyViolation(format!(
                        "{}: pattern multiplicity {} of {} differs from restriction multiplicity {}",
                        case, c, xi, direct
                    )));
                }
                for _ in 0..c {
                    labels.push(xi.clone());
                }
            }
            labels.sort_by(|a, b| a.weight().cmp(&b.weight()).then(b.cmp(a)));
        }
    }
    let expected: Vec<Partition> =
        (0..=r * m).flat_map(|w| partitions_of(w, r)).filter(|p| contains(p, &rect)).collect();
    if labels != expected {
        return Err(Error::PropertyViolation(format!(
            "{}: decomposition for m = {} is [{}], expected [{}]",
            case,
            m,
            labels.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
            expected.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
        )));
    }
    Ok(labels)
}

/// Recovers `ξ` from `(m+ξ₁,…,m+ξ_r, m,…,m, m−ξ_r,…,m−ξ₁)`.
fn weight_pattern_label(eta: &Partition, n: usize, r: usize, m: usize) -> Option<Partition> {
    let e = eta.padded(n);
    let xi: Vec<usize> = (0..r).map(|i| e[i].checked_sub(m)).collect::<Option<_>>()?;
    let mut expect = vec![m; n];
    for i in 0..r {
        expect[i] = m + xi[i];
        expect[n - 1 - i] = m.checked_sub(xi[i])?;
    }
    if expect != e {
        return None;
    }
    Partition::new(xi).ok()
}

/// The implication `[V_η : E_χ] > 0 ⇒ λ ⊆ ν` with
/// `η = (m−ν_r,…,m−ν₁)` and `χ = (m−λ_r,…,m−λ₁)`.
pub fn containment_necessity(case: &FieldCase, lambda: &Partition, nu: &Partition, m: usize) -> Result<bool> {
    if m < lambda.get(0).max(nu.get(0)) {
        return Err(Error::Domain(format!("m = {} is smaller than the first parts of {} and {}", m, lambda, nu)));
    }
    let eta = complement_in_rectangle(nu, case.r, m)?;
    let chi = complement_in_rectangle(lambda, case.r, m)?;
    let mult = restriction_multiplicity(case, &eta, &chi)?;
    Ok(mult == 0 || contains(lambda, nu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn s(l: &str) -> SymFunc {
        SymFunc::schur(p(l))
    }

    fn sum(fs: &[SymFunc]) -> SymFunc {
        let mut out = SymFunc::zero();
        for f in fs {
            for (l, c) in f.terms() {
                out.add_term(l.clone(), c.clone());
            }
        }
        out
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("2,1"), &p("1,1"), &p("1")), 1);
        assert_eq!(lr_coefficient(&p("2"), &p("1"), &p("1")), 1);
        assert_eq!(lr_coefficient(&p("1,1"), &p("2"), &Partition::empty()), 0);
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
        assert_eq!(lr_coefficient(&p("4"), &p("2"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("4,2"), &p("2"), &p("2")), 0);
    }

    #[test]
    fn product_examples() {
        assert_eq!(schur_product(&s("1"), &s("1")), sum(&[s("2"), s("1,1")]));
        let a = sum(&[s("2"), s("1,1")]);
        assert_eq!(schur_product(&s(""), &a), a);
        assert_eq!(schur_product(&s("1"), &s("1,1")), sum(&[s("2,1"), s("1,1,1")]));
    }

    #[test]
    fn skew_examples() {
        let sh = |o: &str, i: &str| SkewShape::new(p(o), p(i)).unwrap();
        assert_eq!(skew_schur(&sh("2,1", "1")), sum(&[s("2"), s("1,1")]));
        assert_eq!(skew_schur(&sh("3,1", "3,1")), s(""));
        assert_eq!(skew_schur(&sh("2,2", "1")), s("2,1"));
        assert!(SkewShape::new(p("1"), p("2")).is_err());
    }

    #[test]
    fn rotation_examples() {
        let sh = |o: &str, i: &str| SkewShape::new(p(o), p(i)).unwrap();
        assert_eq!(rotate180(&sh("2,1", "1")), sh("2,1", "1"));
        assert_eq!(rotate180(&sh("2,2", "1")), sh("2,1", ""));
        assert_eq!(rotate180(&sh("2,2", "2,2")).size(), 0);
    }

    #[test]
    fn restriction_examples() {
        let c = FieldCase::new(1, 2, 1).unwrap();
        assert_eq!(restriction_multiplicity(&c, &p("1"), &p("2")).unwrap(), 1);
        assert_eq!(restriction_multiplicity(&c, &p("2"), &p("1")).unwrap(), 0);
        for d in [1, 2, 4] {
            let c = FieldCase::new(d, 4, 2).unwrap();
            assert_eq!(restriction_multiplicity(&c, &Partition::empty(), &Partition::empty()).unwrap(), 1);
        }
    }

    #[test]
    fn rectangular_examples() {
        let c2 = FieldCase::new(2, 2, 1).unwrap();
        assert_eq!(rectangular_decomposition(&c2, 1).unwrap(), vec![p(""), p("1")]);
        let c1 = FieldCase::new(1, 2, 1).unwrap();
        assert_eq!(rectangular_decomposition(&c1, 1).unwrap(), vec![p(""), p("1")]);
        for d in [1, 2, 4] {
            let c = FieldCase::new(d, 5, 2).unwrap();
            assert_eq!(rectangular_decomposition(&c, 0).unwrap(), vec![p("")]);
        }
    }

    #[test]
    fn containment_examples() {
        let c1 = FieldCase::new(1, 2, 1).unwrap();
        assert!(containment_necessity(&c1, &p("1"), &p("1"), 2).unwrap());
        let c2 = FieldCase::new(2, 2, 1).unwrap();
        assert!(containment_necessity(&c2, &p("1"), &p(""), 1).unwrap());
        let eta = complement_in_rectangle(&p(""), 1, 1).unwrap();
        let chi = complement_in_rectangle(&p("1"), 1, 1).unwrap();
        assert_eq!(restriction_multiplicity(&c2, &eta, &chi).unwrap(), 0);
        assert!(containment_necessity(&c2, &p(""), &p("2"), 2).unwrap());
        assert!(containment_necessity(&c2, &p("3"), &p(""), 2).is_err());
    }

    #[test]
    fn field_case_validation() {
        assert!(FieldCase::new(3, 4, 1).is_err());
        assert!(FieldCase::new(1, 3, 2).is_err());
        assert!(FieldCase::new(1, 3, 0).is_err());
        assert!(FieldCase::new(4, 4, 2).is_ok());
    }
}
