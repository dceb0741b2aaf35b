//! Polynomial-coefficient differential operators in normal order, and the
//! operators of the first quadratic Capelli identity for each base field.
//!
//! A term `c · x^a ∂^b` always has every multiplication to the left of
//! every derivative, so operator equality is coefficient equality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, MultiPoly, Rational};
use crate::symfunc::Field;

/// A normal-ordered element of the Weyl algebra over named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    vars: Vec<String>,
    /// Key is the multiplication exponents followed by the derivative
    /// exponents.
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn falling(c: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(c - i))
}

fn binomial(b: u32, k: u32) -> BigInt {
    falling(b, k) / falling(k, k)
}

impl WeylElement {
    pub fn zero(vars: &[String]) -> Self {
        WeylElement { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    /// The identity operator.
    pub fn identity(vars: &[String]) -> Self {
        WeylElement::scalar(vars, Rational::one())
    }

    pub fn scalar(vars: &[String], c: Rational) -> Self {
        let mut w = WeylElement::zero(vars);
        w.add_term(vec![0; 2 * vars.len()], c);
        w
    }

    fn index(&self, v: &str) -> Result<usize> {
        self.vars.iter().position(|w| w == v).ok_or_else(|| Error::Domain(format!("unknown variable {}", v)))
    }

    /// Multiplication by a variable.
    pub fn mul_var(vars: &[String], v: &str) -> Result<Self> {
        let mut w = WeylElement::zero(vars);
        let k = w.index(v)?;
        let mut e = vec![0; 2 * vars.len()];
        e[k] = 1;
        w.add_term(e, Rational::one());
        Ok(w)
    }

    /// The partial derivative in a variable.
    pub fn deriv(vars: &[String], v: &str) -> Result<Self> {
        let mut w = WeylElement::zero(vars);
        let k = w.index(v)?;
        let mut e = vec![0; 2 * vars.len()];
        e[vars.len() + k] = 1;
        w.add_term(e, Rational::one());
        Ok(w)
    }

    /// Multiplication by a polynomial.
    pub fn multiplication(vars: &[String], p: &MultiPoly) -> Result<Self> {
        let p = p.with_vars(vars)?;
        let mut w = WeylElement::zero(vars);
        for (m, c) in p.terms() {
            let mut e = m.0.clone();
            e.extend(std::iter::repeat_n(0, vars.len()));
            w.add_term(e, c.clone());
        }
        Ok(w)
    }

    /// The constant-coefficient operator obtained by replacing every
    /// variable of `p` with its partial derivative.
    pub fn constant_coefficient(vars: &[String], p: &MultiPoly) -> Result<Self> {
        let p = p.with_vars(vars)?;
        let mut w = WeylElement::zero(vars);
        for (m, c) in p.terms() {
            let mut e = vec![0; vars.len()];
            e.extend(m.0.iter().copied());
            w.add_term(e, c.clone());
        }
        Ok(w)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(multiplication exponents, derivative exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[u32], &Rational)> {
        let n = self.vars.len();
        self.terms.iter().map(move |(k, c)| (&k[..n], &k[n..], c))
    }

    fn add_term(&mut self, key: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn check_same(&self, other: &WeylElement) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::Domain("operators on different variable layouts".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeylElement) -> Result<WeylElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> WeylElement {
        let mut out = WeylElement::zero(&self.vars);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    /// The normal-ordered product `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_same(other)?;
        let n = self.vars.len();
        let mut out = WeylElement::zero(&self.vars);
        for (ka, ca) in &self.terms {
            let (a, b) = ka.split_at(n);
            for (kb, cb) in &other.terms {
                let (c, d) = kb.split_at(n);
                // variables where a derivative meets a multiplication
                let clash: Vec<usize> = (0..n).filter(|&v| b[v] > 0 && c[v] > 0).collect();
                let mut ks = vec![0u32; clash.len()];
                loop {
                    let mut coef = ca * cb;
                    let mut key = Vec::with_capacity(2 * n);
                    key.extend((0..n).map(|v| a[v] + c[v]));
                    key.extend((0..n).map(|v| b[v] + d[v]));
                    for (t, &v) in clash.iter().enumerate() {
                        let k = ks[t];
                        coef *= Rational::from_integer(binomial(b[v], k) * falling(c[v], k));
                        key[v] -= k;
                        key[n + v] -= k;
                    }
                    out.add_term(key, coef);
                    // next multi-index
                    let mut t = 0;
                    while t < clash.len() {
                        let v = clash[t];
                        if ks[t] < b[v].min(c[v]) {
                            ks[t] += 1;
                            break;
                        }
                        ks[t] = 0;
                        t += 1;
                    }
                    if t == clash.len() {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn square(&self) -> WeylElement {
        self.compose(self).expect("same layout")
    }

    /// Acts on a polynomial in (a subset of) the operator's variables.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let n = self.vars.len();
        let p = p.with_vars(&self.vars)?;
        let mut terms: Vec<(Vec<u32>, Rational)> = Vec::new();
        for (key, c) in &self.terms {
            let (a, b) = key.split_at(n);
            for (m, pc) in p.terms() {
                if (0..n).any(|v| m.0[v] < b[v]) {
                    continue;
                }
                let mut coef = c * pc;
                let mut e = vec![0u32; n];
                for v in 0..n {
                    coef *= Rational::from_integer(falling(m.0[v], b[v]));
                    e[v] = m.0[v] - b[v] + a[v];
                }
                terms.push((e, coef));
            }
        }
        MultiPoly::from_terms(self.vars.clone(), terms)
    }

    /// Total order of the operator (highest derivative degree).
    pub fn order(&self) -> u32 {
        let n = self.vars.len();
        self.terms.keys().map(|k| k[n..].iter().sum()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> WeylJson {
        let n = self.vars.len();
        WeylJson {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| WeylTermJson { x: k[..n].to_vec(), d: k[n..].to_vec(), coef: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &WeylJson) -> Result<WeylElement> {
        let n = j.vars.len();
        let mut w = WeylElement::zero(&j.vars);
        for t in &j.terms {
            if t.x.len() != n || t.d.len() != n {
                return Err(Error::Parse(format!("term exponents do not match {} variables", n)));
            }
            let mut key = t.x.clone();
            key.extend(t.d.iter().copied());
            w.add_term(key, parse_rational(&t.coef)?);
        }
        Ok(w)
    }

    pub fn from_json_str(s: &str) -> Result<WeylElement> {
        let j: WeylJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        WeylElement::from_json(&j)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let n = self.vars.len();
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (v, &e) in self.vars.iter().zip(&k[..n]) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    e => factors.push(format!("{}^{}", v, e)),
                }
            }
            for (v, &e) in self.vars.iter().zip(&k[n..]) {
                match e {
                    0 => {}
                    1 => factors.push(format!("d[{}]", v)),
                    e => factors.push(format!("d[{}]^{}", v, e)),
                }
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if factors.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "({})*{}", c, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// JSON form `{"vars": [...], "terms": [{"x": [...], "d": [...], "coef": "p/q"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylJson {
    pub vars: Vec<String>,
    pub terms: Vec<WeylTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylTermJson {
    pub x: Vec<u32>,
    pub d: Vec<u32>,
    pub coef: String,
}

/// Which copy of the general linear algebra a polarization operator
/// comes from. Only the complex case distinguishes left and right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plain,
    Left,
    Right,
}

/// A field together with the coordinate layout of its operators.
///
/// Real: `y{i}_{a}` for `i ≤ n`, `a ≤ r`. Complex: `z{i}_{a}` and
/// `xi{i}_{a}`. Quaternion: `xi{p}_{s}` for `p ≤ 2n`, `s ≤ 2r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorCase {
    pub field: Field,
    pub n: usize,
    pub r: usize,
    vars: Vec<String>,
}

fn name(prefix: &str, i: usize, a: usize) -> String {
    format!("{}{}_{}", prefix, i, a)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl OperatorCase {
    /// Only `n, r ≥ 1` is required for the layout.
    pub fn new(d: u32, n: usize, r: usize) -> Result<Self> {
        let field = Field::from_d(d)?;
        if n == 0 || r == 0 {
            return Err(Error::Domain(format!("need n, r >= 1, got n = {}, r = {}", n, r)));
        }
        let mut vars = Vec::new();
        match field {
            Field::Real => {
                for i in 1..=n {
                    for a in 1..=r {
                        vars.push(name("y", i, a));
                    }
                }
            }
            Field::Complex => {
                for prefix in ["z", "xi"] {
                    for i in 1..=n {
                        for a in 1..=r {
                            vars.push(name(prefix, i, a));
                        }
                    }
                }
            }
            Field::Quaternion => {
                for p in 1..=2 * n {
                    for s in 1..=2 * r {
                        vars.push(name("xi", p, s));
                    }
                }
            }
        }
        Ok(OperatorCase { field, n, r, vars })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    fn x(&self, v: &str) -> WeylElement {
        WeylElement::mul_var(&self.vars, v).expect("layout variable")
    }

    fn dx(&self, v: &str) -> WeylElement {
        WeylElement::deriv(&self.vars, v).expect("layout variable")
    }

    fn zero(&self) -> WeylElement {
        WeylElement::zero(&self.vars)
    }

    /// Number of rows of the coordinate matrix that polarization indices run over.
    fn rows(&self) -> usize {
        match self.field {
            Field::Quaternion => 2 * self.n,
            _ => self.n,
        }
    }

    fn cols(&self) -> usize {
        match self.field {
            Field::Quaternion => 2 * self.r,
            _ => self.r,
        }
    }
}

fn sum<I: IntoIterator<Item = WeylElement>>(zero: WeylElement, it: I) -> WeylElement {
    it.into_iter().fold(zero, |acc, t| acc.add(&t).expect("same layout"))
}

fn prod(a: &WeylElement, b: &WeylElement) -> WeylElement {
    a.compose(b).expect("same layout")
}

fn plus(a: &WeylElement, b: &WeylElement) -> WeylElement {
    a.add(b).expect("same layout")
}

fn minus(a: &WeylElement, b: &WeylElement) -> WeylElement {
    a.sub(b).expect("same layout")
}

/// The polarization operator `E_{i,j}` (1-based).
///
/// Real: `−Σ_a y_{j,a} ∂_{i,a}`. Complex left: `Σ_a z_{i,a} ∂z_{j,a}`;
/// right: `−Σ_a ξ_{j,a} ∂ξ_{i,a}`; plain: their sum. Quaternion:
/// `−Σ_s ξ_{j,s} ∂ξ_{i,s}`.
pub fn polarization(oc: &OperatorCase, i: usize, j: usize, side: Side) -> Result<WeylElement> {
    let rows = oc.rows();
    if i == 0 || j == 0 || i > rows || j > rows {
        return Err(Error::Domain(format!("indices ({}, {}) outside 1..={}", i, j, rows)));
    }
    let cols = oc.cols();
    let left = || sum(oc.zero(), (1..=cols).map(|a| prod(&oc.x(&name("z", i, a)), &oc.dx(&name("z", j, a)))));
    let right =
        || sum(oc.zero(), (1..=cols).map(|a| prod(&oc.x(&name("xi", j, a)), &oc.dx(&name("xi", i, a))))).scale(&q(-1));
    match (oc.field, side) {
        (Field::Real, Side::Plain) => {
            Ok(sum(oc.zero(), (1..=cols).map(|a| prod(&oc.x(&name("y", j, a)), &oc.dx(&name("y", i, a)))))
                .scale(&q(-1)))
        }
        (Field::Quaternion, Side::Plain) => {
            Ok(sum(oc.zero(), (1..=cols).map(|a| prod(&oc.x(&name("xi", j, a)), &oc.dx(&name("xi", i, a)))))
                .scale(&q(-1)))
        }
        (Field::Complex, Side::Left) => Ok(left()),
        (Field::Complex, Side::Right) => Ok(right()),
        (Field::Complex, Side::Plain) => Ok(plus(&left(), &right())),
        (f, s) => Err(Error::Domain(format!("side {:?} is not defined for {:?}", s, f))),
    }
}

fn pol(oc: &OperatorCase, i: usize, j: usize, side: Side) -> WeylElement {
    polarization(oc, i, j, side).expect("indices in range")
}

/// `Σ_{i<j} (E_{i,j} − E_{j,i})²`, which equals `−2(n−2) Ω_𝔨` in the real case.
pub fn real_rotation_sum(oc: &OperatorCase) -> Result<WeylElement> {
    if oc.field != Field::Real {
        return Err(Error::Domain("rotation sum is defined for the real case".into()));
    }
    let n = oc.n;
    let mut out = oc.zero();
    for i in 1..=n {
        for j in i + 1..=n {
            let l = minus(&pol(oc, i, j, Side::Plain), &pol(oc, j, i, Side::Plain));
            out = plus(&out, &l.square());
        }
    }
    Ok(out)
}

/// Casimir operator of the compact subalgebra.
///
/// In the real case this divides by `n − 2` and fails at `n = 2`; use
/// [`real_rotation_sum`] there.
pub fn casimir_k(oc: &OperatorCase) -> Result<WeylElement> {
    let n = oc.n;
    match oc.field {
        Field::Real => {
            if n == 2 {
                return Err(Error::NonGenericParameter("the real Casimir normalization degenerates at n = 2".into()));
            }
            let c = Rational::new((-1).into(), (2 * (n as i64 - 2)).into());
            Ok(real_rotation_sum(oc)?.scale(&c))
        }
        Field::Complex => {
            let mut out = oc.zero();
            for i in 1..=n {
                for j in 1..=n {
                    out = plus(&out, &prod(&pol(oc, i, j, Side::Plain), &pol(oc, j, i, Side::Plain)));
                }
            }
            Ok(out)
        }
        Field::Quaternion => {
            let e = |p: usize, q: usize| pol(oc, p, q, Side::Plain);
            let quarter = Rational::new(1.into(), (4 * (2 * n as i64 + 1)).into());
            let half = Rational::new(1.into(), (2 * (2 * n as i64 + 1)).into());
            let mut s1 = oc.zero();
            for p in 1..=n {
                for qq in 1..=n {
                    let a = minus(&e(p, qq), &e(qq + n, p + n));
                    let b = minus(&e(qq, p), &e(p + n, qq + n));
                    s1 = plus(&s1, &prod(&a, &b));
                }
            }
            let mut s2 = oc.zero();
            let mut s4 = oc.zero();
            for p in 1..=n {
                for qq in p + 1..=n {
                    let a = plus(&e(p, qq + n), &e(qq, p + n));
                    let b = plus(&e(qq + n, p), &e(p + n, qq));
                    s2 = plus(&s2, &prod(&a, &b));
                    let c = plus(&e(p + n, qq), &e(qq + n, p));
                    let d = plus(&e(qq, p + n), &e(p, qq + n));
                    s4 = plus(&s4, &prod(&c, &d));
                }
            }
            let mut s3 = oc.zero();
            let mut s5 = oc.zero();
            for p in 1..=n {
                s3 = plus(&s3, &prod(&e(p, p + n), &e(p + n, p)));
                s5 = plus(&s5, &prod(&e(p + n, p), &e(p, p + n)));
            }
            Ok(sum(
                oc.zero(),
                [s1.scale(&quarter), s2.scale(&quarter), s3.scale(&half), s4.scale(&quarter), s5.scale(&half)],
            ))
        }
    }
}

/// Casimir operator `Σ E_{i,j} E_{j,i}` of the general linear algebra
/// (both copies in the complex case).
pub fn casimir_g(oc: &OperatorCase) -> WeylElement {
    let rows = oc.rows();
    let mut out = oc.zero();
    let sides: &[Side] = match oc.field {
        Field::Complex => &[Side::Left, Side::Right],
        _ => &[Side::Plain],
    };
    for &side in sides {
        for i in 1..=rows {
            for j in 1..=rows {
                out = plus(&out, &prod(&pol(oc, i, j, side), &pol(oc, j, i, side)));
            }
        }
    }
    out
}

/// The degree operator `Σ v ∂_v` over the whole layout.
pub fn euler(oc: &OperatorCase) -> WeylElement {
    sum(oc.zero(), oc.vars.iter().map(|v| prod(&oc.x(v), &oc.dx(v))))
}

fn var_poly(v: &str) -> MultiPoly {
    MultiPoly::var(v)
}

/// `Φ_e(a, b)` for the quaternion layout (1-based `a, b ≤ r`).
fn phi(oc: &OperatorCase, e: usize, a: usize, b: usize) -> MultiPoly {
    let (n, r) = (oc.n, oc.r);
    let mut out = MultiPoly::zero(&[]);
    for i in 1..=n {
        let (u, v) = match e {
            1 => (name("xi", i, a), name("xi", i + n, b + r)),
            2 => (name("xi", i, a), name("xi", i + n, b)),
            3 => (name("xi", i + n, a), name("xi", i, b + r)),
            4 => (name("xi", i, a + r), name("xi", i + n, b + r)),
            _ => unreachable!(),
        };
        out = &out + &(&var_poly(&u) * &var_poly(&v));
    }
    out
}

/// `(multiplication by f) ∘ (f with variables replaced by derivatives)`.
fn mul_then_dual(oc: &OperatorCase, f: &MultiPoly, g: &MultiPoly) -> WeylElement {
    let m = WeylElement::multiplication(&oc.vars, f).expect("layout variables");
    let d = WeylElement::constant_coefficient(&oc.vars, g).expect("layout variables");
    prod(&m, &d)
}

/// The first-order Capelli operator `D^(1)` written in coordinates.
pub fn build_d1(oc: &OperatorCase) -> WeylElement {
    let (n, r) = (oc.n, oc.r);
    match oc.field {
        Field::Real => {
            let y = |i: usize, a: usize| var_poly(&name("y", i, a));
            let mut out = oc.zero();
            for a in 1..=r {
                for b in 1..=r {
                    let f = (1..=n).fold(MultiPoly::zero(&[]), |acc, i| &acc + &(&y(i, a) * &y(i, b)));
                    out = plus(&out, &mul_then_dual(oc, &f, &f));
                }
            }
            out
        }
        Field::Complex => {
            let z = |i: usize, a: usize| var_poly(&name("z", i, a));
            let xi = |i: usize, a: usize| var_poly(&name("xi", i, a));
            let zx = |i: usize, j: usize| (1..=n).fold(MultiPoly::zero(&[]), |acc, a| &acc + &(&z(a, i) * &xi(a, j)));
            let mut out = oc.zero();
            for i in 1..=r {
                out = plus(&out, &mul_then_dual(oc, &zx(i, i), &zx(i, i)).scale(&q(4)));
            }
            for i in 1..=r {
                for j in i + 1..=r {
                    let s = &zx(i, j) + &zx(j, i);
                    let d = &zx(i, j) - &zx(j, i);
                    out = plus(&out, &mul_then_dual(oc, &s, &s).scale(&q(2)));
                    out = plus(&out, &mul_then_dual(oc, &d, &d).scale(&q(2)));
                }
            }
            out
        }
        Field::Quaternion => {
            let mut out = oc.zero();
            for a in 1..=r {
                for b in 1..=r {
                    let f13 = &phi(oc, 1, a, b) - &phi(oc, 3, a, b);
                    let f2 = &phi(oc, 2, a, b) - &phi(oc, 2, b, a);
                    let f4 = &phi(oc, 4, a, b) - &phi(oc, 4, b, a);
                    out = plus(&out, &mul_then_dual(oc, &f13, &f13).scale(&q(4)));
                    out = plus(&out, &mul_then_dual(oc, &f2, &f2).scale(&q(2)));
                    out = plus(&out, &mul_then_dual(oc, &f4, &f4).scale(&q(2)));
                }
            }
            out
        }
    }
}

/// The right-hand side of the Casimir expression for `D^(1)`:
/// real `−2(n−2)Ω_𝔨 + Ω_𝔤 − E`, complex `−2Ω_𝔨 + 2Ω_𝔤 + (2n−2r)E`,
/// quaternion `−8(2n+1)Ω_𝔨 + 2Ω_𝔤 + 2(2n−2r+1)E`.
pub fn casimir_expression(oc: &OperatorCase) -> Result<WeylElement> {
    let (n, r) = (oc.n as i64, oc.r as i64);
    let g = casimir_g(oc);
    let e = euler(oc);
    Ok(match oc.field {
        Field::Real => minus(&plus(&real_rotation_sum(oc)?, &g), &e),
        Field::Complex => sum(oc.zero(), [casimir_k(oc)?.scale(&q(-2)), g.scale(&q(2)), e.scale(&q(2 * n - 2 * r))]),
        Field::Quaternion => sum(
            oc.zero(),
            [casimir_k(oc)?.scale(&q(-8 * (2 * n + 1))), g.scale(&q(2)), e.scale(&q(2 * (2 * n - 2 * r + 1)))],
        ),
    })
}

/// Outcome of comparing `D^(1)` with its Casimir expression.
#[derive(Debug, Clone, PartialEq)]
pub struct AppendixReport {
    pub equal: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// `D^(1)` minus the Casimir expression.
    pub residual: WeylElement,
    /// `c` when the residual is exactly `c · E`.
    pub residual_euler_multiple: Option<Rational>,
}

/// `Some(c)` when `w = c · e`, with `e` nonzero.
fn euler_multiple(w: &WeylElement, e: &WeylElement) -> Option<Rational> {
    let (x, d, ec) = e.terms().next()?;
    let c = w.terms().find(|(wx, wd, _)| *wx == x && *wd == d).map(|(_, _, wc)| wc / ec).unwrap_or_else(Rational::zero);
    (*w == e.scale(&c)).then_some(c)
}

pub fn verify_appendix_report(oc: &OperatorCase) -> Result<AppendixReport> {
    let lhs = build_d1(oc);
    let rhs = casimir_expression(oc)?;
    let residual = minus(&lhs, &rhs);
    let e = euler(oc);
    let residual_euler_multiple = euler_multiple(&residual, &e);
    Ok(AppendixReport {
        equal: residual.is_zero(),
        lhs_terms: lhs.num_terms(),
        rhs_terms: rhs.num_terms(),
        residual,
        residual_euler_multiple,
    })
}

pub fn verify_appendix(oc: &OperatorCase) -> Result<bool> {
    Ok(verify_appendix_report(oc)?.equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn v(s: &str) -> MultiPoly {
        MultiPoly::var(s)
    }

    #[test]
    fn compose_examples() {
        let vs = vars(&["y1", "y2"]);
        let y1 = WeylElement::mul_var(&vs, "y1").unwrap();
        let y2 = WeylElement::mul_var(&vs, "y2").unwrap();
        let d1 = WeylElement::deriv(&vs, "y1").unwrap();
        let d2 = WeylElement::deriv(&vs, "y2").unwrap();
        let id = WeylElement::identity(&vs);
        let y1d1 = prod(&y1, &d1);
        assert_eq!(prod(&d1, &y1), plus(&y1d1, &id));
        assert_eq!(prod(&y1, &d1).num_terms(), 1);
        let lhs = prod(&prod(&y1, &d2), &prod(&y2, &d1));
        let expect = plus(&prod(&prod(&y1, &y2), &prod(&d1, &d2)), &y1d1);
        assert_eq!(lhs, expect);
    }

    #[test]
    fn apply_examples() {
        let vs = vars(&["y1", "y2"]);
        let y1 = WeylElement::mul_var(&vs, "y1").unwrap();
        let y2 = WeylElement::mul_var(&vs, "y2").unwrap();
        let d1 = WeylElement::deriv(&vs, "y1").unwrap();
        assert_eq!(prod(&y1, &d1).apply(&v("y1").pow(2)).unwrap(), v("y1").pow(2).scale(&q(2)));
        assert_eq!(d1.square().apply(&v("y1").pow(3)).unwrap(), v("y1").scale(&q(6)));
        assert_eq!(prod(&y2, &d1).apply(&(&v("y1") * &v("y2"))).unwrap(), v("y2").pow(2));
    }

    #[test]
    fn polarization_examples() {
        let oc = OperatorCase::new(1, 2, 1).unwrap();
        let vs = oc.vars().to_vec();
        let e11 = polarization(&oc, 1, 1, Side::Plain).unwrap();
        let y = |s: &str| WeylElement::mul_var(&vs, s).unwrap();
        let d = |s: &str| WeylElement::deriv(&vs, s).unwrap();
        assert_eq!(e11, prod(&y("y1_1"), &d("y1_1")).scale(&q(-1)));
        let e12 = polarization(&oc, 1, 2, Side::Plain).unwrap();
        assert_eq!(e12, prod(&y("y2_1"), &d("y1_1")).scale(&q(-1)));
        assert!(polarization(&oc, 3, 1, Side::Plain).is_err());
        assert!(polarization(&oc, 1, 1, Side::Left).is_err());
        let oc = OperatorCase::new(2, 1, 1).unwrap();
        let vs = oc.vars().to_vec();
        let l = polarization(&oc, 1, 1, Side::Left).unwrap();
        assert_eq!(l, prod(&WeylElement::mul_var(&vs, "z1_1").unwrap(), &WeylElement::deriv(&vs, "z1_1").unwrap()));
    }

    #[test]
    fn real_casimir_examples() {
        let oc = OperatorCase::new(1, 2, 1).unwrap();
        let y1 = v("y1_1");
        assert_eq!(real_rotation_sum(&oc).unwrap().apply(&y1).unwrap(), y1.scale(&q(-1)));
        assert_eq!(casimir_g(&oc).apply(&y1).unwrap(), y1.scale(&q(2)));
        assert_eq!(casimir_g(&oc).apply(&y1.pow(2)).unwrap(), y1.pow(2).scale(&q(6)));
        assert!(casimir_k(&oc).is_err());
        let oc3 = OperatorCase::new(1, 3, 1).unwrap();
        assert_eq!(casimir_k(&oc3).unwrap().apply(&y1).unwrap(), y1);
    }

    #[test]
    fn complex_small_examples() {
        let oc = OperatorCase::new(2, 1, 1).unwrap();
        let z = v("z1_1");
        assert_eq!(casimir_g(&oc).apply(&z).unwrap(), z);
        let kx = casimir_k(&oc).unwrap();
        let l = polarization(&oc, 1, 1, Side::Left).unwrap();
        let r = polarization(&oc, 1, 1, Side::Right).unwrap();
        assert_eq!(kx, plus(&l, &r).square());
    }

    #[test]
    fn euler_examples() {
        let oc = OperatorCase::new(1, 2, 1).unwrap();
        let p = &v("y1_1") * &v("y2_1");
        assert_eq!(euler(&oc).apply(&p).unwrap(), p.scale(&q(2)));
        assert!(euler(&oc).apply(&MultiPoly::constant(q(5))).unwrap().is_zero());
        let oc = OperatorCase::new(2, 2, 1).unwrap();
        let p = &v("z1_1") * &v("xi1_1");
        assert_eq!(euler(&oc).apply(&p).unwrap(), p.scale(&q(2)));
    }

    #[test]
    fn d1_examples() {
        let oc = OperatorCase::new(1, 2, 1).unwrap();
        let vs = oc.vars().to_vec();
        let f = &v("y1_1").pow(2) + &v("y2_1").pow(2);
        let expect =
            prod(&WeylElement::multiplication(&vs, &f).unwrap(), &WeylElement::constant_coefficient(&vs, &f).unwrap());
        assert_eq!(build_d1(&oc), expect);
        assert_eq!(build_d1(&oc).apply(&v("y1_1").pow(2)).unwrap(), f.scale(&q(2)));
        assert!(build_d1(&oc).apply(&v("y1_1")).unwrap().is_zero());
    }

    #[test]
    fn real_identity_small() {
        assert!(verify_appendix(&OperatorCase::new(1, 2, 1).unwrap()).unwrap());
        assert!(verify_appendix(&OperatorCase::new(1, 3, 1).unwrap()).unwrap());
    }

    #[test]
    fn appendix_residuals_are_euler_multiples() {
        let cases = [(1, 2, 1, 0), (1, 3, 1, 0), (1, 4, 2, 0), (2, 2, 1, -2), (2, 3, 1, -4), (4, 2, 1, -4)];
        for (d, n, r, c) in cases {
            let rep = verify_appendix_report(&OperatorCase::new(d, n, r).unwrap()).unwrap();
            assert_eq!(rep.equal, c == 0);
            assert_eq!(rep.residual_euler_multiple, Some(q(c)));
        }
    }

    #[test]
    fn json_round_trip() {
        let oc = OperatorCase::new(1, 2, 1).unwrap();
        let w = casimir_g(&oc);
        let s = serde_json::to_string(&w.to_json()).unwrap();
        assert_eq!(WeylElement::from_json_str(&s).unwrap(), w);
        assert!(WeylElement::from_json_str(r#"{"vars":["a"],"terms":[{"x":[1],"d":[],"coef":"1"}]}"#).is_err());
    }
}
