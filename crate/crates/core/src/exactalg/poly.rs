use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with rational coefficients over named variables.
///
/// Operations between polynomials on different variable lists merge the
/// lists by name. Equality is semantic: two polynomials are equal when
/// they agree as functions, whatever their declared variables.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_in(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero_in(Vec::new());
        if !c.is_zero() {
            p.terms.insert(Monomial::one(0), c);
        }
        p
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    /// The polynomial consisting of a single variable.
    pub fn var(name: &str) -> Self {
        let mut p = MultiPoly::zero(&[name]);
        p.terms.insert(Monomial(vec![1]), Rational::one());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs over `vars`, summing
    /// repeated exponents.
    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let n = vars.len();
        let uniq: BTreeSet<&String> = vars.iter().collect();
        if uniq.len() != n {
            return Err(Error::Domain(format!("repeated variable in {:?}", vars)));
        }
        let mut p = MultiPoly::zero_in(vars);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Domain(format!("exponent {:?} does not match {} variables", e, n)));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.iter().find(|(m, _)| m.degree() == 0).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Re-expresses the polynomial over `vars`, which must include every
    /// variable that actually occurs.
    pub fn with_vars(&self, vars: &[String]) -> Result<MultiPoly> {
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut out = MultiPoly::zero_in(vars.to_vec());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (k, &x) in m.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[k] {
                    Some(t) => e[t] = x,
                    None => return Err(Error::Domain(format!("variable {} missing from {:?}", self.vars[k], vars))),
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    fn merged_vars(&self, other: &MultiPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn align(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.merged_vars(other);
        (self.with_vars(&vars).unwrap(), other.with_vars(&vars).unwrap())
    }

    /// Drops variables that do not occur in any term.
    pub fn compact(&self) -> MultiPoly {
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&k| self.terms.keys().any(|m| m.0[k] > 0)).collect();
        let vars: Vec<String> = keep.iter().map(|&k| self.vars[k].clone()).collect();
        self.with_vars(&vars).unwrap()
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero_in(self.vars.clone());
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn plus(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.align(other);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn minus(&self, other: &MultiPoly) -> MultiPoly {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn times(&self, other: &MultiPoly) -> MultiPoly {
        let (a, b) = self.align(other);
        let mut out = MultiPoly::zero_in(a.vars.clone());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one().with_vars(&self.vars).unwrap();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                out = out.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        out
    }

    /// Substitutes rational values for some variables; the substituted
    /// variables are removed and the rest stay formal.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Rational>) -> MultiPoly {
        let idx: Vec<Option<&Rational>> = self.vars.iter().map(|v| assignment.get(v)).collect();
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&k| idx[k].is_none()).collect();
        let vars: Vec<String> = keep.iter().map(|&k| self.vars[k].clone()).collect();
        let mut out = MultiPoly::zero_in(vars);
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if let Some(v) = idx[k] {
                    if e > 0 {
                        coef *= num_traits::pow(v.clone(), e as usize);
                    }
                }
            }
            let e: Vec<u32> = keep.iter().map(|&k| m.0[k]).collect();
            out.add_term(Monomial(e), coef);
        }
        out
    }

    /// Full evaluation; fails if some occurring variable is unassigned.
    pub fn eval_rational(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let p = self.evaluate(assignment);
        p.as_constant().ok_or_else(|| Error::Domain(format!("unassigned variables in {}", p.compact())))
    }

    /// Renames variables; a rename onto an existing variable identifies the
    /// two.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> MultiPoly {
        let targets: Vec<String> = self.vars.iter().map(|v| map.get(v).cloned().unwrap_or_else(|| v.clone())).collect();
        let mut vars: Vec<String> = Vec::new();
        for t in &targets {
            if !vars.contains(t) {
                vars.push(t.clone());
            }
        }
        let pos: Vec<usize> = targets.iter().map(|t| vars.iter().position(|v| v == t).unwrap()).collect();
        let mut out = MultiPoly::zero_in(vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (k, &x) in m.0.iter().enumerate() {
                e[pos[k]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Replaces each listed variable by a polynomial.
    pub fn substitute(&self, map: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let subs: Vec<Option<&MultiPoly>> = self.vars.iter().map(|v| map.get(v)).collect();
        let kept: Vec<String> =
            self.vars.iter().zip(&subs).filter(|(_, s)| s.is_none()).map(|(v, _)| v.clone()).collect();
        let mut vars = kept;
        for p in map.values() {
            for v in &p.vars {
                if !vars.contains(v) {
                    vars.push(v.clone());
                }
            }
        }
        let mut powers: BTreeMap<(usize, u32), MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero_in(vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            let mut factor = MultiPoly::constant(c.clone()).with_vars(&vars).unwrap();
            for (k, &x) in m.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match subs[k] {
                    None => {
                        let t = vars.iter().position(|v| *v == self.vars[k]).unwrap();
                        e[t] += x;
                    }
                    Some(s) => {
                        let pw = powers.entry((k, x)).or_insert_with(|| s.with_vars(&vars).unwrap().pow(x));
                        factor = factor.times(pw);
                    }
                }
            }
            let mono = MultiPoly { vars: vars.clone(), terms: BTreeMap::from([(Monomial(e), Rational::one())]) };
            out = out.plus(&factor.times(&mono));
        }
        out
    }

    /// Total degree in the given variables (−1 for the zero polynomial).
    pub fn degree_in(&self, grading: &[&str]) -> i64 {
        let idx: Vec<usize> = grading.iter().filter_map(|g| self.var_index(g)).collect();
        self.terms.keys().map(|m| idx.iter().map(|&k| m.0[k] as i64).sum::<i64>()).max().unwrap_or(-1)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    /// The terms of maximal total degree in `grading`.
    pub fn top_homogeneous(&self, grading: &[&str]) -> MultiPoly {
        let idx: Vec<usize> = grading.iter().filter_map(|g| self.var_index(g)).collect();
        let deg = |m: &Monomial| idx.iter().map(|&k| m.0[k]).sum::<u32>();
        let top = self.terms.keys().map(deg).max();
        let mut out = MultiPoly::zero_in(self.vars.clone());
        if let Some(t) = top {
            for (m, c) in &self.terms {
                if deg(m) == t {
                    out.terms.insert(m.clone(), c.clone());
                }
            }
        }
        out
    }

    /// Coefficient of the monomial given by `(variable, exponent)` pairs.
    pub fn coeff(&self, exps: &[(&str, u32)]) -> Rational {
        let mut e = vec![0u32; self.vars.len()];
        for &(v, x) in exps {
            match self.var_index(v) {
                Some(k) => e[k] += x,
                None if x == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&Monomial(e)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `vars^e` where `e` is indexed like [`Self::vars`].
    pub fn coeff_exp(&self, e: &[u32]) -> Rational {
        self.terms.get(&Monomial(e.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Collects the polynomial as a polynomial in `grading` with
    /// coefficients in the remaining variables.
    pub fn coefficients_in(&self, grading: &[&str]) -> BTreeMap<Vec<u32>, MultiPoly> {
        let idx: Vec<Option<usize>> = grading.iter().map(|g| self.var_index(g)).collect();
        let rest: Vec<usize> = (0..self.vars.len()).filter(|k| !idx.contains(&Some(*k))).collect();
        let rest_vars: Vec<String> = rest.iter().map(|&k| self.vars[k].clone()).collect();
        let mut out: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = idx.iter().map(|k| k.map(|k| m.0[k]).unwrap_or(0)).collect();
            let e: Vec<u32> = rest.iter().map(|&k| m.0[k]).collect();
            out.entry(key).or_insert_with(|| MultiPoly::zero_in(rest_vars.clone())).add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn derivative(&self, var: &str) -> MultiPoly {
        let mut out = MultiPoly::zero_in(self.vars.clone());
        if let Some(k) = self.var_index(var) {
            for (m, c) in &self.terms {
                if m.0[k] > 0 {
                    let mut e = m.clone();
                    e.0[k] -= 1;
                    out.add_term(e, c * Rational::from_integer(m.0[k].into()));
                }
            }
        }
        out
    }

    /// Applies a permutation of the listed variables; `perm[i]` is the
    /// image of `vars[i]`.
    pub fn permute(&self, vars: &[&str], perm: &[usize]) -> MultiPoly {
        let map: BTreeMap<String, String> =
            vars.iter().enumerate().map(|(i, v)| (v.to_string(), format!("\u{0}{}", vars[perm[i]]))).collect();
        let back: BTreeMap<String, String> = vars.iter().map(|v| (format!("\u{0}{}", v), v.to_string())).collect();
        self.rename(&map).rename(&back)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.clone(),
            terms: self.terms.iter().rev().map(|(m, c)| TermJson { exp: m.0.clone(), coef: c.to_string() }).collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<MultiPoly> {
        let terms =
            j.terms.iter().map(|t| Ok((t.exp.clone(), parse_rational(&t.coef)?))).collect::<Result<Vec<_>>>()?;
        MultiPoly::from_terms(j.vars.clone(), terms)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<MultiPoly> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        MultiPoly::from_json(&j)
    }
}

/// JSON form `{"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.align(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, &e)| if e == 1 { self.vars[k].clone() } else { format!("{}^{}", self.vars[k], e) })
                    .collect();
            if factors.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", a, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$f(self, rhs)
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$f(&self, &rhs)
            }
        }
    };
}

binop!(Add, add, plus);
binop!(Sub, sub, minus);
binop!(Mul, mul, times);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::negated(self)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::negated(&self)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(&format!("x{}", i))
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(int(n))
    }

    #[test]
    fn arithmetic_examples() {
        let s = &x(1) + &x(2);
        let sq = &s * &s;
        let expect = &(&x(1) * &x(1)) + &(&(&c(2) * &x(1)) * &x(2));
        let expect = &expect + &(&x(2) * &x(2));
        assert_eq!(sq, expect);
        assert_eq!(sq.num_terms(), 3);
        assert!((&sq - &sq).is_zero());
        let a = MultiPoly::var("alpha");
        let p = &(&x(1) * &x(1)) - &(&a * &a);
        assert_eq!(&p * &MultiPoly::one(), p);
    }

    #[test]
    fn evaluate_examples() {
        let a = MultiPoly::var("alpha");
        let p = &x(1).pow(2) - &a.pow(2);
        let v = p.evaluate(&BTreeMap::from([("x1".to_string(), int(3))]));
        assert_eq!(v, &c(9) - &a.pow(2));
        assert!(!v.vars().contains(&"x1".to_string()));
        let q = &x(1) * &x(2);
        assert!(q.evaluate(&BTreeMap::from([("x1".to_string(), int(0))])).is_zero());
        let s = &x(1) + &x(2);
        assert_eq!(s.evaluate(&BTreeMap::new()), s);
    }

    #[test]
    fn top_homogeneous_examples() {
        let p = &(&x(1).pow(2) + &x(1)) + &c(1);
        assert_eq!(p.top_homogeneous(&["x1"]), x(1).pow(2));
        let t = MultiPoly::var("tau");
        let a = MultiPoly::var("alpha");
        let q = &(&(&x(1).pow(2) + &x(2).pow(2)) - &(&t + &a).pow(2)) - &a.pow(2);
        assert_eq!(q.top_homogeneous(&["x1", "x2"]), &x(1).pow(2) + &x(2).pow(2));
        assert_eq!(c(5).top_homogeneous(&["x1"]), c(5));
        assert!(MultiPoly::zero(&["x1"]).top_homogeneous(&["x1"]).is_zero());
    }

    #[test]
    fn rename_and_substitute() {
        let p = &x(1).pow(2) + &x(2);
        let r = p.rename(&BTreeMap::from([("x2".to_string(), "x1".to_string())]));
        assert_eq!(r, &x(1).pow(2) + &x(1));
        let s = p.substitute(&BTreeMap::from([("x1".to_string(), &x(2) + &c(1))]));
        assert_eq!(s, &(&x(2).pow(2) + &(&c(3) * &x(2))) + &c(1));
        let sw = p.permute(&["x1", "x2"], &[1, 0]);
        assert_eq!(sw, &x(2).pow(2) + &x(1));
    }

    #[test]
    fn json_round_trip() {
        let p = &(&x(1).pow(2).scale(&rat(3, 2)) - &x(2)) + &c(7);
        let s = p.to_json_string();
        assert_eq!(
            s,
            r#"{"vars":["x1","x2"],"terms":[{"exp":[2,0],"coef":"3/2"},{"exp":[0,1],"coef":"-1"},{"exp":[0,0],"coef":"7"}]}"#
        );
        let q = MultiPoly::from_json_str(&s).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.to_json_string(), s);
        assert!(MultiPoly::from_json_str(r#"{"vars":["a"],"terms":[{"exp":[1,2],"coef":"1"}]}"#).is_err());
        assert!(MultiPoly::from_json_str(r#"{"vars":["a"],"terms":[{"exp":[1],"coef":"q"}]}"#).is_err());
    }

    #[test]
    fn display() {
        let p = &(&x(1).pow(2).scale(&rat(-3, 2)) + &x(2)) - &c(1);
        assert_eq!(p.to_string(), "-3/2*x1^2 + x2 - 1");
        assert_eq!(MultiPoly::zero(&[]).to_string(), "0");
    }

    #[test]
    fn semantic_equality_ignores_declared_vars() {
        let a = x(1).with_vars(&["x2".to_string(), "x1".to_string()]).unwrap();
        assert_eq!(a, x(1));
        assert_ne!(x(1), x(2));
    }
}
