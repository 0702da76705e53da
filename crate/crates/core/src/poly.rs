//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by dense exponent vectors, so
//! iteration order (and therefore printing and serialization) is
//! deterministic regardless of construction order.

use crate::scalar::{Scalar, ScalarDomain};
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub type Expo = Vec<u32>;

pub fn mono_mul(a: &[u32], b: &[u32]) -> Expo {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_div(a: &[u32], b: &[u32]) -> Option<Expo> {
    if a.iter().zip(b).any(|(x, y)| x < y) {
        return None;
    }
    Some(a.iter().zip(b).map(|(x, y)| x - y).collect())
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Expo {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn mono_total_deg(a: &[u32]) -> u32 {
    a.iter().sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    domain: ScalarDomain,
    terms: BTreeMap<Expo, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize, domain: ScalarDomain) -> Self {
        Polynomial { nvars, domain, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let domain = c.domain();
        let mut p = Polynomial::zero(nvars, domain);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize, domain: ScalarDomain) -> Self {
        Polynomial::constant(nvars, Scalar::one(domain))
    }

    pub fn from_i64(nvars: usize, domain: ScalarDomain, v: i64) -> Self {
        Polynomial::constant(nvars, Scalar::from_i64(domain, v))
    }

    pub fn var(nvars: usize, domain: ScalarDomain, index: usize) -> Self {
        assert!(index < nvars);
        let mut e = vec![0u32; nvars];
        e[index] = 1;
        Polynomial::monomial(nvars, e, Scalar::one(domain))
    }

    pub fn monomial(nvars: usize, expo: Expo, c: Scalar) -> Self {
        assert_eq!(expo.len(), nvars);
        let mut p = Polynomial::zero(nvars, c.domain());
        if !c.is_zero() {
            p.terms.insert(expo, c);
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        domain: ScalarDomain,
        terms: impl IntoIterator<Item = (Expo, Scalar)>,
    ) -> Self {
        let mut p = Polynomial::zero(nvars, domain);
        for (e, c) in terms {
            p.add_term(&e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map_or(false, |(e, c)| {
                e.iter().all(|&x| x == 0) && c.is_one()
            })
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, expo: &[u32]) -> Scalar {
        self.terms.get(expo).cloned().unwrap_or_else(|| Scalar::zero(self.domain))
    }

    pub fn constant_coeff(&self) -> Scalar {
        self.coeff(&vec![0u32; self.nvars])
    }

    pub fn add_term(&mut self, expo: &[u32], c: &Scalar) {
        if c.is_zero() {
            return;
        }
        assert_eq!(expo.len(), self.nvars);
        match self.terms.get_mut(expo) {
            Some(cur) => {
                let s = cur.add(c);
                if s.is_zero() {
                    self.terms.remove(expo);
                } else {
                    *cur = s;
                }
            }
            None => {
                self.terms.insert(expo.to_vec(), c.clone());
            }
        }
    }

    fn assert_compatible(&self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        assert_eq!(self.domain, rhs.domain, "polynomial coefficient domain mismatch");
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = Polynomial::zero(self.nvars, self.domain);
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                out.add_term(&mono_mul(ea, eb), &ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.domain);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn mul_monomial(&self, expo: &[u32], c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.domain);
        }
        let mut out = Polynomial::zero(self.nvars, self.domain);
        for (e, v) in self.terms.iter() {
            out.terms.insert(mono_mul(e, expo), v.mul(c));
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.nvars, self.domain);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division: `Some(q)` with `self == q * rhs`, or `None`.
    pub fn exact_div(&self, rhs: &Polynomial) -> Option<Polynomial> {
        self.assert_compatible(rhs);
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(self.nvars, self.domain);
        let (lt_e, lt_c) = rhs.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        while !rem.is_zero() {
            let (re, rc) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
            let q_e = mono_div(&re, &lt_e)?;
            let q_c = rc.div(&lt_c).ok()?;
            quo.add_term(&q_e, &q_c);
            rem = rem.sub(&rhs.mul_monomial(&q_e, &q_c));
        }
        Some(quo)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.exact_div(self).is_some()
    }

    pub fn deg_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn total_deg(&self) -> u32 {
        self.terms.keys().map(|e| mono_total_deg(e)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// Indices of variables appearing with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars];
        for e in self.terms.keys() {
            for (i, x) in e.iter().enumerate() {
                if *x > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter().enumerate().filter(|(_, u)| **u).map(|(i, _)| i).collect()
    }

    /// Coefficient of `var^k`, as a polynomial with the same arity (the
    /// `var`-slot of every surviving exponent vector is zeroed).
    pub fn coeff_of_var_power(&self, var: usize, k: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars, self.domain);
        for (e, c) in self.terms.iter() {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.add_term(&e2, c);
            }
        }
        out
    }

    /// Leading coefficient with respect to one variable.
    pub fn leading_coeff_in(&self, var: usize) -> Polynomial {
        self.coeff_of_var_power(var, self.deg_in(var))
    }

    /// Substitute `var := 1`.
    pub fn eval_var_at_one(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars, self.domain);
        for (e, c) in self.terms.iter() {
            let mut e2 = e.clone();
            e2[var] = 0;
            out.add_term(&e2, c);
        }
        out
    }

    /// Substitute a polynomial for one variable.
    pub fn subst_var(&self, var: usize, value: &Polynomial) -> Polynomial {
        self.assert_compatible(value);
        let mut out = Polynomial::zero(self.nvars, self.domain);
        for (e, c) in self.terms.iter() {
            let mut e2 = e.clone();
            let k = e2[var];
            e2[var] = 0;
            let term = Polynomial::monomial(self.nvars, e2, c.clone());
            out = out.add(&term.mul(&value.pow(k)));
        }
        out
    }

    /// True when every term is divisible by the given monomial.
    pub fn divisible_by_monomial(&self, expo: &[u32]) -> bool {
        !self.is_zero() && self.terms.keys().all(|e| mono_div(e, expo).is_some())
    }

    pub fn div_monomial_exact(&self, expo: &[u32]) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars, self.domain);
        for (e, c) in self.terms.iter() {
            out.terms.insert(mono_div(e, expo).expect("monomial division"), c.clone());
        }
        out
    }

    /// Append `extra` fresh variables (exponent zero everywhere).
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars + extra, self.domain);
        for (e, c) in self.terms.iter() {
            let mut e2 = e.clone();
            e2.extend(std::iter::repeat(0).take(extra));
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// Drop trailing variables; they must be absent from every term.
    pub fn truncate_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars <= self.nvars);
        let mut out = Polynomial::zero(nvars, self.domain);
        for (e, c) in self.terms.iter() {
            assert!(e[nvars..].iter().all(|&x| x == 0), "variable not eliminated");
            out.terms.insert(e[..nvars].to_vec(), c.clone());
        }
        out
    }

    /// Render with the given variable names. Deterministic: terms print in
    /// descending graded order (total degree, then the exponent key).
    pub fn render(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let mut sorted: Vec<(&Expo, &Scalar)> = self.terms.iter().collect();
        sorted.sort_by(|(a, _), (b, _)| {
            mono_total_deg(b).cmp(&mono_total_deg(a)).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, (e, c)) in sorted.into_iter().enumerate() {
            let neg = c.display_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mono = render_monomial(e, names);
            match (mag.is_one(), mono.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono),
                (false, true) => {
                    let _ = write!(out, "{mag}");
                }
                (false, false) => {
                    let _ = write!(out, "{mag}*{mono}");
                }
            }
        }
        out
    }
}

fn render_monomial(e: &[u32], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        if x == 1 {
            parts.push(names[i].clone());
        } else if x > 1 {
            parts.push(format!("{}^{}", names[i], x));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarDomain {
        ScalarDomain::Q
    }

    #[test]
    fn add_cancels() {
        let x = Polynomial::var(2, q(), 0);
        let s = x.add(&x.neg());
        assert!(s.is_zero());
    }

    #[test]
    fn mul_distributes_smoke() {
        let x = Polynomial::var(2, q(), 0);
        let y = Polynomial::var(2, q(), 1);
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division() {
        let x = Polynomial::var(2, q(), 0);
        let y = Polynomial::var(2, q(), 1);
        let p = x.add(&y).mul(&x.add(&y.neg()));
        let d = p.exact_div(&x.add(&y)).unwrap();
        assert_eq!(d, x.sub(&y));
        assert!(p.exact_div(&x).is_none());
    }

    #[test]
    fn render_is_stable() {
        let names: Vec<String> = vec!["x1".into(), "t".into()];
        let x = Polynomial::var(2, q(), 0);
        let t = Polynomial::var(2, q(), 1);
        let p = t.mul(&t).add(&x.mul_scalar(&Scalar::from_i64(q(), 3))).sub(&Polynomial::one(2, q()));
        assert_eq!(p.render(&names), "t^2 + 3*x1 - 1");
    }
}
