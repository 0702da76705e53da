//! Elements of the localized tower rings.
//!
//! An element is `num / ((y1*...*yn)^a * f^b)` with `num` in the polynomial
//! cover `S`. The representation is canonical: `a` and `b` are minimal (no
//! full `y`-product and no `f` factor can be stripped from `num`), so
//! structural equality is value equality.

use crate::error::{Error, Result};
use crate::poly::{mono_div, Polynomial};
use crate::scalar::Scalar;
use crate::tower::RingTower;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone)]
pub struct Element {
    tower: Arc<RingTower>,
    num: Polynomial,
    ypow: u32,
    fpow: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.tower.as_ref() == other.tower.as_ref()
            && self.num == other.num
            && self.ypow == other.ypow
            && self.fpow == other.fpow
    }
}
impl Eq for Element {}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Element {
    pub fn from_poly(tower: Arc<RingTower>, num: Polynomial) -> Element {
        assert_eq!(num.nvars(), tower.nvars(), "polynomial arity must match the tower");
        assert_eq!(num.domain(), tower.domain, "coefficient domain must match the tower");
        Element { tower, num, ypow: 0, fpow: 0 }
    }

    pub fn new(tower: Arc<RingTower>, num: Polynomial, ypow: u32, fpow: u32) -> Element {
        let mut e = Element { tower, num, ypow, fpow };
        e.canonicalize();
        e
    }

    pub fn zero(tower: Arc<RingTower>) -> Element {
        let p = Polynomial::zero(tower.nvars(), tower.domain);
        Element::from_poly(tower, p)
    }

    pub fn one(tower: Arc<RingTower>) -> Element {
        let p = Polynomial::one(tower.nvars(), tower.domain);
        Element::from_poly(tower, p)
    }

    pub fn from_i64(tower: Arc<RingTower>, v: i64) -> Element {
        let p = Polynomial::from_i64(tower.nvars(), tower.domain, v);
        Element::from_poly(tower, p)
    }

    pub fn var(tower: Arc<RingTower>, index: usize) -> Element {
        let p = Polynomial::var(tower.nvars(), tower.domain, index);
        Element::from_poly(tower, p)
    }

    pub fn scalar(tower: Arc<RingTower>, c: Scalar) -> Element {
        let p = Polynomial::constant(tower.nvars(), c);
        Element::from_poly(tower, p)
    }

    pub fn tower(&self) -> &Arc<RingTower> {
        &self.tower
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn ypow(&self) -> u32 {
        self.ypow
    }

    pub fn fpow(&self) -> u32 {
        self.fpow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.ypow == 0 && self.fpow == 0 && self.num.is_one()
    }

    /// Lies in the polynomial cover `S` (no denominators).
    pub fn is_polynomial(&self) -> bool {
        self.ypow == 0 && self.fpow == 0
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.ypow = 0;
            self.fpow = 0;
            return;
        }
        if self.tower.n == 0 {
            self.ypow = 0;
        } else if self.ypow > 0 {
            let mut strip = u32::MAX;
            for (e, _) in self.num.terms() {
                let mut per_term = u32::MAX;
                for j in 0..self.tower.n {
                    per_term = per_term.min(e[self.tower.y_index(j)]);
                }
                strip = strip.min(per_term);
                if strip == 0 {
                    break;
                }
            }
            let strip = strip.min(self.ypow);
            if strip > 0 {
                let mut mono = vec![0u32; self.tower.nvars()];
                for j in 0..self.tower.n {
                    mono[self.tower.y_index(j)] = strip;
                }
                self.num = self.num.div_monomial_exact(&mono);
                self.ypow -= strip;
            }
        }
        while self.fpow > 0 {
            match self.num.exact_div(&self.tower.f) {
                Some(q) => {
                    self.num = q;
                    self.fpow -= 1;
                }
                None => break,
            }
        }
    }

    fn assert_same_tower(&self, rhs: &Element) {
        assert!(
            self.tower.as_ref() == rhs.tower.as_ref(),
            "element arithmetic across towers"
        );
    }

    /// Checked arithmetic, the public entry point: rejects mixed towers.
    pub fn arith(&self, rhs: &Element, kind: ArithKind) -> Result<Element> {
        if self.tower.as_ref() != rhs.tower.as_ref() {
            return Err(Error::DomainMismatch(
                "operands belong to different towers or coefficient domains".into(),
            ));
        }
        Ok(match kind {
            ArithKind::Add => self.add(rhs),
            ArithKind::Sub => self.sub(rhs),
            ArithKind::Mul => self.mul(rhs),
        })
    }

    pub fn add(&self, rhs: &Element) -> Element {
        self.assert_same_tower(rhs);
        let a = self.ypow.max(rhs.ypow);
        let b = self.fpow.max(rhs.fpow);
        let lift = |e: &Element| -> Polynomial {
            let mut p = e.num.clone();
            let dy = a - e.ypow;
            if dy > 0 {
                let mut mono = vec![0u32; self.tower.nvars()];
                for j in 0..self.tower.n {
                    mono[self.tower.y_index(j)] = dy;
                }
                p = p.mul_monomial(&mono, &Scalar::one(self.tower.domain));
            }
            let db = b - e.fpow;
            if db > 0 {
                p = p.mul(&self.tower.f.pow(db));
            }
            p
        };
        Element::new(self.tower.clone(), lift(self).add(&lift(rhs)), a, b)
    }

    pub fn sub(&self, rhs: &Element) -> Element {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Element {
        Element { tower: self.tower.clone(), num: self.num.neg(), ypow: self.ypow, fpow: self.fpow }
    }

    pub fn mul(&self, rhs: &Element) -> Element {
        self.assert_same_tower(rhs);
        Element::new(
            self.tower.clone(),
            self.num.mul(&rhs.num),
            self.ypow + rhs.ypow,
            self.fpow + rhs.fpow,
        )
    }

    pub fn mul_scalar(&self, c: &Scalar) -> Element {
        Element::new(self.tower.clone(), self.num.mul_scalar(c), self.ypow, self.fpow)
    }

    pub fn pow_u32(&self, e: u32) -> Element {
        let mut acc = Element::one(self.tower.clone());
        let mut base = self.clone();
        let mut e = e;
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

    pub fn pow_i64(&self, e: i64) -> Result<Element> {
        if e >= 0 {
            Ok(self.pow_u32(e as u32))
        } else {
            Ok(self.inverse()?.pow_u32((-e) as u32))
        }
    }

    /// Clear denominators: returns `(num, u)` with `u = (y1..yn)^a * f^b`
    /// as a polynomial element, so `self * u == num`.
    pub fn clear_denominator(&self) -> (Polynomial, Element) {
        let tower = &self.tower;
        let mut mono = vec![0u32; tower.nvars()];
        for j in 0..tower.n {
            mono[tower.y_index(j)] = self.ypow;
        }
        let mut unit = Polynomial::monomial(tower.nvars(), mono, Scalar::one(tower.domain));
        if self.fpow > 0 {
            unit = unit.mul(&tower.f.pow(self.fpow));
        }
        (self.num.clone(), Element::from_poly(tower.clone(), unit))
    }

    /// Recognized units of `A`: `c * (y-monomial) * f^k` with `c` a nonzero
    /// scalar. Returns `(c, y_expos, k)`.
    pub fn unit_parts(&self) -> Option<(Scalar, Vec<u32>, u32)> {
        if self.num.is_zero() {
            return None;
        }
        let tower = &self.tower;
        let mut rest = self.num.clone();
        let mut k = 0u32;
        if !tower.f.is_constant() {
            while let Some(q) = rest.exact_div(&tower.f) {
                rest = q;
                k += 1;
            }
        }
        if rest.num_terms() != 1 {
            return None;
        }
        let (e, c) = rest.terms().next().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut y_expos = vec![0u32; tower.n];
        for (v, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let y0 = tower.d + tower.m;
            if v >= y0 && v < y0 + tower.n {
                y_expos[v - y0] = x;
            } else {
                return None;
            }
        }
        Some((c, y_expos, k))
    }

    pub fn is_unit(&self) -> bool {
        self.unit_parts().is_some()
    }

    pub fn inverse(&self) -> Result<Element> {
        let (c, y_expos, k) = self.unit_parts().ok_or_else(|| {
            Error::NotAUnit(format!("{} is not of monomial * f-power form", self.render()))
        })?;
        let tower = self.tower.clone();
        let a = self.ypow;
        let b = self.fpow;
        // inverse = (1/c) * prod_j y_j^{a - e_j} * f^{b - k}
        let a_new = y_expos.iter().map(|&e| e.saturating_sub(a)).max().unwrap_or(0);
        let mut mono = vec![0u32; tower.nvars()];
        for (j, &e) in y_expos.iter().enumerate() {
            mono[tower.y_index(j)] = a + a_new - e;
        }
        let mut num = Polynomial::monomial(tower.nvars(), mono, c.inv()?);
        let b_new = k.saturating_sub(b);
        if b >= k {
            num = num.mul(&tower.f.pow(b - k));
        }
        Ok(Element::new(tower, num, a_new, b_new))
    }

    /// Ring-homomorphic substitution of elements for the `x`- and
    /// `y`-variables. Images of Laurent variables must be recognized units.
    pub fn substitute(&self, map: &BTreeMap<usize, Element>) -> Result<Element> {
        let tower = &self.tower;
        let x0 = tower.d;
        let y0 = tower.d + tower.m;
        for (&v, image) in map {
            if image.tower.as_ref() != tower.as_ref() {
                return Err(Error::DomainMismatch("substitution image from another tower".into()));
            }
            if v < x0 || v >= tower.t_index() {
                return Err(Error::InvalidSubstitution(format!(
                    "only x- and y-variables may be substituted, got {}",
                    tower.name_of(v)
                )));
            }
            if v >= y0 && !image.is_unit() {
                return Err(Error::InvalidSubstitution(format!(
                    "image of Laurent variable {} must be a unit, got {}",
                    tower.name_of(v),
                    image.render()
                )));
            }
        }
        let images: Vec<Element> = (0..tower.nvars())
            .map(|v| map.get(&v).cloned().unwrap_or_else(|| Element::var(tower.clone(), v)))
            .collect();
        let mut out = self.eval_numerator(&images);
        if self.ypow > 0 {
            let mut y_img = Element::one(tower.clone());
            for j in 0..tower.n {
                y_img = y_img.mul(&images[tower.y_index(j)]);
            }
            out = out.mul(&y_img.inverse()?.pow_u32(self.ypow));
        }
        if self.fpow > 0 {
            // the substitution fixes z and t, hence f
            out = out.mul(&Element::new(
                tower.clone(),
                Polynomial::one(tower.nvars(), tower.domain),
                0,
                self.fpow,
            ));
        }
        Ok(out)
    }

    /// `B`-algebra endomorphism of `B[t]` sending `t` to the given element;
    /// defined only away from the `f`-localization.
    pub fn subst_t(&self, value: &Element) -> Result<Element> {
        let tower = &self.tower;
        if self.fpow != 0 || value.fpow != 0 {
            return Err(Error::InvalidSubstitution(
                "t-substitution is an endomorphism of B[t]; no f-denominators allowed".into(),
            ));
        }
        let images: Vec<Element> = (0..tower.nvars())
            .map(|v| {
                if v == tower.t_index() {
                    value.clone()
                } else {
                    Element::var(tower.clone(), v)
                }
            })
            .collect();
        let mut out = self.eval_numerator(&images);
        if self.ypow > 0 {
            out = out.mul(&Element::new(
                tower.clone(),
                Polynomial::one(tower.nvars(), tower.domain),
                self.ypow,
                0,
            ));
        }
        Ok(out)
    }

    fn eval_numerator(&self, images: &[Element]) -> Element {
        let tower = &self.tower;
        let mut out = Element::zero(tower.clone());
        for (e, c) in self.num.terms() {
            let mut term = Element::scalar(tower.clone(), c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&images[v].pow_u32(k));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluation `t := 1`, the map `A -> B`. Requires `f(1)` to be a unit.
    pub fn evaluate_at_one(&self) -> Result<Element> {
        let tower = &self.tower;
        if self.fpow > 0 && !tower.f_at_one_unit() {
            return Err(Error::BoundaryUndefined(
                tower.f_at_one().render(tower.names()),
            ));
        }
        let num1 = self.num.eval_var_at_one(tower.t_index());
        let mut scale = Scalar::one(tower.domain);
        for _ in 0..self.fpow {
            scale = scale.mul(&tower.f_at_one().constant_coeff().inv().map_err(|_| {
                Error::BoundaryUndefined(tower.f_at_one().render(tower.names()))
            })?);
        }
        Ok(Element::new(tower.clone(), num1.mul_scalar(&scale), self.ypow, 0))
    }

    pub fn render(&self) -> String {
        let names = self.tower.names();
        let num_str = self.num.render(names);
        if self.ypow == 0 && self.fpow == 0 {
            return num_str;
        }
        let mut denom_parts = Vec::new();
        if self.ypow > 0 {
            for j in 0..self.tower.n {
                let name = &names[self.tower.y_index(j)];
                if self.ypow == 1 {
                    denom_parts.push(name.clone());
                } else {
                    denom_parts.push(format!("{name}^{}", self.ypow));
                }
            }
        }
        if self.fpow > 0 {
            let f_str = self.tower.f.render(names);
            if self.fpow == 1 {
                denom_parts.push(format!("({f_str})"));
            } else {
                denom_parts.push(format!("({f_str})^{}", self.fpow));
            }
        }
        let num_wrapped = if self.num.num_terms() > 1 {
            format!("({num_str})")
        } else {
            num_str
        };
        format!("{num_wrapped}/({})", denom_parts.join("*"))
    }

    /// Value-preserving check used by tests: cross-multiplied equality in `S`.
    pub fn same_value(&self, other: &Element) -> bool {
        if self.tower.as_ref() != other.tower.as_ref() {
            return false;
        }
        let (na, ua) = self.clear_denominator();
        let (nb, ub) = other.clear_denominator();
        na.mul(ub.num()) == nb.mul(ua.num())
    }
}

/// Strip a `y`-monomial factor helper: checks divisibility of every term.
pub fn divisible_by_full_y(p: &Polynomial, tower: &RingTower) -> bool {
    if tower.n == 0 || p.is_zero() {
        return false;
    }
    let mut mono = vec![0u32; tower.nvars()];
    for j in 0..tower.n {
        mono[tower.y_index(j)] = 1;
    }
    p.terms().all(|(e, _)| mono_div(e, &mono).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarDomain;
    use crate::tower::RingTower;

    fn tower_xy() -> Arc<RingTower> {
        // k[x1][y1^{±1}][t, t^{-1}]
        RingTower::new(0, 1, 1, "t", ScalarDomain::Q).unwrap()
    }

    #[test]
    fn canonical_stripping() {
        let tw = tower_xy();
        let x1 = Element::var(tw.clone(), tw.x_index(0));
        let y1 = Element::var(tw.clone(), tw.y_index(0));
        // y1*x1 / y1 -> x1
        let e = Element::new(tw.clone(), y1.num().mul(x1.num()), 1, 0);
        assert_eq!(e, x1);
        // f*g / f -> g with f = t
        let t = Element::var(tw.clone(), tw.t_index());
        let g = x1.add(&y1);
        let e = Element::new(tw.clone(), t.num().mul(g.num()), 0, 1);
        assert_eq!(e, g);
        // x1 + y1 over y1 stays put
        let e = Element::new(tw.clone(), x1.num().add(y1.num()), 1, 0);
        assert_eq!(e.ypow(), 1);
    }

    #[test]
    fn arith_common_denominator() {
        let tw = tower_xy();
        let x1 = Element::var(tw.clone(), tw.x_index(0));
        let y1_inv = Element::new(tw.clone(), Polynomial::one(tw.nvars(), tw.domain), 1, 0);
        let lhs = y1_inv.mul(&x1).add(&x1);
        // x1/y1 + x1 = (x1 + x1 y1)/y1
        assert_eq!(lhs.ypow(), 1);
        assert_eq!(lhs.fpow(), 0);
        let y1 = Element::var(tw.clone(), tw.y_index(0));
        let expect = x1.add(&x1.mul(&y1));
        assert_eq!(lhs.num(), expect.num());
    }

    #[test]
    fn unit_inverse_roundtrip() {
        let tw = tower_xy();
        let y1 = Element::var(tw.clone(), tw.y_index(0));
        let t = Element::var(tw.clone(), tw.t_index());
        let u = y1.mul(&t.pow_u32(2)).mul_scalar(&Scalar::from_i64(ScalarDomain::Q, -3));
        let inv = u.inverse().unwrap();
        assert!(u.mul(&inv).is_one());
        let x1 = Element::var(tw.clone(), tw.x_index(0));
        assert!(x1.inverse().is_err());
        // 1/t * t = 1
        let t_inv = t.inverse().unwrap();
        assert!(t_inv.mul(&t).is_one());
    }

    #[test]
    fn substitution_examples() {
        let tw = RingTower::new(0, 2, 0, "t", ScalarDomain::Q).unwrap();
        let x1 = Element::var(tw.clone(), tw.x_index(0));
        let x2 = Element::var(tw.clone(), tw.x_index(1));
        let t = Element::var(tw.clone(), tw.t_index());
        // x1 -> x1 + t^2
        let mut map = BTreeMap::new();
        map.insert(tw.x_index(0), x1.add(&t.pow_u32(2)));
        assert_eq!(x1.substitute(&map).unwrap(), x1.add(&t.pow_u32(2)));
        // x2 - x1^2 under x1 -> x1 + x2^2
        let mut map = BTreeMap::new();
        map.insert(tw.x_index(0), x1.add(&x2.pow_u32(2)));
        let image = x2.sub(&x1.pow_u32(2)).substitute(&map).unwrap();
        let expect = x2
            .sub(&x2.pow_u32(4))
            .sub(&x1.mul(&x2.pow_u32(2)).mul_scalar(&Scalar::from_i64(ScalarDomain::Q, 2)))
            .sub(&x1.pow_u32(2));
        assert_eq!(image, expect);
    }

    #[test]
    fn laurent_rescale_substitution() {
        let tw = tower_xy();
        let x1 = Element::var(tw.clone(), tw.x_index(0));
        let y1 = Element::var(tw.clone(), tw.y_index(0));
        let t = Element::var(tw.clone(), tw.t_index());
        let mut map = BTreeMap::new();
        map.insert(tw.y_index(0), y1.mul(&t));
        let image = x1.mul(&y1).substitute(&map).unwrap();
        assert_eq!(image, x1.mul(&y1).mul(&t));
        // non-unit image rejected
        let mut bad = BTreeMap::new();
        bad.insert(tw.y_index(0), x1.clone());
        assert!(y1.substitute(&bad).is_err());
    }

    #[test]
    fn evaluate_at_one_examples() {
        let tw = tower_xy();
        let x1 = Element::var(tw.clone(), tw.x_index(0));
        let t = Element::var(tw.clone(), tw.t_index());
        let two = Element::from_i64(tw.clone(), 2);
        // t - 2 -> -1
        assert_eq!(t.sub(&two).evaluate_at_one().unwrap(), Element::from_i64(tw.clone(), -1));
        // 1/f with f = t -> 1
        let f_inv = Element::new(tw.clone(), Polynomial::one(tw.nvars(), tw.domain), 0, 1);
        assert!(f_inv.evaluate_at_one().unwrap().is_one());
        // x1 t^2 + 1/y1 -> x1 + 1/y1
        let y1_inv = Element::new(tw.clone(), Polynomial::one(tw.nvars(), tw.domain), 1, 0);
        let e = x1.mul(&t.pow_u32(2)).add(&y1_inv);
        assert_eq!(e.evaluate_at_one().unwrap(), x1.add(&y1_inv));
    }
}
