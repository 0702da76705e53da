//! The ambient ring tower and ideal handles with level bookkeeping.
//!
//! The polynomial cover is `S = k[z1..zd, x1..xm, y1..yn, t]`. Levels name
//! the localizations of subrings of `S` the tower passes through; every
//! ideal handle caches a saturated preimage in `S` — the contraction of the
//! ideal along `S -> level ring` — through which membership, equality,
//! height and dimension are computed.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::scalar::{Scalar, ScalarDomain};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The tower data `(d, m, n, f)` over an exact coefficient field.
#[derive(Clone, Debug)]
pub struct RingTower {
    pub d: usize,
    pub m: usize,
    pub n: usize,
    pub f: Polynomial,
    pub domain: ScalarDomain,
    names: Vec<String>,
}

impl PartialEq for RingTower {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d
            && self.m == other.m
            && self.n == other.n
            && self.f == other.f
            && self.domain == other.domain
    }
}
impl Eq for RingTower {}

impl RingTower {
    pub(crate) fn raw(
        d: usize,
        m: usize,
        n: usize,
        f: Polynomial,
        domain: ScalarDomain,
        names: Vec<String>,
    ) -> RingTower {
        RingTower { d, m, n, f, domain, names }
    }

    pub fn new(d: usize, m: usize, n: usize, f_text: &str, domain: ScalarDomain) -> Result<Arc<RingTower>> {
        domain.validate()?;
        let names = var_names(d, m, n);
        let nvars = d + m + n + 1;
        let f_el = crate::parse::parse_in_names(f_text, &names, domain, nvars)?;
        if f_el.ypow() != 0 || f_el.fpow() != 0 {
            return Err(Error::InvalidTower("f must be a polynomial, without denominators".into()));
        }
        let f = f_el.num().clone();
        if f.is_zero() {
            return Err(Error::InvalidTower("f must be nonzero".into()));
        }
        for v in f.support() {
            let is_z = v < d;
            let is_t = v == nvars - 1;
            if !is_z && !is_t {
                return Err(Error::InvalidTower(format!(
                    "f may mention only z-variables and t, found {}",
                    names[v]
                )));
            }
        }
        Ok(Arc::new(RingTower { d, m, n, f, domain, names }))
    }

    pub fn nvars(&self) -> usize {
        self.d + self.m + self.n + 1
    }

    /// Krull dimension of `A` (equal to that of the polynomial cover).
    pub fn dim_a(&self) -> usize {
        self.d + self.m + self.n + 1
    }

    pub fn z_index(&self, i: usize) -> usize {
        assert!(i < self.d);
        i
    }

    pub fn x_index(&self, i: usize) -> usize {
        assert!(i < self.m);
        self.d + i
    }

    pub fn y_index(&self, j: usize) -> usize {
        assert!(j < self.n);
        self.d + self.m + j
    }

    pub fn t_index(&self) -> usize {
        self.d + self.m + self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, var: usize) -> &str {
        &self.names[var]
    }

    /// Monomial `y1*...*yn` as a polynomial (1 when n = 0).
    pub fn y_product(&self) -> Polynomial {
        let mut e = vec![0u32; self.nvars()];
        for j in 0..self.n {
            e[self.y_index(j)] = 1;
        }
        Polynomial::monomial(self.nvars(), e, Scalar::one(self.domain))
    }

    /// The element inverted at the given level: a subproduct of `(y1..yn)*f`.
    pub fn sat_element(&self, level: Level) -> Polynomial {
        let one = Polynomial::one(self.nvars(), self.domain);
        match level {
            Level::R => one,
            Level::B | Level::By => self.y_product(),
            Level::ByPoly(k) => {
                let mut e = vec![0u32; self.nvars()];
                for j in 0..k {
                    e[self.y_index(j)] = 1;
                }
                Polynomial::monomial(self.nvars(), e, Scalar::one(self.domain))
            }
            Level::A => self.y_product().mul(&self.f),
        }
    }

    /// Is `f` monic in `t` (leading `t`-coefficient a nonzero constant)?
    pub fn f_monic_in_t(&self) -> bool {
        let lc = self.f.leading_coeff_in(self.t_index());
        lc.is_constant() && !lc.is_zero()
    }

    /// `f(1)`, an element of `k[z]`.
    pub fn f_at_one(&self) -> Polynomial {
        self.f.eval_var_at_one(self.t_index())
    }

    /// Is `f(1)` a unit of `R = k[z]` (a nonzero constant)?
    pub fn f_at_one_unit(&self) -> bool {
        let v = self.f_at_one();
        v.is_constant() && !v.is_zero()
    }
}

pub fn var_names(d: usize, m: usize, n: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(d + m + n + 1);
    for i in 1..=d {
        names.push(format!("z{i}"));
    }
    for i in 1..=m {
        names.push(format!("x{i}"));
    }
    for j in 1..=n {
        names.push(format!("y{j}"));
    }
    names.push("t".into());
    names
}

/// A named level of the tower. `ByPoly(k)` is the internal contraction ring
/// `k[z, x, y1^{±1}..yk^{±1}, y_{k+1}..yn, t]` used by the lifting pipelines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    R,
    B,
    By,
    A,
    ByPoly(usize),
}

impl Level {
    pub fn label(&self) -> String {
        match self {
            Level::R => "R".into(),
            Level::B => "B".into(),
            Level::By => "B[Y]".into(),
            Level::A => "A".into(),
            Level::ByPoly(k) => format!("B[Y]|poly>{k}"),
        }
    }

    pub fn parse(s: &str) -> Result<Level> {
        match s {
            "R" => Ok(Level::R),
            "B" => Ok(Level::B),
            "B[Y]" | "BY" => Ok(Level::By),
            "A" => Ok(Level::A),
            _ => Err(Error::LevelMismatch(format!("unknown level `{s}`"))),
        }
    }

    /// Does the level allow the variable (as generator support)?
    fn allows_var(&self, tower: &RingTower, var: usize) -> bool {
        match self {
            Level::R => var < tower.d,
            Level::B => var != tower.t_index(),
            _ => true,
        }
    }

    /// Check that an element's denominators are legal at this level.
    fn check_denominators(&self, tower: &RingTower, g: &Element) -> Result<()> {
        if g.fpow() > 0 && !matches!(self, Level::A) {
            return Err(Error::LevelMismatch(format!(
                "generator {} has an f-denominator, not allowed at level {}",
                g.render(),
                self.label()
            )));
        }
        if g.ypow() == 0 {
            return Ok(());
        }
        let laurent_count = match self {
            Level::R => 0,
            Level::ByPoly(k) => *k,
            _ => tower.n,
        };
        // denominators are written over the full product (y1..yn)^a; the
        // value lies in the level ring iff the non-inverted y's divide out
        for j in laurent_count..tower.n {
            let v = tower.y_index(j);
            let ok = g.num().terms().all(|(e, _)| e[v] >= g.ypow());
            if !ok {
                return Err(Error::LevelMismatch(format!(
                    "generator {} inverts {}, not allowed at level {}",
                    g.render(),
                    tower.name_of(v),
                    self.label()
                )));
            }
        }
        Ok(())
    }
}

/// Saturated preimage data: generators of the contraction in `S`, each with
/// its expression over the handle generators as elements of the level ring.
#[derive(Clone, Debug)]
pub struct PreimageData {
    pub gens: Vec<Polynomial>,
    pub cofactors: Vec<Vec<Element>>,
}

#[derive(Default)]
struct HandleCaches {
    preimage: OnceLock<Arc<PreimageData>>,
    gb: Mutex<BTreeMap<TermOrder, Arc<GroebnerBasis>>>,
}

/// Generators of an ideal at a named level of the tower.
#[derive(Clone)]
pub struct IdealHandle {
    pub tower: Arc<RingTower>,
    pub level: Level,
    pub gens: Vec<Element>,
    caches: Arc<HandleCaches>,
}

impl std::fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IdealHandle[{}](", self.level.label())?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.render())?;
        }
        write!(f, ")")
    }
}

impl IdealHandle {
    pub fn new(tower: Arc<RingTower>, level: Level, gens: Vec<Element>) -> Result<IdealHandle> {
        for g in &gens {
            if g.tower().as_ref() != tower.as_ref() {
                return Err(Error::DomainMismatch("generator from a different tower".into()));
            }
            level.check_denominators(&tower, g)?;
            for v in g.num().support() {
                let is_y = (tower.d + tower.m..tower.d + tower.m + tower.n).contains(&v);
                let ok = level.allows_var(&tower, v) || (g.ypow() > 0 && is_y);
                if !ok {
                    return Err(Error::LevelMismatch(format!(
                        "generator {} mentions {}, not allowed at level {}",
                        g.render(),
                        tower.name_of(v),
                        level.label()
                    )));
                }
            }
        }
        Ok(IdealHandle { tower, level, gens, caches: Arc::new(HandleCaches::default()) })
    }

    pub fn from_polys(tower: Arc<RingTower>, level: Level, polys: Vec<Polynomial>) -> Result<IdealHandle> {
        let gens = polys
            .into_iter()
            .map(|p| Element::from_poly(tower.clone(), p))
            .collect();
        IdealHandle::new(tower, level, gens)
    }

    /// The saturated preimage in `S`: clear denominators of the generators,
    /// then saturate at the level's inverted element. Cached; cofactors
    /// expressing each preimage generator over the handle generators ride
    /// along for witness extraction.
    pub fn preimage(&self) -> Arc<PreimageData> {
        self.caches
            .preimage
            .get_or_init(|| {
                let tower = &self.tower;
                let nvars = tower.nvars();
                let mut cleared: Vec<Polynomial> = Vec::new();
                let mut clear_units: Vec<Element> = Vec::new();
                for g in &self.gens {
                    let (num, unit) = g.clear_denominator();
                    if num.is_zero() {
                        continue;
                    }
                    cleared.push(num);
                    clear_units.push(unit);
                }
                if cleared.is_empty() {
                    return Arc::new(PreimageData { gens: Vec::new(), cofactors: Vec::new() });
                }
                let u = tower.sat_element(self.level);
                if u.is_one() {
                    // no localization: reduced basis with tracked cofactors
                    let gb = groebner::buchberger(&cleared, &TermOrder::GrevLex, true);
                    let mut gens = Vec::new();
                    let mut cofs = Vec::new();
                    for (g, cof) in gb.gens.iter().zip(gb.cofactors.as_ref().unwrap()) {
                        gens.push(g.clone());
                        cofs.push(
                            cof.iter()
                                .zip(&clear_units)
                                .map(|(c, unit)| {
                                    Element::from_poly(tower.clone(), c.clone()).mul(unit)
                                })
                                .collect(),
                        );
                    }
                    return Arc::new(PreimageData { gens, cofactors: cofs });
                }
                let u_inv = Element::from_poly(tower.clone(), u.clone())
                    .inverse()
                    .expect("the level's inverted element is a unit");
                let sat = groebner::saturate(&cleared, &u, nvars, true);
                let mut gens = Vec::new();
                let mut cofs = Vec::new();
                for (g, cof) in sat {
                    let cof = cof.expect("tracked saturation");
                    // cofactors live over [cleared..., 1 - w*u]; evaluating
                    // w at u^{-1} kills the relation term.
                    let mut row: Vec<Element> = Vec::with_capacity(self.gens.len());
                    for (k, unit) in clear_units.iter().enumerate() {
                        let q = eval_w(&cof[k], &u_inv, tower.clone());
                        row.push(q.mul(unit));
                    }
                    gens.push(g);
                    cofs.push(row);
                }
                Arc::new(PreimageData { gens, cofactors: cofs })
            })
            .clone()
    }

    /// Groebner basis of the saturated preimage, memoized per term order.
    pub fn gb(&self, order: &TermOrder) -> Arc<GroebnerBasis> {
        let mut cache = self.caches.gb.lock().unwrap();
        if let Some(gb) = cache.get(order) {
            return gb.clone();
        }
        let gb = Arc::new(groebner::buchberger(&self.preimage().gens, order, false));
        cache.insert(order.clone(), gb.clone());
        gb
    }

    pub fn is_proper(&self) -> bool {
        !self.gb(&TermOrder::GrevLex).is_unit_ideal()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.preimage().gens.is_empty()
    }

    /// Membership of an element of the level ring.
    pub fn contains(&self, e: &Element) -> bool {
        let (num, _) = e.clear_denominator();
        self.gb(&TermOrder::GrevLex).contains(&num)
    }

    /// Membership with cofactors over the handle generators.
    pub fn contains_certified(&self, e: &Element) -> Option<Vec<Element>> {
        let (num, unit) = e.clear_denominator();
        if num.is_zero() {
            return Some(vec![Element::zero(self.tower.clone()); self.gens.len()]);
        }
        let pre = self.preimage();
        let gb = groebner::buchberger(&pre.gens, &TermOrder::GrevLex, true);
        let cert = groebner::member_certificate(&num, &gb)?;
        let unit_inv = unit.inverse().expect("denominator unit");
        let mut out = vec![Element::zero(self.tower.clone()); self.gens.len()];
        for (q, pre_cof) in cert.iter().zip(&pre.cofactors) {
            if q.is_zero() {
                continue;
            }
            let qe = Element::from_poly(self.tower.clone(), q.clone());
            for (o, c) in out.iter_mut().zip(pre_cof) {
                *o = o.add(&qe.mul(c));
            }
        }
        for o in out.iter_mut() {
            *o = o.mul(&unit_inv);
        }
        // replay before returning
        let mut acc = Element::zero(self.tower.clone());
        for (c, g) in out.iter().zip(&self.gens) {
            acc = acc.add(&c.mul(g));
        }
        (acc == *e).then_some(out)
    }

    /// Equality of ideals, compared via saturated preimages.
    pub fn ideal_equal(&self, other: &IdealHandle) -> Result<bool> {
        if self.tower.as_ref() != other.tower.as_ref() {
            return Err(Error::DomainMismatch("ideal handles over different towers".into()));
        }
        if self.level != other.level {
            return Err(Error::LevelMismatch(format!(
                "cannot compare level {} with level {}",
                self.level.label(),
                other.level.label()
            )));
        }
        let ga = self.gb(&TermOrder::GrevLex);
        let gb = other.gb(&TermOrder::GrevLex);
        Ok(other.preimage().gens.iter().all(|g| ga.contains(g))
            && self.preimage().gens.iter().all(|g| gb.contains(g)))
    }

    /// Height of the ideal: the height of its saturated preimage in `S`.
    pub fn height(&self) -> Result<usize> {
        let pre = self.preimage();
        if pre.gens.is_empty() {
            return Ok(0);
        }
        let (_, h) = groebner::dimension_height(&pre.gens, self.tower.nvars())?;
        Ok(h)
    }

    /// Krull dimension of the quotient by the saturated preimage.
    pub fn dim_quotient(&self) -> Result<usize> {
        let pre = self.preimage();
        if pre.gens.is_empty() {
            return Ok(self.tower.nvars());
        }
        let (dim, _) = groebner::dimension_height(&pre.gens, self.tower.nvars())?;
        Ok(dim)
    }

    /// Contract to a lower level. The preimage generators already live in
    /// `S`; contraction re-saturates and, below `B[Y]`, eliminates variables.
    pub fn contract(&self, target: Level) -> Result<IdealHandle> {
        if !self.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let tower = self.tower.clone();
        let nvars = tower.nvars();
        let pre = self.preimage();
        let polys: Vec<Polynomial> = match target {
            Level::A => pre.gens.clone(),
            Level::By | Level::ByPoly(_) => {
                let u = tower.sat_element(target);
                if u.is_one() {
                    groebner::buchberger(&pre.gens, &TermOrder::GrevLex, false).gens
                } else {
                    groebner::saturate_plain(&pre.gens, &u, nvars)
                }
            }
            Level::B => {
                let kept: Vec<usize> = (0..nvars).filter(|&v| v != tower.t_index()).collect();
                let u = tower.sat_element(Level::B);
                let sat = if u.is_one() {
                    pre.gens.clone()
                } else {
                    groebner::saturate_plain(&pre.gens, &u, nvars)
                };
                groebner::eliminate(&sat, &kept, nvars)
            }
            Level::R => {
                let kept: Vec<usize> = (0..tower.d).collect();
                groebner::eliminate(&pre.gens, &kept, nvars)
            }
        };
        IdealHandle::from_polys(tower, target, polys)
    }

    /// Re-generate the ideal at a higher level with the same generators.
    pub fn extend_to(&self, target: Level) -> Result<IdealHandle> {
        IdealHandle::new(self.tower.clone(), target, self.gens.clone())
    }

    /// Generators of the ideal power `I^k` (all k-fold products).
    pub fn power_gens(&self, k: u32) -> Vec<Element> {
        let mut acc: Vec<Element> = vec![Element::one(self.tower.clone())];
        for _ in 0..k {
            let mut next: Vec<Element> = Vec::new();
            for a in &acc {
                for g in &self.gens {
                    let val = a.mul(g);
                    if !next.contains(&val) {
                        next.push(val);
                    }
                }
            }
            acc = next;
        }
        acc
    }

    pub fn square_gens(&self) -> Vec<Element> {
        self.power_gens(2)
    }

    pub fn with_gens(&self, gens: Vec<Element>) -> Result<IdealHandle> {
        IdealHandle::new(self.tower.clone(), self.level, gens)
    }
}

/// Evaluate the trailing variable `w` of an extended polynomial at an
/// element of `A`.
fn eval_w(p: &Polynomial, at: &Element, tower: Arc<RingTower>) -> Element {
    let nvars = tower.nvars();
    let w = nvars;
    let mut acc = Element::zero(tower.clone());
    let max = p.deg_in(w);
    for k in 0..=max {
        let coeff = p.coeff_of_var_power(w, k).truncate_vars(nvars);
        if coeff.is_zero() {
            continue;
        }
        let base = Element::from_poly(tower.clone(), coeff);
        acc = acc.add(&base.mul(&at.pow_u32(k)));
    }
    acc
}

/// JSON spec for a ring/ideal pair, the on-disk input format.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingIdealSpec {
    pub d: usize,
    pub m: usize,
    pub n: usize,
    pub f: String,
    #[serde(default = "default_level")]
    pub level: String,
    pub generators: Vec<String>,
}

fn default_level() -> String {
    "A".into()
}

impl RingIdealSpec {
    pub fn build(&self, domain: ScalarDomain) -> Result<(Arc<RingTower>, IdealHandle)> {
        let tower = RingTower::new(self.d, self.m, self.n, &self.f, domain)?;
        let level = Level::parse(&self.level)?;
        let gens = self
            .generators
            .iter()
            .map(|s| crate::parse::parse_element(s, &tower))
            .collect::<Result<Vec<_>>>()?;
        let handle = IdealHandle::new(tower.clone(), level, gens)?;
        Ok((tower, handle))
    }
}
