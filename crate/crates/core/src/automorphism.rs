//! The normalization automorphism families.
//!
//! Every family is triangular — each moved variable is shifted by terms in
//! fixed variables, or rescaled by a fixed unit — so the inverse is obtained
//! by negating the shift exponents' signs and is exact by construction.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::tower::{IdealHandle, Level, RingTower};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Exponent data of one automorphism family.
///
/// * `Suslin`: `x_i -> x_i + x_m^{s_i}` for `i < m`, fixing `x_m` (and all
///   `y`, `t`); used over `R[x1..xm]`.
/// * `TShift`: `x_i -> x_i + t^{s_i}`, fixing everything else.
/// * `Laurent`: `x_i -> x_i + y_n^{p_i} + y_n^{-q_i}`, `y_j -> y_j y_n^{l_j}`
///   for `j < n`, fixing `y_n`.
/// * `Combined`: `x_i -> x_i + t^{t_i} + f^{-s_i}`, `y_j -> y_j f^{l_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Identity,
    Suslin { shifts: Vec<u32> },
    TShift { shifts: Vec<u32> },
    Laurent { pos: Vec<u32>, neg: Vec<u32>, rescale: Vec<u32> },
    Combined { t_exp: Vec<u32>, f_exp: Vec<u32>, rescale: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub tower: Arc<RingTower>,
    pub level: Level,
    pub family: Family,
    pub inverted: bool,
}

impl Automorphism {
    pub fn identity(tower: Arc<RingTower>, level: Level) -> Automorphism {
        Automorphism { tower, level, family: Family::Identity, inverted: false }
    }

    pub fn new(tower: Arc<RingTower>, level: Level, family: Family) -> Result<Automorphism> {
        match &family {
            Family::Identity => {}
            Family::Suslin { shifts } => {
                if tower.m == 0 || shifts.len() != tower.m - 1 {
                    return Err(Error::Precondition(
                        "Suslin family needs m >= 1 and one shift per x_i, i < m".into(),
                    ));
                }
            }
            Family::TShift { shifts } => {
                if shifts.len() != tower.m {
                    return Err(Error::Precondition("TShift family needs one shift per x_i".into()));
                }
            }
            Family::Laurent { pos, neg, rescale } => {
                if tower.n == 0 {
                    return Err(Error::Precondition("Laurent family needs n >= 1".into()));
                }
                if pos.len() != tower.m || neg.len() != tower.m || rescale.len() != tower.n - 1 {
                    return Err(Error::Precondition(
                        "Laurent family needs shifts per x_i and rescales per y_j, j < n".into(),
                    ));
                }
            }
            Family::Combined { t_exp, f_exp, rescale } => {
                if t_exp.len() != tower.m || f_exp.len() != tower.m || rescale.len() != tower.n {
                    return Err(Error::Precondition(
                        "Combined family needs exponents per x_i and rescales per y_j".into(),
                    ));
                }
            }
        }
        Ok(Automorphism { tower, level, family, inverted: false })
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            tower: self.tower.clone(),
            level: self.level,
            family: self.family.clone(),
            inverted: !self.inverted,
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.family {
            Family::Identity => true,
            Family::Suslin { shifts } | Family::TShift { shifts } => {
                shifts.iter().all(|&s| s == 0)
            }
            Family::Laurent { pos, neg, rescale } => {
                pos.iter().all(|&e| e == 0)
                    && neg.iter().all(|&e| e == 0)
                    && rescale.iter().all(|&l| l == 0)
            }
            Family::Combined { t_exp, f_exp, rescale } => {
                t_exp.is_empty() && f_exp.is_empty() && rescale.iter().all(|&l| l == 0)
            }
        }
    }

    /// The substitution map on variable indices.
    pub fn substitution(&self) -> Result<BTreeMap<usize, Element>> {
        let tw = &self.tower;
        let mut map = BTreeMap::new();
        let sign: i64 = if self.inverted { -1 } else { 1 };
        match &self.family {
            Family::Identity => {}
            Family::Suslin { shifts } => {
                let target = Element::var(tw.clone(), tw.x_index(tw.m - 1));
                for (i, &s) in shifts.iter().enumerate() {
                    if s == 0 {
                        continue;
                    }
                    let xi = Element::var(tw.clone(), tw.x_index(i));
                    let shift = target.pow_u32(s);
                    let image = if sign > 0 { xi.add(&shift) } else { xi.sub(&shift) };
                    map.insert(tw.x_index(i), image);
                }
            }
            Family::TShift { shifts } => {
                let t = Element::var(tw.clone(), tw.t_index());
                for (i, &s) in shifts.iter().enumerate() {
                    if s == 0 {
                        continue;
                    }
                    let xi = Element::var(tw.clone(), tw.x_index(i));
                    let shift = t.pow_u32(s);
                    let image = if sign > 0 { xi.add(&shift) } else { xi.sub(&shift) };
                    map.insert(tw.x_index(i), image);
                }
            }
            Family::Laurent { pos, neg, rescale } => {
                let yn = Element::var(tw.clone(), tw.y_index(tw.n - 1));
                let yn_inv = yn.inverse()?;
                for i in 0..tw.m {
                    let xi = Element::var(tw.clone(), tw.x_index(i));
                    let mut shift = Element::zero(tw.clone());
                    if pos[i] > 0 {
                        shift = shift.add(&yn.pow_u32(pos[i]));
                    }
                    if neg[i] > 0 {
                        shift = shift.add(&yn_inv.pow_u32(neg[i]));
                    }
                    if shift.is_zero() {
                        continue;
                    }
                    let image = if sign > 0 { xi.add(&shift) } else { xi.sub(&shift) };
                    map.insert(tw.x_index(i), image);
                }
                for (j, &l) in rescale.iter().enumerate() {
                    if l == 0 {
                        continue;
                    }
                    let yj = Element::var(tw.clone(), tw.y_index(j));
                    let factor = if sign > 0 {
                        yn.pow_u32(l)
                    } else {
                        yn_inv.pow_u32(l)
                    };
                    map.insert(tw.y_index(j), yj.mul(&factor));
                }
            }
            Family::Combined { t_exp, f_exp, rescale } => {
                let t = Element::var(tw.clone(), tw.t_index());
                let f = Element::from_poly(tw.clone(), tw.f.clone());
                let f_inv = f.inverse()?;
                for i in 0..tw.m {
                    let xi = Element::var(tw.clone(), tw.x_index(i));
                    let shift = t.pow_u32(t_exp[i]).add(&f_inv.pow_u32(f_exp[i]));
                    let image = if sign > 0 { xi.add(&shift) } else { xi.sub(&shift) };
                    map.insert(tw.x_index(i), image);
                }
                for (j, &l) in rescale.iter().enumerate() {
                    if l == 0 {
                        continue;
                    }
                    let yj = Element::var(tw.clone(), tw.y_index(j));
                    let factor = if sign > 0 {
                        f.pow_u32(l)
                    } else {
                        f_inv.pow_u32(l)
                    };
                    map.insert(tw.y_index(j), yj.mul(&factor));
                }
            }
        }
        Ok(map)
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        let map = self.substitution()?;
        if map.is_empty() {
            return Ok(e.clone());
        }
        e.substitute(&map)
    }

    /// Generator-wise image of an ideal, at the same level.
    pub fn apply_ideal(&self, ideal: &IdealHandle) -> Result<IdealHandle> {
        if ideal.tower.as_ref() != self.tower.as_ref() {
            return Err(Error::DomainMismatch("automorphism and ideal over different towers".into()));
        }
        if !self.level_compatible(ideal.level) {
            return Err(Error::LevelMismatch(format!(
                "automorphism at level {} applied to an ideal at level {}",
                self.level.label(),
                ideal.level.label()
            )));
        }
        let gens = ideal
            .gens
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        ideal.with_gens(gens)
    }

    fn level_compatible(&self, ideal_level: Level) -> bool {
        use Level::*;
        match (self.level, ideal_level) {
            (a, b) if a == b => true,
            // a B-automorphism acts on B[t] and A; a B[t]-automorphism acts on A
            (B, By) | (B, A) | (By, A) => true,
            _ => false,
        }
    }

    /// Exponent data in the certificate wire format.
    pub fn wire(&self) -> AutomorphismWire {
        let (kind, ti, si, lj) = match &self.family {
            Family::Identity => ("identity", vec![], vec![], vec![]),
            Family::Suslin { shifts } => ("suslin", shifts.clone(), vec![], vec![]),
            Family::TShift { shifts } => ("tshift", shifts.clone(), vec![], vec![]),
            Family::Laurent { pos, neg, rescale } => {
                ("laurent", pos.clone(), neg.clone(), rescale.clone())
            }
            Family::Combined { t_exp, f_exp, rescale } => {
                ("combined", t_exp.clone(), f_exp.clone(), rescale.clone())
            }
        };
        AutomorphismWire {
            kind: kind.into(),
            level: self.level.label(),
            ti,
            si,
            lj,
            inverted: self.inverted,
        }
    }

    pub fn from_wire(tower: Arc<RingTower>, wire: &AutomorphismWire) -> Result<Automorphism> {
        let level = match wire.level.as_str() {
            "R" => Level::R,
            "B" => Level::B,
            "B[Y]" => Level::By,
            "A" => Level::A,
            other => Level::parse(other)?,
        };
        let family = match wire.kind.as_str() {
            "identity" => Family::Identity,
            "suslin" => Family::Suslin { shifts: wire.ti.clone() },
            "tshift" => Family::TShift { shifts: wire.ti.clone() },
            "laurent" => Family::Laurent {
                pos: wire.ti.clone(),
                neg: wire.si.clone(),
                rescale: wire.lj.clone(),
            },
            "combined" => Family::Combined {
                t_exp: wire.ti.clone(),
                f_exp: wire.si.clone(),
                rescale: wire.lj.clone(),
            },
            other => {
                return Err(Error::CertificateInvalid(format!(
                    "unknown automorphism kind `{other}`"
                )))
            }
        };
        let mut auto = Automorphism::new(tower, level, family)?;
        auto.inverted = wire.inverted;
        Ok(auto)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismWire {
    pub kind: String,
    pub level: String,
    pub ti: Vec<u32>,
    pub si: Vec<u32>,
    pub lj: Vec<u32>,
    pub inverted: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarDomain;

    #[test]
    fn suslin_round_trip() {
        let tw = RingTower::new(0, 2, 0, "t", ScalarDomain::Q).unwrap();
        let theta = Automorphism::new(
            tw.clone(),
            Level::B,
            Family::Suslin { shifts: vec![3] },
        )
        .unwrap();
        let x1 = Element::var(tw.clone(), tw.x_index(0));
        let x2 = Element::var(tw.clone(), tw.x_index(1));
        let g = x2.sub(&x1.pow_u32(2));
        let image = theta.apply(&g).unwrap();
        let back = theta.inverse().apply(&image).unwrap();
        assert_eq!(back, g);
        // x2 - (x1 + x2^3)^2 expands with leading term -x2^6
        assert_eq!(image.num().deg_in(tw.x_index(1)), 6);
    }

    #[test]
    fn combined_round_trip_with_f_denominators() {
        let tw = RingTower::new(0, 1, 1, "t-2", ScalarDomain::Q).unwrap();
        let theta = Automorphism::new(
            tw.clone(),
            Level::A,
            Family::Combined { t_exp: vec![2], f_exp: vec![1], rescale: vec![1] },
        )
        .unwrap();
        for idx in [tw.x_index(0), tw.y_index(0), tw.t_index()] {
            let v = Element::var(tw.clone(), idx);
            let image = theta.apply(&v).unwrap();
            let back = theta.inverse().apply(&image).unwrap();
            assert_eq!(back, v, "{}", tw.name_of(idx));
        }
    }

    #[test]
    fn laurent_round_trip() {
        let tw = RingTower::new(0, 1, 2, "t", ScalarDomain::Q).unwrap();
        let theta = Automorphism::new(
            tw.clone(),
            Level::B,
            Family::Laurent { pos: vec![2], neg: vec![1], rescale: vec![3] },
        )
        .unwrap();
        for idx in [tw.x_index(0), tw.y_index(0), tw.y_index(1)] {
            let v = Element::var(tw.clone(), idx);
            let image = theta.apply(&v).unwrap();
            let back = theta.inverse().apply(&image).unwrap();
            assert_eq!(back, v);
        }
    }
}
