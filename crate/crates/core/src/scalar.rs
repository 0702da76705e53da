//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Coefficient domain tag. `Fp` carries an odd prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ScalarDomain {
    Q,
    Fp(u64),
}

impl ScalarDomain {
    pub fn validate(&self) -> crate::Result<()> {
        match self {
            ScalarDomain::Q => Ok(()),
            ScalarDomain::Fp(p) => {
                if *p < 2 || *p >= (1 << 31) {
                    return Err(crate::Error::DomainMismatch(format!(
                        "prime {p} out of range [2, 2^31)"
                    )));
                }
                if !is_prime_u64(*p) {
                    return Err(crate::Error::DomainMismatch(format!("{p} is not prime")));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Q => write!(f, "Q"),
            ScalarDomain::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field element: a rational in lowest terms, or a residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Rat(_) => ScalarDomain::Q,
            Scalar::Fp { p, .. } => ScalarDomain::Fp(*p),
        }
    }

    pub fn zero(domain: ScalarDomain) -> Self {
        Scalar::from_i64(domain, 0)
    }

    pub fn one(domain: ScalarDomain) -> Self {
        Scalar::from_i64(domain, 1)
    }

    pub fn from_i64(domain: ScalarDomain, value: i64) -> Self {
        match domain {
            ScalarDomain::Q => Scalar::Rat(BigRational::from(BigInt::from(value))),
            ScalarDomain::Fp(p) => {
                let r = value.rem_euclid(p as i64) as u64;
                Scalar::Fp { v: r, p }
            }
        }
    }

    pub fn from_bigint(domain: ScalarDomain, value: &BigInt) -> Self {
        match domain {
            ScalarDomain::Q => Scalar::Rat(BigRational::from(value.clone())),
            ScalarDomain::Fp(p) => {
                let m = BigInt::from(p);
                let r = ((value % &m) + &m) % &m;
                let (_, digits) = r.to_u64_digits();
                Scalar::Fp { v: digits.first().copied().unwrap_or(0), p }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    fn assert_same(&self, rhs: &Scalar) {
        assert_eq!(
            self.domain(),
            rhs.domain(),
            "scalar arithmetic across coefficient domains"
        );
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self.assert_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp { v: (a + b) % p, p: *p },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self.assert_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { v: ((*a as u128 * *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> crate::Result<Scalar> {
        if self.is_zero() {
            return Err(crate::Error::NotAUnit("division by zero scalar".into()));
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { v, p } => Scalar::Fp { v: fp_pow(*v, p - 2, *p), p: *p },
        })
    }

    pub fn div(&self, rhs: &Scalar) -> crate::Result<Scalar> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// True when the scalar is a positive rational (or any nonzero residue);
    /// used only for display sign placement.
    pub fn display_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.abs()),
            s => s.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn fp_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64 with these witness bases.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = fp_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let a = Scalar::from_i64(ScalarDomain::Q, 2);
        let b = Scalar::from_i64(ScalarDomain::Q, 4);
        let q = a.div(&b).unwrap();
        assert_eq!(q.to_string(), "1/2");
    }

    #[test]
    fn fp_inverse_roundtrip() {
        let p = 32003;
        for v in [1u64, 2, 7, 31999] {
            let s = Scalar::Fp { v, p };
            assert!(s.mul(&s.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(32003));
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(32001));
        assert!(!is_prime_u64(1));
    }
}
