//! Unit groups modulo `n` and the images of cyclotomic Galois groups in them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A subgroup of `Z_n^*` as a sorted residue list. Modulo 1 the trivial
/// group is written `[1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitSubgroup {
    pub modulus: u64,
    pub residues: Vec<u64>,
}

impl UnitSubgroup {
    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, t: u64) -> bool {
        let t = if self.modulus == 1 { 1 } else { t % self.modulus };
        self.residues.binary_search(&t).is_ok()
    }

    pub fn is_subset_of(&self, other: &UnitSubgroup) -> bool {
        self.modulus == other.modulus && self.residues.iter().all(|&t| other.contains(t))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FieldDescriptor {
    Rational,
    PAdic(u64),
    FinitePrime(u64),
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::FinitePrime(p) => *p,
            _ => 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldDescriptor::PAdic(p) | FieldDescriptor::FinitePrime(p) if !is_prime(*p) => {
                Err(Error::InvalidParameter(format!("{p} is not prime")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::PAdic(p) => write!(f, "Qp:{p}"),
            FieldDescriptor::FinitePrime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognized field '{s}'"));
        let field = if s == "Q" {
            FieldDescriptor::Rational
        } else if let Some(p) = s.strip_prefix("Qp:") {
            FieldDescriptor::PAdic(p.parse().map_err(|_| bad())?)
        } else if let Some(p) = s.strip_prefix("Fp:") {
            FieldDescriptor::FinitePrime(p.parse().map_err(|_| bad())?)
        } else {
            return Err(bad());
        };
        field.validate()?;
        Ok(field)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn mult_order(a: u64, n: u64) -> Result<u64> {
    if n == 0 || a.gcd(&n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    if n == 1 {
        return Ok(1);
    }
    let a = a % n;
    let mut p = a;
    let mut k = 1;
    while p != 1 {
        p = mul_mod(p, a, n);
        k += 1;
    }
    Ok(k)
}

pub fn generated_subgroup(n: u64, gens: &[u64]) -> Result<UnitSubgroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    for &g in gens {
        if g.gcd(&n) != 1 {
            return Err(Error::NotCoprime { a: g, n });
        }
    }
    if n == 1 {
        return Ok(UnitSubgroup {
            modulus: 1,
            residues: vec![1],
        });
    }
    let mut set = BTreeSet::from([1u64]);
    let mut frontier = vec![1u64];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = mul_mod(x, g % n, n);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    Ok(UnitSubgroup {
        modulus: n,
        residues: set.into_iter().collect(),
    })
}

pub fn units(n: u64) -> UnitSubgroup {
    if n == 1 {
        return UnitSubgroup {
            modulus: 1,
            residues: vec![1],
        };
    }
    UnitSubgroup {
        modulus: n,
        residues: (1..n).filter(|t| t.gcd(&n) == 1).collect(),
    }
}

pub fn contains_minus_one(s: &UnitSubgroup) -> bool {
    if s.modulus <= 2 {
        return true;
    }
    s.contains(s.modulus - 1)
}

/// Image of `Gal(F(ζ_n)/F)` in `Z_n^*`.
pub fn phi_image(field: FieldDescriptor, n: u64) -> Result<UnitSubgroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    field.validate()?;
    if let FieldDescriptor::FinitePrime(p) = field {
        if n % p == 0 {
            return Err(Error::InvalidParameter(format!(
                "Fp:{p} needs a modulus prime to {p}, got {n}"
            )));
        }
    }
    if n % 4 == 2 {
        // ζ_n and ζ_{n/2} generate the same field; lift through Z_n^* ≅ Z_{n/2}^*.
        let half = n / 2;
        let img = phi_image(field, half)?;
        let mut residues: Vec<u64> = img
            .residues
            .iter()
            .map(|&t| if t % 2 == 1 { t } else { t + half })
            .collect();
        residues.sort_unstable();
        return Ok(UnitSubgroup {
            modulus: n,
            residues,
        });
    }
    match field {
        FieldDescriptor::Rational => Ok(units(n)),
        FieldDescriptor::FinitePrime(p) => generated_subgroup(n, &[p]),
        FieldDescriptor::PAdic(p) => {
            if n % p != 0 {
                return generated_subgroup(n, &[p]);
            }
            let mut n1 = n;
            while n1 % p == 0 {
                n1 /= p;
            }
            let tail = generated_subgroup(n1, &[p])?;
            Ok(UnitSubgroup {
                modulus: n,
                residues: units(n)
                    .residues
                    .into_iter()
                    .filter(|&t| tail.contains(t))
                    .collect(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padic_two_mod_four() {
        assert_eq!(phi_image(FieldDescriptor::PAdic(2), 4).unwrap().residues, vec![1, 3]);
    }

    #[test]
    fn parse_fields() {
        assert_eq!("Qp:3".parse::<FieldDescriptor>().unwrap(), FieldDescriptor::PAdic(3));
        assert!("Fp:4".parse::<FieldDescriptor>().is_err());
    }
}
