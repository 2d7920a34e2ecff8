//! Whitehead ranks, `K_{-1}`, `K̃_0` lookups and rational Wedderburn shapes.

use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::census::conjugacy_classes;
use crate::error::{Error, Result};
use crate::fconj::f_partition_with;
use crate::galois::{contains_minus_one, generated_subgroup, is_prime, FieldDescriptor};
use crate::groups::{Family, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Copies {
    Finite(u64),
    Countable,
}

impl Copies {
    fn add(self, other: Copies) -> Copies {
        match (self, other) {
            (Copies::Finite(a), Copies::Finite(b)) => Copies::Finite(a + b),
            _ => Copies::Countable,
        }
    }

    fn times(self, k: u64) -> Copies {
        match self {
            Copies::Finite(a) => Copies::Finite(a * k),
            Copies::Countable => Copies::Countable,
        }
    }
}

impl Serialize for Copies {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Copies::Finite(k) => s.serialize_u64(*k),
            Copies::Countable => s.serialize_str("countable"),
        }
    }
}

/// Infinitely generated summands that only appear symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SummandName {
    /// A countable direct sum of copies of `Z_2`.
    Z2Countable,
    /// An infinitely generated group of exponent 2 or 4.
    WExponent2Or4,
    NilBass(u8),
    NilTwisted(u8, u8),
    /// The aggregated Nil term of a group with infinitely many maximal
    /// virtually cyclic classes.
    Nil(u8),
}

impl fmt::Display for SummandName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandName::Z2Countable => write!(f, "(Z2)^∞"),
            SummandName::WExponent2Or4 => write!(f, "W_exponent_2_or_4"),
            SummandName::NilBass(i) => write!(f, "NK_{i}"),
            SummandName::NilTwisted(i, j) => write!(f, "NK_{i}^tw{j}"),
            SummandName::Nil(i) => write!(f, "Nil_{i}"),
        }
    }
}

/// `Z^rank ⊕ torsion ⊕ named infinite summands`, kept in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AbelianGroupExpr {
    free_rank: u64,
    torsion: Vec<u64>,
    infinite: Vec<(SummandName, Copies)>,
}

impl AbelianGroupExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: u64) -> Self {
        Self {
            free_rank: rank,
            ..Self::default()
        }
    }

    /// `(Z_n)^copies`.
    pub fn cyclic(n: u64, copies: usize) -> Self {
        Self::zero().with_torsion(n, copies)
    }

    pub fn summand(name: SummandName, copies: Copies) -> Self {
        Self::zero().with_summand(name, copies)
    }

    pub fn with_torsion(mut self, n: u64, copies: usize) -> Self {
        if n >= 2 {
            self.torsion.extend(std::iter::repeat(n).take(copies));
        }
        self.canonical()
    }

    pub fn with_summand(mut self, name: SummandName, copies: Copies) -> Self {
        self.infinite.push((name, copies));
        self.canonical()
    }

    pub fn free_rank(&self) -> u64 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn infinite(&self) -> &[(SummandName, Copies)] {
        &self.infinite
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty() && self.infinite.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroupExpr) -> AbelianGroupExpr {
        let mut out = self.clone();
        out.free_rank += other.free_rank;
        out.torsion.extend_from_slice(&other.torsion);
        out.infinite.extend_from_slice(&other.infinite);
        out.canonical()
    }

    /// `k` copies of the whole group.
    pub fn times(&self, k: u64) -> AbelianGroupExpr {
        let mut out = AbelianGroupExpr {
            free_rank: self.free_rank * k,
            torsion: Vec::new(),
            infinite: self.infinite.iter().map(|&(n, c)| (n, c.times(k))).collect(),
        };
        for _ in 0..k {
            out.torsion.extend_from_slice(&self.torsion);
        }
        out.canonical()
    }

    fn canonical(mut self) -> Self {
        self.torsion.sort_unstable();
        self.infinite.sort_by_key(|(n, _)| n.to_string());
        let mut merged: Vec<(SummandName, Copies)> = Vec::new();
        for (name, copies) in self.infinite.drain(..) {
            if copies == Copies::Finite(0) {
                continue;
            }
            match merged.last_mut() {
                Some((last, c)) if *last == name => *c = c.add(copies),
                _ => merged.push((name, copies)),
            }
        }
        self.infinite = merged;
        self
    }
}

impl fmt::Display for AbelianGroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let n = self.torsion[i];
            let k = self.torsion[i..].iter().take_while(|&&t| t == n).count();
            parts.push(if k == 1 {
                format!("Z_{n}")
            } else {
                format!("(Z_{n})^{k}")
            });
            i += k;
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for (name, copies) in &self.infinite {
            parts.push(match copies {
                Copies::Finite(1) => name.to_string(),
                Copies::Finite(k) => format!("{k}{name}"),
                Copies::Countable => format!("⊕_∞ {name}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

struct Summand<'a>(&'a SummandName, &'a Copies);

impl Serialize for Summand<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("name", &self.0.to_string())?;
        m.serialize_entry("copies", self.1)?;
        m.end()
    }
}

impl Serialize for AbelianGroupExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AbelianGroupExpr", 3)?;
        st.serialize_field("rank", &self.free_rank)?;
        st.serialize_field("torsion", &self.torsion)?;
        let inf: Vec<Summand> = self.infinite.iter().map(|(n, c)| Summand(n, c)).collect();
        st.serialize_field("infinite", &inf)?;
        st.end()
    }
}

/// A `K̃_0` value; outside the known tables the answer is `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K0Value {
    Known(AbelianGroupExpr),
    Unknown,
}

impl Serialize for K0Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            K0Value::Known(e) => e.serialize(s),
            K0Value::Unknown => s.serialize_str("unknown"),
        }
    }
}

impl fmt::Display for K0Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K0Value::Known(e) => write!(f, "{e}"),
            K0Value::Unknown => write!(f, "unknown"),
        }
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn divisor_count(n: u64) -> u64 {
    divisors(n).len() as u64
}

/// Dicyclic parameter `m` for dicyclic and generalized quaternion groups.
pub fn dicyclic_m(family: &Family) -> Option<u64> {
    match family {
        Family::Dicyclic(m) => Some(*m),
        Family::GeneralizedQuaternion(k) => Some(1 << (k - 2)),
        _ => None,
    }
}

pub fn whitehead_closed_form(g: &FiniteGroup) -> Option<u64> {
    match g.family() {
        Family::Cyclic(m) => Some(m / 2 + 1 - divisor_count(*m)),
        Family::BinaryTetrahedral => Some(0),
        Family::BinaryOctahedral => Some(1),
        Family::BinaryIcosahedral => Some(2),
        f => dicyclic_m(f).map(|m| m + 1 - divisor_count(2 * m)),
    }
}

/// `Σ_d (r1(d) − r2(d))` from the class census.
pub fn whitehead_rank_census(g: &FiniteGroup, bound: usize) -> Result<u64> {
    let census = conjugacy_classes(g, bound)?;
    let r1: usize = census.r1_by_order.values().sum();
    let r2: usize = census.r2_by_order.values().sum();
    Ok((r1 - r2) as u64)
}

/// Rank of `Wh(G)`. Whenever both the closed form and the census are
/// available they must agree.
pub fn whitehead_rank(g: &FiniteGroup, bound: usize) -> Result<u64> {
    let closed = whitehead_closed_form(g);
    if g.order() > bound {
        return closed.ok_or(Error::TooLarge {
            order: g.order(),
            bound,
        });
    }
    let census = whitehead_rank_census(g, bound)?;
    match closed {
        Some(c) if c != census => Err(Error::Mismatch(format!(
            "{}: closed form {c}, census {census}",
            g.family()
        ))),
        _ => Ok(census),
    }
}

pub fn sk1_is_trivial(g: &FiniteGroup) -> Result<bool> {
    match g.family() {
        Family::Custom(name) => Err(Error::Unsupported(format!(
            "SK1 triviality is only known for the braid families, not {name}"
        ))),
        _ => Ok(true),
    }
}

/// Number of `Q_2`-classes of elements of order `m` in `Dic_{4m}`, `m` an odd prime.
pub fn lambda(m: u64) -> Result<u64> {
    if m < 3 || !is_prime(m) {
        return Err(Error::InvalidParameter(format!("{m} is not an odd prime")));
    }
    let two = generated_subgroup(m, &[2])?;
    let size = two.len() as u64;
    Ok(if contains_minus_one(&two) {
        (m - 1) / size
    } else {
        (m - 1) / (2 * size)
    })
}

fn prime_divisors(n: u64) -> Vec<u64> {
    divisors(n).into_iter().filter(|&d| is_prime(d)).collect()
}

/// `1 − r_Q + Σ_{p | |G|} (r_{Q_p} − r_{F_p})` by full Witt–Berman counts.
pub fn carter_rank_census(g: &FiniteGroup, bound: usize) -> Result<u64> {
    let census = conjugacy_classes(g, bound)?;
    let count = |f: FieldDescriptor| -> Result<i64> {
        Ok(f_partition_with(g, &census, f)?.blocks.len() as i64)
    };
    let mut r = 1 - count(FieldDescriptor::Rational)?;
    for p in prime_divisors(g.order() as u64) {
        r += count(FieldDescriptor::PAdic(p))? - count(FieldDescriptor::FinitePrime(p))?;
    }
    u64::try_from(r).map_err(|_| Error::Construction(format!("negative Carter rank {r}")))
}

/// Carter ranks known in closed form.
pub fn carter_closed_form(g: &FiniteGroup) -> Option<u64> {
    match g.family() {
        Family::BinaryTetrahedral | Family::BinaryOctahedral => Some(1),
        Family::BinaryIcosahedral => Some(2),
        Family::GeneralizedQuaternion(_) => Some(0),
        Family::Dicyclic(m) if m.is_power_of_two() => Some(0),
        Family::Dicyclic(m) if is_prime(*m) && *m > 2 => lambda(*m).ok(),
        _ => None,
    }
}

/// Rank of `K_{-1}(Z[G])`: the census when within bound, otherwise the
/// closed form.
pub fn carter_rank(g: &FiniteGroup, bound: usize) -> Result<u64> {
    if g.order() <= bound {
        return carter_rank_census(g, bound);
    }
    carter_closed_form(g).ok_or(Error::TooLarge {
        order: g.order(),
        bound,
    })
}

/// Number of `Z_2` summands in the torsion of `K_{-1}(Z[G])`.
pub fn k_minus_one_torsion(g: &FiniteGroup) -> Result<usize> {
    match g.family() {
        Family::Cyclic(_) | Family::BinaryTetrahedral => Ok(0),
        Family::BinaryOctahedral | Family::BinaryIcosahedral => Ok(1),
        Family::GeneralizedQuaternion(k) => Ok(usize::from(*k >= 4)),
        Family::Dicyclic(m) if m.is_power_of_two() => Ok(usize::from(*m >= 4)),
        Family::Dicyclic(m) if is_prime(*m) => Ok(usize::from(m % 4 == 1)),
        Family::Dicyclic(m) => Err(Error::NotCovered(format!(
            "torsion of K_-1 for Dic_{} (m = {m} is neither an odd prime nor a power of 2)",
            4 * m
        ))),
        Family::Custom(name) => Err(Error::Unsupported(format!("K_-1 torsion for {name}"))),
    }
}

pub fn k_minus_one(g: &FiniteGroup, bound: usize) -> Result<AbelianGroupExpr> {
    let s = k_minus_one_torsion(g)?;
    let r = carter_rank(g, bound)?;
    Ok(AbelianGroupExpr::free(r).with_torsion(2, s))
}

pub fn k0_tilde_lookup(g: &FiniteGroup) -> K0Value {
    let z2 = |k| K0Value::Known(AbelianGroupExpr::cyclic(2, k));
    match g.family() {
        Family::Cyclic(n) => {
            if (1..=11).contains(n) || [13, 14, 17, 19].contains(n) {
                K0Value::Known(AbelianGroupExpr::zero())
            } else {
                K0Value::Unknown
            }
        }
        Family::BinaryTetrahedral => z2(1),
        Family::BinaryOctahedral => z2(2),
        Family::BinaryIcosahedral => z2(3),
        Family::Custom(_) => K0Value::Unknown,
        f => match dicyclic_m(f) {
            Some(2 | 3 | 4 | 5 | 7 | 8 | 11) => z2(1),
            Some(9) => z2(2),
            Some(6 | 10) => z2(3),
            _ => K0Value::Unknown,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WedderburnComponent {
    Field(String),
    Matrix { size: u32, over: String },
    /// `H_d`, the quaternion skew field with centre `Q(ζ_d + ζ_d^{-1})`.
    QuaternionSkewField(u64),
    NamedAlgebra(String),
}

impl fmt::Display for WedderburnComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WedderburnComponent::Field(k) => write!(f, "{k}"),
            WedderburnComponent::Matrix { size, over } => write!(f, "M_{size}({over})"),
            WedderburnComponent::QuaternionSkewField(d) => write!(f, "H_{d}"),
            WedderburnComponent::NamedAlgebra(a) => write!(f, "{a}"),
        }
    }
}

impl Serialize for WedderburnComponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn real_cyclotomic(d: u64) -> String {
    format!("Q(ζ_{d}+ζ_{d}^-1)")
}

/// Simple components of `Q[G]`, one per irreducible rational representation.
pub fn wedderburn_shape(g: &FiniteGroup) -> Result<Vec<WedderburnComponent>> {
    use WedderburnComponent::*;
    let field = |s: &str| Field(s.to_string());
    let matrix = |n: u32, s: &str| Matrix {
        size: n,
        over: s.to_string(),
    };
    let shape = match g.family() {
        Family::Cyclic(n) => divisors(*n)
            .into_iter()
            .map(|d| match d {
                1 | 2 => field("Q"),
                _ => Field(format!("Q(ζ_{d})")),
            })
            .collect(),
        Family::BinaryTetrahedral => vec![
            field("Q"),
            field("Q(ζ_3)"),
            matrix(3, "Q"),
            QuaternionSkewField(4),
            NamedAlgebra("H(Q(ζ_3))".into()),
        ],
        Family::BinaryOctahedral => vec![
            field("Q"),
            field("Q"),
            matrix(2, "Q"),
            matrix(3, "Q"),
            matrix(3, "Q"),
            QuaternionSkewField(8),
            matrix(2, "H_hat"),
        ],
        Family::BinaryIcosahedral => vec![
            field("Q"),
            matrix(4, "Q"),
            QuaternionSkewField(5),
            matrix(2, "H_hat"),
            matrix(5, "Q"),
            matrix(3, "H(Q)"),
            matrix(3, "Q(√5)"),
        ],
        Family::Custom(name) => {
            return Err(Error::Unsupported(format!("Wedderburn shape of {name}")))
        }
        f => {
            let m = dicyclic_m(f).expect("dicyclic family");
            if m % 2 == 1 {
                let mut out = vec![field("Q"), field("Q")];
                out.extend(
                    divisors(m)
                        .into_iter()
                        .filter(|&d| d > 2)
                        .map(|d| matrix(2, &real_cyclotomic(d))),
                );
                out.push(field("Q(i)"));
                out.extend(
                    divisors(m)
                        .into_iter()
                        .filter(|&d| d > 1)
                        .map(|d| QuaternionSkewField(2 * d)),
                );
                out
            } else if m.is_power_of_two() {
                // Q[D] for the dihedral quotient of order 2m, then H_{2m}.
                let mut out = vec![field("Q"); 4];
                out.extend(
                    divisors(m)
                        .into_iter()
                        .filter(|&d| d > 2)
                        .map(|d| matrix(2, &real_cyclotomic(d))),
                );
                out.push(QuaternionSkewField(2 * m));
                out
            } else {
                return Err(Error::Unsupported(format!(
                    "Wedderburn shape of Dic_{} (m even, not a power of 2)",
                    4 * m
                )));
            }
        }
    };
    Ok(shape)
}

/// Values feeding one Bass–Heller–Swan step for `π × Z`.
#[derive(Clone, Debug, Default)]
pub struct BhsInputs {
    pub wh: Option<AbelianGroupExpr>,
    pub k0: Option<AbelianGroupExpr>,
    pub kminus1: Option<AbelianGroupExpr>,
    pub nk0: Option<AbelianGroupExpr>,
    pub nk1: Option<AbelianGroupExpr>,
}

/// `i = 1`: `Wh(π×Z) = Wh(π) ⊕ K̃_0(π) ⊕ 2·NK_1(π)`;
/// `i = 0`: `K̃_0(π×Z) = K̃_0(π) ⊕ K_{-1}(π) ⊕ 2·NK_0(π)`.
pub fn bhs_decompose(values: &BhsInputs, i: u8) -> Result<AbelianGroupExpr> {
    fn need<'a>(v: &'a Option<AbelianGroupExpr>, what: &str) -> Result<&'a AbelianGroupExpr> {
        v.as_ref().ok_or_else(|| Error::MissingInput(what.to_string()))
    }
    match i {
        1 => Ok(need(&values.wh, "Wh")?
            .direct_sum(need(&values.k0, "K0")?)
            .direct_sum(&need(&values.nk1, "NK_1")?.times(2))),
        0 => Ok(need(&values.k0, "K0")?
            .direct_sum(need(&values.kminus1, "K_-1")?)
            .direct_sum(&need(&values.nk0, "NK_0")?.times(2))),
        _ => Err(Error::InvalidParameter(format!("index must be 0 or 1, got {i}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_dicyclic;

    #[test]
    fn display_forms() {
        let e = AbelianGroupExpr::free(2).with_torsion(2, 1);
        assert_eq!(e.to_string(), "Z_2 ⊕ Z^2");
        assert_eq!(AbelianGroupExpr::zero().to_string(), "0");
        let nil = AbelianGroupExpr::summand(SummandName::Z2Countable, Copies::Finite(2));
        assert_eq!(nil.to_string(), "2(Z2)^∞");
    }

    #[test]
    fn countable_absorbs() {
        let a = AbelianGroupExpr::summand(SummandName::Z2Countable, Copies::Countable);
        let b = a.direct_sum(&AbelianGroupExpr::summand(SummandName::Z2Countable, Copies::Finite(3)));
        assert_eq!(a, b);
    }

    #[test]
    fn dic20_wedderburn() {
        let shape: Vec<String> = wedderburn_shape(&build_dicyclic(5).unwrap())
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(shape, ["Q", "Q", "M_2(Q(ζ_5+ζ_5^-1))", "Q(i)", "H_10"]);
    }
}
