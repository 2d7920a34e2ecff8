//! Lower K-theory reports: the assembly for `B4(S^2)` from its amalgam
//! decomposition, and per-group invariant reports.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fconj::r_f;
use crate::galois::FieldDescriptor;
use crate::groups::{
    build_binary_polyhedral, build_cyclic, build_dicyclic, build_generalized_quaternion, BinaryPolyhedral, Family,
    FiniteGroup,
};
use crate::lowerk::{
    carter_closed_form, k0_tilde_lookup, k_minus_one, wedderburn_shape, whitehead_closed_form, whitehead_rank,
    AbelianGroupExpr, Copies, K0Value, SummandName, WedderburnComponent,
};

pub const SCHEMA: &str = "lowk/1";

/// A reported value together with the rules that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cited<T> {
    pub value: T,
    pub provenance: Vec<String>,
}

impl<T> Cited<T> {
    fn new(value: T, provenance: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Cited {
            value,
            provenance: provenance.into_iter().map(Into::into).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RfValue {
    pub field: String,
    pub count: usize,
}

/// `Nil_i` written as a countable direct sum of copies of `summand`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NilDefinition {
    pub name: String,
    pub countable_sum_of: AbelianGroupExpr,
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KReport {
    pub schema: &'static str,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wh: Option<Cited<AbelianGroupExpr>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k0: Option<Cited<K0Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kminus1: Option<Cited<AbelianGroupExpr>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rf: Option<Cited<RfValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wedderburn: Option<Cited<Vec<WedderburnComponent>>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub nil: Vec<NilDefinition>,
}

impl KReport {
    fn empty(group: String, order: Option<usize>) -> Self {
        KReport {
            schema: SCHEMA,
            group,
            order,
            wh: None,
            k0: None,
            kminus1: None,
            rf: None,
            wedderburn: None,
            nil: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("group: {}\n", self.group);
        if let Some(o) = self.order {
            out += &format!("order: {o}\n");
        }
        if let Some(c) = &self.wh {
            out += &format!("Wh: {}\n", c.value);
        }
        if let Some(c) = &self.k0 {
            out += &format!("K0~: {}\n", c.value);
        }
        if let Some(c) = &self.kminus1 {
            out += &format!("K_-1: {}\n", c.value);
        }
        if let Some(c) = &self.rf {
            out += &format!("r_{}: {}\n", c.value.field, c.value.count);
        }
        if let Some(c) = &self.wedderburn {
            let parts: Vec<String> = c.value.iter().map(|w| w.to_string()).collect();
            out += &format!("Q[G]: {}\n", parts.join(" × "));
        }
        for nil in &self.nil {
            out += &format!("{} = ⊕_∞[{}]\n", nil.name, nil.countable_sum_of);
        }
        out
    }
}

/// Nil groups of `Z[Q8]` twisted by an automorphism of the given order in
/// `Out(Q8)`.
pub fn nil_groups_q8(i: u8, twist_order: u8) -> Result<AbelianGroupExpr> {
    if i > 1 {
        return Err(Error::InvalidParameter(format!("Nil index must be 0 or 1, got {i}")));
    }
    match twist_order {
        1 | 3 => Ok(AbelianGroupExpr::summand(SummandName::Z2Countable, Copies::Finite(1))),
        2 => Ok(AbelianGroupExpr::summand(SummandName::WExponent2Or4, Copies::Finite(1))),
        t => Err(Error::InvalidParameter(format!(
            "twist order must be 1, 2 or 3, got {t}"
        ))),
    }
}

/// What is known about an induced map `K(C) → K(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapFact {
    Zero,
    Isomorphism,
}

/// `source → ⊕ targets`, each component described by a [`MapFact`].
#[derive(Clone, Debug)]
pub struct InducedMap<'a> {
    pub source: &'a AbelianGroupExpr,
    pub targets: Vec<(&'a AbelianGroupExpr, MapFact)>,
}

impl InducedMap<'_> {
    /// With `k ≥ 1` isomorphic components the image is a diagonal copy of
    /// the source, and one of those components is absorbed.
    pub fn cokernel(&self) -> AbelianGroupExpr {
        let mut out = AbelianGroupExpr::zero();
        let mut absorbed = self.source.is_zero();
        for (t, fact) in &self.targets {
            if *fact == MapFact::Isomorphism && !absorbed {
                absorbed = true;
                continue;
            }
            out = out.direct_sum(t);
        }
        out
    }

    pub fn kernel(&self) -> AbelianGroupExpr {
        if self.targets.iter().any(|(_, f)| *f == MapFact::Isomorphism) {
            AbelianGroupExpr::zero()
        } else {
            self.source.clone()
        }
    }
}

/// Values of `Wh`, `K̃_0` and `K_{-1}` for a finite group.
struct LowerK {
    wh: AbelianGroupExpr,
    k0: AbelianGroupExpr,
    kminus1: AbelianGroupExpr,
}

fn lower_k_of(g: &FiniteGroup, bound: usize) -> Result<LowerK> {
    let k0 = match k0_tilde_lookup(g) {
        K0Value::Known(e) => e,
        K0Value::Unknown => return Err(Error::NotCovered(format!("K0~ of {}", g.family()))),
    };
    Ok(LowerK {
        wh: AbelianGroupExpr::free(whitehead_rank(g, bound)?),
        k0,
        kminus1: k_minus_one(g, bound)?,
    })
}

/// `Wh`, `K̃_0` and `K_{-1}` of `Z[B4(S^2)]` from `B4(S^2) ≅ Q16 ∗_{Q8} T*`.
pub fn b4_lower_k_report() -> Result<KReport> {
    let bound = crate::census::DEFAULT_BRUTE_FORCE_BOUND;
    let q8 = lower_k_of(&build_dicyclic(2)?, bound)?;
    let q16 = lower_k_of(&build_dicyclic(4)?, bound)?;
    let tstar = lower_k_of(&build_binary_polyhedral(BinaryPolyhedral::T)?, bound)?;

    // K0~(Q8) → K0~(Q16) is zero, K0~(Q8) → K0~(T*) is an isomorphism.
    // No other map facts are needed: Wh(Q8) and K_-1(Q8) vanish.
    let map = |pick: fn(&LowerK) -> &AbelianGroupExpr, facts: [MapFact; 2]| {
        let source = pick(&q8).clone();
        let targets = [pick(&q16).clone(), pick(&tstar).clone()];
        let m = InducedMap {
            source: &source,
            targets: vec![(&targets[0], facts[0]), (&targets[1], facts[1])],
        };
        (m.cokernel(), m.kernel())
    };
    let zero = [MapFact::Zero, MapFact::Zero];
    let k0_facts = [MapFact::Zero, MapFact::Isomorphism];
    let (wh_coker, _) = map(|v| &v.wh, zero);
    let (k0_coker, k0_ker) = map(|v| &v.k0, k0_facts);
    let (km_coker, km_ker) = map(|v| &v.kminus1, zero);

    let nil = |i| AbelianGroupExpr::summand(SummandName::Nil(i), Copies::Finite(1));
    let finite_values = [
        "Wh(Q8) = 0, Wh(Q16) = Z, Wh(T*) = 0",
        "K0~(Q8) = K0~(Q16) = K0~(T*) = Z_2",
        "K_-1(Q8) = 0, K_-1(Q16) = Z_2, K_-1(T*) = Z",
    ];
    let mut report = KReport::empty("B4(S^2) ≅ Q16 ∗_{Q8} T*".into(), None);
    report.wh = Some(Cited::new(
        wh_coker.direct_sum(&k0_ker).direct_sum(&nil(1)),
        [
            "amalgam sequence: Wh = coker(Wh(Q8) → Wh(Q16) ⊕ Wh(T*)) ⊕ ker(K0~(Q8) → K0~(Q16) ⊕ K0~(T*)) ⊕ Nil_1",
            finite_values[0],
            "K0~(Q8) → K0~(T*) is an isomorphism, so the K0~ kernel vanishes",
        ],
    ));
    report.k0 = Some(Cited::new(
        K0Value::Known(k0_coker.direct_sum(&km_ker).direct_sum(&nil(0))),
        [
            "amalgam sequence: K0~ = coker(K0~(Q8) → K0~(Q16) ⊕ K0~(T*)) ⊕ ker(K_-1(Q8) → K_-1(Q16) ⊕ K_-1(T*)) ⊕ Nil_0",
            finite_values[1],
            "K0~(Q8) → K0~(Q16) is zero and K0~(Q8) → K0~(T*) is an isomorphism",
            finite_values[2],
        ],
    ));
    report.kminus1 = Some(Cited::new(
        km_coker,
        [
            "amalgam sequence: K_-1 = coker(K_-1(Q8) → K_-1(Q16) ⊕ K_-1(T*))",
            finite_values[2],
        ],
    ));

    // Two maximal classes Q8 ⋊ Z with trivial or order-3 action contribute
    // (Z2)^∞ each, two with the order-2 action contribute W each; every
    // class occurs countably often.
    let mut bracket = AbelianGroupExpr::zero();
    for twist in [1, 3, 2, 2] {
        bracket = bracket.direct_sum(&nil_groups_q8(1, twist)?);
    }
    for i in [1u8, 0] {
        report.nil.push(NilDefinition {
            name: format!("Nil_{i}"),
            countable_sum_of: bracket.clone(),
            provenance: vec![
                "one summand per conjugacy class of maximal infinite virtually cyclic subgroups, infinitely many classes".into(),
                "NK_i(Z[Q8]) = (Z2)^∞ for the trivial and order-3 twists".into(),
                "twisted Nil of Q8 for the order-2 twist is W, of exponent 2 or 4".into(),
            ],
        });
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum GroupFamily {
    Cyclic,
    Dicyclic,
    Quaternion,
    Tstar,
    Ostar,
    Istar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Invariant {
    Wh,
    K0,
    Kminus1,
    Rf,
    Wedderburn,
}

/// Builds the group named by `family` with parameter `m` (cyclic, dicyclic)
/// or `k` (generalized quaternion of order `2^k`).
pub fn build_family(family: GroupFamily, m: Option<u64>, k: Option<u32>) -> Result<FiniteGroup> {
    let need_m = || m.ok_or_else(|| Error::InvalidParameter(format!("{family:?} needs --m")));
    let no_k = |g: Result<FiniteGroup>| match k {
        Some(_) => Err(Error::InvalidParameter(format!("{family:?} does not take --k"))),
        None => g,
    };
    match family {
        GroupFamily::Cyclic => no_k(build_cyclic(need_m()?)),
        GroupFamily::Dicyclic => no_k(build_dicyclic(need_m()?)),
        GroupFamily::Quaternion => {
            if m.is_some() {
                return Err(Error::InvalidParameter("quaternion takes --k, not --m".into()));
            }
            let k = k.ok_or_else(|| Error::InvalidParameter("quaternion needs --k".into()))?;
            build_generalized_quaternion(k)
        }
        GroupFamily::Tstar | GroupFamily::Ostar | GroupFamily::Istar => {
            if m.is_some() || k.is_some() {
                return Err(Error::InvalidParameter(format!("{family:?} takes no parameters")));
            }
            build_binary_polyhedral(match family {
                GroupFamily::Tstar => BinaryPolyhedral::T,
                GroupFamily::Ostar => BinaryPolyhedral::O,
                _ => BinaryPolyhedral::I,
            })
        }
    }
}

fn k0_rule(g: &FiniteGroup, v: &K0Value) -> &'static str {
    match (g.family(), v) {
        (Family::Cyclic(_), K0Value::Known(_)) => "cyclic K0~ vanishes for n ≤ 11 and n ∈ {13, 14, 17, 19}",
        (_, K0Value::Known(_)) => "K0~ lookup table for dicyclic m ∈ {2..11} and binary polyhedral groups",
        (_, K0Value::Unknown) => "outside the K0~ lookup table",
    }
}

fn kminus1_rules(g: &FiniteGroup, bound: usize) -> Vec<&'static str> {
    let rank = if g.order() <= bound {
        "Carter rank 1 − r_Q + Σ_p (r_Qp − r_Fp) from F-conjugacy counts"
    } else if carter_closed_form(g).is_some() {
        "Carter rank in closed form"
    } else {
        "Carter rank"
    };
    let torsion = match g.family() {
        Family::Cyclic(_) => "torsion trivial: Q[Z_m] splits",
        Family::Dicyclic(m) if !m.is_power_of_two() => "torsion Z_2 exactly when m ≡ 1 mod 4 (m an odd prime)",
        Family::Dicyclic(_) | Family::GeneralizedQuaternion(_) => "torsion Z_2 for quaternion 2-groups of order ≥ 16",
        _ => "torsion by hyperelementary induction over binary polyhedral subgroups",
    };
    vec![rank, torsion]
}

/// Invariants of one finite group. `Unknown` values are reported as such.
pub fn group_report(
    g: &FiniteGroup,
    invariants: &[Invariant],
    field: FieldDescriptor,
    bound: usize,
) -> Result<KReport> {
    let mut report = KReport::empty(g.family().to_string(), Some(g.order()));
    for inv in invariants {
        match inv {
            Invariant::Wh => {
                let rank = whitehead_rank(g, bound)?;
                let mut rules = vec!["SK1 trivial, so Wh is free of rank r_R − r_Q"];
                if g.order() <= bound {
                    rules.push("rank Σ_d (r1(d) − r2(d)) from the class census");
                }
                if whitehead_closed_form(g).is_some() {
                    rules.push("closed form for the family, cross-checked against the census");
                }
                report.wh = Some(Cited::new(AbelianGroupExpr::free(rank), rules));
            }
            Invariant::K0 => {
                let v = k0_tilde_lookup(g);
                report.k0 = Some(Cited::new(v.clone(), [k0_rule(g, &v)]));
            }
            Invariant::Kminus1 => {
                report.kminus1 = Some(Cited::new(k_minus_one(g, bound)?, kminus1_rules(g, bound)));
            }
            Invariant::Rf => {
                let count = r_f(g, field, bound)?;
                report.rf = Some(Cited::new(
                    RfValue {
                        field: field.to_string(),
                        count,
                    },
                    ["number of F-conjugacy classes (Witt–Berman)"],
                ));
            }
            Invariant::Wedderburn => {
                report.wedderburn = Some(Cited::new(
                    wedderburn_shape(g)?,
                    ["one simple component per irreducible rational representation"],
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_rules() {
        let z2 = AbelianGroupExpr::cyclic(2, 1);
        let m = InducedMap {
            source: &z2,
            targets: vec![(&z2, MapFact::Zero), (&z2, MapFact::Isomorphism)],
        };
        assert_eq!(m.cokernel(), z2);
        assert!(m.kernel().is_zero());
    }

    #[test]
    fn nil_twists() {
        assert_eq!(nil_groups_q8(0, 2).unwrap().to_string(), "W_exponent_2_or_4");
        assert!(nil_groups_q8(2, 1).is_err());
    }
}
