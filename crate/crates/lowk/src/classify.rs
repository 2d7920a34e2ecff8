//! Finite and virtually cyclic subgroups of sphere braid groups, encoded as
//! predicate tables over `n`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lowerk::divisors;

/// A finite building block: `Z_m` or `Dic_{4m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "family", content = "m", rename_all = "snake_case")]
pub enum FinitePart {
    Cyclic(u64),
    Dicyclic(u64),
}

impl fmt::Display for FinitePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinitePart::Cyclic(m) => write!(f, "Z_{m}"),
            FinitePart::Dicyclic(m) if m.is_power_of_two() => write!(f, "Q_{}", 4 * m),
            FinitePart::Dicyclic(m) => write!(f, "Dic_{}", 4 * m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubgroupKind {
    Cyclic { m: u64 },
    Dicyclic { m: u64 },
    TStar,
    OStar,
    IStar,
    /// `F ⋊ Z` where the generator of `Z` acts by an automorphism whose
    /// class in `Out(F)` has the given order.
    TypeI { finite_part: FinitePart, action_order: u64 },
    /// `G1 ∗_F G2` with `F` of index 2 in both factors.
    TypeII { factor1: FinitePart, factor2: FinitePart, core: FinitePart },
}

impl fmt::Display for SubgroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupKind::Cyclic { m } => write!(f, "{}", FinitePart::Cyclic(*m)),
            SubgroupKind::Dicyclic { m } => write!(f, "{}", FinitePart::Dicyclic(*m)),
            SubgroupKind::TStar => write!(f, "T*"),
            SubgroupKind::OStar => write!(f, "O*"),
            SubgroupKind::IStar => write!(f, "I*"),
            SubgroupKind::TypeI {
                finite_part: FinitePart::Cyclic(1),
                ..
            } => write!(f, "Z"),
            SubgroupKind::TypeI {
                finite_part,
                action_order: 1,
            } => write!(f, "{finite_part} × Z"),
            SubgroupKind::TypeI {
                finite_part: p @ FinitePart::Cyclic(_),
                ..
            } => write!(f, "{p} ⋊ Z"),
            SubgroupKind::TypeI {
                finite_part,
                action_order,
            } => write!(f, "{finite_part} ⋊_{action_order} Z"),
            SubgroupKind::TypeII {
                factor1,
                factor2,
                core,
            } => write!(f, "{factor1} ∗_{{{core}}} {factor2}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupDescriptor {
    #[serde(flatten)]
    pub kind: SubgroupKind,
    pub name: String,
    /// Whether the class is maximal among (virtually cyclic or finite)
    /// subgroups, when that is part of the statement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal: Option<bool>,
    /// Number of abstract isomorphism classes sharing this description.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphism_classes: Option<u32>,
    /// Infinitely many conjugacy classes of subgroups of this type.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infinitely_many_conjugacy_classes: Option<bool>,
    /// Realized both by maximal and by non-maximal subgroups.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_and_non_maximal_realizations: Option<bool>,
    pub rule: String,
}

impl SubgroupDescriptor {
    fn new(kind: SubgroupKind, rule: impl Into<String>) -> Self {
        SubgroupDescriptor {
            name: kind.to_string(),
            kind,
            maximal: None,
            isomorphism_classes: None,
            infinitely_many_conjugacy_classes: None,
            maximal_and_non_maximal_realizations: None,
            rule: rule.into(),
        }
    }

    fn maximal(mut self, yes: bool) -> Self {
        self.maximal = Some(yes);
        self
    }

    /// Order of a finite subgroup, `None` for infinite ones.
    pub fn order(&self) -> Option<u64> {
        match self.kind {
            SubgroupKind::Cyclic { m } => Some(m),
            SubgroupKind::Dicyclic { m } => Some(4 * m),
            SubgroupKind::TStar => Some(24),
            SubgroupKind::OStar => Some(48),
            SubgroupKind::IStar => Some(120),
            _ => None,
        }
    }
}

fn sort_dedup(mut v: Vec<SubgroupDescriptor>) -> Vec<SubgroupDescriptor> {
    v.sort_by(|a, b| a.kind.cmp(&b.kind));
    v.dedup_by(|a, b| a.kind == b.kind);
    v
}

/// Divisors of `n` other than `n` itself.
fn strict_divisors(n: u64) -> Vec<u64> {
    divisors(n).into_iter().filter(|&d| d != n).collect()
}

/// Maximal finite subgroups of `B_n(S^2)` up to isomorphism.
pub fn maximal_finite_subgroups(n: u64) -> Result<Vec<SubgroupDescriptor>> {
    use SubgroupKind::*;
    let fixed = |kind, rule: &str| Ok(vec![SubgroupDescriptor::new(kind, rule).maximal(true)]);
    match n {
        0 => return Err(Error::InvalidParameter("n must be at least 1".into())),
        1 => return fixed(Cyclic { m: 1 }, "B_1(S^2) is trivial"),
        2 => return fixed(Cyclic { m: 2 }, "B_2(S^2) ≅ Z_2"),
        3 => return fixed(Dicyclic { m: 3 }, "B_3(S^2) ≅ Dic_12"),
        _ => {}
    }
    let mut out = Vec::new();
    if n >= 5 {
        out.push(SubgroupDescriptor::new(Cyclic { m: 2 * (n - 1) }, "Z_{2(n-1)} for n ≥ 5"));
    }
    out.push(SubgroupDescriptor::new(Dicyclic { m: n }, "Dic_{4n}"));
    if n == 5 || n >= 7 {
        out.push(SubgroupDescriptor::new(Dicyclic { m: n - 2 }, "Dic_{4(n-2)} for n = 5 or n ≥ 7"));
    }
    if n % 6 == 4 {
        out.push(SubgroupDescriptor::new(TStar, "T* for n ≡ 4 mod 6"));
    }
    if n % 6 == 0 || n % 6 == 2 {
        out.push(SubgroupDescriptor::new(OStar, "O* for n ≡ 0, 2 mod 6"));
    }
    if [0, 2, 12, 20].contains(&(n % 30)) {
        out.push(SubgroupDescriptor::new(IStar, "I* for n ≡ 0, 2, 12, 20 mod 30"));
    }
    Ok(sort_dedup(out.into_iter().map(|d| d.maximal(true)).collect()))
}

/// Virtually cyclic subgroups of `B_n(S^2)` up to isomorphism, `n ≥ 3` odd.
/// Infinite classes are listed only for `n ≥ 5`.
pub fn virtually_cyclic_classes_odd(n: u64) -> Result<Vec<SubgroupDescriptor>> {
    use SubgroupKind::*;
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "virtually cyclic classification needs odd n ≥ 3, got {n}"
        )));
    }
    let mut out = Vec::new();
    for base in [n, n - 2] {
        for m in divisors(base).into_iter().filter(|&m| m >= 3) {
            out.push(SubgroupDescriptor::new(Dicyclic { m }, "Dic_{4m}, m ≥ 3 dividing n or n-2"));
        }
    }
    for base in [2 * n, 2 * (n - 1), 2 * (n - 2)] {
        for m in divisors(base) {
            out.push(SubgroupDescriptor::new(Cyclic { m }, "Z_m, m dividing 2n, 2(n-1) or 2(n-2)"));
        }
    }
    if n >= 5 {
        for i in [0, 2] {
            for m in strict_divisors(2 * (n - i)).into_iter().filter(|&m| m != n - i) {
                // -Id equals Id on Z_1 and Z_2.
                let orders: &[u64] = if m <= 2 { &[1] } else { &[1, 2] };
                for &action_order in orders {
                    out.push(SubgroupDescriptor::new(
                        TypeI {
                            finite_part: FinitePart::Cyclic(m),
                            action_order,
                        },
                        "Z_m ⋊ Z with action ±Id, m a strict divisor of 2(n-i), i ∈ {0,2}, m ≠ n-i",
                    ));
                }
            }
        }
        for m in strict_divisors(2 * (n - 1)) {
            out.push(SubgroupDescriptor::new(
                TypeI {
                    finite_part: FinitePart::Cyclic(m),
                    action_order: 1,
                },
                "Z_m × Z, m a strict divisor of 2(n-1)",
            ));
        }
        for i in [0, 2] {
            for m in strict_divisors(n - i).into_iter().filter(|&m| m >= 3) {
                out.push(SubgroupDescriptor::new(
                    TypeI {
                        finite_part: FinitePart::Dicyclic(m),
                        action_order: 1,
                    },
                    "Dic_{4m} × Z, m ≥ 3 a strict divisor of n-i, i ∈ {0,2}",
                ));
            }
        }
        for q in divisors((n - 1) / 2) {
            out.push(SubgroupDescriptor::new(
                TypeII {
                    factor1: FinitePart::Cyclic(4 * q),
                    factor2: FinitePart::Cyclic(4 * q),
                    core: FinitePart::Cyclic(2 * q),
                },
                "Z_{4q} ∗_{Z_{2q}} Z_{4q}, q dividing (n-1)/2",
            ));
        }
        for i in [0, 2] {
            for q in strict_divisors(n - i).into_iter().filter(|&q| q >= 2) {
                out.push(SubgroupDescriptor::new(
                    TypeII {
                        factor1: FinitePart::Dicyclic(q),
                        factor2: FinitePart::Dicyclic(q),
                        core: FinitePart::Cyclic(2 * q),
                    },
                    "Dic_{4q} ∗_{Z_{2q}} Dic_{4q}, q ≥ 2 a strict divisor of n-i, i ∈ {0,2}",
                ));
            }
        }
    }
    Ok(sort_dedup(out))
}

/// Re-checks a descriptor from [`virtually_cyclic_classes_odd`] against the
/// divisibility conditions for `n`.
pub fn satisfies_odd_constraints(n: u64, d: &SubgroupDescriptor) -> bool {
    use SubgroupKind::*;
    let divides = |a: u64, b: u64| a != 0 && b % a == 0;
    let strict = |a: u64, b: u64| divides(a, b) && a != b;
    match d.kind {
        Dicyclic { m } => m >= 3 && (divides(m, n) || divides(m, n - 2)),
        Cyclic { m } => divides(m, 2 * n) || divides(m, 2 * (n - 1)) || divides(m, 2 * (n - 2)),
        TypeI {
            finite_part: FinitePart::Cyclic(m),
            action_order,
        } => {
            let ia = [0, 2].iter().any(|&i| strict(m, 2 * (n - i)) && m != n - i);
            let ib = strict(m, 2 * (n - 1));
            n >= 5 && match action_order {
                1 => ia || ib,
                2 => ia && m > 2,
                _ => false,
            }
        }
        TypeI {
            finite_part: FinitePart::Dicyclic(m),
            action_order: 1,
        } => n >= 5 && m >= 3 && (strict(m, n) || strict(m, n - 2)),
        TypeII {
            factor1: FinitePart::Cyclic(f),
            factor2: FinitePart::Cyclic(g),
            core: FinitePart::Cyclic(c),
        } => n >= 5 && f == g && f % 4 == 0 && c * 2 == f && divides(f / 4, (n - 1) / 2),
        TypeII {
            factor1: FinitePart::Dicyclic(q),
            factor2: FinitePart::Dicyclic(r),
            core: FinitePart::Cyclic(c),
        } => n >= 5 && q == r && q >= 2 && c == 2 * q && (strict(q, n) || strict(q, n - 2)),
        _ => false,
    }
}

/// Infinite virtually cyclic subgroups of `B_4(S^2)` up to isomorphism.
pub fn vc_classes_b4() -> Vec<SubgroupDescriptor> {
    use FinitePart::*;
    use SubgroupKind::*;
    let type_i = |f, a| TypeI {
        finite_part: f,
        action_order: a,
    };
    let type_ii = |f1, f2, c| TypeII {
        factor1: f1,
        factor2: f2,
        core: c,
    };
    let mut out = Vec::new();
    for k in [1, 2, 4] {
        out.push(SubgroupDescriptor::new(type_i(Cyclic(k), 1), "Type I: Z_k × Z, k ∈ {1,2,4}"));
    }
    out.push(SubgroupDescriptor::new(type_i(Cyclic(4), 2), "Type I: Z_4 ⋊ Z, nontrivial action"));
    for j in 1..=3 {
        out.push(SubgroupDescriptor::new(
            type_i(Dicyclic(2), j),
            "Type I: Q_8 ⋊ Z for each of the three actions",
        ));
    }
    let rule = "Type II";
    out.push(SubgroupDescriptor::new(type_ii(Cyclic(4), Cyclic(4), Cyclic(2)), rule));
    out.push(SubgroupDescriptor::new(type_ii(Cyclic(8), Cyclic(8), Cyclic(4)), rule));
    out.push(SubgroupDescriptor::new(type_ii(Cyclic(8), Dicyclic(2), Cyclic(4)), rule));
    out.push(SubgroupDescriptor::new(type_ii(Dicyclic(2), Dicyclic(2), Cyclic(4)), rule));
    let mut q16 = SubgroupDescriptor::new(type_ii(Dicyclic(4), Dicyclic(4), Dicyclic(2)), rule);
    q16.isomorphism_classes = Some(2);
    out.push(q16);
    for d in &mut out {
        if d.isomorphism_classes.is_none() {
            d.isomorphism_classes = Some(1);
        }
    }
    sort_dedup(out)
}

/// Maximal virtually cyclic subgroups of `B_4(S^2)`: `T*` among the finite
/// ones, and the infinite classes that occur as maximal subgroups. `Q_16` is
/// listed as non-maximal.
pub fn maximal_vc_classes_b4() -> Vec<SubgroupDescriptor> {
    use FinitePart::*;
    use SubgroupKind::*;
    let mut out = vec![
        SubgroupDescriptor::new(TStar, "every subgroup isomorphic to T* is maximal").maximal(true),
        SubgroupDescriptor::new(
            SubgroupKind::Dicyclic { m: 4 },
            "Q_16 lies in a copy of Q_16 ∗_{Q_8} Q_16, so it is not maximal",
        )
        .maximal(false),
    ];
    for j in 1..=3 {
        let mut d = SubgroupDescriptor::new(
            TypeI {
                finite_part: Dicyclic(2),
                action_order: j,
            },
            "maximal infinite: Q_8 ⋊ Z for one of the three actions",
        )
        .maximal(true);
        d.infinitely_many_conjugacy_classes = Some(true);
        d.maximal_and_non_maximal_realizations = Some(true);
        out.push(d);
    }
    let mut d = SubgroupDescriptor::new(
        TypeII {
            factor1: Dicyclic(4),
            factor2: Dicyclic(4),
            core: Dicyclic(2),
        },
        "maximal infinite: Q_16 ∗_{Q_8} Q_16",
    )
    .maximal(true);
    d.isomorphism_classes = Some(2);
    d.infinitely_many_conjugacy_classes = Some(true);
    d.maximal_and_non_maximal_realizations = Some(true);
    out.push(d);
    sort_dedup(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b4_maximal_finite() {
        let names: Vec<String> = maximal_finite_subgroups(4).unwrap().into_iter().map(|d| d.name).collect();
        assert_eq!(names, ["Q_16", "T*"]);
    }

    #[test]
    fn six_strands() {
        let names: Vec<String> = maximal_finite_subgroups(6).unwrap().into_iter().map(|d| d.name).collect();
        assert_eq!(names, ["Z_10", "Dic_24", "O*"]);
    }

    #[test]
    fn even_rejected() {
        assert!(virtually_cyclic_classes_odd(6).is_err());
    }
}
