//! Exact models of finite groups.
//!
//! Cyclic and dicyclic groups multiply normal forms directly. Every other
//! family is built by closure from explicit generators and stored as a
//! multiplication table over canonically sorted elements.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Element ids are canonical: the identity is always 0.
pub type Elem = usize;

/// Which family a group was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Cyclic(u64),
    Dicyclic(u64),
    GeneralizedQuaternion(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    Custom(String),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(m) => write!(f, "Z_{m}"),
            Family::Dicyclic(m) => write!(f, "Dic_{}", 4 * m),
            Family::GeneralizedQuaternion(k) => write!(f, "Q_{}", 1u64 << k),
            Family::BinaryTetrahedral => write!(f, "T*"),
            Family::BinaryOctahedral => write!(f, "O*"),
            Family::BinaryIcosahedral => write!(f, "I*"),
            Family::Custom(name) => write!(f, "{name}"),
        }
    }
}

#[derive(Debug)]
struct Table {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    order: Vec<u32>,
    labels: Vec<String>,
}

#[derive(Clone, Debug)]
enum Repr {
    Cyclic { m: u64 },
    /// Element id `a + 2m·b` stands for `x^a y^b`.
    Dicyclic { m: u64 },
    Table(Arc<Table>),
}

/// A finite group with canonical element ids `0..order()`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    family: Family,
    repr: Repr,
    generators: Vec<Elem>,
    exponent: u64,
}

impl FiniteGroup {
    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn order(&self) -> usize {
        match &self.repr {
            Repr::Cyclic { m } => *m as usize,
            Repr::Dicyclic { m } => 4 * *m as usize,
            Repr::Table(t) => t.n,
        }
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn identity(&self) -> Elem {
        0
    }

    /// A generating set; conjugacy orbits are expanded under it.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Cyclic { m } => ((a as u64 + b as u64) % m) as Elem,
            Repr::Dicyclic { m } => {
                let (a0, a1) = dic_split(*m, a);
                let (b0, b1) = dic_split(*m, b);
                let n = 2 * m;
                let c = if a1 == 1 { (n - b0) % n } else { b0 };
                let mut x = (a0 + c) % n;
                let mut y = a1 + b1;
                if y == 2 {
                    x = (x + m) % n;
                    y = 0;
                }
                (x + n * y) as Elem
            }
            Repr::Table(t) => t.mul[a * t.n + b] as Elem,
        }
    }

    pub fn inv(&self, a: Elem) -> Elem {
        match &self.repr {
            Repr::Cyclic { m } => ((m - a as u64 % m) % m) as Elem,
            Repr::Dicyclic { m } => {
                let (a0, a1) = dic_split(*m, a);
                let n = 2 * m;
                if a1 == 0 {
                    ((n - a0) % n) as Elem
                } else {
                    // (x^a y)^{-1} = y^{-1} x^{-a} = x^{a+m} y
                    ((a0 + m) % n + n) as Elem
                }
            }
            Repr::Table(t) => t.inv[a] as Elem,
        }
    }

    pub fn order_of(&self, a: Elem) -> u64 {
        match &self.repr {
            Repr::Cyclic { m } => m / (a as u64).gcd(m),
            Repr::Dicyclic { m } => {
                let (a0, a1) = dic_split(*m, a);
                if a1 == 1 {
                    4
                } else {
                    let n = 2 * m;
                    n / a0.gcd(&n)
                }
            }
            Repr::Table(t) => t.order[a] as u64,
        }
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let ord = self.order_of(a) as i64;
        let mut e = k.rem_euclid(ord) as u64;
        let mut base = a;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn label(&self, a: Elem) -> String {
        match &self.repr {
            Repr::Cyclic { .. } => power_label("g", a as u64),
            Repr::Dicyclic { m } => {
                let (a0, a1) = dic_split(*m, a);
                match (a0, a1) {
                    (0, 0) => "1".to_string(),
                    (_, 0) => power_label("x", a0),
                    (0, _) => "y".to_string(),
                    _ => format!("{} y", power_label("x", a0)),
                }
            }
            Repr::Table(t) => t.labels[a].clone(),
        }
    }

    /// Element counts keyed by element order.
    pub fn order_census(&self) -> BTreeMap<u64, usize> {
        let mut census = BTreeMap::new();
        for g in self.elements() {
            *census.entry(self.order_of(g)).or_insert(0) += 1;
        }
        census
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with every generator, hence with everything.
    pub fn center(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&g| {
                self.generators
                    .iter()
                    .all(|&s| self.mul(g, s) == self.mul(s, g))
            })
            .collect()
    }

    /// For dicyclic groups, the designated generators `x` and `y`.
    pub fn dicyclic_xy(&self) -> Option<(Elem, Elem)> {
        match &self.repr {
            Repr::Dicyclic { m } => Some((1, 2 * *m as usize)),
            _ => None,
        }
    }

    /// Closure of `gens` under multiplication, sorted.
    pub fn subgroup_generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![self.identity()];
        seen[self.identity()] = true;
        let mut i = 0;
        while i < out.len() {
            let e = out[i];
            for &g in gens {
                let p = self.mul(e, g);
                if !seen[p] {
                    seen[p] = true;
                    out.push(p);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Builds a table group as the closure of `gens`. Elements are sorted by
    /// their `Ord` with the identity first, which fixes the ids.
    pub fn from_closure<T, M, L>(
        family: Family,
        gens: &[T],
        identity: T,
        mul: M,
        label: L,
        limit: usize,
    ) -> Result<FiniteGroup>
    where
        T: Clone + Eq + Hash + Ord,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity.clone(), 0);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = mul(&elems[i], g);
                if !index.contains_key(&p) {
                    if elems.len() >= limit {
                        return Err(Error::Construction(format!(
                            "closure exceeds {limit} elements"
                        )));
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let mut rest: Vec<T> = elems.into_iter().filter(|e| *e != identity).collect();
        rest.sort();
        let mut sorted = vec![identity.clone()];
        sorted.extend(rest);
        let index: HashMap<T, usize> = sorted
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let n = sorted.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in sorted.iter().enumerate() {
            for (j, b) in sorted.iter().enumerate() {
                table[i * n + j] = index[&mul(a, b)] as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| table[i * n + j] == 0)
                .ok_or_else(|| Error::Construction("missing inverse".into()))?;
            inv[i] = j as u32;
        }
        let mut order = vec![0u32; n];
        for (i, slot) in order.iter_mut().enumerate() {
            let mut k = 1u32;
            let mut p = i;
            while p != 0 {
                p = table[p * n + i] as usize;
                k += 1;
            }
            *slot = k;
        }
        let exponent = order.iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64)));
        let labels = sorted.iter().map(&label).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            family,
            repr: Repr::Table(Arc::new(Table {
                n,
                mul: table,
                inv,
                order,
                labels,
            })),
            generators,
            exponent,
        })
    }
}

fn dic_split(m: u64, a: Elem) -> (u64, u64) {
    let n = 2 * m;
    (a as u64 % n, a as u64 / n)
}

fn power_label(base: &str, k: u64) -> String {
    match k {
        0 => "1".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

pub fn build_cyclic(m: u64) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::InvalidParameter("cyclic order must be at least 1".into()));
    }
    Ok(FiniteGroup {
        family: Family::Cyclic(m),
        repr: Repr::Cyclic { m },
        generators: if m == 1 { vec![] } else { vec![1] },
        exponent: m,
    })
}

/// `Dic_{4m} = <x, y | x^m = y^2, y x y^-1 = x^-1>` on normal forms `x^a y^b`.
pub fn build_dicyclic(m: u64) -> Result<FiniteGroup> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "dicyclic parameter m must be at least 2, got {m}"
        )));
    }
    Ok(FiniteGroup {
        family: Family::Dicyclic(m),
        repr: Repr::Dicyclic { m },
        generators: vec![1, 2 * m as usize],
        exponent: (2 * m).lcm(&4),
    })
}

/// Monomial 2×2 matrix over the cyclotomic roots `ζ^e`, `ζ` of order `2^{k-1}`:
/// `(false, e0, e1)` is `diag(ζ^e0, ζ^e1)`, `(true, e0, e1)` is `[[0, ζ^e0], [ζ^e1, 0]]`.
type Monomial = (bool, u64, u64);

/// `Q_{2^k}` as the closure of `diag(ζ, ζ^-1)` and `[[0, -1], [1, 0]]`.
pub fn build_generalized_quaternion(k: u32) -> Result<FiniteGroup> {
    if !(3..=16).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "generalized quaternion exponent k must lie in 3..=16, got {k}"
        )));
    }
    let n = 1u64 << (k - 1);
    let half = n / 2;
    let mul = move |a: &Monomial, b: &Monomial| -> Monomial {
        let (s, a0, a1) = *a;
        let (t, b0, b1) = *b;
        match (s, t) {
            (false, false) => (false, (a0 + b0) % n, (a1 + b1) % n),
            (false, true) => (true, (a0 + b0) % n, (a1 + b1) % n),
            (true, false) => (true, (a0 + b1) % n, (a1 + b0) % n),
            (true, true) => (false, (a0 + b1) % n, (a1 + b0) % n),
        }
    };
    let x: Monomial = (false, 1, n - 1);
    let y: Monomial = (true, half, 0);
    let label = |e: &Monomial| {
        if e.0 {
            format!("[[0,z^{}],[z^{},0]]", e.1, e.2)
        } else {
            format!("diag(z^{},z^{})", e.1, e.2)
        }
    };
    let g = FiniteGroup::from_closure(
        Family::GeneralizedQuaternion(k),
        &[x, y],
        (false, 0, 0),
        mul,
        label,
        1 << k,
    )?;
    if g.order() != 1 << k {
        return Err(Error::Construction(format!(
            "Q_{} closure has {} elements",
            1u64 << k,
            g.order()
        )));
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryPolyhedral {
    T,
    O,
    I,
}

type Mat<T> = [[T; 2]; 2];

fn mat_mul<T: Copy>(a: &Mat<T>, b: &Mat<T>, add: impl Fn(T, T) -> T, mul: impl Fn(T, T) -> T) -> Mat<T> {
    let mut c = a[0];
    let mut out = [c, c];
    for i in 0..2 {
        for j in 0..2 {
            c[j] = add(mul(a[i][0], b[0][j]), mul(a[i][1], b[1][j]));
        }
        out[i] = c;
    }
    out
}

fn sl2_prime(p: u8, family: Family) -> Result<FiniteGroup> {
    let add = move |a: u8, b: u8| (a + b) % p;
    let mul = move |a: u8, b: u8| (a * b) % p;
    let gens: [Mat<u8>; 2] = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]];
    FiniteGroup::from_closure(
        family,
        &gens,
        [[1, 0], [0, 1]],
        |a, b| mat_mul(a, b, add, mul),
        |m| format!("[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1]),
        200,
    )
}

/// Elements of the field with nine elements, `a + b·i` with `i^2 = -1` over F_3.
type F9 = (u8, u8);

fn f9_add(a: F9, b: F9) -> F9 {
    ((a.0 + b.0) % 3, (a.1 + b.1) % 3)
}

fn f9_mul(a: F9, b: F9) -> F9 {
    ((a.0 * b.0 + 2 * (a.1 * b.1)) % 3, (a.0 * b.1 + a.1 * b.0) % 3)
}

fn f9_label(a: F9) -> String {
    match a {
        (x, 0) => format!("{x}"),
        (0, 1) => "i".into(),
        (0, y) => format!("{y}i"),
        (x, 1) => format!("{x}+i"),
        (x, y) => format!("{x}+{y}i"),
    }
}

fn binary_octahedral() -> Result<FiniteGroup> {
    let o = (0, 0);
    let one = (1, 0);
    let two = (2, 0);
    let i = (0, 1);
    // SL(2,3) generators plus i·[[1,-1],[1,1]], which normalizes SL(2,3)
    // and squares into it.
    let gens: [Mat<F9>; 3] = [[[one, one], [o, one]], [[one, o], [one, one]], [[i, f9_mul(two, i)], [i, i]]];
    FiniteGroup::from_closure(
        Family::BinaryOctahedral,
        &gens,
        [[one, o], [o, one]],
        |a, b| mat_mul(a, b, f9_add, f9_mul),
        |m| {
            format!(
                "[[{},{}],[{},{}]]",
                f9_label(m[0][0]),
                f9_label(m[0][1]),
                f9_label(m[1][0]),
                f9_label(m[1][1])
            )
        },
        720,
    )
}

pub fn build_binary_polyhedral(kind: BinaryPolyhedral) -> Result<FiniteGroup> {
    let (g, expected) = match kind {
        BinaryPolyhedral::T => (sl2_prime(3, Family::BinaryTetrahedral)?, 24),
        BinaryPolyhedral::O => (binary_octahedral()?, 48),
        BinaryPolyhedral::I => (sl2_prime(5, Family::BinaryIcosahedral)?, 120),
    };
    if g.order() != expected {
        return Err(Error::Construction(format!(
            "{} has order {} instead of {expected}",
            g.family(),
            g.order()
        )));
    }
    let involutions = g.elements().filter(|&e| g.order_of(e) == 2).count();
    if involutions != 1 {
        return Err(Error::Construction(format!(
            "{} has {involutions} elements of order 2",
            g.family()
        )));
    }
    Ok(g)
}

/// `Z_2 × Z_2`, the smallest group failing the p²-condition.
pub fn klein_four() -> FiniteGroup {
    FiniteGroup::from_closure(
        Family::Custom("Z_2 x Z_2".into()),
        &[(1u8, 0u8), (0, 1)],
        (0, 0),
        |a, b| ((a.0 + b.0) % 2, (a.1 + b.1) % 2),
        |e| format!("({},{})", e.0, e.1),
        4,
    )
    .expect("Klein four group closes")
}

/// Dihedral group of order `2n`, as permutations of `0..n`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_closure(
        Family::Custom(format!("D_{}", 2 * n)),
        &[rot, refl],
        (0..n).collect(),
        |a, b| b.iter().map(|&i| a[i]).collect(),
        |p| format!("{p:?}"),
        2 * n,
    )
    .expect("dihedral group closes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dicyclic_relations() {
        for m in 2..20 {
            let g = build_dicyclic(m).unwrap();
            let (x, y) = g.dicyclic_xy().unwrap();
            assert_eq!(g.pow(x, m as i64), g.pow(y, 2));
            assert_eq!(g.conj(y, x), g.inv(x));
        }
    }

    #[test]
    fn binary_polyhedral_orders() {
        let o = build_binary_polyhedral(BinaryPolyhedral::O).unwrap();
        let census = o.order_census();
        assert_eq!(census[&8], 12);
        assert_eq!(census[&4], 18);
    }

    #[test]
    fn labels_are_readable() {
        let g = build_dicyclic(3).unwrap();
        assert_eq!(g.label(0), "1");
        assert_eq!(g.label(7), "x y");
    }
}
