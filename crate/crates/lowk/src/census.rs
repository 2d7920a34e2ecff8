//! Conjugacy classes, classes of inverse pairs and of cyclic subgroups.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup};

pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 5000;

#[derive(Clone, Debug)]
pub struct ClassCensus {
    /// Conjugacy classes, each sorted, listed by least element.
    pub classes: Vec<Vec<Elem>>,
    /// Index into `classes` for every element.
    pub class_of: Vec<usize>,
    /// Order `d` ↦ number of classes of unordered pairs `{g, g^-1}`.
    pub r1_by_order: BTreeMap<u64, usize>,
    /// Order `d` ↦ number of conjugacy classes of cyclic subgroups.
    pub r2_by_order: BTreeMap<u64, usize>,
}

impl ClassCensus {
    pub fn r1(&self, d: u64) -> usize {
        self.r1_by_order.get(&d).copied().unwrap_or(0)
    }

    pub fn r2(&self, d: u64) -> usize {
        self.r2_by_order.get(&d).copied().unwrap_or(0)
    }

    /// Number of conjugacy classes of cyclic subgroups of any order.
    pub fn cyclic_subgroup_classes(&self) -> usize {
        self.r2_by_order.values().sum()
    }
}

pub fn ensure_within(g: &FiniteGroup, bound: usize) -> Result<()> {
    if g.order() > bound {
        return Err(Error::TooLarge {
            order: g.order(),
            bound,
        });
    }
    Ok(())
}

/// Conjugacy class of `x`, by orbit expansion under the generators.
pub fn conjugacy_class(g: &FiniteGroup, x: Elem) -> Vec<Elem> {
    let mut orbit = vec![x];
    let mut seen = BTreeSet::from([x]);
    let mut i = 0;
    while i < orbit.len() {
        for &s in g.generators() {
            let y = g.conj(s, orbit[i]);
            if seen.insert(y) {
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit.sort_unstable();
    orbit
}

/// Generators of `<x>`, i.e. the powers `x^k` with `k` prime to the order.
fn cyclic_generators(g: &FiniteGroup, x: Elem) -> Vec<Elem> {
    let n = g.order_of(x);
    let mut out = Vec::new();
    let mut p = g.identity();
    for k in 1..=n {
        p = g.mul(p, x);
        if k.gcd(&n) == 1 {
            out.push(p);
        }
    }
    out
}

pub fn conjugacy_classes(g: &FiniteGroup, bound: usize) -> Result<ClassCensus> {
    ensure_within(g, bound)?;
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for x in g.elements() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = conjugacy_class(g, x);
        for &y in &c {
            class_of[y] = classes.len();
        }
        classes.push(c);
    }

    // Unordered pairs {g, g^-1} up to conjugacy: one per pair {C, C^-1}.
    let mut r1_by_order = BTreeMap::new();
    for (i, c) in classes.iter().enumerate() {
        let j = class_of[g.inv(c[0])];
        if j >= i {
            *r1_by_order.entry(g.order_of(c[0])).or_insert(0) += 1;
        }
    }

    // Cyclic subgroups keyed by their least generator, then orbits of keys.
    let mut key = vec![usize::MAX; n];
    for x in g.elements() {
        if key[x] != usize::MAX {
            continue;
        }
        let gens = cyclic_generators(g, x);
        let k = *gens.iter().min().expect("nonempty");
        for y in gens {
            key[y] = k;
        }
    }
    let keys: BTreeSet<Elem> = key.iter().copied().collect();
    let mut done = BTreeSet::new();
    let mut r2_by_order = BTreeMap::new();
    for &k in &keys {
        if done.contains(&k) {
            continue;
        }
        let mut orbit = vec![k];
        done.insert(k);
        let mut i = 0;
        while i < orbit.len() {
            for &s in g.generators() {
                let kk = key[g.conj(s, orbit[i])];
                if done.insert(kk) {
                    orbit.push(kk);
                }
            }
            i += 1;
        }
        *r2_by_order.entry(g.order_of(k)).or_insert(0) += 1;
    }

    Ok(ClassCensus {
        classes,
        class_of,
        r1_by_order,
        r2_by_order,
    })
}

pub fn centralizer(g: &FiniteGroup, x: Elem) -> Vec<Elem> {
    g.elements()
        .filter(|&y| g.mul(x, y) == g.mul(y, x))
        .collect()
}

/// True when the listed subgroup is cyclic.
pub fn is_cyclic_subgroup(g: &FiniteGroup, sub: &[Elem]) -> bool {
    sub.iter().any(|&x| g.order_of(x) as usize == sub.len())
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn elements_of_order(g: &FiniteGroup, d: u64) -> Vec<Elem> {
    g.elements().filter(|&x| g.order_of(x) == d).collect()
}

/// No subgroup `Z_p × Z_p` for any prime `p` dividing the order.
pub fn check_p2_condition(g: &FiniteGroup) -> bool {
    for p in prime_divisors(g.order() as u64) {
        let elems = elements_of_order(g, p);
        for &a in &elems {
            let span: BTreeSet<Elem> = (0..p as i64).map(|k| g.pow(a, k)).collect();
            for &b in &elems {
                if !span.contains(&b) && g.mul(a, b) == g.mul(b, a) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every subgroup of order `2p` is cyclic. A non-cyclic group of order `2p`
/// is `Z_2 × Z_2` or dihedral, so it suffices to look for those.
pub fn check_2p_condition(g: &FiniteGroup) -> bool {
    let involutions = elements_of_order(g, 2);
    for p in prime_divisors(g.order() as u64) {
        if p == 2 {
            for &a in &involutions {
                for &b in &involutions {
                    if a != b && g.mul(a, b) == g.mul(b, a) {
                        return false;
                    }
                }
            }
            continue;
        }
        for &a in &elements_of_order(g, p) {
            for &t in &involutions {
                if g.conj(t, a) == g.inv(a) {
                    return false;
                }
            }
        }
    }
    true
}

/// At most one element of order 2.
pub fn check_milnor(g: &FiniteGroup) -> bool {
    g.elements().filter(|&x| g.order_of(x) == 2).count() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::*;

    #[test]
    fn dicyclic_classes_of_x_powers() {
        let g = build_dicyclic(5).unwrap();
        let (x, _) = g.dicyclic_xy().unwrap();
        for i in 1..10 {
            let xi = g.pow(x, i);
            let mut expected = vec![xi, g.inv(xi)];
            expected.sort_unstable();
            expected.dedup();
            assert_eq!(conjugacy_class(&g, xi), expected);
        }
    }

    #[test]
    fn klein_four_fails_p2() {
        assert!(!check_p2_condition(&klein_four()));
        assert!(check_p2_condition(&build_dicyclic(2).unwrap()));
    }
}
