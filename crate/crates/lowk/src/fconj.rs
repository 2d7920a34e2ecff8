//! F-conjugacy classes and the Witt–Berman counts `r_F`.

use serde::Serialize;

use crate::census::{conjugacy_classes, ClassCensus};
use crate::error::Result;
use crate::galois::{phi_image, FieldDescriptor};
use crate::groups::{Elem, FiniteGroup};

#[derive(Clone, Debug, Serialize)]
pub struct FPartition {
    pub field: FieldDescriptor,
    pub modulus_used: u64,
    /// Sorted blocks, listed by least element.
    pub blocks: Vec<Vec<Elem>>,
}

/// The exponent with its `p`-part removed in characteristic `p`.
pub fn m_hat(g: &FiniteGroup, field: FieldDescriptor) -> u64 {
    let mut m = g.exponent();
    let p = field.characteristic();
    if p > 0 {
        while m % p == 0 {
            m /= p;
        }
    }
    m
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

fn is_regular(g: &FiniteGroup, x: Elem, p: u64) -> bool {
    p == 0 || g.order_of(x) % p != 0
}

fn blocks_from(g: &FiniteGroup, census: &ClassCensus, uf: &mut UnionFind, p: u64) -> Vec<Vec<Elem>> {
    let mut by_root: std::collections::BTreeMap<usize, Vec<Elem>> = Default::default();
    for (i, class) in census.classes.iter().enumerate() {
        if !is_regular(g, class[0], p) {
            continue;
        }
        by_root.entry(uf.find(i)).or_default().extend(class.iter().copied());
    }
    let mut blocks: Vec<Vec<Elem>> = by_root
        .into_values()
        .map(|mut b| {
            b.sort_unstable();
            b
        })
        .collect();
    blocks.sort();
    blocks
}

/// `f ~ g` iff `f^t` is conjugate to `g` for some `t` in the image of
/// Galois in `Z_m̂^*`. In characteristic `p` only `p`-regular elements appear.
pub fn f_partition_with(g: &FiniteGroup, census: &ClassCensus, field: FieldDescriptor) -> Result<FPartition> {
    let m = m_hat(g, field);
    let image = phi_image(field, m)?;
    let p = field.characteristic();
    let mut uf = UnionFind((0..census.classes.len()).collect());
    for (i, class) in census.classes.iter().enumerate() {
        let x = class[0];
        if !is_regular(g, x, p) {
            continue;
        }
        for &t in &image.residues {
            uf.union(i, census.class_of[g.pow(x, t as i64)]);
        }
    }
    Ok(FPartition {
        field,
        modulus_used: m,
        blocks: blocks_from(g, census, &mut uf, p),
    })
}

pub fn f_partition(g: &FiniteGroup, field: FieldDescriptor, bound: usize) -> Result<FPartition> {
    let census = conjugacy_classes(g, bound)?;
    f_partition_with(g, &census, field)
}

pub fn r_f(g: &FiniteGroup, field: FieldDescriptor, bound: usize) -> Result<usize> {
    Ok(f_partition(g, field, bound)?.blocks.len())
}

/// Diagnostic variant: the image is recomputed modulo each element order
/// instead of using the single modulus `m̂`.
#[doc(hidden)]
pub fn f_partition_per_order(g: &FiniteGroup, census: &ClassCensus, field: FieldDescriptor) -> Result<Vec<Vec<Elem>>> {
    let p = field.characteristic();
    let mut uf = UnionFind((0..census.classes.len()).collect());
    for (i, class) in census.classes.iter().enumerate() {
        let x = class[0];
        if !is_regular(g, x, p) {
            continue;
        }
        let d = g.order_of(x);
        for t in phi_image(field, d)?.residues {
            uf.union(i, census.class_of[g.pow(x, t as i64)]);
        }
    }
    Ok(blocks_from(g, census, &mut uf, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::DEFAULT_BRUTE_FORCE_BOUND as B;
    use crate::groups::*;

    #[test]
    fn quaternion_eight_counts() {
        let q8 = build_dicyclic(2).unwrap();
        assert_eq!(r_f(&q8, FieldDescriptor::Rational, B).unwrap(), 5);
        assert_eq!(r_f(&q8, FieldDescriptor::FinitePrime(2), B).unwrap(), 1);
    }

    #[test]
    fn blocks_are_unions_of_classes() {
        let g = build_binary_polyhedral(BinaryPolyhedral::I).unwrap();
        let census = conjugacy_classes(&g, B).unwrap();
        let part = f_partition_with(&g, &census, FieldDescriptor::PAdic(5)).unwrap();
        for block in &part.blocks {
            for &x in block {
                let class = &census.classes[census.class_of[x]];
                assert!(class.iter().all(|y| block.binary_search(y).is_ok()));
            }
        }
    }
}
