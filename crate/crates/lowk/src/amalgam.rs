//! Normal forms in an amalgamated free product `G1 ∗_F G2` of finite groups.
//!
//! An element is stored as `f · t1 · t2 ⋯ tn` where `f` lies in the core `F`
//! and the `ti` are nontrivial right-coset representatives taken alternately
//! from the two factors. With the transversals fixed this form is unique, so
//! equality of elements is equality of normal forms.

use std::collections::VecDeque;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup};

/// A nontrivial coset representative: index `rep ≥ 1` into the transversal
/// of factor `side`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub side: u8,
    pub rep: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmalgamElement {
    pub core: Elem,
    pub letters: VecDeque<Letter>,
}

impl AmalgamElement {
    pub fn syllable_length(&self) -> usize {
        self.letters.len()
    }

    pub fn is_core(&self) -> bool {
        self.letters.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct AmalgamSpec {
    factors: [FiniteGroup; 2],
    core: FiniteGroup,
    embed: [Vec<Elem>; 2],
    transversal: [Vec<Elem>; 2],
    /// `g = embed(f) · transversal[t]` recorded as `(f, t)`.
    decomp: [Vec<(Elem, u32)>; 2],
    core_normal: bool,
    core_labels: Vec<String>,
    letter_labels: [Vec<String>; 2],
}

impl AmalgamSpec {
    /// Validates that both embeddings are injective homomorphisms and that
    /// each transversal picks exactly one representative per right coset,
    /// the identity representing the core.
    pub fn new(
        g1: FiniteGroup,
        g2: FiniteGroup,
        core: FiniteGroup,
        embeds: [Vec<Elem>; 2],
        transversals: [Vec<Elem>; 2],
    ) -> Result<AmalgamSpec> {
        let factors = [g1, g2];
        let n = core.order();
        let mut decomp = [Vec::new(), Vec::new()];
        for side in 0..2 {
            let g = &factors[side];
            let emb = &embeds[side];
            if emb.len() != n || emb.iter().any(|&e| e >= g.order()) {
                return Err(Error::Construction(format!("embedding {side} has the wrong shape")));
            }
            for a in core.elements() {
                for b in core.elements() {
                    if emb[core.mul(a, b)] != g.mul(emb[a], emb[b]) {
                        return Err(Error::Construction(format!("embedding {side} is not a homomorphism")));
                    }
                }
            }
            let mut image = emb.clone();
            image.sort_unstable();
            image.dedup();
            if image.len() != n {
                return Err(Error::Construction(format!("embedding {side} is not injective")));
            }
            let tv = &transversals[side];
            if tv.first() != Some(&g.identity()) || tv.len() * n != g.order() {
                return Err(Error::Construction(format!(
                    "transversal {side} must start with the identity and have index {} entries",
                    g.order() / n
                )));
            }
            let mut d = vec![None; g.order()];
            for (t, &rep) in tv.iter().enumerate() {
                for f in core.elements() {
                    let x = g.mul(emb[f], rep);
                    if d[x].replace((f, t as u32)).is_some() {
                        return Err(Error::Construction(format!(
                            "transversal {side} has two representatives in one coset"
                        )));
                    }
                }
            }
            decomp[side] = d.into_iter().map(|x| x.expect("cosets cover the factor")).collect();
        }
        let core_normal = (0..2).all(|side| {
            let g = &factors[side];
            g.generators().iter().all(|&s| {
                core.elements()
                    .all(|f| decomp[side][g.conj(s, embeds[side][f])].1 == 0)
            })
        });
        let core_labels = core.elements().map(|f| core.label(f)).collect();
        let letter_labels = [0, 1].map(|s| {
            transversals[s]
                .iter()
                .map(|&t| factors[s].label(t))
                .collect()
        });
        Ok(AmalgamSpec {
            factors,
            core,
            embed: embeds,
            transversal: transversals,
            decomp,
            core_normal,
            core_labels,
            letter_labels,
        })
    }

    /// Overrides the names used by [`AmalgamSpec::format`].
    pub fn set_labels(&mut self, core: Vec<String>, letters: [Vec<String>; 2]) {
        self.core_labels = core;
        self.letter_labels = letters;
    }

    pub fn factor(&self, side: usize) -> &FiniteGroup {
        &self.factors[side]
    }

    pub fn core(&self) -> &FiniteGroup {
        &self.core
    }

    pub fn embed(&self, side: usize, f: Elem) -> Elem {
        self.embed[side][f]
    }

    pub fn transversal(&self, side: usize) -> &[Elem] {
        &self.transversal[side]
    }

    pub fn core_is_normal(&self) -> bool {
        self.core_normal
    }

    pub fn identity(&self) -> AmalgamElement {
        self.from_core(self.core.identity())
    }

    pub fn from_core(&self, f: Elem) -> AmalgamElement {
        AmalgamElement {
            core: f,
            letters: VecDeque::new(),
        }
    }

    pub fn from_factor(&self, side: usize, g: Elem) -> AmalgamElement {
        let mut x = self.identity();
        self.prepend(side, g, &mut x);
        x
    }

    pub fn letter_element(&self, l: Letter) -> (usize, Elem) {
        let side = l.side as usize;
        (side, self.transversal[side][l.rep as usize])
    }

    /// Replaces `x` by `g · x` for `g` in factor `side`, touching only the
    /// front of the normal form.
    fn prepend(&self, side: usize, g: Elem, x: &mut AmalgamElement) {
        let factor = &self.factors[side];
        let mut h = factor.mul(g, self.embed[side][x.core]);
        if let Some(first) = x.letters.front() {
            if first.side as usize == side {
                h = factor.mul(h, self.transversal[side][first.rep as usize]);
                x.letters.pop_front();
            }
        }
        let (f, t) = self.decomp[side][h];
        if t != 0 {
            x.letters.push_front(Letter {
                side: side as u8,
                rep: t,
            });
        }
        x.core = f;
    }

    /// Normal form of a word whose letters are tagged with their factor.
    pub fn reduce(&self, word: &[(usize, Elem)]) -> Result<AmalgamElement> {
        let mut x = self.identity();
        for &(side, g) in word.iter().rev() {
            if side > 1 || g >= self.factors[side].order() {
                return Err(Error::LetterOutOfRange { side, elem: g });
            }
            self.prepend(side, g, &mut x);
        }
        Ok(x)
    }

    pub fn multiply(&self, a: &AmalgamElement, b: &AmalgamElement) -> AmalgamElement {
        let mut x = b.clone();
        for &l in a.letters.iter().rev() {
            let (side, g) = self.letter_element(l);
            self.prepend(side, g, &mut x);
        }
        self.prepend(0, self.embed[0][a.core], &mut x);
        x
    }

    pub fn invert(&self, a: &AmalgamElement) -> AmalgamElement {
        let mut x = self.from_core(self.core.inv(a.core));
        for &l in &a.letters {
            let (side, g) = self.letter_element(l);
            self.prepend(side, self.factors[side].inv(g), &mut x);
        }
        x
    }

    pub fn product(&self, xs: &[&AmalgamElement]) -> AmalgamElement {
        xs.iter()
            .rev()
            .fold(self.identity(), |acc, x| self.multiply(x, &acc))
    }

    pub fn pow(&self, a: &AmalgamElement, k: i64) -> AmalgamElement {
        let base = if k < 0 { self.invert(a) } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    /// `g · x · g^-1`.
    pub fn conjugate(&self, g: &AmalgamElement, x: &AmalgamElement) -> AmalgamElement {
        self.multiply(&self.multiply(g, x), &self.invert(g))
    }

    pub fn is_identity(&self, a: &AmalgamElement) -> bool {
        a.letters.is_empty() && a.core == self.core.identity()
    }

    /// Conjugates `a` until it is cyclically reduced. Odd syllable length
    /// `≥ 3` means the first and last letters share a factor and merge.
    pub fn cyclic_reduction(&self, a: &AmalgamElement) -> AmalgamElement {
        let mut x = a.clone();
        while x.letters.len() >= 3 && x.letters.len() % 2 == 1 {
            let mut head = self.from_core(x.core);
            let first = *x.letters.front().expect("nonempty");
            let (side, g) = self.letter_element(first);
            head = self.multiply(&head, &self.from_factor(side, g));
            x = self.multiply(&self.multiply(&self.invert(&head), &x), &head);
        }
        x
    }

    /// Finite order iff the cyclic reduction lies in a single factor.
    pub fn has_finite_order(&self, a: &AmalgamElement) -> bool {
        self.cyclic_reduction(a).letters.len() <= 1
    }

    pub fn order(&self, a: &AmalgamElement) -> Option<u64> {
        if !self.has_finite_order(a) {
            return None;
        }
        let bound = (self.factors[0].order() as u64).lcm(&(self.factors[1].order() as u64));
        let mut p = a.clone();
        for k in 1..=bound {
            if self.is_identity(&p) {
                return Some(k);
            }
            p = self.multiply(&p, a);
        }
        None
    }

    /// `{a s a^-1 : s ∈ S}` for a subgroup `S` of the core, as core elements.
    pub fn conjugate_subgroup(&self, a: &AmalgamElement, subgroup: &[Elem]) -> Result<Vec<Elem>> {
        if !self.core_normal {
            return Err(Error::NotNormal);
        }
        let mut out = Vec::with_capacity(subgroup.len());
        for &s in subgroup {
            let c = self.conjugate(a, &self.from_core(s));
            if !c.is_core() {
                return Err(Error::NotNormal);
            }
            out.push(c.core);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Human-readable normal form, e.g. `-k·u·r^2`.
    pub fn format(&self, a: &AmalgamElement) -> String {
        let mut parts = Vec::new();
        if a.core != self.core.identity() || a.letters.is_empty() {
            parts.push(self.core_labels[a.core].clone());
        }
        for l in &a.letters {
            parts.push(self.letter_labels[l.side as usize][l.rep as usize].clone());
        }
        parts.join("·")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_cyclic, build_dicyclic};

    /// `Z_4 ∗_{Z_2} Z_4`.
    fn spec() -> AmalgamSpec {
        let z4 = build_cyclic(4).unwrap();
        AmalgamSpec::new(
            z4.clone(),
            z4,
            build_cyclic(2).unwrap(),
            [vec![0, 2], vec![0, 2]],
            [vec![0, 1], vec![0, 1]],
        )
        .unwrap()
    }

    #[test]
    fn inverse_and_identity() {
        let s = spec();
        let a = s.reduce(&[(0, 1), (1, 1), (0, 3)]).unwrap();
        assert!(s.is_identity(&s.multiply(&a, &s.invert(&a))));
        assert_eq!(a.syllable_length(), 3);
    }

    #[test]
    fn torsion() {
        let s = spec();
        let ab = s.reduce(&[(0, 1), (1, 1)]).unwrap();
        assert!(!s.has_finite_order(&ab));
        let conj = s.reduce(&[(0, 1), (1, 1), (0, 3)]).unwrap();
        assert!(s.has_finite_order(&conj));
        assert_eq!(s.order(&conj), Some(4));
    }

    #[test]
    fn rejects_bad_transversal() {
        let q16 = build_dicyclic(4).unwrap();
        let q8 = build_dicyclic(2).unwrap();
        let (x, y) = q16.dicyclic_xy().unwrap();
        let emb: Vec<Elem> = q8
            .elements()
            .map(|e| {
                let (a, b) = (e % 4, e / 4);
                q16.mul(q16.pow(x, 2 * a as i64), q16.pow(y, b as i64))
            })
            .collect();
        let bad = AmalgamSpec::new(
            q16.clone(),
            q16.clone(),
            q8,
            [emb.clone(), emb],
            [vec![0, q16.pow(x, 2)], vec![0, x]],
        );
        assert!(bad.is_err());
    }
}
