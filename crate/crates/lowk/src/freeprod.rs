//! Reduced words in `Z_3 ∗ Z_2 = <a, b | a^3 = b^2 = 1>`, permutations of
//! three points, and Reidemeister–Schreier for finite-index normal subgroups.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{Elem, Family, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syllable {
    /// `a^e` with `e ∈ {1, 2}`.
    A(u8),
    B,
}

/// A reduced word: syllables alternate between the two factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeProductWord(Vec<Syllable>);

impl FreeProductWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn a() -> Self {
        Self(vec![Syllable::A(1)])
    }

    pub fn b() -> Self {
        Self(vec![Syllable::B])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, s: Syllable) {
        match (self.0.last().copied(), s) {
            (Some(Syllable::B), Syllable::B) => {
                self.0.pop();
            }
            (Some(Syllable::A(e)), Syllable::A(f)) => {
                self.0.pop();
                let g = (e + f) % 3;
                if g != 0 {
                    self.0.push(Syllable::A(g));
                }
            }
            (_, Syllable::A(0)) => {}
            _ => self.0.push(s),
        }
    }

    pub fn from_syllables(it: impl IntoIterator<Item = Syllable>) -> Self {
        let mut w = Self::identity();
        for s in it {
            w.push(s);
        }
        w
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &s in &other.0 {
            w.push(s);
        }
        w
    }

    pub fn inv(&self) -> Self {
        Self(
            self.0
                .iter()
                .rev()
                .map(|s| match s {
                    Syllable::A(e) => Syllable::A(3 - e),
                    Syllable::B => Syllable::B,
                })
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    /// `g h g^-1 h^-1`.
    pub fn commutator(g: &Self, h: &Self) -> Self {
        g.mul(h).mul(&g.inv()).mul(&h.inv())
    }

    /// The word as single letters `a`, `b`, with `a^2` spelled `aa`.
    fn letters(&self) -> Vec<char> {
        let mut out = Vec::new();
        for s in &self.0 {
            match s {
                Syllable::A(e) => out.extend(std::iter::repeat('a').take(*e as usize)),
                Syllable::B => out.push('b'),
            }
        }
        out
    }

    /// Image under the homomorphism fixed by `a ↦ image_a`, `b ↦ image_b`.
    pub fn evaluate(&self, g: &FiniteGroup, image_a: Elem, image_b: Elem) -> Elem {
        self.letters().iter().fold(g.identity(), |acc, &c| {
            g.mul(acc, if c == 'a' { image_a } else { image_b })
        })
    }

    /// Sum of letter images in `Z_6` with `a ↦ 4`, `b ↦ 3`.
    pub fn abelianize(&self) -> u64 {
        self.letters()
            .iter()
            .map(|&c| if c == 'a' { 4 } else { 3 })
            .sum::<u64>()
            % 6
    }
}

impl fmt::Display for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for s in &self.0 {
            match s {
                Syllable::A(1) => write!(f, "a")?,
                Syllable::A(e) => write!(f, "a^{e}")?,
                Syllable::B => write!(f, "b")?,
            }
        }
        Ok(())
    }
}

impl Serialize for FreeProductWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses words such as `baba`, `a^2b` or `a^-1b`.
impl FromStr for FreeProductWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad word '{s}'"));
        let mut w = Self::identity();
        if s == "1" {
            return Ok(w);
        }
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            i += 1;
            let mut exp: i64 = 1;
            if chars.get(i) == Some(&'^') {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && (chars[end] == '-' || chars[end].is_ascii_digit()) {
                    end += 1;
                }
                exp = chars[start..end]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| bad())?;
                i = end;
            }
            let s = match c {
                'a' => Syllable::A(exp.rem_euclid(3) as u8),
                'b' if exp.rem_euclid(2) == 1 => Syllable::B,
                'b' => continue,
                _ => return Err(bad()),
            };
            w.push(s);
        }
        Ok(w)
    }
}

/// A permutation of `{1, 2, 3}`; `p.0[i]` is the image of `i + 1` minus one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3(pub [u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    /// The transposition `(i, j)`, 1-based.
    pub fn transposition(i: u8, j: u8) -> Self {
        let mut p = [0, 1, 2];
        p.swap(i as usize - 1, j as usize - 1);
        Perm3(p)
    }

    /// The 3-cycle `(i, j, k)`, 1-based: `i ↦ j ↦ k ↦ i`.
    pub fn cycle(i: u8, j: u8, k: u8) -> Self {
        let mut p = [0u8; 3];
        p[i as usize - 1] = j - 1;
        p[j as usize - 1] = k - 1;
        p[k as usize - 1] = i - 1;
        Perm3(p)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3(other.0.map(|i| self.0[i as usize]))
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize - 1] + 1
    }

    pub fn order(&self) -> u32 {
        let mut p = *self;
        let mut k = 1;
        while p != Perm3::IDENTITY {
            p = p.compose(self);
            k += 1;
        }
        k
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 3];
        let mut any = false;
        for start in 0..3u8 {
            if seen[start as usize] || self.0[start as usize] == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i as usize] {
                seen[i as usize] = true;
                cycle.push((i + 1).to_string());
                i = self.0[i as usize];
            }
            write!(f, "({})", cycle.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// `S_3` as a table group generated by the given permutations.
pub fn symmetric_group_s3(gens: &[Perm3]) -> Result<FiniteGroup> {
    FiniteGroup::from_closure(
        Family::Custom("S_3".into()),
        gens,
        Perm3::IDENTITY,
        |a, b| a.compose(b),
        |p| p.to_string(),
        6,
    )
}

/// One Schreier generator `t · s · rep(t s)^-1` for coset `t` and letter `s`.
#[derive(Clone, Debug, Serialize)]
pub struct SchreierGenerator {
    pub coset: FreeProductWord,
    pub letter: char,
    pub word: FreeProductWord,
    /// True when `t s` is itself a transversal word (an edge of the Schreier tree).
    pub tree_edge: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchreierResult {
    pub index: usize,
    pub generators: Vec<SchreierGenerator>,
    /// Nontrivial reduced generator words, deduplicated up to inversion.
    pub nontrivial: Vec<FreeProductWord>,
    /// `1 + index / 6`, the rank forced by the Euler characteristic.
    pub euler_rank: usize,
    /// Cycles of the action of `a` and of `b` on cosets, as generator indices.
    pub cycles: Vec<Vec<usize>>,
}

impl SchreierResult {
    /// True when `w` or its inverse is a Schreier generator.
    pub fn contains_up_to_inversion(&self, w: &FreeProductWord) -> bool {
        let wi = w.inv();
        self.nontrivial.iter().any(|g| *g == *w || *g == wi)
    }

    /// Eliminates one non-tree generator per coset cycle, avoiding `claimed`
    /// where possible. The survivors form a free basis of the kernel.
    pub fn basis_avoiding(&self, claimed: &[FreeProductWord]) -> Vec<FreeProductWord> {
        let is_claimed = |w: &FreeProductWord| {
            let wi = w.inv();
            claimed.iter().any(|c| *c == *w || *c == wi)
        };
        let mut eliminated = vec![false; self.generators.len()];
        for cycle in &self.cycles {
            let candidates: Vec<usize> = cycle
                .iter()
                .copied()
                .filter(|&g| !self.generators[g].tree_edge)
                .collect();
            let pick = candidates
                .iter()
                .copied()
                .find(|&g| !is_claimed(&self.generators[g].word))
                .or_else(|| candidates.first().copied());
            if let Some(g) = pick {
                eliminated[g] = true;
            }
        }
        self.generators
            .iter()
            .enumerate()
            .filter(|(i, g)| !eliminated[*i] && !g.tree_edge)
            .map(|(_, g)| g.word.clone())
            .collect()
    }

    /// The claimed words are, up to inversion, exactly a Schreier free basis
    /// whose size matches the Euler characteristic.
    pub fn certifies_basis(&self, claimed: &[FreeProductWord]) -> bool {
        let basis = self.basis_avoiding(claimed);
        basis.len() == self.euler_rank
            && claimed.len() == self.euler_rank
            && claimed.iter().all(|c| self.contains_up_to_inversion(c))
            && basis.iter().all(|b| {
                let bi = b.inv();
                !b.is_empty() && claimed.iter().any(|c| *c == *b || *c == bi)
            })
    }
}

/// Reidemeister–Schreier for the kernel of `Z_3 ∗ Z_2 → G`, `a ↦ image_a`,
/// `b ↦ image_b`, with a prefix-closed transversal.
pub fn reidemeister_schreier(
    g: &FiniteGroup,
    image_a: Elem,
    image_b: Elem,
    transversal: &[FreeProductWord],
) -> Result<SchreierResult> {
    if g.order_of(image_a) != 3 || g.order_of(image_b) != 2 {
        return Err(Error::Construction(
            "the factors must embed in the quotient for a torsion-free kernel".into(),
        ));
    }
    let n = g.order();
    if g.subgroup_generated(&[image_a, image_b]).len() != n {
        return Err(Error::Construction("quotient map is not onto".into()));
    }
    let images: Vec<Elem> = transversal
        .iter()
        .map(|t| t.evaluate(g, image_a, image_b))
        .collect();
    let mut rep = vec![usize::MAX; n];
    for (i, &e) in images.iter().enumerate() {
        if rep[e] != usize::MAX {
            return Err(Error::Construction(format!(
                "transversal words {} and {} lie in one coset",
                transversal[rep[e]], transversal[i]
            )));
        }
        rep[e] = i;
    }
    if transversal.len() != n {
        return Err(Error::Construction("transversal misses a coset".into()));
    }
    for t in transversal {
        let letters = t.letters();
        for k in 0..letters.len() {
            let prefix: FreeProductWord = letters[..k].iter().collect::<String>().parse()?;
            if !transversal.contains(&prefix) {
                return Err(Error::Construction(format!("transversal is not prefix-closed at {t}")));
            }
        }
    }
    let mut generators = Vec::with_capacity(2 * n);
    let mut target = [vec![0; n], vec![0; n]];
    for (li, (letter, word, img)) in [('a', FreeProductWord::a(), image_a), ('b', FreeProductWord::b(), image_b)]
        .into_iter()
        .enumerate()
    {
        for (i, t) in transversal.iter().enumerate() {
            let j = rep[g.mul(images[i], img)];
            target[li][i] = j;
            let ts = t.mul(&word);
            generators.push(SchreierGenerator {
                coset: t.clone(),
                letter,
                word: ts.mul(&transversal[j].inv()),
                tree_edge: ts == transversal[j],
            });
        }
    }
    let mut cycles = Vec::new();
    for li in 0..2 {
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(li * n + i);
                i = target[li][i];
            }
            cycles.push(cycle);
        }
    }
    let mut nontrivial: Vec<FreeProductWord> = Vec::new();
    for gen in &generators {
        let w = &gen.word;
        if !w.is_empty() && !nontrivial.iter().any(|x| *x == *w || *x == w.inv()) {
            nontrivial.push(w.clone());
        }
    }
    Ok(SchreierResult {
        index: n,
        generators,
        nontrivial,
        euler_rank: 1 + n / 6,
        cycles,
    })
}
