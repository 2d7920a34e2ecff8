//! Library results against independent brute-force oracles.

use std::collections::{BTreeMap, BTreeSet};

use lowk::amalgam::AmalgamSpec;
use lowk::b4::B4Model;
use lowk::census::{conjugacy_classes, DEFAULT_BRUTE_FORCE_BOUND as BOUND};
use lowk::classify::{maximal_finite_subgroups, virtually_cyclic_classes_odd, SubgroupKind};
use lowk::fconj::r_f;
use lowk::galois::{phi_image, FieldDescriptor};
use lowk::groups::{
    build_binary_polyhedral, build_cyclic, build_dicyclic, BinaryPolyhedral, Elem, FiniteGroup,
};
use lowk::lowerk::whitehead_rank;

fn naive_classes(g: &FiniteGroup) -> Vec<BTreeSet<Elem>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        if seen.contains(&x) {
            continue;
        }
        let class: BTreeSet<Elem> = g.elements().map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
        seen.extend(class.iter().copied());
        out.push(class);
    }
    out
}

fn cyclic_subgroup(g: &FiniteGroup, x: Elem) -> BTreeSet<Elem> {
    let mut s = BTreeSet::new();
    let mut p = g.identity();
    loop {
        s.insert(p);
        p = g.mul(p, x);
        if p == g.identity() {
            return s;
        }
    }
}

/// `r_R − r_Q`: real classes minus classes of cyclic subgroups.
fn naive_whitehead_rank(g: &FiniteGroup) -> u64 {
    let classes = naive_classes(g);
    let real = classes
        .iter()
        .map(|c| {
            let inv: BTreeSet<Elem> = c.iter().map(|&x| g.inv(x)).collect();
            std::cmp::min(c.clone(), inv)
        })
        .collect::<BTreeSet<_>>()
        .len();
    let subgroups: BTreeSet<BTreeSet<Elem>> = g.elements().map(|x| cyclic_subgroup(g, x)).collect();
    let mut orbits: BTreeSet<BTreeSet<Elem>> = BTreeSet::new();
    for s in &subgroups {
        let least = g
            .elements()
            .map(|h| s.iter().map(|&x| g.mul(g.mul(h, x), g.inv(h))).collect::<BTreeSet<_>>())
            .min()
            .unwrap();
        orbits.insert(least);
    }
    (real - orbits.len()) as u64
}

fn sample_groups() -> Vec<FiniteGroup> {
    let mut gs: Vec<FiniteGroup> = (1..=24).map(|m| build_cyclic(m).unwrap()).collect();
    gs.extend((2..=12).map(|m| build_dicyclic(m).unwrap()));
    for k in [BinaryPolyhedral::T, BinaryPolyhedral::O, BinaryPolyhedral::I] {
        gs.push(build_binary_polyhedral(k).unwrap());
    }
    gs
}

#[test]
fn whitehead_rank_against_naive_class_count() {
    for g in sample_groups() {
        assert_eq!(whitehead_rank(&g, BOUND).unwrap(), naive_whitehead_rank(&g), "{}", g.family());
    }
}

#[test]
fn class_census_against_naive_classes() {
    for g in sample_groups() {
        let census = conjugacy_classes(&g, BOUND).unwrap();
        let ours: BTreeSet<BTreeSet<Elem>> =
            census.classes.iter().map(|c| c.iter().copied().collect()).collect();
        let naive: BTreeSet<BTreeSet<Elem>> = naive_classes(&g).into_iter().collect();
        assert_eq!(ours, naive, "{}", g.family());
    }
}

/// Units `t` mod `n` in the image of `Gal(F(ζ_n)/F)`: for `Q_p`, any unit
/// on the `p`-part times a power of `p` on the prime-to-`p` part; for `F_p`,
/// powers of `p`.
fn naive_image(field: FieldDescriptor, n: u64) -> Vec<u64> {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    if n == 1 {
        return vec![1];
    }
    let units = (1..n).filter(|&t| gcd(t, n) == 1);
    let (p, any_p_part) = match field {
        FieldDescriptor::Rational => return units.collect::<BTreeSet<_>>().into_iter().collect(),
        FieldDescriptor::PAdic(p) => (p, true),
        FieldDescriptor::FinitePrime(p) => (p, false),
    };
    let mut n1 = n;
    while n1 % p == 0 {
        n1 /= p;
    }
    let powers: BTreeSet<u64> = (0..n1).map(|k| (0..k).fold(1 % n1, |acc, _| acc * p % n1)).collect();
    units
        .filter(|&t| powers.contains(&(t % n1)) && (any_p_part || n1 == n))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[test]
fn galois_image_against_naive() {
    for n in 1..=60u64 {
        for field in [FieldDescriptor::Rational, FieldDescriptor::PAdic(2), FieldDescriptor::PAdic(3), FieldDescriptor::PAdic(5)] {
            assert_eq!(phi_image(field, n).unwrap().residues, naive_image(field, n), "{field} n={n}");
        }
        for p in [2, 3, 5, 7] {
            if n % p != 0 {
                let f = FieldDescriptor::FinitePrime(p);
                assert_eq!(phi_image(f, n).unwrap().residues, naive_image(f, n), "{f} n={n}");
            }
        }
    }
}

/// F-classes by the definition: `x ~ y` iff `h x^t h^-1 = y` for some `h`
/// and some `t` in the image, restricted to `p`-regular elements.
fn naive_r_f(g: &FiniteGroup, field: FieldDescriptor) -> usize {
    let p = field.characteristic();
    let mut m = g.exponent();
    while p > 0 && m % p == 0 {
        m /= p;
    }
    let image = naive_image(field, m);
    let regular: Vec<Elem> = g.elements().filter(|&x| p == 0 || g.order_of(x) % p != 0).collect();
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for &x in &regular {
        if seen.contains(&x) {
            continue;
        }
        count += 1;
        for &t in &image {
            let xt = g.pow(x, t as i64);
            for h in g.elements() {
                seen.insert(g.mul(g.mul(h, xt), g.inv(h)));
            }
        }
    }
    count
}

#[test]
fn r_f_against_definition() {
    let fields = [
        FieldDescriptor::Rational,
        FieldDescriptor::PAdic(2),
        FieldDescriptor::FinitePrime(2),
        FieldDescriptor::PAdic(3),
        FieldDescriptor::FinitePrime(3),
        FieldDescriptor::PAdic(5),
        FieldDescriptor::FinitePrime(5),
    ];
    for g in sample_groups() {
        for f in fields {
            assert_eq!(r_f(&g, f, BOUND).unwrap(), naive_r_f(&g, f), "{} over {f}", g.family());
        }
    }
}

fn all_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<Elem>> {
    // Subgroups of cyclic and dicyclic groups are generated by two elements.
    let mut out = BTreeSet::new();
    for a in g.elements() {
        for b in g.elements() {
            let mut s = g.subgroup_generated(&[a, b]);
            s.sort_unstable();
            out.insert(s);
        }
    }
    out
}

fn census_of(g: &FiniteGroup, s: &[Elem]) -> BTreeMap<u64, usize> {
    let mut c = BTreeMap::new();
    for &x in s {
        *c.entry(g.order_of(x)).or_insert(0) += 1;
    }
    c
}

fn descriptor_census(kind: &SubgroupKind) -> BTreeMap<u64, usize> {
    match kind {
        SubgroupKind::Cyclic { m } => build_cyclic(*m).unwrap().order_census(),
        SubgroupKind::Dicyclic { m } => build_dicyclic(*m).unwrap().order_census(),
        k => panic!("unexpected finite kind {k:?}"),
    }
}

#[test]
fn finite_classes_are_subgroups_of_maximal_ones() {
    // Cyclic and dicyclic groups are determined by their order census.
    for n in [3u64, 5, 7, 9, 11] {
        let mut found = BTreeSet::new();
        for d in maximal_finite_subgroups(n).unwrap() {
            let g = descriptor_group(&d.kind);
            for s in all_subgroups(&g) {
                found.insert(census_of(&g, &s));
            }
        }
        let listed: BTreeSet<_> = virtually_cyclic_classes_odd(n)
            .unwrap()
            .iter()
            .filter(|d| d.order().is_some())
            .map(|d| descriptor_census(&d.kind))
            .collect();
        assert_eq!(found, listed, "n = {n}");
    }
}

fn descriptor_group(kind: &SubgroupKind) -> FiniteGroup {
    match kind {
        SubgroupKind::Cyclic { m } => build_cyclic(*m).unwrap(),
        SubgroupKind::Dicyclic { m } => build_dicyclic(*m).unwrap(),
        k => panic!("unexpected finite kind {k:?}"),
    }
}

#[test]
fn dic20_subgroup_scan() {
    let g = build_dicyclic(5).unwrap();
    let subs = all_subgroups(&g);
    let orders: BTreeMap<usize, usize> = subs.iter().fold(BTreeMap::new(), |mut m, s| {
        *m.entry(s.len()).or_insert(0) += 1;
        m
    });
    // 1, centre, five Z_4, one Z_5, one Z_10, whole group.
    assert_eq!(orders, BTreeMap::from([(1, 1), (2, 1), (4, 5), (5, 1), (10, 1), (20, 1)]));
}

fn torsion_oracle(spec: &AmalgamSpec, exponent: i64, g: &lowk::amalgam::AmalgamElement) -> bool {
    spec.is_identity(&spec.pow(g, exponent))
}

#[test]
fn amalgam_torsion_against_power_oracle() {
    let m = B4Model::build().unwrap();
    let spec = m.spec();
    // Exponents of Q16 and T* are 8 and 12.
    let mut frontier = vec![spec.identity()];
    let gens: Vec<_> = (0..3).map(|i| m.sigma[i].clone()).collect();
    let mut seen = BTreeSet::new();
    for _ in 0..5 {
        let mut next = Vec::new();
        for g in &frontier {
            for s in &gens {
                for h in [spec.multiply(g, s), spec.multiply(g, &spec.invert(s))] {
                    if seen.insert(m.format(&h)) {
                        next.push(h);
                    }
                }
            }
        }
        frontier = next;
        for g in &frontier {
            assert_eq!(spec.has_finite_order(g), torsion_oracle(spec, 24, g), "{}", m.format(g));
        }
    }
    assert!(seen.len() > 500);
}
