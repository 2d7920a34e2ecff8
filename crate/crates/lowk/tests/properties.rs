use std::sync::OnceLock;

use proptest::prelude::*;

use lowk::amalgam::{AmalgamElement, AmalgamSpec};
use lowk::b4::B4Model;
use lowk::census::{conjugacy_classes, DEFAULT_BRUTE_FORCE_BOUND as BOUND};
use lowk::classify::{maximal_finite_subgroups, satisfies_odd_constraints, virtually_cyclic_classes_odd};
use lowk::freeprod::{FreeProductWord, Syllable};
use lowk::galois::{phi_image, FieldDescriptor};
use lowk::groups::{build_cyclic, build_dicyclic, FiniteGroup};
use lowk::lowerk::{whitehead_closed_form, whitehead_rank_census, AbelianGroupExpr, Copies, SummandName};

fn model() -> &'static B4Model {
    static M: OnceLock<B4Model> = OnceLock::new();
    M.get_or_init(|| B4Model::build().unwrap())
}

/// Raw words over the two factors of `Q16 ∗_{Q8} T*`.
fn raw_word() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..2, 0usize..48), 0..12)
        .prop_map(|w| w.into_iter().map(|(s, e)| (s, e % if s == 0 { 16 } else { 24 })).collect())
}

fn element(w: &[(usize, usize)]) -> AmalgamElement {
    model().spec().reduce(w).unwrap()
}

fn fold(spec: &AmalgamSpec, w: &[(usize, usize)]) -> AmalgamElement {
    w.iter()
        .fold(spec.identity(), |acc, &(s, e)| spec.multiply(&acc, &spec.from_factor(s, e)))
}

fn fp_word() -> impl Strategy<Value = FreeProductWord> {
    prop::collection::vec(prop_oneof![Just(Syllable::A(1)), Just(Syllable::A(2)), Just(Syllable::B)], 0..16)
        .prop_map(FreeProductWord::from_syllables)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduce_agrees_with_multiplication(w in raw_word()) {
        let spec = model().spec();
        prop_assert_eq!(spec.reduce(&w).unwrap(), fold(spec, &w));
    }

    #[test]
    fn normal_form_ignores_core_shuffles(w in raw_word(), pos in 0usize..12, f in 0usize..8) {
        // Moving a core element from one factor to the other does not change the element.
        let spec = model().spec();
        let pos = pos.min(w.len());
        let mut v = w.clone();
        let f0 = spec.embed(0, f);
        let f1inv = spec.factor(1).inv(spec.embed(1, f));
        v.insert(pos, (1, f1inv));
        v.insert(pos, (0, f0));
        prop_assert_eq!(spec.reduce(&v).unwrap(), spec.reduce(&w).unwrap());
    }

    #[test]
    fn associativity(a in raw_word(), b in raw_word(), c in raw_word()) {
        let spec = model().spec();
        let (a, b, c) = (element(&a), element(&b), element(&c));
        prop_assert_eq!(
            spec.multiply(&spec.multiply(&a, &b), &c),
            spec.multiply(&a, &spec.multiply(&b, &c))
        );
    }

    #[test]
    fn inverse_cancels(a in raw_word()) {
        let spec = model().spec();
        let a = element(&a);
        prop_assert!(spec.is_identity(&spec.multiply(&a, &spec.invert(&a))));
        prop_assert!(spec.is_identity(&spec.multiply(&spec.invert(&a), &a)));
    }

    #[test]
    fn torsion_matches_exponent_oracle(a in raw_word()) {
        let spec = model().spec();
        let a = element(&a);
        prop_assert_eq!(spec.has_finite_order(&a), spec.is_identity(&spec.pow(&a, 24)));
    }

    #[test]
    fn torsion_is_conjugation_invariant(a in raw_word(), g in raw_word()) {
        let spec = model().spec();
        let (a, g) = (element(&a), element(&g));
        prop_assert_eq!(spec.has_finite_order(&a), spec.has_finite_order(&spec.conjugate(&g, &a)));
    }

    #[test]
    fn pi_and_psi_are_homomorphisms(seed in any::<u64>()) {
        use rand::SeedableRng;
        let m = model();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let (u, eu) = m.random_sigma_word(&mut rng, 10);
        let (v, ev) = m.random_sigma_word(&mut rng, 10);
        let uv = m.spec().multiply(&u, &v);
        prop_assert_eq!(m.pi(&uv), (eu + ev).rem_euclid(6) as u64);
        prop_assert_eq!(m.psi(&uv).unwrap(), m.psi(&u).unwrap().compose(&m.psi(&v).unwrap()));
        prop_assert_eq!(m.rho(&uv), m.rho(&u).mul(&m.rho(&v)));
    }

    #[test]
    fn free_product_group_laws(u in fp_word(), v in fp_word(), w in fp_word()) {
        prop_assert!(u.mul(&u.inv()).is_empty());
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        prop_assert_eq!(u.mul(&v).abelianize(), (u.abelianize() + v.abelianize()) % 6);
        prop_assert_eq!(u.to_string().parse::<FreeProductWord>().unwrap(), u);
    }

    #[test]
    fn odd_classification_revalidates(k in 1u64..40) {
        let n = 2 * k + 1;
        let list = virtually_cyclic_classes_odd(n).unwrap();
        for d in &list {
            prop_assert!(satisfies_odd_constraints(n, d), "n={} {}", n, d.name);
        }
        prop_assert!(list.windows(2).all(|w| w[0].kind < w[1].kind));
        prop_assert_eq!(list, virtually_cyclic_classes_odd(n).unwrap());
    }

    #[test]
    fn finite_classes_embed_by_order_census(k in 1u64..15) {
        let n = 2 * k + 1;
        let build = |d: &lowk::classify::SubgroupDescriptor| -> FiniteGroup {
            match d.kind {
                lowk::classify::SubgroupKind::Cyclic { m } => build_cyclic(m).unwrap(),
                lowk::classify::SubgroupKind::Dicyclic { m } => build_dicyclic(m).unwrap(),
                _ => unreachable!(),
            }
        };
        let maximal: Vec<_> = maximal_finite_subgroups(n).unwrap().iter().map(|d| build(d).order_census()).collect();
        for d in virtually_cyclic_classes_odd(n).unwrap().iter().filter(|d| d.order().is_some()) {
            let c = build(d).order_census();
            let fits = maximal.iter().any(|m| c.iter().all(|(o, k)| m.get(o).is_some_and(|mk| mk >= k)));
            prop_assert!(fits, "n={} {}", n, d.name);
        }
    }

    #[test]
    fn maximal_finite_sorted_and_flagged(n in 1u64..200) {
        let list = maximal_finite_subgroups(n).unwrap();
        prop_assert!(list.windows(2).all(|w| w[0].kind < w[1].kind));
        prop_assert!(list.iter().all(|d| d.maximal == Some(true)));
    }

    #[test]
    fn r1_equals_r2_in_small_orders(m in 2u64..60) {
        let g = build_dicyclic(m).unwrap();
        let c = conjugacy_classes(&g, BOUND).unwrap();
        for d in [1, 2, 3, 4, 6] {
            prop_assert_eq!(c.r1(d), c.r2(d));
        }
    }

    #[test]
    fn whitehead_closed_form_matches_census(m in 1u64..80, dic in any::<bool>()) {
        let g = if dic { build_dicyclic(m + 1).unwrap() } else { build_cyclic(m).unwrap() };
        prop_assert_eq!(whitehead_closed_form(&g).unwrap(), whitehead_rank_census(&g, BOUND).unwrap());
    }

    #[test]
    fn galois_image_is_a_subgroup(n in 1u64..200, p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        for f in [FieldDescriptor::Rational, FieldDescriptor::PAdic(p), FieldDescriptor::FinitePrime(p)] {
            let Ok(img) = phi_image(f, n) else {
                prop_assert!(matches!(f, FieldDescriptor::FinitePrime(_)) && n % p == 0);
                continue;
            };
            prop_assert!(img.contains(1 % n.max(2)) || n == 1);
            for &a in &img.residues {
                for &b in &img.residues {
                    prop_assert!(img.contains(a * b % n) || n == 1);
                }
            }
        }
    }

    #[test]
    fn abelian_expr_canonical(a in 0u64..4, t in prop::collection::vec(2u64..9, 0..5), k in 0u64..3) {
        let mut x = AbelianGroupExpr::free(a);
        for &n in &t {
            x = x.with_torsion(n, 1);
        }
        let y = AbelianGroupExpr::summand(SummandName::Z2Countable, Copies::Finite(k))
            .with_summand(SummandName::WExponent2Or4, Copies::Countable);
        prop_assert_eq!(x.direct_sum(&y), y.direct_sum(&x));
        prop_assert_eq!(
            serde_json::to_string(&x.direct_sum(&y)).unwrap(),
            serde_json::to_string(&y.direct_sum(&x)).unwrap()
        );
        prop_assert!(x.torsion().windows(2).all(|w| w[0] <= w[1]));
    }
}
