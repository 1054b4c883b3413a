use lcd_rough::audit::random_space;
use lcd_rough::tarski::{self, DeltaVariant};
use lcd_rough::{ApproxSpace, BlockFamily, ChoiceConfig, EmptyCover, QuotientAlgebra, Subset, ToleranceSpace};
use proptest::prelude::*;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn space(n: usize, seed: u64, p: f64) -> ToleranceSpace {
    random_space(&mut ChaCha8Rng::seed_from_u64(seed), n, p).unwrap()
}

fn config(undefined: bool) -> ChoiceConfig {
    ChoiceConfig {
        empty_cover: if undefined { EmptyCover::Undefined } else { EmptyCover::Defined },
    }
}

fn mask(n: usize, bits: u64) -> Subset {
    Subset::from_bits(bits) & Subset::full(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lower_zero_is_a_disjoint_union_inside(n in 1usize..=10, seed: u64, p in 0.0f64..1.0, a: u64) {
        let ap = ApproxSpace::new(space(n, seed, p), ChoiceConfig::default()).unwrap();
        let a = mask(n, a);
        let pick = ap.primitive_lower(a);
        prop_assert!(pick.is_disjoint());
        prop_assert_eq!(pick.union(ap.family()), ap.lower_zero(a));
        prop_assert!(ap.lower_zero(a).is_subset(a));
        prop_assert!(ap.is_disjoint_block_union(ap.lower_zero(a)));
        // Maximal: no block inside A fits beside the chosen ones.
        for b in ap.family().blocks_within(a) {
            let m = b.members();
            prop_assert!(m.intersects(ap.lower_zero(a)));
        }
    }

    #[test]
    fn upper_zero_is_a_disjoint_cover(n in 1usize..=10, seed: u64, p in 0.0f64..1.0, a: u64, undefined: bool) {
        let ap = ApproxSpace::new(space(n, seed, p), config(undefined)).unwrap();
        let a = mask(n, a);
        match ap.upper_zero(a) {
            Some(u) => {
                prop_assert!(a.is_subset(u));
                prop_assert!(ap.is_disjoint_block_union(u));
                let pick = ap.primitive_upper(a).unwrap();
                prop_assert!(pick.is_disjoint());
                for b in pick.blocks(ap.family()) {
                    prop_assert!(b.members().intersects(a));
                }
            }
            None => prop_assert!(ap.upper_collections(a).is_empty() || (a.is_empty() && undefined)),
        }
    }

    #[test]
    fn lateral_operators_are_monotone(n in 1usize..=10, seed: u64, p in 0.0f64..1.0, a: u64, b: u64) {
        let ap = ApproxSpace::new(space(n, seed, p), ChoiceConfig::default()).unwrap();
        let a = mask(n, a);
        let b = a | mask(n, b);
        prop_assert!(ap.lateral_lower(a).is_subset(ap.lateral_lower(b)));
        prop_assert!(ap.lateral_upper(a).is_subset(ap.lateral_upper(b)));
        prop_assert!(ap.lateral_lower(a).is_subset(a));
        prop_assert!(a.is_subset(ap.lateral_upper(a)));
    }

    #[test]
    fn profiles_are_deterministic(n in 1usize..=10, seed: u64, p in 0.0f64..1.0, a: u64) {
        let s = space(n, seed, p);
        let x = ApproxSpace::new(s.clone(), ChoiceConfig::default()).unwrap();
        let y = ApproxSpace::new(s, ChoiceConfig::default()).unwrap();
        let a = mask(n, a);
        prop_assert_eq!(x.profile(a), y.profile(a));
    }

    #[test]
    fn implication_is_antitone_then_monotone(n in 1usize..=64, u: u64, v: u64, w: u64) {
        let s = Subset::full(n);
        let (u, v) = (mask(n, u), mask(n, v));
        let w = mask(n, w);
        let (u2, v2) = (u | w, v | w);
        prop_assert!(tarski::implies(s, u2, v).is_subset(tarski::implies(s, u, v)));
        prop_assert!(tarski::implies(s, u, v).is_subset(tarski::implies(s, u, v2)));
        prop_assert_eq!(tarski::implies(s, s, v), v);
        prop_assert_eq!(tarski::implies(s, u, u), s);
    }

    #[test]
    fn delta_witnesses_revalidate(n in 1usize..=9, seed: u64, p in 0.0f64..1.0, unions: bool) {
        let s = space(n, seed, p);
        let family = BlockFamily::enumerate(&s);
        let variant = if unions { DeltaVariant::DisjointUnions } else { DeltaVariant::Blocks };
        let delta = tarski::build_delta(&s, &family, variant).unwrap();
        let universe = s.universe();
        prop_assert!(delta.contains(universe));
        for (i, &set) in delta.sets().iter().enumerate() {
            prop_assert!(!delta.witnesses(i).is_empty());
            for w in delta.witnesses(i) {
                prop_assert!(w.part.is_subset(w.base));
                prop_assert_eq!((universe - w.base) | w.part, set);
                match variant {
                    DeltaVariant::Blocks => prop_assert!(family.is_block(w.base)),
                    DeltaVariant::DisjointUnions => {
                        prop_assert!(!w.base.is_empty());
                        prop_assert!(lcd_rough::choice::is_disjoint_block_union(&family, w.base));
                    }
                }
            }
        }
        for w in delta.sets().windows(2) {
            prop_assert!(w[0].cmp_rank(w[1]).is_lt());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotient_tables_rebuild_identically(n in 1usize..=7, seed: u64, p in 0.0f64..1.0, undefined: bool, cells: u64) {
        let s = space(n, seed, p);
        let q = QuotientAlgebra::build(s.clone(), config(undefined)).unwrap();
        let r = QuotientAlgebra::build(s, config(undefined)).unwrap();
        let (tq, tr) = (serde_json::to_string(&q.tables()).unwrap(), serde_json::to_string(&r.tables()).unwrap());
        prop_assert_eq!(tq, tr);

        // Spot-check cells against raw set arithmetic on representatives.
        let ap = q.approx();
        let univ = ap.universe();
        let mut rng = ChaCha8Rng::seed_from_u64(cells);
        let k = q.len() as u64;
        for _ in 0..10 {
            let x = q.ids().nth((rng.next_u64() % k) as usize).unwrap();
            let y = q.ids().nth((rng.next_u64() % k) as usize).unwrap();
            let (a, b) = (q.class(x).representative(), q.class(y).representative());
            prop_assert_eq!(q.sqcup(x, y), q.class_of(a | b));
            prop_assert_eq!(q.sqcap(x, y), q.class_of(a & b));
            prop_assert_eq!(q.L0(x), q.class_of(ap.lower_zero(a)));
            prop_assert_eq!(q.U0(x), ap.upper_zero(a).map(|u| q.class_of(u)));
            prop_assert_eq!(q.Lbreve(x), q.class_of(ap.lateral_lower(a)));
            prop_assert_eq!(q.Ubreve(x), q.class_of(ap.lateral_upper(a)));
            prop_assert_eq!(q.simneg(x), q.class_of(univ - ap.lateral_upper(a)));
            prop_assert_eq!(q.ominus(x), ap.upper_zero(a).map(|u| q.class_of(univ - u)));
            let both = ap.upper_zero(a).zip(ap.upper_zero(b));
            prop_assert_eq!(q.ovee(x, y), both.map(|(u, v)| q.class_of(u | v)));
            prop_assert_eq!(q.owedge(x, y), both.map(|(u, v)| q.class_of(u & v)));
            prop_assert_eq!(q.leq(x, y), ap.profile(a).leq(&ap.profile(b)));
        }
    }

    #[test]
    fn every_subset_lands_in_its_profile_class(n in 1usize..=8, seed: u64, p in 0.0f64..1.0) {
        let q = QuotientAlgebra::build(space(n, seed, p), ChoiceConfig::default()).unwrap();
        let mut seen = 0usize;
        for c in q.classes() {
            prop_assert_eq!(c.members[0], c.representative());
            for &m in &c.members {
                prop_assert_eq!(q.class_of(m), c.id);
                prop_assert_eq!(q.approx().profile(m), c.profile);
            }
            seen += c.members.len();
        }
        prop_assert_eq!(seen, 1usize << n);
        prop_assert_eq!(q.class(q.zero()).representative(), Subset::EMPTY);
        prop_assert!(q.class(q.one()).members.contains(&Subset::full(n)));
    }
}
