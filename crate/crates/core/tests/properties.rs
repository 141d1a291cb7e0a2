use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use roughmat::bridge::{circuit_approx, induced_matroid, induced_relation};
use roughmat::enumerate::{
    all_matroids, all_pers, all_relations, per_from_blocks, random_binary_matroid, random_per,
    random_relation, random_subset,
};
use roughmat::io::{parse_relation, RelationFile};
use roughmat::matroid::{check_circuit_axioms, check_independence_axioms, union};
use roughmat::rough::{approx_report, lower, upper};
use roughmat::verify::check_intersection_inclusion;
use roughmat::{ElementSet, Matroid, Rational, Relation, Universe};

fn universe(n: usize) -> Universe {
    Universe::alphabetic(n).unwrap()
}

fn per_strategy(max_n: usize) -> impl Strategy<Value = Relation> {
    (0..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_per(&mut ChaCha8Rng::seed_from_u64(seed), &universe(n)))
}

fn relation_strategy(max_n: usize) -> impl Strategy<Value = Relation> {
    (0..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_relation(&mut ChaCha8Rng::seed_from_u64(seed), &universe(n)))
}

fn check_per_invariants(r: &Relation) {
    let u = r.universe();
    for x in 0..u.len() {
        let s = r.successors(x);
        if !s.is_empty() {
            assert!(s.contains(x), "nonempty neighborhood contains its element");
        }
    }
    let classes = r.classes().unwrap();
    let mut covered = classes.isolated;
    for (i, &block) in classes.blocks.iter().enumerate() {
        assert!(!block.intersects(covered));
        covered = covered.union(block);
        for x in block.iter() {
            for y in block.iter() {
                assert!(r.contains(x, y));
            }
            for (j, other) in classes.blocks.iter().enumerate() {
                if i != j {
                    assert!(other.iter().all(|y| !r.contains(x, y)));
                }
            }
        }
    }
    assert_eq!(covered, u.full());
    assert!(classes.isolated.iter().all(|x| r.successors(x).is_empty()));
}

#[test]
fn per_invariants_on_every_small_per() {
    for n in 0..=4 {
        all_pers(&universe(n)).iter().for_each(check_per_invariants);
    }
}

#[test]
fn intersection_inclusion_on_every_small_pair() {
    for n in 0..=4 {
        let pers = all_pers(&universe(n));
        for a in &pers {
            for b in &pers {
                assert!(a.intersect(b).unwrap().is_per());
                assert_eq!(check_intersection_inclusion(a, b).unwrap(), None);
            }
        }
    }
}

#[test]
fn quality_range_is_logged_not_bounded() {
    let mut above_one = 0usize;
    let mut undefined = 0usize;
    let mut total = 0usize;
    for n in 0..=5 {
        for r in all_pers(&universe(n)) {
            for x in r.universe().subsets() {
                let rep = approx_report(&r, x).unwrap();
                total += 1;
                match (rep.alpha, rep.rho) {
                    (Some(a), Some(p)) => {
                        assert!(a >= Rational::from_integer(0));
                        assert_eq!(a + p, Rational::from_integer(1));
                        above_one += (a > Rational::from_integer(1)) as usize;
                    }
                    (None, None) => undefined += 1,
                    other => panic!("alpha and rho must be defined together: {other:?}"),
                }
                assert_eq!(rep.precise, rep.lower == rep.upper);
                let domain = r.universe().full().difference(r.isolated());
                assert!(rep.lower.intersection(domain).is_subset(rep.upper));
            }
        }
    }
    println!("alpha > 1 in {above_one} of {total} queries; undefined in {undefined}");
    assert!(above_one > 0);
}

#[test]
fn explicit_and_circuit_presentations_agree() {
    for n in 0..=4 {
        for m in all_matroids(n).unwrap() {
            let circuits = m.circuits();
            assert!(check_circuit_axioms(&circuits).unwrap().valid);
            for c in circuits.members() {
                assert!(!m.is_independent(*c));
                assert!(c.iter().all(|e| m.is_independent(c.without(e))));
            }
            let rebuilt = Matroid::from_circuits(m.universe(), circuits.clone()).unwrap();
            assert!(rebuilt.agrees_with(&m).unwrap());
            assert_eq!(rebuilt.circuits(), circuits);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let u = universe(5);
    for _ in 0..100 {
        let m = random_binary_matroid(&mut rng, &u, 3).unwrap();
        let rebuilt = Matroid::from_circuits(&u, m.circuits()).unwrap();
        assert!(rebuilt.agrees_with(&m).unwrap());
    }
}

#[test]
fn union_is_commutative_and_associative() {
    for n in 0..=3 {
        let ms = all_matroids(n).unwrap();
        for a in &ms {
            for b in &ms {
                let ab = union(a, b).unwrap();
                assert!(ab.agrees_with(&union(b, a).unwrap()).unwrap());
                assert!(
                    check_independence_axioms(&ab.independents().unwrap())
                        .unwrap()
                        .valid
                );
                for c in &ms {
                    let left = union(&ab, c).unwrap();
                    let right = union(a, &union(b, c).unwrap()).unwrap();
                    assert!(left.agrees_with(&right).unwrap());
                }
            }
        }
    }
    let ms = all_matroids(4).unwrap();
    for a in &ms {
        for b in &ms {
            assert!(union(a, b)
                .unwrap()
                .agrees_with(&union(b, a).unwrap())
                .unwrap());
        }
    }
}

#[test]
fn pair_circuit_matroids_induce_their_own_relation() {
    let u = universe(4);
    for r in all_pers(&u) {
        let m = induced_matroid(&r).unwrap();
        let back = induced_relation(m.matroid()).unwrap();
        let again = induced_matroid(&back).unwrap();
        assert_eq!(again.circuits(), m.circuits());
    }
}

#[test]
fn property_flags_match_definitions_on_all_small_relations() {
    for n in 0..=3 {
        let u = universe(n);
        for r in all_relations(&u) {
            let p = r.check_properties();
            let pairs: Vec<(usize, usize)> = r.pairs().collect();
            let symmetric = pairs.iter().all(|&(x, y)| r.contains(y, x));
            let transitive = pairs
                .iter()
                .all(|&(x, y)| (0..n).all(|z| !r.contains(y, z) || r.contains(x, z)));
            let reflexive = (0..n).all(|x| r.contains(x, x));
            assert_eq!(
                (p.symmetric, p.transitive, p.reflexive),
                (symmetric, transitive, reflexive)
            );
            if let Some((x, y)) = p.symmetry_witness {
                assert!(r.contains(x, y) && !r.contains(y, x));
            }
            if let Some((x, y, z)) = p.transitivity_witness {
                assert!(r.contains(x, y) && r.contains(y, z) && !r.contains(x, z));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_pers_keep_their_invariants(r in per_strategy(10)) {
        check_per_invariants(&r);
    }

    #[test]
    fn circuit_route_matches_definition(r in per_strategy(12), seed in any::<u64>()) {
        let ind = induced_matroid(&r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let x = random_subset(&mut rng, r.universe());
            prop_assert_eq!(circuit_approx(&ind, x).unwrap(), approx_report(&r, x).unwrap());
        }
    }

    #[test]
    fn lower_upper_are_monotone_and_dual(r in relation_strategy(5), a in any::<u64>(), b in any::<u64>()) {
        let full = r.universe().full();
        let x = ElementSet(a & full.bits());
        let y = x.union(ElementSet(b & full.bits()));
        prop_assert!(lower(&r, x).unwrap().is_subset(lower(&r, y).unwrap()));
        prop_assert!(upper(&r, x).unwrap().is_subset(upper(&r, y).unwrap()));
        prop_assert_eq!(upper(&r, x).unwrap(), full.difference(lower(&r, full.difference(x)).unwrap()));
        prop_assert_eq!(lower(&r, ElementSet::EMPTY).unwrap(), r.isolated());
        prop_assert_eq!(upper(&r, full).unwrap(), full.difference(r.isolated()));
    }

    #[test]
    fn induced_relation_of_any_matroid_is_per(n in 1usize..=6, rank in 1u32..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_binary_matroid(&mut rng, &universe(n), rank).unwrap();
        let rel = induced_relation(&m).unwrap();
        prop_assert!(rel.is_per());
        prop_assert_eq!(rel.isolated(), ElementSet::EMPTY);
    }

    #[test]
    fn canonical_order_matches_index_sequences(a in any::<u32>(), b in any::<u32>()) {
        let (sa, sb) = (ElementSet(a as u64), ElementSet(b as u64));
        let va: Vec<usize> = sa.iter().collect();
        let vb: Vec<usize> = sb.iter().collect();
        prop_assert_eq!(sa.cmp(&sb), va.len().cmp(&vb.len()).then(va.cmp(&vb)));
    }

    #[test]
    fn relation_files_reproduce_relations(r in relation_strategy(6)) {
        let text = serde_json::to_string(&RelationFile::from_relation(&r)).unwrap();
        prop_assert_eq!(parse_relation(&text).unwrap(), r);
    }

    #[test]
    fn blocks_build_the_expected_classes(n in 0usize..=8, seed in any::<u64>()) {
        let u = universe(n);
        let r = random_per(&mut ChaCha8Rng::seed_from_u64(seed), &u);
        let classes = r.classes().unwrap();
        prop_assert_eq!(per_from_blocks(&u, &classes.blocks), r);
    }
}
