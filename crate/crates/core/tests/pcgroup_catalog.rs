use capitulation::abgroup::Homomorphism;
use capitulation::pcgroup::{
    builtin_catalog, parse_catalog, random_transversal, transfer,
    transfer_with_transversal, write_catalog, PcGroup, PcSubgroup,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn catalog_groups() -> Vec<PcGroup> {
    builtin_catalog().groups().unwrap()
}

#[test]
fn catalog_round_trips_through_text() {
    let c = builtin_catalog();
    let again = parse_catalog(&write_catalog(&c)).unwrap();
    assert_eq!(again.presentations, c.presentations);
}

#[test]
fn multiplication_tables_are_groups() {
    for g in catalog_groups().iter().filter(|g| g.order() <= 81) {
        assert!(g.is_associative(), "{}", g.name());
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(0, x), x);
        }
    }
}

#[test]
fn transfer_is_a_homomorphism_elementwise() {
    // Ver(xy) = Ver(x) + Ver(y), evaluated from the products t_i x t_j^-1
    for g in catalog_groups().iter().filter(|g| g.order() <= 81) {
        for h in g.subgroups_index_p_above_derived().unwrap() {
            let t = transfer(g, &h).unwrap();
            let ver = |x| t.hom.apply(&t.source.project(g, x));
            for x in g.elements().step_by(5) {
                for y in g.elements().step_by(7) {
                    let lhs = ver(g.mul(x, y));
                    let rhs = t.target.group.add(&ver(x), &ver(y));
                    assert_eq!(lhs, rhs, "{}", g.name());
                }
            }
        }
    }
}

#[test]
fn inclusion_after_transfer_is_pth_power() {
    for g in catalog_groups() {
        let p = g.prime() as i64;
        for h in g.subgroups_index_p_above_derived().unwrap() {
            let t = transfer(&g, &h).unwrap();
            let comp = t.inclusion(&g).unwrap().compose(&t.hom).unwrap();
            assert_eq!(comp, Homomorphism::scalar(&t.source.group, p), "{}", g.name());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_transversals_agree(idx in 0usize..64, sub in 0usize..64, seed in any::<u64>()) {
        let groups = catalog_groups();
        let g = &groups[idx % groups.len()];
        let subs = g.subgroups_index_p_above_derived().unwrap();
        prop_assume!(!subs.is_empty());
        let h: &PcSubgroup = &subs[sub % subs.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_transversal(g, h, &mut rng);
        let a = transfer_with_transversal(g, h, &t).unwrap();
        let b = transfer(g, h).unwrap();
        prop_assert_eq!(a.hom, b.hom);
    }

    #[test]
    fn element_orders_divide_group_order(idx in 0usize..64, x in any::<u32>()) {
        let groups = catalog_groups();
        let g = &groups[idx % groups.len()];
        let x = x % g.order();
        let o = g.element_order(x);
        prop_assert_eq!(g.order() % o, 0);
        prop_assert_eq!(g.pow(x, o as i64), 0);
    }
}
