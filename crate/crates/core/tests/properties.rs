use std::sync::Arc;

use proptest::prelude::*;

use preproj_core::algebra::{FinDimAlgebra, Side};
use preproj_core::cartan::validate_gcm;
use preproj_core::field::{Field, Rationals};
use preproj_core::module::ModuleRep;
use preproj_core::quiver::{quiver_presentation, PresentationMode};
use preproj_core::rewrite::{default_max_degree, RewriteSystem};
use preproj_core::tilting::IdealFamily;
use preproj_core::weyl::WeylGroup;

struct Instance {
    alg: Arc<FinDimAlgebra<Rationals>>,
    weyl: WeylGroup,
    family: IdealFamily<Rationals>,
}

fn instance(c: Vec<Vec<i64>>, d: Vec<u64>) -> Instance {
    let cd = validate_gcm(c, d, None).unwrap();
    let p = quiver_presentation(&cd, PresentationMode::Pi);
    let rs = RewriteSystem::complete(&Rationals, &p, default_max_degree(&p)).unwrap();
    let alg = Arc::new(FinDimAlgebra::assemble(&rs, &p));
    let weyl = WeylGroup::generate(&cd).unwrap();
    let family = IdealFamily::build(alg.clone(), &weyl);
    Instance { alg, weyl, family }
}

fn b2() -> Instance {
    instance(vec![vec![2, -1], vec![-2, 2]], vec![2, 1])
}

fn g2() -> Instance {
    instance(vec![vec![2, -1], vec![-3, 2]], vec![3, 1])
}

fn element(alg: &FinDimAlgebra<Rationals>, coefs: &[i64]) -> Vec<<Rationals as Field>::Elem> {
    (0..alg.dim()).map(|b| Rationals.from_i64(coefs[b % coefs.len()])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(x in prop::collection::vec(-3i64..=3, 28), y in prop::collection::vec(-3i64..=3, 28), z in prop::collection::vec(-3i64..=3, 28)) {
        let inst = g2();
        let (x, y, z) = (element(&inst.alg, &x), element(&inst.alg, &y), element(&inst.alg, &z));
        let a = inst.alg.multiply(&inst.alg.multiply(&x, &y), &z);
        let b = inst.alg.multiply(&x, &inst.alg.multiply(&y, &z));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn one_is_a_unit(x in prop::collection::vec(-5i64..=5, 10)) {
        let inst = b2();
        let x = element(&inst.alg, &x);
        prop_assert_eq!(inst.alg.multiply(&inst.alg.one(), &x), x.clone());
        prop_assert_eq!(inst.alg.multiply(&x, &inst.alg.one()), x);
    }

    /// Products of the `I_i` along any word follow the Demazure product: an
    /// ascent moves to `w s_i`, a descent leaves `I_w` unchanged.
    #[test]
    fn ideal_products_follow_the_demazure_product(word in prop::collection::vec(0usize..2, 0..9)) {
        for inst in [b2(), g2()] {
            let mut w = inst.weyl.identity();
            for &i in &word {
                if inst.weyl.is_right_ascent(w, i) {
                    w = inst.weyl.right_mul(w, i);
                }
            }
            prop_assert!(inst.family.word_product(&word) == *inst.family.ideal(w));
        }
    }

    #[test]
    fn word_evaluation_respects_length(word in prop::collection::vec(0usize..2, 0..14)) {
        let inst = g2();
        let w = inst.weyl.evaluate(&word);
        let l = inst.weyl.length(w);
        prop_assert!(l <= word.len());
        prop_assert_eq!(l % 2, word.len() % 2);
        prop_assert_eq!(inst.weyl.length(inst.weyl.inverse(w)), l);
        let w0 = inst.weyl.longest_element();
        prop_assert_eq!(inst.weyl.length(inst.weyl.mul(w0, w)), inst.weyl.length(w0) - l);
    }

    #[test]
    fn double_dual_and_sum_additivity(w in 0usize..8, v in 0usize..8) {
        let inst = b2();
        let m = inst.family.ideal(w).module(Side::Left);
        let n = inst.family.ideal(v).module(Side::Left);
        prop_assert!(m.dual().dual().is_isomorphic(&m));
        let sum = ModuleRep::direct_sum(&[&m, &n]);
        let e = ModuleRep::generalized_simple(inst.alg.clone(), 0, Side::Left);
        prop_assert_eq!(sum.hom_dim(&e), m.hom_dim(&e) + n.hom_dim(&e));
        prop_assert_eq!(sum.ext1(&e), m.ext1(&e) + n.ext1(&e));
    }
}
