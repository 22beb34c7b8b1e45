mod common;

use common::Raw;
use onerel::automorphisms::{example_endomorphism, InnerSearch, NotInnerReason};
use onerel::{
    certify_automorphism, example_automorphism, Automorphism, Endomorphism, ExampleKind, KernelVerdict,
    Presentation, Sign, Word,
};
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

fn raw(w: &Word) -> Raw {
    w.letters()
        .iter()
        .map(|l| if l.sign == Sign::Pos { l.index as i32 } else { -(l.index as i32) })
        .collect()
}

fn raw_images(e: &Endomorphism) -> Vec<Raw> {
    e.images().iter().map(raw).collect()
}

fn endo(rank: usize, images: &[Raw]) -> Endomorphism {
    Endomorphism::new(rank, images.iter().map(|s| Word::from_signed(s, rank).unwrap()).collect()).unwrap()
}

fn word(rank: i32, max_len: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec((1..=rank, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..max_len)
        .prop_map(|v| common::reduce(&v))
}

/// A random product of elementary Nielsen automorphisms, as an image tuple.
fn random_automorphism(rng: &mut StdRng, rank: usize, steps: usize) -> Vec<Raw> {
    let gens = common::nielsen_generators(rank);
    let mut images: Vec<Raw> = (1..=rank as i32).map(|i| vec![i]).collect();
    for _ in 0..steps {
        let g = &gens[rng.gen_range(0..gens.len())];
        images = g.iter().map(|img| common::substitute(&images, img)).collect();
    }
    images
}

proptest! {
    #[test]
    fn apply_matches_substitution(images in prop::collection::vec(word(3, 6), 3), w in word(3, 12)) {
        let e = endo(3, &images);
        let got = e.apply(&Word::from_signed(&w, 3).unwrap()).unwrap();
        prop_assert_eq!(raw(&got), common::substitute(&images, &w));
    }

    #[test]
    fn apply_is_a_homomorphism(images in prop::collection::vec(word(3, 6), 3), a in word(3, 10), b in word(3, 10)) {
        let e = endo(3, &images);
        let (a, b) = (Word::from_signed(&a, 3).unwrap(), Word::from_signed(&b, 3).unwrap());
        prop_assert_eq!(e.apply(&(&a * &b)).unwrap(), &e.apply(&a).unwrap() * &e.apply(&b).unwrap());
    }

    #[test]
    fn composition_and_abelian_matrices(f in prop::collection::vec(word(3, 5), 3), g in prop::collection::vec(word(3, 5), 3), w in word(3, 8)) {
        let (f, g) = (endo(3, &f), endo(3, &g));
        let fg = f.compose(&g).unwrap();
        let w = Word::from_signed(&w, 3).unwrap();
        prop_assert_eq!(fg.apply(&w).unwrap(), f.apply(&g.apply(&w).unwrap()).unwrap());
        prop_assert_eq!(fg.abelian_matrix(), f.abelian_matrix().product(&g.abelian_matrix()));
    }

    #[test]
    fn conjugator_of_inner_automorphism_is_recovered(g in word(4, 12), rank in 2usize..5) {
        let g: Raw = g.into_iter().filter(|l| l.unsigned_abs() as usize <= rank).collect();
        let g = Word::from_signed(&g, rank).unwrap();
        prop_assert_eq!(Automorphism::inner_by(&g).find_conjugator(), InnerSearch::Inner(g));
    }
}

#[test]
fn random_nielsen_products_certify() {
    let mut rng = StdRng::seed_from_u64(11);
    for rank in 2..=4 {
        for _ in 0..300 {
            let steps = rng.gen_range(0..12);
            let images = random_automorphism(&mut rng, rank, steps);
            assert!(common::is_basis_folding(&images, rank));
            let e = endo(rank, &images);
            let a = certify_automorphism(&e).unwrap_or_else(|n| panic!("{e}: {n}"));
            assert_eq!(raw_images(a.forward()), images);
            assert!(a.forward().compose(a.inverse_map()).unwrap().is_identity());
            assert!(a.inverse_map().compose(a.forward()).unwrap().is_identity());
        }
    }
}

#[test]
fn certification_agrees_with_folding() {
    let mut rng = StdRng::seed_from_u64(5);
    let mut bases = 0;
    for _ in 0..3000 {
        let rank = rng.gen_range(2..=3);
        let images: Vec<Raw> = (0..rank)
            .map(|_| {
                let len = rng.gen_range(1..5);
                let v: Raw = (0..len)
                    .map(|_| {
                        let i = rng.gen_range(1..=rank as i32);
                        if rng.gen() { i } else { -i }
                    })
                    .collect();
                common::reduce(&v)
            })
            .collect();
        let oracle = common::is_basis_folding(&images, rank);
        bases += usize::from(oracle);
        assert_eq!(certify_automorphism(&endo(rank, &images)).is_ok(), oracle, "{images:?}");
    }
    assert!(bases > 50);
}

#[test]
fn abelian_identity_does_not_short_circuit() {
    let (_, phi_o) = example_endomorphism(ExampleKind::OrientablePhi, 4, 1).unwrap();
    assert!(phi_o.abelian_matrix().is_identity());
    assert_eq!(
        phi_o.find_conjugator(),
        InnerSearch::NotInner(NotInnerReason::NotConjugateToGenerator(1))
    );
}

#[test]
fn example_families_certify_where_expected() {
    for (kind, rank) in [
        (ExampleKind::NonorientablePhi, 3),
        (ExampleKind::NonorientablePhi, 4),
        (ExampleKind::OrientablePhi, 4),
        (ExampleKind::OrientablePhi, 6),
        (ExampleKind::OrientablePsi, 4),
        (ExampleKind::OrientablePsi, 6),
    ] {
        let (p, e) = example_endomorphism(kind, rank, 1).unwrap();
        assert!(common::is_basis_folding(&raw_images(&e), rank), "{}", kind.name());
        let (_, a) = example_automorphism(kind, rank, 1).unwrap();
        if !p.satisfies_c_prime(onerel::Rational::new(1, 6)) {
            assert!(a.classify_kernel(&p).is_err());
            continue;
        }
        let verdict = a.classify_kernel(&p).unwrap();
        assert_eq!(verdict, KernelVerdict::NonInnerKernelElement, "{} n={rank}", kind.name());
    }
}

#[test]
fn printed_psi_is_not_a_basis() {
    // The three-factor map in the nonorientable family does not generate
    // F_n; certification must refuse it.
    for rank in 2..=5 {
        let (_, e) = example_endomorphism(ExampleKind::NonorientablePsi, rank, 1).unwrap();
        assert!(!common::is_basis_folding(&raw_images(&e), rank));
        assert!(certify_automorphism(&e).is_err());
    }
}

#[test]
fn kernel_verdicts_for_simple_maps() {
    let r = Word::from_signed(&[1, 1, 2, 2, 3, 3, 4, 4], 4).unwrap();
    let p = Presentation::new(4, r.clone()).unwrap();
    assert_eq!(
        Automorphism::inner_by(&r).classify_kernel(&p).unwrap(),
        KernelVerdict::InnerByR(r.clone())
    );
    let sweep = Automorphism::sweep(4, 2, 1).unwrap();
    assert!(matches!(
        sweep.classify_kernel(&p).unwrap(),
        KernelVerdict::NotInKernel | KernelVerdict::NotInStab
    ));
    let g = Word::from_signed(&[2, -3], 4).unwrap();
    assert_eq!(
        Automorphism::inner_by(&g).classify_kernel(&p).unwrap(),
        KernelVerdict::NotInKernel
    );
}

#[test]
fn kernel_members_stabilize_the_closure() {
    let r = Word::from_signed(&[1, 1, 2, 2, 3, 3, 4, 4], 4).unwrap();
    let p = Presentation::new(4, r.clone()).unwrap();
    let (_, phi) = example_automorphism(ExampleKind::NonorientablePhi, 4, 1).unwrap();
    let candidates = [
        phi.clone(),
        phi.inverse(),
        Automorphism::inner_by(&r),
        phi.compose(&Automorphism::inner_by(&Word::from_signed(&[2], 4).unwrap())).unwrap(),
        Automorphism::sweep(4, 3, -2).unwrap(),
    ];
    for a in &candidates {
        let verdict = a.classify_kernel(&p).unwrap();
        if verdict.in_kernel() {
            assert!(p.in_normal_closure(&a.apply(&r).unwrap()).unwrap());
            assert!(p.in_normal_closure(&a.inverse().apply(&r).unwrap()).unwrap());
        }
    }
}
