use artin_core::garside::{delta_word, equal, equal_mod_center, ArtinWord};
use artin_core::homs::{
    compose, make_chi, make_inner, make_zeta, same_homomorphism, verify_hom, HomSpec,
};
use artin_core::kernel::{lift_commutes_with_projection, lift_endomorphism, LiftError, LiftInput};
use artin_core::CoxType;

fn d(n: usize) -> CoxType {
    CoxType::d(n).unwrap()
}

fn perturbed(h: &HomSpec, ks: &[i64]) -> LiftInput {
    let typ = h.source();
    let delta = delta_word(typ);
    let images = h
        .images()
        .iter()
        .zip(ks)
        .map(|(w, &k)| w.concat(&delta.pow(typ.kappa() * k)).unwrap())
        .collect();
    LiftInput::new(typ.rank(), images).unwrap()
}

#[test]
fn lift_through_interchange_files() {
    let n = 5;
    let h = compose(&make_zeta(n).unwrap(), &make_chi(n).unwrap()).unwrap();
    let input = perturbed(&h, &[0, 2, -1, 1, -2]);
    let text = input.to_homspec().to_interchange();
    let read = LiftInput::from_homspec(&HomSpec::from_interchange(&text).unwrap()).unwrap();
    assert_eq!(read, input);

    let lift = lift_endomorphism(&read).unwrap();
    assert_eq!(lift.corrections, vec![0, -2, 1, -1, 2]);
    assert!(verify_hom(&lift.hom));
    assert!(same_homomorphism(&lift.hom, &h).unwrap());
    assert!(lift_commutes_with_projection(&lift.hom, &read).unwrap());
    let round = HomSpec::from_interchange(&lift.hom.to_interchange()).unwrap();
    assert_eq!(round, lift.hom);
}

#[test]
fn lift_keeps_first_image_and_projects_back() {
    for n in [4, 6, 7] {
        let g = ArtinWord::parse(d(n), "t1 t3^-1 t2").unwrap();
        let h = make_inner(&g);
        let ks: Vec<i64> = (0..n as i64).map(|i| (i % 5) - 2).collect();
        let input = perturbed(&h, &ks);
        let lift = lift_endomorphism(&input).unwrap();
        assert!(equal(&lift.hom.images()[0], &input.candidate_images[0]).unwrap());
        for (x, y) in lift.hom.images().iter().zip(&input.candidate_images) {
            assert!(equal_mod_center(x, y).unwrap());
        }
        // the lift is h twisted uniformly by the first perturbation
        assert!(
            same_homomorphism(&lift.hom, &perturbed(&h, &vec![ks[0]; n]).to_homspec()).unwrap()
        );
    }
}

#[test]
fn broken_candidates_are_rejected() {
    let n = 6;
    let t = d(n);
    let mut images: Vec<ArtinWord> = (1..=n)
        .map(|i| ArtinWord::generator(t, i).unwrap())
        .collect();
    images[3] = ArtinWord::parse(t, "t4 t4").unwrap();
    let err = lift_endomorphism(&LiftInput::new(n, images).unwrap()).unwrap_err();
    assert!(
        matches!(
            err,
            LiftError::NotCentral(..) | LiftError::RelationFails(..)
        ),
        "{err}"
    );
    assert!(LiftInput::new(n, vec![]).is_err());
    assert!(LiftInput::from_homspec(&artin_core::homs::make_pi(n).unwrap()).is_err());
}
