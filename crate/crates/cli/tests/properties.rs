use bredon_cli::formats::{parse_document, to_json, BundleFile, Document, GcwFile, GroupoidFile, SpaceFile};
use bredon_cli::generate::{random_gcw, random_groupoid, random_principal_bundle, random_space, trial_rng, Limits};
use bredon_cli::verify::{run_trial, Property};
use bredon_core::gcw::validate_gcw;
use bredon_core::groupoid::validate_groupoid;
use bredon_core::gspace::validate_gspace;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_complexes_round_trip(seed in any::<u64>()) {
        let x = random_gcw(&mut trial_rng(seed, 0), 8);
        let text = to_json(&GcwFile::new(&x).unwrap());
        let Document::Gcw(f) = parse_document("x", &text).unwrap() else { panic!("kind") };
        let back = validate_gcw(&f.to_raw().unwrap()).unwrap();
        prop_assert_eq!(to_json(&GcwFile::new(&back).unwrap()), text);
    }

    #[test]
    fn random_spaces_round_trip(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 0);
        let g = random_groupoid(&mut rng, &Limits::default());
        let y = random_space(&mut rng, &g, 12, false, "y");
        let text = to_json(&SpaceFile::new(&g, &y));
        let Document::Space(f) = parse_document("y", &text).unwrap() else { panic!("kind") };
        let g2 = validate_groupoid(&f.groupoid.to_raw()).unwrap();
        prop_assert_eq!(to_json(&GroupoidFile::new(&g2)), to_json(&GroupoidFile::new(&g)));
        let y2 = validate_gspace(&g2, &f.to_raw()).unwrap();
        prop_assert_eq!(to_json(&SpaceFile::new(&g2, &y2)), text);
    }

    #[test]
    fn random_bundles_round_trip(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 0);
        let g = random_groupoid(&mut rng, &Limits { max_objects: 3, max_group: 6, max_points: 12 });
        let p = random_principal_bundle(&mut rng, &g, 12);
        let text = to_json(&BundleFile::new(&g, &p));
        let Document::Bundle(f) = parse_document("p", &text).unwrap() else { panic!("kind") };
        prop_assert_eq!(Document::Bundle(f).to_json(), text);
    }

    #[test]
    fn trials_depend_only_on_seed_and_index(seed in any::<u64>(), trial in 0u64..1000) {
        let limits = Limits { max_objects: 3, max_group: 6, max_points: 10 };
        for p in [Property::Quots, Property::Triv, Property::Orbitcat] {
            prop_assert_eq!(run_trial(p, seed, trial, &limits), run_trial(p, seed, trial, &limits));
        }
    }
}
