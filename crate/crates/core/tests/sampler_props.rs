mod common;

use codim3::groebner::{minimal_generators, reduced_groebner_basis, socle_dimension};
use codim3::sampler::{worker_rng, AttemptOutcome, Sampler, SamplerConfig};
use codim3::Field;
use common::gf3;
use proptest::prelude::*;

fn config(mn: usize, high_deg: u32, num_terms: usize, use_n: bool, max_tries: u32) -> SamplerConfig {
    SamplerConfig {
        mn,
        high_deg,
        num_terms,
        use_n,
        max_tries,
        ..SamplerConfig::default()
    }
}

fn summary<F: Field>(o: &AttemptOutcome<F>) -> (Vec<String>, Option<String>) {
    (
        o.ideal.generators().iter().map(|g| g.to_string()).collect(),
        o.failure.map(|f| f.to_string()),
    )
}

proptest! {
    #![proptest_config(common::cases(48))]

    #[test]
    fn identical_seeds_give_identical_outcomes(
        seed: u64, mn in 2usize..6, high in 2u32..5, terms in 0usize..3, use_n: bool
    ) {
        let cfg = config(mn, high, terms, use_n, 3);
        let mut a = Sampler::new(gf3(), cfg.clone(), worker_rng(seed, 1)).unwrap();
        let mut b = Sampler::new(gf3(), cfg, worker_rng(seed, 1)).unwrap();
        for _ in 0..6 {
            prop_assert_eq!(summary(&a.generate().unwrap()), summary(&b.generate().unwrap()));
        }
    }

    #[test]
    fn outcomes_respect_the_contract(
        seed: u64, mn in 2usize..7, high in 2u32..5, terms in 0usize..4, use_n: bool, max_tries in 0u32..4
    ) {
        let cfg = config(mn, high, terms, use_n, max_tries);
        let mut s = Sampler::new(gf3(), cfg, worker_rng(seed, 0)).unwrap();
        for _ in 0..6 {
            let out = s.generate().unwrap();
            prop_assert!(s.num_tries() <= max_tries);
            prop_assert_eq!(out.ideal.is_zero(), out.failure.is_some());
            if out.failure.is_some() {
                continue;
            }
            prop_assert_eq!(s.num_tries(), 0);
            for g in out.ideal.generators() {
                prop_assert!(g.terms().iter().all(|(m, _)| m.degree() == g.degree()));
                if terms == 1 {
                    prop_assert_eq!(g.num_terms(), 1);
                }
            }
            prop_assert_eq!(reduced_groebner_basis(&out.ideal).unwrap().codimension(), 3);
            if use_n {
                prop_assert_eq!(socle_dimension(&out.ideal).unwrap(), mn);
            } else {
                prop_assert_eq!(minimal_generators(&out.ideal).unwrap().len(), mn);
            }
        }
    }
}
