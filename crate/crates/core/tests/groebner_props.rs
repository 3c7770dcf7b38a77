mod common;

use codim3::groebner::{minimal_generators, reduced_groebner_basis};
use codim3::poly::random_homogeneous;
use codim3::{Field, Ideal, Polynomial};
use common::{brute_force_hilbert, gf3, monomial_ideal, presentation, random_artinian_monomials, Q};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_ideal<F: Field>(field: F, rng: &mut ChaCha8Rng) -> Ideal<F> {
    let k = rng.gen_range(3..6);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(2..4);
            random_homogeneous(field, d, rng.gen_range(0..4), rng).unwrap()
        })
        .collect();
    Ideal::new(field, gens)
}

fn shuffled_and_scaled<F: Field>(ideal: &Ideal<F>, rng: &mut ChaCha8Rng) -> Ideal<F> {
    let field = ideal.field();
    let mut gens: Vec<Polynomial<F>> = ideal
        .generators()
        .iter()
        .map(|g| g.scale(&field.random_nonzero(rng)))
        .collect();
    gens.shuffle(rng);
    Ideal::new(field, gens)
}

/// A random combination of the generators in degree `d`.
fn redundant_element<F: Field>(ideal: &Ideal<F>, d: u32, rng: &mut ChaCha8Rng) -> Polynomial<F> {
    let field = ideal.field();
    let mut acc = Polynomial::zero(field, d);
    for g in ideal.generators() {
        if g.degree() > d {
            continue;
        }
        let c = if g.degree() == d {
            Polynomial::monomial(field, codim3::Monomial::ONE, field.random_nonzero(rng))
        } else {
            random_homogeneous(field, d - g.degree(), 0, rng).unwrap()
        };
        acc = acc.add(&g.mul(&c)).unwrap();
    }
    acc
}

fn check_basis_properties<F: Field>(field: F, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ideal = random_ideal(field, &mut rng);
    let gb = reduced_groebner_basis(&ideal).unwrap();

    for g in ideal.generators() {
        prop_assert!(gb.normal_form(g).is_zero());
    }
    let f = random_homogeneous(field, rng.gen_range(1..6), 0, &mut rng).unwrap();
    let nf = gb.normal_form(&f);
    prop_assert_eq!(gb.normal_form(&nf), nf);

    let other = shuffled_and_scaled(&ideal, &mut rng);
    let again = reduced_groebner_basis(&other).unwrap();
    prop_assert_eq!(again.elements(), gb.elements());

    let mu = minimal_generators(&ideal).unwrap().len();
    prop_assert_eq!(minimal_generators(&other).unwrap().len(), mu);
    let mut gens = other.generators().to_vec();
    gens.push(redundant_element(&ideal, rng.gen_range(3..5), &mut rng));
    prop_assert_eq!(minimal_generators(&Ideal::new(field, gens)).unwrap().len(), mu);
    Ok(())
}

proptest! {
    #![proptest_config(common::cases(48))]

    #[test]
    fn basis_properties_gf3(seed: u64) {
        check_basis_properties(gf3(), seed)?;
    }

    #[test]
    fn basis_properties_rationals(seed: u64) {
        check_basis_properties(Q, seed)?;
    }

    #[test]
    fn monomial_hilbert_function_matches_enumeration(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = random_artinian_monomials(&mut rng, 12);
        let q = presentation(&monomial_ideal(gf3(), &gens));
        let brute = brute_force_hilbert(&gens, q.top_degree() + 2);
        let mut hf = q.hilbert_function();
        hf.resize(brute.len(), 0);
        prop_assert_eq!(hf, brute);
    }
}
