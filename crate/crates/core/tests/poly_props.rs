mod common;

use codim3::monomial::Monomial;
use codim3::poly::{parse_polynomial, random_homogeneous};
use codim3::{Field, Polynomial};
use common::{gf3, Q};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_form<F: Field>(field: F, seed: u64, d: u32, t: usize) -> Polynomial<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_homogeneous(field, d, t, &mut rng).unwrap()
}

fn round_trip<F: Field>(field: F, f: &Polynomial<F>) {
    assert_eq!(&parse_polynomial(&f.to_machine_string(), field).unwrap(), f);
}

proptest! {
    #![proptest_config(common::cases(64))]

    #[test]
    fn parse_inverts_printing(seed: u64, d in 1u32..9, t in 0usize..12) {
        round_trip(gf3(), &random_form(gf3(), seed, d, t));
        round_trip(Q, &random_form(Q, seed, d, t));
        round_trip(common::gf(7), &random_form(common::gf(7), seed, d, t));
    }

    #[test]
    fn ring_axioms(seed: u64, d in 1u32..5, e in 1u32..5) {
        let f = gf3();
        let a = random_form(f, seed, d, 0);
        let b = random_form(f, seed ^ 1, d, 0);
        let c = random_form(f, seed ^ 2, e, 0);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&c), c.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).unwrap().mul(&c), a.mul(&c).add(&b.mul(&c)).unwrap());

        let a = random_form(Q, seed, d, 0);
        let b = random_form(Q, seed ^ 1, d, 0);
        let c = random_form(Q, seed ^ 2, e, 0);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).unwrap().mul(&c), a.mul(&c).add(&b.mul(&c)).unwrap());
    }

    #[test]
    fn exact_term_counts(seed: u64, d in 1u32..9, t in 1usize..46) {
        let total = ((d + 1) * (d + 2) / 2) as usize;
        prop_assume!(t <= total);
        prop_assert_eq!(random_form(gf3(), seed, d, t).num_terms(), t);
        prop_assert_eq!(random_form(Q, seed, d, t).num_terms(), t);
    }
}

#[test]
fn grevlex_in_degree_two() {
    let names: Vec<String> = Monomial::all_of_degree(2).iter().map(|m| m.to_string()).collect();
    assert_eq!(names, ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
}
