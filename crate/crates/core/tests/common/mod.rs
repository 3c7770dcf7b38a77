#![allow(dead_code)]

use codim3::groebner::{quotient_presentation, QuotientPresentation};
use codim3::monomial::Monomial;
use codim3::sampler::{validate_outcome, worker_rng, Sampler, SamplerConfig, Validation};
use codim3::{Field, Ideal, Polynomial, PrimeField, Rationals};
use rand::Rng;

pub fn gf3() -> PrimeField {
    PrimeField::new(3).unwrap()
}

pub fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub const Q: Rationals = Rationals;

pub fn corpus() -> Vec<(String, String)> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/reference_examples.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (key, gens) = l.split_once(" | ").unwrap();
            (key.to_string(), gens.to_string())
        })
        .collect()
}

/// Ideals that pass validation, drawn from the sampler.
pub fn sampled_ideals<F: Field>(field: F, cfg: SamplerConfig, seed: u64, count: usize) -> Vec<Ideal<F>> {
    let mut sampler = Sampler::new(field, cfg.clone(), worker_rng(seed, 0)).unwrap();
    let mut out = Vec::new();
    while out.len() < count {
        let outcome = sampler.generate().unwrap();
        if outcome.failure.is_some() {
            continue;
        }
        if let Validation::Pass(v) = validate_outcome(outcome, &cfg).unwrap() {
            out.push(Ideal::new(field, v.generators));
        }
    }
    out
}

pub fn small_config(high_deg: u32) -> SamplerConfig {
    SamplerConfig {
        high_deg,
        ..SamplerConfig::default()
    }
}

/// Monomials not divisible by any generator, counted per degree.
pub fn brute_force_hilbert(gens: &[Monomial], up_to: u32) -> Vec<usize> {
    (0..=up_to)
        .map(|d| {
            Monomial::all_of_degree(d)
                .iter()
                .filter(|w| !gens.iter().any(|g| g.divides(w)))
                .count()
        })
        .collect()
}

/// The pure powers x^a, y^b, z^c plus a few random monomials, all with
/// degree in `[1, max_deg]`.
pub fn random_artinian_monomials<R: Rng>(rng: &mut R, max_deg: u32) -> Vec<Monomial> {
    let mut gens: Vec<Monomial> = (0..3)
        .map(|v| Monomial::power(v, rng.gen_range(1..=max_deg) as u16))
        .collect();
    for _ in 0..rng.gen_range(0..6) {
        let d = rng.gen_range(1..=max_deg);
        let a = rng.gen_range(0..=d);
        let b = rng.gen_range(0..=d - a);
        gens.push(Monomial::new(a as u16, b as u16, (d - a - b) as u16));
    }
    gens
}

pub fn monomial_ideal<F: Field>(field: F, gens: &[Monomial]) -> Ideal<F> {
    Ideal::new(field, gens.iter().map(|m| Polynomial::monomial(field, *m, field.one())).collect())
}

pub fn presentation<F: Field>(ideal: &Ideal<F>) -> QuotientPresentation<F> {
    quotient_presentation(ideal).unwrap()
}

pub fn cases(n: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases: n,
        failure_persistence: None,
        ..Default::default()
    }
}
