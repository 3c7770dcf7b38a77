use std::collections::HashSet;

use super::{monomial_vector, reduced_groebner_basis, GroebnerBasis};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::Echelon;
use crate::monomial::{count_of_degree, Monomial};
use crate::poly::{Ideal, Polynomial};

/// A minimal homogeneous generating set.
///
/// In each degree d the ideal is spanned by the elements `w - NF(w)` for
/// the nonstandard monomials w. The generators chosen are those whose
/// leading monomial is not a leading monomial of `R_1 * I_(d-1)`. Output is
/// sorted by degree, then by leading monomial.
pub fn minimal_generators<F: Field>(ideal: &Ideal<F>) -> Result<Vec<Polynomial<F>>> {
    let gb = reduced_groebner_basis(ideal)?;
    Ok(minimal_generators_from_basis(&gb, ideal.max_degree()))
}

/// As [`minimal_generators`] with a precomputed basis. `max_degree` must
/// bound the degrees of some generating set.
pub fn minimal_generators_from_basis<F: Field>(gb: &GroebnerBasis<F>, max_degree: u32) -> Vec<Polynomial<F>> {
    let field = gb.field();
    let Some(start) = gb.elements().iter().map(|g| g.degree()).min() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut prev: Vec<Vec<F::Elem>> = Vec::new();
    for d in start..=max_degree {
        let reducer = gb.reducer(d);
        let monos = Monomial::all_of_degree(d);
        let width = monos.len();
        let current: Vec<(usize, Vec<F::Elem>)> = monos
            .iter()
            .enumerate()
            .filter(|(i, _)| !reducer.is_standard_index(*i))
            .map(|(i, m)| {
                let mut nf = monomial_vector(field, m);
                reducer.reduce(&mut nf);
                let mut g: Vec<F::Elem> = nf.iter().map(|c| field.neg(c)).collect();
                g[i] = field.add(&g[i], &field.one());
                (i, g)
            })
            .collect();

        let mut image = Echelon::new(field, width, 0);
        let lower = Monomial::all_of_degree(d.saturating_sub(1));
        'fill: for g in &prev {
            for v in 0..3 {
                if image.rank() == current.len() {
                    break 'fill;
                }
                image.push(shift(field, g, &lower, v, width));
            }
        }
        let covered: HashSet<usize> = image.pivots().collect();
        for (i, g) in current.iter().rev() {
            if !covered.contains(i) {
                out.push(Polynomial::from_dense(field, d, g.clone()));
            }
        }
        prev = current.into_iter().map(|(_, g)| g).collect();
    }
    out
}

/// Multiplies a dense form, whose monomials are `monos`, by a variable.
pub(crate) fn shift<F: Field>(field: F, g: &[F::Elem], monos: &[Monomial], var: usize, width: usize) -> Vec<F::Elem> {
    debug_assert_eq!(width, count_of_degree(monos.first().map_or(0, |m| m.degree()) + 1));
    let mut v = vec![field.zero(); width];
    let step = Monomial::power(var, 1);
    for (c, m) in g.iter().zip(monos) {
        if !field.is_zero(c) {
            v[m.mul(&step).index_in_degree()] = c.clone();
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn strings<F: Field>(gens: &[Polynomial<F>]) -> Vec<String> {
        gens.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let f = PrimeField::new(3).unwrap();
        let i = Ideal::parse("matrix{{x^2,x^3,x^2*y+y^3,y^3,z^2}}", f).unwrap();
        let gens = minimal_generators(&i).unwrap();
        assert_eq!(strings(&gens), ["z^2", "x^2", "y^3"]);
    }

    #[test]
    fn sums_are_replaced_by_reduced_forms() {
        let i = Ideal::parse("matrix{{x^2+y^2,y^2,x*y+z^2}}", Rationals).unwrap();
        let gens = minimal_generators(&i).unwrap();
        assert_eq!(strings(&gens), ["y^2", "x*y+z^2", "x^2"]);
    }
}
