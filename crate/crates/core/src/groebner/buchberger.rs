use std::collections::BTreeMap;

use super::{reduce_with, GroebnerBasis, DEGREE_CAP};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{count_of_degree, Monomial};
use crate::poly::{Ideal, Polynomial};

/// Degree-by-degree Buchberger algorithm for homogeneous input.
///
/// S-pairs are processed in order of ascending lcm. Pairs with coprime
/// leading monomials are skipped, and so is any pair whose lcm is strictly
/// refined by a third basis element. Every degree is reduced densely, and
/// the computation stops as soon as a whole degree lies in the ideal.
pub fn reduced_groebner_basis<F: Field>(ideal: &Ideal<F>) -> Result<GroebnerBasis<F>> {
    let field = ideal.field();
    let mut inputs: BTreeMap<u32, Vec<&Polynomial<F>>> = BTreeMap::new();
    for g in ideal.generators() {
        inputs.entry(g.degree()).or_default().push(g);
    }
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();

    let Some(&start) = inputs.keys().next() else {
        return Ok(GroebnerBasis::from_reduced(field, basis));
    };
    let mut d = start;
    loop {
        let pending_inputs = inputs.range(d..).next().is_some();
        let pending_pairs = pairs.range(d..).next().is_some();
        if !pending_inputs && !pending_pairs {
            break;
        }
        if d > DEGREE_CAP {
            return Err(Error::DegreeCap(DEGREE_CAP));
        }
        let first_new = basis.len();
        let width = count_of_degree(d);
        let mut table = build_table(&lms, d);

        let mut candidates: Vec<Vec<F::Elem>> = Vec::new();
        if let Some(gs) = inputs.get(&d) {
            candidates.extend(gs.iter().map(|g| g.to_dense()));
        }
        if let Some(mut ps) = pairs.remove(&d) {
            ps.sort_by_key(|&(i, j)| (lms[i].lcm(&lms[j]), i, j));
            for (i, j) in ps {
                if chain_criterion(&lms, i, j) {
                    continue;
                }
                candidates.push(s_polynomial(field, &basis, &lms, i, j, width));
            }
        }

        for mut v in candidates {
            reduce_with(field, &basis, &table, &mut v);
            let Some(pivot) = v.iter().position(|c| !field.is_zero(c)) else {
                continue;
            };
            let inv = field.inv(&v[pivot]);
            for c in v.iter_mut() {
                *c = field.mul(c, &inv);
            }
            let g = Polynomial::from_dense(field, d, v);
            let lm = g.leading_monomial().expect("nonzero");
            table[lm.index_in_degree()] = Some((basis.len(), Monomial::ONE));
            basis.push(g);
            lms.push(lm);
        }

        // tail-reduce this degree's new elements against each other
        for k in first_new..basis.len() {
            let g = &basis[k];
            let lm = lms[k];
            let mut v = g.to_dense();
            let lead = lm.index_in_degree();
            v[lead] = field.zero();
            reduce_with(field, &basis, &table, &mut v);
            v[lead] = field.one();
            basis[k] = Polynomial::from_dense(field, d, v);
        }

        for k in first_new..basis.len() {
            for i in 0..k {
                if lms[i].is_coprime(&lms[k]) {
                    continue;
                }
                let deg = lms[i].lcm(&lms[k]).degree();
                pairs.entry(deg).or_default().push((i, k));
            }
        }

        if table.iter().all(|e| e.is_some()) {
            break;
        }
        d += 1;
    }
    Ok(GroebnerBasis::from_reduced(field, basis))
}

fn build_table(lms: &[Monomial], d: u32) -> Vec<Option<(usize, Monomial)>> {
    Monomial::all_of_degree(d)
        .iter()
        .map(|m| lms.iter().enumerate().find_map(|(k, lm)| lm.quotient_of(m).map(|q| (k, q))))
        .collect()
}

fn chain_criterion(lms: &[Monomial], i: usize, j: usize) -> bool {
    let l = lms[i].lcm(&lms[j]);
    lms.iter().enumerate().any(|(k, lk)| {
        k != i && k != j && lk.divides(&l) && lms[i].lcm(lk) != l && lms[j].lcm(lk) != l
    })
}

fn s_polynomial<F: Field>(
    field: F,
    basis: &[Polynomial<F>],
    lms: &[Monomial],
    i: usize,
    j: usize,
    width: usize,
) -> Vec<F::Elem> {
    let l = lms[i].lcm(&lms[j]);
    let mi = lms[i].quotient_of(&l).expect("divides lcm");
    let mj = lms[j].quotient_of(&l).expect("divides lcm");
    let mut v = vec![field.zero(); width];
    for (m, c) in basis[i].terms() {
        let idx = m.mul(&mi).index_in_degree();
        v[idx] = field.add(&v[idx], c);
    }
    for (m, c) in basis[j].terms() {
        let idx = m.mul(&mj).index_in_degree();
        v[idx] = field.sub(&v[idx], c);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn gf3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let i = Ideal::parse("matrix{{x^2,y^2,z^2,x*y}}", gf3()).unwrap();
        let gb = reduced_groebner_basis(&i).unwrap();
        let lms: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(lms, ["z^2", "y^2", "x*y", "x^2"]);
        assert_eq!(gb.codimension(), 3);
    }

    #[test]
    fn reduction_produces_new_elements() {
        // (x^2 - y^2, xy) over Q: y^3 enters in degree 3
        let i = Ideal::parse("matrix{{x^2-y^2,x*y}}", Rationals).unwrap();
        let gb = reduced_groebner_basis(&i).unwrap();
        let text: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(text, ["x*y", "x^2-y^2", "y^3"]);
        assert_eq!(gb.codimension(), 2);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let unit = Ideal::parse("matrix{{x,1}}", gf3()).unwrap();
        let gb = reduced_groebner_basis(&unit).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.elements()[0].to_string(), "1");
        let zero = Ideal::zero(gf3());
        assert!(reduced_groebner_basis(&zero).unwrap().is_empty());
    }
}
