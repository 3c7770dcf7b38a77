//! Reduced Gröbner bases of homogeneous ideals and everything read off
//! from them: normal forms, codimension, standard monomials, Hilbert
//! function, minimal generators and socle dimension.

mod buchberger;
mod mingens;
mod quotient;

pub use buchberger::reduced_groebner_basis;
pub use mingens::{minimal_generators, minimal_generators_from_basis};
pub(crate) use mingens::shift as shift_by_variable;
pub use quotient::{quotient_presentation, socle_dimension, QuotientPresentation};

use crate::field::Field;
use crate::monomial::{count_of_degree, Monomial};
use crate::poly::{Ideal, Polynomial};

/// Hard ceiling on the degrees any degree-indexed loop may reach.
pub const DEGREE_CAP: u32 = 64;

/// A reduced Gröbner basis for grevlex, sorted ascending by leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub(crate) fn from_reduced(field: F, mut elements: Vec<Polynomial<F>>) -> Self {
        elements.sort_by_key(|g| g.leading_monomial());
        Self { field, elements }
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial()).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn is_standard(&self, mono: &Monomial) -> bool {
        !self
            .elements
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|lm| lm.divides(mono)))
    }

    pub(crate) fn reducer(&self, degree: u32) -> DegreeReducer<'_, F> {
        DegreeReducer::new(self.field, &self.elements, degree)
    }

    /// Full reduction of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        if f.is_zero() {
            return f.clone();
        }
        let mut dense = f.to_dense();
        self.reducer(f.degree()).reduce(&mut dense);
        Polynomial::from_dense(self.field, f.degree(), dense)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// `3 - dim R/I`, read off the leading monomials. The zero ideal has
    /// codimension 0; the unit ideal is reported as 3.
    pub fn codimension(&self) -> u32 {
        codimension_of_monomials(&self.leading_monomials())
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal::new(self.field, self.elements.clone())
    }
}

/// Codimension of a monomial ideal: three minus the largest set of
/// variables such that no generator is supported inside it.
pub fn codimension_of_monomials(monos: &[Monomial]) -> u32 {
    if monos.is_empty() {
        return 0;
    }
    let supports: Vec<u8> = monos.iter().map(|m| m.support()).collect();
    let best = (0u8..8)
        .filter(|&set| supports.iter().all(|&s| s & !set != 0))
        .map(|set| set.count_ones())
        .max();
    match best {
        Some(dim) => 3 - dim,
        None => 3,
    }
}

/// Reduction of dense degree-`d` coefficient vectors by a list of monic
/// polynomials with distinct leading monomials.
pub(crate) struct DegreeReducer<'a, F: Field> {
    field: F,
    elements: &'a [Polynomial<F>],
    /// For each monomial of degree d: which element reduces it, and the
    /// multiplier monomial.
    table: Vec<Option<(usize, Monomial)>>,
}

impl<'a, F: Field> DegreeReducer<'a, F> {
    pub(crate) fn new(field: F, elements: &'a [Polynomial<F>], degree: u32) -> Self {
        let monos = Monomial::all_of_degree(degree);
        let table = monos
            .iter()
            .map(|m| {
                elements.iter().enumerate().find_map(|(k, g)| {
                    let lm = g.leading_monomial()?;
                    lm.quotient_of(m).map(|q| (k, q))
                })
            })
            .collect();
        Self {
            field,
            elements,
            table,
        }
    }

    pub(crate) fn is_standard_index(&self, idx: usize) -> bool {
        self.table[idx].is_none()
    }

    pub(crate) fn all_reducible(&self) -> bool {
        self.table.iter().all(|e| e.is_some())
    }

    pub(crate) fn reduce(&self, dense: &mut [F::Elem]) {
        reduce_with(self.field, self.elements, &self.table, dense);
    }
}

pub(crate) fn reduce_with<F: Field>(
    f: F,
    elements: &[Polynomial<F>],
    table: &[Option<(usize, Monomial)>],
    dense: &mut [F::Elem],
) {
    debug_assert_eq!(dense.len(), table.len());
    for i in 0..dense.len() {
        if f.is_zero(&dense[i]) {
            continue;
        }
        let Some((k, mult)) = &table[i] else { continue };
        let c = dense[i].clone();
        for (m, a) in elements[*k].terms() {
            let j = m.mul(mult).index_in_degree();
            f.sub_mul_assign(&mut dense[j], &c, a);
        }
        debug_assert!(f.is_zero(&dense[i]));
    }
}

pub(crate) fn monomial_vector<F: Field>(field: F, mono: &Monomial) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); count_of_degree(mono.degree())];
    v[mono.index_in_degree()] = field.one();
    v
}
