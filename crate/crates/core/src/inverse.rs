//! Macaulay inverse systems: ideals annihilating given dual forms under
//! the divided-power contraction action.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::socle_dimension;
use crate::linalg::{kernel_of_columns, Echelon};
use crate::monomial::{count_of_degree, Monomial};
use crate::poly::{Ideal, Polynomial};

/// A nonzero homogeneous form in the dual variables X, Y, Z.
#[derive(Clone, Debug, PartialEq)]
pub struct DualForm<F: Field>(Polynomial<F>);

impl<F: Field> DualForm<F> {
    pub fn new(form: Polynomial<F>) -> Result<Self> {
        if form.is_zero() {
            return Err(Error::Config("dual forms must be nonzero".into()));
        }
        Ok(Self(form))
    }

    pub fn polynomial(&self) -> &Polynomial<F> {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }
}

/// `mono ∘ F`: lowers exponents by those of `mono`, dropping terms that
/// would go negative. Returns the zero polynomial when nothing survives.
pub fn contract<F: Field>(mono: &Monomial, form: &Polynomial<F>) -> Polynomial<F> {
    let field = form.field();
    if mono.degree() > form.degree() {
        return Polynomial::zero(field, 0);
    }
    let degree = form.degree() - mono.degree();
    let mut dense = vec![field.zero(); count_of_degree(degree)];
    for (m, c) in form.terms() {
        if let Some(q) = mono.quotient_of(m) {
            dense[q.index_in_degree()] = c.clone();
        }
    }
    Polynomial::from_dense(field, degree, dense)
}

/// The ideal of all `f` with `f ∘ F_j = 0` for every form, given by its
/// minimal generators.
pub fn annihilator_ideal<F: Field>(forms: &[DualForm<F>], field: F) -> Result<Ideal<F>> {
    if forms.is_empty() {
        return Err(Error::Config("annihilator of an empty list of dual forms".into()));
    }
    let top = forms.iter().map(DualForm::degree).max().unwrap_or(0);
    let mut generators = Vec::new();
    let mut prev: Vec<Vec<F::Elem>> = Vec::new();
    for d in 1..=top + 1 {
        let monos = Monomial::all_of_degree(d);
        let width = monos.len();
        let columns: Vec<Vec<F::Elem>> = monos
            .iter()
            .map(|w| {
                forms
                    .iter()
                    .filter(|f| f.degree() >= d)
                    .flat_map(|f| contract(w, f.polynomial()).to_dense())
                    .collect()
            })
            .collect();
        let height = columns.first().map_or(0, Vec::len);
        let kernel = kernel_of_columns(field, height, &columns);

        let mut span = Echelon::new(field, width, 0);
        for v in kernel {
            span.push(v);
        }
        let current: Vec<(usize, Vec<F::Elem>)> = span.into_reduced_rows();

        let lower = Monomial::all_of_degree(d - 1);
        let mut image = Echelon::new(field, width, 0);
        'fill: for g in &prev {
            for v in 0..3 {
                if image.rank() == current.len() {
                    break 'fill;
                }
                image.push(crate::groebner::shift_by_variable(field, g, &lower, v, width));
            }
        }
        let covered: HashSet<usize> = image.pivots().collect();
        for (pivot, row) in current.iter().rev() {
            if !covered.contains(pivot) {
                generators.push(Polynomial::from_dense(field, d, row.clone()));
            }
        }
        prev = current.into_iter().map(|(_, row)| row).collect();
    }
    Ok(Ideal::new(field, generators))
}

/// Type of the quotient, the dimension of its socle.
pub fn quotient_type<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    socle_dimension(ideal)
}
