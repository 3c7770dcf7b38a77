use super::{reduced_groebner_basis, GroebnerBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::monomial::Monomial;
use crate::poly::{Ideal, Polynomial};

/// Sparse coordinates with respect to the standard monomials of one degree.
pub type Sparse<E> = Vec<(usize, E)>;

/// The Artinian quotient `R/I` as a graded vector space with a basis of
/// standard monomials and a table of monomial normal forms.
#[derive(Clone, Debug)]
pub struct QuotientPresentation<F: Field> {
    basis: GroebnerBasis<F>,
    standard: Vec<Vec<Monomial>>,
    /// `nf[e][i]`: normal form of the i-th degree-e monomial.
    nf: Vec<Vec<Sparse<F::Elem>>>,
}

/// Builds the presentation, failing unless the ideal has codimension 3.
pub fn quotient_presentation<F: Field>(ideal: &Ideal<F>) -> Result<QuotientPresentation<F>> {
    let gb = reduced_groebner_basis(ideal)?;
    QuotientPresentation::from_basis(gb)
}

impl<F: Field> QuotientPresentation<F> {
    pub fn from_basis(basis: GroebnerBasis<F>) -> Result<Self> {
        if basis.codimension() != 3 {
            return Err(Error::NotArtinian);
        }
        if basis.elements().iter().any(|g| g.degree() == 0) {
            return Err(Error::UnitIdeal);
        }
        let field = basis.field();
        let mut standard = Vec::new();
        let mut nf = Vec::new();
        for e in 0.. {
            let reducer = basis.reducer(e);
            if reducer.all_reducible() {
                break;
            }
            let monos = Monomial::all_of_degree(e);
            let mut pos = vec![usize::MAX; monos.len()];
            let mut std_e = Vec::new();
            for (i, m) in monos.iter().enumerate() {
                if reducer.is_standard_index(i) {
                    pos[i] = std_e.len();
                    std_e.push(*m);
                }
            }
            let table = (0..monos.len())
                .map(|i| {
                    if pos[i] != usize::MAX {
                        return vec![(pos[i], field.one())];
                    }
                    let mut v = vec![field.zero(); monos.len()];
                    v[i] = field.one();
                    reducer.reduce(&mut v);
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !field.is_zero(c))
                        .map(|(j, c)| (pos[j], c))
                        .collect()
                })
                .collect();
            standard.push(std_e);
            nf.push(table);
        }
        Ok(Self { basis, standard, nf })
    }

    pub fn field(&self) -> F {
        self.basis.field()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        &self.basis
    }

    /// Highest degree with a nonzero graded piece.
    pub fn top_degree(&self) -> u32 {
        self.standard.len() as u32 - 1
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        self.standard.iter().map(Vec::len).collect()
    }

    /// `dim (R/I)_e`, zero outside `0..=top`.
    pub fn dim(&self, e: i64) -> usize {
        if e < 0 {
            return 0;
        }
        self.standard.get(e as usize).map_or(0, Vec::len)
    }

    pub fn total_dimension(&self) -> usize {
        self.standard.iter().map(Vec::len).sum()
    }

    pub fn standard_monomials(&self, e: u32) -> &[Monomial] {
        self.standard.get(e as usize).map_or(&[], Vec::as_slice)
    }

    /// Normal form of a monomial in standard coordinates of its degree.
    pub fn monomial_normal_form(&self, mono: &Monomial) -> &[(usize, F::Elem)] {
        match self.nf.get(mono.degree() as usize) {
            Some(table) => &table[mono.index_in_degree()],
            None => &[],
        }
    }

    /// Dense standard coordinates of a homogeneous polynomial.
    pub fn coordinates(&self, f: &Polynomial<F>) -> Vec<F::Elem> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim(f.degree() as i64)];
        for (m, c) in f.terms() {
            for (j, a) in self.monomial_normal_form(m) {
                out[*j] = field.add(&out[*j], &field.mul(c, a));
            }
        }
        out
    }

    /// Dimension of the socle `(0 : m)`.
    pub fn socle_dimension(&self) -> usize {
        let field = self.field();
        let top = self.top_degree();
        let mut total = self.dim(top as i64);
        for e in 0..top {
            let next = self.dim(e as i64 + 1);
            let columns: Vec<Vec<F::Elem>> = self.standard[e as usize]
                .iter()
                .map(|u| {
                    let mut col = vec![field.zero(); 3 * next];
                    for v in 0..3 {
                        let w = u.mul(&Monomial::power(v, 1));
                        for (j, c) in self.monomial_normal_form(&w) {
                            col[v * next + j] = c.clone();
                        }
                    }
                    col
                })
                .collect();
            total += columns.len() - linalg::rank(field, 3 * next, columns);
        }
        total
    }
}

/// Dimension of the socle of `R/I` for a codimension 3 ideal.
pub fn socle_dimension<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    Ok(quotient_presentation(ideal)?.socle_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gf3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn hilbert_function_of_monomial_example() {
        let i = Ideal::parse("matrix{{z^2,y^3,x*y^2,x^2*y,x^3}}", gf3()).unwrap();
        let q = quotient_presentation(&i).unwrap();
        assert_eq!(q.hilbert_function(), vec![1, 3, 5, 3]);
        // socle is spanned by x^2z, xyz, y^2z
        assert_eq!(q.socle_dimension(), 3);
    }

    #[test]
    fn complete_intersection_has_simple_socle() {
        let i = Ideal::parse("matrix{{x^2,y^2,z^2}}", gf3()).unwrap();
        let q = quotient_presentation(&i).unwrap();
        assert_eq!(q.hilbert_function(), vec![1, 3, 3, 1]);
        assert_eq!(q.socle_dimension(), 1);
        assert_eq!(q.total_dimension(), 8);
    }

    #[test]
    fn rejects_non_artinian_and_unit() {
        let i = Ideal::parse("matrix{{x^2,y^2}}", gf3()).unwrap();
        assert!(matches!(quotient_presentation(&i), Err(Error::NotArtinian)));
        let u = Ideal::parse("matrix{{1}}", gf3()).unwrap();
        assert!(matches!(quotient_presentation(&u), Err(Error::UnitIdeal)));
    }
}
