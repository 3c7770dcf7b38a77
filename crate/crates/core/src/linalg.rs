//! Dense exact linear algebra over a [`Field`].
//!
//! Everything is built on [`Echelon`], an incrementally grown row echelon
//! form whose rows remember which combination of inserted vectors produced
//! them. Pivots are the leftmost nonzero entry.

use crate::field::Field;

/// Row echelon form with tracked coordinates.
///
/// Each stored row `r` satisfies `r = sum_j tag[j] * input_j` where the
/// `input_j` are the tagged vectors handed to [`Echelon::insert`].
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    width: usize,
    tag_width: usize,
    rows: Vec<Row<F>>,
}

#[derive(Clone, Debug)]
struct Row<F: Field> {
    pivot: usize,
    vec: Vec<F::Elem>,
    tag: Vec<F::Elem>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, width: usize, tag_width: usize) -> Self {
        Self {
            field,
            width,
            tag_width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.pivot)
    }

    /// Reduces `v` in place, accumulating `-coefficients` into `tag`.
    /// Afterwards `v_in = v_out + sum (row combination)`, i.e. `tag` holds
    /// `tag_in - sum c_k tag_k`.
    pub fn reduce(&self, v: &mut [F::Elem], tag: &mut [F::Elem]) {
        let f = self.field;
        for row in &self.rows {
            let c = v[row.pivot].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (a, b) in v[row.pivot..].iter_mut().zip(&row.vec[row.pivot..]) {
                if !f.is_zero(b) {
                    f.sub_mul_assign(a, &c, b);
                }
            }
            if !tag.is_empty() {
                for (a, b) in tag.iter_mut().zip(&row.tag) {
                    if !f.is_zero(b) {
                        f.sub_mul_assign(a, &c, b);
                    }
                }
            }
        }
    }

    /// Expresses `v` in the span of the rows. Returns the combination of
    /// tagged inputs equal to `v`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.field;
        let mut v = v.to_vec();
        let mut tag = vec![f.zero(); self.tag_width];
        self.reduce(&mut v, &mut tag);
        if v.iter().any(|c| !f.is_zero(c)) {
            return None;
        }
        Some(tag.iter().map(|c| f.neg(c)).collect())
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = self.field;
        let mut v = v.to_vec();
        self.reduce(&mut v, &mut []);
        v.iter().all(|c| f.is_zero(c))
    }

    /// Inserts `v` with coordinate vector `tag`. Returns `None` when the
    /// vector was independent (a new row was added) and `Some(relation)`
    /// when it reduced to zero, `relation` being a tag combination of
    /// inputs that sums to zero.
    pub fn insert(&mut self, mut v: Vec<F::Elem>, mut tag: Vec<F::Elem>) -> Option<Vec<F::Elem>> {
        debug_assert_eq!(v.len(), self.width);
        debug_assert_eq!(tag.len(), self.tag_width);
        let f = self.field;
        self.reduce(&mut v, &mut tag);
        let Some(pivot) = v.iter().position(|c| !f.is_zero(c)) else {
            return Some(tag);
        };
        let inv = f.inv(&v[pivot]);
        if !f.is_one(&inv) {
            for c in v.iter_mut().chain(tag.iter_mut()) {
                *c = f.mul(c, &inv);
            }
        }
        self.rows.push(Row { pivot, vec: v, tag });
        None
    }

    /// Rows of the reduced row echelon form as `(pivot, row)`, sorted by
    /// pivot. Tags are dropped.
    pub fn into_reduced_rows(self) -> Vec<(usize, Vec<F::Elem>)> {
        let f = self.field;
        let mut rows: Vec<(usize, Vec<F::Elem>)> = self.rows.into_iter().map(|r| (r.pivot, r.vec)).collect();
        rows.sort_by_key(|(p, _)| *p);
        for k in (0..rows.len()).rev() {
            let (pivot, row) = rows[k].clone();
            for other in rows[..k].iter_mut() {
                let c = other.1[pivot].clone();
                if f.is_zero(&c) {
                    continue;
                }
                for (a, b) in other.1[pivot..].iter_mut().zip(&row[pivot..]) {
                    if !f.is_zero(b) {
                        f.sub_mul_assign(a, &c, b);
                    }
                }
            }
        }
        rows
    }

    /// Inserts an untagged vector, reporting whether it was independent.
    pub fn push(&mut self, v: Vec<F::Elem>) -> bool {
        let tag = if self.tag_width == 0 {
            Vec::new()
        } else {
            vec![self.field.zero(); self.tag_width]
        };
        self.insert(v, tag).is_none()
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank<F: Field>(field: F, width: usize, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> usize {
    let mut ech = Echelon::new(field, width, 0);
    for v in vectors {
        ech.push(v);
        if ech.rank() == width {
            break;
        }
    }
    ech.rank()
}

/// Basis of the linear dependencies among `columns`: every returned vector
/// `c` has `sum_j c[j] * columns[j] = 0`. One vector per column that is
/// dependent on its predecessors, so the basis is deterministic.
pub fn kernel_of_columns<F: Field>(field: F, height: usize, columns: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let n = columns.len();
    let mut ech = Echelon::new(field, height, n);
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut tag = vec![field.zero(); n];
        tag[j] = field.one();
        if let Some(rel) = ech.insert(col.clone(), tag) {
            kernel.push(rel);
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_and_kernel_over_gf3() {
        let f = PrimeField::new(3).unwrap();
        // columns (1,1,0), (0,1,1), (1,2,1) = first + second
        let cols = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]];
        assert_eq!(rank(f, 3, cols.clone()), 2);
        let ker = kernel_of_columns(f, 3, &cols);
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        for i in 0..3 {
            let s = (0..3).fold(0, |acc, j| f.add(&acc, &f.mul(&k[j], &cols[j][i])));
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn coordinates_recover_combination() {
        let q = Rationals;
        let mut ech = Echelon::new(q, 3, 2);
        ech.insert(vec![q.from_i64(1), q.from_i64(2), q.from_i64(0)], vec![q.one(), q.zero()]);
        ech.insert(vec![q.from_i64(0), q.from_i64(3), q.from_i64(1)], vec![q.zero(), q.one()]);
        // 2*a - b = (2, 1, -1)
        let coords = ech
            .coordinates(&[q.from_i64(2), q.from_i64(1), q.from_i64(-1)])
            .unwrap();
        assert_eq!(coords, vec![q.from_i64(2), q.from_i64(-1)]);
        assert!(ech.coordinates(&[q.one(), q.zero(), q.zero()]).is_none());
    }

    #[test]
    fn reduced_rows_clear_pivot_columns() {
        let f = PrimeField::new(5).unwrap();
        let mut ech = Echelon::new(f, 3, 0);
        ech.push(vec![1, 2, 3]);
        ech.push(vec![0, 1, 4]);
        let rows = ech.into_reduced_rows();
        assert_eq!(rows, vec![(0, vec![1, 0, 0]), (1, vec![0, 1, 4])]);
    }
}
