use crate::field::Field;
use crate::groebner::QuotientPresentation;
use crate::monomial::Monomial;

/// Wedge subsets of {x, y, z} as bitmasks, grouped by size and sorted.
pub(crate) const SUBSETS: [&[u8]; 4] = [&[0], &[1, 2, 4], &[3, 5, 6], &[7]];

pub(crate) fn subset_position(size: usize, mask: u8) -> usize {
    SUBSETS[size].iter().position(|&s| s == mask).expect("valid wedge subset")
}

/// `(-1)^k` where k counts pairs (s, t) in S x T with s > t, the sign of
/// `e_S ∧ e_T = ± e_{S ∪ T}`.
pub(crate) fn wedge_sign(s: u8, t: u8) -> bool {
    let mut inversions = 0;
    for a in 0..3 {
        if s & (1 << a) == 0 {
            continue;
        }
        for b in 0..a {
            if t & (1 << b) != 0 {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// The Koszul complex `K(x, y, z) ⊗ R/I`.
///
/// `K_i` has basis `u ⊗ e_S` with u a standard monomial and `|S| = i`; its
/// internal degree is `deg u + i`. Within the block of internal degree t
/// the basis vector `(S, u)` sits at `pos(S) * H(t - i) + pos(u)`.
#[derive(Clone, Copy, Debug)]
pub struct KoszulComplex<'q, F: Field> {
    quotient: &'q QuotientPresentation<F>,
}

pub fn koszul_complex<F: Field>(quotient: &QuotientPresentation<F>) -> KoszulComplex<'_, F> {
    KoszulComplex { quotient }
}

const BINOMIAL: [usize; 4] = [1, 3, 3, 1];

impl<'q, F: Field> KoszulComplex<'q, F> {
    pub fn quotient(&self) -> &'q QuotientPresentation<F> {
        self.quotient
    }

    pub fn field(&self) -> F {
        self.quotient.field()
    }

    /// Largest internal degree carrying a nonzero chain.
    pub fn max_internal_degree(&self) -> u32 {
        self.quotient.top_degree() + 3
    }

    pub(crate) fn monomial_dim(&self, i: usize, t: u32) -> usize {
        self.quotient.dim(t as i64 - i as i64)
    }

    pub fn block_dim(&self, i: usize, t: u32) -> usize {
        BINOMIAL[i] * self.monomial_dim(i, t)
    }

    pub fn dims(&self) -> [usize; 4] {
        let total = self.quotient.total_dimension();
        BINOMIAL.map(|b| b * total)
    }

    /// Columns of `d_i` restricted to internal degree t, in `K_(i-1)`
    /// coordinates of the same degree.
    pub fn differential_block(&self, i: usize, t: u32) -> Vec<Vec<F::Elem>> {
        assert!((1..=3).contains(&i));
        let field = self.field();
        let src = t as i64 - i as i64;
        if src < 0 {
            return Vec::new();
        }
        let h_tgt = self.monomial_dim(i - 1, t);
        let rows = BINOMIAL[i - 1] * h_tgt;
        let mut cols = Vec::new();
        for &s in SUBSETS[i] {
            for u in self.quotient.standard_monomials(src as u32) {
                let mut col = vec![field.zero(); rows];
                let mut j = 0;
                for v in 0..3 {
                    if s & (1 << v) == 0 {
                        continue;
                    }
                    j += 1;
                    let base = subset_position(i - 1, s & !(1 << v)) * h_tgt;
                    let w = u.mul(&Monomial::power(v, 1));
                    for (k, c) in self.quotient.monomial_normal_form(&w) {
                        let slot = &mut col[base + k];
                        *slot = if j % 2 == 1 {
                            field.add(slot, c)
                        } else {
                            field.sub(slot, c)
                        };
                    }
                }
                cols.push(col);
            }
        }
        cols
    }

    /// Columns of the whole of `d_i`, built without any grading. Basis of
    /// `K_i` is `(S, u)` at `pos(S) * D + global index of u`.
    pub fn full_differential(&self, i: usize) -> Vec<Vec<F::Elem>> {
        assert!((1..=3).contains(&i));
        let field = self.field();
        let q = self.quotient;
        let d_total = q.total_dimension();
        let offsets: Vec<usize> = q
            .hilbert_function()
            .iter()
            .scan(0, |acc, h| {
                let o = *acc;
                *acc += h;
                Some(o)
            })
            .collect();
        let all: Vec<Monomial> = (0..=q.top_degree())
            .flat_map(|e| q.standard_monomials(e).iter().copied())
            .collect();
        let mut cols = Vec::new();
        for &s in SUBSETS[i] {
            for u in &all {
                let mut col = vec![field.zero(); BINOMIAL[i - 1] * d_total];
                let mut j = 0;
                for v in 0..3 {
                    if s & (1 << v) == 0 {
                        continue;
                    }
                    j += 1;
                    let w = u.mul(&Monomial::power(v, 1));
                    let Some(&off) = offsets.get(w.degree() as usize) else {
                        continue;
                    };
                    let base = subset_position(i - 1, s & !(1 << v)) * d_total + off;
                    for (k, c) in q.monomial_normal_form(&w) {
                        let slot = &mut col[base + k];
                        *slot = if j % 2 == 1 {
                            field.add(slot, c)
                        } else {
                            field.sub(slot, c)
                        };
                    }
                }
                cols.push(col);
            }
        }
        cols
    }

    /// Wedge product of chains `a ∈ K_(i, ta)` and `b ∈ K_(j, tb)`.
    pub fn multiply(&self, i: usize, ta: u32, a: &[F::Elem], j: usize, tb: u32, b: &[F::Elem]) -> Vec<F::Elem> {
        let field = self.field();
        let k = i + j;
        let t = ta + tb;
        if k > 3 {
            return Vec::new();
        }
        let ha = self.monomial_dim(i, ta);
        let hb = self.monomial_dim(j, tb);
        let hk = self.monomial_dim(k, t);
        let mut out = vec![field.zero(); BINOMIAL[k] * hk];
        if ha == 0 || hb == 0 || hk == 0 {
            return out;
        }
        let ua = self.quotient.standard_monomials(ta - i as u32);
        let ub = self.quotient.standard_monomials(tb - j as u32);
        for (ia, ca) in a.iter().enumerate() {
            if field.is_zero(ca) {
                continue;
            }
            let s = SUBSETS[i][ia / ha];
            let u = ua[ia % ha];
            for (ib, cb) in b.iter().enumerate() {
                if field.is_zero(cb) {
                    continue;
                }
                let tset = SUBSETS[j][ib / hb];
                if s & tset != 0 {
                    continue;
                }
                let w = u.mul(&ub[ib % hb]);
                let nf = self.quotient.monomial_normal_form(&w);
                if nf.is_empty() {
                    continue;
                }
                let mut c = field.mul(ca, cb);
                if wedge_sign(s, tset) {
                    c = field.neg(&c);
                }
                let base = subset_position(k, s | tset) * hk;
                for (idx, e) in nf {
                    let slot = &mut out[base + idx];
                    *slot = field.add(slot, &field.mul(&c, e));
                }
            }
        }
        out
    }
}
