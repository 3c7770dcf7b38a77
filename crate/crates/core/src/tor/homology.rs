use super::koszul::KoszulComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel_of_columns, Echelon};

/// Homology of one graded block `(i, t)` of the Koszul complex.
#[derive(Clone, Debug)]
struct Block<F: Field> {
    /// Cycle representatives of a basis of the homology.
    reps: Vec<Vec<F::Elem>>,
    /// Echelon form of boundaries followed by the representatives; a
    /// representative's tag is its kernel slot.
    echelon: Echelon<F>,
    /// Kernel slot of each representative, in order.
    slots: Vec<usize>,
    /// Index of the first class of this block in the global numbering.
    offset: usize,
}

/// A homology class basis element of `A_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub internal_degree: u32,
    pub local: usize,
}

/// `Tor_•(R/I, k)` with cycle representatives and, once filled, the
/// products `A_1 ⊗ A_1 → A_2` and `A_1 ⊗ A_2 → A_3`.
#[derive(Clone, Debug)]
pub struct TorAlgebra<'q, F: Field> {
    koszul: KoszulComplex<'q, F>,
    blocks: [Vec<Option<Block<F>>>; 4],
    classes: [Vec<ClassInfo>; 4],
    mu11: Option<Vec<Vec<Vec<F::Elem>>>>,
    mu12: Option<Vec<Vec<Vec<F::Elem>>>>,
}

/// Computes the homology blockwise by internal degree.
pub fn graded_homology<'q, F: Field>(koszul: KoszulComplex<'q, F>) -> Result<TorAlgebra<'q, F>> {
    let field = koszul.field();
    let tmax = koszul.max_internal_degree();
    let mut blocks: [Vec<Option<Block<F>>>; 4] = Default::default();
    let mut classes: [Vec<ClassInfo>; 4] = Default::default();
    for i in 0..4 {
        for t in 0..=tmax {
            let dim = koszul.block_dim(i, t);
            if dim == 0 {
                blocks[i].push(None);
                continue;
            }
            let kernel = if i == 0 {
                (0..dim)
                    .map(|k| {
                        let mut v = vec![field.zero(); dim];
                        v[k] = field.one();
                        v
                    })
                    .collect()
            } else {
                let height = koszul.block_dim(i - 1, t);
                kernel_of_columns(field, height, &koszul.differential_block(i, t))
            };
            let mut echelon = Echelon::new(field, dim, kernel.len());
            if i < 3 {
                for col in koszul.differential_block(i + 1, t) {
                    echelon.push(col);
                    if echelon.rank() == kernel.len() {
                        break;
                    }
                }
            }
            let mut reps = Vec::new();
            let mut slots = Vec::new();
            for (k, z) in kernel.iter().enumerate() {
                let mut tag = vec![field.zero(); kernel.len()];
                tag[k] = field.one();
                if echelon.insert(z.clone(), tag).is_none() {
                    reps.push(z.clone());
                    slots.push(k);
                }
            }
            let offset = classes[i].len();
            for local in 0..reps.len() {
                classes[i].push(ClassInfo {
                    internal_degree: t,
                    local,
                });
            }
            blocks[i].push(Some(Block {
                reps,
                echelon,
                slots,
                offset,
            }));
        }
    }
    let dims = classes.each_ref().map(Vec::len);
    if dims[0] != 1 {
        return Err(Error::Internal(format!("dim A_0 = {} instead of 1", dims[0])));
    }
    if 1 + dims[2] != dims[1] + dims[3] {
        return Err(Error::Internal(format!(
            "Euler characteristic of Tor is nonzero: dims {dims:?}"
        )));
    }
    Ok(TorAlgebra {
        koszul,
        blocks,
        classes,
        mu11: None,
        mu12: None,
    })
}

impl<'q, F: Field> TorAlgebra<'q, F> {
    pub fn koszul(&self) -> &KoszulComplex<'q, F> {
        &self.koszul
    }

    pub fn dims(&self) -> [usize; 4] {
        self.classes.each_ref().map(Vec::len)
    }

    pub fn classes(&self, i: usize) -> &[ClassInfo] {
        &self.classes[i]
    }

    fn block(&self, i: usize, t: u32) -> Option<&Block<F>> {
        self.blocks[i].get(t as usize).and_then(Option::as_ref)
    }

    /// Chain representative of the k-th class of `A_i`.
    pub fn representative(&self, i: usize, k: usize) -> &[F::Elem] {
        let c = self.classes[i][k];
        &self.block(i, c.internal_degree).expect("block of a class").reps[c.local]
    }

    /// Class of a cycle of `K_(i, t)` in global coordinates of `A_i`. Fails
    /// if the chain is not a cycle.
    pub fn project(&self, i: usize, t: u32, z: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let field = self.koszul.field();
        let mut out = vec![field.zero(); self.classes[i].len()];
        if z.iter().all(|c| field.is_zero(c)) {
            return Ok(out);
        }
        let block = self
            .block(i, t)
            .ok_or_else(|| Error::Internal(format!("nonzero chain in empty block ({i}, {t})")))?;
        let coords = block
            .echelon
            .coordinates(z)
            .ok_or_else(|| Error::Internal(format!("product in degree ({i}, {t}) is not a cycle")))?;
        for (local, &slot) in block.slots.iter().enumerate() {
            out[block.offset + local] = coords[slot].clone();
        }
        Ok(out)
    }

    /// Product of the a-th class of `A_i` with the b-th class of `A_j`, in
    /// global coordinates of `A_(i+j)`.
    pub fn class_product(&self, i: usize, a: usize, j: usize, b: usize) -> Result<Vec<F::Elem>> {
        let field = self.koszul.field();
        if i + j > 3 {
            return Ok(Vec::new());
        }
        let ta = self.classes[i][a].internal_degree;
        let tb = self.classes[j][b].internal_degree;
        let t = ta + tb;
        let k = i + j;
        if self.block(k, t).is_none_or(|blk| blk.reps.is_empty()) {
            // the product still has to be a boundary
            let chain = self
                .koszul
                .multiply(i, ta, self.representative(i, a), j, tb, self.representative(j, b));
            if let Some(blk) = self.block(k, t) {
                if blk.echelon.coordinates(&chain).is_none() {
                    return Err(Error::Internal(format!("product in degree ({k}, {t}) is not a cycle")));
                }
            }
            return Ok(vec![field.zero(); self.classes[k].len()]);
        }
        let chain = self
            .koszul
            .multiply(i, ta, self.representative(i, a), j, tb, self.representative(j, b));
        self.project(k, t, &chain)
    }

    /// Full table `mu11[a][b]` over `A_1 x A_1`.
    pub fn mu11(&self) -> Option<&Vec<Vec<Vec<F::Elem>>>> {
        self.mu11.as_ref()
    }

    /// Table `mu12[a][c]` over `A_1 x A_2`.
    pub fn mu12(&self) -> Option<&Vec<Vec<Vec<F::Elem>>>> {
        self.mu12.as_ref()
    }
}

/// Fills the multiplication tables by multiplying cycle representatives.
pub fn tor_products<'q, F: Field>(mut algebra: TorAlgebra<'q, F>) -> Result<TorAlgebra<'q, F>> {
    let field = algebra.koszul.field();
    let [_, m, a2, n] = algebra.dims();
    let mut mu11 = Vec::with_capacity(m);
    for a in 0..m {
        let mut row = Vec::with_capacity(m);
        for b in 0..m {
            row.push(algebra.class_product(1, a, 1, b)?);
        }
        mu11.push(row);
    }
    let a3_degrees: Vec<u32> = algebra.classes[3].iter().map(|c| c.internal_degree).collect();
    let mut mu12 = Vec::with_capacity(m);
    for a in 0..m {
        let mut row = Vec::with_capacity(a2);
        for c in 0..a2 {
            let t = algebra.classes[1][a].internal_degree + algebra.classes[2][c].internal_degree;
            if a3_degrees.contains(&t) {
                row.push(algebra.class_product(1, a, 2, c)?);
            } else {
                row.push(vec![field.zero(); n]);
            }
        }
        mu12.push(row);
    }
    algebra.mu11 = Some(mu11);
    algebra.mu12 = Some(mu12);
    Ok(algebra)
}
