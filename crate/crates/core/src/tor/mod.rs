//! The Tor algebra `Tor_•(R/I, k)` computed from the Koszul complex on
//! x, y, z, its rank invariants and the resulting class.

mod homology;
mod koszul;

pub use homology::{graded_homology, tor_products, ClassInfo, TorAlgebra};
pub use koszul::{koszul_complex, KoszulComplex};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::QuotientPresentation;
use crate::linalg::rank;

/// The five multiplication patterns a codimension 3 Tor algebra can have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorClass {
    B,
    C,
    G,
    H,
    T,
}

impl fmt::Display for TorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TorClass::B => "B",
            TorClass::C => "C",
            TorClass::G => "G",
            TorClass::H => "H",
            TorClass::T => "T",
        };
        f.write_str(s)
    }
}

impl FromStr for TorClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(TorClass::B),
            "C" => Ok(TorClass::C),
            "G" => Ok(TorClass::G),
            "H" => Ok(TorClass::H),
            "T" => Ok(TorClass::T),
            other => Err(Error::Parse {
                token: other.to_string(),
                message: "expected one of B, C, G, H, T".into(),
            }),
        }
    }
}

/// `(m, n, class, p, q, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorProfile {
    pub m: usize,
    pub n: usize,
    pub class: TorClass,
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl fmt::Display for TorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{},{})", self.m, self.n, self.class, self.p, self.q, self.r)
    }
}

/// Ranks extracted from the multiplication tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorInvariants {
    pub m: usize,
    pub n: usize,
    pub dim_a2: usize,
    pub p: usize,
    pub q: usize,
    /// Rank of `A_2 → Hom(A_1, A_3)`.
    pub r: usize,
    /// Rank of `A_1 → Hom(A_2, A_3)`.
    pub r_first: usize,
    /// Rank of `A_1 → Hom(A_1, A_2)`.
    pub s: usize,
}

pub fn compute_invariants<F: Field>(algebra: &TorAlgebra<'_, F>) -> Result<TorInvariants> {
    let field = algebra.koszul().field();
    let (Some(mu11), Some(mu12)) = (algebra.mu11(), algebra.mu12()) else {
        return Err(Error::Internal("products have not been computed".into()));
    };
    let [_, m, dim_a2, n] = algebra.dims();
    let p = rank(field, dim_a2, mu11.iter().flatten().cloned());
    let q = rank(field, n, mu12.iter().flatten().cloned());
    let r = rank(
        field,
        m * n,
        (0..dim_a2).map(|c| (0..m).flat_map(|a| mu12[a][c].iter().cloned()).collect()),
    );
    let r_first = rank(field, dim_a2 * n, mu12.iter().map(|row| row.concat()));
    let s = rank(field, m * dim_a2, mu11.iter().map(|row| row.concat()));
    Ok(TorInvariants {
        m,
        n,
        dim_a2,
        p,
        q,
        r,
        r_first,
        s,
    })
}

/// Decides the class from the invariants.
pub fn classify(inv: &TorInvariants) -> Result<TorProfile> {
    let TorInvariants { m, n, p, q, r, s, .. } = *inv;
    let class = match (p, q, r) {
        (0, 1, r) if r >= 2 => TorClass::G,
        (1, 1, 2) => TorClass::B,
        (3, 1, 3) if (m, n) == (3, 1) => TorClass::C,
        (3, 0, 0) => match s {
            3 => TorClass::T,
            4 => TorClass::H,
            _ => {
                return Err(Error::Unclassifiable(format!(
                    "(p,q,r) = (3,0,0) with A_1 → Hom(A_1,A_2) of rank {s}"
                )))
            }
        },
        _ if r == q => TorClass::H,
        _ => {
            return Err(Error::Unclassifiable(format!(
                "(m,n,p,q,r) = ({m},{n},{p},{q},{r}) matches no multiplication pattern"
            )))
        }
    };
    Ok(TorProfile { m, n, class, p, q, r })
}

/// Homology, products, invariants and class of an Artinian quotient.
pub fn tor_invariants<F: Field>(quotient: &QuotientPresentation<F>) -> Result<TorInvariants> {
    let algebra = tor_products(graded_homology(koszul_complex(quotient))?)?;
    compute_invariants(&algebra)
}

pub fn classify_quotient<F: Field>(quotient: &QuotientPresentation<F>) -> Result<TorProfile> {
    classify(&tor_invariants(quotient)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::groebner::quotient_presentation;
    use crate::poly::Ideal;

    fn profile(text: &str) -> TorProfile {
        let f = PrimeField::new(3).unwrap();
        let q = quotient_presentation(&Ideal::parse(text, f).unwrap()).unwrap();
        classify_quotient(&q).unwrap()
    }

    #[test]
    fn maximal_ideal_gives_exterior_algebra() {
        let f = PrimeField::new(3).unwrap();
        let q = quotient_presentation(&Ideal::parse("matrix{{x,y,z}}", f).unwrap()).unwrap();
        let kz = koszul_complex(&q);
        assert_eq!(kz.dims(), [1, 3, 3, 1]);
        for i in 1..=3 {
            for col in kz.full_differential(i) {
                assert!(col.iter().all(|c| *c == 0));
            }
        }
        let a = graded_homology(kz).unwrap();
        assert_eq!(a.dims(), [1, 3, 3, 1]);
    }

    #[test]
    fn complete_intersection_profile() {
        let p = profile("matrix{{x^2,y^2,z^2}}");
        assert_eq!((p.m, p.n, p.p, p.q, p.r), (3, 1, 3, 1, 3));
        assert_eq!(p.class, TorClass::C);
    }

    #[test]
    fn sample_rows() {
        assert_eq!(profile("matrix{{z^2,x*z,y^2,x*y,x^3}}").to_string(), "(5,2,B,1,1,2)");
        assert_eq!(profile("matrix{{z^3,y^3,x^3,x*y*z^2,x*y^2*z}}").to_string(), "(5,4,T,3,0,0)");
        assert_eq!(profile("matrix{{y*z,x*z,y^3,x*y^2+z^3,x^2*y,x^3}}").to_string(), "(6,2,G,0,1,3)");
    }

    #[test]
    fn rational_field_agrees() {
        let q = quotient_presentation(&Ideal::parse("matrix{{z^2,x*z,y^2,x*y,x^3}}", Rationals).unwrap()).unwrap();
        assert_eq!(classify_quotient(&q).unwrap().to_string(), "(5,2,B,1,1,2)");
    }

    #[test]
    fn decision_table() {
        let inv = |m, n, p, q, r, s| TorInvariants {
            m,
            n,
            dim_a2: m + n - 1,
            p,
            q,
            r,
            r_first: 0,
            s,
        };
        assert_eq!(classify(&inv(8, 2, 0, 1, 5, 0)).unwrap().class, TorClass::G);
        assert_eq!(classify(&inv(5, 4, 3, 0, 0, 3)).unwrap().class, TorClass::T);
        assert_eq!(classify(&inv(5, 4, 3, 0, 0, 4)).unwrap().class, TorClass::H);
        assert!(classify(&inv(5, 4, 3, 0, 0, 5)).is_err());
        assert_eq!(classify(&inv(4, 3, 0, 1, 1, 0)).unwrap().class, TorClass::H);
        assert!(matches!(classify(&inv(6, 3, 1, 2, 1, 2)), Err(Error::Unclassifiable(_))));
    }
}
