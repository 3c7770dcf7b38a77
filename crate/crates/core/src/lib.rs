//! Classification of Tor algebras of Artinian graded quotients of k[x,y,z].

pub mod datastore;
pub mod error;
pub mod field;
pub mod groebner;
pub mod inverse;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod report;
pub mod routine;
pub mod sampler;
pub mod tor;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use monomial::Monomial;
pub use poly::{Ideal, Polynomial};
