//! Multi-twisted codes over finite fields: exact arithmetic, code
//! invariants, and structural LCD criteria checked against each other.

pub mod audit;
pub mod code;
pub mod error;
pub mod fixtures;
pub mod galois;
pub mod matrix;
pub mod mt;
pub mod poly;
pub mod polymat;
pub mod report;
pub mod specfile;

pub use code::{CodeFacts, LinearCode, DEFAULT_CAP};
pub use error::{Error, Result};
pub use galois::{Elem, Field, FieldElement};
pub use matrix::{EchelonBasis, Matrix};
pub use mt::{Claim, LcdVerdict, MtSpec, Verdict, VerdictWitness};
pub use poly::Poly;
pub use polymat::PolyMatrix;
