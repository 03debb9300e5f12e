//! Exact computations on Cox rings of simplicial complete toric varieties:
//! class groups, graded pieces, Jacobian rings, primitive Hodge numbers,
//! Cox–Gorenstein checks and Noether–Lefschetz bound arithmetic.

pub mod error;
pub mod fan;
pub mod generic;
pub mod grading;
pub mod hodge;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod memo;
pub mod modp;
pub mod nl;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod toric;

pub use error::{Error, Result};
pub use fan::{Fan, RawFan};
pub use grading::{ClassGroup, DivisorClass};
pub use hodge::{Certificate, HodgeOptions, HodgeReport};
pub use ideal::GradedIdeal;
pub use poly::GradedPolynomial;
pub use ring::{CoxRing, Monomial};
pub use toric::ToricVariety;
