//! Quasisymmetric power sums: combinatorics, fillings, basis changes and
//! Hopf structure for QSym and NCQSym, with a polynomial oracle.

pub mod combinat;
pub mod error;
pub mod fillings;
pub mod json;
pub mod linear;
pub mod mn;
pub mod ncqsym;
pub mod oracle;
pub mod qsym;
pub mod verify;
