//! Exact symmetric-function arithmetic centered on Petrie symmetric
//! functions `G(k,m)`: the sum of all degree-`m` monomials whose exponents
//! are all smaller than `k`.
//!
//! * [`partition`]: partitions, dominance, transposes, enumeration.
//! * [`symfunc`]: the ring of symmetric functions in the `m`, `h`, `e`, `p`
//!   and `s` bases with exact rational coefficients.
//! * [`oracle`]: brute-force polynomial arithmetic used as a reference.
//! * [`petrie`]: `G(k,m)`, k-Petrie numbers and the Pieri-type rule.
//! * [`hopf`]: coproduct, antipode, Frobenius and Verschiebung maps, the
//!   operators `U_k`, `V_k` and Bernstein's creation operators.
//! * [`verify`]: self-checking reproductions of identities, as reports.

pub mod error;
pub mod hopf;
pub mod oracle;
pub mod partition;
pub mod petrie;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{partitions_of, Partition};
pub use symfunc::{Basis, Coeff, SymFunc};
