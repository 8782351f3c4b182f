//! Class groups of imaginary quadratic fields, transfer kernels of finite
//! p-groups, `Z_p[G]`-module decompositions and norm-kernel rank
//! heuristics.
//!
//! * [`quadform`]: binary quadratic forms and class groups.
//! * [`abgroup`]: finite abelian groups via Smith and Hermite normal forms.
//! * [`pcgroup`]: power-commutator presentations, transfer and a catalog of small p-groups.
//! * [`gmodule`]: group-algebra idempotents, module decompositions, relative extension data.
//! * [`heuristics`]: the norm-kernel rank distribution and its samplers.
//! * [`capcli`]: the scanner, the embedded 5-rank table and the `capcli` commands.

// index loops mirror the matrix notation they implement
#![allow(clippy::needless_range_loop)]

pub mod abgroup;
pub mod capcli;
pub mod gmodule;
pub mod heuristics;
pub mod pcgroup;
pub mod quadform;
