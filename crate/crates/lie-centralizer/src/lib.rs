//! Centralizers of elements in simply connected compact simple Lie groups.
//!
//! Given a simple type and a rational point `u` of the fundamental Weyl cell (in
//! fundamental-weight coordinates), [`kernel::full_centralizer`] returns the local type
//! `G_1 x ... x G_k x T^r` of the centralizer of `exp(u)` together with the kernel of the
//! covering map onto it, including explicit generators. All arithmetic is exact.

pub mod abelian;
pub mod batch;
pub mod catalog;
pub mod deficiency;
pub mod error;
pub mod kernel;
pub mod linalg;
pub mod local_type;
pub mod root_data;
pub mod weyl_cell;

pub use error::{Error, Result};
pub use kernel::{full_centralizer, CentralizerResult};
pub use linalg::Rational;
pub use local_type::{local_type, Branch, LocalType};
pub use root_data::{GroupId, LieType, RootSystem};
pub use weyl_cell::{cell_membership, CellPoint};
