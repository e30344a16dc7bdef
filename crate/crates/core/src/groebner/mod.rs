//! Buchberger's algorithm on submodules of free modules, normal forms with
//! cofactors, and syzygies of matrix rows by the augmentation method.

mod buchberger;
mod module;
mod reduce;
mod syzygy;

pub use buchberger::buchberger;
pub use module::{ModuleElement, ModuleOrdering, WithinGroup};
pub use reduce::{normal_form_with_cofactors, NormalForm};
pub use syzygy::{ideal_basis, reduce_poly, syzygies_of_rows, AugmentedGb};
