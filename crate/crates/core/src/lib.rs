//! Quantaloid-enriched semicategories: finite quantaloids, semicategories
//! and semidistributors, presheaves and their regular and Yoneda
//! subcategories, Morita equivalence, idempotent splitting, and
//! order-theoretic instances.

pub mod completion;
pub mod enumerate;
pub mod error;
pub mod gen;
pub mod instances;
pub mod lattice;
pub mod matrix;
pub mod morita;
pub mod presheaf;
pub mod quantaloid;
pub mod report;
pub mod semicat;
pub mod workspace;

pub use error::{Error, Result, Side};
pub use lattice::{Elem, SupLattice};
pub use matrix::Matrix;
pub use presheaf::{Presheaf, QCategoryView, Variance};
pub use quantaloid::{ObjId, QArrow, Quantaloid, RawQuantaloid};
pub use semicat::{SemiCategory, SemiDistributor, SemiFunctor, TypedSet};
pub use workspace::Workspace;
