//! Group arithmetic for every group in play: `SL(2,ℝ)` and its
//! rotation/scale/shear factors, the Heisenberg group under both
//! multiplication conventions, the Jacobi semidirect product, and the
//! extension groups `Q`, `E`, `W`, `V`, `S` with their abelian companions.
//!
//! All operations are pure functions of immutable values.

pub mod axioms;
pub mod extended;
pub mod heisenberg;
pub mod iwasawa;
pub mod jacobi;
pub mod law;
pub mod sl2;

pub use axioms::{check_group_axioms, AxiomReport};
pub use extended::{BPoint, EPoint, FrakPoint, QElement, SPoint, VPoint, WPoint};
pub use heisenberg::{HeisConvention, HeisenbergPoint};
pub use iwasawa::{IwasawaFactors, IwasawaOrder};
pub use jacobi::{sl2_action, ActionConvention, JacobiContext, JacobiElement};
pub use sl2::Sl2Element;
