//! Concrete Lie algebra models and the brute-force magical oracle.

pub mod chevalley;
pub mod classical;
pub mod model;
pub mod sigma;
pub mod structure;
pub mod transform;
pub mod triple;

pub use chevalley::chevalley_algebra;
pub use classical::classical_algebra;
pub use model::{Classical, JacobiReport, LieModel};
pub use sigma::{is_magical_oracle, sigma_e, InvolutionMap, OracleReport};
pub use structure::{
    centralizer_of_centralizer, generated_subalgebra, triple_centralizer, verify_structure, CentralizerData,
    StructureReport,
};
pub use transform::{cayley_inverse, cayley_transform, check_cayley, to_gauss, CayleyCheck};
pub use triple::{
    case4_triple, jm_complete, nilpotent_from_partition, triple_from_diagram, triple_from_partition, RedRoots,
    Sl2Triple, DIAGRAM_RETRIES,
};
