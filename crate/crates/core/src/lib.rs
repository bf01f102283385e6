//! Exact computational Lie theory for magical sl2-triples.

pub mod cayley;
pub mod classify;
pub mod error;
pub mod linalg;
pub mod partitions;
pub mod rootsys;
pub mod scalar;
pub mod sl2data;

pub mod matlie;

pub use cayley::{CayleyDomainDescriptor, ComponentCount, GenusContext, GroupForm};
pub use classify::{CriterionReport, MagicalCaseId};
pub use error::{Error, Result};
pub use partitions::{Partition, RealFormId, RealOrbit, ReductiveType, SignedYoungDiagram};
pub use rootsys::{AlgebraType, DynkinLabels, Family, RootSystem, Sl2Data};
pub use scalar::{GaussQ, Q};
pub use sl2data::{MagicalRecord, ThetaDescriptor};
