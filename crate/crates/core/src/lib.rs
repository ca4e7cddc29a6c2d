//! Exact computations for the wall-crossing tower of rank-2 Bradlow pair
//! moduli on a curve, the divisor-class arithmetic that certifies each step of
//! the tower as a log flip, and a genus-0 catalecticant laboratory.
//!
//! Everything is exact: scalars are arbitrary-precision [`Rational`]s and no
//! floating point is used anywhere.

pub mod catalecticant;
pub mod divisor;
pub mod error;
pub mod exact;
pub mod stability;
pub mod tower;

pub use catalecticant::{CurveParam, ProjPoint, SecantWitness};
pub use divisor::{Certificate, DiscrepancyRow, DivClass, RayClass, RaySide};
pub use error::{Error, Result};
pub use exact::{Matrix, Order, PolyMatrix, RatMatrix, Rational, RationalSampler, UniPoly};
pub use stability::{
    Chamber, Destabilizer, HnFiltration, PairInvariants, StabilityVerdict, Status,
    TripleInvariants, Wall,
};
pub use tower::{FinalTarget, SeriesMap, SpaceDescriptor, TowerReport, WallDatum};
