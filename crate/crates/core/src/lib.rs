//! Particle-based simulation and closed-form analysis of a 3D molecular
//! communication channel in which messenger molecules diffuse from a
//! reflecting spherical transmitter to an absorbing spherical receiver,
//! optionally degraded by enzymes confined to a spherical shell around
//! either node.
//!
//! The crate is organized around five pieces:
//!
//! - [`geometry`]: positions, spheres, the Tx/Rx topology, and the
//!   enzyme-region volume computations (sphere-sphere lens volumes).
//! - [`analytic`]: closed-form hitting-rate and cumulative-fraction models
//!   for the point-transmitter channel, with and without degradation, plus
//!   the effective-half-life rescaling that keeps the total enzyme amount
//!   constant across region sizes.
//! - [`sim`]: the Brownian-dynamics Monte Carlo engine (Gaussian steps,
//!   Tx reflection, Rx absorption, in-region degradation) with fully
//!   deterministic, parallelism-independent replication seeding.
//! - [`metrics`]: time-binned received signals and the
//!   interference-to-total-received (ITR) ratio with cross-replication
//!   statistics.
//! - [`quadrature`]: a small adaptive integrator used to cross-check the
//!   closed forms against their defining integrals.
//!
//! All numeric code is generic over the [`Scalar`] floating-point type;
//! the `f64` instantiations used by the CLI are aliased at the crate root.

pub mod analytic;
pub mod geometry;
pub mod metrics;
pub mod quadrature;
mod scalar;
pub mod sim;
pub mod special;

pub use analytic::{ChannelParams, EnzymeKinetics, ModelError};
pub use geometry::{ChannelTopology, Deployment, EnzymeRegion, GeometryError, Sphere, Vec3};
pub use metrics::{BinnedSignal, ItrSummary, MetricsError, ScenarioPoint};
pub use scalar::Scalar;
pub use sim::{
    ArrivalRecord, EmissionMode, MoleculeState, SimError, SimulationConfig, TxGeometry,
};

/// Default scalar for simulation work. `f32` is supported through the
/// generic API but halves the usable precision of the analytic oracles.
pub type Real = f64;

pub type RealVec3 = Vec3<Real>;
pub type RealSphere = Sphere<Real>;
pub type RealTopology = ChannelTopology<Real>;
pub type RealEnzymeRegion = EnzymeRegion<Real>;
pub type RealChannelParams = ChannelParams<Real>;
pub type RealKinetics = EnzymeKinetics<Real>;
pub type RealSimulationConfig = SimulationConfig<Real>;
pub type RealArrivalRecord = ArrivalRecord<Real>;
pub type RealBinnedSignal = BinnedSignal<Real>;
pub type RealItrSummary = ItrSummary<Real>;
