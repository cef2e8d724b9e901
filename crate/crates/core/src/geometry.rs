//! Channel geometry: positions, spheres, the Tx/Rx topology, and the
//! enzyme-region volume calculations.
//!
//! The canonical frame places the Rx center at the origin and the Tx center
//! on the positive x axis at `2 r + d`, where `r` is the common node radius
//! and `d` the surface-to-surface gap. All lengths are micrometers and all
//! volumes cubic micrometers.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::scalar::{cast, report, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("{name} must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: f64 },
    #[error("{name} must be finite")]
    NonFinite { name: &'static str },
    #[error("operation requires an enzyme region hosted around the Rx or Tx, got `{deployment}`")]
    UnhostedRegion { deployment: Deployment },
}

/// A point or displacement in 3D space, in micrometers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: Scalar> Vec3<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero(), F::zero())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn norm_squared(&self) -> F {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> F {
        self.norm_squared().sqrt()
    }

    pub fn distance_squared(&self, other: &Self) -> F {
        (*self - *other).norm_squared()
    }
}

impl<F: Scalar> Add for Vec3<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<F: Scalar> Sub for Vec3<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

/// A sphere with strictly positive radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sphere<F> {
    center: Vec3<F>,
    radius: F,
}

impl<F: Scalar> Sphere<F> {
    pub fn new(center: Vec3<F>, radius: F) -> Result<Self, GeometryError> {
        if !center.is_finite() {
            return Err(GeometryError::NonFinite { name: "center" });
        }
        if !(radius > F::zero()) || !radius.is_finite() {
            return Err(GeometryError::NonPositive {
                name: "radius",
                value: report(radius),
            });
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> Vec3<F> {
        self.center
    }

    pub fn radius(&self) -> F {
        self.radius
    }

    pub fn radius_squared(&self) -> F {
        self.radius * self.radius
    }

    pub fn volume(&self) -> F {
        sphere_volume(self.radius)
    }

    /// Whether `p` lies inside the sphere. Points exactly on the surface
    /// count as inside; every containment test in the crate uses this
    /// convention so boundary handling stays deterministic.
    pub fn contains(&self, p: Vec3<F>) -> bool {
        self.center.distance_squared(&p) <= self.radius_squared()
    }
}

fn sphere_volume<F: Scalar>(radius: F) -> F {
    cast::<F>(4.0 / 3.0) * F::PI() * radius * radius * radius
}

/// Where the enzyme budget is deployed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Deployment {
    NoEnzyme,
    AroundRx,
    AroundTx,
    Everywhere,
}

impl Deployment {
    pub const ALL: [Deployment; 4] = [
        Deployment::NoEnzyme,
        Deployment::AroundRx,
        Deployment::AroundTx,
        Deployment::Everywhere,
    ];

    /// Hosted deployments are the two with a finite spherical region.
    pub fn is_hosted(&self) -> bool {
        matches!(self, Deployment::AroundRx | Deployment::AroundTx)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Deployment::NoEnzyme => "no-enzyme",
            Deployment::AroundRx => "around-rx",
            Deployment::AroundTx => "around-tx",
            Deployment::Everywhere => "everywhere",
        }
    }
}

impl fmt::Display for Deployment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Deployment {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "no-enzyme" => Ok(Deployment::NoEnzyme),
            "around-rx" => Ok(Deployment::AroundRx),
            "around-tx" => Ok(Deployment::AroundTx),
            "everywhere" => Ok(Deployment::Everywhere),
            other => Err(format!(
                "unknown scenario `{other}` (expected no-enzyme, around-rx, around-tx, or everywhere)"
            )),
        }
    }
}

/// The Tx/Rx pair: two equal-radius spheres separated by a surface gap `d`.
///
/// The Rx sits at the origin and the Tx at `(2 r + d, 0, 0)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelTopology<F> {
    tx: Sphere<F>,
    rx: Sphere<F>,
    surface_gap: F,
    center_distance: F,
}

impl<F: Scalar> ChannelTopology<F> {
    pub fn new(radius: F, surface_gap: F) -> Result<Self, GeometryError> {
        if !(radius > F::zero()) || !radius.is_finite() {
            return Err(GeometryError::NonPositive {
                name: "radius",
                value: report(radius),
            });
        }
        // A zero gap (touching spheres) is the non-overlap boundary and is
        // still a valid topology.
        if !(surface_gap >= F::zero()) || !surface_gap.is_finite() {
            return Err(GeometryError::Negative {
                name: "surface_gap",
                value: report(surface_gap),
            });
        }
        let center_distance = surface_gap + (radius + radius);
        let rx = Sphere::new(Vec3::zero(), radius)?;
        let tx = Sphere::new(Vec3::new(center_distance, F::zero(), F::zero()), radius)?;
        Ok(Self {
            tx,
            rx,
            surface_gap,
            center_distance,
        })
    }

    pub fn tx(&self) -> &Sphere<F> {
        &self.tx
    }

    pub fn rx(&self) -> &Sphere<F> {
        &self.rx
    }

    /// Common node radius `r`.
    pub fn radius(&self) -> F {
        self.rx.radius
    }

    /// Surface-to-surface gap `d`.
    pub fn surface_gap(&self) -> F {
        self.surface_gap
    }

    /// Center-to-center distance `2 r + d`.
    pub fn center_distance(&self) -> F {
        self.center_distance
    }

    /// The emission point: the Tx surface point nearest the Rx, on the
    /// Tx-Rx axis. Its distance to the Rx surface equals the gap `d`.
    pub fn emit_point(&self) -> Vec3<F> {
        Vec3::new(self.radius() + self.surface_gap, F::zero(), F::zero())
    }

    /// Center of the sphere hosting an enzyme region, if the deployment
    /// has one.
    pub fn host_center(&self, deployment: Deployment) -> Option<Vec3<F>> {
        match deployment {
            Deployment::AroundRx => Some(self.rx.center()),
            Deployment::AroundTx => Some(self.tx.center()),
            _ => None,
        }
    }
}

/// A fixed spherical enzyme shell extending `r_enz` beyond the host node,
/// excluding the interiors of both nodes, or one of the two degenerate
/// deployments (none / everywhere).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnzymeRegion<F> {
    deployment: Deployment,
    extension_radius: F,
    bounding_radius: F,
    total_volume: F,
}

impl<F: Scalar> EnzymeRegion<F> {
    pub fn no_enzyme() -> Self {
        Self {
            deployment: Deployment::NoEnzyme,
            extension_radius: F::zero(),
            bounding_radius: F::zero(),
            total_volume: F::zero(),
        }
    }

    pub fn everywhere() -> Self {
        Self {
            deployment: Deployment::Everywhere,
            extension_radius: F::infinity(),
            bounding_radius: F::infinity(),
            total_volume: F::infinity(),
        }
    }

    pub fn around_rx(
        topology: &ChannelTopology<F>,
        extension_radius: F,
    ) -> Result<Self, GeometryError> {
        Self::hosted(topology, Deployment::AroundRx, extension_radius)
    }

    pub fn around_tx(
        topology: &ChannelTopology<F>,
        extension_radius: F,
    ) -> Result<Self, GeometryError> {
        Self::hosted(topology, Deployment::AroundTx, extension_radius)
    }

    fn hosted(
        topology: &ChannelTopology<F>,
        deployment: Deployment,
        extension_radius: F,
    ) -> Result<Self, GeometryError> {
        if !(extension_radius > F::zero()) || !extension_radius.is_finite() {
            return Err(GeometryError::NonPositive {
                name: "extension_radius",
                value: report(extension_radius),
            });
        }
        let total_volume = total_volume_from_parts(
            topology.radius(),
            topology.surface_gap(),
            extension_radius,
        );
        Ok(Self {
            deployment,
            extension_radius,
            bounding_radius: topology.radius() + extension_radius,
            total_volume,
        })
    }

    pub fn deployment(&self) -> Deployment {
        self.deployment
    }

    /// Extension `r_enz` beyond the host surface (hosted deployments).
    pub fn extension_radius(&self) -> F {
        self.extension_radius
    }

    /// Bounding-sphere radius `R_enz = r + r_enz` (hosted deployments).
    pub fn bounding_radius(&self) -> F {
        self.bounding_radius
    }

    /// Shell volume with the node interiors excluded. Zero for
    /// [`Deployment::NoEnzyme`] and infinite for [`Deployment::Everywhere`].
    pub fn total_volume(&self) -> F {
        self.total_volume
    }
}

/// Volume of the intersection of two spheres with radii `r1`, `r2` whose
/// centers are `center_dist` apart.
///
/// Disjoint spheres give zero, full containment gives the smaller sphere's
/// volume, and the partial overlap is the two-sphere lens
/// `pi (r1 + r2 - s)^2 (s^2 + 2 s r2 - 3 r2^2 + 2 s r1 + 6 r1 r2 - 3 r1^2) / (12 s)`
/// with `s = center_dist`. Continuous in all three arguments and symmetric
/// in the radii.
pub fn lens_volume<F: Scalar>(r1: F, r2: F, center_dist: F) -> Result<F, GeometryError> {
    for (name, value) in [("r1", r1), ("r2", r2), ("center_dist", center_dist)] {
        if !(value > F::zero()) || !value.is_finite() {
            return Err(GeometryError::NonPositive {
                name,
                value: report(value),
            });
        }
    }
    if center_dist >= r1 + r2 {
        return Ok(F::zero());
    }
    if center_dist <= (r1 - r2).abs() {
        return Ok(sphere_volume(r1.min(r2)));
    }
    let s = center_dist;
    let two = cast::<F>(2.0);
    let three = cast::<F>(3.0);
    let six = cast::<F>(6.0);
    let twelve = cast::<F>(12.0);
    let rim = r1 + r2 - s;
    let poly = s * s + two * s * r2 - three * r2 * r2 + two * s * r1 + six * r1 * r2
        - three * r1 * r1;
    Ok(F::PI() * rim * rim * poly / (twelve * s))
}

/// Volume of a sphere of radius `r_enz` extended around the host node that
/// overlaps the node interiors (the part that must be excluded from the
/// enzyme region).
///
/// Three cases in `r_enz`: once the bounding sphere swallows both nodes the
/// overlap is both node volumes; while it reaches past the host but not the
/// far node it is one node volume; in between it is one node volume plus
/// the lens shared with the far node. Continuous across both boundaries.
pub fn overlap_volume_vlp<F: Scalar>(
    topology: &ChannelTopology<F>,
    region: &EnzymeRegion<F>,
) -> Result<F, GeometryError> {
    require_hosted(region)?;
    Ok(vlp_from_parts(
        topology.radius(),
        topology.surface_gap(),
        region.extension_radius(),
    ))
}

fn vlp_from_parts<F: Scalar>(radius: F, gap: F, extension: F) -> F {
    let node_volume = sphere_volume(radius);
    if extension >= gap + radius + radius {
        node_volume + node_volume
    } else if extension <= gap {
        node_volume
    } else {
        let bounding = radius + extension;
        let center_distance = gap + radius + radius;
        // Partial overlap implies the lens preconditions hold.
        let lens = lens_volume(bounding, radius, center_distance)
            .expect("positive radii and distance in the partial-overlap case");
        node_volume + lens
    }
}

/// Total enzyme-region volume: the bounding sphere minus the node overlap.
/// Strictly positive and strictly increasing in the extension radius.
pub fn total_enzyme_volume<F: Scalar>(
    topology: &ChannelTopology<F>,
    region: &EnzymeRegion<F>,
) -> Result<F, GeometryError> {
    require_hosted(region)?;
    Ok(total_volume_from_parts(
        topology.radius(),
        topology.surface_gap(),
        region.extension_radius(),
    ))
}

fn total_volume_from_parts<F: Scalar>(radius: F, gap: F, extension: F) -> F {
    sphere_volume(radius + extension) - vlp_from_parts(radius, gap, extension)
}

fn require_hosted<F: Scalar>(region: &EnzymeRegion<F>) -> Result<(), GeometryError> {
    if region.deployment().is_hosted() {
        Ok(())
    } else {
        Err(GeometryError::UnhostedRegion {
            deployment: region.deployment(),
        })
    }
}

/// Whether degradation applies at `p`: inside the region's bounding sphere
/// (everything, for the everywhere deployment) and outside both node
/// interiors. Always false when no enzymes are deployed.
pub fn in_enzyme_region<F: Scalar>(
    topology: &ChannelTopology<F>,
    region: &EnzymeRegion<F>,
    p: Vec3<F>,
) -> bool {
    let outside_nodes = !topology.tx().contains(p) && !topology.rx().contains(p);
    match region.deployment() {
        Deployment::NoEnzyme => false,
        Deployment::Everywhere => outside_nodes,
        Deployment::AroundRx | Deployment::AroundTx => {
            let center = topology
                .host_center(region.deployment())
                .expect("hosted deployment has a host center");
            let r = region.bounding_radius();
            center.distance_squared(&p) <= r * r && outside_nodes
        }
    }
}

/// A Monte Carlo volume estimate with its binomial standard error.
#[derive(Clone, Copy, Debug)]
pub struct VolumeEstimate {
    pub volume: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// Estimates the volume of `{ p in box : predicate(p) }` by uniform
/// rejection sampling, deterministically from `seed`.
///
/// This is the independent cross-check for the closed-form volumes above
/// (and is what `mcvd validate` runs); it deliberately shares no code with
/// them.
pub fn monte_carlo_volume(
    box_min: Vec3<f64>,
    box_max: Vec3<f64>,
    samples: u64,
    seed: u64,
    predicate: impl Fn(Vec3<f64>) -> bool,
) -> VolumeEstimate {
    assert!(samples > 0, "sample count must be positive");
    assert!(
        box_max.x > box_min.x && box_max.y > box_min.y && box_max.z > box_min.z,
        "degenerate sampling box"
    );
    let extent = box_max - box_min;
    let box_volume = extent.x * extent.y * extent.z;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..samples {
        let p = Vec3::new(
            box_min.x + extent.x * rng.random::<f64>(),
            box_min.y + extent.y * rng.random::<f64>(),
            box_min.z + extent.z * rng.random::<f64>(),
        );
        if predicate(p) {
            hits += 1;
        }
    }
    let fraction = hits as f64 / samples as f64;
    VolumeEstimate {
        volume: box_volume * fraction,
        std_error: box_volume * (fraction * (1.0 - fraction) / samples as f64).sqrt(),
        samples,
    }
}

/// Axis-aligned box enclosing both spheres, for rejection sampling.
pub fn bounding_box<F: Scalar>(spheres: &[Sphere<F>]) -> (Vec3<F>, Vec3<F>) {
    assert!(!spheres.is_empty());
    let mut min = Vec3::new(F::infinity(), F::infinity(), F::infinity());
    let mut max = Vec3::new(F::neg_infinity(), F::neg_infinity(), F::neg_infinity());
    for s in spheres {
        let c = s.center();
        let r = s.radius();
        min.x = min.x.min(c.x - r);
        min.y = min.y.min(c.y - r);
        min.z = min.z.min(c.z - r);
        max.x = max.x.max(c.x + r);
        max.y = max.y.max(c.y + r);
        max.z = max.z.max(c.z + r);
    }
    (min, max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sphere(x: f64, y: f64, z: f64, r: f64) -> Sphere<f64> {
        Sphere::new(Vec3::new(x, y, z), r).unwrap()
    }

    #[test]
    fn contains_center_boundary_and_outside() {
        let s = sphere(0.0, 0.0, 0.0, 5.0);
        assert!(s.contains(Vec3::zero()));
        assert!(s.contains(Vec3::new(5.0, 0.0, 0.0)));
        assert!(!s.contains(Vec3::new(5.001, 0.0, 0.0)));
    }

    #[test]
    fn sphere_rejects_nonpositive_radius() {
        assert!(Sphere::new(Vec3::<f64>::zero(), 0.0).is_err());
        assert!(Sphere::new(Vec3::<f64>::zero(), -1.0).is_err());
        assert!(Sphere::new(Vec3::<f64>::zero(), f64::NAN).is_err());
    }

    #[test]
    fn lens_volume_tangent_spheres_is_zero() {
        assert_eq!(lens_volume(5.0, 5.0, 10.0).unwrap(), 0.0);
        assert_eq!(lens_volume(5.0, 5.0, 12.0).unwrap(), 0.0);
    }

    #[test]
    fn lens_volume_full_containment_is_smaller_sphere() {
        let v = lens_volume(10.0, 3.0, 2.0).unwrap();
        assert_relative_eq!(v, 113.09733552923256, max_relative = 1e-14);
        // Symmetric containment.
        assert_relative_eq!(
            lens_volume(3.0, 10.0, 2.0).unwrap(),
            v,
            max_relative = 1e-14
        );
    }

    #[test]
    fn lens_volume_partial_overlap_matches_reference() {
        // Reference value evaluated independently at 40-digit precision.
        assert_relative_eq!(
            lens_volume(6.0, 5.0, 7.0).unwrap(),
            119.67972013675403,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            lens_volume(13.0, 5.0, 14.0).unwrap(),
            151.99324457367762,
            max_relative = 1e-13
        );
    }

    #[test]
    fn lens_volume_rejects_nonpositive_inputs() {
        assert!(lens_volume(0.0, 1.0, 1.0).is_err());
        assert!(lens_volume(1.0, -1.0, 1.0).is_err());
        assert!(lens_volume(1.0, 1.0, 0.0).is_err());
    }

    fn fixture(r: f64, d: f64) -> ChannelTopology<f64> {
        ChannelTopology::new(r, d).unwrap()
    }

    #[test]
    fn topology_canonical_frame() {
        let topo = fixture(5.0, 4.0);
        assert_eq!(topo.center_distance(), 14.0);
        assert_eq!(topo.rx().center(), Vec3::zero());
        assert_eq!(topo.tx().center(), Vec3::new(14.0, 0.0, 0.0));
        assert_eq!(topo.emit_point(), Vec3::new(9.0, 0.0, 0.0));
    }

    #[test]
    fn topology_rejects_overlap_and_bad_radius() {
        assert!(ChannelTopology::new(5.0, -0.5).is_err());
        assert!(ChannelTopology::new(0.0, 4.0).is_err());
        assert!(ChannelTopology::new(5.0, 0.0).is_ok());
    }

    #[test]
    fn vlp_host_only_case() {
        let topo = fixture(5.0, 4.0);
        let region = EnzymeRegion::around_rx(&topo, 4.0).unwrap();
        assert_relative_eq!(
            overlap_volume_vlp(&topo, &region).unwrap(),
            523.5987755982989,
            max_relative = 1e-14
        );
    }

    #[test]
    fn vlp_both_nodes_case() {
        let topo = fixture(5.0, 4.0);
        let region = EnzymeRegion::around_rx(&topo, 14.0).unwrap();
        assert_relative_eq!(
            overlap_volume_vlp(&topo, &region).unwrap(),
            1047.1975511965977,
            max_relative = 1e-14
        );
    }

    #[test]
    fn vlp_partial_overlap_case() {
        let topo = fixture(5.0, 4.0);
        let region = EnzymeRegion::around_rx(&topo, 8.0).unwrap();
        // Host node volume plus lens(13, 5, 14); reference at 40 digits.
        assert_relative_eq!(
            overlap_volume_vlp(&topo, &region).unwrap(),
            675.5920201719765,
            max_relative = 1e-13
        );
    }

    #[test]
    fn vlp_continuous_at_case_boundaries() {
        let topo = fixture(5.0, 4.0);
        for boundary in [4.0_f64, 14.0] {
            let eps = boundary * 1e-12;
            let below = EnzymeRegion::around_rx(&topo, boundary - eps).unwrap();
            let at = EnzymeRegion::around_rx(&topo, boundary).unwrap();
            let above = EnzymeRegion::around_rx(&topo, boundary + eps).unwrap();
            let v_below = overlap_volume_vlp(&topo, &below).unwrap();
            let v_at = overlap_volume_vlp(&topo, &at).unwrap();
            let v_above = overlap_volume_vlp(&topo, &above).unwrap();
            assert_relative_eq!(v_below, v_at, max_relative = 1e-9);
            assert_relative_eq!(v_above, v_at, max_relative = 1e-9);
        }
    }

    #[test]
    fn vlp_rejects_unhosted_regions() {
        let topo = fixture(5.0, 4.0);
        for region in [EnzymeRegion::no_enzyme(), EnzymeRegion::everywhere()] {
            assert!(matches!(
                overlap_volume_vlp(&topo, &region),
                Err(GeometryError::UnhostedRegion { .. })
            ));
            assert!(total_enzyme_volume(&topo, &region).is_err());
        }
    }

    #[test]
    fn total_volume_matches_published_formula() {
        let topo = fixture(5.0, 4.0);
        let r1 = EnzymeRegion::around_rx(&topo, 1.0).unwrap();
        let r2 = EnzymeRegion::around_rx(&topo, 2.0).unwrap();
        assert_relative_eq!(
            total_enzyme_volume(&topo, &r1).unwrap(),
            381.1799086355616,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            total_enzyme_volume(&topo, &r2).unwrap(),
            913.1562646434332,
            max_relative = 1e-13
        );
        assert_eq!(total_enzyme_volume(&topo, &r1).unwrap(), r1.total_volume());
    }

    #[test]
    fn total_volume_vanishes_with_extension() {
        let topo = fixture(5.0, 4.0);
        let thin = EnzymeRegion::around_rx(&topo, 1e-9).unwrap();
        let v = total_enzyme_volume(&topo, &thin).unwrap();
        assert!(v > 0.0 && v < 1e-6, "near-zero shell volume, got {v}");
    }

    #[test]
    fn total_volume_same_for_both_hosts() {
        // Equal node radii make the construction symmetric.
        let topo = fixture(5.0, 4.0);
        for ext in [0.5, 2.0, 6.0, 11.0, 20.0] {
            let rx = EnzymeRegion::around_rx(&topo, ext).unwrap();
            let tx = EnzymeRegion::around_tx(&topo, ext).unwrap();
            assert_eq!(rx.total_volume(), tx.total_volume());
        }
    }

    #[test]
    fn in_region_excludes_node_interiors() {
        let topo = fixture(5.0, 4.0);
        let region = EnzymeRegion::around_rx(&topo, 4.0).unwrap();
        // Rx center is inside the bounding sphere but inside the Rx.
        assert!(!in_enzyme_region(&topo, &region, Vec3::zero()));
        // In the shell, outside both nodes.
        assert!(in_enzyme_region(&topo, &region, Vec3::new(0.0, 7.0, 0.0)));
        // Outside the bounding sphere.
        assert!(!in_enzyme_region(&topo, &region, Vec3::new(0.0, 9.5, 0.0)));
    }

    #[test]
    fn in_region_degenerate_deployments() {
        let topo = fixture(5.0, 4.0);
        let none = EnzymeRegion::no_enzyme();
        let all = EnzymeRegion::everywhere();
        let outside = Vec3::new(0.0, 40.0, 0.0);
        assert!(!in_enzyme_region(&topo, &none, outside));
        assert!(in_enzyme_region(&topo, &all, outside));
        assert!(!in_enzyme_region(&topo, &all, topo.tx().center()));
    }

    #[test]
    fn deployment_labels_round_trip() {
        for d in Deployment::ALL {
            assert_eq!(d.label().parse::<Deployment>().unwrap(), d);
        }
        assert!("nowhere".parse::<Deployment>().is_err());
    }
}
