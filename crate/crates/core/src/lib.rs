//! Coincidence structures of N particles in d dimensions.
//!
//! The k-body coincidence structure 𝒱ₖ is the union of the linear subspaces
//! where at least k particles share a position. This crate builds those
//! subspaces exactly over ℚ and computes invariants of the structure and of
//! its complement: codimensions, the intersection lattice and its Möbius
//! function, ordering sectors, symmetry group orders on the relative space,
//! first Betti numbers, and winding numbers of loops around codimension-2
//! defects.
//!
//! ```
//! use coincidence::topology::{betti_one, zaslavsky_regions, Caps, ComplementSpec};
//!
//! let caps = Caps::default();
//! let line = ComplementSpec::new(4, 1, 2)?;
//! assert_eq!(zaslavsky_regions(&line, &caps)?.count, 24.into());
//! let traids = ComplementSpec::new(4, 1, 3)?;
//! assert_eq!(betti_one(&traids, &caps)?.b1, 7);
//! # Ok::<(), coincidence::Error>(())
//! ```

pub mod error;
pub mod geometry;
pub mod lattice;
pub mod linalg;
pub mod mesh;
pub mod paths;
pub mod report;
pub mod symmetry;
pub mod topology;

pub use error::{Error, Result};
pub use geometry::{
    build_coincidence_arrangement, cm_relative_split, codimension, dihedral_cos_sq, hyperradius_sq,
    membership, pair_flat, partition_flat, Arrangement, ConfigurationSpace, Flat, ParticlePartition,
    Point, RelativeSplit,
};
pub use lattice::{build_lattice, CharacteristicPolynomial, IntersectionLattice, OrderComplex};
pub use linalg::{RationalMatrix, Scalar, Subspace};
pub use paths::{
    pairwise_winding_2d, transport_winding, validate_path, winding_vector, PLPath, PathValidation, WindingVector,
};
pub use symmetry::{
    apply_isometry, flat_permutation_action, permutation_map, point_group_order, relative_inversion_map,
    sector_action, GroupDescriptor, Isometry, OrthogonalMap, Permutation, TranslationVector,
};
pub use topology::{
    betti_one, connectivity_report, enumerate_sectors, puncture_report, reduced_homology_ranks,
    sector_adjacency, sector_of, zaslavsky_regions, BettiReport, Caps, ComplementSpec, PunctureReport,
    RegionMethod, RegionReport, SectorLabel,
};
