//! Exact linear symmetries of the coincidence structures.
//!
//! Particle permutations act by permuting particle blocks, the relative
//! inversion negates 𝒱_N⊥ while fixing 𝒱_N, and uniform rotations apply the
//! same rational orthogonal d×d matrix to every particle. The finite point
//! group on 𝒱_N⊥ is enumerated by breadth-first closure over generators.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Arrangement, ConfigurationSpace, Flat, Point};
use crate::linalg::{self, RationalMatrix, Scalar, Subspace};

/// Bijection on {1..N}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// `images[i-1]` is the image of particle `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if !(1..=n).contains(&v) || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on 1..={n}")));
            }
        }
        Ok(Self { images })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::cycle(n, &[i, j])
    }

    /// The cycle `c[0] → c[1] → … → c[0]`.
    pub fn cycle(n: usize, c: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for (idx, &from) in c.iter().enumerate() {
            let to = c[(idx + 1) % c.len()];
            if !(1..=n).contains(&from) {
                return Err(Error::InvalidPermutation(format!("index {from} outside 1..={n}")));
            }
            images[from - 1] = to;
        }
        Self::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "permutations of different degree");
        Self {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// All N! permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    /// Adjacent transpositions (1 2), (2 3), …, (N−1 N).
    pub fn adjacent_transpositions(n: usize) -> Vec<Self> {
        (1..n)
            .map(|i| Self::transposition(n, i, i + 1).expect("in range"))
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapKind {
    Permutation(Permutation),
    RelativeInversion,
    UniformRotation,
    Composite,
}

/// Exact orthogonal map on ℚ^{Nd}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalMap {
    space: ConfigurationSpace,
    matrix: RationalMatrix,
    kind: MapKind,
}

impl OrthogonalMap {
    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn space(&self) -> ConfigurationSpace {
        self.space
    }

    /// `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let kind = match (&self.kind, &other.kind) {
            (MapKind::Permutation(p), MapKind::Permutation(q)) => MapKind::Permutation(p.compose(q)),
            _ => MapKind::Composite,
        };
        Ok(Self {
            space: self.space,
            matrix: self.matrix.mul(&other.matrix)?,
            kind,
        })
    }

    pub fn apply(&self, p: &Point) -> Result<Point> {
        Point::new(p.space(), self.matrix.mul_vec(p.coords())?)
    }

    /// Image of a flat's subspace under the map.
    pub fn image_subspace(&self, f: &Flat) -> Result<Subspace> {
        let images = f
            .subspace()
            .basis()
            .iter()
            .map(|b| self.matrix.mul_vec(b))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.space.total_dim(), images)
    }
}

/// Block permutation sending particle `i`'s block to slot `perm(i)`.
pub fn permutation_map(space: ConfigurationSpace, perm: &Permutation) -> Result<OrthogonalMap> {
    if perm.n() != space.n_particles() {
        return Err(Error::InvalidPermutation(format!(
            "degree {} does not match {} particles",
            perm.n(),
            space.n_particles()
        )));
    }
    let mut m = RationalMatrix::zeros(space.total_dim(), space.total_dim());
    for i in 1..=space.n_particles() {
        for c in 0..space.space_dim() {
            m[(space.coord(perm.apply(i), c), space.coord(i, c))] = Scalar::one();
        }
    }
    Ok(OrthogonalMap {
        space,
        matrix: m,
        kind: MapKind::Permutation(perm.clone()),
    })
}

/// i⊥ = 2·P − I with P the projection onto 𝒱_N.
pub fn relative_inversion_map(space: ConfigurationSpace) -> OrthogonalMap {
    let (n, d) = (space.n_particles(), space.space_dim());
    let total = space.total_dim();
    let two_over_n = linalg::ratio(2, n as i64);
    let mut m = RationalMatrix::zeros(total, total);
    for i in 1..=n {
        for j in 1..=n {
            for c in 0..d {
                let (r, s) = (space.coord(i, c), space.coord(j, c));
                m[(r, s)] = if r == s {
                    &two_over_n - Scalar::one()
                } else {
                    two_over_n.clone()
                };
            }
        }
    }
    OrthogonalMap {
        space,
        matrix: m,
        kind: MapKind::RelativeInversion,
    }
}

/// 𝐱ᵢ → O𝐱ᵢ for every particle; `rotation` must be a rational orthogonal d×d matrix.
pub fn uniform_map(space: ConfigurationSpace, rotation: &RationalMatrix) -> Result<OrthogonalMap> {
    let d = space.space_dim();
    if rotation.rows() != d || rotation.cols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: rotation.rows().max(rotation.cols()),
        });
    }
    if !rotation.is_orthogonal() {
        return Err(Error::NotOrthogonal);
    }
    let total = space.total_dim();
    let mut m = RationalMatrix::zeros(total, total);
    for i in 1..=space.n_particles() {
        for r in 0..d {
            for c in 0..d {
                m[(space.coord(i, r), space.coord(i, c))] = rotation[(r, c)].clone();
            }
        }
    }
    Ok(OrthogonalMap {
        space,
        matrix: m,
        kind: MapKind::UniformRotation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationVector {
    pub shift: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub enum Isometry {
    Linear(OrthogonalMap),
    Translation(TranslationVector),
    Scale(Scalar),
}

pub fn apply_isometry(p: &Point, m: &Isometry) -> Result<Point> {
    let space = p.space();
    match m {
        Isometry::Linear(map) => {
            if map.space != space {
                return Err(Error::DimensionMismatch {
                    expected: map.space.total_dim(),
                    found: space.total_dim(),
                });
            }
            map.apply(p)
        }
        Isometry::Translation(t) => {
            let d = space.space_dim();
            if t.shift.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: t.shift.len(),
                });
            }
            let coords = p
                .coords()
                .iter()
                .enumerate()
                .map(|(idx, x)| x + &t.shift[idx % d])
                .collect();
            Point::new(space, coords)
        }
        Isometry::Scale(s) => {
            if s.is_zero() {
                return Err(Error::ZeroScale);
            }
            Point::new(space, linalg::scale(p.coords(), s))
        }
    }
}

/// Induced action of a permutation map on the atoms of `a`: entry `i` is the
/// index of the image of atom `i`.
pub fn flat_permutation_action(m: &OrthogonalMap, a: &Arrangement) -> Result<Vec<usize>> {
    let MapKind::Permutation(perm) = &m.kind else {
        return Err(Error::NotPermutationMap);
    };
    if m.space != a.space() {
        return Err(Error::DimensionMismatch {
            expected: a.space().total_dim(),
            found: m.space.total_dim(),
        });
    }
    let index: HashMap<_, usize> = a
        .atoms()
        .iter()
        .enumerate()
        .map(|(i, f)| (f.partition().clone(), i))
        .collect();
    a.atoms()
        .iter()
        .map(|f| {
            index
                .get(&f.partition().permuted(perm))
                .copied()
                .ok_or_else(|| Error::Precondition("arrangement not closed under permutation".into()))
        })
        .collect()
}

/// True when the matrix maps every atom of `a` onto some atom of `a`.
pub fn preserves_atoms(matrix: &RationalMatrix, a: &Arrangement) -> Result<bool> {
    let subspaces: Vec<Subspace> = a.atoms().iter().map(Flat::subspace).collect();
    let equations: Vec<RationalMatrix> = a.atoms().iter().map(Flat::equations).collect();
    for s in &subspaces {
        let images = s
            .basis()
            .iter()
            .map(|b| matrix.mul_vec(b))
            .collect::<Result<Vec<_>>>()?;
        let image = Subspace::span(matrix.rows(), images)?;
        let hit = equations.iter().zip(&subspaces).any(|(eq, target)| {
            target.dim() == image.dim()
                && image
                    .basis()
                    .iter()
                    .all(|v| eq.mul_vec(v).is_ok_and(|r| linalg::is_zero_vector(&r)))
        });
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Matrix of `m` restricted to an invariant subspace, in the subspace's own basis.
pub fn restrict(m: &RationalMatrix, s: &Subspace) -> Result<RationalMatrix> {
    let r = s.dim();
    let images: Vec<Vec<Scalar>> = s
        .basis()
        .iter()
        .map(|b| m.mul_vec(b))
        .collect::<Result<_>>()?;
    // Solve G·X = Bᵀ·M·B column by column via one augmented system.
    let mut aug = RationalMatrix::zeros(r, 2 * r);
    for i in 0..r {
        for j in 0..r {
            aug[(i, j)] = linalg::dot(&s.basis()[i], &s.basis()[j]);
            aug[(i, r + j)] = linalg::dot(&s.basis()[i], &images[j]);
        }
    }
    let (red, _) = aug.rref();
    let mut out = RationalMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            out[(i, j)] = red[(i, r + j)].clone();
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct GroupElement {
    /// Action on the whole configuration space.
    pub full: RationalMatrix,
    /// Action on 𝒱_N⊥ in the basis returned by `ConfigurationSpace::relative_subspace`.
    pub relative: RationalMatrix,
}

/// A finite group of orthogonal maps acting on 𝒱_N⊥.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub elements: Vec<GroupElement>,
    pub generator_labels: Vec<String>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains_relative(&self, relative: &RationalMatrix) -> bool {
        self.elements.iter().any(|e| &e.relative == relative)
    }
}

pub const DEFAULT_GROUP_CAP: usize = 20_000;

/// Breadth-first closure of the generators, deduplicated on the restriction to 𝒱_N⊥.
pub fn generate_group(
    space: ConfigurationSpace,
    generators: &[(String, OrthogonalMap)],
    cap: usize,
) -> Result<FiniteGroup> {
    let rel = space.relative_subspace();
    let gens: Vec<GroupElement> = generators
        .iter()
        .map(|(_, g)| {
            Ok(GroupElement {
                relative: restrict(&g.matrix, &rel)?,
                full: g.matrix.clone(),
            })
        })
        .collect::<Result<_>>()?;
    let total = space.total_dim();
    let identity = GroupElement {
        full: RationalMatrix::identity(total),
        relative: RationalMatrix::identity(rel.dim()),
    };
    let mut seen: HashSet<RationalMatrix> = HashSet::from([identity.relative.clone()]);
    let mut elements = vec![identity];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for g in &gens {
            let relative = g.relative.mul(&elements[idx].relative)?;
            if seen.contains(&relative) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "point group order".into(),
                    limit: cap,
                });
            }
            let full = g.full.mul(&elements[idx].full)?;
            seen.insert(relative.clone());
            elements.push(GroupElement { full, relative });
            queue.push_back(elements.len() - 1);
        }
    }
    Ok(FiniteGroup {
        elements,
        generator_labels: generators.iter().map(|(l, _)| l.clone()).collect(),
    })
}

/// Generators: adjacent-transposition maps, optionally with i⊥ appended.
pub fn point_group_generators(
    space: ConfigurationSpace,
    with_inversion: bool,
) -> Vec<(String, OrthogonalMap)> {
    let n = space.n_particles();
    let mut gens: Vec<(String, OrthogonalMap)> = (1..n)
        .map(|i| {
            let p = Permutation::transposition(n, i, i + 1).expect("in range");
            (format!("sigma({}{})", i, i + 1), permutation_map(space, &p).expect("same degree"))
        })
        .collect();
    if with_inversion {
        gens.push(("i_perp".to_string(), relative_inversion_map(space)));
    }
    gens
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupDescriptor {
    pub order: usize,
    pub generators: Vec<String>,
    pub name: Option<String>,
}

/// Order of the group generated by particle permutations and i⊥ on 𝒱_N⊥.
pub fn point_group_order(space: ConfigurationSpace, cap: usize) -> Result<GroupDescriptor> {
    let group = generate_group(space, &point_group_generators(space, true), cap)?;
    Ok(describe(space, &group))
}

pub fn describe(space: ConfigurationSpace, group: &FiniteGroup) -> GroupDescriptor {
    GroupDescriptor {
        order: group.order(),
        generators: group.generator_labels.clone(),
        name: structural_name(space, group),
    }
}

/// Names only what the geometry pins down: finite subgroups of O(1), O(2),
/// and the order-48 centrally symmetric subgroup of O(3).
fn structural_name(space: ConfigurationSpace, group: &FiniteGroup) -> Option<String> {
    let dim = (space.n_particles() - 1) * space.space_dim();
    let order = group.order();
    let has_reflection = group
        .elements
        .iter()
        .any(|e| e.relative.determinant().is_ok_and(|det| det < Scalar::zero()));
    let minus_identity = {
        let mut m = RationalMatrix::identity(dim);
        for i in 0..dim {
            m[(i, i)] = -Scalar::one();
        }
        m
    };
    match dim {
        1 if order == 2 => Some("Z2".into()),
        2 if has_reflection && order.is_multiple_of(2) => Some(format!("D{}", order / 2)),
        2 => Some(format!("C{order}")),
        3 if order == 48 && group.contains_relative(&minus_identity) => Some("Oh".into()),
        _ => None,
    }
}

/// Induced action of `perm` on the N! ordering sectors, indexed in the
/// lexicographic order of `Permutation::all(n)`; an ordering lists particles
/// by increasing coordinate.
pub fn sector_action(perm: &Permutation, n: usize) -> Result<Vec<usize>> {
    if perm.n() != n {
        return Err(Error::InvalidPermutation(format!(
            "degree {} does not match {n} particles",
            perm.n()
        )));
    }
    let orderings = Permutation::all(n);
    let index: HashMap<&[usize], usize> = orderings
        .iter()
        .enumerate()
        .map(|(i, o)| (o.images(), i))
        .collect();
    Ok(orderings
        .iter()
        .map(|o| {
            let relabeled: Vec<usize> = o.images().iter().map(|&p| perm.apply(p)).collect();
            index[relabeled.as_slice()]
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_coincidence_arrangement, pair_flat};
    use crate::linalg::{int, ratio};

    fn space(n: usize, d: usize) -> ConfigurationSpace {
        ConfigurationSpace::new(n, d).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation::cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(p.images(), &[2, 3, 1]);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::transposition(3, 1, 4).is_err());
    }

    #[test]
    fn swap_fixes_its_plane() {
        let s = space(2, 1);
        let swap = permutation_map(s, &Permutation::transposition(2, 1, 2).unwrap()).unwrap();
        assert_eq!(swap.matrix(), &RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]));
        let f = pair_flat(s, 1, 2).unwrap();
        for v in f.subspace().basis() {
            assert_eq!(&swap.matrix().mul_vec(v).unwrap(), v);
        }
    }

    #[test]
    fn identity_permutation_is_identity_matrix() {
        let m = permutation_map(space(3, 2), &Permutation::identity(3)).unwrap();
        assert!(m.matrix().is_identity());
    }

    #[test]
    fn three_cycle_has_order_three() {
        let s = space(3, 1);
        let c = permutation_map(s, &Permutation::cycle(3, &[1, 2, 3]).unwrap()).unwrap();
        let c3 = c.compose(&c).unwrap().compose(&c).unwrap();
        assert!(c3.matrix().is_identity());
        assert!(!c.matrix().is_identity());
        let r = restrict(c.matrix(), &s.relative_subspace()).unwrap();
        assert_eq!(r.determinant().unwrap(), int(1));
    }

    #[test]
    fn wrong_degree_permutation_rejected() {
        assert!(permutation_map(space(3, 1), &Permutation::identity(4)).is_err());
    }

    #[test]
    fn relative_inversion_examples() {
        let s = space(3, 1);
        let inv = relative_inversion_map(s);
        assert!(inv.matrix().is_orthogonal());
        assert!(inv.compose(&inv).unwrap().matrix().is_identity());
        // rotation by π about (t,t,t): fixes the axis, negates the relative plane
        let axis = linalg::vector(&[1, 1, 1]);
        assert_eq!(inv.matrix().mul_vec(&axis).unwrap(), axis);
        let rel = linalg::vector(&[1, -1, 0]);
        assert_eq!(inv.matrix().mul_vec(&rel).unwrap(), linalg::vector(&[-1, 1, 0]));
        assert_eq!(inv.matrix().determinant().unwrap(), int(1));

        let s2 = space(2, 1);
        let swap = permutation_map(s2, &Permutation::transposition(2, 1, 2).unwrap()).unwrap();
        assert_eq!(relative_inversion_map(s2).matrix(), swap.matrix());
    }

    #[test]
    fn uniform_rotation_requires_orthogonal() {
        let s = space(3, 2);
        let rot = RationalMatrix::from_rows(
            2,
            vec![vec![ratio(3, 5), ratio(-4, 5)], vec![ratio(4, 5), ratio(3, 5)]],
        )
        .unwrap();
        let m = uniform_map(s, &rot).unwrap();
        assert!(m.matrix().is_orthogonal());
        let shear = RationalMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(uniform_map(s, &shear), Err(Error::NotOrthogonal));
        assert!(uniform_map(s, &RationalMatrix::identity(3)).is_err());
    }

    #[test]
    fn isometry_examples() {
        let s2 = space(2, 1);
        let p = Point::from_i64(s2, &[0, 1]).unwrap();
        let t = Isometry::Translation(TranslationVector { shift: vec![int(5)] });
        assert_eq!(apply_isometry(&p, &t).unwrap(), Point::from_i64(s2, &[5, 6]).unwrap());

        let s3 = space(3, 1);
        let q = Point::from_i64(s3, &[0, 0, 1]).unwrap();
        let scaled = apply_isometry(&q, &Isometry::Scale(int(3))).unwrap();
        assert_eq!(scaled, Point::from_i64(s3, &[0, 0, 3]).unwrap());
        assert_eq!(apply_isometry(&q, &Isometry::Scale(int(0))), Err(Error::ZeroScale));

        let swap = permutation_map(s3, &Permutation::transposition(3, 1, 2).unwrap()).unwrap();
        let r = Point::from_i64(s3, &[0, 1, 2]).unwrap();
        assert_eq!(
            apply_isometry(&r, &Isometry::Linear(swap)).unwrap(),
            Point::from_i64(s3, &[1, 0, 2]).unwrap()
        );
        let bad = Isometry::Translation(TranslationVector { shift: vec![int(1), int(2)] });
        assert!(apply_isometry(&r, &bad).is_err());
    }

    #[test]
    fn atom_actions() {
        let s3 = space(3, 1);
        let a = build_coincidence_arrangement(s3, 2).unwrap(); // V_12, V_13, V_23
        let swap = permutation_map(s3, &Permutation::transposition(3, 1, 2).unwrap()).unwrap();
        assert_eq!(flat_permutation_action(&swap, &a).unwrap(), vec![0, 2, 1]);

        let s4 = space(4, 1);
        let a = build_coincidence_arrangement(s4, 3).unwrap(); // 123, 124, 134, 234
        let swap = permutation_map(s4, &Permutation::transposition(4, 1, 2).unwrap()).unwrap();
        assert_eq!(flat_permutation_action(&swap, &a).unwrap(), vec![0, 1, 3, 2]);
        let id = permutation_map(s4, &Permutation::identity(4)).unwrap();
        assert_eq!(flat_permutation_action(&id, &a).unwrap(), vec![0, 1, 2, 3]);

        assert_eq!(
            flat_permutation_action(&relative_inversion_map(s4), &a),
            Err(Error::NotPermutationMap)
        );
    }

    #[test]
    fn point_group_orders() {
        let g3 = point_group_order(space(3, 1), DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g3.order, 12);
        assert_eq!(g3.name.as_deref(), Some("D6"));
        let g4 = point_group_order(space(4, 1), DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g4.order, 48);
        assert_eq!(g4.name.as_deref(), Some("Oh"));
        let g2 = point_group_order(space(2, 1), DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g2.order, 2);
        assert!(matches!(
            point_group_order(space(5, 1), 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn group_order_for_planar_particles() {
        // S_3 × Z_2 on a 4-dimensional relative space, no name attached
        let g = point_group_order(space(3, 2), DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.order, 12);
        assert_eq!(g.name, None);
    }

    #[test]
    fn sector_action_examples() {
        let swap = Permutation::transposition(3, 1, 2).unwrap();
        let act = sector_action(&swap, 3).unwrap();
        let all = Permutation::all(3);
        let from = all.iter().position(|o| o.images() == [1, 2, 3]).unwrap();
        assert_eq!(all[act[from]].images(), &[2, 1, 3]);

        let id = sector_action(&Permutation::identity(3), 3).unwrap();
        assert_eq!(id, (0..6).collect::<Vec<_>>());

        let cyc = sector_action(&Permutation::cycle(3, &[1, 2, 3]).unwrap(), 3).unwrap();
        let mut seen = [false; 6];
        let mut lengths = Vec::new();
        for s in 0..6 {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = cyc[c];
                len += 1;
            }
            lengths.push(len);
        }
        assert_eq!(lengths, vec![3, 3]);
    }
}
