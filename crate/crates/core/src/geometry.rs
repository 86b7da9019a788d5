//! Configuration space of N particles in ℝᵈ and its coincidence flats.
//!
//! Particles are numbered from 1. A flat is identified by the set partition
//! of particle indices whose blocks are forced to coincide; its defining
//! equations are derived from the partition with the block minimum as the
//! representative.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, RationalMatrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConfigurationSpace {
    n: usize,
    d: usize,
}

impl ConfigurationSpace {
    pub fn new(n_particles: usize, space_dim: usize) -> Result<Self> {
        if n_particles < 2 {
            return Err(Error::InvalidSpace(format!(
                "need at least 2 particles, got {n_particles}"
            )));
        }
        if space_dim < 1 {
            return Err(Error::InvalidSpace("space dimension must be at least 1".into()));
        }
        Ok(Self {
            n: n_particles,
            d: space_dim,
        })
    }

    pub fn n_particles(&self) -> usize {
        self.n
    }

    pub fn space_dim(&self) -> usize {
        self.d
    }

    pub fn total_dim(&self) -> usize {
        self.n * self.d
    }

    /// Coordinate index of component `c` of particle `i` (1-based particle).
    pub fn coord(&self, particle: usize, c: usize) -> usize {
        (particle - 1) * self.d + c
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        }
    }

    /// 𝒱_N: all particles at the same position.
    pub fn total_coincidence(&self) -> Flat {
        Flat {
            space: *self,
            partition: ParticlePartition::one_block(self.n),
        }
    }

    /// 𝒱_N⊥, the relative configuration space.
    pub fn relative_subspace(&self) -> Subspace {
        self.total_coincidence().subspace().orthogonal_complement()
    }
}

/// A configuration: N blocks of d rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    space: ConfigurationSpace,
    coords: Vec<Scalar>,
}

impl Point {
    pub fn new(space: ConfigurationSpace, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != space.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: space.total_dim(),
                found: coords.len(),
            });
        }
        Ok(Self { space, coords })
    }

    pub fn from_i64(space: ConfigurationSpace, coords: &[i64]) -> Result<Self> {
        Self::new(space, linalg::vector(coords))
    }

    /// Parses comma-separated integers or `p/q` rationals.
    pub fn parse(space: ConfigurationSpace, text: &str) -> Result<Self> {
        Self::new(space, parse_rationals(text)?)
    }

    pub fn origin(space: ConfigurationSpace) -> Self {
        Self {
            space,
            coords: vec![Scalar::zero(); space.total_dim()],
        }
    }

    pub fn space(&self) -> ConfigurationSpace {
        self.space
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    /// Position 𝐱ᵢ of particle `i` (1-based).
    pub fn particle(&self, i: usize) -> &[Scalar] {
        let d = self.space.d;
        &self.coords[(i - 1) * d..i * d]
    }

    pub(crate) fn with_coords(&self, coords: Vec<Scalar>) -> Self {
        debug_assert_eq!(coords.len(), self.coords.len());
        Self {
            space: self.space,
            coords,
        }
    }

    fn check_space(&self, space: ConfigurationSpace) -> Result<()> {
        if self.space == space {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: space.total_dim(),
                found: self.space.total_dim(),
            })
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn parse_rational(text: &str) -> Result<Scalar> {
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        if den.trim().trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        let num = num.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in {t:?}")))?;
        let den = den.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in {t:?}")))?;
        Ok(Scalar::new(num, den))
    } else {
        t.parse()
            .map(Scalar::from_integer)
            .map_err(|_| Error::Parse(format!("not a rational: {t:?}")))
    }
}

pub fn parse_rationals(text: &str) -> Result<Vec<Scalar>> {
    text.split(',').map(parse_rational).collect()
}

/// Set partition of {1..N} in canonical form: elements ascending within a
/// block, blocks ordered by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParticlePartition {
    blocks: Vec<Vec<usize>>,
}

impl ParticlePartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in block {
                if !(1..=n).contains(&i) {
                    return Err(Error::InvalidPartition(format!("index {i} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidPartition(format!("index {i} repeated")));
                }
            }
        }
        if let Some(missing) = (1..=n).find(|&i| !seen[i]) {
            return Err(Error::InvalidPartition(format!("index {missing} not covered")));
        }
        Ok(Self::canonical(blocks))
    }

    /// Partition whose only non-singleton block is `block`.
    pub fn with_block(n: usize, block: &[usize]) -> Result<Self> {
        let mut blocks = vec![block.to_vec()];
        blocks.extend((1..=n).filter(|i| !block.contains(i)).map(|i| vec![i]));
        Self::new(n, blocks)
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn one_block(n: usize) -> Self {
        Self {
            blocks: vec![(1..=n).collect()],
        }
    }

    fn canonical(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { blocks }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn non_singleton_blocks(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Σ_B (|B| − 1), the codimension for d = 1.
    pub fn rank(&self) -> usize {
        self.n() - self.blocks.len()
    }

    fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n() + 1];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                ids[i] = b;
            }
        }
        ids
    }

    /// Finest common coarsening (the intersection of the two flats).
    pub fn join(&self, other: &Self) -> Self {
        let n = self.n();
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for block in self.blocks.iter().chain(&other.blocks) {
            for w in block.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for i in 1..=n {
            let r = find(&mut parent, i);
            groups[r].push(i);
        }
        Self::canonical(groups.into_iter().filter(|g| !g.is_empty()).collect())
    }

    /// True when every block of `self` sits inside a block of `other`, i.e.
    /// `other`'s flat is contained in `self`'s.
    pub fn refines(&self, other: &Self) -> bool {
        let ids = other.block_ids();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| ids[i] == ids[b[0]]))
    }

    /// Relabels every particle `i` as `perm(i)`.
    pub fn permuted(&self, perm: &crate::symmetry::Permutation) -> Self {
        Self::canonical(
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&i| perm.apply(i)).collect())
                .collect(),
        )
    }

    /// Label such as `V_123` naming the non-singleton blocks; `V_` alone for
    /// the discrete partition. Blocks are separated by `|`.
    pub fn label(&self) -> String {
        let sep = if self.n() >= 10 { "_" } else { "" };
        let parts: Vec<String> = self
            .non_singleton_blocks()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        format!("V_{}", parts.join("|"))
    }
}

impl fmt::Display for ParticlePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(ToString::to_string).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}

/// A coincidence flat: the linear subspace where the particles of each block coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    space: ConfigurationSpace,
    partition: ParticlePartition,
}

impl Flat {
    pub fn space(&self) -> ConfigurationSpace {
        self.space
    }

    pub fn partition(&self) -> &ParticlePartition {
        &self.partition
    }

    pub fn label(&self) -> String {
        self.partition.label()
    }

    pub fn codim(&self) -> usize {
        self.space.d * self.partition.rank()
    }

    pub fn dim(&self) -> usize {
        self.space.total_dim() - self.codim()
    }

    /// One row `x_rep,c − x_j,c` per non-representative member `j` and coordinate `c`.
    pub fn equations(&self) -> RationalMatrix {
        let total = self.space.total_dim();
        let mut rows = Vec::with_capacity(self.codim());
        for block in self.partition.non_singleton_blocks() {
            let rep = block[0];
            for &j in &block[1..] {
                for c in 0..self.space.d {
                    let mut row = vec![Scalar::zero(); total];
                    row[self.space.coord(rep, c)] = Scalar::one();
                    row[self.space.coord(j, c)] = -Scalar::one();
                    rows.push(row);
                }
            }
        }
        RationalMatrix::from_rows(total, rows).expect("rows sized to total_dim")
    }

    /// The flat as a linear subspace (kernel of its equations).
    pub fn subspace(&self) -> Subspace {
        linalg::kernel_basis(&self.equations())
    }

    /// Span of the equation rows; the orthogonal complement of the flat.
    pub fn normal_space(&self) -> Subspace {
        Subspace::span(self.space.total_dim(), self.equations().row_vectors())
            .expect("rows sized to total_dim")
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.contains_coords(p.coords())
    }

    pub(crate) fn contains_coords(&self, coords: &[Scalar]) -> bool {
        let d = self.space.d;
        self.partition.non_singleton_blocks().all(|block| {
            let rep = (block[0] - 1) * d;
            block[1..].iter().all(|&j| {
                let o = (j - 1) * d;
                (0..d).all(|c| coords[rep + c] == coords[o + c])
            })
        })
    }

    pub fn intersect(&self, other: &Flat) -> Result<Flat> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch {
                expected: self.space.total_dim(),
                found: other.space.total_dim(),
            });
        }
        Ok(Flat {
            space: self.space,
            partition: self.partition.join(&other.partition),
        })
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

pub fn pair_flat(space: ConfigurationSpace, i: usize, j: usize) -> Result<Flat> {
    space.check_index(i)?;
    space.check_index(j)?;
    if i == j {
        return Err(Error::RepeatedIndex(i));
    }
    let partition = ParticlePartition::with_block(space.n, &[i.min(j), i.max(j)])?;
    Ok(Flat { space, partition })
}

pub fn partition_flat(space: ConfigurationSpace, partition: ParticlePartition) -> Result<Flat> {
    if partition.n() != space.n {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} particles, space has {}",
            partition.n(),
            space.n
        )));
    }
    Ok(Flat { space, partition })
}

pub fn codimension(f: &Flat) -> usize {
    f.codim()
}

/// The k-body coincidence structure 𝒱ₖ as its C(N,k) atom flats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    space: ConfigurationSpace,
    order_k: usize,
    atoms: Vec<Flat>,
}

impl Arrangement {
    pub fn space(&self) -> ConfigurationSpace {
        self.space
    }

    pub fn order(&self) -> usize {
        self.order_k
    }

    pub fn atoms(&self) -> &[Flat] {
        &self.atoms
    }

    /// Codimension shared by every atom, (k − 1)·d.
    pub fn defect_codim(&self) -> usize {
        (self.order_k - 1) * self.space.d
    }

    pub fn position(&self, flat: &Flat) -> Option<usize> {
        self.atoms.iter().position(|a| a == flat)
    }
}

pub fn build_coincidence_arrangement(space: ConfigurationSpace, k: usize) -> Result<Arrangement> {
    let n = space.n;
    if !(2..=n).contains(&k) {
        return Err(Error::OrderOutOfRange { k, n });
    }
    let atoms = k_subsets(n, k)
        .into_iter()
        .map(|s| {
            let partition = ParticlePartition::with_block(n, &s).expect("valid subset");
            Flat { space, partition }
        })
        .collect();
    Ok(Arrangement {
        space,
        order_k: k,
        atoms,
    })
}

/// All k-element subsets of {1..n} in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - (k - 1 - i)) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Atoms of `a` containing `p`; `p ∈ 𝒱ₖ` iff the result is nonempty.
pub fn membership<'a>(p: &Point, a: &'a Arrangement) -> Result<Vec<&'a Flat>> {
    p.check_space(a.space)?;
    Ok(a.atoms.iter().filter(|f| f.contains(p)).collect())
}

/// ρ² = (1/N)[(N−1)Σᵢ 𝐱ᵢ·𝐱ᵢ − 2Σ_{i<j} 𝐱ᵢ·𝐱ⱼ].
pub fn hyperradius_sq(p: &Point) -> Scalar {
    let n = p.space.n;
    let mut diag = Scalar::zero();
    let mut cross = Scalar::zero();
    for i in 1..=n {
        let xi = p.particle(i);
        diag += linalg::dot(xi, xi);
        for j in i + 1..=n {
            cross += linalg::dot(xi, p.particle(j));
        }
    }
    let nn = linalg::int(n as i64);
    (&(&nn - Scalar::one()) * diag - linalg::int(2) * cross) / nn
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeSplit {
    pub cm_part: Point,
    pub rel_part: Point,
    pub rho_sq: Scalar,
}

/// Splits `p` into its projection onto 𝒱_N and the relative remainder.
pub fn cm_relative_split(p: &Point) -> RelativeSplit {
    let (n, d) = (p.space.n, p.space.d);
    let nn = linalg::int(n as i64);
    // Projection onto 𝒱_N is the centroid repeated in every block.
    let centroid: Vec<Scalar> = (0..d)
        .map(|c| (1..=n).fold(Scalar::zero(), |acc, i| acc + &p.particle(i)[c]) / &nn)
        .collect();
    let cm: Vec<Scalar> = (0..n).flat_map(|_| centroid.iter().cloned()).collect();
    let rel = linalg::sub(&p.coords, &cm);
    RelativeSplit {
        cm_part: p.with_coords(cm),
        rel_part: p.with_coords(rel),
        rho_sq: hyperradius_sq(p),
    }
}

/// Squared cosine of the angle between two hyperplanes' normals.
pub fn dihedral_cos_sq(f1: &Flat, f2: &Flat) -> Result<Scalar> {
    for f in [f1, f2] {
        if f.codim() != 1 {
            return Err(Error::NotCodimOne(f.codim()));
        }
    }
    if f1.space != f2.space {
        return Err(Error::DimensionMismatch {
            expected: f1.space.total_dim(),
            found: f2.space.total_dim(),
        });
    }
    let (e1, e2) = (f1.equations(), f2.equations());
    let (n1, n2) = (e1.row(0), e2.row(0));
    let c = linalg::dot(n1, n2);
    Ok(&c * &c / (linalg::norm_sq(n1) * linalg::norm_sq(n2)))
}
