//! Invariants of the complement 𝒳_{N,d,k} = ℝ^{Nd} − 𝒱ₖ.
//!
//! Codimension-1 defects (d = 1, k = 2) cut space into ordering sectors,
//! counted both from the characteristic polynomial and by enumerating
//! orderings. Codimension-2 defects leave space connected; there the first
//! Betti number comes from the Goresky–MacPherson sum over the intersection
//! lattice, restricted to degree 1.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{self, Arrangement, ConfigurationSpace, Point};
use crate::lattice::{self, IntersectionLattice, OrderComplex};
use crate::linalg::{self, smith_normal_form, IntegerMatrix, Scalar};
use crate::paths::{self, PLPath, PathValidation};
use crate::symmetry::Permutation;

/// Size limits for lattice-based computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_particles_pairwise: usize,
    pub max_particles_higher: usize,
    pub max_faces: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_particles_pairwise: 8,
            max_particles_higher: 9,
            max_faces: 500_000,
        }
    }
}

/// (N, d, k) with the derived defect codimension (k − 1)·d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ComplementSpec {
    #[serde(rename = "N")]
    pub n: usize,
    pub d: usize,
    pub k: usize,
}

impl ComplementSpec {
    pub fn new(n: usize, d: usize, k: usize) -> Result<Self> {
        ConfigurationSpace::new(n, d)?;
        if !(2..=n).contains(&k) {
            return Err(Error::OrderOutOfRange { k, n });
        }
        Ok(Self { n, d, k })
    }

    pub fn space(&self) -> ConfigurationSpace {
        ConfigurationSpace::new(self.n, self.d).expect("validated on construction")
    }

    pub fn defect_codim(&self) -> usize {
        (self.k - 1) * self.d
    }

    pub fn relative_dim(&self) -> usize {
        (self.n - 1) * self.d
    }

    pub fn arrangement(&self) -> Arrangement {
        geometry::build_coincidence_arrangement(self.space(), self.k).expect("validated on construction")
    }

    pub fn check_caps(&self, caps: &Caps) -> Result<()> {
        let limit = if self.k == 2 {
            caps.max_particles_pairwise
        } else {
            caps.max_particles_higher
        };
        if self.n > limit {
            return Err(Error::CapExceeded {
                what: format!("lattice for N={} with k={}", self.n, self.k),
                limit,
            });
        }
        Ok(())
    }

    pub fn lattice(&self, caps: &Caps) -> Result<IntersectionLattice> {
        self.check_caps(caps)?;
        Ok(lattice::build_lattice(&self.arrangement()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionMethod {
    CharacteristicPolynomial,
    OrderingEnumeration,
    CodimArgument,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionReport {
    pub count: BigInt,
    pub method: RegionMethod,
}

fn require_codim_one(spec: &ComplementSpec) -> Result<()> {
    if spec.defect_codim() != 1 {
        return Err(Error::Precondition(format!(
            "defect codimension is {}, region counting needs codimension 1 (d = 1, k = 2)",
            spec.defect_codim()
        )));
    }
    Ok(())
}

fn require_line(space: ConfigurationSpace) -> Result<()> {
    if space.space_dim() != 1 {
        return Err(Error::Precondition(format!(
            "ordering sectors need d = 1, got d = {}",
            space.space_dim()
        )));
    }
    Ok(())
}

/// Chamber count (−1)^{Nd}·χ(−1) of a hyperplane arrangement.
pub fn zaslavsky_regions(spec: &ComplementSpec, caps: &Caps) -> Result<RegionReport> {
    require_codim_one(spec)?;
    let chi = spec.lattice(caps)?.characteristic_polynomial();
    let value = chi.eval(&BigInt::from(-1));
    let count = if (spec.n * spec.d).is_multiple_of(2) { value } else { -value };
    Ok(RegionReport {
        count,
        method: RegionMethod::CharacteristicPolynomial,
    })
}

/// Particles listed by increasing coordinate (d = 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorLabel {
    pub ordering: Permutation,
}

impl std::fmt::Display for SectorLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.ordering)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub label: SectorLabel,
    pub witness: Point,
}

/// All N! ordering sectors, each with the integer witness placing the r-th
/// listed particle at coordinate r.
pub fn enumerate_sectors(n: usize) -> Result<Vec<Sector>> {
    let space = ConfigurationSpace::new(n, 1)?;
    Ok(Permutation::all(n)
        .into_iter()
        .map(|ordering| {
            let mut coords = vec![Scalar::zero(); n];
            for (rank, &particle) in ordering.images().iter().enumerate() {
                coords[particle - 1] = linalg::int(rank as i64);
            }
            Sector {
                witness: Point::new(space, coords).expect("n coordinates"),
                label: SectorLabel { ordering },
            }
        })
        .collect())
}

pub fn sector_count_by_enumeration(n: usize) -> Result<RegionReport> {
    Ok(RegionReport {
        count: BigInt::from(enumerate_sectors(n)?.len()),
        method: RegionMethod::OrderingEnumeration,
    })
}

/// Groups of particles sharing a position (d = 1), each sorted; empty off 𝒱₂.
pub fn coincident_clusters(p: &Point) -> Vec<Vec<usize>> {
    let n = p.space().n_particles();
    let mut groups: HashMap<&[Scalar], Vec<usize>> = HashMap::new();
    for i in 1..=n {
        groups.entry(p.particle(i)).or_default().push(i);
    }
    let mut clusters: Vec<Vec<usize>> = groups.into_values().filter(|g| g.len() > 1).collect();
    clusters.sort();
    clusters
}

pub fn sector_of(p: &Point) -> Result<SectorLabel> {
    require_line(p.space())?;
    let clusters = coincident_clusters(p);
    if !clusters.is_empty() {
        return Err(Error::Boundary { coinciding: clusters });
    }
    let mut order: Vec<usize> = (1..=p.space().n_particles()).collect();
    order.sort_by(|&a, &b| p.particle(a)[0].cmp(&p.particle(b)[0]));
    Ok(SectorLabel {
        ordering: Permutation::from_images(order)?,
    })
}

/// Sectors joined when their orderings differ by one adjacent transposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorGraph {
    pub sectors: Vec<SectorLabel>,
    pub edges: Vec<(usize, usize)>,
}

impl SectorGraph {
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.sectors.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        let n = self.sectors.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !std::mem::replace(&mut seen[w], true) {
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().copied().collect()
    }
}

pub fn sector_adjacency(n: usize) -> Result<SectorGraph> {
    ConfigurationSpace::new(n, 1)?;
    let orderings = Permutation::all(n);
    let index: HashMap<Vec<usize>, usize> = orderings
        .iter()
        .enumerate()
        .map(|(i, o)| (o.images().to_vec(), i))
        .collect();
    let mut edges = Vec::new();
    for (i, o) in orderings.iter().enumerate() {
        for pos in 0..n - 1 {
            let mut swapped = o.images().to_vec();
            swapped.swap(pos, pos + 1);
            let j = index[&swapped];
            if i < j {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    Ok(SectorGraph {
        sectors: orderings.into_iter().map(|ordering| SectorLabel { ordering }).collect(),
        edges,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PunctureReport {
    pub relative_dim: usize,
    pub lines: Vec<String>,
    pub punctures: usize,
    pub free_rank: usize,
}

/// Each atom meets the relative 3-space in a line through the origin, which
/// pierces the unit sphere twice.
pub fn puncture_report(spec: &ComplementSpec) -> Result<PunctureReport> {
    if spec.defect_codim() != 2 || spec.relative_dim() != 3 {
        return Err(Error::Precondition(format!(
            "punctured-sphere picture needs defect codimension 2 in a 3-dimensional relative space; \
             got codimension {} and relative dimension {}",
            spec.defect_codim(),
            spec.relative_dim()
        )));
    }
    let rel = spec.space().relative_subspace();
    let mut lines: Vec<linalg::Subspace> = Vec::new();
    let mut labels = Vec::new();
    for atom in spec.arrangement().atoms() {
        let line = atom.subspace().intersection(&rel)?;
        if line.dim() != 1 {
            return Err(Error::Precondition(format!(
                "{} meets the relative space in dimension {}",
                atom.label(),
                line.dim()
            )));
        }
        for seen in &lines {
            if seen.same_span(&line)? {
                return Err(Error::Precondition(format!("{} repeats a line", atom.label())));
            }
        }
        lines.push(line);
        labels.push(atom.label());
    }
    let punctures = 2 * lines.len();
    Ok(PunctureReport {
        relative_dim: spec.relative_dim(),
        lines: labels,
        punctures,
        free_rank: punctures - 1,
    })
}

/// Reduced homology of an order complex over ℚ, with integral torsion noted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRanks {
    /// `ranks[i]` is the rank in degree `i − 1`, starting at degree −1.
    pub ranks: Vec<usize>,
    /// Torsion coefficients per degree (degree, factors), only where present.
    pub torsion: Vec<(isize, Vec<BigInt>)>,
    /// Face counts per degree, starting with the single (−1)-face.
    pub face_counts: Vec<usize>,
}

impl HomologyRanks {
    pub fn rank(&self, degree: isize) -> usize {
        if degree < -1 {
            return 0;
        }
        self.ranks.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    pub fn euler_from_faces(&self) -> i64 {
        alternating_sum(&self.face_counts)
    }

    pub fn euler_from_ranks(&self) -> i64 {
        alternating_sum(&self.ranks)
    }
}

/// Σ (−1)^q x_q with the first entry in degree −1.
fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 1 { x as i64 } else { -(x as i64) })
        .sum()
}

pub fn reduced_homology_ranks(c: &OrderComplex) -> HomologyRanks {
    reduced_homology_capped(c, usize::MAX).expect("no cap")
}

fn reduced_homology_capped(c: &OrderComplex, max_faces: usize) -> Result<HomologyRanks> {
    let total: usize = c
        .facets
        .iter()
        .map(|f| (1usize << f.len().min(40)) - 1)
        .sum();
    if total > max_faces {
        return Err(Error::CapExceeded {
            what: "order complex face count".into(),
            limit: max_faces,
        });
    }
    let faces = c.faces();
    // chain groups C_{-1}, C_0, …, C_D
    let mut counts = vec![1usize];
    counts.extend(faces.iter().map(Vec::len));
    let index: Vec<HashMap<&[usize], usize>> = faces
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect())
        .collect();

    // boundary[q] : C_q → C_{q−1} for q = 0..=D (stored at q)
    let mut boundary_ranks = Vec::with_capacity(faces.len());
    let mut boundary_torsion = Vec::with_capacity(faces.len());
    for (q, fs) in faces.iter().enumerate() {
        let rows = counts[q];
        let mut m = IntegerMatrix::zeros(rows, fs.len());
        for (col, face) in fs.iter().enumerate() {
            if q == 0 {
                m[(0, col)] = BigInt::from(1);
                continue;
            }
            for drop in 0..face.len() {
                let sub: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                let row = index[q - 1][sub.as_slice()];
                m[(row, col)] = BigInt::from(if drop % 2 == 0 { 1 } else { -1 });
            }
        }
        let snf = smith_normal_form(&m);
        boundary_ranks.push(snf.rank);
        boundary_torsion.push(snf.torsion());
    }
    // degree q ↔ chain index q + 1; ∂ out of C_q has rank boundary_ranks[q]
    let ranks = (0..counts.len())
        .map(|i| {
            let out = if i == 0 { 0 } else { boundary_ranks[i - 1] };
            let into = boundary_ranks.get(i).copied().unwrap_or(0);
            counts[i] - out - into
        })
        .collect();
    // H_q torsion comes from the image of ∂ into C_q
    let torsion = boundary_torsion
        .into_iter()
        .enumerate()
        .filter(|(_, t)| !t.is_empty())
        .map(|(q, t)| (q as isize - 1, t))
        .collect();
    Ok(HomologyRanks {
        ranks,
        torsion,
        face_counts: counts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiContribution {
    pub node: String,
    pub codim: usize,
    pub degree: isize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub b1: usize,
    pub contributions: Vec<BettiContribution>,
}

/// b₁ = Σ_{x > 0̂} rank H̃_{codim(x) − 3}(Δ(0̂, x)) for a codimension-2 arrangement.
pub fn betti_one(spec: &ComplementSpec, caps: &Caps) -> Result<BettiReport> {
    if spec.defect_codim() != 2 {
        return Err(Error::Precondition(format!(
            "first Betti number is implemented for defect codimension 2, got {}",
            spec.defect_codim()
        )));
    }
    let l = spec.lattice(caps)?;
    let mut contributions = Vec::new();
    for x in 1..l.len() {
        let node = &l.nodes()[x];
        let degree = node.codim as isize - 3;
        let complex = l.open_interval_complex(x)?;
        // a chain of m nodes below x forces codim(x) ≥ m + 2, so no
        // simplex of the interval exceeds the degree consulted here
        let homology = reduced_homology_capped(&complex, caps.max_faces)?;
        let torsion = homology
            .torsion
            .iter()
            .filter(|(q, _)| *q == degree)
            .flat_map(|(_, t)| t.iter().map(ToString::to_string))
            .collect();
        contributions.push(BettiContribution {
            node: node.flat.label(),
            codim: node.codim,
            degree,
            rank: homology.rank(degree),
            torsion,
        });
    }
    Ok(BettiReport {
        b1: contributions.iter().map(|c| c.rank).sum(),
        contributions,
    })
}

pub const DEFAULT_SEED: u64 = 0x5eed_c0de;
pub const DEFAULT_CERTIFICATE_ATTEMPTS: usize = 2_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub regions: RegionReport,
    pub certificate: PLPath,
}

/// Connectedness for defect codimension ≥ 2, certified by an explicit path
/// between the two witnesses that avoids every atom.
pub fn connectivity_report(
    spec: &ComplementSpec,
    from: &Point,
    to: &Point,
    seed: u64,
) -> Result<ConnectivityReport> {
    if spec.defect_codim() < 2 {
        return Err(Error::Precondition(
            "defect codimension 1 disconnects space; count regions instead".into(),
        ));
    }
    let a = spec.arrangement();
    for w in [from, to] {
        let hits = geometry::membership(w, &a)?;
        if !hits.is_empty() {
            return Err(Error::Boundary {
                coinciding: hits
                    .iter()
                    .flat_map(|f| f.partition().non_singleton_blocks().cloned())
                    .collect(),
            });
        }
    }
    let certificate = certificate_path(&a, from, to, seed, DEFAULT_CERTIFICATE_ATTEMPTS)?;
    Ok(ConnectivityReport {
        regions: RegionReport {
            count: BigInt::from(1),
            method: RegionMethod::CodimArgument,
        },
        certificate,
    })
}

/// Searches for a collision-free PL path `from → … → to`, inserting random
/// rational waypoints until every segment passes the exact test.
pub fn certificate_path(
    a: &Arrangement,
    from: &Point,
    to: &Point,
    seed: u64,
    max_attempts: usize,
) -> Result<PLPath> {
    let space = a.space();
    if from == to {
        return Err(Error::Precondition("witnesses coincide".into()));
    }
    let direct = PLPath::new(space, vec![from.clone(), to.clone()])?;
    if paths::validate_path(&direct, a)? == PathValidation::Clear {
        return Ok(direct);
    }
    let (lo, hi) = bounds(from, to);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..max_attempts {
        let waypoints = 1 + attempt / 200;
        let mut vertices = vec![from.clone()];
        for _ in 0..waypoints {
            let coords = (0..space.total_dim())
                .map(|_| {
                    let den = rng.gen_range(1..=5i64);
                    let num = rng.gen_range(lo * den..=hi * den);
                    linalg::ratio(num, den)
                })
                .collect();
            vertices.push(Point::new(space, coords)?);
        }
        vertices.push(to.clone());
        let Ok(path) = PLPath::new(space, vertices) else {
            continue;
        };
        if paths::validate_path(&path, a)? == PathValidation::Clear {
            return Ok(path);
        }
    }
    Err(Error::NoCertificate {
        attempts: max_attempts,
    })
}

fn bounds(a: &Point, b: &Point) -> (i64, i64) {
    let all = a.coords().iter().chain(b.coords());
    let lo = all.clone().map(|x| x.floor().to_integer()).min().unwrap_or_default();
    let hi = all.map(|x| x.ceil().to_integer()).max().unwrap_or_default();
    let lo = lo.to_i64().unwrap_or(-1_000_000) - 2;
    let hi = hi.to_i64().unwrap_or(1_000_000) + 2;
    (lo, hi)
}
