//! Piecewise-linear paths in the complement of an arrangement and their
//! per-flat winding numbers around codimension-2 atoms.
//!
//! Each codim-2 atom `F` gets a fixed oriented frame of its normal plane `F⊥`:
//! the projections of the first two standard basis vectors that are linearly
//! independent there, the second orthogonalized against the first. A loop is
//! projected into that frame and its signed crossings of the positive first
//! axis are counted exactly. Vertices landing on that ray are rejected rather
//! than perturbed.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Arrangement, ConfigurationSpace, Flat, Point};
use crate::linalg::{self, RationalMatrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLPath {
    space: ConfigurationSpace,
    vertices: Vec<Point>,
}

impl PLPath {
    pub fn new(space: ConfigurationSpace, vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::PathTooShort);
        }
        for v in &vertices {
            if v.space() != space {
                return Err(Error::DimensionMismatch {
                    expected: space.total_dim(),
                    found: v.space().total_dim(),
                });
            }
        }
        if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(i));
        }
        Ok(Self { space, vertices })
    }

    /// Closed loop through `vertices`, returning to the first one.
    pub fn closed_loop(space: ConfigurationSpace, mut vertices: Vec<Point>) -> Result<Self> {
        if let Some(first) = vertices.first().cloned() {
            if vertices.last() != Some(&first) {
                vertices.push(first);
            }
        }
        Self::new(space, vertices)
    }

    pub fn from_rows(space: ConfigurationSpace, rows: &[&[i64]]) -> Result<Self> {
        let vertices = rows
            .iter()
            .map(|r| Point::from_i64(space, r))
            .collect::<Result<_>>()?;
        Self::new(space, vertices)
    }

    /// One vertex per CSV row, `Nd` fields each an integer or `p/q`.
    pub fn parse_csv(space: ConfigurationSpace, text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut vertices = Vec::new();
        for (line, record) in reader.records().enumerate() {
            let record = record.map_err(|e| Error::Parse(e.to_string()))?;
            if record.iter().all(str::is_empty) {
                continue;
            }
            let coords = record
                .iter()
                .map(crate::geometry::parse_rational)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse(format!("row {}: {e}", line + 1)))?;
            vertices.push(Point::new(space, coords).map_err(|e| Error::Parse(format!("row {}: {e}", line + 1)))?);
        }
        Self::new(space, vertices)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let row: Vec<String> = v.coords().iter().map(ToString::to_string).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn space(&self) -> ConfigurationSpace {
        self.space
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self {
            space: self.space,
            vertices,
        }
    }

    /// Traverses `self` then `other`; the end of `self` must be the start of `other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.vertices.last() != other.vertices.first() {
            return Err(Error::Precondition("paths do not share an endpoint".into()));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices[1..].iter().cloned());
        Self::new(self.space, vertices)
    }

    pub fn map_vertices(&self, f: impl Fn(&Point) -> Result<Point>) -> Result<Self> {
        let vertices = self.vertices.iter().map(f).collect::<Result<_>>()?;
        Self::new(self.space, vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathValidation {
    Clear,
    /// First offending segment (0-based) and the index of the atom it meets.
    Collision { segment: usize, atom: usize },
}

impl PathValidation {
    pub fn is_clear(&self) -> bool {
        matches!(self, Self::Clear)
    }
}

/// Exact test whether the closed segment `a → b` meets the flat.
pub fn segment_meets_flat(flat: &Flat, a: &[Scalar], b: &[Scalar]) -> bool {
    let eq = flat.equations();
    let ra = eq.mul_vec(a).expect("segment in flat's space");
    let rb = eq.mul_vec(b).expect("segment in flat's space");
    // residual(t) = ra + t·(rb − ra); look for a common root t ∈ [0, 1]
    let mut t: Option<Scalar> = None;
    for (x, y) in ra.iter().zip(&rb) {
        let delta = y - x;
        if delta.is_zero() {
            if !x.is_zero() {
                return false;
            }
            continue;
        }
        let root = -x / delta;
        match &t {
            Some(prev) if *prev != root => return false,
            Some(_) => {}
            None => t = Some(root),
        }
    }
    match t {
        // every residual component constant and zero: the segment lies in the flat
        None => true,
        Some(t) => !t.is_negative() && t <= Scalar::one(),
    }
}

pub fn validate_path(path: &PLPath, a: &Arrangement) -> Result<PathValidation> {
    if path.space != a.space() {
        return Err(Error::DimensionMismatch {
            expected: a.space().total_dim(),
            found: path.space.total_dim(),
        });
    }
    for (s, (p, q)) in path.segments().enumerate() {
        for (i, atom) in a.atoms().iter().enumerate() {
            if segment_meets_flat(atom, p.coords(), q.coords()) {
                return Ok(PathValidation::Collision { segment: s, atom: i });
            }
        }
    }
    Ok(PathValidation::Clear)
}

fn require_clear(path: &PLPath, a: &Arrangement) -> Result<()> {
    match validate_path(path, a)? {
        PathValidation::Clear => Ok(()),
        PathValidation::Collision { segment, atom } => Err(Error::Collision {
            segment,
            atom: a.atoms()[atom].label(),
        }),
    }
}

/// Oriented frame `(u, v)` of the normal plane of a codim-2 flat.
pub fn normal_frame(flat: &Flat) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    if flat.codim() != 2 {
        return Err(Error::Precondition(format!(
            "{} has codimension {}, winding needs codimension 2",
            flat.label(),
            flat.codim()
        )));
    }
    let normal = flat.normal_space();
    let total = flat.space().total_dim();
    let mut u: Option<Vec<Scalar>> = None;
    for axis in 0..total {
        let mut e = vec![Scalar::zero(); total];
        e[axis] = Scalar::one();
        let pe = normal.project(&e)?;
        if linalg::is_zero_vector(&pe) {
            continue;
        }
        match &u {
            None => u = Some(pe),
            Some(first) => {
                let c = linalg::dot(&pe, first) / linalg::norm_sq(first);
                let v = linalg::sub(&pe, &linalg::scale(first, &c));
                if !linalg::is_zero_vector(&v) {
                    return Ok((first.clone(), v));
                }
            }
        }
    }
    unreachable!("a codim-2 flat has a 2-dimensional normal plane")
}

/// Net signed crossings of the positive x-axis by a closed planar polygon.
/// `on_ray` reports vertex `i`; a segment through the origin is a collision.
fn planar_winding(
    points: &[(Scalar, Scalar)],
    on_ray: impl Fn(usize) -> Error,
    through_origin: impl Fn(usize) -> Error,
) -> Result<i64> {
    for (i, (x, y)) in points.iter().enumerate() {
        if y.is_zero() && !x.is_negative() {
            return Err(if x.is_zero() { through_origin(i) } else { on_ray(i) });
        }
    }
    let mut winding = 0i64;
    for (s, w) in points.windows(2).enumerate() {
        let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
        if y0.is_positive() == y1.is_positive() || y0.is_zero() || y1.is_zero() {
            continue;
        }
        // x-coordinate where the segment meets y = 0
        let x = x0 + (x1 - x0) * (-y0) / (y1 - y0);
        if x.is_zero() {
            return Err(through_origin(s));
        }
        if x.is_positive() {
            winding += if y1 > y0 { 1 } else { -1 };
        }
    }
    Ok(winding)
}

/// Per-atom winding numbers of a closed loop.
///
/// Each entry is invariant under homotopy in the complement of its own atom,
/// so the vector is only a partial invariant of the loop's class: for four
/// particles with triple coincidences it has 4 entries while b₁ = 7.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindingVector {
    pub labels: Vec<String>,
    pub entries: Vec<i64>,
}

impl WindingVector {
    pub fn get(&self, label: &str) -> Option<i64> {
        self.labels.iter().position(|l| l == label).map(|i| self.entries[i])
    }

    pub fn as_map(&self) -> BTreeMap<String, i64> {
        self.labels.iter().cloned().zip(self.entries.iter().copied()).collect()
    }

    pub fn negated(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

pub fn winding_vector(path: &PLPath, a: &Arrangement) -> Result<WindingVector> {
    if !path.is_closed() {
        return Err(Error::OpenPath);
    }
    if let Some(bad) = a.atoms().iter().find(|f| f.codim() != 2) {
        return Err(Error::Precondition(format!(
            "{} has codimension {}, winding needs codimension 2",
            bad.label(),
            bad.codim()
        )));
    }
    require_clear(path, a)?;
    let mut entries = Vec::with_capacity(a.atoms().len());
    for atom in a.atoms() {
        let (u, v) = normal_frame(atom)?;
        let projected: Vec<(Scalar, Scalar)> = path
            .vertices
            .iter()
            .map(|p| (linalg::dot(p.coords(), &u), linalg::dot(p.coords(), &v)))
            .collect();
        let label = atom.label();
        entries.push(planar_winding(
            &projected,
            |i| Error::GeneralPosition {
                vertex: i,
                atom: label.clone(),
            },
            |s| Error::Collision {
                segment: s,
                atom: label.clone(),
            },
        )?);
    }
    Ok(WindingVector {
        labels: a.atoms().iter().map(Flat::label).collect(),
        entries,
    })
}

/// Winding vector of `m(loop)` predicted from the winding vector of `loop`.
///
/// `m` is an invertible linear map permuting the atoms of `a`. An atom `F`
/// goes to `m(F)`, and its entry picks up the orientation sign of the map
/// induced between the normal frames of `F` and `m(F)`.
pub fn transport_winding(w: &WindingVector, m: &RationalMatrix, a: &Arrangement) -> Result<WindingVector> {
    let atoms = a.atoms();
    if w.entries.len() != atoms.len() {
        return Err(Error::DimensionMismatch {
            expected: atoms.len(),
            found: w.entries.len(),
        });
    }
    let total = a.space().total_dim();
    let mut entries = vec![0i64; atoms.len()];
    for (i, atom) in atoms.iter().enumerate() {
        let images = atom
            .subspace()
            .basis()
            .iter()
            .map(|b| m.mul_vec(b))
            .collect::<Result<Vec<_>>>()?;
        let image = Subspace::span(total, images)?;
        let mut target = None;
        for (j, other) in atoms.iter().enumerate() {
            if other.subspace().same_span(&image)? {
                target = Some(j);
                break;
            }
        }
        let j = target.ok_or_else(|| Error::Precondition(format!("map does not preserve {}", atom.label())))?;
        let (u, v) = normal_frame(atom)?;
        let (u2, v2) = normal_frame(&atoms[j])?;
        let (mu, mv) = (m.mul_vec(&u)?, m.mul_vec(&v)?);
        let det = linalg::dot(&u2, &mu) * linalg::dot(&v2, &mv) - linalg::dot(&u2, &mv) * linalg::dot(&v2, &mu);
        if det.is_zero() {
            return Err(Error::Precondition("map is singular on a normal plane".into()));
        }
        entries[j] = if det.is_negative() { -w.entries[i] } else { w.entries[i] };
    }
    Ok(WindingVector {
        labels: atoms.iter().map(Flat::label).collect(),
        entries,
    })
}

/// Winding number of the planar curve 𝐱ᵢ(t) − 𝐱ⱼ(t) around the origin (d = 2).
pub fn pairwise_winding_2d(path: &PLPath, i: usize, j: usize) -> Result<i64> {
    let space = path.space;
    if space.space_dim() != 2 {
        return Err(Error::Precondition(format!(
            "pairwise winding needs d = 2, got d = {}",
            space.space_dim()
        )));
    }
    if !path.is_closed() {
        return Err(Error::OpenPath);
    }
    let flat = crate::geometry::pair_flat(space, i, j)?;
    let v2 = crate::geometry::build_coincidence_arrangement(space, 2)?;
    require_clear(path, &v2)?;
    let diffs: Vec<(Scalar, Scalar)> = path
        .vertices
        .iter()
        .map(|p| {
            let (a, b) = (p.particle(i), p.particle(j));
            (&a[0] - &b[0], &a[1] - &b[1])
        })
        .collect();
    let label = flat.label();
    planar_winding(
        &diffs,
        |v| Error::GeneralPosition {
            vertex: v,
            atom: label.clone(),
        },
        |s| Error::Collision {
            segment: s,
            atom: label.clone(),
        },
    )
}
