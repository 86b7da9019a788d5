//! OBJ export of the visualizable coincidence structures (N = 3 or 4, d = 1).
//!
//! For N = 3 geometry lives in the full configuration space ℝ³. For N = 4 it
//! is drawn in the relative space 𝒱₄⊥ using the coordinates `x·hᵢ / 2` for
//! the three orthogonal sign vectors `hᵢ` below; they have equal norm 2, so
//! the map is an isometry and all vertices stay rational.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{self, ConfigurationSpace};
use crate::linalg::{self, Scalar, Subspace};

const SIGN_BASIS: [[i64; 4]; 3] = [[1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];

pub type Vec3 = [Scalar; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    /// Convex polygon, vertex indices in boundary order.
    Face(Vec<usize>),
    Segment(usize, usize),
    Point(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshGroup {
    pub name: String,
    pub element: Element,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Mesh {
    pub vertices: Vec<Vec3>,
    pub groups: Vec<MeshGroup>,
}

impl Mesh {
    fn push_vertex(&mut self, v: Vec3) -> usize {
        if let Some(i) = self.vertices.iter().position(|w| *w == v) {
            return i;
        }
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    pub fn faces(&self) -> impl Iterator<Item = &MeshGroup> {
        self.groups.iter().filter(|g| matches!(g.element, Element::Face(_)))
    }

    pub fn segments(&self) -> impl Iterator<Item = &MeshGroup> {
        self.groups.iter().filter(|g| matches!(g.element, Element::Segment(..)))
    }

    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "v {} {} {}", decimal(&v[0]), decimal(&v[1]), decimal(&v[2]));
        }
        for g in &self.groups {
            let _ = writeln!(out, "g {}", g.name);
            match &g.element {
                Element::Face(ix) => {
                    let ids: Vec<String> = ix.iter().map(|i| (i + 1).to_string()).collect();
                    let _ = writeln!(out, "f {}", ids.join(" "));
                }
                Element::Segment(a, b) => {
                    let _ = writeln!(out, "l {} {}", a + 1, b + 1);
                }
                Element::Point(a) => {
                    let _ = writeln!(out, "p {}", a + 1);
                }
            }
        }
        out
    }
}

/// Decimal rendering, exact for terminating expansions and rounded to 12
/// places otherwise.
pub fn decimal(x: &Scalar) -> String {
    if x.is_integer() {
        return x.to_integer().to_string();
    }
    let scale = BigInt::from(10).pow(12);
    let scaled = (x * Scalar::from_integer(scale.clone())).round().to_integer();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = format!("{digits:0>13}");
    let (int_part, frac) = digits.split_at(digits.len() - 12);
    let frac = frac.trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

fn display_coords(n: usize, x: &[Scalar]) -> Vec3 {
    match n {
        3 => [x[0].clone(), x[1].clone(), x[2].clone()],
        _ => {
            let half = linalg::ratio(1, 2);
            let c = |h: &[i64; 4]| linalg::dot(x, &linalg::vector(h)) * &half;
            [c(&SIGN_BASIS[0]), c(&SIGN_BASIS[1]), c(&SIGN_BASIS[2])]
        }
    }
}

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot3(a: &Vec3, b: &Vec3) -> Scalar {
    linalg::dot(a, b)
}

/// Polygon cut from the cube `[−B, B]³` by the plane through the origin with normal `normal`.
fn clip_plane(normal: &Vec3, half_width: &Scalar) -> Vec<Vec3> {
    let corner = |bits: usize| -> Vec3 {
        std::array::from_fn(|i| {
            if bits >> i & 1 == 1 {
                half_width.clone()
            } else {
                -half_width.clone()
            }
        })
    };
    let mut pts: Vec<Vec3> = Vec::new();
    let add = |p: Vec3, pts: &mut Vec<Vec3>| {
        if !pts.contains(&p) {
            pts.push(p);
        }
    };
    for a_bits in 0..8usize {
        for axis in 0..3 {
            if a_bits >> axis & 1 == 1 {
                continue;
            }
            let (a, b) = (corner(a_bits), corner(a_bits | 1 << axis));
            let (sa, sb) = (dot3(normal, &a), dot3(normal, &b));
            if sa.is_zero() {
                add(a.clone(), &mut pts);
            }
            if sb.is_zero() {
                add(b.clone(), &mut pts);
            }
            if (sa.is_positive() && sb.is_negative()) || (sa.is_negative() && sb.is_positive()) {
                let t = &sa / (&sa - &sb);
                let p: Vec3 = std::array::from_fn(|i| &a[i] + (&b[i] - &a[i]) * &t);
                add(p, &mut pts);
            }
        }
    }
    // order around the centroid in the plane's 2D shadow
    let drop = (0..3)
        .max_by(|&i, &j| normal[i].abs().cmp(&normal[j].abs()))
        .expect("three axes");
    let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
    let m = linalg::int(pts.len() as i64);
    let cx = pts.iter().fold(Scalar::zero(), |s, p| s + &p[keep[0]]) / &m;
    let cy = pts.iter().fold(Scalar::zero(), |s, p| s + &p[keep[1]]) / &m;
    let rel = |p: &Vec3| (&p[keep[0]] - &cx, &p[keep[1]] - &cy);
    let half = |(x, y): &(Scalar, Scalar)| -> u8 {
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    pts.sort_by(|p, q| {
        let (a, b) = (rel(p), rel(q));
        half(&a).cmp(&half(&b)).then_with(|| {
            let c = &a.0 * &b.1 - &a.1 * &b.0;
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
    pts
}

fn clip_line(direction: &Vec3, half_width: &Scalar) -> (Vec3, Vec3) {
    let max = direction
        .iter()
        .map(Signed::abs)
        .max()
        .expect("three components");
    let t = half_width / max;
    let end: Vec3 = std::array::from_fn(|i| &direction[i] * &t);
    let start: Vec3 = std::array::from_fn(|i| -&end[i]);
    (start, end)
}

/// Geometry of 𝒱ₖ for N ∈ {3, 4}, d = 1, clipped to the box of half-width `half_width`.
pub fn build_mesh(n: usize, d: usize, k: usize, half_width: &Scalar) -> Result<Mesh> {
    if d != 1 || !(3..=4).contains(&n) {
        return Err(Error::Precondition(format!(
            "meshes are available for N = 3 or 4 with d = 1, got N = {n}, d = {d}"
        )));
    }
    if !half_width.is_positive() {
        return Err(Error::Precondition("box half-width must be positive".into()));
    }
    let space = ConfigurationSpace::new(n, d)?;
    let arrangement = geometry::build_coincidence_arrangement(space, k)?;
    let rel = space.relative_subspace();
    let mut mesh = Mesh::default();
    for atom in arrangement.atoms() {
        let sub = if n == 3 {
            atom.subspace()
        } else {
            atom.subspace().intersection(&rel)?
        };
        add_subspace(&mut mesh, atom.label(), n, &sub, half_width)?;
    }
    if n == 3 {
        let axis = space.total_coincidence().subspace();
        add_subspace(&mut mesh, "V_N_axis".into(), n, &axis, half_width)?;
    } else {
        let origin = mesh.push_vertex(std::array::from_fn(|_| Scalar::zero()));
        mesh.groups.push(MeshGroup {
            name: "origin".into(),
            element: Element::Point(origin),
        });
    }
    Ok(mesh)
}

fn add_subspace(mesh: &mut Mesh, name: String, n: usize, sub: &Subspace, half_width: &Scalar) -> Result<()> {
    let basis: Vec<Vec3> = sub.basis().iter().map(|b| display_coords(n, b)).collect();
    let element = match basis.len() {
        0 => Element::Point(mesh.push_vertex(std::array::from_fn(|_| Scalar::zero()))),
        1 => {
            let (a, b) = clip_line(&basis[0], half_width);
            Element::Segment(mesh.push_vertex(a), mesh.push_vertex(b))
        }
        2 => {
            let normal = cross(&basis[0], &basis[1]);
            let ids = clip_plane(&normal, half_width)
                .into_iter()
                .map(|p| mesh.push_vertex(p))
                .collect();
            Element::Face(ids)
        }
        k => {
            return Err(Error::Precondition(format!(
                "{name} is {k}-dimensional in the display space"
            )))
        }
    };
    mesh.groups.push(MeshGroup { name, element });
    Ok(())
}
