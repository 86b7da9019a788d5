//! Intersection poset of a coincidence arrangement.
//!
//! Nodes are flats named by canonical partitions. The poset is ordered by
//! reverse inclusion: `x ≤ y` when `y`'s subspace sits inside `x`'s, which on
//! partitions means `x` refines `y`. Construction closes the atoms under
//! partition joins and never touches a matrix; the linear algebra only serves
//! as a cross-check.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{self, Arrangement, ConfigurationSpace, Flat, ParticlePartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeNode {
    pub flat: Flat,
    pub codim: usize,
    pub mobius: i64,
}

impl LatticeNode {
    pub fn partition(&self) -> &ParticlePartition {
        self.flat.partition()
    }
}

#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    space: ConfigurationSpace,
    order_k: usize,
    /// Sorted by (rank, non-singleton blocks); index 0 is the bottom 0̂.
    nodes: Vec<LatticeNode>,
}

pub fn build_lattice(a: &Arrangement) -> IntersectionLattice {
    let space = a.space();
    let mut index: HashSet<ParticlePartition> = HashSet::new();
    let mut found: Vec<ParticlePartition> = Vec::new();
    let mut queue: VecDeque<ParticlePartition> = VecDeque::new();
    let atoms: Vec<&ParticlePartition> = a.atoms().iter().map(Flat::partition).collect();

    for &p in &atoms {
        if index.insert(p.clone()) {
            found.push(p.clone());
            queue.push_back(p.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for &atom in &atoms {
            let j = x.join(atom);
            if index.insert(j.clone()) {
                found.push(j.clone());
                queue.push_back(j);
            }
        }
    }
    found.push(ParticlePartition::singletons(space.n_particles()));
    // non-singleton blocks determine the partition, and read like the labels
    found.sort_by_cached_key(|p| (p.rank(), p.non_singleton_blocks().cloned().collect::<Vec<_>>()));

    let mut nodes: Vec<LatticeNode> = found
        .into_iter()
        .map(|p| {
            let flat = geometry::partition_flat(space, p).expect("partition sized to space");
            LatticeNode {
                codim: flat.codim(),
                flat,
                mobius: 0,
            }
        })
        .collect();
    let mobius = mobius_values(&nodes);
    for (node, m) in nodes.iter_mut().zip(mobius) {
        node.mobius = m;
    }
    IntersectionLattice {
        space,
        order_k: a.order(),
        nodes,
    }
}

/// μ(0̂, x) by the downward recursion, relying on nodes sorted by rank.
fn mobius_values(nodes: &[LatticeNode]) -> Vec<i64> {
    let mut mu = vec![0i64; nodes.len()];
    for x in 0..nodes.len() {
        if x == 0 {
            mu[0] = 1;
            continue;
        }
        let px = nodes[x].partition();
        let below: i64 = (0..x)
            .filter(|&y| nodes[y].partition().refines(px))
            .map(|y| mu[y])
            .sum();
        mu[x] = -below;
    }
    mu
}

impl IntersectionLattice {
    pub fn space(&self) -> ConfigurationSpace {
        self.space
    }

    pub fn order(&self) -> usize {
        self.order_k
    }

    pub fn nodes(&self) -> &[LatticeNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    /// The unique maximal node (𝒱_N for every coincidence arrangement).
    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn find(&self, partition: &ParticlePartition) -> Option<usize> {
        self.nodes.iter().position(|n| n.partition() == partition)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.nodes[x].partition().refines(self.nodes[y].partition())
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn is_atom(&self, x: usize) -> bool {
        x != 0 && (1..self.nodes.len()).all(|y| !self.lt(y, x))
    }

    pub fn mobius(&self) -> Vec<(&ParticlePartition, i64)> {
        self.nodes.iter().map(|n| (n.partition(), n.mobius)).collect()
    }

    /// Covering pairs `(x, y)` with `x ⋖ y`, in node order.
    pub fn covering_edges(&self) -> Vec<(usize, usize)> {
        let n = self.nodes.len();
        let mut edges = Vec::new();
        for y in 0..n {
            for x in 0..y {
                if self.lt(x, y) && !(x + 1..y).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    edges.push((x, y));
                }
            }
        }
        edges
    }

    pub fn characteristic_polynomial(&self) -> CharacteristicPolynomial {
        let total = self.space.total_dim();
        let mut coeffs = vec![0i64; total + 1];
        for node in &self.nodes {
            coeffs[total - node.codim] += node.mobius;
        }
        CharacteristicPolynomial { coeffs }
    }

    pub fn open_interval_complex(&self, x: usize) -> Result<OrderComplex> {
        open_interval_complex(self, x)
    }

    /// Checks the partition order against exact subspace containment on every pair.
    pub fn order_matches_subspaces(&self) -> Result<bool> {
        let subspaces: Vec<_> = self.nodes.iter().map(|n| n.flat.subspace()).collect();
        for x in 0..self.nodes.len() {
            for y in 0..self.nodes.len() {
                if self.leq(x, y) != subspaces[x].contains_subspace(&subspaces[y])? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn mobius(l: &IntersectionLattice) -> Vec<(&ParticlePartition, i64)> {
    l.mobius()
}

pub fn characteristic_polynomial(l: &IntersectionLattice) -> CharacteristicPolynomial {
    l.characteristic_polynomial()
}

/// χ(t) = Σ μ(0̂,x)·t^{dim x}; `coeffs[i]` multiplies `tⁱ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPolynomial {
    pub coeffs: Vec<i64>,
}

impl CharacteristicPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0).unwrap_or(0)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * t + BigInt::from(c))
    }

    /// Coefficients from the leading term down, e.g. `[1, -3, 2, 0]`.
    pub fn descending(&self) -> Vec<i64> {
        self.coeffs[..=self.degree()].iter().rev().copied().collect()
    }
}

impl fmt::Display for CharacteristicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (deg, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{deg}")?,
                _ => write!(f, "{a}t^{deg}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Order complex of an open interval (0̂, x): simplices are chains of nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderComplex {
    /// Lattice node indices strictly between 0̂ and x.
    pub vertices: Vec<usize>,
    /// Maximal chains, each listed bottom to top.
    pub facets: Vec<Vec<usize>>,
}

impl OrderComplex {
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the largest facet; `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// Every face grouped by dimension: `faces()[q]` lists the q-simplices,
    /// each sorted, the list itself sorted.
    pub fn faces(&self) -> Vec<Vec<Vec<usize>>> {
        let dim = self.dimension();
        if dim < 0 {
            return Vec::new();
        }
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<usize>>> =
            vec![Default::default(); dim as usize + 1];
        for facet in &self.facets {
            let m = facet.len();
            for mask in 1u64..(1u64 << m) {
                let face: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
                by_dim[face.len() - 1].insert(face);
            }
        }
        by_dim.into_iter().map(|s| s.into_iter().collect()).collect()
    }
}

pub fn open_interval_complex(l: &IntersectionLattice, x: usize) -> Result<OrderComplex> {
    if x == l.bottom() || x >= l.len() {
        return Err(Error::Precondition(
            "open interval needs a node strictly above the bottom".into(),
        ));
    }
    let vertices: Vec<usize> = (1..x).filter(|&y| l.lt(y, x)).collect();
    if vertices.is_empty() {
        return Ok(OrderComplex::empty());
    }
    // Maximal chains: start at minimal vertices, extend by covers inside the interval.
    let covers = |y: usize| -> Vec<usize> {
        vertices
            .iter()
            .copied()
            .filter(|&z| l.lt(y, z) && !vertices.iter().any(|&w| l.lt(y, w) && l.lt(w, z)))
            .collect()
    };
    let minimal: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&y| !vertices.iter().any(|&w| l.lt(w, y)))
        .collect();
    let mut facets = Vec::new();
    let mut stack: Vec<Vec<usize>> = minimal.into_iter().map(|v| vec![v]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty chain");
        let next = covers(last);
        if next.is_empty() {
            facets.push(chain);
        } else {
            for z in next {
                let mut c = chain.clone();
                c.push(z);
                stack.push(c);
            }
        }
    }
    facets.sort();
    Ok(OrderComplex { vertices, facets })
}

/// Number of partitions of an n-set (Bell number), used to size-check lattices.
pub fn bell_number(n: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![row.last().cloned().expect("nonempty")];
        for v in &row {
            let s = next.last().expect("nonempty") + v;
            next.push(s);
        }
        row = next;
    }
    row[0].clone()
}
