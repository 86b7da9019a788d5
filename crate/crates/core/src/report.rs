//! Serializable summaries: the per-spec report and lattice exports.
//!
//! Everything here is assembled from library calls; JSON goes through
//! `serde_json::Value`, whose maps keep keys sorted, so identical inputs give
//! byte-identical output.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::geometry::Point;
use crate::lattice::IntersectionLattice;
use crate::symmetry::{self, DEFAULT_GROUP_CAP};
use crate::topology::{self, Caps, ComplementSpec};

/// Integers that fit in 64 bits become JSON numbers; larger ones become
/// `{"value": "<decimal>", "as_string": true}`.
pub fn big_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!({ "value": x.to_string(), "as_string": true }),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportDocument {
    pub spec: ComplementSpec,
    /// Only the entries that apply to the spec's codimension class.
    pub results: Map<String, Value>,
}

impl ReportDocument {
    pub fn to_json(&self) -> Value {
        json!({ "spec": self.spec, "results": self.results })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("plain JSON values");
        s.push('\n');
        s
    }
}

/// Designated endpoints for connectivity certificates: particles in order
/// 1, …, N along the first axis, and the same slots in reverse order.
pub fn certificate_witnesses(spec: &ComplementSpec) -> (Point, Point) {
    let space = spec.space();
    let place = |rev: bool| {
        let mut coords = vec![0i64; space.total_dim()];
        for i in 1..=spec.n {
            let slot = if rev { spec.n + 1 - i } else { i };
            coords[space.coord(i, 0)] = slot as i64;
        }
        Point::from_i64(space, &coords).expect("sized to the space")
    };
    (place(false), place(true))
}

pub fn build_report(spec: &ComplementSpec, caps: &Caps, seed: u64) -> Result<ReportDocument> {
    spec.check_caps(caps)?;
    let mut results = Map::new();
    let arrangement = spec.arrangement();
    results.insert("atoms".into(), json!(arrangement.atoms().len()));
    results.insert("codim".into(), json!(spec.defect_codim()));

    let lattice = spec.lattice(caps)?;
    results.insert("lattice".into(), lattice_summary(&lattice));

    if spec.defect_codim() == 1 {
        let regions = topology::zaslavsky_regions(spec, caps)?;
        results.insert("regions".into(), big_json(&regions.count));
        let sectors = topology::sector_count_by_enumeration(spec.n)?;
        results.insert("sectors".into(), big_json(&sectors.count));
    } else {
        if spec.defect_codim() == 2 {
            let betti = topology::betti_one(spec, caps)?;
            results.insert("b1".into(), json!(betti.b1));
            if spec.relative_dim() == 3 {
                let p = topology::puncture_report(spec)?;
                results.insert("punctures".into(), json!(p.punctures));
                results.insert("free_rank".into(), json!(p.free_rank));
            }
        }
        let (from, to) = certificate_witnesses(spec);
        let conn = topology::connectivity_report(spec, &from, &to, seed)?;
        results.insert(
            "connectivity".into(),
            json!({
                "connected": true,
                "seed": seed,
                "certificate_vertices": conn.certificate.vertices().len(),
            }),
        );
    }
    if spec.d == 1 {
        let group = symmetry::point_group_order(spec.space(), DEFAULT_GROUP_CAP)?;
        results.insert("point_group_order".into(), json!(group.order));
        if let Some(name) = group.name {
            results.insert("point_group".into(), json!(name));
        }
    }
    Ok(ReportDocument { spec: *spec, results })
}

fn lattice_summary(l: &IntersectionLattice) -> Value {
    json!({
        "nodes": l.len(),
        "covering_edges": l.covering_edges().len(),
        "characteristic_polynomial": l.characteristic_polynomial().to_string(),
    })
}

fn node_label(l: &IntersectionLattice, i: usize) -> String {
    if i == l.bottom() {
        "ambient".into()
    } else {
        l.nodes()[i].flat.label()
    }
}

pub fn lattice_json(l: &IntersectionLattice) -> Value {
    let nodes: Vec<Value> = l
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| {
            json!({
                "id": i,
                "label": node_label(l, i),
                "partition": n.partition().to_string(),
                "codim": n.codim,
                "mobius": n.mobius,
            })
        })
        .collect();
    let edges: Vec<Value> = l.covering_edges().into_iter().map(|(a, b)| json!([a, b])).collect();
    let space = l.space();
    json!({
        "spec": { "N": space.n_particles(), "d": space.space_dim(), "k": l.order() },
        "nodes": nodes,
        "edges": edges,
        "characteristic_polynomial": l.characteristic_polynomial().descending(),
    })
}

pub fn lattice_dot(l: &IntersectionLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for (i, n) in l.nodes().iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{i} [label=\"{}\\ncodim {}, mu {}\"];",
            node_label(l, i),
            n.codim,
            n.mobius
        );
    }
    for (a, b) in l.covering_edges() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
