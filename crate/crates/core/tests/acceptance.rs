//! End-to-end checks of the headline numbers, one line per criterion.
//!
//! Run with `cargo test -p coincidence --test acceptance -- --nocapture` to see
//! the report.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use coincidence::geometry::{self, ConfigurationSpace, Point};
use coincidence::linalg::{self, RationalMatrix};
use coincidence::symmetry::{self, DEFAULT_GROUP_CAP};
use coincidence::topology::{self, Caps, ComplementSpec, RegionMethod, DEFAULT_SEED};
use coincidence::{paths, PathValidation};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;
type Criterion = (usize, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn spec(n: usize, d: usize, k: usize) -> ComplementSpec {
    ComplementSpec::new(n, d, k).unwrap()
}

fn sector_counts() -> Outcome {
    let caps = Caps::default();
    for n in 2..=6 {
        let by_poly = topology::zaslavsky_regions(&spec(n, 1, 2), &caps).map_err(|e| e.to_string())?;
        let by_orderings = topology::sector_count_by_enumeration(n).map_err(|e| e.to_string())?;
        ensure(by_poly.method == RegionMethod::CharacteristicPolynomial, || {
            format!("N={n}: unexpected method {:?}", by_poly.method)
        })?;
        ensure(by_poly.count == by_orderings.count, || {
            format!("N={n}: {} regions vs {} orderings", by_poly.count, by_orderings.count)
        })?;
        ensure(by_poly.count == factorial(n), || format!("N={n}: {} regions", by_poly.count))?;
    }
    let six = topology::zaslavsky_regions(&spec(3, 1, 2), &caps).unwrap().count;
    let twenty_four = topology::zaslavsky_regions(&spec(4, 1, 2), &caps).unwrap().count;
    ensure(six == BigInt::from(6) && twenty_four == BigInt::from(24), || {
        format!("N=3 gives {six}, N=4 gives {twenty_four}")
    })?;
    Ok("N=3 -> 6, N=4 -> 24, N! for N=2..6 by both methods".into())
}

fn atoms_and_codims() -> Outcome {
    for n in 2..=8 {
        let a = geometry::build_coincidence_arrangement(space(n, 1), 2).unwrap();
        ensure(a.atoms().len() == n * (n - 1) / 2, || {
            format!("N={n}: {} hyperplanes", a.atoms().len())
        })?;
    }
    let mut checked = 0;
    for n in 2..=6 {
        for d in 1..=3 {
            let s = ConfigurationSpace::new(n, d).unwrap();
            for k in 2..=n {
                let a = geometry::build_coincidence_arrangement(s, k).unwrap();
                for atom in a.atoms() {
                    let kernel = linalg::kernel_basis(&atom.equations()).dim();
                    let from_kernel = s.total_dim() - kernel;
                    ensure(atom.codim() == (k - 1) * d && from_kernel == atom.codim(), || {
                        format!(
                            "{} in N={n}, d={d}: codim {} vs kernel {}",
                            atom.label(),
                            atom.codim(),
                            from_kernel
                        )
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("N(N-1)/2 hyperplanes for N=2..8; {checked} atoms with codim (k-1)d"))
}

fn traid_topology() -> Outcome {
    let caps = Caps::default();
    let punct = topology::puncture_report(&spec(4, 1, 3)).map_err(|e| e.to_string())?;
    ensure(punct.punctures == 8 && punct.free_rank == 7, || {
        format!("{} punctures, free rank {}", punct.punctures, punct.free_rank)
    })?;
    let b1 = topology::betti_one(&spec(4, 1, 3), &caps).map_err(|e| e.to_string())?.b1;
    ensure(b1 == punct.free_rank, || format!("b1 = {b1} disagrees with free rank"))?;
    let b1_three = topology::betti_one(&spec(3, 1, 3), &caps).unwrap().b1;
    ensure(b1_three == 1, || format!("N=3: b1 = {b1_three}"))?;
    Ok("8 punctures, free rank 7, b1 = 7; N=3 b1 = 1".into())
}

fn braid_abelianization() -> Outcome {
    let caps = Caps::default();
    for (n, expected) in [(3, 3), (4, 6)] {
        let b1 = topology::betti_one(&spec(n, 2, 2), &caps).map_err(|e| e.to_string())?.b1;
        ensure(b1 == expected, || format!("N={n}: b1 = {b1}, want {expected}"))?;
    }
    let a = spec(3, 2, 2).arrangement();
    let rows = planar_generators()
        .iter()
        .map(|g| {
            let w = paths::winding_vector(g, &a).map_err(|e| e.to_string())?;
            Ok(w.entries.iter().map(|&e| linalg::int(e)).collect())
        })
        .collect::<Result<Vec<_>, String>>()?;
    let m = RationalMatrix::from_rows(3, rows).unwrap();
    ensure(m.rank() == 3, || format!("winding vectors have rank {}", m.rank()))?;
    Ok("b1 = 3 (N=3), 6 (N=4); 3 independent winding vectors".into())
}

fn symmetry_orders() -> Outcome {
    for (n, expected) in [(3, 12), (4, 48)] {
        let s = space(n, 1);
        let full = symmetry::generate_group(s, &symmetry::point_group_generators(s, true), DEFAULT_GROUP_CAP)
            .map_err(|e| e.to_string())?;
        ensure(full.order() == expected, || format!("N={n}: order {}", full.order()))?;
        let order = symmetry::point_group_order(s, DEFAULT_GROUP_CAP).unwrap().order;
        ensure(order == expected, || format!("N={n}: point_group_order {order}"))?;
        for k in 2..=n {
            let a = geometry::build_coincidence_arrangement(s, k).unwrap();
            for e in &full.elements {
                ensure(symmetry::preserves_atoms(&e.full, &a).unwrap(), || {
                    format!("N={n}: an element moves the k={k} atoms")
                })?;
            }
        }
        let perms = symmetry::generate_group(s, &symmetry::point_group_generators(s, false), DEFAULT_GROUP_CAP)
            .unwrap();
        let inversion = symmetry::restrict(
            symmetry::relative_inversion_map(s).matrix(),
            &s.relative_subspace(),
        )
        .unwrap();
        ensure(!perms.contains_relative(&inversion), || {
            format!("N={n}: i_perp is a permutation map")
        })?;
    }
    Ok("orders 12 and 48; atoms preserved; i_perp outside S_N".into())
}

fn fig_one_angle() -> Outcome {
    let s = space(3, 1);
    let cos2 = geometry::dihedral_cos_sq(
        &geometry::pair_flat(s, 1, 2).unwrap(),
        &geometry::pair_flat(s, 2, 3).unwrap(),
    )
    .map_err(|e| e.to_string())?;
    ensure(cos2 == linalg::ratio(1, 4), || format!("cos^2 = {cos2}"))?;
    Ok("cos^2 = 1/4".into())
}

fn scale_translation_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let shapes = [(3, 1), (4, 1), (3, 2), (5, 1), (4, 3)];
    let mut hits = 0;
    for trial in 0..1000 {
        let (n, d) = shapes[trial % shapes.len()];
        let s = space(n, d);
        // small numerators make coincidences common
        let coords = (0..s.total_dim()).map(|_| random_rational(&mut rng, 2, 2)).collect();
        let p = Point::new(s, coords).unwrap();
        let mut scale = random_rational(&mut rng, 5, 7);
        if scale == linalg::int(0) {
            scale = linalg::ratio(-3, 2);
        }
        let shift: Vec<_> = (0..d).map(|_| random_rational(&mut rng, 9, 5)).collect();
        let moved = symmetry::apply_isometry(&p, &symmetry::Isometry::Scale(scale.clone())).unwrap();
        let moved = symmetry::apply_isometry(
            &moved,
            &symmetry::Isometry::Translation(symmetry::TranslationVector { shift }),
        )
        .unwrap();
        for k in 2..=n {
            let a = geometry::build_coincidence_arrangement(s, k).unwrap();
            let before: Vec<String> = geometry::membership(&p, &a).unwrap().iter().map(|f| f.label()).collect();
            let after: Vec<String> = geometry::membership(&moved, &a).unwrap().iter().map(|f| f.label()).collect();
            ensure(before == after, || format!("trial {trial}: {before:?} became {after:?}"))?;
            hits += before.len();
        }
        let rho = geometry::hyperradius_sq(&p);
        ensure(geometry::hyperradius_sq(&moved) == &rho * &scale * &scale, || {
            format!("trial {trial}: rho^2 not scaled by s^2")
        })?;
    }
    ensure(hits > 0, || "no sample touched the coincidence structure".into())?;
    Ok(format!("1000 samples, {hits} coincidences preserved, rho^2 scales by s^2"))
}

fn winding_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut checks = 0;
    for (name, path, k) in loop_corpus() {
        let s = path.space();
        let a = geometry::build_coincidence_arrangement(s, k).unwrap();
        let w = paths::winding_vector(&path, &a).map_err(|e| format!("{name}: {e}"))?;

        let rev = paths::winding_vector(&path.reversed(), &a).map_err(|e| format!("{name}: {e}"))?;
        ensure(rev == w.negated(), || format!("{name}: reversal gave {rev:?}"))?;

        let twice = paths::winding_vector(&path.concat(&path).unwrap(), &a).unwrap();
        let doubled: Vec<i64> = w.entries.iter().map(|e| 2 * e).collect();
        ensure(twice.entries == doubled, || format!("{name}: concatenation not additive"))?;
        let there_and_back = paths::winding_vector(&path.concat(&path.reversed()).unwrap(), &a).unwrap();
        ensure(there_and_back.entries.iter().all(|&e| e == 0), || {
            format!("{name}: loop followed by its reverse winds")
        })?;

        for _ in 0..100 {
            let p = perturb(&path, &mut rng, 10);
            let wp = paths::winding_vector(&p, &a).map_err(|e| format!("{name} perturbed: {e}"))?;
            ensure(wp == w, || format!("{name}: perturbation changed {w:?} to {wp:?}"))?;
            checks += 1;
        }

        let group = symmetry::generate_group(s, &symmetry::point_group_generators(s, true), DEFAULT_GROUP_CAP)
            .unwrap();
        for e in &group.elements {
            let mapped = path
                .map_vertices(|p| Point::new(s, e.full.mul_vec(p.coords())?))
                .unwrap();
            let actual = paths::winding_vector(&mapped, &a).map_err(|err| format!("{name} mapped: {err}"))?;
            let predicted = paths::transport_winding(&w, &e.full, &a).unwrap();
            ensure(actual == predicted, || {
                format!("{name}: mapped loop winds {actual:?}, predicted {predicted:?}")
            })?;
            checks += 1;
        }
        let shift = symmetry::Isometry::Translation(symmetry::TranslationVector {
            shift: (0..s.space_dim()).map(|c| linalg::ratio(7 - 3 * c as i64, 4)).collect(),
        });
        let translated = path.map_vertices(|p| symmetry::apply_isometry(p, &shift)).unwrap();
        ensure(paths::winding_vector(&translated, &a).unwrap() == w, || {
            format!("{name}: translation changed the winding")
        })?;
    }
    let hex = hexagon();
    let a3 = geometry::build_coincidence_arrangement(hex.space(), 3).unwrap();
    let joined = paths::winding_vector(&hex.concat(&hexagon_tail()).unwrap(), &a3).unwrap();
    let parts = paths::winding_vector(&hex, &a3).unwrap().entries[0]
        + paths::winding_vector(&hexagon_tail(), &a3).unwrap().entries[0];
    ensure(joined.entries[0] == parts, || "hexagon + tail not additive".into())?;
    Ok(format!("{checks} perturbation and symmetry checks over {} loops", loop_corpus().len()))
}

fn connectivity_certificates() -> Outcome {
    let cases = [
        (spec(3, 2, 2), vec![0, 0, 1, 0, 2, 0], vec![2, 0, 1, 0, 0, 0]),
        (spec(4, 1, 3), vec![0, 1, 2, 3], vec![3, 2, 1, 0]),
    ];
    for (sp, from, to) in cases {
        let s = sp.space();
        let from = Point::from_i64(s, &from).unwrap();
        let to = Point::from_i64(s, &to).unwrap();
        let report = topology::connectivity_report(&sp, &from, &to, DEFAULT_SEED).map_err(|e| e.to_string())?;
        let cert = &report.certificate;
        ensure(cert.vertices().first() == Some(&from) && cert.vertices().last() == Some(&to), || {
            "certificate endpoints moved".into()
        })?;
        let check = paths::validate_path(cert, &sp.arrangement()).unwrap();
        ensure(check == PathValidation::Clear, || format!("{sp:?}: {check:?}"))?;
        ensure(report.regions.count == BigInt::from(1), || "more than one region".into())?;
    }
    Ok("(3,2,2) and (4,1,3) witnesses joined with zero collisions".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: Vec<Criterion> = vec![
        (1, "sector counts", Duration::from_secs(5), sector_counts),
        (2, "atom and codim formulas", Duration::from_secs(5), atoms_and_codims),
        (3, "traid topology", Duration::from_secs(1), traid_topology),
        (4, "braid abelianization", Duration::from_secs(2), braid_abelianization),
        (5, "symmetry orders", Duration::from_secs(2), symmetry_orders),
        (6, "dihedral angle", Duration::from_secs(1), fig_one_angle),
        (7, "scale and translation invariance", Duration::from_secs(5), scale_translation_invariance),
        (8, "winding properties", Duration::from_secs(10), winding_properties),
        (9, "connectivity certificates", Duration::from_secs(5), connectivity_certificates),
    ];
    let mut failures = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= limit => format!("PASS ({detail})"),
            Ok(detail) => format!("FAIL (over the {limit:?} budget; {detail})"),
            Err(why) => format!("FAIL ({why})"),
        };
        println!("criterion {id} [{name}]: {verdict} in {:.3}s", elapsed.as_secs_f64());
        if verdict.starts_with("FAIL") {
            failures.push(id);
        }
    }
    println!(
        "criterion 10 [excluded physics]: N/A (spectra, fermionization and anyonic dynamics are out of scope)"
    );
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
