//! Force models, circle packings and Möbius maps.

use num_complex::Complex64;
use proptest::prelude::*;

use galoisdraw_core::equilib::{fr_forces, kk_energy_gradient, ForceModel, Layout};
use galoisdraw_core::graphlab::{build_graph, pack_layout, Graph, GraphSpec};
use galoisdraw_core::packing::concentric::max_center_shift;
use galoisdraw_core::packing::{
    angle_sum_defects, check_packing, concentric_map, default_outer_face, limiting_points,
    normalize_concentric, pack_graph_numeric, triangulation_faces, Circle, MobiusMap, Packing,
};

fn graph_and_layout() -> impl Strategy<Value = (Graph, Layout)> {
    (3usize..=8).prop_flat_map(|n| {
        let tree = prop::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = prop::collection::vec((0..n, 0..n), 0..n);
        let pts = prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), n);
        (tree, extra, pts).prop_filter_map("distinct points", move |(tree, extra, pts)| {
            let mut edges: Vec<(usize, usize)> = tree
                .iter()
                .enumerate()
                .map(|(i, ix)| (ix.index(i + 1), i + 1))
                .collect();
            for (u, v) in extra {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                    edges.push(e);
                }
            }
            let far_apart = pts
                .iter()
                .enumerate()
                .all(|(i, p)| pts[..i].iter().all(|q| (p.0 - q.0).hypot(p.1 - q.1) > 0.05));
            far_apart.then(|| {
                (
                    Graph::new(n, &edges).unwrap(),
                    Layout::new(pts.iter().map(|&(x, y)| [x, y]).collect()),
                )
            })
        })
    })
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn mobius() -> impl Strategy<Value = MobiusMap> {
    (complex(), complex(), complex(), complex(), any::<bool>())
        .prop_filter_map("invertible", |(a, b, c, d, conj)| {
            MobiusMap::new(a, b, c, d, conj).ok()
        })
}

/// Two externally tangent circles.
fn tangent_pair() -> impl Strategy<Value = (Circle, Circle)> {
    (
        complex(),
        0.1f64..2.0,
        0.1f64..2.0,
        0.0f64..std::f64::consts::TAU,
    )
        .prop_map(|(c, r1, r2, t)| {
            (
                Circle {
                    center: c,
                    radius: r1,
                },
                Circle {
                    center: c + Complex64::from_polar(r1 + r2, t),
                    radius: r2,
                },
            )
        })
}

/// Distance from the pole of `m` to the circle, relative to its radius.
fn pole_clearance(m: &MobiusMap, c: &Circle) -> f64 {
    match pole(m) {
        Some(p) => {
            let q = if m.conjugate_first {
                c.center.conj()
            } else {
                c.center
            };
            ((p - q).norm() - c.radius).abs() / c.radius
        }
        None => f64::INFINITY,
    }
}

fn pole(m: &MobiusMap) -> Option<Complex64> {
    (m.c.norm() > 1e-12).then(|| -m.d / m.c)
}

fn packings() -> Vec<(GraphSpec, usize, usize)> {
    let mut out: Vec<(GraphSpec, usize, usize)> =
        (3..=16).map(|k| (GraphSpec::Bipyr(k), k, k + 1)).collect();
    for n in [5, 7, 9] {
        let (_, lay) = pack_layout(2, n).unwrap();
        out.push((GraphSpec::Pack(2, n), lay.inner_hub, lay.outer_hub));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn kk_gradient_matches_finite_differences((g, layout) in graph_and_layout()) {
        let model = ForceModel::kamada_kawai();
        let (_, grad) = kk_energy_gradient(&g, &layout, &model).unwrap();
        let h = 1e-5;
        let mut err = 0.0f64;
        let mut norm = 0.0f64;
        for v in 0..g.n() {
            for axis in 0..2 {
                let mut plus = layout.clone();
                let mut minus = layout.clone();
                plus.positions[v][axis] += h;
                minus.positions[v][axis] -= h;
                let ep = kk_energy_gradient(&g, &plus, &model).unwrap().0;
                let em = kk_energy_gradient(&g, &minus, &model).unwrap().0;
                err += ((ep - em) / (2.0 * h) - grad[v][axis]).powi(2);
                norm += grad[v][axis].powi(2);
            }
        }
        prop_assert!(err.sqrt() <= 1e-6 * norm.sqrt().max(1e-9), "relative error {:e}", err.sqrt() / norm.sqrt());
    }

    #[test]
    fn fr_forces_obey_action_and_reaction((g, layout) in graph_and_layout(), k in 0.2f64..3.0) {
        let f = fr_forces(&g, &layout, k).unwrap();
        let total = f.iter().fold([0.0, 0.0], |s, p| [s[0] + p[0], s[1] + p[1]]);
        let scale: f64 = f.iter().map(|p| p[0].abs() + p[1].abs()).sum::<f64>().max(1.0);
        prop_assert!(total[0].abs() + total[1].abs() < 1e-12 * scale);
    }

    #[test]
    fn mobius_maps_preserve_tangency(m in mobius(), (c1, c2) in tangent_pair()) {
        prop_assume!(pole_clearance(&m, &c1) > 0.05 && pole_clearance(&m, &c2) > 0.05);
        let (k1, f1) = m.apply_circle(&c1).unwrap();
        let (k2, f2) = m.apply_circle(&c2).unwrap();
        let d = (k1.center - k2.center).norm();
        let target = if f1 != f2 { (k1.radius - k2.radius).abs() } else { k1.radius + k2.radius };
        prop_assert!(!(f1 && f2));
        prop_assert!((d - target).abs() <= 1e-9 * k1.radius.max(k2.radius));
    }

    #[test]
    fn mobius_composition_acts_on_points(m in mobius(), n in mobius(), z in complex()) {
        let twice = n.apply(z).and_then(|w| m.apply(w));
        if let (Some(twice), Some(composed)) = (twice, m.compose(&n).apply(z)) {
            prop_assume!(twice.norm() < 1e6);
            prop_assert!((twice - composed).norm() <= 1e-8 * twice.norm().max(1.0));
        }
    }

    #[test]
    fn concentric_map_on_random_pairs(c1 in complex(), r1 in 0.05f64..1.0, c2 in complex(), r2 in 0.05f64..1.0, nested in any::<bool>()) {
        let (a, b) = if nested {
            // b strictly encloses a.
            let big = Circle { center: c2, radius: (c1 - c2).norm() + r1 + r2 };
            (Circle { center: c1, radius: r1 }, big)
        } else {
            let gap = (c1 - c2).norm() - r1 - r2;
            prop_assume!(gap > 0.05);
            (Circle { center: c1, radius: r1 }, Circle { center: c2, radius: r2 })
        };
        let m = concentric_map(&a, &b).unwrap();
        let (ia, _) = m.apply_circle(&a).unwrap();
        let (ib, _) = m.apply_circle(&b).unwrap();
        let scale = ia.radius.max(ib.radius);
        prop_assert!((ia.center - ib.center).norm() <= 1e-8 * scale);
        prop_assert!(ib.radius > ia.radius);
        let (p, q, _) = limiting_points(&a, &b).unwrap();
        prop_assert!(p.is_finite() && q.is_finite());
    }
}

#[test]
fn packings_meet_tangency_and_angle_sums() {
    for (spec, _, _) in packings() {
        let g = build_graph(&spec).unwrap();
        let p = pack_graph_numeric(&g, None, 1e-9).unwrap();
        let check = check_packing(&g, &p).unwrap();
        assert!(
            check.max_tangency_error < 1e-9,
            "{:?}: {:e}",
            spec,
            check.max_tangency_error
        );
        assert!(
            check.max_overlap < 1e-9,
            "{:?}: overlap {:e}",
            spec,
            check.max_overlap
        );
        let faces = triangulation_faces(&g).unwrap();
        assert_eq!(faces.len(), 2 * g.n() - 4);
        let radii: Vec<f64> = p.circles.iter().map(|c| c.radius).collect();
        for (v, d) in angle_sum_defects(g.n(), &faces, default_outer_face(&faces), &radii) {
            assert!(
                d.abs() < 1e-9,
                "{:?}: vertex {} angle defect {:e}",
                spec,
                v,
                d
            );
        }
    }
}

#[test]
fn concentric_normalization_is_idempotent() {
    for (spec, h1, h2) in packings() {
        let g = build_graph(&spec).unwrap();
        let p = pack_graph_numeric(&g, None, 1e-9).unwrap();
        let once = normalize_concentric(&g, &p, h1, h2).unwrap();
        let twice = normalize_concentric(&g, &once, h1, h2).unwrap();
        assert!(max_center_shift(&once, &twice) < 1e-9, "{:?}", spec);
        assert!(once.circles[h1].center.norm() < 1e-9);
        assert!(once.circles[h2].center.norm() < 1e-9);
        assert_eq!(once.outer, Some(h2));
        assert!(check_packing(&g, &once).unwrap().max_tangency_error < 1e-8);
    }
}

#[test]
fn bipyramid_rim_sits_on_roots_of_unity() {
    for k in 3..=12usize {
        let g = build_graph(&GraphSpec::Bipyr(k)).unwrap();
        let p = pack_graph_numeric(&g, None, 1e-9).unwrap();
        let q: Packing = normalize_concentric(&g, &p, k, k + 1).unwrap();
        let r = q.circles[0].center.norm();
        for v in 0..k {
            let z = q.circles[v].center / r;
            assert!(
                (z.powu(k as u32) - 1.0).norm() < 1e-8,
                "bipyr:{} vertex {}",
                k,
                v
            );
        }
    }
}
