//! Graph matrices and their characteristic polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

use galoisdraw_core::exact::QPoly;
use galoisdraw_core::graphlab::{
    build_graph, charpoly_exact, graph_matrix, rational_eigenvectors, ExactMatrix, Graph,
    GraphSpec, MatrixKind,
};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn qc(n: i64) -> QPoly {
    QPoly::constant(q(n))
}

/// Circulant graph on `n` vertices joining `i` and `i + s` for each offset.
fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for &s in offsets {
        for i in 0..n {
            let j = (i + s) % n;
            let e = (i.min(j), i.max(j));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn circulant_strategy() -> impl Strategy<Value = Graph> {
    (4usize..=11)
        .prop_flat_map(|n| (Just(n), prop::collection::btree_set(1..=n / 2, 1..=3)))
        .prop_map(|(n, s)| circulant(n, &s.into_iter().collect::<Vec<_>>()))
}

fn matrix_strategy() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=6).prop_flat_map(|d| {
        prop::collection::vec((-9i64..=9, 1i64..=5), d * d).prop_map(move |v| {
            ExactMatrix::from_fn(d, d, |i, j| {
                let (a, b) = v[i * d + j];
                BigRational::new(a.into(), b.into())
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cayley_hamilton(m in matrix_strategy()) {
        let cp = charpoly_exact(&m).unwrap();
        prop_assert_eq!(cp.deg(), m.rows());
        prop_assert!(cp.is_monic());
        prop_assert_eq!(m.eval_poly(&cp).unwrap(), ExactMatrix::zeros(m.rows(), m.rows()));
    }

    #[test]
    fn charpoly_trace_and_determinant(m in matrix_strategy()) {
        let n = m.rows();
        let cp = charpoly_exact(&m).unwrap();
        let trace: BigRational = (0..n).map(|i| m.get(i, i).clone()).sum();
        prop_assert_eq!(-cp.coeff(n - 1), trace);
        // det by cofactor expansion along the first row.
        fn det(m: &[Vec<BigRational>]) -> BigRational {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = BigRational::zero();
            for j in 0..m.len() {
                let minor: Vec<Vec<BigRational>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][j] * det(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
        let rows: Vec<Vec<BigRational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
        let sign = if n % 2 == 0 { q(1) } else { q(-1) };
        prop_assert_eq!(cp.coeff(0), sign * det(&rows));
    }

    #[test]
    fn regular_laplacian_reflects_adjacency(g in circulant_strategy()) {
        let k = g.regular_degree().unwrap() as i64;
        let n = g.n();
        let ca = charpoly_exact(&graph_matrix(&g, &MatrixKind::Adjacency).unwrap()).unwrap();
        let cl = charpoly_exact(&graph_matrix(&g, &MatrixKind::Laplacian).unwrap()).unwrap();
        let sign = if n % 2 == 0 { qc(1) } else { qc(-1) };
        prop_assert_eq!(cl, &sign * &ca.compose(&(&qc(k) - &QPoly::x())));
    }

    #[test]
    fn regular_transition_scales_adjacency(g in circulant_strategy()) {
        let k = g.regular_degree().unwrap() as i64;
        let n = g.n();
        let ca = charpoly_exact(&graph_matrix(&g, &MatrixKind::Adjacency).unwrap()).unwrap();
        let ct = charpoly_exact(&graph_matrix(&g, &MatrixKind::Transition).unwrap()).unwrap();
        let kn = BigRational::from_integer(num_traits::pow(BigInt::from(k), n));
        prop_assert_eq!(ct, ca.compose(&(&qc(k) * &QPoly::x())).map(|c| c / &kn));
    }

    #[test]
    fn relaxed_laplacian_is_l_minus_rho_d(g in circulant_strategy(), a in -5i64..=5, b in 1i64..=5) {
        let rho = BigRational::new(a.into(), b.into());
        let l = graph_matrix(&g, &MatrixKind::Laplacian).unwrap();
        let d = graph_matrix(&g, &MatrixKind::Degree).unwrap();
        let r = graph_matrix(&g, &MatrixKind::RLaplacian(rho.clone())).unwrap();
        prop_assert_eq!(r, l.sub(&d.scale(&rho)).unwrap());
    }

    #[test]
    fn laplacian_kernel_is_constant_on_connected_graphs(g in circulant_strategy()) {
        prop_assume!(g.is_connected());
        let l = graph_matrix(&g, &MatrixKind::Laplacian).unwrap();
        let basis = rational_eigenvectors(&l, &BigRational::zero()).unwrap();
        prop_assert_eq!(basis.len(), 1);
        let v = &basis[0];
        prop_assert!(v.iter().all(|x| x == &v[0]) && !v[0].is_zero());
    }
}

#[test]
fn cycle_eigenvalues_are_cosines() {
    for n in 3..=12 {
        let g = build_graph(&GraphSpec::Cycle(n)).unwrap();
        let cp = charpoly_exact(&graph_matrix(&g, &MatrixKind::Adjacency).unwrap()).unwrap();
        for k in 0..n {
            let lambda = 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
            let v = cp
                .coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * lambda + c.to_f64().unwrap());
            assert!(
                v.abs() < 1e-8,
                "C_{} at 2cos(2pi {}/{}) gives {}",
                n,
                k,
                n,
                v
            );
        }
    }
}

#[test]
fn complete_graph_spectrum() {
    for n in 2..=8i64 {
        let g = build_graph(&GraphSpec::Complete(n as usize)).unwrap();
        let cp = charpoly_exact(&graph_matrix(&g, &MatrixKind::Adjacency).unwrap()).unwrap();
        let want = &(&QPoly::x() - &qc(n - 1)) * &(&QPoly::x() + &qc(1)).pow((n - 1) as u32);
        assert_eq!(cp, want);
    }
}

#[test]
fn transition_rows_sum_to_one() {
    for spec in [
        GraphSpec::Y9,
        GraphSpec::H12,
        GraphSpec::Grid2x3,
        GraphSpec::Bipyr(6),
    ] {
        let g = build_graph(&spec).unwrap();
        let t = graph_matrix(&g, &MatrixKind::Transition).unwrap();
        assert!(t.row_sums().iter().all(|s| s.is_one()));
    }
}

#[test]
fn mds_centering_annihilates_constants() {
    for spec in [GraphSpec::Grid2x3, GraphSpec::Cycle(7), GraphSpec::Y9] {
        let g = build_graph(&spec).unwrap();
        let m = graph_matrix(&g, &MatrixKind::MdsCentered).unwrap();
        assert!(m.is_symmetric());
        assert!(m.row_sums().iter().all(|s| s.is_zero()));
    }
}
