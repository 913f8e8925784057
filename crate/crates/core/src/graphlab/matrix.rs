//! Exact rational matrices, graph matrices and characteristic polynomials.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::graph::Graph;
use crate::exact::QPoly;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + o.get(i, j)
        }))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - o.get(i, j)
        }))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    out.data[idx] = &out.data[idx] + a * o.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(BigRational::zero(), |a, b| a + b))
            .collect()
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::InvalidArgument("matrix shapes differ".into()));
        }
        Ok(())
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &QPoly) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&Self::identity(n).scale(c))?;
        }
        Ok(acc)
    }
}

/// The matrices a graph gives rise to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    Degree,
    Laplacian,
    /// `L - rho D`.
    RLaplacian(BigRational),
    /// `D^-1 A`.
    Transition,
    /// `J D2 J` with `D2` the squared hop-distance matrix and
    /// `J = I - 11^T / n`.
    MdsCentered,
}

impl MatrixKind {
    pub fn name(&self) -> alloc::string::String {
        match self {
            MatrixKind::Adjacency => "adjacency".into(),
            MatrixKind::Degree => "degree".into(),
            MatrixKind::Laplacian => "laplacian".into(),
            MatrixKind::RLaplacian(r) => format!("rlaplacian({})", r),
            MatrixKind::Transition => "transition".into(),
            MatrixKind::MdsCentered => "mds".into(),
        }
    }
}

pub fn graph_matrix(g: &Graph, kind: &MatrixKind) -> Result<ExactMatrix> {
    let n = g.n();
    let adj = |i: usize, j: usize| {
        if g.has_edge(i, j) {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    };
    let deg = |i: usize| q(g.degree(i) as i64);
    Ok(match kind {
        MatrixKind::Adjacency => ExactMatrix::from_fn(n, n, adj),
        MatrixKind::Degree => {
            ExactMatrix::from_fn(
                n,
                n,
                |i, j| if i == j { deg(i) } else { BigRational::zero() },
            )
        }
        MatrixKind::Laplacian => {
            ExactMatrix::from_fn(n, n, |i, j| if i == j { deg(i) } else { -adj(i, j) })
        }
        MatrixKind::RLaplacian(rho) => ExactMatrix::from_fn(n, n, |i, j| {
            if i == j {
                deg(i) * (BigRational::one() - rho)
            } else {
                -adj(i, j)
            }
        }),
        MatrixKind::Transition => {
            if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
                return Err(Error::InvalidGraph(format!("vertex {} is isolated", v)));
            }
            ExactMatrix::from_fn(n, n, |i, j| adj(i, j) / deg(i))
        }
        MatrixKind::MdsCentered => {
            let d2 = apsp_squared(g)?;
            let nq = q(n as i64);
            let j = ExactMatrix::from_fn(n, n, |a, b| {
                let id = if a == b {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                id - BigRational::one() / &nq
            });
            j.mul(&d2)?.mul(&j)?
        }
    })
}

/// Squared hop distances.
pub fn apsp_squared(g: &Graph) -> Result<ExactMatrix> {
    let n = g.n();
    let mut m = ExactMatrix::zeros(n, n);
    for s in 0..n {
        for (t, d) in g.bfs(s).into_iter().enumerate() {
            let d = d.ok_or_else(|| Error::InvalidGraph("graph is disconnected".into()))?;
            m.set(s, t, q((d * d) as i64));
        }
    }
    Ok(m)
}

/// Monic `det(xI - M)` by Berkowitz's division-free algorithm.
pub fn charpoly_exact(m: &ExactMatrix) -> Result<QPoly> {
    let n = m.require_square()?;
    // Coefficient vectors are highest degree first during the recurrence.
    let mut c: Vec<BigRational> = vec![BigRational::one()];
    for k in 0..n {
        // Leading principal (k+1)x(k+1) block, split as [[A, R], [S, a]]
        // with a = m[k][k], R = m[0..k][k], S = m[k][0..k].
        let a = m.get(k, k).clone();
        let r: Vec<BigRational> = (0..k).map(|i| m.get(i, k).clone()).collect();
        let s: Vec<BigRational> = (0..k).map(|j| m.get(k, j).clone()).collect();
        // Toeplitz column: 1, -a, -S R, -S A R, -S A^2 R, ...
        let mut col = Vec::with_capacity(k + 2);
        col.push(BigRational::one());
        col.push(-a);
        let mut v = r;
        for _ in 0..k {
            let sv = s
                .iter()
                .zip(&v)
                .fold(BigRational::zero(), |acc, (x, y)| acc + x * y);
            col.push(-sv);
            v = (0..k)
                .map(|i| (0..k).fold(BigRational::zero(), |acc, j| acc + m.get(i, j) * &v[j]))
                .collect();
        }
        let mut next = vec![BigRational::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                if i >= j && i - j < col.len() {
                    *slot = &*slot + &col[i - j] * cj;
                }
            }
        }
        c = next;
    }
    c.reverse();
    Ok(QPoly::new(c))
}

fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect()
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Basis of the `lambda`-eigenspace of `M` as primitive integer vectors,
/// from fraction-free reduction of `M - lambda I`.
pub fn rational_eigenvectors(m: &ExactMatrix, lambda: &BigRational) -> Result<Vec<Vec<BigInt>>> {
    let n = m.require_square()?;
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row: Vec<BigRational> = (0..n)
                .map(|j| {
                    if i == j {
                        m.get(i, j) - lambda
                    } else {
                        m.get(i, j).clone()
                    }
                })
                .collect();
            integer_row(&row)
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..n {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let (piv, f) = (a[r][col].clone(), a[i][col].clone());
            let pivot_row = a[r].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                *x = &*x * &piv - &f * y;
            }
            make_primitive(&mut a[i]);
        }
        pivots.push(col);
        r += 1;
        if r == n {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let l = pivots
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (row, &pc)| acc.lcm(&a[row][pc]));
        let mut v = vec![BigInt::zero(); n];
        v[free] = l.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -(&a[row][free] * &l) / &a[row][pc];
        }
        make_primitive(&mut v);
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in v.iter_mut() {
                    *x = -&*x;
                }
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphlab::graph::{build_graph, GraphSpec};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Determinant by rational Gaussian elimination.
    fn det_oracle(m: &ExactMatrix) -> BigRational {
        let n = m.rows();
        let mut a: Vec<Vec<BigRational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
        let mut det = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det *= &a[k][k];
            for i in k + 1..n {
                let f = &a[i][k] / &a[k][k];
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
        }
        det
    }

    #[test]
    fn charpoly_matches_determinant_at_points() {
        let m = ExactMatrix::from_rows(vec![
            vec![rat(1, 2), rat(3, 1), rat(-1, 3)],
            vec![rat(0, 1), rat(2, 5), rat(7, 1)],
            vec![rat(4, 1), rat(-2, 1), rat(1, 1)],
        ])
        .unwrap();
        let p = charpoly_exact(&m).unwrap();
        assert!(p.is_monic());
        for x in -3..=3 {
            let xi = ExactMatrix::identity(3).scale(&rat(x, 1));
            assert_eq!(p.eval(&rat(x, 1)), det_oracle(&xi.sub(&m).unwrap()));
        }
    }

    #[test]
    fn y9_laplacian_charpoly() {
        let y = build_graph(&GraphSpec::Y9).unwrap();
        let l = graph_matrix(&y, &MatrixKind::Laplacian).unwrap();
        assert_eq!(l.row(0)[0], rat(1, 1));
        assert_eq!(l.row(0)[1], rat(-1, 1));
        let p = charpoly_exact(&l).unwrap();
        let expect: Vec<BigRational> = [0, 9, -110, 417, -730, 678, -354, 104, -16, 1]
            .iter()
            .map(|&v| rat(v, 1))
            .collect();
        assert_eq!(p.coeffs(), expect.as_slice());
    }

    #[test]
    fn grid_mds_entry() {
        let g = build_graph(&GraphSpec::Grid2x3).unwrap();
        let d2 = apsp_squared(&g).unwrap();
        let first: Vec<BigRational> = [0, 1, 1, 4, 4, 9].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(d2.row(0), first.as_slice());
        let c = graph_matrix(&g, &MatrixKind::MdsCentered).unwrap();
        assert_eq!(c.get(0, 0), &rat(-73, 18));
        assert!(c.is_symmetric());
        assert!(c.row_sums().iter().all(Zero::is_zero));
    }

    #[test]
    fn eigenvectors_of_h12_transition() {
        let h = build_graph(&GraphSpec::H12).unwrap();
        let t = graph_matrix(&h, &MatrixKind::Transition).unwrap();
        let ones = rational_eigenvectors(&t, &rat(1, 1)).unwrap();
        assert_eq!(ones, vec![vec![BigInt::one(); 12]]);
        let alt = rational_eigenvectors(&t, &rat(-1, 1)).unwrap();
        let expect: Vec<BigInt> = [1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 1]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(alt, vec![expect]);
        assert!(rational_eigenvectors(&t, &rat(2, 1)).unwrap().is_empty());
        assert_eq!(
            rational_eigenvectors(&ExactMatrix::identity(3), &rat(1, 1))
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn transition_rejects_isolated_vertex() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(graph_matrix(&g, &MatrixKind::Transition).is_err());
        assert!(graph_matrix(&g, &MatrixKind::MdsCentered).is_err());
        let rect = ExactMatrix::zeros(2, 3);
        assert!(matches!(
            charpoly_exact(&rect),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }
}
