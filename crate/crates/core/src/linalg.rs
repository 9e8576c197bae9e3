//! Small dense linear algebra over exact rationals.

use num_rational::Rational64;

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![q(0); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Q) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Matrix {
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum()).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])])
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m[(i, c)] != q(0)) else { continue };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, p * m.cols + j);
            }
            let lead = m[(r, c)];
            for j in 0..m.cols {
                m[(r, j)] /= lead;
            }
            for i in 0..m.rows {
                if i != r && m[(i, c)] != q(0) {
                    let f = m[(i, c)];
                    for j in 0..m.cols {
                        let t = m[(r, j)];
                        m[(i, j)] -= f * t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![q(0); self.cols];
                v[f] = q(1);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)]))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;

    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

/// A 3×3 rational matrix.
pub type Mat3 = [[Q; 3]; 3];

pub fn mat3_zero() -> Mat3 {
    [[q(0); 3]; 3]
}

/// Elementary matrix `E_ij` (0-based indices).
pub fn unit(i: usize, j: usize) -> Mat3 {
    let mut m = mat3_zero();
    m[i][j] = q(1);
    m
}

pub fn mat3_add(x: &Mat3, y: &Mat3) -> Mat3 {
    let mut m = mat3_zero();
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = x[i][j] + y[i][j];
        }
    }
    m
}

pub fn mat3_scale(x: &Mat3, k: Q) -> Mat3 {
    let mut m = *x;
    m.iter_mut().flatten().for_each(|e| *e *= k);
    m
}

pub fn mat3_mul(x: &Mat3, y: &Mat3) -> Mat3 {
    let mut m = mat3_zero();
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = (0..3).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    m
}

pub fn bracket(x: &Mat3, y: &Mat3) -> Mat3 {
    mat3_add(&mat3_mul(x, y), &mat3_scale(&mat3_mul(y, x), q(-1)))
}

pub fn trace(x: &Mat3) -> Q {
    x[0][0] + x[1][1] + x[2][2]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        Matrix::from_fn(rows.len(), rows[0].len(), |i, j| q(rows[i][j]))
    }

    #[test]
    fn rank_and_kernel() {
        let m = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|x| *x == q(0)));
        assert_eq!(Matrix::zeros(3, 4).kernel().len(), 4);
        assert_eq!(int_matrix(&[&[0, 1], &[-1, 0]]).rank(), 2);
    }

    #[test]
    fn bracket_of_units() {
        // [E12, E21] = E11 − E22
        let b = bracket(&unit(0, 1), &unit(1, 0));
        assert_eq!(b, mat3_add(&unit(0, 0), &mat3_scale(&unit(1, 1), q(-1))));
        assert_eq!(trace(&b), q(0));
    }
}
