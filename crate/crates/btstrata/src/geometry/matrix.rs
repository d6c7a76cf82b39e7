//! Dense matrices over the table-based finite fields, with the exact
//! linear algebra the subspace enumeration needs: reduced row echelon
//! forms, kernels, and row-space intersections.
//!
//! The reduced row echelon form with zero rows stripped is the unique
//! canonical representative of a row space, and doubles as the
//! deduplication key for subspace enumeration.

use super::field::{Fe, FiniteField};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Fe>>, cols: usize) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend_from_slice(r);
        }
        Mat { rows: rows.len(), cols, data }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    /// Vertical stacking; column counts must agree.
    pub fn stack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "stack with mismatched widths");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn map_entries(&self, f: impl Fn(Fe) -> Fe) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn mul(&self, other: &Mat, f: &FiniteField) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, other.at(k, j));
                    out.set(i, j, f.add(out.at(i, j), t));
                }
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows stripped: the canonical
    /// basis matrix of the row space.
    pub fn rref(&self, f: &FiniteField) -> Mat {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(src) = (pivot_row..m.rows).find(|&r| m.at(r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for j in 0..m.cols {
                    let tmp = m.at(src, j);
                    m.set(src, j, m.at(pivot_row, j));
                    m.set(pivot_row, j, tmp);
                }
            }
            let inv = f.inv(m.at(pivot_row, col));
            for j in 0..m.cols {
                m.set(pivot_row, j, f.mul(inv, m.at(pivot_row, j)));
            }
            for r in 0..m.rows {
                if r != pivot_row && m.at(r, col) != 0 {
                    let factor = m.at(r, col);
                    for j in 0..m.cols {
                        let t = f.mul(factor, m.at(pivot_row, j));
                        m.set(r, j, f.sub(m.at(r, j), t));
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        m.data.truncate(pivot_row * m.cols);
        m.rows = pivot_row;
        m
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        self.rref(f).rows
    }

    /// Basis of the right kernel `{x : self * x = 0}`, one solution per row.
    pub fn kernel(&self, f: &FiniteField) -> Mat {
        let r = self.rref(f);
        let mut pivot_col_of_row = Vec::with_capacity(r.rows);
        let mut is_pivot = vec![false; self.cols];
        for i in 0..r.rows {
            let col = (0..r.cols).find(|&j| r.at(i, j) != 0).expect("nonzero rref row");
            pivot_col_of_row.push(col);
            is_pivot[col] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut out = Mat::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (i, &pc) in pivot_col_of_row.iter().enumerate() {
                out.set(k, pc, f.neg(r.at(i, fc)));
            }
        }
        out
    }

    /// Canonical basis of the intersection of the row spaces of `self` and
    /// `other`.
    pub fn row_space_intersection(&self, other: &Mat, f: &FiniteField) -> Mat {
        assert_eq!(self.cols, other.cols, "intersection in different ambient spaces");
        // solve u^T self = v^T other: kernel of [self^T | -other^T]
        let ra = self.rows;
        let rb = other.rows;
        let mut m = Mat::zero(self.cols, ra + rb);
        for i in 0..self.cols {
            for j in 0..ra {
                m.set(i, j, self.at(j, i));
            }
            for j in 0..rb {
                m.set(i, ra + j, f.neg(other.at(j, i)));
            }
        }
        let ker = m.kernel(f);
        let mut vectors = Mat::zero(ker.rows, self.cols);
        for k in 0..ker.rows {
            for j in 0..ra {
                let c = ker.at(k, j);
                if c == 0 {
                    continue;
                }
                for col in 0..self.cols {
                    let t = f.mul(c, self.at(j, col));
                    vectors.set(k, col, f.add(vectors.at(k, col), t));
                }
            }
        }
        vectors.rref(f)
    }
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FiniteField {
        FiniteField::new(3, 1).unwrap()
    }

    #[test]
    fn rref_canonicalizes() {
        let f = f3();
        let a = Mat::from_rows(vec![vec![2, 1, 0], vec![1, 2, 0]], 3);
        let b = Mat::from_rows(vec![vec![1, 2, 0], vec![0, 1, 0]], 3);
        // same row space, same canonical form
        assert_eq!(a.rref(&f), b.rref(&f));
        assert_eq!(a.rank(&f), 2);
    }

    #[test]
    fn kernel_solves() {
        let f = f3();
        let m = Mat::from_rows(vec![vec![1, 2, 1], vec![0, 1, 1]], 3);
        let k = m.kernel(&f);
        assert_eq!(k.rows(), 1);
        for i in 0..k.rows() {
            let x = Mat::from_rows(vec![k.row(i).to_vec()], 3).transpose();
            assert!(m.mul(&x, &f).is_zero());
        }
        // full kernel of an empty matrix is everything
        let empty = Mat::zero(0, 4);
        assert_eq!(empty.kernel(&f), Mat::identity(4));
    }

    #[test]
    fn intersection_of_planes_in_f3_cubed() {
        let f = f3();
        let a = Mat::from_rows(vec![vec![1, 0, 0], vec![0, 1, 0]], 3);
        let b = Mat::from_rows(vec![vec![0, 1, 0], vec![0, 0, 1]], 3);
        let meet = a.row_space_intersection(&b, &f);
        assert_eq!(meet, Mat::from_rows(vec![vec![0, 1, 0]], 3));

        // intersection with itself is itself
        assert_eq!(a.row_space_intersection(&a, &f), a);
        // transverse lines meet trivially
        let l1 = Mat::from_rows(vec![vec![1, 0, 0]], 3);
        let l2 = Mat::from_rows(vec![vec![0, 1, 0]], 3);
        assert_eq!(l1.row_space_intersection(&l2, &f).rows(), 0);
    }

    #[test]
    fn intersection_dimension_formula() {
        // dim(A meet B) = dim A + dim B - dim(A + B), exhaustively over
        // pairs of subspaces spanned by pairs of vectors in F_2^4
        let f = FiniteField::new(2, 1).unwrap();
        let vectors: Vec<Vec<Fe>> = (0..16u32)
            .map(|n| (0..4).map(|b| ((n >> b) & 1) as Fe).collect())
            .collect();
        for v1 in &vectors {
            for v2 in &vectors {
                let a = Mat::from_rows(vec![v1.clone(), v2.clone()], 4).rref(&f);
                for w1 in &vectors {
                    let b = Mat::from_rows(vec![w1.clone()], 4).rref(&f);
                    let meet = a.row_space_intersection(&b, &f);
                    let join = a.stack(&b).rank(&f);
                    assert_eq!(meet.rows() + join, a.rows() + b.rows());
                }
            }
        }
    }
}
