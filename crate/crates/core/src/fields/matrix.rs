use super::{Field, FieldOps, Fq};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

pub type MatrixFq = Matrix<Fq>;

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        Self { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn into_data(self) -> Vec<E> {
        self.data
    }
}

impl Matrix<Fq> {
    pub fn identity(k: usize) -> Self {
        let mut m = Self::filled(k, k, Fq(0));
        for i in 0..k {
            m.set(i, i, Fq(1));
        }
        m
    }
}

/// Rank by forward Gaussian elimination over `field`.
pub fn rank<F: FieldOps>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !field.is_zero(&a[r * cols + col])) else {
            continue;
        };
        if pivot != rank {
            for c in col..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = field.inv(&a[rank * cols + col]).expect("pivot is nonzero");
        for r in rank + 1..rows {
            let factor = field.mul(&a[r * cols + col], &inv);
            if field.is_zero(&factor) {
                continue;
            }
            for c in col..cols {
                let t = field.mul(&factor, &a[rank * cols + c]);
                a[r * cols + c] = field.sub(&a[r * cols + c], &t);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a matrix over `F_q`.
pub fn rank_fq(field: &Field, m: &MatrixFq) -> usize {
    rank(field, m)
}
