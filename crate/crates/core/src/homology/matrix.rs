use super::field::PrimeField;

/// Dense matrix over GF(p), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x;
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix, k: PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, k.add(cur, k.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    fn rref(&mut self, k: PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = k.inv(self.get(row, col));
            for c in col..self.cols {
                let x = self.get(row, c);
                self.set(row, c, k.mul(x, inv));
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let x = self.get(r, c);
                    let y = self.get(row, c);
                    self.set(r, c, k.sub(x, k.mul(factor, y)));
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, k: PrimeField) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().rref(k).len()
    }

    /// A basis of `{ x : self * x = 0 }`.
    pub fn nullspace(&self, k: PrimeField) -> Vec<Vec<u32>> {
        let mut r = self.clone();
        let pivots = r.rref(k);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = k.neg(r.get(row, f));
                }
                v
            })
            .collect()
    }
}
