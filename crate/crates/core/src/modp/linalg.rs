//! Dense matrices over 𝔽_p, just enough to solve the residue map.

#[derive(Clone, Debug)]
pub(crate) struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "not invertible");
    s0.rem_euclid(p as i128) as u64
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// In-place reduced row echelon form; returns pivot columns by row.
    /// Only the first `limit` columns are eligible as pivots.
    fn rref(&mut self, limit: usize) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit {
            if row == self.rows {
                break;
            }
            let Some(src) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(row, src);
            let inv = inv_mod(self.get(row, col), p);
            for c in 0..self.cols {
                let v = mul_mod(self.get(row, c), inv, p);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                let factor = self.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let v = (self.get(r, c) + p - mul_mod(factor, self.get(row, c), p)) % p;
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Affine description of the solution sets of `M·x = r` for a fixed `M`.
#[derive(Clone, Debug)]
pub(crate) struct Solver {
    p: u64,
    cols: usize,
    reduced: FpMatrix,
    pivots: Vec<usize>,
}

impl Solver {
    /// Row-reduce `[M | I]`, remembering the row operations.
    pub fn new(m: &FpMatrix) -> Self {
        let mut aug = FpMatrix::zeros(m.p, m.rows, m.cols + m.rows);
        for r in 0..m.rows {
            for c in 0..m.cols {
                aug.set(r, c, m.get(r, c));
            }
            aug.set(r, m.cols + r, 1);
        }
        let pivots = aug.rref(m.cols);
        Solver {
            p: m.p,
            cols: m.cols,
            reduced: aug,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One solution of `M·x = r` with free variables set to zero.
    pub fn particular(&self, r: &[u64]) -> Option<Vec<u64>> {
        let p = self.p;
        let rows = self.reduced.rows;
        // transformed right-hand side T·r
        let tr: Vec<u64> = (0..rows)
            .map(|i| {
                (0..rows).fold(0, |acc, j| (acc + mul_mod(self.reduced.get(i, self.cols + j), r[j], p)) % p)
            })
            .collect();
        if tr[self.rank()..].iter().any(|&v| v != 0) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (i, &pc) in self.pivots.iter().enumerate() {
            x[pc] = tr[i];
        }
        Some(x)
    }

    /// Basis of the null space of `M`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let free = (0..self.cols).filter(|c| !self.pivots.contains(c));
        free.map(|fc| {
            let mut v = vec![0; self.cols];
            v[fc] = 1;
            for (i, &pc) in self.pivots.iter().enumerate() {
                v[pc] = (p - self.reduced.get(i, fc)) % p;
            }
            v
        })
        .collect()
    }
}
