//! Symmetric matrices over GF(2), one `u64` per row.
//!
//! Bit `j` of row `i` is the entry `m[i][j]`. The rank routine works on a
//! stack copy of the rows so the enumeration loops never allocate.

use std::fmt;

use crate::error::Gf2Error;

pub const MAX_DIM: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2SymMatrix {
    dim: usize,
    rows: Vec<u64>,
}

fn row_mask(dim: usize) -> u64 {
    if dim == 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

impl Gf2SymMatrix {
    pub fn zero(dim: usize) -> Result<Self, Gf2Error> {
        if dim > MAX_DIM {
            return Err(Gf2Error::TooLarge(dim));
        }
        Ok(Gf2SymMatrix {
            dim,
            rows: vec![0; dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self, Gf2Error> {
        let mut m = Self::zero(dim)?;
        for i in 0..dim {
            m.rows[i] = 1 << i;
        }
        Ok(m)
    }

    /// Checks symmetry and that no bit past `dim` is set.
    pub fn from_rows(dim: usize, rows: Vec<u64>) -> Result<Self, Gf2Error> {
        if dim > MAX_DIM {
            return Err(Gf2Error::TooLarge(dim));
        }
        if rows.len() != dim {
            return Err(Gf2Error::RowCount {
                rows: rows.len(),
                dim,
            });
        }
        let mask = row_mask(dim);
        if let Some(i) = rows.iter().position(|r| r & !mask != 0) {
            return Err(Gf2Error::OutOfRange(i));
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                    return Err(Gf2Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(Gf2SymMatrix { dim, rows })
    }

    /// Parses the text grid produced by [`Gf2SymMatrix::render`].
    pub fn parse(text: &str) -> Result<Self, Gf2Error> {
        let rows: Vec<u64> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .enumerate()
                    .filter(|(_, t)| *t == "1")
                    .fold(0u64, |acc, (j, _)| acc | (1 << j))
            })
            .collect();
        Self::from_rows(rows.len(), rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    /// Sets `m[i][j]` and `m[j][i]`.
    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        assert!(i < self.dim && j < self.dim, "index out of range");
        if bit {
            self.rows[i] |= 1 << j;
            self.rows[j] |= 1 << i;
        } else {
            self.rows[i] &= !(1 << j);
            self.rows[j] &= !(1 << i);
        }
    }

    pub fn rank(&self) -> usize {
        let mut buf = [0u64; MAX_DIM];
        buf[..self.dim].copy_from_slice(&self.rows);
        rank_in_place(&mut buf[..self.dim])
    }

    pub fn transpose(&self) -> Gf2SymMatrix {
        let mut rows = vec![0u64; self.dim];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..self.dim {
                if self.get(j, i) {
                    *row |= 1 << j;
                }
            }
        }
        Gf2SymMatrix {
            dim: self.dim,
            rows,
        }
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Gf2SymMatrix {
        assert_eq!(perm.len(), self.dim);
        let mut rows = vec![0u64; self.dim];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, &pj) in perm.iter().enumerate() {
                if self.get(perm[i], pj) {
                    *row |= 1 << j;
                }
            }
        }
        Gf2SymMatrix {
            dim: self.dim,
            rows,
        }
    }

    /// Row-major 0/1 grid, entries separated by single spaces.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            let line: Vec<&str> = (0..self.dim)
                .map(|j| if self.get(i, j) { "1" } else { "0" })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Gf2SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2SymMatrix({})\n{}", self.dim, self.render())
    }
}

/// GF(2) rank by forward elimination. Clobbers `rows`.
///
/// Each nonzero row becomes a pivot on its lowest set bit, which is then
/// cleared from every later row.
#[inline]
pub fn rank_in_place(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= pivot;
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    /// Schoolbook column-by-column elimination on a byte matrix.
    fn naive_rank(m: &Gf2SymMatrix) -> usize {
        let n = m.dim();
        let mut a: Vec<Vec<u8>> = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j) as u8).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| a[r][col] == 1) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..n {
                if r != rank && a[r][col] == 1 {
                    for c in 0..n {
                        a[r][c] ^= a[rank][c];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn random_sym(rng: &mut impl Rng, dim: usize, zero_diag: bool) -> Gf2SymMatrix {
        let mut m = Gf2SymMatrix::zero(dim).unwrap();
        for i in 0..dim {
            for j in i..dim {
                if i == j && zero_diag {
                    continue;
                }
                m.set(i, j, rng.gen());
            }
        }
        m
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(Gf2SymMatrix::zero(5).unwrap().rank(), 0);
        assert_eq!(Gf2SymMatrix::identity(4).unwrap().rank(), 4);
        assert_eq!(Gf2SymMatrix::zero(0).unwrap().rank(), 0);
    }

    #[test]
    fn triangle_pattern_has_rank_two() {
        let m = Gf2SymMatrix::from_rows(3, vec![0b110, 0b101, 0b011]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(naive_rank(&m), 2);
    }

    #[test]
    fn full_width_rows() {
        let m = Gf2SymMatrix::identity(64).unwrap();
        assert_eq!(m.rank(), 64);
        assert!(Gf2SymMatrix::zero(65).is_err());
    }

    #[test]
    fn rejects_malformed_rows() {
        assert_eq!(
            Gf2SymMatrix::from_rows(2, vec![0b10, 0b00]),
            Err(Gf2Error::NotSymmetric(0, 1))
        );
        assert_eq!(
            Gf2SymMatrix::from_rows(2, vec![0b100, 0]),
            Err(Gf2Error::OutOfRange(0))
        );
        assert!(Gf2SymMatrix::from_rows(2, vec![0]).is_err());
    }

    #[test]
    fn render_golden() {
        let m = Gf2SymMatrix::from_rows(3, vec![0b110, 0b101, 0b011]).unwrap();
        assert_eq!(m.render(), "0 1 1\n1 0 1\n1 1 0\n");
        assert_eq!(Gf2SymMatrix::parse(&m.render()).unwrap(), m);
    }

    #[test]
    fn rank_leaves_matrix_untouched() {
        let m = Gf2SymMatrix::from_rows(3, vec![0b110, 0b101, 0b011]).unwrap();
        let before = m.clone();
        let _ = m.rank();
        assert_eq!(m, before);
    }

    #[test]
    fn agrees_with_naive_elimination() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6f2);
        for dim in 1..=12 {
            for _ in 0..10_000 {
                let m = random_sym(&mut rng, dim, false);
                assert_eq!(m.rank(), naive_rank(&m), "{m:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn zero_diagonal_rank_is_even(dim in 1usize..20, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = random_sym(&mut rng, dim, true);
            prop_assert_eq!(m.rank() % 2, 0);
        }

        #[test]
        fn rank_invariant_under_transpose_and_permutation(
            dim in 1usize..16,
            seed in any::<u64>(),
        ) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = random_sym(&mut rng, dim, false);
            let mut perm: Vec<usize> = (0..dim).collect();
            for i in (1..dim).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            prop_assert_eq!(m.transpose(), m.clone());
            prop_assert_eq!(m.permuted(&perm).rank(), m.rank());
        }
    }
}
