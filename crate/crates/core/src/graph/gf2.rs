use crate::bitset::{words_for, WORD};
use crate::error::{Error, Result};

/// Rows of equal-width bit vectors over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    width: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    /// An empty matrix whose rows will have `width` bits.
    pub fn new(width: usize) -> Self {
        Self {
            width,
            stride: words_for(width),
            data: Vec::new(),
        }
    }

    /// Rows given as integers, bit `j` being column `j`. Needs `width <= 64`.
    pub fn from_u64_rows(width: usize, rows: &[u64]) -> Self {
        assert!(width <= WORD);
        let mut m = Self::new(width);
        for &r in rows {
            let masked = if width == WORD {
                r
            } else {
                r & ((1u64 << width) - 1)
            };
            m.data.push(masked);
        }
        if width == 0 {
            m.data.clear();
            m.stride = 0;
        }
        m
    }

    /// Rows written as strings of `0`/`1`, leftmost character is column 0.
    pub fn from_bit_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::new(width);
        for r in rows {
            let r = r.as_ref();
            if r.len() != width {
                return Err(Error::input("GF(2) rows must all have the same width"));
            }
            let mut row = vec![0u64; m.stride];
            for (j, c) in r.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => row[j / WORD] |= 1 << (j % WORD),
                    _ => return Err(Error::input(format!("bad GF(2) digit {c:?}"))),
                }
            }
            m.data.extend(row);
        }
        Ok(m)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> usize {
        if self.stride == 0 {
            0
        } else {
            self.data.len() / self.stride
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The submatrix made of the given rows, in the given order.
    pub fn select(&self, rows: &[usize]) -> Gf2Matrix {
        let mut m = Self::new(self.width);
        for &r in rows {
            m.data.extend_from_slice(self.row(r));
        }
        m
    }

    /// Rank over GF(2) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let rows = self.rows();
        let mut work: Vec<Vec<u64>> = (0..rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.width {
            let (w, bit) = (col / WORD, 1u64 << (col % WORD));
            let Some(pivot) = (rank..rows).find(|&r| work[r][w] & bit != 0) else {
                continue;
            };
            work.swap(rank, pivot);
            let pivot_row = work[rank].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != rank && row[w] & bit != 0 {
                    for (a, b) in row.iter_mut().zip(&pivot_row) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let m = Gf2Matrix::from_bit_strings(&["100", "010", "001"]).unwrap();
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn dependent_rows() {
        // Third row is the XOR of the first two.
        let m = Gf2Matrix::from_bit_strings(&["101", "011", "110"]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(Gf2Matrix::new(5).rank(), 0);
        assert_eq!(Gf2Matrix::from_bit_strings::<&str>(&[]).unwrap().rank(), 0);
    }

    #[test]
    fn wide_rows() {
        let mut a = "0".repeat(130);
        a.replace_range(129..130, "1");
        let mut b = "0".repeat(130);
        b.replace_range(0..1, "1");
        let m = Gf2Matrix::from_bit_strings(&[a.clone(), b, a]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Gf2Matrix::from_bit_strings(&["10", "1"]).is_err());
    }
}
