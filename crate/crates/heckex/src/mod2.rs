//! Integer relation matrices for odd modified periods, their mod-2
//! reductions, the Pascal-Sierpinski matrix family, and the direct F2
//! verification of the basis-selection combinatorics.
//!
//! Index convention: rows and columns are 0-based, and column 0 of every
//! relation matrix is the dummy column (it pairs with a placeholder
//! functional and is identically zero).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::binomial_row;
use crate::poly::dim_cusp;

/// Dense matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }
}

/// Dense matrix over F2 with rows packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        Self { rows, cols, words_per_row, bits: vec![0; rows * words_per_row] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
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

    pub fn get(&self, i: usize, j: usize) -> bool {
        let word = self.bits[i * self.words_per_row + j / 64];
        word >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let word = &mut self.bits[i * self.words_per_row + j / 64];
        if value {
            *word |= 1 << (j % 64);
        } else {
            *word &= !(1 << (j % 64));
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        let (a, b) = (src * w, dst * w);
        for t in 0..w {
            let v = self.bits[a + t];
            self.bits[b + t] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for t in 0..w {
            self.bits.swap(a * w + t, b * w + t);
        }
    }

    /// Rank over F2 by row elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    m.xor_row_into(rank, r);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// New matrix keeping only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        BitMatrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }
}

/// Entrywise reduction modulo 2.
pub fn reduce_mod2(m: &IntMatrix) -> BitMatrix {
    BitMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).is_odd())
}

/// The `(w+1) x (w/2+1)` coefficient matrix of the odd-period relations:
/// column 0 is the dummy; otherwise `C(2j-1, i)` when `2j > i`, and
/// `C(w-2j+1, w-i)` when `2j <= i`.
pub fn build_a(w: u32) -> IntMatrix {
    let w = w as usize;
    let w2 = w / 2;
    let mut m = IntMatrix::zero(w + 1, w2 + 1);
    for j in 1..=w2 {
        let upper = binomial_row(2 * j as u64 - 1);
        let lower = binomial_row((w - 2 * j + 1) as u64);
        for i in 0..=w {
            let v = if 2 * j > i {
                upper.get(i).cloned().unwrap_or_else(BigInt::zero)
            } else {
                lower.get(w - i).cloned().unwrap_or_else(BigInt::zero)
            };
            m.entries[i * (w2 + 1) + j] = v;
        }
    }
    m
}

/// The `(w/2+1) x (w/2+1)` folded relation matrix: column 0 dummy; row 0 is
/// all ones past the dummy; otherwise `C(2j-1, 2i) + C(2j-1, 2i-1)` above
/// the diagonal and `C(w-2j+1, w-2i) + C(w-2j+1, w-2i+1)` on or below it.
pub fn build_b(w: u32) -> IntMatrix {
    let w = w as usize;
    let w2 = w / 2;
    let mut m = IntMatrix::zero(w2 + 1, w2 + 1);
    for j in 1..=w2 {
        let upper = binomial_row(2 * j as u64 - 1);
        let lower = binomial_row((w - 2 * j + 1) as u64);
        for i in 0..=w2 {
            let v = if i == 0 {
                BigInt::one()
            } else if j > i {
                upper.get(2 * i).cloned().unwrap_or_else(BigInt::zero)
                    + upper.get(2 * i - 1).cloned().unwrap_or_else(BigInt::zero)
            } else {
                lower.get(w - 2 * i).cloned().unwrap_or_else(BigInt::zero)
                    + lower.get(w - 2 * i + 1).cloned().unwrap_or_else(BigInt::zero)
            };
            m.entries[i * (w2 + 1) + j] = v;
        }
    }
    m
}

/// The `(floor(w/4)+1) x (w/2+1)` matrix encoding the two endpoint
/// relations; the last row depends on `w mod 4`.
pub fn build_c(w: u32) -> IntMatrix {
    let w = w as usize;
    let w2 = w / 2;
    let w4 = w / 4;
    IntMatrix::from_fn(w4 + 1, w2 + 1, |i, j| {
        if i < w4 {
            if j == 0 {
                BigInt::zero()
            } else if j == i + 1 {
                BigInt::one()
            } else if j == w2 - i {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        } else if w % 4 == 0 {
            if j <= w4 {
                BigInt::zero()
            } else {
                BigInt::one()
            }
        } else if j <= w4 {
            BigInt::zero()
        } else if j == w4 + 1 {
            BigInt::one()
        } else {
            BigInt::from(2)
        }
    })
}

/// The stack of [`build_b`] over [`build_c`].
pub fn build_d(w: u32) -> IntMatrix {
    let b = build_b(w);
    let c = build_c(w);
    debug_assert_eq!(b.cols(), c.cols());
    IntMatrix::from_fn(b.rows() + c.rows(), b.cols(), |i, j| {
        if i < b.rows() {
            b.get(i, j).clone()
        } else {
            c.get(i - b.rows(), j).clone()
        }
    })
}

/// The Pascal-Sierpinski matrix of size `2^n x 2^n`, by the block
/// recursion `P_0 = [1]`, `P_n = [[P_(n-1), P_(n-1)], [0, P_(n-1)]]`.
/// Entrywise, `P_n[i][j] = C(j, i) mod 2`.
pub fn pascal_p(n: u32) -> BitMatrix {
    let size = 1usize << n;
    let mut m = BitMatrix::zero(size, size);
    m.set(0, 0, true);
    let mut half = 1;
    while half < size {
        // copy the top-left block right and down the diagonal
        for i in 0..half {
            for j in 0..half {
                if m.get(i, j) {
                    m.set(i, j + half, true);
                    m.set(i + half, j + half, true);
                }
            }
        }
        half *= 2;
    }
    m
}

/// `Q_n = P_n + I` over F2: the Pascal-Sierpinski matrix with the diagonal
/// removed, strictly upper triangular.
pub fn pascal_q(n: u32) -> BitMatrix {
    let mut m = pascal_p(n);
    for i in 0..m.rows() {
        let v = m.get(i, i);
        m.set(i, i, !v);
    }
    m
}

/// Leading `k x k` block.
pub fn principal_submatrix(m: &BitMatrix, k: usize) -> Result<BitMatrix> {
    if k > m.rows() || k > m.cols() {
        return Err(Error::SubmatrixTooLarge { size: m.rows().min(m.cols()), requested: k });
    }
    Ok(BitMatrix::from_fn(k, k, |i, j| m.get(i, j)))
}

/// The selected column indices (1-based, dummy column 0 excluded) for
/// `w = 12k + 2a` with `k >= 1`, `0 <= a <= 5`. The six cases share the
/// shape: a solid prefix, then every other column, then possibly one
/// trailing column.
pub fn selected_columns(w: u32) -> Result<Vec<usize>> {
    if w % 2 != 0 || w < 12 {
        return Err(Error::WeightBelowSelectionRange { w });
    }
    let k = (w / 12) as usize;
    let a = ((w % 12) / 2) as usize;
    let mut cols: Vec<usize> = Vec::new();
    let solid_end = if a <= 2 { 4 * k } else { 4 * k + 2 };
    cols.extend(1..=solid_end);
    let stride_start = solid_end + 1;
    let stride_end = match a {
        0 => stride_start + 2 * (k - 1),
        1 | 2 => stride_start + 2 * k,
        3 | 4 => stride_start + 2 * k,
        5 => stride_start + 2 * (k + 1),
        _ => unreachable!(),
    };
    cols.extend((stride_start..=stride_end).step_by(2));
    match a {
        0 => cols.push(6 * k),
        2 => cols.push(6 * k + 2),
        4 => cols.push(6 * k + 4),
        _ => {}
    }
    debug_assert!(cols.windows(2).all(|p| p[0] < p[1]));
    debug_assert!(*cols.last().unwrap() <= (w / 2) as usize);
    Ok(cols)
}

/// Outcome of the basis-selection verification for one weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectionReport {
    /// The selected columns are linearly independent over F2.
    pub independent: bool,
    /// `w/2 - #selected` equals the cusp-form dimension.
    pub cardinality_ok: bool,
    /// The reduced folded matrix equals the leading block of the
    /// Pascal-Sierpinski matrix with the diagonal removed.
    pub pascal_ok: bool,
    /// Row `i` of the folded matrix is the sum of rows `2i-1` and `2i` of
    /// the unfolded one (row 0 matches row 0).
    pub rowsum_ok: bool,
}

impl SelectionReport {
    pub fn all_ok(&self) -> bool {
        self.independent && self.cardinality_ok && self.pascal_ok && self.rowsum_ok
    }
}

/// Runs the four structural checks for one even `w >= 12`.
pub fn verify_basis_selection(w: u32) -> Result<SelectionReport> {
    let cols = selected_columns(w)?;
    let w2 = (w / 2) as usize;

    let stacked = reduce_mod2(&build_d(w));
    let selected = stacked.select_columns(&cols);
    let independent = selected.rank() == cols.len();

    let cardinality_ok = w2 - cols.len() == dim_cusp(w)?;

    let folded = reduce_mod2(&build_b(w));
    let n = usize::BITS - w2.max(1).leading_zeros(); // least n with 2^n >= w2+1
    debug_assert!(1usize << n > w2 && (1usize << n) / 2 < w2 + 1);
    let pascal_ok = principal_submatrix(&pascal_q(n), w2 + 1)? == folded;

    let a = build_a(w);
    let b = build_b(w);
    let rowsum_ok = (0..=w2).all(|i| {
        if i == 0 {
            b.row(0) == a.row(0)
        } else {
            b.row(i)
                .iter()
                .zip(a.row(2 * i - 1).iter().zip(a.row(2 * i)))
                .all(|(bv, (x, y))| bv == &(x + y))
        }
    });

    Ok(SelectionReport { independent, cardinality_ok, pascal_ok, rowsum_ok })
}
