//! Exact-rational pattern matrices and kernel-support verification.
//!
//! A pattern matrix of a digraph has a nonzero off-diagonal entry (i, j)
//! exactly when the arc ij is present; the diagonal is unrestricted. For a
//! vertex set `s`, a kernel vector supported outside `s` is a dependence
//! among the columns indexed by the complement of `s`, so the support
//! condition is decided by an exact rank computation. No floating point and
//! no tolerance anywhere.

use num::rational::BigRational;
use num::{BigInt, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A square exact-rational matrix constrained to a digraph's pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatrix {
    n: usize,
    entries: Vec<BigRational>,
    pattern: Digraph,
}

impl PatternMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn pattern(&self) -> &Digraph {
        &self.pattern
    }

    /// Build from row-major entries, validating the off-diagonal pattern.
    pub fn from_entries(d: &Digraph, entries: Vec<BigRational>) -> Result<Self> {
        let n = d.n();
        if entries.len() != n * n {
            return Err(Error::InvalidParams(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        let m = PatternMatrix {
            n,
            entries,
            pattern: d.clone(),
        };
        if !m.matches_pattern(d) {
            return Err(Error::PatternMismatch);
        }
        Ok(m)
    }

    /// Off-diagonal entries nonzero exactly on the arcs of `d`.
    pub fn matches_pattern(&self, d: &Digraph) -> bool {
        self.n == d.n()
            && (0..self.n).all(|i| {
                (0..self.n)
                    .all(|j| i == j || (!self.entry(i, j).is_zero() == d.has_arc(i, j)))
            })
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Draw a matrix from the pattern class of `d`, deterministically for a
/// fixed seed. Arc entries come from small nonzero rationals, the diagonal
/// from {0, 1, -1}.
pub fn sample_pattern_matrix(d: &Digraph, seed: u64) -> Result<PatternMatrix> {
    if d.has_loops() {
        return Err(Error::LoopsNotSupported);
    }
    let nonzero = [
        ratio(1, 1),
        ratio(-1, 1),
        ratio(2, 1),
        ratio(-2, 1),
        ratio(3, 1),
        ratio(-3, 1),
        ratio(1, 2),
        ratio(-1, 2),
    ];
    let diagonal = [ratio(0, 1), ratio(1, 1), ratio(-1, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = d.n();
    let mut entries = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                entries[i * n + j] = diagonal.choose(&mut rng).unwrap().clone();
            } else if d.has_arc(i, j) {
                entries[i * n + j] = nonzero.choose(&mut rng).unwrap().clone();
            }
        }
    }
    Ok(PatternMatrix {
        n,
        entries,
        pattern: d.clone(),
    })
}

// Exact rank of the n x k column submatrix by fraction-preserving Gaussian
// elimination with partial pivoting on magnitude (keeps numbers modest, not
// needed for correctness).
fn column_rank(m: &PatternMatrix, cols: &[usize]) -> usize {
    let n = m.n;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| cols.iter().map(|&j| m.entry(i, j).clone()).collect())
        .collect();
    let k = cols.len();
    let mut rank = 0;
    for col in 0..k {
        let pivot = (rank..n)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r1, &r2| a[r1][col].abs().cmp(&a[r2][col].abs()));
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].clone();
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let factor = &row[col] / &inv;
                for (c, cell) in row.iter_mut().enumerate().skip(col) {
                    *cell -= &factor * &pivot_row[c];
                }
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// True iff the only kernel vector of `m` supported outside `s` is zero,
/// decided by testing the columns indexed by the complement of `s` for
/// linear independence.
pub fn verify_kernel_support(d: &Digraph, s: &VertexSet, m: &PatternMatrix) -> Result<bool> {
    if !m.matches_pattern(d) {
        return Err(Error::PatternMismatch);
    }
    let cols: Vec<usize> = s.complement().iter().collect();
    Ok(column_rank(m, &cols) == cols.len())
}
