//! Exact rank computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};

/// Rank of a dense matrix given as rows. All entries must belong to the same
/// field. Over the rationals the rows are cleared of denominators and reduced
/// fraction-free (Bareiss); over `Z/p` plain Gaussian elimination is used.
/// Pivots are the first nonzero entry in each column, scanning columns left
/// to right.
pub fn rank(rows: &[Vec<FieldScalar>]) -> Result<usize> {
    let Some(first) = rows.iter().flatten().next() else {
        return Ok(0);
    };
    let field = first.field();
    let ncols = rows[0].len();
    for row in rows {
        if row.len() != ncols {
            return Err(Error::Invariant(format!(
                "ragged matrix: rows of length {} and {}",
                ncols,
                row.len()
            )));
        }
        if let Some(bad) = row.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), bad.field().to_string()));
        }
    }
    Ok(match field {
        Field::Rationals => {
            let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
            bareiss_rank(ints, ncols)
        }
        Field::Prime(p) => {
            let residues: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| match x {
                            FieldScalar::Residue { value, .. } => *value,
                            FieldScalar::Rational(_) => unreachable!("field checked above"),
                        })
                        .collect()
                })
                .collect();
            mod_p_rank(residues, ncols, p)
        }
    })
}

fn clear_denominators(row: &[FieldScalar]) -> Vec<BigInt> {
    let common = row.iter().fold(BigInt::one(), |acc, x| {
        let (_, den) = x.as_fraction().expect("rational entries");
        acc.lcm(den)
    });
    row.iter()
        .map(|x| {
            let (num, den) = x.as_fraction().expect("rational entries");
            num * (&common / den)
        })
        .collect()
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    let nrows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn mod_p_rank(mut a: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let nrows = a.len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let inv = pow_mod(a[rank][col], p - 2, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = row[col] * inv % p;
            for j in col..ncols {
                row[j] = (row[j] + (p - factor) * pivot_row[j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
