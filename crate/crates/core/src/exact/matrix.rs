use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{checked_lcm, checked_mul, checked_sub, Integer, Rational};
use crate::{Error, Result};

/// Dense integer matrix stored row-major. A `0 x 0` matrix is allowed and
/// stands for the empty surgery link.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix<T = i64> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Integer> IntMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix given {} entries",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .try_fold(T::zero(), |acc, (x, y)| {
                        acc.checked_add(&checked_mul(x, y)?).ok_or(Error::Overflow)
                    })
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = checked_sub(
                        &checked_mul(&a[i][j], &a[k][k])?,
                        &checked_mul(&a[i][k], &a[k][j])?,
                    )?;
                    a[i][j] = num / prev.clone();
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 {
            T::one()
        } else {
            checked_mul(&sign, &a[n - 1][n - 1])?
        })
    }
}

impl<T: Integer> fmt::Display for IntMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: Integer + Serialize> Serialize for IntMatrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de, T: Integer + Deserialize<'de>> Deserialize<'de> for IntMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<T>>::deserialize(deserializer)?;
        Self::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Minimal order `o` and an integer vector `a` with `Q a = o l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSolution<T = i64> {
    pub order: T,
    pub coefficients: Vec<T>,
}

/// Finds the least `o > 0` with `o l` in the integer column span of `q`,
/// together with a witness `a`, `q a = o l`.
///
/// Invertible `q` goes through an exact rational solve where `o` is the lcm
/// of the denominators of `q^{-1} l`; singular `q` goes through an integer
/// diagonalization `U q V = D`.
pub fn solve_order_system<T: Integer>(q: &IntMatrix<T>, l: &[T]) -> Result<OrderSolution<T>> {
    if !q.is_square() || q.rows() != l.len() {
        return Err(Error::DimensionMismatch(format!(
            "order system needs square Q matching l, got {}x{} and {}",
            q.rows(),
            q.cols(),
            l.len()
        )));
    }
    let solution = if q.determinant()?.is_zero() {
        solve_by_diagonalization(q, l)?
    } else {
        solve_invertible(q, l)?
    };
    debug_assert_eq!(
        q.mul_vec(&solution.coefficients).ok(),
        l.iter()
            .map(|x| x.checked_mul(&solution.order))
            .collect::<Option<Vec<_>>>()
    );
    Ok(solution)
}

fn solve_invertible<T: Integer>(q: &IntMatrix<T>, l: &[T]) -> Result<OrderSolution<T>> {
    let n = q.rows();
    // augmented system [Q | l] over the rationals
    let mut a: Vec<Vec<Rational<T>>> = (0..n)
        .map(|i| {
            q.row(i)
                .iter()
                .chain(std::iter::once(&l[i]))
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .expect("invertible matrix has a pivot in every column");
        a.swap(k, pivot);
        let inv = Rational::one().checked_div(&a[k][k])?;
        for j in k..=n {
            a[k][j] = a[k][j].checked_mul(&inv)?;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in k..=n {
                let delta = factor.checked_mul(&a[k][j])?;
                a[i][j] = a[i][j].checked_sub(&delta)?;
            }
        }
    }
    let x: Vec<Rational<T>> = a.into_iter().map(|row| row[n].clone()).collect();
    let order = x
        .iter()
        .try_fold(T::one(), |acc, xi| checked_lcm(&acc, xi.denom()))?;
    let coefficients = x
        .iter()
        .map(|xi| {
            let a = xi.checked_mul_int(&order)?;
            Ok(a.to_integer().expect("o clears every denominator"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrderSolution {
        order,
        coefficients,
    })
}

/// Diagonalizes `q` by unimodular row and column operations, tracking the
/// row operations on `l` and the column operations in `v`.
fn solve_by_diagonalization<T: Integer>(q: &IntMatrix<T>, l: &[T]) -> Result<OrderSolution<T>> {
    let n = q.rows();
    let mut a = q.to_rows();
    let mut c = l.to_vec();
    let mut v = IntMatrix::<T>::identity(n).to_rows();
    let mut rank = 0;

    for t in 0..n {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = (t..n)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, m)| a[i][j].abs().cmp(&a[k][m].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        c.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..n {
                if a[i][t].is_zero() {
                    continue;
                }
                let f = a[i][t].div_floor(&a[t][t]);
                for j in t..n {
                    let d = checked_mul(&f, &a[t][j])?;
                    a[i][j] = checked_sub(&a[i][j], &d)?;
                }
                let d = checked_mul(&f, &c[t])?;
                c[i] = checked_sub(&c[i], &d)?;
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let f = a[t][j].div_floor(&a[t][t]);
                for i in t..n {
                    let d = checked_mul(&f, &a[i][t])?;
                    a[i][j] = checked_sub(&a[i][j], &d)?;
                }
                for row in v.iter_mut() {
                    let d = checked_mul(&f, &row[t])?;
                    row[j] = checked_sub(&row[j], &d)?;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            // a remainder is smaller than the pivot: move it into place
            let (pi, pj) = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| (i == t || j == t) && !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, m)| a[i][j].abs().cmp(&a[k][m].abs()))
                .expect("pivot row or column is nonzero");
            a.swap(t, pi);
            c.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
        }
        rank = t + 1;
    }

    if c[rank..].iter().any(|x| !x.is_zero()) {
        return Err(Error::NotRationallyNullhomologous);
    }
    let mut order = T::one();
    for t in 0..rank {
        let d = a[t][t].abs();
        let g = d.gcd(&c[t]);
        order = checked_lcm(&order, &(d / g))?;
    }
    let mut y = vec![T::zero(); n];
    for t in 0..rank {
        y[t] = checked_mul(&order, &c[t])? / a[t][t].clone();
    }
    let coefficients = IntMatrix::from_rows(v)?.mul_vec(&y)?;
    Ok(OrderSolution {
        order,
        coefficients,
    })
}

#[cfg(test)]
pub(crate) fn solve_singular_path<T: Integer>(
    q: &IntMatrix<T>,
    l: &[T],
) -> Result<OrderSolution<T>> {
    solve_by_diagonalization(q, l)
}
