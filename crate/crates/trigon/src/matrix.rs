//! Minimal 3x3 matrices over a cyclotomic field.

use crate::cyclotomic::{CycField, CycNum};
use std::sync::Arc;

/// Row-major 3x3 matrix of exact cyclotomic scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3 {
    entries: Vec<CycNum>,
}

impl Mat3 {
    pub fn from_rows(rows: [[CycNum; 3]; 3]) -> Mat3 {
        let entries = rows.into_iter().flatten().collect();
        Mat3 { entries }
    }

    pub fn identity(field: &Arc<CycField>) -> Mat3 {
        let mut entries = vec![CycNum::zero(field); 9];
        for i in 0..3 {
            entries[i * 3 + i] = CycNum::one(field);
        }
        Mat3 { entries }
    }

    pub fn at(&self, row: usize, col: usize) -> &CycNum {
        &self.entries[row * 3 + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: CycNum) {
        self.entries[row * 3 + col] = value;
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        let field = self.entries[0].field();
        let mut entries = Vec::with_capacity(9);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = CycNum::zero(field);
                for k in 0..3 {
                    acc = &acc + &(self.at(i, k) * rhs.at(k, j));
                }
                entries.push(acc);
            }
        }
        Mat3 { entries }
    }

    pub fn transpose(&self) -> Mat3 {
        let mut entries = Vec::with_capacity(9);
        for j in 0..3 {
            for i in 0..3 {
                entries.push(self.at(i, j).clone());
            }
        }
        Mat3 { entries }
    }

    pub fn determinant(&self) -> CycNum {
        let m = |i: usize, j: usize| self.at(i, j);
        let minor = |a: usize, b: usize, c: usize, d: usize| &(m(a, b) * m(c, d)) - &(m(a, d) * m(c, b));
        let t0 = m(0, 0) * &minor(1, 1, 2, 2);
        let t1 = m(0, 1) * &minor(1, 0, 2, 2);
        let t2 = m(0, 2) * &minor(1, 0, 2, 1);
        &(&t0 - &t1) + &t2
    }

    /// Adjugate (transpose of the cofactor matrix). For determinant-one
    /// matrices this is the inverse.
    pub fn adjugate(&self) -> Mat3 {
        let m = |i: usize, j: usize| self.at(i, j);
        let cof = |r: usize, c: usize| {
            let rows: [usize; 2] = match r {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            };
            let cols: [usize; 2] = match c {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            };
            let det = &(m(rows[0], cols[0]) * m(rows[1], cols[1]))
                - &(m(rows[0], cols[1]) * m(rows[1], cols[0]));
            if (r + c) % 2 == 0 {
                det
            } else {
                -&det
            }
        };
        let mut out = Mat3 {
            entries: vec![CycNum::zero(self.entries[0].field()); 9],
        };
        for i in 0..3 {
            for j in 0..3 {
                // adjugate transposes the cofactors
                out.set(i, j, cof(j, i));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Mat3 {
        let field = self.entries[0].field();
        let mut out = Mat3::identity(field);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        for i in 0..3 {
            for j in 0..3 {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Key injective on matrices over one field.
    pub fn key(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.canonical_key());
            out.push(';');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{CycField, CycNum};

    #[test]
    fn adjugate_inverts_det_one_matrices() {
        let f = CycField::new(12);
        let z = |k: i64| CycNum::zeta_power(&f, k);
        let c = |v: i64| CycNum::from_integer(&f, v);
        // unimodular-ish example: upper triangular with unit diagonal
        let m = Mat3::from_rows([
            [c(1), z(1), c(3)],
            [c(0), c(1), z(5)],
            [c(0), c(0), c(1)],
        ]);
        assert!(m.determinant().is_one());
        assert!(m.mul(&m.adjugate()).is_identity());
    }

    #[test]
    fn transpose_involution() {
        let f = CycField::new(8);
        let z = |k: i64| CycNum::zeta_power(&f, k);
        let m = Mat3::from_rows([
            [z(0), z(1), z(2)],
            [z(3), z(4), z(5)],
            [z(6), z(7), z(1)],
        ]);
        assert_eq!(m.transpose().transpose(), m);
    }
}
