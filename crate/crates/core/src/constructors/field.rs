//! Polynomials and matrices over the prime field F_q.

use std::fmt;

/// A polynomial over F_q, coefficients lowest degree first, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldPoly {
    q: u64,
    coeffs: Vec<u64>,
}

fn inv_mod(a: u64, q: u64) -> u64 {
    // q prime: a^(q-2)
    let mut acc = 1;
    let mut base = a % q;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc
}

impl FieldPoly {
    pub fn new(q: u64, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % q).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FieldPoly { q, coeffs }
    }

    /// `1 + x + … + x^(n-1)`.
    pub fn all_ones(q: u64, n: usize) -> Self {
        FieldPoly::new(q, std::iter::repeat_n(1, n))
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &FieldPoly) -> FieldPoly {
        if self.is_zero() || other.is_zero() {
            return FieldPoly::new(self.q, []);
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.q;
            }
        }
        FieldPoly::new(self.q, out)
    }

    /// Remainder of division by a nonzero polynomial.
    pub fn rem(&self, divisor: &FieldPoly) -> FieldPoly {
        let q = self.q;
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = inv_mod(divisor.coeffs[d], q);
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let factor = r[top] * lead_inv % q;
            if factor != 0 {
                for (k, &c) in divisor.coeffs.iter().enumerate() {
                    let idx = top - d + k;
                    r[idx] = (r[idx] + q - factor * c % q) % q;
                }
            }
            r.pop();
        }
        FieldPoly::new(q, r)
    }

    pub fn divides(&self, other: &FieldPoly) -> bool {
        other.rem(self).is_zero()
    }

    /// Irreducibility by trial division with every monic polynomial of
    /// degree 1..=deg/2.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else { return false };
        if deg == 0 {
            return false;
        }
        (1..=deg / 2).all(|d| monic_polys(self.q, d).all(|f| !f.divides(self)))
    }

    /// Companion matrix acting on row vectors: multiplication by x on the
    /// basis 1, x, …, x^(β-1) of F_q[x]/(f).
    pub fn companion_matrix(&self) -> FqMatrix {
        assert!(self.is_monic(), "companion matrix needs a monic polynomial");
        let q = self.q;
        let beta = self.degree().unwrap();
        let mut m = FqMatrix::zero(q, beta);
        for i in 0..beta.saturating_sub(1) {
            m.set(i, i + 1, 1);
        }
        for j in 0..beta {
            m.set(beta - 1, j, (q - self.coeffs[j]) % q);
        }
        m
    }
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}x"),
                (k, 1) => format!("x^{k}"),
                (k, c) => format!("{c}x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// All monic polynomials of degree `d` over F_q, ordered lexicographically
/// on the coefficient list `(c_0, c_1, …, c_{d-1})`.
pub fn monic_polys(q: u64, d: usize) -> impl Iterator<Item = FieldPoly> {
    let count = q.pow(d as u32);
    (0..count).map(move |mut k| {
        let mut c = vec![0; d + 1];
        // c_0 is the most significant digit.
        for i in (0..d).rev() {
            c[i] = k % q;
            k /= q;
        }
        c[d] = 1;
        FieldPoly::new(q, c)
    })
}

/// Square matrix over F_q, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FqMatrix {
    q: u64,
    dim: usize,
    entries: Vec<u64>,
}

impl FqMatrix {
    pub fn zero(q: u64, dim: usize) -> Self {
        FqMatrix { q, dim, entries: vec![0; dim * dim] }
    }

    pub fn identity(q: u64, dim: usize) -> Self {
        let mut m = FqMatrix::zero(q, dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(q: u64, rows: &[Vec<u64>]) -> Self {
        let dim = rows.len();
        let mut m = FqMatrix::zero(q, dim);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), dim);
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % q);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.dim.max(1)).map(<[u64]>::to_vec).take(self.dim).collect()
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        let n = self.dim;
        let mut out = FqMatrix::zero(self.q, n);
        for i in 0..n {
            for j in 0..n {
                let s = (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum::<u64>() % self.q;
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn pow(&self, k: u64) -> FqMatrix {
        (0..k).fold(FqMatrix::identity(self.q, self.dim), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == FqMatrix::identity(self.q, self.dim)
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.dim)
            .map(|j| v.iter().enumerate().map(|(i, &x)| x * self.get(i, j)).sum::<u64>() % self.q)
            .collect()
    }

    /// Dimension of the span of `{v, vM, vM², …}`.
    pub fn cyclic_span_dim(&self, v: &[u64]) -> usize {
        let mut vecs = Vec::with_capacity(self.dim);
        let mut w = v.to_vec();
        for _ in 0..self.dim {
            vecs.push(w.clone());
            w = self.apply(&w);
        }
        rank(self.q, vecs)
    }

    /// True when no proper nonzero subspace is invariant, checked through
    /// the cyclic subspace of every nonzero vector.
    pub fn acts_irreducibly(&self) -> bool {
        all_vectors(self.q, self.dim)
            .filter(|v| v.iter().any(|&x| x != 0))
            .all(|v| self.cyclic_span_dim(&v) == self.dim)
    }
}

/// Rank over F_q by Gaussian elimination.
pub fn rank(q: u64, mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pivot);
        let inv = inv_mod(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot_row = rows[r].clone();
                for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = (*x + q - f * y % q) % q;
                }
            }
        }
        r += 1;
    }
    r
}

/// Every vector of (F_q)^dim, digit 0 least significant.
pub fn all_vectors(q: u64, dim: usize) -> impl Iterator<Item = Vec<u64>> {
    (0..q.pow(dim as u32)).map(move |k| decode_vector(q, dim, k))
}

pub fn decode_vector(q: u64, dim: usize, mut k: u64) -> Vec<u64> {
    (0..dim)
        .map(|_| {
            let d = k % q;
            k /= q;
            d
        })
        .collect()
}

pub fn encode_vector(q: u64, v: &[u64]) -> u64 {
    v.iter().rev().fold(0, |acc, &d| acc * q + d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arithmetic() {
        let f = FieldPoly::new(2, [1, 1]); // 1 + x
        let g = f.mul(&f); // 1 + x^2 over F2
        assert_eq!(g.coeffs(), &[1, 0, 1]);
        assert!(f.divides(&g));
        assert!(g.rem(&f).is_zero());
        assert_eq!(FieldPoly::new(3, [4, 0, 3]).coeffs(), &[1]);
        assert_eq!(FieldPoly::new(5, [1, 0, 2]).to_string(), "1 + 2x^2");
    }

    #[test]
    fn irreducibility_by_trial_division() {
        assert!(FieldPoly::new(2, [1, 1, 1]).is_irreducible());
        assert!(!FieldPoly::new(2, [1, 0, 1]).is_irreducible());
        assert!(FieldPoly::all_ones(2, 5).is_irreducible());
        // 1 + x + x^2 splits over F7 (roots 2 and 4).
        assert!(!FieldPoly::all_ones(7, 3).is_irreducible());
        // only quadratic irreducible over F2
        let irr: Vec<_> = monic_polys(2, 2).filter(FieldPoly::is_irreducible).collect();
        assert_eq!(irr, vec![FieldPoly::new(2, [1, 1, 1])]);
    }

    #[test]
    fn lexicographic_enumeration() {
        let v: Vec<Vec<u64>> = monic_polys(3, 2).map(|f| f.coeffs().to_vec()).take(4).collect();
        assert_eq!(v, vec![vec![0, 0, 1], vec![0, 1, 1], vec![0, 2, 1], vec![1, 0, 1]]);
    }

    #[test]
    fn companion_and_rank() {
        let m = FieldPoly::new(2, [1, 1, 1]).companion_matrix();
        assert_eq!(m.rows(), vec![vec![0, 1], vec![1, 1]]);
        assert!(m.pow(3).is_identity());
        assert!(!m.is_identity());
        assert!(m.acts_irreducibly());
        assert!(!FqMatrix::identity(2, 2).acts_irreducibly());
        assert_eq!(rank(3, vec![vec![1, 2], vec![2, 1]]), 1);
        assert_eq!(encode_vector(3, &decode_vector(3, 4, 50)), 50);
    }
}
