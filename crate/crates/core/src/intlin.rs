//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers. The Smith
//! normal form is the workhorse: kernels, lattice quotients and
//! unimodular completions are all read off from one decomposition.
//! Determinants are computed independently (fraction-free elimination) so
//! that the two can be cross-checked against each other.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Bezout certificate in the convention `x·psi − y·phi = g`, `g = gcd(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BezoutCert {
    pub x: Int,
    pub y: Int,
    pub g: Int,
    pub psi: Int,
    pub phi: Int,
}

impl BezoutCert {
    pub fn is_valid(&self) -> bool {
        if self.g.is_negative() || self.g != self.x.gcd(&self.y) {
            return false;
        }
        if &self.x * &self.psi - &self.y * &self.phi != self.g {
            return false;
        }
        self.g.is_zero() || self.psi.gcd(&self.phi).is_one()
    }

    /// The certificate `(psi + y·t, phi + x·t)`, which satisfies the same relation.
    pub fn shifted(&self, t: i64) -> BezoutCert {
        let t = int(t);
        BezoutCert {
            x: self.x.clone(),
            y: self.y.clone(),
            g: self.g.clone(),
            psi: &self.psi + &self.y * &t,
            phi: &self.phi + &self.x * &t,
        }
    }
}

/// Extended gcd with a canonical choice: minimal `|psi|`, ties toward
/// nonnegative `psi`. When `y = 0` the `psi` is forced and `phi = 0`.
pub fn ext_gcd(x: &Int, y: &Int) -> Result<BezoutCert> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    // classic Euclid on (x, y) tracking s with x·s ≡ r (mod y)
    let (mut r0, mut r1) = (x.clone(), y.clone());
    let (mut s0, mut s1) = (Int::one(), Int::zero());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.is_negative() {
        r0 = -r0;
        s0 = -s0;
    }
    let g = r0;
    let (psi, phi) = if y.is_zero() {
        (&g / x, Int::zero())
    } else {
        let step = (y / &g).abs();
        let mut psi = s0.mod_floor(&step);
        let twice: Int = &psi * 2;
        if twice > step {
            psi -= &step;
        }
        let phi = (x * &psi - &g) / y;
        (psi, phi)
    };
    Ok(BezoutCert {
        x: x.clone(),
        y: y.clone(),
        g,
        psi,
        phi,
    })
}

pub fn ext_gcd_i64(x: i64, y: i64) -> Result<BezoutCert> {
    ext_gcd(&int(x), &int(y))
}

/// Dense row-major integer matrix with positive dimensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i * n + i] = Int::one();
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::EmptyMatrix);
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("rows of unequal length".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Int>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::EmptyMatrix);
        }
        if cols.iter().any(|v| v.len() != r) {
            return Err(Error::Dimension("columns of unequal length".into()));
        }
        let mut m = Self::zeros(r, c)?;
        for (j, v) in cols.iter().enumerate() {
            for (i, e) in v.iter().enumerate() {
                m.data[i * c + j] = e.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data: vec![Int::zero(); self.data.len()],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Result<Vec<Int>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k · col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Int;

    fn index(&self, (i, j): (usize, usize)) -> &Int {
        self.get(i, j)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(Int::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// `left · original · right = diag(diag)`, with `left_inv = left⁻¹`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub diag: Vec<Int>,
    pub right: IntMatrix,
    pub original: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.original.rows, self.original.cols)
            .expect("original has positive dimensions");
        for (i, v) in self.diag.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    /// Checks every decomposition invariant; used by tests and debug builds.
    pub fn verify(&self) -> bool {
        let prod = self
            .left
            .mul(&self.original)
            .and_then(|m| m.mul(&self.right));
        let Ok(prod) = prod else { return false };
        if prod != self.diagonal_matrix() {
            return false;
        }
        if self.diag.iter().any(Signed::is_negative) {
            return false;
        }
        for w in self.diag.windows(2) {
            if w[0].is_zero() {
                if !w[1].is_zero() {
                    return false;
                }
            } else if !w[1].is_multiple_of(&w[0]) {
                return false;
            }
        }
        let unit = |m: &IntMatrix| det(m).map(|d| d.abs().is_one()).unwrap_or(false);
        let inv_ok = self
            .left
            .mul(&self.left_inv)
            .map(|m| m == IntMatrix::identity(m.rows).unwrap())
            .unwrap_or(false);
        unit(&self.left) && unit(&self.right) && inv_ok
    }
}

/// Smith normal form by unimodular row and column operations, pivoting on
/// the entry of smallest nonzero absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r).expect("positive dims");
    let mut u_inv = u.clone();
    let mut v = IntMatrix::identity(c).expect("positive dims");
    let mut diag = Vec::with_capacity(r.min(c));

    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let e = a.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| e.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            // row swap: u ← P u, u_inv ← u_inv P
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(&pivot);
                let neg_q = -&q;
                row_op(&mut a, &mut u, &mut u_inv, i, t, &neg_q);
                dirty |= !a.get(i, t).is_zero();
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(&pivot);
                let neg_q = -&q;
                a.add_col_multiple(j, t, &neg_q);
                v.add_col_multiple(j, t, &neg_q);
                dirty |= !a.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let offender = (t + 1..r).find(|&i| {
                (t + 1..c).any(|j| !a.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => row_op(&mut a, &mut u, &mut u_inv, t, i, &Int::one()),
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        diag.push(a.get(t, t).clone());
    }

    SmithDecomposition {
        left: u,
        left_inv: u_inv,
        diag,
        right: v,
        original: m.clone(),
    }
}

/// row[dst] += k·row[src] applied to `a` and `u`, with the inverse
/// column operation on `u_inv`.
fn row_op(a: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, dst: usize, src: usize, k: &Int) {
    a.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
    let neg = -k;
    u_inv.add_col_multiple(src, dst, &neg);
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<Int> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(Int::zero()),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&pivot * a.get(i, j) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = pivot;
    }
    Ok(sign * a.get(n - 1, n - 1))
}

/// A lattice basis of the integer kernel `{v : m·v = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.cols).map(|j| snf.right.column(j)).collect()
}

/// Order of `L / S` where `L` is spanned by `ambient_basis` and `S` by
/// `sublattice_gens`; `0` encodes an infinite quotient.
pub fn quotient_order(ambient_basis: &[Vec<Int>], sublattice_gens: &[Vec<Int>]) -> Result<Int> {
    if ambient_basis.is_empty() {
        return if sublattice_gens.iter().flatten().all(Zero::is_zero) {
            Ok(Int::one())
        } else {
            Err(Error::NotSublattice)
        };
    }
    let coords = lattice_coordinates(ambient_basis, sublattice_gens)?;
    if coords.is_empty() {
        return Ok(Int::zero());
    }
    let k = ambient_basis.len();
    let c = IntMatrix::from_columns(&coords)?;
    let snf = smith_normal_form(&c);
    if snf.rank() < k {
        return Ok(Int::zero());
    }
    Ok(snf.diag.iter().product())
}

/// Integer coordinates of each vector in `vectors` with respect to the
/// independent family `basis`.
pub fn lattice_coordinates(basis: &[Vec<Int>], vectors: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    let b = IntMatrix::from_columns(basis)?;
    let k = basis.len();
    let snf = smith_normal_form(&b);
    if snf.rank() < k {
        return Err(Error::DependentBasis);
    }
    vectors
        .iter()
        .map(|g| {
            let ug = snf.left.mul_vec(g).map_err(|_| Error::NotSublattice)?;
            if ug[k..].iter().any(|e| !e.is_zero()) {
                return Err(Error::NotSublattice);
            }
            let mut z = Vec::with_capacity(k);
            for (e, d) in ug[..k].iter().zip(&snf.diag) {
                if !e.is_multiple_of(d) {
                    return Err(Error::NotSublattice);
                }
                z.push(e / d);
            }
            snf.right.mul_vec(&z)
        })
        .collect()
}

/// Extends a primitive family to a basis of `Z^n`; the input vectors come
/// first, in order.
pub fn complete_to_unimodular(partial: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    let p = IntMatrix::from_columns(partial)?;
    let (n, k) = (p.rows, p.cols);
    if k > n {
        return Err(Error::NoUnimodularCompletion);
    }
    let snf = smith_normal_form(&p);
    if snf.diag.iter().any(|d| !d.is_one()) {
        return Err(Error::NoUnimodularCompletion);
    }
    let mut out = partial.to_vec();
    out.extend((k..n).map(|j| snf.left_inv.column(j)));
    Ok(out)
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn lcm(a: &Int, b: &Int) -> Int {
    a.lcm(b)
}
