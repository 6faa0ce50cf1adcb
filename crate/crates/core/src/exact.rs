//! Exact integer and rational dense matrices.
//!
//! Everything here works with arbitrary-precision integers. Vectors are rows
//! and matrices act on the right, so `x * M` is the image of `x`.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Dense matrix of big integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share the given column count.
    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        IntMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        Self::from_big_rows(
            cols,
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row vectors as `i64`, panicking on overflow. Only meant for small data.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.to_i64().expect("entry exceeds i64"))
                    .collect()
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scaled(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "stack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product; row (i1, i2) maps to i1 * rows2 + i2.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = &self[(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out[(i1 * other.rows + i2, j1 * other.cols + j2)] = a * &other[(i2, j2)];
                    }
                }
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        IntMatrix::from_big_rows(self.cols, idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    /// Drops all-zero rows.
    pub fn nonzero_rows(&self) -> IntMatrix {
        let keep: Vec<usize> = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|v| !v.is_zero()))
            .collect();
        self.select_rows(&keep)
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_int(self.clone())
    }

    /// Row vector times matrix.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = &self[(i, j)];
                if !m.is_zero() {
                    *o += xi * m;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            if !v.is_zero() {
                self.data[dst * self.cols + j] -= v;
            }
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            if !v.is_zero() {
                self.data[i * self.cols + dst] -= v;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in self.row_mut(i) {
            *v = -std::mem::take(v);
        }
    }

    /// Parses the whitespace text format: a `rows cols` header followed by
    /// row-major integers. A trailing `/ d` line is rejected here; use
    /// [`RatMatrix::parse`] for matrices with a denominator.
    pub fn parse(text: &str) -> Result<IntMatrix, ExactError> {
        let m = RatMatrix::parse(text)?;
        m.to_int().ok_or(ExactError::Parse {
            line: 0,
            msg: "expected an integer matrix".into(),
        })
    }

    pub fn to_text(&self) -> String {
        RatMatrix::from_int(self.clone()).to_text()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rational matrix stored as an integer numerator matrix over one positive
/// denominator. The pair is kept reduced: `gcd(den, all numerators) == 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    num: IntMatrix,
    den: BigInt,
}

impl RatMatrix {
    pub fn new(num: IntMatrix, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut m = RatMatrix { num, den };
        m.normalize();
        m
    }

    pub fn from_int(num: IntMatrix) -> Self {
        RatMatrix {
            num,
            den: BigInt::one(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_int(IntMatrix::identity(n))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_int(IntMatrix::zeros(rows, cols))
    }

    pub fn from_rat_rows(cols: usize, rows: &[Vec<BigRational>]) -> Self {
        let mut den = BigInt::one();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for v in r {
                den = den.lcm(v.denom());
            }
        }
        let data = rows
            .iter()
            .map(|r| r.iter().map(|v| v.numer() * (&den / v.denom())).collect())
            .collect();
        Self::new(IntMatrix::from_big_rows(cols, data), den)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for v in self.num.data.iter_mut() {
                *v = -std::mem::take(v);
            }
        }
        let mut g = self.den.clone();
        for v in &self.num.data {
            if g.is_one() {
                return;
            }
            g = g.gcd(v);
        }
        if !g.is_one() {
            self.den /= &g;
            for v in self.num.data.iter_mut() {
                *v /= &g;
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.num.rows
    }

    pub fn cols(&self) -> usize {
        self.num.cols
    }

    pub fn numerator(&self) -> &IntMatrix {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(self.num[(i, j)].clone(), self.den.clone())
    }

    pub fn row(&self, i: usize) -> Vec<BigRational> {
        (0..self.cols()).map(|j| self.get(i, j)).collect()
    }

    pub fn rat_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows()).map(|i| self.row(i)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        self.is_integral().then(|| self.num.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.rows() == self.cols() && self.den.is_one() && self.num == IntMatrix::identity(self.rows())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows() == self.cols() && self.num == self.num.transpose()
    }

    pub fn transpose(&self) -> Self {
        RatMatrix {
            num: self.num.transpose(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        RatMatrix::new(self.num.mul(&other.num), &self.den * &other.den)
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows(), self.cols()), (other.rows(), other.cols()));
        let den = self.den.lcm(&other.den);
        let a = &den / &self.den;
        let b = &den / &other.den;
        let data = self
            .num
            .data
            .iter()
            .zip(&other.num.data)
            .map(|(x, y)| x * &a + y * &b)
            .collect();
        RatMatrix::new(
            IntMatrix {
                rows: self.rows(),
                cols: self.cols(),
                data,
            },
            den,
        )
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix {
            num: self.num.scaled(&BigInt::from(-1)),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        RatMatrix::new(self.num.scaled(c.numer()), &self.den * c.denom())
    }

    pub fn pow(&self, k: u32) -> RatMatrix {
        assert_eq!(self.rows(), self.cols());
        let mut acc = RatMatrix::identity(self.rows());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Row vector times matrix.
    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.rows());
        (0..self.cols())
            .map(|j| {
                let mut acc = BigRational::zero();
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() && !self.num[(i, j)].is_zero() {
                        acc += xi * BigRational::from_integer(self.num[(i, j)].clone());
                    }
                }
                acc / BigRational::from_integer(self.den.clone())
            })
            .collect()
    }

    /// Integer row vector times matrix, returned as (numerators, denominator)
    /// without reduction.
    pub fn apply_int(&self, x: &[BigInt]) -> (Vec<BigInt>, BigInt) {
        (self.num.apply(x), self.den.clone())
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rat_rows();
        row_reduce(&mut rows, self.cols()).len()
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.rows();
        if n != self.cols() {
            return None;
        }
        let mut aug: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i);
                r.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = row_reduce(&mut aug, 2 * n);
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let inv: Vec<Vec<BigRational>> = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(RatMatrix::from_rat_rows(n, &inv))
    }

    /// Parses the text format shared with the CLI and fixtures.
    ///
    /// ```text
    /// 2 2
    /// 2 -1
    /// -1 2
    /// / 3
    /// ```
    pub fn parse(text: &str) -> Result<RatMatrix, ExactError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(ExactError::Parse {
            line: 1,
            msg: "missing 'rows cols' header".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(ExactError::Parse {
                line: hline,
                msg: format!("expected 'rows cols', found '{header}'"),
            });
        }
        let parse_dim = |s: &str| {
            s.parse::<usize>().map_err(|_| ExactError::Parse {
                line: hline,
                msg: format!("bad dimension '{s}'"),
            })
        };
        let (rows, cols) = (parse_dim(dims[0])?, parse_dim(dims[1])?);
        let mut data = Vec::with_capacity(rows * cols);
        let mut den = BigInt::one();
        let mut last_line = hline;
        for (ln, l) in lines {
            last_line = ln;
            if let Some(rest) = l.strip_prefix('/') {
                if data.len() != rows * cols {
                    return Err(ExactError::Parse {
                        line: ln,
                        msg: format!("denominator before all {} entries were read", rows * cols),
                    });
                }
                den = rest.trim().parse().map_err(|_| ExactError::Parse {
                    line: ln,
                    msg: format!("bad denominator '{}'", rest.trim()),
                })?;
                if !den.is_positive() {
                    return Err(ExactError::Parse {
                        line: ln,
                        msg: "denominator must be positive".into(),
                    });
                }
                continue;
            }
            for tok in l.split_whitespace() {
                if data.len() == rows * cols {
                    return Err(ExactError::Parse {
                        line: ln,
                        msg: "more entries than rows*cols".into(),
                    });
                }
                let v: BigInt = tok.parse().map_err(|_| ExactError::Parse {
                    line: ln,
                    msg: format!("bad integer '{tok}'"),
                })?;
                data.push(v);
            }
        }
        if data.len() != rows * cols {
            return Err(ExactError::Parse {
                line: last_line,
                msg: format!("expected {} entries, found {}", rows * cols, data.len()),
            });
        }
        Ok(RatMatrix::new(IntMatrix { rows, cols, data }, den))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows(), self.cols());
        for i in 0..self.rows() {
            let row: Vec<String> = self.num.row(i).iter().map(|v| v.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        if !self.den.is_one() {
            s.push_str(&format!("/ {}\n", self.den));
        }
        s
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix(1/{}) {:?}", self.den, self.num)
    }
}

/// Gauss-Jordan reduction in place. Returns pivot columns; the matrix is
/// truncated to its nonzero rows, which end up in reduced echelon form.
pub(crate) fn row_reduce(rows: &mut Vec<Vec<BigRational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Row Hermite normal form with transform: returns `(H, U)` with `H = U * M`,
/// `U` unimodular, positive pivots, entries above each pivot in `[0, pivot)`,
/// and zero rows last.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    hnf_in_place(&mut h, Some(&mut u));
    (h, u)
}

/// Nonzero rows of the Hermite normal form: the canonical basis of the row
/// lattice.
pub fn hnf_basis(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    let r = hnf_in_place(&mut h, None);
    h.select_rows(&(0..r).collect::<Vec<_>>())
}

fn hnf_in_place(h: &mut IntMatrix, mut u: Option<&mut IntMatrix>) -> usize {
    let (rows, cols) = (h.rows, h.cols);
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c at or below pr
            let mut best: Option<usize> = None;
            for i in pr..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| h[(i, c)].abs() < h[(b, c)].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(pr, b);
            if let Some(u) = u.as_deref_mut() {
                u.swap_rows(pr, b);
            }
            let mut clean = true;
            for i in pr + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(pr, c)]);
                h.sub_row_multiple(i, pr, &q);
                if let Some(u) = u.as_deref_mut() {
                    u.sub_row_multiple(i, pr, &q);
                }
                if !h[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if pr < rows && !h[(pr, c)].is_zero() {
            if h[(pr, c)].is_negative() {
                h.negate_row(pr);
                if let Some(u) = u.as_deref_mut() {
                    u.negate_row(pr);
                }
            }
            for i in 0..pr {
                let q = h[(i, c)].div_floor(&h[(pr, c)]);
                h.sub_row_multiple(i, pr, &q);
                if let Some(u) = u.as_deref_mut() {
                    u.sub_row_multiple(i, pr, &q);
                }
            }
            pr += 1;
        }
    }
    pr
}

/// Smith invariant sequence `d1 | d2 | ... | dk`, `k = min(rows, cols)`, with
/// zeros (if any) at the tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmithSequence {
    entries: Vec<BigInt>,
}

impl SmithSequence {
    pub fn new(entries: Vec<BigInt>) -> Self {
        SmithSequence { entries }
    }

    pub fn from_u64(entries: &[u64]) -> Self {
        SmithSequence {
            entries: entries.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    /// Parses exponent notation such as `1^8 3^8` or `2^16`, or runs of
    /// digits such as `1111 1111 3333 3333` (each digit one entry).
    pub fn parse(s: &str) -> Option<Self> {
        let mut entries = Vec::new();
        for tok in s.split_whitespace() {
            if let Some((base, exp)) = tok.split_once('^') {
                let b: u64 = base.parse().ok()?;
                let e: usize = exp.parse().ok()?;
                entries.extend(std::iter::repeat_n(BigInt::from(b), e));
            } else if tok.chars().all(|c| c.is_ascii_digit()) {
                entries.extend(tok.chars().map(|c| BigInt::from(c.to_digit(10).unwrap())));
            } else {
                return None;
            }
        }
        Some(SmithSequence { entries })
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.entries.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn nonzero_product(&self) -> BigInt {
        self.entries
            .iter()
            .filter(|d| !d.is_zero())
            .fold(BigInt::one(), |acc, d| acc * d)
    }

    /// Entries greater than one: the invariant factors of the finite part.
    pub fn nontrivial(&self) -> Vec<BigInt> {
        self.entries.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn is_chain(&self) -> bool {
        self.entries.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        })
    }

    /// Merges two chains into the Smith chain of their direct sum.
    pub fn merge(&self, other: &SmithSequence) -> SmithSequence {
        let n = self.len() + other.len();
        let mut diag = self.entries.clone();
        diag.extend(other.entries.iter().cloned());
        snf(&IntMatrix::diagonal(&diag)).0.truncated(n)
    }

    fn truncated(mut self, n: usize) -> Self {
        self.entries.truncate(n);
        self
    }
}

impl fmt::Display for SmithSequence {
    /// Exponent notation, e.g. `1^8 3^8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "()");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.entries.len() {
            let mut j = i;
            while j < self.entries.len() && self.entries[j] == self.entries[i] {
                j += 1;
            }
            parts.push(format!("{}^{}", self.entries[i], j - i));
            i = j;
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Smith normal form: returns `(S, U, V)` with `U * M * V` diagonal holding
/// the entries of `S`, and `U`, `V` unimodular.
pub fn snf(m: &IntMatrix) -> (SmithSequence, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let k = rows.min(cols);
    for t in 0..k {
        // global minimum of the remaining block as the first pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.sub_row_multiple(i, t, &q);
                u.sub_row_multiple(i, t, &q);
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.sub_col_multiple(j, t, &q);
                v.sub_col_multiple(j, t, &q);
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // bring the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                } else if best.1 != t {
                    a.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // divisibility of the remaining block by the pivot
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[(i, j)] % &a[(t, t)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    // row t += row i
                    let m1 = BigInt::from(-1);
                    a.sub_row_multiple(t, i, &m1);
                    u.sub_row_multiple(t, i, &m1);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    let entries = (0..k).map(|i| a[(i, i)].clone()).collect();
    (SmithSequence { entries }, u, v)
}

/// Basis of the integer left kernel `{x in Z^rows : x * M = 0}`. The rows
/// come out in Hermite normal form, so the result is saturated and canonical.
pub fn kernel(m: &RatMatrix) -> IntMatrix {
    let (h, u) = hnf(m.numerator());
    let zero_rows: Vec<usize> = (0..h.rows)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .collect();
    let k = u.select_rows(&zero_rows);
    if k.rows() == 0 {
        return IntMatrix::zeros(0, m.rows());
    }
    hnf_basis(&k)
}

/// Solves `x * A = b`. Returns `None` when the system is inconsistent; when
/// `A` has dependent rows the free coordinates are set to zero.
pub fn solve(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let (n, m) = (a.rows(), a.cols());
    if b.len() != m {
        return None;
    }
    // transpose system: A^T x^T = b^T, augmented [A^T | b]
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|j| {
            let mut r: Vec<BigRational> = (0..n).map(|i| a.get(i, j)).collect();
            r.push(b[j].clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &RatMatrix) -> Result<BigRational, ExactError> {
    let n = m.rows();
    if n != m.cols() {
        return Err(ExactError::NotSquare {
            rows: n,
            cols: m.cols(),
        });
    }
    let d = int_det(m.numerator());
    let scale = num_traits::pow(m.denominator().clone(), n);
    Ok(BigRational::new(d, scale))
}

/// Determinant of a square integer matrix (Bareiss).
pub fn int_det(m: &IntMatrix) -> BigInt {
    let n = m.rows;
    assert_eq!(n, m.cols, "determinant of non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}
