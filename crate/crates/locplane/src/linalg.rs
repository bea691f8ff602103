//! Vectors and small matrices over a [`RingContext`].
//!
//! Determinants use the Leibniz expansion and inverses use the adjugate, so
//! everything works over any commutative ring. [`AffMatrix`] is the group `G(R)`
//! of affine maps and [`ProjClassMatrix`] is the group `H(R)` of invertible
//! matrices modulo invertible scalars.

use std::fmt;

use thiserror::Error;

use crate::ring::{RingContext, RingError, RingValue};

/// Errors from linear algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("determinant {0} is not invertible")]
    Singular(String),
    #[error("entries come from different rings")]
    Mismatch,
    #[error("bottom row must be (0,0,1)")]
    NotAffine,
}

fn same_ctx<'a>(vals: impl IntoIterator<Item = &'a RingValue>) -> Result<RingContext, LinalgError> {
    let mut it = vals.into_iter();
    let first = it.next().expect("nonempty").ctx().clone();
    if it.all(|v| *v.ctx() == first) {
        Ok(first)
    } else {
        Err(LinalgError::Mismatch)
    }
}

/// Column vector of length 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec3(pub [RingValue; 3]);

impl Vec3 {
    pub fn new(a: RingValue, b: RingValue, c: RingValue) -> Result<Self, LinalgError> {
        same_ctx([&a, &b, &c])?;
        Ok(Vec3([a, b, c]))
    }

    pub fn from_ints(ctx: &RingContext, v: [i64; 3]) -> Self {
        Vec3(v.map(|x| ctx.int(x)))
    }

    pub fn ctx(&self) -> &RingContext {
        self.0[0].ctx()
    }

    pub fn get(&self, i: usize) -> &RingValue {
        &self.0[i]
    }

    /// `Σ aᵢbᵢ`.
    pub fn dot(&self, o: &Vec3) -> RingValue {
        &(&(&self.0[0] * &o.0[0]) + &(&self.0[1] * &o.0[1])) + &(&self.0[2] * &o.0[2])
    }

    /// `(a₁b₂−a₂b₁, a₂b₀−a₀b₂, a₀b₁−a₁b₀)`.
    pub fn cross(&self, o: &Vec3) -> Vec3 {
        let (a, b) = (&self.0, &o.0);
        Vec3([
            &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
            &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
            &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
        ])
    }

    pub fn scale(&self, c: &RingValue) -> Vec3 {
        Vec3(self.0.clone().map(|x| c * &x))
    }

    /// Some coordinate is invertible.
    pub fn is_unimodular(&self) -> bool {
        self.0.iter().any(|x| x.is_invertible())
    }

    /// Index of the first invertible coordinate.
    pub fn first_invertible(&self) -> Option<usize> {
        self.0.iter().position(|x| x.is_invertible())
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// 2×2 matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[RingValue; 2]; 2]);

impl Mat2 {
    pub fn new(rows: [[RingValue; 2]; 2]) -> Result<Self, LinalgError> {
        same_ctx(rows.iter().flatten())?;
        Ok(Mat2(rows))
    }

    pub fn from_ints(ctx: &RingContext, rows: [[i64; 2]; 2]) -> Self {
        Mat2(rows.map(|r| r.map(|x| ctx.int(x))))
    }

    pub fn det(&self) -> RingValue {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }
}

/// Determinant of a 2×2 matrix.
pub fn det2(m: &Mat2) -> RingValue {
    m.det()
}

/// 3×3 matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3(pub [[RingValue; 3]; 3]);

const PERMS: [([usize; 3], bool); 6] =
    [([0, 1, 2], true), ([1, 2, 0], true), ([2, 0, 1], true), ([0, 2, 1], false), ([2, 1, 0], false), ([1, 0, 2], false)];

impl Mat3 {
    pub fn new(rows: [[RingValue; 3]; 3]) -> Result<Self, LinalgError> {
        same_ctx(rows.iter().flatten())?;
        Ok(Mat3(rows))
    }

    pub fn from_ints(ctx: &RingContext, rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(|x| ctx.int(x))))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(a: &Vec3, b: &Vec3, c: &Vec3) -> Result<Self, LinalgError> {
        let cols = [a, b, c];
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| cols[j].0[i].clone()));
        Mat3::new(rows)
    }

    pub fn identity(ctx: &RingContext) -> Self {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| if i == j { ctx.one() } else { ctx.zero() })))
    }

    pub fn ctx(&self) -> &RingContext {
        self.0[0][0].ctx()
    }

    pub fn entry(&self, i: usize, j: usize) -> &RingValue {
        &self.0[i][j]
    }

    pub fn column(&self, j: usize) -> Vec3 {
        Vec3(std::array::from_fn(|i| self.0[i][j].clone()))
    }

    /// Leibniz expansion.
    pub fn det(&self) -> RingValue {
        let m = &self.0;
        let mut acc = self.ctx().zero();
        for (p, even) in PERMS {
            let t = &(&m[0][p[0]] * &m[1][p[1]]) * &m[2][p[2]];
            acc = if even { &acc + &t } else { &acc - &t };
        }
        acc
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    /// Classical adjugate: transpose of the cofactor matrix.
    pub fn adjugate(&self) -> Mat3 {
        let m = &self.0;
        let cof = |i: usize, j: usize| {
            let r = [(i + 1) % 3, (i + 2) % 3];
            let c = [(j + 1) % 3, (j + 2) % 3];
            &(&m[r[0]][c[0]] * &m[r[1]][c[1]]) - &(&m[r[0]][c[1]] * &m[r[1]][c[0]])
        };
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i))))
    }

    /// `det⁻¹ · adj`, defined exactly when the determinant is invertible.
    pub fn inverse(&self) -> Result<Mat3, LinalgError> {
        let d = self.det();
        let di = d.try_inverse().ok_or_else(|| LinalgError::Singular(d.to_string()))?;
        Ok(self.adjugate().scale(&di))
    }

    pub fn scale(&self, c: &RingValue) -> Mat3 {
        Mat3(self.0.clone().map(|r| r.map(|x| c * &x)))
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let (a, b) = (&self.0, &o.0);
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| &(&(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j])) + &(&a[i][2] * &b[2][j]))
        }))
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        Vec3(std::array::from_fn(|i| Vec3(self.0[i].clone()).dot(v)))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity(self.ctx())
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(|r| format!("[{},{},{}]", r[0], r[1], r[2])).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Determinant of a 3×3 matrix.
pub fn det3(m: &Mat3) -> RingValue {
    m.det()
}

/// Inverse of a 3×3 matrix via the adjugate.
pub fn inverse3(m: &Mat3) -> Result<Mat3, LinalgError> {
    m.inverse()
}

/// Element of `G(R)`: invertible 3×3 matrix with bottom row `(0,0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffMatrix(Mat3);

impl AffMatrix {
    pub fn new(m: Mat3) -> Result<Self, LinalgError> {
        let ctx = m.ctx().clone();
        if !(m.0[2][0].is_zero() && m.0[2][1].is_zero() && m.0[2][2] == ctx.one()) {
            return Err(LinalgError::NotAffine);
        }
        let d = m.det();
        if !d.is_invertible() {
            return Err(LinalgError::Singular(d.to_string()));
        }
        Ok(AffMatrix(m))
    }

    pub fn identity(ctx: &RingContext) -> Self {
        AffMatrix(Mat3::identity(ctx))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    /// Image of the affine point `(x, y)`.
    pub fn apply(&self, x: &RingValue, y: &RingValue) -> (RingValue, RingValue) {
        let v = self.0.mul_vec(&Vec3([x.clone(), y.clone(), x.ctx().one()]));
        let [a, b, _] = v.0;
        (a, b)
    }
}

impl fmt::Display for AffMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Product in `G(R)`.
pub fn g_mul(a: &AffMatrix, b: &AffMatrix) -> AffMatrix {
    AffMatrix(a.0.mul(&b.0))
}

/// Inverse in `G(R)`.
pub fn g_inverse(a: &AffMatrix) -> AffMatrix {
    AffMatrix(a.0.inverse().expect("elements of G are invertible"))
}

/// Element of `H(R)`, stored with its first invertible entry (row-major) equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjClassMatrix(Mat3);

impl ProjClassMatrix {
    /// Canonical representative of the class of an invertible matrix.
    pub fn new(m: Mat3) -> Result<Self, LinalgError> {
        let d = m.det();
        if !d.is_invertible() {
            return Err(LinalgError::Singular(d.to_string()));
        }
        Ok(ProjClassMatrix(canonicalize(&m)))
    }

    pub fn identity(ctx: &RingContext) -> Self {
        ProjClassMatrix(Mat3::identity(ctx))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }
}

impl fmt::Display for ProjClassMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Scales a matrix so its first invertible entry in row-major order is 1.
/// An invertible matrix always has such an entry over a local ring; otherwise
/// the matrix is returned unchanged.
pub fn canonicalize(m: &Mat3) -> Mat3 {
    match m.0.iter().flatten().find_map(|x| x.try_inverse()) {
        Some(inv) => m.scale(&inv),
        None => m.clone(),
    }
}

/// Product in `H(R)`.
pub fn h_mul(a: &ProjClassMatrix, b: &ProjClassMatrix) -> ProjClassMatrix {
    ProjClassMatrix(canonicalize(&a.0.mul(&b.0)))
}

/// Inverse in `H(R)`.
pub fn h_inverse(a: &ProjClassMatrix) -> ProjClassMatrix {
    ProjClassMatrix(canonicalize(&a.0.inverse().expect("elements of H are invertible")))
}

fn for_each_tuple(elems: &[RingValue], len: usize, mut f: impl FnMut(&[RingValue])) {
    let n = elems.len();
    let mut idx = vec![0usize; len];
    let mut cur: Vec<RingValue> = vec![elems[0].clone(); len];
    loop {
        f(&cur);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < n {
                cur[i] = elems[idx[i]].clone();
                break;
            }
            idx[i] = 0;
            cur[i] = elems[0].clone();
        }
    }
}

/// All of `G(R)` for a finite ring, in lexicographic order of the top two rows.
pub fn enumerate_g(ctx: &RingContext) -> Result<Vec<AffMatrix>, LinalgError> {
    let elems = ctx.enumerate()?;
    let mut out = Vec::new();
    for_each_tuple(&elems, 6, |t| {
        let d = &(&t[0] * &t[4]) - &(&t[1] * &t[3]);
        if d.is_invertible() {
            out.push(AffMatrix(Mat3([
                [t[0].clone(), t[1].clone(), t[2].clone()],
                [t[3].clone(), t[4].clone(), t[5].clone()],
                [ctx.zero(), ctx.zero(), ctx.one()],
            ])));
        }
    });
    Ok(out)
}

/// All of `H(R)` for a finite ring: canonical invertible matrices in
/// lexicographic row-major order.
pub fn enumerate_h(ctx: &RingContext) -> Result<Vec<ProjClassMatrix>, LinalgError> {
    let elems = ctx.enumerate()?;
    let mut out = Vec::new();
    for_each_tuple(&elems, 9, |t| {
        if t.iter().find(|x| x.is_invertible()).is_some_and(|x| x.is_one()) {
            let m = Mat3(std::array::from_fn(|i| std::array::from_fn(|j| t[3 * i + j].clone())));
            if m.det().is_invertible() {
                out.push(ProjClassMatrix(m));
            }
        }
    });
    Ok(out)
}
