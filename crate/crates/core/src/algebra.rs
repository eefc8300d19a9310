//! Two-dimensional algebras given by their 2×4 matrix of structure constants.
//!
//! For coordinate columns `u`, `v` the product is `A · (u ⊗ v)` with the
//! Kronecker layout `(u1v1, u1v2, u2v1, u2v2)`. A change of basis `g` acts by
//! `A ↦ g · A · (g⁻¹ ⊗ g⁻¹)`.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact_fields::{Field, Scalar};

fn common_field<'a>(mut items: impl Iterator<Item = &'a Scalar>) -> Result<Field> {
    let first = items.next().expect("at least one scalar").field();
    for x in items {
        if x.field() != first {
            return Err(Error::FieldMismatch {
                left: first,
                right: x.field(),
            });
        }
    }
    Ok(first)
}

fn check_same(left: Field, right: Field) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::FieldMismatch { left, right })
    }
}

/// Coordinate column of an algebra element in the fixed basis `(e¹, e²)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec2 {
    u1: Scalar,
    u2: Scalar,
}

impl Vec2 {
    pub fn new(u1: Scalar, u2: Scalar) -> Result<Vec2> {
        check_same(u1.field(), u2.field())?;
        Ok(Vec2 { u1, u2 })
    }

    pub fn from_ints(field: Field, u1: i64, u2: i64) -> Vec2 {
        Vec2 {
            u1: field.int(u1),
            u2: field.int(u2),
        }
    }

    pub fn zero(field: Field) -> Vec2 {
        Vec2::from_ints(field, 0, 0)
    }

    /// `e¹` for `j = 1`, `e²` for `j = 2`.
    pub fn basis(field: Field, j: usize) -> Vec2 {
        match j {
            1 => Vec2::from_ints(field, 1, 0),
            2 => Vec2::from_ints(field, 0, 1),
            _ => panic!("basis index must be 1 or 2, got {j}"),
        }
    }

    pub fn u1(&self) -> &Scalar {
        &self.u1
    }

    pub fn u2(&self) -> &Scalar {
        &self.u2
    }

    pub fn field(&self) -> Field {
        self.u1.field()
    }

    pub fn is_zero(&self) -> bool {
        self.u1.is_zero() && self.u2.is_zero()
    }

    pub fn scale(&self, k: &Scalar) -> Vec2 {
        Vec2 {
            u1: k * &self.u1,
            u2: k * &self.u2,
        }
    }

    pub fn add(&self, other: &Vec2) -> Vec2 {
        Vec2 {
            u1: &self.u1 + &other.u1,
            u2: &self.u2 + &other.u2,
        }
    }

    pub fn sub(&self, other: &Vec2) -> Vec2 {
        Vec2 {
            u1: &self.u1 - &other.u1,
            u2: &self.u2 - &other.u2,
        }
    }

    /// `u1·v2 − u2·v1`; zero iff the vectors are parallel.
    pub fn cross(&self, other: &Vec2) -> Scalar {
        &(&self.u1 * &other.u2) - &(&self.u2 * &other.u1)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u1, self.u2)
    }
}

/// A 2×2 matrix, used for basis changes and multiplication operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: [Scalar; 4],
}

impl Mat2 {
    /// Row-major entries `a11, a12, a21, a22`.
    pub fn new(entries: [Scalar; 4]) -> Result<Mat2> {
        common_field(entries.iter())?;
        Ok(Mat2 { a: entries })
    }

    pub fn from_ints(field: Field, entries: [i64; 4]) -> Mat2 {
        Mat2 {
            a: entries.map(|x| field.int(x)),
        }
    }

    pub fn identity(field: Field) -> Mat2 {
        Mat2::from_ints(field, [1, 0, 0, 1])
    }

    /// Matrix with the given columns.
    pub fn from_columns(c1: &Vec2, c2: &Vec2) -> Result<Mat2> {
        check_same(c1.field(), c2.field())?;
        Ok(Mat2 {
            a: [c1.u1.clone(), c2.u1.clone(), c1.u2.clone(), c2.u2.clone()],
        })
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.a[(row - 1) * 2 + (col - 1)]
    }

    pub fn entries(&self) -> &[Scalar; 4] {
        &self.a
    }

    pub fn field(&self) -> Field {
        self.a[0].field()
    }

    pub fn det(&self) -> Scalar {
        &(&self.a[0] * &self.a[3]) - &(&self.a[1] * &self.a[2])
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    /// Adjugate over determinant.
    pub fn inverse(&self) -> Result<Mat2> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::NotInvertible);
        }
        let k = d.inverse()?;
        let [a, b, c, e] = &self.a;
        Ok(Mat2 {
            a: [&k * e, -(&k * b), -(&k * c), &k * a],
        })
    }

    pub fn mul(&self, rhs: &Mat2) -> Result<Mat2> {
        check_same(self.field(), rhs.field())?;
        let [a, b, c, d] = &self.a;
        let [e, f, g, h] = &rhs.a;
        Ok(Mat2 {
            a: [
                &(a * e) + &(b * g),
                &(a * f) + &(b * h),
                &(c * e) + &(d * g),
                &(c * f) + &(d * h),
            ],
        })
    }

    pub fn apply(&self, v: &Vec2) -> Result<Vec2> {
        check_same(self.field(), v.field())?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vec2) -> Vec2 {
        let [a, b, c, d] = &self.a;
        Vec2 {
            u1: &(a * &v.u1) + &(b * &v.u2),
            u2: &(c * &v.u1) + &(d * &v.u2),
        }
    }

    /// Parses `a11,a12,a21,a22` (whitespace tolerant).
    /// Entries from [`Field::sample`], redrawn until the determinant is
    /// nonzero.
    pub fn random_invertible<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Mat2 {
        loop {
            let m = Mat2 {
                a: std::array::from_fn(|_| field.sample(rng)),
            };
            if m.is_invertible() {
                return m;
            }
        }
    }

    pub fn parse(field: Field, text: &str) -> Result<Mat2> {
        let entries = parse_scalars::<4>(field, text)?;
        Ok(Mat2 { a: entries })
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.a;
        write!(f, "({a},{b};{c},{d})")
    }
}

/// Kronecker product of two 2-vectors, laid out as `(u1v1, u1v2, u2v1, u2v2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vec4(pub [Scalar; 4]);

pub fn kron(u: &Vec2, v: &Vec2) -> Result<Vec4> {
    check_same(u.field(), v.field())?;
    Ok(kron_unchecked(u, v))
}

fn kron_unchecked(u: &Vec2, v: &Vec2) -> Vec4 {
    Vec4([&u.u1 * &v.u1, &u.u1 * &v.u2, &u.u2 * &v.u1, &u.u2 * &v.u2])
}

/// Matrix of structure constants `(α1 α2 α3 α4; β1 β2 β3 β4)`.
///
/// Equality is entrywise; nothing is normalized implicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Msc {
    e: [Scalar; 8],
}

impl Msc {
    /// Row-major entries `α1..α4, β1..β4`, all from one field.
    pub fn new(entries: [Scalar; 8]) -> Result<Msc> {
        common_field(entries.iter())?;
        Ok(Msc { e: entries })
    }

    pub fn from_rows(alpha: [Scalar; 4], beta: [Scalar; 4]) -> Result<Msc> {
        let [a1, a2, a3, a4] = alpha;
        let [b1, b2, b3, b4] = beta;
        Msc::new([a1, a2, a3, a4, b1, b2, b3, b4])
    }

    pub fn from_ints(field: Field, entries: [i64; 8]) -> Msc {
        Msc {
            e: entries.map(|x| field.int(x)),
        }
    }

    pub fn zero(field: Field) -> Msc {
        Msc::from_ints(field, [0; 8])
    }

    pub fn entries(&self) -> &[Scalar; 8] {
        &self.e
    }

    /// `α1..α4`.
    pub fn alpha(&self) -> &[Scalar] {
        &self.e[..4]
    }

    /// `β1..β4`.
    pub fn beta(&self) -> &[Scalar] {
        &self.e[4..]
    }

    pub fn field(&self) -> Field {
        self.e[0].field()
    }

    pub fn is_trivial(&self) -> bool {
        self.e.iter().all(Scalar::is_zero)
    }

    /// `A · w` for a Kronecker 4-vector `w`.
    pub fn apply(&self, w: &Vec4) -> Result<Vec2> {
        check_same(self.field(), w.0[0].field())?;
        Ok(self.apply_unchecked(w))
    }

    fn apply_unchecked(&self, w: &Vec4) -> Vec2 {
        let dot = |row: &[Scalar]| {
            row.iter()
                .zip(w.0.iter())
                .fold(self.field().zero(), |acc, (a, x)| &acc + &(a * x))
        };
        Vec2 {
            u1: dot(self.alpha()),
            u2: dot(self.beta()),
        }
    }

    /// Entries drawn with [`Field::sample`].
    pub fn random<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Msc {
        Msc {
            e: std::array::from_fn(|_| field.sample(rng)),
        }
    }

    /// Parses the text form `α1,α2,α3,α4,β1,β2,β3,β4`. Parse errors carry the
    /// 1-based entry position.
    pub fn parse(field: Field, text: &str) -> Result<Msc> {
        Ok(Msc {
            e: parse_scalars::<8>(field, text)?,
        })
    }

    /// Index of a GF(p) MSC in `0..p⁸`, entries read as base-p digits with
    /// `α1` most significant. `None` over ℚ.
    pub fn index(&self) -> Option<u64> {
        let Field::Prime(p) = self.field() else {
            return None;
        };
        Some(self.e.iter().fold(0u64, |acc, x| {
            acc * u64::from(p) + u64::from(x.residue().expect("prime field"))
        }))
    }

    /// Inverse of [`Msc::index`].
    pub fn from_index(field: Field, mut index: u64) -> Msc {
        let p = field.order().expect("prime field");
        let mut digits = [0i64; 8];
        for d in digits.iter_mut().rev() {
            *d = (index % p) as i64;
            index /= p;
        }
        Msc::from_ints(field, digits)
    }
}

impl fmt::Display for Msc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.e.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

fn parse_scalars<const N: usize>(field: Field, text: &str) -> Result<[Scalar; N]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != N {
        return Err(Error::Parse {
            position: parts.len().min(N + 1),
            message: format!(
                "expected {N} comma-separated entries, found {}",
                parts.len()
            ),
        });
    }
    let mut out = Vec::with_capacity(N);
    for (i, part) in parts.iter().enumerate() {
        let x = field.parse(part).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse {
                position: i + 1,
                message,
            },
            other => other,
        })?;
        out.push(x);
    }
    Ok(out.try_into().expect("length checked"))
}

/// `u · v = A (u ⊗ v)`.
pub fn multiply(a: &Msc, u: &Vec2, v: &Vec2) -> Result<Vec2> {
    check_same(a.field(), u.field())?;
    check_same(a.field(), v.field())?;
    Ok(a.apply_unchecked(&kron_unchecked(u, v)))
}

pub(crate) fn multiply_unchecked(a: &Msc, u: &Vec2, v: &Vec2) -> Vec2 {
    a.apply_unchecked(&kron_unchecked(u, v))
}

/// `g · A · (g⁻¹ ⊗ g⁻¹)`, the structure constants in the basis changed by `g`.
pub fn transform(a: &Msc, g: &Mat2) -> Result<Msc> {
    check_same(a.field(), g.field())?;
    let g_inv = g.inverse()?;
    Ok(transform_with_inverse(a, g, &g_inv))
}

/// [`transform`] with a precomputed inverse; fields are assumed to agree.
pub(crate) fn transform_with_inverse(a: &Msc, g: &Mat2, g_inv: &Mat2) -> Msc {
    let zero = a.field().zero();
    // (g⁻¹ ⊗ g⁻¹)[2i+k][2j+l] = h[i][j] · h[k][l]
    let h = |r: usize, c: usize| &g_inv.a[r * 2 + c];
    let mut k4: [[Scalar; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zero.clone()));
    for (row, k_row) in k4.iter_mut().enumerate() {
        for (col, slot) in k_row.iter_mut().enumerate() {
            *slot = h(row / 2, col / 2) * h(row % 2, col % 2);
        }
    }
    // g · A
    let ga: [[Scalar; 4]; 2] = std::array::from_fn(|r| {
        std::array::from_fn(|c| &(&g.a[r * 2] * &a.e[c]) + &(&g.a[r * 2 + 1] * &a.e[4 + c]))
    });
    let mut out: [Scalar; 8] = std::array::from_fn(|_| zero.clone());
    for r in 0..2 {
        for c in 0..4 {
            out[r * 4 + c] = (0..4).fold(zero.clone(), |acc, m| &acc + &(&ga[r][m] * &k4[m][c]));
        }
    }
    Msc { e: out }
}

/// `L_u`: the matrix of `v ↦ u · v`.
pub fn left_mult_operator(a: &Msc, u: &Vec2) -> Result<Mat2> {
    check_same(a.field(), u.field())?;
    let f = a.field();
    let c1 = multiply_unchecked(a, u, &Vec2::basis(f, 1));
    let c2 = multiply_unchecked(a, u, &Vec2::basis(f, 2));
    Mat2::from_columns(&c1, &c2)
}

/// `R_u`: the matrix of `v ↦ v · u`.
pub fn right_mult_operator(a: &Msc, u: &Vec2) -> Result<Mat2> {
    check_same(a.field(), u.field())?;
    let f = a.field();
    let c1 = multiply_unchecked(a, &Vec2::basis(f, 1), u);
    let c2 = multiply_unchecked(a, &Vec2::basis(f, 2), u);
    Mat2::from_columns(&c1, &c2)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn q(n: i64, d: i64) -> Scalar {
        Q.ratio(n, d).unwrap()
    }

    fn complex() -> Msc {
        Msc::from_ints(Q, [1, 0, 0, -1, 0, 1, 1, 0])
    }

    fn a12(f: Field) -> Msc {
        Msc::from_ints(f, [0, 0, 0, 0, 1, 0, 0, 0])
    }

    #[test]
    fn kron_examples() {
        let k = kron(&Vec2::from_ints(Q, 1, 0), &Vec2::from_ints(Q, 0, 1)).unwrap();
        assert_eq!(k, Vec4([0, 1, 0, 0].map(|x| Q.int(x))));
        let k = kron(&Vec2::from_ints(Q, 1, 1), &Vec2::from_ints(Q, 1, 1)).unwrap();
        assert_eq!(k, Vec4([1, 1, 1, 1].map(|x| Q.int(x))));
        let u = Vec2::new(q(1, 2), q(2, 1)).unwrap();
        let v = Vec2::new(q(3, 1), q(1, 3)).unwrap();
        assert_eq!(
            kron(&u, &v).unwrap(),
            Vec4([q(3, 2), q(1, 6), q(6, 1), q(2, 3)])
        );
    }

    #[test]
    fn kron_rejects_mixed_fields() {
        let u = Vec2::from_ints(Q, 1, 0);
        let v = Vec2::from_ints(Field::Prime(5), 1, 0);
        assert!(matches!(kron(&u, &v), Err(Error::FieldMismatch { .. })));
        assert!(Vec2::new(q(1, 2), Field::Prime(3).int(1)).is_err());
    }

    #[test]
    fn multiply_examples() {
        let i = Vec2::from_ints(Q, 0, 1);
        assert_eq!(
            multiply(&complex(), &i, &i).unwrap(),
            Vec2::from_ints(Q, -1, 0)
        );
        let u = Vec2::from_ints(Q, 3, -7);
        assert_eq!(multiply(&Msc::zero(Q), &u, &u).unwrap(), Vec2::zero(Q));
        let e1 = Vec2::basis(Q, 1);
        assert_eq!(multiply(&a12(Q), &e1, &e1).unwrap(), Vec2::basis(Q, 2));
        let w = Vec2::from_ints(Field::Prime(3), 1, 0);
        assert!(multiply(&complex(), &w, &w).is_err());
    }

    #[test]
    fn transform_identity_is_noop() {
        let a = Msc::parse(Q, "1/2,0,3,-1,2,2/3,0,5").unwrap();
        assert_eq!(transform(&a, &Mat2::identity(Q)).unwrap(), a);
    }

    #[test]
    fn transform_swap_on_a12() {
        // new e2·e2 = old e1·e1 = old e2 = new e1
        let swap = Mat2::from_ints(Q, [0, 1, 1, 0]);
        assert_eq!(
            transform(&a12(Q), &swap).unwrap(),
            Msc::from_ints(Q, [0, 0, 0, 1, 0, 0, 0, 0])
        );
    }

    #[test]
    fn transform_rejects_singular() {
        let g = Mat2::from_ints(Q, [1, 2, 2, 4]);
        assert_eq!(transform(&complex(), &g), Err(Error::NotInvertible));
    }

    #[test]
    fn mat2_inverse() {
        let g = Mat2::from_ints(Q, [2, 1, 1, 1]);
        let inv = g.inverse().unwrap();
        assert_eq!(g.mul(&inv).unwrap(), Mat2::identity(Q));
        let f5 = Field::Prime(5);
        let g = Mat2::from_ints(f5, [2, 3, 1, 3]);
        assert_eq!(g.mul(&g.inverse().unwrap()).unwrap(), Mat2::identity(f5));
    }

    #[test]
    fn left_operator_examples() {
        let i = Vec2::from_ints(Q, 0, 1);
        assert_eq!(
            left_mult_operator(&complex(), &i).unwrap(),
            Mat2::from_ints(Q, [0, -1, 1, 0])
        );
        assert_eq!(
            left_mult_operator(&Msc::zero(Q), &i).unwrap(),
            Mat2::from_ints(Q, [0; 4])
        );
        // A3,r(1/2, 0, 1/2) at u = (1,1)
        let a = Msc::parse(Q, "1/2,0,0,-1,0,1/2,1/2,0").unwrap();
        let l = left_mult_operator(&a, &Vec2::from_ints(Q, 1, 1)).unwrap();
        assert_eq!(l, Mat2::new([q(1, 2), q(-1, 1), q(1, 2), q(1, 2)]).unwrap());
    }

    #[test]
    fn right_operator_examples() {
        let i = Vec2::from_ints(Q, 0, 1);
        assert_eq!(
            right_mult_operator(&complex(), &i).unwrap(),
            Mat2::from_ints(Q, [0, -1, 1, 0])
        );
        assert_eq!(
            right_mult_operator(&Msc::zero(Q), &i).unwrap(),
            Mat2::from_ints(Q, [0; 4])
        );
        assert_eq!(
            right_mult_operator(&a12(Q), &Vec2::basis(Q, 1)).unwrap(),
            Mat2::from_ints(Q, [0, 0, 1, 0])
        );
    }

    #[test]
    fn text_round_trip() {
        let a = Msc::parse(Q, " 1/2, 0 ,0,1,0,1/2 ,1/2,0").unwrap();
        assert_eq!(a.to_string(), "1/2,0,0,1,0,1/2,1/2,0");
        assert_eq!(Msc::parse(Q, &a.to_string()).unwrap(), a);
        let err = Msc::parse(Q, "1,2,x,4,5,6,7,8").unwrap_err();
        assert!(matches!(err, Error::Parse { position: 3, .. }));
        assert!(matches!(Msc::parse(Q, "1,2,3"), Err(Error::Parse { .. })));
        let g = Mat2::parse(Field::Prime(5), "1, 2, 3, 4").unwrap();
        assert_eq!(g.to_string(), "(1,2;3,4)");
    }

    #[test]
    fn index_round_trip() {
        let f3 = Field::Prime(3);
        for idx in [0u64, 1, 2, 3, 100, 6560] {
            assert_eq!(Msc::from_index(f3, idx).index(), Some(idx));
        }
        assert_eq!(
            Msc::from_index(f3, 1),
            Msc::from_ints(f3, [0, 0, 0, 0, 0, 0, 0, 1])
        );
        assert_eq!(complex().index(), None);
    }
}
