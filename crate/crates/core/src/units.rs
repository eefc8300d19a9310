//! Left, right and two-sided units.
//!
//! The primary detector solves the inhomogeneous 4×2 system exactly. The
//! determinant conditions on the matrices `M`, `M′` are evaluated separately
//! by [`classify_left_by_conditions`] / [`classify_right_by_conditions`], and
//! [`brute_force_units`] scans every candidate over GF(p). The three routes
//! share nothing beyond [`multiply`](crate::algebra::multiply) and are
//! cross-checked in the test suites.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{multiply_unchecked, Mat2, Msc, Vec2};
use crate::error::{Error, Result};
use crate::exact_fields::{Field, Scalar};
use crate::linalg::{self, AffineSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnitKind {
    NoUnit,
    UniqueUnit,
    ManyUnits,
}

impl fmt::Display for UnitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitKind::NoUnit => "none",
            UnitKind::UniqueUnit => "unique",
            UnitKind::ManyUnits => "many",
        })
    }
}

/// Solution set of a one-sided unit system: never the whole plane, since the
/// right-hand side is nonzero.
///
/// Lines are canonical: the direction's first nonzero coordinate is 1 and the
/// base is zero in that coordinate, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UnitSet {
    Empty,
    Point(Vec2),
    Line { base: Vec2, direction: Vec2 },
}

impl UnitSet {
    /// Canonical line through `base` along `direction`. Panics on a zero
    /// direction.
    pub fn line(base: Vec2, direction: Vec2) -> UnitSet {
        assert!(!direction.is_zero(), "line direction must be nonzero");
        let lead = if direction.u1().is_zero() {
            direction.u2()
        } else {
            direction.u1()
        };
        let d = direction.scale(&lead.inverse().expect("nonzero"));
        let offset = if d.u1().is_one() {
            base.u1().clone()
        } else {
            base.u2().clone()
        };
        UnitSet::Line {
            base: base.sub(&d.scale(&offset)),
            direction: d,
        }
    }

    pub fn kind(&self) -> UnitKind {
        match self {
            UnitSet::Empty => UnitKind::NoUnit,
            UnitSet::Point(_) => UnitKind::UniqueUnit,
            UnitSet::Line { .. } => UnitKind::ManyUnits,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, UnitSet::Empty)
    }

    pub fn contains(&self, l: &Vec2) -> bool {
        match self {
            UnitSet::Empty => false,
            UnitSet::Point(p) => p == l,
            UnitSet::Line { base, direction } => l.sub(base).cross(direction).is_zero(),
        }
    }

    /// `base + t · direction` for lines, the point itself for points.
    pub fn at(&self, t: &Scalar) -> Option<Vec2> {
        match self {
            UnitSet::Empty => None,
            UnitSet::Point(p) => Some(p.clone()),
            UnitSet::Line { base, direction } => Some(base.add(&direction.scale(t))),
        }
    }

    pub fn intersect(&self, other: &UnitSet) -> UnitSet {
        match (self, other) {
            (UnitSet::Empty, _) | (_, UnitSet::Empty) => UnitSet::Empty,
            (UnitSet::Point(p), s) | (s, UnitSet::Point(p)) => {
                if s.contains(p) {
                    UnitSet::Point(p.clone())
                } else {
                    UnitSet::Empty
                }
            }
            (
                UnitSet::Line {
                    base: b1,
                    direction: d1,
                },
                UnitSet::Line {
                    base: b2,
                    direction: d2,
                },
            ) => {
                let denom = d1.cross(d2);
                if denom.is_zero() {
                    if self == other {
                        self.clone()
                    } else {
                        UnitSet::Empty
                    }
                } else {
                    let s = &b2.sub(b1).cross(d2) * &denom.inverse().expect("nonzero");
                    UnitSet::Point(b1.add(&d1.scale(&s)))
                }
            }
        }
    }

    /// Image under an invertible coordinate change `l ↦ g·l`.
    pub fn map(&self, g: &Mat2) -> UnitSet {
        match self {
            UnitSet::Empty => UnitSet::Empty,
            UnitSet::Point(p) => UnitSet::Point(g.apply_unchecked(p)),
            UnitSet::Line { base, direction } => {
                UnitSet::line(g.apply_unchecked(base), g.apply_unchecked(direction))
            }
        }
    }

    /// Assembles a solution set from an explicit list of distinct points over
    /// GF(p).
    pub fn from_points(field: Field, points: &[Vec2]) -> Result<UnitSet> {
        let p = field.order().ok_or(Error::UnsupportedField {
            field,
            operation: "point-set assembly",
        })?;
        match points {
            [] => Ok(UnitSet::Empty),
            [only] => Ok(UnitSet::Point(only.clone())),
            [first, second, ..] => {
                let line = UnitSet::line(first.clone(), second.sub(first));
                if points.len() as u64 == p && points.iter().all(|x| line.contains(x)) {
                    Ok(line)
                } else {
                    Err(Error::InvalidSolutionSet(format!(
                        "{} points over GF({p})",
                        points.len()
                    )))
                }
            }
        }
    }
}

impl fmt::Display for UnitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitSet::Empty => f.write_str("none"),
            UnitSet::Point(p) => write!(f, "point {p}"),
            UnitSet::Line { base, direction } => write!(f, "line {base}+t{direction}"),
        }
    }
}

/// A 4×2 inhomogeneous system in the unit coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSystem {
    pub coeffs: [[Scalar; 2]; 4],
    pub rhs: [Scalar; 4],
}

impl UnitSystem {
    pub fn solve(&self, field: Field) -> UnitSet {
        let rows: Vec<Vec<Scalar>> = self.coeffs.iter().map(|r| r.to_vec()).collect();
        match linalg::solve(field, &rows, &self.rhs) {
            AffineSolution::Inconsistent => UnitSet::Empty,
            AffineSolution::Solutions { particular, kernel } => {
                let base =
                    Vec2::new(particular[0].clone(), particular[1].clone()).expect("one field");
                match kernel.as_slice() {
                    [] => UnitSet::Point(base),
                    [dir] => UnitSet::line(
                        base,
                        Vec2::new(dir[0].clone(), dir[1].clone()).expect("one field"),
                    ),
                    _ => unreachable!("nonzero right-hand side bounds the solution dimension"),
                }
            }
        }
    }
}

/// `A(l⊗e¹) = e¹`, `A(l⊗e²) = e²` in `l = (t1, t2)`. Rows are
/// `(α1,α3 | 1), (β1,β3 | 0), (α2,α4 | 0), (β2,β4 | 1)`.
pub fn left_unit_system(a: &Msc) -> UnitSystem {
    let e = a.entries();
    let f = a.field();
    UnitSystem {
        coeffs: [
            [e[0].clone(), e[2].clone()],
            [e[4].clone(), e[6].clone()],
            [e[1].clone(), e[3].clone()],
            [e[5].clone(), e[7].clone()],
        ],
        rhs: [f.one(), f.zero(), f.zero(), f.one()],
    }
}

/// `A(e¹⊗r) = e¹`, `A(e²⊗r) = e²` in `r`. Rows are
/// `(α1,α2 | 1), (β1,β2 | 0), (α3,α4 | 0), (β3,β4 | 1)`.
pub fn right_unit_system(a: &Msc) -> UnitSystem {
    let e = a.entries();
    let f = a.field();
    UnitSystem {
        coeffs: [
            [e[0].clone(), e[1].clone()],
            [e[4].clone(), e[5].clone()],
            [e[2].clone(), e[3].clone()],
            [e[6].clone(), e[7].clone()],
        ],
        rhs: [f.one(), f.zero(), f.zero(), f.one()],
    }
}

pub fn find_left_units(a: &Msc) -> UnitSet {
    left_unit_system(a).solve(a.field())
}

pub fn find_right_units(a: &Msc) -> UnitSet {
    right_unit_system(a).solve(a.field())
}

pub fn find_two_sided_unit(a: &Msc) -> UnitSet {
    find_left_units(a).intersect(&find_right_units(a))
}

pub fn find_units(a: &Msc, side: Side) -> UnitSet {
    match side {
        Side::Left => find_left_units(a),
        Side::Right => find_right_units(a),
        Side::TwoSided => find_two_sided_unit(a),
    }
}

/// Whether `l` satisfies the defining unit equations on both basis vectors.
pub fn is_unit(a: &Msc, l: &Vec2, side: Side) -> bool {
    let f = a.field();
    if l.field() != f {
        return false;
    }
    let left = || {
        (1..=2).all(|j| {
            let e = Vec2::basis(f, j);
            multiply_unchecked(a, l, &e) == e
        })
    };
    let right = || {
        (1..=2).all(|j| {
            let e = Vec2::basis(f, j);
            multiply_unchecked(a, &e, l) == e
        })
    };
    match side {
        Side::Left => left(),
        Side::Right => right(),
        Side::TwoSided => left() && right(),
    }
}

type Pair<'a> = (&'a Scalar, &'a Scalar);

fn det2(p: &(Scalar, Scalar), q: &(Scalar, Scalar)) -> Scalar {
    &(&p.0 * &q.1) - &(&p.1 * &q.0)
}

fn owned(p: Pair<'_>) -> (Scalar, Scalar) {
    (p.0.clone(), p.1.clone())
}

/// Evaluates the rank conditions for rows `p0` (the row carrying the `1` in
/// `M′`) and `others`.
///
/// (1): the three 2×2 minors of `others` vanish.
/// (2): `p0 ≠ 0` and every other row is zero — many units.
/// (3): some other row is nonzero, and every nonzero other row `r` has
/// `det(p0; r) ≠ 0` — a unique unit. Under (1) the nonzero rows are parallel,
/// so "some" and "every" coincide.
fn classify_by_conditions(p0: (Scalar, Scalar), others: [(Scalar, Scalar); 3]) -> UnitKind {
    let nonzero = |p: &(Scalar, Scalar)| !(p.0.is_zero() && p.1.is_zero());
    let [p1, p2, p3] = &others;
    let cond1 = det2(p1, p2).is_zero() && det2(p1, p3).is_zero() && det2(p2, p3).is_zero();
    if !cond1 {
        return UnitKind::NoUnit;
    }
    let cond2 = nonzero(&p0) && others.iter().all(|p| !nonzero(p));
    if cond2 {
        return UnitKind::ManyUnits;
    }
    let cond3 = others.iter().any(nonzero)
        && others
            .iter()
            .filter(|p| nonzero(p))
            .all(|p| !det2(&p0, p).is_zero());
    if cond3 {
        UnitKind::UniqueUnit
    } else {
        UnitKind::NoUnit
    }
}

/// Rank conditions on `M = ((α1,α3), (β1,β3), (α2,α4), (β2−α1, β4−α3))`.
pub fn classify_left_by_conditions(a: &Msc) -> UnitKind {
    let e = a.entries();
    classify_by_conditions(
        owned((&e[0], &e[2])),
        [
            owned((&e[4], &e[6])),
            owned((&e[1], &e[3])),
            (&e[5] - &e[0], &e[7] - &e[2]),
        ],
    )
}

/// Rank conditions on `((α1,α2), (β1,β2), (α3,α4), (β3−α1, β4−α2))`.
pub fn classify_right_by_conditions(a: &Msc) -> UnitKind {
    let e = a.entries();
    classify_by_conditions(
        owned((&e[0], &e[1])),
        [
            owned((&e[4], &e[5])),
            owned((&e[2], &e[3])),
            (&e[6] - &e[0], &e[7] - &e[1]),
        ],
    )
}

/// Scans all `p²` candidates over GF(p).
pub fn brute_force_units(a: &Msc, side: Side) -> Result<UnitSet> {
    let f = a.field();
    let Some(elements) = f.elements() else {
        return Err(Error::UnsupportedField {
            field: f,
            operation: "brute-force unit scan",
        });
    };
    let elements: Vec<Scalar> = elements.collect();
    let mut hits = Vec::new();
    for x in &elements {
        for y in &elements {
            let l = Vec2::new(x.clone(), y.clone()).expect("one field");
            if is_unit(a, &l, side) {
                hits.push(l);
            }
        }
    }
    UnitSet::from_points(f, &hits)
}
