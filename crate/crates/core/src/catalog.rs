//! Canonical families of two-dimensional algebras and their unital sublists.
//!
//! [`CatalogKind::All`] lists the full classification per characteristic
//! class. The left-, right- and two-sided-unital kinds list the table rows:
//! each row is a specialization of one family, carries its own parameters,
//! admissibility constraint and unit formula, and records which family
//! parameter positions its own parameters occupy (see [`in_sublist`]).

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::algebra::{Msc, Vec2};
use crate::error::{Error, Result};
use crate::exact_fields::{Field, Scalar};
use crate::units::{Side, UnitSet};

/// Characteristic class of a catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharClass {
    /// Characteristic neither 2 nor 3; modeled by ℚ or GF(p), p ≥ 5.
    Not23,
    Char2,
    Char3,
    /// The real field, modeled by ℚ.
    Real,
}

impl CharClass {
    pub const ALL: [CharClass; 4] = [
        CharClass::Not23,
        CharClass::Char2,
        CharClass::Char3,
        CharClass::Real,
    ];

    /// Suffix appended to family ids (`A1,2`, `A5,r`, ...).
    pub fn suffix(self) -> &'static str {
        match self {
            CharClass::Not23 => "",
            CharClass::Char2 => ",2",
            CharClass::Char3 => ",3",
            CharClass::Real => ",r",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CharClass::Not23 => "not23",
            CharClass::Char2 => "2",
            CharClass::Char3 => "3",
            CharClass::Real => "real",
        }
    }

    /// The field used when none is given: ℚ, GF(2), GF(3), ℚ.
    pub fn default_field(self) -> Field {
        match self {
            CharClass::Not23 | CharClass::Real => Field::Rational,
            CharClass::Char2 => Field::Prime(2),
            CharClass::Char3 => Field::Prime(3),
        }
    }

    pub fn check_field(self, field: Field) -> Result<()> {
        let ok = match (self, field) {
            (CharClass::Not23, Field::Rational) => true,
            (CharClass::Not23, Field::Prime(p)) => p >= 5,
            (CharClass::Char2, Field::Prime(2)) => true,
            (CharClass::Char3, Field::Prime(3)) => true,
            (CharClass::Real, Field::Rational) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Characteristic(format!(
                "class {} cannot be built over {field}",
                self.name()
            )))
        }
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CharClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<CharClass> {
        match s.trim().to_ascii_lowercase().as_str() {
            "not23" => Ok(CharClass::Not23),
            "2" | "char2" => Ok(CharClass::Char2),
            "3" | "char3" => Ok(CharClass::Char3),
            "real" | "r" => Ok(CharClass::Real),
            other => Err(Error::Parse {
                position: 0,
                message: format!("unknown characteristic class {other:?}"),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKind {
    All,
    LeftUnital,
    RightUnital,
    Unital,
}

impl FromStr for CatalogKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<CatalogKind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(CatalogKind::All),
            "left" | "left-unital" => Ok(CatalogKind::LeftUnital),
            "right" | "right-unital" => Ok(CatalogKind::RightUnital),
            "unital" => Ok(CatalogKind::Unital),
            other => Err(Error::Parse {
                position: 0,
                message: format!("unknown catalog kind {other:?}"),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitalSide {
    None,
    Left,
    Right,
    TwoSided,
}

type Build = fn(Field, &[Scalar]) -> Result<Msc>;
type Admit = fn(&[Scalar]) -> bool;
type UnitFormula = fn(Field, &[Scalar]) -> Result<UnitSet>;

/// One canonical family, or one table row specializing a family.
#[derive(Clone, Copy)]
pub struct FamilySpec {
    /// Family id without class suffix, e.g. `A4`.
    pub family: &'static str,
    pub char_class: CharClass,
    /// Display label with the row's specialization, e.g. `A4(α1, α1)`.
    pub label: &'static str,
    pub params: &'static [&'static str],
    /// Positions in the family's parameter tuple that this row's parameters
    /// occupy. For a full family this is `0..params.len()`.
    pub positions: &'static [usize],
    /// Human-readable admissibility constraint; empty when unconstrained.
    pub constraint: &'static str,
    /// MSC template as displayed.
    pub template: &'static str,
    pub unital_side: UnitalSide,
    /// Index of a parameter whose sign flip gives an isomorphic algebra over
    /// an algebraically closed field (`A2`, `A6`).
    pub sign_symmetric: Option<usize>,
    admissible: Admit,
    build: Build,
    left_unit: Option<(&'static str, UnitFormula)>,
    right_unit: Option<(&'static str, UnitFormula)>,
}

impl fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FamilySpec")
            .field("id", &self.id())
            .field("label", &self.label)
            .field("constraint", &self.constraint)
            .finish()
    }
}

impl FamilySpec {
    /// Full id with class suffix, e.g. `A10,2`.
    pub fn id(&self) -> String {
        format!("{}{}", self.family, self.char_class.suffix())
    }

    pub fn arity(&self) -> usize {
        self.params.len()
    }

    pub fn is_admissible(&self, params: &[Scalar]) -> bool {
        params.len() == self.arity() && (self.admissible)(params)
    }

    pub fn left_formula(&self) -> Option<&'static str> {
        self.left_unit.map(|(text, _)| text)
    }

    pub fn right_formula(&self) -> Option<&'static str> {
        self.right_unit.map(|(text, _)| text)
    }

    fn check(&self, field: Field, params: &[Scalar]) -> Result<()> {
        self.char_class.check_field(field)?;
        if params.len() != self.arity() {
            return Err(Error::Arity {
                family: self.id(),
                expected: self.arity(),
                got: params.len(),
            });
        }
        if let Some(x) = params.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: x.field(),
            });
        }
        if !(self.admissible)(params) {
            return Err(Error::Inadmissible {
                family: self.label.to_string(),
                constraint: self.constraint.to_string(),
            });
        }
        Ok(())
    }

    /// The MSC at `params`.
    pub fn instantiate(&self, field: Field, params: &[Scalar]) -> Result<Msc> {
        self.check(field, params)?;
        (self.build)(field, params)
    }

    /// The tabulated unit at `params`. `TwoSided` requires both formulas and
    /// returns their intersection.
    pub fn expected_unit(&self, field: Field, params: &[Scalar], side: Side) -> Result<UnitSet> {
        let formula = |entry: Option<(&'static str, UnitFormula)>, name: &'static str| {
            entry.map(|(_, f)| f).ok_or_else(|| Error::NoFormula {
                family: self.label.to_string(),
                side: name,
            })
        };
        let left = formula(self.left_unit, "left");
        let right = formula(self.right_unit, "right");
        self.check(field, params)?;
        match side {
            Side::Left => left?(field, params),
            Side::Right => right?(field, params),
            Side::TwoSided => {
                let l = left?(field, params)?;
                let r = right?(field, params)?;
                Ok(l.intersect(&r))
            }
        }
    }

    /// Random admissible parameters, or `None` if sampling keeps failing.
    pub fn sample_params<R: Rng + ?Sized>(&self, field: Field, rng: &mut R) -> Option<Vec<Scalar>> {
        (0..1000)
            .map(|_| {
                (0..self.arity())
                    .map(|_| field.sample(rng))
                    .collect::<Vec<_>>()
            })
            .find(|p| (self.admissible)(p))
    }

    /// Every admissible parameter tuple over GF(p); `None` over ℚ.
    pub fn all_params(&self, field: Field) -> Option<Vec<Vec<Scalar>>> {
        let elements: Vec<Scalar> = field.elements()?.collect();
        let mut tuples: Vec<Vec<Scalar>> = vec![Vec::new()];
        for _ in 0..self.arity() {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    elements.iter().map(move |x| {
                        let mut next = t.clone();
                        next.push(x.clone());
                        next
                    })
                })
                .collect();
        }
        tuples.retain(|p| (self.admissible)(p));
        Some(tuples)
    }
}

/// Whether the family instance `family(params)` coincides with an admissible
/// instance of one of `rows` (same family id): the row parameters are read
/// off at the row's positions and the two MSCs are compared.
pub fn in_sublist(
    rows: &[FamilySpec],
    family: &FamilySpec,
    field: Field,
    params: &[Scalar],
) -> bool {
    let Ok(target) = family.instantiate(field, params) else {
        return false;
    };
    rows.iter().filter(|r| r.family == family.family).any(|r| {
        let projected: Vec<Scalar> = r.positions.iter().map(|&i| params[i].clone()).collect();
        r.instantiate(field, &projected).is_ok_and(|m| m == target)
    })
}

/// The complete list for a class and kind.
pub fn enumerate_catalog(class: CharClass, kind: CatalogKind) -> Vec<FamilySpec> {
    match (class, kind) {
        (CharClass::Not23, CatalogKind::All) => families_not23(),
        (CharClass::Char2, CatalogKind::All) => families_char2(),
        (CharClass::Char3, CatalogKind::All) => families_char3(),
        (CharClass::Real, CatalogKind::All) => families_real(),
        (CharClass::Not23 | CharClass::Char3, CatalogKind::LeftUnital) => left_rows_not2(class),
        (CharClass::Not23 | CharClass::Char3, CatalogKind::RightUnital) => right_rows_not2(class),
        (CharClass::Not23 | CharClass::Char3, CatalogKind::Unital) => unital_rows_not2(class),
        (CharClass::Char2, CatalogKind::LeftUnital) => left_rows_char2(),
        (CharClass::Char2, CatalogKind::RightUnital) => right_rows_char2(),
        (CharClass::Char2, CatalogKind::Unital) => unital_rows_char2(),
        (CharClass::Real, CatalogKind::LeftUnital) => left_rows_real(),
        (CharClass::Real, CatalogKind::RightUnital) => right_rows_real(),
        (CharClass::Real, CatalogKind::Unital) => unital_rows_real(),
    }
}

/// Looks up a family of the full classification by id (`A9`, `A9,3`, ...).
pub fn find_family(id: &str, class: CharClass) -> Result<FamilySpec> {
    let wanted = id.trim();
    enumerate_catalog(class, CatalogKind::All)
        .into_iter()
        .find(|s| s.family == wanted || s.id() == wanted)
        .ok_or_else(|| Error::UnknownFamily(format!("{wanted} in class {class}")))
}

/// The displayed MSC of family `id` at `params`.
pub fn make_family(id: &str, class: CharClass, field: Field, params: &[Scalar]) -> Result<Msc> {
    find_family(id, class)?.instantiate(field, params)
}

/// `ℂ` in the basis `(1, i)`.
pub fn complex_msc(field: Field) -> Result<Msc> {
    if field.characteristic() != 0 {
        return Err(Error::Characteristic(format!(
            "the complex numbers need characteristic 0, not {field}"
        )));
    }
    Ok(Msc::from_ints(field, [1, 0, 0, -1, 0, 1, 1, 0]))
}

// ---------------------------------------------------------------------------
// family templates

fn msc(f: Field, e: [Scalar; 8]) -> Result<Msc> {
    let _ = f;
    Msc::new(e)
}

fn half(f: Field) -> Result<Scalar> {
    f.ratio(1, 2)
}

fn point(a: Scalar, b: Scalar) -> Result<UnitSet> {
    Ok(UnitSet::Point(Vec2::new(a, b)?))
}

fn point_ints(f: Field, a: i64, b: i64) -> Result<UnitSet> {
    Ok(UnitSet::Point(Vec2::from_ints(f, a, b)))
}

fn line_ints(f: Field, base: (i64, i64), dir: (i64, i64)) -> Result<UnitSet> {
    Ok(UnitSet::line(
        Vec2::from_ints(f, base.0, base.1),
        Vec2::from_ints(f, dir.0, dir.1),
    ))
}

fn inv_e1(f: Field, a: &Scalar) -> Result<UnitSet> {
    point(a.inverse()?, f.zero())
}

/// `(α1, α2, α2+1, α4; β1, −α1, 1−α1, −α2)` with `c = (α1, α2, α4, β1)`.
fn t_a1(f: Field, c: &[Scalar]) -> Result<Msc> {
    let one = f.one();
    let (a1, a2, a4, b1) = (&c[0], &c[1], &c[2], &c[3]);
    msc(
        f,
        [
            a1.clone(),
            a2.clone(),
            a2 + &one,
            a4.clone(),
            b1.clone(),
            -a1,
            &one - a1,
            -a2,
        ],
    )
}

/// `(α1, 0, 0, s; β1, β2, 1−α1, 0)` with `c = (α1, β1, β2)`.
fn t_a2_signed(f: Field, c: &[Scalar], s: i64) -> Result<Msc> {
    let (a1, b1, b2) = (&c[0], &c[1], &c[2]);
    msc(
        f,
        [
            a1.clone(),
            f.zero(),
            f.zero(),
            f.int(s),
            b1.clone(),
            b2.clone(),
            &f.one() - a1,
            f.zero(),
        ],
    )
}

fn t_a2(f: Field, c: &[Scalar]) -> Result<Msc> {
    t_a2_signed(f, c, 1)
}

fn t_a2_neg(f: Field, c: &[Scalar]) -> Result<Msc> {
    t_a2_signed(f, c, -1)
}

/// `(0, 1, 1, 0; β1, β2, 1, −1)` with `c = (β1, β2)`.
fn t_a3(f: Field, c: &[Scalar]) -> Result<Msc> {
    msc(
        f,
        [
            f.zero(),
            f.one(),
            f.one(),
            f.zero(),
            c[0].clone(),
            c[1].clone(),
            f.one(),
            f.int(-1),
        ],
    )
}

/// `(α1, 0, 0, 0; 0, β2, 1−α1, 0)` with `c = (α1, β2)`.
fn t_a4(f: Field, c: &[Scalar]) -> Result<Msc> {
    let (a1, b2) = (&c[0], &c[1]);
    msc(
        f,
        [
            a1.clone(),
            f.zero(),
            f.zero(),
            f.zero(),
            f.zero(),
            b2.clone(),
            &f.one() - a1,
            f.zero(),
        ],
    )
}

/// `(α1, 0, 0, 0; 1, β2(α1), 1−α1, 0)` for the three characteristic variants
/// of `A5` (`2α1−1`, `1`, `−1−α1`).
fn t_a5_with(f: Field, a1: &Scalar, b2: Scalar) -> Result<Msc> {
    msc(
        f,
        [
            a1.clone(),
            f.zero(),
            f.zero(),
            f.zero(),
            f.one(),
            b2,
            &f.one() - a1,
            f.zero(),
        ],
    )
}

fn t_a5(f: Field, c: &[Scalar]) -> Result<Msc> {
    t_a5_with(f, &c[0], &(&f.int(2) * &c[0]) - &f.one())
}

fn t_a5_2(f: Field, c: &[Scalar]) -> Result<Msc> {
    t_a5_with(f, &c[0], f.one())
}

fn t_a5_3(f: Field, c: &[Scalar]) -> Result<Msc> {
    t_a5_with(f, &c[0], &f.int(-1) - &c[0])
}

/// `(α1, 0, 0, s; β1, 1−α1, −α1, 0)` with `c = (α1, β1)`.
fn t_a6_signed(f: Field, c: &[Scalar], s: i64) -> Result<Msc> {
    let (a1, b1) = (&c[0], &c[1]);
    msc(
        f,
        [
            a1.clone(),
            f.zero(),
            f.zero(),
            f.int(s),
            b1.clone(),
            &f.one() - a1,
            -a1,
            f.zero(),
        ],
    )
}

fn t_a6(f: Field, c: &[Scalar]) -> Result<Msc> {
    t_a6_signed(f, c, 1)
}

fn t_a6_neg(f: Field, c: &[Scalar]) -> Result<Msc> {
    t_a6_signed(f, c, -1)
}

/// `(0, 1, 1, 0; β1, 1, 0, −1)` with `c = (β1)`.
fn t_a7(f: Field, c: &[Scalar]) -> Result<Msc> {
    msc(
        f,
        [
            f.zero(),
            f.one(),
            f.one(),
            f.zero(),
            c[0].clone(),
            f.one(),
            f.zero(),
            f.int(-1),
        ],
    )
}

/// `(α1, 0, 0, 0; 0, 1−α1, −α1, 0)` with `c = (α1)`.
fn t_a8(f: Field, c: &[Scalar]) -> Result<Msc> {
    let a1 = &c[0];
    msc(
        f,
        [
            a1.clone(),
            f.zero(),
            f.zero(),
            f.zero(),
            f.zero(),
            &f.one() - a1,
            -a1,
            f.zero(),
        ],
    )
}

/// `(α1, 1, 1, 0; 0, β2, 1−α1, 1)` with `c = (α1, β2)`.
fn t_a3_2(f: Field, c: &[Scalar]) -> Result<Msc> {
    let (a1, b2) = (&c[0], &c[1]);
    msc(
        f,
        [
            a1.clone(),
            f.one(),
            f.one(),
            f.zero(),
            f.zero(),
            b2.clone(),
            &f.one() - a1,
            f.one(),
        ],
    )
}

/// `(α1, 1, 1, 0; 0, 1−α1, −α1, −1)` with `c = (α1)`.
fn t_a7_2(f: Field, c: &[Scalar]) -> Result<Msc> {
    let a1 = &c[0];
    msc(
        f,
        [
            a1.clone(),
            f.one(),
            f.one(),
            f.zero(),
            f.zero(),
            &f.one() - a1,
            -a1,
            f.int(-1),
        ],
    )
}

/// `(1/3, 0, 0, 0; 1, 2/3, −1/3, 0)`.
fn t_a9(f: Field, _: &[Scalar]) -> Result<Msc> {
    msc(
        f,
        [
            f.ratio(1, 3)?,
            f.zero(),
            f.zero(),
            f.zero(),
            f.one(),
            f.ratio(2, 3)?,
            f.ratio(-1, 3)?,
            f.zero(),
        ],
    )
}

fn ints(f: Field, e: [i64; 8]) -> Result<Msc> {
    Ok(Msc::from_ints(f, e))
}

fn t_a10(f: Field, _: &[Scalar]) -> Result<Msc> {
    ints(f, [0, 1, 1, 0, 0, 0, 0, -1])
}

fn t_a11(f: Field, _: &[Scalar]) -> Result<Msc> {
    ints(f, [0, 1, 1, 0, 1, 0, 0, -1])
}

fn t_a12(f: Field, _: &[Scalar]) -> Result<Msc> {
    ints(f, [0, 0, 0, 0, 1, 0, 0, 0])
}

fn t_a13_r(f: Field, _: &[Scalar]) -> Result<Msc> {
    ints(f, [0, 1, 1, 0, -1, 0, 0, -1])
}

fn t_a9_2(f: Field, _: &[Scalar]) -> Result<Msc> {
    ints(f, [1, 0, 0, 0, 1, 0, 1, 0])
}

fn t_a11_2(f: Field, _: &[Scalar]) -> Result<Msc> {
    ints(f, [1, 1, 1, 0, 0, -1, -1, -1])
}

fn t_a11_3(f: Field, _: &[Scalar]) -> Result<Msc> {
    ints(f, [1, 0, 0, 0, 1, -1, -1, 0])
}

fn any(_: &[Scalar]) -> bool {
    true
}

fn nonneg_second(p: &[Scalar]) -> bool {
    p[1].sign().is_none_or(|s| s.is_ge())
}

const P_A1: &[&str] = &["α1", "α2", "α4", "β1"];
const P_A2: &[&str] = &["α1", "β1", "β2"];
const P_B1B2: &[&str] = &["β1", "β2"];
const P_A1B2: &[&str] = &["α1", "β2"];
const P_A1B1: &[&str] = &["α1", "β1"];
const P_ALPHA1: &[&str] = &["α1"];
const P_BETA1: &[&str] = &["β1"];
const P_NONE: &[&str] = &[];

const T_A1: &str = "(α1, α2, α2+1, α4; β1, −α1, −α1+1, −α2)";
const T_A2: &str = "(α1, 0, 0, 1; β1, β2, 1−α1, 0)";
const T_A3: &str = "(0, 1, 1, 0; β1, β2, 1, −1)";
const T_A4: &str = "(α1, 0, 0, 0; 0, β2, 1−α1, 0)";
const T_A5: &str = "(α1, 0, 0, 0; 1, 2α1−1, 1−α1, 0)";
const T_A6: &str = "(α1, 0, 0, 1; β1, 1−α1, −α1, 0)";
const T_A7: &str = "(0, 1, 1, 0; β1, 1, 0, −1)";
const T_A8: &str = "(α1, 0, 0, 0; 0, 1−α1, −α1, 0)";
const T_A9: &str = "(1/3, 0, 0, 0; 1, 2/3, −1/3, 0)";
const T_A10: &str = "(0, 1, 1, 0; 0, 0, 0, −1)";
const T_A11: &str = "(0, 1, 1, 0; 1, 0, 0, −1)";
const T_A12: &str = "(0, 0, 0, 0; 1, 0, 0, 0)";

struct Fam {
    family: &'static str,
    params: &'static [&'static str],
    template: &'static str,
    constraint: &'static str,
    admissible: Admit,
    build: Build,
    sign_symmetric: Option<usize>,
}

fn full(class: CharClass, fams: Vec<Fam>) -> Vec<FamilySpec> {
    const IDENT: [usize; 4] = [0, 1, 2, 3];
    fams.into_iter()
        .map(|f| FamilySpec {
            family: f.family,
            char_class: class,
            label: f.family,
            params: f.params,
            positions: &IDENT[..f.params.len()],
            constraint: f.constraint,
            template: f.template,
            unital_side: UnitalSide::None,
            sign_symmetric: f.sign_symmetric,
            admissible: f.admissible,
            build: f.build,
            left_unit: None,
            right_unit: None,
        })
        .collect()
}

fn fam(
    family: &'static str,
    params: &'static [&'static str],
    template: &'static str,
    build: Build,
) -> Fam {
    Fam {
        family,
        params,
        template,
        constraint: "",
        admissible: any,
        build,
        sign_symmetric: None,
    }
}

fn families_not23() -> Vec<FamilySpec> {
    let mut a2 = fam("A2", P_A2, T_A2, t_a2);
    a2.sign_symmetric = Some(1);
    let mut a6 = fam("A6", P_A1B1, T_A6, t_a6);
    a6.sign_symmetric = Some(1);
    full(
        CharClass::Not23,
        vec![
            fam("A1", P_A1, T_A1, t_a1),
            a2,
            fam("A3", P_B1B2, T_A3, t_a3),
            fam("A4", P_A1B2, T_A4, t_a4),
            fam("A5", P_ALPHA1, T_A5, t_a5),
            a6,
            fam("A7", P_BETA1, T_A7, t_a7),
            fam("A8", P_ALPHA1, T_A8, t_a8),
            fam("A9", P_NONE, T_A9, t_a9),
            fam("A10", P_NONE, T_A10, t_a10),
            fam("A11", P_NONE, T_A11, t_a11),
            fam("A12", P_NONE, T_A12, t_a12),
        ],
    )
}

fn families_char2() -> Vec<FamilySpec> {
    full(
        CharClass::Char2,
        vec![
            fam("A1", P_A1, T_A1, t_a1),
            fam("A2", P_A2, T_A2, t_a2),
            fam("A3", P_A1B2, "(α1, 1, 1, 0; 0, β2, 1−α1, 1)", t_a3_2),
            fam("A4", P_A1B2, T_A4, t_a4),
            fam("A5", P_ALPHA1, "(α1, 0, 0, 0; 1, 1, 1−α1, 0)", t_a5_2),
            fam("A6", P_A1B1, T_A6, t_a6),
            fam("A7", P_ALPHA1, "(α1, 1, 1, 0; 0, 1−α1, −α1, −1)", t_a7_2),
            fam("A8", P_ALPHA1, T_A8, t_a8),
            fam("A9", P_NONE, "(1, 0, 0, 0; 1, 0, 1, 0)", t_a9_2),
            fam("A10", P_NONE, T_A10, t_a10),
            fam("A11", P_NONE, "(1, 1, 1, 0; 0, −1, −1, −1)", t_a11_2),
            fam("A12", P_NONE, T_A12, t_a12),
        ],
    )
}

fn families_char3() -> Vec<FamilySpec> {
    let mut a2 = fam("A2", P_A2, T_A2, t_a2);
    a2.sign_symmetric = Some(1);
    let mut a6 = fam("A6", P_A1B1, T_A6, t_a6);
    a6.sign_symmetric = Some(1);
    full(
        CharClass::Char3,
        vec![
            fam("A1", P_A1, T_A1, t_a1),
            a2,
            fam("A3", P_B1B2, T_A3, t_a3),
            fam("A4", P_A1B2, T_A4, t_a4),
            fam("A5", P_ALPHA1, "(α1, 0, 0, 0; 1, −1−α1, 1−α1, 0)", t_a5_3),
            a6,
            fam("A7", P_BETA1, T_A7, t_a7),
            fam("A8", P_ALPHA1, T_A8, t_a8),
            fam("A9", P_NONE, T_A11, t_a11),
            fam("A10", P_NONE, T_A10, t_a10),
            fam("A11", P_NONE, "(1, 0, 0, 0; 1, −1, −1, 0)", t_a11_3),
            fam("A12", P_NONE, T_A12, t_a12),
        ],
    )
}

fn families_real() -> Vec<FamilySpec> {
    let signed = |family, params, template, build| Fam {
        family,
        params,
        template,
        constraint: "β1 ≥ 0",
        admissible: nonneg_second,
        build,
        sign_symmetric: None,
    };
    full(
        CharClass::Real,
        vec![
            fam("A1", P_A1, T_A1, t_a1),
            signed("A2", P_A2, T_A2, t_a2),
            signed("A3", P_A2, "(α1, 0, 0, −1; β1, β2, 1−α1, 0)", t_a2_neg),
            fam("A4", P_B1B2, T_A3, t_a3),
            fam("A5", P_A1B2, T_A4, t_a4),
            fam("A6", P_ALPHA1, T_A5, t_a5),
            signed("A7", P_A1B1, T_A6, t_a6),
            signed("A8", P_A1B1, "(α1, 0, 0, −1; β1, 1−α1, −α1, 0)", t_a6_neg),
            fam("A9", P_BETA1, T_A7, t_a7),
            fam("A10", P_ALPHA1, T_A8, t_a8),
            fam("A11", P_NONE, T_A9, t_a9),
            fam("A12", P_NONE, T_A11, t_a11),
            fam("A13", P_NONE, "(0, 1, 1, 0; −1, 0, 0, −1)", t_a13_r),
            fam("A14", P_NONE, T_A10, t_a10),
            fam("A15", P_NONE, T_A12, t_a12),
        ],
    )
}

// ---------------------------------------------------------------------------
// table rows

struct Row {
    family: &'static str,
    label: &'static str,
    params: &'static [&'static str],
    positions: &'static [usize],
    constraint: &'static str,
    template: &'static str,
    admissible: Admit,
    build: Build,
    unit: (&'static str, UnitFormula),
}

fn rows(class: CharClass, side: UnitalSide, rows: Vec<Row>) -> Vec<FamilySpec> {
    rows.into_iter()
        .map(|r| FamilySpec {
            family: r.family,
            char_class: class,
            label: r.label,
            params: r.params,
            positions: r.positions,
            constraint: r.constraint,
            template: r.template,
            unital_side: side,
            sign_symmetric: None,
            admissible: r.admissible,
            build: r.build,
            left_unit: matches!(side, UnitalSide::Left | UnitalSide::TwoSided).then_some(r.unit),
            right_unit: matches!(side, UnitalSide::Right | UnitalSide::TwoSided).then_some(r.unit),
        })
        .collect()
}

fn nonzero_first(p: &[Scalar]) -> bool {
    !p[0].is_zero()
}

fn not_zero_or_one(p: &[Scalar]) -> bool {
    !p[0].is_zero() && !p[0].is_one()
}

fn both_nonzero(p: &[Scalar]) -> bool {
    !p[0].is_zero() && !p[1].is_zero()
}

fn nonzero_second(p: &[Scalar]) -> bool {
    !p[1].is_zero()
}

/// `α2 = α1(1−α1)/β1 − 1/2`, `α4 = α1(1−α1)²/β1² − (1−α1)/(2β1)`.
fn a1_left_generic(f: Field, p: &[Scalar]) -> Result<Msc> {
    let (a1, b1) = (&p[0], &p[1]);
    let inv = b1.inverse()?;
    let h = half(f)?;
    let om = &f.one() - a1;
    let a2 = &(&(a1 * &om) * &inv) - &h;
    let a4 = &(&(&(a1 * &om) * &om) * &(&inv * &inv)) - &(&(&om * &inv) * &h);
    t_a1(f, &[a1.clone(), a2, a4, b1.clone()])
}

fn a1_left_generic_unit(f: Field, p: &[Scalar]) -> Result<UnitSet> {
    let (a1, b1) = (&p[0], &p[1]);
    let t1 = &(&f.int(-2) * &(&f.one() - a1)) * &b1.inverse()?;
    point(t1, f.int(2))
}

/// `A1(1, α2, α2(2α2+1)/2, 0)`.
fn a1_left_special(f: Field, p: &[Scalar]) -> Result<Msc> {
    let a2 = &p[0];
    let a4 = &(a2 * &(&(&f.int(2) * a2) + &f.one())) * &half(f)?;
    t_a1(f, &[f.one(), a2.clone(), a4, f.zero()])
}

fn a1_left_special_unit(f: Field, p: &[Scalar]) -> Result<UnitSet> {
    let a2 = &p[0];
    point(-(&f.one() + &(&f.int(2) * a2)), f.int(2))
}

/// `α2 = α1(1−2α1)/(2β1)`, `α4 = −α1²(1−2α1)/(2β1²) − α1/β1`.
fn a1_right_generic(f: Field, p: &[Scalar]) -> Result<Msc> {
    let (a1, b1) = (&p[0], &p[1]);
    let inv = b1.inverse()?;
    let h = half(f)?;
    let om2 = &f.one() - &(&f.int(2) * a1);
    let a2 = &(&(a1 * &om2) * &inv) * &h;
    let a4 = &(-&(&(&(&(a1 * a1) * &om2) * &(&inv * &inv)) * &h)) - &(a1 * &inv);
    t_a1(f, &[a1.clone(), a2, a4, b1.clone()])
}

fn a1_right_generic_unit(f: Field, p: &[Scalar]) -> Result<UnitSet> {
    let (a1, b1) = (&p[0], &p[1]);
    point(f.int(2), &(&f.int(2) * b1) * &a1.inverse()?)
}

/// `A1(0, α2, −2α2(1+α2), 0)`.
fn a1_right_special(f: Field, p: &[Scalar]) -> Result<Msc> {
    let a2 = &p[0];
    let a4 = &(&f.int(-2) * a2) * &(&f.one() + a2);
    t_a1(f, &[f.zero(), a2.clone(), a4, f.zero()])
}

fn a1_right_special_admissible(p: &[Scalar]) -> bool {
    let one = Field::one(p[0].field());
    !(&p[0] * &(&one + &p[0])).is_zero()
}

fn a1_right_special_unit(f: Field, p: &[Scalar]) -> Result<UnitSet> {
    point(f.int(2), p[0].inverse()?)
}

/// `A1(1/2, −1, α4, 0)`.
fn a1_right_half(f: Field, p: &[Scalar]) -> Result<Msc> {
    t_a1(f, &[half(f)?, f.int(-1), p[0].clone(), f.zero()])
}

fn two_e1(f: Field, _: &[Scalar]) -> Result<UnitSet> {
    point_ints(f, 2, 0)
}

fn inv_first_e1(f: Field, p: &[Scalar]) -> Result<UnitSet> {
    inv_e1(f, &p[0])
}

fn e2(f: Field, _: &[Scalar]) -> Result<UnitSet> {
    point_ints(f, 0, 1)
}

fn e1_plus_t_e2(f: Field, _: &[Scalar]) -> Result<UnitSet> {
    line_ints(f, (1, 0), (0, 1))
}

fn two_e1_plus_t_e2(f: Field, _: &[Scalar]) -> Result<UnitSet> {
    line_ints(f, (2, 0), (0, 1))
}

const L1_LABEL: &str = "A1(α1, α1(1−α1)/β1 − 1/2, α1(1−α1)²/β1² − (1−α1)/(2β1), β1)";
const L1_TEMPLATE: &str = "(α1, (2α1−2α1²−β1)/(2β1), (2α1−2α1²+β1)/(2β1), (2α1−4α1²+2α1³−β1+α1β1)/(2β1²); β1, −α1, 1−α1, (−2α1+2α1²+β1)/(2β1))";
const L1_UNIT: &str = "−2(1−α1)/β1 e1 + 2e2";
const L2_LABEL: &str = "A1(1, α2, α2(2α2+1)/2, 0)";
const L2_TEMPLATE: &str = "(1, α2, 1+α2, (α2+2α2²)/2; 0, −1, 0, −α2)";
const L2_UNIT: &str = "−(1+2α2)e1 + 2e2";
const R1_LABEL: &str = "A1(α1, α1(1−2α1)/(2β1), −α1²(1−2α1)/(2β1²) − α1/β1, β1)";
const R1_UNIT: &str = "2e1 + 2β1/α1 e2";
const R2_LABEL: &str = "A1(0, α2, −2α2(1+α2), 0)";
const R2_UNIT: &str = "2e1 + 1/α2 e2";
const R3_LABEL: &str = "A1(1/2, −1, α4, 0)";

fn a1_left_rows() -> [Row; 2] {
    [
        Row {
            family: "A1",
            label: L1_LABEL,
            params: &["α1", "β1"],
            positions: &[0, 3],
            constraint: "β1 ≠ 0",
            template: L1_TEMPLATE,
            admissible: nonzero_second,
            build: a1_left_generic,
            unit: (L1_UNIT, a1_left_generic_unit),
        },
        Row {
            family: "A1",
            label: L2_LABEL,
            params: &["α2"],
            positions: &[1],
            constraint: "",
            template: L2_TEMPLATE,
            admissible: any,
            build: a1_left_special,
            unit: (L2_UNIT, a1_left_special_unit),
        },
    ]
}

fn a1_right_rows() -> [Row; 3] {
    [
        Row {
            family: "A1",
            label: R1_LABEL,
            params: &["α1", "β1"],
            positions: &[0, 3],
            constraint: "α1β1 ≠ 0",
            template: T_A1,
            admissible: both_nonzero,
            build: a1_right_generic,
            unit: (R1_UNIT, a1_right_generic_unit),
        },
        Row {
            family: "A1",
            label: R2_LABEL,
            params: &["α2"],
            positions: &[1],
            constraint: "α2(1+α2) ≠ 0",
            template: "(0, α2, α2+1, −2α2(1+α2); 0, 0, 1, −α2)",
            admissible: a1_right_special_admissible,
            build: a1_right_special,
            unit: (R2_UNIT, a1_right_special_unit),
        },
        Row {
            family: "A1",
            label: R3_LABEL,
            params: &["α4"],
            positions: &[2],
            constraint: "",
            template: "(1/2, −1, 0, α4; 0, −1/2, 1/2, 1)",
            admissible: any,
            build: a1_right_half,
            unit: ("2e1", two_e1),
        },
    ]
}

fn left_rows_not2(class: CharClass) -> Vec<FamilySpec> {
    let mut v: Vec<Row> = a1_left_rows().into();
    v.extend([
        Row {
            family: "A2",
            label: "A2(α1, 0, α1)",
            params: P_ALPHA1,
            positions: &[0],
            constraint: "α1 ≠ 0",
            template: "(α1, 0, 0, 1; 0, α1, 1−α1, 0)",
            admissible: nonzero_first,
            build: |f, p| t_a2(f, &[p[0].clone(), f.zero(), p[0].clone()]),
            unit: ("1/α1 e1", inv_first_e1),
        },
        Row {
            family: "A4",
            label: "A4(1, 1)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1, 0, 0, 0; 0, 1, 0, 0)",
            admissible: any,
            build: |f, _| t_a4(f, &[f.one(), f.one()]),
            unit: ("e1 + t e2", e1_plus_t_e2),
        },
        Row {
            family: "A4",
            label: "A4(α1, α1)",
            params: P_ALPHA1,
            positions: &[0],
            constraint: "α1 ≠ 0, 1",
            template: "(α1, 0, 0, 0; 0, α1, 1−α1, 0)",
            admissible: not_zero_or_one,
            build: |f, p| t_a4(f, &[p[0].clone(), p[0].clone()]),
            unit: ("1/α1 e1", inv_first_e1),
        },
        Row {
            family: "A6",
            label: "A6(1/2, 0)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1/2, 0, 0, 1; 0, 1/2, −1/2, 0)",
            admissible: any,
            build: |f, _| t_a6(f, &[half(f)?, f.zero()]),
            unit: ("2e1", two_e1),
        },
        Row {
            family: "A8",
            label: "A8(1/2)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1/2, 0, 0, 0; 0, 1/2, −1/2, 0)",
            admissible: any,
            build: |f, _| t_a8(f, &[half(f)?]),
            unit: ("2e1", two_e1),
        },
    ]);
    rows(class, UnitalSide::Left, v)
}

fn right_rows_not2(class: CharClass) -> Vec<FamilySpec> {
    let mut v: Vec<Row> = a1_right_rows().into();
    v.extend([
        Row {
            family: "A2",
            label: "A2(1/2, 0, β2)",
            params: &["β2"],
            positions: &[2],
            constraint: "",
            template: "(1/2, 0, 0, 1; 0, β2, 1/2, 0)",
            admissible: any,
            build: |f, p| t_a2(f, &[half(f)?, f.zero(), p[0].clone()]),
            unit: ("2e1", two_e1),
        },
        Row {
            family: "A4",
            label: "A4(1/2, 0)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1/2, 0, 0, 0; 0, 0, 1/2, 0)",
            admissible: any,
            build: |f, _| t_a4(f, &[half(f)?, f.zero()]),
            unit: ("2e1 + t e2", two_e1_plus_t_e2),
        },
        Row {
            family: "A4",
            label: "A4(1/2, β2)",
            params: &["β2"],
            positions: &[1],
            constraint: "β2 ≠ 0",
            template: "(1/2, 0, 0, 0; 0, β2, 1/2, 0)",
            admissible: nonzero_first,
            build: |f, p| t_a4(f, &[half(f)?, p[0].clone()]),
            unit: ("2e1", two_e1),
        },
    ]);
    rows(class, UnitalSide::Right, v)
}

fn unital_rows_not2(class: CharClass) -> Vec<FamilySpec> {
    rows(
        class,
        UnitalSide::TwoSided,
        vec![
            Row {
                family: "A2",
                label: "A2(1/2, 0, 1/2)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(1/2, 0, 0, 1; 0, 1/2, 1/2, 0)",
                admissible: any,
                build: |f, _| t_a2(f, &[half(f)?, f.zero(), half(f)?]),
                unit: ("2e1", two_e1),
            },
            Row {
                family: "A4",
                label: "A4(1/2, 1/2)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(1/2, 0, 0, 0; 0, 1/2, 1/2, 0)",
                admissible: any,
                build: |f, _| t_a4(f, &[half(f)?, half(f)?]),
                unit: ("2e1", two_e1),
            },
        ],
    )
}

fn left_rows_char2() -> Vec<FamilySpec> {
    rows(
        CharClass::Char2,
        UnitalSide::Left,
        vec![
            Row {
                family: "A1",
                label: "A1,2(α1, 0, α4, 0)",
                params: &["α1", "α4"],
                positions: &[0, 2],
                constraint: "α1 ≠ 0",
                template: "(α1, 0, 1, α4; 0, −α1, 1−α1, 0)",
                admissible: nonzero_first,
                build: |f, p| t_a1(f, &[p[0].clone(), f.zero(), p[1].clone(), f.zero()]),
                unit: ("1/α1 e1", inv_first_e1),
            },
            Row {
                family: "A2",
                label: "A2,2(α1, 0, α1)",
                params: P_ALPHA1,
                positions: &[0],
                constraint: "α1 ≠ 0",
                template: "(α1, 0, 0, 1; 0, α1, 1−α1, 0)",
                admissible: nonzero_first,
                build: |f, p| t_a2(f, &[p[0].clone(), f.zero(), p[0].clone()]),
                unit: ("1/α1 e1", inv_first_e1),
            },
            Row {
                family: "A3",
                label: "A3,2(1, β2)",
                params: &["β2"],
                positions: &[1],
                constraint: "",
                template: "(1, 1, 1, 0; 0, β2, 0, 1)",
                admissible: any,
                build: |f, p| t_a3_2(f, &[f.one(), p[0].clone()]),
                unit: ("e2", e2),
            },
            Row {
                family: "A4",
                label: "A4,2(1, 1)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(1, 0, 0, 0; 0, 1, 0, 0)",
                admissible: any,
                build: |f, _| t_a4(f, &[f.one(), f.one()]),
                unit: ("e1 + t e2", e1_plus_t_e2),
            },
            Row {
                family: "A4",
                label: "A4,2(α1, α1)",
                params: P_ALPHA1,
                positions: &[0],
                constraint: "α1 ≠ 0, 1",
                template: "(α1, 0, 0, 0; 0, α1, 1−α1, 0)",
                admissible: not_zero_or_one,
                build: |f, p| t_a4(f, &[p[0].clone(), p[0].clone()]),
                unit: ("1/α1 e1", inv_first_e1),
            },
            Row {
                family: "A7",
                label: "A7,2(0)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(0, 1, 1, 0; 0, 1, 0, −1)",
                admissible: any,
                build: |f, _| t_a7_2(f, &[f.zero()]),
                unit: ("e2", e2),
            },
            Row {
                family: "A10",
                label: "A10,2",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(0, 1, 1, 0; 0, 0, 0, 1)",
                admissible: any,
                build: t_a10,
                unit: ("e2", e2),
            },
        ],
    )
}

fn right_rows_char2() -> Vec<FamilySpec> {
    rows(
        CharClass::Char2,
        UnitalSide::Right,
        vec![
            Row {
                family: "A1",
                label: "A1,2(0, α2, 0, β1)",
                params: &["α2", "β1"],
                positions: &[1, 3],
                constraint: "α2 ≠ 0",
                template: "(0, α2, α2+1, 0; β1, 0, 1, −α2)",
                admissible: nonzero_first,
                build: |f, p| t_a1(f, &[f.zero(), p[0].clone(), f.zero(), p[1].clone()]),
                unit: ("1/α2 e2", |f, p| point(f.zero(), p[0].inverse()?)),
            },
            Row {
                family: "A3",
                label: "A3,2(α1, 0)",
                params: P_ALPHA1,
                positions: &[0],
                constraint: "",
                template: "(α1, 1, 1, 0; 0, 0, 1−α1, 1)",
                admissible: any,
                build: |f, p| t_a3_2(f, &[p[0].clone(), f.zero()]),
                unit: ("e2", e2),
            },
            Row {
                family: "A6",
                label: "A6,2(α1, 0)",
                params: P_ALPHA1,
                positions: &[0],
                constraint: "α1 ≠ 0",
                template: "(α1, 0, 0, 1; 0, 1−α1, −α1, 0)",
                admissible: nonzero_first,
                build: |f, p| t_a6(f, &[p[0].clone(), f.zero()]),
                unit: ("1/α1 e1", inv_first_e1),
            },
            Row {
                family: "A7",
                label: "A7,2(1)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(1, 1, 1, 0; 0, 0, −1, −1)",
                admissible: any,
                build: |f, _| t_a7_2(f, &[f.one()]),
                unit: ("e2", e2),
            },
            Row {
                family: "A8",
                label: "A8,2(1)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(1, 0, 0, 0; 0, 0, −1, 0)",
                admissible: any,
                build: |f, _| t_a8(f, &[f.one()]),
                unit: ("e1 + t e2", e1_plus_t_e2),
            },
            Row {
                family: "A8",
                label: "A8,2(α1)",
                params: P_ALPHA1,
                positions: &[0],
                constraint: "α1 ≠ 0, 1",
                template: T_A8,
                admissible: not_zero_or_one,
                // the printed table gives e1 here; solving the system gives α1⁻¹ e1
                build: t_a8,
                unit: ("1/α1 e1", inv_first_e1),
            },
            Row {
                family: "A10",
                label: "A10,2",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(0, 1, 1, 0; 0, 0, 0, 1)",
                admissible: any,
                build: t_a10,
                unit: ("e2", e2),
            },
        ],
    )
}

fn unital_rows_char2() -> Vec<FamilySpec> {
    rows(
        CharClass::Char2,
        UnitalSide::TwoSided,
        vec![Row {
            family: "A10",
            label: "A10,2",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(0, 1, 1, 0; 0, 0, 0, 1)",
            admissible: any,
            build: t_a10,
            unit: ("e2", e2),
        }],
    )
}

fn left_rows_real() -> Vec<FamilySpec> {
    let mut v: Vec<Row> = a1_left_rows().into();
    v.extend([
        Row {
            family: "A2",
            label: "A2,r(α1, 0, α1)",
            params: P_ALPHA1,
            positions: &[0],
            constraint: "α1 ≠ 0",
            template: "(α1, 0, 0, 1; 0, α1, 1−α1, 0)",
            admissible: nonzero_first,
            build: |f, p| t_a2(f, &[p[0].clone(), f.zero(), p[0].clone()]),
            unit: ("1/α1 e1", inv_first_e1),
        },
        Row {
            family: "A3",
            label: "A3,r(α1, 0, α1)",
            params: P_ALPHA1,
            positions: &[0],
            constraint: "α1 ≠ 0",
            template: "(α1, 0, 0, −1; 0, α1, 1−α1, 0)",
            admissible: nonzero_first,
            build: |f, p| t_a2_neg(f, &[p[0].clone(), f.zero(), p[0].clone()]),
            unit: ("1/α1 e1", inv_first_e1),
        },
        Row {
            family: "A5",
            label: "A5,r(1, 1)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1, 0, 0, 0; 0, 1, 0, 0)",
            admissible: any,
            build: |f, _| t_a4(f, &[f.one(), f.one()]),
            unit: ("e1 + t e2", e1_plus_t_e2),
        },
        Row {
            family: "A5",
            label: "A5,r(α1, α1)",
            params: P_ALPHA1,
            positions: &[0],
            constraint: "α1 ≠ 0, 1",
            template: "(α1, 0, 0, 0; 0, α1, 1−α1, 0)",
            admissible: not_zero_or_one,
            build: |f, p| t_a4(f, &[p[0].clone(), p[0].clone()]),
            unit: ("1/α1 e1", inv_first_e1),
        },
        Row {
            family: "A7",
            label: "A7,r(1/2, 0)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1/2, 0, 0, 1; 0, 1/2, −1/2, 0)",
            admissible: any,
            build: |f, _| t_a6(f, &[half(f)?, f.zero()]),
            unit: ("2e1", two_e1),
        },
        Row {
            family: "A8",
            label: "A8,r(1/2, 0)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1/2, 0, 0, −1; 0, 1/2, −1/2, 0)",
            admissible: any,
            build: |f, _| t_a6_neg(f, &[half(f)?, f.zero()]),
            unit: ("2e1", two_e1),
        },
        Row {
            family: "A10",
            label: "A10,r(1/2)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1/2, 0, 0, 0; 0, 1/2, −1/2, 0)",
            admissible: any,
            build: |f, _| t_a8(f, &[half(f)?]),
            unit: ("2e1", two_e1),
        },
    ]);
    rows(CharClass::Real, UnitalSide::Left, v)
}

fn right_rows_real() -> Vec<FamilySpec> {
    let mut v: Vec<Row> = a1_right_rows().into();
    v.extend([
        Row {
            family: "A2",
            label: "A2,r(1/2, 0, β2)",
            params: &["β2"],
            positions: &[2],
            constraint: "",
            template: "(1/2, 0, 0, 1; 0, β2, 1/2, 0)",
            admissible: any,
            build: |f, p| t_a2(f, &[half(f)?, f.zero(), p[0].clone()]),
            unit: ("2e1", two_e1),
        },
        Row {
            family: "A3",
            label: "A3,r(1/2, 0, β2)",
            params: &["β2"],
            positions: &[2],
            constraint: "",
            template: "(1/2, 0, 0, −1; 0, β2, 1/2, 0)",
            admissible: any,
            build: |f, p| t_a2_neg(f, &[half(f)?, f.zero(), p[0].clone()]),
            unit: ("2e1", two_e1),
        },
        Row {
            family: "A5",
            label: "A5,r(1/2, 0)",
            params: P_NONE,
            positions: &[],
            constraint: "",
            template: "(1/2, 0, 0, 0; 0, 0, 1/2, 0)",
            admissible: any,
            build: |f, _| t_a4(f, &[half(f)?, f.zero()]),
            unit: ("2e1 + t e2", two_e1_plus_t_e2),
        },
        Row {
            family: "A5",
            label: "A5,r(1/2, β2)",
            params: &["β2"],
            positions: &[1],
            constraint: "β2 ≠ 0",
            template: "(1/2, 0, 0, 0; 0, β2, 1/2, 0)",
            admissible: nonzero_first,
            build: |f, p| t_a4(f, &[half(f)?, p[0].clone()]),
            unit: ("2e1", two_e1),
        },
    ]);
    rows(CharClass::Real, UnitalSide::Right, v)
}

fn unital_rows_real() -> Vec<FamilySpec> {
    rows(
        CharClass::Real,
        UnitalSide::TwoSided,
        vec![
            Row {
                family: "A2",
                label: "A2,r(1/2, 0, 1/2)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(1/2, 0, 0, 1; 0, 1/2, 1/2, 0)",
                admissible: any,
                build: |f, _| t_a2(f, &[half(f)?, f.zero(), half(f)?]),
                unit: ("2e1", two_e1),
            },
            Row {
                family: "A3",
                label: "A3,r(1/2, 0, 1/2)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(1/2, 0, 0, −1; 0, 1/2, 1/2, 0)",
                admissible: any,
                build: |f, _| t_a2_neg(f, &[half(f)?, f.zero(), half(f)?]),
                unit: ("2e1", two_e1),
            },
            Row {
                family: "A5",
                label: "A5,r(1/2, 1/2)",
                params: P_NONE,
                positions: &[],
                constraint: "",
                template: "(1/2, 0, 0, 0; 0, 1/2, 1/2, 0)",
                admissible: any,
                build: |f, _| t_a4(f, &[half(f)?, half(f)?]),
                unit: ("2e1", two_e1),
            },
        ],
    )
}

/// Instantiates the unital row with the given label (e.g. `A3,r(1/2, 0, 1/2)`).
pub fn unital_algebra(class: CharClass, label: &str) -> Result<Msc> {
    let spec = enumerate_catalog(class, CatalogKind::Unital)
        .into_iter()
        .find(|s| s.label == label)
        .ok_or_else(|| Error::UnknownFamily(label.to_string()))?;
    spec.instantiate(class.default_field(), &[])
}
