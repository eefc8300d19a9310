//! Exact scalars over the rationals and prime fields.
//!
//! Every other module is written against [`Scalar`] and [`Field`], so the
//! same code runs over ℚ (the exact stand-in for ℝ) and over GF(p).
//!
//! Arithmetic operators (`+`, `-`, `*`, unary `-`) panic when the operands
//! come from different fields; the public entry points of the algebra
//! modules check field agreement up front and report
//! [`Error::FieldMismatch`] instead. The `checked_*` methods never panic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field descriptor: ℚ or GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// GF(p). Rejects composite moduli and moduli that do not fit in 32 bits.
    pub fn gf(p: u64) -> Result<Field> {
        if p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => u64::from(p),
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(u64::from(p)),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                residue: i64::rem_euclid(n, i64::from(p)) as u32,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field. Fails when `den` vanishes in the field,
    /// e.g. `1/3` over GF(3).
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.int(den);
        if d.is_zero() {
            return match self {
                Field::Rational => Err(Error::DivisionByZero),
                Field::Prime(p) => Err(Error::Characteristic(format!(
                    "{num}/{den} is undefined in characteristic {p}"
                ))),
            };
        }
        self.int(num).checked_div(&d)
    }

    /// Parses the text form: `a/b` or `a` over ℚ, a decimal integer reduced
    /// mod p over GF(p).
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let s = text.trim();
        let bad = |message: String| Error::Parse {
            position: 0,
            message,
        };
        match self {
            Field::Rational => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let n: BigInt = n
                    .parse()
                    .map_err(|_| bad(format!("malformed rational {s:?}")))?;
                let d: BigInt = d
                    .parse()
                    .map_err(|_| bad(format!("malformed rational {s:?}")))?;
                if d.is_zero() {
                    return Err(bad(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime(p) => {
                let n: BigInt = s
                    .parse()
                    .map_err(|_| bad(format!("malformed integer {s:?} for GF({p})")))?;
                let r = n.mod_floor(&BigInt::from(p));
                let residue = u32::try_from(r).expect("residue below modulus");
                Ok(Scalar::Prime {
                    residue,
                    modulus: p,
                })
            }
        }
    }

    /// All elements of GF(p) in residue order. `None` for ℚ.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(move |residue| Scalar::Prime {
                residue,
                modulus: p,
            })),
        }
    }

    /// Random element. Over ℚ the numerator is drawn from `-9..=9` and the
    /// denominator from `1..=5`, which keeps sampled entries small while still
    /// producing non-integers.
    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        match self {
            Field::Rational => {
                let n: i64 = rng.gen_range(-9..=9);
                let d: i64 = rng.gen_range(1..=5);
                Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            Field::Prime(p) => Scalar::Prime {
                residue: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }

    /// Random nonzero element.
    pub fn sample_nonzero<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        loop {
            let x = self.sample(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q`/`Q`, `gfP`, `GF(P)`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rational" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("gf"))
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown field {s:?} (expected q or gfP)"),
            })?;
        let p: u64 = digits.parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("bad modulus in {s:?}"),
        })?;
        Field::gf(p)
    }
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator; GF(p)
/// residues are always reduced. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { residue: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { residue, .. } => *residue == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Prime { residue, .. } => Some(*residue),
        }
    }

    /// Sign comparison against zero; only defined over ℚ.
    pub fn sign(&self) -> Option<Ordering> {
        self.as_rational().map(|q| q.cmp(&BigRational::zero()))
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        let (l, r) = (self.field(), other.field());
        if l == r {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: l, right: r })
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self * &rhs.inverse()?)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { residue, modulus } => {
                // Fermat: x^(p-2) = x^-1
                let p = u64::from(*modulus);
                let mut base = u64::from(*residue);
                let mut exp = p - 2;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Prime {
                    residue: acc as u32,
                    modulus: *modulus,
                }
            }
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { residue, .. } => write!(f, "{residue}"),
        }
    }
}

#[track_caller]
fn mismatch(l: &Scalar, r: &Scalar) -> ! {
    panic!(
        "scalar arithmetic across fields: {} and {}",
        l.field(),
        r.field()
    )
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Prime {
                    residue: a,
                    modulus,
                },
                Scalar::Prime {
                    residue: b,
                    modulus: q,
                },
            ) if modulus == q => Scalar::Prime {
                residue: ((u64::from(*a) + u64::from(*b)) % u64::from(*modulus)) as u32,
                modulus: *modulus,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (
                Scalar::Prime {
                    residue: a,
                    modulus,
                },
                Scalar::Prime {
                    residue: b,
                    modulus: q,
                },
            ) if modulus == q => Scalar::Prime {
                residue: ((u64::from(*a) + u64::from(*modulus) - u64::from(*b))
                    % u64::from(*modulus)) as u32,
                modulus: *modulus,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Prime {
                    residue: a,
                    modulus,
                },
                Scalar::Prime {
                    residue: b,
                    modulus: q,
                },
            ) if modulus == q => Scalar::Prime {
                residue: (u64::from(*a) * u64::from(*b) % u64::from(*modulus)) as u32,
                modulus: *modulus,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

/// `|numerator|` and denominator are coprime with positive denominator.
pub fn is_normalized(q: &BigRational) -> bool {
    q.denom().is_positive() && q.numer().abs().gcd(q.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rational.ratio(n, d).unwrap()
    }

    #[test]
    fn gf7_addition_wraps() {
        let f = Field::gf(7).unwrap();
        assert_eq!(f.int(3) + f.int(5), f.int(1));
    }

    #[test]
    fn rational_addition() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn composite_modulus_rejected() {
        let err = Field::gf(4).unwrap_err();
        assert_eq!(err, Error::NotPrime(4));
        assert!(err.to_string().contains("modulus not prime"));
        assert!(Field::gf(1).is_err());
        assert!(Field::gf(0).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(q(2, 3).inverse().unwrap(), q(3, 2));
        let f5 = Field::gf(5).unwrap();
        assert_eq!(f5.int(2).inverse().unwrap(), f5.int(3));
        assert_eq!(q(0, 1).inverse(), Err(Error::DivisionByZero));
        assert_eq!(f5.zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn characteristic() {
        assert_eq!(Field::Rational.characteristic(), 0);
        assert_eq!(Field::gf(3).unwrap().characteristic(), 3);
    }

    #[test]
    fn p_times_x_vanishes() {
        for p in [2u64, 3, 5, 7] {
            let f = Field::gf(p).unwrap();
            for x in f.elements().unwrap() {
                let mut acc = f.zero();
                for _ in 0..p {
                    acc = acc + &x;
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn mixed_fields_are_rejected_by_checked_ops() {
        let a = q(1, 2);
        let b = Field::gf(5).unwrap().int(1);
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::FieldMismatch { .. })
        ));
        let c = Field::gf(7).unwrap().int(1);
        assert!(matches!(
            b.checked_mul(&c),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    #[should_panic(expected = "across fields")]
    fn mixed_fields_panic_in_operators() {
        let _ = q(1, 2) + Field::gf(5).unwrap().int(1);
    }

    #[test]
    fn ratio_refuses_vanishing_denominator() {
        let f3 = Field::gf(3).unwrap();
        assert!(matches!(f3.ratio(1, 3), Err(Error::Characteristic(_))));
        assert_eq!(f3.ratio(1, 2).unwrap(), f3.int(2));
    }

    #[test]
    fn text_form() {
        assert_eq!(Field::Rational.parse(" -4/6 ").unwrap(), q(-2, 3));
        assert_eq!(Field::Rational.parse("7").unwrap(), q(7, 1));
        assert_eq!(q(-2, 3).to_string(), "-2/3");
        assert_eq!(q(4, 2).to_string(), "2");
        let f5 = Field::gf(5).unwrap();
        assert_eq!(f5.parse("-1").unwrap(), f5.int(4));
        assert_eq!(f5.parse("12").unwrap().to_string(), "2");
        assert!(Field::Rational.parse("1/0").is_err());
        assert!(Field::Rational.parse("1.5").is_err());
        assert!(f5.parse("1/2").is_err());
    }

    #[test]
    fn field_names() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("gf5".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!("GF(3)".parse::<Field>().unwrap(), Field::Prime(3));
        assert!("gf6".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
    }

    fn rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| q(n, d))
    }

    fn residue(p: u32) -> impl Strategy<Value = Scalar> {
        (0..p).prop_map(move |r| Field::Prime(p).int(i64::from(r)))
    }

    fn check_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
        let f = a.field();
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(a + b, b + a);
        assert_eq!(a * b, b * a);
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        assert_eq!(a + &(-a), f.zero());
        assert_eq!(a - b, a + &(-b));
        assert_eq!(a * &f.one(), a.clone());
        assert_eq!(a + &f.zero(), a.clone());
        if !a.is_zero() {
            assert_eq!(a * &a.inverse().unwrap(), f.one());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
            check_axioms(&a, &b, &c);
            for x in [&a + &b, &a - &b, &a * &b, -&a] {
                prop_assert!(is_normalized(x.as_rational().unwrap()));
            }
            if !b.is_zero() {
                let d = a.checked_div(&b).unwrap();
                prop_assert!(is_normalized(d.as_rational().unwrap()));
            }
        }

        #[test]
        fn gf2_field_axioms(a in residue(2), b in residue(2), c in residue(2)) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn gf3_field_axioms(a in residue(3), b in residue(3), c in residue(3)) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn gf7_field_axioms(a in residue(7), b in residue(7), c in residue(7)) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn large_prime_field_axioms(a in residue(65_521), b in residue(65_521), c in residue(65_521)) {
            check_axioms(&a, &b, &c);
        }
    }
}
