//! Isomorphism checks, brute-force search over GL(2,p), orbit censuses and
//! the division-algebra test over ℚ.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    left_mult_operator, multiply, right_mult_operator, transform, transform_with_inverse, Mat2,
    Msc, Vec2,
};
use crate::catalog::complex_msc;
use crate::error::{Error, Result};
use crate::exact_fields::{Field, Scalar};
use crate::linalg;
use crate::units::{brute_force_units, find_two_sided_unit, Side, UnitKind, UnitSet};

/// Primes accepted by [`find_isomorphism_bruteforce`].
pub const SEARCH_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// `transform(a, g) == b`.
pub fn verify_isomorphism(a: &Msc, b: &Msc, g: &Mat2) -> Result<bool> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch {
            left: a.field(),
            right: b.field(),
        });
    }
    Ok(transform(a, g)? == *b)
}

/// `|GL(2,p)| = (p²−1)(p²−p)`.
pub fn gl2_order(p: u32) -> u64 {
    let p = u64::from(p);
    (p * p - 1) * (p * p - p)
}

/// Every invertible 2×2 matrix over GF(p), in lexicographic order of
/// `(a11, a12, a21, a22)` residues.
pub fn gl2_elements(field: Field) -> Result<Vec<Mat2>> {
    let Field::Prime(p) = field else {
        return Err(Error::UnsupportedField {
            field,
            operation: "GL(2) enumeration",
        });
    };
    let p = i64::from(p);
    let mut out = Vec::with_capacity(gl2_order(p as u32) as usize);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = Mat2::from_ints(field, [a, b, c, d]);
                    if m.is_invertible() {
                        out.push(m);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn search_field(a: &Msc, b: &Msc) -> Result<Field> {
    let f = a.field();
    if b.field() != f {
        return Err(Error::FieldMismatch {
            left: f,
            right: b.field(),
        });
    }
    match f {
        Field::Prime(p) if SEARCH_PRIMES.contains(&p) => Ok(f),
        _ => Err(Error::UnsupportedField {
            field: f,
            operation: "brute-force isomorphism search",
        }),
    }
}

/// First `g` in [`gl2_elements`] order with `transform(a, g) == b`.
pub fn find_isomorphism_bruteforce(a: &Msc, b: &Msc) -> Result<Option<Mat2>> {
    let f = search_field(a, b)?;
    for g in gl2_elements(f)? {
        let g_inv = g.inverse()?;
        if transform_with_inverse(a, &g, &g_inv) == *b {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    /// Member with the smallest index, in MSC text form.
    pub representative: String,
    pub representative_index: u64,
    pub size: u64,
    pub left_unit_kind: UnitKind,
    pub right_unit_kind: UnitKind,
    pub two_sided: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub p: u32,
    pub total_msc_count: u64,
    pub group_order: u64,
    /// From union-find.
    pub orbit_count: u64,
    /// From Burnside's lemma over the fixed-point systems.
    pub burnside_orbit_count: u64,
    /// Sorted by representative index.
    pub orbits: Vec<Orbit>,
}

fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&a| {
            let mut x = 1u64;
            for k in 1..p - 1 {
                x = x * u64::from(a) % u64::from(p);
                if x == 1 && k < p - 1 {
                    return false;
                }
            }
            true
        })
        .expect("every prime has a primitive root")
}

/// Two transvections and `diag(ω, 1)` for a primitive root `ω`; together
/// they generate GL(2,p).
pub fn gl2_generators(field: Field) -> Result<Vec<Mat2>> {
    let Field::Prime(p) = field else {
        return Err(Error::UnsupportedField {
            field,
            operation: "GL(2) generators",
        });
    };
    Ok(vec![
        Mat2::from_ints(field, [1, 1, 0, 1]),
        Mat2::from_ints(field, [1, 0, 1, 1]),
        Mat2::from_ints(field, [i64::from(primitive_root(p)), 0, 0, 1]),
    ])
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    /// The smaller root wins, so each root is its class minimum.
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Number of MSCs fixed by `g`: `p^(8 − rank)` of the linear system
/// `g·A − A·(g ⊗ g) = 0` in the eight entries of `A`.
pub fn fixed_point_count(g: &Mat2) -> Result<u64> {
    let f = g.field();
    let Some(p) = f.order() else {
        return Err(Error::UnsupportedField {
            field: f,
            operation: "fixed-point count",
        });
    };
    let gm = |r: usize, c: usize| g.get(r + 1, c + 1).clone();
    let kk = |t: usize, c: usize| &gm(t / 2, c / 2) * &gm(t % 2, c % 2);
    // row (r, c) of the output, column (s, t) of the unknown A
    let mut rows = Vec::with_capacity(8);
    for r in 0..2 {
        for c in 0..4 {
            let mut row = Vec::with_capacity(8);
            for s in 0..2 {
                for t in 0..4 {
                    let mut x = f.zero();
                    if t == c {
                        x = &x + &gm(r, s);
                    }
                    if s == r {
                        x = &x - &kk(t, c);
                    }
                    row.push(x);
                }
            }
            rows.push(row);
        }
    }
    let rank = linalg::rank(&rows) as u32;
    Ok(p.pow(8 - rank))
}

/// Orbit count by Burnside's lemma.
pub fn burnside_orbit_count(field: Field) -> Result<u64> {
    let elements = gl2_elements(field)?;
    let total: u64 = elements
        .par_iter()
        .map(fixed_point_count)
        .collect::<Result<Vec<u64>>>()?
        .into_iter()
        .sum();
    let order = elements.len() as u64;
    if total % order != 0 {
        return Err(Error::Census(format!(
            "fixed-point total {total} not divisible by |GL| = {order}"
        )));
    }
    Ok(total / order)
}

type Kinds = (UnitKind, UnitKind, bool);

fn unit_kinds(a: &Msc) -> Result<Kinds> {
    let left = brute_force_units(a, Side::Left)?;
    let right = brute_force_units(a, Side::Right)?;
    let both = left.intersect(&right);
    Ok((left.kind(), right.kind(), !both.is_empty()))
}

/// Called with `(done, total)` after each chunk of the index space.
pub type Progress<'a> = &'a (dyn Fn(u64, u64) + Sync);

/// Partitions all `p⁸` MSCs over GF(p) into isomorphism classes.
///
/// `p` must be 2 or 3; 5 is accepted only with `allow_large`. Orbits are
/// built by union-find over generator images; the count is checked against
/// [`burnside_orbit_count`], every orbit size must divide `|GL(2,p)|`, and the
/// brute-force unit kinds must agree on every member of every orbit.
pub fn orbit_census(
    p: u32,
    allow_large: bool,
    progress: Option<Progress<'_>>,
) -> Result<OrbitReport> {
    let supported = p == 2 || p == 3 || (p == 5 && allow_large);
    if !supported {
        return Err(Error::UnsupportedField {
            field: Field::gf(u64::from(p)).unwrap_or(Field::Rational),
            operation: "orbit census (p = 2, 3; 5 with the large flag)",
        });
    }
    let field = Field::gf(u64::from(p))?;
    let total = u64::from(p).pow(8);
    let generators: Vec<(Mat2, Mat2)> = gl2_generators(field)?
        .into_iter()
        .map(|g| {
            let inv = g.inverse().expect("generators are invertible");
            (g, inv)
        })
        .collect();

    let chunk = total.div_ceil(64).max(1);
    let done = AtomicU64::new(0);
    let per_index: Vec<(Vec<u32>, Kinds)> = (0..total as usize)
        .into_par_iter()
        .with_min_len(chunk as usize)
        .map(|i| {
            let a = Msc::from_index(field, i as u64);
            let images = generators
                .iter()
                .map(|(g, g_inv)| {
                    transform_with_inverse(&a, g, g_inv)
                        .index()
                        .expect("prime field") as u32
                })
                .collect();
            let kinds = unit_kinds(&a)?;
            if let Some(report) = progress {
                let n = done.fetch_add(1, Ordering::Relaxed) + 1;
                if n % chunk == 0 || n == total {
                    report(n, total);
                }
            }
            Ok((images, kinds))
        })
        .collect::<Result<_>>()?;

    let mut uf = UnionFind::new(total as usize);
    for (i, (images, _)) in per_index.iter().enumerate() {
        for &j in images {
            uf.union(i as u32, j);
        }
    }

    let group_order = gl2_order(p);
    let mut orbits: Vec<Orbit> = Vec::new();
    let mut slot = vec![usize::MAX; total as usize];
    for i in 0..total as u32 {
        let root = uf.find(i);
        let kinds = per_index[i as usize].1;
        if root == i {
            slot[i as usize] = orbits.len();
            orbits.push(Orbit {
                representative: Msc::from_index(field, u64::from(i)).to_string(),
                representative_index: u64::from(i),
                size: 0,
                left_unit_kind: kinds.0,
                right_unit_kind: kinds.1,
                two_sided: kinds.2,
            });
        }
        let orbit = &mut orbits[slot[root as usize]];
        orbit.size += 1;
        if (orbit.left_unit_kind, orbit.right_unit_kind, orbit.two_sided) != kinds {
            return Err(Error::Census(format!(
                "unit kinds differ inside the orbit of {}",
                orbit.representative
            )));
        }
    }

    if let Some(o) = orbits.iter().find(|o| group_order % o.size != 0) {
        return Err(Error::Census(format!(
            "orbit of {} has size {} not dividing {group_order}",
            o.representative, o.size
        )));
    }
    let sum: u64 = orbits.iter().map(|o| o.size).sum();
    if sum != total {
        return Err(Error::Census(format!(
            "orbit sizes sum to {sum}, not {total}"
        )));
    }
    let burnside = burnside_orbit_count(field)?;
    let orbit_count = orbits.len() as u64;
    if burnside != orbit_count {
        return Err(Error::Census(format!(
            "union-find found {orbit_count} orbits, Burnside gives {burnside}"
        )));
    }
    Ok(OrbitReport {
        p,
        total_msc_count: total,
        group_order,
        orbit_count,
        burnside_orbit_count: burnside,
        orbits,
    })
}

/// Coefficients `(a, b, c)` of the binary quadratic form `det M(u)` where
/// `M(u)` is linear in `u`.
fn det_form(a: &Msc, op: fn(&Msc, &Vec2) -> Result<Mat2>) -> Result<[Scalar; 3]> {
    let f = a.field();
    let at = |x: i64, y: i64| op(a, &Vec2::from_ints(f, x, y)).map(|m| m.det());
    let q1 = at(1, 0)?;
    let q2 = at(0, 1)?;
    let q3 = at(1, 1)?;
    let mid = &(&q3 - &q1) - &q2;
    Ok([q1, mid, q2])
}

/// Whether `a u1² + b u1u2 + c u2²` has a real zero with `u ≠ 0`: at `(1,0)`
/// when `a = 0`, otherwise exactly when the discriminant is nonnegative.
fn form_vanishes(form: &[Scalar; 3]) -> bool {
    let [a, b, c] = form;
    if a.is_zero() {
        return true;
    }
    let disc = &(b * b) - &(&(&a.field().int(4) * a) * c);
    disc.sign().is_some_and(|s| s.is_ge())
}

/// Whether every nonzero real `u` has invertible `L_u` and `R_u`; `a` is read
/// as an algebra over ℝ.
pub fn is_division(a: &Msc) -> Result<bool> {
    if a.field() != Field::Rational {
        return Err(Error::UnsupportedField {
            field: a.field(),
            operation: "division test",
        });
    }
    let left = det_form(a, left_mult_operator)?;
    let right = det_form(a, right_mult_operator)?;
    Ok(!form_vanishes(&left) && !form_vanishes(&right))
}

/// Bounds for the fallback grid of [`witness_complex_iso_for`]: candidate
/// coordinates are `n/d` with `|n| ≤ max_numerator`, `1 ≤ d ≤ max_denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridConfig {
    pub max_numerator: i64,
    pub max_denominator: i64,
}

impl Default for GridConfig {
    fn default() -> GridConfig {
        GridConfig {
            max_numerator: 6,
            max_denominator: 6,
        }
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(x.numer())?, root(x.denom())?))
}

/// A rational `g` with `transform(A₃,ᵣ(1/2, 0, 1/2), g) = complex_msc`.
pub fn witness_complex_iso() -> Result<Mat2> {
    let a = crate::catalog::unital_algebra(crate::catalog::CharClass::Real, "A3,r(1/2, 0, 1/2)")?;
    witness_complex_iso_for(&a, GridConfig::default())
}

/// A rational `g` with `transform(a, g) = complex_msc`.
///
/// Any such `g` sends the two-sided unit `u₀` of `a` to `e1`, so
/// `g⁻¹ = [u₀ | v]` and only `v` is unknown. Analytic route: take `w`
/// independent of `u₀`, write `w² = p u₀ + q w`, put `z = w − (q/2) u₀` so that
/// `z² = d u₀` with `d = p + q²/4`; then `v = z/s` works iff `s² = −d` has a
/// rational root. Fallback: scan `v` over the grid.
pub fn witness_complex_iso_for(a: &Msc, grid: GridConfig) -> Result<Mat2> {
    let f = a.field();
    let target = complex_msc(f)?;
    let UnitSet::Point(u0) = find_two_sided_unit(a) else {
        return Err(Error::SearchExhausted(format!(
            "{a} has no unique two-sided unit, so it is not isomorphic to the complex numbers"
        )));
    };
    let try_v = |v: &Vec2| -> Result<Option<Mat2>> {
        let g_inv = Mat2::from_columns(&u0, v)?;
        if !g_inv.is_invertible() {
            return Ok(None);
        }
        let g = g_inv.inverse()?;
        Ok((transform_with_inverse(a, &g, &g_inv) == target).then_some(g))
    };

    let e1 = Vec2::basis(f, 1);
    let w = if u0.cross(&e1).is_zero() {
        Vec2::basis(f, 2)
    } else {
        e1
    };
    let w2 = multiply(a, &w, &w)?;
    // w² = p u₀ + q w, by Cramer's rule on the columns (u₀, w)
    let det = u0.cross(&w);
    let p = &w2.cross(&w) * &det.inverse()?;
    let q = &u0.cross(&w2) * &det.inverse()?;
    let half_q = &q * &f.ratio(1, 2)?;
    let d = &p + &(&half_q * &half_q);
    let z = w.sub(&u0.scale(&half_q));
    let minus_d = -&d;
    let analytic = minus_d
        .as_rational()
        .and_then(rational_sqrt)
        .filter(|s| !num_traits::Zero::is_zero(s));
    if let Some(s) = analytic {
        let v = z.scale(&Scalar::Rational(s).inverse()?);
        if let Some(g) = try_v(&v)? {
            return Ok(g);
        }
    }

    let mut values = Vec::new();
    for den in 1..=grid.max_denominator {
        for num in -grid.max_numerator..=grid.max_numerator {
            let x = f.ratio(num, den)?;
            if !values.contains(&x) {
                values.push(x);
            }
        }
    }
    for x in &values {
        for y in &values {
            if let Some(g) = try_v(&Vec2::new(x.clone(), y.clone())?)? {
                return Ok(g);
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no rational change of basis maps {a} to the complex numbers: with unit {u0}, \
         z = {z} satisfies z² = {d}·1, and −({d}) is not the square of a rational; \
         grid |n| ≤ {}, d ≤ {} also found nothing",
        grid.max_numerator, grid.max_denominator
    )))
}
