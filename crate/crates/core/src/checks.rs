//! Verification suites run by `unital2d verify`.
//!
//! Each suite yields one [`CheckResult`] per table row, class or field; a
//! suite passes when every row passes. Sampling is driven by a ChaCha8 RNG
//! seeded from the caller so output is reproducible.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Msc;
use crate::catalog::{enumerate_catalog, in_sublist, CatalogKind, CharClass, FamilySpec};
use crate::error::{Error, Result};
use crate::exact_fields::{Field, Scalar};
use crate::isomorphism::{is_division, orbit_census, verify_isomorphism, witness_complex_iso};
use crate::units::{
    brute_force_units, classify_left_by_conditions, classify_right_by_conditions, find_units,
    is_unit, Side, UnitSet,
};

pub const DEFAULT_SEED: u64 = 20_240_611;

/// Random parameter tuples per table row over ℚ.
pub const TABLE_SAMPLES: usize = 20;

/// Random non-listed catalog instances per class in the unital check.
pub const COROLLARY_SAMPLES: usize = 60;

/// Orbit counts of the GF(2) and GF(3) censuses, recorded once union-find
/// and Burnside first agreed.
pub const CENSUS_ORBITS_GF2: u64 = 52;
pub const CENSUS_ORBITS_GF3: u64 = 162;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Corollaries,
    Oracle,
    Census,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "tables" => Ok(Suite::Tables),
            "corollaries" => Ok(Suite::Corollaries),
            "oracle" => Ok(Suite::Oracle),
            "census" => Ok(Suite::Census),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse {
                position: 0,
                message: format!("unknown suite {other:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<12} {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, "  ({})", self.detail)?;
        }
        Ok(())
    }
}

fn result(suite: &'static str, name: String, failures: &[String], detail: String) -> CheckResult {
    CheckResult {
        suite,
        name,
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            detail
        } else {
            let mut shown = failures
                .iter()
                .take(3)
                .cloned()
                .collect::<Vec<_>>()
                .join("; ");
            if failures.len() > 3 {
                shown.push_str(&format!("; … {} more", failures.len() - 3));
            }
            shown
        },
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckResult> {
    match suite {
        Suite::Tables => check_tables(seed),
        Suite::Corollaries => check_corollaries(seed),
        Suite::Oracle => check_oracle(),
        Suite::Census => check_census(),
        Suite::All => {
            let mut out = check_tables(seed);
            out.extend(check_corollaries(seed));
            out.extend(check_oracle());
            out.extend(check_census());
            out
        }
    }
}

/// Parameter tuples for a row: every admissible tuple over a prime field,
/// `samples` random ones over ℚ.
pub fn row_params(
    spec: &FamilySpec,
    field: Field,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<Scalar>> {
    if let Some(all) = spec.all_params(field) {
        return all;
    }
    if spec.arity() == 0 {
        return vec![Vec::new()];
    }
    (0..samples)
        .filter_map(|_| spec.sample_params(field, rng))
        .collect()
}

fn side_of(kind: CatalogKind) -> Side {
    match kind {
        CatalogKind::LeftUnital => Side::Left,
        CatalogKind::RightUnital => Side::Right,
        _ => Side::TwoSided,
    }
}

fn points_of(set: &UnitSet, field: Field) -> Vec<crate::algebra::Vec2> {
    match set {
        UnitSet::Empty => Vec::new(),
        UnitSet::Point(p) => vec![p.clone()],
        UnitSet::Line { .. } => [0, 1, -1]
            .iter()
            .filter_map(|&t| set.at(&field.int(t)))
            .collect(),
    }
}

/// Checks one row instance: the tabulated set is nonempty, its points are
/// units, and it equals the solver's set.
fn table_instance(
    spec: &FamilySpec,
    field: Field,
    params: &[Scalar],
    side: Side,
) -> Result<Option<String>> {
    let a = spec.instantiate(field, params)?;
    let expected = spec.expected_unit(field, params, side)?;
    let solved = find_units(&a, side);
    let show = || {
        params
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    if expected.is_empty() {
        return Ok(Some(format!("[{}]: tabulated unit is empty", show())));
    }
    if let Some(bad) = points_of(&expected, field)
        .iter()
        .find(|l| !is_unit(&a, l, side))
    {
        return Ok(Some(format!("[{}]: {bad} is not a {side} unit", show())));
    }
    if expected != solved {
        return Ok(Some(format!(
            "[{}]: tabulated {expected}, solver {solved}",
            show()
        )));
    }
    Ok(None)
}

pub fn check_tables(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for class in CharClass::ALL {
        let field = class.default_field();
        for kind in [
            CatalogKind::LeftUnital,
            CatalogKind::RightUnital,
            CatalogKind::Unital,
        ] {
            let side = side_of(kind);
            for spec in enumerate_catalog(class, kind) {
                let tuples = row_params(&spec, field, TABLE_SAMPLES, &mut rng);
                let mut failures = Vec::new();
                for params in &tuples {
                    match table_instance(&spec, field, params, side) {
                        Ok(None) => {}
                        Ok(Some(msg)) => failures.push(msg),
                        Err(e) => failures.push(e.to_string()),
                    }
                }
                let detail = if tuples.is_empty() {
                    format!("no admissible parameters over {field}")
                } else {
                    format!("{} instances over {field}", tuples.len())
                };
                out.push(result(
                    "tables",
                    format!("{} {} {}", class, side, spec.label),
                    &failures,
                    detail,
                ));
            }
        }
    }
    out
}

/// Every catalog instance over a finite field, or `samples` random ones
/// over ℚ, excluding members of `listed`.
fn other_instances(
    class: CharClass,
    listed: &[FamilySpec],
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<(String, Msc)> {
    let field = class.default_field();
    let families = enumerate_catalog(class, CatalogKind::All);
    let label = |spec: &FamilySpec, params: &[Scalar]| {
        let ps: Vec<String> = params.iter().map(ToString::to_string).collect();
        format!("{}({})", spec.id(), ps.join(", "))
    };
    let mut out = Vec::new();
    if field.is_finite() {
        for spec in &families {
            for params in spec.all_params(field).unwrap_or_default() {
                if !in_sublist(listed, spec, field, &params) {
                    if let Ok(m) = spec.instantiate(field, &params) {
                        out.push((label(spec, &params), m));
                    }
                }
            }
        }
        return out;
    }
    let mut guard = 0;
    while out.len() < samples && guard < samples * 100 {
        guard += 1;
        let spec = families.choose(rng).expect("nonempty catalog");
        let Some(params) = spec.sample_params(field, rng) else {
            continue;
        };
        if in_sublist(listed, spec, field, &params) {
            continue;
        }
        if let Ok(m) = spec.instantiate(field, &params) {
            out.push((label(spec, &params), m));
        }
    }
    out
}

/// The classes whose unital lists are checked.
pub const COROLLARY_CLASSES: [CharClass; 3] = [CharClass::Not23, CharClass::Char2, CharClass::Real];

pub fn check_corollaries(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0);
    let mut out = Vec::new();
    for class in COROLLARY_CLASSES {
        let field = class.default_field();
        let listed = enumerate_catalog(class, CatalogKind::Unital);
        let mut failures = Vec::new();
        for spec in &listed {
            match spec.instantiate(field, &[]) {
                Ok(a) => {
                    let u = find_units(&a, Side::TwoSided);
                    if !matches!(u, UnitSet::Point(_)) {
                        failures.push(format!("{}: two-sided unit {u}", spec.label));
                    }
                }
                Err(e) => failures.push(format!("{}: {e}", spec.label)),
            }
        }
        let others = other_instances(class, &listed, COROLLARY_SAMPLES, &mut rng);
        for (label, a) in &others {
            let u = find_units(a, Side::TwoSided);
            if !u.is_empty() {
                failures.push(format!("{label} has two-sided unit {u}"));
            }
        }
        out.push(result(
            "corollaries",
            format!("{class} unital list"),
            &failures,
            format!(
                "{} listed, {} others over {field}",
                listed.len(),
                others.len()
            ),
        ));
    }

    let real = |label: &str| crate::catalog::unital_algebra(CharClass::Real, label);
    let division = (|| -> Result<Vec<String>> {
        let mut bad = Vec::new();
        for (label, want) in [
            ("A2,r(1/2, 0, 1/2)", false),
            ("A3,r(1/2, 0, 1/2)", true),
            ("A5,r(1/2, 1/2)", false),
        ] {
            if is_division(&real(label)?)? != want {
                bad.push(format!("{label}: expected is_division = {want}"));
            }
        }
        Ok(bad)
    })();
    let failures = division.unwrap_or_else(|e| vec![e.to_string()]);
    out.push(result(
        "corollaries",
        "real division algebras".to_string(),
        &failures,
        "only A3,r(1/2, 0, 1/2)".to_string(),
    ));

    let witness = (|| -> Result<String> {
        let a = real("A3,r(1/2, 0, 1/2)")?;
        let g = witness_complex_iso()?;
        let c = crate::catalog::complex_msc(Field::Rational)?;
        if verify_isomorphism(&a, &c, &g)? {
            Ok(format!("g = {g}"))
        } else {
            Err(Error::SearchExhausted(format!("{g} does not verify")))
        }
    })();
    out.push(match witness {
        Ok(detail) => result(
            "corollaries",
            "complex witness over Q".to_string(),
            &[],
            detail,
        ),
        Err(e) => result(
            "corollaries",
            "complex witness over Q".to_string(),
            &[e.to_string()],
            String::new(),
        ),
    });
    out
}

pub fn check_oracle() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for p in [2u32, 3] {
        let field = Field::Prime(p);
        let total = u64::from(p).pow(8);
        let mut failures = Vec::new();
        for i in 0..total {
            let a = Msc::from_index(field, i);
            for side in [Side::Left, Side::Right] {
                let solved = find_units(&a, side);
                let brute = brute_force_units(&a, side);
                let classified = match side {
                    Side::Left => classify_left_by_conditions(&a),
                    _ => classify_right_by_conditions(&a),
                };
                match brute {
                    Ok(b) if b == solved && classified == solved.kind() => {}
                    Ok(b) => failures.push(format!(
                        "{a} {side}: solver {solved}, brute {b}, conditions {classified}"
                    )),
                    Err(e) => failures.push(e.to_string()),
                }
            }
        }
        out.push(result(
            "oracle",
            format!("GF({p}) exhaustive"),
            &failures,
            format!("{total} MSCs, both sides"),
        ));
    }
    out
}

pub fn check_census() -> Vec<CheckResult> {
    [(2u32, CENSUS_ORBITS_GF2), (3, CENSUS_ORBITS_GF3)]
        .into_iter()
        .map(|(p, expected)| {
            let (failures, detail) = match orbit_census(p, false, None) {
                Ok(r) if r.orbit_count == expected => (
                    Vec::new(),
                    format!(
                        "{} orbits, Burnside {}",
                        r.orbit_count, r.burnside_orbit_count
                    ),
                ),
                Ok(r) => (
                    vec![format!("{} orbits, recorded {expected}", r.orbit_count)],
                    String::new(),
                ),
                Err(e) => (vec![e.to_string()], String::new()),
            };
            result("census", format!("GF({p})"), &failures, detail)
        })
        .collect()
}
