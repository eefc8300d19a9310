//! Test-side oracles. Arithmetic here is plain `BigRational`, reduced mod p
//! for prime fields, and shares no code with the crate's scalar, product or
//! transform routines.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use unital2d::{Field, Mat2, Msc, Scalar, Vec2};

pub type Q = BigRational;

#[derive(Clone, Copy, Debug)]
pub struct Ar {
    pub p: Option<u64>,
}

impl Ar {
    pub fn of(field: Field) -> Ar {
        match field {
            Field::Rational => Ar { p: None },
            Field::Prime(p) => Ar {
                p: Some(u64::from(p)),
            },
        }
    }

    fn norm(&self, x: Q) -> Q {
        match self.p {
            None => x,
            Some(p) => {
                assert!(x.is_integer(), "residues stay integral");
                let m = BigInt::from(p);
                Q::from_integer(x.to_integer().mod_floor(&m))
            }
        }
    }

    pub fn int(&self, n: i64) -> Q {
        self.norm(Q::from_integer(BigInt::from(n)))
    }

    pub fn add(&self, a: &Q, b: &Q) -> Q {
        self.norm(a + b)
    }

    pub fn sub(&self, a: &Q, b: &Q) -> Q {
        self.norm(a - b)
    }

    pub fn mul(&self, a: &Q, b: &Q) -> Q {
        self.norm(a * b)
    }

    pub fn inv(&self, a: &Q) -> Q {
        assert!(!a.is_zero(), "inverting zero");
        match self.p {
            None => a.recip(),
            Some(p) => {
                // Fermat: a^(p−2)
                let mut out = Q::one();
                for _ in 0..p - 2 {
                    out = self.mul(&out, a);
                }
                out
            }
        }
    }

    pub fn to_q(&self, s: &Scalar) -> Q {
        match s.residue() {
            Some(r) => Q::from_integer(BigInt::from(r)),
            None => s.as_rational().expect("rational scalar").clone(),
        }
    }

    pub fn to_scalar(&self, field: Field, x: &Q) -> Scalar {
        field.parse(&x.to_string()).expect("oracle value parses")
    }

    pub fn msc(&self, a: &Msc) -> [[Q; 4]; 2] {
        let e = a.entries();
        std::array::from_fn(|r| std::array::from_fn(|c| self.to_q(&e[r * 4 + c])))
    }

    pub fn mat(&self, g: &Mat2) -> [[Q; 2]; 2] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.to_q(g.get(r + 1, c + 1))))
    }

    pub fn vec(&self, v: &Vec2) -> [Q; 2] {
        [self.to_q(v.u1()), self.to_q(v.u2())]
    }

    pub fn to_msc(&self, field: Field, m: &[[Q; 4]; 2]) -> Msc {
        Msc::new(std::array::from_fn(|i| {
            self.to_scalar(field, &m[i / 4][i % 4])
        }))
        .unwrap()
    }

    pub fn mat_inv(&self, g: &[[Q; 2]; 2]) -> [[Q; 2]; 2] {
        let det = self.sub(&self.mul(&g[0][0], &g[1][1]), &self.mul(&g[0][1], &g[1][0]));
        let d = self.inv(&det);
        let neg = |x: &Q| self.sub(&self.int(0), x);
        [
            [self.mul(&g[1][1], &d), self.mul(&neg(&g[0][1]), &d)],
            [self.mul(&neg(&g[1][0]), &d), self.mul(&g[0][0], &d)],
        ]
    }

    /// Block Kronecker product `h ⊗ h`.
    pub fn kron_mat(&self, h: &[[Q; 2]; 2]) -> [[Q; 4]; 4] {
        std::array::from_fn(|r| {
            std::array::from_fn(|c| self.mul(&h[r / 2][c / 2], &h[r % 2][c % 2]))
        })
    }

    pub fn kron_vec(&self, u: &[Q; 2], v: &[Q; 2]) -> [Q; 4] {
        [
            self.mul(&u[0], &v[0]),
            self.mul(&u[0], &v[1]),
            self.mul(&u[1], &v[0]),
            self.mul(&u[1], &v[1]),
        ]
    }

    /// Dense `g · A · (g⁻¹ ⊗ g⁻¹)`.
    pub fn transform(&self, a: &[[Q; 4]; 2], g: &[[Q; 2]; 2]) -> [[Q; 4]; 2] {
        let k = self.kron_mat(&self.mat_inv(g));
        let ga: [[Q; 4]; 2] = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                self.add(&self.mul(&g[r][0], &a[0][c]), &self.mul(&g[r][1], &a[1][c]))
            })
        });
        std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                (0..4).fold(self.int(0), |acc, m| {
                    self.add(&acc, &self.mul(&ga[r][m], &k[m][c]))
                })
            })
        })
    }

    pub fn product(&self, a: &[[Q; 4]; 2], u: &[Q; 2], v: &[Q; 2]) -> [Q; 2] {
        let w = self.kron_vec(u, v);
        std::array::from_fn(|r| {
            (0..4).fold(self.int(0), |acc, k| {
                self.add(&acc, &self.mul(&a[r][k], &w[k]))
            })
        })
    }

    pub fn basis(&self, j: usize) -> [Q; 2] {
        if j == 1 {
            [self.int(1), self.int(0)]
        } else {
            [self.int(0), self.int(1)]
        }
    }

    /// `l·eʲ = eʲ` (left) or `eʲ·l = eʲ` (right) for both `j`.
    pub fn is_unit(&self, a: &[[Q; 4]; 2], l: &[Q; 2], left: bool) -> bool {
        (1..=2).all(|j| {
            let e = self.basis(j);
            let got = if left {
                self.product(a, l, &e)
            } else {
                self.product(a, &e, l)
            };
            got == e
        })
    }

    /// Every unit over GF(p), by scanning all `p²` candidates.
    pub fn scan_units(&self, a: &[[Q; 4]; 2], left: bool) -> Vec<[Q; 2]> {
        let p = self.p.expect("finite field") as i64;
        let mut out = Vec::new();
        for x in 0..p {
            for y in 0..p {
                let l = [self.int(x), self.int(y)];
                if self.is_unit(a, &l, left) {
                    out.push(l);
                }
            }
        }
        out
    }
}

/// Dense transform through the oracle, returned as an `Msc`.
pub fn oracle_transform(a: &Msc, g: &Mat2) -> Msc {
    let f = a.field();
    let ar = Ar::of(f);
    ar.to_msc(f, &ar.transform(&ar.msc(a), &ar.mat(g)))
}

/// Classification kind from an oracle scan: 0, 1 or p units.
pub fn scan_kind(a: &Msc, left: bool) -> unital2d::UnitKind {
    let ar = Ar::of(a.field());
    match ar.scan_units(&ar.msc(a), left).len() {
        0 => unital2d::UnitKind::NoUnit,
        1 => unital2d::UnitKind::UniqueUnit,
        _ => unital2d::UnitKind::ManyUnits,
    }
}

pub fn all_gl2(field: Field) -> Vec<Mat2> {
    let p = field.order().unwrap() as i64;
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d - b * c).rem_euclid(p) != 0 {
                        out.push(Mat2::from_ints(field, [a, b, c, d]));
                    }
                }
            }
        }
    }
    out
}

/// Word-sized arithmetic mod p for exhaustive scans.
pub mod modp {
    pub type M = [u64; 8];
    pub type G = [u64; 4];

    pub fn inv(x: u64, p: u64) -> u64 {
        (1..p).find(|y| x * y % p == 1).expect("nonzero residue")
    }

    pub fn det(g: &G, p: u64) -> u64 {
        (g[0] * g[3] + p * p - g[1] * g[2] % p) % p
    }

    pub fn all_gl2(p: u64) -> Vec<G> {
        let mut out = Vec::new();
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if det(&[a, b, c, d], p) != 0 {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    fn kron(h: &G, p: u64) -> [[u64; 4]; 4] {
        let at = |r: usize, c: usize| h[r * 2 + c];
        std::array::from_fn(|r| std::array::from_fn(|c| at(r / 2, c / 2) * at(r % 2, c % 2) % p))
    }

    /// `g · A · (g⁻¹ ⊗ g⁻¹)`.
    pub fn transform(a: &M, g: &G, p: u64) -> M {
        let d = inv(det(g, p), p);
        let h = [
            g[3] * d % p,
            (p - g[1]) * d % p,
            (p - g[2]) * d % p,
            g[0] * d % p,
        ];
        let k = kron(&h, p);
        let mut out = [0u64; 8];
        for r in 0..2 {
            for c in 0..4 {
                let mut s = 0;
                for m in 0..4 {
                    let ga = (g[r * 2] * a[m] + g[r * 2 + 1] * a[4 + m]) % p;
                    s += ga * k[m][c];
                }
                out[r * 4 + c] = s % p;
            }
        }
        out
    }

    /// `g · A == A · (g ⊗ g)`, the fixed-point condition of the action.
    pub fn fixes(a: &M, g: &G, p: u64) -> bool {
        let k = kron(g, p);
        (0..2).all(|r| {
            (0..4).all(|c| {
                let lhs = (g[r * 2] * a[c] + g[r * 2 + 1] * a[4 + c]) % p;
                let rhs = (0..4).map(|m| a[r * 4 + m] * k[m][c]).sum::<u64>() % p;
                lhs == rhs
            })
        })
    }

    pub fn from_index(mut i: u64, p: u64) -> M {
        let mut a = [0u64; 8];
        for x in a.iter_mut().rev() {
            *x = i % p;
            i /= p;
        }
        a
    }

    pub fn index(a: &M, p: u64) -> u64 {
        a.iter().fold(0, |acc, x| acc * p + x)
    }

    fn product(a: &M, u: [u64; 2], v: [u64; 2], p: u64) -> [u64; 2] {
        let w = [u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]];
        [
            (0..4).map(|k| a[k] * w[k]).sum::<u64>() % p,
            (0..4).map(|k| a[4 + k] * w[k]).sum::<u64>() % p,
        ]
    }

    /// Numbers of left units, right units and two-sided units.
    pub fn unit_counts(a: &M, p: u64) -> (usize, usize, usize) {
        let (mut l, mut r, mut both) = (0, 0, 0);
        for x in 0..p {
            for y in 0..p {
                let u = [x, y];
                let left = [[1, 0], [0, 1]].iter().all(|e| product(a, u, *e, p) == *e);
                let right = [[1, 0], [0, 1]].iter().all(|e| product(a, *e, u, p) == *e);
                l += usize::from(left);
                r += usize::from(right);
                both += usize::from(left && right);
            }
        }
        (l, r, both)
    }
}
