use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unital2d::catalog::complex_msc;
use unital2d::isomorphism::is_division;
use unital2d::{transform, Field, Mat2, Msc};

/// The MSC scaled to integer entries; scaling does not move the zeros of
/// `det L_u` or `det R_u`.
fn integer_msc(a: &Msc) -> [i128; 8] {
    let qs: Vec<_> = a
        .entries()
        .iter()
        .map(|s| s.as_rational().unwrap().clone())
        .collect();
    let lcm = qs
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    let mut out = [0i128; 8];
    for (o, q) in out.iter_mut().zip(&qs) {
        let v = q.numer() * (&lcm / q.denom());
        *o = i128::try_from(v).unwrap();
    }
    out
}

fn product(a: &[i128; 8], u: [i128; 2], v: [i128; 2]) -> [i128; 2] {
    let w = [u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]];
    let row = |r: usize| (0..4).map(|k| a[r * 4 + k] * w[k]).sum();
    [row(0), row(1)]
}

fn det_left(a: &[i128; 8], u: [i128; 2]) -> i128 {
    let c1 = product(a, u, [1, 0]);
    let c2 = product(a, u, [0, 1]);
    c1[0] * c2[1] - c2[0] * c1[1]
}

fn det_right(a: &[i128; 8], u: [i128; 2]) -> i128 {
    let c1 = product(a, [1, 0], u);
    let c2 = product(a, [0, 1], u);
    c1[0] * c2[1] - c2[0] * c1[1]
}

fn sample_u(rng: &mut ChaCha8Rng) -> [i128; 2] {
    loop {
        let u = [rng.gen_range(-40..=40), rng.gen_range(-40..=40)];
        if u != [0, 0] {
            return u;
        }
    }
}

/// Falsifier: a zero of either determinant refutes `is_division`; when it
/// holds, both forms must keep one strict sign.
fn check(a: &Msc, rng: &mut ChaCha8Rng, samples: usize) {
    let claim = is_division(a).unwrap();
    let ints = integer_msc(a);
    let mut signs = [0i32; 2];
    // every rational direction is a multiple of an integer one, so small
    // integer vectors first, then random ones
    let grid = (-6..=6)
        .flat_map(|x| (-6..=6).map(move |y| [x, y]))
        .filter(|u| *u != [0, 0]);
    let random: Vec<_> = (0..samples).map(|_| sample_u(rng)).collect();
    for u in grid.chain(random) {
        for (k, d) in [det_left(&ints, u), det_right(&ints, u)]
            .into_iter()
            .enumerate()
        {
            if d == 0 {
                assert!(!claim, "{a}: zero determinant at {u:?}");
            }
            let s = d.signum() as i32;
            if claim {
                assert!(signs[k] == 0 || signs[k] == s, "{a}: indefinite form");
                signs[k] = s;
            }
        }
    }
}

#[test]
fn random_msc_falsifier() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let q = Field::Rational;
    let mut positives = 0;
    for _ in 0..100 {
        let a = Msc::random(q, &mut rng);
        positives += usize::from(is_division(&a).unwrap());
        check(&a, &mut rng, 10_000);
    }
    // both outcomes should occur in a fair sample
    assert!(positives > 0 && positives < 100, "{positives}");
}

#[test]
fn conjugates_of_complex_are_division() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let q = Field::Rational;
    let c = complex_msc(q).unwrap();
    for _ in 0..50 {
        let g = Mat2::random_invertible(q, &mut rng);
        let a = transform(&c, &g).unwrap();
        assert!(is_division(&a).unwrap());
        check(&a, &mut rng, 1_000);
    }
}

#[test]
fn zero_divisors_are_caught() {
    let q = Field::Rational;
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    // u = e1 annihilates from the left: α1 = α2 = β1 = β2 = 0
    for _ in 0..50 {
        let mut a = Msc::random(q, &mut rng).entries().clone();
        for i in [0, 1, 4, 5] {
            a[i] = q.zero();
        }
        let a = Msc::new(a).unwrap();
        assert!(!is_division(&a).unwrap());
        check(&a, &mut rng, 100);
    }
}
