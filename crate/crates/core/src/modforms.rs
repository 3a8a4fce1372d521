//! Exact dimension formulas for spaces of classical cusp forms: full level,
//! `Gamma_0(N)`, new subspaces, and the Atkin-Lehner eigenspace split at
//! prime level.
//!
//! The full-level and `Gamma_0(N)` dimensions come from the standard
//! genus / elliptic-point / cusp counts, and the new subspace from
//! inclusion-exclusion over divisors. The plus eigenspace at prime level is
//! computed as the cusp space of the extended group `Gamma_0(p)+` (adjoin
//! the Fricke involution): its orbifold signature follows from the fixed
//! points of the involution on `X_0(p)`, which are imaginary-quadratic
//! class-number counts.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModformError {
    #[error("weight {0} rejected: only even weights >= 2 are supported")]
    BadWeight(i64),
    #[error("level {0} rejected: must be positive")]
    BadLevel(i64),
    #[error("Atkin-Lehner sign requires a prime level and the new subspace, got N = {0}")]
    SignNeedsPrimeNew(u64),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Restriction {
    Full,
    New,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Sign {
    None,
    Plus,
    Minus,
}

/// A cusp-form space `S_k(Gamma_0(N))`, optionally restricted to the new
/// subspace and an Atkin-Lehner eigenspace.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CuspSpaceSpec {
    pub weight: i64,
    pub level: u64,
    pub restriction: Restriction,
    pub al_sign: Sign,
}

impl CuspSpaceSpec {
    pub fn full(weight: i64, level: u64) -> Self {
        CuspSpaceSpec {
            weight,
            level,
            restriction: Restriction::Full,
            al_sign: Sign::None,
        }
    }

    pub fn new_subspace(weight: i64, level: u64) -> Self {
        CuspSpaceSpec {
            weight,
            level,
            restriction: Restriction::New,
            al_sign: Sign::None,
        }
    }

    pub fn new_signed(weight: i64, level: u64, sign: Sign) -> Self {
        CuspSpaceSpec {
            weight,
            level,
            restriction: Restriction::New,
            al_sign: sign,
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn euler_phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in prime_factors(n) {
        out = out / p * (p - 1);
    }
    out
}

/// Kronecker symbol `(-4|p)` for prime `p`.
fn chi_m4(p: u64) -> i64 {
    match p % 4 {
        1 => 1,
        3 => -1,
        _ => 0, // p = 2
    }
}

/// Kronecker symbol `(-3|p)` for prime `p`.
fn chi_m3(p: u64) -> i64 {
    if p == 3 {
        return 0;
    }
    if p == 2 {
        return -1; // -3 = 5 mod 8
    }
    // Euler's criterion for (-3|p)
    let mut base = (p as i64 - 3).rem_euclid(p as i64) as u64;
    let mut exp = (p - 1) / 2;
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

/// Index of `Gamma_0(N)` in the modular group.
pub fn index_gamma0(n: u64) -> u64 {
    let mut mu = n;
    for (p, _) in prime_factors(n) {
        mu = mu / p * (p + 1);
    }
    mu
}

/// Number of order-2 elliptic points of `X_0(N)`.
pub fn nu2(n: u64) -> u64 {
    if n % 4 == 0 {
        return 0;
    }
    let mut out = 1i64;
    for (p, _) in prime_factors(n) {
        out *= 1 + chi_m4(p);
    }
    out as u64
}

/// Number of order-3 elliptic points of `X_0(N)`.
pub fn nu3(n: u64) -> u64 {
    if n % 9 == 0 {
        return 0;
    }
    let mut out = 1i64;
    for (p, _) in prime_factors(n) {
        out *= 1 + chi_m3(p);
    }
    out as u64
}

/// Number of cusps of `X_0(N)`.
pub fn nu_inf(n: u64) -> u64 {
    let mut total = 0;
    for d in 1..=n {
        if n % d == 0 {
            total += euler_phi(gcd(d, n / d));
        }
    }
    total
}

/// Genus of `X_0(N)`.
pub fn genus_x0(n: u64) -> i64 {
    let mu = index_gamma0(n) as i64;
    let twelve_g = 12 + mu - 3 * nu2(n) as i64 - 4 * nu3(n) as i64 - 6 * nu_inf(n) as i64;
    assert_eq!(twelve_g % 12, 0);
    twelve_g / 12
}

/// Class number of the imaginary quadratic order of discriminant `d < 0`,
/// by counting reduced primitive binary quadratic forms.
pub fn class_number(d: i64) -> u64 {
    assert!(
        d < 0 && (d % 4 == 0 || d.rem_euclid(4) == 1),
        "discriminant"
    );
    let mut count = 0;
    let mut a = 1i64;
    while 3 * a * a <= -d {
        let mut b = -a;
        while b <= a {
            if (b * b - d) % (4 * a) == 0 {
                let c = (b * b - d) / (4 * a);
                if c >= a {
                    let primitive = {
                        let g = gcd(gcd(a.unsigned_abs(), b.unsigned_abs()), c.unsigned_abs());
                        g == 1
                    };
                    let reduced = b >= 0 || (a != c && b.abs() != a);
                    if primitive && reduced {
                        count += 1;
                    }
                }
            }
            b += 1;
        }
        a += 1;
    }
    count
}

/// `dim S_k(Gamma_0(N))` for even `k >= 2`.
fn dim_full(k: i64, n: u64) -> u64 {
    let g = genus_x0(n);
    if k == 2 {
        return g as u64;
    }
    let d = (k - 1) * (g - 1)
        + (k / 2 - 1) * nu_inf(n) as i64
        + (k / 4) * nu2(n) as i64
        + (k / 3) * nu3(n) as i64;
    d.max(0) as u64
}

/// Multiplicative coefficients of the old/new inclusion-exclusion:
/// `dim S_k^new(N) = sum_{d | N} beta(N/d) dim S_k(Gamma_0(d))`.
fn beta(m: u64) -> i64 {
    let mut out = 1;
    for (_, e) in prime_factors(m) {
        out *= match e {
            1 => -2,
            2 => 1,
            _ => 0,
        };
    }
    out
}

fn dim_new(k: i64, n: u64) -> u64 {
    let mut total = 0i64;
    for d in 1..=n {
        if n % d == 0 {
            total += beta(n / d) * dim_full(k, d) as i64;
        }
    }
    assert!(total >= 0, "new subspace dimension must be nonnegative");
    total as u64
}

/// Orbifold signature of the Fricke extension `Gamma_0(p)+` for prime `p`:
/// genus, cusp count, and elliptic point orders.
pub fn fricke_signature(p: u64) -> (i64, u64, Vec<u64>) {
    assert!(is_prime(p));
    let g0 = genus_x0(p);
    let mut elliptic: Vec<u64> = Vec::new();
    // Fixed points of the involution: CM points of the orders of
    // discriminant -4p (and -p when p = 3 mod 4). At p = 2 and p = 3 one
    // fixed point coincides with an elliptic point of X_0(p), and the
    // composite stabilizer doubles its order.
    let fixed: u64;
    match p {
        2 => {
            // disc -8 (order 2) and disc -4 on the nu2 point (order 4)
            fixed = class_number(-8) + class_number(-4);
            elliptic.push(2);
            elliptic.push(4);
        }
        3 => {
            // disc -12 (order 2) and disc -3 on the nu3 point (order 6)
            fixed = class_number(-12) + class_number(-3);
            elliptic.push(2);
            elliptic.push(6);
        }
        _ => {
            let f = if p % 4 == 3 {
                class_number(-(p as i64)) + class_number(-4 * p as i64)
            } else {
                class_number(-4 * p as i64)
            };
            fixed = f;
            elliptic.extend(std::iter::repeat_n(2, f as usize));
            // elliptic points of X_0(p) pair up under the involution
            let n2 = nu2(p);
            let n3 = nu3(p);
            assert!(n2 % 2 == 0 && n3 % 2 == 0);
            elliptic.extend(std::iter::repeat_n(2, (n2 / 2) as usize));
            elliptic.extend(std::iter::repeat_n(3, (n3 / 2) as usize));
        }
    }
    // Riemann-Hurwitz for the double cover X_0(p) -> X_0(p)+
    let two_gstar = (2 * g0 + 2 - fixed as i64) / 2;
    assert_eq!((2 * g0 + 2 - fixed as i64) % 2, 0, "fixed point parity");
    assert_eq!(two_gstar % 2, 0, "integral quotient genus");
    let gstar = two_gstar / 2;
    elliptic.sort();
    (gstar, 1, elliptic)
}

/// `dim S_k` of a Fuchsian group from its signature, even `k >= 2`.
fn dim_from_signature(k: i64, genus: i64, cusps: u64, elliptic: &[u64]) -> u64 {
    if k == 2 {
        return genus.max(0) as u64;
    }
    let mut d = (k - 1) * (genus - 1) + (k / 2 - 1) * cusps as i64;
    for &e in elliptic {
        d += (k / 2) * (e as i64 - 1) / e as i64;
    }
    d.max(0) as u64
}

/// `dim S_k(Gamma_0(p)+)`: the Fricke-plus eigenspace of the full space.
pub fn dim_fricke_plus(k: i64, p: u64) -> u64 {
    let (g, cusps, elliptic) = fricke_signature(p);
    dim_from_signature(k, g, cusps, &elliptic)
}

/// Exact dimension of the requested cusp space.
pub fn dim_cusp(spec: &CuspSpaceSpec) -> Result<u64, ModformError> {
    if spec.weight < 2 || spec.weight % 2 != 0 {
        return Err(ModformError::BadWeight(spec.weight));
    }
    if spec.level == 0 {
        return Err(ModformError::BadLevel(spec.level as i64));
    }
    let (k, n) = (spec.weight, spec.level);
    match (spec.restriction, spec.al_sign) {
        (Restriction::Full, Sign::None) => Ok(dim_full(k, n)),
        (Restriction::New, Sign::None) => Ok(dim_new(k, n)),
        (Restriction::New, sign) => {
            if !is_prime(n) {
                return Err(ModformError::SignNeedsPrimeNew(n));
            }
            let new = dim_new(k, n);
            // old forms split evenly between the eigenspaces, so the plus
            // part of the new space is the Fricke-group dimension minus one
            // copy of the level-one space
            let plus_total = dim_fricke_plus(k, n);
            let level_one = dim_full(k, 1);
            let plus = plus_total - level_one;
            assert!(plus <= new, "plus eigenspace exceeds the new subspace");
            match sign {
                Sign::Plus => Ok(plus),
                Sign::Minus => Ok(new - plus),
                Sign::None => unreachable!(),
            }
        }
        (Restriction::Full, _) => Err(ModformError::SignNeedsPrimeNew(n)),
    }
}

/// One row of the dimension fixture table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub weight: i64,
    pub level: u64,
    pub restriction: Restriction,
    pub al_sign: Sign,
    pub dim: u64,
    pub provenance: String,
}

/// Parses the packaged fixture table (CSV with a header line).
pub fn parse_fixtures(text: &str) -> Vec<FixtureRow> {
    let mut out = Vec::new();
    for line in text.lines().skip(1) {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        assert!(cols.len() >= 6, "bad fixture row: {line}");
        let restriction = match cols[2] {
            "full" => Restriction::Full,
            "new" => Restriction::New,
            other => panic!("bad restriction {other}"),
        };
        let al_sign = match cols[3] {
            "none" => Sign::None,
            "plus" => Sign::Plus,
            "minus" => Sign::Minus,
            other => panic!("bad sign {other}"),
        };
        out.push(FixtureRow {
            weight: cols[0].parse().unwrap(),
            level: cols[1].parse().unwrap(),
            restriction,
            al_sign,
            dim: cols[4].parse().unwrap(),
            provenance: cols[5..].join(","),
        });
    }
    out
}

/// The fixture table compiled into the crate. The path can be overridden at
/// runtime through `HODGESCAN_FIXTURES` by the CLI.
pub const BUNDLED_FIXTURES: &str = include_str!("../fixtures/cusp_dims.csv");

/// Compares every fixture row against the formulas. Returns mismatches.
pub fn diff_fixtures(rows: &[FixtureRow]) -> Vec<(FixtureRow, u64)> {
    let mut bad = Vec::new();
    for row in rows {
        let spec = CuspSpaceSpec {
            weight: row.weight,
            level: row.level,
            restriction: row.restriction,
            al_sign: row.al_sign,
        };
        let computed = dim_cusp(&spec).expect("fixture rows are valid specs");
        if computed != row.dim {
            bad.push((row.clone(), computed));
        }
    }
    bad
}

/// Recomputes a signed new-space dimension directly from fixture rows,
/// bypassing the formulas (used by the multiplicity cross-checks).
pub fn fixture_dim(rows: &[FixtureRow], weight: i64, level: u64, sign: Sign) -> Option<u64> {
    rows.iter()
        .find(|r| {
            r.weight == weight
                && r.level == level
                && r.restriction
                    == if level == 1 {
                        Restriction::Full
                    } else {
                        Restriction::New
                    }
                && r.al_sign == sign
        })
        .map(|r| r.dim)
}

/// Fixture range used by the packaged table.
pub fn fixture_range() -> (Vec<i64>, Vec<u64>) {
    let weights: Vec<i64> = (1..=12).map(|k| 2 * k).collect();
    let levels: Vec<u64> = (1..=13).collect();
    (weights, levels)
}

/// Regenerates the fixture table from the formulas (used by the packaged
/// data file and the CLI check command).
pub fn generate_fixture_table() -> Vec<FixtureRow> {
    let (weights, levels) = fixture_range();
    let mut rows = Vec::new();
    let url = |k: i64, n: u64| {
        format!("https://www.lmfdb.org/ModularForm/GL2/Q/holomorphic/?level={n}&weight={k}")
    };
    for &k in &weights {
        for &n in &levels {
            rows.push(FixtureRow {
                weight: k,
                level: n,
                restriction: Restriction::Full,
                al_sign: Sign::None,
                dim: dim_full(k, n),
                provenance: url(k, n),
            });
            rows.push(FixtureRow {
                weight: k,
                level: n,
                restriction: Restriction::New,
                al_sign: Sign::None,
                dim: dim_new(k, n),
                provenance: url(k, n),
            });
            if is_prime(n) {
                for sign in [Sign::Plus, Sign::Minus] {
                    rows.push(FixtureRow {
                        weight: k,
                        level: n,
                        restriction: Restriction::New,
                        al_sign: sign,
                        dim: dim_cusp(&CuspSpaceSpec::new_signed(k, n, sign)).unwrap(),
                        provenance: url(k, n),
                    });
                }
            }
        }
    }
    rows
}

pub fn render_fixture_table(rows: &[FixtureRow]) -> String {
    let mut out = String::from("weight,level,restriction,al_sign,dim,provenance\n");
    for r in rows {
        let restriction = match r.restriction {
            Restriction::Full => "full",
            Restriction::New => "new",
        };
        let sign = match r.al_sign {
            Sign::None => "none",
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        };
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.weight, r.level, restriction, sign, r.dim, r.provenance
        ));
    }
    out
}

/// Convenience: the table of signed new dimensions for a weight, prime
/// range, useful for quick displays.
pub fn signed_table(weights: &[i64], primes: &[u64]) -> BTreeMap<(i64, u64), (u64, u64)> {
    let mut out = BTreeMap::new();
    for &k in weights {
        for &p in primes {
            let plus = dim_cusp(&CuspSpaceSpec::new_signed(k, p, Sign::Plus)).unwrap();
            let minus = dim_cusp(&CuspSpaceSpec::new_signed(k, p, Sign::Minus)).unwrap();
            out.insert((k, p), (plus, minus));
        }
    }
    out
}
