//! Exact counting: binomials, Narayana numbers, the block-refined count of
//! avoiding partitions, large Schröder numbers and the truncated series
//! `f` and `f′`. Everything here is integer arithmetic on `BigUint`/`BigInt`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;

pub const DEFAULT_ORDER: usize = 32;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `N(n, k) = C(n, k) C(n, k-1) / n`, with `N(0, 0) = 1` and zero outside
/// `1 ≤ k ≤ n`.
pub fn narayana(n: u64, k: u64) -> BigUint {
    if n == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if k == 0 || k > n {
        return BigUint::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / n
}

fn narayana_binomial_sum(n: u64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    (k..=n).map(|j| narayana(j, k) * binomial(n, j)).sum()
}

/// Number of 12312- (equally 12321-) avoiding partitions of `[n+1]` with
/// `k + 1` blocks.
pub fn count_blocks(n: u64, k: u64) -> BigUint {
    narayana_binomial_sum(n, k)
}

/// Number of UH-free Schröder paths of semilength `n` with `k` peaks: a Dyck
/// path of semilength `j` with `k` peaks plus `n - j` horizontal steps placed
/// at the start or after down steps.
pub fn count_uhfree_with_peaks(n: u64, k: u64) -> BigUint {
    narayana_binomial_sum(n, k)
}

/// Large Schröder numbers by first-step decomposition:
/// `r_n = r_{n-1} + Σ_{i<n} r_i r_{n-1-i}`.
pub fn large_schroder(n: usize) -> BigUint {
    large_schroder_table(n).pop().expect("table has n + 1 entries")
}

fn large_schroder_table(order: usize) -> Vec<BigUint> {
    let mut r: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=order {
        let conv: BigUint = (0..m).map(|i| &r[i] * &r[m - 1 - i]).sum();
        let next = &r[m - 1] + conv;
        r.push(next);
    }
    r
}

/// Bell numbers `B(0..=order)` from the Bell triangle.
pub fn bell_numbers(order: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for _ in 0..order {
        out.push(row.last().cloned().expect("row is nonempty"));
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().expect("row is nonempty"));
        for v in &row {
            let s = next.last().expect("next is nonempty") + v;
            next.push(s);
        }
        row = next;
    }
    out.truncate(order + 1);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    F,
    FPrime,
    Schroder,
    Bell,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::F => "f",
            SeriesKind::FPrime => "f_prime",
            SeriesKind::Schroder => "schroder",
            SeriesKind::Bell => "bell",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "f" => Ok(SeriesKind::F),
            "f_prime" | "fprime" | "f'" => Ok(SeriesKind::FPrime),
            "schroder" => Ok(SeriesKind::Schroder),
            "bell" => Ok(SeriesKind::Bell),
            other => Err(Error::Syntax(format!("unknown series {other:?}"))),
        }
    }
}

/// Coefficients `0..=order` of a counting series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    pub kind: SeriesKind,
    pub coefficients: Vec<BigUint>,
}

impl SeriesTable {
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.coefficients.get(n)
    }
}

pub fn series(kind: SeriesKind, order: usize) -> SeriesTable {
    let coefficients = match kind {
        SeriesKind::F => f_coefficients(order),
        SeriesKind::FPrime => f_prime_coefficients(&f_coefficients(order)),
        SeriesKind::Schroder => large_schroder_table(order),
        SeriesKind::Bell => bell_numbers(order),
    };
    SeriesTable { kind, coefficients }
}

/// Coefficients of `f = 1 + 2x f + x f (f - 1 - x f)`.
pub fn series_f(order: usize) -> SeriesTable {
    series(SeriesKind::F, order)
}

/// Coefficients of `f′ = 1 + x f′ + x f′ (f - 1 - x f)`.
pub fn series_f_prime(order: usize) -> SeriesTable {
    series(SeriesKind::FPrime, order)
}

// Extracting [x^n] from both sides gives
// s_n = s_{n-1} + [x^{n-1}] f² - [x^{n-2}] f², which only needs lower terms.
fn f_coefficients(order: usize) -> Vec<BigUint> {
    let mut s: Vec<BigUint> = vec![BigUint::one()];
    let mut square: Vec<BigUint> = Vec::new(); // square[m] = [x^m] f², filled lazily
    for n in 1..=order {
        let m = n - 1;
        square.push((0..=m).map(|i| &s[i] * &s[m - i]).sum());
        let mut next = &s[n - 1] + &square[m];
        if n >= 2 {
            next -= &square[n - 2];
        }
        s.push(next);
    }
    s
}

// g = f - 1 - x f has g_0 = 0 and g_m = s_m - s_{m-1}; then
// t_n = t_{n-1} + Σ_{i ≤ n-2} t_i g_{n-1-i}.
fn f_prime_coefficients(f: &[BigUint]) -> Vec<BigUint> {
    let g: Vec<BigUint> = (0..f.len()).map(|m| if m == 0 { BigUint::zero() } else { &f[m] - &f[m - 1] }).collect();
    let mut t: Vec<BigUint> = vec![BigUint::one()];
    for n in 1..f.len() {
        let conv: BigUint = (0..n.saturating_sub(1)).map(|i| &t[i] * &g[n - 1 - i]).sum();
        let next = &t[n - 1] + conv;
        t.push(next);
    }
    t
}

/// Truncated polynomial product over the integers.
pub fn poly_mul(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn signed(v: &[BigUint]) -> Vec<BigInt> {
    v.iter().map(|c| BigInt::from(c.clone())).collect()
}

/// Coefficients of `RHS - LHS` of the equation for `f`, up to `order`.
pub fn f_residual(f: &SeriesTable) -> Vec<BigInt> {
    let order = f.order();
    let fv = signed(&f.coefficients);
    let sq = poly_mul(&fv, &fv, order);
    let mut rhs = vec![BigInt::zero(); order + 1];
    rhs[0] += 1;
    for n in 1..=order {
        // 2x f + x f² - x f - x² f²
        rhs[n] += &fv[n - 1] * 2 + &sq[n - 1] - &fv[n - 1];
        if n >= 2 {
            rhs[n] -= &sq[n - 2];
        }
    }
    rhs.iter().zip(&fv).map(|(r, l)| r - l).collect()
}

/// Coefficients of `RHS - LHS` of the equation for `f′`, up to `order`.
pub fn f_prime_residual(f: &SeriesTable, fp: &SeriesTable) -> Vec<BigInt> {
    let order = f.order().min(fp.order());
    let fv = signed(&f.coefficients);
    let tv = signed(&fp.coefficients);
    // g = f - 1 - x f
    let g: Vec<BigInt> = (0..=order)
        .map(|m| {
            let mut c = fv[m].clone();
            if m == 0 {
                c -= 1;
            } else {
                c -= &fv[m - 1];
            }
            c
        })
        .collect();
    let tg = poly_mul(&tv, &g, order);
    let mut rhs = vec![BigInt::zero(); order + 1];
    rhs[0] += 1;
    for n in 1..=order {
        rhs[n] += &tv[n - 1] + &tg[n - 1];
    }
    rhs.iter().zip(&tv).map(|(r, l)| r - l).collect()
}

/// `f′ · (1 - x(1-x) f)` truncated to `order`; equals `1` when consistent.
pub fn f_prime_identity_product(f: &SeriesTable, fp: &SeriesTable, order: usize) -> Vec<BigInt> {
    let fv = signed(&f.coefficients);
    let tv = signed(&fp.coefficients);
    // 1 - (x - x²) f
    let mut factor = vec![BigInt::zero(); order + 1];
    factor[0] += 1;
    for n in 1..=order {
        factor[n] -= &fv[n - 1];
        if n >= 2 {
            factor[n] += &fv[n - 2];
        }
    }
    poly_mul(&tv, &factor, order)
}
