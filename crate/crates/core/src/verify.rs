//! Exhaustive cross-checks between generators, predicates, bijections and
//! closed-form counts.
//!
//! Each property is checked for increasing `n`; the first failure stops that
//! property and records the lexicographically first counterexample.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bijection::{self, DecodeRule};
use crate::enumeration::{self, SeriesKind};
use crate::partition::{self, Pattern, SetPartition};
use crate::path::{self, LatticePath, PathClass, Step};

/// Largest semilength for the `3^(2n)` brute-force skew Dyck oracle.
pub const SKEW_BRUTE_FORCE_MAX: usize = 5;

/// Minimum truncation order for the series identities.
pub const SERIES_CHECK_ORDER: usize = 16;

type Check = fn(usize) -> Result<(), String>;

struct Property {
    name: &'static str,
    /// Largest `n` to check, as a function of the requested maximum.
    reach: fn(usize) -> usize,
    check: Check,
}

fn same(n: usize) -> usize {
    n
}

fn plus_one(n: usize) -> usize {
    n + 1
}

fn plus_two(n: usize) -> usize {
    n + 2
}

fn skew_cap(n: usize) -> usize {
    n.min(SKEW_BRUTE_FORCE_MAX)
}

fn series_order(n: usize) -> usize {
    n.max(SERIES_CHECK_ORDER)
}

const PROPERTIES: &[Property] = &[
    Property { name: "partitions/bell-count", reach: plus_two, check: check_bell_count },
    Property { name: "partitions/fast-avoidance", reach: plus_one, check: check_fast_avoidance },
    Property { name: "partitions/decompose", reach: plus_two, check: check_decompose },
    Property { name: "partitions/irreducible", reach: plus_one, check: check_irreducible },
    Property { name: "partitions/long-pattern", reach: same, check: check_long_pattern },
    Property { name: "paths/schroder-count", reach: same, check: check_schroder_count },
    Property { name: "paths/uh-free-vs-no-even-peak", reach: same, check: check_uh_vs_even },
    Property { name: "paths/parse-round-trip", reach: same, check: check_parse_round_trip },
    Property { name: "paths/dyck-narayana", reach: same, check: check_dyck_narayana },
    Property { name: "paths/skew-second-oracle", reach: skew_cap, check: check_skew_oracle },
    Property { name: "bijections/sigma", reach: same, check: check_sigma },
    Property { name: "bijections/phi", reach: same, check: check_phi },
    Property { name: "bijections/blocks-to-peaks", reach: same, check: check_blocks_to_peaks },
    Property { name: "bijections/irreducible-to-level-one", reach: same, check: check_irreducible_transport },
    Property { name: "bijections/psi", reach: same, check: check_psi },
    Property { name: "bijections/full-maps", reach: same, check: check_full_maps },
    Property { name: "enumeration/total-counts", reach: same, check: check_total_counts },
    Property { name: "enumeration/refined-counts", reach: same, check: check_refined_counts },
    Property { name: "enumeration/f-prime-counts", reach: same, check: check_f_prime_counts },
    Property { name: "enumeration/series-identities", reach: series_order, check: check_series_identities },
];

pub fn property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|p| p.name).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    /// Largest `n` checked.
    pub max_n: usize,
    /// Smallest failing `n` and its first counterexample.
    pub failure: Option<(usize, String)>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} n=0..{}", self.name, self.max_n),
            Some((n, msg)) => write!(f, "FAIL {} n={n}: {msg}", self.name),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub properties: Vec<PropertyReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyReport> {
        self.properties.iter().filter(|p| !p.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} properties, {} failed", self.properties.len(), failed)
    }
}

/// Runs one property for `n = 0..=reach(max_n)`.
pub fn run_property(name: &str, max_n: usize) -> Option<PropertyReport> {
    let prop = PROPERTIES.iter().find(|p| p.name == name)?;
    Some(run(prop, max_n))
}

fn run(prop: &Property, max_n: usize) -> PropertyReport {
    let reach = (prop.reach)(max_n);
    let failure = (0..=reach).find_map(|n| (prop.check)(n).err().map(|msg| (n, msg)));
    PropertyReport { name: prop.name, max_n: reach, failure }
}

pub fn run_all(max_n: usize) -> Report {
    Report { properties: PROPERTIES.iter().map(|p| run(p, max_n)).collect() }
}

fn partitions(n: usize) -> Result<Vec<SetPartition>, String> {
    partition::generate_partitions_limited(n, usize::MAX)
        .map(Iterator::collect)
        .map_err(|e| e.to_string())
}

fn paths(n: usize, class: PathClass) -> Result<Vec<LatticePath>, String> {
    path::generate_paths_limited(n, class, usize::MAX)
        .map(Iterator::collect)
        .map_err(|e| e.to_string())
}

fn avoiders(m: usize, pattern: Pattern) -> Result<Vec<SetPartition>, String> {
    Ok(partitions(m)?.into_iter().filter(|p| pattern.avoided_by(p)).collect())
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, left: T, right: T) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left:?} != {right:?}"))
    }
}

fn first_difference<T: Ord + Clone + fmt::Display>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> Option<String> {
    let only_a = a.difference(b).next().map(|x| format!("{x} only on the left"));
    let only_b = b.difference(a).next().map(|x| format!("{x} only on the right"));
    match (only_a, only_b) {
        (None, None) => None,
        (Some(x), None) | (None, Some(x)) => Some(x),
        (Some(x), Some(y)) => Some(format!("{x}; {y}")),
    }
}

fn check_bell_count(n: usize) -> Result<(), String> {
    let all = partitions(n)?;
    let bell = enumeration::bell_numbers(n).pop().unwrap_or_default();
    expect_eq("count vs Bell triangle", BigUint::from(all.len()), bell)?;
    if let Some(w) = all.windows(2).find(|w| w[0] >= w[1]) {
        return Err(format!("not strictly increasing at {}", w[1]));
    }
    for p in &all {
        SetPartition::new(p.word().to_vec()).map_err(|e| format!("{p}: {e}"))?;
    }
    Ok(())
}

fn check_fast_avoidance(n: usize) -> Result<(), String> {
    for p in partitions(n)? {
        for pattern in Pattern::ALL {
            let brute = partition::avoids(&p, &pattern.as_partition());
            if pattern.avoided_by(&p) != brute {
                return Err(format!("{p}: fast {pattern} check says {}", !brute));
            }
        }
    }
    Ok(())
}

fn check_decompose(n: usize) -> Result<(), String> {
    for p in partitions(n)? {
        if p.is_empty() {
            continue;
        }
        let d = partition::decompose(&p);
        if d.reassemble() != p.word() {
            return Err(format!("{p}: reassembly differs"));
        }
        for (i, w) in d.words.iter().enumerate() {
            if w.iter().any(|&b| b as usize > i + 1) {
                return Err(format!("{p}: w_{} has a letter above {}", i + 1, i + 1));
            }
        }
    }
    Ok(())
}

fn check_irreducible(n: usize) -> Result<(), String> {
    for p in partitions(n)? {
        if p.is_empty() {
            continue;
        }
        if partition::is_irreducible(&p) != partition::is_irreducible_char(&p) {
            return Err(format!("{p}: split definition and first-occurrence test disagree"));
        }
    }
    Ok(())
}

fn check_long_pattern(n: usize) -> Result<(), String> {
    let longer = partitions(n + 1)?;
    for p in partitions(n)? {
        if let Some(t) = longer.iter().find(|t| partition::contains_pattern(&p, t)) {
            return Err(format!("{p} reported to contain the longer {t}"));
        }
    }
    Ok(())
}

fn check_schroder_count(n: usize) -> Result<(), String> {
    expect_eq(
        "Schröder paths vs recurrence",
        BigUint::from(paths(n, PathClass::Schroder)?.len()),
        enumeration::large_schroder(n),
    )
}

fn check_uh_vs_even(n: usize) -> Result<(), String> {
    expect_eq("UH-free vs no-even-peak", paths(n, PathClass::UhFree)?.len(), paths(n, PathClass::NoEvenPeak)?.len())
}

fn check_parse_round_trip(n: usize) -> Result<(), String> {
    for class in PathClass::ALL {
        for p in paths(n, class)? {
            let text = p.to_string();
            match path::parse_path(&text, class) {
                Ok(q) if q == p => {}
                Ok(_) => return Err(format!("{class} {text}: parsed to a different path")),
                Err(e) => return Err(format!("{class} {text}: {e}")),
            }
            if p.semilength() != n {
                return Err(format!("{class} {text}: semilength {}", p.semilength()));
            }
        }
    }
    Ok(())
}

fn check_dyck_narayana(n: usize) -> Result<(), String> {
    let mut census: BTreeMap<usize, u64> = BTreeMap::new();
    for p in paths(n, PathClass::Dyck)? {
        *census.entry(p.peak_count()).or_default() += 1;
    }
    for k in 0..=n {
        let got = BigUint::from(census.get(&k).copied().unwrap_or(0));
        expect_eq(&format!("Dyck paths with {k} peaks"), got, enumeration::narayana(n as u64, k as u64))?;
    }
    Ok(())
}

/// Independent skew Dyck membership: trace every step as an unordered pair
/// of plane points and reject any up segment that equals a left segment.
fn skew_by_segments(steps: &[Step]) -> bool {
    type Seg = ((i64, i64), (i64, i64));
    let norm = |a: (i64, i64), b: (i64, i64)| -> Seg { if a <= b { (a, b) } else { (b, a) } };
    let (mut x, mut y) = (0i64, 0i64);
    let mut ups: HashSet<Seg> = HashSet::new();
    let mut lefts: HashSet<Seg> = HashSet::new();
    for s in steps {
        let (nx, ny) = match s {
            Step::U => (x + 1, y + 1),
            Step::D => (x + 1, y - 1),
            Step::L => (x - 1, y - 1),
            Step::H => return false,
        };
        if nx < 0 || ny < 0 {
            return false;
        }
        let seg = norm((x, y), (nx, ny));
        match s {
            Step::U => {
                ups.insert(seg);
            }
            Step::L => {
                lefts.insert(seg);
            }
            _ => {}
        }
        (x, y) = (nx, ny);
    }
    y == 0 && ups.is_disjoint(&lefts)
}

fn check_skew_oracle(n: usize) -> Result<(), String> {
    let generated: BTreeSet<String> = paths(n, PathClass::SkewDyck)?.iter().map(|p| p.to_string()).collect();
    let mut brute = BTreeSet::new();
    let len = 2 * n;
    let alphabet = [Step::U, Step::D, Step::L];
    let mut digits = vec![0usize; len];
    loop {
        let steps: Vec<Step> = digits.iter().map(|&d| alphabet[d]).collect();
        if skew_by_segments(&steps) {
            brute.insert(steps.iter().map(|s| s.as_char()).collect::<String>());
        }
        // odometer
        let mut i = len;
        loop {
            if i == 0 {
                return match first_difference(&generated, &brute) {
                    None => Ok(()),
                    Some(d) => Err(format!("generator vs segment oracle: {d}")),
                };
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < alphabet.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

fn check_round_trip(n: usize, rule: DecodeRule) -> Result<(), String> {
    let pattern = rule.pattern();
    let mut images = BTreeSet::new();
    for p in avoiders(n + 1, pattern)? {
        let image = bijection::encode(&p, pattern).map_err(|e| format!("{p}: {e}"))?;
        if !PathClass::UhFree.contains(&image) || image.semilength() != n {
            return Err(format!("{p} -> {image} is not a UH-free path of semilength {n}"));
        }
        let back = bijection::decode(&image, rule).map_err(|e| format!("{image}: {e}"))?;
        if back != p {
            return Err(format!("{p} -> {image} -> {back}"));
        }
        if !images.insert(image.to_string()) {
            return Err(format!("{p}: image {image} already taken"));
        }
    }
    let target: BTreeSet<String> = paths(n, PathClass::UhFree)?.iter().map(|p| p.to_string()).collect();
    if let Some(d) = first_difference(&images, &target) {
        return Err(format!("image vs UH-free paths: {d}"));
    }
    for q in paths(n, PathClass::UhFree)? {
        let p = bijection::decode(&q, rule).map_err(|e| format!("{q}: {e}"))?;
        let again = bijection::encode(&p, pattern).map_err(|e| format!("{q} -> {p}: {e}"))?;
        if again != q {
            return Err(format!("{q} -> {p} -> {again}"));
        }
    }
    Ok(())
}

fn check_sigma(n: usize) -> Result<(), String> {
    check_round_trip(n, DecodeRule::Max)
}

fn check_phi(n: usize) -> Result<(), String> {
    check_round_trip(n, DecodeRule::Min)
}

fn check_blocks_to_peaks(n: usize) -> Result<(), String> {
    for pattern in Pattern::ALL {
        for p in avoiders(n + 1, pattern)? {
            let image = bijection::encode(&p, pattern).map_err(|e| e.to_string())?;
            if p.block_count() != image.peak_count() + 1 {
                return Err(format!("{p} ({} blocks) -> {image} ({} peaks)", p.block_count(), image.peak_count()));
            }
        }
    }
    Ok(())
}

fn check_irreducible_transport(n: usize) -> Result<(), String> {
    for pattern in Pattern::ALL {
        for p in avoiders(n + 1, pattern)? {
            let image = bijection::encode(&p, pattern).map_err(|e| e.to_string())?;
            if partition::is_irreducible(&p) != image.classify().no_level_one_peak {
                return Err(format!("{p} -> {image}: irreducibility not transported"));
            }
        }
    }
    Ok(())
}

fn check_psi(n: usize) -> Result<(), String> {
    let mut images = BTreeSet::new();
    for p in paths(n, PathClass::UhFree)? {
        let q = bijection::psi(&p).map_err(|e| format!("{p}: {e}"))?;
        if q.semilength() != n || !PathClass::NoEvenPeak.contains(&q) {
            return Err(format!("{p} -> {q} is not a no-even-peak path of semilength {n}"));
        }
        let back = bijection::psi_inv(&q).map_err(|e| format!("{q}: {e}"))?;
        if back != p {
            return Err(format!("{p} -> {q} -> {back}"));
        }
        if !images.insert(q.to_string()) {
            return Err(format!("{p}: image {q} already taken"));
        }
    }
    let target: BTreeSet<String> = paths(n, PathClass::NoEvenPeak)?.iter().map(|p| p.to_string()).collect();
    if let Some(d) = first_difference(&images, &target) {
        return Err(format!("psi image vs no-even-peak paths: {d}"));
    }
    for q in paths(n, PathClass::NoEvenPeak)? {
        let p = bijection::psi_inv(&q).map_err(|e| format!("{q}: {e}"))?;
        let again = bijection::psi(&p).map_err(|e| format!("{q} -> {p}: {e}"))?;
        if again != q {
            return Err(format!("{q} -> {p} -> {again}"));
        }
    }
    Ok(())
}

fn check_full_maps(n: usize) -> Result<(), String> {
    type Fwd = fn(&SetPartition) -> crate::Result<LatticePath>;
    type Inv = fn(&LatticePath) -> crate::Result<SetPartition>;
    let maps: [(Pattern, Fwd, Inv); 2] = [
        (Pattern::P12312, bijection::full_map_12312, bijection::full_inv_12312),
        (Pattern::P12321, bijection::full_map_12321, bijection::full_inv_12321),
    ];
    let target: BTreeSet<String> = paths(n, PathClass::NoEvenPeak)?.iter().map(|p| p.to_string()).collect();
    for (pattern, fwd, inv) in maps {
        let mut images = BTreeSet::new();
        for p in avoiders(n + 1, pattern)? {
            let q = fwd(&p).map_err(|e| format!("{p}: {e}"))?;
            let back = inv(&q).map_err(|e| format!("{q}: {e}"))?;
            if back != p {
                return Err(format!("{pattern}: {p} -> {q} -> {back}"));
            }
            images.insert(q.to_string());
        }
        if let Some(d) = first_difference(&images, &target) {
            return Err(format!("{pattern} composed image vs no-even-peak paths: {d}"));
        }
    }
    Ok(())
}

fn check_total_counts(n: usize) -> Result<(), String> {
    let f = enumeration::series_f(n);
    let fn_ = f.coefficients[n].clone();
    let total: BigUint = (0..=n as u64).map(|k| enumeration::count_blocks(n as u64, k)).sum();
    expect_eq("sum of block counts vs f", total, fn_.clone())?;
    for pattern in Pattern::ALL {
        expect_eq(
            &format!("{pattern}-avoiders of [{}] vs f", n + 1),
            BigUint::from(avoiders(n + 1, pattern)?.len()),
            fn_.clone(),
        )?;
    }
    expect_eq("UH-free paths vs f", BigUint::from(paths(n, PathClass::UhFree)?.len()), fn_)
}

fn check_refined_counts(n: usize) -> Result<(), String> {
    let mut peak_census: BTreeMap<usize, u64> = BTreeMap::new();
    for p in paths(n, PathClass::UhFree)? {
        *peak_census.entry(p.peak_count()).or_default() += 1;
    }
    let mut block_census: [BTreeMap<usize, u64>; 2] = Default::default();
    for (i, pattern) in Pattern::ALL.into_iter().enumerate() {
        for p in avoiders(n + 1, pattern)? {
            *block_census[i].entry(p.block_count() - 1).or_default() += 1;
        }
    }
    for k in 0..=n + 1 {
        let formula = enumeration::count_blocks(n as u64, k as u64);
        let formula = if k > n { BigUint::zero() } else { formula };
        for (i, pattern) in Pattern::ALL.into_iter().enumerate() {
            let got = BigUint::from(block_census[i].get(&k).copied().unwrap_or(0));
            expect_eq(&format!("{pattern}-avoiders with {} blocks", k + 1), got, formula.clone())?;
        }
        let got = BigUint::from(peak_census.get(&k).copied().unwrap_or(0));
        expect_eq(&format!("UH-free paths with {k} peaks"), got, formula.clone())?;
        if k <= n {
            expect_eq(
                &format!("peak formula vs block formula at k={k}"),
                enumeration::count_uhfree_with_peaks(n as u64, k as u64),
                formula,
            )?;
        }
    }
    Ok(())
}

fn check_f_prime_counts(n: usize) -> Result<(), String> {
    let fp = enumeration::series_f_prime(n).coefficients[n].clone();
    expect_eq(
        "UH-free paths without level-one peaks vs f'",
        BigUint::from(paths(n, PathClass::UhFreeNoLevelOne)?.len()),
        fp.clone(),
    )?;
    for pattern in Pattern::ALL {
        let irreducible = avoiders(n + 1, pattern)?.iter().filter(|p| partition::is_irreducible(p)).count();
        expect_eq(&format!("irreducible {pattern}-avoiders vs f'"), BigUint::from(irreducible), fp.clone())?;
    }
    expect_eq(
        "skew Dyck paths ending with D vs f'",
        BigUint::from(paths(n, PathClass::SkewDyckEndDown)?.len()),
        fp,
    )
}

/// Checks coefficient `n` of the three series identities.
fn check_series_identities(n: usize) -> Result<(), String> {
    let f = enumeration::series(SeriesKind::F, n);
    let fp = enumeration::series(SeriesKind::FPrime, n);
    let r = enumeration::f_residual(&f);
    if !r[n].is_zero() {
        return Err(format!("f equation residual {}", r[n]));
    }
    let r = enumeration::f_prime_residual(&f, &fp);
    if !r[n].is_zero() {
        return Err(format!("f' equation residual {}", r[n]));
    }
    let prod = enumeration::f_prime_identity_product(&f, &fp, n);
    let ok = if n == 0 { prod[0].is_one() } else { prod[n].is_zero() };
    if !ok {
        return Err(format!("f'(1 - x(1-x)f) has coefficient {} at x^{n}", prod[n]));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_oracle_agrees_on_examples() {
        let steps = |s: &str| s.chars().map(|c| Step::from_char(c).unwrap()).collect::<Vec<_>>();
        assert!(skew_by_segments(&steps("UUDL")));
        assert!(!skew_by_segments(&steps("UL")));
        assert!(!skew_by_segments(&steps("UUUDLLUD")));
        assert!(skew_by_segments(&[]));
    }

    #[test]
    fn small_run_passes() {
        let report = run_all(4);
        assert!(report.passed(), "{report}");
        assert_eq!(report.properties.len(), property_names().len());
    }

    #[test]
    fn report_formatting() {
        let r = PropertyReport { name: "x", max_n: 3, failure: Some((2, "boom".into())) };
        assert_eq!(r.to_string(), "FAIL x n=2: boom");
        assert!(run_property("nope", 1).is_none());
        assert!(run_property("paths/schroder-count", 3).unwrap().passed());
    }
}
