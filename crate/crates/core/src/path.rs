//! Schröder, Dyck and skew Dyck paths.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::DEFAULT_EXHAUSTIVE_LIMIT;

/// A single step. The derived order `U < D < H < L` is the generation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// (1, 1)
    U,
    /// (1, -1)
    D,
    /// (2, 0)
    H,
    /// (-1, -1)
    L,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::U, Step::D, Step::H, Step::L];

    pub fn dy(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D | Step::L => -1,
            Step::H => 0,
        }
    }

    /// Horizontal displacement in half-units.
    pub fn dx(self) -> i64 {
        match self {
            Step::U | Step::D => 1,
            Step::H => 2,
            Step::L => -1,
        }
    }

    /// Contribution to the semilength, in half-units.
    fn weight(self) -> usize {
        match self {
            Step::H => 2,
            _ => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
            Step::L => 'L',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::U),
            'D' => Some(Step::D),
            'H' => Some(Step::H),
            'L' => Some(Step::L),
            _ => None,
        }
    }
}

/// The path classes that can be parsed, classified and generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathClass {
    Schroder,
    UhFree,
    NoEvenPeak,
    UhFreeNoLevelOne,
    Dyck,
    SkewDyck,
    SkewDyckEndDown,
}

impl PathClass {
    pub const ALL: [PathClass; 7] = [
        PathClass::Schroder,
        PathClass::UhFree,
        PathClass::NoEvenPeak,
        PathClass::UhFreeNoLevelOne,
        PathClass::Dyck,
        PathClass::SkewDyck,
        PathClass::SkewDyckEndDown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PathClass::Schroder => "schroder",
            PathClass::UhFree => "uh_free",
            PathClass::NoEvenPeak => "no_even_peak",
            PathClass::UhFreeNoLevelOne => "uh_free_no_level_one",
            PathClass::Dyck => "dyck",
            PathClass::SkewDyck => "skew_dyck",
            PathClass::SkewDyckEndDown => "skew_dyck_end_down",
        }
    }

    pub fn alphabet(self) -> &'static [Step] {
        match self {
            PathClass::Dyck => &[Step::U, Step::D],
            PathClass::SkewDyck | PathClass::SkewDyckEndDown => &[Step::U, Step::D, Step::L],
            _ => &[Step::U, Step::D, Step::H],
        }
    }

    fn is_skew(self) -> bool {
        matches!(self, PathClass::SkewDyck | PathClass::SkewDyckEndDown)
    }

    fn forbids_uh(self) -> bool {
        matches!(self, PathClass::UhFree | PathClass::UhFreeNoLevelOne)
    }

    /// Whether a peak whose up step ends at `level` is allowed.
    fn allows_peak(self, level: i64) -> bool {
        match self {
            PathClass::NoEvenPeak => level % 2 != 0,
            PathClass::UhFreeNoLevelOne => level != 1,
            _ => true,
        }
    }

    pub fn contains(self, path: &LatticePath) -> bool {
        validate(path.steps(), self).is_ok()
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PathClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        PathClass::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::Syntax(format!("unknown path class {s:?}")))
    }
}

/// A lattice path from the origin back to the x-axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LatticePath {
    steps: Vec<Step>,
}

/// A `UD` factor: `index` is the position of the up step, `level` its height
/// after rising.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Peak {
    pub index: usize,
    pub level: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub uh_free: bool,
    pub no_even_peak: bool,
    pub no_level_one_peak: bool,
    pub ends_with_down: bool,
}

impl LatticePath {
    /// Validates `steps` as a member of `class`.
    pub fn new(steps: Vec<Step>, class: PathClass) -> Result<Self> {
        validate(&steps, class)?;
        Ok(LatticePath { steps })
    }

    pub fn empty() -> Self {
        LatticePath { steps: Vec::new() }
    }

    /// Caller guarantees the steps form a valid path.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.iter().map(|s| s.weight()).sum::<usize>() / 2
    }

    /// Prefix heights, one more entry than there are steps.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        let mut y = 0;
        h.push(y);
        for s in &self.steps {
            y += s.dy();
            h.push(y);
        }
        h
    }

    /// Plane coordinates of every lattice point, x in half-units.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for s in &self.steps {
            x += s.dx();
            y += s.dy();
            pts.push((x, y));
        }
        pts
    }

    pub fn peaks(&self) -> Vec<Peak> {
        let mut y = 0;
        let mut out = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            y += s.dy();
            if *s == Step::U && self.steps.get(i + 1) == Some(&Step::D) {
                out.push(Peak { index: i, level: y });
            }
        }
        out
    }

    pub fn peak_count(&self) -> usize {
        self.peaks().len()
    }

    pub fn classify(&self) -> Classification {
        let peaks = self.peaks();
        Classification {
            uh_free: !self.steps.windows(2).any(|w| w == [Step::U, Step::H]),
            no_even_peak: peaks.iter().all(|p| p.level % 2 != 0),
            no_level_one_peak: peaks.iter().all(|p| p.level != 1),
            ends_with_down: self.steps.last() == Some(&Step::D),
        }
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }
}

impl From<LatticePath> for String {
    fn from(p: LatticePath) -> Self {
        p.to_string()
    }
}

impl TryFrom<String> for LatticePath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

/// Parses a path of unspecified class: skew Dyck rules apply when `L` is
/// present, Schröder rules otherwise.
impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let class = if s.contains('L') { PathClass::SkewDyck } else { PathClass::Schroder };
        parse_path(s, class)
    }
}

pub fn parse_path(text: &str, class: PathClass) -> Result<LatticePath> {
    let steps = text
        .trim()
        .chars()
        .enumerate()
        .map(|(i, c)| {
            Step::from_char(c)
                .filter(|s| class.alphabet().contains(s))
                .ok_or(Error::UnknownStep { ch: c, position: i + 1 })
        })
        .collect::<Result<Vec<_>>>()?;
    LatticePath::new(steps, class)
}

/// Checks alphabet, height, skew geometry and class restrictions.
/// Positions in errors are 1-based.
pub fn validate(steps: &[Step], class: PathClass) -> Result<()> {
    let alphabet = class.alphabet();
    let mut y = 0i64;
    let mut skew = SkewTracer::default();
    for (i, &s) in steps.iter().enumerate() {
        if !alphabet.contains(&s) {
            return Err(Error::UnknownStep { ch: s.as_char(), position: i + 1 });
        }
        if class.is_skew() {
            skew.push(s, y).map_err(|e| match e {
                SkewViolation::Overlap => Error::SkewOverlap { position: i + 1 },
                SkewViolation::OutOfQuadrant => Error::SkewOutOfQuadrant { position: i + 1 },
            })?;
        }
        y += s.dy();
        if y < 0 {
            return Err(Error::NegativeHeight { position: i + 1 });
        }
        if class.forbids_uh() && s == Step::H && i > 0 && steps[i - 1] == Step::U {
            return Err(Error::ClassViolation {
                class: class.name(),
                reason: format!("up step followed by a horizontal step at position {i}"),
            });
        }
        if s == Step::D && i > 0 && steps[i - 1] == Step::U && !class.allows_peak(y + 1) {
            return Err(Error::ClassViolation {
                class: class.name(),
                reason: format!("peak at level {} (position {i})", y + 1),
            });
        }
    }
    if y != 0 {
        return Err(Error::NonzeroFinalHeight { height: y });
    }
    if class == PathClass::SkewDyckEndDown && steps.last().is_some_and(|&s| s != Step::D) {
        return Err(Error::ClassViolation { class: class.name(), reason: "does not end with a down step".into() });
    }
    Ok(())
}

enum SkewViolation {
    Overlap,
    OutOfQuadrant,
}

/// Traces a skew path in the plane. Unit diagonal segments of slope +1 are
/// keyed by their lower-left endpoint; an up step and a left step overlap
/// exactly when they share that key.
#[derive(Debug, Default, Clone)]
struct SkewTracer {
    x: i64,
    up_segments: HashSet<(i64, i64)>,
    left_segments: HashSet<(i64, i64)>,
    log: Vec<(Step, i64)>,
}

impl SkewTracer {
    fn check(&self, s: Step, y: i64) -> std::result::Result<(), SkewViolation> {
        match s {
            Step::U if self.left_segments.contains(&(self.x, y)) => Err(SkewViolation::Overlap),
            Step::L if self.up_segments.contains(&(self.x - 1, y - 1)) => Err(SkewViolation::Overlap),
            Step::L if self.x - 1 < 0 => Err(SkewViolation::OutOfQuadrant),
            _ => Ok(()),
        }
    }

    fn push(&mut self, s: Step, y: i64) -> std::result::Result<(), SkewViolation> {
        self.check(s, y)?;
        match s {
            Step::U => {
                self.up_segments.insert((self.x, y));
            }
            Step::L => {
                self.left_segments.insert((self.x - 1, y - 1));
            }
            _ => {}
        }
        self.x += s.dx();
        self.log.push((s, y));
        Ok(())
    }

    fn pop(&mut self) {
        if let Some((s, y)) = self.log.pop() {
            self.x -= s.dx();
            match s {
                Step::U => {
                    self.up_segments.remove(&(self.x, y));
                }
                Step::L => {
                    self.left_segments.remove(&(self.x - 1, y - 1));
                }
                _ => {}
            }
        }
    }
}

/// Lexicographic depth-first enumeration of one path class at a fixed
/// semilength, driven by an explicit stack so it can stream.
#[derive(Debug, Clone)]
pub struct Paths {
    class: PathClass,
    budget: usize,
    steps: Vec<Step>,
    height: i64,
    used: usize,
    skew: SkewTracer,
    started: bool,
    done: bool,
}

impl Paths {
    fn new(n: usize, class: PathClass) -> Self {
        Paths {
            class,
            budget: 2 * n,
            steps: Vec::new(),
            height: 0,
            used: 0,
            skew: SkewTracer::default(),
            started: false,
            done: false,
        }
    }

    fn allowed(&self, s: Step) -> bool {
        if !self.class.alphabet().contains(&s) {
            return false;
        }
        let rem = (self.budget - self.used) as i64;
        let h = self.height;
        let ok = match s {
            Step::U => h + 2 <= rem,
            Step::D | Step::L => h >= 1,
            Step::H => h + 2 <= rem,
        };
        if !ok {
            return false;
        }
        let prev = self.steps.last().copied();
        if prev == Some(Step::U) {
            if s == Step::H && self.class.forbids_uh() {
                return false;
            }
            if s == Step::D && !self.class.allows_peak(h) {
                return false;
            }
        }
        !self.class.is_skew() || self.skew.check(s, h).is_ok()
    }

    fn push(&mut self, s: Step) {
        if self.class.is_skew() {
            // allowed() has already run the same geometric check
            let _ = self.skew.push(s, self.height);
        }
        self.height += s.dy();
        self.used += s.weight();
        self.steps.push(s);
    }

    fn pop(&mut self) -> Option<Step> {
        let s = self.steps.pop()?;
        if self.class.is_skew() {
            self.skew.pop();
        }
        self.height -= s.dy();
        self.used -= s.weight();
        Some(s)
    }

    fn is_complete(&self) -> bool {
        self.used == self.budget && self.height == 0
    }

    fn accepts_complete(&self) -> bool {
        self.class != PathClass::SkewDyckEndDown || self.steps.last().is_none_or(|&s| s == Step::D)
    }

    fn first_allowed_after(&self, after: Option<Step>) -> Option<Step> {
        Step::ALL.into_iter().filter(|&s| after.is_none_or(|a| s > a)).find(|&s| self.allowed(s))
    }

    /// Replaces the deepest step that has an untried successor.
    fn backtrack(&mut self) -> bool {
        while let Some(last) = self.pop() {
            if let Some(s) = self.first_allowed_after(Some(last)) {
                self.push(s);
                return true;
            }
        }
        false
    }

    /// Extends greedily to the smallest complete path at or after the
    /// current prefix.
    fn fill(&mut self) -> bool {
        loop {
            if self.is_complete() {
                if self.accepts_complete() {
                    return true;
                }
                if !self.backtrack() {
                    return false;
                }
                continue;
            }
            match self.first_allowed_after(None) {
                Some(s) => self.push(s),
                None => {
                    if !self.backtrack() {
                        return false;
                    }
                }
            }
        }
    }
}

impl Iterator for Paths {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.done {
            return None;
        }
        let found = if self.started { self.backtrack() && self.fill() } else { self.fill() };
        self.started = true;
        if found {
            Some(LatticePath { steps: self.steps.clone() })
        } else {
            self.done = true;
            None
        }
    }
}

pub fn generate_paths(n: usize, class: PathClass) -> Result<Paths> {
    generate_paths_limited(n, class, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn generate_paths_limited(n: usize, class: PathClass, limit: usize) -> Result<Paths> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Ok(Paths::new(n, class))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: usize, class: PathClass) -> Vec<String> {
        generate_paths(n, class).unwrap().map(|p| p.to_string()).collect()
    }

    #[test]
    fn parse_examples() {
        let p = parse_path("UD", PathClass::Dyck).unwrap();
        assert_eq!(p.semilength(), 1);
        assert_eq!(parse_path("UHD", PathClass::Schroder).unwrap().heights(), vec![0, 1, 1, 0]);
        assert_eq!(parse_path("UL", PathClass::SkewDyck), Err(Error::SkewOverlap { position: 2 }));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_path("UH", PathClass::Dyck), Err(Error::UnknownStep { ch: 'H', position: 2 }));
        assert_eq!(parse_path("DU", PathClass::Schroder), Err(Error::NegativeHeight { position: 1 }));
        assert_eq!(parse_path("UUD", PathClass::Schroder), Err(Error::NonzeroFinalHeight { height: 1 }));
        assert!(matches!(parse_path("UHD", PathClass::UhFree), Err(Error::ClassViolation { .. })));
        assert!(matches!(parse_path("UUDD", PathClass::NoEvenPeak), Err(Error::ClassViolation { .. })));
        assert!(matches!(parse_path("UD", PathClass::UhFreeNoLevelOne), Err(Error::ClassViolation { .. })));
        assert!(matches!(parse_path("UUDL", PathClass::SkewDyckEndDown), Err(Error::ClassViolation { .. })));
        // an up step may not retrace a traced left step either
        assert_eq!(parse_path("UUUDLLUD", PathClass::SkewDyck), Err(Error::SkewOverlap { position: 7 }));
    }

    #[test]
    fn peak_examples() {
        let p: LatticePath = "UD".parse().unwrap();
        assert_eq!(p.peaks(), vec![Peak { index: 0, level: 1 }]);
        let ex: LatticePath = "HUUUDUUDDHUUDDHDD".parse().unwrap();
        assert_eq!(ex.peaks().iter().map(|p| p.level).collect::<Vec<_>>(), vec![3, 4, 4]);
        assert!("UHD".parse::<LatticePath>().unwrap().peaks().is_empty());
    }

    #[test]
    fn classify_examples() {
        assert!(!"UHD".parse::<LatticePath>().unwrap().classify().uh_free);
        let c = "UUDD".parse::<LatticePath>().unwrap().classify();
        assert!(!c.no_even_peak && c.no_level_one_peak);
        assert!("HUUUDUUDDHUUDDHDD".parse::<LatticePath>().unwrap().classify().uh_free);
        assert!(!LatticePath::empty().classify().ends_with_down);
    }

    #[test]
    fn generation_examples() {
        assert_eq!(all(0, PathClass::Schroder), vec![""]);
        assert_eq!(all(1, PathClass::Schroder), vec!["UD", "H"]);
        assert_eq!(all(2, PathClass::UhFree), vec!["UUDD", "UDUD", "UDH", "HUD", "HH"]);
        assert_eq!(all(2, PathClass::SkewDyck), vec!["UUDD", "UUDL", "UDUD"]);
        assert_eq!(all(2, PathClass::SkewDyckEndDown).len(), 2);
        assert_eq!(all(2, PathClass::UhFreeNoLevelOne), vec!["UUDD", "HH"]);
        assert_eq!(all(1, PathClass::UhFreeNoLevelOne), vec!["H"]);
        for class in PathClass::ALL {
            assert_eq!(all(0, class), vec![""], "{class}");
        }
    }

    #[test]
    fn generation_counts() {
        let counts = |class| (0..=6).map(|n| generate_paths(n, class).unwrap().count()).collect::<Vec<_>>();
        assert_eq!(counts(PathClass::Schroder), vec![1, 2, 6, 22, 90, 394, 1806]);
        assert_eq!(counts(PathClass::Dyck), vec![1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(counts(PathClass::SkewDyck)[..6], [1, 1, 3, 10, 36, 137]);
        assert_eq!(counts(PathClass::UhFree), counts(PathClass::NoEvenPeak));
    }

    #[test]
    fn generation_is_sorted_and_valid() {
        for class in PathClass::ALL {
            let paths: Vec<_> = generate_paths(5, class).unwrap().collect();
            assert!(paths.windows(2).all(|w| w[0].steps() < w[1].steps()), "{class}");
            for p in &paths {
                assert_eq!(parse_path(&p.to_string(), class).as_ref(), Ok(p));
            }
        }
    }

    #[test]
    fn class_names_round_trip() {
        for class in PathClass::ALL {
            assert_eq!(class.name().parse::<PathClass>().unwrap(), class);
        }
        assert_eq!("uh-free".parse::<PathClass>().unwrap(), PathClass::UhFree);
        assert!("motzkin".parse::<PathClass>().is_err());
    }
}
