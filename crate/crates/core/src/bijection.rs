//! Bijections between pattern-avoiding partitions of `[n+1]` and Schröder
//! paths of semilength `n`.
//!
//! `encode` is shared by both avoidance classes; only the decoders differ,
//! in how a down step outside a peak picks its label from the open up-step
//! labels. `psi` rewrites UH-free paths into paths with no peak at even
//! level, and `psi_inv` undoes it.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{decompose, find_pattern, Pattern, SetPartition};
use crate::path::{validate, LatticePath, PathClass, Step};

/// Maps a partition avoiding `pattern` to its UH-free Schröder path.
///
/// Left-to-right maximum `i ≥ 2` emits `d_{i-1} + 1` up steps and a down
/// step; inside `w_i` a letter equal to `i` emits `H` and a smaller letter
/// emits `D`.
pub fn encode(pi: &SetPartition, pattern: Pattern) -> Result<LatticePath> {
    if pi.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !pattern.avoided_by(pi) {
        let positions = find_pattern(pi, &pattern.as_partition()).unwrap_or_default();
        return Err(Error::PatternFound { pattern: pattern.name().into(), positions });
    }
    let dec = decompose(pi);
    let mut steps = Vec::with_capacity(2 * pi.len());
    for (idx, w) in dec.words.iter().enumerate() {
        let label = idx as u32 + 1;
        if label >= 2 {
            steps.extend(std::iter::repeat_n(Step::U, dec.d[idx - 1] + 1));
            steps.push(Step::D);
        }
        steps.extend(w.iter().map(|&b| if b == label { Step::H } else { Step::D }));
    }
    Ok(LatticePath::from_steps_unchecked(steps))
}

/// Which extreme of the open-label multiset a non-peak down step takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeRule {
    /// σ⁻¹, producing 12312-avoiders.
    Max,
    /// φ⁻¹, producing 12321-avoiders.
    Min,
}

impl DecodeRule {
    pub fn pattern(self) -> Pattern {
        match self {
            DecodeRule::Max => Pattern::P12312,
            DecodeRule::Min => Pattern::P12321,
        }
    }
}

/// Labels on the working path `UD·P` together with the multisets of up- and
/// down-step labels seen so far.
#[derive(Debug, Clone, Default)]
pub struct DecoderState {
    pub steps: Vec<Step>,
    pub labels: Vec<u32>,
    // counts indexed by label
    up: Vec<usize>,
    down: Vec<usize>,
}

impl DecoderState {
    fn record(&mut self, step: Step, label: u32) {
        let l = label as usize;
        if self.up.len() <= l {
            self.up.resize(l + 1, 0);
            self.down.resize(l + 1, 0);
        }
        match step {
            Step::U => self.up[l] += 1,
            Step::D => self.down[l] += 1,
            _ => {}
        }
        self.steps.push(step);
        self.labels.push(label);
    }

    /// Labels of up steps left unmatched by down-step labels, with
    /// multiplicity, smallest first.
    pub fn open_labels(&self) -> Vec<u32> {
        self.up
            .iter()
            .zip(&self.down)
            .enumerate()
            .flat_map(|(l, (&u, &d))| std::iter::repeat_n(l as u32, u.saturating_sub(d)))
            .collect()
    }

    fn pick(&self, rule: DecodeRule) -> Option<u32> {
        let mut open = (0..self.up.len()).filter(|&l| self.up[l] > self.down[l]);
        let l = match rule {
            DecodeRule::Max => open.next_back(),
            DecodeRule::Min => open.next(),
        };
        l.map(|l| l as u32)
    }

    /// One line per step: `index step label`.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        for (i, (s, l)) in self.steps.iter().zip(&self.labels).enumerate() {
            let _ = writeln!(out, "{i} {} {l}", s.as_char());
        }
        out
    }

    /// The partition read off the labels of the down and horizontal steps.
    pub fn word(&self) -> Vec<u32> {
        self.steps
            .iter()
            .zip(&self.labels)
            .filter(|(s, _)| matches!(s, Step::D | Step::H))
            .map(|(_, &l)| l)
            .collect()
    }
}

fn require_uh_free(path: &LatticePath) -> Result<()> {
    validate(path.steps(), PathClass::UhFree).map_err(|e| Error::Malformed(format!("not a UH-free Schröder path: {e}")))
}

/// Runs the labelling on `UD·path` and returns the full state.
pub fn decode_state(path: &LatticePath, rule: DecodeRule) -> Result<DecoderState> {
    require_uh_free(path)?;
    let mut steps = vec![Step::U, Step::D];
    steps.extend_from_slice(path.steps());
    let is_peak_up = |i: usize| steps[i] == Step::U && steps.get(i + 1) == Some(&Step::D);

    let mut state = DecoderState::default();
    let mut next_peak = 1u32;
    let mut max_label = 0u32;
    for (i, &s) in steps.iter().enumerate() {
        let label = match s {
            Step::U if is_peak_up(i) => {
                next_peak += 1;
                next_peak - 1
            }
            Step::U | Step::H => max_label,
            Step::D if i > 0 && is_peak_up(i - 1) => state.labels[i - 1],
            Step::D => state.pick(rule).ok_or_else(|| {
                Error::Malformed(format!("no open up-step label for the down step at position {}", i - 1))
            })?,
            Step::L => return Err(Error::Malformed("left step in a Schröder path".into())),
        };
        max_label = max_label.max(label);
        state.record(s, label);
    }
    Ok(state)
}

pub fn decode(path: &LatticePath, rule: DecodeRule) -> Result<SetPartition> {
    let state = decode_state(path, rule)?;
    SetPartition::new(state.word()).map_err(|e| Error::Malformed(format!("decoded word is not canonical: {e}")))
}

pub fn sigma(pi: &SetPartition) -> Result<LatticePath> {
    encode(pi, Pattern::P12312)
}

pub fn phi(pi: &SetPartition) -> Result<LatticePath> {
    encode(pi, Pattern::P12321)
}

pub fn sigma_inv(path: &LatticePath) -> Result<SetPartition> {
    decode(path, DecodeRule::Max)
}

pub fn phi_inv(path: &LatticePath) -> Result<SetPartition> {
    decode(path, DecodeRule::Min)
}

/// Sends a UH-free Schröder path to a Schröder path without peaks at even
/// level of the same semilength.
pub fn psi(path: &LatticePath) -> Result<LatticePath> {
    require_uh_free(path)?;
    let mut out = Vec::with_capacity(path.len());
    psi_into(path.steps(), &mut out);
    Ok(LatticePath::from_steps_unchecked(out))
}

fn psi_into(mut p: &[Step], out: &mut Vec<Step>) {
    loop {
        match p {
            [] => return,
            [Step::H, rest @ ..] => {
                out.push(Step::H);
                p = rest;
            }
            [Step::U, Step::D, rest @ ..] => {
                out.extend([Step::U, Step::D]);
                p = rest;
            }
            _ => {
                // P = U^k D P_1 D P_2 … D P_k with k ≥ 2
                let k = p.iter().take_while(|&&s| s == Step::U).count();
                let mut rest = &p[k + 1..];
                out.push(Step::U);
                for _ in 1..k {
                    let (factor, after) = split_at_drop(rest);
                    if factor.is_empty() {
                        out.push(Step::H);
                    } else {
                        out.push(Step::U);
                        psi_into(factor, out);
                        out.push(Step::D);
                    }
                    rest = after;
                }
                out.push(Step::D);
                p = rest;
            }
        }
    }
}

/// Splits before the first step that ends below the starting height and
/// returns the factor before it and the steps after it.
fn split_at_drop(p: &[Step]) -> (&[Step], &[Step]) {
    let mut h = 0i64;
    for (i, s) in p.iter().enumerate() {
        h += s.dy();
        if h < 0 {
            return (&p[..i], &p[i + 1..]);
        }
    }
    (p, &[])
}

/// Inverse of [`psi`].
pub fn psi_inv(path: &LatticePath) -> Result<LatticePath> {
    validate(path.steps(), PathClass::NoEvenPeak)
        .map_err(|e| Error::Malformed(format!("not a Schröder path without even-level peaks: {e}")))?;
    let mut out = Vec::with_capacity(path.len());
    psi_inv_into(path.steps(), &mut out)?;
    Ok(LatticePath::from_steps_unchecked(out))
}

fn psi_inv_into(mut q: &[Step], out: &mut Vec<Step>) -> Result<()> {
    loop {
        match q {
            [] => return Ok(()),
            [Step::H, rest @ ..] => {
                out.push(Step::H);
                q = rest;
            }
            [Step::U, Step::D, rest @ ..] => {
                out.extend([Step::U, Step::D]);
                q = rest;
            }
            [Step::U, rest @ ..] => {
                // q = U B_1 … B_{k-1} D S, each B_i at height ≥ 1 being H or U X_i D
                let (inner, tail) = split_at_drop(rest);
                let mut blocks: Vec<Option<&[Step]>> = Vec::new();
                let mut b = inner;
                while !b.is_empty() {
                    match b {
                        [Step::H, more @ ..] => {
                            blocks.push(None);
                            b = more;
                        }
                        [Step::U, more @ ..] => {
                            let (x, after) = split_at_drop(more);
                            if x.is_empty() {
                                return Err(Error::Malformed("empty bracketed factor at level 1".into()));
                            }
                            blocks.push(Some(x));
                            b = after;
                        }
                        _ => return Err(Error::Malformed("factor at level 1 is neither H nor U…D".into())),
                    }
                }
                let k = blocks.len() + 1;
                out.extend(std::iter::repeat_n(Step::U, k));
                out.push(Step::D);
                for block in blocks {
                    if let Some(x) = block {
                        psi_inv_into(x, out)?;
                    }
                    out.push(Step::D);
                }
                q = tail;
            }
            _ => return Err(Error::Malformed("path starts with a down step".into())),
        }
    }
}

/// ψ∘σ
pub fn full_map_12312(pi: &SetPartition) -> Result<LatticePath> {
    psi(&sigma(pi)?)
}

/// ψ∘φ
pub fn full_map_12321(pi: &SetPartition) -> Result<LatticePath> {
    psi(&phi(pi)?)
}

pub fn full_inv_12312(path: &LatticePath) -> Result<SetPartition> {
    sigma_inv(&psi_inv(path)?)
}

pub fn full_inv_12321(path: &LatticePath) -> Result<SetPartition> {
    phi_inv(&psi_inv(path)?)
}

/// The named maps exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapName {
    Sigma,
    Phi,
    Psi,
    Full12312,
    Full12321,
}

impl MapName {
    pub fn name(self) -> &'static str {
        match self {
            MapName::Sigma => "sigma",
            MapName::Phi => "phi",
            MapName::Psi => "psi",
            MapName::Full12312 => "full12312",
            MapName::Full12321 => "full12321",
        }
    }
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sigma" => Ok(MapName::Sigma),
            "phi" => Ok(MapName::Phi),
            "psi" => Ok(MapName::Psi),
            "full12312" => Ok(MapName::Full12312),
            "full12321" => Ok(MapName::Full12321),
            other => Err(Error::Syntax(format!("unknown map {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_partition;

    fn p(s: &str) -> SetPartition {
        parse_partition(s).unwrap()
    }

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(sigma(&p("1")).unwrap(), LatticePath::empty());
        assert_eq!(sigma(&p("11232343411")).unwrap().to_string(), "HUUUDUUDDHUUDDHDD");
        assert_eq!(sigma(&p("12")).unwrap().to_string(), "UD");
        assert_eq!(phi(&p("12")).unwrap().to_string(), "UD");
    }

    #[test]
    fn encode_rejects_pattern() {
        match sigma(&p("12312")) {
            Err(Error::PatternFound { pattern, positions }) => {
                assert_eq!(pattern, "12312");
                assert_eq!(positions, vec![0, 1, 2, 3, 4]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(phi(&p("12321")), Err(Error::PatternFound { .. })));
        assert_eq!(sigma(&SetPartition::empty()), Err(Error::EmptyPartition));
    }

    #[test]
    fn decode_examples() {
        let ex = path("HUUDHHUUUDDHDHDUUDD");
        assert_eq!(sigma_inv(&ex).unwrap(), p("1122232323143"));
        assert_eq!(phi_inv(&ex).unwrap(), p("1122231323243"));
        assert_eq!(sigma_inv(&LatticePath::empty()).unwrap(), p("1"));
        assert_eq!(phi_inv(&LatticePath::empty()).unwrap(), p("1"));
        assert_eq!(sigma_inv(&path("UD")).unwrap(), p("12"));
        assert_eq!(phi_inv(&path("UD")).unwrap(), p("12"));
    }

    #[test]
    fn decode_trace_matches_worked_labels() {
        let state = decode_state(&path("HUUDHHUUUDDHDHDUUDD"), DecodeRule::Max).unwrap();
        assert_eq!(state.labels, vec![1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 2, 3, 2, 3, 1, 3, 4, 4, 3]);
        assert!(state.trace().starts_with("0 U 1\n1 D 1\n2 H 1\n"));
        assert!(state.open_labels().is_empty());
        let state = decode_state(&path("HUUDHHUUUDDHDHDUUDD"), DecodeRule::Min).unwrap();
        assert_eq!(state.labels[12], 1);
    }

    #[test]
    fn decode_rejects_non_uh_free() {
        assert!(matches!(sigma_inv(&path("UHD")), Err(Error::Malformed(_))));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&path("UUUDDHUDDUD")).unwrap().to_string(), "UHUHUDDDUD");
        assert_eq!(psi(&LatticePath::empty()).unwrap(), LatticePath::empty());
        assert_eq!(psi(&path("H")).unwrap().to_string(), "H");
        assert_eq!(psi(&path("UD")).unwrap().to_string(), "UD");
        assert_eq!(psi(&path("UUDD")).unwrap().to_string(), "UHD");
    }

    #[test]
    fn psi_inv_examples() {
        assert_eq!(psi_inv(&path("UHUHUDDDUD")).unwrap().to_string(), "UUUDDHUDDUD");
        assert_eq!(psi_inv(&path("UHD")).unwrap().to_string(), "UUDD");
        assert_eq!(psi_inv(&path("H")).unwrap().to_string(), "H");
        assert!(psi_inv(&path("UUDD")).is_err());
    }

    #[test]
    fn full_maps() {
        assert_eq!(full_map_12312(&p("1")).unwrap(), LatticePath::empty());
        assert_eq!(full_map_12312(&p("12")).unwrap().to_string(), "UD");
        let ex = p("11232343411");
        let image = full_map_12312(&ex).unwrap();
        assert_eq!(image, psi(&path("HUUUDUUDDHUUDDHDD")).unwrap());
        assert_eq!(image.to_string(), "HUUUHDHUHDHDHD");
        assert_eq!(full_inv_12312(&image).unwrap(), ex);
    }
}
