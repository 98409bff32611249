//! Set partitions in canonical sequential form (restricted growth strings).
//!
//! A partition of `[n]` is stored as the word `π_1 … π_n` where `π_i` is the
//! 1-based index of the block holding `i`, blocks being ordered by their
//! minimum element. Pattern containment, the left-to-right-maxima
//! decomposition and irreducibility all work on this word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on `n` for exhaustive generators.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 12;

/// A set partition in canonical sequential form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct SetPartition {
    word: Vec<u32>,
}

impl SetPartition {
    /// Validates `word` against the restricted growth condition.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let mut max = 0u32;
        for (i, &letter) in word.iter().enumerate() {
            if letter == 0 || letter > max + 1 {
                return Err(Error::RestrictedGrowth { position: i + 1 });
            }
            max = max.max(letter);
        }
        Ok(SetPartition { word })
    }

    /// The partition of the empty set.
    pub fn empty() -> Self {
        SetPartition { word: Vec::new() }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.word.iter().copied().max().unwrap_or(0) as usize
    }

    /// The blocks as sorted lists of 1-based elements.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &b) in self.word.iter().enumerate() {
            blocks[b as usize - 1].push(i + 1);
        }
        blocks
    }

    /// Compact digit form, only meaningful when every label is at most 9.
    pub fn to_compact(&self) -> Option<String> {
        if self.word.iter().all(|&b| b <= 9) {
            Some(self.word.iter().map(|b| char::from(b'0' + *b as u8)).collect())
        } else {
            None
        }
    }
}

impl From<SetPartition> for Vec<u32> {
    fn from(p: SetPartition) -> Self {
        p.word
    }
}

impl TryFrom<Vec<u32>> for SetPartition {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        SetPartition::new(word)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses comma-separated labels (`1,1,2`) or a compact digit string
/// (`11232343411`). Blank input yields the empty partition.
pub fn parse_partition(text: &str) -> Result<SetPartition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(SetPartition::empty());
    }
    let word = if text.contains(',') {
        text.split(',')
            .enumerate()
            .map(|(i, tok)| {
                let tok = tok.trim();
                tok.parse::<u32>().map_err(|_| {
                    Error::Syntax(format!("item {} ({tok:?}) is not a non-negative integer", i + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        text.chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Syntax(format!("unexpected character {c:?} at position {}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?
    };
    SetPartition::new(word)
}

/// Lexicographic stream of all restricted growth strings of a fixed length.
#[derive(Debug, Clone)]
pub struct Partitions {
    word: Vec<u32>,
    // prefix_max[i] = max(word[..i]), with prefix_max[0] = 0
    prefix_max: Vec<u32>,
    started: bool,
    done: bool,
}

impl Partitions {
    fn new(n: usize) -> Self {
        let mut prefix_max = vec![1; n];
        if n > 0 {
            prefix_max[0] = 0;
        }
        Partitions { word: vec![1; n], prefix_max, started: false, done: false }
    }

    fn advance(&mut self) -> bool {
        let n = self.word.len();
        for i in (1..n).rev() {
            if self.word[i] <= self.prefix_max[i] {
                self.word[i] += 1;
                let m = self.prefix_max[i].max(self.word[i]);
                for j in i + 1..n {
                    self.word[j] = 1;
                    self.prefix_max[j] = m;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(SetPartition { word: self.word.clone() })
    }
}

/// All partitions of `[n]` in lexicographic order, bounded by
/// [`DEFAULT_EXHAUSTIVE_LIMIT`].
pub fn generate_partitions(n: usize) -> Result<Partitions> {
    generate_partitions_limited(n, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn generate_partitions_limited(n: usize, limit: usize) -> Result<Partitions> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Ok(Partitions::new(n))
}

/// Positions (0-based) of the first subsequence of `pi` order-isomorphic to
/// `pattern`, in lexicographic order of position tuples.
///
/// Plain backtracking: extend the partial embedding one pattern letter at a
/// time and prune when too few letters of `pi` remain.
pub fn find_pattern(pi: &SetPartition, pattern: &SetPartition) -> Option<Vec<usize>> {
    let (text, pat) = (pi.word(), pattern.word());
    if pat.len() > text.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    if embed(text, pat, 0, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn embed(text: &[u32], pat: &[u32], from: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pat.len() {
        return true;
    }
    let remaining = pat.len() - j;
    for pos in from..=text.len() - remaining {
        let compatible = chosen
            .iter()
            .zip(pat)
            .all(|(&a, &pa)| text[a].cmp(&text[pos]) == pa.cmp(&pat[j]));
        if compatible {
            chosen.push(pos);
            if embed(text, pat, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn contains_pattern(pi: &SetPartition, pattern: &SetPartition) -> bool {
    find_pattern(pi, pattern).is_some()
}

pub fn avoids(pi: &SetPartition, pattern: &SetPartition) -> bool {
    !contains_pattern(pi, pattern)
}

/// The two patterns handled by the bijections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    P12312,
    P12321,
}

impl Pattern {
    pub const ALL: [Pattern; 2] = [Pattern::P12312, Pattern::P12321];

    pub fn word(self) -> &'static [u32] {
        match self {
            Pattern::P12312 => &[1, 2, 3, 1, 2],
            Pattern::P12321 => &[1, 2, 3, 2, 1],
        }
    }

    pub fn as_partition(self) -> SetPartition {
        SetPartition { word: self.word().to_vec() }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::P12312 => "12312",
            Pattern::P12321 => "12321",
        }
    }

    /// Linear-ish test on the maxima decomposition; no subsequence search.
    pub fn avoided_by(self, pi: &SetPartition) -> bool {
        match self {
            Pattern::P12312 => avoids_12312_fast(pi),
            Pattern::P12321 => avoids_12321_fast(pi),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "12312" | "1,2,3,1,2" => Ok(Pattern::P12312),
            "12321" | "1,2,3,2,1" => Ok(Pattern::P12321),
            other => Err(Error::Syntax(format!("unsupported pattern {other:?}"))),
        }
    }
}

/// The factorisation `1 w_1 2 w_2 … k w_k` by left-to-right maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub k: usize,
    /// 0-based positions of the first occurrences of `1..=k`.
    pub maxima_positions: Vec<usize>,
    /// `words[i - 1]` is `w_i`; every letter is at most `i`.
    pub words: Vec<Vec<u32>>,
    /// `d[i - 1]` counts occurrences of `i` after the first occurrence of `i + 1`.
    pub d: Vec<usize>,
}

impl Decomposition {
    pub fn reassemble(&self) -> Vec<u32> {
        let mut word = Vec::new();
        for (i, w) in self.words.iter().enumerate() {
            word.push(i as u32 + 1);
            word.extend_from_slice(w);
        }
        word
    }

    /// `(w_1 ∖ {1})(w_2 ∖ {2})…(w_k ∖ {k})`
    pub fn stripped(&self) -> Vec<u32> {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, w)| w.iter().copied().filter(move |&b| b != i as u32 + 1))
            .collect()
    }
}

pub fn decompose(pi: &SetPartition) -> Decomposition {
    let word = pi.word();
    let k = pi.block_count();
    let mut maxima_positions = Vec::with_capacity(k);
    let mut words: Vec<Vec<u32>> = Vec::with_capacity(k);
    for (pos, &b) in word.iter().enumerate() {
        if b as usize > maxima_positions.len() {
            maxima_positions.push(pos);
            words.push(Vec::new());
        } else {
            words.last_mut().expect("word starts with 1").push(b);
        }
    }
    let d = (1..k)
        .map(|i| {
            let first_next = maxima_positions[i];
            word[first_next + 1..].iter().filter(|&&b| b as usize == i).count()
        })
        .collect();
    Decomposition { k, maxima_positions, words, d }
}

/// A stripped letter `x` of `w_j` followed later by a stripped letter `y`
/// with `x < y < j` is exactly an occurrence of 12312 (take `c = j`).
pub fn avoids_12312_fast(pi: &SetPartition) -> bool {
    let dec = decompose(pi);
    let stripped: Vec<(u32, u32)> = dec
        .words
        .iter()
        .enumerate()
        .flat_map(|(i, w)| {
            let j = i as u32 + 1;
            w.iter().copied().filter(move |&b| b != j).map(move |b| (b, j))
        })
        .collect();
    stripped.iter().enumerate().all(|(t, &(x, j))| !stripped[t + 1..].iter().any(|&(y, _)| x < y && y < j))
}

pub fn avoids_12321_fast(pi: &SetPartition) -> bool {
    decompose(pi).stripped().windows(2).all(|w| w[0] <= w[1])
}

/// True iff no `m` in `1..n` splits the partition into a partition of
/// `[m]` and one of `{m+1, …, n}`.
pub fn is_irreducible(pi: &SetPartition) -> bool {
    let word = pi.word();
    let n = word.len();
    let k = pi.block_count();
    // last[b] = last 0-based position of block b
    let mut last = vec![0usize; k + 1];
    for (pos, &b) in word.iter().enumerate() {
        last[b as usize] = pos;
    }
    (1..n).all(|m| {
        let prefix_blocks = word[..m].iter().copied().max().unwrap_or(0) as usize;
        (1..=prefix_blocks).any(|b| last[b] >= m)
    })
}

/// Characterisation by first occurrences: every label `i ≥ 2` is followed,
/// somewhere after its first occurrence, by a smaller label.
pub fn is_irreducible_char(pi: &SetPartition) -> bool {
    let word = pi.word();
    let d = decompose(pi);
    d.maxima_positions
        .iter()
        .enumerate()
        .skip(1)
        .all(|(idx, &first)| {
            let label = idx as u32 + 1;
            word[first + 1..].iter().any(|&b| b < label)
        })
}
