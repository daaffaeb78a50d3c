//! Chord diagrams on an oriented circle (the knot case), with the 1T and 4T
//! relations and the connected-sum Hopf structure.

use crate::lincomb::LinComb;
use crate::relations::{RelationKind, RelationRow, RelationSystem};
use crate::{rat, Error, Result};
use std::collections::BTreeSet;

/// A degree-d chord diagram stored as a word of length 2d over chord ids,
/// normalized so ids appear in order of first occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    word: Vec<usize>,
}

const CODE_PREFIX: &str = "o|";

fn normalize(word: &[usize]) -> Vec<usize> {
    let cap = word.iter().copied().max().map_or(0, |m| m + 1);
    let mut relabel = vec![usize::MAX; cap];
    let mut next = 0;
    let mut out = Vec::with_capacity(word.len());
    for &c in word {
        if relabel[c] == usize::MAX {
            relabel[c] = next;
            next += 1;
        }
        out.push(relabel[c]);
    }
    out
}

impl ChordDiagram {
    pub fn from_word(word: Vec<usize>) -> Result<ChordDiagram> {
        if word.len() % 2 != 0 {
            return Err(Error::Structural("odd word length".into()));
        }
        let n = word.len() / 2;
        let mut counts = vec![0usize; n];
        for &c in &word {
            if c >= n {
                return Err(Error::Structural(format!("chord id {c} out of range")));
            }
            counts[c] += 1;
        }
        if counts.iter().any(|&c| c != 2) {
            return Err(Error::Structural("every chord needs exactly two endpoints".into()));
        }
        Ok(ChordDiagram { word: normalize(&word) })
    }

    pub fn degree(&self) -> u32 {
        (self.word.len() / 2) as u32
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Lexicographic minimum of the first-occurrence normalization over all
    /// rotations of the circle.
    pub fn canonical(&self) -> String {
        if self.word.is_empty() {
            return CODE_PREFIX.to_string();
        }
        let n = self.word.len();
        let mut best: Option<Vec<usize>> = None;
        for r in 0..n {
            let rotated: Vec<usize> = (0..n).map(|i| self.word[(i + r) % n]).collect();
            let norm = normalize(&rotated);
            if best.as_ref().is_none_or(|b| norm < *b) {
                best = Some(norm);
            }
        }
        render(&best.unwrap())
    }

    /// True when some chord has cyclically adjacent endpoints.
    pub fn has_isolated_chord(&self) -> bool {
        let n = self.word.len();
        (0..n).any(|i| self.word[i] == self.word[(i + 1) % n])
    }

    /// Sub-diagram spanned by the given chord ids.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> ChordDiagram {
        let word: Vec<usize> = self.word.iter().copied().filter(|c| keep.contains(c)).collect();
        ChordDiagram { word: normalize(&word) }
    }
}

fn render(word: &[usize]) -> String {
    let mut s = String::with_capacity(word.len() + 2);
    s.push_str(CODE_PREFIX);
    for &c in word {
        debug_assert!(c < 26, "degree too large for letter codes");
        s.push((b'a' + c as u8) as char);
    }
    s
}

pub fn parse_chord(code: &str) -> Result<ChordDiagram> {
    let body = code
        .strip_prefix(CODE_PREFIX)
        .ok_or_else(|| Error::Parse(format!("missing `{CODE_PREFIX}` prefix in `{code}`")))?;
    let word: Vec<usize> = body
        .bytes()
        .map(|b| {
            if b.is_ascii_lowercase() {
                Ok((b - b'a') as usize)
            } else {
                Err(Error::Parse(format!("bad letter in `{code}`")))
            }
        })
        .collect::<Result<_>>()?;
    let d = ChordDiagram::from_word(word)?;
    if d.canonical() != code {
        return Err(Error::Parse(format!("`{code}` is not canonical")));
    }
    Ok(d)
}

/// All degree-d diagrams up to rotation.
pub fn enumerate_chord(d: u32) -> Vec<String> {
    let mut out = BTreeSet::new();
    let mut word = vec![usize::MAX; 2 * d as usize];
    fn rec(word: &mut Vec<usize>, next: usize, out: &mut BTreeSet<String>) {
        let i = match word.iter().position(|&c| c == usize::MAX) {
            Some(i) => i,
            None => {
                out.insert(ChordDiagram { word: normalize(word) }.canonical());
                return;
            }
        };
        word[i] = next;
        for j in i + 1..word.len() {
            if word[j] == usize::MAX {
                word[j] = next;
                rec(word, next + 1, out);
                word[j] = usize::MAX;
            }
        }
        word[i] = usize::MAX;
    }
    rec(&mut word, 0, &mut out);
    out.into_iter().collect()
}

/// 1T rows: {D: 1} whenever D has an isolated chord.
pub fn one_t_rows_chord(d: u32) -> Vec<RelationRow> {
    let mut rows = Vec::new();
    for code in enumerate_chord(d) {
        let diag = parse_chord(&code).expect("enumerated code parses");
        if diag.has_isolated_chord() {
            rows.push(RelationRow {
                vector: LinComb::single(code.clone(), rat(1)),
                kind: RelationKind::OneT,
                locus: format!("1t {code}"),
            });
        }
    }
    rows
}

/// 4T rows: for chords a != b of a diagram, remove one endpoint of b and
/// re-insert it at the four slots flanking a's endpoints.  Carrying the
/// moving endpoint once around the circle, the commutators picked up at a's
/// two endpoints cancel:
/// D(after a1) - D(before a1) + D(after a2) - D(before a2) = 0.
pub fn four_t_rows(d: u32) -> Vec<RelationRow> {
    let mut rows = Vec::new();
    for code in enumerate_chord(d) {
        let diag = parse_chord(&code).expect("enumerated code parses");
        let n = diag.degree() as usize;
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                // word with b's first occurrence removed
                let cut = diag.word.iter().position(|&c| c == b).unwrap();
                let reduced: Vec<usize> = diag
                    .word
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != cut)
                    .map(|(_, &c)| c)
                    .collect();
                let a_pos: Vec<usize> =
                    reduced.iter().enumerate().filter(|&(_, &c)| c == a).map(|(i, _)| i).collect();
                let insert = |slot: usize| -> String {
                    let mut w = reduced.clone();
                    w.insert(slot, b);
                    ChordDiagram { word: normalize(&w) }.canonical()
                };
                let mut vector = LinComb::new();
                vector.add(insert(a_pos[0] + 1), rat(1));
                vector.add(insert(a_pos[0]), rat(-1));
                vector.add(insert(a_pos[1] + 1), rat(1));
                vector.add(insert(a_pos[1]), rat(-1));
                if vector.is_zero() {
                    continue;
                }
                rows.push(RelationRow {
                    vector,
                    kind: RelationKind::FourT,
                    locus: format!("4t {code} a{a} b{b}"),
                });
            }
        }
    }
    rows
}

/// Knot quotient: chord diagrams modulo 1T and 4T.
pub fn aknot_system(d: u32) -> RelationSystem {
    let mut rows = one_t_rows_chord(d);
    rows.extend(four_t_rows(d));
    RelationSystem::new(enumerate_chord(d), rows)
}

/// Connected sum: cut each circle at the chosen arc (the gap before the
/// given endpoint position) and splice.  The result is well defined modulo
/// 4T independently of the arcs.
pub fn connect_sum_at(
    d1: &ChordDiagram,
    d2: &ChordDiagram,
    arc1: usize,
    arc2: usize,
) -> Result<ChordDiagram> {
    if arc1 > d1.word.len() || arc2 > d2.word.len() {
        return Err(Error::Argument(format!(
            "arc out of range: {arc1} on a {}-point circle, {arc2} on {}",
            d1.word.len(),
            d2.word.len()
        )));
    }
    let n1 = d1.degree() as usize;
    let m2 = d2.word.len();
    let mut word = d1.word[..arc1].to_vec();
    word.extend((0..m2).map(|i| d2.word[(i + arc2) % m2.max(1)] + n1));
    word.extend_from_slice(&d1.word[arc1..]);
    Ok(ChordDiagram { word: normalize(&word) })
}

/// Connected sum at the base arcs of both circles.
pub fn connect_sum(d1: &ChordDiagram, d2: &ChordDiagram) -> ChordDiagram {
    connect_sum_at(d1, d2, 0, 0).expect("base arcs are always valid")
}

/// Coproduct: sum over chord subsets S of D_S (x) D_{S^c}.  Terms are
/// (left code, right code) pairs, each with coefficient 1.
pub fn coproduct(d: &ChordDiagram) -> Vec<(String, String)> {
    let n = d.degree() as usize;
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        let keep: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let co: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        out.push((d.restrict(&keep).canonical(), d.restrict(&co).canonical()));
    }
    out
}
