//! Word calculus for right-angled Coxeter groups.
//!
//! Every pair of distinct generators either commutes (`m = 2`) or is free
//! (`m = ∞`). Words are reduced by cancelling a letter against its last
//! earlier occurrence whenever everything in between commutes with it; the
//! normal form is the lexicographically least reduced word under the
//! declared generator order.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgrp::PermGroup;

/// Generator index into [`CoxeterDiagram::generators`].
pub type Gen = usize;

/// Default length guard for [`CoxeterDiagram::rep_set`].
pub const DEFAULT_REP_LENGTH_CAP: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn last(&self) -> Option<Gen> {
        self.0.last().copied()
    }

    pub fn push(&mut self, s: Gen) {
        self.0.push(s);
    }

    pub fn with(&self, s: Gen) -> Word {
        let mut w = self.clone();
        w.push(s);
        w
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }
}

impl From<Vec<Gen>> for Word {
    fn from(v: Vec<Gen>) -> Self {
        Word(v)
    }
}

/// Whether a nonempty element has exactly one right descent or several.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DescentClass {
    Identity,
    /// Exactly one right descent; carries the forced last letter.
    W1(Gen),
    W2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentData {
    pub descents: Vec<Gen>,
    pub class: DescentClass,
}

/// A permutation of letter positions together with the word it produces.
///
/// `positions[i]` is the 0-based position, in `word`, of the letter that sat at
/// position `i` of the original word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    pub positions: Vec<usize>,
    pub word: Word,
}

/// Strict partial order `≺_w` on the 0-based letter positions of a reduced word.
///
/// `precedes(i, j)` holds when the letter at `i` sits after the letter at `j`
/// in every reduced representation, so it always implies `i > j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionPoset {
    len: usize,
    below: Vec<Vec<bool>>,
}

impl PositionPoset {
    pub fn from_pairs(len: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut below = vec![vec![false; len]; len];
        for (i, j) in pairs {
            below[i][j] = true;
        }
        PositionPoset { len, below }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    /// All `(i, j)` with `i ≺ j`, 0-based, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len {
            for j in 0..self.len {
                if self.below[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Elements strictly above `i`.
    pub fn above(&self, i: usize) -> Vec<usize> {
        (0..self.len).filter(|&j| self.below[i][j]).collect()
    }

    pub fn is_strict_order(&self) -> bool {
        for i in 0..self.len {
            if self.below[i][i] {
                return false;
            }
            for j in 0..self.len {
                if self.below[i][j] {
                    if self.below[j][i] {
                        return false;
                    }
                    for k in 0..self.len {
                        if self.below[j][k] && !self.below[i][k] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for PositionPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|(i, j)| format!("{}<{}", i + 1, j + 1))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A right-angled Coxeter diagram with per-generator thickness and local group.
#[derive(Clone, Debug)]
pub struct CoxeterDiagram {
    names: Vec<String>,
    commutes: Vec<Vec<bool>>,
    thickness: Vec<usize>,
    local_groups: Vec<PermGroup>,
}

impl CoxeterDiagram {
    /// `commuting` lists the unordered pairs with `m = 2`; all other pairs are free.
    pub fn new(
        names: Vec<String>,
        commuting: &[(Gen, Gen)],
        thickness: Vec<usize>,
        local_groups: Vec<PermGroup>,
    ) -> Result<Self> {
        let n = names.len();
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() || name.contains(|c: char| c == ',' || c.is_whitespace()) {
                return Err(Error::config("generators", format!("invalid name `{name}`")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::config("generators", format!("duplicate `{name}`")));
            }
        }
        if thickness.len() != n || local_groups.len() != n {
            return Err(Error::config(
                "thickness",
                "one thickness and one local group per generator",
            ));
        }
        let mut commutes = vec![vec![false; n]; n];
        for &(a, b) in commuting {
            if a >= n || b >= n || a == b {
                return Err(Error::config("coxeter", format!("bad pair ({a}, {b})")));
            }
            commutes[a][b] = true;
            commutes[b][a] = true;
        }
        for (s, (&q, g)) in thickness.iter().zip(&local_groups).enumerate() {
            if q < 2 {
                return Err(Error::config(
                    format!("thickness.{}", names[s]),
                    format!("must be at least 2, got {q}"),
                ));
            }
            if g.degree() != q {
                return Err(Error::config(
                    format!("local_groups.{}", names[s]),
                    format!("degree {} does not match thickness {q}", g.degree()),
                ));
            }
        }
        Ok(CoxeterDiagram {
            names,
            commutes,
            thickness,
            local_groups,
        })
    }

    /// Same thickness `q` and the same local group for every generator.
    pub fn uniform(names: &[&str], commuting: &[(&str, &str)], q: usize, group: PermGroup) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let idx = |x: &str| {
            names
                .iter()
                .position(|n| n == x)
                .ok_or_else(|| Error::UnknownGenerator(x.to_string()))
        };
        let pairs = commuting
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let n = names.len();
        CoxeterDiagram::new(names, &pairs, vec![q; n], vec![group; n])
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        0..self.names.len()
    }

    pub fn name(&self, s: Gen) -> &str {
        &self.names[s]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn thickness(&self, s: Gen) -> usize {
        self.thickness[s]
    }

    pub fn local_group(&self, s: Gen) -> &PermGroup {
        &self.local_groups[s]
    }

    /// Replaces the local group of `s`.
    pub fn set_local_group(&mut self, s: Gen, group: PermGroup) -> Result<()> {
        if group.degree() != self.thickness[s] {
            return Err(Error::DegreeMismatch {
                expected: self.thickness[s],
                found: group.degree(),
            });
        }
        self.local_groups[s] = group;
        Ok(())
    }

    /// The stabilizer of color 1 in the local group of `s`.
    pub fn local_stabilizer(&self, s: Gen) -> PermGroup {
        self.local_groups[s]
            .point_stabilizer(0)
            .expect("color 1 is always in range")
    }

    /// `m_st = 2` for distinct generators.
    pub fn commute(&self, s: Gen, t: Gen) -> bool {
        self.commutes[s][t]
    }

    /// Coxeter matrix entry: 1 on the diagonal, 2 for commuting pairs, `None` for ∞.
    pub fn order(&self, s: Gen, t: Gen) -> Option<u32> {
        if s == t {
            Some(1)
        } else if self.commutes[s][t] {
            Some(2)
        } else {
            None
        }
    }

    /// Generators outside `{s}` commuting with `s`.
    pub fn perp(&self, s: Gen) -> Vec<Gen> {
        self.generators().filter(|&t| self.commute(s, t)).collect()
    }

    /// Parses `"s t u"` or `"s,t,u"`; the empty string is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| self.generator(s))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.0.iter()
            .map(|&s| self.names[s].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&s| s >= self.rank()) {
            Some(&s) => Err(Error::UnknownGenerator(format!("#{s}"))),
            None => Ok(()),
        }
    }

    /// Position of the letter of `w` that cancels against an appended `s`, if any.
    fn cancelling_position(&self, w: &[Gen], s: Gen) -> Option<usize> {
        for k in (0..w.len()).rev() {
            if w[k] == s {
                return Some(k);
            }
            if !self.commute(w[k], s) {
                return None;
            }
        }
        None
    }

    /// Some reduced word for the same element, not necessarily in normal form.
    fn freely_reduce(&self, w: &Word) -> Vec<Gen> {
        let mut v: Vec<Gen> = Vec::with_capacity(w.len());
        for &s in &w.0 {
            match self.cancelling_position(&v, s) {
                Some(k) => {
                    v.remove(k);
                }
                None => v.push(s),
            }
        }
        v
    }

    /// Lexicographically least linearization of a reduced word, carrying a
    /// payload per letter. Returns the new order as indices into the input.
    pub(crate) fn normal_order(&self, w: &[Gen]) -> Vec<usize> {
        let n = w.len();
        let mut taken = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let mut best: Option<usize> = None;
            for i in 0..n {
                if taken[i] {
                    continue;
                }
                let free = (0..i).all(|j| taken[j] || self.commute(w[j], w[i]));
                if free && best.is_none_or(|b| w[i] < w[b]) {
                    best = Some(i);
                }
            }
            let b = best.expect("some letter is always minimal");
            taken[b] = true;
            order.push(b);
        }
        order
    }

    /// Canonical normal form: the lexicographically least reduced word for the same element.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        let v = self.freely_reduce(w);
        let order = self.normal_order(&v);
        Ok(Word(order.into_iter().map(|i| v[i]).collect()))
    }

    pub fn is_reduced(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        Ok(self.freely_reduce(w).len() == w.len())
    }

    pub fn length(&self, w: &Word) -> Result<usize> {
        self.check_word(w)?;
        Ok(self.freely_reduce(w).len())
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool> {
        Ok(self.reduce(a)? == self.reduce(b)?)
    }

    fn require_reduced(&self, w: &Word) -> Result<()> {
        if !self.is_reduced(w)? {
            return Err(Error::NotReduced(self.format_word(w)));
        }
        Ok(())
    }

    /// All reduced representations reachable by swapping adjacent commuting letters.
    pub fn rep_set(&self, w: &Word) -> Result<Vec<Rep>> {
        self.rep_set_capped(w, DEFAULT_REP_LENGTH_CAP)
    }

    pub fn rep_set_capped(&self, w: &Word, max_len: usize) -> Result<Vec<Rep>> {
        self.require_reduced(w)?;
        if w.len() > max_len {
            return Err(Error::cap(format!("rep set of a word of length {}", w.len()), max_len));
        }
        let start = Rep {
            positions: (0..w.len()).collect(),
            word: w.clone(),
        };
        let mut seen: HashSet<Word> = HashSet::from([w.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(rep) = queue.pop_front() {
            let letters = &rep.word.0;
            for k in 0..letters.len().saturating_sub(1) {
                if !self.commute(letters[k], letters[k + 1]) {
                    continue;
                }
                let mut word = rep.word.clone();
                word.0.swap(k, k + 1);
                if !seen.insert(word.clone()) {
                    continue;
                }
                let positions = rep
                    .positions
                    .iter()
                    .map(|&p| match p {
                        p if p == k => k + 1,
                        p if p == k + 1 => k,
                        p => p,
                    })
                    .collect();
                let next = Rep { positions, word };
                out.push(next.clone());
                queue.push_back(next);
            }
        }
        Ok(out)
    }

    /// `≺_w` by intersecting the position orders of every reduced representation.
    pub fn position_poset_by_reps(&self, w: &Word) -> Result<PositionPoset> {
        let reps = self.rep_set_capped(w, usize::MAX)?;
        let n = w.len();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && reps.iter().all(|r| r.positions[i] > r.positions[j]) {
                    pairs.push((i, j));
                }
            }
        }
        Ok(PositionPoset::from_pairs(n, pairs))
    }

    /// `≺_w` as the transitive closure of "later and non-commuting".
    pub fn position_poset(&self, w: &Word) -> Result<PositionPoset> {
        self.require_reduced(w)?;
        let n = w.len();
        let mut below = vec![vec![false; n]; n];
        for i in 0..n {
            for j in (0..i).rev() {
                if below[i][j] {
                    continue;
                }
                if !self.commute(w.0[i], w.0[j]) {
                    below[i][j] = true;
                    for k in 0..j {
                        if below[j][k] {
                            below[i][k] = true;
                        }
                    }
                }
            }
        }
        Ok(PositionPoset { len: n, below })
    }

    /// Right descent set `L(w) = {s : l(ws) < l(w)}`.
    pub fn descents(&self, w: &Word) -> Result<Vec<Gen>> {
        self.check_word(w)?;
        let v = self.freely_reduce(w);
        Ok(self
            .generators()
            .filter(|&s| self.cancelling_position(&v, s).is_some())
            .collect())
    }

    pub fn has_descent(&self, w: &Word, s: Gen) -> bool {
        self.cancelling_position(&w.0, s).is_some()
    }

    pub fn descent_data(&self, w: &Word) -> Result<DescentData> {
        let descents = self.descents(w)?;
        let class = match descents.as_slice() {
            [] => DescentClass::Identity,
            [r] => DescentClass::W1(*r),
            _ => DescentClass::W2,
        };
        Ok(DescentData { descents, class })
    }

    /// Normal forms of all elements of length exactly `n`, sorted.
    pub fn elements_of_length(&self, n: usize) -> Vec<Word> {
        let mut layer: BTreeSet<Word> = BTreeSet::from([Word::empty()]);
        for _ in 0..n {
            let mut next = BTreeSet::new();
            for w in &layer {
                for s in self.generators() {
                    if !self.has_descent(w, s) {
                        next.insert(self.reduce(&w.with(s)).expect("valid letters"));
                    }
                }
            }
            layer = next;
        }
        layer.into_iter().collect()
    }

    /// Every reduced word (all representations) of length exactly `n`.
    pub fn reduced_words_of_length(&self, n: usize) -> Vec<Word> {
        let mut layer = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &layer {
                for s in self.generators() {
                    if !self.has_descent(w, s) {
                        next.push(w.with(s));
                    }
                }
            }
            layer = next;
        }
        layer
    }

    /// Connected when the graph of non-commuting pairs is connected.
    pub fn is_irreducible(&self) -> bool {
        let n = self.rank();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(s) = stack.pop() {
            for t in 0..n {
                if t != s && !self.commute(s, t) && !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }
}
