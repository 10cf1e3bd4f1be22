//! Finite permutation groups given by generators.
//!
//! Points are `0..degree` internally. Text input and output use the usual
//! 1-based conventions: image lists like `[2,1,3]` and cycle notation like
//! `(1 2)(3 4)`.
//!
//! Products are written left to right: `a.then(&b)` applies `a` first.
//! Orders, membership and stabilizers come from a deterministic
//! Schreier–Sims stabilizer chain that is built once per group and cached.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Default limit on the number of elements any full enumeration may produce.
pub const DEFAULT_ENUM_CAP: usize = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection",
                    images.iter().map(|x| x + 1).collect::<Vec<_>>()
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = HashSet::new();
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if !used.insert(p) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears twice in cycle notation"
                    )));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Permutation::from_images(images)
    }

    /// Parses `[2,1,3]` (1-based image list) or `(1 2)(3 4)` (cycles).
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::InvalidPermutation(format!("unterminated `{t}`")))?;
            let images = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .ok()
                        .filter(|&x| x >= 1)
                        .map(|x| x - 1)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad point `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if images.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: images.len(),
                });
            }
            return Permutation::from_images(images);
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected `(` in `{t}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unterminated cycle in `{t}`")))?;
            let cycle = open[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.images[x] == x
    }

    pub fn moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, x)| i != *x).map(|(i, _)| i)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| !self.fixes(i)).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        g.inverse().then(self).then(g)
    }

    /// Nontrivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Restricts to an invariant list of points; the result acts on positions in `points`.
    pub fn restrict(&self, points: &[usize], position: &HashMap<usize, usize>) -> Result<Self> {
        let images = points
            .iter()
            .map(|&p| {
                position.get(&self.apply(p)).copied().ok_or_else(|| {
                    Error::Precondition(format!("point {} leaves the restricted set", p + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    reps: HashMap<usize, Permutation>,
    inv_reps: HashMap<usize, Permutation>,
}

impl Level {
    fn new(base: usize, gens: Vec<Permutation>, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens,
            orbit: Vec::new(),
            reps: HashMap::new(),
            inv_reps: HashMap::new(),
        };
        level.recompute(degree);
        level
    }

    fn recompute(&mut self, degree: usize) {
        self.orbit.clear();
        self.reps.clear();
        self.inv_reps.clear();
        let id = Permutation::identity(degree);
        self.orbit.push(self.base);
        self.reps.insert(self.base, id.clone());
        self.inv_reps.insert(self.base, id);
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k];
            k += 1;
            for g in &self.gens {
                let gamma = g.apply(beta);
                if !self.reps.contains_key(&gamma) {
                    let rep = self.reps[&beta].then(g);
                    self.inv_reps.insert(gamma, rep.inverse());
                    self.reps.insert(gamma, rep);
                    self.orbit.push(gamma);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct StabChain {
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut base: Vec<usize> = Vec::new();
        for &b in base_prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.fixes(b)) {
                base.push(g.moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let gens = strong
                .iter()
                .filter(|g| base[..i].iter().all(|&p| g.fixes(p)))
                .cloned()
                .collect();
            levels.push(Level::new(b, gens, degree));
        }
        let mut chain = StabChain { levels };
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            match chain.find_unsifted(iu) {
                Some((y, j)) => {
                    if j == chain.levels.len() {
                        let p = y.moved_point().expect("non-identity residue");
                        chain.levels.push(Level::new(p, Vec::new(), degree));
                    }
                    for l in iu + 1..=j {
                        chain.levels[l].gens.push(y.clone());
                        chain.levels[l].recompute(degree);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        chain
    }

    /// First Schreier generator at `level` that does not sift through the levels below.
    fn find_unsifted(&self, level: usize) -> Option<(Permutation, usize)> {
        let lvl = &self.levels[level];
        for &beta in &lvl.orbit {
            let u = &lvl.reps[&beta];
            for x in &lvl.gens {
                let gamma = x.apply(beta);
                let h = u.then(x).then(&lvl.inv_reps[&gamma]);
                if h.is_identity() {
                    continue;
                }
                let (y, j) = self.strip(h, level + 1);
                if j < self.levels.len() || !y.is_identity() {
                    return Some((y, j));
                }
            }
        }
        None
    }

    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, lvl) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(lvl.base);
            match lvl.inv_reps.get(&beta) {
                Some(inv) => g = g.then(inv),
                None => return (g, l),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    fn contains(&self, g: &Permutation) -> bool {
        let (y, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && y.is_identity()
    }

    fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Strong generators of the stabilizer of the first `k` base points.
    fn stabilizer_gens(&self, k: usize) -> Vec<Permutation> {
        if k < self.levels.len() {
            self.levels[k].gens.clone()
        } else {
            Vec::new()
        }
    }
}

/// A permutation group on `0..degree` given by generators.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut t: Vec<usize> = (0..degree).collect();
            t.swap(0, 1);
            gens.push(Permutation::from_images_unchecked(t));
        }
        if degree >= 3 {
            let c: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
            gens.push(Permutation::from_images_unchecked(c));
        }
        PermGroup::trivial(degree).with_generators(gens)
    }

    pub fn cyclic(degree: usize) -> Self {
        let gens = if degree >= 2 {
            vec![Permutation::from_images_unchecked(
                (0..degree).map(|i| (i + 1) % degree).collect(),
            )]
        } else {
            Vec::new()
        };
        PermGroup::trivial(degree).with_generators(gens)
    }

    /// Parses generator strings in either supported notation.
    pub fn parse(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Permutation::parse(g, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    fn with_generators(mut self, gens: Vec<Permutation>) -> Self {
        self.generators = gens;
        self.chain = OnceLock::new();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    /// Orbit of `point`, in breadth-first discovery order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![point];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let orb = self.orbit(p);
                for &x in &orb {
                    seen[x] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Pointwise stabilizer of `points`, generated by the strong generators of the
    /// corresponding level of a chain whose base starts with `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        if let Some(&p) = points.iter().find(|&&p| p >= self.degree) {
            return Err(Error::Precondition(format!(
                "point {} outside 1..={}",
                p + 1,
                self.degree
            )));
        }
        let mut prefix: Vec<usize> = Vec::new();
        for &p in points {
            if !prefix.contains(&p) {
                prefix.push(p);
            }
        }
        let chain = StabChain::build(self.degree, &self.generators, &prefix);
        let gens = reduce_generators(self.degree, chain.stabilizer_gens(prefix.len()));
        PermGroup::new(self.degree, gens)
    }

    /// 0-based point stabilizer.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Transitive and generated by its point stabilizers.
    pub fn satisfies_st(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        let mut gens = Vec::new();
        for y in 0..self.degree {
            gens.extend(self.point_stabilizer(y).expect("point in range").generators);
        }
        let plus = PermGroup::trivial(self.degree).with_generators(gens);
        plus.order() == self.order()
    }

    /// Equality as sets of permutations of the same point set.
    pub fn same_action(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
            && self.order() == other.order())
    }

    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.generators.iter().all(|d| {
            ambient
                .generators
                .iter()
                .all(|g| self.contains(&d.conjugate_by(g)))
        })
    }

    /// All elements, failing if the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::cap(format!("group of order {order}"), cap));
        }
        let chain = self.chain();
        let mut out = vec![Permutation::identity(self.degree)];
        for lvl in chain.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lvl.orbit.len());
            for g in &out {
                for beta in &lvl.orbit {
                    next.push(g.then(&lvl.reps[beta]));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// The group induced on an invariant set of points (listed in the order
    /// that defines the new indexing).
    pub fn restrict(&self, points: &[usize]) -> Result<PermGroup> {
        let position: HashMap<usize, usize> =
            points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let gens = self
            .generators
            .iter()
            .map(|g| g.restrict(points, &position))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(points.len(), reduce_generators(points.len(), gens))
    }

    /// Smallest-effort group containing all of `elements`.
    pub fn from_elements(degree: usize, elements: &[Permutation]) -> Result<PermGroup> {
        let mut group = PermGroup::trivial(degree);
        for e in elements {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: e.degree(),
                });
            }
            if !group.contains(e) {
                let mut gens = group.generators.clone();
                gens.push(e.clone());
                group = group.with_generators(gens);
            }
        }
        Ok(group)
    }
}

/// Drops identities, duplicates and generators already in the span of earlier ones.
fn reduce_generators(degree: usize, gens: Vec<Permutation>) -> Vec<Permutation> {
    let mut seen = HashSet::new();
    let candidates: Vec<Permutation> = gens
        .into_iter()
        .filter(|g| !g.is_identity() && seen.insert(g.clone()))
        .collect();
    if candidates.len() <= 8 {
        let mut kept: Vec<Permutation> = Vec::new();
        let mut group = PermGroup::trivial(degree);
        for g in candidates {
            if !group.contains(&g) {
                kept.push(g);
                group = PermGroup::trivial(degree).with_generators(kept.clone());
            }
        }
        kept
    } else {
        candidates
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym3() -> PermGroup {
        PermGroup::parse(3, &["(1 2)", "(1 2 3)"]).unwrap()
    }

    #[test]
    fn parse_both_notations() {
        let a = Permutation::parse("[2,1,3]", 3).unwrap();
        let b = Permutation::parse("(1 2)", 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(1 2)");
        assert_eq!(Permutation::parse("()", 4).unwrap(), Permutation::identity(4));
        assert_eq!(
            Permutation::parse("(1 3)(2 4)", 4).unwrap().images(),
            &[2, 3, 0, 1]
        );
    }

    #[test]
    fn parse_rejects_non_bijection() {
        let err = Permutation::parse("[2,2,3]", 3).unwrap_err();
        assert!(err.to_string().contains("not a bijection"), "{err}");
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse("[1,2]", 3).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn orders() {
        assert_eq!(sym3().order(), BigUint::from(6u32));
        assert_eq!(PermGroup::trivial(4).order(), BigUint::from(1u32));
        assert_eq!(
            PermGroup::parse(3, &["(1 2 3)"]).unwrap().order(),
            BigUint::from(3u32)
        );
        assert_eq!(PermGroup::symmetric(6).order(), BigUint::from(720u32));
        // M11-free sanity: PSL-sized groups are out of scope, but a 2-group on 8 points
        let g = PermGroup::parse(8, &["(1 2)", "(3 4)", "(1 3)(2 4)", "(5 6)", "(1 5)(2 6)(3 7)(4 8)"])
            .unwrap();
        assert_eq!(g.order(), BigUint::from(128u32));
    }

    #[test]
    fn point_stabilizers() {
        let s = sym3().point_stabilizer(0).unwrap();
        assert_eq!(s.order(), BigUint::from(2u32));
        assert!(s.contains(&Permutation::parse("(2 3)", 3).unwrap()));
        assert!(s.generators().iter().all(|g| g.fixes(0)));
        assert_eq!(sym3().point_stabilizer(1).unwrap().order(), BigUint::from(2u32));
        let c3 = PermGroup::parse(3, &["(1 2 3)"]).unwrap();
        assert_eq!(c3.point_stabilizer(0).unwrap().order(), BigUint::from(1u32));
        assert!(sym3().point_stabilizer(3).is_err());
    }

    #[test]
    fn transitivity() {
        assert!(sym3().is_transitive());
        assert!(!PermGroup::parse(3, &["(1 2)"]).unwrap().is_transitive());
        assert!(PermGroup::trivial(1).is_transitive());
    }

    #[test]
    fn st_condition() {
        assert!(sym3().satisfies_st());
        assert!(!PermGroup::parse(3, &["(1 2 3)"]).unwrap().satisfies_st());
        assert!(!PermGroup::symmetric(2).satisfies_st());
        assert!(PermGroup::symmetric(4).satisfies_st());
    }

    #[test]
    fn same_action_cases() {
        let other = PermGroup::parse(3, &["(1 3)", "(2 3)"]).unwrap();
        assert!(sym3().same_action(&other).unwrap());
        let c3 = PermGroup::parse(3, &["(1 2 3)"]).unwrap();
        assert!(!sym3().same_action(&c3).unwrap());
        assert!(sym3().same_action(&sym3()).unwrap());
        assert!(sym3().same_action(&PermGroup::trivial(4)).is_err());
    }

    #[test]
    fn enumeration_and_cap() {
        let els = PermGroup::symmetric(4).elements(100).unwrap();
        assert_eq!(els.len(), 24);
        let set: HashSet<_> = els.into_iter().collect();
        assert_eq!(set.len(), 24);
        assert!(PermGroup::symmetric(5).elements(100).is_err());
    }

    #[test]
    fn pointwise_stabilizer_of_set() {
        let s4 = PermGroup::symmetric(4);
        let st = s4.pointwise_stabilizer(&[0, 1]).unwrap();
        assert_eq!(st.order(), BigUint::from(2u32));
        assert!(st.contains(&Permutation::parse("(3 4)", 4).unwrap()));
    }

    #[test]
    fn restriction_and_from_elements() {
        let g = PermGroup::parse(5, &["(1 2)", "(4 5)"]).unwrap();
        let r = g.restrict(&[3, 4]).unwrap();
        assert_eq!(r.order(), BigUint::from(2u32));
        assert!(g.restrict(&[0, 3]).is_err());
        let els = PermGroup::symmetric(4).elements(100).unwrap();
        let h = PermGroup::from_elements(4, &els).unwrap();
        assert_eq!(h.order(), BigUint::from(24u32));
        assert!(h.generators().len() <= 4);
    }
}
