//! Generalized wreath products over finite posets.
//!
//! Points are tuples in `∏ X_s`, indexed in mixed radix with the first
//! coordinate most significant. Coordinate values are 0-based.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::coxeter::{CoxeterDiagram, PositionPoset, Word};
use crate::error::{Error, Result};
use crate::permgrp::{PermGroup, Permutation};

/// Poset, coordinate sets and factor groups. `poset.precedes(i, j)` reads `i ≺ j`;
/// the action on coordinate `i` may depend on the coordinates above it.
#[derive(Clone, Debug)]
pub struct GwpSpec {
    pub names: Vec<String>,
    pub poset: PositionPoset,
    pub sizes: Vec<usize>,
    pub groups: Vec<PermGroup>,
}

/// A permutation group on an indexed point set, optionally labelled by tuples.
#[derive(Clone, Debug)]
pub struct ActionGroup {
    pub group: PermGroup,
    pub labels: Option<Vec<Vec<usize>>>,
}

impl ActionGroup {
    pub fn order(&self) -> BigUint {
        self.group.order()
    }
}

/// Result of splitting off a minimal coordinate.
#[derive(Clone, Debug)]
pub struct Split {
    pub d: PermGroup,
    pub h: PermGroup,
    pub trivial_intersection: bool,
    pub orders_multiply: bool,
    pub d_normal: bool,
}

impl Split {
    pub fn holds(&self) -> bool {
        self.trivial_intersection && self.orders_multiply && self.d_normal
    }
}

/// Transitive closure of `pairs`, rejecting cycles.
pub fn poset_closure(len: usize, pairs: &[(usize, usize)]) -> Result<PositionPoset> {
    let mut m = vec![vec![false; len]; len];
    for &(i, j) in pairs {
        if i >= len || j >= len {
            return Err(Error::config("less", format!("index out of range in ({i}, {j})")));
        }
        m[i][j] = true;
    }
    for k in 0..len {
        for i in 0..len {
            if m[i][k] {
                for j in 0..len {
                    if m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
    }
    if (0..len).any(|i| m[i][i]) {
        return Err(Error::config("less", "relation has a cycle"));
    }
    let pairs = (0..len).flat_map(|i| (0..len).map(move |j| (i, j)));
    Ok(PositionPoset::from_pairs(len, pairs.filter(|&(i, j)| m[i][j])))
}

#[derive(serde::Deserialize)]
struct SpecFile {
    elements: Vec<String>,
    #[serde(default)]
    less: Vec<(serde_json::Value, serde_json::Value)>,
    sets: HashMap<String, usize>,
    groups: HashMap<String, GroupFile>,
}

#[derive(serde::Deserialize)]
struct GroupFile {
    degree: usize,
    #[serde(default)]
    generators: Vec<String>,
}

impl GwpSpec {
    pub fn new(names: Vec<String>, poset: PositionPoset, sizes: Vec<usize>, groups: Vec<PermGroup>) -> Result<Self> {
        let n = names.len();
        if poset.len() != n || sizes.len() != n || groups.len() != n {
            return Err(Error::config("elements", "poset, sets and groups must cover every element"));
        }
        if !poset.is_strict_order() {
            return Err(Error::config("less", "not a strict partial order"));
        }
        for i in 0..n {
            if sizes[i] == 0 {
                return Err(Error::config(format!("sets.{}", names[i]), "empty coordinate set"));
            }
            if groups[i].degree() != sizes[i] {
                return Err(Error::config(
                    format!("groups.{}", names[i]),
                    format!("degree {} does not match set size {}", groups[i].degree(), sizes[i]),
                ));
            }
        }
        Ok(GwpSpec { names, poset, sizes, groups })
    }

    /// Reads `{"elements", "less", "sets", "groups"}`; `less` entries are element
    /// names or 0-based indices.
    pub fn from_json(text: &str) -> Result<Self> {
        let f: SpecFile = serde_json::from_str(text)?;
        let idx = |v: &serde_json::Value| -> Result<usize> {
            match v {
                serde_json::Value::Number(n) => n
                    .as_u64()
                    .map(|n| n as usize)
                    .filter(|&n| n < f.elements.len())
                    .ok_or_else(|| Error::config("less", format!("bad index {n}"))),
                serde_json::Value::String(s) => f
                    .elements
                    .iter()
                    .position(|e| e == s)
                    .ok_or_else(|| Error::config("less", format!("unknown element `{s}`"))),
                other => Err(Error::config("less", format!("bad entry {other}"))),
            }
        };
        let pairs = f
            .less
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let poset = poset_closure(f.elements.len(), &pairs)?;
        let mut sizes = Vec::new();
        let mut groups = Vec::new();
        for e in &f.elements {
            let size = *f
                .sets
                .get(e)
                .ok_or_else(|| Error::config(format!("sets.{e}"), "missing"))?;
            let g = f
                .groups
                .get(e)
                .ok_or_else(|| Error::config(format!("groups.{e}"), "missing"))?;
            let gens: Vec<&str> = g.generators.iter().map(String::as_str).collect();
            let group = PermGroup::parse(g.degree, &gens)
                .map_err(|err| Error::config(format!("groups.{e}"), err.to_string()))?;
            sizes.push(size);
            groups.push(group);
        }
        GwpSpec::new(f.elements, poset, sizes, groups)
    }

    /// The sphere model for a reduced word: positions ordered by `≺_w`,
    /// coordinate `i` ranging over colors `2..=q`, factors the color-1 stabilizers.
    pub fn for_word(d: &CoxeterDiagram, w: &Word) -> Result<Self> {
        let poset = d.position_poset(w)?;
        let mut names = Vec::new();
        let mut sizes = Vec::new();
        let mut groups = Vec::new();
        for (i, &s) in w.0.iter().enumerate() {
            names.push(format!("{}:{}", i + 1, d.name(s)));
            let q = d.thickness(s);
            sizes.push(q - 1);
            let points: Vec<usize> = (1..q).collect();
            groups.push(d.local_stabilizer(s).restrict(&points)?);
        }
        GwpSpec::new(names, poset, sizes, groups)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.sizes.iter().product()
    }

    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; self.len()];
        for i in (0..self.len()).rev() {
            t[i] = index % self.sizes[i];
            index /= self.sizes[i];
        }
        t
    }

    pub fn index(&self, t: &[usize]) -> usize {
        t.iter().zip(&self.sizes).fold(0, |acc, (&x, &n)| acc * n + x)
    }

    pub fn tuples(&self) -> Vec<Vec<usize>> {
        (0..self.degree()).map(|i| self.tuple(i)).collect()
    }

    fn above(&self, s: usize) -> Vec<usize> {
        self.poset.above(s)
    }

    pub fn is_ideal(&self, ideal: &[usize]) -> bool {
        ideal.iter().all(|&s| {
            s < self.len() && (0..self.len()).all(|t| !self.poset.precedes(t, s) || ideal.contains(&t))
        })
    }

    fn check_degree(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: g.degree(),
            });
        }
        Ok(())
    }
}

/// Keys of the classes of "agree on `coords`".
fn class_keys(tuples: &[Vec<usize>], coords: &[usize]) -> Vec<Vec<usize>> {
    tuples
        .iter()
        .map(|t| coords.iter().map(|&c| t[c]).collect())
        .collect()
}

/// Whether `g` maps classes of the partition given by `keys` to classes, injectively.
fn preserves(keys: &[Vec<usize>], g: &Permutation) -> bool {
    let mut fwd: HashMap<&[usize], &[usize]> = HashMap::new();
    let mut bwd: HashMap<&[usize], &[usize]> = HashMap::new();
    for (x, k) in keys.iter().enumerate() {
        let img = keys[g.apply(x)].as_slice();
        if *fwd.entry(k).or_insert(img) != img || *bwd.entry(img).or_insert(k) != k.as_slice() {
            return false;
        }
    }
    true
}

/// Membership straight from the definition.
pub fn gwp_member(spec: &GwpSpec, g: &Permutation) -> Result<bool> {
    spec.check_degree(g)?;
    let tuples = spec.tuples();
    for s in 0..spec.len() {
        let strict = spec.above(s);
        let mut weak = strict.clone();
        weak.push(s);
        let strict_keys = class_keys(&tuples, &strict);
        if !preserves(&strict_keys, g) || !preserves(&class_keys(&tuples, &weak), g) {
            return Ok(false);
        }
        let mut local: HashMap<&[usize], Vec<Option<usize>>> = HashMap::new();
        for (x, key) in strict_keys.iter().enumerate() {
            let images = local.entry(key).or_insert_with(|| vec![None; spec.sizes[s]]);
            let y = tuples[g.apply(x)][s];
            match images[tuples[x][s]] {
                Some(prev) if prev != y => return Ok(false),
                _ => images[tuples[x][s]] = Some(y),
            }
        }
        for images in local.into_values() {
            let images: Vec<usize> = images.into_iter().map(|y| y.expect("every class is full")).collect();
            let Ok(p) = Permutation::from_images(images) else {
                return Ok(false);
            };
            if !spec.groups[s].contains(&p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All assignments of values to `coords`.
fn assignments(spec: &GwpSpec, coords: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &c in coords {
        out = out
            .into_iter()
            .flat_map(|a| {
                (0..spec.sizes[c]).map(move |v| {
                    let mut b = a.clone();
                    b.push(v);
                    b
                })
            })
            .collect();
    }
    out
}

/// Acts by `h` on coordinate `s` of the tuples agreeing with `assignment` on `coords`.
fn local_generator(spec: &GwpSpec, tuples: &[Vec<usize>], s: usize, coords: &[usize], assignment: &[usize], h: &Permutation) -> Permutation {
    let images = tuples
        .iter()
        .map(|t| {
            if coords.iter().zip(assignment).all(|(&c, &v)| t[c] == v) {
                let mut u = t.clone();
                u[s] = h.apply(t[s]);
                spec.index(&u)
            } else {
                spec.index(t)
            }
        })
        .collect();
    Permutation::from_images(images).expect("coordinate action is a bijection")
}

/// The generalized wreath product as a permutation group on the tuples.
pub fn gwp_generate(spec: &GwpSpec, cap: usize) -> Result<ActionGroup> {
    let degree = spec.degree();
    if degree > cap {
        return Err(Error::cap(format!("{degree} tuples"), cap));
    }
    let tuples = spec.tuples();
    let mut gens = Vec::new();
    for s in 0..spec.len() {
        let above = spec.above(s);
        for a in assignments(spec, &above) {
            for h in spec.groups[s].generators() {
                gens.push(local_generator(spec, &tuples, s, &above, &a, h));
            }
        }
    }
    Ok(ActionGroup {
        group: PermGroup::new(degree, gens)?,
        labels: Some(tuples),
    })
}

/// Counts members by running through the whole symmetric group (degree at most 8).
pub fn gwp_brute_force_order(spec: &GwpSpec) -> Result<u64> {
    let n = spec.degree();
    if n > 8 {
        return Err(Error::cap(format!("symmetric group of degree {n}"), 8));
    }
    let mut count = 0;
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        if gwp_member(spec, &Permutation::from_images(images.clone())?)? {
            count += 1;
        }
        if !next_permutation(&mut images) {
            return Ok(count);
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn require_ideal(spec: &GwpSpec, ideal: &[usize]) -> Result<()> {
    if !spec.is_ideal(ideal) {
        let names: Vec<&str> = ideal.iter().filter_map(|&i| spec.names.get(i).map(String::as_str)).collect();
        return Err(Error::Precondition(format!("{{{}}} is not an ideal", names.join(", "))));
    }
    Ok(())
}

/// `D(I)`: the kernel of the action on classes of "agree outside `I`".
pub fn d_of_ideal(spec: &GwpSpec, g: &PermGroup, ideal: &[usize]) -> Result<PermGroup> {
    require_ideal(spec, ideal)?;
    let n = spec.degree();
    let outside: Vec<usize> = (0..spec.len()).filter(|i| !ideal.contains(i)).collect();
    let keys = class_keys(&spec.tuples(), &outside);
    let mut block_of: HashMap<&[usize], usize> = HashMap::new();
    let block: Vec<usize> = keys
        .iter()
        .map(|k| {
            let next = block_of.len();
            *block_of.entry(k).or_insert(next)
        })
        .collect();
    let blocks = block_of.len();
    let mut extended = Vec::new();
    for gen in g.generators() {
        let mut images: Vec<usize> = gen.images().to_vec();
        images.resize(n + blocks, 0);
        for x in 0..n {
            images[n + block[x]] = n + block[gen.apply(x)];
        }
        extended.push(Permutation::from_images(images).map_err(|_| {
            Error::Precondition("group does not preserve the ideal's classes".into())
        })?);
    }
    let big = PermGroup::new(n + blocks, extended)?;
    let block_points: Vec<usize> = (n..n + blocks).collect();
    let kernel = big.pointwise_stabilizer(&block_points)?;
    kernel.restrict(&(0..n).collect::<Vec<_>>())
}

/// `D(I)` by filtering every element of `g`.
pub fn d_of_ideal_by_filter(spec: &GwpSpec, g: &PermGroup, ideal: &[usize], cap: usize) -> Result<PermGroup> {
    require_ideal(spec, ideal)?;
    let outside: Vec<usize> = (0..spec.len()).filter(|i| !ideal.contains(i)).collect();
    let keys = class_keys(&spec.tuples(), &outside);
    let kept: Vec<Permutation> = g
        .elements(cap)?
        .into_iter()
        .filter(|e| (0..spec.degree()).all(|x| keys[x] == keys[e.apply(x)]))
        .collect();
    PermGroup::from_elements(spec.degree(), &kept)
}

/// `|G^r|^{d_r}` with `d_r = ∏_{t ≻ r} |X_t|`.
pub fn d_order_formula(spec: &GwpSpec, r: usize) -> BigUint {
    let d: usize = spec.above(r).iter().map(|&t| spec.sizes[t]).product();
    spec.groups[r].order().pow(d as u32)
}

/// `G = D(r) ⋊ H` with `H` the copy of the product acting trivially on coordinate `r`.
pub fn semidirect_split(spec: &GwpSpec, r: usize, cap: usize) -> Result<Split> {
    if r >= spec.len() || !spec.is_ideal(&[r]) {
        return Err(Error::Precondition(format!("element {r} is not minimal")));
    }
    let g = gwp_generate(spec, cap)?.group;
    let d = d_of_ideal(spec, &g, &[r])?;
    let mut rest = spec.clone();
    rest.groups[r] = PermGroup::trivial(spec.sizes[r]);
    let h = gwp_generate(&rest, cap)?.group;
    // elements of H in D are exactly those preserving the classes of "agree outside r"
    let trivial_intersection = d_of_ideal(spec, &h, &[r])?.is_trivial();
    let orders_multiply = d.order() * h.order() == g.order();
    let d_normal = d.is_normal_in(&g);
    Ok(Split {
        d,
        h,
        trivial_intersection,
        orders_multiply,
        d_normal,
    })
}

/// Iterated imprimitive wreath product along a chain of coordinates, top first.
fn chain_wreath(spec: &GwpSpec, chain: &[usize]) -> Result<PermGroup> {
    let tuples = spec.tuples();
    let mut gens = Vec::new();
    for (level, &s) in chain.iter().enumerate() {
        let coords = &chain[..level];
        for a in assignments(spec, coords) {
            for h in spec.groups[s].generators() {
                gens.push(local_generator(spec, &tuples, s, coords, &a, h));
            }
        }
    }
    PermGroup::new(spec.degree(), gens)
}

/// Intersection over all reduced representations of the corresponding iterated wreath products.
pub fn wreath_intersection(d: &CoxeterDiagram, w: &Word, cap: usize) -> Result<ActionGroup> {
    let spec = GwpSpec::for_word(d, w)?;
    if spec.degree() > cap {
        return Err(Error::cap(format!("{} tuples", spec.degree()), cap));
    }
    let mut wreaths = Vec::new();
    for rep in d.rep_set(w)? {
        // letter i sits at rep.positions[i]; earlier positions are higher in the chain
        let mut chain: Vec<usize> = (0..w.len()).collect();
        chain.sort_by_key(|&i| rep.positions[i]);
        wreaths.push(chain_wreath(&spec, &chain)?);
    }
    wreaths.sort_by_key(|g| g.order());
    let (first, others) = wreaths.split_first().expect("rep set contains the word itself");
    let kept: Vec<Permutation> = first
        .elements(cap)?
        .into_iter()
        .filter(|e| others.iter().all(|g| g.contains(e)))
        .collect();
    Ok(ActionGroup {
        group: PermGroup::from_elements(spec.degree(), &kept)?,
        labels: Some(spec.tuples()),
    })
}

/// Structure summary used by reports.
#[derive(Clone, Debug, Serialize)]
pub struct GwpSummary {
    pub elements: Vec<String>,
    pub relation: Vec<(usize, usize)>,
    pub degree: usize,
    pub order: String,
}

pub fn summarize(spec: &GwpSpec, group: &PermGroup) -> GwpSummary {
    GwpSummary {
        elements: spec.names.clone(),
        relation: spec.poset.pairs(),
        degree: spec.degree(),
        order: group.order().to_string(),
    }
}

/// `∏ |G_i|^{d_i}` with `d_i = ∏_{j ≻ i} |X_j|`.
pub fn gwp_order_formula(spec: &GwpSpec) -> BigUint {
    (0..spec.len()).fold(BigUint::one(), |acc, r| acc * d_order_formula(spec, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{d1, d3};

    fn spec(less: &[(usize, usize)], sizes: &[usize], groups: Vec<PermGroup>) -> GwpSpec {
        let n = sizes.len();
        GwpSpec::new(
            (1..=n).map(|i| i.to_string()).collect(),
            poset_closure(n, less).unwrap(),
            sizes.to_vec(),
            groups,
        )
        .unwrap()
    }

    fn sym2_pair(less: &[(usize, usize)]) -> GwpSpec {
        spec(less, &[2, 2], vec![PermGroup::symmetric(2), PermGroup::symmetric(2)])
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let free = sym2_pair(&[]);
        assert!(gwp_member(&free, &Permutation::identity(4)).unwrap());
        // swap coordinate 1: (a, b) -> (1 - a, b); index = 2a + b
        assert!(gwp_member(&free, &perm(&[2, 3, 0, 1])).unwrap());

        let chain = sym2_pair(&[(1, 0)]);
        // swap coordinate 2 only when coordinate 1 is 0
        assert!(gwp_member(&chain, &perm(&[1, 0, 2, 3])).unwrap());
        // swap coordinate 1 only when coordinate 2 is 0
        assert!(!gwp_member(&chain, &perm(&[2, 1, 0, 3])).unwrap());
        assert!(gwp_member(&chain, &Permutation::identity(3)).is_err());
    }

    #[test]
    fn generation_examples() {
        assert_eq!(gwp_generate(&sym2_pair(&[]), 100).unwrap().order(), 4u32.into());
        assert_eq!(gwp_generate(&sym2_pair(&[(1, 0)]), 100).unwrap().order(), 8u32.into());
        let single = spec(&[], &[3], vec![PermGroup::symmetric(3)]);
        assert_eq!(gwp_generate(&single, 100).unwrap().order(), 6u32.into());
    }

    #[test]
    fn generation_matches_brute_force() {
        for less in [vec![], vec![(1, 0)], vec![(0, 1)]] {
            let s = sym2_pair(&less);
            let g = gwp_generate(&s, 100).unwrap();
            assert_eq!(g.order(), gwp_brute_force_order(&s).unwrap().into());
            for e in g.group.elements(100).unwrap() {
                assert!(gwp_member(&s, &e).unwrap());
            }
        }
        let s = spec(&[(1, 0), (2, 0)], &[2, 2, 2], vec![PermGroup::symmetric(2); 3]);
        assert_eq!(gwp_generate(&s, 100).unwrap().order(), gwp_brute_force_order(&s).unwrap().into());
        assert_eq!(gwp_order_formula(&s), 32u32.into());
    }

    #[test]
    fn ideal_examples() {
        let chain = sym2_pair(&[(1, 0)]);
        assert!(chain.is_ideal(&[1]));
        assert!(!chain.is_ideal(&[0]));
        let g = gwp_generate(&chain, 100).unwrap().group;
        let d = d_of_ideal(&chain, &g, &[1]).unwrap();
        assert_eq!(d.order(), 4u32.into());
        assert_eq!(d_order_formula(&chain, 1), 4u32.into());
        assert!(d.is_normal_in(&g));
        assert!(d_of_ideal(&chain, &g, &[]).unwrap().is_trivial());
        assert!(d_of_ideal(&chain, &g, &[0]).is_err());
        let filtered = d_of_ideal_by_filter(&chain, &g, &[1], 100).unwrap();
        assert!(filtered.same_action(&d).unwrap());
    }

    #[test]
    fn split_examples() {
        let chain = sym2_pair(&[(1, 0)]);
        let split = semidirect_split(&chain, 1, 100).unwrap();
        assert_eq!(split.d.order(), 4u32.into());
        assert_eq!(split.h.order(), 2u32.into());
        assert!(split.holds());
        assert!(semidirect_split(&chain, 0, 100).is_err());

        let free = sym2_pair(&[]);
        let split = semidirect_split(&free, 0, 100).unwrap();
        assert_eq!(split.d.order(), 2u32.into());
        assert_eq!(split.h.order(), 2u32.into());

        let single = spec(&[], &[3], vec![PermGroup::symmetric(3)]);
        let split = semidirect_split(&single, 0, 100).unwrap();
        assert_eq!(split.d.order(), 6u32.into());
        assert!(split.h.is_trivial());
    }

    #[test]
    fn split_intersection_matches_enumeration() {
        let s = spec(&[(1, 0), (2, 0)], &[2, 3, 2], vec![
            PermGroup::symmetric(2),
            PermGroup::symmetric(3),
            PermGroup::symmetric(2),
        ]);
        for r in [1, 2] {
            let split = semidirect_split(&s, r, 1000).unwrap();
            let common = split
                .h
                .elements(100_000)
                .unwrap()
                .into_iter()
                .filter(|e| split.d.contains(e))
                .count();
            assert_eq!(common, 1);
            assert!(split.holds());
        }
    }

    #[test]
    fn intersection_examples() {
        let d = d1();
        let g = wreath_intersection(&d, &d.parse_word("s t").unwrap(), 1000).unwrap();
        assert_eq!(g.order(), 8u32.into());
        let d = d3();
        let w = d.parse_word("s t").unwrap();
        let g = wreath_intersection(&d, &w, 1000).unwrap();
        assert_eq!(g.order(), 4u32.into());
        let spec = GwpSpec::for_word(&d, &w).unwrap();
        assert!(g.group.same_action(&gwp_generate(&spec, 1000).unwrap().group).unwrap());
        let g = wreath_intersection(&d, &d.parse_word("s").unwrap(), 1000).unwrap();
        assert_eq!(g.order(), 2u32.into());
    }

    #[test]
    fn spec_json() {
        let text = r#"{
            "elements": ["a", "b"],
            "less": [["b", "a"]],
            "sets": {"a": 2, "b": 2},
            "groups": {"a": {"degree": 2, "generators": ["(1 2)"]},
                       "b": {"degree": 2, "generators": ["[2,1]"]}}
        }"#;
        let s = GwpSpec::from_json(text).unwrap();
        assert_eq!(s.poset.pairs(), vec![(1, 0)]);
        assert_eq!(gwp_generate(&s, 100).unwrap().order(), 8u32.into());
        let bad = text.replace("\"degree\": 2, \"generators\": [\"(1 2)\"]", "\"degree\": 3, \"generators\": []");
        assert!(matches!(GwpSpec::from_json(&bad), Err(Error::Config { .. })));
        let cyclic = text.replace(r#"[["b", "a"]]"#, r#"[["b", "a"], [0, 1]]"#);
        assert!(GwpSpec::from_json(&cyclic).is_err());
    }
}
