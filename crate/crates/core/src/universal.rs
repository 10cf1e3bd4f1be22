//! The chamber stabilizer of the universal group, acting on balls and spheres.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::building::{color_tuples, Ball, Caps, Chamber, TreeWallId};
use crate::coxeter::{CoxeterDiagram, DescentClass, Gen, Word};
use crate::error::{Error, Result};
use crate::gwreath::{ActionGroup, GwpSpec};
use crate::permgrp::{PermGroup, Permutation};
use crate::report::Check;

/// A tree-wall of a ball, given by type and the ball index of its gate.
type WallKey = (Gen, usize);

/// The tree-walls crossed by the standard gallery from `c_0` to each chamber,
/// one per letter position.
#[derive(Clone, Debug)]
pub struct Crossings {
    per_chamber: Vec<Vec<WallKey>>,
}

impl Crossings {
    pub fn compute(d: &CoxeterDiagram, ball: &Ball) -> Result<Self> {
        let mut per_chamber = Vec::with_capacity(ball.len());
        for c in ball.chambers() {
            let mut walls = Vec::with_capacity(c.len());
            for (i, &s) in c.word.0.iter().enumerate() {
                let prefix = d.canonical_chamber(&c.word.prefix(i), &c.colors[..i])?;
                let tw = d.tree_wall(&prefix, s);
                walls.push((s, ball.require(d, &tw.gate)?));
            }
            per_chamber.push(walls);
        }
        Ok(Crossings { per_chamber })
    }

    pub fn of(&self, chamber: usize) -> &[WallKey] {
        &self.per_chamber[chamber]
    }

    /// Letter position of `chamber` at which its gallery crosses `wall`.
    pub fn position(&self, chamber: usize, wall: WallKey) -> Result<Option<usize>> {
        let mut hits = self.per_chamber[chamber].iter().enumerate().filter(|(_, &w)| w == wall);
        let first = hits.next().map(|(i, _)| i);
        if hits.next().is_some() {
            return Err(Error::Precondition("a gallery crosses one tree-wall twice".into()));
        }
        Ok(first)
    }
}

/// A generator `g_T`: a color-1 stabilizing permutation applied at the crossing of `T`.
#[derive(Clone, Debug)]
pub struct TreeWallGenerator {
    pub tree_wall: TreeWallId,
    pub local_element: Permutation,
    pub action: Permutation,
}

pub fn tree_wall_generator(
    d: &CoxeterDiagram,
    ball: &Ball,
    crossings: &Crossings,
    tw: &TreeWallId,
    g: &Permutation,
) -> Result<TreeWallGenerator> {
    if g.degree() != d.thickness(tw.gen) {
        return Err(Error::DegreeMismatch {
            expected: d.thickness(tw.gen),
            found: g.degree(),
        });
    }
    if !g.fixes(0) {
        return Err(Error::Precondition(format!("{g} moves color 1")));
    }
    let wall = (tw.gen, ball.require(d, &tw.gate)?);
    let mut images = Vec::with_capacity(ball.len());
    for (x, c) in ball.chambers().iter().enumerate() {
        match crossings.position(x, wall)? {
            Some(i) => {
                let mut colors = c.colors.clone();
                colors[i] = g.apply(colors[i] - 1) + 1;
                let image = Chamber {
                    word: c.word.clone(),
                    colors,
                };
                images.push(ball.require(d, &image)?);
            }
            None => images.push(x),
        }
    }
    Ok(TreeWallGenerator {
        tree_wall: tw.clone(),
        local_element: g.clone(),
        action: Permutation::from_images(images)?,
    })
}

/// Tree-walls of the panels lying entirely in the ball, sorted by (type, gate index).
pub fn crossed_tree_walls(d: &CoxeterDiagram, ball: &Ball) -> Vec<TreeWallId> {
    let mut walls: BTreeMap<WallKey, TreeWallId> = BTreeMap::new();
    for p in ball.panels() {
        let tw = d.tree_wall(ball.chamber(p.members[0]), p.gen);
        let gate = ball.index_of(&tw.gate).expect("gates are closer than their panels");
        walls.insert((p.gen, gate), tw);
    }
    walls.into_values().collect()
}

/// The restriction of the chamber stabilizer to a ball, with its generators.
#[derive(Clone, Debug)]
pub struct BallGroup {
    pub ball: Ball,
    pub group: PermGroup,
    pub provenance: Vec<(TreeWallId, Permutation)>,
}

pub fn ball_stabilizer(d: &CoxeterDiagram, n: usize, caps: &Caps) -> Result<BallGroup> {
    let ball = Ball::build(d, n, caps)?;
    let crossings = Crossings::compute(d, &ball)?;
    let mut gens = Vec::new();
    let mut provenance = Vec::new();
    for tw in crossed_tree_walls(d, &ball) {
        for g in d.local_stabilizer(tw.gen).generators() {
            let gen = tree_wall_generator(d, &ball, &crossings, &tw, g)?;
            gens.push(gen.action);
            provenance.push((tw.clone(), g.clone()));
        }
    }
    let group = PermGroup::new(ball.len(), gens)?;
    Ok(BallGroup {
        ball,
        group,
        provenance,
    })
}

impl BallGroup {
    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    /// Ball indices of the chambers `[w | α]`, in lexicographic order of `α`.
    pub fn sphere_points(&self, d: &CoxeterDiagram, w: &Word) -> Result<Vec<usize>> {
        color_tuples(d, w)
            .iter()
            .map(|a| self.ball.require(d, &d.canonical_chamber(w, a)?))
            .collect()
    }

    /// The action on the chambers at Weyl distance `w` from `c_0`, labelled by
    /// 0-based color tuples along the letters of `w`.
    pub fn sphere(&self, d: &CoxeterDiagram, w: &Word) -> Result<ActionGroup> {
        let points = self.sphere_points(d, w)?;
        let labels = color_tuples(d, w)
            .into_iter()
            .map(|a| a.into_iter().map(|x| x - 2).collect())
            .collect();
        Ok(ActionGroup {
            group: self.group.restrict(&points)?,
            labels: Some(labels),
        })
    }

    /// Color permutation induced by `g` from the panel `p` to its image.
    pub fn local_action(&self, g: &Permutation, p: usize) -> Result<Permutation> {
        let panel = &self.ball.panels()[p];
        let mut images = Vec::with_capacity(panel.members.len());
        let mut target: Option<usize> = None;
        for &m in &panel.members {
            let x = g.apply(m);
            let q = self
                .ball
                .panel_index(x, panel.gen)
                .ok_or_else(|| Error::Precondition("image panel leaves the ball".into()))?;
            if *target.get_or_insert(q) != q {
                return Err(Error::Precondition("panel is not mapped to a panel".into()));
            }
            let pos = self.ball.panels()[q].members.iter().position(|&y| y == x).expect("member");
            images.push(pos);
        }
        Permutation::from_images(images)
    }

    /// Type-preserving graph automorphism of the ball.
    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        g.degree() == self.ball.len()
            && self
                .ball
                .edges()
                .iter()
                .all(|&(i, j, s)| self.ball.adjacency_type(g.apply(i), g.apply(j)) == Some(s))
    }

    /// Fixes `c_0`, is a type-preserving automorphism, and acts through `G^s` on
    /// every panel away from the boundary sphere. Says nothing about boundary panels.
    pub fn looks_universal(&self, d: &CoxeterDiagram, g: &Permutation) -> Result<bool> {
        if !g.fixes(0) || !self.is_automorphism(g) {
            return Ok(false);
        }
        for (p, panel) in self.ball.panels().iter().enumerate() {
            if self.ball.level(panel.members[0]) + 2 > self.ball.radius() {
                continue;
            }
            if !d.local_group(panel.gen).contains(&self.local_action(g, p)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn sphere_stabilizer(d: &CoxeterDiagram, w: &Word, caps: &Caps) -> Result<ActionGroup> {
    if !d.is_reduced(w)? {
        return Err(Error::NotReduced(d.format_word(w)));
    }
    ball_stabilizer(d, w.len(), caps)?.sphere(d, w)
}

/// `d_i = ∏_{j ≻_w i} (q_{s_j} - 1)` for each position of a reduced word.
pub fn position_exponents(d: &CoxeterDiagram, w: &Word) -> Result<Vec<u64>> {
    let poset = d.position_poset(w)?;
    Ok((0..w.len())
        .map(|i| {
            poset
                .above(i)
                .iter()
                .map(|&j| d.thickness(w.0[j]) as u64 - 1)
                .product()
        })
        .collect())
}

pub fn sphere_order_formula(d: &CoxeterDiagram, w: &Word) -> Result<BigUint> {
    let exps = position_exponents(d, w)?;
    Ok(w.0.iter().zip(exps).fold(BigUint::one(), |acc, (&s, e)| {
        acc * d.local_stabilizer(s).order().pow(e as u32)
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct SphereFormula {
    pub word: String,
    pub exponents: Vec<u64>,
    pub order: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormulaReport {
    pub spheres: Vec<SphereFormula>,
    /// `d(s, n)` for `n = 0..=up_to`, indexed `[n][s]`.
    pub d: Vec<Vec<u64>>,
    /// `t(s, n)`, indexed `[n][s]`.
    pub t: Vec<Vec<u64>>,
    #[serde(serialize_with = "as_strings")]
    pub ball_orders: Vec<BigUint>,
}

fn as_strings<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn order_formulas(d: &CoxeterDiagram, up_to: usize) -> Result<FormulaReport> {
    let rank = d.rank();
    let mut spheres = Vec::new();
    let mut dtab = vec![vec![0u64; rank]];
    for n in 1..=up_to {
        let mut row = vec![0u64; rank];
        for w in d.elements_of_length(n) {
            let exps = position_exponents(d, &w)?;
            if let DescentClass::W1(r) = d.descent_data(&w)?.class {
                row[r] += *exps.last().expect("nonempty word");
            }
            spheres.push(SphereFormula {
                word: d.format_word(&w),
                order: sphere_order_formula(d, &w)?.to_string(),
                exponents: exps,
            });
        }
        dtab.push(row);
    }
    let mut ttab: Vec<Vec<u64>> = vec![vec![0; rank]];
    for n in 1..=up_to {
        let row = (0..rank).map(|s| ttab[n - 1][s] + dtab[n][s]).collect();
        ttab.push(row);
    }
    let ball_orders = ttab
        .iter()
        .map(|row| {
            row.iter().enumerate().fold(BigUint::one(), |acc, (s, &t)| {
                acc * d.local_stabilizer(s).order().pow(t as u32)
            })
        })
        .collect();
    Ok(FormulaReport {
        spheres,
        d: dtab,
        t: ttab,
        ball_orders,
    })
}

pub fn ball_order_formula(d: &CoxeterDiagram, n: usize) -> Result<BigUint> {
    Ok(order_formulas(d, n)?.ball_orders.pop().expect("at least radius 0"))
}

/// Sphere-`n+1` chambers split by descent class, and the pairs `Z_n`.
#[derive(Clone, Debug)]
pub struct Partition {
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
    /// `(chamber at level n, generator)`.
    pub z: Vec<(usize, Gen)>,
}

pub fn partition(d: &CoxeterDiagram, ball: &Ball, n: usize) -> Result<Partition> {
    let mut a1 = Vec::new();
    let mut a2 = Vec::new();
    for x in ball.sphere(n + 1) {
        match d.descent_data(&ball.chamber(x).word)?.class {
            DescentClass::W1(_) => a1.push(x),
            _ => a2.push(x),
        }
    }
    let mut z = Vec::new();
    for x in ball.sphere(n) {
        let w = &ball.chamber(x).word;
        for s in d.generators() {
            if d.has_descent(w, s) {
                continue;
            }
            if d.descent_data(&w.with(s))?.class == DescentClass::W1(s) {
                z.push((x, s));
            }
        }
    }
    Ok(Partition { a1, a2, z })
}

/// Checks the semidirect decomposition of the ball group at radius `n + 1`.
pub fn verify_recursion(d: &CoxeterDiagram, n: usize, caps: &Caps) -> Result<Vec<Check>> {
    let small = ball_stabilizer(d, n, caps)?;
    let big = ball_stabilizer(d, n + 1, caps)?;
    let part = partition(d, &big.ball, n)?;
    let gz: BigUint = part
        .z
        .iter()
        .fold(BigUint::one(), |acc, &(_, s)| acc * d.local_stabilizer(s).order());
    let mut checks = Vec::new();
    let tag = |what: &str| format!("recursion n={n}: {what}");

    checks.push(Check::equal(
        tag("|B(n+1)| = |B(n)| * prod |G_z|"),
        small.order() * &gz,
        big.order(),
    ));

    let inner: Vec<usize> = big.ball.sub_ball(n).collect();
    let kernel = big.group.pointwise_stabilizer(&inner)?;
    checks.push(Check::equal(tag("kernel order"), &gz, kernel.order()));
    let fixes_a2 = part.a2.iter().all(|&x| kernel.generators().iter().all(|g| g.fixes(x)));
    checks.push(Check::holds(tag("kernel fixes A2(n+1)"), fixes_a2));
    let in_panels = kernel.orbits().iter().filter(|o| o.len() > 1).all(|o| {
        part.z.iter().any(|&(c, s)| {
            let p = big.ball.panel_index(c, s);
            o.iter().all(|&x| big.ball.panel_index(x, s) == p)
        })
    });
    checks.push(Check::holds(tag("kernel orbits lie in panels P_z"), in_panels));

    let crossing = big.ball.edges().iter().any(|&(i, j, _)| {
        (part.a1.contains(&i) && part.a2.contains(&j)) || (part.a2.contains(&i) && part.a1.contains(&j))
    });
    checks.push(Check::holds(tag("A1 and A2 not adjacent"), !crossing));

    let restricted = big.group.restrict(&inner)?;
    checks.push(Check::holds(
        tag("restriction onto B(n) group"),
        restricted.same_action(&small.group)?,
    ));
    Ok(checks)
}

/// Thickness, irreducibility, rank and the local-group conditions.
pub fn check_preconditions(d: &CoxeterDiagram) -> Vec<Check> {
    let mut checks = Vec::new();
    let thin: Vec<&str> = d.generators().filter(|&s| d.thickness(s) < 3).map(|s| d.name(s)).collect();
    checks.push(Check::equal("IR: thick", "no panels of size 2", if thin.is_empty() {
        "no panels of size 2".to_string()
    } else {
        format!("size-2 panels at {}", thin.join(","))
    }));
    checks.push(Check::holds("IR: irreducible", d.is_irreducible()));
    checks.push(Check::holds("IR: rank >= 2", d.rank() >= 2));
    for s in d.generators() {
        let g = d.local_group(s);
        checks.push(Check::holds(format!("ST: G^{} transitive", d.name(s)), g.is_transitive()));
        checks.push(Check::holds(
            format!("ST: G^{} generated by point stabilizers", d.name(s)),
            g.satisfies_st(),
        ));
    }
    checks
}

/// Whether the checks with the given prefix all pass.
pub fn verdict(checks: &[Check], prefix: &str) -> bool {
    checks.iter().filter(|c| c.check.starts_with(prefix)).all(|c| c.pass)
}

/// Orders of the sphere groups at one level, keyed by word.
pub fn sphere_orders(d: &CoxeterDiagram, group: &BallGroup, n: usize) -> Result<HashMap<Word, BigUint>> {
    d.elements_of_length(n)
        .into_iter()
        .map(|w| Ok((w.clone(), group.sphere(d, &w)?.order())))
        .collect()
}

/// The sphere model as a generalized wreath product for comparison.
pub fn sphere_model(d: &CoxeterDiagram, w: &Word, caps: &Caps) -> Result<ActionGroup> {
    crate::gwreath::gwp_generate(&GwpSpec::for_word(d, w)?, caps.enumeration)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{d1, d2, d3, d3_cyclic};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn generator_examples() {
        let d = d1();
        let ball = Ball::build(&d, 2, &caps()).unwrap();
        let cr = Crossings::compute(&d, &ball).unwrap();
        let i = |s: &str| ball.index_of(&d.parse_chamber(s).unwrap()).unwrap();
        let tw = d.tree_wall(&Chamber::base(), 0);
        let g = Permutation::parse("(2 3)", 3).unwrap();
        let gen = tree_wall_generator(&d, &ball, &cr, &tw, &g).unwrap();
        assert_eq!(gen.action.apply(i("s|2")), i("s|3"));
        assert_eq!(gen.action.apply(i("s t|2 2")), i("s t|3 2"));
        assert_eq!(gen.action.apply(i("t|2")), i("t|2"));
        let id = tree_wall_generator(&d, &ball, &cr, &tw, &Permutation::identity(3)).unwrap();
        assert!(id.action.is_identity());
        let bad = Permutation::parse("(1 2)", 3).unwrap();
        assert!(tree_wall_generator(&d, &ball, &cr, &tw, &bad).is_err());

        let d = d3();
        let ball = Ball::build(&d, 2, &caps()).unwrap();
        let cr = Crossings::compute(&d, &ball).unwrap();
        let i = |s: &str| ball.index_of(&d.parse_chamber(s).unwrap()).unwrap();
        let gen = tree_wall_generator(&d, &ball, &cr, &d.tree_wall(&Chamber::base(), 0), &g).unwrap();
        assert_eq!(gen.action.apply(i("t s|2 2")), i("t s|2 3"));
    }

    #[test]
    fn composition_law() {
        let d = d1();
        let ball = Ball::build(&d, 3, &caps()).unwrap();
        let cr = Crossings::compute(&d, &ball).unwrap();
        let q4 = CoxeterDiagram::uniform(&["s", "t"], &[], 4, PermGroup::symmetric(4)).unwrap();
        let ball4 = Ball::build(&q4, 2, &caps()).unwrap();
        let cr4 = Crossings::compute(&q4, &ball4).unwrap();
        let tw = q4.tree_wall(&Chamber::base(), 1);
        let g = Permutation::parse("(2 3)", 4).unwrap();
        let h = Permutation::parse("(2 3 4)", 4).unwrap();
        let gt = tree_wall_generator(&q4, &ball4, &cr4, &tw, &g).unwrap().action;
        let ht = tree_wall_generator(&q4, &ball4, &cr4, &tw, &h).unwrap().action;
        let ght = tree_wall_generator(&q4, &ball4, &cr4, &tw, &h.then(&g)).unwrap().action;
        assert_eq!(ght, ht.then(&gt));
        for tw in crossed_tree_walls(&d, &ball) {
            let g = Permutation::parse("(2 3)", 3).unwrap();
            let a = tree_wall_generator(&d, &ball, &cr, &tw, &g).unwrap().action;
            assert!(a.then(&a).is_identity());
        }
    }

    #[test]
    fn crossed_counts() {
        let d = d1();
        for (n, expected) in [(0, 0), (1, 2), (2, 6)] {
            let ball = Ball::build(&d, n, &caps()).unwrap();
            assert_eq!(crossed_tree_walls(&d, &ball).len(), expected);
        }
    }

    #[test]
    fn crossings_match_crossed_walls() {
        for d in [d1(), d2(), d3()] {
            let ball = Ball::build(&d, 3, &caps()).unwrap();
            let cr = Crossings::compute(&d, &ball).unwrap();
            let mut seen: Vec<WallKey> = (0..ball.len()).flat_map(|x| cr.of(x).to_vec()).collect();
            seen.sort();
            seen.dedup();
            let walls: Vec<WallKey> = crossed_tree_walls(&d, &ball)
                .iter()
                .map(|t| (t.gen, ball.index_of(&t.gate).unwrap()))
                .collect();
            assert_eq!(seen, walls);
            for x in 0..ball.len() {
                let mut w = cr.of(x).to_vec();
                w.sort();
                w.dedup();
                assert_eq!(w.len(), cr.of(x).len());
            }
        }
    }

    #[test]
    fn ball_orders() {
        let d = d1();
        assert_eq!(ball_stabilizer(&d, 1, &caps()).unwrap().order(), 4u32.into());
        assert_eq!(ball_stabilizer(&d, 2, &caps()).unwrap().order(), 64u32.into());
        let d = d2();
        assert_eq!(ball_stabilizer(&d, 1, &caps()).unwrap().order(), 4u32.into());
        assert_eq!(ball_stabilizer(&d, 2, &caps()).unwrap().order(), 4u32.into());
        assert_eq!(ball_stabilizer(&d, 0, &caps()).unwrap().order(), 1u32.into());
    }

    #[test]
    fn sphere_orders_examples() {
        let d = d1();
        let w = d.parse_word("s t").unwrap();
        assert_eq!(sphere_stabilizer(&d, &w, &caps()).unwrap().order(), 8u32.into());
        assert_eq!(sphere_order_formula(&d, &w).unwrap(), 8u32.into());
        assert_eq!(position_exponents(&d, &w).unwrap(), vec![1, 2]);
        let d = d3();
        let w = d.parse_word("s t").unwrap();
        assert_eq!(sphere_stabilizer(&d, &w, &caps()).unwrap().order(), 4u32.into());
        let w = d.parse_word("u").unwrap();
        assert_eq!(sphere_stabilizer(&d, &w, &caps()).unwrap().order(), 2u32.into());
    }

    #[test]
    fn formula_examples() {
        let r = order_formulas(&d1(), 2).unwrap();
        assert_eq!(r.t[2], vec![3, 3]);
        assert_eq!(r.ball_orders, vec![1u32.into(), 4u32.into(), 64u32.into()]);
        let r = order_formulas(&d2(), 2).unwrap();
        assert_eq!(r.d[2], vec![0, 0]);
        assert_eq!(r.t[2], vec![1, 1]);
        assert_eq!(r.ball_orders[2], 4u32.into());
    }

    #[test]
    fn recursion_examples() {
        for d in [d1(), d2()] {
            for n in 0..2 {
                for c in verify_recursion(&d, n, &caps()).unwrap() {
                    assert!(c.pass, "{c}");
                }
            }
        }
        let p = partition(&d1(), &Ball::build(&d1(), 2, &caps()).unwrap(), 1).unwrap();
        assert_eq!(p.z.len(), 4);
        let p = partition(&d2(), &Ball::build(&d2(), 2, &caps()).unwrap(), 1).unwrap();
        assert!(p.z.is_empty());
    }

    #[test]
    fn precondition_examples() {
        let c = check_preconditions(&d1());
        assert!(verdict(&c, "IR") && verdict(&c, "ST"));
        let c = check_preconditions(&d3_cyclic());
        assert!(verdict(&c, "IR"));
        assert!(!verdict(&c, "ST"));
        assert!(c.iter().any(|x| !x.pass && x.check.contains("G^u")));
        assert!(!verdict(&check_preconditions(&d2()), "IR"));
    }

    #[test]
    fn local_actions_and_cocycle() {
        let d = d3();
        let bg = ball_stabilizer(&d, 2, &caps()).unwrap();
        let gens = bg.group.generators();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut random = || {
            let mut g = Permutation::identity(bg.ball.len());
            for _ in 0..12 {
                g = g.then(&gens[rng.gen_range(0..gens.len())]);
            }
            g
        };
        for _ in 0..20 {
            let g = random();
            let h = random();
            assert!(bg.is_automorphism(&g));
            assert!(bg.looks_universal(&d, &g).unwrap());
            for p in 0..bg.ball.panels().len() {
                let sg = bg.local_action(&g, p).unwrap();
                assert!(d.local_group(bg.ball.panels()[p].gen).contains(&sg));
                let hp = bg.ball.panel_index(h.apply(bg.ball.panels()[p].members[0]), bg.ball.panels()[p].gen).unwrap();
                let lhs = bg.local_action(&h.then(&g), p).unwrap();
                let rhs = bg.local_action(&h, p).unwrap().then(&bg.local_action(&g, hp).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        let swap = Permutation::from_images({
            let mut v: Vec<usize> = (0..bg.ball.len()).collect();
            v.swap(0, 1);
            v
        })
        .unwrap();
        assert!(!bg.looks_universal(&d, &swap).unwrap());
    }
}
