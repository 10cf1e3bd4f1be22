//! Small reference diagrams, all with thickness 3 and `Sym(3)` local groups.

use crate::coxeter::CoxeterDiagram;
use crate::permgrp::PermGroup;

/// `s, t` with `m_st = ∞`.
pub fn d1() -> CoxeterDiagram {
    CoxeterDiagram::uniform(&["s", "t"], &[], 3, PermGroup::symmetric(3)).unwrap()
}

/// `s, t` with `m_st = 2`.
pub fn d2() -> CoxeterDiagram {
    CoxeterDiagram::uniform(&["s", "t"], &[("s", "t")], 3, PermGroup::symmetric(3)).unwrap()
}

/// `s, t, u` with `m_st = 2` and the other pairs free.
pub fn d3() -> CoxeterDiagram {
    CoxeterDiagram::uniform(&["s", "t", "u"], &[("s", "t")], 3, PermGroup::symmetric(3)).unwrap()
}

/// [`d3`] with the local group at `u` replaced by the cyclic group of order 3.
pub fn d3_cyclic() -> CoxeterDiagram {
    let mut d = d3();
    d.set_local_group(2, PermGroup::cyclic(3)).unwrap();
    d
}

/// [`d1`] with the cyclic group of order 3 at both generators.
pub fn d1_cyclic() -> CoxeterDiagram {
    CoxeterDiagram::uniform(&["s", "t"], &[], 3, PermGroup::cyclic(3)).unwrap()
}

/// The three reference diagrams with their names.
pub fn standard() -> Vec<(&'static str, CoxeterDiagram)> {
    vec![("D1", d1()), ("D2", d2()), ("D3", d3())]
}

/// Four generators on a square: `s-t`, `t-u`, `u-v`, `v-s` commute, the diagonals are free.
pub fn square() -> CoxeterDiagram {
    CoxeterDiagram::uniform(
        &["s", "t", "u", "v"],
        &[("s", "t"), ("t", "u"), ("u", "v"), ("v", "s")],
        3,
        PermGroup::symmetric(3),
    )
    .unwrap()
}
