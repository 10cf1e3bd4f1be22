//! Right-angled buildings in the directed-chamber model and the chamber
//! stabilizers of their universal groups.

pub mod building;
pub mod config;
pub mod coxeter;
pub mod error;
pub mod fixtures;
pub mod gwreath;
pub mod permgrp;
pub mod report;
pub mod suite;
pub mod universal;

pub use building::{Ball, Caps, Chamber, Panel, TreeWallId, TreeWallTree};
pub use config::{load_config, parse_config, Config};
pub use coxeter::{CoxeterDiagram, DescentClass, Gen, PositionPoset, Rep, Word};
pub use error::{Error, Result};
pub use gwreath::{ActionGroup, GwpSpec};
pub use permgrp::{PermGroup, Permutation};
pub use report::Check;
pub use universal::BallGroup;
