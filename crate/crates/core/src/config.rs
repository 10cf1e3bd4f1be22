//! JSON configuration: `generators`, `coxeter`, `thickness`, `local_groups`, `caps`.

use std::path::Path;

use serde_json::{Map, Value};

use crate::building::Caps;
use crate::coxeter::CoxeterDiagram;
use crate::error::{Error, Result};
use crate::permgrp::{PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct Config {
    pub diagram: CoxeterDiagram,
    pub caps: Caps,
}

pub fn load_config(path: impl AsRef<Path>) -> Result<Config> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::config(path, "expected an object"))
}

fn field<'a>(root: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    root.get(key).ok_or_else(|| Error::config(key, "missing"))
}

fn count(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::config(path, format!("expected a non-negative integer, got {v}")))
}

pub fn parse_config(text: &str) -> Result<Config> {
    let root: Value = serde_json::from_str(text)?;
    let root = object(&root, "$")?;

    let names: Vec<String> = field(root, "generators")?
        .as_array()
        .ok_or_else(|| Error::config("generators", "expected an array"))?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::config(format!("generators[{i}]"), "expected a string"))
        })
        .collect::<Result<_>>()?;

    let coxeter = object(field(root, "coxeter")?, "coxeter")?;
    let mut entries = std::collections::HashMap::new();
    for (key, value) in coxeter {
        let path = format!("coxeter.{key}");
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| Error::config(&path, "key must be `a,b`"))?;
        let (a, b) = (a.trim(), b.trim());
        let ia = names.iter().position(|n| n == a);
        let ib = names.iter().position(|n| n == b);
        let (Some(ia), Some(ib)) = (ia, ib) else {
            return Err(Error::config(&path, "unknown generator"));
        };
        if ia == ib {
            return Err(Error::config(&path, "pair of equal generators"));
        }
        let commute = match value {
            Value::Number(n) if n.as_u64() == Some(2) => true,
            Value::String(s) if s == "2" => true,
            Value::String(s) if s == "inf" || s == "∞" => false,
            other => return Err(Error::config(&path, format!("expected 2 or \"inf\", got {other}"))),
        };
        let pair = (ia.min(ib), ia.max(ib));
        if entries.insert(pair, commute).is_some() {
            return Err(Error::config(&path, "pair given twice"));
        }
    }
    let mut commuting = Vec::new();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            match entries.get(&(i, j)) {
                Some(true) => commuting.push((i, j)),
                Some(false) => {}
                None => {
                    return Err(Error::config(
                        format!("coxeter.{},{}", names[i], names[j]),
                        "missing pair",
                    ))
                }
            }
        }
    }

    let thickness_map = object(field(root, "thickness")?, "thickness")?;
    let groups_map = object(field(root, "local_groups")?, "local_groups")?;
    let mut thickness = Vec::new();
    let mut groups = Vec::new();
    for name in &names {
        let tpath = format!("thickness.{name}");
        let q = count(
            thickness_map.get(name).ok_or_else(|| Error::config(&tpath, "missing"))?,
            &tpath,
        )?;
        if q < 2 {
            return Err(Error::config(&tpath, format!("must be at least 2, got {q}")));
        }
        let gpath = format!("local_groups.{name}");
        let g = object(
            groups_map.get(name).ok_or_else(|| Error::config(&gpath, "missing"))?,
            &gpath,
        )?;
        let degree = count(
            g.get("degree").ok_or_else(|| Error::config(format!("{gpath}.degree"), "missing"))?,
            &format!("{gpath}.degree"),
        )?;
        if degree != q {
            return Err(Error::config(
                format!("{gpath}.degree"),
                format!("degree {degree} does not match thickness {q}"),
            ));
        }
        let gens = match g.get("generators") {
            None => Vec::new(),
            Some(v) => v
                .as_array()
                .ok_or_else(|| Error::config(format!("{gpath}.generators"), "expected an array"))?
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let ppath = format!("{gpath}.generators[{i}]");
                    let text = p.as_str().ok_or_else(|| Error::config(&ppath, "expected a string"))?;
                    Permutation::parse(text, degree).map_err(|e| Error::config(&ppath, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        thickness.push(q);
        groups.push(PermGroup::new(degree, gens)?);
    }

    let mut caps = Caps::default();
    if let Some(c) = root.get("caps") {
        let c = object(c, "caps")?;
        if let Some(v) = c.get("radius") {
            caps.radius = count(v, "caps.radius")?;
        }
        if let Some(v) = c.get("ball_size") {
            caps.ball_size = count(v, "caps.ball_size")?;
        }
        if let Some(v) = c.get("enum") {
            caps.enumeration = count(v, "caps.enum")?;
        }
    }

    let diagram = CoxeterDiagram::new(names, &commuting, thickness, groups)?;
    Ok(Config { diagram, caps })
}

#[cfg(test)]
mod tests {
    use super::*;

    const D1: &str = r#"{
        "generators": ["s", "t"],
        "coxeter": {"s,t": "inf"},
        "thickness": {"s": 3, "t": 3},
        "local_groups": {
            "s": {"degree": 3, "generators": ["(1 2)", "(1 2 3)"]},
            "t": {"degree": 3, "generators": ["[2,1,3]", "[2,3,1]"]}
        }
    }"#;

    fn err(text: &str) -> String {
        parse_config(text).unwrap_err().to_string()
    }

    #[test]
    fn parses_d1() {
        let c = parse_config(D1).unwrap();
        assert_eq!(c.diagram.rank(), 2);
        assert!(!c.diagram.commute(0, 1));
        assert_eq!(c.diagram.local_group(1).order(), 6u32.into());
        assert_eq!(c.caps, Caps::default());
    }

    #[test]
    fn reversed_pair_and_caps() {
        let text = D1
            .replace(r#""s,t": "inf""#, r#""t,s": 2"#)
            .replace(r#""thickness""#, r#""caps": {"radius": 4, "enum": 100}, "thickness""#);
        let c = parse_config(&text).unwrap();
        assert!(c.diagram.commute(0, 1));
        assert_eq!(c.caps.radius, 4);
        assert_eq!(c.caps.enumeration, 100);
        assert_eq!(c.caps.ball_size, 1_000_000);
    }

    #[test]
    fn diagnostics() {
        assert!(err(&D1.replace(r#""s,t": "inf""#, "")).contains("coxeter.s,t"));
        assert!(err(&D1.replace("[2,1,3]", "[2,2,3]")).contains("not a bijection"));
        assert!(err(&D1.replace(r#""t": 3}"#, r#""t": 4}"#)).contains("local_groups.t.degree"));
        assert!(err(&D1.replace(r#""s,t": "inf""#, r#""s,t": 3"#)).contains("coxeter.s,t"));
        assert!(err(&D1.replace(r#""s,t""#, r#""s,x""#)).contains("unknown generator"));
        assert!(err("[1]").contains("expected an object"));
    }
}
