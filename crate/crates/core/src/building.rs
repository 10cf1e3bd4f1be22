//! The directed right-angled building at finite radius.
//!
//! A chamber is a reduced word together with one color in `2..=q_s` per letter,
//! taken up to reordering commuting letters (colors travel with their letters).
//! The base chamber `c_0` is the empty word.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::coxeter::{CoxeterDiagram, Gen, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub radius: usize,
    pub ball_size: usize,
    pub enumeration: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            radius: 6,
            ball_size: 1_000_000,
            enumeration: 10_000_000,
        }
    }
}

/// A canonical chamber: the word is in normal form and `colors[i]` belongs to `word[i]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Chamber {
    pub word: Word,
    pub colors: Vec<usize>,
}

impl Chamber {
    pub fn base() -> Self {
        Chamber::default()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Sort key used for ball indexing.
    fn key(&self) -> (usize, &[Gen], &[usize]) {
        (self.word.len(), &self.word.0, &self.colors)
    }
}

/// The `q_s` chambers sharing an `s`-panel, gate (color 1) first, then colors `2..=q_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Panel {
    pub gen: Gen,
    pub members: Vec<Chamber>,
}

impl Panel {
    /// The member closest to `c_0`.
    pub fn base(&self) -> &Chamber {
        &self.members[0]
    }

    pub fn contains(&self, c: &Chamber) -> bool {
        self.members.contains(c)
    }
}

/// A tree-wall, identified by its type and the chamber of its carrying residue closest to `c_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TreeWallId {
    pub gen: Gen,
    pub gate: Chamber,
}

#[derive(Clone, Debug)]
pub struct Residue {
    pub chambers: Vec<Chamber>,
    /// Some chamber of the residue lies beyond the length cap.
    pub truncated: bool,
}

impl CoxeterDiagram {
    /// Canonical representative of the chamber `(word, colors)`.
    pub fn canonical_chamber(&self, word: &Word, colors: &[usize]) -> Result<Chamber> {
        if colors.len() != word.len() {
            return Err(Error::Precondition(format!(
                "{} colors for a word of length {}",
                colors.len(),
                word.len()
            )));
        }
        if !self.is_reduced(word)? {
            return Err(Error::NotReduced(self.format_word(word)));
        }
        for (&s, &a) in word.0.iter().zip(colors) {
            let q = self.thickness(s);
            if a < 2 || a > q {
                return Err(Error::ColorOutOfRange {
                    generator: self.name(s).to_string(),
                    color: a,
                    max: q,
                });
            }
        }
        Ok(self.canonicalize(&word.0, colors))
    }

    fn canonicalize(&self, letters: &[Gen], colors: &[usize]) -> Chamber {
        let order = self.normal_order(letters);
        Chamber {
            word: Word(order.iter().map(|&i| letters[i]).collect()),
            colors: order.iter().map(|&i| colors[i]).collect(),
        }
    }

    /// Removes the letter at `k` (which must be a terminal letter up to commutation).
    fn drop_letter(&self, c: &Chamber, k: usize) -> Chamber {
        let mut letters = c.word.0.clone();
        let mut colors = c.colors.clone();
        letters.remove(k);
        colors.remove(k);
        self.canonicalize(&letters, &colors)
    }

    fn extend(&self, c: &Chamber, s: Gen, color: usize) -> Chamber {
        let mut letters = c.word.0.clone();
        let mut colors = c.colors.clone();
        letters.push(s);
        colors.push(color);
        self.canonicalize(&letters, &colors)
    }

    /// Position of the letter `s` that can be moved to the end of `c`, if any.
    fn terminal_position(&self, c: &Chamber, s: Gen) -> Option<usize> {
        let w = &c.word.0;
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

    /// The `s`-panel containing `c`.
    pub fn panel(&self, c: &Chamber, s: Gen) -> Panel {
        let base = match self.terminal_position(c, s) {
            Some(k) => self.drop_letter(c, k),
            None => c.clone(),
        };
        let mut members = vec![base.clone()];
        for a in 2..=self.thickness(s) {
            members.push(self.extend(&base, s, a));
        }
        Panel { gen: s, members }
    }

    /// Color of `c` in its `s`-panel: 1 on the panel's gate, otherwise the color of the terminal `s`.
    pub fn standard_color(&self, c: &Chamber, s: Gen) -> usize {
        match self.terminal_position(c, s) {
            Some(k) => c.colors[k],
            None => 1,
        }
    }

    /// The type of the panel shared by two distinct chambers, if they are adjacent.
    pub fn adjacency_type(&self, a: &Chamber, b: &Chamber) -> Option<Gen> {
        if a == b || a.len().abs_diff(b.len()) > 1 {
            return None;
        }
        self.generators().find(|&s| self.panel(a, s).contains(b))
    }

    /// Projection of `c_0` onto the `J`-residue of `c`.
    pub fn residue_gate(&self, c: &Chamber, j: &[Gen]) -> Chamber {
        let mut c = c.clone();
        while let Some(k) = j.iter().find_map(|&s| self.terminal_position(&c, s)) {
            c = self.drop_letter(&c, k);
        }
        c
    }

    /// The `J`-residue of `c`, explored only through chambers of length at most `max_len`.
    pub fn residue(&self, c: &Chamber, j: &[Gen], max_len: usize) -> Residue {
        let mut seen: HashSet<Chamber> = HashSet::from([c.clone()]);
        let mut queue = VecDeque::from([c.clone()]);
        let mut truncated = c.len() > max_len;
        while let Some(x) = queue.pop_front() {
            for &s in j {
                for y in self.panel(&x, s).members {
                    if y.len() > max_len {
                        truncated = true;
                        continue;
                    }
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut chambers: Vec<Chamber> = seen.into_iter().filter(|x| x.len() <= max_len).collect();
        chambers.sort_by(|a, b| a.key().cmp(&b.key()));
        Residue { chambers, truncated }
    }

    /// The `s`-tree-wall carrying the `s`-panel of `c`.
    pub fn tree_wall(&self, c: &Chamber, s: Gen) -> TreeWallId {
        let mut j = self.perp(s);
        j.push(s);
        TreeWallId {
            gen: s,
            gate: self.residue_gate(c, &j),
        }
    }

    /// Closing squares upward: `c1, c2` at level `n`, `c3` at level `n+1`,
    /// `c1 ~t c3`, `c2 ~s c3`. Returns the `c4` at level `n-1` with `c1 ~s c4`, `c2 ~t c4`.
    pub fn close_square_up(&self, c1: &Chamber, c2: &Chamber, c3: &Chamber) -> Result<Chamber> {
        let n = c1.len();
        if c2.len() != n || c3.len() != n + 1 {
            return Err(Error::Precondition("levels must be n, n, n+1".into()));
        }
        let t = self
            .adjacency_type(c1, c3)
            .ok_or_else(|| Error::Precondition("c1 and c3 are not adjacent".into()))?;
        let s = self
            .adjacency_type(c2, c3)
            .ok_or_else(|| Error::Precondition("c2 and c3 are not adjacent".into()))?;
        if s == t {
            return Err(Error::Precondition("adjacency types must differ".into()));
        }
        self.square_corner(c1, c2, s, t)
    }

    /// Closing squares on a level: `c1 ~s c2` at level `n`, `c2 ~t c3` with `c3` at level `n-1`.
    /// Returns the `c4` at level `n-1` with `c1 ~t c4`, `c3 ~s c4`.
    pub fn close_square_level(&self, c1: &Chamber, c2: &Chamber, c3: &Chamber) -> Result<Chamber> {
        let n = c1.len();
        if c2.len() != n || n == 0 || c3.len() != n - 1 {
            return Err(Error::Precondition("levels must be n, n, n-1".into()));
        }
        let s = self
            .adjacency_type(c1, c2)
            .ok_or_else(|| Error::Precondition("c1 and c2 are not adjacent".into()))?;
        let t = self
            .adjacency_type(c2, c3)
            .ok_or_else(|| Error::Precondition("c2 and c3 are not adjacent".into()))?;
        if s == t {
            return Err(Error::Precondition("adjacency types must differ".into()));
        }
        self.square_corner(c1, c3, t, s)
    }

    /// The chamber one step below `a` across its `x`-panel, checked to be `y`-adjacent to `b`.
    fn square_corner(&self, a: &Chamber, b: &Chamber, x: Gen, y: Gen) -> Result<Chamber> {
        if !self.commute(x, y) {
            return Err(Error::Precondition(format!(
                "{} and {} do not commute",
                self.name(x),
                self.name(y)
            )));
        }
        let k = self
            .terminal_position(a, x)
            .ok_or_else(|| Error::Precondition("no descending panel".into()))?;
        let c4 = self.drop_letter(a, k);
        if self.adjacency_type(&c4, b) != Some(y) {
            return Err(Error::Precondition("square does not close".into()));
        }
        Ok(c4)
    }

    /// `"[s t|2 3]"`; the base chamber is `"[]"`.
    pub fn format_chamber(&self, c: &Chamber) -> String {
        if c.is_empty() {
            return "[]".into();
        }
        let colors: Vec<String> = c.colors.iter().map(|a| a.to_string()).collect();
        format!("[{}|{}]", self.format_word(&c.word), colors.join(" "))
    }

    /// Accepts `"s t|2 3"` with optional brackets; `""` and `"[]"` are the base chamber.
    pub fn parse_chamber(&self, text: &str) -> Result<Chamber> {
        let text = text.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if text.is_empty() {
            return Ok(Chamber::base());
        }
        let (w, a) = text
            .split_once('|')
            .ok_or_else(|| Error::Precondition(format!("chamber `{text}` lacks `|`")))?;
        let word = self.parse_word(w)?;
        let colors = a
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<usize>()
                    .map_err(|_| Error::Precondition(format!("bad color `{x}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.canonical_chamber(&word, &colors)
    }
}

/// An `s`-panel lying entirely in a ball; `members[0]` is its gate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallPanel {
    pub gen: Gen,
    pub members: Vec<usize>,
}

/// All chambers of word length at most `radius`, indexed by (length, word, colors).
#[derive(Clone, Debug)]
pub struct Ball {
    radius: usize,
    chambers: Vec<Chamber>,
    index: HashMap<Chamber, usize>,
    sphere_start: Vec<usize>,
    panels: Vec<BallPanel>,
    panel_of: Vec<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BallStats {
    pub radius: usize,
    pub chambers: usize,
    pub sphere_sizes: Vec<usize>,
    pub panels: usize,
    pub edges: usize,
}

impl Ball {
    pub fn build(d: &CoxeterDiagram, radius: usize, caps: &Caps) -> Result<Ball> {
        if radius > caps.radius {
            return Err(Error::cap(format!("radius {radius}"), caps.radius));
        }
        let mut layers = Vec::new();
        let mut total = 0usize;
        for n in 0..=radius {
            let words = d.elements_of_length(n);
            for w in &words {
                let count: usize = w.0.iter().map(|&s| d.thickness(s) - 1).product();
                total = total.saturating_add(count);
            }
            if total > caps.ball_size {
                return Err(Error::cap(format!("ball of radius {radius}"), caps.ball_size));
            }
            layers.push(words);
        }

        let mut chambers = Vec::with_capacity(total);
        let mut sphere_start = Vec::with_capacity(radius + 2);
        for words in &layers {
            sphere_start.push(chambers.len());
            for w in words {
                for colors in color_tuples(d, w) {
                    chambers.push(Chamber {
                        word: w.clone(),
                        colors,
                    });
                }
            }
        }
        sphere_start.push(chambers.len());
        let index: HashMap<Chamber, usize> =
            chambers.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();

        let rank = d.rank();
        let mut panels = Vec::new();
        let mut panel_of = vec![vec![None; rank]; chambers.len()];
        for (i, c) in chambers.iter().enumerate() {
            if c.len() >= radius {
                continue;
            }
            for s in d.generators() {
                if d.has_descent(&c.word, s) {
                    continue;
                }
                let members: Vec<usize> = d.panel(c, s).members.iter().map(|m| index[m]).collect();
                debug_assert_eq!(members[0], i);
                for &m in &members {
                    panel_of[m][s] = Some(panels.len());
                }
                panels.push(BallPanel { gen: s, members });
            }
        }
        Ok(Ball {
            radius,
            chambers,
            index,
            sphere_start,
            panels,
            panel_of,
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber(&self, i: usize) -> &Chamber {
        &self.chambers[i]
    }

    pub fn index_of(&self, c: &Chamber) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn require(&self, d: &CoxeterDiagram, c: &Chamber) -> Result<usize> {
        self.index_of(c)
            .ok_or_else(|| Error::NotInBall(d.format_chamber(c)))
    }

    /// Index range of the sphere of radius `n`.
    pub fn sphere(&self, n: usize) -> std::ops::Range<usize> {
        self.sphere_start[n]..self.sphere_start[n + 1]
    }

    /// Index range of the ball of radius `n <= radius`.
    pub fn sub_ball(&self, n: usize) -> std::ops::Range<usize> {
        0..self.sphere_start[n + 1]
    }

    pub fn level(&self, i: usize) -> usize {
        self.chambers[i].len()
    }

    pub fn panels(&self) -> &[BallPanel] {
        &self.panels
    }

    /// The `s`-panel of chamber `i`, when it lies in the ball.
    pub fn panel_of(&self, i: usize, s: Gen) -> Option<&BallPanel> {
        self.panel_of[i][s].map(|p| &self.panels[p])
    }

    pub fn panel_index(&self, i: usize, s: Gen) -> Option<usize> {
        self.panel_of[i][s]
    }

    /// Neighbours of `i` with the adjacency type.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = (usize, Gen)> + '_ {
        self.panel_of[i]
            .iter()
            .flatten()
            .flat_map(move |&p| {
                let panel = &self.panels[p];
                panel.members.iter().filter(move |&&m| m != i).map(move |&m| (m, panel.gen))
            })
    }

    pub fn adjacency_type(&self, i: usize, j: usize) -> Option<Gen> {
        self.neighbours(i).find(|&(m, _)| m == j).map(|(_, s)| s)
    }

    /// Gallery distances from `i` to every chamber, computed inside the ball.
    pub fn distances_from(&self, i: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[i] = 0;
        let mut queue = VecDeque::from([i]);
        while let Some(x) = queue.pop_front() {
            for (y, _) in self.neighbours(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance_table(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|i| self.distances_from(i)).collect()
    }

    pub fn distance(&self, i: usize, j: usize) -> usize {
        self.distances_from(i)[j]
    }

    /// One minimal gallery from `i` to `j`, both endpoints included.
    pub fn geodesic(&self, i: usize, j: usize) -> Vec<usize> {
        let dist = self.distances_from(j);
        let mut path = vec![i];
        let mut x = i;
        while x != j {
            x = self
                .neighbours(x)
                .map(|(y, _)| y)
                .filter(|&y| dist[y] + 1 == dist[x])
                .min()
                .expect("the ball is connected");
            path.push(x);
        }
        path
    }

    /// Reduced product of the edge types along a minimal gallery.
    pub fn weyl_distance(&self, d: &CoxeterDiagram, i: usize, j: usize) -> Word {
        let path = self.geodesic(i, j);
        let letters: Vec<Gen> = path
            .windows(2)
            .map(|e| self.adjacency_type(e[0], e[1]).expect("consecutive chambers"))
            .collect();
        d.reduce(&Word(letters)).expect("generators of d")
    }

    /// The member of panel `p` closest to chamber `c`.
    pub fn project_to_panel(&self, p: usize, c: usize) -> usize {
        let dist = self.distances_from(c);
        self.project_with(p, &dist)
    }

    pub fn project_with(&self, p: usize, dist_from_c: &[usize]) -> usize {
        *self.panels[p]
            .members
            .iter()
            .min_by_key(|&&m| dist_from_c[m])
            .expect("panels are nonempty")
    }

    /// Member of the reference panel (the `s`-panel of the gate) whose wing contains `x`.
    pub fn wing_of(&self, d: &CoxeterDiagram, tw: &TreeWallId, x: usize) -> Result<usize> {
        let gate = self.require(d, &tw.gate)?;
        let p = self
            .panel_index(gate, tw.gen)
            .ok_or_else(|| Error::NotInBall(format!("{}-panel of {}", d.name(tw.gen), d.format_chamber(&tw.gate))))?;
        Ok(self.project_to_panel(p, x))
    }

    /// Minimal gallery from `i` to `j` whose heights go down, then stay level, then go up.
    pub fn concave_gallery(&self, d: &CoxeterDiagram, i: usize, j: usize) -> Vec<usize> {
        self.make_concave(d, self.geodesic(i, j))
    }

    /// Rewrites a minimal gallery by closing squares until it is concave.
    pub fn make_concave(&self, d: &CoxeterDiagram, mut g: Vec<usize>) -> Vec<usize> {
        while let Some(next) = self.concave_step(d, &g) {
            g = next;
        }
        g
    }

    /// Closes the first square found in a non-concave minimal gallery, lowering one chamber.
    pub fn concave_step(&self, d: &CoxeterDiagram, g: &[usize]) -> Option<Vec<usize>> {
        for k in 1..g.len().saturating_sub(1) {
            let (a, b, c) = (g[k - 1], g[k], g[k + 1]);
            let (ha, hb, hc) = (self.level(a), self.level(b), self.level(c));
            let ch = |i: usize| &self.chambers[i];
            let replacement = if hb == ha + 1 && hc == ha {
                d.close_square_up(ch(a), ch(c), ch(b))
            } else if hb == ha + 1 && hc == hb {
                d.close_square_level(ch(c), ch(b), ch(a))
            } else if ha == hb && hc + 1 == hb {
                d.close_square_level(ch(a), ch(b), ch(c))
            } else {
                continue;
            };
            let c4 = replacement.expect("closing squares applies inside minimal galleries");
            let mut out = g.to_vec();
            out[k] = self.index[&c4];
            return Some(out);
        }
        None
    }

    /// Heights strictly decrease, then stay level, then strictly increase.
    pub fn is_concave(&self, g: &[usize]) -> bool {
        let h: Vec<usize> = g.iter().map(|&x| self.level(x)).collect();
        let mut phase = 0;
        for w in h.windows(2) {
            let step = match w[1].cmp(&w[0]) {
                std::cmp::Ordering::Less => 0,
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Greater => 2,
            };
            if step < phase {
                return false;
            }
            phase = step;
        }
        true
    }

    pub fn stats(&self) -> BallStats {
        BallStats {
            radius: self.radius,
            chambers: self.len(),
            sphere_sizes: (0..=self.radius).map(|n| self.sphere(n).len()).collect(),
            panels: self.panels.len(),
            edges: self.edges().len(),
        }
    }

    /// Each adjacency once, as `(i, j, type)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize, Gen)> {
        let mut out = Vec::new();
        for p in &self.panels {
            for (a, &x) in p.members.iter().enumerate() {
                for &y in &p.members[a + 1..] {
                    out.push((x.min(y), x.max(y), p.gen));
                }
            }
        }
        out.sort();
        out
    }

    pub fn to_dot(&self, d: &CoxeterDiagram) -> String {
        let mut out = String::from("graph ball {\n");
        for (i, c) in self.chambers.iter().enumerate() {
            let _ = writeln!(out, "  c{i} [label=\"{}\"];", d.format_chamber(c));
        }
        for (i, j, s) in self.edges() {
            let _ = writeln!(out, "  c{i} -- c{j} [label=\"{}\"];", d.name(s));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, d: &CoxeterDiagram) -> serde_json::Value {
        let chambers: Vec<serde_json::Value> = self
            .chambers
            .iter()
            .enumerate()
            .map(|(i, c)| {
                serde_json::json!({
                    "index": i,
                    "word": c.word.0.iter().map(|&s| d.name(s)).collect::<Vec<_>>(),
                    "colors": c.colors,
                })
            })
            .collect();
        serde_json::json!({ "radius": self.radius, "chambers": chambers })
    }
}

/// All color tuples for `w` in lexicographic order.
pub fn color_tuples(d: &CoxeterDiagram, w: &Word) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in &w.0 {
        let mut next = Vec::with_capacity(out.len() * (d.thickness(s) - 1));
        for prefix in &out {
            for a in 2..=d.thickness(s) {
                let mut v: Vec<usize> = prefix.clone();
                v.push(a);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Bipartite graph on `s`-tree-walls and `(S \ {s})`-residues meeting a ball.
#[derive(Clone, Debug)]
pub struct TreeWallTree {
    pub gen: Gen,
    pub tree_walls: Vec<Chamber>,
    pub residues: Vec<Chamber>,
    /// `(tree-wall index, residue index)`.
    pub edges: Vec<(usize, usize)>,
}

impl TreeWallTree {
    pub fn build(d: &CoxeterDiagram, ball: &Ball, s: Gen) -> TreeWallTree {
        let others: Vec<Gen> = d.generators().filter(|&t| t != s).collect();
        let mut tws = BTreeMap::new();
        let mut res = BTreeMap::new();
        let mut edges = BTreeSet::new();
        for c in ball.chambers() {
            let tw = d.tree_wall(c, s).gate;
            let r = d.residue_gate(c, &others);
            let n = tws.len();
            let a = *tws.entry(tw).or_insert(n);
            let n = res.len();
            let b = *res.entry(r).or_insert(n);
            edges.insert((a, b));
        }
        let mut tree_walls = vec![Chamber::base(); tws.len()];
        for (c, i) in tws {
            tree_walls[i] = c;
        }
        let mut residues = vec![Chamber::base(); res.len()];
        for (c, i) in res {
            residues[i] = c;
        }
        TreeWallTree {
            gen: s,
            tree_walls,
            residues,
            edges: edges.into_iter().collect(),
        }
    }

    fn vertex_count(&self) -> usize {
        self.tree_walls.len() + self.residues.len()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let off = self.tree_walls.len();
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(a, b) in &self.edges {
            adj[a].push(off + b);
            adj[off + b].push(a);
        }
        adj
    }

    fn bfs(&self, from: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs(0).iter().all(|&d| d != usize::MAX)
    }

    /// A connected graph is a tree exactly when it has one edge fewer than vertices.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.vertex_count()
    }

    /// Half the graph distance between two tree-walls given by index.
    pub fn tree_wall_distance(&self, a: usize, b: usize) -> Option<usize> {
        let d = self.bfs(a)[b];
        (d != usize::MAX).then_some(d / 2)
    }

    pub fn to_dot(&self, d: &CoxeterDiagram) -> String {
        let mut out = format!("graph twtree_{} {{\n", d.name(self.gen));
        for (i, c) in self.tree_walls.iter().enumerate() {
            let _ = writeln!(out, "  T{i} [shape=box, label=\"{}\"];", d.format_chamber(c));
        }
        for (i, c) in self.residues.iter().enumerate() {
            let _ = writeln!(out, "  R{i} [shape=ellipse, label=\"{}\"];", d.format_chamber(c));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  T{a} -- R{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{d1, d2, d3};

    fn ch(d: &CoxeterDiagram, s: &str) -> Chamber {
        d.parse_chamber(s).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let d = d3();
        let c = d.canonical_chamber(&d.parse_word("t s").unwrap(), &[3, 2]).unwrap();
        assert_eq!(d.format_chamber(&c), "[s t|2 3]");
        let d1 = d1();
        assert_eq!(d1.format_chamber(&ch(&d1, "s t|2 2")), "[s t|2 2]");
        assert_eq!(ch(&d1, ""), Chamber::base());
        assert!(matches!(
            d1.canonical_chamber(&d1.parse_word("s").unwrap(), &[4]),
            Err(Error::ColorOutOfRange { .. })
        ));
        assert!(matches!(
            d1.canonical_chamber(&d1.parse_word("s s").unwrap(), &[2, 2]),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn panel_examples() {
        let d = d1();
        let p = d.panel(&Chamber::base(), 0);
        assert_eq!(p.members, vec![ch(&d, ""), ch(&d, "s|2"), ch(&d, "s|3")]);
        assert_eq!(d.panel(&ch(&d, "s|2"), 0), p);
        let p = d.panel(&ch(&d, "s|2"), 1);
        assert_eq!(p.members, vec![ch(&d, "s|2"), ch(&d, "s t|2 2"), ch(&d, "s t|2 3")]);
    }

    #[test]
    fn standard_color_examples() {
        let d = d1();
        assert_eq!(d.standard_color(&ch(&d, "s|2"), 0), 2);
        assert_eq!(d.standard_color(&ch(&d, "s|2"), 1), 1);
        assert_eq!(d.standard_color(&Chamber::base(), 0), 1);
        // the standard coloring is a bijection on every panel
        let d = d3();
        let c = ch(&d, "s u t|3 2 2");
        for s in d.generators() {
            let p = d.panel(&c, s);
            let colors: Vec<usize> = p.members.iter().map(|m| d.standard_color(m, s)).collect();
            assert_eq!(colors, vec![1, 2, 3]);
        }
    }

    #[test]
    fn distance_examples() {
        let d = d1();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        let i = |s: &str| ball.index_of(&ch(&d, s)).unwrap();
        assert_eq!(d.format_word(&ball.weyl_distance(&d, i("s|2"), i("s|3"))), "s");
        assert_eq!(ball.distance(i("s|2"), i("t|2")), 2);
        assert_eq!(d.format_word(&ball.weyl_distance(&d, i("s|2"), i("t|2"))), "s t");
        assert_eq!(ball.weyl_distance(&d, i("s|2"), i("s|2")), Word::empty());
    }

    #[test]
    fn projection_examples() {
        let d = d1();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        let i = |s: &str| ball.index_of(&ch(&d, s)).unwrap();
        let p = ball.panel_index(0, 0).unwrap();
        assert_eq!(ball.project_to_panel(p, i("s t|2 2")), i("s|2"));
        assert_eq!(ball.project_to_panel(p, 0), 0);
        let d = d2();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        let p = ball.panel_index(0, 0).unwrap();
        let t2 = ball.index_of(&ch(&d, "t|2")).unwrap();
        assert_eq!(ball.project_to_panel(p, t2), 0);
    }

    #[test]
    fn residue_examples() {
        let d = d3();
        let r = d.residue(&Chamber::base(), &[0, 1], 4);
        assert_eq!(r.chambers.len(), 9);
        assert!(!r.truncated);
        let c = ch(&d, "s u|2 3");
        assert_eq!(d.residue(&c, &[], 4).chambers, vec![c]);
        let d = d1();
        let r = d.residue(&Chamber::base(), &[0], 3);
        assert_eq!(r.chambers, d.panel(&Chamber::base(), 0).members);
        assert!(d.residue(&Chamber::base(), &[0, 1], 3).truncated);
    }

    #[test]
    fn tree_wall_examples() {
        let d = d1();
        assert_eq!(d.tree_wall(&ch(&d, "s|2"), 0).gate, Chamber::base());
        assert_eq!(d.tree_wall(&ch(&d, "t|2"), 0).gate, ch(&d, "t|2"));
        let d = d3();
        assert_eq!(d.tree_wall(&Chamber::base(), 0).gate, Chamber::base());
        assert_eq!(d.tree_wall(&ch(&d, "t s|2 2"), 0).gate, Chamber::base());
        assert_eq!(d.tree_wall(&ch(&d, "u s|2 2"), 0).gate, ch(&d, "u|2"));
    }

    #[test]
    fn gate_matches_residue_search() {
        for d in [d1(), d2(), d3()] {
            let ball = Ball::build(&d, 3, &Caps::default()).unwrap();
            for c in ball.chambers() {
                for s in d.generators() {
                    let mut j = d.perp(s);
                    j.push(s);
                    let r = d.residue(c, &j, c.len());
                    let nearest = r.chambers.iter().min_by_key(|x| x.len()).unwrap();
                    assert_eq!(&d.tree_wall(c, s).gate, nearest);
                }
            }
        }
    }

    #[test]
    fn wing_examples() {
        let d = d1();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        let i = |s: &str| ball.index_of(&ch(&d, s)).unwrap();
        let tw = d.tree_wall(&Chamber::base(), 0);
        assert_eq!(ball.wing_of(&d, &tw, i("s t|2 2")).unwrap(), i("s|2"));
        assert_eq!(ball.wing_of(&d, &tw, i("t|3")).unwrap(), 0);
        assert_eq!(ball.wing_of(&d, &tw, i("s|3")).unwrap(), i("s|3"));
    }

    #[test]
    fn closing_square_examples() {
        let d = d2();
        let c4 = d
            .close_square_up(&ch(&d, "s|2"), &ch(&d, "t|2"), &ch(&d, "s t|2 2"))
            .unwrap();
        assert_eq!(c4, Chamber::base());
        assert!(d
            .close_square_level(&ch(&d, "s|2"), &ch(&d, "s|3"), &Chamber::base())
            .is_err());
        assert!(d
            .close_square_level(&ch(&d, "s t|2 2"), &ch(&d, "s t|2 3"), &ch(&d, "t|2"))
            .is_err());
        let c4 = d
            .close_square_level(&ch(&d, "s t|2 2"), &ch(&d, "s t|3 2"), &ch(&d, "s|3"))
            .unwrap();
        assert_eq!(c4, ch(&d, "s|2"));
    }

    #[test]
    fn concave_examples() {
        let d = d2();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        let i = |s: &str| ball.index_of(&ch(&d, s)).unwrap();
        let g = ball.make_concave(&d, vec![i("s|2"), i("s t|2 2"), i("t|2")]);
        assert_eq!(g, vec![i("s|2"), 0, i("t|2")]);
        assert_eq!(ball.concave_gallery(&d, 3, 3), vec![3]);
        let d = d1();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        let i = |s: &str| ball.index_of(&ch(&d, s)).unwrap();
        assert_eq!(ball.concave_gallery(&d, i("s|2"), i("s t|2 2")), vec![i("s|2"), i("s t|2 2")]);
    }

    #[test]
    fn tree_wall_tree_examples() {
        let d = d1();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        let t = TreeWallTree::build(&d, &ball, 0);
        assert!(t.is_tree());
        assert_eq!(t.tree_wall_distance(0, 0), Some(0));
        let d = d2();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        let t = TreeWallTree::build(&d, &ball, 0);
        assert_eq!(t.tree_walls.len(), 1);
        assert_eq!(t.residues.len(), 3);
        assert!(t.is_tree());
        assert!(t.to_dot(&d).contains("shape=box"));
    }

    #[test]
    fn ball_indexing_and_counts() {
        let d = d1();
        let ball = Ball::build(&d, 2, &Caps::default()).unwrap();
        assert_eq!(ball.stats().sphere_sizes, vec![1, 4, 8]);
        for w in ball.chambers().windows(2) {
            assert!(w[0].key() < w[1].key());
        }
        assert!(Ball::build(&d, 7, &Caps::default()).is_err());
        let tiny = Caps { ball_size: 10, ..Caps::default() };
        assert!(matches!(Ball::build(&d, 3, &tiny), Err(Error::CapExceeded { .. })));
    }
}
