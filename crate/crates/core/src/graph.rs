//! Simple undirected graphs keyed by provenance-tagged vertex labels.
//!
//! A [`Graph`] is immutable once built. Vertices are stored in sorted label
//! order and addressed internally by their position in that order, so every
//! traversal, emitted edge list and report is deterministic.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identity of a vertex, recording where it came from.
///
/// Endpoint pairs are stored as rendered tokens of the endpoint labels, in
/// lexicographic order. Use the constructors rather than building variants
/// by hand so the ordering holds.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexLabel {
    Original(String),
    SubdivisionOf(String, String),
    EdgeVertex(String, String),
    CutCopy(String),
}

const RESERVED: &[char] = &['(', ')', ',', ':', '#', '"'];

fn ordered(a: String, b: String) -> (String, String) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl VertexLabel {
    /// A plain vertex name. Names must be non-empty and free of whitespace
    /// and of the characters `( ) , : # "`.
    pub fn original(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        validate_name(&name)?;
        Ok(VertexLabel::Original(name))
    }

    /// The vertex placed on edge `{a, b}` by subdivision.
    pub fn subdivision_of(a: &VertexLabel, b: &VertexLabel) -> Self {
        let (a, b) = ordered(a.token(), b.token());
        VertexLabel::SubdivisionOf(a, b)
    }

    /// The line-graph vertex standing for edge `{a, b}`.
    pub fn edge_vertex(a: &VertexLabel, b: &VertexLabel) -> Self {
        let (a, b) = ordered(a.token(), b.token());
        VertexLabel::EdgeVertex(a, b)
    }

    /// The copy of cut-vertex `v` added by the line cut-vertex operator.
    pub fn cut_copy(v: &VertexLabel) -> Self {
        VertexLabel::CutCopy(v.token())
    }

    /// Rendered token: `name`, `s(a,b)`, `e(a,b)` or `cut(v)`.
    pub fn token(&self) -> String {
        match self {
            VertexLabel::Original(name) => name.clone(),
            VertexLabel::SubdivisionOf(a, b) => format!("s({a},{b})"),
            VertexLabel::EdgeVertex(a, b) => format!("e({a},{b})"),
            VertexLabel::CutCopy(v) => format!("cut({v})"),
        }
    }

    /// Parses a rendered token back into a label. Endpoint pairs are
    /// canonicalised, so `e(b,a)` and `e(a,b)` parse to the same label.
    pub fn parse(token: &str) -> Result<Self> {
        let invalid = |reason| Error::InvalidLabel {
            token: token.to_string(),
            reason,
        };
        if token.is_empty() {
            return Err(invalid("empty token"));
        }
        if token.chars().any(char::is_whitespace) {
            return Err(invalid("contains whitespace"));
        }
        let Some(open) = token.find('(') else {
            return VertexLabel::original(token);
        };
        let Some(inner) = token[open + 1..].strip_suffix(')') else {
            return Err(invalid("unbalanced parentheses"));
        };
        let args = split_top_level(inner).ok_or_else(|| invalid("unbalanced parentheses"))?;
        for arg in &args {
            VertexLabel::parse(arg)?;
        }
        let args: Vec<String> = args.into_iter().map(str::to_string).collect();
        match (&token[..open], args.as_slice()) {
            ("s", [a, b]) => {
                let (a, b) = ordered(a.clone(), b.clone());
                Ok(VertexLabel::SubdivisionOf(a, b))
            }
            ("e", [a, b]) => {
                let (a, b) = ordered(a.clone(), b.clone());
                Ok(VertexLabel::EdgeVertex(a, b))
            }
            ("cut", [v]) => Ok(VertexLabel::CutCopy(v.clone())),
            _ => Err(invalid("unknown constructor or wrong arity")),
        }
    }

    /// True when endpoint pairs are in canonical order and every embedded
    /// token is itself well formed.
    pub fn is_canonical(&self) -> bool {
        match self {
            VertexLabel::Original(name) => validate_name(name).is_ok(),
            VertexLabel::SubdivisionOf(a, b) | VertexLabel::EdgeVertex(a, b) => {
                a <= b && VertexLabel::parse(a).is_ok() && VertexLabel::parse(b).is_ok()
            }
            VertexLabel::CutCopy(v) => VertexLabel::parse(v).is_ok(),
        }
    }
}

fn validate_name(name: &str) -> Result<()> {
    let invalid = |reason| Error::InvalidLabel {
        token: name.to_string(),
        reason,
    };
    if name.is_empty() {
        return Err(invalid("empty token"));
    }
    if name.chars().any(char::is_whitespace) {
        return Err(invalid("contains whitespace"));
    }
    if name.contains(RESERVED) {
        return Err(invalid("contains a reserved character"));
    }
    Ok(())
}

/// Splits on commas at parenthesis depth zero.
fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Accumulates vertices and edges, rejecting anything that would make the
/// graph non-simple.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    adjacency: BTreeMap<VertexLabel, BTreeSet<VertexLabel>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex; adding an existing vertex is a no-op.
    pub fn add_vertex(&mut self, v: VertexLabel) -> &mut Self {
        self.adjacency.entry(v).or_default();
        self
    }

    pub fn add_edge(&mut self, a: VertexLabel, b: VertexLabel) -> Result<&mut Self> {
        if a == b {
            return Err(Error::SelfLoop(a.token()));
        }
        if self.adjacency.get(&a).is_some_and(|n| n.contains(&b)) {
            return Err(Error::DuplicateEdge(a.token(), b.token()));
        }
        self.adjacency
            .entry(a.clone())
            .or_default()
            .insert(b.clone());
        self.adjacency.entry(b).or_default().insert(a);
        Ok(self)
    }

    pub fn contains_edge(&self, a: &VertexLabel, b: &VertexLabel) -> bool {
        self.adjacency.get(a).is_some_and(|n| n.contains(b))
    }

    pub fn build(self) -> Graph {
        let labels: Vec<VertexLabel> = self.adjacency.keys().cloned().collect();
        let index: HashMap<VertexLabel, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        // BTreeSet iteration is sorted, and so is `labels`, so every
        // neighbour list comes out ascending.
        let adjacency = self
            .adjacency
            .values()
            .map(|nbrs| nbrs.iter().map(|l| index[l]).collect())
            .collect();
        Graph {
            labels,
            index,
            adjacency,
        }
    }
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Default for Graph {
    fn default() -> Self {
        GraphBuilder::new().build()
    }
}

impl Graph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph of `Original` vertices from name pairs.
    pub fn from_named_edges<'a, I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut b = GraphBuilder::new();
        for (u, v) in edges {
            b.add_edge(VertexLabel::original(u)?, VertexLabel::original(v)?)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Vertices in sorted label order.
    pub fn vertices(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.index.contains_key(v)
    }

    pub fn degree(&self, v: &VertexLabel) -> Result<usize> {
        Ok(self.adjacency[self.position(v)?].len())
    }

    pub fn neighbors(&self, v: &VertexLabel) -> Result<impl Iterator<Item = &VertexLabel> + '_> {
        let i = self.position(v)?;
        Ok(self.adjacency[i].iter().map(|&j| &self.labels[j]))
    }

    pub fn has_edge(&self, a: &VertexLabel, b: &VertexLabel) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.adjacency[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexLabel, &VertexLabel)> + '_ {
        self.index_edges()
            .map(|(i, j)| (&self.labels[i], &self.labels[j]))
    }

    /// Degrees in ascending order (the degree multiset).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    /// Degree value → number of vertices with that degree.
    pub fn degree_distribution(&self) -> BTreeMap<usize, usize> {
        let mut dist = BTreeMap::new();
        for nbrs in &self.adjacency {
            *dist.entry(nbrs.len()).or_insert(0) += 1;
        }
        dist
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for s in 0..self.order() {
            if !seen[s] {
                count += 1;
                self.flood(s, &mut seen);
            }
        }
        count
    }

    /// The empty graph and single vertices count as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Connected with exactly as many edges as vertices. The empty graph has
    /// no cycle and is therefore not unicyclic.
    pub fn is_unicyclic(&self) -> bool {
        self.order() > 0 && self.is_connected() && self.size() == self.order()
    }

    /// Cut vertices, found with one iterative depth-first low-link pass.
    pub fn articulation_points(&self) -> BTreeSet<VertexLabel> {
        let n = self.order();
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;

        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour slot)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
            while let Some(top) = stack.last_mut() {
                let (v, parent, slot) = *top;
                if let Some(&w) = self.adjacency[v].get(slot) {
                    top.2 += 1;
                    if disc[w] == UNSEEN {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }

        (0..n)
            .filter(|&i| is_cut[i])
            .map(|i| self.labels[i].clone())
            .collect()
    }

    /// The subgraph induced by the vertices satisfying `keep`.
    pub fn induced_subgraph(&self, keep: impl Fn(&VertexLabel) -> bool) -> Graph {
        let mut b = GraphBuilder::new();
        for (i, label) in self.labels.iter().enumerate() {
            if !keep(label) {
                continue;
            }
            b.add_vertex(label.clone());
            for &j in &self.adjacency[i] {
                if j > i && keep(&self.labels[j]) {
                    b.add_edge(label.clone(), self.labels[j].clone())
                        .expect("subgraph of a simple graph is simple");
                }
            }
        }
        b.build()
    }

    /// Builder pre-loaded with this graph's vertices and edges.
    pub fn to_builder(&self) -> GraphBuilder {
        let mut b = GraphBuilder::new();
        for v in &self.labels {
            b.add_vertex(v.clone());
        }
        for (u, v) in self.edges() {
            b.add_edge(u.clone(), v.clone())
                .expect("edges of a simple graph are distinct");
        }
        b
    }

    pub(crate) fn position(&self, v: &VertexLabel) -> Result<usize> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(v.token()))
    }

    pub(crate) fn adjacency_lists(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub(crate) fn index_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    fn flood(&self, start: usize, seen: &mut [bool]) {
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
}
