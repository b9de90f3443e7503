//! Vertex-cover reduction strings.
//!
//! For a connected graph with minimum degree 2, on vertices `v_1..v_n` and
//! edges `e_1..e_m`, the gadget string is
//!
//! ```text
//! W = P_1..P_n Q_1..Q_m R_1..R_n S_1..S_m
//! P_i = v_i^3 # v_i^2 $ # v_i $^2 # X_i Y_i
//! X_i = prod over incident e_j of (v_i $ e_j #)
//! Y_i = prod over incident e_j of (e_j^2 v_i #)
//! Q_j = e_j^3 #
//! R_i = v_i^4 $ prod over incident e_j of (e_j^3 v_i^2 $) $ #
//! S_j = $ e_j^3 #
//! ```
//!
//! where every `#` is a fresh symbol. Incident edges are taken in ascending
//! edge index. The greedy parsing of `W` has `13n + 23m` phrases, and the
//! optimum is `13n + 22m + tau(G)`: parsing `R_i` with one extra phrase exposes
//! a phrase end after every `$ e_j^3` in it, which lets each `S_j` of an
//! incident edge drop from three phrases to two.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::greedy::greedy_parse;
use crate::maxsat::{solve, SolverCommand};
use crate::parsing::{validate, Parsing};
use crate::text::{Origin, Symbol, Text};

/// Largest graph accepted by [`brute_force_vertex_cover`].
pub const MAX_BRUTE_FORCE_VERTICES: usize = 20;

/// Simple undirected graph on vertices `1..=n`; edges are numbered from 1 in
/// the order given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        for (k, &(u, v)) in edges.iter().enumerate() {
            let j = k + 1;
            if !(1..=n).contains(&u) || !(1..=n).contains(&v) {
                return Err(Error::InvalidArgument(format!("edge e{j} = {{{u},{v}}} has an endpoint outside 1..={n}")));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("edge e{j} is a self-loop at v{u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidArgument(format!("edge e{j} = {{{u},{v}}} is a duplicate")));
            }
        }
        Ok(Graph { n, edges })
    }

    /// Edge-list format: a line `n m`, then `m` lines `u v` (1-based).
    /// Blank lines and lines starting with `%` are ignored.
    pub fn parse(input: &str) -> Result<Graph> {
        let mut lines = input
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));
        let bad = |line: usize, what: &str| Error::InputFormat(format!("graph line {}: {what}", line + 1));
        let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let nums: Vec<usize> = l
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(line, "expected non-negative integers")))
                .collect::<Result<_>>()?;
            match nums[..] {
                [a, b] => Ok((a, b)),
                _ => Err(bad(line, "expected exactly two integers")),
            }
        };
        let (line, header) = lines.next().ok_or_else(|| Error::InputFormat("empty graph file".into()))?;
        let (n, m) = pair(line, header)?;
        let edges = lines.map(|(line, l)| pair(line, l)).collect::<Result<Vec<_>>>()?;
        if edges.len() != m {
            return Err(Error::InputFormat(format!("header announces {m} edges, found {}", edges.len())));
        }
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges = (1..=n).map(|u| (u, u % n + 1)).collect();
        Graph { n, edges }
    }

    /// The triangle with e1 = {v1,v2}, e2 = {v2,v3}, e3 = {v1,v3}.
    pub fn triangle() -> Graph {
        Graph { n: 3, edges: vec![(1, 2), (2, 3), (1, 3)] }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `j` (1-based).
    pub fn edge(&self, j: usize) -> (usize, usize) {
        self.edges[j - 1]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Indices of the edges incident to `v`, ascending.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (1..=self.edges.len())
            .filter(|&j| {
                let (a, b) = self.edge(j);
                a == v || b == v
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).len()
    }

    /// Connected with every degree at least 2.
    pub fn check_reduction_preconditions(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ReductionPrecondition("graph has no vertices".into()));
        }
        if let Some(v) = (1..=self.n).find(|&v| self.degree(v) < 2) {
            return Err(Error::ReductionPrecondition(format!(
                "vertex v{v} has degree {}, at least 2 required",
                self.degree(v)
            )));
        }
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = (1..=self.n).find(|&v| !seen[v]) {
            return Err(Error::ReductionPrecondition(format!(
                "graph is disconnected: v{v} is not reachable from v1"
            )));
        }
        Ok(())
    }

    pub fn is_cover(&self, cover: &VertexCover) -> bool {
        self.first_uncovered(cover).is_none()
    }

    fn first_uncovered(&self, cover: &VertexCover) -> Option<usize> {
        (1..=self.edges.len()).find(|&j| {
            let (u, v) = self.edge(j);
            !cover.contains(u) && !cover.contains(v)
        })
    }
}

/// A set of vertices (1-based); a vertex cover when every edge has an endpoint in it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexCover(BTreeSet<usize>);

impl VertexCover {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> VertexCover {
        VertexCover(vertices.into_iter().collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    fn insert(&mut self, v: usize) {
        self.0.insert(v);
    }
}

impl FromStr for VertexCover {
    type Err = Error;

    /// Comma-separated vertices, optionally prefixed with `v`: `1,3` or `v1,v3`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim_start_matches('v')
                    .parse::<usize>()
                    .map_err(|_| Error::InputFormat(format!("bad vertex `{t}` in cover list")))
            })
            .collect::<Result<BTreeSet<_>>>()
            .map(VertexCover)
    }
}

impl fmt::Display for VertexCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.0.iter().map(|v| format!("v{v}")).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Role of a gadget symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Vertex(usize),
    Edge(usize),
    Dollar,
    /// The `k`-th unique separator, numbered left to right.
    Hash(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Vertex(i) => write!(f, "v{i}"),
            Role::Edge(j) => write!(f, "e{j}"),
            Role::Dollar => write!(f, "$"),
            Role::Hash(k) => write!(f, "#{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    P,
    Q,
    R,
    S,
    X,
    Y,
}

/// A labelled span `start..=end` of the gadget string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub index: usize,
    pub start: usize,
    pub end: usize,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end < self.start
    }

    pub fn label(&self) -> String {
        format!("{:?}{}", self.kind, self.index)
    }
}

#[derive(Debug, Clone)]
pub struct GadgetString {
    pub text: Text,
    /// Role of each symbol id.
    pub roles: Vec<Role>,
    /// `P_1..P_n, Q_1..Q_m, R_1..R_n, S_1..S_m`, in text order.
    pub segments: Vec<Segment>,
    /// `X_i` and `Y_i` inside each `P_i`.
    pub sub_spans: Vec<Segment>,
    n: usize,
    m: usize,
}

impl GadgetString {
    pub fn segment(&self, kind: SegmentKind, index: usize) -> &Segment {
        let base = match kind {
            SegmentKind::P => 0,
            SegmentKind::Q => self.n,
            SegmentKind::R => self.n + self.m,
            SegmentKind::S => 2 * self.n + self.m,
            SegmentKind::X | SegmentKind::Y => {
                let k = 2 * (index - 1) + usize::from(kind == SegmentKind::Y);
                return &self.sub_spans[k];
            }
        };
        &self.segments[base + index - 1]
    }

    /// Legend file: one `id label` line per symbol.
    pub fn legend(&self) -> String {
        self.roles
            .iter()
            .enumerate()
            .map(|(id, role)| format!("{id} {role}\n"))
            .collect()
    }

    /// Segment table: `label start end` per segment, 1-based inclusive,
    /// top-level segments first, then the `X`/`Y` spans.
    pub fn segment_table(&self) -> String {
        self.segments
            .iter()
            .chain(&self.sub_spans)
            .map(|s| format!("{} {} {}\n", s.label(), s.start, s.end))
            .collect()
    }

    /// Counts the phrases inside each top-level segment.
    ///
    /// Every segment ends with a unique separator, so a valid parsing never
    /// has a phrase spanning two segments; such a phrase is reported as a
    /// segment-alignment error.
    pub fn segment_counts(&self, parsing: &Parsing) -> Result<SegmentCounts> {
        let mut counts = vec![0usize; self.segments.len()];
        let mut seg = 0;
        for phrase in parsing.phrases() {
            while seg < self.segments.len() && self.segments[seg].end < phrase.start {
                seg += 1;
            }
            let Some(s) = self.segments.get(seg) else {
                return Err(Error::SegmentAlignment(format!("phrase at {} lies past the gadget", phrase.start)));
            };
            if phrase.end() > s.end {
                return Err(Error::SegmentAlignment(format!(
                    "phrase {}..={} crosses the end of {} at {}",
                    phrase.start,
                    phrase.end(),
                    s.label(),
                    s.end
                )));
            }
            counts[seg] += 1;
        }
        let (n, m) = (self.n, self.m);
        Ok(SegmentCounts {
            p: counts[..n].to_vec(),
            q: counts[n..n + m].to_vec(),
            r: counts[n + m..2 * n + m].to_vec(),
            s: counts[2 * n + m..].to_vec(),
        })
    }
}

/// Phrases per segment, indexed from 0 (`p[0]` is `P_1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentCounts {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub r: Vec<usize>,
    pub s: Vec<usize>,
}

impl SegmentCounts {
    pub fn total(&self) -> usize {
        [&self.p, &self.q, &self.r, &self.s].iter().map(|v| v.iter().sum::<usize>()).sum()
    }
}

pub fn build_gadget(g: &Graph) -> Result<GadgetString> {
    g.check_reduction_preconditions()?;
    let (n, m) = (g.num_vertices(), g.num_edges());
    let incident: Vec<Vec<usize>> = (1..=n).map(|i| g.incident(i)).collect();

    let mut seq: Vec<Role> = Vec::with_capacity(19 * n + 37 * m);
    let mut hashes = 0;
    let mut hash = |seq: &mut Vec<Role>| {
        hashes += 1;
        seq.push(Role::Hash(hashes));
    };
    let rep = |seq: &mut Vec<Role>, role: Role, k: usize| seq.extend(std::iter::repeat_n(role, k));
    let mut segments = Vec::with_capacity(2 * (n + m));
    let mut sub_spans = Vec::with_capacity(2 * n);
    let span = |kind, index, start: usize, seq: &Vec<Role>| Segment { kind, index, start, end: seq.len() };
    use Role::{Dollar, Edge, Vertex};

    for i in 1..=n {
        let start = seq.len() + 1;
        let v = Vertex(i);
        rep(&mut seq, v, 3);
        hash(&mut seq);
        rep(&mut seq, v, 2);
        seq.push(Dollar);
        hash(&mut seq);
        seq.push(v);
        rep(&mut seq, Dollar, 2);
        hash(&mut seq);
        let x_start = seq.len() + 1;
        for &j in &incident[i - 1] {
            seq.extend([v, Dollar, Edge(j)]);
            hash(&mut seq);
        }
        sub_spans.push(span(SegmentKind::X, i, x_start, &seq));
        let y_start = seq.len() + 1;
        for &j in &incident[i - 1] {
            seq.extend([Edge(j), Edge(j), v]);
            hash(&mut seq);
        }
        sub_spans.push(span(SegmentKind::Y, i, y_start, &seq));
        segments.push(span(SegmentKind::P, i, start, &seq));
    }
    for j in 1..=m {
        let start = seq.len() + 1;
        rep(&mut seq, Edge(j), 3);
        hash(&mut seq);
        segments.push(span(SegmentKind::Q, j, start, &seq));
    }
    for i in 1..=n {
        let start = seq.len() + 1;
        let v = Vertex(i);
        rep(&mut seq, v, 4);
        seq.push(Dollar);
        for &j in &incident[i - 1] {
            rep(&mut seq, Edge(j), 3);
            rep(&mut seq, v, 2);
            seq.push(Dollar);
        }
        seq.push(Dollar);
        hash(&mut seq);
        segments.push(span(SegmentKind::R, i, start, &seq));
    }
    for j in 1..=m {
        let start = seq.len() + 1;
        seq.push(Dollar);
        rep(&mut seq, Edge(j), 3);
        hash(&mut seq);
        segments.push(span(SegmentKind::S, j, start, &seq));
    }

    let mut ids: HashMap<Role, Symbol> = HashMap::new();
    let mut roles = Vec::new();
    let symbols: Vec<Symbol> = seq
        .iter()
        .map(|&role| {
            *ids.entry(role).or_insert_with(|| {
                roles.push(role);
                roles.len() as Symbol - 1
            })
        })
        .collect();
    let labels = roles.iter().map(Role::to_string).collect();
    let text = Text::from_canonical(symbols, labels, Origin::Gadget);
    Ok(GadgetString { text, roles, segments, sub_spans, n, m })
}

/// Closed-form phrase counts of the greedy parsing.
pub fn expected_greedy_total(g: &Graph) -> usize {
    13 * g.num_vertices() + 23 * g.num_edges()
}

/// Size of the witness parsing for a cover of size `k`.
pub fn expected_witness_size(g: &Graph, k: usize) -> usize {
    13 * g.num_vertices() + 22 * g.num_edges() + k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyCounts {
    pub counts: SegmentCounts,
    pub p_part: usize,
    pub q_part: usize,
    pub total: usize,
}

/// Runs the greedy parser on the gadget and checks every per-segment count
/// against its closed form: `10n + 13m` in the `P` part, `3m` in the `Q`
/// part, `2 deg(v_i) + 3` in each `R_i`, 3 in each `S_j`.
pub fn greedy_counts(g: &Graph) -> Result<GreedyCounts> {
    let gadget = build_gadget(g)?;
    let parsing = greedy_parse(&gadget.text);
    greedy_counts_of(g, &gadget, &parsing)
}

fn greedy_counts_of(g: &Graph, gadget: &GadgetString, parsing: &Parsing) -> Result<GreedyCounts> {
    let (n, m) = (g.num_vertices(), g.num_edges());
    let counts = gadget.segment_counts(parsing)?;
    let p_part: usize = counts.p.iter().sum();
    let q_part: usize = counts.q.iter().sum();
    let total = counts.total();
    let mismatch = |what: String, got: usize, want: usize| {
        Err(Error::ReductionIntegrity(format!("greedy {what}: {got} phrases, expected {want}")))
    };
    if p_part != 10 * n + 13 * m {
        return mismatch("P part".into(), p_part, 10 * n + 13 * m);
    }
    if q_part != 3 * m {
        return mismatch("Q part".into(), q_part, 3 * m);
    }
    for i in 1..=n {
        let want = 2 * g.degree(i) + 3;
        if counts.r[i - 1] != want {
            return mismatch(format!("R{i}"), counts.r[i - 1], want);
        }
    }
    for j in 1..=m {
        if counts.s[j - 1] != 3 {
            return mismatch(format!("S{j}"), counts.s[j - 1], 3);
        }
    }
    if total != expected_greedy_total(g) {
        return mismatch("total".into(), total, expected_greedy_total(g));
    }
    Ok(GreedyCounts { counts, p_part, q_part, total })
}

/// The parsing that keeps the greedy phrases on the `P` and `Q` parts, parses
/// `R_i` with the extra phrase for each vertex in `chosen`, parses `S_j` as
/// `[$ e_j^3][#]` when an endpoint of `e_j` is chosen and as `[$][e_j^3][#]`
/// otherwise. It has `13n + 23m + |chosen| - (edges touching chosen)` phrases.
pub fn mixed_parsing(g: &Graph, chosen: &VertexCover) -> Result<Parsing> {
    let gadget = build_gadget(g)?;
    let greedy = greedy_parse(&gadget.text);
    mixed_parsing_of(g, &gadget, &greedy, chosen)
}

fn mixed_parsing_of(g: &Graph, gadget: &GadgetString, greedy: &Parsing, chosen: &VertexCover) -> Result<Parsing> {
    let (n, m) = (g.num_vertices(), g.num_edges());
    if let Some(v) = chosen.vertices().find(|&v| !(1..=n).contains(&v)) {
        return Err(Error::InvalidArgument(format!("vertex v{v} is not in the graph")));
    }
    let boundary = gadget.segment(SegmentKind::Q, m).end;
    let mut lengths: Vec<usize> = greedy
        .phrases()
        .iter()
        .take_while(|p| p.start <= boundary)
        .map(|p| p.len)
        .collect();
    if lengths.iter().sum::<usize>() != boundary {
        return Err(Error::ReductionIntegrity(format!(
            "greedy phrases do not end at the Q/R boundary {boundary}"
        )));
    }
    for i in 1..=n {
        let deg = g.degree(i);
        if chosen.contains(i) {
            // v^2 | v^2 $ | (e^3 | v^2 $)* | $ | #
            lengths.push(2);
            lengths.push(3);
            for _ in 0..deg {
                lengths.extend([3, 3]);
            }
            lengths.extend([1, 1]);
        } else {
            // v^3 | (v $ e | e^2 v)* | v $ $ | #
            lengths.push(3);
            for _ in 0..deg {
                lengths.extend([3, 3]);
            }
            lengths.extend([3, 1]);
        }
    }
    for j in 1..=m {
        let (u, v) = g.edge(j);
        if chosen.contains(u) || chosen.contains(v) {
            lengths.extend([4, 1]);
        } else {
            lengths.extend([1, 3, 1]);
        }
    }
    Parsing::from_lengths(&gadget.text, &lengths)
        .map_err(|e| Error::ReductionIntegrity(format!("assembled gadget parsing is invalid: {e}")))
}

/// The parsing of size `13n + 22m + |cover|` built from a vertex cover.
pub fn witness_parsing(g: &Graph, cover: &VertexCover) -> Result<Parsing> {
    if let Some(j) = g.first_uncovered(cover) {
        let (u, v) = g.edge(j);
        return Err(Error::InvalidArgument(format!(
            "{cover} is not a vertex cover: edge e{j} = {{v{u}, v{v}}} is uncovered"
        )));
    }
    let parsing = mixed_parsing(g, cover)?;
    let want = expected_witness_size(g, cover.len());
    if parsing.size() != want {
        return Err(Error::ReductionIntegrity(format!(
            "witness parsing has {} phrases, expected {want}",
            parsing.size()
        )));
    }
    Ok(parsing)
}

/// Result of reading a vertex cover off a gadget parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverExtraction {
    /// Vertices whose `R_i` holds `2 deg(v_i) + 4` phrases.
    pub v_prime: VertexCover,
    /// Edges whose `S_j` holds three phrases.
    pub e_prime: BTreeSet<usize>,
    /// `v_prime` plus one endpoint for each edge of `e_prime` left uncovered.
    pub cover: VertexCover,
    /// `|v_prime| + |e_prime|`, an upper bound on `|cover|`.
    pub bound: usize,
}

pub fn cover_from_parsing(g: &Graph, parsing: &Parsing) -> Result<CoverExtraction> {
    let gadget = build_gadget(g)?;
    validate(&gadget.text, parsing).into_result()?;
    let counts = gadget.segment_counts(parsing)?;

    let v_prime = VertexCover::new((1..=g.num_vertices()).filter(|&i| counts.r[i - 1] == 2 * g.degree(i) + 4));
    let e_prime: BTreeSet<usize> = (1..=g.num_edges()).filter(|&j| counts.s[j - 1] == 3).collect();

    let mut cover = v_prime.clone();
    for &j in &e_prime {
        let (u, v) = g.edge(j);
        if !cover.contains(u) && !cover.contains(v) {
            cover.insert(u.min(v));
        }
    }
    if let Some(j) = g.first_uncovered(&cover) {
        return Err(Error::ReductionIntegrity(format!(
            "edge e{j} is neither covered by the R-part nor parsed into three phrases in S{j}"
        )));
    }
    let bound = v_prime.len() + e_prime.len();
    if cover.len() > bound {
        return Err(Error::ReductionIntegrity(format!(
            "repaired cover has {} vertices, bound is {bound}",
            cover.len()
        )));
    }
    Ok(CoverExtraction { v_prime, e_prime, cover, bound })
}

/// Minimum vertex cover by exhaustive search (smallest size; among those, the
/// lexicographically smallest vertex list).
pub fn brute_force_vertex_cover(g: &Graph) -> Result<VertexCover> {
    let n = g.num_vertices();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "exhaustive vertex cover is limited to {MAX_BRUTE_FORCE_VERTICES} vertices, graph has {n}"
        )));
    }
    let masks: Vec<u32> = g.edges().iter().map(|&(u, v)| 1 << (u - 1) | 1 << (v - 1)).collect();
    let best = (0u32..1 << n)
        .filter(|&set| masks.iter().all(|&e| e & set != 0))
        .map(|set| (1..=n).filter(|&v| set >> (v - 1) & 1 == 1).collect::<Vec<_>>())
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .expect("the full vertex set is a cover");
    Ok(VertexCover::new(best))
}

/// Vertex cover number.
pub fn tau(g: &Graph) -> Result<usize> {
    brute_force_vertex_cover(g).map(|c| c.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub n: usize,
    pub m: usize,
    pub text_len: usize,
    pub greedy_size: usize,
    pub min_cover: VertexCover,
    pub witness_size: usize,
    pub extracted_cover: VertexCover,
    /// Present when a solver was supplied.
    pub maxsat_optimum: Option<usize>,
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph: n = {}, m = {}", self.n, self.m)?;
        writeln!(f, "gadget length: {}", self.text_len)?;
        writeln!(f, "greedy size: {} (13n + 23m)", self.greedy_size)?;
        writeln!(f, "minimum vertex cover: {} (tau = {})", self.min_cover, self.min_cover.len())?;
        writeln!(f, "witness size: {} (13n + 22m + tau)", self.witness_size)?;
        writeln!(f, "cover read back from witness: {}", self.extracted_cover)?;
        match self.maxsat_optimum {
            Some(opt) => writeln!(f, "MAX-SAT optimum: {opt}"),
            None => writeln!(f, "MAX-SAT optimum: not computed (no solver)"),
        }
    }
}

/// Checks every count of the reduction on one graph.
pub fn verify_reduction(g: &Graph, solver: Option<&SolverCommand>) -> Result<ReductionReport> {
    let gadget = build_gadget(g)?;
    let greedy = greedy_parse(&gadget.text);
    let counts = greedy_counts_of(g, &gadget, &greedy)?;
    let min_cover = brute_force_vertex_cover(g)?;
    let witness = mixed_parsing_of(g, &gadget, &greedy, &min_cover)?;
    let target = expected_witness_size(g, min_cover.len());
    if witness.size() != target {
        return Err(Error::ReductionIntegrity(format!(
            "witness parsing has {} phrases, expected {target}",
            witness.size()
        )));
    }
    let extracted = cover_from_parsing(g, &witness)?;
    if extracted.cover.len() > min_cover.len() {
        return Err(Error::ReductionIntegrity(format!(
            "cover read back from the witness ({}) is larger than {}",
            extracted.cover, min_cover
        )));
    }
    let maxsat_optimum = match solver {
        Some(cmd) => {
            let solved = solve(&gadget.text, cmd)?;
            let opt = solved.parsing.size();
            if opt != target {
                return Err(Error::ReductionIntegrity(format!(
                    "MAX-SAT optimum {opt} differs from 13n + 22m + tau = {target}"
                )));
            }
            Some(opt)
        }
        None => None,
    };
    Ok(ReductionReport {
        n: g.num_vertices(),
        m: g.num_edges(),
        text_len: gadget.text.len(),
        greedy_size: counts.total,
        min_cover,
        witness_size: witness.size(),
        extracted_cover: extracted.cover,
        maxsat_optimum,
    })
}
