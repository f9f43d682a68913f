//! Text dialects: cograph expressions, threshold construction sequences,
//! cotree serializations and edge lists.
//!
//! Vertex ids in every text format are 1-based. In expressions, vertices are
//! numbered left to right in reading order, and that numbering is what every
//! control-set output refers to: in `(.+.)*(.+.+.)` vertices 1 and 2 form one
//! side of `K_{2,3}` and vertices 3, 4, 5 the other.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::cotree::{CoTree, CoTreeBuilder, CotreeError, Label, NodeId};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("unbalanced parentheses")]
    Unbalanced,
    #[error("unexpected {0}")]
    Unexpected(String),
    #[error("atom must be a positive vertex count")]
    ZeroAtom,
    #[error("number too large")]
    Overflow,
    #[error("a construction sequence must start with 0")]
    FirstBitOne,
    #[error("non-binary character {0:?}")]
    NonBinary(char),
    #[error("malformed cotree node: {0}")]
    MalformedNode(String),
    #[error("{0}")]
    Cotree(CotreeError),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("{0}")]
    Graph(GraphError),
}

/// A parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError {
            line: pos.line,
            column: pos.column,
            kind,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Dot,
    Num(String),
    Plus,
    Star,
    Comma,
    Open,
    Close,
    Other(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Dot => f.write_str("'.'"),
            Tok::Num(s) => write!(f, "number {s}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Comma => f.write_str("','"),
            Tok::Open => f.write_str("'('"),
            Tok::Close => f.write_str("')'"),
            Tok::Other(c) => write!(f, "character {c:?}"),
        }
    }
}

fn tokenize(text: &str) -> (Vec<(Tok, Pos)>, Pos) {
    let mut out = Vec::new();
    let mut pos = Pos { line: 1, column: 1 };
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let here = pos;
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
            continue;
        }
        pos.column += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '.' => Tok::Dot,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            ',' => Tok::Comma,
            '(' => Tok::Open,
            ')' => Tok::Close,
            c if c.is_ascii_digit() => {
                let mut s = c.to_string();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                    pos.column += 1;
                }
                Tok::Num(s)
            }
            other => Tok::Other(other),
        };
        out.push((tok, here));
    }
    (out, pos)
}

fn parse_count(s: &str, pos: Pos) -> Result<usize, ParseError> {
    s.parse::<usize>()
        .map_err(|_| ParseError::at(pos, ParseErrorKind::Overflow))
}

struct ExprParser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
    builder: CoTreeBuilder,
    next_vertex: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn expr(&mut self) -> Result<NodeId, ParseError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Tok::Plus) {
            self.at += 1;
            terms.push(self.term()?);
        }
        Ok(self.combine(Label::Union, terms))
    }

    fn term(&mut self) -> Result<NodeId, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            factors.push(self.factor()?);
        }
        Ok(self.combine(Label::Join, factors))
    }

    fn combine(&mut self, label: Label, mut parts: Vec<NodeId>) -> NodeId {
        if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            self.builder.internal(label, parts)
        }
    }

    fn factor(&mut self) -> Result<NodeId, ParseError> {
        let pos = self.pos();
        match self.toks.get(self.at).map(|(t, _)| t.clone()) {
            Some(Tok::Dot) => {
                self.at += 1;
                Ok(self.vertex())
            }
            Some(Tok::Num(s)) => {
                self.at += 1;
                let k = parse_count(&s, pos)?;
                match k {
                    0 => Err(ParseError::at(pos, ParseErrorKind::ZeroAtom)),
                    1 => Ok(self.vertex()),
                    _ => {
                        let leaves = (0..k).map(|_| self.vertex()).collect();
                        Ok(self.builder.internal(Label::Union, leaves))
                    }
                }
            }
            Some(Tok::Open) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Close) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    None => Err(ParseError::at(pos, ParseErrorKind::Unbalanced)),
                    Some(t) => Err(ParseError::at(
                        self.pos(),
                        ParseErrorKind::Unexpected(t.to_string()),
                    )),
                }
            }
            Some(Tok::Close) => Err(ParseError::at(pos, ParseErrorKind::Unbalanced)),
            Some(t) => Err(ParseError::at(
                pos,
                ParseErrorKind::Unexpected(t.to_string()),
            )),
            None => Err(ParseError::at(
                pos,
                ParseErrorKind::Unexpected("end of input".into()),
            )),
        }
    }

    fn vertex(&mut self) -> NodeId {
        let v = self.builder.leaf(self.next_vertex);
        self.next_vertex += 1;
        v
    }
}

/// Parses a cograph expression into its canonical cotree.
///
/// ```text
/// expr   := term ('+' term)*        union
/// term   := factor ('*' factor)*    join, binds tighter than '+'
/// factor := '.' | k | '(' expr ')'  k >= 1 is k isolated vertices
/// ```
pub fn parse_expr(text: &str) -> Result<CoTree, ParseError> {
    let (toks, end) = tokenize(text);
    if toks.is_empty() {
        return Err(ParseError::at(end, ParseErrorKind::Empty));
    }
    let mut p = ExprParser {
        toks,
        at: 0,
        end,
        builder: CoTreeBuilder::new(),
        next_vertex: 0,
    };
    let root = p.expr()?;
    if let Some(t) = p.peek() {
        let kind = if *t == Tok::Close {
            ParseErrorKind::Unbalanced
        } else {
            ParseErrorKind::Unexpected(t.to_string())
        };
        return Err(ParseError::at(p.pos(), kind));
    }
    let tree = p
        .builder
        .build(root)
        .expect("expression trees are well formed");
    Ok(tree.canonicalize())
}

/// A threshold-graph construction sequence. Bit `i` says whether vertex
/// `i` joined (`true`) or was added in union (`false`) with the vertices
/// before it; bit 0 is always `false`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdSequence(Vec<bool>);

impl ThresholdSequence {
    pub fn new(bits: Vec<bool>) -> Result<Self, ParseErrorKind> {
        match bits.first() {
            None => Err(ParseErrorKind::Empty),
            Some(true) => Err(ParseErrorKind::FirstBitOne),
            Some(false) => Ok(ThresholdSequence(bits)),
        }
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The graph is connected exactly when the last vertex joined (or it is
    /// a single vertex).
    pub fn is_connected(&self) -> bool {
        self.0.len() == 1 || self.0.last() == Some(&true)
    }
}

impl fmt::Display for ThresholdSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses a string of `0`/`1`, optionally separated by whitespace or commas.
pub fn parse_threshold(text: &str) -> Result<ThresholdSequence, ParseError> {
    let (toks, end) = tokenize(text);
    let mut bits = Vec::new();
    let mut first = None;
    for (tok, pos) in toks {
        match tok {
            Tok::Comma => {}
            Tok::Num(s) => {
                first.get_or_insert(pos);
                for (k, c) in s.chars().enumerate() {
                    let at = Pos {
                        line: pos.line,
                        column: pos.column + k,
                    };
                    match c {
                        '0' => bits.push(false),
                        '1' => bits.push(true),
                        other => return Err(ParseError::at(at, ParseErrorKind::NonBinary(other))),
                    }
                }
            }
            Tok::Dot => return Err(ParseError::at(pos, ParseErrorKind::NonBinary('.'))),
            Tok::Plus => return Err(ParseError::at(pos, ParseErrorKind::NonBinary('+'))),
            Tok::Star => return Err(ParseError::at(pos, ParseErrorKind::NonBinary('*'))),
            Tok::Open => return Err(ParseError::at(pos, ParseErrorKind::NonBinary('('))),
            Tok::Close => return Err(ParseError::at(pos, ParseErrorKind::NonBinary(')'))),
            Tok::Other(c) => return Err(ParseError::at(pos, ParseErrorKind::NonBinary(c))),
        }
    }
    ThresholdSequence::new(bits).map_err(|kind| ParseError::at(first.unwrap_or(end), kind))
}

/// Builds the threshold graph from its neighbourhoods: a vertex that joined
/// is adjacent to every earlier vertex, and every vertex is adjacent to each
/// later vertex that joined.
pub fn threshold_to_graph(seq: &ThresholdSequence) -> Graph {
    let bits = seq.bits();
    Graph::from_fn(bits.len(), |i, j| bits[i.max(j)])
}

/// Parses `1(0(1,2),3)` style text. The structure is kept as written; call
/// [`CoTree::canonicalize`] to normalize it.
pub fn parse_cotree(text: &str) -> Result<CoTree, ParseError> {
    let (toks, end) = tokenize(text);
    if toks.is_empty() {
        return Err(ParseError::at(end, ParseErrorKind::Empty));
    }
    let malformed =
        |pos: Pos, what: &str| ParseError::at(pos, ParseErrorKind::MalformedNode(what.into()));

    let mut b = CoTreeBuilder::new();
    // Open internal nodes: label, children so far, position of the label.
    let mut frames: Vec<(Label, Vec<NodeId>, Pos)> = Vec::new();
    let mut root = None;
    // Whether the next token must start a node.
    let mut want_node = true;
    let mut at = 0;
    while at < toks.len() {
        let (tok, pos) = toks[at].clone();
        at += 1;
        if want_node {
            let Tok::Num(s) = tok else {
                let kind = if tok == Tok::Close {
                    ParseErrorKind::MalformedNode("expected a node before ')'".into())
                } else {
                    ParseErrorKind::Unexpected(tok.to_string())
                };
                return Err(ParseError::at(pos, kind));
            };
            if toks.get(at).map(|(t, _)| t) == Some(&Tok::Open) {
                at += 1;
                let label = match s.as_str() {
                    "0" => Label::Union,
                    "1" => Label::Join,
                    _ => return Err(malformed(pos, "internal label must be 0 or 1")),
                };
                frames.push((label, Vec::new(), pos));
                continue;
            }
            let id = parse_count(&s, pos)?;
            if id == 0 {
                return Err(malformed(pos, "leaf ids start at 1"));
            }
            let leaf = b.leaf(id - 1);
            match frames.last_mut() {
                Some(frame) => frame.1.push(leaf),
                None => root = Some(leaf),
            }
            want_node = false;
        } else {
            match tok {
                Tok::Comma if !frames.is_empty() => want_node = true,
                Tok::Close if !frames.is_empty() => {
                    let (label, kids, _) = frames.pop().expect("open frame");
                    let node = b.internal(label, kids);
                    match frames.last_mut() {
                        Some(frame) => frame.1.push(node),
                        None => root = Some(node),
                    }
                }
                Tok::Close => return Err(ParseError::at(pos, ParseErrorKind::Unbalanced)),
                other => {
                    return Err(ParseError::at(
                        pos,
                        ParseErrorKind::Unexpected(other.to_string()),
                    ))
                }
            }
        }
        if root.is_some() && frames.is_empty() && at < toks.len() {
            let (tok, pos) = &toks[at];
            return Err(ParseError::at(
                *pos,
                ParseErrorKind::Unexpected(tok.to_string()),
            ));
        }
    }
    if let Some((_, _, pos)) = frames.last() {
        return Err(ParseError::at(*pos, ParseErrorKind::Unbalanced));
    }
    let root = root.ok_or_else(|| ParseError::at(end, ParseErrorKind::Empty))?;
    b.build(root)
        .map_err(|e| ParseError::at(Pos { line: 1, column: 1 }, ParseErrorKind::Cotree(e)))
}

/// Canonical text form of a cotree; identical to its `Display` output.
pub fn serialize_cotree(t: &CoTree) -> String {
    t.to_string()
}

/// Reads the `n m` + `i j` edge-list format. `#` starts a comment.
pub fn read_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let pos = Pos {
            line: k + 1,
            column: raw.len() - raw.trim_start().len() + 1,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError::at(
                pos,
                ParseErrorKind::Unexpected(format!(
                    "line with {} fields, expected 2",
                    fields.len()
                )),
            ));
        }
        let mut nums = [0usize; 2];
        for (slot, field) in nums.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| {
                ParseError::at(pos, ParseErrorKind::Unexpected(format!("token {field:?}")))
            })?;
        }
        rows.push((nums, pos));
    }
    let Some(&([n, m], _)) = rows.first() else {
        return Err(ParseError::at(
            Pos { line: 1, column: 1 },
            ParseErrorKind::Empty,
        ));
    };
    let edges = &rows[1..];
    if edges.len() != m {
        let pos = edges.get(m).map_or(rows[0].1, |r| r.1);
        return Err(ParseError::at(
            pos,
            ParseErrorKind::EdgeCount {
                expected: m,
                found: edges.len(),
            },
        ));
    }
    let mut list = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for &([i, j], pos) in edges {
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(ParseError::at(
                    pos,
                    ParseErrorKind::Graph(GraphError::VertexOutOfRange { vertex: v, n }),
                ));
            }
        }
        let err = if i == j {
            Some(GraphError::SelfLoop(i))
        } else if !seen.insert((i.min(j), i.max(j))) {
            Some(GraphError::DuplicateEdge(i.min(j), i.max(j)))
        } else {
            None
        };
        if let Some(e) = err {
            return Err(ParseError::at(pos, ParseErrorKind::Graph(e)));
        }
        list.push((i - 1, j - 1));
    }
    Ok(Graph::from_edges(n, &list).expect("validated above"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (i, j) in edges {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}
