//! Reading, signing, generating, and writing signed bipartite graphs.
//!
//! # Canonical format
//!
//! ```text
//! m n |E|
//! u v s
//! ...
//! ```
//!
//! Header gives the side sizes and edge count; each body line is one edge with
//! dense 0-based indices and `s` = `1` (positive) or `0` (negative). Bodies are
//! written sorted by `(u, v)` so equal graphs produce identical bytes.
//!
//! # Random signs
//!
//! Synthetic signs are drawn from SplitMix64 seeded with the caller's seed:
//! one 64-bit draw per edge, in input order, and the edge is positive iff the
//! draw is below `floor(p_pos * 2^64)` (`p_pos = 1` is always positive).

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use rand::seq::index;
use rand::RngCore;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::graph::{GraphError, Side, Sign, SignedBipartiteGraph};

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("header mismatch: {0}")]
    HeaderMismatch(String),
    #[error("cannot place {requested} edges in a {m}x{n} graph")]
    InfeasibleEdgeCount { requested: usize, m: usize, n: usize },
    #[error("invalid ingest spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl IngestError {
    /// Line number for parse errors.
    pub fn line(&self) -> Option<usize> {
        match self {
            IngestError::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> IngestError {
    IngestError::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    /// `m n |E|` header plus dense `u v s` lines.
    Canonical,
    /// `u v s` with arbitrary ids and `s` in `1, 0, +, -, +1, -1`.
    SignedEdgeList,
    /// `u v rating` with arbitrary ids.
    RatedEdgeList,
    /// `u v` with arbitrary ids.
    UnsignedEdgeList,
}

/// Rating binarization: positive iff `rating > threshold`, or `>=` when inclusive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatingRule {
    pub threshold: f64,
    pub inclusive: bool,
}

impl RatingRule {
    /// 10-point scale: ratings strictly greater than 6 are positive.
    pub const JESTER: RatingRule = RatingRule {
        threshold: 6.0,
        inclusive: false,
    };
    /// 5-star scale: ratings of 4 or higher are positive.
    pub const EPINIONS: RatingRule = RatingRule {
        threshold: 4.0,
        inclusive: true,
    };

    pub fn at_least(threshold: f64) -> Self {
        RatingRule {
            threshold,
            inclusive: true,
        }
    }

    pub fn sign(&self, rating: f64) -> Sign {
        let positive = if self.inclusive {
            rating >= self.threshold
        } else {
            rating > self.threshold
        };
        if positive {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl std::str::FromStr for RatingRule {
    type Err = String;

    /// Accepts `jester`, `epinions`, or `threshold:<x>` (inclusive).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "jester" => Ok(RatingRule::JESTER),
            "epinions" => Ok(RatingRule::EPINIONS),
            other => other
                .strip_prefix("threshold:")
                .and_then(|x| x.parse::<f64>().ok())
                .filter(|x| x.is_finite())
                .map(RatingRule::at_least)
                .ok_or_else(|| format!("unknown rating rule `{s}` (expected jester, epinions or threshold:<x>)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SigningRule {
    Native,
    RatingThreshold(RatingRule),
    BernoulliRandom { p_pos: f64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct IngestSpec {
    pub format: InputFormat,
    pub signing_rule: SigningRule,
    pub comment_prefixes: Vec<char>,
}

impl IngestSpec {
    pub fn new(format: InputFormat, signing_rule: SigningRule) -> Self {
        IngestSpec {
            format,
            signing_rule,
            comment_prefixes: vec!['#', '%'],
        }
    }

    pub fn canonical() -> Self {
        Self::new(InputFormat::Canonical, SigningRule::Native)
    }

    pub fn signed() -> Self {
        Self::new(InputFormat::SignedEdgeList, SigningRule::Native)
    }

    pub fn rated(rule: RatingRule) -> Self {
        Self::new(InputFormat::RatedEdgeList, SigningRule::RatingThreshold(rule))
    }

    pub fn unsigned(p_pos: f64, seed: u64) -> Self {
        Self::new(
            InputFormat::UnsignedEdgeList,
            SigningRule::BernoulliRandom { p_pos, seed },
        )
    }

    pub fn validate(&self) -> Result<(), IngestError> {
        let ok = match (self.format, self.signing_rule) {
            (InputFormat::Canonical | InputFormat::SignedEdgeList, SigningRule::Native) => true,
            (InputFormat::RatedEdgeList, SigningRule::RatingThreshold(_)) => true,
            (InputFormat::UnsignedEdgeList, SigningRule::BernoulliRandom { p_pos, .. }) => {
                check_probability(p_pos)?;
                true
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(IngestError::InvalidSpec(format!(
                "signing rule {:?} does not apply to format {:?}",
                self.signing_rule, self.format
            )))
        }
    }

    fn is_comment(&self, line: &str) -> bool {
        line.starts_with(|c| self.comment_prefixes.contains(&c))
    }
}

fn check_probability(p: f64) -> Result<(), IngestError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(IngestError::InvalidSpec(format!("probability {p} outside [0, 1]")))
    }
}

/// External vertex ids in dense-index order, per side.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdMap {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl IdMap {
    /// Writes `side dense_index original_id` lines, left side first.
    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (side, ids) in [(Side::Left, &self.left), (Side::Right, &self.right)] {
            for (i, id) in ids.iter().enumerate() {
                writeln!(w, "{side} {i} {id}")?;
            }
        }
        Ok(())
    }
}

#[derive(Default)]
struct Remapper {
    index: [HashMap<String, u32>; 2],
    ids: IdMap,
}

impl Remapper {
    fn get(&mut self, side: Side, id: &str) -> u32 {
        let (map, ids) = match side {
            Side::Left => (&mut self.index[0], &mut self.ids.left),
            Side::Right => (&mut self.index[1], &mut self.ids.right),
        };
        if let Some(&i) = map.get(id) {
            return i;
        }
        let i = ids.len() as u32;
        map.insert(id.to_owned(), i);
        ids.push(id.to_owned());
        i
    }
}

#[derive(Clone, Debug)]
pub struct Ingested {
    pub graph: SignedBipartiteGraph,
    pub ids: IdMap,
}

/// Data lines as `(line number, whitespace-separated fields)`.
fn data_lines<'a, R: BufRead + 'a>(
    reader: R,
    spec: &'a IngestSpec,
) -> impl Iterator<Item = Result<(usize, Vec<String>), IngestError>> + 'a {
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(e.into())),
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || spec.is_comment(trimmed) {
            return None;
        }
        Some(Ok((i + 1, trimmed.split_whitespace().map(str::to_owned).collect())))
    })
}

fn parse_sign_token(token: &str) -> Option<Sign> {
    match token {
        "1" | "+" | "+1" => Some(Sign::Positive),
        "0" | "-" | "-1" | "\u{2212}" | "\u{2212}1" => Some(Sign::Negative),
        _ => None,
    }
}

fn need_fields(line: usize, fields: &[String], n: usize, what: &str) -> Result<(), IngestError> {
    if fields.len() < n {
        return Err(parse_error(
            line,
            format!("expected {what}, found {} field(s)", fields.len()),
        ));
    }
    Ok(())
}

/// Reads any supported format according to `spec`.
pub fn ingest<R: BufRead>(reader: R, spec: &IngestSpec) -> Result<Ingested, IngestError> {
    spec.validate()?;
    match (spec.format, spec.signing_rule) {
        (InputFormat::Canonical, _) => {
            let graph = read_canonical_with(reader, spec)?;
            let ids = IdMap {
                left: (0..graph.left_count()).map(|i| i.to_string()).collect(),
                right: (0..graph.right_count()).map(|i| i.to_string()).collect(),
            };
            Ok(Ingested { graph, ids })
        }
        (InputFormat::SignedEdgeList, _) => parse_signed(reader, spec),
        (InputFormat::RatedEdgeList, SigningRule::RatingThreshold(rule)) => binarize_ratings(reader, rule, spec),
        (InputFormat::UnsignedEdgeList, SigningRule::BernoulliRandom { p_pos, seed }) => {
            let (edges, ids) = parse_unsigned(reader, spec)?;
            let graph = assign_random_signs_with_counts(ids.left.len(), ids.right.len(), &edges, p_pos, seed)?;
            Ok(Ingested { graph, ids })
        }
        _ => unreachable!("validated above"),
    }
}

/// `u v s` lines; extra trailing fields are ignored.
pub fn parse_signed<R: BufRead>(reader: R, spec: &IngestSpec) -> Result<Ingested, IngestError> {
    let mut remap = Remapper::default();
    let mut edges = Vec::new();
    for item in data_lines(reader, spec) {
        let (line, fields) = item?;
        need_fields(line, &fields, 3, "`u v sign`")?;
        let sign =
            parse_sign_token(&fields[2]).ok_or_else(|| parse_error(line, format!("invalid sign `{}`", fields[2])))?;
        let u = remap.get(Side::Left, &fields[0]);
        let v = remap.get(Side::Right, &fields[1]);
        edges.push((u, v, sign));
    }
    let graph = SignedBipartiteGraph::with_counts(remap.ids.left.len(), remap.ids.right.len(), &edges)?;
    Ok(Ingested { graph, ids: remap.ids })
}

/// `u v rating` lines signed by `rule`; extra trailing fields are ignored.
pub fn binarize_ratings<R: BufRead>(reader: R, rule: RatingRule, spec: &IngestSpec) -> Result<Ingested, IngestError> {
    let mut remap = Remapper::default();
    let mut edges = Vec::new();
    for item in data_lines(reader, spec) {
        let (line, fields) = item?;
        need_fields(line, &fields, 3, "`u v rating`")?;
        let rating: f64 = fields[2]
            .parse()
            .ok()
            .filter(|r: &f64| r.is_finite())
            .ok_or_else(|| parse_error(line, format!("invalid rating `{}`", fields[2])))?;
        let u = remap.get(Side::Left, &fields[0]);
        let v = remap.get(Side::Right, &fields[1]);
        edges.push((u, v, rule.sign(rating)));
    }
    let graph = SignedBipartiteGraph::with_counts(remap.ids.left.len(), remap.ids.right.len(), &edges)?;
    Ok(Ingested { graph, ids: remap.ids })
}

/// `u v` lines; extra trailing fields are ignored.
pub fn parse_unsigned<R: BufRead>(reader: R, spec: &IngestSpec) -> Result<(Vec<(u32, u32)>, IdMap), IngestError> {
    let mut remap = Remapper::default();
    let mut edges = Vec::new();
    for item in data_lines(reader, spec) {
        let (line, fields) = item?;
        need_fields(line, &fields, 2, "`u v`")?;
        let u = remap.get(Side::Left, &fields[0]);
        let v = remap.get(Side::Right, &fields[1]);
        edges.push((u, v));
    }
    Ok((edges, remap.ids))
}

/// Bernoulli sign stream; see the module docs for the exact contract.
pub struct SignStream {
    rng: SplitMix64,
    threshold: Option<u64>,
}

impl SignStream {
    pub fn new(p_pos: f64, seed: u64) -> Result<Self, IngestError> {
        Self::with_rng(p_pos, SplitMix64::seed_from_u64(seed))
    }

    fn with_rng(p_pos: f64, rng: SplitMix64) -> Result<Self, IngestError> {
        check_probability(p_pos)?;
        // p_pos * 2^64 rounds down; 1.0 would overflow so it is special-cased.
        let threshold = if p_pos >= 1.0 {
            None
        } else {
            Some((p_pos * 18_446_744_073_709_551_616.0) as u64)
        };
        Ok(SignStream { rng, threshold })
    }

    pub fn next_sign(&mut self) -> Sign {
        let draw = self.rng.next_u64();
        match self.threshold {
            None => Sign::Positive,
            Some(t) if draw < t => Sign::Positive,
            Some(_) => Sign::Negative,
        }
    }
}

/// Signs each edge independently, positive with probability `p_pos`.
pub fn assign_random_signs(edges: &[(u32, u32)], p_pos: f64, seed: u64) -> Result<SignedBipartiteGraph, IngestError> {
    let m = edges.iter().map(|e| e.0 as usize + 1).max().unwrap_or(0);
    let n = edges.iter().map(|e| e.1 as usize + 1).max().unwrap_or(0);
    assign_random_signs_with_counts(m, n, edges, p_pos, seed)
}

pub fn assign_random_signs_with_counts(
    m: usize,
    n: usize,
    edges: &[(u32, u32)],
    p_pos: f64,
    seed: u64,
) -> Result<SignedBipartiteGraph, IngestError> {
    let mut stream = SignStream::new(p_pos, seed)?;
    let signed: Vec<_> = edges.iter().map(|&(u, v)| (u, v, stream.next_sign())).collect();
    Ok(SignedBipartiteGraph::with_counts(m, n, &signed)?)
}

/// Writes the canonical form of `g`.
pub fn write_canonical<W: Write>(g: &SignedBipartiteGraph, mut w: W) -> io::Result<()> {
    writeln!(w, "{} {} {}", g.left_count(), g.right_count(), g.edge_count())?;
    for (u, v, s) in g.edges() {
        writeln!(w, "{u} {v} {}", s.as_bit())?;
    }
    Ok(())
}

pub fn canonical_string(g: &SignedBipartiteGraph) -> String {
    let mut buf = Vec::new();
    write_canonical(g, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("canonical output is ASCII")
}

pub fn read_canonical<R: BufRead>(reader: R) -> Result<SignedBipartiteGraph, IngestError> {
    read_canonical_with(reader, &IngestSpec::canonical())
}

fn read_canonical_with<R: BufRead>(reader: R, spec: &IngestSpec) -> Result<SignedBipartiteGraph, IngestError> {
    let mut lines = data_lines(reader, spec);
    let (hline, header) = match lines.next() {
        Some(item) => item?,
        None => return Err(IngestError::HeaderMismatch("missing `m n |E|` header".into())),
    };
    if header.len() != 3 {
        return Err(parse_error(hline, "header must be `m n |E|`"));
    }
    let parse_num = |line: usize, s: &str| -> Result<usize, IngestError> {
        s.parse()
            .map_err(|_| parse_error(line, format!("invalid number `{s}`")))
    };
    let (m, n, e) = (
        parse_num(hline, &header[0])?,
        parse_num(hline, &header[1])?,
        parse_num(hline, &header[2])?,
    );

    let mut edges = Vec::with_capacity(e.min(1 << 24));
    for item in lines {
        let (line, fields) = item?;
        if fields.len() != 3 {
            return Err(parse_error(line, "expected `u v s`"));
        }
        let u = parse_num(line, &fields[0])?;
        let v = parse_num(line, &fields[1])?;
        if u >= m || v >= n {
            return Err(IngestError::HeaderMismatch(format!(
                "line {line}: edge ({u}, {v}) outside a {m}x{n} graph"
            )));
        }
        let sign = match fields[2].as_str() {
            "1" => Sign::Positive,
            "0" => Sign::Negative,
            other => return Err(parse_error(line, format!("invalid sign `{other}` (expected 1 or 0)"))),
        };
        edges.push((u as u32, v as u32, sign));
    }
    if edges.len() != e {
        return Err(IngestError::HeaderMismatch(format!(
            "header declares {e} edges, body has {}",
            edges.len()
        )));
    }
    Ok(SignedBipartiteGraph::with_counts(m, n, &edges)?)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EdgeBudget {
    /// Each of the `m * n` pairs is an edge independently with this probability.
    Density(f64),
    /// Exactly this many distinct pairs, chosen uniformly.
    Exact(usize),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorParams {
    pub left: usize,
    pub right: usize,
    pub edges: EdgeBudget,
    pub p_pos: f64,
    pub seed: u64,
}

/// Random signed bipartite graph, deterministic for a fixed seed.
///
/// Pairs are visited in row-major `(u, v)` order. In density mode each pair
/// consumes one draw from the structure stream; chosen edges are then signed
/// by a [`SignStream`] seeded with `seed` in the same order.
pub fn generate_random_bigraph(params: GeneratorParams) -> Result<SignedBipartiteGraph, IngestError> {
    let GeneratorParams {
        left: m,
        right: n,
        edges: budget,
        p_pos,
        seed,
    } = params;
    check_probability(p_pos)?;
    let cells = m.checked_mul(n).ok_or(IngestError::InfeasibleEdgeCount {
        requested: usize::MAX,
        m,
        n,
    })?;
    let mut structure = SplitMix64::seed_from_u64(seed ^ 0x5DEE_CE66_D1CE_4E5B);
    let mut pairs: Vec<(u32, u32)> = match budget {
        EdgeBudget::Density(d) => {
            let mut coin = SignStream::with_rng(d, structure)?;
            (0..m as u32)
                .flat_map(|u| (0..n as u32).map(move |v| (u, v)))
                .filter(|_| coin.next_sign() == Sign::Positive)
                .collect()
        }
        EdgeBudget::Exact(k) => {
            if k > cells {
                return Err(IngestError::InfeasibleEdgeCount { requested: k, m, n });
            }
            index::sample(&mut structure, cells, k)
                .into_iter()
                .map(|c| ((c / n) as u32, (c % n) as u32))
                .collect()
        }
    };
    pairs.sort_unstable();
    assign_random_signs_with_counts(m, n, &pairs, p_pos, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn signed(text: &str) -> Result<Ingested, IngestError> {
        parse_signed(text.as_bytes(), &IngestSpec::signed())
    }

    #[test]
    fn signed_edge_list() {
        let g = signed("0 0 1\n0 1 0\n").unwrap().graph;
        assert_eq!(g.edge_sign(0, 0), Some(Sign::Positive));
        assert_eq!(g.edge_sign(0, 1), Some(Sign::Negative));
        let g = signed("# c\n0 0 +\n").unwrap().graph;
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edge_sign(0, 0), Some(Sign::Positive));
    }

    #[test]
    fn signed_tokens() {
        let g = signed("a x -1\nb x +1\n% konect comment\nc y -\n").unwrap();
        assert_eq!(g.ids.left, vec!["a", "b", "c"]);
        assert_eq!(g.ids.right, vec!["x", "y"]);
        assert_eq!(g.graph.edge_sign(0, 0), Some(Sign::Negative));
        assert_eq!(g.graph.edge_sign(1, 0), Some(Sign::Positive));
        assert_eq!(g.graph.edge_sign(2, 1), Some(Sign::Negative));
    }

    #[test]
    fn invalid_sign_reports_line() {
        let err = signed("0 0 2\n").unwrap_err();
        assert_eq!(err.line(), Some(1));
        let err = signed("# header\n0 0 1\n0 1\n").unwrap_err();
        assert_eq!(err.line(), Some(3));
    }

    #[test]
    fn duplicates_pass_through() {
        assert!(matches!(
            signed("0 0 1\n0 0 1\n"),
            Err(IngestError::Graph(GraphError::DuplicateEdge { .. }))
        ));
    }

    #[test]
    fn rating_rules() {
        assert_eq!(RatingRule::JESTER.sign(7.0), Sign::Positive);
        assert_eq!(RatingRule::JESTER.sign(6.0), Sign::Negative);
        assert_eq!(RatingRule::EPINIONS.sign(3.0), Sign::Negative);
        assert_eq!(RatingRule::EPINIONS.sign(4.0), Sign::Positive);
        assert_eq!(RatingRule::EPINIONS.sign(3.5), Sign::Negative);
        assert_eq!(
            "threshold:2.5".parse::<RatingRule>().unwrap(),
            RatingRule::at_least(2.5)
        );
        assert!("threshold:x".parse::<RatingRule>().is_err());

        let g = binarize_ratings(
            "u1 i1 5 1234\nu1 i2 1\n".as_bytes(),
            RatingRule::EPINIONS,
            &IngestSpec::rated(RatingRule::EPINIONS),
        )
        .unwrap()
        .graph;
        assert_eq!(g.edge_sign(0, 0), Some(Sign::Positive));
        assert_eq!(g.edge_sign(0, 1), Some(Sign::Negative));
    }

    #[test]
    fn spec_validation() {
        let bad = IngestSpec::new(InputFormat::RatedEdgeList, SigningRule::Native);
        assert!(matches!(bad.validate(), Err(IngestError::InvalidSpec(_))));
        assert!(IngestSpec::unsigned(1.5, 0).validate().is_err());
        assert!(IngestSpec::unsigned(0.7, 0).validate().is_ok());
    }

    #[test]
    fn random_sign_boundaries() {
        let edges: Vec<_> = (0..50).map(|i| (i, i % 7)).collect();
        let all_pos = assign_random_signs(&edges, 1.0, 99).unwrap();
        assert!(all_pos.edges().all(|e| e.2 == Sign::Positive));
        let all_neg = assign_random_signs(&edges, 0.0, 99).unwrap();
        assert!(all_neg.edges().all(|e| e.2 == Sign::Negative));
    }

    #[test]
    fn canonical_k22() {
        let edges: Vec<_> = (0..2)
            .flat_map(|u| (0..2).map(move |v| (u, v, Sign::Positive)))
            .collect();
        let g = SignedBipartiteGraph::from_edges(&edges).unwrap();
        let text = canonical_string(&g);
        assert_eq!(text, "2 2 4\n0 0 1\n0 1 1\n1 0 1\n1 1 1\n");
        assert_eq!(read_canonical(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn canonical_header_mismatch() {
        let text = "2 2 5\n0 0 1\n0 1 1\n1 0 1\n1 1 1\n";
        assert!(matches!(
            read_canonical(text.as_bytes()),
            Err(IngestError::HeaderMismatch(_))
        ));
        assert!(matches!(
            read_canonical("1 1 1\n0 1 1\n".as_bytes()),
            Err(IngestError::HeaderMismatch(_))
        ));
        assert!(matches!(
            read_canonical("".as_bytes()),
            Err(IngestError::HeaderMismatch(_))
        ));
    }

    #[test]
    fn generator_saturation_and_infeasible() {
        let params = GeneratorParams {
            left: 4,
            right: 4,
            edges: EdgeBudget::Exact(16),
            p_pos: 1.0,
            seed: 3,
        };
        let g = generate_random_bigraph(params).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.max_degree(), 4);
        let too_many = GeneratorParams {
            edges: EdgeBudget::Exact(17),
            ..params
        };
        assert!(matches!(
            generate_random_bigraph(too_many),
            Err(IngestError::InfeasibleEdgeCount {
                requested: 17,
                m: 4,
                n: 4
            })
        ));
    }

    #[test]
    fn empty_generation() {
        let params = GeneratorParams {
            left: 0,
            right: 0,
            edges: EdgeBudget::Density(0.5),
            p_pos: 0.7,
            seed: 7,
        };
        let g = generate_random_bigraph(params).unwrap();
        assert_eq!(canonical_string(&g), "0 0 0\n");
    }
}
