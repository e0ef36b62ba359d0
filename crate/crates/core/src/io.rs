//! graph6 and edge-list interchange, plus labeled corpus generation.

use std::fs;
use std::ops::Range;
use std::path::Path;

use crate::error::{Error, ParseError, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Largest vertex count representable in short-form graph6.
pub const GRAPH6_MAX_N: usize = 62;

/// Largest `n` accepted by the labeled enumerators.
pub const ENUMERATION_MAX_N: usize = 7;

const G6_OFFSET: u8 = 63;

/// Decodes one short-form graph6 record. A trailing line terminator is
/// ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (&header, payload) = bytes.split_first().ok_or(ParseError::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::InvalidCharacter { offset, byte });
        }
    }
    if header == 126 {
        return Err(ParseError::Oversize);
    }
    let n = (header - G6_OFFSET) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if payload.len() < expected {
        return Err(ParseError::Truncated { n, expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(ParseError::TrailingBytes { n, expected, found: payload.len() });
    }

    let mut rows = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let chunk = payload[k / 6] - G6_OFFSET;
            if chunk >> (5 - k % 6) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(n, rows))
}

/// Encodes a graph as a short-form graph6 record (no line terminator).
pub fn write_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(ParseError::TooManyVertices { n, max: GRAPH6_MAX_N });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
    out.push(n as u8 + G6_OFFSET);
    let mut chunk = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + G6_OFFSET);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((chunk << (6 - k % 6)) + G6_OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses `n` followed by whitespace-separated endpoint pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = text.lines().enumerate().flat_map(|(i, line)| {
        line.split('#')
            .next()
            .unwrap_or("")
            .split_whitespace()
            .map(move |t| (i + 1, t))
    });
    let number = |(line, token): (usize, &str)| {
        token.parse::<usize>().map_err(|_| ParseError::MalformedToken {
            line,
            token: token.to_string(),
        })
    };
    let n = number(tokens.next().ok_or(ParseError::MissingVertexCount)?)?;
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut rows = vec![0u64; n];
    while let Some(first) = tokens.next() {
        let line = first.0;
        let u = number(first)?;
        let v = number(tokens.next().ok_or(ParseError::UnpairedEndpoint)?)?;
        if u >= n || v >= n {
            return Err(ParseError::EndpointOutOfRange { line, u, v, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop(u, line));
        }
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    Ok(Graph::from_rows_unchecked(n, rows))
}

/// Writes `n` on the first line and one `u v` edge per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Number of edge masks on `n` labeled vertices, `2^(n(n-1)/2)`.
pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Every labeled graph on `n` vertices in edge-mask order: bit `k` of the
/// mask is the `k`-th vertex pair in graph6 order `(0,1), (0,2), (1,2), (0,3), …`.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    connected_only: bool,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize, connected_only: bool) -> Result<Self> {
        Self::with_range(n, connected_only, 0..mask_count(n.min(ENUMERATION_MAX_N)))
    }

    /// Restricts the stream to masks in `range`, so independent workers can
    /// cover disjoint slices of the same corpus.
    pub fn with_range(n: usize, connected_only: bool, range: Range<u64>) -> Result<Self> {
        if !(1..=ENUMERATION_MAX_N).contains(&n) {
            return Err(Error::Precondition(format!(
                "labeled enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}"
            )));
        }
        let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        Ok(LabeledGraphs {
            n,
            connected_only,
            pairs,
            next: range.start,
            end: range.end.min(mask_count(n)),
        })
    }

    /// The graph for a single edge mask.
    pub fn graph_for_mask(&self, mask: u64) -> Graph {
        let mut rows = vec![0u64; self.n];
        let mut bits = mask;
        while bits != 0 {
            let (u, v) = self.pairs[bits.trailing_zeros() as usize];
            bits &= bits - 1;
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Graph::from_rows_unchecked(self.n, rows)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let g = self.graph_for_mask(self.next);
            self.next += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// All connected labeled graphs on `n` vertices, `1 <= n <= 7`.
pub fn enumerate_labeled_connected(n: usize) -> Result<LabeledGraphs> {
    LabeledGraphs::new(n, true)
}

/// All labeled graphs on `n` vertices, `1 <= n <= 7`.
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    LabeledGraphs::new(n, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

/// A corpus entry that failed to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub error: ParseError,
}

/// Where a sweep gets its graphs from.
#[derive(Clone, Debug)]
pub enum CorpusSource {
    /// Generated labeled graphs on `n` vertices.
    Labeled { n: usize, connected_only: bool },
    /// In-memory text: one graph6 record per line, or a single edge list.
    Text { text: String, format: Format },
}

impl CorpusSource {
    pub fn from_path(path: &Path, format: Format) -> std::io::Result<Self> {
        Ok(CorpusSource::Text {
            text: fs::read_to_string(path)?,
            format,
        })
    }

    /// A short identifier for reports.
    pub fn id(&self) -> String {
        match self {
            CorpusSource::Labeled { n, connected_only: true } => format!("labeled-connected-n{n}"),
            CorpusSource::Labeled { n, connected_only: false } => format!("labeled-n{n}"),
            CorpusSource::Text { format: Format::Graph6, .. } => "graph6-text".into(),
            CorpusSource::Text { format: Format::EdgeList, .. } => "edge-list-text".into(),
        }
    }

    /// Pulls graphs one at a time. Blank lines and `>>graph6<<` headers are
    /// skipped.
    pub fn stream(&self) -> Result<Box<dyn Iterator<Item = Result<Graph, ParseDiagnostic>> + '_>> {
        Ok(match self {
            CorpusSource::Labeled { n, connected_only } => {
                Box::new(LabeledGraphs::new(*n, *connected_only)?.map(Ok))
            }
            CorpusSource::Text { text, format: Format::Graph6 } => Box::new(
                text.lines()
                    .enumerate()
                    .filter_map(|(i, raw)| {
                        let line = raw.trim().trim_start_matches(">>graph6<<");
                        (!line.is_empty()).then_some((i + 1, line))
                    })
                    .map(|(line, record)| {
                        parse_graph6(record).map_err(|error| ParseDiagnostic { line, error })
                    }),
            ),
            CorpusSource::Text { text, format: Format::EdgeList } => Box::new(std::iter::once(
                parse_edge_list(text).map_err(|error| ParseDiagnostic { line: 1, error }),
            )),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn decodes_known_records() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
        let c4 = parse_graph6("Cl\n").unwrap();
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (0, 3), (2, 3)]);
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn encodes_known_graphs() {
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        // networkx / nauty encoding of the Petersen graph on its standard
        // labeling (outer 5-cycle 0..4, spokes i -- i+5, inner pentagram).
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let p = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(write_graph6(&p).unwrap(), "IheA@GUAo");
    }

    #[test]
    fn round_trips_every_small_labeled_graph() {
        for n in 1..=5 {
            for g in enumerate_labeled(n).unwrap() {
                assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
            }
        }
    }

    #[test]
    fn graph6_errors_are_distinct() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert_eq!(
            parse_graph6("!!"),
            Err(ParseError::InvalidCharacter { offset: 0, byte: b'!' })
        );
        assert_eq!(parse_graph6("~??"), Err(ParseError::Oversize));
        assert_eq!(
            parse_graph6("D"),
            Err(ParseError::Truncated { n: 5, expected: 2, found: 0 })
        );
        assert_eq!(
            parse_graph6("C~~"),
            Err(ParseError::TrailingBytes { n: 4, expected: 1, found: 2 })
        );
        let too_big = Graph::empty(63).unwrap();
        assert!(matches!(write_graph6(&too_big), Err(ParseError::TooManyVertices { n: 63, .. })));
    }

    #[test]
    fn edge_lists() {
        assert_eq!(parse_edge_list("2\n0 1").unwrap(), Graph::complete(2).unwrap());
        let c4 = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(c4, Graph::cycle(4).unwrap());
        let dup = parse_edge_list("3\n0 1\n1 0").unwrap();
        assert_eq!(dup.m(), 1);
        assert_eq!(
            parse_edge_list("3\n0 3"),
            Err(ParseError::EndpointOutOfRange { line: 2, u: 0, v: 3, n: 3 })
        );
        assert_eq!(parse_edge_list("3\n1 1"), Err(ParseError::SelfLoop(1, 2)));
        assert!(matches!(parse_edge_list("3\n0 x"), Err(ParseError::MalformedToken { line: 2, .. })));
        assert_eq!(parse_edge_list("3\n0"), Err(ParseError::UnpairedEndpoint));
        assert_eq!(parse_edge_list("  \n"), Err(ParseError::MissingVertexCount));
        assert_eq!(parse_edge_list(&write_edge_list(&c4)).unwrap(), c4);
    }

    #[test]
    fn labeled_enumeration_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_labeled_connected(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
        assert!(enumerate_labeled_connected(0).is_err());
        assert!(enumerate_labeled_connected(8).is_err());
    }

    #[test]
    fn ranges_partition_the_corpus() {
        let whole: Vec<Graph> = enumerate_labeled_connected(4).unwrap().collect();
        let mut pieces = Vec::new();
        for start in (0..64).step_by(10) {
            pieces.extend(LabeledGraphs::with_range(4, true, start..start + 10).unwrap());
        }
        assert_eq!(whole, pieces);
    }

    #[test]
    fn mask_order_matches_graph6_bits() {
        let gen = LabeledGraphs::new(3, false).unwrap();
        let g = gen.graph_for_mask(0b100);
        assert_eq!(g.neighbors(1), VertexSet::singleton(2));
        assert_eq!(write_graph6(&g).unwrap(), "BG");
    }

    #[test]
    fn corpus_stream_reports_line_numbers() {
        let src = CorpusSource::Text {
            text: "C~\n\n!!\nCl\n".into(),
            format: Format::Graph6,
        };
        let items: Vec<_> = src.stream().unwrap().collect();
        assert_eq!(items.len(), 3);
        assert!(items[0].is_ok() && items[2].is_ok());
        assert_eq!(items[1].as_ref().unwrap_err().line, 3);
    }
}
