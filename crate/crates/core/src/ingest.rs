//! graph6 encoding, edge-list ingestion and largest-component extraction.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::io::BufRead;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const G6_OFFSET: u8 = 63;
const G6_LONG: u8 = 126;
const G6_PREFIX: &[u8] = b">>graph6<<";

fn g6_value(b: u8) -> Result<u8> {
    if (G6_OFFSET..=G6_LONG).contains(&b) {
        Ok(b - G6_OFFSET)
    } else {
        Err(Error::BadHeader)
    }
}

/// Reads the size header, returning `(n, header_len)`.
fn g6_header(bytes: &[u8]) -> Result<(u64, usize)> {
    let field = |from: usize, len: usize| -> Result<u64> {
        let chunk = bytes.get(from..from + len).ok_or(Error::BadHeader)?;
        chunk.iter().try_fold(0u64, |acc, &b| Ok((acc << 6) | g6_value(b)? as u64))
    };
    match bytes.first() {
        None => Err(Error::BadHeader),
        Some(&b) if b < G6_LONG => Ok((g6_value(b)? as u64, 1)),
        Some(_) if bytes.get(1) == Some(&G6_LONG) => Ok((field(2, 6)?, 8)),
        Some(_) => Ok((field(1, 3)?, 4)),
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` prefix are accepted.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let mut bytes = line;
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    bytes = bytes.strip_prefix(G6_PREFIX).unwrap_or(bytes);
    let (n, start) = g6_header(bytes)?;
    let body = &bytes[start..];
    let bits = n as u128 * n.saturating_sub(1) as u128 / 2;
    let need = bits.div_ceil(6);
    match (body.len() as u128).cmp(&need) {
        Ordering::Less => return Err(Error::TruncatedBits),
        Ordering::Greater => return Err(Error::TrailingGarbage),
        Ordering::Equal => {}
    }
    let n = n as usize;
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let chunk = g6_value(body[k / 6]).map_err(|_| Error::TruncatedBits)?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        // Padding bits must be zero for the encoding to be canonical.
        let last = g6_value(body[k / 6]).map_err(|_| Error::TruncatedBits)?;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Error::TrailingGarbage);
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` as graph6, preserving vertex order. No trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + G6_OFFSET);
    } else {
        let (width, lead) = if n <= 258_047 { (3, 1) } else { (6, 2) };
        out.extend(std::iter::repeat_n(G6_LONG, lead));
        for s in (0..width).rev() {
            out.push(((n >> (6 * s)) & 63) as u8 + G6_OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + G6_OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + G6_OFFSET);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses every non-blank line of a graph6 stream.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().filter_map(|line| match line {
        Err(e) => Some(Err(e.into())),
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6(l.trim().as_bytes())),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IngestStats {
    pub duplicate_edges: usize,
    pub self_loops: usize,
    /// Vertices removed by [`largest_component`].
    pub dropped_vertices: usize,
}

/// A graph with external labels: vertex `v` is `labels[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub stats: IngestStats,
}

impl LabeledGraph {
    /// Labels are the decimal ids `0..n`.
    pub fn unlabeled(graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|v| v.to_string()).collect();
        Self {
            graph,
            labels,
            stats: IngestStats::default(),
        }
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn id_of(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edge set in label space, each pair ordered, sorted.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        let mut out: Vec<_> = self
            .graph
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if compare_labels(&a, &b).is_le() { (a, b) } else { (b, a) }
            })
            .collect();
        out.sort();
        out
    }
}

/// Numeric comparison when both labels are integers, else lexicographic.
pub fn compare_labels(a: &str, b: &str) -> Ordering {
    match (a.parse::<i128>(), b.parse::<i128>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LabelOrder {
    /// Dense ids follow first appearance in the file.
    #[default]
    FirstSeen,
    /// Dense ids follow [`compare_labels`] order, so the graph does not
    /// depend on line order.
    Sorted,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EdgeListOptions {
    /// Reject labels that are not integers.
    pub numeric: bool,
    /// Treat commas as whitespace (CSV-style edge lists).
    pub commas: bool,
    /// Use the first two tokens of each line and ignore the rest (weights,
    /// timestamps). Otherwise every line must hold whole pairs.
    pub first_two_columns: bool,
    /// Skip the first non-comment line (CSV column names, Matrix Market size line).
    pub skip_header: bool,
    pub label_order: LabelOrder,
}

/// Reads a whitespace-separated edge list. Lines starting with `#` or `%`
/// are comments. Duplicate edges and self-loops are dropped and counted.
pub fn parse_edge_list<R: BufRead>(reader: R, opts: &EdgeListOptions) -> Result<LabeledGraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut seen: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut edges = Vec::new();
    let mut stats = IngestStats::default();
    let mut header_pending = opts.skip_header;
    let mut intern = |tok: &str, line: usize| -> Result<Vertex> {
        if opts.numeric && tok.parse::<i128>().is_err() {
            return Err(Error::EdgeList {
                line,
                reason: format!("non-numeric label {tok:?}"),
            });
        }
        if let Some(&id) = ids.get(tok) {
            return Ok(id);
        }
        let id = labels.len();
        labels.push(tok.to_owned());
        ids.insert(tok.to_owned(), id);
        Ok(id)
    };
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') || text.starts_with('%') {
            continue;
        }
        if header_pending {
            header_pending = false;
            continue;
        }
        let mut tokens: Vec<&str> = if opts.commas {
            text.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect()
        } else {
            text.split_whitespace().collect()
        };
        if opts.first_two_columns {
            if tokens.len() < 2 {
                return Err(Error::EdgeList {
                    line: lineno,
                    reason: "fewer than two columns".into(),
                });
            }
            tokens.truncate(2);
        } else if tokens.len() % 2 == 1 {
            return Err(Error::EdgeList {
                line: lineno,
                reason: format!("odd token count {}", tokens.len()),
            });
        }
        for pair in tokens.chunks(2) {
            let u = intern(pair[0], lineno)?;
            let v = intern(pair[1], lineno)?;
            if u == v {
                stats.self_loops += 1;
            } else if !seen.insert((u.min(v), u.max(v))) {
                stats.duplicate_edges += 1;
            } else {
                edges.push((u, v));
            }
        }
    }
    let n = labels.len();
    let graph = Graph::new(n, edges)?;
    let mut lg = LabeledGraph {
        graph,
        labels,
        stats,
    };
    if opts.label_order == LabelOrder::Sorted {
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by(|&a, &b| compare_labels(&lg.labels[a], &lg.labels[b]));
        lg = restrict(&lg, &order);
        lg.stats = stats;
    }
    Ok(lg)
}

fn restrict(g: &LabeledGraph, keep: &[Vertex]) -> LabeledGraph {
    LabeledGraph {
        graph: g.graph.induced_subgraph(keep),
        labels: keep.iter().map(|&v| g.labels[v].clone()).collect(),
        stats: g.stats,
    }
}

/// Induced subgraph on the largest component. Ties go to the component
/// holding the smallest label under [`compare_labels`]. Relative vertex
/// order is preserved and the number of dropped vertices is recorded.
pub fn largest_component(g: &LabeledGraph) -> LabeledGraph {
    let comps = g.graph.components();
    let min_label = |c: &Vec<Vertex>| {
        c.iter()
            .map(|&v| g.labels[v].as_str())
            .min_by(|a, b| compare_labels(a, b))
            .unwrap_or("")
    };
    let Some(best) = comps.iter().max_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| compare_labels(min_label(b), min_label(a)))
    }) else {
        return g.clone();
    };
    let mut out = restrict(g, best);
    out.stats.dropped_vertices = g.graph.n() - best.len();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path, petersen};

    fn edges(text: &str) -> LabeledGraph {
        parse_edge_list(text.as_bytes(), &EdgeListOptions::default()).unwrap()
    }

    #[test]
    fn graph6_small_examples() {
        assert_eq!(parse_graph6(b"C~").unwrap(), complete(4).unwrap());
        assert_eq!(parse_graph6(b"Ch").unwrap(), path(4).unwrap());
        assert_eq!(parse_graph6(b"@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6(b"?").unwrap(), Graph::empty(0));
        assert_eq!(write_graph6(&complete(4).unwrap()), "C~");
        assert_eq!(write_graph6(&path(4).unwrap()), "Ch");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(parse_graph6(b">>graph6<<C~\n").unwrap(), complete(4).unwrap());
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(b""), Err(Error::BadHeader)));
        assert!(matches!(parse_graph6(b" "), Err(Error::BadHeader)));
        assert!(matches!(parse_graph6(b"C"), Err(Error::TruncatedBits)));
        assert!(matches!(parse_graph6(b"C~~"), Err(Error::TrailingGarbage)));
        assert!(matches!(parse_graph6(b"@?"), Err(Error::TrailingGarbage)));
        assert!(matches!(parse_graph6(b"~?"), Err(Error::BadHeader)));
        // n = 4 uses 6 bits exactly; n = 3 leaves three padding bits.
        assert!(matches!(parse_graph6(b"B\x7f"), Err(Error::TruncatedBits)));
        assert!(matches!(parse_graph6(b"BA"), Err(Error::TrailingGarbage)));
    }

    #[test]
    fn graph6_long_headers() {
        for n in [62, 63, 64, 200] {
            let g = path(n).unwrap();
            let s = write_graph6(&g);
            if n > 62 {
                assert_eq!(s.as_bytes()[0], 126);
                assert_eq!(s.as_bytes()[1..4], [63 + (n >> 12) as u8, 63 + ((n >> 6) & 63) as u8, 63 + (n & 63) as u8]);
            }
            assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        }
        // Six-byte header form for a small n is still decodable.
        let mut s = vec![126, 126, 63, 63, 63, 63, 63, 67];
        s.extend(b"~");
        assert_eq!(parse_graph6(&s).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn edge_list_examples() {
        let p3 = edges("0 1\n1 2\n");
        assert_eq!(p3.graph, path(3).unwrap());
        let single = edges("# comment\n5 9\n9 5\n");
        assert_eq!(single.graph.edge_count(), 1);
        assert_eq!(single.stats.duplicate_edges, 1);
        assert_eq!(single.labels, vec!["5", "9"]);
        let loops = edges("% header\na a\na b\n\n");
        assert_eq!(loops.stats.self_loops, 1);
        assert_eq!(loops.graph.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors_and_options() {
        let err = parse_edge_list("1 2 3\n".as_bytes(), &EdgeListOptions::default());
        assert!(matches!(err, Err(Error::EdgeList { line: 1, .. })));
        let numeric = EdgeListOptions {
            numeric: true,
            ..Default::default()
        };
        assert!(parse_edge_list("1 x\n".as_bytes(), &numeric).is_err());
        let weighted = EdgeListOptions {
            first_two_columns: true,
            commas: true,
            ..Default::default()
        };
        let g = parse_edge_list("1,2,0.5\n2,3,1.0\n".as_bytes(), &weighted).unwrap();
        assert_eq!(g.graph, path(3).unwrap());
        let csv = EdgeListOptions {
            commas: true,
            skip_header: true,
            numeric: true,
            ..Default::default()
        };
        let g = parse_edge_list("node_1,node_2\n0,1\n1,2\n".as_bytes(), &csv).unwrap();
        assert_eq!(g.graph, path(3).unwrap());
        let mtx = EdgeListOptions {
            skip_header: true,
            first_two_columns: true,
            ..Default::default()
        };
        let g = parse_edge_list("%%MatrixMarket\n% c\n3 3 2\n1 2\n2 3\n".as_bytes(), &mtx).unwrap();
        assert_eq!(g.graph, path(3).unwrap());
    }

    #[test]
    fn sorted_labels_ignore_line_order() {
        let opts = EdgeListOptions {
            label_order: LabelOrder::Sorted,
            ..Default::default()
        };
        let a = parse_edge_list("10 2\n2 3\n".as_bytes(), &opts).unwrap();
        let b = parse_edge_list("3 2\n2 10\n2 3\n".as_bytes(), &opts).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.labels, vec!["2", "3", "10"]);
    }

    #[test]
    fn largest_component_rules() {
        let conn = edges("0 1\n1 2\n");
        assert_eq!(largest_component(&conn), conn);

        let two = edges("a b\nb c\nc d\nd e\nx y\ny z\n");
        let big = largest_component(&two);
        assert_eq!(big.graph.n(), 5);
        assert_eq!(big.stats.dropped_vertices, 3);
        assert_eq!(big.labels, vec!["a", "b", "c", "d", "e"]);

        let tie = edges("7 8\n8 9\n10 2\n2 3\n");
        let pick = largest_component(&tie);
        assert_eq!(pick.labels, vec!["10", "2", "3"]);
        assert_eq!(pick.stats.dropped_vertices, 3);
    }
}
