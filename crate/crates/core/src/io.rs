//! Text formats.
//!
//! Graph file:
//!
//! ```text
//! split-hc v1 <n> <m>
//! partition K: <indices>      (optional)
//! <u> <v>                     (m lines, u < v, sorted)
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. A cycle file holds
//! the vertex order on whitespace-separated lines, with the same comments.

use crate::error::{Error, Result};
use crate::graph::{Graph, HamCycle};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub partition: Option<Vec<usize>>,
    /// Non-fatal findings such as duplicate edges.
    pub warnings: Vec<String>,
}

pub fn render_graph(g: &Graph, partition: Option<&[usize]>) -> String {
    let mut out = format!("split-hc v1 {} {}\n", g.n(), g.m());
    if let Some(k) = partition {
        let mut k = k.to_vec();
        k.sort_unstable();
        out.push_str("partition K:");
        for v in k {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("expected a vertex index, got {s:?}") })
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.len() != 4 || words[0] != "split-hc" || words[1] != "v1" {
        return Err(Error::Parse { line: hl, msg: format!("expected header `split-hc v1 <n> <m>`, got {header:?}") });
    }
    let n = parse_num(hl, words[2])?;
    let m = parse_num(hl, words[3])?;
    let mut partition = None;
    let mut edges = Vec::with_capacity(m);
    let mut warnings = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut edge_lines = 0;
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("partition K:") {
            if partition.is_some() || edge_lines > 0 {
                return Err(Error::Parse { line: ln, msg: "partition line must come once, before the edges".into() });
            }
            let mut k = Vec::new();
            for w in rest.split_whitespace() {
                let v = parse_num(ln, w)?;
                if v >= n {
                    return Err(Error::Parse { line: ln, msg: format!("vertex {v} out of range (n = {n})") });
                }
                k.push(v);
            }
            partition = Some(k);
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.len() != 2 {
            return Err(Error::Parse { line: ln, msg: format!("expected `<u> <v>`, got {line:?}") });
        }
        let (u, v) = (parse_num(ln, words[0])?, parse_num(ln, words[1])?);
        edge_lines += 1;
        if u >= n || v >= n {
            return Err(Error::Parse { line: ln, msg: format!("edge {u} {v} out of range (n = {n})") });
        }
        if u == v {
            return Err(Error::Parse { line: ln, msg: format!("self-loop at {u}") });
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            warnings.push(format!("line {ln}: duplicate edge {} {} ignored", e.0, e.1));
            continue;
        }
        edges.push(e);
    }
    if edge_lines != m {
        return Err(Error::Parse { line: hl, msg: format!("header announces {m} edges, found {edge_lines}") });
    }
    let graph = Graph::from_edges(n, &edges)?;
    Ok(GraphFile { graph, partition, warnings })
}

pub fn render_cycle(c: &HamCycle) -> String {
    let words: Vec<String> = c.order().iter().map(|v| v.to_string()).collect();
    format!("{}\n", words.join(" "))
}

pub fn parse_cycle(text: &str) -> Result<HamCycle> {
    let mut order = Vec::new();
    for (ln, line) in content_lines(text) {
        for w in line.split(|c: char| c.is_whitespace() || c == ',').filter(|w| !w.is_empty()) {
            order.push(parse_num(ln, w)?);
        }
    }
    Ok(HamCycle(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle() {
        let f = parse_graph("split-hc v1 3 3\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(f.graph, Graph::complete(3));
        assert!(f.partition.is_none());
        assert!(f.warnings.is_empty());
    }

    #[test]
    fn normalizes() {
        let text = "# comment\nsplit-hc v1 4 4\npartition K: 2 0 1\n\n2 1\n0 1\n# mid\n0 2\n3 0\n";
        let f = parse_graph(text).unwrap();
        let out = render_graph(&f.graph, f.partition.as_deref());
        assert_eq!(out, "split-hc v1 4 4\npartition K: 0 1 2\n0 1\n0 2\n0 3\n1 2\n");
        let again = parse_graph(&out).unwrap();
        assert_eq!(render_graph(&again.graph, again.partition.as_deref()), out);
    }

    #[test]
    fn errors() {
        let line_of = |t: &str| match parse_graph(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line_of("split-hc v1 3 1\n1 1\n"), 2);
        assert_eq!(line_of("split-hc v2 3 0\n"), 1);
        assert_eq!(line_of("split-hc v1 3 1\n0 3\n"), 2);
        assert_eq!(line_of("split-hc v1 3 1\n0 x\n"), 2);
        assert_eq!(line_of("split-hc v1 3 2\n0 1\n"), 1);
        assert_eq!(line_of(""), 1);
    }

    #[test]
    fn duplicates_warn() {
        let f = parse_graph("split-hc v1 3 3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(f.graph.m(), 2);
        assert_eq!(f.warnings.len(), 1);
    }

    #[test]
    fn cycles() {
        let c = HamCycle(vec![3, 0, 2, 1]);
        assert_eq!(render_cycle(&c), "3 0 2 1\n");
        assert_eq!(parse_cycle("# c\n3 0\n2,1\n").unwrap(), c);
        assert!(parse_cycle("0 a").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut edges = Vec::new();
            let mut j = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[j % bits.len()] {
                        edges.push((a, b));
                    }
                    j += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let text = render_graph(&g, None);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(&back.graph, &g);
            prop_assert_eq!(render_graph(&back.graph, None), text);
        }
    }
}
