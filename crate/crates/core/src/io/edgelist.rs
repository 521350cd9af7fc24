//! Edge-list text: a header line `n <count>`, then one `u v` pair per line. `#` starts a
//! comment; blank lines are skipped; repeated edges are harmless.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Malformed("edge list has no `n <count>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| Error::Malformed(format!("bad vertex count `{count}`")))?,
        _ => return Err(Error::Malformed(format!("expected `n <count>`, got `{header}`"))),
    };
    let mut edges = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::Malformed(format!("line {no}: expected `u v`, got `{line}`")));
        };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::Malformed(format!("line {no}: `{t}` is not a vertex index")))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::from_edge_list(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cycle;

    #[test]
    fn examples() {
        let c4 = parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(c4, cycle(4));
        assert_eq!(parse_edge_list("n 2\n# empty").unwrap(), Graph::empty(2));
        assert_eq!(parse_edge_list("n 2\n0 0"), Err(Error::LoopRejected(0)));
    }

    #[test]
    fn comments_whitespace_duplicates() {
        let g = parse_edge_list("# header\n\n  n   3  \n0 1 # first\n1 0\n\t1  2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Malformed(_))));
        assert!(matches!(parse_edge_list("0 1\n"), Err(Error::Malformed(_))));
        assert!(matches!(parse_edge_list("n 3\n0 1 2"), Err(Error::Malformed(_))));
        assert!(matches!(parse_edge_list("n 3\n0 x"), Err(Error::Malformed(_))));
        assert!(matches!(parse_edge_list("n 3\n0 3"), Err(Error::OutOfRange { vertex: 3, n: 3 })));
    }
}
