use super::{Graph, GraphError};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line: lineno,
            message: format!("missing {what}"),
        })?;
        tok.parse::<usize>().map_err(|_| GraphError::Parse {
            line: lineno,
            message: format!("{what} {tok:?} is not a non-negative integer"),
        })
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(GraphError::Parse {
            line: lineno,
            message: format!("unexpected trailing token {extra:?}"),
        });
    }
    Ok((a, b))
}

/// Parses the `n m` header followed by `m` lines of `u v` (0-based).
///
/// Blank lines are ignored. Duplicate edges collapse into one.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_pair(header, hline)?;

    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (lineno, line) in lines {
        if seen == m {
            return Err(GraphError::Parse {
                line: lineno,
                message: format!("more than the declared {m} edge lines"),
            });
        }
        let (u, v) = parse_pair(line, lineno)?;
        if u >= n || v >= n {
            return Err(GraphError::Parse {
                line: lineno,
                message: format!("endpoint {} is not below n = {n}", u.max(v)),
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop {
                line: lineno,
                vertex: u,
            });
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen < m {
        return Err(GraphError::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {m} edge lines, found {seen}"),
        });
    }
    Ok(g)
}

/// Writes the edge-list format read by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
