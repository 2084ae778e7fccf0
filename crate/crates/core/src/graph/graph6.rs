//! graph6 short form: one size byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`)
//! packed big-endian into 6-bit groups, each offset by 63.

use super::{Graph, GraphError};

const MAX_SHORT: usize = 62;

pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > MAX_SHORT {
        return Err(GraphError::Graph6TooLarge(n));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(GraphError::Graph6InvalidByte { byte, offset });
        }
    }
    let Some((&size, data)) = bytes.split_first() else {
        return Err(GraphError::Graph6Truncated {
            expected: 1,
            found: 0,
        });
    };
    let n = (size - 63) as usize;
    if n > MAX_SHORT {
        // 126 introduces the long form
        return Err(GraphError::Graph6TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(GraphError::Graph6Truncated {
            expected,
            found: data.len(),
        });
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = data[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
