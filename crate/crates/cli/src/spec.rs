//! Graph arguments: `family[:params]`, `join(A,B)`, `cartesian(A,B)` and
//! `g6:<graph6>`.
//!
//! Parameters are comma separated, so `cartesian(complete_bipartite:3,2,path:2)`
//! reads as `K_{3,2} □ P_2`: a comma followed by a digit continues the
//! parameter list.

use fools_core::graph::{cartesian, join, make_named, parse_graph6, Graph, VertexSet};

pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let mut p = Parser { s: text.trim().as_bytes(), at: 0 };
    let g = p.graph()?;
    if p.at != p.s.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    s: &'a [u8],
    at: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> String {
        format!("graph spec, column {}: {msg}", self.at + 1)
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.at).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), String> {
        if self.peek() == Some(c) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
        let start = self.at;
        while self.peek().is_some_and(&f) {
            self.at += 1;
        }
        std::str::from_utf8(&self.s[start..self.at]).expect("input was a str")
    }

    fn graph(&mut self) -> Result<Graph, String> {
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_').to_string();
        if name.is_empty() {
            return Err(self.error("expected a family name, join(...), cartesian(...) or g6:..."));
        }
        match (name.as_str(), self.peek()) {
            ("join" | "cartesian", Some(b'(')) => {
                self.at += 1;
                let a = self.graph()?;
                self.eat(b',')?;
                let b = self.graph()?;
                self.eat(b')')?;
                let out = if name == "join" {
                    join(&a, &b)
                } else {
                    cartesian(&a, &b).map(|(g, _)| g)
                };
                out.map_err(|e| e.to_string())
            }
            ("g6", Some(b':')) => {
                self.at += 1;
                let lit = self.take_while(|c| c != b',' && c != b')');
                parse_graph6(lit).map_err(|e| format!("graph6 literal `{lit}`: {e}"))
            }
            (_, Some(b':')) => {
                self.at += 1;
                let mut params = vec![self.number()?];
                while self.peek() == Some(b',') && self.s.get(self.at + 1).is_some_and(u8::is_ascii_digit) {
                    self.at += 1;
                    params.push(self.number()?);
                }
                make_named(&name, &params).map_err(|e| e.to_string())
            }
            _ => make_named(&name, &[]).map_err(|e| e.to_string()),
        }
    }

    fn number(&mut self) -> Result<usize, String> {
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| self.error("expected a number"))
    }
}

/// A vertex set written as `0,2,5`, as a hex bitset `0x25`, or as `-` for the
/// empty set.
pub fn parse_set(text: &str) -> Result<VertexSet, String> {
    let text = text.trim();
    if text == "-" || text.is_empty() {
        return Ok(VertexSet::EMPTY);
    }
    if let Some(hex) = text.strip_prefix("0x") {
        return u64::from_str_radix(hex, 16)
            .map(VertexSet)
            .map_err(|e| format!("bad bitset `{text}`: {e}"));
    }
    text.split(',')
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v < 64)
                .ok_or_else(|| format!("bad vertex `{v}` in `{text}`"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use fools_core::graph::families::*;

    #[test]
    fn families_and_composites() {
        assert_eq!(parse_graph("path:5").unwrap(), path(5));
        assert_eq!(parse_graph("petersen").unwrap(), petersen());
        assert_eq!(parse_graph("cartesian(path:3,complete:3)").unwrap(), product(&path(3), &complete(3)));
        assert_eq!(
            parse_graph("join(empty:3,complete:1)").unwrap(),
            join(&edgeless(3), &complete(1)).unwrap()
        );
        assert_eq!(
            parse_graph("cartesian(complete_bipartite:3,2,path:2)").unwrap(),
            product(&complete_bipartite(3, 2), &path(2))
        );
        let g = parse_graph("g6:D?{").unwrap();
        assert_eq!((g.n(), g.degree(4), g.edge_count()), (5, 4, 4));
        assert_eq!(parse_graph("join(g6:A_,path:2)").unwrap(), complete(4));
    }

    #[test]
    fn errors() {
        for bad in ["", "path:", "cartesian(path:3)", "join(path:2,path:2", "wheel:5", "path:3)", "g6:~~~"] {
            assert!(parse_graph(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn sets() {
        assert_eq!(parse_set("0,2").unwrap(), VertexSet(0b101));
        assert_eq!(parse_set("0x5").unwrap(), VertexSet(0b101));
        assert_eq!(parse_set("-").unwrap(), VertexSet::EMPTY);
        assert!(parse_set("1,x").is_err());
        assert!(parse_set("64").is_err());
    }
}
