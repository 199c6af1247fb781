//! DIMACS edge (`p edge n m`, `e u v`) and CNF (`p cnf n m`) formats.
//!
//! Lines starting with `c` are comments. Emission is canonical: sorted edges
//! for graphs, stored order for clauses, one trailing newline.

use super::{CnfFormula, Graph, Lit, ParseError};

struct Header {
    first: usize,
    second: usize,
}

fn parse_header(line: usize, toks: &[&str], kind: &'static str) -> Result<Header, ParseError> {
    if toks.len() != 4 || toks[0] != "p" || toks[1] != kind {
        return Err(ParseError::MalformedHeader {
            line,
            msg: format!("expected `p {kind} <n> <m>`"),
        });
    }
    let number = |t: &str| {
        t.parse::<usize>().map_err(|_| ParseError::MalformedHeader {
            line,
            msg: format!("bad count {t:?}"),
        })
    };
    Ok(Header { first: number(toks[2])?, second: number(toks[3])? })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') {
            None
        } else {
            Some((i + 1, s.split_whitespace().collect()))
        }
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line, toks) = lines.next().ok_or(ParseError::MissingHeader("edge"))?;
    let header = parse_header(line, &toks, "edge")?;
    let n = header.first;
    let mut g = Graph::empty(n);
    let mut count = 0usize;
    for (line, toks) in lines {
        if toks[0] == "p" {
            return Err(ParseError::MalformedHeader { line, msg: "second header".into() });
        }
        if toks[0] != "e" || toks.len() != 3 {
            return Err(ParseError::MalformedLine { line, msg: "expected `e <u> <v>`".into() });
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&toks[1..]) {
            let v: i64 = tok.parse().map_err(|_| ParseError::MalformedLine {
                line,
                msg: format!("bad vertex {tok:?}"),
            })?;
            if v < 1 || v as u64 > n as u64 {
                return Err(ParseError::IndexOutOfRange { line, index: v, max: n });
            }
            *slot = v as usize - 1;
        }
        let [u, v] = ends;
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u + 1 });
        }
        if !g.link(u, v) {
            return Err(ParseError::DuplicateEdge { line, u: u + 1, v: v + 1 });
        }
        count += 1;
    }
    if count != header.second {
        return Err(ParseError::CountMismatch {
            what: "edges",
            declared: header.second,
            found: count,
        });
    }
    Ok(g)
}

pub fn emit_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(16 + edges.len() * 12);
    out.push_str(&format!("p edge {} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut lines = content_lines(text);
    let (line, toks) = lines.next().ok_or(ParseError::MissingHeader("cnf"))?;
    let header = parse_header(line, &toks, "cnf")?;
    let n = header.first;
    let mut clauses = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    let mut last_line = line;
    for (line, toks) in lines {
        last_line = line;
        if toks[0] == "p" {
            return Err(ParseError::MalformedHeader { line, msg: "second header".into() });
        }
        if toks[0] == "%" {
            // SATLIB end marker.
            break;
        }
        for tok in toks {
            let lit: i64 = tok.parse().map_err(|_| ParseError::MalformedLine {
                line,
                msg: format!("bad literal {tok:?}"),
            })?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(ParseError::EmptyClause { line });
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = lit.unsigned_abs();
            if var > n as u64 {
                return Err(ParseError::IndexOutOfRange { line, index: lit, max: n });
            }
            let var = var as usize - 1;
            if current.iter().any(|l| l.var == var) {
                return Err(ParseError::RepeatedVariable { line, var: var + 1 });
            }
            current.push(Lit { var, positive: lit > 0 });
        }
    }
    if !current.is_empty() {
        return Err(ParseError::MalformedLine {
            line: last_line,
            msg: "clause not terminated by 0".into(),
        });
    }
    if clauses.len() != header.second {
        return Err(ParseError::CountMismatch {
            what: "clauses",
            declared: header.second,
            found: clauses.len(),
        });
    }
    Ok(CnfFormula::new(n, clauses).expect("validated while parsing"))
}

pub fn emit_cnf(f: &CnfFormula) -> String {
    use super::Constraints;
    let mut out = format!("p cnf {} {}\n", f.var_count(), f.clause_count());
    for clause in f.clauses() {
        for lit in clause {
            out.push_str(&lit.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three() {
        let g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn graph_errors_are_distinct() {
        assert!(matches!(
            parse_graph("p edge 2 1\ne 1 1\n"),
            Err(ParseError::SelfLoop { line: 2, vertex: 1 })
        ));
        assert!(matches!(
            parse_graph("p edge 2 2\ne 1 2\ne 2 1\n"),
            Err(ParseError::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("p edge 2 1\ne 1 3\n"),
            Err(ParseError::IndexOutOfRange { index: 3, .. })
        ));
        assert!(matches!(parse_graph("p edge x 1\n"), Err(ParseError::MalformedHeader { .. })));
        assert!(matches!(parse_graph("p cnf 2 1\n"), Err(ParseError::MalformedHeader { .. })));
        assert!(matches!(parse_graph(""), Err(ParseError::MissingHeader(_))));
        assert!(matches!(parse_graph("p edge 2 1\nf 1 2\n"), Err(ParseError::MalformedLine { .. })));
        assert!(matches!(parse_graph("p edge 2 0\ne 1 2\n"), Err(ParseError::CountMismatch { .. })));
    }

    #[test]
    fn canonical_emission() {
        assert_eq!(emit_graph(&Graph::empty(0)), "p edge 0 0\n");
        assert_eq!(emit_graph(&Graph::complete(3)), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
        let g = parse_graph("c comment\np edge 3 2\ne 3 2\ne 2 1\n").unwrap();
        assert_eq!(emit_graph(&g), "p edge 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn cnf_transcription() {
        let f = parse_cnf("p cnf 2 1\n1 -2 0\n").unwrap();
        assert_eq!(f.clauses(), &[vec![Lit::pos(0), Lit::neg(1)]]);
        assert_eq!(emit_cnf(&f), "p cnf 2 1\n1 -2 0\n");
        // clauses may span lines
        let g = parse_cnf("p cnf 3 2\n1 2\n3 0 -1 0\n").unwrap();
        assert_eq!(g.clause_count(), 2);
    }

    #[test]
    fn cnf_errors() {
        assert!(matches!(parse_cnf("p cnf 2 1\n0\n"), Err(ParseError::EmptyClause { .. })));
        assert!(matches!(parse_cnf("p cnf 2 1\n1 -1 0\n"), Err(ParseError::RepeatedVariable { .. })));
        assert!(matches!(parse_cnf("p cnf 2 1\n3 0\n"), Err(ParseError::IndexOutOfRange { .. })));
        assert!(matches!(parse_cnf("p cnf 2 1\n1 2\n"), Err(ParseError::MalformedLine { .. })));
        assert!(matches!(parse_cnf("p cnf 2 2\n1 2 0\n"), Err(ParseError::CountMismatch { .. })));
        assert!(matches!(parse_cnf("p cnf 2 1\n1 x 0\n"), Err(ParseError::MalformedLine { .. })));
    }
}
