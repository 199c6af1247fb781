//! Systems of 3-variable GF(2) equations and the `p lin3` text format.
//!
//! ```text
//! c optional comments
//! p lin3 <variables> <equations>
//! <i> <j> <k> <b>      one equation x_i + x_j + x_k = b (mod 2), 1-indexed
//! ```

use super::{Assignment, Constraints, InstanceError, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinEquation {
    pub vars: [usize; 3],
    pub rhs: bool,
}

impl LinEquation {
    pub fn holds(&self, a: &Assignment) -> bool {
        (a.get(self.vars[0]) ^ a.get(self.vars[1]) ^ a.get(self.vars[2])) == self.rhs
    }

    /// The four local assignments to `vars` that satisfy the equation, in
    /// lexicographic order.
    pub fn satisfying_local(&self) -> Vec<[bool; 3]> {
        (0..8u8)
            .map(|m| [m & 4 != 0, m & 2 != 0, m & 1 != 0])
            .filter(|v| (v[0] ^ v[1] ^ v[2]) == self.rhs)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinSystem {
    var_count: usize,
    equations: Vec<LinEquation>,
}

impl LinSystem {
    pub fn new(var_count: usize, equations: Vec<LinEquation>) -> Result<Self, InstanceError> {
        for (index, eq) in equations.iter().enumerate() {
            for (j, &var) in eq.vars.iter().enumerate() {
                if var >= var_count {
                    return Err(InstanceError::VariableOutOfRange { var, var_count });
                }
                if eq.vars[..j].contains(&var) {
                    return Err(InstanceError::RepeatedVariable { index, var });
                }
            }
        }
        Ok(Self { var_count, equations })
    }

    pub fn equations(&self) -> &[LinEquation] {
        &self.equations
    }

    pub fn equation_count(&self) -> usize {
        self.equations.len()
    }
}

impl Constraints for LinSystem {
    fn var_count(&self) -> usize {
        self.var_count
    }

    fn constraint_count(&self) -> usize {
        self.equations.len()
    }

    fn satisfies(&self, index: usize, a: &Assignment) -> bool {
        self.equations[index].holds(a)
    }
}

pub fn parse_lin3(text: &str) -> Result<LinSystem, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut equations = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() {
                return Err(ParseError::MalformedHeader { line, msg: "second header".into() });
            }
            if toks.len() != 4 || toks[1] != "lin3" {
                return Err(ParseError::MalformedHeader {
                    line,
                    msg: "expected `p lin3 <vars> <equations>`".into(),
                });
            }
            let n = toks[2].parse().map_err(|_| ParseError::MalformedHeader {
                line,
                msg: format!("bad variable count {:?}", toks[2]),
            })?;
            let m = toks[3].parse().map_err(|_| ParseError::MalformedHeader {
                line,
                msg: format!("bad equation count {:?}", toks[3]),
            })?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or(ParseError::MissingHeader("lin3"))?;
        if toks.len() != 4 {
            return Err(ParseError::MalformedLine { line, msg: "expected `i j k b`".into() });
        }
        let mut vars = [0usize; 3];
        for (slot, tok) in vars.iter_mut().zip(&toks[..3]) {
            let v: i64 = tok.parse().map_err(|_| ParseError::MalformedLine {
                line,
                msg: format!("bad variable {tok:?}"),
            })?;
            if v < 1 || v as u64 > n as u64 {
                return Err(ParseError::IndexOutOfRange { line, index: v, max: n });
            }
            *slot = v as usize - 1;
        }
        for j in 1..3 {
            if vars[..j].contains(&vars[j]) {
                return Err(ParseError::RepeatedVariable { line, var: vars[j] + 1 });
            }
        }
        let rhs = match toks[3] {
            "0" => false,
            "1" => true,
            other => {
                return Err(ParseError::MalformedLine {
                    line,
                    msg: format!("right-hand side must be 0 or 1, got {other:?}"),
                })
            }
        };
        equations.push(LinEquation { vars, rhs });
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader("lin3"))?;
    if m != equations.len() {
        return Err(ParseError::CountMismatch {
            what: "equations",
            declared: m,
            found: equations.len(),
        });
    }
    Ok(LinSystem::new(n, equations).expect("validated while parsing"))
}

pub fn emit_lin3(sys: &LinSystem) -> String {
    let mut out = format!("p lin3 {} {}\n", sys.var_count, sys.equations.len());
    for eq in &sys.equations {
        out.push_str(&format!(
            "{} {} {} {}\n",
            eq.vars[0] + 1,
            eq.vars[1] + 1,
            eq.vars[2] + 1,
            eq.rhs as u8
        ));
    }
    out
}
