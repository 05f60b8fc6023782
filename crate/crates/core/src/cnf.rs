//! 3-CNF formulas, truth assignments and DIMACS input.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: malformed header `{text}`")]
    Header { line: usize, text: String },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("line {line}: `{token}` is not an integer literal")]
    BadLiteral { line: usize, token: String },
    #[error("clause {clause} has {arity} literals, expected 3")]
    Arity { clause: usize, arity: usize },
    #[error("literal {literal} is out of range for {vars} variables")]
    VariableRange { literal: i64, vars: usize },
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCount { declared: usize, found: usize },
    #[error("formula needs at least one variable and one clause")]
    Empty,
    #[error("assignment covers {got} variables, formula has {expected}")]
    AssignmentSize { got: usize, expected: usize },
}

/// A literal over variable `var` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Self { var, positive: false }
    }

    pub fn from_dimacs(x: i64) -> Self {
        Self {
            var: x.unsigned_abs() as usize,
            positive: x > 0,
        }
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn holds(self, a: &Assignment) -> bool {
        a.value(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "¬x{}", self.var)
        }
    }
}

/// φ = c₁ ∧ … ∧ c_m with exactly three literals per clause. Repeated literals
/// are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self, CnfError> {
        if vars == 0 || clauses.is_empty() {
            return Err(CnfError::Empty);
        }
        for lit in clauses.iter().flatten() {
            if lit.var == 0 || lit.var > vars {
                return Err(CnfError::VariableRange {
                    literal: lit.to_dimacs(),
                    vars,
                });
            }
        }
        Ok(Self { vars, clauses })
    }

    /// Clauses given as DIMACS integers.
    pub fn from_ints(vars: usize, clauses: &[[i64; 3]]) -> Result<Self, CnfError> {
        let clauses = clauses
            .iter()
            .map(|c| c.map(Literal::from_dimacs))
            .collect();
        Self::new(vars, clauses)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn evaluate(&self, a: &Assignment) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|lit| lit.holds(a)))
    }

    /// First satisfying assignment in truth-table order (x₁ as the low bit).
    pub fn brute_force(&self) -> Option<Assignment> {
        assert!(self.vars < 32, "truth table too large");
        (0u32..1 << self.vars)
            .map(|bits| Assignment::new((0..self.vars).map(|i| bits >> i & 1 == 1).collect()))
            .find(|a| self.evaluate(a))
    }

    pub fn is_satisfiable(&self) -> bool {
        self.brute_force().is_some()
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.vars, self.clauses.len());
        for c in &self.clauses {
            let lits: Vec<String> = c.iter().map(|l| l.to_dimacs().to_string()).collect();
            s.push_str(&lits.join(" "));
            s.push_str(" 0\n");
        }
        s
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| format!("({} ∨ {} ∨ {})", c[0], c[1], c[2]))
            .collect();
        f.write_str(&parts.join(" ∧ "))
    }
}

/// Truth values for x₁..x_n, plus a flag for variables that were not pinned
/// by the witness they were read from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
    unconstrained: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        let unconstrained = vec![false; values.len()];
        Self {
            values,
            unconstrained,
        }
    }

    pub fn with_flags(values: Vec<bool>, unconstrained: Vec<bool>) -> Self {
        assert_eq!(values.len(), unconstrained.len());
        Self {
            values,
            unconstrained,
        }
    }

    /// Value of variable `var` (1-based).
    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn is_unconstrained(&self, var: usize) -> bool {
        self.unconstrained[var - 1]
    }

    pub fn unconstrained(&self) -> &[bool] {
        &self.unconstrained
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Parses DIMACS-style literals (`"1 -2 3"`); unmentioned variables are false.
    pub fn parse_literals(text: &str, vars: usize) -> Result<Self, CnfError> {
        let mut values = vec![false; vars];
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let x: i64 = tok.parse().map_err(|_| CnfError::BadLiteral {
                line: 1,
                token: tok.to_string(),
            })?;
            if x == 0 {
                continue;
            }
            let lit = Literal::from_dimacs(x);
            if lit.var > vars {
                return Err(CnfError::VariableRange { literal: x, vars });
            }
            values[lit.var - 1] = lit.positive;
        }
        Ok(Self::new(values))
    }
}

/// Parses DIMACS CNF with exactly three literals per clause. Comment lines
/// (`c ...`) are skipped and a `%` line ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            if header.is_some() || parsed.is_none() {
                return Err(CnfError::Header {
                    line: line_no,
                    text: line.to_string(),
                });
            }
            header = parsed;
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(CnfError::MissingHeader);
        };
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| CnfError::BadLiteral {
                line: line_no,
                token: tok.to_string(),
            })?;
            if x == 0 {
                let clause = std::mem::take(&mut current);
                if clause.len() != 3 {
                    return Err(CnfError::Arity {
                        clause: clauses.len() + 1,
                        arity: clause.len(),
                    });
                }
                clauses.push([clause[0], clause[1], clause[2]].map(Literal::from_dimacs));
            } else {
                if x.unsigned_abs() as usize > vars {
                    return Err(CnfError::VariableRange { literal: x, vars });
                }
                current.push(x);
            }
        }
    }
    let (vars, declared) = header.ok_or(CnfError::MissingHeader)?;
    if !current.is_empty() {
        return Err(CnfError::Arity {
            clause: clauses.len() + 1,
            arity: current.len(),
        });
    }
    if declared != clauses.len() {
        return Err(CnfError::ClauseCount {
            declared,
            found: clauses.len(),
        });
    }
    CnfFormula::new(vars, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_clause() {
        let f = parse_dimacs("c example\np cnf 3 1\n1 2 3 0\n").unwrap();
        assert_eq!(f, CnfFormula::from_ints(3, &[[1, 2, 3]]).unwrap());
        assert!(f.is_satisfiable());
    }

    #[test]
    fn parses_unsatisfiable_pair() {
        let f = parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0").unwrap();
        assert_eq!(f.clauses().len(), 2);
        assert!(!f.is_satisfiable());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 2 0"),
            Err(CnfError::Arity { arity: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 2 3 0"),
            Err(CnfError::VariableRange { literal: 3, .. })
        ));
        assert!(matches!(parse_dimacs("p dnf 2 1\n"), Err(CnfError::Header { .. })));
        assert!(matches!(parse_dimacs("1 2 3 0"), Err(CnfError::MissingHeader)));
        assert!(matches!(
            parse_dimacs("p cnf 3 2\n1 2 3 0"),
            Err(CnfError::ClauseCount { .. })
        ));
    }

    #[test]
    fn clauses_may_span_lines_and_stop_at_percent() {
        let f = parse_dimacs("p cnf 3 1\n1 -2\n3 0\n%\n0\n").unwrap();
        assert_eq!(f.clauses()[0][1], Literal::neg(2));
    }

    #[test]
    fn dimacs_round_trip() {
        let f = CnfFormula::from_ints(3, &[[1, -2, 3], [-1, -1, 2]]).unwrap();
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn assignment_literals() {
        let a = Assignment::parse_literals("1 -2 3", 3).unwrap();
        assert_eq!(a.values(), &[true, false, true]);
        assert!(Assignment::parse_literals("4", 3).is_err());
    }
}
