//! CNF formulas, DIMACS input and a brute-force satisfiability oracle.

use std::fmt;

use crate::error::{Error, Result};

/// Largest variable count the enumeration oracle accepts.
pub const MAX_ORACLE_VARS: usize = 24;

/// A literal `x_var` or `¬x_var`; variables are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    /// DIMACS encoding: `var` or `-var`.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        if value == 0 {
            return None;
        }
        Some(Literal {
            var: value.unsigned_abs() as usize,
            positive: value > 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Literals are sorted and deduplicated within each clause.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::Domain(
                "a formula needs at least one variable".into(),
            ));
        }
        let clauses = clauses
            .into_iter()
            .map(|mut c| {
                if let Some(l) = c.iter().find(|l| l.var == 0 || l.var > num_vars) {
                    return Err(Error::Domain(format!(
                        "literal on variable {} outside 1..={num_vars}",
                        l.var
                    )));
                }
                c.sort();
                c.dedup();
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Convenience constructor from DIMACS-style signed integers.
    pub fn from_ints(num_vars: usize, clauses: &[&[i64]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| {
                        Literal::from_dimacs(v)
                            .ok_or_else(|| Error::Domain("0 is not a literal".into()))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        CnfFormula::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Whether literal `lit` occurs in clause `i` (1-based).
    pub fn clause_contains(&self, i: usize, lit: Literal) -> bool {
        self.clauses[i - 1].binary_search(&lit).is_ok()
    }

    pub fn evaluate(&self, assignment: &TruthAssignment) -> bool {
        assert_eq!(assignment.len(), self.num_vars, "assignment length");
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| assignment.value(l.var) == l.positive))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&l.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parses DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header,
/// then 0-terminated clauses that may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('c') {
            continue;
        }
        if content.starts_with('%') {
            break;
        }
        if content.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line, "duplicate problem line"));
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let parsed = match tokens.as_slice() {
                ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(
                parsed.ok_or_else(|| Error::parse(line, "expected `p cnf <vars> <clauses>`"))?,
            );
            continue;
        }
        let (num_vars, _) =
            header.ok_or_else(|| Error::parse(line, "clause before `p cnf` header"))?;
        for token in content.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| Error::parse(line, format!("`{token}` is not an integer")))?;
            match Literal::from_dimacs(value) {
                None => clauses.push(std::mem::take(&mut current)),
                Some(lit) if lit.var > num_vars => {
                    return Err(Error::parse(
                        line,
                        format!("variable {} exceeds declared {num_vars}", lit.var),
                    ))
                }
                Some(lit) => current.push(lit),
            }
        }
    }
    let (num_vars, num_clauses) =
        header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p cnf` header"))?;
    if !current.is_empty() {
        return Err(Error::parse(
            last_line,
            "last clause is not terminated by 0",
        ));
    }
    if clauses.len() != num_clauses {
        return Err(Error::parse(
            last_line,
            format!(
                "header declares {num_clauses} clauses, found {}",
                clauses.len()
            ),
        ));
    }
    CnfFormula::new(num_vars, clauses).map_err(|e| Error::parse(1, e.to_string()))
}

/// Truth values for `x_1..x_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthAssignment(Vec<bool>);

impl TruthAssignment {
    pub fn new(values: Vec<bool>) -> Self {
        TruthAssignment(values)
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        TruthAssignment(bits.iter().map(|&b| b != 0).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of `x_var` (1-based).
    pub fn value(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }
}

impl fmt::Debug for TruthAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = self.0.iter().map(|&b| if b { '1' } else { '0' }).collect();
        write!(f, "τ({bits})")
    }
}

/// Enumerates assignments in binary order (`x_1` most significant) and
/// returns the first satisfying one.
pub fn brute_force_sat(formula: &CnfFormula) -> Result<Option<TruthAssignment>> {
    let n = formula.num_vars();
    if n > MAX_ORACLE_VARS {
        return Err(Error::Capacity(format!(
            "{n} variables exceed the enumeration bound of {MAX_ORACLE_VARS}"
        )));
    }
    let bit = |var: usize| 1u32 << (n - var);
    let masks: Vec<(u32, u32)> = formula
        .clauses()
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(pos, neg), l| {
                if l.positive {
                    (pos | bit(l.var), neg)
                } else {
                    (pos, neg | bit(l.var))
                }
            })
        })
        .collect();
    let found = (0u32..1 << n).find(|&a| {
        masks
            .iter()
            .all(|&(pos, neg)| a & pos != 0 || !a & neg != 0)
    });
    Ok(found.map(|a| TruthAssignment((1..=n).map(|v| a & bit(v) != 0).collect())))
}
