//! The line-oriented `DFA v1` text format.
//!
//! ```text
//! DFA v1
//! states 2
//! letters 2
//! 1 0
//! 1 1
//! label 1 sink
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Blank lines are
//! ignored. Row `i` lists the targets of state `i` under letters `0..K`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::gadget::LabeledDfa;

pub const HEADER: &str = "DFA v1";

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    parse_dfa_labeled(text).map(|(dfa, _)| dfa)
}

/// Parses an automaton together with its optional `label` lines.
pub fn parse_dfa_labeled(text: &str) -> Result<(Dfa, BTreeMap<usize, String>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["DFA", "v1"] {
        return Err(Error::parse(line, format!("expected `{HEADER}` header")));
    }
    let (last_line, num_states) = keyed_count(lines.next(), "states", line)?;
    let (last_line, num_letters) = keyed_count(lines.next(), "letters", last_line)?;

    let mut delta = Vec::with_capacity(num_states.saturating_mul(num_letters));
    let mut labels = BTreeMap::new();
    let mut rows = 0;
    let mut last_line = last_line;
    for (line, content) in lines {
        last_line = line;
        let mut tokens = content.split_whitespace();
        if content.starts_with("label") {
            tokens.next();
            let index: usize = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(line, "label needs a state index"))?;
            let name = tokens
                .next()
                .ok_or_else(|| Error::parse(line, "label needs a name"))?;
            if tokens.next().is_some() {
                return Err(Error::parse(line, "label names cannot contain whitespace"));
            }
            if index >= num_states {
                return Err(Error::parse(
                    line,
                    format!("label index {index} out of range for {num_states} states"),
                ));
            }
            if labels.insert(index, name.to_string()).is_some() {
                return Err(Error::parse(line, format!("state {index} labelled twice")));
            }
            continue;
        }
        if !labels.is_empty() {
            return Err(Error::parse(line, "transition row after label lines"));
        }
        if rows == num_states {
            return Err(Error::parse(
                line,
                format!("more than the declared {num_states} transition rows"),
            ));
        }
        let row = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("`{t}` is not a state index")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != num_letters {
            return Err(Error::parse(
                line,
                format!("row has {} entries, expected {num_letters}", row.len()),
            ));
        }
        if let Some(&bad) = row.iter().find(|&&t| t >= num_states) {
            return Err(Error::parse(
                line,
                format!("entry {bad} out of range for {num_states} states"),
            ));
        }
        delta.extend(row);
        rows += 1;
    }
    if rows != num_states {
        return Err(Error::parse(
            last_line,
            format!("found {rows} transition rows, expected {num_states}"),
        ));
    }
    let dfa =
        Dfa::new(num_states, num_letters, delta).map_err(|e| Error::parse(1, e.to_string()))?;
    Ok((dfa, labels))
}

fn keyed_count(next: Option<(usize, &str)>, key: &str, prev_line: usize) -> Result<(usize, usize)> {
    let (line, content) =
        next.ok_or_else(|| Error::parse(prev_line + 1, format!("missing `{key}` line")))?;
    let mut tokens = content.split_whitespace();
    if tokens.next() != Some(key) {
        return Err(Error::parse(line, format!("expected `{key} <count>`")));
    }
    let count = tokens
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .filter(|&c| c > 0)
        .ok_or_else(|| Error::parse(line, format!("`{key}` needs a positive integer")))?;
    if tokens.next().is_some() {
        return Err(Error::parse(line, format!("trailing tokens after `{key}`")));
    }
    Ok((line, count))
}

pub fn serialize_dfa(dfa: &Dfa) -> String {
    write_dfa(dfa, std::iter::empty())
}

/// Serializes a gadget with one `label` line per state.
pub fn serialize_labeled(gadget: &LabeledDfa) -> String {
    write_dfa(
        gadget.dfa(),
        gadget
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| (i, l.to_string())),
    )
}

fn write_dfa(dfa: &Dfa, labels: impl Iterator<Item = (usize, String)>) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    let _ = writeln!(out, "states {}", dfa.num_states());
    let _ = writeln!(out, "letters {}", dfa.num_letters());
    for q in 0..dfa.num_states() {
        let row: Vec<String> = dfa.row(q).map(|t| t.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    for (i, name) in labels {
        let _ = writeln!(out, "label {i} {name}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_state_self_loop() {
        let d = parse_dfa("DFA v1\nstates 1\nletters 1\n0\n").unwrap();
        assert_eq!(d.num_states(), 1);
        assert_eq!(d.next(0, 0), 0);
    }

    #[test]
    fn comments_and_labels() {
        let text = "# a comment\nDFA v1\nstates 2 # two\nletters 2\n\n1 0\n1 1\nlabel 1 sink\n";
        let (d, labels) = parse_dfa_labeled(text).unwrap();
        assert_eq!(d.next(0, 0), 1);
        assert_eq!(labels.get(&1).map(String::as_str), Some("sink"));
        let again = parse_dfa(&serialize_dfa(&d)).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn errors_name_the_line() {
        let bad_entry = "DFA v1\nstates 2\nletters 1\n0\n2\n";
        assert_eq!(
            parse_dfa(bad_entry).unwrap_err(),
            Error::parse(5, "entry 2 out of range for 2 states")
        );
        let short = "DFA v1\nstates 3\nletters 1\n0\n0\n";
        assert!(matches!(
            parse_dfa(short),
            Err(Error::Parse { line: 5, .. })
        ));
        let long = "DFA v1\nstates 1\nletters 1\n0\n0\n";
        assert!(matches!(parse_dfa(long), Err(Error::Parse { line: 5, .. })));
        assert!(matches!(
            parse_dfa("DFA v2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_dfa("DFA v1\nstates x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        let wide = "DFA v1\nstates 1\nletters 2\n0\n";
        assert!(matches!(parse_dfa(wide), Err(Error::Parse { line: 4, .. })));
        let bad_label = "DFA v1\nstates 1\nletters 1\n0\nlabel 4 x\n";
        assert!(matches!(
            parse_dfa(bad_label),
            Err(Error::Parse { line: 5, .. })
        ));
    }
}
