//! Profile documents: the human-editable matrix format.
//!
//! Line 1 holds `m n` for a fixed profile or `multi m K` for a
//! multiplicity matrix (followed by one row of K multiplicities); the next
//! m rows list the rank-1..rank-m alternatives of each column. `#` starts
//! a comment; a `# alternatives: ...` comment pins the declared
//! alternative order, which otherwise defaults to the first column.

use std::fmt;
use std::sync::Arc;

use scx_core::multi::{expand, MultiProfile};
use scx_core::{AlternativeSet, Profile, Ranking};

/// A parse failure with the 1-based line it was detected on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub line: usize,
    pub message: String,
}

impl DocError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        DocError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for DocError {}

/// A parsed document: either a fixed-state profile or a multiplicity matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum Doc {
    Fixed(Profile),
    Multi(MultiProfile),
}

impl Doc {
    /// The fixed-state profile the document denotes; multiplicity matrices
    /// are laid out column by column. Fails when the multiplicities sum
    /// past the 64-state cap.
    pub fn to_profile(&self) -> scx_core::Result<Profile> {
        match self {
            Doc::Fixed(p) => Ok(p.clone()),
            Doc::Multi(mp) => expand(mp),
        }
    }
}

pub fn parse_profile(text: &str) -> Result<Doc, DocError> {
    let mut pragma: Option<(usize, Vec<String>)> = None;
    let mut content: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(names) = comment.trim().strip_prefix("alternatives:") {
                if pragma.is_some() {
                    return Err(DocError::new(line, "duplicate alternatives pragma"));
                }
                pragma = Some((line, names.split_whitespace().map(String::from).collect()));
            }
            continue;
        }
        content.push((line, trimmed.split_whitespace().collect()));
    }
    let Some((header_line, header)) = content.first() else {
        return Err(DocError::new(last_line.max(1), "empty document"));
    };
    let (header_line, multi, m, width) = match header.as_slice() {
        [m, n] => {
            let m = parse_count(*header_line, m, "m")?;
            let n = parse_count(*header_line, n, "n")?;
            if n < 2 {
                return Err(DocError::new(
                    *header_line,
                    format!("a profile needs at least 2 states, got {n}"),
                ));
            }
            if n > 64 {
                return Err(DocError::new(
                    *header_line,
                    format!("a profile supports at most 64 states, got {n}"),
                ));
            }
            (*header_line, false, m, n)
        }
        ["multi", m, k] => {
            let m = parse_count(*header_line, m, "m")?;
            let k = parse_count(*header_line, k, "K")?;
            (*header_line, true, m, k)
        }
        _ => {
            return Err(DocError::new(
                *header_line,
                "header must be 'm n' or 'multi m K'",
            ))
        }
    };
    let mut rest = content[1..].iter();
    let multiplicities = if multi {
        let (line, tokens) = rest.next().ok_or_else(|| {
            DocError::new(last_line, "missing multiplicity row after 'multi' header")
        })?;
        if tokens.len() != width {
            return Err(DocError::new(
                *line,
                format!("expected {width} multiplicities, got {}", tokens.len()),
            ));
        }
        let values = tokens
            .iter()
            .map(|t| {
                t.parse::<u32>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| DocError::new(*line, format!("bad multiplicity '{t}'")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        if values.iter().map(|&v| u64::from(v)).sum::<u64>() < 2 {
            return Err(DocError::new(
                *line,
                "multiplicities must sum to at least 2",
            ));
        }
        Some(values)
    } else {
        None
    };
    let mut body: Vec<(usize, &Vec<&str>)> = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = rest
            .next()
            .ok_or_else(|| DocError::new(last_line, format!("expected {m} body rows")))?;
        if tokens.len() != width {
            return Err(DocError::new(
                *line,
                format!("expected {width} tokens in this row, got {}", tokens.len()),
            ));
        }
        body.push((*line, tokens));
    }
    if let Some((line, _)) = rest.next() {
        return Err(DocError::new(*line, "unexpected content after profile body"));
    }

    let alts = match pragma {
        Some((line, names)) => {
            if names.len() != m {
                return Err(DocError::new(
                    line,
                    format!("alternatives pragma lists {} names, header says {m}", names.len()),
                ));
            }
            AlternativeSet::new(names).map_err(|e| DocError::new(line, e.to_string()))?
        }
        None => {
            let first_column: Vec<String> =
                body.iter().map(|(_, tokens)| tokens[0].to_string()).collect();
            AlternativeSet::new(first_column)
                .map_err(|e| DocError::new(body[0].0, e.to_string()))?
        }
    };
    let columns = parse_columns(&alts, &body, width)?;
    if multi {
        let pairs = columns
            .into_iter()
            .zip(multiplicities.expect("multi form parsed a multiplicity row"))
            .collect();
        let mp = MultiProfile::new(alts, pairs)
            .map_err(|e| DocError::new(body[0].0, e.to_string()))?;
        Ok(Doc::Multi(mp))
    } else {
        let p = Profile::new(alts, columns).map_err(|e| DocError::new(header_line, e.to_string()))?;
        Ok(Doc::Fixed(p))
    }
}

fn parse_count(line: usize, token: impl AsRef<str>, what: &str) -> Result<usize, DocError> {
    let token = token.as_ref();
    token
        .parse::<usize>()
        .ok()
        .filter(|&v| v >= 1)
        .ok_or_else(|| DocError::new(line, format!("bad {what} value '{token}'")))
}

fn parse_columns(
    alts: &Arc<AlternativeSet>,
    body: &[(usize, &Vec<&str>)],
    width: usize,
) -> Result<Vec<Ranking>, DocError> {
    let m = alts.len();
    (0..width)
        .map(|col| {
            let order = body
                .iter()
                .map(|(line, tokens)| {
                    alts.index_of(tokens[col])
                        .map_err(|e| DocError::new(*line, e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ranking::from_order(order, m).map_err(|_| {
                DocError::new(
                    body[0].0,
                    format!("column {} is not a permutation of the alternatives", col + 1),
                )
            })
        })
        .collect()
}

pub fn render_profile(p: &Profile) -> String {
    let names = p.alts().names();
    let mut out = format!("# alternatives: {}\n{} {}\n", names.join(" "), p.m(), p.num_states());
    for rank in 1..=p.m() {
        let row: Vec<&str> = p
            .states()
            .iter()
            .map(|r| p.alts().name(r.at_rank(rank).expect("rank in range")))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
pub fn render_multi(mp: &MultiProfile) -> String {
    let names = mp.alts().names();
    let mut out = format!(
        "# alternatives: {}\nmulti {} {}\n",
        names.join(" "),
        mp.m(),
        mp.k()
    );
    let mults: Vec<String> = mp.columns().iter().map(|&(_, k)| k.to_string()).collect();
    out.push_str(&mults.join(" "));
    out.push('\n');
    for rank in 1..=mp.m() {
        let row: Vec<&str> = mp
            .columns()
            .iter()
            .map(|(r, _)| mp.alts().name(r.at_rank(rank).expect("rank in range")))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use scx_core::multi::convert;
    use scx_core::Alt;

    #[test]
    fn parses_minimal_fixed_document() {
        let doc = parse_profile("3 2\nx x\ny y\nz z\n").unwrap();
        let Doc::Fixed(p) = doc else { panic!("fixed expected") };
        assert_eq!(p.m(), 3);
        assert_eq!(p.num_states(), 2);
        assert_eq!(p.state(1).unwrap().top(), Alt(0));
        assert_eq!(p.alts().names(), ["x", "y", "z"]);
    }

    #[test]
    fn comments_and_pragma_are_honored() {
        let text = "# a comment\n# alternatives: z y x\n3 2\n\nx x\ny y\nz z\n";
        let Doc::Fixed(p) = parse_profile(text).unwrap() else { panic!() };
        assert_eq!(p.alts().names(), ["z", "y", "x"]);
        assert_eq!(p.alts().name(p.state(1).unwrap().top()), "x");
    }

    #[test]
    fn parses_multi_document() {
        let text = "multi 3 2\n3 2\nx z\ny y\nz x\n";
        let Doc::Multi(mp) = parse_profile(text).unwrap() else { panic!() };
        assert_eq!(mp.k(), 2);
        assert_eq!(mp.total_states(), 5);
        let expanded = Doc::Multi(mp.clone()).to_profile().unwrap();
        assert_eq!(mp, convert(&expanded));
    }

    #[test]
    fn oversized_state_counts_are_rejected() {
        let err = parse_profile("3 65\nx\ny\nz\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("at most 64"));

        let text = "multi 3 2\n60 40\nx z\ny y\nz x\n";
        let doc = parse_profile(text).unwrap();
        assert!(doc.to_profile().is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_profile("3 2\nx x\ny z\nz z\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("not a permutation"));

        let err = parse_profile("3 2\nx x\ny y y\nz z\n").unwrap_err();
        assert_eq!(err.line, 3);

        let err = parse_profile("3 1\nx\ny\nz\n").unwrap_err();
        assert_eq!(err.line, 1);

        let err = parse_profile("multi 3 2\n1 1\nx x\ny y\nz z\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("distinct"));

        let err = parse_profile("multi 3 2\n0 2\nx z\ny y\nz x\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn render_round_trips() {
        let p = scx_core::corpus::example5_profile();
        let Doc::Fixed(again) = parse_profile(&render_profile(&p)).unwrap() else { panic!() };
        assert_eq!(again, p);

        let mp = convert(&scx_core::corpus::example6_profile());
        let Doc::Multi(again) = parse_profile(&render_multi(&mp)).unwrap() else { panic!() };
        assert_eq!(again, mp);
    }
}
