use std::path::Path;
use std::time::Instant;

use crate::braid::BraidWord;
use crate::error::ExperimentError;

use super::report::{Check, ExperimentReport};

/// Rows in the 4-braid corpus.
pub const CORPUS_SIZE: usize = 95;
const CORPUS_STRANDS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusRow {
    pub line: usize,
    pub name: String,
    pub word: String,
}

/// Reads `knot_name<TAB>word` rows. A header row starting with `knot_name`,
/// blank lines and `#` comments are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusRow>, ExperimentError> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.trim().is_empty() || line.starts_with('#') || line.starts_with("knot_name\t") {
            continue;
        }
        let (name, word) = line
            .split_once('\t')
            .ok_or_else(|| ExperimentError::Corpus(format!("line {}: expected two columns", i + 1)))?;
        rows.push(CorpusRow {
            line: i + 1,
            name: name.trim().to_string(),
            word: word.trim().to_string(),
        });
    }
    Ok(rows)
}

fn verify_row(row: &CorpusRow) -> Check {
    let source = "word admits an exchange move; closure is a knot";
    let expected = "parsed, admissible, 4-cycle, applies";
    let w = match BraidWord::parse(CORPUS_STRANDS, &row.word) {
        Ok(w) => w,
        Err(e) => return Check::judged(&row.name, expected, format!("parse error: {e}"), source, false),
    };
    let admissible = w.admits_exchange().admissible;
    let lengths = w.permutation().cycles().lengths();
    let knot = lengths == [CORPUS_STRANDS];
    let verdict = w.theorem1_verdict();
    let computed = format!(
        "parsed, {}, {}, {}",
        if admissible { "admissible" } else { "not admissible" },
        if knot {
            "4-cycle".to_string()
        } else {
            format!("cycle lengths {lengths:?}")
        },
        verdict.reason()
    );
    Check::judged(&row.name, expected, computed, source, admissible && knot && verdict.applies())
}

pub fn table8_verify_str(text: &str) -> Result<ExperimentReport, ExperimentError> {
    let clock = Instant::now();
    let rows = parse_corpus(text)?;
    let mut r = ExperimentReport::new("table8");
    r.check(Check::new("row count", CORPUS_SIZE, rows.len(), "95 knots of braid index 4"));
    for row in &rows {
        r.check(verify_row(row));
    }
    r.runtime = clock.elapsed();
    Ok(r)
}

pub fn table8_verify(path: &Path) -> Result<ExperimentReport, ExperimentError> {
    let text = std::fs::read_to_string(path)?;
    let mut r = table8_verify_str(&text)?;
    r.params.insert(0, ("corpus".to_string(), path.display().to_string()));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_and_failures() {
        let text = "knot_name\tword\n6_1\t-3 -3 -2 1 1 2 -1 3 -2\n\nbad\t1 3 1 3\nworse\t1 x\n";
        let r = table8_verify_str(text).unwrap();
        assert_eq!(r.checks.len(), 4);
        assert!(!r.checks[0].pass);
        assert!(r.checks[1].pass);
        assert!(!r.checks[2].pass);
        assert!(r.checks[2].computed.contains("not admissible"));
        assert!(r.checks[3].computed.starts_with("parse error"));
        assert!(matches!(parse_corpus("one column\n"), Err(ExperimentError::Corpus(_))));
    }
}
