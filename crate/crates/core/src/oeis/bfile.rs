use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::{Error, Result};

/// An OEIS identifier: `A` followed by six digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ANumber(String);

impl ANumber {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Digits without the leading `A`.
    pub fn digits(&self) -> &str {
        &self.0[1..]
    }

    /// Conventional b-file name, e.g. `b004146.txt`.
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", self.digits())
    }

    pub fn bfile_url(&self) -> String {
        format!("https://oeis.org/{}/{}", self.0, self.bfile_name())
    }
}

impl FromStr for ANumber {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let ok = s.len() == 7
            && s.starts_with('A')
            && s[1..].bytes().all(|b| b.is_ascii_digit());
        if ok {
            Ok(ANumber(s.to_string()))
        } else {
            Err(Error::InvalidANumber(s.to_string()))
        }
    }
}

impl fmt::Display for ANumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Parsed b-file: terms listed from index `offset` upwards without gaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileFixture {
    pub a_number: Option<ANumber>,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl BFileFixture {
    /// Renders back to b-file text; `parse_bfile(render())` gives the same
    /// fixture.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(a) = &self.a_number {
            out.push_str(&format!("# {a}\n"));
        }
        for (i, t) in self.terms.iter().enumerate() {
            out.push_str(&format!("{} {}\n", self.offset + i as i64, t));
        }
        out
    }
}

fn a_number_in(comment: &str) -> Option<ANumber> {
    comment
        .split(|c: char| !c.is_ascii_alphanumeric())
        .find_map(|tok| tok.parse::<ANumber>().ok())
}

/// Parses `index value` lines. Lines starting with `#` are comments (the
/// first A-number mentioned in one is recorded); blank lines are skipped;
/// anything else that is not two integers is an error. Indices must be
/// consecutive.
pub fn parse_bfile(text: &str) -> Result<BFileFixture> {
    let mut a_number = None;
    let mut offset = None;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| Error::Parse { line: line_no, message };
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if a_number.is_none() {
                a_number = a_number_in(comment);
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected \"index value\", got {line:?}")));
        };
        let idx: i64 = idx.parse().map_err(|_| err(format!("invalid index {idx:?}")))?;
        let val: BigInt = val.parse().map_err(|_| err(format!("invalid term {val:?}")))?;
        let start = *offset.get_or_insert(idx);
        let expected = start + terms.len() as i64;
        if idx != expected {
            return Err(err(format!("index {idx} out of sequence, expected {expected}")));
        }
        terms.push(val);
    }
    Ok(BFileFixture { a_number, offset: offset.unwrap_or(0), terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parses_plain_data() {
        let f = parse_bfile("0 0\n1 1\n2 5\n").unwrap();
        assert_eq!(f.offset, 0);
        assert_eq!(f.terms, ints(&[0, 1, 5]));
        assert_eq!(f.a_number, None);
    }

    #[test]
    fn comments_and_a_number() {
        let f = parse_bfile("# A004146\n0 0\n1 1\n2 5\n\n").unwrap();
        assert_eq!(f.terms, ints(&[0, 1, 5]));
        assert_eq!(f.a_number.unwrap().as_str(), "A004146");
    }

    #[test]
    fn big_terms_are_lossless() {
        let f = parse_bfile("5 123456789012345678901234567890\n6 -7\n").unwrap();
        assert_eq!(f.offset, 5);
        assert_eq!(f.terms[0].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn malformed_lines_are_errors() {
        assert!(matches!(parse_bfile("0 zero\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("0 0\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_bfile("0 0\n1 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_bfile("# x\n0 0\n2 1\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn a_number_validation() {
        assert!("A004146".parse::<ANumber>().is_ok());
        for bad in ["A00", "B004146", "A0041460", "A00414x", ""] {
            assert!(matches!(bad.parse::<ANumber>(), Err(Error::InvalidANumber(_))), "{bad}");
        }
        let a: ANumber = "A054493".parse().unwrap();
        assert_eq!(a.bfile_name(), "b054493.txt");
        assert_eq!(a.bfile_url(), "https://oeis.org/A054493/b054493.txt");
    }
}
