//! OEIS b-files: parsing, the reference table of A-numbers for the integer
//! sequences `u`, `b`, `c` at `w = 4..=11`, and fixture providers (bundled,
//! directory, or fetched on demand).

mod bfile;
mod fetch;

use std::path::PathBuf;

use num_bigint::BigInt;
use serde::Serialize;

use crate::lrs::{b_spec, c_spec, u_spec, SeqKind};
use crate::{Error, Result};

pub use bfile::{parse_bfile, ANumber, BFileFixture};
pub use fetch::{fetch_bfile, BFileFetcher};

/// One column entry of the reference table. Fixture term `i` (counting the
/// listed terms from zero, whatever the file's own offset) equals the
/// sequence term at index `i + shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnRef {
    pub a_number: &'static str,
    pub shift: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub w: u64,
    pub u: ColumnRef,
    pub b: ColumnRef,
    pub c: ColumnRef,
}

impl Table1Row {
    pub fn column(&self, which: SeqKind) -> Option<ColumnRef> {
        match which {
            SeqKind::U => Some(self.u),
            SeqKind::B => Some(self.b),
            SeqKind::C => Some(self.c),
            SeqKind::A => None,
        }
    }
}

const fn col(a_number: &'static str, shift: usize) -> ColumnRef {
    ColumnRef { a_number, shift }
}

const fn row(w: u64, u: ColumnRef, b: &'static str, c: &'static str) -> Table1Row {
    Table1Row { w, u, b: col(b, 0), c: col(c, 0) }
}

pub const TABLE1: [Table1Row; 8] = [
    row(4, col("A000290", 0), "A001477", "A005408"),
    row(5, col("A004146", 0), "A001906", "A002878"),
    row(6, col("A092184", 0), "A001353", "A001834"),
    row(7, col("A054493", 1), "A004254", "A030221"),
    row(8, col("A001108", 0), "A001109", "A002315"),
    row(9, col("A049684", 0), "A004187", "A033890"),
    row(10, col("A095004", 1), "A001090", "A057080"),
    row(11, col("A098296", 0), "A018913", "A057081"),
];

pub fn table1_row(w: u64) -> Option<&'static Table1Row> {
    TABLE1.iter().find(|r| r.w == w)
}

/// Somewhere b-files come from.
pub trait FixtureSource {
    fn load(&mut self, a_number: &ANumber) -> Result<BFileFixture>;
}

macro_rules! bundled {
    ($($digits:literal),* $(,)?) => {
        fn bundled_text(digits: &str) -> Option<&'static str> {
            match digits {
                $($digits => Some(include_str!(concat!("../../data/oeis/b", $digits, ".txt"))),)*
                _ => None,
            }
        }
    };
}

bundled!(
    "000290", "001090", "001108", "001109", "001353", "001477", "001834", "001906",
    "002315", "002878", "004146", "004187", "004254", "005408", "018913", "030221",
    "033890", "049684", "054493", "057080", "057081", "092184", "095004", "098296",
);

/// The fixtures compiled into the crate, one per A-number in [`TABLE1`].
#[derive(Clone, Copy, Debug, Default)]
pub struct BundledFixtures;

impl FixtureSource for BundledFixtures {
    fn load(&mut self, a_number: &ANumber) -> Result<BFileFixture> {
        let text = bundled_text(a_number.digits())
            .ok_or_else(|| Error::MissingFixture(a_number.to_string()))?;
        parse_bfile(text)
    }
}

/// Reads `bNNNNNN.txt` files from a directory.
#[derive(Clone, Debug)]
pub struct DirFixtures {
    dir: PathBuf,
}

impl DirFixtures {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DirFixtures { dir: dir.into() }
    }
}

impl FixtureSource for DirFixtures {
    fn load(&mut self, a_number: &ANumber) -> Result<BFileFixture> {
        let path = self.dir.join(a_number.bfile_name());
        match std::fs::read_to_string(&path) {
            Ok(text) => parse_bfile(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                Err(Error::MissingFixture(format!("{a_number} ({})", path.display())))
            }
            Err(e) => Err(e.into()),
        }
    }
}

/// Live b-files from oeis.org.
#[derive(Debug, Default)]
pub struct OnlineFixtures {
    fetcher: BFileFetcher,
}

impl OnlineFixtures {
    pub fn new(allow_network: bool) -> Self {
        OnlineFixtures { fetcher: BFileFetcher::new(allow_network) }
    }
}

impl FixtureSource for OnlineFixtures {
    fn load(&mut self, a_number: &ANumber) -> Result<BFileFixture> {
        parse_bfile(&self.fetcher.fetch(a_number)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Sequence index.
    pub index: usize,
    #[serde(serialize_with = "crate::exactnum::serialize_display")]
    pub expected: BigInt,
    #[serde(serialize_with = "crate::exactnum::serialize_display")]
    pub actual: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceCheck {
    pub which: SeqKind,
    pub a_number: String,
    pub shift: usize,
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl SequenceCheck {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub w: u64,
    pub count: usize,
    pub sequences: Vec<SequenceCheck>,
}

impl Table1Report {
    pub fn all_match(&self) -> bool {
        self.sequences.iter().all(SequenceCheck::matches)
    }
}

/// Compares the first `count` fixture terms of `u`, `b` and `c` at `w`
/// against the generated sequences.
pub fn check_table1(source: &mut dyn FixtureSource, w: u64, count: usize) -> Result<Table1Report> {
    let row = table1_row(w).ok_or_else(|| {
        Error::Precondition(format!("no reference row for w = {w} (have 4..=11)"))
    })?;
    let mut sequences = Vec::new();
    for which in [SeqKind::U, SeqKind::B, SeqKind::C] {
        let column = row.column(which).expect("integer sequence");
        let a_number: ANumber = column.a_number.parse()?;
        let fixture = source.load(&a_number)?;
        if fixture.terms.len() < count {
            return Err(Error::FixtureTooShort {
                a_number: a_number.to_string(),
                available: fixture.terms.len(),
                needed: count,
            });
        }
        let spec = match which {
            SeqKind::U => u_spec(w),
            SeqKind::B => b_spec(w),
            _ => c_spec(w),
        };
        let generated = spec.terms(count + column.shift);
        let first_mismatch = fixture.terms[..count]
            .iter()
            .zip(&generated[column.shift..])
            .enumerate()
            .find(|(_, (e, a))| e != a)
            .map(|(i, (e, a))| Mismatch { index: i + column.shift, expected: e.clone(), actual: a.clone() });
        sequences.push(SequenceCheck {
            which,
            a_number: a_number.to_string(),
            shift: column.shift,
            compared: count,
            first_mismatch,
        });
    }
    Ok(Table1Report { w, count, sequences })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_matches_bundled_fixtures() {
        for row in &TABLE1 {
            let report = check_table1(&mut BundledFixtures, row.w, 40).unwrap();
            assert!(report.all_match(), "{report:?}");
        }
    }

    #[test]
    fn shifted_columns() {
        assert_eq!(table1_row(7).unwrap().u.shift, 1);
        assert_eq!(table1_row(10).unwrap().u.shift, 1);
        assert!(TABLE1.iter().filter(|r| r.u.shift != 0).count() == 2);
    }

    #[test]
    fn too_few_terms() {
        assert!(matches!(
            check_table1(&mut BundledFixtures, 5, 41),
            Err(Error::FixtureTooShort { available: 40, needed: 41, .. })
        ));
    }

    #[test]
    fn unknown_row_and_missing_files() {
        assert!(check_table1(&mut BundledFixtures, 12, 5).is_err());
        let mut dir = DirFixtures::new("/nonexistent-fixture-dir");
        assert!(matches!(check_table1(&mut dir, 5, 5), Err(Error::MissingFixture(_))));
        let mut online = OnlineFixtures::default();
        assert!(matches!(check_table1(&mut online, 5, 5), Err(Error::Offline)));
    }

    #[test]
    fn mismatch_is_reported() {
        struct Tampered;
        impl FixtureSource for Tampered {
            fn load(&mut self, a: &ANumber) -> Result<BFileFixture> {
                let mut f = BundledFixtures.load(a)?;
                if a.as_str() == "A001906" {
                    f.terms[3] += 1;
                }
                Ok(f)
            }
        }
        let report = check_table1(&mut Tampered, 5, 10).unwrap();
        assert!(!report.all_match());
        let bad = &report.sequences[1];
        assert_eq!(bad.first_mismatch.as_ref().unwrap().index, 3);
        assert!(report.sequences[0].matches() && report.sequences[2].matches());
    }
}
