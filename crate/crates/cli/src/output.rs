use std::io::Write;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{Map, Value};

use matconic::conics::{Conic, ConicPoint, Side};
use matconic::exactnum::ExactValue;
use matconic::lrs::SeqKind;
use matconic::polyid::IdentityReport;

pub const SCHEMA_VERSION: u32 = 1;

/// The subcommand and its effective arguments, echoed into every output.
#[derive(Debug, Serialize)]
pub struct CommandEcho {
    name: &'static str,
    args: Map<String, Value>,
}

impl CommandEcho {
    pub fn new(name: &'static str) -> Self {
        CommandEcho { name, args: Map::new() }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        let value = serde_json::to_value(value).expect("argument values serialize");
        self.args.insert(key.to_string(), value);
        self
    }
}

#[derive(Debug, Serialize)]
pub struct OutputRecord<P> {
    pub schema_version: u32,
    pub command: CommandEcho,
    pub payload: P,
}

impl<P: Serialize> OutputRecord<P> {
    pub fn new(command: CommandEcho, payload: P) -> Self {
        OutputRecord { schema_version: SCHEMA_VERSION, command, payload }
    }
}

#[derive(Debug, Serialize)]
pub struct SeqPayload {
    pub which: SeqKind,
    pub w: u64,
    pub terms: Vec<ExactValue>,
}

#[derive(Debug, Serialize)]
pub struct VerifyPayload {
    pub all_expected: bool,
    pub reports: Vec<IdentityReport>,
}

/// Header line of a JSON-lines stream.
#[derive(Debug, Serialize)]
struct StreamHeader {
    schema_version: u32,
    command: CommandEcho,
    records: usize,
}

#[derive(Debug, Serialize)]
pub struct PointLine {
    conic: Conic,
    w: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    x: ExactValue,
    y: ExactValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    side: Option<Side>,
}

impl PointLine {
    pub fn from_point(p: &ConicPoint) -> Self {
        PointLine {
            conic: p.conic(),
            w: p.w(),
            n: p.index(),
            x: p.x().clone(),
            y: p.y().clone(),
            side: p.side(),
        }
    }

    pub fn pair(conic: Conic, w: u64, n: Option<usize>, x: BigInt, y: BigInt) -> Self {
        PointLine { conic, w, n, x: ExactValue::Int(x), y: ExactValue::Int(y), side: None }
    }

    fn csv_row(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.conic,
            self.w,
            opt(self.n.map(|n| n.to_string())),
            self.x,
            self.y,
            opt(self.side.map(|s| format!("{s:?}"))),
        )
    }
}

/// JSON lines (a header object, then one object per point) or CSV.
pub fn write_stream(
    out: &mut impl Write,
    csv: bool,
    command: CommandEcho,
    lines: &[PointLine],
) -> Result<(), Box<dyn std::error::Error>> {
    if csv {
        writeln!(out, "conic,w,n,x,y,side")?;
        for line in lines {
            writeln!(out, "{}", line.csv_row())?;
        }
    } else {
        let header = StreamHeader { schema_version: SCHEMA_VERSION, command, records: lines.len() };
        writeln!(out, "{}", serde_json::to_string(&header)?)?;
        for line in lines {
            writeln!(out, "{}", serde_json::to_string(line)?)?;
        }
    }
    Ok(())
}
