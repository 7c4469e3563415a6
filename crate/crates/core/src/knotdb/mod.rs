//! Named knot table with cached Jones polynomials.

mod expr;

pub use expr::{parse_knot_expression, KnotExpression};

use std::collections::HashMap;
use std::path::Path;

use serde::Serialize;

use crate::classify::{check_conditions, classify, Family};
use crate::error::{Error, Result};
use crate::knot::{jones, mirror, parse_pd, PDCode};
use crate::laurent::{parse_poly, LaurentPoly};

/// Knots every loaded table must contain.
pub const REQUIRED_KNOTS: &[&str] = &[
    "O", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_2", "7_3", "7_4", "7_5", "7_6", "7_7", "8_1",
    "8_2", "8_3", "8_4", "8_5", "8_6", "8_7", "8_8", "8_10", "8_11", "8_12", "8_14", "8_15", "8_17", "8_19", "8_20",
    "8_21", "9_42", "9_43", "9_44", "10_124", "10_126", "10_127", "10_128", "10_133", "10_136", "10_140", "10_143",
    "10_145", "10_146", "10_147", "10_160", "10_163", "10_165", "11n63", "11n71", "11n99", "11n118", "11n173",
    "11n77", "12n237",
];

/// Knots used only for the mod-2 coincidence checks.
pub const OPTIONAL_KNOTS: &[&str] = &["8_9", "8_13", "8_16", "8_18"];

pub static BUNDLED_CSV: &str = include_str!("../../../../data/knots.csv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    /// The diagram as used, i.e. after any chirality flip.
    pub pd: PDCode,
    pub jones_z: LaurentPoly,
    pub expected_jones: Option<LaurentPoly>,
    /// The source diagram was mirrored to match `expected_jones`.
    pub chirality_flipped: bool,
    pub source: String,
}

impl KnotRecord {
    /// Compute the Jones polynomial, resolve chirality against the expected
    /// value, and check the root-of-unity conditions.
    pub fn new(name: &str, pd: PDCode, expected_jones: Option<LaurentPoly>, source: &str) -> Result<Self> {
        let mut pd = pd;
        let mut jones_z = jones(&pd)?;
        let mut chirality_flipped = false;
        if let Some(expected) = &expected_jones {
            if *expected != jones_z {
                if *expected != mirror(&jones_z) {
                    return Err(Error::ExpectedMismatch {
                        name: name.to_string(),
                        computed: jones_z.to_string(),
                        expected: expected.to_string(),
                    });
                }
                pd = pd.mirror();
                jones_z = mirror(&jones_z);
                chirality_flipped = true;
            }
        }
        if !check_conditions(&jones_z)?.all_pass() {
            return Err(Error::RecordConditions {
                name: name.to_string(),
                jones: jones_z.to_string(),
            });
        }
        Ok(KnotRecord {
            name: name.to_string(),
            pd,
            jones_z,
            expected_jones,
            chirality_flipped,
            source: source.to_string(),
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotDb {
    records: Vec<KnotRecord>,
    index: HashMap<String, usize>,
}

#[derive(serde::Deserialize)]
struct Row {
    name: String,
    pd: String,
    #[serde(default)]
    expected_jones: String,
    #[serde(default)]
    source: String,
}

impl KnotDb {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parse CSV text (`name,pd,expected_jones,source`). No manifest check.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut db = KnotDb::new();
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        for (i, row) in reader.deserialize::<Row>().enumerate() {
            // header is line 1
            let line = i + 2;
            let row = row?;
            let name = row.name.trim();
            let record_err = |e: Error| Error::Record {
                row: line,
                msg: format!("{name}: {e}"),
            };
            let pd = parse_pd(&row.pd).map_err(record_err)?;
            let expected = match row.expected_jones.trim() {
                "" => None,
                s => Some(parse_poly(s, None).map_err(record_err)?),
            };
            db.insert(KnotRecord::new(name, pd, expected, row.source.trim())?)?;
        }
        Ok(db)
    }

    /// The table shipped with the crate.
    pub fn bundled() -> Self {
        let db = Self::from_csv_str(BUNDLED_CSV).expect("bundled knot table is valid");
        db.check_manifest().expect("bundled knot table is complete");
        db
    }

    pub fn insert(&mut self, record: KnotRecord) -> Result<()> {
        if self.index.contains_key(&record.name) {
            return Err(Error::DuplicateKnot(record.name));
        }
        self.index.insert(record.name.clone(), self.records.len());
        self.records.push(record);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.index.get(name).map(|&i| &self.records[i])
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Required names absent from the table.
    pub fn missing_required(&self) -> Vec<String> {
        missing(self, REQUIRED_KNOTS)
    }

    pub fn missing_optional(&self) -> Vec<String> {
        missing(self, OPTIONAL_KNOTS)
    }

    pub fn check_manifest(&self) -> Result<()> {
        let missing = self.missing_required();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::MissingKnots(missing))
        }
    }

    /// Sub-table with only the named knots that are present.
    pub fn restrict(&self, names: &[&str]) -> Self {
        let mut db = KnotDb::new();
        for r in &self.records {
            if names.contains(&r.name.as_str()) {
                db.insert(r.clone()).expect("names are unique");
            }
        }
        db
    }

    /// Jones polynomial of a named knot; `O` is always the unknot.
    pub fn jones_of(&self, name: &str) -> Result<LaurentPoly> {
        match self.get(name) {
            Some(r) => Ok(r.jones_z.clone()),
            None if name == "O" => Ok(LaurentPoly::one()),
            None => Err(Error::UnknownKnot(name.to_string())),
        }
    }
}

fn missing(db: &KnotDb, names: &[&str]) -> Vec<String> {
    names.iter().filter(|n| db.get(n).is_none()).map(|n| n.to_string()).collect()
}

/// Load a CSV table and check the required-name manifest.
pub fn load_db(path: impl AsRef<Path>) -> Result<KnotDb> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    let db = KnotDb::from_csv_str(&text)?;
    db.check_manifest()?;
    Ok(db)
}

pub fn evaluate_expression(db: &KnotDb, e: &KnotExpression) -> Result<LaurentPoly> {
    match e {
        KnotExpression::Knot(name) => db.jones_of(name),
        KnotExpression::Mirror(inner) => Ok(mirror(&evaluate_expression(db, inner)?)),
        KnotExpression::Sum(parts) => parts
            .iter()
            .map(|p| evaluate_expression(db, p))
            .try_fold(LaurentPoly::one(), |acc, v| acc.try_mul(&v?)),
    }
}

/// Parse and evaluate in one step.
pub fn evaluate(db: &KnotDb, text: &str) -> Result<LaurentPoly> {
    evaluate_expression(db, &parse_knot_expression(text)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordReport {
    pub name: String,
    pub jones: LaurentPoly,
    pub conditions_pass: bool,
    pub family: Option<Family>,
    pub n: Option<String>,
    pub realizable_n: bool,
    pub mirror_covariant: bool,
    pub mod2: LaurentPoly,
    pub mod2_range: Option<(i64, i64)>,
    pub chirality_flipped: bool,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DbReport {
    pub records: Vec<RecordReport>,
    pub missing_required: Vec<String>,
    pub missing_optional: Vec<String>,
    pub pass: bool,
}

/// Per-record conditions, classification and mod-2 range, plus manifest coverage.
pub fn validate_db(db: &KnotDb) -> DbReport {
    let records: Vec<RecordReport> = db
        .records()
        .iter()
        .map(|r| {
            let conditions_pass = check_conditions(&r.jones_z).is_ok_and(|c| c.all_pass());
            let cls = classify(&r.jones_z).ok();
            let mirror_covariant = match (&cls, classify(&mirror(&r.jones_z))) {
                (Some(c), Ok(m)) => {
                    m.family == c.family && m.n == crate::classify::mirror_parameter(c.family, &c.n)
                }
                _ => false,
            };
            let mod2 = r.jones_z.reduce_mod_p(2).expect("2 is prime");
            RecordReport {
                name: r.name.clone(),
                jones: r.jones_z.clone(),
                conditions_pass,
                family: cls.as_ref().map(|c| c.family),
                n: cls.as_ref().map(|c| c.n.to_string()),
                realizable_n: cls.as_ref().is_some_and(|c| c.realizable_n),
                mirror_covariant,
                mod2_range: mod2.min_degree().zip(mod2.max_degree()),
                mod2,
                chirality_flipped: r.chirality_flipped,
                source: r.source.clone(),
            }
        })
        .collect();
    let missing_required = db.missing_required();
    let pass = missing_required.is_empty()
        && records.iter().all(|r| r.conditions_pass && r.realizable_n && r.mirror_covariant);
    DbReport {
        records,
        missing_required,
        missing_optional: db.missing_optional(),
        pass,
    }
}
