//! Published κ, μ̄, β and d̲ values for `±Σ(2,3,12n±1)` and `±Σ(2,3,12n±5)`.
//!
//! The shipped copy is compiled in; `MUBAR_DATASET` points at a replacement.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bounds::KappaRecord;
use crate::{Error, Rational, Result, SeifertInvariants};

pub const ENV_VAR: &str = "MUBAR_DATASET";

const SHIPPED: &str = include_str!("../data/kappa_dataset.json");

/// `Σ(2,3,12n + offset)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Minus1,
    Plus1,
    Minus5,
    Plus5,
}

impl Family {
    /// Table order.
    pub const ALL: [Family; 4] = [Family::Minus1, Family::Plus1, Family::Minus5, Family::Plus5];

    pub fn offset(self) -> i64 {
        match self {
            Family::Minus1 => -1,
            Family::Plus1 => 1,
            Family::Minus5 => -5,
            Family::Plus5 => 5,
        }
    }

    pub fn third_multiplicity(self, n: u32) -> i64 {
        12 * n as i64 + self.offset()
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::Minus1 => "sigma(2,3,12n-1)",
            Family::Plus1 => "sigma(2,3,12n+1)",
            Family::Minus5 => "sigma(2,3,12n-5)",
            Family::Plus5 => "sigma(2,3,12n+5)",
        }
    }

    /// Floer K_G split families.
    pub fn kg_split(self) -> bool {
        matches!(self, Family::Plus1 | Family::Plus5)
    }

    /// `Σ(2,3,12n+offset)`, reversed when `orientation < 0`.
    pub fn seifert(self, n: u32, orientation: i8) -> Result<SeifertInvariants> {
        if n == 0 {
            return Err(Error::InvalidArgument("family index n must be at least 1".into()));
        }
        let si = SeifertInvariants::brieskorn(&[2, 3, self.third_multiplicity(n)])?;
        Ok(if orientation < 0 { si.reverse_orientation() } else { si })
    }
}

/// The family, `n` and orientation of `si` when it is one of the table
/// manifolds `±Σ(2,3,12n±1)`, `±Σ(2,3,12n±5)`.
pub fn identify(si: &SeifertInvariants) -> Option<(Family, u32, i8)> {
    let mut m: Vec<i64> = si.multiplicities().collect();
    m.sort_unstable();
    let &[2, 3, q] = m.as_slice() else {
        return None;
    };
    let family = match q.rem_euclid(12) {
        11 => Family::Minus1,
        1 => Family::Plus1,
        7 => Family::Minus5,
        5 => Family::Plus5,
        _ => return None,
    };
    let n = u32::try_from((q - family.offset()) / 12).ok()?;
    let sorted = |s: &SeifertInvariants| {
        let mut p = s.pairs().to_vec();
        p.sort_unstable();
        (s.b(), p)
    };
    let key = sorted(si);
    [1i8, -1]
        .into_iter()
        .find(|&o| family.seifert(n, o).is_ok_and(|c| sorted(&c) == key))
        .map(|o| (family, n, o))
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Family::ALL
            .into_iter()
            .find(|f| f.label() == compact.replace('−', "-"))
            .ok_or_else(|| Error::Dataset(format!("unknown family {s:?}")))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Rationals as `"p"` or `"p/q"` strings.
mod text {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        crate::rational::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetRow {
    pub family: Family,
    pub orientation: i8,
    #[serde(with = "text")]
    pub kappa: Rational,
    #[serde(with = "text")]
    pub mubar: Rational,
    #[serde(with = "text")]
    pub beta: Rational,
    #[serde(with = "text")]
    pub d_underline: Rational,
    pub kg_split: bool,
    pub source: String,
}

impl DatasetRow {
    /// `"sigma(2,3,12n-1)"` or `"-sigma(2,3,12n-1)"`.
    pub fn name(&self) -> String {
        let sign = if self.orientation < 0 { "-" } else { "" };
        format!("{sign}{}", self.family)
    }

    pub fn kappa_record(&self) -> KappaRecord {
        KappaRecord::new(self.kappa, Some(self.kg_split), self.source.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dataset {
    rows: Vec<DatasetRow>,
}

impl Dataset {
    /// Parses and validates: eight rows, one per family and orientation,
    /// `kg_split` set exactly on the `12n+1` and `12n+5` families.
    pub fn from_json(s: &str) -> Result<Self> {
        let mut ds: Dataset = serde_json::from_str(s).map_err(|e| Error::Dataset(e.to_string()))?;
        for r in &ds.rows {
            if r.orientation != 1 && r.orientation != -1 {
                return Err(Error::Dataset(format!("{}: orientation must be 1 or -1", r.family)));
            }
            if r.kg_split != r.family.kg_split() {
                return Err(Error::Dataset(format!("{}: wrong kg_split flag", r.name())));
            }
        }
        ds.rows.sort_by_key(|r| (r.family, -r.orientation));
        let keys: Vec<_> = ds.rows.iter().map(|r| (r.family, r.orientation)).collect();
        let want: Vec<_> = Family::ALL
            .into_iter()
            .flat_map(|f| [(f, 1), (f, -1)])
            .collect();
        if keys != want {
            return Err(Error::Dataset(format!(
                "expected one row per family and orientation, got {}",
                ds.rows.len()
            )));
        }
        Ok(ds)
    }

    pub fn shipped() -> Self {
        Self::from_json(SHIPPED).expect("shipped dataset is valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Error::Dataset(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    /// `$MUBAR_DATASET` if set, else the shipped copy.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(ENV_VAR) {
            Some(p) => Self::load(Path::new(&p)),
            None => Ok(Self::shipped()),
        }
    }

    /// Rows in table order.
    pub fn rows(&self) -> &[DatasetRow] {
        &self.rows
    }

    pub fn get(&self, family: Family, orientation: i8) -> &DatasetRow {
        self.rows
            .iter()
            .find(|r| r.family == family && r.orientation == orientation.signum())
            .expect("validated dataset has every row")
    }
}
