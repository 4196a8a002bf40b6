use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{GeneralTensor, SymmetricTensor};
use crate::error::{Error, Result};
use crate::polyring::{Field, FieldElement};

/// A tensor read from or written to JSON:
///
/// ```json
/// {"order": 3, "dim": 2, "symmetric": true,
///  "entries": [{"idx": [0, 1, 1], "val": "1"}]}
/// ```
///
/// Values are strings `"num"` or `"num/den"` (bare JSON integers are also
/// accepted). Symmetric tensors list sorted indices only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tensor {
    Symmetric(SymmetricTensor),
    General(GeneralTensor),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorJson {
    order: usize,
    dim: usize,
    symmetric: bool,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryJson {
    idx: Vec<usize>,
    val: ValueJson,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ValueJson {
    Text(String),
    Int(i64),
}

impl Tensor {
    pub fn order(&self) -> usize {
        match self {
            Tensor::Symmetric(t) => t.order(),
            Tensor::General(t) => t.order(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Tensor::Symmetric(t) => t.dim(),
            Tensor::General(t) => t.dim(),
        }
    }

    /// The general form of either variant.
    pub fn to_general(&self) -> GeneralTensor {
        match self {
            Tensor::Symmetric(t) => t.to_general(),
            Tensor::General(t) => t.clone(),
        }
    }

    /// The symmetric form, when the entries are symmetric.
    pub fn to_symmetric(&self) -> Result<SymmetricTensor> {
        match self {
            Tensor::Symmetric(t) => Ok(t.clone()),
            Tensor::General(t) => t.to_symmetric(),
        }
    }

    /// Parses the JSON form with entries in `field`. Fails on duplicate
    /// indices, unsorted indices in a symmetric tensor, and out-of-range
    /// indices.
    pub fn from_json(text: &str, field: Field) -> Result<Tensor> {
        let raw: TensorJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let mut seen = BTreeSet::new();
        let mut entries = Vec::with_capacity(raw.entries.len());
        for e in raw.entries {
            if raw.symmetric && e.idx.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Format(format!("symmetric tensor index {:?} is not sorted", e.idx)));
            }
            if !seen.insert(e.idx.clone()) {
                return Err(Error::Format(format!("duplicate index {:?}", e.idx)));
            }
            let val = match e.val {
                ValueJson::Text(s) => FieldElement::parse(&s, field)?,
                ValueJson::Int(v) => field.from_i64(v),
            };
            entries.push((e.idx, val));
        }
        Ok(if raw.symmetric {
            Tensor::Symmetric(SymmetricTensor::from_entries(raw.order, raw.dim, field, entries)?)
        } else {
            Tensor::General(GeneralTensor::from_entries(raw.order, raw.dim, field, entries)?)
        })
    }

    /// Pretty-printed JSON with entries in index order.
    pub fn to_json(&self) -> String {
        let (symmetric, entries): (bool, Vec<EntryJson>) = match self {
            Tensor::Symmetric(t) => (true, t.entries().map(entry).collect()),
            Tensor::General(t) => (false, t.entries().map(entry).collect()),
        };
        let raw = TensorJson { order: self.order(), dim: self.dim(), symmetric, entries };
        serde_json::to_string_pretty(&raw).expect("tensor JSON serializes")
    }
}

fn entry((idx, v): (&[usize], &FieldElement)) -> EntryJson {
    EntryJson { idx: idx.to_vec(), val: ValueJson::Text(v.to_string()) }
}

impl From<SymmetricTensor> for Tensor {
    fn from(t: SymmetricTensor) -> Self {
        Tensor::Symmetric(t)
    }
}

impl From<GeneralTensor> for Tensor {
    fn from(t: GeneralTensor) -> Self {
        Tensor::General(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::DEFAULT_PRIME;
    use crate::tensor::big_cw;

    #[test]
    fn round_trip_symmetric() {
        let t: Tensor = big_cw(2, 3).unwrap().into();
        let text = t.to_json();
        assert_eq!(Tensor::from_json(&text, Field::Rational).unwrap(), t);
    }

    #[test]
    fn parses_fractions_and_integers() {
        let text = r#"{"order": 2, "dim": 2, "symmetric": false,
            "entries": [{"idx": [0, 1], "val": "-3/4"}, {"idx": [1, 0], "val": 2}]}"#;
        let Tensor::General(t) = Tensor::from_json(text, Field::Rational).unwrap() else { panic!("general") };
        assert_eq!(t.get(&[0, 1]).unwrap().to_string(), "-3/4");
        assert_eq!(t.get(&[1, 0]).unwrap().to_string(), "2");
        let p = Tensor::from_json(text, Field::Prime(DEFAULT_PRIME)).unwrap();
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn rejects_malformed_input() {
        let dup = r#"{"order": 2, "dim": 2, "symmetric": true,
            "entries": [{"idx": [0, 1], "val": "1"}, {"idx": [0, 1], "val": "2"}]}"#;
        assert!(matches!(Tensor::from_json(dup, Field::Rational), Err(Error::Format(_))));
        let unsorted = r#"{"order": 2, "dim": 2, "symmetric": true, "entries": [{"idx": [1, 0], "val": "1"}]}"#;
        assert!(matches!(Tensor::from_json(unsorted, Field::Rational), Err(Error::Format(_))));
        let range = r#"{"order": 2, "dim": 2, "symmetric": false, "entries": [{"idx": [2, 0], "val": "1"}]}"#;
        assert!(matches!(Tensor::from_json(range, Field::Rational), Err(Error::IndexOutOfRange { .. })));
        assert!(Tensor::from_json("{", Field::Rational).is_err());
        let bad_val = r#"{"order": 1, "dim": 1, "symmetric": false, "entries": [{"idx": [0], "val": "x"}]}"#;
        assert!(Tensor::from_json(bad_val, Field::Rational).is_err());
    }
}
