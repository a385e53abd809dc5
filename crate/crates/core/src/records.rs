//! Canonical data model and line-delimited serialization.
//!
//! Every stage of the pipeline consumes and produces these types. Files hold
//! one JSON object per line so large test sets stream without being loaded
//! wholesale; floats serialize with the shortest round-trip representation,
//! which makes write-then-read byte-stable.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::text::normalize_ws;
use crate::{Error, Result};

/// Correct/Incorrect judgement attached to training pairs and verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Correct,
    Incorrect,
}

impl Label {
    pub fn is_correct(self) -> bool {
        matches!(self, Label::Correct)
    }
}

/// One scored entry of a decoder beam.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeamCandidate {
    pub sequence: String,
    /// Product of per-step decoder probabilities, in (0, 1].
    pub confidence: f64,
}

/// One test instance: input sentence, top prediction, scored beam, and the
/// gold sequence when known.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictionRecord {
    pub id: String,
    pub input: String,
    /// The most probable beam item; equals `beam[0].sequence` when the beam
    /// is non-empty.
    pub prediction: String,
    pub beam: Vec<BeamCandidate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gold: Option<String>,
}

impl PredictionRecord {
    /// Whether the top prediction matches gold after whitespace
    /// normalization. `None` when the record carries no gold sequence.
    pub fn is_correct(&self) -> Option<bool> {
        self.gold
            .as_ref()
            .map(|g| normalize_ws(g) == normalize_ws(&self.prediction))
    }

    /// Validate the per-record invariants, naming the violated field.
    pub fn validate(&self) -> Result<()> {
        for (i, cand) in self.beam.iter().enumerate() {
            if !(cand.confidence > 0.0 && cand.confidence <= 1.0) {
                return Err(Error::validation(
                    format!("beam[{i}].confidence"),
                    format!("{} is outside (0, 1]", cand.confidence),
                ));
            }
        }
        if self
            .beam
            .windows(2)
            .any(|w| w[0].confidence < w[1].confidence)
        {
            return Err(Error::validation(
                "beam",
                "candidates are not sorted by non-increasing confidence",
            ));
        }
        if let Some(top) = self.beam.first() {
            if top.sequence != self.prediction {
                return Err(Error::validation(
                    "prediction",
                    "does not equal the first beam candidate",
                ));
            }
        }
        Ok(())
    }
}

/// Where a training pair came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairSource {
    Gold,
    CheckpointBeam,
    Noise,
}

/// A (sentence, candidate sequence, label) triple for discriminator training.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingPair {
    pub input: String,
    pub output: String,
    pub label: Label,
    pub source: PairSource,
}

impl TrainingPair {
    /// Positive pairs are always gold; negatives never are.
    pub fn validate(&self) -> Result<()> {
        if self.label == Label::Correct && self.source != PairSource::Gold {
            return Err(Error::validation(
                "source",
                "a Correct pair must have source gold",
            ));
        }
        Ok(())
    }
}

/// A single discriminator's judgement of one instance.
///
/// The label is derived from the probability of the Correct class with the
/// decision threshold fixed at 0.5, ties breaking toward Correct.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    label: Label,
    probability: f64,
}

impl Verdict {
    /// Build a verdict from the Correct-class probability.
    pub fn from_probability(probability: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&probability) || probability.is_nan() {
            return Err(Error::validation(
                "probability",
                format!("{probability} is outside [0, 1]"),
            ));
        }
        let label = if probability >= 0.5 {
            Label::Correct
        } else {
            Label::Incorrect
        };
        Ok(Verdict { label, probability })
    }

    pub fn label(&self) -> Label {
        self.label
    }

    pub fn probability(&self) -> f64 {
        self.probability
    }
}

/// Read prediction records from a line-delimited file, validating invariants.
pub fn read_records(path: impl AsRef<Path>) -> Result<Vec<PredictionRecord>> {
    let reader = BufReader::new(File::open(path)?);
    let mut records = Vec::new();
    let mut seen_ids = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: PredictionRecord =
            serde_json::from_str(&line).map_err(|e| Error::parse(lineno, e.to_string()))?;
        record.validate()?;
        if !seen_ids.insert(record.id.clone()) {
            return Err(Error::validation(
                "id",
                format!("duplicate id {:?} at line {lineno}", record.id),
            ));
        }
        records.push(record);
    }
    Ok(records)
}

/// Write prediction records one per line. Round-trips losslessly through
/// [`read_records`].
pub fn write_records(records: &[PredictionRecord], path: impl AsRef<Path>) -> Result<()> {
    let mut seen_ids = HashSet::new();
    for record in records {
        record.validate()?;
        if !seen_ids.insert(record.id.as_str()) {
            return Err(Error::validation(
                "id",
                format!("duplicate id {:?}", record.id),
            ));
        }
    }
    let mut writer = BufWriter::new(File::create(path)?);
    for record in records {
        serde_json::to_writer(&mut writer, record)
            .map_err(|e| Error::validation("record", e.to_string()))?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

/// Read training pairs from a line-delimited file.
pub fn read_pairs(path: impl AsRef<Path>) -> Result<Vec<TrainingPair>> {
    let reader = BufReader::new(File::open(path)?);
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let pair: TrainingPair =
            serde_json::from_str(&line).map_err(|e| Error::parse(lineno, e.to_string()))?;
        pair.validate()?;
        if !seen.insert((pair.input.clone(), pair.output.clone())) {
            return Err(Error::validation(
                "input/output",
                format!("duplicate pair at line {lineno}"),
            ));
        }
        pairs.push(pair);
    }
    Ok(pairs)
}

/// Write training pairs one per line.
pub fn write_pairs(pairs: &[TrainingPair], path: impl AsRef<Path>) -> Result<()> {
    let mut seen = HashSet::new();
    for pair in pairs {
        pair.validate()?;
        if !seen.insert((pair.input.as_str(), pair.output.as_str())) {
            return Err(Error::validation(
                "input/output",
                format!("duplicate pair ({:?}, {:?})", pair.input, pair.output),
            ));
        }
    }
    let mut writer = BufWriter::new(File::create(path)?);
    for pair in pairs {
        serde_json::to_writer(&mut writer, pair)
            .map_err(|e| Error::validation("pair", e.to_string()))?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn record(id: &str, confs: &[f64]) -> PredictionRecord {
        let beam: Vec<BeamCandidate> = confs
            .iter()
            .enumerate()
            .map(|(i, &c)| BeamCandidate {
                sequence: format!("cand{i}"),
                confidence: c,
            })
            .collect();
        PredictionRecord {
            id: id.to_string(),
            input: "a sentence".to_string(),
            prediction: beam
                .first()
                .map(|c| c.sequence.clone())
                .unwrap_or_else(|| "cand0".to_string()),
            beam,
            gold: None,
        }
    }

    #[test]
    fn three_records_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("records.jsonl");
        let records = vec![
            record("r1", &[0.9, 0.5]),
            record("r2", &[1.0]),
            record("r3", &[]),
        ];
        write_records(&records, &path).unwrap();
        let back = read_records(&path).unwrap();
        assert_eq!(back, records);
    }

    #[test]
    fn empty_file_is_empty_list() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.jsonl");
        std::fs::write(&path, "").unwrap();
        assert!(read_records(&path).unwrap().is_empty());
    }

    #[test]
    fn out_of_range_confidence_names_the_field() {
        let r = record("r1", &[1.5]);
        let err = r.validate().unwrap_err();
        match err {
            Error::Validation { field, .. } => assert_eq!(field, "beam[0].confidence"),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn unsorted_beam_rejected() {
        let r = record("r1", &[0.4, 0.9]);
        assert!(matches!(
            r.validate(),
            Err(Error::Validation { field, .. }) if field == "beam"
        ));
    }

    #[test]
    fn prediction_must_match_top_candidate() {
        let mut r = record("r1", &[0.9]);
        r.prediction = "something else".to_string();
        assert!(matches!(
            r.validate(),
            Err(Error::Validation { field, .. }) if field == "prediction"
        ));
    }

    #[test]
    fn duplicate_ids_rejected_on_read() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("dup.jsonl");
        let line = serde_json::to_string(&record("same", &[0.9])).unwrap();
        std::fs::write(&path, format!("{line}\n{line}\n")).unwrap();
        assert!(matches!(
            read_records(&path),
            Err(Error::Validation { field, .. }) if field == "id"
        ));
    }

    #[test]
    fn malformed_line_names_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        let good = serde_json::to_string(&record("r1", &[0.9])).unwrap();
        std::fs::write(&path, format!("{good}\nnot json\n")).unwrap();
        assert!(matches!(
            read_records(&path),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn absent_gold_omitted_on_disk() {
        let r = record("r1", &[0.9]);
        let line = serde_json::to_string(&r).unwrap();
        assert!(!line.contains("gold"));
        let back: PredictionRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back.gold, None);
    }

    #[test]
    fn correct_pair_requires_gold_source() {
        let pair = TrainingPair {
            input: "s".into(),
            output: "o".into(),
            label: Label::Correct,
            source: PairSource::Noise,
        };
        assert!(pair.validate().is_err());
    }

    #[test]
    fn pair_labels_serialize_lowercase() {
        let pair = TrainingPair {
            input: "s".into(),
            output: "o".into(),
            label: Label::Incorrect,
            source: PairSource::CheckpointBeam,
        };
        let line = serde_json::to_string(&pair).unwrap();
        assert!(line.contains("\"incorrect\""));
        assert!(line.contains("\"checkpoint_beam\""));
    }

    #[test]
    fn verdict_threshold_breaks_ties_toward_correct() {
        assert_eq!(Verdict::from_probability(0.5).unwrap().label(), Label::Correct);
        assert_eq!(
            Verdict::from_probability(0.499).unwrap().label(),
            Label::Incorrect
        );
        assert!(Verdict::from_probability(1.1).is_err());
        assert!(Verdict::from_probability(f64::NAN).is_err());
    }

    type RecordParts = (String, Vec<u32>, Option<String>);

    proptest! {
        #[test]
        fn write_read_is_identity(
            parts in prop::collection::vec(
                (
                    "[a-z]{1,8}( [a-z]{1,8}){0,3}",
                    prop::collection::vec(1u32..=1_000_000, 0..5),
                    prop::option::of("[a-z]{1,8}"),
                ),
                1..8,
            )
        ) {
            let records: Vec<PredictionRecord> = parts
                .into_iter()
                .enumerate()
                .map(|(i, (input, confs, gold)): (usize, RecordParts)| {
                    let mut confs: Vec<f64> =
                        confs.into_iter().map(|n| f64::from(n) / 1e6).collect();
                    confs.sort_by(|a, b| b.partial_cmp(a).unwrap());
                    let mut r = record(&format!("id{i}"), &confs);
                    r.input = input;
                    r.gold = gold;
                    r
                })
                .collect();
            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("prop.jsonl");
            write_records(&records, &path).unwrap();
            prop_assert_eq!(read_records(&path).unwrap(), records);
        }
    }
}
