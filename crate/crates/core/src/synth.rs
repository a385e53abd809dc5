//! Synthetic semantic-parsing task and simulated parser checkpoints.
//!
//! The task maps sentences over a generated vocabulary ("the boka beside the
//! ruda sata a tepo") to conjunct-list logical forms
//! (`sata(x1,x2) AND boka(x1,beside=ruda) AND tepo(x2)`). The
//! out-of-distribution split holds out verb/noun combinations that never
//! co-occur in training, so OOD sentences recombine familiar words in unseen
//! ways.
//!
//! [`ParserModel`] simulates one training checkpoint of a seq2seq parser: a
//! decoder that corrupts each derivation step with a controllable error
//! rate and emits an exact top-k beam with honest product-of-step
//! probabilities. It exists so the whole estimation pipeline can run at desk
//! scale; the corruption mix is a modeling choice, not a claim about real
//! checkpoints.

use std::collections::{BTreeSet, BinaryHeap, HashSet};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::records::BeamCandidate;
use crate::text::{fnv1a, join_conjuncts, split_conjuncts, splitmix64, unit_from_hash};
use crate::{Error, Result};

const DETERMINERS: [&str; 2] = ["the", "a"];
const PREPOSITIONS: [&str; 3] = ["in", "on", "beside"];

/// Probability that an NP attaches another prepositional phrase while depth
/// budget remains.
const PP_ATTACH_PROB: f64 = 0.35;
/// Probability that a sampled sentence is transitive.
const TRANSITIVE_PROB: f64 = 0.6;
/// Fraction of verb/noun combinations reserved for the OOD split.
const HELD_OUT_FRACTION: f64 = 0.125;

/// Parameters for task generation.
#[derive(Debug, Clone)]
pub struct TaskConfig {
    pub n_train: usize,
    pub n_test: usize,
    /// Maximum NP recursion depth; 1 means bare noun phrases.
    pub grammar_depth: usize,
    /// Number of content words (nouns plus verbs).
    pub vocab_size: usize,
    pub seed: u64,
}

impl TaskConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_train < 1 {
            return Err(Error::validation("n_train", "must be at least 1"));
        }
        if self.n_test < 1 {
            return Err(Error::validation("n_test", "must be at least 1"));
        }
        if !(1..=6).contains(&self.grammar_depth) {
            return Err(Error::validation("grammar_depth", "must be in [1, 6]"));
        }
        if self.vocab_size < 10 {
            return Err(Error::validation("vocab_size", "must be at least 10"));
        }
        Ok(())
    }
}

/// Kinds of corruption a simulated decoder step can commit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CorruptionKind {
    /// Replace a conjunct's head predicate with another predicate of the form.
    TokenSubstitute,
    /// Omit the conjunct entirely.
    ConjunctDrop,
    /// Emit the conjunct plus a spurious extra conjunct.
    ConjunctInsert,
}

impl CorruptionKind {
    pub fn all() -> BTreeSet<CorruptionKind> {
        [
            CorruptionKind::TokenSubstitute,
            CorruptionKind::ConjunctDrop,
            CorruptionKind::ConjunctInsert,
        ]
        .into_iter()
        .collect()
    }
}

/// A simulated parser checkpoint. Same (model, sentence) always yields the
/// same beam.
#[derive(Debug, Clone)]
pub struct ParserModel {
    pub error_rate: f64,
    pub corruption_kinds: BTreeSet<CorruptionKind>,
    pub seed: u64,
}

impl ParserModel {
    pub fn new(error_rate: f64, seed: u64) -> Result<Self> {
        Self::with_kinds(error_rate, CorruptionKind::all(), seed)
    }

    pub fn with_kinds(
        error_rate: f64,
        corruption_kinds: BTreeSet<CorruptionKind>,
        seed: u64,
    ) -> Result<Self> {
        if !(0.0..=1.0).contains(&error_rate) || error_rate.is_nan() {
            return Err(Error::validation(
                "error_rate",
                format!("{error_rate} is outside [0, 1]"),
            ));
        }
        if corruption_kinds.is_empty() {
            return Err(Error::validation(
                "corruption_kinds",
                "at least one corruption kind is required",
            ));
        }
        Ok(ParserModel {
            error_rate,
            corruption_kinds,
            seed,
        })
    }
}

/// One simulated parser per error rate, with distinct derived seeds.
pub fn checkpoint_sequence(base_seed: u64, error_rates: &[f64]) -> Result<Vec<ParserModel>> {
    if error_rates.is_empty() {
        return Err(Error::Empty("error_rates"));
    }
    error_rates
        .iter()
        .enumerate()
        .map(|(i, &rate)| {
            if !(0.0..=1.0).contains(&rate) || rate.is_nan() {
                return Err(Error::validation(
                    format!("error_rates[{i}]"),
                    format!("{rate} is outside [0, 1]"),
                ));
            }
            ParserModel::new(rate, splitmix64(base_seed.wrapping_add(i as u64 + 1)))
        })
        .collect()
}

// --- grammar -----------------------------------------------------------

/// The sampled lexicon and the held-out verb/noun combinations that define
/// the OOD split.
#[derive(Debug, Clone)]
pub struct Grammar {
    nouns: Vec<String>,
    verbs: Vec<String>,
    max_depth: usize,
    held_out: Vec<(String, String)>,
}

/// A noun phrase: head noun plus an optional chain of PP modifiers.
#[derive(Debug, Clone)]
struct NounPhrase {
    det: usize,
    noun: String,
    /// (preposition index, determiner index, noun) per chained PP.
    pps: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone)]
struct Derivation {
    verb: String,
    subject: NounPhrase,
    object: Option<NounPhrase>,
}

impl NounPhrase {
    fn words(&self, out: &mut Vec<String>) {
        out.push(DETERMINERS[self.det].to_string());
        out.push(self.noun.clone());
        for (prep, det, noun) in &self.pps {
            out.push(PREPOSITIONS[*prep].to_string());
            out.push(DETERMINERS[*det].to_string());
            out.push(noun.clone());
        }
    }

    /// Render the NP conjunct, nesting PP modifiers rightward:
    /// `boka(x1,in=ruda(on=tepo))`.
    fn conjunct(&self, var: usize) -> String {
        let mut nested = String::new();
        let mut closers = 0;
        for (i, (prep, _, noun)) in self.pps.iter().enumerate() {
            if i == 0 {
                nested.push_str(&format!(",{}={}", PREPOSITIONS[*prep], noun));
            } else {
                nested.push_str(&format!("({}={}", PREPOSITIONS[*prep], noun));
                closers += 1;
            }
        }
        nested.push_str(&")".repeat(closers));
        format!("{}(x{var}{nested}", self.noun) + ")"
    }

    fn nouns(&self) -> impl Iterator<Item = &String> {
        std::iter::once(&self.noun).chain(self.pps.iter().map(|(_, _, n)| n))
    }
}

impl Derivation {
    fn sentence(&self) -> String {
        let mut words = Vec::new();
        self.subject.words(&mut words);
        words.push(self.verb.clone());
        if let Some(obj) = &self.object {
            obj.words(&mut words);
        }
        words.join(" ")
    }

    fn gold(&self) -> String {
        let mut conjuncts = Vec::new();
        match &self.object {
            Some(obj) => {
                conjuncts.push(format!("{}(x1,x2)", self.verb));
                conjuncts.push(self.subject.conjunct(1));
                conjuncts.push(obj.conjunct(2));
            }
            None => {
                conjuncts.push(format!("{}(x1)", self.verb));
                conjuncts.push(self.subject.conjunct(1));
            }
        }
        join_conjuncts(&conjuncts)
    }

    fn noun_tokens(&self) -> Vec<&String> {
        let mut nouns: Vec<&String> = self.subject.nouns().collect();
        if let Some(obj) = &self.object {
            nouns.extend(obj.nouns());
        }
        nouns
    }
}

impl Grammar {
    fn sample_np(&self, rng: &mut ChaCha8Rng) -> NounPhrase {
        let det = rng.random_range(0..DETERMINERS.len());
        let noun = self.nouns.choose(rng).expect("nouns non-empty").clone();
        let mut pps = Vec::new();
        let mut budget = self.max_depth.saturating_sub(1);
        while budget > 0 && rng.random_bool(PP_ATTACH_PROB) {
            let prep = rng.random_range(0..PREPOSITIONS.len());
            let det = rng.random_range(0..DETERMINERS.len());
            let noun = self.nouns.choose(rng).expect("nouns non-empty").clone();
            pps.push((prep, det, noun));
            budget -= 1;
        }
        NounPhrase { det, noun, pps }
    }

    fn sample_derivation(&self, rng: &mut ChaCha8Rng) -> Derivation {
        let transitive = rng.random_bool(TRANSITIVE_PROB);
        let verb = self.verbs.choose(rng).expect("verbs non-empty").clone();
        let subject = self.sample_np(rng);
        let object = transitive.then(|| self.sample_np(rng));
        Derivation {
            verb,
            subject,
            object,
        }
    }

    fn uses_held_out(&self, derivation: &Derivation) -> bool {
        derivation.noun_tokens().iter().any(|noun| {
            self.held_out
                .iter()
                .any(|(v, n)| *v == derivation.verb && n == *noun)
        })
    }

    /// The multiset of lexical productions a sentence uses, as `v:`/`n:`
    /// tagged tokens. Determiners and prepositions are closed-class and
    /// excluded.
    pub fn production_multiset(&self, sentence: &str) -> Vec<String> {
        let mut tokens = Vec::new();
        for word in sentence.split_whitespace() {
            if self.verbs.iter().any(|v| v == word) {
                tokens.push(format!("v:{word}"));
            } else if self.nouns.iter().any(|n| n == word) {
                tokens.push(format!("n:{word}"));
            }
        }
        tokens.sort();
        tokens
    }

    /// Re-derive the gold form for a sentence of this grammar. Returns
    /// `None` when the word sequence is not generated by the grammar.
    pub fn derive(&self, sentence: &str) -> Option<String> {
        let words: Vec<&str> = sentence.split_whitespace().collect();
        let mut pos = 0;
        let subject = self.parse_np(&words, &mut pos)?;
        let verb = words.get(pos)?.to_string();
        if !self.verbs.contains(&verb) {
            return None;
        }
        pos += 1;
        let object = if pos < words.len() {
            Some(self.parse_np(&words, &mut pos)?)
        } else {
            None
        };
        if pos != words.len() {
            return None;
        }
        Some(
            Derivation {
                verb,
                subject,
                object,
            }
            .gold(),
        )
    }

    fn parse_np(&self, words: &[&str], pos: &mut usize) -> Option<NounPhrase> {
        let det = DETERMINERS.iter().position(|d| Some(d) == words.get(*pos).map(|w| w))?;
        *pos += 1;
        let noun = words.get(*pos)?.to_string();
        if !self.nouns.contains(&noun) {
            return None;
        }
        *pos += 1;
        let mut pps = Vec::new();
        while let Some(word) = words.get(*pos) {
            let Some(prep) = PREPOSITIONS.iter().position(|p| p == word) else {
                break;
            };
            let det = DETERMINERS
                .iter()
                .position(|d| Some(d) == words.get(*pos + 1).map(|w| w))?;
            let noun = words.get(*pos + 2)?.to_string();
            if !self.nouns.contains(&noun) {
                return None;
            }
            pps.push((prep, det, noun));
            *pos += 3;
        }
        Some(NounPhrase { det, noun, pps })
    }

    pub fn nouns(&self) -> &[String] {
        &self.nouns
    }

    pub fn verbs(&self) -> &[String] {
        &self.verbs
    }

    pub fn held_out_pairs(&self) -> &[(String, String)] {
        &self.held_out
    }
}

/// A generated task: labeled splits and the grammar that produced them.
#[derive(Debug, Clone)]
pub struct SyntheticTask {
    /// (sentence, gold form) pairs, unique within each split.
    pub train: Vec<(String, String)>,
    pub test_id: Vec<(String, String)>,
    pub test_ood: Vec<(String, String)>,
    pub grammar: Grammar,
}

fn content_words(count: usize) -> Vec<String> {
    const ONSETS: [&str; 14] = [
        "b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z",
    ];
    const VOWELS: [&str; 5] = ["a", "e", "i", "o", "u"];
    let syllable = |i: usize| format!("{}{}", ONSETS[i % 14], VOWELS[(i / 14) % 5]);
    let n_syllables = ONSETS.len() * VOWELS.len();
    let mut words = Vec::with_capacity(count);
    let mut i = 0usize;
    while words.len() < count {
        // stride through syllable pairs so consecutive words look unrelated
        let a = (i * 7 + 3) % n_syllables;
        let b = (i * 13 + 11) % n_syllables;
        let word = if i < n_syllables * n_syllables {
            format!("{}{}", syllable(a), syllable(b))
        } else {
            let c = (i * 29 + 17) % n_syllables;
            format!("{}{}{}", syllable(a), syllable(b), syllable(c))
        };
        if !words.contains(&word) {
            words.push(word);
        }
        i += 1;
    }
    words
}

/// Generate train / in-distribution test / out-of-distribution test splits.
///
/// OOD sentences contain at least one held-out verb/noun combination;
/// training (and ID test) sentences contain none, so the OOD split diverges
/// from training systematically rather than by length.
pub fn generate_task(config: &TaskConfig) -> Result<SyntheticTask> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let n_nouns = (config.vocab_size * 3).div_ceil(5).max(2);
    let n_verbs = (config.vocab_size - n_nouns).max(2);
    let words = content_words(n_nouns + n_verbs);
    let nouns = words[..n_nouns].to_vec();
    let verbs = words[n_nouns..].to_vec();

    let total_pairs = n_nouns * n_verbs;
    let n_held = ((total_pairs as f64 * HELD_OUT_FRACTION).ceil() as usize).clamp(3, total_pairs / 2);
    let mut held_out = Vec::with_capacity(n_held);
    let mut held_seen = HashSet::new();
    while held_out.len() < n_held {
        let v = verbs[rng.random_range(0..verbs.len())].clone();
        let n = nouns[rng.random_range(0..nouns.len())].clone();
        if held_seen.insert((v.clone(), n.clone())) {
            held_out.push((v, n));
        }
    }

    let grammar = Grammar {
        nouns,
        verbs,
        max_depth: config.grammar_depth,
        held_out,
    };

    let budget_per_split = |n: usize| 200 * n + 1000;

    let mut train = Vec::with_capacity(config.n_train);
    let mut train_sentences = HashSet::new();
    let mut attempts = 0;
    while train.len() < config.n_train {
        attempts += 1;
        if attempts > budget_per_split(config.n_train) {
            return Err(Error::Generation(format!(
                "could not sample {} unique in-distribution training sentences; \
                 vocabulary or depth too small",
                config.n_train
            )));
        }
        let d = grammar.sample_derivation(&mut rng);
        if grammar.uses_held_out(&d) {
            continue;
        }
        let sentence = d.sentence();
        if train_sentences.insert(sentence.clone()) {
            train.push((sentence, d.gold()));
        }
    }

    let mut test_id = Vec::with_capacity(config.n_test);
    let mut id_sentences = HashSet::new();
    attempts = 0;
    while test_id.len() < config.n_test {
        attempts += 1;
        if attempts > budget_per_split(config.n_test) {
            return Err(Error::Generation(format!(
                "could not sample {} unique in-distribution test sentences",
                config.n_test
            )));
        }
        let d = grammar.sample_derivation(&mut rng);
        if grammar.uses_held_out(&d) {
            continue;
        }
        let sentence = d.sentence();
        if train_sentences.contains(&sentence) {
            continue;
        }
        if id_sentences.insert(sentence.clone()) {
            test_id.push((sentence, d.gold()));
        }
    }

    let mut test_ood = Vec::with_capacity(config.n_test);
    let mut ood_sentences = HashSet::new();
    attempts = 0;
    while test_ood.len() < config.n_test {
        attempts += 1;
        if attempts > budget_per_split(config.n_test) {
            return Err(Error::Generation(format!(
                "could not sample {} unique out-of-distribution test sentences",
                config.n_test
            )));
        }
        let (held_verb, held_noun) = grammar.held_out[rng.random_range(0..grammar.held_out.len())].clone();
        let mut d = grammar.sample_derivation(&mut rng);
        d.verb = held_verb;
        // overwrite one noun slot so the held-out combination is present
        let n_slots = d.noun_tokens().len();
        let slot = rng.random_range(0..n_slots);
        overwrite_noun_slot(&mut d, slot, held_noun);
        let sentence = d.sentence();
        if ood_sentences.insert(sentence.clone()) {
            test_ood.push((sentence, d.gold()));
        }
    }

    Ok(SyntheticTask {
        train,
        test_id,
        test_ood,
        grammar,
    })
}

fn overwrite_noun_slot(d: &mut Derivation, slot: usize, noun: String) {
    let mut idx = 0;
    let subj_slots = 1 + d.subject.pps.len();
    if slot < subj_slots {
        if slot == 0 {
            d.subject.noun = noun;
        } else {
            d.subject.pps[slot - 1].2 = noun;
        }
        return;
    }
    idx += subj_slots;
    if let Some(obj) = &mut d.object {
        let rel = slot - idx;
        if rel == 0 {
            obj.noun = noun;
        } else {
            obj.pps[rel - 1].2 = noun;
        }
    }
}

// --- simulated decoding ------------------------------------------------

const STREAM_JITTER: u64 = 1;
const STREAM_BELIEF: u64 = 2;
const STREAM_KIND: u64 = 3;
const STREAM_SUBST: u64 = 4;
const STREAM_INSERT: u64 = 5;

fn step_hash(seed: u64, sentence: &str, step: usize, stream: u64) -> u64 {
    let base = splitmix64(seed ^ fnv1a(sentence.as_bytes()));
    splitmix64(base ^ (step as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ stream)
}

/// Effective per-step error rate: the nominal rate with a small
/// deterministic jitter that vanishes at the endpoints. The jitter keeps
/// beam confidences nearly tie-free across sentences while preserving
/// monotonicity in the nominal rate.
fn effective_rate(error_rate: f64, seed: u64, sentence: &str, step: usize) -> f64 {
    let j = 2.0 * unit_from_hash(step_hash(seed, sentence, step, STREAM_JITTER)) - 1.0;
    (error_rate + 0.1 * j * error_rate * (1.0 - error_rate)).clamp(0.0, 1.0)
}

/// One decoding option at a step: the conjuncts it emits and its
/// emission probability.
struct StepOption {
    segment: Vec<String>,
    prob: f64,
    believed: bool,
}

fn conjunct_head(conjunct: &str) -> &str {
    conjunct
        .split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or(conjunct)
}

fn substitute_head(conjunct: &str, heads: &[String], draw: u64) -> String {
    let head = conjunct_head(conjunct);
    let pool: Vec<&String> = heads.iter().filter(|h| h.as_str() != head).collect();
    let replacement = if pool.is_empty() {
        let mut rev: String = head.chars().rev().collect();
        if rev == head {
            rev.push('x');
        }
        rev
    } else {
        pool[(splitmix64(draw) % pool.len() as u64) as usize].clone()
    };
    format!("{replacement}{}", &conjunct[head.len()..])
}

/// Decode a sentence against its gold form, returning up to `beam_size`
/// distinct candidates in non-increasing confidence order.
///
/// Each derivation step covers one gold conjunct. The decoder's preferred
/// choice at a step is the correct conjunct with probability 1 − error_rate
/// and a corruption otherwise; its emission distribution puts the dominant
/// mass on the preferred choice, so the top beam item is the preferred path
/// and every confidence is an honest product of per-step probabilities.
pub fn parse_with_beam(
    model: &ParserModel,
    sentence: &str,
    gold: &str,
    beam_size: usize,
) -> Result<Vec<BeamCandidate>> {
    if beam_size < 1 {
        return Err(Error::validation("beam_size", "must be at least 1"));
    }
    let conjuncts = split_conjuncts(gold);
    if conjuncts.is_empty() {
        return Ok(vec![BeamCandidate {
            sequence: gold.to_string(),
            confidence: 1.0,
        }]);
    }
    let heads: Vec<String> = conjuncts
        .iter()
        .map(|c| conjunct_head(c).to_string())
        .collect();
    let kinds: Vec<CorruptionKind> = model.corruption_kinds.iter().copied().collect();

    let steps: Vec<Vec<StepOption>> = conjuncts
        .iter()
        .enumerate()
        .map(|(i, conjunct)| {
            let rate = effective_rate(model.error_rate, model.seed, sentence, i);
            let believe_correct =
                unit_from_hash(step_hash(model.seed, sentence, i, STREAM_BELIEF)) >= rate;
            let believed_kind = if believe_correct {
                None
            } else {
                let k = step_hash(model.seed, sentence, i, STREAM_KIND);
                Some(kinds[(splitmix64(k) % kinds.len() as u64) as usize])
            };

            let peak = (1.0 - rate).max(0.5);
            let alt_share = (1.0 - peak) / kinds.len() as f64;

            let mut options = Vec::with_capacity(1 + kinds.len());
            options.push(StepOption {
                segment: vec![conjunct.clone()],
                prob: if believe_correct { peak } else { alt_share },
                believed: believe_correct,
            });
            for &kind in &kinds {
                let believed = believed_kind == Some(kind);
                let segment = match kind {
                    CorruptionKind::TokenSubstitute => vec![substitute_head(
                        conjunct,
                        &heads,
                        step_hash(model.seed, sentence, i, STREAM_SUBST),
                    )],
                    CorruptionKind::ConjunctDrop => vec![],
                    CorruptionKind::ConjunctInsert => vec![
                        conjunct.clone(),
                        substitute_head(
                            conjunct,
                            &heads,
                            step_hash(model.seed, sentence, i, STREAM_INSERT),
                        ),
                    ],
                };
                options.push(StepOption {
                    segment,
                    prob: if believed { peak } else { alt_share },
                    believed,
                });
            }
            // believed choice first; exact probability ties break toward it
            options.sort_by(|a, b| {
                b.prob
                    .partial_cmp(&a.prob)
                    .unwrap()
                    .then_with(|| b.believed.cmp(&a.believed))
            });
            options.retain(|o| o.prob > 0.0);
            options
        })
        .collect();

    Ok(k_best(&steps, beam_size))
}

/// Exact k-best paths over independent per-step option lists (options sorted
/// by non-increasing probability), deduplicated by rendered string.
fn k_best(steps: &[Vec<StepOption>], beam_size: usize) -> Vec<BeamCandidate> {
    #[derive(PartialEq)]
    struct Path {
        prob: f64,
        choices: Vec<u8>,
    }
    impl Eq for Path {}
    impl Ord for Path {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            self.prob
                .partial_cmp(&other.prob)
                .unwrap()
                // prefer lexicographically smaller choice vectors on ties,
                // i.e. the preferred path wins
                .then_with(|| other.choices.cmp(&self.choices))
        }
    }
    impl PartialOrd for Path {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }

    let root = Path {
        prob: steps.iter().map(|s| s[0].prob).product(),
        choices: vec![0; steps.len()],
    };
    let mut heap = BinaryHeap::from([root]);
    let mut visited: HashSet<Vec<u8>> = HashSet::new();
    visited.insert(vec![0; steps.len()]);

    let mut beam = Vec::with_capacity(beam_size);
    let mut seen_strings = HashSet::new();
    while let Some(path) = heap.pop() {
        let mut conjuncts = Vec::new();
        for (step, &choice) in steps.iter().zip(&path.choices) {
            conjuncts.extend(step[choice as usize].segment.iter().cloned());
        }
        let sequence = join_conjuncts(&conjuncts);
        if seen_strings.insert(sequence.clone()) {
            beam.push(BeamCandidate {
                sequence,
                confidence: path.prob,
            });
            if beam.len() == beam_size {
                break;
            }
        }
        for pos in 0..steps.len() {
            let next = path.choices[pos] as usize + 1;
            if next < steps[pos].len() {
                let mut choices = path.choices.clone();
                choices[pos] = next as u8;
                if visited.insert(choices.clone()) {
                    let prob =
                        path.prob / steps[pos][path.choices[pos] as usize].prob * steps[pos][next].prob;
                    heap.push(Path { prob, choices });
                }
            }
        }
    }
    beam
}
