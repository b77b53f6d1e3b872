use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A monomial in the free unital algebra: a sequence of generator names.
/// The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<String>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn new<I, S>(letters: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Word(letters.into_iter().map(Into::into).collect())
    }

    pub fn letters(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// The empty word, i.e. the unit.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.0.join(" "))
        }
    }
}

/// An element of the free unital algebra over GF(2): a set of words, each
/// present with coefficient one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WordSum {
    words: BTreeSet<Word>,
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::unit())
    }

    pub fn generator(name: impl Into<String>) -> Self {
        Self::from_word(Word(vec![name.into()]))
    }

    pub fn from_word(w: Word) -> Self {
        WordSum {
            words: BTreeSet::from([w]),
        }
    }

    /// Sums the given words with GF(2) cancellation of repeats.
    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut s = Self::zero();
        for w in words {
            s.toggle(w);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn has_constant_term(&self) -> bool {
        self.words.contains(&Word::unit())
    }

    /// Every generator name occurring in some word.
    pub fn letters(&self) -> BTreeSet<&str> {
        self.words
            .iter()
            .flat_map(|w| w.0.iter().map(String::as_str))
            .collect()
    }

    fn toggle(&mut self, w: Word) {
        if !self.words.remove(&w) {
            self.words.insert(w);
        }
    }

    pub fn add_assign(&mut self, other: &WordSum) {
        for w in &other.words {
            self.toggle(w.clone());
        }
    }

    pub fn multiply(&self, other: &WordSum) -> WordSum {
        let mut out = WordSum::zero();
        for x in &self.words {
            for y in &other.words {
                out.toggle(x.concat(y));
            }
        }
        out
    }

    /// Extends `map` to an algebra homomorphism and applies it. Generators
    /// absent from `map` are left fixed.
    pub fn substitute(&self, map: &BTreeMap<String, WordSum>) -> WordSum {
        self.substitute_with(|name| map.get(name).cloned())
    }

    pub fn substitute_with<F>(&self, mut image: F) -> WordSum
    where
        F: FnMut(&str) -> Option<WordSum>,
    {
        let mut out = WordSum::zero();
        for w in &self.words {
            let mut term = WordSum::one();
            for letter in &w.0 {
                let img = image(letter).unwrap_or_else(|| WordSum::generator(letter.clone()));
                term = term.multiply(&img);
                if term.is_zero() {
                    break;
                }
            }
            out.add_assign(&term);
        }
        out
    }

    /// The words of length exactly `n`.
    pub fn homogeneous_part(&self, n: usize) -> WordSum {
        WordSum {
            words: self
                .words
                .iter()
                .filter(|w| w.len() == n)
                .cloned()
                .collect(),
        }
    }
}

impl Add for &WordSum {
    type Output = WordSum;
    fn add(self, rhs: &WordSum) -> WordSum {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Mul for &WordSum {
    type Output = WordSum;
    fn mul(self, rhs: &WordSum) -> WordSum {
        self.multiply(rhs)
    }
}

/// Serialized as an array of words; repeated words cancel on input.
impl Serialize for WordSum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(&self.words)
    }
}

impl<'de> Deserialize<'de> for WordSum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(WordSum::from_words(Vec::<Word>::deserialize(d)?))
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.words.iter().map(Word::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
