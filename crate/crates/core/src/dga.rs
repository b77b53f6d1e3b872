//! Graded differential algebras over GF(2): validation, exhaustive search
//! for augmentations, linearization and linearized homology.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::exact::{Integer, Word, WordSum};
use crate::grading::{Grading, GradingPeriod, PoincarePolynomial};
use crate::{Error, Result};

/// Augmentation search refuses more degree-zero generators than this unless
/// told otherwise.
pub const DEFAULT_SEARCH_BOUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Integer")]
pub struct Generator<T = i64> {
    pub name: String,
    pub grading: Grading<T>,
}

impl<T: Integer> Generator<T> {
    pub fn new(name: impl Into<String>, grading: Grading<T>) -> Self {
        Generator {
            name: name.into(),
            grading,
        }
    }
}

/// A free unital GF(2) algebra on named generators with a differential.
/// Generators missing from the differential map have `∂x = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Integer", try_from = "DgaRepr<T>")]
pub struct Dga<T = i64> {
    period: GradingPeriod<T>,
    generators: Vec<Generator<T>>,
    differential: BTreeMap<String, WordSum>,
}

#[derive(Deserialize)]
#[serde(bound = "T: Integer", deny_unknown_fields)]
struct DgaRepr<T: Integer> {
    #[serde(default = "GradingPeriod::zero")]
    period: GradingPeriod<T>,
    generators: Vec<Generator<T>>,
    #[serde(default)]
    differential: BTreeMap<String, WordSum>,
}

impl<T: Integer> TryFrom<DgaRepr<T>> for Dga<T> {
    type Error = Error;
    fn try_from(r: DgaRepr<T>) -> Result<Self> {
        Dga::new(r.generators, r.period, r.differential)
    }
}

impl<T: Integer> Dga<T> {
    /// Checks that names are unique and that every differential key and
    /// every letter is a declared generator. Zero differentials are dropped.
    pub fn new(
        generators: Vec<Generator<T>>,
        period: GradingPeriod<T>,
        differential: BTreeMap<String, WordSum>,
    ) -> Result<Self> {
        let mut names = BTreeSet::new();
        for g in &generators {
            if g.name.is_empty() {
                return Err(Error::InvalidDga("empty generator name".into()));
            }
            if !names.insert(g.name.as_str()) {
                return Err(Error::InvalidDga(format!(
                    "duplicate generator {:?}",
                    g.name
                )));
            }
        }
        for (x, dx) in &differential {
            if !names.contains(x.as_str()) {
                return Err(Error::InvalidDga(format!(
                    "differential of undeclared generator {x:?}"
                )));
            }
            if let Some(l) = dx.letters().into_iter().find(|l| !names.contains(l)) {
                return Err(Error::InvalidDga(format!(
                    "∂{x} uses undeclared generator {l:?}"
                )));
            }
        }
        let differential = differential
            .into_iter()
            .filter(|(_, d)| !d.is_zero())
            .collect();
        Ok(Dga {
            period,
            generators,
            differential,
        })
    }

    pub fn generators(&self) -> &[Generator<T>] {
        &self.generators
    }

    pub fn period(&self) -> &GradingPeriod<T> {
        &self.period
    }

    pub fn grading(&self, name: &str) -> Option<&Grading<T>> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .map(|g| &g.grading)
    }

    /// `∂x`, or `None` when it is zero.
    pub fn boundary(&self, name: &str) -> Option<&WordSum> {
        self.differential.get(name)
    }

    pub fn differentials(&self) -> impl Iterator<Item = (&String, &WordSum)> {
        self.differential.iter()
    }

    fn gradings(&self) -> BTreeMap<&str, &Grading<T>> {
        self.generators
            .iter()
            .map(|g| (g.name.as_str(), &g.grading))
            .collect()
    }

    /// `∂` extended to the whole algebra by the Leibniz rule (no signs mod 2).
    pub fn apply(&self, x: &WordSum) -> WordSum {
        let mut out = WordSum::zero();
        for w in x.words() {
            let letters = w.letters();
            for (i, l) in letters.iter().enumerate() {
                let Some(dl) = self.differential.get(l) else {
                    continue;
                };
                let left = WordSum::from_word(Word::new(letters[..i].iter().cloned()));
                let right = WordSum::from_word(Word::new(letters[i + 1..].iter().cloned()));
                out.add_assign(&left.multiply(dl).multiply(&right));
            }
        }
        out
    }

    /// Renames generators. Names absent from `map` are kept; the result
    /// must still have unique names.
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        let rename = |s: &str| map.get(s).cloned().unwrap_or_else(|| s.to_string());
        let generators = self
            .generators
            .iter()
            .map(|g| Generator::new(rename(&g.name), g.grading.clone()))
            .collect();
        let differential = self
            .differential
            .iter()
            .map(|(x, dx)| {
                let words = dx
                    .words()
                    .map(|w| Word::new(w.letters().iter().map(|l| rename(l))));
                (rename(x), WordSum::from_words(words))
            })
            .collect();
        Dga::new(generators, self.period.clone(), differential)
    }

    /// Both DGA axioms, with every violation listed.
    pub fn validate(&self) -> ValidationReport<T> {
        let gradings = self.gradings();
        let one = Grading::ints(1, 0, 0);
        let mut violations = Vec::new();
        for (x, dx) in &self.differential {
            let expected = gradings[x.as_str()] - &one;
            for w in dx.words() {
                let found = w
                    .letters()
                    .iter()
                    .fold(Grading::zero(), |acc, l| &acc + gradings[l.as_str()]);
                if !(&found - &expected).canonicalize(&self.period).is_zero() {
                    violations.push(Violation::Degree {
                        generator: x.clone(),
                        word: w.clone(),
                        expected: expected.canonicalize(&self.period),
                        found: found.canonicalize(&self.period),
                    });
                }
            }
            let dd = self.apply(dx);
            if !dd.is_zero() {
                violations.push(Violation::SquareNonzero {
                    generator: x.clone(),
                    residue: dd,
                });
            }
        }
        ValidationReport { violations }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer", tag = "kind", rename_all = "snake_case")]
pub enum Violation<T = i64> {
    /// A word of `∂x` whose grading is not `|x| − 1` modulo the period.
    Degree {
        generator: String,
        word: Word,
        expected: Grading<T>,
        found: Grading<T>,
    },
    /// `∂∂x ≠ 0`.
    SquareNonzero { generator: String, residue: WordSum },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct ValidationReport<T = i64> {
    pub violations: Vec<Violation<T>>,
}

impl<T: Integer> ValidationReport<T> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A graded unital algebra map to GF(2), given by the generators it sends
/// to 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Augmentation {
    pub one_set: BTreeSet<String>,
}

impl Augmentation {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Augmentation {
            one_set: names.into_iter().map(Into::into).collect(),
        }
    }

    /// `ε(x)`: a word maps to 1 exactly when all of its letters do.
    pub fn evaluate(&self, x: &WordSum) -> bool {
        x.words()
            .filter(|w| w.letters().iter().all(|l| self.one_set.contains(l)))
            .count()
            % 2
            == 1
    }

    /// The conjugating substitution `y ↦ y + ε(y)`.
    pub fn shift(&self) -> BTreeMap<String, WordSum> {
        self.one_set
            .iter()
            .map(|y| (y.clone(), &WordSum::generator(y.clone()) + &WordSum::one()))
            .collect()
    }
}

/// Every augmentation, found by trying all subsets of the generators of
/// canonical grading zero. Sorted by the one-sets.
pub fn find_augmentations<T: Integer>(dga: &Dga<T>, bound: usize) -> Result<Vec<Augmentation>> {
    let zero_names: Vec<&str> = dga
        .generators
        .iter()
        .filter(|g| g.grading.canonicalize(&dga.period).is_zero())
        .map(|g| g.name.as_str())
        .collect();
    let count = zero_names.len();
    if count > bound || count >= 64 {
        return Err(Error::SearchSpaceTooLarge { count, bound });
    }
    let index: BTreeMap<&str, u32> = zero_names.iter().zip(0..).map(|(n, i)| (*n, i)).collect();

    // Each relation as a list of word masks; words with a letter outside
    // degree zero always vanish and are dropped.
    let relations: Vec<Vec<u64>> = dga
        .differential
        .values()
        .map(|dx| {
            dx.words()
                .filter_map(|w| {
                    w.letters()
                        .iter()
                        .try_fold(0u64, |m, l| index.get(l.as_str()).map(|i| m | 1 << i))
                })
                .collect::<Vec<u64>>()
        })
        .filter(|r| !r.is_empty())
        .collect();

    let mut found = BTreeSet::new();
    for subset in 0..(1u64 << count) {
        let ok = relations
            .iter()
            .all(|r| r.iter().filter(|&&m| m & subset == m).count() % 2 == 0);
        if ok {
            let names = (0..count)
                .filter(|i| subset >> i & 1 == 1)
                .map(|i| zero_names[i]);
            found.insert(Augmentation::new(names));
        }
    }
    Ok(found.into_iter().collect())
}

/// The linear part of `∂` conjugated by `ε`.
pub fn linearize<T: Integer>(dga: &Dga<T>, aug: &Augmentation) -> Result<LinearComplex<T>> {
    for y in &aug.one_set {
        let Some(g) = dga.grading(y) else {
            return Err(Error::InvalidAugmentation(format!(
                "unknown generator {y:?}"
            )));
        };
        if !g.canonicalize(&dga.period).is_zero() {
            return Err(Error::InvalidAugmentation(format!(
                "{y} does not have grading 0"
            )));
        }
    }
    let shift = aug.shift();
    let mut differential = BTreeMap::new();
    for (x, dx) in &dga.differential {
        let conjugated = dx.substitute(&shift);
        if conjugated.has_constant_term() {
            return Err(Error::InvalidAugmentation(format!("ε(∂{x}) = 1")));
        }
        let linear: BTreeSet<String> = conjugated
            .homogeneous_part(1)
            .words()
            .map(|w| w.letters()[0].clone())
            .collect();
        differential.insert(x.clone(), linear);
    }
    LinearComplex::new(dga.generators.clone(), dga.period.clone(), differential)
}

/// A chain complex over GF(2) with a basis of graded generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Integer")]
pub struct LinearComplex<T = i64> {
    period: GradingPeriod<T>,
    generators: Vec<Generator<T>>,
    differential: BTreeMap<String, BTreeSet<String>>,
}

impl<T: Integer> LinearComplex<T> {
    pub fn new(
        generators: Vec<Generator<T>>,
        period: GradingPeriod<T>,
        differential: BTreeMap<String, BTreeSet<String>>,
    ) -> Result<Self> {
        // Name checks are shared with the algebra.
        let as_words = differential
            .iter()
            .map(|(x, ys)| {
                (
                    x.clone(),
                    WordSum::from_words(ys.iter().map(|y| Word::new([y.clone()]))),
                )
            })
            .collect();
        Dga::new(generators.clone(), period.clone(), as_words)?;
        let differential = differential
            .into_iter()
            .filter(|(_, d)| !d.is_empty())
            .collect();
        Ok(LinearComplex {
            period,
            generators,
            differential,
        })
    }

    pub fn generators(&self) -> &[Generator<T>] {
        &self.generators
    }

    pub fn period(&self) -> &GradingPeriod<T> {
        &self.period
    }

    pub fn boundary(&self, name: &str) -> Option<&BTreeSet<String>> {
        self.differential.get(name)
    }

    /// The same data as a DGA whose differential is linear.
    pub fn as_dga(&self) -> Dga<T> {
        let differential = self
            .differential
            .iter()
            .map(|(x, ys)| {
                (
                    x.clone(),
                    WordSum::from_words(ys.iter().map(|y| Word::new([y.clone()]))),
                )
            })
            .collect();
        Dga::new(self.generators.clone(), self.period.clone(), differential)
            .expect("names were checked on construction")
    }

    pub fn squares_to_zero(&self) -> bool {
        self.differential.values().all(|ys| {
            let mut acc = BTreeSet::new();
            for y in ys {
                for z in self.differential.get(y).into_iter().flatten() {
                    if !acc.remove(z) {
                        acc.insert(z.clone());
                    }
                }
            }
            acc.is_empty()
        })
    }
}

/// Rank over GF(2) of vectors packed into `u64` limbs.
fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let limbs = rows.first().map_or(0, Vec::len);
    for bit in 0..limbs * 64 {
        let (limb, mask) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][limb] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[limb] & mask != 0 {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

/// Poincaré polynomial of the homology, one degree per canonical grading:
/// `dim H_d = |C_d| − rank ∂|C_d − rank ∂|C_{d+1}`.
pub fn homology_polynomial<T: Integer>(c: &LinearComplex<T>) -> PoincarePolynomial<T> {
    let index: BTreeMap<&str, usize> = c
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| (g.name.as_str(), i))
        .collect();
    let limbs = c.generators.len().div_ceil(64).max(1);
    let column = |name: &str| {
        let mut v = vec![0u64; limbs];
        for y in c.differential.get(name).into_iter().flatten() {
            let i = index[y.as_str()];
            v[i / 64] ^= 1 << (i % 64);
        }
        v
    };

    let mut by_degree: BTreeMap<Grading<T>, Vec<&str>> = BTreeMap::new();
    for g in &c.generators {
        by_degree
            .entry(g.grading.canonicalize(&c.period))
            .or_default()
            .push(g.name.as_str());
    }
    let rank_out: BTreeMap<&Grading<T>, usize> = by_degree
        .iter()
        .map(|(d, names)| (d, gf2_rank(names.iter().map(|n| column(n)).collect())))
        .collect();

    let one = Grading::ints(1, 0, 0);
    let dims = by_degree.iter().map(|(d, names)| {
        let up = (d + &one).canonicalize(&c.period);
        let incoming = rank_out.get(&up).copied().unwrap_or(0);
        (d.clone(), (names.len() - rank_out[d] - incoming) as u64)
    });
    PoincarePolynomial::from_dimensions(dims, c.period.clone())
}

/// Linearized homology for every augmentation.
pub fn linearized_homologies<T: Integer>(
    dga: &Dga<T>,
    bound: usize,
) -> Result<Vec<(Augmentation, PoincarePolynomial<T>)>> {
    find_augmentations(dga, bound)?
        .into_iter()
        .map(|e| {
            let p = homology_polynomial(&linearize(dga, &e)?);
            Ok((e, p))
        })
        .collect()
}
