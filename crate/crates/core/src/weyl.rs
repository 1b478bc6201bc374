//! Irreducible characters of the symmetric groups `S_n` and of the
//! hyperoctahedral groups `W_a` (type `B_a`).
//!
//! Values come from the Murnaghan–Nakayama recursions. In type A each step
//! removes a border strip whose size is the largest remaining cycle. In type
//! B the strip size is the last (smallest) part of the positive-cycle
//! partition `γ`, or of the negative-cycle partition `θ` once `γ` is
//! exhausted, and strips taken from the second diagram pick up the sign of
//! the cycle.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{bipartitions_of, partitions_of, Bipartition, Host, Partition};
use crate::scalar::{factorial, pow, sign, ExactInt};

/// Conjugacy class of `S_n`, labelled by cycle type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymClass(pub Partition);

/// Conjugacy class of `W_a`: `(γ, θ)` lists positive and negative cycle
/// lengths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeBClass(pub Bipartition);

/// `χ_λ(ν)` for `λ, ν ⊢ n`.
pub fn chi_sym<T: ExactInt>(lambda: &Partition, class: &SymClass) -> Result<T> {
    let nu = &class.0;
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            what: "cycle type",
            left: nu.size(),
            right: lambda.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_sym(lambda, nu.parts(), &mut memo))
}

fn mn_sym<T: ExactInt>(
    lambda: &Partition,
    cycles: &[usize],
    memo: &mut HashMap<(Partition, usize), T>,
) -> T {
    let Some((&x, rest)) = cycles.split_first() else {
        debug_assert!(lambda.is_empty());
        return T::one();
    };
    let key = (lambda.clone(), cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = T::zero();
    for strip in lambda.border_strips(x) {
        total = total + sign::<T>(strip.height) * mn_sym(&strip.result, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// `χ_{α,β}(γ,θ)` for bipartitions of the same rank.
pub fn chi_typeb<T: ExactInt>(label: &Bipartition, class: &TypeBClass) -> Result<T> {
    let gt = &class.0;
    if label.size() != gt.size() {
        return Err(Error::SizeMismatch {
            what: "signed cycle type",
            left: gt.size(),
            right: label.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_typeb(
        label,
        gt.first.parts(),
        gt.second.parts(),
        &mut memo,
    ))
}

fn mn_typeb<T: ExactInt>(
    label: &Bipartition,
    positive: &[usize],
    negative: &[usize],
    memo: &mut HashMap<(Bipartition, usize, usize), T>,
) -> T {
    let (x, epsilon_negative, positive, negative) =
        match (positive.split_last(), negative.split_last()) {
            (Some((&x, rest)), _) => (x, false, rest, negative),
            (None, Some((&x, rest))) => (x, true, positive, rest),
            (None, None) => {
                debug_assert!(label.is_empty());
                return T::one();
            }
        };
    let key = (label.clone(), positive.len(), negative.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = T::zero();
    for strip in label.border_strips(x) {
        let mut term = sign::<T>(strip.height);
        if epsilon_negative && strip.host == Some(Host::Second) {
            term = -term;
        }
        let rest = label.after_removal(&strip);
        total = total + term * mn_typeb(&rest, positive, negative, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Centralizer order `z_ν = ∏ i^{m_i} m_i!`.
pub fn sym_centralizer<T: ExactInt>(class: &SymClass) -> T {
    class
        .0
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(T::one(), |acc, (i, &m)| {
            acc * pow(&T::from_usize_exact(i), m) * factorial::<T>(m)
        })
}

pub fn sym_class_size<T: ExactInt>(class: &SymClass) -> T {
    factorial::<T>(class.0.size()) / sym_centralizer::<T>(class)
}

/// Centralizer order `∏ (2i)^{m_i(γ)} m_i(γ)! (2i)^{m_i(θ)} m_i(θ)!`.
pub fn typeb_centralizer<T: ExactInt>(class: &TypeBClass) -> T {
    let part = |p: &Partition| {
        p.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(T::one(), |acc, (i, &m)| {
                acc * pow(&T::from_usize_exact(2 * i), m) * factorial::<T>(m)
            })
    };
    part(&class.0.first) * part(&class.0.second)
}

pub fn typeb_class_size<T: ExactInt>(class: &TypeBClass) -> T {
    typeb_order::<T>(class.0.size()) / typeb_centralizer::<T>(class)
}

/// `|W_a| = 2^a a!`.
pub fn typeb_order<T: ExactInt>(a: usize) -> T {
    pow(&T::from_usize_exact(2), a) * factorial::<T>(a)
}

/// Default rank cap for explicit enumeration of `W_a`.
pub const BRUTEFORCE_RANK_CAP: usize = 5;

/// Element of `W_a` acting on `{±1, …, ±a}`: `i ↦ ±(perm[i] + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub negated: Vec<bool>,
}

impl SignedPermutation {
    /// Signed cycle type: cycles with an even number of sign changes are
    /// positive and go into `γ`, the rest into `θ`.
    pub fn class(&self) -> TypeBClass {
        let a = self.perm.len();
        let mut seen = vec![false; a];
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for start in 0..a {
            if seen[start] {
                continue;
            }
            let (mut len, mut flips, mut i) = (0, 0, start);
            while !seen[i] {
                seen[i] = true;
                len += 1;
                flips += usize::from(self.negated[i]);
                i = self.perm[i];
            }
            if flips % 2 == 0 {
                positive.push(len);
            } else {
                negative.push(len);
            }
        }
        positive.sort_unstable_by(|x, y| y.cmp(x));
        negative.sort_unstable_by(|x, y| y.cmp(x));
        TypeBClass(Bipartition::new(
            Partition::from_sorted(positive),
            Partition::from_sorted(negative),
        ))
    }
}

/// Explicit model of `W_a` as signed permutations, for cross-checks.
#[derive(Clone, Debug)]
pub struct SignedPermutationGroup {
    rank: usize,
}

impl SignedPermutationGroup {
    pub fn new(rank: usize, cap: usize) -> Result<Self> {
        if rank > cap {
            return Err(Error::RankCap {
                what: "signed permutation enumeration",
                rank,
                cap,
            });
        }
        Ok(SignedPermutationGroup { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> Vec<SignedPermutation> {
        let a = self.rank;
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (0..a).collect();
        permutations(&mut current, 0, &mut perms);
        let mut out = Vec::with_capacity(perms.len() << a);
        for perm in perms {
            for mask in 0u32..(1 << a) {
                out.push(SignedPermutation {
                    perm: perm.clone(),
                    negated: (0..a).map(|i| mask >> i & 1 == 1).collect(),
                });
            }
        }
        out
    }

    /// Class sizes by direct enumeration.
    pub fn class_sizes(&self) -> BTreeMap<Bipartition, u64> {
        let mut sizes = BTreeMap::new();
        for w in self.elements() {
            *sizes.entry(w.class().0).or_insert(0) += 1;
        }
        sizes
    }
}

fn permutations(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations(current, k + 1, out);
        current.swap(k, i);
    }
}

/// Enumerates `W_a` under the default rank cap.
pub fn bruteforce_typeb(a: usize) -> Result<SignedPermutationGroup> {
    SignedPermutationGroup::new(a, BRUTEFORCE_RANK_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylGroup {
    Symmetric(usize),
    TypeB(usize),
}

impl WeylGroup {
    pub fn order<T: ExactInt>(&self) -> T {
        match *self {
            WeylGroup::Symmetric(n) => factorial(n),
            WeylGroup::TypeB(a) => typeb_order(a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Label {
    Partition(Partition),
    Bipartition(Bipartition),
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Partition(p) => write!(f, "{p}"),
            Label::Bipartition(b) => write!(f, "{b}"),
        }
    }
}

/// Square table of character values.
///
/// Rows are characters in decreasing lexicographic order (first component
/// major for bipartitions), so the trivial character comes first. Columns are
/// classes in increasing lexicographic order; for `W_a` the negative-cycle
/// part is compared first. Either way the identity class is the first column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable<T> {
    pub group: WeylGroup,
    pub labels: Vec<Label>,
    pub classes: Vec<Label>,
    pub class_sizes: Vec<T>,
    pub values: Vec<Vec<T>>,
}

pub fn character_table<T: ExactInt>(group: WeylGroup) -> CharacterTable<T> {
    match group {
        WeylGroup::Symmetric(n) => {
            let labels = partitions_of(n);
            let mut classes = labels.clone();
            classes.reverse();
            let values = labels
                .par_iter()
                .map(|lam| {
                    classes
                        .iter()
                        .map(|nu| chi_sym(lam, &SymClass(nu.clone())).expect("sizes agree"))
                        .collect()
                })
                .collect();
            CharacterTable {
                group,
                class_sizes: classes
                    .iter()
                    .map(|nu| sym_class_size(&SymClass(nu.clone())))
                    .collect(),
                labels: labels.into_iter().map(Label::Partition).collect(),
                classes: classes.into_iter().map(Label::Partition).collect(),
                values,
            }
        }
        WeylGroup::TypeB(a) => {
            let labels = bipartitions_of(a);
            let mut classes = labels.clone();
            classes.sort_by(|x, y| (&x.second, &x.first).cmp(&(&y.second, &y.first)));
            let values = labels
                .par_iter()
                .map(|ab| {
                    classes
                        .iter()
                        .map(|gt| chi_typeb(ab, &TypeBClass(gt.clone())).expect("sizes agree"))
                        .collect()
                })
                .collect();
            CharacterTable {
                group,
                class_sizes: classes
                    .iter()
                    .map(|gt| typeb_class_size(&TypeBClass(gt.clone())))
                    .collect(),
                labels: labels.into_iter().map(Label::Bipartition).collect(),
                classes: classes.into_iter().map(Label::Bipartition).collect(),
                values,
            }
        }
    }
}

impl<T: ExactInt> CharacterTable<T> {
    /// `Σ_ν |ν| χ_i(ν) χ_j(ν)`.
    pub fn inner_product(&self, i: usize, j: usize) -> T {
        self.class_sizes
            .iter()
            .zip(self.values[i].iter().zip(&self.values[j]))
            .fold(T::zero(), |acc, (c, (x, y))| {
                acc + c.clone() * x.clone() * y.clone()
            })
    }

    /// First pair of rows violating `Σ_ν |ν| χ_i χ_j = |G| δ_ij`, if any.
    pub fn row_orthogonality_failure(&self) -> Option<(usize, usize)> {
        let order: T = self.group.order();
        (0..self.labels.len())
            .flat_map(|i| (i..self.labels.len()).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let expected = if i == j { order.clone() } else { T::zero() };
                self.inner_product(i, j) != expected
            })
    }

    /// First pair of columns violating `Σ_χ χ(ν) χ(μ) = δ_νμ |G| / |ν|`.
    pub fn column_orthogonality_failure(&self) -> Option<(usize, usize)> {
        let order: T = self.group.order();
        let n = self.classes.len();
        (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let sum = self
                    .values
                    .iter()
                    .fold(T::zero(), |acc, row| acc + row[i].clone() * row[j].clone());
                let expected = if i == j {
                    order.clone() / self.class_sizes[i].clone()
                } else {
                    T::zero()
                };
                sum != expected
            })
    }
}

impl<T: ExactInt> Serialize for CharacterTable<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            labels: &'a [Label],
            classes: &'a [Label],
            class_sizes: Vec<String>,
            values: Vec<Vec<String>>,
        }
        Doc {
            labels: &self.labels,
            classes: &self.classes,
            class_sizes: self.class_sizes.iter().map(ToString::to_string).collect(),
            values: self
                .values
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}
