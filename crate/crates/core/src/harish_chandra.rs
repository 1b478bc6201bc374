//! Harish-Chandra induction and restriction of unipotent representations of
//! `U_n(q)` within a fixed series `ℰ(U_n(q), (L_t, ρ_t))`.
//!
//! Through the Howlett–Lehrer comparison theorem and the Fong–Srinivasan
//! labelling, `ρ_{Δ_t,α,β} ⊠ ρ^{GL}_{(a_1)} ⊠ … ⊠ ρ^{GL}_{(a_r)}` induces to
//! `Ind^{W_a}(χ_{α,β} ⊠ χ_{(a_1)} ⊠ …)`, computed here by iterating the
//! type-B Pieri rule. [`frobenius_reciprocity_oracle`] recomputes single Pieri
//! multiplicities from character tables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{bipartitions_of, partitions_of, Bipartition, Partition};
use crate::poly::Polynomial;
use crate::scalar::{factorial, ExactInt};
use crate::unipotent::{degree_of_symbol, SymbolLabel};
use crate::weyl::{self, sym_class_size, typeb_class_size, typeb_order, SymClass, TypeBClass};

pub type BipartitionMultiset = BTreeMap<Bipartition, u64>;

/// Irreducible unipotent constituents with multiplicities. All labels share
/// one series `t` and one rank `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RepMultiset {
    entries: BTreeMap<SymbolLabel, u64>,
}

impl RepMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_labels(labels: impl IntoIterator<Item = SymbolLabel>) -> Result<Self> {
        let mut m = Self::new();
        for l in labels {
            m.insert(l, 1)?;
        }
        Ok(m)
    }

    /// Adds `multiplicity` copies of `label`.
    pub fn insert(&mut self, label: SymbolLabel, multiplicity: u64) -> Result<()> {
        if multiplicity == 0 {
            return Ok(());
        }
        if let Some(first) = self.entries.keys().next() {
            if first.t != label.t || first.rank() != label.rank() {
                return Err(Error::MixedMultiset(format!("{first} and {label}")));
            }
        }
        *self.entries.entry(label).or_insert(0) += multiplicity;
        Ok(())
    }

    pub fn multiplicity(&self, label: &SymbolLabel) -> u64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn contains(&self, label: &SymbolLabel) -> bool {
        self.entries.contains_key(label)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct constituents.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Constituents counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.values().all(|&m| m == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SymbolLabel, u64)> {
        self.entries.iter().map(|(l, &m)| (l, m))
    }

    pub fn labels(&self) -> impl Iterator<Item = &SymbolLabel> {
        self.entries.keys()
    }

    /// Series index shared by all labels, `None` when empty.
    pub fn series(&self) -> Option<usize> {
        self.entries.keys().next().map(|l| l.t)
    }

    pub fn rank(&self) -> Option<usize> {
        self.entries.keys().next().map(SymbolLabel::rank)
    }

    /// Multiplicity-wise `self - other`, clamped at zero.
    pub fn difference(&self, other: &Self) -> Self {
        let entries = self
            .entries
            .iter()
            .filter_map(|(l, &m)| {
                let left = m.saturating_sub(other.multiplicity(l));
                (left > 0).then(|| (l.clone(), left))
            })
            .collect();
        RepMultiset { entries }
    }

    /// Multiplicity-wise minimum.
    pub fn intersection(&self, other: &Self) -> Self {
        let entries = self
            .entries
            .iter()
            .filter_map(|(l, &m)| {
                let common = m.min(other.multiplicity(l));
                (common > 0).then(|| (l.clone(), common))
            })
            .collect();
        RepMultiset { entries }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.entries
            .iter()
            .all(|(l, &m)| other.multiplicity(l) >= m)
    }

    /// Direct sum.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (l, m) in other.iter() {
            out.insert(l.clone(), m)?;
        }
        Ok(out)
    }

    /// `Σ m · deg ρ` as a polynomial in `q`.
    pub fn dimension<C: ExactInt>(&self) -> Result<Polynomial<C>> {
        let mut total = Polynomial::zero();
        for (l, m) in self.iter() {
            total = total + degree_of_symbol::<C>(l)?.scale(&C::from_u64(m).expect("fits"));
        }
        Ok(total)
    }
}

impl Serialize for RepMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            label: &'a SymbolLabel,
            multiplicity: u64,
        }
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (label, &multiplicity) in &self.entries {
            seq.serialize_element(&Entry {
                label,
                multiplicity,
            })?;
        }
        seq.end()
    }
}

/// Block-diagonal Levi `U_b(q) × GL_{a_1}(q²) × … × GL_{a_r}(q²)` of
/// `U_n(q)`, `n = 2Σa_i + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeviShape {
    pub b: usize,
    pub gl_ranks: Vec<usize>,
}

impl LeviShape {
    pub fn rank(&self) -> usize {
        2 * self.gl_ranks.iter().sum::<usize>() + self.b
    }
}

/// `ρ_{Δ_t,α,β} ⊠ ρ^{GL}_{λ_1} ⊠ … ⊠ ρ^{GL}_{λ_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeviUnipotentLabel {
    pub unitary: SymbolLabel,
    pub gl_parts: Vec<Partition>,
}

/// `Ind_{W_r × S_s}^{W_{r+s}} (χ_{α,β} ⊠ χ_{(s)})`: add `d` boxes to `α` and
/// `s - d` boxes to `β`, no two added boxes in the same column.
pub fn pieri_induce(start: &Bipartition, s: usize) -> BipartitionMultiset {
    let mut out = BTreeMap::new();
    for d in 0..=s {
        let seconds = start.second.add_horizontal_strip(s - d);
        for first in start.first.add_horizontal_strip(d) {
            for second in &seconds {
                *out.entry(Bipartition::new(first.clone(), second.clone()))
                    .or_insert(0) += 1;
            }
        }
    }
    out
}

/// The `χ_{(s)}`-isotypic part of `Res_{W_{a-s} × S_s}^{W_a} χ_{γ,θ}`:
/// delete `d` boxes from `γ` and `s - d` from `θ`, no two in one column.
pub fn pieri_restrict(gt: &Bipartition, s: usize) -> Result<BipartitionMultiset> {
    if s > gt.size() {
        return Err(Error::OutOfRange {
            what: "boxes to delete",
            value: s,
            min: 0,
            max: gt.size(),
        });
    }
    let mut out = BTreeMap::new();
    for d in 0..=s {
        let seconds = gt.second.remove_horizontal_strip(s - d);
        for first in gt.first.remove_horizontal_strip(d) {
            for second in &seconds {
                *out.entry(Bipartition::new(first.clone(), second.clone()))
                    .or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// Signature of a Pieri kernel, so that callers can swap in alternatives.
pub type PieriFn = fn(&Bipartition, usize) -> BipartitionMultiset;

/// Harish-Chandra induction from a Levi with one-row GL labels.
pub fn hc_induce(shape: &LeviShape, label: &LeviUnipotentLabel) -> Result<RepMultiset> {
    hc_induce_with(shape, label, pieri_induce)
}

pub fn hc_induce_with(
    shape: &LeviShape,
    label: &LeviUnipotentLabel,
    pieri: PieriFn,
) -> Result<RepMultiset> {
    if label.unitary.rank() != shape.b {
        return Err(Error::SizeMismatch {
            what: "unitary block",
            left: label.unitary.rank(),
            right: shape.b,
        });
    }
    if label.gl_parts.len() != shape.gl_ranks.len() {
        return Err(Error::SizeMismatch {
            what: "number of GL blocks",
            left: label.gl_parts.len(),
            right: shape.gl_ranks.len(),
        });
    }
    let mut current: BipartitionMultiset = BTreeMap::from([(label.unitary.bipartition(), 1)]);
    for (part, &rank) in label.gl_parts.iter().zip(&shape.gl_ranks) {
        if part.size() != rank {
            return Err(Error::SizeMismatch {
                what: "GL block label",
                left: part.size(),
                right: rank,
            });
        }
        if part.len() > 1 {
            return Err(Error::UnsupportedGlPart(part.clone()));
        }
        let mut next = BTreeMap::new();
        for (b, m) in &current {
            for (c, k) in pieri(b, rank) {
                *next.entry(c).or_insert(0) += m * k;
            }
        }
        current = next;
    }
    let mut out = RepMultiset::new();
    for (b, m) in current {
        out.insert(label.unitary.with_bipartition(b), m)?;
    }
    debug_assert!(out.rank().is_none_or(|n| n == shape.rank()));
    if shape.gl_ranks.len() == 1 && !out.is_multiplicity_free() {
        log::warn!(
            "one-block induction of {} is not multiplicity-free",
            label.unitary
        );
    }
    Ok(out)
}

/// Largest `W_a` the reciprocity oracle will sum over.
pub const ORACLE_RANK_CAP: usize = 6;

/// Character kernels used by the oracle.
#[derive(Clone, Copy, Debug)]
pub struct CharacterKernels {
    pub chi_sym: fn(&Partition, &SymClass) -> Result<BigInt>,
    pub chi_typeb: fn(&Bipartition, &TypeBClass) -> Result<BigInt>,
}

impl Default for CharacterKernels {
    fn default() -> Self {
        CharacterKernels {
            chi_sym: weyl::chi_sym::<BigInt>,
            chi_typeb: weyl::chi_typeb::<BigInt>,
        }
    }
}

/// `⟨Ind_{W_r × S_s}^{W_a} (χ_φ ⊠ χ_ψ), χ⟩`, computed as `⟨χ_φ ⊠ χ_ψ, Res χ⟩`
/// from character values and class sizes. The class `((γ,θ), μ)` of
/// `W_r × S_s` fuses to `(γ ∪ μ, θ)` in `W_a`.
pub fn frobenius_reciprocity_oracle(
    phi: &Bipartition,
    psi: &Partition,
    chi: &Bipartition,
) -> Result<u64> {
    frobenius_reciprocity_oracle_with(phi, psi, chi, &CharacterKernels::default())
}

pub fn frobenius_reciprocity_oracle_with(
    phi: &Bipartition,
    psi: &Partition,
    chi: &Bipartition,
    kernels: &CharacterKernels,
) -> Result<u64> {
    let (r, s) = (phi.size(), psi.size());
    let a = r + s;
    if chi.size() != a {
        return Err(Error::SizeMismatch {
            what: "induced character",
            left: chi.size(),
            right: a,
        });
    }
    if a > ORACLE_RANK_CAP {
        return Err(Error::RankCap {
            what: "Frobenius reciprocity oracle",
            rank: a,
            cap: ORACLE_RANK_CAP,
        });
    }
    let sym_classes = partitions_of(s);
    let sym_values = sym_classes
        .iter()
        .map(|mu| {
            let c = SymClass(mu.clone());
            Ok(((kernels.chi_sym)(psi, &c)?, sym_class_size::<BigInt>(&c)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = BigInt::zero();
    for gt in bipartitions_of(r) {
        let class = TypeBClass(gt.clone());
        let phi_value = (kernels.chi_typeb)(phi, &class)?;
        if phi_value.is_zero() {
            continue;
        }
        let size = typeb_class_size::<BigInt>(&class);
        for (mu, (psi_value, mu_size)) in sym_classes.iter().zip(&sym_values) {
            let mut positive: Vec<usize> = gt.first.parts().to_vec();
            positive.extend_from_slice(mu.parts());
            positive.sort_unstable_by(|x, y| y.cmp(x));
            let fused = TypeBClass(Bipartition::new(
                Partition::from_sorted(positive),
                gt.second.clone(),
            ));
            let chi_value = (kernels.chi_typeb)(chi, &fused)?;
            total += &size * mu_size * &phi_value * psi_value * chi_value;
        }
    }
    let order = typeb_order::<BigInt>(r) * factorial::<BigInt>(s);
    let (m, rem) = total.div_rem(&order);
    if !rem.is_zero() || m.is_negative() {
        return Err(Error::Verification(format!(
            "inner product {total}/{order} is not a multiplicity"
        )));
    }
    Ok(m.to_u64().expect("multiplicity fits in u64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bp(a: &[usize], b: &[usize]) -> Bipartition {
        Bipartition::new(p(a), p(b))
    }

    fn keys(m: &BipartitionMultiset) -> Vec<Bipartition> {
        m.keys().cloned().collect()
    }

    #[test]
    fn pieri_examples() {
        let one = pieri_induce(&Bipartition::empty(), 1);
        assert_eq!(keys(&one), vec![bp(&[], &[1]), bp(&[1], &[])]);
        let start = bp(&[2, 1], &[3]);
        assert_eq!(keys(&pieri_induce(&start, 0)), vec![start.clone()]);
        for k in 1..5usize {
            let up = pieri_induce(&bp(&[], &vec![1; k]), 1);
            assert!(up.contains_key(&bp(&[1], &vec![1; k])));
            let mut hook = vec![2];
            hook.extend(vec![1; k - 1]);
            assert!(up.contains_key(&bp(&[], &hook)));
            assert!(up.contains_key(&bp(&[], &vec![1; k + 1])));
            assert_eq!(up.len(), 3);
            assert!(up.values().all(|&m| m == 1));

            let down = pieri_restrict(&bp(&[], &vec![1; k]), 1).unwrap();
            assert_eq!(keys(&down), vec![bp(&[], &vec![1; k - 1])]);
        }
        for k in 2..6usize {
            let down = pieri_restrict(&bp(&[k - 1], &[1]), 1).unwrap();
            let mut expected = vec![bp(&[k - 1], &[]), bp(&[k - 2], &[1])];
            expected.sort();
            assert_eq!(keys(&down), expected);
        }
        assert_eq!(
            keys(&pieri_restrict(&start, 0).unwrap()),
            vec![start.clone()]
        );
        assert!(pieri_restrict(&start, 7).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            frobenius_reciprocity_oracle(&Bipartition::empty(), &p(&[1]), &bp(&[1], &[])).unwrap(),
            1
        );
        assert_eq!(
            frobenius_reciprocity_oracle(&bp(&[1], &[]), &p(&[1]), &bp(&[2], &[])).unwrap(),
            1
        );
        assert_eq!(
            frobenius_reciprocity_oracle(&bp(&[1], &[]), &p(&[1]), &bp(&[], &[2])).unwrap(),
            0
        );
        assert!(matches!(
            frobenius_reciprocity_oracle(&bp(&[4], &[]), &p(&[3]), &bp(&[7], &[])),
            Err(Error::RankCap { .. })
        ));
        // The sign character of S_2 induces to characters outside the Pieri set.
        assert_eq!(
            frobenius_reciprocity_oracle(&Bipartition::empty(), &p(&[1, 1]), &bp(&[1, 1], &[]))
                .unwrap(),
            1
        );
    }

    #[test]
    fn induce_into_u3() {
        let shape = LeviShape {
            b: 1,
            gl_ranks: vec![1],
        };
        let label = LeviUnipotentLabel {
            unitary: SymbolLabel::cuspidal(1),
            gl_parts: vec![p(&[1])],
        };
        let out = hc_induce(&shape, &label).unwrap();
        let parts: Vec<Partition> = out.labels().map(SymbolLabel::to_partition).collect();
        assert_eq!(parts.len(), 2);
        assert!(parts.contains(&p(&[3])));
        assert!(parts.contains(&p(&[1, 1, 1])));
        assert_eq!(out.rank(), Some(3));

        let trivial = LeviShape {
            b: 11,
            gl_ranks: vec![],
        };
        let sym = SymbolLabel::new(1, p(&[1]), p(&[2, 2]));
        let same = hc_induce(
            &trivial,
            &LeviUnipotentLabel {
                unitary: sym.clone(),
                gl_parts: vec![],
            },
        )
        .unwrap();
        assert_eq!(same, RepMultiset::from_labels([sym]).unwrap());
    }

    #[test]
    fn induce_errors() {
        let shape = LeviShape {
            b: 1,
            gl_ranks: vec![2],
        };
        let bad = LeviUnipotentLabel {
            unitary: SymbolLabel::cuspidal(1),
            gl_parts: vec![p(&[1, 1])],
        };
        assert_eq!(
            hc_induce(&shape, &bad),
            Err(Error::UnsupportedGlPart(p(&[1, 1])))
        );
        let wrong_rank = LeviUnipotentLabel {
            unitary: SymbolLabel::cuspidal(2),
            gl_parts: vec![p(&[2])],
        };
        assert!(matches!(
            hc_induce(&shape, &wrong_rank),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn two_blocks_are_not_multiplicity_free() {
        let shape = LeviShape {
            b: 0,
            gl_ranks: vec![1, 1],
        };
        let label = LeviUnipotentLabel {
            unitary: SymbolLabel::cuspidal(0),
            gl_parts: vec![p(&[1]), p(&[1])],
        };
        let out = hc_induce(&shape, &label).unwrap();
        assert_eq!(out.multiplicity(&SymbolLabel::new(0, p(&[1]), p(&[1]))), 2);
        assert_eq!(out.total(), 6);
    }

    #[test]
    fn multiset_algebra() {
        let a = SymbolLabel::new(1, p(&[1]), p(&[]));
        let b = SymbolLabel::new(1, p(&[]), p(&[1]));
        let x = RepMultiset::from_labels([a.clone(), b.clone()]).unwrap();
        let y = RepMultiset::from_labels([b.clone()]).unwrap();
        assert_eq!(
            x.difference(&y),
            RepMultiset::from_labels([a.clone()]).unwrap()
        );
        assert_eq!(x.intersection(&y), y);
        assert!(y.is_subset(&x));
        assert_eq!(x.sum(&y).unwrap().multiplicity(&b), 2);
        let mut z = RepMultiset::new();
        assert!(z.insert(SymbolLabel::cuspidal(2), 1).is_ok());
        assert!(matches!(z.insert(a, 1), Err(Error::MixedMultiset(_))));
        let dim = x.dimension::<i64>().unwrap();
        assert_eq!(dim, Polynomial::new(vec![1, 0, 0, 1]));
        assert_eq!(
            serde_json::to_value(&y).unwrap(),
            serde_json::json!([{"label": {"t": 1, "alpha": [], "beta": [1]}, "multiplicity": 1}])
        );
    }
}
