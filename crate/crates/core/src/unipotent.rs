//! Unipotent representations of `GL_n(q)` and `U_n(q)`: generic degrees,
//! the partition and symbol labellings, and Harish-Chandra series.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{triangular, Bipartition, Partition};
use crate::poly::{linear_factor, twisted_factor, Polynomial};
use crate::scalar::ExactInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Group {
    #[serde(rename = "GL")]
    General,
    #[serde(rename = "U")]
    Unitary,
}

/// `ρ_λ^{GL}` or `ρ_λ^U` of rank `|λ|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PartitionLabel {
    pub group: Group,
    pub lambda: Partition,
}

impl PartitionLabel {
    pub fn unitary(lambda: Partition) -> Self {
        PartitionLabel {
            group: Group::Unitary,
            lambda,
        }
    }

    pub fn rank(&self) -> usize {
        self.lambda.size()
    }
}

/// `ρ_{Δ_t,α,β}` of `U_n(q)`, with `n = 2(|α| + |β|) + t(t+1)/2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymbolLabel {
    pub t: usize,
    pub alpha: Partition,
    pub beta: Partition,
}

impl SymbolLabel {
    pub fn new(t: usize, alpha: Partition, beta: Partition) -> Self {
        SymbolLabel { t, alpha, beta }
    }

    pub fn cuspidal(t: usize) -> Self {
        Self::new(t, Partition::empty(), Partition::empty())
    }

    pub fn rank(&self) -> usize {
        2 * self.bipartition_rank() + triangular(self.t)
    }

    /// `a = |α| + |β|`, the rank of the relative Weyl group `W_a`.
    pub fn bipartition_rank(&self) -> usize {
        self.alpha.size() + self.beta.size()
    }

    pub fn bipartition(&self) -> Bipartition {
        Bipartition::new(self.alpha.clone(), self.beta.clone())
    }

    pub fn with_bipartition(&self, b: Bipartition) -> Self {
        SymbolLabel::new(self.t, b.first, b.second)
    }

    /// Partition label of the same representation.
    pub fn to_partition(&self) -> Partition {
        from_symbol(self).lambda
    }
}

impl fmt::Display for SymbolLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Δ{}, {}, {})", self.t, self.alpha, self.beta)
    }
}

/// Harish-Chandra series `ℰ(U_n(q), (L_t, ρ_t))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HcSeries {
    pub t: usize,
    pub rank: usize,
    /// `t = 0` for even rank, `t = 1` for odd rank.
    pub principal: bool,
    /// The representation is the cuspidal `ρ_{Δ_t}` itself.
    pub cuspidal: bool,
}

/// `a(λ) = Σ (i-1) λ_i`.
pub fn a_value(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &p)| i * p).sum()
}

fn hook_formula<C: ExactInt>(
    lambda: &Partition,
    factor: fn(usize) -> Polynomial<C>,
) -> Result<Polynomial<C>> {
    let n = lambda.size();
    let numerator = (1..=n).fold(Polynomial::monomial(C::one(), a_value(lambda)), |acc, i| {
        &acc * &factor(i)
    });
    let denominator = lambda
        .hook_lengths()
        .iter()
        .flatten()
        .fold(Polynomial::one(), |acc, &h| &acc * &factor(h));
    numerator.div_exact(&denominator)
}

/// Generic degree of `ρ_λ^{GL}`: `q^{a(λ)} ∏(q^i - 1) / ∏_□ (q^{h(□)} - 1)`.
pub fn degree_gl<C: ExactInt>(lambda: &Partition) -> Result<Polynomial<C>> {
    hook_formula(lambda, linear_factor::<C>)
}

/// Generic degree of `ρ_λ^U`:
/// `q^{a(λ)} ∏(q^i - (-1)^i) / ∏_□ (q^{h(□)} - (-1)^{h(□)})`.
///
/// Numerator and denominator are expanded in full before one exact division.
pub fn degree_u<C: ExactInt>(lambda: &Partition) -> Result<Polynomial<C>> {
    hook_formula(lambda, twisted_factor::<C>)
}

pub fn degree_gl_at<C: ExactInt>(lambda: &Partition, q: i64) -> Result<C> {
    Ok(degree_gl::<C>(lambda)?.eval_at(q))
}

pub fn degree_u_at<C: ExactInt>(lambda: &Partition, q: i64) -> Result<C> {
    Ok(degree_u::<C>(lambda)?.eval_at(q))
}

/// Generic degree of a unitary label in either labelling.
pub fn degree_of_symbol<C: ExactInt>(label: &SymbolLabel) -> Result<Polynomial<C>> {
    degree_u(&label.to_partition())
}

/// `ρ_λ^U ↦ ρ_{Δ_t,α,β}`: `t` is the 2-core, and the 2-quotient is swapped
/// when `t` is odd.
pub fn to_symbol(label: &PartitionLabel) -> Result<SymbolLabel> {
    if label.group != Group::Unitary {
        return Err(Error::RankEquation(
            "symbol labels exist only for unitary groups".into(),
        ));
    }
    Ok(symbol_of(&label.lambda))
}

/// Symbol of `ρ_λ^U`.
pub fn symbol_of(lambda: &Partition) -> SymbolLabel {
    let cq = lambda.core_quotient();
    let q = if cq.core % 2 == 0 {
        cq.quotient
    } else {
        cq.quotient.swapped()
    };
    SymbolLabel::new(cq.core, q.first, q.second)
}

/// Inverse of [`to_symbol`].
pub fn from_symbol(label: &SymbolLabel) -> PartitionLabel {
    let b = label.bipartition();
    let quotient = if label.t % 2 == 0 { b } else { b.swapped() };
    PartitionLabel::unitary(Partition::from_core_quotient(label.t, &quotient))
}

pub fn hc_series(lambda: &Partition) -> HcSeries {
    let t = lambda.two_core();
    let rank = lambda.size();
    HcSeries {
        t,
        rank,
        principal: (rank % 2 == 0 && t == 0) || (rank % 2 == 1 && t == 1),
        cuspidal: triangular(t) == rank,
    }
}

/// `Δ_t` when `n = t(t+1)/2`, otherwise `None`.
pub fn cuspidal_exists(n: usize) -> Option<Partition> {
    (0..)
        .take_while(|&t| triangular(t) <= n)
        .find(|&t| triangular(t) == n)
        .map(Partition::staircase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use num_bigint::BigInt;

    type P = Polynomial<i64>;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn gl_degrees() {
        assert_eq!(degree_gl::<i64>(&p(&[4])).unwrap(), P::one());
        assert_eq!(degree_gl::<i64>(&p(&[1, 1])).unwrap(), P::monomial(1, 1));
        assert_eq!(
            degree_gl::<i64>(&p(&[2, 1])).unwrap(),
            P::new(vec![0, 1, 1])
        );
        assert_eq!(degree_gl_at::<i64>(&p(&[2, 1]), 3).unwrap(), 12);
    }

    #[test]
    fn unitary_degrees() {
        assert_eq!(degree_u::<i64>(&p(&[1, 1, 1])).unwrap(), P::monomial(1, 3));
        assert_eq!(degree_u::<i64>(&p(&[5])).unwrap(), P::one());
        assert_eq!(
            degree_u::<i64>(&p(&[2, 1])).unwrap(),
            P::new(vec![0, -1, 1])
        );
        assert_eq!(degree_u_at::<i64>(&p(&[2, 1]), 2).unwrap(), 2);
        assert_eq!(degree_u::<i64>(&Partition::empty()).unwrap(), P::one());
    }

    #[test]
    fn steinberg_is_a_power() {
        for n in 0..=10 {
            let d = degree_u::<BigInt>(&Partition::column(n)).unwrap();
            assert_eq!(
                d,
                Polynomial::monomial(BigInt::from(1), n * n.saturating_sub(1) / 2)
            );
        }
    }

    #[test]
    fn symbols() {
        let s = symbol_of(&p(&[3, 3, 2, 2, 1]));
        assert_eq!(s, SymbolLabel::new(1, p(&[1]), p(&[2, 2])));
        assert_eq!(s.rank(), 11);
        assert_eq!(from_symbol(&s).lambda, p(&[3, 3, 2, 2, 1]));
        for t in 0..5 {
            assert_eq!(
                symbol_of(&Partition::staircase(t)),
                SymbolLabel::cuspidal(t)
            );
            assert_eq!(
                from_symbol(&SymbolLabel::cuspidal(t)).lambda,
                Partition::staircase(t)
            );
        }
        let gl = PartitionLabel {
            group: Group::General,
            lambda: p(&[2]),
        };
        assert!(to_symbol(&gl).is_err());
    }

    #[test]
    fn coxeter_hook_symbols() {
        for k in 0..=8usize {
            for a in 0..=2 * k {
                let mut parts = vec![1 + a];
                parts.extend(std::iter::repeat(1).take(2 * k - a));
                let s = symbol_of(&p(&parts));
                let h = a / 2;
                let expected = if a % 2 == 0 {
                    SymbolLabel::new(1, Partition::row(h), Partition::column(k - h))
                } else {
                    SymbolLabel::new(2, Partition::row(h), Partition::column(k - h - 1))
                };
                assert_eq!(s, expected, "k={k} a={a}");
            }
        }
    }

    #[test]
    fn series() {
        let s = hc_series(&p(&[3, 3, 2, 2, 1]));
        assert_eq!((s.t, s.principal, s.cuspidal), (1, true, false));
        let c = hc_series(&Partition::staircase(3));
        assert_eq!((c.t, c.cuspidal), (3, true));
        for theta in 1..6usize {
            for s in 0..=(theta - 1) / 2 {
                let lam = p(&[2 * theta - 2 * s, 2 * s + 1]);
                assert_eq!(hc_series(&lam).t, 2);
            }
        }
        assert!(hc_series(&p(&[2])).principal);
    }

    #[test]
    fn cuspidals() {
        assert_eq!(cuspidal_exists(3), Some(p(&[2, 1])));
        assert_eq!(cuspidal_exists(2), None);
        assert_eq!(cuspidal_exists(6), Some(p(&[3, 2, 1])));
        assert_eq!(cuspidal_exists(0), Some(Partition::empty()));
    }

    #[test]
    fn degrees_at_small_q_are_positive() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                for q in [2i64, 3] {
                    assert!(degree_u_at::<i64>(&lam, q).unwrap() > 0);
                    assert!(degree_gl_at::<i64>(&lam, q).unwrap() > 0);
                }
            }
        }
    }

    #[test]
    fn symbol_json() {
        let s = SymbolLabel::new(1, p(&[1]), p(&[2, 2]));
        assert_eq!(
            serde_json::to_value(&s).unwrap(),
            serde_json::json!({"t": 1, "alpha": [1], "beta": [2, 2]})
        );
    }
}
