//! The investment-redistribution model: sectors with yearly growth
//! factors, the year-transition matrix built from them, and the
//! proportional-growth allocation of a budget.
//!
//! Each sector keeps its stake up to 1× (`min(g, 1)`), and the profit
//! beyond that, `max(g - 1, 0)` per unit, is split equally across all
//! sectors. A sector with `g < 1` simply shrinks in place. The allocation
//! that grows proportionally is the eigenvector of the transition matrix
//! for the largest eigenvalue whose eigenspace admits a nonnegative
//! vector, scaled to the budget.

use crate::eigen::{eigen_pairs, EigenPair};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A named sector and its revenue per unit invested per year.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SectorSpec {
    pub name: String,
    pub growth_factor: Scalar,
}

impl SectorSpec {
    pub fn new(name: impl Into<String>, growth_factor: Scalar) -> Self {
        SectorSpec {
            name: name.into(),
            growth_factor,
        }
    }
}

/// Sectors plus the year-transition matrix derived from their growth
/// factors. Column `j` always sums to the growth factor of sector `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvestmentModel {
    sectors: Vec<SectorSpec>,
    transition: Matrix,
}

/// How a budget should be split, and the yearly growth rate that split
/// earns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Allocation {
    pub amounts: Vec<Scalar>,
    pub budget: Scalar,
    pub growth_rate: Scalar,
}

impl InvestmentModel {
    /// Build the transition matrix for the keep-then-redistribute policy:
    /// `transition[i][j] = δ_ij * min(g_j, 1) + max(g_j - 1, 0) / n`.
    pub fn build(sectors: Vec<SectorSpec>) -> Result<Self> {
        if sectors.is_empty() {
            return Err(Error::Domain("at least one sector is required".into()));
        }
        if let Some(bad) = sectors.iter().find(|s| s.growth_factor.is_negative()) {
            return Err(Error::Domain(format!(
                "sector {} has negative growth factor {}",
                bad.name, bad.growth_factor
            )));
        }
        let n = sectors.len();
        let count = Scalar::from(n as i64);
        let one = Scalar::one();
        let transition = Matrix::from_fn(n, n, |i, j| {
            let g = &sectors[j].growth_factor;
            let kept = if *g < one { g.clone() } else { one.clone() };
            let profit_share = if *g > one {
                (g - &one).checked_div(&count).expect("n >= 1")
            } else {
                Scalar::zero()
            };
            if i == j {
                kept + profit_share
            } else {
                profit_share
            }
        })?;
        Ok(InvestmentModel {
            sectors,
            transition,
        })
    }

    /// Pair sectors with a hand-built transition matrix, for policies other
    /// than equal redistribution. Every column must sum to the growth
    /// factor of its sector and all entries must be nonnegative.
    pub fn with_transition(sectors: Vec<SectorSpec>, transition: Matrix) -> Result<Self> {
        let n = sectors.len();
        if transition.rows() != n || transition.cols() != n {
            return Err(Error::Shape(format!(
                "transition must be {n}x{n} for {n} sectors, got {}x{}",
                transition.rows(),
                transition.cols()
            )));
        }
        for (j, sector) in sectors.iter().enumerate() {
            let mut sum = Scalar::zero();
            for i in 0..n {
                let entry = transition.get(i, j);
                if entry.is_negative() {
                    return Err(Error::Domain(format!(
                        "transition entry ({i},{j}) is negative"
                    )));
                }
                sum = sum + entry;
            }
            if sum != sector.growth_factor {
                return Err(Error::Domain(format!(
                    "column {j} sums to {sum}, expected growth factor {}",
                    sector.growth_factor
                )));
            }
        }
        Ok(InvestmentModel {
            sectors,
            transition,
        })
    }

    pub fn sectors(&self) -> &[SectorSpec] {
        &self.sectors
    }

    pub fn transition(&self) -> &Matrix {
        &self.transition
    }

    /// Split `budget` so the portfolio grows proportionally at the best
    /// achievable rate: walk the exact eigenvalues in descending order and
    /// take the first one whose eigenspace contains a nonnegative vector.
    ///
    /// For multi-dimensional eigenspaces the sum of the basis vectors is
    /// tried first (which makes the identity model split uniformly), then
    /// each basis vector on its own.
    pub fn optimal_allocation(&self, budget: &Scalar) -> Result<Allocation> {
        if budget.is_zero() || budget.is_negative() {
            return Err(Error::Domain(format!(
                "budget must be positive, got {budget}"
            )));
        }
        if self.sectors.len() == 1 {
            // One sector takes everything; it grows by its own factor.
            return Ok(Allocation {
                amounts: vec![budget.clone()],
                budget: budget.clone(),
                growth_rate: self.sectors[0].growth_factor.clone(),
            });
        }
        let analysis = eigen_pairs(&self.transition)?;
        for pair in &analysis.exact {
            if let Some(direction) = nonnegative_direction(pair) {
                let total = direction.iter().fold(Scalar::zero(), |acc, v| acc + v);
                let unit = budget
                    .checked_div(&total)
                    .expect("nonzero nonnegative vector");
                let amounts: Vec<Scalar> = direction.iter().map(|v| v * &unit).collect();
                return Ok(Allocation {
                    amounts,
                    budget: budget.clone(),
                    growth_rate: pair.value.clone(),
                });
            }
        }
        if !analysis.numeric_residual.is_empty() {
            let best_exact = analysis.exact.first().map(|p| p.value.to_f64());
            let best_numeric = analysis
                .numeric_residual
                .iter()
                .filter(|r| r.is_real())
                .map(|r| r.re)
                .fold(f64::NEG_INFINITY, f64::max);
            if best_exact.is_none_or(|e| best_numeric > e) {
                return Err(Error::ExactnessUnavailable(format!(
                    "the dominant eigenvalue near {best_numeric:.6} is irrational"
                )));
            }
        }
        Err(Error::NoFeasibleAllocation)
    }

    /// Apply the year transition `years` times to an allocation vector.
    pub fn evolve(&self, allocation: &[Scalar], years: usize) -> Result<Vec<Scalar>> {
        if allocation.len() != self.sectors.len() {
            return Err(Error::Shape(format!(
                "allocation has {} entries for {} sectors",
                allocation.len(),
                self.sectors.len()
            )));
        }
        let mut state = allocation.to_vec();
        for _ in 0..years {
            state = self.transition.mul_vec(&state)?;
        }
        Ok(state)
    }
}

/// A nonnegative, nonzero vector in the eigenspace, if the basis offers
/// one: the basis-vector sum first, then each basis vector alone.
fn nonnegative_direction(pair: &EigenPair) -> Option<Vec<Scalar>> {
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    if pair.basis.len() > 1 {
        let dim = pair.basis[0].len();
        let sum = (0..dim)
            .map(|i| pair.basis.iter().fold(Scalar::zero(), |acc, v| acc + &v[i]))
            .collect();
        candidates.push(sum);
    }
    candidates.extend(pair.basis.iter().cloned());
    candidates
        .into_iter()
        .find(|v| v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| !x.is_zero()))
}
