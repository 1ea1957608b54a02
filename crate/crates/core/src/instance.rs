//! Finite problem instances and exact ground-truth oracles.
//!
//! An [`Instance`] is a finite example space with a base marginal, base
//! conditional label probabilities, and a finite hypothesis class given as
//! a binary prediction matrix. Because everything is finite, risks,
//! disagreement masses, gaps and the disagreement coefficient are all
//! computed exactly (up to floating arithmetic).

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const MARGINAL_SUM_TOL: f64 = 1e-12;

/// A finite instance: examples `0..m-1`, base marginal, base conditionals,
/// and a `|H| x m` binary prediction matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub base_marginal: Vec<f64>,
    pub base_conditional: Vec<f64>,
    pub hypotheses: Vec<Vec<u8>>,
}

impl Instance {
    /// Validates and constructs an instance.
    pub fn new(
        base_marginal: Vec<f64>,
        base_conditional: Vec<f64>,
        hypotheses: Vec<Vec<u8>>,
    ) -> Result<Self> {
        let inst = Instance {
            base_marginal,
            base_conditional,
            hypotheses,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.base_marginal.len();
        if m == 0 {
            return Err(Error::InvalidInstance("empty example space".into()));
        }
        if self.base_conditional.len() != m {
            return Err(Error::InvalidInstance(format!(
                "conditional has length {} but marginal has length {m}",
                self.base_conditional.len()
            )));
        }
        if self.base_marginal.iter().any(|&p| p < 0.0 || !p.is_finite()) {
            return Err(Error::InvalidInstance("negative marginal entry".into()));
        }
        let sum: f64 = self.base_marginal.iter().sum();
        if (sum - 1.0).abs() > MARGINAL_SUM_TOL {
            return Err(Error::InvalidInstance(format!(
                "marginal sums to {sum}, not 1"
            )));
        }
        if self
            .base_conditional
            .iter()
            .any(|&e| !(0.0..=1.0).contains(&e))
        {
            return Err(Error::InvalidInstance(
                "conditional entry outside [0,1]".into(),
            ));
        }
        if self.hypotheses.is_empty() {
            return Err(Error::InvalidInstance("empty hypothesis class".into()));
        }
        for (i, row) in self.hypotheses.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidInstance(format!(
                    "hypothesis {i} has {} predictions, expected {m}",
                    row.len()
                )));
            }
            if row.iter().any(|&p| p > 1) {
                return Err(Error::InvalidInstance(format!(
                    "hypothesis {i} has a non-binary prediction"
                )));
            }
        }
        for i in 0..self.hypotheses.len() {
            for j in (i + 1)..self.hypotheses.len() {
                if self.hypotheses[i] == self.hypotheses[j] {
                    return Err(Error::InvalidInstance(format!(
                        "hypotheses {i} and {j} are duplicates"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn num_examples(&self) -> usize {
        self.base_marginal.len()
    }

    pub fn num_hypotheses(&self) -> usize {
        self.hypotheses.len()
    }

    #[inline]
    pub fn predict(&self, h: usize, x: usize) -> u8 {
        self.hypotheses[h][x]
    }

    /// Expected 0-1 risk of hypothesis `h` when labels follow `eta` and
    /// examples follow the base marginal.
    pub fn risk(&self, h: usize, eta: &[f64]) -> Result<f64> {
        let m = self.num_examples();
        if eta.len() != m {
            return Err(Error::InvalidInstance(format!(
                "eta has length {}, expected {m}",
                eta.len()
            )));
        }
        self.check_hypothesis(h)?;
        let mut r = 0.0;
        for x in 0..m {
            let e = eta[x];
            r += self.base_marginal[x]
                * if self.hypotheses[h][x] == 1 {
                    1.0 - e
                } else {
                    e
                };
        }
        Ok(r)
    }

    /// Risk under the base conditional.
    pub fn base_risk(&self, h: usize) -> Result<f64> {
        self.risk(h, &self.base_conditional)
    }

    /// Base-marginal mass of the set where `h` and `h2` disagree.
    pub fn rho(&self, h: usize, h2: usize) -> Result<f64> {
        self.check_hypothesis(h)?;
        self.check_hypothesis(h2)?;
        let mut mass = 0.0;
        for x in 0..self.num_examples() {
            if self.hypotheses[h][x] != self.hypotheses[h2][x] {
                mass += self.base_marginal[x];
            }
        }
        Ok(mass)
    }

    /// Examples on which some pair in `v` disagrees.
    pub fn disagreement_region(&self, v: &[usize]) -> Result<Vec<usize>> {
        if v.is_empty() {
            return Err(Error::InvalidArgument(
                "disagreement region of an empty set".into(),
            ));
        }
        for &h in v {
            self.check_hypothesis(h)?;
        }
        let mut region = Vec::new();
        for x in 0..self.num_examples() {
            let first = self.hypotheses[v[0]][x];
            if v.iter().any(|&h| self.hypotheses[h][x] != first) {
                region.push(x);
            }
        }
        Ok(region)
    }

    /// Disagreement coefficient of the best hypothesis at threshold `r0`.
    ///
    /// The ratio P(Dis(B(h*, r)))/r is piecewise `const/r` between the ball
    /// radii `rho(h, h*)`, so the supremum over `r >= r0` is attained at
    /// `r0` or at one of those breakpoints.
    pub fn disagreement_coefficient(&self, r0: f64) -> Result<f64> {
        if !(r0 > 0.0 && r0 <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "r0 must be in (0, 1], got {r0}"
            )));
        }
        let oracle = self.build_oracle()?;
        let best = oracle.best_index;
        let mut candidates = vec![r0];
        for h in 0..self.num_hypotheses() {
            let r = oracle.rho_matrix[h][best];
            if r >= r0 {
                candidates.push(r);
            }
        }
        let mut sup: f64 = 0.0;
        for &r in &candidates {
            let ball: Vec<usize> = (0..self.num_hypotheses())
                .filter(|&h| oracle.rho_matrix[h][best] <= r)
                .collect();
            let mass: f64 = self
                .disagreement_region(&ball)?
                .iter()
                .map(|&x| self.base_marginal[x])
                .sum();
            sup = sup.max(mass / r);
        }
        Ok(sup)
    }

    /// Precomputes risks, gaps and the pairwise disagreement matrix under
    /// the base distribution. Argmin ties break toward the lowest index.
    pub fn build_oracle(&self) -> Result<OracleCache> {
        let k = self.num_hypotheses();
        let mut true_risks = Vec::with_capacity(k);
        for h in 0..k {
            true_risks.push(self.base_risk(h)?);
        }
        let mut best_index = 0;
        for h in 1..k {
            if true_risks[h] < true_risks[best_index] {
                best_index = h;
            }
        }
        let best_risk = true_risks[best_index];
        let gaps: Vec<f64> = true_risks.iter().map(|&r| r - best_risk).collect();
        let mut rho_matrix = vec![vec![0.0; k]; k];
        for h in 0..k {
            for h2 in (h + 1)..k {
                let r = self.rho(h, h2)?;
                rho_matrix[h][h2] = r;
                rho_matrix[h2][h] = r;
            }
        }
        Ok(OracleCache {
            true_risks,
            best_index,
            best_risk,
            gaps,
            rho_matrix,
        })
    }

    fn check_hypothesis(&self, h: usize) -> Result<()> {
        if h >= self.num_hypotheses() {
            return Err(Error::InvalidArgument(format!(
                "hypothesis index {h} out of bounds ({} hypotheses)",
                self.num_hypotheses()
            )));
        }
        Ok(())
    }
}

/// Exact quantities under the base distribution.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleCache {
    pub true_risks: Vec<f64>,
    pub best_index: usize,
    pub best_risk: f64,
    pub gaps: Vec<f64>,
    pub rho_matrix: Vec<Vec<f64>>,
}
