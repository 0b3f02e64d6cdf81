use serde::Serialize;

use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};

/// Cochain complex of free modules `C^0 -> C^1 -> ... -> C^m`.
///
/// `differentials[k]` maps degree `k` to degree `k + 1` and has shape
/// `ranks[k + 1] x ranks[k]`.
#[derive(Debug, Clone, Serialize)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    differentials: Vec<IntegerMatrix>,
    labels: Vec<Vec<String>>,
}

impl ChainComplex {
    /// Validates shapes and `d^2 = 0`.
    pub fn new(ranks: Vec<usize>, differentials: Vec<IntegerMatrix>, labels: Vec<Vec<String>>) -> Result<Self> {
        let c = ChainComplex {
            ranks,
            differentials,
            labels,
        };
        c.validate()?;
        Ok(c)
    }

    /// A complex with all differentials zero.
    pub fn with_zero_differentials(ranks: Vec<usize>) -> Self {
        let differentials = ranks
            .windows(2)
            .map(|w| IntegerMatrix::zeros(w[1], w[0]))
            .collect();
        let labels = ranks.iter().map(|&r| (0..r).map(|i| format!("e{i}")).collect()).collect();
        ChainComplex {
            ranks,
            differentials,
            labels,
        }
    }

    fn validate(&self) -> Result<()> {
        let expected = self.ranks.len().saturating_sub(1);
        if self.differentials.len() != expected {
            return Err(Error::Contract(format!(
                "complex with {} degrees needs {expected} differentials, got {}",
                self.ranks.len(),
                self.differentials.len()
            )));
        }
        if self.labels.len() != self.ranks.len() || self.labels.iter().zip(&self.ranks).any(|(l, &r)| l.len() != r) {
            return Err(Error::Contract("basis labels do not match the ranks".into()));
        }
        for (k, d) in self.differentials.iter().enumerate() {
            if d.shape() != (self.ranks[k + 1], self.ranks[k]) {
                return Err(Error::Contract(format!(
                    "differential {k} has shape {:?}, expected {:?}",
                    d.shape(),
                    (self.ranks[k + 1], self.ranks[k])
                )));
            }
        }
        for (k, w) in self.differentials.windows(2).enumerate() {
            if !(&w[1] * &w[0]).is_zero() {
                return Err(Error::Contract(format!("d^2 != 0 at degree {k}")));
            }
        }
        Ok(())
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn differentials(&self) -> &[IntegerMatrix] {
        &self.differentials
    }

    pub fn labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    /// Number of degrees (top degree + 1).
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `sum (-1)^k rank C^k`
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// The `Hom(-, Z)` dual: degrees reversed, differentials transposed.
    /// Degree `k` of the dual is degree `len - 1 - k` of `self`.
    pub fn dual(&self) -> ChainComplex {
        ChainComplex {
            ranks: self.ranks.iter().rev().copied().collect(),
            differentials: self.differentials.iter().rev().map(IntegerMatrix::transpose).collect(),
            labels: self.labels.iter().rev().cloned().collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("complex serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes_and_nonzero_square() {
        let d = IntegerMatrix::from_i64_rows(&[vec![1]]);
        let err = ChainComplex::new(vec![1, 2], vec![d.clone()], vec![vec!["a".into()], vec!["b".into(), "c".into()]]);
        assert!(matches!(err, Err(Error::Contract(_))));
        let err = ChainComplex::new(
            vec![1, 1, 1],
            vec![d.clone(), d],
            vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]],
        );
        assert!(matches!(err, Err(Error::Contract(m)) if m.contains("d^2")));
    }

    #[test]
    fn dual_reverses() {
        let d = IntegerMatrix::from_i64_rows(&[vec![1, 2]]);
        let c = ChainComplex::new(vec![2, 1], vec![d], vec![vec!["a".into(), "b".into()], vec!["c".into()]]).unwrap();
        let dual = c.dual();
        assert_eq!(dual.ranks(), &[1, 2]);
        assert_eq!(dual.differentials()[0].shape(), (2, 1));
        assert_eq!(c.euler_characteristic(), 1);
        let json = c.to_json();
        assert_eq!(json["ranks"], serde_json::json!([2, 1]));
        assert_eq!(json["differentials"], serde_json::json!([[1, 2]]));
    }
}
