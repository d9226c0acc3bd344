use std::collections::BTreeSet;

use crate::error::Error;
use crate::numerics::Scalar;

/// A single linear row `coefficients · x (= | >=) rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coefficients: Vec<Scalar>,
    pub rhs: Scalar,
}

impl Row {
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        self.coefficients.iter().zip(point).map(|(a, x)| a * x).sum()
    }
}

/// Identifies a row of a [`LinearSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowId {
    Equality(usize),
    Inequality(usize),
}

/// Exact system of linear equalities and `>=` inequalities over `dim`
/// variables, some of which may be sign-restricted to be nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    dim: usize,
    equalities: Vec<Row>,
    inequalities: Vec<Row>,
    nonneg: BTreeSet<usize>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::MalformedSystem("dimension must be positive".into()));
        }
        Ok(LinearSystem {
            dim,
            equalities: Vec::new(),
            inequalities: Vec::new(),
            nonneg: BTreeSet::new(),
        })
    }

    fn checked_row(&self, coefficients: Vec<Scalar>, rhs: Scalar) -> Result<Row, Error> {
        if coefficients.len() != self.dim {
            return Err(Error::MalformedSystem(format!(
                "row has {} coefficients, system has {} variables",
                coefficients.len(),
                self.dim
            )));
        }
        Ok(Row { coefficients, rhs })
    }

    /// Adds `coefficients · x = rhs`.
    pub fn add_equality(&mut self, coefficients: Vec<Scalar>, rhs: Scalar) -> Result<RowId, Error> {
        let row = self.checked_row(coefficients, rhs)?;
        self.equalities.push(row);
        Ok(RowId::Equality(self.equalities.len() - 1))
    }

    /// Adds `coefficients · x >= rhs`.
    pub fn add_inequality(&mut self, coefficients: Vec<Scalar>, rhs: Scalar) -> Result<RowId, Error> {
        let row = self.checked_row(coefficients, rhs)?;
        self.inequalities.push(row);
        Ok(RowId::Inequality(self.inequalities.len() - 1))
    }

    /// Adds `coefficients · x <= rhs`, stored as the negated `>=` row.
    pub fn add_upper_bound(&mut self, coefficients: Vec<Scalar>, rhs: Scalar) -> Result<RowId, Error> {
        self.add_inequality(coefficients.into_iter().map(|a| -a).collect(), -rhs)
    }

    pub fn set_nonneg(&mut self, variable: usize) -> Result<(), Error> {
        if variable >= self.dim {
            return Err(Error::MalformedSystem(format!(
                "variable {variable} out of range for dimension {}",
                self.dim
            )));
        }
        self.nonneg.insert(variable);
        Ok(())
    }

    pub fn set_all_nonneg(&mut self) {
        self.nonneg.extend(0..self.dim);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> &[Row] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Row] {
        &self.inequalities
    }

    pub fn nonneg(&self) -> &BTreeSet<usize> {
        &self.nonneg
    }

    pub fn row(&self, id: RowId) -> &Row {
        match id {
            RowId::Equality(i) => &self.equalities[i],
            RowId::Inequality(i) => &self.inequalities[i],
        }
    }

    pub fn row_ids(&self) -> impl Iterator<Item = RowId> + '_ {
        (0..self.equalities.len())
            .map(RowId::Equality)
            .chain((0..self.inequalities.len()).map(RowId::Inequality))
    }

    /// Copy keeping only the listed rows; sign restrictions are kept.
    pub fn restricted_to(&self, rows: &[RowId]) -> LinearSystem {
        let mut sub = LinearSystem {
            dim: self.dim,
            equalities: Vec::new(),
            inequalities: Vec::new(),
            nonneg: self.nonneg.clone(),
        };
        for &id in rows {
            match id {
                RowId::Equality(i) => sub.equalities.push(self.equalities[i].clone()),
                RowId::Inequality(i) => sub.inequalities.push(self.inequalities[i].clone()),
            }
        }
        sub
    }

    /// Exact check that `point` satisfies every row and sign restriction.
    /// Independent of the solver.
    pub fn is_satisfied_by(&self, point: &[Scalar]) -> bool {
        point.len() == self.dim
            && self.nonneg.iter().all(|&j| !point[j].is_negative())
            && self.equalities.iter().all(|r| r.evaluate(point) == r.rhs)
            && self.inequalities.iter().all(|r| r.evaluate(point) >= r.rhs)
    }

    /// Rows tight at `point`: all equalities, inequalities holding with
    /// equality, and sign restrictions at zero, as coefficient vectors.
    pub fn tight_rows(&self, point: &[Scalar]) -> Vec<Vec<Scalar>> {
        let mut rows: Vec<Vec<Scalar>> = self.equalities.iter().map(|r| r.coefficients.clone()).collect();
        rows.extend(
            self.inequalities
                .iter()
                .filter(|r| r.evaluate(point) == r.rhs)
                .map(|r| r.coefficients.clone()),
        );
        for &j in &self.nonneg {
            if point[j].is_zero() {
                let mut unit = vec![Scalar::zero(); self.dim];
                unit[j] = Scalar::one();
                rows.push(unit);
            }
        }
        rows
    }
}

/// Rank of a list of equal-length rows, by exact Gaussian elimination.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut matrix: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, pivot);
        let pivot_row = matrix[rank].clone();
        for row in &mut matrix[rank + 1..] {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (cell, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *cell -= &factor * p;
            }
        }
        rank += 1;
    }
    rank
}
