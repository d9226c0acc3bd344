//! Two-phase primal simplex over exact rationals on a condensed (Tucker)
//! tableau: one row per basic variable, one column per nonbasic variable.
//! Bland's rule selects entering and leaving variables, so the method
//! terminates on degenerate problems.
//!
//! Each row reads `basic = Σ_c a[c] · nonbasic_c + a[const]`.

use super::system::LinearSystem;
use crate::numerics::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    X(usize),
    Slack(usize),
    Artificial,
}

pub(crate) enum Solution {
    Infeasible,
    Unbounded,
    Optimal(Vec<Scalar>),
}

struct Tableau {
    dim: usize,
    constraints: usize,
    free: Vec<bool>,
    rows: Vec<Vec<Scalar>>,
    row_var: Vec<Var>,
    col_var: Vec<Var>,
    objective: Option<Vec<Scalar>>,
}

impl Tableau {
    fn build(sys: &LinearSystem) -> (Self, Vec<bool>) {
        let dim = sys.dim();
        let mut rows = Vec::new();
        let mut is_equality = Vec::new();
        for (row, eq) in sys
            .equalities()
            .iter()
            .map(|r| (r, true))
            .chain(sys.inequalities().iter().map(|r| (r, false)))
        {
            let mut entries = row.coefficients.clone();
            entries.push(-&row.rhs);
            rows.push(entries);
            is_equality.push(eq);
        }
        let constraints = rows.len();
        let tableau = Tableau {
            dim,
            constraints,
            free: (0..dim).map(|j| !sys.nonneg().contains(&j)).collect(),
            rows,
            row_var: (0..constraints).map(Var::Slack).collect(),
            col_var: (0..dim).map(Var::X).collect(),
            objective: None,
        };
        (tableau, is_equality)
    }

    fn order(&self, var: Var) -> usize {
        match var {
            Var::X(j) => j,
            Var::Slack(i) => self.dim + i,
            Var::Artificial => self.dim + self.constraints,
        }
    }

    fn restricted(&self, var: Var) -> bool {
        match var {
            Var::X(j) => !self.free[j],
            Var::Slack(_) | Var::Artificial => true,
        }
    }

    fn constant(&self, row: usize) -> &Scalar {
        self.rows[row].last().expect("constant column")
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inverse = self.rows[r][c].recip().expect("pivot entry is nonzero");
        let mut pivot_row: Vec<Scalar> = self.rows[r].iter().map(|a| -(a * &inverse)).collect();
        pivot_row[c] = inverse;

        let eliminate = |row: &mut Vec<Scalar>| {
            let factor = std::mem::take(&mut row[c]);
            if factor.is_zero() {
                return;
            }
            for (k, entry) in row.iter_mut().enumerate() {
                if k == c {
                    *entry = &factor * &pivot_row[c];
                } else if !pivot_row[k].is_zero() {
                    *entry += &factor * &pivot_row[k];
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        if let Some(objective) = self.objective.as_mut() {
            eliminate(objective);
        }
        self.rows[r] = pivot_row;
        std::mem::swap(&mut self.row_var[r], &mut self.col_var[c]);
    }

    fn remove_column(&mut self, c: usize) {
        for row in &mut self.rows {
            row.remove(c);
        }
        if let Some(objective) = self.objective.as_mut() {
            objective.remove(c);
        }
        self.col_var.remove(c);
    }

    fn remove_row(&mut self, r: usize) {
        self.rows.remove(r);
        self.row_var.remove(r);
    }

    fn column_of(&self, var: Var) -> Option<usize> {
        self.col_var.iter().position(|&v| v == var)
    }

    /// Minimizes the objective row. Returns `false` when unbounded.
    fn run(&mut self) -> bool {
        loop {
            let objective = self.objective.as_ref().expect("objective row");
            let entering = (0..self.col_var.len())
                .filter(|&c| objective[c].is_negative())
                .min_by_key(|&c| self.order(self.col_var[c]));
            let Some(c) = entering else {
                return true;
            };
            let mut leaving: Option<(Scalar, usize, usize)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !self.restricted(self.row_var[i]) || !row[c].is_negative() {
                    continue;
                }
                let ratio = self.constant(i) / &(-&row[c]);
                let order = self.order(self.row_var[i]);
                let better = match &leaving {
                    None => true,
                    Some((best, best_order, _)) => ratio < *best || (ratio == *best && order < *best_order),
                };
                if better {
                    leaving = Some((ratio, order, i));
                }
            }
            let Some((_, _, r)) = leaving else {
                return false;
            };
            self.pivot(r, c);
        }
    }

    /// Moves free variables and equality slacks out of the way. Returns
    /// `false` if an equality is found to be inconsistent.
    fn eliminate_free_and_equalities(&mut self, is_equality: &[bool]) -> bool {
        for j in 0..self.dim {
            if !self.free[j] {
                continue;
            }
            let c = self.column_of(Var::X(j)).expect("free variable starts nonbasic");
            let candidate = |prefer_equality: bool| {
                (0..self.rows.len()).find(|&i| {
                    let var = self.row_var[i];
                    let eq = matches!(var, Var::Slack(k) if is_equality[k]);
                    !matches!(var, Var::X(_)) && eq == prefer_equality && !self.rows[i][c].is_zero()
                })
            };
            let Some(r) = candidate(true).or_else(|| candidate(false)) else {
                // The variable appears in no row; it stays at zero.
                self.remove_column(c);
                continue;
            };
            self.pivot(r, c);
            if let Var::Slack(k) = self.col_var[c] {
                if is_equality[k] {
                    self.remove_column(c);
                }
            }
        }

        while let Some(r) = (0..self.rows.len()).find(|&i| matches!(self.row_var[i], Var::Slack(k) if is_equality[k])) {
            let width = self.col_var.len();
            match (0..width).find(|&c| !self.rows[r][c].is_zero()) {
                Some(c) => {
                    self.pivot(r, c);
                    self.remove_column(c);
                }
                None => {
                    if !self.constant(r).is_zero() {
                        return false;
                    }
                    self.remove_row(r);
                }
            }
        }
        true
    }

    /// Phase one. Leaves a feasible basis and no artificial column, or
    /// returns `false` if the system is infeasible.
    fn reach_feasibility(&mut self) -> bool {
        let worst = (0..self.rows.len())
            .filter(|&i| self.restricted(self.row_var[i]) && self.constant(i).is_negative())
            .min_by(|&a, &b| {
                self.constant(a)
                    .cmp(self.constant(b))
                    .then(self.order(self.row_var[a]).cmp(&self.order(self.row_var[b])))
            });
        let Some(r) = worst else {
            return true;
        };

        let at = self.col_var.len();
        for i in 0..self.rows.len() {
            let entry = if self.restricted(self.row_var[i]) {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            self.rows[i].insert(at, entry);
        }
        self.col_var.push(Var::Artificial);
        self.pivot(r, at);

        let art_row = self
            .row_var
            .iter()
            .position(|&v| v == Var::Artificial)
            .expect("artificial is basic");
        self.objective = Some(self.rows[art_row].clone());
        let bounded = self.run();
        debug_assert!(bounded, "phase one objective is bounded below by zero");
        let residual = self
            .objective
            .as_ref()
            .expect("objective")
            .last()
            .expect("constant")
            .clone();
        self.objective = None;
        if residual.is_positive() {
            return false;
        }

        if let Some(r) = self.row_var.iter().position(|&v| v == Var::Artificial) {
            let width = self.col_var.len();
            match (0..width).find(|&c| !self.rows[r][c].is_zero()) {
                Some(c) => self.pivot(r, c),
                None => {
                    self.remove_row(r);
                    return true;
                }
            }
        }
        let c = self.column_of(Var::Artificial).expect("artificial is nonbasic");
        self.remove_column(c);
        true
    }

    fn set_objective(&mut self, costs: &[Scalar]) {
        let width = self.col_var.len() + 1;
        let mut objective = vec![Scalar::zero(); width];
        for (c, var) in self.col_var.iter().enumerate() {
            if let Var::X(j) = var {
                objective[c] += &costs[*j];
            }
        }
        for (i, var) in self.row_var.iter().enumerate() {
            if let Var::X(j) = var {
                if costs[*j].is_zero() {
                    continue;
                }
                for (entry, a) in objective.iter_mut().zip(&self.rows[i]) {
                    *entry += &costs[*j] * a;
                }
            }
        }
        self.objective = Some(objective);
    }

    fn point(&self) -> Vec<Scalar> {
        let mut x = vec![Scalar::zero(); self.dim];
        for (i, var) in self.row_var.iter().enumerate() {
            if let Var::X(j) = var {
                x[*j] = self.constant(i).clone();
            }
        }
        x
    }
}

/// Solves `min costs · x` over the system (pure feasibility when `costs` is
/// `None`).
pub(crate) fn solve(sys: &LinearSystem, costs: Option<&[Scalar]>) -> Solution {
    let (mut tableau, is_equality) = Tableau::build(sys);
    if !tableau.eliminate_free_and_equalities(&is_equality) {
        return Solution::Infeasible;
    }
    if !tableau.reach_feasibility() {
        return Solution::Infeasible;
    }
    if let Some(costs) = costs {
        tableau.set_objective(costs);
        if !tableau.run() {
            return Solution::Unbounded;
        }
    }
    Solution::Optimal(tableau.point())
}
