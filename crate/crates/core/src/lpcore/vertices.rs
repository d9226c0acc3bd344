//! Vertex enumeration by the double description method.
//!
//! The polyhedron `P = {x : A x >= b}` is homogenized to the cone
//! `{(t, x) : A x - b t >= 0, t >= 0}`. Starting from a simplicial cone
//! spanned by a nonsingular subsystem, the remaining constraints are added
//! one at a time; new extreme rays come from adjacent pairs on opposite
//! sides of the added hyperplane (combinatorial adjacency test). Rays with
//! `t > 0` are the vertices of `P`; a ray with `t = 0` means `P` is
//! unbounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::simplex::{solve, Solution};
use super::system::LinearSystem;
use crate::error::Error;
use crate::numerics::Scalar;

/// Vertices of a bounded polyhedron, sorted lexicographically, no duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VertexSet {
    vertices: Vec<Vec<Scalar>>,
}

impl VertexSet {
    pub fn vertices(&self) -> &[Vec<Scalar>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn into_vertices(self) -> Vec<Vec<Scalar>> {
        self.vertices
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    coords: Vec<Scalar>,
    zeros: Bits,
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales a nonzero rational vector to a primitive integer vector.
fn normalize(v: Vec<Scalar>) -> Vec<Scalar> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v;
    }
    ints.into_iter().map(|x| Scalar::from_integer(x / &gcd)).collect()
}

fn homogeneous_rows(sys: &LinearSystem) -> Vec<Vec<Scalar>> {
    let d = sys.dim() + 1;
    let mut rows = Vec::new();
    let mut t_row = vec![Scalar::zero(); d];
    t_row[0] = Scalar::one();
    rows.push(t_row);
    let lift = |coefficients: &[Scalar], rhs: &Scalar, sign: bool| {
        let mut row = Vec::with_capacity(d);
        if sign {
            row.push(-rhs);
            row.extend(coefficients.iter().cloned());
        } else {
            row.push(rhs.clone());
            row.extend(coefficients.iter().map(|a| -a));
        }
        row
    };
    for r in sys.inequalities() {
        rows.push(lift(&r.coefficients, &r.rhs, true));
    }
    for r in sys.equalities() {
        rows.push(lift(&r.coefficients, &r.rhs, true));
        rows.push(lift(&r.coefficients, &r.rhs, false));
    }
    for &j in sys.nonneg() {
        let mut row = vec![Scalar::zero(); d];
        row[j + 1] = Scalar::one();
        rows.push(row);
    }
    rows
}

/// Picks `d` linearly independent rows greedily and returns their indices
/// together with the inverse of the resulting square matrix.
fn initial_basis(rows: &[Vec<Scalar>], d: usize) -> Option<(Vec<usize>, Vec<Vec<Scalar>>)> {
    let mut chosen = Vec::new();
    let mut reduced: Vec<Vec<Scalar>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for (index, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (basis_row, &col) in reduced.iter().zip(&pivots) {
            if r[col].is_zero() {
                continue;
            }
            let factor = &r[col] / &basis_row[col];
            for k in 0..d {
                let delta = &factor * &basis_row[k];
                r[k] -= delta;
            }
        }
        if let Some(col) = (0..d).find(|&k| !r[k].is_zero()) {
            chosen.push(index);
            reduced.push(r);
            pivots.push(col);
            if chosen.len() == d {
                break;
            }
        }
    }
    if chosen.len() < d {
        return None;
    }

    // Gauss-Jordan inverse of the chosen rows.
    let mut a: Vec<Vec<Scalar>> = chosen.iter().map(|&i| rows[i].clone()).collect();
    let mut inv: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect();
    for col in 0..d {
        let p = (col..d).find(|&r| !a[r][col].is_zero()).expect("nonsingular");
        a.swap(col, p);
        inv.swap(col, p);
        let scale = a[col][col].recip().expect("nonzero pivot");
        for k in 0..d {
            a[col][k] = &a[col][k] * &scale;
            inv[col][k] = &inv[col][k] * &scale;
        }
        for r in 0..d {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for k in 0..d {
                let da = &factor * &a[col][k];
                a[r][k] -= da;
                let di = &factor * &inv[col][k];
                inv[r][k] -= di;
            }
        }
    }
    Some((chosen, inv))
}

/// Enumerates the vertices of the polyhedron described by `sys`.
///
/// An empty polyhedron yields an empty set. An unbounded one is an error.
pub fn enumerate_vertices(sys: &LinearSystem) -> Result<VertexSet, Error> {
    if matches!(solve(sys, None), Solution::Infeasible) {
        return Ok(VertexSet::default());
    }
    let d = sys.dim() + 1;
    let rows = homogeneous_rows(sys);
    let (basis, inverse) = initial_basis(&rows, d).ok_or(Error::Unbounded)?;

    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let coords = normalize((0..d).map(|i| inverse[i][j].clone()).collect());
            let mut zeros = Bits::new(rows.len());
            for (k, &b) in basis.iter().enumerate() {
                if k != j {
                    zeros.set(b);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    let mut in_basis = vec![false; rows.len()];
    for &b in &basis {
        in_basis[b] = true;
    }

    for (k, row) in rows.iter().enumerate() {
        if in_basis[k] {
            continue;
        }
        let values: Vec<Scalar> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for p in &positive {
            for q in &negative {
                let common = rays[*p].zeros.and(&rays[*q].zeros);
                if common.count() + 2 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == *p || i == *q || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let coords: Vec<Scalar> = rays[*q]
                    .coords
                    .iter()
                    .zip(&rays[*p].coords)
                    .map(|(qc, pc)| &values[*p] * qc - &values[*q] * pc)
                    .collect();
                let mut zeros = common;
                zeros.set(k);
                next.push(Ray {
                    coords: normalize(coords),
                    zeros,
                });
            }
        }
        for (i, mut ray) in rays.into_iter().enumerate() {
            if values[i].is_zero() {
                ray.zeros.set(k);
                next.push(ray);
            } else if values[i].is_positive() {
                next.push(ray);
            }
        }
        rays = next;
    }

    let mut vertices = Vec::with_capacity(rays.len());
    for ray in rays {
        let t = &ray.coords[0];
        if t.is_zero() {
            return Err(Error::Unbounded);
        }
        debug_assert!(!t.as_ratio().is_negative());
        vertices.push(ray.coords[1..].iter().map(|x| x / t).collect::<Vec<_>>());
    }
    vertices.sort();
    vertices.dedup();
    Ok(VertexSet { vertices })
}
