//! Exact linear algebra over incidence columns: rank, circuits, and rational
//! cone feasibility.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::IncidenceColumn;

/// Default limit on the number of columns handed to [`circuits`].
pub const DEFAULT_CIRCUIT_EDGE_CAP: usize = 24;

/// Default limit on the number of variables of a feasibility problem.
pub const DEFAULT_LP_VARIABLE_CAP: usize = 64;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn integer_rank(cols: &[IncidenceColumn]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let n = cols[0].n;
    let k = cols.len();
    let mut rows = vec![vec![BigInt::zero(); k]; n];
    for (j, col) in cols.iter().enumerate() {
        rows[col.ends.0][j] = BigInt::one();
        rows[col.ends.1][j] = BigInt::one();
    }
    bareiss_rank(rows)
}

/// Rank of an arbitrary integer matrix given by rows.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let r = a.len();
    if r == 0 {
        return 0;
    }
    let c = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..c {
        if rank == r {
            break;
        }
        let Some(p) = (rank..r).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..r {
            for j in col + 1..c {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// A circuit of the incidence configuration: a primitive integer kernel
/// vector with inclusion-minimal support, signed so that the entry at the
/// smallest support index is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Circuit {
    u: Vec<i64>,
}

impl Circuit {
    /// Wraps a kernel vector, normalizing gcd and sign. Does not check
    /// minimality.
    pub fn from_kernel_vector(mut u: Vec<i64>) -> Option<Self> {
        let g = u.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g == 0 {
            return None;
        }
        let first = u.iter().copied().find(|&x| x != 0).unwrap();
        let g = if first < 0 { -g } else { g };
        for x in &mut u {
            *x /= g;
        }
        Some(Circuit { u })
    }

    pub fn entries(&self) -> &[i64] {
        &self.u
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.u.len()).filter(|&i| self.u[i] != 0).collect()
    }

    pub fn positive_support(&self) -> Vec<usize> {
        (0..self.u.len()).filter(|&i| self.u[i] > 0).collect()
    }

    pub fn negative_support(&self) -> Vec<usize> {
        (0..self.u.len()).filter(|&i| self.u[i] < 0).collect()
    }

    /// Exponent vector of `x^{u+}`.
    pub fn positive_part(&self) -> Vec<u32> {
        self.u.iter().map(|&x| x.max(0) as u32).collect()
    }

    /// Exponent vector of `x^{u-}`.
    pub fn negative_part(&self) -> Vec<u32> {
        self.u.iter().map(|&x| (-x).max(0) as u32).collect()
    }

    /// Total degree of `x^{u+}` (equal to that of `x^{u-}` for graphs).
    pub fn half_degree(&self) -> usize {
        self.u.iter().filter(|&&x| x > 0).map(|&x| x as usize).sum()
    }
}

struct Row {
    v: Vec<i64>,
    combo: Vec<i64>,
    pivot: usize,
}

/// Reduces column `col` (edge `e`) against the basis. Returns the reduced
/// vector and the combination of original columns it equals.
fn reduce(basis: &[Row], col: &[i64], e: usize, m: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    let mut w = col.to_vec();
    let mut combo = vec![0i64; m];
    combo[e] = 1;
    for row in basis {
        let c = w[row.pivot];
        if c == 0 {
            continue;
        }
        let p = row.v[row.pivot];
        let g = p.gcd(&c);
        let (a, b) = (p / g, c / g);
        for (x, &y) in w.iter_mut().zip(&row.v) {
            *x = lin(a, *x, b, y)?;
        }
        for (x, &y) in combo.iter_mut().zip(&row.combo) {
            *x = lin(a, *x, b, y)?;
        }
        let g = w.iter().chain(combo.iter()).fold(0i64, |g, &x| g.gcd(&x));
        if g > 1 {
            w.iter_mut().chain(combo.iter_mut()).for_each(|x| *x /= g);
        }
    }
    Ok((w, combo))
}

fn lin(a: i64, x: i64, b: i64, y: i64) -> Result<i64> {
    a.checked_mul(x)
        .zip(b.checked_mul(y))
        .and_then(|(p, q)| p.checked_sub(q))
        .ok_or(Error::Overflow)
}

/// All circuits of the configuration, sorted by support.
///
/// Enumerates independent column sets in increasing index order and, each
/// time a new column becomes dependent, extracts the unique circuit it closes.
/// Every circuit `C` is reached from the independent set `C \ {max C}`, so no
/// superset of a dependent set is ever extended.
pub fn circuits(cols: &[IncidenceColumn], cap: usize) -> Result<Vec<Circuit>> {
    let m = cols.len();
    if m > cap {
        return Err(Error::CapExceeded { what: "edge count for circuit enumeration", size: m, cap });
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let dense: Vec<Vec<i64>> = cols.iter().map(|c| c.entries()).collect();
    let max_rank = cols[0].n;
    let mut found = BTreeMap::new();
    let mut basis = Vec::new();
    circuit_dfs(&dense, 0, max_rank, &mut basis, &mut found)?;
    Ok(found.into_values().collect())
}

fn circuit_dfs(
    cols: &[Vec<i64>],
    start: usize,
    max_rank: usize,
    basis: &mut Vec<Row>,
    found: &mut BTreeMap<Vec<usize>, Circuit>,
) -> Result<()> {
    let m = cols.len();
    for e in start..m {
        let (w, combo) = reduce(basis, &cols[e], e, m)?;
        match w.iter().position(|&x| x != 0) {
            None => {
                let c = Circuit::from_kernel_vector(combo).ok_or_else(|| {
                    Error::Inconsistent("dependent column produced a zero kernel vector".into())
                })?;
                found.entry(c.support()).or_insert(c);
            }
            Some(pivot) if basis.len() < max_rank => {
                basis.push(Row { v: w, combo, pivot });
                circuit_dfs(cols, e + 1, max_rank, basis, found)?;
                basis.pop();
            }
            Some(_) => {}
        }
    }
    Ok(())
}

/// Decides exactly whether `{x >= 0 : A x = b}` is nonempty, using phase one
/// of the simplex method with Bland's rule over the rationals.
pub fn nonnegative_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let rows = a.len();
    if rows == 0 {
        return true;
    }
    let vars = a[0].len();
    let width = vars + rows + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r = vec![BigRational::zero(); width];
        for j in 0..vars {
            r[j] = if flip { -row[j].clone() } else { row[j].clone() };
        }
        r[vars + i] = BigRational::one();
        r[rhs] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(r);
    }
    // Phase-one objective: sum of artificials, expressed in nonbasic terms.
    let mut obj = vec![BigRational::zero(); width];
    for r in &t {
        for j in 0..vars {
            obj[j] += &r[j];
        }
        obj[rhs] += &r[rhs];
    }
    let mut basic: Vec<usize> = (vars..vars + rows).collect();
    loop {
        let Some(enter) = (0..rhs).find(|&j| obj[j].is_positive() && !basic.contains(&j)) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basic[i] < basic[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so an entering column always
        // has a positive entry.
        let Some((pr, _)) = leave else { break };
        let piv = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = t[pr].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        basic[pr] = enter;
    }
    obj[rhs].is_zero()
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// True iff `b` is a nonnegative rational combination of `cols`.
pub fn vector_in_cone(b: &[BigRational], cols: &[IncidenceColumn]) -> Result<bool> {
    if cols.len() > DEFAULT_LP_VARIABLE_CAP {
        return Err(Error::CapExceeded {
            what: "cone membership variables",
            size: cols.len(),
            cap: DEFAULT_LP_VARIABLE_CAP,
        });
    }
    if b.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    if cols.is_empty() {
        return Ok(false);
    }
    let n = b.len();
    let mut a = vec![vec![BigRational::zero(); cols.len()]; n];
    for (j, col) in cols.iter().enumerate() {
        if col.n != n {
            return Err(Error::InvalidDegree(format!("vector has {n} coordinates, columns have {}", col.n)));
        }
        a[col.ends.0][j] = BigRational::one();
        a[col.ends.1][j] = BigRational::one();
    }
    Ok(nonnegative_feasible(&a, b))
}

/// True iff the relative interiors of the cones spanned by the columns
/// indexed by each support share a point.
///
/// Strict positivity is replaced by `λ >= 1`, which is equivalent because the
/// cones are closed under positive scaling.
pub fn relint_intersection_feasible(supports: &[Vec<usize>], cols: &[IncidenceColumn]) -> Result<bool> {
    if supports.iter().any(|s| s.is_empty()) {
        return Err(Error::Hypothesis("supports must be nonempty".into()));
    }
    if let Some(&bad) = supports.iter().flatten().find(|&&i| i >= cols.len()) {
        return Err(Error::EdgeOutOfRange { index: bad + 1, m: cols.len() });
    }
    if supports.len() <= 1 {
        return Ok(true);
    }
    let vars: usize = supports.iter().map(Vec::len).sum();
    if vars > DEFAULT_LP_VARIABLE_CAP {
        return Err(Error::CapExceeded {
            what: "relative-interior feasibility variables",
            size: vars,
            cap: DEFAULT_LP_VARIABLE_CAP,
        });
    }
    let n = cols[0].n;
    // A strictly positive combination is supported on exactly the endpoints
    // of its columns; differing endpoint sets rule out a common point.
    let touched = |s: &Vec<usize>| {
        let mut t = vec![false; n];
        for &i in s {
            t[cols[i].ends.0] = true;
            t[cols[i].ends.1] = true;
        }
        t
    };
    let first = touched(&supports[0]);
    if supports[1..].iter().any(|s| touched(s) != first) {
        return Ok(false);
    }
    let base_sum = |s: &Vec<usize>| {
        let mut t = vec![0i64; n];
        for &i in s {
            t[cols[i].ends.0] += 1;
            t[cols[i].ends.1] += 1;
        }
        t
    };
    let s0 = base_sum(&supports[0]);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for k in 1..supports.len() {
        let sk = base_sum(&supports[k]);
        let mut offset = 0;
        let mut rows = vec![vec![BigRational::zero(); vars]; n];
        for (idx, s) in supports.iter().enumerate() {
            let sign = if idx == 0 {
                1
            } else if idx == k {
                -1
            } else {
                0
            };
            if sign != 0 {
                for (pos, &i) in s.iter().enumerate() {
                    rows[cols[i].ends.0][offset + pos] = rat(sign);
                    rows[cols[i].ends.1][offset + pos] = rat(sign);
                }
            }
            offset += s.len();
        }
        for (j, row) in rows.into_iter().enumerate() {
            a.push(row);
            b.push(rat(sk[j] - s0[j]));
        }
    }
    Ok(nonnegative_feasible(&a, &b))
}
