//! Exact Gauss-Jordan elimination for small dense rational systems.

use num_traits::Zero;

use crate::poly::Rational;

/// Solution set `particular + span(basis)` of a consistent system.
///
/// The particular solution has every free variable set to zero; basis vector
/// `k` sets the `k`-th free variable (in column order) to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct AffineSolution {
    pub particular: Vec<Rational>,
    pub basis: Vec<Vec<Rational>>,
    pub free_columns: Vec<usize>,
}

/// Solves `rows * u = rhs` with `ncols` unknowns; `None` when inconsistent.
pub(crate) fn solve_affine(
    mut rows: Vec<Vec<Rational>>,
    mut rhs: Vec<Rational>,
    ncols: usize,
) -> Option<AffineSolution> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        rhs[r] *= &inv;
        for i in 0..nrows {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for c in 0..ncols {
                let delta = &factor * &rows[r][c];
                rows[i][c] -= delta;
            }
            let delta = &factor * &rhs[r];
            rhs[i] -= delta;
        }
        pivots.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let free_columns: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut particular = vec![Rational::zero(); ncols];
    for (i, &pc) in pivots.iter().enumerate() {
        particular[pc] = rhs[i].clone();
    }
    let basis = free_columns
        .iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); ncols];
            v[fc] = Rational::from_integer(1.into());
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][fc].clone();
            }
            v
        })
        .collect();
    Some(AffineSolution {
        particular,
        basis,
        free_columns,
    })
}
