//! Exact dense linear algebra over the rationals, sized for the small
//! systems that straightening and interpolation produce.

use num_traits::Zero;

use crate::rational::Rat;

/// Solves A·x = b exactly. Returns `None` when the system is inconsistent or
/// the solution is not unique on the pivot columns. A is given by rows.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    if rows != b.len() {
        return None;
    }
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut next_row = 0usize;
    for col in 0..cols {
        let Some(p) = (next_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, p);
        let inv = m[next_row][col].clone();
        for v in m[next_row].iter_mut() {
            *v = v.clone() / inv.clone();
        }
        for r in 0..rows {
            if r != next_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let delta = f.clone() * m[next_row][c].clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
        if next_row == rows {
            break;
        }
    }

    // Inconsistent rows: zero coefficients with nonzero rhs.
    for r in 0..rows {
        if m[r][..cols].iter().all(Rat::is_zero) && !m[r][cols].is_zero() {
            return None;
        }
    }
    // Free columns would make the solution non-unique.
    if pivot_of_col.iter().any(Option::is_none) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        x[col] = m[pivot.unwrap()][cols].clone();
    }
    Some(x)
}

/// Rank of the matrix given by rows.
pub fn rank(a: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for v in m[rank].iter_mut() {
            *v = v.clone() / inv.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let delta = f.clone() * m[rank][c].clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Incrementally extended row-echelon basis, used to grow interpolation
/// point sets until full rank.
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis; when a new pivot survives, absorbs
    /// the row and returns true.
    pub fn try_insert(&mut self, row: &[Rat]) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut r = row.to_vec();
        for (basis_row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for c in 0..self.cols {
                    let delta = f.clone() * basis_row[c].clone();
                    r[c] = r[c].clone() - delta;
                }
            }
        }
        let Some(p) = (0..self.cols).find(|&c| !r[c].is_zero()) else {
            return false;
        };
        let inv = r[p].clone();
        for v in r.iter_mut() {
            *v = v.clone() / inv.clone();
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn solve_square_system() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(5), rat(1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(solve(&a, &[rat(1), rat(3)]).is_none());
    }

    #[test]
    fn rank_and_echelon_agree() {
        let a = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank(&a), 2);
        let mut basis = EchelonBasis::new(3);
        let mut kept = 0;
        for row in &a {
            if basis.try_insert(row) {
                kept += 1;
            }
        }
        assert_eq!(kept, 2);
        assert_eq!(basis.rank(), 2);
    }
}
