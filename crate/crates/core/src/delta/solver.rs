//! Single-unknown propagation over three-cell linear relations.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::DeltaMatrix;
use super::relations::Instance;
use crate::{Error, Result};

/// A prescribed value for the 1-based cell `(m, k)`.
pub type Assignment = ((usize, usize), BigInt);

struct Grid {
    size: usize,
    cells: Vec<Option<BigInt>>,
}

impl Grid {
    fn index(&self, (m, k): (i64, i64)) -> Option<usize> {
        let s = self.size as i64;
        (m >= 1 && m <= s && k >= 1 && k <= s).then(|| (m as usize - 1) * self.size + (k as usize - 1))
    }

    fn value(&self, cell: (i64, i64)) -> Option<BigInt> {
        match self.index(cell) {
            Some(idx) => self.cells[idx].clone(),
            None => Some(BigInt::zero()),
        }
    }
}

/// Fills the `(2n)x(2n)` grid from `known` and the diagonal zeros by
/// repeatedly solving any instance with exactly one unknown cell.
pub fn solve_constraints(n: usize, known: &[Assignment], instances: &[Instance]) -> Result<DeltaMatrix> {
    if n == 0 {
        return Err(Error::DimensionMismatch("n must be positive".into()));
    }
    let size = 2 * n;
    let mut grid = Grid { size, cells: vec![None; size * size] };
    let diagonal = (1..=size).map(|i| ((i, i), BigInt::zero()));
    for ((m, k), value) in known.iter().cloned().chain(diagonal) {
        if m == 0 || k == 0 || m > size || k > size {
            return Err(Error::DimensionMismatch(format!("assignment ({m},{k}) outside a {size}x{size} grid")));
        }
        let slot = &mut grid.cells[(m - 1) * size + (k - 1)];
        match slot {
            Some(existing) if *existing != value => {
                return Err(Error::Inconsistent { m, k, reason: format!("assigned both {existing} and {value}") })
            }
            _ => *slot = Some(value),
        }
    }

    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); size * size];
    for (idx, inst) in instances.iter().enumerate() {
        for &cell in &inst.cells {
            if let Some(c) = grid.index(cell) {
                touching[c].push(idx);
            }
        }
    }

    let mut queue: VecDeque<usize> = (0..instances.len()).collect();
    let mut queued = vec![true; instances.len()];
    while let Some(idx) = queue.pop_front() {
        queued[idx] = false;
        let inst = &instances[idx];
        let values: Vec<Option<BigInt>> = inst.cells.iter().map(|&c| grid.value(c)).collect();
        let unknown: Vec<usize> = (0..3).filter(|&p| values[p].is_none()).collect();
        if unknown.len() != 1 {
            continue;
        }
        let p = unknown[0];
        let mut rest = inst.constant.clone();
        for q in (0..3).filter(|&q| q != p) {
            rest += values[q].as_ref().expect("known") * Instance::COEFFICIENTS[q];
        }
        let coefficient = BigInt::from(Instance::COEFFICIENTS[p]);
        let (m, k) = inst.cells[p];
        let (value, remainder) = (-rest).div_rem(&coefficient);
        if !remainder.is_zero() {
            return Err(Error::Inconsistent {
                m: m as usize,
                k: k as usize,
                reason: "derived value is not an integer".into(),
            });
        }
        let cell = grid.index((m, k)).expect("unknown cells lie in the grid");
        grid.cells[cell] = Some(value);
        for &other in &touching[cell] {
            if !queued[other] {
                queued[other] = true;
                queue.push_back(other);
            }
        }
    }

    let unresolved: Vec<usize> = (0..size * size).filter(|&i| grid.cells[i].is_none()).collect();
    if let Some(&first) = unresolved.first() {
        return Err(Error::Unresolved { unknown: unresolved.len(), m: first / size + 1, k: first % size + 1 });
    }
    for inst in instances {
        let mut residual = inst.constant.clone();
        for (q, &c) in inst.cells.iter().enumerate() {
            residual += grid.value(c).expect("resolved") * Instance::COEFFICIENTS[q];
        }
        if !residual.is_zero() {
            let (m, k) = inst.cells[0];
            return Err(Error::Inconsistent {
                m: m as usize,
                k: k as usize,
                reason: format!("relation leaves residual {residual}"),
            });
        }
    }
    let cells = grid.cells.into_iter().map(|c| c.expect("resolved")).collect();
    Ok(DeltaMatrix::from_cells(n, cells))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::relations::{Boundary, Recurrence};

    fn setup(boundary: &[Boundary]) -> (Vec<Assignment>, Vec<Instance>) {
        let prev = DeltaMatrix::initial();
        let known = boundary.iter().flat_map(|b| b.assignments(&prev)).collect();
        let inst = [Recurrence::R1, Recurrence::R2].iter().flat_map(|r| r.instances(&prev)).collect();
        (known, inst)
    }

    #[test]
    fn d1_at_n2() {
        let (known, inst) = setup(&[Boundary::I1, Boundary::I2]);
        let m = solve_constraints(2, &known, &inst).unwrap();
        assert_eq!(m.to_csv(), "0,0,0,0\n0,0,1,0\n1,1,0,0\n0,1,0,0\n");
    }

    #[test]
    fn missing_boundary_is_unresolved() {
        let (known, inst) = setup(&[Boundary::I1]);
        assert!(matches!(solve_constraints(2, &known, &inst), Err(Error::Unresolved { .. })));
    }

    #[test]
    fn corrupted_cell_is_inconsistent() {
        let (mut known, inst) = setup(&[Boundary::I1, Boundary::I2]);
        known.push(((3, 1), BigInt::from(5)));
        assert!(matches!(solve_constraints(2, &known, &inst), Err(Error::Inconsistent { .. })));
    }

    #[test]
    fn out_of_range_assignment() {
        assert!(solve_constraints(1, &[((3, 1), BigInt::zero())], &[]).is_err());
        assert!(solve_constraints(0, &[], &[]).is_err());
    }
}
