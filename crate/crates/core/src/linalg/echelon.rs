use std::collections::BTreeMap;

use super::{Scalar, SparseMat};

pub(crate) type SparseVec = Vec<(usize, Scalar)>;

/// Incremental row echelon form over sparse rows.
///
/// Every stored row is scaled so its leading entry (the pivot) is 1, and
/// contains no entries in columns that were already pivots when it was
/// inserted.
pub(crate) struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_of_col: vec![None; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows and keeps the remainder when it
    /// is nonzero. Returns whether the row was independent.
    pub fn insert(&mut self, row: &[(usize, Scalar)]) -> bool {
        let mut work: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in row {
            debug_assert!(*c < self.ncols);
            if !v.is_zero() {
                work.insert(*c, v.clone());
            }
        }
        let mut cursor = 0;
        loop {
            let Some((&c, v)) = work.range(cursor..).next() else { break };
            cursor = c + 1;
            if let Some(r) = self.pivot_of_col[c] {
                let factor = v.clone();
                work.remove(&c);
                for (c2, v2) in self.rows[r].iter().skip(1) {
                    let delta = &factor * v2;
                    match work.get_mut(c2) {
                        Some(e) => {
                            *e -= &delta;
                            if e.is_zero() {
                                work.remove(c2);
                            }
                        }
                        None => {
                            work.insert(*c2, -delta);
                        }
                    }
                }
            }
        }
        let Some((&lead, lead_val)) = work.iter().next() else {
            return false;
        };
        let inv = lead_val.recip().expect("nonzero pivot");
        let stored: SparseVec = work.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivot_of_col[lead] = Some(self.rows.len());
        self.rows.push(stored);
        true
    }

    /// Fully reduced row echelon form: each row has a 1 at its pivot and
    /// zeros in every other pivot column.
    pub fn into_rref(self) -> Rref {
        let Echelon { ncols, mut rows, pivot_of_col } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(rows[r][0].0));
        let mut reduced: Vec<Option<SparseVec>> = vec![None; rows.len()];
        for &r in &order {
            let row = std::mem::take(&mut rows[r]);
            let pivot = row[0].0;
            let needs = row.iter().skip(1).any(|(c, _)| pivot_of_col[*c].is_some());
            if !needs {
                reduced[r] = Some(row);
                continue;
            }
            let mut work: BTreeMap<usize, Scalar> = row.into_iter().collect();
            let hits: Vec<(usize, Scalar)> = work
                .iter()
                .filter(|(c, _)| **c != pivot && pivot_of_col[**c].is_some())
                .map(|(c, v)| (*c, v.clone()))
                .collect();
            for (c, factor) in hits {
                let other = reduced[pivot_of_col[c].unwrap()].as_ref().expect("larger pivots reduced first");
                for (c2, v2) in other {
                    let delta = &factor * v2;
                    match work.get_mut(c2) {
                        Some(e) => {
                            *e -= &delta;
                            if e.is_zero() {
                                work.remove(c2);
                            }
                        }
                        None => {
                            work.insert(*c2, -delta);
                        }
                    }
                }
            }
            reduced[r] = Some(work.into_iter().collect());
        }
        let mut pairs: Vec<(usize, SparseVec)> = reduced
            .into_iter()
            .map(|r| {
                let r = r.unwrap();
                (r[0].0, r)
            })
            .collect();
        pairs.sort_by_key(|p| p.0);
        let (pivots, rows) = pairs.into_iter().unzip();
        Rref { ncols, pivots, rows }
    }
}

pub(crate) struct Rref {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Null-space basis with one column per free variable; the free rows of
    /// the result form an identity block.
    pub fn kernel(&self) -> (SparseMat, Vec<usize>) {
        let free = self.free_columns();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut cols: Vec<SparseVec> = free.iter().map(|&f| vec![(f, Scalar::one())]).collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (c, v) in row.iter().skip(1) {
                cols[slot[*c]].push((p, -v));
            }
        }
        for col in &mut cols {
            col.sort_by_key(|e| e.0);
        }
        (SparseMat::from_columns(self.ncols, cols), free)
    }
}
