use super::field::Prime;
use super::vector::FpVector;

/// Row echelon form that remembers, for every row, which combination of the
/// inserted vectors produced it. Used for coordinate solving and kernels.
#[derive(Clone, Debug)]
pub struct TrackedEchelon {
    p: Prime,
    len: usize,
    tag_len: usize,
    // sorted by pivot column
    rows: Vec<TrackedRow>,
}

#[derive(Clone, Debug)]
struct TrackedRow {
    pivot: usize,
    vec: FpVector,
    tag: FpVector,
}

impl TrackedEchelon {
    pub fn new(p: Prime, len: usize, tag_len: usize) -> Self {
        TrackedEchelon { p, len, tag_len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn tag_len(&self) -> usize {
        self.tag_len
    }

    /// Reduces `v`, returning the residual and the tag combination removed.
    /// `v = residual + (combination of inserted vectors given by the tag)`.
    pub fn reduce(&self, v: &FpVector) -> (FpVector, FpVector) {
        debug_assert_eq!(v.len(), self.len);
        let mut residual = v.clone();
        let mut tag = FpVector::zero(self.p, self.tag_len);
        for row in &self.rows {
            let c = residual.get(row.pivot);
            if c != 0 {
                residual.add_scaled(&row.vec, self.p.neg(c));
                tag.add_scaled(&row.tag, c);
            }
        }
        (residual, tag)
    }

    /// Inserts `v` carrying `tag`. When `v` is dependent on earlier rows the
    /// relation `tag - (removed combination)` is returned instead.
    pub fn insert(&mut self, v: FpVector, tag: FpVector) -> Option<FpVector> {
        let (mut residual, removed) = self.reduce(&v);
        let mut tag = tag;
        tag.sub(&removed);
        match residual.first_nonzero() {
            None => Some(tag),
            Some(pivot) => {
                let inv = self.p.inv(residual.get(pivot));
                residual.scale(inv);
                tag.scale(inv);
                let at = self.rows.partition_point(|r| r.pivot < pivot);
                self.rows.insert(at, TrackedRow { pivot, vec: residual, tag });
                None
            }
        }
    }
}

/// Basis of the space of relations `x` with `sum x_i rows[i] = 0`.
pub fn left_kernel(p: Prime, len: usize, rows: &[FpVector]) -> Vec<FpVector> {
    let mut ech = TrackedEchelon::new(p, len, rows.len());
    let mut kernel = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if let Some(rel) = ech.insert(r.clone(), FpVector::unit(p, rows.len(), i)) {
            kernel.push(rel);
        }
    }
    kernel
}
