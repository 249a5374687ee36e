//! Finite simplicial complexes on at most 16 vertices and their reduced
//! homology over `F_p`.
//!
//! Faces are vertex bitmasks. The void complex (no faces at all) differs from
//! the irrelevant complex `{∅}`: only the latter has `H̃_{-1} = k`.

use regulus_gb::PrimeField;

use crate::CoreError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SimplicialComplex {
    Void { vertex_count: usize },
    Faces { vertex_count: usize, faces: Vec<u32> },
}

impl SimplicialComplex {
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex::Void { vertex_count }
    }

    pub fn irrelevant(vertex_count: usize) -> Self {
        SimplicialComplex::Faces {
            vertex_count,
            faces: vec![0],
        }
    }

    /// The downward closure of `facets`.
    pub fn from_facets(vertex_count: usize, facets: &[u32]) -> Result<Self, CoreError> {
        if vertex_count > 16 {
            return Err(CoreError::Unsupported("more than 16 vertices".into()));
        }
        let mut faces = std::collections::BTreeSet::new();
        for &f in facets {
            if f >> vertex_count != 0 {
                return Err(CoreError::Invalid(format!("facet {f:#b} uses missing vertices")));
            }
            // Enumerate subsets of f.
            let mut s = f;
            loop {
                faces.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        if faces.is_empty() {
            return Ok(SimplicialComplex::void(vertex_count));
        }
        Ok(SimplicialComplex::Faces {
            vertex_count,
            faces: faces.into_iter().collect(),
        })
    }

    /// Builds from an explicit face list, checking closure under subsets.
    pub fn from_faces(vertex_count: usize, mut faces: Vec<u32>) -> Result<Self, CoreError> {
        faces.sort_unstable();
        faces.dedup();
        if faces.is_empty() {
            return Ok(SimplicialComplex::void(vertex_count));
        }
        for &f in &faces {
            for v in 0..vertex_count {
                if f & (1 << v) != 0 && faces.binary_search(&(f & !(1 << v))).is_err() {
                    return Err(CoreError::Invalid(format!("face set not closed at {f:#b}")));
                }
            }
        }
        Ok(SimplicialComplex::Faces {
            vertex_count,
            faces,
        })
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            SimplicialComplex::Void { vertex_count } => *vertex_count,
            SimplicialComplex::Faces { vertex_count, .. } => *vertex_count,
        }
    }

    pub fn faces(&self) -> &[u32] {
        match self {
            SimplicialComplex::Void { .. } => &[],
            SimplicialComplex::Faces { faces, .. } => faces,
        }
    }

    pub fn is_void(&self) -> bool {
        matches!(self, SimplicialComplex::Void { .. })
    }
}

/// Rank of a dense matrix over `F_p`; the matrix is consumed.
pub(crate) fn rank_mod_p(field: PrimeField, mut rows: Vec<Vec<u32>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(rows[rank][c]);
        for v in rows[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (v, q) in row.iter_mut().zip(&pivot) {
                    *v = field.sub(*v, field.mul(f, *q));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// `dim H̃_d` for `d = -1 .. vertex_count - 1`, indexed by `d + 1`.
pub fn reduced_homology(c: &SimplicialComplex, field: PrimeField) -> Vec<usize> {
    let n = c.vertex_count();
    let mut out = vec![0usize; n + 1];
    let faces = c.faces();
    if faces.is_empty() {
        return out;
    }
    // Faces grouped by dimension + 1 (the empty face sits at index 0).
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank of the boundary map from size-k faces to size-(k-1) faces.
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        if by_size[k].is_empty() || by_size[k - 1].is_empty() {
            continue;
        }
        let lower = &by_size[k - 1];
        let rows: Vec<Vec<u32>> = by_size[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0u32; lower.len()];
                let mut sign = true;
                for v in 0..n {
                    if f & (1 << v) != 0 {
                        let g = f & !(1 << v);
                        let idx = lower.binary_search(&g).expect("closed complex");
                        row[idx] = if sign { 1 } else { field.neg(1) };
                        sign = !sign;
                    }
                }
                row
            })
            .collect();
        ranks[k] = rank_mod_p(field, rows);
    }
    for k in 0..=n {
        // H̃_{k-1}: size-k faces, kernel of ∂_k modulo image of ∂_{k+1}.
        let cycles = by_size[k].len() - ranks[k];
        out[k] = cycles - ranks[k + 1];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn hollow_triangle() {
        let c = SimplicialComplex::from_facets(3, &[0b011, 0b110, 0b101]).unwrap();
        assert_eq!(reduced_homology(&c, f()), vec![0, 0, 1, 0]);
    }

    #[test]
    fn two_points_and_simplex() {
        let c = SimplicialComplex::from_facets(2, &[0b01, 0b10]).unwrap();
        assert_eq!(reduced_homology(&c, f()), vec![0, 1, 0]);
        let s = SimplicialComplex::from_facets(3, &[0b111]).unwrap();
        assert_eq!(reduced_homology(&s, f()), vec![0, 0, 0, 0]);
    }

    #[test]
    fn void_and_irrelevant_differ() {
        assert_eq!(reduced_homology(&SimplicialComplex::void(2), f()), vec![0, 0, 0]);
        assert_eq!(
            reduced_homology(&SimplicialComplex::irrelevant(2), f()),
            vec![1, 0, 0]
        );
        assert!(SimplicialComplex::from_faces(2, vec![0b11]).is_err());
    }

    fn all_complexes(n: usize) -> Vec<Vec<u32>> {
        let mut order: Vec<u32> = (0..1u32 << n).collect();
        order.sort_by_key(|s| s.count_ones());
        let mut out = Vec::new();
        fn rec(order: &[u32], k: usize, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if k == order.len() {
                out.push(cur.clone());
                return;
            }
            rec(order, k + 1, n, cur, out);
            let s = order[k];
            let closed = (0..n).all(|v| s & (1 << v) == 0 || cur.contains(&(s & !(1 << v))));
            if closed {
                cur.push(s);
                rec(order, k + 1, n, cur, out);
                cur.pop();
            }
        }
        rec(&order, 0, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn euler_characteristic_on_all_small_complexes() {
        // Dedekind numbers count the downward-closed families.
        assert_eq!(all_complexes(3).len(), 20);
        for n in 0..=5usize {
            for faces in all_complexes(n) {
                let c = SimplicialComplex::from_faces(n, faces.clone()).unwrap();
                let h = reduced_homology(&c, f());
                // A face with k vertices has dimension k - 1 and sign (-1)^{k-1}.
                let chi_faces: i64 = faces
                    .iter()
                    .map(|s| if s.count_ones() % 2 == 1 { 1 } else { -1 })
                    .sum();
                let chi_h: i64 = h
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if k % 2 == 1 { x as i64 } else { -(x as i64) })
                    .sum();
                assert_eq!(chi_faces, chi_h, "faces {faces:?}");
            }
        }
    }
}
