//! Path-space bases of a quiver with relations KQ/I, and the operational
//! global-dimension-2 check.
//!
//! Every path space [y,z] is finite (the quiver is acyclic); the relation
//! ideal is spanned inside [y,z] by the two-sided translates u·r·v of the
//! given minimal relations, so exact rational row reduction produces a
//! basis of the quotient and a reduction map for arbitrary combinations.

use super::{ArrowId, Quiver, RelationSet, VertexId};
use crate::linalg::{Field, Matrix, Rat};

type RawPath = Vec<ArrowId>;

struct SpaceData {
    paths: Vec<RawPath>,
    index: std::collections::HashMap<RawPath, usize>,
    /// reduced rows spanning I ∩ [y,z], with their pivot columns
    rel_rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    /// indices (into `paths`) of the quotient basis
    basis: Vec<usize>,
}

/// Bases of all path spaces [y,z] of KQ/I with reduction mod the relation
/// ideal.
pub struct PathSpaces<'a> {
    pub quiver: &'a Quiver,
    pub relations: &'a RelationSet,
    spaces: Vec<SpaceData>, // indexed y * nv + z
}

impl<'a> PathSpaces<'a> {
    pub fn new(quiver: &'a Quiver, relations: &'a RelationSet) -> Self {
        let nv = quiver.vertex_count();
        let zero = Rat::from_int(0);
        let mut spaces = Vec::with_capacity(nv * nv);
        for y in 0..nv {
            for z in 0..nv {
                let mut paths = paths_between(quiver, y, z);
                paths.sort();
                let index: std::collections::HashMap<RawPath, usize> = paths
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.clone(), i))
                    .collect();
                // spanning set of I ∩ [y,z]
                let mut rows: Vec<Vec<Rat>> = vec![];
                for r in relations.iter() {
                    let pres = paths_between(quiver, y, r.tail);
                    let posts = paths_between(quiver, r.head, z);
                    for pre in &pres {
                        for post in &posts {
                            let mut row = vec![zero.clone(); paths.len()];
                            for (coeff, mid) in &r.terms {
                                let mut full = pre.clone();
                                full.extend_from_slice(&mid.0);
                                full.extend_from_slice(post);
                                let idx = index[&full];
                                row[idx] = row[idx].add(&Rat::from_int(*coeff));
                            }
                            if row.iter().any(|v| !v.is_zero()) {
                                rows.push(row);
                            }
                        }
                    }
                }
                let (rel_rows, pivots) = reduce_rows(rows, paths.len());
                let basis: Vec<usize> =
                    (0..paths.len()).filter(|i| !pivots.contains(i)).collect();
                spaces.push(SpaceData {
                    paths,
                    index,
                    rel_rows,
                    pivots,
                    basis,
                });
            }
        }
        PathSpaces {
            quiver,
            relations,
            spaces,
        }
    }

    fn space(&self, y: VertexId, z: VertexId) -> &SpaceData {
        &self.spaces[y * self.quiver.vertex_count() + z]
    }

    /// Dimension of [y,z] in KQ/I.
    pub fn quotient_dim(&self, y: VertexId, z: VertexId) -> usize {
        self.space(y, z).basis.len()
    }

    /// Quotient basis of [y,z], as raw paths.
    pub fn basis_paths(&self, y: VertexId, z: VertexId) -> Vec<RawPath> {
        let s = self.space(y, z);
        s.basis.iter().map(|&i| s.paths[i].clone()).collect()
    }

    /// Coordinates of an integer path combination in the quotient basis.
    pub fn reduce(&self, y: VertexId, z: VertexId, terms: &[(i64, RawPath)]) -> Vec<Rat> {
        let s = self.space(y, z);
        let zero = Rat::from_int(0);
        let mut v = vec![zero.clone(); s.paths.len()];
        for (c, p) in terms {
            let idx = *s
                .index
                .get(p)
                .unwrap_or_else(|| panic!("path not in [{y},{z}]"));
            v[idx] = v[idx].add(&Rat::from_int(*c));
        }
        // eliminate pivot coordinates
        for (row, &pc) in s.rel_rows.iter().zip(&s.pivots) {
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for (slot, r) in v.iter_mut().zip(row) {
                    *slot = slot.sub(&f.mul(r));
                }
            }
        }
        s.basis.iter().map(|&i| v[i].clone()).collect()
    }

    /// Matrix (over ℚ) of right-composition with a fixed integer combination
    /// m of paths v→w, as a map [w,z]/I → [v,z]/I in the quotient bases.
    /// Columns are indexed by the basis of [w,z].
    pub fn right_multiplication(
        &self,
        v: VertexId,
        w: VertexId,
        z: VertexId,
        m: &[(i64, RawPath)],
    ) -> Matrix<Rat> {
        let zero = Rat::from_int(0);
        let domain = self.basis_paths(w, z);
        let codomain_dim = self.quotient_dim(v, z);
        let mut out = Matrix::zeros(codomain_dim, domain.len(), zero);
        for (col, q) in domain.iter().enumerate() {
            let terms: Vec<(i64, RawPath)> = m
                .iter()
                .map(|(c, p)| {
                    let mut full = p.clone();
                    full.extend_from_slice(q);
                    (*c, full)
                })
                .collect();
            let coords = self.reduce(v, z, &terms);
            for (row, val) in coords.into_iter().enumerate() {
                out[(row, col)] = val;
            }
        }
        out
    }
}

fn paths_between(q: &Quiver, y: VertexId, z: VertexId) -> Vec<RawPath> {
    let mut out = vec![];
    if y == z {
        out.push(vec![]);
    }
    let mut stack: Vec<(VertexId, RawPath)> = vec![(y, vec![])];
    while let Some((at, path)) = stack.pop() {
        for (aid, arrow) in q.arrows_with_tail(at) {
            let mut ext = path.clone();
            ext.push(aid);
            if arrow.head == z {
                out.push(ext.clone());
            }
            stack.push((arrow.head, ext));
        }
    }
    out
}

/// Row-reduce spanning rows; returns (reduced nonzero rows, pivot columns).
fn reduce_rows(rows: Vec<Vec<Rat>>, width: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let zero = Rat::from_int(0);
    if rows.is_empty() || width == 0 {
        return (vec![], vec![]);
    }
    let mut m = Matrix::zeros(rows.len(), width, zero);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m[(i, j)] = v.clone();
        }
    }
    let rank = m.row_reduce();
    let mut out_rows = vec![];
    let mut pivots = vec![];
    for i in 0..rank {
        let row: Vec<Rat> = (0..width).map(|j| m[(i, j)].clone()).collect();
        let pivot = row.iter().position(|v| !v.is_zero()).expect("nonzero row");
        pivots.push(pivot);
        out_rows.push(row);
    }
    (out_rows, pivots)
}

/// Operational global-dimension check: for every simple S_x, realize the
/// leftmost map of the canonical three-term resolution
/// ⊕_{tr=x} P_{hr} → ⊕_{ta=x} P_{ha} and verify it is injective on every
/// vertex's path space. With Q₂ a minimal homogeneous generating set this
/// certifies pdim S_x ≤ 2 for all x, hence gldim Q/I ≤ 2.
pub fn gldim_le_2_check(q: &Quiver, rels: &RelationSet) -> bool {
    if rels.is_empty() {
        return true; // hereditary
    }
    let spaces = PathSpaces::new(q, rels);
    let zero = Rat::from_int(0);
    for x in 0..q.vertex_count() {
        let rel_ids: Vec<usize> = rels
            .iter()
            .enumerate()
            .filter(|(_, r)| r.tail == x)
            .map(|(i, _)| i)
            .collect();
        if rel_ids.is_empty() {
            continue;
        }
        let arrow_ids: Vec<ArrowId> = q.arrows_with_tail(x).map(|(a, _)| a).collect();
        for z in 0..q.vertex_count() {
            let dom_dim: usize = rel_ids
                .iter()
                .map(|&ri| spaces.quotient_dim(rels.0[ri].head, z))
                .sum();
            if dom_dim == 0 {
                continue;
            }
            let cod_dim: usize = arrow_ids
                .iter()
                .map(|&a| spaces.quotient_dim(q.arrow(a).head, z))
                .sum();
            let mut big = Matrix::zeros(cod_dim, dom_dim, zero.clone());
            let mut col_off = 0;
            for &ri in &rel_ids {
                let r = &rels.0[ri];
                let mut row_off = 0;
                for &a in &arrow_ids {
                    // component P_{hr} → P_{ha}: chop the first arrow off
                    // every relation path that starts with a
                    let m: Vec<(i64, RawPath)> = r
                        .terms
                        .iter()
                        .filter(|(_, p)| p.0[0] == a)
                        .map(|(c, p)| (*c, p.0[1..].to_vec()))
                        .collect();
                    let ha = q.arrow(a).head;
                    if !m.is_empty() {
                        let block = spaces.right_multiplication(ha, r.head, z, &m);
                        for i in 0..block.rows {
                            for j in 0..block.cols {
                                big[(row_off + i, col_off + j)] = block[(i, j)].clone();
                            }
                        }
                    }
                    row_off += spaces.quotient_dim(ha, z);
                }
                col_off += spaces.quotient_dim(r.head, z);
            }
            if big.rank() != dom_dim {
                return false;
            }
        }
    }
    true
}
