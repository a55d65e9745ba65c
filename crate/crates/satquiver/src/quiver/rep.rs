//! Exact representations of a quiver with relations and the hom/ext¹/ext²
//! computation through the canonical three-term Hom complex.

use super::{DimVec, PathSpaces, Quiver, RelationSet, VertexId};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// A representation: one exact-field matrix per arrow, of shape
/// dim(head) × dim(tail).
#[derive(Clone, Debug)]
pub struct Representation<F: Field> {
    dims: Vec<usize>,
    mats: Vec<Matrix<F>>,
    zero: F,
}

impl<F: Field> Representation<F> {
    pub fn new(q: &Quiver, dims: Vec<usize>, mats: Vec<Matrix<F>>, zero: F) -> Result<Self> {
        if dims.len() != q.vertex_count() || mats.len() != q.arrow_count() {
            return Err(Error::domain("representation shape mismatch"));
        }
        for (a, m) in q.arrows().iter().zip(&mats) {
            if m.rows != dims[a.head] || m.cols != dims[a.tail] {
                return Err(Error::domain(format!(
                    "matrix for arrow '{}' must be {}x{}, got {}x{}",
                    a.name, dims[a.head], dims[a.tail], m.rows, m.cols
                )));
            }
        }
        Ok(Representation { dims, mats, zero })
    }

    pub fn zero_rep(q: &Quiver, dims: Vec<usize>, zero: F) -> Self {
        let mats = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.head], dims[a.tail], zero.clone()))
            .collect();
        Representation { dims, mats, zero }
    }

    /// The simple representation S_x: K at x, zero elsewhere.
    pub fn simple(q: &Quiver, x: VertexId, zero: F) -> Self {
        let mut dims = vec![0; q.vertex_count()];
        dims[x] = 1;
        Representation::zero_rep(q, dims, zero)
    }

    /// The indecomposable projective P_x of KQ/I, realized on the quotient
    /// path-space bases.
    pub fn projective(ps: &PathSpaces<'_>, x: VertexId, zero: F) -> Self {
        let q = ps.quiver;
        let dims: Vec<usize> = (0..q.vertex_count())
            .map(|y| ps.quotient_dim(x, y))
            .collect();
        let mats = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(aid, a)| {
                let domain = ps.basis_paths(x, a.tail);
                let mut m = Matrix::zeros(dims[a.head], dims[a.tail], zero.clone());
                for (col, p) in domain.iter().enumerate() {
                    let mut ext = p.clone();
                    ext.push(aid);
                    let coords = ps.reduce(x, a.head, &[(1, ext)]);
                    for (row, val) in coords.iter().enumerate() {
                        // path-space structure constants are rational
                        // integers; map them into F through i64
                        m[(row, col)] = rat_to_field(val, &zero);
                    }
                }
                m
            })
            .collect();
        Representation { dims, mats, zero }
    }

    pub fn dim(&self, v: VertexId) -> usize {
        self.dims[v]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vec(&self) -> DimVec {
        DimVec(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn matrix(&self, a: usize) -> &Matrix<F> {
        &self.mats[a]
    }

    pub fn set_matrix(&mut self, a: usize, m: Matrix<F>) {
        self.mats[a] = m;
    }

    pub fn zero_elem(&self) -> F {
        self.zero.clone()
    }

    /// Evaluate a path (application order) as a matrix.
    pub fn eval_path(&self, path: &[usize]) -> Matrix<F> {
        assert!(!path.is_empty());
        let mut m = self.mats[path[0]].clone();
        for &a in &path[1..] {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// Do all relations evaluate to the zero matrix?
    pub fn satisfies_relations(&self, _q: &Quiver, rels: &RelationSet) -> bool {
        rels.iter().all(|r| {
            let rows = self.dims[r.head];
            let cols = self.dims[r.tail];
            let mut acc = Matrix::zeros(rows, cols, self.zero.clone());
            for (c, p) in &r.terms {
                let m = self.eval_path(&p.0);
                acc = acc.add(&m.scale(&self.zero.from_i64_like(*c)));
            }
            acc.is_zero()
        })
    }
}

fn rat_to_field<F: Field>(v: &crate::linalg::Rat, zero: &F) -> F {
    use num_traits::ToPrimitive;
    let r = &v.0;
    let num = r
        .numer()
        .to_i64()
        .expect("path structure constant fits i64");
    let den = r
        .denom()
        .to_i64()
        .expect("path structure constant fits i64");
    let fnum = zero.from_i64_like(num);
    if den == 1 {
        fnum
    } else {
        fnum.mul(&zero.from_i64_like(den).inv())
    }
}

/// Dimensions of hom, ext¹ and ext² computed from the three-term Hom
/// complex of the canonical resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtTriple {
    pub hom: usize,
    pub ext1: usize,
    pub ext2: usize,
}

fn block_offsets(blocks: &[usize]) -> Vec<usize> {
    let mut off = vec![0usize];
    for b in blocks {
        off.push(off.last().unwrap() + b);
    }
    off
}

/// The matrix of (φ_x) ↦ (φ_{ha}V_a − W_aφ_{ta}) with the C⁰ block offsets.
fn d0_matrix<F: Field>(
    q: &Quiver,
    v: &Representation<F>,
    w: &Representation<F>,
) -> (Matrix<F>, Vec<usize>) {
    let zero = v.zero_elem();
    let c0_blocks: Vec<usize> = (0..q.vertex_count()).map(|x| w.dim(x) * v.dim(x)).collect();
    let c1_blocks: Vec<usize> = q
        .arrows()
        .iter()
        .map(|a| w.dim(a.head) * v.dim(a.tail))
        .collect();
    let c0_off = block_offsets(&c0_blocks);
    let c1_off = block_offsets(&c1_blocks);
    let mut d0 = Matrix::zeros(*c1_off.last().unwrap(), *c0_off.last().unwrap(), zero);
    for (aid, a) in q.arrows().iter().enumerate() {
        let (rows_w, cols_v) = (w.dim(a.head), v.dim(a.tail));
        for i in 0..rows_w {
            for j in 0..cols_v {
                let row = c1_off[aid] + i * cols_v + j;
                // + φ_{ha}[i,k] V_a[k,j]
                for k in 0..v.dim(a.head) {
                    let col = c0_off[a.head] + i * v.dim(a.head) + k;
                    let val = v.matrix(aid)[(k, j)].clone();
                    d0[(row, col)] = d0[(row, col)].add(&val);
                }
                // − W_a[i,k] φ_{ta}[k,j]
                for k in 0..w.dim(a.tail) {
                    let col = c0_off[a.tail] + k * v.dim(a.tail) + j;
                    let val = w.matrix(aid)[(i, k)].clone();
                    d0[(row, col)] = d0[(row, col)].sub(&val);
                }
            }
        }
    }
    (d0, c0_off)
}

/// A basis of Hom_{Q/I}(V, W), each morphism as one matrix per vertex.
pub fn hom_space<F: Field>(
    q: &Quiver,
    rels: &RelationSet,
    v: &Representation<F>,
    w: &Representation<F>,
) -> Result<Vec<Vec<Matrix<F>>>> {
    for (name, rep) in [("V", v), ("W", w)] {
        if !rep.satisfies_relations(q, rels) {
            return Err(Error::domain(format!("{name} violates the relations")));
        }
    }
    let zero = v.zero_elem();
    let (d0, c0_off) = d0_matrix(q, v, w);
    let mut basis = vec![];
    for vec in d0.kernel_basis() {
        let mut phis = vec![];
        for x in 0..q.vertex_count() {
            let mut m = Matrix::zeros(w.dim(x), v.dim(x), zero.clone());
            for i in 0..w.dim(x) {
                for j in 0..v.dim(x) {
                    m[(i, j)] = vec[c0_off[x] + i * v.dim(x) + j].clone();
                }
            }
            phis.push(m);
        }
        basis.push(phis);
    }
    Ok(basis)
}

/// Compute (hom, ext¹, ext²) for representations V, W of Q/I.
///
/// The complex is
///   ⊕_x Hom(V(x),W(x)) → ⊕_a Hom(V(ta),W(ha)) → ⊕_r Hom(V(tr),W(hr)),
/// with first map (φ) ↦ (φ_{ha}V_a − W_aφ_{ta}) and second map the Leibniz
/// expansion of each relation. Valid as ext groups when gldim Q/I ≤ 2 and
/// Q₂ is minimal; hom is unconditional.
pub fn ext_dims<F: Field>(
    q: &Quiver,
    rels: &RelationSet,
    v: &Representation<F>,
    w: &Representation<F>,
) -> Result<ExtTriple> {
    for (name, rep) in [("V", v), ("W", w)] {
        if !rep.satisfies_relations(q, rels) {
            return Err(Error::domain(format!("{name} violates the relations")));
        }
    }
    let zero = v.zero_elem();

    let c1_blocks: Vec<usize> = q
        .arrows()
        .iter()
        .map(|a| w.dim(a.head) * v.dim(a.tail))
        .collect();
    let c2_blocks: Vec<usize> = rels
        .iter()
        .map(|r| w.dim(r.head) * v.dim(r.tail))
        .collect();
    let c1_off = block_offsets(&c1_blocks);
    let c2_off = block_offsets(&c2_blocks);
    let dim_c1 = *c1_off.last().unwrap();
    let dim_c2 = *c2_off.last().unwrap();

    let (d0, c0_off) = d0_matrix(q, v, w);
    let dim_c0 = *c0_off.last().unwrap();

    // d1: Leibniz expansion per relation: Σ_p λ_p Σ_k W-suffix ∘ ψ_{a_k} ∘ V-prefix
    let mut d1 = Matrix::zeros(dim_c2, dim_c1, zero.clone());
    for (rid, r) in rels.iter().enumerate() {
        for (coeff, p) in &r.terms {
            let arrows = &p.0;
            let d = arrows.len();
            for k in 0..d {
                let ak = arrows[k];
                let a = q.arrow(ak);
                // V-prefix: V_{a_{k-1}} ··· V_{a_1}: v.dim(tr) → v.dim(t a_k)
                let mut prefix = Matrix::identity(v.dim(r.tail), zero.clone());
                for &ai in &arrows[..k] {
                    prefix = v.matrix(ai).mul(&prefix);
                }
                // W-suffix: W_{a_d} ··· W_{a_{k+1}}: w.dim(h a_k) → w.dim(hr)
                let mut suffix = Matrix::identity(w.dim(a.head), zero.clone());
                for &ai in &arrows[k + 1..] {
                    suffix = w.matrix(ai).mul(&suffix);
                }
                let lam = zero.from_i64_like(*coeff);
                let cols_v = v.dim(a.tail);
                for i in 0..w.dim(r.head) {
                    for j in 0..v.dim(r.tail) {
                        let row = c2_off[rid] + i * v.dim(r.tail) + j;
                        for u in 0..w.dim(a.head) {
                            for t in 0..v.dim(a.tail) {
                                let col = c1_off[ak] + u * cols_v + t;
                                let val = lam.mul(&suffix[(i, u)]).mul(&prefix[(t, j)]);
                                d1[(row, col)] = d1[(row, col)].add(&val);
                            }
                        }
                    }
                }
            }
        }
    }

    // d1 ∘ d0 = 0 whenever V and W satisfy the relations
    debug_assert!(dim_c0 == 0 || dim_c2 == 0 || d1.mul(&d0).is_zero());

    let rank_d0 = d0.rank();
    let rank_d1 = d1.rank();
    let hom = dim_c0 - rank_d0;
    let ext1 = (dim_c1 - rank_d1) - rank_d0;
    let ext2 = dim_c2 - rank_d1;
    Ok(ExtTriple { hom, ext1, ext2 })
}
