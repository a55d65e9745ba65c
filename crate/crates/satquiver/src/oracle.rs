//! Finite-field brute-force ground truth: random symmetric representations
//! of flag quivers, exhaustive submodule enumeration (quiver Grassmannian
//! point counts), nonemptiness sampling, and generic-rank estimation.
//!
//! Genericity over F_p only ever supports a claim; it never certifies one.
//! Verdicts therefore carry their sample counts, and the tiny-field
//! enumerations are the only exhaustive results here.

use crate::error::{Error, Result};
use crate::flagq::{FlagQuiverSpec, FlagSign};
use crate::linalg::{Field, Fp, Matrix};
use crate::quiver::{hom_space, DimVec, Quiver, RelationSet, Representation};
use rand::Rng;
use serde::Serialize;

/// Working prime field. Enumeration wants a tiny p; genericity sampling a
/// large one (default 32003).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    pub p: u64,
}

pub const DEFAULT_SAMPLING_PRIME: u64 = 32003;

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::domain("characteristic must differ from 2"));
        }
        if p < 2 || !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(FieldSpec { p })
    }

    pub fn sampling_default() -> Self {
        FieldSpec {
            p: DEFAULT_SAMPLING_PRIME,
        }
    }

    pub fn zero(&self) -> Fp {
        Fp::new(0, self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Caps for the exhaustive submodule enumeration.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EnumerationBudget {
    /// Maximum number of subspace tuples the search may visit.
    pub max_tuples: u64,
    /// Wall-clock ceiling in milliseconds.
    pub max_millis: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_tuples: 5_000_000,
            max_millis: 60_000,
        }
    }
}

/// Gram matrix of the hyperbolic form on K^{2n+δ}: ω(e_i, e_{m+1−i}) = 1
/// for i ≤ n+δ, with the lower half mirrored (+1 symmetric, −1 skew).
pub fn hyperbolic_gram(n: usize, delta: i64, sign: FlagSign, field: FieldSpec) -> Matrix<Fp> {
    let m = 2 * n + delta as usize;
    let mut j = Matrix::zeros(m, m, field.zero());
    for i in 0..m {
        let mirror = m - 1 - i;
        let top_half = i < n + delta as usize;
        let val = match sign {
            FlagSign::Orthogonal => 1,
            FlagSign::Symplectic => {
                if top_half {
                    1
                } else {
                    -1
                }
            }
        };
        j[(i, mirror)] = Fp::new(val, field.p);
    }
    j
}

fn random_matrix<R: Rng>(rows: usize, cols: usize, field: FieldSpec, rng: &mut R) -> Matrix<Fp> {
    Matrix::from_fn(rows, cols, field.zero(), |_, _| Fp::random(field.p, rng))
}

fn random_full_rank<R: Rng>(
    rows: usize,
    cols: usize,
    field: FieldSpec,
    rng: &mut R,
) -> Matrix<Fp> {
    loop {
        let m = random_matrix(rows, cols, field, rng);
        if m.rank() == rows.min(cols) {
            return m;
        }
    }
}

/// One Cayley transform g = (I − A)(I + A)⁻¹ with A = J⁻¹K, K skew for
/// orthogonal forms and symmetric for symplectic ones.
fn cayley_isometry<R: Rng>(
    gram: &Matrix<Fp>,
    gram_inv: &Matrix<Fp>,
    sign: FlagSign,
    field: FieldSpec,
    rng: &mut R,
) -> Matrix<Fp> {
    let m = gram.rows;
    loop {
        let mut k = Matrix::zeros(m, m, field.zero());
        for i in 0..m {
            for j in 0..m {
                match (sign, i.cmp(&j)) {
                    (FlagSign::Orthogonal, std::cmp::Ordering::Less) => {
                        let v = Fp::random(field.p, rng);
                        k[(i, j)] = v;
                        k[(j, i)] = v.neg();
                    }
                    (FlagSign::Symplectic, std::cmp::Ordering::Less) => {
                        let v = Fp::random(field.p, rng);
                        k[(i, j)] = v;
                        k[(j, i)] = v;
                    }
                    (FlagSign::Symplectic, std::cmp::Ordering::Equal) => {
                        k[(i, j)] = Fp::random(field.p, rng);
                    }
                    _ => {}
                }
            }
        }
        let a = gram_inv.mul(&k);
        let id = Matrix::identity(m, field.zero());
        let Some(inv) = id.add(&a).inverse() else {
            continue;
        };
        let g = id.sub(&a).mul(&inv);
        debug_assert_eq!(g.transpose().mul(gram).mul(&g), *gram);
        return g;
    }
}

/// A random isometry of the form. Products of Cayley transforms spread the
/// sampling over the whole group even for tiny fields, where a single
/// transform covers too little; for orthogonal forms a coin flip composes
/// with a reflection so both families of maximal isotropics get sampled.
fn random_isometry<R: Rng>(
    gram: &Matrix<Fp>,
    sign: FlagSign,
    field: FieldSpec,
    rng: &mut R,
) -> Matrix<Fp> {
    let m = gram.rows;
    let gram_inv = gram.inverse().expect("hyperbolic form is nondegenerate");
    let mut g = cayley_isometry(gram, &gram_inv, sign, field, rng);
    g = g.mul(&cayley_isometry(gram, &gram_inv, sign, field, rng));
    g = g.mul(&cayley_isometry(gram, &gram_inv, sign, field, rng));
    if sign == FlagSign::Orthogonal && m >= 2 && rng.gen_bool(0.5) {
        // swap the paired basis vectors e_1 ↔ e_m: an isometry of
        // determinant −1 (symmetric forms only)
        let mut refl = Matrix::identity(m, field.zero());
        refl[(0, 0)] = field.zero();
        refl[(m - 1, m - 1)] = field.zero();
        refl[(0, m - 1)] = Fp::new(1, field.p);
        refl[(m - 1, 0)] = Fp::new(1, field.p);
        debug_assert_eq!(refl.transpose().mul(gram).mul(&refl), *gram);
        g = g.mul(&refl);
    }
    g
}

/// A random symmetric representation of the flag quiver at β^δ. The central
/// space carries the hyperbolic form; each arm's map into u lands in a
/// random maximal isotropic subspace (reached through the hyperbolic basis
/// by a random isometry), and the τ-side matrices are the form-transposes,
/// so the relations τ(aₙ)aₙ = 0 hold by construction. With `general` set,
/// all arm maps are full rank, making pdim ≤ 1 and idim ≤ 1 hold.
pub fn random_symmetric_rep<R: Rng>(
    spec: &FlagQuiverSpec,
    field: FieldSpec,
    general: bool,
    rng: &mut R,
) -> Representation<Fp> {
    let q = spec.quiver();
    let n = spec.n;
    let m = 2 * n + spec.delta as usize;
    let gram = hyperbolic_gram(n, spec.delta, spec.sign, field);
    let dims: Vec<usize> = spec
        .beta_delta
        .0
        .iter()
        .map(|&d| d as usize)
        .collect();
    let mut rep = Representation::zero_rep(q, dims, field.zero());

    // standard embedding onto the isotropic span(e_1..e_n)
    let mut embed = Matrix::zeros(m, n, field.zero());
    for i in 0..n {
        embed[(i, i)] = Fp::new(1, field.p);
    }

    for j in 1..=spec.r {
        for i in 1..n {
            let mat = if general {
                random_full_rank(i + 1, i, field, rng)
            } else {
                random_matrix(i + 1, i, field, rng)
            };
            // τ-side is the plain transpose under the dual-basis pairing
            rep.set_matrix(spec.tau_arm_arrow(j, i), mat.transpose());
            rep.set_matrix(spec.arm_arrow(j, i), mat);
        }
        let inner = if general {
            random_full_rank(n, n, field, rng)
        } else {
            random_matrix(n, n, field, rng)
        };
        let iso = random_isometry(&gram, spec.sign, field, rng);
        let into_u = iso.mul(&embed).mul(&inner);
        // V_{τ(aₙ)} = V_{aₙ}ᵀ J: kills the isotropic image
        rep.set_matrix(spec.tau_arm_arrow(j, n), into_u.transpose().mul(&gram));
        rep.set_matrix(spec.arm_arrow(j, n), into_u);
    }
    debug_assert!(rep.satisfies_relations(q, &spec.relations));
    rep
}

/// A random (not necessarily symmetric) representation of the flag quiver
/// with an arbitrary dimension vector: the relation τ(aₙ)aₙ = 0 is honored
/// by sampling the τ-side map inside the left annihilator of the arm map.
pub fn random_flag_rep<R: Rng>(
    spec: &FlagQuiverSpec,
    dims: &[usize],
    field: FieldSpec,
    rng: &mut R,
) -> Result<Representation<Fp>> {
    let q = spec.quiver();
    if dims.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: q.vertex_count(),
            got: dims.len(),
        });
    }
    let mut rep = Representation::zero_rep(q, dims.to_vec(), field.zero());
    for j in 1..=spec.r {
        for i in 1..n_of(spec) {
            let a = spec.arm_arrow(j, i);
            let (h, t) = (q.arrow(a).head, q.arrow(a).tail);
            rep.set_matrix(a, random_matrix(dims[h], dims[t], field, rng));
            let ta = spec.tau_arm_arrow(j, i);
            let (h, t) = (q.arrow(ta).head, q.arrow(ta).tail);
            rep.set_matrix(ta, random_matrix(dims[h], dims[t], field, rng));
        }
        // the relation pair: sample the arm map, then a τ-map annihilating
        // its image
        let a = spec.arm_arrow(j, n_of(spec));
        let (h, t) = (q.arrow(a).head, q.arrow(a).tail);
        let arm = random_matrix(dims[h], dims[t], field, rng);
        let ta = spec.tau_arm_arrow(j, n_of(spec));
        let (th, _tt) = (q.arrow(ta).head, q.arrow(ta).tail);
        // rows spanning the left annihilator {v : v arm = 0} = ker(armᵀ)
        let ann = arm.transpose().kernel_basis();
        let mut tau_mat = Matrix::zeros(dims[th], dims[h], field.zero());
        if !ann.is_empty() {
            let coeffs = random_matrix(dims[th], ann.len(), field, rng);
            for r in 0..dims[th] {
                for c in 0..dims[h] {
                    let mut acc = field.zero();
                    for (k, basis_vec) in ann.iter().enumerate() {
                        acc = acc.add(&coeffs[(r, k)].mul(&basis_vec[c]));
                    }
                    tau_mat[(r, c)] = acc;
                }
            }
        }
        rep.set_matrix(a, arm);
        rep.set_matrix(ta, tau_mat);
    }
    debug_assert!(rep.satisfies_relations(q, &spec.relations));
    Ok(rep)
}

fn n_of(spec: &FlagQuiverSpec) -> usize {
    spec.n
}

/// All k-dimensional subspaces of F_p^d as RREF basis matrices (k rows).
fn subspaces(field: FieldSpec, d: usize, k: usize) -> Vec<Matrix<Fp>> {
    if k > d {
        return vec![];
    }
    if k == 0 {
        return vec![Matrix::zeros(0, d, field.zero())];
    }
    // choose pivot columns, then fill free entries
    let mut out = vec![];
    let mut pivots = (0..k).collect::<Vec<usize>>();
    loop {
        // free positions: row i may have arbitrary entries in columns
        // greater than pivots[i] that are not pivots themselves
        let mut free_slots = vec![];
        for (i, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..d {
                if !pivots.contains(&c) {
                    out_free(i, c, &mut free_slots);
                }
            }
        }
        let total = (field.p as u128).pow(free_slots.len() as u32);
        for idx in 0..total {
            let mut m = Matrix::zeros(k, d, field.zero());
            for (i, &pc) in pivots.iter().enumerate() {
                m[(i, pc)] = Fp::new(1, field.p);
            }
            let mut rem = idx;
            for &(i, c) in &free_slots {
                m[(i, c)] = Fp::new((rem % field.p as u128) as i64, field.p);
                rem /= field.p as u128;
            }
            out.push(m);
        }
        // next pivot combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < d - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn out_free(i: usize, c: usize, slots: &mut Vec<(usize, usize)>) {
    slots.push((i, c));
}

/// Is the row vector in the row space of the RREF basis matrix?
fn in_row_space(basis: &Matrix<Fp>, vec: &[Fp]) -> bool {
    let mut v: Vec<Fp> = vec.to_vec();
    for r in 0..basis.rows {
        let pivot = (0..basis.cols).find(|&c| !basis[(r, c)].is_zero());
        let Some(pc) = pivot else { continue };
        if !v[pc].is_zero() {
            let f = v[pc].mul(&basis[(r, pc)].inv());
            for c in 0..basis.cols {
                v[c] = v[c].sub(&f.mul(&basis[(r, c)]));
            }
        }
    }
    v.iter().all(|x| x.is_zero())
}

/// Outcome of an exhaustive submodule enumeration.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SubmoduleCount {
    pub count: u64,
    pub exists: bool,
}

/// A visiting order that binds constraints early: undirected BFS from the
/// highest-degree vertex (the formed center of a flag quiver), so arrow
/// closure prunes each branch as soon as possible.
fn search_order(q: &Quiver) -> Vec<usize> {
    let nv = q.vertex_count();
    let mut degree = vec![0usize; nv];
    for a in q.arrows() {
        degree[a.tail] += 1;
        degree[a.head] += 1;
    }
    let mut order = vec![];
    let mut seen = vec![false; nv];
    loop {
        let Some(root) = (0..nv)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| degree[v])
        else {
            break;
        };
        let mut queue = std::collections::VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in q.arrows() {
                for next in [a.tail, a.head] {
                    if (a.tail == v || a.head == v) && !seen[next] {
                        seen[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    order
}

/// Depth-first walk over per-vertex subspace choices, pruning branches that
/// violate arrow closure; `on_complete` fires for every submodule found and
/// may stop the search by returning false.
struct SubspaceSearch<'a> {
    q: &'a Quiver,
    w: &'a Representation<Fp>,
    order: Vec<usize>,
    options: Vec<Vec<Matrix<Fp>>>, // indexed by vertex
    budget: &'a EnumerationBudget,
}

impl<'a> SubspaceSearch<'a> {
    fn run(&self, on_complete: &mut impl FnMut(&[usize]) -> bool) -> Result<()> {
        let start = std::time::Instant::now();
        let mut chosen = vec![usize::MAX; self.q.vertex_count()];
        let mut visited = 0u64;
        self.rec(0, &mut chosen, &mut visited, &start, on_complete)
            .map(|_| ())
    }

    // Ok(true) = keep searching, Ok(false) = caller asked to stop
    fn rec(
        &self,
        depth: usize,
        chosen: &mut Vec<usize>,
        visited: &mut u64,
        start: &std::time::Instant,
        on_complete: &mut impl FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(on_complete(chosen));
        }
        let v = self.order[depth];
        for i in 0..self.options[v].len() {
            *visited += 1;
            if *visited > self.budget.max_tuples {
                return Err(Error::budget(format!(
                    "submodule search visited {visited} nodes"
                )));
            }
            if visited.is_multiple_of(4096)
                && start.elapsed().as_millis() as u64 > self.budget.max_millis
            {
                return Err(Error::budget(format!(
                    "submodule search passed {}ms",
                    self.budget.max_millis
                )));
            }
            chosen[v] = i;
            if self.closed_at(v, chosen) && !self.rec(depth + 1, chosen, visited, start, on_complete)? {
                chosen[v] = usize::MAX;
                return Ok(false);
            }
            chosen[v] = usize::MAX;
        }
        Ok(true)
    }

    /// Check every arrow whose endpoints are both assigned and touch v.
    fn closed_at(&self, v: usize, chosen: &[usize]) -> bool {
        for (aid, a) in self.q.arrows().iter().enumerate() {
            if a.tail != v && a.head != v {
                continue;
            }
            if chosen[a.tail] == usize::MAX || chosen[a.head] == usize::MAX {
                continue;
            }
            let tail_basis = &self.options[a.tail][chosen[a.tail]];
            let head_basis = &self.options[a.head][chosen[a.head]];
            for r in 0..tail_basis.rows {
                let mut img = vec![];
                for i in 0..self.w.dim(a.head) {
                    let mut acc = self.w.matrix(aid).zero();
                    for c in 0..tail_basis.cols {
                        acc = acc.add(&self.w.matrix(aid)[(i, c)].mul(&tail_basis[(r, c)]));
                    }
                    img.push(acc);
                }
                if !in_row_space(head_basis, &img) {
                    return false;
                }
            }
        }
        true
    }
}

/// Exhaustively count γ-dimensional submodules of W (the F_p points of the
/// quiver Grassmannian Gr(γ, W)).
pub fn enumerate_submodules(
    q: &Quiver,
    w: &Representation<Fp>,
    gamma: &DimVec,
    field: FieldSpec,
    budget: &EnumerationBudget,
) -> Result<SubmoduleCount> {
    if gamma.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: q.vertex_count(),
            got: gamma.len(),
        });
    }
    if !gamma.is_nonnegative() || !gamma.leq(&w.dim_vec()) {
        return Ok(SubmoduleCount {
            count: 0,
            exists: false,
        });
    }
    let options: Vec<Vec<Matrix<Fp>>> = (0..q.vertex_count())
        .map(|x| subspaces(field, w.dim(x), gamma.get(x) as usize))
        .collect();
    let search = SubspaceSearch {
        q,
        w,
        order: search_order(q),
        options,
        budget,
    };
    let mut count = 0u64;
    search.run(&mut |_chosen| {
        count += 1;
        true
    })?;
    Ok(SubmoduleCount {
        count,
        exists: count > 0,
    })
}

/// Dimension vectors of all submodules of W, discovered in a single pass
/// over subspaces of every dimension.
pub fn submodule_dim_vectors(
    q: &Quiver,
    w: &Representation<Fp>,
    field: FieldSpec,
    budget: &EnumerationBudget,
) -> Result<std::collections::BTreeSet<DimVec>> {
    let options: Vec<Vec<Matrix<Fp>>> = (0..q.vertex_count())
        .map(|x| {
            (0..=w.dim(x))
                .flat_map(|k| subspaces(field, w.dim(x), k))
                .collect()
        })
        .collect();
    let search = SubspaceSearch {
        q,
        w,
        order: search_order(q),
        options,
        budget,
    };
    let mut dims = std::collections::BTreeSet::new();
    let opts = &search.options;
    let mut record = |chosen: &[usize]| -> bool {
        let dv = DimVec(
            chosen
                .iter()
                .enumerate()
                .map(|(v, &i)| opts[v][i].rows as i64)
                .collect(),
        );
        dims.insert(dv);
        true
    };
    search.run(&mut record)?;
    Ok(dims)
}

/// Oracle verdict with the evidence that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    /// Genericity over F_p is heuristic: absence of points in every sample
    /// supports emptiness but never proves it.
    ProbablyNo,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub verdict: Verdict,
    pub samples: usize,
    pub p: u64,
    pub seed_note: String,
}

/// Sample general symmetric W and look for a γ-dimensional submodule whose
/// induced maps pass the injective-dimension rank test (the primed quiver
/// Grassmannian).
pub fn grassmannian_nonempty_oracle<R: Rng>(
    spec: &FlagQuiverSpec,
    gamma: &DimVec,
    field: FieldSpec,
    samples: usize,
    budget: &EnumerationBudget,
    rng: &mut R,
) -> Result<OracleReport> {
    let mut verdict = Verdict::ProbablyNo;
    for _ in 0..samples {
        let w = random_symmetric_rep(spec, field, true, rng);
        if gamma_submodule_with_idim_le_1(spec, &w, gamma, field, budget)? {
            verdict = Verdict::Yes;
            break;
        }
    }
    Ok(OracleReport {
        verdict,
        samples,
        p: field.p,
        seed_note: "caller-provided RNG".to_string(),
    })
}

/// Does W admit a γ-dimensional submodule whose induced representation has
/// injective dimension at most 1 (all induced maps out of u surjective)?
pub fn gamma_submodule_with_idim_le_1(
    spec: &FlagQuiverSpec,
    w: &Representation<Fp>,
    gamma: &DimVec,
    field: FieldSpec,
    budget: &EnumerationBudget,
) -> Result<bool> {
    let q = spec.quiver();
    if !gamma.is_nonnegative() || !gamma.leq(&w.dim_vec()) {
        return Ok(false);
    }
    let options: Vec<Vec<Matrix<Fp>>> = (0..q.vertex_count())
        .map(|x| subspaces(field, w.dim(x), gamma.get(x) as usize))
        .collect();
    let search = SubspaceSearch {
        q,
        w,
        order: search_order(q),
        options,
        budget,
    };
    let mut found = false;
    let mut check_error = None;
    let opts = &search.options;
    search.run(&mut |chosen| match induced_idim_le_1(spec, w, opts, chosen) {
        Ok(true) => {
            found = true;
            false // stop searching
        }
        Ok(false) => true,
        Err(e) => {
            check_error = Some(e);
            false
        }
    })?;
    if let Some(e) = check_error {
        return Err(e);
    }
    Ok(found)
}

/// Rank test for the induced representation on a chosen subspace tuple:
/// every induced map U(u) → U(τ(x^j_n)) must be surjective.
fn induced_idim_le_1(
    spec: &FlagQuiverSpec,
    w: &Representation<Fp>,
    per_vertex: &[Vec<Matrix<Fp>>],
    chosen: &[usize],
) -> Result<bool> {
    let q = spec.quiver();
    for j in 1..=spec.r {
        let aid = spec.tau_arm_arrow(j, spec.n);
        let a = q.arrow(aid);
        let tail_basis = &per_vertex[a.tail][chosen[a.tail]];
        let head_basis = &per_vertex[a.head][chosen[a.head]];
        // image of U(u) inside U(τx_n), in head-basis coordinates
        let mut coords = Matrix::zeros(tail_basis.rows, head_basis.rows, w.matrix(aid).zero());
        for r in 0..tail_basis.rows {
            let mut img = vec![];
            for i in 0..w.dim(a.head) {
                let mut acc = w.matrix(aid).zero();
                for c in 0..tail_basis.cols {
                    acc = acc.add(&w.matrix(aid)[(i, c)].mul(&tail_basis[(r, c)]));
                }
                img.push(acc);
            }
            let solved = solve_in_row_space(head_basis, &img)
                .ok_or_else(|| Error::domain("induced image escaped the submodule"))?;
            for (c, v) in solved.into_iter().enumerate() {
                coords[(r, c)] = v;
            }
        }
        if coords.rank() != head_basis.rows {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Express a vector in the row space of an RREF basis; None if outside.
fn solve_in_row_space(basis: &Matrix<Fp>, vec: &[Fp]) -> Option<Vec<Fp>> {
    let mut v: Vec<Fp> = vec.to_vec();
    let mut coeffs = vec![];
    for r in 0..basis.rows {
        let pivot = (0..basis.cols).find(|&c| !basis[(r, c)].is_zero());
        let Some(pc) = pivot else {
            coeffs.push(Fp::new(0, 3).zero_like());
            continue;
        };
        let f = v[pc].mul(&basis[(r, pc)].inv());
        coeffs.push(f);
        for c in 0..basis.cols {
            v[c] = v[c].sub(&f.mul(&basis[(r, c)]));
        }
    }
    if v.iter().all(|x| x.is_zero()) {
        Some(coeffs)
    } else {
        None
    }
}

/// Sample homomorphisms V → W for V drawn from `sampler` and report the
/// componentwise maximum of the per-vertex image dimensions.
pub fn generic_rank_oracle<F, R>(
    q: &Quiver,
    rels: &RelationSet,
    mut sampler: impl FnMut(&mut R) -> Representation<F>,
    w: &Representation<F>,
    samples: usize,
    rng: &mut R,
) -> Result<DimVec>
where
    F: Field,
    R: Rng,
{
    let mut best = DimVec::zeros(q.vertex_count());
    for _ in 0..samples {
        let v = sampler(rng);
        let basis = hom_space(q, rels, &v, w)?;
        if basis.is_empty() {
            continue;
        }
        // a random combination of basis homomorphisms
        let coeffs: Vec<i64> = (0..basis.len())
            .map(|_| rng.gen_range(0..1024) as i64)
            .collect();
        for x in 0..q.vertex_count() {
            let mut phi = Matrix::zeros(w.dim(x), v.dim(x), v.zero_elem());
            for (k, hom) in basis.iter().enumerate() {
                phi = phi.add(&hom[x].scale(&v.zero_elem().from_i64_like(coeffs[k])));
            }
            best.0[x] = best.0[x].max(phi.rank() as i64);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagq::{build_flag_quiver, idim_le_1, pdim_le_1};
    use crate::quiver::{line_quiver_with_relation, PathSpaces};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::new(2).is_err());
        assert!(FieldSpec::new(9).is_err());
        assert!(FieldSpec::new(3).is_ok());
        assert!(FieldSpec::new(32003).is_ok());
    }

    #[test]
    fn hyperbolic_gram_shapes() {
        let f = FieldSpec::new(7).unwrap();
        let j = hyperbolic_gram(2, 1, FlagSign::Orthogonal, f);
        // full antidiagonal of ones, symmetric
        assert_eq!(j, j.transpose());
        for i in 0..5 {
            assert_eq!(j[(i, 4 - i)].val, 1);
        }
        let js = hyperbolic_gram(2, 0, FlagSign::Symplectic, f);
        assert_eq!(js.transpose(), js.scale(&Fp::new(-1, 7)));
    }

    #[test]
    fn general_reps_satisfy_rank_criteria() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let field = FieldSpec::sampling_default();
        for (r, n, sign, delta) in [
            (1, 1, FlagSign::Orthogonal, 1),
            (2, 2, FlagSign::Orthogonal, 0),
            (2, 2, FlagSign::Symplectic, 0),
            (3, 2, FlagSign::Orthogonal, 1),
        ] {
            let spec = build_flag_quiver(r, n, sign, delta).unwrap();
            for _ in 0..5 {
                let w = random_symmetric_rep(&spec, field, true, &mut rng);
                assert!(w.satisfies_relations(spec.quiver(), &spec.relations));
                assert!(pdim_le_1(&spec, &w).unwrap());
                assert!(idim_le_1(&spec, &w).unwrap());
            }
            // non-general samples still satisfy the relations
            for _ in 0..5 {
                let w = random_symmetric_rep(&spec, field, false, &mut rng);
                assert!(w.satisfies_relations(spec.quiver(), &spec.relations));
            }
        }
    }

    #[test]
    fn line_isotropic_automatic() {
        // n=1, r=1, symplectic: any nonzero arm map into a 2-dim symplectic
        // space has isotropic image (lines are isotropic)
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let spec = build_flag_quiver(1, 1, FlagSign::Symplectic, 0).unwrap();
        let field = FieldSpec::new(5).unwrap();
        for _ in 0..10 {
            let w = random_symmetric_rep(&spec, field, true, &mut rng);
            let m = w.matrix(spec.arm_arrow(1, 1));
            assert_eq!(m.rank(), 1);
        }
    }

    #[test]
    fn subspace_counts() {
        let f = FieldSpec::new(3).unwrap();
        // Gaussian binomial (2 choose 1)_3 = 4
        assert_eq!(subspaces(f, 2, 1).len(), 4);
        // (3 choose 1)_3 = 13, (3 choose 2)_3 = 13
        assert_eq!(subspaces(f, 3, 1).len(), 13);
        assert_eq!(subspaces(f, 3, 2).len(), 13);
        assert_eq!(subspaces(f, 3, 0).len(), 1);
        assert_eq!(subspaces(f, 3, 3).len(), 1);
    }

    #[test]
    fn trivial_submodule_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let spec = build_flag_quiver(1, 1, FlagSign::Orthogonal, 1).unwrap();
        let field = FieldSpec::new(3).unwrap();
        let w = random_symmetric_rep(&spec, field, true, &mut rng);
        let budget = EnumerationBudget::default();
        let zero = DimVec::zeros(3);
        let out = enumerate_submodules(spec.quiver(), &w, &zero, field, &budget).unwrap();
        assert_eq!((out.count, out.exists), (1, true));
        let full = w.dim_vec();
        let out = enumerate_submodules(spec.quiver(), &w, &full, field, &budget).unwrap();
        assert_eq!((out.count, out.exists), (1, true));
    }

    #[test]
    fn radical_submodule_of_projective() {
        // 1→2→3 with ba=0, W = P_1 over F_3, γ = (0,1,1)... P_1 has spaces
        // (K, K, 0), so γ=(0,1,1) cannot embed; the honest radical is (0,1,0)
        let (q, rels) = line_quiver_with_relation();
        let ps = PathSpaces::new(&q, &rels);
        let field = FieldSpec::new(3).unwrap();
        let p1: Representation<Fp> = Representation::projective(&ps, 0, field.zero());
        assert_eq!(p1.dims(), &[1, 1, 0]);
        let budget = EnumerationBudget::default();
        let rad = DimVec(vec![0, 1, 0]);
        let out = enumerate_submodules(&q, &p1, &rad, field, &budget).unwrap();
        assert!(out.exists);
        assert_eq!(out.count, 1);
        // over-tall gamma yields nothing
        let out =
            enumerate_submodules(&q, &p1, &DimVec(vec![0, 1, 1]), field, &budget).unwrap();
        assert!(!out.exists);
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let spec = build_flag_quiver(2, 2, FlagSign::Orthogonal, 1).unwrap();
        let field = FieldSpec::new(3).unwrap();
        let w = random_symmetric_rep(&spec, field, true, &mut rng);
        let tight = EnumerationBudget {
            max_tuples: 3,
            max_millis: 60_000,
        };
        let gamma = DimVec(vec![1; spec.quiver().vertex_count()]);
        let err = enumerate_submodules(spec.quiver(), &w, &gamma, field, &tight);
        assert!(matches!(err, Err(Error::Budget(_))));
    }

    #[test]
    fn count_is_isomorphism_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let spec = build_flag_quiver(1, 1, FlagSign::Orthogonal, 0).unwrap();
        let field = FieldSpec::new(3).unwrap();
        let q = spec.quiver();
        let w = random_symmetric_rep(&spec, field, true, &mut rng);
        let gamma = DimVec(vec![1, 2, 1]);
        let budget = EnumerationBudget::default();
        let base = enumerate_submodules(q, &w, &gamma, field, &budget)
            .unwrap()
            .count;
        // conjugate by random invertible base changes
        for _ in 0..3 {
            let gs: Vec<Matrix<Fp>> = (0..q.vertex_count())
                .map(|x| loop {
                    let g = random_matrix(w.dim(x), w.dim(x), field, &mut rng);
                    if let Some(_inv) = g.inverse() {
                        return g;
                    }
                })
                .collect();
            let mut conj = w.clone();
            for (aid, a) in q.arrows().iter().enumerate() {
                let m = gs[a.head]
                    .mul(w.matrix(aid))
                    .mul(&gs[a.tail].inverse().unwrap());
                conj.set_matrix(aid, m);
            }
            assert!(conj.satisfies_relations(q, &spec.relations));
            let c = enumerate_submodules(q, &conj, &gamma, field, &budget)
                .unwrap()
                .count;
            assert_eq!(c, base);
        }
    }

    #[test]
    fn nonempty_oracle_small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let spec = build_flag_quiver(1, 1, FlagSign::Orthogonal, 1).unwrap();
        let field = FieldSpec::new(3).unwrap();
        let budget = EnumerationBudget::default();
        // γ = 0 is always a submodule with idim 0
        let zero = DimVec::zeros(3);
        let rep = grassmannian_nonempty_oracle(&spec, &zero, field, 3, &budget, &mut rng).unwrap();
        assert_eq!(rep.verdict, Verdict::Yes);
        // γ with γ(u) ≥ γ(x_n) + γ(τx_n) per the construction: (1, 2, 1)
        let gamma = DimVec(vec![1, 2, 1]);
        let rep =
            grassmannian_nonempty_oracle(&spec, &gamma, field, 5, &budget, &mut rng).unwrap();
        assert_eq!(rep.verdict, Verdict::Yes);
        // arm monotonicity violated: γ(x_1) = 1 but γ(u) = 0
        let bad = DimVec(vec![1, 0, 0]);
        let rep = grassmannian_nonempty_oracle(&spec, &bad, field, 5, &budget, &mut rng).unwrap();
        assert_eq!(rep.verdict, Verdict::ProbablyNo);
    }

    #[test]
    fn generic_rank_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let spec = build_flag_quiver(1, 1, FlagSign::Orthogonal, 1).unwrap();
        let field = FieldSpec::sampling_default();
        let w = random_symmetric_rep(&spec, field, true, &mut rng);
        let w2 = w.clone();
        let rank = generic_rank_oracle(
            spec.quiver(),
            &spec.relations,
            move |_| w2.clone(),
            &w,
            4,
            &mut rng,
        )
        .unwrap();
        // hom contains the identity, so the generic rank is the full dims
        assert_eq!(rank, w.dim_vec());
    }

    #[test]
    fn hom_zero_gives_zero_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let (q, rels) = line_quiver_with_relation();
        let field = FieldSpec::new(5).unwrap();
        let s1: Representation<Fp> = Representation::simple(&q, 0, field.zero());
        let s2: Representation<Fp> = Representation::simple(&q, 1, field.zero());
        // hom(S1, S2) = 0
        let s1c = s1.clone();
        let rank =
            generic_rank_oracle(&q, &rels, move |_| s1c.clone(), &s2, 3, &mut rng).unwrap();
        assert_eq!(rank, DimVec::zeros(3));
        let _ = field;
    }

    #[test]
    fn random_flag_rep_with_arbitrary_dims() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let spec = build_flag_quiver(2, 2, FlagSign::Orthogonal, 1).unwrap();
        let field = FieldSpec::sampling_default();
        let nv = spec.quiver().vertex_count();
        for _ in 0..10 {
            let dims: Vec<usize> = (0..nv).map(|_| rng.gen_range(0..4)).collect();
            let rep = random_flag_rep(&spec, &dims, field, &mut rng).unwrap();
            assert!(rep.satisfies_relations(spec.quiver(), &spec.relations));
        }
    }
}
