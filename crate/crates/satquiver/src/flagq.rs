//! Orthogonal and symplectic flag quivers, the dictionary between dominant
//! weights and quiver data (σ, σ°, α), projective/injective dimension rank
//! criteria, quiver-Grassmannian dimension formulas and the Horn-type
//! inequality evaluation.

use crate::error::{Error, Result};
use crate::lietypes::{Family, GroupType, Weight};
use crate::linalg::Field;
use crate::quiver::{
    canonical_resolution_counts, euler_form_i, sigma_weight, DimVec, Path, Quiver, RelationSet,
    Representation, SymmetricQuiver, VertexId,
};
use std::collections::HashMap;

/// + builds the orthogonal flag quiver, − the symplectic one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FlagSign {
    Orthogonal,
    Symplectic,
}

impl FlagSign {
    pub fn as_char(self) -> char {
        match self {
            FlagSign::Orthogonal => '+',
            FlagSign::Symplectic => '-',
        }
    }
}

/// The symmetric flag quiver with r arms of length n glued into a central
/// formed vertex u, with the isotropy relations τ(aₙ)aₙ = 0, together with
/// its dimension vector β^δ.
#[derive(Clone, Debug)]
pub struct FlagQuiverSpec {
    pub r: usize,
    pub n: usize,
    pub sign: FlagSign,
    pub delta: i64,
    pub sym: SymmetricQuiver,
    pub relations: RelationSet,
    pub beta_delta: DimVec,
    pub center: VertexId,
    arm_vertex: Vec<Vec<VertexId>>,
    tau_arm_vertex: Vec<Vec<VertexId>>,
    arm_arrow: Vec<Vec<usize>>,
}

impl FlagQuiverSpec {
    pub fn quiver(&self) -> &Quiver {
        &self.sym.quiver
    }

    /// x^j_i (1-based in both indices).
    pub fn arm_vertex(&self, j: usize, i: usize) -> VertexId {
        self.arm_vertex[j - 1][i - 1]
    }

    /// τ(x^j_i).
    pub fn tau_arm_vertex(&self, j: usize, i: usize) -> VertexId {
        self.tau_arm_vertex[j - 1][i - 1]
    }

    /// a^j_i: x^j_i → x^j_{i+1} with x^j_{n+1} = u.
    pub fn arm_arrow(&self, j: usize, i: usize) -> usize {
        self.arm_arrow[j - 1][i - 1]
    }

    /// τ(a^j_i).
    pub fn tau_arm_arrow(&self, j: usize, i: usize) -> usize {
        self.sym.tau_a(self.arm_arrow(j, i))
    }

    /// The classical group whose invariants this flag quiver computes.
    pub fn group(&self) -> GroupType {
        match (self.sign, self.delta) {
            (FlagSign::Orthogonal, 1) => GroupType::b(self.n),
            (FlagSign::Orthogonal, _) => GroupType::d(self.n),
            (FlagSign::Symplectic, _) => GroupType::c(self.n),
        }
    }
}

/// Build Q^±_{r,n} with its relations and β^δ: 2rn+1 vertices, 2rn arrows,
/// r relations.
pub fn build_flag_quiver(r: usize, n: usize, sign: FlagSign, delta: i64) -> Result<FlagQuiverSpec> {
    if r < 1 || n < 1 {
        return Err(Error::domain("flag quiver needs r >= 1 and n >= 1"));
    }
    if !(0..=1).contains(&delta) {
        return Err(Error::domain("delta must be 0 or 1"));
    }
    if sign == FlagSign::Symplectic && delta != 0 {
        return Err(Error::domain("symplectic flag quivers have delta = 0"));
    }
    let mut q = Quiver::empty();
    let mut arm_vertex = vec![vec![]; r];
    let mut tau_arm_vertex = vec![vec![]; r];
    for (j, arm) in arm_vertex.iter_mut().enumerate() {
        for i in 1..=n {
            arm.push(q.add_vertex(&format!("x{}_{i}", j + 1))?);
        }
    }
    let center = q.add_vertex("u")?;
    for (j, arm) in tau_arm_vertex.iter_mut().enumerate() {
        for i in 1..=n {
            arm.push(q.add_vertex(&format!("tx{}_{i}", j + 1))?);
        }
    }
    let mut arm_arrow = vec![vec![]; r];
    let mut tau_arrow_of = HashMap::new();
    for j in 1..=r {
        for i in 1..=n {
            let head = if i == n {
                "u".to_string()
            } else {
                format!("x{j}_{}", i + 1)
            };
            let a = q.add_arrow(&format!("a{j}_{i}"), &format!("x{j}_{i}"), &head)?;
            arm_arrow[j - 1].push(a);
            let tail = if i == n {
                "u".to_string()
            } else {
                format!("tx{j}_{}", i + 1)
            };
            let ta = q.add_arrow(&format!("ta{j}_{i}"), &tail, &format!("tx{j}_{i}"))?;
            tau_arrow_of.insert(a, ta);
        }
    }
    q.check_acyclic()?;

    let nv = q.vertex_count();
    let mut tau_v: Vec<usize> = (0..nv).collect();
    for j in 0..r {
        for i in 0..n {
            tau_v[arm_vertex[j][i]] = tau_arm_vertex[j][i];
            tau_v[tau_arm_vertex[j][i]] = arm_vertex[j][i];
        }
    }
    let mut tau_a: Vec<usize> = (0..q.arrow_count()).collect();
    for (&a, &ta) in &tau_arrow_of {
        tau_a[a] = ta;
        tau_a[ta] = a;
    }
    let center_sign = if sign == FlagSign::Orthogonal { 1i8 } else { -1 };
    let sym = SymmetricQuiver::new(
        q,
        tau_v,
        tau_a,
        HashMap::from([(center, center_sign)]),
        HashMap::new(),
    )?;

    let mut rel_terms = vec![];
    for j in 1..=r {
        let a_n = arm_arrow[j - 1][n - 1];
        let ta_n = tau_arrow_of[&a_n];
        rel_terms.push(vec![(1i64, Path(vec![a_n, ta_n]))]);
    }
    let relations = RelationSet::new(&sym.quiver, rel_terms)?;
    debug_assert!(sym.relations_tau_invariant(&relations));

    let mut beta = vec![0i64; nv];
    for j in 0..r {
        for i in 0..n {
            beta[arm_vertex[j][i]] = (i + 1) as i64;
            beta[tau_arm_vertex[j][i]] = (i + 1) as i64;
        }
    }
    beta[center] = 2 * n as i64 + delta;

    Ok(FlagQuiverSpec {
        r,
        n,
        sign,
        delta,
        sym,
        relations,
        beta_delta: DimVec(beta),
        center,
        arm_vertex,
        tau_arm_vertex,
        arm_arrow,
    })
}

/// The projective resolution of the simple at `vertex`, as an ordered list
/// of projective multiplicity vectors [term₀, term₁, ...] with trailing
/// zero terms dropped.
pub fn simple_resolutions(spec: &FlagQuiverSpec, vertex: VertexId) -> Result<Vec<DimVec>> {
    if vertex >= spec.quiver().vertex_count() {
        return Err(Error::domain("unknown vertex"));
    }
    let alpha = DimVec::unit(spec.quiver().vertex_count(), vertex);
    let [t0, t1, t2] = canonical_resolution_counts(spec.quiver(), &spec.relations, &alpha)?;
    let mut out = vec![t0];
    if t1.0.iter().any(|&c| c != 0) {
        out.push(t1);
    }
    if t2.0.iter().any(|&c| c != 0) {
        out.push(t2);
    }
    Ok(out)
}

/// Whether a determinantal lift σ° = σ/2 exists; when it does not, the
/// weight space is spanned by Pfaffian semi-invariants only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lift {
    /// σ°(x^j_i) per arm; τ-side values are the negatives, σ°(u) stays open.
    Determinantal(Vec<Vec<i64>>),
    NoDeterminantal,
}

/// Solving ⟨α, ε_x⟩_I = σ°(x) together with ⟨α, β^δ⟩_I = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaSolution {
    Solved { alpha: DimVec, alpha_u: i64 },
    Infeasible { reason: String },
}

/// One dictionary record: input weights, the symmetric weight σ read off
/// their differences, type-D component signs, and the lift/α stages once
/// computed.
#[derive(Clone, Debug)]
pub struct WeightDictionaryEntry {
    pub group: GroupType,
    pub weights: Vec<Weight>,
    /// σ(x^j_i) = λ^j_i − λ^j_{i+1}, one inner vector per arm.
    pub sigma: Vec<Vec<i64>>,
    /// Per-arm sign of λ^j_n (only meaningful in type D; +1 otherwise).
    pub arm_signs: Vec<i64>,
    pub lift: Option<Lift>,
    pub alpha: Option<AlphaSolution>,
}

/// Translate dominant weights λ¹..λʳ into the symmetric weight σ via
/// σ(x^j_i) = λ^j_i − λ^j_{i+1} (with λ^j_{n+1} = 0 and |λ^j_n| in type D).
pub fn weights_to_sigma(
    g: &GroupType,
    weights: &[Weight],
    spec: &FlagQuiverSpec,
) -> Result<WeightDictionaryEntry> {
    let expected = spec.group();
    if g.family != expected.family || g.rank != expected.rank {
        return Err(Error::domain(format!(
            "group {} does not match flag quiver (expected {})",
            g.tag(),
            expected.tag()
        )));
    }
    if weights.len() != spec.r {
        return Err(Error::DimensionMismatch {
            expected: spec.r,
            got: weights.len(),
        });
    }
    let mut sigma = vec![];
    let mut arm_signs = vec![];
    for lam in weights {
        if !g.is_dominant(lam)? || !lam.is_integral() {
            return Err(Error::domain(format!(
                "weight {lam} is not an integral dominant weight of {}",
                g.tag()
            )));
        }
        let coords: Vec<i64> = lam.twice().iter().map(|&c| c / 2).collect();
        let last = coords[spec.n - 1];
        arm_signs.push(if last < 0 { -1 } else { 1 });
        let mut abs = coords.clone();
        if g.family == Family::D {
            abs[spec.n - 1] = abs[spec.n - 1].abs();
        }
        let mut arm = vec![];
        for i in 0..spec.n {
            let next = if i + 1 < spec.n { abs[i + 1] } else { 0 };
            arm.push(abs[i] - next);
        }
        sigma.push(arm);
    }
    Ok(WeightDictionaryEntry {
        group: *g,
        weights: weights.to_vec(),
        sigma,
        arm_signs,
        lift: None,
        alpha: None,
    })
}

/// Halve σ into the non-symmetric lift σ° when every value is even;
/// otherwise mark the entry NoDeterminantal.
pub fn lift_weight(mut entry: WeightDictionaryEntry) -> WeightDictionaryEntry {
    let all_even = entry
        .sigma
        .iter()
        .flatten()
        .all(|&v| v % 2 == 0);
    entry.lift = Some(if all_even {
        Lift::Determinantal(
            entry
                .sigma
                .iter()
                .map(|arm| arm.iter().map(|&v| v / 2).collect())
                .collect(),
        )
    } else {
        Lift::NoDeterminantal
    });
    entry
}

/// Solve ⟨α, ε_x⟩_I = σ°(x) vertex by vertex, then pin α(u) from
/// ⟨α, β^δ⟩_I = 0 (whose α(u)-coefficient is 2n+δ). Infeasible α is a
/// value, not an error.
pub fn solve_alpha(
    entry: &WeightDictionaryEntry,
    spec: &FlagQuiverSpec,
) -> Result<AlphaSolution> {
    let Some(Lift::Determinantal(sigma0)) = &entry.lift else {
        return Err(Error::domain(
            "solve_alpha needs a determinantal lift; call lift_weight first",
        ));
    };
    let nv = spec.quiver().vertex_count();
    // α entries are affine in a = α(u): value = base + coef·a
    let mut base = vec![0i64; nv];
    let mut coef = vec![0i64; nv];
    coef[spec.center] = 1;
    for j in 1..=spec.r {
        let arm = &sigma0[j - 1];
        let mut acc = 0i64;
        for i in 1..=spec.n {
            acc += arm[i - 1];
            base[spec.arm_vertex(j, i)] = acc;
        }
        // τ-side, downward from τ(x^j_n): α(τ(x^j_n)) = a − α(x^j_n) + σ°(τ(x^j_n))
        let mut tau_acc = -base[spec.arm_vertex(j, spec.n)] - arm[spec.n - 1];
        base[spec.tau_arm_vertex(j, spec.n)] = tau_acc;
        coef[spec.tau_arm_vertex(j, spec.n)] = 1;
        for i in (1..spec.n).rev() {
            tau_acc -= arm[i - 1];
            base[spec.tau_arm_vertex(j, i)] = tau_acc;
            coef[spec.tau_arm_vertex(j, i)] = 1;
        }
    }
    let eval = |a: i64| -> DimVec {
        DimVec(
            base.iter()
                .zip(&coef)
                .map(|(b, c)| b + c * a)
                .collect(),
        )
    };
    let f0 = euler_form_i(
        spec.quiver(),
        &spec.relations,
        &eval(0),
        &spec.beta_delta,
    )?;
    let f1 = euler_form_i(
        spec.quiver(),
        &spec.relations,
        &eval(1),
        &spec.beta_delta,
    )?;
    let slope = f1 - f0;
    debug_assert_eq!(slope, 2 * spec.n as i64 + spec.delta);
    if f0 % slope != 0 {
        return Ok(AlphaSolution::Infeasible {
            reason: format!("alpha(u) = {}/{} is not an integer", -f0, slope),
        });
    }
    let a = -f0 / slope;
    let alpha = eval(a);
    if !alpha.is_nonnegative() {
        return Ok(AlphaSolution::Infeasible {
            reason: format!("alpha(u) = {a} forces a negative entry"),
        });
    }
    Ok(AlphaSolution::Solved { alpha, alpha_u: a })
}

fn check_gamma(spec: &FlagQuiverSpec, gamma: &DimVec) -> Result<()> {
    if gamma.len() != spec.quiver().vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: spec.quiver().vertex_count(),
            got: gamma.len(),
        });
    }
    if !gamma.is_nonnegative() || !gamma.leq(&spec.beta_delta) {
        return Err(Error::domain("gamma must satisfy 0 <= gamma <= beta"));
    }
    for j in 1..=spec.r {
        let xn = spec.arm_vertex(j, spec.n);
        let txn = spec.tau_arm_vertex(j, spec.n);
        if gamma.get(spec.center) < gamma.get(xn) + gamma.get(txn) {
            return Err(Error::domain(
                "gamma(u) must dominate gamma(x_n) + gamma(tau x_n)",
            ));
        }
    }
    Ok(())
}

/// Dimension of the variety of γ-dimensional submodules (with bounded
/// injective dimension) of a general symmetric W: ⟨γ, β^δ − γ⟩_I.
pub fn grassmannian_dim(spec: &FlagQuiverSpec, gamma: &DimVec) -> Result<i64> {
    check_gamma(spec, gamma)?;
    euler_form_i(
        spec.quiver(),
        &spec.relations,
        gamma,
        &spec.beta_delta.sub(gamma),
    )
}

fn check_one_arm(n: i64, delta: i64, g1: i64, g2: i64, g3: i64) -> Result<()> {
    if !(0..=1).contains(&delta) {
        return Err(Error::domain("delta must be 0 or 1"));
    }
    if g1 < 0 || g3 < 0 || g1 > n || g3 > n || g2 < g1 + g3 || g2 > 2 * n + delta {
        return Err(Error::domain(
            "need 0 <= γ1,γ3 <= n and γ1+γ3 <= γ2 <= 2n+δ",
        ));
    }
    Ok(())
}

/// ⟨γ, β−γ⟩_I on the three-vertex quiver K^n → K^{2n+δ} → K^n with the
/// composite relation, at γ = (γ1, γ2, γ3).
pub fn one_arm_grassmannian_dim(n: i64, delta: i64, g1: i64, g2: i64, g3: i64) -> Result<i64> {
    check_one_arm(n, delta, g1, g2, g3)?;
    let spec = build_flag_quiver(1, 1, FlagSign::Orthogonal, delta)?;
    let gamma = DimVec(vec![g1, g2, g3]);
    let beta = DimVec(vec![n, 2 * n + delta, n]);
    euler_form_i(
        spec.quiver(),
        &spec.relations,
        &gamma,
        &beta.sub(&gamma),
    )
}

/// The chamber-by-chamber count from the proof:
/// γ1(n−γ1) + d(n+δ+γ3−γ2) + γ3(2n+δ−γ2) with d = γ2−γ1−γ3.
pub fn explicit_grassmannian_count(n: i64, delta: i64, g1: i64, g2: i64, g3: i64) -> Result<i64> {
    check_one_arm(n, delta, g1, g2, g3)?;
    let d = g2 - g1 - g3;
    Ok(g1 * (n - g1) + d * (n + delta + g3 - g2) + g3 * (2 * n + delta - g2))
}

/// pdim V ≤ 1 iff each arm map V(x^j_n) → V(u) is injective.
pub fn pdim_le_1<F: Field>(spec: &FlagQuiverSpec, v: &Representation<F>) -> Result<bool> {
    if !v.satisfies_relations(spec.quiver(), &spec.relations) {
        return Err(Error::domain("representation violates the relations"));
    }
    Ok((1..=spec.r).all(|j| {
        let m = v.matrix(spec.arm_arrow(j, spec.n));
        m.rank() == m.cols
    }))
}

/// idim V ≤ 1 iff each map V(u) → V(τ(x^j_n)) is surjective.
pub fn idim_le_1<F: Field>(spec: &FlagQuiverSpec, v: &Representation<F>) -> Result<bool> {
    if !v.satisfies_relations(spec.quiver(), &spec.relations) {
        return Err(Error::domain("representation violates the relations"));
    }
    Ok((1..=spec.r).all(|j| {
        let m = v.matrix(spec.tau_arm_arrow(j, spec.n));
        m.rank() == m.rows
    }))
}

/// HEURISTIC: dimension vectors γ passing the necessary submodule
/// conditions for a general symmetric W (injective arms into u, the
/// τ(x^j_n) bound from the surjections out of u, and γ ≤ β^δ). Equivalence
/// uses must filter through the finite-field oracle first.
pub fn candidate_submodule_dims(spec: &FlagQuiverSpec) -> Vec<DimVec> {
    let nv = spec.quiver().vertex_count();
    let beta = &spec.beta_delta;
    let mut out = vec![];
    let mut gamma = vec![0i64; nv];
    // enumerate u, then arm chains, then τ-sides
    let n = spec.n;
    let ndelta = n as i64 + spec.delta;
    for u_val in 0..=beta.get(spec.center) {
        gamma[spec.center] = u_val;
        let mut arms: Vec<Vec<Vec<i64>>> = vec![];
        for j in 1..=spec.r {
            let mut arm_opts = vec![];
            // nondecreasing chain gamma(x^j_1) <= ... <= gamma(x^j_n) <= u_val,
            // gamma(x^j_i) <= i
            let mut chain = vec![0i64; n];
            enumerate_chains(&mut chain, 0, 0, u_val, &mut |c| {
                arm_opts.push(c.to_vec());
            });
            // τ-side: free up to the caps, except γ(τ(x^j_n)) >= u_val - (n+δ)
            let mut tau_opts = vec![];
            let mut tau_vals = vec![0i64; n];
            enumerate_boxes(&mut tau_vals, 0, u_val, ndelta, &mut |c| {
                tau_opts.push(c.to_vec());
            });
            let mut opts = vec![];
            for a in &arm_opts {
                for t in &tau_opts {
                    let mut both = a.clone();
                    both.extend_from_slice(t);
                    opts.push(both);
                }
            }
            let _ = j;
            arms.push(opts);
        }
        // cartesian product over arms
        let mut idx = vec![0usize; spec.r];
        loop {
            for j in 1..=spec.r {
                let choice = &arms[j - 1][idx[j - 1]];
                for i in 1..=n {
                    gamma[spec.arm_vertex(j, i)] = choice[i - 1];
                    gamma[spec.tau_arm_vertex(j, i)] = choice[n + i - 1];
                }
            }
            out.push(DimVec(gamma.clone()));
            // advance
            let mut k = 0;
            loop {
                if k == spec.r {
                    break;
                }
                idx[k] += 1;
                if idx[k] < arms[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == spec.r {
                break;
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn enumerate_chains(
    chain: &mut Vec<i64>,
    idx: usize,
    min: i64,
    u_val: i64,
    f: &mut impl FnMut(&[i64]),
) {
    let n = chain.len();
    if idx == n {
        if chain[n - 1] <= u_val {
            f(chain);
        }
        return;
    }
    let cap = (idx as i64 + 1).min(u_val);
    for v in min..=cap {
        chain[idx] = v;
        enumerate_chains(chain, idx + 1, v, u_val, f);
    }
}

fn enumerate_boxes(
    vals: &mut Vec<i64>,
    idx: usize,
    u_val: i64,
    ndelta: i64,
    f: &mut impl FnMut(&[i64]),
) {
    let n = vals.len();
    if idx == n {
        // surjection bound: γ(τ(x_n)) >= γ(u) − (n+δ)
        if vals[n - 1] >= u_val - ndelta {
            f(vals);
        }
        return;
    }
    for v in 0..=(idx as i64 + 1) {
        vals[idx] = v;
        enumerate_boxes(vals, idx + 1, u_val, ndelta, f);
    }
}

/// Quotient dimension vectors β′ = β^δ − γ over the heuristic submodule set.
pub fn candidate_quotient_dims(spec: &FlagQuiverSpec) -> Vec<DimVec> {
    let mut out: Vec<DimVec> = candidate_submodule_dims(spec)
        .into_iter()
        .map(|g| spec.beta_delta.sub(&g))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Horn-type check: ⟨α, β′⟩_I ≥ 0 for every candidate quotient dimension.
pub fn horn_check(spec: &FlagQuiverSpec, alpha: &DimVec, candidates: &[DimVec]) -> Result<bool> {
    for bp in candidates {
        if euler_form_i(spec.quiver(), &spec.relations, alpha, bp)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// max(0, max_{β′} −⟨α, β′⟩_I): the generic ext¹ estimate over the
/// candidate set.
pub fn generic_ext1_estimate(
    spec: &FlagQuiverSpec,
    alpha: &DimVec,
    candidates: &[DimVec],
) -> Result<i64> {
    let mut worst = 0i64;
    for bp in candidates {
        worst = worst.max(-euler_form_i(spec.quiver(), &spec.relations, alpha, bp)?);
    }
    Ok(worst)
}

/// −⟨α−γ, β^δ−γ⟩_I: the generic ext¹ dimension given the generic rank γ of
/// a homomorphism into a general W.
pub fn ext1_from_generic_rank(
    spec: &FlagQuiverSpec,
    alpha: &DimVec,
    gamma: &DimVec,
) -> Result<i64> {
    if !gamma.leq(alpha) || !gamma.leq(&spec.beta_delta) {
        return Err(Error::domain("need gamma <= alpha and gamma <= beta"));
    }
    Ok(-euler_form_i(
        spec.quiver(),
        &spec.relations,
        &alpha.sub(gamma),
        &spec.beta_delta.sub(gamma),
    )?)
}

/// σ° read back from a solved α: ⟨α, ε_x⟩_I on every vertex.
pub fn sigma_of_alpha(spec: &FlagQuiverSpec, alpha: &DimVec) -> Result<DimVec> {
    sigma_weight(spec.quiver(), &spec.relations, alpha)
}
