//! Quivers, symmetric quivers, relations, Euler forms, canonical
//! resolutions, exact hom/ext computation and the extension-quiver
//! construction.

mod paths;
mod rep;
mod textfmt;

pub use paths::{gldim_le_2_check, PathSpaces};
pub use rep::{ext_dims, hom_space, ExtTriple, Representation};
pub use textfmt::{parse_quiver_file, parse_representation_file, render_quiver_file, ParsedRep};

use crate::error::{Error, Result};
use std::collections::HashMap;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub tail: VertexId,
    pub head: VertexId,
}

/// A finite quiver without directed cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl Quiver {
    pub fn empty() -> Quiver {
        Quiver {
            vertex_names: vec![],
            arrows: vec![],
            vertex_index: HashMap::new(),
            arrow_index: HashMap::new(),
        }
    }

    pub fn build(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let mut q = Quiver::empty();
        for v in vertices {
            q.add_vertex(v)?;
        }
        for (name, tail, head) in arrows {
            q.add_arrow(name, tail, head)?;
        }
        q.check_acyclic()?;
        Ok(q)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.vertex_index.contains_key(name) {
            return Err(Error::domain(format!("duplicate vertex '{name}'")));
        }
        let id = self.vertex_names.len();
        self.vertex_names.push(name.to_string());
        self.vertex_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, tail: &str, head: &str) -> Result<ArrowId> {
        if self.arrow_index.contains_key(name) {
            return Err(Error::domain(format!("duplicate arrow '{name}'")));
        }
        let tail = self.vertex_id(tail)?;
        let head = self.vertex_id(head)?;
        let id = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.to_string(),
            tail,
            head,
        });
        self.arrow_index.insert(self.arrows[id].name.clone(), id);
        Ok(id)
    }

    pub fn check_acyclic(&self) -> Result<()> {
        // Kahn's algorithm
        let n = self.vertex_names.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.head] += 1;
        }
        let mut queue: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.tail == v {
                    indeg[a.head] -= 1;
                    if indeg[a.head] == 0 {
                        queue.push(a.head);
                    }
                }
            }
        }
        if seen != n {
            return Err(Error::domain("quiver has a directed cycle"));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::domain(format!("unknown vertex '{name}'")))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::domain(format!("unknown arrow '{name}'")))
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrows_with_tail(&self, v: VertexId) -> impl Iterator<Item = (ArrowId, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.tail == v)
    }

    pub fn arrows_with_head(&self, v: VertexId) -> impl Iterator<Item = (ArrowId, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.head == v)
    }
}

/// A path stored in application order: the first arrow is applied first
/// (the written composite "ba" is stored [a, b]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<ArrowId>);

impl Path {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tail(&self, q: &Quiver) -> VertexId {
        q.arrow(self.0[0]).tail
    }

    pub fn head(&self, q: &Quiver) -> VertexId {
        q.arrow(*self.0.last().unwrap()).head
    }

    pub fn is_composable(&self, q: &Quiver) -> bool {
        self.0
            .windows(2)
            .all(|w| q.arrow(w[0]).head == q.arrow(w[1]).tail)
    }
}

/// One homogeneous relation: an integer combination of parallel paths of
/// length at least 2, all sharing tail `tr` and head `hr`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
    pub tail: VertexId,
    pub head: VertexId,
}

impl Relation {
    pub fn new(q: &Quiver, terms: Vec<(i64, Path)>) -> Result<Relation> {
        if terms.is_empty() {
            return Err(Error::domain("relation needs at least one path"));
        }
        for (_, p) in &terms {
            if p.len() < 2 {
                return Err(Error::domain(
                    "relations must lie in m^2 (paths of length >= 2)",
                ));
            }
            if !p.is_composable(q) {
                return Err(Error::domain("relation contains a non-composable path"));
            }
        }
        let tail = terms[0].1.tail(q);
        let head = terms[0].1.head(q);
        for (_, p) in &terms[1..] {
            if p.tail(q) != tail || p.head(q) != head {
                return Err(Error::domain("relation is not homogeneous"));
            }
        }
        Ok(Relation { terms, tail, head })
    }
}

/// Minimal homogeneous relations Q₂. Minimality is a caller contract; the
/// flag-quiver constructors guarantee it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet(pub Vec<Relation>);

impl RelationSet {
    pub fn empty() -> Self {
        RelationSet(vec![])
    }

    pub fn new(q: &Quiver, term_lists: Vec<Vec<(i64, Path)>>) -> Result<Self> {
        let mut rels = vec![];
        for terms in term_lists {
            rels.push(Relation::new(q, terms)?);
        }
        Ok(RelationSet(rels))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Relation> {
        self.0.iter()
    }
}

/// Integer function on the vertices. Used both for honest dimension vectors
/// (nonnegative) and for the signed arguments of Euler forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVec(pub Vec<i64>);

impl DimVec {
    pub fn zeros(n: usize) -> Self {
        DimVec(vec![0; n])
    }

    pub fn get(&self, v: VertexId) -> i64 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &DimVec) -> DimVec {
        DimVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DimVec) -> DimVec {
        DimVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn leq(&self, other: &DimVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn unit(n: usize, v: VertexId) -> DimVec {
        let mut d = DimVec::zeros(n);
        d.0[v] = 1;
        d
    }
}

/// Integer weight on the vertices (the non-symmetric lift σ°).
pub type QuiverWeight = DimVec;

/// A quiver together with an arrow-reversing involution τ and a sign
/// function on the τ-fixed vertices and arrows.
#[derive(Clone, Debug)]
pub struct SymmetricQuiver {
    pub quiver: Quiver,
    tau_vertex: Vec<VertexId>,
    tau_arrow: Vec<ArrowId>,
    sign_vertex: HashMap<VertexId, i8>,
    sign_arrow: HashMap<ArrowId, i8>,
}

impl SymmetricQuiver {
    pub fn new(
        quiver: Quiver,
        tau_vertex: Vec<VertexId>,
        tau_arrow: Vec<ArrowId>,
        sign_vertex: HashMap<VertexId, i8>,
        sign_arrow: HashMap<ArrowId, i8>,
    ) -> Result<SymmetricQuiver> {
        let nv = quiver.vertex_count();
        let na = quiver.arrow_count();
        if tau_vertex.len() != nv || tau_arrow.len() != na {
            return Err(Error::domain(
                "involution must cover all vertices and arrows",
            ));
        }
        for v in 0..nv {
            if tau_vertex[tau_vertex[v]] != v {
                return Err(Error::domain("vertex involution is not an involution"));
            }
        }
        for a in 0..na {
            if tau_arrow[tau_arrow[a]] != a {
                return Err(Error::domain("arrow involution is not an involution"));
            }
            let arr = quiver.arrow(a);
            let tarr = quiver.arrow(tau_arrow[a]);
            if tarr.tail != tau_vertex[arr.head] || tarr.head != tau_vertex[arr.tail] {
                return Err(Error::domain(
                    "arrow involution must reverse arrows: t(τa)=τ(ha), h(τa)=τ(ta)",
                ));
            }
        }
        for v in 0..nv {
            let fixed = tau_vertex[v] == v;
            if fixed != sign_vertex.contains_key(&v) {
                return Err(Error::domain(
                    "sign function must be defined exactly on τ-fixed vertices",
                ));
            }
        }
        for a in 0..na {
            let fixed = tau_arrow[a] == a;
            if fixed != sign_arrow.contains_key(&a) {
                return Err(Error::domain(
                    "sign function must be defined exactly on τ-fixed arrows",
                ));
            }
        }
        Ok(SymmetricQuiver {
            quiver,
            tau_vertex,
            tau_arrow,
            sign_vertex,
            sign_arrow,
        })
    }

    pub fn tau_v(&self, v: VertexId) -> VertexId {
        self.tau_vertex[v]
    }

    pub fn tau_a(&self, a: ArrowId) -> ArrowId {
        self.tau_arrow[a]
    }

    pub fn sign_v(&self, v: VertexId) -> Option<i8> {
        self.sign_vertex.get(&v).copied()
    }

    pub fn sign_a(&self, a: ArrowId) -> Option<i8> {
        self.sign_arrow.get(&a).copied()
    }

    pub fn tau_vertices(&self) -> &[VertexId] {
        &self.tau_vertex
    }

    pub fn tau_arrows(&self) -> &[ArrowId] {
        &self.tau_arrow
    }

    pub fn vertex_signs(&self) -> &HashMap<VertexId, i8> {
        &self.sign_vertex
    }

    pub fn arrow_signs(&self) -> &HashMap<ArrowId, i8> {
        &self.sign_arrow
    }

    /// Q₀⁺: one representative of each 2-cycle of τ (the smaller id).
    pub fn vertices_plus(&self) -> Vec<VertexId> {
        (0..self.quiver.vertex_count())
            .filter(|&v| self.tau_vertex[v] > v)
            .collect()
    }

    /// τ-fixed vertices with the given sign.
    pub fn vertices_tau_signed(&self, sign: i8) -> Vec<VertexId> {
        (0..self.quiver.vertex_count())
            .filter(|&v| self.tau_vertex[v] == v && self.sign_vertex[&v] == sign)
            .collect()
    }

    /// A symmetric dimension vector satisfies β(τx) = β(x) and is even on
    /// the symplectic (sign -1) τ-fixed vertices, where the skew form
    /// forces even dimension.
    pub fn is_symmetric_dimvec(&self, beta: &DimVec) -> bool {
        (0..self.quiver.vertex_count()).all(|v| beta.get(v) == beta.get(self.tau_vertex[v]))
            && self
                .vertices_tau_signed(-1)
                .iter()
                .all(|&v| beta.get(v) % 2 == 0)
    }

    /// Is the relation set stable under τ (each relation's τ-image appears as
    /// a relation, compared by its path multiset)?
    pub fn relations_tau_invariant(&self, rels: &RelationSet) -> bool {
        rels.iter().all(|r| {
            let mut image: Vec<Path> = r
                .terms
                .iter()
                .map(|(_, p)| Path(p.0.iter().rev().map(|&a| self.tau_arrow[a]).collect()))
                .collect();
            image.sort();
            rels.iter().any(|other| {
                let mut own: Vec<Path> = other.terms.iter().map(|(_, p)| p.clone()).collect();
                own.sort();
                own == image
            })
        })
    }
}

fn check_len(q: &Quiver, v: &DimVec) -> Result<()> {
    if v.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: q.vertex_count(),
            got: v.len(),
        });
    }
    Ok(())
}

/// Euler form of the plain path algebra:
/// ⟨α, β⟩_Q = Σ_x α(x)β(x) − Σ_a α(ta)β(ha).
pub fn euler_form_q(q: &Quiver, alpha: &DimVec, beta: &DimVec) -> Result<i64> {
    check_len(q, alpha)?;
    check_len(q, beta)?;
    let vertex_part: i64 = (0..q.vertex_count())
        .map(|x| alpha.get(x) * beta.get(x))
        .sum();
    let arrow_part: i64 = q
        .arrows()
        .iter()
        .map(|a| alpha.get(a.tail) * beta.get(a.head))
        .sum();
    Ok(vertex_part - arrow_part)
}

/// Euler form with relations (valid when gldim Q/I ≤ 2 with minimal Q₂):
/// ⟨α, β⟩_I = Σ_x α(x)β(x) − Σ_a α(ta)β(ha) + Σ_r α(tr)β(hr).
pub fn euler_form_i(
    q: &Quiver,
    rels: &RelationSet,
    alpha: &DimVec,
    beta: &DimVec,
) -> Result<i64> {
    let base = euler_form_q(q, alpha, beta)?;
    let rel_part: i64 = rels
        .iter()
        .map(|r| alpha.get(r.tail) * beta.get(r.head))
        .sum();
    Ok(base + rel_part)
}

/// The weight σ° of the determinantal semi-invariant attached to α:
/// σ°(x) = ⟨α, ε_x⟩_I.
pub fn sigma_weight(q: &Quiver, rels: &RelationSet, alpha: &DimVec) -> Result<QuiverWeight> {
    check_len(q, alpha)?;
    let mut out = vec![0i64; q.vertex_count()];
    for (x, slot) in out.iter_mut().enumerate() {
        let mut val = alpha.get(x);
        for (_, a) in q.arrows_with_head(x) {
            val -= alpha.get(a.tail);
        }
        for r in rels.iter() {
            if r.head == x {
                val += alpha.get(r.tail);
            }
        }
        *slot = val;
    }
    Ok(DimVec(out))
}

/// Symmetric weight of α: ⟨α, ε_x − ε_{τx}⟩_I on Q₀⁺, and ⟨α, ε_x⟩_I
/// (kept as an integer, read mod 2) on the orthogonal τ-fixed vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricWeight {
    pub on_plus: Vec<(VertexId, i64)>,
    pub on_tau_plus: Vec<(VertexId, i64)>,
}

pub fn symmetric_sigma(
    sq: &SymmetricQuiver,
    rels: &RelationSet,
    alpha: &DimVec,
) -> Result<SymmetricWeight> {
    let sigma = sigma_weight(&sq.quiver, rels, alpha)?;
    let on_plus = sq
        .vertices_plus()
        .into_iter()
        .map(|v| (v, sigma.get(v) - sigma.get(sq.tau_v(v))))
        .collect();
    let on_tau_plus = sq
        .vertices_tau_signed(1)
        .into_iter()
        .map(|v| (v, sigma.get(v)))
        .collect();
    Ok(SymmetricWeight {
        on_plus,
        on_tau_plus,
    })
}

/// Multiplicities of the indecomposable projectives in the three terms of
/// the canonical resolution of a representation with dimension vector α:
/// term₀(x) = α(x), term₁(x) = Σ_{ha=x} α(ta), term₂(x) = Σ_{hr=x} α(tr).
pub fn canonical_resolution_counts(
    q: &Quiver,
    rels: &RelationSet,
    alpha: &DimVec,
) -> Result<[DimVec; 3]> {
    check_len(q, alpha)?;
    let n = q.vertex_count();
    let term0 = alpha.clone();
    let mut term1 = DimVec::zeros(n);
    for a in q.arrows() {
        term1.0[a.head] += alpha.get(a.tail);
    }
    let mut term2 = DimVec::zeros(n);
    for r in rels.iter() {
        term2.0[r.head] += alpha.get(r.tail);
    }
    Ok([term0, term1, term2])
}

/// Dimension of the representation variety at α (at points with vanishing
/// self-ext²): Σ_a α(ta)α(ha) − Σ_r α(tr)α(hr).
pub fn rep_variety_dim(q: &Quiver, rels: &RelationSet, alpha: &DimVec) -> Result<i64> {
    check_len(q, alpha)?;
    let arrows: i64 = q
        .arrows()
        .iter()
        .map(|a| alpha.get(a.tail) * alpha.get(a.head))
        .sum();
    let relations: i64 = rels
        .iter()
        .map(|r| alpha.get(r.tail) * alpha.get(r.head))
        .sum();
    Ok(arrows - relations)
}

/// The extension quiver Q^e/I^e: vertices {0,1}×Q₀, three arrow copies per
/// arrow (level 0, level drop, level 1), and relations obtained by
/// substituting a ↦ a⁰ + a^d + a¹ into each relation and splitting the
/// result into homogeneous components.
pub fn extension_quiver(q: &Quiver, rels: &RelationSet) -> Result<(Quiver, RelationSet)> {
    let mut eq = Quiver::empty();
    for level in 0..2 {
        for v in 0..q.vertex_count() {
            eq.add_vertex(&format!("{level}:{}", q.vertex_name(v)))?;
        }
    }
    // arrow copies: a:0 inside level 0, a:d dropping 1→0, a:1 inside level 1
    let mut copy_ids: Vec<[ArrowId; 3]> = Vec::with_capacity(q.arrow_count());
    for a in q.arrows() {
        let a0 = eq.add_arrow(
            &format!("{}:0", a.name),
            &format!("0:{}", q.vertex_name(a.tail)),
            &format!("0:{}", q.vertex_name(a.head)),
        )?;
        let ad = eq.add_arrow(
            &format!("{}:d", a.name),
            &format!("1:{}", q.vertex_name(a.tail)),
            &format!("0:{}", q.vertex_name(a.head)),
        )?;
        let a1 = eq.add_arrow(
            &format!("{}:1", a.name),
            &format!("1:{}", q.vertex_name(a.tail)),
            &format!("1:{}", q.vertex_name(a.head)),
        )?;
        copy_ids.push([a0, ad, a1]);
    }
    eq.check_acyclic()?;

    let mut new_rels = vec![];
    for r in rels.iter() {
        let comp00: Vec<(i64, Path)> = r
            .terms
            .iter()
            .map(|(c, p)| (*c, Path(p.0.iter().map(|&a| copy_ids[a][0]).collect())))
            .collect();
        let comp11: Vec<(i64, Path)> = r
            .terms
            .iter()
            .map(|(c, p)| (*c, Path(p.0.iter().map(|&a| copy_ids[a][2]).collect())))
            .collect();
        // level drops at position k: arrows before k stay at level 1,
        // arrow k is the drop copy, arrows after run at level 0
        let mut comp10: Vec<(i64, Path)> = vec![];
        for (c, p) in &r.terms {
            for k in 0..p.len() {
                let arrows = p
                    .0
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| match i.cmp(&k) {
                        std::cmp::Ordering::Less => copy_ids[a][2],
                        std::cmp::Ordering::Equal => copy_ids[a][1],
                        std::cmp::Ordering::Greater => copy_ids[a][0],
                    })
                    .collect();
                comp10.push((*c, Path(arrows)));
            }
        }
        new_rels.push(Relation::new(&eq, comp00)?);
        new_rels.push(Relation::new(&eq, comp10)?);
        new_rels.push(Relation::new(&eq, comp11)?);
    }
    Ok((eq, RelationSet(new_rels)))
}

/// The quiver 1 → 2 → 3 with the composite relation ba = 0. Used in tests
/// and documentation examples throughout.
pub fn line_quiver_with_relation() -> (Quiver, RelationSet) {
    let q = Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    let a = q.arrow_id("a").unwrap();
    let b = q.arrow_id("b").unwrap();
    let rels = RelationSet::new(&q, vec![vec![(1, Path(vec![a, b]))]]).unwrap();
    (q, rels)
}
