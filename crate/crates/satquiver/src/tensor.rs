//! Exact tensor-product decomposition and invariant dimensions for the
//! classical groups: Freudenthal weight multiplicities, the Klimyk
//! reflection rule, an independent brute-force character oracle, plethysm
//! dimension checks, and the saturation scan.

use crate::error::{Error, Result};
use crate::lietypes::{Family, GroupType, Partition, Weight};
use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};
use std::time::Instant;

/// All weights of an irreducible V_λ with their exact multiplicities.
#[derive(Clone, Debug)]
pub struct WeightMultiset {
    group: GroupType,
    highest: Weight,
    map: HashMap<Weight, BigInt>,
}

impl WeightMultiset {
    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn multiplicity(&self, w: &Weight) -> BigInt {
        self.map.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.map.iter()
    }

    pub fn distinct_weights(&self) -> usize {
        self.map.len()
    }

    /// Total dimension: the sum of all multiplicities.
    pub fn total_dim(&self) -> BigInt {
        self.map.values().sum()
    }
}

/// Decomposition of a tensor product into irreducibles, keyed by highest
/// weight. Keys are lexicographically ordered so iteration is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DecompositionResult {
    map: BTreeMap<Weight, BigInt>,
}

impl DecompositionResult {
    pub fn multiplicity(&self, w: &Weight) -> BigInt {
        self.map.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Components sorted lexicographically descending (highest first), as
    /// (weight string, multiplicity) pairs.
    pub fn sorted_pairs(&self) -> Vec<(String, BigInt)> {
        self.map
            .iter()
            .rev()
            .map(|(w, m)| (w.partition_display(), m.clone()))
            .collect()
    }

    /// Sum of mult(ν) · dim V_ν over all components.
    pub fn total_dim(&self, g: &GroupType) -> BigInt {
        self.map
            .iter()
            .map(|(w, m)| m * g.dim_irrep(w).expect("components are dominant"))
            .sum()
    }
}

struct Memo {
    multisets: DashMap<(GroupType, Weight), Arc<WeightMultiset>>,
    decomps: DashMap<(GroupType, Weight, Weight), Arc<DecompositionResult>>,
}

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Memo {
        multisets: DashMap::new(),
        decomps: DashMap::new(),
    })
}

/// Exact multiplicity of every weight of V_λ (Freudenthal recursion),
/// expanded over full Weyl orbits. Results are memoized process-wide.
pub fn weight_multiplicities(g: &GroupType, lambda: &Weight) -> Result<Arc<WeightMultiset>> {
    if !g.is_dominant(lambda)? {
        return Err(Error::domain(format!(
            "weight {lambda} is not dominant for {}",
            g.tag()
        )));
    }
    let key = (*g, lambda.clone());
    if let Some(hit) = memo().multisets.get(&key) {
        return Ok(hit.clone());
    }
    let ms = Arc::new(freudenthal(g, lambda));
    memo().multisets.insert(key, ms.clone());
    Ok(ms)
}

/// λ - μ expressed in the simple-root basis: the coefficient vector when it
/// is a nonnegative integral combination, None otherwise. Inputs carry
/// doubled coordinates; the returned coefficients are genuine integers.
fn simple_root_coeffs(g: &GroupType, lambda: &Weight, mu: &Weight) -> Option<Vec<i64>> {
    let n = g.rank;
    let mut diffs = Vec::with_capacity(n);
    for (a, b) in lambda.twice().iter().zip(mu.twice()) {
        let d = a - b;
        if d % 2 != 0 {
            return None;
        }
        diffs.push(d / 2);
    }
    let mut partial = Vec::with_capacity(n);
    let mut acc = 0i64;
    for &d in &diffs {
        acc += d;
        partial.push(acc);
    }
    let coeffs: Vec<i64> = match g.family {
        Family::A => {
            if partial[n - 1] != 0 {
                return None;
            }
            partial[..n - 1].to_vec()
        }
        Family::B => partial,
        Family::C => {
            if partial[n - 1] % 2 != 0 {
                return None;
            }
            let mut c = partial[..n - 1].to_vec();
            c.push(partial[n - 1] / 2);
            c
        }
        Family::D => {
            // α_{n-1} = ε_{n-1} - ε_n, α_n = ε_{n-1} + ε_n:
            // c_{n-1} = (S_{n-1} - d_n)/2, c_n = (S_{n-1} + d_n)/2
            let s_prev = partial[n - 2];
            let d_n = diffs[n - 1];
            if (s_prev - d_n) % 2 != 0 {
                return None;
            }
            let mut c = partial[..n - 2].to_vec();
            c.push((s_prev - d_n) / 2);
            c.push((s_prev + d_n) / 2);
            c
        }
    };
    if coeffs.iter().any(|&c| c < 0) {
        return None;
    }
    Some(coeffs)
}

/// Dominant weights μ with λ - μ a nonnegative combination of simple roots,
/// paired with the combination's height, sorted by increasing height.
fn dominant_candidates(g: &GroupType, lambda: &Weight) -> Vec<(Weight, i64)> {
    let n = g.rank;
    let top = lambda.twice()[0];
    let parity = lambda.twice()[0].rem_euclid(2);
    let mut out = vec![];
    let mut coords = vec![0i64; n];
    fn rec(
        g: &GroupType,
        lambda: &Weight,
        coords: &mut Vec<i64>,
        idx: usize,
        max: i64,
        parity: i64,
        out: &mut Vec<(Weight, i64)>,
    ) {
        let n = coords.len();
        if idx == n {
            let mut push = |cand: Vec<i64>| {
                let w = Weight::from_twice(cand);
                if let Some(coeffs) = simple_root_coeffs(g, lambda, &w) {
                    out.push((w, coeffs.iter().sum()));
                }
            };
            push(coords.clone());
            if g.family == Family::D && coords[n - 1] > 0 {
                let mut alt = coords.clone();
                alt[n - 1] = -alt[n - 1];
                push(alt);
            }
            return;
        }
        let mut v = if max.rem_euclid(2) == parity { max } else { max - 1 };
        while v >= 0 {
            coords[idx] = v;
            rec(g, lambda, coords, idx + 1, v, parity, out);
            v -= 2;
        }
    }
    rec(g, lambda, &mut coords, 0, top, parity, &mut out);
    out.sort_by(|(wa, ha), (wb, hb)| ha.cmp(hb).then_with(|| wa.cmp(wb)));
    out
}

/// Freudenthal without the memo table; benchmarks use this to measure cold
/// computation.
pub fn weight_multiplicities_uncached(g: &GroupType, lambda: &Weight) -> WeightMultiset {
    freudenthal(g, lambda)
}

fn freudenthal(g: &GroupType, lambda: &Weight) -> WeightMultiset {
    let rho = g.rho();
    let pos_roots = g.positive_roots();
    let lam_shift = lambda.add(&rho);
    let lam_norm = lam_shift.dot4(&lam_shift) as i128;

    let candidates = dominant_candidates(g, lambda);
    let mut dom_mult: HashMap<Weight, i128> = HashMap::with_capacity(candidates.len());

    for (mu, height) in &candidates {
        if *height == 0 {
            dom_mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num: i128 = 0;
        for alpha in &pos_roots {
            let mut nu = mu.add(alpha);
            loop {
                let rep = g.orbit_rep(&nu);
                let Some(&m) = dom_mult.get(&rep) else { break };
                // the α-string through μ is unbroken, so the first missing
                // entry ends the climb
                num = num
                    .checked_add(m.checked_mul(nu.dot4(alpha) as i128).expect("overflow"))
                    .expect("overflow");
                nu = nu.add(alpha);
            }
        }
        let mu_shift = mu.add(&rho);
        let den = lam_norm - mu_shift.dot4(&mu_shift) as i128;
        assert!(den > 0, "Freudenthal denominator must be positive");
        assert_eq!((2 * num) % den, 0, "Freudenthal division must be exact");
        let m = 2 * num / den;
        assert!(m > 0, "dominant candidate must be a weight");
        dom_mult.insert(mu.clone(), m);
    }

    let mut map = HashMap::new();
    for (mu, m) in &dom_mult {
        let big = BigInt::from(*m);
        for v in g.weyl_orbit(mu) {
            map.insert(v, big.clone());
        }
    }
    WeightMultiset {
        group: *g,
        highest: lambda.clone(),
        map,
    }
}

/// Klimyk's rule: decompose V_λ ⊗ V_μ exactly, iterating over the weight
/// multiset of the smaller factor (ties broken by the lexicographically
/// smaller highest weight). Memoized process-wide.
pub fn tensor_decompose(
    g: &GroupType,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Arc<DecompositionResult>> {
    for v in [lambda, mu] {
        if !g.is_dominant(v)? {
            return Err(Error::domain(format!(
                "weight {v} is not dominant for {}",
                g.tag()
            )));
        }
    }
    let key = if lambda <= mu {
        (*g, lambda.clone(), mu.clone())
    } else {
        (*g, mu.clone(), lambda.clone())
    };
    if let Some(hit) = memo().decomps.get(&key) {
        return Ok(hit.clone());
    }

    let dim_l = g.dim_irrep(lambda)?;
    let dim_m = g.dim_irrep(mu)?;
    let (base, iterate) = match dim_l.cmp(&dim_m) {
        std::cmp::Ordering::Less => (mu, lambda),
        std::cmp::Ordering::Greater => (lambda, mu),
        std::cmp::Ordering::Equal => {
            if lambda <= mu {
                (mu, lambda)
            } else {
                (lambda, mu)
            }
        }
    };

    let weights = weight_multiplicities(g, iterate)?;
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (nu, m) in weights.iter() {
        let (dom, sign) = g.reflect_to_dominant(&base.add(nu));
        match sign {
            0 => {}
            1 => *acc.entry(dom).or_insert_with(BigInt::zero) += m,
            _ => *acc.entry(dom).or_insert_with(BigInt::zero) -= m,
        }
    }
    acc.retain(|v, m| {
        assert!(
            !m.is_negative(),
            "negative multiplicity for {v}: reflection-sign bug"
        );
        m.is_positive()
    });
    let result = Arc::new(DecompositionResult { map: acc });
    memo().decomps.insert(key, result.clone());
    Ok(result)
}

/// Left-fold tensor decomposition over a list of dominant weights.
pub fn fold_decompose(g: &GroupType, weights: &[Weight]) -> Result<DecompositionResult> {
    let mut acc = DecompositionResult::default();
    let Some(first) = weights.first() else {
        return Ok(acc);
    };
    acc.map.insert(first.clone(), BigInt::one());
    for w in &weights[1..] {
        let mut next: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (nu, mult) in &acc.map {
            let dec = tensor_decompose(g, nu, w)?;
            for (comp, m) in dec.iter() {
                *next.entry(comp.clone()).or_insert_with(BigInt::zero) += mult * m;
            }
        }
        acc.map = next;
    }
    Ok(acc)
}

/// Multiplicity of the trivial representation in V_{λ¹} ⊗ ... ⊗ V_{λʳ}.
///
/// Folds pairwise decompositions left to right; the trivial component of the
/// final tensor step is read off as the coefficient of the last factor's
/// dual (the only component contributing it, with multiplicity one).
/// Short-circuits to zero when the weight sum leaves the root lattice.
pub fn invariant_dim(g: &GroupType, weights: &[Weight]) -> Result<BigInt> {
    if weights.is_empty() {
        return Err(Error::domain("invariant_dim needs at least one weight"));
    }
    for w in weights {
        if !g.is_dominant(w)? {
            return Err(Error::domain(format!(
                "weight {w} is not dominant for {}",
                g.tag()
            )));
        }
    }
    let mut sum = Weight::zero(g.rank);
    for w in weights {
        sum = sum.add(w);
    }
    if !g.in_root_lattice(&sum)? {
        return Ok(BigInt::zero());
    }
    let (last, init) = weights.split_last().unwrap();
    if init.is_empty() {
        return Ok(if last.is_zero() {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    let folded = fold_decompose(g, init)?;
    Ok(folded.multiplicity(&g.dual_weight(last)))
}

/// Independent brute-force oracle: multiply formal characters as exact
/// Laurent polynomials and peel off highest terms until the coefficient of
/// the trivial character is isolated.
pub fn brute_character_invariant_dim(
    g: &GroupType,
    weights: &[Weight],
    max_dim_product: &BigInt,
) -> Result<BigInt> {
    if weights.is_empty() {
        return Err(Error::domain("need at least one weight"));
    }
    let mut product_dim = BigInt::one();
    for w in weights {
        product_dim *= g.dim_irrep(w)?;
    }
    if &product_dim > max_dim_product {
        return Err(Error::budget(format!(
            "character product dimension {product_dim} exceeds budget {max_dim_product}"
        )));
    }

    // product of the formal characters
    let mut poly: BTreeMap<Weight, BigInt> = BTreeMap::new();
    poly.insert(Weight::zero(g.rank), BigInt::one());
    for w in weights {
        let ms = weight_multiplicities(g, w)?;
        let mut next: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (a, ca) in &poly {
            for (b, cb) in ms.iter() {
                *next.entry(a.add(b)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        next.retain(|_, c| !c.is_zero());
        poly = next;
    }

    // peel components: the lexicographically largest remaining weight is the
    // highest weight of some component (dominant representatives are
    // lex-maximal in their Weyl orbits for A/B/C/D)
    while let Some((top, coeff)) = poly.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) {
        assert!(
            coeff.is_positive(),
            "negative leading coefficient in character expansion"
        );
        if top.is_zero() {
            return Ok(coeff);
        }
        debug_assert!(g.is_dominant(&top)?, "leading term must be dominant");
        let ms = weight_multiplicities(g, &top)?;
        for (b, cb) in ms.iter() {
            let entry = poly.entry(b.clone()).or_insert_with(BigInt::zero);
            *entry -= &coeff * cb;
        }
        poly.retain(|_, c| !c.is_zero());
    }
    Ok(BigInt::zero())
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn sym_power_dim(space_dim: u64, m: u64) -> BigInt {
    if m == 0 {
        return BigInt::one();
    }
    binomial(space_dim + m - 1, m)
}

/// Verify the three plethysm/Cauchy dimension identities at exponent m and
/// dim V = dim W = d:
///   Sym^m(Sym² V) = ⊕_{|λ|=m} S_{2λ}(V),
///   Sym^m(Λ² V)   = ⊕_{|λ|=m} S_{(2λ)'}(V),
///   Sym^m(V ⊗ W)  = ⊕_{|λ|=m} S_λ(V) ⊗ S_λ(W).
pub fn check_plethysm_dims(m: u64, d: u64) -> bool {
    let parts = Partition::all_of_size(m);
    let lhs_sym2 = sym_power_dim(d * (d + 1) / 2, m);
    let lhs_alt2 = sym_power_dim(d * d.saturating_sub(1) / 2, m);
    let lhs_cauchy = sym_power_dim(d * d, m);

    let mut rhs_sym2 = BigInt::zero();
    let mut rhs_alt2 = BigInt::zero();
    let mut rhs_cauchy = BigInt::zero();
    for lam in &parts {
        let doubled = lam.scale(2);
        rhs_sym2 += doubled.schur_dim(d);
        rhs_alt2 += doubled.conjugate().schur_dim(d);
        let s = lam.schur_dim(d);
        rhs_cauchy += &s * &s;
    }
    lhs_sym2 == rhs_sym2 && lhs_alt2 == rhs_alt2 && lhs_cauchy == rhs_cauchy
}

/// Serde helpers rendering arbitrary-precision integers as decimal strings.
pub mod bigint_serde {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub mod vec {
        use num_bigint::BigInt;
        use serde::ser::SerializeSeq;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for item in v {
                seq.serialize_element(&item.to_string())?;
            }
            seq.end()
        }
    }
}

/// One scanned tuple: invariant dimensions at N = 1..=nmax and at factor·λ⃗.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub weights: Vec<Weight>,
    #[serde(with = "bigint_serde::vec")]
    pub m_at_n: Vec<BigInt>,
    #[serde(with = "bigint_serde")]
    pub m_at_factor: BigInt,
}

impl ScanRow {
    pub fn nonzero_somewhere(&self) -> bool {
        self.m_at_n.iter().any(|m| m.is_positive())
    }

    pub fn is_counterexample(&self) -> bool {
        self.nonzero_somewhere() && self.m_at_factor.is_zero()
    }
}

/// Result of a saturation sweep over all r-multisets of a weight pool.
#[derive(Clone, Debug, Serialize)]
pub struct SaturationReport {
    pub group: String,
    pub factor: i64,
    pub nmax: i64,
    pub rows: Vec<ScanRow>,
    pub counterexamples: Vec<ScanRow>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

fn scan_tuples(pool: &[Weight], r: usize) -> Vec<Vec<Weight>> {
    let mut sorted = pool.to_vec();
    sorted.sort();
    sorted.dedup();
    fn rec(
        pool: &[Weight],
        r: usize,
        start: usize,
        cur: &mut Vec<Weight>,
        out: &mut Vec<Vec<Weight>>,
    ) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i].clone());
            rec(pool, r, i, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    if !sorted.is_empty() {
        rec(&sorted, r, 0, &mut Vec::with_capacity(r), &mut out);
    }
    out
}

/// Callbacks wired into the scan: `on_row` fires after each finished tuple
/// (the CLI flushes cache lines there, so an interrupt loses nothing);
/// `lookup`/`store` bridge to a persistent invariant-dimension cache.
pub type RowSink<'a> = &'a (dyn Fn(&ScanRow) + Sync);
pub type CacheLookup<'a> = &'a (dyn Fn(&[Weight]) -> Option<BigInt> + Sync);
pub type CacheStore<'a> = &'a (dyn Fn(&[Weight], &BigInt) + Sync);

#[derive(Default)]
pub struct ScanHooks<'a> {
    pub on_row: Option<RowSink<'a>>,
    pub lookup: Option<CacheLookup<'a>>,
    pub store: Option<CacheStore<'a>>,
}

fn cached_invariant(g: &GroupType, scaled: &[Weight], hooks: &ScanHooks<'_>) -> Result<BigInt> {
    if let Some(lookup) = hooks.lookup {
        if let Some(hit) = lookup(scaled) {
            return Ok(hit);
        }
    }
    let value = invariant_dim(g, scaled)?;
    if let Some(store) = hooks.store {
        store(scaled, &value);
    }
    Ok(value)
}

fn scan_one(g: &GroupType, tuple: &[Weight], nmax: i64, factor: i64, hooks: &ScanHooks<'_>) -> Result<ScanRow> {
    let mut m_at_n = Vec::with_capacity(nmax as usize);
    for n in 1..=nmax {
        let scaled: Vec<Weight> = tuple.iter().map(|w| w.scale(n)).collect();
        m_at_n.push(cached_invariant(g, &scaled, hooks)?);
    }
    let m_at_factor = if factor >= 1 && factor <= nmax {
        m_at_n[(factor - 1) as usize].clone()
    } else {
        let scaled: Vec<Weight> = tuple.iter().map(|w| w.scale(factor)).collect();
        cached_invariant(g, &scaled, hooks)?
    };
    Ok(ScanRow {
        weights: tuple.to_vec(),
        m_at_n,
        m_at_factor,
    })
}

/// Sequential saturation scan (always available; the `parallel` feature adds
/// a rayon-backed variant with identical output).
pub fn saturation_scan_seq(
    g: &GroupType,
    pool: &[Weight],
    r: usize,
    nmax: i64,
    factor: i64,
    hooks: &ScanHooks<'_>,
) -> Result<SaturationReport> {
    if r < 2 {
        return Err(Error::domain("saturation scan needs r >= 2 arms"));
    }
    let start = Instant::now();
    let tuples = scan_tuples(pool, r);
    let mut rows = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        let row = scan_one(g, tuple, nmax, factor, hooks)?;
        if let Some(cb) = hooks.on_row {
            cb(&row);
        }
        rows.push(row);
    }
    Ok(assemble_report(g, nmax, factor, rows, start))
}

/// Data-parallel saturation scan distributing tuples across the rayon pool.
#[cfg(feature = "parallel")]
pub fn saturation_scan(
    g: &GroupType,
    pool: &[Weight],
    r: usize,
    nmax: i64,
    factor: i64,
    hooks: &ScanHooks<'_>,
) -> Result<SaturationReport> {
    use rayon::prelude::*;
    if r < 2 {
        return Err(Error::domain("saturation scan needs r >= 2 arms"));
    }
    let start = Instant::now();
    let tuples = scan_tuples(pool, r);
    let rows: Result<Vec<ScanRow>> = tuples
        .par_iter()
        .map(|tuple| {
            let row = scan_one(g, tuple, nmax, factor, hooks)?;
            if let Some(cb) = hooks.on_row {
                cb(&row);
            }
            Ok(row)
        })
        .collect();
    Ok(assemble_report(g, nmax, factor, rows?, start))
}

#[cfg(not(feature = "parallel"))]
pub fn saturation_scan(
    g: &GroupType,
    pool: &[Weight],
    r: usize,
    nmax: i64,
    factor: i64,
    hooks: &ScanHooks<'_>,
) -> Result<SaturationReport> {
    saturation_scan_seq(g, pool, r, nmax, factor, hooks)
}

fn assemble_report(
    g: &GroupType,
    nmax: i64,
    factor: i64,
    rows: Vec<ScanRow>,
    start: Instant,
) -> SaturationReport {
    let counterexamples = rows
        .iter()
        .filter(|row| row.is_counterexample())
        .cloned()
        .collect();
    SaturationReport {
        group: g.tag(),
        factor,
        nmax,
        rows,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// All dominant weights of g with λ₁ at most `max_part_twice`/2: integral
/// weights for plain groups, half-odd weights for Spin groups. For family D
/// the last coordinate also ranges over negative values.
pub fn dominant_pool(g: &GroupType, max_part_twice: i64) -> Vec<Weight> {
    let n = g.rank;
    let parity = if g.spin_allowed { 1i64 } else { 0i64 };
    fn rec(g: &GroupType, coords: &mut Vec<i64>, idx: usize, max: i64, parity: i64, out: &mut Vec<Weight>) {
        let n = coords.len();
        if idx == n {
            out.push(Weight::from_twice(coords.clone()));
            if g.family == Family::D && coords[n - 1] > 0 {
                let mut alt = coords.clone();
                alt[n - 1] = -alt[n - 1];
                out.push(Weight::from_twice(alt));
            }
            return;
        }
        let mut v = if max.rem_euclid(2) == parity { max } else { max - 1 };
        while v >= parity {
            coords[idx] = v;
            rec(g, coords, idx + 1, v, parity, out);
            v -= 2;
        }
    }
    let mut out = vec![];
    rec(g, &mut vec![0i64; n], 0, max_part_twice, parity, &mut out);
    out.sort();
    out
}
