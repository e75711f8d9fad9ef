//! Independent sets of G(n,3,1): exact independence number, the three
//! canonical independent families, and decomposition of an independent set
//! into families with pairwise disjoint supports.
//!
//! In an independent set any two triples meet in 0 or 2 elements. Triples
//! linked by 2-element intersections either all share one pair (type 1) or
//! all live inside one 4-set (type 2); what is left is pairwise disjoint
//! (type 3).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{count_induced_edges, Graph, TripleVertex, VertexSubset};

pub fn is_independent(w: &VertexSubset) -> bool {
    count_induced_edges(w) == 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceResult {
    pub n: usize,
    pub alpha: usize,
    pub witness: VertexSubset,
    pub proven: bool,
}

/// JSON shape: `{"n":..,"alpha":..,"proven":..,"witness":[[..]]}`.
#[derive(Serialize)]
pub struct IndependenceReport {
    pub n: usize,
    pub alpha: usize,
    pub proven: bool,
    pub witness: Vec<[u16; 3]>,
}

impl IndependenceResult {
    pub fn report(&self) -> IndependenceReport {
        IndependenceReport {
            n: self.n,
            alpha: self.alpha,
            proven: self.proven,
            witness: self.witness.triples().map(|t| t.elements()).collect(),
        }
    }
}

type Bits = Vec<u64>;

fn bits_iter(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(wi, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                wi * 64 + bit
            })
        })
    })
}

fn first_bit(b: &[u64]) -> Option<usize> {
    b.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn clear(b: &mut [u64], i: usize) {
    b[i / 64] &= !(1 << (i % 64));
}

/// Searches for maximum independent sets using packed adjacency rows.
struct MisSearch<'g> {
    g: &'g Graph,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl<'g> MisSearch<'g> {
    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Greedy partition of `p` into cliques of G. Returns vertices in
    /// partition order with the 1-based count of cliques used so far; the
    /// independent vertices any subset can contain are bounded by that count.
    fn clique_cover(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let mut rest: Bits = p.to_vec();
        let mut out = Vec::new();
        let mut class = 0;
        while rest.iter().any(|&w| w != 0) {
            class += 1;
            let mut cand = rest.clone();
            while let Some(v) = first_bit(&cand) {
                out.push((v, class));
                clear(&mut rest, v);
                let row = self.g.row(v).expect("rows");
                for (c, r) in cand.iter_mut().zip(row) {
                    *c &= r;
                }
            }
        }
        out
    }

    fn non_neighbors_after(&self, p: &[u64], v: usize) -> Bits {
        let row = self.g.row(v).expect("rows");
        let mut out: Bits = p.iter().zip(row).map(|(a, r)| a & !r).collect();
        clear(&mut out, v);
        out
    }

    fn expand(&mut self, mut p: Bits, current: &mut Vec<usize>, best: &mut Vec<usize>) {
        if self.out_of_time() {
            return;
        }
        let cover = self.clique_cover(&p);
        for &(v, class) in cover.iter().rev() {
            if current.len() + class <= best.len() || self.timed_out {
                return;
            }
            current.push(v);
            let next = self.non_neighbors_after(&p, v);
            if next.iter().all(|&w| w == 0) {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            } else {
                self.expand(next, current, best);
            }
            current.pop();
            clear(&mut p, v);
        }
    }

    /// First independent set of size `target` in lexicographic order.
    fn first_of_size(&mut self, p: Bits, target: usize, current: &mut Vec<usize>) -> bool {
        if current.len() == target {
            return true;
        }
        if self.out_of_time() {
            return false;
        }
        let cover = self.clique_cover(&p);
        let max_class = cover.last().map_or(0, |c| c.1);
        if current.len() + max_class < target {
            return false;
        }
        let mut p = p;
        let order: Vec<usize> = bits_iter(&p).collect();
        for v in order {
            current.push(v);
            let mut next = self.non_neighbors_after(&p, v);
            for u in 0..=v {
                clear(&mut next, u);
            }
            if self.first_of_size(next, target, current) {
                return true;
            }
            current.pop();
            clear(&mut p, v);
            if self.timed_out {
                return false;
            }
            let remaining = self.clique_cover(&p).last().map_or(0, |c| c.1);
            if current.len() + remaining < target {
                return false;
            }
        }
        false
    }
}

/// Maximum independent set size of G(n,3,1), with a witness.
///
/// `proven` is false when the time budget ran out or `n > 30`, in which case
/// the result is the best set found (for `n > 30` the largest canonical
/// family). The witness is the lexicographically smallest optimal set when
/// the search completes.
pub fn independence_number(n: usize, budget: Option<Duration>) -> Result<IndependenceResult> {
    let g = Graph::new(n)?;
    if !g.has_rows() {
        let fam = best_canonical_family(n)?;
        return Ok(IndependenceResult { n, alpha: fam.len(), witness: fam, proven: false });
    }
    let mut search = MisSearch { g: &g, deadline: budget.map(|b| Instant::now() + b), nodes: 0, timed_out: false };
    let all = VertexSubset::full(n)?.words().to_vec();
    let mut best: Vec<usize> = best_canonical_family(n)?.to_indices();
    search.expand(all.clone(), &mut Vec::new(), &mut best);
    if search.timed_out {
        let witness = VertexSubset::from_indices(n, best.iter().copied())?;
        return Ok(IndependenceResult { n, alpha: best.len(), witness, proven: false });
    }
    let alpha = best.len();
    let mut lex = Vec::new();
    search.deadline = None;
    let found = search.first_of_size(all, alpha, &mut lex);
    debug_assert!(found);
    let witness = VertexSubset::from_indices(n, lex)?;
    Ok(IndependenceResult { n, alpha, witness, proven: true })
}

fn best_canonical_family(n: usize) -> Result<VertexSubset> {
    let mut cands = vec![generate_family(&FamilyType::Type3, n)?];
    if n >= 4 {
        cands.push(generate_family(&FamilyType::Type1 { pair: [1, 2] }, n)?);
        cands.push(generate_family(&FamilyType::Type2 { quad: [1, 2, 3, 4] }, n)?);
    }
    Ok(cands.into_iter().max_by_key(|s| s.len()).expect("non-empty"))
}

/// Calls `f` on every independent set of G(n,3,1). Exponential; intended for
/// `n <= 6`.
pub fn for_each_independent_set(g: &Graph, mut f: impl FnMut(&[usize])) {
    fn rec(g: &Graph, start: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        f(chosen);
        for v in start..g.vertex_count() {
            if chosen.iter().all(|&u| !g.is_adjacent(u, v)) {
                chosen.push(v);
                rec(g, v + 1, chosen, f);
                chosen.pop();
            }
        }
    }
    rec(g, 0, &mut Vec::new(), &mut f);
}

/// The three canonical independent family shapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilyType {
    /// Triples through a common pair.
    Type1 { pair: [u16; 2] },
    /// Triples inside a common 4-set.
    Type2 { quad: [u16; 4] },
    /// Pairwise disjoint triples.
    Type3,
}

impl FamilyType {
    /// Whether `part` is a family of this type.
    pub fn admits(&self, part: &[TripleVertex]) -> bool {
        match self {
            FamilyType::Type1 { pair } => {
                part.len() >= 3 && part.iter().all(|t| t.contains(pair[0]) && t.contains(pair[1]))
            }
            FamilyType::Type2 { quad } => {
                part.len() >= 2 && part.iter().all(|t| t.elements().iter().all(|e| quad.contains(e)))
            }
            FamilyType::Type3 => {
                part.iter().enumerate().all(|(i, a)| part[i + 1..].iter().all(|b| a.intersection_size(b) == 0))
            }
        }
    }
}

/// The maximal family of the given type on `{1..n}`.
pub fn generate_family(ft: &FamilyType, n: usize) -> Result<VertexSubset> {
    let in_range = |x: u16| x >= 1 && x as usize <= n;
    match ft {
        FamilyType::Type1 { pair: [i, j] } => {
            if !in_range(*i) || !in_range(*j) || i == j {
                return Err(Error::BadFamily(format!("pair {{{i},{j}}} for n = {n}")));
            }
            let triples: Vec<[u16; 3]> = (1..=n as u16).filter(|x| x != i && x != j).map(|x| [*i, *j, x]).collect();
            VertexSubset::from_triples(n, &triples)
        }
        FamilyType::Type2 { quad } => {
            let mut q = *quad;
            q.sort_unstable();
            if !q.iter().all(|&x| in_range(x)) || q.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadFamily(format!("4-set {quad:?} for n = {n}")));
            }
            let triples: Vec<[u16; 3]> = (0..4)
                .map(|skip| {
                    let mut t = q.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &x)| x);
                    [t.next().unwrap(), t.next().unwrap(), t.next().unwrap()]
                })
                .collect();
            VertexSubset::from_triples(n, &triples)
        }
        FamilyType::Type3 => {
            let triples: Vec<[u16; 3]> = (0..(n / 3) as u16).map(|k| [3 * k + 1, 3 * k + 2, 3 * k + 3]).collect();
            VertexSubset::from_triples(n, &triples)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<(FamilyType, VertexSubset)>,
    /// Union of the members of each part, sorted.
    pub supports: Vec<Vec<u16>>,
}

impl Decomposition {
    /// Checks that the parts partition `u`, each part is of its stated
    /// type, and supports are pairwise disjoint.
    pub fn validate(&self, u: &VertexSubset) -> std::result::Result<(), String> {
        let mut seen = VertexSubset::empty(u.n()).map_err(|e| e.to_string())?;
        for (ft, part) in &self.parts {
            for i in part.iter() {
                if seen.contains(i) {
                    return Err(format!("vertex {i} appears in two parts"));
                }
                seen.insert(i);
            }
            let members: Vec<TripleVertex> = part.triples().collect();
            if !ft.admits(&members) {
                return Err(format!("part {part:?} is not of type {ft:?}"));
            }
        }
        if &seen != u {
            return Err("parts do not cover the input".into());
        }
        for (i, a) in self.supports.iter().enumerate() {
            for b in &self.supports[i + 1..] {
                if a.iter().any(|x| b.contains(x)) {
                    return Err(format!("supports {a:?} and {b:?} intersect"));
                }
            }
        }
        Ok(())
    }
}

fn support(members: &[TripleVertex]) -> Vec<u16> {
    let mut s: Vec<u16> = members.iter().flat_map(|t| t.elements()).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Splits an independent set into type-1, type-2 and type-3 families.
///
/// Pairs covered by at least three members become type-1 parts; the rest
/// are joined along 2-element intersections and each group of two or more
/// becomes a type-2 part on its 4-element support; leftover singletons form
/// a single type-3 part. The result is validated before it is returned.
pub fn decompose_claim1(u: &VertexSubset) -> Result<Decomposition> {
    if !is_independent(u) {
        return Err(Error::Decomposition("input set is not independent".into()));
    }
    let mut remaining: Vec<TripleVertex> = u.triples().collect();
    let mut parts: Vec<(FamilyType, Vec<TripleVertex>)> = Vec::new();

    let mut by_pair: BTreeMap<[u16; 2], usize> = BTreeMap::new();
    for t in &remaining {
        let [a, b, c] = t.elements();
        for p in [[a, b], [a, c], [b, c]] {
            *by_pair.entry(p).or_default() += 1;
        }
    }
    for (pair, count) in by_pair {
        if count < 3 {
            continue;
        }
        let (group, rest): (Vec<_>, Vec<_>) =
            remaining.into_iter().partition(|t| t.contains(pair[0]) && t.contains(pair[1]));
        remaining = rest;
        if group.len() >= 3 {
            parts.push((FamilyType::Type1 { pair }, group));
        } else {
            remaining.extend(group);
        }
    }

    // union-find over 2-element intersections
    let m = remaining.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..m {
        for j in (i + 1)..m {
            if remaining[i].intersection_size(&remaining[j]) == 2 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<TripleVertex>> = BTreeMap::new();
    for (i, &t) in remaining.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(t);
    }
    let mut singles = Vec::new();
    for (_, group) in groups {
        if group.len() == 1 {
            singles.push(group[0]);
            continue;
        }
        let sup = support(&group);
        if sup.len() != 4 {
            return Err(Error::Decomposition(format!("linked triples span {sup:?}, not a 4-set")));
        }
        parts.push((FamilyType::Type2 { quad: [sup[0], sup[1], sup[2], sup[3]] }, group));
    }
    if !singles.is_empty() {
        parts.push((FamilyType::Type3, singles));
    }

    let n = u.n();
    let mut out = Decomposition { parts: Vec::new(), supports: Vec::new() };
    for (ft, members) in parts {
        out.supports.push(support(&members));
        let idx: Vec<usize> = members.iter().map(|t| t.rank() as usize).collect();
        out.parts.push((ft, VertexSubset::from_indices(n, idx)?));
    }
    out.validate(u).map_err(Error::Decomposition)?;
    Ok(out)
}
