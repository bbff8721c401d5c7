//! Explicit permutation-group machinery for small symmetric groups:
//! closure, cosets, index computations, transitivity, subgroup-lattice
//! enumeration, and the named catalog of transitive groups used by the
//! identification pipeline.
//!
//! The symmetric and alternating groups of degree 6 through 10 are kept
//! symbolic (membership by parity, index by arithmetic) so nothing ever
//! materializes a 10!-element set.

use crate::arith::{binomial, factorial};
use num::rational::Ratio;
use num::{BigInt, BigRational};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

pub const MAX_DEGREE: usize = 10;
/// Explicit coset enumeration sweeps all of S_n; keep that to 8! at most.
pub const MAX_EXPLICIT_COSET_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    DegreeTooLarge { n: usize, max: usize },
    DegreeMismatch,
    EnumerationInfeasible { what: String, limit: String },
    DomainError(String),
    ParseError(String),
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::DegreeTooLarge { n, max } => {
                write!(f, "degree {} exceeds the supported maximum {}", n, max)
            }
            PermError::DegreeMismatch => write!(f, "permutation degrees do not match"),
            PermError::EnumerationInfeasible { what, limit } => {
                write!(f, "{} is not enumerable here (limit: {})", what, limit)
            }
            PermError::DomainError(msg) => write!(f, "{}", msg),
            PermError::ParseError(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for PermError {}

/// A permutation of {1, ..., n}, stored 0-based as the image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From a 0-based image vector.
    pub fn from_images(images: Vec<u8>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if (v as usize) >= n || seen[v as usize] {
                return Err(PermError::DomainError(
                    "image sequence is not a permutation".to_string(),
                ));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// (self * other)(i) = self(other(i)): `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Cycle type as a partition of n, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let cycles = self.cycle_type().len();
        (n - cycles) % 2 == 0
    }

    /// Parse cycle notation like "(1 2 3)(4 5)"; "()" is the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self, PermError> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "id" {
            return Ok(Permutation { images });
        }
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| PermError::ParseError(format!("expected '(' in {:?}", rest)))?;
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| PermError::ParseError(format!("unclosed cycle in {:?}", rest)))?
                + open;
            let body = &rest[open + 1..close];
            let pts: Result<Vec<usize>, PermError> = body
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| PermError::ParseError(format!("bad point {:?}", t)))
                })
                .collect();
            let pts = pts?;
            for &p in &pts {
                if p < 1 || p > n {
                    return Err(PermError::ParseError(format!(
                        "point {} outside 1..={}",
                        p, n
                    )));
                }
            }
            if pts.len() > 1 {
                let mut uniq = pts.clone();
                uniq.sort_unstable();
                uniq.dedup();
                if uniq.len() != pts.len() {
                    return Err(PermError::ParseError("repeated point in cycle".to_string()));
                }
                // cycle (a b c): a -> b -> c -> a, composed onto what we have
                let mut step: Vec<u8> = (0..n as u8).collect();
                for w in 0..pts.len() {
                    let from = pts[w] - 1;
                    let to = pts[(w + 1) % pts.len()] - 1;
                    step[from] = to as u8;
                }
                images = images.iter().map(|&i| step[i as usize]).collect();
            }
            rest = &rest[close + 1..];
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.apply(i);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum GroupRep {
    Explicit {
        elements: Vec<Permutation>,
        generators: Vec<Permutation>,
    },
    Symmetric,
    Alternating,
}

/// Subgroup of S_n with an explicit element set, or a symbolic marker for
/// S_n and A_n at degrees where materializing the elements is wasteful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    rep: GroupRep,
}

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        PermGroup {
            n,
            rep: GroupRep::Explicit {
                elements: vec![Permutation::identity(n)],
                generators: Vec::new(),
            },
        }
    }

    pub fn symmetric(n: usize) -> Result<Self, PermError> {
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge { n, max: MAX_DEGREE });
        }
        if n <= 5 {
            let gens = symmetric_generators(n);
            return Self::closure(n, &gens);
        }
        Ok(PermGroup {
            n,
            rep: GroupRep::Symmetric,
        })
    }

    pub fn alternating(n: usize) -> Result<Self, PermError> {
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge { n, max: MAX_DEGREE });
        }
        if n <= 5 {
            let gens = alternating_generators(n);
            return Self::closure(n, &gens);
        }
        Ok(PermGroup {
            n,
            rep: GroupRep::Alternating,
        })
    }

    /// Subgroup generated by the given permutations, as an explicit element
    /// set found by breadth-first closure.
    pub fn closure(n: usize, generators: &[Permutation]) -> Result<Self, PermError> {
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge { n, max: MAX_DEGREE });
        }
        for g in generators {
            if g.degree() != n {
                return Err(PermError::DegreeMismatch);
            }
        }
        let mut elements: BTreeSet<Permutation> = BTreeSet::new();
        let id = Permutation::identity(n);
        elements.insert(id.clone());
        let mut queue: VecDeque<Permutation> = VecDeque::new();
        queue.push_back(id);
        while let Some(w) = queue.pop_front() {
            for g in generators {
                let next = w.compose(g);
                if elements.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let gens = if generators.is_empty() {
            Vec::new()
        } else {
            generators.to_vec()
        };
        Ok(PermGroup {
            n,
            rep: GroupRep::Explicit {
                elements: elements.into_iter().collect(),
                generators: gens,
            },
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        match &self.rep {
            GroupRep::Explicit { elements, .. } => elements.len() as u64,
            GroupRep::Symmetric => factorial(self.n as u64),
            GroupRep::Alternating => factorial(self.n as u64) / 2,
        }
    }

    pub fn index_in_sn(&self) -> u64 {
        factorial(self.n as u64) / self.order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.n {
            return false;
        }
        match &self.rep {
            GroupRep::Explicit { elements, .. } => elements.binary_search(p).is_ok(),
            GroupRep::Symmetric => true,
            GroupRep::Alternating => p.is_even(),
        }
    }

    pub fn is_symmetric_marker(&self) -> bool {
        matches!(self.rep, GroupRep::Symmetric)
    }

    pub fn is_alternating_marker(&self) -> bool {
        matches!(self.rep, GroupRep::Alternating)
    }

    /// Explicit elements; symbolic groups are materialized up to degree 8.
    pub fn elements(&self) -> Result<Vec<Permutation>, PermError> {
        match &self.rep {
            GroupRep::Explicit { elements, .. } => Ok(elements.clone()),
            GroupRep::Symmetric | GroupRep::Alternating => {
                if self.n > MAX_EXPLICIT_COSET_DEGREE {
                    return Err(PermError::EnumerationInfeasible {
                        what: format!("materializing a symbolic group of degree {}", self.n),
                        limit: format!("degree {}", MAX_EXPLICIT_COSET_DEGREE),
                    });
                }
                let even_only = matches!(self.rep, GroupRep::Alternating);
                Ok(all_permutations(self.n)
                    .into_iter()
                    .filter(|p| !even_only || p.is_even())
                    .collect())
            }
        }
    }

    pub fn generators(&self) -> Vec<Permutation> {
        match &self.rep {
            GroupRep::Explicit { generators, .. } => generators.clone(),
            GroupRep::Symmetric => symmetric_generators(self.n),
            GroupRep::Alternating => alternating_generators(self.n),
        }
    }

    /// Single orbit test on {1, ..., n} using the generators.
    pub fn is_transitive(&self) -> bool {
        match &self.rep {
            GroupRep::Symmetric => self.n >= 1,
            GroupRep::Alternating => self.n != 2,
            GroupRep::Explicit { .. } => {
                let gens = self.generators_or_elements();
                let mut seen = vec![false; self.n];
                let mut stack = vec![0usize];
                seen[0] = true;
                let mut count = 1;
                while let Some(i) = stack.pop() {
                    for g in &gens {
                        let j = g.apply(i);
                        if !seen[j] {
                            seen[j] = true;
                            count += 1;
                            stack.push(j);
                        }
                    }
                }
                count == self.n
            }
        }
    }

    /// Points (1-based) fixed by every element.
    pub fn fixed_points(&self) -> Vec<usize> {
        match &self.rep {
            GroupRep::Symmetric => {
                if self.n == 1 {
                    vec![1]
                } else {
                    Vec::new()
                }
            }
            GroupRep::Alternating => {
                if self.n <= 2 {
                    (1..=self.n).collect()
                } else {
                    Vec::new()
                }
            }
            GroupRep::Explicit { .. } => {
                let gens = self.generators_or_elements();
                (0..self.n)
                    .filter(|&i| gens.iter().all(|g| g.apply(i) == i))
                    .map(|i| i + 1)
                    .collect()
            }
        }
    }

    fn generators_or_elements(&self) -> Vec<Permutation> {
        match &self.rep {
            GroupRep::Explicit {
                elements,
                generators,
            } => {
                if generators.is_empty() {
                    elements.clone()
                } else {
                    generators.clone()
                }
            }
            _ => self.generators(),
        }
    }

    /// Set of cycle types over all elements.
    pub fn cycle_types(&self) -> Result<BTreeSet<Vec<usize>>, PermError> {
        Ok(self
            .elements()?
            .iter()
            .map(|p| p.cycle_type())
            .collect())
    }

    pub fn is_contained_in_alternating(&self) -> bool {
        match &self.rep {
            GroupRep::Symmetric => self.n <= 1,
            GroupRep::Alternating => true,
            GroupRep::Explicit { elements, .. } => elements.iter().all(|p| p.is_even()),
        }
    }
}

fn symmetric_generators(n: usize) -> Vec<Permutation> {
    if n <= 1 {
        return Vec::new();
    }
    let transposition = {
        let mut im: Vec<u8> = (0..n as u8).collect();
        im.swap(0, 1);
        Permutation::from_images(im).unwrap()
    };
    let cycle = {
        let im: Vec<u8> = (1..n as u8).chain(std::iter::once(0)).collect();
        Permutation::from_images(im).unwrap()
    };
    vec![transposition, cycle]
}

fn alternating_generators(n: usize) -> Vec<Permutation> {
    if n <= 2 {
        return Vec::new();
    }
    let three_cycle = Permutation::parse_cycles(n, "(1 2 3)").unwrap();
    if n == 3 {
        return vec![three_cycle];
    }
    // (1 2 3) together with an n-cycle (n odd) or (n-1)-cycle fixing 1 (n even)
    let big = if n % 2 == 1 {
        let im: Vec<u8> = (1..n as u8).chain(std::iter::once(0)).collect();
        Permutation::from_images(im).unwrap()
    } else {
        let mut im: Vec<u8> = (0..n as u8).collect();
        for i in 1..n {
            im[i] = if i + 1 < n { (i + 1) as u8 } else { 1u8 };
        }
        Permutation::from_images(im).unwrap()
    };
    vec![three_cycle, big]
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(factorial(n as u64) as usize);
    let mut images: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        if !next_permutation(&mut images) {
            break;
        }
    }
    out
}

fn next_permutation(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Index m = |S_n / G| and the exponent increment 1/m, exact.
pub fn index_and_delta(g: &PermGroup) -> (u64, Ratio<u64>) {
    let m = g.index_in_sn();
    (m, Ratio::new(1, m))
}

/// Left coset representatives of G in S_n, each the lexicographically least
/// element of its coset, identity first.
#[derive(Clone, Debug)]
pub struct CosetSystem {
    pub group: PermGroup,
    pub representatives: Vec<Permutation>,
}

pub fn left_coset_reps(g: &PermGroup) -> Result<CosetSystem, PermError> {
    let n = g.degree();
    match &g.rep {
        GroupRep::Symmetric => Ok(CosetSystem {
            group: g.clone(),
            representatives: vec![Permutation::identity(n)],
        }),
        GroupRep::Alternating => {
            let mut swap = Permutation::identity(n);
            if n >= 2 {
                let mut im: Vec<u8> = (0..n as u8).collect();
                im.swap(0, 1);
                swap = Permutation::from_images(im).unwrap();
            }
            let reps = if n >= 2 {
                vec![Permutation::identity(n), swap]
            } else {
                vec![Permutation::identity(n)]
            };
            Ok(CosetSystem {
                group: g.clone(),
                representatives: reps,
            })
        }
        GroupRep::Explicit { elements, .. } => {
            // the full symmetric and alternating groups keep their fixed
            // representative choice even when materialized explicitly
            let full = factorial(n as u64);
            if g.order() == full {
                return Ok(CosetSystem {
                    group: g.clone(),
                    representatives: vec![Permutation::identity(n)],
                });
            }
            if n >= 2 && g.order() == full / 2 && g.is_contained_in_alternating() {
                let mut im: Vec<u8> = (0..n as u8).collect();
                im.swap(0, 1);
                return Ok(CosetSystem {
                    group: g.clone(),
                    representatives: vec![
                        Permutation::identity(n),
                        Permutation::from_images(im).unwrap(),
                    ],
                });
            }
            if n > MAX_EXPLICIT_COSET_DEGREE {
                return Err(PermError::EnumerationInfeasible {
                    what: format!("coset enumeration at degree {}", n),
                    limit: format!(
                        "degree {} for explicit groups; S_n and A_n are special-cased",
                        MAX_EXPLICIT_COSET_DEGREE
                    ),
                });
            }
            let total = factorial(n as u64) as usize;
            let mut covered = vec![false; total];
            let mut reps = Vec::with_capacity(total / elements.len());
            let mut images: Vec<u8> = (0..n as u8).collect();
            loop {
                let sigma = Permutation {
                    images: images.clone(),
                };
                let r = lehmer_rank(&sigma);
                if !covered[r] {
                    for h in elements {
                        covered[lehmer_rank(&sigma.compose(h))] = true;
                    }
                    reps.push(sigma);
                }
                if !next_permutation(&mut images) {
                    break;
                }
            }
            Ok(CosetSystem {
                group: g.clone(),
                representatives: reps,
            })
        }
    }
}

fn lehmer_rank(p: &Permutation) -> usize {
    let n = p.degree();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller_right = (i + 1..n)
            .filter(|&j| p.images[j] < p.images[i])
            .count();
        rank = rank * (n - i) + smaller_right;
    }
    rank
}

/// e(n) = 2 / C(n, floor(n/2)), defined for n >= 9.
pub fn e_n(n: usize) -> Result<BigRational, PermError> {
    if n < 9 {
        return Err(PermError::DomainError(format!(
            "e(n) requires n >= 9, got {}",
            n
        )));
    }
    let denom = binomial(n as u64, (n / 2) as u64);
    Ok(BigRational::new(BigInt::from(2), denom))
}

/// Half of the central binomial coefficient, the index threshold that
/// transitive groups other than S_n and A_n satisfy for n >= 9.
pub fn half_central_binomial(n: usize) -> BigRational {
    BigRational::new(binomial(n as u64, (n / 2) as u64), BigInt::from(2))
}

/// Orders of the conjugacy classes of transitive subgroups, one entry per
/// class, sorted ascending. At degree 4 this is [4, 4, 8, 12, 24].
pub fn transitive_conjugacy_class_orders(n: usize) -> Result<Vec<u64>, PermError> {
    let subs = enumerate_subgroups(n)?;
    let all = all_permutations(n);
    let mut remaining: BTreeSet<Vec<Permutation>> = subs
        .iter()
        .filter(|g| g.is_transitive())
        .map(|g| g.elements().unwrap())
        .collect();
    let mut orders = Vec::new();
    while let Some(rep) = remaining.iter().next().cloned() {
        orders.push(rep.len() as u64);
        for g in &all {
            let gi = g.inverse();
            let mut conj: Vec<Permutation> =
                rep.iter().map(|h| g.compose(h).compose(&gi)).collect();
            conj.sort();
            remaining.remove(&conj);
        }
    }
    orders.sort_unstable();
    Ok(orders)
}

pub const MAX_SUBGROUP_ENUMERATION_DEGREE: usize = 5;

/// All subgroups of S_n (n <= 5), by saturating closure: every cyclic
/// subgroup is a seed, and single-element adjunctions are closed until no
/// new subgroup appears.
pub fn enumerate_subgroups(n: usize) -> Result<Vec<PermGroup>, PermError> {
    if n > MAX_SUBGROUP_ENUMERATION_DEGREE {
        return Err(PermError::EnumerationInfeasible {
            what: format!("subgroup lattice of S_{}", n),
            limit: format!("degree {}", MAX_SUBGROUP_ENUMERATION_DEGREE),
        });
    }
    let all = all_permutations(n);
    let mut seen: BTreeMap<Vec<Permutation>, Vec<Permutation>> = BTreeMap::new();
    let mut frontier: Vec<(Vec<Permutation>, Vec<Permutation>)> = Vec::new();
    for g in &all {
        let grp = PermGroup::closure(n, std::slice::from_ref(g))?;
        let elems = grp.elements()?;
        let gens = if g.is_identity() { vec![] } else { vec![g.clone()] };
        if seen.insert(elems.clone(), gens.clone()).is_none() {
            frontier.push((elems, gens));
        }
    }
    while let Some((elems, gens)) = frontier.pop() {
        for g in &all {
            if elems.binary_search(g).is_ok() {
                continue;
            }
            let mut new_gens = gens.clone();
            new_gens.push(g.clone());
            let grp = PermGroup::closure(n, &new_gens)?;
            let new_elems = grp.elements()?;
            if !seen.contains_key(&new_elems) {
                seen.insert(new_elems.clone(), new_gens.clone());
                frontier.push((new_elems, new_gens));
            }
        }
    }
    let mut out = Vec::with_capacity(seen.len());
    for (elems, gens) in seen {
        out.push(PermGroup {
            n,
            rep: GroupRep::Explicit {
                elements: elems,
                generators: gens,
            },
        });
    }
    out.sort_by_key(|g| (g.order(), g.elements().unwrap()));
    Ok(out)
}

/// One row per transitive subgroup other than A_n and S_n.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TransitiveIndexRow {
    pub order: u64,
    pub index: u64,
    pub has_fixed_point: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct TransitiveIndexReport {
    pub n: usize,
    pub total_subgroups: usize,
    pub transitive_orders: Vec<u64>,
    pub rows: Vec<TransitiveIndexRow>,
    pub min_index: Option<u64>,
    /// C(n, floor(n/2)) / 2 as a float, for display next to the indices.
    pub half_central_binomial: f64,
    pub note: String,
}

pub fn min_transitive_index_report(n: usize) -> Result<TransitiveIndexReport, PermError> {
    let subgroups = enumerate_subgroups(n)?;
    let total = subgroups.len();
    let full_order = factorial(n as u64);
    let mut transitive_orders = Vec::new();
    let mut rows = Vec::new();
    for g in &subgroups {
        if !g.is_transitive() {
            continue;
        }
        transitive_orders.push(g.order());
        let is_sn = g.order() == full_order;
        let is_an = n >= 3 && g.order() == full_order / 2 && g.is_contained_in_alternating();
        if is_sn || is_an {
            continue;
        }
        rows.push(TransitiveIndexRow {
            order: g.order(),
            index: g.index_in_sn(),
            has_fixed_point: !g.fixed_points().is_empty(),
        });
    }
    transitive_orders.sort_unstable();
    let min_index = rows.iter().map(|r| r.index).min();
    let hcb = binomial(n as u64, (n / 2) as u64);
    let hcb_f = hcb
        .to_string()
        .parse::<f64>()
        .map(|v| v / 2.0)
        .unwrap_or(f64::NAN);
    Ok(TransitiveIndexReport {
        n,
        total_subgroups: total,
        transitive_orders,
        rows,
        min_index,
        half_central_binomial: hcb_f,
        note: "index lower bounds of this shape are only claimed for n >= 9; \
               small degrees are reported for observation, not asserted"
            .to_string(),
    })
}

// ---------------------------------------------------------------------------
// catalog of named transitive groups, degrees 1 through 5
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub name: &'static str,
    pub group: PermGroup,
    pub cycle_types: BTreeSet<Vec<usize>>,
    pub in_alternating: bool,
}

static CATALOG: OnceLock<BTreeMap<usize, Vec<CatalogGroup>>> = OnceLock::new();

/// Named transitive subgroups of S_n for n <= 5, ordered by ascending order.
pub fn catalog(n: usize) -> &'static [CatalogGroup] {
    let map = CATALOG.get_or_init(build_catalog);
    map.get(&n).map(|v| v.as_slice()).unwrap_or(&[])
}

/// Look up a catalog group by name; "A3" is accepted for "C3".
pub fn catalog_lookup(n: usize, name: &str) -> Option<&'static CatalogGroup> {
    let canonical = match (n, name) {
        (3, "A3") => "C3",
        _ => name,
    };
    catalog(n).iter().find(|c| c.name == canonical)
}

fn build_catalog() -> BTreeMap<usize, Vec<CatalogGroup>> {
    let defs: &[(usize, &str, &[&str])] = &[
        (1, "S1", &[]),
        (2, "S2", &["(1 2)"]),
        (3, "C3", &["(1 2 3)"]),
        (3, "S3", &["(1 2)", "(1 2 3)"]),
        (4, "C4", &["(1 2 3 4)"]),
        (4, "V4", &["(1 2)(3 4)", "(1 3)(2 4)"]),
        (4, "D4", &["(1 2 3 4)", "(1 3)"]),
        (4, "A4", &["(1 2 3)", "(1 2)(3 4)"]),
        (4, "S4", &["(1 2)", "(1 2 3 4)"]),
        (5, "C5", &["(1 2 3 4 5)"]),
        (5, "D5", &["(1 2 3 4 5)", "(2 5)(3 4)"]),
        (5, "F20", &["(1 2 3 4 5)", "(2 3 5 4)"]),
        (5, "A5", &["(1 2 3)", "(1 2 3 4 5)"]),
        (5, "S5", &["(1 2)", "(1 2 3 4 5)"]),
    ];
    let mut map: BTreeMap<usize, Vec<CatalogGroup>> = BTreeMap::new();
    for &(n, name, gens) in defs {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(n, s).expect("catalog generator"))
            .collect();
        let group = PermGroup::closure(n, &gens).expect("catalog closure");
        let cycle_types = group.cycle_types().expect("catalog cycle types");
        let in_alternating = group.is_contained_in_alternating();
        map.entry(n).or_default().push(CatalogGroup {
            name,
            group,
            cycle_types,
            in_alternating,
        });
    }
    for groups in map.values_mut() {
        groups.sort_by_key(|c| (c.group.order(), c.name));
    }
    map
}

/// Parse a generator list in the CLI format: semicolon-separated cycle
/// strings, or a catalog name.
pub fn parse_group(n: usize, spec: &str) -> Result<PermGroup, PermError> {
    let spec = spec.trim();
    if !spec.contains('(') {
        if spec.eq_ignore_ascii_case("sn") || spec == format!("S{}", n) {
            return PermGroup::symmetric(n);
        }
        if spec.eq_ignore_ascii_case("an") || spec == format!("A{}", n) {
            return PermGroup::alternating(n);
        }
        if let Some(cat) = catalog_lookup(n, spec) {
            return Ok(cat.group.clone());
        }
        return Err(PermError::ParseError(format!(
            "unknown group name {:?} at degree {}",
            spec, n
        )));
    }
    let gens: Result<Vec<Permutation>, PermError> = spec
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Permutation::parse_cycles(n, s))
        .collect();
    PermGroup::closure(n, &gens?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_cycles() {
        let p = Permutation::parse_cycles(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 4);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert!(!p.is_even());
    }

    #[test]
    fn closure_orders() {
        let c3 = PermGroup::closure(3, &[Permutation::parse_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        assert_eq!(c3.order(), 3);
        let s3 = PermGroup::closure(
            3,
            &[
                Permutation::parse_cycles(3, "(1 2)").unwrap(),
                Permutation::parse_cycles(3, "(1 2 3)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        let d4 = PermGroup::closure(
            4,
            &[
                Permutation::parse_cycles(4, "(1 2 3 4)").unwrap(),
                Permutation::parse_cycles(4, "(1 3)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(d4.order(), 8);
        assert!(PermGroup::closure(11, &[]).is_err());
    }

    #[test]
    fn index_and_delta_values() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert_eq!(index_and_delta(&s4), (1, Ratio::new(1, 1)));
        let a3 = PermGroup::alternating(3).unwrap();
        assert_eq!(index_and_delta(&a3), (2, Ratio::new(1, 2)));
        let d4 = catalog_lookup(4, "D4").unwrap();
        assert_eq!(index_and_delta(&d4.group), (3, Ratio::new(1, 3)));
    }

    #[test]
    fn coset_representatives() {
        let a4 = PermGroup::alternating(4).unwrap();
        let cs = left_coset_reps(&a4).unwrap();
        assert_eq!(cs.representatives.len(), 2);
        assert!(cs.representatives[0].is_identity());
        assert_eq!(cs.representatives[1].to_string(), "(1 2)");

        let trivial = PermGroup::trivial(3);
        let cs = left_coset_reps(&trivial).unwrap();
        assert_eq!(cs.representatives.len(), 6);

        let d4 = catalog_lookup(4, "D4").unwrap();
        let cs = left_coset_reps(&d4.group).unwrap();
        assert_eq!(cs.representatives.len(), 3);
        assert!(cs.representatives[0].is_identity());
    }

    #[test]
    fn cosets_tile_the_symmetric_group() {
        for name in ["C4", "V4", "D4", "A4", "S4"] {
            let g = &catalog_lookup(4, name).unwrap().group;
            let cs = left_coset_reps(g).unwrap();
            let elements = g.elements().unwrap();
            let mut seen = BTreeSet::new();
            for rep in &cs.representatives {
                for h in &elements {
                    assert!(seen.insert(rep.compose(h)), "overlap in {}", name);
                }
            }
            assert_eq!(seen.len(), 24, "cosets of {} do not tile S_4", name);
            // representatives are lexicographically least in their coset,
            // except for the fixed choice {id, (1 2)} at A_n
            if name != "A4" && name != "S4" {
                for rep in &cs.representatives {
                    for h in &elements {
                        assert!(rep <= &rep.compose(h));
                    }
                }
            }
        }
    }

    #[test]
    fn transitivity_and_fixed_points() {
        let c3 = &catalog_lookup(3, "C3").unwrap().group;
        assert!(c3.is_transitive());
        assert!(c3.fixed_points().is_empty());
        let g = PermGroup::closure(3, &[Permutation::parse_cycles(3, "(1 2)").unwrap()]).unwrap();
        assert!(!g.is_transitive());
        assert_eq!(g.fixed_points(), vec![3]);
        let d4 = &catalog_lookup(4, "D4").unwrap().group;
        assert!(d4.is_transitive());
    }

    #[test]
    fn e_n_values() {
        assert_eq!(
            e_n(9).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(63))
        );
        assert_eq!(
            e_n(10).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(126))
        );
        assert!(e_n(8).is_err());
        for n in 9..=18 {
            assert!(e_n(n + 2).unwrap() < e_n(n).unwrap());
        }
    }

    #[test]
    fn subgroup_lattice_of_s3() {
        let subs = enumerate_subgroups(3).unwrap();
        assert_eq!(subs.len(), 6);
        let transitive: Vec<u64> = subs
            .iter()
            .filter(|g| g.is_transitive())
            .map(|g| g.order())
            .collect();
        assert_eq!(transitive, vec![3, 6]);
    }

    #[test]
    fn subgroup_lattice_of_s4() {
        let subs = enumerate_subgroups(4).unwrap();
        assert_eq!(subs.len(), 30);
        let mut transitive: Vec<u64> = subs
            .iter()
            .filter(|g| g.is_transitive())
            .map(|g| g.order())
            .collect();
        transitive.sort_unstable();
        // three conjugate C4s, the normal V4, three conjugate D4s, A4, S4
        assert_eq!(transitive, vec![4, 4, 4, 4, 8, 8, 8, 12, 24]);
        let class_orders = transitive_conjugacy_class_orders(4).unwrap();
        assert_eq!(class_orders, vec![4, 4, 8, 12, 24]);
    }

    #[test]
    fn lagrange_and_closure_reproduction() {
        for n in 2..=4 {
            let subs = enumerate_subgroups(n).unwrap();
            for g in &subs {
                assert_eq!(factorial(n as u64) % g.order(), 0);
                let regenerated = PermGroup::closure(n, &g.generators()).unwrap();
                assert_eq!(regenerated.elements().unwrap(), g.elements().unwrap());
            }
        }
    }

    #[test]
    fn fixed_point_subgroups_have_large_index() {
        // any subgroup fixing a point sits in a point stabilizer
        for n in 3..=5 {
            let subs = enumerate_subgroups(n).unwrap();
            let full = factorial(n as u64);
            for g in &subs {
                let is_sn = g.order() == full;
                let is_an = g.order() == full / 2 && g.is_contained_in_alternating();
                if is_sn || is_an {
                    continue;
                }
                if !g.fixed_points().is_empty() {
                    assert!(g.index_in_sn() >= n as u64);
                }
            }
        }
    }

    #[test]
    fn catalog_is_validated_by_enumeration() {
        for n in 3..=5 {
            let subs = enumerate_subgroups(n).unwrap();
            let transitive: BTreeSet<Vec<Permutation>> = subs
                .iter()
                .filter(|g| g.is_transitive())
                .map(|g| g.elements().unwrap())
                .collect();
            // every catalog group is one of the enumerated transitive subgroups
            for c in catalog(n) {
                assert!(
                    transitive.contains(&c.group.elements().unwrap()),
                    "{} not found at degree {}",
                    c.name,
                    n
                );
            }
            // and every order arising is represented by a catalog name
            let catalog_orders: BTreeSet<u64> =
                catalog(n).iter().map(|c| c.group.order()).collect();
            let enumerated_orders: BTreeSet<u64> = subs
                .iter()
                .filter(|g| g.is_transitive())
                .map(|g| g.order())
                .collect();
            assert_eq!(catalog_orders, enumerated_orders, "degree {}", n);
        }
    }

    #[test]
    fn min_transitive_index_at_degree_5() {
        let report = min_transitive_index_report(5).unwrap();
        assert_eq!(report.min_index, Some(6));
        let orders: BTreeSet<u64> = report.transitive_orders.iter().copied().collect();
        assert_eq!(orders, [5u64, 10, 20, 60, 120].into_iter().collect());
    }

    #[test]
    fn symbolic_markers_behave() {
        let s10 = PermGroup::symmetric(10).unwrap();
        assert_eq!(s10.order(), 3628800);
        assert_eq!(s10.index_in_sn(), 1);
        let a10 = PermGroup::alternating(10).unwrap();
        assert_eq!(a10.index_in_sn(), 2);
        let odd = Permutation::parse_cycles(10, "(1 2)").unwrap();
        assert!(s10.contains(&odd));
        assert!(!a10.contains(&odd));
        assert!(a10.elements().is_err());
        let reps = left_coset_reps(&a10).unwrap();
        assert_eq!(reps.representatives.len(), 2);
    }

    #[test]
    fn group_parsing() {
        let g = parse_group(4, "(1 2 3 4);(1 3)").unwrap();
        assert_eq!(g.order(), 8);
        let g = parse_group(3, "A3").unwrap();
        assert_eq!(g.order(), 3);
        let g = parse_group(5, "F20").unwrap();
        assert_eq!(g.order(), 20);
        assert!(parse_group(4, "Q8").is_err());
    }
}
