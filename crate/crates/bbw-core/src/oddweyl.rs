//! Odd-root combinatorics for the diagonal reflection group: the odd dot
//! action `w . lambda = w(lambda + rho_1) - rho_1`, the inverted-root sets
//! `Phi(w) = w(Phi_1^-) n Phi_1^+`, and exhaustive verification of their
//! defining properties.
//!
//! The machinery applies to the families where the diagonal simple
//! reflections `s_j = s_{j,(1)} s_{j,(2)}` and the distinguished odd roots
//! `beta_j`, `gamma_j` are defined: `gl(n|n)` (standing in for the whole
//! A(n|n) column) and `osp(2n+1|2n)`; for `q(n)` the odd and even dot
//! actions coincide and the same element machinery is reused with
//! single-factor generators.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::superalg::{catalog_lookup, Family, Superalgebra};
use crate::weight::Weight;
use crate::{rat, ratq, Error, Rat};

/// A generator action: a signed permutation of the concatenated weight
/// coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CoordMap {
    /// `e_i` maps to `sign[i] * e_{perm[i]}`.
    pub perm: Vec<usize>,
    pub sign: Vec<i8>,
}

impl CoordMap {
    fn identity(d: usize) -> Self {
        CoordMap {
            perm: (0..d).collect(),
            sign: vec![1; d],
        }
    }

    fn swap(d: usize, a: usize, b: usize) -> Self {
        let mut m = CoordMap::identity(d);
        m.perm[a] = b;
        m.perm[b] = a;
        m
    }

    fn negate(d: usize, idxs: &[usize]) -> Self {
        let mut m = CoordMap::identity(d);
        for &i in idxs {
            m.sign[i] = -1;
        }
        m
    }

    /// `self` after `other`: `(self o other)(v) = self(other(v))`.
    fn compose(&self, other: &CoordMap) -> CoordMap {
        let d = self.perm.len();
        let mut out = CoordMap::identity(d);
        for i in 0..d {
            let mid = other.perm[i];
            out.perm[i] = self.perm[mid];
            out.sign[i] = other.sign[i] * self.sign[mid];
        }
        out
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![rat(0); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[self.perm[i]] = rat(self.sign[i] as i64) * *x;
        }
        out
    }
}

/// One element of the diagonal reflection group, with a reduced word.
#[derive(Clone, Debug)]
pub struct GroupElement {
    /// Generator indices, leftmost factor first.
    pub word: Vec<usize>,
    pub action: CoordMap,
}

impl GroupElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// Context for the odd dot action of one catalog entry.
pub struct OddDotContext {
    pub spec: Superalgebra,
    /// Half-sum of the positive odd roots, concatenated coordinates.
    pub rho1: Vec<Rat>,
    /// Generator actions on the concatenated coordinates.
    pub generators: Vec<CoordMap>,
    /// Distinguished odd roots flipped by each generator (empty for type Q).
    pub beta: Vec<Weight>,
    pub gamma: Vec<Weight>,
    /// All group elements with reduced words, by breadth-first search.
    pub elements: Vec<GroupElement>,
}

fn concat(w: &Weight) -> Vec<Rat> {
    w.concat()
}

fn unconcat(spec: &Superalgebra, v: &[Rat]) -> Weight {
    let mut slices = Vec::new();
    let mut at = 0;
    for f in &spec.factors {
        let len = f.kind.coords();
        slices.push(v[at..at + len].to_vec());
        at += len;
    }
    Weight::new(slices)
}

impl OddDotContext {
    /// Build the context for `gl(n|n)`, `osp(2n+1|2n)`, or `q(n)`.
    pub fn new(spec: Superalgebra) -> Result<Self, Error> {
        let dim: usize = spec.factors.iter().map(|f| f.kind.coords()).sum();
        let (generators, beta, gamma): (Vec<CoordMap>, Vec<Weight>, Vec<Weight>) =
            match spec.family {
                Family::Gl | Family::Sl | Family::Psl if spec.m == spec.n && spec.m >= 2 => {
                    let n = spec.m;
                    let mut gens = Vec::new();
                    let mut beta = Vec::new();
                    let mut gamma = Vec::new();
                    for j in 0..n - 1 {
                        let s1 = CoordMap::swap(dim, j, j + 1);
                        let s2 = CoordMap::swap(dim, n + j, n + j + 1);
                        gens.push(s1.compose(&s2));
                        // beta_j = eps_j - delta_{j+1}, gamma_j = delta_j - eps_{j+1}
                        beta.push(two_slice(n, j, 1, j + 1, -1));
                        gamma.push(two_slice(n, j + 1, -1, j, 1));
                    }
                    (gens, beta, gamma)
                }
                Family::OspOdd if spec.m == spec.n => {
                    let n = spec.m;
                    let mut gens = Vec::new();
                    let mut beta = Vec::new();
                    let mut gamma = Vec::new();
                    for j in 0..n - 1 {
                        let s1 = CoordMap::swap(dim, j, j + 1);
                        let s2 = CoordMap::swap(dim, n + j, n + j + 1);
                        gens.push(s1.compose(&s2));
                        beta.push(two_slice(n, j, 1, j + 1, -1));
                        gamma.push(two_slice(n, j + 1, -1, j, 1));
                    }
                    // s_n flips the last coordinate of both factors
                    gens.push(CoordMap::negate(dim, &[n - 1, 2 * n - 1]));
                    // beta_n = delta_n, gamma_n = eps_n + delta_n
                    beta.push(Weight::new(vec![vec![rat(0); n], unit(n, n - 1)]));
                    gamma.push(Weight::new(vec![unit(n, n - 1), unit(n, n - 1)]));
                    (gens, beta, gamma)
                }
                Family::Q | Family::Psq if spec.m >= 2 => {
                    let n = spec.m;
                    let gens = (0..n - 1).map(|j| CoordMap::swap(dim, j, j + 1)).collect();
                    (gens, Vec::new(), Vec::new())
                }
                _ => {
                    return Err(Error::UnsupportedParams(format!(
                        "odd dot context not defined for {}",
                        spec.name
                    )))
                }
            };
        let rho1: Vec<Rat> = {
            let sum = Weight::sum(&spec.factors, spec.pos_roots.iter());
            concat(&sum.scale(ratq(1, 2)))
        };
        let elements = enumerate_elements(dim, &generators)?;
        let ctx = OddDotContext {
            spec,
            rho1,
            generators,
            beta,
            gamma,
            elements,
        };
        ctx.check_distinguished_roots()?;
        Ok(ctx)
    }

    /// Constructor invariants: `s_j` carries the pair `{beta_j, gamma_j}`
    /// onto `{-beta_j, -gamma_j}` (for the swap generators the two roots
    /// trade places under negation) and keeps every other positive odd
    /// root positive.
    fn check_distinguished_roots(&self) -> Result<(), Error> {
        let pos: BTreeSet<Vec<Rat>> = self.spec.pos_roots.iter().map(concat).collect();
        for (j, g) in self.generators.iter().enumerate() {
            if self.beta.is_empty() {
                break;
            }
            let b = concat(&self.beta[j]);
            let c = concat(&self.gamma[j]);
            if !pos.contains(&b) || !pos.contains(&c) {
                return Err(Error::InvariantViolation(format!(
                    "{}: distinguished roots for s_{} are not positive odd roots",
                    self.spec.name,
                    j + 1
                )));
            }
            let nb: Vec<Rat> = b.iter().map(|x| -x).collect();
            let nc: Vec<Rat> = c.iter().map(|x| -x).collect();
            let mut image = vec![g.apply(&b), g.apply(&c)];
            let mut expect = vec![nb, nc];
            image.sort();
            expect.sort();
            if image != expect {
                return Err(Error::InvariantViolation(format!(
                    "{}: s_{} does not carry its distinguished pair onto the negatives",
                    self.spec.name,
                    j + 1
                )));
            }
            for root in &pos {
                if *root == b || *root == c {
                    continue;
                }
                if !pos.contains(&g.apply(root)) {
                    return Err(Error::InvariantViolation(format!(
                        "{}: s_{} moves a third positive odd root out of the positive set",
                        self.spec.name,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// The odd dot action `w . lambda = w(lambda + rho_1) - rho_1`.
    pub fn odd_dot(&self, w: &GroupElement, lambda: &Weight) -> Weight {
        let mut v = concat(lambda);
        for (x, r) in v.iter_mut().zip(&self.rho1) {
            *x += r;
        }
        let moved = w.action.apply(&v);
        let out: Vec<Rat> = moved.iter().zip(&self.rho1).map(|(x, r)| x - r).collect();
        unconcat(&self.spec, &out)
    }

    /// `Phi(w) = w(Phi_1^-) n Phi_1^+`, computed from the definition.
    pub fn phi_of_w(&self, w: &GroupElement) -> Vec<Weight> {
        let pos: BTreeSet<Vec<Rat>> = self.spec.pos_roots.iter().map(concat).collect();
        let mut out = Vec::new();
        for neg in &self.spec.neg_roots {
            let image = w.action.apply(&concat(neg));
            if pos.contains(&image) {
                out.push(unconcat(&self.spec, &image));
            }
        }
        out.sort();
        out
    }

    /// The element encoded by a word (identity for the empty word).
    pub fn element_of_word(&self, word: &[usize]) -> GroupElement {
        let dim = self.rho1.len();
        let mut action = CoordMap::identity(dim);
        for &j in word.iter().rev() {
            action = self.generators[j].compose(&action);
        }
        GroupElement {
            word: word.to_vec(),
            action,
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![rat(0); n];
    v[i] = rat(1);
    v
}

/// Weight with entry `c1` at `i1` of the first slice and `c2` at `i2` of
/// the second slice (both slices of length `n`).
fn two_slice(n: usize, i1: usize, c1: i64, i2: usize, c2: i64) -> Weight {
    let mut a = vec![rat(0); n];
    let mut b = vec![rat(0); n];
    a[i1] = rat(c1);
    b[i2] = rat(c2);
    Weight::new(vec![a, b])
}

/// Breadth-first enumeration; word length is the Coxeter length over the
/// generating set.
fn enumerate_elements(dim: usize, generators: &[CoordMap]) -> Result<Vec<GroupElement>, Error> {
    let mut seen: BTreeSet<CoordMap> = BTreeSet::new();
    let id = CoordMap::identity(dim);
    seen.insert(id.clone());
    let mut out = vec![GroupElement {
        word: Vec::new(),
        action: id,
    }];
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for el in &frontier {
            for (j, g) in generators.iter().enumerate() {
                let action = g.compose(&el.action);
                if seen.insert(action.clone()) {
                    let mut word = vec![j];
                    word.extend(&el.word);
                    next.push(GroupElement { word, action });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
        if out.len() > 1_000_000 {
            return Err(Error::GroupTooLarge(out.len() as u128));
        }
    }
    Ok(out)
}

/// Outcome of the exhaustive sweep over all four parts of the
/// inverted-root-set proposition.
#[derive(Clone, Debug)]
pub struct PropositionReport {
    pub algebra: String,
    pub group_order: usize,
    pub checked: usize,
}

/// For every `w` in the group check: (a) `|Phi(w)| = 2 l(w)`; (b)
/// `w . 0 = -rho(Phi(w))`; (c) the reduced-word formula rebuilds `Phi(w)`;
/// (d) `J = Phi(w)` is the unique subset of the positive odd roots with
/// `-rho(J) = w . 0`.
pub fn verify_phiw_proposition(ctx: &OddDotContext) -> Result<PropositionReport, Error> {
    if ctx.beta.is_empty() {
        return Err(Error::UnsupportedParams(format!(
            "{}: no distinguished odd roots in this family",
            ctx.spec.name
        )));
    }
    let zero = Weight::zero_like(&ctx.spec.factors);
    for w in &ctx.elements {
        let phi = ctx.phi_of_w(w);
        // (a)
        if phi.len() != 2 * w.length() {
            return Err(Error::PropositionViolated(format!(
                "{}: |Phi(w)| = {} but 2 l(w) = {} at w = {:?}",
                ctx.spec.name,
                phi.len(),
                2 * w.length(),
                w.word
            )));
        }
        // (b)
        let dot0 = ctx.odd_dot(w, &zero);
        let minus_rho_phi = Weight::sum(&ctx.spec.factors, phi.iter()).neg();
        if dot0 != minus_rho_phi {
            return Err(Error::PropositionViolated(format!(
                "{}: w.0 = {} differs from -rho(Phi(w)) = {} at w = {:?}",
                ctx.spec.name, dot0, minus_rho_phi, w.word
            )));
        }
        // (c): prefix products applied to the distinguished roots
        let mut built: Vec<Weight> = Vec::new();
        for (k, &j) in w.word.iter().enumerate() {
            let prefix = ctx.element_of_word(&w.word[..k]);
            built.push(unconcat(
                &ctx.spec,
                &prefix.action.apply(&concat(&ctx.beta[j])),
            ));
            built.push(unconcat(
                &ctx.spec,
                &prefix.action.apply(&concat(&ctx.gamma[j])),
            ));
        }
        built.sort();
        if built != phi {
            return Err(Error::PropositionViolated(format!(
                "{}: reduced-word formula gives a different set at w = {:?}",
                ctx.spec.name, w.word
            )));
        }
        // (d): uniqueness of J with -rho(J) = w.0 over all index subsets
        let k = ctx.spec.pos_roots.len();
        assert!(k <= 22, "subset sweep out of desk scale");
        let target = concat(&dot0);
        let mut matches = 0usize;
        let mut matched_sorted: Option<Vec<Weight>> = None;
        for mask in 0u64..(1 << k) {
            let mut sum = vec![rat(0); target.len()];
            for b in 0..k {
                if mask >> b & 1 == 1 {
                    for (x, c) in sum.iter_mut().zip(concat(&ctx.spec.pos_roots[b])) {
                        *x += c;
                    }
                }
            }
            let neg_sum: Vec<Rat> = sum.iter().map(|x| -x).collect();
            if neg_sum == target {
                matches += 1;
                let mut js: Vec<Weight> = (0..k)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| ctx.spec.pos_roots[b].clone())
                    .collect();
                js.sort();
                matched_sorted = Some(js);
            }
        }
        if matches != 1 || matched_sorted.as_deref() != Some(&phi[..]) {
            return Err(Error::PropositionViolated(format!(
                "{}: {} subsets solve -rho(J) = w.0 at w = {:?}",
                ctx.spec.name, matches, w.word
            )));
        }
    }
    Ok(PropositionReport {
        algebra: ctx.spec.name.clone(),
        group_order: ctx.elements.len(),
        checked: ctx.elements.len(),
    })
}

/// Half-sum of all positive even roots, concatenated.
pub fn rho0(spec: &Superalgebra) -> Vec<Rat> {
    let mut acc: Vec<Rat> = Vec::new();
    for f in &spec.factors {
        let mut slice = vec![rat(0); f.kind.coords()];
        for root in f.kind.positive_roots() {
            for (x, c) in slice.iter_mut().zip(root) {
                *x += c;
            }
        }
        acc.extend(slice.into_iter().map(|c| c * ratq(1, 2)));
    }
    acc
}

/// Context constructor for the supported families at diagonal rank `n`.
pub fn context_for(family: Family, n: usize) -> Result<OddDotContext, Error> {
    let spec = match family {
        Family::Gl | Family::Sl | Family::Psl | Family::OspOdd => catalog_lookup(family, n, n)?,
        Family::Q | Family::Psq => catalog_lookup(family, n, 0)?,
        _ => {
            return Err(Error::UnsupportedParams(String::from(
                "odd dot context exists for gl(n|n), osp(2n+1|2n), q(n)",
            )))
        }
    };
    OddDotContext::new(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_dot_is_identity() {
        let ctx = context_for(Family::Gl, 2).unwrap();
        let id = ctx.element_of_word(&[]);
        let lam = Weight::new(vec![vec![rat(3), rat(-1)], vec![rat(0), rat(2)]]);
        assert_eq!(ctx.odd_dot(&id, &lam), lam);
    }

    #[test]
    fn sl22_s1_dot_zero() {
        // s_1 . 0 = -(e1 - d2) - (d1 - e2)
        let ctx = context_for(Family::Gl, 2).unwrap();
        let s1 = ctx.element_of_word(&[0]);
        let zero = Weight::zero_like(&ctx.spec.factors);
        let got = ctx.odd_dot(&s1, &zero);
        let expect = Weight::new(vec![vec![rat(-1), rat(1)], vec![rat(-1), rat(1)]]);
        assert_eq!(got, expect);
        // Phi(s_1) = {e1 - d2, d1 - e2}
        let phi = ctx.phi_of_w(&s1);
        assert_eq!(phi.len(), 2);
    }

    #[test]
    fn rho1_equals_rho0_on_table_families() {
        for ctx in [
            context_for(Family::Gl, 2).unwrap(),
            context_for(Family::Gl, 3).unwrap(),
            context_for(Family::OspOdd, 1).unwrap(),
            context_for(Family::OspOdd, 2).unwrap(),
            context_for(Family::Q, 3).unwrap(),
        ] {
            assert_eq!(ctx.rho1, rho0(&ctx.spec), "{}", ctx.spec.name);
        }
    }

    #[test]
    fn q_odd_dot_equals_even_dot() {
        // with rho_1 = rho_0 the two dot actions agree on every input
        let ctx = context_for(Family::Q, 3).unwrap();
        let r0 = rho0(&ctx.spec);
        for w in &ctx.elements {
            for probe in [
                vec![rat(0), rat(0), rat(0)],
                vec![rat(2), rat(-1), rat(3)],
                vec![rat(-4), rat(1), rat(0)],
            ] {
                let lam = Weight::new(vec![probe.clone()]);
                let odd = ctx.odd_dot(w, &lam);
                let even: Vec<Rat> = {
                    let shifted: Vec<Rat> =
                        probe.iter().zip(&r0).map(|(a, b)| *a + *b).collect();
                    w.action
                        .apply(&shifted)
                        .iter()
                        .zip(&r0)
                        .map(|(a, b)| *a - *b)
                        .collect()
                };
                assert_eq!(odd.concat(), even);
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(context_for(Family::Gl, 3).unwrap().elements.len(), 6);
        assert_eq!(context_for(Family::OspOdd, 2).unwrap().elements.len(), 8);
        assert_eq!(context_for(Family::Q, 4).unwrap().elements.len(), 24);
    }

    #[test]
    fn proposition_sweeps() {
        for ctx in [
            context_for(Family::Gl, 2).unwrap(),
            context_for(Family::Gl, 3).unwrap(),
            context_for(Family::OspOdd, 1).unwrap(),
            context_for(Family::OspOdd, 2).unwrap(),
        ] {
            let report = verify_phiw_proposition(&ctx).unwrap();
            assert_eq!(report.checked, report.group_order);
        }
    }

    #[test]
    fn dot_orbit_stays_in_minus_rho_j_form() {
        // w . (-rho(J)) = -rho(J') for every w and J at desk scale
        for ctx in [
            context_for(Family::Gl, 2).unwrap(),
            context_for(Family::OspOdd, 2).unwrap(),
        ] {
            let k = ctx.spec.pos_roots.len();
            let sums: BTreeSet<Vec<Rat>> = (0u64..(1 << k))
                .map(|mask| {
                    let js: Vec<&Weight> = (0..k)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| &ctx.spec.pos_roots[b])
                        .collect();
                    Weight::sum(&ctx.spec.factors, js.into_iter())
                        .neg()
                        .concat()
                })
                .collect();
            for w in &ctx.elements {
                for target in &sums {
                    let lam = unconcat(&ctx.spec, target);
                    let image = ctx.odd_dot(w, &lam);
                    assert!(
                        sums.contains(&image.concat()),
                        "{}: orbit left the -rho(J) set",
                        ctx.spec.name
                    );
                }
            }
        }
    }

    #[test]
    fn distinct_elements_have_distinct_dot_zero() {
        // injectivity: w -> -rho(Phi(w)) separates group elements
        let ctx = context_for(Family::OspOdd, 2).unwrap();
        let zero = Weight::zero_like(&ctx.spec.factors);
        let mut seen = BTreeSet::new();
        for w in &ctx.elements {
            assert!(seen.insert(ctx.odd_dot(w, &zero)));
        }
    }

    #[test]
    fn osp_last_generator_flips_its_pair() {
        let ctx = context_for(Family::OspOdd, 2).unwrap();
        let s2 = ctx.element_of_word(&[1]);
        // beta_2 = delta_2: s_2(beta_2) = -beta_2
        let b = ctx.beta[1].concat();
        let nb: Vec<Rat> = b.iter().map(|x| -x).collect();
        assert_eq!(s2.action.apply(&b), nb);
    }
}
