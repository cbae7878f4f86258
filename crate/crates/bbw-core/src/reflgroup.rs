//! Finite reflection groups attached to the detecting subalgebras:
//! symmetric groups, hyperoctahedral groups `Sym(n) x (Z_2)^n`, and
//! demihyperoctahedral groups `Sym(n) x (Z_2)^(n-1)`.
//!
//! Elements are enumerated as signed permutations and lengths are counted
//! geometrically (number of positive roots sent negative), so the length
//! statistic is convention-free. The Poincaré polynomial is computed twice,
//! by enumeration and by the exponent product, and the two must agree.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::series::Poly;
use crate::Error;

/// Refuse to enumerate groups larger than this.
pub const GROUP_ORDER_BOUND: u128 = 1_000_000;

/// The reflection-group series appearing in the catalog.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ReflectionGroupSpec {
    /// The symmetric group on `n` letters (type A_{n-1}).
    Symmetric(usize),
    /// Signed permutations, `Sym(n) x (Z_2)^n` (type B_n).
    Hyperoctahedral(usize),
    /// Evenly signed permutations, `Sym(n) x (Z_2)^(n-1)` (type D_n).
    Demihyperoctahedral(usize),
}

impl ReflectionGroupSpec {
    pub fn order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match *self {
            ReflectionGroupSpec::Symmetric(n) => fact(n),
            ReflectionGroupSpec::Hyperoctahedral(n) => fact(n) << n,
            ReflectionGroupSpec::Demihyperoctahedral(n) => {
                if n == 0 {
                    1
                } else {
                    fact(n) << (n - 1)
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            ReflectionGroupSpec::Symmetric(n)
            | ReflectionGroupSpec::Hyperoctahedral(n)
            | ReflectionGroupSpec::Demihyperoctahedral(n) => n,
        }
    }

    /// Exponents of the group, so that
    /// `p_W(t) = prod_i (1 + t + ... + t^{e_i})`.
    pub fn exponents(&self) -> Vec<usize> {
        match *self {
            ReflectionGroupSpec::Symmetric(n) => (1..n).collect(),
            ReflectionGroupSpec::Hyperoctahedral(n) => (0..n).map(|i| 2 * i + 1).collect(),
            ReflectionGroupSpec::Demihyperoctahedral(n) => {
                if n == 0 {
                    return Vec::new();
                }
                let mut e: Vec<usize> = (0..n - 1).map(|i| 2 * i + 1).collect();
                e.push(n - 1);
                e
            }
        }
    }

    /// The positive roots of the associated root system, as sparse vectors
    /// (index, coefficient).
    fn positive_roots(&self) -> Vec<Vec<(usize, i64)>> {
        let n = self.degree();
        let mut roots = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                roots.push(vec![(i, 1), (j, -1)]);
                if !matches!(self, ReflectionGroupSpec::Symmetric(_)) {
                    roots.push(vec![(i, 1), (j, 1)]);
                }
            }
        }
        if matches!(self, ReflectionGroupSpec::Hyperoctahedral(_)) {
            for i in 0..n {
                roots.push(vec![(i, 1)]);
            }
        }
        roots
    }
}

impl core::fmt::Display for ReflectionGroupSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            ReflectionGroupSpec::Symmetric(n) => write!(f, "Sym({n})"),
            ReflectionGroupSpec::Hyperoctahedral(n) => write!(f, "Sym({n})xZ2^{n}"),
            ReflectionGroupSpec::Demihyperoctahedral(n) => {
                write!(f, "Sym({n})xZ2^{}", n.saturating_sub(1))
            }
        }
    }
}

/// A signed permutation in one-line notation: basis vector `e_i` maps to
/// `sign[i] * e_{perm[i]}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub signs: Vec<bool>, // true = negated
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            signs: vec![false; n],
        }
    }

    /// Image of the sparse vector under the signed permutation.
    fn apply(&self, v: &[(usize, i64)]) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = v
            .iter()
            .map(|&(i, c)| (self.perm[i], if self.signs[i] { -c } else { c }))
            .collect();
        out.sort_unstable();
        out
    }
}

impl core::fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.perm.len() {
            if i > 0 {
                write!(f, " ")?;
            }
            if self.signs[i] {
                write!(f, "-{}", self.perm[i] + 1)?;
            } else {
                write!(f, "{}", self.perm[i] + 1)?;
            }
        }
        write!(f, "]")
    }
}

/// Is the image root negative? The sign of a root in these systems is the
/// sign of the coefficient on the smallest-index coordinate.
fn is_negative(root: &[(usize, i64)]) -> bool {
    root.first().map(|&(_, c)| c < 0).unwrap_or(false)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

/// Enumerate all elements with their Coxeter lengths.
pub fn enumerate_reflection_group(
    spec: ReflectionGroupSpec,
) -> Result<Vec<(SignedPerm, usize)>, Error> {
    if spec.order() > GROUP_ORDER_BOUND {
        return Err(Error::GroupTooLarge(spec.order()));
    }
    let n = spec.degree();
    let roots = spec.positive_roots();
    let sign_patterns: Vec<Vec<bool>> = match spec {
        ReflectionGroupSpec::Symmetric(_) => vec![vec![false; n]],
        ReflectionGroupSpec::Hyperoctahedral(_) => (0..1u64 << n)
            .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect())
            .collect(),
        ReflectionGroupSpec::Demihyperoctahedral(_) => (0..1u64 << n)
            .filter(|mask| mask.count_ones() % 2 == 0)
            .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect())
            .collect(),
    };
    let mut out = Vec::with_capacity(spec.order() as usize);
    for perm in permutations(n) {
        for signs in &sign_patterns {
            let w = SignedPerm {
                perm: perm.clone(),
                signs: signs.clone(),
            };
            let length = roots.iter().filter(|r| is_negative(&w.apply(r))).count();
            out.push((w, length));
        }
    }
    Ok(out)
}

/// The length generating function `sum_w t^{l(w)}`, computed both by
/// enumeration and by the exponent product. Disagreement is a bug and is
/// reported as [`Error::ExponentMismatch`].
pub fn poincare_poly(spec: ReflectionGroupSpec) -> Result<Poly, Error> {
    let by_product = poincare_poly_from_exponents(spec);
    let elements = enumerate_reflection_group(spec)?;
    let max_len = elements.iter().map(|(_, l)| *l).max().unwrap_or(0);
    let mut coeffs = vec![0i64; max_len + 1];
    for (_, l) in &elements {
        coeffs[*l] += 1;
    }
    let by_enum = Poly::from_coeffs(coeffs);
    if by_enum != by_product {
        return Err(Error::ExponentMismatch(format!(
            "{spec}: enumeration {by_enum} vs product {by_product}"
        )));
    }
    Ok(by_enum)
}

/// The exponent-product form of the Poincaré polynomial, usable even when
/// the group is too large to enumerate.
pub fn poincare_poly_from_exponents(spec: ReflectionGroupSpec) -> Poly {
    let mut p = Poly::one();
    for e in spec.exponents() {
        p = p.mul(&Poly::from_coeffs(vec![1; e + 1]));
    }
    p
}

/// Human-readable description for table output, e.g. `Sym(3)` or
/// `Sym(2) x (Z_2)^2`.
pub fn describe(spec: ReflectionGroupSpec) -> String {
    match spec {
        ReflectionGroupSpec::Symmetric(n) => format!("Sym({n})"),
        ReflectionGroupSpec::Hyperoctahedral(n) => format!("Sym({n}) x (Z_2)^{n}"),
        ReflectionGroupSpec::Demihyperoctahedral(n) => {
            format!("Sym({n}) x (Z_2)^{}", n.saturating_sub(1))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    #[test]
    fn sym2_elements() {
        let els = enumerate_reflection_group(ReflectionGroupSpec::Symmetric(2)).unwrap();
        let mut lens: Vec<usize> = els.iter().map(|(_, l)| *l).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![0, 1]);
    }

    #[test]
    fn sym3_length_multiset() {
        let els = enumerate_reflection_group(ReflectionGroupSpec::Symmetric(3)).unwrap();
        let mut lens: Vec<usize> = els.iter().map(|(_, l)| *l).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn b2_length_multiset() {
        let els = enumerate_reflection_group(ReflectionGroupSpec::Hyperoctahedral(2)).unwrap();
        assert_eq!(els.len(), 8);
        let mut lens: Vec<usize> = els.iter().map(|(_, l)| *l).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn poincare_matches_exponent_product() {
        for spec in [
            ReflectionGroupSpec::Symmetric(1),
            ReflectionGroupSpec::Symmetric(3),
            ReflectionGroupSpec::Symmetric(5),
            ReflectionGroupSpec::Hyperoctahedral(1),
            ReflectionGroupSpec::Hyperoctahedral(3),
            ReflectionGroupSpec::Demihyperoctahedral(1),
            ReflectionGroupSpec::Demihyperoctahedral(2),
            ReflectionGroupSpec::Demihyperoctahedral(4),
        ] {
            let p = poincare_poly(spec).unwrap();
            assert_eq!(p.eval_one() as u128, spec.order(), "{spec}");
            // degree = number of positive roots (length of the longest element)
            assert_eq!(
                p.degree().unwrap_or(0),
                spec.positive_roots().len(),
                "{spec}"
            );
        }
    }

    #[test]
    fn sym3_poly() {
        let p = poincare_poly(ReflectionGroupSpec::Symmetric(3)).unwrap();
        assert_eq!(p, Poly::from_coeffs(vec![1, 2, 2, 1]));
        let trivial = poincare_poly(ReflectionGroupSpec::Symmetric(1)).unwrap();
        assert_eq!(trivial, Poly::one());
        let s2 = poincare_poly(ReflectionGroupSpec::Symmetric(2)).unwrap();
        assert_eq!(s2, Poly::from_coeffs(vec![1, 1]));
    }

    #[test]
    fn enumeration_refuses_oversized_groups() {
        assert!(matches!(
            enumerate_reflection_group(ReflectionGroupSpec::Hyperoctahedral(10)),
            Err(Error::GroupTooLarge(_))
        ));
    }

    #[test]
    fn lengths_are_balanced() {
        // l(w w_0) = N - l(w): the length histogram is a palindrome
        for spec in [
            ReflectionGroupSpec::Symmetric(4),
            ReflectionGroupSpec::Hyperoctahedral(2),
            ReflectionGroupSpec::Demihyperoctahedral(3),
        ] {
            let els = enumerate_reflection_group(spec).unwrap();
            let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
            for (_, l) in els {
                *hist.entry(l).or_default() += 1;
            }
            let max = *hist.keys().max().unwrap();
            for (l, c) in &hist {
                assert_eq!(Some(c), hist.get(&(max - l)));
            }
        }
    }
}
