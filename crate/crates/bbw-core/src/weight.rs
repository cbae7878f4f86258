//! Weights split across the reductive factors of the even part.
//!
//! A [`Weight`] is a list of exact-rational coordinate slices, one per
//! factor. Classical factors (types A/B/C/D) use orthogonal `epsilon`
//! coordinates; the G2 factor uses fundamental-weight `omega` coordinates.
//! Conversion between the two bases is exact where both are defined.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::rootsys::{Factor, FactorKind};
use crate::{rat, ratq, Error, Rat};

/// The coordinate basis a slice is expressed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// Orthogonal coordinates (`epsilon`/`delta` in the classical types).
    Epsilon,
    /// Fundamental-weight coordinates.
    Omega,
}

/// A weight of the even part: one exact-rational coordinate slice per
/// reductive factor, each in that factor's canonical basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    pub slices: Vec<Vec<Rat>>,
}

impl Weight {
    pub fn new(slices: Vec<Vec<Rat>>) -> Self {
        Weight { slices }
    }

    pub fn zero_like(factors: &[Factor]) -> Self {
        Weight {
            slices: factors.iter().map(|f| vec![rat(0); f.kind.coords()]).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.slices.iter().all(|s| s.iter().all(|c| c.is_zero()))
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.slices.len(), other.slices.len());
        Weight {
            slices: self
                .slices
                .iter()
                .zip(&other.slices)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            slices: self
                .slices
                .iter()
                .map(|s| s.iter().map(|c| -c).collect())
                .collect(),
        }
    }

    pub fn scale(&self, k: Rat) -> Weight {
        Weight {
            slices: self
                .slices
                .iter()
                .map(|s| s.iter().map(|c| c * k).collect())
                .collect(),
        }
    }

    /// All coordinates flattened into one vector.
    pub fn concat(&self) -> Vec<Rat> {
        self.slices.iter().flatten().copied().collect()
    }

    /// Sum a set of weights (empty sum is the zero weight of the template).
    pub fn sum<'a, I: IntoIterator<Item = &'a Weight>>(template: &[Factor], items: I) -> Weight {
        let mut acc = Weight::zero_like(template);
        for w in items {
            acc = acc.add(w);
        }
        acc
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.slices.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, c) in s.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, ")")
    }
}

/// Exact conversion from fundamental-weight coordinates to the canonical
/// basis of the given factor kind. For G2 the canonical basis *is* omega,
/// so the coordinates pass through. For type A the omega basis has `n-1`
/// coordinates and the result is the trace-zero representative.
pub fn omega_to_canonical(kind: FactorKind, coords: &[Rat]) -> Result<Vec<Rat>, Error> {
    match kind {
        FactorKind::TypeA { n } => {
            if coords.len() != n - 1 {
                return Err(Error::Parse(String::from("omega slice length != rank")));
            }
            // lambda_k - lambda_{k+1} = a_k with sum(lambda) = 0
            let mut v = vec![rat(0); n];
            for k in (0..n - 1).rev() {
                v[k] = v[k + 1] + coords[k];
            }
            let total: Rat = v.iter().sum();
            let shift = total / rat(n as i64);
            for c in v.iter_mut() {
                *c -= shift;
            }
            Ok(v)
        }
        FactorKind::TypeB { m } => {
            if coords.len() != m {
                return Err(Error::Parse(String::from("omega slice length != rank")));
            }
            // omega_i = e_1+..+e_i (i<m), omega_m = (e_1+..+e_m)/2
            let mut v = vec![rat(0); m];
            for (i, a) in coords.iter().enumerate() {
                let c = if i + 1 == m { *a * ratq(1, 2) } else { *a };
                for x in v.iter_mut().take(i + 1) {
                    *x += c;
                }
            }
            Ok(v)
        }
        FactorKind::TypeC { n } => {
            if coords.len() != n {
                return Err(Error::Parse(String::from("omega slice length != rank")));
            }
            let mut v = vec![rat(0); n];
            for (i, a) in coords.iter().enumerate() {
                for x in v.iter_mut().take(i + 1) {
                    *x += *a;
                }
            }
            Ok(v)
        }
        FactorKind::TypeD { m } => {
            if coords.len() != m || m < 2 {
                return Err(Error::Parse(String::from("omega slice length != rank >= 2")));
            }
            // omega_i = e_1+..+e_i (i<=m-2),
            // omega_{m-1} = (e_1+..+e_{m-1}-e_m)/2, omega_m = (e_1+..+e_m)/2
            let mut v = vec![rat(0); m];
            for (i, a) in coords.iter().enumerate() {
                if i < m - 2 {
                    for x in v.iter_mut().take(i + 1) {
                        *x += *a;
                    }
                } else if i == m - 2 {
                    let h = *a * ratq(1, 2);
                    for x in v.iter_mut().take(m - 1) {
                        *x += h;
                    }
                    v[m - 1] -= h;
                } else {
                    let h = *a * ratq(1, 2);
                    for x in v.iter_mut() {
                        *x += h;
                    }
                }
            }
            Ok(v)
        }
        FactorKind::G2 => {
            if coords.len() != 2 {
                return Err(Error::Parse(String::from("omega slice length != 2")));
            }
            Ok(coords.to_vec())
        }
    }
}

/// Exact inverse of [`omega_to_canonical`] on its image. For type A the
/// input must be interpreted modulo the trace direction.
pub fn canonical_to_omega(kind: FactorKind, coords: &[Rat]) -> Result<Vec<Rat>, Error> {
    match kind {
        FactorKind::TypeA { n } => {
            if coords.len() != n {
                return Err(Error::Parse(String::from("slice length != coords")));
            }
            Ok((0..n - 1).map(|k| coords[k] - coords[k + 1]).collect())
        }
        FactorKind::TypeB { m } => {
            if coords.len() != m {
                return Err(Error::Parse(String::from("slice length != coords")));
            }
            let mut out = vec![rat(0); m];
            for i in 0..m - 1 {
                out[i] = coords[i] - coords[i + 1];
            }
            out[m - 1] = coords[m - 1] * rat(2);
            Ok(out)
        }
        FactorKind::TypeC { n } => {
            if coords.len() != n {
                return Err(Error::Parse(String::from("slice length != coords")));
            }
            let mut out = vec![rat(0); n];
            for i in 0..n - 1 {
                out[i] = coords[i] - coords[i + 1];
            }
            out[n - 1] = coords[n - 1];
            Ok(out)
        }
        FactorKind::TypeD { m } => {
            if coords.len() != m || m < 2 {
                return Err(Error::Parse(String::from("slice length != coords >= 2")));
            }
            let mut out = vec![rat(0); m];
            for i in 0..m.saturating_sub(2) {
                out[i] = coords[i] - coords[i + 1];
            }
            out[m - 2] = coords[m - 2] - coords[m - 1];
            out[m - 1] = coords[m - 2] + coords[m - 1];
            Ok(out)
        }
        FactorKind::G2 => Ok(coords.to_vec()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_roundtrip_classical() {
        for kind in [
            FactorKind::TypeB { m: 3 },
            FactorKind::TypeC { n: 3 },
            FactorKind::TypeD { m: 4 },
        ] {
            let omega = vec![rat(2), rat(-1), rat(3), rat(1)];
            let omega = &omega[..kind.rank()];
            let eps = omega_to_canonical(kind, omega).unwrap();
            let back = canonical_to_omega(kind, &eps).unwrap();
            assert_eq!(back, omega.to_vec());
        }
    }

    #[test]
    fn omega_typea_traceless() {
        // omega_1 + omega_2 of sl(3) is the highest root (1, 0, -1)
        let eps = omega_to_canonical(FactorKind::TypeA { n: 3 }, &[rat(1), rat(1)]).unwrap();
        assert_eq!(eps, vec![rat(1), rat(0), rat(-1)]);
        let om = canonical_to_omega(FactorKind::TypeA { n: 3 }, &eps).unwrap();
        assert_eq!(om, vec![rat(1), rat(1)]);
    }

    #[test]
    fn spin_weight_is_half_integral() {
        // omega_3 of so(7) = (1/2, 1/2, 1/2)
        let eps =
            omega_to_canonical(FactorKind::TypeB { m: 3 }, &[rat(0), rat(0), rat(1)]).unwrap();
        assert_eq!(eps, vec![ratq(1, 2), ratq(1, 2), ratq(1, 2)]);
    }
}
