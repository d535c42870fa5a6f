//! Sparse monomials with a graded-lexicographic multiplicative order.
//!
//! The order compares geometric degree first, then coefficient degree, then
//! lexicographically over the total variable order (an earlier variable with
//! a larger exponent wins). It is multiplicative — a < b implies ac < bc —
//! which is what the bottom-up exact-division routine relies on.

use std::cmp::Ordering;
use std::fmt;

use crate::variable::Variable;

/// A monomial: sorted sparse exponent vector with cached degrees.
///
/// Exponents are nonzero; negative exponents are admitted on Coeff variables
/// only (the multiplicative parameter is invertible), never on X/Y/B.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: Vec<(Variable, i32)>,
    geo: u32,
    cdeg: i32,
}

impl Monomial {
    /// The empty monomial 1.
    pub fn one() -> Self {
        Monomial { exps: Vec::new(), geo: 0, cdeg: 0 }
    }

    /// A single variable to a power.
    pub fn var_pow(v: Variable, e: i32) -> Self {
        Self::from_pairs(vec![(v, e)])
    }

    /// A single variable to the first power.
    pub fn var(v: Variable) -> Self {
        Self::var_pow(v, 1)
    }

    /// Builds a monomial from (variable, exponent) pairs: sorts, merges
    /// duplicates, and drops zero exponents.
    pub fn from_pairs(mut pairs: Vec<(Variable, i32)>) -> Self {
        pairs.sort_by_key(|&(v, _)| v);
        let mut exps: Vec<(Variable, i32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            if let Some(last) = exps.last_mut() {
                if last.0 == v {
                    last.1 += e;
                    continue;
                }
            }
            exps.push((v, e));
        }
        exps.retain(|&(_, e)| e != 0);
        Self::from_sorted(exps)
    }

    fn from_sorted(exps: Vec<(Variable, i32)>) -> Self {
        let mut geo: u32 = 0;
        let mut cdeg: i32 = 0;
        for &(v, e) in &exps {
            if v.is_geometric() {
                assert!(e > 0, "negative exponent on geometric variable {v}");
                geo += e as u32;
            } else {
                cdeg += e;
            }
        }
        Monomial { exps, geo, cdeg }
    }

    /// Total degree of the geometric (X/Y/B) variables.
    pub fn geo_degree(&self) -> u32 {
        self.geo
    }

    /// Net degree of the Coeff variables (may be negative).
    pub fn coeff_degree(&self) -> i32 {
        self.cdeg
    }

    /// The exponent of `v` (0 if absent).
    pub fn exponent_of(&self, v: Variable) -> i32 {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// Iterates (variable, exponent) pairs in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (Variable, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Product of two monomials. Time O(len_a + len_b).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    exps.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.exps[i].1 + other.exps[j].1;
                    if e != 0 {
                        exps.push((self.exps[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial::from_sorted(exps)
    }

    /// Exact quotient `self / other`, or None when a geometric variable
    /// would acquire a negative exponent.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    exps.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    let (v, e) = other.exps[j];
                    if v.is_geometric() {
                        return None;
                    }
                    exps.push((v, -e));
                    j += 1;
                }
                Ordering::Equal => {
                    let (v, e) = (self.exps[i].0, self.exps[i].1 - other.exps[j].1);
                    if v.is_geometric() && e < 0 {
                        return None;
                    }
                    if e != 0 {
                        exps.push((v, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        for &(v, e) in &other.exps[j..] {
            if v.is_geometric() {
                return None;
            }
            exps.push((v, -e));
        }
        Some(Monomial::from_sorted(exps))
    }

    /// k-th power (k >= 0).
    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&(v, e)| (v, e * k as i32))
            .collect::<Vec<_>>();
        if k == 0 {
            Monomial::one()
        } else {
            Monomial::from_sorted(exps)
        }
    }

    /// Applies an injective variable renaming; the image must stay a valid
    /// monomial (checked by re-sorting).
    pub fn rename(&self, f: impl Fn(Variable) -> Variable) -> Monomial {
        Self::from_pairs(self.exps.iter().map(|&(v, e)| (f(v), e)).collect())
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl std::hash::Hash for Monomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.geo
            .cmp(&other.geo)
            .then(self.cdeg.cmp(&other.cdeg))
            .then_with(|| {
                // Lexicographic: at the earliest variable whose exponents
                // differ, the larger exponent wins.
                let (mut i, mut j) = (0, 0);
                loop {
                    match (self.exps.get(i), other.exps.get(j)) {
                        (None, None) => return Ordering::Equal,
                        (Some(&(_, e)), None) => return e.cmp(&0),
                        (None, Some(&(_, e))) => return 0.cmp(&e),
                        (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                            Ordering::Less => {
                                if ea != 0 {
                                    return ea.cmp(&0);
                                }
                                i += 1;
                            }
                            Ordering::Greater => {
                                if eb != 0 {
                                    return 0.cmp(&eb);
                                }
                                j += 1;
                            }
                            Ordering::Equal => {
                                if ea != eb {
                                    return ea.cmp(&eb);
                                }
                                i += 1;
                                j += 1;
                            }
                        },
                    }
                }
            })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
