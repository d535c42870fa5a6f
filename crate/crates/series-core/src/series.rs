//! Truncated sparse multivariate series over exact rationals.
//!
//! A `TruncatedSeries` stores finitely many monomials with `BigRational`
//! coefficients together with an optional geometric-degree cutoff. `None`
//! means the series is exact (a polynomial); `Some(c)` means all terms of
//! geometric degree <= c are stored and nothing is known above c. Every
//! operation propagates the largest cutoff that its output honestly
//! satisfies, so precision claims never exceed what the inputs support.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::monomial::Monomial;
use crate::variable::Variable;

/// Exact rational scalar type used throughout.
pub type Q = BigRational;

/// The integer `n` as a rational.
pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The reduced fraction `n/d`.
pub fn q_ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse truncated series: monomial -> coefficient, plus a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: BTreeMap<Monomial, Q>,
    cutoff: Option<u32>,
}

/// Meet of two cutoffs (`None` acts as infinity).
pub fn meet(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (None, c) | (c, None) => c,
        (Some(a), Some(b)) => Some(a.min(b)),
    }
}

impl TruncatedSeries {
    /// The zero series at the given precision.
    pub fn zero(cutoff: Option<u32>) -> Self {
        TruncatedSeries { terms: BTreeMap::new(), cutoff }
    }

    /// The constant 1 at the given precision.
    pub fn one(cutoff: Option<u32>) -> Self {
        Self::constant(Q::one(), cutoff)
    }

    /// A rational constant at the given precision.
    pub fn constant(c: Q, cutoff: Option<u32>) -> Self {
        Self::monomial(Monomial::one(), c, cutoff)
    }

    /// A single variable at the given precision.
    pub fn variable(v: Variable, cutoff: Option<u32>) -> Self {
        Self::monomial(Monomial::var(v), Q::one(), cutoff)
    }

    /// `c * m` at the given precision.
    pub fn monomial(m: Monomial, c: Q, cutoff: Option<u32>) -> Self {
        Self::from_terms(std::iter::once((m, c)), cutoff)
    }

    /// Builds a series from terms, merging duplicates and enforcing the
    /// no-zero-coefficients / within-cutoff invariants.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Q)>, cutoff: Option<u32>) -> Self {
        let mut map: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            if let Some(cut) = cutoff {
                if m.geo_degree() > cut {
                    continue;
                }
            }
            let entry = map.entry(m).or_insert_with(Q::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        TruncatedSeries { terms: map, cutoff }
    }

    pub fn cutoff(&self) -> Option<u32> {
        self.cutoff
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when no terms are stored (zero within the stated precision).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates (monomial, coefficient) pairs in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> + '_ {
        self.terms.iter()
    }

    /// The coefficient of `m`. Panics when `m` lies beyond the cutoff,
    /// because that coefficient is unknown rather than zero.
    pub fn coefficient(&self, m: &Monomial) -> Q {
        if let Some(cut) = self.cutoff {
            assert!(
                m.geo_degree() <= cut,
                "coefficient of {m} requested beyond cutoff {cut}"
            );
        }
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Lower bound for the geometric valuation: the least stored degree,
    /// or cutoff+1 for a truncated zero, or `u32::MAX` for an exact zero.
    pub fn val_lb(&self) -> u32 {
        match self.terms.keys().next() {
            Some(m) => m.geo_degree(),
            None => match self.cutoff {
                Some(c) => c.saturating_add(1),
                None => u32::MAX,
            },
        }
    }

    /// Largest stored geometric degree (0 for empty).
    pub fn max_geo_degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, |m| m.geo_degree())
    }

    /// Restricts to degree <= d, recording the tighter cutoff.
    pub fn truncated(&self, d: u32) -> Self {
        let cutoff = meet(self.cutoff, Some(d));
        let terms = self
            .terms
            .iter()
            .take_while(|(m, _)| m.geo_degree() <= d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        TruncatedSeries { terms, cutoff }
    }

    /// Keeps only terms whose geometric degree is exactly `d` (an exact
    /// polynomial, since a homogeneous component below the cutoff is known
    /// completely).
    pub fn homogeneous_part(&self, d: u32) -> Self {
        if let Some(cut) = self.cutoff {
            assert!(d <= cut, "homogeneous part {d} beyond cutoff {cut}");
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.geo_degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        TruncatedSeries { terms, cutoff: None }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        TruncatedSeries {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
            cutoff: self.cutoff,
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::zero(self.cutoff);
        }
        TruncatedSeries {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
            cutoff: self.cutoff,
        }
    }

    /// Least common multiple of the coefficient denominators.
    fn denominator_lcm(&self) -> BigInt {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            let d = c.denom();
            let g = num_integer::Integer::gcd(&lcm, d);
            lcm = lcm / g * d;
        }
        lcm
    }

    /// Sum at the meet of the precisions.
    pub fn add(&self, other: &Self) -> Self {
        let cutoff = meet(self.cutoff, other.cutoff);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Q::zero);
            *entry += c;
        }
        terms.retain(|m, c| {
            !c.is_zero() && cutoff.map_or(true, |cut| m.geo_degree() <= cut)
        });
        TruncatedSeries { terms, cutoff }
    }

    /// Difference at the meet of the precisions.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product. The result is known to degree
    /// min(cutoff(a) + val(b), cutoff(b) + val(a)): the unknown tail of one
    /// factor enters only multiplied by the known valuation of the other.
    pub fn mul(&self, other: &Self) -> Self {
        let cutoff = meet(
            self.cutoff.map(|c| c.saturating_add(other.val_lb())),
            other.cutoff.map(|c| c.saturating_add(self.val_lb())),
        );
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        if let Some(terms) = mul_packed(small, large, cutoff) {
            return TruncatedSeries { terms, cutoff };
        }
        // Fallback: clear denominators up front so the inner loop is integer
        // arithmetic (one gcd per output term instead of one per product),
        // and accumulate in a hash map, sorting once at the end.
        let scale_small = small.denominator_lcm();
        let scale_large = large.denominator_lcm();
        let ints_small: Vec<(&Monomial, BigInt)> = small
            .terms
            .iter()
            .map(|(m, c)| (m, (c * &scale_small).to_integer()))
            .collect();
        let ints_large: Vec<(&Monomial, BigInt)> = large
            .terms
            .iter()
            .map(|(m, c)| (m, (c * &scale_large).to_integer()))
            .collect();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(large.num_terms());
        for (ma, ca) in &ints_small {
            let da = ma.geo_degree();
            for (mb, cb) in &ints_large {
                if let Some(cut) = cutoff {
                    if da + mb.geo_degree() > cut {
                        break; // iteration is in increasing degree
                    }
                }
                let m = ma.mul(mb);
                let entry = acc.entry(m).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        let scale = scale_small * scale_large;
        let terms: BTreeMap<Monomial, Q> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, Q::new(c, scale.clone())))
            .collect();
        TruncatedSeries { terms, cutoff }
    }

    /// k-th power by binary exponentiation.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one(self.cutoff);
        }
        let mut base = self.clone();
        let mut k = k;
        let mut acc: Option<Self> = None;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.expect("k >= 1")
    }

    /// Re-truncates to an explicit optional cutoff (meet).
    pub fn truncated_to(&self, cutoff: Option<u32>) -> Self {
        match cutoff {
            None => self.clone(),
            Some(d) => self.truncated(d),
        }
    }

    /// Renames variables through `f`; coefficients of colliding images add.
    pub fn rename_variables(&self, f: impl Fn(Variable) -> Variable) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())),
            self.cutoff,
        )
    }

    /// Sets a variable to zero: drops every term containing it. Panics on
    /// negative exponents of `v`, which have no finite value at 0.
    pub fn set_var_zero(&self, v: Variable) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| {
                let e = m.exponent_of(v);
                assert!(e >= 0, "cannot set {v} to zero under exponent {e}");
                e == 0
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        TruncatedSeries { terms, cutoff: self.cutoff }
    }

    /// The coefficient of `v^k` as a series in the remaining variables.
    /// For geometric `v` the precision drops by k. Panics when the cutoff
    /// cannot support the request.
    pub fn coeff_of_var_power(&self, v: Variable, k: u32) -> Self {
        let shift = if v.is_geometric() { k } else { 0 };
        let cutoff = self.cutoff.map(|c| {
            assert!(
                c >= shift,
                "coefficient of {v}^{k} requested from a series of cutoff {c}"
            );
            c - shift
        });
        let vk = Monomial::var_pow(v, k as i32);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent_of(v) == k as i32)
            .map(|(m, c)| (m.try_div(&vk).expect("exponent matches"), c.clone()))
            .collect();
        TruncatedSeries { terms, cutoff }
    }

    /// Largest exponent of `v` over the stored support.
    pub fn max_exponent_of(&self, v: Variable) -> i32 {
        self.terms.keys().map(|m| m.exponent_of(v)).max().unwrap_or(0)
    }

    /// True when `v` does not occur in the stored support.
    pub fn is_free_of(&self, v: Variable) -> bool {
        self.terms.keys().all(|m| m.exponent_of(v) == 0)
    }

    /// First monomial (in the term order, up to the meet of the cutoffs)
    /// where the two series differ, with both coefficients.
    pub fn difference_witness(&self, other: &Self) -> Option<(Monomial, Q, Q)> {
        let cutoff = meet(self.cutoff, other.cutoff);
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for m in keys {
            if let Some(cut) = cutoff {
                if m.geo_degree() > cut {
                    break;
                }
            }
            let a = self.terms.get(m).cloned().unwrap_or_else(Q::zero);
            let b = other.terms.get(m).cloned().unwrap_or_else(Q::zero);
            if a != b {
                return Some((m.clone(), a, b));
            }
        }
        None
    }

    /// Equality up to the meet of the two precisions.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.difference_witness(other).is_none()
    }
}

/// Multiplication fast path: monomials become exponent byte rows over the
/// union of the two supports, coefficients become 128-bit integers after
/// clearing denominators, and products accumulate into a hash map keyed by
/// the summed rows, so the inner loop allocates nothing. Returns None when
/// an exponent, coefficient, or term count could overflow the packing, and
/// the caller falls back to arbitrary-precision arithmetic.
fn mul_packed(
    small: &TruncatedSeries,
    large: &TruncatedSeries,
    cutoff: Option<u32>,
) -> Option<BTreeMap<Monomial, Q>> {
    // |coeff| <= 2^52 and <= 2^20 contributions per output term keep the
    // i128 accumulator below 2^125.
    const COEFF_LIMIT: u64 = 1 << 52;
    if small.num_terms() > (1 << 20) {
        return None;
    }
    let mut universe: std::collections::BTreeSet<Variable> = std::collections::BTreeSet::new();
    for (m, _) in small.terms.iter().chain(large.terms.iter()) {
        for (v, _) in m.iter() {
            universe.insert(v);
        }
    }
    let vars: Vec<Variable> = universe.into_iter().collect();
    let nv = vars.len();
    // Rows of zero width would collide every monomial onto one key.
    let nv_stride = nv.max(1);
    let encode = |s: &TruncatedSeries, scale: &BigInt| -> Option<(Vec<i8>, Vec<u32>, Vec<i64>)> {
        let mut rows = vec![0i8; s.num_terms() * nv_stride];
        let mut geos = Vec::with_capacity(s.num_terms());
        let mut coeffs = Vec::with_capacity(s.num_terms());
        for (t, (m, c)) in s.terms.iter().enumerate() {
            let row = &mut rows[t * nv_stride..(t + 1) * nv_stride];
            for (v, e) in m.iter() {
                if !(-63..=63).contains(&e) {
                    return None;
                }
                let k = vars.binary_search(&v).expect("variable is in the universe");
                row[k] = e as i8;
            }
            geos.push(m.geo_degree());
            let scaled = (c * scale).to_integer();
            let as_i64 = scaled.to_i64()?;
            if as_i64.unsigned_abs() > COEFF_LIMIT {
                return None;
            }
            coeffs.push(as_i64);
        }
        Some((rows, geos, coeffs))
    };
    let scale_small = small.denominator_lcm();
    let scale_large = large.denominator_lcm();
    let (rows_s, geos_s, coeffs_s) = encode(small, &scale_small)?;
    let (rows_l, geos_l, coeffs_l) = encode(large, &scale_large)?;
    let mut acc: hashbrown::HashMap<Box<[i8]>, i128> =
        hashbrown::HashMap::with_capacity(2 * large.num_terms());
    let mut key = vec![0i8; nv_stride];
    for (ia, (&ga, &ca)) in geos_s.iter().zip(&coeffs_s).enumerate() {
        let ea = &rows_s[ia * nv_stride..(ia + 1) * nv_stride];
        for (ib, (&gb, &cb)) in geos_l.iter().zip(&coeffs_l).enumerate() {
            if let Some(cut) = cutoff {
                if ga + gb > cut {
                    break; // iteration is in increasing degree
                }
            }
            let eb = &rows_l[ib * nv_stride..(ib + 1) * nv_stride];
            for (k, (a, b)) in key.iter_mut().zip(ea.iter().zip(eb)) {
                *k = a + b;
            }
            *acc.entry_ref(&key[..]).or_insert(0) += (ca as i128) * (cb as i128);
        }
    }
    let scale = scale_small * scale_large;
    let mut out = BTreeMap::new();
    for (row, c) in acc {
        if c == 0 {
            continue;
        }
        let pairs: Vec<(Variable, i32)> = row
            .iter()
            .take(nv)
            .enumerate()
            .filter(|&(_, &e)| e != 0)
            .map(|(k, &e)| (vars[k], e as i32))
            .collect();
        out.insert(Monomial::from_pairs(pairs), Q::new(BigInt::from(c), scale.clone()));
    }
    Some(out)
}

impl fmt::Display for TruncatedSeries {
    /// Renders terms in increasing order without superfluous `1*` factors,
    /// e.g. `2*x1 + 3/2*x1^2 - b1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
