//! The symmetrization engine behind the P/Q/s families.
//!
//! Every defining formula has the shape
//! `sum_w w[ numerator / prod_pairs (x_i +_F xbar_j) ]`. Each factor
//! `x_a +_F xbar_c` splits as `(x_a - x_c) * U_ac` with `U_ac` a unit, so a
//! term's denominator becomes unit inverses times a sub-product of the
//! Vandermonde determinant. Multiplying through by the missing linear
//! factors turns the whole sum into `(sum_w sgn(w) * polynomial_w) / V`:
//! one exact division by the Vandermonde polynomial `V` at an internal
//! cutoff `D + deg V`, which leaves the result honest to degree `D`.
//!
//! Permutations that differ only on the slots beyond the bracket block
//! contribute identical summands (the sign change cancels against the
//! reordered difference product), so the sum runs over injections of the
//! bracket slots and the 1/(n-r)! prefactor disappears.

use std::collections::HashMap;

use fgl_provider::FormalGroupLaw;
use itertools::Itertools;
use series_core::{SeriesResult, TruncatedSeries, Variable};

use crate::partition::{Partition, StrictPartition};

/// Symmetrization caches shared across shapes: construct once per
/// (law, n, degree, factorial) and evaluate many partitions against it.
/// Everything is keyed on 0-based variable slots.
pub struct Engine<'a> {
    law: &'a FormalGroupLaw,
    n: usize,
    d: u32,
    d_int: u32,
    factorial: bool,
    xs: Vec<TruncatedSeries>,
    /// (x_a +_F x_c) * U_ac^{-1} for ordered pairs (a, c); the covered-pair
    /// numerator with its unit denominator already divided out.
    cov: HashMap<(usize, usize), TruncatedSeries>,
    /// U_ac^{-1} alone, for the s-family whose pairs have no numerator.
    u_inv: HashMap<(usize, usize), TruncatedSeries>,
    /// x_a - x_c, ordered pairs, exact.
    diffs: HashMap<(usize, usize), TruncatedSeries>,
    /// Factorial powers [x_a|b]^k (doubled flag in the key).
    brackets: HashMap<(usize, u32, bool), TruncatedSeries>,
    /// Two-sided factorial powers (x_a || b)^k_n.
    two_sided: HashMap<(usize, u32), TruncatedSeries>,
    pq_memo: HashMap<(StrictPartition, bool), TruncatedSeries>,
    s_memo: HashMap<(Partition, bool), TruncatedSeries>,
}

impl<'a> Engine<'a> {
    pub fn new(law: &'a FormalGroupLaw, n: usize, d: u32, factorial: bool) -> SeriesResult<Self> {
        let d_int = d + (n * n.saturating_sub(1) / 2) as u32;
        let xs: Vec<TruncatedSeries> = (1..=n as i64)
            .map(|i| TruncatedSeries::variable(Variable::x(i), Some(d_int)))
            .collect();
        let mut cov = HashMap::new();
        let mut u_inv = HashMap::new();
        let mut diffs = HashMap::new();
        if n >= 2 {
            // Every ordered pair's series is the canonical (x1, x2) pair
            // renamed, so the law arithmetic runs once, not n(n-1) times.
            let x1 = TruncatedSeries::variable(Variable::x(1), Some(d_int + 1));
            let x2 = TruncatedSeries::variable(Variable::x(2), Some(d_int + 1));
            let diff0 = TruncatedSeries::variable(Variable::x(1), None)
                .sub(&TruncatedSeries::variable(Variable::x(2), None));
            // One spare degree pays for the division by x_1 - x_2.
            let unit0 = law.formal_difference(&x1, &x2)?.exact_divide(&diff0)?;
            let u0 = unit0.invert_unit(d_int)?;
            let cov0 = law.formal_sum(&x1, &x2)?.truncated(d_int).mul(&u0);
            for a in 0..n {
                for c in 0..n {
                    if a == c {
                        continue;
                    }
                    let va = Variable::x(a as i64 + 1);
                    let vc = Variable::x(c as i64 + 1);
                    let rename = |v: Variable| {
                        if v == Variable::x(1) {
                            va
                        } else if v == Variable::x(2) {
                            vc
                        } else {
                            v
                        }
                    };
                    cov.insert((a, c), cov0.rename_variables(rename));
                    u_inv.insert((a, c), u0.rename_variables(rename));
                    diffs.insert(
                        (a, c),
                        TruncatedSeries::variable(va, None)
                            .sub(&TruncatedSeries::variable(vc, None)),
                    );
                }
            }
        }
        Ok(Engine {
            law,
            n,
            d,
            d_int,
            factorial,
            xs,
            cov,
            u_inv,
            diffs,
            brackets: HashMap::new(),
            two_sided: HashMap::new(),
            pq_memo: HashMap::new(),
            s_memo: HashMap::new(),
        })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    /// The b_i series, honoring the factorial switch.
    fn b(&self, i: i64) -> TruncatedSeries {
        if self.factorial {
            TruncatedSeries::variable(Variable::b(i), Some(self.d_int))
        } else {
            TruncatedSeries::zero(Some(self.d_int))
        }
    }

    fn bracket(&mut self, a: usize, k: u32, doubled: bool) -> SeriesResult<TruncatedSeries> {
        if let Some(hit) = self.brackets.get(&(a, k, doubled)) {
            return Ok(hit.clone());
        }
        let value = if a > 0 {
            // Slot a is slot 0 with x_1 renamed; only x_1 occurs there.
            let va = Variable::x(a as i64 + 1);
            self.bracket(0, k, doubled)?
                .rename_variables(|v| if v == Variable::x(1) { va } else { v })
        } else {
            let t = &self.xs[0];
            let mut shifts = Vec::new();
            if k >= 1 {
                if doubled {
                    shifts.push(t.clone());
                    shifts.extend((1..=k as i64 - 1).map(|i| self.b(i)));
                } else {
                    shifts.extend((1..=k as i64).map(|i| self.b(i)));
                }
            }
            self.law.factorial_power_with(t, &shifts)?
        };
        self.brackets.insert((a, k, doubled), value.clone());
        Ok(value)
    }

    /// The two-sided factorial power prod_{i=1}^k (x_a +_F b_{n+1-i}),
    /// whose shift sequence descends from b_n into indices <= 0.
    fn bracket_two_sided(&mut self, a: usize, k: u32) -> SeriesResult<TruncatedSeries> {
        if let Some(hit) = self.two_sided.get(&(a, k)) {
            return Ok(hit.clone());
        }
        let value = if a > 0 {
            let va = Variable::x(a as i64 + 1);
            self.bracket_two_sided(0, k)?
                .rename_variables(|v| if v == Variable::x(1) { va } else { v })
        } else {
            let t = &self.xs[0];
            let shifts: Vec<TruncatedSeries> = (1..=k as i64)
                .map(|i| self.b(self.n as i64 + 1 - i))
                .collect();
            self.law.factorial_power_with(t, &shifts)?
        };
        self.two_sided.insert((a, k), value.clone());
        Ok(value)
    }

    /// Runs `sum sgn(w) * prod factors(w) / V`, where w ranges over the
    /// injections of the first `active` slots extended by the remaining
    /// slots in increasing order, and performs the single exact division.
    fn symmetrize(
        &self,
        active: usize,
        factors: impl Fn(&[usize], &mut Vec<TruncatedSeries>),
    ) -> SeriesResult<TruncatedSeries> {
        let mut total = TruncatedSeries::zero(Some(self.d_int));
        let mut w = Vec::with_capacity(self.n);
        for sigma in (0..self.n).permutations(active) {
            w.clear();
            w.extend_from_slice(&sigma);
            w.extend((0..self.n).filter(|i| !sigma.contains(i)));
            let mut parts = Vec::new();
            factors(&w, &mut parts);
            // Smallest factors first keeps the intermediate products lean.
            parts.sort_by_key(TruncatedSeries::num_terms);
            // A term of the running product survives to the final cutoff
            // only if the valuations the remaining factors must still add
            // leave it at or below d_int; prune everything higher as it
            // appears. suffix[k] is the valuation still to come from
            // factors k.. and prefix the valuation already accumulated.
            let vals: Vec<u32> = parts.iter().map(TruncatedSeries::val_lb).collect();
            let mut suffix = vec![0u32; parts.len() + 1];
            for k in (0..parts.len()).rev() {
                suffix[k] = suffix[k + 1].saturating_add(vals[k]);
            }
            if suffix[0] > self.d_int {
                continue; // the whole product starts beyond the cutoff
            }
            let mut term = TruncatedSeries::one(Some(self.d_int - suffix[0]));
            let mut prefix = 0u32;
            for (k, f) in parts.iter().enumerate() {
                let cap = self.d_int - suffix[k + 1];
                term = term
                    .mul(&f.truncated(cap.saturating_sub(prefix)))
                    .truncated(cap);
                prefix = prefix.saturating_add(vals[k]);
            }
            total = if parity(&w) { total.sub(&term) } else { total.add(&term) };
        }
        let v = self.vandermonde();
        total.exact_divide(&v)
    }

    /// V = prod_{a<c} (x_a - x_c), exact.
    fn vandermonde(&self) -> TruncatedSeries {
        let mut v = TruncatedSeries::one(None);
        for a in 0..self.n {
            for c in a + 1..self.n {
                v = v.mul(&self.diffs[&(a, c)]);
            }
        }
        v
    }

    /// P_lambda (undoubled) or Q_lambda (doubled) to the engine degree.
    pub fn pq(&mut self, lambda: &StrictPartition, doubled: bool) -> SeriesResult<TruncatedSeries> {
        if let Some(hit) = self.pq_memo.get(&(lambda.clone(), doubled)) {
            return Ok(hit.clone());
        }
        let r = lambda.len();
        if r > self.n {
            return Ok(TruncatedSeries::zero(Some(self.d)));
        }
        for a in 0..self.n {
            for &part in lambda.parts() {
                self.bracket(a, part, doubled)?;
            }
        }
        let this = &*self;
        let result = this.symmetrize(r, |w, parts| {
            for (i, &part) in lambda.parts().iter().enumerate() {
                parts.push(this.brackets[&(w[i], part, doubled)].clone());
            }
            for i in 0..r {
                for j in i + 1..this.n {
                    parts.push(this.cov[&(w[i], w[j])].clone());
                }
            }
            for i in r..this.n {
                for j in i + 1..this.n {
                    parts.push(this.diffs[&(w[i], w[j])].clone());
                }
            }
        })?;
        let value = result.truncated(self.d);
        self.pq_memo
            .insert((lambda.clone(), doubled), value.clone());
        Ok(value)
    }

    /// The factorial s-function (two_sided switches the appendix variant).
    pub fn s(&mut self, lambda: &Partition, two_sided: bool) -> SeriesResult<TruncatedSeries> {
        if let Some(hit) = self.s_memo.get(&(lambda.clone(), two_sided)) {
            return Ok(hit.clone());
        }
        assert!(
            lambda.len() <= self.n,
            "s-functions need at least as many variables as parts"
        );
        // Exponents lambda_i + (n - i), 1-based i.
        let exponents: Vec<u32> = (0..self.n)
            .map(|i| lambda.part(i) + (self.n - 1 - i) as u32)
            .collect();
        for a in 0..self.n {
            for &k in &exponents {
                if two_sided {
                    self.bracket_two_sided(a, k)?;
                } else {
                    self.bracket(a, k, false)?;
                }
            }
        }
        let this = &*self;
        let result = this.symmetrize(this.n, |w, parts| {
            for (i, &k) in exponents.iter().enumerate() {
                let bracket = if two_sided {
                    &this.two_sided[&(w[i], k)]
                } else {
                    &this.brackets[&(w[i], k, false)]
                };
                parts.push(bracket.clone());
            }
            for i in 0..this.n {
                for j in i + 1..this.n {
                    // Every pair is a bare denominator: its unit inverse
                    // enters here and its linear part joins the Vandermonde
                    // divided out by `symmetrize`.
                    parts.push(this.u_inv[&(w[i], w[j])].clone());
                }
            }
        })?;
        let value = result.truncated(self.d);
        self.s_memo
            .insert((lambda.clone(), two_sided), value.clone());
        Ok(value)
    }
}

/// True for odd permutations.
fn parity(w: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// The P- (undoubled) or Q- (doubled) function by symmetrization.
pub(crate) fn symmetrized_pq(
    law: &FormalGroupLaw,
    lambda: &StrictPartition,
    n: usize,
    d: u32,
    doubled: bool,
    factorial: bool,
) -> SeriesResult<TruncatedSeries> {
    Engine::new(law, n, d, factorial)?.pq(lambda, doubled)
}

/// The factorial s-function (two_sided switches the appendix variant on).
pub(crate) fn symmetrized_s(
    law: &FormalGroupLaw,
    lambda: &Partition,
    n: usize,
    d: u32,
    factorial: bool,
    two_sided: bool,
) -> SeriesResult<TruncatedSeries> {
    Engine::new(law, n, d, factorial)?.s(lambda, two_sided)
}

/// The full product prod_{i<j} (x_i +_F x_j) (strict) or
/// prod_{i<=j} (x_i +_F x_j) (with the doubled diagonal), used by the
/// factorization identities.
pub fn cross_product(
    law: &FormalGroupLaw,
    n: usize,
    d: u32,
    include_diagonal: bool,
) -> SeriesResult<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(Some(d));
    for i in 1..=n as i64 {
        for j in i..=n as i64 {
            if i == j && !include_diagonal {
                continue;
            }
            let xi = TruncatedSeries::variable(Variable::x(i), Some(d));
            let xj = TruncatedSeries::variable(Variable::x(j), Some(d));
            acc = acc.mul(&law.formal_sum(&xi, &xj)?);
        }
    }
    Ok(acc)
}
