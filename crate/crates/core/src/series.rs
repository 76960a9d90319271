//! Partial sums of infinite series, with an explicit policy for when the
//! remaining terms are small enough to drop.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("series asserted alternating, but term {n} ({term}) does not alternate in sign with the previous term")]
    SignPattern { n: u64, term: f64 },
    #[error("series asserted alternating, but |term {n}| = {term} exceeds the previous magnitude")]
    Magnitude { n: u64, term: f64 },
    #[error("series is not asserted alternating; no tail bound is available")]
    NotAlternating,
    #[error("discard threshold must be positive, got {0}")]
    Threshold(f64),
    #[error("max_terms must be at least 1")]
    MaxTerms,
}

pub struct SeriesSpec {
    term: Box<dyn Fn(u64) -> f64 + Send + Sync>,
    alternating: bool,
}

impl SeriesSpec {
    pub fn new<F>(term: F, alternating: bool) -> Self
    where
        F: Fn(u64) -> f64 + Send + Sync + 'static,
    {
        SeriesSpec {
            term: Box::new(term),
            alternating,
        }
    }

    pub fn term(&self, n: u64) -> f64 {
        (self.term)(n)
    }

    pub fn is_alternating(&self) -> bool {
        self.alternating
    }
}

/// 4 Σ (−1)ⁿ/(2n+1).
pub fn leibniz() -> SeriesSpec {
    SeriesSpec::new(leibniz_term, true)
}

fn leibniz_term(n: u64) -> f64 {
    let t = 4.0 / (2 * n + 1) as f64;
    if n.is_multiple_of(2) {
        t
    } else {
        -t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscardMode {
    /// Drop once |term| < δ.
    Absolute,
    /// Drop once |term| < δ·|sum so far|.
    Relative,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscardPolicy {
    mode: DiscardMode,
    threshold: f64,
    max_terms: u64,
}

impl DiscardPolicy {
    pub fn new(mode: DiscardMode, threshold: f64, max_terms: u64) -> Result<Self, SeriesError> {
        if !(threshold > 0.0) {
            return Err(SeriesError::Threshold(threshold));
        }
        if max_terms == 0 {
            return Err(SeriesError::MaxTerms);
        }
        Ok(DiscardPolicy {
            mode,
            threshold,
            max_terms,
        })
    }

    pub fn absolute(threshold: f64) -> Result<Self, SeriesError> {
        DiscardPolicy::new(DiscardMode::Absolute, threshold, u64::MAX)
    }

    fn discards(&self, term: f64, sum: f64) -> bool {
        match self.mode {
            DiscardMode::Absolute => term.abs() < self.threshold,
            DiscardMode::Relative => term.abs() < self.threshold * sum.abs(),
        }
    }
}

/// Result of summing until the next term is negligible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    pub value: f64,
    /// Terms actually added; the first omitted term has index `terms_used`.
    pub terms_used: u64,
    /// |first omitted term|, which bounds the tail of an alternating series.
    pub discarded_bound: f64,
    /// True when `max_terms` stopped the sum before the threshold did.
    pub hit_cap: bool,
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Σ_{n<N} term(n), compensated.
pub fn partial_sum(s: &SeriesSpec, n_terms: u64) -> f64 {
    let mut acc = Compensated::default();
    for n in 0..n_terms {
        acc.add(s.term(n));
    }
    acc.value()
}

/// Adds terms until the policy declares the next one negligible.
///
/// The series must be asserted alternating; sign alternation and
/// non-increasing magnitude are checked as terms are produced.
pub fn sum_until_discardable(s: &SeriesSpec, p: &DiscardPolicy) -> Result<Truncation, SeriesError> {
    if !s.alternating {
        return Err(SeriesError::NotAlternating);
    }
    let mut acc = Compensated::default();
    let mut prev: Option<f64> = None;
    let mut n = 0u64;
    loop {
        let term = s.term(n);
        if let Some(prev) = prev {
            if term != 0.0 && prev != 0.0 && (term > 0.0) == (prev > 0.0) {
                return Err(SeriesError::SignPattern { n, term });
            }
            if term.abs() > prev.abs() {
                return Err(SeriesError::Magnitude { n, term });
            }
        }
        let sum = acc.value();
        let hit_cap = n >= p.max_terms;
        if hit_cap || p.discards(term, sum) {
            return Ok(Truncation {
                value: sum,
                terms_used: n,
                discarded_bound: term.abs(),
                hit_cap: hit_cap && !p.discards(term, sum),
            });
        }
        acc.add(term);
        prev = Some(term);
        n += 1;
    }
}

/// Leibniz approximation of π from `n_terms` terms.
///
/// With `corrected`, returns the mean of the `n_terms` and `n_terms + 1`
/// partial sums, i.e. adds half of the next term. π lies between those two
/// sums, so the mean is within half the next term of it.
pub fn leibniz_pi(n_terms: u64, corrected: bool) -> f64 {
    let s = partial_sum(&leibniz(), n_terms);
    if corrected {
        s + 0.5 * leibniz_term(n_terms)
    } else {
        s
    }
}

/// |next term|, the bound on |π − leibniz_pi(n_terms, corrected)|.
pub fn leibniz_bound(n_terms: u64, corrected: bool) -> f64 {
    let t = leibniz_term(n_terms).abs();
    if corrected {
        0.5 * t
    } else {
        t
    }
}
