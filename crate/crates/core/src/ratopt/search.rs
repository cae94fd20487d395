//! Memoized search over the divisor lattice of `num · den`.
//!
//! A state is the multiset of prime occurrences still to be placed, encoded
//! as a mixed-radix index over the primes sorted in descending order. Each
//! step removes one factor `u/v` that must contain the largest remaining
//! prime. The smaller of `u`, `v` must also be saturated: no remaining prime
//! on that side fits without overtaking the larger side, since moving such a
//! prime into the factor never raises the total.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::TParam;
use crate::arith::{Factorization, Natural};
use crate::{Error, Result};

const STATE_LIMIT: usize = 1 << 22;
const TIE: f64 = 1e-12;

struct Slot {
    prime: u128,
    exp: u32,
    numerator: bool,
    stride: usize,
}

#[derive(Clone, Copy)]
struct Entry {
    /// Aggregated cost before the final `1/t` power.
    cost: f64,
    count: u32,
    /// Lattice index of the factor removed first.
    factor: usize,
}

struct Search {
    slots: Vec<Slot>,
    memo: Vec<Option<Entry>>,
    t: TParam,
}

/// Compares `a.0/a.1` with `b.0/b.1`.
fn cmp_frac(a: (u128, u128), b: (u128, u128)) -> Ordering {
    match (a.0.checked_mul(b.1), b.0.checked_mul(a.1)) {
        (Some(l), Some(r)) => l.cmp(&r),
        _ => (&Natural::from(a.0) * &Natural::from(b.1)).cmp(&(&Natural::from(b.0) * &Natural::from(a.1))),
    }
}

fn cmp_lists(a: &[(u128, u128)], b: &[(u128, u128)]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| cmp_frac(x, y))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| a.len().cmp(&b.len()))
}

impl Search {
    fn new(num: &Factorization, den: &Factorization, t: TParam) -> Result<Self> {
        let mut slots: Vec<Slot> = num
            .factors()
            .iter()
            .map(|&(p, e)| (p, e, true))
            .chain(den.factors().iter().map(|&(p, e)| (p, e, false)))
            .map(|(prime, exp, numerator)| Slot {
                prime,
                exp,
                numerator,
                stride: 0,
            })
            .collect();
        slots.sort_by(|a, b| b.prime.cmp(&a.prime));
        let mut total: usize = 1;
        for slot in slots.iter_mut().rev() {
            slot.stride = total;
            total = usize::try_from(slot.exp)
                .ok()
                .and_then(|e| total.checked_mul(e + 1))
                .filter(|&n| n <= STATE_LIMIT)
                .ok_or(Error::TooLarge("divisor lattice"))?;
        }
        Ok(Search {
            slots,
            memo: vec![None; total],
            t,
        })
    }

    fn digits(&self, index: usize) -> Vec<u32> {
        self.slots
            .iter()
            .map(|s| ((index / s.stride) % (s.exp as usize + 1)) as u32)
            .collect()
    }

    fn value(&self, index: usize) -> (u128, u128) {
        let (mut u, mut v) = (1u128, 1u128);
        for (slot, d) in self.slots.iter().zip(self.digits(index)) {
            let power = slot.prime.pow(d);
            if slot.numerator {
                u *= power;
            } else {
                v *= power;
            }
        }
        (u, v)
    }

    /// Factors containing one occurrence of `slots[lead]`, with a saturated
    /// smaller side, as `(index, u, v)`.
    fn candidates(&self, available: &[u32], lead: usize) -> Vec<(usize, u128, u128)> {
        let mut out = Vec::new();
        let mut chosen = vec![0u32; available.len()];
        self.extend(available, lead, lead, &mut chosen, 0, 1, 1, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        available: &[u32],
        lead: usize,
        pos: usize,
        chosen: &mut [u32],
        index: usize,
        u: u128,
        v: u128,
        out: &mut Vec<(usize, u128, u128)>,
    ) {
        if pos == available.len() {
            if self.saturated(available, chosen, lead, u, v) {
                out.push((index, u, v));
            }
            return;
        }
        let slot = &self.slots[pos];
        let start = u32::from(pos == lead);
        let (mut u, mut v) = (u, v);
        for _ in 0..start {
            if slot.numerator {
                u *= slot.prime;
            } else {
                v *= slot.prime;
            }
        }
        for d in start..=available[pos] {
            chosen[pos] = d;
            self.extend(available, lead, pos + 1, chosen, index + d as usize * slot.stride, u, v, out);
            if slot.numerator {
                u = u.saturating_mul(slot.prime);
            } else {
                v = v.saturating_mul(slot.prime);
            }
        }
        chosen[pos] = 0;
    }

    fn saturated(&self, available: &[u32], chosen: &[u32], lead: usize, u: u128, v: u128) -> bool {
        let (small_is_num, small, large) = if u < v { (true, u, v) } else { (false, v, u) };
        (lead..available.len()).all(|j| {
            let slot = &self.slots[j];
            slot.numerator != small_is_num
                || chosen[j] == available[j]
                || small.saturating_mul(slot.prime) >= large
        })
    }

    fn factor_list(&self, state: usize, first: Entry) -> Vec<(u128, u128)> {
        let mut list = vec![self.value(first.factor)];
        let mut rest = state - first.factor;
        while rest != 0 {
            let e = self.memo[rest].expect("solved before use");
            list.push(self.value(e.factor));
            rest -= e.factor;
        }
        list.sort_by(|&a, &b| cmp_frac(a, b));
        list
    }

    fn better(&self, state: usize, cand: Entry, best: Entry) -> bool {
        if cand.cost < best.cost - TIE {
            return true;
        }
        if cand.cost > best.cost + TIE {
            return false;
        }
        match cand.count.cmp(&best.count) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => cmp_lists(&self.factor_list(state, cand), &self.factor_list(state, best)).is_lt(),
        }
    }

    fn solve(&mut self, state: usize) -> Entry {
        if state == 0 {
            return Entry {
                cost: 0.0,
                count: 0,
                factor: 0,
            };
        }
        if let Some(e) = self.memo[state] {
            return e;
        }
        let available = self.digits(state);
        let lead = available.iter().position(|&d| d > 0).expect("nonzero state");
        let mut best: Option<Entry> = None;
        for (factor, u, v) in self.candidates(&available, lead) {
            let rest = self.solve(state - factor);
            let measure = libm::log(u.max(v) as f64);
            let cand = Entry {
                cost: self.t.combine(rest.cost, self.t.factor_cost(measure)),
                count: rest.count + 1,
                factor,
            };
            best = match best {
                Some(b) if !self.better(state, cand, b) => Some(b),
                _ => Some(cand),
            };
        }
        let best = best.expect("the lead prime alone is always a candidate");
        self.memo[state] = Some(best);
        best
    }
}

/// Optimal factor list `[(u, v)]`, sorted ascending by `u/v`, for the
/// positive rational `num/den` given as coprime factorizations.
pub(crate) fn optimize(num: &Factorization, den: &Factorization, t: TParam) -> Result<Vec<(u128, u128)>> {
    let mut search = Search::new(num, den, t)?;
    let full = search.memo.len() - 1;
    if full == 0 {
        return Ok(Vec::new());
    }
    let first = search.solve(full);
    Ok(search.factor_list(full, first))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize_u128;

    fn run(n: u128, d: u128, t: f64) -> Vec<(u128, u128)> {
        let t = TParam::new(t).unwrap();
        optimize(&factorize_u128(n).unwrap(), &factorize_u128(d).unwrap(), t).unwrap()
    }

    #[test]
    fn prime_powers_split_at_large_t() {
        assert_eq!(run(8, 1, 3.0), vec![(2, 1), (2, 1), (2, 1)]);
        assert_eq!(run(8, 1, 1.0), vec![(8, 1)]);
    }

    #[test]
    fn pairs_across_sides() {
        // 2/3 costs only ln 3, cheaper than 2 and 1/3 separately for every t.
        assert_eq!(run(2, 3, 2.0), vec![(2, 3)]);
        assert_eq!(run(2, 3, 1.0), vec![(2, 3)]);
    }

    #[test]
    fn infinity_takes_the_largest_prime() {
        let pairs = run(30, 7, f64::INFINITY);
        let worst = pairs.iter().map(|&(u, v)| u.max(v)).max().unwrap();
        assert_eq!(worst, 7);
    }

    #[test]
    fn frac_comparison_survives_overflow() {
        let big = 1u128 << 100;
        assert_eq!(cmp_frac((big, 3), (big, 5)), Ordering::Greater);
        assert_eq!(cmp_frac((big + 1, big), (1, 1)), Ordering::Greater);
    }
}
