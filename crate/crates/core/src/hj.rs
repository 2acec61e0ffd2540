//! Hirzebruch-Jung continued fractions.
//!
//! For coprime integers 0 < q < n, the expansion
//!
//! ```text
//! n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r))        (all b_t >= 2)
//! ```
//!
//! encodes the chain of rational curves resolving the quotient singularity
//! of type 1/n(1, q). Alongside the partial quotients we keep two integer
//! sequences:
//!
//! * `i_0 = n, i_1 = q, ..., i_r = 1, i_{r+1} = 0`, strictly decreasing,
//!   with `i_{t-1} = b_t i_t - i_{t+1}`;
//! * `j_0 = 0, j_1 = 1, ..., j_r = q', j_{r+1} = n`, strictly increasing
//!   from t = 1 on, with `j_{t+1} = b_t j_t - j_{t-1}`, where `q'` is the
//!   inverse of q modulo n.
//!
//! The pair satisfies `i_t j_{t+1} - i_{t+1} j_t = n` for all t and
//! `q j_t = i_t (mod n)`; both identities are enforced by [`validate`].

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::reps::CharIndex;

/// A cyclic quotient singularity type 1/n(1, q): the group Z/n acting on
/// the plane by (x, y) -> (e x, e^q y) for a primitive n-th root of unity e.
///
/// Construction validates 0 < q < n and gcd(n, q) = 1, so a value of this
/// type is always a genuine singularity type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SingularityType {
    n: i64,
    q: i64,
}

impl SingularityType {
    pub fn new(n: i64, q: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::ModulusTooSmall { n });
        }
        if q <= 0 || q >= n {
            return Err(Error::QOutOfRange { n, q });
        }
        let gcd = n.gcd(&q);
        if gcd != 1 {
            return Err(Error::NotCoprime { n, q, gcd });
        }
        Ok(SingularityType { n, q })
    }

    pub fn n(self) -> i64 {
        self.n
    }

    pub fn q(self) -> i64 {
        self.q
    }

    /// The character with canonical representative `v mod n`.
    pub fn char(self, v: i64) -> CharIndex {
        CharIndex::reduce(v, self.n)
    }
}

/// The inverse of `q` modulo `n`, as the canonical representative in
/// [1, n-1]. Fails when `n < 2` or gcd(q, n) != 1.
pub fn inverse_mod(q: i64, n: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall { n });
    }
    let ext = q.rem_euclid(n).extended_gcd(&n);
    if ext.gcd != 1 {
        return Err(Error::NotCoprime { n, q, gcd: ext.gcd });
    }
    Ok(ext.x.rem_euclid(n))
}

/// The full continued fraction data of a singularity type.
///
/// Indexing follows the resolution graph: `b(t)` is defined for t in
/// [1, r], while `i(t)` and `j(t)` are defined for t in [0, r+1].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HjExpansion {
    base: SingularityType,
    q_prime: i64,
    b: Vec<i64>,
    i: Vec<i64>,
    j: Vec<i64>,
}

impl HjExpansion {
    pub fn base(&self) -> SingularityType {
        self.base
    }

    pub fn n(&self) -> i64 {
        self.base.n()
    }

    pub fn q(&self) -> i64 {
        self.base.q()
    }

    /// The inverse of q modulo n.
    pub fn q_prime(&self) -> i64 {
        self.q_prime
    }

    /// The number of partial quotients, which is also the number of
    /// exceptional curves in the minimal resolution.
    pub fn r(&self) -> usize {
        self.b.len()
    }

    /// The t-th partial quotient, t in [1, r]; the t-th curve of the
    /// resolution has self-intersection -b(t).
    pub fn b(&self, t: usize) -> i64 {
        assert!(
            (1..=self.r()).contains(&t),
            "b index {t} outside [1, {}]",
            self.r()
        );
        self.b[t - 1]
    }

    /// The descending sequence value i_t, t in [0, r+1].
    pub fn i(&self, t: usize) -> i64 {
        self.i[t]
    }

    /// The ascending dual sequence value j_t, t in [0, r+1].
    pub fn j(&self, t: usize) -> i64 {
        self.j[t]
    }

    pub fn b_seq(&self) -> &[i64] {
        &self.b
    }

    pub fn i_seq(&self) -> &[i64] {
        &self.i
    }

    pub fn j_seq(&self) -> &[i64] {
        &self.j
    }

    /// The character with canonical representative `v mod n`.
    pub fn char(&self, v: i64) -> CharIndex {
        self.base.char(v)
    }
}

/// Compute the expansion of n/q. Total on every valid [`SingularityType`].
pub fn expand(s: SingularityType) -> HjExpansion {
    let mut i = vec![s.n(), s.q()];
    let mut b = Vec::new();
    // b_t = ceil(i_{t-1} / i_t) is the unique choice making the next
    // remainder i_{t+1} = b_t i_t - i_{t-1} land in [0, i_t).
    while *i.last().unwrap() != 0 {
        let prev = i[i.len() - 2];
        let cur = i[i.len() - 1];
        let bt = Integer::div_ceil(&prev, &cur);
        b.push(bt);
        i.push(bt * cur - prev);
    }
    let r = b.len();
    let mut j = vec![0_i64, 1];
    for t in 2..=r + 1 {
        j.push(b[t - 2] * j[t - 1] - j[t - 2]);
    }
    let q_prime = j[r];
    HjExpansion {
        base: s,
        q_prime,
        b,
        i,
        j,
    }
}

/// Value of the continued fraction [b_1, ..., b_r] as an exact rational,
/// or None when the sequence is empty or a partial evaluation vanishes
/// (which cannot happen for sequences with every b_t >= 2).
fn continued_fraction_value(b: &[i64]) -> Option<Ratio<i128>> {
    let mut acc: Option<Ratio<i128>> = None;
    for &bt in b.iter().rev() {
        let bt = Ratio::from_integer(i128::from(bt));
        acc = Some(match acc {
            None => bt,
            Some(tail) if tail != Ratio::from_integer(0) => bt - tail.recip(),
            Some(_) => return None,
        });
    }
    acc
}

/// Check every defining identity of an expansion, including the exact
/// rational reconstruction of n/q from the partial quotients.
pub fn validate(e: &HjExpansion) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let n = e.n();
    let q = e.q();
    let r = e.r();

    let shape_ok = e.i.len() == r + 2 && e.j.len() == r + 2;
    rep.record(
        "shape",
        shape_ok,
        format!(
            "r = {r}; |i| = {}, |j| = {} (expected {})",
            e.i.len(),
            e.j.len(),
            r + 2
        ),
    );
    if !shape_ok {
        return rep;
    }

    let endpoints = e.i[0] == n && e.i[1] == q && e.i[r] == 1 && e.i[r + 1] == 0;
    rep.record(
        "i.endpoints",
        endpoints,
        format!(
            "i_0 = {}, i_1 = {}, i_r = {}, i_r+1 = {} against n = {n}, q = {q}",
            e.i[0],
            e.i[1],
            e.i[r],
            e.i[r + 1]
        ),
    );

    let decreasing = e.i.windows(2).all(|w| w[0] > w[1]);
    rep.record(
        "i.decreasing",
        decreasing,
        if decreasing {
            format!("i_0 > i_1 > ... > i_{}", r + 1)
        } else {
            let t = e.i.windows(2).position(|w| w[0] <= w[1]).unwrap();
            format!("i_{t} = {} <= i_{} = {}", e.i[t], t + 1, e.i[t + 1])
        },
    );

    let mut recurrence = Ok(());
    for t in 0..r {
        if e.i[t] != e.b[t] * e.i[t + 1] - e.i[t + 2] {
            recurrence = Err(t);
            break;
        }
    }
    rep.record(
        "i.recurrence",
        recurrence.is_ok(),
        match recurrence {
            Ok(()) => format!("i_t-1 = b_t i_t - i_t+1 holds for t in [1, {r}]"),
            Err(t) => format!(
                "t = {}: b_t i_t - i_t+1 = {} but i_t-1 = {}",
                t + 1,
                e.b[t] * e.i[t + 1] - e.i[t + 2],
                e.i[t]
            ),
        },
    );

    let b_ok = e.b.iter().all(|&bt| bt >= 2);
    rep.record(
        "b.at_least_two",
        b_ok,
        if b_ok {
            format!("all {r} partial quotients are >= 2")
        } else {
            let t = e.b.iter().position(|&bt| bt < 2).unwrap();
            format!("b_{} = {}", t + 1, e.b[t])
        },
    );

    rep.record(
        "j.start",
        e.j[0] == 0 && e.j[1] == 1,
        format!("j_0 = {}, j_1 = {}", e.j[0], e.j[1]),
    );

    let mut dual_rec = Ok(());
    for t in 2..=r + 1 {
        if e.j[t] != e.b[t - 2] * e.j[t - 1] - e.j[t - 2] {
            dual_rec = Err(t);
            break;
        }
    }
    rep.record(
        "j.recurrence",
        dual_rec.is_ok(),
        match dual_rec {
            Ok(()) => format!("j_t+1 = b_t j_t - j_t-1 holds for t in [1, {r}]"),
            Err(t) => format!(
                "t = {t}: b_t-1 j_t-1 - j_t-2 = {} but j_t = {}",
                e.b[t - 2] * e.j[t - 1] - e.j[t - 2],
                e.j[t]
            ),
        },
    );

    let increasing = e.j[1..].windows(2).all(|w| w[0] < w[1]);
    rep.record(
        "j.increasing",
        increasing,
        if increasing {
            format!("j_1 < j_2 < ... < j_{}", r + 1)
        } else {
            format!("dual sequence not strictly increasing: {:?}", e.j)
        },
    );

    rep.record(
        "j.closes",
        e.j[r] == e.q_prime && e.j[r + 1] == n,
        format!(
            "j_r = {} against q' = {}; j_r+1 = {} against n = {n}",
            e.j[r],
            e.q_prime,
            e.j[r + 1]
        ),
    );

    let inv_ok = (1..n).contains(&e.q_prime) && (q * e.q_prime).rem_euclid(n) == 1;
    rep.record(
        "q_prime.inverse",
        inv_ok,
        format!(
            "q q' = {} * {} = {} (mod {n})",
            q,
            e.q_prime,
            (q * e.q_prime).rem_euclid(n)
        ),
    );

    let mut det = Ok(());
    for t in 0..=r {
        if e.i[t] * e.j[t + 1] - e.i[t + 1] * e.j[t] != n {
            det = Err(t);
            break;
        }
    }
    rep.record(
        "determinant",
        det.is_ok(),
        match det {
            Ok(()) => format!("i_t j_t+1 - i_t+1 j_t = {n} for t in [0, {r}]"),
            Err(t) => format!(
                "t = {t}: i_t j_t+1 - i_t+1 j_t = {} != {n}",
                e.i[t] * e.j[t + 1] - e.i[t + 1] * e.j[t]
            ),
        },
    );

    let mut compat = Ok(());
    for t in 0..=r + 1 {
        if (q * e.j[t] - e.i[t]).rem_euclid(n) != 0 {
            compat = Err(t);
            break;
        }
    }
    rep.record(
        "char.compat",
        compat.is_ok(),
        match compat {
            Ok(()) => format!("q j_t = i_t (mod {n}) for t in [0, {}]", r + 1),
            Err(t) => format!(
                "t = {t}: q j_t = {} but i_t = {} (mod {n})",
                (q * e.j[t]).rem_euclid(n),
                e.i[t].rem_euclid(n)
            ),
        },
    );

    let target = Ratio::new(i128::from(n), i128::from(q));
    let value = continued_fraction_value(&e.b);
    rep.record(
        "reconstruction",
        value == Some(target),
        match value {
            Some(v) => format!("[{:?}] evaluates to {v}, target {target}", e.b),
            None => "continued fraction evaluation degenerated".to_string(),
        },
    );

    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn instance(n: i64, q: i64) -> HjExpansion {
        expand(SingularityType::new(n, q).unwrap())
    }

    #[test]
    fn five_two() {
        let e = instance(5, 2);
        assert_eq!(e.b_seq(), &[3, 2]);
        assert_eq!(e.i_seq(), &[5, 2, 1, 0]);
        assert_eq!(e.j_seq(), &[0, 1, 3, 5]);
        assert_eq!(e.q_prime(), 3);
        assert_eq!(e.r(), 2);
    }

    #[test]
    fn four_one() {
        let e = instance(4, 1);
        assert_eq!(e.b_seq(), &[4]);
        assert_eq!(e.i_seq(), &[4, 1, 0]);
        assert_eq!(e.j_seq(), &[0, 1, 4]);
        assert_eq!(e.q_prime(), 1);
    }

    #[test]
    fn seven_five() {
        let e = instance(7, 5);
        assert_eq!(e.b_seq(), &[2, 2, 3]);
        assert_eq!(e.i_seq(), &[7, 5, 3, 1, 0]);
        assert_eq!(e.j_seq(), &[0, 1, 2, 3, 7]);
        assert_eq!(e.q_prime(), 3);
    }

    #[test]
    fn six_five_is_the_a5_chain() {
        let e = instance(6, 5);
        assert_eq!(e.b_seq(), &[2, 2, 2, 2, 2]);
        assert_eq!(e.j_seq(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn seven_three_expands_to_a_palindrome() {
        assert_eq!(instance(7, 3).b_seq(), &[3, 2, 2]);
        assert_eq!(instance(7, 5).b_seq(), &[2, 2, 3]);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(
            SingularityType::new(4, 2),
            Err(Error::NotCoprime { gcd: 2, .. })
        ));
        assert!(matches!(
            SingularityType::new(5, 0),
            Err(Error::QOutOfRange { .. })
        ));
        assert!(matches!(
            SingularityType::new(5, 5),
            Err(Error::QOutOfRange { .. })
        ));
        assert!(matches!(
            SingularityType::new(5, 7),
            Err(Error::QOutOfRange { .. })
        ));
        assert!(matches!(
            SingularityType::new(1, 1),
            Err(Error::ModulusTooSmall { .. })
        ));
    }

    #[test]
    fn modular_inverses() {
        assert_eq!(inverse_mod(2, 5).unwrap(), 3);
        assert_eq!(inverse_mod(1, 7).unwrap(), 1);
        assert_eq!(inverse_mod(5, 7).unwrap(), 3);
        assert_eq!(inverse_mod(-2, 5).unwrap(), 2);
        assert!(matches!(
            inverse_mod(2, 4),
            Err(Error::NotCoprime { gcd: 2, .. })
        ));
    }

    #[test]
    fn validate_passes_on_small_sweep() {
        for n in 2..=60 {
            for q in 1..n {
                if n.gcd(&q) != 1 {
                    continue;
                }
                let rep = validate(&instance(n, q));
                assert!(
                    rep.pass(),
                    "validate failed for ({n}, {q}): {:?}",
                    rep.failures().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn validate_flags_a_corrupted_dual_sequence() {
        let mut e = instance(5, 2);
        e.j[2] = 4;
        let rep = validate(&e);
        assert!(!rep.pass());
        let failed: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"determinant"));
        assert!(failed.contains(&"j.recurrence"));
    }

    #[test]
    fn validate_flags_a_corrupted_partial_quotient() {
        let mut e = instance(7, 5);
        e.b[1] = 1;
        let rep = validate(&e);
        let failed: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"b.at_least_two"));
        assert!(failed.contains(&"i.recurrence"));
        assert!(failed.contains(&"reconstruction"));
    }

    proptest! {
        #[test]
        fn validate_passes_on_random_instances(n in 2_i64..500, k in 1_i64..500) {
            let q = 1 + k % (n - 1).max(1);
            prop_assume!(n.gcd(&q) == 1 && q < n);
            prop_assert!(validate(&instance(n, q)).pass());
        }

        #[test]
        fn inverse_mod_matches_definition(n in 2_i64..10_000, q in 1_i64..10_000) {
            prop_assume!(n.gcd(&q) == 1);
            let inv = inverse_mod(q, n).unwrap();
            prop_assert!((1..=n - 1).contains(&inv));
            prop_assert_eq!((q * inv).rem_euclid(n), 1);
        }
    }
}
