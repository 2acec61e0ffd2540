//! The per-instance verification suite: every invariant the library
//! promises, bundled into one named check list for a singularity type.
//!
//! These checks are deliberately re-derivations, not re-reads: each one
//! recomputes its claim from the most primitive data available (often by
//! exhaustive enumeration) rather than trusting the constructors.

use std::collections::HashSet;

use crate::collection::build_collection;
use crate::ext::{ext_computation, verify_exceptional};
use crate::hj::{expand, validate, HjExpansion, SingularityType};
use crate::ktheory::k_matrix;
use crate::oracle::{hom_complex, oracle_ext_dims, resolution_data};
use crate::report::{SweepRow, ValidationReport};
use crate::reps::{
    digits_of, enumerate_valid_digits, is_special, is_valid_digits, non_specials_of, specials_of,
};

/// All coprime pairs (n, q) with 2 <= n <= n_max and 0 < q < n, ordered by
/// ascending n, then ascending q. This is the sweep order everywhere.
pub fn coprime_pairs(n_max: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..=n_max).flat_map(|n| {
        (1..n)
            .filter(move |&q| num_integer::gcd(n, q) == 1)
            .map(move |q| (n, q))
    })
}

/// Run the whole invariant suite on one instance. With `oracle` set, every
/// Ext entry is additionally recomputed from the projective resolution.
pub fn verify_instance(e: &HjExpansion, oracle: bool) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let n = e.n();
    let r = e.r();

    rep.merge_prefixed("hj", validate(e));

    // reversing the partial quotients expands n/q'
    let dual = expand(SingularityType::new(n, e.q_prime()).expect("q' is coprime to n"));
    let mut reversed = e.b_seq().to_vec();
    reversed.reverse();
    rep.record(
        "hj.palindrome",
        dual.b_seq() == reversed.as_slice(),
        format!(
            "expansion of {n}/{} is {:?}, reverse of {:?}",
            e.q_prime(),
            dual.b_seq(),
            e.b_seq()
        ),
    );

    digit_checks(&mut rep, e);
    collection_checks(&mut rep, e);
    ext_checks(&mut rep, e);

    let m = k_matrix(e);
    let lengths: Vec<i64> = build_collection(e).iter().map(|o| o.length()).collect();
    let expected_size = (n - r as i64 - 1) as usize;
    let generation_ok = m.size() == expected_size
        && m.is_unitriangular()
        && m.determinant() == 1
        && m.row_sums() == lengths;
    rep.record(
        "ktheory.generation",
        generation_ok,
        format!(
            "size {} (expected {expected_size}), unitriangular {}, det {}, row sums match lengths {}",
            m.size(),
            m.is_unitriangular(),
            m.determinant(),
            m.row_sums() == lengths
        ),
    );

    let specials = specials_of(e);
    let non_specials = non_specials_of(e);
    rep.record(
        "counts.partition",
        specials.len() == r + 1 && specials.len() + non_specials.len() == n as usize,
        format!(
            "{} specials (expected {}), {} non-specials, n = {n}",
            specials.len(),
            r + 1,
            non_specials.len()
        ),
    );

    if oracle {
        oracle_checks(&mut rep, e);
    }

    rep
}

fn digit_checks(rep: &mut ValidationReport, e: &HjExpansion) {
    let n = e.n();
    let q = e.q();
    let r = e.r();

    let vectors = enumerate_valid_digits(e);
    let sums: Vec<i64> = vectors
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .map(|(idx, &dt)| dt * e.i(idx + 1))
                .sum()
        })
        .collect();
    let distinct: HashSet<i64> = sums.iter().copied().collect();
    let covers = distinct.len() == sums.len()
        && sums.len() as i64 == n
        && sums.iter().all(|&s| (0..n).contains(&s));
    let vector_set: HashSet<&Vec<i64>> = vectors.iter().collect();
    let greedy_ok = (0..n).all(|d| {
        let dv = digits_of(e, e.char(d));
        is_valid_digits(e, &dv.digits) && vector_set.contains(&dv.digits)
    });
    rep.record(
        "digits.bijection",
        covers && greedy_ok,
        format!(
            "{} valid vectors, {} distinct values in [0, {}], greedy contained: {greedy_ok}",
            vectors.len(),
            distinct.len(),
            n - 1
        ),
    );

    let dual_ok = (0..n).all(|d| {
        let f = digits_of(e, e.char(d)).f;
        (0..n).contains(&f) && (q * f - d).rem_euclid(n) == 0
    });
    rep.record(
        "digits.dual_value",
        dual_ok,
        format!("0 <= f <= {} and q f = d (mod {n}) for every d", n - 1),
    );

    // for 0 < l < j_t the representative of l q stays at or above i_{t-1}
    let mut lq_ok = Ok(());
    'outer: for t in 1..=r + 1 {
        for l in 1..e.j(t) {
            if (l * q).rem_euclid(n) < e.i(t - 1) {
                lq_ok = Err((t, l));
                break 'outer;
            }
        }
    }
    rep.record(
        "digits.lq_bound",
        lq_ok.is_ok(),
        match lq_ok {
            Ok(()) => format!("rep(l q) >= i_t-1 for all 0 < l < j_t, t in [1, {}]", r + 1),
            Err((t, l)) => format!(
                "t = {t}, l = {l}: rep(l q) = {} < i_t-1 = {}",
                (l * q).rem_euclid(n),
                e.i(t - 1)
            ),
        },
    );

    let mut level_ok = Ok(());
    for d in 0..n {
        let c = e.char(d);
        let dv = digits_of(e, c);
        if d == 0 {
            if dv.f != 0 {
                level_ok = Err(d);
                break;
            }
        } else if is_special(e, c) {
            // d = i_t: the expansion is the t-th unit vector and f = j_t
            let t = (1..=r).find(|&t| e.i(t) == d).expect("special nonzero");
            let mut unit = vec![0; r];
            unit[t - 1] = 1;
            if dv.digits != unit || dv.f != e.j(t) {
                level_ok = Err(d);
                break;
            }
        } else {
            let t = (1..=r)
                .find(|&t| e.i(t - 1) > d && d > e.i(t))
                .expect("non-special has a level");
            if dv.f < 2 * e.j(t) {
                level_ok = Err(d);
                break;
            }
        }
    }
    rep.record(
        "digits.level_f",
        level_ok.is_ok(),
        match level_ok {
            Ok(()) => "f = j_t at specials, f >= 2 j_t at non-specials of level t".to_string(),
            Err(d) => format!("dual value condition fails at d = {d}"),
        },
    );
}

fn collection_checks(rep: &mut ValidationReport, e: &HjExpansion) {
    let n = e.n();
    let q = e.q();
    let objects = build_collection(e);
    let expected = (n - e.r() as i64 - 1) as usize;

    let mut ok = objects.len() == expected;
    let mut detail = format!("{} members (expected {expected})", objects.len());
    'objects: for obj in &objects {
        let d = obj.d();
        let t = obj.level();
        let window = e.i(t - 1) > d.value() && d.value() > e.i(t);
        let length_ok = obj.length() == e.j(t);
        let twist_ok = obj.twist() == e.char(d.value() - (obj.length() - 1) * q);
        let socle_ok = obj.socle_char() == d;
        let mut seen = HashSet::new();
        for (l, &c) in obj.chars().iter().enumerate() {
            let fine = c == e.char(obj.twist().value() + l as i64 * q)
                && c == e.char(d.value() - (obj.length() - 1 - l as i64) * q)
                && !is_special(e, c)
                && c >= d
                && seen.insert(c);
            if !fine {
                ok = false;
                detail = format!("E_{d}: character list breaks at position {l}");
                break 'objects;
            }
        }
        if !(window && length_ok && twist_ok && socle_ok) {
            ok = false;
            detail = format!(
                "E_{d}: window {window}, length {length_ok}, twist {twist_ok}, socle {socle_ok}"
            );
            break;
        }
    }
    rep.record("collection.structure", ok, detail);
}

fn ext_checks(rep: &mut ValidationReport, e: &HjExpansion) {
    let exc = verify_exceptional(e);
    rep.record(
        "ext.exceptional",
        exc.pass(),
        if exc.pass() {
            format!(
                "{} diagonal and {} strictly lower pairs all as required",
                exc.diagonal_pairs, exc.lower_pairs
            )
        } else {
            format!("violations: {:?}", exc.violations)
        },
    );

    let objects = build_collection(e);
    let mut euler_bad = None;
    for a in &objects {
        for b in &objects {
            let comp = ext_computation(e, a.d(), b.d()).expect("non-special");
            if !comp.euler_consistent() {
                euler_bad = Some((a.d().value(), b.d().value()));
                break;
            }
        }
    }
    rep.record(
        "ext.euler",
        euler_bad.is_none(),
        match euler_bad {
            None => format!(
                "character-level Euler number matches dimensions on all {} pairs",
                objects.len() * objects.len()
            ),
            Some((d, dp)) => format!("mismatch at pair ({d}, {dp})"),
        },
    );
}

fn oracle_checks(rep: &mut ValidationReport, e: &HjExpansion) {
    let objects = build_collection(e);
    let mut disagreement = None;
    let mut composite_bad = None;
    for a in &objects {
        let res = resolution_data(e, a.d()).expect("non-special");
        if !res.consistency(e).pass() {
            composite_bad = Some((a.d().value(), a.d().value()));
            break;
        }
        for b in &objects {
            let complex = hom_complex(e, a.d(), b.d()).expect("non-special");
            if !complex.composite_is_zero() {
                composite_bad = Some((a.d().value(), b.d().value()));
                break;
            }
            let formula = ext_computation(e, a.d(), b.d())
                .expect("non-special")
                .dims();
            let oracle = oracle_ext_dims(e, a.d(), b.d()).expect("non-special");
            if formula != oracle {
                disagreement = Some((a.d().value(), b.d().value(), formula, oracle));
                break;
            }
        }
    }
    rep.record(
        "oracle.complex",
        composite_bad.is_none(),
        match composite_bad {
            None => "resolution twists consistent and d1 d0 = 0 for all pairs".to_string(),
            Some((d, dp)) => format!("complex breaks at pair ({d}, {dp})"),
        },
    );
    rep.record(
        "oracle.agreement",
        disagreement.is_none(),
        match disagreement {
            None => format!(
                "closed form equals resolution cohomology on all {} pairs",
                objects.len() * objects.len()
            ),
            Some((d, dp, f, o)) => {
                format!("pair ({d}, {dp}): closed form {f:?}, resolution {o:?}")
            }
        },
    );
}

/// Verify a whole range of instances, one summary row per pair.
pub fn sweep(n_max: i64, oracle: bool) -> Vec<SweepRow> {
    coprime_pairs(n_max)
        .map(|(n, q)| {
            let e = expand(SingularityType::new(n, q).expect("pairs are coprime"));
            let rep = verify_instance(&e, oracle);
            SweepRow {
                n,
                q,
                pass: rep.pass(),
                failed: rep.failures().map(|c| c.name.clone()).collect(),
            }
        })
        .collect()
}
