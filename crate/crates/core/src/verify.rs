//! The desk-scale verification grid: every structural identity the engine
//! rests on, checked exhaustively up to a rank bound. Cells are independent
//! and run in parallel; results are canonicalized before reporting so the
//! output is byte-identical across runs.

use crate::error::EisenError;
use crate::factors::{
    b_alpha, pole_order_at, r_inverse_root_product, r_inverse_telescoped, w_alpha_set,
    w_alpha_zero_set, CriticalPoint,
};
use crate::orbits::{
    brute_force_orbit_in, change_intervals, closed_form_check, constructive_orbit, minimal_intervals,
    orbit_sum, ChangeInterval,
};
use crate::rat::as_i64;
use crate::shuffle::{enumerate_shuffles, Shuffle};
use crate::zeta::{canonical_argument, FactorChar};
use num::Zero;
use rayon::prelude::*;

/// One verification line: a named check, pass/fail, and a short detail
/// (counts or the first witness of failure).
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn render(&self) -> String {
        format!(
            "{} {} — {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

fn outcome(name: &str, failures: Vec<String>, checked: usize, unit: &str) -> CheckOutcome {
    match failures.first() {
        None => CheckOutcome {
            name: name.to_string(),
            passed: true,
            detail: format!("{checked} {unit} checked"),
        },
        Some(first) => CheckOutcome {
            name: name.to_string(),
            passed: false,
            detail: format!("{} failures, first: {first}", failures.len()),
        },
    }
}

/// All (m, n) cells with m ≤ n and 2 ≤ m+n ≤ max_rank.
fn cells(max_rank: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for rank in 2..=max_rank {
        for m in 1..=rank / 2 {
            out.push((m, rank - m));
        }
    }
    out
}

/// All (m, n) cells including m > n (the telescoping identity does not
/// need the standing hypothesis m ≤ n).
fn cells_unordered(max_rank: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for rank in 2..=max_rank {
        for m in 1..rank {
            out.push((m, rank - m));
        }
    }
    out
}

/// Telescoping oracle: reduce(root product) = reduce(telescoped) for every
/// shuffle, certifying the telescoped form and j_i = w(i) − i + m.
pub fn check_telescoping(max_rank: usize) -> CheckOutcome {
    let results: Vec<(usize, Vec<String>)> = cells_unordered(max_rank)
        .par_iter()
        .map(|&(m, n)| {
            let mut failures = Vec::new();
            let shuffles = enumerate_shuffles(m, n).expect("within cap");
            for w in &shuffles {
                for char_ in [FactorChar::Trivial, FactorChar::Nontrivial] {
                    let a = r_inverse_root_product(w, char_);
                    let b = r_inverse_telescoped(w, char_);
                    if !a.reduced_eq(&b) {
                        failures.push(format!("m={m} n={n} w={w}"));
                    }
                }
            }
            (shuffles.len(), failures)
        })
        .collect();
    let checked: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    outcome("telescoping-oracle", failures, checked, "shuffles")
}

/// Pole-order oracle: the combinatorial count equals the negative valuation
/// of the Laurent expansion of the telescoped product, for every shuffle
/// and every critical alpha.
pub fn check_pole_orders(max_rank: usize) -> CheckOutcome {
    let results: Vec<(usize, Vec<String>)> = cells(max_rank)
        .par_iter()
        .map(|&(m, n)| {
            let mut failures = Vec::new();
            let mut checked = 0usize;
            let shuffles = enumerate_shuffles(m, n).expect("within cap");
            for alpha in 0..=(m + n) / 2 {
                let pt = CriticalPoint::new(m, n, alpha, true).expect("valid point");
                for w in &shuffles {
                    checked += 1;
                    let combinatorial = pole_order_at(w, &pt);
                    let series = r_inverse_telescoped(w, FactorChar::Trivial)
                        .substitute(pt.s().clone())
                        .laurent(2);
                    let valuation = match series.and_then(|s| {
                        s.valuation().ok_or_else(|| {
                            EisenError::IncreaseTruncation("zero expansion".into())
                        })
                    }) {
                        Ok(v) => v,
                        Err(e) => {
                            failures.push(format!("m={m} n={n} alpha={alpha} w={w}: {e}"));
                            continue;
                        }
                    };
                    if combinatorial != -valuation.min(0) || valuation > 0 {
                        failures.push(format!(
                            "m={m} n={n} alpha={alpha} w={w}: count {combinatorial} vs valuation {valuation}"
                        ));
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    let checked: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    outcome("pole-order-oracle", failures, checked, "(shuffle, alpha) pairs")
}

/// Extremal set: the maximal pole order equals b_α and is attained exactly
/// on W_α.
pub fn check_w_alpha_maximality(max_rank: usize) -> CheckOutcome {
    let results: Vec<(usize, Vec<String>)> = cells(max_rank)
        .par_iter()
        .map(|&(m, n)| {
            let mut failures = Vec::new();
            let mut checked = 0usize;
            let shuffles = enumerate_shuffles(m, n).expect("within cap");
            for alpha in 0..=(m + n) / 2 {
                checked += 1;
                let pt = CriticalPoint::new(m, n, alpha, true).expect("valid point");
                let b = i64::from(b_alpha(&pt));
                let max = shuffles.iter().map(|w| pole_order_at(w, &pt)).max().unwrap();
                if max != b {
                    failures.push(format!("m={m} n={n} alpha={alpha}: max order {max} != b {b}"));
                    continue;
                }
                let argmax: Vec<&Shuffle> = shuffles
                    .iter()
                    .filter(|w| pole_order_at(w, &pt) == b)
                    .collect();
                let wa = w_alpha_set(&pt, &shuffles);
                if argmax.len() != wa.len() || !argmax.iter().zip(&wa).all(|(a, b)| **a == *b) {
                    failures.push(format!("m={m} n={n} alpha={alpha}: argmax != W_alpha"));
                    continue;
                }
                // m_w dichotomy on W_alpha
                for w in &wa {
                    let mw = w.first_raised();
                    if mw > 2 || (mw == 2 && !pt.is_alpha_m_n()) {
                        failures.push(format!("m={m} n={n} alpha={alpha}: w={w} has m_w={mw}"));
                    }
                }
                // W_alpha^0 is nonempty, inside W_alpha, singleton iff m >= alpha+1
                let w0 = w_alpha_zero_set(&pt, &shuffles);
                if w0.is_empty() || !w0.iter().all(|w| wa.contains(w)) {
                    failures.push(format!("m={m} n={n} alpha={alpha}: bad W_alpha^0"));
                }
                if (m >= alpha + 1) != (w0.len() == 1) {
                    failures.push(format!(
                        "m={m} n={n} alpha={alpha}: |W_alpha^0| = {} vs singleton rule",
                        w0.len()
                    ));
                }
            }
            (checked, failures)
        })
        .collect();
    let checked: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    outcome("w-alpha-maximality", failures, checked, "(m, n, alpha) cells")
}

/// α = 0: W₀ is the singleton with the block-swap pattern w(m+j) = j,
/// w(i) = n + i.
pub fn check_alpha_zero_singleton(max_rank: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for (m, n) in cells(max_rank) {
        checked += 1;
        let pt = CriticalPoint::new(m, n, 0, true).expect("valid point");
        let shuffles = enumerate_shuffles(m, n).expect("within cap");
        let wa = w_alpha_set(&pt, &shuffles);
        if wa != vec![Shuffle::longest(m, n)] {
            failures.push(format!("m={m} n={n}: W_0 = {wa:?}"));
        }
    }
    outcome("alpha-zero-singleton", failures, checked, "(m, n) cells")
}

/// Orbit oracle: brute-force Λ_s-image orbits coincide with the
/// constructive interval-union orbits, and orbit sizes are powers of two.
pub fn check_orbit_oracle(max_rank: usize) -> CheckOutcome {
    let results: Vec<(usize, Vec<String>)> = cells(max_rank)
        .par_iter()
        .map(|&(m, n)| {
            let mut failures = Vec::new();
            let mut checked = 0usize;
            let universe = enumerate_shuffles(m, n).expect("within cap");
            for alpha in 0..=(m + n) / 2 {
                let pt = CriticalPoint::new(m, n, alpha, true).expect("valid point");
                for w in &universe {
                    checked += 1;
                    let brute = brute_force_orbit_in(w, &pt, &universe);
                    match constructive_orbit(w, &pt) {
                        Ok((_, constructive)) => {
                            if brute != constructive {
                                failures.push(format!(
                                    "m={m} n={n} alpha={alpha} w={w}: brute {brute:?} vs constructive {constructive:?}"
                                ));
                            } else if !brute.len().is_power_of_two() {
                                failures.push(format!(
                                    "m={m} n={n} alpha={alpha} w={w}: orbit size {}",
                                    brute.len()
                                ));
                            }
                        }
                        Err(e) => failures.push(format!("m={m} n={n} alpha={alpha} w={w}: {e}")),
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    let checked: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    outcome("orbit-oracle", failures, checked, "(shuffle, alpha) pairs")
}

/// Interval structure at every base point with n > α: block values form
/// consecutive integers interleaved with strict prefix dominance, the
/// interval union is a contiguous range, the per-interval factors carry
/// exactly one L(t+1)-type pole on the base side and one L(t)-type on the
/// swapped side, and the unit factors match base-by-base (the a₀ = b₀
/// mechanism).
pub fn check_interval_structure(max_rank: usize) -> CheckOutcome {
    let results: Vec<(usize, Vec<String>)> = cells(max_rank)
        .par_iter()
        .map(|&(m, n)| {
            let mut failures = Vec::new();
            let mut checked = 0usize;
            let universe = enumerate_shuffles(m, n).expect("within cap");
            for alpha in 0..=(m + n) / 2 {
                if n <= alpha {
                    continue; // the m = n = alpha layout is checked by the vanishing lemma
                }
                let pt = CriticalPoint::new(m, n, alpha, true).expect("valid point");
                let mut seen = std::collections::BTreeSet::new();
                for w in &universe {
                    let (base, intervals) = match change_intervals(w, &pt) {
                        Ok(x) => x,
                        Err(e) => {
                            failures.push(format!("m={m} n={n} alpha={alpha} w={w}: {e}"));
                            continue;
                        }
                    };
                    if !seen.insert(base.clone()) || intervals.is_empty() {
                        continue;
                    }
                    checked += 1;
                    if let Err(msg) = interval_diagnostics(&base, &intervals, &pt) {
                        failures.push(format!("m={m} n={n} alpha={alpha} base={base}: {msg}"));
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    let checked: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    outcome("interval-structure", failures, checked, "base points")
}

/// The structural facts behind the pole-cancellation argument, checked on
/// one base point.
fn interval_diagnostics(
    base: &Shuffle,
    intervals: &[ChangeInterval],
    pt: &CriticalPoint,
) -> Result<(), String> {
    let d = pt.m() + pt.n() - pt.alpha();
    let n = pt.n() as i64;
    let alpha = pt.alpha() as i64;

    // contiguity of the union
    for pair in intervals.windows(2) {
        if pair[1].start != pair[0].start + pair[0].len {
            return Err(format!(
                "intervals not connected: {:?} then {:?}",
                pair[0], pair[1]
            ));
        }
    }

    for iv in intervals {
        // consecutive-integer layout with strict prefix dominance
        let mut labelled: Vec<(usize, bool)> = Vec::new(); // (value, from base block)
        for i in iv.positions() {
            labelled.push((base.image(i), true));
            labelled.push((base.image(d + i), false));
        }
        labelled.sort();
        let lo = labelled[0].0;
        if !labelled.iter().enumerate().all(|(k, (v, _))| *v == lo + k) {
            return Err(format!("interval {iv:?} values are not consecutive"));
        }
        let mut base_count = 0i64;
        let mut shift_count = 0i64;
        for (k, (_, from_base)) in labelled.iter().enumerate() {
            if *from_base {
                base_count += 1;
            } else {
                shift_count += 1;
            }
            let is_last = k + 1 == labelled.len();
            if (is_last && base_count != shift_count)
                || (!is_last && base_count <= shift_count)
            {
                return Err(format!("interval {iv:?} violates the run-length pattern"));
            }
        }

        // exactly one argument-1 factor on the base side, at the interval
        // start; exactly one argument-0 factor on the swapped side, at the
        // interval end; units elsewhere, matching base-by-base
        let mut base_units = Vec::new();
        let mut swap_units = Vec::new();
        for i in iv.positions() {
            let arg_base = n - alpha + 2 * i as i64 - base.image(i) as i64;
            let arg_swap = n - alpha + 2 * i as i64 - base.image(d + i) as i64;
            match arg_base {
                1 if i == iv.start => {}
                0 | 1 => return Err(format!("base factor at i={i} has argument {arg_base}")),
                _ => base_units.push(canonical_argument(&crate::rat::rat_int(arg_base)).0),
            }
            match arg_swap {
                0 if i == iv.end() => {}
                0 | 1 => return Err(format!("swapped factor at i={i} has argument {arg_swap}")),
                _ => swap_units.push(canonical_argument(&crate::rat::rat_int(arg_swap)).0),
            }
        }
        base_units.sort();
        swap_units.sort();
        if base_units != swap_units {
            return Err(format!(
                "unit arguments differ across interval {iv:?}: {base_units:?} vs {swap_units:?}"
            ));
        }
    }
    Ok(())
}

/// Closed forms: the directly summed Σ_{W_α} r⁻¹ equals the
/// case-appropriate closed form for every valid cell.
pub fn check_closed_forms(max_rank: usize) -> CheckOutcome {
    let results: Vec<(usize, Vec<String>)> = cells(max_rank)
        .par_iter()
        .map(|&(m, n)| {
            let mut failures = Vec::new();
            let mut checked = 0usize;
            for alpha in 0..=(m + n) / 2 {
                let pt = CriticalPoint::new(m, n, alpha, true).expect("valid point");
                checked += 1;
                match closed_form_check(&pt, 2) {
                    Ok(rep) if rep.equal => {}
                    Ok(rep) => failures.push(format!(
                        "m={m} n={n} alpha={alpha} ({}): direct {} vs closed {}",
                        rep.case_name,
                        rep.direct.render(),
                        rep.closed.render()
                    )),
                    Err(e) => failures.push(format!("m={m} n={n} alpha={alpha}: {e}")),
                }
            }
            (checked, failures)
        })
        .collect();
    let checked: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    outcome("closed-forms", failures, checked, "(m, n, alpha) cells")
}

/// Orbit-sum bounds: every orbit sum has pole order ≤ 1; order 0 whenever
/// α+1 > m (with n > α); for m = n = α every orbit sum vanishes at t = 0.
pub fn check_orbit_sum_bounds(max_rank: usize) -> CheckOutcome {
    let results: Vec<(usize, Vec<String>)> = cells(max_rank)
        .par_iter()
        .map(|&(m, n)| {
            let mut failures = Vec::new();
            let mut checked = 0usize;
            let universe = enumerate_shuffles(m, n).expect("within cap");
            for alpha in 0..=(m + n) / 2 {
                let pt = CriticalPoint::new(m, n, alpha, true).expect("valid point");
                let trunc = crate::default_truncation(b_alpha(&pt));
                let mut seen = std::collections::BTreeSet::new();
                for w in &universe {
                    let members = brute_force_orbit_in(w, &pt, &universe);
                    if !seen.insert(members[0].clone()) {
                        continue;
                    }
                    checked += 1;
                    let sum = match orbit_sum(&members, &pt, trunc) {
                        Ok(s) => s,
                        Err(e) => {
                            failures.push(format!("m={m} n={n} alpha={alpha} w={w}: {e}"));
                            continue;
                        }
                    };
                    let order = i64::from(sum.pole_order().order);
                    if order > 1 {
                        failures.push(format!(
                            "m={m} n={n} alpha={alpha} orbit of {w}: pole order {order}"
                        ));
                    }
                    if alpha + 1 > m && n > alpha && order != 0 {
                        failures.push(format!(
                            "m={m} n={n} alpha={alpha} orbit of {w}: expected holomorphic, got order {order}"
                        ));
                    }
                    if pt.is_alpha_m_n() {
                        let vanishes = sum
                            .value_at_zero()
                            .map(|v| v.is_zero())
                            .unwrap_or(false);
                        if !vanishes {
                            failures.push(format!(
                                "m={m} n={n} alpha={alpha} orbit of {w}: sum does not vanish at t=0"
                            ));
                        }
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    let checked: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    outcome("orbit-sum-bounds", failures, checked, "orbits")
}

/// The (m, n, alpha) = (2, 2, 1) witness: the orbit of the block swap sums
/// to L(1+t)γ(t)/(L(2+t)L(3+t)) with a certified simple pole, and the
/// classifier realizes the pole.
pub fn check_witness_2_2_1() -> CheckOutcome {
    let mut failures = Vec::new();
    let pt = CriticalPoint::new(2, 2, 1, true).expect("valid point");
    let w0 = Shuffle::new(vec![3, 4, 1, 2], 2, 2).expect("shuffle");
    let universe = enumerate_shuffles(2, 2).expect("within cap");
    let members = brute_force_orbit_in(&w0, &pt, &universe);
    let trunc = 3;
    match orbit_sum(&members, &pt, trunc) {
        Ok(sum) => {
            let work = trunc + 6;
            let e = |x: i64| crate::zeta::laurent_expand(FactorChar::Trivial, x, work).unwrap();
            let expected = e(1)
                .mul(&crate::zeta::gamma(work))
                .mul(&e(2).invert().unwrap())
                .mul(&e(3).invert().unwrap())
                .restrict(trunc);
            if sum != expected {
                failures.push(format!("sum {} != closed form", sum.render()));
            }
            let pole = sum.pole_order();
            if pole.order != 1 || pole.certainty != crate::series::Certainty::Certified {
                failures.push(format!("pole {:?}", pole));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    match crate::orbits::classify(&pt) {
        Ok(c) if c.verdict == crate::orbits::Verdict::AtMostSimplePoleRealized => {}
        Ok(c) => failures.push(format!("verdict {:?}", c.verdict)),
        Err(e) => failures.push(e.to_string()),
    }
    outcome("witness-2-2-1", failures, 1, "witness point")
}

/// GL₂ sanity: m = n = 1, α = 0 classifies as a realized simple pole with
/// witness [2,1], and the α = 0 discrepancy flag appears.
pub fn check_gl2_sanity() -> CheckOutcome {
    let mut failures = Vec::new();
    let pt = CriticalPoint::new(1, 1, 0, true).expect("valid point");
    match crate::orbits::classify(&pt) {
        Ok(c) => {
            if c.verdict != crate::orbits::Verdict::AtMostSimplePoleRealized {
                failures.push(format!("verdict {:?}", c.verdict));
            }
            if c.witnesses != vec![Shuffle::new(vec![2, 1], 1, 1).expect("shuffle")] {
                failures.push(format!("witnesses {:?}", c.witnesses));
            }
            if !c
                .annotations
                .iter()
                .any(|a| a.starts_with("alpha-zero-discrepancy"))
            {
                failures.push("missing alpha-zero-discrepancy flag".into());
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    outcome("gl2-sanity", failures, 1, "witness point")
}

/// Stabilizer: at every critical point with s > 0 the only shuffle fixing
/// the Λ_s-image of the identity is the identity; at s = 0 with m = n
/// exactly two do.
pub fn check_stabilizer(max_rank: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for (m, n) in cells(max_rank) {
        let universe = enumerate_shuffles(m, n).expect("within cap");
        for alpha in 0..=(m + n) / 2 {
            checked += 1;
            let pt = CriticalPoint::new(m, n, alpha, true).expect("valid point");
            let id = Shuffle::identity(m, n);
            let stab = brute_force_orbit_in(&id, &pt, &universe);
            let expected = if pt.s().is_zero() && m == n { 2 } else { 1 };
            if stab.len() != expected {
                failures.push(format!(
                    "m={m} n={n} alpha={alpha}: stabilizer size {} != {expected}",
                    stab.len()
                ));
            }
        }
    }
    outcome("identity-stabilizer", failures, checked, "(m, n, alpha) cells")
}

/// Half-integer sanity: away from the critical set every factor is
/// pole-free (the expansion lattice never meets {0, 1}).
pub fn check_noncritical_points(max_rank: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for (m, n) in cells(max_rank) {
        let shuffles = enumerate_shuffles(m, n).expect("within cap");
        // s = (m+n)/2 - alpha + 1/2 sits strictly between critical points
        for alpha in 0..=(m + n) / 2 {
            let pt = CriticalPoint::new(m, n, alpha, true).expect("valid point");
            let s = pt.s() + crate::rat::rat(1, 2);
            for w in &shuffles {
                checked += 1;
                let order = r_inverse_telescoped(w, FactorChar::Trivial)
                    .substitute(s.clone())
                    .pole_order()
                    .expect("substituted");
                if order != 0 {
                    failures.push(format!("m={m} n={n} s={s} w={w}: order {order}"));
                }
            }
        }
    }
    outcome(
        "noncritical-holomorphy",
        failures,
        checked,
        "(shuffle, point) pairs",
    )
}

/// Run the whole grid. `max_rank` bounds m+n everywhere; the two fixed
/// witnesses are included from rank 2 and 4 up.
pub fn run_verify(max_rank: usize) -> Vec<CheckOutcome> {
    let mut out = vec![
        check_telescoping(max_rank),
        check_pole_orders(max_rank),
        check_w_alpha_maximality(max_rank),
        check_alpha_zero_singleton(max_rank),
        check_orbit_oracle(max_rank),
        check_interval_structure(max_rank),
        check_closed_forms(max_rank),
        check_orbit_sum_bounds(max_rank),
        check_stabilizer(max_rank),
        check_noncritical_points(max_rank),
    ];
    if max_rank >= 2 {
        out.push(check_gl2_sanity());
    }
    if max_rank >= 4 {
        out.push(check_witness_2_2_1());
    }
    out
}

/// Verify that the minimal-interval scan is deterministic and within the
/// admissible position range (used by unit tests and the CLI self-checks).
pub fn intervals_within_range(w: &Shuffle, pt: &CriticalPoint) -> bool {
    let limit = pt.m().min(pt.alpha());
    minimal_intervals(w, pt)
        .iter()
        .all(|iv| iv.start >= 1 && iv.end() <= limit)
}

/// Integer-lattice sanity used by the pole-order path: at critical points
/// every telescoped argument is an integer.
pub fn arguments_are_integers(w: &Shuffle, pt: &CriticalPoint) -> bool {
    let zp = r_inverse_telescoped(w, FactorChar::Trivial);
    zp.num()
        .iter()
        .chain(zp.den().iter())
        .all(|f| as_i64(&f.arg.eval(pt.s())).is_some())
}
