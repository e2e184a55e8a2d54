//! Acceptance gate: one PASS/FAIL line per criterion; exits nonzero if any fails.
//! Runs without the libtest harness so the lines are never captured.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semidual::bounds::{coverage_report, feasibility_search, prove_bound, shadow_inequality_check, theorem_bound};
use semidual::enumerators::{
    alpha, alpha_by_buermann_check, binomial, build_b, enumerate_weights, f_from_decomposition, gamma_series_check,
    gleason_decompose, macwilliams, shadow_f, top_index,
};
use semidual::explorer::{involution_pipeline, non_free_witness, sharpness_search_with, SearchConfig, Visit};
use semidual::{BitVector, LinearCode};

const PROVE_BUDGET: Duration = Duration::from_secs(60);
const SHARPNESS_BUDGET: Duration = Duration::from_secs(600);
const INVOLUTION_BUDGET: Duration = Duration::from_secs(300);
const FEASIBILITY_BUDGET: Duration = Duration::from_secs(300);
const COVERAGE_WINDOW: (f64, f64) = (0.70, 0.74);
const RANDOM_MACWILLIAMS_CODES: usize = 100;
const BETWEEN_CHECKS: usize = 50;
const EXPLORATION_STEPS: usize = 25;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Minimum nonzero weight by plain subset enumeration of the basis.
fn naive_min_distance(code: &LinearCode) -> Option<usize> {
    let basis = code.basis();
    let k = basis.len();
    (1u64..1 << k)
        .map(|mask| {
            let mut v = BitVector::zeros(code.n());
            for (j, row) in basis.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    v.xor_assign(row);
                }
            }
            v.weight()
        })
        .min()
}

fn table_bound(n: usize, doubly_even: bool) -> usize {
    let mu = n / 24;
    let r = n % 24;
    let kummer = mu >= 1 && binomial(5 * mu as i64 - 1, (mu - 1) as u64) % 2u32 == BigInt::from(1);
    if r == 0 && (doubly_even || kummer) {
        return 4 * mu;
    }
    match r {
        0..=14 => 4 * mu + 2,
        16 | 18 | 20 => 4 * mu + 4,
        _ => 4 * mu + 6,
    }
}

fn criterion_bound_table() -> Outcome {
    for n in (4..=96).step_by(2) {
        for de in [false, true] {
            let got = theorem_bound(n, de).map_err(|e| e.to_string())?.bound;
            ensure(got == table_bound(n, de), || format!("n = {n}, doubly-even = {de}: {got}"))?;
        }
    }
    let sharp: Vec<usize> = (4..=22).step_by(2).map(|n| theorem_bound(n, false).unwrap().bound).collect();
    ensure(sharp == [2, 2, 2, 2, 2, 2, 4, 4, 4, 6], || format!("small lengths {sharp:?}"))?;
    ensure(theorem_bound(24, true).unwrap().bound == 4, || "n = 24 doubly-even".into())?;
    Ok("even n in 4..=96 match; n = 4..22 give 2,2,2,2,2,2,4,4,4,6; n = 24 doubly-even gives 4".into())
}

fn criterion_prover() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in (4..=240).step_by(2).filter(|n| n % 24 <= 14) {
        let r = prove_bound(n).map_err(|e| e.to_string())?;
        let expected = theorem_bound(n, false).unwrap().bound;
        ensure(r.bound == expected, || format!("n = {n}: proved {} vs {expected}", r.bound))?;
        let c = r.certificate.ok_or_else(|| format!("n = {n}: no certificate"))?;
        ensure(c.verify(), || format!("n = {n}: certificate {c} does not re-verify"))?;
        if n % 24 == 0 {
            let mu = n / 24;
            if binomial(5 * mu as i64 - 1, (mu - 1) as u64) % 2u32 == BigInt::from(1) {
                ensure(r.bound == 4 * mu, || format!("n = {n}: expected 4mu"))?;
            }
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < PROVE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} lengths, all certificates re-verify, {elapsed:.1?}"))
}

fn criterion_series() -> Outcome {
    for mu in 1..=20u64 {
        let lhs = alpha(2 * mu as usize, 12 * mu as usize);
        let rhs = 6 * binomial(5 * mu as i64 - 1, mu - 1);
        ensure(lhs == rhs, || format!("mu = {mu}: {lhs} vs {rhs}"))?;
    }
    let mut pairs = 0;
    for n in 2..=40 {
        for i in 0..=top_index(n) {
            ensure(alpha_by_buermann_check(i, n), || format!("alpha series route at i = {i}, N = {n}"))?;
            pairs += 1;
        }
    }
    let mut gammas = 0;
    for n in (2..).take_while(|&n| top_index(n) <= 8) {
        let m = top_index(n);
        for h in 0..=m {
            for k in 0..=h {
                ensure(gamma_series_check(h, k, n).unwrap(), || format!("gamma at h = {h}, k = {k}, N = {n}"))?;
                gammas += 1;
            }
        }
    }
    Ok(format!("alpha diagonal for mu = 1..20, {pairs} alpha pairs, {gammas} gamma triples"))
}

/// Data gathered from the sharpness searches and shared by criteria 4, 5 and 10.
struct SearchData {
    lines: Vec<Result<String, String>>,
    identity_checked: usize,
    identity_failure: Option<String>,
    between_checked: usize,
    between_failure: Option<String>,
    shadow_checked: usize,
    shadow_failure: Option<String>,
    elapsed: Duration,
}

fn identity_suite(d: &LinearCode) -> Result<(), String> {
    let b = build_b(d).map_err(|e| e.to_string())?;
    let dec = gleason_decompose(&b).map_err(|e| e.to_string())?;
    if !dec.eps_nonnegative_integers() {
        return Err(format!("{d:?}: eps = {:?}", dec.eps()));
    }
    let from_dec = f_from_decomposition(&dec).map_err(|e| e.to_string())?;
    let combinatorial = shadow_f(d).map_err(|e| e.to_string())?;
    if from_dec != combinatorial {
        return Err(format!("{d:?}: F mismatch {from_dec} vs {combinatorial}"));
    }
    Ok(())
}

fn between_suite(d: &LinearCode) -> Result<(), String> {
    let codes = d.selfdual_between().map_err(|e| e.to_string())?;
    let distinct = codes[0] != codes[1] && codes[1] != codes[2] && codes[0] != codes[2];
    let ok = distinct
        && codes
            .iter()
            .all(|c| c.is_self_dual() && d.is_subcode_of(c) && c.is_subcode_of(d.dual()) && c.dim() == d.dim() + 1);
    if ok {
        Ok(())
    } else {
        Err(format!("{d:?}: self-dual codes between D and D⊥ are not three"))
    }
}

fn run_searches() -> SearchData {
    let start = Instant::now();
    let mut data = SearchData {
        lines: Vec::new(),
        identity_checked: 0,
        identity_failure: None,
        between_checked: 0,
        between_failure: None,
        shadow_checked: 0,
        shadow_failure: None,
        elapsed: Duration::ZERO,
    };
    let mut configs: Vec<SearchConfig> = (4..=16).step_by(2).map(SearchConfig::new).collect();
    let mut golay = SearchConfig::new(24);
    golay.doubly_even_only = true;
    configs.push(golay);
    for cfg in configs {
        let n = cfg.n;
        let mut observe = |visit: Visit<'_>| match visit {
            Visit::SelfDual(c) => {
                if !c.is_doubly_even() && data.shadow_failure.is_none() {
                    match shadow_inequality_check(c) {
                        Ok(s) if s.holds() => data.shadow_checked += 1,
                        Ok(s) => data.shadow_failure = Some(format!("{c:?}: {s:?}")),
                        Err(e) => data.shadow_failure = Some(e.to_string()),
                    }
                }
            }
            Visit::Hyperplane(d) => {
                if n <= 16 && !d.is_doubly_even() && data.identity_failure.is_none() {
                    match identity_suite(d) {
                        Ok(()) => data.identity_checked += 1,
                        Err(e) => data.identity_failure = Some(e),
                    }
                }
                if data.between_failure.is_none() {
                    match between_suite(d) {
                        Ok(()) => data.between_checked += 1,
                        Err(e) => data.between_failure = Some(e),
                    }
                }
            }
        };
        let line = match sharpness_search_with(&cfg, &mut observe) {
            Ok(r) => {
                let dual = r.witness.dual();
                let naive = naive_min_distance(dual);
                let expected = if cfg.doubly_even_only { 4 } else { theorem_bound(n, false).unwrap().bound };
                let de_ok = !cfg.doubly_even_only || (r.witness.is_doubly_even() && (dual.n(), dual.dim()) == (24, 13));
                if r.is_sharp
                    && r.best_dual_distance == expected
                    && naive == Some(expected)
                    && r.witness.is_semi_self_dual()
                    && de_ok
                {
                    Ok(format!("n = {n}: [{},{},{}]", dual.n(), dual.dim(), expected))
                } else {
                    Err(format!("n = {n}: best {} (bound {}), naive {naive:?}", r.best_dual_distance, r.bound))
                }
            }
            Err(e) => Err(format!("n = {n}: {e}")),
        };
        data.lines.push(line);
    }
    data.elapsed = start.elapsed();

    // Longer walks that do not stop at the bound; a few hyperplanes `D ∋ 1` of
    // every visited code go through the same suites.
    for n in (6..=16).step_by(2) {
        let mut cfg = SearchConfig::new(n);
        cfg.stop_at_bound = false;
        cfg.max_neighbor_steps = EXPLORATION_STEPS;
        cfg.rng_seed = 7;
        let mut observe = |visit: Visit<'_>| {
            let Visit::SelfDual(c) = visit else { return };
            if !c.is_doubly_even() && data.shadow_failure.is_none() {
                match shadow_inequality_check(c) {
                    Ok(s) if s.holds() => data.shadow_checked += 1,
                    Ok(s) => data.shadow_failure = Some(format!("{c:?}: {s:?}")),
                    Err(e) => data.shadow_failure = Some(e.to_string()),
                }
            }
            let k = c.dim();
            for j in 1..k.min(4) {
                // even-weight coordinates kill 1, whose coordinates are all ones
                let d = c.functional_kernel(&BitVector::from_indices(k, [0, j]));
                if !d.is_doubly_even() && data.identity_failure.is_none() {
                    match identity_suite(&d) {
                        Ok(()) => data.identity_checked += 1,
                        Err(e) => data.identity_failure = Some(e),
                    }
                }
                if data.between_failure.is_none() {
                    match between_suite(&d) {
                        Ok(()) => data.between_checked += 1,
                        Err(e) => data.between_failure = Some(e),
                    }
                }
            }
        };
        if let Err(e) = sharpness_search_with(&cfg, &mut observe) {
            data.identity_failure.get_or_insert(format!("exploration at n = {n}: {e}"));
        }
    }
    data
}

fn criterion_identities(data: &SearchData) -> Outcome {
    if let Some(e) = &data.identity_failure {
        return Err(e.clone());
    }
    let six = LinearCode::from_strs(6, &["111111", "110000"]).unwrap();
    identity_suite(&six)?;
    // the only semi self-dual code of length 4 is doubly-even and has no shadow
    let four = LinearCode::from_strs(4, &["1111"]).unwrap();
    let dec = gleason_decompose(&build_b(&four).unwrap()).unwrap();
    ensure(dec.eps() == [BigRational::from_integer(1.into())], || format!("n = 4 eps {:?}", dec.eps()))?;
    let f = f_from_decomposition(&dec).unwrap();
    ensure(f.to_string() == "1 + y^4", || format!("n = 4 F = {f}"))?;
    ensure(data.identity_checked > 0, || "no searched code reached the suite".into())?;
    Ok(format!(
        "{} searched codes plus the n = 6 example; n = 4 decomposition gives eps = [1], F = 1 + y^4",
        data.identity_checked
    ))
}

fn criterion_sharpness(data: &SearchData) -> Outcome {
    let mut parts = Vec::new();
    for line in &data.lines {
        parts.push(line.clone()?);
    }
    ensure(data.elapsed < SHARPNESS_BUDGET, || format!("took {:?}", data.elapsed))?;
    Ok(format!("{} in {:.1?}", parts.join(", "), data.elapsed))
}

fn criterion_involution() -> Outcome {
    let start = Instant::now();
    let r23 = involution_pipeline(23).map_err(|e| e.to_string())?;
    ensure((r23.n, r23.dim, r23.distance) == (24, 12, 8), || format!("q = 23 code {r23:?}"))?;
    ensure(r23.stabilizes && r23.fixed_point_free, || "q = 23 involution".into())?;
    ensure(r23.free && r23.pi_self_dual && (r23.pi_n, r23.pi_dim) == (12, 6), || "q = 23 π-image".into())?;
    let r47 = involution_pipeline(47).map_err(|e| e.to_string())?;
    ensure((r47.n, r47.dim, r47.distance) == (48, 24, 12), || format!("q = 47 code {r47:?}"))?;
    ensure(r47.stabilizes && r47.fixed_point_free, || "q = 47 involution".into())?;
    ensure(r47.free && r47.pi_self_dual && (r47.pi_n, r47.pi_dim) == (24, 12), || "q = 47 π-image".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < INVOLUTION_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "[24,12,8] -> self-dual [12,6,{}]; [48,24,12] -> self-dual [24,12,{}]; {elapsed:.1?}",
        r23.pi_distance, r47.pi_distance
    ))
}

fn criterion_negative_control() -> Outcome {
    let r = non_free_witness().map_err(|e| e.to_string())?;
    ensure(!r.blocks[0].free, || "(1,2)(3,4) reported free".into())?;
    ensure(r.control_free, || "(1,3)(2,4) reported not free".into())?;
    ensure(r.blocks[1..].iter().all(|b| !b.free && b.chain_holds), || "block chains".into())?;
    Ok("(1,2)(3,4) not free, (1,3)(2,4) free; chains hold at n = 8, 12".into())
}

fn criterion_coverage() -> Outcome {
    let c = coverage_report(153).map_err(|e| e.to_string())?;
    let f = c.fraction_f64();
    ensure(f >= COVERAGE_WINDOW.0 && f <= COVERAGE_WINDOW.1, || format!("{c}"))?;
    Ok(format!("covered {c}"))
}

fn criterion_feasibility() -> Outcome {
    let start = Instant::now();
    let r = feasibility_search(120, 11, 64).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let good = r.solutions.iter().filter(|s| s.f_ok && s.b_prefix_ok).count();
    ensure(good > 0, || format!("no solution among {} tuples", r.tuples_checked))?;
    ensure(elapsed < FEASIBILITY_BUDGET, || format!("took {elapsed:?}"))?;
    let w_ok = r.solutions.iter().filter(|s| s.w_d_ok && s.w_dual_ok).count();
    Ok(format!(
        "{good} of {} tuples give F >= 0 integral with B = 1/2 + O(y^22); {w_ok} also with W_D, W_D⊥ >= 0; {elapsed:.1?}",
        r.tuples_checked
    ))
}

fn random_code(rng: &mut ChaCha8Rng) -> LinearCode {
    let n = rng.gen_range(1..=20);
    let k = rng.gen_range(0..=n);
    let rows = (0..k)
        .map(|_| BitVector::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))))
        .collect();
    LinearCode::new(n, rows).unwrap()
}

fn criterion_properties(data: &SearchData) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..RANDOM_MACWILLIAMS_CODES {
        let c = random_code(&mut rng);
        let w = enumerate_weights(&c).unwrap();
        let dual = macwilliams(&w, c.dim());
        ensure(dual == enumerate_weights(c.dual()).unwrap(), || format!("code {i}: {c:?}"))?;
        ensure(macwilliams(&dual, c.n() - c.dim()) == w, || format!("code {i}: not an involution"))?;
    }
    if let Some(e) = &data.between_failure {
        return Err(e.clone());
    }
    ensure(data.between_checked >= BETWEEN_CHECKS, || format!("only {} codes", data.between_checked))?;
    if let Some(e) = &data.shadow_failure {
        return Err(e.clone());
    }
    Ok(format!(
        "MacWilliams on {RANDOM_MACWILLIAMS_CODES} codes; three self-dual codes between D and D⊥ for {} codes; shadow inequality for {} visited codes",
        data.between_checked, data.shadow_checked
    ))
}

fn main() {
    let (search, standalone) = std::thread::scope(|s| {
        let search = s.spawn(run_searches);
        let standalone: Vec<_> = [
            (1, "bound table", criterion_bound_table as fn() -> Outcome),
            (2, "certificate prover", criterion_prover),
            (3, "series identities", criterion_series),
            (6, "involution pipeline", criterion_involution),
            (7, "negative control", criterion_negative_control),
            (8, "coverage", criterion_coverage),
            (9, "feasibility at mu = 5", criterion_feasibility),
        ]
        .into_iter()
        .map(|(id, name, f)| (id, name, s.spawn(f)))
        .collect();
        let standalone: Vec<(u32, &str, Outcome)> = standalone
            .into_iter()
            .map(|(id, name, h)| (id, name, h.join().unwrap_or_else(|_| Err("panicked".into()))))
            .collect();
        (search.join().expect("searches panicked"), standalone)
    });
    let mut results = standalone;
    results.push((4, "enumerator identities", criterion_identities(&search)));
    results.push((5, "sharpness", criterion_sharpness(&search)));
    results.push((10, "property suites", criterion_properties(&search)));
    results.sort_by_key(|r| r.0);

    let mut failed = Vec::new();
    for (id, name, outcome) in &results {
        match outcome {
            Ok(msg) => println!("PASS {id:>2} {name}: {msg}"),
            Err(msg) => {
                println!("FAIL {id:>2} {name}: {msg}");
                failed.push(*id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
