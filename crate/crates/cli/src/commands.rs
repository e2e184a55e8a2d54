use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

use semidual::bounds::{coverage_report, feasibility_search, first_obstruction, prove_bound, selfdual_bound, theorem_bound, Certificate};
use semidual::codes::{extended_qr_code, qr_involution};
use semidual::enumerators::{
    alpha, alpha_by_buermann_check, binom_parity, binomial, build_b, f_from_decomposition, gamma,
    gamma_series_check, gleason_decompose, macwilliams, shadow_f, WeightEnumerator,
};
use semidual::explorer::{analyze_involution, involution_pipeline, sharpness_search, InvolutionReport, SearchConfig};
use semidual::{Error, LinearCode};

use crate::codefile::{read_perm, write_code, write_perm, CodeFile};
use crate::report::Report;
use crate::CliError;

/// Exact binomials in `series parity` are printed up to this top argument.
const EXACT_BINOMIAL_LIMIT: u64 = 4096;

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn not_computed(dim: usize, cap: usize) -> Value {
    format!("not computed: dimension {dim} exceeds cap {cap}").into()
}

pub fn cmd_analyze(path: &Path, cap: usize) -> Result<Report, CliError> {
    let (code, warning) = CodeFile::read(path)?.to_code()?;
    let mut r = analyze_code(&code, cap)?;
    r.inputs.insert("path".into(), path.display().to_string().into());
    r.inputs.insert("cap".into(), cap.into());
    r.warnings.extend(warning);
    Ok(r)
}

/// Enumerators of `C` and `C⊥`, sweeping whichever side fits under `cap`.
fn enumerators(code: &LinearCode, cap: usize) -> Result<Option<(WeightEnumerator, WeightEnumerator)>, Error> {
    let (k, n) = (code.dim(), code.n());
    if k <= cap {
        let w = WeightEnumerator::from_counts(code.weight_distribution(cap)?);
        let dual = macwilliams(&w, k);
        Ok(Some((w, dual)))
    } else if n - k <= cap {
        let dual = WeightEnumerator::from_counts(code.dual().weight_distribution(cap)?);
        let w = macwilliams(&dual, n - k);
        Ok(Some((w, dual)))
    } else {
        Ok(None)
    }
}

pub fn analyze_code(code: &LinearCode, cap: usize) -> Result<Report, CliError> {
    let mut r = Report::new("analyze");
    let (n, k) = (code.n(), code.dim());
    let semi = code.is_semi_self_dual();
    r.result("n", n).result("dim", k);
    r.result("self_orthogonal", code.is_self_orthogonal());
    r.result("doubly_even", code.is_doubly_even());
    r.result("contains_all_ones", code.contains_all_ones());
    r.result("semi_self_dual", semi);
    r.result("self_dual", code.is_self_dual());
    match enumerators(code, cap)? {
        Some((w, dual)) => {
            r.result("min_distance", w.min_positive_weight().map_or(Value::Null, Value::from));
            r.result("dual_distance", dual.min_positive_weight().map_or(Value::Null, Value::from));
            r.result("weight_enumerator", w.to_string());
            r.result("dual_weight_enumerator", dual.to_string());
        }
        None => {
            for field in ["min_distance", "dual_distance", "weight_enumerator", "dual_weight_enumerator"] {
                r.result(field, not_computed(k.min(n - k), cap));
            }
        }
    }
    if !semi {
        return Ok(r);
    }
    if code.is_doubly_even() {
        r.warn("doubly-even: the shadow is empty, so F is not defined");
    }
    if k + 2 > cap {
        r.result("gleason", not_computed(k + 2, cap));
        return Ok(r);
    }
    let dec = gleason_decompose(&build_b(code)?)?;
    r.result("e", strings(dec.e()));
    r.result("eps", strings(dec.eps()));
    r.result("eps_nonnegative_integers", dec.eps_nonnegative_integers());
    let from_dec = f_from_decomposition(&dec)?;
    r.result("F", from_dec.to_string());
    if !code.is_doubly_even() {
        let f = shadow_f(code)?;
        let agrees = f == from_dec;
        r.result("F_matches_shadow", agrees);
        r.ok &= agrees && dec.eps_nonnegative_integers();
    }
    Ok(r)
}

fn certificate_map(c: &Certificate) -> Map<String, Value> {
    let mut reasons = Vec::new();
    if c.negative {
        reasons.push("negative");
    }
    if c.non_integral {
        reasons.push("not an integer");
    }
    if c.beyond_top {
        reasons.push("nonzero beyond the top index");
    }
    let mut m = Map::new();
    m.insert("index".into(), c.index.into());
    m.insert("alpha".into(), c.alpha.to_string().into());
    m.insert("eps".into(), c.eps.to_string().into());
    m.insert("reasons".into(), reasons.into());
    m.insert("proves".into(), format!("d(D^perp) <= {}", c.bound()).into());
    m.insert("verified".into(), c.verify().into());
    m
}

pub fn cmd_bound(n: usize, doubly_even: bool, prove: bool) -> Result<Report, CliError> {
    let mut r = Report::new("bound");
    r.input("n", n).input("doubly_even", doubly_even).input("prove", prove);
    let report = theorem_bound(n, doubly_even)?;
    r.result("bound", report.bound).result("case", report.case.label());
    r.result("self_dual_bound", selfdual_bound(n)?);
    if prove {
        let proved = prove_bound(n)?;
        r.result("proved_bound", proved.bound);
        if let Some(note) = &proved.note {
            r.result("note", note.as_str());
        }
        if let Some(c) = &proved.certificate {
            let map = certificate_map(c);
            r.ok &= c.verify() && c.bound() <= proved.bound;
            r.certificate = Some(map);
        }
        r.ok &= proved.bound == theorem_bound(n, false)?.bound;
        if let Some(first) = first_obstruction(n)? {
            if first.bound() < proved.bound {
                r.result(
                    "first_obstruction",
                    format!("i = {} gives d(D^perp) <= {} (eps = {})", first.index, first.bound(), first.eps),
                );
            }
        }
    }
    Ok(r)
}

pub fn cmd_sharpness(cfg: &SearchConfig) -> Result<Report, CliError> {
    let mut r = Report::new("sharpness");
    r.input("n", cfg.n)
        .input("seed", cfg.rng_seed)
        .input("steps", cfg.max_neighbor_steps)
        .input("hyperplanes", cfg.hyperplane_limit)
        .input("doubly_even", cfg.doubly_even_only);
    let s = sharpness_search(cfg)?;
    let dual = s.witness.dual();
    r.result("bound", s.bound).result("best_dual_distance", s.best_dual_distance);
    r.result("sharp", s.is_sharp);
    r.result("witness_dual", format!("[{},{},{}]", dual.n(), dual.dim(), s.best_dual_distance));
    r.result("witness_doubly_even", s.witness.is_doubly_even());
    r.result("self_dual_visited", s.self_dual_visited);
    r.result("hyperplanes_scanned", s.hyperplanes_scanned);
    r.result("witness_generator", strings(s.witness.basis()));
    r.ok = s.is_sharp;
    Ok(r)
}

pub enum InvolutionSource {
    Qr {
        q: u64,
        save_code: Option<PathBuf>,
        save_perm: Option<PathBuf>,
    },
    Files {
        code: PathBuf,
        perm: PathBuf,
    },
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn cmd_involution(source: &InvolutionSource, cap: usize) -> Result<Report, CliError> {
    let mut r = Report::new("involution");
    let (report, warnings) = match source {
        InvolutionSource::Qr { q, save_code, save_perm } => {
            r.input("q", *q);
            let report = involution_pipeline(*q)?;
            if let Some(path) = save_code {
                write_file(path, &write_code(&extended_qr_code(*q)?))?;
            }
            if let Some(path) = save_perm {
                write_file(path, &write_perm(&qr_involution(*q)?))?;
            }
            (report, Vec::new())
        }
        InvolutionSource::Files { code, perm } => {
            r.input("code", code.display().to_string()).input("perm", perm.display().to_string());
            let (c, warning) = CodeFile::read(code)?.to_code()?;
            let sigma = read_perm(perm)?;
            if c.dim() > cap {
                return Err(Error::TooLarge { dim: c.dim(), cap }.into());
            }
            (analyze_involution(&c, &sigma)?, warning.into_iter().collect())
        }
    };
    r.input("cap", cap);
    fill_involution(&mut r, &report);
    r.warnings.extend(warnings);
    Ok(r)
}

fn fill_involution(r: &mut Report, rep: &InvolutionReport) {
    let opt = |b: Option<bool>| b.map_or(Value::Null, Value::from);
    r.result("code", format!("[{},{},{}]", rep.n, rep.dim, rep.distance));
    r.result("extremal", opt(rep.extremal));
    r.result("involution", rep.involution.clone());
    r.result("stabilizes", rep.stabilizes).result("fixed_point_free", rep.fixed_point_free);
    r.result("fixed_dim", rep.fixed_dim);
    r.result("pi_image", format!("[{},{},{}]", rep.pi_n, rep.pi_dim, rep.pi_distance));
    r.result("pi_self_dual", rep.pi_self_dual);
    r.result("free", rep.free);
    r.result("predicted_free", opt(rep.predicted_free));
    r.result("half_distance_bound", rep.half_bound_ok);
    let verdict = if rep.free {
        format!("FREE; pi-image self-dual [{},{}]", rep.pi_n, rep.pi_dim)
    } else {
        format!("NOT FREE; pi-image [{},{}] is not self-dual", rep.pi_n, rep.pi_dim)
    };
    r.result("verdict", verdict);
    r.warnings.extend(rep.warning.clone());
    r.ok &= rep.half_bound_ok && rep.free == rep.pi_self_dual;
}

pub enum SeriesQuery {
    Alpha { i: usize, n: usize },
    Gamma { h: usize, k: usize, n: usize },
    Parity { mu: u64 },
}

pub fn cmd_series(query: &SeriesQuery) -> Result<Report, CliError> {
    let mut r = Report::new("series");
    match *query {
        SeriesQuery::Alpha { i, n } => {
            r.input("kind", "alpha").input("i", i).input("N", n);
            r.result("value", alpha(i, n).to_string());
            let check = alpha_by_buermann_check(i, n);
            r.result("series_check", check);
            r.ok = check;
        }
        SeriesQuery::Gamma { h, k, n } => {
            r.input("kind", "gamma").input("h", h).input("k", k).input("N", n);
            r.result("value", gamma(h, k, n)?.to_string());
            let check = gamma_series_check(h, k, n)?;
            r.result("series_check", check);
            r.ok = check;
        }
        SeriesQuery::Parity { mu } => {
            r.input("kind", "parity").input("mu", mu);
            if mu == 0 {
                return Err(CliError::Usage("parity needs mu >= 1".into()));
            }
            let odd = binom_parity(mu);
            let top = 5 * mu - 1;
            r.result("binomial", format!("binom({top}, {})", mu - 1));
            if top <= EXACT_BINOMIAL_LIMIT {
                r.result("value", binomial(top as i64, mu - 1).to_string());
            }
            r.result("parity", if odd { "odd" } else { "even" });
            r.result(
                "consequence",
                if odd {
                    format!("d(D^perp) <= {} at n = {}", 4 * mu, 24 * mu)
                } else {
                    format!("only the bound {} is proved at n = {}", 4 * mu + 2, 24 * mu)
                },
            );
        }
    }
    Ok(r)
}

pub fn cmd_coverage(limit: u64) -> Result<Report, CliError> {
    let mut r = Report::new("coverage");
    r.input("limit", limit);
    let c = coverage_report(limit)?;
    r.result("covered", c.covered).result("limit", c.limit);
    r.result("fraction", c.fraction().to_string());
    r.result("summary", format!("covered {}/{} ≈ {:.2}", c.covered, c.limit, c.fraction_f64()));
    Ok(r)
}

pub fn cmd_feasible(n: usize, d: usize, range_cap: u64, show: usize) -> Result<Report, CliError> {
    let mut r = Report::new("feasible");
    r.input("n", n).input("d", d).input("cap", range_cap);
    let f = feasibility_search(n, d, range_cap)?;
    r.result("forced_eps", strings(&f.forced_eps));
    r.result("forced_violation", f.forced_violation.map_or(Value::Null, Value::from));
    r.result("tuples_checked", f.tuples_checked.to_string());
    r.result("solutions", f.solutions.len());
    let good = |s: &&semidual::bounds::FeasibilitySolution| s.f_ok && s.b_prefix_ok;
    r.result("f_and_b_prefix_ok", f.solutions.iter().filter(good).count());
    r.result(
        "all_enumerators_ok",
        f.solutions.iter().filter(|s| s.f_ok && s.b_prefix_ok && s.w_d_ok && s.w_dual_ok).count(),
    );
    let listed: Vec<Value> = f
        .solutions
        .iter()
        .take(show)
        .map(|s| {
            let mut m = Map::new();
            m.insert("eps_free".into(), s.eps_free.clone().into());
            m.insert("f_ok".into(), s.f_ok.into());
            m.insert("b_prefix_ok".into(), s.b_prefix_ok.into());
            m.insert("w_d_ok".into(), s.w_d_ok.into());
            m.insert("w_dual_ok".into(), s.w_dual_ok.into());
            Value::Object(m)
        })
        .collect();
    r.result("listed", listed);
    if let Some(first) = f.solutions.first() {
        r.result("first_F", first.f_poly.to_string());
    }
    Ok(r)
}
