use serde_json::{json, Value};

use super::{input, CliError, Command, Outcome, Precision, Transform};
use crate::discrete::{
    brute_force_auto, brute_force_multiplicity, check_multitile_b, check_multitile_c, check_vanishing,
    discrete_minkowski_check, discretized_bs_sides, lattice_covariogram_terms, CoverCounts, ExemptionRule,
    FinitePointSet,
};
use crate::geometry::{
    check_multitile_polygon, continuous_covariogram_sum, symmetric_difference_body_check, van_der_corput_counts,
};
use crate::lattice::IntegerLattice;
use crate::rational;
use crate::spectral::{
    bombieri_siegel_verify, cube_ft, hp, kolountzakis_check, polygon_ft, simplex_ft, sinc, spectral_volume,
    thickening_ft, zeta2_demo, zeta4_demo, SpectralReport,
};

pub(super) fn dispatch(command: &Command) -> Result<(&'static str, Outcome), CliError> {
    Ok(match command {
        Command::TileDiscrete {
            points,
            lattice,
            verify_all,
            window,
            precision,
            spectral,
            eps,
            radius,
        } => (
            "tile-discrete",
            tile_discrete(points, lattice, *verify_all, *window, *precision, spectral.then_some((eps.as_str(), *radius)))?,
        ),
        Command::TilePolygon {
            polygon,
            lattice,
            spectral,
            radius,
            tol,
        } => ("tile-polygon", tile_polygon(polygon, lattice, spectral.then_some((*radius, *tol)))?),
        Command::BsVerify {
            a,
            b,
            lattice,
            x,
            radius,
            tol,
            volume,
        } => ("bs-verify", bs_verify(a, b.as_deref(), lattice, x, *radius, *tol, *volume)?),
        Command::Zeta { order, k } => ("zeta", zeta(*order, *k)?),
        Command::Minkowski { points, lattice } => ("minkowski", minkowski(points, lattice)?),
        Command::Vdc { polygon, lattice } => ("vdc", vdc(polygon, lattice)?),
        Command::FtEval {
            transform,
            xi,
            eps,
            polygon,
            points,
        } => ("ft-eval", ft_eval(*transform, xi, eps, polygon.as_deref(), points.as_deref())?),
    })
}

fn cover_counts_json(c: &CoverCounts) -> Value {
    json!({
        "window": c.window,
        "uniform": c.uniform(),
        "counts": c.counts.iter()
            .map(|(r, n)| json!({ "residue": r.iter().map(ToString::to_string).collect::<Vec<_>>(), "count": n }))
            .collect::<Vec<_>>(),
    })
}

fn report_csv(r: &SpectralReport) -> String {
    let mut out = String::from("radius,term_count,residual\n");
    for c in &r.checkpoints {
        out.push_str(&format!("{},{},{:e}\n", c.radius, c.term_count, c.residual));
    }
    out
}

fn hp_cross_check(f: &FinitePointSet, l: &IntegerLattice) -> Result<Value, CliError> {
    let check = check_vanishing(f, l, ExemptionRule::AllNonzeroCosets)?;
    let mut disagreements = Vec::new();
    for w in &check.witnesses {
        let modulus = hp::exp_sum_modulus(f, &w.rep.vector);
        if (modulus.value < hp::HP_ZERO) != w.vanishes {
            disagreements.push(json!({
                "rep": w.rep.to_json(),
                "exact_vanishes": w.vanishes,
                "modulus": modulus.decimal,
            }));
        }
    }
    Ok(json!({
        "classes_checked": check.witnesses.len(),
        "agrees": disagreements.is_empty(),
        "disagreements": disagreements,
    }))
}

fn tile_discrete(
    points: &str,
    lattice: &str,
    verify_all: bool,
    window: Option<usize>,
    precision: Precision,
    spectral: Option<(&str, f64)>,
) -> Result<Outcome, CliError> {
    let f = input::point_set(points)?;
    let l = input::integer_lattice(lattice)?;
    let b = check_multitile_b(&f, &l)?;
    let terms = lattice_covariogram_terms(&f, &l)?;
    let mut verdict = json!({
        "criterion_b": b.to_json(),
        "terms": terms.iter()
            .map(|(n, c)| json!({ "n": n.iter().map(ToString::to_string).collect::<Vec<_>>(), "count": c }))
            .collect::<Vec<_>>(),
    });
    let mut agree = true;
    if verify_all {
        let c = check_multitile_c(&f, &l, ExemptionRule::AllNonzeroCosets)?;
        let literal = check_multitile_c(&f, &l, ExemptionRule::NoIntegerCoordinate)?;
        let oracle = match window {
            Some(w) => brute_force_multiplicity(&f, &l, w)?,
            None => brute_force_auto(&f, &l)?,
        };
        let oracle_tiles = oracle.uniform().is_some();
        agree = c.is_multitiling == b.is_multitiling && oracle_tiles == b.is_multitiling;
        verdict["criterion_c"] = c.to_json();
        verdict["criterion_c_literal"] = json!({ "is_multitiling": literal.is_multitiling });
        verdict["oracle"] = cover_counts_json(&oracle);
        verdict["agree"] = json!(agree);
    }
    if precision == Precision::Hp50 {
        let hp = hp_cross_check(&f, &l)?;
        agree &= hp["agrees"].as_bool().unwrap_or(false);
        verdict["hp50"] = hp;
    }
    let mut csv = None;
    if let Some((eps, radius)) = spectral {
        let eps = rational::parse(eps).map_err(|e| CliError::Input(format!("bad --eps: {e}")))?;
        let report = discretized_bs_sides(&f, &l, &eps, radius)?;
        csv = Some(report_csv(&report));
        verdict["spectral"] = report.to_json();
    }
    let summary = format!(
        "tile-discrete: {} (k = {}, sum {} vs {}){}",
        if b.is_multitiling { "multi-tiles" } else { "does not multi-tile" },
        rational::format(&b.multiplicity),
        rational::format(&b.lhs_sum),
        rational::format(&b.rhs_target),
        if agree { "" } else { "; DIAGNOSTICS DISAGREE" },
    );
    Ok(Outcome {
        inputs: json!({
            "points": f.to_json(),
            "lattice": l.to_json(),
            "verify_all": verify_all,
            "window": window,
            "precision": format!("{precision:?}"),
            "spectral": spectral.map(|(e, r)| json!({ "eps": e, "radius": r })),
        }),
        verdict,
        affirmative: b.is_multitiling,
        summary,
        csv,
    })
}

fn tile_polygon(polygon: &str, lattice: &str, spectral: Option<(f64, f64)>) -> Result<Outcome, CliError> {
    let q = input::polygon(polygon)?;
    let l = input::lattice(lattice)?;
    let v = check_multitile_polygon(&q, &l)?;
    let sum = continuous_covariogram_sum(&q, &q, &l)?;
    let mut verdict = json!({
        "criterion": v.to_json(),
        "area": rational::to_json(&q.area()),
        "terms": sum.terms.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
    });
    if let Some((radius, tol)) = spectral {
        let k = kolountzakis_check(&q, &l, radius, tol)?;
        verdict["spectral"] = k.to_json();
        verdict["agree"] = json!(k.vanishes == v.is_multitiling);
    }
    let summary = format!(
        "tile-polygon: {} (vol/det = {}, sum {} vs {})",
        if v.is_multitiling { "multi-tiles" } else { "does not multi-tile" },
        rational::format(&v.multiplicity),
        rational::format(&v.lhs_sum),
        rational::format(&v.rhs_target),
    );
    Ok(Outcome {
        inputs: json!({
            "polygon": q.to_json(),
            "lattice": l.to_json(),
            "spectral": spectral.map(|(r, t)| json!({ "radius": r, "tol": t })),
        }),
        verdict,
        affirmative: v.is_multitiling,
        summary,
        csv: None,
    })
}

fn bs_verify(
    a: &str,
    b: Option<&str>,
    lattice: &str,
    x: &str,
    radius: f64,
    tol: f64,
    volume: bool,
) -> Result<Outcome, CliError> {
    let pa = input::polygon(a)?;
    let pb = match b {
        Some(b) => input::polygon(b)?,
        None => pa.clone(),
    };
    let l = input::lattice(lattice)?;
    let shift = input::point(x)?;
    let report = if volume {
        spectral_volume(&pa, &pb, &l, &shift, radius)?
    } else {
        bombieri_siegel_verify(&pa, &pb, &l, &shift, radius)?
    };
    let affirmative = report.residual.abs() <= tol;
    let summary = format!(
        "bs-verify: lhs {} vs truncated rhs {:.12} at radius {} ({} terms), residual {:e}",
        rational::format(&report.lhs_exact),
        report.rhs_truncated,
        report.radius,
        report.term_count,
        report.residual,
    );
    Ok(Outcome {
        inputs: json!({
            "a": pa.to_json(),
            "b": pb.to_json(),
            "lattice": l.to_json(),
            "x": shift.iter().map(rational::to_json).collect::<Vec<_>>(),
            "radius": radius,
            "tol": tol,
            "volume": volume,
        }),
        csv: Some(report_csv(&report)),
        verdict: report.to_json(),
        affirmative,
        summary,
    })
}

/// Error bound met by the truncated estimate at `k` terms.
fn zeta_bound(order: u32, k: u64) -> f64 {
    if order == 2 {
        1.1 / k as f64
    } else {
        1.0 / (2.0 * (k as f64).powi(3))
    }
}

fn zeta(order: u32, k: u64) -> Result<Outcome, CliError> {
    let demo = match order {
        2 => zeta2_demo,
        4 => zeta4_demo,
        _ => return Err(CliError::Input(format!("--order must be 2 or 4, got {order}"))),
    };
    if k == 0 {
        return Err(CliError::Input("-k must be at least 1".into()));
    }
    let result = demo(k);
    let bound = zeta_bound(order, k);
    let mut csv = String::from("k,err\n");
    let mut steps: Vec<u64> = std::iter::successors(Some(1u64), |s| s.checked_mul(2))
        .take_while(|&s| s < k)
        .collect();
    steps.push(k);
    for s in steps {
        csv.push_str(&format!("{},{:e}\n", s, demo(s).err));
    }
    let mut verdict = result.to_json();
    verdict["bound"] = json!(bound);
    Ok(Outcome {
        inputs: json!({ "order": order, "k": k }),
        affirmative: result.err < bound,
        summary: format!(
            "zeta({order}): estimate {:.12} vs {:.12}, err {:e} (bound {:e})",
            result.estimate, result.target, result.err, bound
        ),
        verdict,
        csv: Some(csv),
    })
}

fn minkowski(points: &str, lattice: &str) -> Result<Outcome, CliError> {
    let f = input::point_set(points)?;
    let l = input::integer_lattice(lattice)?;
    let m = discrete_minkowski_check(&f, &l)?;
    let summary = if m.applicable {
        format!(
            "minkowski: (F-F) meets L only at 0; det {} {} |F| = {}{}",
            l.det(),
            if m.equality { "=" } else { ">" },
            f.len(),
            if m.equality { ", so F tiles" } else { ", so F does not tile" },
        )
    } else {
        "minkowski: not applicable, (F-F) meets L away from 0".to_string()
    };
    Ok(Outcome {
        inputs: json!({ "points": f.to_json(), "lattice": l.to_json() }),
        verdict: m.to_json(),
        affirmative: m.holds,
        summary,
        csv: None,
    })
}

fn vdc(polygon: &str, lattice: &str) -> Result<Outcome, CliError> {
    let q = input::polygon(polygon)?;
    let l = input::lattice(lattice)?;
    let counts = van_der_corput_counts(&q, &l)?;
    let mut verdict = counts.to_json();
    if counts.q_count.is_some() {
        verdict["difference_body_is_double"] = json!(symmetric_difference_body_check(&q, 16)?);
    }
    Ok(Outcome {
        inputs: json!({ "polygon": q.to_json(), "lattice": l.to_json() }),
        summary: format!(
            "vdc: {} difference points with overlap, vol/det = {}, bounds {}",
            counts.diff_count,
            rational::format(&counts.volume_ratio),
            if counts.bounds_hold { "hold" } else { "FAIL" }
        ),
        affirmative: counts.bounds_hold,
        verdict,
        csv: None,
    })
}

fn ft_eval(
    transform: Transform,
    xi: &str,
    eps: &str,
    polygon: Option<&str>,
    points: Option<&str>,
) -> Result<Outcome, CliError> {
    let xi_v = input::real_vector(xi)?;
    let eps_q = rational::parse(eps).map_err(|e| CliError::Input(format!("bad --eps: {e}")))?;
    let eps_f = rational::to_f64(&eps_q);
    if eps_f <= 0.0 {
        return Err(CliError::Input("--eps must be positive".into()));
    }
    let mut inputs = json!({ "transform": format!("{transform:?}"), "xi": xi_v, "eps": rational::format(&eps_q) });
    let value = match transform {
        Transform::Sinc => {
            let [t] = xi_v[..] else {
                return Err(CliError::Input("sinc takes one coordinate".into()));
            };
            num_complex::Complex64::new(sinc(t), 0.0)
        }
        Transform::Cube => cube_ft(&xi_v, eps_f),
        Transform::Simplex => simplex_ft(&xi_v),
        Transform::Polygon => {
            let q = input::polygon(polygon.ok_or_else(|| CliError::Input("polygon needs --polygon".into()))?)?;
            if xi_v.len() != 2 {
                return Err(CliError::Input("polygon transforms take two coordinates".into()));
            }
            inputs["polygon"] = q.to_json();
            polygon_ft(&q, &xi_v)
        }
        Transform::Thickening => {
            let f = input::point_set(points.ok_or_else(|| CliError::Input("thickening needs --points".into()))?)?;
            if xi_v.len() != f.dim() {
                return Err(CliError::Input(format!("expected {} coordinates", f.dim())));
            }
            inputs["points"] = f.to_json();
            thickening_ft(&f, &xi_v, eps_f)
        }
    };
    // Adding 0.0 turns a signed zero into +0.
    let value = value + num_complex::Complex64::new(0.0, 0.0);
    Ok(Outcome {
        inputs,
        verdict: json!({ "re": value.re, "im": value.im, "modulus": value.norm() }),
        affirmative: true,
        summary: format!("ft-eval: {:e} {:+e}i (|.| = {:e})", value.re, value.im, value.norm()),
        csv: None,
    })
}
