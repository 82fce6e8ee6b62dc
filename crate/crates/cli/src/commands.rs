use std::f64::consts::{FRAC_PI_2, PI};
use std::str::FromStr;

use quartic_core::exact::scalar::{from_f64, to_f64};
use quartic_core::exact::{d_coeff, quartic_via_2f1, ExactScalar, Poly, QuarticClosedForm};
use quartic_core::numeric::{
    agm_with_report, landen_iterate2, landen_iterate6, landen_step6, u6_by_quadrature, DMap,
    LandenState6,
};
use quartic_core::quadrature::{
    integrate, integrate_finite, quartic_by_quadrature, Domain, IntegrandSpec,
};
use quartic_core::symbolic::{
    landen_transform, landen_transform_whole_line, quartic_via_landen, RationalFunction,
};

use crate::args::{Method, Variant};
use crate::report::{fmt_f64, Check, ReportValue, RunReport, TableRow};
use crate::Failure;

/// Parses `7`, `-3/4` or `0.125` exactly; anything else `f64` accepts is
/// converted from its binary value.
pub fn parse_scalar(text: &str) -> Result<ExactScalar, Failure> {
    let t = text.trim();
    let bad = || Failure::Usage(format!("cannot parse {text:?} as a number"));
    if let Some((whole, frac)) = t.split_once('.') {
        let digits = whole.strip_prefix('-').unwrap_or(whole);
        let plain = |s: &str| s.chars().all(|c| c.is_ascii_digit());
        if plain(digits) && plain(frac) && !(digits.is_empty() && frac.is_empty()) {
            let scaled = format!("{whole}{frac}/1{}", "0".repeat(frac.len()));
            return ExactScalar::from_str(&scaled).map_err(|_| bad());
        }
    }
    if let Ok(q) = ExactScalar::from_str(t) {
        return Ok(q);
    }
    let x: f64 = t.parse().map_err(|_| bad())?;
    from_f64(x).map_err(|_| bad())
}

fn parse_coeffs(text: &str) -> Result<Poly, Failure> {
    let coeffs = text
        .split(',')
        .map(parse_scalar)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(coeffs))
}

fn render(q: &ExactScalar, float: bool) -> ReportValue {
    if float {
        ReportValue::Float(to_f64(q))
    } else {
        ReportValue::Exact(q.to_string())
    }
}

fn rel(x: f64, y: f64) -> f64 {
    ((x - y) / y).abs()
}

pub fn quartic(
    a_text: &str,
    m: u32,
    method: Method,
    tol: f64,
    float: bool,
) -> Result<RunReport, Failure> {
    let a = parse_scalar(a_text)?;
    let af = to_f64(&a);
    if af.is_nan() || af <= -1.0 {
        return Err(Failure::Domain(format!("need a > -1, got {a_text}")));
    }
    let name = match method {
        Method::Closed => "closed",
        Method::Hyper => "hyper",
        Method::Landen => "landen",
        Method::Quadrature => "quadrature",
    };
    let mut report = RunReport::new("quartic")
        .input("a", a_text)
        .input("m", m)
        .input("method", name);
    let value = match method {
        Method::Closed => {
            let form = QuarticClosedForm::new(m);
            report.coefficients = Some(
                (0..=m)
                    .map(|l| Ok(render(&d_coeff(m, l)?, float)))
                    .collect::<Result<Vec<_>, quartic_core::Error>>()?,
            );
            match form.exact_value(&a)? {
                Some(exact) if !float => ReportValue::Exact(exact.to_string()),
                _ => ReportValue::Float(form.value(af)?),
            }
        }
        Method::Hyper => ReportValue::Float(quartic_via_2f1(af, m)?),
        Method::Landen => ReportValue::Float(quartic_via_landen(af, m)?),
        Method::Quadrature => {
            report = report.input("tol", fmt_f64(tol));
            ReportValue::Float(quartic_by_quadrature(af, m, tol)?)
        }
    };
    report.value = Some(value);
    Ok(report)
}

pub fn table(m_max: u32, float: bool) -> Result<RunReport, Failure> {
    let mut rows = Vec::with_capacity(m_max as usize + 1);
    for m in 0..=m_max {
        let d = (0..=m)
            .map(|l| Ok(render(&d_coeff(m, l)?, float)))
            .collect::<Result<Vec<_>, quartic_core::Error>>()?;
        rows.push(TableRow { m, d });
    }
    let mut report = RunReport::new("table").input("m-max", m_max);
    report.table = Some(rows);
    Ok(report)
}

fn expect_params(variant: &str, params: &[f64], n: usize) -> Result<(), Failure> {
    if params.len() != n {
        return Err(Failure::Usage(format!(
            "{variant} takes {n} parameters, got {}",
            params.len()
        )));
    }
    Ok(())
}

pub fn landen(
    variant: Variant,
    params: &[f64],
    tol: f64,
    printed: bool,
) -> Result<RunReport, Failure> {
    let joined = params
        .iter()
        .map(|&x| fmt_f64(x))
        .collect::<Vec<_>>()
        .join(" ");
    let report = RunReport::new("landen")
        .input("params", joined)
        .input("tol", fmt_f64(tol));
    match variant {
        Variant::Quad2 => {
            expect_params("quad2", params, 3)?;
            let (a, b, c) = (params[0], params[1], params[2]);
            let mut report = report.input("variant", "quad2");
            let (value, trace) =
                landen_iterate2(a, b, c, tol).map_err(|e| Failure::from_core(e, &report))?;
            let exact = 2.0 * PI / (4.0 * a * c - b * b).sqrt();
            let a_inf = PI / value;
            report.checks.push(Check::within(
                "closed-form",
                rel(value, exact),
                tol / a_inf.min(1.0) + 1e-14,
            ));
            report.value = Some(ReportValue::Float(value));
            report.trace = Some(trace);
            Ok(report)
        }
        Variant::Deg6 => {
            expect_params("deg6", params, 5)?;
            let map = if printed {
                DMap::Printed
            } else {
                DMap::Corrected
            };
            let mut report = report
                .input("variant", "deg6")
                .input("d-map", if printed { "printed" } else { "corrected" });
            let start = LandenState6::new(params[0], params[1], params[2], params[3], params[4]);
            let (value, trace) =
                landen_iterate6(&start, tol, map).map_err(|e| Failure::from_core(e, &report))?;

            let fixed = LandenState6::new(3.0, 3.0, 1.0, 2.0, 1.0);
            let moved = landen_step6(&fixed, map)?;
            let drift = [
                moved.a - 3.0,
                moved.b - 3.0,
                moved.c - 1.0,
                moved.d - 2.0,
                moved.e - 1.0,
            ]
            .iter()
            .fold(0.0f64, |m, x| m.max(x.abs()));
            report
                .checks
                .push(Check::within("fixed-point-(3,3,1,2,1)", drift, 1e-14));

            let before = u6_by_quadrature(&start, 1e-13)?;
            let after = u6_by_quadrature(&landen_step6(&start, map)?, 1e-13)?;
            report.checks.push(Check::within(
                "one-step-invariance",
                rel(after, before),
                1e-10,
            ));
            report.checks.push(Check::within(
                "limit-vs-quadrature",
                rel(value, before),
                1e-8,
            ));
            report.value = Some(ReportValue::Float(value));
            report.trace = Some(trace);
            Ok(report)
        }
        Variant::Agm => {
            expect_params("agm", params, 2)?;
            let (a, b) = (params[0], params[1]);
            let mut report = report.input("variant", "agm");
            let trace = agm_with_report(a, b, tol).map_err(|e| Failure::from_core(e, &report))?;
            let g = integrate_finite(
                |p: f64| 1.0 / (a * a * p.cos().powi(2) + b * b * p.sin().powi(2)).sqrt(),
                0.0,
                FRAC_PI_2,
                1e-14,
            )?
            .value;
            let g_agm = PI / (2.0 * trace.final_value);
            report.checks.push(Check::within(
                "elliptic-G-vs-quadrature",
                rel(g_agm, g),
                tol.max(1e-10),
            ));
            report.value = Some(ReportValue::Float(trace.final_value));
            report.trace = Some(trace);
            Ok(report)
        }
    }
}

pub fn transform(num: &str, den: &str, whole_line: bool) -> Result<RunReport, Failure> {
    let f = RationalFunction::new(parse_coeffs(num)?, parse_coeffs(den)?)?;
    let mut report = RunReport::new("transform")
        .input("num", num)
        .input("den", den)
        .input("whole-line", whole_line);
    let g = if whole_line {
        landen_transform_whole_line(&f)?
    } else {
        landen_transform(&f)?
    };

    let domain = if whole_line {
        Domain::WholeLine
    } else {
        Domain::HalfLine
    };
    let integral = |h: &RationalFunction| -> Result<f64, Failure> {
        let spec = IntegrandSpec::new(|x| h.eval_f64(x), domain)
            .rel_tol(1e-13)
            .abs_tol(1e-15);
        Ok(integrate(&spec)?.value)
    };
    let (before, after) = (integral(&f)?, integral(&g)?);
    let residual = (after - before).abs() / before.abs().max(1e-300);
    report
        .checks
        .push(Check::within("integral-preserved", residual, 1e-9));
    if !whole_line {
        report
            .checks
            .push(Check::new("evenness-preserved", g.is_even(), None));
    }
    report.value = Some(ReportValue::Exact(g.to_string_in("y")));
    Ok(report)
}
