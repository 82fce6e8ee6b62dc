use std::f64::consts::{FRAC_PI_2, PI};
use std::thread;

use quartic_core::exact::scalar::to_f64;
use quartic_core::exact::{
    binom_identity_check, check_phi_identity, check_recurrence, d_coeff, d_coeff_oracle,
    fib_sum_identity_check, int, phi_grid, quartic_value, quartic_via_2f1, rat, ExactScalar, Poly,
};
use quartic_core::numeric::{
    elliptic_g, landen_iterate2, landen_iterate6, landen_step2, landen_step6, quad2_by_quadrature,
    u6_by_quadrature, DMap, LandenState2, LandenState6,
};
use quartic_core::quadrature::{
    check_gh_derivative, check_ramanujan, check_vanishing_odd, integrate_finite,
    integrate_half_line, quartic_by_quadrature,
};
use quartic_core::symbolic::{
    cot_multiple, landen_transform, quartic_integrand, quartic_q1, quartic_via_landen,
    RationalFunction,
};

use crate::args::Suite;
use crate::report::{Check, RunReport};

type CheckFn = fn() -> Check;

fn rel(x: f64, y: f64) -> f64 {
    ((x - y) / y).abs()
}

/// Maximum of `f` over `items`; errors count as an infinite residual.
fn worst<T, E>(items: impl IntoIterator<Item = T>, f: impl Fn(T) -> Result<f64, E>) -> f64 {
    items
        .into_iter()
        .map(|x| f(x).unwrap_or(f64::INFINITY))
        .fold(
            0.0,
            |m, r| if r.is_nan() { f64::INFINITY } else { m.max(r) },
        )
}

fn all<T>(items: impl IntoIterator<Item = T>, f: impl Fn(T) -> bool) -> bool {
    items.into_iter().all(f)
}

fn d_table_m5() -> Check {
    let expected = [
        rat(4389, 256),
        rat(8589, 128),
        rat(7161, 64),
        rat(777, 8),
        rat(693, 16),
        rat(63, 8),
    ];
    let ok = all(0..=5u32, |l| {
        d_coeff(5, l).ok().as_ref() == Some(&expected[l as usize])
    });
    Check::new("d_l(5) table", ok, None)
}

fn d_oracle() -> Check {
    let ok = all(0..=12u32, |m| {
        all(0..=m, |l| d_coeff(m, l).ok() == d_coeff_oracle(m, l).ok())
    });
    Check::new("d_coeff = oracle, m ≤ 12", ok, None)
}

fn d_positive() -> Check {
    let zero = int(0);
    let ok = all(0..=30u32, |m| {
        all(0..=m, |l| d_coeff(m, l).is_ok_and(|d| d > zero))
    });
    Check::new("d_coeff > 0, m ≤ 30", ok, None)
}

fn phi_identity() -> Check {
    let grid = phi_grid();
    let ok = all(0..=20u32, |m| {
        all(&grid, |phi| check_phi_identity(m, phi) == Ok(true))
    });
    Check::new("φ-identity, m ≤ 20", ok, None)
}

fn recurrence() -> Check {
    let grid = phi_grid();
    let ok = all(0..=20u32, |m| {
        all(&grid, |phi| check_recurrence(m, phi) == Ok(true))
    });
    Check::new("recurrence, m ≤ 20", ok, None)
}

fn binomial_identity() -> Check {
    let ok = all(0..=30u32, |m| all(0..=m, |k| binom_identity_check(m, k)));
    Check::new("binomial identity, k ≤ m ≤ 30", ok, None)
}

fn fibonacci_sum() -> Check {
    let zs: Vec<ExactScalar> = vec![
        int(0),
        int(2),
        int(6),
        rat(3, 4),
        int(1),
        rat(-1, 8),
        rat(5, 2),
    ];
    let ok = all(0..=15u32, |n| {
        all(&zs, |z| fib_sum_identity_check(n, z) == Ok(true))
    });
    Check::new("Fibonacci-type sum, n ≤ 15", ok, None)
}

fn vanishing() -> Check {
    let cases = [0.5, 1.0, 3.0].into_iter().flat_map(|a| {
        (0..=4u32).flat_map(move |m| (1..=2 * m + 1).step_by(2).map(move |j| (a, m, j)))
    });
    let r = worst(cases, |(a, m, j)| {
        check_vanishing_odd(a, m, j).map(f64::abs)
    });
    Check::within("vanishing odd moments", r, 1e-10)
}

fn ramanujan() -> Check {
    let cases = [1.0, 2.0]
        .into_iter()
        .flat_map(|a| (1..=5u32).map(move |m| (a, m)));
    let r = worst(cases, |(a, m)| {
        check_ramanujan(a, m).map(|(l, r)| rel(l, r))
    });
    Check::within("Ramanujan identity", r, 1e-6)
}

fn gh_derivative() -> Check {
    let cases = [0.5, 1.0, 2.0]
        .into_iter()
        .flat_map(|a| [0.0, 0.1, 3.0].map(|c| (a, c)));
    let r = worst(cases, |(a, c)| {
        check_gh_derivative(a, c).map(|(l, r)| rel(l, r))
    });
    Check::within("g = π√2 h′", r, 1e-9)
}

fn route_agreement() -> Check {
    let cases = [0.1, 0.5, 1.0, 2.0, 10.0]
        .into_iter()
        .flat_map(|a| (0..=8u32).map(move |m| (a, m)));
    let r = worst(cases, |(a, m)| -> quartic_core::Result<f64> {
        let v = [
            quartic_value(a, m)?,
            quartic_via_2f1(a, m)?,
            quartic_by_quadrature(a, m, 1e-13)?,
            quartic_via_landen(a, m)?,
        ];
        Ok(v.iter()
            .flat_map(|x| v.iter().map(move |y| rel(*x, *y)))
            .fold(0.0, f64::max))
    });
    Check::within("route agreement", r, 1e-10)
}

fn quad2_order() -> Check {
    match landen_iterate2(1.0, 1.0, 1.0, 1e-12) {
        Ok((_, report)) => match report.estimated_order {
            Some(p) => Check::within("quad2 order at (1,1,1) in [2.7, 3.3]", (p - 3.0).abs(), 0.3),
            None => Check::new("quad2 order at (1,1,1) in [2.7, 3.3]", false, None),
        },
        Err(_) => Check::new("quad2 order at (1,1,1) in [2.7, 3.3]", false, None),
    }
}

fn quad2_grid() -> Vec<(f64, f64, f64)> {
    let mut out = Vec::new();
    for a in [0.5, 1.0, 3.0] {
        for b in [-1.0, 0.0, 0.7] {
            for c in [0.6, 1.0, 4.0] {
                if 4.0 * a * c > b * b {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

fn quad2_limit() -> Check {
    let r = worst(quad2_grid(), |(a, b, c)| {
        landen_iterate2(a, b, c, 1e-12)
            .map(|(v, _)| rel(v, 2.0 * PI / (4.0 * a * c - b * b).sqrt()))
    });
    Check::within("quad2 limit = 2π/√(4ac−b²)", r, 1e-12)
}

fn quad2_invariance() -> Check {
    let r = worst(quad2_grid(), |(a, b, c)| -> quartic_core::Result<f64> {
        let s = LandenState2::new(a, b, c);
        Ok(rel(
            quad2_by_quadrature(&landen_step2(&s)?, 1e-13)?,
            quad2_by_quadrature(&s, 1e-13)?,
        ))
    });
    Check::within("quad2 one-step invariance", r, 1e-10)
}

fn deg6_grid() -> Vec<LandenState6> {
    let mut out = Vec::new();
    for (a, b) in [(0.0, 0.0), (1.0, 2.0), (4.0, 5.0), (10.0, 1.0), (-1.0, 3.0)] {
        for (c, d, e) in [(1.0, 1.0, 1.0), (0.5, 2.0, 3.0)] {
            out.push(LandenState6::new(a, b, c, d, e));
        }
    }
    out
}

fn deg6_fixed_point() -> Check {
    let p = LandenState6::new(3.0, 3.0, 1.0, 2.0, 1.0);
    let drift = |map| {
        landen_step6(&p, map).map(|q| {
            [q.a - 3.0, q.b - 3.0, q.c - 1.0, q.d - 2.0, q.e - 1.0]
                .iter()
                .fold(0.0f64, |m, x| m.max(x.abs()))
        })
    };
    Check::within(
        "deg6 fixes (3,3,1,2,1)",
        drift(DMap::Corrected).unwrap_or(f64::INFINITY),
        1e-14,
    )
}

fn deg6_printed_moves_fixed_point() -> Check {
    let p = LandenState6::new(3.0, 3.0, 1.0, 2.0, 1.0);
    match landen_step6(&p, DMap::Printed) {
        Ok(q) => Check::new(
            "printed d-map gives d′ = 15/8 at (3,3,1,2,1)",
            (q.d - 15.0 / 8.0).abs() < 1e-14,
            Some((q.d - 2.0).abs()),
        ),
        Err(_) => Check::new("printed d-map gives d′ = 15/8 at (3,3,1,2,1)", false, None),
    }
}

fn u6_step_residual(s: &LandenState6, map: DMap) -> quartic_core::Result<f64> {
    Ok(rel(
        u6_by_quadrature(&landen_step6(s, map)?, 1e-13)?,
        u6_by_quadrature(s, 1e-13)?,
    ))
}

fn deg6_invariance() -> Check {
    let r = worst(deg6_grid(), |s| u6_step_residual(&s, DMap::Corrected));
    Check::within("deg6 one-step invariance", r, 1e-10)
}

fn deg6_printed_breaks_invariance() -> Check {
    let r =
        u6_step_residual(&LandenState6::new(4.0, 5.0, 1.0, 1.0, 1.0), DMap::Printed).unwrap_or(0.0);
    Check::new("printed d-map breaks invariance", r > 1e-6, Some(r))
}

fn deg6_limit() -> Check {
    let r = worst(deg6_grid(), |s| -> quartic_core::Result<f64> {
        let (v, _) = landen_iterate6(&s, 1e-12, DMap::Corrected)?;
        Ok(rel(v, u6_by_quadrature(&s, 1e-13)?))
    });
    Check::within("deg6 limit vs quadrature", r, 1e-8)
}

fn agm_vs_quadrature() -> Check {
    let r = worst(
        [(1.0, 2.0), (1.0, 3.0), (2.0, 5.0)],
        |(a, b): (f64, f64)| -> quartic_core::Result<f64> {
            let q = integrate_finite(
                |p: f64| 1.0 / (a * a * p.cos().powi(2) + b * b * p.sin().powi(2)).sqrt(),
                0.0,
                FRAC_PI_2,
                1e-14,
            )?;
            Ok((elliptic_g(a, b)? - q.value).abs())
        },
    );
    Check::within("G(a,b) = π/(2 AGM) vs quadrature", r, 1e-10)
}

fn symbolic_q1() -> Check {
    let ok = all([rat(1, 2), int(1), int(3), int(10)], |a| {
        all(0..=8u32, |m| {
            landen_transform(&quartic_integrand(&a, m)).ok() == Some(quartic_q1(&a, m))
        })
    });
    Check::new("landen_transform(Q) = Q₁, m ≤ 8", ok, None)
}

fn even_corpus() -> Vec<RationalFunction> {
    let rf = |n: &[i64], d: &[i64]| {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).expect("nonzero")
    };
    vec![
        rf(&[1], &[1, 0, 1]),
        rf(&[1, 0, 3], &[2, 0, 1, 0, 5]),
        rf(&[0, 0, 1], &[1, 0, 2, 0, 1]),
        rf(&[3, 0, 0, 0, 1], &[1, 0, 1, 0, 2, 0, 1]),
        quartic_integrand(&rat(-1, 2), 2),
    ]
}

fn symbolic_evenness() -> Check {
    let ok = all(even_corpus(), |f| {
        landen_transform(&f).is_ok_and(|g| g.is_even())
    });
    Check::new("evenness preserved", ok, None)
}

fn symbolic_integral() -> Check {
    let half =
        |f: &RationalFunction| integrate_half_line(|x| f.eval_f64(x), 1e-13).map(|q| q.value);
    let r = worst(even_corpus(), |f| -> quartic_core::Result<f64> {
        Ok(rel(half(&landen_transform(&f)?)?, half(&f)?))
    });
    Check::within("half-line integral preserved", r, 1e-9)
}

fn q_vs_q1_quadrature() -> Check {
    let cases = [rat(1, 2), int(1), int(2), int(10)]
        .into_iter()
        .flat_map(|a| (0..=6u32).map(move |m| (a.clone(), m)));
    let r = worst(cases, |(a, m)| -> quartic_core::Result<f64> {
        let q1 = quartic_q1(&a, m);
        let lhs = quartic_by_quadrature(to_f64(&a), m, 1e-13)?;
        let rhs = integrate_half_line(|y| q1.eval_f64(y), 1e-13)?.value;
        Ok(rel(rhs, lhs))
    });
    Check::within("∫Q = ∫Q₁ by quadrature, m ≤ 6", r, 1e-10)
}

fn cot_composition() -> Check {
    let ok = all(1..=4u32, |m| {
        all(1..=4u32, |n| {
            match (cot_multiple(m), cot_multiple(n), cot_multiple(m * n)) {
                (Ok(rm), Ok(rn), Ok(rmn)) => rm.compose(&rn).ok() == Some(rmn),
                _ => false,
            }
        })
    });
    Check::new("R_m ∘ R_n = R_mn, m, n ≤ 4", ok, None)
}

const IDENTITIES: &[CheckFn] = &[
    d_table_m5,
    d_oracle,
    d_positive,
    phi_identity,
    recurrence,
    binomial_identity,
    fibonacci_sum,
    vanishing,
    ramanujan,
    gh_derivative,
    route_agreement,
];

const CONVERGENCE: &[CheckFn] = &[
    quad2_order,
    quad2_limit,
    quad2_invariance,
    deg6_fixed_point,
    deg6_printed_moves_fixed_point,
    deg6_invariance,
    deg6_printed_breaks_invariance,
    deg6_limit,
    agm_vs_quadrature,
];

const LANDEN_SYMBOLIC: &[CheckFn] = &[
    symbolic_q1,
    symbolic_evenness,
    symbolic_integral,
    q_vs_q1_quadrature,
    cot_composition,
];

/// Runs every check of the suite on its own thread; results keep suite order.
pub fn verify(suite: Suite) -> RunReport {
    let (name, checks): (&str, Vec<CheckFn>) = match suite {
        Suite::Identities => ("identities", IDENTITIES.to_vec()),
        Suite::Convergence => ("convergence", CONVERGENCE.to_vec()),
        Suite::LandenSymbolic => ("landen-symbolic", LANDEN_SYMBOLIC.to_vec()),
        Suite::All => ("all", [IDENTITIES, CONVERGENCE, LANDEN_SYMBOLIC].concat()),
    };
    let results = thread::scope(|scope| {
        let handles: Vec<_> = checks.iter().map(|check| scope.spawn(check)).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Check::new("check panicked", false, None))
            })
            .collect()
    });
    let mut report = RunReport::new("verify").input("suite", name);
    report.checks = results;
    report
}
