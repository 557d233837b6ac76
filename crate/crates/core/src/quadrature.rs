//! Adaptive Simpson quadrature.

/// Default absolute tolerance.
pub const ABS_TOL: f64 = 1e-10;
/// Default maximum recursion depth.
pub const MAX_DEPTH: u32 = 40;

/// Integrates `f` over `[lo, hi]` with the default tolerance and depth.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> f64 {
    integrate_with(&f, lo, hi, ABS_TOL, MAX_DEPTH)
}

/// Integrates `f` over each consecutive pair of `breaks`, so kinks at the
/// breakpoints never fall inside a Simpson panel.
pub fn integrate_piecewise<F: Fn(f64) -> f64>(f: F, breaks: &[f64]) -> f64 {
    breaks
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| integrate_with(&f, w[0], w[1], ABS_TOL, MAX_DEPTH))
        .sum()
}

pub fn integrate_with<F: Fn(f64) -> f64 + ?Sized>(f: &F, lo: f64, hi: f64, tol: f64, depth: u32) -> f64 {
    if hi == lo {
        return 0.0;
    }
    if hi < lo {
        return -integrate_with(f, hi, lo, tol, depth);
    }
    let mid = 0.5 * (lo + hi);
    let (f_lo, f_mid, f_hi) = (f(lo), f(mid), f(hi));
    let whole = simpson(lo, hi, f_lo, f_mid, f_hi);
    refine(
        f,
        Panel {
            lo,
            hi,
            f_lo,
            f_mid,
            f_hi,
            whole,
        },
        tol,
        depth,
    )
}

struct Panel {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_mid: f64,
    f_hi: f64,
    whole: f64,
}

fn simpson(lo: f64, hi: f64, f_lo: f64, f_mid: f64, f_hi: f64) -> f64 {
    (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi)
}

fn refine<F: Fn(f64) -> f64 + ?Sized>(f: &F, p: Panel, tol: f64, depth: u32) -> f64 {
    let mid = 0.5 * (p.lo + p.hi);
    let (lm, rm) = (0.5 * (p.lo + mid), 0.5 * (mid + p.hi));
    let (f_lm, f_rm) = (f(lm), f(rm));
    let left = simpson(p.lo, mid, p.f_lo, f_lm, p.f_mid);
    let right = simpson(mid, p.hi, p.f_mid, f_rm, p.f_hi);
    let delta = left + right - p.whole;
    if depth == 0 || delta.abs() <= 15.0 * tol || mid <= p.lo || mid >= p.hi {
        return left + right + delta / 15.0;
    }
    refine(
        f,
        Panel {
            lo: p.lo,
            hi: mid,
            f_lo: p.f_lo,
            f_mid: f_lm,
            f_hi: p.f_mid,
            whole: left,
        },
        0.5 * tol,
        depth - 1,
    ) + refine(
        f,
        Panel {
            lo: mid,
            hi: p.hi,
            f_lo: p.f_mid,
            f_mid: f_rm,
            f_hi: p.f_hi,
            whole: right,
        },
        0.5 * tol,
        depth - 1,
    )
}
