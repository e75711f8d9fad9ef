//! Evaluators for the known bounds on the minimum number of edges induced by
//! `l` vertices of G(n,3,1), regime classification, and the density at
//! which the dense-regime lower bounds overtake the quadratic one.
//!
//! Values carry their validity: `ExactFiniteN` bounds hold at the given `n`,
//! `AsymptoticReference` values are only the leading-order form of an
//! asymptotic statement. Unknown `o(1)` slack is passed in as `h`.

use serde::Serialize;

use crate::combinat::{binomial, c_fraction, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Lower,
    Upper,
    AsymptoticEquality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validity {
    ExactFiniteN,
    AsymptoticReference,
}

/// Which statement a value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Source {
    #[serde(rename = "T1.1")]
    T1_1,
    #[serde(rename = "T1.2")]
    T1_2,
    #[serde(rename = "T1.3-low")]
    T1_3Low,
    #[serde(rename = "T1.3-up")]
    T1_3Up,
    #[serde(rename = "T1.4")]
    T1_4,
    #[serde(rename = "T2")]
    T2,
    #[serde(rename = "T3.1")]
    T3_1,
    #[serde(rename = "T3.2")]
    T3_2,
    #[serde(rename = "T3.3")]
    T3_3,
    #[serde(rename = "T3.4")]
    T3_4,
    #[serde(rename = "F1")]
    F1,
    #[serde(rename = "F2")]
    F2,
}

impl Source {
    pub fn label(&self) -> &'static str {
        match self {
            Source::T1_1 => "T1.1",
            Source::T1_2 => "T1.2",
            Source::T1_3Low => "T1.3-low",
            Source::T1_3Up => "T1.3-up",
            Source::T1_4 => "T1.4",
            Source::T2 => "T2",
            Source::T3_1 => "T3.1",
            Source::T3_2 => "T3.2",
            Source::T3_3 => "T3.3",
            Source::T3_4 => "T3.4",
            Source::F1 => "F1",
            Source::F2 => "F2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEstimate {
    pub value: f64,
    /// Exact value when the formula is evaluated without float slack.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Rational>,
    pub direction: Direction,
    pub validity: Validity,
    pub source: Source,
    pub h_param: f64,
}

impl BoundEstimate {
    fn exact(v: Rational, direction: Direction, validity: Validity, source: Source) -> Self {
        BoundEstimate { value: v.to_f64(), exact: Some(v), direction, validity, source, h_param: 0.0 }
    }
}

fn check_l(n: usize, l: u64) -> Result<Rational> {
    c_fraction(n, l)
}

fn n_pow5_over_8(n: usize) -> Rational {
    let n = n as i128;
    Rational::new(n * n * n * n * n, 8)
}

/// `alpha` defaults to `n`, the asymptotic proxy used throughout.
fn alpha_or_n(n: usize, alpha: Option<u64>) -> Rational {
    Rational::integer(alpha.unwrap_or(n as u64).into())
}

fn sq(l: u64) -> Rational {
    let l = i128::from(l);
    Rational::integer(l * l)
}

/// First bound family: points 1 and 2 give `l^2 / (2 alpha)`, point 3 the pair
/// `l^2 / alpha` and `5 l^2 / alpha`, point 4 `n^5 (1/8 - c/4 + c^2/72)`.
pub fn eval_t1(point: u8, n: usize, l: u64, alpha: Option<u64>) -> Result<Vec<BoundEstimate>> {
    let c = check_l(n, l)?;
    let a = alpha_or_n(n, alpha);
    let asym = Validity::AsymptoticReference;
    Ok(match point {
        1 | 2 => {
            let src = if point == 1 { Source::T1_1 } else { Source::T1_2 };
            vec![BoundEstimate::exact(sq(l) / (Rational::integer(2) * a), Direction::AsymptoticEquality, asym, src)]
        }
        3 => vec![
            BoundEstimate::exact(sq(l) / a, Direction::Lower, asym, Source::T1_3Low),
            BoundEstimate::exact(Rational::integer(5) * sq(l) / a, Direction::Upper, asym, Source::T1_3Up),
        ],
        4 => {
            let n5 = Rational::integer((n as i128).pow(5));
            let bracket = Rational::new(1, 8) - c / Rational::integer(4) + c * c / Rational::integer(72);
            vec![BoundEstimate::exact(n5 * bracket, Direction::Lower, asym, Source::T1_4)]
        }
        _ => return Err(Error::GroundSet { n, reason: "bound point must be 1..=4" }),
    })
}

/// Quadratic lower bound `3 l^2 / (2n)`.
pub fn eval_t2(n: usize, l: u64) -> Result<BoundEstimate> {
    check_l(n, l)?;
    Ok(BoundEstimate::exact(
        Rational::integer(3) * sq(l) / Rational::integer(2 * n as i128),
        Direction::Lower,
        Validity::AsymptoticReference,
        Source::T2,
    ))
}

/// The bracket multiplying `n^5 / 8` in the dense-regime statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracket {
    /// `1 - 2c - 10/n + 20c/n`
    T3_4,
    /// `1 - 2c + (2c^2/9)(1+h) - 10/n + 20c/n - (20c^2/(9n))(1+h)`
    T3_3,
    /// `1 - 2c + (c^2/3)(1+h) - 10/n + 20c/n - (10c^2/(3n))(1+h)`
    T3_2,
    /// `(1 - c)^2`
    F1,
    /// `(1 - c)^2 / 3`
    F2,
}

impl Bracket {
    /// Coefficient of `c^2` in the leading (n -> infinity) part.
    fn c2_coefficient(self) -> Rational {
        match self {
            Bracket::T3_4 => Rational::zero(),
            Bracket::T3_3 => Rational::new(2, 9),
            Bracket::T3_2 => Rational::new(1, 3),
            Bracket::F1 => Rational::one(),
            Bracket::F2 => Rational::new(1, 3),
        }
    }

    /// Leading part with `h = 0` and without the `1/n` corrections.
    pub fn leading(self, c: Rational) -> Rational {
        match self {
            Bracket::F2 => (Rational::one() - c) * (Rational::one() - c) / Rational::integer(3),
            Bracket::F1 => (Rational::one() - c) * (Rational::one() - c),
            _ => Rational::one() - Rational::integer(2) * c + self.c2_coefficient() * c * c,
        }
    }

    /// Full bracket at finite `n` with `h = 0`. The three dense-regime
    /// brackets factor as `(1 - 10/n)` times their leading part.
    pub fn at(self, c: Rational, n: usize) -> Rational {
        match self {
            Bracket::F1 | Bracket::F2 => self.leading(c),
            _ => (Rational::one() - Rational::new(10, n as i128)) * self.leading(c),
        }
    }

    /// Full bracket with slack `h` in float arithmetic.
    pub fn at_with_slack(self, c: f64, n: usize, h: f64) -> f64 {
        let n = n as f64;
        let k = self.c2_coefficient().to_f64();
        match self {
            Bracket::F1 => (1.0 - c).powi(2) * (1.0 + h),
            Bracket::F2 => (1.0 - c).powi(2) / 3.0 * (1.0 + h),
            _ => 1.0 - 2.0 * c + k * c * c * (1.0 + h) - 10.0 / n + 20.0 * c / n - 10.0 * k * c * c / n * (1.0 + h),
        }
    }
}

/// Dense-regime bound family. Point 1 is the construction upper bound
/// `9 l^2 / (2 alpha)`; points 2-4 are `n^5/8` times their bracket and are
/// defined as 0 for `n <= 10`. Point 4 holds at every `n` and is tagged
/// `ExactFiniteN`; points 2-3 depend on an unknown `o(1)` term.
pub fn eval_t3(point: u8, n: usize, l: u64, h: f64) -> Result<BoundEstimate> {
    let c = check_l(n, l)?;
    let bracket = match point {
        1 => {
            let v = Rational::integer(9) * sq(l) / (Rational::integer(2) * alpha_or_n(n, None));
            return Ok(BoundEstimate::exact(v, Direction::Upper, Validity::AsymptoticReference, Source::T3_1));
        }
        2 => Bracket::T3_2,
        3 => Bracket::T3_3,
        4 => Bracket::T3_4,
        _ => return Err(Error::GroundSet { n, reason: "bound point must be 1..=4" }),
    };
    let (source, validity) = match point {
        2 => (Source::T3_2, Validity::AsymptoticReference),
        3 => (Source::T3_3, Validity::AsymptoticReference),
        _ => (Source::T3_4, Validity::ExactFiniteN),
    };
    if n <= 10 {
        let mut e = BoundEstimate::exact(Rational::zero(), Direction::Lower, validity, source);
        e.h_param = h;
        return Ok(e);
    }
    if h == 0.0 || bracket == Bracket::T3_4 {
        let mut e = BoundEstimate::exact(n_pow5_over_8(n) * bracket.at(c, n), Direction::Lower, validity, source);
        e.h_param = h;
        return Ok(e);
    }
    let value = n_pow5_over_8(n).to_f64() * bracket.at_with_slack(c.to_f64(), n, h);
    Ok(BoundEstimate { value, exact: None, direction: Direction::Lower, validity, source, h_param: h })
}

/// The finite-n lower bound as an integer: the smallest edge count it allows.
pub fn t3_4_floor(n: usize, l: u64) -> Result<i128> {
    let e = eval_t3(4, n, l, 0.0)?;
    Ok(e.exact.expect("exact").ceil().max(0))
}

/// Reference envelope `n^5/8 (1-c)^2` (upper) and `n^5/8 (1-c)^2 / 3` (lower).
pub fn eval_envelope(n: usize, l: u64) -> Result<(BoundEstimate, BoundEstimate)> {
    let c = check_l(n, l)?;
    let scale = n_pow5_over_8(n);
    let asym = Validity::AsymptoticReference;
    Ok((
        BoundEstimate::exact(scale * Bracket::F1.leading(c), Direction::Upper, asym, Source::F1),
        BoundEstimate::exact(scale * Bracket::F2.leading(c), Direction::Lower, asym, Source::F2),
    ))
}

/// `9 l^2 / (2n)` with `l = (1-c) n^3 / 6` equals `n^5/8 (1-c)^2`.
pub fn envelope_identity_holds(n: u64, c: Rational) -> bool {
    let n = Rational::integer(n.into());
    let l = (Rational::one() - c) * n * n * n / Rational::integer(6);
    let lhs = Rational::integer(9) * l * l / (Rational::integer(2) * n);
    let rhs = n * n * n * n * n / Rational::integer(8) * Bracket::F1.leading(c);
    lhs == rhs
}

/// Every estimate defined at `(n, l)`, in a fixed order.
pub fn all_estimates(n: usize, l: u64, alpha: Option<u64>, h: f64) -> Result<Vec<BoundEstimate>> {
    let mut out = Vec::new();
    for p in 1..=4 {
        out.extend(eval_t1(p, n, l, alpha)?);
    }
    out.push(eval_t2(n, l)?);
    for p in 1..=4 {
        out.push(eval_t3(p, n, l, h)?);
    }
    let (up, low) = eval_envelope(n, l)?;
    out.push(up);
    out.push(low);
    Ok(out)
}

/// Commonly quoted truncation of the crossover density.
pub const REFERENCE_CROSSOVER_PREFIX: &str = "0.486";

/// Threshold density where the dense-regime bound starts beating the
/// quadratic one, comparing `(1 - 2c + 2c^2/9) / 8` with `c^2 / 24`, i.e.
/// the positive root of `c^2 + 18c - 9`: `3 sqrt(10) - 9`.
pub fn normalized_crossover() -> f64 {
    90f64.sqrt() - 9.0
}

/// Same comparison with the `(1 - 2c)` bracket: root of `c^2 + 6c - 3`.
pub fn linear_bracket_crossover() -> f64 {
    12f64.sqrt() - 3.0
}

/// The inequality `n^5/8 (1 - 2c - 10/n + 20c/n) >= 3 (c C(n,3))^2 / 2`
/// taken at face value. Its sides grow like `n^5` and `n^6`.
pub fn literal_inequality_holds(n: f64, c: f64) -> bool {
    let (lhs, rhs) = literal_sides(n, c);
    lhs >= rhs
}

fn literal_sides(n: f64, c: f64) -> (f64, f64) {
    let cn3 = n * (n - 1.0) * (n - 2.0) / 6.0;
    let lhs = n.powi(5) / 8.0 * (1.0 - 2.0 * c - 10.0 / n + 20.0 * c / n);
    let rhs = 1.5 * (c * cn3).powi(2);
    (lhs, rhs)
}

/// Largest `c` for which the face-value inequality holds at this `n`
/// (it holds exactly on `[0, threshold]`). `None` when it fails even at 0.
pub fn literal_crossover(n: f64) -> Option<f64> {
    let cn3 = n * (n - 1.0) * (n - 2.0) / 6.0;
    let scale = n.powi(5) / 8.0;
    let a = 1.5 * cn3 * cn3;
    let b = scale * (2.0 - 20.0 / n);
    let k = scale * (1.0 - 10.0 / n);
    if k < 0.0 {
        return None;
    }
    // stable form of the positive root of a c^2 + b c - k
    Some(2.0 * k / (b + (b * b + 4.0 * a * k).sqrt()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossoverInterpretation {
    Literal,
    PerNNormalized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    TrivialZero,
    SubQuadratic,
    Quadratic,
    BetweenQuadraticAndCubic,
    CubicMinusGap,
    CubicMinusLinear,
}

/// Constants the regime boundaries are expressed in. The statements
/// quantify over them, so they are caller-supplied.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThresholdSet {
    /// Sets of at most this size can be independent (`r = 0`).
    pub alpha: u64,
    /// `l >= quad_low * n^2` starts the quadratic band.
    pub quad_low: f64,
    pub quad_high: f64,
    /// `l >= cubic_low * n^3` starts the dense regime.
    pub cubic_low: f64,
    /// Dense regime with a gap: `l <= C(n,3) - gap`.
    pub gap: u64,
    /// `l >= C(n,3) - linear_gap * n`.
    pub linear_gap: f64,
}

impl ThresholdSet {
    /// `alpha = n - 2` (the type-1 family size, a sure lower bound for the
    /// independence number), quadratic band `[n^2/2, 2n^2]`, dense regime
    /// from `n^3/8`, `gap = ceil(n^1.5)`, `linear_gap = 1`.
    pub fn default_for(n: usize) -> Self {
        ThresholdSet {
            alpha: n.saturating_sub(2) as u64,
            quad_low: 0.5,
            quad_high: 2.0,
            cubic_low: 0.125,
            gap: (n as f64).powf(1.5).ceil() as u64,
            linear_gap: 1.0,
        }
    }
}

/// All regimes whose defining inequalities `l` satisfies. Overlapping
/// constants give several tags; an `l` between the gapped dense regime and
/// the near-full one can get none.
pub fn classify_regime(n: usize, l: u64, t: &ThresholdSet) -> Result<Vec<Regime>> {
    let total = binomial(n as u64, 3)?;
    if l > total {
        return Err(Error::SubsetTooLarge { l, count: total });
    }
    let (lf, nf) = (l as f64, n as f64);
    let n2 = nf * nf;
    let n3 = n2 * nf;
    let mut out = Vec::new();
    if l <= t.alpha {
        out.push(Regime::TrivialZero);
        return Ok(out);
    }
    if lf < t.quad_low * n2 {
        out.push(Regime::SubQuadratic);
    }
    if t.quad_low * n2 <= lf && lf <= t.quad_high * n2 {
        out.push(Regime::Quadratic);
    }
    if t.quad_high * n2 < lf && lf < t.cubic_low * n3 {
        out.push(Regime::BetweenQuadraticAndCubic);
    }
    if t.cubic_low * n3 <= lf && l.saturating_add(t.gap) <= total {
        out.push(Regime::CubicMinusGap);
    }
    if lf >= total as f64 - t.linear_gap * nf {
        out.push(Regime::CubicMinusLinear);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t1_examples() {
        let v = eval_t1(1, 100, 10_000, Some(100)).unwrap();
        assert_eq!(v[0].exact, Some(Rational::integer(500_000)));
        let total = binomial(100, 3).unwrap();
        let v = eval_t1(4, 100, total, None).unwrap();
        assert_eq!(v[0].exact, Some(Rational::integer(1_250_000_000)));
        for l in [1u64, 77, 5000, 161_700] {
            let v = eval_t1(3, 100, l, None).unwrap();
            assert_eq!(v[1].exact.unwrap() / v[0].exact.unwrap(), Rational::integer(5));
        }
        assert!(eval_t1(5, 10, 1, None).is_err());
    }

    #[test]
    fn t2_examples() {
        assert_eq!(eval_t2(20, 1140).unwrap().exact, Some(Rational::integer(97_470)));
        assert_eq!(eval_t2(10, 120).unwrap().exact, Some(Rational::integer(2160)));
        assert!(eval_t2(10, 121).is_err());
    }

    #[test]
    fn t3_examples() {
        for n in 3..=10 {
            let total = binomial(n as u64, 3).unwrap();
            for p in 2..=4 {
                assert_eq!(eval_t3(p, n, total, 0.0).unwrap().exact, Some(Rational::zero()));
            }
        }
        let e = eval_t3(4, 20, 1140, 0.0).unwrap();
        assert_eq!(e.exact, Some(Rational::integer(200_000)));
        assert_eq!(e.validity, Validity::ExactFiniteN);
        let e = eval_t3(2, 20, 570, 0.0).unwrap();
        assert_eq!(e.exact, Some(Rational::new(50_000, 3)));
        assert_eq!(e.validity, Validity::AsymptoticReference);
        let e = eval_t3(2, 20, 570, 0.1).unwrap();
        assert!(e.exact.is_none());
        let expected = 400_000.0 * (1.0 - 1.0 + 0.25 / 3.0 * 1.1 - 0.5 + 0.5 - 10.0 * 0.25 / 60.0 * 1.1);
        assert!((e.value - expected).abs() < 1e-6);
        let up = eval_t3(1, 10, 20, 0.0).unwrap();
        assert_eq!(up.exact, Some(Rational::integer(180)));
        assert_eq!(up.direction, Direction::Upper);
    }

    #[test]
    fn brackets_match_expanded_forms() {
        let n = 37usize;
        for k in 0..=20 {
            let c = Rational::new(k, 20);
            let nn = Rational::integer(n as i128);
            let two = Rational::integer(2);
            let lin = Rational::one() - two * c - Rational::integer(10) / nn + Rational::integer(20) * c / nn;
            assert_eq!(Bracket::T3_4.at(c, n), lin);
            let t32 = lin + c * c / Rational::integer(3) - Rational::integer(10) * c * c / (Rational::integer(3) * nn);
            assert_eq!(Bracket::T3_2.at(c, n), t32);
            let t33 = lin + Rational::new(2, 9) * c * c - Rational::integer(20) * c * c / (Rational::integer(9) * nn);
            assert_eq!(Bracket::T3_3.at(c, n), t33);
            assert!((Bracket::T3_3.at_with_slack(c.to_f64(), n, 0.0) - t33.to_f64()).abs() < 1e-12);
        }
    }

    #[test]
    fn envelope_endpoints() {
        assert_eq!(Bracket::F1.leading(Rational::zero()), Rational::one());
        assert_eq!(Bracket::F2.leading(Rational::zero()), Rational::new(1, 3));
        assert_eq!(Bracket::F1.leading(Rational::one()), Rational::zero());
        assert_eq!(Bracket::F2.leading(Rational::one()), Rational::zero());
        for k in 0..100 {
            let c = Rational::new(k, 100);
            assert_eq!(Bracket::F1.leading(c) / Bracket::F2.leading(c), Rational::integer(3));
            assert!(envelope_identity_holds(57, c));
        }
        let (u, l) = eval_envelope(20, 0).unwrap();
        assert_eq!(u.exact.unwrap(), Rational::zero());
        assert_eq!(l.exact.unwrap(), Rational::zero());
    }

    #[test]
    fn crossover_values() {
        let c = normalized_crossover();
        assert!((c * c + 18.0 * c - 9.0).abs() < 1e-12);
        assert!(c > 0.486 && c < 0.487);
        let c = linear_bracket_crossover();
        assert!((c * c + 6.0 * c - 3.0).abs() < 1e-12);
        assert!((c - 0.46410).abs() < 1e-5);
        assert!(!literal_inequality_holds(1e6, 0.1));
        let t = literal_crossover(1e6).unwrap();
        assert!(t > 0.0 && t < 0.01);
        assert!(literal_crossover(1e8).unwrap() < t);
        assert!(literal_inequality_holds(1e6, t * 0.5));
        assert!(!literal_inequality_holds(1e6, t * 2.0));
        assert_eq!(literal_crossover(5.0), None);
    }

    #[test]
    fn regimes() {
        let t = ThresholdSet::default_for(100);
        assert_eq!(classify_regime(100, 98, &t).unwrap(), vec![Regime::TrivialZero]);
        assert_eq!(classify_regime(100, 100_000, &t).unwrap(), vec![Regime::BetweenQuadraticAndCubic]);
        let total = binomial(100, 3).unwrap();
        assert_eq!(classify_regime(100, total - 50, &t).unwrap(), vec![Regime::CubicMinusLinear]);
        assert_eq!(classify_regime(100, 1000, &t).unwrap(), vec![Regime::SubQuadratic]);
        assert_eq!(classify_regime(100, 10_000, &t).unwrap(), vec![Regime::Quadratic]);
        assert_eq!(classify_regime(100, 130_000, &t).unwrap(), vec![Regime::CubicMinusGap]);
        let wide = ThresholdSet { gap: 0, linear_gap: 1000.0, ..t };
        assert_eq!(
            classify_regime(100, 150_000, &wide).unwrap(),
            vec![Regime::CubicMinusGap, Regime::CubicMinusLinear]
        );
        assert!(classify_regime(100, total + 1, &t).is_err());
    }
}
