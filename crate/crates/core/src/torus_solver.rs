//! Fourier analysis of `L = ∂x − μ∂y` on the two-torus.
//!
//! On `e^{i(ξx + ηy)}` the operator acts by the symbol `i(ξ − μη)`. Resonant
//! modes, where the symbol vanishes, obstruct solvability of `Lu = f`; near
//! resonances produce small divisors. Coefficients are `f64` pairs; the
//! resonance test is exact for rational `μ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fourier coefficients below this modulus at resonant modes are treated as zero.
pub const OBSTRUCTION_THRESHOLD: f64 = 1e-14;

/// Largest truncation order accepted for the Liouville-type parameter; later
/// terms `2^{-j!}` fall below double precision.
pub const MAX_LIOUVILLE_TERMS: u32 = 4;

/// The coefficient `μ` of `L = ∂x − μ∂y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MuParameter {
    /// `p/q` in lowest terms with `q > 0`.
    Rational { p: i64, q: i64 },
    Float(f64),
    /// The truncation `Σ_{j=1..k} 2^{-j!}` of a Liouville-type number.
    Liouville { terms: u32 },
}

impl MuParameter {
    pub fn rational(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParameters("zero denominator in mu".into()));
        }
        let g = p.gcd(&q);
        let sign = q.signum();
        Ok(Self::Rational {
            p: sign * p / g,
            q: sign * q / g,
        })
    }

    pub fn liouville(terms: u32) -> Result<Self> {
        if terms == 0 || terms > MAX_LIOUVILLE_TERMS {
            return Err(Error::InvalidParameters(format!(
                "liouville truncation must be between 1 and {MAX_LIOUVILLE_TERMS}"
            )));
        }
        Ok(Self::Liouville { terms })
    }

    pub fn value(&self) -> f64 {
        match *self {
            Self::Rational { p, q } => p as f64 / q as f64,
            Self::Float(v) => v,
            Self::Liouville { terms } => (1..=terms).map(|j| 2f64.powi(-(factorial(j) as i32))).sum(),
        }
    }

    /// `ξ − μη`, computed as `(qξ − pη)/q` for rational `μ`.
    pub fn divisor(&self, xi: i64, eta: i64) -> f64 {
        match *self {
            Self::Rational { p, q } => (i128::from(q) * i128::from(xi) - i128::from(p) * i128::from(eta)) as f64 / q as f64,
            _ => xi as f64 - self.value() * eta as f64,
        }
    }

    /// Whether the symbol vanishes: exactly for rational `μ`, and by an exact
    /// floating-point zero otherwise.
    pub fn is_resonant(&self, xi: i64, eta: i64) -> bool {
        match *self {
            Self::Rational { p, q } => i128::from(q) * i128::from(xi) == i128::from(p) * i128::from(eta),
            _ => self.divisor(xi, eta) == 0.0,
        }
    }
}

impl FromStr for MuParameter {
    type Err = Error;

    /// Accepts `p/q`, an integer, `float:<value>` and `liouville:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameters(format!("cannot parse mu '{s}'"));
        if let Some(v) = s.strip_prefix("float:") {
            let v: f64 = v.trim().parse().map_err(|_| bad())?;
            return if v.is_finite() { Ok(Self::Float(v)) } else { Err(bad()) };
        }
        if let Some(k) = s.strip_prefix("liouville:") {
            return Self::liouville(k.trim().parse().map_err(|_| bad())?);
        }
        match s.split_once('/') {
            Some((p, q)) => Self::rational(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => Self::rational(s.parse().map_err(|_| bad())?, 1),
        }
    }
}

impl fmt::Display for MuParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational { p, q: 1 } => write!(f, "{p}"),
            Self::Rational { p, q } => write!(f, "{p}/{q}"),
            Self::Float(v) => write!(f, "float:{v}"),
            Self::Liouville { terms } => write!(f, "liouville:{terms}"),
        }
    }
}

fn factorial(j: u32) -> u64 {
    (1..=u64::from(j)).product()
}

/// `i(ξ − μη)`.
pub fn symbol(mu: &MuParameter, xi: i64, eta: i64) -> Complex64 {
    if mu.is_resonant(xi, eta) {
        Complex64::new(0.0, 0.0)
    } else {
        Complex64::new(0.0, mu.divisor(xi, eta))
    }
}

/// A trigonometric polynomial `Σ f̂(ξ,η) e^{i(ξx+ηy)}` with `max(|ξ|,|η|) ≤ R`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FourierForm {
    radius: i64,
    modes: BTreeMap<(i64, i64), Complex64>,
}

impl FourierForm {
    pub fn new(radius: i64) -> Self {
        Self {
            radius: radius.max(0),
            modes: BTreeMap::new(),
        }
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn modes(&self) -> &BTreeMap<(i64, i64), Complex64> {
        &self.modes
    }

    pub fn get(&self, xi: i64, eta: i64) -> Complex64 {
        self.modes.get(&(xi, eta)).copied().unwrap_or_default()
    }

    /// Adds `c` to the coefficient of `(ξ, η)`.
    pub fn add(&mut self, xi: i64, eta: i64, c: Complex64) -> Result<()> {
        if xi.abs().max(eta.abs()) > self.radius {
            return Err(Error::InvalidParameters(format!(
                "mode ({xi}, {eta}) lies outside radius {}",
                self.radius
            )));
        }
        *self.modes.entry((xi, eta)).or_default() += c;
        Ok(())
    }

    /// `a·self + b·other` on the larger radius.
    pub fn combine(&self, a: Complex64, other: &Self, b: Complex64) -> Self {
        let mut out = Self::new(self.radius.max(other.radius));
        for (k, v) in &self.modes {
            *out.modes.entry(*k).or_default() += a * v;
        }
        for (k, v) in &other.modes {
            *out.modes.entry(*k).or_default() += b * v;
        }
        out
    }

    pub fn to_file(&self) -> FourierFile {
        FourierFile {
            radius: self.radius,
            modes: self
                .modes
                .iter()
                .map(|(&(xi, eta), c)| FourierMode {
                    xi,
                    eta,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }

    pub fn from_file(file: FourierFile) -> Result<Self> {
        let mut out = Self::new(file.radius);
        for m in file.modes {
            out.add(m.xi, m.eta, Complex64::new(m.re, m.im))?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(serde_json::from_str(text)?)
    }
}

/// On-disk form: `{"R": int, "modes": [{"xi", "eta", "re", "im"}]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FourierFile {
    #[serde(rename = "R")]
    pub radius: i64,
    pub modes: Vec<FourierMode>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FourierMode {
    pub xi: i64,
    pub eta: i64,
    pub re: f64,
    pub im: f64,
}

/// The lattice points `(ξ, η)` with `max(|ξ|,|η|) ≤ R` at which the symbol vanishes.
///
/// For `μ = p/q` these are `(kp, kq)`, listed as `k = 0, 1, −1, 2, −2, …`.
pub fn resonant_modes(mu: &MuParameter, radius: i64) -> Vec<(i64, i64)> {
    if radius < 0 {
        return Vec::new();
    }
    match *mu {
        MuParameter::Rational { p, q } => {
            let kmax = radius / p.abs().max(q);
            let mut out = vec![(0, 0)];
            for k in 1..=kmax {
                out.push((k * p, k * q));
                out.push((-k * p, -k * q));
            }
            out
        }
        _ => {
            let mut out: Vec<(i64, i64)> = (-radius..=radius)
                .flat_map(|xi| (-radius..=radius).map(move |eta| (xi, eta)))
                .filter(|&(xi, eta)| mu.is_resonant(xi, eta))
                .collect();
            out.sort_by_key(|&(xi, eta)| ((xi.abs().max(eta.abs())), (xi, eta) < (0, 0), xi, eta));
            out
        }
    }
}

/// `L u` computed mode-wise.
pub fn apply_operator(mu: &MuParameter, u: &FourierForm) -> FourierForm {
    let mut out = FourierForm::new(u.radius);
    for (&(xi, eta), c) in &u.modes {
        let v = symbol(mu, xi, eta) * c;
        if v != Complex64::new(0.0, 0.0) {
            out.modes.insert((xi, eta), v);
        }
    }
    out
}

/// Result of a truncated solve of `Lu = f`.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub solution: FourierForm,
    /// Resonant modes where `|f̂| > OBSTRUCTION_THRESHOLD`.
    pub obstructions: Vec<(i64, i64)>,
    /// `max |(Lu)^ − f̂|` over the modes of `f` that are not obstructed.
    pub residual: f64,
}

impl Solution {
    pub fn is_obstructed(&self) -> bool {
        !self.obstructions.is_empty()
    }
}

/// Solves `û = f̂ / (i(ξ − μη))` on non-resonant modes and reports resonant
/// modes carrying data as obstructions.
pub fn solve(mu: &MuParameter, f: &FourierForm) -> Solution {
    let mut solution = FourierForm::new(f.radius);
    let mut obstructions = Vec::new();
    for (&(xi, eta), c) in &f.modes {
        if mu.is_resonant(xi, eta) {
            if c.norm() > OBSTRUCTION_THRESHOLD {
                obstructions.push((xi, eta));
            }
        } else {
            solution.modes.insert((xi, eta), c / symbol(mu, xi, eta));
        }
    }
    let lu = apply_operator(mu, &solution);
    let residual = f
        .modes
        .iter()
        .filter(|(k, _)| !obstructions.contains(k))
        .map(|(&(xi, eta), c)| (lu.get(xi, eta) - c).norm())
        .fold(0.0, f64::max);
    Solution {
        solution,
        obstructions,
        residual,
    }
}

/// One row of the small-divisor table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShellRow {
    /// `s = max(|ξ|,|η|)`.
    pub shell: i64,
    /// Minimal nonzero `|ξ − μη|` on the shell.
    pub shell_min: f64,
    /// A mode attaining `shell_min`.
    pub argmin: (i64, i64),
    /// Minimal nonzero `|ξ − μη|` over all shells up to `s`.
    pub running_min: f64,
}

/// Per-shell minima of the nonzero divisors `|ξ − μη|`, `1 ≤ s ≤ R`.
pub fn small_divisor_profile(mu: &MuParameter, radius: i64) -> Vec<ShellRow> {
    let mut rows = Vec::new();
    let mut running = f64::INFINITY;
    for s in 1..=radius.max(0) {
        let mut best = (f64::INFINITY, (0, 0));
        for (xi, eta) in shell(s) {
            if mu.is_resonant(xi, eta) {
                continue;
            }
            let d = mu.divisor(xi, eta).abs();
            if d < best.0 {
                best = (d, (xi, eta));
            }
        }
        running = running.min(best.0);
        rows.push(ShellRow {
            shell: s,
            shell_min: best.0,
            argmin: best.1,
            running_min: running,
        });
    }
    rows
}

/// Lattice points with `max(|ξ|,|η|) = s`, in lexicographic order.
fn shell(s: i64) -> impl Iterator<Item = (i64, i64)> {
    (-s..=s).flat_map(move |xi| {
        let etas: Vec<i64> = if xi.abs() == s { (-s..=s).collect() } else { vec![-s, s] };
        etas.into_iter().map(move |eta| (xi, eta))
    })
}

/// The divisor at the scale `η = 2^{j!}` of a Liouville-type truncation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiouvilleScale {
    pub j: u32,
    pub eta: i64,
    pub xi: i64,
    pub divisor: f64,
    /// `−ln|ξ − μη| / ln η`: the polynomial order of decay at this scale.
    pub exponent: f64,
}

/// Divisors at `η = 2^{j!}` for `j < k` and `2^{j!} ≤ R`, with `ξ` the nearest integer to `μη`.
///
/// For `μ_k = Σ_{j≤k} 2^{-j!}` the divisor at `η = 2^{j!}` is about
/// `2^{j! − (j+1)!}`, so the exponent is about `j` and grows without bound.
pub fn liouville_scales(mu: &MuParameter, radius: i64) -> Vec<LiouvilleScale> {
    let MuParameter::Liouville { terms } = *mu else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for j in 1..terms {
        let eta = 1i64 << factorial(j);
        if eta > radius {
            break;
        }
        let xi = (mu.value() * eta as f64).round() as i64;
        let divisor = mu.divisor(xi, eta).abs();
        out.push(LiouvilleScale {
            j,
            eta,
            xi,
            divisor,
            exponent: -divisor.ln() / (eta as f64).ln(),
        });
    }
    out
}
