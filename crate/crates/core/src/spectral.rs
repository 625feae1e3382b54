//! Spectral radius: a bracketed floating-point estimate and an exact
//! comparison against integer thresholds.
//!
//! Verdicts never come from floating point. [`compare_mu`] computes the
//! characteristic polynomial of each component exactly and counts its roots
//! above the threshold with a Sturm sequence.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::poly::{IntPoly, SturmChain};

/// `det(xI − A)` with exact integer coefficients, monic of degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly(IntPoly);

impl CharPoly {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap_or(0)
    }

    /// Coefficients `c_0..c_n`.
    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn eval(&self, x: i64) -> BigInt {
        self.0.eval(&BigInt::from(x))
    }

    /// Encloses the largest real root in an interval of width `2^-bits`
    /// scaled from `[-1, degree]`, by Sturm-count bisection over dyadic
    /// rationals.
    pub fn largest_root_bracket(&self, bits: u32) -> (f64, f64) {
        let sturm = SturmChain::new(&self.0);
        let den = BigInt::one() << bits;
        let mut lo = -den.clone();
        let mut hi = BigInt::from(self.degree().max(1)) * &den;
        // roots_above(lo) >= 1 and roots_above(hi) == 0
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            if sturm.roots_above(&mid, &den) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let scale = 2f64.powi(bits as i32);
        (to_f64(&lo) / scale, to_f64(&hi) / scale)
    }
}

fn to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().expect("bounded value")
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact characteristic polynomial.
///
/// `det(kI − A)` is evaluated by Bareiss elimination at `k = 0..=n` and the
/// polynomial recovered by Newton interpolation, whose divided differences
/// at consecutive integers are exact in the integers after scaling by `j!`.
pub fn char_poly(g: &Graph) -> CharPoly {
    let n = g.n();
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|k| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                BigInt::from(k)
                            } else if g.has_edge(i, j) {
                                BigInt::from(-1)
                            } else {
                                BigInt::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            bareiss_det(m)
        })
        .collect();
    CharPoly(interpolate_consecutive(&values))
}

/// Integer polynomial through `(k, values[k])` for `k = 0..values.len()`.
///
/// Uses forward differences: `p(x) = Σ Δ^j p(0) · C(x, j)`, expanded in the
/// monomial basis with the falling factorials accumulated over `j!`.
fn interpolate_consecutive(values: &[BigInt]) -> IntPoly {
    let m = values.len();
    let mut diffs = values.to_vec();
    let mut forward = Vec::with_capacity(m);
    for _ in 0..m {
        forward.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // numerator accumulates Σ Δ^j p(0) · (m-1)!/j! · x(x-1)…(x-j+1)
    let mut total = vec![BigInt::zero(); m];
    let mut falling = vec![BigInt::one()]; // x(x-1)…(x-j+1)
    let mut fact = vec![BigInt::one(); m];
    for j in 1..m {
        fact[j] = &fact[j - 1] * BigInt::from(j);
    }
    let big = fact[m - 1].clone();
    for (j, d) in forward.iter().enumerate() {
        let scale = d * (&big / &fact[j]);
        for (i, c) in falling.iter().enumerate() {
            total[i] += &scale * c;
        }
        // falling *= (x - j)
        let mut next = vec![BigInt::zero(); falling.len() + 1];
        for (i, c) in falling.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * BigInt::from(j);
        }
        falling = next;
    }
    let coeffs = total
        .into_iter()
        .map(|c| {
            debug_assert!((&c % &big).is_zero());
            c / &big
        })
        .collect();
    IntPoly::new(coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Less,
    Equal,
    Greater,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Less => "LESS",
            Verdict::Equal => "EQUAL",
            Verdict::Greater => "GREATER",
        })
    }
}

/// Exact verdict for `μ(G)` against an integer, with the sizes of the
/// Sturm certificates used to reach it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuComparison {
    pub verdict: Verdict,
    pub k: i64,
    /// Distinct eigenvalues above `k`, summed over components.
    pub roots_above: usize,
    /// Sturm chain length per component with at least one edge.
    pub sturm_lengths: Vec<usize>,
    /// Largest coefficient bit length across all chains.
    pub max_coeff_bits: u64,
}

/// Exact trichotomy of the spectral radius against `k`.
///
/// Per component: roots of the square-free characteristic polynomial in
/// `(k, ∞)` are counted with a Sturm sequence; any such root means GREATER,
/// otherwise a root at `k` means EQUAL, otherwise LESS.
pub fn compare_mu(g: &Graph, k: i64) -> MuComparison {
    let kk = BigInt::from(k);
    let mut roots_above = 0;
    let mut equal = false;
    let mut sturm_lengths = Vec::new();
    let mut max_coeff_bits = 0;
    for comp in g.components() {
        let vs: Vec<usize> = bits(comp).collect();
        let sub = g.induced(&vs);
        let cp = if sub.edge_count() == 0 {
            // a single vertex: det(x) = x
            CharPoly(IntPoly::from_i64(&[0, 1]))
        } else {
            char_poly(&sub)
        };
        let sturm = SturmChain::new(cp.poly());
        if sub.edge_count() > 0 {
            sturm_lengths.push(sturm.len());
        }
        max_coeff_bits = sturm
            .polys()
            .iter()
            .flat_map(|p| p.coeffs().iter())
            .map(|c| c.bits())
            .fold(max_coeff_bits, u64::max);
        roots_above += sturm.roots_above_int(&kk);
        equal |= cp.poly().eval(&kk).is_zero();
    }
    let verdict = if roots_above > 0 {
        Verdict::Greater
    } else if equal {
        Verdict::Equal
    } else {
        Verdict::Less
    };
    MuComparison {
        verdict,
        k,
        roots_above,
        sturm_lengths,
        max_coeff_bits,
    }
}

/// Iteration cap for [`mu_estimate`].
pub const MAX_POWER_ITERATIONS: usize = 10_000;
pub const DEFAULT_TOL: f64 = 1e-10;

/// Spectral radius by power iteration on `A + I`, per component.
///
/// For a positive vector `x`, `min (Bx)_i/x_i ≤ ρ(B) ≤ max (Bx)_i/x_i`
/// (Collatz–Wielandt), so iteration stops once that bracket is narrower than
/// `2·tol` and returns its midpoint. The shift by `I` keeps bipartite
/// components from oscillating.
pub fn mu_estimate(g: &Graph, tol: f64) -> f64 {
    g.components()
        .into_iter()
        .map(|c| component_radius(g, c, tol))
        .fold(0.0, f64::max)
}

fn component_radius(g: &Graph, comp: u32, tol: f64) -> f64 {
    let vs: Vec<usize> = bits(comp).collect();
    if vs.len() == 1 {
        return 0.0;
    }
    let idx = {
        let mut idx = [0usize; 32];
        for (i, &v) in vs.iter().enumerate() {
            idx[v] = i;
        }
        idx
    };
    let nbrs: Vec<Vec<usize>> = vs
        .iter()
        .map(|&v| bits(g.neighbors(v)).map(|w| idx[w]).collect())
        .collect();
    let mut x = vec![1.0f64; vs.len()];
    let mut y = vec![0.0f64; vs.len()];
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for _ in 0..MAX_POWER_ITERATIONS {
        for i in 0..x.len() {
            y[i] = x[i] + nbrs[i].iter().map(|&j| x[j]).sum::<f64>();
        }
        lo = f64::INFINITY;
        hi = 0.0f64;
        for i in 0..x.len() {
            let r = y[i] / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        if hi - lo <= 2.0 * tol {
            break;
        }
        let norm = y.iter().cloned().fold(0.0, f64::max);
        for i in 0..x.len() {
            x[i] = y[i] / norm;
        }
    }
    (lo + hi) / 2.0 - 1.0
}

/// `sqrt(2m − n + 1)`, an upper bound on the spectral radius of a connected
/// graph with `n` vertices and `m` edges.
pub fn hong_bound(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(((2 * g.edge_count() + 1) as f64 - g.n() as f64).sqrt())
}

/// Integer form of the bound: `2m − n + 1`, to be compared against squares.
pub fn hong_bound_squared(g: &Graph) -> Result<i64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(2 * g.edge_count() as i64 - g.n() as i64 + 1)
}

/// Sanity oracle: the spectral radius never exceeds the maximum degree.
pub fn max_degree_bound_check(g: &Graph) -> bool {
    mu_estimate(g, 1e-9) <= g.max_degree() as f64 + 1e-6
}

impl MuComparison {
    pub fn is_at_most(&self) -> bool {
        !matches!(self.verdict, Verdict::Greater)
    }
}

/// `sign(p(k))` as −1, 0 or 1, handy for displaying certificates.
pub fn sign_at(cp: &CharPoly, k: i64) -> i8 {
    let v = cp.eval(k);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
