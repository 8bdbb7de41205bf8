//! Gauss rules from three-term recurrences (Golub-Welsch).

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::special::{gamma, ln_gamma};

const MAX_QL_ITERATIONS: usize = 60;

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e` (`e[i]` couples `i` and `i+1`), by implicit QL.
/// On return `d` holds the eigenvalues and `first[j]` the first component of
/// the `j`-th normalized eigenvector. `e` is destroyed.
pub fn tridiagonal_eigen(d: &mut [f64], e: &mut [f64], first: &mut [f64]) -> Result<()> {
    let n = d.len();
    if e.len() + 1 < n || first.len() != n {
        return Err(Error::LengthMismatch(d.len(), first.len()));
    }
    if n == 0 {
        return Ok(());
    }
    let mut off = vec![0.0; n];
    off[..n - 1].copy_from_slice(&e[..n - 1]);
    first.iter_mut().for_each(|z| *z = 0.0);
    first[0] = 1.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_ITERATIONS {
                return Err(Error::EigenFailure);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let z = first[i + 1];
                first[i + 1] = s * first[i] + c * z;
                first[i] = c * first[i] - s * z;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

/// Nodes and weights of the `n`-point Gauss rule for recurrence coefficients
/// `a[k]` (diagonal) and `b[k]` (`β_k`, squared off-diagonal, `b[0]` unused),
/// with total mass `mu0`. Nodes ascend.
pub fn golub_welsch(a: &[f64], b: &[f64], mu0: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let mut d = a.to_vec();
    let mut e: Vec<f64> = (1..n).map(|k| b[k].sqrt()).collect();
    let mut z = vec![0.0; n];
    tridiagonal_eigen(&mut d, &mut e, &mut z)?;
    let mut pairs: Vec<(f64, f64)> = d
        .into_iter()
        .zip(z.into_iter().map(|v| mu0 * v * v))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(pairs.into_iter().unzip())
}

/// Gauss-Legendre on `[−1, 1]`.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "quadrature needs at least one node",
        ));
    }
    let a = vec![0.0; n];
    let b: Vec<f64> = (0..n)
        .map(|k| {
            let k = k as f64;
            k * k / (4.0 * k * k - 1.0)
        })
        .collect();
    let (x, w) = golub_welsch(&a, &b, 2.0)?;
    // restore exact symmetry
    let mut xs = x.clone();
    let mut ws = w.clone();
    for i in 0..n {
        let j = n - 1 - i;
        xs[i] = 0.5 * (x[i] - x[j]);
        ws[i] = 0.5 * (w[i] + w[j]);
    }
    if n % 2 == 1 {
        xs[n / 2] = 0.0;
    }
    Ok((xs, ws))
}

/// Gauss-Jacobi on `[−1, 1]` for the weight `(1−x)^a (1+x)^b`, `a, b > −1`.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "quadrature needs at least one node",
        ));
    }
    if !(a > -1.0 && b > -1.0) {
        return Err(Error::InvalidParameter("Jacobi exponents must exceed −1"));
    }
    let ab = a + b;
    let mut diag = vec![0.0; n];
    let mut beta = vec![0.0; n];
    diag[0] = (b - a) / (ab + 2.0);
    for k in 1..n {
        let kf = k as f64;
        let t = 2.0 * kf + ab;
        diag[k] = (b * b - a * a) / (t * (t + 2.0));
        beta[k] = if k == 1 {
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
        } else {
            4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (t * t * (t + 1.0) * (t - 1.0))
        };
    }
    let mu0 = if ab + 2.0 < 150.0 {
        2f64.powf(ab + 1.0) * gamma(a + 1.0)? * gamma(b + 1.0)? / gamma(ab + 2.0)?
    } else {
        ((ab + 1.0) * core::f64::consts::LN_2 + ln_gamma(a + 1.0)? + ln_gamma(b + 1.0)?
            - ln_gamma(ab + 2.0)?)
        .exp()
    };
    golub_welsch(&diag, &beta, mu0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_of_small_matrix() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3, first components ±1/√2
        let mut d = [2.0, 2.0];
        let mut e = [1.0];
        let mut z = [0.0; 2];
        tridiagonal_eigen(&mut d, &mut e, &mut z).unwrap();
        let mut ev = d;
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] - 3.0).abs() < 1e-15);
        assert!((z[0] * z[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(10).unwrap();
        for k in 0..20 {
            let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(k)).sum();
            let exact = if k % 2 == 1 {
                0.0
            } else {
                2.0 / (k as f64 + 1.0)
            };
            assert!((q - exact).abs() < 1e-14, "k={k}");
        }
    }

    #[test]
    fn jacobi_moments() {
        // ∫(1+x)^b x^0 over [−1,1] = 2^{b+1}/(b+1); first moment via Beta
        let b = 2.5;
        let (x, w) = gauss_jacobi(12, 0.0, b).unwrap();
        let m0: f64 = w.iter().sum();
        assert!((m0 - 2f64.powf(b + 1.0) / (b + 1.0)).abs() < 1e-12);
        // ∫(1+x)^{b+3} over [−1,1]: the rule is exact for (1+x)^3
        let m3: f64 = x.iter().zip(&w).map(|(x, w)| w * (1.0 + x).powi(3)).sum();
        assert!((m3 - 2f64.powf(b + 4.0) / (b + 4.0)).abs() < 1e-11);
        let (x, w) = gauss_jacobi(8, -0.5, 0.0).unwrap();
        let m1: f64 = x.iter().zip(&w).map(|(x, w)| w * (1.0 - x)).sum();
        // ∫(1−x)^{1/2} = 2^{3/2}/(3/2)
        assert!((m1 - 2f64.powf(1.5) / 1.5).abs() < 1e-13);
    }
}
