//! Gauss-Legendre quadrature over intervals and centered squares.
//!
//! Used to verify normalization and marginalization of measured Wigner
//! functions; grids are built per call and never cached.

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
///
/// Nodes are the roots of the Legendre polynomial P_n, found by Newton
/// iteration from the Chebyshev-based initial guess; exact for polynomials
/// of degree <= 2n - 1.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "quadrature order must be >= 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        // Center the middle node exactly.
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_and_derivative(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

/// P_n(x) and P_n'(x) via the three-term recurrence.
fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Integral of `f` over [-half_width, half_width] with an n-point rule.
pub fn integrate_interval<F: Fn(f64) -> f64>(f: F, half_width: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    nodes
        .iter()
        .zip(&weights)
        .map(|(&x, &w)| w * f(half_width * x))
        .sum::<f64>()
        * half_width
}

/// Integral of `f(x, y)` over the square [-half_width, half_width]^2 with a
/// tensor-product n x n rule.
pub fn integrate_square<F: Fn(f64, f64) -> f64>(f: F, half_width: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let mut total = 0.0;
    for (&x, &wx) in nodes.iter().zip(&weights) {
        let mut inner = 0.0;
        for (&y, &wy) in nodes.iter().zip(&weights) {
            inner += wy * f(half_width * x, half_width * y);
        }
        total += wx * inner;
    }
    total * half_width * half_width
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_order_rules_match_known_nodes() {
        let (nodes, weights) = gauss_legendre(2);
        let inv_sqrt3 = 1.0 / 3.0f64.sqrt();
        assert_relative_eq!(nodes[0], -inv_sqrt3, epsilon = 1e-14);
        assert_relative_eq!(nodes[1], inv_sqrt3, epsilon = 1e-14);
        assert_relative_eq!(weights[0], 1.0, epsilon = 1e-14);

        let (nodes, weights) = gauss_legendre(3);
        assert_relative_eq!(nodes[1], 0.0, epsilon = 1e-14);
        assert_relative_eq!(nodes[2], (0.6f64).sqrt(), epsilon = 1e-14);
        assert_relative_eq!(weights[1], 8.0 / 9.0, epsilon = 1e-14);
    }

    #[test]
    fn integrates_polynomials_exactly() {
        // x^9 - 3x^4 + 2 on [-2, 2] with a 5-point rule (degree 9 limit).
        let exact = -3.0 * 2.0 * 32.0 / 5.0 + 2.0 * 4.0;
        let got = integrate_interval(|x| x.powi(9) - 3.0 * x.powi(4) + 2.0, 2.0, 5);
        assert_relative_eq!(got, exact, epsilon = 1e-12);
    }

    #[test]
    fn gaussian_integral_on_plane() {
        // Full 2D Gaussian: integral of exp(-(x^2 + y^2)) = pi.
        let got = integrate_square(|x, y| (-(x * x + y * y)).exp(), 7.0, 80);
        assert_relative_eq!(got, std::f64::consts::PI, epsilon = 1e-12);
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1, 2, 7, 40, 80] {
            let (_, weights) = gauss_legendre(n);
            assert_relative_eq!(weights.iter().sum::<f64>(), 2.0, epsilon = 1e-12);
        }
    }
}
