//! Cofactor-expansion determinants. No pivoting, so results are
//! reproducible bit for bit.

use num_complex::Complex64;

pub fn det3(m: &[[Complex64; 3]; 3]) -> Complex64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Laplace expansion along the first row.
pub fn det4(m: &[[Complex64; 4]; 4]) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for col in 0..4 {
        let minor: [[Complex64; 3]; 3] = std::array::from_fn(|r| {
            std::array::from_fn(|c| m[r + 1][if c < col { c } else { c + 1 }])
        });
        let cofactor = det3(&minor);
        if col % 2 == 0 {
            total += m[0][col] * cofactor;
        } else {
            total -= m[0][col] * cofactor;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// Leibniz formula over all 24 permutations.
    fn leibniz4(m: &[[Complex64; 4]; 4]) -> Complex64 {
        let mut total = c(0.0);
        for a in 0..4 {
            for b in 0..4 {
                for d in 0..4 {
                    for e in 0..4 {
                        let p = [a, b, d, e];
                        let mut sorted = p;
                        sorted.sort_unstable();
                        if sorted != [0, 1, 2, 3] {
                            continue;
                        }
                        let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                        let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
                        total += m[0][a] * m[1][b] * m[2][d] * m[3][e] * sign;
                    }
                }
            }
        }
        total
    }

    #[test]
    fn matches_leibniz() {
        let m: [[Complex64; 4]; 4] =
            std::array::from_fn(|r| std::array::from_fn(|k| Complex64::new((r * 4 + k) as f64 * 0.3 - 1.0, (k as f64 - r as f64).sin())));
        assert!((det4(&m) - leibniz4(&m)).norm() < 1e-12);
    }

    #[test]
    fn simple_values() {
        let id: [[Complex64; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|k| c(if r == k { 1.0 } else { 0.0 })));
        assert_eq!(det4(&id), c(1.0));
        let mut swapped = id;
        swapped.swap(0, 1);
        assert_eq!(det4(&swapped), c(-1.0));
        let m3 = [[c(2.0), c(0.0), c(1.0)], [c(1.0), c(3.0), c(0.0)], [c(0.0), c(1.0), c(4.0)]];
        assert_eq!(det3(&m3), c(25.0));
    }
}
