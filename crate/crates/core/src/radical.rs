//! Jacobson radical of a matrix algebra over a prime field.
//!
//! Uses the trace-form filtration of Cohen, Ivanyos and Wales: starting from the
//! whole algebra, `I_i` keeps the elements `a` of `I_{i-1}` with `g_i(ab) = 0` for all
//! `b`, where `g_i(x) = Tr(x~^(p^i)) / p^i mod p` for an integral lift `x~`. The last
//! step (`p^i <= n`) is the radical.

use crate::matrix::Matrix;

/// Radical of the algebra spanned by `basis` (square matrices, closed under products).
/// The result holds coefficient vectors with respect to `basis` as columns.
pub fn radical_of_span(p: u32, basis: &[Matrix]) -> Matrix {
    let d = basis.len();
    if d == 0 {
        return Matrix::zeros(p, 0, 0);
    }
    let n = basis[0].rows();
    // trace form first: it is bilinear, so one Gram matrix suffices
    let gram = Matrix::from_fn(p, d, d, |j, k| trace_of_product(&basis[k], &basis[j], p));
    let mut ideal = gram.kernel();
    let mut pi = p as u64;
    let mut i = 1u32;
    while pi <= n as u64 && ideal.cols() > 0 {
        let q = pi * p as u64;
        let elems: Vec<Matrix> = (0..ideal.cols()).map(|c| element(p, basis, &ideal.column(c))).collect();
        let g = Matrix::from_fn(p, d, elems.len(), |j, k| {
            let x = elems[k].mul(&basis[j]);
            let t = lifted_power_trace(&x, pi, q);
            debug_assert_eq!(t % pi, 0, "trace not divisible by p^{i}");
            ((t / pi) % p as u64) as u32
        });
        ideal = ideal.mul(&g.kernel());
        pi = q;
        i += 1;
    }
    ideal
}

pub(crate) fn element(p: u32, basis: &[Matrix], coeffs: &[u32]) -> Matrix {
    let n = basis[0].rows();
    let mut m = Matrix::zeros(p, n, n);
    for (c, b) in coeffs.iter().zip(basis) {
        m.add_scaled(*c, b);
    }
    m
}

fn trace_of_product(a: &Matrix, b: &Matrix, p: u32) -> u32 {
    let n = a.rows();
    let mut s = 0u64;
    for r in 0..n {
        for k in 0..n {
            s += a.get(r, k) as u64 * b.get(k, r) as u64;
        }
        s %= p as u64;
    }
    s as u32
}

/// `Tr(x~^e) mod q` with `x~` the entrywise lift of `x` to `[0, p)`.
fn lifted_power_trace(x: &Matrix, e: u64, q: u64) -> u64 {
    let n = x.rows();
    let lift: Vec<u64> = x.data().iter().map(|&v| v as u64).collect();
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for r in 0..n {
            for k in 0..n {
                let av = a[r * n + k];
                if av == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] = (out[r * n + c] + av * b[k * n + c]) % q;
                }
            }
        }
        out
    };
    let mut result: Vec<u64> = (0..n * n).map(|k| u64::from(k / n == k % n)).collect();
    let mut base = lift;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    (0..n).map(|r| result[r * n + r]).sum::<u64>() % q
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over F_2: `a` is in the radical iff `ba` is nilpotent for every `b`.
    fn brute_radical_dim(basis: &[Matrix]) -> usize {
        let d = basis.len();
        let n = basis[0].rows();
        let mut members = Vec::new();
        for mask in 0..(1u32 << d) {
            let coeffs: Vec<u32> = (0..d).map(|k| (mask >> k) & 1).collect();
            let a = element(2, basis, &coeffs);
            let all = (0..(1u32 << d)).all(|bm| {
                let bc: Vec<u32> = (0..d).map(|k| (bm >> k) & 1).collect();
                element(2, basis, &bc).mul(&a).pow(n as u64).is_zero()
            });
            if all {
                members.push(mask);
            }
        }
        members.len().trailing_zeros() as usize
    }

    fn upper_triangular_2x2(p: u32) -> Vec<Matrix> {
        vec![
            Matrix::from_rows(p, &[vec![1, 0], vec![0, 0]]),
            Matrix::from_rows(p, &[vec![0, 1], vec![0, 0]]),
            Matrix::from_rows(p, &[vec![0, 0], vec![0, 1]]),
        ]
    }

    #[test]
    fn upper_triangular_radical() {
        let b = upper_triangular_2x2(2);
        let j = radical_of_span(2, &b);
        assert_eq!(j.cols(), 1);
        assert_eq!(j.cols(), brute_radical_dim(&b));
    }

    #[test]
    fn full_matrix_algebra_is_semisimple() {
        let mut basis = Vec::new();
        for r in 0..2 {
            for c in 0..2 {
                let mut m = Matrix::zeros(2, 2, 2);
                m.set(r, c, 1);
                basis.push(m);
            }
        }
        assert_eq!(radical_of_span(2, &basis).cols(), 0);
        assert_eq!(brute_radical_dim(&basis), 0);
    }

    #[test]
    fn group_algebra_of_c2_in_char_2() {
        // F_2[C_2] = F_2[x]/(x^2 - 1) is local with radical spanned by 1 + g
        let basis = vec![Matrix::identity(2, 2), Matrix::from_rows(2, &[vec![0, 1], vec![1, 0]])];
        let j = radical_of_span(2, &basis);
        assert_eq!(j.cols(), 1);
        assert_eq!(j.column(0), vec![1, 1]);
    }

    #[test]
    fn scalar_4x4_over_f2_keeps_unit() {
        // trace of the identity vanishes mod 2; the higher steps must rescue it
        let basis = vec![Matrix::identity(2, 4)];
        assert_eq!(radical_of_span(2, &basis).cols(), 0);
    }
}
