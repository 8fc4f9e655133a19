//! Brute-force oracles, deliberately sharing no code with the library.
#![allow(dead_code, clippy::needless_range_loop)]

use num_rational::Ratio;

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier, as
/// coefficients `c[0..=n]` of `x^0..x^n`.
pub fn char_poly(a: &[Vec<i64>]) -> Vec<i128> {
    let n = a.len();
    let a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum();
            }
            next[i][i] += c[n - k + 1];
        }
        m = next;
        let tr: i128 = (0..n).map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>()).sum();
        assert_eq!(tr % k as i128, 0);
        c[n - k] = -tr / k as i128;
    }
    c
}

fn sign_changes(seq: impl Iterator<Item = i128>) -> usize {
    let nz: Vec<i128> = seq.filter(|&x| x != 0).collect();
    nz.windows(2).filter(|w| (w[0] > 0) != (w[1] > 0)).count()
}

/// `(b+, b-, b0)` of a symmetric matrix via Descartes' rule on its
/// characteristic polynomial, exact because all roots are real.
pub fn inertia_by_roots(a: &[Vec<i64>]) -> (usize, usize, usize) {
    let c = char_poly(a);
    let zero = c.iter().take_while(|&&x| x == 0).count();
    let pos = sign_changes(c.iter().copied());
    let neg = sign_changes(c.iter().enumerate().map(|(i, &x)| if i % 2 == 1 { -x } else { x }));
    (pos, neg, zero)
}

/// Determinant by Laplace expansion along the first row.
pub fn det_laplace(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return a[0][0] as i128;
    }
    (0..n)
        .filter(|&j| a[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i64>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * a[0][j] as i128 * det_laplace(&minor)
        })
        .sum()
}

/// Inertia from the leading principal minors (Jacobi), when none vanish.
pub fn inertia_by_minors(a: &[Vec<i64>]) -> Option<(usize, usize, usize)> {
    let n = a.len();
    let mut d = vec![1i128];
    for k in 1..=n {
        let lead: Vec<Vec<i64>> = a[..k].iter().map(|r| r[..k].to_vec()).collect();
        let m = det_laplace(&lead);
        if m == 0 {
            return None;
        }
        d.push(m);
    }
    let neg = d.windows(2).filter(|w| (w[0] > 0) != (w[1] > 0)).count();
    Some((n - neg, neg, 0))
}

/// `|a_1···a_n · (b + Σ b_i/a_i)|` straight from the Seifert data.
pub fn h1_from_invariants(b: i64, pairs: &[(i64, i64)]) -> u128 {
    let deg = pairs
        .iter()
        .fold(Ratio::<i128>::from_integer(b as i128), |acc, &(a, bi)| acc + Ratio::new(bi as i128, a as i128));
    let prod: i128 = pairs.iter().map(|&(a, _)| a as i128).product();
    (deg * prod).to_integer().unsigned_abs()
}

/// Every `w ∈ {0,1}^n` with `Qw ≡ diag(Q) (mod 2)`, as bitstrings in
/// lexicographic order.
pub fn characteristic_exhaustive(q: &[Vec<i64>]) -> Vec<String> {
    let n = q.len();
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let w: Vec<i64> = (0..n).map(|i| (mask >> (n - 1 - i) & 1) as i64).collect();
        let ok = (0..n).all(|i| {
            let qw: i64 = (0..n).map(|j| q[i][j] * w[j]).sum();
            (qw - q[i][i]).rem_euclid(2) == 0
        });
        if ok {
            out.push(w.iter().map(|&x| if x == 1 { '1' } else { '0' }).collect());
        }
    }
    out.sort();
    out
}

/// Nullity of `Q mod 2` by dense elimination.
pub fn gf2_nullity(q: &[Vec<i64>]) -> usize {
    let n = q.len();
    let mut m: Vec<Vec<u8>> = q.iter().map(|r| r.iter().map(|&x| x.rem_euclid(2) as u8).collect()).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| m[r][col] == 1) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..n {
            if r != rank && m[r][col] == 1 {
                for c in 0..n {
                    m[r][c] ^= m[rank][c];
                }
            }
        }
        rank += 1;
    }
    n - rank
}

/// The E8 plumbing: a chain of seven −2 vertices with an eighth attached to
/// the third, as a dense matrix.
pub fn e8_matrix() -> Vec<Vec<i64>> {
    let mut q = vec![vec![0i64; 8]; 8];
    for i in 0..8 {
        q[i][i] = -2;
    }
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)];
    for (u, v) in edges {
        q[u][v] = 1;
        q[v][u] = 1;
    }
    q
}
