//! Lowest Conway coefficient of a `p`-component link from its linking
//! numbers: `a_{p-1} = Σ_T Π_{(k,m)∈T} l_{k,m}` over spanning trees `T` of the
//! complete graph on the components.

use crate::diagram::LinkingMatrix;

/// Largest component count accepted by [`hoste_by_trees`].
pub const TREE_ENUMERATION_LIMIT: usize = 8;

/// Sums edge-weight products over all `p^{p-2}` spanning trees, decoded from
/// Prüfer sequences.
pub fn hoste_by_trees(m: &LinkingMatrix) -> i64 {
    let p = m.size();
    assert!(p >= 1);
    assert!(p <= TREE_ENUMERATION_LIMIT, "tree enumeration limited to {TREE_ENUMERATION_LIMIT} components");
    if p == 1 {
        return 1;
    }
    if p == 2 {
        return m.get(0, 1);
    }
    let len = p - 2;
    let mut seq = vec![0usize; len];
    let mut total = 0i64;
    let mut degree = vec![0usize; p];
    loop {
        degree.iter_mut().for_each(|d| *d = 1);
        for &v in &seq {
            degree[v] += 1;
        }
        let mut product = 1i64;
        for &v in &seq {
            let leaf = (0..p).find(|&u| degree[u] == 1).unwrap();
            product *= m.get(leaf, v);
            degree[leaf] -= 1;
            degree[v] -= 1;
        }
        let last: Vec<usize> = (0..p).filter(|&u| degree[u] == 1).collect();
        product *= m.get(last[0], last[1]);
        total += product;

        // next sequence in base p
        let mut i = 0;
        loop {
            if i == len {
                return total;
            }
            seq[i] += 1;
            if seq[i] < p {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Matrix-tree theorem: the determinant of the weighted Laplacian with the
/// last row and column removed.
pub fn hoste_by_laplacian(m: &LinkingMatrix) -> i64 {
    let p = m.size();
    assert!(p >= 1);
    if p == 1 {
        return 1;
    }
    let k = p - 1;
    let mut a = vec![vec![0i128; k]; k];
    for i in 0..k {
        for j in 0..k {
            a[i][j] = if i == j {
                (0..p).filter(|&u| u != i).map(|u| m.get(i, u) as i128).sum()
            } else {
                -(m.get(i, j) as i128)
            };
        }
    }
    let det = bareiss_determinant(a);
    i64::try_from(det).expect("spanning-tree sum fits in i64")
}

/// Fraction-free Gaussian elimination over the integers.
pub(crate) fn bareiss_determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
