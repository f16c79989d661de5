//! Alexander polynomial of a closed braid from the reduced Burau
//! representation: `Δ(t) ≐ det(ρ̄(w) - I) · (1 - t) / (1 - t^n)`.

use crate::braid::{BraidWord, Sign};

use super::poly::{LaurentPoly, TruncatedPoly};

type Matrix = Vec<Vec<LaurentPoly>>;

fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| LaurentPoly::constant((i == j) as i64))
                .collect()
        })
        .collect()
}

/// Multiplies `m` on the right by the reduced Burau matrix of `σ_i^{±1}`.
/// Only columns `i-2..=i` (0-based) change.
fn apply_generator(m: &mut Matrix, n: usize, index: usize, sign: Sign) {
    let k = n - 1;
    let t = LaurentPoly::monomial(1, 1);
    let tinv = LaurentPoly::monomial(1, -1);
    let one = LaurentPoly::constant(1);
    let zero = LaurentPoly::zero();
    // Block of the generator on rows/cols (index-2, index-1, index) in 0-based
    // terms, clipped to the k×k matrix.
    //   σ_i      : [[1, t, 0], [0, -t, 0], [0, 1, 1]]
    //   σ_i^{-1} : [[1, 1, 0], [0, -t^{-1}, 0], [0, t^{-1}, 1]]
    let block: [[LaurentPoly; 3]; 3] = match sign {
        Sign::Pos => [
            [one.clone(), t.clone(), zero.clone()],
            [zero.clone(), -&t, zero.clone()],
            [zero.clone(), one.clone(), one.clone()],
        ],
        Sign::Neg => [
            [one.clone(), one.clone(), zero.clone()],
            [zero.clone(), -&tinv, zero.clone()],
            [zero.clone(), tinv.clone(), one.clone()],
        ],
    };
    let centre = index as isize - 1;
    let idx: Vec<(usize, usize)> = (0..3)
        .filter_map(|b| {
            let g = centre + b as isize - 1;
            (g >= 0 && (g as usize) < k).then_some((b, g as usize))
        })
        .collect();
    for row in m.iter_mut() {
        let old: Vec<LaurentPoly> = idx.iter().map(|&(_, g)| row[g].clone()).collect();
        for &(bc, gc) in &idx {
            let mut acc = LaurentPoly::zero();
            for (pos, &(br, _)) in idx.iter().enumerate() {
                let coeff = &block[br][bc];
                if !coeff.is_zero() {
                    acc = &acc + &(&old[pos] * coeff);
                }
            }
            row[gc] = acc;
        }
    }
}

pub fn reduced_burau(w: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let n = w.strands();
    let mut m = identity(n.saturating_sub(1));
    for l in w.letters() {
        apply_generator(&mut m, n, l.index(), l.sign());
    }
    m
}

/// Fraction-free elimination; every division is exact in `Z[t, t^{-1}]`.
fn determinant(mut a: Matrix) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::constant(1);
    }
    let mut negate = false;
    let mut prev = LaurentPoly::constant(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// One-variable Alexander polynomial of the closure, up to units `±t^k`.
pub fn alexander_burau(w: &BraidWord) -> LaurentPoly {
    let n = w.strands();
    if n == 1 {
        return LaurentPoly::constant(1);
    }
    let mut m = reduced_burau(w);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = &row[i] - &LaurentPoly::constant(1);
    }
    let det = determinant(m);
    let one_minus_t = LaurentPoly::new(0, vec![1, -1]);
    let mut denom = vec![0i64; n + 1];
    denom[0] = 1;
    denom[n] = -1;
    let denom = LaurentPoly::new(0, denom);
    (&det * &one_minus_t)
        .div_exact(&denom)
        .expect("(1 - t^n) divides det(ρ̄ - I)(1 - t)")
        .normalized_up_to_units()
}

/// `∇(t^{1/2} - t^{-1/2})`, cleared of half-integer powers, for a complete
/// Conway polynomial. Uses `z^j = t^{-j/2} (t - 1)^j`.
pub fn conway_to_alexander(conway: &TruncatedPoly) -> LaurentPoly {
    let coeffs = conway.coefficients();
    let top = match coeffs.iter().rposition(|&a| a != 0) {
        Some(top) => top,
        None => return LaurentPoly::zero(),
    };
    let t_minus_one = LaurentPoly::new(0, vec![-1, 1]);
    let mut total = LaurentPoly::zero();
    for (j, &a) in coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        debug_assert_eq!((top - j) % 2, 0, "Conway degrees share one parity");
        let term = &LaurentPoly::monomial(a, ((top - j) / 2) as i64) * &t_minus_one.pow(j as u32);
        total = &total + &term;
    }
    total.normalized_up_to_units()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn burau_relations() {
        let a = reduced_burau(&w(4, &[1, 2, 1]));
        let b = reduced_burau(&w(4, &[2, 1, 2]));
        assert_eq!(a, b);
        let c = reduced_burau(&w(4, &[1, 3]));
        let d = reduced_burau(&w(4, &[3, 1]));
        assert_eq!(c, d);
        let e = reduced_burau(&w(4, &[2, -2, 3, 1, -1, -3]));
        assert_eq!(e, identity(3));
    }

    #[test]
    fn knots() {
        let unknot = alexander_burau(&w(2, &[1]));
        assert_eq!(unknot, LaurentPoly::constant(1));
        let trefoil = alexander_burau(&w(2, &[1, 1, 1]));
        assert!(trefoil.equal_up_to_units(&LaurentPoly::new(-1, vec![1, -1, 1])));
        let figure_eight = alexander_burau(&w(3, &[1, -2, 1, -2]));
        assert!(figure_eight.equal_up_to_units(&LaurentPoly::new(-1, vec![-1, 3, -1])));
    }

    #[test]
    fn links_and_conversion() {
        // Hopf link: ∇ = z ↦ t - 1.
        let hopf = alexander_burau(&w(2, &[1, 1]));
        let z = TruncatedPoly::new(vec![0, 1], Some(2));
        assert!(hopf.equal_up_to_units(&conway_to_alexander(&z)));
        // split unlink
        assert!(alexander_burau(&w(2, &[])).is_zero());
        let trefoil = TruncatedPoly::new(vec![1, 0, 1], Some(1));
        assert!(conway_to_alexander(&trefoil).equal_up_to_units(&LaurentPoly::new(0, vec![1, -1, 1])));
    }
}
