//! Small exact linear algebra: polynomial determinants and rational
//! elimination.

use rustc_hash::FxHashMap;

use crate::poly::Poly;
use crate::rational::Rational;

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// rows, memoizing minors by their column set.
pub fn det_poly(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    if n == 0 {
        return Poly::one();
    }
    let mut memo: FxHashMap<u32, Poly> = FxHashMap::default();
    minor(m, 0, (1u32 << n) - 1, &mut memo)
}

fn minor(m: &[Vec<Poly>], row: usize, cols: u32, memo: &mut FxHashMap<u32, Poly>) -> Poly {
    if row == m.len() {
        return Poly::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut parts = Vec::new();
    let mut sign_neg = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << c), memo);
            let t = entry.mul(&sub);
            parts.push(if sign_neg { t.neg() } else { t });
        }
        sign_neg = !sign_neg;
    }
    let out = Poly::sum(&parts);
    memo.insert(cols, out.clone());
    out
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &factor;
                    m[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space `{v : M v = 0}`. Basis vectors are scaled
/// to have integer entries with no common factor.
pub fn null_space(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::ZERO; cols];
            v[fc] = Rational::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[r][fc];
            }
            primitive(&v)
        })
        .collect()
}

/// Scales a rational vector to coprime integers, with first nonzero entry
/// positive.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let mut lcm = num_bigint::BigInt::one();
    for x in v {
        lcm = lcm.lcm(&x.denom());
    }
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = num_bigint::BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let q = x / &g;
            Rational::from(if sign { -q } else { q })
        })
        .collect()
}

/// Solves a square system exactly; `None` if singular.
pub fn solve(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.contains(&n) {
        return None;
    }
    Some(aug.iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn symbolic_determinant() {
        let m: Vec<Vec<Poly>> = [["a1", "a2"], ["b1", "b2"]]
            .iter()
            .map(|row| row.iter().map(|s| parse(s).unwrap()).collect())
            .collect();
        assert_eq!(det_poly(&m), parse("a1 b2 - a2 b1").unwrap());
    }

    #[test]
    fn null_space_and_solve() {
        let m = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)]];
        let ns = null_space(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = &(&m[0][0] * &v[0] + &m[0][1] * &v[1]) + &(&m[0][2] * &v[2]);
            assert!(dot.is_zero());
        }
        let a = vec![vec![r(2), r(1)], vec![r(1), r(3)]];
        assert_eq!(solve(&a, &[r(3), r(5)]), Some(vec![Rational::new(4, 5), Rational::new(7, 5)]));
        assert_eq!(solve(&[vec![r(1), r(1)], vec![r(2), r(2)]], &[r(1), r(2)]), None);
    }
}
