//! Extreme rays of {x >= 0 : A x = 0} by exhaustive support enumeration
//! with exact rational elimination. Exponential and proud of it.

use num::{BigInt, BigRational, One, Signed, Zero};

type Q = BigRational;

fn rank(a: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let piv = (r..rows).find(|&i| !m[i][c].is_zero());
        let Some(p) = piv else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for cc in 0..cols {
                    let sub = &m[r][cc] * &f;
                    m[i][cc] = &m[i][cc] - &sub;
                }
            }
        }
        r += 1;
    }
    r
}

/// Kernel of the matrix restricted to the support columns; returns a basis.
fn kernel(a: &[Vec<Q>], support: &[usize]) -> Vec<Vec<Q>> {
    let rows = a.len();
    let cols = support.len();
    let mut m: Vec<Vec<Q>> = (0..rows)
        .map(|i| support.iter().map(|&c| a[i][c].clone()).collect())
        .collect();
    // eliminate
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let piv = (r..rows).find(|&i| !m[i][c].is_zero());
        let Some(p) = piv else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for cc in 0..cols {
                    let sub = &m[r][cc] * &f;
                    m[i][cc] = &m[i][cc] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![Q::zero(); cols];
        v[fc] = Q::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[ri][fc];
        }
        basis.push(v);
    }
    basis
}

fn normalize(v: &[Q], n: usize, support: &[usize]) -> Vec<BigInt> {
    // scale to integers with gcd 1
    let mut denom = BigInt::one();
    for x in v {
        denom = num::integer::lcm(denom, x.denom().clone());
    }
    let mut out = vec![BigInt::zero(); n];
    for (i, &c) in support.iter().enumerate() {
        out[c] = (&v[i] * BigRational::from_integer(denom.clone())).to_integer();
    }
    let mut g = BigInt::zero();
    for x in &out {
        g = num::integer::gcd(g, x.abs());
    }
    if !g.is_zero() {
        for x in out.iter_mut() {
            *x = &*x / &g;
        }
    }
    out
}

/// All extreme rays of {x >= 0 : A x = 0}, as primitive integer vectors,
/// sorted. `a` is given row-major with `n` columns.
pub fn extreme_rays_oracle(a: &[Vec<Q>], n: usize) -> Vec<Vec<BigInt>> {
    let r = rank(a);
    let max_support = r + 1;
    let mut found: Vec<(Vec<usize>, Vec<BigInt>)> = Vec::new();
    // enumerate supports of size 1..=max_support
    let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    while let Some(s) = stack.pop() {
        if s.len() <= max_support {
            // check this support
            let ker = kernel(a, &s);
            if ker.len() == 1 {
                let v = &ker[0];
                let all_pos = v.iter().all(|x| x.is_positive());
                let all_neg = v.iter().all(|x| x.is_negative());
                if all_pos || all_neg {
                    let vv: Vec<Q> = if all_neg {
                        v.iter().map(|x| -x).collect()
                    } else {
                        v.clone()
                    };
                    // support-minimality: no found support strictly inside
                    let minimal = !found
                        .iter()
                        .any(|(fs, _)| fs.len() < s.len() && fs.iter().all(|x| s.contains(x)));
                    if minimal {
                        let nv = normalize(&vv, n, &s);
                        if !found.iter().any(|(_, f)| *f == nv) {
                            found.push((s.clone(), nv));
                        }
                    }
                }
            }
            if s.len() < max_support {
                let last = *s.last().unwrap();
                for nx in (last + 1)..n {
                    let mut t = s.clone();
                    t.push(nx);
                    stack.push(t);
                }
            }
        }
    }
    let mut rays: Vec<Vec<BigInt>> = found.into_iter().map(|(_, v)| v).collect();
    rays.sort();
    rays.dedup();
    rays
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn orthant_rays() {
        // no constraints: rays are the axes
        let rays = extreme_rays_oracle(&[], 3);
        assert_eq!(rays.len(), 3);
    }

    #[test]
    fn balanced_pair() {
        // x0 constrained against x1: 2*x0 - 2*x1 = 0, x2 free
        let a = vec![vec![q(2), q(-2), q(0)]];
        let rays = extreme_rays_oracle(&a, 3);
        // rays: (1,1,0) and (0,0,1)
        assert_eq!(rays.len(), 2);
    }
}
