//! Dense bivariate polynomials over a [`Field`] `K`, stored as a polynomial
//! in `y` whose coefficients are polynomials in `x` (`p[j][i]` is the
//! coefficient of `x^i y^j`).

use super::field::{Ext, Field};
use super::fpoly;
use super::rat::{rat, Rat};

pub type Bi<E> = Vec<Vec<E>>;

pub fn trim<K: Field>(k: &mut K, p: &mut Bi<K::Elem>) {
    for c in p.iter_mut() {
        fpoly::trim(k, c);
    }
    while matches!(p.last(), Some(c) if c.is_empty()) {
        p.pop();
    }
}

pub fn trimmed<K: Field>(k: &mut K, p: &Bi<K::Elem>) -> Bi<K::Elem> {
    let mut v = p.clone();
    trim(k, &mut v);
    v
}

pub fn is_zero<K: Field>(k: &mut K, p: &Bi<K::Elem>) -> bool {
    trimmed(k, p).is_empty()
}

/// Degree in `y` of a trimmed polynomial (`None` for zero).
pub fn deg_y<E>(p: &Bi<E>) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add<K: Field>(k: &K, a: &Bi<K::Elem>, b: &Bi<K::Elem>) -> Bi<K::Elem> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|j| match (a.get(j), b.get(j)) {
            (Some(x), Some(y)) => fpoly::add(k, x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

pub fn sub<K: Field>(k: &K, a: &Bi<K::Elem>, b: &Bi<K::Elem>) -> Bi<K::Elem> {
    add(k, a, &neg(k, b))
}

pub fn neg<K: Field>(k: &K, a: &Bi<K::Elem>) -> Bi<K::Elem> {
    a.iter().map(|c| fpoly::neg(k, c)).collect()
}

pub fn mul<K: Field>(k: &K, a: &Bi<K::Elem>, b: &Bi<K::Elem>) -> Bi<K::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: Bi<K::Elem> = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_empty() {
                continue;
            }
            out[i + j] = fpoly::add(k, &out[i + j], &fpoly::mul(k, x, y));
        }
    }
    out
}

/// Multiply every coefficient by the univariate polynomial `c(x)`.
pub fn scale_x<K: Field>(k: &K, a: &Bi<K::Elem>, c: &[K::Elem]) -> Bi<K::Elem> {
    a.iter().map(|p| fpoly::mul(k, p, c)).collect()
}

pub fn deriv_y<K: Field>(k: &K, a: &Bi<K::Elem>) -> Bi<K::Elem> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| fpoly::scale(k, c, &k.from_rat(&rat(j as i64))))
        .collect()
}

pub fn deriv_x<K: Field>(k: &K, a: &Bi<K::Elem>) -> Bi<K::Elem> {
    a.iter().map(|c| fpoly::derivative(k, c)).collect()
}

/// Swap the roles of `x` and `y`.
pub fn transpose<K: Field>(k: &K, a: &Bi<K::Elem>) -> Bi<K::Elem> {
    let nx = a.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut out: Bi<K::Elem> = vec![vec![k.zero(); a.len()]; nx];
    for (j, c) in a.iter().enumerate() {
        for (i, e) in c.iter().enumerate() {
            out[i][j] = e.clone();
        }
    }
    out
}

/// Pseudo-remainder `lc(b)^(da - db + 1) a mod b` in `K[x][y]`.
pub fn prem<K: Field>(k: &mut K, a: &Bi<K::Elem>, b: &Bi<K::Elem>) -> Bi<K::Elem> {
    let b = trimmed(k, b);
    let mut r = trimmed(k, a);
    assert!(!b.is_empty(), "pseudo-division by zero");
    let db = b.len() - 1;
    if r.len() < b.len() {
        return r;
    }
    let lb = b[db].clone();
    let mut e = r.len() - b.len() + 1;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut shifted: Bi<K::Elem> = vec![Vec::new(); dr - db];
        shifted.extend(b.iter().map(|c| fpoly::mul(k, c, &lr)));
        r = sub(k, &scale_x(k, &r, &lb), &shifted);
        r.truncate(dr);
        trim(k, &mut r);
        e -= 1;
    }
    let lbe = fpoly::pow(k, &lb, e as u32);
    let mut out = scale_x(k, &r, &lbe);
    trim(k, &mut out);
    out
}

fn div_by_x<K: Field>(k: &mut K, a: &Bi<K::Elem>, c: &[K::Elem]) -> Bi<K::Elem> {
    a.iter().map(|p| fpoly::exact_div(k, p, c)).collect()
}

/// Resultant with respect to `y`, a polynomial in `x`. Both inputs must be
/// nonzero.
pub fn resultant_y<K: Field>(k: &mut K, a: &Bi<K::Elem>, b: &Bi<K::Elem>) -> Vec<K::Elem> {
    let mut a = trimmed(k, a);
    let mut b = trimmed(k, b);
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut s = rat(1);
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let sign = |k: &K, p: Vec<K::Elem>, s: &Rat| fpoly::scale(k, &p, &k.from_rat(s));
    if b.len() == 1 {
        let r = fpoly::pow(k, &b[0], (a.len() - 1) as u32);
        return sign(k, r, &s);
    }
    let mut g = vec![k.one()];
    let mut h = vec![k.one()];
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = prem(k, &a, &b);
        if r.is_empty() {
            return Vec::new();
        }
        let denom = fpoly::mul(k, &g, &fpoly::pow(k, &h, delta as u32));
        a = b;
        b = div_by_x(k, &r, &denom);
        trim(k, &mut b);
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = fpoly::pow(k, &g, delta as u32);
            let den = fpoly::pow(k, &h, (delta - 1) as u32);
            fpoly::exact_div(k, &num, &den)
        };
        if b.len() == 1 {
            let da = (a.len() - 1) as u32;
            let num = fpoly::pow(k, &b[0], da);
            let den = fpoly::pow(k, &h, da - 1);
            let r = fpoly::exact_div(k, &num, &den);
            let r = fpoly::trimmed(k, &r);
            return sign(k, r, &s);
        }
    }
}

/// Monic gcd of the `x`-coefficients.
pub fn content<K: Field>(k: &mut K, a: &Bi<K::Elem>) -> Vec<K::Elem> {
    let mut g: Vec<K::Elem> = Vec::new();
    for c in a {
        g = fpoly::gcd(k, &g, c);
        if g.len() == 1 {
            break;
        }
    }
    g
}

pub fn primitive_part<K: Field>(k: &mut K, a: &Bi<K::Elem>) -> Bi<K::Elem> {
    let a = trimmed(k, a);
    if a.is_empty() {
        return a;
    }
    let c = content(k, &a);
    div_by_x(k, &a, &c)
}

/// Greatest common divisor up to a unit of `K`.
pub fn gcd<K: Field>(k: &mut K, a: &Bi<K::Elem>, b: &Bi<K::Elem>) -> Bi<K::Elem> {
    let a = trimmed(k, a);
    let b = trimmed(k, b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let ca = content(k, &a);
    let cb = content(k, &b);
    let c = fpoly::gcd(k, &ca, &cb);
    let mut p = primitive_part(k, &a);
    let mut q = primitive_part(k, &b);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.len() == 1 {
            break vec![vec![k.one()]];
        }
        let r = prem(k, &p, &q);
        if r.is_empty() {
            break q;
        }
        p = q;
        q = primitive_part(k, &r);
    };
    scale_x(k, &g, &c)
}

/// Exact quotient `a / b` in `K[x][y]`.
pub fn exact_div<K: Field>(k: &mut K, a: &Bi<K::Elem>, b: &Bi<K::Elem>) -> Bi<K::Elem> {
    let b = trimmed(k, b);
    let mut r = trimmed(k, a);
    assert!(!b.is_empty());
    let db = b.len() - 1;
    if r.len() < b.len() {
        debug_assert!(r.is_empty(), "inexact bivariate division");
        return Vec::new();
    }
    let mut q: Bi<K::Elem> = vec![Vec::new(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let c = fpoly::exact_div(k, &r[dr], &b[db]);
        let mut term: Bi<K::Elem> = vec![Vec::new(); dr - db];
        term.extend(b.iter().map(|bc| fpoly::mul(k, bc, &c)));
        r = sub(k, &r, &term);
        r.truncate(dr);
        trim(k, &mut r);
        q[dr - db] = c;
    }
    debug_assert!(r.is_empty(), "inexact bivariate division");
    q
}

/// The squarefree part: product of the distinct irreducible factors.
pub fn squarefree<K: Field>(k: &mut K, a: &Bi<K::Elem>) -> Bi<K::Elem> {
    let a = trimmed(k, a);
    if a.is_empty() {
        return a;
    }
    let c = content(k, &a);
    let cs = fpoly::squarefree(k, &c);
    let p = div_by_x(k, &a, &c);
    if p.len() <= 1 {
        return vec![cs];
    }
    let dp = deriv_y(k, &p);
    let g = gcd(k, &p, &dp);
    let q = exact_div(k, &p, &g);
    let pq = primitive_part(k, &q);
    scale_x(k, &pq, &cs)
}

/// Substitute `x = v` for `v` in `K`: a polynomial in `y`.
pub fn eval_x<K: Field>(k: &K, a: &Bi<K::Elem>, v: &K::Elem) -> Vec<K::Elem> {
    a.iter().map(|c| fpoly::eval(k, c, v)).collect()
}

/// Substitute `y = v` for `v` in `K`: a polynomial in `x`.
pub fn eval_y<K: Field>(k: &K, a: &Bi<K::Elem>, v: &K::Elem) -> Vec<K::Elem> {
    let mut acc: Vec<K::Elem> = Vec::new();
    for c in a.iter().rev() {
        acc = fpoly::add(k, &fpoly::scale(k, &acc, v), c);
    }
    acc
}

/// Substitute `x` by the generator of `e`: a polynomial in `y` over `K(c)`.
pub fn at_generator<K: Field>(e: &Ext<K>, a: &Bi<K::Elem>) -> Vec<Vec<K::Elem>> {
    a.iter().map(|c| e.reduce(c)).collect()
}

/// Lift a bivariate polynomial over `K` to one over `K(c)`.
pub fn lift<K: Field>(a: &Bi<K::Elem>) -> Bi<Vec<K::Elem>> {
    a.iter()
        .map(|c| c.iter().map(|e| vec![e.clone()]).collect())
        .collect()
}

pub fn from_rat<K: Field>(k: &K, a: &Bi<Rat>) -> Bi<K::Elem> {
    a.iter().map(|c| fpoly::map_rat(k, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::QQ;

    fn bi(rows: &[&[i64]]) -> Bi<Rat> {
        rows.iter().map(|r| r.iter().map(|&c| rat(c)).collect()).collect()
    }

    #[test]
    fn hand_resultants() {
        let mut k = QQ;
        // in y: (y - 1) and (y + 1) -> 2
        let a = bi(&[&[-1], &[1]]);
        let b = bi(&[&[1], &[1]]);
        assert_eq!(resultant_y(&mut k, &a, &b), vec![rat(2)]);
        // y^2 - x and y -> -x
        let a = bi(&[&[0, -1], &[], &[1]]);
        let b = bi(&[&[], &[1]]);
        assert_eq!(resultant_y(&mut k, &a, &b), vec![rat(0), rat(-1)]);
        // unit
        let one = bi(&[&[1]]);
        assert_eq!(resultant_y(&mut k, &a, &one), vec![rat(1)]);
    }

    #[test]
    fn resultant_against_sylvester() {
        // y^2 + x y + 1 and x y^2 - y + x; determinant computed by hand:
        // rows [1, x, 1, 0], [0, 1, x, 1], [x, -1, x, 0], [0, x, -1, x]
        let mut k = QQ;
        let a = bi(&[&[1], &[0, 1], &[1]]);
        let b = bi(&[&[0, 1], &[-1], &[0, 1]]);
        let r = resultant_y(&mut k, &a, &b);
        // evaluate at x = 2 and compare with the numeric determinant
        let v = fpoly::eval(&k, &r, &rat(2));
        let m = [[1.0, 2.0, 1.0, 0.0], [0.0, 1.0, 2.0, 1.0], [2.0, -1.0, 2.0, 0.0], [0.0, 2.0, -1.0, 2.0]];
        let det = det4(m);
        assert!((crate::exact::rat::to_f64(&v) - det).abs() < 1e-9);
    }

    fn det4(m: [[f64; 4]; 4]) -> f64 {
        let mut a = m;
        let mut det = 1.0;
        for c in 0..4 {
            let p = (c..4).max_by(|&i, &j| a[i][c].abs().partial_cmp(&a[j][c].abs()).unwrap()).unwrap();
            if a[p][c] == 0.0 {
                return 0.0;
            }
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c];
            for r in c + 1..4 {
                let f = a[r][c] / a[c][c];
                for cc in c..4 {
                    a[r][cc] -= f * a[c][cc];
                }
            }
        }
        det
    }

    #[test]
    fn gcd_and_squarefree() {
        let mut k = QQ;
        // (y - x)^2 (y + 1) x
        let l = bi(&[&[0, -1], &[1]]);
        let m = bi(&[&[1], &[1]]);
        let x = bi(&[&[0, 1]]);
        let p = mul(&k, &mul(&k, &mul(&k, &l, &l), &m), &x);
        let s = squarefree(&mut k, &p);
        let expect = mul(&k, &mul(&k, &l, &m), &x);
        // equal up to a constant
        let ratio = exact_div(&mut k, &s, &expect);
        assert_eq!(ratio.len(), 1);
        assert_eq!(ratio[0].len(), 1);
    }
}
