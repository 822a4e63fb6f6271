use super::rat::{to_f64, Rat};
use super::upoly::write_term;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse bivariate polynomial: `(i, j) -> c` for the monomial `c x^i y^j`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BPoly {
    pub fn zero() -> Self {
        BPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut p = BPoly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    /// The linear polynomial `a x + b y + c`.
    pub fn linear(a: &Rat, b: &Rat, c: &Rat) -> Self {
        let mut p = BPoly::zero();
        p.add_term(1, 0, a.clone());
        p.add_term(0, 1, b.clone());
        p.add_term(0, 0, c.clone());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut p = BPoly::zero();
        for (&(i, j), v) in &self.terms {
            p.add_term(i, j, v * c);
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = BPoly::constant(Rat::one());
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn deriv_x(&self) -> Self {
        let mut p = BPoly::zero();
        for (&(i, j), v) in &self.terms {
            if i > 0 {
                p.add_term(i - 1, j, v * Rat::from_integer(i.into()));
            }
        }
        p
    }

    pub fn deriv_y(&self) -> Self {
        let mut p = BPoly::zero();
        for (&(i, j), v) in &self.terms {
            if j > 0 {
                p.add_term(i, j - 1, v * Rat::from_integer(j.into()));
            }
        }
        p
    }

    pub fn transpose(&self) -> Self {
        let mut p = BPoly::zero();
        for (&(i, j), v) in &self.terms {
            p.add_term(j, i, v.clone());
        }
        p
    }

    /// The homogeneous part of top total degree.
    pub fn top_form(&self) -> Self {
        let d = self.total_degree().unwrap_or(0);
        let mut p = BPoly::zero();
        for (&(i, j), v) in &self.terms {
            if i + j == d {
                p.add_term(i, j, v.clone());
            }
        }
        p
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), v) in &self.terms {
            acc += v * super::rat::pow(x, i) * super::rat::pow(y, j);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), v)| to_f64(v) * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    /// Substitute `x -> x + a`, `y -> y + b`.
    pub fn shift(&self, a: &Rat, b: &Rat) -> Self {
        let xs = &BPoly::x() + &BPoly::constant(a.clone());
        let ys = &BPoly::y() + &BPoly::constant(b.clone());
        self.compose(&xs, &ys)
    }

    /// Substitute `x -> px`, `y -> py`.
    pub fn compose(&self, px: &BPoly, py: &BPoly) -> Self {
        let mut out = BPoly::zero();
        for (&(i, j), v) in &self.terms {
            let t = &px.pow(i) * &py.pow(j);
            out = &out + &t.scale(v);
        }
        out
    }

    /// Dense form `p[j][i]` = coefficient of `x^i y^j`.
    pub fn to_dense_y(&self) -> Vec<Vec<Rat>> {
        let dy = match self.deg_y() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out: Vec<Vec<Rat>> = vec![Vec::new(); dy + 1];
        for (&(i, j), v) in &self.terms {
            let row = &mut out[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Rat::zero());
            }
            row[i as usize] = v.clone();
        }
        for row in out.iter_mut() {
            while matches!(row.last(), Some(c) if c.is_zero()) {
                row.pop();
            }
        }
        out
    }

    pub fn from_dense_y(p: &[Vec<Rat>]) -> Self {
        let mut out = BPoly::zero();
        for (j, row) in p.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    /// Coefficients of `y^j` as univariate polynomials in `x`.
    pub fn y_coeff(&self, j: u32) -> Vec<Rat> {
        let mut row = Vec::new();
        for (&(i, jj), v) in &self.terms {
            if jj == j {
                if row.len() <= i as usize {
                    row.resize(i as usize + 1, Rat::zero());
                }
                row[i as usize] = v.clone();
            }
        }
        row
    }
}

impl Add for &BPoly {
    type Output = BPoly;
    fn add(self, o: &BPoly) -> BPoly {
        let mut p = self.clone();
        for (&(i, j), v) in &o.terms {
            p.add_term(i, j, v.clone());
        }
        p
    }
}

impl Sub for &BPoly {
    type Output = BPoly;
    fn sub(self, o: &BPoly) -> BPoly {
        let mut p = self.clone();
        for (&(i, j), v) in &o.terms {
            p.add_term(i, j, -v.clone());
        }
        p
    }
}

impl Mul for &BPoly {
    type Output = BPoly;
    fn mul(self, o: &BPoly) -> BPoly {
        let mut p = BPoly::zero();
        for (&(i, j), v) in &self.terms {
            for (&(k, l), w) in &o.terms {
                p.add_term(i + k, j + l, v * w);
            }
        }
        p
    }
}

impl Neg for &BPoly {
    type Output = BPoly;
    fn neg(self) -> BPoly {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for BPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (n, k) in keys.iter().enumerate() {
            write_term(f, &self.terms[k], &[("x", k.0), ("y", k.1)], n == 0)?;
        }
        Ok(())
    }
}
