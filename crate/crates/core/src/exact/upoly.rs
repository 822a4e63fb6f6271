use super::rat::{to_pq, Rat};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::T => "t",
        }
    }
}

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The coefficient list never ends in a zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rat>,
    var: Var,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>, var: Var) -> Self {
        while matches!(coeffs.last(), Some(c) if c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs, var }
    }

    pub fn from_ints(c: &[i64], var: Var) -> Self {
        Self::new(c.iter().map(|&v| Rat::from_integer(v.into())).collect(), var)
    }

    pub fn zero(var: Var) -> Self {
        UPoly { coeffs: Vec::new(), var }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, r: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rat::to_f64(c);
        }
        acc
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, &[(self.var.name(), i as u32)], first)?;
            first = false;
        }
        Ok(())
    }
}

/// Shared term printer: `c * v1^e1 * v2^e2` in the input grammar.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rat,
    vars: &[(&str, u32)],
    first: bool,
) -> fmt::Result {
    let neg = c < &Rat::zero();
    let a = if neg { -c.clone() } else { c.clone() };
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mut parts: Vec<String> = Vec::new();
    let has_var = vars.iter().any(|(_, e)| *e > 0);
    if !a.is_one() || !has_var {
        if a.is_integer() {
            parts.push(a.numer().to_string());
        } else {
            parts.push(to_pq(&a));
        }
    }
    for (v, e) in vars {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    write!(f, "{}", parts.join("*"))
}
