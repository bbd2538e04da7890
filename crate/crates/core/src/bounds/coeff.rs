//! Closed-form bound coefficients in the graph order `n` and minimum degree
//! `delta`.

use std::fmt;
use std::ops;

#[derive(Debug, Clone, PartialEq)]
pub enum CoeffExpr {
    Int(i64),
    /// Vertex count.
    N,
    /// Minimum degree.
    Delta,
    Add(Box<CoeffExpr>, Box<CoeffExpr>),
    Sub(Box<CoeffExpr>, Box<CoeffExpr>),
    Mul(Box<CoeffExpr>, Box<CoeffExpr>),
    Div(Box<CoeffExpr>, Box<CoeffExpr>),
    /// `base^(num/den)`.
    Pow(Box<CoeffExpr>, i64, i64),
    Sqrt(Box<CoeffExpr>),
}

pub fn int(v: i64) -> CoeffExpr {
    CoeffExpr::Int(v)
}

pub fn order() -> CoeffExpr {
    CoeffExpr::N
}

pub fn delta() -> CoeffExpr {
    CoeffExpr::Delta
}

impl CoeffExpr {
    pub fn sqrt(self) -> Self {
        Self::Sqrt(Box::new(self))
    }

    pub fn pow(self, num: i64, den: i64) -> Self {
        Self::Pow(Box::new(self), num, den)
    }

    pub fn eval(&self, n: usize, delta: usize) -> f64 {
        match self {
            Self::Int(v) => *v as f64,
            Self::N => n as f64,
            Self::Delta => delta as f64,
            Self::Add(a, b) => a.eval(n, delta) + b.eval(n, delta),
            Self::Sub(a, b) => a.eval(n, delta) - b.eval(n, delta),
            Self::Mul(a, b) => a.eval(n, delta) * b.eval(n, delta),
            Self::Div(a, b) => a.eval(n, delta) / b.eval(n, delta),
            Self::Pow(a, p, q) => {
                let base = a.eval(n, delta);
                if *q == 1 {
                    base.powi(*p as i32)
                } else if *q == 2 {
                    base.sqrt().powi(*p as i32)
                } else {
                    base.powf(*p as f64 / *q as f64)
                }
            }
            Self::Sqrt(a) => a.eval(n, delta).sqrt(),
        }
    }

    pub fn uses_order(&self) -> bool {
        self.any(&|e| matches!(e, Self::N))
    }

    pub fn uses_delta(&self) -> bool {
        self.any(&|e| matches!(e, Self::Delta))
    }

    /// True when the value depends on neither `n` nor `delta`.
    pub fn is_constant(&self) -> bool {
        !self.uses_order() && !self.uses_delta()
    }

    fn any(&self, pred: &dyn Fn(&Self) -> bool) -> bool {
        pred(self)
            || match self {
                Self::Add(a, b) | Self::Sub(a, b) | Self::Mul(a, b) | Self::Div(a, b) => a.any(pred) || b.any(pred),
                Self::Pow(a, ..) | Self::Sqrt(a) => a.any(pred),
                _ => false,
            }
    }

    fn precedence(&self) -> u8 {
        match self {
            Self::Add(..) | Self::Sub(..) => 1,
            Self::Mul(..) | Self::Div(..) => 2,
            Self::Pow(..) => 3,
            _ => 4,
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for CoeffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Int(v) => write!(f, "{v}"),
            Self::N => f.write_str("n"),
            Self::Delta => f.write_str("delta"),
            Self::Add(a, b) => {
                a.fmt_operand(f, 1)?;
                f.write_str("+")?;
                b.fmt_operand(f, 2)
            }
            Self::Sub(a, b) => {
                a.fmt_operand(f, 1)?;
                f.write_str("-")?;
                b.fmt_operand(f, 2)
            }
            Self::Mul(a, b) => {
                a.fmt_operand(f, 2)?;
                f.write_str("*")?;
                b.fmt_operand(f, 3)
            }
            Self::Div(a, b) => {
                a.fmt_operand(f, 2)?;
                f.write_str("/")?;
                b.fmt_operand(f, 3)
            }
            Self::Pow(a, p, q) => {
                a.fmt_operand(f, 4)?;
                if *q == 1 {
                    write!(f, "^{p}")
                } else {
                    write!(f, "^({p}/{q})")
                }
            }
            Self::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl ops::$tr for CoeffExpr {
            type Output = CoeffExpr;

            fn $method(self, rhs: CoeffExpr) -> CoeffExpr {
                CoeffExpr::$variant(Box::new(self), Box::new(rhs))
            }
        }

        impl ops::$tr<i64> for CoeffExpr {
            type Output = CoeffExpr;

            fn $method(self, rhs: i64) -> CoeffExpr {
                CoeffExpr::$variant(Box::new(self), Box::new(CoeffExpr::Int(rhs)))
            }
        }

        impl ops::$tr<CoeffExpr> for i64 {
            type Output = CoeffExpr;

            fn $method(self, rhs: CoeffExpr) -> CoeffExpr {
                CoeffExpr::$variant(Box::new(CoeffExpr::Int(self)), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_and_prints() {
        let c = (order() - 1).pow(13, 2) / (int(32).sqrt() * (order() - 2).pow(3, 1));
        let n = 9.0f64;
        let expect = (n - 1.0).powf(6.5) / (32f64.sqrt() * (n - 2.0).powi(3));
        assert!((c.eval(9, 1) - expect).abs() < 1e-12 * expect);
        assert_eq!(c.to_string(), "(n-1)^(13/2)/(sqrt(32)*(n-2)^3)");
        assert!(c.uses_order() && !c.uses_delta() && !c.is_constant());
        let k = int(1536) / int(343);
        assert!(k.is_constant());
        assert_eq!(k.to_string(), "1536/343");
        assert_eq!((delta() * (int(2) * (delta() - 1)).sqrt()).to_string(), "delta*sqrt(2*(delta-1))");
        assert_eq!((int(2) - (delta() - 1)).to_string(), "2-(delta-1)");
    }
}
