use std::fmt;
use std::str::FromStr;

/// The sign condition of a level or sublevel set: `{f <= a}`, `{f = a}`
/// or `{f >= a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Le,
    Eq,
    Ge,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Le, Flavor::Eq, Flavor::Ge];

    /// Does a point where `f - a` has sign `s` belong to the set?
    pub fn keeps(self, s: i32) -> bool {
        match self {
            Flavor::Le => s <= 0,
            Flavor::Eq => s == 0,
            Flavor::Ge => s >= 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Flavor::Le => "<=",
            Flavor::Eq => "=",
            Flavor::Ge => ">=",
        }
    }

    pub fn mirror(self) -> Flavor {
        match self {
            Flavor::Le => Flavor::Ge,
            Flavor::Eq => Flavor::Eq,
            Flavor::Ge => Flavor::Le,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Le => "le",
            Flavor::Eq => "eq",
            Flavor::Ge => "ge",
        })
    }
}

impl FromStr for Flavor {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "le" | "<=" => Ok(Flavor::Le),
            "eq" | "=" => Ok(Flavor::Eq),
            "ge" | ">=" => Ok(Flavor::Ge),
            _ => Err(crate::Error::Parse { col: 1, msg: format!("unknown flavor '{s}'") }),
        }
    }
}
