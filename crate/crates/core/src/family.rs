//! Named partition families: rectangles, staircases, hooks, generalized
//! staircases and λ-stairs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A parametrized family member. All integer parameters must be positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    /// `⟨c^r⟩`
    Rectangle { rows: u32, cols: u32 },
    /// `⟨k, k−1, …, 1⟩`
    Staircase { k: u32 },
    /// `⟨c, 1^{r−1}⟩`
    Hook { rows: u32, cols: u32 },
    /// `⟨(kc)^r, ((k−1)c)^r, …, c^r⟩`
    GenStaircase { r: u32, c: u32, k: u32 },
    /// `k` copies of `base` stacked diagonally, each shifted right by `base_1`.
    LambdaStair { base: Partition, k: u32 },
}

impl FamilySpec {
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        FamilySpec::Rectangle { rows, cols }
    }

    pub fn staircase(k: u32) -> Self {
        FamilySpec::Staircase { k }
    }

    pub fn hook(rows: u32, cols: u32) -> Self {
        FamilySpec::Hook { rows, cols }
    }

    pub fn gen_staircase(r: u32, c: u32, k: u32) -> Self {
        FamilySpec::GenStaircase { r, c, k }
    }

    pub fn lambda_stair(base: Partition, k: u32) -> Self {
        FamilySpec::LambdaStair { base, k }
    }

    /// Expands the spec into an explicit partition.
    pub fn build(&self) -> Result<Partition> {
        let zero = |what: &str| Err(Error::invalid(format!("{what} parameters must be positive")));
        match *self {
            FamilySpec::Rectangle { rows, cols } => {
                if rows == 0 || cols == 0 {
                    return zero("rectangle");
                }
                Ok(Partition::from_parts_unchecked(vec![cols; rows as usize]))
            }
            FamilySpec::Staircase { k } => {
                if k == 0 {
                    return zero("staircase");
                }
                Ok(Partition::from_parts_unchecked((1..=k).rev().collect()))
            }
            FamilySpec::Hook { rows, cols } => {
                if rows == 0 || cols == 0 {
                    return zero("hook");
                }
                let mut parts = vec![cols];
                parts.extend(std::iter::repeat(1).take(rows as usize - 1));
                Ok(Partition::from_parts_unchecked(parts))
            }
            FamilySpec::GenStaircase { r, c, k } => {
                if r == 0 || c == 0 || k == 0 {
                    return zero("generalized staircase");
                }
                let parts = (0..r * k).map(|i| c * (k - i / r)).collect();
                Ok(Partition::from_parts_unchecked(parts))
            }
            FamilySpec::LambdaStair { ref base, k } => {
                if k == 0 {
                    return zero("lambda-stair");
                }
                if base.is_empty() {
                    return Err(Error::invalid("lambda-stair needs a nonempty base"));
                }
                let step = base.first();
                let mut parts = Vec::with_capacity(base.rows() * k as usize);
                for block in (0..k).rev() {
                    parts.extend(base.parts().iter().map(|&p| block * step + p));
                }
                Partition::new(parts)
            }
        }
    }
}

fn parse_dims(tok: &str, whole: &str, n: usize) -> Result<Vec<u32>> {
    let dims: Vec<&str> = tok.split('x').collect();
    if dims.len() != n {
        return Err(Error::parse(whole, format!("expected {n} dimension(s) separated by 'x'")));
    }
    dims.iter()
        .map(|d| {
            d.trim()
                .parse::<u32>()
                .map_err(|_| Error::parse(*d, "expected a positive integer"))
        })
        .collect()
}

/// Literals: `rect:3x4`, `stair:6`, `hook:6x4`, `gs:3x2x2`, `lstair:[3,1]x3`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, "expected <kind>:<parameters>"))?;
        let spec = match kind {
            "rect" => {
                let d = parse_dims(rest, s, 2)?;
                FamilySpec::rectangle(d[0], d[1])
            }
            "stair" => FamilySpec::staircase(parse_dims(rest, s, 1)?[0]),
            "hook" => {
                let d = parse_dims(rest, s, 2)?;
                FamilySpec::hook(d[0], d[1])
            }
            "gs" => {
                let d = parse_dims(rest, s, 3)?;
                FamilySpec::gen_staircase(d[0], d[1], d[2])
            }
            "lstair" => {
                let (base, k) = rest
                    .rsplit_once('x')
                    .ok_or_else(|| Error::parse(s, "expected lstair:[parts]xk"))?;
                let base: Partition = base.parse()?;
                let k = k
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(k, "expected a positive integer"))?;
                FamilySpec::lambda_stair(base, k)
            }
            other => return Err(Error::parse(other, "unknown family kind")),
        };
        // reject zero parameters at parse time
        spec.build().map_err(|e| Error::parse(s, e.to_string()))?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Rectangle { rows, cols } => write!(f, "rect:{rows}x{cols}"),
            FamilySpec::Staircase { k } => write!(f, "stair:{k}"),
            FamilySpec::Hook { rows, cols } => write!(f, "hook:{rows}x{cols}"),
            FamilySpec::GenStaircase { r, c, k } => write!(f, "gs:{r}x{c}x{k}"),
            FamilySpec::LambdaStair { base, k } => write!(f, "lstair:[{base}]x{k}"),
        }
    }
}

/// Shorthand: `rectangle(r, c)` as a partition.
pub fn rectangle(rows: u32, cols: u32) -> Partition {
    FamilySpec::rectangle(rows, cols).build().expect("positive rectangle")
}

pub fn staircase(k: u32) -> Partition {
    FamilySpec::staircase(k).build().expect("positive staircase")
}

pub fn hook(rows: u32, cols: u32) -> Partition {
    FamilySpec::hook(rows, cols).build().expect("positive hook")
}

pub fn gen_staircase(r: u32, c: u32, k: u32) -> Partition {
    FamilySpec::gen_staircase(r, c, k)
        .build()
        .expect("positive generalized staircase")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn family_examples() {
        assert_eq!(gen_staircase(3, 2, 2), partition![4, 4, 4, 2, 2, 2]);
        assert_eq!(
            FamilySpec::lambda_stair(partition![3, 1], 3).build().unwrap(),
            partition![9, 7, 6, 4, 3, 1]
        );
        assert_eq!(staircase(6), partition![6, 5, 4, 3, 2, 1]);
        assert_eq!(rectangle(6, 4), partition![4, 4, 4, 4, 4, 4]);
        assert_eq!(hook(6, 4), partition![4, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(FamilySpec::rectangle(0, 3).build().is_err());
        assert!(FamilySpec::staircase(0).build().is_err());
        assert!(FamilySpec::gen_staircase(1, 0, 2).build().is_err());
        assert!(FamilySpec::lambda_stair(Partition::empty(), 2).build().is_err());
    }

    #[test]
    fn gen_staircase_identities() {
        for k in 1..=6 {
            assert_eq!(gen_staircase(1, 1, k), staircase(k));
        }
        for r in 1..=6 {
            for c in 1..=6 {
                assert_eq!(gen_staircase(r, c, 1), rectangle(r, c));
            }
        }
    }

    #[test]
    fn gen_staircase_row_lengths() {
        for r in 1..=6u32 {
            for c in 1..=6u32 {
                for k in 1..=6u32 {
                    let lam = gen_staircase(r, c, k);
                    assert_eq!(lam.rows() as u32, r * k);
                    for i in 1..=r * k {
                        assert_eq!(lam.part(i as usize - 1), c * (k - (i - 1) / r));
                    }
                }
            }
        }
    }

    #[test]
    fn literal_roundtrip() {
        for lit in ["rect:3x4", "stair:6", "hook:6x4", "gs:3x2x2", "lstair:[3,1]x3"] {
            let spec: FamilySpec = lit.parse().unwrap();
            assert_eq!(spec.to_string(), lit);
        }
        assert_eq!("rect:3x4".parse::<FamilySpec>().unwrap().build().unwrap(), partition![4, 4, 4]);
        assert!("rect:0x4".parse::<FamilySpec>().is_err());
        assert!("cube:3".parse::<FamilySpec>().is_err());
        assert!("gs:3x2".parse::<FamilySpec>().is_err());
    }
}
