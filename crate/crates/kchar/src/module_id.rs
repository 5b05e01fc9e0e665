//! A single handle over the five rank-two cases, and the serializable
//! character report shared by the command-line frontend.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::show_doubled;
use crate::series::{KCharacter, LaurentPoly, RationalChar, Q};
use crate::sl2sl2::{self, SctParams};
use crate::sl3_principal::{self, PrincipalSl3Id};
use crate::sl3_root::{self, RootCaseParams};
use crate::sp4_principal::{self, Sp4PrincipalId};
use crate::sp4_root::{self, Sp4RootParams};

/// Names accepted for `case`.
pub const CASES: [&str; 5] = ["sl2sl2", "sl3-root", "sl3-principal", "sp4-root", "sp4-principal"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleId {
    Sl2Sl2(SctParams),
    Sl3Root(RootCaseParams),
    Sl3Principal(PrincipalSl3Id),
    Sp4Root(Sp4RootParams),
    Sp4Principal(Sp4PrincipalId),
}

impl ModuleId {
    pub fn case_name(&self) -> &'static str {
        match self {
            Self::Sl2Sl2(_) => "sl2sl2",
            Self::Sl3Root(_) => "sl3-root",
            Self::Sl3Principal(_) => "sl3-principal",
            Self::Sp4Root(_) => "sp4-root",
            Self::Sp4Principal(_) => "sp4-principal",
        }
    }

    /// Parameter names and values, rationals rendered as `num/den`.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        match self {
            Self::Sl2Sl2(p) => vec![("a", p.a.to_string()), ("n", p.n.to_string())],
            Self::Sl3Root(p) => vec![("sign", p.sign.to_string()), ("a", p.a.to_string()), ("b", p.b.to_string())],
            Self::Sl3Principal(p) => {
                vec![("family", p.family.to_string()), ("u", p.u.to_string()), ("n", p.n.to_string())]
            }
            Self::Sp4Root(p) => vec![
                ("a", show_doubled(p.a2)),
                ("b", show_doubled(p.b2)),
                ("dual", p.dual.to_string()),
            ],
            Self::Sp4Principal(p) => {
                vec![("a", show_doubled(p.a2)), ("b", show_doubled(p.b2)), ("s", p.s.to_string())]
            }
        }
    }

    /// Rejects parameters outside the case's domain.
    pub fn check(&self) -> Result<()> {
        match self {
            Self::Sl2Sl2(p) => sl2sl2::check(p),
            Self::Sl3Principal(p) => sl3_principal::check(p),
            Self::Sp4Principal(p) => sp4_principal::check_module(p),
            _ => self.closed_form().map(|_| ()),
        }
    }

    /// The character as a reduced rational function.
    pub fn closed_form(&self) -> Result<RationalChar> {
        let r = match self {
            Self::Sl2Sl2(p) => {
                sl2sl2::check(p)?;
                sl2sl2::sct_char(p.n)
            }
            Self::Sl3Root(p) => sl3_root::root_char(p)?,
            Self::Sl3Principal(p) => sl3_principal::principal_char(p)?,
            Self::Sp4Root(p) => sp4_root::sp4_root_char(p)?,
            Self::Sp4Principal(p) => {
                sp4_principal::check_module(p)?;
                sp4_principal::phi_closed(p)?
            }
        };
        Ok(r.simplified())
    }

    /// `c_0..=c_order`.
    pub fn character(&self, order: usize) -> Result<KCharacter> {
        self.closed_form()?.expand(order)
    }
}

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sl2Sl2(p) => write!(f, "W_{{{},{}}}", p.a, &p.a - Q::from_integer(p.n.into())),
            Self::Sl3Root(p) => p.fmt(f),
            Self::Sl3Principal(p) => p.fmt(f),
            Self::Sp4Root(p) => p.fmt(f),
            Self::Sp4Principal(p) => p.fmt(f),
        }
    }
}

/// `numerator / Π (1 − z^m)` with rational coefficients as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    pub numerator: Vec<(i64, String)>,
    pub denominator_factors: Vec<u32>,
}

impl ClosedFormJson {
    pub fn from_rational(r: &RationalChar) -> Self {
        Self {
            numerator: r.numerator().terms().map(|(e, c)| (e, c.to_string())).collect(),
            denominator_factors: r.denominator().factors(),
        }
    }

    pub fn to_rational(&self) -> Result<RationalChar> {
        let mut num = LaurentPoly::zero();
        for (e, c) in &self.numerator {
            num.add_term(*e, crate::params::parse_rational(c)?);
        }
        Ok(RationalChar::with_factors(num, self.denominator_factors.iter().copied()))
    }
}

/// `{"case": …, <param>: "<value>", …}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub case: String,
    #[serde(flatten)]
    pub params: BTreeMap<String, String>,
}

impl ModuleJson {
    pub fn of(id: &ModuleId) -> Self {
        Self {
            case: id.case_name().to_string(),
            params: id.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

/// Everything `char` prints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub module: ModuleJson,
    pub order: usize,
    pub coeffs: Vec<(usize, String)>,
    pub closed_form: ClosedFormJson,
}

impl CharacterReport {
    pub fn build(id: &ModuleId, order: usize) -> Result<Self> {
        let r = id.closed_form()?;
        let c = r.expand(order)?;
        Ok(Self {
            module: ModuleJson::of(id),
            order,
            coeffs: c.coeffs().iter().enumerate().map(|(i, x)| (i, x.to_string())).collect(),
            closed_form: ClosedFormJson::from_rational(&r),
        })
    }

    /// The listed coefficients as a k-character.
    pub fn coefficients(&self) -> Result<KCharacter> {
        let mut v = vec![Q::default(); self.order + 1];
        for (i, s) in &self.coeffs {
            let slot = v.get_mut(*i).ok_or_else(|| Error::Parse {
                input: i.to_string(),
                reason: format!("exponent beyond order {}", self.order),
            })?;
            *slot = crate::params::parse_rational(s)?;
        }
        Ok(KCharacter::from_coeffs(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q, qr};
    use crate::sl3_root::Sign;

    #[test]
    fn report_round_trip() {
        let id = ModuleId::Sp4Principal(Sp4PrincipalId::new(3, 1, 0));
        let rep = CharacterReport::build(&id, 18).unwrap();
        let back = rep.closed_form.to_rational().unwrap().expand(18).unwrap();
        assert_eq!(back, rep.coefficients().unwrap());
        let ones: Vec<usize> = rep.coeffs.iter().filter(|(_, c)| c == "1").map(|(i, _)| *i).collect();
        assert_eq!(ones, vec![0, 6, 12, 18]);
    }

    #[test]
    fn names_and_checks() {
        let id = ModuleId::Sl3Root(RootCaseParams::new(Sign::Plus, 0, qr(1, 2)));
        assert_eq!(id.case_name(), "sl3-root");
        assert_eq!(id.closed_form().unwrap(), RationalChar::geometric(0, 1));
        assert!(ModuleId::Sl2Sl2(SctParams::new(q(2), 1)).check().is_err());
        assert!(ModuleId::Sp4Principal(Sp4PrincipalId::new(1, 3, 0)).check().is_err());
    }
}
