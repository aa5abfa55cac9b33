//! Text names for plasmas: `krasner`, `free-point`, `trivial`, `powerset:N`,
//! `wedge:K`, `prime:P`, `mosaic:N`, or an inline JSON object.

use crate::error::{Error, Result};
use crate::geometry::{mosaic_plasma, DiscreteGeometry};
use crate::plasma::{self, Plasma};

pub fn parse_plasma(s: &str) -> Result<Plasma> {
    let s = s.trim();
    if s.starts_with('{') {
        return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
    }
    let (name, arg) = match s.split_once(':') {
        Some((name, arg)) => (name, Some(arg)),
        None => (s, None),
    };
    let number = |what: &str| -> Result<u64> {
        arg.ok_or_else(|| Error::Parse(format!("{what} needs a parameter, as in {what}:2")))?
            .parse::<u64>()
            .map_err(|e| Error::Parse(format!("{what} parameter: {e}")))
    };
    let small = |what: &str| -> Result<usize> {
        let v = number(what)?;
        usize::try_from(v).ok().filter(|&v| v <= 1024).ok_or_else(|| Error::Parse(format!("{what} parameter {v} too large")))
    };
    match (name, arg) {
        ("krasner" | "K", None) => Ok(plasma::krasner()),
        ("free-point", None) => Ok(plasma::free_plasma_on_point()),
        ("trivial", None) => Ok(plasma::trivial_plasma()),
        ("powerset", _) => plasma::powerset_plasma(small("powerset")?),
        ("wedge", _) => plasma::wedge_of_krasner(small("wedge")?),
        ("prime", _) => plasma::quotient_plasma_prime_field(number("prime")?),
        ("mosaic", _) => mosaic_plasma(&DiscreteGeometry::new(small("mosaic")?)?),
        _ => Err(Error::Parse(format!("unknown plasma {s:?}"))),
    }
}
