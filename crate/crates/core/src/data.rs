//! Fusion rings and census tables shipped with the crate.

use crate::error::Result;
use crate::invariant::CensusTable;
use crate::ring::FusionRing;

struct Bundled {
    name: &'static str,
    code: &'static str,
    title: &'static str,
    ring: &'static str,
    census: Option<&'static str>,
}

macro_rules! bundled {
    ($name:literal, $code:literal, $title:literal, census) => {
        Bundled {
            name: $name,
            code: $code,
            title: $title,
            ring: include_str!(concat!("../data/rings/", $name, ".json")),
            census: Some(include_str!(concat!("../data/census/", $name, ".json"))),
        }
    };
    ($name:literal, $code:literal, $title:literal) => {
        Bundled {
            name: $name,
            code: $code,
            title: $title,
            ring: include_str!(concat!("../data/rings/", $name, ".json")),
            census: None,
        }
    };
}

const BUNDLED: &[Bundled] = &[
    bundled!("trivial", "FR_1^{1,1,0}", "Trivial", census),
    bundled!("z2", "FR_1^{2,1,0}", "Z2", census),
    bundled!("fib", "FR_2^{2,1,0}", "Fib", census),
    bundled!("ising", "FR_1^{3,1,0}", "Ising", census),
    bundled!("rep_d3", "FR_2^{3,1,0}", "Rep(D3)", census),
    bundled!("psu2_5", "FR_3^{3,1,0}", "PSU(2)_5", census),
    bundled!("z3", "FR_1^{3,1,2}", "Z3", census),
    bundled!("z2xz2", "FR_1^{4,1,0}", "Z2 x Z2"),
    bundled!("z4", "FR_1^{4,1,2}", "Z4", census),
    bundled!("ty_z3", "FR_2^{4,1,2}", "TY(Z3)", census),
    bundled!("ty_z4", "FR_1^{5,1,2}", "TY(Z4)", census),
    bundled!("z5", "FR_1^{5,1,4}", "Z5"),
    bundled!("z6", "FR_1^{6,1,4}", "Z6"),
    bundled!("ty_z5", "FR_3^{6,1,4}", "TY(Z5)", census),
    bundled!("rep_d9", "FR_8^{6,1,0}", "Rep(D9)"),
    bundled!("adj_so16_2", "FR_1^{7,1,0}", "Adj(SO(16)_2)"),
    bundled!("z7", "FR_1^{7,1,6}", "Z7"),
];

fn find(name: &str) -> Option<&'static Bundled> {
    let key = name.trim();
    BUNDLED.iter().find(|b| {
        b.name.eq_ignore_ascii_case(key) || b.code == key || b.title.eq_ignore_ascii_case(key)
    })
}

/// Short names of all bundled rings.
pub fn ring_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|b| b.name).collect()
}

/// Short names of rings that ship with a census table.
pub fn census_names() -> Vec<&'static str> {
    BUNDLED
        .iter()
        .filter(|b| b.census.is_some())
        .map(|b| b.name)
        .collect()
}

/// Census code such as `FR_1^{2,1,0}` for a bundled ring.
pub fn ring_code(name: &str) -> Option<&'static str> {
    find(name).map(|b| b.code)
}

/// Human-readable ring name such as `Fib`.
pub fn ring_title(name: &str) -> Option<&'static str> {
    find(name).map(|b| b.title)
}

/// A bundled ring, looked up by short name (`z2`), census code
/// (`FR_1^{2,1,0}`) or title (`Z2`).
pub fn ring(name: &str) -> Option<FusionRing> {
    let b = find(name)?;
    Some(FusionRing::from_json(b.ring).expect("bundled ring is valid"))
}

/// The bundled census table of a ring, if one ships.
pub fn census(name: &str) -> Option<Result<CensusTable>> {
    let text = find(name)?.census?;
    Some(CensusTable::from_json(text))
}

/// Raw JSON text of a bundled census table.
pub fn census_json(name: &str) -> Option<&'static str> {
    find(name)?.census
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings_load() {
        for n in ring_names() {
            let r = ring(n).unwrap();
            assert!(r.rank() >= 1);
            assert_eq!(ring(ring_code(n).unwrap()).unwrap(), r);
        }
        assert_eq!(ring("Z2").unwrap().rank(), 2);
        assert!(ring("nope").is_none());
    }

    #[test]
    fn censuses_load() {
        for n in census_names() {
            let t = census(n).unwrap().unwrap();
            assert_eq!(t.ring(), &ring(n).unwrap(), "{n}");
        }
    }
}
