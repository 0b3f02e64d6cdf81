//! Coefficient rings and the unit conditions the Ext computations rely on.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{build_root_system, CartanType, RootSystem, Series};
use crate::weyl::{generate_weyl, DEFAULT_ELEMENT_CAP};

/// Residue order used when a rational ring is given without one.
pub const DEFAULT_RATIONAL_Q: u64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingKind {
    RationalField,
    IntegersModD,
}

/// A prime power `q = p^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePower {
    pub q: u64,
    pub p: u64,
    pub r: u32,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::Config(format!("q = {q} is not a prime power")));
        }
        let p = smallest_prime_factor(q);
        let mut r = 0;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            r += 1;
        }
        if rest != 1 {
            return Err(Error::Config(format!("q = {q} is not a prime power")));
        }
        Ok(PrimePower { q, p, r })
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return f;
        }
        f += 1;
    }
    n
}

/// Coefficient ring `Q` or `Z/d`, together with the residue order `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    kind: RingKind,
    d: u64,
    q: PrimePower,
}

impl RingSpec {
    pub fn rational(q: u64) -> Result<Self> {
        Ok(RingSpec {
            kind: RingKind::RationalField,
            d: 0,
            q: PrimePower::new(q)?,
        })
    }

    pub fn modular(q: u64, d: u64) -> Result<Self> {
        if d == 1 {
            return Err(Error::DegenerateRing("Z/1 is the zero ring".into()));
        }
        if d == 0 {
            return Err(Error::Config("use the rational ring instead of d = 0".into()));
        }
        Ok(RingSpec {
            kind: RingKind::IntegersModD,
            d,
            q: PrimePower::new(q)?,
        })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// Generator of the kernel of `Z -> R`; 0 for the rationals.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.q.q
    }

    pub fn p(&self) -> u64 {
        self.q.p
    }

    pub fn prime_power(&self) -> PrimePower {
        self.q
    }

    pub fn is_rational(&self) -> bool {
        self.kind == RingKind::RationalField
    }

    /// Unit test in `R`.
    pub fn is_unit(&self, x: &BigInt) -> bool {
        match self.kind {
            RingKind::RationalField => !x.is_zero(),
            RingKind::IntegersModD => {
                let d = BigInt::from(self.d);
                x.mod_floor(&d).gcd(&d).is_one()
            }
        }
    }

    /// Canonical representative of `x` in `R`: `x mod d` or `x` itself.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match self.kind {
            RingKind::RationalField => x.clone(),
            RingKind::IntegersModD => x.mod_floor(&BigInt::from(self.d)),
        }
    }

    /// `q^e - 1` reduced into `R`.
    pub fn q_power_minus_one(&self, e: u32) -> BigInt {
        match self.kind {
            RingKind::RationalField => BigInt::from(self.q.q).pow(e) - 1,
            RingKind::IntegersModD => {
                let d = BigInt::from(self.d);
                (BigInt::from(self.q.q).modpow(&BigInt::from(e), &d) - BigInt::from(1)).mod_floor(&d)
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::RationalField if self.q.q == DEFAULT_RATIONAL_Q => write!(f, "Q"),
            RingKind::RationalField => write!(f, "Q,q={}", self.q.q),
            RingKind::IntegersModD => write!(f, "q={},d={}", self.q.q, self.d),
        }
    }
}

/// Accepts `Q`, `Q,q=<q>`, `q=<q>,Q` and `q=<q>,d=<d>`.
impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("cannot parse ring '{s}' (expected 'Q' or 'q=<prime power>,d=<n>')"));
        let mut q = None;
        let mut d = None;
        let mut rational = false;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "Q" {
                rational = true;
            } else if let Some(v) = part.strip_prefix("q=") {
                q = Some(v.parse::<u64>().map_err(|_| bad())?);
            } else if let Some(v) = part.strip_prefix("d=") {
                d = Some(v.parse::<u64>().map_err(|_| bad())?);
            } else {
                return Err(bad());
            }
        }
        match (rational, d) {
            (true, None) => RingSpec::rational(q.unwrap_or(DEFAULT_RATIONAL_Q)),
            (false, Some(0)) => RingSpec::rational(q.ok_or_else(bad)?),
            (false, Some(d)) => RingSpec::modular(q.ok_or_else(bad)?, d),
            _ => Err(bad()),
        }
    }
}

/// `is_unit` on machine integers.
pub fn is_unit(x: i64, spec: &RingSpec) -> bool {
    spec.is_unit(&BigInt::from(x))
}

/// First factor `1 - q^r` that is not a unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BonFailure {
    pub r: u32,
    /// `1 - q^r` as an integer.
    pub factor: String,
    /// Its residue in `R`.
    pub residue: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum BanalFailure {
    /// `d` shares a factor with the residue characteristic.
    Characteristic { p: u64, d: u64 },
    /// `q^{d_i} - 1` is not a unit.
    Degree { degree: u32, factor: String, residue: String },
}

/// Verdicts on the ring conditions for one root system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub bon: bool,
    pub banal_proxy: bool,
    pub assumption3: bool,
    pub witness: Witness,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct Witness {
    pub bon: Option<BonFailure>,
    pub banal_proxy: Option<BanalFailure>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.bon && self.banal_proxy && self.assumption3
    }

    /// One-line summary of what failed.
    pub fn failure_summary(&self) -> Option<String> {
        let mut parts = Vec::new();
        if let Some(b) = &self.witness.bon {
            parts.push(format!("bon fails: 1 - q^{} = {} is {} in R", b.r, b.factor, b.residue));
        }
        match &self.witness.banal_proxy {
            Some(BanalFailure::Characteristic { p, d }) => {
                parts.push(format!("banal proxy fails: gcd(d={d}, p={p}) != 1"))
            }
            Some(BanalFailure::Degree { degree, factor, residue }) => parts.push(format!(
                "banal proxy fails: q^{degree} - 1 = {factor} is {residue} in R"
            )),
            None => {}
        }
        (!parts.is_empty()).then(|| parts.join("; "))
    }
}

/// Checks that every `1 - q^r`, `1 <= r <= n_max`, is a unit.
pub fn bon_check(rs: &RootSystem, spec: &RingSpec) -> (bool, Option<BonFailure>) {
    let n_max = rs.n_max() as u32;
    for r in 1..=n_max {
        let factor = BigInt::one() - BigInt::from(spec.q()).pow(r);
        if !spec.is_unit(&factor) {
            return (
                false,
                Some(BonFailure {
                    r,
                    residue: spec.reduce(&factor).to_string(),
                    factor: factor.to_string(),
                }),
            );
        }
    }
    (true, None)
}

fn degree_table(ty: CartanType) -> Vec<u32> {
    let n = ty.rank as u32;
    let mut v: Vec<u32> = match ty.series {
        Series::A => (2..=n + 1).collect(),
        Series::B | Series::C => (1..=n).map(|i| 2 * i).collect(),
        Series::D => (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect(),
        Series::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Series::F => vec![2, 6, 8, 12],
        Series::G => vec![2, 6],
    };
    v.sort_unstable();
    v
}

fn degree_cache() -> &'static Mutex<HashMap<CartanType, Vec<u32>>> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Vec<u32>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Fundamental degrees of the Weyl group, ascending.
///
/// The table is checked against `sum(d_i - 1) = |positive roots|` and, when
/// the group is small enough to enumerate, `prod(d_i) = |W|`.
pub fn weyl_degrees(series: Series, rank: usize) -> Result<Vec<u32>> {
    let ty = CartanType::new(series, rank)?;
    if let Some(v) = degree_cache().lock().unwrap().get(&ty) {
        return Ok(v.clone());
    }
    let degrees = degree_table(ty);
    let rs = build_root_system(series, rank)?;
    let exps: usize = degrees.iter().map(|&d| d as usize - 1).sum();
    if exps != rs.num_positive_roots() || degrees.len() != rank {
        return Err(Error::Internal(format!(
            "degrees of {ty} sum to {exps} exponents but there are {} positive roots",
            rs.num_positive_roots()
        )));
    }
    let order: u128 = degrees.iter().map(|&d| d as u128).product();
    if order <= DEFAULT_ELEMENT_CAP as u128 {
        let w = generate_weyl(&rs)?;
        if w.order() as u128 != order {
            return Err(Error::Internal(format!(
                "degrees of {ty} multiply to {order} but |W| = {}",
                w.order()
            )));
        }
    }
    degree_cache().lock().unwrap().insert(ty, degrees.clone());
    Ok(degrees)
}

/// Proxy for invertibility of the pro-order: `gcd(d, p) = 1` and every
/// `q^{d_i} - 1` is a unit.
pub fn banal_proxy_check(rs: &RootSystem, spec: &RingSpec) -> Result<(bool, Option<BanalFailure>)> {
    if spec.is_rational() {
        return Ok((true, None));
    }
    if spec.d().gcd(&spec.p()) != 1 {
        return Ok((
            false,
            Some(BanalFailure::Characteristic {
                p: spec.p(),
                d: spec.d(),
            }),
        ));
    }
    for degree in weyl_degrees(rs.series(), rs.rank())? {
        let factor = BigInt::from(spec.q()).pow(degree) - 1;
        if !spec.is_unit(&factor) {
            return Ok((
                false,
                Some(BanalFailure::Degree {
                    degree,
                    residue: spec.reduce(&factor).to_string(),
                    factor: factor.to_string(),
                }),
            ));
        }
    }
    Ok((true, None))
}

/// Full report for `check-ring`.
pub fn condition_report(rs: &RootSystem, spec: &RingSpec, assume_theta: bool) -> Result<ConditionReport> {
    let (bon, bon_fail) = bon_check(rs, spec);
    let (banal, banal_fail) = banal_proxy_check(rs, spec)?;
    let mut notes = vec![
        format!("n_max = {} for {}", rs.n_max(), rs.cartan_type()),
        "banal_proxy uses gcd(d, p * prod(q^d_i - 1)) = 1 for the split finite quotient".to_string(),
        "assumption3 holds because only split root data are supported".to_string(),
    ];
    notes.push(if assume_theta {
        "character-lattice base change asserted by the user (--assume-theta)".to_string()
    } else {
        "character-lattice base change not asserted (pass --assume-theta to acknowledge)".to_string()
    });
    Ok(ConditionReport {
        bon,
        banal_proxy: banal,
        assumption3: true,
        witness: Witness {
            bon: bon_fail,
            banal_proxy: banal_fail,
        },
        notes,
    })
}

/// Converts a unit value to `i64` when it fits, for display.
pub fn small(x: &BigInt) -> Option<i64> {
    if x.abs() < BigInt::from(i64::MAX) {
        x.to_i64()
    } else {
        None
    }
}
