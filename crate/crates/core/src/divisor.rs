//! Divisor classes on `X = bl(|K_C + D|*, C)`, discrepancies, log canonical
//! thresholds and log-flip certificates.
//!
//! `Pic(X)` has rank 2 with basis `H` (pull-back of a hyperplane) and `E`
//! (the exceptional divisor). The flips `X_{k-1} --> X_k` are isomorphisms in
//! codimension 1, so classes on every `X_k` are written in the same basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// The class `h H + e E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivClass {
    pub h: Rational,
    pub e: Rational,
}

impl DivClass {
    pub fn new(h: impl Into<Rational>, e: impl Into<Rational>) -> Self {
        DivClass {
            h: h.into(),
            e: e.into(),
        }
    }

    /// `H`
    pub fn hyperplane() -> Self {
        DivClass::new(1, 0)
    }

    /// `E`
    pub fn exceptional() -> Self {
        DivClass::new(0, 1)
    }

    /// `k H - (k - 1) E`, the class contracting the wall `d - 2k`.
    pub fn secant_series(k: i64) -> Self {
        DivClass::new(k, -(k - 1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DivClass {
            h: &self.h * c,
            e: &self.e * c,
        }
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(f: &mut fmt::Formatter<'_>, c: &Rational, sym: &str, first: bool) -> fmt::Result {
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if mag == 1 {
                f.write_str(sym)
            } else if mag.is_integer() {
                write!(f, "{mag}{sym}")
            } else {
                write!(f, "({mag}){sym}")
            }
        }
        match (self.h.is_zero(), self.e.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => term(f, &self.h, "H", true),
            (true, false) => term(f, &self.e, "E", true),
            (false, false) => {
                term(f, &self.h, "H", true)?;
                term(f, &self.e, "E", false)
            }
        }
    }
}

impl Add<&DivClass> for &DivClass {
    type Output = DivClass;
    fn add(self, rhs: &DivClass) -> DivClass {
        DivClass {
            h: &self.h + &rhs.h,
            e: &self.e + &rhs.e,
        }
    }
}

impl Sub<&DivClass> for &DivClass {
    type Output = DivClass;
    fn sub(self, rhs: &DivClass) -> DivClass {
        DivClass {
            h: &self.h - &rhs.h,
            e: &self.e - &rhs.e,
        }
    }
}

impl Neg for &DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass {
            h: -&self.h,
            e: -&self.e,
        }
    }
}

impl Mul<&DivClass> for &Rational {
    type Output = DivClass;
    fn mul(self, rhs: &DivClass) -> DivClass {
        rhs.scale(self)
    }
}

/// Curve class spanning an extremal ray, recorded by its intersection
/// numbers with `H` and `E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RayClass {
    pub h_b: Rational,
    pub e_b: Rational,
    pub wall: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RaySide {
    /// The ray `B ⊂ X_{k-1}` contracted by `f+`.
    Flipping,
    /// The ray `B+ ⊂ X_k` contracted by `f-`.
    Flipped,
}

/// `D . B`
pub fn pair_ray(class: &DivClass, ray: &RayClass) -> Rational {
    &class.h * &ray.h_b + &class.e * &ray.e_b
}

/// Extremal ray at the wall `d - 2k`, normalized to `(H.B, E.B) = (k-1, k)`
/// on the flipping side. The flipped ray is its negative in the common basis.
pub fn extremal_ray(k: i64, side: RaySide) -> Result<RayClass> {
    if k < 2 {
        return Err(Error::out_of_range(
            "wall index",
            format!("k = {k}; k = 1 is the blow-down, flips start at k = 2"),
        ));
    }
    let (h_b, e_b) = (Rational::from(k - 1), Rational::from(k));
    Ok(match side {
        RaySide::Flipping => RayClass { h_b, e_b, wall: k },
        RaySide::Flipped => RayClass {
            h_b: -h_b,
            e_b: -e_b,
            wall: k,
        },
    })
}

/// `K_X ≡ -(d + g - 1) H + (d + g - 4) E`.
pub fn canonical_class(g: i64, d: i64) -> Result<DivClass> {
    check_blowup(g, d)?;
    Ok(DivClass::new(-(d + g - 1), d + g - 4))
}

/// `F ≡ d H - (d - 2) E`, the class of the determinantal divisor.
pub fn f_class(d: i64) -> Result<DivClass> {
    if d <= 2 {
        return Err(Error::out_of_range(
            "degree",
            format!("d = {d}; X needs d > 2"),
        ));
    }
    Ok(DivClass::new(d, -(d - 2)))
}

fn check_blowup(g: i64, d: i64) -> Result<()> {
    if g < 0 {
        return Err(Error::out_of_range("genus", format!("g = {g}")));
    }
    if d <= 2 {
        return Err(Error::out_of_range(
            "degree",
            format!("d = {d}; X needs d > 2"),
        ));
    }
    Ok(())
}

/// Largest `n` for which `E^(n)` exists: `floor((d - 1) / 2)`.
pub fn top_exceptional(d: i64) -> i64 {
    (d - 1).div_euclid(2)
}

/// Coefficient data of `E^(j)` in `(K_X~ - f^* K_X) + λ (f_*^{-1} F - f^* F)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyRow {
    pub j: i64,
    /// Codimension of `Σ_j(C)` in `|K_C + D|*`.
    pub codim: i64,
    /// Generic multiplicity of `F` along `Σ_j(C)`.
    pub mult_f: i64,
    /// `(codim - 1) - λ mult_f`.
    pub coeff: Rational,
}

impl DiscrepancyRow {
    pub fn new(g: i64, d: i64, j: i64, lambda: &Rational) -> Self {
        let codim = d + g - 2 * j - 1;
        let mult_f = d - 2 * j;
        let coeff = Rational::from(codim - 1) - lambda * mult_f;
        DiscrepancyRow {
            j,
            codim,
            mult_f,
            coeff,
        }
    }

    /// Log canonical along this divisor: coefficient at least -1.
    pub fn is_log_canonical(&self) -> bool {
        self.coeff >= -1
    }
}

pub fn discrepancy_table(
    g: i64,
    d: i64,
    lambda: &Rational,
    j_range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<DiscrepancyRow>> {
    check_blowup(g, d)?;
    let top = top_exceptional(d);
    if *j_range.start() < 1 || *j_range.end() > top {
        return Err(Error::out_of_range(
            "exceptional index",
            format!(
                "{}..={} is not inside 1..={top}",
                j_range.start(),
                j_range.end()
            ),
        ));
    }
    Ok(j_range
        .map(|j| DiscrepancyRow::new(g, d, j, lambda))
        .collect())
}

/// Exceptional divisors that can appear when log resolving on `X_{k-1}`:
/// `E^(j)` for `max(k, 2) <= j <= floor((d-1)/2)`. `E^(1)` is never
/// exceptional over `X`.
pub fn lc_rows(d: i64, k: i64) -> std::ops::RangeInclusive<i64> {
    k.max(2)..=top_exceptional(d)
}

/// Largest λ for which a general member of `λ F` is log canonical on
/// `X_{k-1}`: the minimum over the relevant rows of
/// `(d + g - 2j - 1) / (d - 2j)`.
pub fn lc_threshold(g: i64, d: i64, k: i64) -> Result<Rational> {
    if k < 1 {
        return Err(Error::out_of_range("wall index", format!("k = {k}")));
    }
    if d <= 2 * k {
        return Err(Error::ThresholdUndefined {
            d,
            k,
            reason: "needs d > 2k",
        });
    }
    check_blowup(g, d)?;
    lc_rows(d, k)
        .map(|j| Rational::frac(d + g - 2 * j - 1, d - 2 * j))
        .min()
        .ok_or(Error::ThresholdUndefined {
            d,
            k,
            reason: "no exceptional divisor above X_{k-1}",
        })
}

/// Numerical log-flip certificate for `X_{k-1} --> X_k` and `K_X + λ F`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub genus: i64,
    pub degree: i64,
    pub wall: i64,
    pub lambda: Rational,
    /// `B . (K_X + λF)`, must be negative.
    #[serde(rename = "B_pairing")]
    pub b_pairing: Rational,
    /// `B+ . (K_X + λF)`, must be positive.
    #[serde(rename = "Bplus_pairing")]
    pub bplus_pairing: Rational,
    pub threshold: Rational,
    pub lc_rows: Vec<DiscrepancyRow>,
    pub log_canonical: bool,
    pub certified: bool,
}

pub fn certify_log_flip(g: i64, d: i64, k: i64, lambda: &Rational) -> Result<Certificate> {
    if k < 2 {
        return Err(Error::out_of_range(
            "wall index",
            format!("k = {k}; flips start at k = 2"),
        ));
    }
    if d <= 2 * k {
        return Err(Error::out_of_range(
            "wall index",
            format!("k = {k} needs d > 2k (d = {d})"),
        ));
    }
    let threshold = lc_threshold(g, d, k)?;
    let divisor = &canonical_class(g, d)? + &f_class(d)?.scale(lambda);
    let b_pairing = pair_ray(&divisor, &extremal_ray(k, RaySide::Flipping)?);
    let bplus_pairing = pair_ray(&divisor, &extremal_ray(k, RaySide::Flipped)?);
    let lc_rows = discrepancy_table(g, d, lambda, lc_rows(d, k))?;
    let log_canonical = !lambda.is_negative()
        && *lambda <= threshold
        && lc_rows.iter().all(DiscrepancyRow::is_log_canonical);
    let certified = b_pairing.is_negative() && bplus_pairing.is_positive() && log_canonical;
    Ok(Certificate {
        genus: g,
        degree: d,
        wall: k,
        lambda: lambda.clone(),
        b_pairing,
        bplus_pairing,
        threshold,
        lc_rows,
        log_canonical,
        certified,
    })
}
