//! The tower of moduli spaces `X_0, ..., X_{floor((d-1)/2)}` of stable pairs,
//! the wall spaces `M_c` between them, and the numerical data of every wall.
//!
//! `X_k ≅ M_sigma` for sigma in the chamber `(d - 2k - 2, d - 2k)`. At the
//! wall `c = d - 2n` the two sides map to `M_c`:
//!
//! ```text
//!   X_{n-1} --f+--> M_c <--f-- X_n
//! ```
//!
//! and both maps are isomorphisms off projective bundles over `Z_c ≅ C_n`.

use serde::{Deserialize, Serialize};

use crate::divisor::DivClass;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::stability::{critical_values, is_critical, Chamber};

/// Dimension of an empty projective space `P(0)`.
pub const EMPTY_DIM: i64 = -1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallDatum {
    pub c: i64,
    pub n: i64,
    /// `dim C_n`.
    pub locus_dim: i64,
    /// Fiber of `f-: X_n -> M_c` over `Z_c`: `P(H^0(K_C + D - 2A))`.
    pub fminus_fiber_dim: i64,
    /// Fiber of `f+: X_{n-1} -> M_c` over `Z_c`.
    pub fplus_fiber_dim: i64,
    pub fminus_exc_dim: i64,
    pub fplus_exc_dim: i64,
    /// The `f-` exceptional locus is a divisor.
    pub divisorial: bool,
}

impl WallDatum {
    pub fn fminus_exc_codim(&self, ambient_dim: i64) -> Option<i64> {
        (self.fminus_exc_dim >= 0).then(|| ambient_dim - self.fminus_exc_dim)
    }

    pub fn fplus_exc_codim(&self, ambient_dim: i64) -> Option<i64> {
        (self.fplus_exc_dim >= 0).then(|| ambient_dim - self.fplus_exc_dim)
    }
}

fn check_genus_degree(g: i64, d: i64) -> Result<()> {
    if g < 0 {
        return Err(Error::out_of_range("genus", format!("g = {g}")));
    }
    if d < 1 {
        return Err(Error::out_of_range("degree", format!("d = {d}")));
    }
    Ok(())
}

pub fn ambient_dim(g: i64, d: i64) -> i64 {
    d + g - 2
}

pub fn wall_datum(g: i64, d: i64, c: i64) -> Result<WallDatum> {
    check_genus_degree(g, d)?;
    if !is_critical(d, c) {
        return Err(Error::NotCritical { c, d });
    }
    let n = (d - c) / 2;
    let fminus_fiber_dim = (c + g - 2).max(EMPTY_DIM);
    let fplus_fiber_dim = n - 1;
    let exc = |fiber: i64| {
        if fiber == EMPTY_DIM {
            EMPTY_DIM
        } else {
            n + fiber
        }
    };
    let fminus_exc_dim = exc(fminus_fiber_dim);
    Ok(WallDatum {
        c,
        n,
        locus_dim: n,
        fminus_fiber_dim,
        fplus_fiber_dim,
        fminus_exc_dim,
        fplus_exc_dim: exc(fplus_fiber_dim),
        divisorial: fminus_exc_dim != EMPTY_DIM && fminus_exc_dim == ambient_dim(g, d) - 1,
    })
}

/// Dimension of `P(H^0(C, K_C + D - 2A))` for `deg A = k`; `EMPTY_DIM` when
/// the space of sections is zero.
pub fn terracini_fiber_dim(g: i64, d: i64, k: i64) -> Result<i64> {
    check_genus_degree(g, d)?;
    if k < 1 || d - 2 * k <= 0 {
        return Err(Error::out_of_range(
            "secant index",
            format!("k = {k} needs 1 <= k < d/2 (d = {d})"),
        ));
    }
    Ok((d - 2 * k + g - 2).max(EMPTY_DIM))
}

/// `(dim Σ_k, codim Σ_k)` inside `|K_C + D|*`.
pub fn secant_dims(g: i64, d: i64, k: i64) -> Result<(i64, i64)> {
    check_genus_degree(g, d)?;
    if k < 1 || 2 * k > d - 1 {
        return Err(Error::out_of_range(
            "secant index",
            format!("k = {k} needs 1 <= 2k <= d - 1 (d = {d})"),
        ));
    }
    Ok((2 * k - 1, d + g - 2 * k - 1))
}

/// Which contraction a linear series label refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesMap {
    /// `f+: X_k -> M_{d-2k-2}`.
    FPlus,
    /// `f-: X_k -> M_{d-2k}`.
    FMinus,
    /// `X_{floor((d-1)/2)} -> M_C(2, D)`.
    Final,
}

/// Primitive class of the linear series defining a contraction out of `X_k`.
pub fn series_label(d: i64, k: i64, map: SeriesMap) -> Result<DivClass> {
    let top = (d - 1).div_euclid(2);
    let bad = || Error::out_of_range("tower index", format!("k = {k} for {map:?} with d = {d}"));
    match map {
        SeriesMap::FPlus if (0..top).contains(&k) => Ok(DivClass::secant_series(k + 1)),
        SeriesMap::FMinus if (1..=top).contains(&k) => Ok(DivClass::secant_series(k)),
        SeriesMap::Final if k == top && d >= 1 => Ok(DivClass::new(d, -(d - 2))),
        _ => Err(bad()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDescriptor {
    pub index: i64,
    pub label: String,
    /// `[low, high]`
    pub chamber: [Rational; 2],
    pub representative: Rational,
    /// `EMPTY_DIM` for an empty moduli space.
    pub dimension: i64,
    pub empty: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinalTarget {
    pub label: String,
    pub dimension: i64,
    /// Index of the last nonempty `X_k`, the source of the final map.
    pub source_index: Option<i64>,
    pub is_contraction: bool,
    pub series: DivClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesLabel {
    pub map: String,
    pub class: DivClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub g: i64,
    pub d: i64,
    pub ambient_dim: i64,
    /// In tower order, `n = 1, 2, ...` (`c` descending).
    pub walls: Vec<WallDatum>,
    pub spaces: Vec<SpaceDescriptor>,
    pub final_target: FinalTarget,
    pub series_labels: Vec<SeriesLabel>,
}

impl TowerReport {
    pub fn nonempty_spaces(&self) -> impl Iterator<Item = &SpaceDescriptor> {
        self.spaces.iter().filter(|s| !s.empty)
    }
}

/// Genus 0 with odd `d`: every bundle is unstable, so `M_sigma` is empty for
/// `sigma < 1`.
fn genus0_odd(g: i64, d: i64) -> bool {
    g == 0 && d % 2 == 1
}

pub fn tower(g: i64, d: i64) -> Result<TowerReport> {
    check_genus_degree(g, d)?;
    let ambient = ambient_dim(g, d);
    let top = (d - 1).div_euclid(2);

    let mut walls: Vec<WallDatum> = critical_values(d)
        .into_iter()
        .map(|c| wall_datum(g, d, c))
        .collect::<Result<_>>()?;
    walls.sort_by_key(|w| w.n);

    let spaces: Vec<SpaceDescriptor> = (0..=top)
        .map(|k| {
            let ch = Chamber::of_index(d, k)?;
            let empty = genus0_odd(g, d) && ch.high <= 1;
            let label = match k {
                _ if empty => format!("X_{k} (empty)"),
                0 => "|K_C+D|*".to_string(),
                1 if d > 2 => "bl(|K_C+D|*, C)".to_string(),
                _ => format!("X_{k}"),
            };
            Ok(SpaceDescriptor {
                index: k,
                label,
                representative: ch.representative(),
                chamber: [ch.low, ch.high],
                dimension: if empty { EMPTY_DIM } else { ambient },
                empty,
            })
        })
        .collect::<Result<_>>()?;

    let last_nonempty = spaces.iter().rev().find(|s| !s.empty).map(|s| s.index);
    let final_target = if genus0_odd(g, d) {
        // The tower stops at M_1 ≅ P^n, reached by the last f+.
        let n = top;
        FinalTarget {
            label: format!("M_1 = P^{n}"),
            dimension: n,
            source_index: last_nonempty,
            is_contraction: true,
            series: DivClass::secant_series(n.max(1)),
        }
    } else {
        let (label, dimension) = match g {
            0 => ("M_C(2,D) = point".to_string(), 0),
            1 if d % 2 == 0 => ("M_C(2,D) = P^1".to_string(), 1),
            1 => ("M_C(2,D) = point".to_string(), 0),
            _ => ("M_C(2,D)".to_string(), 3 * g - 3),
        };
        FinalTarget {
            label,
            dimension,
            source_index: last_nonempty,
            is_contraction: d > 2 * g - 2,
            series: series_label(d, top, SeriesMap::Final)?,
        }
    };

    let mut series_labels = Vec::new();
    for w in &walls {
        series_labels.push(SeriesLabel {
            map: format!("f+ : X_{} -> M_{}", w.n - 1, w.c),
            class: series_label(d, w.n - 1, SeriesMap::FPlus)?,
        });
        if spaces[w.n as usize].empty {
            continue;
        }
        series_labels.push(SeriesLabel {
            map: format!("f- : X_{} -> M_{}", w.n, w.c),
            class: series_label(d, w.n, SeriesMap::FMinus)?,
        });
    }
    if let Some(src) = last_nonempty {
        if !genus0_odd(g, d) {
            series_labels.push(SeriesLabel {
                map: format!("f : X_{src} -> {}", final_target.label),
                class: final_target.series.clone(),
            });
        }
    }

    Ok(TowerReport {
        g,
        d,
        ambient_dim: ambient,
        walls,
        spaces,
        final_target,
        series_labels,
    })
}
