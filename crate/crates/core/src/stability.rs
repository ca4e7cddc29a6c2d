//! Slope functions for triples and pairs, sigma-stability of rank-2 Bradlow
//! pairs, Harder-Narasimhan and Jordan-Hölder data, and the critical set.
//!
//! A rank-2 pair `(O_C, f, E)` with `det E = O_C(D)`, `deg D = d` is modelled
//! by its numeric shadow `(d, a, b)`:
//!
//! * `a` is the degree of the saturation `O_C(A)` of the image of the section,
//! * `b` is the maximal degree of a line subbundle of `E`.
//!
//! Every sub-pair that can destabilize is one of `(O_C, s, O_C(A))`,
//! `(0, 0, L)` with `deg L <= b`, or `(0, 0, E)`, so these three integers
//! decide stability exactly.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Ranks and degrees of a triple `(E, f, F)`: `r1 = rk E`, `r2 = rk F`,
/// `d1 = deg E`, `d2 = deg F`.
///
/// Nontrivial triples have `r2 >= 1`; a value with `r2 = 0` is still
/// representable (it shows up as the final quotient of some filtrations) but
/// has no finite slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleInvariants {
    pub r1: u32,
    pub r2: u32,
    pub d1: i64,
    pub d2: i64,
}

impl TripleInvariants {
    pub const fn new(r1: u32, r2: u32, d1: i64, d2: i64) -> Self {
        TripleInvariants { r1, r2, d1, d2 }
    }

    /// `(deg E + deg F + sigma (rk E + rk F)) / rk F`.
    pub fn mu_sigma(&self, sigma: &Rational) -> Result<Rational> {
        if self.r2 == 0 {
            return Err(Error::DegenerateTriple);
        }
        let deg = Rational::from(self.d1 + self.d2);
        let rank = i64::from(self.r1 + self.r2);
        Ok((deg + sigma * rank) / i64::from(self.r2))
    }
}

impl Add for TripleInvariants {
    type Output = TripleInvariants;
    fn add(self, rhs: Self) -> Self {
        TripleInvariants {
            r1: self.r1 + rhs.r1,
            r2: self.r2 + rhs.r2,
            d1: self.d1 + rhs.d1,
            d2: self.d2 + rhs.d2,
        }
    }
}

pub fn mu_sigma(t: &TripleInvariants, sigma: &Rational) -> Result<Rational> {
    t.mu_sigma(sigma)
}

/// The critical values `{0 < c < d : c ≡ d (mod 2)}`, ascending.
pub fn critical_values(d: i64) -> Vec<i64> {
    if d < 1 {
        return Vec::new();
    }
    let start = if d % 2 == 0 { 2 } else { 1 };
    (start..d).step_by(2).collect()
}

pub fn is_critical(d: i64, c: i64) -> bool {
    0 < c && c < d && (d - c) % 2 == 0
}

/// Numeric shadow of a rank-2 pair `(O_C, f, E)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairInvariants {
    d: i64,
    a: i64,
    b: i64,
}

impl PairInvariants {
    /// Requires `d >= 1`, `a >= 0` and `a <= b <= max(a, d - a)`: the
    /// saturation is itself a line subbundle, and any other line subbundle
    /// injects into `O_C(D - A)`.
    pub fn new(d: i64, a: i64, b: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidPair(format!(
                "determinant degree {d} must be positive"
            )));
        }
        if a < 0 {
            return Err(Error::InvalidPair(format!(
                "zero-divisor degree {a} is negative"
            )));
        }
        if b < a || b > a.max(d - a) {
            return Err(Error::InvalidPair(format!(
                "maximal subbundle degree {b} must lie in [{a}, {}]",
                a.max(d - a)
            )));
        }
        Ok(PairInvariants { d, a, b })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// The pair itself as a triple `(O_C, f, E)`.
    pub fn as_triple(&self) -> TripleInvariants {
        TripleInvariants::new(1, 2, 0, self.d)
    }

    /// The sub-triple named by `tag`.
    pub fn subobject(&self, tag: Destabilizer) -> TripleInvariants {
        match tag {
            Destabilizer::SectionLine(a) => TripleInvariants::new(1, 1, 0, a),
            Destabilizer::PlainLine(b) => TripleInvariants::new(0, 1, 0, b),
            Destabilizer::FullBundle => TripleInvariants::new(0, 2, 0, self.d),
        }
    }

    fn candidates(&self) -> [Destabilizer; 3] {
        [
            Destabilizer::FullBundle,
            Destabilizer::SectionLine(self.a),
            Destabilizer::PlainLine(self.b),
        ]
    }
}

/// A binding or destabilizing sub-pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "degree")]
pub enum Destabilizer {
    /// `(O_C, s, O_C(A))` with `deg A` given.
    SectionLine(i64),
    /// `(0, 0, L)` with `deg L` given.
    PlainLine(i64),
    /// `(0, 0, E)`.
    FullBundle,
}

impl fmt::Display for Destabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Destabilizer::SectionLine(a) => write!(f, "(O, s, O(A)), deg A = {a}"),
            Destabilizer::PlainLine(b) => write!(f, "(0, 0, L), deg L = {b}"),
            Destabilizer::FullBundle => f.write_str("(0, 0, E)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Stable,
    StrictlySemistable,
    Unstable,
}

/// Where a strictly semistable pair sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Wall {
    /// `sigma = c = d - 2n`. Includes the endpoint `c = d` (`n = 0`).
    Critical { c: i64, n: i64 },
    /// `sigma = 0`, where every semistable pair is strictly semistable and
    /// no Jordan-Hölder filtration exists.
    Origin,
}

/// The associated graded `(O_C, s, O_C(A)) ⊕ (0, 0, O_C(D - A))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JhGraded {
    pub section_degree: i64,
    pub quotient_degree: i64,
}

impl fmt::Display for JhGraded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(O, s, O(A)) + (0, 0, O(D-A)), deg A = {}, deg(D-A) = {}",
            self.section_degree, self.quotient_degree
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub status: Status,
    pub wall: Option<Wall>,
    pub destabilizer: Option<Destabilizer>,
    pub jh_graded: Option<JhGraded>,
}

/// Classify a pair for `0 <= sigma <= d`.
pub fn classify_pair(p: &PairInvariants, sigma: &Rational) -> Result<StabilityVerdict> {
    check_sigma(p, sigma)?;
    Ok(classify_pair_unchecked(p, sigma))
}

/// Classification without the range check on `sigma`. Outside `[0, d]` every
/// pair comes out unstable.
pub fn classify_pair_unchecked(p: &PairInvariants, sigma: &Rational) -> StabilityVerdict {
    let d = Rational::from(p.d);
    let section_bound = (&d - sigma) / 2; // a < (d - sigma)/2
    let plain_bound = (&d + sigma) / 2; // b < (d + sigma)/2
    let a = Rational::from(p.a);
    let b = Rational::from(p.b);

    let section = a.cmp(&section_bound);
    let plain = b.cmp(&plain_bound);
    let full = Rational::zero().cmp(sigma);

    use std::cmp::Ordering::*;
    if section == Greater || plain == Greater || full == Greater {
        let hn = hn_filtration_unchecked(p, sigma).expect("a violated inequality destabilizes");
        return StabilityVerdict {
            status: Status::Unstable,
            wall: None,
            destabilizer: Some(hn.destabilizer),
            jh_graded: None,
        };
    }
    if section == Less && plain == Less && full == Less {
        return StabilityVerdict {
            status: Status::Stable,
            wall: None,
            destabilizer: None,
            jh_graded: None,
        };
    }

    let (destabilizer, n) = if section == Equal {
        (Destabilizer::SectionLine(p.a), Some(p.a))
    } else if plain == Equal {
        (Destabilizer::PlainLine(p.b), Some(p.d - p.b))
    } else {
        (Destabilizer::FullBundle, None)
    };
    let (wall, jh_graded) = match n {
        Some(n) => (
            Wall::Critical { c: p.d - 2 * n, n },
            Some(JhGraded {
                section_degree: n,
                quotient_degree: p.d - n,
            }),
        ),
        None => (Wall::Origin, None),
    };
    // At sigma = 0 the rank-2 subobject binds as well; the graded is still
    // reported when a line subobject also binds, but the wall is the origin.
    let wall = if sigma.is_zero() { Wall::Origin } else { wall };
    let jh_graded = if sigma.is_zero() { None } else { jh_graded };
    StabilityVerdict {
        status: Status::StrictlySemistable,
        wall: Some(wall),
        destabilizer: Some(destabilizer),
        jh_graded,
    }
}

fn check_sigma(p: &PairInvariants, sigma: &Rational) -> Result<()> {
    if sigma.is_negative() || *sigma > p.d {
        return Err(Error::SigmaOutOfRange {
            sigma: sigma.clone(),
            d: p.d,
        });
    }
    Ok(())
}

/// One subquotient `A_i / A_{i-1}` of a Harder-Narasimhan filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnPiece {
    pub label: String,
    pub invariants: TripleInvariants,
    /// `None` for the rank-0 quotient `(O_C, 0, 0)`, whose slope is `-inf`
    /// (it only occurs for `sigma < 0`).
    pub slope: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnFiltration {
    /// The maximal destabilizing subobject `A_1`.
    pub destabilizer: Destabilizer,
    /// Subquotients in order, slopes strictly decreasing.
    pub pieces: Vec<HnPiece>,
}

pub fn hn_filtration(p: &PairInvariants, sigma: &Rational) -> Result<HnFiltration> {
    check_sigma(p, sigma)?;
    hn_filtration_unchecked(p, sigma)
}

/// Harder-Narasimhan filtration with no range check on `sigma`.
pub fn hn_filtration_unchecked(p: &PairInvariants, sigma: &Rational) -> Result<HnFiltration> {
    let pair_slope = p.as_triple().mu_sigma(sigma)?;
    // Ties prefer the larger subobject: (0,0,E) first, then the section line,
    // which contains (0,0,O(A)).
    let mut best: Option<(Destabilizer, Rational)> = None;
    for tag in p.candidates() {
        let s = p.subobject(tag).mu_sigma(sigma)?;
        if s <= pair_slope {
            continue;
        }
        if best.as_ref().is_none_or(|(_, bs)| s > *bs) {
            best = Some((tag, s));
        }
    }
    let (destabilizer, top) = best.ok_or(Error::NotUnstable)?;

    let piece = |label: &str, t: TripleInvariants| HnPiece {
        label: label.to_string(),
        invariants: t,
        slope: t.mu_sigma(sigma).ok(),
    };
    let section_only = TripleInvariants::new(1, 0, 0, 0);
    let pieces = match destabilizer {
        Destabilizer::FullBundle => vec![
            HnPiece {
                label: "(0, 0, E)".into(),
                invariants: p.subobject(destabilizer),
                slope: Some(top),
            },
            piece("(O, 0, 0)", section_only),
        ],
        Destabilizer::SectionLine(a) => vec![
            HnPiece {
                label: "(O, s, O(A))".into(),
                invariants: p.subobject(destabilizer),
                slope: Some(top),
            },
            piece("(0, 0, O(D-A))", TripleInvariants::new(0, 1, 0, p.d - a)),
        ],
        Destabilizer::PlainLine(b) => {
            let first = HnPiece {
                label: "(0, 0, L)".into(),
                invariants: p.subobject(destabilizer),
                slope: Some(top),
            };
            if sigma.is_negative() {
                // The rank-1 quotient pair is itself destabilized by its bundle.
                vec![
                    first,
                    piece("(0, 0, O(D-L))", TripleInvariants::new(0, 1, 0, p.d - b)),
                    piece("(O, 0, 0)", section_only),
                ]
            } else {
                vec![
                    first,
                    piece("(O, f, O(D-L))", TripleInvariants::new(1, 1, 0, p.d - b)),
                ]
            }
        }
    };
    Ok(HnFiltration {
        destabilizer,
        pieces,
    })
}

/// A connected component of `(0, d) - Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub low: Rational,
    pub high: Rational,
    /// Tower index `k` with `M_sigma ≅ X_k` for sigma in the chamber.
    pub index: i64,
}

impl Chamber {
    /// Chamber of `X_k`: `(max(d - 2k - 2, 0), d - 2k)`.
    pub fn of_index(d: i64, k: i64) -> Result<Chamber> {
        let top = (d - 1).div_euclid(2);
        if d < 1 || k < 0 || k > top {
            return Err(Error::out_of_range(
                "tower index",
                format!("k = {k} for d = {d}"),
            ));
        }
        Ok(Chamber {
            low: Rational::from((d - 2 * k - 2).max(0)),
            high: Rational::from(d - 2 * k),
            index: k,
        })
    }

    /// Midpoint, the representative sigma of the chamber.
    pub fn representative(&self) -> Rational {
        self.low.midpoint(&self.high)
    }

    pub fn contains(&self, sigma: &Rational) -> bool {
        *sigma > self.low && *sigma < self.high
    }
}

pub fn chamber_of(sigma: &Rational, d: i64) -> Result<Chamber> {
    if !sigma.is_positive() || *sigma >= d {
        return Err(Error::out_of_range(
            "sigma",
            format!("{sigma} is not inside (0, {d})"),
        ));
    }
    if let Some(c) = sigma.to_i64() {
        if is_critical(d, c) {
            return Err(Error::OnWall {
                sigma: sigma.clone(),
            });
        }
    }
    // smallest critical value (or d) above sigma
    let high = critical_values(d)
        .into_iter()
        .find(|&c| *sigma < c)
        .unwrap_or(d);
    Chamber::of_index(d, (d - high) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pair(d: i64, a: i64, b: i64) -> PairInvariants {
        PairInvariants::new(d, a, b).unwrap()
    }

    #[test]
    fn slope_formula() {
        let t = TripleInvariants::new(1, 2, 0, 4);
        assert_eq!(t.mu_sigma(&q("2")).unwrap(), q("5"));
        // (0,0,L): b + sigma; (O,s,O(A)): a + 2 sigma
        for s in ["0", "3/7", "-2", "11/2"] {
            let s = q(s);
            assert_eq!(
                TripleInvariants::new(0, 1, 0, 7).mu_sigma(&s).unwrap(),
                &s + 7
            );
            assert_eq!(
                TripleInvariants::new(1, 1, 0, 3).mu_sigma(&s).unwrap(),
                &s * 2 + 3
            );
        }
        assert_eq!(
            TripleInvariants::new(1, 0, 0, 0).mu_sigma(&q("1")),
            Err(Error::DegenerateTriple)
        );
    }

    #[test]
    fn critical_sets() {
        assert_eq!(critical_values(5), vec![1, 3]);
        assert_eq!(critical_values(4), vec![2]);
        assert!(critical_values(1).is_empty());
        assert!(critical_values(2).is_empty());
        assert!(critical_values(0).is_empty());
    }

    #[test]
    fn pair_validation() {
        assert!(PairInvariants::new(0, 0, 0).is_err());
        assert!(PairInvariants::new(4, -1, 2).is_err());
        assert!(PairInvariants::new(4, 2, 1).is_err());
        assert!(PairInvariants::new(4, 1, 4).is_err());
        assert!(PairInvariants::new(4, 3, 3).is_ok());
        assert!(PairInvariants::new(4, 0, 4).is_ok());
    }

    #[test]
    fn wall_at_sigma_two() {
        let v = classify_pair(&pair(4, 1, 2), &q("2")).unwrap();
        assert_eq!(v.status, Status::StrictlySemistable);
        assert_eq!(v.wall, Some(Wall::Critical { c: 2, n: 1 }));
        assert_eq!(v.destabilizer, Some(Destabilizer::SectionLine(1)));
        assert_eq!(
            v.jh_graded,
            Some(JhGraded {
                section_degree: 1,
                quotient_degree: 3
            })
        );
    }

    #[test]
    fn stable_inside_a_chamber() {
        let v = classify_pair(&pair(5, 0, 2), &q("1/2")).unwrap();
        assert_eq!(v.status, Status::Stable);
        assert_eq!(v.wall, None);
        assert_eq!(v.destabilizer, None);
    }

    #[test]
    fn at_sigma_d_semistable_iff_section_has_no_zeros() {
        for d in 1..10 {
            for a in 0..=d {
                for b in a..=a.max(d - a) {
                    let v = classify_pair(&pair(d, a, b), &Rational::from(d)).unwrap();
                    if a == 0 {
                        assert_eq!(v.status, Status::StrictlySemistable);
                        assert_eq!(v.wall, Some(Wall::Critical { c: d, n: 0 }));
                        assert_eq!(
                            v.jh_graded,
                            Some(JhGraded {
                                section_degree: 0,
                                quotient_degree: d
                            })
                        );
                    } else {
                        assert_eq!(v.status, Status::Unstable);
                    }
                }
            }
        }
    }

    #[test]
    fn never_stable_at_zero() {
        for d in 1..10 {
            for a in 0..=d {
                for b in a..=a.max(d - a) {
                    let v = classify_pair(&pair(d, a, b), &Rational::zero()).unwrap();
                    assert_ne!(v.status, Status::Stable);
                    if v.status == Status::StrictlySemistable {
                        assert_eq!(v.wall, Some(Wall::Origin));
                        assert!(2 * b <= d);
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_range_is_enforced() {
        let p = pair(4, 0, 2);
        assert!(matches!(
            classify_pair(&p, &q("-1/3")),
            Err(Error::SigmaOutOfRange { .. })
        ));
        assert!(matches!(
            classify_pair(&p, &q("9/2")),
            Err(Error::SigmaOutOfRange { .. })
        ));
        assert_eq!(
            classify_pair_unchecked(&p, &q("9/2")).status,
            Status::Unstable
        );
    }

    #[test]
    fn hn_section_line() {
        let hn = hn_filtration(&pair(4, 3, 3), &q("3")).unwrap();
        assert_eq!(hn.destabilizer, Destabilizer::SectionLine(3));
        assert_eq!(hn.pieces[0].slope, Some(q("9")));
        assert_eq!(hn.pieces[1].slope, Some(q("4")));
    }

    #[test]
    fn hn_full_bundle_for_negative_sigma() {
        let hn = hn_filtration_unchecked(&pair(4, 0, 2), &q("-1")).unwrap();
        assert_eq!(hn.destabilizer, Destabilizer::FullBundle);
        assert_eq!(hn.pieces.len(), 2);
        assert_eq!(hn.pieces[0].slope, Some(q("1")));
        assert_eq!(hn.pieces[1].slope, None);
        assert!(hn_filtration(&pair(4, 0, 2), &q("-1")).is_err());
    }

    #[test]
    fn hn_plain_line() {
        let hn = hn_filtration(&pair(6, 0, 5), &q("1")).unwrap();
        assert_eq!(hn.destabilizer, Destabilizer::PlainLine(5));
        assert_eq!(hn.pieces[0].slope, Some(q("6")));
        assert!(hn.pieces[0].slope > Some(q("9/2")));
        assert_eq!(hn.pieces[1].slope, Some(q("3")));
        // three steps once sigma < 0
        let hn = hn_filtration_unchecked(&pair(6, 0, 5), &q("-1/2")).unwrap();
        assert_eq!(hn.pieces.len(), 3);
    }

    #[test]
    fn hn_rejects_semistable_pairs() {
        assert_eq!(
            hn_filtration(&pair(5, 0, 2), &q("1/2")),
            Err(Error::NotUnstable)
        );
        assert_eq!(
            hn_filtration(&pair(4, 1, 2), &q("2")),
            Err(Error::NotUnstable)
        );
    }

    #[test]
    fn chambers() {
        let c = chamber_of(&q("2"), 5).unwrap();
        assert_eq!(
            (c.low.clone(), c.high.clone(), c.index),
            (q("1"), q("3"), 1)
        );
        assert_eq!(c.representative(), q("2"));
        let c = chamber_of(&q("3"), 4).unwrap();
        assert_eq!((c.low, c.high, c.index), (q("2"), q("4"), 0));
        assert_eq!(chamber_of(&q("2"), 4), Err(Error::OnWall { sigma: q("2") }));
        assert!(chamber_of(&q("0"), 4).is_err());
        assert!(chamber_of(&q("4"), 4).is_err());
        let c = chamber_of(&q("1/3"), 7).unwrap();
        assert_eq!((c.low, c.high, c.index), (q("0"), q("1"), 3));
    }

    /// Slope-comparison oracle: enumerate every sub-pair type directly and
    /// compare `mu_sigma` values, without the closed-form inequalities.
    fn oracle(p: &PairInvariants, sigma: &Rational) -> Status {
        let whole = p.as_triple().mu_sigma(sigma).unwrap();
        let mut subs = vec![
            TripleInvariants::new(1, 1, 0, p.a()),
            TripleInvariants::new(0, 2, 0, p.d()),
        ];
        // (0,0,O(A)) and a maximal line subbundle; smaller ones only lower the slope
        subs.extend([p.a(), p.b()].map(|deg| TripleInvariants::new(0, 1, 0, deg)));
        let slopes: Vec<Rational> = subs.iter().map(|t| t.mu_sigma(sigma).unwrap()).collect();
        if slopes.iter().any(|s| *s > whole) {
            Status::Unstable
        } else if slopes.contains(&whole) {
            Status::StrictlySemistable
        } else {
            Status::Stable
        }
    }

    #[test]
    fn inequality_form_matches_slope_oracle() {
        for d in 1..=12 {
            for a in 0..=d {
                for b in a..=a.max(d - a) {
                    let p = pair(d, a, b);
                    for j in 0..=4 * d {
                        let sigma = Rational::frac(j, 4);
                        let v = classify_pair(&p, &sigma).unwrap();
                        assert_eq!(
                            v.status,
                            oracle(&p, &sigma),
                            "d={d} a={a} b={b} sigma={sigma}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn strictly_semistable_only_on_walls() {
        for d in 1..=12 {
            for a in 0..=d {
                for b in a..=a.max(d - a) {
                    let p = pair(d, a, b);
                    for j in 0..=8 * d {
                        let sigma = Rational::frac(j, 8);
                        let v = classify_pair(&p, &sigma).unwrap();
                        if v.status == Status::StrictlySemistable {
                            let c = sigma.to_i64().expect("walls are integral");
                            assert!(c == 0 || c == d || is_critical(d, c));
                        }
                        assert_eq!(v.wall.is_some(), v.status == Status::StrictlySemistable);
                        assert_eq!(v.destabilizer.is_some(), v.status != Status::Stable);
                    }
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn seesaw(r1b in 0u32..4, r2b in 1u32..4, d1b in -20i64..20, d2b in -20i64..20,
                  r1c in 0u32..4, r2c in 1u32..4, d1c in -20i64..20, d2c in -20i64..20,
                  sn in -40i64..40, sd in 1i64..12) {
            let b = TripleInvariants::new(r1b, r2b, d1b, d2b);
            let c = TripleInvariants::new(r1c, r2c, d1c, d2c);
            let a = b + c;
            let sigma = Rational::frac(sn, sd);
            let (mb, ma, mc) = (b.mu_sigma(&sigma).unwrap(), a.mu_sigma(&sigma).unwrap(), c.mu_sigma(&sigma).unwrap());
            let lt = mb < ma && ma < mc;
            let eq = mb == ma && ma == mc;
            let gt = mb > ma && ma > mc;
            proptest::prop_assert_eq!(u8::from(lt) + u8::from(eq) + u8::from(gt), 1);
        }

        #[test]
        fn constant_on_chambers(d in 1i64..14, a_seed in 0i64..100, b_seed in 0i64..100, k_seed in 0i64..100) {
            let a = a_seed % (d + 1);
            let hi = a.max(d - a);
            let b = a + b_seed % (hi - a + 1);
            let p = pair(d, a, b);
            let k = k_seed % ((d - 1) / 2 + 1);
            let ch = Chamber::of_index(d, k).unwrap();
            let width = &ch.high - &ch.low;
            let reference = classify_pair(&p, &ch.representative()).unwrap();
            for i in 1..=7 {
                let s = &ch.low + &(&width * Rational::frac(i, 8));
                proptest::prop_assert!(ch.contains(&s));
                proptest::prop_assert_eq!(&classify_pair(&p, &s).unwrap(), &reference);
                proptest::prop_assert_eq!(chamber_of(&s, d).unwrap().index, k);
            }
        }
    }
}
