//! Genus-0 catalecticant laboratory.
//!
//! For `C = P^1` and `deg D = d`, `|K_C + D|* = P^{d-2}` with coordinates
//! `z_1, ..., z_{d-1}`, and `C` sits inside as the rational normal curve
//! `t ↦ (1, t, ..., t^{d-2})`. With monomial bases, the matrix of linear
//! forms attached to `L^{-1} = O(-k-1)` is the `k × (d-k)` Hankel matrix with
//! entry `(i, j) = z_{i+j-1}`. Its rank at a point detects the secant
//! stratum the point lies on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Order, PolyMatrix, RatMatrix, Rational, RationalSampler, UniPoly};

fn check_degree(d: i64) -> Result<usize> {
    if d < 3 {
        return Err(Error::out_of_range(
            "degree",
            format!("d = {d}; the lab needs d >= 3"),
        ));
    }
    Ok(d as usize)
}

/// A parameter on `P^1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurveParam {
    Finite(Rational),
    Infinity,
}

impl From<Rational> for CurveParam {
    fn from(t: Rational) -> Self {
        CurveParam::Finite(t)
    }
}

/// Point of `P^{d-2}`, normalized so the first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ProjPoint {
    coords: Vec<Rational>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(Error::ZeroPoint)?;
        let coords = coords.iter().map(|c| c / &lead).collect();
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    fn check_ambient(&self, d: usize) -> Result<()> {
        if self.coords.len() != d - 1 {
            return Err(Error::out_of_range(
                "point",
                format!(
                    "{} coordinates given, P^{} needs {}",
                    self.coords.len(),
                    d - 2,
                    d - 1
                ),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(" : ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Veronese vector `(1, t, ..., t^{d-2})`, not normalized.
fn veronese(d: usize, t: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(d - 1);
    let mut power = Rational::one();
    for _ in 0..d - 1 {
        out.push(power.clone());
        power = &power * t;
    }
    out
}

/// The point of the rational normal curve with parameter `t`.
pub fn rnc_point(d: i64, t: &CurveParam) -> Result<ProjPoint> {
    let d = check_degree(d)?;
    match t {
        CurveParam::Finite(t) => ProjPoint::new(veronese(d, t)),
        CurveParam::Infinity => {
            let mut coords = vec![Rational::zero(); d - 1];
            coords[d - 2] = Rational::one();
            ProjPoint::new(coords)
        }
    }
}

/// The point `Σ λ_m ν(t_m)` in the span of the reduced divisor
/// `t_1 + ... + t_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWitness", into = "RawWitness")]
pub struct SecantWitness {
    params: Vec<Rational>,
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawWitness {
    t: Vec<Rational>,
    #[serde(default)]
    coeffs: Option<Vec<Rational>>,
}

impl TryFrom<RawWitness> for SecantWitness {
    type Error = Error;
    fn try_from(raw: RawWitness) -> Result<Self> {
        match raw.coeffs {
            Some(c) => SecantWitness::new(raw.t, c),
            None => SecantWitness::unit(raw.t),
        }
    }
}

impl From<SecantWitness> for RawWitness {
    fn from(w: SecantWitness) -> Self {
        RawWitness {
            t: w.params,
            coeffs: Some(w.coeffs),
        }
    }
}

impl SecantWitness {
    pub fn new(params: Vec<Rational>, coeffs: Vec<Rational>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::InvalidWitness("no curve parameters".into()));
        }
        if params.len() != coeffs.len() {
            return Err(Error::InvalidWitness(format!(
                "{} parameters but {} coefficients",
                params.len(),
                coeffs.len()
            )));
        }
        for (i, t) in params.iter().enumerate() {
            if params[..i].contains(t) {
                return Err(Error::DuplicateParameter(t.clone()));
            }
        }
        if coeffs.iter().any(Rational::is_zero) {
            return Err(Error::InvalidWitness("coefficients must be nonzero".into()));
        }
        Ok(SecantWitness { params, coeffs })
    }

    /// All coefficients 1.
    pub fn unit(params: Vec<Rational>) -> Result<Self> {
        let coeffs = vec![Rational::one(); params.len()];
        Self::new(params, coeffs)
    }

    /// Random witness of `i` distinct points with nonzero coefficients.
    pub fn random(i: usize, sampler: &mut RationalSampler) -> Self {
        let params = sampler.distinct_rationals(i);
        let coeffs = (0..i).map(|_| sampler.nonzero_rational()).collect();
        SecantWitness::new(params, coeffs).expect("sampled witness is valid")
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Number of points `i`; the witnessed point lies on `Σ_i`.
    pub fn degree(&self) -> usize {
        self.params.len()
    }
}

pub fn secant_point(d: i64, w: &SecantWitness) -> Result<ProjPoint> {
    let d = check_degree(d)?;
    let mut sum = vec![Rational::zero(); d - 1];
    for (t, lambda) in w.params.iter().zip(&w.coeffs) {
        for (s, v) in sum.iter_mut().zip(veronese(d, t)) {
            *s += &(lambda * &v);
        }
    }
    ProjPoint::new(sum)
}

/// Random point of `P^{d-2}` with all coordinates sampled.
pub fn random_point(d: i64, sampler: &mut RationalSampler) -> Result<ProjPoint> {
    let d = check_degree(d)?;
    loop {
        if let Ok(p) = ProjPoint::new((0..d - 1).map(|_| sampler.rational()).collect()) {
            return Ok(p);
        }
    }
}

fn check_rows(d: usize, k: i64) -> Result<usize> {
    if k < 1 || k as usize >= d {
        return Err(Error::out_of_range(
            "rows",
            format!("k = {k} must lie in 1..={}", d - 1),
        ));
    }
    Ok(k as usize)
}

/// `k × (d - k)` matrix with entry `(i, j) = coords[i + j]` (0-based), over any
/// entry type.
pub fn catalecticant<T: Clone>(d: i64, k: i64, coords: &[T]) -> Result<Matrix<T>> {
    let d = check_degree(d)?;
    let k = check_rows(d, k)?;
    if coords.len() != d - 1 {
        return Err(Error::out_of_range(
            "point",
            format!("{} coordinates, expected {}", coords.len(), d - 1),
        ));
    }
    Ok(Matrix::from_fn(k, d - k, |i, j| coords[i + j].clone()))
}

pub fn hankel_matrix(d: i64, k: i64, p: &ProjPoint) -> Result<RatMatrix> {
    p.check_ambient(check_degree(d)?)?;
    catalecticant(d, k, p.coords())
}

pub fn hankel_rank(d: i64, k: i64, p: &ProjPoint) -> Result<usize> {
    Ok(hankel_matrix(d, k, p)?.rank())
}

/// The Hankel matrix along the curve itself: `z_i = t^{i-1}` as polynomials.
pub fn symbolic_curve_hankel(d: i64, k: i64) -> Result<PolyMatrix> {
    let n = check_degree(d)?;
    let coords: Vec<UniPoly> = (0..n - 1)
        .map(|e| UniPoly::monomial(Rational::one(), e))
        .collect();
    catalecticant(d, k, &coords)
}

/// Splitting type `(m, d - m)` of the extension bundle at `p`, with `m` the
/// rank of the maximal catalecticant (`k = floor(d/2)`).
pub fn splitting_type(d: i64, p: &ProjPoint) -> Result<(i64, i64)> {
    let m = hankel_rank(d, d / 2, p)? as i64;
    Ok((m, d - m))
}

/// Validate a 1-based column multi-index for a `k × k` minor of the
/// `k × (d - k)` matrix; returns 0-based columns.
pub fn check_multi_index(d: i64, k: i64, cols: &[usize]) -> Result<Vec<usize>> {
    let n = check_degree(d)?;
    let k = check_rows(n, k)?;
    let width = n - k;
    if cols.len() != k {
        return Err(Error::InvalidMultiIndex(format!(
            "{} columns given, a {k}x{k} minor needs {k}",
            cols.len()
        )));
    }
    if cols.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidMultiIndex(format!(
            "{cols:?} is not strictly increasing"
        )));
    }
    if cols.first().is_some_and(|&c| c < 1) || cols.last().is_some_and(|&c| c > width) {
        return Err(Error::InvalidMultiIndex(format!(
            "{cols:?} must lie within 1..={width}"
        )));
    }
    Ok(cols.iter().map(|c| c - 1).collect())
}

/// Every 1-based column multi-index of size `k` within `1..=d-k`.
pub fn column_multi_indices(d: i64, k: i64) -> Vec<Vec<usize>> {
    fn rec(
        start: usize,
        width: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for c in start..=width {
            if width - c + 1 < left {
                break;
            }
            cur.push(c);
            rec(c + 1, width, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && d - k >= k {
        rec(1, (d - k) as usize, k as usize, &mut Vec::new(), &mut out);
    }
    out
}

/// `det` of the minor on columns `cols` restricted to the line `t ↦ p + t v`.
pub fn det_along_line(
    d: i64,
    k: i64,
    cols: &[usize],
    p: &ProjPoint,
    v: &[Rational],
) -> Result<UniPoly> {
    let n = check_degree(d)?;
    p.check_ambient(n)?;
    if v.len() != n - 1 {
        return Err(Error::out_of_range(
            "direction",
            format!("{} coordinates, expected {}", v.len(), n - 1),
        ));
    }
    let cols0 = check_multi_index(d, k, cols)?;
    let line: Vec<UniPoly> = p
        .coords()
        .iter()
        .zip(v)
        .map(|(a, b)| UniPoly::linear(a.clone(), b.clone()))
        .collect();
    let full = catalecticant(d, k, &line)?;
    let rows: Vec<usize> = (0..k as usize).collect();
    full.select(&rows, &cols0).det()
}

/// Vanishing order of the minor's determinant at `p`, measured along
/// `probes` seeded random lines through `p`; the minimum is reported.
/// `Order::Infinite` means the determinant vanished identically on every
/// probe.
pub fn det_multiplicity(
    d: i64,
    k: i64,
    cols: &[usize],
    p: &ProjPoint,
    probes: usize,
    sampler: &mut RationalSampler,
) -> Result<Order> {
    if probes == 0 {
        return Err(Error::out_of_range(
            "probes",
            "at least one probe line is needed",
        ));
    }
    let n = check_degree(d)?;
    check_multi_index(d, k, cols)?;
    let mut best = Order::Infinite;
    for _ in 0..probes {
        let v: Vec<Rational> = (0..n - 1).map(|_| sampler.rational()).collect();
        let order = det_along_line(d, k, cols, p, &v)?.vanishing_order();
        best = best.min(order);
    }
    Ok(best)
}

/// A class `h H - e_1 E^(1) - e_2 E^(2) - ...` on the iterated blow-up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeriesClass {
    pub h: i64,
    /// `e[j-1]` is the multiplicity along `Σ_j`; trailing zeros dropped.
    pub e: Vec<i64>,
}

impl SeriesClass {
    /// Plain-ASCII rendering, e.g. `3H - 2E(1) - E(2)`.
    pub fn to_ascii(&self) -> String {
        self.render(" - ", |j| format!("({j})"))
    }

    fn render(&self, minus: &str, sup: impl Fn(usize) -> String) -> String {
        let mut s = format!(
            "{}H",
            if self.h == 1 {
                String::new()
            } else {
                self.h.to_string()
            }
        );
        for (idx, &c) in self.e.iter().enumerate() {
            if c == 0 {
                continue;
            }
            s.push_str(minus);
            if c != 1 {
                s.push_str(&c.to_string());
            }
            s.push('E');
            s.push_str(&sup(idx + 1));
        }
        s
    }
}

fn superscript(j: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let digits: String = j
        .to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect();
    format!("⁽{digits}⁾")
}

impl fmt::Display for SeriesClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(" \u{2212} ", superscript))
    }
}

/// Class of `det M_I(L^{-1})` for a `k × k` minor: `kH - (k-1)E^(1) - ... - E^(k-1)`.
pub fn divisor_class_of_minor(d: i64, k: i64) -> Result<SeriesClass> {
    check_degree(d)?;
    if k < 1 || k > d / 2 {
        return Err(Error::out_of_range(
            "rows",
            format!("k = {k} must lie in 1..={}", d / 2),
        ));
    }
    Ok(SeriesClass {
        h: k,
        e: (1..k).map(|j| k - j).collect(),
    })
}

/// Class of `det M_J(F^{-1})` for a rank-2 `F` with `h^1(F^{-1}) = l`:
/// `lH - (l-2)E^(1) - (l-4)E^(2) - ...`, coefficients stopping at 0.
pub fn divisor_class_of_w_minor(d: i64, l: i64) -> Result<SeriesClass> {
    check_degree(d)?;
    if l < 1 || l > d {
        return Err(Error::out_of_range(
            "size",
            format!("l = {l} must lie in 1..={d}"),
        ));
    }
    Ok(SeriesClass {
        h: l,
        e: (1..).map(|j| l - 2 * j).take_while(|&c| c > 0).collect(),
    })
}

/// `(h^1(L^{-1}), h^0(L^{-1}(D))) = (k, d - k)`: the shape of `M(L^{-1})`.
pub fn minor_shape(d: i64, k: i64) -> (i64, i64) {
    (k, d - k)
}

/// `(h^1(F^{-1}), h^0(F^{-1}(D))) = (l, 2d - l)`: the shape of `M(F^{-1})`.
pub fn w_minor_shape(d: i64, l: i64) -> (i64, i64) {
    (l, 2 * d - l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn curve_points() {
        assert_eq!(
            rnc_point(5, &q("0").into()).unwrap().coords(),
            ints(&[1, 0, 0, 0])
        );
        assert_eq!(
            rnc_point(5, &q("2").into()).unwrap().coords(),
            ints(&[1, 2, 4, 8])
        );
        assert_eq!(
            rnc_point(5, &CurveParam::Infinity).unwrap().coords(),
            ints(&[0, 0, 0, 1])
        );
        assert!(rnc_point(2, &q("1").into()).is_err());
    }

    #[test]
    fn normalization() {
        let p = ProjPoint::new(ints(&[0, 3, 6])).unwrap();
        assert_eq!(p.coords(), ints(&[0, 1, 2]));
        assert_eq!(ProjPoint::new(ints(&[0, 0])), Err(Error::ZeroPoint));
    }

    #[test]
    fn secant_points() {
        let w = SecantWitness::unit(vec![q("0"), q("1")]).unwrap();
        let p = secant_point(6, &w).unwrap();
        assert_eq!(p, ProjPoint::new(ints(&[2, 1, 1, 1, 1])).unwrap());
        let w = SecantWitness::new(vec![q("0")], vec![q("1")]).unwrap();
        assert_eq!(
            secant_point(6, &w).unwrap(),
            rnc_point(6, &q("0").into()).unwrap()
        );
        assert_eq!(
            SecantWitness::unit(vec![q("1"), q("1")]),
            Err(Error::DuplicateParameter(q("1")))
        );
        assert!(SecantWitness::new(vec![q("1")], vec![q("0")]).is_err());
        assert!(SecantWitness::new(vec![q("1")], vec![]).is_err());
    }

    #[test]
    fn witness_json() {
        let w: SecantWitness =
            serde_json::from_str(r#"{"t": ["0","1","5/2"], "coeffs": ["1","−1","3"]}"#).unwrap();
        assert_eq!(w.coeffs(), &[q("1"), q("-1"), q("3")]);
        let w: SecantWitness = serde_json::from_str(r#"{"t": ["0","1"]}"#).unwrap();
        assert_eq!(w.coeffs(), &[q("1"), q("1")]);
        assert!(serde_json::from_str::<SecantWitness>(r#"{"t": ["0","0"]}"#).is_err());
    }

    #[test]
    fn hankel_ranks() {
        let mut s = RationalSampler::with_seed(3);
        let curve = rnc_point(6, &q("3/5").into()).unwrap();
        assert_eq!(hankel_rank(6, 3, &curve).unwrap(), 1);
        let two = secant_point(6, &SecantWitness::random(2, &mut s)).unwrap();
        assert_eq!(hankel_rank(6, 3, &two).unwrap(), 2);
        let generic = random_point(6, &mut s).unwrap();
        assert_eq!(hankel_rank(6, 3, &generic).unwrap(), 3);

        let p = secant_point(10, &SecantWitness::random(2, &mut s)).unwrap();
        assert_eq!(hankel_rank(10, 4, &p).unwrap(), 2);
        assert_eq!(
            hankel_rank(10, 4, &random_point(10, &mut s).unwrap()).unwrap(),
            4
        );

        let m = hankel_matrix(6, 3, &curve).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert!(hankel_matrix(6, 0, &curve).is_err());
        assert!(hankel_matrix(6, 6, &curve).is_err());
        assert!(hankel_matrix(7, 3, &curve).is_err());
    }

    #[test]
    fn hankel_entries() {
        let p = ProjPoint::new(ints(&[1, 2, 3, 4, 5])).unwrap();
        let m = hankel_matrix(6, 2, &p).unwrap();
        assert_eq!(
            m.to_string_rows(),
            vec![vec!["1", "2", "3", "4"], vec!["2", "3", "4", "5"]]
        );
    }

    #[test]
    fn splitting_types() {
        let mut s = RationalSampler::with_seed(5);
        assert_eq!(
            splitting_type(6, &rnc_point(6, &q("2").into()).unwrap()).unwrap(),
            (1, 5)
        );
        let p = secant_point(6, &SecantWitness::random(2, &mut s)).unwrap();
        assert_eq!(splitting_type(6, &p).unwrap(), (2, 4));
        assert_eq!(
            splitting_type(6, &random_point(6, &mut s).unwrap()).unwrap(),
            (3, 3)
        );
        assert_eq!(
            splitting_type(7, &random_point(7, &mut s).unwrap()).unwrap(),
            (3, 4)
        );
        for d in 3..13 {
            for _ in 0..5 {
                let (m, rest) = splitting_type(d, &random_point(d, &mut s).unwrap()).unwrap();
                assert_eq!(m + rest, d);
                assert!(m <= d / 2);
            }
        }
    }

    #[test]
    fn multi_indices() {
        assert_eq!(column_multi_indices(6, 3), vec![vec![1, 2, 3]]);
        assert_eq!(column_multi_indices(8, 3).len(), 10);
        assert!(check_multi_index(6, 3, &[1, 2, 3]).is_ok());
        assert!(check_multi_index(6, 3, &[1, 2]).is_err());
        assert!(check_multi_index(6, 3, &[1, 3, 2]).is_err());
        assert!(check_multi_index(6, 3, &[2, 3, 4]).is_err());
        assert!(check_multi_index(8, 3, &[0, 1, 2]).is_err());
    }

    #[test]
    fn square_determinant_on_secant_lines() {
        let mut s = RationalSampler::with_seed(9);
        let w = SecantWitness::random(2, &mut s);
        let p = secant_point(6, &w).unwrap();
        // a line inside span(A) stays in Σ_2
        let other = secant_point(
            6,
            &SecantWitness::new(w.params().to_vec(), vec![q("1"), q("-2")]).unwrap(),
        )
        .unwrap();
        let det = det_along_line(6, 3, &[1, 2, 3], &p, other.coords()).unwrap();
        assert_eq!(det.vanishing_order(), Order::Infinite);
        // a generic line leaves Σ_2 but starts on it
        let order = det_multiplicity(6, 3, &[1, 2, 3], &p, 4, &mut s).unwrap();
        assert!(matches!(order, Order::Finite(o) if o >= 1));
        // on the curve the order is at least k - 1 = 2
        let c = rnc_point(6, &q("1/2").into()).unwrap();
        let order = det_multiplicity(6, 3, &[1, 2, 3], &c, 4, &mut s).unwrap();
        assert_eq!(order, Order::Finite(2));
        assert!(det_multiplicity(6, 3, &[1, 2, 3], &c, 0, &mut s).is_err());
    }

    #[test]
    fn some_minor_is_nonzero_at_a_generic_point() {
        let mut s = RationalSampler::with_seed(13);
        for _ in 0..5 {
            let p = random_point(8, &mut s).unwrap();
            let orders: Vec<Order> = column_multi_indices(8, 3)
                .iter()
                .map(|cols| det_multiplicity(8, 3, cols, &p, 1, &mut s).unwrap())
                .collect();
            assert!(orders.contains(&Order::Finite(0)));
        }
    }

    #[test]
    fn classes() {
        assert_eq!(
            divisor_class_of_minor(8, 3).unwrap().to_string(),
            "3H − 2E⁽¹⁾ − E⁽²⁾"
        );
        assert_eq!(
            divisor_class_of_minor(8, 3).unwrap().to_ascii(),
            "3H - 2E(1) - E(2)"
        );
        assert_eq!(
            divisor_class_of_w_minor(8, 4).unwrap().to_string(),
            "4H − 2E⁽¹⁾"
        );
        assert_eq!(divisor_class_of_minor(8, 1).unwrap().to_string(), "H");
        assert_eq!(divisor_class_of_w_minor(30, 25).unwrap().e.len(), 12);
        assert!(divisor_class_of_w_minor(30, 25)
            .unwrap()
            .to_string()
            .ends_with("E⁽¹²⁾"));
        assert!(divisor_class_of_minor(8, 5).is_err());
        assert_eq!(minor_shape(9, 4), (4, 5));
        assert_eq!(w_minor_shape(9, 4), (4, 14));
    }

    #[test]
    fn deficient_rank_matches_terracini_fiber() {
        use crate::tower::terracini_fiber_dim;
        let mut s = RationalSampler::with_seed(17);
        for d in 5..=12 {
            for i in 1..=(d - 1) / 2 {
                let p = secant_point(d, &SecantWitness::random(i as usize, &mut s)).unwrap();
                // first row count where the rank falls short
                let first_deficient =
                    (1..=d / 2).find(|&k| hankel_rank(d, k, &p).unwrap() < k as usize);
                if (i + 1) <= d / 2 {
                    assert_eq!(first_deficient, Some(i + 1));
                    let m = hankel_matrix(d, i + 1, &p).unwrap();
                    let corank = m.cols() as i64 - m.rank() as i64;
                    assert_eq!(
                        corank,
                        terracini_fiber_dim(0, d, i).unwrap() + 1,
                        "d={d} i={i}"
                    );
                }
            }
        }
    }
}
