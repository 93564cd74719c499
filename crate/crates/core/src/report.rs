//! Report values shared by the command-line front end: canonical JSON and
//! human-readable text.

use num_integer::Integer;
use serde::Serialize;
use serde_json::Value;

use crate::construction::Point;
use crate::geometry::DensityReport;
use crate::latticeness::{LatticeVerdict, Witness};

pub const SCHEMA_VERSION: u32 = 1;

/// Canonical JSON: object keys sorted, pretty-printed, trailing newline.
pub fn to_canonical_json<T: Serialize>(command: &str, body: &T) -> String {
    let mut value = serde_json::to_value(body).expect("reports serialize");
    if let Value::Object(map) = &mut value {
        map.insert("schema_version".into(), SCHEMA_VERSION.into());
        map.insert("command".into(), command.into());
    }
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

/// Six significant digits.
pub fn sig6(x: f64) -> String {
    sig(x, 6)
}

pub fn sig(x: f64, digits: i32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..6).contains(&e) {
        let decimals = (digits - 1 - e).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{:.*e}", (digits - 1) as usize, x)
    }
}

pub fn fmt_point(p: &[i64]) -> String {
    let inner: Vec<String> = p.iter().map(i64::to_string).collect();
    format!("({})", inner.join(","))
}

pub fn fmt_points(ps: &[Point]) -> String {
    ps.iter().map(|p| fmt_point(p)).collect::<Vec<_>>().join(" ")
}

/// `a/b` divided by `c/d`, reduced, if it fits.
pub fn fraction_ratio(a: (u128, u128), b: (u128, u128)) -> Option<(u128, u128)> {
    let (n1, d1) = a;
    let (n2, d2) = b;
    if n2 == 0 {
        return None;
    }
    let g1 = n1.gcd(&n2).max(1);
    let g2 = d2.gcd(&d1).max(1);
    let num = (n1 / g1).checked_mul(d2 / g2)?;
    let den = (d1 / g2).checked_mul(n2 / g1)?;
    Some((num, den))
}

pub fn fmt_fraction((num, den): (u128, u128)) -> String {
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

/// One density line: float, exact center density and the ball-volume factor.
pub fn density_line(label: &str, d: &DensityReport) -> String {
    let exact = d
        .center_density_exact
        .as_deref()
        .map(|f| format!(" = V_{} * {f}", d.dimension))
        .unwrap_or_default();
    format!(
        "{label}: density {}{exact}, V_{} = {}  (d^2 = {}, M = {} per period)",
        sig6(d.packing_density),
        d.dimension,
        d.ball_volume_formula,
        d.min_distance_sq,
        d.points_per_period
    )
}

/// JSON shape of a verdict witness: point pairs become `[[..],[..]]`.
pub fn witness_value(v: &LatticeVerdict) -> (Value, Option<Point>) {
    match &v.witness {
        None => (Value::Null, None),
        Some(Witness::PointPair { pair, sum }) => (serde_json::to_value(pair).expect("points"), Some(sum.clone())),
        Some(w) => (serde_json::to_value(w).expect("witness"), None),
    }
}

pub fn witness_text(w: &Witness) -> String {
    match w {
        Witness::PointPair { pair, sum } => format!(
            "{} + {} = {} is not in the constellation",
            fmt_point(&pair[0]),
            fmt_point(&pair[1]),
            fmt_point(sum)
        ),
        Witness::Schur { level, left, right, product } => {
            format!("{left} * {right} = {product} escapes the level-{level} target code")
        }
        Witness::Chain { from, into } => format!("{from} is not contained in {into}"),
    }
}

pub fn status(v: &LatticeVerdict) -> &'static str {
    match v.is_lattice {
        Some(true) => "lattice",
        Some(false) => "not_lattice",
        None => "undecided",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig6(std::f64::consts::FRAC_PI_4), "0.785398");
        assert_eq!(sig6(std::f64::consts::PI / 8.0), "0.392699");
        assert_eq!(sig(0.0019295743, 3), "0.00193");
        assert_eq!(sig6(9.403953e-7), "9.40395e-7");
        assert_eq!(sig6(2.0), "2.00000");
    }

    #[test]
    fn ratios() {
        assert_eq!(fraction_ratio((1, 4), (1, 8)), Some((2, 1)));
        assert_eq!(fraction_ratio((3, 4), (0, 1)), None);
        assert_eq!(fmt_fraction((3, 8)), "3/8");
    }

    #[test]
    fn canonical_json_sorts_keys() {
        #[derive(Serialize)]
        struct B {
            zeta: u8,
            alpha: u8,
        }
        let s = to_canonical_json("t", &B { zeta: 1, alpha: 2 });
        let a = s.find("alpha").unwrap();
        let c = s.find("command").unwrap();
        let z = s.find("zeta").unwrap();
        assert!(a < c && c < z);
        assert!(s.contains("\"schema_version\": 1"));
    }
}
