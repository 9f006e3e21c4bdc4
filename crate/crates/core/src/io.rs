//! JSON encodings.
//!
//! Scalars are strings: `"p/q"` or `"p"` on rationals, decimal strings on
//! floats. Words are comma-separated 1-based letters, with `""` for the
//! empty word. Coefficient maps are written in graded order and never
//! contain zeros. On input, JSON numbers are accepted wherever a scalar
//! string is.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::analysis::VanishingReport;
use crate::cumulants::{GaussianSpec, SymSeries};
use crate::error::{Error, Result};
use crate::lie::{LiePolynomial, LyndonWord};
use crate::path::{PiecewiseLinearPath, SampledPath};
use crate::scalar::{Rational, Scalar};
use crate::tensor::{TensorSeries, Word};

/// A scalar on the wire.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Num {
    Str(String),
    Int(i64),
    Float(f64),
}

impl Num {
    fn of<S: Scalar>(x: &S) -> Self {
        Num::Str(x.render())
    }

    fn parse<S: Scalar>(&self) -> Result<S> {
        match self {
            Num::Str(s) => S::parse_scalar(s),
            Num::Int(n) => Ok(S::from_i64(*n)),
            Num::Float(x) => S::parse_scalar(&format!("{x:?}")),
        }
    }
}

/// An ordered string-keyed map, written as a JSON object.
struct Entries(Vec<(String, Num)>);

impl Serialize for Entries {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for Entries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Entries;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from words to scalars")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut a: A,
            ) -> std::result::Result<Entries, A::Error> {
                let mut out = Vec::new();
                let mut seen = BTreeSet::new();
                while let Some((k, v)) = a.next_entry::<String, Num>()? {
                    if !seen.insert(k.clone()) {
                        return Err(de::Error::custom(format!("duplicate key {k:?}")));
                    }
                    out.push((k, v));
                }
                Ok(Entries(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesWire {
    dim: usize,
    level: usize,
    coeffs: Entries,
}

impl SeriesWire {
    fn parse_words<S: Scalar>(&self) -> Result<Vec<(Word, S)>> {
        self.coeffs
            .0
            .iter()
            .map(|(k, v)| Ok((k.parse()?, v.parse()?)))
            .collect()
    }
}

fn write<S: Serializer>(wire: impl Serialize, s: S) -> std::result::Result<S::Ok, S::Error> {
    wire.serialize(s)
}

fn read<'de, D, W, T>(d: D, f: impl FnOnce(W) -> Result<T>) -> std::result::Result<T, D::Error>
where
    D: Deserializer<'de>,
    W: Deserialize<'de>,
{
    f(W::deserialize(d)?).map_err(de::Error::custom)
}

fn series_wire<'a, S: Scalar>(
    dim: usize,
    level: usize,
    terms: impl Iterator<Item = (String, &'a S)>,
) -> SeriesWire {
    SeriesWire {
        dim,
        level,
        coeffs: Entries(terms.map(|(k, c)| (k, Num::of(c))).collect()),
    }
}

impl<S: Scalar> Serialize for TensorSeries<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        write(
            series_wire(
                self.dim(),
                self.level(),
                self.terms().map(|(w, c)| (w.to_string(), c)),
            ),
            s,
        )
    }
}

impl<'de, S: Scalar> Deserialize<'de> for TensorSeries<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        read(d, |w: SeriesWire| {
            TensorSeries::from_terms(w.dim, w.level, w.parse_words()?)
        })
    }
}

impl<S: Scalar> Serialize for SymSeries<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        write(
            series_wire(
                self.dim(),
                self.level(),
                self.terms().map(|(w, c)| (w.to_string(), c)),
            ),
            s,
        )
    }
}

impl<'de, S: Scalar> Deserialize<'de> for SymSeries<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        read(d, |w: SeriesWire| {
            SymSeries::from_terms(w.dim, w.level, w.parse_words()?)
        })
    }
}

impl<S: Scalar> Serialize for LiePolynomial<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        write(
            series_wire(
                self.dim(),
                self.level(),
                self.coeffs().iter().map(|(w, c)| (w.to_string(), c)),
            ),
            s,
        )
    }
}

impl<'de, S: Scalar> Deserialize<'de> for LiePolynomial<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        read(d, |w: SeriesWire| {
            let terms = w
                .coeffs
                .0
                .iter()
                .map(|(k, v)| Ok((LyndonWord::parse(k)?, v.parse()?)))
                .collect::<Result<Vec<_>>>()?;
            LiePolynomial::from_terms(w.dim, w.level, terms)
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PathWire {
    dim: usize,
    pieces: Vec<Vec<Num>>,
}

fn parse_matrix<S: Scalar>(rows: &[Vec<Num>]) -> Result<Vec<Vec<S>>> {
    rows.iter()
        .map(|r| r.iter().map(Num::parse).collect())
        .collect()
}

fn render_matrix<S: Scalar>(rows: &[Vec<S>]) -> Vec<Vec<Num>> {
    rows.iter()
        .map(|r| r.iter().map(Num::of).collect())
        .collect()
}

impl<S: Scalar> Serialize for PiecewiseLinearPath<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        write(
            PathWire {
                dim: self.dim(),
                pieces: render_matrix(self.pieces()),
            },
            s,
        )
    }
}

impl<'de, S: Scalar> Deserialize<'de> for PiecewiseLinearPath<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        read(d, |w: PathWire| {
            PiecewiseLinearPath::new(w.dim, parse_matrix(&w.pieces)?)
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SampledWire {
    dim: usize,
    samples: Vec<Vec<f64>>,
}

impl Serialize for SampledPath {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        write(
            SampledWire {
                dim: self.dim(),
                samples: self.samples().to_vec(),
            },
            s,
        )
    }
}

impl<'de> Deserialize<'de> for SampledPath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        read(d, |w: SampledWire| SampledPath::new(w.dim, w.samples))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GaussianWire {
    mean: Vec<Num>,
    cov: Vec<Vec<Num>>,
}

impl<S: Scalar> Serialize for GaussianSpec<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mean = self.mean().iter().map(Num::of).collect();
        write(
            GaussianWire {
                mean,
                cov: render_matrix(self.cov()),
            },
            s,
        )
    }
}

impl<'de, S: Scalar> Deserialize<'de> for GaussianSpec<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        read(d, |w: GaussianWire| {
            let mean = w.mean.iter().map(Num::parse).collect::<Result<_>>()?;
            GaussianSpec::new(mean, parse_matrix(&w.cov)?)
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportWire<P> {
    n1: usize,
    #[serde(rename = "K")]
    max_level: usize,
    zero_levels: BTreeSet<usize>,
    nonzero_levels: BTreeSet<usize>,
    first_nonzero: Option<usize>,
    path: P,
    seed: Option<u64>,
}

impl Serialize for VanishingReport {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        write(
            ReportWire {
                n1: self.n1,
                max_level: self.max_level,
                zero_levels: self.zero_levels.clone(),
                nonzero_levels: self.nonzero_levels.clone(),
                first_nonzero: self.first_nonzero,
                path: &self.path,
                seed: self.seed,
            },
            s,
        )
    }
}

impl<'de> Deserialize<'de> for VanishingReport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        read(d, |w: ReportWire<PiecewiseLinearPath<Rational>>| {
            Ok(VanishingReport {
                path: w.path,
                n1: w.n1,
                max_level: w.max_level,
                zero_levels: w.zero_levels,
                nonzero_levels: w.nonzero_levels,
                first_nonzero: w.first_nonzero,
                seed: w.seed,
            })
        })
    }
}

/// Parses any of the formats above from a JSON string.
pub fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Compact JSON, one line.
pub fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("in-memory serialization cannot fail")
}

/// Lie coordinates as `(bracketing, coefficient)` pairs in graded order,
/// e.g. `("[1,[1,2]]", "1/12")`.
pub fn bracketed_coeffs<S: Scalar>(l: &LiePolynomial<S>) -> Vec<(String, String)> {
    l.coeffs()
        .iter()
        .map(|(w, c)| (w.bracket_string(), c.render()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn tensor_format() {
        let t = TensorSeries::from_terms(
            2,
            2,
            [
                (Word::empty(), rat(1, 1)),
                (Word::from([1, 2]), rat(1, 2)),
                (Word::letter(1), rat(-3, 1)),
            ],
        )
        .unwrap();
        let s = to_json(&t);
        assert_eq!(
            s,
            r#"{"dim":2,"level":2,"coeffs":{"":"1","1":"-3","1,2":"1/2"}}"#
        );
        assert_eq!(from_json::<TensorSeries>(&s).unwrap(), t);

        let f = t.map_coeffs(|c| c.to_f64());
        assert_eq!(
            to_json(&f),
            r#"{"dim":2,"level":2,"coeffs":{"":"1.0","1":"-3.0","1,2":"0.5"}}"#
        );
    }

    #[test]
    fn lie_format_is_graded() {
        let l = LiePolynomial::from_terms(
            2,
            3,
            [
                (LyndonWord::parse("1,1,2").unwrap(), rat(1, 12)),
                (LyndonWord::parse("2").unwrap(), rat(1, 1)),
                (LyndonWord::parse("1,2").unwrap(), rat(1, 2)),
            ],
        )
        .unwrap();
        let s = to_json(&l);
        assert_eq!(
            s,
            r#"{"dim":2,"level":3,"coeffs":{"2":"1","1,2":"1/2","1,1,2":"1/12"}}"#
        );
        assert_eq!(from_json::<LiePolynomial>(&s).unwrap(), l);
        assert!(from_json::<LiePolynomial>(r#"{"dim":2,"level":2,"coeffs":{"2,1":"1"}}"#).is_err());
        assert_eq!(
            bracketed_coeffs(&l)[2],
            ("[1,[1,2]]".to_string(), "1/12".to_string())
        );
    }

    #[test]
    fn path_and_gaussian_formats() {
        let src = r#"{"dim":2,"pieces":[["1","1"],["1","-1"],["5","1"]]}"#;
        let p: PiecewiseLinearPath = from_json(src).unwrap();
        assert_eq!(p.num_pieces(), 3);
        assert_eq!(to_json(&p), src);
        let p: PiecewiseLinearPath = from_json(r#"{"dim":2,"pieces":[[1,"1/2"]]}"#).unwrap();
        assert_eq!(p.pieces()[0][1], rat(1, 2));

        let src = r#"{"mean":["0","1"],"cov":[["1","0"],["0","2"]]}"#;
        let g: GaussianSpec = from_json(src).unwrap();
        assert_eq!(to_json(&g), src);

        let s: SampledPath = from_json(r#"{"dim":2,"samples":[[0.0,0.0],[1.0,1.0]]}"#).unwrap();
        assert_eq!(to_json(&s), r#"{"dim":2,"samples":[[0.0,0.0],[1.0,1.0]]}"#);
    }

    #[test]
    fn malformed_input() {
        for bad in [
            r#"{"dim":2,"pieces":[["1"]]}"#,
            r#"{"dim":2,"pieces":[["1","x"]]}"#,
            r#"{"dim":2,"pieces":[["1.5","1"]]}"#,
            r#"{"dim":2,"pieces":[],"extra":1}"#,
            r#"{"dim":2,"pieces":[["1","1/0"]]}"#,
        ] {
            assert!(from_json::<PiecewiseLinearPath>(bad).is_err(), "{bad}");
        }
        assert!(from_json::<TensorSeries>(r#"{"dim":2,"level":1,"coeffs":{"1,2":"1"}}"#).is_err());
        assert!(from_json::<TensorSeries>(r#"{"dim":2,"level":2,"coeffs":{"3":"1"}}"#).is_err());
        assert!(
            from_json::<TensorSeries>(r#"{"dim":2,"level":2,"coeffs":{"1":"1","1":"2"}}"#).is_err()
        );
        assert!(
            from_json::<GaussianSpec>(r#"{"mean":["0","0"],"cov":[["1","2"],["3","1"]]}"#).is_err()
        );
    }
}
