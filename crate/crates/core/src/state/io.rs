//! State documents: `{"amplitudes": [[re, im], ...]}` or sixteen lines of
//! `re im`. Writers always emit JSON.

use num_complex::Complex64;
use serde::Deserialize;

use super::FourQubitState;
use crate::report::fmt_f64;
use crate::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDocument {
    amplitudes: Vec<Vec<f64>>,
}

impl FourQubitState {
    /// Parses either accepted state format; JSON is recognized by a leading `{`.
    pub fn parse(text: &str) -> Result<Self> {
        let amps = if text.trim_start().starts_with('{') {
            parse_json(text)?
        } else {
            parse_plain(text)?
        };
        FourQubitState::from_slice(&amps)
    }

    /// JSON rendering with 17 significant digits per number, one line.
    pub fn to_json(&self) -> String {
        let entries: Vec<String> = self
            .amps()
            .iter()
            .map(|a| format!("[{}, {}]", fmt_f64(a.re), fmt_f64(a.im)))
            .collect();
        format!("{{\"amplitudes\": [{}]}}", entries.join(", "))
    }
}

fn parse_json(text: &str) -> Result<Vec<Complex64>> {
    let doc: StateDocument = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    doc.amplitudes
        .iter()
        .enumerate()
        .map(|(r, pair)| match pair.as_slice() {
            [re, im] => Ok(Complex64::new(*re, *im)),
            _ => Err(Error::Malformed(format!("amplitude {r} is not a [re, im] pair"))),
        })
        .collect()
}

fn parse_plain(text: &str) -> Result<Vec<Complex64>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(n, line)| {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [re, im] = fields.as_slice() else {
                return Err(Error::Malformed(format!("line {}: expected `re im`", n + 1)));
            };
            let num = |s: &str| {
                s.parse::<f64>()
                    .map_err(|e| Error::Malformed(format!("line {}: `{s}`: {e}", n + 1)))
            };
            Ok(Complex64::new(num(re)?, num(im)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::StandardState;
    use proptest::prelude::*;

    fn json_with(entries: &[(f64, f64)]) -> String {
        let body: Vec<String> = entries.iter().map(|(r, i)| format!("[{r}, {i}]")).collect();
        format!("{{\"amplitudes\": [{}]}}", body.join(","))
    }

    #[test]
    fn parses_ghz_document() {
        let mut e = vec![(0.0, 0.0); 16];
        e[0] = (std::f64::consts::FRAC_1_SQRT_2, 0.0);
        e[15] = (std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let s = FourQubitState::parse(&json_with(&e)).unwrap();
        assert_eq!(s, FourQubitState::standard(StandardState::Phi1, &[]).unwrap());
    }

    #[test]
    fn rejects_bad_documents() {
        assert_eq!(FourQubitState::parse(&json_with(&[(0.0, 0.0); 16])), Err(Error::ZeroState));
        assert_eq!(
            FourQubitState::parse(&json_with(&[(1.0, 0.0); 15])),
            Err(Error::WrongAmplitudeCount(15))
        );
        assert!(matches!(FourQubitState::parse("{\"amplitudes\": [1, 2"), Err(Error::Malformed(_))));
        assert!(matches!(
            FourQubitState::parse("{\"amplitudes\": [[1, 2, 3]]}"),
            Err(Error::Malformed(_))
        ));
        let mut plain = "1 0\n".repeat(15);
        plain.push_str("NaN 0\n");
        assert_eq!(FourQubitState::parse(&plain), Err(Error::NonFinite(15)));
        assert!(matches!(FourQubitState::parse("1 0 0\n"), Err(Error::Malformed(_))));
    }

    #[test]
    fn plain_text_format() {
        let mut text = String::from("0.5 0\n");
        text.push_str(&"0 0\n".repeat(14));
        text.push_str("0 -0.5\n");
        let s = FourQubitState::parse(&text).unwrap();
        assert_eq!(s.amps()[0], Complex64::new(0.5, 0.0));
        assert_eq!(s.amps()[15], Complex64::new(0.0, -0.5));
    }

    proptest! {
        #[test]
        fn json_round_trip_is_exact(seed in any::<u64>(), scale in -1e6f64..1e6) {
            prop_assume!(scale != 0.0);
            let s = FourQubitState::random(seed).scale(Complex64::new(scale, 0.0)).unwrap();
            prop_assert_eq!(FourQubitState::parse(&s.to_json()).unwrap(), s);
        }
    }
}
