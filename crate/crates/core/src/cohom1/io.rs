//! Plain-text profile files.
//!
//! ```text
//! n 3
//! q 1 0.4 -0.4     # coefficients of q in s
//! ```
//!
//! or `preset round` in place of the `q` line.

use super::profile::Profile;
use crate::toric::io::{content_lines, parse_num};
use crate::{Error, Polynomial, Result};

pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut n: Option<usize> = None;
    let mut profile = None;
    for (line, fields) in content_lines(text) {
        match fields[0] {
            "n" if n.is_none() && profile.is_none() => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "expected 'n <int>'".into(),
                    });
                }
                n = Some(parse_num(line, fields[1])?);
            }
            "preset" | "q" if profile.is_none() => {
                let n = n.ok_or(Error::Parse {
                    line,
                    msg: "'n' must come first".into(),
                })?;
                profile = Some(if fields[0] == "preset" {
                    match fields.get(1..) {
                        Some(["round"]) => Profile::round(n)?,
                        _ => {
                            return Err(Error::Parse {
                                line,
                                msg: "unknown preset".into(),
                            })
                        }
                    }
                } else {
                    if fields.len() < 2 {
                        return Err(Error::Parse {
                            line,
                            msg: "'q' needs coefficients".into(),
                        });
                    }
                    let coeffs = fields[1..]
                        .iter()
                        .map(|f| parse_num(line, f))
                        .collect::<Result<Vec<f64>>>()?;
                    Profile::from_q(n, Polynomial::new(coeffs))?
                });
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unexpected '{other}'"),
                })
            }
        }
    }
    profile.ok_or(Error::Parse {
        line: 0,
        msg: "missing 'preset' or 'q' line".into(),
    })
}
