//! Plain-text polytope and potential files.
//!
//! ```text
//! # polytope
//! dim 2
//! v 0 0
//! v 1 0
//! v 0 1
//! ```
//!
//! ```text
//! # potential
//! guillemin
//! perturb 4 0.05      # dimension 1: exponent, coefficient
//! perturb 1 1 0.01    # dimension 2: exponents i j, coefficient
//! ```

use super::polytope::Polytope;
use super::potential::{Poly2, SymplecticPotential};
use crate::{Error, Result};

/// Non-empty lines with `#` comments removed, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, field: &str) -> Result<T> {
    field.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("cannot parse number '{field}'"),
    })
}

pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let mut dim: Option<usize> = None;
    let mut vertices = Vec::new();
    for (line, fields) in content_lines(text) {
        match fields[0] {
            "dim" if dim.is_none() => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "expected 'dim <d>'".into(),
                    });
                }
                let d: usize = parse_num(line, fields[1])?;
                if !(1..=2).contains(&d) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("dimension {d} unsupported"),
                    });
                }
                dim = Some(d);
            }
            "v" => {
                let d = dim.ok_or_else(|| Error::Parse {
                    line,
                    msg: "vertex before 'dim' line".into(),
                })?;
                if fields.len() != d + 1 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected {d} coordinates"),
                    });
                }
                let coords = fields[1..]
                    .iter()
                    .map(|f| parse_num(line, f))
                    .collect::<Result<Vec<f64>>>()?;
                vertices.push(coords);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unexpected token '{other}'"),
                })
            }
        }
    }
    if dim.is_none() {
        return Err(Error::Parse {
            line: 1,
            msg: "missing 'dim' line".into(),
        });
    }
    Polytope::from_vertices(&vertices)
}

/// Parses the perturbation terms; validation of the resulting potential happens
/// in [`SymplecticPotential::with_perturbation`].
pub fn parse_potential_terms(text: &str, dim: usize) -> Result<Poly2> {
    let mut seen_header = false;
    let mut poly = Poly2::new();
    for (line, fields) in content_lines(text) {
        match fields[0] {
            "guillemin" if !seen_header && fields.len() == 1 => seen_header = true,
            "perturb" if seen_header => {
                if fields.len() != dim + 2 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected {} exponent(s) and a coefficient", dim),
                    });
                }
                let i: usize = parse_num(line, fields[1])?;
                let j: usize = if dim == 2 {
                    parse_num(line, fields[2])?
                } else {
                    0
                };
                let c: f64 = parse_num(line, fields[dim + 1])?;
                if !c.is_finite() {
                    return Err(Error::Parse {
                        line,
                        msg: "non-finite coefficient".into(),
                    });
                }
                poly.add_term(i, j, c);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unexpected token '{other}'"),
                })
            }
        }
    }
    if !seen_header {
        return Err(Error::Parse {
            line: 1,
            msg: "missing 'guillemin' line".into(),
        });
    }
    Ok(poly)
}

pub fn parse_potential(text: &str, polytope: Polytope) -> Result<SymplecticPotential> {
    let terms = parse_potential_terms(text, polytope.dim())?;
    SymplecticPotential::with_perturbation(polytope, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_square_with_comments() {
        let p = parse_polytope("# unit square\ndim 2\nv 0 0\nv 1 0 # corner\nv 1 1\n\nv 0 1\n")
            .unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_polytope("dim 1\nv -1\nv one\n").unwrap_err(),
            Error::Parse {
                line: 3,
                msg: "cannot parse number 'one'".into()
            }
        );
        assert!(matches!(
            parse_polytope("v 0 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_polytope("dim 3\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polytope("dim 1\nv 0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn parses_potential() {
        let iv = parse_polytope("dim 1\nv -1\nv 1\n").unwrap();
        let u = parse_potential("guillemin\nperturb 4 0.05\n", iv.clone()).unwrap();
        assert_eq!(u.perturbation().terms(), &[(4, 0, 0.05)]);
        assert!(parse_potential("perturb 4 0.05\n", iv.clone()).is_err());
        assert!(matches!(
            parse_potential("guillemin\nperturb 2 -5\n", iv),
            Err(Error::InvalidPotential(_))
        ));
    }
}
