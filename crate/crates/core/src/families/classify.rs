//! Affine lines in Q-homology planes with `kbar(X) <= kbar(X \ Γ) <= 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FamilyError;

/// Logarithmic Kodaira dimension, restricted to the values that occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kbar {
    #[serde(rename = "-inf")]
    NegInf,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
}

impl Kbar {
    pub const ALL: [Kbar; 3] = [Kbar::NegInf, Kbar::Zero, Kbar::One];
}

impl fmt::Display for Kbar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kbar::NegInf => "-inf",
            Kbar::Zero => "0",
            Kbar::One => "1",
        })
    }
}

impl FromStr for Kbar {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "-inf" | "-infinity" | "neginf" | "-∞" => Ok(Kbar::NegInf),
            "0" => Ok(Kbar::Zero),
            "1" => Ok(Kbar::One),
            other => Err(FamilyError::InvalidParams(format!(
                "kbar must be one of -inf, 0, 1, got {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseLabel {
    A,
    B,
    C,
    D,
    E,
    Singular,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::A => "a",
            CaseLabel::B => "b",
            CaseLabel::C => "c",
            CaseLabel::D => "d",
            CaseLabel::E => "e",
            CaseLabel::Singular => "singular",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    pub fiber_type_line: bool,
    pub family_of_lines: bool,
    pub unique_line: bool,
    /// `X = H[-1,1]`, with exactly two affine lines.
    pub fujita_two_lines: bool,
    pub unique_a1star_fibration: bool,
    /// `X ≅ A2` and `Γ ~ V(x^k - y^l)`.
    pub plane_with_cusp_line: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationEntry {
    pub kbar_x: Kbar,
    pub kbar_complement: Kbar,
    pub case_label: CaseLabel,
    pub descriptor: Descriptor,
    pub text: String,
}

fn entry(
    kbar_x: Kbar,
    kbar_complement: Kbar,
    case_label: CaseLabel,
    descriptor: Descriptor,
    text: &str,
) -> ClassificationEntry {
    ClassificationEntry {
        kbar_x,
        kbar_complement,
        case_label,
        descriptor,
        text: text.into(),
    }
}

/// The table row for an affine line `Γ` in a Q-homology plane `X`, or the
/// singular case. Pairs violating `kbar(X) <= kbar(X \ Γ)` are rejected,
/// and a singular line forces `(kbar(X), kbar(X \ Γ)) = (-inf, 1)`.
pub fn classify(
    kbar_x: Kbar,
    kbar_complement: Kbar,
    singular_line: bool,
) -> Result<ClassificationEntry, FamilyError> {
    use Kbar::*;
    if kbar_x > kbar_complement {
        return Err(FamilyError::InconsistentKbar {
            kbar_x,
            kbar_complement,
            reason: "kbar(X) <= kbar(X \\ Γ) fails".into(),
        });
    }
    let d = Descriptor::default();
    if singular_line {
        if (kbar_x, kbar_complement) != (NegInf, One) {
            return Err(FamilyError::InconsistentKbar {
                kbar_x,
                kbar_complement,
                reason: "a singular line occurs only in X ≅ A2 with kbar(X \\ Γ) = 1".into(),
            });
        }
        return Ok(entry(
            NegInf,
            One,
            CaseLabel::Singular,
            Descriptor {
                plane_with_cusp_line: true,
                ..d
            },
            "X ≅ A2 and Γ is mapped to V(x^k - y^l) with coprime k, l >= 2",
        ));
    }
    Ok(match (kbar_x, kbar_complement) {
        (NegInf, NegInf) => entry(
            NegInf,
            NegInf,
            CaseLabel::A,
            Descriptor {
                fiber_type_line: true,
                family_of_lines: true,
                ..d
            },
            "Γ is of fiber type: a fiber of an A1-ruling of X",
        ),
        (NegInf, k) => entry(
            NegInf,
            k,
            CaseLabel::B,
            Descriptor {
                family_of_lines: true,
                ..d
            },
            "Γ moves in a continuous family of affine lines Γ_t",
        ),
        (Zero, Zero) => entry(
            Zero,
            Zero,
            CaseLabel::C,
            Descriptor {
                unique_line: true,
                ..d
            },
            "Γ is the unique affine line in X unless X = H[-1,1]",
        ),
        (Zero, One) => entry(
            Zero,
            One,
            CaseLabel::D,
            Descriptor {
                fujita_two_lines: true,
                ..d
            },
            "X = H[-1,1] contains exactly two affine lines, meeting transversally in two distinct points",
        ),
        (One, One) => entry(
            One,
            One,
            CaseLabel::E,
            Descriptor {
                unique_a1star_fibration: true,
                ..d
            },
            "Γ is a fiber component of a unique A1*-fibration on X",
        ),
        _ => unreachable!("kbar(X) <= kbar(X \\ Γ) checked above"),
    })
}

/// Every legal row, smooth cases first.
pub fn classification_table() -> Vec<ClassificationEntry> {
    let mut rows = Vec::new();
    for x in Kbar::ALL {
        for c in Kbar::ALL {
            if let Ok(e) = classify(x, c, false) {
                rows.push(e);
            }
        }
    }
    rows.push(classify(Kbar::NegInf, Kbar::One, true).expect("singular row"));
    rows
}

/// Constraint on `kbar(X)` when `X` is a Z-homology plane.
pub fn zhp_note(kbar_x: Kbar) -> Option<String> {
    match kbar_x {
        Kbar::NegInf => None,
        Kbar::Zero => Some("kbar(X) = 0 is impossible for Z-homology planes".into()),
        Kbar::One => {
            Some("kbar(X) = 1: X contains a unique homology line, which is an affine line".into())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let t = classification_table();
        let labels: Vec<String> = t.iter().map(|e| e.case_label.to_string()).collect();
        assert_eq!(labels, ["a", "b", "b", "c", "d", "e", "singular"]);
    }

    #[test]
    fn illegal_pairs() {
        assert!(classify(Kbar::One, Kbar::Zero, false).is_err());
        assert!(classify(Kbar::Zero, Kbar::NegInf, false).is_err());
        assert!(classify(Kbar::One, Kbar::NegInf, false).is_err());
        assert!(classify(Kbar::Zero, Kbar::One, true).is_err());
    }

    #[test]
    fn parse_and_notes() {
        assert_eq!("-inf".parse::<Kbar>().unwrap(), Kbar::NegInf);
        assert!("2".parse::<Kbar>().is_err());
        assert!(zhp_note(Kbar::Zero)
            .unwrap()
            .contains("impossible for Z-homology planes"));
        assert!(zhp_note(Kbar::One)
            .unwrap()
            .contains("unique homology line"));
        assert!(zhp_note(Kbar::NegInf).is_none());
    }
}
