//! Cherednik parameters of charges and infinite-dimensionality certificates.
//!
//! A charge `(s₁, s₂)` and an integer `e ≥ 1` give the type B parameter
//! `c₁ = −1/e`, `c₂ = (s₂ − s₁ − e/2)/e`. The sign of `c₁` is the opposite of
//! Losev's convention; translate before exchanging parameters with software
//! that follows it.
//!
//! Two criteria are applied as black boxes:
//!
//! * in the asymptotic chamber `s₁ < s₂ − n`, `L_c(λ)` is infinite-dimensional
//!   unless `λ²` is empty, and wall crossing preserves finite-dimensionality,
//!   so a nonempty second component of `Θ_{e,s}(λ)` certifies
//!   infinite-dimensionality of `L_c(λ)`;
//! * for type D, `H_c` with `c = r/e` has no nonzero finite-dimensional
//!   representations unless `e` is even.
//!
//! Neither criterion ever proves finiteness, so the only verdicts are
//! "certified infinite" and "not ruled out".

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Bipartition;
use crate::tableau::Charge;
use crate::wallcross::{theta, theta_steps};

/// Type B parameter `(c₁, c₂)`, exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CherednikParamB {
    pub c1: Rational64,
    pub c2: Rational64,
}

impl Serialize for CherednikParamB {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            c1: String,
            c2: String,
        }
        Repr { c1: self.c1.to_string(), c2: self.c2.to_string() }.serialize(serializer)
    }
}

fn check_e(e: i64) -> Result<()> {
    if e < 1 {
        return Err(Error::InvalidE(e));
    }
    Ok(())
}

pub fn charge_to_params(s: Charge, e: i64) -> Result<CherednikParamB> {
    check_e(e)?;
    // (s₂ − s₁ − e/2)/e = (2(s₂ − s₁) − e)/(2e)
    Ok(CherednikParamB { c1: Rational64::new(-1, e), c2: Rational64::new(2 * s.gap() - e, 2 * e) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    CertifiedInfinite,
    NotRuledOut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    AsymptoticChamber,
    OddE,
    SymmetricTheorem,
}

/// What a certificate is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum Subject {
    /// `L_c(λ)` for `H_c(B_n)`, `c` the parameter of `charge`.
    #[serde(rename = "B")]
    TypeB { bipartition: Bipartition, e: i64, charge: Charge, params: CherednikParamB },
    /// `L_c(λ±)` for `H_c(D_n)` with `c = r/e`.
    #[serde(rename = "D")]
    TypeD {
        bipartition: Bipartition,
        e: i64,
        #[serde(serialize_with = "serialize_ratio")]
        c: Rational64,
    },
}

fn serialize_ratio<S: Serializer>(r: &Rational64, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&r.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub subject: Subject,
    pub verdict: Verdict,
    pub criterion: Criterion,
    pub theta_image: Option<Bipartition>,
    pub final_charge: Option<Charge>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Certificate {
    fn bipartition(&self) -> &Bipartition {
        match &self.subject {
            Subject::TypeB { bipartition, .. } | Subject::TypeD { bipartition, .. } => bipartition,
        }
    }

    /// Whether the evidence supports the verdict: an infinite verdict needs
    /// either the odd-e criterion or a Θ image with nonempty second component
    /// at a final charge inside the asymptotic chamber.
    pub fn is_well_formed(&self) -> bool {
        if self.verdict == Verdict::NotRuledOut {
            return self.criterion == Criterion::AsymptoticChamber;
        }
        match self.criterion {
            Criterion::OddE => matches!(self.subject, Subject::TypeD { e, .. } if e % 2 == 1),
            Criterion::AsymptoticChamber | Criterion::SymmetricTheorem => {
                let n = i64::from(self.bipartition().size());
                match (&self.theta_image, self.final_charge) {
                    (Some(image), Some(s)) => s.s1 < s.s2 - n && !image.second.is_empty(),
                    _ => false,
                }
            }
        }
    }
}

fn small_rank_warnings(b: &Bipartition) -> Vec<String> {
    if b.size() < 4 {
        vec![format!(
            "rank {} is below 4; the combinatorics runs but the type B/D interpretation assumes n >= 4",
            b.size()
        )]
    } else {
        Vec::new()
    }
}

/// Runs `Θ_{e,s}` into the asymptotic chamber and reads off the verdict.
pub fn certify_infinite_type_b(b: &Bipartition, e: i64, s: Charge) -> Result<Certificate> {
    check_e(e)?;
    s.ensure_supported()?;
    let params = charge_to_params(s, e)?;
    let image = theta(b, e, s)?;
    // the image lives at the charge reached after the last nontrivial crossing
    let crossings = theta_steps(b.size(), e, s) - 1;
    let final_charge = s.shifted(crossings as i64 * e);
    let verdict = if image.second.is_empty() { Verdict::NotRuledOut } else { Verdict::CertifiedInfinite };
    Ok(Certificate {
        subject: Subject::TypeB { bipartition: b.clone(), e, charge: s, params },
        verdict,
        criterion: Criterion::AsymptoticChamber,
        theta_image: Some(image),
        final_charge: Some(final_charge),
        warnings: small_rank_warnings(b),
    })
}

/// Certificate for `L_c(λ±)` at `c = −1/e`.
pub fn certify_infinite_type_d(b: &Bipartition, e: i64) -> Result<Certificate> {
    certify_infinite_type_d_at(b, -1, e)
}

/// Certificate for `L_c(λ±)` at `c = r/e`, `r < 0` coprime to `e`.
///
/// The wall crossings involved do not depend on `r`, so `r` only appears in
/// the subject.
pub fn certify_infinite_type_d_at(b: &Bipartition, r: i64, e: i64) -> Result<Certificate> {
    check_e(e)?;
    if r >= 0 || num_integer::gcd(r, e) != 1 {
        return Err(Error::InvalidParameter(format!("c = {r}/{e} needs a negative numerator coprime to e")));
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric(b.clone()));
    }
    if b.size() == 0 {
        return Err(Error::EmptyBipartition);
    }
    let subject = Subject::TypeD { bipartition: b.clone(), e, c: Rational64::new(r, e) };
    if e % 2 == 1 {
        return Ok(Certificate {
            subject,
            verdict: Verdict::CertifiedInfinite,
            criterion: Criterion::OddE,
            theta_image: None,
            final_charge: None,
            warnings: small_rank_warnings(b),
        });
    }
    let inner = certify_infinite_type_b(b, e, Charge::new(0, e / 2))?;
    let image = inner.theta_image.clone().expect("type B certificates carry a Θ image");
    if inner.verdict != Verdict::CertifiedInfinite || image.second.part(1) != b.second.part(1) {
        return Err(Error::TheoremContradiction {
            subject: b.clone(),
            detail: format!(
                "Θ image {image} at e = {e} does not keep the first part {} of the second component",
                b.second.part(1)
            ),
        });
    }
    Ok(Certificate {
        subject,
        verdict: Verdict::CertifiedInfinite,
        criterion: Criterion::SymmetricTheorem,
        theta_image: inner.theta_image,
        final_charge: inner.final_charge,
        warnings: inner.warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_symmetric_bipartitions;

    fn bip(l1: &[u32], l2: &[u32]) -> Bipartition {
        Bipartition::from_parts(l1, l2).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn parameter_examples() {
        assert_eq!(charge_to_params(Charge::new(0, 1), 2).unwrap(), CherednikParamB { c1: q(-1, 2), c2: q(0, 1) });
        assert_eq!(charge_to_params(Charge::new(1, 4), 4).unwrap(), CherednikParamB { c1: q(-1, 4), c2: q(1, 4) });
        assert_eq!(charge_to_params(Charge::new(0, 3), 2).unwrap(), CherednikParamB { c1: q(-1, 2), c2: q(1, 1) });
        assert_eq!(charge_to_params(Charge::new(0, 3), 0), Err(Error::InvalidE(0)));
    }

    #[test]
    fn parameter_chain_and_injectivity() {
        for e in 1..=8i64 {
            for k in 0..=5 {
                if e % 2 == 0 {
                    let p = charge_to_params(Charge::new(0, k * e + e / 2), e).unwrap();
                    assert_eq!(p.c2, q(k, 1));
                }
            }
            let c2s: Vec<_> = (0..10).map(|g| charge_to_params(Charge::new(0, g), e).unwrap().c2).collect();
            assert!(c2s.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn type_b_examples() {
        let cert = certify_infinite_type_b(&bip(&[1], &[1]), 2, Charge::new(0, 1)).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedInfinite);
        assert_eq!(cert.theta_image, Some(bip(&[], &[1, 1])));
        assert_eq!(cert.final_charge, Some(Charge::new(0, 3)));
        assert!(cert.is_well_formed());

        let cert = certify_infinite_type_b(&Bipartition::empty(), 2, Charge::new(0, 1)).unwrap();
        assert_eq!(cert.verdict, Verdict::NotRuledOut);
        assert!(cert.is_well_formed());

        let cert = certify_infinite_type_b(&bip(&[2], &[]), 2, Charge::new(0, 1)).unwrap();
        assert_eq!(cert.theta_image, Some(bip(&[1], &[1])));
        assert_eq!(cert.verdict, Verdict::CertifiedInfinite);

        // already in the chamber with an empty second component
        let cert = certify_infinite_type_b(&bip(&[1], &[]), 2, Charge::new(0, 3)).unwrap();
        assert_eq!(cert.verdict, Verdict::NotRuledOut);
        assert_eq!(cert.final_charge, Some(Charge::new(0, 3)));

        assert!(certify_infinite_type_b(&bip(&[1], &[]), 2, Charge::new(3, 0)).is_err());
    }

    #[test]
    fn type_d_examples() {
        let cert = certify_infinite_type_d(&bip(&[1], &[1]), 2).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedInfinite);
        assert_eq!(cert.criterion, Criterion::SymmetricTheorem);

        let cert = certify_infinite_type_d(&bip(&[1], &[1]), 3).unwrap();
        assert_eq!(cert.criterion, Criterion::OddE);
        assert!(cert.is_well_formed());

        let cert = certify_infinite_type_d(&bip(&[2, 1], &[2, 1]), 2).unwrap();
        assert_eq!(cert.theta_image.as_ref().unwrap().second.part(1), 2);
        assert!(cert.warnings.is_empty());

        assert!(matches!(certify_infinite_type_d(&bip(&[2], &[1]), 2), Err(Error::NotSymmetric(_))));
        assert_eq!(certify_infinite_type_d(&Bipartition::empty(), 2), Err(Error::EmptyBipartition));
    }

    #[test]
    fn numerator_is_metadata_only() {
        let b = bip(&[2, 1], &[2, 1]);
        for e in [2i64, 4, 6] {
            let base = certify_infinite_type_d(&b, e).unwrap();
            for r in [-1i64, -3, -5, -7].into_iter().filter(|r| num_integer::gcd(*r, e) == 1) {
                let other = certify_infinite_type_d_at(&b, r, e).unwrap();
                assert_eq!(other.verdict, base.verdict);
                assert_eq!(other.theta_image, base.theta_image);
                assert_eq!(other.final_charge, base.final_charge);
            }
        }
        assert!(certify_infinite_type_d_at(&b, -2, 4).is_err());
        assert!(certify_infinite_type_d_at(&b, 1, 4).is_err());
    }

    #[test]
    fn type_d_never_contradicts_up_to_twelve() {
        for n in (2..=12).step_by(2) {
            for b in enumerate_symmetric_bipartitions(n) {
                for e in (2..=2 * i64::from(n)).step_by(2) {
                    let cert = certify_infinite_type_d(&b, e).unwrap();
                    assert_eq!(cert.verdict, Verdict::CertifiedInfinite);
                    assert!(cert.is_well_formed());
                }
            }
        }
    }

    #[test]
    fn certificate_json() {
        let cert = certify_infinite_type_b(&bip(&[1], &[1]), 2, Charge::new(0, 1)).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            concat!(
                r#"{"subject":{"type":"B","bipartition":["1","1"],"e":2,"charge":[0,1],"#,
                r#""params":{"c1":"-1/2","c2":"0"}},"verdict":"CERTIFIED_INFINITE","#,
                r#""criterion":"asymptotic-chamber","theta_image":["","1,1"],"final_charge":[0,3],"#,
                r#""warnings":["rank 2 is below 4; the combinatorics runs but the type B/D interpretation assumes n >= 4"]}"#
            )
        );
    }
}
