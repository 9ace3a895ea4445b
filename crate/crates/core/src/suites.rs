//! The verification suites run by `gqd verify`, bundled so that the CLI and
//! the integration tests exercise exactly the same checks.

use std::str::FromStr;

use crate::double_rep::{catalog, clifford_multiplicity_check, verify_orthonormality, DoubleContext, IrrepCatalog};
use crate::error::{Error, Result};
use crate::fusion::verify_fusion_table;
use crate::group::GroupHom;
use crate::grothendieck::{build_ring, verify_orbit_sum_products, verify_ring_surjection, verify_conjugation_maps};
use crate::hopf::{
    build_double_by_twist, double_from_hom, verify_hopf_axioms, verify_normality_ku, verify_swap_duality,
    CocycleForm, HopfData,
};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Hopf,
    Clifford,
    Fusion,
    Ring,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Hopf, Suite::Clifford, Suite::Fusion, Suite::Ring];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Clifford => "clifford",
            Suite::Fusion => "fusion",
            Suite::Ring => "ring",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Spec(format!("unknown suite `{s}`")))
    }
}

/// Knobs for [`run_suites`].
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Largest double dimension the hopf suite will build.
    pub cap: usize,
    /// Test hook: perturb the structure constant `e_i * e_j` of the double
    /// before the hopf checks run.
    pub corrupt: Option<(usize, usize)>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { cap: crate::hopf::DEFAULT_DIMENSION_CAP, corrupt: None }
    }
}

/// Hopf-algebra checks on the double: both constructions agree, the axioms
/// hold, `K(U)` is normal, the swapped double matches, and the simple
/// characters are orthonormal for the Haar form.
pub fn hopf_suite(phi: &GroupHom, cat: &IrrepCatalog, options: &SuiteOptions) -> Result<Report> {
    let double = double_from_hom(phi, options.cap)?;
    let algebra = match options.corrupt {
        Some((i, j)) if i < double.dim() && j < double.dim() => double.algebra.corrupted(i, j),
        Some((i, j)) => return Err(Error::Spec(format!("corruption index ({i},{j}) out of range"))),
        None => double.algebra.clone(),
    };
    let mut report = Report::new();
    report.extend(double.pairing.verify(&double.u, &double.h).prefixed("pairing"));
    let form = CocycleForm::from_pairing(&double.u, &double.h, &double.pairing);
    report.extend(form.verify(&HopfData::tensor(&double.u, &double.h)).prefixed("cocycle"));
    let twisted = build_double_by_twist(&double.u, &double.h, &form, options.cap)?;
    report.push(Check::from_witness("twist_matches_direct", twisted.first_difference(&algebra)));
    report.extend(verify_hopf_axioms(&algebra));
    report.extend(verify_normality_ku(&algebra, &double.u, &double.h, &double.pairing));
    report.extend(verify_swap_duality(&double.u, &double.h, &double.pairing, options.cap)?);
    report.extend(verify_orthonormality(cat, &algebra));
    Ok(report)
}

pub fn clifford_suite(cat: &IrrepCatalog) -> Report {
    clifford_multiplicity_check(cat)
}

pub fn fusion_suite(cat: &IrrepCatalog) -> Report {
    verify_fusion_table(cat).0
}

pub fn ring_suite(cat: &IrrepCatalog) -> Report {
    let ctx = cat.context();
    let mut report = Report::new();
    let (fusion, table) = verify_fusion_table(cat);
    match table {
        Some(table) if fusion.all_pass() => match build_ring(cat, &table) {
            Ok(ring) => {
                report.push(Check::pass("ring_constructed"));
                report.extend(verify_ring_surjection(&ring, ctx));
            }
            Err(e) => report.push(Check::fail("ring_constructed", e.to_string())),
        },
        _ => {
            let first = fusion.failures().next().map_or("no table".to_string(), |c| c.name.clone());
            report.push(Check::fail("ring_constructed", format!("fusion table not verified: {first}")));
        }
    }
    report.extend(verify_orbit_sum_products(ctx));
    report.extend(verify_conjugation_maps(ctx));
    report
}

/// Runs the requested suites in the order given; check names are prefixed
/// with the suite name.
pub fn run_suites(phi: &GroupHom, suites: &[Suite], options: &SuiteOptions) -> Result<Report> {
    let ctx = DoubleContext::new(phi);
    let cat = catalog(&ctx)?;
    let mut report = Report::new();
    for &suite in suites {
        let r = match suite {
            Suite::Hopf => hopf_suite(phi, &cat, options)?,
            Suite::Clifford => clifford_suite(&cat),
            Suite::Fusion => fusion_suite(&cat),
            Suite::Ring => ring_suite(&cat),
        };
        report.extend(r.prefixed(suite.name()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::battery::instance;

    #[test]
    fn all_suites_pass_on_s3() {
        let phi = &instance("S3").unwrap().phi;
        let report = run_suites(phi, &Suite::ALL, &SuiteOptions::default()).unwrap();
        assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
        for name in ["hopf.associativity", "hopf.twist_matches_direct", "clifford.clifford_multiplicity", "ring.unital"] {
            assert!(report.get(name).is_some(), "{name}");
        }
    }

    #[test]
    fn corruption_fails_hopf_only() {
        let phi = &instance("S3").unwrap().phi;
        let options = SuiteOptions { corrupt: Some((7, 13)), ..SuiteOptions::default() };
        let report = run_suites(phi, &[Suite::Hopf], &options).unwrap();
        let assoc = report.get("hopf.associativity").unwrap();
        assert!(!assoc.pass && assoc.witness.is_some());
        assert!(report.get("hopf.twist_matches_direct").unwrap().witness.as_deref().unwrap().starts_with("product e7*e13"));
        let options = SuiteOptions { corrupt: Some((36, 0)), ..SuiteOptions::default() };
        assert!(run_suites(phi, &[Suite::Hopf], &options).unwrap_err().is_invalid_input());
    }

    #[test]
    fn hopf_suite_respects_cap() {
        let phi = &instance("S3").unwrap().phi;
        let options = SuiteOptions { cap: 35, corrupt: None };
        assert!(matches!(run_suites(phi, &[Suite::Hopf], &options), Err(Error::DimensionCap { dim: 36, cap: 35 })));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
