//! Bertin surfaces `x^e z = x + y^d`.

use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::comb::{affine_report, build_comb, CombSpec, SurfaceReport};
use crate::dpd::{construction_spec, DpdSpec, FamilyParams};
use crate::lattice::AbelianGroupInvariants;
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BertinParams {
    /// Exponent of `y`.
    pub d: u64,
    /// Exponent of `x`.
    pub e_exp: u64,
}

impl BertinParams {
    pub fn new(d: u64, e_exp: u64) -> Result<Self, FamilyError> {
        if d == 0 || e_exp == 0 {
            return Err(FamilyError::InvalidParams(format!(
                "Bertin exponents must be positive, got d = {d}, e = {e_exp}"
            )));
        }
        Ok(BertinParams { d, e_exp })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BertinReport {
    pub params: BertinParams,
    pub equation: String,
    /// The A1-ruling.
    pub ruling: String,
    /// Multiplicity of the unique multiple fiber (over `x = 0`); `None`
    /// when `d = 1`.
    pub multiple_fiber: Option<u64>,
    pub a1star_fibration: String,
    /// `Pic(X) ≅ H_1(X; Z) ≅ Z/d`.
    pub declared_pic: AbelianGroupInvariants,
    /// Comb model with one fiber of multiplicity `d`.
    pub comb_spec: CombSpec,
    pub lattice: SurfaceReport,
    pub agrees: bool,
}

fn pow(var: &str, e: u64) -> String {
    match e {
        0 => "1".into(),
        1 => var.into(),
        _ => format!("{var}^{e}"),
    }
}

pub fn bertin_report(params: BertinParams) -> Result<BertinReport, FamilyError> {
    let BertinParams { d, e_exp } = params;
    let declared_pic = AbelianGroupInvariants::from_cyclic_orders(&[BigInt::from(d)]);
    let comb_spec = CombSpec::single("0", CombSpec::multiplicity_word("0", d));
    let lattice = affine_report(&build_comb(&comb_spec)?)?;
    let agrees =
        lattice.q_acyclic && lattice.pic_x == declared_pic && lattice.multiplicities == [d];
    Ok(BertinReport {
        params,
        equation: format!("{} z = x + {}", pow("x", e_exp), pow("y", d)),
        ruling: "x".into(),
        multiple_fiber: (d >= 2).then_some(d),
        a1star_fibration: if e_exp == 1 {
            "z".into()
        } else {
            format!("{} z", pow("x", e_exp - 1))
        },
        declared_pic,
        comb_spec,
        lattice,
        agrees,
    })
}

/// The DPD member `(e, m, n) = (1, d, n)`; `n` must be a multiple of `d`.
/// How `n` depends on the exponent of `x` is left to the caller.
pub fn bertin_to_dpd(d: u64, n: u64) -> Result<DpdSpec, FamilyError> {
    if d < 2 {
        return Err(FamilyError::InvalidParams(format!("need d >= 2, got {d}")));
    }
    if n == 0 || !n.is_multiple_of(d) {
        return Err(FamilyError::InvalidParams(format!(
            "n = {n} is not a positive multiple of m = {d}"
        )));
    }
    Ok(construction_spec(FamilyParams::new(1, d, n)?))
}
