//! Text and JSON renderers for the criteria and constraint reports. All
//! JSON documents carry a top-level `"schema": 1` and serialize with
//! sorted keys, so repeated runs are byte-identical.

use piradiance::laws::CriteriaReport;
use piradiance::rational::Rational;
use piradiance::scenario::WavelengthConstraintReport;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

fn powers_json(powers: &[Rational]) -> Value {
    Value::Array(powers.iter().map(|p| Value::String(p.to_string())).collect())
}

pub fn constraint_text(report: &WavelengthConstraintReport) -> String {
    let values: Vec<String> = report
        .functional_values
        .iter()
        .map(Rational::to_string)
        .collect();
    let mut out = String::new();
    out.push_str("wavelength-exponent lock: x_lambda - 2 x_U + x_e/2 on the nullspace basis\n");
    out.push_str(&format!("  functional values: [{}]\n", values.join(", ")));
    if report.holds {
        out.push_str(
            "  the functional vanishes identically: with x_e = 0 the wavelength exponent \
             is 2 x_U, so no pin choice reaches a lambda^-4 or lambda^-5 dependence\n",
        );
    } else {
        out.push_str("  the functional does NOT vanish on the nullspace\n");
    }
    out
}

pub fn constraint_json(report: &WavelengthConstraintReport) -> Value {
    json!({
        "functional": "x_lambda - 2 x_U + x_e/2",
        "functional_values": report
            .functional_values
            .iter()
            .map(|v| Value::String(v.to_string()))
            .collect::<Vec<_>>(),
        "nullspace": report
            .nullspace
            .iter()
            .map(|v| powers_json(v))
            .collect::<Vec<_>>(),
        "holds": report.holds,
    })
}

pub fn criteria_text(report: &CriteriaReport) -> String {
    let pass = |b: bool| if b { "pass" } else { "fail" };
    let mut out = String::new();
    out.push_str(&format!("law: {}\n", report.law));
    out.push_str(&format!(
        "red requirement:              {} (limit {:.9e})\n",
        pass(report.red_pass),
        report.red_limit
    ));
    out.push_str(&format!(
        "violet requirement:           {} (witness {:.3e})\n",
        pass(report.violet_pass),
        report.violet_witness
    ));
    out.push_str(&format!(
        "strengthened violet (m = {}): {} (witness {:.3e})\n",
        report.violet_limit_exponent_m,
        pass(report.strengthened_violet_pass),
        report.strengthened_witness
    ));
    match (
        report.energy_integral.verdict.is_divergent(),
        report.energy_integral.value,
    ) {
        (true, _) => out.push_str(&format!(
            "energy integral:              divergent (witness ratio {:.3})\n",
            report.energy_integral.verdict.witness
        )),
        (false, Some(v)) => {
            out.push_str(&format!("energy integral:              convergent = {v:.9}\n"))
        }
        (false, None) => {
            out.push_str("energy integral:              convergent (value unavailable)\n")
        }
    }
    let max = match report.max_kind {
        piradiance::laws::MaxKind::Maximum => "maximum",
        piradiance::laws::MaxKind::Inflection => "inflection",
        piradiance::laws::MaxKind::None => "none",
    };
    match report.peak_x {
        Some(x) => out.push_str(&format!("extremum:                     {max} at X = {x:.6}\n")),
        None => out.push_str(&format!("extremum:                     {max}\n")),
    }
    out
}

pub fn criteria_json(report: &CriteriaReport) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "kind": "criteria",
        "report": serde_json::to_value(report).expect("report serializes"),
    })
}
