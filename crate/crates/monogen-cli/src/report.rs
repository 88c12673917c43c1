//! Analysis records with a fixed field schema, and their JSONL, CSV, and
//! human-readable encodings.
//!
//! Every record carries the same field set in the same order; optional
//! fields serialize as `null` rather than disappearing, so consumers can
//! rely on the shape. Large integers are decimal strings, never floats.

use std::fmt::Write as _;
use std::time::Instant;

use monogen::cyclo::{self, ShiftMatch};
use monogen::galois6::{self, Certainty, D6Params, GaloisError, GaloisLabel};
use monogen::hunt::SearchHit;
use monogen::mono::{self, MonoError, MonoStatus, MonogenicityReport};
use monogen::zint::{self, FactorBudget};
use monogen::zpoly::{self, IntPoly};
use monogen::{BigInt, Factorization, Sign};
use serde::Serialize;

use crate::parse::{render_poly, PolyExpr};

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub text: String,
    /// Ascending, bit-exact, as decimal strings.
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscFactors {
    pub sign: i8,
    pub factors: Vec<(String, u32)>,
    /// Unfactored remainder; "1" when the factorization is complete.
    pub cofactor: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GaloisField {
    pub group: String,
    pub certainty: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonoField {
    pub status: String,
    pub failing_prime: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RemarkField {
    pub d: u64,
    pub sign: i8,
    pub mirror: bool,
}

/// One analysis result; the declaration order of the fields is the output
/// schema for both the JSON and CSV encodings.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRecord {
    pub input: InputEcho,
    pub degree: usize,
    pub disc: String,
    pub disc_factorization: Option<DiscFactors>,
    pub irreducible: bool,
    pub galois: Option<GaloisField>,
    pub monogenic: Option<MonoField>,
    pub shape_params: Option<Vec<[String; 3]>>,
    pub remark_match: Option<RemarkField>,
    pub timing_ms: u64,
}

/// Conditions that abort the command instead of appearing in a record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportError {
    ConstantInput,
    Internal(&'static str),
}

/// Only attempt shifted-cyclotomic recognition below this degree; the scan
/// bound grows quadratically and arbitrary input can be huge.
const REMARK_DEGREE_LIMIT: usize = 40;

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn factor_field(f: &Factorization) -> DiscFactors {
    DiscFactors {
        sign: f.sign,
        factors: f
            .factors
            .iter()
            .map(|(p, e)| (p.to_string(), *e))
            .collect(),
        cofactor: f.cofactor.to_string(),
    }
}

fn galois_field(label: &GaloisLabel) -> GaloisField {
    GaloisField {
        group: label.group.to_string(),
        certainty: match label.certainty {
            Certainty::Proved => "proved",
            Certainty::Sampled => "sampled",
        }
        .to_string(),
    }
}

fn mono_field(rep: &MonogenicityReport) -> MonoField {
    let status = match rep.status {
        MonoStatus::Monogenic => "Monogenic",
        MonoStatus::NotMonogenic => "NotMonogenic",
        MonoStatus::Unknown => "Unknown",
        MonoStatus::Reducible => "Reducible",
    };
    MonoField {
        status: status.to_string(),
        failing_prime: rep.failing_prime.as_ref().map(|p| p.to_string()),
    }
}

fn remark_field(m: ShiftMatch) -> RemarkField {
    RemarkField {
        d: m.d,
        sign: m.sign,
        mirror: m.mirror,
    }
}

fn shape_field(shapes: &[D6Params]) -> Vec<[String; 3]> {
    shapes
        .iter()
        .map(|s| [s.m.to_string(), s.n.to_string(), s.c.to_string()])
        .collect()
}

/// Run the full pipeline on one parsed polynomial.
pub fn analyze(expr: &PolyExpr) -> Result<ReportRecord, ReportError> {
    let start = Instant::now();
    let f = &expr.poly;
    let n = match f.degree() {
        None | Some(0) => return Err(ReportError::ConstantInput),
        Some(n) => n,
    };
    let irreducible = zpoly::is_irreducible(f);
    let monic = f.is_monic();

    let mut disc = BigInt::from(0);
    let mut fac = None;
    let mut monogenic = None;
    if monic {
        match mono::is_monogenic(f) {
            Ok(rep) => {
                disc = rep.disc.clone();
                fac = Some(factor_field(&rep.disc_factorization));
                monogenic = Some(mono_field(&rep));
            }
            Err(MonoError::ZeroDiscriminant) => {}
            Err(_) => return Err(ReportError::Internal("monogenicity engine failed")),
        }
    } else {
        disc = zpoly::discriminant(f).expect("nonconstant");
        if disc.sign() != Sign::NoSign {
            let fz = zint::factorize(&disc, &FactorBudget::default()).expect("nonzero");
            fac = Some(factor_field(&fz));
        }
    }

    let is_zero = |i: usize| f.coeff(i).sign() == Sign::NoSign;
    let even_sextic = n == 6 && monic && is_zero(1) && is_zero(3) && is_zero(5);
    let mut galois = None;
    let mut shape_params = None;
    if even_sextic {
        let (a, b, c) = (f.coeff(4), f.coeff(2), f.coeff(0));
        shape_params = Some(shape_field(&galois6::d6_shape(&a, &b, &c)));
        if irreducible {
            match galois6::classify(&a, &b, &c) {
                Ok(label) => galois = Some(galois_field(&label)),
                Err(GaloisError::ReducibleInput) => {}
                Err(GaloisError::ShapeInconsistency) => {
                    return Err(ReportError::Internal("inconsistent dihedral shape"));
                }
            }
        }
    }

    let remark_match = if monic {
        let core = zpoly::sqrt_decompose(f);
        let target = core.as_ref().unwrap_or(f);
        (target.deg() <= REMARK_DEGREE_LIMIT)
            .then(|| cyclo::match_remark(target).map(remark_field))
            .flatten()
    } else {
        None
    };

    Ok(ReportRecord {
        input: InputEcho {
            text: expr.source.clone(),
            coeffs: coeff_strings(f),
        },
        degree: n,
        disc: disc.to_string(),
        disc_factorization: fac,
        irreducible,
        galois,
        monogenic,
        shape_params,
        remark_match,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

/// Record for one search hit. Timing is pinned to zero so search output is
/// reproducible byte for byte.
pub fn hit_record(hit: &SearchHit) -> ReportRecord {
    let (a, b, c) = &hit.triple;
    let f = galois6::even_sextic(a, b, c);
    let core = zpoly::sqrt_decompose(&f).expect("even by construction");
    ReportRecord {
        input: InputEcho {
            text: render_poly(&f),
            coeffs: coeff_strings(&f),
        },
        degree: 6,
        disc: hit.report.disc.to_string(),
        disc_factorization: Some(factor_field(&hit.report.disc_factorization)),
        irreducible: true,
        galois: Some(galois_field(&hit.label)),
        monogenic: Some(mono_field(&hit.report)),
        shape_params: Some(shape_field(&hit.shape)),
        remark_match: cyclo::match_remark(&core).map(remark_field),
        timing_ms: 0,
    }
}

/// One-line JSON encoding.
pub fn to_json(rec: &ReportRecord) -> String {
    serde_json::to_string(rec).expect("record serializes")
}

pub const CSV_HEADER: [&str; 13] = [
    "input_text",
    "coeffs",
    "degree",
    "disc",
    "disc_factorization",
    "irreducible",
    "galois_group",
    "galois_certainty",
    "monogenic_status",
    "failing_prime",
    "shape_params",
    "remark_match",
    "timing_ms",
];

fn factor_text(d: &DiscFactors) -> String {
    let mut parts: Vec<String> = d
        .factors
        .iter()
        .map(|(p, e)| if *e == 1 { p.clone() } else { format!("{p}^{e}") })
        .collect();
    if d.cofactor != "1" {
        parts.push(d.cofactor.clone());
    }
    let body = if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" * ")
    };
    if d.sign < 0 {
        format!("-{body}")
    } else {
        body
    }
}

fn shift_text(sign: i8) -> &'static str {
    if sign > 0 {
        "+2"
    } else {
        "-2"
    }
}

fn csv_row(rec: &ReportRecord) -> [String; 13] {
    let opt = |s: Option<String>| s.unwrap_or_default();
    [
        rec.input.text.clone(),
        format!("[{}]", rec.input.coeffs.join(",")),
        rec.degree.to_string(),
        rec.disc.clone(),
        opt(rec.disc_factorization.as_ref().map(factor_text)),
        rec.irreducible.to_string(),
        opt(rec.galois.as_ref().map(|g| g.group.clone())),
        opt(rec.galois.as_ref().map(|g| g.certainty.clone())),
        opt(rec.monogenic.as_ref().map(|m| m.status.clone())),
        opt(rec.monogenic.as_ref().and_then(|m| m.failing_prime.clone())),
        opt(rec.shape_params.as_ref().map(|ps| {
            ps.iter()
                .map(|[m, n, c]| format!("({m};{n};{c})"))
                .collect::<Vec<_>>()
                .join("|")
        })),
        opt(rec.remark_match.as_ref().map(|r| {
            format!("d={};shift={};mirror={}", r.d, shift_text(r.sign), r.mirror)
        })),
        rec.timing_ms.to_string(),
    ]
}

/// Complete CSV document: header plus one row per record.
pub fn to_csv(records: &[ReportRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for rec in records {
        w.write_record(csv_row(rec)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flushed")).expect("utf8")
}

/// Multi-line human summary.
pub fn human_text(rec: &ReportRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "input: {}", rec.input.text);
    let _ = writeln!(s, "coefficients (ascending): [{}]", rec.input.coeffs.join(", "));
    let _ = writeln!(s, "degree: {}", rec.degree);
    match &rec.disc_factorization {
        Some(d) => {
            let _ = writeln!(s, "discriminant: {} = {}", rec.disc, factor_text(d));
        }
        None => {
            let _ = writeln!(s, "discriminant: {}", rec.disc);
        }
    }
    let _ = writeln!(s, "irreducible: {}", rec.irreducible);
    if let Some(g) = &rec.galois {
        let _ = writeln!(s, "galois: {} ({})", g.group, g.certainty);
    }
    match &rec.monogenic {
        Some(m) => match &m.failing_prime {
            Some(p) => {
                let _ = writeln!(s, "monogenic: {} (prime {} divides the index)", m.status, p);
            }
            None => {
                let _ = writeln!(s, "monogenic: {}", m.status);
            }
        },
        None => {
            let _ = writeln!(s, "monogenic: n/a");
        }
    }
    if let Some(ps) = &rec.shape_params {
        if ps.is_empty() {
            let _ = writeln!(s, "shape parameters: none");
        } else {
            let list = ps
                .iter()
                .map(|[m, n, c]| format!("({m}, {n}, {c})"))
                .collect::<Vec<_>>()
                .join("; ");
            let _ = writeln!(s, "shape parameters: {list}");
        }
    }
    if let Some(r) = &rec.remark_match {
        let _ = writeln!(
            s,
            "remark match: d = {}, shift = {}, mirrored = {}",
            r.d,
            shift_text(r.sign),
            r.mirror
        );
    }
    let _ = writeln!(s, "time: {} ms", rec.timing_ms);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn record(text: &str) -> ReportRecord {
        analyze(&parse_poly(text).unwrap()).unwrap()
    }

    #[test]
    fn monogenic_cyclic_sextic_record() {
        let rec = record("x^6-7x^4+14x^2-7");
        assert_eq!(rec.degree, 6);
        assert_eq!(rec.input.coeffs, ["-7", "0", "14", "0", "-7", "0", "1"]);
        assert!(rec.irreducible);
        let g = rec.galois.as_ref().unwrap();
        assert_eq!((g.group.as_str(), g.certainty.as_str()), ("C6", "proved"));
        let m = rec.monogenic.as_ref().unwrap();
        assert_eq!(m.status, "Monogenic");
        assert_eq!(m.failing_prime, None);
        let r = rec.remark_match.as_ref().unwrap();
        assert_eq!((r.d, r.sign, r.mirror), (7, 1, false));
        assert_eq!(
            rec.shape_params.as_deref().unwrap(),
            [["0".to_string(), "-7".to_string(), "-7".to_string()]]
        );
    }

    #[test]
    fn quadratic_record_has_no_sextic_fields() {
        let rec = record("x^2+1");
        assert_eq!(rec.degree, 2);
        assert_eq!(rec.disc, "-4");
        assert!(rec.galois.is_none());
        assert!(rec.shape_params.is_none());
        assert_eq!(rec.monogenic.as_ref().unwrap().status, "Monogenic");
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(
            analyze(&parse_poly("5").unwrap()).unwrap_err(),
            ReportError::ConstantInput
        );
        assert_eq!(
            analyze(&parse_poly("0").unwrap()).unwrap_err(),
            ReportError::ConstantInput
        );
        // Repeated root: discriminant zero, no monogenicity verdict.
        let rec = record("x^2+2x+1");
        assert_eq!(rec.disc, "0");
        assert!(rec.disc_factorization.is_none());
        assert!(rec.monogenic.is_none());
        // Non-monic: discriminant still reported, content ignored for
        // irreducibility, no monogenicity verdict.
        let rec = record("2x^2+2");
        assert_eq!(rec.disc, "-16");
        assert!(rec.monogenic.is_none());
        assert!(rec.irreducible);
    }

    #[test]
    fn json_and_csv_encodings_are_schema_stable() {
        let rec = record("x^6-7x^4+14x^2-7");
        let v: serde_json::Value = serde_json::from_str(&to_json(&rec)).unwrap();
        let obj = v.as_object().unwrap();
        for key in [
            "input",
            "degree",
            "disc",
            "disc_factorization",
            "irreducible",
            "galois",
            "monogenic",
            "shape_params",
            "remark_match",
            "timing_ms",
        ] {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert_eq!(v["input"]["text"], "x^6-7x^4+14x^2-7");
        assert_eq!(v["galois"]["group"], "C6");
        assert_eq!(v["monogenic"]["failing_prime"], serde_json::Value::Null);

        let quad = record("x^2+1");
        let v: serde_json::Value = serde_json::from_str(&to_json(&quad)).unwrap();
        assert_eq!(v["galois"], serde_json::Value::Null);

        let csv = to_csv(&[rec]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        let row = lines.next().unwrap();
        assert!(row.contains("\"[-7,0,14,0,-7,0,1]\""));
        assert!(row.contains("Monogenic"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn factor_text_forms() {
        let d = DiscFactors {
            sign: -1,
            factors: vec![("2".into(), 10), ("7".into(), 5)],
            cofactor: "1".into(),
        };
        assert_eq!(factor_text(&d), "-2^10 * 7^5");
        let d = DiscFactors {
            sign: 1,
            factors: vec![("3".into(), 1)],
            cofactor: "91".into(),
        };
        assert_eq!(factor_text(&d), "3 * 91");
        let d = DiscFactors {
            sign: -1,
            factors: vec![],
            cofactor: "1".into(),
        };
        assert_eq!(factor_text(&d), "-1");
    }
}
