//! JSON and CSV renderings.
//!
//! JSON is the canonical format. Every integer that can grow with the input is a
//! decimal string; `k` is a plain number. CSV is a flat projection of the same
//! record; graded dimensions are joined with `;` and undefined fields are empty.

use hilbstab::pfunctor::ext_table_len;
use hilbstab::{BigUint, Certificate, GradedDims, HilbNSClass, SearchHit, VectorEcho};
use num_bigint::BigInt;
use serde::Serialize;

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct CertificateRow {
    h_squared: String,
    k: u64,
    r: String,
    m: String,
    s: String,
    admissible: bool,
    chi: String,
    v_sq: String,
    threshold: String,
    margin: String,
    nonempty_ok: bool,
    ineq_ok: bool,
    locally_free_ok: bool,
    fine_ok: bool,
    primitive_ok: bool,
    gcd: String,
    h0: String,
    image_rank: String,
    image_c1_a: String,
    image_c1_b: String,
    taut_rank: String,
    taut_c1_a: String,
    taut_c1_b: String,
    product_c1: String,
    moduli_dim: String,
    ext_on_x: String,
    ext_on_hilb: String,
    chi_gg_formula: String,
    chi_gg_direct: String,
}

fn opt(value: Option<&BigInt>) -> String {
    value.map(ToString::to_string).unwrap_or_default()
}

fn class_parts(class: Option<&HilbNSClass>) -> (String, String) {
    match class {
        Some(c) => (c.a.to_string(), c.b.to_string()),
        None => Default::default(),
    }
}

fn joined(dims: &[BigUint]) -> String {
    dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

impl From<&Certificate> for CertificateRow {
    fn from(cert: &Certificate) -> Self {
        let VectorEcho { h_squared, k, r, m, s } = &cert.input;
        let report = &cert.report;
        let (image_c1_a, image_c1_b) = class_parts(cert.image.c1.as_ref());
        let (taut_c1_a, taut_c1_b) = class_parts(cert.taut.c1.as_ref());
        Self {
            h_squared: h_squared.to_string(),
            k: *k,
            r: r.to_string(),
            m: m.to_string(),
            s: s.to_string(),
            admissible: cert.admissible,
            chi: report.chi.to_string(),
            v_sq: report.v_sq.to_string(),
            threshold: report.threshold.to_string(),
            margin: report.margin.to_string(),
            nonempty_ok: report.nonempty_ok,
            ineq_ok: report.ineq_ok,
            locally_free_ok: report.locally_free_ok,
            fine_ok: report.fine_ok,
            primitive_ok: report.primitive_ok,
            gcd: report.gcd.to_string(),
            h0: opt(cert.vanishing.as_ref().map(|v| &v.h0)),
            image_rank: opt(cert.image.rank.as_ref()),
            image_c1_a,
            image_c1_b,
            taut_rank: opt(cert.taut.rank.as_ref()),
            taut_c1_a,
            taut_c1_b,
            product_c1: opt(cert.product_c1.as_ref()),
            moduli_dim: opt(cert.moduli_dim.as_ref()),
            ext_on_x: cert.ext_on_x.as_ref().map(|d| joined(d.dims())).unwrap_or_default(),
            ext_on_hilb: cert
                .ext_on_hilb
                .as_ref()
                .map(|d| joined(d.dims()))
                .unwrap_or_default(),
            chi_gg_formula: cert.extension_euler.formula.to_string(),
            chi_gg_direct: cert.extension_euler.direct.to_string(),
        }
    }
}

fn csv_rows<R: Serialize>(rows: impl IntoIterator<Item = R>, empty_header: &[&str]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut any = false;
    for row in rows {
        writer.serialize(row).expect("in-memory write");
        any = true;
    }
    if !any {
        writer.write_record(empty_header).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
}

const CERTIFICATE_HEADER: [&str; 29] = [
    "h_squared",
    "k",
    "r",
    "m",
    "s",
    "admissible",
    "chi",
    "v_sq",
    "threshold",
    "margin",
    "nonempty_ok",
    "ineq_ok",
    "locally_free_ok",
    "fine_ok",
    "primitive_ok",
    "gcd",
    "h0",
    "image_rank",
    "image_c1_a",
    "image_c1_b",
    "taut_rank",
    "taut_c1_a",
    "taut_c1_b",
    "product_c1",
    "moduli_dim",
    "ext_on_x",
    "ext_on_hilb",
    "chi_gg_formula",
    "chi_gg_direct",
];

pub fn certificates_csv<'a>(certs: impl IntoIterator<Item = &'a Certificate>) -> String {
    csv_rows(certs.into_iter().map(CertificateRow::from), &CERTIFICATE_HEADER)
}

pub fn hits_json(hits: &[SearchHit]) -> String {
    json(hits)
}

pub fn hits_csv(hits: &[SearchHit]) -> String {
    certificates_csv(hits.iter().map(|h| &h.certificate))
}

/// Ext tables padded to their natural degree ranges `0..=2` and `0..=2k`.
#[derive(Debug, Serialize)]
pub struct ExtTable {
    pub input: VectorEcho,
    pub same_object: bool,
    pub ext_on_x: Vec<String>,
    pub ext_on_hilb: Vec<String>,
}

impl ExtTable {
    pub fn new(input: VectorEcho, same_object: bool, on_x: &GradedDims, on_hilb: &GradedDims) -> Self {
        let strings = |d: Vec<BigUint>| d.iter().map(ToString::to_string).collect();
        let k = input.k;
        Self {
            input,
            same_object,
            ext_on_x: strings(on_x.padded(ext_table_len(1))),
            ext_on_hilb: strings(on_hilb.padded(ext_table_len(k))),
        }
    }

    pub fn csv(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            space: &'a str,
            dims: String,
        }
        let rows = [
            Row {
                space: "X",
                dims: self.ext_on_x.join(";"),
            },
            Row {
                space: "hilb",
                dims: self.ext_on_hilb.join(";"),
            },
        ];
        csv_rows(rows, &["space", "dims"])
    }
}
