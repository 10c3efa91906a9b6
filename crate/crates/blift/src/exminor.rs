//! Excluded-minor certification for the class of matroids that are graphic
//! or bicircular lift.
//!
//! The class is minor-closed, so a matroid outside it is an excluded minor
//! exactly when every single-element deletion and contraction lies inside.
//! A certificate stores the negative membership verdict for the matroid
//! itself and a positive verdict (with witness) for all 2n minors.

use crate::caps::SearchCaps;
use crate::error::{Error, Result};
use crate::lift::{membership_bl_bar, ClassVerdict};
use crate::matroid::{catalog, iso, parse_matroid, parse_matroid_header, Connectivity, Matroid};
use crate::bits::ElemSet;
use rayon::prelude::*;

/// Membership verdicts for the deletion and contraction of one element.
#[derive(Debug, Clone)]
pub struct PerElementVerdicts {
    pub element: usize,
    pub deletion: ClassVerdict,
    pub contraction: ClassVerdict,
}

/// Machine-checkable evidence that `matroid` is an excluded minor: it is not
/// in the class (exhaustively), while all single-element minors are, each
/// with a representing witness.
#[derive(Debug, Clone)]
pub struct ExclusionCertificate {
    pub matroid: Matroid,
    pub not_member: ClassVerdict,
    pub connectivity: Connectivity,
    pub per_element: Vec<PerElementVerdicts>,
    /// Set when the certificate contradicts expected structure: a
    /// 3-connected excluded minor carrying a U(2,5)-restriction.
    pub consistency_finding: Option<String>,
}

impl ExclusionCertificate {
    /// Structural invariants of a well-formed certificate.
    pub fn well_formed(&self) -> bool {
        let n = self.matroid.ground_size();
        !self.not_member.member
            && self.not_member.search_exhausted
            && self.per_element.len() == n
            && self
                .per_element
                .iter()
                .enumerate()
                .all(|(i, pe)| pe.element == i && pe.deletion.member && pe.contraction.member)
    }

    /// Re-runs membership on the stored matroid and all its single-element
    /// minors, reproducing the stored verdicts through public APIs.
    pub fn revalidate(&self, caps: &SearchCaps) -> Result<bool> {
        if !self.well_formed() {
            return Ok(false);
        }
        let again = membership_bl_bar(&self.matroid, caps)?;
        if again.member {
            return Ok(false);
        }
        for pe in &self.per_element {
            let e = ElemSet::singleton(pe.element);
            let (del, _) = self.matroid.minor(e, ElemSet::empty())?;
            let (con, _) = self.matroid.minor(ElemSet::empty(), e)?;
            if !membership_bl_bar(&del, caps)?.member || !membership_bl_bar(&con, caps)?.member {
                return Ok(false);
            }
            for (verdict, minor) in [(&pe.deletion, &del), (&pe.contraction, &con)] {
                if let Some(w) = &verdict.witness {
                    if !w.validates(minor) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Certifies `m` as an excluded minor, or returns `None` when it is a class
/// member or some proper minor already falls outside. Resource errors
/// propagate; no partial certificate is ever produced.
pub fn is_excluded_minor(m: &Matroid, caps: &SearchCaps) -> Result<Option<ExclusionCertificate>> {
    let not_member = membership_bl_bar(m, caps)?;
    if not_member.member {
        return Ok(None);
    }
    debug_assert!(not_member.search_exhausted);
    let mut per_element = Vec::with_capacity(m.ground_size());
    for e in 0..m.ground_size() {
        let set = ElemSet::singleton(e);
        let (del, _) = m.minor(set, ElemSet::empty())?;
        let (con, _) = m.minor(ElemSet::empty(), set)?;
        let deletion = membership_bl_bar(&del, caps)?;
        let contraction = membership_bl_bar(&con, caps)?;
        if !deletion.member || !contraction.member {
            return Ok(None);
        }
        per_element.push(PerElementVerdicts {
            element: e,
            deletion,
            contraction,
        });
    }
    let connectivity = m.connectivity_order()?;
    let consistency_finding = if connectivity.is_three_connected() && m.has_u25_restriction() {
        Some("3-connected excluded minor carries a U(2,5)-restriction".to_string())
    } else {
        None
    };
    Ok(Some(ExclusionCertificate {
        matroid: m.clone(),
        not_member,
        connectivity,
        per_element,
        consistency_finding,
    }))
}

/// The five known excluded minors with certificates, in a fixed order.
/// Fails loudly with the offending name if any certificate cannot be built.
pub fn verify_named_excluded() -> Result<Vec<(String, ExclusionCertificate)>> {
    let mut out = Vec::new();
    for (name, m) in named_excluded_inputs()? {
        let caps = SearchCaps::for_ground_size(m.ground_size());
        match is_excluded_minor(&m, &caps) {
            Ok(Some(cert)) => out.push((name, cert)),
            Ok(None) => {
                return Err(Error::Construction(format!(
                    "{name} failed excluded-minor certification"
                )))
            }
            Err(e) => {
                return Err(Error::Resource(format!("{name}: {e}")));
            }
        }
    }
    Ok(out)
}

pub fn named_excluded_inputs() -> Result<Vec<(String, Matroid)>> {
    let u24_loop = crate::matroid::uniform(2, 4)?.direct_sum(&crate::matroid::uniform(0, 1)?)?;
    Ok(vec![
        ("dualK5".to_string(), catalog::get("dualK5")?),
        ("dualK33".to_string(), catalog::get("dualK33")?),
        ("F7".to_string(), catalog::get("F7")?),
        ("F7dual".to_string(), catalog::get("F7dual")?),
        ("U24+loop".to_string(), u24_loop),
    ])
}

// ---------------------------------------------------------------------------
// Catalog stream scanning
// ---------------------------------------------------------------------------

/// Outcome for one record of a catalog stream.
#[derive(Debug, Clone)]
pub enum ScanOutcome {
    Certificate(Box<ExclusionCertificate>),
    /// Class member (not an excluded minor).
    Member,
    /// Outside the class but with a proper minor also outside.
    NotMinimal,
    /// Isomorphic to an earlier certified record.
    Duplicate { of: usize },
    /// Not processed; the reason is recorded.
    Skipped { reason: String },
}

#[derive(Debug, Clone)]
pub struct ScanItem {
    pub index: usize,
    pub line: usize,
    pub outcome: ScanOutcome,
}

/// Hard input caps from the class's structure theory: excluded minors beyond
/// these bounds cannot occur, so larger records are not searched.
pub const SCAN_MAX_RANK: usize = 11;
pub const SCAN_MAX_SIZE: usize = 224;

/// Scans a blank-line-separated stream of matroid records, certifying the
/// excluded minors among them. Items are processed in parallel but reported
/// in input order, with isomorphic duplicates of earlier certificates
/// suppressed at the ordered merge point.
pub fn scan_catalog_stream(
    text: &str,
    file: &str,
    user_caps: Option<SearchCaps>,
) -> Result<Vec<ScanItem>> {
    let records = split_records(text);
    let mut parsed: Vec<(usize, usize, std::result::Result<Matroid, String>)> = Vec::new();
    for (idx, (line, body)) in records.iter().enumerate() {
        let header = body
            .lines()
            .find(|l| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            })
            .unwrap_or("");
        match parse_matroid_header(header) {
            Some((n, r)) if n > SCAN_MAX_SIZE || r > SCAN_MAX_RANK => {
                let reason = format!(
                    "size {n} / rank {r} beyond input caps ({SCAN_MAX_SIZE} elements, rank {SCAN_MAX_RANK})"
                );
                parsed.push((idx, *line, Err(reason)));
                continue;
            }
            Some((n, _)) if n > crate::bits::MAX_GROUND => {
                parsed.push((
                    idx,
                    *line,
                    Err(format!(
                        "{n} elements beyond the engine cap {}",
                        crate::bits::MAX_GROUND
                    )),
                ));
                continue;
            }
            _ => {}
        }
        match parse_matroid(body, file) {
            Ok(m) => parsed.push((idx, *line, Ok(m))),
            Err(Error::Parse { line: rel, msg, .. }) => {
                return Err(Error::parse(file, line + rel.saturating_sub(1), msg))
            }
            Err(e) => return Err(e),
        }
    }

    let results: Vec<ScanItem> = parsed
        .into_par_iter()
        .map(|(index, line, parsed)| {
            let outcome = match parsed {
                Err(reason) => ScanOutcome::Skipped { reason },
                Ok(m) => {
                    let caps =
                        user_caps.unwrap_or_else(|| SearchCaps::for_ground_size(m.ground_size()));
                    match is_excluded_minor(&m, &caps) {
                        Ok(Some(cert)) => ScanOutcome::Certificate(Box::new(cert)),
                        Ok(None) => match membership_bl_bar(&m, &caps) {
                            Ok(v) if v.member => ScanOutcome::Member,
                            Ok(_) => ScanOutcome::NotMinimal,
                            Err(e) => ScanOutcome::Skipped {
                                reason: e.to_string(),
                            },
                        },
                        Err(e) => ScanOutcome::Skipped {
                            reason: e.to_string(),
                        },
                    }
                }
            };
            ScanItem {
                index,
                line,
                outcome,
            }
        })
        .collect();

    // Ordered dedup pass over certified items.
    let mut out = Vec::with_capacity(results.len());
    let mut emitted: Vec<(usize, Matroid)> = Vec::new();
    for mut item in results {
        if let ScanOutcome::Certificate(cert) = &item.outcome {
            if let Some((of, _)) = emitted
                .iter()
                .find(|(_, prev)| iso::find_isomorphism(prev, &cert.matroid).is_some())
            {
                item.outcome = ScanOutcome::Duplicate { of: *of };
            } else {
                emitted.push((item.index, cert.matroid.clone()));
            }
        }
        out.push(item);
    }
    Ok(out)
}

/// Splits a catalog stream into records at blank lines, remembering the
/// 1-based starting line of each record.
fn split_records(text: &str) -> Vec<(usize, String)> {
    let mut out: Vec<(usize, String)> = Vec::new();
    let mut current = String::new();
    let mut start = 0usize;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !current.trim().is_empty() {
                out.push((start + 1, std::mem::take(&mut current)));
            }
            current.clear();
        } else {
            if current.is_empty() {
                start = i;
            }
            current.push_str(line);
            current.push('\n');
        }
    }
    if !current.trim().is_empty() {
        out.push((start + 1, current));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{render_matroid, uniform};

    #[test]
    fn u24_plus_loop_is_certified() {
        let m = uniform(2, 4)
            .unwrap()
            .direct_sum(&uniform(0, 1).unwrap())
            .unwrap();
        let caps = SearchCaps::default();
        let cert = is_excluded_minor(&m, &caps).unwrap().expect("certificate");
        assert!(cert.well_formed());
        assert!(matches!(cert.connectivity, Connectivity::Disconnected { .. }));
        assert!(cert.consistency_finding.is_none());
        assert!(cert.revalidate(&caps).unwrap());
    }

    #[test]
    fn members_are_not_certified() {
        let caps = SearchCaps::default();
        let u24 = uniform(2, 4).unwrap();
        assert!(is_excluded_minor(&u24, &caps).unwrap().is_none());
        let mk4 = catalog::get("MK4").unwrap();
        assert!(is_excluded_minor(&mk4, &caps).unwrap().is_none());
    }

    #[test]
    fn scan_stream_finds_f7_once() {
        let f7 = catalog::get("F7").unwrap();
        let u24 = uniform(2, 4).unwrap();
        let mk4 = catalog::get("MK4").unwrap();
        let stream = format!(
            "{}\n{}\n{}\n",
            render_matroid(&u24),
            render_matroid(&f7),
            render_matroid(&mk4)
        );
        let items = scan_catalog_stream(&stream, "stream", None).unwrap();
        assert_eq!(items.len(), 3);
        assert!(matches!(items[0].outcome, ScanOutcome::Member));
        assert!(matches!(items[1].outcome, ScanOutcome::Certificate(_)));
        assert!(matches!(items[2].outcome, ScanOutcome::Member));
    }

    #[test]
    fn scan_deduplicates_isomorphic_certificates() {
        let f7d = catalog::get("F7dual").unwrap();
        let stream = format!("{}\n{}", render_matroid(&f7d), render_matroid(&f7d));
        let items = scan_catalog_stream(&stream, "stream", None).unwrap();
        assert!(matches!(items[0].outcome, ScanOutcome::Certificate(_)));
        assert!(matches!(items[1].outcome, ScanOutcome::Duplicate { of: 0 }));
    }

    #[test]
    fn scan_skips_overcap_records() {
        let stream = "MATROID 40 12\nCIRCUITS 0\n\nMATROID 2 2\nCIRCUITS 0\n";
        let items = scan_catalog_stream(stream, "stream", None).unwrap();
        assert!(matches!(items[0].outcome, ScanOutcome::Skipped { .. }));
        assert!(matches!(items[1].outcome, ScanOutcome::Member));
    }

    #[test]
    fn scan_empty_stream() {
        assert!(scan_catalog_stream("", "stream", None).unwrap().is_empty());
    }

    #[test]
    fn scan_reports_parse_errors_with_line() {
        let stream = "MATROID 3 2\nCIRCUITS 1\n0 0 1\n";
        let err = scan_catalog_stream(stream, "stream", None).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}
