//! The operations behind each command-line subcommand, as pure functions
//! from source text to an [`Outcome`].
//!
//! Exit codes: 0 when every requested check passes, 1 when a report holds a
//! failure, 2 for input and structural errors.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use super::build::{build, Binding, Env, Object};
use super::emit::emit_object;
use super::{parse, FrontendError, Pos};
use crate::action::{
    assoc_action_report, induced_lie_action, lie_action_report, retitle, semidirect_assoc, semidirect_lie,
};
use crate::algebra::Flavor;
use crate::braid::{
    alpha_iso, alpha_iso_lie, beta_iso, braided_cat_report, braided_xmod_assoc_report, braided_xmod_lie_report,
    cat_braiding_liefy, cx_base_assoc, cx_base_lie, cx_functor, cx_functor_lie, xc_functor, xc_functor_lie,
    xmod_braiding_liefy, LieVariant,
};
use crate::error::Error;
use crate::groupx::{validate_group_braiding, validate_group_xmod};
use crate::icat::{cat_algebra_report, cat_liefy};
use crate::natensor::{tensor_braiding, tensor_square};
use crate::report::{Status, ValidationReport, Witness};
use crate::xmod::{xmod_assoc_report, xmod_lie_report, xmod_liefy};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}`; expected text or json")),
        }
    }
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructKind {
    Liefy,
    Semidirect,
    Cx,
    Xc,
    Natensor,
    TensorXMod,
    CatLiefy,
    XLiefy,
}

impl ConstructKind {
    pub const ALL: [ConstructKind; 8] = [
        ConstructKind::Liefy,
        ConstructKind::Semidirect,
        ConstructKind::Cx,
        ConstructKind::Xc,
        ConstructKind::Natensor,
        ConstructKind::TensorXMod,
        ConstructKind::CatLiefy,
        ConstructKind::XLiefy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructKind::Liefy => "liefy",
            ConstructKind::Semidirect => "semidirect",
            ConstructKind::Cx => "cx",
            ConstructKind::Xc => "xc",
            ConstructKind::Natensor => "natensor",
            ConstructKind::TensorXMod => "tensor-xmod",
            ConstructKind::CatLiefy => "catliefy",
            ConstructKind::XLiefy => "xliefy",
        }
    }

    /// Suffix of the output object's name.
    fn suffix(self) -> &'static str {
        match self {
            ConstructKind::Liefy => "lie",
            ConstructKind::Semidirect => "sd",
            ConstructKind::Cx => "cx",
            ConstructKind::Xc => "xc",
            ConstructKind::Natensor => "T",
            ConstructKind::TensorXMod => "tensor",
            ConstructKind::CatLiefy => "catlie",
            ConstructKind::XLiefy => "xlie",
        }
    }

    fn accepts(self) -> &'static str {
        match self {
            ConstructKind::Liefy => "an associative algebra, action, crossed module, categorical algebra or braiding",
            ConstructKind::Semidirect => "an action",
            ConstructKind::Cx => "a crossed module or a braided crossed module",
            ConstructKind::Xc => "a braided categorical algebra",
            ConstructKind::Natensor | ConstructKind::TensorXMod => "a Lie algebra",
            ConstructKind::CatLiefy => "an associative categorical algebra or braided categorical algebra",
            ConstructKind::XLiefy => "an associative crossed module or braided crossed module",
        }
    }
}

impl FromStr for ConstructKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        ConstructKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = ConstructKind::ALL.iter().map(|k| k.as_str()).collect();
            format!("unknown construction `{s}`; expected one of {}", names.join(", "))
        })
    }
}

pub fn load(src: &str) -> Result<Env, FrontendError> {
    build(&parse(src)?)
}

fn lookup<'a>(env: &'a Env, subject: &str) -> Result<&'a Binding, FrontendError> {
    env.get(subject).ok_or_else(|| FrontendError::unknown(Pos::default(), subject))
}

/// Axiom report for one declaration, `None` for objects that carry no axioms
/// beyond their construction.
pub fn report_for(name: &str, object: &Object) -> Option<ValidationReport> {
    Some(match object {
        Object::Algebra { algebra, flavor: Some(f) } => algebra.flavor_report(name, *f),
        Object::AssocAction(a) => assoc_action_report(a, name),
        Object::LieAction(a) => lie_action_report(a, name),
        Object::XModAssoc(x) => xmod_assoc_report(x, name),
        Object::XModLie(x) => xmod_lie_report(x, name),
        Object::XBraidingAssoc(b) => braided_xmod_assoc_report(b, name),
        Object::XBraidingLie(b) => braided_xmod_lie_report(b, name),
        Object::Cat(c) => cat_algebra_report(c, name),
        Object::CatBraiding { braiding, variant } => braided_cat_report(braiding, name, *variant),
        Object::GroupXMod(x) => {
            let mut r = validate_group_xmod(x);
            if x.brace.is_some() {
                r.extend(validate_group_braiding(x).expect("braiding table present"));
            }
            retitle(r, name)
        }
        Object::Algebra { flavor: None, .. } | Object::Map(_) | Object::Bilinear(_) | Object::Group(_) => return None,
    })
}

/// Reports for `subject`, or for every top-level declaration when `None`.
/// Independent subjects are checked concurrently; output keeps declaration order.
pub fn validation_reports(env: &Env, subject: Option<&str>) -> Result<Vec<ValidationReport>, FrontendError> {
    if let Some(s) = subject {
        let b = lookup(env, s)?;
        return report_for(&b.name, &b.object).map(|r| vec![r]).ok_or_else(|| {
            FrontendError::invalid(b.pos, format!("`{s}` is {} and has no axioms to check", b.object.kind()))
        });
    }
    let roots = env.roots();
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = roots.iter().map(|b| scope.spawn(move || report_for(&b.name, &b.object))).collect();
        handles.into_iter().map(|h| h.join().expect("validation thread")).collect::<Vec<_>>()
    });
    Ok(reports.into_iter().flatten().collect())
}

fn wrong_input(kind: ConstructKind, b: &Binding) -> FrontendError {
    FrontendError::invalid(
        b.pos,
        format!("`construct {}` needs {}; `{}` is {}", kind.as_str(), kind.accepts(), b.name, b.object.kind()),
    )
}

/// Apply a construction to a declared object.
pub fn construct_object(kind: ConstructKind, b: &Binding) -> Result<Object, FrontendError> {
    use ConstructKind as K;
    let core = |e: Error| FrontendError::core(Some(b.pos), &b.name, e);
    let out = match (kind, &b.object) {
        (K::Liefy, Object::Algebra { algebra, .. }) => {
            Object::Algebra { algebra: algebra.liefy().map_err(core)?, flavor: Some(Flavor::Lie) }
        }
        (K::Liefy, Object::AssocAction(a)) => Object::LieAction(induced_lie_action(a).map_err(core)?),
        (K::Liefy | K::XLiefy, Object::XModAssoc(x)) => Object::XModLie(xmod_liefy(x).map_err(core)?),
        (K::Liefy | K::XLiefy, Object::XBraidingAssoc(x)) => {
            Object::XBraidingLie(xmod_braiding_liefy(x).map_err(core)?)
        }
        (K::Liefy | K::CatLiefy, Object::Cat(c)) => Object::Cat(cat_liefy(c).map_err(core)?),
        (K::Liefy | K::CatLiefy, Object::CatBraiding { braiding, variant }) => {
            Object::CatBraiding { braiding: cat_braiding_liefy(braiding).map_err(core)?, variant: *variant }
        }
        (K::Semidirect, Object::AssocAction(a)) => {
            Object::Algebra { algebra: semidirect_assoc(a).map_err(core)?.algebra, flavor: Some(Flavor::Assoc) }
        }
        (K::Semidirect, Object::LieAction(a)) => {
            Object::Algebra { algebra: semidirect_lie(a).map_err(core)?.algebra, flavor: Some(Flavor::Lie) }
        }
        (K::Cx, Object::XModAssoc(x)) => Object::Cat(cx_base_assoc(x).map_err(core)?),
        (K::Cx, Object::XModLie(x)) => Object::Cat(cx_base_lie(x).map_err(core)?),
        (K::Cx, Object::XBraidingAssoc(x)) => {
            Object::CatBraiding { braiding: cx_functor(x).map_err(core)?, variant: LieVariant::Ulualan }
        }
        (K::Cx, Object::XBraidingLie(x)) => {
            Object::CatBraiding { braiding: cx_functor_lie(x).map_err(core)?, variant: LieVariant::Ulualan }
        }
        (K::Xc, Object::CatBraiding { braiding, .. }) => match braiding.flavor() {
            Flavor::Assoc => Object::XBraidingAssoc(xc_functor(braiding).map_err(core)?),
            Flavor::Lie => Object::XBraidingLie(xc_functor_lie(braiding).map_err(core)?),
        },
        (K::Natensor, Object::Algebra { algebra, .. }) => Object::Algebra {
            algebra: tensor_square(algebra).map_err(core)?.carrier().clone(),
            flavor: Some(Flavor::Lie),
        },
        (K::TensorXMod, Object::Algebra { algebra, .. }) => {
            let ts = tensor_square(algebra).map_err(core)?;
            Object::XBraidingLie(tensor_braiding(&ts).map_err(core)?)
        }
        _ => return Err(wrong_input(kind, b)),
    };
    Ok(out)
}

/// The name a construction's output is declared under.
pub fn construct_name(kind: ConstructKind, subject: &str) -> String {
    format!("{subject}_{}", kind.suffix())
}

/// Relabel entry subjects `x.rest` as `prefix.rest`.
fn rename(r: ValidationReport, prefix: &str) -> ValidationReport {
    let mut out = ValidationReport::new(prefix);
    for mut e in r.entries {
        e.subject = match e.subject.find('.') {
            Some(i) => format!("{prefix}{}", &e.subject[i..]),
            None => prefix.to_string(),
        };
        out.entries.push(e);
    }
    out
}

/// α on the braided crossed module side and β on the categorical side,
/// whichever side `subject` is declared on. Without a subject the last
/// declared braiding is used.
pub fn roundtrip_reports(env: &Env, subject: Option<&str>) -> Result<Vec<ValidationReport>, FrontendError> {
    let b = match subject {
        Some(s) => lookup(env, s)?,
        None => env
            .bindings()
            .iter()
            .rev()
            .find(|b| {
                matches!(b.object, Object::XBraidingAssoc(_) | Object::XBraidingLie(_) | Object::CatBraiding { .. })
            })
            .ok_or_else(|| FrontendError::invalid(Pos::default(), "no braiding declared; pass --subject"))?,
    };
    let core = |e: Error| FrontendError::core(Some(b.pos), &b.name, e);
    let (alpha, beta) = (format!("{}.alpha", b.name), format!("{}.beta", b.name));
    let (ra, rb) = match &b.object {
        Object::XBraidingAssoc(x) => {
            let a = alpha_iso(x).map_err(core)?;
            let be = beta_iso(&cx_functor(x).map_err(core)?).map_err(core)?;
            (a.report, be.report)
        }
        Object::XBraidingLie(x) => {
            let a = alpha_iso_lie(x).map_err(core)?;
            let be = beta_iso(&cx_functor_lie(x).map_err(core)?).map_err(core)?;
            (a.report, be.report)
        }
        Object::CatBraiding { braiding, .. } => {
            let be = beta_iso(braiding).map_err(core)?;
            let a = match braiding.flavor() {
                Flavor::Assoc => alpha_iso(&xc_functor(braiding).map_err(core)?).map_err(core)?.report,
                Flavor::Lie => alpha_iso_lie(&xc_functor_lie(braiding).map_err(core)?).map_err(core)?.report,
            };
            (a, be.report)
        }
        o => {
            return Err(FrontendError::invalid(
                b.pos,
                format!("`roundtrip` needs a braiding; `{}` is {}", b.name, o.kind()),
            ))
        }
    };
    Ok(vec![rename(ra, &alpha), rename(rb, &beta)])
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    subject: &'a str,
    axiom_tag: &'a str,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Witness>,
}

pub fn render(reports: &[ValidationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let entries: Vec<JsonEntry> = reports
                .iter()
                .flat_map(|r| &r.entries)
                .map(|e| JsonEntry {
                    subject: &e.subject,
                    axiom_tag: e.tag.as_str(),
                    status: e.status,
                    witness: e.witness.as_ref(),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&entries).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&r.to_string());
            }
            let total: usize = reports.iter().map(|r| r.entries.len()).sum();
            let failed = reports.iter().flat_map(|r| &r.entries).filter(|e| e.status == Status::Fail).count();
            if failed == 0 {
                let _ = writeln!(s, "ok: {total} checks passed");
            } else {
                let _ = writeln!(s, "FAILED: {failed} of {total} checks");
            }
            s
        }
    }
}

fn from_reports(reports: &[ValidationReport], format: Format) -> Outcome {
    let code = if reports.iter().all(|r| r.passed()) { 0 } else { 1 };
    Outcome { code, stdout: render(reports, format), stderr: String::new() }
}

pub fn error_outcome(e: &FrontendError, format: Format) -> Outcome {
    let stdout = e.report().map(|r| render(std::slice::from_ref(r), format)).unwrap_or_default();
    Outcome { code: e.exit_code(), stdout, stderr: format!("error: {e}\n") }
}

fn finish(result: Result<Outcome, FrontendError>, format: Format) -> Outcome {
    result.unwrap_or_else(|e| error_outcome(&e, format))
}

pub fn validate(src: &str, subject: Option<&str>, format: Format) -> Outcome {
    finish(load(src).and_then(|env| validation_reports(&env, subject)).map(|r| from_reports(&r, format)), format)
}

pub fn roundtrip(src: &str, subject: Option<&str>, format: Format) -> Outcome {
    finish(load(src).and_then(|env| roundtrip_reports(&env, subject)).map(|r| from_reports(&r, format)), format)
}

/// Canonical DSL for the construction, on stdout.
pub fn construct(kind: ConstructKind, src: &str, subject: &str) -> Outcome {
    let run = || -> Result<Outcome, FrontendError> {
        let env = load(src)?;
        let b = lookup(&env, subject)?;
        let object = construct_object(kind, b)?;
        let doc = emit_object(env.field, &construct_name(kind, subject), &object);
        Ok(Outcome { code: 0, stdout: doc.to_string(), stderr: String::new() })
    };
    finish(run(), Format::Text)
}

/// The canonical reprint of a document.
pub fn fmt(src: &str) -> Outcome {
    match parse(src) {
        Ok(doc) => Outcome { code: 0, stdout: doc.to_string(), stderr: String::new() },
        Err(e) => error_outcome(&e, Format::Text),
    }
}
