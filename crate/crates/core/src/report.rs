//! Validation reports: one entry per checked axiom, with a witness on failure.
//!
//! Axiom identities are multilinear, so every check sweeps basis tuples in
//! lexicographic order and stops at the first violation; the witness is that
//! tuple together with both sides of the equation.

use std::fmt;

use serde::Serialize;

use crate::linspace::Vector;

macro_rules! axioms {
    ($($variant:ident => $tag:literal),* $(,)?) => {
        /// Closed set of axiom tags appearing in reports.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Axiom { $($variant),* }

        impl Axiom {
            pub const ALL: &'static [Axiom] = &[$(Axiom::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(Axiom::$variant => $tag),* }
            }

            pub fn from_tag(tag: &str) -> Option<Axiom> {
                match tag { $($tag => Some(Axiom::$variant),)* _ => None }
            }
        }
    };
}

axioms! {
    Assoc => "Assoc",
    LieAlt => "LieAlt",
    Jacobi => "Jacobi",
    Hom => "Hom",
    Iso => "Iso",
    AAs1 => "AAs1", AAs2 => "AAs2", AAs3 => "AAs3",
    AAs4 => "AAs4", AAs5 => "AAs5", AAs6 => "AAs6",
    ALie1 => "ALie1", ALie2 => "ALie2",
    XAs1 => "XAs1", XAs2 => "XAs2",
    XLie1 => "XLie1", XLie2 => "XLie2",
    XAssH1 => "XAssH1", XAssH2 => "XAssH2",
    XLieH1 => "XLieH1", XLieH2 => "XLieH2",
    BXH => "BXH",
    CatSE => "ICat-se", CatTE => "ICat-te",
    CatComp => "ICat-k", CatSrcTgt => "ICat-st",
    CatUnit => "ICat-unit", CatAssoc => "ICat-assoc",
    CatKer => "ICat-ker",
    FunS => "Fun-s", FunT => "Fun-t", FunE => "Fun-e",
    BIFun => "BIFun",
    AsT1 => "AsT1", AsT2 => "AsT2", AsT3 => "AsT3", AsT4 => "AsT4",
    LieT1 => "LieT1", LieT2 => "LieT2", LieT3 => "LieT3", LieT4 => "LieT4",
    LieB3 => "LieB3", LieB4 => "LieB4",
    AntiLeft => "Anti-left", AntiRight => "Anti-right", AntiSym => "Anti-sym",
    BAs1 => "BAs1", BAs2 => "BAs2", BAs3 => "BAs3",
    BAs4 => "BAs4", BAs5 => "BAs5", BAs6 => "BAs6",
    BLie1 => "BLie1", BLie2 => "BLie2", BLie3 => "BLie3",
    BLie4 => "BLie4", BLie5 => "BLie5", BLie6 => "BLie6",
    RTLie3 => "RTLie3-anti", RTLie4 => "RTLie4",
    XGrAct => "XGr-act", XGrHom => "XGr-hom",
    XGr1 => "XGr1", XGr2 => "XGr2",
    BGr1 => "BGr1", BGr2 => "BGr2", BGr3 => "BGr3",
    BGr4 => "BGr4", BGr5 => "BGr5", BGr6 => "BGr6",
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A basis tuple where an identity fails, with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub basis_tuple: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub subject: String,
    pub tag: Axiom,
    pub status: Status,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: String,
    pub entries: Vec<Entry>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport { subject: subject.into(), entries: Vec::new() }
    }

    /// Record an entry for the report's own subject.
    pub fn record(&mut self, tag: Axiom, witness: Option<Witness>) {
        let subject = self.subject.clone();
        self.record_for(subject, tag, witness);
    }

    pub fn record_for(&mut self, subject: impl Into<String>, tag: Axiom, witness: Option<Witness>) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.entries.push(Entry { subject: subject.into(), tag, status, witness });
    }

    /// Sweep `dims`-shaped basis tuples and record the first violation of `lhs == rhs`.
    pub fn check(&mut self, tag: Axiom, dims: &[usize], eval: impl FnMut(&[usize]) -> (Vector, Vector)) {
        let w = find_witness(dims, eval);
        self.record(tag, w);
    }

    /// Append another report's entries, keeping their subjects.
    pub fn extend(&mut self, other: ValidationReport) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn entry(&self, tag: Axiom) -> Option<&Entry> {
        self.entries.iter().find(|e| e.tag == tag)
    }

    /// `Some(true)` if every entry with this tag passed, `None` if absent.
    pub fn status(&self, tag: Axiom) -> Option<bool> {
        let mut found = None;
        for e in self.entries.iter().filter(|e| e.tag == tag) {
            let ok = e.status == Status::Pass;
            found = Some(found.unwrap_or(true) && ok);
        }
        found
    }

    pub fn passes(&self, tag: Axiom) -> bool {
        self.status(tag) == Some(true)
    }

    pub fn fails(&self, tag: Axiom) -> bool {
        self.status(tag) == Some(false)
    }

    pub fn failing(&self) -> Vec<Axiom> {
        self.entries.iter().filter(|e| e.status == Status::Fail).map(|e| e.tag).collect()
    }

    pub fn tags(&self) -> Vec<Axiom> {
        self.entries.iter().map(|e| e.tag).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            write!(f, "{:<12} {:<12} {}", e.subject, e.tag.as_str(), status)?;
            if let Some(w) = &e.witness {
                write!(f, "  at {:?}: lhs = ({}) rhs = ({})", w.basis_tuple, w.lhs.join(", "), w.rhs.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Visit every tuple in `0..dims[0] × 0..dims[1] × ...` in lexicographic order,
/// stopping when `visit` returns `true`.
pub fn for_each_tuple(dims: &[usize], mut visit: impl FnMut(&[usize]) -> bool) {
    if dims.contains(&0) {
        return;
    }
    let mut idx = vec![0; dims.len()];
    loop {
        if visit(&idx) {
            return;
        }
        let mut pos = dims.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dims[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// First basis tuple where the two evaluated sides differ.
pub fn find_witness(dims: &[usize], mut eval: impl FnMut(&[usize]) -> (Vector, Vector)) -> Option<Witness> {
    let mut found = None;
    for_each_tuple(dims, |t| {
        let (lhs, rhs) = eval(t);
        if lhs != rhs {
            found = Some(Witness { basis_tuple: t.to_vec(), lhs: lhs.to_strings(), rhs: rhs.to_strings() });
            true
        } else {
            false
        }
    });
    found
}

/// Like [`find_witness`] for identities whose sides are not vectors (group elements).
pub fn find_witness_by<T: PartialEq + ToString>(
    dims: &[usize],
    mut eval: impl FnMut(&[usize]) -> (T, T),
) -> Option<Witness> {
    let mut found = None;
    for_each_tuple(dims, |t| {
        let (lhs, rhs) = eval(t);
        if lhs != rhs {
            found = Some(Witness { basis_tuple: t.to_vec(), lhs: vec![lhs.to_string()], rhs: vec![rhs.to_string()] });
            true
        } else {
            false
        }
    });
    found
}
